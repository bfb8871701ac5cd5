use std::fmt;
use std::str::FromStr;

use zagreb_core::graph6;
use zagreb_core::inequalities::degree_sandwich;
use zagreb_core::invariants::CIRCUMFERENCE_MAX_ORDER;
use zagreb_core::theorems::{
    check_theorem1, check_theorem2, check_theorem3, lemma1_chvatal_erdos, lemma2_chvatal_erdos_traceable,
    lemma4_moon_moser, lemma5_jackson, LemmaVerdict,
};
use zagreb_core::{Error, Graph, VertexSet};

use crate::HarnessError;

/// Largest order for which the sandwich check walks every independent set.
pub const SANDWICH_MAX_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    T1,
    T2,
    T3,
    CeHam,
    CeTrace,
    Moon,
    Jackson,
    Sandwich,
    Roundtrip,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::T1,
        Check::T2,
        Check::T3,
        Check::CeHam,
        Check::CeTrace,
        Check::Moon,
        Check::Jackson,
        Check::Sandwich,
        Check::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::T1 => "t1",
            Check::T2 => "t2",
            Check::T3 => "t3",
            Check::CeHam => "ce_ham",
            Check::CeTrace => "ce_trace",
            Check::Moon => "moon",
            Check::Jackson => "jackson",
            Check::Sandwich => "sandwich",
            Check::Roundtrip => "roundtrip",
        }
    }

    /// Parses a comma-separated list. `ce` expands to both Chvátal–Erdős checks and `all`
    /// to every check. The result is sorted and deduplicated.
    pub fn parse_list(list: &str) -> Result<Vec<Check>, HarnessError> {
        let mut out = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "all" => out.extend(Check::ALL),
                "ce" => out.extend([Check::CeHam, Check::CeTrace]),
                other => out.push(other.parse()?),
            }
        }
        if out.is_empty() {
            return Err(HarnessError::Usage("no checks requested".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HarnessError::Usage(format!("unknown check {s:?}")))
    }
}

/// Result of one check on one graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub applicable: bool,
    pub condition_met: bool,
    pub violated: bool,
}

impl Outcome {
    const SKIPPED: Outcome = Outcome {
        applicable: false,
        condition_met: false,
        violated: false,
    };

    fn from_lemma(v: LemmaVerdict) -> Self {
        Outcome {
            applicable: v.applicable,
            condition_met: v.condition,
            violated: !v.consistent,
        }
    }
}

/// Runs `check` on `g`. Inputs outside a check's exact-search range count as not
/// applicable; any other failure is itself a violation.
pub fn evaluate(check: Check, g: &Graph) -> Outcome {
    let result: Result<Outcome, Error> = (|| {
        Ok(match check {
            Check::T1 | Check::T2 => {
                let v = if check == Check::T1 {
                    check_theorem1(g)?
                } else {
                    check_theorem2(g)?
                };
                Outcome {
                    applicable: v.applicable(),
                    condition_met: v.condition_met,
                    violated: !v.consistent,
                }
            }
            Check::T3 => match check_theorem3(g) {
                Err(Error::ZeroMinimumDegree) => Outcome::SKIPPED,
                v => {
                    let v = v?;
                    Outcome {
                        applicable: true,
                        condition_met: v.condition_met,
                        violated: !v.consistent,
                    }
                }
            },
            Check::CeHam => Outcome::from_lemma(lemma1_chvatal_erdos(g)?),
            Check::CeTrace => Outcome::from_lemma(lemma2_chvatal_erdos_traceable(g)?),
            Check::Moon => Outcome::from_lemma(lemma4_moon_moser(g)?),
            Check::Jackson => {
                if g.order() > CIRCUMFERENCE_MAX_ORDER {
                    return Ok(Outcome::SKIPPED);
                }
                let v = lemma5_jackson(g)?;
                Outcome {
                    applicable: v.applicable,
                    condition_met: v.applicable,
                    violated: !v.consistent,
                }
            }
            Check::Sandwich => sandwich(g)?,
            Check::Roundtrip => {
                let ok = graph6::encode(g)
                    .and_then(|s| graph6::decode(&s))
                    .is_ok_and(|h| &h == g);
                Outcome {
                    applicable: true,
                    condition_met: true,
                    violated: !ok,
                }
            }
        })
    })();
    match result {
        Ok(outcome) => outcome,
        Err(Error::UnsupportedOrder { .. }) => Outcome::SKIPPED,
        Err(_) => Outcome {
            applicable: true,
            condition_met: false,
            violated: true,
        },
    }
}

/// Every independent set must satisfy `lower ≤ e ≤ upper`, with both bounds tight exactly
/// when the complement is independent as well. `condition_met` marks graphs where some
/// set is tight on both sides.
fn sandwich(g: &Graph) -> Result<Outcome, Error> {
    let n = g.order();
    if n > SANDWICH_MAX_ORDER {
        return Ok(Outcome::SKIPPED);
    }
    let mut outcome = Outcome {
        applicable: true,
        ..Outcome::default()
    };
    let mut stack = vec![(VertexSet::EMPTY, g.vertices())];
    while let Some((set, cand)) = stack.pop() {
        let s = degree_sandwich(g, set)?;
        let complement_independent = g.is_independent(g.vertices().difference(set));
        if s.lower > s.edges
            || s.edges > s.upper
            || (s.tight_lower && s.tight_upper) != complement_independent
        {
            outcome.violated = true;
        }
        outcome.condition_met |= s.tight_lower && s.tight_upper;
        let mut rest = cand;
        for v in cand {
            rest.remove(v);
            let mut next = set;
            next.insert(v);
            stack.push((next, rest.difference(g.neighbors(v))));
        }
    }
    Ok(outcome)
}
