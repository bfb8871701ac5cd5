//! End-to-end acceptance run. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact; the only pinned tolerance
//! is the wall-clock budget of the first sweep.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zagreb_core::constructors::{complete_bipartite, complete_graph, path_graph};
use zagreb_core::graph::{enumerate_labeled, graph_from_mask, pair_count, MAX_ENUMERATION_ORDER};
use zagreb_core::inequalities::{equality_instance, polya_szego_check, PolyaSzegoInstance};
use zagreb_core::invariants::{independence_number, zagreb_m1};
use zagreb_core::theorems::{
    check_theorem1, check_theorem2, check_theorem3, find_equality_certificate, lemma4_moon_moser_with_parts,
    lemma5_jackson, t1_rhs, t2_rhs, t3_bound, CertificateBranch, Exception,
};
use zagreb_core::{graph6, ExactRational, Graph, VertexSet};
use zagreb_harness::{run_sweep, Check, CorpusSource, SweepOptions, SweepReport};

/// Wall-clock budget for the Hamiltonicity sweep.
const T1_SWEEP_BUDGET: Duration = Duration::from_secs(600);
/// Connected labeled graphs on 0..=7 vertices.
const CONNECTED_LABELED: [u64; 8] = [1, 1, 1, 4, 38, 728, 26_704, 1_866_256];
const CONNECTED9_LINES: u64 = 261_080;
const RANDOM_INEQUALITY_INSTANCES: usize = 10_000;
const EQUALITY_TUPLES: usize = 100;
const SEED: u64 = 0x005a_6772_6562;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora")
        .join(name)
}

fn sweep(source: CorpusSource, checks: &[Check], jobs: usize) -> Result<SweepReport, String> {
    let options = SweepOptions {
        checks: checks.to_vec(),
        jobs,
        tightness: false,
    };
    run_sweep(&source, &options).map_err(|e| format!("{}: {e}", source.id()))
}

fn enumerate(n: usize, connected_only: bool) -> CorpusSource {
    CorpusSource::Enumerate { n, connected_only }
}

fn q(n: i128, d: i128) -> ExactRational {
    ExactRational::new(n, d).unwrap()
}

/// Union-find count of connected labeled graphs, independent of `Graph`.
fn count_connected_labeled(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut count = 0;
    for mask in 0u64..1 << pairs.len() {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = n;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    components -= 1;
                }
            }
        }
        count += u64::from(components == 1);
    }
    count
}

fn hamiltonicity_sweep() -> Outcome {
    let start = Instant::now();
    let mut scanned = 0;
    let mut triggered = 0;
    for (n, &known) in CONNECTED_LABELED.iter().enumerate().skip(3) {
        let report = sweep(enumerate(n, true), &[Check::T1], 1)?;
        let oracle = count_connected_labeled(n);
        ensure!(
            oracle == known,
            "n = {n}: oracle counted {oracle} connected graphs, expected {known}"
        );
        ensure!(
            report.graphs_scanned == oracle,
            "n = {n}: scanned {} of {oracle}",
            report.graphs_scanned
        );
        ensure!(
            report.passed(),
            "n = {n}: {} inconsistent verdicts",
            report.total_violations()
        );
        scanned += report.graphs_scanned;
        triggered += report.per_check[&Check::T1].condition_met;
    }
    for file in ["connected8.g6", "connected9.g6"] {
        let report = sweep(CorpusSource::File(corpus(file)), &[Check::T1], 1)?;
        ensure!(
            report.passed(),
            "{file}: {} inconsistent verdicts",
            report.total_violations()
        );
        scanned += report.graphs_scanned;
        triggered += report.per_check[&Check::T1].condition_met;
    }
    let elapsed = start.elapsed();
    ensure!(
        elapsed <= T1_SWEEP_BUDGET,
        "took {elapsed:?}, budget {T1_SWEEP_BUDGET:?}"
    );
    Ok(format!(
        "{scanned} graphs, {triggered} meet the condition, 0 inconsistent, n = 7 count {} (oracle), {:.1}s",
        CONNECTED_LABELED[7],
        elapsed.as_secs_f64()
    ))
}

fn hamiltonicity_boundary() -> Outcome {
    for k in 2..=5 {
        let g = complete_bipartite(k, k + 1).unwrap();
        let v = check_theorem1(&g).map_err(|e| e.to_string())?;
        let rhs = v.rhs.ok_or("no threshold reported")?;
        let expected = t1_rhs(
            (2 * k + 1) as u64,
            k as u64,
            (k * (k + 1)) as u64,
            k as u64,
            (k + 1) as u64,
        )
        .map_err(|e| e.to_string())?;
        ensure!(
            v.condition_met && v.k_used == Some(k),
            "K_{{{k},{}}}: condition not met at k",
            k + 1
        );
        // M1 = p/q exactly, i.e. M1·q = p.
        ensure!(
            rhs == expected && (v.lhs_m1 as i128) * rhs.denom() == rhs.numer(),
            "K_{{{k},{}}}: M1 = {} but threshold {rhs}",
            k + 1,
            v.lhs_m1
        );
        ensure!(!v.conclusion_holds, "K_{{{k},{}}} reported Hamiltonian", k + 1);
        ensure!(
            v.exception == Some(Exception::BalancedPlusOne { k }),
            "exception {:?}",
            v.exception
        );
        ensure!(v.consistent, "K_{{{k},{}}} inconsistent", k + 1);
    }
    let k23 = check_theorem1(&complete_bipartite(2, 3).unwrap()).map_err(|e| e.to_string())?;
    ensure!(
        k23.lhs_m1 == 30 && k23.rhs == Some(q(30, 1)),
        "K_{{2,3}}: {} vs {:?}",
        k23.lhs_m1,
        k23.rhs
    );
    Ok("K_{k,k+1}, k = 2..5: equality, non-Hamiltonian, exception matched; K_{2,3}: 30 = 30".into())
}

fn traceability() -> Outcome {
    let report = sweep(CorpusSource::File(corpus("connected9.g6")), &[Check::T2], 1)?;
    ensure!(
        report.graphs_scanned == CONNECTED9_LINES,
        "scanned {}",
        report.graphs_scanned
    );
    ensure!(
        report.passed(),
        "{} inconsistent verdicts",
        report.total_violations()
    );
    for k in 4..=6 {
        let g = complete_bipartite(k, k + 2).unwrap();
        let v = check_theorem2(&g).map_err(|e| e.to_string())?;
        let rhs = v.rhs.ok_or("no threshold reported")?;
        let expected = t2_rhs(
            (2 * k + 2) as u64,
            k as u64,
            (k * (k + 2)) as u64,
            k as u64,
            (k + 2) as u64,
        )
        .map_err(|e| e.to_string())?;
        ensure!(
            v.condition_met && v.k_used == Some(k),
            "K_{{{k},{}}}: condition not met at k",
            k + 2
        );
        ensure!(
            rhs == expected && (v.lhs_m1 as i128) * rhs.denom() == rhs.numer(),
            "K_{{{k},{}}}: M1 = {} but threshold {rhs}",
            k + 2,
            v.lhs_m1
        );
        ensure!(
            !v.conclusion_holds && v.consistent,
            "K_{{{k},{}}} verdict {v:?}",
            k + 2
        );
        ensure!(
            v.exception == Some(Exception::BalancedPlusTwo { k }),
            "exception {:?}",
            v.exception
        );
    }
    let k46 = check_theorem2(&complete_bipartite(4, 6).unwrap()).map_err(|e| e.to_string())?;
    ensure!(
        k46.lhs_m1 == 240 && k46.rhs == Some(q(240, 1)),
        "K_{{4,6}}: {} vs {:?}",
        k46.lhs_m1,
        k46.rhs
    );
    Ok(format!(
        "{} graphs, {} meet the condition, 0 inconsistent; K_{{k,k+2}}, k = 4..6 exact; K_{{4,6}}: 240 = 240",
        report.graphs_scanned,
        report.per_check[&Check::T2].condition_met
    ))
}

#[derive(Default)]
struct BoundTally {
    graphs: u64,
    equal: u64,
    complete_branch: u64,
    pq_branch: u64,
}

/// Recomputes the bound and the certificate from scratch and requires
/// `M1 ≤ bound` and `M1 = bound ⇔ certificate`.
fn tally_bound(g: &Graph, tally: &mut BoundTally) -> Result<(), String> {
    let p = g.degree_profile();
    if p.min_degree == 0 {
        return Ok(());
    }
    let n = g.order();
    let beta = independence_number(g);
    let bound = t3_bound(
        n as u64,
        p.edges as u64,
        p.min_degree as u64,
        p.max_degree as u64,
        beta as u64,
    )
    .map_err(|e| format!("{}: {e}", graph6::encode(g).unwrap()))?;
    let lhs = zagreb_m1(g) as i128;
    let cmp = (lhs * bound.denom()).cmp(&bound.numer());
    let witness = || graph6::encode(g).unwrap();
    ensure!(cmp.is_le(), "{}: M1 = {lhs} exceeds {bound}", witness());
    let cert = find_equality_certificate(g, beta).filter(|c| c.all_checks_pass());
    ensure!(
        cmp.is_eq() == cert.is_some(),
        "{}: equality {} but certificate {:?}",
        witness(),
        cmp.is_eq(),
        cert
    );
    let verdict = check_theorem3(g).map_err(|e| e.to_string())?;
    ensure!(
        verdict.consistent && verdict.condition_met == cmp.is_eq(),
        "{}: verdict disagrees",
        witness()
    );
    tally.graphs += 1;
    if let Some(c) = cert {
        tally.equal += 1;
        match c.branch {
            CertificateBranch::CompleteBipartite => tally.complete_branch += 1,
            CertificateBranch::PqFamily => tally.pq_branch += 1,
        }
    }
    Ok(())
}

fn upper_bound() -> Outcome {
    let mut tally = BoundTally::default();
    for n in 2..=MAX_ENUMERATION_ORDER {
        for g in enumerate_labeled(n, false).unwrap() {
            tally_bound(&g, &mut tally)?;
        }
    }
    let text = std::fs::read_to_string(corpus("graphs8.g6")).map_err(|e| e.to_string())?;
    for line in text.lines() {
        tally_bound(&graph6::decode(line).map_err(|e| e.to_string())?, &mut tally)?;
    }
    ensure!(
        tally.complete_branch > 0 && tally.pq_branch > 0,
        "a branch never occurred"
    );

    let v = check_theorem3(&path_graph(5).unwrap()).map_err(|e| e.to_string())?;
    let cert = v.certificate.ok_or("P_5 has no certificate")?;
    ensure!(
        v.lhs_m1 == 14 && v.rhs == Some(q(14, 1)) && cert.branch == CertificateBranch::PqFamily,
        "P_5: M1 = {}, bound {:?}, branch {:?}",
        v.lhs_m1,
        v.rhs,
        cert.branch
    );
    ensure!(
        (cert.p_size, cert.q_size) == (1, 2),
        "P_5: |P| = {}, |Q| = {}",
        cert.p_size,
        cert.q_size
    );

    let mut complete = 0;
    for beta in 1..=6 {
        for other in 1..=beta {
            let v = check_theorem3(&complete_bipartite(other, beta).unwrap()).map_err(|e| e.to_string())?;
            let branch = v.certificate.as_ref().map(|c| c.branch);
            ensure!(
                v.condition_met && v.consistent && branch == Some(CertificateBranch::CompleteBipartite),
                "K_{{{beta},{other}}}: M1 = {}, bound {:?}, branch {branch:?}",
                v.lhs_m1,
                v.rhs
            );
            complete += 1;
        }
    }
    Ok(format!(
        "{} graphs with δ ≥ 1, {} attain the bound ({} complete bipartite, {} P/Q), all certified; \
         P_5: 14 = 14 with |P| = 1, |Q| = 2; {complete} K_{{β,n−β}} equalities",
        tally.graphs, tally.equal, tally.complete_branch, tally.pq_branch
    ))
}

fn random_box(rng: &mut ChaCha8Rng) -> (ExactRational, ExactRational) {
    let mut draw = || {
        q(
            1 + (rng.next_u32() % 40) as i128,
            1 + (rng.next_u32() % 6) as i128,
        )
    };
    let (x, y) = (draw(), draw());
    (x.min(y), x.max(y))
}

fn random_inside(rng: &mut ChaCha8Rng, lo: ExactRational, hi: ExactRational) -> ExactRational {
    // lo + (hi − lo)·j/12
    let j = q((rng.next_u32() % 13) as i128, 12);
    lo.checked_add(hi.checked_sub(lo).unwrap().checked_mul(j).unwrap())
        .unwrap()
}

fn sum_of_squares(xs: &[ExactRational]) -> ExactRational {
    xs.iter().fold(ExactRational::ZERO, |acc, x| {
        acc.checked_add(x.square().unwrap()).unwrap()
    })
}

fn integer_tuples() -> impl Iterator<Item = [i128; 5]> {
    (1..=6i128).flat_map(|lo_a| {
        (lo_a..=6).flat_map(move |hi_a| {
            (1..=6i128).flat_map(move |lo_b| {
                (lo_b..=6).flat_map(move |hi_b| (1..=8i128).map(move |s| [lo_a, hi_a, lo_b, hi_b, s]))
            })
        })
    })
}

fn polya_szego() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut equalities = 0;
    for i in 0..RANDOM_INEQUALITY_INSTANCES {
        let (lower_a, upper_a) = random_box(&mut rng);
        let (lower_b, upper_b) = random_box(&mut rng);
        let len = 1 + (rng.next_u32() % 10) as usize;
        let a: Vec<_> = (0..len)
            .map(|_| random_inside(&mut rng, lower_a, upper_a))
            .collect();
        let b: Vec<_> = (0..len)
            .map(|_| random_inside(&mut rng, lower_b, upper_b))
            .collect();
        let lhs = sum_of_squares(&a).checked_mul(sum_of_squares(&b)).unwrap();
        let inst = PolyaSzegoInstance {
            a,
            b,
            lower_a,
            upper_a,
            lower_b,
            upper_b,
        };
        let report = polya_szego_check(&inst).map_err(|e| format!("instance {i}: {e}"))?;
        ensure!(
            report.lhs == lhs,
            "instance {i}: lhs {} but recomputed {lhs}",
            report.lhs
        );
        ensure!(
            report.holds && report.lhs <= report.rhs,
            "instance {i} violates: {inst:?}"
        );
        equalities += u64::from(report.equality);
    }

    let mut tuples = 0;
    for [lo_a, hi_a, lo_b, hi_b, s] in integer_tuples() {
        if tuples == EQUALITY_TUPLES {
            break;
        }
        let (lower_a, upper_a, lower_b, upper_b) = (q(lo_a, 1), q(hi_a, 1), q(lo_b, 1), q(hi_b, 1));
        if hi_a * hi_b == lo_a * lo_b {
            continue;
        }
        let Ok(inst) = equality_instance(lower_a, upper_a, lower_b, upper_b, s as usize) else {
            continue;
        };
        let tag = format!("({lo_a}, {hi_a}, {lo_b}, {hi_b}, s = {s})");
        let report = polya_szego_check(&inst).map_err(|e| format!("{tag}: {e}"))?;
        ensure!(report.equality && report.extremal_pattern, "{tag}: no equality");
        for idx in 0..inst.len() {
            let mut bumped = inst.clone();
            if lo_a < hi_a {
                bumped.a[idx] = q(lo_a + hi_a, 2);
            } else {
                bumped.b[idx] = q(lo_b + hi_b, 2);
            }
            let r = polya_szego_check(&bumped).map_err(|e| format!("{tag}: {e}"))?;
            ensure!(
                r.holds && !r.equality,
                "{tag}: perturbing entry {idx} kept equality"
            );
        }
        tuples += 1;
    }
    ensure!(tuples == EQUALITY_TUPLES, "only {tuples} tuples with integral ν");

    let one_two = vec![q(1, 1), q(1, 1), q(2, 1), q(2, 1)];
    let two_one: Vec<_> = one_two.iter().rev().copied().collect();
    let (one, two) = (q(1, 1), q(2, 1));
    let inst = PolyaSzegoInstance {
        a: one_two,
        b: two_one,
        lower_a: one,
        upper_a: two,
        lower_b: one,
        upper_b: two,
    };
    let r = polya_szego_check(&inst).map_err(|e| e.to_string())?;
    ensure!(
        r.lhs == q(100, 1) && r.rhs == q(100, 1) && r.equality,
        "lhs {} rhs {}",
        r.lhs,
        r.rhs
    );
    Ok(format!(
        "{RANDOM_INEQUALITY_INSTANCES} random instances hold ({equalities} with equality); \
         {tuples} equality tuples exact and broken by every interior perturbation; 100 = 100"
    ))
}

/// Balanced bipartite graph on `{0..h} ∪ {h..2h}` with biadjacency bits `mask`.
fn balanced_bipartite(h: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(2 * h).unwrap();
    for i in 0..h {
        for j in 0..h {
            if mask >> (i * h + j) & 1 == 1 {
                g.add_edge(i, h + j).unwrap();
            }
        }
    }
    g
}

fn lemmas() -> Outcome {
    let mut ce = 0;
    for n in 1..=MAX_ENUMERATION_ORDER {
        let report = sweep(enumerate(n, true), &[Check::CeHam, Check::CeTrace], 1)?;
        ensure!(
            report.passed(),
            "Chvátal–Erdős, n = {n}: {} violations",
            report.total_violations()
        );
        ce += report.graphs_scanned;
    }

    let mut moon = 0;
    let mut moon_triggered = 0;
    for h in 1..=4 {
        let parts = (VertexSet::from_vertices(0..h), VertexSet::from_vertices(h..2 * h));
        for mask in 0u32..1 << (h * h) {
            let g = balanced_bipartite(h, mask);
            let v = lemma4_moon_moser_with_parts(&g, parts.0, parts.1).map_err(|e| e.to_string())?;
            ensure!(
                v.consistent,
                "Moon–Moser, h = {h}: {}",
                graph6::encode(&g).unwrap()
            );
            moon += 1;
            moon_triggered += u64::from(v.condition);
        }
    }

    let mut sources: Vec<CorpusSource> = (3..=MAX_ENUMERATION_ORDER).map(|n| enumerate(n, true)).collect();
    for file in ["connected8.g6", "connected9.g6"] {
        sources.push(CorpusSource::File(corpus(file)));
    }
    let mut jackson = 0;
    for file in [
        "bipartite_2conn10.g6",
        "bipartite_2conn11.g6",
        "bipartite_2conn12.g6",
    ] {
        let report = sweep(CorpusSource::File(corpus(file)), &[Check::Jackson], 1)?;
        let applicable = report.per_check[&Check::Jackson].applicable;
        ensure!(
            applicable == report.graphs_scanned,
            "{file}: {applicable} of {} applicable",
            report.graphs_scanned
        );
        ensure!(
            report.passed(),
            "Jackson, {file}: {} violations",
            report.total_violations()
        );
        jackson += applicable;
    }
    for source in sources {
        let report = sweep(source, &[Check::Jackson], 1)?;
        ensure!(
            report.passed(),
            "Jackson, {}: {} violations",
            report.corpus_id,
            report.total_violations()
        );
        jackson += report.per_check[&Check::Jackson].applicable;
    }

    let k23 = lemma5_jackson(&complete_bipartite(2, 3).unwrap()).map_err(|e| e.to_string())?;
    ensure!(
        k23.promised_length == 4 && k23.actual == 4,
        "K_{{2,3}}: promise {}, actual {}",
        k23.promised_length,
        k23.actual
    );
    Ok(format!(
        "Chvátal–Erdős on {ce} connected graphs; Moon–Moser on {moon} balanced bipartite graphs \
         ({moon_triggered} meet the condition); Jackson on {jackson} 2-connected bipartite graphs; K_{{2,3}}: 4 = 4"
    ))
}

fn codec() -> Outcome {
    let mut enumerated = 0;
    for n in 1..=MAX_ENUMERATION_ORDER {
        for mask in 0u64..1 << pair_count(n) {
            let g = graph_from_mask(n, mask);
            let text = graph6::encode(&g).map_err(|e| e.to_string())?;
            ensure!(
                graph6::decode(&text).as_ref() == Ok(&g),
                "n = {n}, mask {mask}: {text}"
            );
            enumerated += 1;
        }
    }
    let mut lines = 0;
    for file in [
        "graphs8.g6",
        "connected8.g6",
        "connected9.g6",
        "bipartite_2conn10.g6",
        "bipartite_2conn11.g6",
        "bipartite_2conn12.g6",
    ] {
        let text = std::fs::read_to_string(corpus(file)).map_err(|e| e.to_string())?;
        for (i, line) in text.lines().enumerate() {
            let g = graph6::decode(line).map_err(|e| format!("{file}:{}: {e}", i + 1))?;
            let again = graph6::encode(&g).map_err(|e| e.to_string())?;
            ensure!(again == line, "{file}:{}: {line} re-encodes as {again}", i + 1);
            lines += 1;
        }
    }
    ensure!(
        graph6::decode("C~") == Ok(complete_graph(4).unwrap()),
        "C~ is not K_4"
    );
    ensure!(
        graph6::encode(&complete_graph(4).unwrap()).as_deref() == Ok("C~"),
        "K_4 is not C~"
    );
    ensure!(
        graph6::decode("@") == Ok(Graph::empty(1).unwrap()),
        "@ is not K_1"
    );
    ensure!(
        graph6::encode(&Graph::empty(1).unwrap()).as_deref() == Ok("@"),
        "K_1 is not @"
    );
    Ok(format!(
        "{enumerated} enumerated graphs and {lines} corpus lines round-trip; C~ = K_4, @ = K_1"
    ))
}

fn determinism() -> Outcome {
    let runs = [
        (CorpusSource::File(corpus("connected8.g6")), Check::ALL.to_vec()),
        (enumerate(6, false), Check::ALL.to_vec()),
    ];
    for (source, checks) in runs {
        let render = |jobs| -> Result<String, String> {
            let options = SweepOptions {
                checks: checks.clone(),
                jobs,
                tightness: true,
            };
            let r = run_sweep(&source, &options).map_err(|e| e.to_string())?;
            Ok(format!(
                "{}{}{}",
                r.render_text(),
                r.render_csv(),
                r.render_tightness_csv()
            ))
        };
        let (one, eight) = (render(1)?, render(8)?);
        ensure!(
            one == eight,
            "{}: reports differ between 1 and 8 workers",
            source.id()
        );
    }
    Ok("connected8.g6 and n = 6 enumeration, all checks: 1 and 8 workers byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("hamiltonicity sweep", hamiltonicity_sweep),
        ("hamiltonicity boundary", hamiltonicity_boundary),
        ("traceability sweep and boundary", traceability),
        ("M1 upper bound and equality", upper_bound),
        ("Pólya–Szegő", polya_szego),
        ("lemma suite", lemmas),
        ("graph6 codec", codec),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|payload| {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
