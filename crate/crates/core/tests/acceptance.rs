//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any fails. Pass criterion numbers as arguments to run a subset.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use star_edge::constructions::{
    behrend_set_of_size, color_kn, color_kn_recursive, color_kn_sum, compose_star_coloring,
    ComposeOptions, KnMethod,
};
use star_edge::counting::{check_counting_identities, counting_certificate, kn_lower_bound};
use star_edge::cubic::{
    cubic_seven_coloring, derive_q3_cover, find_cover, lift_coloring, reference_cube_coloring,
    voltage_lift,
};
use star_edge::solver::{star_chromatic_index, star_decision, SolveBudget, SolveStatus};
use star_edge::verify::verify_star;
use star_edge::{named, EdgeColoring, Graph};

const NAMED_VALUE_CAP: Duration = Duration::from_secs(60);
const HEAWOOD_CAP: Duration = Duration::from_secs(30 * 60);
const BEHREND_CAP: Duration = Duration::from_secs(60);
const BEHREND_SIZES: [usize; 4] = [10, 20, 50, 100];
/// `span / n` must stay strictly below this for the sizes above.
const BEHREND_SPAN_RATIO: f64 = 25.0;
const COUNTING_CAP: Duration = Duration::from_secs(10 * 60);
const COUNTING_EXACT_MAX_N: usize = 6;
const COUNTING_IDENTITY_MAX_N: usize = 8;
const COMPOSE_CAP: Duration = Duration::from_secs(5 * 60);
const COMPOSE_CASES: u64 = 200;
const COMPOSE_MAX_N: usize = 60;
const COMPOSE_MAX_DEGREE: usize = 8;
const CUBIC_CAP: Duration = Duration::from_secs(30 * 60);
const CENSUS_COUNTS: [(usize, usize); 5] = [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)];
const PROPERTY_CAP: Duration = Duration::from_secs(10 * 60);
const LEMMA_RANDOM_CASES: u64 = 1000;
const LEMMA_RANDOM_N: usize = 10;
const ORACLE_MAX_EDGES: usize = 7;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, cap: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= cap, || format!("{what} took {t:?}, cap {cap:?}"))
}

fn star_index(g: &Graph, what: &str) -> Result<usize, String> {
    let start = Instant::now();
    let r = star_chromatic_index(g, SolveBudget::time(NAMED_VALUE_CAP)).map_err(|b| {
        format!(
            "{what}: budget ran out with bracket {}..={}",
            b.lower, b.upper
        )
    })?;
    within(start, NAMED_VALUE_CAP, what)?;
    let witness = &r.coloring;
    ensure(verify_star(g, witness).unwrap().is_pass(), || {
        format!("{what}: witness fails")
    })?;
    Ok(r.value)
}

fn named_values() -> Outcome {
    let expect = [
        ("Q_3", named::cube(), 4),
        ("Petersen", named::petersen(), 5),
        ("K_{3,3}", named::complete_bipartite(3, 3), 6),
    ];
    for (name, g, want) in expect {
        let got = star_index(&g, name)?;
        ensure(got == want, || {
            format!("{name}: got {got}, expected {want}")
        })?;
    }
    let start = Instant::now();
    let heawood = star_decision(&named::heawood(), 6, SolveBudget::time(HEAWOOD_CAP)).unwrap();
    within(start, HEAWOOD_CAP, "Heawood at 6")?;
    ensure(heawood.status == SolveStatus::Feasible, || {
        format!("Heawood at 6: {:?}", heawood.status)
    })?;
    for k in 3..=12 {
        let got = star_index(&named::cycle(k), &format!("C_{k}"))?;
        let want = if k == 5 { 4 } else { 3 };
        ensure(got == want, || format!("C_{k}: got {got}, expected {want}"))?;
    }
    Ok("Q_3=4, Petersen=5, K_{3,3}=6, Heawood<=6, C_5=4, C_k=3 otherwise".into())
}

fn behrend_sum_coloring() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in BEHREND_SIZES {
        let a = behrend_set_of_size(n);
        ensure(a.len() == n, || {
            format!("n={n}: set has {} elements", a.len())
        })?;
        let s = color_kn_sum(&a);
        ensure(
            verify_star(&s.graph, &s.coloring).unwrap().is_pass(),
            || format!("n={n}: sum coloring is not star"),
        )?;
        let palette = s.coloring.palette_size() as u64;
        ensure(palette <= 2 * a.span(), || {
            format!("n={n}: palette {palette} > 2 * span {}", a.span())
        })?;
        let ratio = a.span() as f64 / n as f64;
        ensure(ratio < BEHREND_SPAN_RATIO, || {
            format!("n={n}: span/n = {ratio:.2}")
        })?;
        worst = worst.max(ratio);
    }
    within(start, BEHREND_CAP, "Behrend sweep")?;
    Ok(format!("n in {BEHREND_SIZES:?}, worst span/n {worst:.2}"))
}

fn counting_bound() -> Outcome {
    let start = Instant::now();
    let mut colorings: Vec<(String, Graph, EdgeColoring)> = Vec::new();
    let mut values = Vec::new();
    for n in 1..=COUNTING_EXACT_MAX_N {
        let g = named::complete(n);
        let r = star_chromatic_index(&g, SolveBudget::time(COUNTING_CAP))
            .map_err(|b| format!("K_{n}: bracket {}..={}", b.lower, b.upper))?;
        let lb = kn_lower_bound(n as u64) as usize;
        ensure(lb <= r.value, || {
            format!("K_{n}: lower bound {lb} > index {}", r.value)
        })?;
        values.push(format!("K_{n}:{lb}<={}", r.value));
        colorings.push((format!("exact K_{n}"), g, r.coloring));
    }
    for n in 2..=COUNTING_IDENTITY_MAX_N {
        let (g, sum) = color_kn(n, KnMethod::Sum).unwrap();
        let rec = color_kn_recursive(n, KnMethod::Sum).unwrap();
        let solved =
            star_decision(&g, sum.palette_size(), SolveBudget::time(COUNTING_CAP)).unwrap();
        colorings.push((format!("sum K_{n}"), g.clone(), sum));
        colorings.push((format!("recursive K_{n}"), rec.graph, rec.coloring));
        if let Some(c) = solved.coloring {
            colorings.push((format!("solver K_{n}"), g, c));
        }
    }
    for (what, g, c) in &colorings {
        let cert = counting_certificate(g, c).map_err(|e| format!("{what}: {e}"))?;
        let report = check_counting_identities(&cert);
        ensure(report.all_passed(), || {
            let fails: Vec<String> = report.failures().map(|f| f.to_string()).collect();
            format!("{what}: {}", fails.join("; "))
        })?;
    }
    within(start, COUNTING_CAP, "counting suite")?;
    Ok(format!(
        "{}; identities hold on {} colorings",
        values.join(" "),
        colorings.len()
    ))
}

fn compose() -> Outcome {
    let start = Instant::now();
    let mut max_palette = 0;
    for seed in 0..COMPOSE_CASES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=COMPOSE_MAX_N);
        let d = rng.gen_range(1..=COMPOSE_MAX_DEGREE);
        let g = common::random_bounded_degree_graph(&mut rng, n, d);
        let p = compose_star_coloring(&g, ComposeOptions::default()).unwrap();
        ensure(verify_star(&g, &p.flattened).unwrap().is_pass(), || {
            format!("seed {seed}: product coloring is not star")
        })?;
        let beta = p.frugal.beta.max(1);
        let bound = p.outer_palette() * (2 * beta * (beta - 1) + 1);
        let palette = p.flattened.palette_size();
        ensure(palette <= bound, || {
            format!("seed {seed}: palette {palette} > bound {bound}")
        })?;
        max_palette = max_palette.max(palette);
    }
    within(start, COMPOSE_CAP, "compose sweep")?;
    Ok(format!(
        "{COMPOSE_CASES} graphs, largest palette {max_palette}"
    ))
}

fn census_checked() -> Result<Vec<Graph>, String> {
    let graphs = common::census();
    for (n, want) in CENSUS_COUNTS {
        let got = graphs.iter().filter(|g| g.n() == n).count();
        ensure(got == want, || {
            format!("census has {got} graphs on {n} vertices, expected {want}")
        })?;
    }
    ensure(
        graphs.iter().all(|g| g.is_cubic() && g.is_connected()),
        || "census member not connected cubic".into(),
    )?;
    Ok(graphs)
}

fn cubic_seven() -> Outcome {
    let start = Instant::now();
    let graphs = census_checked()?;
    let mut histogram = [0usize; 8];
    for g in &graphs {
        let c = cubic_seven_coloring(g)
            .map_err(|e| format!("{}: {e}", star_edge::format::to_graph6(g)))?;
        let palette = c.palette_size();
        ensure(
            palette <= 7 && verify_star(g, &c).unwrap().is_pass(),
            || format!("{}: bad 7-coloring", star_edge::format::to_graph6(g)),
        )?;
        histogram[palette] += 1;
    }
    within(start, CUBIC_CAP, "census 7-coloring")?;
    Ok(format!(
        "{} graphs, palette histogram 4..=7: {:?}",
        graphs.len(),
        &histogram[4..]
    ))
}

fn cover_equivalence() -> Outcome {
    let start = Instant::now();
    let graphs = census_checked()?;
    let (q, qc) = reference_cube_coloring();
    let mut four = 0;
    for g in &graphs {
        let outcome = star_decision(g, 4, SolveBudget::time(CUBIC_CAP)).unwrap();
        ensure(outcome.status != SolveStatus::ExhaustedBudget, || {
            "solver budget ran out".into()
        })?;
        let cover = find_cover(g, &q);
        let g6 = star_edge::format::to_graph6(g);
        ensure(outcome.is_feasible() == cover.is_some(), || {
            format!(
                "{g6}: 4-colorable {} but cover {}",
                outcome.is_feasible(),
                cover.is_some()
            )
        })?;
        if let Some(c) = outcome.coloring {
            four += 1;
            let m = derive_q3_cover(g, &c).map_err(|e| format!("{g6}: {e}"))?;
            let lifted = lift_coloring(&m, &qc).unwrap();
            ensure(verify_star(g, &lifted).unwrap().is_pass(), || {
                format!("{g6}: lift not star")
            })?;
        }
    }
    let lift = voltage_lift(&q, &[0, 7]).unwrap();
    let g = lift.source();
    ensure(g.n() == 16 && g.is_connected(), || {
        "2-lift is not a connected 16-vertex graph".into()
    })?;
    let lc = lift_coloring(&lift, &qc).unwrap();
    ensure(verify_star(g, &lc).unwrap().is_pass(), || {
        "lifted coloring is not star".into()
    })?;
    let derived = derive_q3_cover(g, &lc).map_err(|e| e.to_string())?;
    let round = lift_coloring(&derived, &qc).unwrap();
    ensure(verify_star(g, &round).unwrap().is_pass(), || {
        "round trip is not star".into()
    })?;
    ensure(find_cover(g, &q).is_some(), || {
        "no cover found for the 2-lift".into()
    })?;
    within(start, CUBIC_CAP, "cover equivalence")?;
    Ok(format!(
        "{} graphs, {four} star 4-colorable, no discrepancies; 2-lift round trip ok",
        graphs.len()
    ))
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let small = common::data_graphs("upto6.g6");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut extensions = 0;
    let mut glued = 0;
    for g in &small {
        extensions += common::check_extension_lemma(&mut rng, g, 4);
        for mask in 0u32..1 << g.n() {
            let in_a: Vec<bool> = (0..g.n()).map(|v| mask >> v & 1 == 1).collect();
            glued += common::check_glue_lemma(&mut rng, g, &in_a) as usize;
        }
    }
    let mut random_glued = 0;
    for seed in 0..LEMMA_RANDOM_CASES {
        let mut rng = ChaCha8Rng::seed_from_u64(1_000_000 + seed);
        let p = rng.gen_range(0.15..0.5);
        let g = common::random_graph(&mut rng, LEMMA_RANDOM_N, p);
        extensions += common::check_extension_lemma(&mut rng, &g, 1);
        let in_a: Vec<bool> = (0..LEMMA_RANDOM_N).map(|_| rng.gen_bool(0.5)).collect();
        random_glued += common::check_glue_lemma(&mut rng, &g, &in_a) as usize;
    }
    ensure(extensions > 0 && glued > 0 && random_glued > 0, || {
        "a lemma check was vacuous".into()
    })?;

    let mut oracle_cases = 0;
    for g in common::data_graphs("small_edges.g6") {
        ensure(g.m() <= ORACLE_MAX_EDGES, || {
            "fixture graph too large".into()
        })?;
        for colors in common::set_partitions(g.m()) {
            let c = EdgeColoring::from_colors(colors);
            let fast = verify_star(&g, &c).unwrap().is_pass();
            ensure(fast == common::naive_is_star(&g, c.as_slice()), || {
                format!(
                    "verifier disagrees with oracle on {:?} colored {:?}",
                    g.edges(),
                    c.as_slice()
                )
            })?;
            oracle_cases += 1;
        }
    }
    within(start, PROPERTY_CAP, "property suites")?;
    Ok(format!(
        "{extensions} extensions, {glued}+{random_glued} passing glues, {oracle_cases} oracle comparisons"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("named values by exact search", named_values),
        ("sum coloring over Behrend sets", behrend_sum_coloring),
        ("counting lower bound and identities", counting_bound),
        ("frugal product coloring", compose),
        ("7-colorings of the cubic census", cubic_seven),
        ("4-colorability equals covering Q_3", cover_equivalence),
        ("lemma and verifier property suites", property_suites),
    ];
    let selected: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(msg)
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {id} PASS {title}: {detail} ({t:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL {title}: {why} ({t:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
