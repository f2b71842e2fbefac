//! Acceptance criteria 1-10. Each test prints one PASS/FAIL line with its runtime.

use std::time::{Duration, Instant};

use antireg_core::hypergraph::recognize_zero_one_constructable;
use antireg_core::ipoly::{
    coeff_formulas, ipoly_antiregular_recurrence, ipoly_bruteforce, ipoly_k3_closed,
    ipoly_semiclosed, ipoly_trinks, is_log_concave, k3_products, semiclosed_min_vertices,
    solve_alpha, solve_beta,
};
use antireg_core::threshold::{
    algorithm1_labels, check_label_monotonicity, t2_feasibility, verify_t2,
};
use antireg_core::{cli, BuildingString, Hypergraph, Polynomial};
use num_bigint::BigInt;
use serde_json::Value;

/// Prints the criterion line and fails the test on a miss.
fn report(id: u32, what: &str, failures: &[String], elapsed: Duration, limit: Duration) {
    let in_time = elapsed < limit;
    let pass = failures.is_empty() && in_time;
    println!(
        "criterion {id:>2}: {} - {what} ({:.2?}, limit {:?}){}",
        if pass { "PASS" } else { "FAIL" },
        elapsed,
        limit,
        if in_time { "" } else { " [too slow]" }
    );
    for f in failures.iter().take(10) {
        println!("    {f}");
    }
    assert!(pass, "criterion {id} failed: {} problems, elapsed {elapsed:.2?}", failures.len());
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn h(n: usize, k: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::uniform(n, k, edges.iter().map(|e| e.to_vec())).unwrap()
}

fn h1() -> Hypergraph {
    h(5, 3, &[&[1, 4, 5], &[2, 3, 5], &[2, 4, 5], &[3, 4, 5]])
}

fn h2() -> Hypergraph {
    h(5, 3, &[&[1, 2, 3], &[1, 3, 4], &[2, 3, 5], &[3, 4, 5]])
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("antireg").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn criterion_01_algorithm1_fidelity() {
    let start = Instant::now();
    let cases: [(&str, &[i64]); 2] = [
        ("0010100011101", &[64, 64, 96, 48, 112, 8, 12, 14, 204, 204, 204, -185, 401]),
        ("0010101010101", &[64, 64, 96, 48, 112, 8, 168, -60, 276, -222, 506, -559, 1005]),
    ];
    let mut failures = Vec::new();
    for (word, expected) in cases {
        let (code, out) = run_cli(&["label", "--string", word, "--k", "3"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        let c: Vec<String> = expected.iter().map(ToString::to_string).collect();
        if code != 0 || v["c"] != serde_json::json!(c) || v["tau"] != "223" {
            failures.push(format!("{word}: exit {code}, output {out}"));
        }
    }
    report(1, "Algorithm 1 labelings of the two 13-vertex examples", &failures, start.elapsed(), secs(1));
}

#[test]
fn criterion_02_shared_polynomial() {
    let start = Instant::now();
    let expected = Polynomial::from_i64s(&[1, 5, 10, 6, 1]);
    let mut failures = Vec::new();
    for (name, g) in [("H1", h1()), ("H2", h2())] {
        let brute = ipoly_bruteforce(&g).unwrap();
        let trinks = ipoly_trinks(&g).unwrap();
        if brute != expected || trinks != expected {
            failures.push(format!("{name}: brute {brute}, trinks {trinks}"));
        }
    }
    report(2, "H1 and H2 both give 1+5x+10x^2+6x^3+x^4", &failures, start.elapsed(), secs(1));
}

#[test]
fn criterion_03_method_agreement() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut compared = 0;
    for k in 2..=5 {
        for n in 1..=14 {
            for connected in [true, false] {
                let g = Hypergraph::build(&BuildingString::antiregular(n, k, connected).unwrap());
                let reference = ipoly_antiregular_recurrence(n, k, connected).unwrap();
                let mut others = vec![
                    ("brute", ipoly_bruteforce(&g).unwrap()),
                    ("trinks", ipoly_trinks(&g).unwrap()),
                ];
                if n >= semiclosed_min_vertices(k) {
                    others.push(("semiclosed", ipoly_semiclosed(n, k, connected).unwrap()));
                }
                if k == 3 {
                    others.push(("closed", ipoly_k3_closed(n, connected).unwrap()));
                }
                for (name, p) in others {
                    compared += 1;
                    if p != reference {
                        failures.push(format!("k={k} n={n} connected={connected}: {name} {p} vs {reference}"));
                    }
                }
            }
        }
    }
    assert!(compared > 300);
    report(
        3,
        "brute = trinks = recurrence = semi-closed (= closed for k=3), k<=5, n<=14",
        &failures,
        start.elapsed(),
        secs(120),
    );
}

#[test]
fn criterion_04_alpha_beta_tables() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let t = solve_alpha(3, 20).unwrap();
    for l in t.levels() {
        let want = [3, l + 3, l].map(BigInt::from);
        for (i, w) in want.iter().enumerate() {
            if t.get(l, i) != Some(w) {
                failures.push(format!("k=3 level {l}: alpha_{i} = {:?}, want {w}", t.get(l, i)));
            }
        }
    }
    let t = solve_alpha(2, 20).unwrap();
    for l in t.levels() {
        for i in 0..2 {
            if t.get(l, i) != Some(&BigInt::from(1)) {
                failures.push(format!("k=2 level {l}: alpha_{i} = {:?}", t.get(l, i)));
            }
        }
    }
    // Levels up to 40: alpha at 0..=40 (n_max 20), beta at 1..=39 (n_max 19).
    for k in 2..=6 {
        if let Err(e) = solve_alpha(k, 20) {
            failures.push(format!("alpha k={k}: {e}"));
        }
        if let Err(e) = solve_beta(k, 19) {
            failures.push(format!("beta k={k}: {e}"));
        }
    }
    report(4, "alpha tables for k=2,3 and t_0 constancy for k<=6, levels<=40", &failures, start.elapsed(), secs(5));
}

#[test]
fn criterion_05_coefficient_sums() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in 3..=6 {
        for n in 1..=10 {
            let p = ipoly_antiregular_recurrence(2 * n, k, false).unwrap();
            match coeff_formulas(k, n) {
                Ok(c) => {
                    if c.a_k != p.coeff(k) || c.a_k_plus_1 != p.coeff(k + 1) {
                        failures.push(format!(
                            "k={k} n={n}: sums ({}, {}) vs polynomial ({}, {})",
                            c.a_k,
                            c.a_k_plus_1,
                            p.coeff(k),
                            p.coeff(k + 1)
                        ));
                    }
                }
                Err(e) => failures.push(format!("k={k} n={n}: {e}")),
            }
            if k == 3 {
                let (a3, a4) = k3_products(n);
                if a3 != p.coeff(3) || a4 != p.coeff(4) {
                    failures.push(format!("k=3 n={n}: products ({a3}, {a4})"));
                }
            }
        }
    }
    report(5, "coefficient sums and k=3 products match, k in 3..=6, 2n<=20", &failures, start.elapsed(), secs(30));
}

#[test]
fn criterion_06_log_concavity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in 2..=6 {
        for n in 1..=40 {
            for connected in [true, false] {
                let p = ipoly_antiregular_recurrence(n, k, connected).unwrap();
                let r = is_log_concave(&p);
                if !r.holds {
                    failures.push(format!("k={k} n={n} connected={connected}: index {:?}", r.first_violation));
                }
            }
        }
    }
    report(6, "antiregular polynomials log-concave, k in 2..=6, n<=40", &failures, start.elapsed(), secs(60));
}

#[test]
fn criterion_07_t2_soundness() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for k in 2..=5 {
        for n in k..=12 {
            for b in BuildingString::all_of_length(n, k).filter(|b| b.dominating_count() > 0) {
                let g = Hypergraph::build(&b);
                let l = algorithm1_labels(&b).unwrap();
                checked += 1;
                if !verify_t2(&g, &l).unwrap().holds {
                    failures.push(format!("k={k} {b}: T2 fails"));
                }
                let m = check_label_monotonicity(&b, &l).unwrap();
                if !m.holds {
                    failures.push(format!("k={k} {b}: {:?}", m.violation));
                }
            }
        }
    }
    let expected: usize = (2..=5usize)
        .map(|k| (k..=12).map(|n| (1usize << (n + 1 - k)) - 1).sum::<usize>())
        .sum();
    if checked != expected {
        failures.push(format!("checked {checked} strings, expected {expected}"));
    }
    report(7, "Algorithm 1 labels pass T2 and ordering checks, k<=5, n<=12", &failures, start.elapsed(), secs(300));
}

#[test]
fn criterion_08_degree_proposition() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in 3..=5 {
        for n in k + 1..=14 {
            for connected in [true, false] {
                let g = Hypergraph::build(&BuildingString::antiregular(n, k, connected).unwrap());
                let d = g.degree_sequence();
                if !matches!(d.sole_repeat(), Some((_, m)) if m == k) {
                    failures.push(format!("k={k} n={n} connected={connected}: {:?}", d.degrees()));
                }
            }
        }
    }
    let d = Hypergraph::build(&BuildingString::parse("000010", 4).unwrap()).degree_sequence();
    if d.degrees() != [3, 3, 3, 3, 4, 0] {
        failures.push(format!("000010 (k=4): {:?}", d.degrees()));
    }
    report(8, "exactly one degree repeats, k times; 000010 gives (3,3,3,3,4,0)", &failures, start.elapsed(), secs(10));
}

#[test]
fn criterion_09_negative_results() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let v = t2_feasibility(&h2()).unwrap();
    if v.feasible || !v.certificate.as_ref().is_some_and(|c| c.check(&h2())) {
        failures.push(format!("H2 feasibility: {v:?}"));
    }
    let four = h(6, 4, &[&[1, 2, 5, 6], &[1, 3, 4, 6], &[1, 3, 5, 6], &[1, 4, 5, 6]]);
    let six = h(6, 3, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6]]);
    for (name, g) in [("4-uniform example", four), ("([6],{123,345,156})", six)] {
        if recognize_zero_one_constructable(&g).unwrap().is_some() {
            failures.push(format!("{name} recognized as constructable"));
        }
    }
    report(9, "H2 infeasible; two examples not constructable", &failures, start.elapsed(), secs(10));
}

#[test]
fn criterion_10_complement_structure() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in 2..=5 {
        for n in 1..=12 {
            let conn = Hypergraph::build(&BuildingString::antiregular(n, k, true).unwrap());
            let disc = Hypergraph::build(&BuildingString::antiregular(n, k, false).unwrap());
            if conn.complement_uniform().unwrap().edges() != disc.edges() {
                failures.push(format!("k={k} n={n}: complement of connected"));
            }
            if disc.complement_uniform().unwrap().edges() != conn.edges() {
                failures.push(format!("k={k} n={n}: complement of disconnected"));
            }
        }
    }
    report(10, "complement swaps the two antiregular variants, k<=5, n<=12", &failures, start.elapsed(), secs(30));
}
