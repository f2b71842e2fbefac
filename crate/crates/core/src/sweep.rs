//! Exhaustive cross-checks over all small antiregular and constructable strings.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::ipoly::{
    ipoly_antiregular_recurrence, ipoly_bruteforce_with, ipoly_k3_closed, ipoly_semiclosed,
    ipoly_trinks_with, is_log_concave, semiclosed_min_vertices,
};
use crate::threshold::{
    algorithm1_labels, check_label_monotonicity, verify_t2_with, verify_t3_with, VERIFY_T3_GUARD,
};
use crate::{BuildingString, Error, Guard, Hypergraph, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Disagreement {
    pub k: usize,
    pub n: usize,
    pub string: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub k_max: usize,
    pub n_max: usize,
    pub antiregular_instances: usize,
    pub constructable_instances: usize,
    pub checks: usize,
    /// Sorted by `(k, n, string, check)`.
    pub disagreements: Vec<Disagreement>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Instance {
    Antiregular { k: usize, n: usize, connected: bool },
    Constructable(BuildingString),
}

/// Runs every check for `2 <= k <= k_max` and `1 <= n <= n_max` on the
/// current rayon pool.
///
/// Antiregular strings (both variants): brute force, deletion/hiding,
/// recurrence, semi-closed (n >= k + 1) and, for k = 3, closed forms agree;
/// complements swap the two variants; for n >= k + 1 exactly one degree value
/// repeats, k times; the polynomial is log-concave.
///
/// Every constructable string: brute force equals deletion/hiding; when the
/// string has a dominating vertex, the constructed labeling passes the T2
/// check, the ordering clauses and the threshold formula `2^z(2k+1) - 1`,
/// and the hypergraph passes the T3 check.
pub fn run_sweep(k_max: usize, n_max: usize, guard: Guard) -> Result<SweepReport> {
    if k_max < 2 || n_max == 0 {
        return Err(Error::OutOfRange(format!(
            "sweep needs k-max >= 2 and n-max >= 1, got {k_max} and {n_max}"
        )));
    }
    guard.check("sweep vertex count", n_max, VERIFY_T3_GUARD)?;

    let mut instances = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            for connected in [true, false] {
                instances.push(Instance::Antiregular { k, n, connected });
            }
            instances.extend(BuildingString::all_of_length(n, k).map(Instance::Constructable));
        }
    }
    instances.sort();
    let antiregular_instances = instances
        .iter()
        .filter(|i| matches!(i, Instance::Antiregular { .. }))
        .count();

    let results: Vec<(usize, Vec<Disagreement>)> = instances
        .par_iter()
        .map(|inst| match inst {
            Instance::Antiregular { k, n, connected } => antiregular_checks(*k, *n, *connected),
            Instance::Constructable(b) => constructable_checks(b),
        })
        .collect();

    let checks = results.iter().map(|(c, _)| c).sum();
    let mut disagreements: Vec<Disagreement> = results.into_iter().flat_map(|(_, d)| d).collect();
    disagreements.sort();
    Ok(SweepReport {
        k_max,
        n_max,
        antiregular_instances,
        constructable_instances: instances.len() - antiregular_instances,
        checks,
        disagreements,
    })
}

/// Records failed checks; an error aborts the instance and is reported as a
/// disagreement of its own.
struct Recorder {
    k: usize,
    n: usize,
    string: String,
    count: usize,
    found: Vec<Disagreement>,
}

impl Recorder {
    fn check(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.found.push(Disagreement {
                k: self.k,
                n: self.n,
                string: self.string.clone(),
                check: check.to_string(),
                detail: detail(),
            });
        }
    }

    fn finish(mut self, outcome: Result<()>) -> (usize, Vec<Disagreement>) {
        if let Err(e) = outcome {
            self.found.push(Disagreement {
                k: self.k,
                n: self.n,
                string: self.string.clone(),
                check: "error".to_string(),
                detail: e.to_string(),
            });
        }
        (self.count, self.found)
    }
}

fn antiregular_checks(k: usize, n: usize, connected: bool) -> (usize, Vec<Disagreement>) {
    let mut r = Recorder {
        k,
        n,
        string: format!("antiregular {}", if connected { "connected" } else { "disconnected" }),
        count: 0,
        found: Vec::new(),
    };
    let body = |r: &mut Recorder| -> Result<()> {
        let b = BuildingString::antiregular(n, k, connected)?;
        let h = Hypergraph::build(&b);
        let reference = ipoly_antiregular_recurrence(n, k, connected)?;
        let mut methods = vec![
            ("brute", ipoly_bruteforce_with(&h, Guard::Ignore)?),
            ("trinks", ipoly_trinks_with(&h, Guard::Ignore, true)?),
        ];
        if n >= semiclosed_min_vertices(k) {
            methods.push(("semiclosed", ipoly_semiclosed(n, k, connected)?));
        }
        if k == 3 {
            methods.push(("closed", ipoly_k3_closed(n, connected)?));
        }
        for (name, p) in methods {
            r.check(&format!("polynomial:{name}"), p == reference, || {
                format!("{name} gives {p}, recurrence gives {reference}")
            });
        }

        let other = Hypergraph::build(&BuildingString::antiregular(n, k, !connected)?);
        let complement = h.complement_uniform()?;
        r.check("complement", complement.edges() == other.edges(), || {
            "complement is not the other antiregular variant".into()
        });

        if n > k {
            let degrees = h.degree_sequence();
            r.check("degrees", matches!(degrees.sole_repeat(), Some((_, m)) if m == k), || {
                format!("degree sequence {:?}", degrees.degrees())
            });
        }

        let lc = is_log_concave(&reference);
        r.check("log_concave", lc.holds, || {
            format!("fails at degree {:?} of {reference}", lc.first_violation)
        });
        Ok(())
    };
    let outcome = body(&mut r);
    r.finish(outcome)
}

fn constructable_checks(b: &BuildingString) -> (usize, Vec<Disagreement>) {
    let k = b.k();
    let mut r = Recorder {
        k,
        n: b.len(),
        string: b.to_string(),
        count: 0,
        found: Vec::new(),
    };
    let body = |r: &mut Recorder| -> Result<()> {
        let h = Hypergraph::build(b);
        let brute = ipoly_bruteforce_with(&h, Guard::Ignore)?;
        let trinks = ipoly_trinks_with(&h, Guard::Ignore, true)?;
        r.check("polynomial:trinks", brute == trinks, || {
            format!("brute gives {brute}, trinks gives {trinks}")
        });

        let Some(first) = b.first_dominating() else {
            return Ok(());
        };
        let l = algorithm1_labels(b)?;
        let t2 = verify_t2_with(&h, &l, Guard::Ignore)?;
        r.check("t2", t2.holds, || format!("misclassified subset {:?}", t2.witness));

        let mono = check_label_monotonicity(b, &l)?;
        r.check("monotonicity", mono.holds, || format!("{:?}", mono.violation));

        let z = b.len() - first - (b.dominating_count() - 1);
        let expected_tau = (BigInt::from(2 * k + 1) << z) - 1;
        r.check("tau", l.tau == expected_tau, || {
            format!("tau {} but 2^{z}(2k+1)-1 = {expected_tau}", l.tau)
        });

        let t3 = verify_t3_with(&h, Guard::Ignore)?;
        r.check("t3", t3.holds, || format!("incomparable pair {:?}", t3.witness));
        Ok(())
    };
    let outcome = body(&mut r);
    r.finish(outcome)
}
