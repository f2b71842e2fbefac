//! Exact phase-one simplex over the rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) enum PhaseOne {
    /// `y >= 0` with `A y = b`.
    Feasible(Vec<BigRational>),
    /// Farkas multipliers `u` with `uᵀA <= 0` componentwise and `uᵀb > 0`.
    Infeasible(Vec<BigRational>),
}

/// Decides `A y = b, y >= 0` by minimising the sum of artificial variables.
///
/// Bland's rule (lowest entering column, lowest leaving basis index) keeps
/// the method finite under degeneracy.
pub(crate) fn phase_one(a: &[Vec<BigRational>], b: &[BigRational]) -> PhaseOne {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let width = cols + rows;
    let flipped: Vec<bool> = b.iter().map(Signed::is_negative).collect();

    let mut t: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<BigRational> = a[i]
                .iter()
                .map(|v| if flipped[i] { -v } else { v.clone() })
                .collect();
            row.extend((0..rows).map(|r| if r == i { BigRational::one() } else { BigRational::zero() }));
            row.push(b[i].abs());
            row
        })
        .collect();

    // Reduced costs of the phase-one objective; the last entry is minus its value.
    let mut obj: Vec<BigRational> = (0..=width)
        .map(|j| {
            if (cols..width).contains(&j) {
                BigRational::zero()
            } else {
                -t.iter().map(|row| &row[j]).sum::<BigRational>()
            }
        })
        .collect();
    let mut basis: Vec<usize> = (cols..width).collect();

    while let Some(e) = (0..width).find(|&j| obj[j].is_negative()) {
        let leave = (0..rows)
            .filter(|&i| t[i][e].is_positive())
            .map(|i| (&t[i][width] / &t[i][e], basis[i], i))
            .min()
            .map(|(_, _, i)| i)
            .expect("phase-one objective is bounded below");
        pivot(&mut t, &mut obj, leave, e);
        basis[leave] = e;
    }

    if obj[width].is_zero() {
        let mut y = vec![BigRational::zero(); cols];
        for (i, &v) in basis.iter().enumerate() {
            if v < cols {
                y[v] = t[i][width].clone();
            }
        }
        PhaseOne::Feasible(y)
    } else {
        // Duals: u_i = cost(artificial_i) - reduced cost(artificial_i).
        let u = (0..rows)
            .map(|i| {
                let ui = BigRational::one() - &obj[cols + i];
                if flipped[i] {
                    -ui
                } else {
                    ui
                }
            })
            .collect();
        PhaseOne::Infeasible(u)
    }
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], r: usize, e: usize) {
    let p = t[r][e].clone();
    t[r].iter_mut().for_each(|v| *v /= &p);
    let pivot_row = t[r].clone();
    let eliminate = |row: &mut Vec<BigRational>| {
        let f = row[e].clone();
        if f.is_zero() {
            return;
        }
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    };
    for (i, row) in t.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    let mut o = obj.to_vec();
    eliminate(&mut o);
    obj.clone_from_slice(&o);
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
    }

    fn residual(a: &[Vec<BigRational>], y: &[BigRational], b: &[BigRational]) -> bool {
        a.iter()
            .zip(b)
            .all(|(row, bi)| row.iter().zip(y).map(|(x, z)| x * z).sum::<BigRational>() == *bi)
    }

    #[test]
    fn feasible_system() {
        let a = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![q(2), q(3)];
        match phase_one(&a, &b) {
            PhaseOne::Feasible(y) => {
                assert!(y.iter().all(|v| !v.is_negative()));
                assert!(residual(&a, &y, &b));
            }
            PhaseOne::Infeasible(_) => panic!("expected feasible"),
        }
    }

    #[test]
    fn negative_rhs() {
        let a = mat(&[&[-1, 0], &[0, 1]]);
        let b = vec![q(-4), q(1)];
        match phase_one(&a, &b) {
            PhaseOne::Feasible(y) => assert_eq!(y, vec![q(4), q(1)]),
            PhaseOne::Infeasible(_) => panic!("expected feasible"),
        }
    }

    #[test]
    fn infeasible_system_has_certificate() {
        // y1 + y2 = 1 and y1 + y2 = 2 cannot both hold.
        let a = mat(&[&[1, 1], &[1, 1]]);
        let b = vec![q(1), q(2)];
        match phase_one(&a, &b) {
            PhaseOne::Infeasible(u) => {
                for j in 0..2 {
                    let s: BigRational = (0..2).map(|i| &u[i] * &a[i][j]).sum();
                    assert!(!s.is_positive());
                }
                let ub: BigRational = u.iter().zip(&b).map(|(x, y)| x * y).sum();
                assert!(ub.is_positive());
            }
            PhaseOne::Feasible(_) => panic!("expected infeasible"),
        }
    }
}
