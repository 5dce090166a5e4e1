//! Smith normal form over the integers.
//!
//! `U * M * V = S` with `U`, `V` unimodular and `S` diagonal with a
//! divisibility chain `d_1 | d_2 | ...`, all entries non-negative. The
//! transforms are tracked through every elementary operation, so the
//! identity holds exactly by construction; tests re-check it anyway.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

pub struct Snf {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.s.nrows().min(self.s.ncols());
        (0..n).take_while(|&i| !self.s[(i, i)].is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.nrows().min(self.s.ncols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }
}

/// Smallest nonzero entry by absolute value in the trailing block,
/// ties broken by row-major position. Deterministic on purpose: golden
/// tests pin the exact transforms.
fn select_pivot(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..s.nrows() {
        for j in t..s.ncols() {
            if s[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some(b) => {
                    if s[(i, j)].abs() < s[b].abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = select_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear the pivot cross. A non-divisible entry leaves a smaller
        // remainder behind, so re-selecting the pivot terminates.
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = div_nearest(&s[(i, t)], &s[(t, t)]);
                s.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                if !s[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = div_nearest(&s[(t, j)], &s[(t, t)]);
                s.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                if !s[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let (pi, pj) = select_pivot(&s, t).expect("nonzero block");
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }

            // Divisibility: the pivot must divide the remaining block.
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&s[(i, j)] % &s[(t, t)]).is_zero() {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    s.add_row(t, i);
                    u.add_row(t, i);
                }
                None => break,
            }
        }

        t += 1;
    }

    for i in 0..rows.min(cols) {
        if s[(i, i)].is_negative() {
            s.negate_row(i);
            u.negate_row(i);
        }
    }

    Snf { u, s, v }
}

/// Quotient rounded to nearest (remainder magnitude at most |d|/2).
fn div_nearest(a: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = a.div_mod_floor(d);
    // div_mod_floor gives 0 <= r < |d| for d > 0 (and the mirrored range
    // for d < 0); shift by one when the remainder is past the midpoint.
    if &r * 2i32 > d.abs() {
        q += d.signum();
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_contract(m: &IntMatrix) -> Snf {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s, "U*M*V != S");
        assert!(snf.u.is_unimodular(), "U not unimodular");
        assert!(snf.v.is_unimodular(), "V not unimodular");
        let d = snf.diagonal();
        for i in 0..d.len() {
            assert!(!d[i].is_negative());
            if i + 1 < d.len() && !d[i + 1].is_zero() {
                assert!(!d[i].is_zero(), "zero before nonzero on diagonal");
                assert!((&d[i + 1] % &d[i]).is_zero(), "divisibility chain broken");
            }
        }
        for i in 0..snf.s.nrows() {
            for j in 0..snf.s.ncols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero(), "S not diagonal");
                }
            }
        }
        snf
    }

    #[test]
    fn identity_2x2() {
        let snf = check_contract(&IntMatrix::identity(2));
        assert_eq!(snf.s, IntMatrix::identity(2));
        assert_eq!(snf.u, IntMatrix::identity(2));
        assert_eq!(snf.v, IntMatrix::identity(2));
    }

    // Expected diag(2, 4) verified by exhaustive search over short
    // elementary-operation sequences: d1 = gcd of all entries = 2 and
    // d1*d2 = |det| = 8 pin the diagonal.
    #[test]
    fn two_by_two_example() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = check_contract(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(2), BigInt::from(4)],);
    }

    #[test]
    fn zero_3x2() {
        let m = IntMatrix::zero(3, 2);
        let snf = check_contract(&m);
        assert!(snf.s.is_zero());
        assert_eq!(snf.u, IntMatrix::identity(3));
        assert_eq!(snf.v, IntMatrix::identity(2));
    }

    #[test]
    fn empty_matrices() {
        check_contract(&IntMatrix::zero(0, 4));
        check_contract(&IntMatrix::zero(4, 0));
        check_contract(&IntMatrix::zero(0, 0));
    }

    #[test]
    fn divisibility_needs_mixing() {
        // diag(2, 3) as a lattice quotient is Z6; SNF must give (1, 6).
        let m = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = check_contract(&m);
        assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn rank_deficient() {
        let m = IntMatrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let snf = check_contract(&m);
        assert_eq!(snf.rank(), 1);
    }
}
