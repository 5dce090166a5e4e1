use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::types::Cardinality;

/// A finitely generated abelian group presented as an ordered direct sum
/// of cyclic factors with named generators.
///
/// A factor of `0` is an infinite cyclic factor; finite factors are
/// `>= 2` (a factor of `1` is rejected, the trivial group is the empty
/// list). The presentation is kept exactly as declared — factors are
/// *not* normalized to invariant-factor form, because generator names
/// carry meaning and equality of groups is by declared presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgAbGroup {
    factors: Vec<u64>,
    generator_names: Vec<String>,
}

impl FgAbGroup {
    pub fn new(factors: Vec<u64>, generator_names: Vec<String>) -> Result<Self> {
        if factors.len() != generator_names.len() {
            return Err(Error::SchemaViolation(format!(
                "{} factors but {} generator names",
                factors.len(),
                generator_names.len()
            )));
        }
        if let Some(bad) = factors.iter().find(|&&d| d == 1) {
            return Err(Error::SchemaViolation(format!(
                "cyclic factor {bad} is forbidden (use the empty list for the trivial group)"
            )));
        }
        Ok(FgAbGroup {
            factors,
            generator_names,
        })
    }

    /// Trivial group: empty factor list.
    pub fn trivial() -> Self {
        FgAbGroup {
            factors: vec![],
            generator_names: vec![],
        }
    }

    /// Convenience constructor with synthesized generator names.
    pub fn cyclic_product(factors: &[u64]) -> Self {
        let names = (0..factors.len()).map(|i| format!("g{}", i + 1)).collect();
        FgAbGroup::new(factors.to_vec(), names).expect("names match factors")
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|&d| d != 0)
    }

    pub fn cardinality(&self) -> Cardinality {
        if !self.is_finite() {
            return Cardinality::Infinite;
        }
        let mut card = BigUint::one();
        for &d in &self.factors {
            card *= BigUint::from(d);
        }
        Cardinality::Finite(card)
    }

    /// Direct sum, concatenating factors and generator names.
    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        let mut names = self.generator_names.clone();
        names.extend_from_slice(&other.generator_names);
        FgAbGroup {
            factors,
            generator_names: names,
        }
    }

    /// Reduce a coefficient vector to canonical form: entry `i` taken
    /// modulo `factors[i]` when finite, left as is on infinite factors.
    pub fn canonicalize(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coeffs.len(), self.rank(), "coefficient length mismatch");
        coeffs
            .iter()
            .zip(&self.factors)
            .map(|(c, &d)| {
                if d == 0 {
                    c.clone()
                } else {
                    c.mod_floor(&BigInt::from(d))
                }
            })
            .collect()
    }

    pub fn element(self: &Arc<Self>, coeffs: &[BigInt]) -> Result<GroupElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::ShapeMismatch(format!(
                "element has {} coefficients, group has {} factors",
                coeffs.len(),
                self.rank()
            )));
        }
        Ok(GroupElement {
            coeffs: self.canonicalize(coeffs),
            parent: Arc::clone(self),
        })
    }

    pub fn element_from_i64(self: &Arc<Self>, coeffs: &[i64]) -> Result<GroupElement> {
        let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        self.element(&big)
    }

    pub fn zero(self: &Arc<Self>) -> GroupElement {
        GroupElement {
            coeffs: vec![BigInt::zero(); self.rank()],
            parent: Arc::clone(self),
        }
    }

    pub fn generator(self: &Arc<Self>, i: usize) -> GroupElement {
        let mut coeffs = vec![BigInt::zero(); self.rank()];
        coeffs[i] = BigInt::one();
        GroupElement {
            coeffs,
            parent: Arc::clone(self),
        }
    }

    /// All elements in lexicographic order of canonical coefficient
    /// vectors. Errors on infinite groups.
    pub fn enumerate(self: &Arc<Self>) -> Result<ElementIter> {
        if !self.is_finite() {
            return Err(Error::InfiniteSet(format!(
                "cannot enumerate the infinite group {self}"
            )));
        }
        Ok(ElementIter {
            group: Arc::clone(self),
            next: Some(vec![0u64; self.rank()]),
        })
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&d| if d == 0 { "Z".into() } else { format!("Z{d}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of an `FgAbGroup`: one integer coefficient per factor,
/// stored in canonical form. Equality is entrywise equality of
/// canonical forms within the same parent presentation.
#[derive(Debug, Clone)]
pub struct GroupElement {
    coeffs: Vec<BigInt>,
    parent: Arc<FgAbGroup>,
}

impl GroupElement {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn parent(&self) -> &Arc<FgAbGroup> {
        &self.parent
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        assert_eq!(
            self.parent.as_ref(),
            other.parent.as_ref(),
            "elements of different groups"
        );
        let sum: Vec<BigInt> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        GroupElement {
            coeffs: self.parent.canonicalize(&sum),
            parent: Arc::clone(&self.parent),
        }
    }

    pub fn neg(&self) -> GroupElement {
        let neg: Vec<BigInt> = self.coeffs.iter().map(|c| -c).collect();
        GroupElement {
            coeffs: self.parent.canonicalize(&neg),
            parent: Arc::clone(&self.parent),
        }
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> GroupElement {
        let scaled: Vec<BigInt> = self.coeffs.iter().map(|c| c * k).collect();
        GroupElement {
            coeffs: self.parent.canonicalize(&scaled),
            parent: Arc::clone(&self.parent),
        }
    }

    /// Least `k >= 1` with `k * x = 0`, or infinite.
    ///
    /// Per coordinate this is `d_i / gcd(d_i, x_i)`; the order is the lcm.
    /// A nonzero coordinate on an infinite factor has infinite order.
    pub fn order(&self) -> Cardinality {
        let mut ord = BigUint::one();
        for (c, &d) in self.coeffs.iter().zip(self.parent.factors()) {
            if d == 0 {
                if !c.is_zero() {
                    return Cardinality::Infinite;
                }
                continue;
            }
            let d = BigUint::from(d);
            let c = c.abs().to_biguint().expect("abs is non-negative");
            let k = &d / c.gcd(&d);
            ord = ord.lcm(&k);
        }
        Cardinality::Finite(ord)
    }

    /// Pretty form against the parent's generator names, e.g. `4*a + b`.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(self.parent.generator_names())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| {
                if c.is_one() {
                    name.clone()
                } else {
                    format!("{c}*{name}")
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.parent.as_ref() == other.parent.as_ref() && self.coeffs == other.coeffs
    }
}

impl Eq for GroupElement {}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Lexicographic iterator over all elements of a finite group.
pub struct ElementIter {
    group: Arc<FgAbGroup>,
    next: Option<Vec<u64>>,
}

impl Iterator for ElementIter {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let current = self.next.take()?;
        let coeffs: Vec<BigInt> = current.iter().map(|&c| BigInt::from(c)).collect();
        let elem = GroupElement {
            coeffs,
            parent: Arc::clone(&self.group),
        };

        // Odometer increment, most significant coordinate first.
        let mut bumped = current;
        let factors = self.group.factors();
        let mut i = bumped.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            bumped[i] += 1;
            if bumped[i] < factors[i] {
                self.next = Some(bumped);
                break;
            }
            bumped[i] = 0;
        }
        Some(elem)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FgAbGroup) -> Arc<FgAbGroup> {
        Arc::new(g)
    }

    #[test]
    fn rejects_factor_one() {
        assert!(FgAbGroup::new(vec![2, 1], vec!["a".into(), "b".into()]).is_err());
        assert!(FgAbGroup::new(vec![2], vec![]).is_err());
    }

    #[test]
    fn cardinality() {
        assert_eq!(
            FgAbGroup::cyclic_product(&[8, 2, 9]).cardinality(),
            Cardinality::finite(144)
        );
        assert_eq!(
            FgAbGroup::cyclic_product(&[0, 12]).cardinality(),
            Cardinality::Infinite
        );
        assert_eq!(FgAbGroup::trivial().cardinality(), Cardinality::finite(1));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let g = FgAbGroup::cyclic_product(&[8, 0, 3]);
        let raw = vec![BigInt::from(-3), BigInt::from(-7), BigInt::from(14)];
        let once = g.canonicalize(&raw);
        let twice = g.canonicalize(&once);
        assert_eq!(once, twice);
        assert_eq!(
            once,
            vec![BigInt::from(5), BigInt::from(-7), BigInt::from(2)]
        );
    }

    #[test]
    fn element_orders() {
        let g = arc(FgAbGroup::cyclic_product(&[8]));
        assert_eq!(g.zero().order(), Cardinality::finite(1));
        assert_eq!(g.generator(0).order(), Cardinality::finite(8));
        // 4 * (Z8 generator) has order 2: direct check 2*(4g) = 8g = 0.
        let half = g.generator(0).scale(&BigInt::from(4));
        assert_eq!(half.order(), Cardinality::finite(2));
        assert!(half.scale(&BigInt::from(2)).is_zero());

        let inf = arc(FgAbGroup::cyclic_product(&[0, 2]));
        assert_eq!(inf.generator(0).order(), Cardinality::Infinite);
        assert_eq!(inf.generator(1).order(), Cardinality::finite(2));
    }

    #[test]
    fn enumerate_counts_and_distinctness() {
        let g = arc(FgAbGroup::cyclic_product(&[2, 3]));
        let all: Vec<_> = g.enumerate().unwrap().collect();
        assert_eq!(all.len(), 6);
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }

        let trivial = arc(FgAbGroup::trivial());
        let all: Vec<_> = trivial.enumerate().unwrap().collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_zero());

        let pi_16_s6 = arc(FgAbGroup::cyclic_product(&[8, 2, 9]));
        assert_eq!(pi_16_s6.enumerate().unwrap().count(), 144);

        let inf = arc(FgAbGroup::cyclic_product(&[0]));
        assert!(inf.enumerate().is_err());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let g = arc(FgAbGroup::cyclic_product(&[2, 2]));
        let all: Vec<Vec<BigInt>> = g
            .enumerate()
            .unwrap()
            .map(|e| e.coeffs().to_vec())
            .collect();
        let expect: Vec<Vec<BigInt>> = [[0, 0], [0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        assert_eq!(all, expect);
    }

    #[test]
    fn direct_sum_concatenates() {
        let a = FgAbGroup::new(vec![2], vec!["a".into()]).unwrap();
        let b = FgAbGroup::new(vec![0, 3], vec!["b".into(), "c".into()]).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s.factors(), &[2, 0, 3]);
        assert_eq!(s.generator_names(), &["a", "b", "c"]);
    }
}
