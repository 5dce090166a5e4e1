//! Subgroups, kernels, images and membership, all through Smith normal
//! form of integer lattices.
//!
//! A subgroup generated by elements `g_1 .. g_s` of an ambient group with
//! relation columns `R` (one column `d_i * e_i` per finite factor) is the
//! image of `Z^s -> ambient`. Its structure is read off the preimage
//! lattice `K = { x in Z^s : G x in span(R) }`: the subgroup is
//! `Z^s / K`, whose invariant factors come from the SNF of a basis of `K`.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::types::Cardinality;

use super::group::{FgAbGroup, GroupElement};
use super::hom::Homomorphism;
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;

#[derive(Debug, Clone)]
pub struct Subgroup {
    ambient: Arc<FgAbGroup>,
    generators: Vec<GroupElement>,
}

/// Columns `d_i * e_i` for the finite factors of a group: the relation
/// lattice of the presentation.
fn relation_columns(group: &FgAbGroup) -> IntMatrix {
    let finite: Vec<usize> = group
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(i, _)| i)
        .collect();
    let mut m = IntMatrix::zero(group.rank(), finite.len());
    for (j, &i) in finite.iter().enumerate() {
        m[(i, j)] = BigInt::from(group.factors()[i]);
    }
    m
}

/// Basis of the integer kernel lattice `{ z : A z = 0 }`, as columns.
pub fn integer_kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    (rank..a.ncols()).map(|j| snf.v.col(j)).collect()
}

/// One integer solution of `A z = x`, if any.
pub fn solve(a: &IntMatrix, x: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.nrows(), x.len(), "right-hand side length mismatch");
    let snf = smith_normal_form(a);
    let w = snf.u.mul_vec(x);
    let mut z = vec![BigInt::zero(); a.ncols()];
    let diag_len = a.nrows().min(a.ncols());
    for (i, wi) in w.iter().enumerate() {
        if i < diag_len && !snf.s[(i, i)].is_zero() {
            let (q, r) = wi.div_mod_floor(&snf.s[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !wi.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&z))
}

impl Subgroup {
    pub fn new(ambient: Arc<FgAbGroup>, generators: Vec<GroupElement>) -> Result<Self> {
        for g in &generators {
            if g.parent().as_ref() != ambient.as_ref() {
                return Err(Error::ShapeMismatch(
                    "subgroup generator lies in a different group".into(),
                ));
            }
        }
        Ok(Subgroup {
            ambient,
            generators,
        })
    }

    pub fn trivial(ambient: Arc<FgAbGroup>) -> Self {
        Subgroup {
            ambient,
            generators: vec![],
        }
    }

    pub fn full(ambient: &Arc<FgAbGroup>) -> Self {
        let generators = (0..ambient.rank()).map(|i| ambient.generator(i)).collect();
        Subgroup {
            ambient: Arc::clone(ambient),
            generators,
        }
    }

    pub fn ambient(&self) -> &Arc<FgAbGroup> {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Generator columns followed by the ambient relation columns.
    fn extended_matrix(&self) -> IntMatrix {
        let k = self.ambient.rank();
        let mut g = IntMatrix::zero(k, self.generators.len());
        for (j, gen) in self.generators.iter().enumerate() {
            for (i, c) in gen.coeffs().iter().enumerate() {
                g[(i, j)] = c.clone();
            }
        }
        g.augment(&relation_columns(&self.ambient))
    }

    /// Invariant factors of the subgroup as an abstract group, plus its
    /// free rank. Factors of 1 are dropped.
    pub fn invariant_factors(&self) -> (Vec<BigUint>, usize) {
        let s = self.generators.len();
        if s == 0 {
            return (vec![], 0);
        }
        let ext = self.extended_matrix();
        let kernel = integer_kernel_basis(&ext);
        // Keep only the generator coordinates: their span is the full
        // preimage lattice { x : G x in span(R) }.
        let mut k_basis = IntMatrix::zero(s, kernel.len());
        for (j, col) in kernel.iter().enumerate() {
            for i in 0..s {
                k_basis[(i, j)] = col[i].clone();
            }
        }
        let snf = smith_normal_form(&k_basis);
        let rank = snf.rank();
        let factors: Vec<BigUint> = snf
            .diagonal()
            .into_iter()
            .take(rank)
            .filter(|d| !d.is_one())
            .map(|d| d.to_biguint().expect("SNF diagonal is non-negative"))
            .collect();
        (factors, s - rank)
    }

    pub fn cardinality(&self) -> Cardinality {
        let (factors, free_rank) = self.invariant_factors();
        if free_rank > 0 {
            return Cardinality::Infinite;
        }
        let mut card = BigUint::one();
        for d in &factors {
            card *= d;
        }
        Cardinality::Finite(card)
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_finite()
    }

    /// Does `x` lie in the subgroup?  Solvability of `[G | R] z = x`.
    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        if x.parent().as_ref() != self.ambient.as_ref() {
            return Err(Error::ShapeMismatch(
                "membership test against a different ambient group".into(),
            ));
        }
        if self.generators.is_empty() {
            return Ok(x.is_zero());
        }
        Ok(solve(&self.extended_matrix(), x.coeffs()).is_some())
    }

    /// Is every generator of `self` a member of `other`?
    pub fn is_contained_in(&self, other: &Subgroup) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of elements `a` with `2a = 0`, at least 1 (zero counts).
    /// Errors when the subgroup is infinite.
    pub fn count_two_torsion(&self) -> Result<BigUint> {
        let (factors, free_rank) = self.invariant_factors();
        if free_rank > 0 {
            return Err(Error::InfiniteSet(
                "two-torsion count requested for an infinite subgroup".into(),
            ));
        }
        let two = BigUint::from(2u32);
        let mut count = BigUint::one();
        for d in &factors {
            count *= d.gcd(&two);
        }
        Ok(count)
    }

    /// Push the subgroup through a homomorphism defined on the ambient
    /// group: the subgroup generated by the images of the generators.
    pub fn map_through(&self, phi: &Homomorphism) -> Result<Subgroup> {
        if phi.source().as_ref() != self.ambient.as_ref() {
            return Err(Error::ShapeMismatch(
                "subgroup pushforward through a map with a different source".into(),
            ));
        }
        let images = self
            .generators
            .iter()
            .map(|g| phi.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::new(Arc::clone(phi.target()), images)
    }
}

/// Kernel of a homomorphism: generators of `{ x in source : phi(x) = 0 }`.
pub fn kernel(phi: &Homomorphism) -> Subgroup {
    let source = phi.source();
    let ext = phi.matrix().augment(&relation_columns(phi.target()));
    let basis = integer_kernel_basis(&ext);
    let mut gens = Vec::new();
    for col in basis {
        let x: Vec<BigInt> = col[..source.rank()].to_vec();
        let elem = source.element(&x).expect("kernel vector has source rank");
        if !elem.is_zero() {
            gens.push(elem);
        }
    }
    Subgroup {
        ambient: Arc::clone(source),
        generators: gens,
    }
}

/// Image of a homomorphism: the subgroup of the target generated by the
/// images of the source generators.
pub fn image(phi: &Homomorphism) -> Subgroup {
    let target = phi.target();
    let gens: Vec<GroupElement> = (0..phi.source().rank())
        .map(|j| {
            target
                .element(&phi.matrix().col(j))
                .expect("column has target rank")
        })
        .filter(|e| !e.is_zero())
        .collect();
    Subgroup {
        ambient: Arc::clone(target),
        generators: gens,
    }
}

/// Kernel cardinality; for a finite source this is
/// `|source| / |image|` and both routes are exercised in tests.
pub fn kernel_cardinality(phi: &Homomorphism) -> Cardinality {
    kernel(phi).cardinality()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::matrix::IntMatrix;

    fn arc(factors: &[u64]) -> Arc<FgAbGroup> {
        Arc::new(FgAbGroup::cyclic_product(factors))
    }

    fn hom(src: &Arc<FgAbGroup>, tgt: &Arc<FgAbGroup>, rows: &[Vec<i64>]) -> Homomorphism {
        Homomorphism::new(
            Arc::clone(src),
            Arc::clone(tgt),
            IntMatrix::from_i64_rows(rows),
        )
        .unwrap()
    }

    /// Brute-force kernel by running over every source element.
    fn kernel_by_enumeration(phi: &Homomorphism) -> Vec<GroupElement> {
        phi.source()
            .enumerate()
            .unwrap()
            .filter(|x| phi.apply(x).unwrap().is_zero())
            .collect()
    }

    #[test]
    fn kernel_of_doubling_on_z8() {
        let g = arc(&[8]);
        let double = hom(&g, &g, &[vec![2]]);
        let ker = kernel(&double);
        assert_eq!(ker.cardinality(), Cardinality::finite(2));

        // Oracle: enumerate all 8 elements; the kernel is {0, 4}.
        let by_hand = kernel_by_enumeration(&double);
        assert_eq!(by_hand.len(), 2);
        for x in &by_hand {
            assert!(ker.contains(x).unwrap());
        }
        assert!(ker.contains(&g.element_from_i64(&[4]).unwrap()).unwrap());
        assert!(!ker.contains(&g.element_from_i64(&[2]).unwrap()).unwrap());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let src = arc(&[8]);
        let tgt = arc(&[2]);
        let zero = Homomorphism::zero(&src, &tgt);
        assert_eq!(kernel(&zero).cardinality(), Cardinality::finite(8));
    }

    #[test]
    fn image_cardinalities() {
        let g = arc(&[8, 2]);
        let id = Homomorphism::identity(&g);
        assert_eq!(image(&id).cardinality(), Cardinality::finite(16));

        let z8 = arc(&[8]);
        let double = hom(&z8, &z8, &[vec![2]]);
        let im = image(&double);
        assert_eq!(im.cardinality(), Cardinality::finite(4));
        // Oracle: enumerate; the image is {0, 2, 4, 6}.
        let mut seen = vec![];
        for x in z8.enumerate().unwrap() {
            let y = double.apply(&x).unwrap();
            if !seen.contains(&y) {
                seen.push(y);
            }
        }
        assert_eq!(seen.len(), 4);
        for y in &seen {
            assert!(im.contains(y).unwrap());
        }
    }

    #[test]
    fn kernel_image_product_rule() {
        // |ker| * |im| = |source| over a few maps.
        let g = arc(&[8, 2, 9]);
        let maps = vec![
            hom(&g, &g, &[vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 3]]),
            hom(&g, &g, &[vec![4, 4, 0], vec![0, 1, 0], vec![0, 0, 6]]),
            Homomorphism::zero(&g, &g),
            Homomorphism::identity(&g),
        ];
        for phi in maps {
            let k = kernel(&phi).cardinality();
            let i = image(&phi).cardinality();
            let (Cardinality::Finite(k), Cardinality::Finite(i)) = (k, i) else {
                panic!("finite expected");
            };
            assert_eq!(k * i, BigUint::from(144u32));
        }
    }

    #[test]
    fn two_torsion_counts() {
        let g = arc(&[8, 2, 9]);
        let full = Subgroup::full(&g);
        // Oracle: enumerate all 144 elements and count those killed by 2.
        let by_hand = g
            .enumerate()
            .unwrap()
            .filter(|x| x.scale(&BigInt::from(2)).is_zero())
            .count();
        assert_eq!(by_hand, 4);
        assert_eq!(full.count_two_torsion().unwrap(), BigUint::from(4u32));

        let trivial = Subgroup::trivial(Arc::clone(&g));
        assert_eq!(trivial.count_two_torsion().unwrap(), BigUint::one());

        // Z2 + Z3 inside Z2 + Z3: 2x2 check against enumeration.
        let h = arc(&[2, 3]);
        let by_hand = h
            .enumerate()
            .unwrap()
            .filter(|x| x.scale(&BigInt::from(2)).is_zero())
            .count();
        assert_eq!(by_hand, 2);
        assert_eq!(
            Subgroup::full(&h).count_two_torsion().unwrap(),
            BigUint::from(2u32)
        );
    }

    #[test]
    fn membership_in_generated_subgroup() {
        let g = arc(&[24]);
        let sub = Subgroup::new(Arc::clone(&g), vec![g.element_from_i64(&[2]).unwrap()]).unwrap();
        assert_eq!(sub.cardinality(), Cardinality::finite(12));
        assert!(sub.contains(&g.element_from_i64(&[14]).unwrap()).unwrap());
        assert!(!sub.contains(&g.element_from_i64(&[7]).unwrap()).unwrap());
    }

    #[test]
    fn infinite_ambient_subgroups() {
        let g = arc(&[0, 2]);
        let free_part = Subgroup::new(Arc::clone(&g), vec![g.generator(0)]).unwrap();
        assert_eq!(free_part.cardinality(), Cardinality::Infinite);
        assert!(free_part.count_two_torsion().is_err());

        let torsion = Subgroup::new(Arc::clone(&g), vec![g.generator(1)]).unwrap();
        assert_eq!(torsion.cardinality(), Cardinality::finite(2));

        // Index-two sublattice of Z: infinite, membership still exact.
        let evens =
            Subgroup::new(Arc::clone(&g), vec![g.element_from_i64(&[2, 0]).unwrap()]).unwrap();
        assert!(evens
            .contains(&g.element_from_i64(&[6, 0]).unwrap())
            .unwrap());
        assert!(!evens
            .contains(&g.element_from_i64(&[3, 0]).unwrap())
            .unwrap());
    }

    #[test]
    fn kernel_matches_enumeration_on_small_groups() {
        // Enumeration faithfulness on a mixed map Z8+Z2+Z9 -> Z4+Z3.
        let src = arc(&[8, 2, 9]);
        let tgt = arc(&[4, 3]);
        let phi = hom(&src, &tgt, &[vec![2, 2, 0], vec![0, 0, 1]]);
        let ker = kernel(&phi);
        let by_hand = kernel_by_enumeration(&phi);
        let card = ker.cardinality();
        assert_eq!(card, Cardinality::Finite(BigUint::from(by_hand.len())));
        for x in src.enumerate().unwrap() {
            let in_ker = ker.contains(&x).unwrap();
            let is_zero_image = phi.apply(&x).unwrap().is_zero();
            assert_eq!(in_ker, is_zero_image);
        }
    }
}
