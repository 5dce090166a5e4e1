//! Value-distribution counting: how often each Nielsen value occurs
//! over all ordered pairs of classes.
//!
//! Two independent routes produce the same table: closed-form counting
//! from kernel, image and two-torsion cardinalities of the suspension
//! data, and brute-force enumeration of every pair through the full
//! theorem engine. Their exact agreement is the main correctness check
//! of the whole artifact.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::abelian::{image, kernel_cardinality, GroupElement};
use crate::catalog::{Catalog, SphereGroupKey, Wecken};
use crate::error::{Error, Result};
use crate::nielsen::NielsenEvaluator;
use crate::types::{Cardinality, GroupOrder, Level};

/// One census row: the distribution of Nielsen values at level `r`,
/// together with the kernel cardinality of `E^r ∘ h` and the two-torsion
/// count `Q_r` of the image of `E^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub r: Level,
    pub counts: BTreeMap<u64, Cardinality>,
    #[serde(rename = "ker")]
    pub ker_e_r_h: Cardinality,
    #[serde(rename = "q")]
    pub q_r: Cardinality,
}

impl CensusRow {
    pub fn count(&self, value: u64) -> Cardinality {
        self.counts
            .get(&value)
            .cloned()
            .unwrap_or_else(|| Cardinality::finite(0))
    }

    /// The finite counts must add up to the square of the class count.
    pub fn sums_to_square_of(&self, group_cardinality: &Cardinality) -> bool {
        let Cardinality::Finite(card) = group_cardinality else {
            return self.counts.values().any(|c| *c == Cardinality::Infinite);
        };
        let mut total = BigUint::ZERO;
        for c in self.counts.values() {
            match c {
                Cardinality::Finite(c) => total += c,
                Cardinality::Infinite => return false,
            }
        }
        total == card * card
    }
}

fn big(card: &Cardinality, what: &str) -> Result<BigUint> {
    match card {
        Cardinality::Finite(n) => Ok(n.clone()),
        Cardinality::Infinite => Err(Error::InfiniteSet(format!("{what} is infinite"))),
    }
}

/// Closed-form census for targets `S^n/Z2`, `n` even, under the
/// hypothesis that the Hopf-Hilton invariants vanish on `pi_m(S^n)`:
///
/// * loose pairs: `Q_r * (#Ker E^r)^2`
/// * one essential class: `2 * (#Im E^r - Q_r) * (#Ker E^r)^2`
/// * two essential classes: the rest of the square.
///
/// The diagonal case `m = n` is returned symbolically: one loose pair,
/// infinitely many pairs of each positive value.
pub fn census_closed_form(catalog: &Catalog, m: u32, n: u32, r: Level) -> Result<CensusRow> {
    if n % 2 != 0 {
        return Err(Error::HypothesisViolated(format!(
            "closed-form census needs even n, got n = {n}"
        )));
    }
    if m == n {
        let mut counts = BTreeMap::new();
        counts.insert(0, Cardinality::finite(1));
        counts.insert(1, Cardinality::Infinite);
        counts.insert(2, Cardinality::Infinite);
        return Ok(CensusRow {
            r,
            counts,
            ker_e_r_h: Cardinality::finite(1),
            q_r: Cardinality::finite(1),
        });
    }

    let key = SphereGroupKey::new(m, n);
    let group = catalog.group(key)?;
    if !catalog.flags(key).h_prime_zero {
        return Err(Error::HypothesisViolated(format!(
            "closed-form census needs h' = 0 on {key} (flag h_prime_zero)"
        )));
    }
    let card = big(&group.cardinality(), &format!("{key}"))?;

    let e_r = catalog.suspension_power(key, r)?;
    let ker = big(&kernel_cardinality(&e_r), "Ker E^r")?;
    let im = image(&e_r);
    let im_card = big(&im.cardinality(), "Im E^r")?;
    let q = im.count_two_torsion()?;

    let ker_sq = &ker * &ker;
    let loose = &q * &ker_sq;
    let single = BigUint::from(2u32) * (&im_card - &q) * &ker_sq;
    let double = &card * &card - &loose - &single;

    let mut counts = BTreeMap::new();
    counts.insert(0, Cardinality::Finite(loose));
    counts.insert(1, Cardinality::Finite(single));
    counts.insert(2, Cardinality::Finite(double));
    Ok(CensusRow {
        r,
        counts,
        ker_e_r_h: Cardinality::Finite(ker),
        q_r: Cardinality::Finite(q),
    })
}

/// Closed-form census for the sphere itself (trivial deck group):
/// `#loose = #pi_m(S^n) * #Ker(E^r ∘ h)` and the rest of the square is
/// a single essential class.
pub fn sphere_census(catalog: &Catalog, m: u32, n: u32, r: Level) -> Result<CensusRow> {
    let key = SphereGroupKey::new(m, n);
    let group = catalog.group(key)?;
    let card = big(&group.cardinality(), &format!("{key}"))?;
    let ker = big(&catalog.ker_e_r_h(key, r)?, "Ker(E^r ∘ h)")?;

    let loose = &card * &ker;
    let single = &card * &card - &loose;

    let e_r = catalog.suspension_power(key, r)?;
    let q = image(&e_r).count_two_torsion()?;

    let mut counts = BTreeMap::new();
    counts.insert(0, Cardinality::Finite(loose));
    counts.insert(1, Cardinality::Finite(single));
    Ok(CensusRow {
        r,
        counts,
        ker_e_r_h: Cardinality::Finite(ker),
        q_r: Cardinality::Finite(q),
    })
}

/// Brute-force census: run every ordered pair of classes through the
/// theorem engine and tally the verdicts. The independent oracle for
/// the closed forms above.
pub fn census_bruteforce(
    catalog: &Catalog,
    m: u32,
    n: u32,
    k: GroupOrder,
    r: Level,
) -> Result<CensusRow> {
    if n % 2 == 0 {
        if let GroupOrder::Finite(k) = k {
            if k > 2 {
                return Err(Error::InvalidQuery(format!(
                    "no free action of a group of order {k} exists on an even sphere S^{n}"
                )));
            }
        }
    }
    let key = SphereGroupKey::new(m, n);
    let group = catalog.group(key)?;
    if !group.is_finite() {
        return Err(Error::InfiniteSet(format!(
            "brute-force census over the infinite group {key}"
        )));
    }

    let evaluator = NielsenEvaluator::new(catalog, m, n, k, r)?;
    let elements: Vec<GroupElement> = group.enumerate()?.collect();

    let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
    counts.insert(0, BigUint::ZERO);
    counts.insert(1, BigUint::ZERO);
    if let GroupOrder::Finite(k) = k {
        counts.insert(k, BigUint::ZERO);
    }
    for f1 in &elements {
        for f2 in &elements {
            let verdict = evaluator.evaluate(f1, f2)?;
            *counts.entry(verdict.value).or_insert(BigUint::ZERO) += BigUint::one();
        }
    }

    let e_r = catalog.suspension_power(key, r)?;
    let q = image(&e_r).count_two_torsion()?;
    Ok(CensusRow {
        r,
        counts: counts
            .into_iter()
            .map(|(v, c)| (v, Cardinality::Finite(c)))
            .collect(),
        ker_e_r_h: catalog.ker_e_r_h(key, r)?,
        q_r: Cardinality::Finite(q),
    })
}

/// All pairs that are loose (deformable to be coincidence free), i.e.
/// with vanishing component count. Requires the bridge from `MCC` to
/// `N_0`: automatic for the sphere, the Wecken flag for larger deck
/// groups. Pairs come out in lexicographic order of coefficient vectors.
pub fn loose_pairs(
    catalog: &Catalog,
    m: u32,
    n: u32,
    k: GroupOrder,
) -> Result<Vec<(GroupElement, GroupElement)>> {
    let key = SphereGroupKey::new(m, n);
    let group = catalog.group(key)?;
    if !group.is_finite() {
        return Err(Error::InfiniteSet(format!(
            "loose-pair enumeration over the infinite group {key}"
        )));
    }
    match k {
        GroupOrder::Finite(1) => {}
        _ => {
            let wecken = catalog.flags(key).wecken;
            if wecken != Wecken::Yes {
                return Err(Error::WeckenUnknown(format!(
                    "{key}: loose pairs need MCC = N_0, but the Wecken flag is {wecken}"
                )));
            }
        }
    }

    let evaluator = NielsenEvaluator::new(catalog, m, n, k, Level::Finite(0))?;
    let elements: Vec<GroupElement> = group.enumerate()?.collect();
    let mut pairs = Vec::new();
    for f1 in &elements {
        for f2 in &elements {
            if evaluator.evaluate(f1, f2)?.value == 0 {
                pairs.push((f1.clone(), f2.clone()));
            }
        }
    }
    Ok(pairs)
}

/// Consistency of loose pairs under the double covering: a loose pair
/// of sphere maps projects to a loose pair downstairs exactly when the
/// lifting is killed by 2.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectionReport {
    pub loose_upstairs: usize,
    pub projecting: usize,
    pub consistent: bool,
}

pub fn projection_consistency(catalog: &Catalog, m: u32, n: u32) -> Result<ProjectionReport> {
    let upstairs = loose_pairs(catalog, m, n, GroupOrder::Finite(1))?;
    let downstairs = NielsenEvaluator::new(catalog, m, n, GroupOrder::Finite(2), Level::Finite(0))?;

    let two = num_bigint::BigInt::from(2);
    let mut projecting = 0;
    let mut consistent = true;
    for (f1, f2) in &upstairs {
        let projects_loose = downstairs.evaluate(f1, f2)?.value == 0;
        let two_torsion = f1.scale(&two).is_zero();
        if projects_loose {
            projecting += 1;
        }
        if projects_loose != two_torsion {
            consistent = false;
        }
    }
    Ok(ProjectionReport {
        loose_upstairs: upstairs.len(),
        projecting,
        consistent,
    })
}
