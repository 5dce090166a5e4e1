//! The theorem engine: Nielsen coincidence numbers `N_r(f_1, f_2)` for
//! maps `S^m -> S^n/G`, decided from the liftings through the suspended
//! Hopf-Hilton data of the catalog.
//!
//! The case split: for odd `n` the pair is compared through
//! `E^r ∘ h`; for even `n` and trivial deck group through `E^r ∘ h`
//! against the reflected second lifting; for even `n` with deck group
//! of order two there is a three-way criterion whose middle case is the
//! only way the value 1 can ever appear. For `r >= 1` the reflection
//! acts as negation on suspended values and leaves Hopf-Hilton
//! components alone, so no unstable reflection data is needed there.

use serde::Serialize;

use crate::abelian::{GroupElement, Homomorphism};
use crate::catalog::{Catalog, SphereGroupKey};
use crate::error::{Error, Result};
use crate::types::{Cardinality, GroupOrder, Level};

/// Per-class invariant flags a caller may supply for the minimum-number
/// exception rules. `None` means unknown.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    /// The common lifting has Kervaire invariant one.
    pub kervaire_one: Option<bool>,
    /// The Hopf invariant of the common lifting is not divisible by 4.
    pub hopf_not_divisible_by_4: Option<bool>,
}

/// A single Nielsen-number query: the dimensions, the order of the deck
/// group, the suspension level, and the two liftings.
#[derive(Debug, Clone)]
pub struct NielsenQuery {
    pub m: u32,
    pub n: u32,
    pub k: GroupOrder,
    pub r: Level,
    pub f1: GroupElement,
    pub f2: GroupElement,
    pub flags: ClassFlags,
}

impl NielsenQuery {
    pub fn new(
        catalog: &Catalog,
        m: u32,
        n: u32,
        k: GroupOrder,
        r: Level,
        f1_coeffs: &[i64],
        f2_coeffs: &[i64],
    ) -> Result<Self> {
        if m < 2 || n < 2 {
            return Err(Error::InvalidQuery(format!(
                "need m, n >= 2, got ({m}, {n})"
            )));
        }
        if n % 2 == 0 {
            if let GroupOrder::Finite(k) = k {
                if k > 2 {
                    return Err(Error::InvalidQuery(format!(
                        "no free action of a group of order {k} exists on an even sphere S^{n}"
                    )));
                }
            }
        }
        if let GroupOrder::Finite(0) = k {
            return Err(Error::InvalidQuery("deck group order must be >= 1".into()));
        }
        let group = catalog.group(SphereGroupKey::new(m, n))?;
        let f1 = group.element_from_i64(f1_coeffs).map_err(|e| {
            Error::InvalidQuery(format!("lifting f1 does not fit pi_{m}(S^{n}): {e}"))
        })?;
        let f2 = group.element_from_i64(f2_coeffs).map_err(|e| {
            Error::InvalidQuery(format!("lifting f2 does not fit pi_{m}(S^{n}): {e}"))
        })?;
        Ok(NielsenQuery {
            m,
            n,
            k,
            r,
            f1,
            f2,
            flags: ClassFlags::default(),
        })
    }

    pub fn with_flags(mut self, flags: ClassFlags) -> Self {
        self.flags = flags;
        self
    }

    pub fn key(&self) -> SphereGroupKey {
        SphereGroupKey::new(self.m, self.n)
    }

    pub fn at_level(&self, r: Level) -> NielsenQuery {
        let mut q = self.clone();
        q.r = r;
        q
    }
}

/// Which clause of the case analysis fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// Infinite fundamental group: all Nielsen numbers vanish.
    #[serde(rename = "N_INFINITE_PI1")]
    InfinitePi1,
    #[serde(rename = "N_ODD")]
    NOdd,
    #[serde(rename = "N_EVEN_TRIVIAL_G")]
    NEvenTrivialG,
    #[serde(rename = "N_EVEN_Z2_CASE_2")]
    NEvenZ2Case2,
    #[serde(rename = "N_EVEN_Z2_CASE_1")]
    NEvenZ2Case1,
    #[serde(rename = "N_EVEN_Z2_CASE_0")]
    NEvenZ2Case0,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::InfinitePi1 => "N_INFINITE_PI1",
            Clause::NOdd => "N_ODD",
            Clause::NEvenTrivialG => "N_EVEN_TRIVIAL_G",
            Clause::NEvenZ2Case2 => "N_EVEN_Z2_CASE_2",
            Clause::NEvenZ2Case1 => "N_EVEN_Z2_CASE_1",
            Clause::NEvenZ2Case0 => "N_EVEN_Z2_CASE_0",
        }
    }
}

/// The comparison data the verdict was decided on, for audit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `E^r` of the two liftings, then of the reflected second lifting.
    pub e_r_f1: Vec<String>,
    pub e_r_f2: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e_r_reflected_f2: Option<Vec<String>>,
    /// Suspended Hopf-Hilton components, when any block is present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_f1: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_f2: Option<Vec<String>>,
}

fn coeff_strings(x: &GroupElement) -> Vec<String> {
    x.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NielsenVerdict {
    pub value: u64,
    pub clause: Clause,
    pub witness: Witness,
}

/// How the reflection `(-iota) ∘ -` is evaluated at this level.
enum Reflection {
    /// Not used (odd n).
    Unused,
    /// Explicit endomorphism from the catalog data (r = 0).
    Action(Homomorphism),
    /// `E^r((-iota) ∘ x) = -E^r(x)` for `r >= 1`; Hopf-Hilton
    /// components are reflection-invariant, so they pass through.
    Negate,
}

/// Precomputed evaluation context for one `(m, n, k, r)`. The catalog
/// lookups and compositions are hoisted; each pair still runs the full
/// case analysis.
pub struct NielsenEvaluator {
    k: GroupOrder,
    n_even: bool,
    e_r: Homomorphism,
    h_part: Option<Homomorphism>,
    reflection: Reflection,
}

impl NielsenEvaluator {
    pub fn new(catalog: &Catalog, m: u32, n: u32, k: GroupOrder, r: Level) -> Result<Self> {
        let key = SphereGroupKey::new(m, n);
        let (e_r, h_part) = catalog.suspended_hopf_parts(key, r)?;
        let n_even = n % 2 == 0;
        let needs_reflection = n_even && !matches!(k, GroupOrder::Infinite);
        let reflection = if !needs_reflection {
            Reflection::Unused
        } else {
            match r {
                Level::Finite(0) => Reflection::Action(catalog.minus_iota_action(key)?),
                _ => Reflection::Negate,
            }
        };
        Ok(NielsenEvaluator {
            k,
            n_even,
            e_r,
            h_part,
            reflection,
        })
    }

    fn h_values(&self, x: &GroupElement) -> Result<Option<GroupElement>> {
        self.h_part.as_ref().map(|h| h.apply(x)).transpose()
    }

    pub fn evaluate(&self, f1: &GroupElement, f2: &GroupElement) -> Result<NielsenVerdict> {
        let e_f1 = self.e_r.apply(f1)?;
        let e_f2 = self.e_r.apply(f2)?;
        let h_f1 = self.h_values(f1)?;
        let h_f2 = self.h_values(f2)?;

        let mut witness = Witness {
            e_r_f1: coeff_strings(&e_f1),
            e_r_f2: coeff_strings(&e_f2),
            e_r_reflected_f2: None,
            h_f1: h_f1.as_ref().map(coeff_strings),
            h_f2: h_f2.as_ref().map(coeff_strings),
        };

        let k = match self.k {
            GroupOrder::Infinite => {
                return Ok(NielsenVerdict {
                    value: 0,
                    clause: Clause::InfinitePi1,
                    witness,
                });
            }
            GroupOrder::Finite(k) => k,
        };

        if !self.n_even {
            let differ = e_f1 != e_f2 || h_f1 != h_f2;
            return Ok(NielsenVerdict {
                value: if differ { k } else { 0 },
                clause: Clause::NOdd,
                witness,
            });
        }

        // Even n: the reflected second lifting enters the comparison.
        let (e_ref_f2, h_ref_f2) = match &self.reflection {
            Reflection::Action(mu) => {
                let reflected = mu.apply(f2)?;
                (self.e_r.apply(&reflected)?, self.h_values(&reflected)?)
            }
            Reflection::Negate => (e_f2.neg(), h_f2.clone()),
            Reflection::Unused => unreachable!("reflection resolved for even n"),
        };
        witness.e_r_reflected_f2 = Some(coeff_strings(&e_ref_f2));

        if k == 1 {
            let differ = e_f1 != e_ref_f2 || h_f1 != h_ref_f2;
            return Ok(NielsenVerdict {
                value: if differ { 1 } else { 0 },
                clause: Clause::NEvenTrivialG,
                witness,
            });
        }

        // k == 2 (checked at query construction).
        let h_differs = h_f1 != h_f2;
        let member = e_f1 == e_f2 || e_f1 == e_ref_f2;
        let (value, clause) = if h_differs || !member {
            (2, Clause::NEvenZ2Case2)
        } else if e_f2 != e_ref_f2 {
            (1, Clause::NEvenZ2Case1)
        } else {
            (0, Clause::NEvenZ2Case0)
        };
        Ok(NielsenVerdict {
            value,
            clause,
            witness,
        })
    }
}

/// `N_r(f_1, f_2)` for one query.
pub fn nielsen_number(catalog: &Catalog, q: &NielsenQuery) -> Result<NielsenVerdict> {
    let eval = NielsenEvaluator::new(catalog, q.m, q.n, q.k, q.r)?;
    eval.evaluate(&q.f1, &q.f2)
}

/// Partition of the levels `r = 0, .., stable_from, inf` into classes on
/// which `N_r` is the same function of pairs. Two consecutive levels
/// give the same function exactly when `#Ker(E^r ∘ h)` does not grow.
#[derive(Debug, Clone, Serialize)]
pub struct NielsenProfile {
    pub kernel_cardinalities: Vec<(Level, Cardinality)>,
    pub classes: Vec<Vec<Level>>,
}

impl NielsenProfile {
    pub fn distinct_functions(&self) -> usize {
        self.classes.len()
    }
}

pub fn nielsen_function_profile(
    catalog: &Catalog,
    m: u32,
    n: u32,
    k: GroupOrder,
) -> Result<NielsenProfile> {
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
    let stable_from = catalog.flags(key).stable_from;
    let mut levels: Vec<Level> = (0..=stable_from).map(Level::Finite).collect();
    levels.push(Level::Infinity);

    if !group.is_finite() {
        // Infinite groups: the stably suspended Hopf data stays
        // injective, every kernel is trivial and all the functions
        // coincide.
        let kernels = levels
            .iter()
            .map(|&r| (r, Cardinality::finite(1)))
            .collect();
        return Ok(NielsenProfile {
            kernel_cardinalities: kernels,
            classes: vec![levels],
        });
    }

    let mut kernels = Vec::new();
    for &r in &levels {
        kernels.push((r, catalog.ker_e_r_h(key, r)?));
    }

    let mut classes: Vec<Vec<Level>> = Vec::new();
    for (i, (r, card)) in kernels.iter().enumerate() {
        if i == 0 || *card != kernels[i - 1].1 {
            classes.push(vec![*r]);
        } else {
            classes.last_mut().expect("nonempty").push(*r);
        }
    }
    Ok(NielsenProfile {
        kernel_cardinalities: kernels,
        classes,
    })
}

/// Evaluate `N_r` for all levels up to stability and confirm the
/// sequence never increases.
#[derive(Debug, Clone, Serialize)]
pub struct HierarchyReport {
    pub values: Vec<(Level, u64)>,
    pub nonincreasing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

pub fn hierarchy_check(catalog: &Catalog, q: &NielsenQuery) -> Result<HierarchyReport> {
    let stable_from = catalog.flags(q.key()).stable_from;
    let mut levels: Vec<Level> = (0..=stable_from).map(Level::Finite).collect();
    levels.push(Level::Infinity);

    let mut values = Vec::new();
    for &r in &levels {
        let verdict = nielsen_number(catalog, &q.at_level(r))?;
        values.push((r, verdict.value));
    }
    let mut failure = None;
    for w in values.windows(2) {
        if w[1].1 > w[0].1 {
            failure = Some(format!(
                "N_{} = {} exceeds N_{} = {}",
                w[1].0, w[1].1, w[0].0, w[0].1
            ));
            break;
        }
    }
    Ok(HierarchyReport {
        nonincreasing: failure.is_none(),
        values,
        failure,
    })
}
