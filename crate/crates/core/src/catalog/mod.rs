//! Data model, ingestion and validation for homotopy groups of spheres
//! and the homomorphisms between them, plus the derived operations the
//! theorem engine consumes: iterated suspensions `E^r`, the combined
//! suspended Hopf-Hilton map `E^r ∘ h`, and the reflection action.
//!
//! A catalog is declared data — transcribed from published tables, never
//! derived — so loading is paranoid: every homomorphism is checked for
//! well-definedness against the declared presentations, reflection
//! actions must be involutions, and stability declarations carry an
//! isomorphism proof obligation.

pub mod schema;


use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::abelian::{image, kernel, kernel_cardinality, FgAbGroup, Homomorphism, IntMatrix};
use crate::error::{Error, Result};
use crate::types::{Cardinality, Level};

use schema::{CatalogFile, FlagEntry, GroupEntry, HomEntry, HomKind, WeckenFlag};

/// The key of the homotopy group `pi_m(S^n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SphereGroupKey {
    pub m: u32,
    pub n: u32,
}

impl SphereGroupKey {
    pub fn new(m: u32, n: u32) -> Self {
        SphereGroupKey { m, n }
    }

    /// Key one suspension up.
    pub fn suspended(self) -> Self {
        SphereGroupKey::new(self.m + 1, self.n + 1)
    }
}

impl fmt::Display for SphereGroupKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi_{}(S^{})", self.m, self.n)
    }
}

/// Tri-state for the Wecken condition at a given `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wecken {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Wecken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Wecken::Yes => write!(f, "yes"),
            Wecken::No => write!(f, "no"),
            Wecken::Unknown => write!(f, "unknown"),
        }
    }
}

/// Per-key metadata, with file overrides resolved against defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KeyFlags {
    /// Every class is a suspension, i.e. `E: pi_{m-1}(S^{n-1}) -> pi_m(S^n)`
    /// is onto. Licenses negation as the reflection action.
    pub all_suspended: bool,
    /// The Hopf-Hilton invariants vanish identically on this group.
    pub h_prime_zero: bool,
    pub wecken: Wecken,
    /// Level beyond which the suspension chain is declared stable.
    pub stable_from: u32,
}

/// `max(0, m - 2n + 2)`: past this level every suspension is an
/// isomorphism, so nothing about kernels or verdicts changes.
pub fn default_stable_from(m: u32, n: u32) -> u32 {
    (i64::from(m) - 2 * i64::from(n) + 2).max(0) as u32
}

/// Default Wecken status: yes when `n` odd, `n = 2`, `m < n`, or in the
/// stable range `m < 2n - 2`; otherwise unknown until the file says.
pub fn default_wecken(m: u32, n: u32) -> Wecken {
    let (m, n) = (i64::from(m), i64::from(n));
    if n % 2 == 1 || n == 2 || m < n || m < 2 * n - 2 {
        Wecken::Yes
    } else {
        Wecken::Unknown
    }
}

fn default_flags(key: SphereGroupKey) -> KeyFlags {
    KeyFlags {
        all_suspended: false,
        h_prime_zero: false,
        wecken: default_wecken(key.m, key.n),
        stable_from: default_stable_from(key.m, key.n),
    }
}

/// Keyed store of groups, homomorphisms and flags for sphere pairs.
/// Immutable after load; freely shareable read-only.
#[derive(Debug, Clone, PartialEq)]
pub struct Catalog {
    groups: BTreeMap<SphereGroupKey, Arc<FgAbGroup>>,
    suspensions: BTreeMap<SphereGroupKey, Homomorphism>,
    hopf_hilton: BTreeMap<(SphereGroupKey, u32), Homomorphism>,
    minus_iota: BTreeMap<SphereGroupKey, Homomorphism>,
    total_h_prime: BTreeMap<SphereGroupKey, Homomorphism>,
    boundary: BTreeMap<SphereGroupKey, Homomorphism>,
    flags: BTreeMap<SphereGroupKey, KeyFlags>,
    /// Which flag entries came from the file (needed for faithful save).
    file_flags: BTreeMap<SphereGroupKey, FlagEntry>,
}

pub fn load_catalog(path: &Path) -> Result<Catalog> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("{}: {e}", path.display())))?;
    load_catalog_str(&text)
}

pub fn load_catalog_str(text: &str) -> Result<Catalog> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))?;
    let file: CatalogFile =
        serde_json::from_value(value).map_err(|e| Error::SchemaViolation(e.to_string()))?;
    Catalog::from_file(file)
}

impl Catalog {
    pub fn from_file(file: CatalogFile) -> Result<Self> {
        let mut groups = BTreeMap::new();
        for entry in &file.groups {
            let key = SphereGroupKey::new(entry.m, entry.n);
            if entry.m < 1 || entry.n < 1 {
                return Err(Error::SchemaViolation(format!(
                    "group key ({}, {}) must have m, n >= 1",
                    entry.m, entry.n
                )));
            }
            let group = FgAbGroup::new(entry.factors.clone(), entry.generators.clone())
                .map_err(|e| Error::SchemaViolation(format!("{key}: {e}")))?;
            if groups.insert(key, Arc::new(group)).is_some() {
                return Err(Error::SchemaViolation(format!(
                    "duplicate group entry {key}"
                )));
            }
        }

        let mut flags = BTreeMap::new();
        let mut file_flags = BTreeMap::new();
        for entry in &file.flags {
            let key = SphereGroupKey::new(entry.m, entry.n);
            if !groups.contains_key(&key) {
                return Err(Error::SchemaViolation(format!(
                    "flags refer to {key}, which is not a declared group"
                )));
            }
            let mut resolved = default_flags(key);
            if let Some(v) = entry.all_suspended {
                resolved.all_suspended = v;
            }
            if let Some(v) = entry.h_prime_zero {
                resolved.h_prime_zero = v;
            }
            if let Some(v) = entry.wecken {
                resolved.wecken = match v {
                    WeckenFlag::Yes => Wecken::Yes,
                    WeckenFlag::No => Wecken::No,
                    WeckenFlag::Unknown => Wecken::Unknown,
                };
            }
            if let Some(v) = entry.stable_from {
                let default = default_stable_from(key.m, key.n);
                if v > default {
                    return Err(Error::InconsistentStability(format!(
                        "{key}: declared stable_from {v} exceeds the proven bound {default}"
                    )));
                }
                resolved.stable_from = v;
            }
            if flags.insert(key, resolved).is_some() {
                return Err(Error::SchemaViolation(format!(
                    "duplicate flags entry for {key}"
                )));
            }
            file_flags.insert(key, entry.clone());
        }
        for &key in groups.keys() {
            flags.entry(key).or_insert_with(|| default_flags(key));
        }

        let mut catalog = Catalog {
            groups,
            suspensions: BTreeMap::new(),
            hopf_hilton: BTreeMap::new(),
            minus_iota: BTreeMap::new(),
            total_h_prime: BTreeMap::new(),
            boundary: BTreeMap::new(),
            flags,
            file_flags,
        };

        for entry in &file.homs {
            catalog.insert_hom(entry)?;
        }

        catalog.validate_structure()?;
        Ok(catalog)
    }

    fn insert_hom(&mut self, entry: &HomEntry) -> Result<()> {
        let key = SphereGroupKey::new(entry.m, entry.n);
        let label = format!("{} at {key}", entry.kind.as_str());
        let source = self
            .groups
            .get(&key)
            .ok_or_else(|| Error::SchemaViolation(format!("{label}: source group missing")))?
            .clone();

        if entry.j.is_some() && entry.kind != HomKind::HopfHilton {
            return Err(Error::SchemaViolation(format!(
                "{label}: field `j` only applies to hopf_hilton entries"
            )));
        }

        let target: Arc<FgAbGroup> = match entry.kind {
            HomKind::Suspension => self.require_group(key.suspended(), &label)?,
            HomKind::HopfHilton => {
                let j = entry.j.ok_or_else(|| {
                    Error::SchemaViolation(format!("{label}: hopf_hilton needs `j`"))
                })?;
                if j < 1 {
                    return Err(Error::SchemaViolation(format!("{label}: `j` must be >= 1")));
                }
                let target_key = hopf_target_key(key, j)?;
                self.require_group(target_key, &label)?
            }
            HomKind::MinusIota => {
                if key.n % 2 != 0 {
                    return Err(Error::SchemaViolation(format!(
                        "{label}: reflection action entries only apply to even n"
                    )));
                }
                source.clone()
            }
            HomKind::TotalHPrime => Arc::new(self.total_h_prime_target(key, &label)?),
            HomKind::Boundary => {
                if key.m < 2 || key.n < 2 {
                    return Err(Error::SchemaViolation(format!(
                        "{label}: boundary needs m, n >= 2"
                    )));
                }
                self.require_group(SphereGroupKey::new(key.m - 1, key.n - 1), &label)?
            }
        };

        let matrix = matrix_from_entry(entry, target.rank(), source.rank(), &label)?;
        let hom = Homomorphism::new(source, target, matrix).map_err(|e| match e {
            Error::IllDefinedHom(msg) => Error::IllDefinedHom(format!("{label}: {msg}")),
            other => other,
        })?;

        let duplicate = match entry.kind {
            HomKind::Suspension => self.suspensions.insert(key, hom).is_some(),
            HomKind::HopfHilton => self
                .hopf_hilton
                .insert((key, entry.j.expect("checked above")), hom)
                .is_some(),
            HomKind::MinusIota => self.minus_iota.insert(key, hom).is_some(),
            HomKind::TotalHPrime => self.total_h_prime.insert(key, hom).is_some(),
            HomKind::Boundary => self.boundary.insert(key, hom).is_some(),
        };
        if duplicate {
            return Err(Error::SchemaViolation(format!(
                "duplicate hom entry: {label}"
            )));
        }
        Ok(())
    }

    fn require_group(&self, key: SphereGroupKey, label: &str) -> Result<Arc<FgAbGroup>> {
        self.groups
            .get(&key)
            .cloned()
            .ok_or_else(|| Error::SchemaViolation(format!("{label}: target group {key} missing")))
    }

    /// Target of the total Hopf-Hilton homomorphism on `pi_m'(S^n')`:
    /// the direct sum over weights `w >= 2` of `pi_m'(S^{w(n'-1)+1})`
    /// with multiplicity `w - 1`, stopping once the sphere dimension
    /// exceeds `m'` (those groups vanish).
    fn total_h_prime_target(&self, key: SphereGroupKey, label: &str) -> Result<FgAbGroup> {
        if key.n < 2 {
            return Err(Error::SchemaViolation(format!(
                "{label}: total Hopf-Hilton target undefined for n = 1"
            )));
        }
        let mut target = FgAbGroup::trivial();
        let mut w: u32 = 2;
        loop {
            let dim = w
                .checked_mul(key.n - 1)
                .and_then(|x| x.checked_add(1))
                .ok_or_else(|| Error::SchemaViolation(format!("{label}: weight overflow")))?;
            if dim > key.m {
                break;
            }
            let block_key = SphereGroupKey::new(key.m, dim);
            let block = self.require_group(block_key, label)?;
            for _ in 0..w - 1 {
                target = target.direct_sum(&block);
            }
            w += 1;
        }
        Ok(target)
    }

    /// Structural invariants beyond per-entry checks.
    fn validate_structure(&self) -> Result<()> {
        for (key, hom) in &self.minus_iota {
            if !hom.is_involution() {
                return Err(Error::SchemaViolation(format!(
                    "minus_iota at {key} is not an involution"
                )));
            }
        }

        for ((key, j), hom) in &self.hopf_hilton {
            let flags = self.flags(*key);
            if flags.h_prime_zero && !hom.matrix().is_zero() {
                return Err(Error::SchemaViolation(format!(
                    "{key} declares h_prime_zero but stores a nonzero hopf_hilton entry (j = {j})"
                )));
            }
        }

        // Stability: every stored suspension at or past the declared
        // stable level must be an isomorphism; an override below the
        // proven bound needs the suspension at that level as evidence.
        for (&key, flags) in &self.flags {
            let declared_default = default_stable_from(key.m, key.n);
            if flags.stable_from < declared_default {
                let evidence =
                    SphereGroupKey::new(key.m + flags.stable_from, key.n + flags.stable_from);
                if !self.suspensions.contains_key(&evidence) {
                    return Err(Error::InconsistentStability(format!(
                        "{key}: stable_from {} lowered below the bound {declared_default} \
                         without a stored suspension at {evidence} to certify it",
                        flags.stable_from
                    )));
                }
            }
            let mut r = flags.stable_from;
            loop {
                let at = SphereGroupKey::new(key.m + r, key.n + r);
                if !self.groups.contains_key(&at) {
                    break;
                }
                if let Some(susp) = self.suspensions.get(&at) {
                    if !is_isomorphism(susp)? {
                        return Err(Error::InconsistentStability(format!(
                            "{key}: declared stable from {}, but the suspension at {at} \
                             is not an isomorphism",
                            flags.stable_from
                        )));
                    }
                }
                r += 1;
            }
        }
        Ok(())
    }

    pub fn keys(&self) -> impl Iterator<Item = SphereGroupKey> + '_ {
        self.groups.keys().copied()
    }

    pub fn group(&self, key: SphereGroupKey) -> Result<&Arc<FgAbGroup>> {
        self.groups
            .get(&key)
            .ok_or_else(|| Error::MissingData(format!("no group {key} in the catalog")))
    }

    pub fn has_group(&self, key: SphereGroupKey) -> bool {
        self.groups.contains_key(&key)
    }

    pub fn flags(&self, key: SphereGroupKey) -> KeyFlags {
        self.flags
            .get(&key)
            .copied()
            .unwrap_or_else(|| default_flags(key))
    }

    pub fn suspension(&self, key: SphereGroupKey) -> Option<&Homomorphism> {
        self.suspensions.get(&key)
    }

    pub fn total_h_prime(&self, key: SphereGroupKey) -> Option<&Homomorphism> {
        self.total_h_prime.get(&key)
    }

    pub fn boundary(&self, key: SphereGroupKey) -> Option<&Homomorphism> {
        self.boundary.get(&key)
    }

    /// Stored Hopf-Hilton entries at `key`, ascending in `j`.
    pub fn hopf_entries(&self, key: SphereGroupKey) -> Vec<(u32, &Homomorphism)> {
        self.hopf_hilton
            .range((key, 0)..=(key, u32::MAX))
            .map(|(&(_, j), hom)| (j, hom))
            .collect()
    }

    /// The composite `E^r : pi_m(S^n) -> pi_{m+r}(S^{n+r})`, clamped to
    /// the declared stable level (beyond it the composite is unchanged
    /// up to isomorphism, so kernels and images are already final).
    pub fn suspension_power(&self, key: SphereGroupKey, r: Level) -> Result<Homomorphism> {
        let group = self.group(key)?;
        let steps = r.clamp_to(self.flags(key).stable_from);
        let mut composite = Homomorphism::identity(group);
        let mut at = key;
        for _ in 0..steps {
            let link = self.suspensions.get(&at).ok_or_else(|| {
                Error::MissingData(format!(
                    "suspension chain from {key} broken: no suspension stored at {at}"
                ))
            })?;
            composite = link.compose(&composite)?;
            at = at.suspended();
        }
        Ok(composite)
    }

    /// The two halves of `E^r ∘ h = (E^r, E^r ∘ h'_1, E^r ∘ h'_2, ...)`:
    /// the plain suspension block and the stacked suspended Hopf-Hilton
    /// blocks (`None` when no Hopf block survives). Blocks without a
    /// stored entry are zero maps and are dropped — dropping a zero
    /// block never changes an equality or kernel verdict.
    pub fn suspended_hopf_parts(
        &self,
        key: SphereGroupKey,
        r: Level,
    ) -> Result<(Homomorphism, Option<Homomorphism>)> {
        let e_r = self.suspension_power(key, r)?;
        if self.flags(key).h_prime_zero {
            return Ok((e_r, None));
        }
        let mut h_part: Option<Homomorphism> = None;
        for (j, h_j) in self.hopf_entries(key) {
            let target_key = hopf_target_key(key, j)?;
            let suspended = self.suspension_power(target_key, r)?.compose(h_j)?;
            h_part = Some(match h_part {
                None => suspended,
                Some(acc) => acc.stack(&suspended)?,
            });
        }
        Ok((e_r, h_part))
    }

    /// The combined block homomorphism `E^r ∘ h`.
    pub fn e_r_h(&self, key: SphereGroupKey, r: Level) -> Result<Homomorphism> {
        let (e_r, h_part) = self.suspended_hopf_parts(key, r)?;
        match h_part {
            None => Ok(e_r),
            Some(h) => e_r.stack(&h),
        }
    }

    /// Cardinality of `Ker(E^r ∘ h)`.
    pub fn ker_e_r_h(&self, key: SphereGroupKey, r: Level) -> Result<Cardinality> {
        Ok(kernel_cardinality(&self.e_r_h(key, r)?))
    }

    /// The reflection action `[f] -> (-iota) ∘ [f]` on `pi_m(S^n)`,
    /// `n` even: an explicit catalog entry wins; otherwise, when every
    /// class is a suspension, the action is negation; otherwise the
    /// data is genuinely missing and the engine refuses to guess.
    pub fn minus_iota_action(&self, key: SphereGroupKey) -> Result<Homomorphism> {
        if key.n % 2 != 0 {
            return Err(Error::InvalidQuery(format!(
                "reflection action requested at odd-dimensional {key}"
            )));
        }
        if let Some(hom) = self.minus_iota.get(&key) {
            return Ok(hom.clone());
        }
        let group = self.group(key)?;
        if self.flags(key).all_suspended {
            return Ok(Homomorphism::negation(group));
        }
        Err(Error::MissingData(format!(
            "no reflection action at {key}: neither an explicit minus_iota entry \
             nor the all_suspended flag"
        )))
    }

    /// Check `h'_j ∘ ((-1)^{n+1} iota ∘ -) = h'_j` for every stored
    /// Hopf-Hilton entry at `key`. Only bites for even `n`; finite
    /// groups are swept elementwise, infinite ones on generators.
    pub fn validate_reflection_invariance(&self, key: SphereGroupKey) -> Result<CheckReport> {
        let mut report = CheckReport::new(format!("reflection invariance of h' at {key}"));
        let entries = self.hopf_entries(key);
        if entries.is_empty() || key.n % 2 != 0 {
            report.pass("vacuous: no Hopf-Hilton data affected");
            return Ok(report);
        }
        let action = match self.minus_iota_action(key) {
            Ok(a) => a,
            Err(e) => {
                report.skip(format!("cannot resolve the reflection action: {e}"));
                return Ok(report);
            }
        };
        let group = self.group(key)?;
        for (j, h_j) in entries {
            let twisted = h_j.compose(&action)?;
            if twisted.agrees_with(h_j) {
                report.pass(format!("h'_{j} agrees on generators"));
            } else {
                report.fail(format!("h'_{j} changes under the reflection action"));
            }
            if group.is_finite() {
                for x in group.enumerate()? {
                    if twisted.apply(&x)? != h_j.apply(&x)? {
                        report.fail(format!("h'_{j} violated at element {x}"));
                        break;
                    }
                }
            }
        }
        Ok(report)
    }

    /// Serialize back to the file schema.
    pub fn to_file(&self) -> CatalogFile {
        let groups = self
            .groups
            .iter()
            .map(|(key, g)| GroupEntry {
                m: key.m,
                n: key.n,
                factors: g.factors().to_vec(),
                generators: g.generator_names().to_vec(),
            })
            .collect();

        let mut homs = Vec::new();
        for (key, hom) in &self.suspensions {
            homs.push(hom_entry(HomKind::Suspension, *key, None, hom));
        }
        for ((key, j), hom) in &self.hopf_hilton {
            homs.push(hom_entry(HomKind::HopfHilton, *key, Some(*j), hom));
        }
        for (key, hom) in &self.minus_iota {
            homs.push(hom_entry(HomKind::MinusIota, *key, None, hom));
        }
        for (key, hom) in &self.total_h_prime {
            homs.push(hom_entry(HomKind::TotalHPrime, *key, None, hom));
        }
        for (key, hom) in &self.boundary {
            homs.push(hom_entry(HomKind::Boundary, *key, None, hom));
        }

        CatalogFile {
            groups,
            homs,
            flags: self.file_flags.values().cloned().collect(),
        }
    }

    pub fn save_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("catalog serializes")
    }
}

/// Target key of the Hopf-Hilton invariant `h'_j` on `pi_m(S^n)`.
fn hopf_target_key(key: SphereGroupKey, j: u32) -> Result<SphereGroupKey> {
    let n = j
        .checked_mul(key.n - 1)
        .and_then(|x| x.checked_add(key.n))
        .ok_or_else(|| Error::SchemaViolation(format!("hopf_hilton j = {j} at {key} overflows")))?;
    Ok(SphereGroupKey::new(key.m, n))
}

fn matrix_from_entry(
    entry: &HomEntry,
    target_rank: usize,
    source_rank: usize,
    label: &str,
) -> Result<IntMatrix> {
    let rows = &entry.matrix;
    // Degenerate shapes collapse in JSON ([] vs [[]]); accept any
    // encoding consistent with the declared ranks.
    if target_rank == 0 || source_rank == 0 {
        let flat_len: usize = rows.iter().map(Vec::len).sum();
        if flat_len != 0 || (rows.len() != target_rank && !rows.is_empty()) {
            return Err(Error::SchemaViolation(format!(
                "{label}: matrix must be empty ({target_rank} target generators, \
                 {source_rank} source generators)"
            )));
        }
        return Ok(IntMatrix::zero(target_rank, source_rank));
    }
    if rows.len() != target_rank {
        return Err(Error::SchemaViolation(format!(
            "{label}: matrix has {} rows, target has {target_rank} generators",
            rows.len()
        )));
    }
    if rows.iter().any(|r| r.len() != source_rank) {
        return Err(Error::SchemaViolation(format!(
            "{label}: matrix rows must all have {source_rank} entries"
        )));
    }
    Ok(IntMatrix::from_i64_rows(rows))
}

fn hom_entry(kind: HomKind, key: SphereGroupKey, j: Option<u32>, hom: &Homomorphism) -> HomEntry {
    let m = hom.matrix();
    let rows = (0..m.nrows())
        .map(|i| {
            (0..m.ncols())
                .map(|jj| i64::try_from(&m[(i, jj)]).expect("catalog matrices stay in i64 range"))
                .collect()
        })
        .collect();
    HomEntry {
        kind,
        m: key.m,
        n: key.n,
        j,
        matrix: rows,
    }
}

/// Kernel trivial and every target generator reachable.
fn is_isomorphism(hom: &Homomorphism) -> Result<bool> {
    if kernel(hom).cardinality() != Cardinality::finite(1) {
        return Ok(false);
    }
    let im = image(hom);
    for i in 0..hom.target().rank() {
        if !im.contains(&hom.target().generator(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One named validation check with pass/fail/skip lines.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub lines: Vec<(CheckStatus, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            lines: vec![],
        }
    }

    pub fn pass(&mut self, detail: impl Into<String>) {
        self.lines.push((CheckStatus::Pass, detail.into()));
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.lines.push((CheckStatus::Fail, detail.into()));
    }

    pub fn skip(&mut self, detail: impl Into<String>) {
        self.lines.push((CheckStatus::Skip, detail.into()));
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|(s, _)| *s != CheckStatus::Fail)
    }
}

/// Bundled catalog: the suspension chain on `pi_{16+r}(S^{6+r})`.
pub fn bundled_toda_16_6() -> &'static str {
    include_str!("../../data/toda_16_6.catalog")
}

/// Bundled catalog: the small-dimension groups for the worked examples.
pub fn bundled_small_cases() -> &'static str {
    include_str!("../../data/small_cases.catalog")
}
