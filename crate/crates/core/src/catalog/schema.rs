//! On-disk catalog format: UTF-8 JSON with three sections.
//!
//! ```json
//! {
//!   "groups": [ {"m": 16, "n": 6, "factors": [8, 2, 9], "generators": ["...", "...", "..."]} ],
//!   "homs":   [ {"kind": "suspension", "m": 16, "n": 6, "matrix": [[1,0,0],[0,1,0],[0,0,1]]} ],
//!   "flags":  [ {"m": 16, "n": 6, "all_suspended": true, "h_prime_zero": true, "wecken": "yes"} ]
//! }
//! ```
//!
//! Matrices are written against named generators, rows indexed by target
//! generators, columns by source generators. A hom entry is keyed by the
//! `(m, n)` of its *source* group; the target is implied by its kind.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    #[serde(default)]
    pub groups: Vec<GroupEntry>,
    #[serde(default)]
    pub homs: Vec<HomEntry>,
    #[serde(default)]
    pub flags: Vec<FlagEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupEntry {
    pub m: u32,
    pub n: u32,
    pub factors: Vec<u64>,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum HomKind {
    Suspension,
    HopfHilton,
    MinusIota,
    TotalHPrime,
    Boundary,
}

impl HomKind {
    pub fn as_str(self) -> &'static str {
        match self {
            HomKind::Suspension => "suspension",
            HomKind::HopfHilton => "hopf_hilton",
            HomKind::MinusIota => "minus_iota",
            HomKind::TotalHPrime => "total_h_prime",
            HomKind::Boundary => "boundary",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HomEntry {
    pub kind: HomKind,
    pub m: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FlagEntry {
    pub m: u32,
    pub n: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub all_suspended: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_prime_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wecken: Option<WeckenFlag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_from: Option<u32>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum WeckenFlag {
    Yes,
    No,
    Unknown,
}
