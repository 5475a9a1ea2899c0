use serde::{Deserialize, Serialize};

use kfq::kring::{CompareReport, RingTableEntry};
use kfq::pvengine::{Base, WedgeSymbol};
use kfq::verify::CheckResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub degree: u8,
    pub rank: usize,
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub degree: u8,
    /// "w" or "p"
    pub kind: String,
    pub chi: u32,
    pub indices: Vec<u32>,
    pub sign: i8,
    pub label: String,
}

impl Generator {
    pub fn from_symbol(s: &WedgeSymbol) -> Generator {
        let kind = match s.base {
            Base::W(_) => "w",
            Base::P(_) => "p",
        };
        Generator {
            degree: s.parity(),
            kind: kind.into(),
            chi: s.base.chi(),
            indices: s.indices.clone(),
            sign: s.sign,
            label: s.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroupReport {
    pub q: u64,
    pub m: usize,
    pub degrees: Vec<DegreeReport>,
    pub generators: Vec<Generator>,
    pub comparison: CompareReport,
    pub connecting_source: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectingReport {
    pub q: u64,
    pub n: usize,
    pub matrix: Vec<Vec<String>>,
    pub pass: bool,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub q: u64,
    pub precision: usize,
    pub corrupted: bool,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreduciblesReport {
    pub q: u64,
    pub count: usize,
    /// f_1, f_2, ... in canonical order, normalized to constant term 1
    pub irreducibles: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelImage {
    pub basis: usize,
    pub coords: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColimitReport {
    pub q: u64,
    pub matrix: Vec<Vec<String>>,
    pub divisible_rank: usize,
    pub lattice_rank: usize,
    pub divisible_generators: Vec<Vec<String>>,
    pub lattice_generators: Vec<Vec<String>>,
    pub level: usize,
    pub images: Vec<LevelImage>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTableReport {
    pub q: u64,
    pub m: usize,
    pub max_len: usize,
    pub entries: Vec<RingTableEntry>,
}
