//! JSON document types. Field order here is the order in the output.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Document<'a, R: Serialize> {
    pub schema_version: u32,
    pub command: &'a str,
    pub config: &'a ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<R>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub warnings: &'a [Warning],
}

#[derive(Serialize, Clone, Debug)]
pub struct ConfigEcho {
    pub p: u64,
    pub k: u32,
    pub modulus: String,
    pub seed: u64,
    pub budget: u64,
    pub workers: usize,
    pub args: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct ErrorReport {
    pub code: String,
    pub message: String,
    /// Byte offset into the offending input, for parse errors.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
}

#[derive(Serialize, Clone, Debug)]
pub struct Warning {
    pub code: &'static str,
    pub message: String,
}

#[derive(Serialize)]
pub struct RamPointOut {
    pub point: String,
    pub degree: usize,
    pub e: usize,
    pub different: usize,
    pub wild: bool,
}

#[derive(Serialize)]
pub struct AnalyzeOut {
    pub map: String,
    pub degree: usize,
    pub points: Vec<RamPointOut>,
    pub total_different: usize,
    pub riemann_hurwitz_defect: i64,
    pub rh_ok: bool,
}

#[derive(Serialize)]
pub struct ConditionOut {
    pub point: String,
    pub e: usize,
    pub delta: u8,
}

#[derive(Serialize)]
pub struct VectorOut {
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub motions: Vec<String>,
}

#[derive(Serialize)]
pub struct DeformOut {
    pub map: String,
    pub conditions: Vec<ConditionOut>,
    pub equations: usize,
    pub solver_dim: usize,
    pub formula_dim: i64,
    pub agree: bool,
    pub basis: Vec<VectorOut>,
}

#[derive(Serialize)]
pub struct ExpectedDimOut {
    pub degree: usize,
    pub e: Vec<usize>,
    pub delta: Vec<u8>,
    pub genus: usize,
    pub target_genus: usize,
    /// `null` when Riemann–Roch does not determine the value.
    pub fixed_target: Option<i64>,
    pub varying_source: i64,
    pub expected_dim: i64,
    pub branch_fiber_dim: i64,
    pub wild_family_dim: Option<i64>,
}

#[derive(Serialize)]
pub struct LevelOut {
    pub m: u32,
    pub field_size: u64,
    pub candidates: String,
    pub reduced: String,
    pub separable: String,
    pub exact: String,
    pub mod_pgl2: String,
    pub integral: bool,
}

#[derive(Serialize)]
pub struct EstimateOut {
    /// A dimension, or `empty` / `insufficient`.
    pub value: String,
    pub stable: bool,
    pub pairs: Vec<PairOut>,
}

#[derive(Serialize)]
pub struct PairOut {
    pub from: u32,
    pub to: u32,
    pub slope: String,
}

#[derive(Serialize)]
pub struct FiltersOut {
    pub separable: bool,
    pub exact: bool,
    pub unramified_elsewhere: bool,
}

#[derive(Serialize)]
pub struct CountOut {
    pub degree: usize,
    pub conditions: Vec<String>,
    pub filters: FiltersOut,
    pub levels: Vec<LevelOut>,
    pub estimate: EstimateOut,
    pub expected_dim: i64,
}

#[derive(Serialize)]
pub struct FixedCountOut {
    pub degree: usize,
    pub branches: Vec<String>,
    pub filters: FiltersOut,
    pub space_dim: usize,
    pub candidates: String,
    pub reduced: String,
    pub separable: String,
    pub exact: String,
    pub examples: Vec<String>,
}

#[derive(Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum StepOut {
    SubtractInseparable { poly: String },
    InvertTarget,
}

#[derive(Serialize)]
pub struct ReduceOut {
    pub input: String,
    pub result: String,
    pub steps: Vec<StepOut>,
    pub replay_matches: bool,
}

#[derive(Serialize)]
pub struct LiftOut {
    pub input: String,
    pub c: String,
    pub result: String,
    pub degree: usize,
    pub e_infinity: usize,
}

#[derive(Serialize)]
pub struct ConstructOut {
    pub conditions: Vec<String>,
    pub scale: String,
    pub top: String,
    pub result: String,
    pub points: Vec<RamPointOut>,
}

#[derive(Serialize)]
pub struct CheckOut {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct VerifyOut {
    pub p: u64,
    pub checks: Vec<CheckOut>,
    pub all_passed: bool,
}
