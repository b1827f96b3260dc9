mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;
use wildram::deform::{
    brill_noether_dims, expected_dim_fixed_target, expected_dim_varying_source, solve_first_order, GenusParams,
    RamCondition,
};
use wildram::moduli::{
    count_tower, enumerate_maps, linear_system_fixed_branch, BranchCondition, EstimateValue, Filters, DEFAULT_BUDGET,
};
use wildram::poly::{parse_map, parse_point, parse_rational, parse_value};
use wildram::ramify::{ramification_profile, riemann_hurwitz_defect, RamProfile};
use wildram::wildtame::{construct_wild_polynomial, golden_suite, lift_tame_to_wild, reduce_wild_to_tame, ReductionStep};
use wildram::{Error, Fe, Field, PointP1, RatMap};

use report::*;

#[derive(Parser)]
#[command(name = "wildram", version, about = "Ramification, deformations and moduli counts for rational maps in characteristic p")]
struct Cli {
    /// Characteristic of the base field.
    #[arg(long, global = true)]
    p: Option<u64>,
    /// Extension degree of the base field over F_p.
    #[arg(long, global = true, default_value_t = 1)]
    k: u32,
    /// Monic irreducible modulus for F_{p^k}, e.g. "x^2+x+2".
    #[arg(long, global = true)]
    modulus: Option<String>,
    /// Seed for random point sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Maximum number of candidate vectors per counting job.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Ramification profile and Riemann-Hurwitz check of a map.
    Analyze {
        #[arg(long)]
        map: String,
    },
    /// First-order deformations with fixed branch values.
    Deform {
        #[arg(long)]
        map: String,
        /// Condition `point:e`; repeatable.
        #[arg(long = "cond")]
        conds: Vec<String>,
    },
    /// Closed-form dimension counts.
    ExpectedDim(ExpectedDimArgs),
    /// Count maps over a tower of finite fields and estimate the dimension.
    Count(CountArgs),
    /// Strip wild ramification at infinity.
    Reduce {
        #[arg(long)]
        map: String,
    },
    /// Add c*x^p to a tame map.
    Lift {
        #[arg(long)]
        map: String,
        #[arg(long, default_value = "1")]
        c: String,
    },
    /// Degree-p polynomial with prescribed tame finite ramification.
    Construct {
        /// Condition `point:e`; repeatable.
        #[arg(long = "cond")]
        conds: Vec<String>,
        /// Scale of the derivative.
        #[arg(long, default_value = "1")]
        scale: String,
        /// Coefficient of x^p.
        #[arg(long, default_value = "1")]
        top: String,
    },
    /// Run the verification suite of worked examples.
    VerifyPaper,
}

#[derive(Args)]
struct ExpectedDimArgs {
    #[arg(long)]
    degree: usize,
    /// Ramification indices, comma separated.
    #[arg(long, value_delimiter = ',')]
    e: Vec<usize>,
    /// 0/1 indicators per index (default all 1).
    #[arg(long, value_delimiter = ',')]
    delta: Vec<u8>,
    #[arg(long, default_value_t = 0)]
    genus: usize,
    #[arg(long, default_value_t = 0)]
    target_genus: usize,
    #[arg(long, default_value_t = 0)]
    wild_count: usize,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    degree: usize,
    /// Condition `point:e` with free branch value; repeatable.
    #[arg(long = "cond")]
    conds: Vec<String>,
    /// Condition with fixed branch value, `point:e->value`; repeatable.
    /// Counts over the base field only.
    #[arg(long = "branch", conflicts_with_all = ["conds", "random"])]
    branches: Vec<String>,
    /// Indices at distinct random rational points, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "conds")]
    random: Vec<usize>,
    /// Count over F_{q^m} for m = 1..=tower.
    #[arg(long, default_value_t = 2)]
    tower: u32,
    /// Count ramification of order at least e_i instead of exactly e_i.
    #[arg(long)]
    no_exact: bool,
    /// Also require no ramification outside the marked points.
    #[arg(long)]
    unramified_elsewhere: bool,
}

struct Done {
    result: Value,
    table: String,
    warnings: Vec<Warning>,
    failed: bool,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn report(&self) -> ErrorReport {
        match self {
            CliError::Usage(m) => ErrorReport { code: "UsageError".into(), message: m.clone(), offset: None },
            CliError::Lib(e) => ErrorReport {
                code: e.code().into(),
                message: e.to_string(),
                offset: match e {
                    Error::Parse { offset, .. } => Some(*offset),
                    _ => None,
                },
            },
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn build_field(cli: &Cli) -> CliResult<Field> {
    let p = cli.p.ok_or_else(|| CliError::Usage("--p is required".into()))?;
    match &cli.modulus {
        None => Ok(Field::new(p, cli.k, None)?),
        Some(text) => {
            let base = Field::prime(p)?;
            let (num, den) = parse_rational(text, &base)?;
            if den.deg0() != 0 {
                return Err(CliError::Usage("the modulus must be a polynomial".into()));
            }
            let inv = base.inv(den.coeff(0))?;
            let m: Vec<u32> = num.scale(inv).coeffs().iter().map(|&c| base.index(c)).collect();
            Ok(Field::new(p, cli.k, Some(&m))?)
        }
    }
}

fn parse_cond(text: &str, field: &Field) -> CliResult<RamCondition> {
    let (pt, e) = text
        .rsplit_once(':')
        .ok_or_else(|| CliError::Usage(format!("condition '{text}' is not of the form point:e")))?;
    let e = e.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad index in condition '{text}'")))?;
    Ok(RamCondition::new(parse_point(pt, field)?, e))
}

fn parse_branch(text: &str, field: &Field) -> CliResult<BranchCondition> {
    let (cond, value) = text
        .split_once("->")
        .ok_or_else(|| CliError::Usage(format!("branch '{text}' is not of the form point:e->value")))?;
    let c = parse_cond(cond, field)?;
    Ok(BranchCondition { point: c.point, value: parse_point(value, field)?, e: c.e })
}

fn fmt_point(field: &Field, p: &PointP1) -> String {
    p.format(field)
}

fn fmt_cond(field: &Field, c: &RamCondition) -> String {
    format!("{}:{}", fmt_point(field, &c.point), c.e)
}

fn profile_rows(profile: &RamProfile) -> Vec<RamPointOut> {
    profile
        .points
        .iter()
        .map(|r| RamPointOut { point: r.point.render(), degree: r.degree, e: r.e, different: r.different, wild: r.wild })
        .collect()
}

fn profile_table(rows: &[RamPointOut]) -> String {
    let mut s = format!("{:<20} {:>6} {:>4} {:>6} {:>5}\n", "point", "degree", "e", "d_P", "wild");
    for r in rows {
        s += &format!("{:<20} {:>6} {:>4} {:>6} {:>5}\n", r.point, r.degree, r.e, r.different, if r.wild { "yes" } else { "no" });
    }
    s
}

fn analyze(field: &Field, map: &str) -> CliResult<Done> {
    let f = parse_map(map, field)?;
    let profile = ramification_profile(&f)?;
    let out = AnalyzeOut {
        map: f.render(),
        degree: f.degree(),
        points: profile_rows(&profile),
        total_different: profile.total_different,
        riemann_hurwitz_defect: riemann_hurwitz_defect(&profile),
        rh_ok: profile.rh_ok,
    };
    let table = format!(
        "map {} of degree {}\n{}total different {} (2d-2 = {}), defect {}\n",
        out.map,
        out.degree,
        profile_table(&out.points),
        out.total_different,
        2 * out.degree - 2,
        out.riemann_hurwitz_defect
    );
    Ok(Done { failed: !out.rh_ok, result: to_value(&out), table, warnings: Vec::new() })
}

fn deform(field: &Field, map: &str, conds: &[String]) -> CliResult<Done> {
    let f = parse_map(map, field)?;
    let conds = conds.iter().map(|c| parse_cond(c, field)).collect::<CliResult<Vec<_>>>()?;
    let r = solve_first_order(&f, &conds)?;
    let fmt = |v: &[Fe]| v.iter().map(|&x| field.format(x)).collect::<Vec<_>>();
    let out = DeformOut {
        map: f.render(),
        conditions: conds
            .iter()
            .zip(&r.deltas)
            .map(|(c, &delta)| ConditionOut { point: fmt_point(field, &c.point), e: c.e, delta })
            .collect(),
        equations: r.equations,
        solver_dim: r.solver_dim,
        formula_dim: r.formula_dim,
        agree: r.solver_dim as i64 == r.formula_dim,
        basis: r.basis.iter().map(|v| VectorOut { num: fmt(&v.num), den: fmt(&v.den), motions: fmt(&v.motions) }).collect(),
    };
    let mut table = format!("map {}\n", out.map);
    for c in &out.conditions {
        table += &format!("  condition at {}: e = {}, delta = {}\n", c.point, c.e, c.delta);
    }
    table += &format!(
        "equations {}\nsolver dimension {}\nformula dimension {}\n{}\n",
        out.equations,
        out.solver_dim,
        out.formula_dim,
        if out.agree { "agree" } else { "DISAGREE" }
    );
    Ok(Done { failed: !out.agree, result: to_value(&out), table, warnings: Vec::new() })
}

fn expected_dim(a: &ExpectedDimArgs) -> CliResult<Done> {
    let delta = if a.delta.is_empty() { vec![1; a.e.len()] } else { a.delta.clone() };
    if delta.len() != a.e.len() || delta.iter().any(|&x| x > 1) {
        return Err(CliError::Usage("--delta needs one 0/1 value per index".into()));
    }
    let pairs: Vec<(usize, u8)> = a.e.iter().copied().zip(delta.iter().copied()).collect();
    let bn = brill_noether_dims(a.degree, a.genus, &a.e, a.wild_count);
    let out = ExpectedDimOut {
        degree: a.degree,
        e: a.e.clone(),
        delta,
        genus: a.genus,
        target_genus: a.target_genus,
        fixed_target: expected_dim_fixed_target(a.degree, &pairs, a.genus).exact(),
        varying_source: expected_dim_varying_source(
            a.degree,
            GenusParams { g_source: a.genus, g_target: a.target_genus },
            &a.e,
        ),
        expected_dim: bn.expected_dim,
        branch_fiber_dim: bn.branch_fiber_dim,
        wild_family_dim: bn.wild_family_dim,
    };
    let show = |v: Option<i64>| v.map_or("indeterminate".to_string(), |x| x.to_string());
    let table = format!(
        "fixed target, first order      {}\nvarying source                 {}\nexpected dimension mod PGL2    {}\nbranch fibre dimension         {}\nwild family dimension          {}\n",
        show(out.fixed_target),
        out.varying_source,
        out.expected_dim,
        out.branch_fiber_dim,
        out.wild_family_dim.map_or("n/a".to_string(), |x| x.to_string()),
    );
    Ok(Done { result: to_value(&out), table, warnings: Vec::new(), failed: false })
}

fn filters_out(f: &Filters) -> FiltersOut {
    FiltersOut { separable: f.require_separable, exact: f.require_exact_ram, unramified_elsewhere: f.require_unramified_elsewhere }
}

fn count(field: &Field, a: &CountArgs, seed: u64, budget: u64, workers: usize) -> CliResult<Done> {
    let filters = Filters {
        require_separable: true,
        require_exact_ram: !a.no_exact,
        require_unramified_elsewhere: a.unramified_elsewhere,
    };
    if !a.branches.is_empty() {
        let bconds = a.branches.iter().map(|b| parse_branch(b, field)).collect::<CliResult<Vec<_>>>()?;
        let space = linear_system_fixed_branch(field, a.degree, &bconds)?;
        let (t, maps) = enumerate_maps(&space, &filters, budget, workers, 10)?;
        let out = FixedCountOut {
            degree: a.degree,
            branches: bconds
                .iter()
                .map(|b| format!("{}:{}->{}", fmt_point(field, &b.point), b.e, fmt_point(field, &b.value)))
                .collect(),
            filters: filters_out(&filters),
            space_dim: space.basis.len(),
            candidates: t.candidates.to_string(),
            reduced: t.reduced.to_string(),
            separable: t.separable.to_string(),
            exact: t.exact.to_string(),
            examples: maps.iter().map(|m| m.render()).collect(),
        };
        let table = format!(
            "solution space dimension {}\ncandidates {}  reduced {}  separable {}  exact {}\n{}",
            out.space_dim,
            out.candidates,
            out.reduced,
            out.separable,
            out.exact,
            out.examples.iter().map(|m| format!("  {m}\n")).collect::<String>()
        );
        return Ok(Done { result: to_value(&out), table, warnings: Vec::new(), failed: false });
    }
    let conds: Vec<RamCondition> = if a.random.is_empty() {
        a.conds.iter().map(|c| parse_cond(c, field)).collect::<CliResult<Vec<_>>>()?
    } else {
        let mut pts: Vec<PointP1> =
            field.elements().map(PointP1::Affine).chain(std::iter::once(PointP1::Infinity)).collect();
        if a.random.len() > pts.len() {
            return Err(CliError::Usage("more random points requested than the field has".into()));
        }
        pts.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        pts.iter().zip(&a.random).map(|(&p, &e)| RamCondition::new(p, e)).collect()
    };
    if a.tower == 0 {
        return Err(CliError::Usage("--tower must be at least 1".into()));
    }
    let levels: Vec<u32> = (1..=a.tower).collect();
    let r = count_tower(field, a.degree, &conds, &levels, &filters, budget, workers)?;
    let mut warnings = Vec::new();
    let rows: Vec<LevelOut> = r
        .levels
        .iter()
        .map(|l| {
            let q = l.mod_pgl2(&filters);
            if !q.is_integral() {
                warnings.push(Warning {
                    code: "NonIntegralQuotient",
                    message: format!("level {}: count / |PGL2| = {} is not an integer", l.m, q.render()),
                });
            }
            LevelOut {
                m: l.m,
                field_size: l.field_size,
                candidates: l.normal_forms.candidates.to_string(),
                reduced: l.totals.reduced.to_string(),
                separable: l.totals.separable.to_string(),
                exact: l.totals.exact.to_string(),
                mod_pgl2: q.render(),
                integral: q.is_integral(),
            }
        })
        .collect();
    let e_list: Vec<usize> = conds.iter().map(|c| c.e).filter(|&e| e > 0).collect();
    let expected = brill_noether_dims(a.degree, 0, &e_list, 0).expected_dim;
    let value = match r.estimate.value {
        EstimateValue::Dimension(d) => d.to_string(),
        EstimateValue::Empty => "empty".into(),
        EstimateValue::Insufficient => "insufficient".into(),
    };
    if matches!(r.estimate.value, EstimateValue::Dimension(_)) && !r.estimate.stable {
        warnings.push(Warning { code: "UnstableEstimate", message: "pairwise estimates disagree".into() });
    }
    if r.estimate.value != EstimateValue::Dimension(expected) {
        warnings.push(Warning {
            code: "EstimateDiffersFromExpected",
            message: format!("estimate {value} differs from the expected dimension {expected}"),
        });
    }
    let out = CountOut {
        degree: a.degree,
        conditions: conds.iter().map(|c| fmt_cond(field, c)).collect(),
        filters: filters_out(&filters),
        levels: rows,
        estimate: EstimateOut {
            value: value.clone(),
            stable: r.estimate.stable,
            pairs: r
                .estimate
                .pairs
                .iter()
                .map(|&(from, to, s)| PairOut { from, to, slope: format!("{s:.4}") })
                .collect(),
        },
        expected_dim: expected,
    };
    let mut table = format!("degree {} conditions [{}]\n", out.degree, out.conditions.join(", "));
    table += &format!("{:>3} {:>10} {:>14} {:>14} {:>14} {:>12}\n", "m", "Q", "separable", "exact", "normal forms", "mod PGL2");
    for l in &out.levels {
        table += &format!(
            "{:>3} {:>10} {:>14} {:>14} {:>14} {:>12}\n",
            l.m, l.field_size, l.separable, l.exact, l.candidates, l.mod_pgl2
        );
    }
    table += &format!("estimate {value} (stable {}), expected {expected}\n", out.estimate.stable);
    Ok(Done { result: to_value(&out), table, warnings, failed: false })
}

fn reduce(field: &Field, map: &str) -> CliResult<Done> {
    let f = parse_map(map, field)?;
    let (g, t) = reduce_wild_to_tame(&f)?;
    let steps: Vec<StepOut> = t
        .steps
        .iter()
        .map(|s| match s {
            ReductionStep::SubtractInseparable(q) => StepOut::SubtractInseparable { poly: q.render() },
            ReductionStep::InvertTarget => StepOut::InvertTarget,
        })
        .collect();
    let out = ReduceOut { input: f.render(), result: g.render(), replay_matches: t.replay()? == g, steps };
    let mut table = format!("input  {}\n", out.input);
    for s in &out.steps {
        match s {
            StepOut::SubtractInseparable { poly } => table += &format!("  subtract {poly}\n"),
            StepOut::InvertTarget => table += "  invert target\n",
        }
    }
    table += &format!("result {}\n", out.result);
    Ok(Done { failed: !out.replay_matches, result: to_value(&out), table, warnings: Vec::new() })
}

fn at_infinity(f: &RatMap) -> CliResult<usize> {
    Ok(wildram::ramify::ramification_index(f, &PointP1::Infinity)?)
}

fn lift(field: &Field, map: &str, c: &str) -> CliResult<Done> {
    let f = parse_map(map, field)?;
    let c = parse_value(c, field)?;
    let g = lift_tame_to_wild(&f, c)?;
    let out = LiftOut { input: f.render(), c: field.format(c), result: g.render(), degree: g.degree(), e_infinity: at_infinity(&g)? };
    let table = format!("{} + {}*x^p = {}\ndegree {}, e at infinity {}\n", out.input, out.c, out.result, out.degree, out.e_infinity);
    Ok(Done { result: to_value(&out), table, warnings: Vec::new(), failed: false })
}

fn construct(field: &Field, conds: &[String], scale: &str, top: &str) -> CliResult<Done> {
    let conds = conds.iter().map(|c| parse_cond(c, field)).collect::<CliResult<Vec<_>>>()?;
    let pts = conds
        .iter()
        .map(|c| match c.point {
            PointP1::Affine(a) => Ok((a, c.e)),
            PointP1::Infinity => Err(CliError::Usage("construct takes finite points only".into())),
        })
        .collect::<CliResult<Vec<_>>>()?;
    let (scale, top) = (parse_value(scale, field)?, parse_value(top, field)?);
    let f = construct_wild_polynomial(field, &pts, scale, top)?;
    let profile = ramification_profile(&f)?;
    let out = ConstructOut {
        conditions: conds.iter().map(|c| fmt_cond(field, c)).collect(),
        scale: field.format(scale),
        top: field.format(top),
        result: f.render(),
        points: profile_rows(&profile),
    };
    let table = format!("{}\n{}", out.result, profile_table(&out.points));
    Ok(Done { result: to_value(&out), table, warnings: Vec::new(), failed: false })
}

fn verify(p: u64, k: u32, workers: usize) -> CliResult<Done> {
    let mut warnings = Vec::new();
    if k != 1 {
        warnings.push(Warning { code: "ExtensionIgnored", message: "the suite runs over prime fields; --k is ignored".into() });
    }
    let suite = golden_suite(p, workers);
    for c in &suite {
        for s in &c.skipped {
            warnings.push(Warning { code: "DegenerateSample", message: format!("{}: skipped {s}", c.name) });
        }
    }
    let checks: Vec<CheckOut> =
        suite.into_iter().map(|c| CheckOut { name: c.name, passed: c.passed, detail: c.detail }).collect();
    let all_passed = checks.iter().all(|c| c.passed);
    let mut table = String::new();
    for c in &checks {
        table += &format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let out = VerifyOut { p, checks, all_passed };
    Ok(Done { failed: !all_passed, result: to_value(&out), table, warnings })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Deform { .. } => "deform",
        Command::ExpectedDim(_) => "expected-dim",
        Command::Count(_) => "count",
        Command::Reduce { .. } => "reduce",
        Command::Lift { .. } => "lift",
        Command::Construct { .. } => "construct",
        Command::VerifyPaper => "verify-paper",
    }
}

fn dispatch(cli: &Cli) -> CliResult<Done> {
    if let Command::ExpectedDim(a) = &cli.command {
        return expected_dim(a);
    }
    let field = build_field(cli)?;
    match &cli.command {
        Command::Analyze { map } => analyze(&field, map),
        Command::Deform { map, conds } => deform(&field, map, conds),
        Command::ExpectedDim(_) => unreachable!(),
        Command::Count(a) => count(&field, a, cli.seed, cli.budget, cli.workers),
        Command::Reduce { map } => reduce(&field, map),
        Command::Lift { map, c } => lift(&field, map, c),
        Command::Construct { conds, scale, top } => construct(&field, conds, scale, top),
        Command::VerifyPaper => verify(field.characteristic() as u64, cli.k, cli.workers),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_json<R: Serialize>(doc: &Document<R>) {
    emit(&(serde_json::to_string_pretty(doc).expect("report types serialize") + "\n"));
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let wants_json = args.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
                || args.iter().any(|a| a == "--format=json");
            if wants_json && e.use_stderr() {
                let config = ConfigEcho { p: 0, k: 0, modulus: String::new(), seed: 0, budget: 0, workers: 0, args: args[1..].to_vec() };
                let err = ErrorReport { code: "UsageError".into(), message: e.to_string().trim().to_string(), offset: None };
                print_json::<Value>(&Document {
                    schema_version: SCHEMA_VERSION,
                    command: "",
                    config: &config,
                    result: None,
                    error: Some(err),
                    warnings: &[],
                });
                return ExitCode::from(2);
            }
            e.exit();
        }
    };
    let field = build_field(&cli).ok();
    let config = ConfigEcho {
        p: cli.p.unwrap_or(0),
        k: cli.k,
        modulus: field.as_ref().filter(|f| f.degree() > 1).map(modulus_string).unwrap_or_default(),
        seed: cli.seed,
        budget: cli.budget,
        workers: cli.workers,
        args: args[1..].to_vec(),
    };
    let name = command_name(&cli.command);
    match dispatch(&cli) {
        Ok(done) => {
            match cli.format {
                Format::Json => print_json(&Document {
                    schema_version: SCHEMA_VERSION,
                    command: name,
                    config: &config,
                    result: Some(&done.result),
                    error: None,
                    warnings: &done.warnings,
                }),
                Format::Table => {
                    emit(&format!("{}seed {}\n", done.table, cli.seed));
                    for w in &done.warnings {
                        eprintln!("warning [{}]: {}", w.code, w.message);
                    }
                }
            }
            if done.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let err = e.report();
            match cli.format {
                Format::Json => print_json::<Value>(&Document {
                    schema_version: SCHEMA_VERSION,
                    command: name,
                    config: &config,
                    result: None,
                    error: Some(err),
                    warnings: &[],
                }),
                Format::Table => eprintln!("error [{}]: {}", err.code, err.message),
            }
            ExitCode::from(2)
        }
    }
}

fn modulus_string(f: &Field) -> String {
    let base = Field::prime(f.characteristic() as u64).expect("characteristic is prime");
    let coeffs: Vec<Fe> = f.modulus().iter().map(|&c| base.from_u64(c as u64)).collect();
    wildram::Poly::new(&base, coeffs).render()
}
