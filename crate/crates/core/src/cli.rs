//! Command-line front end. Every invocation writes one JSON report to stdout.
//!
//! Report layout:
//!
//! ```text
//! {
//!   "command": "<subcommand>",
//!   "request": { "argv": [...], "profiles": "bundled" | "<path>" },
//!   "status":  "ok" | "input_error" | "inconsistent",
//!   "result":  { ... } | null,
//!   "checks":  [ { "name": ..., "passed": true|false, ... } ],
//!   "error":   null | { "kind": ..., "message": ..., "witness": { ... } }
//! }
//! ```
//!
//! Polynomials appear as coefficient arrays indexed by exponent. Exit codes:
//! 0 on success, 1 for malformed input or failed validation, 2 when the
//! inputs are mathematically inconsistent or a self-check fails.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::jprofile::{p_power, JProfile, ProfileRegistry};
use crate::motives::{admissible_j, decompose, motive_poincare, TwistMultiset};
use crate::polyring::IntPoly;
use crate::rootdata::{flag_poincare, parabolic_poincare, severi_brauer_poincare, DynkinType};
use crate::selfcheck::{run_all, Budget};
use crate::splitting::{split_transform, verify_identity, IdentityCheck, SplittingInput};
use crate::typed::{Component, InvolutionData};

/// Environment variable consulted when `--profiles` is absent.
pub const PROFILES_ENV: &str = "JINV_PROFILES";

#[derive(Debug, Parser)]
#[command(name = "jinv", version, about = "Exact J-invariant calculator")]
struct Cli {
    /// Profile table (JSON). Defaults to $JINV_PROFILES, then the bundled table.
    #[arg(long, global = true)]
    profiles: Option<PathBuf>,

    /// Pretty-print the report.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Poincaré polynomials of G/B, G/P and Severi-Brauer varieties.
    Poincare(PoincareArgs),
    /// Look up and validate J-invariant profiles.
    Profile(ProfileArgs),
    /// Motive of R_p(G), twist decomposition and admissible J-invariants.
    Motive(MotiveArgs),
    /// J-invariant over the generic splitting field of a Tits algebra.
    Split(SplitArgs),
    /// Type D_n formulas for algebras with orthogonal involution.
    #[command(name = "typeD")]
    TypeD(TypeDArgs),
    /// Run every oracle-versus-formula suite.
    Selfcheck(SelfcheckArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["flag", "parabolic", "severi_brauer"])))]
struct PoincareArgs {
    /// Series letter (A..G).
    #[arg(long = "type")]
    series: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Full flag variety G/B.
    #[arg(long)]
    flag: bool,
    /// G/P for the Levi subgroup on these simple roots (comma separated, Bourbaki numbering).
    #[arg(long)]
    parabolic: Option<String>,
    /// Severi-Brauer variety of an algebra of this degree.
    #[arg(long = "severi-brauer")]
    severi_brauer: Option<usize>,
}

#[derive(Debug, Args)]
struct ProfileArgs {
    #[arg(long = "type")]
    series: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    p: Option<u32>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("px_source").args(["px", "px_flag", "px_parabolic", "px_severi_brauer"])))]
struct MotiveArgs {
    #[arg(long = "type")]
    series: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    p: u32,
    /// Degrees of a profile given inline instead of from the table.
    #[arg(long)]
    degrees: Option<String>,
    /// Bounds of an inline profile.
    #[arg(long)]
    bounds: Option<String>,
    /// J-invariant components.
    #[arg(long)]
    j: Option<String>,
    /// Poincaré polynomial of X as coefficients.
    #[arg(long, allow_hyphen_values = true)]
    px: Option<String>,
    /// Use the flag variety of --type/--rank as X.
    #[arg(long = "px-flag")]
    px_flag: bool,
    /// Use G/P_theta of --type/--rank as X.
    #[arg(long = "px-parabolic")]
    px_parabolic: Option<String>,
    /// Use the Severi-Brauer variety of an algebra of this degree as X.
    #[arg(long = "px-severi-brauer")]
    px_severi_brauer: Option<usize>,
    /// List every J-invariant compatible with X.
    #[arg(long)]
    admissible: bool,
}

#[derive(Debug, Args)]
struct SplitArgs {
    #[arg(long = "type")]
    series: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    degrees: Option<String>,
    /// Bounds for inline degrees; defaults to the J components themselves.
    #[arg(long)]
    bounds: Option<String>,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    j: String,
    /// Degree of the Tits algebra.
    #[arg(long)]
    n: u64,
    #[arg(long)]
    jga: u32,
    /// Check this J-invariant over F_A instead of the computed one.
    #[arg(long)]
    after: Option<String>,
    /// Replace n by its p-primary part.
    #[arg(long = "p-primary")]
    p_primary: bool,
}

#[derive(Debug, Args)]
struct TypeDArgs {
    /// A has degree 2n.
    #[arg(long)]
    n: u64,
    #[arg(long = "iA")]
    ia: u32,
    #[arg(long)]
    iplus: u32,
    #[arg(long)]
    iminus: u32,
    /// J-invariant to reduce over F_A (uses the D_n profile at p = 2).
    #[arg(long)]
    j: Option<String>,
}

#[derive(Debug, Args)]
struct SelfcheckArgs {
    /// Smaller randomized suites.
    #[arg(long)]
    quick: bool,
}

type Handler = fn(&mut Report, &ProfileRegistry, &Command) -> Result<()>;

pub struct Outcome {
    pub code: u8,
    pub output: String,
}

struct Report {
    command: String,
    request: Value,
    result: Option<Value>,
    checks: Vec<Value>,
    error: Option<(Error, Value)>,
    failed_checks_inconsistent: bool,
}

impl Report {
    fn new(command: &str, request: Value) -> Self {
        Report {
            command: command.to_string(),
            request,
            result: None,
            checks: Vec::new(),
            error: None,
            failed_checks_inconsistent: false,
        }
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(json!({ "name": name, "passed": passed }));
    }

    fn code(&self) -> u8 {
        match &self.error {
            Some((e, _)) if e.is_inconsistency() => 2,
            Some(_) => 1,
            None if self.failed_checks_inconsistent => 2,
            None => 0,
        }
    }

    fn status(&self) -> &'static str {
        match self.code() {
            0 => "ok",
            1 => "input_error",
            _ => "inconsistent",
        }
    }

    fn to_value(&self) -> Value {
        let error = self.error.as_ref().map(|(e, witness)| {
            json!({ "kind": error_kind(e), "message": e.to_string(), "witness": witness })
        });
        json!({
            "command": self.command,
            "request": self.request,
            "status": self.status(),
            "result": self.result,
            "checks": self.checks,
            "error": error,
        })
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotDivisible { .. } => "NotDivisible",
        Error::NegativeMultiplicity { .. } => "NegativeMultiplicity",
        Error::InvalidDynkinType { .. } => "InvalidDynkinType",
        Error::InvalidSubset { .. } => "InvalidSubset",
        Error::GroupTooLarge { .. } => "GroupTooLarge",
        Error::Schema(_) => "SchemaError",
        Error::Consistency { .. } => "ConsistencyError",
        Error::LengthMismatch { .. } => "LengthMismatch",
        Error::InvalidInput(_) => "InvalidInput",
        Error::InconsistentInput(_) => "InconsistentInput",
        Error::InvalidData(_) => "InvalidData",
        Error::NotHalfSpin { .. } => "NotHalfSpin",
    }
}

fn witness(e: &Error) -> Value {
    match e {
        Error::NotDivisible { dividend, divisor } => {
            json!({ "dividend": poly_json(dividend), "divisor": poly_json(divisor) })
        }
        Error::NegativeMultiplicity { quotient, degree } => {
            json!({ "quotient": poly_json(quotient), "degree": degree })
        }
        Error::InvalidData(violations) => json!({ "violations": violations }),
        _ => Value::Null,
    }
}

fn big_json(c: &BigInt) -> Value {
    Value::Number(
        c.to_string()
            .parse()
            .expect("decimal integer is valid JSON"),
    )
}

pub fn poly_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big_json).collect())
}

fn twists_json(m: &TwistMultiset) -> Value {
    let map: Map<String, Value> = m
        .counts()
        .iter()
        .map(|(i, a)| (i.to_string(), big_json(a)))
        .collect();
    Value::Object(map)
}

fn identity_json(c: &IdentityCheck) -> Value {
    json!({
        "holds": c.holds,
        "lhs": poly_json(&c.lhs),
        "rhs": poly_json(&c.rhs),
        "quotient_form_cross": c.quotient_form_cross,
        "quotient_form_exact": c.quotient_form_exact,
    })
}

fn profile_json(p: &JProfile) -> Value {
    json!({
        "type": p.dynkin_type().map(|t| t.to_string()),
        "p": p.p(),
        "r": p.r(),
        "degrees": p.degrees(),
        "bounds": p.bounds(),
    })
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("cannot parse {what} entry {x:?}")))
        })
        .collect()
}

fn dynkin(series: &Option<String>, rank: Option<usize>) -> Result<DynkinType> {
    match (series, rank) {
        (Some(s), Some(r)) => format!("{s}{r}").parse(),
        _ => Err(Error::InvalidInput("--type and --rank are required".into())),
    }
}

fn load_registry(flag: &Option<PathBuf>) -> Result<(ProfileRegistry, String)> {
    let path = flag
        .clone()
        .or_else(|| std::env::var_os(PROFILES_ENV).map(PathBuf::from));
    match path {
        Some(path) => {
            let doc = std::fs::read_to_string(&path)
                .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
            Ok((
                ProfileRegistry::from_json(&doc)?,
                path.display().to_string(),
            ))
        }
        None => Ok((ProfileRegistry::bundled(), "bundled".to_string())),
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run(argv: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 0,
                _ => 1,
            };
            return Outcome {
                code,
                output: e.render().to_string(),
            };
        }
    };

    let echoed: Vec<&String> = argv.iter().skip(1).collect();
    let (registry, source) = match load_registry(&cli.profiles) {
        Ok(r) => r,
        Err(e) => {
            let mut report = Report::new("load_profiles", json!({ "argv": echoed }));
            let w = witness(&e);
            report.error = Some((e, w));
            return render(&report, cli.pretty);
        }
    };
    let request = json!({ "argv": echoed, "profiles": source });

    let (name, outcome): (&str, Handler) = match &cli.command {
        Command::Poincare(_) => ("poincare", poincare),
        Command::Profile(_) => ("profile", profile),
        Command::Motive(_) => ("motive", motive),
        Command::Split(_) => ("split", split),
        Command::TypeD(_) => ("typeD", type_d),
        Command::Selfcheck(_) => ("selfcheck", selfcheck),
    };
    let mut report = Report::new(name, request);
    if let Err(e) = outcome(&mut report, &registry, &cli.command) {
        let w = witness(&e);
        report.error = Some((e, w));
    }
    render(&report, cli.pretty)
}

fn render(report: &Report, pretty: bool) -> Outcome {
    let value = report.to_value();
    let mut output = if pretty {
        serde_json::to_string_pretty(&value)
    } else {
        serde_json::to_string(&value)
    }
    .expect("report serializes");
    output.push('\n');
    Outcome {
        code: report.code(),
        output,
    }
}

fn poincare(report: &mut Report, _: &ProfileRegistry, cmd: &Command) -> Result<()> {
    let Command::Poincare(args) = cmd else {
        unreachable!()
    };
    let (kind, poly) = if let Some(n) = args.severi_brauer {
        ("severi_brauer", severi_brauer_poincare(n)?)
    } else {
        let ty = dynkin(&args.series, args.rank)?;
        match &args.parabolic {
            Some(theta) => {
                let theta: Vec<usize> = parse_list(theta, "simple root")?;
                let poly = parabolic_poincare(ty, &theta)?;
                let levi_order: u128 = crate::rootdata::subdiagram_components(ty, &theta)?
                    .iter()
                    .map(|c| c.weyl_order())
                    .product();
                report.check(
                    "index_times_levi_order_is_weyl_order",
                    poly.eval(1) * BigInt::from(levi_order) == BigInt::from(ty.weyl_order()),
                );
                ("parabolic", poly)
            }
            None => {
                let poly = flag_poincare(ty);
                report.check(
                    "eval_at_one_is_weyl_order",
                    poly.eval(1) == BigInt::from(ty.weyl_order()),
                );
                ("flag", poly)
            }
        }
    };
    report.check("palindromic", poly.is_palindromic());
    report.result = Some(json!({
        "kind": kind,
        "poly": poly_json(&poly),
        "degree": poly.degree(),
        "eval_at_one": big_json(&poly.eval(1)),
    }));
    Ok(())
}

fn profile(report: &mut Report, registry: &ProfileRegistry, cmd: &Command) -> Result<()> {
    let Command::Profile(args) = cmd else {
        unreachable!()
    };
    let series = args.series.as_deref().map(str::to_ascii_uppercase);
    let selected: Vec<&JProfile> = registry
        .iter()
        .filter(|prof| {
            let ty = prof.dynkin_type().expect("registry profiles carry a type");
            series
                .as_deref()
                .is_none_or(|s| ty.series().letter().to_string() == s)
                && args.rank.is_none_or(|r| ty.rank() == r)
                && args.p.is_none_or(|p| prof.p() == p)
        })
        .collect();
    if selected.is_empty() {
        return Err(Error::InvalidInput("no profile matches the query".into()));
    }
    let mut entries = Vec::new();
    for prof in selected {
        let ty = prof.dynkin_type().expect("registry profiles carry a type");
        let generic = prof.j_invariant(prof.bounds().to_vec())?;
        // the generic torsor must give a valid decomposition of G/B
        let ok = decompose(&flag_poincare(ty), &generic).is_ok();
        report.check(&format!("{ty}_p{}_generic_decomposition", prof.p()), ok);
        entries.push(profile_json(prof));
    }
    report.result = Some(json!({ "profiles": entries }));
    Ok(())
}

fn motive(report: &mut Report, registry: &ProfileRegistry, cmd: &Command) -> Result<()> {
    let Command::Motive(args) = cmd else {
        unreachable!()
    };
    let prof = match &args.degrees {
        Some(degrees) => {
            let degrees: Vec<u32> = parse_list(degrees, "degree")?;
            let bounds: Vec<u32> = match &args.bounds {
                Some(b) => parse_list(b, "bound")?,
                None => return Err(Error::InvalidInput("--degrees needs --bounds".into())),
            };
            JProfile::synthetic(args.p, degrees, bounds)?
        }
        None => {
            let ty = dynkin(&args.series, args.rank)?;
            registry.get(ty, args.p).cloned().ok_or_else(|| {
                Error::InvalidInput(format!("no profile for {ty} at p = {}", args.p))
            })?
        }
    };

    let px = if let Some(px) = &args.px {
        Some(IntPoly::from_coeffs(parse_list(px, "coefficient")?))
    } else if args.px_flag {
        Some(flag_poincare(dynkin(&args.series, args.rank)?))
    } else if let Some(theta) = &args.px_parabolic {
        let ty = dynkin(&args.series, args.rank)?;
        Some(parabolic_poincare(ty, &parse_list(theta, "simple root")?)?)
    } else if let Some(n) = args.px_severi_brauer {
        Some(severi_brauer_poincare(n)?)
    } else {
        None
    };

    let mut result = Map::new();
    result.insert("profile".into(), profile_json(&prof));
    if let Some(px) = &px {
        result.insert("px".into(), poly_json(px));
    }
    if args.admissible {
        let px = px.as_ref().ok_or_else(|| {
            Error::InvalidInput("--admissible needs a Poincaré polynomial".into())
        })?;
        let set = admissible_j(px, &prof);
        let list: Vec<&[u32]> = set.invariants.iter().map(|j| j.components()).collect();
        result.insert(
            "admissible".into(),
            json!({
                "invariants": list,
                "scanned": set.scanned.to_string(),
                "truncated": set.truncated,
            }),
        );
    }
    report.result = Some(Value::Object(result));

    if let Some(j) = &args.j {
        let j = prof.j_invariant(parse_list(j, "J component")?)?;
        let motive = motive_poincare(&j);
        let size: u64 = j
            .components()
            .iter()
            .map(|&x| p_power(prof.p(), x).expect("bounded by the ring computation"))
            .product();
        report.check("motive_palindromic", motive.is_palindromic());
        report.check("motive_dimension", motive.eval(1) == BigInt::from(size));
        let fields = report
            .result
            .as_mut()
            .and_then(Value::as_object_mut)
            .expect("set above");
        fields.insert("j".into(), json!(j.components()));
        fields.insert("motive".into(), poly_json(&motive));
        if let Some(px) = &px {
            let twists = decompose(px, &j)?;
            report.check("reconstruction", twists.to_poly().mul(&motive) == *px);
            let fields = report
                .result
                .as_mut()
                .and_then(Value::as_object_mut)
                .expect("set above");
            fields.insert("twists".into(), twists_json(&twists));
            fields.insert("summands".into(), big_json(&twists.size()));
        }
    }
    Ok(())
}

fn split(report: &mut Report, registry: &ProfileRegistry, cmd: &Command) -> Result<()> {
    let Command::Split(args) = cmd else {
        unreachable!()
    };
    let comps: Vec<u32> = parse_list(&args.j, "J component")?;
    let prof = match &args.degrees {
        Some(degrees) => {
            let degrees: Vec<u32> = parse_list(degrees, "degree")?;
            let bounds = match &args.bounds {
                Some(b) => parse_list(b, "bound")?,
                None => comps.clone(),
            };
            JProfile::synthetic(args.p, degrees, bounds)?
        }
        None => {
            let ty = dynkin(&args.series, args.rank)?;
            registry.get(ty, args.p).cloned().ok_or_else(|| {
                Error::InvalidInput(format!("no profile for {ty} at p = {}", args.p))
            })?
        }
    };
    let j = prof.j_invariant(comps)?;
    let input = if args.p_primary {
        SplittingInput::with_p_primary_degree(j, args.n, args.jga)?
    } else {
        SplittingInput::new(j, args.n, args.jga)?
    };
    let n = input.n();
    let out = split_transform(&input)?;
    let after: Vec<u32> = match &args.after {
        Some(a) => parse_list(a, "J component")?,
        None => out.after.clone(),
    };
    let identity = verify_identity(input.j(), &after, n, args.jga)?;

    let p = args.p as u64;
    report.check("identity", identity.holds);
    report.check(
        "higher_components_preserved",
        out.higher_after == input.j().higher(),
    );
    report.check(
        "degree_one_cardinality",
        out.degree_one_after.len() == input.j().degree_one().len(),
    );
    report.check(
        "f_at_one_times_p_pow_jga_is_n",
        out.f.eval(1) * p.pow(args.jga) == BigInt::from(n),
    );
    report.failed_checks_inconsistent = !identity.holds;
    report.result = Some(json!({
        "profile": profile_json(input.j().profile()),
        "n": n,
        "jga": args.jga,
        "before": input.j().components(),
        "after": after,
        "degree_one_after": out.degree_one_after,
        "higher_after": out.higher_after,
        "f": poly_json(&out.f),
        "identity": identity_json(&identity),
    }));
    Ok(())
}

fn type_d(report: &mut Report, registry: &ProfileRegistry, cmd: &Command) -> Result<()> {
    let Command::TypeD(args) = cmd else {
        unreachable!()
    };
    let data = InvolutionData::new(args.n, args.ia, args.iplus, args.iminus)?;
    let violations = data.validate();
    report.check("fundamental_relations", violations.is_empty());
    let j1 = data.j1()?;
    let halfspin = data.j1_halfspin().ok();
    let plus = data.index_reduction_exponent(Component::Plus);
    let minus = data.index_reduction_exponent(Component::Minus);
    report.check(
        "j1_upper_bounds",
        j1 <= data.k1() && j1 <= data.ia && j1 <= data.iplus.max(data.iminus),
    );
    report.check("j1_index_reduction_lower_bounds", j1 >= plus && j1 >= minus);
    if let Some(h) = halfspin {
        report.check("halfspin_agrees", h == j1);
    }
    let mut result = json!({
        "n": args.n,
        "k1": data.k1(),
        "j1": j1,
        "j1_halfspin": halfspin,
        "j2": data.j2(),
        "index_reduction": { "plus": plus, "minus": minus },
        "violations": violations,
    });
    if let Some(j) = &args.j {
        let ty = DynkinType::new(crate::rootdata::Series::D, args.n as usize)?;
        let prof = registry
            .get(ty, 2)
            .ok_or_else(|| Error::InvalidInput(format!("no profile for {ty} at p = 2")))?;
        let j = prof.j_invariant(parse_list(j, "J component")?)?;
        let reduced = data.split_over_fa(&j)?;
        result["split_over_fa"] = json!({
            "before": j.components(),
            "after": reduced.components(),
        });
    }
    report.result = Some(result);
    Ok(())
}

fn selfcheck(report: &mut Report, registry: &ProfileRegistry, cmd: &Command) -> Result<()> {
    let Command::Selfcheck(args) = cmd else {
        unreachable!()
    };
    let budget = if args.quick {
        Budget::QUICK
    } else {
        Budget::FULL
    };
    let suites = run_all(registry, budget);
    let mut all = true;
    for s in &suites {
        report.check(&s.name, s.passed());
        all &= s.passed();
    }
    report.failed_checks_inconsistent = !all;
    report.result = Some(json!({ "suites": suites }));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> (u8, Value) {
        let argv: Vec<String> = std::iter::once("jinv".to_string())
            .chain(args.split_whitespace().map(String::from))
            .collect();
        let out = run(&argv);
        let value = serde_json::from_str(&out.output).unwrap_or(Value::Null);
        (out.code, value)
    }

    #[test]
    fn type_d_example() {
        let (code, v) = call("typeD --n 4 --iA 2 --iplus 1 --iminus 3");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["j1"], json!(2));
        assert_eq!(v["result"]["j2"], json!({ "kind": "exact", "value": 1 }));
        assert_eq!(v["status"], json!("ok"));
    }

    #[test]
    fn type_d_invalid_data() {
        let (code, v) = call("typeD --n 4 --iA 1 --iplus 0 --iminus 0");
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], json!("InvalidData"));
    }

    #[test]
    fn type_d_split_over_fa() {
        let (code, v) = call("typeD --n 8 --iA 2 --iplus 2 --iminus 3 --j 2,1,1,0,0");
        assert_eq!(code, 0);
        assert_eq!(
            v["result"]["split_over_fa"]["after"],
            json!([0, 1, 1, 0, 0])
        );
        let (code, v) = call("typeD --n 8 --iA 1 --iplus 2 --iminus 3 --j 2,1,1,0,0");
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], json!("InconsistentInput"));
    }

    #[test]
    fn poincare_examples() {
        let (code, v) = call("poincare --flag --type A --rank 1");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["poly"], json!([1, 1]));
        let (_, v) = call("poincare --parabolic 1 --type A --rank 2");
        assert_eq!(v["result"]["poly"], json!([1, 1, 1]));
        let (_, v) = call("poincare --severi-brauer 4");
        assert_eq!(v["result"]["poly"], json!([1, 1, 1, 1]));
        let (code, _) = call("poincare --flag --type D --rank 3");
        assert_eq!(code, 1);
        let (code, _) = call("poincare --type A --rank 2");
        assert_eq!(code, 1);
    }

    #[test]
    fn big_coefficients_stay_exact() {
        let (code, v) = call("poincare --flag --type E --rank 8");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["eval_at_one"], json!(696_729_600u64));
        assert_eq!(v["result"]["degree"], json!(120));
    }

    #[test]
    fn split_example() {
        let (code, v) = call("split --degrees 1,1 --p 2 --j 2,0 --n 4 --jga 2");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["identity"]["holds"], json!(true));
        assert_eq!(v["result"]["after"], json!([0, 0]));
        let (code, v) = call("split --degrees 1,1 --p 2 --j 2,0 --n 4 --jga 2 --after 1,0");
        assert_eq!(code, 2);
        assert_eq!(v["result"]["identity"]["holds"], json!(false));
        let (code, v) = call("split --degrees 1,1 --p 2 --j 1,0 --n 8 --jga 3 --bounds 3,3");
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], json!("InconsistentInput"));
        let (code, _) = call("split --degrees 1,1 --p 2 --j 1,0 --n 12 --jga 1");
        assert_eq!(code, 1);
        let (code, v) = call("split --degrees 1,1 --p 2 --j 1,0 --n 12 --jga 1 --p-primary");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["n"], json!(4));
    }

    #[test]
    fn motive_examples() {
        let (code, v) = call("motive --type A --rank 1 --p 2 --j 1 --px 1,1");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["motive"], json!([1, 1]));
        assert_eq!(v["result"]["twists"], json!({ "0": 1 }));
        let (code, v) = call("motive --type A --rank 3 --p 2 --j 1 --px-severi-brauer 4");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["twists"], json!({ "0": 1, "2": 1 }));
        let (code, v) = call("motive --type A --rank 1 --p 2 --px 1,1 --admissible");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["admissible"]["invariants"], json!([[0], [1]]));
        let (code, v) = call("motive --type A --rank 1 --p 2 --j 1 --px 1,1,1");
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], json!("NotDivisible"));
        assert_eq!(v["error"]["witness"]["divisor"], json!([1, 1]));
        let (code, v) = call("motive --degrees 1 --bounds 1 --p 2 --j 1 --px 1,0,-1");
        assert_eq!(code, 2);
        assert_eq!(v["error"]["kind"], json!("NegativeMultiplicity"));
    }

    #[test]
    fn profile_lookup() {
        let (code, v) = call("profile --type D --rank 4 --p 2");
        assert_eq!(code, 0);
        assert_eq!(v["result"]["profiles"][0]["degrees"], json!([1, 1, 3]));
        assert!(v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c["passed"] == json!(true)));
        let (code, _) = call("profile --type D --rank 99");
        assert_eq!(code, 1);
    }

    #[test]
    fn missing_profile_file() {
        let (code, v) = call("profile --profiles /nonexistent/profiles.json");
        assert_eq!(code, 1);
        assert_eq!(v["error"]["kind"], json!("SchemaError"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call("frobnicate").0, 1);
        assert_eq!(call("--help").0, 0);
    }

    #[test]
    fn deterministic_output() {
        let argv: Vec<String> = [
            "jinv",
            "motive",
            "--type",
            "D",
            "--rank",
            "4",
            "--p",
            "2",
            "--px-flag",
            "--admissible",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(run(&argv).output, run(&argv).output);
    }
}
