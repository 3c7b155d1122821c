//! `gralg`: batch checks over algebra definition files, one JSON record per
//! line on stdout.
//!
//! Exit codes: 0 when every reported verdict is true, 1 when one is false,
//! 2 when one is undecided (and none false), 3 on input errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use gralg_core::azumaya::{
    braun_check, find_separability_idempotent, group_ring_azumaya, is_graded_azumaya_csa, psi_bijective,
    psi_bijective_graded, verify_separability_idempotent,
};
use gralg_core::constructors::{trivially_graded_field, QuaternionGrading};
use gralg_core::format::{explicit_definition, Constructor};
use gralg_core::graded::{is_crossed_product, is_graded_division, is_graded_simple, is_strongly_graded};
use gralg_core::ktheory::{
    ck0_zk0, compare_localized, k0_of_algebra, k0gr_graded_division, k0gr_strongly_graded, torsion_bound_check,
    CsaShape,
};
use gralg_core::matrix_ring::{
    canonical_shift, is_good_grading, shift_isomorphism_matrix, shifted_iso_decision, verify_graded_isomorphism,
};
use gralg_core::trace::{
    central_commutators_imply_commutative_check, commutator_components, commutator_support_check,
    trd_graded_surjective_check, trd_kernel_check,
};
use gralg_core::{
    parse_definition, serialize_definition, Definition, Error, FieldSpec, GradeGroup, GradedRing, GroupElement, KGroup,
    Scope, SearchConfig, Structure, Verdict, VerdictReport,
};

#[derive(Parser, Debug)]
#[command(name = "gralg", version, about = "Exact checks for graded algebras")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Seed for sampled searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Maximum elements an exhaustive scan may visit.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    budget: u64,
    /// Random probes when a scan is over budget.
    #[arg(long, global = true, default_value_t = 64)]
    samples: usize,
}

impl GlobalOpts {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            budget: self.budget,
            samples: self.samples,
            seed: self.seed,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a structural property of the algebra in FILE.
    Check {
        property: Property,
        /// Route for `azumaya`.
        #[arg(long, value_enum, default_value_t = Via::Psi)]
        via: Via,
        /// Quantify over the whole group or only over the support.
        #[arg(long, value_enum, default_value_t = ScopeArg::Group)]
        scope: ScopeArg,
        file: PathBuf,
    },
    /// Grothendieck group values.
    K0 {
        file: PathBuf,
        /// Graded K0 (via the identity component or the support index).
        #[arg(long)]
        graded: bool,
        /// Kernel and cokernel of K0(center) -> K0(A) for a central simple algebra.
        #[arg(long)]
        exact_sequence: bool,
        /// Compare graded K0 with that of the trivially graded base field after inverting N.
        #[arg(long, value_name = "N")]
        compare_localized: Option<u64>,
    },
    /// Decide isomorphism of shifted matrix rings over a graded division ring.
    ClassifyShift {
        /// `trivial-K` or a definition file of a graded division ring.
        #[arg(long, default_value = "trivial-K")]
        base: String,
        /// Grade group for `trivial-K`.
        #[arg(long, default_value = "Z")]
        group: String,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Shifts such as "(0,1,1)"; every one is compared with the first.
        #[arg(required = true, num_args = 2..)]
        shifts: Vec<String>,
    },
    /// Additive commutators and the reduced trace.
    Commutators { file: PathBuf },
    /// Print a definition file for a built-in family.
    Construct(ConstructArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    family: Family,
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    #[arg(long)]
    grading: Option<String>,
    #[arg(long)]
    step: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<String>,
    /// Grade group for `group-ring`, `matrix` and `trivial-field`.
    #[arg(long)]
    group: Option<String>,
    /// Spell out basis, degrees and products instead of the constructor.
    #[arg(long)]
    explicit: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Property {
    Grading,
    GradedDivision,
    CrossedProduct,
    StronglyGraded,
    GradedSimple,
    CentralSimple,
    Azumaya,
    GoodGrading,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Via {
    Psi,
    Braun,
    GradedCsa,
    GroupRing,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ScopeArg {
    Group,
    Support,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Quaternion,
    Symbol,
    GroupRing,
    Matrix,
    TrivialField,
    Laurent,
    ShiftedLaurent,
    Checkerboard,
    Skew,
}

/// One output line.
#[derive(Serialize, Debug)]
pub struct Record {
    pub command: String,
    pub input: String,
    pub digest: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictReport>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Failure before any verdict: exit code 3.
#[derive(Debug)]
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<(Vec<VerdictReport>, BTreeMap<String, Value>), InputError>;

fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

fn load(path: &Path) -> Result<(Definition, String), InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let def = parse_definition(&text).map_err(|e| match e {
        Error::Parse { line, message } => InputError(format!("{}:{line}: {message}", path.display())),
        other => InputError(format!("{}: {other}", path.display())),
    })?;
    Ok((def, text))
}

fn require_finite(def: &Definition) -> Result<&gralg_core::GradedAlgebra, InputError> {
    def.finite()
        .ok_or_else(|| InputError("this command needs a finite-dimensional definition".into()))
}

fn exit_code(verdicts: &[VerdictReport]) -> i32 {
    if verdicts.iter().any(|v| v.verdict == Verdict::False) {
        1
    } else if verdicts.iter().any(|v| v.verdict == Verdict::Undecided) {
        2
    } else {
        0
    }
}

fn check(def: &Definition, property: Property, via: Via, scope: Scope, cfg: &SearchConfig) -> Outcome {
    let ring = def.ring();
    let mut values = BTreeMap::new();
    let report = match property {
        Property::Grading => match def.finite() {
            Some(g) => g.validate_grading(),
            None => VerdictReport::holds("valid-grading", gralg_core::Strategy::Constructive)
                .with_detail("built-in graded ring"),
        },
        Property::GradedDivision => is_graded_division(ring, cfg),
        Property::CrossedProduct => is_crossed_product(ring, scope, cfg),
        Property::StronglyGraded => is_strongly_graded(ring, scope),
        Property::GradedSimple => is_graded_simple(ring, cfg),
        Property::CentralSimple => require_finite(def)?.algebra().is_central_simple(cfg),
        Property::GoodGrading => {
            let g = require_finite(def)?;
            match is_good_grading(g)? {
                Some(gammas) => {
                    let s: Vec<String> = gammas.iter().map(|x| g.group().format_element(x)).collect();
                    values.insert("degrees".into(), json!(s));
                    VerdictReport::holds("good-grading", gralg_core::Strategy::Constructive)
                        .with_witness(format!("({})", s.join(",")))
                }
                None => VerdictReport::fails(
                    "good-grading",
                    gralg_core::Strategy::Constructive,
                    "some matrix unit is not homogeneous",
                ),
            }
        }
        Property::Azumaya => match via {
            Via::Psi => match def.finite() {
                Some(g) => psi_bijective(g.algebra())?,
                None => psi_bijective_graded(ring)?,
            },
            Via::Braun => {
                let a = require_finite(def)?.algebra();
                match find_separability_idempotent(a)? {
                    None => VerdictReport::fails(
                        "braun",
                        gralg_core::Strategy::Constructive,
                        "no separability idempotent exists",
                    ),
                    Some(e) => match braun_check(a, &e) {
                        Ok(r) => r.with_child(verify_separability_idempotent(a, &e)?),
                        Err(Error::Precondition(why)) => {
                            VerdictReport::fails("braun", gralg_core::Strategy::Constructive, why)
                        }
                        Err(e) => return Err(e.into()),
                    },
                }
            }
            Via::GradedCsa => is_graded_azumaya_csa(ring, cfg),
            Via::GroupRing => match def.constructor {
                Some(Constructor::GroupRing) => group_ring_azumaya(def.field, &def.group)?,
                _ => return Err(InputError("--via group-ring needs a group-ring constructor".into())),
            },
        },
    };
    Ok((vec![report], values))
}

fn graded_k0(
    ring: &dyn GradedRing,
    cfg: &SearchConfig,
    values: &mut BTreeMap<String, Value>,
) -> Result<KGroup, InputError> {
    if is_strongly_graded(ring, Scope::Group).is_true() {
        let k = k0gr_strongly_graded(ring, cfg)?;
        values.insert("identity_component".into(), json!(k.decomposition.to_string()));
        values.insert("route".into(), json!("strongly-graded"));
        return Ok(KGroup::Finite(k.group));
    }
    let div = is_graded_division(ring, cfg);
    if div.is_true() {
        values.insert("route".into(), json!("graded-division"));
        return Ok(k0gr_graded_division(ring)?);
    }
    Err(InputError(
        "graded K0 is computed for strongly graded rings and graded division rings only".into(),
    ))
}

fn k0(def: &Definition, graded: bool, exact: bool, compare: Option<u64>, cfg: &SearchConfig) -> Outcome {
    let mut values = BTreeMap::new();
    let mut verdicts = Vec::new();
    let ring = def.ring();
    if graded || compare.is_some() {
        let k = graded_k0(ring, cfg, &mut values)?;
        values.insert("k0gr".into(), json!(k.to_string()));
        if let Some(n) = compare {
            let base = trivially_graded_field(def.field, ring.group());
            let kb = k0gr_graded_division(&base)?;
            values.insert("base_k0gr".into(), json!(kb.to_string()));
            match (&k, &kb) {
                (KGroup::Finite(g), KGroup::Finite(h)) => verdicts.push(compare_localized(g, h, n)?),
                _ => verdicts.push(VerdictReport::undecided(
                    "localized-isomorphic",
                    "a graded K0 is free of infinite rank",
                )),
            }
        }
    }
    let ungraded = !graded && compare.is_none();
    if ungraded || exact {
        let a = require_finite(def)?.algebra();
        let (g, dec) = k0_of_algebra(a, cfg)?;
        values.insert("decomposition".into(), json!(dec.to_string()));
        if ungraded {
            values.insert("k0".into(), json!(g.to_string()));
        }
        if exact {
            let block = match dec.blocks.as_slice() {
                [b] if b.resolved && b.center_dim == 1 => b.clone(),
                [b] if b.center_dim == 1 => {
                    verdicts.push(VerdictReport::undecided(
                        "exact-sequence",
                        format!("could not decide whether the simple algebra {b} is split"),
                    ));
                    return Ok((verdicts, values));
                }
                _ => return Err(InputError("the exact sequence needs a central simple algebra".into())),
            };
            let n = block.matrix_size.expect("resolved") as u64;
            let index = (block.division_dim as f64).sqrt().round() as u64;
            let (zk, ck) = ck0_zk0(CsaShape { matrix_size: n, index })?;
            values.insert("zk0".into(), json!(zk.to_string()));
            values.insert("ck0".into(), json!(ck.to_string()));
            verdicts.push(torsion_bound_check(&ck, n));
        }
    }
    Ok((verdicts, values))
}

fn parse_shift(group: &GradeGroup, text: &str) -> Result<Vec<GroupElement>, InputError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| InputError(format!("shift `{t}` must be a parenthesized tuple")))?;
    let mut parts = Vec::new();
    let (mut depth, mut cur) = (0i32, String::new());
    for ch in inner.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    parts.push(cur);
    parts
        .iter()
        .map(|p| group.parse_element(p).map_err(InputError::from))
        .collect()
}

fn classify_shift(base: &str, group: &str, field: &str, shifts: &[String], cfg: &SearchConfig) -> Outcome {
    let d: Arc<dyn GradedRing> = if base == "trivial-K" {
        let field: FieldSpec = field.parse()?;
        let group: GradeGroup = group.parse()?;
        Arc::new(trivially_graded_field(field, &group))
    } else {
        let (def, _) = load(Path::new(base))?;
        match def.structure {
            Structure::Finite(g) => Arc::new(g),
            Structure::Twisted(t) => Arc::new(t),
            Structure::Shifted(_) => return Err(InputError("the base must be a graded division ring".into())),
        }
    };
    let group = d.group().clone();
    let parsed = shifts
        .iter()
        .map(|s| parse_shift(&group, s))
        .collect::<Result<Vec<_>, _>>()?;
    let forms = parsed
        .iter()
        .map(|s| canonical_shift(d.as_ref(), s))
        .collect::<Result<Vec<_>, _>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (k, f) in forms.iter().enumerate() {
        match classes.iter_mut().find(|c| forms[c[0]].same_class(f)) {
            Some(c) => c.push(k),
            None => classes.push(vec![k]),
        }
    }
    let mut values = BTreeMap::new();
    values.insert(
        "canonical".into(),
        json!(forms.iter().map(|f| f.to_string()).collect::<Vec<_>>()),
    );
    values.insert("classes".into(), json!(classes));
    let mut verdicts = Vec::new();
    for (k, gamma) in parsed.iter().enumerate().skip(1) {
        let (mut report, witness) = shifted_iso_decision(d.as_ref(), &parsed[0], gamma)?;
        report.predicate = format!("shift-isomorphic {} {}", shifts[0], shifts[k]);
        if let Some(w) = witness {
            if d.as_finite().is_some() {
                let (a, b, m) = shift_isomorphism_matrix(d.clone(), &parsed[0], gamma, &w, cfg)?;
                report = report.with_child(verify_graded_isomorphism(&a, &b, &m));
            }
            values.insert(format!("sigma_{k}"), json!(group.format_element(&w.sigma)));
        }
        verdicts.push(report);
    }
    Ok((verdicts, values))
}

fn commutators(def: &Definition) -> Outcome {
    let g = require_finite(def)?;
    let a = g.algebra();
    let mut values = BTreeMap::new();
    let comm = a.commutator_subspace();
    values.insert("dim".into(), json!(a.dim()));
    values.insert("dim_commutators".into(), json!(comm.dim()));
    let supp: Vec<String> = commutator_components(g)
        .keys()
        .map(|x| g.group().format_element(x))
        .collect();
    values.insert("supp_commutators".into(), json!(supp));
    let soft = |name: &str, r: gralg_core::Result<VerdictReport>| -> Result<VerdictReport, InputError> {
        match r {
            Ok(v) => Ok(v),
            Err(Error::NotApplicable(why)) => Ok(VerdictReport::undecided(name, format!("not applicable: {why}"))),
            Err(e) => Err(e.into()),
        }
    };
    let verdicts = vec![
        soft("trd-kernel", trd_kernel_check(a))?,
        soft("trd-graded-surjective", trd_graded_surjective_check(g))?,
        commutator_support_check(g),
        central_commutators_imply_commutative_check(g),
    ];
    Ok((verdicts, values))
}

fn construct(args: &ConstructArgs) -> Result<String, InputError> {
    let field: FieldSpec = args.field.parse()?;
    let need = |v: &Option<String>, name: &str| {
        v.as_deref()
            .ok_or_else(|| InputError(format!("--{name} is required")))
            .and_then(|s| field.parse_scalar(s).map_err(InputError::from))
    };
    let group = match &args.group {
        Some(g) => g.parse::<GradeGroup>()?,
        None => GradeGroup::trivial(),
    };
    let need_n = || args.n.ok_or_else(|| InputError("--n is required".into()));
    let c = match args.family {
        Family::Quaternion => Constructor::Quaternion {
            a: need(&args.a, "a")?,
            b: need(&args.b, "b")?,
            grading: args
                .grading
                .as_deref()
                .unwrap_or("Z2xZ2")
                .parse::<QuaternionGrading>()?,
        },
        Family::Symbol => Constructor::Symbol {
            n: need_n()?,
            a: need(&args.a, "a")?,
            b: need(&args.b, "b")?,
            xi: need(&args.xi, "xi")?,
        },
        Family::GroupRing => Constructor::GroupRing,
        Family::Matrix => Constructor::Matrix { n: need_n()? },
        Family::TrivialField => Constructor::TrivialField,
        Family::Laurent => Constructor::Laurent {
            step: args.step.unwrap_or(1),
        },
        Family::ShiftedLaurent => {
            let text = args
                .shift
                .as_deref()
                .ok_or_else(|| InputError("--shift is required".into()))?;
            let shift = parse_shift(&GradeGroup::integers(), text)?
                .into_iter()
                .map(|g| g.0[0])
                .collect();
            Constructor::ShiftedLaurent {
                step: args.step.unwrap_or(1),
                shift,
            }
        }
        Family::Checkerboard => Constructor::Checkerboard,
        Family::Skew => Constructor::Skew,
    };
    // Round-trip through the parser so that every constructor check runs.
    let draft = Definition {
        field,
        group: group.clone(),
        constructor: Some(c),
        witnesses: Vec::new(),
        structure: Structure::Finite(trivially_graded_field(field, &group)),
    };
    let def = parse_definition(&serialize_definition(&draft))?;
    if args.explicit {
        let g = def
            .finite()
            .ok_or_else(|| InputError("--explicit needs a finite-dimensional family".into()))?;
        Ok(serialize_definition(&explicit_definition(g)))
    } else {
        Ok(serialize_definition(&def))
    }
}

fn record(command: &str, input: &str, digest: String, seed: u64, outcome: Outcome) -> (Record, i32) {
    match outcome {
        Ok((verdicts, values)) => {
            let code = exit_code(&verdicts);
            (
                Record {
                    command: command.into(),
                    input: input.into(),
                    digest,
                    seed,
                    verdicts,
                    values,
                    error: None,
                },
                code,
            )
        }
        Err(InputError(e)) => (
            Record {
                command: command.into(),
                input: input.into(),
                digest,
                seed,
                verdicts: vec![],
                values: BTreeMap::new(),
                error: Some(e),
            },
            3,
        ),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cfg = cli.opts.config();
    let seed = cli.opts.seed;
    let file_outcome = |command: &str, file: &Path, options: String, f: &dyn Fn(&Definition) -> Outcome| {
        let input = file.display().to_string();
        match load(file) {
            Ok((def, text)) => {
                let d = digest(&[command.as_bytes(), options.as_bytes(), text.as_bytes()]);
                record(command, &input, d, seed, f(&def))
            }
            Err(e) => {
                let d = digest(&[command.as_bytes(), options.as_bytes()]);
                record(command, &input, d, seed, Err(e))
            }
        }
    };
    let (rec, code) = match &cli.command {
        Command::Check {
            property,
            via,
            scope,
            file,
        } => {
            let sc = match scope {
                ScopeArg::Group => Scope::Group,
                ScopeArg::Support => Scope::Support,
            };
            let options = format!(
                "{property:?} {via:?} {scope:?} budget={} samples={}",
                cfg.budget, cfg.samples
            );
            file_outcome("check", file, options, &|d| check(d, *property, *via, sc, &cfg))
        }
        Command::K0 {
            file,
            graded,
            exact_sequence,
            compare_localized,
        } => {
            let options = format!(
                "graded={graded} exact={exact_sequence} compare={compare_localized:?} budget={}",
                cfg.budget
            );
            file_outcome("k0", file, options, &|d| {
                k0(d, *graded, *exact_sequence, *compare_localized, &cfg)
            })
        }
        Command::Commutators { file } => file_outcome("commutators", file, String::new(), &commutators),
        Command::ClassifyShift {
            base,
            group,
            field,
            shifts,
        } => {
            let mut parts: Vec<&[u8]> = vec![b"classify-shift", base.as_bytes(), group.as_bytes(), field.as_bytes()];
            let base_text = if base != "trivial-K" {
                std::fs::read(base).unwrap_or_default()
            } else {
                vec![]
            };
            parts.push(&base_text);
            parts.extend(shifts.iter().map(|s| s.as_bytes()));
            let d = digest(&parts);
            record(
                "classify-shift",
                base,
                d,
                seed,
                classify_shift(base, group, field, shifts, &cfg),
            )
        }
        Command::Construct(args) => match construct(args) {
            Ok(text) => {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            Err(InputError(e)) => {
                let _ = writeln!(err, "error: {e}");
                return 3;
            }
        },
    };
    if let Some(e) = &rec.error {
        let _ = writeln!(err, "error: {e}");
    }
    let line = serde_json::to_string(&rec).expect("records serialize");
    let _ = writeln!(out, "{line}");
    code
}

/// Runs the command line `argv` (including the program name), writing
/// records to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let buffered = || {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = dispatch(&cli, &mut o, &mut e);
        (o, e, code)
    };
    let (o, e, code) = match cli.opts.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(buffered),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {t} threads: {e}");
                return 3;
            }
        },
        None => buffered(),
    };
    let _ = out.write_all(&o);
    let _ = err.write_all(&e);
    code
}
