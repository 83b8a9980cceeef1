//! `hjlc`: check, construct and compute with Hom-Jordan Lie conformal
//! superalgebras given as JSON files.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on input
//! errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use conformal_core::algebra::checks::{self, SuiteOptions};
use conformal_core::algebra::{Parity, Superalgebra};
use conformal_core::cohomology::{self, AlphaSchedule, Cochain};
use conformal_core::constructions;
use conformal_core::deformation::{self, NijenhuisCandidate};
use conformal_core::derivation::{self, DegreeBounds};
use conformal_core::io;
use conformal_core::oracle::Oracle;
use conformal_core::report::Report;
use conformal_core::representation::{self, Representation};

#[derive(Parser)]
#[command(
    name = "hjlc",
    version,
    about = "Exact checks for Hom-Jordan Lie conformal superalgebras"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Replace the delta of every parsed algebra.
    #[arg(long, global = true, allow_hyphen_values = true)]
    delta_override: Option<i64>,
    /// Also check the untwisted representation identity.
    #[arg(long, global = true)]
    strict_rep: bool,
    /// Powers of alpha in the action terms of the differentials.
    #[arg(long, global = true, default_value = "uniform")]
    alpha_power_schedule: AlphaSchedule,
    /// Cross-check every symbolic verdict by random evaluation with this seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Degree bounds `l,d` for ansatz spaces.
    #[arg(long, global = true, value_parser = parse_bounds)]
    degree_bounds: Option<DegreeBounds>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_bounds(s: &str) -> Result<DegreeBounds, String> {
    let (l, d) = s.split_once(',').ok_or("expected `l,d`")?;
    let l = l.trim().parse().map_err(|_| format!("bad lambda bound `{l}`"))?;
    let d = d.trim().parse().map_err(|_| format!("bad d bound `{d}`"))?;
    Ok(DegreeBounds::new(l, d))
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom suite on an algebra.
    Check {
        algebra: PathBuf,
        /// Skip the multiplicativity and regularity checks.
        #[arg(long)]
        axioms_only: bool,
    },
    /// Representations.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Build new algebras.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Cochains and differentials.
    #[command(subcommand)]
    Cohomology(CohomologyCommand),
    /// Deformations and Nijenhuis operators.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// alpha^k-derivations.
    #[command(subcommand)]
    Derivations(DerivationCommand),
}

#[derive(Subcommand)]
enum RepCommand {
    /// Check the representation axiom.
    Check { algebra: PathBuf, rep: PathBuf },
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// Current algebra of a finite-dimensional superalgebra.
    Cur {
        lie: PathBuf,
        /// Build even if the input fails its axioms.
        #[arg(long)]
        unchecked: bool,
    },
    /// Yau twist by an algebra morphism given as a matrix file.
    Twist { algebra: PathBuf, beta: PathBuf },
    /// Direct sum.
    Dsum { left: PathBuf, right: PathBuf },
    /// Commutator algebra of a Hom-associative conformal superalgebra.
    Fromassoc { assoc: PathBuf },
    /// Semidirect sum with a representation.
    Semidirect { algebra: PathBuf, rep: PathBuf },
    /// Extension by an even derivation.
    Dext {
        algebra: PathBuf,
        derivation: PathBuf,
        #[arg(long, default_value = "D")]
        name: String,
    },
}

#[derive(Args)]
struct Module {
    /// Representation file; the default is the coefficient module given by `--twist`.
    #[arg(long, conflicts_with = "twist")]
    rep: Option<PathBuf>,
    /// Power `s` in `rho(a)_l b = delta [alpha^s(a)_l b]`.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    twist: i32,
}

#[derive(Subcommand)]
enum CohomologyCommand {
    D0 {
        algebra: PathBuf,
        cochain: PathBuf,
        #[command(flatten)]
        module: Module,
    },
    D1 {
        algebra: PathBuf,
        cochain: PathBuf,
        #[command(flatten)]
        module: Module,
    },
    D2 {
        algebra: PathBuf,
        cochain: PathBuf,
        #[command(flatten)]
        module: Module,
    },
    /// `d_s` with coefficients `rho(a)_l b = delta [alpha^s(a)_l b]`.
    Ds {
        algebra: PathBuf,
        cochain: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        s: i32,
    },
    /// Is the 2-cochain a cocycle of `d_{-1}`?
    Cocycle { algebra: PathBuf, cochain: PathBuf },
    /// `d2 d1 gamma = 0` for a given 1-cochain, or for a spanning set of
    /// 1-cochains within the degree bounds when none is given.
    D2d1 {
        algebra: PathBuf,
        cochain: Option<PathBuf>,
        #[command(flatten)]
        module: Module,
    },
}

#[derive(Subcommand)]
enum DeformCommand {
    /// The deformed algebra over `Q[t]`.
    Apply { algebra: PathBuf, cochain: PathBuf },
    /// The `t^1` and `t^2` closure conditions, cross-checked against Hom-Jacobi.
    Conditions { algebra: PathBuf, cochain: PathBuf },
    /// Is the matrix a Nijenhuis operator?
    Nijenhuis { algebra: PathBuf, f: PathBuf },
    /// Verify the deformation generated by a Nijenhuis operator is trivial.
    Trivial { algebra: PathBuf, f: PathBuf },
}

#[derive(Subcommand)]
enum DerivationCommand {
    /// Basis of the alpha^k-derivations within degree bounds.
    Solve {
        algebra: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        parity: u8,
        #[arg(long)]
        lmax: Option<u32>,
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Check a candidate file.
    Check { algebra: PathBuf, candidate: PathBuf },
    /// Commutator of two derivations and its check at the summed exponent.
    Commutator {
        algebra: PathBuf,
        left: PathBuf,
        right: PathBuf,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(Option<Value>, Option<Report>), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn within(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure(format!("{}: {e}", path.display()))
}

struct Ctx {
    global: Global,
}

impl Ctx {
    fn algebra(&self, path: &Path) -> Result<Superalgebra, Failure> {
        let a = io::parse_algebra(&read(path)?).map_err(|e| within(path, e))?;
        match self.global.delta_override {
            Some(d) => a.with_delta(d).map_err(|e| within(path, e)),
            None => Ok(a),
        }
    }

    fn module(&self, a: &Superalgebra, m: &Module) -> Result<Representation, Failure> {
        match &m.rep {
            Some(p) => io::parse_representation(a, &read(p)?).map_err(|e| within(p, e)),
            None => Ok(cohomology::coefficient_module(a, m.twist)?),
        }
    }

    fn cochain(&self, a: &Superalgebra, r: &Representation, path: &Path) -> Result<Cochain, Failure> {
        io::parse_cochain(a, r, &read(path)?).map_err(|e| within(path, e))
    }

    fn schedule(&self) -> AlphaSchedule {
        self.global.alpha_power_schedule
    }

    fn bounds(&self) -> DegreeBounds {
        self.global.degree_bounds.unwrap_or_default()
    }
}

fn suite(a: &Superalgebra, subject: &str) -> Report {
    checks::run_suite(a, subject, SuiteOptions::FULL)
}

fn timed(subject: &str, start: Instant, checks: Vec<conformal_core::report::CheckOutcome>) -> Report {
    let mut r = Report::new(subject);
    r.checks = checks;
    r.elapsed = start.elapsed();
    r
}

fn run(ctx: &Ctx, command: Command) -> Outcome {
    let start = Instant::now();
    match command {
        Command::Check { algebra, axioms_only } => {
            let a = ctx.algebra(&algebra)?;
            let opts = if axioms_only {
                SuiteOptions::AXIOMS
            } else {
                SuiteOptions::FULL
            };
            Ok((None, Some(checks::run_suite(&a, &algebra.display().to_string(), opts))))
        }
        Command::Rep(RepCommand::Check { algebra, rep }) => {
            let a = ctx.algebra(&algebra)?;
            let r = io::parse_representation(&a, &read(&rep)?).map_err(|e| within(&rep, e))?;
            let outcomes = representation::check_representation(&a, &r, ctx.global.strict_rep);
            Ok((None, Some(timed("representation", start, outcomes))))
        }
        Command::Construct(c) => construct(ctx, c),
        Command::Cohomology(c) => cohomology_cmd(ctx, c, start),
        Command::Deform(c) => deform_cmd(ctx, c, start),
        Command::Derivations(c) => derivations_cmd(ctx, c, start),
    }
}

fn construct(ctx: &Ctx, c: ConstructCommand) -> Outcome {
    let (a, report) = match c {
        ConstructCommand::Cur { lie, unchecked } => {
            let g = io::parse_jordan_lie(&read(&lie)?, !unchecked).map_err(|e| within(&lie, e))?;
            let g = match ctx.global.delta_override {
                Some(d) => constructions::JordanLieSuperalgebra::new_unchecked(
                    d,
                    g.basis().to_vec(),
                    g.brackets().clone(),
                    g.alpha().to_vec(),
                )?,
                None => g,
            };
            let a = if unchecked {
                constructions::current_algebra_unchecked(&g)?
            } else {
                constructions::current_algebra(&g)?
            };
            let mut r = suite(&a, "current algebra");
            let input = g.check().checks.into_iter().map(|mut c| {
                c.name = format!("input {}", c.name);
                c
            });
            r.checks.splice(0..0, input);
            (a, r)
        }
        ConstructCommand::Twist { algebra, beta } => {
            let a = ctx.algebra(&algebra)?;
            let m = io::parse_matrix(&read(&beta)?, a.dim()).map_err(|e| within(&beta, e))?;
            constructions::yau_twist(&a, &m)?
        }
        ConstructCommand::Dsum { left, right } => {
            let s = constructions::direct_sum(&ctx.algebra(&left)?, &ctx.algebra(&right)?)?;
            let r = suite(&s, "direct sum");
            (s, r)
        }
        ConstructCommand::Fromassoc { assoc } => {
            let h = io::parse_hom_assoc(&read(&assoc)?).map_err(|e| within(&assoc, e))?;
            let assoc_check = h.check_associativity();
            let a = constructions::from_hom_associative_unchecked(&h)?;
            let mut r = suite(&a, "commutator algebra");
            r.checks.insert(0, assoc_check);
            (a, r)
        }
        ConstructCommand::Semidirect { algebra, rep } => {
            let a = ctx.algebra(&algebra)?;
            let r = io::parse_representation(&a, &read(&rep)?).map_err(|e| within(&rep, e))?;
            let (s, mut report) = representation::semidirect_sum_unchecked(&a, &r)?;
            let mut rep_checks = representation::check_representation(&a, &r, ctx.global.strict_rep);
            rep_checks.append(&mut report.checks);
            report.checks = rep_checks;
            (s, report)
        }
        ConstructCommand::Dext {
            algebra,
            derivation,
            name,
        } => {
            let a = ctx.algebra(&algebra)?;
            let d = io::parse_derivation(&a, &read(&derivation)?).map_err(|e| within(&derivation, e))?;
            let ext = constructions::extend_by_derivation(&a, &d.map, &name)?;
            (ext.algebra, ext.report)
        }
    };
    Ok((Some(io::algebra_to_json(&a)), Some(report)))
}

fn cohomology_cmd(ctx: &Ctx, c: CohomologyCommand, start: Instant) -> Outcome {
    let sched = ctx.schedule();
    match c {
        CohomologyCommand::D0 {
            algebra,
            cochain,
            module,
        }
        | CohomologyCommand::D1 {
            algebra,
            cochain,
            module,
        }
        | CohomologyCommand::D2 {
            algebra,
            cochain,
            module,
        } => {
            let a = ctx.algebra(&algebra)?;
            let r = ctx.module(&a, &module)?;
            let g = ctx.cochain(&a, &r, &cochain)?;
            let out = match g.arity() {
                0 => cohomology::d0(&a, &r, &g)?,
                1 => cohomology::d1(&a, &r, &g, sched)?,
                2 => cohomology::d2(&a, &r, &g, sched)?,
                n => return Err(Failure(format!("no differential on {n}-cochains"))),
            };
            Ok((Some(io::cochain_to_json(&a, &r, &out)), None))
        }
        CohomologyCommand::Ds { algebra, cochain, s } => {
            let a = ctx.algebra(&algebra)?;
            let r = cohomology::coefficient_module(&a, s)?;
            let g = ctx.cochain(&a, &r, &cochain)?;
            let out = cohomology::d_s(&a, s, &g, sched)?;
            Ok((Some(io::cochain_to_json(&a, &r, &out)), None))
        }
        CohomologyCommand::Cocycle { algebra, cochain } => {
            let a = ctx.algebra(&algebra)?;
            let r = cohomology::coefficient_module(&a, -1)?;
            let g = ctx.cochain(&a, &r, &cochain)?;
            let out = cohomology::is_two_cocycle(&a, &g, sched)?;
            Ok((None, Some(timed("two-cocycle", start, vec![out]))))
        }
        CohomologyCommand::D2d1 {
            algebra,
            cochain,
            module,
        } => {
            let a = ctx.algebra(&algebra)?;
            let r = ctx.module(&a, &module)?;
            let mut report = Report::new(format!("d2 d1 = 0 ({} schedule)", sched.name()));
            match cochain {
                Some(p) => {
                    let g = ctx.cochain(&a, &r, &p)?;
                    report.checks.push(cohomology::verify_d2d1_zero(&a, &r, &g, sched)?);
                }
                None => {
                    let b = ctx.bounds();
                    for parity in [Parity::Even, Parity::Odd] {
                        let span = cohomology::spanning_one_cochains(&a, &r, parity, b.lambda, b.d)?;
                        report.note(format!("{} {parity} spanning 1-cochains", span.len()));
                        for (n, g) in span.iter().enumerate() {
                            let mut out = cohomology::verify_d2d1_zero(&a, &r, g, sched)?;
                            out.name = format!("{} [{parity} #{n}]", out.name);
                            report.checks.push(out);
                        }
                    }
                }
            }
            report.elapsed = start.elapsed();
            Ok((None, Some(report)))
        }
    }
}

fn nijenhuis_candidate(ctx: &Ctx, a: &Superalgebra, f: &Path) -> Result<NijenhuisCandidate, Failure> {
    let _ = ctx;
    let m = io::parse_matrix(&read(f)?, a.dim()).map_err(|e| within(f, e))?;
    Ok(NijenhuisCandidate::new(a, m)?)
}

fn deform_cmd(ctx: &Ctx, c: DeformCommand, start: Instant) -> Outcome {
    match c {
        DeformCommand::Apply { algebra, cochain } => {
            let a = ctx.algebra(&algebra)?;
            let g = ctx.cochain(&a, &representation::adjoint_rep(&a), &cochain)?;
            let d = deformation::deform(&a, &g)?;
            let r = checks::run_suite(&d, "deformed algebra", SuiteOptions::AXIOMS);
            Ok((Some(io::algebra_to_json(&d)), Some(r)))
        }
        DeformCommand::Conditions { algebra, cochain } => {
            let a = ctx.algebra(&algebra)?;
            let g = ctx.cochain(&a, &representation::adjoint_rep(&a), &cochain)?;
            let mut outcomes = deformation::check_deformation_conditions(&a, &g)?;
            outcomes.push(checks::check_hom_jacobi(&deformation::deform(&a, &g)?));
            Ok((None, Some(timed("deformation conditions", start, outcomes))))
        }
        DeformCommand::Nijenhuis { algebra, f } => {
            let a = ctx.algebra(&algebra)?;
            let f = nijenhuis_candidate(ctx, &a, &f)?;
            let out = deformation::is_nijenhuis(&a, &f);
            Ok((None, Some(timed("nijenhuis", start, vec![out]))))
        }
        DeformCommand::Trivial { algebra, f } => {
            let a = ctx.algebra(&algebra)?;
            let f = nijenhuis_candidate(ctx, &a, &f)?;
            let mut r = deformation::verify_trivial_deformation(&a, &f)?;
            r.elapsed = start.elapsed();
            Ok((None, Some(r)))
        }
    }
}

fn derivations_cmd(ctx: &Ctx, c: DerivationCommand, start: Instant) -> Outcome {
    match c {
        DerivationCommand::Solve {
            algebra,
            k,
            parity,
            lmax,
            dmax,
        } => {
            let a = ctx.algebra(&algebra)?;
            let parity = Parity::from_bit(parity).ok_or_else(|| Failure("parity must be 0 or 1".into()))?;
            let b = ctx.bounds();
            let bounds = DegreeBounds::new(lmax.unwrap_or(b.lambda), dmax.unwrap_or(b.d));
            let basis = derivation::solve_derivation_space(&a, k, parity, bounds)?;
            let outcomes: Vec<_> = basis
                .iter()
                .map(|d| derivation::check_alpha_k_derivation(&a, d))
                .collect();
            let value = Value::Array(basis.iter().map(io::derivation_to_json).collect());
            let mut r = timed(
                &format!("derivation space (dimension {})", basis.len()),
                start,
                outcomes,
            );
            r.note(format!("bounds: lambda <= {}, d <= {}", bounds.lambda, bounds.d));
            Ok((Some(value), Some(r)))
        }
        DerivationCommand::Check { algebra, candidate } => {
            let a = ctx.algebra(&algebra)?;
            let d = io::parse_derivation(&a, &read(&candidate)?).map_err(|e| within(&candidate, e))?;
            let out = derivation::check_alpha_k_derivation(&a, &d);
            Ok((None, Some(timed("derivation", start, vec![out]))))
        }
        DerivationCommand::Commutator { algebra, left, right } => {
            let a = ctx.algebra(&algebra)?;
            let d1 = io::parse_derivation(&a, &read(&left)?).map_err(|e| within(&left, e))?;
            let d2 = io::parse_derivation(&a, &read(&right)?).map_err(|e| within(&right, e))?;
            let c = derivation::commutator(&d1, &d2)?;
            let out = derivation::check_alpha_k_derivation(&a, &c);
            Ok((
                Some(io::derivation_to_json(&c)),
                Some(timed("commutator", start, vec![out])),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        global: cli.global.clone(),
    };
    let (value, mut report) = match run(&ctx, cli.command) {
        Ok(x) => x,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let mut oracle_ok = true;
    let mut oracle_json = Value::Null;
    if let (Some(seed), Some(r)) = (ctx.global.seed, report.as_mut()) {
        let summary = Oracle::new(seed).check_report(r);
        oracle_ok = summary.agrees();
        r.note(format!(
            "random evaluation (seed {seed}): {} identities, {} disagreements",
            summary.identities,
            summary.disagreements.len()
        ));
        for d in &summary.disagreements {
            r.note(format!("oracle disagrees on {} at {}", d.check, d.location));
        }
        oracle_json = json!({"seed": seed, "identities": summary.identities, "agrees": oracle_ok});
    }
    let passed = report.as_ref().is_none_or(Report::passed) && oracle_ok;
    match ctx.global.format {
        Format::Json => {
            let mut out = serde_json::Map::new();
            if let Some(v) = value {
                out.insert("result".into(), v);
            }
            if let Some(r) = &report {
                out.insert("report".into(), io::report_to_json(r));
            }
            if !oracle_json.is_null() {
                out.insert("oracle".into(), oracle_json);
            }
            out.insert("passed".into(), json!(passed));
            println!(
                "{}",
                serde_json::to_string_pretty(&Value::Object(out)).expect("serializable")
            );
        }
        Format::Text => {
            if let Some(v) = value {
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            }
            if let Some(r) = &report {
                print!("{}", r.render_text());
            }
        }
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
