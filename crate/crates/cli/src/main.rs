use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tamerep::atlas::{build_atlas, AtlasOptions};
use tamerep::cohfun::{eval_coherent, eval_dual, lattice_anti_iso_check, pp_lattice, CoherentFunctor};
use tamerep::decomp::{decompose, Certificate};
use tamerep::generic::{coextension_tower, default_sample, generic_module, rperp_check, tower_embedding_probe};
use tamerep::io::{
    adic_tower_to_json, map_from_json, map_to_json, matrix_to_json, prufer_tower_to_json, read_rep, rep_to_json,
    to_canonical_string, AnyRep,
};
use tamerep::rep::{ext_cocycle_basis, ext_dim, ext_dim_cocycle, hom_basis, hom_dim};
use tamerep::tame::{
    adic_tower, catalog_label_of, classify, kron_preprojective, prufer_tower, tau_minus, torsion_split,
    transpose_dual_tau, CatalogLabel, TubePoint,
};
use tamerep::{Error, Field, Rational, Rep};
use tamerep_verify::{self as verify, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "tamerep", version, about = "Exact computations with Kronecker-quiver representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Write the representation file of a catalog label
    Build {
        label: String,
        /// Number of stages for Pruefer and adic labels
        #[arg(long)]
        truncate: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension of Hom(X, Y)
    Hom {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        basis: bool,
    },
    /// Dimension of Ext^1(X, Y), computed two ways
    Ext {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        basis: bool,
    },
    /// Indecomposable summands with multiplicities
    Decompose { x: PathBuf },
    /// Auslander-Reiten translate
    Tau {
        x: PathBuf,
        /// Apply the inverse translate instead
        #[arg(long)]
        minus: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// preprojective, regular or preinjective
    Classify { x: PathBuf },
    /// Split torsion sequence
    Torsion { x: PathBuf },
    /// Pruefer (or adic) tower at a point
    Prufer {
        point: String,
        #[arg(long, default_value_t = 3)]
        stages: usize,
        #[arg(long)]
        adic: bool,
    },
    /// Tower of universal coextensions of a module by simple regulars
    CoextTower {
        #[arg(long, default_value = "x")]
        point: String,
        #[arg(long, default_value_t = 3)]
        stages: usize,
        /// Module to coextend; defaults to P(0)
        #[arg(long)]
        p: Option<PathBuf>,
    },
    /// Hom and Ext from regular modules into the generic module
    GenericCheck {
        /// Comma-separated tube points; defaults to a fixed sample of twelve
        #[arg(long)]
        points: Option<String>,
        #[arg(long, default_value_t = 1)]
        max_length: usize,
    },
    /// Value of the coherent functor presented by a map file
    CoherentEval {
        phi: PathBuf,
        x: PathBuf,
        /// Evaluate the dual functor on a module over the opposite quiver
        #[arg(long)]
        dual: bool,
    },
    /// Lattice generated by pp-subgroups; generators are `C:c1,c2,...` with
    /// `C` a catalog label or a file
    PpLattice {
        x: PathBuf,
        #[arg(long = "gen")]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        /// Also check the anti-isomorphism with the lattice of the dual
        #[arg(long)]
        check_duality: bool,
    },
    /// Classification atlas
    Atlas {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, default_value_t = 2)]
        max_index: usize,
        #[arg(long, default_value_t = 2)]
        max_length: usize,
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SplitSearchExhausted(_) | Error::LatticeTooLarge(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
    }
}

fn pass(text: String) -> Outcome {
    Ok((text, true))
}

fn canonical(v: &Value) -> String {
    to_canonical_string(v)
}

fn emit(text: String, out: Option<PathBuf>) -> Outcome {
    match out {
        Some(p) => {
            fs::write(&p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            pass(String::new())
        }
        None => pass(text),
    }
}

fn read(path: &Path) -> Result<AnyRep, Failure> {
    read_rep(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_q(path: &Path) -> Result<Rep<Rational>, Failure> {
    Ok(read(path)?.into_rational()?)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Build { label, truncate, out } => build(&label, truncate, out),
        Command::Hom { x, y, basis } => match (read(&x)?, read(&y)?) {
            (AnyRep::Q(x), AnyRep::Q(y)) => hom(&x, &y, basis),
            (AnyRep::Qt(x), AnyRep::Qt(y)) => hom(&x, &y, basis),
            _ => Err(Failure::Usage("both files must be over the same field".into())),
        },
        Command::Ext { x, y, basis } => match (read(&x)?, read(&y)?) {
            (AnyRep::Q(x), AnyRep::Q(y)) => ext(&x, &y, basis),
            (AnyRep::Qt(x), AnyRep::Qt(y)) => ext(&x, &y, basis),
            _ => Err(Failure::Usage("both files must be over the same field".into())),
        },
        Command::Decompose { x } => decompose_cmd(&read_q(&x)?),
        Command::Tau { x, minus, out } => {
            let x = read_q(&x)?;
            let t = if minus { tau_minus(&x)? } else { transpose_dual_tau(&x)? };
            emit(canonical(&rep_to_json(&t)), out)
        }
        Command::Classify { x } => pass(format!("{}\n", classify(&read_q(&x)?)?)),
        Command::Torsion { x } => {
            let s = torsion_split(&read_q(&x)?)?;
            let ok = s.verify();
            Ok((
                canonical(&json!({
                    "torsion": rep_to_json(&s.torsion.rep),
                    "torsionfree": rep_to_json(&s.torsionfree.rep),
                    "verified": ok,
                })),
                ok,
            ))
        }
        Command::Prufer { point, stages, adic } => {
            let p: TubePoint = point.parse()?;
            let (mut v, checks) = if adic {
                let t = adic_tower(&p, stages)?;
                (adic_tower_to_json(&t), t.verify()?)
            } else {
                let t = prufer_tower(&p, stages)?;
                (prufer_tower_to_json(&t), t.verify()?)
            };
            let ok = checks.all_passed();
            v["verified"] = json!(ok);
            Ok((canonical(&v), ok))
        }
        Command::CoextTower { point, stages, p } => coext(&point, stages, p),
        Command::GenericCheck { points, max_length } => generic_check(points.as_deref(), max_length),
        Command::CoherentEval { phi, x, dual } => {
            let text = fs::read_to_string(&phi).map_err(|e| Failure::Usage(format!("{}: {e}", phi.display())))?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            let f = CoherentFunctor::new(map_from_json(&value)?);
            let dim = match (read(&x)?, dual) {
                (AnyRep::Q(x), false) => eval_coherent(&f, &x)?.dim,
                (AnyRep::Qt(x), false) => eval_coherent(&f.base_change(), &x)?.dim,
                (AnyRep::Q(y), true) => eval_dual(&f, &y)?,
                (AnyRep::Qt(y), true) => eval_dual(&f.base_change(), &y)?,
            };
            pass(format!("{dim}\n"))
        }
        Command::PpLattice {
            x,
            generators,
            format,
            check_duality,
        } => pp(&read_q(&x)?, &generators, format, check_duality),
        Command::Atlas {
            format,
            max_degree,
            max_index,
            max_length,
            depth,
        } => {
            let opts = AtlasOptions {
                max_degree,
                max_index,
                max_length,
                depth,
            };
            let atlas = build_atlas(&opts)?;
            pass(match format {
                Format::Json => canonical(&atlas.to_json()),
                Format::Dot => atlas.to_dot(),
            })
        }
        Command::Verify { suite, seed } => {
            let suites = verify::parse_selection(&suite)?;
            let report = verify::run(&suites, seed)?;
            let v = serde_json::to_value(&report).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok((canonical(&v), report.passed))
        }
    }
}

fn build(label: &str, truncate: Option<usize>, out: Option<PathBuf>) -> Outcome {
    let label: CatalogLabel = label.parse()?;
    let missing = || Failure::Usage(format!("{label} has infinite length; pass --truncate N"));
    let v = match &label {
        CatalogLabel::Generic => rep_to_json(&generic_module()),
        CatalogLabel::Pruefer(p) => prufer_tower_to_json(&prufer_tower(p, truncate.ok_or_else(missing)?)?),
        CatalogLabel::Adic(p) => adic_tower_to_json(&adic_tower(p, truncate.ok_or_else(missing)?)?),
        finite => rep_to_json(&finite.build()?),
    };
    emit(canonical(&v), out)
}

fn hom<F: Field>(x: &Rep<F>, y: &Rep<F>, basis: bool) -> Outcome {
    if !basis {
        return pass(format!("{}\n", hom_dim(x, y)?));
    }
    let maps = hom_basis(x, y)?;
    pass(canonical(&json!({
        "dim": maps.len(),
        "basis": maps.iter().map(map_to_json).collect::<Vec<_>>(),
    })))
}

fn ext<F: Field>(x: &Rep<F>, y: &Rep<F>, basis: bool) -> Outcome {
    let euler = ext_dim(x, y)?;
    let cocycle = ext_dim_cocycle(x, y)?;
    if euler != cocycle {
        return Err(Failure::Verification(format!(
            "Euler-defect Ext has dimension {euler}, cocycle Ext has dimension {cocycle}"
        )));
    }
    if !basis {
        return pass(format!("{euler}\n"));
    }
    let classes: Vec<Value> = ext_cocycle_basis(x, y)?
        .iter()
        .map(|z| Value::Array(z.mats.iter().map(matrix_to_json).collect()))
        .collect();
    pass(canonical(&json!({"dim": euler, "basis": classes})))
}

fn decompose_cmd(x: &Rep<Rational>) -> Outcome {
    let dec = decompose(x)?;
    let mut summands = Vec::new();
    for s in &dec.summands {
        let label = if s.rep.quiver().is_kronecker() {
            catalog_label_of(&s.rep).ok().map(|l| l.to_string())
        } else {
            None
        };
        let certificate = match s.certificate {
            Certificate::Local => "local".to_string(),
            Certificate::Field(d) => format!("field of degree {d}"),
        };
        summands.push(json!({
            "label": label,
            "dims": s.rep.dims(),
            "multiplicity": s.multiplicity,
            "certificate": certificate,
        }));
    }
    let ok = dec.verify();
    Ok((
        canonical(&json!({"dims": x.dims(), "summands": summands, "verified": ok})),
        ok,
    ))
}

fn coext(point: &str, stages: usize, p: Option<PathBuf>) -> Outcome {
    let point: TubePoint = point.parse()?;
    let p = match p {
        Some(path) => read_q(&path)?,
        None => kron_preprojective(0),
    };
    let tower = coextension_tower(&p, &point, stages)?;
    let checks = tower.verify()?;
    let probe = tower_embedding_probe(&tower)?;
    let ok = checks.all_passed() && probe.passed();
    let stages: Vec<Value> = tower
        .stages
        .iter()
        .map(|u| {
            json!({
                "r": u.r,
                "dims": u.middle().dims(),
                "hom_dim": u.hom_dim,
                "ext_dim": u.ext_dim,
                "connecting_rank": u.connecting_rank,
                "universal": u.is_universal(),
            })
        })
        .collect();
    let v = json!({
        "point": point.to_string(),
        "n": tower.n,
        "stages": stages,
        "checks": checks.checks,
        "embedding_probe": {
            "hom_dims": probe.hom_dims,
            "injective": probe.injective,
            "commuting": probe.commuting,
            "passed": probe.passed(),
        },
        "passed": ok,
    });
    Ok((canonical(&v), ok))
}

fn generic_check(points: Option<&str>, max_length: usize) -> Outcome {
    let points = match points {
        Some(list) => list
            .split(',')
            .map(|p| p.parse::<TubePoint>())
            .collect::<Result<Vec<_>, _>>()?,
        None => default_sample(),
    };
    if max_length == 0 {
        return Err(Failure::Usage("--max-length must be at least 1".into()));
    }
    let mut text = String::from("point\tr\thom\text\n");
    let mut ok = true;
    for p in &points {
        for r in 1..=max_length {
            let rep = rperp_check(&tamerep::tame::kron_regular(p, r)?)?;
            let row_ok = rep.is_orthogonal();
            ok &= row_ok;
            text.push_str(&format!(
                "{p}\t{r}\t{}\t{}{}\n",
                rep.hom_dim,
                rep.ext_dim_cocycle,
                if row_ok { "" } else { "\tFAIL" }
            ));
        }
    }
    Ok((text, ok))
}

fn generator(spec: &str) -> Result<(Rep<Rational>, Vec<Rational>), Failure> {
    let (module, element) = spec
        .rsplit_once(':')
        .ok_or_else(|| Failure::Usage(format!("generator `{spec}` is not of the form C:c1,c2,...")))?;
    let c = match module.parse::<CatalogLabel>() {
        Ok(l) => l.build()?,
        Err(_) => read_q(Path::new(module))?,
    };
    let element = element
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.trim().parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()?;
    if element.len() != c.total_dim() {
        return Err(Failure::Usage(format!(
            "generator `{spec}` needs {} coordinates, got {}",
            c.total_dim(),
            element.len()
        )));
    }
    Ok((c, element))
}

fn pp(x: &Rep<Rational>, specs: &[String], format: Format, check_duality: bool) -> Outcome {
    let gens = specs.iter().map(|s| generator(s)).collect::<Result<Vec<_>, _>>()?;
    if check_duality {
        let report = lattice_anti_iso_check(x, &gens)?;
        let v = serde_json::to_value(&report).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok((canonical(&v), report.passed()));
    }
    let lattice = pp_lattice(x, &gens)?;
    match format {
        Format::Dot => pass(lattice.to_dot()),
        Format::Json => {
            let nodes: Vec<Value> = lattice
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "dim": n.dim(),
                        "basis": n.subspace.basis().iter().map(|b| b.iter().map(Field::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            pass(canonical(&json!({
                "nodes": nodes,
                "covers": lattice.covers,
                "modular": lattice.is_modular(),
            })))
        }
    }
}
