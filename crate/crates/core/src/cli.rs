//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Every command produces an [`Outcome`] carrying a text rendering, a JSON
//! value and, for graph output, DOT. JSON maps are key-sorted, so reports for a
//! fixed configuration are byte-identical across runs.

use crate::bicomodule::{classify_set_foccs, find_cointegral, Bicomodule, BicomoduleError, Simplicity, UniversalBicomodule};
use crate::coalgebra::{Coalgebra, CoalgebraError, Report};
use crate::duality::{DualHopf, UniversalPairing};
use crate::hopf::{self, format_elem, generate_yd, parse_elem, right_covariant_comodule, BicovariantUniversal, HopfAlgebra, HopfError, HopfOps, Side};
use crate::linalg::{format_dense, Subspace};
use crate::presentations::{builtin, Built, PbwAlgebra, PresentationError, BUILTIN_NAMES};
use crate::qlie::{QLieError, QLieStructure};
use crate::scalar::{parse_scalar, Scalar};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::path::PathBuf;
use thiserror::Error;

pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Coalgebra(#[from] CoalgebraError),
    #[error(transparent)]
    Bicomodule(#[from] BicomoduleError),
    #[error(transparent)]
    QLie(#[from] QLieError),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

type CResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "focc", version, about = "First-order codifferential calculi on coalgebras and Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Default degree bound for truncated presentations.
    #[arg(long, global = true, env = "FOCC_TRUNC")]
    pub trunc: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Exit with status 3 when a generation stops at the truncation bound.
    #[arg(long, global = true)]
    pub require_complete: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Built-in structure name.
    #[arg(long, conflicts_with = "input")]
    pub builtin: Option<String>,
    /// JSON file with a coalgebra or Hopf algebra table.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct QLieArgs {
    #[command(flatten)]
    pub source: Source,
    /// Generators of the Y-D submodule, separated by `;`.
    #[arg(long, value_delimiter = ';', required = true)]
    pub generators: Vec<String>,
    /// Basis of the generated submodule to present the structure in.
    #[arg(long, value_delimiter = ';')]
    pub basis: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    pub labels: Vec<String>,
    #[arg(long, value_enum, default_value_t = SideArg::Left)]
    pub side: SideArg,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure.
    Validate {
        #[command(flatten)]
        source: Source,
        /// Word length for presentation checks.
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
    /// Dimensions of Υ^U and Kerδ^U.
    Universal {
        #[command(flatten)]
        source: Source,
    },
    /// Subbicomodule of Υ^U generated by the given vectors.
    Generate {
        #[command(flatten)]
        source: Source,
        #[arg(long = "singleton", required = true)]
        singletons: Vec<String>,
        /// Random probes for the simplicity test; 0 skips it.
        #[arg(long, default_value_t = 0)]
        probes: usize,
    },
    /// Cocommutator subspace of Υ^U.
    Cocommutator {
        #[command(flatten)]
        source: Source,
    },
    /// Blocks of Υ^U over a decomposition of the coalgebra into subcoalgebras.
    Decompose {
        #[command(flatten)]
        source: Source,
        /// One summand per flag, basis vectors separated by `;`.
        #[arg(long = "summand", required = true)]
        summands: Vec<String>,
    },
    /// Search for a cointegral.
    Cointegral {
        #[command(flatten)]
        source: Source,
    },
    /// Isomorphism classes of FOCCs over a set coalgebra.
    GraphClassify {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        dim: usize,
    },
    /// Y-D submodule of H̄ generated by elements.
    YdGenerate {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ';', required = true)]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Close under the coaction only.
        #[arg(long)]
        comodule_only: bool,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Bicovariant FOCC Φ_R(𝓛⊗H) of a finite Hopf algebra.
    Bicovariant {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ';', required = true)]
        generators: Vec<String>,
    },
    /// Braiding and bracket tables of a generated Y-D submodule.
    Qlie(QLieArgs),
    /// Check braid relation, quantum Jacobi identities and factorization.
    QlieCertify(QLieArgs),
    /// Dual Hopf algebra of a finite Hopf algebra.
    Dual {
        #[command(flatten)]
        source: Source,
    },
    /// Pairing between Υ^U and Kerμ° with the duality identities.
    Pair {
        #[command(flatten)]
        source: Source,
    },
    /// Specialize the parameter in a quantum Lie structure.
    Limit {
        #[command(flatten)]
        qlie: QLieArgs,
        #[arg(long, default_value = "1")]
        value: String,
        /// Basis labels sent to zero before comparing with the flip.
        #[arg(long, value_delimiter = ',')]
        vanish: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Ok,
    ValidationFailed,
    Incomplete,
}

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
    pub status: Status,
}

impl Outcome {
    fn new(text: String, json: Value) -> Outcome {
        Outcome { text, json, dot: None, status: Status::Ok }
    }
    fn failed_if(mut self, bad: bool) -> Outcome {
        if bad {
            self.status = Status::ValidationFailed;
        }
        self
    }
    fn incomplete_if(mut self, limited: bool) -> Outcome {
        if limited && self.status == Status::Ok {
            self.status = Status::Incomplete;
        }
        self
    }

    pub fn render(&self, format: Format) -> CResult<String> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => Ok(serde_json::to_string_pretty(&self.json).expect("report serializes")),
            Format::Dot => self.dot.clone().ok_or_else(|| CliError::Usage("this command has no DOT output".into())),
        }
    }

    pub fn exit_code(&self, require_complete: bool) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::ValidationFailed => 1,
            Status::Incomplete if require_complete => 3,
            Status::Incomplete => 0,
        }
    }
}

fn load(src: &Source, trunc: Option<usize>) -> CResult<Built> {
    match (&src.builtin, &src.input) {
        (Some(name), _) => Ok(builtin(name, trunc)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            if v.get("product").is_some() {
                Ok(Built::Hopf(HopfAlgebra::from_json(&text)?))
            } else {
                Ok(Built::Coalgebra(Coalgebra::from_json(&text)?))
            }
        }
        (None, None) => Err(CliError::Usage(format!("give --builtin or --input; built-ins: {}", BUILTIN_NAMES.join(", ")))),
    }
}

fn coalgebra_of(b: &Built) -> CResult<&Coalgebra> {
    b.coalgebra().ok_or_else(|| CliError::Usage("this command needs a finite coalgebra".into()))
}

fn finite_hopf(b: &Built) -> CResult<&HopfAlgebra> {
    match b {
        Built::Hopf(h) => Ok(h),
        _ => Err(CliError::Usage("this command needs a finite Hopf algebra".into())),
    }
}

fn report_json(r: &Report) -> Value {
    json!({ "ok": r.ok(), "checked": r.checked, "violations": r.violations })
}

fn report_text(title: &str, r: &Report) -> String {
    let mut s = format!("{title}: {} checks, {}\n", r.checked, if r.ok() { "pass" } else { "FAIL" });
    for v in r.violations.iter().take(20) {
        s.push_str(&format!("  {}: {}\n", v.axiom, v.at));
    }
    if r.violations.len() > 20 {
        s.push_str(&format!("  ... {} more\n", r.violations.len() - 20));
    }
    s
}

fn subspace_lines(s: &Subspace, fmt: impl Fn(&[Scalar]) -> String) -> Vec<String> {
    s.basis().iter().map(|v| fmt(v)).collect()
}

fn listing(title: &str, dim: usize, lines: &[String]) -> String {
    let mut s = format!("{title}: dim {dim}\n");
    for l in lines {
        s.push_str(&format!("  {l}\n"));
    }
    s
}

pub fn run(cli: &Cli) -> CResult<Outcome> {
    let trunc = cli.trunc;
    match &cli.command {
        Command::Validate { source, depth } => {
            let b = load(source, trunc)?;
            let (name, rep) = match &b {
                Built::Coalgebra(c) => ("coalgebra", c.validate()),
                Built::Hopf(h) => ("Hopf algebra", h.validate()),
                Built::Filtered(p) => ("presentation", p.validate(*depth)),
            };
            let bad = !rep.ok();
            Ok(Outcome::new(report_text(name, &rep), json!({ "kind": name, "report": report_json(&rep) })).failed_if(bad))
        }
        Command::Universal { source } => {
            let b = load(source, trunc)?;
            let u = UniversalBicomodule::build(coalgebra_of(&b)?);
            let k = u.kernel_delta();
            let n = u.coalgebra().dim();
            let basis: Vec<String> = (0..u.dim()).map(|i| u.labels()[i].clone()).collect();
            let kernel = subspace_lines(&k, |v| u.format_vector(v));
            let text = format!(
                "coalgebra dim {n}\nΥ^U dim {}\nKerδ^U dim {}\n{}",
                u.dim(),
                k.dim(),
                listing("Kerδ^U basis", k.dim(), &kernel)
            );
            Ok(Outcome::new(text, json!({ "coalgebra_dim": n, "universal_dim": u.dim(), "kernel_delta_dim": k.dim(), "basis": basis, "kernel_delta": kernel })))
        }
        Command::Generate { source, singletons, probes } => {
            let b = load(source, trunc)?;
            let u = UniversalBicomodule::build(coalgebra_of(&b)?);
            let gens = singletons.iter().map(|t| u.parse_vector(t)).collect::<Result<Vec<_>, _>>()?;
            let s = u.generate(&gens)?;
            let img = u.delta_image(&s);
            let c = u.coalgebra();
            let basis = subspace_lines(&s, |v| u.format_vector(v));
            let image = subspace_lines(&img, |v| format_dense(v, c.labels(), c.field()));
            let restricted = u.bicomodule().restrict(&s)?;
            let delta = u.delta_u().mul(&s.basis_matrix().transpose());
            let focc = crate::bicomodule::is_focc(&u, &restricted, &delta)?;
            let mut text = listing("generated subbicomodule", s.dim(), &basis);
            text.push_str(&listing("δ^U image", img.dim(), &image));
            text.push_str(&format!("FOCC: {focc}\n"));
            let mut j = json!({ "dim": s.dim(), "basis": basis, "delta_image": image, "focc": focc });
            if *probes > 0 {
                let verdict = match u.bicomodule().is_simple_probe(&s, *probes, cli.seed)? {
                    Simplicity::Simple { probes } => json!({ "simple": true, "probes": probes }),
                    Simplicity::Inconclusive { probes } => json!({ "simple": null, "probes": probes }),
                    Simplicity::HasProperSub { generator, witness } => {
                        json!({ "simple": false, "generator": u.format_vector(&generator), "proper_dim": witness.dim() })
                    }
                };
                text.push_str(&format!("simplicity probe: {verdict}\n"));
                j["simplicity"] = verdict;
            }
            Ok(Outcome::new(text, j))
        }
        Command::Cocommutator { source } => {
            let b = load(source, trunc)?;
            let u = UniversalBicomodule::build(coalgebra_of(&b)?);
            let s = u.bicomodule().cocommutator()?;
            let basis = subspace_lines(&s, |v| u.format_vector(v));
            Ok(Outcome::new(listing("cocommutator subspace", s.dim(), &basis), json!({ "dim": s.dim(), "basis": basis })))
        }
        Command::Decompose { source, summands } => {
            let b = load(source, trunc)?;
            let c = coalgebra_of(&b)?;
            let reg = Bicomodule::regular(c);
            let subs = summands
                .iter()
                .map(|s| {
                    let vs = s.split(';').map(|t| reg.parse_vector(t.trim())).collect::<Result<Vec<_>, _>>()?;
                    Ok(Subspace::from_vectors(c.dim(), &vs))
                })
                .collect::<CResult<Vec<_>>>()?;
            let u = UniversalBicomodule::build(c);
            let blocks = u.bicomodule().decompose(&subs)?;
            let mut text = String::new();
            let mut js = Vec::new();
            for (i, j, s) in &blocks {
                let basis = subspace_lines(s, |v| u.format_vector(v));
                text.push_str(&listing(&format!("block ({i},{j})"), s.dim(), &basis));
                js.push(json!({ "left": i, "right": j, "dim": s.dim(), "basis": basis }));
            }
            Ok(Outcome::new(text, json!({ "blocks": js })))
        }
        Command::Cointegral { source } => {
            let b = load(source, trunc)?;
            let c = coalgebra_of(&b)?;
            let n = c.dim();
            let labels: Vec<String> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| format!("({}⊗{})*", c.label(a), c.label(b))).collect();
            match find_cointegral(c) {
                Some(w) => {
                    let s = format_dense(&w, &labels, c.field());
                    Ok(Outcome::new(format!("cointegral: {s}\n"), json!({ "exists": true, "cointegral": s })))
                }
                None => Ok(Outcome::new("no cointegral\n".into(), json!({ "exists": false }))),
            }
        }
        Command::GraphClassify { points, dim } => {
            if *points > 8 || *points == 0 {
                return Err(CliError::Usage("points must be between 1 and 8".into()));
            }
            let classes = classify_set_foccs(*points, *dim);
            let labelled: usize = classes.iter().map(|c| c.count).sum();
            let mut text = format!("{} classes of {}-dimensional FOCCs on {} points ({} labelled)\n", classes.len(), dim, points, labelled);
            for (k, c) in classes.iter().enumerate() {
                let edges: Vec<String> = c.representative.edges.iter().map(|&(a, b)| format!("{}→{}", c.representative.vertices[a], c.representative.vertices[b])).collect();
                text.push_str(&format!("  class {k}: [{}] ×{}\n", edges.join(", "), c.count));
            }
            let dot = classes.iter().map(|c| c.representative.to_dot()).collect::<String>();
            let mut o = Outcome::new(text, json!({ "points": points, "dim": dim, "classes": classes.len(), "labelled": labelled, "representatives": classes }));
            o.dot = Some(dot);
            Ok(o)
        }
        Command::YdGenerate { source, generators, side, comodule_only, bound } => {
            let b = load(source, trunc)?;
            match &b {
                Built::Hopf(h) => yd_command(h, generators, (*side).into(), *comodule_only, *bound),
                Built::Filtered(p) => yd_command(p, generators, (*side).into(), *comodule_only, *bound),
                Built::Coalgebra(_) => Err(CliError::Usage("yd-generate needs a Hopf algebra".into())),
            }
        }
        Command::Bicovariant { source, generators } => {
            let b = load(source, trunc)?;
            let h = finite_hopf(&b)?;
            let gens = generators.iter().map(|t| parse_elem(h, t)).collect::<Result<Vec<_>, _>>()?;
            let yd = generate_yd(h, Side::Left, &gens, None)?;
            let bars = h.bar_indices();
            let dense: Vec<Vec<Scalar>> = yd.span.basis().iter().map(|e| hopf::elem_to_dense_bar(h, e)).collect();
            let l = Subspace::from_vectors(bars.len(), &dense);
            let bc = BicovariantUniversal::build(h)?;
            let f = bc.focc_from_yd(&l)?;
            let u = &bc.universal;
            let yd_basis: Vec<String> = yd.span.basis().iter().map(|e| format_elem(h, e)).collect();
            let basis = subspace_lines(&f, |v| u.format_vector(v));
            let mut text = listing("Y-D submodule", yd.dim(), &yd_basis);
            text.push_str(&listing("Φ_R image", f.dim(), &basis));
            Ok(Outcome::new(text, json!({ "yd_dim": yd.dim(), "yd_basis": yd_basis, "focc_dim": f.dim(), "focc_basis": basis, "certificate": yd.certificate })))
        }
        Command::Qlie(a) => {
            let b = load(&a.source, trunc)?;
            let (q, cert, _) = qlie_of(&b, a, false)?;
            let limited = !cert.is_complete();
            let mut text = tables_text(&q);
            text.push_str(&format!("generation: {:?}\n", cert.status));
            Ok(Outcome::new(text, json!({ "structure": q.to_doc(), "certificate": cert })).incomplete_if(limited))
        }
        Command::QlieCertify(a) => {
            let b = load(&a.source, trunc)?;
            let (q, cert, fac) = qlie_of(&b, a, true)?;
            let rep = q.certify();
            let fac = fac.expect("factorization requested");
            let bad = !rep.ok() || !fac.ok();
            let text = format!("{}{}generation: {:?}\n", report_text("identities", &rep), report_text("factorization", &fac), cert.status);
            Ok(Outcome::new(text, json!({ "identities": report_json(&rep), "factorization": report_json(&fac), "certificate": cert }))
                .failed_if(bad)
                .incomplete_if(!cert.is_complete()))
        }
        Command::Dual { source } => {
            let b = load(source, trunc)?;
            let h = finite_hopf(&b)?;
            let d = DualHopf::build(h)?;
            let hd = d.as_hopf();
            let rep = hd.validate();
            let bad = !rep.ok();
            let doc = serde_json::to_value(hd.to_doc()).expect("table serializes");
            let mut text = format!("dual of dim {}\n", hd.dim());
            for i in 0..hd.dim() {
                let e = hopf::mon(i);
                text.push_str(&format!("  Δ({}) = {}\n", hd.label(i), hopf::format_tensor(&hd, &hopf::coproduct(&hd, &e)?)));
            }
            for i in 0..hd.dim() {
                for j in 0..hd.dim() {
                    let p = hopf::mul(&hd, &hopf::mon(i), &hopf::mon(j))?;
                    text.push_str(&format!("  {}·{} = {}\n", hd.label(i), hd.label(j), format_elem(&hd, &p)));
                }
            }
            text.push_str(&report_text("Hopf axioms", &rep));
            Ok(Outcome::new(text, json!({ "dual": doc, "report": report_json(&rep) })).failed_if(bad))
        }
        Command::Pair { source } => {
            let b = load(source, trunc)?;
            let h = finite_hopf(&b)?;
            let p = UniversalPairing::build(h)?;
            let n = h.dim();
            let rank = p.gram_rank();
            let rep = p.verify()?;
            let tangent = p.tangent_space()?;
            let ker = p.vector_field_kernel();
            let bad = !rep.ok() || rank != n * (n - 1);
            let text = format!(
                "Kerμ° dim {}\nGram rank {rank} (n(n−1) = {})\n{}\ntangent space dim {}\nkernel of v: dim {}\n",
                p.ker_mu.dim(),
                n * (n - 1),
                rep.render(),
                tangent.dim(),
                ker.dim()
            );
            Ok(Outcome::new(
                text,
                json!({ "ker_mu_dim": p.ker_mu.dim(), "gram_rank": rank, "identities": rep, "tangent_dim": tangent.dim(), "vector_field_kernel_dim": ker.dim() }),
            )
            .failed_if(bad))
        }
        Command::Limit { qlie, value, vanish } => {
            let b = load(&qlie.source, trunc)?;
            let (q, _, _) = qlie_of(&b, qlie, false)?;
            let v = parse_scalar(value, &q.field).map_err(|e| CliError::Usage(e.to_string()))?;
            let idx = vanish
                .iter()
                .map(|l| q.index_of(l).ok_or_else(|| CliError::Usage(format!("unknown basis label `{l}`"))))
                .collect::<CResult<Vec<_>>>()?;
            let lim = q.classical_limit(&v, &idx)?;
            let flip = lim.is_flip();
            let rep = lim.certify();
            let mut text = tables_text(&lim);
            text.push_str(&format!("flip braiding: {flip}\n"));
            text.push_str(&report_text("identities", &rep));
            Ok(Outcome::new(text, json!({ "structure": lim.to_doc(), "flip": flip, "identities": report_json(&rep) })))
        }
    }
}

fn yd_command<H: HopfOps>(h: &H, generators: &[String], side: Side, comodule_only: bool, bound: Option<usize>) -> CResult<Outcome> {
    let gens = generators.iter().map(|t| parse_elem(h, t)).collect::<Result<Vec<_>, _>>()?;
    let g = if comodule_only { right_covariant_comodule(h, &gens, bound)? } else { generate_yd(h, side, &gens, bound)? };
    let basis: Vec<String> = g.span.basis().iter().map(|e| format_elem(h, e)).collect();
    let mut text = listing(if comodule_only { "comodule" } else { "Y-D submodule" }, g.dim(), &basis);
    text.push_str(&format!("status: {:?} (bound {:?})\n", g.certificate.status, g.certificate.bound));
    if let Some(w) = &g.certificate.witness {
        text.push_str(&format!("escaped: {w}\n"));
    }
    let limited = !g.certificate.is_complete();
    Ok(Outcome::new(text, json!({ "dim": g.dim(), "basis": basis, "certificate": g.certificate })).incomplete_if(limited))
}

type QLieRun = (QLieStructure, hopf::CompletenessCertificate, Option<Report>);

fn qlie_of(b: &Built, a: &QLieArgs, factorization: bool) -> CResult<QLieRun> {
    fn go<H: HopfOps>(h: &H, a: &QLieArgs, factorization: bool) -> CResult<QLieRun> {
        let gens = a.generators.iter().map(|t| parse_elem(h, t)).collect::<Result<Vec<_>, _>>()?;
        let g = generate_yd(h, a.side.into(), &gens, None)?;
        let basis = if a.basis.is_empty() {
            g.span.basis()
        } else {
            let basis = a.basis.iter().map(|t| parse_elem(h, t)).collect::<Result<Vec<_>, _>>()?;
            if basis.len() != g.dim() || basis.iter().any(|v| !g.span.contains(v)) {
                return Err(CliError::Usage(format!("--basis does not span the generated submodule of dim {}", g.dim())));
            }
            basis
        };
        let labels = if a.labels.is_empty() {
            basis.iter().map(|e| format_elem(h, e)).collect()
        } else if a.labels.len() == basis.len() {
            a.labels.clone()
        } else {
            return Err(CliError::Usage("--labels must match the basis length".into()));
        };
        let q = QLieStructure::build(h, a.side.into(), &basis, labels)?;
        let fac = if factorization { Some(q.check_factorization(h, &basis)?) } else { None };
        Ok((q, g.certificate, fac))
    }
    match b {
        Built::Hopf(h) => go(h, a, factorization),
        Built::Filtered(p) => go::<PbwAlgebra>(p, a, factorization),
        Built::Coalgebra(_) => Err(CliError::Usage("quantum Lie structures need a Hopf algebra".into())),
    }
}

fn tables_text(q: &QLieStructure) -> String {
    let n = q.dim();
    let mut s = format!("{:?} quantum Lie structure, dim {n}\nbraiding:\n", q.side);
    for i in 0..n {
        for j in 0..n {
            s.push_str(&format!("  τ({}⊗{}) = {}\n", q.labels[i], q.labels[j], q.format_braiding(i, j)));
        }
    }
    s.push_str("bracket:\n");
    for i in 0..n {
        for j in 0..n {
            s.push_str(&format!("  [{},{}] = {}\n", q.labels[i], q.labels[j], q.format_bracket(i, j)));
        }
    }
    s
}
