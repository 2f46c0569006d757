//! `arq`: batch front end for translates and AR quivers of monomorphism categories.

mod label;
mod report;

use arq_core::algebra::Algebra;
use arq_core::ar::backend::{self, Backend};
use arq_core::ar::knit::{knit, module_indecomposables, power_knit, KnitResult};
use arq_core::ar::oracle::{oracle_left, oracle_verify, Method};
use arq_core::ar::shift::cy_check;
use arq_core::ar::smon::{tau_s_direct, Smon};
use arq_core::ar::{ar_sequence_mod, dot::to_dot};
use arq_core::decompose::decompose;
use arq_core::homological::tau;
use arq_core::io::{self, SubcatSpec};
use arq_core::morphcat::{cok, ker, mimo, stable_iso_s, MorObj};
use arq_core::rep::Rep;
use arq_core::subcat::Subcat;
use clap::{Args, Parser, Subcommand};
use label::{dims_name, Labeler};
use report::Report;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: arq_core::Error },
    #[error(transparent)]
    Core(#[from] arq_core::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "arq", version, about = "Auslander-Reiten translates and quivers of monomorphism categories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect an algebra file.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Modules over the algebra.
    #[command(subcommand)]
    Mod(ModCmd),
    /// Subcategories given by generators.
    #[command(subcommand)]
    Sub(SubCmd),
    /// The monomorphism category S(C) and its epimorphism twin F(C).
    #[command(subcommand)]
    Smon(SmonCmd),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Parse, build the path basis and report basic invariants.
    Check { file: PathBuf },
}

#[derive(Args, Clone)]
struct AlgArg {
    /// Algebra file.
    #[arg(short, long)]
    algebra: PathBuf,
    /// Cap on the number of objects any knitting run may discover.
    #[arg(long, default_value_t = 500)]
    cap: usize,
}

#[derive(Subcommand)]
enum ModCmd {
    /// Krull-Schmidt decomposition.
    Decompose {
        #[command(flatten)]
        alg: AlgArg,
        module: PathBuf,
    },
    /// The Auslander-Reiten translate DTr.
    Tau {
        #[command(flatten)]
        alg: AlgArg,
        module: PathBuf,
        /// Write the result here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The almost split sequence ending at an indecomposable non-projective module, certified
    /// against all indecomposables (the algebra must be representation-finite).
    ArSeq {
        #[command(flatten)]
        alg: AlgArg,
        module: PathBuf,
    },
}

#[derive(Args, Clone)]
struct SubArg {
    #[command(flatten)]
    alg: AlgArg,
    /// Subcategory file; all of Λ-mod when omitted.
    #[arg(long)]
    subcat: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SubCmd {
    /// Relative projectives and injectives, with optional Frobenius and closure checks.
    Check {
        #[command(flatten)]
        sub: SubArg,
        #[arg(long)]
        frobenius: bool,
        #[arg(long)]
        extension_closed: bool,
    },
}

#[derive(Args, Clone)]
struct SmonArg {
    #[command(flatten)]
    sub: SubArg,
    /// Model of τ_C: ambient, frobenius:d, gorenstein:d or search.
    #[arg(long)]
    backend: Option<Backend>,
}

#[derive(Args, Clone)]
struct MapArg {
    #[command(flatten)]
    smon: SmonArg,
    /// Morphism-object file.
    input: PathBuf,
    /// Write the result here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SmonCmd {
    /// Minimal monomorphism of a map in C.
    Mimo(MapArg),
    /// Cokernel of a monomorphism.
    Cok(MapArg),
    /// Kernel of an epimorphism.
    Ker(MapArg),
    /// τ in S(C).
    TauS(MapArg),
    /// τ in F(C).
    TauF(MapArg),
    /// τ⁻¹ in S(C).
    TauSInv(MapArg),
    /// Knit the AR quiver of S(C), or of its n-th power.
    Knit {
        #[command(flatten)]
        smon: SmonArg,
        /// Apply the S construction this many times: 2 knits S(S(C)).
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Write the quiver as Graphviz here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Knit S(C) and compare the translate formula with a brute-force search for every
    /// non-projective object.
    Verify {
        #[command(flatten)]
        smon: SmonArg,
    },
    /// Compare τ_S^P f with the predicted shift of f for every non-injective indecomposable.
    CyCheck {
        #[command(flatten)]
        smon: SmonArg,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        power: usize,
    },
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.display().to_string(), source })
}

fn input<T>(path: &Path, r: arq_core::Result<T>) -> CliResult<T> {
    r.map_err(|source| CliError::Input { path: path.display().to_string(), source })
}

fn load_algebra(path: &Path) -> CliResult<Algebra> {
    input(path, io::parse_algebra(&read(path)?))
}

fn load_module(alg: &Algebra, path: &Path) -> CliResult<Rep> {
    input(path, io::parse_module(alg, &read(path)?))
}

fn write_out(path: &Option<PathBuf>, text: String) -> CliResult<()> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|source| CliError::Read { path: p.display().to_string(), source })?;
    }
    Ok(())
}

/// C with names for its generators.
struct Workspace {
    alg: Algebra,
    c: Subcat,
    names: Vec<String>,
}

impl Workspace {
    fn load(arg: &SubArg) -> CliResult<Workspace> {
        let alg = load_algebra(&arg.alg.algebra)?;
        let spec = match &arg.subcat {
            None => SubcatSpec::AllModules,
            Some(p) => input(p, io::parse_subcat(&alg, &read(p)?))?,
        };
        let (c, names) = match spec {
            SubcatSpec::AllModules => {
                let gens = module_indecomposables(&alg, arg.alg.cap)?;
                let names = gens.iter().map(dims_name).collect();
                (Subcat::module_category(&alg, gens)?, names)
            }
            SubcatSpec::Generators(g) => {
                let (names, reps): (Vec<String>, Vec<Rep>) = g.into_iter().unzip();
                (Subcat::from_generators(&alg, reps)?, names)
            }
        };
        Ok(Workspace { alg, c, names })
    }

    fn labeler(&self) -> Labeler {
        Labeler::new(self.c.gens.clone(), self.names.clone())
    }

    fn list(&self, idx: &[usize]) -> String {
        idx.iter().map(|&i| self.names[i].as_str()).collect::<Vec<_>>().join(" ")
    }
}

fn smon(arg: &SmonArg, ws: &Workspace, rep: &mut Report) -> CliResult<Smon> {
    let b = match arg.backend {
        Some(b) => b,
        None if ws.c.module_category => Backend::Ambient,
        None => return Err(CliError::Usage("a subcategory given by generators needs --backend".into())),
    };
    rep.put("backend", b);
    let s = Smon::new(ws.c.clone(), b)?;
    if b != Backend::Ambient {
        for line in backend::validate(&ws.c, b)? {
            let found = line.search.map_or("none".to_string(), |j| ws.names[j].clone());
            rep.check(format!("validate.{}.tau={found}", ws.names[line.gen]), line.agrees);
        }
    }
    Ok(s)
}

fn algebra_check(file: &Path) -> CliResult<Report> {
    let alg = load_algebra(file)?;
    let mut r = Report::new("algebra check");
    r.put("field", alg.field);
    r.put("vertices", alg.num_vertices());
    r.put("arrows", alg.num_arrows());
    r.put("relations", alg.relations.len());
    r.put("dim", alg.dim());
    r.put("nilpotency_degree", alg.nilpotency_degree);
    for v in 0..alg.num_vertices() {
        let name = &alg.quiver.vertices[v];
        r.put(format!("projective.{name}"), dims_name(&Rep::standard_proj(&alg, v)));
        r.put(format!("injective.{name}"), dims_name(&Rep::standard_inj(&alg, v)));
    }
    match backend::self_injective_dimension(&alg, 8) {
        Some(d) => r.put("injdim_regular", d),
        None => r.put("injdim_regular", "> 8"),
    }
    Ok(r)
}

fn mod_cmd(cmd: &ModCmd) -> CliResult<Report> {
    match cmd {
        ModCmd::Decompose { alg, module } => {
            let a = load_algebra(&alg.algebra)?;
            let m = load_module(&a, module)?;
            let d = decompose(&m)?;
            let mut r = Report::new("mod decompose");
            r.put("dims", dims_name(&m));
            r.put("summands", d.summands.len());
            for (i, s) in d.summands.iter().enumerate() {
                r.put(format!("summand.{i}"), format!("{} class={} end={:?}", dims_name(&s.rep), s.class, s.cert));
            }
            r.check("indecomposable", d.is_indecomposable());
            Ok(r)
        }
        ModCmd::Tau { alg, module, out } => {
            let a = load_algebra(&alg.algebra)?;
            let m = load_module(&a, module)?;
            let t = tau(&m)?;
            let mut r = Report::new("mod tau");
            r.put("dims", dims_name(&m));
            r.put("tau.dims", dims_name(&t));
            write_out(out, io::emit_module(&t))?;
            Ok(r)
        }
        ModCmd::ArSeq { alg, module } => {
            let a = load_algebra(&alg.algebra)?;
            let m = load_module(&a, module)?;
            let inv = module_indecomposables(&a, alg.cap)?;
            let lab = Labeler::new(inv.clone(), inv.iter().map(dims_name).collect());
            let seq = ar_sequence_mod(&m)?;
            let cert = oracle_verify(&seq, &inv, Method::Formula)?;
            let mut r = Report::new("mod ar-seq");
            r.put("left", lab.module(&seq.left)?);
            r.put("mid", lab.module(&seq.mid)?);
            r.put("right", lab.module(&seq.right)?);
            r.put("inventory", inv.len());
            r.check("non_split", cert.non_split);
            r.check("certificate", cert.passed());
            Ok(r)
        }
    }
}

fn sub_check(sub: &SubArg, frobenius: bool, closed: bool) -> CliResult<Report> {
    let ws = Workspace::load(sub)?;
    let mut r = Report::new("sub check");
    r.put("generators", ws.c.gens.len());
    r.put("rel_proj", ws.list(&ws.c.rel_proj));
    r.put("rel_inj", ws.list(&ws.c.rel_inj));
    if frobenius {
        r.check("frobenius", ws.c.check_frobenius());
    }
    if closed {
        let rep = ws.c.check_extension_closed()?;
        r.put("closure.pairs", rep.pairs);
        r.put("closure.classes", rep.classes);
        r.put("closure.exhaustive", rep.exhaustive);
        for (i, v) in rep.violations.iter().enumerate() {
            r.put(format!("closure.violation.{i}"), v);
        }
        r.check("extension_closed", rep.closed());
    }
    Ok(r)
}

fn map_cmd(name: &str, arg: &MapArg) -> CliResult<Report> {
    let ws = Workspace::load(&arg.smon.sub)?;
    let mut r = Report::new(&format!("smon {name}"));
    let f = input(&arg.input, io::parse_morobj(&ws.alg, &read(&arg.input)?))?;
    let lab = ws.labeler();
    r.put("input", lab.morobj(&f)?);
    let needs_backend = matches!(name, "tau-s" | "tau-f" | "tau-s-inv");
    let out = if needs_backend {
        let s = smon(&arg.smon, &ws, &mut r)?;
        match name {
            "tau-s" => s.tau_s(&f)?,
            "tau-f" => s.tau_f(&f)?,
            _ => s.tau_s_inverse(&f)?,
        }
    } else {
        match name {
            "mimo" => mimo(&f.map, &ws.c)?,
            "cok" => cok(&f)?,
            _ => ker(&f)?,
        }
    };
    r.put("result", lab.morobj(&out)?);
    r.put("result.dims", format!("{}->{}", dims_name(out.source()), dims_name(out.target())));
    if matches!(name, "cok" | "tau-f") {
        r.check("result.in_f", out.in_f(&ws.c)?);
    } else {
        r.check("result.in_s", out.in_s(&ws.c)?);
    }
    write_out(&arg.out, io::emit_morobj(&out))?;
    Ok(r)
}

fn put_knit(r: &mut Report, prefix: &str, res: &KnitResult, names: &[String], detail: bool) {
    r.put(format!("{prefix}objects"), res.objects.len());
    r.put(format!("{prefix}projective"), res.projective.iter().filter(|&&p| p).count());
    r.put(format!("{prefix}injective"), res.injective.iter().filter(|&&p| p).count());
    r.put(format!("{prefix}arrows"), res.arrow_count());
    r.put(format!("{prefix}sequences"), res.sequences.len());
    if detail {
        for (i, n) in names.iter().enumerate() {
            let mut flags = String::new();
            if res.projective[i] {
                flags.push_str(" projective");
            }
            if res.injective[i] {
                flags.push_str(" injective");
            }
            r.put(format!("{prefix}object.{i}"), format!("{n}{flags}"));
        }
        for (&(a, b), &m) in &res.arrows {
            r.put(format!("{prefix}arrow"), format!("{} -> {} x{m}", names[a], names[b]));
        }
        for &(z, x) in &res.tau {
            r.put(format!("{prefix}tau"), format!("{} -> {}", names[z], names[x]));
        }
    }
    r.check(format!("{prefix}certified"), res.all_certified());
    r.check(format!("{prefix}tau_bijective"), res.tau_bijective());
}

fn knit_cmd(arg: &SmonArg, power: usize, dot: &Option<PathBuf>) -> CliResult<Report> {
    if power == 0 {
        return Err(CliError::Usage("--power must be at least 1".into()));
    }
    let ws = Workspace::load(&arg.sub)?;
    let mut r = Report::new("smon knit");
    let s = smon(arg, &ws, &mut r)?;
    r.put("power", power);
    let levels = power_knit(ws.c.clone(), s.backend, power, arg.sub.alg.cap)?;
    let mut lab = ws.labeler();
    let mut names = Vec::new();
    for (k, lvl) in levels.iter().enumerate() {
        let last = k + 1 == levels.len();
        if k > 0 {
            r.put(format!("level.{}.backend", k + 1), lvl.smon.backend);
        }
        names = lab.t2_names(&lvl.smon.c.alg, &lvl.knit.objects)?;
        let prefix = if last { String::new() } else { format!("level.{}.", k + 1) };
        put_knit(&mut r, &prefix, &lvl.knit, &names, last);
        lab = Labeler::new(lvl.knit.objects.clone(), names.clone());
    }
    if let Some(last) = levels.last() {
        write_out(dot, to_dot(&last.knit, &names))?;
    }
    Ok(r)
}

fn verify_cmd(arg: &SmonArg) -> CliResult<Report> {
    let ws = Workspace::load(&arg.sub)?;
    let mut r = Report::new("smon verify");
    let s = smon(arg, &ws, &mut r)?;
    let mut res = knit(&s, arg.sub.alg.cap)?;
    res.certify()?;
    let names = ws.labeler().t2_names(&ws.alg, &res.objects)?;
    let inv = Labeler::new(res.objects.clone(), names.clone());
    put_knit(&mut r, "", &res, &names, false);
    for (i, z) in res.objects.iter().enumerate() {
        if res.projective[i] {
            continue;
        }
        let f = MorObj::from_t2(&ws.alg, z);
        let formula = s.tau_s(&f)?;
        let contains = |x: &Rep| MorObj::from_t2(&ws.alg, x).in_s(&ws.c);
        let found = oracle_left(&res.objects, i, contains)?;
        let ok = match &found {
            Some((x, _)) => stable_iso_s(&formula, &MorObj::from_t2(&ws.alg, &res.objects[*x]), &ws.c)?,
            None => false,
        };
        let oracle = found.map_or("none".to_string(), |(x, _)| names[x].clone());
        r.put(format!("tau.{}", names[i]), format!("formula={} oracle={oracle}", inv.module(&formula.to_t2())?));
        r.check(format!("tau.{}.agrees", names[i]), ok);
        if s.backend == Backend::Ambient {
            let direct = tau_s_direct(&ws.c, &f)?;
            r.check(format!("tau.{}.direct_agrees", names[i]), stable_iso_s(&formula, &direct, &ws.c)?);
        }
    }
    Ok(r)
}

fn cy_cmd(arg: &SmonArg, d: usize, power: usize) -> CliResult<Report> {
    let ws = Workspace::load(&arg.sub)?;
    let mut r = Report::new("smon cy-check");
    let mut arg = arg.clone();
    arg.backend.get_or_insert(Backend::Frobenius(d));
    let s = smon(&arg, &ws, &mut r)?;
    r.put("d", d);
    r.put("power", power);
    let res = knit(&s, arg.sub.alg.cap)?;
    let names = ws.labeler().t2_names(&ws.alg, &res.objects)?;
    let objs: Vec<MorObj> = res.objects.iter().map(|x| MorObj::from_t2(&ws.alg, x)).collect();
    let lines = cy_check(&s, &objs, d, power)?;
    r.put("checked", lines.len());
    if let Some(l) = lines.first() {
        r.put("shift", l.shift);
    }
    for l in &lines {
        r.check(format!("object.{}", names[l.object]), l.ok);
    }
    Ok(r)
}

fn run(cli: &Cli) -> CliResult<Report> {
    match &cli.cmd {
        Cmd::Algebra(AlgebraCmd::Check { file }) => algebra_check(file),
        Cmd::Mod(m) => mod_cmd(m),
        Cmd::Sub(SubCmd::Check { sub, frobenius, extension_closed }) => sub_check(sub, *frobenius, *extension_closed),
        Cmd::Smon(cmd) => match cmd {
            SmonCmd::Mimo(a) => map_cmd("mimo", a),
            SmonCmd::Cok(a) => map_cmd("cok", a),
            SmonCmd::Ker(a) => map_cmd("ker", a),
            SmonCmd::TauS(a) => map_cmd("tau-s", a),
            SmonCmd::TauF(a) => map_cmd("tau-f", a),
            SmonCmd::TauSInv(a) => map_cmd("tau-s-inv", a),
            SmonCmd::Knit { smon, power, dot } => knit_cmd(smon, *power, dot),
            SmonCmd::Verify { smon } => verify_cmd(smon),
            SmonCmd::CyCheck { smon, d, power } => cy_cmd(smon, *d, *power),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            print!("{}", r.render());
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
