//! `dagkern`: batch front-end over instance files.
//!
//! Exit codes: 0 when everything requested passes, 1 when a law fails, 2 on
//! usage, parse or runtime errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dagkern_core::category::{Enumerable, KernelSub, DEFAULT_ENUMERATION_CAP};
use dagkern_core::io::{lattice_dot, lattice_json, parse_instance, Doc, Instance, JsonPayload};
use dagkern_core::kck::Kck;
use dagkern_core::ksub::KSubLattice;
use dagkern_core::laws::{fdhilb_context, run_kck, sort_report, Context, Law, LawCheck};
use dagkern_core::{Error, KernelOps, Result};

#[derive(Parser)]
#[command(name = "dagkern", version, about = "Dagger kernel category toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Export KSub(X) as JSON tables and/or a DOT Hasse diagram.
    Lattice {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Named kernels generating a finite sublattice instead of all of KSub(X).
        #[arg(long, num_args = 1..)]
        elements: Vec<String>,
    },
    /// Run law suites over all objects up to --max-size.
    Check {
        file: PathBuf,
        /// `all` or a comma-separated list of law names.
        #[arg(long, default_value = "all")]
        laws: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Required for fdhilb, whose homsets are sampled.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the four-way factorisation of a named morphism.
    Factor {
        file: PathBuf,
        #[arg(long)]
        morphism: String,
    },
    /// Compose two named morphisms in D_kck: `--compose f g` is f ∘ g.
    Kck {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["F", "G"], required = true)]
        compose: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    parse_instance(&text)
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)
        .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))
}

fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Lattice {
            file,
            object,
            dot,
            json,
            elements,
        } => {
            let out = LatticeOut { dot, json };
            match load(&file)? {
                Instance::FinRel(d) => lattice_enumerable(&d, &object, &elements, &out),
                Instance::FinPInj(d) => lattice_enumerable(&d, &object, &elements, &out),
                Instance::BoolHat(d) => lattice_enumerable(&d, &object, &elements, &out),
                Instance::FdHilb(d) => {
                    if elements.is_empty() {
                        return Err(Error::NotEnumerable);
                    }
                    let x = d.object(&object)?;
                    let l = generated(&d, x, &elements)?;
                    out.emit(&d.cat, &l)
                }
            }?;
            Ok(true)
        }
        Cmd::Check {
            file,
            laws,
            max_size,
            seed,
            samples,
            cap,
            format,
            out,
        } => {
            let laws = Law::parse_list(&laws)?;
            let inst = load(&file)?;
            let report = match &inst {
                Instance::FinRel(d) => check_enumerable(&d.cat, &laws, max_size, cap)?,
                Instance::FinPInj(d) => check_enumerable(&d.cat, &laws, max_size, cap)?,
                Instance::BoolHat(d) => check_enumerable(&d.cat, &laws, max_size, cap)?,
                Instance::FdHilb(d) => {
                    let seed = seed.ok_or_else(|| {
                        Error::Precondition("fdhilb suites are randomized; pass --seed".into())
                    })?;
                    if laws == [Law::Kck] {
                        return Err(Error::NotBoolean("fdhilb has no D_kck".into()));
                    }
                    let extra: Vec<_> = d
                        .morphisms
                        .iter()
                        .map(|(_, m)| m.clone())
                        .filter(|m| d.cat.is_kernel(m))
                        .collect();
                    let mut ctx = fdhilb_context(&d.cat, max_size, samples, seed, &extra)?;
                    ctx.run(&laws)
                }
            };
            let pass = report.iter().all(|l| l.pass);
            let doc = json!({
                "instance": inst.category(),
                "seed": seed,
                "max_size": max_size,
                "pass": pass,
                "checks": report,
            });
            let rendered = serde_json::to_string_pretty(&doc).expect("report serializes");
            if let Some(path) = out {
                write(&path, &rendered)?;
            }
            match format {
                Format::Json => println!("{rendered}"),
                Format::Text => print_text(&report, pass),
            }
            Ok(pass)
        }
        Cmd::Factor { file, morphism } => {
            let v = match load(&file)? {
                Instance::FinRel(d) => factor(&d, &morphism),
                Instance::FinPInj(d) => factor(&d, &morphism),
                Instance::BoolHat(d) => factor(&d, &morphism),
                Instance::FdHilb(d) => factor(&d, &morphism),
            }?;
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            Ok(true)
        }
        Cmd::Kck { file, compose } => {
            let (f, g) = (&compose[0], &compose[1]);
            let v = match load(&file)? {
                Instance::FinRel(d) => kck_compose(&d, f, g),
                Instance::FinPInj(d) => kck_compose(&d, f, g),
                Instance::BoolHat(d) => kck_compose(&d, f, g),
                Instance::FdHilb(_) => Err(Error::NotBoolean(
                    "fdhilb is not Boolean, so D_kck composition is undefined".into(),
                )),
            }?;
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            Ok(true)
        }
    }
}

struct LatticeOut {
    dot: Option<PathBuf>,
    json: Option<PathBuf>,
}

impl LatticeOut {
    fn emit<C: JsonPayload + KernelOps>(&self, cat: &C, l: &KSubLattice<C>) -> Result<()> {
        let tables = serde_json::to_string_pretty(&lattice_json(cat, l)).expect("json");
        if let Some(p) = &self.dot {
            write(p, &lattice_dot(cat, l))?;
        }
        if let Some(p) = &self.json {
            write(p, &tables)?;
        }
        if self.dot.is_none() && self.json.is_none() {
            println!("{tables}");
        }
        Ok(())
    }
}

fn generated<C: JsonPayload + KernelOps>(
    d: &Doc<C>,
    x: &C::Object,
    names: &[String],
) -> Result<KSubLattice<C>> {
    let gens = names
        .iter()
        .map(|n| {
            let m = d.morphism(n)?;
            if !d.cat.is_kernel(m) {
                return Err(Error::NotKernel);
            }
            Ok(KernelSub::from_kernel(m.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    KSubLattice::generate(&d.cat, x, gens, 4096)
}

fn lattice_enumerable<C: JsonPayload + Enumerable>(
    d: &Doc<C>,
    object: &str,
    elements: &[String],
    out: &LatticeOut,
) -> Result<()> {
    let x = d.object(object)?;
    let l = if elements.is_empty() {
        KSubLattice::build(&d.cat, x)?
    } else {
        generated(d, x, elements)?
    };
    out.emit(&d.cat, &l)
}

fn check_enumerable<C: JsonPayload + Enumerable + Clone>(
    cat: &C,
    laws: &[Law],
    max_size: usize,
    cap: u128,
) -> Result<Vec<LawCheck>> {
    let mut ctx = Context::enumerable(cat, max_size, cap)?;
    let mut report = ctx.run(laws);
    if laws.contains(&Law::Kck) {
        report.extend(run_kck(cat, max_size, cap));
        sort_report(&mut report);
    }
    Ok(report)
}

fn print_text(report: &[LawCheck], pass: bool) {
    for l in report {
        let status = if l.pass { "PASS" } else { "FAIL" };
        println!("{status} {:<8} {:<12} {}", l.law, l.instance, l.object);
        if let Some(w) = &l.witness {
            println!("     witness: {w}");
        }
    }
    let failed = report.iter().filter(|l| !l.pass).count();
    println!(
        "{} checks, {} failed: {}",
        report.len(),
        failed,
        if pass { "PASS" } else { "FAIL" }
    );
}

/// The four-way factorisation. A dagger-iso middle part is absorbed into
/// the coimage, so the middle is reported as an identity whenever it can be.
fn factor<C: JsonPayload + KernelOps>(d: &Doc<C>, name: &str) -> Result<Value> {
    let cat = &d.cat;
    let f = d.morphism(name)?;
    let fac = cat.full_factorise(f);
    let (coimage, middle) = if cat.is_dagger_iso(&fac.middle) {
        (fac.zero_epi_part.clone(), cat.identity(&cat.target(&fac.middle)))
    } else {
        (fac.coimage.clone(), fac.middle.clone())
    };
    let part = |m: &C::Morphism| {
        json!({
            "morphism": cat.morphism_json(m),
            "class": cat.classify(m),
            "identity": cat.is_identity(m),
        })
    };
    Ok(json!({
        "morphism": name,
        "input": cat.morphism_json(f),
        "class": cat.classify(f),
        "image": cat.sub_label(&cat.image(f)),
        "domain": cat.sub_label(&cat.domain_of(f)),
        "coimage": part(&coimage),
        "middle": part(&middle),
        "image_kernel": part(&fac.image),
        "zero_epi_part": cat.morphism_json(&fac.zero_epi_part),
    }))
}

fn kck_compose<C: JsonPayload + Enumerable + Clone>(d: &Doc<C>, f: &str, g: &str) -> Result<Value> {
    use dagkern_core::DaggerKernelCategory;
    let kck = Kck::new(d.cat.clone(), 2)?;
    let (fm, gm) = (d.morphism(f)?, d.morphism(g)?);
    let (fk, gk) = (kck.embed(fm)?, kck.embed(gm)?);
    let h = kck.compose(&fk, &gk)?;
    Ok(json!({
        "composite": format!("{f} ∘ {g}"),
        "pair": kck.data_json(&h),
        "projection": d.cat.morphism_json(&kck.project(&h)),
    }))
}
