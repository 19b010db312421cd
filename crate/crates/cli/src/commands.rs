use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::anyhow;
use clap::CommandFactory;
use serde::Serialize;
use serde_json::{json, Value};

use gxmod::algebra::{Gwa, Hom, Subgroup};
use gxmod::cat1::cat1_to_gxmod;
use gxmod::enumerate::{
    catalog_each, enumerate_coverings, enumerate_ext_actions, enumerate_gcat1s, enumerate_gxmods,
    enumerate_liftings, enumerate_self_actions, morphism_cap_from_env, verify_equivalence,
    CatalogEntry, EquivalenceReport, SearchPool,
};
use gxmod::fixtures::{self, Fixture};
use gxmod::functor::{covering_to_lifting, lifting_to_covering};
use gxmod::io::{read_document, to_json_pretty, Document};
use gxmod::lifting::{natural_lifting, quotient_lifting};
use gxmod::xmod::{
    image_gxmod, kernel_gxmod, transport_both, transport_codomain, transport_domain, GXMod,
};
use gxmod::Error;

use crate::{Cli, Command, Construction, Enumeration, Format};

pub const PASS: i32 = 0;
pub const FAIL: i32 = 1;
pub const BAD_INPUT: i32 = 2;
pub const INCOMPLETE: i32 = 3;

/// An error together with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: anyhow::Error,
}

impl Failure {
    fn new(code: i32, error: impl Into<anyhow::Error>) -> Self {
        Self {
            code,
            error: error.into(),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Structural(_) | Error::Io(_) => BAD_INPUT,
        Error::Precondition(_)
        | Error::Invalid { .. }
        | Error::Mismatch(_)
        | Error::Counterexample { .. } => FAIL,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(exit_code(&e), e)
    }
}

type Outcome = Result<i32, Failure>;

pub fn run(cli: &Cli) -> Outcome {
    if let Some(dir) = &cli.seed_fixtures {
        seed_fixtures(dir)?;
    }
    let Some(command) = &cli.command else {
        if cli.seed_fixtures.is_some() {
            return Ok(PASS);
        }
        Cli::command()
            .print_help()
            .map_err(|e| Failure::new(BAD_INPUT, e))?;
        return Ok(BAD_INPUT);
    };
    match command {
        Command::Validate { files } => validate(cli, files),
        Command::Construct { what } => construct(cli, what),
        Command::Enumerate { what } => enumerate(cli, what),
        Command::Equivalence { base } => equivalence(cli, base),
        Command::Catalog => run_catalog(cli),
    }
}

fn seed_fixtures(dir: &Path) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::new(BAD_INPUT, anyhow!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let all = fixtures::all();
    for (stem, fixture) in &all {
        let doc = match fixture {
            Fixture::Gwa(g) => Document::Gwa(g.clone()),
            Fixture::GXMod(x) => Document::GXMod(x.clone()),
            Fixture::GCat1(c) => Document::GCat1(c.clone()),
        };
        fs::write(
            dir.join(format!("{stem}.json")),
            doc.to_json_pretty() + "\n",
        )
        .map_err(io)?;
    }
    eprintln!("wrote {} fixtures to {}", all.len(), dir.display());
    Ok(())
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    let result = match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| anyhow!("{}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(anyhow::Error::from),
    };
    result.map_err(|e| Failure::new(BAD_INPUT, e))
}

fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    to_json_pretty(value) + "\n"
}

fn load(path: &Path) -> Result<Document, Failure> {
    read_document(path).map_err(|e| Failure::new(exit_code(&e), anyhow!("{}: {e}", path.display())))
}

/// Loads a document and insists that it passes validation.
fn load_valid(path: &Path) -> Result<Document, Failure> {
    let doc = load(path)?;
    let report = doc.validate();
    if !report.is_valid() {
        return Err(Failure::new(
            FAIL,
            anyhow!("{}: {} is invalid:\n{report}", path.display(), doc.kind()),
        ));
    }
    Ok(doc)
}

fn wrong_kind(path: &Path, want: &str, doc: &Document) -> Failure {
    Failure::new(
        BAD_INPUT,
        anyhow!(
            "{}: expected a {want} file, found a {}",
            path.display(),
            doc.kind()
        ),
    )
}

fn load_gxmod(path: &Path) -> Result<GXMod, Failure> {
    match load_valid(path)? {
        Document::GXMod(x) => Ok(x),
        other => Err(wrong_kind(path, "generalized crossed module", &other)),
    }
}

fn load_gwa(path: &Path) -> Result<Gwa, Failure> {
    match load_valid(path)? {
        Document::Gwa(g) => Ok(g),
        other => Err(wrong_kind(path, "group with action", &other)),
    }
}

fn validate(cli: &Cli, files: &[PathBuf]) -> Outcome {
    let mut code = PASS;
    let mut human = String::new();
    let mut entries = Vec::new();
    for path in files {
        let shown = path.display();
        match read_document(path) {
            Err(e) => {
                code = code.max(exit_code(&e));
                human += &format!("{shown}: cannot read: {e}\n");
                entries.push(json!({ "file": shown.to_string(), "error": e.to_string() }));
            }
            Ok(doc) => {
                let report = doc.validate();
                if report.is_valid() {
                    human += &format!("{shown}: {} valid\n", doc.kind());
                } else {
                    code = code.max(FAIL);
                    human += &format!("{shown}: {} invalid, {report}", doc.kind());
                    if !human.ends_with('\n') {
                        human.push('\n');
                    }
                }
                entries.push(json!({
                    "file": shown.to_string(),
                    "kind": doc.kind(),
                    "valid": report.is_valid(),
                    "report": report,
                }));
            }
        }
    }
    match cli.format {
        Format::Human => emit(cli, &human)?,
        Format::Json => emit(cli, &pretty(&entries))?,
    }
    Ok(code)
}

fn parse_map(v: &[usize]) -> Hom {
    Hom::new(v.to_vec())
}

fn construct(cli: &Cli, what: &Construction) -> Outcome {
    let out = match what {
        Construction::KernelGxmod { input } => Document::GXMod(kernel_gxmod(&load_gxmod(input)?)?),
        Construction::ImageGxmod { input } => Document::GXMod(image_gxmod(&load_gxmod(input)?)?),
        Construction::Transport {
            input,
            codomain_map,
            codomain,
            domain_map,
            domain,
        } => {
            let x = load_gxmod(input)?;
            let target = codomain
                .as_deref()
                .map(load_gwa)
                .transpose()?
                .unwrap_or_else(|| x.b().clone());
            let source = domain
                .as_deref()
                .map(load_gwa)
                .transpose()?
                .unwrap_or_else(|| x.a().clone());
            let moved = match (codomain_map, domain_map) {
                (None, None) => {
                    return Err(Failure::new(
                        BAD_INPUT,
                        anyhow!("transport needs --codomain-map or --domain-map"),
                    ))
                }
                (Some(f), None) => transport_codomain(&x, &target, &parse_map(f))?.xmod,
                (None, Some(g)) => transport_domain(&x, &source, &parse_map(g))?.xmod,
                (Some(f), Some(g)) => {
                    transport_both(&x, &target, &parse_map(f), &source, &parse_map(g))?.both
                }
            };
            Document::GXMod(moved)
        }
        Construction::Cat1ToGxmod { input } => match load_valid(input)? {
            Document::GCat1(c) => Document::GXMod(cat1_to_gxmod(&c)?),
            other => return Err(wrong_kind(input, "generalized cat1-group", &other)),
        },
        Construction::NaturalLifting { input } => {
            Document::Lifting(natural_lifting(&load_gxmod(input)?)?)
        }
        Construction::QuotientLifting { input, subgroup } => {
            let x = load_gxmod(input)?;
            let n = Subgroup::new(x.a().group(), subgroup.iter().copied())?;
            Document::Lifting(quotient_lifting(&x, &n)?)
        }
        Construction::LiftToCover { input } => match load_valid(input)? {
            Document::Lifting(l) => Document::Covering(lifting_to_covering(&l)?),
            other => return Err(wrong_kind(input, "lifting", &other)),
        },
        Construction::CoverToLift { input } => match load_valid(input)? {
            Document::Covering(c) => Document::Lifting(covering_to_lifting(&c)?),
            other => return Err(wrong_kind(input, "covering", &other)),
        },
    };
    let report = out.validate();
    if !report.is_valid() {
        return Err(Failure::new(
            FAIL,
            anyhow!("constructed {} failed validation:\n{report}", out.kind()),
        ));
    }
    emit(cli, &(out.to_json_pretty() + "\n"))?;
    if cli.format == Format::Human {
        eprintln!("constructed a {}; it validates", out.kind());
    }
    Ok(PASS)
}

fn listing<T: Serialize>(cli: &Cli, title: &str, items: &[T]) -> Outcome {
    match cli.format {
        Format::Json => emit(cli, &pretty(items))?,
        Format::Human => {
            let mut text = format!("{} {title}\n", items.len());
            for (i, item) in items.iter().enumerate() {
                text += &format!(
                    "{i}: {}\n",
                    serde_json::to_string(item).expect("serializable")
                );
            }
            emit(cli, &text)?;
        }
    }
    Ok(PASS)
}

fn pool(cli: &Cli) -> Result<SearchPool, Failure> {
    Ok(SearchPool::new(cli.bound)?)
}

fn enumerate(cli: &Cli, what: &Enumeration) -> Outcome {
    match what {
        Enumeration::SelfActions => {
            let pool = pool(cli)?;
            let per_group: Vec<Value> = pool
                .groups()
                .iter()
                .map(|g| json!({ "group": g.name(), "order": g.order(), "self_actions": enumerate_self_actions(g) }))
                .collect();
            match cli.format {
                Format::Json => emit(cli, &pretty(&per_group))?,
                Format::Human => {
                    let text: String = pool
                        .groups()
                        .iter()
                        .map(|g| {
                            format!(
                                "{}: {} self-action(s)\n",
                                g.name(),
                                enumerate_self_actions(g).len()
                            )
                        })
                        .collect();
                    emit(cli, &text)?;
                }
            }
            Ok(PASS)
        }
        Enumeration::ExtActions { actor, space } => {
            let (actor, space) = (load_gwa(actor)?, load_gwa(space)?);
            listing(
                cli,
                "action(s)",
                &enumerate_ext_actions(actor.group(), space.group()),
            )
        }
        Enumeration::Gxmods { a, b } => {
            let (a, b) = (load_gwa(a)?, load_gwa(b)?);
            listing(
                cli,
                "generalized crossed module(s)",
                &enumerate_gxmods(&a, &b),
            )
        }
        Enumeration::Liftings { base } => {
            let base = load_gxmod(base)?;
            listing(cli, "lifting(s)", &enumerate_liftings(&base, &pool(cli)?))
        }
        Enumeration::Coverings { base } => {
            let base = load_gxmod(base)?;
            listing(cli, "covering(s)", &enumerate_coverings(&base, &pool(cli)?))
        }
        Enumeration::Cat1 { input } => listing(
            cli,
            "generalized cat1-group(s)",
            &enumerate_gcat1s(&load_gwa(input)?),
        ),
    }
}

fn equivalence(cli: &Cli, base: &Path) -> Outcome {
    let x = load_gxmod(base)?;
    let report = verify_equivalence(&x, &pool(cli)?, morphism_cap_from_env())?;
    match cli.format {
        Format::Json => emit(cli, &pretty(&report))?,
        Format::Human => emit(cli, &summary(&report))?,
    }
    Ok(if !report.passed() {
        FAIL
    } else if report.incomplete {
        INCOMPLETE
    } else {
        PASS
    })
}

fn summary(r: &EquivalenceReport) -> String {
    let mut s = format!("base {}\n", r.base);
    s += &format!("pool: groups of order at most {}\n", r.pool.order_bound());
    s += &format!(
        "liftings: {}, coverings: {}\n",
        r.liftings.len(),
        r.coverings.len()
    );
    s += &format!(
        "lifting morphisms: {}, covering morphisms: {}{}\n",
        r.lifting_morphisms.len(),
        r.covering_morphisms.len(),
        if r.morphisms_truncated {
            " (truncated)"
        } else {
            ""
        }
    );
    let unit_ok = r
        .roundtrip_covering_iso_witnesses
        .iter()
        .filter(|w| w.unit_is_witness)
        .count();
    s += &format!(
        "round trip: liftings exact = {}, coverings isomorphic via unit = {unit_ok}/{}\n",
        r.roundtrip_lifting_exact,
        r.coverings.len()
    );
    s += &format!(
        "functor checks: {} passed, {} failed\n",
        r.morphism_functor_checks.passed, r.morphism_functor_checks.failed
    );
    s += &format!(
        "naturality checks: {} passed, {} failed\n",
        r.naturality_checks.passed, r.naturality_checks.failed
    );
    for why in &r.incompleteness {
        s += &format!("incomplete: {why}\n");
    }
    for f in &r.failures {
        s += &format!("failure: {f}\n");
    }
    s += match (r.passed(), r.incomplete) {
        (false, _) => "FAILED\n",
        (true, true) => "INCOMPLETE\n",
        (true, false) => "PASSED\n",
    };
    s
}

fn run_catalog(cli: &Cli) -> Outcome {
    let pool = pool(cli)?;
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| Failure::new(BAD_INPUT, anyhow!("{}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut sink = std::io::BufWriter::new(sink);
    let io = |e: std::io::Error| Failure::new(BAD_INPUT, e);
    catalog_each(&pool, |e| {
        let line = match cli.format {
            Format::Json => serde_json::to_string(&e).expect("serializable"),
            Format::Human => catalog_line(&e),
        };
        writeln!(sink, "{line}").map_err(io)
    })?;
    sink.flush().map_err(io)?;
    Ok(PASS)
}

fn catalog_line(e: &CatalogEntry) -> String {
    match e {
        CatalogEntry::Gxmod {
            index,
            object,
            aspherical,
            simply_connected,
            ..
        } => format!(
            "gxmod {index}: {object}{}{}",
            if *aspherical { ", aspherical" } else { "" },
            if *simply_connected {
                ", simply connected"
            } else {
                ""
            }
        ),
        CatalogEntry::Gcat1 {
            index,
            object,
            ordinary,
            crossed_module,
        } => format!(
            "cat1 {index}: {} s = {} t = {}{} -> {crossed_module}",
            object.g(),
            object.s(),
            object.t(),
            if *ordinary { ", ordinary" } else { "" }
        ),
    }
}
