//! The `mzeta` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a functional equation or
//! identity fails, 2 on usage, parse or domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::cache::DiskCache;
use crate::document::{Motive, MotiveDocument, Task};
use crate::error::{Error, Result};
use crate::identities::{self, Check};
use crate::symfunc::{Basis, SymFunc};
use crate::universal::{q_poly, store, UniversalKey};
use crate::zeta::{self, FEReport, Factor, Kind, Split};

pub const MAX_GENUS: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "mzeta", version, about = "Exact motivic zeta functions and their functional equations")]
pub struct Cli {
    /// Directory of the universal-polynomial cache (default: $MZETA_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a universal polynomial.
    Universal {
        #[command(subcommand)]
        kind: UniversalCmd,
    },
    /// Expand a symmetric function such as `s[2,1]*p1 - 2*e3`, optionally
    /// plethystically composed with a second one.
    Symfunc {
        expr: String,
        /// Inner function of the plethysm `expr[of]`.
        #[arg(long)]
        of: Option<String>,
        /// Target basis: s, e, h or p.
        #[arg(long, default_value = "s")]
        basis: char,
    },
    /// Zeta series (and rational form, for a split) of a named expression.
    Zeta {
        doc: PathBuf,
        name: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// Run the tasks listed in a document.
    Run { doc: PathBuf },
    /// Print a document with every polynomial in canonical form.
    Canon { doc: PathBuf },
    /// Verify functional equations and identities.
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
    },
    /// Inspect or fill the universal-polynomial cache.
    Cache {
        #[command(subcommand)]
        action: CacheCmd,
    },
}

#[derive(Debug, Subcommand)]
pub enum UniversalCmd {
    /// `P_n` over `s1..sn`, `t1..tn`.
    #[command(name = "P")]
    P { n: usize },
    /// `P_{n,r}` over `s1..s{nr}`.
    #[command(name = "Pnr")]
    Pnr { n: usize, r: usize },
    /// `q^g_n` over `s1..s{2g}` and `t`.
    #[command(name = "q")]
    Q { g: usize, n: usize },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Factor identities and functional equations of an abelian variety.
    Abelian {
        #[arg(long)]
        g: usize,
    },
    /// Degree and functional equation of a curve.
    Curve {
        #[arg(long)]
        g: usize,
    },
    /// Products of elliptic curves, with a point, and the paired model.
    Product,
    /// An abelian variety blown up along a point.
    Blowup {
        #[arg(long, default_value_t = 2)]
        g: usize,
        #[arg(long, default_value_t = 2)]
        codim: usize,
    },
    /// Universal-polynomial, plethysm, product and Schur identities.
    Identities {
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheCmd {
    Status,
    Clear,
    /// Precompute what `verify abelian --g G` needs.
    Warm {
        #[arg(long)]
        g: usize,
    },
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Item {
    Value { label: String, text: String },
    Fe(FEReport),
    Check(Check),
}

impl Item {
    fn value(label: impl Into<String>, text: impl ToString) -> Item {
        Item::Value {
            label: label.into(),
            text: text.to_string(),
        }
    }

    fn failed(&self) -> bool {
        match self {
            Item::Value { .. } => false,
            Item::Fe(r) => !r.passed,
            Item::Check(c) => !c.passed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Section {
    pub title: String,
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CacheStats {
    pub configured: bool,
    pub loaded: usize,
    pub stored: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub label: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    pub sections: Vec<Section>,
    pub checks: usize,
    pub failures: usize,
    pub cache: CacheStats,
    pub timings: Vec<Timing>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("# mzeta {}: {}\n", self.version, self.command);
        for s in &self.sections {
            out.push_str(&format!("\n## {}\n", s.title));
            for item in &s.items {
                match item {
                    Item::Value { label, text } => out.push_str(&format!("{label}: {text}\n")),
                    Item::Fe(r) => {
                        out.push_str(&format!(
                            "{} {} [weight {}, degree {}, L^{}]\n",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.subject,
                            r.weight,
                            r.degree,
                            r.l_exponent
                        ));
                        if let Some(w) = &r.witness {
                            out.push_str(&format!("     witness {w}\n"));
                        }
                    }
                    Item::Check(c) => {
                        out.push_str(&format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
                        if let Some(d) = &c.detail {
                            out.push_str(&format!("     {d}\n"));
                        }
                    }
                }
            }
        }
        out.push_str(&format!(
            "\n## summary\nchecks: {}, failures: {}, result: {}\n",
            self.checks,
            self.failures,
            if self.passed() { "pass" } else { "fail" }
        ));
        out.push_str(&format!(
            "\n## cache\nconfigured: {}, loaded: {}, stored: {}\n",
            if self.cache.configured { "yes" } else { "no" },
            self.cache.loaded,
            self.cache.stored
        ));
        out.push_str("\n## timings\n");
        for t in &self.timings {
            out.push_str(&format!("{}: {:.3}s\n", t.label, t.seconds));
        }
        out
    }
}

struct Runner {
    sections: Vec<Section>,
    timings: Vec<Timing>,
}

impl Runner {
    fn section(&mut self, title: impl Into<String>, items: Vec<Item>) {
        self.sections.push(Section {
            title: title.into(),
            items,
        });
    }

    fn timed<T>(&mut self, label: &str, f: impl FnOnce(&mut Runner) -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f(self);
        self.timings.push(Timing {
            label: label.to_string(),
            seconds: start.elapsed().as_secs_f64(),
        });
        out
    }
}

fn fe_items(reports: Vec<FEReport>) -> Vec<Item> {
    reports.into_iter().map(Item::Fe).collect()
}

fn load_document(path: &PathBuf) -> Result<MotiveDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    MotiveDocument::parse(&text)
}

fn check_genus(g: usize) -> Result<()> {
    if g > MAX_GENUS {
        return Err(Error::usage(format!("g = {g} is outside the supported range 1..={MAX_GENUS}")));
    }
    Ok(())
}

fn series_items(s: &crate::series::PowerSeries) -> Vec<Item> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| Item::value(format!("T^{i}"), c))
        .collect()
}

fn zeta_sections(run: &mut Runner, motive: &Motive, name: &str, order: Option<usize>) -> Result<()> {
    let x = motive.element(name)?;
    let split = motive.splits.get(name);
    let order = order.unwrap_or_else(|| split.map_or(6, |s| zeta::default_order(s.e.max(s.f))));
    let series = zeta::zeta_series(&motive.ring, &x, order)?;
    run.section(format!("zeta series of {name} to order {order}"), series_items(&series));
    if let Some(s) = split {
        rational_section(run, motive, name, s, order)?;
    }
    Ok(())
}

fn rational_section(run: &mut Runner, motive: &Motive, name: &str, s: &Split, order: usize) -> Result<()> {
    let z = zeta::rational_form(&motive.ring, &s.plus, &s.minus, order)?;
    let direct = zeta::zeta_series(&motive.ring, &s.class(), order)?;
    let agree = z.series == direct;
    run.section(
        format!("rational form of {name}"),
        vec![
            Item::value("P(T)", &z.numerator),
            Item::value("Q(T), zeta = P(T)/Q(-T)", &z.denominator_arg),
            Item::value("degrees (e, f)", format!("({}, {})", z.e, z.f)),
            Item::Check(Check {
                name: format!("P(T)/Q(-T) = zeta series to order {order}"),
                passed: agree,
                detail: (!agree).then(|| "series differ".to_string()),
            }),
        ],
    );
    Ok(())
}

fn run_task(run: &mut Runner, motive: &Motive, task: &Task) -> Result<()> {
    let ring = &motive.ring;
    match task {
        Task::Zeta { name, order } => zeta_sections(run, motive, name, *order)?,
        Task::Sym { r, name } => {
            let v = ring.sym(*r, &motive.element(name)?)?;
            run.section(format!("{task}"), vec![Item::value(format!("Sym{r}({name})"), v)]);
        }
        Task::Alt { r, name } => {
            let v = ring.alt(*r, &motive.element(name)?)?;
            run.section(format!("{task}"), vec![Item::value(format!("Alt{r}({name})"), v)]);
        }
        Task::Schur { shape, name } => {
            let v = ring.schur(shape, &motive.element(name)?)?;
            run.section(format!("{task}"), vec![Item::value(format!("S{shape}({name})"), v)]);
        }
        Task::Rational { name, order } => {
            let s = motive.split(name)?;
            let order = order.unwrap_or_else(|| zeta::default_order(s.e.max(s.f)));
            rational_section(run, motive, name, s, order)?;
        }
        Task::Check { name } => {
            let reports = zeta::verify_split(ring, name, motive.split(name)?)?;
            run.section(format!("{task}"), fe_items(reports));
        }
    }
    Ok(())
}

fn verify_product(run: &mut Runner) -> Result<()> {
    let ring = identities::sample_ring(1)?;
    let a = Split::abelian(&ring, "a", 1)?;
    let b = Split::abelian(&ring, "b", 1)?;
    let point = Split::point(&ring);
    let sym = |x: &str| -> Result<Factor> {
        Ok(Factor {
            element: ring.parse(x)?,
            kind: Kind::Sym,
            degree: 2,
            weight: 1,
        })
    };
    let alt_point = Factor {
        element: ring.one(),
        kind: Kind::Alt,
        degree: 1,
        weight: 0,
    };
    let alt_line = Factor {
        element: ring.parse("1 + L")?,
        kind: Kind::Alt,
        degree: 2,
        weight: 1,
    };
    let reports = vec![
        zeta::verify_product(&ring, &sym("a")?, &sym("b")?)?,
        zeta::verify_product(&ring, &alt_line, &alt_point)?,
        zeta::verify_product(&ring, &sym("a")?, &alt_line)?,
        zeta::verify_product(&ring, &alt_line, &alt_line)?,
    ];
    run.section("products of factors", fe_items(reports));

    let ee = zeta::product_motive(&a, &b);
    let mut items = vec![Item::value("degrees (e, f)", format!("({}, {})", ee.e, ee.f))];
    let (_, abelian2) = zeta::abelian_motive(2)?;
    items.push(Item::Check(Check {
        name: "E x E' degrees equal abelian surface degrees (8, 8)".into(),
        passed: (ee.e, ee.f) == (abelian2.e, abelian2.f),
        detail: None,
    }));
    let z = zeta::rational_form(&ring, &ee.plus, &ee.minus, 8)?;
    let direct = zeta::zeta_series(&ring, &(&a.class() * &b.class()), 8)?;
    items.push(Item::Check(Check {
        name: "E x E' rational form = zeta series of the product class to order 8".into(),
        passed: z.series == direct,
        detail: z.series.first_difference(&direct).map(|i| format!("first difference at T^{i}")),
    }));
    let unit = zeta::product_motive(&a, &point);
    items.push(Item::Check(Check {
        name: "E x point = E".into(),
        passed: unit == a,
        detail: None,
    }));
    run.section("E x E'", items);
    let mut reports = zeta::verify_split(&ring, "E x E'", &ee)?;
    reports.extend(zeta::paired_variable_model()?);
    run.section("E x E' functional equations and the paired model", fe_items(reports));
    Ok(())
}

fn verify_blowup(run: &mut Runner, g: usize, codim: usize) -> Result<()> {
    let (ring, a) = zeta::abelian_motive(g)?;
    let bl = zeta::blowup_motive(&ring, &a, &Split::point(&ring), codim)?;
    let name = format!("A{g} blown up in a point (codim {codim})");
    let mut items = vec![
        Item::value("plus part", &bl.plus),
        Item::value("degrees (e, f)", format!("({}, {})", bl.e, bl.f)),
    ];
    items.extend(fe_items(zeta::verify_split(&ring, &name, &bl)?));
    run.section(name, items);
    Ok(())
}

/// The universal polynomials `verify abelian --g g` reads.
pub fn abelian_dependencies(g: usize) -> Vec<UniversalKey> {
    (0..=2 * g).map(|n| UniversalKey::Subsets(2 * g, n)).collect()
}

fn execute(cli: &Cli, run: &mut Runner, cache: Option<&DiskCache>) -> Result<()> {
    match &cli.command {
        Command::Universal { kind } => {
            let (label, value) = match *kind {
                UniversalCmd::P { n } => (format!("P {n}"), store().get(UniversalKey::P(n))?.value),
                UniversalCmd::Pnr { n, r } => {
                    if r == 0 {
                        return Err(Error::usage("Pnr needs r >= 1"));
                    }
                    if n * r > crate::universal::PLETHYSM_BUDGET {
                        return Err(Error::usage(format!(
                            "Pnr {n} {r} has weight {} above the supported {}",
                            n * r,
                            crate::universal::PLETHYSM_BUDGET
                        )));
                    }
                    (format!("Pnr {n} {r}"), store().get(UniversalKey::Pnr(n, r))?.value)
                }
                UniversalCmd::Q { g, n } => {
                    check_genus(g)?;
                    (format!("q {g} {n}"), q_poly(g, n)?.value)
                }
            };
            run.section("universal", vec![Item::value(label, value)]);
        }
        Command::Symfunc { expr, of, basis } => {
            let basis = Basis::from_tag(*basis)?;
            let mut f = SymFunc::parse(expr)?;
            if let Some(g) = of {
                f = f.plethysm(&SymFunc::parse(g)?)?;
            }
            run.section("symfunc", vec![Item::value(expr.clone(), f.convert(basis))]);
        }
        Command::Zeta { doc, name, order } => {
            let motive = load_document(doc)?.build()?;
            run.timed("zeta", |r| zeta_sections(r, &motive, name, *order))?;
        }
        Command::Run { doc } => {
            let doc = load_document(doc)?;
            let motive = doc.build()?;
            for task in &doc.tasks {
                run.timed(&format!("task {task}"), |r| run_task(r, &motive, task))?;
            }
        }
        Command::Canon { doc } => {
            let text = load_document(doc)?.canonical()?.render();
            run.section("document", vec![Item::value("canonical", text)]);
        }
        Command::Verify { target } => match *target {
            VerifyCmd::Abelian { g } => {
                check_genus(g)?;
                let reports = run.timed("verify abelian", |_| zeta::verify_abelian(g))?;
                let (_, s) = zeta::abelian_motive(g)?;
                let mut items = vec![Item::value("degrees (e, f)", format!("({}, {})", s.e, s.f))];
                items.extend(fe_items(reports));
                run.section(format!("abelian variety of dimension {g}"), items);
                let q = run.timed("q-level functional equations", |_| {
                    (0..=2 * g).map(|n| crate::universal::verify_q_fe(g, n)).collect::<Result<Vec<_>>>()
                })?;
                run.section("universal q-polynomials", fe_items(q));
            }
            VerifyCmd::Curve { g } => {
                check_genus(g)?;
                let reports = run.timed("verify curve", |_| zeta::verify_curve(g))?;
                run.section(format!("curve of genus {g}"), fe_items(reports));
            }
            VerifyCmd::Product => run.timed("verify product", verify_product)?,
            VerifyCmd::Blowup { g, codim } => {
                check_genus(g)?;
                if g == 0 {
                    return Err(Error::usage("blow-up needs g >= 1"));
                }
                run.timed("verify blowup", |r| verify_blowup(r, g, codim))?;
            }
            VerifyCmd::Identities { max_weight } => {
                let checks = run.timed("identities", |_| identities::all(max_weight))?;
                run.section(
                    format!("identities up to weight {max_weight}"),
                    checks.into_iter().map(Item::Check).collect(),
                );
            }
        },
        Command::Cache { action } => {
            let cache = cache.ok_or_else(|| {
                Error::usage("no cache directory: pass --cache-dir or set MZETA_CACHE_DIR")
            })?;
            match *action {
                CacheCmd::Status => {}
                CacheCmd::Clear => {
                    cache.clear()?;
                    store().clear();
                }
                CacheCmd::Warm { g } => {
                    check_genus(g)?;
                    if g == 0 {
                        return Err(Error::usage("warm needs g >= 1"));
                    }
                    run.timed("warm", |_| {
                        abelian_dependencies(g).into_iter().try_for_each(|k| store().get(k).map(|_| ()))
                    })?;
                    cache.save_store()?;
                }
            }
            let entries = cache.load()?;
            let mut items = vec![Item::value("entries", entries.len())];
            items.extend(entries.iter().map(|(k, _)| Item::value("record", k.header())));
            run.section("cache records", items);
        }
    }
    Ok(())
}

fn command_line(args: &[OsString]) -> String {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args.iter().skip(1) {
        let s = a.to_string_lossy();
        if skip {
            skip = false;
            continue;
        }
        if s == "--cache-dir" {
            skip = true;
            continue;
        }
        if s.starts_with("--cache-dir=") || s == "--json" {
            continue;
        }
        out.push(s.into_owned());
    }
    out.join(" ")
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    let mut stats = CacheStats::default();
    let cache = match DiskCache::locate(cli.cache_dir.as_deref()).map(DiskCache::open).transpose() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "mzeta: {e}");
            return 2;
        }
    };
    if let Some(c) = &cache {
        stats.configured = true;
        if !matches!(cli.command, Command::Cache { action: CacheCmd::Clear }) {
            match c.load_into_store() {
                Ok(n) => stats.loaded = n,
                Err(e) => {
                    let _ = writeln!(stderr, "mzeta: cache {}: {e}", c.path().display());
                    return 2;
                }
            }
        }
    }
    let mut runner = Runner {
        sections: Vec::new(),
        timings: Vec::new(),
    };
    let start = Instant::now();
    if let Err(e) = execute(&cli, &mut runner, cache.as_ref()) {
        let _ = writeln!(stderr, "mzeta: {e}");
        return 2;
    }
    if let Some(c) = &cache {
        if !matches!(cli.command, Command::Cache { action: CacheCmd::Clear }) {
            match c.save_store() {
                Ok(n) => stats.stored = n,
                Err(e) => {
                    let _ = writeln!(stderr, "mzeta: cache {}: {e}", c.path().display());
                    return 2;
                }
            }
        }
    }
    runner.timings.push(Timing {
        label: "total".into(),
        seconds: start.elapsed().as_secs_f64(),
    });
    let items = runner.sections.iter().flat_map(|s| s.items.iter());
    let checks = items.clone().filter(|i| !matches!(i, Item::Value { .. })).count();
    let failures = items.filter(|i| i.failed()).count();
    let report = RunReport {
        command: command_line(&args),
        version: env!("CARGO_PKG_VERSION").to_string(),
        sections: runner.sections,
        checks,
        failures,
        cache: stats,
        timings: runner.timings,
    };
    let plain = matches!(
        cli.command,
        Command::Universal { .. } | Command::Symfunc { .. } | Command::Canon { .. }
    );
    let text = if cli.json {
        serde_json::to_string_pretty(&report).expect("report serialises") + "\n"
    } else if plain {
        // Bare values, for piping.
        report
            .sections
            .iter()
            .flat_map(|s| &s.items)
            .map(|i| match i {
                Item::Value { text, .. } if text.ends_with('\n') => text.clone(),
                Item::Value { text, .. } => format!("{text}\n"),
                _ => String::new(),
            })
            .collect()
    } else {
        report.render_text()
    };
    if stdout.write_all(text.as_bytes()).is_err() {
        return 2;
    }
    if report.passed() {
        0
    } else {
        1
    }
}

/// Entry point for the binary.
pub fn main() -> ! {
    let code = run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code)
}
