use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use star_eigen::checks::{reproduce, TITLES};
use star_eigen::config::CEILING_ENV;
use star_eigen::decomposition::{decompose, verify_decomposition, verify_support_partitions, YAssignment};
use star_eigen::graph::{spectrum_report, verify_eigenfunction, VerifyOptions};
use star_eigen::io;
use star_eigen::rational::{format_rational, parse_rational};
use star_eigen::reconstruction::{build_mn, det_closed_form, det_exact, reconstruct, restrict};
use star_eigen::specht::{phi, polytabloid, verify_polytabloid_eigen, Tableau};
use star_eigen::{Ceilings, Error, GraphVariant, Permutation, StarKind};

#[derive(Parser)]
#[command(name = "star-eigen", version, about = "Exact eigenfunctions of Star graphs on Sym_n")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest n for exhaustive sweeps and the dense spectrum.
    #[arg(long, global = true, env = CEILING_ENV)]
    ceiling: Option<usize>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Star,
    Jm,
}

impl From<Variant> for StarKind {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Star => StarKind::StarS,
            Variant::Jm => StarKind::StarJM,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Adjacency spectrum with multiplicities (dense, floating point).
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Variant::Star)]
        variant: Variant,
    },
    /// Eigen-check one PI spec or a list of them.
    VerifyPi {
        /// Inline JSON, or @path to a JSON file.
        #[arg(long)]
        spec: String,
        /// Defaults to n - m - 1 for each spec.
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
    },
    /// The polytabloid e_t as a signed sum of tabloids.
    Polytabloid {
        #[arg(long)]
        tableau: Tableau,
    },
    /// J_n eigen-check of e_t and the S_n^JM check of phi(e_t).
    JmCheck {
        #[arg(long)]
        tableau: Tableau,
    },
    /// Writes phi(e_t) as a sum of PI functions and verifies it.
    Decompose {
        #[arg(long)]
        tableau: Tableau,
        #[arg(long, default_value = "asc")]
        y_assignment: YAssignment,
    },
    /// Checks the signed coset structure of the support.
    SupportCheck {
        #[arg(long)]
        tableau: Tableau,
    },
    /// The second-neighbourhood matrix M_n.
    Matrix {
        #[arg(long)]
        n: usize,
    },
    /// det M_n, computed and from the closed form.
    Det {
        #[arg(long)]
        n: usize,
    },
    /// Rebuilds an (n-2)-eigenfunction from its values on N_2(base).
    Reconstruct {
        #[arg(long)]
        n: usize,
        /// Value table keyed by the vertices of N_2(base); zeros must be listed.
        #[arg(long)]
        boundary: PathBuf,
        #[arg(long)]
        base_vertex: Option<Permutation>,
    },
    /// Runs every check and prints a manifest.
    ReproducePaper {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
        #[arg(long)]
        timings: bool,
    },
}

/// Bad input of any kind; exits with status 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

struct Ctx {
    format: Format,
    out: Option<PathBuf>,
    ceilings: Ceilings,
}

impl Ctx {
    fn emit(&self, text: &str) -> Result<(), Usage> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn json(&self, v: &serde_json::Value) -> Result<(), Usage> {
        self.emit(&serde_json::to_string_pretty(v).expect("serializable"))
    }

    fn no_csv(&self, what: &str) -> Result<(), Usage> {
        if self.format == Format::Csv {
            return Err(Usage(format!("{what} has no csv form; use json or table")));
        }
        Ok(())
    }

    fn opts(&self) -> VerifyOptions {
        VerifyOptions {
            ceiling: self.ceilings.enumeration,
            max_witnesses: 5,
            support_closure: true,
        }
    }
}

fn read_arg(s: &str) -> Result<String, Usage> {
    match s.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Usage(format!("{path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn spectrum(ctx: &Ctx, n: usize, variant: Variant) -> Outcome {
    ctx.no_csv("spectrum")?;
    let g = GraphVariant::new(variant.into(), n)?;
    let s = match spectrum_report(&g, ctx.ceilings.spectrum) {
        Ok(s) => s,
        Err(e @ Error::IntegralityViolation { .. }) => {
            eprintln!("{e}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if ctx.format == Format::Json {
        let m: BTreeMap<String, usize> = s.multiplicities.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        ctx.json(&json!({"n": n, "variant": StarKind::from(variant), "multiplicities": m}))?;
    } else {
        let mut out = format!("{:>6}  {:>12}\n", "theta", "multiplicity");
        for (theta, k) in s.multiplicities.iter().rev() {
            out.push_str(&format!("{theta:>6}  {k:>12}\n"));
        }
        out.push_str(&format!("total {}", s.total()));
        ctx.emit(&out)?;
    }
    Ok(true)
}

fn verify_pi(ctx: &Ctx, spec: &str, theta: Option<&str>) -> Outcome {
    ctx.no_csv("verify-pi")?;
    let specs = io::spec_or_specs_from_json(&read_arg(spec)?)?;
    let theta = theta.map(parse_rational).transpose()?;
    let mut all = true;
    let mut rows = Vec::new();
    for s in &specs {
        let th = theta.clone().unwrap_or_else(|| star_eigen::rational::int(s.eigenvalue()));
        let g = GraphVariant::new(s.variant(), s.n())?;
        let r = verify_eigenfunction(&g, s, &th, &ctx.opts())?;
        all &= r.is_eigenfunction();
        let witnesses: Vec<_> = r
            .witnesses
            .iter()
            .map(|w| json!({"vertex": w.vertex.to_string(), "lhs": format_rational(&w.lhs), "rhs": format_rational(&w.rhs)}))
            .collect();
        rows.push(json!({
            "spec": s,
            "theta": format_rational(&th),
            "holds": r.is_eigenfunction(),
            "checked": r.checked,
            "failures": r.failures,
            "witnesses": witnesses,
        }));
    }
    if ctx.format == Format::Json {
        ctx.json(&json!(rows))?;
    } else {
        let mut out = String::new();
        for row in &rows {
            out.push_str(&format!(
                "{}  theta={}  checked={}  failures={}  {}\n",
                status(row["holds"].as_bool().unwrap_or(false)),
                row["theta"].as_str().unwrap_or(""),
                row["checked"],
                row["failures"],
                row["spec"],
            ));
            for w in row["witnesses"].as_array().into_iter().flatten() {
                let field = |k: &str| w[k].as_str().unwrap_or("").to_string();
                out.push_str(&format!(
                    "    at {}: theta*f = {}, sum over neighbours = {}\n",
                    field("vertex"),
                    field("lhs"),
                    field("rhs")
                ));
            }
        }
        ctx.emit(&out)?;
    }
    Ok(all)
}

fn polytabloid_cmd(ctx: &Ctx, t: &Tableau) -> Outcome {
    ctx.no_csv("polytabloid")?;
    let e = polytabloid(t, ctx.ceilings.budget)?;
    if ctx.format == Format::Json {
        ctx.emit(&io::tabloid_sum_to_json(&e)?)?;
    } else {
        let mut out = format!("e_t for t = {t}, {} terms\n", e.len());
        for (tab, c) in e.terms() {
            let rows: Vec<String> = tab
                .rows()
                .iter()
                .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
                .collect();
            out.push_str(&format!("{c:>+3}  {{{}}}\n", rows.join("/")));
        }
        ctx.emit(&out)?;
    }
    Ok(true)
}

fn jm_check(ctx: &Ctx, t: &Tableau) -> Outcome {
    ctx.no_csv("jm-check")?;
    let r = verify_polytabloid_eigen(t, ctx.ceilings.budget)?;
    let image = phi(&polytabloid(t, ctx.ceilings.budget)?, t.n(), ctx.ceilings.budget)?;
    let g = GraphVariant::star_jm(t.n())?;
    let graph = verify_eigenfunction(&g, &image, &star_eigen::rational::int(r.eigenvalue), &ctx.opts())?;
    let ok = r.all_hold() && graph.is_eigenfunction();
    if ctx.format == Format::Json {
        ctx.json(&json!({
            "tableau": t.to_string(),
            "eigenvalue": r.eigenvalue,
            "k": r.k,
            "terms": r.terms,
            "jn": r.holds,
            "jn_x": r.x_part,
            "jn_y": r.y_part,
            "phi_eigen": graph.is_eigenfunction(),
            "phi_support": image.len(),
        }))?;
    } else {
        ctx.emit(&format!(
            "t = {t}, theta = {}, k = {}, {} tabloids\n\
             {}  J_n e_t = theta e_t\n\
             {}  J_n^X e_t = k e_t\n\
             {}  J_n^Y e_t = (theta - k) e_t\n\
             {}  phi(e_t) is an S_n^JM eigenfunction ({} vertices in support)",
            r.eigenvalue,
            r.k,
            r.terms,
            status(r.holds),
            status(r.x_part),
            status(r.y_part),
            status(graph.is_eigenfunction()),
            image.len(),
        ))?;
    }
    Ok(ok)
}

fn decompose_cmd(ctx: &Ctx, t: &Tableau, order: YAssignment) -> Outcome {
    ctx.no_csv("decompose")?;
    let d = decompose(t, order, ctx.ceilings.budget)?;
    let r = verify_decomposition(t, order, &ctx.ceilings)?;
    if ctx.format == Format::Json {
        ctx.json(&json!({
            "tableau": t.to_string(),
            "y_assignment": order.to_string(),
            "specs": d.specs(),
            "verification": {
                "summands": r.summands,
                "distinct_summands": r.distinct_summands,
                "checked": r.checked,
                "mismatches": r.mismatches,
                "first_mismatch": r.first_mismatch.as_ref().map(Permutation::to_string),
                "y_cosets_touched": r.y_cosets_touched,
                "y_coset_failures": r.y_coset_failures,
                "holds": r.holds(),
            },
        }))?;
    } else {
        let mut out = format!("t = {t}, y-assignment {order}\n");
        for (sigma, specs) in d.by_sigma() {
            out.push_str(&format!("sigma = {sigma}\n"));
            for s in specs {
                let pairs: Vec<String> = s.pairs().iter().map(|(a, b)| format!("({a},{b})")).collect();
                out.push_str(&format!("    I = {:?}  P = {}\n", s.values(), pairs.join("")));
            }
        }
        out.push_str(&format!(
            "{}  {} summands ({} distinct), {} vertices checked, {} mismatches",
            status(r.holds()),
            r.summands,
            r.distinct_summands,
            r.checked,
            r.mismatches
        ));
        ctx.emit(&out)?;
    }
    Ok(r.holds())
}

fn support_check(ctx: &Ctx, t: &Tableau) -> Outcome {
    ctx.no_csv("support-check")?;
    let r = verify_support_partitions(t, &ctx.ceilings)?;
    let clauses = [
        ("ternary", r.ternary),
        ("polytabloid_cosets", r.polytabloid_cosets),
        ("inner_sums", r.inner_sums),
        ("disjoint", r.disjoint),
        ("covering", r.covering),
        ("pi_cosets", r.pi_cosets),
    ];
    if ctx.format == Format::Json {
        let mut v = json!({"tableau": t.to_string(), "checked": r.checked, "holds": r.all_hold()});
        for (name, ok) in clauses {
            v[name] = json!(ok);
        }
        ctx.json(&v)?;
    } else {
        let mut out = format!("t = {t}, {} vertices checked\n", r.checked);
        for (name, ok) in clauses {
            out.push_str(&format!("{}  {name}\n", status(ok)));
        }
        ctx.emit(&out)?;
    }
    Ok(r.all_hold())
}

fn matrix(ctx: &Ctx, n: usize) -> Outcome {
    let m = build_mn(n)?;
    match ctx.format {
        Format::Csv => ctx.emit(&io::matrix_to_csv(&m))?,
        Format::Json => {
            let rows: Vec<String> = m.row_labels.iter().map(io::single_label).collect();
            let cols: Vec<String> = m.col_labels.iter().map(Permutation::to_string).collect();
            ctx.json(&json!({"n": n, "rows": rows, "cols": cols, "entries": m.entries}))?;
        }
        Format::Table => {
            let labels: Vec<String> = m.row_labels.iter().map(io::single_label).collect();
            let width = labels.iter().map(String::len).max().unwrap_or(0);
            let mut out = String::new();
            for (label, row) in labels.iter().zip(&m.entries) {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                out.push_str(&format!("{label:<width$}  {}\n", cells.join(" ")));
            }
            ctx.emit(&out)?;
        }
    }
    Ok(true)
}

fn det(ctx: &Ctx, n: usize) -> Outcome {
    ctx.no_csv("det")?;
    let computed = det_exact(&build_mn(n)?);
    let closed = det_closed_form(n);
    let ok = computed == closed;
    if ctx.format == Format::Json {
        ctx.json(&json!({"n": n, "det": computed.to_string(), "closed_form": closed.to_string(), "match": ok}))?;
    } else {
        ctx.emit(&format!("computed     {computed}\nclosed form  {closed}"))?;
    }
    Ok(ok)
}

fn reconstruct_cmd(ctx: &Ctx, n: usize, boundary: &PathBuf, base: Option<Permutation>) -> Outcome {
    ctx.no_csv("reconstruct")?;
    let text = fs::read_to_string(boundary).map_err(|e| Usage(format!("{}: {e}", boundary.display())))?;
    let table = io::value_table_from_json(&text)?;
    if table.n != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: table.n,
        }
        .into());
    }
    let base = base.unwrap_or_else(|| Permutation::identity(n));
    let f = reconstruct(n, &table.entries, &base)?;
    let agrees = restrict(&f, &base)? == table.entries;
    let g = GraphVariant::star(n)?;
    let theta = star_eigen::rational::int(n as i64 - 2);
    let eigen = verify_eigenfunction(&g, &f, &theta, &VerifyOptions {
        ceiling: ctx.ceilings.enumeration,
        ..VerifyOptions::default()
    })?;
    if ctx.format == Format::Json {
        ctx.emit(&io::sparse_to_json(&f.to_sparse(ctx.ceilings.enumeration)?)?)?;
    } else {
        let mut out = format!("base vertex {base}\n");
        for (spec, c) in f.basis.iter().zip(&f.coefficients) {
            out.push_str(&format!("{:<12} {}\n", io::single_label(spec), format_rational(c)));
        }
        ctx.emit(&out)?;
    }
    eprintln!(
        "{}  restriction matches boundary; {}  eigenfunction with theta = {}",
        status(agrees),
        status(eigen.holds),
        n - 2
    );
    Ok(agrees && eigen.holds)
}

fn reproduce_cmd(ctx: &Ctx, max_n: usize, seed: u64, timings: bool) -> Outcome {
    ctx.no_csv("reproduce-paper")?;
    let command: Vec<String> = std::env::args().skip(1).collect();
    let manifest = reproduce(command, max_n, seed, ctx.ceilings);
    if ctx.format == Format::Json {
        ctx.emit(&manifest.to_json(timings)?)?;
    } else {
        ctx.emit(&manifest.table(timings))?;
    }
    let failed: Vec<String> = manifest
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} ({})", c.id, TITLES[c.id as usize - 1]))
        .collect();
    if !failed.is_empty() {
        eprintln!("failed: {}", failed.join(", "));
    }
    Ok(manifest.all_passed())
}

fn run(cli: Cli) -> Outcome {
    let mut ceilings = Ceilings::default();
    if let Some(c) = cli.common.ceiling {
        ceilings.enumeration = c;
        ceilings.spectrum = c;
    }
    let ctx = Ctx {
        format: cli.common.format,
        out: cli.common.out,
        ceilings,
    };
    match cli.command {
        Command::Spectrum { n, variant } => spectrum(&ctx, n, variant),
        Command::VerifyPi { spec, theta } => verify_pi(&ctx, &spec, theta.as_deref()),
        Command::Polytabloid { tableau } => polytabloid_cmd(&ctx, &tableau),
        Command::JmCheck { tableau } => jm_check(&ctx, &tableau),
        Command::Decompose { tableau, y_assignment } => decompose_cmd(&ctx, &tableau, y_assignment),
        Command::SupportCheck { tableau } => support_check(&ctx, &tableau),
        Command::Matrix { n } => matrix(&ctx, n),
        Command::Det { n } => det(&ctx, n),
        Command::Reconstruct { n, boundary, base_vertex } => reconstruct_cmd(&ctx, n, &boundary, base_vertex),
        Command::ReproducePaper { max_n, seed, timings } => reproduce_cmd(&ctx, max_n, seed, timings),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
