//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit code; the binary is a thin wrapper around it.
//!
//! Exit codes: 0 success, 1 domain error, 2 resource guard, 3 I/O, parse or
//! usage error. Data goes to `out`, diagnostics and progress to `err`.

use std::ffi::OsString;
use std::io::{Read as _, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::betti::{
    betti_at_multi, betti_tables, check_splitting, formula_check, hochster_betti, total_differences, BettiOptions,
    BettiTable, Route,
};
use crate::complexes::text::{complex_to_text, graph_to_text, parse_complex, parse_graph};
use crate::complexes::{complex_of_ideal, construct, Construction, SimplicialComplex};
use crate::config::Guards;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideals::text::{ideal_to_text, parse_ideal, parse_monomial, parse_monomial_extending};
use crate::ideals::{power_guarded, restricted_power, MonomialIdeal};
use crate::lattice_homology::{
    homology_dims, integer_homology, upper_koszul_complex, ChainComplex, HomologyResult, LcmLattice,
};
use crate::scan::{
    check_spreading_bound, check_variable_spreading_bound, corpus_probes, regularity_profile, scan_dependence,
    Asymptotic, BoundReport, DependenceReport, ScanRequest,
};

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "LCMBETTI_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "lcmbetti", version, about = "Exact Betti numbers of monomial ideals over Q and F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Coefficient field, `Q` or `F<p>`; repeatable.
    #[arg(long = "field", global = true)]
    fields: Vec<String>,
    /// Directory for persisted Betti tables.
    #[arg(long, env = CACHE_ENV, global = true)]
    cache_dir: Option<PathBuf>,
    /// Ignore all caches.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads for the engine.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized choices.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Complex attached to a multidegree: koszul, lattice, or hochster (squarefree only).
    #[arg(long, default_value = "koszul", global = true)]
    route: String,
    /// Print progress to stderr.
    #[arg(long, global = true)]
    progress: bool,
    /// Most minimal generators allowed for a power
    #[arg(long, global = true)]
    max_generators: Option<usize>,
    /// Most elements allowed in an lcm-lattice
    #[arg(long, global = true)]
    max_lattice: Option<usize>,
    /// Most faces allowed in one complex
    #[arg(long, global = true)]
    max_faces: Option<usize>,
    /// Largest integer bit length during exact elimination
    #[arg(long, global = true)]
    max_entry_bits: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Ideal,
    Complex,
    Graph,
}

/// Where an ideal comes from. Exactly one source must be given.
#[derive(Args, Debug, Clone)]
struct Input {
    /// Ideal file (`-` reads stdin).
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Simplicial complex file; its Stanley-Reisner ideal is used.
    #[arg(long)]
    complex: Option<PathBuf>,
    /// Graph file; its edge ideal is used.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in construction such as `rp2` or `dunce-cap`.
    #[arg(long)]
    construct: Option<String>,
    /// Parameter of the construction.
    #[arg(long)]
    p: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multigraded Betti table of I^h over each field.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Report Betti numbers of R/I instead of I.
        #[arg(long)]
        quotient: bool,
        /// Only the Betti numbers in this multidegree.
        #[arg(long)]
        at: Option<String>,
    },
    /// Reduced homology of a complex, a lattice interval or an upper Koszul complex.
    Homology {
        #[command(flatten)]
        input: Input,
        /// Use the complex attached to this multidegree of the ideal.
        #[arg(long)]
        interval: Option<String>,
        /// Also compute integer homology with torsion.
        #[arg(long)]
        integer: bool,
        /// Print the boundary matrix from dimension d to d-1 and stop.
        #[arg(long, allow_hyphen_values = true)]
        export: Option<isize>,
    },
    /// Minimal generators of I^h.
    Power {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        power: u32,
    },
    /// Built-in complexes, ideals and graphs.
    Construct {
        name: String,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Compare I^h over Q and F_p for h = 1..H.
    Scan {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        max_power: u32,
        #[arg(long)]
        max_index: Option<usize>,
        /// Multidegree family such as `1 1 1 h h 1 1 1`; repeatable.
        #[arg(long = "probe")]
        probes: Vec<String>,
        #[arg(long)]
        probes_only: bool,
        /// Save the report under `<dir>/reports/`.
        #[arg(long)]
        results_dir: Option<PathBuf>,
    },
    /// Lower bounds on F_p minus Q Betti numbers for I + (w) or I + (y_1..y_{r+1}).
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "vars")]
        w: Option<String>,
        /// Add r + 1 new variables.
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_power: u32,
    },
    /// Whether I = J + K is a Betti splitting.
    Splitting {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        j: Option<PathBuf>,
        #[arg(long)]
        k: Option<PathBuf>,
        /// Split the generators of I at random (see --seed).
        #[arg(long)]
        random: bool,
    },
    /// Power formula for (I + (w))^h against direct computation.
    Formula {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        w: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// reg(I^h) for h = 1..H with trailing linear estimates.
    Regularity {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_power: u32,
    },
    /// Alexander dual of a complex, or of the complex of a squarefree ideal.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Polarization of a monomial ideal.
    Polarize {
        #[command(flatten)]
        input: Input,
    },
}

/// Runs one command. Never panics on bad input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    3
                }
            };
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

struct Ctx {
    output: Output,
    fields: Vec<FieldSpec>,
    opts: BettiOptions,
    hochster: bool,
    seed: u64,
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let g = cli.global;
    if let Some(n) = g.jobs {
        if n == 0 {
            return Err(Error::Argument("--jobs must be at least 1".into()));
        }
        // a second pool in the same process keeps the first one
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut fields = Vec::new();
    for f in &g.fields {
        let f: FieldSpec = f.parse()?;
        if !fields.contains(&f) {
            fields.push(f);
        }
    }
    let defaults = Guards::default();
    let guards = Guards {
        max_generators: g.max_generators.unwrap_or(defaults.max_generators),
        max_lattice: g.max_lattice.unwrap_or(defaults.max_lattice),
        max_faces: g.max_faces.unwrap_or(defaults.max_faces),
        max_entry_bits: g.max_entry_bits.unwrap_or(defaults.max_entry_bits),
    };
    let (route, hochster) = match g.route.as_str() {
        "hochster" => (Route::Koszul, true),
        r => (r.parse()?, false),
    };
    let ctx = Ctx {
        output: g.output,
        fields,
        opts: BettiOptions {
            guards,
            route,
            cache_dir: g.cache_dir,
            no_cache: g.no_cache,
            progress: g.progress,
        },
        hochster,
        seed: g.seed,
    };
    let _ = err;
    match cli.command {
        Command::Betti {
            input,
            power,
            quotient,
            at,
        } => cmd_betti(&ctx, &input, power, quotient, at.as_deref(), out),
        Command::Homology {
            input,
            interval,
            integer,
            export,
        } => cmd_homology(&ctx, &input, interval.as_deref(), integer, export, out),
        Command::Power { input, power } => {
            let (i, _) = load_ideal(&input)?;
            let p = power_guarded(&i, power, ctx.opts.guards.max_generators)?;
            emit_ideal(&ctx, &p, out)
        }
        Command::Construct { name, p, emit } => cmd_construct(&ctx, &name, p, emit, out),
        Command::Scan {
            input,
            max_power,
            max_index,
            probes,
            probes_only,
            results_dir,
        } => cmd_scan(&ctx, &input, max_power, max_index, &probes, probes_only, results_dir.as_deref(), out),
        Command::Bounds {
            input,
            w,
            vars,
            max_power,
        } => cmd_bounds(&ctx, &input, w.as_deref(), vars, max_power, out),
        Command::Splitting { input, j, k, random } => cmd_splitting(&ctx, &input, j, k, random, out),
        Command::Formula { input, w, power } => cmd_formula(&ctx, &input, &w, power, out),
        Command::Regularity { input, max_power } => {
            let (i, _) = load_ideal(&input)?;
            let prof = regularity_profile(&i, &ctx.fields_or_q(), max_power, &ctx.opts)?;
            match ctx.output {
                Output::Json => write_json(out, &serde_json::to_value(&prof)?),
                Output::Text => {
                    let mut s = format!("label: {}\n", prof.label);
                    for f in &prof.fields {
                        let vals: Vec<String> =
                            f.values.iter().map(|v| v.map_or("-".into(), |x| x.to_string())).collect();
                        s += &format!("{}: reg {}\n", f.field, vals.join(" "));
                        match (f.slope, f.intercept, f.stability_index) {
                            (Some(a), Some(b), Some(st)) => {
                                s += &format!("  estimate: reg = {a}h + {b} from h = {st}\n");
                            }
                            _ => s += "  estimate: unavailable\n",
                        }
                        if let Some((c, b)) = f.predicted_line {
                            s += &format!("  predicted for (I + (y^{c}))^h: {c}h + {b}\n");
                        }
                    }
                    write_text(out, &s)
                }
            }
        }
        Command::Dual { input } => cmd_dual(&ctx, &input, out),
        Command::Polarize { input } => {
            let (i, _) = load_ideal(&input)?;
            emit_ideal(&ctx, &i.polarize(), out)
        }
    }
}

impl Ctx {
    fn fields_or_q(&self) -> Vec<FieldSpec> {
        if self.fields.is_empty() {
            vec![FieldSpec::Rationals]
        } else {
            self.fields.clone()
        }
    }

    fn tables(&self, ideal: &MonomialIdeal, fields: &[FieldSpec]) -> Result<Vec<BettiTable>> {
        if self.hochster {
            fields.iter().map(|&f| hochster_betti(ideal, f, &self.opts.guards)).collect()
        } else {
            betti_tables(ideal, fields, &self.opts)
        }
    }
}

fn read_source(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::io("<stdin>", e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
    }
}

fn count_sources(input: &Input) -> usize {
    [
        input.ideal.is_some(),
        input.complex.is_some(),
        input.graph.is_some(),
        input.construct.is_some(),
    ]
    .iter()
    .filter(|b| **b)
    .count()
}

fn check_one_source(input: &Input) -> Result<()> {
    match count_sources(input) {
        1 => Ok(()),
        0 => Err(Error::Argument("give one of --ideal, --complex, --graph, --construct".into())),
        _ => Err(Error::Argument("give only one of --ideal, --complex, --graph, --construct".into())),
    }
}

/// The ideal described by `input`, with the construction name if any.
fn load_ideal(input: &Input) -> Result<(MonomialIdeal, Option<String>)> {
    check_one_source(input)?;
    if let Some(p) = &input.ideal {
        return Ok((parse_ideal(&read_source(p)?)?, None));
    }
    if let Some(p) = &input.complex {
        return Ok((parse_complex(&read_source(p)?)?.stanley_reisner_ideal(), None));
    }
    if let Some(p) = &input.graph {
        return Ok((parse_graph(&read_source(p)?)?.edge_ideal(), None));
    }
    let name = input.construct.as_ref().expect("one source");
    Ok((construct(name, input.p)?.ideal(), Some(name.replace('-', "_"))))
}

/// The complex described by `input`: a complex file, a construction that
/// yields a complex, or the complex of a squarefree ideal.
fn load_complex(input: &Input) -> Result<SimplicialComplex> {
    check_one_source(input)?;
    if let Some(p) = &input.complex {
        return parse_complex(&read_source(p)?);
    }
    if let Some(name) = &input.construct {
        if let Construction::Complex(c) = construct(name, input.p)? {
            return Ok(c);
        }
    }
    complex_of_ideal(&load_ideal(input)?.0)
}

fn write_text(out: &mut dyn Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    let s = serde_json::to_string_pretty(v)? + "\n";
    write_text(out, &s)
}

fn emit_ideal(ctx: &Ctx, ideal: &MonomialIdeal, out: &mut dyn Write) -> Result<()> {
    match ctx.output {
        Output::Text => write_text(out, &ideal_to_text(ideal)),
        Output::Json => write_json(
            out,
            &json!({
                "vars": ideal.context().names(),
                "generators": ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "sha256": ideal.digest(),
            }),
        ),
    }
}

fn cmd_betti(
    ctx: &Ctx,
    input: &Input,
    power: u32,
    quotient: bool,
    at: Option<&str>,
    out: &mut dyn Write,
) -> Result<()> {
    let (base, _) = load_ideal(input)?;
    let fields = ctx.fields_or_q();
    if power == 0 {
        return Err(Error::Argument("--power must be at least 1".into()));
    }
    if let Some(at) = at {
        let m = parse_monomial(base.context(), at)?;
        let local = restricted_power(&base, power, &m)?;
        let vals = betti_at_multi(&local, &m, &fields, &ctx.opts.guards)?;
        return match ctx.output {
            Output::Json => write_json(
                out,
                &json!({
                    "alpha": m.to_string(),
                    "power": power,
                    "values": fields.iter().zip(&vals).map(|(f, v)| json!({"field": f, "betti": v})).collect::<Vec<_>>(),
                }),
            ),
            Output::Text => {
                let mut s = format!("alpha: {m}\n");
                for (f, v) in fields.iter().zip(&vals) {
                    let v: Vec<String> = v.iter().map(u64::to_string).collect();
                    s += &format!("{f}: {}\n", if v.is_empty() { "0".into() } else { v.join(" ") });
                }
                write_text(out, &s)
            }
        };
    }
    let ideal = power_guarded(&base, power, ctx.opts.guards.max_generators)?;
    let mut tables = ctx.tables(&ideal, &fields)?;
    if quotient {
        tables = tables.iter().map(BettiTable::quotient_shifted).collect();
    }
    let diffs: Vec<Value> = tables
        .iter()
        .skip(1)
        .flat_map(|t| {
            total_differences(&tables[0], t)
                .into_iter()
                .map(|(i, a, b)| json!({"a": tables[0].field(), "b": t.field(), "i": i, "a_value": a, "b_value": b}))
                .collect::<Vec<_>>()
        })
        .collect();
    match ctx.output {
        Output::Json => write_json(
            out,
            &json!({
                "ideal_sha": base.digest(),
                "power": power,
                "module": if quotient { "R/I" } else { "I" },
                "tables": tables.iter().map(BettiTable::to_json_value).collect::<Vec<_>>(),
                "diff": diffs,
            }),
        ),
        Output::Text => {
            let mut s = String::new();
            for t in &tables {
                s += &t.to_text();
                s.push('\n');
            }
            if tables.len() > 1 {
                if diffs.is_empty() {
                    s += "differences: none\n";
                } else {
                    s += "differences:\n";
                    for d in &diffs {
                        s += &format!("  {} vs {} at i={}: {} vs {}\n", d["a"].as_str().unwrap_or(""), d["b"].as_str().unwrap_or(""), d["i"], d["a_value"], d["b_value"]);
                    }
                }
            }
            write_text(out, &s)
        }
    }
}

fn homology_json(h: &HomologyResult) -> Value {
    let groups: Vec<Value> = (0..h.dims.len())
        .filter_map(|k| {
            let d = k as isize - 1;
            let tors: Vec<String> = h.torsion_of(d).iter().map(|t| t.to_string()).collect();
            (h.dims[k] > 0 || !tors.is_empty()).then(|| json!({"degree": d, "rank": h.dims[k], "torsion": tors}))
        })
        .collect();
    json!({
        "ring": h.field.map_or("Z".to_string(), |f| f.to_string()),
        "groups": groups,
    })
}

fn cmd_homology(
    ctx: &Ctx,
    input: &Input,
    interval: Option<&str>,
    integer: bool,
    export: Option<isize>,
    out: &mut dyn Write,
) -> Result<()> {
    let complex = match interval {
        Some(m) => {
            let (i, _) = load_ideal(input)?;
            let m = parse_monomial(i.context(), m)?;
            match ctx.opts.route {
                Route::Koszul => upper_koszul_complex(&i, &m)?,
                Route::LatticeInterval => LcmLattice::build(&i, ctx.opts.guards.max_lattice)?.open_interval(&m)?,
            }
        }
        None => load_complex(input)?,
    };
    if let Some(d) = export {
        let chain = ChainComplex::new(&complex, ctx.opts.guards.max_faces)?;
        let text = chain
            .export(d)
            .ok_or_else(|| Error::Argument(format!("no boundary map from dimension {d}")))?;
        return write_text(out, &text);
    }
    let mut results = Vec::new();
    for f in ctx.fields_or_q() {
        results.push(homology_dims(&complex, f, &ctx.opts.guards)?);
    }
    if integer {
        results.push(integer_homology(&complex, &ctx.opts.guards)?);
    }
    match ctx.output {
        Output::Json => write_json(
            out,
            &json!({
                "vertices": complex.num_vertices(),
                "facets": complex.facets().len(),
                "f_vector": complex.f_vector(),
                "results": results.iter().map(homology_json).collect::<Vec<_>>(),
            }),
        ),
        Output::Text => {
            let mut s = String::new();
            for r in &results {
                let ring = r.field.map_or("Z".to_string(), |f| f.to_string());
                s += &format!("{ring}: {r}\n");
            }
            write_text(out, &s)
        }
    }
}

fn cmd_construct(ctx: &Ctx, name: &str, p: Option<u32>, emit: Option<Emit>, out: &mut dyn Write) -> Result<()> {
    let c = construct(name, p)?;
    let text = match (emit, &c) {
        (Some(Emit::Ideal), c) => ideal_to_text(&c.ideal()),
        (None, Construction::Ideal(i)) => ideal_to_text(i),
        (Some(Emit::Complex) | None, Construction::Complex(x)) => complex_to_text(x),
        (Some(Emit::Complex), Construction::Ideal(i)) => complex_to_text(&complex_of_ideal(i)?),
        (Some(Emit::Graph) | None, Construction::Graph(g)) => graph_to_text(g),
        (Some(e), c) => {
            return Err(Error::Argument(format!("{} cannot be emitted as {e:?}", c.kind()).to_lowercase()));
        }
    };
    match ctx.output {
        Output::Text => write_text(out, &text),
        Output::Json => write_json(out, &json!({"name": name, "kind": c.kind(), "text": text})),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    ctx: &Ctx,
    input: &Input,
    max_power: u32,
    max_index: Option<usize>,
    probes: &[String],
    probes_only: bool,
    results_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<()> {
    let (ideal, name) = load_ideal(input)?;
    let mut primes: Vec<u64> = ctx.fields.iter().map(|f| f.characteristic()).filter(|&p| p > 0).collect();
    if primes.is_empty() {
        primes.push(2);
    }
    let mut req = ScanRequest::new(ideal, primes, max_power);
    req.max_index = max_index;
    req.probes_only = probes_only;
    req.probes = probes.iter().map(|p| p.parse()).collect::<Result<_>>()?;
    if req.probes.is_empty() {
        req.probes.extend(name.as_deref().and_then(corpus_probes));
    }
    req.name = name;
    if req.probes_only && req.probes.is_empty() {
        return Err(Error::Argument("--probes-only needs at least one probe".into()));
    }
    let report = scan_dependence(&req, &ctx.opts)?;
    if let Some(dir) = results_dir {
        let path = report.save(dir)?;
        if ctx.opts.progress {
            eprintln!("saved {}", path.display());
        }
    }
    match ctx.output {
        Output::Json => write_text(out, &(report.to_json() + "\n")),
        Output::Text => write_text(out, &scan_text(&report)),
    }
}

fn asym(a: Asymptotic) -> &'static str {
    match a {
        Asymptotic::EvidenceDependent => "evidence-dependent",
        Asymptotic::EvidenceIndependent => "evidence-independent",
        Asymptotic::Inconclusive => "inconclusive",
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn scan_text(r: &DependenceReport) -> String {
    let mut s = format!("request: {}\n", r.request.sha());
    for c in &r.cells {
        s += &format!("h={} {}: ", c.h, c.field);
        match &c.total_betti {
            Some(t) => {
                let pd = c.pd.map_or("-".into(), |x| x.to_string());
                let reg = c.reg.map_or("-".into(), |x| x.to_string());
                s += &format!("total {} pd {pd} reg {reg}\n", join(t));
            }
            None => {
                s += "aborted";
                for p in &c.probes {
                    s += &format!("; probe {}: {}", p.alpha, join(&p.betti));
                }
                s.push('\n');
            }
        }
    }
    if r.diffs.is_empty() && r.probe_diffs.is_empty() {
        s += "differences: none\n";
    } else {
        s += "differences:\n";
        for d in &r.diffs {
            s += &format!("  h={} F{} i={}: {} vs {}\n", d.h, d.p, d.i, d.q_value, d.p_value);
        }
        for d in &r.probe_diffs {
            s += &format!("  h={} F{} i={} at {}: {} vs {}\n", d.h, d.p, d.i, d.alpha, d.q_value, d.p_value);
        }
    }
    let classes: Vec<String> = r.classes.iter().map(|c| format!("{{{}}}", join(c))).collect();
    s += &format!("classes: {}\n", classes.join(" "));
    for f in r.kodiyalam.iter().filter(|f| f.stable) {
        s += &format!(
            "kodiyalam {} index {}: degree {} coefficients {}\n",
            f.field.as_deref().unwrap_or("?"),
            f.index,
            f.degree.unwrap_or(0),
            f.coefficients.as_deref().map(join).unwrap_or_default()
        );
    }
    s += &format!("verdict: {} ({})\n", asym(r.verdict.asymptotic), r.verdict.basis);
    for v in &r.verdict.per_prime {
        s += &format!(
            "  F{}: {}; dependent at [{}], independent at [{}], unknown at [{}]\n",
            v.p,
            asym(v.asymptotic),
            join(&v.dependent_at),
            join(&v.independent_at),
            join(&v.unknown_at)
        );
    }
    s
}

fn bounds_text(r: &BoundReport) -> String {
    let mut s = format!("bound: {}\n", r.bound);
    for row in &r.rows {
        let a = row.a.map_or(String::new(), |a| format!(" a={a}"));
        s += &format!(
            "  F{} h={} i={}{a}: observed {} bound {} margin {}\n",
            row.p, row.h, row.i, row.observed, row.bound, row.margin
        );
    }
    s
}

fn cmd_bounds(
    ctx: &Ctx,
    input: &Input,
    w: Option<&str>,
    vars: Option<usize>,
    max_power: u32,
    out: &mut dyn Write,
) -> Result<()> {
    let (ideal, _) = load_ideal(input)?;
    let mut primes: Vec<u64> = ctx.fields.iter().map(|f| f.characteristic()).filter(|&p| p > 0).collect();
    if primes.is_empty() {
        primes.push(2);
    }
    let report = match (w, vars) {
        (Some(w), _) => {
            let (i, w) = parse_monomial_extending(&ideal, w)?;
            check_spreading_bound(&i, &w, &primes, max_power, &ctx.opts)?
        }
        (None, Some(r)) => check_variable_spreading_bound(&ideal, r, &primes, max_power, &ctx.opts)?,
        (None, None) => return Err(Error::Argument("give --w or --vars".into())),
    };
    match ctx.output {
        Output::Json => write_json(out, &serde_json::to_value(&report)?),
        Output::Text => write_text(out, &bounds_text(&report)),
    }
}

fn cmd_splitting(
    ctx: &Ctx,
    input: &Input,
    j: Option<PathBuf>,
    k: Option<PathBuf>,
    random: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let (i, _) = load_ideal(input)?;
    let (jj, kk) = match (j, k, random) {
        (Some(j), Some(k), false) => {
            let j = parse_ideal(&read_source(&j)?)?.embed(i.context())?;
            let k = parse_ideal(&read_source(&k)?)?.embed(i.context())?;
            (j, k)
        }
        (None, None, true) => {
            if i.num_generators() < 2 {
                return Err(Error::Argument("a random split needs two generators".into()));
            }
            let mut gens = i.generators().to_vec();
            gens.shuffle(&mut ChaCha8Rng::seed_from_u64(ctx.seed));
            let cut = 1 + (ctx.seed as usize % (gens.len() - 1));
            let k = gens.split_off(cut);
            (
                MonomialIdeal::minimalize(i.context(), gens)?,
                MonomialIdeal::minimalize(i.context(), k)?,
            )
        }
        _ => return Err(Error::Argument("give --j and --k, or --random".into())),
    };
    let mut reports = Vec::new();
    for f in ctx.fields_or_q() {
        reports.push(check_splitting(&i, &jj, &kk, f, &ctx.opts)?);
    }
    match ctx.output {
        Output::Json => write_json(
            out,
            &json!({
                "j": jj.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "k": kk.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "reports": serde_json::to_value(&reports)?,
            }),
        ),
        Output::Text => {
            let mut s = format!("J: {}\nK: {}\n", jj.num_generators(), kk.num_generators());
            for r in &reports {
                let disc: Vec<String> = r.discrepancy.iter().map(i64::to_string).collect();
                s += &format!(
                    "{}: {} (discrepancy {}; multigraded {})\n",
                    r.field,
                    if r.holds { "SPLITTING" } else { "NOT A SPLITTING" },
                    disc.join(" "),
                    if r.multigraded_holds { "holds" } else { "fails" }
                );
            }
            write_text(out, &s)
        }
    }
}

fn cmd_formula(ctx: &Ctx, input: &Input, w: &str, power: u32, out: &mut dyn Write) -> Result<()> {
    let (ideal, _) = load_ideal(input)?;
    let (i, w) = parse_monomial_extending(&ideal, w)?;
    let mut rows = Vec::new();
    for f in ctx.fields_or_q() {
        rows.push(formula_check(&i, &w, power, f, &ctx.opts)?);
    }
    match ctx.output {
        Output::Json => write_json(out, &serde_json::to_value(&rows)?),
        Output::Text => {
            let mut s = String::new();
            for r in &rows {
                s += &format!(
                    "{} h={}: formula {} direct {} {}\n",
                    r.field,
                    r.h,
                    join(&r.formula),
                    join(&r.direct),
                    if r.equal { "EQUAL" } else { "DIFFERENT" }
                );
            }
            write_text(out, &s)
        }
    }
}

fn cmd_dual(ctx: &Ctx, input: &Input, out: &mut dyn Write) -> Result<()> {
    let from_complex = input.complex.is_some()
        || input
            .construct
            .as_ref()
            .is_some_and(|n| matches!(construct(n, input.p), Ok(Construction::Complex(_))));
    let c = load_complex(input)?;
    let dual = c.alexander_dual();
    let text = if from_complex {
        complex_to_text(&dual)
    } else {
        ideal_to_text(&dual.stanley_reisner_ideal())
    };
    match ctx.output {
        Output::Text => write_text(out, &text),
        Output::Json => write_json(
            out,
            &json!({"kind": if from_complex { "complex" } else { "ideal" }, "text": text}),
        ),
    }
}
