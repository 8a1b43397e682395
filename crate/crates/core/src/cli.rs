//! Command-line front end.
//!
//! Inputs are given as `example:NAME`, as inline JSON (anything starting with
//! `{`), or as a file path. Data goes to stdout, diagnostics to stderr. Exit
//! code 0 means success, 1 a domain error, 2 a usage error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complex::{cone_h, gauss_reduce, validate_complex, ComplexB};
use crate::curve::{classify_reduced_complex, CurveComponent, Multicurve, Slope};
use crate::detection::{
    agccc_report, connectivity_check, detect_rational, detect_split, ecsc_scan, split_closure_analysis, AgcccReport,
    Connectivity, EcscReport, SlopePair,
};
use crate::error::{Error, Result};
use crate::examples::{example_names, example_source};
use crate::pairing::{
    geometric_dim, mor_homology_with_cap, stabilization, torsion_witness, BigradedDims, TorsionReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "khcurves", version, about = "Khovanov multicurve invariants of Conway tangles")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest twist parameter scanned by `ecsc` and `agccc`.
    #[arg(long, default_value_t = 8, global = true)]
    nmax: u64,
    /// Override the morphism-space cap used by `pair`.
    #[arg(long, global = true)]
    cap: Option<u64>,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check ids, the grading law and d² = 0.
    Validate { input: String },
    /// Cancel all identity entries.
    Reduce { input: String },
    /// The mapping cone of H.
    Cone { input: String },
    /// Bigraded homology of Mor(left, right).
    Pair {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Also search for torsion in the basepoint action.
        #[arg(long)]
        torsion: bool,
    },
    /// Intersection counts of an arc with each component of a multicurve.
    Geom {
        /// Slope of the arc, e.g. `1/3`, `-2` or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        arc: String,
        #[arg(long)]
        curve: String,
    },
    /// Reduce a complex and match its components against known families.
    Classify { input: String },
    /// Split, rational and connectivity checks.
    Detect {
        #[command(subcommand)]
        which: DetectCommand,
    },
    /// Compare the fillings T(±2) and T(±1/n).
    Ecsc {
        #[arg(long)]
        curve: String,
    },
    /// Study the twist family T(1/2n).
    Agccc {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "no")]
        conn: String,
        /// The H-cone complex of the tangle, enabling the quantum lower bound.
        #[arg(long)]
        complex: Option<String>,
    },
    /// Decide whether the closure T(0) is split.
    Closure {
        #[arg(long)]
        curve: String,
    },
    /// List the built-in examples, or print one.
    Examples { name: Option<String> },
}

#[derive(Subcommand, Debug)]
enum DetectCommand {
    Split {
        #[arg(long)]
        complex: String,
    },
    Rational {
        #[arg(long)]
        curve: String,
    },
    Connectivity {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value = "no")]
        conn: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Resolves `example:NAME`, inline JSON, or a file path to JSON text.
pub fn read_input(source: &str) -> Result<String> {
    if let Some(name) = source.strip_prefix("example:") {
        return Ok(example_source(name)?.to_string());
    }
    if source.trim_start().starts_with('{') {
        return Ok(source.to_string());
    }
    std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("cannot read `{source}`: {e}")))
}

pub fn read_complex(source: &str) -> Result<ComplexB> {
    ComplexB::from_json_str(&read_input(source)?)
}

pub fn read_multicurve(source: &str) -> Result<Multicurve> {
    Multicurve::from_json_str(&read_input(source)?)
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let format = cli.format;
    match dispatch(&cli) {
        Ok(body) => match &cli.out {
            Some(path) => match std::fs::write(path, &body) {
                Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: format!("wrote {}\n", path.display()) },
                Err(e) => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("cannot write {}: {e}\n", path.display()),
                },
            },
            None => Outcome { code: 0, stdout: body, stderr: String::new() },
        },
        Err(e) => {
            let stderr = format!("error: {e}\n");
            let stdout = match format {
                Format::Json => json_text(&json!({"error": {"kind": e.kind(), "message": e.to_string()}})),
                Format::Text => String::new(),
            };
            Outcome { code: 1, stdout, stderr }
        }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn dispatch(cli: &Cli) -> Result<String> {
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Validate { input } => {
            let x = read_complex(input)?;
            let r = validate_complex(&x);
            match fmt {
                Format::Json => json_text(&json!({"valid": r.is_valid(), "report": to_value(&r)})),
                Format::Text => {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    let mut s = format!(
                        "valid: {}\nids unique: {}\nhomogeneous: {}\nd^2 = 0: {}\nreduced: {}\n",
                        yn(r.is_valid()),
                        yn(r.ids_unique),
                        yn(r.homogeneous),
                        yn(r.d_squared_zero),
                        yn(r.reduced)
                    );
                    for issue in &r.issues {
                        let _ = writeln!(s, "  - {issue}");
                    }
                    s
                }
            }
        }
        Command::Reduce { input } => render_complex(&gauss_reduce(&read_complex(input)?), fmt),
        Command::Cone { input } => render_complex(&cone_h(&read_complex(input)?), fmt),
        Command::Pair { left, right, torsion } => {
            let (x, y) = (read_complex(left)?, read_complex(right)?);
            pair(&x, &y, cli.cap, *torsion, fmt)?
        }
        Command::Geom { arc, curve } => {
            let slope: Slope = arc.parse()?;
            let c = read_multicurve(curve)?;
            let a = CurveComponent::arc(slope);
            let dims = c.components.iter().map(|g| geometric_dim(&a, g)).collect::<Result<Vec<u64>>>()?;
            let total: u64 = dims.iter().sum();
            match fmt {
                Format::Json => json_text(&json!({
                    "arc": slope,
                    "components": c.components.iter().zip(&dims).map(|(g, d)| json!({"component": g.to_string(), "dim": d})).collect::<Vec<_>>(),
                    "total": total,
                })),
                Format::Text => {
                    let mut s = String::new();
                    for (g, d) in c.components.iter().zip(&dims) {
                        let _ = writeln!(s, "{:<16} {d}", g.to_string());
                    }
                    let _ = writeln!(s, "total dimension against a({slope}): {total}");
                    s
                }
            }
        }
        Command::Classify { input } => {
            let reduced = gauss_reduce(&read_complex(input)?);
            let matches = classify_reduced_complex(&reduced);
            match fmt {
                Format::Json => json_text(&to_value(&matches)),
                Format::Text => {
                    let mut s = String::new();
                    for m in &matches {
                        let name = m.family.clone().unwrap_or_else(|| "unknown".into());
                        let _ =
                            writeln!(s, "{name:<18} q{:+} h{:+}  [{}]", m.q_shift, m.h_shift, m.generators.join(", "));
                    }
                    s
                }
            }
        }
        Command::Detect { which } => match which {
            DetectCommand::Split { complex } => {
                let v = detect_split(&read_complex(complex)?);
                match fmt {
                    Format::Json => json_text(&to_value(&v)),
                    Format::Text => {
                        let mut s = if v.split { "split\n".to_string() } else { "not split\n".to_string() };
                        for e in &v.evidence {
                            let _ = writeln!(s, "  {e}");
                        }
                        s
                    }
                }
            }
            DetectCommand::Rational { curve } => {
                let c = read_multicurve(curve)?;
                let r = detect_rational(&c);
                match fmt {
                    Format::Json => json_text(&json!({"rational": r, "curve": c.to_string()})),
                    Format::Text => format!("{}\n", if r { "rational" } else { "not rational" }),
                }
            }
            DetectCommand::Connectivity { curve, conn } => {
                let conn: Connectivity = conn.parse()?;
                let v = connectivity_check(conn, &read_multicurve(curve)?);
                match fmt {
                    Format::Json => json_text(&json!({"connectivity": conn, "violations": to_value(&v)})),
                    Format::Text if v.is_empty() => "no violations\n".to_string(),
                    Format::Text => v.iter().map(|v| format!("{}: {}\n", v.component, v.reason)).collect(),
                }
            }
        },
        Command::Ecsc { curve } => {
            let r = ecsc_scan(&read_multicurve(curve)?, cli.nmax);
            match fmt {
                Format::Json => json_text(&to_value(&r)),
                Format::Text => render_ecsc(&r),
            }
        }
        Command::Agccc { curve, conn, complex } => {
            let c = read_multicurve(curve)?;
            let conn: Connectivity = conn.parse()?;
            let kh = complex.as_deref().map(read_complex).transpose()?;
            let r = agccc_report(&c, cli.nmax, conn, kh.as_ref());
            match fmt {
                Format::Json => json_text(&to_value(&r)),
                Format::Text => render_agccc(&r),
            }
        }
        Command::Closure { curve } => {
            let v = split_closure_analysis(&read_multicurve(curve)?);
            match fmt {
                Format::Json => json_text(&json!({"verdict": v})),
                Format::Text => format!("{v:?}\n"),
            }
        }
        Command::Examples { name: None } => {
            let names = example_names();
            match fmt {
                Format::Json => json_text(&json!(names
                    .iter()
                    .map(|(n, k)| json!({"name": n, "kind": k.to_string()}))
                    .collect::<Vec<_>>())),
                Format::Text => names.iter().map(|(n, k)| format!("{n:<18} {k}\n")).collect(),
            }
        }
        Command::Examples { name: Some(name) } => example_source(name)?.to_string(),
    };
    Ok(out)
}

fn delta_text(q: i64, h: i64) -> String {
    let twice = q - 2 * h;
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// A complex as text: one line per generator, then one per entry.
pub fn render_complex_text(x: &ComplexB) -> String {
    let mut s = format!("generators ({}):\n", x.len());
    for g in x.generators() {
        let _ = writeln!(s, "  {:<8} {}  q={:<4} h={:<4} delta={}", g.id, g.vertex, g.q, g.h, delta_text(g.q, g.h));
    }
    let _ = writeln!(s, "differential ({}):", x.entry_count());
    for (i, j, e) in x.entries() {
        let _ = writeln!(s, "  {} -[{e}]-> {}", x.generator(i).id, x.generator(j).id);
    }
    s
}

fn render_complex(x: &ComplexB, fmt: Format) -> String {
    match fmt {
        Format::Json => x.to_json_string() + "\n",
        Format::Text => render_complex_text(x),
    }
}

/// Poincaré table, ascending in `q`, with the δ-grading column.
pub fn render_dims_text(d: &BigradedDims) -> String {
    let mut s = format!("{:>6} {:>6} {:>7} {:>5}\n", "q", "h", "delta", "rank");
    for ((q, h), r) in d.iter() {
        let _ = writeln!(s, "{q:>6} {h:>6} {:>7} {r:>5}", delta_text(q, h));
    }
    s
}

fn pair(x: &ComplexB, y: &ComplexB, cap: Option<u64>, torsion: bool, fmt: Format) -> Result<String> {
    let (dims, report) = if torsion {
        let r = torsion_witness(x, y)?;
        (r.dims.clone(), Some(r))
    } else {
        (mor_homology_with_cap(x, y, cap)?, None)
    };
    let st = stabilization(x, report.as_ref().map_or(y, |r| &r.target), cap);
    Ok(match fmt {
        Format::Json => {
            let mut v = json!({
                "total": dims.total(),
                "ranks": to_value(&dims),
                "poincare": dims.poincare(),
                "cap": st.cap,
                "q_top": st.q_top,
            });
            if let Some(r) = &report {
                v["torsion"] = torsion_json(x, r);
            }
            json_text(&v)
        }
        Format::Text => {
            let mut s = format!("total dimension: {}\npoincare: {}\n", dims.total(), dims.poincare());
            s += &render_dims_text(&dims);
            if let Some(r) = &report {
                s += &torsion_text(x, r);
            }
            s
        }
    })
}

fn torsion_json(x: &ComplexB, r: &TorsionReport) -> Value {
    json!({
        "target_form": r.target_form,
        "dimension": r.dimension(),
        "action_rank": r.action_rank,
        "free": r.is_free(),
        "action_squared_zero": r.action_squared_zero,
        "certified": r.certified,
        "witness": r.witness.as_ref().map(|w| json!({
            "q": w.q,
            "h": w.h,
            "has_identity_component": w.class.has_identity_term(),
            "class": to_value(&w.class.to_terms(x, &r.target)),
            "nullhomotopy": to_value(&w.nullhomotopy.to_terms(x, &r.target)),
        })),
    })
}

fn torsion_text(x: &ComplexB, r: &TorsionReport) -> String {
    let mut s = format!(
        "basepoint action: rank {} on dimension {} ({}), target {:?}\n",
        r.action_rank,
        r.dimension(),
        if r.is_free() { "free" } else { "not free" },
        r.target_form
    );
    match &r.witness {
        Some(w) => {
            let _ = writeln!(s, "torsion witness at (q,h)=({},{}): {}", w.q, w.h, w.class.render(x, &r.target));
            let _ = writeln!(s, "  D·class = d({})", w.nullhomotopy.render(x, &r.target));
            let _ = writeln!(s, "  certified: {}", r.certified);
        }
        None => s += "no torsion witness\n",
    }
    s
}

fn render_pair(label: &str, p: &SlopePair) -> String {
    format!(
        "{label} {} vs {}: dims {} / {} (rational part {} / {}), shifts {:?}: {:?}\n",
        p.slopes.0, p.slopes.1, p.dims.0, p.dims.1, p.rational_dims.0, p.rational_dims.1, p.shifts, p.verdict
    )
}

fn render_ecsc(r: &EcscReport) -> String {
    if !r.applicable {
        return format!("not applicable: {}\n", r.reason.as_deref().unwrap_or(""));
    }
    let mut s = format!(
        "rational slope {}, {} special component(s)\n",
        r.rational_slope.map(|s| s.to_string()).unwrap_or_default(),
        r.specials
    );
    if let Some(p) = &r.case1 {
        s += &render_pair("case 1:", p);
    }
    for (n, p) in &r.case2 {
        s += &render_pair(&format!("case 2, n={n}:"), p);
    }
    s
}

fn render_agccc(r: &AgcccReport) -> String {
    if !r.applicable {
        return format!("not applicable: {}\n", r.reason.as_deref().unwrap_or(""));
    }
    let mut s = format!("branch: {:?}\n", r.branch.expect("applicable report has a branch"));
    if let (Some(m), Some(n)) = (r.m, r.n) {
        let _ = writeln!(s, "M = {m}, N = {n}, monotone: {}", r.monotone.unwrap_or(false));
    }
    let _ = writeln!(s, "{:>5} {:>6} {:>8}", "n", "dim", "q-shift");
    for (n, d) in &r.dims {
        let shift = r.special_shifts.get(n).map(|v| v.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(s, "{n:>5} {d:>6} {shift:>8}");
    }
    for n in &r.undetermined {
        let _ = writeln!(s, "{n:>5} {:>6}", "?");
    }
    match r.q_lower_bound {
        Some(b) => {
            let _ = writeln!(s, "quantum lower bound: {b} ({})", r.q_lower_bound_note);
        }
        None => {
            let _ = writeln!(s, "quantum lower bound: {}", r.q_lower_bound_note);
        }
    }
    s
}
