//! The `windlab` command line.
//!
//! Exit codes: 0 success (or "trivial"), 1 "nontrivial" or a failed check,
//! 2 usage or parse error, 3 a violated precondition such as a word outside
//! the derived subgroup.

pub mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use windlab_core::coloring::standard_coloring;
use windlab_core::intmat::factored;
use windlab_core::invariant::{
    basiccom_report, engel_gamma_report, lambda_of_word, lambda_report, m24_is_trivial,
    morse_report, n2n_is_trivial, omega, omega_bar, omega_of_poly, omega_tilde, Coloring,
    ENGEL_SEARCH_BOUND,
};
use windlab_core::quotient::{
    build_lattice, closed_form_bounds, completed_lattice, family_lattice, literature_notes,
    m24_word_problem_nf, quotient_order, DEFAULT_WINDOW_GUARD,
};
use windlab_core::subgroup::{
    cotainf_image_check, omega_bar_image_order, omega_image_order, restricted_burnside_bound,
};
use windlab_core::verify::{run_suite, suite_names, threads_from_env};
use windlab_core::winding::engel_winding;
use windlab_core::word::parse_word;
use windlab_core::{winding_invariant, Error, InvariantSpec, PGoodColoring, TwoColoring, Word};

use crate::render::{write_svg, RenderConfig};

#[derive(Debug, Parser)]
#[command(
    name = "windlab",
    version,
    about = "Winding and coloring invariants of words in F2"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a word and print its reduced form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Winding invariant of a word in F2'.
    Winding {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Coloring invariant Λ of a word.
    Invariant {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        json: bool,
    },
    /// The Ω vector, or Ω̄ / Ω̃.
    Omega {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        n: u64,
        #[arg(long, conflicts_with = "tilde")]
        bar: bool,
        /// Ω̃ of M(2,4); requires n = 4.
        #[arg(long)]
        tilde: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a word is trivial.
    WordProblem {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum)]
        group: Group,
        #[arg(long, default_value_t = 4)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Invariant)]
        method: Method,
    },
    /// Reports on the Engel, Morse and basic-commutator identities.
    Identity {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Order of the image of an invariant family.
    ImageOrder {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long, default_value_t = 8)]
        n: u64,
    },
    /// Quotient of the relation lattice on the n x n window.
    Quotient {
        #[arg(long)]
        n: usize,
        /// One relator word per line; `#` starts a comment.
        #[arg(long)]
        relators: Option<PathBuf>,
        /// Add the generic power products to the symmetric family.
        #[arg(long, conflicts_with = "relators")]
        completed: bool,
        /// Allow n above the default window guard.
        #[arg(long)]
        allow_large: bool,
    },
    /// Closed-form bounds on |M(d, n)|.
    Bounds {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Draw the curve of a word as SVG.
    Render {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Background coloring: std:I, bw:PATTERN or pgood:C0,C1,...
        #[arg(long)]
        coloring: Option<String>,
        /// Modulus for `std:I` colorings.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        phi: String,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        translate: String,
        #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(4..))]
        cell_px: u32,
        #[arg(long, default_value_t = 1)]
        pad: u32,
        #[arg(long)]
        no_winding_numbers: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run the named check suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    phi: String,
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    translate: String,
    /// std:I, bw:PATTERN or pgood:C0,C1,...
    #[arg(long)]
    coloring: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Group {
    M24,
    N2n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Invariant,
    Normalform,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Engel,
    Morse,
    Basic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Omega,
    OmegaBar,
    Cotainf,
    R28,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            msg: msg.into(),
        }
    }

    fn precondition(msg: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Syntax { .. } | Error::ExponentOverflow { .. } => 2,
            Error::CheckFailed(_) => 1,
            _ => 3,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        // A closed pipe (`windlab ... | head`) is not an error.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: 0,
                msg: String::new(),
            };
        }
        Failure {
            code: 1,
            msg: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command line and returns the exit code. Results go to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            if !f.msg.is_empty() {
                let _ = writeln!(err, "error: {}", f.msg);
            }
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Parse { word } => {
            writeln!(out, "{}", parse(&word)?.to_folded_string())?;
            Ok(0)
        }
        Command::Winding { word, json } => {
            let p = winding_invariant(&parse(&word)?)?;
            if json {
                print_json(out, &p.to_json())?;
            } else {
                writeln!(out, "{p}")?;
            }
            Ok(0)
        }
        Command::Invariant { word, spec, json } => {
            let w = parse(&word)?;
            let spec = invariant_spec(spec.n, &spec.phi, &spec.translate, &spec.coloring)?;
            let v = lambda_of_word(&spec, &w)?;
            if json {
                print_json(out, &lambda_report(&spec, v))?;
            } else {
                writeln!(out, "{v}")?;
            }
            Ok(0)
        }
        Command::Omega {
            word,
            n,
            bar,
            tilde,
            json,
        } => omega_cmd(out, &parse(&word)?, n, bar, tilde, json),
        Command::WordProblem {
            word,
            group,
            n,
            method,
        } => {
            let w = parse(&word)?;
            let trivial = match group {
                Group::M24 => {
                    if n != 4 {
                        return Err(Failure::precondition("group m24 needs --n 4"));
                    }
                    match method {
                        Method::Invariant => m24_is_trivial(&w),
                        Method::Normalform => m24_word_problem_nf(&w),
                    }
                }
                Group::N2n => {
                    if method == Method::Normalform {
                        return Err(Failure::precondition(
                            "normal forms are only available for group m24",
                        ));
                    }
                    n2n_is_trivial(&w, n)?
                }
            };
            writeln!(out, "{}", if trivial { "trivial" } else { "nontrivial" })?;
            Ok(if trivial { 0 } else { 1 })
        }
        Command::Identity { family, n, index } => identity_cmd(out, family, n, index),
        Command::ImageOrder { target, n } => image_order_cmd(out, target, n),
        Command::Quotient {
            n,
            relators,
            completed,
            allow_large,
        } => {
            if n > DEFAULT_WINDOW_GUARD && !allow_large {
                return Err(Failure::precondition(format!(
                    "n = {n} exceeds the window guard {DEFAULT_WINDOW_GUARD}; pass --allow-large"
                )));
            }
            let lat = match relators {
                Some(path) => build_lattice(&read_relators(&path)?, n)?,
                None if completed => completed_lattice(n)?,
                None => family_lattice(n)?,
            };
            print_json(
                out,
                &serde_json::to_value(quotient_order(&lat)).expect("serializable"),
            )?;
            Ok(0)
        }
        Command::Bounds { d, n, json } => bounds_cmd(out, d, n, json),
        Command::Render {
            word,
            coloring,
            n,
            phi,
            translate,
            cell_px,
            pad,
            no_winding_numbers,
            output,
        } => {
            let w = parse(&word)?;
            let coloring = match coloring {
                Some(c) => {
                    let c = parse_coloring(&c, n)?;
                    let n = match &c {
                        Coloring::Two(t) => t.n(),
                        Coloring::PGood(p) => p.n(),
                    };
                    let spec = InvariantSpec::new(
                        n,
                        parse_pair(&phi, "--phi")?,
                        parse_pair(&translate, "--translate")?,
                        c,
                    )?;
                    Some(spec)
                }
                None => None,
            };
            let cfg = RenderConfig {
                cell_px,
                pad_cells: pad,
                show_winding_numbers: !no_winding_numbers,
                coloring,
            };
            write_svg(&output, &w, &cfg)?;
            writeln!(out, "wrote {}", output.display())?;
            Ok(0)
        }
        Command::Verify { suite, threads } => {
            let threads = threads.or_else(threads_from_env);
            let Some(results) = run_suite(&suite, threads) else {
                return Err(Failure::usage(format!(
                    "unknown suite `{suite}`; expected `all` or one of: {}",
                    suite_names().join(", ")
                )));
            };
            for r in &results {
                writeln!(out, "{r}")?;
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} passed, {failed} failed", results.len() - failed)?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn parse(word: &str) -> Result<Word, Failure> {
    Ok(parse_word(word)?)
}

fn print_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("serializable")
    )
}

fn parse_pair(s: &str, flag: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::usage(format!("{flag} expects two integers A,B, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

/// `std:I` (needs `n`), `bw:BBWW`, or `pgood:0,1,0,3` (`p` is the smallest
/// prime dividing the length).
fn parse_coloring(s: &str, n: Option<u64>) -> Result<Coloring, Failure> {
    let (kind, body) = s
        .split_once(':')
        .ok_or_else(|| Failure::usage(format!("coloring `{s}`: expected KIND:VALUE")))?;
    match kind {
        "std" => {
            let i = body.parse().map_err(|_| {
                Failure::usage(format!("std coloring index `{body}` is not a number"))
            })?;
            let n = n.ok_or_else(|| Failure::usage("std:I colorings need --n"))?;
            Ok(standard_coloring(i, n)?.into())
        }
        "bw" => TwoColoring::from_pattern(body)
            .map(Coloring::from)
            .ok_or_else(|| Failure::usage(format!("pattern `{body}` must consist of B and W"))),
        "pgood" => {
            let colors: Vec<u64> = body
                .split(',')
                .map(|c| c.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::usage(format!("p-good colors `{body}` must be integers")))?;
            let len = colors.len() as u64;
            let p = (2..=len.max(2))
                .find(|p| len.is_multiple_of(*p))
                .unwrap_or(2);
            Ok(PGoodColoring::new(p, colors)?.into())
        }
        _ => Err(Failure::usage(format!("unknown coloring kind `{kind}`"))),
    }
}

fn invariant_spec(
    n: u64,
    phi: &str,
    translate: &str,
    coloring: &str,
) -> Result<InvariantSpec, Failure> {
    let c = parse_coloring(coloring, Some(n))?;
    Ok(InvariantSpec::new(
        n,
        parse_pair(phi, "--phi")?,
        parse_pair(translate, "--translate")?,
        c,
    )?)
}

fn omega_cmd(out: &mut dyn Write, w: &Word, n: u64, bar: bool, tilde: bool, json: bool) -> Outcome {
    let v: Vec<u64> = if tilde {
        if n != 4 {
            return Err(Failure::precondition("--tilde is defined for n = 4 only"));
        }
        omega_tilde(w)?.to_vec()
    } else if bar {
        let (a, o) = omega_bar(w, n)?;
        std::iter::once(a).chain(o.to_vec()).collect()
    } else {
        omega(w, n)?.to_vec()
    };
    if json {
        print_json(out, &json!(v))?;
    } else {
        let parts: Vec<String> = v.iter().map(u64::to_string).collect();
        writeln!(out, "({})", parts.join(","))?;
    }
    Ok(0)
}

fn identity_cmd(out: &mut dyn Write, family: Family, n: u64, index: Option<usize>) -> Outcome {
    let v = match family {
        Family::Engel => match index {
            Some(m) if m >= 1 => {
                let o = omega_of_poly(&engel_winding(m), n)?;
                json!({ "family": "engel", "n": n, "index": m, "omega": o.to_vec(), "vanishes": o.is_zero() })
            }
            Some(_) => return Err(Failure::usage("engel words are indexed from 1")),
            None => serde_json::to_value(engel_gamma_report(n, ENGEL_SEARCH_BOUND)?)
                .expect("serializable"),
        },
        Family::Morse => {
            if !n.is_power_of_two() {
                return Err(Failure::precondition(format!(
                    "morse reports need n = 2^k, got {n}"
                )));
            }
            serde_json::to_value(morse_report(n.trailing_zeros())?).expect("serializable")
        }
        Family::Basic => {
            let r = basiccom_report(n)?;
            let holds = r.holds();
            let mut v = serde_json::to_value(&r).expect("serializable");
            if let Some(i) = index {
                let entry = r.entries.iter().find(|(k, _)| *k == i).ok_or_else(|| {
                    Failure::precondition(format!("index {i} is outside 0..={n}"))
                })?;
                v["entries"] = json!([entry]);
            }
            v["holds"] = json!(holds);
            v
        }
    };
    print_json(out, &v)?;
    Ok(0)
}

fn image_order_cmd(out: &mut dyn Write, target: Target, n: u64) -> Outcome {
    let v = match target {
        Target::Omega | Target::OmegaBar => {
            let (name, order) = match target {
                Target::Omega => ("omega", omega_image_order(n)?),
                _ => ("omega-bar", omega_bar_image_order(n)?),
            };
            json!({ "target": name, "n": n, "order": order.to_string(), "order_factored": factored(&order) })
        }
        Target::Cotainf => {
            let c = cotainf_image_check(n)?;
            let mut v = serde_json::to_value(&c).expect("serializable");
            v["target"] = json!("cotainf");
            v["order_factored"] = json!(factored(&c.order));
            v["holds"] = json!(c.holds());
            v
        }
        Target::R28 => {
            let r = restricted_burnside_bound()?;
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["target"] = json!("r28");
            v["order_factored"] = json!(factored(&r.subgroup_order));
            v
        }
    };
    print_json(out, &v)?;
    Ok(0)
}

fn bounds_cmd(out: &mut dyn Write, d: u64, n: u64, json: bool) -> Outcome {
    let bounds = closed_form_bounds(d, n);
    let notes = literature_notes(d, n);
    if json {
        print_json(
            out,
            &json!({ "d": d, "n": n, "bounds": bounds, "notes": notes }),
        )?;
        return Ok(0);
    }
    writeln!(out, "bounds for |M({d},{n})|")?;
    for b in &bounds {
        let value = b.factored.as_deref().unwrap_or("not applicable");
        writeln!(
            out,
            "  {:<28} {:<5} {:<40} {value}",
            b.name, b.kind, b.formula
        )?;
    }
    for note in notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(0)
}

fn read_relators(path: &PathBuf) -> Result<Vec<(String, Word)>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        msg: format!("reading {}: {e}", path.display()),
    })?;
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let w = parse_word(line)
            .map_err(|e| Failure::usage(format!("{}:{}: {e}", path.display(), k + 1)))?;
        out.push((line.to_string(), w));
    }
    Ok(out)
}
