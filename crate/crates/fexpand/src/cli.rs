//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 inconclusive computation, 3 a
//! reproduction claim failed.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use fexpand_core::algver::{eliminate_cycle, verify_candidate};
use fexpand_core::backforth::{back_and_forth_multi, decode_tail, encode_minpoly, extend_to_pwl, DenseOracle};
use fexpand_core::cfseq::{altlex_compare, parse_periodic, Quotients};
use fexpand_core::chorus::{expand_conjugate, recover_g, theorem1_demo, PWLHomeo};
use fexpand_core::engine::{
    eval_finite, eval_infinite, expand, roundtrip_check, EvalOutcome, ExpansionResult, GeneratorFn, Outcome,
};
use fexpand_core::minkowski::{expand_fquestion, question_mark, question_mark_inverse_exact};
use fexpand_core::powerfam::{
    alpha0_by_equation, alpha0_by_stability, alpha_monotonicity_scan, bifurcation_row, in_ones_basin,
    monotonicity_switch, no_bifurcation_check, ones_basin, ones_threshold, CSV_HEADER,
};
use fexpand_core::realkernel::{parse_rat, BitSchedule, CertifiedReal, Rat};
use fexpand_core::Error;
use serde_json::json;

use crate::formats::{
    self, exact_text, expansion_json, load_poly, load_pwl, parse_coeff_list, parse_rat_list, parse_real,
    partial_iso_tsv, write_pwl,
};
use crate::repro::{self, CLAIMS, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_REPRO_FAIL: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "fexpand", version, about = "Continued f-expansions of real numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Working precision of enclosures, in bits.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(32..))]
    pub bits: u64,
    /// Cap on the precision escalation, in bits.
    #[arg(long, global = true, default_value_t = 1 << 23, value_parser = clap::value_parser!(u64).range(32..))]
    pub max_bits: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a real number: E_f(x).
    Expand {
        /// reciprocal | power:α | chorus:u:v,… | question | power5-patched
        #[arg(long = "f", default_value = "reciprocal")]
        generator: String,
        /// p/q, root(n,p/q), quad(p,q,D,r) or polyroot(file,lo,hi)
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        terms: u64,
        /// Also evaluate the expansion and report the distance back to x.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Evaluate a sequence: V_f of `[a0; a1, …]` or of `[a0; …, (period)]`.
    Eval {
        #[arg(long = "f", default_value = "reciprocal")]
        generator: String,
        #[arg(long)]
        q: String,
        /// Truncation depth for periodic sequences.
        #[arg(long, default_value_t = 400)]
        terms: usize,
        #[arg(long, default_value = "1/1000000000000")]
        tol: String,
    },
    /// Compare two sequences in the alternating-lexicographic order.
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Fixed points, double-iterate fixed points and basins over a grid of α.
    Bifurcate {
        /// Comma-separated α values.
        #[arg(long, conflicts_with_all = ["from", "sign_check"])]
        alpha: Option<String>,
        #[arg(long, requires_all = ["to", "step"])]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        step: Option<String>,
        /// Instead of a sweep, scan the sign of n^(y+1) y^y - (y-1)^(y+1).
        #[arg(long)]
        sign_check: Option<u32>,
        #[arg(long, default_value = "100")]
        y_max: String,
        #[arg(long, default_value_t = 8)]
        places: usize,
    },
    /// The threshold α₀ where the all-ones fixed point turns attracting.
    Alpha0 {
        #[arg(long, value_enum, default_value_t = Alpha0Method::Both)]
        method: Alpha0Method,
    },
    /// Basin of the all-ones orbit of f_α.
    Basin {
        #[arg(long)]
        alpha: String,
        /// Also decide whether x lies in the basin.
        #[arg(long)]
        x: Option<String>,
    },
    /// Least α with x in the all-ones basin of f_α.
    Threshold {
        #[arg(long)]
        x: String,
    },
    /// How E_{f_α}(x) moves with α.
    Monotonicity {
        #[arg(long)]
        x: String,
        /// Comma-separated ascending α values to compare.
        #[arg(long)]
        grid: Option<String>,
        /// Bracket `lo,hi` to search for the switch of direction.
        #[arg(long)]
        switch: Option<String>,
        #[arg(long, default_value_t = 40)]
        terms: usize,
        #[arg(long, default_value = "1/100000")]
        delta: String,
        #[arg(long, default_value = "1/10000")]
        tol: String,
    },
    /// Chorus-line conjugates f_g of the reciprocal function.
    Chorus {
        /// Inline nodes `u:v,u:v`.
        #[arg(long, conflicts_with = "g_file")]
        g: Option<String>,
        /// File of `u v` lines.
        #[arg(long)]
        g_file: Option<PathBuf>,
        /// Expand x under f_g.
        #[arg(long)]
        x: Option<String>,
        /// Recover g at these comma-separated samples.
        #[arg(long)]
        recover: Option<String>,
        /// Build g with g(x) = y for rationals `x,y` and expand x.
        #[arg(long)]
        demo: Option<String>,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
    /// Minkowski's question-mark function.
    Minkowski {
        #[arg(long, group = "op")]
        eval: Option<String>,
        #[arg(long, group = "op")]
        inverse: Option<String>,
        /// E_{f_?}(x).
        #[arg(long, group = "op")]
        expand: Option<String>,
    },
    /// Stages of the back-and-forth construction between dense sets.
    Backforth {
        /// rationals | dyadics | quadirr | q1d:d; repeat together with --B for several pairs.
        #[arg(long = "A", required = true)]
        a: Vec<String>,
        #[arg(long = "B", required = true)]
        b: Vec<String>,
        #[arg(long, default_value_t = 40)]
        stages: usize,
        /// Write the interpolating PWL homeomorphism here.
        #[arg(long)]
        emit_g: Option<PathBuf>,
    },
    /// Code a primitive integer polynomial (constant term first) as a terminal block.
    Encode {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Read the polynomial coded by the terminal block of a sequence.
    Decode {
        #[arg(long)]
        q: String,
    },
    /// Check a polynomial against the 4-cycle eliminant of f_{3/2}.
    #[command(name = "verify-deg93")]
    VerifyDeg93 {
        /// Polynomial file; the bundled degree-93 polynomial by default.
        #[arg(long)]
        poly: Option<PathBuf>,
    },
    /// Run a reproduction claim, or `all`.
    Repro {
        claim: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alpha0Method {
    Equation,
    Stability,
    Both,
}

/// Library operations and the subcommand that exposes each.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("engine::expand", "expand"),
    ("engine::roundtrip_check", "expand"),
    ("engine::eval_finite", "eval"),
    ("engine::eval_infinite", "eval"),
    ("cfseq::altlex_compare", "compare"),
    ("powerfam::bifurcation_row", "bifurcate"),
    ("powerfam::no_bifurcation_check", "bifurcate"),
    ("powerfam::alpha0_by_equation", "alpha0"),
    ("powerfam::alpha0_by_stability", "alpha0"),
    ("powerfam::ones_basin", "basin"),
    ("powerfam::in_ones_basin", "basin"),
    ("powerfam::ones_threshold", "threshold"),
    ("powerfam::alpha_monotonicity_scan", "monotonicity"),
    ("powerfam::monotonicity_switch", "monotonicity"),
    ("chorus::expand_conjugate", "chorus"),
    ("chorus::recover_g", "chorus"),
    ("chorus::theorem1_demo", "chorus"),
    ("minkowski::question_mark", "minkowski"),
    ("minkowski::question_mark_inverse_exact", "minkowski"),
    ("minkowski::expand_fquestion", "minkowski"),
    ("backforth::back_and_forth_multi", "backforth"),
    ("backforth::extend_to_pwl", "backforth"),
    ("backforth::encode_minpoly", "encode"),
    ("backforth::decode_tail", "decode"),
    ("algver::eliminate_cycle", "verify-deg93"),
    ("algver::verify_candidate", "verify-deg93"),
    ("repro::run", "repro"),
];

/// Names of all subcommands, as typed.
pub fn subcommand_names() -> Vec<String> {
    Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect()
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::PrecisionExhausted { .. } => EXIT_INCONCLUSIVE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: msg.into(),
    }
}

/// Text output of a successful run, with its exit code.
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: EXIT_OK }
    }
}

type Run = Result<Output, Failure>;

/// Parses `args` (including the program name), runs the command and writes
/// the result to `out` or to `--output`. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let written = match &cli.output {
                Some(p) => fs::write(p, &o.text).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(o.text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => o.code,
                Err(m) => {
                    let _ = writeln!(err, "error: {m}");
                    EXIT_USAGE
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn schedule(cli: &Cli) -> BitSchedule {
    BitSchedule::new(cli.bits.max(64).min(cli.max_bits), cli.max_bits)
}

fn generator(text: &str) -> Result<GeneratorFn, Failure> {
    Ok(text.parse::<GeneratorFn>()?)
}

fn rat(text: &str) -> Result<Rat, Failure> {
    Ok(parse_rat(text)?)
}

fn dec(c: &CertifiedReal) -> String {
    c.to_decimal(12)
}

fn need_format(cli: &Cli, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&cli.format) {
        Ok(())
    } else {
        Err(usage(format!("--format {:?} is not available for this subcommand", cli.format).to_lowercase()))
    }
}

fn expansion_output(cli: &Cli, e: &ExpansionResult) -> Output {
    let text = match cli.format {
        Format::Json => format!("{}\n", expansion_json(e)),
        _ => format!("{}\n{}\n", e.quotients, formats::outcome_name(&e.outcome)),
    };
    let code = match e.outcome {
        Outcome::UndecidedInteger { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    };
    Output { text, code }
}

pub fn execute(cli: &Cli) -> Run {
    match &cli.command {
        Command::Expand {
            generator: g,
            x,
            terms,
            roundtrip,
        } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let f = generator(g)?;
            let x = parse_real(x)?;
            let terms = *terms as usize;
            if *roundtrip {
                let rt = roundtrip_check(&f, &x, terms, schedule(cli))?;
                let mut o = expansion_output(cli, &rt.expansion);
                o.text = match cli.format {
                    Format::Json => {
                        let mut v = expansion_json(&rt.expansion);
                        v["value"] = json!(dec(&rt.value));
                        v["gap"] = json!(dec(&rt.gap));
                        format!("{v}\n")
                    }
                    _ => format!("{}value {}\ngap {}\n", o.text, dec(&rt.value), dec(&rt.gap)),
                };
                return Ok(o);
            }
            Ok(expansion_output(cli, &expand(&f, &x, terms, schedule(cli))?))
        }
        Command::Eval {
            generator: g,
            q,
            terms,
            tol,
        } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let f = generator(g)?;
            let (label, text, code) = if q.contains('(') {
                let s = parse_periodic(q)?;
                match eval_infinite(&f, &s, *terms, &rat(tol)?)? {
                    EvalOutcome::Converged(v) => ("Converged", vec![dec(&v)], EXIT_OK),
                    EvalOutcome::Oscillating(v) => ("Oscillating", v.iter().map(dec).collect(), EXIT_OK),
                    EvalOutcome::Inconclusive(v) => ("Inconclusive", v.iter().map(dec).collect(), EXIT_INCONCLUSIVE),
                }
            } else {
                let s: Quotients = q.parse()?;
                let v = eval_finite(&f, &s, cli.bits)?;
                ("Value", vec![v.to_string()], EXIT_OK)
            };
            let text = match cli.format {
                Format::Json => format!("{}\n", json!({"outcome": label, "values": text})),
                _ => format!("{label}\n{}\n", text.join("\n")),
            };
            Ok(Output { text, code })
        }
        Command::Compare { a, b } => {
            need_format(cli, &[Format::Text])?;
            let (a, b): (Quotients, Quotients) = (a.parse()?, b.parse()?);
            Ok(Output::ok(format!("{:?}\n", altlex_compare(&a, &b))))
        }
        Command::Bifurcate {
            alpha,
            from,
            to,
            step,
            sign_check,
            y_max,
            places,
        } => {
            if let Some(n) = sign_check {
                need_format(cli, &[Format::Text])?;
                let s = no_bifurcation_check(*n, &rat(y_max)?)?;
                let mut text = format!("n {} y_max {} cells {}\n", s.n, s.y_max, s.cells);
                for (a, b) in &s.sign_changes {
                    text.push_str(&format!("sign change in [{a}, {b}]\n"));
                }
                for (a, b) in &s.unresolved {
                    text.push_str(&format!("unresolved [{a}, {b}]\n"));
                }
                if s.is_sign_definite() {
                    text.push_str("no sign change\n");
                }
                let code = if s.unresolved.is_empty() { EXIT_OK } else { EXIT_INCONCLUSIVE };
                return Ok(Output { text, code });
            }
            need_format(cli, &[Format::Text, Format::Csv])?;
            let grid = match (alpha, from, to, step) {
                (Some(list), ..) => parse_rat_list(list)?,
                (None, Some(a), Some(b), Some(h)) => {
                    let (a, b, h) = (rat(a)?, rat(b)?, rat(h)?);
                    if h <= Rat::from_integer(0.into()) || a > b {
                        return Err(usage("need from <= to and a positive step"));
                    }
                    let mut v = Vec::new();
                    let mut x = a;
                    while x <= b {
                        v.push(x.clone());
                        x += &h;
                    }
                    v
                }
                _ => return Err(usage("give --alpha, --from/--to/--step or --sign-check")),
            };
            let mut text = format!("{CSV_HEADER}\n");
            for a in &grid {
                text.push_str(&bifurcation_row(a, cli.bits)?.to_csv(*places));
                text.push('\n');
            }
            Ok(Output::ok(text))
        }
        Command::Alpha0 { method } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let eq = matches!(method, Alpha0Method::Equation | Alpha0Method::Both)
                .then(|| alpha0_by_equation(cli.bits))
                .transpose()?;
            let st = matches!(method, Alpha0Method::Stability | Alpha0Method::Both)
                .then(|| alpha0_by_stability(cli.bits.min(48)))
                .transpose()?;
            let both = match (&eq, &st) {
                (Some(a), Some(b)) => Some(a.intersect(b)),
                _ => None,
            };
            let text = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "equation": eq.as_ref().map(dec),
                        "stability": st.as_ref().map(dec),
                        "intersect": both.as_ref().map(|b| b.is_some()),
                    })
                ),
                _ => {
                    let mut t = String::new();
                    if let Some(a) = &eq {
                        t.push_str(&format!("equation {}\n", dec(a)));
                    }
                    if let Some(b) = &st {
                        t.push_str(&format!("stability {}\n", dec(b)));
                    }
                    if let Some(i) = &both {
                        t.push_str(&format!("intersect {}\n", i.is_some()));
                    }
                    t
                }
            };
            Ok(Output::ok(text))
        }
        Command::Basin { alpha, x } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let a = rat(alpha)?;
            let (lo, hi) = ones_basin(&a, cli.bits)?;
            let member = match x {
                Some(x) => Some(in_ones_basin(&a, &parse_real(x)?, cli.bits.max(128))?),
                None => None,
            };
            let code = if member == Some(None) { EXIT_INCONCLUSIVE } else { EXIT_OK };
            let member_text = |m: Option<bool>| m.map_or("undecided", |b| if b { "inside" } else { "outside" });
            let text = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    json!({"alpha": a.to_string(), "lo": dec(&lo), "hi": dec(&hi), "x": member.map(member_text)})
                ),
                _ => {
                    let mut t = format!("lo {}\nhi {}\n", dec(&lo), dec(&hi));
                    if let Some(m) = member {
                        t.push_str(&format!("x {}\n", member_text(m)));
                    }
                    t
                }
            };
            Ok(Output { text, code })
        }
        Command::Threshold { x } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let t = ones_threshold(&parse_real(x)?, cli.bits.min(40))?;
            let text = match cli.format {
                Format::Json => format!("{}\n", json!({"x": x, "threshold": dec(&t)})),
                _ => format!("{}\n", dec(&t)),
            };
            Ok(Output::ok(text))
        }
        Command::Monotonicity {
            x,
            grid,
            switch,
            terms,
            delta,
            tol,
        } => {
            need_format(cli, &[Format::Text, Format::Csv])?;
            if grid.is_none() && switch.is_none() {
                return Err(usage("give --grid, --switch or both"));
            }
            let x = parse_real(x)?;
            let mut text = String::new();
            if let Some(g) = grid {
                let scan = alpha_monotonicity_scan(&x, &parse_rat_list(g)?, *terms, schedule(cli))?;
                text.push_str("alpha,expansion,next\n");
                for (i, row) in scan.rows.iter().enumerate() {
                    let next = scan.comparisons.get(i).map_or(String::new(), |c| format!("{c:?}"));
                    text.push_str(&format!("{},\"{}\",{next}\n", row.alpha, row.expansion.quotients));
                }
            }
            if let Some(s) = switch {
                let b = parse_rat_list(s)?;
                let [lo, hi] = &b[..] else {
                    return Err(usage("--switch takes lo,hi"));
                };
                let (a, b) = monotonicity_switch(&x, lo, hi, &rat(delta)?, *terms, &rat(tol)?, schedule(cli))?;
                let d = |r: &Rat| fexpand_core::realkernel::decimal(r, 8, fexpand_core::realkernel::Round::Down);
                text.push_str(&format!("switch in [{}, {}]\n", d(&a), d(&b)));
            }
            Ok(Output::ok(text))
        }
        Command::Chorus {
            g,
            g_file,
            x,
            recover,
            demo,
            terms,
        } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let g = match (g, g_file) {
                (Some(s), _) => PWLHomeo::parse_inline(s)?,
                (None, Some(p)) => load_pwl(p)?,
                (None, None) => PWLHomeo::identity(),
            };
            let mut text = String::new();
            let mut code = EXIT_OK;
            if let Some(x) = x {
                let e = expand_conjugate(&g, &parse_real(x)?, *terms, schedule(cli))?;
                let o = expansion_output(cli, &e);
                text.push_str(&o.text);
                code = code.max(o.code);
            }
            if let Some(r) = recover {
                for (u, v) in recover_g(&GeneratorFn::chorus(g.clone()), &parse_rat_list(r)?, *terms, schedule(cli))? {
                    text.push_str(&format!("g({u}) = {v}\n"));
                }
            }
            if let Some(d) = demo {
                let xy = parse_rat_list(d)?;
                let [x, y] = &xy[..] else {
                    return Err(usage("--demo takes x,y"));
                };
                let (g, e) = theorem1_demo(x, y, *terms)?;
                text.push_str(&format!("g {}\n", write_pwl(&g).trim_end().replace('\n', ",")));
                text.push_str(&expansion_output(cli, &e).text);
            }
            if text.is_empty() {
                return Err(usage("give --x, --recover or --demo"));
            }
            Ok(Output { text, code })
        }
        Command::Minkowski { eval, inverse, expand } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let exact = |s: &str| {
                parse_real(s)?
                    .exact()
                    .ok_or_else(|| usage("the question-mark function takes a rational or a quadratic irrational"))
            };
            if let Some(s) = eval {
                let v = question_mark(&exact(s)?)?;
                return Ok(Output::ok(format!("{}\n", v.value)));
            }
            if let Some(s) = inverse {
                return Ok(Output::ok(format!("{}\n", exact_text(&question_mark_inverse_exact(&rat(s)?)?))));
            }
            if let Some(s) = expand {
                return Ok(expansion_output(cli, &expand_fquestion(&exact(s)?)?));
            }
            Err(usage("give --eval, --inverse or --expand"))
        }
        Command::Backforth { a, b, stages, emit_g } => {
            need_format(cli, &[Format::Text])?;
            if a.len() != b.len() {
                return Err(usage("--A and --B must be given the same number of times"));
            }
            let pairs = a
                .iter()
                .zip(b)
                .map(|(a, b)| Ok((DenseOracle::parse(a)?, DenseOracle::parse(b)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let iso = back_and_forth_multi(&pairs, *stages)?;
            if let Some(p) = emit_g {
                let g = extend_to_pwl(&iso)?;
                fs::write(p, write_pwl(&g)).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            }
            Ok(Output::ok(partial_iso_tsv(&iso)))
        }
        Command::Encode { poly } => {
            need_format(cli, &[Format::Text])?;
            let code = encode_minpoly(&parse_coeff_list(poly)?)?;
            let s: Vec<String> = code.iter().map(ToString::to_string).collect();
            Ok(Output::ok(format!("{}\n", s.join(","))))
        }
        Command::Decode { q } => {
            need_format(cli, &[Format::Text])?;
            let p = decode_tail(&q.parse()?)?;
            let s: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            Ok(Output::ok(format!("{}\n", s.join(" "))))
        }
        Command::VerifyDeg93 { poly } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let p = match poly {
                Some(path) => load_poly(path)?,
                None => formats::deg93(),
            };
            let r = verify_candidate(&p, &eliminate_cycle(), cli.bits.max(128));
            let text = match cli.format {
                Format::Json => format!(
                    "{}\n",
                    json!({
                        "candidate_degree": r.candidate_degree,
                        "eliminant_degree": r.eliminant_degree,
                        "divides": r.divides,
                        "cofactor_degree": r.cofactor_degree,
                        "real_roots": r.real_roots,
                        "root_index": r.root_index(),
                        "root": dec(&r.root),
                        "candidate_vanishes": r.candidate_vanishes,
                        "eliminant_vanishes": r.eliminant_vanishes,
                    })
                ),
                _ => format!(
                    "candidate degree {}\neliminant degree {}\ndivides {}\ncofactor degree {}\nreal roots {}\nroot index {}\nroot {}\ncandidate vanishes {}\neliminant vanishes {}\n",
                    r.candidate_degree,
                    r.eliminant_degree,
                    r.divides,
                    r.cofactor_degree.map_or("-".into(), |d| d.to_string()),
                    r.real_roots,
                    r.root_index().map_or("-".into(), |i| i.to_string()),
                    dec(&r.root),
                    r.candidate_vanishes,
                    r.eliminant_vanishes,
                ),
            };
            Ok(Output::ok(text))
        }
        Command::Repro { claim, seed } => {
            need_format(cli, &[Format::Text, Format::Json])?;
            let ids: Vec<&str> = if claim == "all" {
                CLAIMS.iter().map(|c| c.id).collect()
            } else if repro::claim(claim).is_some() {
                vec![claim.as_str()]
            } else {
                let known: Vec<&str> = CLAIMS.iter().map(|c| c.id).collect();
                return Err(usage(format!("unknown claim {claim:?}; known: all, {}", known.join(", "))));
            };
            let mut text = String::new();
            let mut code = EXIT_OK;
            for id in ids {
                let r = repro::run(id, *seed)?;
                if !r.pass {
                    code = EXIT_REPRO_FAIL;
                }
                match cli.format {
                    Format::Json => {
                        text.push_str(&json!({"id": r.id, "criterion": r.criterion, "verdict": r.verdict(), "checks": r.lines}).to_string());
                        text.push('\n');
                    }
                    _ => text.push_str(&r.render()),
                }
            }
            Ok(Output { text, code })
        }
    }
}
