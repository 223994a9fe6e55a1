//! Text formats: polynomial files, PWL files, `polyroot` expressions and the
//! JSON/TSV renderings used by the command line.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use fexpand_core::algver::ZPoly;
use fexpand_core::backforth::PartialIso;
use fexpand_core::chorus::PWLHomeo;
use fexpand_core::engine::{ExpansionResult, Outcome};
use fexpand_core::realkernel::{parse_expr, parse_rat, Exact, Rat, RealExpr};
use fexpand_core::{Error, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// The degree-93 polynomial shipped with the crate.
pub const DEG93: &str = include_str!("../data/deg93.txt");

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Invalid(format!("{}: {e}", path.display()))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// One integer coefficient per line, constant term first; `#` starts a comment.
pub fn parse_poly(text: &str) -> Result<ZPoly> {
    let coeffs = content_lines(text)
        .map(|(n, l)| BigInt::from_str(l).map_err(|_| Error::Syntax(format!("line {n}: not an integer: {l:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(Error::Invalid("polynomial file has no coefficients".into()));
    }
    Ok(ZPoly::new(coeffs))
}

pub fn write_poly(p: &ZPoly) -> String {
    p.coeffs().iter().map(|c| format!("{c}\n")).collect()
}

pub fn load_poly(path: &Path) -> Result<ZPoly> {
    parse_poly(&fs::read_to_string(path).map_err(|e| io_err(path, e))?)
}

pub fn deg93() -> ZPoly {
    parse_poly(DEG93).expect("bundled polynomial parses")
}

/// Whitespace-separated integers, e.g. `" -1 2 1"`.
pub fn parse_coeff_list(text: &str) -> Result<Vec<BigInt>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| BigInt::from_str(s).map_err(|_| Error::Syntax(format!("not an integer: {s:?}"))))
        .collect()
}

/// One `u v` pair of rationals per line, ascending.
pub fn parse_pwl(text: &str) -> Result<PWLHomeo> {
    let nodes = content_lines(text)
        .map(|(n, l)| {
            let mut it = l.split_whitespace();
            match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => Ok((parse_rat(u)?, parse_rat(v)?)),
                _ => Err(Error::Syntax(format!("line {n}: expected `u v`, got {l:?}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PWLHomeo::new(nodes)
}

pub fn write_pwl(g: &PWLHomeo) -> String {
    g.nodes().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

pub fn load_pwl(path: &Path) -> Result<PWLHomeo> {
    parse_pwl(&fs::read_to_string(path).map_err(|e| io_err(path, e))?)
}

/// `parse_expr` plus `polyroot(file,lo,hi)`, which reads a polynomial file.
pub fn parse_real(text: &str) -> Result<RealExpr> {
    let t = text.trim();
    let Some(inner) = t.strip_prefix("polyroot(").and_then(|s| s.strip_suffix(')')) else {
        return parse_expr(t);
    };
    let args: Vec<&str> = inner.rsplitn(3, ',').map(str::trim).collect();
    let [hi, lo, file] = args[..] else {
        return Err(Error::Syntax(format!("polyroot expects (file,lo,hi): {t}")));
    };
    let poly = load_poly(Path::new(file))?;
    RealExpr::poly_root(poly, parse_rat(lo)?, parse_rat(hi)?)
}

pub fn outcome_name(o: &Outcome) -> String {
    match o {
        Outcome::Terminated => "Terminated".into(),
        Outcome::ReachedMaxTerms => "ReachedMaxTerms".into(),
        Outcome::UndecidedInteger { step, bits } => format!("UndecidedInteger(step {step}, {bits} bits)"),
    }
}

/// `{quotients, outcome, steps: [{index, precision_bits, exact}]}`.
pub fn expansion_json(e: &ExpansionResult) -> Value {
    let steps: Vec<Value> = e
        .steps
        .iter()
        .map(|s| json!({"index": s.index, "precision_bits": s.precision_bits, "exact": s.exact}))
        .collect();
    json!({
        "quotients": e.quotients.to_string(),
        "outcome": outcome_name(&e.outcome),
        "steps": steps,
    })
}

pub fn exact_text(x: &Exact) -> String {
    match x {
        Exact::Rational(r) => r.to_string(),
        Exact::Quadratic(q) => q.to_string(),
    }
}

/// `stage\ta\tb` rows in stage order, with a header.
pub fn partial_iso_tsv(iso: &PartialIso) -> String {
    let mut out = String::from("stage\ta\tb\n");
    for m in &iso.matches {
        out.push_str(&format!("{}\t{}\t{}\n", m.stage, exact_text(&m.a), exact_text(&m.b)));
    }
    out
}

/// Comma-separated rationals, e.g. `4.5,5,8`.
pub fn parse_rat_list(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(parse_rat).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_file() {
        let p = parse_poly("# x^2 - 2\n-2\n0 # linear\n\n1\n").unwrap();
        assert_eq!(p, ZPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(parse_poly(&write_poly(&p)).unwrap(), p);
        assert!(parse_poly("1\nx\n").is_err());
        assert_eq!(deg93().degree(), 93);
    }

    #[test]
    fn pwl_file() {
        let g = parse_pwl("1/2 1/3\n3/4 4/5\n").unwrap();
        assert_eq!(g, PWLHomeo::parse_inline("1/2:1/3,3/4:4/5").unwrap());
        assert_eq!(parse_pwl(&write_pwl(&g)).unwrap(), g);
        assert!(parse_pwl("1/2 1/3 1\n").is_err());
        assert!(parse_pwl("3/4 1/3\n1/2 1/2\n").is_err());
    }

    #[test]
    fn coefficient_lists() {
        let c = parse_coeff_list(" -1 2 1").unwrap();
        assert_eq!(c, vec![BigInt::from(-1), BigInt::from(2), BigInt::from(1)]);
        assert_eq!(parse_coeff_list("-1,2,1").unwrap(), c);
    }

    #[test]
    fn polyroot_expression() {
        let dir = std::env::temp_dir().join(format!("fexpand-formats-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let file = dir.join("two.txt");
        fs::write(&file, "-2\n0\n1\n").unwrap();
        let e = parse_real(&format!("polyroot({},1,2)", file.display())).unwrap();
        let v = fexpand_core::realkernel::eval_expr(&e, 64);
        assert!((v.mid_f64() - 2f64.sqrt()).abs() < 1e-15);
        assert!(parse_real(&format!("polyroot({},-2,2)", file.display())).is_err());
        fs::remove_dir_all(&dir).unwrap();
    }
}
