//! Text, LaTeX and JSON renderings of zeta functions and reports.
//!
//! Text uses `q` and `t`; LaTeX writes monomials as `q^{a-bs}`, collects a
//! leading run `(1-q^{-s})(1-q^{1-s})..(1-q^{d-1-s})` of length at least
//! three into a product and then lists the remaining factors by decreasing
//! `t`-degree; without such a run factors keep increasing `t`-degree. All
//! output is deterministic.

use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::combinat::lie_dims;
use crate::error::{Error, Result};
use crate::exactalg::{fmt_ratio, DenomFactor, Exp, LaurentPoly, RationalFunction, SRational};
use crate::zetas::{analytic_invariants, numerical_data, reduced_ideal_zeta, ZetaReport};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

fn latex_q_power(e: Exp) -> String {
    let (a, b) = (e.q, e.t);
    let exponent = match (a, b) {
        (a, 0) => a.to_string(),
        (0, b) => format!("{}s", signed_coeff(b)),
        (a, b) if b > 0 => format!("{a}-{}s", unit_coeff(b)),
        (a, b) => format!("{a}+{}s", unit_coeff(-b)),
    };
    match exponent.as_str() {
        "0" => "1".to_string(),
        "1" => "q".to_string(),
        _ => format!("q^{{{exponent}}}"),
    }
}

/// `-3` for `b = 3` (the `s`-coefficient of `q^{-3s}`).
fn signed_coeff(b: i64) -> String {
    if b > 0 {
        format!("-{}", unit_coeff(b))
    } else {
        unit_coeff(-b)
    }
}

fn unit_coeff(b: i64) -> String {
    if b == 1 {
        String::new()
    } else {
        b.to_string()
    }
}

fn fmt_terms<F>(poly: &LaurentPoly, sep: &str, mut mono: F) -> String
where
    F: FnMut(Exp) -> String,
{
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in poly.terms().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mag = c.abs();
        let m = mono(e);
        if m == "1" {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push_str(sep);
            }
            out.push_str(&m);
        }
    }
    out
}

fn latex_power(base: String, mult: u32) -> String {
    if mult == 1 {
        base
    } else {
        format!("{base}^{{{mult}}}")
    }
}

/// Splits off the longest run `(1 - q^i t)`, `i = 0, 1, ..`, one copy each.
fn abelian_run(den: &[DenomFactor]) -> (usize, Vec<DenomFactor>) {
    let mut rest: Vec<DenomFactor> = den.to_vec();
    let mut run = 0usize;
    while let Some(pos) = rest.iter().position(|f| f.b == 1 && f.a == run as i64) {
        if rest[pos].mult > 1 {
            rest[pos].mult -= 1;
        } else {
            rest.remove(pos);
        }
        run += 1;
    }
    if run < 3 {
        return (0, den.to_vec());
    }
    (run, rest)
}

/// `q^{a-bs}` form with the abelian run collected into a product.
pub fn latex_rational_function(rf: &RationalFunction) -> String {
    let num = fmt_terms(rf.num(), "", latex_q_power);
    let den = rf.den();
    if den.is_empty() {
        return num;
    }
    let (run, mut rest) = abelian_run(&den);
    let mut bottom = String::new();
    if run > 0 {
        write!(bottom, "\\left(\\prod_{{i=0}}^{{{}}}(1-q^{{i-s}})\\right)", run - 1).unwrap();
    }
    if run > 0 {
        rest.sort_by_key(|f| std::cmp::Reverse((f.b, f.a)));
    }
    for f in &rest {
        let base = format!("(1-{})", latex_q_power(Exp::new(f.a, f.b as i64)));
        bottom.push_str(&latex_power(base, f.mult));
    }
    format!("\\frac{{{num}}}{{{bottom}}}")
}

fn y_power(k: i64, latex: bool) -> String {
    match (k, latex) {
        (0, _) => "1".to_string(),
        (1, _) => "Y".to_string(),
        (k, true) => format!("Y^{{{k}}}"),
        (k, false) => format!("Y^{k}"),
    }
}

/// A `q`-free rational function with `t` read as `Y`.
pub fn y_rational_function(rf: &RationalFunction, latex: bool) -> String {
    let num = fmt_terms(rf.num(), if latex { "" } else { " " }, |e| y_power(e.t, latex));
    let den = rf.den();
    if den.is_empty() {
        return num;
    }
    let mut bottom = String::new();
    for f in &den {
        let base = format!("(1-{})", y_power(f.b as i64, latex));
        if latex {
            bottom.push_str(&latex_power(base, f.mult));
        } else if f.mult > 1 {
            write!(bottom, "{base}^{}", f.mult).unwrap();
        } else {
            bottom.push_str(&base);
        }
    }
    if latex {
        format!("\\frac{{{num}}}{{{bottom}}}")
    } else {
        let top = if rf.num().len() > 1 { format!("({num})") } else { num };
        let wrap = den.len() > 1 || den[0].mult > 1;
        if wrap {
            format!("{top}/({bottom})")
        } else {
            format!("{top}/{bottom}")
        }
    }
}

fn latex_linear(m: i64, c: i64) -> String {
    let s = match m {
        1 => "s".to_string(),
        -1 => "-s".to_string(),
        m => format!("{m}s"),
    };
    match c {
        0 => s,
        c if c > 0 => format!("{s}-{c}"),
        c => format!("{s}+{}", -c),
    }
}

fn latex_factor(m: i64, c: i64) -> String {
    if m == 1 && c == 0 {
        "s".to_string()
    } else {
        format!("({})", latex_linear(m, c))
    }
}

/// Products of linear forms in `s`; a run `s, s-1, .., s-(k-1)` with
/// `k >= 3` is collected into a product.
pub fn latex_srational(r: &SRational) -> String {
    let n = r.normalized();
    let (cn, cd) = (n.coeff.numer().clone(), n.coeff.denom().clone());
    let mut top = String::new();
    if cn.is_negative() {
        top.push('-');
    }
    if n.num.is_empty() || !cn.abs().is_one() {
        top.push_str(&cn.abs().to_string());
    }
    for &(m, c) in &n.num {
        top.push_str(&latex_factor(m, c));
    }
    let mut den = n.den.clone();
    let mut run = 0i64;
    while let Some(pos) = den.iter().position(|&f| f == (1, run)) {
        den.remove(pos);
        run += 1;
    }
    if run < 3 {
        den = n.den.clone();
        run = 0;
    }
    let mut bottom = String::new();
    if cd != BigInt::one() {
        bottom.push_str(&cd.to_string());
    }
    if run > 0 {
        write!(bottom, "\\left(\\prod_{{i=0}}^{{{}}}(s-i)\\right)", run - 1).unwrap();
    }
    for &(m, c) in &den {
        bottom.push_str(&latex_factor(m, c));
    }
    if bottom.is_empty() {
        top
    } else {
        format!("\\frac{{{top}}}{{{bottom}}}")
    }
}

/// The numbers reported by `invariants`, in display order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub e: u64,
    pub f: u64,
    pub d: u64,
    pub h: u64,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub alpha: u64,
    pub beta: String,
    pub mu: String,
}

pub fn invariants(m: u32, n: u32) -> Invariants {
    let dims = lie_dims(m, n);
    let data = numerical_data(m, n);
    let (alpha, beta) = analytic_invariants(m, n);
    Invariants {
        e: dims.e,
        f: dims.f,
        d: dims.d,
        h: dims.h,
        a: data.a,
        b: data.b,
        alpha,
        beta: fmt_ratio(&beta),
        mu: fmt_ratio(&reduced_ideal_zeta(m, n).mu),
    }
}

pub fn render_invariants(inv: &Invariants, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(inv).expect("plain data"),
        Format::Text => format!(
            "e={} f={} d={} h={}\na=({})\nb=({})\nalpha={}\nbeta={}\nmu={}",
            inv.e,
            inv.f,
            inv.d,
            inv.h,
            inv.a.iter().join(","),
            inv.b.iter().join(","),
            inv.alpha,
            text_ratio(&inv.beta),
            text_ratio(&inv.mu)
        ),
        Format::Latex => format!(
            "e={}, f={}, d={}, h={}\\\\\n(a_i)=({}), (b_i)=({})\\\\\n\\alpha={}, \\beta={}, \\mu={}",
            inv.e,
            inv.f,
            inv.d,
            inv.h,
            inv.a.iter().join(","),
            inv.b.iter().join(","),
            inv.alpha,
            latex_ratio(&inv.beta),
            latex_ratio(&inv.mu)
        ),
    }
}

/// `fmt_ratio` output with a trailing `/1` dropped.
pub fn text_ratio(s: &str) -> &str {
    s.strip_suffix("/1").unwrap_or(s)
}

fn latex_ratio(s: &str) -> String {
    match s.split_once('/') {
        Some((n, "1")) => n.to_string(),
        Some((n, d)) => format!("\\frac{{{n}}}{{{d}}}"),
        None => s.to_string(),
    }
}

/// A rational function in `q, t` in the requested format.
pub fn render_rational_function(rf: &RationalFunction, format: Format) -> String {
    match format {
        Format::Text => rf.to_string(),
        Format::Latex => latex_rational_function(rf),
        Format::Json => serde_json::to_string(rf).expect("plain data"),
    }
}

pub fn render_srational(r: &SRational, format: Format) -> String {
    match format {
        Format::Text => r.to_string(),
        Format::Latex => latex_srational(r),
        Format::Json => serde_json::to_string(&SJson::from(r)).expect("plain data"),
    }
}

#[derive(Serialize)]
struct SJson {
    coeff: String,
    num: Vec<(i64, i64)>,
    den: Vec<(i64, i64)>,
}

impl From<&SRational> for SJson {
    fn from(r: &SRational) -> Self {
        SJson {
            coeff: fmt_ratio(&r.coeff),
            num: r.num.clone(),
            den: r.den.clone(),
        }
    }
}

/// The full dossier for one pair.
pub fn render_report(report: &ZetaReport, format: Format) -> String {
    let (m, n) = (report.dims.m, report.dims.n);
    let dims = &report.dims;
    match format {
        Format::Json => serde_json::to_string(report).expect("plain data"),
        Format::Text => [
            format!("L({m},{n}): e={} f={} d={} h={}", dims.e, dims.f, dims.d, dims.h),
            format!("a=({})", report.data.a.iter().join(",")),
            format!("b=({})", report.data.b.iter().join(",")),
            format!("ideal: {}", report.ideal),
            format!("graded: {}", report.graded),
            format!("rep: {}", report.rep_local),
            format!("rep topological: {}", report.rep_topological),
            format!("topological: {}", report.topological),
            format!("reduced: {}", y_rational_function(&report.reduced, false)),
            format!("mu={}", text_ratio(&fmt_ratio(&report.mu))),
            format!("alpha={}", report.alpha),
            format!("beta={}", text_ratio(&fmt_ratio(&report.beta))),
        ]
        .join("\n"),
        Format::Latex => [
            format!(
                "\\zeta^{{\\triangleleft}}_{{L_{{{m},{n}}}}}(s) = {}",
                latex_rational_function(&report.ideal)
            ),
            format!(
                "\\zeta^{{\\triangleleft_{{\\mathrm{{gr}}}}}}_{{L_{{{m},{n}}}}}(s) = {}",
                latex_rational_function(&report.graded)
            ),
            format!(
                "\\zeta^{{\\mathrm{{irr}}}}_{{L_{{{m},{n}}}}}(s) = {}",
                latex_rational_function(&report.rep_local)
            ),
            format!(
                "\\zeta^{{\\mathrm{{irr}}}}_{{\\mathrm{{top}}}}(s) = {}",
                latex_srational(&report.rep_topological)
            ),
            format!(
                "\\zeta_{{\\mathrm{{top}}}}(s) = {}",
                latex_srational(&report.topological)
            ),
            format!(
                "\\zeta_{{\\mathrm{{red}}}}(Y) = {}",
                y_rational_function(&report.reduced, true)
            ),
            format!("\\mu = {}", latex_ratio(&fmt_ratio(&report.mu))),
            format!(
                "\\alpha = {}, \\beta = {}",
                report.alpha,
                latex_ratio(&fmt_ratio(&report.beta))
            ),
        ]
        .join("\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zetas::{ideal_zeta, rep_zeta, topological_ideal_zeta, zeta_report};

    #[test]
    fn q_powers() {
        assert_eq!(latex_q_power(Exp::new(0, 1)), "q^{-s}");
        assert_eq!(latex_q_power(Exp::new(1, 1)), "q^{1-s}");
        assert_eq!(latex_q_power(Exp::new(27, 12)), "q^{27-12s}");
        assert_eq!(latex_q_power(Exp::new(0, 3)), "q^{-3s}");
        assert_eq!(latex_q_power(Exp::new(2, 0)), "q^{2}");
        assert_eq!(latex_q_power(Exp::new(1, 0)), "q");
        assert_eq!(latex_q_power(Exp::new(0, 0)), "1");
        assert_eq!(latex_q_power(Exp::new(-3, 7)), "q^{-3-7s}");
        assert_eq!(latex_q_power(Exp::new(2, -1)), "q^{2+s}");
    }

    #[test]
    fn example_display() {
        assert_eq!(
            latex_rational_function(&ideal_zeta(2, 3)),
            "\\frac{1+q^{9-7s}+q^{10-7s}+q^{18-10s}+q^{19-10s}+q^{28-17s}}\
             {\\left(\\prod_{i=0}^{8}(1-q^{i-s})\\right)(1-q^{27-12s})(1-q^{20-10s})(1-q^{11-7s})}"
        );
    }

    #[test]
    fn short_runs_are_expanded() {
        assert_eq!(
            latex_rational_function(&ideal_zeta(1, 1)),
            "\\frac{1}{(1-q^{-s})(1-q^{1-s})(1-q^{2-3s})}"
        );
        assert_eq!(
            latex_rational_function(&rep_zeta(3, 1).local),
            "\\frac{1-q^{-s}}{(1-q^{1-s})}"
        );
    }

    #[test]
    fn text_forms() {
        assert_eq!(ideal_zeta(1, 1).to_string(), "1/((1-t)(1-q t)(1-q^2 t^3))");
        assert_eq!(rep_zeta(2, 1).local.to_string(), "(1-t)/(1-q t)");
        let red = zeta_report(2, 3).reduced;
        assert_eq!(
            y_rational_function(&red, false),
            "(1+2 Y^7+2 Y^10+Y^17)/((1-Y)^9(1-Y^7)(1-Y^10)(1-Y^12))"
        );
        assert_eq!(
            y_rational_function(&red, true),
            "\\frac{1+2Y^{7}+2Y^{10}+Y^{17}}{(1-Y)^{9}(1-Y^{7})(1-Y^{10})(1-Y^{12})}"
        );
    }

    #[test]
    fn topological_latex() {
        assert_eq!(
            latex_srational(&topological_ideal_zeta(2, 3)),
            "\\frac{1}{5\\left(\\prod_{i=0}^{8}(s-i)\\right)(4s-9)(s-2)(7s-11)}"
        );
        assert_eq!(latex_srational(&rep_zeta(1, 1).topological), "\\frac{s}{(s-1)}");
    }

    #[test]
    fn invariants_json() {
        assert_eq!(
            render_invariants(&invariants(2, 3), Format::Json),
            r#"{"e":3,"f":6,"d":9,"h":12,"a":[27,20,11],"b":[12,10,7],"alpha":9,"beta":"19/10","mu":"1/140"}"#
        );
    }

    #[test]
    fn formats_parse() {
        assert_eq!("latex".parse::<Format>().unwrap(), Format::Latex);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn report_renders_deterministically() {
        let r = zeta_report(1, 2);
        for f in [Format::Text, Format::Latex, Format::Json] {
            assert_eq!(render_report(&r, f), render_report(&zeta_report(1, 2), f));
        }
    }
}
