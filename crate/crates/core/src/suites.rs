//! Theorem-checking suites over bounded enumerations.
//!
//! Each suite returns a [`SuiteReport`]; `pass` means no individual check
//! failed. Group-wide suites run over [`groups_up_to_dim`]; per-simple suites
//! scan classical degrees up to the configured degree bound.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::chains::{min_chain, verify_chain};
use crate::enumerate::groups_up_to_dim;
use crate::error::{Error, Result};
use crate::formulas::{
    check_dimlen, check_lcd, check_sqrt_lower_bound, complex_depth_table, depth, depth_refined,
    depth_simple, elem_inequalities, f_classical, is_cd_one, is_length_eq_depth, lendim_formula,
    length, length_complex_semisimple, length_simple, smalll_deficit, BoundsOrExact, CheckReport,
};
use crate::group::{Family, GroupType, SimpleType};
use crate::oracle::Oracle;
use crate::subgroups::{is_curated, is_curated_group, min_irrep_dim};
use crate::surd::Surd;

pub const SUITES: [&str; 12] = [
    "general", "dimlen", "sqrt", "smalll", "liedep", "depbds", "ld", "cd", "lcd", "complex",
    "tables", "lendim",
];

/// Failures kept verbatim in a report; the count covers all of them.
const MAX_LISTED_FAILURES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Bound on total dimension for group enumerations.
    pub max_dim: u64,
    /// Bound on classical degrees; also the scan range of per-simple checks.
    pub max_degree: Option<u32>,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig { max_dim: 60, max_degree: None }
    }
}

impl SuiteConfig {
    fn groups(&self) -> Vec<GroupType> {
        groups_up_to_dim(self.max_dim, self.max_degree)
    }

    fn simples(&self, default_degree: u32) -> Vec<SimpleType> {
        SimpleType::all_up_to_degree(self.max_degree.unwrap_or(default_degree))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<CheckReport>,
    pub pass: bool,
}

impl SuiteReport {
    fn from_checks(suite: &str, checks: Vec<CheckReport>) -> SuiteReport {
        let checked = checks.len();
        let failing: Vec<CheckReport> = checks.into_iter().filter(|c| !c.pass).collect();
        let failed = failing.len();
        SuiteReport {
            suite: suite.to_owned(),
            checked,
            failed,
            failures: failing.into_iter().take(MAX_LISTED_FAILURES).collect(),
            pass: failed == 0,
        }
    }
}

fn report(claim: &str, tag: &str, g: impl ToString, lhs: impl ToString, rhs: impl ToString, pass: bool) -> CheckReport {
    CheckReport {
        claim: claim.to_owned(),
        paper_ref: tag.to_owned(),
        inputs: json!({ "group": g.to_string() }),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        pass,
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig, oracle: &Oracle) -> Result<SuiteReport> {
    let checks = match name {
        "general" => general(cfg),
        "dimlen" => per_group(cfg, check_dimlen),
        "sqrt" => sqrt(cfg),
        "smalll" => smalll()?,
        "liedep" => liedep(cfg, oracle),
        "depbds" => depbds(cfg, oracle)?,
        "ld" => ld(cfg, oracle)?,
        "cd" => cd(cfg, oracle)?,
        "lcd" => lcd(cfg, oracle)?,
        "complex" => complex(cfg)?,
        "tables" => tables(cfg)?,
        "lendim" => lendim(cfg)?,
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport::from_checks(name, checks))
}

fn per_group(cfg: &SuiteConfig, f: fn(&GroupType) -> Vec<CheckReport>) -> Vec<CheckReport> {
    cfg.groups().par_iter().flat_map_iter(f).collect()
}

fn general(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut out: Vec<CheckReport> = cfg
        .groups()
        .par_iter()
        .map(|g| {
            let z = g.torus_rank() as u64;
            let r = g.derived().rank();
            let t = g.factors().len() as u64;
            let l = length(g);
            report("z + 2r <= l(G) <= z + 3r - t", "general", g, l, format!("[{}, {}]", z + 2 * r, z + 3 * r - t),
                z + 2 * r <= l && l <= z + 3 * r - t)
        })
        .collect();
    for s in cfg.simples(60) {
        let (l, r) = (length_simple(s), s.rank());
        out.push(report("2r <= l(S) < 3r", "general", s, l, format!("[{}, {})", 2 * r, 3 * r), 2 * r <= l && l < 3 * r));
    }
    out
}

fn sqrt(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut out = per_group(cfg, check_sqrt_lower_bound);
    for s in cfg.simples(60) {
        out.extend(check_sqrt_lower_bound(&GroupType::simple(s)));
    }
    let int = |n: i64| num_rational::BigRational::from_integer(n.into());
    for x in 1..=120 {
        for y in 1..=120 {
            let e = elem_inequalities(&int(x), &int(y));
            let holds = [e.one_plus_beta, e.sqrt_sum_one, e.sqrt_sum_alpha].iter().all(|c| c.unwrap_or(true));
            out.push(CheckReport {
                claim: "elementary square-root inequalities".into(),
                paper_ref: "elem".into(),
                inputs: json!({ "x": x, "y": y }),
                lhs: format!("{e:?}"),
                rhs: "all applicable clauses hold".into(),
                pass: holds,
            });
        }
    }
    out
}

/// Every tuple `(n_1, ..., n_k)` with `2 ≤ k ≤ 4` and `7 ≤ n_i ≤ n_1 ≤ 20`.
pub fn smalll_tuples() -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for k in 2..=4usize {
        for n1 in 7..=20u32 {
            let width = (n1 - 6) as usize;
            let count = width.pow(k as u32 - 1);
            for code in 0..count {
                let mut t = vec![n1];
                let mut c = code;
                for _ in 1..k {
                    t.push(7 + (c % width) as u32);
                    c /= width;
                }
                out.push(t);
            }
        }
    }
    out
}

fn smalll() -> Result<Vec<CheckReport>> {
    smalll_tuples()
        .par_iter()
        .map(|t| {
            let d = smalll_deficit(t)?;
            let excluded = t[0] == 7 && t.len() == 2;
            let nonneg = d >= Surd::zero();
            Ok(CheckReport {
                claim: "deficit >= 0 exactly when (n_1, k) != (7, 2)".into(),
                paper_ref: "sum".into(),
                inputs: json!({ "n": t }),
                lhs: format!("{d} (~{})", d.decimal(4)),
                rhs: if excluded { "< 0" } else { ">= 0" }.into(),
                pass: nonneg != excluded,
            })
        })
        .collect()
}

fn liedep(cfg: &SuiteConfig, oracle: &Oracle) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for s in cfg.simples(60) {
        let d = depth_simple(s);
        if is_curated(s) {
            let o = oracle.depth(&GroupType::simple(s));
            out.push(report("depth(S) equals oracle", "liedep", s, d,
                o.as_ref().map_or_else(|e| e.to_string(), |v| v.to_string()), o.ok() == Some(d)));
        }
        let chain = min_chain(&GroupType::simple(s));
        let (len, ok) = match &chain {
            Some(c) => (c.length().to_string(), c.length() as u64 == d && verify_chain(c).is_acceptable()),
            None => ("unavailable".into(), false),
        };
        out.push(report("min chain realizes depth(S)", "liedep", s, len, d, ok));
    }
    for (s, dc) in complex_depth_table() {
        out.push(report("depth(S) = depth(S(C)) - 1", "liedep", s, depth_simple(s), dc - 1, depth_simple(s) + 1 == dc));
    }
    out
}

fn depbds(cfg: &SuiteConfig, oracle: &Oracle) -> Result<Vec<CheckReport>> {
    let curated: Vec<GroupType> = cfg.groups().into_iter().filter(is_curated_group).collect();
    curated
        .par_iter()
        .map(|g| {
            let d = oracle.depth(g)?;
            let f = depth(g);
            Ok(report("oracle depth lies in the formula interval", "depbds", g, d, f, f.contains(d)))
        })
        .collect()
}

/// Exact depth when the formulas or the oracle decide it, else an interval.
pub fn classify(g: &GroupType, oracle: &Oracle) -> Result<(u64, BoundsOrExact)> {
    Ok((length(g), depth_refined(g, oracle)?))
}

/// `Some(v == target)` when decided by the interval, `None` if `target` lies
/// strictly inside it.
fn decide(b: &BoundsOrExact, target: u64) -> Option<bool> {
    match b.as_exact() {
        Some(v) => Some(v == target),
        None if !b.contains(target) => Some(false),
        None => None,
    }
}

fn ld(cfg: &SuiteConfig, oracle: &Oracle) -> Result<Vec<CheckReport>> {
    cfg.groups()
        .par_iter()
        .map(|g| {
            let (l, d) = classify(g, oracle)?;
            let claimed = is_length_eq_depth(g);
            let found = decide(&d, l);
            Ok(report("l(G) = depth(G) iff torus or G' = SU(2)", "ld", g,
                format!("l={l}, depth={d}"), format!("predicted {claimed}"), found == Some(claimed)))
        })
        .collect()
}

fn cd(cfg: &SuiteConfig, oracle: &Oracle) -> Result<Vec<CheckReport>> {
    cfg.groups()
        .par_iter()
        .map(|g| {
            let (l, d) = classify(g, oracle)?;
            let cd = d.subtract_from(l);
            let claimed = is_cd_one(g);
            let found = decide(&cd, 1);
            Ok(report("cd(G) = 1 iff G' in {SU(3), SU(2)^2, SU(3) x SU(2)}", "cd", g,
                format!("cd={cd}"), format!("predicted {claimed}"), found == Some(claimed)))
        })
        .collect()
}

fn lcd(cfg: &SuiteConfig, oracle: &Oracle) -> Result<Vec<CheckReport>> {
    let mut out: Vec<CheckReport> = cfg
        .groups()
        .par_iter()
        .map(|g| {
            let (l, d) = classify(g, oracle)?;
            Ok(check_lcd(g, &d.subtract_from(l)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let su2 = SimpleType::su(2).expect("canonical");
    for k in 1..=5 {
        let g = GroupType::power(su2, k);
        let cd = depth(&g).subtract_from(length(&g)).lower();
        out.push(report("l(SU(2)^k) = 2 cd + 2", "lcd", &g, length(&g), 2 * cd + 2, length(&g) == 2 * cd + 2));
    }
    Ok(out)
}

fn complex(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    cfg.simples(40)
        .into_iter()
        .map(|s| {
            let g = GroupType::simple(s);
            let (l, lc) = (length(&g), length_complex_semisimple(&g)?);
            Ok(report("l(S) < l(S(C))", "corr1", s, l, lc, l < lc))
        })
        .collect()
}

/// `m = min f_G(N)` over canonical classical `G = Cl_N`.
pub fn min_classical_length(n: u32) -> Option<u64> {
    [Family::SU, Family::Sp, Family::SO]
        .into_iter()
        .filter_map(|f| f_classical(f, n).ok())
        .min()
}

fn tables(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for h in SimpleType::all_up_to_degree(cfg.max_degree.unwrap_or(30).min(30)) {
        let Some(k) = h.degree() else { continue };
        let n = min_irrep_dim(h);
        let fh = f_classical(h.family(), k)?;
        let n32 = u32::try_from(n).map_err(|_| Error::InvalidArgument(format!("N too large for {h}")))?;
        for f in [Family::SU, Family::Sp, Family::SO] {
            if let Ok(fg) = f_classical(f, n32) {
                out.push(report("f_G(N(H,k)) > f_H(k)", "fgbd", format!("{h}, G = {f}({n})"), fg, fh, n > k as u64 && fg > fh));
            }
        }
    }
    let expected = [(SimpleType::G2, 7), (SimpleType::F4, 31), (SimpleType::E6, 32), (SimpleType::E7, 69), (SimpleType::E8, 309)];
    for (h, m_row) in expected {
        let n = min_irrep_dim(h) as u32;
        let m = min_classical_length(n);
        out.push(report("m = min f_G(N(H))", "exbd", h, m.map_or("none".into(), |v| v.to_string()), m_row, m == Some(m_row)));
        out.push(report("l(H) < m", "exbd", h, length_simple(h), m_row, length_simple(h) < m_row));
    }
    Ok(out)
}

/// `l(S)/√dim S` limits for SU, Sp, SO.
pub fn length_limit(family: Family) -> f64 {
    match family {
        Family::SU => 2.0,
        Family::Sp => 3.0 / 2f64.sqrt(),
        _ => 5.0 / 8f64.sqrt(),
    }
}

fn lendim(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for s in cfg.simples(60).into_iter().filter(|s| s.is_classical()) {
        let v = lendim_formula(s)?;
        let l = length_simple(s);
        out.push(report("closed form in dim S equals l(S)", "lendim", s, &v, l, v == Surd::integer(l as i64)));
    }
    for f in [Family::SU, Family::Sp, Family::SO] {
        let s = SimpleType::new(f, 400)?;
        let ratio = length_simple(s) as f64 / (s.dim() as f64).sqrt();
        let lim = length_limit(f);
        out.push(report("|l(S)/sqrt(dim S) - limit| < 0.05 at degree 400", "limit", s,
            format!("{ratio:.4}"), format!("{lim:.4}"), (ratio - lim).abs() < 0.05));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { max_dim: 24, max_degree: Some(8) }
    }

    #[test]
    fn fast_suites_pass_on_a_small_range() {
        let o = Oracle::new();
        for name in ["general", "dimlen", "sqrt", "ld", "complex", "tables", "lendim", "depbds", "liedep"] {
            let r = run_suite(name, &small(), &o).unwrap();
            assert!(r.pass, "{name}: {:?}", r.failures);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn smalll_tuple_count() {
        let t = smalll_tuples();
        let expected: usize = (2..=4u32).map(|k| (1..=14usize).map(|w| w.pow(k - 1)).sum::<usize>()).sum();
        assert_eq!(t.len(), expected);
        assert!(t.iter().all(|t| t.iter().all(|&n| (7..=t[0]).contains(&n))));
    }

    #[test]
    fn min_classical_length_rows() {
        assert_eq!(min_classical_length(7), Some(7));
        assert_eq!(min_classical_length(26), Some(31));
        assert_eq!(min_classical_length(248), Some(309));
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", &small(), &Oracle::new()).is_err());
    }
}
