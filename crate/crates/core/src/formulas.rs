//! Closed formulas for length, depth and chain difference, and the numeric
//! inequalities built on them.
//!
//! Every comparison involving square roots goes through [`Surd`], so boundary
//! cases such as `l(E8) = β(√248 − α)` are decided exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{Family, GroupType, SimpleType};
use crate::oracle::Oracle;
use crate::subgroups::is_curated_group;
use crate::surd::Surd;

/// `f_G(n)` for `G = Cl_n`.
pub fn f_classical(family: Family, n: u32) -> Result<u64> {
    SimpleType::new(family, n)?;
    let n = n as u64;
    Ok(match family {
        Family::SU => 2 * n - 2,
        Family::Sp => 3 * n / 2 - 1,
        Family::SO => n + n / 4 - 1,
        _ => return Err(Error::InvalidArgument(format!("{family} is not classical"))),
    })
}

pub fn length_simple(s: SimpleType) -> u64 {
    match s.family() {
        Family::G2 => 5,
        Family::F4 => 11,
        Family::E6 => 13,
        Family::E7 => 17,
        Family::E8 => 20,
        f => f_classical(f, s.degree().expect("classical")).expect("canonical"),
    }
}

/// Length: the torus rank plus the lengths of the simple factors.
pub fn length(g: &GroupType) -> u64 {
    g.torus_rank() as u64 + g.factors().iter().map(|s| length_simple(*s)).sum::<u64>()
}

/// Length of the complexification of a semisimple group: `dim B + rank`.
pub fn length_complex_semisimple(g: &GroupType) -> Result<u64> {
    if g.torus_rank() != 0 {
        return Err(Error::InvalidArgument(format!("{g} has a central torus")));
    }
    let d = g.dims();
    Ok((d.dim + d.rank) / 2 + d.rank)
}

/// Depth of a simple group. Every canonical simple type falls in exactly one arm.
pub fn depth_simple(s: SimpleType) -> u64 {
    match (s.family(), s.degree()) {
        (Family::SU, Some(2)) => 2,
        (Family::SU, Some(3)) => 3,
        (Family::SU, Some(7)) => 5,
        (Family::SU, Some(_)) => 4,
        (Family::Sp, Some(_)) => 3,
        (Family::SO, Some(7)) => 4,
        (Family::SO, Some(n)) if n % 2 == 0 => 4,
        (Family::SO, Some(_)) => 3,
        (Family::E6, _) => 4,
        (Family::G2 | Family::F4 | Family::E7 | Family::E8, _) => 3,
        _ => unreachable!("classical families carry a degree"),
    }
}

/// Depths of complex simple groups of matching type, kept as data for the
/// relation `λ(S) = λ(S(C)) − 1`.
pub fn complex_depth_table() -> Vec<(SimpleType, u64)> {
    let t = |s: Result<SimpleType>, d| (s.expect("canonical"), d);
    vec![
        t(SimpleType::su(2), 3),
        t(SimpleType::su(3), 4),
        t(SimpleType::su(4), 5),
        t(SimpleType::su(5), 5),
        t(SimpleType::su(7), 6),
        t(SimpleType::su(8), 5),
        t(SimpleType::sp(4), 4),
        t(SimpleType::sp(6), 4),
        t(SimpleType::so(7), 5),
        t(SimpleType::so(8), 5),
        t(SimpleType::so(9), 4),
        t(SimpleType::so(10), 5),
        (SimpleType::G2, 4),
        (SimpleType::F4, 4),
        (SimpleType::E6, 5),
        (SimpleType::E7, 4),
        (SimpleType::E8, 4),
    ]
}

/// Either an exact value or an inclusive interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BoundsOrExact {
    Exact { exact: u64 },
    Bounds { lower: u64, upper: u64 },
}

impl BoundsOrExact {
    pub fn exact(v: u64) -> BoundsOrExact {
        BoundsOrExact::Exact { exact: v }
    }

    pub fn bounds(lower: u64, upper: u64) -> BoundsOrExact {
        assert!(lower <= upper, "empty interval [{lower}, {upper}]");
        if lower == upper {
            BoundsOrExact::exact(lower)
        } else {
            BoundsOrExact::Bounds { lower, upper }
        }
    }

    pub fn lower(&self) -> u64 {
        match *self {
            BoundsOrExact::Exact { exact } => exact,
            BoundsOrExact::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> u64 {
        match *self {
            BoundsOrExact::Exact { exact } => exact,
            BoundsOrExact::Bounds { upper, .. } => upper,
        }
    }

    pub fn as_exact(&self) -> Option<u64> {
        match *self {
            BoundsOrExact::Exact { exact } => Some(exact),
            BoundsOrExact::Bounds { .. } => None,
        }
    }

    pub fn contains(&self, v: u64) -> bool {
        self.lower() <= v && v <= self.upper()
    }

    /// `value − self` as an interval.
    pub fn subtract_from(&self, value: u64) -> BoundsOrExact {
        BoundsOrExact::bounds(value - self.upper(), value - self.lower())
    }
}

impl std::fmt::Display for BoundsOrExact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundsOrExact::Exact { exact } => write!(f, "{exact}"),
            BoundsOrExact::Bounds { lower, upper } => write!(f, "[{lower}, {upper}]"),
        }
    }
}

/// Depth from the closed formulas alone: exact for tori and for `S^k × T_z`,
/// otherwise the interval `[z + Σ(k_i + 1), z + Σ(k_i + λ(S_i) − 1)]`.
pub fn depth(g: &GroupType) -> BoundsOrExact {
    let z = g.torus_rank() as u64;
    let groups = g.multiplicities();
    match groups.as_slice() {
        [] => BoundsOrExact::exact(z),
        [(s, k)] => BoundsOrExact::exact(z + depth_simple(*s) + *k as u64 - 1),
        _ => {
            let lower = z + groups.iter().map(|(_, k)| *k as u64 + 1).sum::<u64>();
            let upper = z + groups.iter().map(|(s, k)| *k as u64 + depth_simple(*s) - 1).sum::<u64>();
            BoundsOrExact::bounds(lower, upper)
        }
    }
}

/// Depth refined by the oracle: exact whenever the formulas give it or the group
/// lies in the curated coverage set. Otherwise the curated part (with the torus)
/// is computed exactly and the remaining homogeneous components are bounded by
/// `λ(S) + k − 1` each, using `λ(A × B) ≤ λ(A) + λ(B)` and `λ(A × B) ≥ λ(A)`.
pub fn depth_refined(g: &GroupType, oracle: &Oracle) -> Result<BoundsOrExact> {
    let formula = depth(g);
    if formula.as_exact().is_some() {
        return Ok(formula);
    }
    if is_curated_group(g) {
        return oracle.depth(g).map(BoundsOrExact::exact);
    }
    let curated = GroupType::new(
        g.torus_rank(),
        g.factors().iter().copied().filter(|s| crate::subgroups::is_curated(*s)),
    );
    let curated_depth = oracle.depth(&curated)?;
    let rest: u64 = g
        .multiplicities()
        .iter()
        .filter(|(s, _)| !crate::subgroups::is_curated(*s))
        .map(|(s, k)| depth_simple(*s) + *k as u64 - 1)
        .sum();
    let upper = formula.upper().min(curated_depth + rest);
    let lower = formula.lower().max(curated_depth);
    Ok(BoundsOrExact::bounds(lower, upper))
}

/// `l(G) − λ(G)` from the closed formulas.
pub fn chain_difference(g: &GroupType) -> BoundsOrExact {
    depth(g).subtract_from(length(g))
}

pub fn chain_difference_refined(g: &GroupType, oracle: &Oracle) -> Result<BoundsOrExact> {
    Ok(depth_refined(g, oracle)?.subtract_from(length(g)))
}

/// Characterization of equal length and depth: a torus, or `G' = SU_2`.
pub fn is_length_eq_depth(g: &GroupType) -> bool {
    match g.factors() {
        [] => true,
        [s] => *s == SimpleType::su(2).expect("canonical"),
        _ => false,
    }
}

/// Stated characterization of chain difference one: `G'` is `SU_3`, `SU_2^2`
/// or `SU_3 × SU_2`.
pub fn is_cd_one(g: &GroupType) -> bool {
    let su2 = SimpleType::su(2).expect("canonical");
    let su3 = SimpleType::su(3).expect("canonical");
    let f = g.factors();
    f == [su3] || f == [su2, su2] || f == [su2, su3]
}

/// The constants `α = √248 − √128` and `β = 5·2^{−3/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constants {
    pub alpha: Surd,
    pub beta: Surd,
}

impl Constants {
    pub fn new() -> Constants {
        Constants {
            alpha: &Surd::sqrt(248) - &Surd::sqrt(128),
            beta: Surd::sqrt(2).scale(&q(5, 4)),
        }
    }

    /// `1/β = 2^{3/2}/5`.
    pub fn beta_inv(&self) -> Surd {
        Surd::sqrt(2).scale(&q(2, 5))
    }
}

impl Default for Constants {
    fn default() -> Constants {
        Constants::new()
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// One checked claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub claim: String,
    pub paper_ref: String,
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl CheckReport {
    fn new(claim: &str, tag: &str, inputs: Value, lhs: String, rhs: String, pass: bool) -> CheckReport {
        CheckReport { claim: claim.to_owned(), paper_ref: tag.to_owned(), inputs, lhs, rhs, pass }
    }
}

fn show(s: &Surd) -> String {
    match s.as_rational() {
        Some(r) => r.to_string(),
        None => format!("{s} (~{})", s.decimal(4)),
    }
}

/// `dim G − l(G) ≤ dim G' ≤ 3(dim G − l(G))`, and for simple `S`,
/// `3·l(S) ≤ 2·dim S` with equality exactly for `SU_2`.
pub fn check_dimlen(g: &GroupType) -> Vec<CheckReport> {
    let l = length(g);
    let dim = g.dim();
    let delta = dim - l;
    let derived = g.derived().dim();
    let inputs = json!({ "group": g.to_string() });
    let mut out = vec![
        CheckReport::new(
            "dim G - l(G) <= dim G'",
            "dimlen",
            inputs.clone(),
            delta.to_string(),
            derived.to_string(),
            delta <= derived,
        ),
        CheckReport::new(
            "dim G' <= 3(dim G - l(G))",
            "dimlen",
            inputs.clone(),
            derived.to_string(),
            (3 * delta).to_string(),
            derived <= 3 * delta,
        ),
        CheckReport::new(
            "l(G) = dim G iff G is a torus",
            "dimlen",
            inputs.clone(),
            format!("l={l}, dim={dim}"),
            format!("torus={}", g.is_torus()),
            (l == dim) == g.is_torus(),
        ),
    ];
    if let (0, [s]) = (g.torus_rank(), g.factors()) {
        let equality = 3 * l == 2 * dim;
        let is_su2 = s.family() == Family::SU && s.degree() == Some(2);
        out.push(CheckReport::new(
            "3 l(S) <= 2 dim S, equality iff S = SU(2)",
            "simple",
            inputs,
            (3 * l).to_string(),
            (2 * dim).to_string(),
            3 * l <= 2 * dim && equality == is_su2,
        ));
    }
    out
}

/// `l(G) ≥ β(√dim G − α)`, and for simple `S` the sharper `l(S) ≥ β(√dim S − ξ)`
/// with `ξ = α` for `E6, E7, E8` and `ξ = 1` otherwise.
pub fn check_sqrt_lower_bound(g: &GroupType) -> Vec<CheckReport> {
    let c = Constants::new();
    let l = Surd::integer(length(g) as i64);
    let root = Surd::sqrt(g.dim());
    let rhs = &c.beta * &(&root - &c.alpha);
    let inputs = json!({ "group": g.to_string() });
    let mut out = vec![CheckReport::new(
        "l(G) >= beta (sqrt(dim G) - alpha)",
        "dimlength",
        inputs.clone(),
        show(&l),
        show(&rhs),
        l >= rhs,
    )];
    if let (0, [s]) = (g.torus_rank(), g.factors()) {
        let xi = match s.family() {
            Family::E6 | Family::E7 | Family::E8 => c.alpha.clone(),
            _ => Surd::integer(1),
        };
        let rhs = &c.beta * &(&root - &xi);
        out.push(CheckReport::new(
            "l(S) >= beta (sqrt(dim S) - xi)",
            "simplel",
            inputs,
            show(&l),
            show(&rhs),
            l >= rhs,
        ));
    }
    out
}

/// Length of a classical simple group written through its dimension `d`:
/// `2√(d+1) − 2` (SU), `3·2^{−1/2}√(d + 1/8) − 7/4` (Sp),
/// `5·2^{−3/2}√(d + 1/8) − (2k+3)/8` with `k = n mod 4` (SO).
pub fn lendim_formula(s: SimpleType) -> Result<Surd> {
    let d = s.dim();
    let n = s.degree().ok_or_else(|| Error::InvalidArgument(format!("{s} is not classical")))?;
    let root_eighth = Surd::sqrt_ratio(8 * d + 1, 8);
    Ok(match s.family() {
        Family::SU => &Surd::sqrt(d + 1).scale(&q(2, 1)) - &Surd::integer(2),
        Family::Sp => {
            let coeff = Surd::sqrt(2).scale(&q(3, 2));
            &(&coeff * &root_eighth) - &Surd::rational(7, 4)
        }
        Family::SO => {
            let k = (n % 4) as i64;
            &(&Constants::new().beta * &root_eighth) - &Surd::rational(2 * k + 3, 8)
        }
        _ => unreachable!(),
    })
}

/// Outcome of the three elementary inequalities; `None` when the clause's
/// hypothesis does not hold for the inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemClauses {
    pub one_plus_beta: Option<bool>,
    pub sqrt_sum_one: Option<bool>,
    pub sqrt_sum_alpha: Option<bool>,
}

/// (i) `x ≥ 1 ⇒ 1 + β√x ≥ β√(x+1)`;
/// (ii) `x, y ≥ 3 ⇒ √x + √y ≥ √(x+y) + 1`;
/// (iii) `x, y ≥ 78 ⇒ √x + √y ≥ √(x+y) + α`.
pub fn elem_inequalities(x: &BigRational, y: &BigRational) -> ElemClauses {
    let c = Constants::new();
    let one = BigRational::from_integer(1.into());
    let sx = || Surd::sqrt_big(x);
    let sy = || Surd::sqrt_big(y);
    let sxy = || Surd::sqrt_big(&(x + y));
    let first = (*x >= one).then(|| {
        let lhs = &Surd::integer(1) + &(&c.beta * &sx());
        let rhs = &c.beta * &Surd::sqrt_big(&(x + &one));
        lhs >= rhs
    });
    let three = BigRational::from_integer(3.into());
    let second = (*x >= three && *y >= three)
        .then(|| &sx() + &sy() >= &sxy() + &Surd::integer(1));
    let big = BigRational::from_integer(78.into());
    let third = (*x >= big && *y >= big).then(|| &sx() + &sy() >= &sxy() + &c.alpha);
    ElemClauses { one_plus_beta: first, sqrt_sum_one: second, sqrt_sum_alpha: third }
}

/// `(5/4)Σn_i − (7/4)k − (5/4)√(Σ n_i(n_i−1)) − √(Σ_{i≥2} n_i)` for
/// `k ≥ 2` and `n_1 ≥ n_i ≥ 7`.
pub fn smalll_deficit(ns: &[u32]) -> Result<Surd> {
    let k = ns.len();
    if k < 2 {
        return Err(Error::InvalidArgument("need at least two entries".into()));
    }
    let n1 = ns[0];
    if ns.iter().any(|&n| n < 7 || n > n1) {
        return Err(Error::InvalidArgument(format!(
            "entries must satisfy n_1 >= n_i >= 7: {ns:?}"
        )));
    }
    let sum: u64 = ns.iter().map(|&n| n as u64).sum();
    let sq: u64 = ns.iter().map(|&n| n as u64 * (n as u64 - 1)).sum();
    let tail: u64 = ns[1..].iter().map(|&n| n as u64).sum();
    let linear = Surd::rational(5 * sum as i64 - 7 * k as i64, 4);
    Ok(&(&linear - &Surd::sqrt(sq).scale(&q(5, 4))) - &Surd::sqrt(tail))
}

/// Additive constant in `l(S) ≤ 2 cd(S) + a`.
pub fn twice_constant(s: SimpleType) -> u64 {
    match (s.family(), s.degree()) {
        (Family::SU, Some(2..=4)) => 2,
        (Family::Sp, Some(4)) | (Family::SO, Some(7)) => 1,
        _ => 0,
    }
}

/// `l(G') ≤ 2 cd(G) + 2` and `dim G' ≤ (β^{-1}(2cd + 2) + α)²` using the lower
/// end of `cd`; plus the per-simple, homogeneous and superadditivity lemmas
/// when they apply.
pub fn check_lcd(g: &GroupType, cd: &BoundsOrExact) -> Vec<CheckReport> {
    let c = Constants::new();
    let derived = g.derived();
    let l = length(&derived);
    let cd_lo = cd.lower();
    let inputs = json!({ "group": g.to_string(), "cd": cd.to_string() });
    let mut out = vec![CheckReport::new(
        "l(G') <= 2 cd(G) + 2",
        "lcd",
        inputs.clone(),
        l.to_string(),
        (2 * cd_lo + 2).to_string(),
        l <= 2 * cd_lo + 2,
    )];
    let m = Surd::integer(2 * cd_lo as i64 + 2);
    let rhs = (&(&c.beta_inv() * &m) + &c.alpha).square();
    let dim = Surd::integer(derived.dim() as i64);
    out.push(CheckReport::new(
        "dim G' <= (beta^-1 (2 cd(G) + 2) + alpha)^2",
        "lcd",
        inputs.clone(),
        derived.dim().to_string(),
        show(&rhs),
        dim <= rhs,
    ));

    let groups = derived.multiplicities();
    if let [(s, 1)] = groups.as_slice() {
        let cd_s = length_simple(*s) - depth_simple(*s);
        let a = twice_constant(*s);
        out.push(CheckReport::new(
            "l(S) <= 2 cd(S) + a",
            "twice",
            json!({ "group": s.to_string(), "a": a }),
            l.to_string(),
            (2 * cd_s + a).to_string(),
            l <= 2 * cd_s + a,
        ));
    }
    if let [(s, k)] = groups.as_slice() {
        if *k >= 2 {
            let cd_sk = chain_difference(&derived).as_exact().expect("homogeneous");
            let su2 = s.family() == Family::SU && s.degree() == Some(2);
            let (rhs, pass) = if su2 {
                (2 * cd_sk + 2, l == 2 * cd_sk + 2)
            } else {
                (2 * cd_sk, l <= 2 * cd_sk)
            };
            out.push(CheckReport::new(
                if su2 { "l(SU(2)^k) = 2 cd + 2" } else { "l(S^k) <= 2 cd(S^k)" },
                "homog",
                json!({ "group": derived.to_string() }),
                l.to_string(),
                rhs.to_string(),
                pass,
            ));
        }
    }
    if groups.len() >= 2 {
        let parts: u64 = groups
            .iter()
            .map(|(s, k)| {
                chain_difference(&GroupType::power(*s, *k)).as_exact().expect("homogeneous")
            })
            .sum();
        out.push(CheckReport::new(
            "cd(G) >= sum cd(S_i^k_i)",
            "reduce2",
            inputs,
            cd.upper().to_string(),
            parts.to_string(),
            cd.upper() >= parts,
        ));
    }
    out
}
