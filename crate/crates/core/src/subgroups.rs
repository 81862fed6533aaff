//! Maximal connected subgroups.
//!
//! Simple factors are handled by instantiating the reducible/tensor rows for
//! classical groups, the `SU_n ⊃ Sp_n, SO_n` inclusions, the exceptional table
//! verbatim, and a small curated list of irreducible simple subgroups. Products
//! and tori follow the structure of maximal subgroups of `G'·Z`: drop one torus
//! dimension, replace one simple factor by a maximal subgroup of it, or collapse
//! two equal factors to a diagonal.
//!
//! Every emitted entry is a genuine maximal connected subgroup. Whether the list
//! is *all* of them is tracked by [`Completeness`]: it is claimed only for the
//! curated coverage set (and products of its members with tori).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{canonicalize, classical, Family, GroupType, RawGroup, SimpleType};

/// Why a subgroup is maximal connected in its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EmbeddingKind {
    /// Stabilizer of a nondegenerate `k`-subspace of the natural module.
    Reducible { k: u32 },
    /// `Cl_a ⊗ Cl_b` on `V = V_a ⊗ V_b`. `equal` marks `a = b` with equal families.
    TensorProduct { left: Family, a: u32, right: Family, b: u32, equal: bool },
    /// `Sp_n` or `SO_n` inside `SU_n`.
    ClassicalInSU { family: Family },
    /// `SU_{n/2}·T_1` in `Sp_n` or even `SO_n`.
    LeviHalf,
    /// A simple subgroup acting irreducibly on the natural module.
    IrreducibleSimple { source: String },
    /// A row of the exceptional table, named in Lie notation (`"B4"`, `"C3A1"`, ...).
    ExceptionalTable { row: String },
    /// Two copies of `factor` collapsed to a diagonal.
    Diagonal { factor: SimpleType },
    /// One copy of `factor` replaced by one of its maximal subgroups.
    FactorMax { factor: SimpleType, inner: Box<EmbeddingKind> },
    /// One dimension of the central torus dropped.
    TorusDrop,
    /// A step with no recorded embedding (user-supplied chains).
    Terminal,
}

impl EmbeddingKind {
    pub fn name(&self) -> &'static str {
        match self {
            EmbeddingKind::Reducible { .. } => "reducible",
            EmbeddingKind::TensorProduct { .. } => "tensor",
            EmbeddingKind::ClassicalInSU { .. } => "classical-in-su",
            EmbeddingKind::LeviHalf => "levi-half",
            EmbeddingKind::IrreducibleSimple { .. } => "irreducible-simple",
            EmbeddingKind::ExceptionalTable { .. } => "exceptional-table",
            EmbeddingKind::Diagonal { .. } => "diagonal",
            EmbeddingKind::FactorMax { .. } => "factor-max",
            EmbeddingKind::TorusDrop => "torus-drop",
            EmbeddingKind::Terminal => "terminal",
        }
    }

    pub fn params(&self) -> Value {
        match self {
            EmbeddingKind::Reducible { k } => json!({ "k": k }),
            EmbeddingKind::TensorProduct { left, a, right, b, equal } => {
                json!({ "left": left, "a": a, "right": right, "b": b, "equal": equal })
            }
            EmbeddingKind::ClassicalInSU { family } => json!({ "family": family }),
            EmbeddingKind::IrreducibleSimple { source } => json!({ "source": source }),
            EmbeddingKind::ExceptionalTable { row } => json!({ "row": row }),
            EmbeddingKind::Diagonal { factor } => json!({ "factor": factor }),
            EmbeddingKind::FactorMax { factor, inner } => json!({
                "factor": factor,
                "inner": { "kind": inner.name(), "params": inner.params() },
            }),
            EmbeddingKind::LeviHalf | EmbeddingKind::TorusDrop | EmbeddingKind::Terminal => {
                json!({})
            }
        }
    }

    /// Rebuild a kind from its `name` and `params` JSON rendering.
    pub fn from_json(name: &str, params: &Value) -> Result<EmbeddingKind> {
        let bad = || Error::InvalidArgument(format!("bad params for kind `{name}`: {params}"));
        let u = |key: &str| params.get(key).and_then(Value::as_u64).map(|v| v as u32).ok_or_else(bad);
        let s = |key: &str| params.get(key).and_then(Value::as_str).map(str::to_owned).ok_or_else(bad);
        let fam = |key: &str| {
            params
                .get(key)
                .cloned()
                .and_then(|v| serde_json::from_value::<Family>(v).ok())
                .ok_or_else(bad)
        };
        let simple = |key: &str| {
            params
                .get(key)
                .cloned()
                .and_then(|v| serde_json::from_value::<SimpleType>(v).ok())
                .ok_or_else(bad)
        };
        Ok(match name {
            "reducible" => EmbeddingKind::Reducible { k: u("k")? },
            "tensor" => EmbeddingKind::TensorProduct {
                left: fam("left")?,
                a: u("a")?,
                right: fam("right")?,
                b: u("b")?,
                equal: params.get("equal").and_then(Value::as_bool).ok_or_else(bad)?,
            },
            "classical-in-su" => EmbeddingKind::ClassicalInSU { family: fam("family")? },
            "levi-half" => EmbeddingKind::LeviHalf,
            "irreducible-simple" => EmbeddingKind::IrreducibleSimple { source: s("source")? },
            "exceptional-table" => EmbeddingKind::ExceptionalTable { row: s("row")? },
            "diagonal" => EmbeddingKind::Diagonal { factor: simple("factor")? },
            "factor-max" => {
                let inner = params.get("inner").ok_or_else(bad)?;
                let inner_name = inner.get("kind").and_then(Value::as_str).ok_or_else(bad)?;
                let inner_params = inner.get("params").ok_or_else(bad)?;
                EmbeddingKind::FactorMax {
                    factor: simple("factor")?,
                    inner: Box::new(EmbeddingKind::from_json(inner_name, inner_params)?),
                }
            }
            "torus-drop" => EmbeddingKind::TorusDrop,
            "terminal" => EmbeddingKind::Terminal,
            _ => return Err(bad()),
        })
    }
}

impl std::fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EmbeddingKind::Reducible { k } => write!(f, "reducible(k={k})"),
            EmbeddingKind::TensorProduct { left, a, right, b, equal } => {
                write!(f, "tensor({left}({a}) x {right}({b}))")?;
                if *equal {
                    f.write_str("[a=b]")?;
                }
                Ok(())
            }
            EmbeddingKind::ClassicalInSU { family } => write!(f, "classical({family})"),
            EmbeddingKind::LeviHalf => f.write_str("levi-half"),
            EmbeddingKind::IrreducibleSimple { source } => write!(f, "irreducible({source})"),
            EmbeddingKind::ExceptionalTable { row } => write!(f, "table({row})"),
            EmbeddingKind::Diagonal { factor } => write!(f, "diagonal({factor})"),
            EmbeddingKind::FactorMax { factor, inner } => write!(f, "in {factor}: {inner}"),
            EmbeddingKind::TorusDrop => f.write_str("torus-drop"),
            EmbeddingKind::Terminal => f.write_str("terminal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalEntry {
    pub subgroup: GroupType,
    pub kind: EmbeddingKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Completeness {
    pub complete: bool,
    pub reason: String,
}

/// Simple types whose maximal connected subgroups are listed exhaustively.
pub fn is_curated(s: SimpleType) -> bool {
    match (s.family(), s.degree()) {
        (Family::SU, Some(n)) => (2..=6).contains(&n),
        (Family::Sp, Some(n)) => n == 4 || n == 6,
        (Family::SO, Some(n)) => n == 7 || n == 8,
        (Family::G2, _) => true,
        _ => false,
    }
}

/// Members of the curated coverage set, in canonical order.
pub fn curated_simple_types() -> Vec<SimpleType> {
    SimpleType::all_up_to_degree(8).into_iter().filter(|s| is_curated(*s)).collect()
}

/// All groups whose simple factors are curated; any torus rank is allowed.
pub fn is_curated_group(g: &GroupType) -> bool {
    g.factors().iter().all(|s| is_curated(*s))
}

fn completeness_for(s: SimpleType) -> Completeness {
    if is_curated(s) {
        Completeness { complete: true, reason: format!("{s} is in the curated coverage set") }
    } else {
        Completeness {
            complete: false,
            reason: format!("{s} is outside the curated coverage set; irreducible simple subgroups may be missing"),
        }
    }
}

fn su(n: u32) -> GroupType {
    classical(Family::SU, n).expect("SU degree in range")
}
fn sp(n: u32) -> GroupType {
    classical(Family::Sp, n).expect("Sp degree in range")
}
fn so(n: u32) -> GroupType {
    classical(Family::SO, n).expect("SO degree in range")
}
fn t1() -> GroupType {
    GroupType::torus(1)
}
fn exc(f: Family) -> GroupType {
    canonicalize(RawGroup::Exceptional(f)).expect("exceptional family")
}

fn prod(parts: &[GroupType]) -> GroupType {
    parts.iter().fold(GroupType::trivial(), |acc, g| acc.product(g))
}

/// Exceptional rows in Lie notation with their canonical types.
fn exceptional_rows(f: Family) -> Vec<(&'static str, GroupType)> {
    let a = |r: u32| su(r + 1);
    let b = |r: u32| so(2 * r + 1);
    let c = |r: u32| sp(2 * r);
    let d = |r: u32| so(2 * r);
    match f {
        Family::G2 => vec![("A2", a(2)), ("A1^2", prod(&[a(1), a(1)])), ("A1", a(1))],
        Family::F4 => vec![
            ("B4", b(4)),
            ("C3A1", prod(&[c(3), a(1)])),
            ("A2^2", prod(&[a(2), a(2)])),
            ("A1G2", prod(&[a(1), exc(Family::G2)])),
            ("A1", a(1)),
        ],
        Family::E6 => vec![
            ("D5T1", prod(&[d(5), t1()])),
            ("A5A1", prod(&[a(5), a(1)])),
            ("A2^3", prod(&[a(2), a(2), a(2)])),
            ("F4", exc(Family::F4)),
            ("C4", c(4)),
            ("A2G2", prod(&[a(2), exc(Family::G2)])),
            ("G2", exc(Family::G2)),
            ("A2", a(2)),
        ],
        Family::E7 => vec![
            ("D6A1", prod(&[d(6), a(1)])),
            ("A5A2", prod(&[a(5), a(2)])),
            ("A7", a(7)),
            ("E6T1", prod(&[exc(Family::E6), t1()])),
            ("G2C3", prod(&[exc(Family::G2), c(3)])),
            ("F4A1", prod(&[exc(Family::F4), a(1)])),
            ("A1^2", prod(&[a(1), a(1)])),
            ("A2", a(2)),
            ("A1", a(1)),
        ],
        Family::E8 => vec![
            ("E7A1", prod(&[exc(Family::E7), a(1)])),
            ("E6A2", prod(&[exc(Family::E6), a(2)])),
            ("D8", d(8)),
            ("A8", a(8)),
            ("A4^2", prod(&[a(4), a(4)])),
            ("G2F4", prod(&[exc(Family::G2), exc(Family::F4)])),
            ("A2A1", prod(&[a(2), a(1)])),
            ("B2", b(2)),
            ("A1", a(1)),
        ],
        _ => Vec::new(),
    }
}

/// Irreducible simple subgroups carried as data: `(parent, subgroup, source)`.
///
/// The principal `SU_2` is maximal in every `Sp_n` and in `SO_n` for odd `n ≥ 9`;
/// it is not maximal in `SO_7` (it lies in `G2`).
fn irreducible_simple(s: SimpleType) -> Vec<(GroupType, &'static str)> {
    let mut out = Vec::new();
    match (s.family(), s.degree()) {
        (Family::SU, Some(6)) => out.push((su(3), "SU(3) on the symmetric square of C^3")),
        (Family::Sp, Some(_)) => out.push((su(2), "principal SU(2)")),
        (Family::SO, Some(7)) => out.push((exc(Family::G2), "G2 on its 7-dimensional module")),
        (Family::SO, Some(8)) => out.push((su(3), "SU(3) adjoint")),
        (Family::SO, Some(n)) if n % 2 == 1 && n >= 9 => out.push((su(2), "principal SU(2)")),
        _ => {}
    }
    out
}

fn push_unique(out: &mut Vec<MaximalEntry>, subgroup: GroupType, kind: EmbeddingKind) {
    if !out.iter().any(|e| e.subgroup == subgroup) {
        out.push(MaximalEntry { subgroup, kind });
    }
}

/// Maximal connected subgroups of a simple group, deduplicated by type.
pub fn maximal_connected_simple(s: SimpleType) -> (Vec<MaximalEntry>, Completeness) {
    let mut out = Vec::new();
    let entry = |out: &mut Vec<MaximalEntry>, g: GroupType, kind| push_unique(out, g, kind);

    match (s.family(), s.degree()) {
        (Family::SU, Some(n)) => {
            for k in 1..=n / 2 {
                entry(&mut out, prod(&[su(k), su(n - k), t1()]), EmbeddingKind::Reducible { k });
            }
            if n % 2 == 0 && n >= 4 {
                entry(&mut out, sp(n), EmbeddingKind::ClassicalInSU { family: Family::Sp });
            }
            entry(&mut out, so(n), EmbeddingKind::ClassicalInSU { family: Family::SO });
            for a in 2..=n {
                if a * a > n {
                    break;
                }
                if n % a == 0 {
                    let b = n / a;
                    entry(
                        &mut out,
                        prod(&[su(a), su(b)]),
                        EmbeddingKind::TensorProduct {
                            left: Family::SU,
                            a,
                            right: Family::SU,
                            b,
                            equal: a == b,
                        },
                    );
                }
            }
        }
        (Family::Sp, Some(n)) => {
            for k in (2..=n / 2).step_by(2) {
                entry(&mut out, prod(&[sp(k), sp(n - k)]), EmbeddingKind::Reducible { k });
            }
            entry(&mut out, prod(&[su(n / 2), t1()]), EmbeddingKind::LeviHalf);
            for a in (2..=n / 3).step_by(2) {
                if n % a == 0 {
                    let b = n / a;
                    if b >= 3 && b != 4 {
                        entry(
                            &mut out,
                            prod(&[sp(a), so(b)]),
                            EmbeddingKind::TensorProduct {
                                left: Family::Sp,
                                a,
                                right: Family::SO,
                                b,
                                equal: false,
                            },
                        );
                    }
                }
            }
        }
        (Family::SO, Some(n)) => {
            for k in 1..=n / 2 {
                entry(&mut out, prod(&[so(k), so(n - k)]), EmbeddingKind::Reducible { k });
            }
            if n % 2 == 0 {
                entry(&mut out, prod(&[su(n / 2), t1()]), EmbeddingKind::LeviHalf);
            }
            for a in 3..=n {
                if a * a > n {
                    break;
                }
                let b = n / a;
                if n % a == 0 && a != 4 && b != 4 {
                    entry(
                        &mut out,
                        prod(&[so(a), so(b)]),
                        EmbeddingKind::TensorProduct {
                            left: Family::SO,
                            a,
                            right: Family::SO,
                            b,
                            equal: a == b,
                        },
                    );
                }
            }
            for a in (2..=n).step_by(2) {
                if a * a > n {
                    break;
                }
                let b = n / a;
                if n % a == 0 && b % 2 == 0 {
                    entry(
                        &mut out,
                        prod(&[sp(a), sp(b)]),
                        EmbeddingKind::TensorProduct {
                            left: Family::Sp,
                            a,
                            right: Family::Sp,
                            b,
                            equal: a == b,
                        },
                    );
                }
            }
        }
        (f, None) => {
            for (row, g) in exceptional_rows(f) {
                entry(&mut out, g, EmbeddingKind::ExceptionalTable { row: row.to_owned() });
            }
        }
        _ => unreachable!("classical simple types carry a degree"),
    }

    for (g, source) in irreducible_simple(s) {
        entry(&mut out, g, EmbeddingKind::IrreducibleSimple { source: source.to_owned() });
    }
    (out, completeness_for(s))
}

/// Maximal connected subgroups of an arbitrary nontrivial group.
pub fn maximal_connected(g: &GroupType) -> Result<(Vec<MaximalEntry>, Completeness)> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    if let (0, [s]) = (g.torus_rank(), g.factors()) {
        return Ok(maximal_connected_simple(*s));
    }
    let mut out = Vec::new();
    let mut complete = true;
    let mut gaps = Vec::new();

    if g.torus_rank() > 0 {
        push_unique(&mut out, g.with_torus(g.torus_rank() - 1), EmbeddingKind::TorusDrop);
    }
    for (s, k) in g.multiplicities() {
        let (entries, flag) = maximal_connected_simple(s);
        if !flag.complete {
            complete = false;
            gaps.push(s.to_string());
        }
        for e in entries {
            let sub = g.replace(s, 1, &e.subgroup).expect("factor present");
            push_unique(&mut out, sub, EmbeddingKind::FactorMax { factor: s, inner: Box::new(e.kind) });
        }
        if k >= 2 {
            let sub = g.replace(s, 2, &GroupType::simple(s)).expect("two copies present");
            push_unique(&mut out, sub, EmbeddingKind::Diagonal { factor: s });
        }
    }
    let reason = if complete {
        "every simple factor is in the curated coverage set".to_owned()
    } else {
        format!("outside the curated coverage set: {}", gaps.join(", "))
    };
    Ok((out, Completeness { complete, reason }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// Whether `child` is (the type of) a maximal connected subgroup of `parent`.
pub fn is_maximal_step(parent: &GroupType, child: &GroupType) -> Verdict {
    let Ok((entries, flag)) = maximal_connected(parent) else {
        return Verdict::No;
    };
    if entries.iter().any(|e| &e.subgroup == child) {
        Verdict::Yes
    } else if flag.complete {
        Verdict::No
    } else {
        Verdict::Unknown
    }
}

/// The kind attached to `child` in `maximal_connected(parent)`, if listed.
pub fn find_kind(parent: &GroupType, child: &GroupType) -> Option<EmbeddingKind> {
    let (entries, _) = maximal_connected(parent).ok()?;
    entries.into_iter().find(|e| &e.subgroup == child).map(|e| e.kind)
}

/// Minimal dimension of a nontrivial irreducible representation not realizing
/// `S` as the classical group on that module (classical `S`), or of any
/// nontrivial representation (exceptional `S`).
pub fn min_irrep_dim(s: SimpleType) -> u64 {
    match (s.family(), s.degree()) {
        (Family::SU, Some(2)) => 4,
        (Family::SU, Some(3)) => 6,
        (Family::SU, Some(4)) => 10,
        (Family::SU, Some(k)) => (k as u64) * (k as u64 - 1) / 2,
        (Family::Sp, Some(4)) => 10,
        (Family::Sp, Some(k)) => (k as u64) * (k as u64 - 1) / 2 - 1,
        (Family::SO, Some(k)) if (7..=14).contains(&k) && k != 8 => 1 << ((k - 1) / 2),
        (Family::SO, Some(k)) => (k as u64) * (k as u64 - 1) / 2,
        (Family::G2, _) => 7,
        (Family::F4, _) => 26,
        (Family::E6, _) => 27,
        (Family::E7, _) => 56,
        (Family::E8, _) => 248,
        _ => unreachable!(),
    }
}

/// JSON export of a query.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaximalsJson {
    pub parent: GroupType,
    pub entries: Vec<EntryJson>,
    pub complete: bool,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub subgroup: GroupType,
    pub kind: String,
    pub params: Value,
}

impl MaximalsJson {
    pub fn new(parent: &GroupType, entries: &[MaximalEntry], flag: &Completeness) -> MaximalsJson {
        MaximalsJson {
            parent: parent.clone(),
            entries: entries
                .iter()
                .map(|e| EntryJson {
                    subgroup: e.subgroup.clone(),
                    kind: e.kind.name().to_owned(),
                    params: e.kind.params(),
                })
                .collect(),
            complete: flag.complete,
            reason: flag.reason.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_group;

    fn g(s: &str) -> GroupType {
        parse_group(s).unwrap()
    }

    fn subgroups(s: SimpleType) -> Vec<GroupType> {
        let mut v: Vec<GroupType> =
            maximal_connected_simple(s).0.into_iter().map(|e| e.subgroup).collect();
        v.sort();
        v
    }

    fn sorted(items: &[&str]) -> Vec<GroupType> {
        let mut v: Vec<GroupType> = items.iter().map(|s| g(s)).collect();
        v.sort();
        v
    }

    #[test]
    fn g2_row() {
        assert_eq!(subgroups(SimpleType::G2), sorted(&["SU(3)", "SU(2)^2", "SU(2)"]));
        assert!(maximal_connected_simple(SimpleType::G2).1.complete);
    }

    #[test]
    fn su2_has_only_a_circle() {
        assert_eq!(subgroups(SimpleType::su(2).unwrap()), sorted(&["T"]));
    }

    #[test]
    fn su4_deduplicates_the_2x2_tensor() {
        let s = SimpleType::su(4).unwrap();
        assert_eq!(
            subgroups(s),
            sorted(&["SU(3) x T", "SU(2)^2 x T", "Sp(4)", "SU(2)^2"])
        );
        let (entries, _) = maximal_connected_simple(s);
        let so4 = entries.iter().find(|e| e.subgroup == g("SU(2)^2")).unwrap();
        assert_eq!(so4.kind, EmbeddingKind::ClassicalInSU { family: Family::SO });
    }

    #[test]
    fn so7_entries() {
        assert_eq!(
            subgroups(SimpleType::so(7).unwrap()),
            sorted(&["SU(4)", "Sp(4) x T", "SU(2)^3", "G2"])
        );
    }

    #[test]
    fn so8_entries() {
        assert_eq!(
            subgroups(SimpleType::so(8).unwrap()),
            sorted(&["SO(7)", "SU(4) x T", "SU(2) x Sp(4)", "SU(2)^4", "SU(3)"])
        );
    }

    #[test]
    fn sp6_and_su6_entries() {
        assert_eq!(
            subgroups(SimpleType::sp(6).unwrap()),
            sorted(&["SU(2) x Sp(4)", "SU(3) x T", "SU(2)^2", "SU(2)"])
        );
        assert_eq!(
            subgroups(SimpleType::su(6).unwrap()),
            sorted(&[
                "SU(5) x T",
                "SU(4) x SU(2) x T",
                "SU(3)^2 x T",
                "Sp(6)",
                "SU(4)",
                "SU(2) x SU(3)",
                "SU(3)"
            ])
        );
    }

    #[test]
    fn products_and_tori() {
        let (e, flag) = maximal_connected(&g("T^3")).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].subgroup, g("T^2"));
        assert!(flag.complete);

        let (e, _) = maximal_connected(&g("SU(2)^2")).unwrap();
        let subs: Vec<_> = e.iter().map(|e| e.subgroup.clone()).collect();
        assert_eq!(subs, vec![g("SU(2) x T"), g("SU(2)")]);

        let (e, _) = maximal_connected(&g("SU(3) x T")).unwrap();
        let mut subs: Vec<_> = e.iter().map(|e| e.subgroup.clone()).collect();
        subs.sort();
        assert_eq!(subs, sorted(&["SU(3)", "SU(2) x T^2", "SU(2) x T"]));

        assert_eq!(maximal_connected(&GroupType::trivial()), Err(Error::TrivialGroup));
    }

    #[test]
    fn maximal_step_verdicts() {
        assert_eq!(is_maximal_step(&g("F4"), &g("SO(9)")), Verdict::Yes);
        assert_eq!(is_maximal_step(&g("SU(2)"), &g("1")), Verdict::No);
        assert_eq!(is_maximal_step(&g("E8"), &g("E7 x SU(2)")), Verdict::Yes);
        assert_eq!(is_maximal_step(&g("E8"), &g("SU(3)")), Verdict::Unknown);
        assert_eq!(is_maximal_step(&g("SU(3)"), &g("T")), Verdict::No);
    }

    #[test]
    fn min_irrep_examples() {
        assert_eq!(min_irrep_dim(SimpleType::su(4).unwrap()), 10);
        assert_eq!(min_irrep_dim(SimpleType::so(9).unwrap()), 16);
        assert_eq!(min_irrep_dim(SimpleType::E7), 56);
        assert_eq!(min_irrep_dim(SimpleType::so(8).unwrap()), 28);
    }

    #[test]
    fn entries_decrease_dim_and_never_raise_rank() {
        for s in SimpleType::all_up_to_degree(40) {
            let parent = GroupType::simple(s);
            let (entries, _) = maximal_connected_simple(s);
            assert!(!entries.is_empty(), "{s}");
            for e in &entries {
                assert!(e.subgroup.dim() < parent.dim(), "{s} > {}", e.subgroup);
                assert!(e.subgroup.rank() <= parent.rank(), "{s} > {}", e.subgroup);
            }
            for (i, a) in entries.iter().enumerate() {
                for b in &entries[i + 1..] {
                    assert_ne!(a.subgroup, b.subgroup, "duplicate in {s}");
                }
            }
        }
    }

    #[test]
    fn curated_set_is_closed() {
        for s in curated_simple_types() {
            for e in maximal_connected_simple(s).0 {
                assert!(is_curated_group(&e.subgroup), "{s} > {}", e.subgroup);
            }
        }
    }

    #[test]
    fn kind_json_round_trips() {
        for s in SimpleType::all_up_to_degree(12) {
            let (entries, flag) = maximal_connected(&GroupType::new(1, [s, s])).unwrap();
            let doc = MaximalsJson::new(&GroupType::new(1, [s, s]), &entries, &flag);
            let text = serde_json::to_string(&doc).unwrap();
            let back: MaximalsJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back, doc);
            for (e, j) in entries.iter().zip(&back.entries) {
                assert_eq!(EmbeddingKind::from_json(&j.kind, &j.params).unwrap(), e.kind);
            }
        }
    }
}
