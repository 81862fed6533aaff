//! Witness chains `G = G_0 > G_1 > ... > G_t = 1` and their verification.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::formulas::{depth, length, length_simple};
use crate::group::{Family, GroupType, SimpleType};
use crate::oracle::Oracle;
use crate::parse::parse_group;
use crate::subgroups::{
    find_kind, is_curated_group, is_maximal_step, maximal_connected, maximal_connected_simple,
    EmbeddingKind, MaximalEntry, Verdict,
};

/// A descending chain; `steps[i]` labels the embedding `nodes[i+1] < nodes[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub nodes: Vec<GroupType>,
    pub steps: Vec<EmbeddingKind>,
}

impl Chain {
    fn start(g: &GroupType) -> Chain {
        Chain { nodes: vec![g.clone()], steps: Vec::new() }
    }

    pub fn length(&self) -> usize {
        self.steps.len()
    }

    fn last(&self) -> &GroupType {
        self.nodes.last().expect("chains are nonempty")
    }

    fn push(&mut self, child: GroupType, kind: EmbeddingKind) {
        self.nodes.push(child);
        self.steps.push(kind);
    }

    /// Parse the text format: one group spec per line, blank lines and `#`
    /// comments skipped. Steps are labelled from the database where listed.
    pub fn parse(text: &str) -> Result<Chain> {
        let mut nodes = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = parse_group(line)
                .map_err(|e| Error::MalformedChain(format!("line {}: {e}", i + 1)))?;
            nodes.push(g);
        }
        if nodes.is_empty() {
            return Err(Error::MalformedChain("no groups".into()));
        }
        let steps = nodes
            .windows(2)
            .map(|w| find_kind(&w[0], &w[1]).unwrap_or(EmbeddingKind::Terminal))
            .collect();
        Ok(Chain { nodes, steps })
    }

    pub fn to_text(&self) -> String {
        self.nodes.iter().map(|g| format!("{g}\n")).collect()
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nodes.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" > "))
    }
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    kind: String,
    params: Value,
}

#[derive(Serialize, Deserialize)]
struct ChainJson {
    nodes: Vec<GroupType>,
    steps: Vec<StepJson>,
    length: usize,
}

impl Serialize for Chain {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ChainJson {
            nodes: self.nodes.clone(),
            steps: self
                .steps
                .iter()
                .map(|k| StepJson { kind: k.name().to_owned(), params: k.params() })
                .collect(),
            length: self.length(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Chain {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Chain, D::Error> {
        use serde::de::Error as _;
        let raw = ChainJson::deserialize(de)?;
        let steps = raw
            .steps
            .iter()
            .map(|s| EmbeddingKind::from_json(&s.kind, &s.params))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        if steps.len() + 1 != raw.nodes.len() || raw.length != steps.len() {
            return Err(D::Error::custom("inconsistent chain lengths"));
        }
        Ok(Chain { nodes: raw.nodes, steps })
    }
}

fn su(n: u32) -> SimpleType {
    SimpleType::su(n).expect("canonical")
}

fn classical(family: Family, n: u32) -> GroupType {
    crate::group::classical(family, n).expect("canonical")
}

/// The subgroup of `s` used by [`max_chain`]; it has length `l(s) − 1`.
fn max_step(s: SimpleType) -> MaximalEntry {
    let (entries, _) = maximal_connected_simple(s);
    let preferred = match (s.family(), s.degree()) {
        (Family::SU, Some(n)) => classical(Family::SU, n - 1).product(&GroupType::torus(1)),
        (Family::Sp, Some(n)) => GroupType::simple(su(2)).product(&classical(Family::Sp, n - 2)),
        (Family::SO, Some(n)) => classical(Family::SO, 4).product(&classical(Family::SO, n - 4)),
        (Family::G2, _) => GroupType::simple(su(3)),
        (Family::F4, _) => classical(Family::SO, 9),
        (Family::E6, _) => classical(Family::SO, 10).with_torus(1),
        (Family::E7, _) => classical(Family::SO, 12).product(&GroupType::simple(su(2))),
        (Family::E8, _) => classical(Family::SO, 16),
        _ => unreachable!(),
    };
    let target = length_simple(s) - 1;
    entries
        .iter()
        .find(|e| e.subgroup == preferred)
        .or_else(|| entries.iter().find(|e| length(&e.subgroup) == target))
        .cloned()
        .expect("every simple group has a maximal subgroup one step shorter")
}

/// A chain of length `l(G)`. Tori drop first; otherwise the last simple factor
/// in canonical order descends to a subgroup of length one less.
pub fn max_chain(g: &GroupType) -> Chain {
    let mut chain = Chain::start(g);
    loop {
        let cur = chain.last().clone();
        if cur.is_trivial() {
            break;
        }
        if cur.torus_rank() > 0 {
            chain.push(cur.with_torus(cur.torus_rank() - 1), EmbeddingKind::TorusDrop);
            continue;
        }
        let s = *cur.factors().last().expect("nontrivial semisimple");
        let e = max_step(s);
        let child = cur.replace(s, 1, &e.subgroup).expect("factor present");
        let kind = if cur.factors().len() == 1 {
            e.kind
        } else {
            EmbeddingKind::FactorMax { factor: s, inner: Box::new(e.kind) }
        };
        chain.push(child, kind);
    }
    chain
}

/// The simple descent realizing `λ(S)` for a simple `S`, as the list of
/// intermediate simple subgroups between `S` and `SU_2`.
fn min_descent(s: SimpleType) -> Vec<GroupType> {
    let so = |n| classical(Family::SO, n);
    let sp = |n| classical(Family::Sp, n);
    let g2 = GroupType::simple(SimpleType::G2);
    let via = match (s.family(), s.degree()) {
        (Family::SU, Some(2)) => vec![],
        (Family::SU, Some(3)) => vec![],
        (Family::SU, Some(7)) => vec![so(7), g2],
        (Family::SU, Some(n)) if n % 2 == 0 => vec![sp(n)],
        (Family::SU, Some(n)) => vec![so(n)],
        (Family::Sp, Some(_)) => vec![],
        (Family::SO, Some(7)) => vec![g2],
        (Family::SO, Some(8)) => vec![GroupType::simple(su(3))],
        (Family::SO, Some(n)) if n % 2 == 0 => vec![so(n - 1)],
        (Family::SO, Some(_)) => vec![],
        (Family::E6, _) => vec![GroupType::simple(SimpleType::F4)],
        _ => vec![],
    };
    via.into_iter()
        .chain(std::iter::once(GroupType::simple(su(2))))
        .filter(|g| *g != GroupType::simple(s))
        .collect()
}

fn push_step(chain: &mut Chain, child: GroupType) -> Option<()> {
    let kind = find_kind(chain.last(), &child)?;
    chain.push(child, kind);
    Some(())
}

/// A chain of length `λ(G)` when the depth is known exactly: tori, `S^k × T_z`,
/// and groups whose simple factors are all curated. Returns `None` otherwise.
pub fn min_chain(g: &GroupType) -> Option<Chain> {
    if depth(g).as_exact().is_some() {
        return homogeneous_min_chain(g);
    }
    if is_curated_group(g) {
        return min_chain_with(g, &Oracle::new());
    }
    None
}

fn homogeneous_min_chain(g: &GroupType) -> Option<Chain> {
    let mut chain = Chain::start(g);
    for z in (0..g.torus_rank()).rev() {
        chain.push(g.with_torus(z), EmbeddingKind::TorusDrop);
    }
    if let Some((s, k)) = g.multiplicities().first().copied() {
        for j in (1..k).rev() {
            push_step(&mut chain, GroupType::power(s, j))?;
        }
        for child in min_descent(s) {
            push_step(&mut chain, child)?;
        }
        push_step(&mut chain, GroupType::torus(1))?;
        push_step(&mut chain, GroupType::trivial())?;
    }
    Some(chain)
}

/// Minimal chain guided by the oracle: at each node pick the first listed
/// maximal subgroup of depth one less.
pub fn min_chain_with(g: &GroupType, oracle: &Oracle) -> Option<Chain> {
    if depth(g).as_exact().is_some() {
        return homogeneous_min_chain(g);
    }
    let mut chain = Chain::start(g);
    while !chain.last().is_trivial() {
        let cur = chain.last().clone();
        let want = oracle.depth(&cur).ok()? - 1;
        let (entries, _) = maximal_connected(&cur).ok()?;
        let mut next = None;
        for e in entries {
            if oracle.depth(&e.subgroup).ok()? == want {
                next = Some(e);
                break;
            }
        }
        let e = next?;
        chain.push(e.subgroup, e.kind);
    }
    Some(chain)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Overall {
    Valid,
    Invalid { step: Option<usize>, reason: String },
    ValidModuloUnknown { steps: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub steps: Vec<Verdict>,
    pub overall: Overall,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.overall == Overall::Valid
    }

    /// Valid, or valid up to steps outside the curated coverage set.
    pub fn is_acceptable(&self) -> bool {
        !matches!(self.overall, Overall::Invalid { .. })
    }
}

/// Check every step with [`is_maximal_step`]. Shape errors (wrong endpoint,
/// mismatched step count) are reported as `Invalid` with no step index.
pub fn verify_chain(c: &Chain) -> VerifyReport {
    let invalid = |reason: String| VerifyReport {
        steps: Vec::new(),
        overall: Overall::Invalid { step: None, reason },
    };
    if c.nodes.is_empty() {
        return invalid("empty chain".into());
    }
    if c.steps.len() + 1 != c.nodes.len() {
        return invalid(format!("{} nodes but {} steps", c.nodes.len(), c.steps.len()));
    }
    if !c.last().is_trivial() {
        return invalid(format!("chain ends at {} instead of 1", c.last()));
    }
    let steps: Vec<Verdict> = c.nodes.windows(2).map(|w| is_maximal_step(&w[0], &w[1])).collect();
    let overall = if let Some(i) = steps.iter().position(|v| *v == Verdict::No) {
        Overall::Invalid {
            step: Some(i),
            reason: format!("{} is not a maximal connected subgroup of {}", c.nodes[i + 1], c.nodes[i]),
        }
    } else {
        let unknown: Vec<usize> = steps
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == Verdict::Unknown)
            .map(|(i, _)| i)
            .collect();
        if unknown.is_empty() {
            Overall::Valid
        } else {
            Overall::ValidModuloUnknown { steps: unknown }
        }
    };
    VerifyReport { steps, overall }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupType {
        parse_group(s).unwrap()
    }

    fn nodes(c: &Chain) -> Vec<String> {
        c.nodes.iter().map(|n| n.to_string()).collect()
    }

    #[test]
    fn su3_max_chain() {
        let c = max_chain(&g("SU(3)"));
        assert_eq!(nodes(&c), ["SU(3)", "SU(2) x T", "SU(2)", "T", "1"]);
        assert!(verify_chain(&c).is_valid());
    }

    #[test]
    fn f4_max_chain_goes_through_b4() {
        let c = max_chain(&g("F4"));
        assert_eq!(c.length(), 11);
        assert_eq!(c.nodes[1], g("SO(9)"));
        assert_eq!(c.nodes[2], g("SU(2)^2 x Sp(4)"));
        assert_eq!(c.nodes[3], g("SU(2)^4"));
        assert_eq!(c.nodes[4], g("SU(2)^3 x T"));
        assert!(verify_chain(&c).is_acceptable());
    }

    #[test]
    fn sp4_and_torus_max_chains() {
        let c = max_chain(&g("Sp(4)"));
        assert_eq!(c.length(), 5);
        assert_eq!(c.nodes[1], g("SU(2)^2"));
        assert!(verify_chain(&c).is_valid());
        let c = max_chain(&g("T^4"));
        assert_eq!(c.length(), 4);
        assert!(c.steps.iter().all(|k| *k == EmbeddingKind::TorusDrop));
    }

    #[test]
    fn max_chain_length_matches_formula() {
        for spec in ["SU(4)", "SO(8)", "SO(12)", "E6", "E7", "E8", "G2 x SU(3) x T^2", "SO(10)"] {
            let grp = g(spec);
            let c = max_chain(&grp);
            assert_eq!(c.length() as u64, length(&grp), "{spec}");
            assert!(verify_chain(&c).is_acceptable(), "{spec}");
        }
    }

    #[test]
    fn min_chain_examples() {
        let c = min_chain(&g("SO(7)")).unwrap();
        assert_eq!(nodes(&c), ["SO(7)", "G2", "SU(2)", "T", "1"]);
        assert!(verify_chain(&c).is_valid());

        let c = min_chain(&g("SU(2)^3")).unwrap();
        assert_eq!(nodes(&c), ["SU(2)^3", "SU(2)^2", "SU(2)", "T", "1"]);
        assert!(verify_chain(&c).is_valid());

        let c = min_chain(&g("E6")).unwrap();
        assert_eq!(nodes(&c), ["E6", "F4", "SU(2)", "T", "1"]);
        assert!(verify_chain(&c).is_acceptable());

        let c = min_chain(&g("SO(8)")).unwrap();
        assert_eq!(c.length(), 4);
        assert!(verify_chain(&c).is_valid());
    }

    #[test]
    fn min_chain_availability() {
        assert!(min_chain(&g("SU(7) x Sp(8)")).is_none());
        let c = min_chain(&g("SU(4) x Sp(4)")).unwrap();
        assert_eq!(c.length(), 5);
        assert!(verify_chain(&c).is_valid());
        let c = min_chain(&g("SU(3) x SU(2) x T")).unwrap();
        assert_eq!(c.length(), 5);
        assert!(verify_chain(&c).is_valid());
    }

    #[test]
    fn verify_examples() {
        let bad = Chain::parse("SU(3)\nT\n1\n").unwrap();
        let r = verify_chain(&bad);
        assert!(matches!(r.overall, Overall::Invalid { step: Some(0), .. }));

        let good = Chain::parse("# G2 descent\nG2\nSU(3)\n\nSU(2)\nT\n1\n").unwrap();
        assert!(verify_chain(&good).is_valid());
        assert_eq!(good.steps[0].name(), "exceptional-table");

        let short = Chain::parse("SU(2)\nT\n").unwrap();
        assert!(matches!(verify_chain(&short).overall, Overall::Invalid { step: None, .. }));

        let c = Chain::parse("E8\nSU(2)\nT\n1").unwrap();
        assert!(verify_chain(&c).is_acceptable());
        assert!(Chain::parse("# nothing\n").is_err());
        assert!(Chain::parse("SU(2)\nFoo\n").is_err());
    }

    #[test]
    fn chain_json_round_trips() {
        let c = max_chain(&g("G2 x T"));
        let text = serde_json::to_string(&c).unwrap();
        let back: Chain = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["length"], 6);
        assert_eq!(Chain::parse(&c.to_text()).unwrap().nodes, c.nodes);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn group() -> impl Strategy<Value = GroupType> {
            let simples = SimpleType::all_up_to_degree(14);
            (0u32..4, proptest::collection::vec(proptest::sample::select(simples), 0..3))
                .prop_map(|(z, f)| GroupType::new(z, f))
        }

        fn strictly_descending(c: &Chain) -> bool {
            c.nodes.windows(2).all(|w| (w[1].dim(), w[1].rank()) < (w[0].dim(), w[0].rank()))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn max_chain_attains_length(g in group()) {
                let c = max_chain(&g);
                prop_assert_eq!(c.length() as u64, length(&g));
                prop_assert!(verify_chain(&c).is_acceptable());
                prop_assert!(strictly_descending(&c));
            }

            #[test]
            fn min_chain_attains_depth(g in group()) {
                if let Some(c) = min_chain(&g) {
                    let d = depth(&g);
                    prop_assert!(d.contains(c.length() as u64));
                    if let Some(exact) = d.as_exact() {
                        prop_assert_eq!(c.length() as u64, exact);
                    }
                    prop_assert!(verify_chain(&c).is_acceptable());
                    prop_assert!(strictly_descending(&c));
                } else {
                    prop_assert!(depth(&g).as_exact().is_none());
                }
            }
        }
    }
}
