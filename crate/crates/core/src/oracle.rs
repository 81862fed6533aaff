//! Brute-force length and depth by recursion over maximal connected subgroups:
//! `l(G) = 1 + max l(M)` and `λ(G) = 1 + min λ(M)`, with `l(1) = λ(1) = 0`.
//!
//! Recursion is over canonical types; every entry strictly lowers the
//! dimension, so the type graph is acyclic and plain memoized DFS terminates.
//! Any node whose enumeration is not known to be complete aborts the whole
//! query with [`Error::Incomplete`]; nothing is cached for it.

use std::collections::HashMap;
use std::sync::RwLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::{depth, length, BoundsOrExact};
use crate::group::GroupType;
use crate::subgroups::maximal_connected;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub length: u64,
    pub depth: u64,
}

/// Memoized oracle. Concurrent lookups and inserts are linearizable through
/// the lock; two threads may compute the same node, which is harmless since
/// the values agree.
#[derive(Debug, Default)]
pub struct Oracle {
    memo: Option<RwLock<HashMap<GroupType, Invariants>>>,
}

impl Oracle {
    pub fn new() -> Oracle {
        Oracle { memo: Some(RwLock::new(HashMap::new())) }
    }

    /// An oracle that recomputes everything on every query.
    pub fn uncached() -> Oracle {
        Oracle { memo: None }
    }

    pub fn cached_entries(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.read().expect("memo lock").len())
    }

    pub fn invariants(&self, g: &GroupType) -> Result<Invariants> {
        if g.is_trivial() {
            return Ok(Invariants { length: 0, depth: 0 });
        }
        if let Some(memo) = &self.memo {
            if let Some(hit) = memo.read().expect("memo lock").get(g) {
                return Ok(*hit);
            }
        }
        let (entries, flag) = maximal_connected(g)?;
        if !flag.complete {
            return Err(Error::Incomplete { group: g.clone(), reason: flag.reason });
        }
        let mut longest = 0;
        let mut shallowest = u64::MAX;
        for e in &entries {
            let inv = self.invariants(&e.subgroup)?;
            longest = longest.max(inv.length);
            shallowest = shallowest.min(inv.depth);
        }
        let inv = Invariants { length: longest + 1, depth: shallowest + 1 };
        if let Some(memo) = &self.memo {
            memo.write().expect("memo lock").insert(g.clone(), inv);
        }
        Ok(inv)
    }

    pub fn length(&self, g: &GroupType) -> Result<u64> {
        self.invariants(g).map(|i| i.length)
    }

    pub fn depth(&self, g: &GroupType) -> Result<u64> {
        self.invariants(g).map(|i| i.depth)
    }

    /// Compare oracle values with the closed formulas on every group of
    /// `scope`, in parallel. Rows come back in scope order.
    pub fn cross_validate(&self, scope: &[GroupType]) -> Result<Vec<CrossRow>> {
        scope
            .par_iter()
            .map(|g| {
                let inv = self.invariants(g)?;
                let formula_l = length(g);
                let formula_depth = depth(g);
                let pass = inv.length == formula_l && formula_depth.contains(inv.depth);
                Ok(CrossRow {
                    group: g.clone(),
                    formula_l,
                    oracle_l: inv.length,
                    formula_depth,
                    oracle_depth: inv.depth,
                    pass,
                })
            })
            .collect()
    }
}

/// One line of a cross-validation report. `pass` requires equal lengths and
/// the oracle depth to lie in the formula interval (equal when exact).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossRow {
    pub group: GroupType,
    pub formula_l: u64,
    pub oracle_l: u64,
    pub formula_depth: BoundsOrExact,
    pub oracle_depth: u64,
    pub pass: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::SimpleType;
    use crate::parse::parse_group;
    use crate::subgroups::curated_simple_types;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn g(s: &str) -> GroupType {
        parse_group(s).unwrap()
    }

    #[test]
    fn small_values() {
        let o = Oracle::new();
        assert_eq!(o.length(&g("SU(4)")).unwrap(), 6);
        assert_eq!(o.length(&g("G2")).unwrap(), 5);
        assert_eq!(o.length(&g("T^2")).unwrap(), 2);
        assert_eq!(o.depth(&g("SO(7)")).unwrap(), 4);
        assert_eq!(o.depth(&g("SU(2)")).unwrap(), 2);
        assert_eq!(o.depth(&g("SU(2)^2")).unwrap(), 3);
        assert_eq!(o.invariants(&g("1")).unwrap(), Invariants { length: 0, depth: 0 });
    }

    #[test]
    fn su4_sp4_is_refined_inside_its_interval() {
        let o = Oracle::new();
        let grp = g("SU(4) x Sp(4)");
        let d = o.depth(&grp).unwrap();
        assert!(depth(&grp).contains(d));
        assert_eq!(d, 5);
    }

    #[test]
    fn incomplete_nodes_are_errors() {
        let o = Oracle::new();
        match o.length(&g("SU(7)")) {
            Err(Error::Incomplete { group, .. }) => assert_eq!(group, g("SU(7)")),
            other => panic!("{other:?}"),
        }
        assert!(o.depth(&g("E8")).is_err());
        assert_eq!(o.cached_entries(), 0);
    }

    #[test]
    fn additivity_and_torus_shift() {
        let o = Oracle::new();
        let types = curated_simple_types();
        for a in &types {
            for b in &types {
                if a.dim() + b.dim() > 40 {
                    continue;
                }
                let ga = GroupType::simple(*a);
                let gb = GroupType::simple(*b);
                let prod = ga.product(&gb);
                assert_eq!(
                    o.length(&prod).unwrap(),
                    o.length(&ga).unwrap() + o.length(&gb).unwrap(),
                    "{prod}"
                );
                for z in 0..3 {
                    assert_eq!(o.depth(&prod.with_torus(z)).unwrap(), o.depth(&prod).unwrap() + z as u64);
                }
            }
        }
    }

    #[test]
    fn depth_floor() {
        let o = Oracle::new();
        for s in curated_simple_types() {
            for z in 0..3 {
                let grp = GroupType::simple(s).with_torus(z);
                let d = o.depth(&grp).unwrap();
                assert!(d >= 2);
                let su2 = s == SimpleType::su(2).unwrap();
                assert_eq!(d == 2, su2 && z == 0, "{grp}");
            }
        }
        assert_eq!(o.depth(&GroupType::torus(1)).unwrap(), 1);
        assert_eq!(o.depth(&GroupType::torus(2)).unwrap(), 2);
    }

    #[test]
    fn memo_agrees_with_uncached_recomputation() {
        let cached = Oracle::new();
        let fresh = Oracle::uncached();
        let small: Vec<SimpleType> =
            curated_simple_types().into_iter().filter(|s| s.dim() <= 10).collect();
        let mut rng = StdRng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 100 {
            let k = rng.gen_range(1..=2);
            let factors: Vec<SimpleType> = (0..k).map(|_| small[rng.gen_range(0..small.len())]).collect();
            let grp = GroupType::new(rng.gen_range(0..3), factors);
            if grp.dim() > 16 {
                continue;
            }
            assert_eq!(cached.invariants(&grp).unwrap(), fresh.invariants(&grp).unwrap(), "{grp}");
            checked += 1;
        }
    }

    #[test]
    fn cross_validate_rows() {
        let o = Oracle::new();
        let scope: Vec<GroupType> = (1..=5).map(|k| GroupType::power(SimpleType::su(2).unwrap(), k))
            .chain((1..=10).map(GroupType::torus))
            .collect();
        let rows = o.cross_validate(&scope).unwrap();
        assert!(rows.iter().all(|r| r.pass));
        assert_eq!(rows[4].oracle_depth, 6);
        assert_eq!(rows[9].oracle_l, 5);
        let line = serde_json::to_string(&rows[0]).unwrap();
        assert_eq!(serde_json::from_str::<CrossRow>(&line).unwrap(), rows[0]);
    }
}
