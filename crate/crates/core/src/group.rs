//! Group types: compact connected Lie groups up to isogeny.
//!
//! A compact connected group is `G = G'·Z(G)^0` with `G'` a commuting product of
//! simple factors and `Z(G)^0` a torus. Length and depth only depend on the
//! isogeny type, so a [`GroupType`] records nothing more than the torus rank and
//! the multiset of simple factors.
//!
//! Low-rank coincidences (`SO_3 = SU_2`, `SO_5 = Sp_4`, `SO_6 = SU_4`, ...) are
//! resolved when a type is built, so every value of [`SimpleType`] is canonical.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Family of a simple factor. The declaration order is the canonical order used
/// to normalize factor multisets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    SU,
    Sp,
    SO,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::SU,
        Family::Sp,
        Family::SO,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    pub const EXCEPTIONAL: [Family; 5] =
        [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::SU | Family::Sp | Family::SO)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::SO => "SO",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One canonical simple factor.
///
/// Classical factors carry the dimension `n` of the natural module; exceptional
/// factors store `0`. Ordering is lexicographic on `(family, degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    degree: u32,
}

impl SimpleType {
    pub const G2: SimpleType = SimpleType { family: Family::G2, degree: 0 };
    pub const F4: SimpleType = SimpleType { family: Family::F4, degree: 0 };
    pub const E6: SimpleType = SimpleType { family: Family::E6, degree: 0 };
    pub const E7: SimpleType = SimpleType { family: Family::E7, degree: 0 };
    pub const E8: SimpleType = SimpleType { family: Family::E8, degree: 0 };

    /// Build a canonical simple type. Non-canonical degrees (`SU_1`, `Sp_2`,
    /// `SO_n` with `n < 7`, odd `Sp`) are rejected; use [`canonicalize`] for those.
    pub fn new(family: Family, degree: u32) -> Result<SimpleType> {
        let ok = match family {
            Family::SU => degree >= 2,
            Family::Sp => degree >= 4 && degree % 2 == 0,
            Family::SO => degree >= 7,
            _ => true,
        };
        if !ok {
            return Err(Error::MalformedType(format!(
                "{family}({degree}) is not a canonical simple type"
            )));
        }
        let degree = if family.is_classical() { degree } else { 0 };
        Ok(SimpleType { family, degree })
    }

    pub fn su(n: u32) -> Result<SimpleType> {
        SimpleType::new(Family::SU, n)
    }

    pub fn sp(n: u32) -> Result<SimpleType> {
        SimpleType::new(Family::Sp, n)
    }

    pub fn so(n: u32) -> Result<SimpleType> {
        SimpleType::new(Family::SO, n)
    }

    pub fn exceptional(family: Family) -> Result<SimpleType> {
        if family.is_classical() {
            return Err(Error::MalformedType(format!("{family} needs a degree")));
        }
        Ok(SimpleType { family, degree: 0 })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `n` for classical factors, `None` for exceptional ones.
    pub fn degree(&self) -> Option<u32> {
        self.family.is_classical().then_some(self.degree)
    }

    pub fn is_classical(&self) -> bool {
        self.family.is_classical()
    }

    pub fn dims(&self) -> Dims {
        let n = self.degree as u64;
        let (dim, rank) = match self.family {
            Family::SU => (n * n - 1, n - 1),
            Family::Sp => (n * (n + 1) / 2, n / 2),
            Family::SO => (n * (n - 1) / 2, n / 2),
            Family::G2 => (14, 2),
            Family::F4 => (52, 4),
            Family::E6 => (78, 6),
            Family::E7 => (133, 7),
            Family::E8 => (248, 8),
        };
        Dims { dim, rank }
    }

    pub fn dim(&self) -> u64 {
        self.dims().dim
    }

    pub fn rank(&self) -> u64 {
        self.dims().rank
    }

    /// Every canonical simple type of dimension at most `max_dim`, in canonical order.
    pub fn all_up_to_dim(max_dim: u64) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            if family.is_classical() {
                let mut n = 2;
                loop {
                    match SimpleType::new(family, n) {
                        Ok(s) if s.dim() > max_dim => break,
                        Ok(s) => out.push(s),
                        Err(_) => {}
                    }
                    n += 1;
                }
            } else {
                let s = SimpleType { family, degree: 0 };
                if s.dim() <= max_dim {
                    out.push(s);
                }
            }
        }
        out
    }

    /// Every canonical classical type with degree at most `max_degree`, plus the
    /// five exceptional types.
    pub fn all_up_to_degree(max_degree: u32) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in [Family::SU, Family::Sp, Family::SO] {
            for n in 2..=max_degree {
                if let Ok(s) = SimpleType::new(family, n) {
                    out.push(s);
                }
            }
        }
        out.extend(Family::EXCEPTIONAL.map(|f| SimpleType { family: f, degree: 0 }));
        out
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            Some(n) => write!(f, "{}({})", self.family, n),
            None => write!(f, "{}", self.family),
        }
    }
}

impl Serialize for SimpleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        let g: GroupType = text.parse().map_err(serde::de::Error::custom)?;
        match (g.torus_rank(), g.factors()) {
            (0, [s]) => Ok(*s),
            _ => Err(serde::de::Error::custom(format!("`{text}` is not a simple type"))),
        }
    }
}

/// Dimension and rank of a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Dims {
    pub dim: u64,
    pub rank: u64,
}

impl Add for Dims {
    type Output = Dims;

    fn add(self, rhs: Dims) -> Dims {
        Dims { dim: self.dim + rhs.dim, rank: self.rank + rhs.rank }
    }
}

impl Sum for Dims {
    fn sum<I: Iterator<Item = Dims>>(iter: I) -> Dims {
        iter.fold(Dims::default(), Add::add)
    }
}

/// A compact connected Lie group up to isogeny: torus rank plus a sorted
/// multiset of canonical simple factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroupType {
    torus: u32,
    factors: Vec<SimpleType>,
}

impl GroupType {
    pub fn new(torus: u32, factors: impl IntoIterator<Item = SimpleType>) -> GroupType {
        let mut factors: Vec<SimpleType> = factors.into_iter().collect();
        factors.sort_unstable();
        GroupType { torus, factors }
    }

    pub fn trivial() -> GroupType {
        GroupType::default()
    }

    pub fn torus(rank: u32) -> GroupType {
        GroupType { torus: rank, factors: Vec::new() }
    }

    pub fn simple(s: SimpleType) -> GroupType {
        GroupType { torus: 0, factors: vec![s] }
    }

    /// `S^k`.
    pub fn power(s: SimpleType, k: u32) -> GroupType {
        GroupType { torus: 0, factors: vec![s; k as usize] }
    }

    pub fn torus_rank(&self) -> u32 {
        self.torus
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.torus == 0 && self.factors.is_empty()
    }

    pub fn is_torus(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_semisimple(&self) -> bool {
        self.torus == 0
    }

    /// The derived subgroup `G'`.
    pub fn derived(&self) -> GroupType {
        GroupType { torus: 0, factors: self.factors.clone() }
    }

    pub fn with_torus(&self, torus: u32) -> GroupType {
        GroupType { torus, factors: self.factors.clone() }
    }

    pub fn product(&self, other: &GroupType) -> GroupType {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupType::new(self.torus + other.torus, factors)
    }

    /// Distinct simple factors with their multiplicities, in canonical order.
    pub fn multiplicities(&self) -> Vec<(SimpleType, u32)> {
        let mut out: Vec<(SimpleType, u32)> = Vec::new();
        for s in &self.factors {
            match out.last_mut() {
                Some((t, k)) if t == s => *k += 1,
                _ => out.push((*s, 1)),
            }
        }
        out
    }

    /// Remove `count` copies of `s` and multiply in `replacement`.
    /// Returns `None` when `G` has fewer than `count` copies of `s`.
    pub fn replace(&self, s: SimpleType, count: usize, replacement: &GroupType) -> Option<GroupType> {
        let mut factors = self.factors.clone();
        for _ in 0..count {
            let idx = factors.iter().position(|t| *t == s)?;
            factors.remove(idx);
        }
        factors.extend_from_slice(&replacement.factors);
        Some(GroupType::new(self.torus + replacement.torus, factors))
    }

    pub fn dims(&self) -> Dims {
        let torus = Dims { dim: self.torus as u64, rank: self.torus as u64 };
        torus + self.factors.iter().map(SimpleType::dims).sum::<Dims>()
    }

    pub fn dim(&self) -> u64 {
        self.dims().dim
    }

    pub fn rank(&self) -> u64 {
        self.dims().rank
    }
}

impl From<SimpleType> for GroupType {
    fn from(s: SimpleType) -> GroupType {
        GroupType::simple(s)
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !std::mem::take(&mut first) {
                f.write_str(" x ")
            } else {
                Ok(())
            }
        };
        for (s, k) in self.multiplicities() {
            sep(f)?;
            if k == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{k}")?;
            }
        }
        match self.torus {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("T")?;
            }
            z => {
                sep(f)?;
                write!(f, "T^{z}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupType> {
        crate::parse::parse_group(s)
    }
}

impl Serialize for GroupType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A group as written, before low-rank coincidences are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawGroup {
    SU(u32),
    Sp(u32),
    SO(u32),
    Exceptional(Family),
    Torus(u32),
}

/// Resolve a raw family/degree into its canonical type:
/// `SU_1, SO_1 -> 1`, `SO_2 -> T_1`, `Sp_2, SO_3 -> SU_2`, `SO_4 -> SU_2^2`,
/// `SO_5 -> Sp_4`, `SO_6 -> SU_4`.
pub fn canonicalize(raw: RawGroup) -> Result<GroupType> {
    let simple = |f, n| SimpleType::new(f, n).map(GroupType::simple);
    match raw {
        RawGroup::SU(0) | RawGroup::Sp(0) | RawGroup::SO(0) => {
            Err(Error::MalformedType("degree must be positive".into()))
        }
        RawGroup::SU(1) => Ok(GroupType::trivial()),
        RawGroup::SU(n) => simple(Family::SU, n),
        RawGroup::Sp(n) if n % 2 == 1 => {
            Err(Error::MalformedType(format!("Sp({n}) needs an even degree")))
        }
        RawGroup::Sp(2) => simple(Family::SU, 2),
        RawGroup::Sp(n) => simple(Family::Sp, n),
        RawGroup::SO(1) => Ok(GroupType::trivial()),
        RawGroup::SO(2) => Ok(GroupType::torus(1)),
        RawGroup::SO(3) => simple(Family::SU, 2),
        RawGroup::SO(4) => Ok(GroupType::power(SimpleType::su(2)?, 2)),
        RawGroup::SO(5) => simple(Family::Sp, 4),
        RawGroup::SO(6) => simple(Family::SU, 4),
        RawGroup::SO(n) => simple(Family::SO, n),
        RawGroup::Exceptional(f) => SimpleType::exceptional(f).map(GroupType::simple),
        RawGroup::Torus(k) => Ok(GroupType::torus(k)),
    }
}

/// Canonical `Cl_n` for a classical family at any degree in its parse range.
pub fn classical(family: Family, n: u32) -> Result<GroupType> {
    match family {
        Family::SU => canonicalize(RawGroup::SU(n)),
        Family::Sp => canonicalize(RawGroup::Sp(n)),
        Family::SO => canonicalize(RawGroup::SO(n)),
        f => Err(Error::MalformedType(format!("{f} is not classical"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su(n: u32) -> SimpleType {
        SimpleType::su(n).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonicalize(RawGroup::SO(3)).unwrap(), GroupType::simple(su(2)));
        assert_eq!(canonicalize(RawGroup::SO(2)).unwrap(), GroupType::torus(1));
        assert_eq!(
            canonicalize(RawGroup::SO(5)).unwrap(),
            GroupType::simple(SimpleType::sp(4).unwrap())
        );
        assert_eq!(canonicalize(RawGroup::SU(5)).unwrap(), GroupType::simple(su(5)));
        assert_eq!(canonicalize(RawGroup::SO(6)).unwrap(), GroupType::simple(su(4)));
        assert_eq!(canonicalize(RawGroup::SO(4)).unwrap(), GroupType::power(su(2), 2));
        assert_eq!(canonicalize(RawGroup::Sp(2)).unwrap(), GroupType::simple(su(2)));
        assert!(canonicalize(RawGroup::SU(1)).unwrap().is_trivial());
        assert!(canonicalize(RawGroup::SO(1)).unwrap().is_trivial());
    }

    #[test]
    fn canonicalize_rejects_malformed() {
        assert!(matches!(canonicalize(RawGroup::Sp(5)), Err(Error::MalformedType(_))));
        assert!(matches!(canonicalize(RawGroup::SU(0)), Err(Error::MalformedType(_))));
        assert!(matches!(canonicalize(RawGroup::SO(0)), Err(Error::MalformedType(_))));
    }

    #[test]
    fn raw_constructor_rejects_non_canonical() {
        assert!(SimpleType::so(6).is_err());
        assert!(SimpleType::sp(2).is_err());
        assert!(SimpleType::su(1).is_err());
        assert!(SimpleType::sp(7).is_err());
        assert!(SimpleType::so(7).is_ok());
    }

    #[test]
    fn dims_examples() {
        assert_eq!(SimpleType::E8.dims(), Dims { dim: 248, rank: 8 });
        assert_eq!(su(3).dims(), Dims { dim: 8, rank: 2 });
        let g = GroupType::new(2, [SimpleType::sp(6).unwrap()]);
        assert_eq!(g.dims(), Dims { dim: 23, rank: 5 });
    }

    #[test]
    fn positive_roots_at_least_twice_rank() {
        for s in SimpleType::all_up_to_degree(100) {
            let Dims { dim, rank } = s.dims();
            assert!(2 * rank <= dim - rank, "{s}");
            assert_eq!((dim - rank) % 2, 0, "{s}");
        }
    }

    #[test]
    fn display_groups_powers() {
        let g = GroupType::new(3, [su(2), su(2), SimpleType::sp(6).unwrap()]);
        assert_eq!(g.to_string(), "SU(2)^2 x Sp(6) x T^3");
        assert_eq!(GroupType::torus(1).to_string(), "T");
        assert_eq!(GroupType::trivial().to_string(), "1");
    }

    #[test]
    fn order_is_family_then_degree() {
        let mut v = [SimpleType::E8, SimpleType::so(7).unwrap(), su(9), su(2), SimpleType::sp(4).unwrap()];
        v.sort();
        let names: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["SU(2)", "SU(9)", "Sp(4)", "SO(7)", "E8"]);
    }
}
