//! Bounded enumeration of canonical group types.

use crate::group::{GroupType, SimpleType};

/// Every canonical group (any torus rank, including the trivial group) with
/// `dim ≤ max_dim`, optionally restricted to classical factors of degree at
/// most `max_degree`. Order is deterministic.
pub fn groups_up_to_dim(max_dim: u64, max_degree: Option<u32>) -> Vec<GroupType> {
    let simples: Vec<SimpleType> = SimpleType::all_up_to_dim(max_dim)
        .into_iter()
        .filter(|s| match (s.degree(), max_degree) {
            (Some(n), Some(cap)) => n <= cap,
            _ => true,
        })
        .collect();
    let mut out = Vec::new();
    let mut factors = Vec::new();
    extend(&simples, 0, max_dim, &mut factors, &mut out);
    out
}

fn extend(
    simples: &[SimpleType],
    from: usize,
    budget: u64,
    factors: &mut Vec<SimpleType>,
    out: &mut Vec<GroupType>,
) {
    for z in 0..=budget {
        out.push(GroupType::new(z as u32, factors.iter().copied()));
    }
    for (i, s) in simples.iter().enumerate().skip(from) {
        if s.dim() > budget {
            continue;
        }
        factors.push(*s);
        extend(simples, i, budget - s.dim(), factors, out);
        factors.pop();
    }
}
