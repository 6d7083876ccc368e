//! Ranks of families of morphisms over the fraction field `Q(t)`.
//!
//! The default strategy specializes `t` at two seeded random rationals and
//! takes the larger rank; if the two disagree the symbolic fraction-free
//! elimination decides.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::Morphism;
use crate::diagrams::ColoredPartition;
use crate::matrix_rep::{rank_of, SparseVec};
use crate::poly::{PolyQ, Q};

pub const DEFAULT_SEED: u64 = 0x5eed_0c7a;

fn coordinates(ms: &[Morphism]) -> Vec<Vec<(usize, PolyQ)>> {
    let mut index: BTreeMap<&ColoredPartition, usize> = BTreeMap::new();
    for m in ms {
        for d in m.terms().keys() {
            let next = index.len();
            index.entry(d).or_insert(next);
        }
    }
    ms.iter()
        .map(|m| {
            let mut v: Vec<(usize, PolyQ)> = m
                .terms()
                .iter()
                .map(|(d, c)| (index[d], c.clone()))
                .collect();
            v.sort_by_key(|(i, _)| *i);
            v
        })
        .collect()
}

/// Two distinct random rationals with large numerators.
pub fn specialization_points(seed: u64) -> [Q; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let num: i64 = rng.gen_range(1_000_003..1_000_000_000);
        let den: i64 = rng.gen_range(1..1_000_000);
        Q::new(BigInt::from(num), BigInt::from(den))
    };
    let a = draw();
    let mut b = draw();
    while b == a {
        b = draw();
    }
    [a, b]
}

fn rank_at(vs: &[Vec<(usize, PolyQ)>], at: &Q) -> usize {
    let spec: Vec<SparseVec> = vs
        .iter()
        .map(|v| {
            v.iter()
                .map(|(i, c)| (*i, c.eval(at)))
                .filter(|(_, x)| *x != Q::from_integer(0.into()))
                .collect()
        })
        .collect();
    rank_of(&spec)
}

/// Exact rank over `Q(t)` by fraction-free elimination in `Q[t]`.
pub fn symbolic_rank(ms: &[Morphism]) -> usize {
    let mut rows: Vec<BTreeMap<usize, PolyQ>> = coordinates(ms)
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    let mut rank = 0;
    while let Some(pos) = rows.iter().position(|r| !r.is_empty()) {
        let pivot_row = rows.swap_remove(pos);
        let (&col, piv) = pivot_row.iter().next().expect("nonempty");
        rank += 1;
        for r in rows.iter_mut() {
            let Some(a) = r.get(&col).cloned() else {
                continue;
            };
            // r ← piv·r − a·pivot_row
            let mut next: BTreeMap<usize, PolyQ> = BTreeMap::new();
            for (i, c) in r.iter() {
                next.insert(*i, piv * c);
            }
            for (i, c) in pivot_row.iter() {
                let e = next.entry(*i).or_insert_with(PolyQ::zero);
                *e = &*e - &(&a * c);
            }
            next.retain(|_, c| !c.is_zero());
            *r = next;
        }
    }
    rank
}

/// Rank over `Q(t)` with the two-point specialization policy.
pub fn fraction_rank(ms: &[Morphism], seed: u64) -> usize {
    let vs = coordinates(ms);
    let [a, b] = specialization_points(seed);
    let (ra, rb) = (rank_at(&vs, &a), rank_at(&vs, &b));
    if ra == rb {
        ra
    } else {
        symbolic_rank(ms)
    }
}
