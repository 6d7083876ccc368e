//! Interpolation maps: a diagram becomes the 0/1 matrix of labelings that
//! are constant on its blocks.

use num_traits::One;
use serde_json::json;
use thiserror::Error;

use super::group::{perm_basis_index, GroupElement, Monomial, RepSpec};
use super::matrix::{rank_of, MatrixQ, SparseVec};
use crate::diagrams::{ColoredPartition, Partition, Sign};
use crate::poly::{q, Q};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixRepError {
    #[error("n = {n} is too large for exhaustive group averaging (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error(
        "functor needs loop weight {expected} with numeric coefficients, found loop weight {found}"
    )]
    SpecializationMismatch { expected: String, found: String },
    #[error("functor expects {expected} diagrams")]
    WrongCategory { expected: &'static str },
    #[error(transparent)]
    Category(#[from] crate::category::CategoryError),
}

/// Visits every assignment of values `0..base` to `slots` positions.
fn for_each_assignment(slots: usize, base: usize, mut f: impl FnMut(&[usize])) {
    let mut vals = vec![0usize; slots];
    if base == 0 && slots > 0 {
        return;
    }
    loop {
        f(&vals);
        let mut i = slots;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            vals[i] += 1;
            if vals[i] < base {
                break;
            }
            vals[i] = 0;
        }
    }
}

fn flat(digits: impl Iterator<Item = usize>, d: usize) -> usize {
    digits.fold(0, |acc, x| acc * d + x)
}

/// `T_p` on `(C^n)^{⊗k} → (C^n)^{⊗l}` for any partition.
pub fn t_partition(p: &Partition, n: usize) -> MatrixQ {
    let (k, l) = p.size();
    let rgs = p.rgs();
    let mut trip = Vec::new();
    for_each_assignment(p.num_blocks(), n, |vals| {
        let col = flat(rgs[..k].iter().map(|&b| vals[b]), n);
        let row = flat(rgs[k..].iter().map(|&b| vals[b]), n);
        trip.push((row, col, Q::one()));
    });
    MatrixQ::from_triplets(n.pow(l as u32), n.pow(k as u32), trip)
}

/// `T_p` for an even partition; identical to [`t_partition`], named for
/// the equivariant setting.
pub fn t_even(p: &Partition, n: usize) -> MatrixQ {
    debug_assert!(p.is_even());
    t_partition(p, n)
}

/// `T_(p,z)` on `V^{⊗k} → V^{⊗l}`, `V = C^{2n}`: block `b` with index
/// `i_b` and sign `s_b` labels vertex `v` by `e^{i_b}_{s_b z_v}`.
pub fn t_colored(c: &ColoredPartition, n: usize) -> MatrixQ {
    let (k, l) = (c.k(), c.l());
    let rgs = c.base().rgs();
    let z = c.labels();
    let d = 2 * n;
    let mut trip = Vec::new();
    // value v in 0..2n encodes (index v/2, sign by parity)
    for_each_assignment(c.base().num_blocks(), d, |vals| {
        let label = |pos: usize| {
            let v = vals[rgs[pos]];
            let s = if v % 2 == 0 { Sign::Plus } else { Sign::Minus };
            perm_basis_index(v / 2, s * z[pos])
        };
        let col = flat((0..k).map(label), d);
        let row = flat((k..k + l).map(label), d);
        trip.push((row, col, Q::one()));
    });
    MatrixQ::from_triplets(d.pow(l as u32), d.pow(k as u32), trip)
}

/// Checks `T ρ(g)^{⊗k} = ρ(g)^{⊗l} T` for the generators of `H_n`.
pub fn equivariance_check(t: &MatrixQ, k: usize, l: usize, spec: RepSpec) -> CheckReport {
    let params = json!({"k": k, "l": l, "n": spec.n, "rep": format!("{:?}", spec.kind)});
    for g in GroupElement::generators(spec.n) {
        let m = spec.monomial(&g);
        let lhs = t.mul(&m.tensor_power(k).to_matrix());
        let rhs = m.tensor_power(l).to_matrix().mul(t);
        if lhs != rhs {
            return CheckReport::fail("equivariance", params, format!("fails for {g:?}"));
        }
    }
    CheckReport::new("equivariance", params, true)
}

pub const HOM_DIM_LIMIT: usize = 4;

/// The group-averaging projector onto invariants of `W^{⊗m}`; acting on
/// `Hom(W^{⊗k}, W^{⊗l}) ≅ W^{⊗(k+l)}` since each `ρ(g)` is orthogonal.
pub fn averaging_projector(spec: RepSpec, m: usize) -> Result<MatrixQ, MatrixRepError> {
    if spec.n > HOM_DIM_LIMIT {
        return Err(MatrixRepError::TooLarge {
            n: spec.n,
            limit: HOM_DIM_LIMIT,
        });
    }
    let group = GroupElement::all(spec.n);
    let weight = q(1, group.len() as i64);
    let size = spec.dim().pow(m as u32);
    let powers: Vec<Monomial> = group
        .iter()
        .map(|g| spec.monomial(g).tensor_power(m))
        .collect();
    let mut trip = Vec::with_capacity(size * group.len());
    for x in 0..size {
        for p in &powers {
            let s = Q::from_integer(p.sign[x].value().into());
            trip.push((p.image[x], x, &weight * s));
        }
    }
    Ok(MatrixQ::from_triplets(size, size, trip))
}

/// `dim Hom_{H_n}(W^{⊗k}, W^{⊗l})` as the rank of the averaging projector.
pub fn hom_dim(spec: RepSpec, k: usize, l: usize) -> Result<usize, MatrixRepError> {
    Ok(averaging_projector(spec, k + l)?.rank())
}

/// Rank of the span of a family of matrices of equal shape.
pub fn span_rank(ms: &[MatrixQ]) -> usize {
    let vs: Vec<SparseVec> = ms.iter().map(MatrixQ::flatten).collect();
    rank_of(&vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{colored_classes, colored_stack, even_partitions, partitions, stack};
    use crate::poly::qi;

    #[test]
    fn identity_and_cap() {
        assert_eq!(t_even(&Partition::identity(1), 3), MatrixQ::identity(3));
        let cap: Partition = "2>0: {1,2}".parse().unwrap();
        let t = t_even(&cap, 2);
        assert_eq!((t.rows(), t.cols()), (1, 4));
        assert_eq!(t.get(0, 0), qi(1));
        assert_eq!(t.get(0, 3), qi(1));
        assert_eq!(t.get(0, 1), qi(0));
        assert_eq!(
            t_colored(&Partition::identity(1).uncolored(), 2),
            MatrixQ::identity(4)
        );
    }

    #[test]
    fn minus_token_swaps() {
        let t = t_colored(&ColoredPartition::token(Sign::Minus), 1);
        assert_eq!(
            t,
            MatrixQ::from_triplets(2, 2, [(0, 1, qi(1)), (1, 0, qi(1))])
        );
    }

    /// Direct evaluation of the block condition on every labeling.
    fn brute_t(p: &Partition, n: usize) -> MatrixQ {
        let (k, l) = p.size();
        let mut trip = Vec::new();
        for_each_assignment(k + l, n, |labels| {
            let ok = (0..k + l).all(|a| {
                (0..k + l).all(|b| p.block_of_pos(a) != p.block_of_pos(b) || labels[a] == labels[b])
            });
            if ok {
                trip.push((
                    flat(labels[k..].iter().copied(), n),
                    flat(labels[..k].iter().copied(), n),
                    qi(1),
                ));
            }
        });
        MatrixQ::from_triplets(n.pow(l as u32), n.pow(k as u32), trip)
    }

    #[test]
    fn matches_brute_force() {
        for p in partitions(2, 2) {
            assert_eq!(t_partition(&p, 3), brute_t(&p, 3));
        }
    }

    #[test]
    fn class_invariance() {
        let base = Partition::identity(1);
        let a = ColoredPartition::new(base.clone(), vec![Sign::Plus, Sign::Minus]).unwrap();
        let b = ColoredPartition::new(base, vec![Sign::Minus, Sign::Plus]).unwrap();
        assert_eq!(t_colored(&a, 2), t_colored(&b, 2));
    }

    #[test]
    fn composition_with_loops() {
        for n in [2usize, 3] {
            for pk in 0..=2 {
                for pl in 0..=2 {
                    for m in 0..=2 {
                        for p in even_partitions(pk, pl) {
                            for qd in even_partitions(pl, m) {
                                let st = stack(&qd, &p).unwrap();
                                let lhs = t_even(&qd, n).mul(&t_even(&p, n));
                                let rhs = t_even(&st.composite, n)
                                    .scale(&qi((n as i64).pow(st.loops as u32)));
                                assert_eq!(lhs, rhs);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn colored_composition_with_loops() {
        let n = 2;
        for pk in 0..=1 {
            for pl in 0..=2 {
                for m in 0..=1 {
                    for p in colored_classes(pk, pl) {
                        for qd in colored_classes(pl, m) {
                            let lhs = t_colored(&qd, n).mul(&t_colored(&p, n));
                            let rhs = match colored_stack(&qd, &p).unwrap() {
                                None => MatrixQ::zeros(lhs.rows(), lhs.cols()),
                                Some(st) => t_colored(&st.composite, n)
                                    .scale(&qi(4i64.pow(st.loops as u32))),
                            };
                            assert_eq!(lhs, rhs, "{qd} after {p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hom_dims_small() {
        assert_eq!(hom_dim(RepSpec::reflection(2), 1, 1).unwrap(), 1);
        assert_eq!(hom_dim(RepSpec::permutation(3), 1, 1).unwrap(), 3);
        assert!(matches!(
            hom_dim(RepSpec::reflection(5), 1, 1),
            Err(MatrixRepError::TooLarge { .. })
        ));
    }

    #[test]
    fn projector_rank_equals_trace() {
        for spec in [
            RepSpec::reflection(2),
            RepSpec::permutation(2),
            RepSpec::reflection(3),
        ] {
            for m in 0..=3 {
                let p = averaging_projector(spec, m).unwrap();
                assert_eq!(p.mul(&p), p);
                assert_eq!(Q::from_integer((p.rank() as i64).into()), p.trace());
            }
        }
    }

    #[test]
    fn equivariance_negative_control() {
        let t = MatrixQ::from_triplets(2, 2, [(0, 0, qi(1))]);
        assert!(!equivariance_check(&t, 1, 1, RepSpec::reflection(2)).pass);
        let cap: Partition = "2>0: {1,2}".parse().unwrap();
        assert!(equivariance_check(&t_even(&cap, 2), 2, 0, RepSpec::reflection(2)).pass);
    }
}
