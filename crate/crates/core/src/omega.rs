//! The functor from even partitions to the Karoubi envelope of coloured
//! partitions at doubled loop weight: strands become `e′`-compressed
//! coloured strands, and each diagram is rescaled by `2^{(k+l)/2 - s}` for
//! `s` blocks.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::category::{
    Category, CategoryError, CategoryKind, KaroubiMorphism, KaroubiObject, Morphism,
};
use crate::diagrams::{colored_classes, even_partitions, ColoredPartition, Partition, Sign};
use crate::matrix_rep::{functor_g, functor_h, MatrixQ, MatrixRepError};
use crate::poly::{q, qi, PolyQ, Q};
use crate::rank::fraction_rank;
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("expected a morphism of even partitions")]
    NotEven,
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Matrix(#[from] MatrixRepError),
}

/// Coloured partitions with loop weight twice that of `even`.
pub fn target_category(even: &Category) -> Category {
    Category::new(
        CategoryKind::ColoredPartitions,
        even.loop_weight.scale(&qi(2)),
    )
}

fn token(cat: &Category, s: Sign) -> Morphism {
    Morphism::from_diagram(cat, ColoredPartition::token(s), PolyQ::one())
        .expect("token is coloured")
}

/// `½(id − token(−1))` in the given coloured category.
pub fn e_prime_in(cat: &Category) -> Morphism {
    let d = token(cat, Sign::Plus)
        .sub(&token(cat, Sign::Minus))
        .expect("same category");
    d.scale(&PolyQ::constant(q(1, 2)))
}

/// `½(id + token(−1))` in the given coloured category.
pub fn e_dblprime_in(cat: &Category) -> Morphism {
    let d = token(cat, Sign::Plus)
        .add(&token(cat, Sign::Minus))
        .expect("same category");
    d.scale(&PolyQ::constant(q(1, 2)))
}

/// `e′` on one strand of coloured partitions at loop weight `2t`.
pub fn e_prime() -> Morphism {
    e_prime_in(&Category::colored_2t())
}

/// `e″ = id − e′` at loop weight `2t`.
pub fn e_dblprime() -> Morphism {
    e_dblprime_in(&Category::colored_2t())
}

/// `(e′)^{⊗k}`.
pub fn e_prime_power(cat: &Category, k: usize) -> Morphism {
    let e = e_prime_in(cat);
    (0..k).fold(Morphism::identity(cat, 0), |acc, _| {
        acc.tensor(&e).expect("same category")
    })
}

/// `(e′)^{⊗l} ∘ g ∘ (e′)^{⊗k}` for a coloured `g: k → l`.
pub fn compress(g: &Morphism) -> Morphism {
    let cat = g.category();
    let top = e_prime_power(cat, g.target());
    let bottom = e_prime_power(cat, g.source());
    top.compose(g)
        .and_then(|m| m.compose(&bottom))
        .expect("sizes match")
}

/// `2^{(k+l)/2 - s}` for an even partition with `s` blocks.
pub fn block_scale(p: &Partition) -> Q {
    let (k, l) = p.size();
    let e = ((k + l) / 2) as i64 - p.num_blocks() as i64;
    debug_assert!(e >= 0);
    Q::from_integer(BigInt::from(2).pow(e as u32))
}

/// `Ω₀(f)` as a plain coloured morphism, scaling each basis diagram by its
/// own block count.
pub fn omega0_raw(f: &Morphism) -> Result<Morphism, OmegaError> {
    if f.category().kind != CategoryKind::EvenPartitions {
        return Err(OmegaError::NotEven);
    }
    let cat = target_category(f.category());
    let mut lifted = Morphism::zero(&cat, f.source(), f.target());
    for (d, c) in f.terms() {
        let term = Morphism::from_diagram(&cat, d.clone(), c.scale(&block_scale(d.base())))?;
        lifted = lifted.add(&term)?;
    }
    Ok(compress(&lifted))
}

/// `([k̃], (e′)^{⊗k})` in the target of `Ω`.
pub fn omega_strands(even: &Category, k: usize) -> KaroubiObject {
    KaroubiObject::single(e_prime_power(&target_category(even), k))
        .expect("e′ powers are idempotent")
}

/// `Ω₀(f)` between `([k̃], (e′)^{⊗k})` and `([l̃], (e′)^{⊗l})`.
pub fn omega0(f: &Morphism) -> Result<KaroubiMorphism, OmegaError> {
    let raw = omega0_raw(f)?;
    let src = omega_strands(f.category(), f.source());
    let tgt = omega_strands(f.category(), f.target());
    Ok(KaroubiMorphism::new(&src, &tgt, vec![vec![raw]])?)
}

/// `Ω(([k], e)) = ([k̃], Ω₀(e))`, summand by summand.
pub fn omega_object(obj: &KaroubiObject) -> Result<KaroubiObject, OmegaError> {
    let cat = target_category(obj.category());
    let summands = obj
        .summands()
        .iter()
        .map(|(k, e)| Ok((*k, omega0_raw(e)?)))
        .collect::<Result<Vec<_>, OmegaError>>()?;
    Ok(KaroubiObject::new(&cat, summands)?)
}

/// `Ω` on a morphism of the Karoubi envelope, entry by entry.
pub fn omega_morphism(f: &KaroubiMorphism) -> Result<KaroubiMorphism, OmegaError> {
    let src = omega_object(f.source())?;
    let tgt = omega_object(f.target())?;
    let entries = f
        .entries()
        .iter()
        .map(|row| row.iter().map(omega0_raw).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(KaroubiMorphism::new(&src, &tgt, entries)?)
}

fn even_basis(cat: &Category, k: usize, l: usize) -> Vec<Morphism> {
    even_partitions(k, l)
        .into_iter()
        .map(|p| Morphism::from_partition(cat, p).expect("even"))
        .collect()
}

/// `Ω₀(q ∘ p) = Ω₀(q) ∘ Ω₀(p)` for all even basis pairs with sizes `≤ kmax`.
pub fn verify_functoriality(kmax: usize) -> CheckReport {
    let cat = Category::even();
    let mut cases = Vec::new();
    for k in 0..=kmax {
        for l in 0..=kmax {
            for m in 0..=kmax {
                if (k + l) % 2 == 0 && (l + m) % 2 == 0 {
                    cases.push((k, l, m));
                }
            }
        }
    }
    let params = json!({"kmax": kmax});
    let failure = cases.par_iter().find_map_first(|&(k, l, m)| {
        let ps = even_basis(&cat, k, l);
        let qs = even_basis(&cat, l, m);
        let ops: Vec<Morphism> = ps.iter().map(|p| omega0_raw(p).unwrap()).collect();
        let oqs: Vec<Morphism> = qs.iter().map(|q| omega0_raw(q).unwrap()).collect();
        for (p, op) in ps.iter().zip(&ops) {
            for (q, oq) in qs.iter().zip(&oqs) {
                let lhs = omega0_raw(&q.compose(p).unwrap()).unwrap();
                let rhs = oq.compose(op).unwrap();
                if lhs != rhs {
                    return Some(format!("{q} after {p}: {}", lhs.sub(&rhs).unwrap()));
                }
            }
        }
        None
    });
    match failure {
        None => CheckReport::new("omega functoriality", params, true),
        Some(why) => CheckReport::fail("omega functoriality", params, why),
    }
}

/// `Ω₀(f ⊗ g) = Ω₀(f) ⊗ Ω₀(g)` on all even basis pairs with total size `≤ max`.
pub fn verify_monoidal(max: usize) -> CheckReport {
    let cat = Category::even();
    let mut basis = Vec::new();
    for k in 0..=max {
        for l in 0..=max - k {
            basis.extend(even_basis(&cat, k, l));
        }
    }
    let params = json!({"max": max});
    for f in &basis {
        for g in &basis {
            if f.source() + f.target() + g.source() + g.target() > max {
                continue;
            }
            let lhs = omega0_raw(&f.tensor(g).unwrap()).unwrap();
            let rhs = omega0_raw(f)
                .unwrap()
                .tensor(&omega0_raw(g).unwrap())
                .unwrap();
            if lhs != rhs {
                return CheckReport::fail("omega monoidal", params, format!("{f} tensor {g}"));
            }
        }
    }
    CheckReport::new("omega monoidal", params, true)
}

/// Compressions of coloured diagrams vanish exactly when some block is odd.
pub fn verify_odd_vanishing(max: usize) -> CheckReport {
    let cat = Category::colored_2t();
    let params = json!({"max": max});
    for k in 0..=max {
        for l in 0..=max - k {
            for d in colored_classes(k, l) {
                let odd = d.base().block_sizes().iter().any(|(a, b)| (a + b) % 2 == 1);
                let c = compress(&Morphism::from_diagram(&cat, d.clone(), PolyQ::one()).unwrap());
                if odd != c.is_zero() {
                    let why = if odd {
                        "odd block survives"
                    } else {
                        "even diagram vanishes"
                    };
                    return CheckReport::fail("odd-block vanishing", params, format!("{d}: {why}"));
                }
            }
        }
    }
    CheckReport::new("odd-block vanishing", params, true)
}

/// Faithfulness and fullness of `Ω₀` on `Hom(k, l)` by ranks over `Q(t)`.
pub fn verify_full_faithful(k: usize, l: usize, seed: u64) -> CheckReport {
    let even = Category::even();
    let images: Vec<Morphism> = even_basis(&even, k, l)
        .iter()
        .map(|p| omega0_raw(p).unwrap())
        .collect();
    let cat = Category::colored_2t();
    let compressed: Vec<Morphism> = colored_classes(k, l)
        .into_iter()
        .map(|d| compress(&Morphism::from_diagram(&cat, d, PolyQ::one()).unwrap()))
        .collect();
    let expected = images.len();
    let faithful = fraction_rank(&images, seed);
    let full = fraction_rank(&compressed, seed);
    let joint = fraction_rank(&[images, compressed].concat(), seed);
    let params = json!({"k": k, "l": l, "even_count": expected, "faithful_rank": faithful, "full_rank": full, "joint_rank": joint});
    if faithful == expected && full == expected && joint == expected {
        CheckReport::new("omega full-faithful", params, true)
    } else {
        CheckReport::fail(
            "omega full-faithful",
            params,
            "rank differs from the even basis count",
        )
    }
}

/// The idempotent `E = Ω₀(fourlegs)` and the maps `α = 2·E∘split∘e″`,
/// `β = e″∘merge∘E` splitting `e″` through it.
#[derive(Debug, Clone)]
pub struct SplitWitness {
    pub fourlegs_image: Morphism,
    pub alpha: Morphism,
    pub beta: Morphism,
}

pub fn split_witness() -> SplitWitness {
    let cat = Category::colored_2t();
    let fourlegs = Morphism::from_partition(&Category::even(), Partition::one_block(2, 2)).unwrap();
    let e = omega0_raw(&fourlegs).unwrap();
    let split: Partition = "1>2: {1,1',2'}".parse().unwrap();
    let merge: Partition = "2>1: {1,2,1'}".parse().unwrap();
    let split = Morphism::from_partition(&cat, split).unwrap();
    let merge = Morphism::from_partition(&cat, merge).unwrap();
    let e2 = e_dblprime_in(&cat);
    let alpha = e
        .compose(&split)
        .unwrap()
        .compose(&e2)
        .unwrap()
        .scale(&PolyQ::from_int(2));
    let beta = e2.compose(&merge).unwrap().compose(&e).unwrap();
    SplitWitness {
        fourlegs_image: e,
        alpha,
        beta,
    }
}

/// `β∘α = e″`, `α∘β = Ω₀(fourlegs)` and `e′ + e″ = id`.
pub fn ess_surj_witness() -> CheckReport {
    let w = split_witness();
    let cat = Category::colored_2t();
    let e2 = e_dblprime_in(&cat);
    let mut failures = Vec::new();
    let ba = w.beta.compose(&w.alpha).unwrap();
    if ba != e2 {
        failures.push(format!("beta∘alpha - e″ = {}", ba.sub(&e2).unwrap()));
    }
    let ab = w.alpha.compose(&w.beta).unwrap();
    if ab != w.fourlegs_image {
        failures.push(format!(
            "alpha∘beta - image = {}",
            ab.sub(&w.fourlegs_image).unwrap()
        ));
    }
    if e_prime_in(&cat).add(&e2).unwrap() != Morphism::identity(&cat, 1) {
        failures.push("e′ + e″ is not the identity".to_string());
    }
    if failures.is_empty() {
        CheckReport::new("omega split witness", json!({}), true)
    } else {
        CheckReport::fail("omega split witness", json!({}), failures.join("; "))
    }
}

/// `tr(e′) = t = dim [1]`.
pub fn verify_dimension() -> CheckReport {
    let tr = e_prime().trace().unwrap();
    let dim = Morphism::dim(&Category::even(), 1);
    let params = json!({"trace": tr.to_string(), "dim": dim.to_string()});
    CheckReport::new("omega dimension", params, tr == dim && dim == PolyQ::t())
}

/// `ι: u → V`, `e_i ↦ e^i_1 − e^i_{−1}`.
pub fn iota(n: usize) -> MatrixQ {
    MatrixQ::from_triplets(
        2 * n,
        n,
        (0..n).flat_map(|i| [(2 * i, i, qi(1)), (2 * i + 1, i, qi(-1))]),
    )
}

/// `π: V → u`, `e^i_{±1} ↦ ±½ e_i`.
pub fn pi(n: usize) -> MatrixQ {
    MatrixQ::from_triplets(
        n,
        2 * n,
        (0..n).flat_map(|i| [(i, 2 * i, q(1, 2)), (i, 2 * i + 1, q(-1, 2))]),
    )
}

/// `π^{⊗l} · H(Ω₀(f)) · ι^{⊗k}` and `G(f)` at `t = n`, before normalization.
pub fn square_paths(f: &Morphism, n: usize) -> Result<(MatrixQ, MatrixQ), OmegaError> {
    let at = qi(n as i64);
    let h = functor_h(&omega0_raw(f)?.specialize(&at), n)?;
    let lhs = pi(n)
        .kron_power(f.target())
        .mul(&h)
        .mul(&iota(n).kron_power(f.source()));
    let rhs = functor_g(&f.specialize(&at), n)?;
    Ok((lhs, rhs))
}

/// The splitting `(ι/√2, √2 π)` per strand; `k + l` is even so the total
/// factor `2^{(l−k)/2}` is rational.
pub fn square_normalization(k: usize, l: usize) -> Q {
    let e = (l as i64 - k as i64) / 2;
    let two = qi(2);
    if e >= 0 {
        num_traits::pow(two, e as usize)
    } else {
        Q::one() / num_traits::pow(two, (-e) as usize)
    }
}

/// `H ∘ Ω = G` on every even basis diagram with `k, l ≤ kmax` at `t = n`.
pub fn verify_square(n: usize, kmax: usize) -> CheckReport {
    let cat = Category::even();
    let params = json!({"n": n, "kmax": kmax});
    let mut cases = Vec::new();
    for k in 0..=kmax {
        for l in 0..=kmax {
            cases.extend(even_basis(&cat, k, l));
        }
    }
    let failure = cases.par_iter().find_map_first(|f| {
        let (lhs, rhs) = match square_paths(f, n) {
            Ok(x) => x,
            Err(e) => return Some(format!("{f}: {e}")),
        };
        let lhs = lhs.scale(&square_normalization(f.source(), f.target()));
        (lhs != rhs).then(|| format!("{f}: {lhs} vs {rhs}"))
    });
    match failure {
        None => CheckReport::new("commuting square", params, true),
        Some(why) => CheckReport::fail("commuting square", params, why),
    }
}

/// All omega checks at their standard sizes.
pub fn omega_battery(seed: u64) -> Vec<CheckReport> {
    let mut out = vec![
        verify_functoriality(3),
        verify_monoidal(4),
        verify_odd_vanishing(5),
    ];
    for total in 0..=6 {
        for k in 0..=total {
            out.push(verify_full_faithful(k, total - k, seed));
        }
    }
    out.push(ess_surj_witness());
    out.push(verify_dimension());
    out
}

/// Whether a morphism is fixed by the `e′` compression.
pub fn is_compressed(g: &Morphism) -> bool {
    compress(g) == *g
}
