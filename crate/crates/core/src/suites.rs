//! Named verification batteries, each returning one report per check.

use rayon::prelude::*;
use serde_json::json;

use crate::category::{Category, Morphism};
use crate::diagrams::{
    bell, colored_classes, colored_stack, even_partitions, partitions, stack, ColoredPartition,
};
use crate::matrix_rep::{
    equivariance_check, hom_dim, span_rank, t_colored, t_even, MatrixDatum, MatrixQ, RepKind,
    RepSpec,
};
use crate::omega;
use crate::poly::{qi, PolyQ};
use crate::presentations::{
    datum_reports, relation_suite, verify_relations, DiagramTarget, Presentation,
};
use crate::report::CheckReport;

pub fn relations(p: Presentation) -> Vec<CheckReport> {
    let target = match p {
        Presentation::ParZ2 => DiagramTarget::colored(&Category::colored()),
        Presentation::ParT => DiagramTarget::even(&Category::even()),
    };
    verify_relations(&relation_suite(p), &target)
}

/// Basis counts against closed formulas, `k + l ≤ max`.
pub fn counting(max: usize) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for total in 0..=max {
        for k in 0..=total {
            let l = total - k;
            let all = partitions(k, l);
            let params = json!({"k": k, "l": l});
            out.push(CheckReport::new(
                "count partitions",
                params.clone(),
                all.len() as u64 == bell(total),
            ));
            let even = all.iter().filter(|p| p.is_even()).count();
            out.push(CheckReport::new(
                "count even",
                params.clone(),
                even == even_partitions(k, l).len(),
            ));
            if total <= 6 {
                let formula: usize = all.iter().map(|p| 1usize << (total - p.num_blocks())).sum();
                out.push(CheckReport::new(
                    "count colored",
                    params,
                    formula == colored_classes(k, l).len(),
                ));
            }
        }
    }
    out
}

fn basis(cat: &Category, k: usize, l: usize) -> Vec<Morphism> {
    cat.basis(k, l)
        .into_iter()
        .map(|d| Morphism::from_diagram(cat, d, PolyQ::one()).unwrap())
        .collect()
}

/// Associativity, identity and bilinearity on full bases with sizes `≤ max`.
pub fn category_axioms(cat: &Category, max: usize) -> Vec<CheckReport> {
    let sizes: Vec<usize> = (0..=max).collect();
    let mut quads = Vec::new();
    for &a in &sizes {
        for &b in &sizes {
            for &c in &sizes {
                for &d in &sizes {
                    quads.push((a, b, c, d));
                }
            }
        }
    }
    let coef = PolyQ::t() + PolyQ::from_int(2);
    let assoc = quads.par_iter().find_map_first(|&(a, b, c, d)| {
        let fs = basis(cat, a, b);
        let gs = basis(cat, b, c);
        let hs = basis(cat, c, d);
        for g in &gs {
            for f in &fs {
                let gf = g.compose(f).unwrap();
                for h in &hs {
                    if h.compose(&gf).unwrap() != h.compose(g).unwrap().compose(f).unwrap() {
                        return Some(format!("{h} ∘ {g} ∘ {f}"));
                    }
                }
            }
        }
        None
    });
    let mut ident = None;
    let mut bilinear = None;
    for &a in &sizes {
        for &b in &sizes {
            let fs = basis(cat, a, b);
            for f in &fs {
                let left = Morphism::identity(cat, b).compose(f).unwrap();
                let right = f.compose(&Morphism::identity(cat, a)).unwrap();
                if ident.is_none() && (left != *f || right != *f) {
                    ident = Some(f.to_string());
                }
            }
            for &c in &sizes {
                for g in basis(cat, b, c) {
                    for (f1, f2) in fs.iter().zip(fs.iter().rev()) {
                        let sum = f1.add(&f2.scale(&coef)).unwrap();
                        let lhs = g.compose(&sum).unwrap();
                        let rhs = g
                            .compose(f1)
                            .unwrap()
                            .add(&g.compose(f2).unwrap().scale(&coef))
                            .unwrap();
                        if bilinear.is_none() && lhs != rhs {
                            bilinear = Some(format!("{g} ∘ ({sum})"));
                        }
                    }
                }
            }
        }
    }
    let params = json!({"category": cat.kind.name(), "max": max});
    vec![
        CheckReport::from_outcome("associativity", params.clone(), assoc),
        CheckReport::from_outcome("identity", params.clone(), ident),
        CheckReport::from_outcome("bilinearity", params, bilinear),
    ]
}

/// `T_q T_p = w^{loops} T_{q∘p}` for the interpolation maps, and
/// equivariance of every basis matrix.
pub fn interpolation() -> Vec<CheckReport> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        let mut bad = None;
        for (k, l, m) in triples(2) {
            for p in even_partitions(k, l) {
                for q in even_partitions(l, m) {
                    let st = stack(&q, &p).unwrap();
                    let lhs = t_even(&q, n).mul(&t_even(&p, n));
                    let rhs = t_even(&st.composite, n).scale(&qi((n as i64).pow(st.loops as u32)));
                    if bad.is_none() && lhs != rhs {
                        bad = Some(format!("{q} after {p}"));
                    }
                }
            }
        }
        out.push(CheckReport::from_outcome(
            "interpolation composition",
            json!({"cat": "even", "n": n}),
            bad,
        ));
    }
    let n = 2;
    let mut bad = None;
    for (k, l, m) in triples(2) {
        for p in colored_classes(k, l) {
            for q in colored_classes(l, m) {
                let lhs = t_colored(&q, n).mul(&t_colored(&p, n));
                let rhs = match colored_stack(&q, &p).unwrap() {
                    None => MatrixQ::zeros(lhs.rows(), lhs.cols()),
                    Some(st) => {
                        t_colored(&st.composite, n).scale(&qi((2 * n as i64).pow(st.loops as u32)))
                    }
                };
                if bad.is_none() && lhs != rhs {
                    bad = Some(format!("{q} after {p}"));
                }
            }
        }
    }
    out.push(CheckReport::from_outcome(
        "interpolation composition",
        json!({"cat": "colored", "n": n}),
        bad,
    ));
    for n in 1..=3 {
        for total in 0..=3 {
            for k in 0..=total {
                let l = total - k;
                let even = even_partitions(k, l)
                    .into_iter()
                    .all(|p| equivariance_check(&t_even(&p, n), k, l, RepSpec::reflection(n)).pass);
                let colored = colored_classes(k, l).into_iter().all(|p| {
                    equivariance_check(&t_colored(&p, n), k, l, RepSpec::permutation(n)).pass
                });
                out.push(CheckReport::new(
                    "equivariance",
                    json!({"n": n, "k": k, "l": l}),
                    even && colored,
                ));
            }
        }
    }
    out
}

fn triples(max: usize) -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for k in 0..=max {
        for l in 0..=max {
            for m in 0..=max {
                v.push((k, l, m));
            }
        }
    }
    v
}

fn t_basis(kind: RepKind, n: usize, k: usize, l: usize) -> Vec<MatrixQ> {
    match kind {
        RepKind::Reflection => even_partitions(k, l).iter().map(|p| t_even(p, n)).collect(),
        RepKind::Permutation => colored_classes(k, l)
            .iter()
            .map(|p: &ColoredPartition| t_colored(p, n))
            .collect(),
    }
}

/// Rank of the span of the basis images against the averaged dimension.
pub fn schur_weyl_surjective(spec: RepSpec, k: usize, l: usize) -> CheckReport {
    let ms = t_basis(spec.kind, spec.n, k, l);
    let rank = span_rank(&ms);
    let params =
        json!({"rep": format!("{:?}", spec.kind), "n": spec.n, "k": k, "l": l, "rank": rank});
    match hom_dim(spec, k, l) {
        Ok(d) => CheckReport::new("schur-weyl surjective", params, rank == d),
        Err(e) => CheckReport::fail("schur-weyl surjective", params, e.to_string()),
    }
}

/// The basis images are linearly independent.
pub fn schur_weyl_independent(spec: RepSpec, k: usize, l: usize) -> CheckReport {
    let ms = t_basis(spec.kind, spec.n, k, l);
    let params =
        json!({"rep": format!("{:?}", spec.kind), "n": spec.n, "k": k, "l": l, "count": ms.len()});
    CheckReport::new("schur-weyl independent", params, span_rank(&ms) == ms.len())
}

pub fn schur_weyl() -> Vec<CheckReport> {
    let mut jobs = Vec::new();
    for n in [2usize, 3] {
        for total in 0..=4 {
            for k in 0..=total {
                jobs.push((RepSpec::reflection(n), k, total - k, true));
                jobs.push((RepSpec::permutation(n), k, total - k, true));
            }
        }
    }
    for total in 0..=4 {
        for k in 0..=total {
            jobs.push((RepSpec::reflection(4), k, total - k, false));
        }
    }
    for total in 0..=3 {
        for k in 0..=total {
            jobs.push((RepSpec::permutation(3), k, total - k, false));
        }
    }
    jobs.par_iter()
        .map(|&(spec, k, l, surj)| {
            if surj {
                schur_weyl_surjective(spec, k, l)
            } else {
                schur_weyl_independent(spec, k, l)
            }
        })
        .collect()
}

pub fn square(n: usize, kmax: usize) -> Vec<CheckReport> {
    vec![omega::verify_square(n, kmax)]
}

pub fn datum(p: Presentation, n: usize) -> Vec<CheckReport> {
    match p {
        Presentation::ParZ2 => datum_reports(&MatrixDatum::colored(n)),
        Presentation::ParT => datum_reports(&MatrixDatum::even(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn small_suites_pass() {
        assert!(all_pass(&counting(4)));
        assert!(all_pass(&category_axioms(&Category::even(), 1)));
        assert!(all_pass(&category_axioms(&Category::colored(), 1)));
        assert!(schur_weyl_surjective(RepSpec::permutation(2), 1, 1).pass);
        assert!(schur_weyl_independent(RepSpec::reflection(2), 1, 1).pass);
        assert!(all_pass(&datum(Presentation::ParT, 2)));
    }

    #[test]
    fn independence_fails_outside_regime() {
        // 2 + 2 > 1: the four even diagrams collapse at n = 1
        assert!(!schur_weyl_independent(RepSpec::reflection(1), 2, 2).pass);
    }
}
