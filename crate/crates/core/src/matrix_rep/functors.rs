//! The functors to matrices: `G` on even partitions at `t = n` (acting on
//! tensor powers of `u = C^n`) and `H` on coloured partitions at `t = 2n`
//! (on tensor powers of `V = C^{2n}`), extended to Karoubi envelopes by
//! splitting idempotents, plus the explicit generator matrices used as
//! universal-property data.

use num_traits::One;

use super::group::perm_basis_index;
use super::interp::{t_colored, t_even, MatrixRepError};
use super::matrix::{MatrixQ, SparseVec};
use crate::category::{CategoryKind, KaroubiMorphism, KaroubiObject, Morphism};
use crate::diagrams::Sign;
use crate::poly::{qi, PolyQ, Q};
use crate::presentations::{Gen, Presentation, Target};

fn check_specialized(f: &Morphism, kind: CategoryKind, weight: i64) -> Result<(), MatrixRepError> {
    if f.category().kind != kind {
        return Err(MatrixRepError::WrongCategory {
            expected: kind.name(),
        });
    }
    let expected = PolyQ::from_int(weight);
    let numeric = f.terms().values().all(|c| c.as_constant().is_some());
    if f.category().loop_weight != expected || !numeric {
        return Err(MatrixRepError::SpecializationMismatch {
            expected: expected.to_string(),
            found: f.category().loop_weight.to_string(),
        });
    }
    Ok(())
}

fn apply(
    f: &Morphism,
    dim: usize,
    t: impl Fn(&crate::diagrams::ColoredPartition) -> MatrixQ,
) -> MatrixQ {
    let mut acc = MatrixQ::zeros(dim.pow(f.target() as u32), dim.pow(f.source() as u32));
    for (d, c) in f.terms() {
        acc = acc.add(&t(d).scale(&c.as_constant().expect("checked numeric")));
    }
    acc
}

/// `G(f)` for `f` in even partitions specialized at `t = n`.
pub fn functor_g(f: &Morphism, n: usize) -> Result<MatrixQ, MatrixRepError> {
    check_specialized(f, CategoryKind::EvenPartitions, n as i64)?;
    Ok(apply(f, n, |d| t_even(d.base(), n)))
}

/// `H(f)` for `f` in coloured partitions specialized at loop weight `2n`.
pub fn functor_h(f: &Morphism, n: usize) -> Result<MatrixQ, MatrixRepError> {
    check_specialized(f, CategoryKind::ColoredPartitions, 2 * n as i64)?;
    Ok(apply(f, 2 * n, |d| t_colored(d, n)))
}

/// A chosen image of an idempotent: `inclusion · projection = T(e)` and
/// `projection · inclusion = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub inclusion: MatrixQ,
    pub projection: MatrixQ,
}

impl Splitting {
    pub fn dim(&self) -> usize {
        self.inclusion.cols()
    }
}

/// Splits an idempotent matrix through its pivot columns, each scaled so
/// its first nonzero entry is 1.
pub fn split_idempotent(e: &MatrixQ) -> Splitting {
    let cols = e.columns();
    let basis: Vec<SparseVec> = e
        .pivot_columns()
        .into_iter()
        .map(|c| {
            let v = &cols[c];
            let inv = Q::one() / v[0].1.clone();
            v.iter().map(|(r, x)| (*r, x * &inv)).collect()
        })
        .collect();
    let inclusion = MatrixQ::from_columns(e.rows(), &basis);
    // solve inclusion · X = e on rows where inclusion is invertible
    let rows = inclusion.transpose().pivot_columns();
    let square = inclusion.select_rows(&rows);
    let projection = square
        .inverse()
        .expect("pivot rows of a full-rank basis")
        .mul(&e.select_rows(&rows));
    debug_assert_eq!(inclusion.mul(&projection), *e);
    Splitting {
        inclusion,
        projection,
    }
}

fn split_object(
    obj: &KaroubiObject,
    functor: impl Fn(&Morphism) -> Result<MatrixQ, MatrixRepError>,
) -> Result<Vec<Splitting>, MatrixRepError> {
    obj.summands()
        .iter()
        .map(|(_, e)| Ok(split_idempotent(&functor(e)?)))
        .collect()
}

fn block_matrix(blocks: &[Vec<MatrixQ>], row_dims: &[usize], col_dims: &[usize]) -> MatrixQ {
    let rows: usize = row_dims.iter().sum();
    let cols: usize = col_dims.iter().sum();
    let mut trip = Vec::new();
    let mut r0 = 0;
    for (j, row) in blocks.iter().enumerate() {
        let mut c0 = 0;
        for (i, b) in row.iter().enumerate() {
            trip.extend(b.triplets().map(|(r, c, v)| (r0 + r, c0 + c, v.clone())));
            c0 += col_dims[i];
        }
        r0 += row_dims[j];
    }
    MatrixQ::from_triplets(rows, cols, trip)
}

fn karoubi_functor(
    f: &KaroubiMorphism,
    functor: impl Fn(&Morphism) -> Result<MatrixQ, MatrixRepError> + Copy,
) -> Result<MatrixQ, MatrixRepError> {
    let src = split_object(f.source(), functor)?;
    let tgt = split_object(f.target(), functor)?;
    let mut blocks = Vec::new();
    for (j, row) in f.entries().iter().enumerate() {
        let mut out = Vec::new();
        for (i, g) in row.iter().enumerate() {
            out.push(tgt[j].projection.mul(&functor(g)?).mul(&src[i].inclusion));
        }
        blocks.push(out);
    }
    let rd: Vec<usize> = tgt.iter().map(Splitting::dim).collect();
    let cd: Vec<usize> = src.iter().map(Splitting::dim).collect();
    Ok(block_matrix(&blocks, &rd, &cd))
}

/// The splitting of each summand of `obj` under `G`.
pub fn functor_g_object(obj: &KaroubiObject, n: usize) -> Result<Vec<Splitting>, MatrixRepError> {
    split_object(obj, |m| functor_g(m, n))
}

/// The splitting of each summand of `obj` under `H`.
pub fn functor_h_object(obj: &KaroubiObject, n: usize) -> Result<Vec<Splitting>, MatrixRepError> {
    split_object(obj, |m| functor_h(m, n))
}

pub fn functor_g_karoubi(f: &KaroubiMorphism, n: usize) -> Result<MatrixQ, MatrixRepError> {
    karoubi_functor(f, |m| functor_g(m, n))
}

pub fn functor_h_karoubi(f: &KaroubiMorphism, n: usize) -> Result<MatrixQ, MatrixRepError> {
    karoubi_functor(f, |m| functor_h(m, n))
}

/// Generator matrices written out directly: on `V = C^{2n}` for the
/// coloured presentation (loops worth `2n`), on `u = C^n` for the fourlegs
/// presentation (loops worth `n`).
#[derive(Debug, Clone)]
pub struct MatrixDatum {
    presentation: Presentation,
    n: usize,
}

impl MatrixDatum {
    pub fn colored(n: usize) -> Self {
        MatrixDatum {
            presentation: Presentation::ParZ2,
            n,
        }
    }

    pub fn even(n: usize) -> Self {
        MatrixDatum {
            presentation: Presentation::ParT,
            n,
        }
    }

    pub fn dim(&self) -> usize {
        match self.presentation {
            Presentation::ParZ2 => 2 * self.n,
            Presentation::ParT => self.n,
        }
    }

    /// The value of the parameter `t`.
    pub fn parameter(&self) -> Q {
        qi(self.dim() as i64)
    }

    fn swap(&self) -> MatrixQ {
        let d = self.dim();
        MatrixQ::from_triplets(
            d * d,
            d * d,
            (0..d).flat_map(|a| (0..d).map(move |b| (b * d + a, a * d + b, qi(1)))),
        )
    }
}

impl Target for MatrixDatum {
    type Mor = MatrixQ;

    fn presentation(&self) -> Presentation {
        self.presentation
    }

    fn identity(&self, n: usize) -> MatrixQ {
        MatrixQ::identity(self.dim().pow(n as u32))
    }

    fn zero(&self, k: usize, l: usize) -> MatrixQ {
        MatrixQ::zeros(self.dim().pow(l as u32), self.dim().pow(k as u32))
    }

    fn generator(&self, g: Gen) -> MatrixQ {
        let d = self.dim();
        let one = || qi(1);
        match g {
            Gen::Id => MatrixQ::identity(d),
            Gen::Cross => self.swap(),
            // e^i_g ⊗ e^j_h ↦ δ_{gh} δ_{ij} e^i_g
            Gen::Merge => MatrixQ::from_triplets(d, d * d, (0..d).map(|x| (x, x * d + x, one()))),
            // e^i_g ↦ e^i_g ⊗ e^i_g
            Gen::Split => MatrixQ::from_triplets(d * d, d, (0..d).map(|x| (x * d + x, x, one()))),
            // e^i_g ↦ e^i_{-g}
            Gen::Token(s) => MatrixQ::from_triplets(
                d,
                d,
                (0..self.n).flat_map(|i| {
                    [Sign::Plus, Sign::Minus]
                        .map(|g| (perm_basis_index(i, g * s), perm_basis_index(i, g), one()))
                }),
            ),
            // 1 ↦ Σ e^i_g
            Gen::BottomPin => MatrixQ::from_triplets(d, 1, (0..d).map(|x| (x, 0, one()))),
            // e^i_g ↦ 1
            Gen::TopPin => MatrixQ::from_triplets(1, d, (0..d).map(|x| (0, x, one()))),
            Gen::Lolly => MatrixQ::identity(1).scale(&self.parameter()),
            // e_i ⊗ e_j ↦ δ_{ij} e_i ⊗ e_i
            Gen::FourLegs => {
                MatrixQ::from_triplets(d * d, d * d, (0..d).map(|x| (x * d + x, x * d + x, one())))
            }
            // e_i ⊗ e_j ↦ δ_{ij}
            Gen::Cap => MatrixQ::from_triplets(1, d * d, (0..d).map(|x| (0, x * d + x, one()))),
            // 1 ↦ Σ e_i ⊗ e_i
            Gen::Cup => MatrixQ::from_triplets(d * d, 1, (0..d).map(|x| (x * d + x, 0, one()))),
        }
    }

    fn compose(&self, g: &MatrixQ, f: &MatrixQ) -> MatrixQ {
        g.mul(f)
    }

    fn tensor(&self, a: &MatrixQ, b: &MatrixQ) -> MatrixQ {
        a.kron(b)
    }

    fn scale(&self, c: &PolyQ, a: &MatrixQ) -> MatrixQ {
        a.scale(&c.eval(&self.parameter()))
    }

    fn add(&self, a: &MatrixQ, b: &MatrixQ) -> MatrixQ {
        a.add(b)
    }

    fn equal(&self, a: &MatrixQ, b: &MatrixQ) -> bool {
        a == b
    }
}

/// Whether `e` is idempotent as a matrix.
pub fn is_idempotent(e: &MatrixQ) -> bool {
    e.rows() == e.cols() && e.mul(e) == *e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Category;
    use crate::diagrams::{ColoredPartition, Partition};
    use crate::poly::q;
    use crate::presentations::{datum_reports, generator_diagram, verify_datum};
    use crate::report::all_pass;

    fn e_prime(n: usize) -> Morphism {
        let cat = Category::colored_2t().specialize(&qi(n as i64));
        let plus = Morphism::from_diagram(&cat, ColoredPartition::token(Sign::Plus), PolyQ::one())
            .unwrap();
        let minus =
            Morphism::from_diagram(&cat, ColoredPartition::token(Sign::Minus), PolyQ::one())
                .unwrap();
        plus.sub(&minus).unwrap().scale(&PolyQ::constant(q(1, 2)))
    }

    #[test]
    fn specialization_required() {
        let f = Morphism::identity(&Category::even(), 1);
        assert!(matches!(
            functor_g(&f, 2),
            Err(MatrixRepError::SpecializationMismatch { .. })
        ));
        let f = f.specialize(&qi(2));
        assert_eq!(functor_g(&f, 2).unwrap(), MatrixQ::identity(2));
        assert!(matches!(
            functor_g(&f, 3),
            Err(MatrixRepError::SpecializationMismatch { .. })
        ));
        assert!(matches!(
            functor_h(&f, 1),
            Err(MatrixRepError::WrongCategory { .. })
        ));
    }

    #[test]
    fn e_prime_image_is_reflection_rep() {
        let n = 2;
        let obj = KaroubiObject::single(e_prime(n)).unwrap();
        let s = &functor_h_object(&obj, n).unwrap()[0];
        let want = MatrixQ::from_triplets(
            4,
            2,
            [(0, 0, qi(1)), (1, 0, qi(-1)), (2, 1, qi(1)), (3, 1, qi(-1))],
        );
        assert_eq!(s.inclusion, want);
        assert_eq!(s.projection.mul(&s.inclusion), MatrixQ::identity(2));
        assert_eq!(
            functor_h_karoubi(&obj.identity(), n).unwrap(),
            MatrixQ::identity(2)
        );
    }

    #[test]
    fn generator_matrices_agree_with_interpolation() {
        for n in [1usize, 2] {
            let z2 = MatrixDatum::colored(n);
            let pt = MatrixDatum::even(n);
            for g in [
                Gen::Id,
                Gen::Merge,
                Gen::Split,
                Gen::Cross,
                Gen::Token(Sign::Minus),
                Gen::BottomPin,
                Gen::TopPin,
            ] {
                assert_eq!(
                    z2.generator(g),
                    t_colored(&generator_diagram(g).unwrap(), n),
                    "{g:?}"
                );
            }
            for g in [Gen::FourLegs, Gen::Cap, Gen::Cup, Gen::Cross] {
                assert_eq!(
                    pt.generator(g),
                    t_even(generator_diagram(g).unwrap().base(), n),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn matrix_data_satisfy_axioms() {
        assert!(all_pass(&datum_reports(&MatrixDatum::colored(2))));
        assert!(all_pass(&datum_reports(&MatrixDatum::even(2))));
        assert!(verify_datum(MatrixDatum::even(3)).is_ok());
    }

    #[test]
    fn karoubi_functoriality() {
        let n = 2;
        let cat = Category::even().specialize(&qi(n as i64));
        let f = Morphism::from_partition(&cat, Partition::one_block(2, 2)).unwrap();
        let obj = KaroubiObject::plain(&cat, 1)
            .direct_sum(&KaroubiObject::single(f).unwrap())
            .unwrap();
        let id = obj.identity();
        let m = functor_g_karoubi(&id, n).unwrap();
        // u ⊕ image of fourlegs, of dimension n
        assert_eq!(m, MatrixQ::identity(n + n));
    }
}
