//! Additive Karoubi envelope: formal direct sums of idempotent images.

use super::{Category, CategoryError, Morphism};

/// A direct sum of objects `(k, e)` with `e∘e = e` on `k` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaroubiObject {
    category: Category,
    summands: Vec<(usize, Morphism)>,
}

impl KaroubiObject {
    pub fn new(
        category: &Category,
        summands: Vec<(usize, Morphism)>,
    ) -> Result<Self, CategoryError> {
        for (k, e) in &summands {
            if e.category() != category {
                return Err(CategoryError::CategoryMismatch);
            }
            if e.source() != *k || e.target() != *k {
                return Err(CategoryError::NotEndomorphism {
                    k: e.source(),
                    l: e.target(),
                });
            }
            let residual = e.compose(e)?.sub(e)?;
            if !residual.is_zero() {
                return Err(CategoryError::NotIdempotent {
                    residual: Box::new(residual),
                });
            }
        }
        Ok(KaroubiObject {
            category: category.clone(),
            summands,
        })
    }

    /// `(k, e)` as a single summand.
    pub fn single(e: Morphism) -> Result<Self, CategoryError> {
        let category = e.category().clone();
        Self::new(&category, vec![(e.source(), e)])
    }

    /// `(k, id_k)`.
    pub fn plain(category: &Category, k: usize) -> Self {
        KaroubiObject {
            category: category.clone(),
            summands: vec![(k, Morphism::identity(category, k))],
        }
    }

    pub fn category(&self) -> &Category {
        &self.category
    }

    pub fn summands(&self) -> &[(usize, Morphism)] {
        &self.summands
    }

    pub fn direct_sum(&self, other: &KaroubiObject) -> Result<KaroubiObject, CategoryError> {
        if self.category != other.category {
            return Err(CategoryError::CategoryMismatch);
        }
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        Ok(KaroubiObject {
            category: self.category.clone(),
            summands,
        })
    }

    /// Summands `(a, b)` in lexicographic order, `a` from `self`.
    pub fn tensor(&self, other: &KaroubiObject) -> Result<KaroubiObject, CategoryError> {
        if self.category != other.category {
            return Err(CategoryError::CategoryMismatch);
        }
        let mut summands = Vec::new();
        for (ka, ea) in &self.summands {
            for (kb, eb) in &other.summands {
                summands.push((ka + kb, ea.tensor(eb)?));
            }
        }
        Ok(KaroubiObject {
            category: self.category.clone(),
            summands,
        })
    }

    /// The identity is the matrix of idempotents on the diagonal.
    pub fn identity(&self) -> KaroubiMorphism {
        let n = self.summands.len();
        let entries = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        if i == j {
                            self.summands[i].1.clone()
                        } else {
                            Morphism::zero(&self.category, self.summands[i].0, self.summands[j].0)
                        }
                    })
                    .collect()
            })
            .collect();
        KaroubiMorphism {
            source: self.clone(),
            target: self.clone(),
            entries,
        }
    }
}

/// A matrix of morphisms; entry `[j][i]` goes from source summand `i` to
/// target summand `j` and satisfies `f_j ∘ g ∘ e_i = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaroubiMorphism {
    source: KaroubiObject,
    target: KaroubiObject,
    entries: Vec<Vec<Morphism>>,
}

impl KaroubiMorphism {
    /// Checks shape and compression of every entry.
    pub fn new(
        source: &KaroubiObject,
        target: &KaroubiObject,
        entries: Vec<Vec<Morphism>>,
    ) -> Result<Self, CategoryError> {
        if source.category != target.category {
            return Err(CategoryError::CategoryMismatch);
        }
        if entries.len() != target.summands.len()
            || entries.iter().any(|r| r.len() != source.summands.len())
        {
            return Err(CategoryError::Shape);
        }
        for (j, row) in entries.iter().enumerate() {
            for (i, g) in row.iter().enumerate() {
                let (ki, ei) = &source.summands[i];
                let (kj, fj) = &target.summands[j];
                if g.source() != *ki || g.target() != *kj {
                    return Err(CategoryError::Shape);
                }
                if fj.compose(&g.compose(ei)?)? != *g {
                    return Err(CategoryError::CompressionViolation { row: j, col: i });
                }
            }
        }
        Ok(KaroubiMorphism {
            source: source.clone(),
            target: target.clone(),
            entries,
        })
    }

    /// Compresses arbitrary entries: `g ↦ f_j ∘ g ∘ e_i`.
    pub fn compress(
        source: &KaroubiObject,
        target: &KaroubiObject,
        entries: Vec<Vec<Morphism>>,
    ) -> Result<Self, CategoryError> {
        if entries.len() != target.summands.len()
            || entries.iter().any(|r| r.len() != source.summands.len())
        {
            return Err(CategoryError::Shape);
        }
        let mut out = Vec::with_capacity(entries.len());
        for (j, row) in entries.iter().enumerate() {
            let mut new_row = Vec::with_capacity(row.len());
            for (i, g) in row.iter().enumerate() {
                new_row.push(
                    target.summands[j]
                        .1
                        .compose(&g.compose(&source.summands[i].1)?)?,
                );
            }
            out.push(new_row);
        }
        Ok(KaroubiMorphism {
            source: source.clone(),
            target: target.clone(),
            entries: out,
        })
    }

    pub fn source(&self) -> &KaroubiObject {
        &self.source
    }

    pub fn target(&self) -> &KaroubiObject {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Morphism>] {
        &self.entries
    }

    pub fn entry(&self, j: usize, i: usize) -> &Morphism {
        &self.entries[j][i]
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &KaroubiMorphism) -> Result<KaroubiMorphism, CategoryError> {
        if self.source != f.target {
            return Err(CategoryError::Shape);
        }
        let cat = &self.source.category;
        let mut entries = Vec::with_capacity(self.target.summands.len());
        for (j, row) in self.entries.iter().enumerate() {
            let mut new_row = Vec::with_capacity(f.source.summands.len());
            for (i, (ki, _)) in f.source.summands.iter().enumerate() {
                let mut acc = Morphism::zero(cat, *ki, self.target.summands[j].0);
                for (m, g) in row.iter().enumerate() {
                    acc = acc.add(&g.compose(&f.entries[m][i])?)?;
                }
                new_row.push(acc);
            }
            entries.push(new_row);
        }
        Ok(KaroubiMorphism {
            source: f.source.clone(),
            target: self.target.clone(),
            entries,
        })
    }

    pub fn tensor(&self, g: &KaroubiMorphism) -> Result<KaroubiMorphism, CategoryError> {
        let source = self.source.tensor(&g.source)?;
        let target = self.target.tensor(&g.target)?;
        let mut entries = Vec::new();
        for row_a in &self.entries {
            for row_b in &g.entries {
                let mut row = Vec::new();
                for a in row_a {
                    for b in row_b {
                        row.push(a.tensor(b)?);
                    }
                }
                entries.push(row);
            }
        }
        Ok(KaroubiMorphism {
            source,
            target,
            entries,
        })
    }

    pub fn add(&self, other: &KaroubiMorphism) -> Result<KaroubiMorphism, CategoryError> {
        if self.source != other.source || self.target != other.target {
            return Err(CategoryError::Shape);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(ra, rb)| {
                ra.iter()
                    .zip(rb)
                    .map(|(a, b)| a.add(b))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(KaroubiMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Morphism::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{ColoredPartition, Partition, Sign};
    use crate::poly::{q, PolyQ};

    fn e_prime(cat: &Category) -> Morphism {
        let plus =
            Morphism::diagram_unchecked(cat, ColoredPartition::token(Sign::Plus), PolyQ::one());
        let minus =
            Morphism::diagram_unchecked(cat, ColoredPartition::token(Sign::Minus), PolyQ::one());
        plus.sub(&minus).unwrap().scale(&PolyQ::constant(q(1, 2)))
    }

    #[test]
    fn identity_is_the_idempotent() {
        let cat = Category::colored_2t();
        let e = e_prime(&cat);
        let obj = KaroubiObject::single(e.clone()).unwrap();
        assert_eq!(obj.identity().entry(0, 0), &e);
    }

    #[test]
    fn rejects_non_idempotent() {
        let cat = Category::even();
        let two = Morphism::identity(&cat, 1).scale(&PolyQ::from_int(2));
        assert!(matches!(
            KaroubiObject::single(two),
            Err(CategoryError::NotIdempotent { .. })
        ));
    }

    #[test]
    fn compression_checked() {
        let cat = Category::colored_2t();
        let e = e_prime(&cat);
        let obj = KaroubiObject::single(e).unwrap();
        let plus =
            Morphism::diagram_unchecked(&cat, ColoredPartition::token(Sign::Plus), PolyQ::one());
        assert!(matches!(
            KaroubiMorphism::new(&obj, &obj, vec![vec![plus.clone()]]),
            Err(CategoryError::CompressionViolation { row: 0, col: 0 })
        ));
        let c = KaroubiMorphism::compress(&obj, &obj, vec![vec![plus]]).unwrap();
        assert_eq!(c, obj.identity());
    }

    #[test]
    fn fourlegs_object() {
        let cat = Category::even();
        let f = Morphism::from_partition(&cat, Partition::one_block(2, 2)).unwrap();
        let obj = KaroubiObject::single(f).unwrap();
        let id = obj.identity();
        assert_eq!(id.compose(&id).unwrap(), id);
        let sum = KaroubiObject::plain(&cat, 1).direct_sum(&obj).unwrap();
        let sq = sum.tensor(&sum).unwrap();
        assert_eq!(sq.summands().len(), 4);
        assert_eq!(
            sum.identity().tensor(&sum.identity()).unwrap(),
            sq.identity()
        );
    }
}
