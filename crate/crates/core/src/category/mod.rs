//! Linear diagram categories: morphisms are finite combinations of diagrams
//! with polynomial coefficients, and every closed loop created by stacking
//! contributes a factor of the category's loop weight.

mod json;
mod karoubi;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::diagrams::{
    colored_classes, colored_stack, even_partitions, ColoredPartition, DiagramError, Partition,
};
use crate::poly::{PolyQ, Q};

pub use json::{JsonError, MorphismJson, TermJson};
pub use karoubi::{KaroubiMorphism, KaroubiObject};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CategoryKind {
    /// Even partitions, no colours.
    EvenPartitions,
    /// Z2-coloured partitions.
    ColoredPartitions,
}

impl CategoryKind {
    pub fn name(self) -> &'static str {
        match self {
            CategoryKind::EvenPartitions => "even",
            CategoryKind::ColoredPartitions => "colored",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "even" => Some(CategoryKind::EvenPartitions),
            "colored" => Some(CategoryKind::ColoredPartitions),
            _ => None,
        }
    }
}

/// A category instance: which diagrams, and what a loop is worth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Category {
    pub kind: CategoryKind,
    pub loop_weight: PolyQ,
}

impl Category {
    pub fn new(kind: CategoryKind, loop_weight: PolyQ) -> Self {
        Category { kind, loop_weight }
    }

    /// Even partitions with loop weight `t`.
    pub fn even() -> Self {
        Self::new(CategoryKind::EvenPartitions, PolyQ::t())
    }

    /// Coloured partitions with loop weight `t`.
    pub fn colored() -> Self {
        Self::new(CategoryKind::ColoredPartitions, PolyQ::t())
    }

    /// Coloured partitions with loop weight `2t`.
    pub fn colored_2t() -> Self {
        Self::new(
            CategoryKind::ColoredPartitions,
            PolyQ::t().scale(&crate::poly::qi(2)),
        )
    }

    /// Basis diagrams of `Hom(k, l)`.
    pub fn basis(&self, k: usize, l: usize) -> Vec<ColoredPartition> {
        match self.kind {
            CategoryKind::EvenPartitions => even_partitions(k, l)
                .iter()
                .map(Partition::uncolored)
                .collect(),
            CategoryKind::ColoredPartitions => colored_classes(k, l),
        }
    }

    /// Whether `d` is a basis diagram of this category.
    pub fn admits(&self, d: &ColoredPartition) -> bool {
        match self.kind {
            CategoryKind::EvenPartitions => d.is_uncolored() && d.base().is_even(),
            CategoryKind::ColoredPartitions => true,
        }
    }

    /// Same kind, loop weight evaluated at `t = at`.
    pub fn specialize(&self, at: &Q) -> Category {
        Category::new(self.kind, PolyQ::constant(self.loop_weight.eval(at)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("cannot compose: source has {found} strands but target has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("morphisms belong to different categories")]
    CategoryMismatch,
    #[error("trace needs an endomorphism, got {k} -> {l}")]
    NotEndomorphism { k: usize, l: usize },
    #[error("diagram {0} is not a basis element of this category")]
    NotInCategory(ColoredPartition),
    #[error("diagram {diagram} has size {found:?}, expected {expected:?}")]
    WrongSize {
        diagram: ColoredPartition,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("not idempotent: e∘e - e = {residual}")]
    NotIdempotent { residual: Box<Morphism> },
    #[error("entry ({row}, {col}) is not compressed by the idempotents")]
    CompressionViolation { row: usize, col: usize },
    #[error("entry matrix has the wrong shape")]
    Shape,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A linear combination of diagrams of size `(source, target)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    category: Category,
    source: usize,
    target: usize,
    terms: BTreeMap<ColoredPartition, PolyQ>,
}

impl Morphism {
    pub fn zero(category: &Category, source: usize, target: usize) -> Self {
        Morphism {
            category: category.clone(),
            source,
            target,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(category: &Category, n: usize) -> Self {
        Self::diagram_unchecked(category, Partition::identity(n).uncolored(), PolyQ::one())
    }

    /// `coeff · d`; rejects diagrams outside the category.
    pub fn from_diagram(
        category: &Category,
        d: ColoredPartition,
        coeff: PolyQ,
    ) -> Result<Self, CategoryError> {
        if !category.admits(&d) {
            return Err(CategoryError::NotInCategory(d));
        }
        Ok(Self::diagram_unchecked(category, d, coeff))
    }

    pub fn from_partition(category: &Category, p: Partition) -> Result<Self, CategoryError> {
        Self::from_diagram(category, p.uncolored(), PolyQ::one())
    }

    pub(crate) fn diagram_unchecked(
        category: &Category,
        d: ColoredPartition,
        coeff: PolyQ,
    ) -> Self {
        let mut m = Self::zero(category, d.k(), d.l());
        m.add_term(d, coeff);
        m
    }

    /// Builds from `(diagram, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(
        category: &Category,
        source: usize,
        target: usize,
        terms: I,
    ) -> Result<Self, CategoryError>
    where
        I: IntoIterator<Item = (ColoredPartition, PolyQ)>,
    {
        let mut m = Self::zero(category, source, target);
        for (d, c) in terms {
            if !category.admits(&d) {
                return Err(CategoryError::NotInCategory(d));
            }
            if (d.k(), d.l()) != (source, target) {
                let found = (d.k(), d.l());
                return Err(CategoryError::WrongSize {
                    diagram: d,
                    expected: (source, target),
                    found,
                });
            }
            m.add_term(d, c);
        }
        Ok(m)
    }

    pub(crate) fn add_term(&mut self, d: ColoredPartition, c: PolyQ) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn category(&self) -> &Category {
        &self.category
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn terms(&self) -> &BTreeMap<ColoredPartition, PolyQ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &ColoredPartition) -> PolyQ {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    fn check_same(&self, other: &Morphism) -> Result<(), CategoryError> {
        if self.category != other.category {
            return Err(CategoryError::CategoryMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism, CategoryError> {
        self.check_same(other)?;
        if (self.source, self.target) != (other.source, other.target) {
            return Err(CategoryError::SizeMismatch {
                expected: self.source,
                found: other.source,
            });
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism, CategoryError> {
        self.add(&other.scale(&PolyQ::from_int(-1)))
    }

    pub fn scale(&self, c: &PolyQ) -> Morphism {
        let mut out = Self::zero(&self.category, self.source, self.target);
        if c.is_zero() {
            return out;
        }
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    /// `self ∘ f`: first `f`, then `self`.
    pub fn compose(&self, f: &Morphism) -> Result<Morphism, CategoryError> {
        self.check_same(f)?;
        if self.source != f.target {
            return Err(CategoryError::SizeMismatch {
                expected: f.target,
                found: self.source,
            });
        }
        let mut out = Self::zero(&self.category, f.source, self.target);
        let mut powers: Vec<PolyQ> = vec![PolyQ::one()];
        for (dq, cq) in &self.terms {
            for (dp, cp) in &f.terms {
                let Some(st) = colored_stack(dq, dp)? else {
                    continue;
                };
                while powers.len() <= st.loops {
                    let next = powers.last().unwrap() * &self.category.loop_weight;
                    powers.push(next);
                }
                let c = &(cq * cp) * &powers[st.loops];
                out.add_term(st.composite, c);
            }
        }
        Ok(out)
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, g: &Morphism) -> Result<Morphism, CategoryError> {
        self.check_same(g)?;
        let mut out = Self::zero(
            &self.category,
            self.source + g.source,
            self.target + g.target,
        );
        for (d1, c1) in &self.terms {
            for (d2, c2) in &g.terms {
                out.add_term(d1.tensor(d2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Termwise row swap; a contravariant involution.
    pub fn involution(&self) -> Morphism {
        let mut out = Self::zero(&self.category, self.target, self.source);
        for (d, c) in &self.terms {
            out.add_term(d.involution(), c.clone());
        }
        out
    }

    /// Termwise left-right mirror image.
    pub fn mirror(&self) -> Morphism {
        let mut out = Self::zero(&self.category, self.source, self.target);
        for (d, c) in &self.terms {
            out.add_term(d.mirror(), c.clone());
        }
        out
    }

    /// Evaluates all coefficients and the loop weight at `t = at`.
    pub fn specialize(&self, at: &Q) -> Morphism {
        let category = self.category.specialize(at);
        let mut out = Self::zero(&category, self.source, self.target);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), PolyQ::constant(c.eval(at)));
        }
        out
    }

    /// Closes each strand `i` to `i'` on the right.
    pub fn trace_right(&self) -> Result<PolyQ, CategoryError> {
        let k = self.endo_size()?;
        let id = Self::identity(&self.category, k);
        self.close(&self.tensor(&id)?, k)
    }

    /// Closes each strand `i` to `i'` on the left.
    pub fn trace_left(&self) -> Result<PolyQ, CategoryError> {
        let k = self.endo_size()?;
        let id = Self::identity(&self.category, k);
        self.close(&id.tensor(self)?, k)
    }

    /// Right trace; see [`Morphism::trace_right`].
    pub fn trace(&self) -> Result<PolyQ, CategoryError> {
        self.trace_right()
    }

    fn endo_size(&self) -> Result<usize, CategoryError> {
        if self.source != self.target {
            return Err(CategoryError::NotEndomorphism {
                k: self.source,
                l: self.target,
            });
        }
        Ok(self.source)
    }

    fn close(&self, doubled: &Morphism, k: usize) -> Result<PolyQ, CategoryError> {
        let cup = Self::diagram_unchecked(
            &self.category,
            nested_cap(k).involution().uncolored(),
            PolyQ::one(),
        );
        let cap = Self::diagram_unchecked(&self.category, nested_cap(k).uncolored(), PolyQ::one());
        let scalar = cap.compose(&doubled.compose(&cup)?)?;
        Ok(scalar.coeff(&Partition::empty().uncolored()))
    }

    /// Categorical dimension of `n` strands.
    pub fn dim(category: &Category, n: usize) -> PolyQ {
        Self::identity(category, n)
            .trace()
            .expect("identity is an endomorphism")
    }
}

/// `2k -> 0` with blocks `{i, 2k+1-i}`.
pub fn nested_cap(k: usize) -> Partition {
    let labels: Vec<usize> = (0..2 * k).map(|i| i.min(2 * k - 1 - i)).collect();
    Partition::from_labels(2 * k, 0, &labels)
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "({d})")?;
            } else if c.terms().len() > 1 {
                write!(f, "({c}) * ({d})")?;
            } else {
                write!(f, "{c} * ({d})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Morphism[{} {}; {}->{}]({self})",
            self.category.kind.name(),
            self.category.loop_weight,
            self.source,
            self.target
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Sign;
    use crate::poly::{q, qi};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn cap_after_cup() {
        let cat = Category::even();
        let cap = Morphism::from_partition(&cat, p("2>0: {1,2}")).unwrap();
        let cup = Morphism::from_partition(&cat, p("0>2: {1',2'}")).unwrap();
        let r = cap.compose(&cup).unwrap();
        assert_eq!(r.to_string(), "t * (0>0:)");
        let cat2 = Category::colored_2t();
        let cap = Morphism::from_partition(&cat2, p("2>0: {1,2}")).unwrap();
        let cup = Morphism::from_partition(&cat2, p("0>2: {1',2'}")).unwrap();
        assert_eq!(cap.compose(&cup).unwrap().to_string(), "2*t * (0>0:)");
    }

    #[test]
    fn rejects_odd_in_even() {
        let cat = Category::even();
        assert!(matches!(
            Morphism::from_partition(&cat, p("2>1: {1,2,1'}")),
            Err(CategoryError::NotInCategory(_))
        ));
    }

    #[test]
    fn compose_errors() {
        let cat = Category::even();
        let id1 = Morphism::identity(&cat, 1);
        let id2 = Morphism::identity(&cat, 2);
        assert!(matches!(
            id1.compose(&id2),
            Err(CategoryError::SizeMismatch { .. })
        ));
        let other = Morphism::identity(&Category::colored(), 1);
        assert_eq!(id1.compose(&other), Err(CategoryError::CategoryMismatch));
    }

    #[test]
    fn dimensions() {
        assert_eq!(Morphism::dim(&Category::even(), 1), PolyQ::t());
        assert_eq!(Morphism::dim(&Category::even(), 2), PolyQ::t().pow(2));
        assert_eq!(
            Morphism::dim(&Category::colored_2t(), 1),
            PolyQ::t().scale(&qi(2))
        );
        let f = Morphism::identity(&Category::even(), 2);
        assert_eq!(
            Morphism::identity(&Category::even(), 0).trace().unwrap(),
            PolyQ::one()
        );
        assert!(matches!(
            Morphism::zero(&Category::even(), 1, 3).trace(),
            Err(CategoryError::NotEndomorphism { k: 1, l: 3 })
        ));
        assert_eq!(f.trace_left().unwrap(), f.trace_right().unwrap());
    }

    #[test]
    fn e_prime_trace() {
        let cat = Category::colored_2t();
        let plus =
            Morphism::diagram_unchecked(&cat, ColoredPartition::token(Sign::Plus), PolyQ::one());
        let minus =
            Morphism::diagram_unchecked(&cat, ColoredPartition::token(Sign::Minus), PolyQ::one());
        let e = plus.sub(&minus).unwrap().scale(&PolyQ::constant(q(1, 2)));
        assert_eq!(e.compose(&e).unwrap(), e);
        assert_eq!(e.trace().unwrap(), PolyQ::t());
    }

    #[test]
    fn display_coefficients() {
        let cat = Category::even();
        let id = Morphism::identity(&cat, 1);
        let f = id.scale(&"t + 1".parse().unwrap());
        assert_eq!(f.to_string(), "(t + 1) * (1>1: {1,1'})");
        assert_eq!(id.to_string(), "(1>1: {1,1'})");
        assert_eq!(id.scale(&PolyQ::zero()).to_string(), "0");
    }
}
