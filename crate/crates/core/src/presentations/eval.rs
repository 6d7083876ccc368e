//! Evaluation of words in a strict linear symmetric monoidal target.

use std::fmt;

use super::word::{Gen, GenWord, Presentation, Term, WordError};
use crate::category::{Category, CategoryKind, Morphism};
use crate::diagrams::{ColoredPartition, Partition, Sign};
use crate::poly::PolyQ;

/// Everything needed to send generators somewhere and extend functorially.
///
/// Words are type-checked before evaluation, so the operations may assume
/// compatible shapes.
pub trait Target {
    type Mor: Clone + fmt::Display;

    fn presentation(&self) -> Presentation;
    fn identity(&self, n: usize) -> Self::Mor;
    fn zero(&self, k: usize, l: usize) -> Self::Mor;
    fn generator(&self, g: Gen) -> Self::Mor;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn tensor(&self, a: &Self::Mor, b: &Self::Mor) -> Self::Mor;
    /// Scalars are polynomials in the parameter; numeric targets evaluate.
    fn scale(&self, c: &PolyQ, a: &Self::Mor) -> Self::Mor;
    fn add(&self, a: &Self::Mor, b: &Self::Mor) -> Self::Mor;
    fn equal(&self, a: &Self::Mor, b: &Self::Mor) -> bool;

    fn difference(&self, a: &Self::Mor, b: &Self::Mor) -> Self::Mor {
        self.add(a, &self.scale(&PolyQ::from_int(-1), b))
    }
}

/// Evaluates a word after checking it belongs to the target's presentation.
pub fn eval<T: Target>(w: &GenWord, target: &T) -> Result<T::Mor, WordError> {
    if w.presentation() != target.presentation() {
        return Err(WordError::ForeignGenerator(format!("{w}")));
    }
    Ok(eval_term(w.term(), w.presentation(), target))
}

fn eval_term<T: Target>(t: &Term, pres: Presentation, target: &T) -> T::Mor {
    match t {
        Term::Gen(g) => target.generator(*g),
        Term::Ids(n) => target.identity(*n),
        Term::Compose(ts) => {
            let mut it = ts.iter().rev();
            let first = eval_term(it.next().expect("checked nonempty"), pres, target);
            it.fold(first, |acc, t| {
                target.compose(&eval_term(t, pres, target), &acc)
            })
        }
        Term::Tensor(ts) => ts.iter().fold(target.identity(0), |acc, t| {
            target.tensor(&acc, &eval_term(t, pres, target))
        }),
        Term::Scale(c, t) => target.scale(c, &eval_term(t, pres, target)),
        Term::Sum(ts) => {
            let (k, l) = t.arity(pres).expect("checked");
            ts.iter().fold(target.zero(k, l), |acc, t| {
                target.add(&acc, &eval_term(t, pres, target))
            })
        }
    }
}

/// The diagram categories as targets: generators go to their diagrams.
#[derive(Debug, Clone)]
pub struct DiagramTarget {
    category: Category,
    presentation: Presentation,
}

impl DiagramTarget {
    /// Coloured-partition target for the coloured presentation.
    pub fn colored(category: &Category) -> Self {
        assert_eq!(category.kind, CategoryKind::ColoredPartitions);
        DiagramTarget {
            category: category.clone(),
            presentation: Presentation::ParZ2,
        }
    }

    /// Even-partition target for the fourlegs presentation.
    pub fn even(category: &Category) -> Self {
        assert_eq!(category.kind, CategoryKind::EvenPartitions);
        DiagramTarget {
            category: category.clone(),
            presentation: Presentation::ParT,
        }
    }

    pub fn category(&self) -> &Category {
        &self.category
    }
}

/// The diagram a generator names; the lolly is a closed loop, i.e. the
/// loop weight times the empty diagram, so it is handled separately.
pub fn generator_diagram(g: Gen) -> Option<ColoredPartition> {
    let p = |s: &str| s.parse::<Partition>().expect("literal").uncolored();
    Some(match g {
        Gen::Id => p("1>1: {1,1'}"),
        Gen::Merge => p("2>1: {1,2,1'}"),
        Gen::Split => p("1>2: {1,1',2'}"),
        Gen::Cross => p("2>2: {1,2'},{2,1'}"),
        Gen::Token(s) => ColoredPartition::token(s),
        Gen::BottomPin => p("0>1: {1'}"),
        Gen::TopPin => p("1>0: {1}"),
        Gen::Lolly => return None,
        Gen::FourLegs => p("2>2: {1,2,1',2'}"),
        Gen::Cap => p("2>0: {1,2}"),
        Gen::Cup => p("0>2: {1',2'}"),
    })
}

impl Target for DiagramTarget {
    type Mor = Morphism;

    fn presentation(&self) -> Presentation {
        self.presentation
    }

    fn identity(&self, n: usize) -> Morphism {
        Morphism::identity(&self.category, n)
    }

    fn zero(&self, k: usize, l: usize) -> Morphism {
        Morphism::zero(&self.category, k, l)
    }

    fn generator(&self, g: Gen) -> Morphism {
        match generator_diagram(g) {
            Some(d) => Morphism::from_diagram(&self.category, d, PolyQ::one())
                .expect("generator lies in its category"),
            None => Morphism::identity(&self.category, 0).scale(&self.category.loop_weight),
        }
    }

    fn compose(&self, g: &Morphism, f: &Morphism) -> Morphism {
        g.compose(f).expect("type-checked word")
    }

    fn tensor(&self, a: &Morphism, b: &Morphism) -> Morphism {
        a.tensor(b).expect("same category")
    }

    fn scale(&self, c: &PolyQ, a: &Morphism) -> Morphism {
        a.scale(c)
    }

    fn add(&self, a: &Morphism, b: &Morphism) -> Morphism {
        a.add(b).expect("type-checked word")
    }

    fn equal(&self, a: &Morphism, b: &Morphism) -> bool {
        a == b
    }
}

/// Evaluation into coloured partitions with loop weight `t`.
pub fn eval_htilde(w: &GenWord) -> Result<Morphism, WordError> {
    eval(w, &DiagramTarget::colored(&Category::colored()))
}

/// Evaluation into even partitions with loop weight `t`.
pub fn eval_gtilde(w: &GenWord) -> Result<Morphism, WordError> {
    eval(w, &DiagramTarget::even(&Category::even()))
}

/// `½(token(+1) − token(−1))` as a word.
pub fn e_prime_word() -> GenWord {
    let half = PolyQ::constant(crate::poly::q(1, 2));
    let t = Term::scale(
        half,
        Term::sum(vec![
            Term::token(Sign::Plus),
            Term::scale(PolyQ::from_int(-1), Term::token(Sign::Minus)),
        ]),
    );
    GenWord::new(Presentation::ParZ2, t).expect("well typed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(s: &str) -> GenWord {
        GenWord::parse(Presentation::ParZ2, s).unwrap()
    }

    fn pt(s: &str) -> GenWord {
        GenWord::parse(Presentation::ParT, s).unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(
            eval_htilde(&z2("merge")).unwrap().to_string(),
            "(2>1: {1,2,1'})"
        );
        assert_eq!(eval_htilde(&z2("lolly")).unwrap().to_string(), "t * (0>0:)");
        assert_eq!(
            eval_gtilde(&pt("fourlegs")).unwrap().to_string(),
            "(2>2: {1,2,1',2'})"
        );
        assert_eq!(
            eval_gtilde(&pt("(compose cap cup)")).unwrap().to_string(),
            "t * (0>0:)"
        );
        assert_eq!(
            eval_gtilde(&pt("(compose cross cross)")).unwrap(),
            Morphism::identity(&Category::even(), 2)
        );
    }

    #[test]
    fn tokens_multiply() {
        let m = eval_htilde(&z2("(compose (token -1) (token -1))")).unwrap();
        assert_eq!(m, Morphism::identity(&Category::colored(), 1));
        let m = eval_htilde(&z2("(compose (token 1) (token -1))")).unwrap();
        assert_eq!(m.to_string(), "(1>1: {1,1':-1})");
    }

    #[test]
    fn e_prime_idempotent() {
        let e = eval_htilde(&e_prime_word()).unwrap();
        assert_eq!(e.compose(&e).unwrap(), e);
    }

    #[test]
    fn wrong_presentation_rejected() {
        let t = DiagramTarget::even(&Category::even());
        assert!(eval(&z2("id"), &t).is_err());
    }
}
