//! Structured data classifying functors out of the presented categories.
//!
//! For the coloured presentation the datum is a special commutative
//! Frobenius object with an involution: multiplication `merge`, unit
//! `bottompin`, comultiplication `split`, counit `toppin`, involution
//! `token -1`, all compatible with the symmetry `cross`. For the fourlegs
//! presentation it is a self-dual object (`cap`, `cup`) of dimension `t` with
//! a neutralizer `fourlegs`. Any target whose generator values satisfy these
//! axioms receives a unique functor, evaluated by [`VerifiedDatum::eval`].

use thiserror::Error;

use super::eval::{eval, Target};
use super::relations::{check_relation, Relation};
use super::word::{GenWord, Presentation, WordError};
use crate::report::CheckReport;

const FROBENIUS_INVOLUTION: &[(&str, &str, &str)] = &[
    (
        "associative",
        "(compose merge (tensor merge id))",
        "(compose merge (tensor id merge))",
    ),
    ("unit-left", "(compose merge (tensor bottompin id))", "id"),
    ("unit-right", "(compose merge (tensor id bottompin))", "id"),
    (
        "coassociative",
        "(compose (tensor split id) split)",
        "(compose (tensor id split) split)",
    ),
    ("counit-left", "(compose (tensor toppin id) split)", "id"),
    ("counit-right", "(compose (tensor id toppin) split)", "id"),
    (
        "frobenius-left",
        "(compose (tensor merge id) (tensor id split))",
        "(compose split merge)",
    ),
    (
        "frobenius-right",
        "(compose (tensor id merge) (tensor split id))",
        "(compose split merge)",
    ),
    ("commutative", "(compose merge cross)", "merge"),
    ("cocommutative", "(compose cross split)", "split"),
    ("special", "(compose merge split)", "id"),
    (
        "dimension",
        "(compose toppin bottompin)",
        "(scale t (id 0))",
    ),
    ("involution", "(compose (token -1) (token -1))", "id"),
    (
        "involution-multiplicative",
        "(compose (token -1) merge)",
        "(compose merge (tensor (token -1) (token -1)))",
    ),
    (
        "involution-unit",
        "(compose (token -1) bottompin)",
        "bottompin",
    ),
    (
        "involution-comultiplicative",
        "(compose split (token -1))",
        "(compose (tensor (token -1) (token -1)) split)",
    ),
    ("involution-counit", "(compose toppin (token -1))", "toppin"),
    (
        "involution-separates",
        "(compose merge (tensor id (token -1)) split)",
        "(scale 0 id)",
    ),
    ("symmetry-involutive", "(compose cross cross)", "(id 2)"),
    (
        "symmetry-braid",
        "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
        "(compose (tensor id cross) (tensor cross id) (tensor id cross))",
    ),
    (
        "symmetry-natural-merge",
        "(compose (tensor id merge) (tensor cross id) (tensor id cross))",
        "(compose cross (tensor merge id))",
    ),
    (
        "symmetry-natural-split",
        "(compose (tensor id cross) (tensor cross id) (tensor id split))",
        "(compose (tensor split id) cross)",
    ),
    (
        "symmetry-natural-unit",
        "(compose cross (tensor id bottompin))",
        "(tensor bottompin id)",
    ),
    (
        "symmetry-natural-counit",
        "(compose (tensor id toppin) cross)",
        "(tensor toppin id)",
    ),
    (
        "symmetry-natural-involution",
        "(compose cross (tensor (token -1) id))",
        "(compose (tensor id (token -1)) cross)",
    ),
];

const SELF_DUAL_NEUTRALIZER: &[(&str, &str, &str)] = &[
    (
        "zigzag-left",
        "(compose (tensor id cap) (tensor cup id))",
        "id",
    ),
    (
        "zigzag-right",
        "(compose (tensor cap id) (tensor id cup))",
        "id",
    ),
    ("dimension", "(compose cap cup)", "(scale t (id 0))"),
    (
        "neutralizer-idempotent",
        "(compose fourlegs fourlegs)",
        "fourlegs",
    ),
    (
        "neutralizer-slide",
        "(compose (tensor id fourlegs) (tensor fourlegs id))",
        "(compose (tensor fourlegs id) (tensor id fourlegs))",
    ),
    ("neutralizer-coevaluation", "(compose fourlegs cup)", "cup"),
    ("neutralizer-evaluation", "(compose cap fourlegs)", "cap"),
    (
        "neutralizer-dual",
        "(compose (tensor id fourlegs) (tensor cup id))",
        "(compose (tensor fourlegs id) (tensor id cup))",
    ),
    (
        "neutralizer-symmetric",
        "(compose fourlegs cross)",
        "fourlegs",
    ),
    ("evaluation-symmetric", "(compose cap cross)", "cap"),
    ("symmetry-involutive", "(compose cross cross)", "(id 2)"),
    (
        "symmetry-braid",
        "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
        "(compose (tensor id cross) (tensor cross id) (tensor id cross))",
    ),
    (
        "symmetry-natural-neutralizer",
        "(compose (tensor id fourlegs) (tensor cross id) (tensor id cross))",
        "(compose (tensor cross id) (tensor id cross) (tensor fourlegs id))",
    ),
    (
        "symmetry-natural-evaluation",
        "(compose (tensor id cap) (tensor cross id) (tensor id cross))",
        "(tensor cap id)",
    ),
];

/// The axioms a datum for presentation `p` must satisfy.
pub fn datum_axioms(p: Presentation) -> Vec<Relation> {
    let table = match p {
        Presentation::ParZ2 => FROBENIUS_INVOLUTION,
        Presentation::ParT => SELF_DUAL_NEUTRALIZER,
    };
    table
        .iter()
        .map(|(name, l, r)| Relation {
            name: name.to_string(),
            lhs: GenWord::parse(p, l).expect("axiom literal"),
            rhs: GenWord::parse(p, r).expect("axiom literal"),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("datum violates axiom `{axiom}`: {detail}")]
pub struct DatumViolation {
    pub axiom: String,
    pub detail: String,
}

/// One report per axiom.
pub fn datum_reports<T: Target>(target: &T) -> Vec<CheckReport> {
    datum_axioms(target.presentation())
        .iter()
        .map(|r| {
            let mut rep = check_relation(r, target);
            rep.check = format!("axiom {}", r.name);
            rep
        })
        .collect()
}

/// A target whose generator values passed every axiom.
#[derive(Debug, Clone)]
pub struct VerifiedDatum<T: Target>(T);

impl<T: Target> VerifiedDatum<T> {
    pub fn target(&self) -> &T {
        &self.0
    }

    pub fn eval(&self, w: &GenWord) -> Result<T::Mor, WordError> {
        eval(w, &self.0)
    }
}

pub fn verify_datum<T: Target>(target: T) -> Result<VerifiedDatum<T>, DatumViolation> {
    for r in datum_reports(&target) {
        if !r.pass {
            return Err(DatumViolation {
                axiom: r.check.trim_start_matches("axiom ").to_string(),
                detail: r.counterexample.unwrap_or_default(),
            });
        }
    }
    Ok(VerifiedDatum(target))
}

#[cfg(test)]
mod tests {
    use super::super::eval::{eval_gtilde, eval_htilde, DiagramTarget};
    use super::super::word::Gen;
    use super::*;
    use crate::category::{Category, Morphism};
    use crate::poly::PolyQ;

    #[test]
    fn diagram_categories_are_data() {
        let d = verify_datum(DiagramTarget::colored(&Category::colored())).unwrap();
        let w = GenWord::parse(
            Presentation::ParZ2,
            "(compose merge (tensor (token -1) id))",
        )
        .unwrap();
        assert_eq!(d.eval(&w).unwrap(), eval_htilde(&w).unwrap());
        let d = verify_datum(DiagramTarget::even(&Category::even())).unwrap();
        let w = GenWord::parse(Presentation::ParT, "(compose cap fourlegs cup)").unwrap();
        assert_eq!(d.eval(&w).unwrap(), eval_gtilde(&w).unwrap());
    }

    /// The diagram target with one generator scaled by two.
    #[derive(Debug)]
    struct Broken(DiagramTarget);

    impl Target for Broken {
        type Mor = Morphism;
        fn presentation(&self) -> Presentation {
            self.0.presentation()
        }
        fn identity(&self, n: usize) -> Morphism {
            self.0.identity(n)
        }
        fn zero(&self, k: usize, l: usize) -> Morphism {
            self.0.zero(k, l)
        }
        fn generator(&self, g: Gen) -> Morphism {
            let m = self.0.generator(g);
            if g == Gen::FourLegs {
                m.scale(&PolyQ::from_int(2))
            } else {
                m
            }
        }
        fn compose(&self, g: &Morphism, f: &Morphism) -> Morphism {
            self.0.compose(g, f)
        }
        fn tensor(&self, a: &Morphism, b: &Morphism) -> Morphism {
            self.0.tensor(a, b)
        }
        fn scale(&self, c: &PolyQ, a: &Morphism) -> Morphism {
            self.0.scale(c, a)
        }
        fn add(&self, a: &Morphism, b: &Morphism) -> Morphism {
            self.0.add(a, b)
        }
        fn equal(&self, a: &Morphism, b: &Morphism) -> bool {
            self.0.equal(a, b)
        }
    }

    #[test]
    fn violation_names_axiom() {
        let err = verify_datum(Broken(DiagramTarget::even(&Category::even()))).unwrap_err();
        assert_eq!(err.axiom, "neutralizer-idempotent");
    }
}
