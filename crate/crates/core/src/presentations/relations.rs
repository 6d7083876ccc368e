//! Defining relations of both presentations, closed under the two
//! reflections (upside-down flip and left-right mirror).

use serde_json::json;

use super::eval::{eval, Target};
use super::word::{GenWord, Presentation};
use crate::report::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: GenWord,
    pub rhs: GenWord,
}

const PARZ2: &[(&str, &str, &str)] = &[
    (
        "merge-unit-left",
        "(compose merge (tensor bottompin id))",
        "id",
    ),
    (
        "merge-unit-right",
        "(compose merge (tensor id bottompin))",
        "id",
    ),
    (
        "split-counit-left",
        "(compose (tensor toppin id) split)",
        "id",
    ),
    (
        "split-counit-right",
        "(compose (tensor id toppin) split)",
        "id",
    ),
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
    ("cross-involutive", "(compose cross cross)", "(id 2)"),
    (
        "cross-braid",
        "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
        "(compose (tensor id cross) (tensor cross id) (tensor id cross))",
    ),
    (
        "cross-bottompin",
        "(compose cross (tensor id bottompin))",
        "(tensor bottompin id)",
    ),
    (
        "cross-toppin",
        "(compose (tensor id toppin) cross)",
        "(tensor toppin id)",
    ),
    (
        "cross-merge-natural",
        "(compose (tensor id merge) (tensor cross id) (tensor id cross))",
        "(compose cross (tensor merge id))",
    ),
    (
        "cross-split-natural",
        "(compose (tensor id cross) (tensor cross id) (tensor id split))",
        "(compose (tensor split id) cross)",
    ),
    ("merge-commutative", "(compose merge cross)", "merge"),
    (
        "special-same-token+",
        "(compose merge (tensor (token 1) (token 1)) split)",
        "(token 1)",
    ),
    (
        "special-same-token-",
        "(compose merge (tensor (token -1) (token -1)) split)",
        "(token -1)",
    ),
    (
        "special-mixed-token+-",
        "(compose merge (tensor (token 1) (token -1)) split)",
        "(scale 0 (token 1))",
    ),
    (
        "special-mixed-token-+",
        "(compose merge (tensor (token -1) (token 1)) split)",
        "(scale 0 (token -1))",
    ),
    ("lolly-is-loop", "lolly", "(scale t (id 0))"),
    ("pins-make-lolly", "(compose toppin bottompin)", "lolly"),
    (
        "token-product++",
        "(compose (token 1) (token 1))",
        "(token 1)",
    ),
    (
        "token-product+-",
        "(compose (token 1) (token -1))",
        "(token -1)",
    ),
    (
        "token-product-+",
        "(compose (token -1) (token 1))",
        "(token -1)",
    ),
    (
        "token-product--",
        "(compose (token -1) (token -1))",
        "(token 1)",
    ),
    ("token-unit", "(token 1)", "id"),
    (
        "token-cross+",
        "(compose cross (tensor (token 1) id))",
        "(compose (tensor id (token 1)) cross)",
    ),
    (
        "token-cross-",
        "(compose cross (tensor (token -1) id))",
        "(compose (tensor id (token -1)) cross)",
    ),
    (
        "token-split+",
        "(compose split (token 1))",
        "(compose (tensor (token 1) (token 1)) split)",
    ),
    (
        "token-split-",
        "(compose split (token -1))",
        "(compose (tensor (token -1) (token -1)) split)",
    ),
    (
        "token-bottompin+",
        "(compose (token 1) bottompin)",
        "bottompin",
    ),
    (
        "token-bottompin-",
        "(compose (token -1) bottompin)",
        "bottompin",
    ),
];

const PART: &[(&str, &str, &str)] = &[
    (
        "fourlegs-idempotent",
        "(compose fourlegs fourlegs)",
        "fourlegs",
    ),
    (
        "fourlegs-slide",
        "(compose (tensor id fourlegs) (tensor fourlegs id))",
        "(compose (tensor fourlegs id) (tensor id fourlegs))",
    ),
    ("loop-is-t", "(compose cap cup)", "(scale t (id 0))"),
    (
        "snake-left",
        "(compose (tensor id cap) (tensor cup id))",
        "id",
    ),
    (
        "snake-right",
        "(compose (tensor cap id) (tensor id cup))",
        "id",
    ),
    ("fourlegs-cup", "(compose fourlegs cup)", "cup"),
    (
        "fourlegs-cup-slide",
        "(compose (tensor id fourlegs) (tensor cup id))",
        "(compose (tensor fourlegs id) (tensor id cup))",
    ),
    ("cross-involutive", "(compose cross cross)", "(id 2)"),
    (
        "cross-braid",
        "(compose (tensor cross id) (tensor id cross) (tensor cross id))",
        "(compose (tensor id cross) (tensor cross id) (tensor id cross))",
    ),
    ("cap-cross", "(compose cap cross)", "cap"),
    ("fourlegs-cross", "(compose fourlegs cross)", "fourlegs"),
    (
        "cross-fourlegs-natural",
        "(compose (tensor id fourlegs) (tensor cross id) (tensor id cross))",
        "(compose (tensor cross id) (tensor id cross) (tensor fourlegs id))",
    ),
    (
        "cross-cap-natural",
        "(compose (tensor id cap) (tensor cross id) (tensor id cross))",
        "(tensor cap id)",
    ),
];

/// The relations as written, without reflections.
pub fn base_relations(p: Presentation) -> Vec<Relation> {
    let table = match p {
        Presentation::ParZ2 => PARZ2,
        Presentation::ParT => PART,
    };
    table
        .iter()
        .map(|(name, l, r)| Relation {
            name: name.to_string(),
            lhs: GenWord::parse(p, l).unwrap_or_else(|e| panic!("{name}: {e}")),
            rhs: GenWord::parse(p, r).unwrap_or_else(|e| panic!("{name}: {e}")),
        })
        .collect()
}

/// Base relations plus every reflected variant, without duplicates.
pub fn relation_suite(p: Presentation) -> Vec<Relation> {
    let mut out: Vec<Relation> = Vec::new();
    for r in base_relations(p) {
        let variants = [
            (String::new(), r.lhs.clone(), r.rhs.clone()),
            ("/flip".to_string(), r.lhs.flipped(), r.rhs.flipped()),
            ("/mirror".to_string(), r.lhs.mirrored(), r.rhs.mirrored()),
            (
                "/flip+mirror".to_string(),
                r.lhs.flipped().mirrored(),
                r.rhs.flipped().mirrored(),
            ),
        ];
        for (suffix, lhs, rhs) in variants {
            let seen = out
                .iter()
                .any(|o| (o.lhs == lhs && o.rhs == rhs) || (o.lhs == rhs && o.rhs == lhs));
            if !seen {
                out.push(Relation {
                    name: format!("{}{}", r.name, suffix),
                    lhs,
                    rhs,
                });
            }
        }
    }
    out
}

/// Checks one relation in a target; the counterexample is `lhs − rhs`.
pub fn check_relation<T: Target>(r: &Relation, target: &T) -> CheckReport {
    let params = json!({"lhs": r.lhs.to_string(), "rhs": r.rhs.to_string()});
    let check = format!("relation {}", r.name);
    match (eval(&r.lhs, target), eval(&r.rhs, target)) {
        (Ok(a), Ok(b)) => {
            let diff = (!target.equal(&a, &b))
                .then(|| format!("lhs - rhs = {}", target.difference(&a, &b)));
            CheckReport::from_outcome(check, params, diff)
        }
        (Err(e), _) | (_, Err(e)) => CheckReport::fail(check, params, e.to_string()),
    }
}

pub fn verify_relations<T: Target>(relations: &[Relation], target: &T) -> Vec<CheckReport> {
    relations
        .iter()
        .map(|r| check_relation(r, target))
        .collect()
}
