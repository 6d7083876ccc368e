//! Canonical preimage words: for every basis diagram a word whose
//! evaluation is exactly that diagram with coefficient one.

use super::word::{Gen, GenWord, Presentation, Term, WordError};
use crate::diagrams::{normal_form, ColoredPartition, Partition, Sign};

/// Crossing of strands `i, i+1` (0-based) among `n`.
fn adjacent_cross(i: usize, n: usize) -> Term {
    pad(Term::gen(Gen::Cross), i, n - i - 2)
}

fn pad(t: Term, left: usize, right: usize) -> Term {
    let mut parts = Vec::new();
    if left > 0 {
        parts.push(Term::ids(left));
    }
    parts.push(t);
    if right > 0 {
        parts.push(Term::ids(right));
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        Term::tensor(parts)
    }
}

fn compose_or_id(mut factors: Vec<Term>, n: usize) -> Term {
    match factors.len() {
        0 => Term::ids(n),
        1 => factors.pop().unwrap(),
        _ => Term::compose(factors),
    }
}

/// A word for the permutation diagram of `sigma` (0-based images), built
/// from adjacent crossings by bubble-sorting the leftmost descent first.
pub fn permutation_term(sigma: &[usize]) -> Term {
    let n = sigma.len();
    let mut cur = sigma.to_vec();
    let mut steps = Vec::new();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        steps.push(i);
    }
    // sigma = s_{last} ∘ ... ∘ s_{first}
    compose_or_id(
        steps.iter().rev().map(|&i| adjacent_cross(i, n)).collect(),
        n,
    )
}

/// `n -> n` one-block diagram as a ladder of fourlegs.
fn ladder(n: usize) -> Term {
    let rungs = (0..n.saturating_sub(1))
        .rev()
        .map(|i| pad(Term::gen(Gen::FourLegs), i, n - i - 2))
        .collect();
    compose_or_id(rungs, n)
}

fn tensor_power(t: Term, times: usize) -> Term {
    match times {
        0 => Term::ids(0),
        1 => t,
        _ => Term::tensor(vec![t; times]),
    }
}

/// `n -> 1` one-block diagram, `n` odd: ladder then caps on strands `2..n`.
fn funnel(n: usize) -> Term {
    if n == 1 {
        return Term::ids(1);
    }
    let caps = pad(tensor_power(Term::gen(Gen::Cap), (n - 1) / 2), 1, 0);
    Term::compose(vec![caps, ladder(n)])
}

/// One even block with `a` bottom and `b` top vertices.
fn even_block(a: usize, b: usize) -> Term {
    use std::cmp::Ordering::*;
    match (a, b) {
        (0, b) => Term::compose(vec![ladder(b), tensor_power(Term::gen(Gen::Cup), b / 2)]),
        (a, 0) => Term::compose(vec![tensor_power(Term::gen(Gen::Cap), a / 2), ladder(a)]),
        (a, b) => match a.cmp(&b) {
            Equal => ladder(a),
            Greater => {
                let lower = pad(funnel(a - b + 1), 0, b - 1);
                if b == 1 {
                    lower
                } else {
                    Term::compose(vec![ladder(b), lower])
                }
            }
            Less => even_block(b, a).flipped(),
        },
    }
}

/// One coloured-category block with `a` bottom and `b` top vertices.
fn colored_block(a: usize, b: usize) -> Term {
    // a -> 1 by left-nested merges, 1 -> b by left-nested splits
    let merges = |a: usize| {
        let mut t = Term::ids(1);
        for m in 2..=a {
            t = if m == 2 {
                Term::gen(Gen::Merge)
            } else {
                Term::compose(vec![
                    Term::gen(Gen::Merge),
                    Term::tensor(vec![t, Term::ids(1)]),
                ])
            };
        }
        t
    };
    let splits = |b: usize| merges(b).flipped();
    match (a, b) {
        (0, b) => Term::compose(vec![splits(b), Term::gen(Gen::BottomPin)]),
        (a, 0) => Term::compose(vec![Term::gen(Gen::TopPin), merges(a)]),
        (1, 1) => Term::ids(1),
        (1, b) => splits(b),
        (a, 1) => merges(a),
        (a, b) => Term::compose(vec![splits(b), merges(a)]),
    }
}

fn assemble(p: &Partition, block: impl Fn(usize, usize) -> Term) -> Term {
    let nf = normal_form(p);
    if nf.block_sizes.is_empty() {
        return Term::ids(0);
    }
    let blocks: Vec<Term> = nf.block_sizes.iter().map(|&(a, b)| block(a, b)).collect();
    let middle = if blocks.len() == 1 {
        blocks.into_iter().next().unwrap()
    } else {
        Term::tensor(blocks)
    };
    let mut factors = Vec::new();
    if nf.sigma.iter().enumerate().any(|(i, &s)| i != s) {
        factors.push(permutation_term(&nf.sigma));
    }
    factors.push(middle);
    if nf.rho.iter().enumerate().any(|(i, &s)| i != s) {
        factors.push(permutation_term(&nf.rho));
    }
    compose_or_id(factors, 0)
}

/// Word in fourlegs, cap, cup and cross evaluating to the even partition `p`.
pub fn canonical_word(p: &Partition) -> Result<GenWord, WordError> {
    if !p.is_even() {
        return Err(WordError::NotEven(p.clone()));
    }
    GenWord::new(Presentation::ParT, assemble(p, even_block))
}

fn token_row(labels: &[Sign]) -> Option<Term> {
    if labels.iter().all(|&s| s == Sign::Plus) {
        return None;
    }
    let parts: Vec<Term> = labels
        .iter()
        .map(|&s| {
            if s == Sign::Plus {
                Term::ids(1)
            } else {
                Term::token(s)
            }
        })
        .collect();
    Some(if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        Term::tensor(parts)
    })
}

/// Word in the coloured generators evaluating to `c`: token rows around the
/// uncoloured diagram.
pub fn canonical_word_colored(c: &ColoredPartition) -> Result<GenWord, WordError> {
    let k = c.k();
    let core = assemble(c.base(), colored_block);
    let mut factors = Vec::new();
    if let Some(top) = token_row(&c.labels()[k..]) {
        factors.push(top);
    }
    factors.push(core);
    if let Some(bottom) = token_row(&c.labels()[..k]) {
        factors.push(bottom);
    }
    GenWord::new(Presentation::ParZ2, compose_or_id(factors, 0))
}

#[cfg(test)]
mod tests {
    use super::super::eval::{eval_gtilde, eval_htilde};
    use super::*;
    use crate::category::{Category, Morphism};
    use crate::diagrams::{colored_classes, even_partitions, perm};

    #[test]
    fn identity_word() {
        let w = canonical_word(&Partition::identity(3)).unwrap();
        assert_eq!(w.to_string(), "(tensor id id id)");
    }

    #[test]
    fn funnel_block() {
        let p: Partition = "3>1: {1,2,3,1'}".parse().unwrap();
        let w = canonical_word(&p).unwrap();
        assert_eq!(
            eval_gtilde(&w).unwrap(),
            Morphism::from_partition(&Category::even(), p).unwrap()
        );
    }

    #[test]
    fn odd_rejected() {
        let p: Partition = "2>1: {1,2,1'}".parse().unwrap();
        assert!(matches!(canonical_word(&p), Err(WordError::NotEven(_))));
    }

    #[test]
    fn permutations_round_trip() {
        let cat = Category::even();
        for n in 0..=4 {
            for s in perm::all(n) {
                let w = GenWord::new(Presentation::ParT, permutation_term(&s)).unwrap();
                let m = eval_gtilde(&w).unwrap();
                assert_eq!(
                    m,
                    Morphism::from_partition(&cat, Partition::permutation(&s)).unwrap()
                );
            }
        }
    }

    #[test]
    fn even_round_trip() {
        let cat = Category::even();
        for n in 0..=6 {
            for k in 0..=n {
                for p in even_partitions(k, n - k) {
                    let w = canonical_word(&p).unwrap();
                    let m = eval_gtilde(&w).unwrap();
                    assert_eq!(
                        m,
                        Morphism::from_partition(&cat, p.clone()).unwrap(),
                        "{p} via {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn colored_round_trip() {
        let cat = Category::colored();
        for n in 0..=4 {
            for k in 0..=n {
                for c in colored_classes(k, n - k) {
                    let w = canonical_word_colored(&c).unwrap();
                    let m = eval_htilde(&w).unwrap();
                    assert_eq!(
                        m,
                        Morphism::from_diagram(&cat, c.clone(), crate::poly::PolyQ::one()).unwrap(),
                        "{c} via {w}"
                    );
                }
            }
        }
    }
}
