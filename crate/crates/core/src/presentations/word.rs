//! Words in the generators of the two presented categories, with an
//! S-expression text form.

use std::fmt;

use thiserror::Error;

use crate::diagrams::{Partition, Sign};
use crate::poly::PolyQ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// Generated by merge, split, cross, tokens, pins and the lolly.
    ParZ2,
    /// Generated by fourlegs, cap, cup and cross.
    ParT,
}

impl Presentation {
    pub fn allows(self, g: Gen) -> bool {
        use Gen::*;
        match self {
            Presentation::ParZ2 => matches!(
                g,
                Id | Merge | Split | Cross | Token(_) | BottomPin | TopPin | Lolly
            ),
            Presentation::ParT => matches!(g, Id | FourLegs | Cap | Cup | Cross),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Id,
    Merge,
    Split,
    Cross,
    Token(Sign),
    BottomPin,
    TopPin,
    Lolly,
    FourLegs,
    Cap,
    Cup,
}

impl Gen {
    /// `(inputs, outputs)` in copies of the generating object.
    pub fn arity(self) -> (usize, usize) {
        use Gen::*;
        match self {
            Id | Token(_) => (1, 1),
            Merge => (2, 1),
            Split => (1, 2),
            Cross | FourLegs => (2, 2),
            BottomPin => (0, 1),
            TopPin => (1, 0),
            Lolly => (0, 0),
            Cap => (2, 0),
            Cup => (0, 2),
        }
    }

    /// Image under the upside-down flip.
    pub fn flipped(self) -> Gen {
        use Gen::*;
        match self {
            Merge => Split,
            Split => Merge,
            BottomPin => TopPin,
            TopPin => BottomPin,
            Cap => Cup,
            Cup => Cap,
            g => g,
        }
    }

    fn name(self) -> &'static str {
        use Gen::*;
        match self {
            Id => "id",
            Merge => "merge",
            Split => "split",
            Cross => "cross",
            Token(_) => "token",
            BottomPin => "bottompin",
            TopPin => "toppin",
            Lolly => "lolly",
            FourLegs => "fourlegs",
            Cap => "cap",
            Cup => "cup",
        }
    }

    fn from_name(s: &str) -> Option<Gen> {
        use Gen::*;
        Some(match s {
            "id" => Id,
            "merge" => Merge,
            "split" => Split,
            "cross" => Cross,
            "bottompin" => BottomPin,
            "toppin" => TopPin,
            "lolly" => Lolly,
            "fourlegs" => FourLegs,
            "cap" => Cap,
            "cup" => Cup,
            _ => return None,
        })
    }
}

/// Term tree. `Compose([g, f])` means `g ∘ f`: the last entry acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(Gen),
    Ids(usize),
    Compose(Vec<Term>),
    Tensor(Vec<Term>),
    Scale(PolyQ, Box<Term>),
    Sum(Vec<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("arity mismatch in {context}: expected {expected} strands, found {found}")]
    ArityMismatch {
        context: String,
        expected: usize,
        found: usize,
    },
    #[error("generator `{0}` does not belong to this presentation")]
    ForeignGenerator(String),
    #[error("empty {0}")]
    Empty(&'static str),
    #[error("parse error at `{0}`")]
    Parse(String),
    #[error("diagram {0} is not even")]
    NotEven(Partition),
}

impl Term {
    pub fn gen(g: Gen) -> Term {
        Term::Gen(g)
    }

    pub fn token(g: Sign) -> Term {
        Term::Gen(Gen::Token(g))
    }

    pub fn ids(n: usize) -> Term {
        if n == 1 {
            Term::Gen(Gen::Id)
        } else {
            Term::Ids(n)
        }
    }

    /// `terms[0] ∘ terms[1] ∘ ...`.
    pub fn compose(terms: Vec<Term>) -> Term {
        Term::Compose(terms)
    }

    pub fn tensor(terms: Vec<Term>) -> Term {
        Term::Tensor(terms)
    }

    pub fn scale(c: PolyQ, t: Term) -> Term {
        Term::Scale(c, Box::new(t))
    }

    pub fn sum(terms: Vec<Term>) -> Term {
        Term::Sum(terms)
    }

    /// Checks generator membership and composability; returns `(inputs, outputs)`.
    pub fn arity(&self, pres: Presentation) -> Result<(usize, usize), WordError> {
        match self {
            Term::Gen(g) => {
                if !pres.allows(*g) {
                    return Err(WordError::ForeignGenerator(g.name().to_string()));
                }
                Ok(g.arity())
            }
            Term::Ids(n) => Ok((*n, *n)),
            Term::Compose(ts) => {
                let arities = ts
                    .iter()
                    .map(|t| t.arity(pres))
                    .collect::<Result<Vec<_>, _>>()?;
                let (Some(first), Some(last)) = (arities.first(), arities.last()) else {
                    return Err(WordError::Empty("compose"));
                };
                for (i, w) in arities.windows(2).enumerate() {
                    if w[0].0 != w[1].1 {
                        return Err(WordError::ArityMismatch {
                            context: format!(
                                "{} (factor {} feeding factor {})",
                                self,
                                i + 2,
                                i + 1
                            ),
                            expected: w[0].0,
                            found: w[1].1,
                        });
                    }
                }
                Ok((last.0, first.1))
            }
            Term::Tensor(ts) => ts.iter().try_fold((0, 0), |(a, b), t| {
                let (x, y) = t.arity(pres)?;
                Ok((a + x, b + y))
            }),
            Term::Scale(_, t) => t.arity(pres),
            Term::Sum(ts) => {
                let arities = ts
                    .iter()
                    .map(|t| t.arity(pres))
                    .collect::<Result<Vec<_>, _>>()?;
                let Some(first) = arities.first() else {
                    return Err(WordError::Empty("sum"));
                };
                for a in &arities {
                    if a != first {
                        return Err(WordError::ArityMismatch {
                            context: self.to_string(),
                            expected: first.0,
                            found: a.0,
                        });
                    }
                }
                Ok(*first)
            }
        }
    }

    /// Upside-down flip: reverses composition order and swaps dual generators.
    pub fn flipped(&self) -> Term {
        match self {
            Term::Gen(g) => Term::Gen(g.flipped()),
            Term::Ids(n) => Term::Ids(*n),
            Term::Compose(ts) => Term::Compose(ts.iter().rev().map(Term::flipped).collect()),
            Term::Tensor(ts) => Term::Tensor(ts.iter().map(Term::flipped).collect()),
            Term::Scale(c, t) => Term::Scale(c.clone(), Box::new(t.flipped())),
            Term::Sum(ts) => Term::Sum(ts.iter().map(Term::flipped).collect()),
        }
    }

    /// Left-right mirror: reverses tensor order. Every generator is its own
    /// mirror image.
    pub fn mirrored(&self) -> Term {
        match self {
            Term::Gen(g) => Term::Gen(*g),
            Term::Ids(n) => Term::Ids(*n),
            Term::Compose(ts) => Term::Compose(ts.iter().map(Term::mirrored).collect()),
            Term::Tensor(ts) => Term::Tensor(ts.iter().rev().map(Term::mirrored).collect()),
            Term::Scale(c, t) => Term::Scale(c.clone(), Box::new(t.mirrored())),
            Term::Sum(ts) => Term::Sum(ts.iter().map(Term::mirrored).collect()),
        }
    }
}

/// A well-typed word in one of the presentations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord {
    presentation: Presentation,
    term: Term,
    source: usize,
    target: usize,
}

impl GenWord {
    pub fn new(presentation: Presentation, term: Term) -> Result<Self, WordError> {
        let (source, target) = term.arity(presentation)?;
        Ok(GenWord {
            presentation,
            term,
            source,
            target,
        })
    }

    pub fn parse(presentation: Presentation, s: &str) -> Result<Self, WordError> {
        Self::new(presentation, parse_term(s)?)
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn flipped(&self) -> GenWord {
        GenWord {
            presentation: self.presentation,
            term: self.term.flipped(),
            source: self.target,
            target: self.source,
        }
    }

    pub fn mirrored(&self) -> GenWord {
        GenWord {
            presentation: self.presentation,
            term: self.term.mirrored(),
            source: self.source,
            target: self.target,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Token(g) => write!(f, "(token {g})"),
            g => f.write_str(g.name()),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, head: &str, ts: &[Term]) -> fmt::Result {
    write!(f, "({head}")?;
    for t in ts {
        write!(f, " {t}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Gen(g) => write!(f, "{g}"),
            Term::Ids(n) => write!(f, "(id {n})"),
            Term::Compose(ts) => write_list(f, "compose", ts),
            Term::Tensor(ts) => write_list(f, "tensor", ts),
            Term::Scale(c, t) => {
                let c = c.to_string();
                if c.contains(' ') {
                    write!(f, "(scale {} {t})", c.replace(' ', ""))
                } else {
                    write!(f, "(scale {c} {t})")
                }
            }
            Term::Sum(ts) => write_list(f, "sum", ts),
        }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.term)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokenize(s: &str) -> Vec<String> {
    s.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn read_sexp(tokens: &[String], pos: &mut usize) -> Result<Sexp, WordError> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| WordError::Parse("<end of input>".into()))?;
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos).map(String::as_str) {
                    None => return Err(WordError::Parse("<missing )>".into())),
                    Some(")") => {
                        *pos += 1;
                        return Ok(Sexp::List(items));
                    }
                    Some(_) => items.push(read_sexp(tokens, pos)?),
                }
            }
        }
        ")" => Err(WordError::Parse(")".into())),
        atom => Ok(Sexp::Atom(atom.to_string())),
    }
}

fn sexp_to_term(e: &Sexp) -> Result<Term, WordError> {
    match e {
        Sexp::Atom(a) => Gen::from_name(a)
            .map(Term::Gen)
            .ok_or_else(|| WordError::Parse(a.clone())),
        Sexp::List(items) => {
            let Some(Sexp::Atom(head)) = items.first() else {
                return Err(WordError::Parse("(".into()));
            };
            let args = &items[1..];
            let terms = || args.iter().map(sexp_to_term).collect::<Result<Vec<_>, _>>();
            match head.as_str() {
                "compose" => Ok(Term::Compose(terms()?)),
                "tensor" => Ok(Term::Tensor(terms()?)),
                "sum" => Ok(Term::Sum(terms()?)),
                "scale" => match args {
                    [Sexp::Atom(c), w] => {
                        let c: PolyQ = c.parse().map_err(|_| WordError::Parse(c.clone()))?;
                        Ok(Term::scale(c, sexp_to_term(w)?))
                    }
                    _ => Err(WordError::Parse(head.clone())),
                },
                "token" => match args {
                    [Sexp::Atom(g)] => {
                        let s = g
                            .parse::<i64>()
                            .ok()
                            .and_then(Sign::from_i64)
                            .ok_or_else(|| WordError::Parse(g.clone()))?;
                        Ok(Term::token(s))
                    }
                    _ => Err(WordError::Parse(head.clone())),
                },
                "id" => match args {
                    [] => Ok(Term::Gen(Gen::Id)),
                    [Sexp::Atom(n)] => Ok(Term::ids(
                        n.parse().map_err(|_| WordError::Parse(n.clone()))?,
                    )),
                    _ => Err(WordError::Parse(head.clone())),
                },
                name => match (Gen::from_name(name), args.is_empty()) {
                    (Some(g), true) => Ok(Term::Gen(g)),
                    _ => Err(WordError::Parse(name.to_string())),
                },
            }
        }
    }
}

/// Parses the S-expression form, e.g. `(compose merge (tensor id (token -1)))`.
pub fn parse_term(s: &str) -> Result<Term, WordError> {
    let tokens = tokenize(s);
    let mut pos = 0;
    let e = read_sexp(&tokens, &mut pos)?;
    if let Some(extra) = tokens.get(pos) {
        return Err(WordError::Parse(extra.clone()));
    }
    sexp_to_term(&e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let t = parse_term("(compose (tensor id merge) (split))").unwrap();
        assert_eq!(t.to_string(), "(compose (tensor id merge) split)");
        assert!(matches!(
            t.arity(Presentation::ParZ2),
            Err(WordError::ArityMismatch { .. })
        ));
        let w = GenWord::parse(
            Presentation::ParZ2,
            "(compose (tensor id merge) (tensor (split) id))",
        )
        .unwrap();
        assert_eq!(
            w.to_string(),
            "(compose (tensor id merge) (tensor split id))"
        );
        assert_eq!((w.source(), w.target()), (2, 2));
        let w = GenWord::parse(
            Presentation::ParZ2,
            "(scale 1/2 (sum id (scale -1 (token -1))))",
        )
        .unwrap();
        assert_eq!(w.to_string(), "(scale 1/2 (sum id (scale -1 (token -1))))");
        let back = GenWord::parse(Presentation::ParZ2, &w.to_string()).unwrap();
        assert_eq!(back, w);
        let w = GenWord::parse(Presentation::ParT, "(scale t+1 (id 3))").unwrap();
        assert_eq!(w.to_string(), "(scale t+1 (id 3))");
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(
            GenWord::parse(Presentation::ParZ2, "(compose merge merge)"),
            Err(WordError::ArityMismatch {
                expected: 2,
                found: 1,
                ..
            })
        ));
        assert!(matches!(
            GenWord::parse(Presentation::ParT, "merge"),
            Err(WordError::ForeignGenerator(_))
        ));
        assert!(matches!(
            GenWord::parse(Presentation::ParT, "(compose)"),
            Err(WordError::Empty(_))
        ));
        assert!(matches!(
            GenWord::parse(Presentation::ParT, "(cap"),
            Err(WordError::Parse(_))
        ));
        assert!(matches!(
            GenWord::parse(Presentation::ParT, "cap cup"),
            Err(WordError::Parse(_))
        ));
        assert!(matches!(
            GenWord::parse(Presentation::ParZ2, "(token 2)"),
            Err(WordError::Parse(_))
        ));
    }

    #[test]
    fn reflections() {
        let w =
            GenWord::parse(Presentation::ParZ2, "(compose merge (tensor bottompin id))").unwrap();
        assert_eq!(
            w.flipped().to_string(),
            "(compose (tensor toppin id) split)"
        );
        assert_eq!(
            w.mirrored().to_string(),
            "(compose merge (tensor id bottompin))"
        );
        assert_eq!(w.flipped().flipped(), w);
    }
}
