//! Univariate polynomials in the formal parameter `t` with exact rational
//! coefficients. This is the scalar ring of every morphism space.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number.
pub type Q = BigRational;

/// Convenience constructor for small rationals.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("empty polynomial literal")]
    Empty,
    #[error("unexpected token `{0}` in polynomial literal")]
    Unexpected(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// A polynomial in `t` over the rationals.
///
/// Stored as `(exponent, coefficient)` pairs sorted by increasing exponent,
/// with no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    terms: Vec<(u32, Q)>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(qi(n))
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn monomial(c: Q, exp: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            PolyQ {
                terms: vec![(exp, c)],
            }
        }
    }

    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (u32, Q)>>(it: I) -> Self {
        let mut terms: Vec<(u32, Q)> = it.into_iter().collect();
        terms.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(u32, Q)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        PolyQ { terms: out }
    }

    pub fn terms(&self) -> &[(u32, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, exp: u32) -> Q {
        self.terms
            .iter()
            .find(|(e, _)| *e == exp)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQ {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at an exact rational point.
    pub fn eval(&self, at: &Q) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            acc += c * num_traits::pow(at.clone(), *e as usize);
        }
        acc
    }

    /// Substitutes `t -> factor * t`.
    pub fn rescale_variable(&self, factor: &Q) -> Self {
        PolyQ::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (*e, c * num_traits::pow(factor.clone(), *e as usize))),
        )
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &Q, e: u32) -> fmt::Result {
    let var = match e {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    };
    if e == 0 {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{var}")
    } else {
        write!(f, "{c}*{var}")
    }
}

/// Canonical text form, highest degree first: `2*t^2 - t + 1/2`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_monomial(f, &c.abs(), *e)?;
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<Q, PolyParseError> {
    let bad = || PolyParseError::Unexpected(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(PolyParseError::ZeroDenominator(s.to_string()));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a rational literal such as `3`, `-1/2`.
pub fn parse_q(s: &str) -> Result<Q, PolyParseError> {
    parse_rational(s.trim())
}

fn parse_monomial(s: &str) -> Result<(u32, Q), PolyParseError> {
    let bad = || PolyParseError::Unexpected(s.to_string());
    let (coeff, var) = match s.find('t') {
        None => return Ok((0, parse_rational(s)?)),
        Some(pos) => {
            let (c, v) = s.split_at(pos);
            let c = c.trim_end_matches('*').trim();
            let c = if c.is_empty() {
                Q::one()
            } else {
                parse_rational(c)?
            };
            (c, v)
        }
    };
    let exp = match var {
        "t" => 1,
        v => v
            .strip_prefix("t^")
            .and_then(|x| x.parse::<u32>().ok())
            .ok_or_else(bad)?,
    };
    Ok((exp, coeff))
}

impl FromStr for PolyQ {
    type Err = PolyParseError;

    /// Accepts the `Display` format and reasonable variants (`t`, `2t`,
    /// `-3/4*t^2+1`, whitespace anywhere).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyParseError::Empty);
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut sign = 1i64;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.ends_with('^') {
                if current.is_empty() {
                    return Err(PolyParseError::Unexpected(compact.clone()));
                }
                let (e, c) = parse_monomial(&current)?;
                terms.push((e, c * qi(sign)));
                current.clear();
                sign = if ch == '-' { -1 } else { 1 };
            } else if (ch == '+' || ch == '-') && i == 0 {
                sign = if ch == '-' { -1 } else { 1 };
            } else {
                current.push(ch);
            }
        }
        if current.is_empty() {
            return Err(PolyParseError::Unexpected(compact));
        }
        let (e, c) = parse_monomial(&current)?;
        terms.push((e, c * qi(sign)));
        Ok(PolyQ::from_terms(terms))
    }
}

impl From<Q> for PolyQ {
    fn from(c: Q) -> Self {
        PolyQ::constant(c)
    }
}

impl From<i64> for PolyQ {
    fn from(n: i64) -> Self {
        PolyQ::from_int(n)
    }
}

impl<'a> Add<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            match (self.terms.get(i), rhs.terms.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    let c = &a.1 + &b.1;
                    if !c.is_zero() {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    out.push(a.clone());
                    i += 1;
                }
                (Some(_), Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => {
                    out.push(b.clone());
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        PolyQ { terms: out }
    }
}

impl Add for PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: PolyQ) -> PolyQ {
        &self + &rhs
    }
}

impl AddAssign<&PolyQ> for PolyQ {
    fn add_assign(&mut self, rhs: &PolyQ) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl<'a> Sub<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl Sub for PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: PolyQ) -> PolyQ {
        &self - &rhs
    }
}

impl<'a> Mul<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        if let [(0, c)] = self.terms.as_slice() {
            return rhs.scale(c);
        }
        if let [(0, c)] = rhs.terms.as_slice() {
            return self.scale(c);
        }
        #[allow(clippy::suspicious_arithmetic_impl)]
        PolyQ::from_terms(
            self.terms
                .iter()
                .flat_map(|(e1, c1)| rhs.terms.iter().map(move |(e2, c2)| (e1 + e2, c1 * c2))),
        )
    }
}

impl Mul for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: PolyQ) -> PolyQ {
        &self * &rhs
    }
}
