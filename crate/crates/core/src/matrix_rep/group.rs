//! The hyperoctahedral group `H_n` of signed permutations and its two
//! defining representations.

use serde::{Deserialize, Serialize};

use super::matrix::MatrixQ;
use crate::diagrams::{perm, Sign};
use crate::poly::qi;

/// `(a, σ)` with `a ∈ {±1}^n` and `σ ∈ S_n` (0-based images).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub signs: Vec<Sign>,
    pub perm: Vec<usize>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            signs: vec![Sign::Plus; n],
            perm: perm::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// `(a, σ)(b, ρ) = (a · (b ∘ σ⁻¹), σρ)`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        let inv = perm::inverse(&self.perm);
        let signs = (0..self.n())
            .map(|i| self.signs[i] * other.signs[inv[i]])
            .collect();
        GroupElement {
            signs,
            perm: perm::compose(&self.perm, &other.perm),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        // (a, σ)⁻¹ = (a ∘ σ, σ⁻¹)
        let signs = (0..self.n()).map(|i| self.signs[self.perm[i]]).collect();
        GroupElement {
            signs,
            perm: perm::inverse(&self.perm),
        }
    }

    /// Sign change in coordinate `i`.
    pub fn flip(n: usize, i: usize) -> Self {
        let mut g = Self::identity(n);
        g.signs[i] = Sign::Minus;
        g
    }

    /// Transposition of coordinates `i, i+1`.
    pub fn swap(n: usize, i: usize) -> Self {
        let mut g = Self::identity(n);
        g.perm.swap(i, i + 1);
        g
    }

    /// Sign changes and adjacent transpositions.
    pub fn generators(n: usize) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = (0..n).map(|i| Self::flip(n, i)).collect();
        out.extend((0..n.saturating_sub(1)).map(|i| Self::swap(n, i)));
        out
    }

    /// All `2^n n!` elements.
    pub fn all(n: usize) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for p in perm::all(n) {
            for mask in 0u32..(1 << n) {
                let signs = (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect();
                out.push(GroupElement {
                    signs,
                    perm: p.clone(),
                });
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepKind {
    /// `u = C^n`, `a · e_i = a_{σ(i)} e_{σ(i)}`.
    Reflection,
    /// `V = C^{2n}`, `a · e^i_j = e^{σ(i)}_{a_{σ(i)} j}`.
    Permutation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepSpec {
    pub kind: RepKind,
    pub n: usize,
}

/// Basis index of `e^i_g` in `V` (0-based `i`).
pub fn perm_basis_index(i: usize, g: Sign) -> usize {
    2 * i + usize::from(g == Sign::Minus)
}

/// A signed permutation matrix: `e_x ↦ sign[x] e_{image[x]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub image: Vec<usize>,
    pub sign: Vec<Sign>,
}

impl Monomial {
    pub fn to_matrix(&self) -> MatrixQ {
        let d = self.image.len();
        MatrixQ::from_triplets(
            d,
            d,
            (0..d).map(|x| (self.image[x], x, qi(self.sign[x].value()))),
        )
    }

    /// Action on `d^k` multi-indices, leftmost digit most significant.
    pub fn tensor_power(&self, k: usize) -> Monomial {
        let d = self.image.len();
        let size = d.pow(k as u32);
        let mut image = Vec::with_capacity(size);
        let mut sign = Vec::with_capacity(size);
        for flat in 0..size {
            let (mut rest, mut img, mut s, mut place) = (flat, 0, Sign::Plus, 1);
            for _ in 0..k {
                let digit = rest % d;
                rest /= d;
                img += self.image[digit] * place;
                s = s * self.sign[digit];
                place *= d;
            }
            image.push(img);
            sign.push(s);
        }
        Monomial { image, sign }
    }
}

impl RepSpec {
    pub fn reflection(n: usize) -> Self {
        RepSpec {
            kind: RepKind::Reflection,
            n,
        }
    }

    pub fn permutation(n: usize) -> Self {
        RepSpec {
            kind: RepKind::Permutation,
            n,
        }
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            RepKind::Reflection => self.n,
            RepKind::Permutation => 2 * self.n,
        }
    }

    pub fn monomial(&self, g: &GroupElement) -> Monomial {
        assert_eq!(g.n(), self.n, "group element of the wrong rank");
        match self.kind {
            RepKind::Reflection => Monomial {
                image: g.perm.clone(),
                sign: (0..self.n).map(|i| g.signs[g.perm[i]]).collect(),
            },
            RepKind::Permutation => {
                let mut image = vec![0; 2 * self.n];
                for i in 0..self.n {
                    let target = g.perm[i];
                    let a = g.signs[target];
                    for j in [Sign::Plus, Sign::Minus] {
                        image[perm_basis_index(i, j)] = perm_basis_index(target, a * j);
                    }
                }
                Monomial {
                    image,
                    sign: vec![Sign::Plus; 2 * self.n],
                }
            }
        }
    }

    /// `ρ(g)` as a matrix.
    pub fn rho(&self, g: &GroupElement) -> MatrixQ {
        self.monomial(g).to_matrix()
    }
}
