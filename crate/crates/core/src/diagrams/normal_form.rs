//! Factorization `p = φ(σ) ∘ p′ ∘ φ(ρ)` with `p′` a row of one-block diagrams.

use super::{stack, Partition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    /// Permutation of the top row, 0-based images.
    pub sigma: Vec<usize>,
    /// Permutation of the bottom row, 0-based images.
    pub rho: Vec<usize>,
    /// Block ids of the original partition in middle-row order.
    pub block_order: Vec<usize>,
    /// `(bottom, top)` sizes of the middle blocks, same order.
    pub block_sizes: Vec<(usize, usize)>,
}

impl NormalForm {
    /// The middle factor: tensor of one-block diagrams.
    pub fn middle(&self) -> Partition {
        self.block_sizes
            .iter()
            .fold(Partition::empty(), |acc, &(a, b)| {
                acc.tensor(&Partition::one_block(a, b))
            })
    }

    /// `φ(σ) ∘ p′ ∘ φ(ρ)`, asserting both stackings are loop-free.
    pub fn reassemble(&self) -> Partition {
        let lower = stack(&self.middle(), &Partition::permutation(&self.rho)).unwrap();
        let upper = stack(&Partition::permutation(&self.sigma), &lower.composite).unwrap();
        assert_eq!(lower.loops + upper.loops, 0);
        upper.composite
    }
}

/// Blocks are ordered by minimal bottom vertex, blocks without bottom
/// vertices go last ordered by minimal top vertex.
pub fn normal_form(p: &Partition) -> NormalForm {
    let (k, l) = p.size();
    let nb = p.num_blocks();
    let mut key = vec![(usize::MAX, usize::MAX); nb];
    for pos in (0..k + l).rev() {
        let b = p.block_of_pos(pos);
        if pos < k {
            key[b].0 = pos;
        } else {
            key[b].1 = pos - k;
        }
    }
    let mut block_order: Vec<usize> = (0..nb).collect();
    block_order.sort_by_key(|&b| key[b]);
    let sizes = p.block_sizes();
    let block_sizes: Vec<(usize, usize)> = block_order.iter().map(|&b| sizes[b]).collect();

    // next free middle slot per block, bottom and top
    let mut bottom_start = vec![0; nb];
    let mut top_start = vec![0; nb];
    let (mut bs, mut ts) = (0, 0);
    for &b in &block_order {
        bottom_start[b] = bs;
        top_start[b] = ts;
        bs += sizes[b].0;
        ts += sizes[b].1;
    }
    let mut rho = vec![0; k];
    for (i, slot) in rho.iter_mut().enumerate() {
        let b = p.block_of_pos(i);
        *slot = bottom_start[b];
        bottom_start[b] += 1;
    }
    // sigma maps middle slot -> original top index
    let mut sigma = vec![0; l];
    for j in 0..l {
        let b = p.block_of_pos(k + j);
        sigma[top_start[b]] = j;
        top_start[b] += 1;
    }
    NormalForm {
        sigma,
        rho,
        block_order,
        block_sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{partitions, perm, Vertex};
    use super::*;

    #[test]
    fn noncrossing_has_trivial_permutations() {
        let p = Partition::one_block(2, 0).tensor(&Partition::identity(1));
        let nf = normal_form(&p);
        assert_eq!(nf.sigma, perm::identity(1));
        assert_eq!(nf.rho, perm::identity(3));
        assert_eq!(nf.block_sizes, vec![(2, 0), (1, 1)]);
    }

    #[test]
    fn crossing() {
        let p = Partition::new(
            2,
            2,
            [
                vec![Vertex::bottom(1), Vertex::top(2)],
                vec![Vertex::bottom(2), Vertex::top(1)],
            ],
        )
        .unwrap();
        let nf = normal_form(&p);
        assert_eq!(nf.middle(), Partition::identity(2));
        assert_eq!(nf.reassemble(), p);
        assert!(nf.sigma != perm::identity(2) || nf.rho != perm::identity(2));
    }

    #[test]
    fn reassembly_exhaustive() {
        for n in 0..=5 {
            for k in 0..=n {
                for p in partitions(k, n - k) {
                    assert_eq!(normal_form(&p).reassemble(), p);
                }
            }
        }
    }
}
