//! Vertical concatenation with loop counting.

use super::{normalize_rgs, ColoredPartition, DiagramError, Partition, Sign};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackResult<D> {
    pub composite: D,
    pub loops: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Places `q` (size `(l, m)`) on top of `p` (size `(k, l)`).
///
/// Nodes `0..k` are the bottom of `p`, `k..k+l` the shared middle row and
/// `k+l..k+l+m` the top of `q`.
pub fn stack(q: &Partition, p: &Partition) -> Result<StackResult<Partition>, DiagramError> {
    if q.k != p.l {
        return Err(DiagramError::SizeMismatch {
            expected: p.l,
            found: q.k,
        });
    }
    let (k, l, m) = (p.k, p.l, q.l);
    let mut uf = UnionFind::new(k + l + m);
    let mut first = vec![usize::MAX; p.num_blocks()];
    for (pos, &b) in p.rgs.iter().enumerate() {
        if first[b] == usize::MAX {
            first[b] = pos;
        } else {
            uf.union(first[b], pos);
        }
    }
    let mut first = vec![usize::MAX; q.num_blocks()];
    for (pos, &b) in q.rgs.iter().enumerate() {
        let node = k + pos;
        if first[b] == usize::MAX {
            first[b] = node;
        } else {
            uf.union(first[b], node);
        }
    }
    let outer: Vec<usize> = (0..k).chain(k + l..k + l + m).map(|v| uf.find(v)).collect();
    let mut loop_roots: Vec<usize> = (k..k + l)
        .map(|v| uf.find(v))
        .filter(|r| !outer.contains(r))
        .collect();
    loop_roots.sort_unstable();
    loop_roots.dedup();
    Ok(StackResult {
        composite: Partition {
            k,
            l: m,
            rgs: normalize_rgs(&outer),
        },
        loops: loop_roots.len(),
    })
}

/// Coloured stacking. Returns `Ok(None)` when the two classes admit no
/// compatible representatives, which makes the composite zero.
///
/// Compatibility is a parity system: flipping `p`-block `B` by `s_B` and
/// `q`-block `C` by `s_C` must make the two labels meet equally at every
/// middle vertex `j`, i.e. `s_B · s_C = z1(j') · z2(j)`. Blocks are solved
/// by propagation along middle vertices; a contradiction means incompatible.
pub fn colored_stack(
    q: &ColoredPartition,
    p: &ColoredPartition,
) -> Result<Option<StackResult<ColoredPartition>>, DiagramError> {
    let raw = stack(&q.base, &p.base)?;
    let (k, l) = (p.k(), p.l());
    let nbp = p.base.num_blocks();
    let nb = nbp + q.base.num_blocks();
    // adjacency: (other node, required product)
    let mut adj: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); nb];
    for j in 0..l {
        let bp = p.base.rgs[k + j];
        let bq = nbp + q.base.rgs[j];
        let g = p.labels[k + j] * q.labels[j];
        adj[bp].push((bq, g));
        adj[bq].push((bp, g));
    }
    let mut flip: Vec<Option<Sign>> = vec![None; nb];
    let mut queue = Vec::new();
    for start in 0..nb {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(Sign::Plus);
        queue.push(start);
        while let Some(x) = queue.pop() {
            let sx = flip[x].unwrap();
            for &(y, g) in &adj[x] {
                let want = sx * g;
                match flip[y] {
                    None => {
                        flip[y] = Some(want);
                        queue.push(y);
                    }
                    Some(s) if s != want => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let flip: Vec<Sign> = flip.into_iter().map(Option::unwrap).collect();
    let mut labels = Vec::with_capacity(raw.composite.rgs.len());
    for i in 0..k {
        labels.push(p.labels[i] * flip[p.base.rgs[i]]);
    }
    for r in 0..q.l() {
        let pos = l + r;
        labels.push(q.labels[pos] * flip[nbp + q.base.rgs[pos]]);
    }
    Ok(Some(StackResult {
        composite: ColoredPartition::canon(raw.composite, labels),
        loops: raw.loops,
    }))
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate::partitions, perm, Vertex};
    use super::*;

    fn b(i: usize) -> Vertex {
        Vertex::bottom(i)
    }
    fn t(i: usize) -> Vertex {
        Vertex::top(i)
    }

    #[test]
    fn cap_on_cup_is_a_loop() {
        let cap = Partition::one_block(2, 0);
        let cup = Partition::one_block(0, 2);
        let r = stack(&cap, &cup).unwrap();
        assert_eq!(r.composite, Partition::empty());
        assert_eq!(r.loops, 1);
        let r = stack(&cup, &cap).unwrap();
        assert_eq!(
            r.composite,
            Partition::new(2, 2, [vec![b(1), b(2)], vec![t(1), t(2)]]).unwrap()
        );
        assert_eq!(r.loops, 0);
    }

    #[test]
    fn fourlegs_idempotent() {
        let f = Partition::one_block(2, 2);
        let r = stack(&f, &f).unwrap();
        assert_eq!((r.composite, r.loops), (f, 0));
    }

    #[test]
    fn size_mismatch() {
        let e = stack(&Partition::identity(2), &Partition::identity(1)).unwrap_err();
        assert_eq!(
            e,
            DiagramError::SizeMismatch {
                expected: 1,
                found: 2
            }
        );
    }

    #[test]
    fn identity_law_small() {
        for n in 0..=4 {
            for split in 0..=n {
                for p in partitions(split, n - split) {
                    let left = stack(&Partition::identity(p.l()), &p).unwrap();
                    let right = stack(&p, &Partition::identity(p.k())).unwrap();
                    assert_eq!((left.composite, left.loops), (p.clone(), 0));
                    assert_eq!((right.composite, right.loops), (p.clone(), 0));
                }
            }
        }
    }

    #[test]
    fn permutation_diagrams_are_a_homomorphism() {
        for n in 0..=4 {
            let all = perm::all(n);
            for s in &all {
                for r in &all {
                    let st = stack(&Partition::permutation(s), &Partition::permutation(r)).unwrap();
                    assert_eq!(st.loops, 0);
                    assert_eq!(st.composite, Partition::permutation(&perm::compose(s, r)));
                }
            }
        }
    }

    #[test]
    fn tokens_multiply() {
        let m = ColoredPartition::token(Sign::Minus);
        let r = colored_stack(&m, &m).unwrap().unwrap();
        assert_eq!(r.composite, ColoredPartition::token(Sign::Plus));
        let p = ColoredPartition::token(Sign::Plus);
        let r = colored_stack(&m, &p).unwrap().unwrap();
        assert_eq!(r.composite, m);
    }

    #[test]
    fn merge_after_tokens() {
        let merge = Partition::one_block(2, 1).uncolored();
        let toks =
            ColoredPartition::token(Sign::Plus).tensor(&ColoredPartition::token(Sign::Minus));
        let r = colored_stack(&merge, &toks).unwrap().unwrap();
        let want = ColoredPartition::new(
            Partition::one_block(2, 1),
            vec![Sign::Plus, Sign::Minus, Sign::Plus],
        )
        .unwrap();
        assert_eq!(r.composite, want);
    }

    #[test]
    fn merge_after_mixed_split_is_incompatible() {
        let merge = Partition::one_block(2, 1).uncolored();
        let split = ColoredPartition::new(
            Partition::one_block(1, 2),
            vec![Sign::Plus, Sign::Plus, Sign::Minus],
        )
        .unwrap();
        assert_eq!(colored_stack(&merge, &split).unwrap(), None);
        let split = Partition::one_block(1, 2).uncolored();
        let r = colored_stack(&merge, &split).unwrap().unwrap();
        assert_eq!(r.composite, Partition::identity(1).uncolored());
    }
}
