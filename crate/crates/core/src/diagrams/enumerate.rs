//! Basis enumeration via restricted-growth strings.

use super::{ColoredPartition, Partition, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumKind {
    All,
    Even,
    ColoredClasses,
}

/// All partitions of size `(k, l)` in lexicographic restricted-growth order.
pub fn partitions(k: usize, l: usize) -> Vec<Partition> {
    let n = k + l;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    // max block id used in rgs[..i], plus one
    let mut maxes = vec![0usize; n + 1];
    fn rec(
        i: usize,
        k: usize,
        l: usize,
        rgs: &mut Vec<usize>,
        maxes: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == rgs.len() {
            out.push(Partition::from_rgs(k, l, rgs.clone()));
            return;
        }
        for b in 0..=maxes[i] {
            rgs[i] = b;
            maxes[i + 1] = maxes[i].max(b + 1);
            rec(i + 1, k, l, rgs, maxes, out);
        }
    }
    if n == 0 {
        return vec![Partition::empty()];
    }
    // position 0 is always block 0
    maxes[1] = 1;
    rec(1, k, l, &mut rgs, &mut maxes, &mut out);
    out
}

pub fn even_partitions(k: usize, l: usize) -> Vec<Partition> {
    if (k + l) % 2 == 1 {
        return Vec::new();
    }
    partitions(k, l)
        .into_iter()
        .filter(Partition::is_even)
        .collect()
}

/// Every coloured class of size `(k, l)`: each partition with every choice of
/// labels on the non-minimal vertices of its blocks.
pub fn colored_classes(k: usize, l: usize) -> Vec<ColoredPartition> {
    let mut out = Vec::new();
    for p in partitions(k, l) {
        let mut seen = vec![false; p.num_blocks()];
        let free: Vec<usize> = p
            .rgs()
            .iter()
            .enumerate()
            .filter_map(|(pos, &b)| {
                if std::mem::replace(&mut seen[b], true) {
                    Some(pos)
                } else {
                    None
                }
            })
            .collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut labels = vec![Sign::Plus; k + l];
            for (bit, &pos) in free.iter().enumerate() {
                if mask >> (free.len() - 1 - bit) & 1 == 1 {
                    labels[pos] = Sign::Minus;
                }
            }
            out.push(ColoredPartition::canon(p.clone(), labels));
        }
    }
    out
}

/// Uniform entry point; uncoloured kinds come back as all-`+1` diagrams.
pub fn enumerate(kind: EnumKind, k: usize, l: usize) -> Vec<ColoredPartition> {
    match kind {
        EnumKind::All => partitions(k, l)
            .into_iter()
            .map(|p| p.uncolored())
            .collect(),
        EnumKind::Even => even_partitions(k, l)
            .into_iter()
            .map(|p| p.uncolored())
            .collect(),
        EnumKind::ColoredClasses => colored_classes(k, l),
    }
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(partitions(2, 2).len(), 15);
        assert_eq!(partitions(0, 0).len(), 1);
        assert_eq!(even_partitions(2, 2).len(), 4);
        assert_eq!(even_partitions(2, 1).len(), 0);
        assert_eq!(colored_classes(1, 1).len(), 3);
        assert_eq!(
            (0..6).map(bell).collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 15, 52]
        );
    }

    #[test]
    fn sorted_and_unique() {
        let ps = partitions(2, 3);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        let cs = colored_classes(2, 2);
        let mut sorted = cs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), cs.len());
    }
}
