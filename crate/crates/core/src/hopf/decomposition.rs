//! Splitting `M_N` into `N` subspaces of dimension `N` left invariant by the
//! action of `H`, `X+` and `X-`.

use std::collections::BTreeSet;

use super::action::{act_h, act_xm, act_xp};
use crate::cyclotomic::Order;
use crate::qplane::{BasisIndex, PlaneElement};
use crate::report::{Entry, Mode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    order: Order,
    blocks: Vec<Vec<BasisIndex>>,
}

impl Decomposition {
    pub fn order(&self) -> Order {
        self.order
    }

    /// `blocks()[k - 1]` is the block usually labelled `N_k`.
    pub fn blocks(&self) -> &[Vec<BasisIndex>] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &[BasisIndex] {
        &self.blocks[k - 1]
    }

    /// Label `k` of the block containing `idx`.
    pub fn block_of(&self, idx: BasisIndex) -> usize {
        (idx.r + idx.s) % self.order.get() + 1
    }

    /// Blocks are disjoint, each of size `N`, and cover all `N^2` indices.
    pub fn is_partition(&self) -> bool {
        let n = self.order.get();
        let mut seen = BTreeSet::new();
        self.blocks.len() == n
            && self.blocks.iter().all(|b| b.len() == n)
            && self.blocks.iter().flatten().all(|i| seen.insert(*i))
            && seen.len() == n * n
    }
}

/// Block `N_k` holds every `x^r y^s` with `r + s ≡ k - 1 (mod N)`, listed with
/// `r` descending from `k - 1` and wrapping around.
pub fn decompose(order: Order) -> Decomposition {
    let n = order.get() as i64;
    let blocks = (1..=n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    let r = (k - 1 - j).rem_euclid(n);
                    BasisIndex::new(order, r, k - 1 - r)
                })
                .collect()
        })
        .collect();
    Decomposition { order, blocks }
}

fn stays_in(dec: &Decomposition, k: usize, image: &PlaneElement) -> bool {
    image.terms().all(|(i, _)| dec.block_of(i) == k)
}

type Action = fn(&PlaneElement) -> PlaneElement;

/// One entry per block: `hopf.invariance.N_k`.
pub fn invariance_check(dec: &Decomposition) -> Vec<Entry> {
    let order = dec.order();
    let ops: [(&str, Action); 3] =
        [("H", act_h), ("X+", act_xp), ("X-", act_xm)];
    dec.blocks()
        .iter()
        .enumerate()
        .map(|(pos, block)| {
            let k = pos + 1;
            let outcome = block
                .iter()
                .flat_map(|i| ops.iter().map(move |(name, op)| (i, name, op)))
                .find_map(|(i, name, op)| {
                    let image = op(&PlaneElement::basis(order, *i));
                    (!stays_in(dec, k, &image)).then(|| format!("{name}({i}) = {image} leaves N_{k}"))
                });
            Entry::new(format!("hopf.invariance.N_{k}"), Mode::Assert, outcome.map_or(Ok(()), Err))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn ord(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    fn idx(r: usize, s: usize) -> BasisIndex {
        BasisIndex { r, s }
    }

    #[test]
    fn n3_blocks() {
        let dec = decompose(ord(3));
        assert_eq!(dec.block(1), &[idx(0, 0), idx(2, 1), idx(1, 2)]);
        assert_eq!(dec.block(2), &[idx(1, 0), idx(0, 1), idx(2, 2)]);
        assert_eq!(dec.block(3), &[idx(2, 0), idx(1, 1), idx(0, 2)]);
    }

    #[test]
    fn listing_pattern_for_n5() {
        // N_{N-1} = {x^{N-2}, x^{N-3}y, ..., y^{N-2}, x^{N-1}y^{N-1}}
        let dec = decompose(ord(5));
        assert_eq!(dec.block(4), &[idx(3, 0), idx(2, 1), idx(1, 2), idx(0, 3), idx(4, 4)]);
        assert_eq!(dec.block(1)[0], idx(0, 0));
        assert_eq!(dec.block(1)[1], idx(4, 1));
    }

    #[test]
    fn partition_and_invariance() {
        for k in 2..=8 {
            let dec = decompose(ord(k));
            assert!(dec.is_partition());
            for e in invariance_check(&dec) {
                assert_eq!(e.status, Status::Pass, "{e:?}");
            }
        }
    }
}
