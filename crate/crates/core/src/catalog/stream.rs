//! Countable directed sets presented as streams, and chain extraction.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fan::{fan_join, fan_leq, FanPoint};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::poset::FinitePoset;

/// Enumerates `d₀, d₁, …` (finite sets repeat) with order and
/// upper-bound oracles. Single consumer.
pub trait DirectedStream {
    type Item: Clone + PartialEq + std::fmt::Debug;

    fn next_element(&mut self) -> Self::Item;
    fn leq(&self, a: &Self::Item, b: &Self::Item) -> bool;
    /// An element of the stream above both arguments.
    fn upper_bound(&self, a: &Self::Item, b: &Self::Item) -> Self::Item;
}

/// A directed subset of a finite poset, cycled in a seeded order.
pub struct FiniteStream {
    poset: FinitePoset,
    order: Vec<usize>,
    members: PointSet,
    pos: usize,
}

impl FiniteStream {
    pub fn new(poset: FinitePoset, members: PointSet, seed: u64) -> Result<Self> {
        if members.is_empty() || !poset.is_directed(members) {
            return Err(Error::PremiseViolated("stream set must be nonempty and directed".into()));
        }
        let mut order = members.to_vec();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Ok(FiniteStream { poset, order, members, pos: 0 })
    }
}

impl DirectedStream for FiniteStream {
    type Item = usize;

    fn next_element(&mut self) -> usize {
        let x = self.order[self.pos % self.order.len()];
        self.pos += 1;
        x
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.poset.leq(*a, *b)
    }

    fn upper_bound(&self, a: &usize, b: &usize) -> usize {
        let ubs = self.poset.up(*a).intersection(self.poset.up(*b)).intersection(self.members);
        ubs.first().expect("directed")
    }
}

/// A column tail `(n, from), (n, from + 1), …` of the fan lattice.
pub struct FanColumnStream {
    pub column: u64,
    next: u64,
}

impl FanColumnStream {
    pub fn new(column: u64, from: u64) -> Self {
        FanColumnStream { column, next: from }
    }
}

impl DirectedStream for FanColumnStream {
    type Item = FanPoint;

    fn next_element(&mut self) -> FanPoint {
        let p = FanPoint::Pair(self.column, self.next);
        self.next += 1;
        p
    }

    fn leq(&self, a: &FanPoint, b: &FanPoint) -> bool {
        fan_leq(*a, *b)
    }

    fn upper_bound(&self, a: &FanPoint, b: &FanPoint) -> FanPoint {
        fan_join(*a, *b)
    }
}

/// `ℕ` under `≤`, enumerated block by block with each block shuffled. Every
/// natural number appears exactly once.
pub struct PermutedNatStream {
    rng: ChaCha8Rng,
    block: u64,
    block_len: u64,
    pending: Vec<u64>,
}

impl PermutedNatStream {
    pub fn new(seed: u64, block_len: u64) -> Self {
        PermutedNatStream {
            rng: ChaCha8Rng::seed_from_u64(seed),
            block: 0,
            block_len: block_len.max(1),
            pending: Vec::new(),
        }
    }
}

impl DirectedStream for PermutedNatStream {
    type Item = u64;

    fn next_element(&mut self) -> u64 {
        if self.pending.is_empty() {
            let lo = self.block * self.block_len;
            self.pending = (lo..lo + self.block_len).collect();
            self.pending.shuffle(&mut self.rng);
            self.block += 1;
        }
        self.pending.pop().expect("refilled")
    }

    fn leq(&self, a: &u64, b: &u64) -> bool {
        a <= b
    }

    fn upper_bound(&self, a: &u64, b: &u64) -> u64 {
        *a.max(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPrefix<T> {
    pub elements: Vec<T>,
    pub chain: Vec<T>,
}

/// `c₀ = d₀`, `cᵢ₊₁` an upper bound of `dᵢ₊₁, c₀, …, cᵢ`.
pub fn extract_chain<S: DirectedStream>(s: &mut S, k: usize) -> Result<ChainPrefix<S::Item>> {
    if k == 0 {
        return Err(Error::EmptySet);
    }
    let mut elements = Vec::with_capacity(k);
    let mut chain: Vec<S::Item> = Vec::with_capacity(k);
    for i in 0..k {
        let d = s.next_element();
        let c = chain.iter().fold(d.clone(), |u, c| s.upper_bound(&u, c));
        if !s.leq(&d, &c) || chain.iter().any(|prev| !s.leq(prev, &c)) {
            return Err(Error::OracleInconsistent(i));
        }
        elements.push(d);
        chain.push(c);
    }
    Ok(ChainPrefix { elements, chain })
}

/// The chain is totally ordered and `dᵢ ≤ cᵢ`.
pub fn verify_chain<S: DirectedStream>(s: &S, p: &ChainPrefix<S::Item>) -> bool {
    let total = p.chain.iter().enumerate().all(|(i, a)| p.chain[i..].iter().all(|b| s.leq(a, b)));
    total && p.elements.len() == p.chain.len() && p.elements.iter().zip(&p.chain).all(|(d, c)| s.leq(d, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_stream_stabilizes() {
        let p = FinitePoset::from_pairs(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let mut s = FiniteStream::new(p, PointSet::full(4), 3).unwrap();
        let out = extract_chain(&mut s, 12).unwrap();
        assert!(verify_chain(&s, &out));
        assert_eq!(*out.chain.last().unwrap(), 3);
    }

    #[test]
    fn column_chain_is_the_column() {
        let mut s = FanColumnStream::new(2, 0);
        let out = extract_chain(&mut s, 8).unwrap();
        assert_eq!(out.chain, out.elements);
        assert!(verify_chain(&s, &out));
    }

    #[test]
    fn permuted_naturals_are_dominated() {
        let mut s = PermutedNatStream::new(9, 5);
        let out = extract_chain(&mut s, 32).unwrap();
        assert!(verify_chain(&s, &out));
        assert_ne!(out.elements, out.chain);
    }
}
