//! Exhaustive and seeded generation of small spaces and Rudin problems.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps;
use crate::error::Result;
use crate::pointset::PointSet;
use crate::poset::FinitePoset;
use crate::powerspace::compact_saturated;
use crate::rudin::{family_irreducible_in_smyth, RudinProblem};
use crate::space::{FiniteSpace, SetFamily};
use crate::topology::{poset_topology, TopologyKind};

/// Largest `n` for which every labeled structure is listed.
pub const EXHAUSTIVE_CAP: usize = 4;

/// Every partial order on `{0, …, n-1}`.
pub fn all_posets(n: usize) -> Result<Vec<FinitePoset>> {
    caps::ensure("poset enumeration", n, EXHAUSTIVE_CAP)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    // each unordered pair is unrelated, i < j or j < i
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut up: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => up[i] = up[i].with(j),
                2 => up[j] = up[j].with(i),
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|i| up[i].iter().all(|k| up[k].is_subset(up[i])));
        if transitive {
            out.push(FinitePoset::from_upsets(up)?);
        }
    }
    Ok(out)
}

/// Every T0 topology on `n` labeled points, by walking all families of
/// proper nonempty subsets that are closed under `∪` and `∩`.
pub fn all_t0_spaces(n: usize) -> Result<Vec<FiniteSpace>> {
    caps::ensure("topology enumeration", n, EXHAUSTIVE_CAP)?;
    let full = PointSet::full(n);
    let inner: Vec<PointSet> = full.subsets().filter(|&s| !s.is_empty() && s != full).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << inner.len()) {
        let mut opens = vec![PointSet::EMPTY, full];
        opens.extend(PointSet::from_bits(mask).iter().map(|i| inner[i]));
        let member = |s: PointSet| {
            s.is_empty() || s == full || inner.iter().position(|&t| t == s).is_some_and(|i| mask >> i & 1 == 1)
        };
        let closed = opens.iter().all(|&a| opens.iter().all(|&b| member(a.union(b)) && member(a.intersection(b))));
        if !closed {
            continue;
        }
        if let Ok(x) = FiniteSpace::from_opens(n, &opens) {
            out.push(x);
        }
    }
    Ok(out)
}

/// A random partial order: edges only go forward along a shuffled listing.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> FinitePoset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let density = rng.gen_range(0.15..0.7);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    FinitePoset::from_pairs(n, &pairs).expect("forward edges form a partial order")
}

/// One of: Alexandroff or Scott topology of a random poset, or the
/// topology generated by a random sub-collection of its up-sets
/// (rejected until T0).
pub fn random_space<R: Rng>(rng: &mut R, n: usize) -> FiniteSpace {
    loop {
        let p = random_poset(rng, n);
        let x = match rng.gen_range(0..3) {
            0 => FiniteSpace::alexandroff(&p),
            1 => poset_topology(&p, TopologyKind::Scott).expect("finite Scott topology"),
            _ => {
                let ups = FiniteSpace::alexandroff(&p).opens().to_vec();
                let keep = rng.gen_range(0.2..0.9);
                let sub: Vec<PointSet> = ups.into_iter().filter(|_| rng.gen_bool(keep)).collect();
                match FiniteSpace::generate(n, &sub) {
                    Ok(x) => x,
                    Err(_) => continue,
                }
            }
        };
        return x;
    }
}

pub fn random_spaces(seed: u64, n: usize, count: usize) -> Vec<FiniteSpace> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_space(&mut rng, n)).collect()
}

/// A valid Rudin problem on a random space with `n` points.
///
/// The family is either `K₀` together with random supersets of it (so its
/// Smyth closure is `cl{K₀}`), or a random family kept only if it passes
/// the irreducibility test. `C` is the closure of one point per member,
/// enlarged by a random closed set.
pub fn random_rudin_problem<R: Rng>(rng: &mut R, n: usize) -> RudinProblem {
    loop {
        let x = random_space(rng, n);
        let ks = compact_saturated(&x);
        let k0 = ks.members()[rng.gen_range(0..ks.len())];
        let members: Vec<PointSet> = if rng.gen_bool(0.6) {
            let supers: Vec<PointSet> = ks.iter().filter(|k| k0.is_subset(*k)).collect();
            let extra = rng.gen_range(0..=supers.len().min(4));
            let mut m: Vec<PointSet> = supers.choose_multiple(rng, extra).copied().collect();
            m.push(k0);
            m
        } else {
            let size = rng.gen_range(1..=ks.len().min(4));
            ks.members().choose_multiple(rng, size).copied().collect()
        };
        let family = SetFamily::new(n, members);
        if !family_irreducible_in_smyth(&x, &family).unwrap_or(false) {
            continue;
        }
        let picks: PointSet = family.iter().map(|k| k.iter().collect::<Vec<_>>()[rng.gen_range(0..k.len())]).collect();
        let closed_sets = x.closed_sets();
        let extra = closed_sets[rng.gen_range(0..closed_sets.len())];
        let c = x.closure(picks).union(if rng.gen_bool(0.4) { extra } else { PointSet::EMPTY });
        if let Ok(p) = RudinProblem::new(x, family, c) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        let posets: Vec<usize> = (1..=4).map(|n| all_posets(n).unwrap().len()).collect();
        assert_eq!(posets, vec![1, 3, 19, 219]);
        let tops: Vec<usize> = (1..=4).map(|n| all_t0_spaces(n).unwrap().len()).collect();
        assert_eq!(tops, vec![1, 3, 19, 219]);
    }

    #[test]
    fn seeded_generation_is_stable() {
        assert_eq!(random_spaces(3, 4, 20), random_spaces(3, 4, 20));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let p = random_rudin_problem(&mut rng, 5);
            assert!(p.validate().is_ok());
        }
    }
}
