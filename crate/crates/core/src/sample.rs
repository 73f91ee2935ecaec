//! Deterministic families of test subsets for identities quantified over all `X ⊆ A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::filter::FilterLattice;
use crate::set::{ElementSet, PointSet};

pub const DEFAULT_SEED: u64 = 0xA6;
pub const RANDOM_SUBSETS: usize = 64;
/// Collections up to this size have every subset enumerated.
pub const EXHAUSTIVE_POINTS: usize = 12;

/// `∅`, all singletons, all filters and [`RANDOM_SUBSETS`] seeded random subsets.
///
/// Duplicates are removed and the result is sorted canonically. Carriers of
/// at most 6 elements get the full powerset instead.
pub fn element_samples(alg: &Algebra, filters: &FilterLattice, seed: u64) -> Vec<ElementSet> {
    let n = alg.size();
    let mut out: Vec<ElementSet> = if n <= 6 {
        alg.carrier().subsets().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let full = alg.carrier().bits();
        std::iter::once(ElementSet::EMPTY)
            .chain((0..n).map(ElementSet::singleton))
            .chain(filters.iter().map(|f| f.elems()))
            .chain((0..RANDOM_SUBSETS).map(|_| ElementSet::from_bits(rng.gen::<u64>() & full)))
            .collect()
    };
    out.sort();
    out.dedup();
    out
}

/// Every subset of a collection of `len` points, or a seeded sample of them
/// (empty, full, singletons, and random subsets) when `len` is large.
pub fn point_samples(len: usize, seed: u64) -> Vec<PointSet> {
    let ground = PointSet::full(len);
    let mut out: Vec<PointSet> = if len <= EXHAUSTIVE_POINTS {
        ground.subsets().collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EED);
        [PointSet::EMPTY, ground]
            .into_iter()
            .chain((0..len).map(PointSet::singleton))
            .chain((0..256).map(|_| PointSet::from_bits(rng.gen::<u64>() & ground.bits())))
            .collect()
    };
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter::{all_filters, DEFAULT_FILTER_CAP};
    use crate::fixtures;

    #[test]
    fn small_carriers_get_the_powerset() {
        let a6 = fixtures::a6();
        let fl = all_filters(&a6, DEFAULT_FILTER_CAP).unwrap();
        assert_eq!(element_samples(&a6, &fl, DEFAULT_SEED).len(), 64);
    }

    #[test]
    fn large_carriers_are_sampled_reproducibly() {
        let chain = fixtures::chain_godel(9);
        let fl = all_filters(&chain, DEFAULT_FILTER_CAP).unwrap();
        let a = element_samples(&chain, &fl, DEFAULT_SEED);
        let b = element_samples(&chain, &fl, DEFAULT_SEED);
        assert_eq!(a, b);
        assert!(a.contains(&ElementSet::EMPTY));
        assert!((0..9).all(|x| a.contains(&ElementSet::singleton(x))));
        assert!(fl.iter().all(|f| a.contains(&f.elems())));
        assert_ne!(a, element_samples(&chain, &fl, 7));
    }

    #[test]
    fn point_samples_cover_small_collections() {
        assert_eq!(point_samples(3, 0).len(), 8);
        let big = point_samples(20, 0);
        assert!(big.contains(&PointSet::full(20)));
        assert!(big.len() > 20);
    }
}
