//! Generated filters against intersections of primes, on fixed-seed samples.

mod common;

use common::{corpus, minimal, Raw};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rlat_core::{generated_filter, ElementSet, Spectrum};

const PAIRS: usize = 200;

#[test]
fn generated_filter_is_meet_of_primes() {
    let algebras = corpus(5);
    let mut rng = ChaCha8Rng::seed_from_u64(0xA6);
    for _ in 0..PAIRS {
        let alg = &algebras[rng.gen_range(0..algebras.len())];
        let raw = Raw::of(alg);
        let x = rng.gen_range(0..=raw.full());
        let expected = raw.generated(x);
        assert_eq!(
            generated_filter(alg, ElementSet::from_bits(x))
                .elems()
                .bits(),
            expected
        );

        let primes: Vec<u64> = raw.primes().into_iter().filter(|&p| p & x == x).collect();
        let meet = |family: &[u64]| family.iter().fold(raw.full(), |a, &p| a & p);
        assert_eq!(meet(&primes), expected);
        assert_eq!(meet(&minimal(&primes)), expected);

        let sp = Spectrum::new(alg).unwrap();
        let lib_min = sp.min_over(alg, ElementSet::from_bits(x)).unwrap();
        assert_eq!(lib_min.intersection(alg).bits(), expected);
    }
}
