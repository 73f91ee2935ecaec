mod common;

use common::{corpus, masks, minimal, Raw};
use rlat_core::fixtures::a6;
use rlat_core::{PrimeCollection, Spectrum};

fn lib_masks(pi: &PrimeCollection) -> Vec<u64> {
    masks(pi.members().iter().map(|p| p.elems().bits()))
}

fn named(alg: &rlat_core::Algebra, sets: &[&[&str]]) -> Vec<u64> {
    masks(
        sets.iter()
            .map(|s| alg.set_of(s.iter().copied()).unwrap().bits()),
    )
}

#[test]
fn a6_filters_match_definition() {
    let alg = a6();
    let raw = Raw::of(&alg);
    let expected = named(
        &alg,
        &[
            &["1"],
            &["d", "1"],
            &["a", "b", "d", "1"],
            &["c", "d", "1"],
            &["0", "a", "b", "c", "d", "1"],
        ],
    );
    assert_eq!(masks(raw.filters()), expected);
    let sp = Spectrum::new(&alg).unwrap();
    assert_eq!(
        masks(sp.filters().iter().map(|f| f.elems().bits())),
        expected
    );
}

#[test]
fn a6_spectra_match_definition() {
    let alg = a6();
    let raw = Raw::of(&alg);
    let sp = Spectrum::new(&alg).unwrap();
    let spec = named(&alg, &[&["1"], &["a", "b", "d", "1"], &["c", "d", "1"]]);
    assert_eq!(masks(raw.primes()), spec);
    assert_eq!(lib_masks(sp.spec()), spec);
    let max = named(&alg, &[&["a", "b", "d", "1"], &["c", "d", "1"]]);
    assert_eq!(masks(raw.maximal()), max);
    assert_eq!(lib_masks(sp.max()), max);
    assert_eq!(lib_masks(sp.min()), named(&alg, &[&["1"]]));
}

#[test]
fn census_spectra_match_definition() {
    for alg in corpus(5) {
        let raw = Raw::of(&alg);
        let sp = Spectrum::new(&alg).unwrap();
        let primes = raw.primes();
        assert_eq!(
            masks(sp.filters().iter().map(|f| f.elems().bits())),
            masks(raw.filters())
        );
        assert_eq!(lib_masks(sp.spec()), masks(primes.clone()));
        assert_eq!(lib_masks(sp.max()), masks(raw.maximal()));
        assert_eq!(lib_masks(sp.min()), masks(minimal(&primes)));
        for x in 0..=raw.full() {
            let over: Vec<u64> = primes.iter().copied().filter(|&p| p & x == x).collect();
            let lib = sp
                .min_over(&alg, rlat_core::ElementSet::from_bits(x))
                .unwrap();
            assert_eq!(lib_masks(&lib), masks(minimal(&over)));
        }
    }
}
