mod common;

use common::{corpus, masks, Topo};
use rlat_core::fixtures::a6;
use rlat_core::{Algebra, HullKernelSpace, PrimeCollection, Spectrum, TopologyKind};

fn subbase(alg: &Algebra, pi: &PrimeCollection, kind: TopologyKind) -> Vec<u64> {
    (0..alg.size())
        .map(|x| {
            pi.members()
                .iter()
                .enumerate()
                .filter(|(_, p)| p.contains(x) == (kind == TopologyKind::Dual))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn compare(alg: &Algebra, pi: &PrimeCollection) {
    let space = HullKernelSpace::new(alg, pi.clone()).unwrap();
    for kind in [TopologyKind::HullKernel, TopologyKind::Dual] {
        let oracle = Topo::from_subbase(pi.len(), &subbase(alg, pi, kind));
        let top = space.topology(kind);
        assert_eq!(
            masks(top.opens().iter().map(|o| o.bits())),
            masks(oracle.opens.clone())
        );
        let sep = space.separation(alg, kind).unwrap();
        assert_eq!(sep.t0, oracle.t0());
        assert_eq!(sep.t1, oracle.t1());
        assert_eq!(sep.hausdorff, oracle.hausdorff());
        assert_eq!(sep.normal, oracle.normal());
    }
}

#[test]
fn a6_golden() {
    let alg = a6();
    let sp = Spectrum::new(&alg).unwrap();
    let spec = HullKernelSpace::new(&alg, sp.spec().clone()).unwrap();
    // Points in canonical order: {1}, {c,d,1}, {a,b,d,1}.
    let opens = masks(spec.hk().opens().iter().map(|o| o.bits()));
    assert_eq!(opens, masks([0b000, 0b001, 0b011, 0b101, 0b111]));
    let sep = spec.separation(&alg, TopologyKind::HullKernel).unwrap();
    assert!(sep.t0 && !sep.t1 && !sep.hausdorff);
    assert!(!sep.normal);

    let max = HullKernelSpace::new(&alg, sp.max().clone()).unwrap();
    assert_eq!(max.hk().opens().len(), 4);
    assert!(
        max.separation(&alg, TopologyKind::HullKernel)
            .unwrap()
            .hausdorff
    );
}

#[test]
fn census_topologies_match_brute_force() {
    for alg in corpus(5) {
        let sp = Spectrum::new(&alg).unwrap();
        for pi in [sp.spec(), sp.max(), sp.min()] {
            compare(&alg, pi);
        }
    }
}

#[test]
fn min_topologies_agree_on_every_census_algebra() {
    for alg in corpus(5) {
        let sp = Spectrum::new(&alg).unwrap();
        let min = HullKernelSpace::new(&alg, sp.min().clone()).unwrap();
        assert!(min.hk().same_opens(min.dual()));
        let oracle_h = Topo::from_subbase(
            min.len(),
            &subbase(&alg, sp.min(), TopologyKind::HullKernel),
        );
        let oracle_d = Topo::from_subbase(min.len(), &subbase(&alg, sp.min(), TopologyKind::Dual));
        assert_eq!(masks(oracle_h.opens), masks(oracle_d.opens));
    }
}
