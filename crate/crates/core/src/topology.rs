//! Hull and kernel operators and the two topologies they induce on a
//! collection of prime filters.
//!
//! Topologies are materialized: a [`FiniteTopology`] holds every open set in
//! canonical order together with the basis it was generated from. All
//! separation and connectedness predicates are direct set computations on
//! that family.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::filter::FilterLattice;
use crate::set::{ElementSet, PointSet};
use crate::spectrum::{self, PrimeCollection, Spectrum};

/// Default bound on the number of open sets materialized per topology.
pub const DEFAULT_OPEN_CAP: usize = 1 << 20;

/// Where a basis set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "element")]
pub enum BasisTag {
    /// `d(x)`: members not containing `x`.
    Avoiding(usize),
    /// `h(x)`: members containing `x`.
    Containing(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisSet {
    pub set: PointSet,
    pub tag: BasisTag,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    points: usize,
    opens: Vec<PointSet>,
    basis: Vec<BasisSet>,
}

impl FiniteTopology {
    /// Topology generated by `subbase` on `points` points: finite
    /// intersections first, then arbitrary unions.
    pub fn generate(points: usize, subbase: Vec<BasisSet>, cap: usize) -> Result<Self> {
        let ground = PointSet::full(points);
        let too_many = || Error::CapExceeded {
            what: "open set count",
            limit: cap,
        };

        let mut meets = BTreeSet::from([ground]);
        let mut frontier = vec![ground];
        while let Some(s) = frontier.pop() {
            for b in &subbase {
                let t = s.intersection(b.set);
                if meets.insert(t) {
                    if meets.len() > cap {
                        return Err(too_many());
                    }
                    frontier.push(t);
                }
            }
        }

        let mut opens = BTreeSet::from([PointSet::EMPTY]);
        let mut frontier = vec![PointSet::EMPTY];
        while let Some(s) = frontier.pop() {
            for &m in &meets {
                let t = s.union(m);
                if opens.insert(t) {
                    if opens.len() > cap {
                        return Err(too_many());
                    }
                    frontier.push(t);
                }
            }
        }

        Ok(Self {
            points,
            opens: opens.into_iter().collect(),
            basis: subbase,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn ground(&self) -> PointSet {
        PointSet::full(self.points)
    }

    /// Open sets, sorted by cardinality then mask.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn basis(&self) -> &[BasisSet] {
        &self.basis
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        self.is_open(s.complement(self.points))
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut out: Vec<_> = self
            .opens
            .iter()
            .map(|o| o.complement(self.points))
            .collect();
        out.sort();
        out
    }

    pub fn clopens(&self) -> Vec<PointSet> {
        self.opens
            .iter()
            .copied()
            .filter(|&o| self.is_closed(o))
            .collect()
    }

    /// Smallest open set containing `p`.
    pub fn neighbourhood(&self, p: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|o| o.contains(p))
            .fold(self.ground(), |acc, &o| acc.intersection(o))
    }

    /// Smallest open set containing every point of `s`.
    pub fn open_hull(&self, s: PointSet) -> PointSet {
        s.iter()
            .fold(PointSet::EMPTY, |acc, p| acc.union(self.neighbourhood(p)))
    }

    pub fn closure(&self, s: PointSet) -> PointSet {
        (0..self.points)
            .filter(|&p| !self.neighbourhood(p).is_disjoint(s))
            .collect()
    }

    pub fn interior(&self, s: PointSet) -> PointSet {
        self.opens
            .iter()
            .filter(|o| o.is_subset(s))
            .fold(PointSet::EMPTY, |acc, &o| acc.union(o))
    }

    fn distinct_pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.points;
        (0..n).flat_map(move |p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
    }

    pub fn is_t0(&self) -> bool {
        self.distinct_pairs()
            .all(|(p, q)| self.neighbourhood(p) != self.neighbourhood(q))
    }

    pub fn is_t1(&self) -> bool {
        self.distinct_pairs()
            .all(|(p, q)| !self.neighbourhood(p).contains(q))
    }

    pub fn is_hausdorff(&self) -> bool {
        self.distinct_pairs()
            .all(|(p, q)| self.neighbourhood(p).is_disjoint(self.neighbourhood(q)))
    }

    /// Disjoint closed sets have disjoint open neighbourhoods.
    pub fn is_normal(&self) -> bool {
        let closed = self.closed_sets();
        closed.iter().all(|&a| {
            closed
                .iter()
                .filter(|&&b| a.is_disjoint(b))
                .all(|&b| self.open_hull(a).is_disjoint(self.open_hull(b)))
        })
    }

    /// Smallest subfamily of `cover` (by count, then index order) covering the ground.
    pub fn minimal_subcover(&self, cover: &[PointSet]) -> Option<Vec<usize>> {
        let ground = self.ground();
        let union = cover.iter().fold(PointSet::EMPTY, |acc, &s| acc.union(s));
        if union != ground {
            return None;
        }
        if ground.is_empty() {
            return Some(Vec::new());
        }
        for k in 1..=cover.len() {
            if let Some(found) = first_cover_of_size(cover, ground, k) {
                return Some(found);
            }
        }
        unreachable!("the whole cover covers the ground")
    }

    /// Every cover drawn from the basis has a finite subcover.
    ///
    /// On a finite ground set this always holds; it is computed by reducing
    /// the full basis cover.
    pub fn is_compact(&self) -> bool {
        let sets: Vec<PointSet> = self.basis.iter().map(|b| b.set).collect();
        let opens_cover = self.opens.last().copied() == Some(self.ground());
        self.minimal_subcover(&sets).is_some()
            || (opens_cover && self.minimal_subcover(&self.opens).is_some())
    }

    pub fn connectedness(&self) -> ConnectednessReport {
        let clopens = self.clopens();
        let zero_dimensional = self.opens.iter().all(|&o| {
            clopens
                .iter()
                .filter(|c| c.is_subset(o))
                .fold(PointSet::EMPTY, |acc, &c| acc.union(c))
                == o
        });
        let totally_disconnected = self
            .distinct_pairs()
            .all(|(p, q)| clopens.iter().any(|c| c.contains(p) && !c.contains(q)));
        let extremally_disconnected = self.opens.iter().all(|&o| self.is_open(self.closure(o)));
        ConnectednessReport {
            zero_dimensional,
            totally_disconnected,
            extremally_disconnected,
            stonean: extremally_disconnected && self.is_compact() && self.is_hausdorff(),
        }
    }

    /// Same open sets (bases may differ).
    pub fn same_opens(&self, other: &FiniteTopology) -> bool {
        self.points == other.points && self.opens == other.opens
    }

    /// Every open set of `other` is open here.
    pub fn is_finer_than(&self, other: &FiniteTopology) -> bool {
        self.points == other.points && other.opens.iter().all(|&o| self.is_open(o))
    }
}

fn first_cover_of_size(cover: &[PointSet], ground: PointSet, k: usize) -> Option<Vec<usize>> {
    fn go(
        cover: &[PointSet],
        ground: PointSet,
        k: usize,
        start: usize,
        acc: PointSet,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return acc == ground;
        }
        for i in start..cover.len() {
            chosen.push(i);
            if go(cover, ground, k, i + 1, acc.union(cover[i]), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(cover, ground, k, 0, PointSet::EMPTY, &mut chosen).then_some(chosen)
}

/// Preimage of every open set is open.
pub fn is_continuous(map: &[usize], from: &FiniteTopology, to: &FiniteTopology) -> bool {
    to.opens().iter().all(|&o| {
        let pre: PointSet = (0..map.len()).filter(|&p| o.contains(map[p])).collect();
        from.is_open(pre)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub hausdorff: bool,
    pub normal: bool,
    pub t4: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompactnessReport {
    pub compact_h: bool,
    pub compact_d: bool,
    /// Every proper filter lies under some member.
    pub full: bool,
    /// The collection contains every minimal prime over its intersection.
    pub contains_min_over_core: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectednessReport {
    pub zero_dimensional: bool,
    pub totally_disconnected: bool,
    pub extremally_disconnected: bool,
    pub stonean: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyKind {
    HullKernel,
    Dual,
}

/// `h(X) = {P ∈ Π | X ⊆ P}`.
pub fn hull(pi: &PrimeCollection, set: ElementSet) -> PointSet {
    pi.members()
        .iter()
        .enumerate()
        .filter(|(_, p)| set.is_subset(p.elems()))
        .map(|(i, _)| i)
        .collect()
}

/// `d(X) = Π ∖ h(X)`.
pub fn avoiding(pi: &PrimeCollection, set: ElementSet) -> PointSet {
    hull(pi, set).complement(pi.len())
}

/// `k(𝓕) = ⋂𝓕`, the carrier for the empty family.
pub fn kernel(alg: &Algebra, pi: &PrimeCollection, points: PointSet) -> ElementSet {
    points
        .iter()
        .fold(alg.carrier(), |acc, i| acc.intersection(pi.get(i).elems()))
}

/// A prime collection with its hull-kernel and dual topologies.
#[derive(Clone, Debug)]
pub struct HullKernelSpace {
    collection: PrimeCollection,
    carrier: ElementSet,
    hk: FiniteTopology,
    dual: FiniteTopology,
}

impl HullKernelSpace {
    pub fn new(alg: &Algebra, collection: PrimeCollection) -> Result<Self> {
        Self::with_cap(alg, collection, DEFAULT_OPEN_CAP)
    }

    pub fn with_cap(alg: &Algebra, collection: PrimeCollection, cap: usize) -> Result<Self> {
        let hk = hk_topology(alg, &collection, cap)?;
        let dual = dual_topology(alg, &collection, cap)?;
        Ok(Self {
            collection,
            carrier: alg.carrier(),
            hk,
            dual,
        })
    }

    pub fn collection(&self) -> &PrimeCollection {
        &self.collection
    }

    pub fn len(&self) -> usize {
        self.collection.len()
    }

    pub fn is_empty(&self) -> bool {
        self.collection.is_empty()
    }

    pub fn ground(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn topology(&self, kind: TopologyKind) -> &FiniteTopology {
        match kind {
            TopologyKind::HullKernel => &self.hk,
            TopologyKind::Dual => &self.dual,
        }
    }

    pub fn hk(&self) -> &FiniteTopology {
        &self.hk
    }

    pub fn dual(&self) -> &FiniteTopology {
        &self.dual
    }

    pub fn hull(&self, set: ElementSet) -> PointSet {
        hull(&self.collection, set)
    }

    pub fn hull_of(&self, x: usize) -> PointSet {
        self.hull(ElementSet::singleton(x))
    }

    pub fn avoiding(&self, set: ElementSet) -> PointSet {
        avoiding(&self.collection, set)
    }

    pub fn avoiding_of(&self, x: usize) -> PointSet {
        self.avoiding(ElementSet::singleton(x))
    }

    pub fn kernel(&self, points: PointSet) -> ElementSet {
        points.iter().fold(self.carrier, |acc, i| {
            acc.intersection(self.collection.get(i).elems())
        })
    }

    /// `hk(𝓕)`.
    pub fn closure(&self, points: PointSet) -> PointSet {
        self.hull(self.kernel(points))
    }

    /// `⋂Π`.
    pub fn core(&self) -> ElementSet {
        self.kernel(self.ground())
    }

    /// Separation axioms of one topology, cross-checked against the
    /// order-theoretic characterizations: T0 always, T1 iff antichain,
    /// Hausdorff iff `⋂Π`-closed.
    pub fn separation(&self, alg: &Algebra, kind: TopologyKind) -> Result<SeparationReport> {
        let top = self.topology(kind);
        let report = SeparationReport {
            t0: top.is_t0(),
            t1: top.is_t1(),
            hausdorff: top.is_hausdorff(),
            normal: top.is_normal(),
            t4: top.is_t1() && top.is_normal(),
        };
        let antichain = spectrum::is_antichain(&self.collection);
        let f_closed = spectrum::is_f_closed(alg, &self.collection, self.core())?.closed;
        let mismatch = |what: &str, topo: bool, order: bool| {
            Error::InternalInconsistency(format!(
                "{kind:?} topology: {what} is {topo} but the order-theoretic test says {order}"
            ))
        };
        if !report.t0 {
            return Err(mismatch("T0", false, true));
        }
        if report.t1 != antichain {
            return Err(mismatch("T1", report.t1, antichain));
        }
        if report.hausdorff != f_closed {
            return Err(mismatch("Hausdorff", report.hausdorff, f_closed));
        }
        Ok(report)
    }

    pub fn compactness(&self, alg: &Algebra, spectrum: &Spectrum) -> Result<CompactnessReport> {
        let min_core = spectrum.min_over(alg, self.core())?;
        Ok(CompactnessReport {
            compact_h: self.hk.is_compact(),
            compact_d: self.dual.is_compact(),
            full: self.collection.is_full(alg, spectrum.filters()),
            contains_min_over_core: min_core
                .members()
                .iter()
                .all(|m| self.collection.position(*m).is_some()),
        })
    }

    pub fn connectedness(&self, kind: TopologyKind) -> ConnectednessReport {
        self.topology(kind).connectedness()
    }
}

/// Hull-kernel topology: opens are unions of `d(x)`.
///
/// Closed sets are checked to be exactly the hulls `h(X)`.
pub fn hk_topology(alg: &Algebra, pi: &PrimeCollection, cap: usize) -> Result<FiniteTopology> {
    let basis = (0..alg.size())
        .map(|x| BasisSet {
            set: avoiding(pi, ElementSet::singleton(x)),
            tag: BasisTag::Avoiding(x),
        })
        .collect();
    let top = FiniteTopology::generate(pi.len(), basis, cap)?;

    // hulls are intersections of h(x); the empty intersection is h(∅) = Π
    let ground = PointSet::full(pi.len());
    let mut hulls = BTreeSet::from([ground]);
    let mut frontier = vec![ground];
    while let Some(s) = frontier.pop() {
        for x in 0..alg.size() {
            let t = s.intersection(hull(pi, ElementSet::singleton(x)));
            if hulls.insert(t) {
                frontier.push(t);
            }
        }
    }
    let closed: BTreeSet<PointSet> = top.closed_sets().into_iter().collect();
    if closed != hulls {
        return Err(Error::InternalInconsistency(
            "closed sets of the hull-kernel topology are not the hulls".into(),
        ));
    }
    Ok(top)
}

/// Dual hull-kernel topology generated by the `h(x)`.
pub fn dual_topology(alg: &Algebra, pi: &PrimeCollection, cap: usize) -> Result<FiniteTopology> {
    let basis = (0..alg.size())
        .map(|x| BasisSet {
            set: hull(pi, ElementSet::singleton(x)),
            tag: BasisTag::Containing(x),
        })
        .collect();
    FiniteTopology::generate(pi.len(), basis, cap)
}

/// Outcome of a battery of identities: how many instances ran and which failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 16 {
            self.failures.push(describe());
        }
    }

    pub(crate) fn merge(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// The Galois-connection battery for `(h, k)` over sampled `X ⊆ A` and
/// sampled `𝓕 ⊆ Π`.
pub fn check_galois(
    space: &HullKernelSpace,
    elems: &[ElementSet],
    points: &[PointSet],
) -> IdentityReport {
    let mut r = IdentityReport::default();
    for &x in elems {
        let hx = space.hull(x);
        for &f in points {
            let kf = space.kernel(f);
            r.check(x.is_subset(kf) == f.is_subset(hx), || {
                format!("X ⊆ k(𝓕) ⇔ 𝓕 ⊆ h(X) fails for X={x:?}, 𝓕={f:?}")
            });
        }
        r.check(space.hull(space.kernel(hx)) == hx, || {
            format!("hkh(X) ≠ h(X) for X={x:?}")
        });
        r.check(x.is_subset(space.kernel(hx)), || {
            format!("kh not extensive at X={x:?}")
        });
        for &y in elems {
            if x.is_subset(y) {
                r.check(space.hull(y).is_subset(hx), || {
                    format!("h not antitone at {x:?} ⊆ {y:?}")
                });
            }
            r.check(
                hx.intersection(space.hull(y)) == space.hull(x.union(y)),
                || format!("h(X) ∩ h(Y) ≠ h(X ∪ Y) at {x:?}, {y:?}"),
            );
        }
    }
    let all_hulls = elems
        .iter()
        .fold(space.ground(), |acc, &x| acc.intersection(space.hull(x)));
    let all_elems = elems.iter().fold(ElementSet::EMPTY, |acc, &x| acc.union(x));
    r.check(all_hulls == space.hull(all_elems), || {
        "⋂ h(X_i) ≠ h(⋃ X_i) over the whole sample".into()
    });

    for &f in points {
        let kf = space.kernel(f);
        let cl = space.closure(f);
        r.check(space.kernel(space.hull(kf)) == kf, || {
            format!("khk(𝓕) ≠ k(𝓕) for 𝓕={f:?}")
        });
        r.check(f.is_subset(cl), || format!("hk not extensive at {f:?}"));
        r.check(space.closure(cl) == cl, || {
            format!("hk not idempotent at {f:?}")
        });
        for &g in points {
            let kg = space.kernel(g);
            if f.is_subset(g) {
                r.check(kg.is_subset(kf), || {
                    format!("k not antitone at {f:?} ⊆ {g:?}")
                });
                r.check(cl.is_subset(space.closure(g)), || {
                    format!("hk not monotone at {f:?} ⊆ {g:?}")
                });
            }
            r.check(kf.intersection(kg) == space.kernel(f.union(g)), || {
                format!("k(𝓕) ∩ k(𝓖) ≠ k(𝓕 ∪ 𝓖) at {f:?}, {g:?}")
            });
        }
    }
    r
}

/// A retraction `Spec → Max` sending each prime to its unique maximal filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Retraction {
    /// `map[i]` is the index in Max of the image of Spec member `i`.
    pub map: Vec<usize>,
}

/// Builds the retraction onto Max and verifies it is continuous for the
/// hull-kernel topologies and fixes every maximal filter.
pub fn retraction_spec_to_max(alg: &Algebra, spectrum: &Spectrum) -> Result<Retraction> {
    let spec = spectrum.spec();
    let max = spectrum.max();
    let mut map = Vec::with_capacity(spec.len());
    for (i, &p) in spec.members().iter().enumerate() {
        match spectrum.maximal_over(p).as_slice() {
            [m] => map.push(max.position(*m).expect("maximal filters are listed")),
            _ => return Err(Error::NotPm { witness: i }),
        }
    }
    let spec_top = hk_topology(alg, spec, DEFAULT_OPEN_CAP)?;
    let max_top = hk_topology(alg, max, DEFAULT_OPEN_CAP)?;
    if !is_continuous(&map, &spec_top, &max_top) {
        return Err(Error::InternalInconsistency(
            "the unique-maximal map Spec → Max is not continuous".into(),
        ));
    }
    for (j, &m) in max.members().iter().enumerate() {
        let i = spec.position(m).expect("maximal filters are prime");
        if map[i] != j {
            return Err(Error::InternalInconsistency(format!(
                "retraction moves maximal filter {m:?}"
            )));
        }
    }
    Ok(Retraction { map })
}

/// Identities of the minimal-prime space, with all hulls and kernels taken
/// relative to `Min`.
pub fn min_space_identities(
    alg: &Algebra,
    spectrum: &Spectrum,
    elems: &[ElementSet],
) -> Result<IdentityReport> {
    let space = HullKernelSpace::new(alg, spectrum.min().clone())?;
    let perp = |s: ElementSet| spectrum::perp(alg, s);
    let perp1 = |x: usize| perp(ElementSet::singleton(x));
    let mut r = IdentityReport::default();

    for x in 0..alg.size() {
        let hx = space.hull_of(x);
        let dx = space.avoiding_of(x);
        let xp = perp1(x);
        let xpp = perp(xp);
        r.check(hx.is_disjoint(space.hull(xp)), || {
            format!("h(x) ∩ h(x^⊥) ≠ ∅ at x={x}")
        });
        r.check(dx == space.hull(xp), || format!("d(x) ≠ h(x^⊥) at x={x}"));
        r.check(space.avoiding(xp) == hx, || {
            format!("d(x^⊥) ≠ h(x) at x={x}")
        });
        r.check(space.closure(dx) == dx, || {
            format!("hkd(x) ≠ d(x) at x={x}")
        });
        r.check(hx == space.hull(xpp), || format!("h(x) ≠ h(x^⊥⊥) at x={x}"));
        for y in 0..alg.size() {
            let lhs = space.hull(xp) == space.hull_of(y);
            let rhs = xpp == perp1(y);
            r.check(lhs == rhs, || {
                format!("h(x^⊥) = h(y) ⇔ x^⊥⊥ = y^⊥ fails at x={x}, y={y}")
            });
        }
    }
    for &set in elems {
        let sp = perp(set);
        r.check(space.kernel(space.avoiding(set)) == sp, || {
            format!("kd(X) ≠ X^⊥ at X={set:?}")
        });
        r.check(space.kernel(space.hull(sp)) == sp, || {
            format!("kh(X^⊥) ≠ X^⊥ at X={set:?}")
        });
        let union = set
            .iter()
            .fold(PointSet::EMPTY, |acc, x| acc.union(space.hull(perp1(x))));
        r.check(space.closure(union) == space.hull(sp), || {
            format!("closure of ⋃ h(x^⊥) ≠ h(X^⊥) at X={set:?}")
        });
        r.check(space.hk().closure(union) == space.closure(union), || {
            format!("hk disagrees with the topological closure at X={set:?}")
        });
    }
    Ok(r)
}

/// Every proper filter lies under some member of `pi`.
pub fn is_full(alg: &Algebra, pi: &PrimeCollection, filters: &FilterLattice) -> bool {
    pi.is_full(alg, filters)
}
