//! Prime, maximal and minimal prime filters, coannihilators and the
//! order-theoretic conditions on collections of primes.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::filter::{self, all_filters, generated_filter, Filter, FilterLattice};
use crate::set::{ElementSet, MAX_BITS};

/// Which family a [`PrimeCollection`] was built as.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollectionKind {
    Spec,
    Max,
    Min,
    /// Minimal primes over the given filter.
    MinOver(ElementSet),
    Custom,
}

/// Canonically ordered, duplicate-free list of prime filters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCollection {
    kind: CollectionKind,
    members: Vec<Filter>,
}

impl PrimeCollection {
    /// Sorts and deduplicates `members`, rejecting any non-prime.
    pub fn new(alg: &Algebra, kind: CollectionKind, mut members: Vec<Filter>) -> Result<Self> {
        members.sort();
        members.dedup();
        if members.len() > MAX_BITS {
            return Err(Error::CapExceeded {
                what: "collection size",
                limit: MAX_BITS,
            });
        }
        for (i, f) in members.iter().enumerate() {
            if !is_prime(alg, *f).unwrap_or(false) {
                return Err(Error::NotPrimeCollection(i));
            }
        }
        Ok(Self { kind, members })
    }

    pub fn kind(&self) -> CollectionKind {
        self.kind
    }

    pub fn members(&self) -> &[Filter] {
        &self.members
    }

    pub fn get(&self, i: usize) -> Filter {
        self.members[i]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, f: Filter) -> Option<usize> {
        self.members.binary_search(&f).ok()
    }

    /// `⋂Π`, the whole carrier when empty.
    pub fn intersection(&self, alg: &Algebra) -> ElementSet {
        self.members
            .iter()
            .fold(alg.carrier(), |acc, f| acc.intersection(f.elems()))
    }

    /// Every proper filter lies under some member.
    pub fn is_full(&self, alg: &Algebra, filters: &FilterLattice) -> bool {
        filters
            .proper(alg)
            .all(|f| self.members.iter().any(|p| f.is_subset(*p)))
    }
}

/// Join-primeness: `x v y ∈ F` forces `x ∈ F` or `y ∈ F`.
pub fn is_prime(alg: &Algebra, f: Filter) -> Result<bool> {
    if !f.is_proper(alg) {
        return Err(Error::NotProper);
    }
    let prime = (0..alg.size()).all(|x| {
        f.contains(x) || (0..alg.size()).all(|y| f.contains(y) || !f.contains(alg.join(x, y)))
    });
    if prime != is_vee_closed(alg, f.elems().complement(alg.size())) {
        return Err(Error::InternalInconsistency(
            "join-primeness disagrees with join-closedness of the complement".into(),
        ));
    }
    Ok(prime)
}

/// `F₁ ∩ F₂ = P` forces `F₁ = P` or `F₂ = P`, checked over the filter lattice.
pub fn is_meet_irreducible(filters: &FilterLattice, p: Filter) -> bool {
    filters.iter().all(|a| {
        filters
            .iter()
            .all(|b| filter::filter_meet(a, b) != p || a == p || b == p)
    })
}

/// Nonempty and closed under join.
pub fn is_vee_closed(alg: &Algebra, set: ElementSet) -> bool {
    !set.is_empty()
        && set
            .iter()
            .all(|x| set.iter().all(|y| set.contains(alg.join(x, y))))
}

/// Least join-closed superset.
pub fn vee_closure(alg: &Algebra, set: ElementSet) -> ElementSet {
    let mut current = set;
    loop {
        let mut next = current;
        for x in current {
            for y in current {
                next.insert(alg.join(x, y));
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Filter lattice with its prime, maximal and minimal prime filters.
#[derive(Clone, Debug)]
pub struct Spectrum {
    filters: FilterLattice,
    spec: PrimeCollection,
    max: PrimeCollection,
    min: PrimeCollection,
}

impl Spectrum {
    pub fn new(alg: &Algebra) -> Result<Self> {
        Self::with_cap(alg, filter::DEFAULT_FILTER_CAP)
    }

    pub fn with_cap(alg: &Algebra, cap: usize) -> Result<Self> {
        let filters = all_filters(alg, cap)?;
        let mut primes = Vec::new();
        for f in filters.proper(alg) {
            if is_prime(alg, f)? {
                primes.push(f);
            }
        }
        let spec = PrimeCollection::new(alg, CollectionKind::Spec, primes)?;

        let proper: Vec<Filter> = filters.proper(alg).collect();
        let maximal: Vec<Filter> = proper
            .iter()
            .copied()
            .filter(|&f| !proper.iter().any(|&g| g != f && f.is_subset(g)))
            .collect();
        if let Some(i) = maximal.iter().position(|&m| spec.position(m).is_none()) {
            return Err(Error::InternalInconsistency(format!(
                "maximal filter {:?} is not prime",
                maximal[i]
            )));
        }
        let max = PrimeCollection::new(alg, CollectionKind::Max, maximal)?;
        let min = PrimeCollection::new(alg, CollectionKind::Min, minimal_members(spec.members()))?;
        Ok(Self {
            filters,
            spec,
            max,
            min,
        })
    }

    pub fn filters(&self) -> &FilterLattice {
        &self.filters
    }

    pub fn spec(&self) -> &PrimeCollection {
        &self.spec
    }

    pub fn max(&self) -> &PrimeCollection {
        &self.max
    }

    pub fn min(&self) -> &PrimeCollection {
        &self.min
    }

    /// Primes containing `set`.
    pub fn primes_containing(&self, set: ElementSet) -> Vec<Filter> {
        self.spec
            .members()
            .iter()
            .copied()
            .filter(|p| set.is_subset(p.elems()))
            .collect()
    }

    /// `Min_X`: minimal primes among those containing `set`.
    ///
    /// Each member's complement is checked to be a maximal join-closed set
    /// avoiding the filter generated by `set`.
    pub fn min_over(&self, alg: &Algebra, set: ElementSet) -> Result<PrimeCollection> {
        let base = generated_filter(alg, set).elems();
        let members = minimal_members(&self.primes_containing(base));
        for m in &members {
            if !is_maximal_vee_closed_avoiding(alg, m.elems().complement(alg.size()), base) {
                return Err(Error::InternalInconsistency(format!(
                    "complement of minimal prime {m:?} is not a maximal join-closed set avoiding {base:?}"
                )));
            }
        }
        PrimeCollection::new(alg, CollectionKind::MinOver(base), members)
    }

    /// Maximal filters containing `p`.
    pub fn maximal_over(&self, p: Filter) -> Vec<Filter> {
        self.max
            .members()
            .iter()
            .copied()
            .filter(|m| p.is_subset(*m))
            .collect()
    }
}

fn minimal_members(family: &[Filter]) -> Vec<Filter> {
    family
        .iter()
        .copied()
        .filter(|&p| !family.iter().any(|&q| q != p && q.is_subset(p)))
        .collect()
}

pub fn spec(alg: &Algebra) -> Result<PrimeCollection> {
    Ok(Spectrum::new(alg)?.spec)
}

pub fn max_filters(alg: &Algebra) -> Result<PrimeCollection> {
    Ok(Spectrum::new(alg)?.max)
}

pub fn min_primes(alg: &Algebra) -> Result<PrimeCollection> {
    Ok(Spectrum::new(alg)?.min)
}

/// Minimal primes over `set`; empty when `set` generates the whole carrier.
pub fn min_primes_over(alg: &Algebra, set: ElementSet) -> Result<PrimeCollection> {
    Spectrum::new(alg)?.min_over(alg, set)
}

/// Join-closed sets avoiding `base` that cannot be enlarged without meeting it.
pub fn is_maximal_vee_closed_avoiding(alg: &Algebra, set: ElementSet, base: ElementSet) -> bool {
    if !is_vee_closed(alg, set) || !set.is_disjoint(base) {
        return false;
    }
    set.complement(alg.size())
        .difference(base)
        .iter()
        .all(|a| !vee_closure(alg, set.with(a)).is_disjoint(base))
}

/// A filter containing `base`, disjoint from `avoid`, and maximal with that
/// property. Among several maximal candidates the canonically least is
/// returned. When `avoid` is join-closed the result is prime.
pub fn prime_avoiding(filters: &FilterLattice, base: Filter, avoid: ElementSet) -> Result<Filter> {
    if let Some(x) = base.elems().intersection(avoid).first() {
        return Err(Error::Overlap(x));
    }
    let candidates: Vec<Filter> = filters
        .iter()
        .filter(|f| base.is_subset(*f) && f.elems().is_disjoint(avoid))
        .collect();
    Ok(candidates
        .iter()
        .copied()
        .find(|&f| !candidates.iter().any(|&g| g != f && f.is_subset(g)))
        .expect("base itself is a candidate"))
}

/// `(F:X) = {a | x v a ∈ F for all x ∈ X}`; `(F:∅)` is the carrier.
pub fn coannihilator(alg: &Algebra, base: ElementSet, set: ElementSet) -> ElementSet {
    (0..alg.size())
        .filter(|&a| set.iter().all(|x| base.contains(alg.join(x, a))))
        .collect()
}

/// `X^⊥ = ({1}:X)`.
pub fn perp(alg: &Algebra, set: ElementSet) -> ElementSet {
    coannihilator(alg, ElementSet::singleton(alg.top()), set)
}

/// `x ↦ (F:x)` for every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoannihilatorTable {
    pub base: Filter,
    pub entries: Vec<ElementSet>,
}

pub fn coannihilator_table(alg: &Algebra, base: Filter) -> CoannihilatorTable {
    CoannihilatorTable {
        base,
        entries: (0..alg.size())
            .map(|x| coannihilator(alg, base.elems(), ElementSet::singleton(x)))
            .collect(),
    }
}

/// `D_F(P) = {a | (F:a) ⊄ P}`.
pub fn d_set(alg: &Algebra, base: Filter, p: Filter) -> Result<ElementSet> {
    if !is_prime(alg, p)? {
        return Err(Error::NotPrime);
    }
    Ok((0..alg.size())
        .filter(|&a| {
            !coannihilator(alg, base.elems(), ElementSet::singleton(a)).is_subset(p.elems())
        })
        .collect())
}

/// Elements `a₁ ∉ P_i`, `a₂ ∉ P_j` with `a₁ v a₂` in the base filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparatingPair {
    pub i: usize,
    pub j: usize,
    pub a1: usize,
    pub a2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FClosedReport {
    pub closed: bool,
    pub witnesses: Vec<SeparatingPair>,
    /// First pair of members with no separating elements.
    pub failing: Option<(usize, usize)>,
}

/// Whether every two distinct members are separated by elements joining into `base`.
pub fn is_f_closed(alg: &Algebra, pi: &PrimeCollection, base: ElementSet) -> Result<FClosedReport> {
    if !base.is_subset(pi.intersection(alg)) {
        return Err(Error::BaseNotContained);
    }
    let n = alg.size();
    let mut witnesses = Vec::new();
    let mut failing = None;
    for i in 0..pi.len() {
        for j in i + 1..pi.len() {
            let out_i = pi.get(i).elems().complement(n);
            let out_j = pi.get(j).elems().complement(n);
            let found = out_i.iter().find_map(|a1| {
                out_j
                    .iter()
                    .find(|&a2| base.contains(alg.join(a1, a2)))
                    .map(|a2| SeparatingPair { i, j, a1, a2 })
            });
            match found {
                Some(w) => witnesses.push(w),
                None => {
                    failing.get_or_insert((i, j));
                }
            }
        }
    }
    Ok(FClosedReport {
        closed: failing.is_none(),
        witnesses,
        failing,
    })
}

/// No member contains another.
pub fn is_antichain(pi: &PrimeCollection) -> bool {
    let m = pi.members();
    m.iter()
        .all(|&p| m.iter().all(|&q| p == q || !p.is_subset(q)))
}

/// `S_Π = {Q ∈ Spec | ⋂Π ⊆ Q ⊆ P for some P ∈ Π}`.
pub fn s_pi(alg: &Algebra, spec: &PrimeCollection, pi: &PrimeCollection) -> Vec<Filter> {
    let core = pi.intersection(alg);
    spec.members()
        .iter()
        .copied()
        .filter(|q| core.is_subset(q.elems()) && pi.members().iter().any(|p| q.is_subset(*p)))
        .collect()
}

/// Decides `P ∈ Min_F` three ways (inclusion scan, `P = D_F(P)`, and the
/// "exactly one of `x`, `(F:x)` lies in `P`" test) and insists they agree.
pub fn check_minimality(
    alg: &Algebra,
    spectrum: &Spectrum,
    base: Filter,
    p: Filter,
) -> Result<bool> {
    if !is_prime(alg, p)? {
        return Err(Error::NotPrime);
    }
    if !base.is_subset(p) {
        return Err(Error::BaseNotContained);
    }
    let by_scan = !spectrum
        .spec()
        .members()
        .iter()
        .any(|&q| q != p && base.is_subset(q) && q.is_subset(p));
    let by_d_set = d_set(alg, base, p)? == p.elems();
    let by_exclusion = (0..alg.size()).all(|x| {
        let colon_in =
            coannihilator(alg, base.elems(), ElementSet::singleton(x)).is_subset(p.elems());
        p.contains(x) != colon_in
    });
    if by_scan != by_d_set || by_scan != by_exclusion {
        return Err(Error::InternalInconsistency(format!(
            "minimality of {p:?} over {base:?}: scan={by_scan}, d_set={by_d_set}, exclusion={by_exclusion}"
        )));
    }
    Ok(by_scan)
}

/// The unique maximal filter above a proper filter.
pub fn unique_maximal_over(alg: &Algebra, spectrum: &Spectrum, p: Filter) -> Result<Filter> {
    if !p.is_proper(alg) {
        return Err(Error::NotProper);
    }
    match spectrum.maximal_over(p).as_slice() {
        [m] => Ok(*m),
        many => Err(Error::MultipleMaximal(
            many.iter().map(|f| f.elems()).collect(),
        )),
    }
}
