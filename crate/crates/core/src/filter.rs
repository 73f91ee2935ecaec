//! Filters, generated filters and the filter lattice.

use std::collections::BTreeSet;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Default bound on the number of filters [`all_filters`] will materialize.
pub const DEFAULT_FILTER_CAP: usize = 1 << 16;

/// A nonempty, product-closed, upward-closed subset of the carrier.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filter(ElementSet);

impl std::fmt::Debug for Filter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Filter{:?}", self.0)
    }
}

impl Filter {
    /// Wraps `set` if it is a filter of `alg`.
    pub fn new(alg: &Algebra, set: ElementSet) -> Option<Self> {
        is_filter(alg, set).then_some(Self(set))
    }

    /// `{1}`.
    pub fn unit(alg: &Algebra) -> Self {
        Self(ElementSet::singleton(alg.top()))
    }

    pub fn whole(alg: &Algebra) -> Self {
        Self(alg.carrier())
    }

    pub fn elems(self) -> ElementSet {
        self.0
    }

    pub fn contains(self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(self, other: Filter) -> bool {
        self.0.is_subset(other.0)
    }

    /// Proper iff bottom is missing.
    pub fn is_proper(self, alg: &Algebra) -> bool {
        !self.0.contains(alg.bottom())
    }
}

pub fn is_filter(alg: &Algebra, set: ElementSet) -> bool {
    if set.is_empty() || !set.is_subset(alg.carrier()) {
        return false;
    }
    set.iter()
        .all(|x| alg.up(x).is_subset(set) && set.iter().all(|y| set.contains(alg.prod(x, y))))
}

/// Least filter containing `set`; the empty set generates `{1}`.
///
/// Iterates product saturation followed by up-closure to a fixpoint.
pub fn generated_filter(alg: &Algebra, set: ElementSet) -> Filter {
    let mut current = alg.up_closure(set.with(alg.top()));
    loop {
        let mut next = current;
        for x in current {
            for y in current {
                if y >= x {
                    next.insert(alg.prod(x, y));
                }
            }
        }
        let next = alg.up_closure(next);
        if next == current {
            return Filter(current);
        }
        current = next;
    }
}

/// `{a | x^n <= a for some n}`.
pub fn principal_filter(alg: &Algebra, x: usize) -> Filter {
    generated_filter(alg, ElementSet::singleton(x))
}

/// Filter generated by `base` together with `x`.
pub fn adjoin(alg: &Algebra, base: Filter, x: usize) -> Filter {
    generated_filter(alg, base.elems().with(x))
}

pub fn filter_meet(a: Filter, b: Filter) -> Filter {
    Filter(a.0.intersection(b.0))
}

pub fn filter_join(alg: &Algebra, a: Filter, b: Filter) -> Filter {
    generated_filter(alg, a.0.union(b.0))
}

/// All filters of an algebra in canonical order (cardinality, then mask).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterLattice {
    filters: Vec<Filter>,
}

impl FilterLattice {
    pub fn filters(&self) -> &[Filter] {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Filter> + '_ {
        self.filters.iter().copied()
    }

    pub fn position(&self, f: Filter) -> Option<usize> {
        self.filters.binary_search(&f).ok()
    }

    pub fn proper(&self, alg: &Algebra) -> impl Iterator<Item = Filter> + '_ {
        let bottom = alg.bottom();
        self.iter().filter(move |f| !f.contains(bottom))
    }

    /// `(i, j)` pairs with `filters[i] ⊆ filters[j]`.
    pub fn inclusions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.filters.iter().enumerate() {
            for (j, b) in self.filters.iter().enumerate() {
                if a.is_subset(*b) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Enumerates every filter by closing `{1}` under adjoining single elements.
///
/// Every filter of a finite algebra is generated by its own elements, so
/// the search reaches all of them.
pub fn all_filters(alg: &Algebra, cap: usize) -> Result<FilterLattice> {
    let start = Filter::unit(alg);
    let mut seen = BTreeSet::from([start]);
    let mut frontier = vec![start];
    while let Some(f) = frontier.pop() {
        for x in f.elems().complement(alg.size()) {
            let g = adjoin(alg, f, x);
            if seen.insert(g) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded {
                        what: "filter count",
                        limit: cap,
                    });
                }
                frontier.push(g);
            }
        }
    }
    Ok(FilterLattice {
        filters: seen.into_iter().collect(),
    })
}
