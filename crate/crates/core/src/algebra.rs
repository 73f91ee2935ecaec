//! Finite residuated lattices given by explicit operation tables.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_BITS};

pub type Table = Vec<Vec<usize>>;

/// Raw operation tables as read from a file or produced by a search.
///
/// Nothing is checked here; see [`validate_algebra`] and [`Algebra::new`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tables {
    pub names: Vec<String>,
    pub bottom: usize,
    pub top: usize,
    pub join: Table,
    pub meet: Table,
    pub prod: Table,
    pub res: Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    JoinCommutative,
    JoinAssociative,
    JoinIdempotent,
    MeetCommutative,
    MeetAssociative,
    MeetIdempotent,
    Absorption,
    /// `meet(x, y) = x` and `join(x, y) = y` disagree.
    OrderMismatch,
    BottomLeast,
    TopGreatest,
    ProdCommutative,
    ProdAssociative,
    ProdIdentity,
    /// `prod(x, y) <= z` and `x <= res(y, z)` disagree.
    Adjointness,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::JoinCommutative => "join is not commutative",
            Law::JoinAssociative => "join is not associative",
            Law::JoinIdempotent => "join is not idempotent",
            Law::MeetCommutative => "meet is not commutative",
            Law::MeetAssociative => "meet is not associative",
            Law::MeetIdempotent => "meet is not idempotent",
            Law::Absorption => "absorption fails",
            Law::OrderMismatch => "join and meet induce different orders",
            Law::BottomLeast => "bottom is not least",
            Law::TopGreatest => "top is not greatest",
            Law::ProdCommutative => "product is not commutative",
            Law::ProdAssociative => "product is not associative",
            Law::ProdIdentity => "top is not the product identity",
            Law::Adjointness => "product and residuum are not adjoint",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    /// Carrier indices (in table order) exhibiting the failure.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, law: Law) -> usize {
        self.violations.iter().filter(|v| v.law == law).count()
    }

    fn push(&mut self, law: Law, witness: &[usize]) {
        self.violations.push(Violation {
            law,
            witness: witness.to_vec(),
        });
    }
}

fn check_shape(tables: &Tables) -> Result<()> {
    let n = tables.names.len();
    if n == 0 {
        return Err(Error::InvalidNames("carrier is empty".into()));
    }
    if n > MAX_BITS {
        return Err(Error::CapExceeded {
            what: "carrier size",
            limit: MAX_BITS,
        });
    }
    for (label, value) in [("bottom", tables.bottom), ("top", tables.top)] {
        if value >= n {
            return Err(Error::TableOutOfRange {
                table: label,
                row: 0,
                col: 0,
                value,
                size: n,
            });
        }
    }
    for (label, table) in [
        ("join", &tables.join),
        ("meet", &tables.meet),
        ("odot", &tables.prod),
        ("arrow", &tables.res),
    ] {
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::TableShape {
                table: label,
                size: n,
            });
        }
        for (row, cells) in table.iter().enumerate() {
            for (col, &value) in cells.iter().enumerate() {
                if value >= n {
                    return Err(Error::TableOutOfRange {
                        table: label,
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Checks every residuated-lattice law and reports each violation with a witness.
///
/// The order is read off the meet table; the join table is cross-checked
/// against it rather than trusted.
pub fn validate_algebra(tables: &Tables) -> Result<ValidationReport> {
    check_shape(tables)?;
    let n = tables.names.len();
    let (j, m, p, r) = (&tables.join, &tables.meet, &tables.prod, &tables.res);
    let leq = |x: usize, y: usize| m[x][y] == x;
    let mut report = ValidationReport::default();

    for x in 0..n {
        if j[x][x] != x {
            report.push(Law::JoinIdempotent, &[x]);
        }
        if m[x][x] != x {
            report.push(Law::MeetIdempotent, &[x]);
        }
        if m[tables.bottom][x] != tables.bottom {
            report.push(Law::BottomLeast, &[x]);
        }
        if j[tables.top][x] != tables.top {
            report.push(Law::TopGreatest, &[x]);
        }
        if p[x][tables.top] != x || p[tables.top][x] != x {
            report.push(Law::ProdIdentity, &[x]);
        }
        for y in 0..n {
            if x < y {
                if j[x][y] != j[y][x] {
                    report.push(Law::JoinCommutative, &[x, y]);
                }
                if m[x][y] != m[y][x] {
                    report.push(Law::MeetCommutative, &[x, y]);
                }
                if p[x][y] != p[y][x] {
                    report.push(Law::ProdCommutative, &[x, y]);
                }
            }
            if j[x][m[x][y]] != x || m[x][j[x][y]] != x {
                report.push(Law::Absorption, &[x, y]);
            }
            if (m[x][y] == x) != (j[x][y] == y) {
                report.push(Law::OrderMismatch, &[x, y]);
            }
            for z in 0..n {
                if j[j[x][y]][z] != j[x][j[y][z]] {
                    report.push(Law::JoinAssociative, &[x, y, z]);
                }
                if m[m[x][y]][z] != m[x][m[y][z]] {
                    report.push(Law::MeetAssociative, &[x, y, z]);
                }
                if p[p[x][y]][z] != p[x][p[y][z]] {
                    report.push(Law::ProdAssociative, &[x, y, z]);
                }
                if leq(p[x][y], z) != leq(x, r[y][z]) {
                    report.push(Law::Adjointness, &[x, y, z]);
                }
            }
        }
    }
    Ok(report)
}

/// Computes `x -> y = max {z | z * x <= y}` from the meet and product tables.
///
/// The join table is not consulted: the order comes from meet alone.
///
/// Fails with [`Error::NotResiduated`] when the maximum does not exist, or
/// when it exists but is not an adjoint (a non-monotone product).
pub fn residual_from_prod(meet: &Table, prod: &Table) -> Result<Table> {
    let n = meet.len();
    let leq = |x: usize, y: usize| meet[x][y] == x;
    let mut res = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let below: Vec<usize> = (0..n).filter(|&z| leq(prod[z][x], y)).collect();
            let greatest = below
                .iter()
                .copied()
                .find(|&g| below.iter().all(|&z| leq(z, g)))
                .ok_or(Error::NotResiduated { x, y })?;
            if (0..n).any(|z| leq(z, greatest) && !leq(prod[z][x], y)) {
                return Err(Error::NotResiduated { x, y });
            }
            res[x][y] = greatest;
        }
    }
    Ok(res)
}

/// A validated finite residuated lattice.
///
/// Elements are dense indices with `0` the bottom and `size() - 1` the top.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    n: usize,
    names: Vec<String>,
    join: Vec<u8>,
    meet: Vec<u8>,
    prod: Vec<u8>,
    res: Vec<u8>,
    up: Vec<ElementSet>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("names", &self.names)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Validates `tables` and relabels so that bottom is `0` and top is last,
    /// keeping the remaining elements in their given order.
    pub fn new(tables: Tables) -> Result<Self> {
        let report = validate_algebra(&tables)?;
        if !report.is_valid() {
            return Err(Error::ValidationFailed(Box::new(report)));
        }
        check_names(&tables.names)?;
        let n = tables.names.len();

        let mut order = Vec::with_capacity(n);
        order.push(tables.bottom);
        order.extend((0..n).filter(|&i| i != tables.bottom && i != tables.top));
        if tables.top != tables.bottom {
            order.push(tables.top);
        }
        let mut new_index = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }

        let flatten = |t: &Table| -> Vec<u8> {
            let mut out = vec![0u8; n * n];
            for (x, &ox) in order.iter().enumerate() {
                for (y, &oy) in order.iter().enumerate() {
                    out[x * n + y] = new_index[t[ox][oy]] as u8;
                }
            }
            out
        };
        let meet = flatten(&tables.meet);
        let up = (0..n)
            .map(|x| (0..n).filter(|&y| meet[x * n + y] as usize == x).collect())
            .collect();
        Ok(Self {
            n,
            names: order.iter().map(|&o| tables.names[o].clone()).collect(),
            join: flatten(&tables.join),
            meet,
            prod: flatten(&tables.prod),
            res: flatten(&tables.res),
            up,
        })
    }

    /// Builds an algebra from lattice and product tables, deriving the residuum.
    pub fn from_prod(
        names: Vec<String>,
        bottom: usize,
        top: usize,
        join: Table,
        meet: Table,
        prod: Table,
    ) -> Result<Self> {
        let res = residual_from_prod(&meet, &prod)?;
        Self::new(Tables {
            names,
            bottom,
            top,
            join,
            meet,
            prod,
            res,
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.n - 1
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses a set of element names; `None` if any name is unknown.
    pub fn set_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Option<ElementSet> {
        names.into_iter().map(|n| self.index_of(n)).collect()
    }

    pub fn set_names(&self, set: ElementSet) -> Vec<String> {
        set.iter().map(|x| self.names[x].clone()).collect()
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    #[inline]
    pub fn prod(&self, x: usize, y: usize) -> usize {
        self.prod[x * self.n + y] as usize
    }

    #[inline]
    pub fn res(&self, x: usize, y: usize) -> usize {
        self.res[x * self.n + y] as usize
    }

    /// `x <= y`, read from the meet table.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    /// `x -> 0`.
    pub fn negation(&self, x: usize) -> usize {
        self.res(x, self.bottom())
    }

    /// Principal up-set `{y | x <= y}`.
    pub fn up(&self, x: usize) -> ElementSet {
        self.up[x]
    }

    /// Up-closure of a set.
    pub fn up_closure(&self, set: ElementSet) -> ElementSet {
        set.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    /// Pre-linearity: `(x -> y) v (y -> x) = 1` everywhere.
    pub fn is_mtl(&self) -> bool {
        let top = self.top();
        (0..self.n).all(|x| (0..self.n).all(|y| self.join(self.res(x, y), self.res(y, x)) == top))
    }

    /// `(x * (y v z) = (x*y) v (x*z) for all, x v (y*z) >= (x v y)*(x v z) for all)`.
    pub fn check_prod_distrib(&self) -> (bool, bool) {
        let mut distrib = true;
        let mut lower = true;
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let lhs = self.prod(x, self.join(y, z));
                    if lhs != self.join(self.prod(x, y), self.prod(x, z)) {
                        distrib = false;
                    }
                    let big = self.join(x, self.prod(y, z));
                    let small = self.prod(self.join(x, y), self.join(x, z));
                    if !self.leq(small, big) {
                        lower = false;
                    }
                }
            }
        }
        (distrib, lower)
    }

    /// Nested tables in canonical index order.
    pub fn tables(&self) -> Tables {
        let n = self.n;
        let unflatten = |t: &[u8]| -> Table {
            (0..n)
                .map(|x| (0..n).map(|y| t[x * n + y] as usize).collect())
                .collect()
        };
        Tables {
            names: self.names.clone(),
            bottom: 0,
            top: n - 1,
            join: unflatten(&self.join),
            meet: unflatten(&self.meet),
            prod: unflatten(&self.prod),
            res: unflatten(&self.res),
        }
    }

    /// Same algebra with new element names.
    pub fn renamed(&self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidNames(format!(
                "expected {} names, got {}",
                self.n,
                names.len()
            )));
        }
        check_names(&names)?;
        Ok(Self {
            names,
            ..self.clone()
        })
    }
}

fn check_names(names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty()
            || name
                .chars()
                .any(|c| c.is_whitespace() || c.is_control() || c == '#')
        {
            return Err(Error::InvalidNames(format!(
                "`{name}` is not a printable token"
            )));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidNames(format!("`{name}` is declared twice")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn a6_validates_cleanly() {
        let report = validate_algebra(&fixtures::a6_tables()).unwrap();
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn boolean_two_validates() {
        let alg = fixtures::chain_godel(2);
        assert_eq!(alg.size(), 2);
        assert!(validate_algebra(&alg.tables()).unwrap().is_valid());
    }

    #[test]
    fn mutated_arrow_breaks_adjointness() {
        let mut t = fixtures::a6_tables();
        // a -> 0: c becomes b
        assert_eq!(t.res[1][0], 3);
        t.res[1][0] = 2;
        let report = validate_algebra(&t).unwrap();
        assert!(report.count(Law::Adjointness) > 0);
        let v = report
            .violations
            .iter()
            .find(|v| v.law == Law::Adjointness)
            .unwrap();
        assert_eq!(v.witness.len(), 3);
        // the witness must genuinely disagree on the mutated tables
        let (x, y, z) = (v.witness[0], v.witness[1], v.witness[2]);
        let leq = |a: usize, b: usize| t.meet[a][b] == a;
        assert_ne!(leq(t.prod[x][y], z), leq(x, t.res[y][z]));
    }

    #[test]
    fn out_of_range_entry_is_an_error() {
        let mut t = fixtures::a6_tables();
        t.prod[2][2] = 6;
        assert!(matches!(
            validate_algebra(&t),
            Err(Error::TableOutOfRange {
                table: "odot",
                row: 2,
                col: 2,
                ..
            })
        ));
    }

    #[test]
    fn a6_order() {
        let a6 = fixtures::a6();
        let [_, a, b, c, d, _] = fixtures::A6_IDX;
        assert!(a6.leq(a, d));
        assert!(a6.leq(a, b));
        assert!(!a6.leq(a, c));
        assert!(!a6.leq(c, b));
        for x in 0..6 {
            assert!(a6.leq(x, x));
            assert!(a6.leq(a6.bottom(), x));
            assert!(a6.leq(x, a6.top()));
        }
    }

    #[test]
    fn residuum_rederived_for_a6() {
        let t = fixtures::a6_tables();
        assert_eq!(residual_from_prod(&t.meet, &t.prod).unwrap(), t.res);
    }

    #[test]
    fn godel_chain_residuum() {
        for n in 2..=6 {
            let alg = fixtures::chain_godel(n);
            for x in 0..n {
                for y in 0..n {
                    let expect = if x <= y { n - 1 } else { y };
                    assert_eq!(alg.res(x, y), expect);
                }
            }
        }
    }

    #[test]
    fn diamond_with_meet_is_not_residuated() {
        let (_, meet) = fixtures::m3_lattice();
        let err = residual_from_prod(&meet, &meet).unwrap_err();
        assert!(matches!(err, Error::NotResiduated { .. }));
        if let Error::NotResiduated { x, y } = err {
            // brute force: the candidate set really has no maximum
            let leq = |a: usize, b: usize| meet[a][b] == a;
            let below: Vec<usize> = (0..5).filter(|&z| leq(meet[z][x], y)).collect();
            assert!(!below.iter().any(|&g| below.iter().all(|&z| leq(z, g))));
        }
    }

    #[test]
    fn mtl_flags() {
        assert!(!fixtures::a6().is_mtl());
        assert!(fixtures::chain_godel(2).is_mtl());
        assert!(fixtures::chain_godel(5).is_mtl());
        assert!(fixtures::chain_lukasiewicz(4).is_mtl());
        let a6 = fixtures::a6();
        let [_, a, _, c, d, _] = fixtures::A6_IDX;
        assert_eq!(a6.join(a6.res(c, a), a6.res(a, c)), d);
    }

    #[test]
    fn negations() {
        let a6 = fixtures::a6();
        let [zero, a, _, c, d, one] = fixtures::A6_IDX;
        assert_eq!(a6.negation(a), c);
        assert_eq!(a6.negation(d), zero);
        assert_eq!(a6.negation(one), zero);
        assert_eq!(a6.negation(zero), one);
    }

    #[test]
    fn prod_distributes() {
        assert_eq!(fixtures::a6().check_prod_distrib(), (true, true));
        assert_eq!(fixtures::chain_godel(2).check_prod_distrib(), (true, true));
        assert_eq!(fixtures::boolean4().check_prod_distrib(), (true, true));
    }

    #[test]
    fn mutated_product_fails_validation() {
        let mut t = fixtures::a6_tables();
        // b * b: a becomes b
        t.prod[2][2] = 2;
        let report = validate_algebra(&t).unwrap();
        assert!(!report.is_valid());
    }

    #[test]
    fn canonicalization_moves_bounds() {
        // 1 listed first, 0 last
        let names = vec!["1".to_string(), "0".to_string()];
        let join = vec![vec![0, 0], vec![0, 1]];
        let meet = vec![vec![0, 1], vec![1, 1]];
        let prod = meet.clone();
        let res = residual_from_prod(&meet, &prod).unwrap();
        let alg = Algebra::new(Tables {
            names,
            bottom: 1,
            top: 0,
            join,
            meet,
            prod,
            res,
        })
        .unwrap();
        assert_eq!(alg.name(0), "0");
        assert_eq!(alg.name(1), "1");
        assert!(alg.leq(0, 1));
        assert_eq!(alg.negation(0), 1);
    }

    #[test]
    fn duplicate_names_rejected() {
        let alg = fixtures::chain_godel(3);
        assert!(matches!(
            alg.renamed(vec!["x".into(), "x".into(), "y".into()]),
            Err(Error::InvalidNames(_))
        ));
    }
}
