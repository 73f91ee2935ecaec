//! Exhaustive enumeration of small residuated lattices up to isomorphism.
//!
//! Bounded lattices come from naturally labelled partial orders on the
//! middle elements; products are then searched as commutative, monotone
//! tables below the meet with the top as identity. Survivors are checked
//! for associativity and residuation and deduplicated by canonical form.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::algebra::{residual_from_prod, Algebra, Table, Tables};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_SIZE: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Maximum number of algebras per size.
    pub max_algebras: usize,
    pub time_limit: Option<Duration>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        Self {
            max_algebras: 100_000,
            time_limit: None,
        }
    }
}

/// Element names for an `n`-element carrier: `0`, `a`, `b`, ..., `1`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => char::from(b'a' + (i - 1) as u8).to_string(),
        })
        .collect()
}

/// Order matrix `leq[x][y]` of a bounded lattice with `0` least and `n-1` greatest.
pub type Order = Vec<Vec<bool>>;

/// Every bounded lattice on `n` elements, one per isomorphism class, in
/// canonical order.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Order>> {
    check_size(n)?;
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let mut found = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut lt = vec![vec![false; m]; m];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            lt[i][j] = mask >> k & 1 == 1;
        }
        let transitive =
            (0..m).all(|i| (0..m).all(|j| (0..m).all(|k| !(lt[i][j] && lt[j][k]) || lt[i][k])));
        if !transitive {
            continue;
        }
        let leq = bounded_order(n, &lt);
        if lattice_ops(&leq).is_none() {
            continue;
        }
        let code = canonical_order_code(&leq);
        found.entry(code).or_insert(leq);
    }
    Ok(found.into_values().collect())
}

fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidNames(
            "enumeration needs at least two elements".into(),
        ));
    }
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::CapExceeded {
            what: "enumeration size",
            limit: MAX_ENUMERATION_SIZE,
        });
    }
    Ok(())
}

fn bounded_order(n: usize, lt: &[Vec<bool>]) -> Order {
    let mut leq = vec![vec![false; n]; n];
    for x in 0..n {
        leq[0][x] = true;
        leq[x][n - 1] = true;
        leq[x][x] = true;
    }
    for (i, row) in lt.iter().enumerate() {
        for (j, &b) in row.iter().enumerate() {
            if b {
                leq[i + 1][j + 1] = true;
            }
        }
    }
    leq
}

/// Join and meet tables, if every pair has a least upper and greatest lower bound.
pub fn lattice_ops(leq: &Order) -> Option<(Table, Table)> {
    let n = leq.len();
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            let upper: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
            join[x][y] = *upper.iter().find(|&&u| upper.iter().all(|&v| leq[u][v]))?;
            let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
            meet[x][y] = *lower.iter().find(|&&l| lower.iter().all(|&v| leq[v][l]))?;
        }
    }
    Some((join, meet))
}

/// Permutations of `0..n` fixing the two bounds.
fn bound_fixing_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut middle: Vec<usize> = (1..n - 1).collect();
    permute(&mut middle, 0, &mut |p| {
        let mut full = Vec::with_capacity(n);
        full.push(0);
        full.extend_from_slice(p);
        if n > 1 {
            full.push(n - 1);
        }
        out.push(full);
    });
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

fn canonical_order_code(leq: &Order) -> Vec<bool> {
    let n = leq.len();
    bound_fixing_permutations(n)
        .into_iter()
        .map(|p| {
            let mut code = vec![false; n * n];
            for x in 0..n {
                for y in 0..n {
                    code[p[x] * n + p[y]] = leq[x][y];
                }
            }
            code
        })
        .max()
        .expect("at least the identity permutation")
}

/// Canonical encoding of an algebra: the lexicographically least
/// concatenation of meet and product tables over relabellings fixing the
/// bounds, with the permutation achieving it.
pub fn canonical_code(alg: &Algebra) -> (Vec<u8>, Vec<usize>) {
    let n = alg.size();
    bound_fixing_permutations(n)
        .into_iter()
        .map(|p| {
            let mut code = vec![0u8; 2 * n * n];
            for x in 0..n {
                for y in 0..n {
                    code[p[x] * n + p[y]] = p[alg.meet(x, y)] as u8;
                    code[n * n + p[x] * n + p[y]] = p[alg.prod(x, y)] as u8;
                }
            }
            (code, p)
        })
        .min()
        .expect("at least the identity permutation")
}

/// Relabels `alg` so that element `x` moves to position `perm[x]`.
pub fn permute_algebra(alg: &Algebra, perm: &[usize], names: Vec<String>) -> Result<Algebra> {
    let n = alg.size();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Table {
        (0..n)
            .map(|i| (0..n).map(|j| perm[f(inv[i], inv[j])]).collect())
            .collect()
    };
    Algebra::new(Tables {
        names,
        bottom: perm[alg.bottom()],
        top: perm[alg.top()],
        join: table(&|x, y| alg.join(x, y)),
        meet: table(&|x, y| alg.meet(x, y)),
        prod: table(&|x, y| alg.prod(x, y)),
        res: table(&|x, y| alg.res(x, y)),
    })
}

/// Whether two algebras are isomorphic, by comparing canonical codes.
pub fn isomorphic(a: &Algebra, b: &Algebra) -> bool {
    a.size() == b.size() && canonical_code(a).0 == canonical_code(b).0
}

struct ProdSearch<'a> {
    n: usize,
    leq: &'a Order,
    meet: &'a Table,
    join: &'a Table,
    /// Middle pairs `(i, j)` with `i <= j`, in assignment order.
    cells: Vec<(usize, usize)>,
    prod: Table,
}

impl ProdSearch<'_> {
    fn consistent(&self, upto: usize) -> bool {
        let (i, j) = self.cells[upto];
        let v = self.prod[i][j];
        self.cells[..upto].iter().all(|&(k, l)| {
            let w = self.prod[k][l];
            let below = (self.leq[i][k] && self.leq[j][l]) || (self.leq[i][l] && self.leq[j][k]);
            let above = (self.leq[k][i] && self.leq[l][j]) || (self.leq[l][i] && self.leq[k][j]);
            (!below || self.leq[v][w]) && (!above || self.leq[w][v])
        })
    }

    fn run(&mut self, k: usize, out: &mut impl FnMut(&Table) -> Result<()>) -> Result<()> {
        if k == self.cells.len() {
            return out(&self.prod);
        }
        let (i, j) = self.cells[k];
        let cap = self.meet[i][j];
        for z in 0..self.n {
            if !self.leq[z][cap] {
                continue;
            }
            self.prod[i][j] = z;
            self.prod[j][i] = z;
            if self.consistent(k) {
                self.run(k + 1, out)?;
            }
        }
        Ok(())
    }

    fn associative_and_distributive(&self) -> bool {
        let (p, j) = (&self.prod, self.join);
        (0..self.n).all(|x| {
            (0..self.n).all(|y| {
                (0..self.n)
                    .all(|z| p[p[x][y]][z] == p[x][p[y][z]] && p[x][j[y][z]] == j[p[x][y]][p[x][z]])
            })
        })
    }
}

/// Every residuated lattice of size `n` up to isomorphism, sorted by
/// canonical code, with elements named by [`default_names`].
pub fn enumerate_algebras(n: usize, options: &EnumOptions) -> Result<Vec<Algebra>> {
    check_size(n)?;
    let start = Instant::now();
    let names = default_names(n);
    let mut found: BTreeMap<Vec<u8>, Algebra> = BTreeMap::new();
    for leq in enumerate_lattices(n)? {
        let (join, meet) = lattice_ops(&leq).expect("enumerated orders are lattices");
        let mut prod = vec![vec![0; n]; n];
        for x in 0..n {
            prod[x][n - 1] = x;
            prod[n - 1][x] = x;
        }
        let cells = (1..n - 1)
            .flat_map(|i| (i..n - 1).map(move |j| (i, j)))
            .collect();
        let mut search = ProdSearch {
            n,
            leq: &leq,
            meet: &meet,
            join: &join,
            cells,
            prod,
        };
        let mut candidates: Vec<Table> = Vec::new();
        search.run(0, &mut |p| {
            if let Some(limit) = options.time_limit {
                if start.elapsed() > limit {
                    return Err(Error::CapExceeded {
                        what: "enumeration time in seconds",
                        limit: limit.as_secs() as usize,
                    });
                }
            }
            candidates.push(p.clone());
            Ok(())
        })?;
        for p in candidates {
            search.prod = p;
            if !search.associative_and_distributive()
                || residual_from_prod(&meet, &search.prod).is_err()
            {
                continue;
            }
            let alg = Algebra::from_prod(
                names.clone(),
                0,
                n - 1,
                join.clone(),
                meet.clone(),
                search.prod.clone(),
            )?;
            let (code, perm) = canonical_code(&alg);
            if !found.contains_key(&code) {
                if found.len() >= options.max_algebras {
                    return Err(Error::CapExceeded {
                        what: "algebra count",
                        limit: options.max_algebras,
                    });
                }
                found.insert(code, permute_algebra(&alg, &perm, names.clone())?);
            }
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (2..=6)
            .map(|n| enumerate_lattices(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15]);
    }

    #[test]
    fn two_elements_give_one_algebra() {
        let algs = enumerate_algebras(2, &EnumOptions::default()).unwrap();
        assert_eq!(algs.len(), 1);
        assert!(isomorphic(&algs[0], &fixtures::chain_godel(2)));
    }

    #[test]
    fn three_element_chains() {
        let algs = enumerate_algebras(3, &EnumOptions::default()).unwrap();
        assert_eq!(algs.len(), 2);
        assert!(algs
            .iter()
            .any(|a| isomorphic(a, &fixtures::chain_godel(3))));
        assert!(algs
            .iter()
            .any(|a| isomorphic(a, &fixtures::chain_lukasiewicz(3))));
    }

    #[test]
    fn canonical_form_is_relabelling_invariant() {
        let a6 = fixtures::a6();
        let perm = vec![0, 3, 1, 2, 4, 5];
        let moved = permute_algebra(&a6, &perm, default_names(6)).unwrap();
        assert!(isomorphic(&a6, &moved));
        assert!(!isomorphic(
            &fixtures::chain_godel(4),
            &fixtures::chain_lukasiewicz(4)
        ));
    }

    #[test]
    fn out_of_range_sizes() {
        assert!(matches!(
            enumerate_algebras(7, &EnumOptions::default()),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_algebras(1, &EnumOptions::default()).is_err());
    }

    #[test]
    fn count_cap() {
        let opts = EnumOptions {
            max_algebras: 1,
            time_limit: None,
        };
        assert!(matches!(
            enumerate_algebras(3, &opts),
            Err(Error::CapExceeded { .. })
        ));
    }
}
