//! Exhaustive search over raw operation tables.

use super::Raw;
use rlat_core::enumerate::{enumerate_algebras, EnumOptions};

/// Order plus product; elements `0` and `n-1` are bottom and top.
#[derive(Clone, Debug)]
pub struct Model {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
    pub prod: Vec<Vec<usize>>,
}

impl Model {
    pub fn from_raw(r: &Raw) -> Self {
        let bottom = r.bottom();
        let top = (0..r.n).find(|&x| (0..r.n).all(|y| r.leq[y][x])).unwrap();
        // Move bottom to 0 and top to n-1.
        let mut order: Vec<usize> = vec![bottom];
        order.extend((0..r.n).filter(|&x| x != bottom && x != top));
        order.push(top);
        let pos = |x: usize| order.iter().position(|&y| y == x).unwrap();
        Model {
            n: r.n,
            leq: (0..r.n)
                .map(|i| (0..r.n).map(|j| r.leq[order[i]][order[j]]).collect())
                .collect(),
            prod: (0..r.n)
                .map(|i| (0..r.n).map(|j| pos(r.prod[order[i]][order[j]])).collect())
                .collect(),
        }
    }
}

pub fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.clone();
        let head = rest.remove(i);
        for mut tail in permutations(rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn isomorphic(a: &Model, b: &Model) -> bool {
    let n = a.n;
    if n != b.n {
        return false;
    }
    permutations((1..n - 1).collect()).into_iter().any(|mid| {
        let mut p = vec![0];
        p.extend(mid);
        p.push(n - 1);
        (0..n).all(|x| {
            (0..n)
                .all(|y| a.leq[x][y] == b.leq[p[x]][p[y]] && p[a.prod[x][y]] == b.prod[p[x]][p[y]])
        })
    })
}

/// Bounded lattice orders on `0..n` with `0` bottom and `n-1` top.
pub fn lattice_orders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mid: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = mid
        .iter()
        .flat_map(|&x| mid.iter().filter(move |&&y| y != x).map(move |&y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            leq[x][x] = true;
            leq[0][x] = true;
            leq[x][n - 1] = true;
        }
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                leq[x][y] = true;
            }
        }
        let antisymmetric = (0..n).all(|x| (0..n).all(|y| x == y || !(leq[x][y] && leq[y][x])));
        let transitive =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x][y] && leq[y][z]) || leq[x][z])));
        let has_joins = (0..n).all(|x| {
            (0..n).all(|y| {
                let ub: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
                ub.iter().any(|&z| ub.iter().all(|&w| leq[z][w]))
            })
        });
        if antisymmetric && transitive && has_joins {
            out.push(leq);
        }
    }
    out
}

pub fn is_residuated_monoid(leq: &[Vec<bool>], prod: &[Vec<usize>]) -> bool {
    let n = leq.len();
    let top = n - 1;
    for x in 0..n {
        if prod[x][top] != x || prod[top][x] != x {
            return false;
        }
        for y in 0..n {
            if prod[x][y] != prod[y][x] {
                return false;
            }
            for z in 0..n {
                if prod[prod[x][y]][z] != prod[x][prod[y][z]] {
                    return false;
                }
            }
            // {z | z*x <= y} must have a greatest element, and be a down-set.
            let below: Vec<usize> = (0..n).filter(|&z| leq[prod[z][x]][y]).collect();
            let greatest = below.iter().find(|&&g| below.iter().all(|&z| leq[z][g]));
            match greatest {
                Some(&g) if (0..n).all(|z| leq[z][g] == below.contains(&z)) => {}
                _ => return false,
            }
        }
    }
    true
}

pub fn dedupe(models: Vec<Model>) -> Vec<Model> {
    let mut classes: Vec<Model> = Vec::new();
    for m in models {
        if !classes.iter().any(|c| isomorphic(c, &m)) {
            classes.push(m);
        }
    }
    classes
}

/// Every residuated lattice on 3 elements, from all 3^9 product tables.
pub fn brute_force_three() -> Vec<Model> {
    let n = 3;
    let mut found = Vec::new();
    for leq in lattice_orders(n) {
        for code in 0..3usize.pow(9) {
            let prod: Vec<Vec<usize>> = (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| code / 3usize.pow((x * n + y) as u32) % 3)
                        .collect()
                })
                .collect();
            if is_residuated_monoid(&leq, &prod) {
                found.push(Model {
                    n,
                    leq: leq.clone(),
                    prod,
                });
            }
        }
    }
    dedupe(found)
}

/// Every residuated lattice on 4 elements, from all commutative tables with
/// unit top.
pub fn brute_force_four() -> Vec<Model> {
    let n = 4;
    let free: Vec<(usize, usize)> = (0..n - 1)
        .flat_map(|x| (x..n - 1).map(move |y| (x, y)))
        .collect();
    let mut found = Vec::new();
    for leq in lattice_orders(n) {
        for code in 0..n.pow(free.len() as u32) {
            let mut prod = vec![vec![0; n]; n];
            for x in 0..n {
                prod[x][n - 1] = x;
                prod[n - 1][x] = x;
            }
            for (i, &(x, y)) in free.iter().enumerate() {
                let v = code / n.pow(i as u32) % n;
                prod[x][y] = v;
                prod[y][x] = v;
            }
            if is_residuated_monoid(&leq, &prod) {
                found.push(Model {
                    n,
                    leq: leq.clone(),
                    prod,
                });
            }
        }
    }
    dedupe(found)
}

/// The enumerator's output for size `n`, as models.
pub fn enumerated(n: usize) -> Vec<Model> {
    enumerate_algebras(n, &EnumOptions::default())
        .unwrap()
        .iter()
        .map(|a| Model::from_raw(&Raw::of(a)))
        .collect()
}

/// Both lists hold the same isomorphism classes, each exactly once.
pub fn same_classes(a: &[Model], b: &[Model]) -> bool {
    a.len() == b.len()
        && b.iter()
            .all(|m| a.iter().filter(|l| isomorphic(l, m)).count() == 1)
        && a.iter()
            .enumerate()
            .all(|(i, x)| a[i + 1..].iter().all(|y| !isomorphic(x, y)))
}
