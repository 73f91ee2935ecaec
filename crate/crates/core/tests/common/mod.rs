//! Brute-force oracles that read nothing from the library except the raw
//! operation tables.

#![allow(dead_code)]

pub mod tables;

use rlat_core::enumerate::{enumerate_algebras, EnumOptions};
use rlat_core::fixtures;
use rlat_core::Algebra;

/// Plain copy of an algebra's order and operations.
#[derive(Clone, Debug)]
pub struct Raw {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
    pub join: Vec<Vec<usize>>,
    pub prod: Vec<Vec<usize>>,
}

impl Raw {
    pub fn of(alg: &Algebra) -> Self {
        let n = alg.size();
        Raw {
            n,
            leq: (0..n)
                .map(|x| (0..n).map(|y| alg.leq(x, y)).collect())
                .collect(),
            join: (0..n)
                .map(|x| (0..n).map(|y| alg.join(x, y)).collect())
                .collect(),
            prod: (0..n)
                .map(|x| (0..n).map(|y| alg.prod(x, y)).collect())
                .collect(),
        }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn bottom(&self) -> usize {
        (0..self.n)
            .find(|&x| (0..self.n).all(|y| self.leq[x][y]))
            .unwrap()
    }

    pub fn is_filter(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        for x in members(s) {
            for y in 0..self.n {
                if self.leq[x][y] && s & (1 << y) == 0 {
                    return false;
                }
            }
            for y in members(s) {
                if s & (1 << self.prod[x][y]) == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_prime(&self, s: u64) -> bool {
        if !self.is_filter(s) || s & (1 << self.bottom()) != 0 {
            return false;
        }
        (0..self.n).all(|x| {
            (0..self.n)
                .all(|y| s & (1 << self.join[x][y]) == 0 || s & (1 << x) != 0 || s & (1 << y) != 0)
        })
    }

    pub fn filters(&self) -> Vec<u64> {
        (1..=self.full()).filter(|&s| self.is_filter(s)).collect()
    }

    pub fn primes(&self) -> Vec<u64> {
        (1..=self.full()).filter(|&s| self.is_prime(s)).collect()
    }

    pub fn maximal(&self) -> Vec<u64> {
        let proper: Vec<u64> = self
            .filters()
            .into_iter()
            .filter(|&f| f & (1 << self.bottom()) == 0)
            .collect();
        proper
            .iter()
            .copied()
            .filter(|&f| !proper.iter().any(|&g| g != f && g & f == f))
            .collect()
    }

    pub fn generated(&self, x: u64) -> u64 {
        self.filters()
            .into_iter()
            .filter(|&f| f & x == x)
            .fold(self.full(), |a, f| a & f)
    }
}

pub fn members(s: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| s & (1 << i) != 0)
}

/// Members of `family` not strictly containing another member.
pub fn minimal(family: &[u64]) -> Vec<u64> {
    family
        .iter()
        .copied()
        .filter(|&f| !family.iter().any(|&g| g != f && g & f == g))
        .collect()
}

pub fn masks(sets: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut v: Vec<u64> = sets.into_iter().collect();
    v.sort_unstable();
    v
}

/// Every algebra of size `2..=max_n`, plus the six-element fixture.
pub fn corpus(max_n: usize) -> Vec<Algebra> {
    let mut all = vec![fixtures::a6()];
    for n in 2..=max_n {
        all.extend(enumerate_algebras(n, &EnumOptions::default()).unwrap());
    }
    all
}

/// Finite topology from a subbase, by brute force over the powerset.
pub struct Topo {
    pub points: usize,
    pub opens: Vec<u64>,
}

impl Topo {
    pub fn from_subbase(points: usize, subbase: &[u64]) -> Self {
        let full = (1u64 << points) - 1;
        let mut basis: Vec<u64> = subbase.to_vec();
        basis.push(full);
        loop {
            let mut grew = false;
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let b = basis[i] & basis[j];
                    if !basis.contains(&b) {
                        basis.push(b);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let opens = (0..=full)
            .filter(|&u| members(u).all(|p| basis.iter().any(|&b| b & (1 << p) != 0 && b & u == b)))
            .collect();
        Topo { points, opens }
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.points) - 1
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.points).flat_map(move |p| {
            (0..self.points)
                .filter(move |&q| q != p)
                .map(move |q| (p, q))
        })
    }

    pub fn t0(&self) -> bool {
        self.pairs()
            .all(|(p, q)| self.opens.iter().any(|&u| (u >> p) & 1 != (u >> q) & 1))
    }

    pub fn t1(&self) -> bool {
        self.pairs().all(|(p, q)| {
            self.opens
                .iter()
                .any(|&u| u & (1 << p) != 0 && u & (1 << q) == 0)
        })
    }

    pub fn hausdorff(&self) -> bool {
        self.pairs().all(|(p, q)| {
            self.opens.iter().any(|&u| {
                u & (1 << p) != 0 && self.opens.iter().any(|&v| v & (1 << q) != 0 && u & v == 0)
            })
        })
    }

    pub fn normal(&self) -> bool {
        let closed: Vec<u64> = self.opens.iter().map(|&u| self.full() & !u).collect();
        closed.iter().all(|&c| {
            closed.iter().all(|&d| {
                c & d != 0
                    || self.opens.iter().any(|&u| {
                        u & c == c && self.opens.iter().any(|&v| v & d == d && u & v == 0)
                    })
            })
        })
    }
}
