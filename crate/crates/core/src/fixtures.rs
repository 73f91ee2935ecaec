//! Small named algebras used by tests, examples and the CLI.

use crate::algebra::{residual_from_prod, Algebra, Table, Tables};

/// Indices of `0, a, b, c, d, 1` in [`a6`].
pub const A6_IDX: [usize; 6] = [0, 1, 2, 3, 4, 5];

/// The six-element algebra on `0 < a < b < d < 1`, `0 < c < d`, with the
/// product and residuum of the classic worked example.
///
/// The order is recovered from `x <= y iff x -> y = 1` on the residuum table.
pub fn a6_tables() -> Tables {
    // 0 a b c d 1
    let join = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 1, 2, 4, 4, 5],
        vec![2, 2, 2, 4, 4, 5],
        vec![3, 4, 4, 3, 4, 5],
        vec![4, 4, 4, 4, 4, 5],
        vec![5, 5, 5, 5, 5, 5],
    ];
    let meet = vec![
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 1, 1, 0, 1, 1],
        vec![0, 1, 2, 0, 2, 2],
        vec![0, 0, 0, 3, 3, 3],
        vec![0, 1, 2, 3, 4, 4],
        vec![0, 1, 2, 3, 4, 5],
    ];
    let prod = vec![
        vec![0, 0, 0, 0, 0, 0],
        vec![0, 1, 1, 0, 1, 1],
        vec![0, 1, 1, 0, 1, 2],
        vec![0, 0, 0, 3, 3, 3],
        vec![0, 1, 1, 3, 4, 4],
        vec![0, 1, 2, 3, 4, 5],
    ];
    let res = vec![
        vec![5, 5, 5, 5, 5, 5],
        vec![3, 5, 5, 3, 5, 5],
        vec![3, 4, 5, 3, 5, 5],
        vec![2, 2, 2, 5, 5, 5],
        vec![0, 2, 2, 3, 5, 5],
        vec![0, 1, 2, 3, 4, 5],
    ];
    Tables {
        names: ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec(),
        bottom: 0,
        top: 5,
        join,
        meet,
        prod,
        res,
    }
}

pub fn a6() -> Algebra {
    Algebra::new(a6_tables()).expect("fixture is a residuated lattice")
}

fn chain_lattice(n: usize) -> (Table, Table) {
    let join = (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect();
    let meet = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
    (join, meet)
}

fn chain_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            i if i == n - 1 => "1".to_string(),
            i => format!("e{i}"),
        })
        .collect()
}

fn build(names: Vec<String>, join: Table, meet: Table, prod: Table) -> Algebra {
    let top = names.len() - 1;
    let res = residual_from_prod(&meet, &prod).expect("fixture is residuated");
    Algebra::new(Tables {
        names,
        bottom: 0,
        top,
        join,
        meet,
        prod,
        res,
    })
    .expect("fixture is a residuated lattice")
}

/// `n`-element chain with product = meet.
pub fn chain_godel(n: usize) -> Algebra {
    let (join, meet) = chain_lattice(n);
    build(chain_names(n), join, meet.clone(), meet)
}

/// `n`-element chain with truncated addition `max(0, x + y - (n - 1))`.
pub fn chain_lukasiewicz(n: usize) -> Algebra {
    let (join, meet) = chain_lattice(n);
    let prod = (0..n)
        .map(|x| (0..n).map(|y| (x + y).saturating_sub(n - 1)).collect())
        .collect();
    build(chain_names(n), join, meet, prod)
}

/// Four-element Boolean algebra `{0, a, b, 1}` with product = meet.
pub fn boolean4() -> Algebra {
    let join = (0..4).map(|x| (0..4).map(|y| x | y).collect()).collect();
    let meet: Table = (0..4).map(|x| (0..4).map(|y| x & y).collect()).collect();
    let names = ["0", "a", "b", "1"].map(String::from).to_vec();
    build(names, join, meet.clone(), meet)
}

/// Join and meet tables of the diamond `0 < p, q, r < 1` (indices 0..5, top 4).
pub fn m3_lattice() -> (Table, Table) {
    let n = 5;
    let mut join = vec![vec![0; n]; n];
    let mut meet = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            (join[x][y], meet[x][y]) = match (x, y) {
                _ if x == y => (x, x),
                (0, _) => (y, 0),
                (_, 0) => (x, 0),
                (4, _) | (_, 4) => (4, x.min(y)),
                _ => (4, 0),
            };
        }
    }
    (join, meet)
}
