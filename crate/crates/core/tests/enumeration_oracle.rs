//! The enumerator against exhaustive search over raw tables.

mod common;

use common::tables::{
    brute_force_four, brute_force_three, enumerated, isomorphic, same_classes, Model,
};
use common::Raw;
use rlat_core::enumerate::{enumerate_algebras, EnumOptions};

#[test]
fn size_three_matches_all_tables() {
    assert!(same_classes(&enumerated(3), &brute_force_three()));
}

#[test]
fn size_four_matches_commutative_tables() {
    let oracle = brute_force_four();
    assert_eq!(oracle.len(), 7);
    assert!(same_classes(&enumerated(4), &oracle));
}

#[test]
fn size_six_contains_the_fixture() {
    let fixture = Model::from_raw(&Raw::of(&rlat_core::fixtures::a6()));
    let lib = enumerate_algebras(6, &EnumOptions::default()).unwrap();
    let hits = lib
        .iter()
        .filter(|a| isomorphic(&Model::from_raw(&Raw::of(a)), &fixture))
        .count();
    assert_eq!(hits, 1);
}
