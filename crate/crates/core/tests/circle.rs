mod common;

use pl_persistence::circle::{close_cycle, cut_and_reduce};
use pl_persistence::oracle::oracle_circle;
use pl_persistence::reducer::is_two_phase;
use pl_persistence::types::check_structure;
use pl_persistence::{circle_diagram, diagram_equal, CompareMode, Topology};
use proptest::prelude::*;

fn assert_matches_oracle(values: &[f64]) {
    let fast = circle_diagram(values).unwrap();
    let slow = oracle_circle(values).unwrap();
    assert!(
        diagram_equal(&fast, &slow, CompareMode::ValuesAndIndices),
        "input {values:?}\nreducer:\n{}oracle:\n{}",
        fast.to_csv(),
        slow.to_csv()
    );
    check_structure(values, Topology::Circle, &fast).unwrap();
}

fn rotate(values: &[f64], r: usize) -> Vec<f64> {
    let mut v = values.to_vec();
    v.rotate_left(r);
    v
}

#[test]
fn frozen_examples() {
    // Frozen from the cyclic oracle.
    assert_eq!(
        oracle_circle(&[0.0, 3.0, 1.0, 2.0]).unwrap().to_csv(),
        "1,2,2,3\n0,inf,0,\n"
    );
    assert_eq!(
        oracle_circle(&[0.0, 9.0, 2.0, 7.0, 4.0, 5.0])
            .unwrap()
            .to_csv(),
        "2,7,2,3\n4,5,4,5\n0,inf,0,\n"
    );
    for values in [
        vec![0.0, 3.0, 1.0, 2.0],
        vec![5.0],
        vec![1.0, 2.0, 3.0, 4.0],
        vec![0.0, 9.0, 2.0, 7.0, 4.0, 5.0],
        vec![2.0, 2.0],
        vec![3.0, 1.0],
    ] {
        assert_matches_oracle(&values);
    }
}

#[test]
fn all_words_over_small_alphabet() {
    let alphabet = [1.0, 2.0, 3.0, 4.0, 5.0];
    for len in 1..=9 {
        common::for_each_word(&alphabet, len, assert_matches_oracle);
    }
}

#[test]
fn rotation_invariance_on_permutations() {
    let base: Vec<f64> = (1..=7).map(f64::from).collect();
    for p in common::permutations(&base) {
        let reference = circle_diagram(&p).unwrap();
        for r in 1..p.len() {
            let rotated = circle_diagram(&rotate(&p, r)).unwrap();
            assert!(diagram_equal(&reference, &rotated, CompareMode::ValuesOnly));
        }
    }
}

fn tied_values() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((0u8..8).prop_map(f64::from), 1..200)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn reducer_matches_oracle(values in tied_values()) {
        assert_matches_oracle(&values);
    }

    #[test]
    fn rotation_invariance(values in prop::collection::vec((0u8..8).prop_map(f64::from), 1..64)) {
        let reference = circle_diagram(&values).unwrap();
        for r in 0..values.len() {
            let rotated = circle_diagram(&rotate(&values, r)).unwrap();
            prop_assert!(diagram_equal(&reference, &rotated, CompareMode::ValuesOnly));
        }
    }

    #[test]
    fn first_pass_is_two_phase_and_junction_leaves_two(values in tied_values()) {
        let stack = cut_and_reduce(&values, &mut Vec::new());
        prop_assert!(stack.is_reduced());
        prop_assert!(is_two_phase(stack.items()));
        let (min, max) = close_cycle(stack, &mut |_, _| {});
        let global_min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let global_max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert_eq!(min.value, global_min);
        if values.len() >= 2 {
            prop_assert_eq!(max.map(|m| m.value), Some(global_max));
        }
    }
}
