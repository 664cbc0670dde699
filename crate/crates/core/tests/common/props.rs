//! Property bodies and strategies, shared by the proptest suite and the
//! acceptance runner.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use wordrep::{check_conditions, normalize_b_to_a, Letter, OrderingCertificate, Word};

use super::generated_certificate;

pub fn uniform_word() -> impl Strategy<Value = (Vec<u32>, usize)> {
    (1..=6u32, 1..=4usize).prop_flat_map(|(n, k)| {
        let letters: Vec<u32> = (0..n).flat_map(|l| std::iter::repeat_n(l, k)).collect();
        let len = letters.len();
        (Just(letters).prop_shuffle(), 0..=len)
    })
}

pub fn any_word() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..6u32, 0..24)
}

pub fn word_and_letter() -> impl Strategy<Value = (Vec<u32>, usize)> {
    prop::collection::vec(0..6u32, 1..24).prop_flat_map(|w| {
        let len = w.len();
        (Just(w), 0..len)
    })
}

pub fn word_and_subset() -> impl Strategy<Value = (Vec<u32>, u8)> {
    (any_word(), any::<u8>())
}

type Pairs = Vec<(usize, usize)>;

pub fn certificate_parts() -> impl Strategy<Value = (usize, Pairs, Pairs, Pairs)> {
    (1..=6usize).prop_flat_map(|n| {
        let pair = (1..=n, 1..=n);
        (
            Just(n),
            prop::collection::vec(pair.clone(), 0..3),
            prop::collection::vec(pair.clone(), 0..3),
            prop::collection::vec(pair, 0..3),
        )
    })
}

pub fn cyclic_shift((letters, at): (Vec<u32>, usize)) -> Result<(), TestCaseError> {
    let w = Word::from_ids(&letters);
    prop_assert_eq!(w.rotate(at).derive_graph(), w.derive_graph());
    Ok(())
}

pub fn initial_permutation_prefix(letters: Vec<u32>) -> Result<(), TestCaseError> {
    let w = Word::from_ids(&letters);
    prop_assert_eq!(
        w.initial_permutation().concat(&w).derive_graph(),
        w.derive_graph()
    );
    Ok(())
}

pub fn candidates_superset((letters, i): (Vec<u32>, usize)) -> Result<(), TestCaseError> {
    let w = Word::from_ids(&letters);
    let x = Letter(letters[i]);
    let cands = w.alternation_candidates(x).unwrap();
    let g = w.derive_graph();
    let xi = w.alphabet().iter().position(|&l| l == x).unwrap();
    for v in g.neighbors(xi) {
        prop_assert!(cands.contains(&w.alphabet()[v]));
    }
    Ok(())
}

pub fn restrict_idempotent((letters, mask): (Vec<u32>, u8)) -> Result<(), TestCaseError> {
    let w = Word::from_ids(&letters);
    let keep: BTreeSet<Letter> = (0..6u32)
        .filter(|l| mask >> l & 1 == 1)
        .map(Letter)
        .collect();
    let once = w.restrict(&keep);
    prop_assert_eq!(once.restrict(&keep), once);
    Ok(())
}

pub fn normalize_b_to_a_props(
    (n, b, a, c): (usize, Pairs, Pairs, Pairs),
) -> Result<(), TestCaseError> {
    let gen = generated_certificate(n, &b, &a, &c);
    let m = gen.cb.matrix();
    let cert = OrderingCertificate {
        y_labeling: gen.cb.y().to_vec(),
        x_order: gen.cb.x().to_vec(),
        classes: gen.classes.clone(),
    };
    prop_assert_eq!(check_conditions(&cert, &m).unwrap(), None);
    let once = normalize_b_to_a(&cert, &m).unwrap();
    prop_assert!(!once.has_type_b());
    prop_assert_eq!(check_conditions(&once, &m).unwrap(), None);
    prop_assert_eq!(normalize_b_to_a(&once, &m).unwrap(), once);
    Ok(())
}
