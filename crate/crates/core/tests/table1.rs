mod common;

use std::collections::BTreeSet;

use codecert::canon::{are_equivalent, code_label};
use codecert::classify20::{build_base, flip_code, verify_flip_properties, FlipPattern, DISTGOL};
use codecert::golay::build_shortened;
use codecert::rational::q;
use common::{table1_code, table1_span, word, TABLE1_D};
use rayon::prelude::*;

/// Class representatives found by the full classification run.
const CLASS_MASKS: [u16; 15] = [
    0x0000, 0x0001, 0x0003, 0x0007, 0x000f, 0x0013, 0x0017, 0x0033, 0x0035, 0x0117, 0x011e, 0x013a,
    0x0356, 0x0359, 0x0365,
];

#[test]
fn printed_base_code_is_the_shortened_golay_code() {
    let c1 = table1_code(1);
    assert_eq!(c1.size(), 256);
    assert_eq!(c1.min_distance(), Some(8));
    let dist = c1.distance_distribution().unwrap();
    for i in 0..=20 {
        let expected = DISTGOL
            .iter()
            .find(|(d, _)| *d == i)
            .map_or(0, |(_, a)| *a as i64);
        assert_eq!(dist.a(i), q(expected), "a_{i}");
    }
    for d in TABLE1_D {
        assert!(c1.contains(&word(d)));
    }
    assert_eq!(table1_span().iter().collect::<BTreeSet<_>>().len(), 16);
    let b = build_shortened(4).unwrap().to_code().unwrap();
    assert!(are_equivalent(&c1, &b).unwrap());
}

#[test]
fn computed_layout_uses_the_printed_weight_16_words() {
    let base = build_base().unwrap();
    let printed: Vec<_> = TABLE1_D.iter().map(|s| word(s)).collect();
    assert_eq!(base.d.words(), &printed[..]);
}

#[test]
fn printed_codes_match_the_computed_classes() {
    let printed: Vec<_> = (1..=15).map(table1_code).collect();
    for (j, c) in printed.iter().enumerate() {
        let report = verify_flip_properties(c);
        assert!(report.passed(), "C_{} fails {:?}", j + 1, report.failures());
    }
    let printed_labels: Vec<_> = printed.par_iter().map(|c| code_label(c).unwrap()).collect();
    let distinct: BTreeSet<_> = printed_labels.iter().collect();
    assert_eq!(
        distinct.len(),
        15,
        "printed codes are pairwise inequivalent"
    );

    let base = build_base().unwrap();
    let ours: Vec<_> = CLASS_MASKS
        .par_iter()
        .map(|&m| code_label(&flip_code(&base, FlipPattern(m))).unwrap())
        .collect();
    let ours: BTreeSet<_> = ours.iter().collect();
    assert_eq!(ours.len(), 15);
    assert_eq!(
        ours, distinct,
        "every printed class is one computed class and vice versa"
    );
}
