mod common;

use std::collections::BTreeMap;

use codecert::certcheck::{
    check_psd, compute_epsilons, forbidden_orbits, orbit_bounds, parse_certificate, slot_identity,
    PsdVerdict, SymBlock,
};
use codecert::rational::{frac, q, Q};
use codecert::Error;
use common::{psd_by_minors, random_symmetric};
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn psd_check_agrees_with_principal_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let (mut psd, mut not) = (0, 0);
    for k in 0..500 {
        let n = 1 + k % 6;
        let m = random_symmetric(&mut rng, n);
        let block = SymBlock::from_dense("m", &m).unwrap();
        let verdict = check_psd(&block);
        assert_eq!(verdict.is_psd(), psd_by_minors(&m), "{m:?}");
        match verdict {
            PsdVerdict::Psd => psd += 1,
            PsdVerdict::NotPsd { witness, value } => {
                let direct = (0..n).fold(q(0), |s, i| {
                    s + (0..n).fold(q(0), |t, j| t + &m[i][j] * &witness[j]) * &witness[i]
                });
                assert_eq!(direct, value);
                assert!(value.is_negative());
                not += 1;
            }
        }
    }
    assert!(psd > 100 && not > 100, "{psd} PSD, {not} not");
}

// max y  s.t.  [[1, y], [y, 1]] ⪰ 0,  y >= 0; the optimum is y = 1.
const DISK: &str = "PROBLEM
orbit y b=1 slot=nn
matrix F0
block m dim 2
1 1 1
2 2 1
matrix y
block m dim 2
1 2 -1
block nn dim 1
1 1 -1
";

#[test]
fn two_by_two_certificate() {
    let exact =
        parse_certificate(DISK, "DUAL\nblock m dim 2\n1 1 1/2\n1 2 -1/2\n2 2 1/2\n").unwrap();
    assert_eq!(compute_epsilons(&exact)["y"], q(0));
    let r = orbit_bounds(&exact, &q(1)).unwrap();
    assert_eq!(r.dual_objective, q(1));
    assert_eq!(r.orbits[0].c_signed, q(0));

    // ⟨F_y, X⟩ = 2 · (-1) · (-0.49) + (-1) · 0.25 = 0.73, so ε = -27/100
    let rounded = parse_certificate(
        DISK,
        "DUAL\nblock m dim 2\n1 1 0.5\n1 2 -0.49\n2 2 0.5\nblock nn dim 1\n1 1 0.25\n",
    )
    .unwrap();
    let eps = compute_epsilons(&rounded);
    assert_eq!(eps["y"], frac(-27, 100));
    let r = orbit_bounds(&rounded, &frac(9, 10)).unwrap();
    assert_eq!(r.orbits[0].x, frac(1, 4));
    assert_eq!(r.orbits[0].c_signed, frac(-17, 100));
    assert_eq!(r.orbits[0].c_conservative, frac(37, 100));
    // c/X: signed -17/25, conservative 37/25; a threshold between them splits the verdicts
    let f = forbidden_orbits(&rounded, &frac(9, 10), &frac(2, 5)).unwrap();
    assert_eq!(f.forbidden, vec!["y".to_string()]);
    assert!(f.conservative.is_empty());
    assert_eq!(f.disagreements, vec!["y".to_string()]);

    for y in [q(0), frac(1, 3), q(1)] {
        let ys: BTreeMap<String, Q> = [("y".to_string(), y)].into_iter().collect();
        let ids = slot_identity(&rounded, &ys).unwrap();
        assert_eq!(ids[0].direct, ids[0].expanded);
    }
}

#[test]
fn non_psd_dual_is_rejected() {
    let c = parse_certificate(DISK, "DUAL\nblock m dim 2\n1 1 1/2\n1 2 -1\n2 2 1/2\n").unwrap();
    assert!(matches!(orbit_bounds(&c, &q(1)), Err(Error::NotPsd(l)) if l == "m"));
}

#[test]
fn malformed_files_report_lines() {
    let cases = [
        "PROBLEM\norbit y b=one slot=nn\n",
        "PROBLEM\nmatrix F0\nblock m dim 2\n1 3 1\n",
        "PROBLEM\nmatrix F0\nblock m dim 2\n1 2 1\n2 1 2\n",
        "PROBLEM\nmatrix F0\n1 1 1\n",
    ];
    for text in cases {
        let err = parse_certificate(text, "DUAL\n").unwrap_err();
        assert!(
            matches!(err, Error::Parse { line, .. } if line > 1),
            "{text:?} gave {err:?}"
        );
    }
}
