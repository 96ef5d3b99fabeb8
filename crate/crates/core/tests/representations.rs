use proptest::prelude::*;
use spinweave::spinor::{find_intertwiner, find_intertwiner_frames};
use spinweave::{CliffordElement, ExactMatrix, RepKind, Representation, Scalar, Signature, SpinSpace};

fn sig(k: usize, l: usize) -> Signature {
    Signature::new(k, l).unwrap()
}

fn pauli_matrices() -> [ExactMatrix; 3] {
    let i = Scalar::i();
    [
        ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]),
        ExactMatrix::from_rows(&[vec![Scalar::zero(), -i], vec![i, Scalar::zero()]]).unwrap(),
        ExactMatrix::from_ints(&[&[1, 0], &[0, -1]]),
    ]
}

#[test]
fn dims_match_table() {
    let table = [(1, 1, 1, 2), (2, 2, 1, 2), (3, 2, 2, 4), (4, 4, 2, 4), (5, 4, 4, 8), (6, 8, 4, 8)];
    for (m, full, weyl, cartan) in table {
        for k in 0..=m {
            let s = sig(k, m - k);
            let main = if s.is_even() { RepKind::Dirac } else { RepKind::Pauli };
            assert_eq!(Representation::build(s, main).unwrap().dim, full, "{s}");
            if s.is_even() {
                assert_eq!(Representation::build(s, RepKind::WeylPlus).unwrap().dim, weyl, "{s}");
            } else {
                assert_eq!(Representation::build(s, RepKind::Cartan).unwrap().dim, cartan, "{s}");
            }
        }
    }
}

#[test]
fn pauli_rep_of_cl30_is_conjugate_to_textbook_matrices() {
    let rep = Representation::build(sig(3, 0), RepKind::Pauli).unwrap();
    let textbook = pauli_matrices();
    let found = find_intertwiner_frames(&rep.images, &textbook).expect("equivalent frames");
    assert!(found.invertible);
    let a = &found.matrix;
    let ai = a.inverse().unwrap();
    for (x, y) in rep.images.iter().zip(&textbook) {
        assert_eq!(&(a * x) * &ai, *y);
    }
}

#[test]
fn pauli_and_twisted_pauli_are_inequivalent() {
    for s in [sig(3, 0), sig(1, 2), sig(5, 0), sig(0, 1)] {
        let p = Representation::build(s, RepKind::Pauli).unwrap();
        assert!(find_intertwiner(&p, &p.twisted()).is_none(), "{s}");
        assert!(find_intertwiner(&p, &p).is_some(), "{s}");
    }
}

#[test]
fn weyl_halves_are_inequivalent() {
    for s in [sig(2, 0), sig(1, 1), sig(0, 4), sig(3, 1)] {
        let a = Representation::build(s, RepKind::WeylPlus).unwrap();
        let b = Representation::build(s, RepKind::WeylMinus).unwrap();
        assert!(find_intertwiner(&a, &b).is_none(), "{s}");
    }
}

#[test]
fn parity_mismatch_is_rejected() {
    assert!(Representation::build(sig(2, 0), RepKind::Pauli).is_err());
    assert!(Representation::build(sig(3, 0), RepKind::Dirac).is_err());
    assert!(Representation::build(sig(3, 0), RepKind::WeylPlus).is_err());
}

#[test]
fn spin_space_from_frame_rejects_non_clifford_frames() {
    let p = pauli_matrices();
    assert!(SpinSpace::from_frame(sig(2, 0), vec![p[0].clone(), p[1].clone()]).is_ok());
    assert!(SpinSpace::from_frame(sig(2, 0), vec![p[0].clone(), p[0].clone()]).is_err());
    assert!(SpinSpace::from_frame(sig(1, 1), vec![p[0].clone(), p[1].clone()]).is_err());
}

fn element(s: Signature, coeffs: &[(u32, i64, i64)]) -> CliffordElement {
    let mask = s.full_mask();
    CliffordElement::from_terms(s, coeffs.iter().map(|(b, x, y)| (b & mask, Scalar::gauss(*x, *y))))
}

fn arb_terms() -> impl Strategy<Value = Vec<(u32, i64, i64)>> {
    prop::collection::vec((0u32..64, -3i64..=3, -2i64..=2), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn representations_are_multiplicative(k in 0usize..=3, l in 0usize..=3, a in arb_terms(), b in arb_terms()) {
        prop_assume!(k + l >= 1);
        let s = sig(k, l);
        let kind = if s.is_even() { RepKind::Dirac } else { RepKind::Cartan };
        let rep = Representation::build(s, kind).unwrap();
        let (x, y) = (element(s, &a), element(s, &b));
        let lhs = rep.image(&(&x * &y)).unwrap();
        let rhs = &rep.image(&x).unwrap() * &rep.image(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn faithful_representations_separate_elements(k in 0usize..=3, l in 0usize..=2, a in arb_terms()) {
        prop_assume!(k + l >= 1);
        let s = sig(k, l);
        let kind = if s.is_even() { RepKind::Dirac } else { RepKind::Cartan };
        let rep = Representation::build(s, kind).unwrap();
        let x = element(s, &a);
        prop_assert_eq!(rep.image(&x).unwrap().is_zero(), x.is_zero());
    }
}
