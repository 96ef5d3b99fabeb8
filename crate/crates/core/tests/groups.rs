use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinweave::groups::{self, twisted_adjoint_matrix, FrameGroup, LipschitzSampler, OrthMatrix};
use spinweave::{kappa, ExactMatrix, KappaImage, Scalar, Signature, SpinSpace};

fn space(k: usize, l: usize) -> SpinSpace {
    SpinSpace::standard(Signature::new(k, l).unwrap()).unwrap()
}

#[test]
fn frame_group_is_signed_blade_group() {
    for (k, l) in [(1, 0), (0, 1), (2, 1), (1, 3)] {
        let ss = space(k, l);
        let g = FrameGroup::generate(&ss).unwrap();
        let mut blades = Vec::new();
        for x in spinweave::CliffordElement::basis(ss.sig) {
            let b = ss.inclusion(&x).unwrap();
            blades.push(-&b);
            blades.push(b);
        }
        blades.sort();
        assert_eq!(g.elements, blades, "{k},{l}");
    }
}

#[test]
fn twisted_adjoint_of_a_generator_is_its_reflection() {
    let ss = space(2, 2);
    for (i, f) in ss.frame.iter().enumerate() {
        let o = twisted_adjoint_matrix(&ss, f).unwrap();
        let mut d = vec![Scalar::one(); 4];
        d[i] = Scalar::int(-1);
        assert_eq!(o.matrix, ExactMatrix::diagonal(&d));
        assert!(o.is_orthogonal());
        assert_eq!(o.det(), Scalar::int(-1));
    }
    assert_eq!(OrthMatrix::minus_identity(ss.sig).det(), Scalar::one());
}

#[test]
fn non_normalizing_matrices_are_not_lipschitz() {
    let ss = space(3, 0);
    let mut shear = ss.identity();
    shear.set(0, 1, Scalar::one());
    assert!(!groups::is_lipschitz(&ss, &shear));
    assert!(kappa(&ss, &shear).is_err());
    assert!(groups::is_lipschitz(&ss, &ss.gamma));
}

#[test]
fn kappa_of_standard_elements() {
    let ss = space(1, 2);
    let g = FrameGroup::generate(&ss).unwrap();
    for p in &g.elements {
        let k = kappa(&ss, p).unwrap();
        assert_eq!(k.sign, 1);
        let expect = if p.commutes_with(&ss.gamma) { Scalar::one() } else { Scalar::int(-1) };
        assert_eq!(k.scale, Some(expect));
        let kg = kappa(&ss, &ss.gamma_of_pin(p)).unwrap();
        let expect = if p.commutes_with(&ss.gamma) { 1 } else { -1 };
        assert_eq!(kg, KappaImage { sign: expect, scale: Some(Scalar::one()) });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kappa_is_multiplicative(seed in any::<u64>(), idx in 0usize..4) {
        let (k, l) = [(1, 0), (3, 0), (2, 1), (0, 3)][idx];
        let ss = space(k, l);
        let g = FrameGroup::generate(&ss).unwrap();
        let s = LipschitzSampler::new(&ss, &g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (s.sample(&mut rng), s.sample(&mut rng));
        let lhs = kappa(&ss, &(&a * &b)).unwrap();
        prop_assert_eq!(lhs, kappa(&ss, &a).unwrap().compose(&kappa(&ss, &b).unwrap()));
        let inv = kappa(&ss, &a.inverse().unwrap()).unwrap();
        prop_assert_eq!(inv, kappa(&ss, &a).unwrap().inverse());
    }

    #[test]
    fn lipschitz_samples_normalize_the_frame(seed in any::<u64>(), idx in 0usize..4) {
        let (k, l) = [(2, 0), (1, 1), (3, 0), (0, 4)][idx];
        let ss = space(k, l);
        let g = FrameGroup::generate(&ss).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = LipschitzSampler::new(&ss, &g).sample(&mut rng);
        prop_assert!(groups::is_lipschitz(&ss, &a));
        prop_assert!(groups::adjoint_matrix(&ss, &a).unwrap().is_orthogonal());
    }
}
