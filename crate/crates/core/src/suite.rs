//! Per-signature verification suites shared by the command-line tool and
//! the acceptance tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::clifford::{self, CliffordElement, Signature};
use crate::error::Result;
use crate::groups::{
    self, ad_surjectivity_witnesses, kappa, parity_check, verify_extension_diagram, FrameGroup, KappaImage,
    LipschitzSampler,
};
use crate::matrix::ExactMatrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::spinor::{anticommutant, commutant, RepKind, Representation, SpinSpace};

/// Every compatible representation kind satisfies the Clifford relations.
pub fn algebra_checks(sig: Signature) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for kind in RepKind::ALL.iter().filter(|k| k.compatible(sig)) {
        let rep = Representation::build(sig, *kind)?;
        let chk = rep.verify_clifford();
        out.push(
            CheckReport::from_counterexample(
                format!("rep-{}-clifford", kind.name()),
                Some(sig),
                (!chk.passed()).then(|| json!({"failures": chk.failures})),
            )
            .with_witness(json!({"dim": rep.dim, "relations": chk.checked})),
        );
    }
    Ok(out)
}

/// `dim K(h)` and `dim A(h)` on the standard spin space.
pub fn commutant_checks(sig: Signature) -> Result<Vec<CheckReport>> {
    let ss = SpinSpace::standard(sig)?;
    let want = if sig.is_even() { 1 } else { 2 };
    let k = commutant(&ss.frame).len();
    let a = anticommutant(&ss.frame).len();
    Ok(vec![
        CheckReport::new("commutant-dim", Some(sig), k == want).with_witness(json!({"dim": k, "expected": want})),
        CheckReport::new("anticommutant-dim", Some(sig), a == want).with_witness(json!({"dim": a, "expected": want})),
    ])
}

/// Volume element, `Gamma`, the grade involution and the `gamma` map.
pub fn volume_checks(sig: Signature) -> Result<Vec<CheckReport>> {
    let ss = SpinSpace::standard(sig)?;
    let d = ss.dim();
    let s = Some(sig);
    let vol = clifford::volume(sig);
    let iota2 = vol.iota * vol.iota;
    let eta_alg = &vol.eta * &vol.eta == CliffordElement::scalar(sig, iota2);
    let eta_mat = &ss.eta * &ss.eta == ExactMatrix::scalar(d, iota2);
    let gamma_sq = &ss.gamma * &ss.gamma == ExactMatrix::scalar(d, Scalar::int(-1));
    let gamma_anti = ss.frame.iter().all(|f| f.anticommutes_with(&ss.gamma));
    let mut bad_alpha = None;
    let mut bad_gamma = None;
    let ginv = ss.gamma_inverse();
    for x in CliffordElement::basis(sig) {
        let ix = ss.inclusion(&x)?;
        if ss.inclusion(&x.alpha())? != ss.alpha(&ix) {
            bad_alpha.get_or_insert(json!({"blade": x.to_string()}));
        }
        if ss.gamma_map(&x.alpha())? != &(&ginv * &ss.gamma_map(&x)?) * &ss.gamma {
            bad_gamma.get_or_insert(json!({"blade": x.to_string()}));
        }
    }
    Ok(vec![
        CheckReport::new("eta-square-algebra", s, eta_alg),
        CheckReport::new("eta-square-matrix", s, eta_mat),
        CheckReport::new("gamma-square", s, gamma_sq),
        CheckReport::new("gamma-anticommutes-frame", s, gamma_anti),
        CheckReport::from_counterexample("alpha-is-gamma-conjugation", s, bad_alpha),
        CheckReport::from_counterexample("gamma-map-intertwines-alpha", s, bad_gamma),
    ])
}

/// Frame group order and closure, the extension diagram, the parity rule
/// and explicit `Ad` preimages.
pub fn group_checks(sig: Signature) -> Result<Vec<CheckReport>> {
    let ss = SpinSpace::standard(sig)?;
    let g = FrameGroup::generate(&ss)?;
    let want = 1usize << (sig.dim() + 1);
    let mut out = vec![
        CheckReport::new("frame-group-order", Some(sig), g.order() == want)
            .with_witness(json!({"order": g.order(), "expected": want})),
        CheckReport::new("frame-group-closed", Some(sig), g.is_closed()),
    ];
    out.extend(verify_extension_diagram(&ss, &g));
    out.push(parity_check(&ss, &g, "adjoint-parity"));
    out.extend(ad_surjectivity_witnesses(&ss));
    Ok(out)
}

const PAIRS: [(i64, i64, i64, i64); 4] = [(1, 0, 1, 0), (2, 0, 3, 0), (0, 1, 1, 1), (-1, 2, 5, 0)];

/// `odd(lam, mu, a) = (lam P+ + mu P-) gamma(a)` for odd `a` in the group.
pub fn odd_element(ss: &SpinSpace, lam: Scalar, mu: Scalar, a: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(&groups::scalar_pair(ss, lam, mu)? * &ss.gamma_of_pin(a))
}

/// Sampled structure of the Lipschitz group: the `kappa` homomorphism and
/// its values for `m` odd, scalar times Pin factorization for `m` even.
pub fn lipschitz_checks(sig: Signature, pairs: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let ss = SpinSpace::standard(sig)?;
    let g = FrameGroup::generate(&ss)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = Some(sig);
    let mut out = Vec::new();
    let sampler = LipschitzSampler::new(&ss, &g);
    if sig.is_even() {
        let mut bad = None;
        for t in 0..pairs {
            let a = sampler.sample(&mut rng);
            if groups::factor_scalar_pin(&ss, &g, &a).is_none() {
                bad.get_or_insert(json!({"sample": t}));
            }
        }
        out.push(
            CheckReport::from_counterexample("lipschitz-scalar-times-pin", s, bad)
                .with_witness(json!({"samples": pairs})),
        );
        out.push(groups::kappa_homomorphism_check(&ss, &g, pairs, &mut rng));
        return Ok(out);
    }
    out.push(groups::kappa_homomorphism_check(&ss, &g, pairs, &mut rng));
    let mut bad_odd = None;
    let mut bad_pair = None;
    let mut bad_block = None;
    let canonical = groups::is_canonical_block(&ss);
    for (pi, (a, b, c, d)) in PAIRS.iter().enumerate() {
        let lam = Scalar::gauss(*a, *b);
        let mu = Scalar::gauss(*c, *d);
        let ratio = lam / mu;
        for (i, p) in g.elements.iter().enumerate() {
            if p.commutes_with(&ss.gamma) {
                continue;
            }
            let x = odd_element(&ss, lam, mu, p)?;
            if kappa(&ss, &x)? != (KappaImage { sign: -1, scale: Some(ratio) }) {
                bad_odd.get_or_insert(json!({"pair": pi, "element": i}));
            }
            if canonical && x != groups::build_odd_element(&ss, lam, mu, p)? {
                bad_block.get_or_insert(json!({"pair": pi, "element": i}));
            }
        }
        let k = groups::scalar_pair(&ss, lam, mu)?;
        if kappa(&ss, &k)? != (KappaImage { sign: 1, scale: Some(ratio) }) {
            bad_pair.get_or_insert(json!({"pair": pi}));
        }
    }
    out.push(CheckReport::from_counterexample("kappa-odd-element", s, bad_odd));
    out.push(CheckReport::from_counterexample("kappa-scalar-pair", s, bad_pair));
    out.push(
        CheckReport::from_counterexample("odd-element-block-form", s, bad_block)
            .with_witness(json!({"canonical_frame": canonical})),
    );
    let mut bad_kernel = None;
    for t in 0..pairs {
        let a = sampler.sample(&mut rng);
        let stripped = groups::strip_kappa(&ss, &a)?;
        let ok = kappa(&ss, &stripped)?.is_identity()
            && groups::factor_scalar_pin(&ss, &g, &stripped).is_some()
            && groups::factor_commutant_gamma(&ss, &g, &a).is_some();
        if !ok {
            bad_kernel.get_or_insert(json!({"sample": t}));
        }
    }
    out.push(
        CheckReport::from_counterexample("kappa-kernel-factorization", s, bad_kernel)
            .with_witness(json!({"samples": pairs})),
    );
    if canonical {
        out.push(groups::semidirect_check(&ss, &g, Scalar::int(2), Scalar::gauss(1, 1))?);
    }
    Ok(out)
}

/// Decomposition of a Cartan space by `P+- = (I +- iota eta) / 2`, with
/// `eta` the image of the volume element.
pub fn cartan_checks(sig: Signature) -> Result<Vec<CheckReport>> {
    let s = Some(sig);
    if sig.is_even() {
        return Ok(Vec::new());
    }
    let ss = SpinSpace::standard(sig)?;
    let (pp, pm) = ss.decompose_even_restriction();
    let id = ss.identity();
    let idem = &pp * &pp == pp && &pm * &pm == pm;
    let compl = &pp + &pm == id && (&pp * &pm).is_zero();
    let even_ok = ss.even_generators().iter().all(|x| x.commutes_with(&pp));
    let odd_swap = ss.gamma_frame().iter().all(|x| (x * &pp) == (&pm * x));
    let (qp, qm) = ss.cartan_projectors()?;
    let gamma_commute = ss.gamma_frame().iter().all(|x| x.commutes_with(&qp));
    let incl_swap = ss.frame.iter().all(|x| (x * &qp) == (&qm * x));
    Ok(vec![
        CheckReport::new("cartan-projectors-idempotent", s, idem),
        CheckReport::new("cartan-projectors-complementary", s, compl),
        CheckReport::new("cartan-projectors-even-invariant", s, even_ok),
        CheckReport::new("cartan-projectors-odd-swap", s, odd_swap),
        CheckReport::new("gamma-volume-projectors", s, gamma_commute && incl_swap)
            .with_witness(json!({"commute_with_gamma_images": gamma_commute, "swapped_by_frame": incl_swap})),
    ])
}

/// All suites for one signature.
pub fn verify_signature(sig: Signature, pairs: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let mut out = algebra_checks(sig)?;
    out.extend(commutant_checks(sig)?);
    out.extend(volume_checks(sig)?);
    out.extend(group_checks(sig)?);
    out.extend(lipschitz_checks(sig, pairs, seed)?);
    out.extend(cartan_checks(sig)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_signatures_pass() {
        for sig in Signature::all_up_to(3) {
            for r in verify_signature(sig, 10, 1).unwrap() {
                assert!(r.passed(), "{sig}: {r:?}");
            }
        }
    }
}
