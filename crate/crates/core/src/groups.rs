//! Finite frame groups inside Pin, the adjoint and twisted adjoint actions,
//! Lipschitz membership and the homomorphism `kappa`.

use std::collections::{HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::clifford::Signature;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::ExactMatrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::spinor::{commutant, Grading, SpinSpace};

/// Finite matrix group with a Cayley table. Elements are sorted.
#[derive(Clone, Debug)]
pub struct FrameGroup {
    pub elements: Vec<ExactMatrix>,
    pub cayley: Vec<Vec<usize>>,
    index: HashMap<ExactMatrix, usize>,
}

impl FrameGroup {
    /// Closure of `{+-f_i}` for the frame of `ss`.
    pub fn generate(ss: &SpinSpace) -> Result<Self> {
        FrameGroup::from_generators(&ss.frame, 1 << (ss.m() + 2))
    }

    /// Closure of `{+-gamma(e_i)}`.
    pub fn generate_gamma(ss: &SpinSpace) -> Result<Self> {
        FrameGroup::from_generators(&ss.gamma_frame(), 1 << (ss.m() + 2))
    }

    /// Breadth-first closure of the generators and their negatives under
    /// right multiplication.
    pub fn from_generators(gens: &[ExactMatrix], bound: usize) -> Result<Self> {
        let d = gens[0].rows();
        let mut all: Vec<ExactMatrix> = gens.to_vec();
        all.extend(gens.iter().map(|g| -g));
        let id = ExactMatrix::identity(d);
        let mut seen: HashMap<ExactMatrix, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &all {
                let y = &x * g;
                if !seen.contains_key(&y) {
                    if seen.len() >= bound {
                        return Err(Error::ClosureBound(bound));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<ExactMatrix> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<ExactMatrix, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let cayley = elements
            .iter()
            .map(|a| {
                elements.iter().map(|b| *index.get(&(a * b)).expect("closure is multiplicatively closed")).collect()
            })
            .collect();
        Ok(FrameGroup { elements, cayley, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, a: &ExactMatrix) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn contains(&self, a: &ExactMatrix) -> bool {
        self.index.contains_key(a)
    }

    pub fn identity_index(&self) -> usize {
        let d = self.elements[0].rows();
        self.index[&ExactMatrix::identity(d)]
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        let e = self.identity_index();
        self.cayley[i].iter().position(|&k| k == e).expect("group elements are invertible")
    }

    pub fn is_closed(&self) -> bool {
        let e = self.identity_index();
        self.cayley.iter().all(|row| row.contains(&e))
    }
}

/// Element of `O(h)` as an `m x m` real matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthMatrix {
    pub sig: Signature,
    pub matrix: ExactMatrix,
}

impl OrthMatrix {
    pub fn metric(sig: Signature) -> ExactMatrix {
        let d: Vec<Scalar> = (1..=sig.dim()).map(|j| Scalar::int(sig.square_of(j))).collect();
        ExactMatrix::diagonal(&d)
    }

    pub fn identity(sig: Signature) -> Self {
        OrthMatrix { sig, matrix: ExactMatrix::identity(sig.dim()) }
    }

    pub fn minus_identity(sig: Signature) -> Self {
        OrthMatrix { sig, matrix: ExactMatrix::scalar(sig.dim(), Scalar::int(-1)) }
    }

    /// Reflection in the hyperplane orthogonal to `e_i`, 1-based.
    pub fn reflection(sig: Signature, i: usize) -> Self {
        let mut m = ExactMatrix::identity(sig.dim());
        m.set(i - 1, i - 1, Scalar::int(-1));
        OrthMatrix { sig, matrix: m }
    }

    /// `G^T H G = H` with real entries.
    pub fn is_orthogonal(&self) -> bool {
        let h = OrthMatrix::metric(self.sig);
        self.matrix.entries().iter().all(|x| x.is_real()) && &(&self.matrix.transpose() * &h) * &self.matrix == h
    }

    pub fn det(&self) -> Scalar {
        self.matrix.determinant()
    }
}

/// Real coordinates of `x` in the frame basis, if `x` lies in the real span.
pub fn frame_coords(ss: &SpinSpace, x: &ExactMatrix) -> Option<Vec<Scalar>> {
    let d = Scalar::int(ss.dim() as i64);
    let coords: Vec<Scalar> = ss
        .frame
        .iter()
        .enumerate()
        .map(|(i, f)| (f * x).trace() / (Scalar::int(ss.sig.square_of(i + 1)) * d))
        .collect();
    if !coords.iter().all(|c| c.is_real()) {
        return None;
    }
    let back =
        coords.iter().zip(&ss.frame).fold(ExactMatrix::zeros(ss.dim(), ss.dim()), |acc, (c, f)| &acc + &f.scale(*c));
    (back == *x).then_some(coords)
}

fn conj_matrix(ss: &SpinSpace, left: &ExactMatrix, a: &ExactMatrix) -> Result<OrthMatrix> {
    let inv = a.try_inverse()?;
    let mut cols = Vec::with_capacity(ss.m());
    for (i, f) in ss.frame.iter().enumerate() {
        let img = &(left * f) * &inv;
        let c = frame_coords(ss, &img)
            .ok_or_else(|| Error::NotNormalizing(format!("image of e{} leaves the real frame span", i + 1)))?;
        cols.push(c);
    }
    let m = ss.m();
    let o = OrthMatrix { sig: ss.sig, matrix: ExactMatrix::from_fn(m, m, |i, j| cols[j][i]) };
    if !o.is_orthogonal() {
        return Err(Error::NotNormalizing("induced map is not orthogonal".into()));
    }
    Ok(o)
}

/// `Ad~(a) v = alpha(a) v a^-1` with `alpha(a) = Gamma^-1 a Gamma`.
pub fn twisted_adjoint(ss: &SpinSpace, a: &ExactMatrix, v: &ExactMatrix) -> Result<ExactMatrix> {
    let inv = a.try_inverse()?;
    let out = &(&ss.alpha(a) * v) * &inv;
    if frame_coords(ss, &out).is_none() {
        return Err(Error::NotNormalizing("twisted adjoint image leaves the frame span".into()));
    }
    Ok(out)
}

pub fn twisted_adjoint_matrix(ss: &SpinSpace, a: &ExactMatrix) -> Result<OrthMatrix> {
    conj_matrix(ss, &ss.alpha(a), a)
}

/// `Ad(a) v = a v a^-1` as an orthogonal matrix in the frame basis.
pub fn adjoint_matrix(ss: &SpinSpace, a: &ExactMatrix) -> Result<OrthMatrix> {
    conj_matrix(ss, a, a)
}

pub fn is_lipschitz(ss: &SpinSpace, a: &ExactMatrix) -> bool {
    let Some(inv) = a.inverse() else {
        return false;
    };
    ss.frame.iter().all(|f| frame_coords(ss, &(&(a * f) * &inv)).is_some())
}

/// Image of `kappa`: a sign, plus a nonzero scale for `m` odd, composing in
/// `Z_2 x C^*` with `(-1) . z = z^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaImage {
    pub sign: i8,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scale: Option<Scalar>,
}

impl KappaImage {
    pub fn identity(sig: Signature) -> Self {
        KappaImage { sign: 1, scale: (!sig.is_even()).then(Scalar::one) }
    }

    pub fn compose(&self, o: &KappaImage) -> KappaImage {
        let scale = match (self.scale, o.scale) {
            (Some(z1), Some(z2)) => {
                let z2 = if self.sign == 1 { z2 } else { z2.inv().expect("nonzero scale") };
                Some(z1 * z2)
            }
            _ => None,
        };
        KappaImage { sign: self.sign * o.sign, scale }
    }

    pub fn inverse(&self) -> KappaImage {
        let scale = self.scale.map(|z| if self.sign == 1 { z.inv().expect("nonzero scale") } else { z });
        KappaImage { sign: self.sign, scale }
    }

    pub fn is_identity(&self) -> bool {
        self.sign == 1 && self.scale.is_none_or(|z| z.is_one())
    }
}

/// `P_pm = (I pm iota^-1 eta) / 2`.
fn kappa_projectors(ss: &SpinSpace) -> (ExactMatrix, ExactMatrix) {
    let id = ss.identity();
    let ve = ss.eta.scale(ss.iota.inv().expect("iota is a unit"));
    let half = Scalar::frac(1, 2);
    ((&id + &ve).scale(half), (&id - &ve).scale(half))
}

/// Action of conjugation by `a` on `A(h)`.
///
/// For `m` odd the isotropic basis `u+ = Gamma P+`, `u- = -Gamma P-` is
/// used: `a u+ a^-1 = z^-1 u+` gives `(1, z)` and `a u+ a^-1 = z u-` gives
/// `(-1, z)`.
pub fn kappa(ss: &SpinSpace, a: &ExactMatrix) -> Result<KappaImage> {
    if !is_lipschitz(ss, a) {
        return Err(Error::NotLipschitz("kappa needs a Lipschitz element".into()));
    }
    let inv = a.try_inverse()?;
    let conj = |w: &ExactMatrix| &(a * w) * &inv;
    if ss.sig.is_even() {
        let g = conj(&ss.gamma);
        return if g == ss.gamma {
            Ok(KappaImage { sign: 1, scale: None })
        } else if g == -&ss.gamma {
            Ok(KappaImage { sign: -1, scale: None })
        } else {
            Err(Error::Internal("conjugate of Gamma is not +-Gamma".into()))
        };
    }
    let (pp, pm) = kappa_projectors(ss);
    let up = &ss.gamma * &pp;
    let um = -&(&ss.gamma * &pm);
    let img = conj(&up);
    let (r, c, x) = up.first_nonzero().expect("u+ is nonzero");
    let ratio_p = x.inv().map(|xi| img.get(r, c) * xi);
    if let Some(q) = ratio_p.filter(|q| !q.is_zero() && up.scale(*q) == img) {
        return Ok(KappaImage { sign: 1, scale: q.inv() });
    }
    let (r, c, x) = um.first_nonzero().expect("u- is nonzero");
    let q = img.get(r, c) / x;
    if !q.is_zero() && um.scale(q) == img {
        return Ok(KappaImage { sign: -1, scale: Some(q) });
    }
    Err(Error::Internal("conjugate of u+ is on neither isotropic line".into()))
}

/// Whether the spin space has the block form `diag(s, -s)` with
/// `Gamma = (0 -I; I 0)`.
pub fn is_canonical_block(ss: &SpinSpace) -> bool {
    if ss.sig.is_even() {
        return false;
    }
    let n = ss.dim() / 2;
    let z = ExactMatrix::zeros(n, n);
    let i = ExactMatrix::identity(n);
    ss.gamma == ExactMatrix::block2(&z, &-&i, &i, &z)
        && ss.frame.iter().all(|f| {
            let [a, b, c, d] = f.blocks();
            b.is_zero() && c.is_zero() && d == -&a
        })
}

/// `(0 lam A; mu A 0)` with `A` the top-left block of `a_pin`.
pub fn build_odd_element(ss: &SpinSpace, lam: Scalar, mu: Scalar, a_pin: &ExactMatrix) -> Result<ExactMatrix> {
    if ss.sig.is_even() {
        return Err(Error::ParityMismatch { kind: "odd block element", expected: "odd", m: ss.m() });
    }
    if lam.is_zero() || mu.is_zero() {
        return Err(Error::ZeroScale);
    }
    if !is_canonical_block(ss) {
        return Err(Error::Internal("odd block elements need the canonical Cartan frame".into()));
    }
    let [a, b, c, _] = a_pin.blocks();
    if !b.is_zero() || !c.is_zero() {
        return Err(Error::NotLipschitz("Pin part must be block diagonal".into()));
    }
    let z = ExactMatrix::zeros(a.rows(), a.rows());
    Ok(ExactMatrix::block2(&z, &a.scale(lam), &a.scale(mu), &z))
}

/// `lam P+ + mu P-` in `K(h)` for `m` odd.
pub fn scalar_pair(ss: &SpinSpace, lam: Scalar, mu: Scalar) -> Result<ExactMatrix> {
    if ss.sig.is_even() {
        return Err(Error::ParityMismatch { kind: "scalar pair", expected: "odd", m: ss.m() });
    }
    if lam.is_zero() || mu.is_zero() {
        return Err(Error::ZeroScale);
    }
    let (pp, pm) = kappa_projectors(ss);
    Ok(&pp.scale(lam) + &pm.scale(mu))
}

/// Embedding of a Pin element into the kernel of `kappa`: `p` itself when
/// `p` commutes with `Gamma`, otherwise `p iota^-1 eta` (`m` odd).
pub fn kernel_embedding(ss: &SpinSpace, p: &ExactMatrix) -> ExactMatrix {
    if p.commutes_with(&ss.gamma) || ss.sig.is_even() {
        p.clone()
    } else {
        p * &ss.eta.scale(ss.iota.inv().expect("iota is a unit"))
    }
}

fn grade_number(g: Grading) -> Option<i64> {
    match g {
        Grading::Even => Some(0),
        Grading::Odd => Some(1),
        Grading::Neither => None,
    }
}

/// The extension checks over a frame group: `Ad~` lands in `O(h)`, its
/// kernel is `{+-I}`, `Ad(gamma(u)) = Ad~(u)` on frame vectors, and the
/// kernel of the plain adjoint action.
pub fn verify_extension_diagram(ss: &SpinSpace, group: &FrameGroup) -> Vec<CheckReport> {
    let sig = Some(ss.sig);
    let mut out = Vec::new();
    let mut bad_orth = None;
    let mut twisted_kernel = Vec::new();
    let mut plain_kernel = Vec::new();
    for (i, a) in group.elements.iter().enumerate() {
        match twisted_adjoint_matrix(ss, a) {
            Ok(o) if o.matrix.is_identity() => twisted_kernel.push(i),
            Ok(_) => {}
            Err(e) => {
                bad_orth.get_or_insert(json!({"element": i, "error": e.to_string()}));
            }
        }
        if adjoint_matrix(ss, a).is_ok_and(|o| o.matrix.is_identity()) {
            plain_kernel.push(i);
        }
    }
    out.push(CheckReport::from_counterexample("twisted-adjoint-orthogonal", sig, bad_orth));

    let d = ss.dim();
    let pm_id: Vec<usize> = [ExactMatrix::identity(d), ExactMatrix::scalar(d, Scalar::int(-1))]
        .iter()
        .filter_map(|x| group.index_of(x))
        .collect();
    let mut expect = pm_id.clone();
    expect.sort();
    out.push(
        CheckReport::new("twisted-adjoint-kernel", sig, twisted_kernel == expect && expect.len() == 2)
            .with_witness(json!({"kernel_size": twisted_kernel.len()})),
    );

    let mut bad_cover = None;
    for (i, u) in ss.frame.iter().enumerate() {
        let lhs = adjoint_matrix(ss, &(&ss.gamma * u));
        let rhs = twisted_adjoint_matrix(ss, u);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r && r == OrthMatrix::reflection(ss.sig, i + 1) => {}
            _ => {
                bad_cover.get_or_insert(json!({"vector": i + 1}));
            }
        }
    }
    out.push(CheckReport::from_counterexample("adjoint-gamma-equals-twisted", sig, bad_cover));

    let mut expect_plain = pm_id;
    if !ss.sig.is_even() {
        for x in [ss.eta.clone(), -&ss.eta] {
            if let Some(i) = group.index_of(&x) {
                expect_plain.push(i);
            }
        }
    }
    expect_plain.sort();
    let want = if ss.sig.is_even() { 2 } else { 4 };
    out.push(
        CheckReport::new("adjoint-kernel", sig, plain_kernel == expect_plain && expect_plain.len() == want)
            .with_witness(json!({"kernel_size": plain_kernel.len()})),
    );
    out
}

/// Explicit preimages under `Ad` of the frame reflections, the identity
/// and `-id`.
pub fn ad_surjectivity_witnesses(ss: &SpinSpace) -> Vec<CheckReport> {
    let sig = ss.sig;
    let mut out = Vec::new();
    for (i, g) in ss.gamma_frame().iter().enumerate() {
        let ok = adjoint_matrix(ss, g).is_ok_and(|o| o == OrthMatrix::reflection(sig, i + 1));
        out.push(
            CheckReport::new(format!("ad-witness-reflection-e{}", i + 1), Some(sig), ok)
                .with_witness(json!({"witness": format!("gamma(e{})", i + 1)})),
        );
    }
    let ok = adjoint_matrix(ss, &ss.identity()).is_ok_and(|o| o == OrthMatrix::identity(sig));
    out.push(CheckReport::new("ad-witness-identity", Some(sig), ok).with_witness(json!({"witness": "I"})));
    let eta = crate::clifford::volume(sig).eta;
    let ok =
        ss.gamma_map(&eta).and_then(|g| adjoint_matrix(ss, &g)).is_ok_and(|o| o == OrthMatrix::minus_identity(sig));
    out.push(
        CheckReport::new("ad-witness-minus-identity", Some(sig), ok).with_witness(json!({"witness": "gamma(eta)"})),
    );
    out
}

/// `det Ad(a) = (-1)^grade(a)` over every element of the group.
pub fn parity_check(ss: &SpinSpace, group: &FrameGroup, name: &str) -> CheckReport {
    let bad = group.elements.iter().enumerate().find_map(|(i, a)| {
        let g = grade_number(ss.grading_of(a));
        let det = adjoint_matrix(ss, a).ok().map(|o| o.det());
        match (g, det) {
            (Some(g), Some(d)) if d == Scalar::int(if g == 0 { 1 } else { -1 }) => None,
            _ => Some(json!({"element": i})),
        }
    });
    CheckReport::from_counterexample(name, Some(ss.sig), bad)
}

/// For `m` odd in canonical block form: odd `gamma(a)` swaps the two scalar
/// parameters of `diag(lam, mu)`, even `gamma(a)` leaves them alone.
pub fn semidirect_check(ss: &SpinSpace, group: &FrameGroup, lam: Scalar, mu: Scalar) -> Result<CheckReport> {
    let n = ss.dim() / 2;
    let k = ExactMatrix::block_diag(&ExactMatrix::scalar(n, lam), &ExactMatrix::scalar(n, mu));
    let swapped = ExactMatrix::block_diag(&ExactMatrix::scalar(n, mu), &ExactMatrix::scalar(n, lam));
    let mut bad = None;
    for (i, p) in group.elements.iter().enumerate() {
        let gp = ss.gamma_of_pin(p);
        let conj = &(&gp * &k) * &gp.try_inverse()?;
        let odd = !p.commutes_with(&ss.gamma);
        let ok = if odd {
            conj == swapped
                && &k * &gp == build_odd_element(ss, lam, mu, p)?
                && &gp * &k == build_odd_element(ss, mu, lam, p)?
        } else {
            conj == k
        };
        if !ok {
            bad.get_or_insert(json!({"element": i, "odd": odd}));
        }
    }
    Ok(CheckReport::from_counterexample("semidirect-swap", Some(ss.sig), bad))
}

/// Seeded generator of Lipschitz elements as products of scalars, frame
/// group elements, their `gamma` images, scalar pairs and odd blocks.
pub struct LipschitzSampler<'a> {
    pub ss: &'a SpinSpace,
    pub group: &'a FrameGroup,
    pub max_factors: usize,
}

const GRID: [(i64, i64); 7] = [(1, 0), (2, 0), (-1, 0), (0, 1), (1, 1), (-2, 0), (3, 0)];

fn grid_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let (a, b) = *GRID.choose(rng).expect("nonempty grid");
    Scalar::gauss(a, b)
}

impl<'a> LipschitzSampler<'a> {
    pub fn new(ss: &'a SpinSpace, group: &'a FrameGroup) -> Self {
        LipschitzSampler { ss, group, max_factors: 3 }
    }

    fn pin<R: Rng>(&self, rng: &mut R) -> &ExactMatrix {
        self.group.elements.choose(rng).expect("nonempty group")
    }

    pub fn factor<R: Rng>(&self, rng: &mut R) -> ExactMatrix {
        let odd = !self.ss.sig.is_even() && is_canonical_block(self.ss);
        let kinds = if odd { 5 } else { 3 };
        match rng.gen_range(0..kinds) {
            0 => self.ss.identity().scale(grid_scalar(rng)),
            1 => self.pin(rng).clone(),
            2 => self.ss.gamma_of_pin(self.pin(rng)),
            3 => scalar_pair(self.ss, grid_scalar(rng), grid_scalar(rng)).expect("odd m"),
            _ => {
                let p = self.pin(rng).clone();
                build_odd_element(self.ss, grid_scalar(rng), grid_scalar(rng), &p).expect("canonical frame")
            }
        }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> ExactMatrix {
        let n = rng.gen_range(1..=self.max_factors);
        (0..n).fold(self.ss.identity(), |acc, _| &acc * &self.factor(rng))
    }
}

/// `kappa(ab) = kappa(a) kappa(b)` on sampled pairs.
pub fn kappa_homomorphism_check<R: Rng>(ss: &SpinSpace, group: &FrameGroup, pairs: usize, rng: &mut R) -> CheckReport {
    let sampler = LipschitzSampler::new(ss, group);
    let mut bad = None;
    for t in 0..pairs {
        let a = sampler.sample(rng);
        let b = sampler.sample(rng);
        let res = (|| -> Result<bool> {
            let ka = kappa(ss, &a)?;
            let kb = kappa(ss, &b)?;
            Ok(kappa(ss, &(&a * &b))? == ka.compose(&kb))
        })();
        if !res.unwrap_or(false) {
            bad = Some(json!({"pair": t}));
            break;
        }
    }
    CheckReport::from_counterexample("kappa-homomorphism", Some(ss.sig), bad).with_witness(json!({"pairs": pairs}))
}

/// Strips the `kappa` image of a sample (`m` odd, canonical frame) and
/// returns the corrected element, which lies in the kernel of `kappa`.
pub fn strip_kappa(ss: &SpinSpace, a: &ExactMatrix) -> Result<ExactMatrix> {
    let k = kappa(ss, a)?;
    let mut b = a.clone();
    if k.sign == -1 {
        let s = build_odd_element(ss, Scalar::one(), Scalar::one(), &ss.identity())?;
        b = &b * &s.try_inverse()?;
    }
    let z = kappa(ss, &b)?.scale.ok_or_else(|| Error::Internal("missing scale".into()))?;
    let kz = scalar_pair(ss, z, Scalar::one())?;
    Ok(&b * &kz.try_inverse()?)
}

/// `a = c * p_hat` with `c` scalar and `p` in the group, if such exists.
pub fn factor_scalar_pin(ss: &SpinSpace, group: &FrameGroup, a: &ExactMatrix) -> Option<(Scalar, usize)> {
    group.elements.iter().enumerate().find_map(|(i, p)| {
        let ph = kernel_embedding(ss, p);
        let q = a * &ph.inverse()?;
        q.as_scalar().filter(|c| !c.is_zero()).map(|c| (c, i))
    })
}

/// `a = k gamma(p)` with `k` in `K(h)` and `p` in the group.
pub fn factor_commutant_gamma(ss: &SpinSpace, group: &FrameGroup, a: &ExactMatrix) -> Option<usize> {
    let kbasis: Vec<Vec<Scalar>> = commutant(&ss.frame).iter().map(|k| k.vec()).collect();
    group.elements.iter().position(|p| {
        let gp = ss.gamma_of_pin(p);
        gp.inverse().is_some_and(|inv| linalg::solve_in_span(&kbasis, &(a * &inv).vec()).is_some())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn space(k: usize, l: usize) -> SpinSpace {
        SpinSpace::standard(Signature::new(k, l).unwrap()).unwrap()
    }

    #[test]
    fn frame_group_orders() {
        assert_eq!(FrameGroup::generate(&space(1, 0)).unwrap().order(), 4);
        assert_eq!(FrameGroup::generate(&space(2, 0)).unwrap().order(), 8);
        let g = FrameGroup::generate(&space(3, 0)).unwrap();
        assert_eq!(g.order(), 16);
        assert!(g.is_closed());
        let e = g.identity_index();
        for i in 0..g.order() {
            assert_eq!(g.cayley[i][g.inverse_index(i)], e);
        }
    }

    #[test]
    fn closure_bound_is_enforced() {
        let ss = space(3, 0);
        assert!(matches!(FrameGroup::from_generators(&ss.frame, 5), Err(Error::ClosureBound(5))));
    }

    #[test]
    fn twisted_adjoint_examples() {
        let ss = space(2, 0);
        let (e1, e2) = (&ss.frame[0], &ss.frame[1]);
        assert_eq!(twisted_adjoint(&ss, e1, e2).unwrap(), *e2);
        assert_eq!(twisted_adjoint(&ss, e1, e1).unwrap(), -e1);
        assert_eq!(twisted_adjoint(&ss, &ss.identity(), e2).unwrap(), *e2);
        let rot = adjoint_matrix(&ss, &(e1 * e2)).unwrap();
        assert_eq!(rot, OrthMatrix::minus_identity(ss.sig));
    }

    #[test]
    fn lipschitz_membership() {
        let ss = space(3, 0);
        assert!(is_lipschitz(&ss, &ss.identity().scale(Scalar::gauss(2, 1))));
        let odd = build_odd_element(&ss, Scalar::int(2), Scalar::int(3), &ss.frame[0]).unwrap();
        assert!(is_lipschitz(&ss, &odd));
        assert_eq!(ss.grading_of(&odd), Grading::Odd);
        assert!(!is_lipschitz(&ss, &(&ss.identity() + &ss.frame[0])));
        let mut shear = ss.identity();
        shear.set(0, 1, Scalar::one());
        assert!(!is_lipschitz(&ss, &shear));
    }

    #[test]
    fn kappa_examples() {
        let ss = space(3, 0);
        assert!(kappa(&ss, &ss.identity()).unwrap().is_identity());
        let odd = build_odd_element(&ss, Scalar::one(), Scalar::one(), &ss.frame[0]).unwrap();
        assert_eq!(kappa(&ss, &odd).unwrap(), KappaImage { sign: -1, scale: Some(Scalar::one()) });
        let odd = build_odd_element(&ss, Scalar::int(2), Scalar::int(3), &ss.frame[0]).unwrap();
        assert_eq!(kappa(&ss, &odd).unwrap(), KappaImage { sign: -1, scale: Some(Scalar::frac(2, 3)) });
        let ev = space(2, 0);
        let gu = &ev.gamma * &ev.frame[0];
        assert_eq!(kappa(&ev, &gu).unwrap(), KappaImage { sign: -1, scale: None });
        assert!(build_odd_element(&ss, Scalar::zero(), Scalar::one(), &ss.identity()).is_err());
    }

    #[test]
    fn extension_diagram_small() {
        for (k, l) in [(2, 0), (3, 0), (1, 1), (0, 3)] {
            let ss = space(k, l);
            let g = FrameGroup::generate(&ss).unwrap();
            for r in verify_extension_diagram(&ss, &g) {
                assert!(r.passed(), "{k},{l}: {r:?}");
            }
            for r in ad_surjectivity_witnesses(&ss) {
                assert!(r.passed(), "{k},{l}: {r:?}");
            }
            assert!(parity_check(&ss, &g, "parity").passed());
        }
    }

    #[test]
    fn sampled_kappa_is_multiplicative() {
        let ss = space(2, 1);
        let g = FrameGroup::generate(&ss).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        assert!(kappa_homomorphism_check(&ss, &g, 30, &mut rng).passed());
    }

    #[test]
    fn kernel_factorization() {
        let ss = space(3, 0);
        let g = FrameGroup::generate(&ss).unwrap();
        let sampler = LipschitzSampler::new(&ss, &g);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = sampler.sample(&mut rng);
            let b = strip_kappa(&ss, &a).unwrap();
            assert!(kappa(&ss, &b).unwrap().is_identity());
            assert!(factor_scalar_pin(&ss, &g, &b).is_some());
            assert!(factor_commutant_gamma(&ss, &g, &a).is_some());
        }
    }

    #[test]
    fn semidirect_rule() {
        let ss = space(3, 0);
        let g = FrameGroup::generate(&ss).unwrap();
        assert!(semidirect_check(&ss, &g, Scalar::int(2), Scalar::int(5)).unwrap().passed());
    }
}
