//! Pointwise models of spinor bundles: spheres, real projective spaces, the
//! projective quadric, exterior and almost hermitean modules, associated
//! bundles and spin space morphisms.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::clifford::{self, CliffordElement, Signature};
use crate::error::{Error, Result};
use crate::groups::{is_lipschitz, twisted_adjoint, FrameGroup, OrthMatrix};
use crate::matrix::ExactMatrix;
use crate::report::CheckReport;
use crate::scalar::{Rational, Scalar};
use crate::spinor::{find_intertwiner_frames, RepKind, Representation, SpinSpace};

fn rat(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn scalars(v: &[Rational]) -> Vec<Scalar> {
    v.iter().map(|x| Scalar::real(*x)).collect()
}

/// Point of the unit sphere in `R^(m+1)` with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSpherePoint {
    #[serde(with = "rational_vec")]
    pub coords: Vec<Rational>,
}

mod rational_vec {
    use super::Rational;
    use crate::scalar::{parse_rational, rational_string};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(rational_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| parse_rational(t).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{t}`"))))
            .collect()
    }
}

impl RationalSpherePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if dot(&coords, &coords) != Rational::one() {
            return Err(Error::InvalidPair("point is not on the unit sphere".into()));
        }
        Ok(RationalSpherePoint { coords })
    }

    /// Inverse stereographic image `(2 q n, q^2 - |n|^2) / (q^2 + |n|^2)`.
    pub fn from_param(n: &[i64], q: i64) -> Self {
        assert!(q != 0);
        let n2: i64 = n.iter().map(|x| x * x).sum();
        let den = rat(q * q + n2);
        let mut coords: Vec<Rational> = n.iter().map(|x| rat(2 * q * x) / den).collect();
        coords.push(rat(q * q - n2) / den);
        RationalSpherePoint { coords }
    }

    pub fn pole(m: usize) -> Self {
        RationalSpherePoint::from_param(&vec![0; m], 1)
    }

    pub fn m(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn neg(&self) -> Self {
        RationalSpherePoint { coords: self.coords.iter().map(|x| -x).collect() }
    }

    /// Orthonormal rational basis of the tangent space, from the
    /// reflection exchanging the pole and the point.
    pub fn tangent_frame(&self) -> Vec<Vec<Rational>> {
        let m = self.m();
        let mut d = self.coords.clone();
        d[m] -= Rational::one();
        let dd = dot(&d, &d);
        (0..m)
            .map(|j| {
                let mut e = vec![Rational::zero(); m + 1];
                e[j] = Rational::one();
                if dd.is_zero() {
                    return e;
                }
                let f = rat(2) * d[j] / dd;
                e.iter().zip(&d).map(|(a, b)| *a - f * b).collect()
            })
            .collect()
    }
}

/// Seeded rational sphere points; the first one is the pole.
pub fn sample_sphere_points(m: usize, count: usize, seed: u64) -> Result<Vec<RationalSpherePoint>> {
    if m == 0 {
        return Err(Error::InvalidPair("sphere dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|t| {
            if t == 0 {
                return RationalSpherePoint::pole(m);
            }
            let n: Vec<i64> = (0..m).map(|_| rng.gen_range(-3..=3)).collect();
            RationalSpherePoint::from_param(&n, rng.gen_range(1..=3))
        })
        .collect())
}

/// Tangent vector `y` at `x`: `x . y = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentPair {
    pub x: RationalSpherePoint,
    #[serde(with = "rational_vec")]
    pub y: Vec<Rational>,
}

impl TangentPair {
    pub fn new(x: RationalSpherePoint, y: Vec<Rational>) -> Result<Self> {
        if y.len() != x.coords.len() {
            return Err(Error::InvalidPair("tangent vector has the wrong length".into()));
        }
        if !dot(&x.coords, &y).is_zero() {
            return Err(Error::InvalidPair("vector is not tangent".into()));
        }
        Ok(TangentPair { x, y })
    }

    /// Projection of `w` to the tangent space at `x`.
    pub fn project(x: RationalSpherePoint, w: &[Rational]) -> Self {
        let c = dot(&x.coords, w);
        let y = w.iter().zip(&x.coords).map(|(a, b)| *a - c * b).collect();
        TangentPair { x, y }
    }

    pub fn antipodal(&self) -> Self {
        TangentPair { x: self.x.neg(), y: self.y.iter().map(|v| -v).collect() }
    }

    pub fn norm_sq(&self) -> Rational {
        dot(&self.y, &self.y)
    }

    pub fn scaled(&self, c: Rational) -> Self {
        TangentPair { x: self.x.clone(), y: self.y.iter().map(|v| v * c).collect() }
    }
}

pub fn sample_tangent_pairs(m: usize, count: usize, seed: u64) -> Result<Vec<TangentPair>> {
    let points = sample_sphere_points(m, count, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    Ok(points
        .into_iter()
        .map(|x| {
            let w: Vec<Rational> = (0..=m).map(|_| rat(rng.gen_range(-3..=3))).collect();
            TangentPair::project(x, &w)
        })
        .collect())
}

/// Element `x y` of the even subalgebra of `Cl(m+1,0)`.
pub fn vector_product(x: &[Rational], y: &[Rational]) -> CliffordElement {
    let sig = Signature { k: x.len(), l: 0 };
    let a = CliffordElement::vector(sig, &scalars(x));
    let b = CliffordElement::vector(sig, &scalars(y));
    &a * &b
}

/// The representation `theta` of `Cl^0(m+1,0)` used for `S^m`, obtained as
/// `rho . i_m^-1` with `rho` the Dirac (m even) or Cartan (m odd)
/// representation of `Cl(0,m)`.
#[derive(Clone, Debug)]
pub struct SphereModel {
    pub m: usize,
    pub rho: Representation,
}

impl SphereModel {
    pub fn new(m: usize) -> Result<Self> {
        let sig = Signature::negative(m)?;
        let kind = if sig.is_even() { RepKind::Dirac } else { RepKind::Cartan };
        Ok(SphereModel { m, rho: Representation::build(sig, kind)? })
    }

    pub fn dim(&self) -> usize {
        self.rho.dim
    }

    /// `theta` on an even element of `Cl(m+1,0)`.
    pub fn theta(&self, x: &CliffordElement) -> Result<ExactMatrix> {
        if x.signature() != (Signature { k: self.m + 1, l: 0 }) || !x.is_even() {
            return Err(Error::InvalidPair("theta needs an even element of Cl(m+1,0)".into()));
        }
        // Cl^0(m+1,0) -> Cl^0(0,m+1), e_A -> (-1)^(|A|/2) e_A
        let neg = Signature { k: 0, l: self.m + 1 };
        let y = CliffordElement::from_terms(
            neg,
            x.terms().iter().map(|(b, c)| (*b, if clifford::grade(*b) % 4 == 2 { -*c } else { *c })),
        );
        self.rho.image(&clifford::iso_im_inverse(&y)?)
    }

    /// `tau(x, y) = i theta(x y)`.
    pub fn sphere_tau(&self, pair: &TangentPair) -> Result<ExactMatrix> {
        if pair.x.m() != self.m {
            return Err(Error::InvalidPair("point of the wrong dimension".into()));
        }
        let p = TangentPair::new(pair.x.clone(), pair.y.clone())?;
        Ok(self.theta(&vector_product(&p.x.coords, &p.y))?.scale(Scalar::i()))
    }

    /// `tau+-([x, y]) = +- i theta(x y)`.
    pub fn projective_tau(&self, sign: i8, pair: &TangentPair) -> Result<ExactMatrix> {
        let t = self.sphere_tau(pair)?;
        Ok(if sign >= 0 { t } else { -&t })
    }

    /// Images of an orthonormal tangent frame at `x`.
    pub fn frame_at(&self, sign: i8, x: &RationalSpherePoint) -> Result<Vec<ExactMatrix>> {
        x.tangent_frame().into_iter().map(|u| self.projective_tau(sign, &TangentPair::new(x.clone(), u)?)).collect()
    }
}

fn clifford_property(t: &ExactMatrix, norm: Rational) -> bool {
    (t * t) == ExactMatrix::scalar(t.rows(), Scalar::real(norm))
}

pub fn sphere_checks(m: usize, samples: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let model = SphereModel::new(m)?;
    let pairs = sample_tangent_pairs(m, samples, seed)?;
    let sig = Some(Signature { k: m, l: 0 });
    let mut bad_cliff = None;
    let mut bad_scale = None;
    for (i, p) in pairs.iter().enumerate() {
        let t = model.sphere_tau(p)?;
        if !clifford_property(&t, p.norm_sq()) {
            bad_cliff.get_or_insert(json!({"sample": i}));
        }
        let c = rat(3) / rat(2);
        let ts = model.sphere_tau(&p.scaled(c))?;
        if ts != t.scale(Scalar::real(c)) || !clifford_property(&ts, p.norm_sq() * c * c) {
            bad_scale.get_or_insert(json!({"sample": i}));
        }
    }
    let zero = TangentPair::new(RationalSpherePoint::pole(m), vec![Rational::zero(); m + 1])?;
    let ok_zero = model.sphere_tau(&zero)?.is_zero();
    Ok(vec![
        CheckReport::from_counterexample("sphere-clifford-property", sig, bad_cliff)
            .with_witness(json!({"samples": pairs.len(), "dim": model.dim()})),
        CheckReport::from_counterexample("sphere-bilinearity", sig, bad_scale),
        CheckReport::new("sphere-zero-vector", sig, ok_zero),
    ])
}

pub fn projective_checks(m: usize, samples: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let model = SphereModel::new(m)?;
    let pairs = sample_tangent_pairs(m, samples, seed)?;
    let sig = Some(Signature { k: m, l: 0 });
    let mut bad_anti = None;
    let mut bad_cliff = None;
    let mut bad_sign = None;
    for (i, p) in pairs.iter().enumerate() {
        for sign in [1i8, -1] {
            let t = model.projective_tau(sign, p)?;
            if t != model.projective_tau(sign, &p.antipodal())? {
                bad_anti.get_or_insert(json!({"sample": i, "sign": sign}));
            }
            if !clifford_property(&t, p.norm_sq()) {
                bad_cliff.get_or_insert(json!({"sample": i, "sign": sign}));
            }
        }
        if model.projective_tau(-1, p)? != -&model.projective_tau(1, p)? {
            bad_sign.get_or_insert(json!({"sample": i}));
        }
    }
    let points: Vec<RationalSpherePoint> = (0..=m)
        .map(|j| {
            let mut c = vec![Rational::zero(); m + 1];
            c[j] = Rational::one();
            RationalSpherePoint { coords: c }
        })
        .collect();
    let mut pointwise = Vec::new();
    for x in &points {
        let f1 = model.frame_at(1, x)?;
        let f2 = model.frame_at(-1, x)?;
        pointwise.push(find_intertwiner_frames(&f1, &f2).is_some());
    }
    Ok(vec![
        CheckReport::from_counterexample("projective-antipodal-invariance", sig, bad_anti)
            .with_witness(json!({"samples": pairs.len()})),
        CheckReport::from_counterexample("projective-clifford-property", sig, bad_cliff),
        CheckReport::from_counterexample("projective-opposite-sign", sig, bad_sign),
        CheckReport::new("projective-pointwise-intertwiner", sig, pointwise.iter().all(|f| *f))
            .with_witness(json!({"points": points.len(), "intertwiner_found": pointwise})),
    ])
}

/// Form on `R^m` with coefficients indexed by subsets of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExteriorElement {
    pub dim: usize,
    pub terms: BTreeMap<u32, Scalar>,
}

impl ExteriorElement {
    pub fn zero(dim: usize) -> Self {
        ExteriorElement { dim, terms: BTreeMap::new() }
    }

    pub fn basis(dim: usize, mask: u32) -> Self {
        let mut e = ExteriorElement::zero(dim);
        e.add(mask, Scalar::one());
        e
    }

    pub fn add(&mut self, mask: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mask).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let mut out = ExteriorElement::zero(self.dim);
        for (m, x) in &self.terms {
            out.add(*m, *x * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `sum_i a_i e^i ^ self`.
    pub fn wedge_covector(&self, a: &[Scalar]) -> Self {
        let mut out = ExteriorElement::zero(self.dim);
        for (mask, c) in &self.terms {
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() || mask >> i & 1 == 1 {
                    continue;
                }
                out.add(mask | 1 << i, *c * *ai * sign_below(*mask, i));
            }
        }
        out
    }

    /// Contraction with the vector whose pairing with `e^i` is `a_i`.
    pub fn contract(&self, a: &[Scalar]) -> Self {
        let mut out = ExteriorElement::zero(self.dim);
        for (mask, c) in &self.terms {
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() || mask >> i & 1 == 0 {
                    continue;
                }
                out.add(mask & !(1 << i), *c * *ai * sign_below(*mask, i));
            }
        }
        out
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        (0..1u32 << self.dim).map(|m| self.terms.get(&m).copied().unwrap_or_default()).collect()
    }
}

/// `(-1)^(number of indices of mask below i)`.
fn sign_below(mask: u32, i: usize) -> Scalar {
    let below = (mask & ((1u32 << i) - 1)).count_ones();
    Scalar::int(if below.is_multiple_of(2) { 1 } else { -1 })
}

/// `tau(v) w = v _| w + g(v) ^ w` for the metric `h`.
pub fn exterior_tau(v: &[Scalar], omega: &ExteriorElement, sig: Signature) -> Result<ExteriorElement> {
    if v.len() != sig.dim() || omega.dim != sig.dim() {
        return Err(Error::DimensionMismatch("exterior module dimension".into()));
    }
    let lowered: Vec<Scalar> = v.iter().enumerate().map(|(i, x)| *x * Scalar::int(sig.square_of(i + 1))).collect();
    let mut out = omega.contract(v);
    for (m, c) in omega.wedge_covector(&lowered).terms {
        out.add(m, c);
    }
    Ok(out)
}

fn module_matrix(dim: usize, f: impl Fn(&ExteriorElement) -> ExteriorElement) -> ExactMatrix {
    let cols: Vec<Vec<Scalar>> = (0..1u32 << dim).map(|m| f(&ExteriorElement::basis(dim, m)).to_vec()).collect();
    let n = 1usize << dim;
    ExactMatrix::from_fn(n, n, |i, j| cols[j][i])
}

pub fn exterior_matrix(v: &[Scalar], sig: Signature) -> ExactMatrix {
    module_matrix(sig.dim(), |w| exterior_tau(v, w, sig).expect("matching dimensions"))
}

/// Clifford relations for `tau(e_i)` on all basis forms.
pub fn exterior_check(sig: Signature) -> CheckReport {
    let m = sig.dim();
    let images: Vec<ExactMatrix> = (0..m)
        .map(|i| {
            let mut v = vec![Scalar::zero(); m];
            v[i] = Scalar::one();
            exterior_matrix(&v, sig)
        })
        .collect();
    let squares: Vec<i64> = (1..=m).map(|j| sig.square_of(j)).collect();
    let chk = crate::spinor::verify_frame(&images, &squares);
    CheckReport::from_counterexample(
        "exterior-clifford-relations",
        Some(sig),
        (!chk.passed()).then(|| json!({"failures": chk.failures})),
    )
    .with_witness(json!({"module_dim": 1usize << m, "pairs": chk.checked}))
}

/// `tau(n + conj n) w = sqrt2 (g(conj n) _| w + n ^ w)` on forms over
/// `C^d`, for a real space of dimension `2d` with `h(n + conj n) = 2|n|^2`.
pub fn hermitean_tau(real_dim: usize, n: &[Scalar], omega: &ExteriorElement) -> Result<ExteriorElement> {
    if real_dim % 2 == 1 {
        return Err(Error::OddDimension(real_dim));
    }
    let d = real_dim / 2;
    if n.len() != d || omega.dim != d {
        return Err(Error::DimensionMismatch("hermitean module dimension".into()));
    }
    let nbar: Vec<Scalar> = n.iter().map(|x| x.conj()).collect();
    let mut out = omega.contract(&nbar);
    for (m, c) in omega.wedge_covector(n).terms {
        out.add(m, c);
    }
    Ok(out.scale(Scalar::sqrt2()))
}

pub fn hermitean_matrix(n: &[Scalar]) -> ExactMatrix {
    module_matrix(n.len(), |w| hermitean_tau(2 * n.len(), n, w).expect("matching dimensions"))
}

/// `2 Re <n, n'>`, the real inner product of `n + conj n` and `n' + conj n'`.
pub fn hermitean_metric(n: &[Scalar], n2: &[Scalar]) -> Scalar {
    n.iter().zip(n2).map(|(a, b)| *a * b.conj() + a.conj() * *b).sum()
}

/// Polarized Clifford identity over a grid of vectors in `C^d`.
pub fn hermitean_check(d: usize) -> CheckReport {
    let mut vecs: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..d {
        for c in [Scalar::one(), Scalar::i(), Scalar::gauss(1, -2)] {
            let mut v = vec![Scalar::zero(); d];
            v[i] = c;
            vecs.push(v);
        }
    }
    vecs.push(vec![Scalar::gauss(1, 1); d]);
    let mats: Vec<ExactMatrix> = vecs.iter().map(|v| hermitean_matrix(v)).collect();
    let mut bad = None;
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let anti = &(a * b) + &(b * a);
            let want = ExactMatrix::scalar(a.rows(), Scalar::int(2) * hermitean_metric(&vecs[i], &vecs[j]));
            if anti != want {
                bad.get_or_insert(json!({"pair": [i, j]}));
            }
        }
    }
    CheckReport::from_counterexample(format!("hermitean-clifford-d{d}"), None, bad)
        .with_witness(json!({"vectors": vecs.len()}))
}

/// Tangent data `(x, xi, y, eta)` on `S^1 x S^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSample {
    pub circle: TangentPair,
    pub sphere: TangentPair,
}

impl QuadricSample {
    pub fn antipodal(&self) -> Self {
        QuadricSample { circle: self.circle.antipodal(), sphere: self.sphere.antipodal() }
    }
}

/// Representations used on the quadric: `theta` of `Cl(2,0)` and `sigma`
/// of `Cl(3,0)`, both 2-dimensional.
#[derive(Clone, Debug)]
pub struct QuadricModel {
    theta: Representation,
    sigma: Representation,
}

impl QuadricModel {
    pub fn new() -> Self {
        QuadricModel {
            theta: Representation::build(Signature { k: 2, l: 0 }, RepKind::Dirac).expect("valid"),
            sigma: Representation::build(Signature { k: 3, l: 0 }, RepKind::Pauli).expect("valid"),
        }
    }

    fn theta_vec(&self, v: &[Rational]) -> ExactMatrix {
        let x = CliffordElement::vector(Signature { k: 2, l: 0 }, &scalars(v));
        self.theta.image(&x).expect("matching signature")
    }

    fn sigma_of(&self, x: &CliffordElement) -> ExactMatrix {
        self.sigma.image(x).expect("matching signature")
    }

    fn sigma_y_vol(&self, y: &[Rational]) -> ExactMatrix {
        let s3 = Signature { k: 3, l: 0 };
        let yv = CliffordElement::vector(s3, &scalars(y));
        self.sigma_of(&(&yv * &clifford::volume(s3).eta))
    }

    /// `tau = i [theta(xi) (x) sigma(y e123) + I (x) sigma(y eta)]`.
    pub fn tau(&self, s: &QuadricSample) -> ExactMatrix {
        let s3 = Signature { k: 3, l: 0 };
        let y = CliffordElement::vector(s3, &scalars(&s.sphere.x.coords));
        let eta = CliffordElement::vector(s3, &scalars(&s.sphere.y));
        let a = self.theta_vec(&s.circle.y).kron(&self.sigma_y_vol(&s.sphere.x.coords));
        let b = ExactMatrix::identity(2).kron(&self.sigma_of(&(&y * &eta)));
        (&a + &b).scale(Scalar::i())
    }

    /// `varpi = i theta(x) (x) sigma(y e123)`.
    pub fn varpi(&self, s: &QuadricSample) -> ExactMatrix {
        self.theta_vec(&s.circle.x.coords).kron(&self.sigma_y_vol(&s.sphere.x.coords)).scale(Scalar::i())
    }

    /// `theta(x f1 f2) (x) sigma(y e123)` without the factor `i`.
    pub fn varpi_uncorrected(&self, s: &QuadricSample) -> ExactMatrix {
        let s2 = Signature { k: 2, l: 0 };
        let x = CliffordElement::vector(s2, &scalars(&s.circle.x.coords));
        let f12 = CliffordElement::blade(s2, 0b11, Scalar::one());
        self.theta.image(&(&x * &f12)).expect("matching signature").kron(&self.sigma_y_vol(&s.sphere.x.coords))
    }
}

impl Default for QuadricModel {
    fn default() -> Self {
        QuadricModel::new()
    }
}

pub fn quadric_base_sample() -> QuadricSample {
    let one = Rational::one();
    let zero = Rational::zero();
    QuadricSample {
        circle: TangentPair { x: RationalSpherePoint { coords: vec![one, zero] }, y: vec![zero, one] },
        sphere: TangentPair { x: RationalSpherePoint { coords: vec![one, zero, zero] }, y: vec![zero, one, zero] },
    }
}

pub fn sample_quadric(count: usize, seed: u64) -> Result<Vec<QuadricSample>> {
    let c = sample_tangent_pairs(1, count, seed)?;
    let s = sample_tangent_pairs(2, count, seed.wrapping_add(1))?;
    let mut out = vec![quadric_base_sample()];
    out.extend(c.into_iter().zip(s).map(|(circle, sphere)| QuadricSample { circle, sphere }));
    out.truncate(count.max(1));
    Ok(out)
}

pub fn quadric_checks(samples: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let model = QuadricModel::new();
    let pts = sample_quadric(samples, seed)?;
    let id = ExactMatrix::identity(4);
    let half = Scalar::frac(1, 2);
    let mut names_bad: BTreeMap<&'static str, Option<serde_json::Value>> = BTreeMap::new();
    for key in ["involution", "anticommutation", "clifford-property", "antipodal", "projector-swap"] {
        names_bad.insert(key, None);
    }
    let mut literal_fails = 0usize;
    for (i, s) in pts.iter().enumerate() {
        let t = model.tau(s);
        let w = model.varpi(s);
        let norm = s.circle.norm_sq() + s.sphere.norm_sq();
        let mut flag = |k: &'static str, ok: bool| {
            if !ok {
                names_bad.get_mut(k).expect("known key").get_or_insert(json!({"sample": i}));
            }
        };
        flag("involution", (&w * &w).is_identity());
        flag("anticommutation", w.anticommutes_with(&t));
        flag("clifford-property", clifford_property(&t, norm));
        let a = s.antipodal();
        flag("antipodal", model.tau(&a) == t && model.varpi(&a) == w);
        let pp = (&id + &w).scale(half);
        let pm = (&id - &w).scale(half);
        flag("projector-swap", &t * &pp == &pm * &t);
        let lit = model.varpi_uncorrected(s);
        if !(&lit * &lit).is_identity() || !lit.anticommutes_with(&t) {
            literal_fails += 1;
        }
    }
    let mut out: Vec<CheckReport> = names_bad
        .into_iter()
        .map(|(k, bad)| CheckReport::from_counterexample(format!("quadric-{k}"), None, bad))
        .collect();
    out.push(
        CheckReport::new("quadric-uncorrected-formula-fails", None, literal_fails == pts.len())
            .with_witness(json!({"samples": pts.len(), "failing": literal_fails})),
    );
    Ok(out)
}

/// `Gamma Ad~(a^-1)(v) a^-1 = a^-1 Gamma v` over the group and frame, and
/// the failure of the same identity without `Gamma`.
pub fn associated_tau_welldefined(ss: &SpinSpace, group: &FrameGroup) -> Result<Vec<CheckReport>> {
    let mut bad = None;
    let mut without_gamma_fail = 0usize;
    let mut odd_count = 0usize;
    for (i, a) in group.elements.iter().enumerate() {
        let inv = a.try_inverse()?;
        let odd = !a.commutes_with(&ss.gamma);
        odd_count += usize::from(odd);
        let mut failed_without = false;
        for (j, v) in ss.frame.iter().enumerate() {
            let tw = twisted_adjoint(ss, &inv, v)?;
            if &(&ss.gamma * &tw) * &inv != &(&inv * &ss.gamma) * v {
                bad.get_or_insert(json!({"element": i, "vector": j + 1}));
            }
            if &tw * &inv != &inv * v {
                failed_without = true;
            }
        }
        without_gamma_fail += usize::from(failed_without);
    }
    let sig = Some(ss.sig);
    Ok(vec![
        CheckReport::from_counterexample("associated-tau-welldefined", sig, bad)
            .with_witness(json!({"elements": group.order()})),
        CheckReport::new("associated-tau-without-gamma-fails", sig, without_gamma_fail == odd_count && odd_count > 0)
            .with_witness(json!({"failing_elements": without_gamma_fail, "odd_elements": odd_count})),
    ])
}

/// Signed permutation matrices preserving `h`, identity first.
pub fn signed_permutation_isometries(sig: Signature) -> Vec<OrthMatrix> {
    let m = sig.dim();
    let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..m {
        perms = perms
            .into_iter()
            .flat_map(|p| (0..m).filter(|i| !p.contains(i)).map(|i| [p.clone(), vec![i]].concat()).collect::<Vec<_>>())
            .collect();
    }
    let mut out = Vec::new();
    for p in perms.iter().filter(|p| p.iter().enumerate().all(|(j, i)| sig.square_of(j + 1) == sig.square_of(i + 1))) {
        for signs in 0..1u32 << m {
            let mat = ExactMatrix::from_fn(m, m, |r, c| {
                if p[c] == r {
                    Scalar::int(if signs >> c & 1 == 1 { -1 } else { 1 })
                } else {
                    Scalar::zero()
                }
            });
            out.push(OrthMatrix { sig, matrix: mat });
        }
    }
    out
}

fn apply_isometry(frame: &[ExactMatrix], g: &OrthMatrix) -> Vec<ExactMatrix> {
    let m = frame.len();
    let d = frame[0].rows();
    (0..m).map(|c| (0..m).fold(ExactMatrix::zeros(d, d), |acc, r| &acc + &frame[r].scale(g.matrix.get(r, c)))).collect()
}

/// Invertible `a` with `a V1 a^-1 = V2`, searching isometries given by
/// signed permutations, then the extra candidates.
pub fn spin_space_morphisms_with(ss1: &SpinSpace, ss2: &SpinSpace, extra: &[OrthMatrix]) -> Option<ExactMatrix> {
    if ss1.sig != ss2.sig || ss1.dim() != ss2.dim() {
        return None;
    }
    signed_permutation_isometries(ss1.sig)
        .iter()
        .chain(extra)
        .find_map(|g| find_intertwiner_frames(&ss1.frame, &apply_isometry(&ss2.frame, g)).map(|i| i.matrix))
}

pub fn spin_space_morphisms(ss1: &SpinSpace, ss2: &SpinSpace) -> Option<ExactMatrix> {
    spin_space_morphisms_with(ss1, ss2, &[])
}

/// All morphisms found over the first `limit` isometries, and whether
/// `q^-1 q'` is Lipschitz for every pair.
pub fn morphism_fiber_check(ss1: &SpinSpace, ss2: &SpinSpace, limit: usize) -> CheckReport {
    let qs: Vec<ExactMatrix> = signed_permutation_isometries(ss1.sig)
        .iter()
        .take(limit)
        .filter_map(|g| find_intertwiner_frames(&ss1.frame, &apply_isometry(&ss2.frame, g)).map(|i| i.matrix))
        .collect();
    let mut bad = None;
    for (i, q) in qs.iter().enumerate() {
        let qinv = q.inverse().expect("intertwiners are invertible");
        for (j, q2) in qs.iter().enumerate() {
            if !is_lipschitz(ss1, &(&qinv * q2)) {
                bad.get_or_insert(json!({"pair": [i, j]}));
            }
        }
    }
    CheckReport::new("morphism-fiber", Some(ss1.sig), !qs.is_empty() && bad.is_none())
        .with_witness(json!({"morphisms": qs.len()}))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(k: usize, l: usize) -> Signature {
        Signature::new(k, l).unwrap()
    }

    #[test]
    fn sphere_points() {
        assert_eq!(RationalSpherePoint::pole(3).coords, vec![rat(0), rat(0), rat(0), rat(1)]);
        assert_eq!(RationalSpherePoint::from_param(&[1], 1).coords, vec![rat(1), rat(0)]);
        let p = RationalSpherePoint::from_param(&[1, 2], 3);
        assert_eq!(dot(&p.coords, &p.coords), Rational::one());
        for x in sample_sphere_points(4, 30, 3).unwrap() {
            assert_eq!(dot(&x.coords, &x.coords), Rational::one());
            let f = x.tangent_frame();
            for (i, u) in f.iter().enumerate() {
                assert!(dot(u, &x.coords).is_zero());
                for (j, w) in f.iter().enumerate() {
                    assert_eq!(dot(u, w), if i == j { rat(1) } else { rat(0) });
                }
            }
        }
        assert!(sample_sphere_points(0, 1, 0).is_err());
    }

    #[test]
    fn sphere_tau_examples() {
        let model = SphereModel::new(2).unwrap();
        let p = TangentPair::new(
            RationalSpherePoint { coords: vec![rat(1), rat(0), rat(0)] },
            vec![rat(0), rat(1), rat(0)],
        )
        .unwrap();
        let t = model.sphere_tau(&p).unwrap();
        assert!((&t * &t).is_identity());
        let bad = TangentPair { x: p.x.clone(), y: vec![rat(1), rat(0), rat(0)] };
        assert!(model.sphere_tau(&bad).is_err());
        for m in 1..=4 {
            for r in sphere_checks(m, 12, 5).unwrap().into_iter().chain(projective_checks(m, 12, 5).unwrap()) {
                assert!(r.passed(), "m={m} {r:?}");
            }
        }
    }

    #[test]
    fn exterior_examples() {
        let s = sig(2, 0);
        let one = ExteriorElement::basis(2, 0);
        let t = exterior_tau(&[Scalar::one(), Scalar::zero()], &one, s).unwrap();
        assert_eq!(t, ExteriorElement::basis(2, 0b01));
        for s in Signature::all_up_to(4) {
            assert!(exterior_check(s).passed(), "{s}");
        }
    }

    #[test]
    fn hermitean_examples() {
        let m = hermitean_matrix(&[Scalar::one()]);
        assert_eq!(&m * &m, ExactMatrix::scalar(2, Scalar::int(2)));
        let z = hermitean_tau(2, &[Scalar::one()], &ExteriorElement::zero(1)).unwrap();
        assert!(z.is_zero());
        assert_eq!(hermitean_tau(3, &[Scalar::one()], &ExteriorElement::zero(1)), Err(Error::OddDimension(3)));
        assert!(hermitean_check(1).passed());
        assert!(hermitean_check(2).passed());
    }

    #[test]
    fn quadric_base_point() {
        let model = QuadricModel::new();
        let s = quadric_base_sample();
        let w = model.varpi(&s);
        assert!((&w * &w).is_identity());
        let lit = model.varpi_uncorrected(&s);
        assert_eq!(&lit * &lit, ExactMatrix::scalar(4, Scalar::int(-1)));
        for r in quadric_checks(10, 2).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn associated_identity() {
        let ss = SpinSpace::standard(sig(3, 0)).unwrap();
        let g = FrameGroup::generate(&ss).unwrap();
        for r in associated_tau_welldefined(&ss, &g).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn morphisms() {
        let ss = SpinSpace::standard(sig(2, 0)).unwrap();
        assert!(spin_space_morphisms(&ss, &ss).unwrap().as_scalar().is_some());
        let a = ExactMatrix::from_ints(&[&[1, 1], &[0, 1]]);
        let sc = ss.conjugate(&a).unwrap();
        let q = spin_space_morphisms(&ss, &sc).unwrap();
        let qi = q.inverse().unwrap();
        for (f, g) in ss.frame.iter().zip(&sc.frame) {
            assert_eq!(&(&q * f) * &qi, *g);
        }
        let other = SpinSpace::standard(sig(0, 2)).unwrap();
        assert!(spin_space_morphisms(&ss, &other).is_none());
        assert_eq!(signed_permutation_isometries(sig(1, 1)).len(), 4);
        assert!(morphism_fiber_check(&ss, &sc, 8).passed());
    }
}
