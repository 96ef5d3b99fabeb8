//! Matrix representations of `Cl(k,l)` and spin spaces.
//!
//! Definite representations are built by the dimension shift chain
//! `P_1 -> D_2 -> P_3 -> D_4 -> ...`, where each Pauli step realizes the
//! isomorphism `i_m` on the preceding Dirac images. Mixed signatures multiply
//! the images of the last `l` generators by `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clifford::{self, grade, Blade, CliffordElement, Signature};
use crate::error::{Error, Result};
use crate::linalg::{self, RowReducer};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepKind {
    WeylPlus,
    WeylMinus,
    Pauli,
    PauliTwisted,
    Dirac,
    Cartan,
}

impl RepKind {
    pub const ALL: [RepKind; 6] =
        [RepKind::WeylPlus, RepKind::WeylMinus, RepKind::Pauli, RepKind::PauliTwisted, RepKind::Dirac, RepKind::Cartan];

    pub fn needs_even(&self) -> bool {
        matches!(self, RepKind::WeylPlus | RepKind::WeylMinus | RepKind::Dirac)
    }

    pub fn is_weyl(&self) -> bool {
        matches!(self, RepKind::WeylPlus | RepKind::WeylMinus)
    }

    pub fn compatible(&self, sig: Signature) -> bool {
        self.needs_even() == sig.is_even()
    }

    pub fn name(&self) -> &'static str {
        match self {
            RepKind::WeylPlus => "weyl+",
            RepKind::WeylMinus => "weyl-",
            RepKind::Pauli => "pauli",
            RepKind::PauliTwisted => "pauli-twisted",
            RepKind::Dirac => "dirac",
            RepKind::Cartan => "cartan",
        }
    }

    /// Matrix size of the representation in dimension `m`.
    pub fn dim(&self, m: usize) -> usize {
        match self {
            RepKind::Dirac => 1 << (m / 2),
            RepKind::WeylPlus | RepKind::WeylMinus => 1 << (m / 2 - 1),
            RepKind::Pauli | RepKind::PauliTwisted => 1 << ((m - 1) / 2),
            RepKind::Cartan => 1 << m.div_ceil(2),
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RepKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.to_ascii_lowercase();
        RepKind::ALL
            .into_iter()
            .find(|k| k.name() == t || format!("{k:?}").to_ascii_lowercase() == t)
            .ok_or_else(|| format!("unknown representation kind `{s}`"))
    }
}

/// Matrix images of the algebra generators.
///
/// For the full-algebra kinds `images[j]` is the image of `e_{j+1}`. Weyl
/// kinds represent only the even subalgebra; there `images[j]` is the image
/// of `e_{j+1} e_m` for `j < m - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub sig: Signature,
    pub kind: RepKind,
    pub dim: usize,
    pub images: Vec<ExactMatrix>,
}

fn definite_dirac_from_pauli(p: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let n = p[0].rows();
    let mut out: Vec<ExactMatrix> = p.iter().map(|s| ExactMatrix::block_diag(s, &-s)).collect();
    let z = ExactMatrix::zeros(n, n);
    let i = ExactMatrix::identity(n);
    out.push(ExactMatrix::block2(&z, &i, &i, &z));
    out
}

/// Pauli images of `Cl(2n+1,0)` whose composition with `i_{2n}` is the
/// Dirac representation `i * D` of `Cl(0,2n)`.
fn definite_pauli_from_dirac(d: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let dim = d[0].rows();
    let minus: Vec<ExactMatrix> = d.iter().map(|x| x.scale(Scalar::i())).collect();
    let omega = d.iter().skip(1).fold(d[0].clone(), |acc, x| &acc * x);
    let sq = (&omega * &omega).as_scalar().expect("volume of a Dirac frame squares to a scalar");
    let mut x = if sq.is_one() { omega } else { omega.scale(Scalar::i()) };
    let mut out: Vec<ExactMatrix> = minus.iter().map(|dm| dm * &x).collect();
    let eta = out.iter().fold(ExactMatrix::identity(dim), |acc, y| &acc * y);
    let eta = &eta * &x;
    let target = clifford::iota(Signature { k: d.len() + 1, l: 0 });
    if eta.as_scalar() != Some(target) {
        x = -&x;
        out = minus.iter().map(|dm| dm * &x).collect();
    }
    out.push(x);
    out
}

/// Definite images for `Cl(m,0)`: Pauli for `m` odd, Dirac for `m` even.
fn definite_chain(m: usize) -> Vec<ExactMatrix> {
    let mut cur = vec![ExactMatrix::identity(1)];
    for step in 2..=m {
        cur = if step % 2 == 0 { definite_dirac_from_pauli(&cur) } else { definite_pauli_from_dirac(&cur) };
    }
    cur
}

fn signed_images(sig: Signature) -> Vec<ExactMatrix> {
    definite_chain(sig.dim())
        .into_iter()
        .enumerate()
        .map(|(j, x)| if j < sig.k { x } else { x.scale(Scalar::i()) })
        .collect()
}

fn ordered_product(frame: &[ExactMatrix]) -> ExactMatrix {
    frame.iter().skip(1).fold(frame[0].clone(), |acc, x| &acc * x)
}

fn pauli_images(sig: Signature) -> Vec<ExactMatrix> {
    let imgs = signed_images(sig);
    let eta = ordered_product(&imgs);
    if eta.as_scalar() == Some(clifford::iota(sig)) {
        imgs
    } else {
        imgs.iter().map(|x| -x).collect()
    }
}

/// Basis of an invariant subspace, with the coordinates of a vector in the
/// span read off at the free columns of the reduced echelon form.
struct Subspace {
    basis: Vec<Vec<Scalar>>,
    coords_at: Vec<usize>,
}

impl Subspace {
    fn eigenspace(m: &ExactMatrix, lambda: Scalar) -> Self {
        let shifted = m - &ExactMatrix::scalar(m.rows(), lambda);
        let red = RowReducer::from_matrix(&shifted);
        Subspace { basis: red.nullspace(), coords_at: red.free_columns() }
    }

    fn restrict(&self, a: &ExactMatrix) -> ExactMatrix {
        let r = self.basis.len();
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|b| a.apply(b)).collect();
        ExactMatrix::from_fn(r, r, |i, j| cols[j][self.coords_at[i]])
    }
}

impl Representation {
    pub fn build(sig: Signature, kind: RepKind) -> Result<Self> {
        let m = sig.dim();
        if m == 0 {
            return Err(Error::InvalidSignature { k: sig.k, l: sig.l });
        }
        if !kind.compatible(sig) {
            return Err(Error::ParityMismatch {
                kind: kind.name(),
                expected: if kind.needs_even() { "even" } else { "odd" },
                m,
            });
        }
        let images = match kind {
            RepKind::Dirac => signed_images(sig),
            RepKind::Pauli => pauli_images(sig),
            RepKind::PauliTwisted => pauli_images(sig).iter().map(|x| -x).collect(),
            RepKind::Cartan => pauli_images(sig).iter().map(|x| ExactMatrix::block_diag(x, &-x)).collect(),
            RepKind::WeylPlus | RepKind::WeylMinus => {
                let d = signed_images(sig);
                let vol = ordered_product(&d).scale(clifford::iota(sig));
                let lambda = if kind == RepKind::WeylPlus { Scalar::one() } else { Scalar::int(-1) };
                let sub = Subspace::eigenspace(&vol, lambda);
                let last = &d[m - 1];
                d[..m - 1].iter().map(|x| sub.restrict(&(x * last))).collect()
            }
        };
        let dim = images.first().map_or(1, |x| x.rows());
        debug_assert_eq!(dim, kind.dim(m));
        Ok(Representation { sig, kind, dim, images })
    }

    /// Images of the generators `e_j` (or `e_j e_m` for Weyl kinds) and
    /// their expected squares.
    fn expected_squares(&self) -> Vec<i64> {
        let m = self.sig.dim();
        if self.kind.is_weyl() {
            (1..m).map(|j| -self.sig.square_of(j) * self.sig.square_of(m)).collect()
        } else {
            (1..=m).map(|j| self.sig.square_of(j)).collect()
        }
    }

    /// Image of an algebra element. Weyl kinds accept only even elements.
    pub fn image(&self, x: &CliffordElement) -> Result<ExactMatrix> {
        if x.signature() != self.sig {
            return Err(Error::SignatureMismatch { left: self.sig, right: x.signature() });
        }
        let mut out = ExactMatrix::zeros(self.dim, self.dim);
        for (b, c) in x.terms() {
            out = &out + &self.blade_image(*b)?.scale(*c);
        }
        Ok(out)
    }

    fn blade_image(&self, b: Blade) -> Result<ExactMatrix> {
        let id = ExactMatrix::identity(self.dim);
        if !self.kind.is_weyl() {
            return Ok((0..self.sig.dim()).filter(|j| b >> j & 1 == 1).fold(id, |acc, j| &acc * &self.images[j]));
        }
        if grade(b) % 2 == 1 {
            return Err(Error::Internal("Weyl representations act only on the even subalgebra".into()));
        }
        let m = self.sig.dim();
        let hm = Scalar::int(self.sig.square_of(m));
        let idx: Vec<usize> = (0..m).filter(|j| b >> j & 1 == 1).collect();
        let mut out = id;
        for pair in idx.chunks(2) {
            let (a, c) = (pair[0], pair[1]);
            let factor =
                if c == m - 1 { self.images[a].clone() } else { (&self.images[a] * &self.images[c]).scale(-hm) };
            out = &out * &factor;
        }
        Ok(out)
    }

    /// Exact check of every anticommutator identity.
    pub fn verify_clifford(&self) -> CliffordCheck {
        let squares = self.expected_squares();
        verify_frame(&self.images, &squares)
    }

    /// The representation `x -> a x a^-1`.
    pub fn conjugate(&self, a: &ExactMatrix) -> Result<Self> {
        let inv = a.try_inverse()?;
        Ok(Representation { images: self.images.iter().map(|x| &(a * x) * &inv).collect(), ..self.clone() })
    }

    /// The representation `x -> rho(alpha(x))`.
    pub fn twisted(&self) -> Self {
        let images = if self.kind.is_weyl() { self.images.clone() } else { self.images.iter().map(|x| -x).collect() };
        Representation { images, ..self.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordCheck {
    pub checked: usize,
    /// Pairs `(i, j)`, 1-based, whose anticommutator is wrong.
    pub failures: Vec<(usize, usize)>,
}

impl CliffordCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_frame(images: &[ExactMatrix], squares: &[i64]) -> CliffordCheck {
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 0..images.len() {
        for j in i..images.len() {
            checked += 1;
            let anti = &(&images[i] * &images[j]) + &(&images[j] * &images[i]);
            let want = if i == j { Scalar::int(2 * squares[i]) } else { Scalar::zero() };
            if anti != ExactMatrix::scalar(images[i].rows(), want) {
                failures.push((i + 1, j + 1));
            }
        }
    }
    CliffordCheck { checked, failures }
}

/// Basis of `K(h)`: matrices commuting with every frame element.
pub fn commutant(frame: &[ExactMatrix]) -> Vec<ExactMatrix> {
    linalg::commutant(frame)
}

/// Basis of `A(h)`: matrices anticommuting with every frame element.
pub fn anticommutant(frame: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let neg: Vec<ExactMatrix> = frame.iter().map(|f| -f).collect();
    let pairs: Vec<_> = frame.iter().zip(&neg).collect();
    linalg::intertwiner_space(&pairs)
}

fn canonical_block_gamma(n: usize) -> ExactMatrix {
    let z = ExactMatrix::zeros(n, n);
    let i = ExactMatrix::identity(n);
    ExactMatrix::block2(&z, &-&i, &i, &z)
}

fn sign_normalized(g: ExactMatrix) -> ExactMatrix {
    match g.first_nonzero() {
        Some((_, _, x)) if x.sign_class() == std::cmp::Ordering::Less => -&g,
        _ => g,
    }
}

/// Deterministic element of `A(h)` squaring to `-I`.
///
/// For `m` even this is `i * iota * eta`. For `m` odd it is the block
/// matrix `(0 -I; I 0)` whenever that anticommutes with the frame, and is
/// otherwise assembled from a non-isotropic element of `A(h)`.
pub fn choose_gamma(sig: Signature, frame: &[ExactMatrix]) -> Result<ExactMatrix> {
    let d = frame[0].rows();
    let eta = ordered_product(frame);
    let iota = clifford::iota(sig);
    if sig.is_even() {
        return Ok(eta.scale(Scalar::i() * iota));
    }
    if d.is_multiple_of(2) {
        let j = canonical_block_gamma(d / 2);
        if frame.iter().all(|f| f.anticommutes_with(&j)) {
            return Ok(j);
        }
    }
    let basis = anticommutant(frame);
    if basis.len() != 2 {
        return Err(Error::Internal(format!("anticommutant has dimension {}", basis.len())));
    }
    let sum = &basis[0] + &basis[1];
    let (w, c) = [&basis[0], &basis[1], &sum]
        .into_iter()
        .find_map(|w| (w * w).as_scalar().filter(|c| !c.is_zero()).map(|c| (w.clone(), c)))
        .ok_or_else(|| Error::Internal("no non-isotropic element in A(h)".into()))?;
    let half = Scalar::frac(1, 2);
    let id = ExactMatrix::identity(d);
    let ve = eta.scale(iota.inv().expect("iota is a unit"));
    let pp = (&id + &ve).scale(half);
    let pm = (&id - &ve).scale(half);
    let cinv = c.inv().expect("nonzero square");
    let g = &(&w * &pp) - &(&w * &pm).scale(cinv);
    Ok(sign_normalized(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grading {
    Even,
    Odd,
    Neither,
}

/// A spin space `(S, V, h)`: the frame of `V` inside `End S` together with
/// its volume element and the chosen `Gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinSpace {
    pub sig: Signature,
    pub frame: Vec<ExactMatrix>,
    pub eta: ExactMatrix,
    pub iota: Scalar,
    pub gamma: ExactMatrix,
}

impl SpinSpace {
    /// Dirac frame for `m` even, Cartan frame for `m` odd.
    pub fn standard(sig: Signature) -> Result<Self> {
        let kind = if sig.is_even() { RepKind::Dirac } else { RepKind::Cartan };
        let rep = Representation::build(sig, kind)?;
        SpinSpace::from_frame(sig, rep.images)
    }

    pub fn from_frame(sig: Signature, frame: Vec<ExactMatrix>) -> Result<Self> {
        if frame.len() != sig.dim() {
            return Err(Error::DimensionMismatch(format!("{} frame matrices for m = {}", frame.len(), sig.dim())));
        }
        let d = frame[0].rows();
        if d != 1 << sig.nu() || frame.iter().any(|f| f.rows() != d || !f.is_square()) {
            return Err(Error::DimensionMismatch(format!("spin space needs dimension {}", 1 << sig.nu())));
        }
        let squares: Vec<i64> = (1..=sig.dim()).map(|j| sig.square_of(j)).collect();
        let check = verify_frame(&frame, &squares);
        if !check.passed() {
            return Err(Error::Internal(format!("frame violates the Clifford relation at {:?}", check.failures)));
        }
        let eta = ordered_product(&frame);
        let iota = clifford::iota(sig);
        let gamma = choose_gamma(sig, &frame)?;
        Ok(SpinSpace { sig, frame, eta, iota, gamma })
    }

    pub fn dim(&self) -> usize {
        self.eta.rows()
    }

    pub fn m(&self) -> usize {
        self.sig.dim()
    }

    pub fn identity(&self) -> ExactMatrix {
        ExactMatrix::identity(self.dim())
    }

    pub fn gamma_inverse(&self) -> ExactMatrix {
        -&self.gamma
    }

    /// The frame after conjugation by `a`.
    pub fn conjugate(&self, a: &ExactMatrix) -> Result<Self> {
        let inv = a.try_inverse()?;
        SpinSpace::from_frame(self.sig, self.frame.iter().map(|f| &(a * f) * &inv).collect())
    }

    /// The inclusion `Cl(h) -> End S` given by the frame.
    pub fn inclusion(&self, x: &CliffordElement) -> Result<ExactMatrix> {
        self.blade_sum(x, |j| self.frame[j].clone())
    }

    /// The algebra homomorphism extending `v -> Gamma v`.
    pub fn gamma_map(&self, x: &CliffordElement) -> Result<ExactMatrix> {
        self.blade_sum(x, |j| &self.gamma * &self.frame[j])
    }

    fn blade_sum(&self, x: &CliffordElement, gen: impl Fn(usize) -> ExactMatrix) -> Result<ExactMatrix> {
        if x.signature() != self.sig {
            return Err(Error::SignatureMismatch { left: self.sig, right: x.signature() });
        }
        let gens: Vec<ExactMatrix> = (0..self.m()).map(gen).collect();
        let mut out = ExactMatrix::zeros(self.dim(), self.dim());
        for (b, c) in x.terms() {
            let prod = (0..self.m()).filter(|j| b >> j & 1 == 1).fold(self.identity(), |acc, j| &acc * &gens[j]);
            out = &out + &prod.scale(*c);
        }
        Ok(out)
    }

    /// `gamma` applied to a Pin element given by its inclusion image: `p`
    /// when it commutes with `Gamma`, `Gamma p` otherwise.
    pub fn gamma_of_pin(&self, p: &ExactMatrix) -> ExactMatrix {
        if p.commutes_with(&self.gamma) {
            p.clone()
        } else {
            &self.gamma * p
        }
    }

    /// Images `gamma(e_j)`.
    pub fn gamma_frame(&self) -> Vec<ExactMatrix> {
        self.frame.iter().map(|f| &self.gamma * f).collect()
    }

    pub fn grading_of(&self, a: &ExactMatrix) -> Grading {
        if a.commutes_with(&self.eta) {
            Grading::Even
        } else if a.anticommutes_with(&self.eta) {
            Grading::Odd
        } else {
            Grading::Neither
        }
    }

    /// `alpha(a) = Gamma^-1 a Gamma`.
    pub fn alpha(&self, a: &ExactMatrix) -> ExactMatrix {
        &(&self.gamma_inverse() * a) * &self.gamma
    }

    /// `P_pm = (I pm iota gamma(eta)) / 2`, for `m` odd.
    pub fn cartan_projectors(&self) -> Result<(ExactMatrix, ExactMatrix)> {
        if self.sig.is_even() {
            return Err(Error::ParityMismatch { kind: "cartan projectors", expected: "odd", m: self.m() });
        }
        let eta = clifford::volume(self.sig).eta;
        let g = self.gamma_map(&eta)?.scale(self.iota);
        Ok(self.projector_pair(&g))
    }

    /// `Sigma_pm = (I pm iota eta) / 2` for the inclusion volume element.
    pub fn decompose_even_restriction(&self) -> (ExactMatrix, ExactMatrix) {
        self.projector_pair(&self.eta.scale(self.iota))
    }

    fn projector_pair(&self, involution: &ExactMatrix) -> (ExactMatrix, ExactMatrix) {
        let id = self.identity();
        let half = Scalar::frac(1, 2);
        ((&id + involution).scale(half), (&id - involution).scale(half))
    }

    /// Images of the even generators `e_j e_m`.
    pub fn even_generators(&self) -> Vec<ExactMatrix> {
        let last = &self.frame[self.m() - 1];
        self.frame[..self.m() - 1].iter().map(|f| f * last).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intertwiner {
    pub matrix: ExactMatrix,
    pub invertible: bool,
}

/// Candidate combinations of a solution basis, in a fixed order: the basis
/// vectors, then points `sum t^j b_j` on the moment curve.
fn intertwiner_candidates(basis: &[ExactMatrix]) -> impl Iterator<Item = ExactMatrix> + '_ {
    let d = basis.first().map_or(0, |b| b.rows());
    let tries = if basis.len() > 1 { d * (basis.len() - 1) + 1 } else { 0 };
    let curve = (1..=tries as i64).map(move |t| {
        let mut acc = ExactMatrix::zeros(d, d);
        let mut w = Scalar::one();
        for b in basis {
            acc = &acc + &b.scale(w);
            w *= Scalar::int(t);
        }
        acc
    });
    basis.iter().cloned().chain(curve)
}

/// Invertible `a` with `a f1_i = f2_i a` for all `i`, if one is found.
pub fn find_intertwiner_frames(f1: &[ExactMatrix], f2: &[ExactMatrix]) -> Option<Intertwiner> {
    if f1.len() != f2.len() || f1.is_empty() || f1[0].rows() != f2[0].rows() {
        return None;
    }
    let pairs: Vec<_> = f2.iter().zip(f1).collect();
    let basis = linalg::intertwiner_space(&pairs);
    let found = intertwiner_candidates(&basis).find(|c| c.inverse().is_some());
    found.map(|matrix| Intertwiner { matrix, invertible: true })
}

pub fn find_intertwiner(r1: &Representation, r2: &Representation) -> Option<Intertwiner> {
    if r1.sig != r2.sig || r1.dim != r2.dim {
        return None;
    }
    find_intertwiner_frames(&r1.images, &r2.images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(k: usize, l: usize) -> Signature {
        Signature::new(k, l).unwrap()
    }

    #[test]
    fn base_cases() {
        let p = Representation::build(sig(1, 0), RepKind::Pauli).unwrap();
        assert_eq!(p.images, vec![ExactMatrix::identity(1)]);
        let d = Representation::build(sig(2, 0), RepKind::Dirac).unwrap();
        assert_eq!(d.dim, 2);
        assert!(d.images[0].anticommutes_with(&d.images[1]));
        assert!(d.images.iter().all(|x| (x * x).is_identity()));
    }

    #[test]
    fn cartan_block_form() {
        let c = Representation::build(sig(3, 0), RepKind::Cartan).unwrap();
        let p = Representation::build(sig(3, 0), RepKind::Pauli).unwrap();
        assert_eq!(c.dim, 4);
        for (x, s) in c.images.iter().zip(&p.images) {
            assert_eq!(*x, ExactMatrix::block_diag(s, &-s));
        }
    }

    #[test]
    fn parity_mismatch() {
        assert!(matches!(Representation::build(sig(2, 0), RepKind::Pauli), Err(Error::ParityMismatch { .. })));
        assert!(Representation::build(sig(3, 0), RepKind::WeylPlus).is_err());
        assert!(Signature::new(0, 0).is_err());
    }

    #[test]
    fn every_kind_satisfies_clifford() {
        for s in Signature::all_up_to(7) {
            for kind in RepKind::ALL.into_iter().filter(|k| k.compatible(s)) {
                if kind.is_weyl() && s.dim() < 2 {
                    continue;
                }
                let r = Representation::build(s, kind).unwrap();
                assert_eq!(r.dim, kind.dim(s.dim()), "{s} {kind}");
                assert!(r.verify_clifford().passed(), "{s} {kind}");
            }
        }
    }

    #[test]
    fn perturbed_image_is_reported() {
        let mut r = Representation::build(sig(2, 0), RepKind::Dirac).unwrap();
        let neg = r.twisted();
        assert!(neg.verify_clifford().passed());
        r.images[1].set(0, 1, Scalar::int(2));
        let chk = r.verify_clifford();
        assert!(chk.failures.contains(&(2, 2)));
        assert!(!chk.failures.contains(&(1, 1)));
    }

    #[test]
    fn pauli_volume_is_iota() {
        for s in Signature::all_up_to(7).into_iter().filter(|s| !s.is_even()) {
            let p = Representation::build(s, RepKind::Pauli).unwrap();
            let eta = p.image(&clifford::volume(s).eta).unwrap();
            assert_eq!(eta.as_scalar(), Some(clifford::iota(s)), "{s}");
        }
    }

    #[test]
    fn pauli_chain_realizes_iso_im() {
        for n in 1..=3 {
            let m = 2 * n;
            let p = Representation::build(sig(m + 1, 0), RepKind::Pauli).unwrap();
            let d = Representation::build(sig(0, m), RepKind::Dirac).unwrap();
            for j in 0..m {
                assert_eq!(&p.images[j] * &p.images[m], d.images[j]);
            }
        }
    }

    #[test]
    fn weyl_matches_projector_ranks() {
        let ss = SpinSpace::standard(sig(2, 0)).unwrap();
        let (p, q) = ss.decompose_even_restriction();
        assert_eq!((p.rank(), q.rank()), (1, 1));
        let e12 = CliffordElement::blade(sig(2, 0), 0b11, Scalar::one());
        let img = ss.inclusion(&e12).unwrap();
        assert!(img.commutes_with(&p) && img.commutes_with(&q));
        assert!((&p + &q).is_identity());
    }

    #[test]
    fn weyl_image_of_even_blades() {
        let s = sig(2, 2);
        let w = Representation::build(s, RepKind::WeylPlus).unwrap();
        let basis: Vec<_> = CliffordElement::basis(s).filter(|b| b.is_even()).collect();
        for a in &basis {
            for b in &basis {
                assert_eq!(w.image(&(a * b)).unwrap(), &w.image(a).unwrap() * &w.image(b).unwrap());
            }
        }
        assert!(w.image(&CliffordElement::generator(s, 1)).is_err());
    }

    #[test]
    fn gamma_examples() {
        let ss = SpinSpace::standard(sig(3, 0)).unwrap();
        assert_eq!(ss.gamma, canonical_block_gamma(2));
        let ss = SpinSpace::standard(sig(2, 0)).unwrap();
        assert_eq!(ss.gamma, ss.eta.scale(Scalar::i() * ss.iota));
        assert!((&ss.gamma * &ss.gamma).as_scalar() == Some(Scalar::int(-1)));
    }

    #[test]
    fn gamma_map_block_form_odd() {
        let s = sig(3, 0);
        let ss = SpinSpace::standard(s).unwrap();
        let p = Representation::build(s, RepKind::Pauli).unwrap();
        let z = ExactMatrix::zeros(2, 2);
        for j in 1..=3 {
            let g = ss.gamma_map(&CliffordElement::generator(s, j)).unwrap();
            assert_eq!(g, ExactMatrix::block2(&z, &p.images[j - 1], &p.images[j - 1], &z));
        }
        assert!(ss.gamma_map(&CliffordElement::one(s)).unwrap().is_identity());
    }

    #[test]
    fn gradings() {
        let s = sig(3, 0);
        let ss = SpinSpace::standard(s).unwrap();
        assert_eq!(ss.grading_of(&ss.identity()), Grading::Even);
        assert_eq!(ss.grading_of(&ss.frame[0]), Grading::Even);
        assert_eq!(ss.grading_of(&ss.gamma_frame()[0]), Grading::Odd);
        let mut x = ss.identity();
        x.set(0, 2, Scalar::one());
        assert_eq!(ss.grading_of(&x), Grading::Neither);
    }

    #[test]
    fn intertwiner_examples() {
        let r = Representation::build(sig(2, 1), RepKind::Cartan).unwrap();
        let it = find_intertwiner(&r, &r).unwrap();
        assert!(it.matrix.as_scalar().is_some());
        let a = ExactMatrix::from_fn(
            4,
            4,
            |i, j| if i <= j { Scalar::gauss(1 + i as i64, j as i64) } else { Scalar::zero() },
        );
        let rc = r.conjugate(&a).unwrap();
        let it = find_intertwiner(&r, &rc).unwrap();
        let inv = it.matrix.inverse().unwrap();
        for (x, y) in r.images.iter().zip(&rc.images) {
            assert_eq!(&(&it.matrix * x) * &inv, *y);
        }
        let p = Representation::build(sig(2, 1), RepKind::Pauli).unwrap();
        assert!(find_intertwiner(&p, &p.twisted()).is_none());
        let pt = Representation::build(sig(2, 1), RepKind::PauliTwisted).unwrap();
        assert!(find_intertwiner(&p, &pt).is_none());
    }

    #[test]
    fn serde_round_trip() {
        let r = Representation::build(sig(1, 1), RepKind::Dirac).unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert!(js.contains("\"kind\":\"dirac\""));
        let back: Representation = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        let ss = SpinSpace::standard(sig(1, 2)).unwrap();
        let back: SpinSpace = serde_json::from_str(&serde_json::to_string(&ss).unwrap()).unwrap();
        assert_eq!(back, ss);
    }
}
