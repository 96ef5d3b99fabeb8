//! Blade-basis model of the real Clifford algebra `Cl(k,l)`.
//!
//! Basis blades are bitmasks over the generators: bit `j - 1` stands for
//! `e_j`. Blades are always written in increasing index order and every sign
//! is normalized to that order. The first `k` generators square to `+1`, the
//! last `l` to `-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Blade = u32;

/// Counts of positive and negative generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub k: usize,
    pub l: usize,
}

impl Signature {
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if k + l == 0 || k + l > 30 {
            return Err(Error::InvalidSignature { k, l });
        }
        Ok(Signature { k, l })
    }

    /// Positive definite signature `(m, 0)`.
    pub fn positive(m: usize) -> Result<Self> {
        Signature::new(m, 0)
    }

    /// Negative definite signature `(0, m)`.
    pub fn negative(m: usize) -> Result<Self> {
        Signature::new(0, m)
    }

    pub fn dim(&self) -> usize {
        self.k + self.l
    }

    /// Integer part of `(m + 1) / 2`.
    pub fn nu(&self) -> usize {
        self.dim().div_ceil(2)
    }

    pub fn is_even(&self) -> bool {
        self.dim().is_multiple_of(2)
    }

    /// `h(e_j)` for the 1-based generator index `j`.
    pub fn square_of(&self, j: usize) -> i64 {
        debug_assert!(j >= 1 && j <= self.dim());
        if j <= self.k {
            1
        } else {
            -1
        }
    }

    /// The opposite form `-h`, of signature `(l, k)`.
    pub fn opposite(&self) -> Signature {
        Signature { k: self.l, l: self.k }
    }

    /// Every signature with `1 <= k + l <= max_m`, ordered by `m` then `k`.
    pub fn all_up_to(max_m: usize) -> Vec<Signature> {
        let mut out = Vec::new();
        for m in 1..=max_m {
            for k in (0..=m).rev() {
                out.push(Signature { k, l: m - k });
            }
        }
        out
    }

    pub fn full_mask(&self) -> Blade {
        ((1u64 << self.dim()) - 1) as Blade
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.k, self.l)
    }
}

impl std::str::FromStr for Signature {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (k, l) = s.split_once(',').ok_or_else(|| format!("expected `k,l`, got `{s}`"))?;
        let k: usize = k.trim().parse().map_err(|_| format!("bad k in `{s}`"))?;
        let l: usize = l.trim().parse().map_err(|_| format!("bad l in `{s}`"))?;
        Signature::new(k, l).map_err(|e| e.to_string())
    }
}

pub fn grade(b: Blade) -> u32 {
    b.count_ones()
}

/// Product of two basis blades: the resulting blade and its sign.
///
/// The sign collects one factor `-1` per transposition needed to sort the
/// concatenated generator word, and `h(e_j)` for every generator that meets
/// its twin.
pub fn blade_mul(a: Blade, b: Blade, sig: Signature) -> (Blade, Scalar) {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    let negative_mask = (sig.full_mask() >> sig.k) << sig.k;
    let squares = (a & b & negative_mask).count_ones();
    let sign = if (swaps + squares).is_multiple_of(2) { 1 } else { -1 };
    (a ^ b, Scalar::int(sign))
}

/// Element of `Cl(k,l)` with exact scalar coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    sig: Signature,
    terms: BTreeMap<Blade, Scalar>,
}

impl CliffordElement {
    pub fn zero(sig: Signature) -> Self {
        CliffordElement { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, c: Scalar) -> Self {
        CliffordElement::blade(sig, 0, c)
    }

    pub fn one(sig: Signature) -> Self {
        CliffordElement::scalar(sig, Scalar::one())
    }

    pub fn blade(sig: Signature, b: Blade, c: Scalar) -> Self {
        let mut x = CliffordElement::zero(sig);
        x.add_term(b, c);
        x
    }

    /// The generator `e_j`, 1-based.
    pub fn generator(sig: Signature, j: usize) -> Self {
        assert!(j >= 1 && j <= sig.dim(), "generator index {j} out of range");
        CliffordElement::blade(sig, 1 << (j - 1), Scalar::one())
    }

    /// The vector `sum_j coeffs[j-1] e_j`.
    pub fn vector(sig: Signature, coeffs: &[Scalar]) -> Self {
        assert_eq!(coeffs.len(), sig.dim());
        let mut x = CliffordElement::zero(sig);
        for (j, c) in coeffs.iter().enumerate() {
            x.add_term(1 << j, *c);
        }
        x
    }

    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, Scalar)>) -> Self {
        let mut x = CliffordElement::zero(sig);
        for (b, c) in terms {
            x.add_term(b, c);
        }
        x
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, b: Blade) -> Scalar {
        self.terms.get(&b).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: Blade, c: Scalar) {
        assert!(b & !self.sig.full_mask() == 0, "blade {b:#b} outside {}", self.sig);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(b).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn scale(&self, c: Scalar) -> Self {
        CliffordElement::from_terms(self.sig, self.terms.iter().map(|(b, x)| (*b, *x * c)))
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch { left: self.sig, right: other.sig });
        }
        Ok(())
    }

    /// Geometric product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = CliffordElement::zero(self.sig);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (c, s) = blade_mul(*a, *b, self.sig);
                out.add_term(c, *x * *y * s);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, *c);
        }
        Ok(out)
    }

    /// Grade involution: negates every odd blade.
    pub fn alpha(&self) -> Self {
        CliffordElement::from_terms(
            self.sig,
            self.terms.iter().map(|(b, c)| (*b, if grade(*b) % 2 == 1 { -*c } else { *c })),
        )
    }

    /// `(even, odd)` parts.
    pub fn even_odd_split(&self) -> (Self, Self) {
        let (even, odd): (Vec<_>, Vec<_>) =
            self.terms.iter().map(|(b, c)| (*b, *c)).partition(|(b, _)| grade(*b).is_multiple_of(2));
        (CliffordElement::from_terms(self.sig, even), CliffordElement::from_terms(self.sig, odd))
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| grade(*b).is_multiple_of(2))
    }

    /// Vector part as coordinates, `None` if other grades are present.
    pub fn as_vector(&self) -> Option<Vec<Scalar>> {
        if !self.terms.keys().all(|b| grade(*b) == 1) {
            return None;
        }
        Some((0..self.sig.dim()).map(|j| self.coeff(1 << j)).collect())
    }

    /// Every basis blade of the algebra, `2^m` of them.
    pub fn basis(sig: Signature) -> impl Iterator<Item = CliffordElement> {
        (0..=sig.full_mask()).map(move |b| CliffordElement::blade(sig, b, Scalar::one()))
    }
}

impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, o: &CliffordElement) -> CliffordElement {
        self.try_mul(o).expect("Clifford product of mismatched signatures")
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, o: &CliffordElement) -> CliffordElement {
        self.try_add(o).expect("Clifford sum of mismatched signatures")
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, o: &CliffordElement) -> CliffordElement {
        self + &-o
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        self.scale(Scalar::int(-1))
    }
}

fn blade_name(b: Blade) -> String {
    (0..32).filter(|j| b >> j & 1 == 1).map(|j| format!("e{}", j + 1)).collect()
}

// Renders like `1 - 2*e1e3`.
impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in &self.terms {
            let name = blade_name(*b);
            let simple = c.is_rational();
            let negative = simple && c.re < num_rational::Ratio::from_integer(0);
            let mag = if negative { -*c } else { *c };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if simple { mag.to_string() } else { format!("({mag})") };
            match (name.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{name}")?,
                (false, false) => write!(f, "{coeff}*{name}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({})[{}]", self.sig, self)
    }
}

/// A volume element `eta = e_1 ... e_m` with `iota` in `{1, i}` such that
/// `eta^2 = iota^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeElement {
    pub eta: CliffordElement,
    pub iota: Scalar,
}

/// `iota(h)`: `1` when `eta^2 = 1`, `i` when `eta^2 = -1`.
pub fn iota(sig: Signature) -> Scalar {
    let (_, s) = blade_mul(sig.full_mask(), sig.full_mask(), sig);
    if s.is_one() {
        Scalar::one()
    } else {
        Scalar::i()
    }
}

pub fn volume(sig: Signature) -> VolumeElement {
    let eta = CliffordElement::blade(sig, sig.full_mask(), Scalar::one());
    let iota = iota(sig);
    debug_assert_eq!(&eta * &eta, CliffordElement::scalar(sig, iota * iota));
    VolumeElement { eta, iota }
}

/// Sign `s` with `i_m(e_A) = s * e_{A'}` where `e_j -> e_j e_{m+1}` and
/// `A' = A` or `A + {m+1}` depending on the parity of `|A|`.
fn iso_im_blade(a: Blade, m: usize) -> (Blade, Scalar) {
    let target = Signature { k: 0, l: m + 1 };
    let top: Blade = 1 << m;
    let mut blade: Blade = 0;
    let mut sign = Scalar::one();
    for j in 0..m {
        if a >> j & 1 == 1 {
            let (b, s) = blade_mul(blade, (1 << j) | top, target);
            blade = b;
            sign *= s;
        }
    }
    (blade, sign)
}

/// The algebra isomorphism `Cl(0,m) -> Cl^0(0,m+1)` extending
/// `e_j -> e_j e_{m+1}`.
pub fn iso_im(x: &CliffordElement) -> Result<CliffordElement> {
    let sig = x.signature();
    if sig.k != 0 {
        return Err(Error::SignatureMismatch { left: sig, right: Signature { k: 0, l: sig.dim() } });
    }
    let m = sig.dim();
    let target = Signature { k: 0, l: m + 1 };
    Ok(CliffordElement::from_terms(
        target,
        x.terms().iter().map(|(a, c)| {
            let (b, s) = iso_im_blade(*a, m);
            (b, *c * s)
        }),
    ))
}

/// Inverse of [`iso_im`] on the even subalgebra of `Cl(0,m+1)`.
pub fn iso_im_inverse(y: &CliffordElement) -> Result<CliffordElement> {
    let sig = y.signature();
    if sig.k != 0 || sig.dim() < 2 || !y.is_even() {
        return Err(Error::Internal(format!("iso_im_inverse needs an even element of Cl(0,m+1), got {y:?}")));
    }
    let m = sig.dim() - 1;
    let low: Blade = (1 << m) - 1;
    let source = Signature { k: 0, l: m };
    Ok(CliffordElement::from_terms(
        source,
        y.terms().iter().map(|(b, c)| {
            let a = b & low;
            let (_, s) = iso_im_blade(a, m);
            (a, *c / s)
        }),
    ))
}
