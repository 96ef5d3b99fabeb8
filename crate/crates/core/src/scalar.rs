//! Exact arithmetic in the number field `Q(i, sqrt 2)`.
//!
//! An element is stored as four rational coordinates over the basis
//! `{1, i, sqrt2, i*sqrt2}`. Every operation is exact; an intermediate that
//! does not fit the rational backing type panics instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Rational numbers backing every coordinate.
pub type Rational = Ratio<i128>;

fn overflow() -> ! {
    panic!("exact rational arithmetic overflowed i128")
}

fn radd(a: &Rational, b: &Rational) -> Rational {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

fn rsub(a: &Rational, b: &Rational) -> Rational {
    a.checked_sub(b).unwrap_or_else(|| overflow())
}

fn rmul(a: &Rational, b: &Rational) -> Rational {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

fn rdiv(a: &Rational, b: &Rational) -> Rational {
    a.checked_div(b).unwrap_or_else(|| overflow())
}

/// Parses `"p"` or `"p/q"` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().ok()?;
            let d: i128 = d.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<i128>().ok().map(Rational::from_integer),
    }
}

/// Element `re + im*i + r2*sqrt2 + ir2*i*sqrt2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
    pub r2: Rational,
    pub ir2: Rational,
}

impl Scalar {
    pub const fn new(re: Rational, im: Rational, r2: Rational, ir2: Rational) -> Self {
        Scalar { re, im, r2, ir2 }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn i() -> Self {
        Scalar::complex(Rational::zero(), Rational::one())
    }

    pub fn sqrt2() -> Self {
        Scalar::new(Rational::zero(), Rational::zero(), Rational::one(), Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(Rational::from_integer(n as i128))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar::real(Rational::new(n as i128, d as i128))
    }

    pub fn real(r: Rational) -> Self {
        Scalar { re: r, ..Scalar::default() }
    }

    pub fn complex(re: Rational, im: Rational) -> Self {
        Scalar { re, im, ..Scalar::default() }
    }

    /// `a + b*i` with integer parts.
    pub fn gauss(a: i64, b: i64) -> Self {
        Scalar::complex(Rational::from_integer(a as i128), Rational::from_integer(b as i128))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero() && self.r2.is_zero() && self.ir2.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.r2.is_zero() && self.ir2.is_zero()
    }

    /// True when the element lies in `Q` (no `i` and no `sqrt2` part).
    pub fn is_rational(&self) -> bool {
        self.im.is_zero() && self.r2.is_zero() && self.ir2.is_zero()
    }

    /// True when the element is real, i.e. lies in `Q(sqrt2)`.
    pub fn is_real(&self) -> bool {
        self.im.is_zero() && self.ir2.is_zero()
    }

    /// Complex conjugation `i -> -i`.
    pub fn conj(&self) -> Self {
        Scalar::new(self.re, -self.im, self.r2, -self.ir2)
    }

    /// Galois conjugation `sqrt2 -> -sqrt2`.
    fn sqrt2_conj(&self) -> Self {
        Scalar::new(self.re, self.im, -self.r2, -self.ir2)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // x * sigma(x) lies in Q(i); then multiply by the complex conjugate.
        let s = self.sqrt2_conj();
        let n = *self * s;
        debug_assert!(n.r2.is_zero() && n.ir2.is_zero());
        let norm = radd(&rmul(&n.re, &n.re), &rmul(&n.im, &n.im));
        let n_inv = Scalar::complex(rdiv(&n.re, &norm), rdiv(&-n.im, &norm));
        Some(s * n_inv)
    }

    pub fn scale(&self, r: Rational) -> Self {
        Scalar::new(rmul(&self.re, &r), rmul(&self.im, &r), rmul(&self.r2, &r), rmul(&self.ir2, &r))
    }

    /// Raises to a non-negative integer power.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = *self;
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Sign rule fixing a representative of `{x, -x}`: positive real part of
    /// the rational coordinate first, then the `i` coordinate, then the
    /// remaining ones.
    pub fn sign_class(&self) -> Ordering {
        for c in [self.re, self.im, self.r2, self.ir2] {
            if c.is_positive() {
                return Ordering::Greater;
            }
            if c.is_negative() {
                return Ordering::Less;
            }
        }
        Ordering::Equal
    }

    /// Renders one coordinate as `"p"` or `"p/q"`.
    pub fn coord_strings(&self) -> [String; 4] {
        [self.re, self.im, self.r2, self.ir2].map(|c| rational_string(&c))
    }
}

pub fn rational_string(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::real(r)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar::new(radd(&self.re, &o.re), radd(&self.im, &o.im), radd(&self.r2, &o.r2), radd(&self.ir2, &o.ir2))
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar::new(rsub(&self.re, &o.re), rsub(&self.im, &o.im), rsub(&self.r2, &o.r2), rsub(&self.ir2, &o.ir2))
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im, -self.r2, -self.ir2)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        // Write x = p + q*sqrt2 with p, q in Q(i).
        let cmul = |ar: &Rational, ai: &Rational, br: &Rational, bi: &Rational| {
            (rsub(&rmul(ar, br), &rmul(ai, bi)), radd(&rmul(ar, bi), &rmul(ai, br)))
        };
        let (pp_r, pp_i) = cmul(&self.re, &self.im, &o.re, &o.im);
        let (qq_r, qq_i) = cmul(&self.r2, &self.ir2, &o.r2, &o.ir2);
        let (pq_r, pq_i) = cmul(&self.re, &self.im, &o.r2, &o.ir2);
        let (qp_r, qp_i) = cmul(&self.r2, &self.ir2, &o.re, &o.im);
        let two = Rational::from_integer(2);
        Scalar::new(
            radd(&pp_r, &rmul(&two, &qq_r)),
            radd(&pp_i, &rmul(&two, &qq_i)),
            radd(&pq_r, &qp_r),
            radd(&pq_i, &qp_i),
        )
    }
}

impl Div for Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Scalar) -> Scalar {
        self * o.inv().expect("division by zero scalar")
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self = *self + o;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        *self = *self - o;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, o: Scalar) {
        *self = *self * o;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, unit) in [(self.re, ""), (self.im, "i"), (self.r2, "r2"), (self.ir2, "i*r2")] {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if unit.is_empty() {
                write!(f, "{}", rational_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{}*{unit}", rational_string(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Serialized as a 4-tuple of rational strings over {1, i, sqrt2, i*sqrt2}.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coord_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = <[String; 4]>::deserialize(d)?;
        let mut c = [Rational::zero(); 4];
        for (slot, p) in c.iter_mut().zip(parts.iter()) {
            *slot = parse_rational(p).ok_or_else(|| serde::de::Error::custom(format!("bad rational `{p}`")))?;
        }
        Ok(Scalar::new(c[0], c[1], c[2], c[3]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-6i64..=6, 1i64..=4, -6i64..=6, -6i64..=6, -6i64..=6).prop_map(|(a, d, b, c, e)| {
            let r = |n: i64| Rational::new(n as i128, d as i128);
            Scalar::new(r(a), r(b), r(c), r(e))
        })
    }

    #[test]
    fn units_square_correctly() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::int(-1));
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::int(2));
        let isq = Scalar::i() * Scalar::sqrt2();
        assert_eq!(isq * isq, Scalar::int(-2));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = Scalar::new(
            Rational::from_integer(1),
            Rational::from_integer(2),
            Rational::from_integer(-1),
            Rational::new(1, 3),
        );
        assert_eq!(x * x.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(Scalar::frac(-1, 2).to_string(), "-1/2");
        assert_eq!((Scalar::int(1) - Scalar::i() * Scalar::int(3)).to_string(), "1 - 3*i");
        assert_eq!(parse_rational("-3/6"), Some(Rational::new(-1, 2)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn serde_roundtrip() {
        let x = Scalar::frac(3, 4) + Scalar::i() * Scalar::sqrt2();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["3/4","0","0","1"]"#);
        let y: Scalar = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a * b, b * a);
            if !a.is_zero() {
                prop_assert_eq!(a * a.inv().unwrap(), Scalar::one());
            }
            prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        }
    }
}
