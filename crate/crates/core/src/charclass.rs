//! Stiefel-Whitney obstruction checks over `F_2`, with cohomology truncated
//! at degree 2.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vector over `F_2`, serialized as an array of 0/1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vec(pub Vec<bool>);

impl F2Vec {
    pub fn zero(n: usize) -> Self {
        F2Vec(vec![false; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = F2Vec::zero(n);
        v.0[i] = true;
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        F2Vec(bits.iter().map(|b| b % 2 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b)
    }

    pub fn add(&self, o: &F2Vec) -> F2Vec {
        assert_eq!(self.len(), o.len(), "F2 vectors of different length");
        F2Vec(self.0.iter().zip(&o.0).map(|(a, b)| a ^ b).collect())
    }

    /// Pads with zeros to length `n`.
    pub fn padded(&self, n: usize) -> F2Vec {
        let mut v = self.0.clone();
        v.resize(n, false);
        F2Vec(v)
    }

    pub fn bits(&self) -> Vec<u8> {
        self.0.iter().map(|b| *b as u8).collect()
    }
}

impl Serialize for F2Vec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.bits().serialize(s)
    }
}

impl<'de> Deserialize<'de> for F2Vec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let bits = Vec::<u8>::deserialize(d)?;
        if bits.iter().any(|b| *b > 1) {
            return Err(serde::de::Error::custom("F2 coordinates must be 0 or 1"));
        }
        Ok(F2Vec::from_bits(&bits))
    }
}

/// Whether `v` lies in the span of `gens`.
pub fn in_span(gens: &[F2Vec], v: &F2Vec) -> bool {
    let mut rows: Vec<F2Vec> = Vec::new();
    for g in gens {
        let mut r = g.clone();
        for p in &rows {
            let lead = p.0.iter().position(|b| *b).expect("stored rows are nonzero");
            if r.0[lead] {
                r = r.add(p);
            }
        }
        if !r.is_zero() {
            rows.push(r);
        }
    }
    let mut r = v.clone();
    for p in &rows {
        let lead = p.0.iter().position(|b| *b).expect("stored rows are nonzero");
        if r.0[lead] {
            r = r.add(p);
        }
    }
    r.is_zero()
}

/// Class of degree 1 or 2 in a [`CohoRing`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohoClass {
    pub degree: u8,
    pub coords: F2Vec,
}

/// `H^1` and `H^2` with the squaring and cup product maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohoRing {
    pub h1: Vec<String>,
    pub h2: Vec<String>,
    /// `sq[i]` is the square of the `i`-th degree 1 basis class.
    pub sq: Vec<F2Vec>,
    /// `cup[i][j]`; may be omitted when `H^1` has rank at most 1.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cup: Option<Vec<Vec<F2Vec>>>,
}

impl CohoRing {
    #[allow(clippy::needless_range_loop)]
    pub fn validate(&self) -> std::result::Result<(), String> {
        let (n1, n2) = (self.h1.len(), self.h2.len());
        if self.sq.len() != n1 {
            return Err(format!("sq has {} rows for {n1} degree 1 classes", self.sq.len()));
        }
        if self.sq.iter().any(|v| v.len() != n2) {
            return Err("sq entries must have one coordinate per degree 2 class".into());
        }
        match &self.cup {
            None if n1 > 1 => return Err("cup table required when H^1 has rank > 1".into()),
            None => {}
            Some(c) => {
                if c.len() != n1 || c.iter().any(|r| r.len() != n1 || r.iter().any(|v| v.len() != n2)) {
                    return Err("cup table has the wrong shape".into());
                }
                for i in 0..n1 {
                    if c[i][i] != self.sq[i] {
                        return Err(format!("cup({0},{0}) differs from sq({0})", self.h1[i]));
                    }
                    for j in 0..n1 {
                        if c[i][j] != c[j][i] {
                            return Err(format!("cup is not symmetric at ({}, {})", self.h1[i], self.h1[j]));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero1(&self) -> F2Vec {
        F2Vec::zero(self.h1.len())
    }

    pub fn zero2(&self) -> F2Vec {
        F2Vec::zero(self.h2.len())
    }

    /// `x^2`; cross terms cancel over `F_2`.
    pub fn square(&self, x: &F2Vec) -> F2Vec {
        x.0.iter().zip(&self.sq).filter(|(b, _)| **b).fold(self.zero2(), |acc, (_, s)| acc.add(s))
    }

    pub fn cup_product(&self, x: &F2Vec, y: &F2Vec) -> F2Vec {
        let n1 = self.h1.len();
        let mut out = self.zero2();
        for i in 0..n1 {
            for j in 0..n1 {
                if x.0[i] && y.0[j] {
                    let c = match &self.cup {
                        Some(c) => c[i][j].clone(),
                        None => self.sq[i].clone(),
                    };
                    out = out.add(&c);
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleData {
    pub name: String,
    pub rank: usize,
    pub w1: F2Vec,
    pub w2: F2Vec,
    #[serde(default)]
    pub oriented: bool,
}

/// Assumptions recorded per catalog entry; each one asserts that `w_2` is
/// the reduction of an integral class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complex: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub sasakian: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub complex_times_parallelizable: bool,
}

impl Flags {
    pub fn any(&self) -> bool {
        self.complex || self.sasakian || self.complex_times_parallelizable
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentClasses {
    pub w1: F2Vec,
    pub w2: F2Vec,
}

/// One catalog record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifoldData {
    pub name: String,
    pub dim: usize,
    #[serde(flatten)]
    pub ring: CohoRing,
    pub tangent: TangentClasses,
    /// Generators of the image of `H^2(M; Z) -> H^2(M; Z_2)`.
    pub liftable2: Vec<F2Vec>,
    #[serde(default)]
    pub bundles: Vec<BundleData>,
    #[serde(default, skip_serializing_if = "is_default_flags")]
    pub flags: Flags,
}

fn is_default_flags(f: &Flags) -> bool {
    !f.any()
}

impl ManifoldData {
    pub fn tangent_bundle(&self) -> BundleData {
        BundleData {
            name: "T".into(),
            rank: self.dim,
            w1: self.tangent.w1.clone(),
            w2: self.tangent.w2.clone(),
            oriented: self.tangent.w1.is_zero(),
        }
    }

    pub fn is_liftable(&self, c: &F2Vec) -> bool {
        in_span(&self.liftable2, c)
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Catalog { record: self.name.clone(), reason: reason.into() }
    }

    /// Shape checks plus the constraint that every square of a degree 1
    /// class is liftable.
    pub fn validate(&self) -> Result<()> {
        self.ring.validate().map_err(|r| self.err(r))?;
        let (n1, n2) = (self.ring.h1.len(), self.ring.h2.len());
        if self.dim == 0 {
            return Err(self.err("dimension must be positive"));
        }
        if self.tangent.w1.len() != n1 || self.tangent.w2.len() != n2 {
            return Err(self.err("tangent classes do not match the cohomology bases"));
        }
        if self.liftable2.iter().any(|v| v.len() != n2) {
            return Err(self.err("liftable2 generators do not match H^2"));
        }
        for b in &self.bundles {
            if b.w1.len() != n1 || b.w2.len() != n2 {
                return Err(self.err(format!("bundle `{}` classes do not match the bases", b.name)));
            }
            if b.rank == 0 {
                return Err(self.err(format!("bundle `{}` has rank 0", b.name)));
            }
            if b.oriented && !b.w1.is_zero() {
                return Err(self.err(format!("bundle `{}` is oriented but w1 != 0", b.name)));
            }
        }
        for (i, s) in self.ring.sq.iter().enumerate() {
            if !self.is_liftable(s) {
                return Err(self.err(format!("square of `{}` is not in liftable2", self.ring.h1[i])));
            }
        }
        if self.flags.any() && !self.is_liftable(&self.tangent.w2) {
            return Err(self.err("flagged entry must have liftable w2"));
        }
        if self.flags.complex && (!self.tangent.w1.is_zero() || self.dim % 2 == 1) {
            return Err(self.err("complex manifolds are orientable and even-dimensional"));
        }
        Ok(())
    }

    pub fn is_orientable(&self) -> bool {
        self.tangent.w1.is_zero()
    }

    pub fn check_spin(&self) -> bool {
        self.tangent.w1.is_zero() && self.tangent.w2.is_zero()
    }

    pub fn check_pin_plus(&self) -> bool {
        self.tangent.w2.is_zero()
    }

    pub fn check_pin_minus(&self) -> bool {
        self.ring.square(&self.tangent.w1).add(&self.tangent.w2).is_zero()
    }

    pub fn check_spin_c(&self) -> bool {
        self.tangent.w1.is_zero() && self.is_liftable(&self.tangent.w2)
    }

    pub fn check_pin_c(&self) -> bool {
        self.is_liftable(&self.tangent.w2)
    }

    /// Existence of an lpin structure and, in odd dimension, the first rank
    /// 2 bundle `E` (declared bundles, then the trivial one) with
    /// `w2(TM) + w2(E)` liftable.
    pub fn check_lpin(&self) -> (bool, Option<String>) {
        if self.dim.is_multiple_of(2) {
            return (self.check_pin_c(), None);
        }
        let trivial = BundleData {
            name: "trivial".into(),
            rank: 2,
            w1: self.ring.zero1(),
            w2: self.ring.zero2(),
            oriented: true,
        };
        self.bundles
            .iter()
            .chain(std::iter::once(&trivial))
            .filter(|e| e.rank == 2)
            .find(|e| self.is_liftable(&self.tangent.w2.add(&e.w2)))
            .map_or((false, None), |e| (true, Some(e.name.clone())))
    }

    pub fn obstructions(&self) -> ObstructionRow {
        let (lpin, lpin_witness) = self.check_lpin();
        ObstructionRow {
            name: self.name.clone(),
            dim: self.dim,
            orientable: self.is_orientable(),
            spin: self.check_spin(),
            pin_plus: self.check_pin_plus(),
            pin_minus: self.check_pin_minus(),
            spin_c: self.check_spin_c(),
            pin_c: self.check_pin_c(),
            lpin,
            lpin_witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRow {
    pub name: String,
    pub dim: usize,
    pub orientable: bool,
    pub spin: bool,
    pub pin_plus: bool,
    pub pin_minus: bool,
    pub spin_c: bool,
    pub pin_c: bool,
    pub lpin: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lpin_witness: Option<String>,
}

impl ObstructionRow {
    /// spin implies pin+, pin- and spin^c; each of those implies pin^c.
    pub fn implications_hold(&self) -> bool {
        let imp = |a: bool, b: bool| !a || b;
        imp(self.spin, self.pin_plus && self.pin_minus && self.spin_c)
            && imp(self.spin_c, self.pin_c)
            && imp(self.pin_plus, self.pin_c)
            && imp(self.pin_minus, self.pin_c)
            && imp(self.pin_c, self.lpin)
    }
}

fn binom_mod2(n: usize, k: usize) -> bool {
    // Lucas: C(n, k) is odd iff the bits of k are a subset of those of n
    k <= n && (n & k) == k
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `RP^m` with `w = (1 + a)^(m+1)`. The liftable classes are `{0, a^2}`.
pub fn projective_space_data(m: usize) -> ManifoldData {
    assert!(m >= 1);
    let has_h2 = m >= 2;
    let n2 = usize::from(has_h2);
    let w2 = if has_h2 { F2Vec(vec![binom_mod2(m + 1, 2)]) } else { F2Vec::zero(0) };
    ManifoldData {
        name: format!("RP{m}"),
        dim: m,
        ring: CohoRing {
            h1: names(&["a"]),
            h2: if has_h2 { names(&["a^2"]) } else { Vec::new() },
            sq: vec![F2Vec(vec![true; n2])],
            cup: None,
        },
        tangent: TangentClasses { w1: F2Vec(vec![binom_mod2(m + 1, 1)]), w2 },
        liftable2: if has_h2 { vec![F2Vec::unit(1, 0)] } else { Vec::new() },
        bundles: Vec::new(),
        flags: Flags::default(),
    }
}

pub fn sphere_data(m: usize) -> ManifoldData {
    assert!(m >= 1);
    let (h1, sq) = if m == 1 { (names(&["t"]), vec![F2Vec::zero(0)]) } else { (Vec::new(), Vec::new()) };
    let (h2, lift) = if m == 2 { (names(&["u"]), vec![F2Vec::unit(1, 0)]) } else { (Vec::new(), Vec::new()) };
    let (n1, n2) = (h1.len(), h2.len());
    ManifoldData {
        name: format!("S{m}"),
        dim: m,
        ring: CohoRing { h1, h2, sq, cup: None },
        tangent: TangentClasses { w1: F2Vec::zero(n1), w2: F2Vec::zero(n2) },
        liftable2: lift,
        bundles: Vec::new(),
        flags: Flags::default(),
    }
}

/// The Grassmannian `G_{5,2}` with its tautological plane bundle.
pub fn grassmann_g52_data() -> ManifoldData {
    let b = |v: &[u8]| F2Vec::from_bits(v);
    ManifoldData {
        name: "G52".into(),
        dim: 6,
        ring: CohoRing { h1: names(&["w1(g)"]), h2: names(&["w1(g)^2", "w2(g)"]), sq: vec![b(&[1, 0])], cup: None },
        tangent: TangentClasses { w1: b(&[1]), w2: b(&[1, 1]) },
        liftable2: vec![b(&[1, 0])],
        bundles: vec![BundleData { name: "gamma".into(), rank: 2, w1: b(&[1]), w2: b(&[0, 1]), oriented: false }],
        flags: Flags::default(),
    }
}

pub fn complex_projective_plane_data() -> ManifoldData {
    let b = |v: &[u8]| F2Vec::from_bits(v);
    ManifoldData {
        name: "CP2".into(),
        dim: 4,
        ring: CohoRing { h1: Vec::new(), h2: names(&["x"]), sq: Vec::new(), cup: None },
        tangent: TangentClasses { w1: b(&[]), w2: b(&[1]) },
        liftable2: vec![b(&[1])],
        bundles: Vec::new(),
        flags: Flags { complex: true, ..Flags::default() },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parallelizable {
    Line,
    Circle,
}

/// `M x R` or `M x S^1`: classes and bundles pulled back, dimension + 1.
/// For the circle the Kunneth classes `x t` are added to `H^2`.
pub fn product_with_parallelizable(m: &ManifoldData, p: Parallelizable) -> ManifoldData {
    let mut out = m.clone();
    out.dim += 1;
    match p {
        Parallelizable::Line => {
            out.name = format!("{}xR", m.name);
        }
        Parallelizable::Circle => {
            out.name = format!("{}xS1", m.name);
            let (n1, n2) = (m.ring.h1.len(), m.ring.h2.len());
            let new2 = n2 + n1;
            let mut h1 = m.ring.h1.clone();
            h1.push("t".into());
            let mut h2 = m.ring.h2.clone();
            h2.extend(m.ring.h1.iter().map(|x| format!("{x}*t")));
            let mut cup = vec![vec![F2Vec::zero(new2); n1 + 1]; n1 + 1];
            for i in 0..n1 {
                for j in 0..n1 {
                    let c = match &m.ring.cup {
                        Some(c) => c[i][j].clone(),
                        None => m.ring.sq[i].clone(),
                    };
                    cup[i][j] = c.padded(new2);
                }
                cup[i][n1] = F2Vec::unit(new2, n2 + i);
                cup[n1][i] = F2Vec::unit(new2, n2 + i);
            }
            let sq: Vec<F2Vec> = (0..=n1).map(|i| cup[i][i].clone()).collect();
            out.ring = CohoRing { h1, h2, sq, cup: Some(cup) };
            let lift = |v: &F2Vec| v.padded(n1 + 1);
            let lift2 = |v: &F2Vec| v.padded(new2);
            out.tangent = TangentClasses { w1: lift(&m.tangent.w1), w2: lift2(&m.tangent.w2) };
            out.liftable2 = m.liftable2.iter().map(lift2).collect();
            out.bundles =
                m.bundles.iter().map(|b| BundleData { w1: lift(&b.w1), w2: lift2(&b.w2), ..b.clone() }).collect();
        }
    }
    if out.flags.complex {
        out.flags = Flags { complex_times_parallelizable: true, ..Flags::default() };
    }
    out
}

/// Adds the normal bundle of an embedding in codimension 2 into euclidean
/// space: `w(E) = w(TM)^-1` up to degree 2.
pub fn with_codim2_normal(m: &ManifoldData, ambient: usize) -> ManifoldData {
    let mut out = m.clone();
    out.name = format!("{}<R{ambient}", m.name);
    let w1 = m.tangent.w1.clone();
    let w2 = m.ring.square(&w1).add(&m.tangent.w2);
    out.bundles.insert(0, BundleData { name: "normal".into(), rank: 2, oriented: w1.is_zero(), w1, w2 });
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub schema: u32,
    pub manifolds: Vec<ManifoldData>,
}

impl Catalog {
    pub fn builtin() -> Catalog {
        let mut v = vec![sphere_data(1), sphere_data(2), sphere_data(3), sphere_data(4)];
        v.extend((1..=16).map(projective_space_data));
        let g = grassmann_g52_data();
        v.push(product_with_parallelizable(&g, Parallelizable::Circle));
        v.push(product_with_parallelizable(&g, Parallelizable::Line));
        v.push(g);
        let rp2 = projective_space_data(2);
        let rp2s1 = product_with_parallelizable(&rp2, Parallelizable::Circle);
        v.push(rp2s1.clone());
        v.push(product_with_parallelizable(&sphere_data(2), Parallelizable::Circle));
        v.push(complex_projective_plane_data());
        v.push(with_codim2_normal(&rp2s1, 5));
        v.push(with_codim2_normal(&projective_space_data(3), 5));
        Catalog { schema: crate::report::SCHEMA_VERSION, manifolds: v }
    }

    pub fn from_json(s: &str) -> Result<Catalog> {
        let c: Catalog = serde_json::from_str(s)
            .map_err(|e| Error::Catalog { record: "<document>".into(), reason: e.to_string() })?;
        if c.schema != crate::report::SCHEMA_VERSION {
            return Err(Error::Catalog {
                record: "<document>".into(),
                reason: format!("unsupported schema {}", c.schema),
            });
        }
        for m in &c.manifolds {
            m.validate()?;
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn find(&self, name: &str) -> Option<&ManifoldData> {
        self.manifolds.iter().find(|m| m.name == name)
    }
}
