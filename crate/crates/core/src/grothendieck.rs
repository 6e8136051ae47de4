//! Sparse integer polynomials, stable Grothendieck and Schur polynomials, and
//! basis expansion by triangular peeling.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::CoefficientQuery;
use crate::shapes::{partitions_of, Partition, SkewShape};
use crate::tableaux::SvtEnumerator;

/// Exponent vector of fixed length `n`.
pub type Exponent = Vec<u32>;

/// A polynomial in `x_1, …, x_n` with arbitrary-precision coefficients.
///
/// `cap = Some(D)` means every term of degree `> D` has been dropped; `None`
/// means the polynomial is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    cap: Option<usize>,
    terms: BTreeMap<Exponent, BigInt>,
}

/// One entry of the JSON form of a [`Polynomial`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Exponent,
    pub coef: String,
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

fn min_cap(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Polynomial {
    pub fn zero(n: usize, cap: Option<usize>) -> Self {
        Polynomial { n, cap, terms: BTreeMap::new() }
    }

    pub fn one(n: usize, cap: Option<usize>) -> Self {
        let mut p = Self::zero(n, cap);
        p.add_term(vec![0; n], BigInt::one());
        p
    }

    /// `c · x^e`.
    pub fn monomial(e: Exponent, c: BigInt) -> Self {
        let mut p = Self::zero(e.len(), None);
        p.add_term(e, c);
        p
    }

    /// Sums the given terms; fails on exponent vectors of the wrong length.
    pub fn from_terms(n: usize, cap: Option<usize>, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Result<Self> {
        let mut p = Self::zero(n, cap);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch(n, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Parses the JSON term list.
    pub fn from_json_terms(n: usize, cap: Option<usize>, terms: &[Term]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|t| {
                t.coef
                    .parse::<BigInt>()
                    .map(|c| (t.exp.clone(), c))
                    .map_err(|_| Error::Domain(format!("bad coefficient {:?}", t.coef)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, cap, parsed)
    }

    pub fn to_json_terms(&self) -> Vec<Term> {
        self.terms.iter().map(|(e, c)| Term { exp: e.clone(), coef: c.to_string() }).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() || self.cap.is_some_and(|d| degree(&e) > d) {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &Polynomial, k: &BigInt) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * k);
        }
        Ok(())
    }

    /// Drops every term of degree `> d` and records the cap.
    pub fn truncate(&self, d: usize) -> Polynomial {
        let cap = min_cap(self.cap, Some(d));
        let terms = self.terms.iter().filter(|(e, _)| degree(e) <= d).map(|(e, c)| (e.clone(), c.clone())).collect();
        Polynomial { n: self.n, cap, terms }
    }

    /// The degree-`d` homogeneous component.
    pub fn component(&self, d: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(e, _)| degree(e) == d).map(|(e, c)| (e.clone(), c.clone())).collect();
        Polynomial { n: self.n, cap: None, terms }
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| degree(e)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// The smallest monomial in degree-major order, if any.
    pub fn lowest_monomial(&self) -> Option<&Exponent> {
        self.terms.keys().min_by_key(|e| (degree(e), (*e).clone()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exponent> = self.terms.keys().collect();
        keys.sort_by(|a, b| degree(a).cmp(&degree(b)).then(b.cmp(a)));
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = e.iter().all(|&x| x == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{}", i + 1, x)?,
                }
            }
        }
        Ok(())
    }
}

/// Exact product truncated at `cap` (and at the caps of the factors).
pub fn multiply(a: &Polynomial, b: &Polynomial, cap: usize) -> Result<Polynomial> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch(a.n, b.n));
    }
    let cap = min_cap(min_cap(a.cap, b.cap), Some(cap)).expect("cap is set");
    let mut out = Polynomial::zero(a.n, Some(cap));
    for (ea, ca) in &a.terms {
        let da = degree(ea);
        if da > cap {
            continue;
        }
        for (eb, cb) in &b.terms {
            if da + degree(eb) > cap {
                continue;
            }
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            out.add_term(e, ca * cb);
        }
    }
    Ok(out)
}

/// Invariance under every adjacent transposition `x_k ↔ x_{k+1}`.
pub fn is_symmetric(p: &Polynomial) -> bool {
    (0..p.n.saturating_sub(1)).all(|k| {
        p.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.swap(k, k + 1);
            p.terms.get(&s) == Some(c)
        })
    })
}

fn tableau_sum(shape: &SkewShape, n: usize, cap: Option<usize>, singletons: bool) -> Polynomial {
    let size = shape.size();
    let bound = cap.unwrap_or(n * size);
    let mut p = Polynomial::zero(n, cap);
    if size > bound {
        return p;
    }
    let it = SvtEnumerator::new(shape.clone(), n as u32).singletons(singletons).max_total(bound);
    for t in it.iter() {
        let w = t.weight();
        let e: Exponent = (1..=n).map(|i| w.get(i) as u32).collect();
        let c = if (t.total_entries() - size).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        p.add_term(e, c);
    }
    p
}

/// `G_{λ/μ}(x_1, …, x_n) = Σ (−1)^{|T|−|λ/μ|} x^{wt T}` over set-valued
/// tableaux with entries `≤ n`. With `cap = None` the result is exact.
pub fn grothendieck_poly(shape: &SkewShape, n: usize, cap: Option<usize>) -> Polynomial {
    tableau_sum(shape, n, cap, false)
}

/// `s_{λ/μ}(x_1, …, x_n)`.
pub fn schur_poly(shape: &SkewShape, n: usize) -> Polynomial {
    tableau_sum(shape, n, None, true)
}

/// Which family the coefficients of a [`BasisExpansion`] refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    G,
    S,
}

/// How coefficients are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConvention {
    /// The literal coefficient of each basis element.
    Raw,
    /// `p = Σ (−1)^{|ν|−base} C^ν G_ν`; `C^ν` is reported.
    Alternating { base: usize },
}

/// `p` written in the G- or s-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub convention: SignConvention,
    /// Literal coefficients; zeros are not stored.
    pub signed: BTreeMap<Partition, BigInt>,
}

/// One entry of the JSON form of a [`BasisExpansion`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionEntry {
    pub nu: Partition,
    #[serde(rename = "C", with = "int_or_string")]
    pub c: BigInt,
    pub sign: i8,
}

impl BasisExpansion {
    pub fn with_convention(mut self, convention: SignConvention) -> Self {
        self.convention = convention;
        self
    }

    fn sign_of(&self, nu: &Partition) -> i8 {
        match self.convention {
            SignConvention::Raw => 1,
            SignConvention::Alternating { base } => {
                if nu.size().abs_diff(base) % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// The reported coefficient of `ν` (zero if absent).
    pub fn coefficient(&self, nu: &Partition) -> BigInt {
        let raw = self.signed.get(nu).cloned().unwrap_or_default();
        raw * BigInt::from(self.sign_of(nu))
    }

    /// Partitions whose reported coefficient is negative.
    pub fn sign_violations(&self) -> Vec<Partition> {
        self.signed.keys().filter(|nu| self.coefficient(nu).is_negative()).cloned().collect()
    }

    pub fn entries(&self) -> Vec<ExpansionEntry> {
        self.signed
            .keys()
            .map(|nu| ExpansionEntry { nu: nu.clone(), c: self.coefficient(nu), sign: self.sign_of(nu) })
            .collect()
    }
}

impl Serialize for BasisExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

mod int_or_string {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match c.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&c.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Peels a symmetric polynomial into the G-basis, caching `G_ν`.
#[derive(Debug)]
pub struct GExpander {
    n: usize,
    cap: usize,
    cache: HashMap<Partition, Polynomial>,
}

impl GExpander {
    pub fn new(n: usize, cap: usize) -> Self {
        GExpander { n, cap, cache: HashMap::new() }
    }

    fn basis(&mut self, nu: &Partition) -> &Polynomial {
        let (n, cap) = (self.n, self.cap);
        self.cache
            .entry(nu.clone())
            .or_insert_with(|| grothendieck_poly(&SkewShape::straight(nu.clone()), n, Some(cap)))
    }

    pub fn expand(&mut self, p: &Polynomial) -> Result<BasisExpansion> {
        if p.n != self.n {
            return Err(Error::DimensionMismatch(self.n, p.n));
        }
        if !is_symmetric(&p.truncate(self.cap)) {
            return Err(Error::NotSymmetric);
        }
        let mut residual = p.truncate(self.cap);
        let mut signed = BTreeMap::new();
        for d in 0..=self.cap {
            for nu in partitions_of(d, self.n) {
                let c = residual.coeff(&nu.padded(self.n).iter().map(|&x| x as u32).collect::<Vec<_>>());
                if c.is_zero() {
                    continue;
                }
                let g = self.basis(&nu).clone();
                residual.add_scaled(&g, &-c.clone())?;
                signed.insert(nu, c);
            }
        }
        if let Some(e) = residual.lowest_monomial() {
            return Err(Error::ResidualNonzero { monomial: e.clone() });
        }
        Ok(BasisExpansion { basis: Basis::G, convention: SignConvention::Raw, signed })
    }
}

/// One-shot G-basis expansion up to total degree `cap`.
pub fn expand_in_g_basis(p: &Polynomial, cap: usize) -> Result<BasisExpansion> {
    GExpander::new(p.n, cap).expand(p)
}

/// s-basis expansion of a homogeneous symmetric polynomial.
pub fn expand_in_schur_basis(p: &Polynomial) -> Result<BasisExpansion> {
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    if !p.is_homogeneous() {
        return Err(Error::Domain("polynomial is not homogeneous".into()));
    }
    let mut residual = p.clone();
    let mut signed = BTreeMap::new();
    if let Some(d) = p.min_degree() {
        for nu in partitions_of(d, p.n) {
            let c = residual.coeff(&nu.padded(p.n).iter().map(|&x| x as u32).collect::<Vec<_>>());
            if c.is_zero() {
                continue;
            }
            residual.add_scaled(&schur_poly(&SkewShape::straight(nu.clone()), p.n), &-c.clone())?;
            signed.insert(nu, c);
        }
    }
    if let Some(e) = residual.lowest_monomial() {
        return Err(Error::ResidualNonzero { monomial: e.clone() });
    }
    Ok(BasisExpansion { basis: Basis::S, convention: SignConvention::Raw, signed })
}

/// `G_λ · G_μ` in the G-basis up to degree `cap`, reported with the
/// alternating convention so that coefficients are `C^ν_{λ,μ}`.
pub fn product_expansion(lambda: &Partition, mu: &Partition, n: usize, cap: usize) -> Result<BasisExpansion> {
    product_expansion_with(&mut GExpander::new(n, cap), lambda, mu)
}

/// As [`product_expansion`], reusing the expander's cache.
pub fn product_expansion_with(ex: &mut GExpander, lambda: &Partition, mu: &Partition) -> Result<BasisExpansion> {
    let (n, cap) = (ex.n, ex.cap);
    let gl = grothendieck_poly(&SkewShape::straight(lambda.clone()), n, Some(cap));
    let gm = grothendieck_poly(&SkewShape::straight(mu.clone()), n, Some(cap));
    let e = ex.expand(&multiply(&gl, &gm, cap)?)?;
    Ok(e.with_convention(SignConvention::Alternating { base: lambda.size() + mu.size() }))
}

/// `s_λ · s_μ` in the s-basis.
pub fn schur_product_expansion(lambda: &Partition, mu: &Partition, n: usize) -> Result<BasisExpansion> {
    let sl = schur_poly(&SkewShape::straight(lambda.clone()), n);
    let sm = schur_poly(&SkewShape::straight(mu.clone()), n);
    expand_in_schur_basis(&multiply(&sl, &sm, lambda.size() + mu.size())?)
}

/// `C^ν_{λ,μ}` read off the G-basis expansion of `G_λ · G_μ` in `q.n`
/// variables, truncated at `|ν|`.
pub fn coeff_oracle(q: &CoefficientQuery) -> Result<BigInt> {
    if q.nu.size() < q.lambda.size() + q.mu.size() {
        return Ok(BigInt::zero());
    }
    Ok(product_expansion(&q.lambda, &q.mu, q.n, q.nu.size())?.coefficient(&q.nu))
}
