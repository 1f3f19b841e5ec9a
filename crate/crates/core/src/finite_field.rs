//! Finite fields `GF(p^k)` and polynomials over them, at desk scale.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! coefficients of a polynomial in `y` reduced modulo the defining
//! polynomial. Multiplication goes through discrete log tables.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numtheory::{factorize, prime_power};

/// Largest field order for which log tables are built.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

#[derive(Clone)]
pub struct GaloisField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus over `F_p`, low to high; `[0, 1]` when `k = 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            let prime = prime_field(self.p).expect("prime field exists");
            let m = FqPoly::from_coeffs(&prime, self.modulus.clone());
            write!(
                f,
                "GF({})=GF({})[y]/({})",
                self.q,
                self.p,
                m.display_in('y')
            )
        }
    }
}

fn prime_field(p: u32) -> Result<Arc<GaloisField>> {
    GaloisField::with_modulus(p, vec![0, 1])
}

impl GaloisField {
    /// `GF(q)`, built on the lexicographically least monic irreducible of
    /// degree `k` over `F_p`.
    pub fn new(q: u64) -> Result<Arc<Self>> {
        let (p, k) = prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::Unsupported(format!(
                "fields larger than {MAX_FIELD_ORDER} elements"
            )));
        }
        let p = p as u32;
        if k == 1 {
            return prime_field(p);
        }
        let base = prime_field(p)?;
        let m = least_irreducible(&base, k)?;
        Self::with_modulus(p, m.coeffs)
    }

    fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Arc<Self>> {
        let k = (modulus.len() - 1) as u32;
        let q = p.pow(k);
        let mut f = GaloisField {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let order = (q - 1) as u64;
        let primes: Vec<u64> = factorize(order).into_iter().map(|(l, _)| l).collect();
        let g = (1..q)
            .find(|&a| primes.iter().all(|l| f.slow_pow(a, order / l) != 1))
            .ok_or_else(|| Error::Internal(format!("no primitive element in GF({q})")))?;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order as u32 {
            exp.push(x);
            log[x as usize] = i;
            x = f.slow_mul(x, g);
        }
        if x != 1 {
            return Err(Error::Internal(format!("{} does not define a field", f)));
        }
        f.exp = exp;
        f.log = log;
        Ok(Arc::new(f))
    }

    fn digits(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut a = a;
        for _ in 0..self.k {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn pack_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for i in (k..2 * k).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..k {
                    prod[i - k + j] = (prod[i - k + j] + (p - c) * self.modulus[j] as u64) % p;
                }
                prod[i] = 0;
            }
        }
        let d: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack_digits(&d)
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    /// The defining polynomial over `F_p`, low to high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The image of the integer `n`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Whether `a` lies in the prime field.
    pub fn is_prime_field_element(&self, a: u32) -> bool {
        a < self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let d: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack_digits(&d)
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.pack_digits(&d)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// Element text: an integer for prime-field elements, otherwise a
    /// polynomial in `y`.
    pub fn element_text(&self, a: u32) -> String {
        if self.is_prime_field_element(a) {
            return a.to_string();
        }
        let prime = prime_field(self.p).expect("prime field exists");
        FqPoly::from_coeffs(&prime, self.digits(a)).display_in('y')
    }
}

/// Polynomial over a [`GaloisField`], coefficients low to high with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct FqPoly {
    field: Arc<GaloisField>,
    coeffs: Vec<u32>,
}

impl FqPoly {
    pub fn from_coeffs(field: &Arc<GaloisField>, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPoly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients given as integers, reduced into the prime field.
    pub fn from_ints(field: &Arc<GaloisField>, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Arc<GaloisField>) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Arc<GaloisField>) -> Self {
        Self::from_coeffs(field, vec![1])
    }

    /// `x + a`.
    pub fn linear(field: &Arc<GaloisField>, a: u32) -> Self {
        Self::from_coeffs(field, vec![a, 1])
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::InvalidArgument(format!(
                "polynomials over {} and {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(f, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Self::from_coeffs(f, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Self::from_coeffs(f, c)
    }

    pub fn scale(&self, a: u32) -> Self {
        let f = &self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&c| f.mul(a, c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_field(d)?;
        let f = &self.field;
        let dd = d
            .degree()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let lead_inv = f.inv(d.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], lead_inv);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = f.sub(r[i - dd + j], f.mul(c, b));
            }
        }
        Ok((Self::from_coeffs(f, quot), Self::from_coeffs(f, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `h(0)^{-1} x^d h(1/x)` for monic `h` with `h(0) != 0`.
    pub fn dual(&self) -> Result<Self> {
        if !self.is_monic() || self.degree() == Some(0) {
            return Err(Error::InvalidArgument(format!(
                "{self} is not monic and non-constant"
            )));
        }
        let c0 = self
            .field
            .inv(self.constant_term())
            .ok_or_else(|| Error::InvalidArgument(format!("{self} has zero constant term")))?;
        let rev: Vec<u32> = self.coeffs.iter().rev().copied().collect();
        Ok(Self::from_coeffs(&self.field, rev).scale(c0))
    }

    /// Monic, non-constant, nonzero constant term, and equal to its dual.
    pub fn is_self_dual(&self) -> bool {
        self.is_monic()
            && self.degree().unwrap_or(0) > 0
            && self.constant_term() != 0
            && self.dual().ok().as_ref() == Some(self)
    }

    /// Irreducibility by trial division against monic polynomials of
    /// degree at most half the degree.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        for k in 1..=d / 2 {
            let mut found = false;
            for_each_monic(&self.field, k, |h| {
                if !found && h.divides(self).unwrap_or(false) {
                    found = true;
                }
            });
            if found {
                return false;
            }
        }
        true
    }

    /// Rendering with a chosen variable name.
    pub fn display_in(&self, var: char) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            let coeff = f.element_text(c);
            let coeff = if coeff.contains(' ') {
                format!("({coeff})")
            } else {
                coeff
            };
            terms.push(match (c == 1, i == 0) {
                (_, true) => coeff,
                (true, false) => mono,
                (false, false) => format!("{coeff}*{mono}"),
            });
        }
        terms.join(" + ")
    }

    /// Polynomial text followed by its field, e.g. `x^2 + 1 over GF(3)`.
    pub fn with_field(&self) -> String {
        format!("{} over {}", self, self.field)
    }

    /// Lexicographic key used for canonical order: degree, then
    /// coefficients from the top down.
    fn order_key(&self) -> (usize, Vec<u32>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().copied().collect(),
        )
    }
}

impl PartialOrd for FqPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in('x'))
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.with_field())
    }
}

/// Calls `f` on every monic polynomial of degree `d`, lexicographically by
/// coefficients from `x^{d-1}` down to the constant.
pub fn for_each_monic<F: FnMut(&FqPoly)>(field: &Arc<GaloisField>, d: usize, mut f: F) {
    let q = field.order() as u64;
    let total = q.pow(d as u32);
    let mut coeffs = vec![0u32; d + 1];
    coeffs[d] = 1;
    for idx in 0..total {
        let mut v = idx;
        for i in (0..d).rev() {
            coeffs[i] = (v % q) as u32;
            v /= q;
        }
        f(&FqPoly::from_coeffs(field, coeffs.clone()));
    }
}

/// The lexicographically least monic irreducible of degree `d`.
pub fn least_irreducible(field: &Arc<GaloisField>, d: u32) -> Result<FqPoly> {
    let q = field.order() as u64;
    let d = d as usize;
    let total = q
        .checked_pow(d as u32)
        .ok_or_else(|| Error::Overflow(format!("{q}^{d} monic polynomials")))?;
    let mut coeffs = vec![0u32; d + 1];
    coeffs[d] = 1;
    for idx in 0..total {
        let mut v = idx;
        for i in (0..d).rev() {
            coeffs[i] = (v % q) as u32;
            v /= q;
        }
        let h = FqPoly::from_coeffs(field, coeffs.clone());
        if h.is_irreducible() {
            return Ok(h);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible of degree {d} over {field}"
    )))
}

/// All monic irreducibles of degree `d` in canonical order.
pub fn monic_irreducibles(field: &Arc<GaloisField>, d: usize) -> Vec<FqPoly> {
    let mut out = Vec::new();
    for_each_monic(field, d, |h| {
        if h.is_irreducible() {
            out.push(h.clone());
        }
    });
    out
}

/// `F_q[z]/(M(z))` for a monic irreducible `M`, with elements as reduced
/// polynomials.
#[derive(Clone, Debug)]
pub struct Extension {
    modulus: FqPoly,
}

impl Extension {
    /// The degree `d` extension built on the least irreducible.
    pub fn new(field: &Arc<GaloisField>, d: u32) -> Result<Self> {
        Ok(Extension {
            modulus: least_irreducible(field, d)?,
        })
    }

    pub fn base(&self) -> &Arc<GaloisField> {
        self.modulus.field()
    }

    pub fn degree(&self) -> u32 {
        self.modulus.degree().unwrap_or(0) as u32
    }

    /// Number of elements.
    pub fn order(&self) -> Result<u64> {
        (self.base().order() as u64)
            .checked_pow(self.degree())
            .ok_or_else(|| Error::Overflow("extension order".into()))
    }

    pub fn mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        a.mul(b).rem(&self.modulus).expect("same field")
    }

    pub fn pow(&self, a: &FqPoly, mut e: u64) -> FqPoly {
        let mut base = a.clone();
        let mut acc = FqPoly::one(self.base());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The first element, in canonical order, generating the multiplicative
    /// group.
    pub fn primitive_element(&self) -> Result<FqPoly> {
        let n = self.order()? - 1;
        let primes: Vec<u64> = factorize(n).into_iter().map(|(l, _)| l).collect();
        let q = self.base().order() as u64;
        let one = FqPoly::one(self.base());
        for idx in 1..=n {
            let mut v = idx;
            let mut coeffs = Vec::with_capacity(self.degree() as usize);
            for _ in 0..self.degree() {
                coeffs.push((v % q) as u32);
                v /= q;
            }
            let a = FqPoly::from_coeffs(self.base(), coeffs);
            if primes.iter().all(|l| self.pow(&a, n / l) != one) {
                return Ok(a);
            }
        }
        Err(Error::Internal("no primitive element".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u64) -> Arc<GaloisField> {
        GaloisField::new(q).unwrap()
    }

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 5, 8, 9, 25, 27] {
            let f = gf(q);
            assert_eq!(f.order() as u64, q);
            for a in 0..f.order() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..f.order() {
                    assert_eq!(f.mul(a, b), f.slow_mul(a, b));
                }
            }
        }
        assert!(GaloisField::new(6).is_err());
    }

    #[test]
    fn field_text() {
        assert_eq!(gf(3).to_string(), "GF(3)");
        assert_eq!(gf(9).to_string(), "GF(9)=GF(3)[y]/(y^2 + 1)");
        assert_eq!(gf(4).to_string(), "GF(4)=GF(2)[y]/(y^2 + y + 1)");
        let f = gf(9);
        let h = FqPoly::from_coeffs(&f, vec![1, 2, 0, 0, 1]);
        assert_eq!(
            h.with_field(),
            "x^4 + 2*x + 1 over GF(9)=GF(3)[y]/(y^2 + 1)"
        );
        let y = FqPoly::from_coeffs(&f, vec![0, 3, 1]);
        assert_eq!(y.to_string(), "x^2 + y*x");
        let y1 = FqPoly::from_coeffs(&f, vec![0, 4, 1]);
        assert_eq!(y1.to_string(), "x^2 + (y + 1)*x");
    }

    #[test]
    fn dual_examples() {
        let f = gf(3);
        let h = FqPoly::from_ints(&f, &[-1, 0, 1]);
        assert_eq!(h.dual().unwrap(), h);
        let h = FqPoly::from_ints(&f, &[2, 1, 1]);
        assert_eq!(h.dual().unwrap(), FqPoly::from_ints(&f, &[2, 2, 1]));
        assert!(FqPoly::from_ints(&f, &[0, 1, 1]).dual().is_err());
        assert!(FqPoly::from_ints(&f, &[1, 2]).dual().is_err());
    }

    #[test]
    fn irreducible_counts() {
        // necklace counts (1/d) sum mu(d/e) q^e
        for (q, d, count) in [
            (2u64, 3usize, 2usize),
            (3, 2, 3),
            (3, 3, 8),
            (5, 2, 10),
            (4, 2, 6),
            (9, 2, 36),
        ] {
            assert_eq!(monic_irreducibles(&gf(q), d).len(), count, "q={q} d={d}");
        }
    }

    #[test]
    fn extension_has_primitive_elements() {
        let e = Extension::new(&gf(3), 4).unwrap();
        let g = e.primitive_element().unwrap();
        assert_eq!(e.pow(&g, 80), FqPoly::one(&gf(3)));
        assert_ne!(e.pow(&g, 40), FqPoly::one(&gf(3)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn dual_is_an_involution(q in prop::sample::select(vec![3u64, 5]), c in prop::collection::vec(0u32..5, 1..7), c0 in 1u32..5) {
            let f = gf(q);
            let mut coeffs: Vec<u32> = c.iter().map(|x| x % q as u32).collect();
            coeffs[0] = 1 + c0 % (q as u32 - 1);
            coeffs.push(1);
            let h = FqPoly::from_coeffs(&f, coeffs);
            prop_assert_eq!(h.dual().unwrap().dual().unwrap(), h);
        }

        #[test]
        fn division_identity(a in prop::collection::vec(0u32..9, 0..8), b in prop::collection::vec(0u32..9, 1..5)) {
            let f = gf(9);
            let a = FqPoly::from_coeffs(&f, a);
            let mut b = b;
            b.push(1 + b[0] % 8);
            let b = FqPoly::from_coeffs(&f, b);
            let (qt, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(qt.mul(&b).add(&r), a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
