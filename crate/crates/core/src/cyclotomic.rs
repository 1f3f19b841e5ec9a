//! Exact arithmetic in the cyclotomic fields `Q(zeta_M)`.
//!
//! An element is stored as its residue modulo the `M`-th cyclotomic
//! polynomial in the power basis `1, z, z^2, ..., z^(phi(M)-1)`, where `z`
//! stands for `zeta_M = exp(2 pi i / M)`. Reduction is eager, so two
//! elements are equal exactly when their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::intpoly::cyclotomic_polynomial;
use crate::numtheory::{rem_euclid, totient};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<S> {
    modulus: u64,
    coeffs: Vec<S>,
}

/// Result of [`Cyclotomic::classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification<S> {
    Rational(S),
    RealIrrational,
    NonReal,
}

impl<S: Scalar> Cyclotomic<S> {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "cyclotomic modulus must be positive");
        Cyclotomic {
            modulus,
            coeffs: vec![S::zero(); totient(modulus) as usize],
        }
    }

    pub fn from_scalar(modulus: u64, value: S) -> Self {
        let mut out = Self::zero(modulus);
        out.coeffs[0] = value;
        out
    }

    pub fn from_int(modulus: u64, value: i64) -> Self {
        Self::from_scalar(modulus, S::from_int(value))
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_scalar(modulus, S::one())
    }

    /// `zeta_M^k`, with `k` reduced modulo `M`.
    pub fn zeta_pow(modulus: u64, k: i64) -> Self {
        Self::from_exponent_terms(modulus, [(k, S::one())])
    }

    /// `sum c * zeta_M^k` over the given `(k, c)` pairs, reduced to canonical form.
    pub fn from_exponent_terms<I>(modulus: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, S)>,
    {
        assert!(modulus >= 1, "cyclotomic modulus must be positive");
        let mut dense = vec![S::zero(); modulus as usize];
        for (k, c) in terms {
            let slot = &mut dense[rem_euclid(k as i128, modulus) as usize];
            *slot = slot.clone() + c;
        }
        Self::reduce(modulus, dense)
    }

    /// Canonical form of an arbitrary polynomial in `zeta_M`.
    pub fn from_power_coeffs(modulus: u64, coeffs: Vec<S>) -> Self {
        let m = modulus as usize;
        if coeffs.len() <= m {
            return Self::reduce(modulus, coeffs);
        }
        let mut dense = vec![S::zero(); m];
        for (i, c) in coeffs.into_iter().enumerate() {
            dense[i % m] = dense[i % m].clone() + c;
        }
        Self::reduce(modulus, dense)
    }

    fn reduce(modulus: u64, mut v: Vec<S>) -> Self {
        let phi = cyclotomic_polynomial(modulus);
        let deg = phi.len() - 1;
        for i in (deg..v.len()).rev() {
            let c = std::mem::replace(&mut v[i], S::zero());
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in phi[..deg].iter().enumerate() {
                if pj != 0 {
                    let slot = &mut v[i - deg + j];
                    *slot = slot.clone() - c.clone() * S::from_int(pj);
                }
            }
        }
        v.resize(deg, S::zero());
        Cyclotomic { modulus, coeffs: v }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Coefficients in the power basis `1, z, ..., z^(phi(M)-1)`.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Complex value under `z = exp(2 pi i / M)`, as `(re, im)`.
    pub fn approx(&self) -> (f64, f64) {
        let step = std::f64::consts::TAU / self.modulus as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, c)| {
                let (s, co) = (step * k as f64).sin_cos();
                let c = c.to_f64();
                (re + c * co, im + c * s)
            })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Cyclotomic {
            modulus: self.modulus,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut prod = vec![S::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(Self::reduce(self.modulus, prod))
    }

    pub fn scale(&self, s: &S) -> Self {
        Cyclotomic {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation, the field automorphism `zeta -> zeta^(M-1)`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The automorphism `zeta -> zeta^k` (`k` coprime to `M`).
    pub fn galois(&self, k: i64) -> Self {
        Self::from_exponent_terms(
            self.modulus,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 * k, c.clone())),
        )
    }

    /// Embed into `Q(zeta_L)` via `zeta_M = zeta_L^(L/M)`.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if !target.is_multiple_of(self.modulus) {
            return Err(Error::InvalidArgument(format!(
                "cannot embed Q(zeta_{}) into Q(zeta_{target})",
                self.modulus
            )));
        }
        if target == self.modulus {
            return Ok(self.clone());
        }
        let step = (target / self.modulus) as i64;
        Ok(Self::from_exponent_terms(
            target,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 * step, c.clone())),
        ))
    }

    /// Exact classification as rational, real irrational, or non-real.
    pub fn classify(&self) -> Classification<S> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Classification::Rational(self.coeffs[0].clone())
        } else if *self == self.conj() {
            Classification::RealIrrational
        } else {
            Classification::NonReal
        }
    }

    /// The value when it is rational.
    pub fn as_rational(&self) -> Option<S> {
        match self.classify() {
            Classification::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self.classify(), Classification::NonReal)
    }

    /// `"Q(zeta_M): body"`.
    pub fn canonical_text(&self) -> String {
        format!("Q(zeta_{}): {}", self.modulus, self)
    }
}

fn scalar_is_negative<S: Scalar>(c: &S) -> bool {
    c.to_string().starts_with('-')
}

impl<S: Scalar> fmt::Display for Cyclotomic<S> {
    /// Writes `c0 + c1*z + c2*z^2 ...`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = scalar_is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            if i == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for Cyclotomic<BigRational> {
    type Err = Error;

    /// Parses the canonical text form `"Q(zeta_M): c0 + c1*z + ..."`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        let rest = s
            .trim()
            .strip_prefix("Q(zeta_")
            .ok_or_else(|| bad("missing header"))?;
        let (m, body) = rest.split_once("):").ok_or_else(|| bad("missing header"))?;
        let modulus: u64 = m.parse().map_err(|_| bad("bad modulus"))?;
        if modulus == 0 {
            return Err(bad("zero modulus"));
        }
        // normalise " - " into " + -" so every term carries its own sign
        let body = body.trim().replace(" - ", " + -");
        let mut terms = Vec::new();
        for term in body.split(" + ") {
            let term = term.trim();
            let (neg, term) = match term.strip_prefix('-') {
                Some(t) => (true, t),
                None => (false, term),
            };
            let (coef, exp) = if let Some((c, z)) = term.split_once('*') {
                (
                    c.to_string(),
                    parse_mono(z).ok_or_else(|| bad("bad monomial"))?,
                )
            } else if let Some(e) = parse_mono(term) {
                ("1".to_string(), e)
            } else {
                (term.to_string(), 0)
            };
            let mut c: BigRational = coef.parse().map_err(|_| bad("bad coefficient"))?;
            if neg {
                c = -c;
            }
            terms.push((exp, c));
        }
        let phi = totient(modulus) as i64;
        if terms.iter().any(|(e, _)| *e >= phi) {
            return Err(bad("exponent outside the power basis"));
        }
        Ok(Self::from_exponent_terms(modulus, terms))
    }
}

fn parse_mono(s: &str) -> Option<i64> {
    match s {
        "z" => Some(1),
        _ => s.strip_prefix("z^")?.parse().ok(),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl<'a, S: Scalar> $trait<&'a Cyclotomic<S>> for &'a Cyclotomic<S> {
            type Output = Cyclotomic<S>;

            /// Panics on a modulus mismatch; use the `try_` form to handle it.
            fn $method(self, rhs: &'a Cyclotomic<S>) -> Cyclotomic<S> {
                self.$inner(rhs)
                    .expect("cyclotomic operands must share a modulus")
            }
        }

        impl<S: Scalar> $trait for Cyclotomic<S> {
            type Output = Cyclotomic<S>;

            fn $method(self, rhs: Cyclotomic<S>) -> Cyclotomic<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<S: Scalar> Neg for Cyclotomic<S> {
    type Output = Cyclotomic<S>;

    fn neg(self) -> Cyclotomic<S> {
        Cyclotomic {
            modulus: self.modulus,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<S: Scalar> Neg for &Cyclotomic<S> {
    type Output = Cyclotomic<S>;

    fn neg(self) -> Cyclotomic<S> {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_matches_roots_of_unity() {
        let z = crate::Cyclotomic::zeta_pow(8, 3);
        let (re, im) = z.approx();
        let t = 3.0 * std::f64::consts::TAU / 8.0;
        assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
        let (re, im) = crate::Cyclotomic::zeta_pow(9, 7).approx();
        let t = 7.0 * std::f64::consts::TAU / 9.0;
        assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
    }
    use num_rational::Ratio;
    use proptest::prelude::*;

    type Q = BigRational;
    type C = Cyclotomic<Q>;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn zeta_powers_reduce() {
        assert_eq!(C::zeta_pow(8, 4), C::from_int(8, -1));
        assert_eq!(C::zeta_pow(8, 8), C::one(8));
        let z4 = C::zeta_pow(4, 1);
        assert_eq!(z4.coeffs(), &[q(0, 1), q(1, 1)]);
        assert_eq!(C::zeta_pow(8, -1), C::zeta_pow(8, 7));
    }

    #[test]
    fn spec_arith_examples() {
        let z = C::zeta_pow(8, 1);
        assert!((&z * &C::zeta_pow(8, 7)).is_one());
        let z2 = C::zeta_pow(8, 2);
        let one = C::one(8);
        assert_eq!(&(&one + &z2) * &(&one - &z2), C::from_int(8, 2));
        assert_eq!(z.conj(), C::zeta_pow(8, 7));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = C::one(8);
        let b = C::one(4);
        assert_eq!(
            a.try_mul(&b),
            Err(Error::ModulusMismatch { left: 8, right: 4 })
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            C::from_scalar(8, q(3, 2)).classify(),
            Classification::Rational(q(3, 2))
        );
        let s = &C::zeta_pow(8, 1) + &C::zeta_pow(8, 7);
        assert_eq!(s.classify(), Classification::RealIrrational);
        assert_eq!(C::zeta_pow(8, 2).classify(), Classification::NonReal);
        // zeta_3 + zeta_3^2 = -1
        let t = &C::zeta_pow(3, 1) + &C::zeta_pow(3, 2);
        assert_eq!(t.classify(), Classification::Rational(q(-1, 1)));
    }

    #[test]
    fn embedding_is_a_ring_map() {
        let a = &C::zeta_pow(4, 1) + &C::from_int(4, 3);
        let b = &C::zeta_pow(4, 3) - &C::from_int(4, 2);
        let ab = (&a * &b).embed(24).unwrap();
        assert_eq!(ab, &a.embed(24).unwrap() * &b.embed(24).unwrap());
        assert_eq!(C::zeta_pow(4, 1).embed(8).unwrap(), C::zeta_pow(8, 2));
        assert!(C::one(4).embed(6).is_err());
    }

    #[test]
    fn text_form_and_parse() {
        let a = C::from_exponent_terms(8, [(0, q(1, 2)), (2, q(-1, 1)), (3, q(2, 3))]);
        assert_eq!(a.to_string(), "1/2 - z^2 + 2/3*z^3");
        assert_eq!(a.canonical_text(), "Q(zeta_8): 1/2 - z^2 + 2/3*z^3");
        assert_eq!(a.canonical_text().parse::<C>().unwrap(), a);
        assert_eq!(C::zero(5).to_string(), "0");
        assert_eq!("Q(zeta_5): 0".parse::<C>().unwrap(), C::zero(5));
        assert_eq!("Q(zeta_4): -z".parse::<C>().unwrap(), -C::zeta_pow(4, 1));
        assert!("Q(zeta_4): z^2".parse::<C>().is_err());
    }

    #[test]
    fn generic_over_small_ratios() {
        type C64 = Cyclotomic<Ratio<i64>>;
        let z = C64::zeta_pow(12, 1);
        assert!(z.pow(12).is_one());
        assert!(!z.pow(6).is_one());
        assert_eq!(z.pow(6), C64::from_int(12, -1));
    }

    #[test]
    fn zeta_orders() {
        for m in 1..=30u64 {
            for k in 0..m as i64 {
                let z = C::zeta_pow(m, k);
                let ord = m / crate::numtheory::gcd(m, k as u64);
                assert!(z.pow(ord).is_one());
                for d in crate::numtheory::divisors(ord) {
                    if d < ord {
                        assert!(!z.pow(d).is_one(), "zeta_{m}^{k} has order {ord}");
                    }
                }
            }
        }
    }

    fn arb_cyc(m: u64) -> impl Strategy<Value = C> {
        proptest::collection::vec((-5i64..=5, 1i64..=4), totient(m) as usize).prop_map(move |v| {
            C::from_exponent_terms(
                m,
                v.into_iter()
                    .enumerate()
                    .map(|(i, (n, d))| (i as i64, q(n, d))),
            )
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in arb_cyc(12), b in arb_cyc(12), c in arb_cyc(12)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn conjugation_is_an_involutive_ring_map(a in arb_cyc(15), b in arb_cyc(15)) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn text_round_trip(a in arb_cyc(20)) {
            prop_assert_eq!(a.canonical_text().parse::<C>().unwrap(), a);
        }
    }
}
