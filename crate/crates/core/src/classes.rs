//! Conjugacy classes of `U(n, F_{q^2})`: centralizers, class sizes and the
//! squaring map.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, MultiPartition};
use crate::partitions::Partition;
use crate::scalar::Scalar;
use crate::tori::{Side, TorusContext};
use crate::Rational;

/// `a_mu(x) = x^{|mu| + 2 n(mu)} prod_i prod_{j <= m_i} (1 - x^{-j})`.
pub fn a_partition_poly<S: Scalar>(mu: &Partition, x: &S) -> Result<S> {
    if x.is_zero() {
        return Err(Error::InvalidArgument(
            "a_mu(x) is undefined at x = 0".into(),
        ));
    }
    let mut acc = x.powi(mu.size() as i64 + 2 * mu.n_stat() as i64);
    for (_, m) in mu.multiplicities() {
        for j in 1..=m as i64 {
            acc = acc * (S::one() - x.powi(-j));
        }
    }
    Ok(acc)
}

/// `|U(n, F_{q^2})| = q^{n(n-1)/2} prod_{i <= n} (q^i - (-1)^i)`.
pub fn group_order(q: u64, n: u32) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = num_traits::pow(q.clone(), (n as usize) * (n as usize).saturating_sub(1) / 2);
    for i in 1..=n as usize {
        let qi = num_traits::pow(q.clone(), i);
        acc *= if i % 2 == 0 { qi - 1 } else { qi + 1 };
    }
    acc
}

/// `a_mu = (-1)^{|mu|} prod_f a_{mu^f}((-q)^{|f|})`, the order of the
/// centralizer of an element of the class `mu`.
pub fn centralizer_order(ctx: &TorusContext, mu: &MultiPartition) -> Result<BigInt> {
    if mu.side() != Side::Element {
        return Err(Error::InvalidArgument(format!("{mu} is not a class label")));
    }
    let neg_q = -Rational::from_integer(BigInt::from(ctx.q()));
    let mut acc = Rational::one();
    for (f, lambda) in mu.iter() {
        acc *= a_partition_poly(lambda, &neg_q.powi(f.size() as i64))?;
    }
    if mu.size() % 2 == 1 {
        acc = -acc;
    }
    if !acc.is_integer() || !acc.is_positive() {
        return Err(Error::Internal(format!(
            "centralizer order of {mu} evaluated to {acc}"
        )));
    }
    Ok(acc.to_integer())
}

/// `|K^mu| = |U_n| / a_mu`.
pub fn class_size(ctx: &TorusContext, mu: &MultiPartition) -> Result<BigInt> {
    let order = group_order(ctx.q(), mu.size());
    let a = centralizer_order(ctx, mu)?;
    if !(&order % &a).is_zero() {
        return Err(Error::Internal(format!(
            "a_mu = {a} does not divide |G| = {order}"
        )));
    }
    Ok(order / a)
}

/// A class label with its centralizer order and size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassData {
    pub label: MultiPartition,
    #[serde(serialize_with = "crate::serde_util::bigint_as_number")]
    pub centralizer: BigInt,
    #[serde(serialize_with = "crate::serde_util::bigint_as_number")]
    pub size: BigInt,
}

impl ClassData {
    pub fn new(ctx: &TorusContext, label: MultiPartition) -> Result<Self> {
        let centralizer = centralizer_order(ctx, &label)?;
        let size = group_order(ctx.q(), label.size()) / &centralizer;
        Ok(ClassData {
            label,
            centralizer,
            size,
        })
    }
}

/// All classes of `U(n, F_{q^2})` in canonical order.
pub fn classes(ctx: &TorusContext, n: u32) -> Result<Vec<ClassData>> {
    enumerate_multipartitions(ctx, n, Side::Element)?
        .into_iter()
        .map(|mu| ClassData::new(ctx, mu))
        .collect()
}

/// The class of the scalar matrix `alpha I_n`, `alpha = g_1^e in T_1`.
pub fn central_class(ctx: &TorusContext, e: u64, n: u32) -> Result<MultiPartition> {
    let orbit = ctx.central_element(e)?;
    Ok(MultiPartition::single(orbit, Partition::column(n)))
}

/// The class containing `g^2` for `g` in the class `mu` (q odd).
///
/// Each eigenvalue orbit `[alpha]` goes to `[alpha^2]`; when several
/// eigenvalues square to the same value their Jordan blocks are pooled.
pub fn class_square(ctx: &TorusContext, mu: &MultiPartition) -> Result<MultiPartition> {
    if !ctx.q_is_odd() {
        return Err(Error::Unsupported("class squaring needs odd q".into()));
    }
    if mu.side() != Side::Element {
        return Err(Error::InvalidArgument(format!("{mu} is not a class label")));
    }
    let mut pooled: std::collections::BTreeMap<_, Vec<u32>> = Default::default();
    for (f, lambda) in mu.iter() {
        let d = f.level();
        let m = ctx.modulus(d)?;
        let image = ctx.frobenius_orbit(Side::Element, d, (2 * f.min_exponent()) % m)?;
        let copies = d / image.level();
        let entry = pooled.entry(image).or_default();
        for _ in 0..copies {
            entry.extend_from_slice(lambda.parts());
        }
    }
    MultiPartition::from_entries(
        Side::Element,
        pooled
            .into_iter()
            .map(|(o, parts)| (o, Partition::from_unsorted(parts))),
    )
}
