//! Degrees, reality and the classification of irreducible characters, their
//! central characters, and Frobenius-Schur indicators.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::classes::class_square;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::multipartition::{orbit_universe, MultiPartition};
use crate::partitions::Partition;
use crate::scalar::Scalar;
use crate::symfunc::table::{char_table, CharTable, DEFAULT_TABLE_BOUND};
use crate::tori::{OrbitLabel, Side, TorusContext};
use crate::Rational;

/// Largest degree for which [`fs_bruteforce`] builds a table unless told
/// otherwise.
pub const DEFAULT_FS_MAX_N: u32 = 2;

fn check_character_label(ctx: &TorusContext, lambda: &MultiPartition) -> Result<()> {
    if lambda.side() != Side::Character {
        return Err(Error::InvalidArgument(format!(
            "{lambda} is not a character label"
        )));
    }
    for o in lambda.support() {
        ctx.validate(o)?;
    }
    Ok(())
}

fn torus_factor(q: &BigInt, h: u64) -> BigInt {
    let qh = num_traits::pow(q.clone(), h as usize);
    if h.is_multiple_of(2) {
        qh - 1
    } else {
        qh + 1
    }
}

/// `chi^lambda(1) = q^{n(lambda')} prod_{i <= n} (q^i - (-1)^i) / prod_box (q^{h} - (-1)^{h})`
/// over weighted hook lengths `h`.
pub fn degree(ctx: &TorusContext, lambda: &MultiPartition) -> Result<BigInt> {
    check_character_label(ctx, lambda)?;
    let q = BigInt::from(ctx.q());
    let n = lambda.size() as u64;
    let mut num = num_traits::pow(q.clone(), lambda.conjugate().n_stat() as usize);
    for i in 1..=n {
        num *= torus_factor(&q, i);
    }
    let mut den = BigInt::from(1);
    for h in lambda.weighted_hooks() {
        den *= torus_factor(&q, h);
    }
    if !(&num % &den).is_zero() {
        return Err(Error::Internal(format!(
            "degree of {lambda} is not an integer: {num}/{den}"
        )));
    }
    let d = num / den;
    if !d.is_positive() {
        return Err(Error::Internal(format!("degree of {lambda} is {d}")));
    }
    Ok(d)
}

/// Real-valued: `bar(lambda) = lambda`.
pub fn is_real(ctx: &TorusContext, lambda: &MultiPartition) -> bool {
    lambda.is_self_conjugate(ctx)
}

/// Every partition is a single column.
pub fn is_semisimple(lambda: &MultiPartition) -> bool {
    lambda.iter().all(|(_, p)| p.is_column())
}

/// Every partition is a single row.
pub fn is_regular(lambda: &MultiPartition) -> bool {
    lambda.iter().all(|(_, p)| p.len() <= 1)
}

/// Supported on the trivial character orbit only.
pub fn is_unipotent(ctx: &TorusContext, lambda: &MultiPartition) -> bool {
    lambda.support().all(|o| *o == ctx.trivial_character())
}

/// The central character `omega_lambda = prod_phi prod_{xi in phi} xi^{|lambda^phi|}`
/// as an exponent of a character of `T_1`.
///
/// Each orbit product is formed at the orbit's own level, where it is
/// Frobenius-fixed, and then rewritten at level one.
pub fn omega_central(ctx: &TorusContext, lambda: &MultiPartition) -> Result<u64> {
    check_character_label(ctx, lambda)?;
    let m1 = ctx.modulus(1)?;
    let mut total = 0u64;
    for (phi, part) in lambda.iter() {
        total = (total + orbit_product_at_level_one(ctx, phi, part.size() as u64)?) % m1;
    }
    Ok(total)
}

fn orbit_product_at_level_one(ctx: &TorusContext, phi: &OrbitLabel, power: u64) -> Result<u64> {
    let d = phi.level();
    let m = ctx.modulus(d)?;
    let sum = ctx.members(phi).iter().fold(0u64, |acc, &c| (acc + c) % m);
    let raised = crate::numtheory::mul_mod(sum, power % m, m);
    ctx.to_level_one(d, raised).map_err(|e| {
        Error::Internal(format!(
            "orbit product of {phi} does not descend to T_1: {e}"
        ))
    })
}

/// `chi^lambda(alpha I) = omega_lambda(alpha) chi^lambda(1)` for
/// `alpha = g_1^e`, in `Q(zeta_{M_1})`.
pub fn central_value<S: Scalar>(
    ctx: &TorusContext,
    lambda: &MultiPartition,
    e: u64,
) -> Result<Cyclotomic<S>> {
    ctx.central_element(e)?;
    let w = omega_central(ctx, lambda)?;
    let m1 = ctx.modulus(1)?;
    let deg = degree(ctx, lambda)?;
    Ok(
        Cyclotomic::zeta_pow(m1, crate::numtheory::mul_mod(w, e, m1) as i64)
            .scale(&S::from_bigint(&deg)),
    )
}

/// Both evaluations of `omega_lambda(beta)` for a generator `beta` of `T_1`:
/// the generic one and `(-1)^{|lambda^sigma|}`.
fn omega_at_generator_routes(ctx: &TorusContext, lambda: &MultiPartition) -> Result<(i8, i8)> {
    let sigma = ctx
        .sigma()
        .ok_or_else(|| Error::Unsupported("the character sigma exists only for odd q".into()))?;
    let w = omega_central(ctx, lambda)?;
    let m1 = ctx.modulus(1)?;
    let generic = if w == 0 {
        1
    } else if 2 * w == m1 {
        -1
    } else {
        return Err(Error::Internal(format!(
            "central character of the real label {lambda} has exponent {w} mod {m1}"
        )));
    };
    let shortcut = if lambda.part(&sigma).size().is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok((generic, shortcut))
}

/// Frobenius-Schur indicator of a real semisimple or regular character.
pub fn fs_semisimple_regular(ctx: &TorusContext, lambda: &MultiPartition) -> Result<i8> {
    check_character_label(ctx, lambda)?;
    if !is_real(ctx, lambda) {
        return Err(Error::InvalidArgument(format!(
            "{lambda} is not real-valued"
        )));
    }
    if !is_semisimple(lambda) && !is_regular(lambda) {
        return Err(Error::InvalidArgument(format!(
            "{lambda} is neither semisimple nor regular"
        )));
    }
    if lambda.size() % 2 == 1 || !ctx.q_is_odd() {
        return Ok(1);
    }
    let (generic, shortcut) = omega_at_generator_routes(ctx, lambda)?;
    if generic != shortcut {
        return Err(Error::Internal(format!(
            "central character routes disagree on {lambda}: {generic} vs {shortcut}"
        )));
    }
    Ok(generic)
}

/// Indicator of the unipotent character labelled by `lambda`:
/// `(-1)^{floor(|core_2(lambda)| / 2)}`.
pub fn fs_unipotent(lambda: &Partition) -> i8 {
    if (lambda.two_core().size() / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `|G|^{-1} sum_mu |K^mu| chi(mu^2)` for every row of a table (q odd).
pub fn fs_from_table<S: Scalar>(
    ctx: &TorusContext,
    table: &CharTable<S>,
) -> Result<Vec<(MultiPartition, i8)>> {
    if !ctx.q_is_odd() {
        return Err(Error::Unsupported("class squaring needs odd q".into()));
    }
    let order = crate::classes::group_order(table.q(), table.degree());
    let squares: Vec<usize> = table
        .columns()
        .iter()
        .map(|c| {
            let sq = class_square(ctx, &c.label)?;
            table
                .column_index(&sq)
                .ok_or_else(|| Error::Internal(format!("square class {sq} is missing")))
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(table.rows().len());
    for (i, lambda) in table.rows().iter().enumerate() {
        let mut acc = Cyclotomic::<S>::zero(table.field_modulus());
        for (k, col) in table.columns().iter().enumerate() {
            acc = &acc + &table.at(i, squares[k]).scale(&S::from_bigint(&col.size));
        }
        let eps = acc.scale(&(S::one() / S::from_bigint(&order)));
        let value = [-1i8, 0, 1]
            .into_iter()
            .find(|&v| eps == Cyclotomic::from_int(table.field_modulus(), v as i64))
            .ok_or_else(|| Error::Internal(format!("indicator of {lambda} is {eps}")))?;
        out.push((lambda.clone(), value));
    }
    Ok(out)
}

/// Indicators of all characters in degree `n` by direct summation over
/// classes; refused above `max_n`.
pub fn fs_bruteforce(ctx: &TorusContext, n: u32, max_n: u32) -> Result<Vec<(MultiPartition, i8)>> {
    if !ctx.q_is_odd() {
        return Err(Error::Unsupported(
            "the brute-force indicator needs odd q".into(),
        ));
    }
    if n > max_n {
        return Err(Error::Unsupported(format!(
            "brute-force indicators are limited to n <= {max_n}"
        )));
    }
    let table = char_table::<Rational>(ctx, n, DEFAULT_TABLE_BOUND)?;
    fs_from_table(ctx, &table)
}

/// Result of the semisimple census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub q: u64,
    pub n: u32,
    pub symplectic: u64,
    pub orthogonal: u64,
    pub real_total: u64,
    pub route_agreement: bool,
}

/// Building blocks of real semisimple labels: a self-conjugate orbit or a
/// pair of conjugate orbits, with the degree one copy contributes.
#[derive(Clone, Debug)]
struct Unit {
    orbits: Vec<OrbitLabel>,
    weight: u32,
}

fn real_units(ctx: &TorusContext, n: u32) -> Result<Vec<Unit>> {
    let mut units = Vec::new();
    for phi in orbit_universe(ctx, Side::Character, n)? {
        let bar = ctx.conjugate_orbit(&phi);
        if bar == phi {
            units.push(Unit {
                orbits: vec![phi],
                weight: phi.size(),
            });
        } else if phi < bar && 2 * phi.size() <= n {
            units.push(Unit {
                orbits: vec![phi, bar],
                weight: 2 * phi.size(),
            });
        }
    }
    Ok(units)
}

/// All real semisimple labels of size `n`.
pub fn real_semisimple_labels(ctx: &TorusContext, n: u32) -> Result<Vec<MultiPartition>> {
    let units: Vec<Unit> = real_units(ctx, n)?
        .into_iter()
        .filter(|u| u.weight <= n)
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(usize, u32)> = Vec::new();
    fn rec(
        start: usize,
        rest: u32,
        units: &[Unit],
        chosen: &mut Vec<(usize, u32)>,
        out: &mut Vec<MultiPartition>,
    ) -> Result<()> {
        if rest == 0 {
            let entries = chosen.iter().flat_map(|&(i, m)| {
                units[i]
                    .orbits
                    .iter()
                    .map(move |o| (*o, Partition::column(m)))
            });
            out.push(MultiPartition::from_entries(Side::Character, entries)?);
            return Ok(());
        }
        for i in start..units.len() {
            let w = units[i].weight;
            for m in 1..=rest / w {
                chosen.push((i, m));
                rec(i + 1, rest - m * w, units, chosen, out)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    rec(0, n, &units, &mut chosen, &mut out)?;
    out.sort();
    Ok(out)
}

/// Counts real semisimple characters of `U(n, F_{q^2})` by indicator.
pub fn census_semisimple(ctx: &TorusContext, n: u32) -> Result<Census> {
    let labels = real_semisimple_labels(ctx, n)?;
    let real_total = labels.len() as u64;
    if !ctx.q_is_odd() || n % 2 == 1 {
        return Ok(Census {
            q: ctx.q(),
            n,
            symplectic: 0,
            orthogonal: real_total,
            real_total,
            route_agreement: true,
        });
    }
    let mut symplectic = 0;
    let mut agree = true;
    for lambda in &labels {
        let (generic, shortcut) = omega_at_generator_routes(ctx, lambda)?;
        agree &= generic == shortcut;
        if generic == -1 {
            symplectic += 1;
        }
    }
    Ok(Census {
        q: ctx.q(),
        n,
        symplectic,
        orthogonal: real_total - symplectic,
        real_total,
        route_agreement: agree,
    })
}

/// Everything the crate knows about one character label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharInfo {
    pub label: MultiPartition,
    #[serde(serialize_with = "crate::serde_util::bigint_as_number")]
    pub degree: BigInt,
    pub real: bool,
    pub semisimple: bool,
    pub regular: bool,
    pub unipotent: bool,
    /// Exponent of the central character as a character of `T_1`.
    pub omega: u64,
}

impl CharInfo {
    pub fn new(ctx: &TorusContext, label: MultiPartition) -> Result<Self> {
        Ok(CharInfo {
            degree: degree(ctx, &label)?,
            real: is_real(ctx, &label),
            semisimple: is_semisimple(&label),
            regular: is_regular(&label),
            unipotent: is_unipotent(ctx, &label),
            omega: omega_central(ctx, &label)?,
            label,
        })
    }
}
