//! A self-check suite over one field, run by the `verify` command.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::characters::{
    census_semisimple, central_value, degree, fs_from_table, fs_semisimple_regular, fs_unipotent,
    is_real, is_regular, is_semisimple, is_unipotent, real_semisimple_labels,
};
use crate::classes::{central_class, classes, group_order};
use crate::error::{Error, Result};
use crate::multipartition::enumerate_multipartitions;
use crate::partitions::for_each_partition;
use crate::selfdual::{count_by_constant, enumerate_self_dual, ConstantTerm, OrbitPolynomials};
use crate::symfunc::table::{char_table, table_size_estimate};
use crate::tori::{Side, TorusContext};
use crate::{Cyclotomic, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "[{tag}] {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

fn record(out: &mut Vec<Check>, name: String, r: Result<String>) {
    let (status, detail) = match r {
        Ok(d) => (Status::Pass, d),
        Err(Error::Unsupported(why)) => (Status::Skip, why),
        Err(e) => (Status::Fail, e.to_string()),
    };
    out.push(Check {
        name,
        status,
        detail,
    });
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg()))
    }
}

/// Runs every invariant for `U(n, F_{q^2})`, `n <= max_n`. Tables are
/// built only when their size estimate is within `table_bound`.
pub fn run_suite(q: u64, max_n: u32, table_bound: u128) -> Result<Vec<Check>> {
    let ctx = TorusContext::new(q, max_n)?;
    let mut out = Vec::new();
    record(&mut out, "odd minus even hooks, n <= 20".into(), odd_even_hooks(20));
    for r in 1..=max_n {
        for m in (r..=max_n).filter(|m| m % r == 0) {
            record(
                &mut out,
                format!("pairing identity r={r} m={m}"),
                pairing_identity(&ctx, r, m),
            );
        }
    }
    for n in 1..=max_n {
        record(&mut out, format!("class sizes n={n}"), class_sums(&ctx, n));
        record(&mut out, format!("degrees n={n}"), degrees(&ctx, n));
        record(
            &mut out,
            format!("table n={n}"),
            table_checks(&ctx, n, table_bound),
        );
        record(&mut out, format!("census n={n}"), census_checks(&ctx, n));
        record(
            &mut out,
            format!("self-dual bijection n={n}"),
            bijection(&ctx, n),
        );
    }
    Ok(out)
}

fn odd_even_hooks(max: u32) -> Result<String> {
    let mut count = 0u64;
    let mut bad = None;
    for n in 0..=max {
        for_each_partition(n, |p| {
            count += 1;
            let (o, e) = p.ohl_ehl();
            if bad.is_none() && o as i64 - e as i64 != p.two_core().size() as i64 {
                bad = Some(p.clone());
            }
        });
    }
    match bad {
        Some(p) => Err(Error::Internal(format!("fails for {p}"))),
        None => Ok(format!("{count} partitions")),
    }
}

fn pairing_identity(ctx: &TorusContext, r: u32, m: u32) -> Result<String> {
    let mr = ctx.modulus(r)?;
    for c in 0..mr {
        for e in 0..mr {
            let a = ctx.include_element(r, m, e)?;
            let at_m = ctx.pairing::<Rational>(r, c, m, a)?;
            let via_norm = ctx.pairing::<Rational>(r, c, r, ctx.norm(m, r, a)?)?;
            let power = ctx.pairing::<Rational>(r, c, r, e)?.pow((m / r) as u64);
            ensure(
                at_m == via_norm.embed(at_m.modulus())? && at_m == power.embed(at_m.modulus())?,
                || format!("character {c} at element {e}"),
            )?;
        }
    }
    Ok(format!("{} pairs", mr * mr))
}

fn class_sums(ctx: &TorusContext, n: u32) -> Result<String> {
    let cls = classes(ctx, n)?;
    let total: BigInt = cls.iter().map(|c| c.size.clone()).sum();
    ensure(total == group_order(ctx.q(), n), || {
        format!("class sizes sum to {total}")
    })?;
    Ok(format!("{} classes", cls.len()))
}

fn degrees(ctx: &TorusContext, n: u32) -> Result<String> {
    let mut sum = BigInt::zero();
    let labels = enumerate_multipartitions(ctx, n, Side::Character)?;
    for l in &labels {
        let d = degree(ctx, l)?;
        sum += &d * &d;
    }
    ensure(sum == group_order(ctx.q(), n), || {
        format!("sum of squared degrees is {sum}")
    })?;
    Ok(format!("{} characters", labels.len()))
}

fn table_checks(ctx: &TorusContext, n: u32, bound: u128) -> Result<String> {
    let estimate = table_size_estimate(ctx, n)?;
    if estimate > bound {
        return Err(Error::Unsupported(format!(
            "table estimate {estimate} exceeds {bound}"
        )));
    }
    let t = char_table::<Rational>(ctx, n, bound)?;
    t.check_orthogonality()?;
    let id = t.identity_column();
    let field = t.field_modulus();
    for (i, lambda) in t.rows().iter().enumerate() {
        let d = degree(ctx, lambda)?;
        ensure(
            *t.at(i, id) == Cyclotomic::from_scalar(field, Rational::from_integer(d)),
            || format!("identity column at {lambda}"),
        )?;
        for e in 0..ctx.modulus(1)? {
            let col = t
                .column_index(&central_class(ctx, e, n)?)
                .ok_or_else(|| Error::Internal("central class missing".into()))?;
            let expect: Cyclotomic = central_value(ctx, lambda, e)?;
            ensure(*t.at(i, col) == expect.embed(field)?, || {
                format!("central value of {lambda} at {e}")
            })?;
        }
    }
    if ctx.q_is_odd() {
        for (lambda, eps) in fs_from_table(ctx, &t)? {
            ensure((eps != 0) == is_real(ctx, &lambda), || {
                format!("indicator {eps} on {lambda}")
            })?;
            if eps != 0 && (is_semisimple(&lambda) || is_regular(&lambda)) {
                ensure(fs_semisimple_regular(ctx, &lambda)? == eps, || {
                    format!("central route on {lambda}")
                })?;
            }
            if is_unipotent(ctx, &lambda) {
                let p = lambda
                    .iter()
                    .next()
                    .map(|(_, p)| p.clone())
                    .unwrap_or_default();
                ensure(fs_unipotent(&p) == eps, || {
                    format!("unipotent route on {lambda}")
                })?;
            }
        }
    }
    Ok(format!("{} rows over Q(zeta_{field})", t.rows().len()))
}

fn census_checks(ctx: &TorusContext, n: u32) -> Result<String> {
    if !ctx.q_is_odd() {
        return Err(Error::Unsupported(
            "census compares with self-dual polynomials, odd q only".into(),
        ));
    }
    let k = census_semisimple(ctx, n)?;
    ensure(k.route_agreement, || {
        "central character routes disagree".into()
    })?;
    let field = crate::finite_field::GaloisField::new(ctx.q())?;
    let minus = count_by_constant(&field, n, ConstantTerm::MinusOne)?;
    let all = count_by_constant(&field, n, ConstantTerm::Any)?;
    ensure(k.real_total == all, || {
        format!("{} real semisimple vs {all} polynomials", k.real_total)
    })?;
    if n.is_multiple_of(2) {
        let m = n / 2;
        let q = ctx.q();
        ensure(k.symplectic == minus, || {
            format!("{} symplectic vs {minus} polynomials", k.symplectic)
        })?;
        ensure(
            k.symplectic == q.pow(m - 1) && k.orthogonal == q.pow(m),
            || format!("symplectic {} orthogonal {}", k.symplectic, k.orthogonal),
        )?;
    }
    Ok(format!(
        "symplectic {} orthogonal {}",
        k.symplectic, k.orthogonal
    ))
}

fn bijection(ctx: &TorusContext, n: u32) -> Result<String> {
    if !ctx.q_is_odd() {
        return Err(Error::Unsupported(
            "self-dual polynomials need odd q".into(),
        ));
    }
    let model = OrbitPolynomials::new(ctx)?;
    let labels = real_semisimple_labels(ctx, n)?;
    let images = labels
        .iter()
        .map(|l| model.char_to_polynomial(l))
        .collect::<Result<BTreeSet<_>>>()?;
    let all: BTreeSet<_> = enumerate_self_dual(model.field(), n, ConstantTerm::Any)?
        .into_iter()
        .collect();
    ensure(images.len() == labels.len() && images == all, || {
        format!(
            "{} labels, {} images, {} polynomials",
            labels.len(),
            images.len(),
            all.len()
        )
    })?;
    Ok(format!("{} labels", labels.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::table::DEFAULT_TABLE_BOUND;

    #[test]
    fn suite_passes_small() {
        for q in [2u64, 3] {
            let checks = run_suite(q, 2, DEFAULT_TABLE_BOUND).unwrap();
            for c in &checks {
                assert_ne!(c.status, Status::Fail, "{c}");
            }
            assert!(checks.iter().any(|c| c.status == Status::Pass));
        }
    }

    #[test]
    fn suite_skips_oversized_tables() {
        let checks = run_suite(3, 2, 10).unwrap();
        let t = checks.iter().find(|c| c.name == "table n=2").unwrap();
        assert_eq!(t.status, Status::Skip);
    }
}
