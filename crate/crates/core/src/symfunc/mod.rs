//! Symmetric functions in the alphabets `Y^phi` (character orbits) and
//! `X^f` (element orbits), and the characteristic map built on them.
//!
//! Internally coefficients are sparse sums of `L`-th roots of unity,
//! reduced to [`Cyclotomic`] canonical form only at the end.

pub mod deligne_lusztig;
pub mod hall_littlewood;
pub mod symmetric_group;
pub mod table;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::multipartition::MultiPartition;
use crate::numtheory::lcm;
use crate::partitions::Partition;
use crate::scalar::Scalar;
use crate::tori::{OrbitLabel, Side, TorusContext};

pub use hall_littlewood::{hl_monomial_expansion, power_to_hl};
pub use symmetric_group::{power_to_schur, schur_to_power};

/// Which basis a [`SymExpr`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Basis {
    /// Products `p_nu(Y) = prod_phi prod_i p_{nu^phi_i}(Y^phi)`.
    PowerY,
    /// `s_lambda(Y) = prod_phi s_{lambda^phi}(Y^phi)`.
    SchurY,
    /// Products `p_nu(X) = prod_f prod_i p_{nu^f_i}(X^f)`.
    PowerX,
    /// `P_mu = (-q)^{-n(mu)} prod_f P_{mu^f}(X^f; (-q)^{-|f|})`.
    HallLittlewoodX,
}

impl Basis {
    pub fn side(self) -> Side {
        match self {
            Basis::PowerY | Basis::SchurY => Side::Character,
            Basis::PowerX | Basis::HallLittlewoodX => Side::Element,
        }
    }
}

/// A homogeneous symmetric function of degree `degree` with coefficients
/// in `Q(zeta_modulus)`, indexed by multipartitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpr<S> {
    basis: Basis,
    degree: u32,
    modulus: u64,
    terms: BTreeMap<MultiPartition, Cyclotomic<S>>,
}

impl<S: Scalar> SymExpr<S> {
    pub fn zero(basis: Basis, degree: u32, modulus: u64) -> Self {
        SymExpr {
            basis,
            degree,
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn terms(&self) -> &BTreeMap<MultiPartition, Cyclotomic<S>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &MultiPartition) -> Cyclotomic<S> {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.modulus))
    }

    /// Adds `c` times the basis element `key`.
    pub fn add_term(&mut self, key: MultiPartition, c: Cyclotomic<S>) -> Result<()> {
        if key.side() != self.basis.side() {
            return Err(Error::InvalidArgument(format!(
                "{key} does not index the {:?} basis",
                self.basis
            )));
        }
        key.expect_size(self.degree)?;
        let c = c.embed(self.modulus).map_err(|_| Error::ModulusMismatch {
            left: self.modulus,
            right: c.modulus(),
        })?;
        let slot = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| Cyclotomic::zero(self.modulus));
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    /// Rewrites all coefficients in `Q(zeta_target)`.
    pub fn embed(&self, target: u64) -> Result<Self> {
        Ok(SymExpr {
            basis: self.basis,
            degree: self.degree,
            modulus: target,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| Ok((k.clone(), c.embed(target)?)))
                .collect::<Result<_>>()?,
        })
    }
}

/// `L = lcm{M_d : d <= n}`: every character value in degree `n` lies in
/// `Q(zeta_L)`.
pub fn common_field(ctx: &TorusContext, n: u32) -> Result<u64> {
    let mut l = 1;
    for d in 1..=n {
        l = lcm(l, ctx.modulus(d)?);
    }
    Ok(l)
}

/// `sum_k c_k zeta_L^k`, keyed by `k mod L`.
type RootSum<S> = BTreeMap<u64, S>;

fn root_sum_mul<S: Scalar>(a: &RootSum<S>, b: &RootSum<S>, l: u64) -> RootSum<S> {
    let mut out = RootSum::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = (ea + eb) % l;
            let slot = out.entry(e).or_insert_with(S::zero);
            *slot = slot.clone() + ca.clone() * cb.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn root_sum_add<S: Scalar>(into: &mut RootSum<S>, b: &RootSum<S>, scale: &S) {
    for (e, c) in b {
        let slot = into.entry(*e).or_insert_with(S::zero);
        *slot = slot.clone() + c.clone() * scale.clone();
    }
    into.retain(|_, c| !c.is_zero());
}

fn root_sum_scalar<S: Scalar>(c: S) -> RootSum<S> {
    if c.is_zero() {
        RootSum::new()
    } else {
        RootSum::from([(0, c)])
    }
}

fn root_sum_to_cyclotomic<S: Scalar>(r: &RootSum<S>, l: u64) -> Cyclotomic<S> {
    Cyclotomic::from_exponent_terms(l, r.iter().map(|(e, c)| (*e as i64, c.clone())))
}

/// Power-sum product key: unsorted parts per orbit.
type PowKey = BTreeMap<OrbitLabel, Vec<u32>>;
/// A sparse power-sum expression.
type PowExpr<S> = HashMap<PowKey, RootSum<S>>;

fn pow_key_to_mp(side: Side, key: &PowKey) -> MultiPartition {
    MultiPartition::from_entries(
        side,
        key.iter()
            .map(|(o, parts)| (*o, Partition::from_unsorted(parts.clone()))),
    )
    .expect("orbits are distinct and on one side")
}

fn pow_expr_mul<S: Scalar>(a: &PowExpr<S>, b: &PowExpr<S>, l: u64) -> PowExpr<S> {
    let mut out: PowExpr<S> = HashMap::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut key = ka.clone();
            for (o, parts) in kb {
                let e = key.entry(*o).or_default();
                e.extend_from_slice(parts);
                e.sort_unstable_by(|x, y| y.cmp(x));
            }
            let c = root_sum_mul(ca, cb, l);
            if c.is_empty() {
                continue;
            }
            let slot = out.entry(key).or_default();
            root_sum_add(slot, &c, &S::one());
        }
    }
    out.retain(|_, c| !c.is_empty());
    out
}

type TransformCache<S> = HashMap<(u32, OrbitLabel), Arc<PowExpr<S>>>;

/// The machinery shared by everything that evaluates the characteristic
/// map in degree `n`: the common field and a cache of transforms.
pub struct CharEngine<'a, S> {
    ctx: &'a TorusContext,
    n: u32,
    field: u64,
    transforms: Mutex<TransformCache<S>>,
}

impl<'a, S: Scalar> CharEngine<'a, S> {
    pub fn new(ctx: &'a TorusContext, n: u32) -> Result<Self> {
        if n == 0 || n > ctx.degree() {
            return Err(Error::InvalidArgument(format!(
                "degree {n} is outside 1..={}",
                ctx.degree()
            )));
        }
        Ok(CharEngine {
            ctx,
            n,
            field: common_field(ctx, n)?,
            transforms: Mutex::new(HashMap::new()),
        })
    }

    pub fn ctx(&self) -> &TorusContext {
        self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// The conductor `L` of the common field.
    pub fn field_modulus(&self) -> u64 {
        self.field
    }

    /// `p_k(Y^phi) = (-1)^{D-1} sum_{alpha in T_D} xi(alpha) p_{D/|f_alpha|}(X^{f_alpha})`
    /// with `D = k |phi|`, `xi` a member of `phi` inflated to level `D`.
    fn transform(&self, k: u32, phi: &OrbitLabel) -> Result<Arc<PowExpr<S>>> {
        if let Some(t) = self.transforms.lock().unwrap().get(&(k, *phi)) {
            return Ok(t.clone());
        }
        let ctx = self.ctx;
        let d = k * phi.size();
        let m_phi = ctx.modulus(phi.level())?;
        let scale = self.field / m_phi;
        let c = phi.min_exponent();
        let sign = if d % 2 == 1 { S::one() } else { -S::one() };
        let mut out: PowExpr<S> = HashMap::new();
        for s in crate::numtheory::divisors(d as u64) {
            let s = s as u32;
            for f in ctx.orbits_of_exact_size(Side::Element, s)? {
                let mut coeff = RootSum::new();
                for e in ctx.members(&f) {
                    let at_d = ctx.include_element(s, d, e)?;
                    let expo =
                        crate::numtheory::mul_mod(c, at_d % m_phi, m_phi) * scale % self.field;
                    let slot = coeff.entry(expo).or_insert_with(S::zero);
                    *slot = slot.clone() + sign.clone();
                }
                coeff.retain(|_, v: &mut S| !v.is_zero());
                if !coeff.is_empty() {
                    out.insert(PowKey::from([(f, vec![d / s])]), coeff);
                }
            }
        }
        let out = Arc::new(out);
        self.transforms
            .lock()
            .unwrap()
            .insert((k, *phi), out.clone());
        Ok(out)
    }

    /// `p_rho(Y^phi)` in the `X` power sums.
    fn power_y_single(&self, phi: &OrbitLabel, rho: &Partition) -> Result<PowExpr<S>> {
        let mut acc: PowExpr<S> = HashMap::from([(PowKey::new(), root_sum_scalar(S::one()))]);
        for &k in rho.parts() {
            acc = pow_expr_mul(&acc, &*self.transform(k, phi)?, self.field);
        }
        Ok(acc)
    }

    /// `s_lambda(Y)` in the `X` power sums.
    fn schur_y(&self, lambda: &MultiPartition) -> Result<PowExpr<S>> {
        let mut total: PowExpr<S> = HashMap::from([(PowKey::new(), root_sum_scalar(S::one()))]);
        for (phi, part) in lambda.iter() {
            let mut factor: PowExpr<S> = HashMap::new();
            for (rho, c) in schur_to_power::<S>(part) {
                for (key, coeff) in self.power_y_single(phi, &rho)? {
                    let slot = factor.entry(key).or_default();
                    root_sum_add(slot, &coeff, &c);
                }
            }
            factor.retain(|_, c| !c.is_empty());
            total = pow_expr_mul(&total, &factor, self.field);
        }
        Ok(total)
    }

    /// `p_nu(Y)` in the `X` power sums.
    fn power_y(&self, nu: &MultiPartition) -> Result<PowExpr<S>> {
        let mut total: PowExpr<S> = HashMap::from([(PowKey::new(), root_sum_scalar(S::one()))]);
        for (phi, part) in nu.iter() {
            total = pow_expr_mul(&total, &self.power_y_single(phi, part)?, self.field);
        }
        Ok(total)
    }

    /// Rewrites `X` power sums in the `P_mu` basis. With `only`, just that
    /// coefficient is accumulated.
    fn power_x_to_hl(
        &self,
        expr: &PowExpr<S>,
        only: Option<&MultiPartition>,
    ) -> Result<BTreeMap<MultiPartition, RootSum<S>>> {
        let neg_q = S::from_int(-(self.ctx.q() as i64));
        let mut out: BTreeMap<MultiPartition, RootSum<S>> = BTreeMap::new();
        for (key, coeff) in expr {
            // per orbit: the P-expansion of p_{nu^f}(X^f) at t_f
            let mut factors: Vec<(OrbitLabel, Vec<(Partition, S)>)> = Vec::new();
            for (f, parts) in key {
                let rho = Partition::from_unsorted(parts.clone());
                let t = neg_q.powi(-(f.size() as i64));
                let mut row: Vec<(Partition, S)> = power_to_hl(&rho, &t)?.into_iter().collect();
                if let Some(target) = only {
                    let want = target.part(f);
                    row.retain(|(mu, _)| *mu == want);
                }
                factors.push((*f, row));
            }
            if let Some(target) = only {
                if target.support().any(|o| !key.contains_key(o)) {
                    continue;
                }
            }
            let mut choice = vec![0usize; factors.len()];
            if factors.iter().any(|(_, r)| r.is_empty()) {
                continue;
            }
            loop {
                let mut scalar = S::one();
                let mut entries = Vec::with_capacity(factors.len());
                for (i, (f, row)) in factors.iter().enumerate() {
                    let (mu, c) = &row[choice[i]];
                    scalar = scalar * c.clone();
                    entries.push((*f, mu.clone()));
                }
                let mu = MultiPartition::from_entries(Side::Element, entries)?;
                scalar = scalar * neg_q.powi(mu.n_stat() as i64);
                let slot = out.entry(mu).or_default();
                root_sum_add(slot, coeff, &scalar);
                // next choice
                let mut i = 0;
                while i < choice.len() {
                    choice[i] += 1;
                    if choice[i] < factors[i].1.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
        out.retain(|_, c| !c.is_empty());
        Ok(out)
    }

    fn to_sym_expr(&self, basis: Basis, terms: BTreeMap<MultiPartition, RootSum<S>>) -> SymExpr<S> {
        let mut e = SymExpr::zero(basis, self.n, self.field);
        for (k, r) in terms {
            let c = root_sum_to_cyclotomic(&r, self.field);
            if !c.is_zero() {
                e.terms.insert(k, c);
            }
        }
        e
    }

    /// `p_k(Y^phi)` as a [`SymExpr`] in the `X` power sums.
    pub fn transform_y_to_x(&self, k: u32, phi: &OrbitLabel) -> Result<SymExpr<S>> {
        if phi.side() != Side::Character {
            return Err(Error::InvalidArgument(format!(
                "{phi} is not a character orbit"
            )));
        }
        let d = k * phi.size();
        if k == 0 || d > self.n {
            return Err(Error::InvalidArgument(format!(
                "p_{k} of {phi} exceeds degree {}",
                self.n
            )));
        }
        let t = self.transform(k, phi)?;
        let mut e = SymExpr::zero(Basis::PowerX, d, self.field);
        for (key, r) in t.iter() {
            e.add_term(
                pow_key_to_mp(Side::Element, key),
                root_sum_to_cyclotomic(r, self.field),
            )?;
        }
        Ok(e)
    }

    /// `s_lambda(Y)` expanded in the `P_mu` basis (no sign applied).
    pub fn schur_in_hl(&self, lambda: &MultiPartition) -> Result<SymExpr<S>> {
        self.check_label(lambda, Side::Character)?;
        let expr = self.schur_y(lambda)?;
        Ok(self.to_sym_expr(Basis::HallLittlewoodX, self.power_x_to_hl(&expr, None)?))
    }

    /// `p_nu(Y)` expanded in the `P_mu` basis.
    pub fn power_y_in_hl(&self, nu: &MultiPartition) -> Result<SymExpr<S>> {
        self.check_label(nu, Side::Character)?;
        let expr = self.power_y(nu)?;
        Ok(self.to_sym_expr(Basis::HallLittlewoodX, self.power_x_to_hl(&expr, None)?))
    }

    /// `(-1)^{floor(n/2) + n(lambda)}`, the sign turning `s_lambda` into the
    /// image of an irreducible character.
    pub fn irreducible_sign(&self, lambda: &MultiPartition) -> S {
        if ((self.n / 2) as u64 + lambda.n_stat()).is_multiple_of(2) {
            S::one()
        } else {
            -S::one()
        }
    }

    /// All values of `chi^lambda`, keyed by class; zero values are omitted.
    pub fn char_row(
        &self,
        lambda: &MultiPartition,
    ) -> Result<BTreeMap<MultiPartition, Cyclotomic<S>>> {
        self.check_label(lambda, Side::Character)?;
        let expr = self.schur_y(lambda)?;
        let sign = self.irreducible_sign(lambda);
        Ok(self
            .power_x_to_hl(&expr, None)?
            .into_iter()
            .map(|(mu, r)| (mu, root_sum_to_cyclotomic(&r, self.field).scale(&sign)))
            .filter(|(_, c)| !c.is_zero())
            .collect())
    }

    /// `chi^lambda(mu)`.
    pub fn char_value(
        &self,
        lambda: &MultiPartition,
        mu: &MultiPartition,
    ) -> Result<Cyclotomic<S>> {
        self.check_label(lambda, Side::Character)?;
        self.check_label(mu, Side::Element)?;
        let expr = self.schur_y(lambda)?;
        let sign = self.irreducible_sign(lambda);
        let hl = self.power_x_to_hl(&expr, Some(mu))?;
        Ok(hl
            .get(mu)
            .map(|r| root_sum_to_cyclotomic(r, self.field).scale(&sign))
            .unwrap_or_else(|| Cyclotomic::zero(self.field)))
    }

    fn check_label(&self, label: &MultiPartition, side: Side) -> Result<()> {
        if label.side() != side {
            return Err(Error::InvalidArgument(format!(
                "{label} is on the wrong side"
            )));
        }
        label.expect_size(self.n)?;
        for o in label.support() {
            self.ctx.validate(o)?;
        }
        Ok(())
    }
}

/// `s_lambda` for a single alphabet, as a [`SymExpr`] in the `Y` power sums
/// on the orbit `phi`.
pub fn schur_to_power_y<S: Scalar>(phi: &OrbitLabel, lambda: &Partition) -> Result<SymExpr<S>> {
    let mut e = SymExpr::zero(Basis::PowerY, phi.size() * lambda.size(), 1);
    for (rho, c) in schur_to_power::<S>(lambda) {
        e.add_term(
            MultiPartition::single(*phi, rho),
            Cyclotomic::from_scalar(1, c),
        )?;
    }
    Ok(e)
}
