//! Self-dual polynomials over `F_q` and their correspondence with real
//! semisimple characters.

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::characters::{is_real, is_semisimple};
use crate::error::{Error, Result};
use crate::finite_field::{Extension, FqPoly, GaloisField};
use crate::multipartition::MultiPartition;
use crate::tori::{OrbitLabel, Side, TorusContext};

/// Constant term selector for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantTerm {
    MinusOne,
    PlusOne,
    Any,
}

impl ConstantTerm {
    fn signs(self) -> &'static [i64] {
        match self {
            ConstantTerm::MinusOne => &[-1],
            ConstantTerm::PlusOne => &[1],
            ConstantTerm::Any => &[-1, 1],
        }
    }
}

/// `g = (x-1)^s (x+1)^t prod (v_i v~_i)^{n_i} prod r_j^{m_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualFactorization {
    pub s: u32,
    pub t: u32,
    /// `(v, v~, n)` with `v < v~` irreducible.
    pub pairs: Vec<(FqPoly, FqPoly, u32)>,
    /// `(r, m)` with `r` irreducible, self-dual and not `x +- 1`.
    pub selfduals: Vec<(FqPoly, u32)>,
}

impl SelfDualFactorization {
    /// Multiplies the factors back together.
    pub fn product(&self, field: &Arc<GaloisField>) -> FqPoly {
        let mut g = FqPoly::from_ints(field, &[-1, 1])
            .pow(self.s)
            .mul(&FqPoly::from_ints(field, &[1, 1]).pow(self.t));
        for (v, w, n) in &self.pairs {
            g = g.mul(&v.mul(w).pow(*n));
        }
        for (r, m) in &self.selfduals {
            g = g.mul(&r.pow(*m));
        }
        g
    }
}

fn require_odd(field: &GaloisField) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::Unsupported(
            "self-dual polynomials need odd characteristic".into(),
        ));
    }
    Ok(())
}

/// `h(0)^{-1} x^d h(1/x)`.
pub fn dual_poly(h: &FqPoly) -> Result<FqPoly> {
    h.dual()
}

/// Complete factorization of a self-dual polynomial.
pub fn self_dual_factorization(g: &FqPoly) -> Result<SelfDualFactorization> {
    let field = g.field().clone();
    require_odd(&field)?;
    if !g.is_self_dual() {
        return Err(Error::InvalidArgument(format!(
            "{} is not self-dual",
            g.with_field()
        )));
    }
    let mut factors: Vec<(FqPoly, u32)> = Vec::new();
    let mut rest = g.clone();
    let mut d = 1usize;
    while rest.degree().unwrap_or(0) > 0 {
        if rest.degree().unwrap() < 2 * d {
            factors.push((rest.clone(), 1));
            break;
        }
        for h in crate::finite_field::monic_irreducibles(&field, d) {
            let mut m = 0;
            while h.divides(&rest)? {
                rest = rest.div_rem(&h)?.0;
                m += 1;
            }
            if m > 0 {
                factors.push((h, m));
            }
        }
        d += 1;
    }
    // merge a leftover irreducible with an equal earlier factor
    factors.sort();
    let mut merged: Vec<(FqPoly, u32)> = Vec::new();
    for (h, m) in factors {
        match merged.last_mut() {
            Some((last, k)) if *last == h => *k += m,
            _ => merged.push((h, m)),
        }
    }
    let minus = FqPoly::from_ints(&field, &[-1, 1]);
    let plus = FqPoly::from_ints(&field, &[1, 1]);
    let mut out = SelfDualFactorization {
        s: 0,
        t: 0,
        pairs: Vec::new(),
        selfduals: Vec::new(),
    };
    for (h, m) in &merged {
        if *h == minus {
            out.s = *m;
        } else if *h == plus {
            out.t = *m;
        } else {
            let hd = h.dual()?;
            if hd == *h {
                out.selfduals.push((h.clone(), *m));
            } else if *h < hd {
                let partner = merged.iter().find(|(k, _)| *k == hd).map(|(_, n)| *n);
                if partner != Some(*m) {
                    return Err(Error::Internal(format!("{h} and its dual occur unevenly")));
                }
                out.pairs.push((h.clone(), hd, *m));
            }
        }
    }
    if out.product(&field) != *g {
        return Err(Error::Internal(format!(
            "factorization of {g} does not reassemble"
        )));
    }
    Ok(out)
}

/// Self-dual monic polynomials of degree `n` built from the coefficient
/// symmetry `a_{n-i} = c a_i`, in canonical order.
pub fn enumerate_self_dual(
    field: &Arc<GaloisField>,
    n: u32,
    constant: ConstantTerm,
) -> Result<Vec<FqPoly>> {
    require_odd(field)?;
    if n == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let q = field.order() as u64;
    let n = n as usize;
    let mut out = Vec::new();
    for &c in constant.signs() {
        let cf = field.from_int(c);
        // free coefficients a_1 .. a_h, plus the middle one when it is not forced
        let half = (n - 1) / 2;
        let free_middle = n.is_multiple_of(2) && c == 1;
        let free = half + usize::from(free_middle);
        let total = q
            .checked_pow(free as u32)
            .ok_or_else(|| Error::Overflow(format!("{q}^{free} self-dual polynomials")))?;
        let build = |idx: u64| {
            let mut a = vec![0u32; n + 1];
            a[0] = cf;
            a[n] = 1;
            let mut v = idx;
            for i in (1..=free).rev() {
                a[i] = (v % q) as u32;
                v /= q;
            }
            for i in 1..=half {
                a[n - i] = field.mul(cf, a[i]);
            }
            FqPoly::from_coeffs(field, a)
        };
        let mut polys: Vec<FqPoly> = (0..total).into_par_iter().map(build).collect();
        out.append(&mut polys);
    }
    out.sort();
    Ok(out)
}

/// `#{ self-dual g of degree n : g(0) = c }`.
pub fn count_by_constant(field: &Arc<GaloisField>, n: u32, constant: ConstantTerm) -> Result<u64> {
    Ok(enumerate_self_dual(field, n, constant)?.len() as u64)
}

/// Filters all `q^n` monic polynomials of degree `n`; an oracle for
/// [`enumerate_self_dual`].
pub fn brute_force_self_dual(
    field: &Arc<GaloisField>,
    n: u32,
    constant: ConstantTerm,
) -> Result<Vec<FqPoly>> {
    require_odd(field)?;
    let mut out = Vec::new();
    let wanted: Vec<u32> = constant
        .signs()
        .iter()
        .map(|&c| field.from_int(c))
        .collect();
    crate::finite_field::for_each_monic(field, n as usize, |h| {
        if h.is_self_dual() && wanted.contains(&h.constant_term()) {
            out.push(h.clone());
        }
    });
    out.sort();
    Ok(out)
}

struct LevelModel {
    ext: Extension,
    /// Generator of `T_d` inside `F_{q^{2d}}`.
    generator: FqPoly,
}

/// Realizes each torus `T_d` inside `F_{q^{2d}}` so that element orbits can
/// be turned into polynomials over `F_q`.
pub struct OrbitPolynomials<'a> {
    ctx: &'a TorusContext,
    field: Arc<GaloisField>,
    levels: Vec<OnceLock<Result<LevelModel>>>,
}

impl<'a> OrbitPolynomials<'a> {
    pub fn new(ctx: &'a TorusContext) -> Result<Self> {
        let field = GaloisField::new(ctx.q())?;
        require_odd(&field)?;
        Ok(OrbitPolynomials {
            ctx,
            field,
            levels: (0..ctx.degree()).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    fn level(&self, d: u32) -> Result<&LevelModel> {
        let slot = self
            .levels
            .get(d as usize - 1)
            .ok_or_else(|| Error::LevelNotDivisor {
                level: d,
                top: self.ctx.top_level(),
            })?;
        slot.get_or_init(|| {
            let ext = Extension::new(&self.field, 2 * d)?;
            let prim = ext.primitive_element()?;
            let cofactor = (ext.order()? - 1) / self.ctx.modulus(d)?;
            let generator = ext.pow(&prim, cofactor);
            Ok(LevelModel { ext, generator })
        })
        .as_ref()
        .map_err(|e| e.clone())
    }

    /// `prod_{gamma in f} (x + sign * gamma)` over `F_{q^{2d}}`; the
    /// coefficients lie in `F_q` only once conjugate orbits are combined.
    fn orbit_product(&self, f: &OrbitLabel, sign: i64) -> Result<Vec<FqPoly>> {
        let model = self.level(f.level())?;
        let ext_one = FqPoly::one(&self.field);
        let s = FqPoly::from_ints(&self.field, &[sign]);
        // polynomial in x with coefficients in the extension, low to high
        let mut poly: Vec<FqPoly> = vec![ext_one];
        for e in self.ctx.members(f) {
            let gamma = model.ext.mul(&s, &model.ext.pow(&model.generator, e));
            let mut next = vec![FqPoly::zero(&self.field); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c);
                next[i] = next[i].add(&model.ext.mul(c, &gamma));
            }
            poly = next;
        }
        Ok(poly)
    }

    /// `prod_{gamma in f cup f-bar} (x + sign * gamma)` as a polynomial over
    /// `F_q`.
    pub fn conjugate_pair_polynomial(&self, f: &OrbitLabel, sign: i64) -> Result<FqPoly> {
        if f.side() != Side::Element {
            return Err(Error::InvalidArgument(format!(
                "{f} is not an element orbit"
            )));
        }
        let bar = self.ctx.conjugate_orbit(f);
        let mut ext_poly = self.orbit_product(f, sign)?;
        if bar != *f {
            let model = self.level(f.level())?;
            let other = self.orbit_product(&bar, sign)?;
            let mut prod = vec![FqPoly::zero(&self.field); ext_poly.len() + other.len() - 1];
            for (i, a) in ext_poly.iter().enumerate() {
                for (j, b) in other.iter().enumerate() {
                    prod[i + j] = prod[i + j].add(&model.ext.mul(a, b));
                }
            }
            ext_poly = prod;
        }
        self.descend(ext_poly, f)
    }

    fn descend(&self, ext_poly: Vec<FqPoly>, f: &OrbitLabel) -> Result<FqPoly> {
        let coeffs = ext_poly
            .into_iter()
            .map(|c| match c.degree() {
                None => Ok(0),
                Some(0) => Ok(c.coeff(0)),
                Some(_) => Err(Error::Internal(format!(
                    "polynomial of {f} is not defined over F_q"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FqPoly::from_coeffs(&self.field, coeffs))
    }

    /// `rho(Delta(lambda))` for a real semisimple character label.
    pub fn char_to_polynomial(&self, lambda: &MultiPartition) -> Result<FqPoly> {
        if !is_real(self.ctx, lambda) || !is_semisimple(lambda) {
            return Err(Error::InvalidArgument(format!(
                "{lambda} is not real semisimple"
            )));
        }
        let mu = lambda.delta(self.ctx)?;
        let mut g = FqPoly::one(&self.field);
        for (f, part) in mu.iter() {
            let bar = self.ctx.conjugate_orbit(f);
            if bar < *f {
                continue;
            }
            g = g.mul(&self.conjugate_pair_polynomial(f, 1)?.pow(part.len() as u32));
        }
        Ok(g)
    }
}

/// One-shot form of [`OrbitPolynomials::char_to_polynomial`].
pub fn char_to_polynomial(ctx: &TorusContext, lambda: &MultiPartition) -> Result<FqPoly> {
    OrbitPolynomials::new(ctx)?.char_to_polynomial(lambda)
}
