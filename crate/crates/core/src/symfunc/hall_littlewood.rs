//! Hall-Littlewood polynomials `P_lambda(x; t)` and the transition from
//! power sums, kept symbolic in `t` with integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::Scalar;

/// A polynomial in `t` with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly(Vec<i128>);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(Vec::new())
    }

    pub fn constant(c: i128) -> Self {
        TPoly(vec![c]).trimmed()
    }

    pub fn monomial(c: i128, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        TPoly(v).trimmed()
    }

    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        TPoly(coeffs).trimmed()
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    /// `1 + t + ... + t^{j-1}`.
    pub fn q_integer(j: usize) -> Self {
        TPoly(vec![1; j])
    }

    /// Exact quotient by a polynomial with constant term 1, or `None` when
    /// the division leaves a remainder.
    pub fn div_exact(&self, den: &TPoly) -> Option<TPoly> {
        assert_eq!(den.0.first(), Some(&1), "divisor must have constant term 1");
        if self.is_zero() {
            return Some(TPoly::zero());
        }
        if den.0.len() > self.0.len() {
            return None;
        }
        let mut rem = self.0.clone();
        let qlen = self.0.len() - den.0.len() + 1;
        let mut quot = vec![0i128; qlen];
        for i in 0..qlen {
            let c = rem[i];
            quot[i] = c;
            if c != 0 {
                for (j, &d) in den.0.iter().enumerate() {
                    rem[i + j] -= c * d;
                }
            }
        }
        rem.iter().all(|&x| x == 0).then(|| TPoly(quot).trimmed())
    }

    pub fn eval<S: Scalar>(&self, t: &S) -> S {
        self.0
            .iter()
            .rev()
            .fold(S::zero(), |acc, &c| acc * t.clone() + S::from_int(c as i64))
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, o: &TPoly) -> TPoly {
        let n = self.0.len().max(o.0.len());
        TPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&0) + o.0.get(i).unwrap_or(&0))
                .collect(),
        )
        .trimmed()
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, o: &TPoly) -> TPoly {
        self + &(-o)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, o: &TPoly) -> TPoly {
        if self.is_zero() || o.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![0i128; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly(out).trimmed()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `v_lambda(t) = prod_{i >= 0} prod_{j <= m_i} [j]_t` in `nvars` variables.
fn v_poly(lambda: &Partition, nvars: usize) -> TPoly {
    let mut mults: Vec<u32> = lambda.multiplicities().iter().map(|&(_, m)| m).collect();
    mults.push((nvars - lambda.len()) as u32);
    let mut acc = TPoly::constant(1);
    for m in mults {
        for j in 1..=m as usize {
            acc = &acc * &TPoly::q_integer(j);
        }
    }
    acc
}

/// Schur expansion of `P_lambda(x_1..x_nvars; t)`, from the symmetrization
/// formula: antisymmetrize `x^lambda prod_{i<j} (x_i - t x_j)`, read off the
/// alternants, and divide by `v_lambda(t)`.
pub fn hl_schur_symbolic(lambda: &Partition, nvars: usize) -> Result<BTreeMap<Partition, TPoly>> {
    if nvars < lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "{lambda} needs at least {} variables, got {nvars}",
            lambda.len()
        )));
    }
    let mut start = vec![0u32; nvars];
    start[..lambda.len()].copy_from_slice(lambda.parts());
    let mut poly: HashMap<Vec<u32>, TPoly> = HashMap::from([(start, TPoly::constant(1))]);
    let minus_t = TPoly::monomial(-1, 1);
    for i in 0..nvars {
        for j in i + 1..nvars {
            let mut next: HashMap<Vec<u32>, TPoly> = HashMap::with_capacity(poly.len() * 2);
            for (mono, c) in poly {
                let mut a = mono.clone();
                a[i] += 1;
                let e = next.entry(a).or_default();
                *e = &*e + &c;
                let mut b = mono;
                b[j] += 1;
                let e = next.entry(b).or_default();
                *e = &*e + &(&c * &minus_t);
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
    }
    let mut schur: BTreeMap<Partition, TPoly> = BTreeMap::new();
    for (mono, c) in poly {
        let mut sorted = mono.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let inversions = (0..nvars)
            .flat_map(|i| (i + 1..nvars).map(move |j| (i, j)))
            .filter(|&(i, j)| mono[i] < mono[j])
            .count();
        let shape = Partition::from_unsorted(
            sorted
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (nvars - 1 - i) as u32)
                .collect(),
        );
        let e = schur.entry(shape).or_default();
        *e = if inversions % 2 == 0 {
            &*e + &c
        } else {
            &*e - &c
        };
    }
    let v = v_poly(lambda, nvars);
    let mut out = BTreeMap::new();
    for (mu, c) in schur {
        if c.is_zero() {
            continue;
        }
        let q = c.div_exact(&v).ok_or_else(|| {
            Error::Internal(format!(
                "alternant coefficient of {mu} in P_{lambda} not divisible by v(t)"
            ))
        })?;
        out.insert(mu, q);
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka(shape: &Partition, content: &[u32]) -> u64 {
    fn rec(shape: Vec<u32>, content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), u64>) -> u64 {
        let Some((&last, init)) = content.split_last() else {
            return u64::from(shape.is_empty());
        };
        let key = (shape.clone(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // remove a horizontal strip of size `last` from the outer rim
        let mut total = 0;
        let mut inner = shape.clone();
        strips(&shape, 0, last, &mut inner, &mut |nu: &[u32]| {
            let trimmed: Vec<u32> = nu.iter().copied().filter(|&x| x > 0).collect();
            total += rec(trimmed, init, memo);
        });
        memo.insert(key, total);
        total
    }
    fn strips(shape: &[u32], row: usize, left: u32, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if row == shape.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let floor = shape.get(row + 1).copied().unwrap_or(0);
        let max_take = (shape[row] - floor).min(left);
        for take in 0..=max_take {
            cur[row] = shape[row] - take;
            strips(shape, row + 1, left - take, cur, f);
        }
        cur[row] = shape[row];
    }
    if shape.size() != content.iter().sum::<u32>() {
        return 0;
    }
    rec(shape.parts().to_vec(), content, &mut HashMap::new())
}

/// Monomial expansion `P_lambda = sum_kappa c_kappa(t) m_kappa` in `nvars`
/// variables.
pub fn hl_monomial_symbolic(
    lambda: &Partition,
    nvars: usize,
) -> Result<BTreeMap<Partition, TPoly>> {
    if nvars < lambda.len() {
        return Err(Error::InvalidArgument(format!(
            "{lambda} needs at least {} variables, got {nvars}",
            lambda.len()
        )));
    }
    // the coefficients are stable once there are |lambda| variables
    let work = nvars.min(lambda.size() as usize).max(lambda.len());
    let schur = hl_schur_symbolic(lambda, work)?;
    let mut out = BTreeMap::new();
    for kappa in enumerate_partitions(lambda.size()) {
        if kappa.len() > nvars {
            continue;
        }
        let mut c = TPoly::zero();
        for (mu, s) in &schur {
            let k = kostka(mu, kappa.parts());
            if k != 0 {
                c = &c + &(s * &TPoly::constant(k as i128));
            }
        }
        if !c.is_zero() {
            out.insert(kappa, c);
        }
    }
    Ok(out)
}

/// Monomial coefficients of `P_lambda(x_1..x_nvars; t)` at a given `t`.
pub fn hl_monomial_expansion<S: Scalar>(
    lambda: &Partition,
    t: &S,
    nvars: usize,
) -> Result<BTreeMap<Partition, S>> {
    Ok(hl_monomial_symbolic(lambda, nvars)?
        .into_iter()
        .map(|(k, c)| (k, c.eval(t)))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// Coefficient of `m_kappa` in `p_rho`: the number of ways to distribute the
/// parts of `rho` among the parts of `kappa` exactly.
pub fn power_monomial_coefficient(rho: &Partition, kappa: &Partition) -> u64 {
    fn rec(parts: &[u32], bins: &mut [u32]) -> u64 {
        let Some((&r, rest)) = parts.split_first() else {
            return u64::from(bins.iter().all(|&b| b == 0));
        };
        let mut total = 0;
        for i in 0..bins.len() {
            if bins[i] >= r {
                bins[i] -= r;
                total += rec(rest, bins);
                bins[i] += r;
            }
        }
        total
    }
    if rho.size() != kappa.size() {
        return 0;
    }
    rec(rho.parts(), &mut kappa.parts().to_vec())
}

type Transition = Arc<BTreeMap<Partition, TPoly>>;

fn monomial_memo() -> &'static Mutex<HashMap<Partition, Transition>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, Transition>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn power_memo() -> &'static Mutex<HashMap<Partition, Transition>> {
    static MEMO: OnceLock<Mutex<HashMap<Partition, Transition>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn stable_monomials(lambda: &Partition) -> Result<Transition> {
    if let Some(v) = monomial_memo().lock().unwrap().get(lambda) {
        return Ok(v.clone());
    }
    let v = Arc::new(hl_monomial_symbolic(lambda, lambda.size() as usize)?);
    monomial_memo()
        .lock()
        .unwrap()
        .insert(lambda.clone(), v.clone());
    Ok(v)
}

/// `p_rho = sum_lambda c_lambda(t) P_lambda(x; t)` with the `c_lambda` as
/// integer polynomials in `t`, memoized per `rho`.
///
/// Solved in the monomial basis: `P_lambda = m_lambda + (lower terms)`, so
/// walking partitions in decreasing lexicographic order is back-substitution.
pub fn power_to_hl_symbolic(rho: &Partition) -> Result<Transition> {
    if let Some(v) = power_memo().lock().unwrap().get(rho) {
        return Ok(v.clone());
    }
    let n = rho.size();
    let mut residual: BTreeMap<Partition, TPoly> = enumerate_partitions(n)
        .into_iter()
        .map(|k| {
            let c = power_monomial_coefficient(rho, &k) as i128;
            (k, TPoly::constant(c))
        })
        .collect();
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        let c = residual.get(&lambda).cloned().unwrap_or_default();
        if c.is_zero() {
            continue;
        }
        let p = stable_monomials(&lambda)?;
        if p.get(&lambda) != Some(&TPoly::constant(1)) {
            return Err(Error::Internal(format!(
                "P_{lambda} is not monic in m_{lambda}"
            )));
        }
        for (kappa, coeff) in p.iter() {
            let e = residual.entry(kappa.clone()).or_default();
            *e = &*e - &(&c * coeff);
        }
        out.insert(lambda, c);
    }
    if residual.values().any(|c| !c.is_zero()) {
        return Err(Error::Internal(format!(
            "p_{rho} is not in the span of the P_lambda"
        )));
    }
    let out = Arc::new(out);
    power_memo()
        .lock()
        .unwrap()
        .insert(rho.clone(), out.clone());
    Ok(out)
}

/// `power_to_hl_symbolic` evaluated at `t`.
pub fn power_to_hl<S: Scalar>(rho: &Partition, t: &S) -> Result<BTreeMap<Partition, S>> {
    Ok(power_to_hl_symbolic(rho)?
        .iter()
        .map(|(k, c)| (k.clone(), c.eval(t)))
        .filter(|(_, c)| !c.is_zero())
        .collect())
}
