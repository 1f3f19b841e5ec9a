//! Integer polynomials, used for the cyclotomic moduli.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::numtheory::divisors;

/// Dense integer polynomial, coefficients low to high.
pub type IntPoly = Vec<i64>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

pub fn mul(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact division by a monic divisor. Returns `None` if there is a remainder.
pub fn div_exact_monic(num: &[i64], den: &[i64]) -> Option<IntPoly> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "divisor must be monic");
    if num.len() < den.len() {
        return num.iter().all(|&c| c == 0).then(|| vec![0]);
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    rem[..dn].iter().all(|&c| c == 0).then(|| trim(quot))
}

fn memo() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `m`-th cyclotomic polynomial, monic of degree `phi(m)`.
pub fn cyclotomic_polynomial(m: u64) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic polynomial index must be positive");
    if let Some(p) = memo().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by the proper-divisor factors
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = div_exact_monic(&num, &phi_d).expect("cyclotomic factor must divide x^m - 1");
    }
    let p = Arc::new(num);
    memo().lock().unwrap().entry(m).or_insert(p).clone()
}
