//! Characters of symmetric groups and the Schur / power-sum transition.

use std::collections::BTreeMap;

use crate::partitions::{enumerate_partitions, Partition};
use crate::scalar::Scalar;

/// `chi^lambda(rho)` by the Murnaghan-Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "partitions of different sizes");
    let beads = lambda.len();
    let beta: Vec<u32> = (0..beads)
        .map(|i| lambda.parts()[i] + (beads - 1 - i) as u32)
        .collect();
    mn_rec(beta, rho.parts())
}

fn mn_rec(beta: Vec<u32>, rest: &[u32]) -> i64 {
    let Some((&r, tail)) = rest.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let v = mn_rec(next, tail);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    total
}

/// `s_lambda = sum_rho z_rho^{-1} chi^lambda(rho) p_rho`.
pub fn schur_to_power<S: Scalar>(lambda: &Partition) -> BTreeMap<Partition, S> {
    enumerate_partitions(lambda.size())
        .into_iter()
        .filter_map(|rho| {
            let chi = mn_character(lambda, &rho);
            (chi != 0).then(|| {
                let c = S::from_int(chi) / S::from_bigint(&rho.z());
                (rho, c)
            })
        })
        .collect()
}

/// `p_rho = sum_lambda chi^lambda(rho) s_lambda`.
pub fn power_to_schur(rho: &Partition) -> BTreeMap<Partition, i64> {
    enumerate_partitions(rho.size())
        .into_iter()
        .filter_map(|lambda| {
            let chi = mn_character(&lambda, rho);
            (chi != 0).then_some((lambda, chi))
        })
        .collect()
}
