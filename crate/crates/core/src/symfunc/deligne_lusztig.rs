//! Deligne-Lusztig virtual characters `R_nu` as combinations of
//! irreducible characters.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::multipartition::MultiPartition;
use crate::partitions::Partition;
use crate::symfunc::symmetric_group::power_to_schur;
use crate::tori::{Side, TorusContext};

/// Label of the pair `(T, theta)` where `T = T_{nu_1} x ... x T_{nu_k}` and
/// `theta_i` is a character exponent at level `nu_i`: torus factors are
/// grouped by character orbit `phi`, each contributing the part
/// `nu_i / |phi|` to `nu^phi`.
pub fn dl_label(ctx: &TorusContext, nu: &Partition, theta: &[u64]) -> Result<MultiPartition> {
    if nu.len() != theta.len() {
        return Err(Error::InvalidArgument(format!(
            "{} torus factors but {} characters",
            nu.len(),
            theta.len()
        )));
    }
    let mut grouped: BTreeMap<_, Vec<u32>> = BTreeMap::new();
    for (&level, &c) in nu.parts().iter().zip(theta) {
        let phi = ctx.frobenius_orbit(Side::Character, level, c)?;
        if level % phi.size() != 0 {
            return Err(Error::InvalidArgument(format!(
                "orbit {phi} does not divide the torus level {level}"
            )));
        }
        grouped.entry(phi).or_default().push(level / phi.size());
    }
    MultiPartition::from_entries(
        Side::Character,
        grouped
            .into_iter()
            .map(|(phi, parts)| (phi, Partition::from_unsorted(parts))),
    )
}

/// `R_nu = ch^{-1}((-1)^{|nu| + l(nu)} p_nu)` written in irreducible
/// characters `chi^lambda`. Coefficients are integers; zero terms are
/// omitted.
pub fn dl_expand(nu: &MultiPartition) -> Result<BTreeMap<MultiPartition, i64>> {
    if nu.side() != Side::Character {
        return Err(Error::InvalidArgument(format!(
            "{nu} is not a character-side label"
        )));
    }
    let n = nu.size();
    // p_nu = prod_phi sum_lambda chi^lambda(nu^phi) s_lambda(Y^phi)
    let mut acc: Vec<(Vec<(crate::tori::OrbitLabel, Partition)>, i64)> = vec![(Vec::new(), 1)];
    for (phi, part) in nu.iter() {
        let expansion = power_to_schur(part);
        let mut next = Vec::with_capacity(acc.len() * expansion.len());
        for (entries, c) in &acc {
            for (lambda, k) in &expansion {
                let mut e = entries.clone();
                e.push((*phi, lambda.clone()));
                next.push((e, c * k));
            }
        }
        acc = next;
    }
    let dl_sign: i64 = if (n as usize + nu.length()).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let mut out = BTreeMap::new();
    for (entries, c) in acc {
        let lambda = MultiPartition::from_entries(Side::Character, entries)?;
        // s_lambda = ch((-1)^{floor(n/2) + n(lambda)} chi^lambda)
        let irr_sign: i64 = if ((n / 2) as u64 + lambda.n_stat()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let v = c * dl_sign * irr_sign;
        if v != 0 {
            *out.entry(lambda).or_insert(0) += v;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}
