//! Integer partitions: diagrams, hooks, 2-cores and enumeration.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition, stored as its weakly decreasing list of positive parts.
///
/// The derived order is lexicographic on parts; enumeration lists partitions
/// in decreasing (reverse lexicographic) order, so `(n)` comes first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} contain a zero"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single row `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The single column `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        Partition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Parts and multiplicities `(i, m_i)` for `m_i > 0`, by increasing `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `n(lambda) = sum_j (j - 1) lambda_j`.
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &p)| j as u64 * p as u64)
            .sum()
    }

    /// Hook lengths `lambda_i + lambda'_j - i - j + 1`, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row + conj.0[j] - i as u32 - j as u32 - 1);
            }
        }
        out
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(1);
        for (i, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// Beta numbers `lambda_i + (L - i)` for `L` beads, decreasing.
    fn beta_numbers(&self, beads: usize) -> Vec<u32> {
        (0..beads)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + (beads - 1 - i) as u32)
            .collect()
    }

    /// Core and weight from the two-runner abacus.
    fn abacus_core(&self) -> (Partition, u32) {
        let beads = self.0.len();
        let beta = self.beta_numbers(beads);
        let on_runner = |r: u32| beta.iter().filter(|&&b| b % 2 == r).count() as u32;
        let mut slid: Vec<u32> = (0..2u32)
            .flat_map(|r| (0..on_runner(r)).map(move |k| r + 2 * k))
            .collect();
        slid.sort_unstable_by(|a, b| b.cmp(a));
        let moved: u32 = beta.iter().sum::<u32>() - slid.iter().sum::<u32>();
        let core = Partition::from_unsorted(
            slid.iter()
                .enumerate()
                .map(|(i, &b)| b - (beads - 1 - i) as u32)
                .collect(),
        );
        (core, moved / 2)
    }

    /// The partition left after removing all rim 2-hooks.
    pub fn two_core(&self) -> Partition {
        self.abacus_core().0
    }

    /// Number of rim 2-hooks removed on the way to the 2-core.
    pub fn two_weight(&self) -> u32 {
        self.abacus_core().1
    }

    /// Numbers of odd and even hook lengths.
    pub fn ohl_ehl(&self) -> (u32, u32) {
        let hooks = self.hook_lengths();
        let odd = hooks.iter().filter(|&&h| h % 2 == 1).count() as u32;
        (odd, hooks.len() as u32 - odd)
    }

    /// Whether this is `()` or a staircase `(k, ..., 1)`.
    pub fn is_staircase(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &p)| p as usize == self.0.len() - i)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Calls `f` on every partition of `n`, in decreasing lexicographic order.
pub fn for_each_partition<F: FnMut(&Partition)>(n: u32, mut f: F) {
    fn rec<F: FnMut(&Partition)>(rest: u32, max: u32, cur: &mut Partition, f: &mut F) {
        if rest == 0 {
            f(cur);
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.0.push(p);
            rec(rest - p, p, cur, f);
            cur.0.pop();
        }
    }
    rec(n, n, &mut Partition::empty(), &mut f);
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, |p| out.push(p.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Repeatedly strips any removable domino; the order is arbitrary.
    fn naive_two_core(lambda: &Partition) -> (Partition, u32) {
        let mut rows = lambda.parts().to_vec();
        let mut removed = 0;
        'outer: loop {
            // horizontal domino at the end of a row
            for i in 0..rows.len() {
                let next = rows.get(i + 1).copied().unwrap_or(0);
                if rows[i] >= next + 2 {
                    rows[i] -= 2;
                    removed += 1;
                    rows.retain(|&x| x > 0);
                    continue 'outer;
                }
            }
            // vertical domino at the bottom of a column
            for i in 0..rows.len().saturating_sub(1) {
                let next = rows.get(i + 2).copied().unwrap_or(0);
                if rows[i] == rows[i + 1] && rows[i + 1] > next {
                    rows[i] -= 1;
                    rows[i + 1] -= 1;
                    removed += 1;
                    rows.retain(|&x| x > 0);
                    continue 'outer;
                }
            }
            break;
        }
        (Partition::from_unsorted(rows), removed)
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(6).len(), 11);
        assert_eq!(enumerate_partitions(20).len(), 627);
        let four = enumerate_partitions(4);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
        assert!(four.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p(&[1]).hook_lengths(), vec![1]);
        assert_eq!(p(&[2]).hook_lengths(), vec![2, 1]);
        let mut h = p(&[3, 2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 1, 3, 3, 5]);
    }

    #[test]
    fn n_stat_and_conjugate() {
        assert_eq!(Partition::column(5).n_stat(), 10);
        assert_eq!(Partition::row(7).n_stat(), 0);
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[2]).z(), BigInt::from(2));
        assert_eq!(p(&[2, 1, 1]).z(), BigInt::from(4));
        assert_eq!(p(&[3, 3]).z(), BigInt::from(18));
    }

    #[test]
    fn two_core_examples() {
        assert_eq!(p(&[3, 2, 1]).two_core(), p(&[3, 2, 1]));
        assert_eq!(p(&[2]).two_core(), Partition::empty());
        assert_eq!(p(&[2]).two_weight(), 1);
        assert_eq!(p(&[3, 2, 1]).ohl_ehl(), (6, 0));
        assert_eq!(p(&[4, 1]).two_core(), p(&[2, 1]));
        assert_eq!(p(&[2, 1]).two_core(), p(&[2, 1]));
    }

    #[test]
    fn multiplicities_listing() {
        assert_eq!(p(&[3, 1, 1]).multiplicities(), vec![(1, 2), (3, 1)]);
        assert!(Partition::empty().multiplicities().is_empty());
    }

    #[test]
    fn odd_even_hooks_small() {
        for n in 0..=14 {
            for_each_partition(n, |lambda| {
                let core = lambda.two_core();
                let (odd, even) = lambda.ohl_ehl();
                assert_eq!(odd as i64 - even as i64, core.size() as i64, "{lambda}");
                assert!(core.is_staircase());
                assert_eq!(n, core.size() + 2 * lambda.two_weight());
                assert_eq!((core.clone(), lambda.two_weight()), naive_two_core(lambda));
            });
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from(vec![1, 0, 3]), p(&[3, 1]));
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1u32..8, 0..8).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(lambda in arb_partition()) {
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            let binom: u64 = lambda.parts().iter().map(|&x| x as u64 * (x as u64).saturating_sub(1) / 2).sum();
            prop_assert_eq!(lambda.conjugate().n_stat(), binom);
        }

        #[test]
        fn hooks_match_conjugate(lambda in arb_partition()) {
            let mut a = lambda.hook_lengths();
            let mut b = lambda.conjugate().hook_lengths();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn serde_round_trip(lambda in arb_partition()) {
            let text = serde_json::to_string(&lambda).unwrap();
            let back: Partition = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, lambda);
        }
    }
}
