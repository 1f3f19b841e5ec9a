//! Partition-valued functions on Frobenius orbits.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::tori::{OrbitLabel, Side, TorusContext};

/// A finitely supported map from orbits (all on one side) to nonempty
/// partitions. Element-side ones label classes, character-side ones label
/// irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPartition {
    side: Side,
    parts: BTreeMap<OrbitLabel, Partition>,
}

impl MultiPartition {
    pub fn empty(side: Side) -> Self {
        MultiPartition {
            side,
            parts: BTreeMap::new(),
        }
    }

    /// Builds from `(orbit, partition)` pairs; empty partitions are dropped
    /// and repeated orbits are rejected.
    pub fn from_entries<I>(side: Side, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (OrbitLabel, Partition)>,
    {
        let mut mp = Self::empty(side);
        for (orbit, lambda) in entries {
            if orbit.side() != side {
                return Err(Error::InvalidArgument(format!(
                    "{orbit} is not on the {side:?} side"
                )));
            }
            if lambda.is_empty() {
                continue;
            }
            if mp.parts.insert(orbit, lambda).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "orbit {orbit} listed twice"
                )));
            }
        }
        Ok(mp)
    }

    /// A label supported on a single orbit.
    pub fn single(orbit: OrbitLabel, lambda: Partition) -> Self {
        Self::from_entries(orbit.side(), [(orbit, lambda)]).expect("single orbit")
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn get(&self, orbit: &OrbitLabel) -> Option<&Partition> {
        self.parts.get(orbit)
    }

    /// The partition at `orbit`, or the empty partition.
    pub fn part(&self, orbit: &OrbitLabel) -> Partition {
        self.parts.get(orbit).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OrbitLabel, &Partition)> {
        self.parts.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &OrbitLabel> {
        self.parts.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|lambda| = sum_f |f| |lambda^f|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().map(|(o, l)| o.size() * l.size()).sum()
    }

    /// `n(lambda) = sum_f |f| n(lambda^f)`.
    pub fn n_stat(&self) -> u64 {
        self.parts
            .iter()
            .map(|(o, l)| o.size() as u64 * l.n_stat())
            .sum()
    }

    /// `sum_f ell(lambda^f)`.
    pub fn length(&self) -> usize {
        self.parts.values().map(Partition::len).sum()
    }

    /// Orbit-wise conjugate partitions.
    pub fn conjugate(&self) -> MultiPartition {
        self.map_partitions(|l| l.conjugate())
    }

    /// Hook lengths scaled by the size of their orbit.
    pub fn weighted_hooks(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .parts
            .iter()
            .flat_map(|(o, l)| {
                l.hook_lengths()
                    .into_iter()
                    .map(move |h| h as u64 * o.size() as u64)
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn map_partitions<F: Fn(&Partition) -> Partition>(&self, f: F) -> MultiPartition {
        MultiPartition {
            side: self.side,
            parts: self.parts.iter().map(|(o, l)| (*o, f(l))).collect(),
        }
    }

    fn map_orbits<F: Fn(&OrbitLabel) -> Result<OrbitLabel>>(
        &self,
        side: Side,
        f: F,
    ) -> Result<Self> {
        Self::from_entries(
            side,
            self.parts
                .iter()
                .map(|(o, l)| Ok((f(o)?, l.clone())))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// `bar(lambda)^phi = lambda^{bar phi}`.
    pub fn bar(&self, ctx: &TorusContext) -> MultiPartition {
        self.map_orbits(self.side, |o| Ok(ctx.conjugate_orbit(o)))
            .expect("conjugation permutes orbits")
    }

    /// Whether the label equals its conjugate.
    pub fn is_self_conjugate(&self, ctx: &TorusContext) -> bool {
        self.bar(ctx) == *self
    }

    /// Relabels character orbits as element orbits.
    pub fn delta(&self, ctx: &TorusContext) -> Result<MultiPartition> {
        self.map_orbits(Side::Element, |o| ctx.delta_orbit(o))
    }

    /// Inverse of [`delta`](Self::delta).
    pub fn delta_inverse(&self, ctx: &TorusContext) -> Result<MultiPartition> {
        self.map_orbits(Side::Character, |o| ctx.delta_orbit_inverse(o))
    }

    /// Fails unless the label has total size `n`.
    pub fn expect_size(&self, n: u32) -> Result<()> {
        let found = self.size();
        if found != n {
            return Err(Error::SizeMismatch { expected: n, found });
        }
        Ok(())
    }
}

impl Ord for MultiPartition {
    /// Entry by entry: orbit label ascending, then partition in reverse
    /// lexicographic order (`(n)` first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.side.cmp(&other.side).then_with(|| {
            let mut a = self.parts.iter();
            let mut b = other.parts.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((oa, la)), Some((ob, lb))) => {
                        let c = oa.cmp(ob).then_with(|| lb.cmp(la));
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{}:{{}}", self.side.tag());
        }
        for (i, (o, l)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{o}{l}")?;
        }
        Ok(())
    }
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.parts.iter().map(|(o, l)| (o.to_string(), l)))
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    /// An empty list deserializes as an element-side label.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<(OrbitLabel, Partition)>::deserialize(d)?;
        let side = entries.first().map_or(Side::Element, |(o, _)| o.side());
        MultiPartition::from_entries(side, entries).map_err(D::Error::custom)
    }
}

/// Orbits of exact size at most `n`, by label.
pub fn orbit_universe(ctx: &TorusContext, side: Side, n: u32) -> Result<Vec<OrbitLabel>> {
    let mut out = Vec::new();
    for d in 1..=n {
        out.extend(ctx.orbits_of_exact_size(side, d)?);
    }
    out.sort();
    Ok(out)
}

/// All multipartitions of size `n` on one side, canonically ordered.
pub fn enumerate_multipartitions(
    ctx: &TorusContext,
    n: u32,
    side: Side,
) -> Result<Vec<MultiPartition>> {
    if n > ctx.degree() {
        return Err(Error::InvalidArgument(format!(
            "degree {n} exceeds the context degree {}",
            ctx.degree()
        )));
    }
    let orbits = orbit_universe(ctx, side, n)?;
    let partitions: Vec<Vec<Partition>> = (0..=n).map(enumerate_partitions).collect();
    let mut out = Vec::new();
    let mut cur: Vec<(OrbitLabel, Partition)> = Vec::new();
    fn rec(
        start: usize,
        rest: u32,
        side: Side,
        orbits: &[OrbitLabel],
        partitions: &[Vec<Partition>],
        cur: &mut Vec<(OrbitLabel, Partition)>,
        out: &mut Vec<MultiPartition>,
    ) {
        if rest == 0 {
            out.push(MultiPartition::from_entries(side, cur.iter().cloned()).unwrap());
            return;
        }
        for (i, o) in orbits.iter().enumerate().skip(start) {
            let d = o.size();
            if d > rest {
                continue;
            }
            for k in 1..=rest / d {
                for lambda in &partitions[k as usize] {
                    cur.push((*o, lambda.clone()));
                    rec(i + 1, rest - d * k, side, orbits, partitions, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(0, n, side, &orbits, &partitions, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

/// Summary statistics of a label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MpStats {
    pub size: u32,
    pub n: u64,
    pub n_conjugate: u64,
    pub length: usize,
    pub weighted_hooks: Vec<u64>,
    pub bar: MultiPartition,
}

pub fn mp_stats(ctx: &TorusContext, mp: &MultiPartition) -> MpStats {
    MpStats {
        size: mp.size(),
        n: mp.n_stat(),
        n_conjugate: mp.conjugate().n_stat(),
        length: mp.length(),
        weighted_hooks: mp.weighted_hooks(),
        bar: mp.bar(ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: u64, n: u32) -> TorusContext {
        TorusContext::new(q, n).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let c = ctx(3, 4);
        assert_eq!(
            enumerate_multipartitions(&c, 0, Side::Character)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_multipartitions(&c, 1, Side::Character)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            enumerate_multipartitions(&c, 2, Side::Character)
                .unwrap()
                .len(),
            16
        );
        for n in 1..=4 {
            let theta = enumerate_multipartitions(&c, n, Side::Character).unwrap();
            let phi = enumerate_multipartitions(&c, n, Side::Element).unwrap();
            assert_eq!(theta.len(), phi.len());
            let back: Vec<MultiPartition> =
                phi.iter().map(|m| m.delta_inverse(&c).unwrap()).collect();
            assert_eq!(back, theta);
            for t in &theta {
                assert_eq!(t.delta(&c).unwrap().delta_inverse(&c).unwrap(), *t);
                assert_eq!(t.size(), n);
            }
        }
    }

    #[test]
    fn class_counts_of_small_unitary_groups() {
        // q^2 + 2q + 1 and q^3 + 2q^2 + 3q + 2 classes in degrees 2 and 3
        for q in [2u64, 3, 5] {
            let c = ctx(q, 3);
            let count = |n| {
                enumerate_multipartitions(&c, n, Side::Element)
                    .unwrap()
                    .len() as u64
            };
            assert_eq!(count(2), q * q + 2 * q + 1);
            assert_eq!(count(3), q * q * q + 2 * q * q + 3 * q + 2);
        }
    }

    #[test]
    fn stats_and_bar() {
        let c = ctx(3, 2);
        let o = c.frobenius_orbit(Side::Character, 2, 1).unwrap();
        let mp = MultiPartition::single(o, Partition::row(1));
        let s = mp_stats(&c, &mp);
        assert_eq!(s.weighted_hooks, vec![2]);
        assert_ne!(s.bar, mp);
        let one = MultiPartition::single(c.trivial_character(), Partition::column(2));
        assert_eq!(one.bar(&c), one);
        assert_eq!(one.n_stat(), 1);
        assert_eq!(one.conjugate().n_stat(), 0);
        for n in 0..=2 {
            for m in enumerate_multipartitions(&c, n, Side::Character).unwrap() {
                assert_eq!(m.bar(&c).bar(&c), m);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let c = ctx(3, 2);
        for m in enumerate_multipartitions(&c, 2, Side::Character).unwrap() {
            let text = serde_json::to_string(&m).unwrap();
            let back: MultiPartition = serde_json::from_str(&text).unwrap();
            assert_eq!(back, m);
        }
        let s = MultiPartition::single(c.sigma().unwrap(), Partition::column(2));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"[["theta:1:2",[1,1]]]"#
        );
    }

    #[test]
    fn rejects_mixed_sides() {
        let c = ctx(3, 1);
        let e = c.central_element(0).unwrap();
        assert!(MultiPartition::from_entries(Side::Character, [(e, Partition::row(1))]).is_err());
        let t = c.trivial_character();
        assert!(MultiPartition::from_entries(
            Side::Character,
            [(t, Partition::row(1)), (t, Partition::row(1))]
        )
        .is_err());
    }
}
