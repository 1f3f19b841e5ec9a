//! Full character tables of `U(n, F_{q^2})`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{classes, group_order, ClassData};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, MultiPartition};
use crate::scalar::Scalar;
use crate::symfunc::CharEngine;
use crate::tori::{Side, TorusContext};

/// Default cap on `(#classes)^2 * phi(L)`, the number of rational
/// coefficients a table holds.
pub const DEFAULT_TABLE_BOUND: u128 = 50_000_000;

/// Rows are irreducible characters, columns are classes, both in canonical
/// order.
#[derive(Clone, Debug)]
pub struct CharTable<S> {
    q: u64,
    n: u32,
    field: u64,
    rows: Vec<MultiPartition>,
    columns: Vec<ClassData>,
    values: Vec<Vec<Cyclotomic<S>>>,
}

impl<S: Scalar> CharTable<S> {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// The conductor `L` of the field holding every entry.
    pub fn field_modulus(&self) -> u64 {
        self.field
    }

    pub fn rows(&self) -> &[MultiPartition] {
        &self.rows
    }

    pub fn columns(&self) -> &[ClassData] {
        &self.columns
    }

    pub fn row_index(&self, lambda: &MultiPartition) -> Option<usize> {
        self.rows.binary_search(lambda).ok()
    }

    pub fn column_index(&self, mu: &MultiPartition) -> Option<usize> {
        self.columns.binary_search_by(|c| c.label.cmp(mu)).ok()
    }

    /// Entry `(i, j)`.
    pub fn at(&self, i: usize, j: usize) -> &Cyclotomic<S> {
        &self.values[i][j]
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic<S>] {
        &self.values[i]
    }

    /// `chi^lambda(mu)` by label.
    pub fn value(&self, lambda: &MultiPartition, mu: &MultiPartition) -> Option<&Cyclotomic<S>> {
        Some(&self.values[self.row_index(lambda)?][self.column_index(mu)?])
    }

    /// Index of the identity class.
    pub fn identity_column(&self) -> usize {
        self.columns
            .iter()
            .position(|c| {
                c.size == BigInt::from(1)
                    && c.label.iter().next().map(|(o, _)| o.min_exponent()) == Some(0)
            })
            .expect("the identity class is always present")
    }

    /// `sum_mu |K^mu| chi(mu) conj(psi(mu))`, which is `|G| delta` for
    /// irreducible rows.
    pub fn row_inner(&self, i: usize, j: usize) -> Cyclotomic<S> {
        let mut acc = Cyclotomic::zero(self.field);
        for (k, col) in self.columns.iter().enumerate() {
            let term = &self.values[i][k] * &self.values[j][k].conj();
            acc = &acc + &term.scale(&S::from_bigint(&col.size));
        }
        acc
    }

    /// `sum_lambda chi(mu) conj(chi(nu))`, which is `a_mu delta` for
    /// distinct classes.
    pub fn column_inner(&self, a: usize, b: usize) -> Cyclotomic<S> {
        let mut acc = Cyclotomic::zero(self.field);
        for row in &self.values {
            acc = &acc + &(&row[a] * &row[b].conj());
        }
        acc
    }

    /// Checks both orthogonality relations, returning the first failure.
    pub fn check_orthogonality(&self) -> Result<()> {
        let order = group_order(self.q, self.n);
        let k = self.rows.len();
        for i in 0..k {
            for j in i..k {
                let expect = if i == j {
                    S::from_bigint(&order)
                } else {
                    S::zero()
                };
                if self.row_inner(i, j) != Cyclotomic::from_scalar(self.field, expect) {
                    return Err(Error::Internal(format!(
                        "row orthogonality fails for {} and {}",
                        self.rows[i], self.rows[j]
                    )));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let expect = if a == b {
                    S::from_bigint(&self.columns[a].centralizer)
                } else {
                    S::zero()
                };
                if self.column_inner(a, b) != Cyclotomic::from_scalar(self.field, expect) {
                    return Err(Error::Internal(format!(
                        "column orthogonality fails for {} and {}",
                        self.columns[a].label, self.columns[b].label
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `(#classes)^2 * phi(L)`.
pub fn table_size_estimate(ctx: &TorusContext, n: u32) -> Result<u128> {
    let classes = enumerate_multipartitions(ctx, n, Side::Element)?.len() as u128;
    let field = crate::symfunc::common_field(ctx, n)?;
    Ok(classes * classes * crate::numtheory::totient(field) as u128)
}

/// The full table in degree `n`, refused when the size estimate exceeds
/// `bound`. Rows are computed in parallel on the current rayon pool.
pub fn char_table<S: Scalar>(ctx: &TorusContext, n: u32, bound: u128) -> Result<CharTable<S>> {
    let estimate = table_size_estimate(ctx, n)?;
    if estimate > bound {
        return Err(Error::ResourceBound { estimate, bound });
    }
    let engine = CharEngine::<S>::new(ctx, n)?;
    let rows = enumerate_multipartitions(ctx, n, Side::Character)?;
    let columns = classes(ctx, n)?;
    if rows.len() != columns.len() {
        return Err(Error::Internal(format!(
            "{} characters but {} classes",
            rows.len(),
            columns.len()
        )));
    }
    let field = engine.field_modulus();
    let values = rows
        .par_iter()
        .map(|lambda| {
            let row = engine.char_row(lambda)?;
            if let Some(stray) = row
                .keys()
                .find(|mu| columns.binary_search_by(|c| c.label.cmp(mu)).is_err())
            {
                return Err(Error::Internal(format!(
                    "{lambda} has a value on unknown class {stray}"
                )));
            }
            Ok(columns
                .iter()
                .map(|c| {
                    row.get(&c.label)
                        .cloned()
                        .unwrap_or_else(|| Cyclotomic::zero(field))
                })
                .collect())
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    Ok(CharTable {
        q: ctx.q(),
        n,
        field,
        rows,
        columns,
        values,
    })
}

#[derive(Serialize)]
struct JsonRow<'a> {
    label: &'a MultiPartition,
    values: Vec<String>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    q: u64,
    n: u32,
    field: String,
    columns: &'a [ClassData],
    rows: Vec<JsonRow<'a>>,
}

impl<S: Scalar> CharTable<S> {
    /// JSON export: columns carry class data, each row lists its values in
    /// column order as cyclotomic text over `Q(zeta_L)`.
    pub fn to_json(&self) -> serde_json::Value {
        let t = JsonTable {
            q: self.q,
            n: self.n,
            field: format!("Q(zeta_{})", self.field),
            columns: &self.columns,
            rows: self
                .rows
                .iter()
                .zip(&self.values)
                .map(|(label, vals)| JsonRow {
                    label,
                    values: vals.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        };
        serde_json::to_value(t).expect("table serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Cyclotomic as Cyc, Rational};

    #[test]
    fn cyclic_tables() {
        for q in [2u64, 3] {
            let ctx = TorusContext::new(q, 1).unwrap();
            let t = char_table::<Rational>(&ctx, 1, DEFAULT_TABLE_BOUND).unwrap();
            let m = q + 1;
            assert_eq!(t.rows().len() as u64, m);
            for i in 0..m as usize {
                for j in 0..m as usize {
                    assert_eq!(*t.at(i, j), Cyc::zeta_pow(m, (i * j) as i64));
                }
            }
            t.check_orthogonality().unwrap();
        }
    }

    #[test]
    fn refuses_oversized_tables() {
        let ctx = TorusContext::new(3, 2).unwrap();
        assert!(matches!(
            char_table::<Rational>(&ctx, 2, 10),
            Err(Error::ResourceBound { .. })
        ));
    }

    #[test]
    fn u2_f9_is_a_character_table() {
        let ctx = TorusContext::new(3, 2).unwrap();
        let t = char_table::<Rational>(&ctx, 2, DEFAULT_TABLE_BOUND).unwrap();
        assert_eq!(t.rows().len(), 16);
        t.check_orthogonality().unwrap();
        let id = t.identity_column();
        let degs: Vec<Cyc> = (0..16).map(|i| t.at(i, id).clone()).collect();
        let sum: Cyc = degs.iter().fold(Cyc::zero(8), |a, d| &a + &(d * d));
        assert_eq!(sum, Cyc::from_int(8, 96));
    }

    #[test]
    fn json_export_shape() {
        let ctx = TorusContext::new(3, 1).unwrap();
        let t = char_table::<Rational>(&ctx, 1, DEFAULT_TABLE_BOUND).unwrap();
        let v = t.to_json();
        assert_eq!(v["field"], "Q(zeta_4)");
        assert_eq!(v["rows"].as_array().unwrap().len(), 4);
        assert_eq!(v["rows"][1]["values"][1], "z");
    }
}
