use num_bigint::BigInt;
use unitary_core::characters::degree;
use unitary_core::classes::group_order;
use unitary_core::symfunc::table::{char_table, DEFAULT_TABLE_BOUND};
use unitary_core::tori::TorusContext;
use unitary_core::{CharTable, Cyclotomic, Rational};

fn checked_table(q: u64, n: u32) -> CharTable {
    let ctx = TorusContext::new(q, n).unwrap();
    let t = char_table::<Rational>(&ctx, n, DEFAULT_TABLE_BOUND).unwrap();
    t.check_orthogonality().unwrap();
    let id = t.identity_column();
    let mut sum = BigInt::from(0);
    for (i, l) in t.rows().iter().enumerate() {
        let d = degree(&ctx, l).unwrap();
        assert_eq!(
            *t.at(i, id),
            Cyclotomic::from_scalar(t.field_modulus(), Rational::from_integer(d.clone()))
        );
        sum += &d * &d;
    }
    assert_eq!(sum, group_order(q, n));
    t
}

#[test]
fn even_characteristic_tables() {
    assert_eq!(checked_table(2, 2).rows().len(), 9);
    assert_eq!(checked_table(2, 3).rows().len(), 24);
    assert_eq!(checked_table(4, 2).rows().len(), 25);
}

#[test]
fn u2_over_f25() {
    assert_eq!(checked_table(5, 2).rows().len(), 36);
}

#[test]
fn trivial_row_is_constant() {
    let ctx = TorusContext::new(3, 2).unwrap();
    let t = checked_table(3, 2);
    // the trivial character is the unipotent label (1,1) and is 1 everywhere
    let triv = t
        .rows()
        .iter()
        .position(|l| {
            l.iter()
                .all(|(o, p)| *o == ctx.trivial_character() && p.is_column())
        })
        .unwrap();
    for v in t.row(triv) {
        assert!(v.is_one());
    }
}
