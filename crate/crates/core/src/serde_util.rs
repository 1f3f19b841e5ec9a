use num_bigint::BigInt;
use serde::Serializer;

/// Writes a big integer as a JSON number when it fits in 128 bits and as a
/// decimal string otherwise.
pub fn bigint_as_number<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i128::try_from(v) {
        Ok(x) => s.serialize_i128(x),
        Err(_) => s.collect_str(v),
    }
}
