//! Serde helpers that write big integers as plain JSON numbers when they fit
//! in 128 bits, and as decimal strings otherwise.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::Serializer;

pub fn biguint<S: Serializer>(v: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
    match v.to_u128() {
        Some(x) => ser.serialize_u128(x),
        None => ser.serialize_str(&v.to_string()),
    }
}

pub fn bigint<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    match v.to_i128() {
        Some(x) => ser.serialize_i128(x),
        None => ser.serialize_str(&v.to_string()),
    }
}

struct Big<'a>(&'a BigInt);

impl serde::Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        bigint(self.0, ser)
    }
}

/// `{"num": .., "den": ..}` in lowest terms.
pub fn rational<S: Serializer>(v: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
    let mut st = ser.serialize_struct("Rational", 2)?;
    st.serialize_field("num", &Big(v.numer()))?;
    st.serialize_field("den", &Big(v.denom()))?;
    st.end()
}
