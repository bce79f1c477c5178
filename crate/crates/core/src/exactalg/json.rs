//! JSON schema for exact values.
//!
//! A numerator is an array of `{"q": int, "t": int, "c": "decimal"}` in
//! canonical term order; a denominator is an array of
//! `{"a": int, "b": int, "mult": int}` ordered by `(b, a)`.

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{Exp, LaurentPoly};
use super::rational::{DenomFactor, RationalFunction};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRecord {
    q: i64,
    t: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorRecord {
    a: i64,
    b: u32,
    mult: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalRecord {
    num: LaurentPoly,
    den: Vec<FactorRecord>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermRecord> = self
            .terms()
            .map(|(e, c)| TermRecord {
                q: e.q,
                t: e.t,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermRecord>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for t in terms {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(Exp::new(t.q, t.t), c);
        }
        Ok(p)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalRecord {
            num: self.num().clone(),
            den: self
                .den()
                .into_iter()
                .map(|f| FactorRecord {
                    a: f.a,
                    b: f.b,
                    mult: f.mult,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = RationalRecord::deserialize(d)?;
        let factors = rec
            .den
            .into_iter()
            .map(|f| DenomFactor::new(f.a, f.b, f.mult))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        RationalFunction::new(rec.num, factors).map_err(D::Error::custom)
    }
}
