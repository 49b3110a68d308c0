use serde::{Deserialize, Serialize};

use super::cyclotomic::{Accumulator, Cyclotomic, CyclotomicJson, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableClass {
    pub size: u128,
    pub rep_order: u64,
}

/// An ordinary character table with exact cyclotomic entries.
///
/// Rows are irreducible characters, columns are conjugacy classes. Column 0 is the
/// identity class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group_order: u128,
    pub classes: Vec<TableClass>,
    pub irreducibles: Vec<Vec<Cyclotomic>>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<u128> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn degrees(&self) -> Vec<i128> {
        self.irreducibles
            .iter()
            .map(|row| row[0].as_integer().unwrap_or(0))
            .collect()
    }

    /// `(1/|G|) Σ_k |C_k| a_k conj(b_k)`.
    pub fn inner_product(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        inner_product(a, b, &self.sizes(), self.group_order)
    }

    /// Checks shapes, degrees, and both orthogonality relations exactly.
    pub fn validate(&self) -> Result<()> {
        let r = self.classes.len();
        let bad = |m: String| Err(Error::Inconsistency(m));
        if r == 0 || self.irreducibles.len() != r {
            return bad(format!("{} irreducibles for {r} classes", self.irreducibles.len()));
        }
        if self.irreducibles.iter().any(|row| row.len() != r) {
            return bad("ragged character table".into());
        }
        if self.classes[0].size != 1 {
            return bad("first class must be the identity".into());
        }
        if self.classes.iter().map(|c| c.size).sum::<u128>() != self.group_order {
            return bad("class sizes do not sum to the group order".into());
        }
        let mut sq = 0i128;
        for (i, d) in self.degrees().into_iter().enumerate() {
            if d <= 0 {
                return bad(format!("degree of row {i} is not a positive integer"));
            }
            sq += d * d;
        }
        if sq as u128 != self.group_order {
            return bad(format!("squared degrees sum to {sq}, not {}", self.group_order));
        }
        let sizes = self.sizes();
        let conj: Vec<Vec<Cyclotomic>> = self
            .irreducibles
            .iter()
            .map(|row| row.iter().map(Cyclotomic::conj).collect())
            .collect();
        for i in 0..r {
            for j in i..r {
                let s = weighted_sum(&self.irreducibles[i], &conj[j], &sizes);
                let want = if i == j { self.group_order as i128 } else { 0 };
                if s.as_integer() != Some(want) {
                    return bad(format!("rows {i} and {j} are not orthogonal"));
                }
            }
        }
        for k in 0..r {
            for l in k..r {
                let mut acc = Accumulator::for_values(
                    self.irreducibles.iter().map(|row| &row[k]).chain(conj.iter().map(|row| &row[l])),
                );
                for i in 0..r {
                    acc.add_product(&self.irreducibles[i][k], &conj[i][l], Rat::from_integer(1));
                }
                let s = acc.finish();
                let want = if k == l {
                    Rat::new(self.group_order as i128, sizes[k] as i128)
                } else {
                    Rat::from_integer(0)
                };
                if s.as_rational() != Some(want) {
                    return bad(format!("columns {k} and {l} are not orthogonal"));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> CharacterTableJson {
        CharacterTableJson {
            order: self.group_order.to_string(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    size: c.size.to_string(),
                    rep_order: c.rep_order,
                })
                .collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|row| row.iter().map(CyclotomicJson::from).collect())
                .collect(),
        }
    }

    /// Imports a table and validates it.
    pub fn from_json(j: &CharacterTableJson) -> Result<Self> {
        let num = |s: &str| -> Result<u128> {
            s.parse()
                .map_err(|_| Error::input(format!("bad integer {s:?}")))
        };
        let table = CharacterTable {
            group_order: num(&j.order)?,
            classes: j
                .classes
                .iter()
                .map(|c| {
                    Ok(TableClass {
                        size: num(&c.size)?,
                        rep_order: c.rep_order,
                    })
                })
                .collect::<Result<_>>()?,
            irreducibles: j
                .irreducibles
                .iter()
                .map(|row| row.iter().map(Cyclotomic::try_from).collect())
                .collect::<Result<_>>()?,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("table serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        CharacterTable::from_json(&serde_json::from_str(text)?)
    }
}

/// Wire format. Integers are strings so that large orders survive any JSON reader.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub order: String,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<Vec<CyclotomicJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    #[serde(deserialize_with = "string_or_number")]
    pub size: String,
    pub rep_order: u64,
}

fn string_or_number<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<String, D::Error> {
    match serde_json::Value::deserialize(d)? {
        serde_json::Value::String(s) => Ok(s),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(serde::de::Error::custom(format!("expected integer, got {other}"))),
    }
}

/// `Σ_k w_k a_k b_k` without the conjugation.
pub(crate) fn weighted_sum(a: &[Cyclotomic], b: &[Cyclotomic], weights: &[u128]) -> Cyclotomic {
    let mut acc = Accumulator::for_values(a.iter().chain(b));
    for ((x, y), &w) in a.iter().zip(b).zip(weights) {
        acc.add_product(x, y, Rat::from_integer(w as i128));
    }
    acc.finish()
}

/// `(1/order) Σ_k sizes_k a_k conj(b_k)`.
pub fn inner_product(a: &[Cyclotomic], b: &[Cyclotomic], sizes: &[u128], order: u128) -> Cyclotomic {
    let conj: Vec<Cyclotomic> = b.iter().map(Cyclotomic::conj).collect();
    weighted_sum(a, &conj, sizes).scale(Rat::new(1, order as i128))
}
