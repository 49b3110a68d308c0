//! `GF(3^k)` with elements encoded as base-3 integers `Σ d_i 3^i`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FieldElt(pub u64);

#[derive(Clone, Debug)]
pub struct Field {
    n: u32,
    k: usize,
    q: u64,
    /// Low coefficients of the monic modulus, lowest degree first.
    modulus: Vec<u8>,
    sigma_exp: u64,
    /// Multiplication through discrete logs when the field is small.
    logs: Option<(Vec<u32>, Vec<u64>)>,
}

const TABLE_LIMIT: u64 = 1 << 20;

impl Field {
    /// `GF(q)` with `q = 3^(2n+1)`.
    pub fn ree(n: u32) -> Result<Self> {
        if n > 9 {
            return Err(Error::input("field parameter n must be at most 9"));
        }
        let k = 2 * n as usize + 1;
        let modulus = if k == 3 {
            // x^3 - x + 1
            vec![1, 2, 0]
        } else {
            least_irreducible(k)
        };
        let mut f = Field {
            n,
            k,
            q: 3u64.pow(k as u32),
            modulus,
            sigma_exp: 3u64.pow(n + 1),
            logs: None,
        };
        if f.q <= TABLE_LIMIT {
            f.logs = Some(f.build_logs());
        }
        Ok(f)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `m = 3^n`.
    pub fn m(&self) -> u64 {
        3u64.pow(self.n)
    }

    pub fn modulus(&self) -> Vec<u8> {
        let mut full = self.modulus.clone();
        full.push(1);
        full
    }

    pub fn zero(&self) -> FieldElt {
        FieldElt(0)
    }

    pub fn one(&self) -> FieldElt {
        FieldElt(1)
    }

    pub fn from_int(&self, v: i64) -> FieldElt {
        FieldElt(v.rem_euclid(3) as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElt> {
        (0..self.q).map(FieldElt)
    }

    pub fn check(&self, a: FieldElt) -> Result<FieldElt> {
        if a.0 < self.q {
            Ok(a)
        } else {
            Err(Error::input(format!("{} is not an element of GF({})", a.0, self.q)))
        }
    }

    fn digits(&self, a: FieldElt) -> Vec<u8> {
        let mut v = a.0;
        (0..self.k)
            .map(|_| {
                let d = (v % 3) as u8;
                v /= 3;
                d
            })
            .collect()
    }

    fn assemble(&self, d: &[u8]) -> FieldElt {
        FieldElt(d.iter().rev().fold(0u64, |acc, &x| acc * 3 + x as u64))
    }

    pub fn add(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % 3 + y % 3) % 3) * place;
            x /= 3;
            y /= 3;
            place *= 3;
        }
        FieldElt(out)
    }

    pub fn neg(&self, a: FieldElt) -> FieldElt {
        let (mut x, mut out, mut place) = (a.0, 0u64, 1u64);
        while x > 0 {
            out += ((3 - x % 3) % 3) * place;
            x /= 3;
            place *= 3;
        }
        FieldElt(out)
    }

    pub fn sub(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        if a.0 == 0 || b.0 == 0 {
            return FieldElt(0);
        }
        if let Some((log, exp)) = &self.logs {
            let s = (log[a.0 as usize] as u64 + log[b.0 as usize] as u64) % (self.q - 1);
            return FieldElt(exp[s as usize]);
        }
        self.mul_poly(a, b)
    }

    fn mul_poly(&self, a: FieldElt, b: FieldElt) -> FieldElt {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u8; 2 * self.k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % 3;
            }
        }
        for top in (self.k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            // x^k = -Σ modulus_i x^i
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = top - self.k + i;
                prod[idx] = (prod[idx] + 3 * 3 - c * m) % 3;
            }
        }
        self.assemble(&prod[..self.k])
    }

    pub fn mul_int(&self, c: i64, a: FieldElt) -> FieldElt {
        self.mul(self.from_int(c), a)
    }

    pub fn pow(&self, a: FieldElt, mut e: u64) -> FieldElt {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElt) -> Option<FieldElt> {
        (a.0 != 0).then(|| self.pow(a, self.q - 2))
    }

    /// `σ(x) = x^(3^(n+1))`, so that `σ(σ(x)) = x^3`.
    pub fn sigma(&self, a: FieldElt) -> FieldElt {
        self.pow(a, self.sigma_exp)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElt) -> u64 {
        let mut o = self.q - 1;
        for (p, _) in factor_u64(self.q - 1) {
            while o.is_multiple_of(p) && self.pow(a, o / p) == self.one() {
                o /= p;
            }
        }
        o
    }

    /// Least generator of the multiplicative group (by encoding).
    pub fn primitive_element(&self) -> FieldElt {
        (2..self.q)
            .map(FieldElt)
            .find(|&a| self.order(a) == self.q - 1)
            .unwrap_or(FieldElt(1))
    }

    fn build_logs(&self) -> (Vec<u32>, Vec<u64>) {
        let g = (2..self.q)
            .map(FieldElt)
            .find(|&a| {
                let mut x = a;
                let mut ord = 1;
                while x.0 != 1 {
                    x = self.mul_poly(x, a);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .unwrap_or(FieldElt(1));
        let mut log = vec![0u32; self.q as usize];
        let mut exp = vec![0u64; self.q as usize - 1];
        let mut x = FieldElt(1);
        for i in 0..self.q - 1 {
            exp[i as usize] = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_poly(x, g);
        }
        (log, exp)
    }
}

pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Least monic irreducible of degree `k` over `GF(3)`, ordered by base-3 encoding of the
/// lower coefficients.
fn least_irreducible(k: usize) -> Vec<u8> {
    if k == 1 {
        return vec![0];
    }
    let count = 3u64.pow(k as u32);
    (0..count)
        .map(|v| {
            let mut v = v;
            (0..k)
                .map(|_| {
                    let d = (v % 3) as u8;
                    v /= 3;
                    d
                })
                .collect::<Vec<u8>>()
        })
        .find(|low| {
            let mut f = low.clone();
            f.push(1);
            is_irreducible(&f)
        })
        .expect("irreducibles exist in every degree")
}

fn is_irreducible(f: &[u8]) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for v in 0..3u64.pow(d as u32) {
            let mut g: Vec<u8> = Vec::with_capacity(d + 1);
            let mut v = v;
            for _ in 0..d {
                g.push((v % 3) as u8);
                v /= 3;
            }
            g.push(1);
            if poly_rem(f, &g).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[u8], g: &[u8]) -> Vec<u8> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + 9 - c * gi % 3) % 3;
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_squared_is_cube_map() {
        for n in [0, 1] {
            let f = Field::ree(n).unwrap();
            for a in f.elements() {
                assert_eq!(f.sigma(f.sigma(a)), f.pow(a, 3));
            }
        }
    }

    #[test]
    fn table_and_polynomial_products_agree() {
        let f = Field::ree(1).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(f.mul(a, b), f.mul_poly(a, b));
            }
            if a.0 != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
        }
    }

    #[test]
    fn larger_fields_exist() {
        let f = Field::ree(2).unwrap();
        assert_eq!(f.q(), 243);
        assert_eq!(f.order(f.primitive_element()), 242);
        let a = FieldElt(17);
        assert_eq!(f.pow(a, 243), a);
    }
}
