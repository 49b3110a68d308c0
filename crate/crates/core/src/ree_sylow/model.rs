use serde::Serialize;

use super::field::{Field, FieldElt};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Triple {
    pub x: FieldElt,
    pub y: FieldElt,
    pub z: FieldElt,
}

impl Triple {
    pub fn new(x: u64, y: u64, z: u64) -> Self {
        Triple {
            x: FieldElt(x),
            y: FieldElt(y),
            z: FieldElt(z),
        }
    }
}

/// Third-coordinate correction term of the product.
///
/// `Nominal` is `−x₁σ(x₁)x₂`. It is associative only when `σ` is trivial, that is for
/// `q = 3`. `Associative` replaces it with `+x₁x₂σ(x₂)`, which gives a group for every
/// `q` and agrees with the other coordinates, the inverse formula and the order-9 law.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductLaw {
    #[default]
    Nominal,
    Associative,
}

impl std::str::FromStr for ProductLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nominal" => Ok(ProductLaw::Nominal),
            "associative" => Ok(ProductLaw::Associative),
            _ => Err(Error::input(format!("unknown product law {s:?}"))),
        }
    }
}

/// The Sylow 3-subgroup of `R(q)` as triples over `GF(q)`.
#[derive(Clone, Debug)]
pub struct PModel {
    pub field: Field,
    pub law: ProductLaw,
}

impl PModel {
    pub fn new(n: u32) -> Result<Self> {
        Self::with_law(n, ProductLaw::Nominal)
    }

    pub fn with_law(n: u32, law: ProductLaw) -> Result<Self> {
        Ok(PModel { field: Field::ree(n)?, law })
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn identity(&self) -> Triple {
        Triple::new(0, 0, 0)
    }

    pub fn triple(&self, x: u64, y: u64, z: u64) -> Result<Triple> {
        let f = &self.field;
        Ok(Triple {
            x: f.check(FieldElt(x))?,
            y: f.check(FieldElt(y))?,
            z: f.check(FieldElt(z))?,
        })
    }

    /// Decodes `0 ≤ i < q³` as `(i mod q, (i / q) mod q, i / q²)`.
    pub fn element(&self, i: u64) -> Triple {
        let q = self.q();
        Triple::new(i % q, (i / q) % q, i / (q * q))
    }

    pub fn order(&self) -> u64 {
        self.q().pow(3)
    }

    pub fn in_center(&self, t: &Triple) -> bool {
        t.x.0 == 0 && t.y.0 == 0
    }

    pub fn in_derived(&self, t: &Triple) -> bool {
        t.x.0 == 0
    }

    /// `(x₁+x₂, y₁+y₂+x₁σ(x₂), z₁+z₂−x₁y₂+y₁x₂+t)` with `t` set by [`ProductLaw`].
    pub fn mul(&self, a: &Triple, b: &Triple) -> Triple {
        let f = &self.field;
        let x = f.add(a.x, b.x);
        let y = f.add(f.add(a.y, b.y), f.mul(a.x, f.sigma(b.x)));
        let z = f.add(f.add(a.z, b.z), f.sub(f.mul(a.y, b.x), f.mul(a.x, b.y)));
        let z = match self.law {
            ProductLaw::Nominal => f.sub(z, f.mul(f.mul(a.x, f.sigma(a.x)), b.x)),
            ProductLaw::Associative => f.add(z, f.mul(f.mul(a.x, b.x), f.sigma(b.x))),
        };
        Triple { x, y, z }
    }

    /// Closed-form inverse `(−a, −b+aσ(a), −c)`.
    pub fn inv(&self, t: &Triple) -> Triple {
        let f = &self.field;
        Triple {
            x: f.neg(t.x),
            y: f.add(f.neg(t.y), f.mul(t.x, f.sigma(t.x))),
            z: f.neg(t.z),
        }
    }

    pub fn pow(&self, t: &Triple, e: u64) -> Triple {
        (0..e).fold(self.identity(), |acc, _| self.mul(&acc, t))
    }

    /// Order by repeated multiplication; elements have order 1, 3 or 9.
    pub fn element_order(&self, t: &Triple) -> u64 {
        let mut acc = *t;
        let mut o = 1;
        while acc != self.identity() {
            acc = self.mul(&acc, t);
            o += 1;
        }
        o
    }

    /// Inverse from the definition: `t^(o-1)`.
    pub fn inv_by_powers(&self, t: &Triple) -> Triple {
        self.pow(t, self.element_order(t) - 1)
    }

    /// `g⁻¹ h g` by three multiplications, with the inverse taken from powers.
    pub fn conj(&self, h: &Triple, g: &Triple) -> Triple {
        self.mul(&self.mul(&self.inv_by_powers(g), h), g)
    }

    /// Closed form `(x, y+xσ(a)−aσ(x), z−2xb+2ya−axσ(x)+axσ(a))` for `h = (x,y,z)`, `g = (a,b,c)`.
    pub fn conj_closed(&self, h: &Triple, g: &Triple) -> Triple {
        let f = &self.field;
        let (x, y, z) = (h.x, h.y, h.z);
        let (a, b) = (g.x, g.y);
        let y2 = f.sub(f.add(y, f.mul(x, f.sigma(a))), f.mul(a, f.sigma(x)));
        let ax = f.mul(a, x);
        let mut z2 = f.sub(z, f.mul_int(2, f.mul(x, b)));
        z2 = f.add(z2, f.mul_int(2, f.mul(y, a)));
        z2 = f.sub(z2, f.mul(ax, f.sigma(x)));
        z2 = f.add(z2, f.mul(ax, f.sigma(a)));
        Triple { x, y: y2, z: z2 }
    }

    pub fn commutator(&self, a: &Triple, b: &Triple) -> Triple {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }
}

/// Action of `w ∈ GF(q)^*` on triples.
pub trait TripleAction {
    fn apply(&self, model: &PModel, w: FieldElt, t: &Triple) -> Triple;
}

/// `w·(x,y,z) = (wx, w^(σ+1) y, w^(σ+2) z)` with `w^σ = σ(w)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DiagonalAction;

impl TripleAction for DiagonalAction {
    fn apply(&self, model: &PModel, w: FieldElt, t: &Triple) -> Triple {
        let f = &model.field;
        let ws = f.sigma(w);
        let w1 = f.mul(w, ws);
        let w2 = f.mul(w1, w);
        Triple {
            x: f.mul(w, t.x),
            y: f.mul(w1, t.y),
            z: f.mul(w2, t.z),
        }
    }
}

/// An action law applied by a fixed field element, checked to respect products.
pub struct WAction<'a, A: TripleAction> {
    pub law: &'a A,
    pub w: FieldElt,
}

impl<'a, A: TripleAction> WAction<'a, A> {
    /// Validates the homomorphism property on the given pairs.
    pub fn validated(
        model: &PModel,
        law: &'a A,
        w: FieldElt,
        pairs: impl IntoIterator<Item = (Triple, Triple)>,
    ) -> Result<Self> {
        if w.0 == 0 || w.0 >= model.q() {
            return Err(Error::input("w must be a nonzero field element"));
        }
        for (a, b) in pairs {
            let lhs = law.apply(model, w, &model.mul(&a, &b));
            let rhs = model.mul(&law.apply(model, w, &a), &law.apply(model, w, &b));
            if lhs != rhs {
                return Err(Error::ActionInvalid(format!(
                    "w = {} does not respect the product of {a:?} and {b:?}",
                    w.0
                )));
            }
        }
        let hits_identity = law.apply(model, w, &model.identity()) == model.identity();
        if !hits_identity {
            return Err(Error::ActionInvalid("identity is not fixed".into()));
        }
        Ok(WAction { law, w })
    }

    pub fn apply(&self, model: &PModel, t: &Triple) -> Triple {
        self.law.apply(model, self.w, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples_over_gf3() {
        let p = PModel::new(0).unwrap();
        let e = Triple::new(1, 0, 0);
        assert_eq!(p.mul(&e, &e), Triple::new(2, 1, 2));
        let a = Triple::new(1, 2, 0);
        assert_eq!(p.inv(&a), Triple::new(2, 2, 0));
        assert_eq!(p.mul(&a, &Triple::new(2, 2, 0)), p.identity());
        let h = Triple::new(0, 1, 0);
        assert_eq!(p.conj(&h, &e), Triple::new(0, 1, 2));
        assert_eq!(p.conj_closed(&h, &e), Triple::new(0, 1, 2));
        assert_eq!(p.pow(&e, 3), Triple::new(0, 0, 2));
        assert_eq!(p.element_order(&p.identity()), 1);
    }

    #[test]
    fn diagonal_action_on_gf3_center() {
        let p = PModel::new(0).unwrap();
        let law = DiagonalAction;
        let pairs: Vec<_> = (0..27)
            .flat_map(|i| (0..27).map(move |j| (i, j)))
            .map(|(i, j)| (p.element(i), p.element(j)))
            .collect();
        let act = WAction::validated(&p, &law, FieldElt(2), pairs).unwrap();
        assert_eq!(act.apply(&p, &Triple::new(0, 0, 1)), Triple::new(0, 0, 2));
    }

    #[test]
    fn bad_action_is_rejected() {
        struct Scale;
        impl TripleAction for Scale {
            fn apply(&self, m: &PModel, w: FieldElt, t: &Triple) -> Triple {
                let f = &m.field;
                Triple {
                    x: f.mul(w, t.x),
                    y: f.mul(w, t.y),
                    z: f.mul(w, t.z),
                }
            }
        }
        let p = PModel::new(1).unwrap();
        let pairs = (0..200).map(|i| (p.element(i * 97 + 5), p.element(i * 31 + 11)));
        let w = p.field.primitive_element();
        assert!(matches!(
            WAction::validated(&p, &Scale, w, pairs),
            Err(Error::ActionInvalid(_))
        ));
    }
}
