use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{AlgebraError, LeavittPathAlgebra, Monomial, Path, Scalar};

/// An element of `L_Q` as a finite combination of normal-form monomials `σ τ*`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct Element<S: Scalar> {
    pub(super) algebra: LeavittPathAlgebra,
    pub(super) terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Element<S> {
    pub(super) fn from_terms(algebra: LeavittPathAlgebra, terms: BTreeMap<Monomial, S>) -> Self {
        Element { algebra, terms }
    }

    pub fn algebra(&self) -> &LeavittPathAlgebra {
        &self.algebra
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_algebra(&self, other: &Self) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.algebra.inner, &other.algebra.inner)
            || self.algebra.quiver() == other.algebra.quiver()
        {
            Ok(())
        } else {
            Err(AlgebraError::QuiverMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Element::from_terms(self.algebra.clone(), terms))
    }

    /// Product in normal form.
    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_algebra(other)?;
        let alg = &self.algebra;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(m) = alg.monomial_product(m1, m2) {
                    alg.normalize_into(m, c1.clone() * c2.clone(), &mut terms);
                }
            }
        }
        Ok(Element::from_terms(alg.clone(), terms))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Element::from_terms(self.algebra.clone(), BTreeMap::new());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
            .collect();
        Element::from_terms(self.algebra.clone(), terms)
    }

    /// The involution `σ τ* -> τ σ*`, extended linearly.
    pub fn star(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.star(), c.clone()))
            .collect();
        Element::from_terms(self.algebra.clone(), terms)
    }

    /// Homogeneous components keyed by degree `len(σ) - len(τ)`.
    pub fn grading_components(&self) -> BTreeMap<i64, Element<S>> {
        let mut out: BTreeMap<i64, BTreeMap<Monomial, S>> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_default()
                .insert(m.clone(), c.clone());
        }
        out.into_iter()
            .map(|(d, t)| (d, Element::from_terms(self.algebra.clone(), t)))
            .collect()
    }

    /// `Some(d)` if every term has degree `d`; zero counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.algebra.one();
        for _ in 0..k {
            acc = acc.multiply(self).expect("same algebra");
        }
        acc
    }
}

pub(super) fn accumulate<S: Scalar>(terms: &mut BTreeMap<Monomial, S>, m: Monomial, c: S) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().clone() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl<S: Scalar> PartialEq for Element<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other).is_ok() && self.terms == other.terms
    }
}

impl<S: Scalar> Add for &Element<S> {
    type Output = Element<S>;
    fn add(self, rhs: &Element<S>) -> Element<S> {
        self.try_add(rhs).expect("elements of different algebras")
    }
}

impl<S: Scalar> Sub for &Element<S> {
    type Output = Element<S>;
    fn sub(self, rhs: &Element<S>) -> Element<S> {
        self.try_add(&-rhs).expect("elements of different algebras")
    }
}

impl<S: Scalar> Neg for &Element<S> {
    type Output = Element<S>;
    fn neg(self) -> Element<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul for &Element<S> {
    type Output = Element<S>;
    fn mul(self, rhs: &Element<S>) -> Element<S> {
        self.multiply(rhs).expect("elements of different algebras")
    }
}

/// Terms in monomial order; the vertex idempotents are shown as the unit `1` (scaled) when
/// they all carry the same coefficient.
impl<S: Scalar> fmt::Display for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let q = self.algebra.quiver();
        let nv = q.num_vertices();
        let unit_coeff = {
            let coeffs: Vec<&S> = (0..nv)
                .filter_map(|v| self.terms.get(&Monomial::vertex(v)))
                .collect();
            (coeffs.len() == nv && coeffs.windows(2).all(|w| w[0] == w[1]))
                .then(|| coeffs[0].clone())
        };
        let mut items: Vec<(S, Option<String>)> = Vec::new();
        if let Some(c) = &unit_coeff {
            items.push((c.clone(), None));
        }
        for (m, c) in &self.terms {
            if unit_coeff.is_some() && m.is_vertex() {
                continue;
            }
            items.push((c.clone(), Some(m.render(q))));
        }
        for (i, (c, mono)) in items.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match mono {
                None => write!(f, "{abs}")?,
                Some(m) if abs.is_one() => write!(f, "{m}")?,
                Some(m) => write!(f, "{abs} {m}")?,
            }
        }
        Ok(())
    }
}

impl LeavittPathAlgebra {
    /// The zero element.
    pub fn zero<S: Scalar>(&self) -> Element<S> {
        Element::from_terms(self.clone(), BTreeMap::new())
    }

    /// `1 = Σ_v e_v`.
    pub fn one<S: Scalar>(&self) -> Element<S> {
        self.scalar(S::one())
    }

    pub fn scalar<S: Scalar>(&self, c: S) -> Element<S> {
        let mut terms = BTreeMap::new();
        for v in 0..self.quiver().num_vertices() {
            accumulate(&mut terms, Monomial::vertex(v), c.clone());
        }
        Element::from_terms(self.clone(), terms)
    }

    pub fn vertex<S: Scalar>(&self, v: usize) -> Element<S> {
        self.monomial(Monomial::vertex(v))
    }

    pub fn vertex_by_id<S: Scalar>(&self, id: &str) -> Result<Element<S>, AlgebraError> {
        let v = self
            .quiver()
            .vertex_index(id)
            .ok_or_else(|| AlgebraError::UnknownVertex(id.to_string()))?;
        Ok(self.vertex(v))
    }

    pub fn arrow<S: Scalar>(&self, a: usize) -> Element<S> {
        let q = self.quiver();
        let p = Path::from_arrows(q, vec![a]).expect("single arrow");
        self.monomial(Monomial::new(p, Path::empty(q.arrow(a).target)).expect("ranges agree"))
    }

    pub fn arrow_by_id<S: Scalar>(&self, id: &str) -> Result<Element<S>, AlgebraError> {
        let a = self
            .quiver()
            .arrow_index(id)
            .ok_or_else(|| AlgebraError::UnknownArrow(id.to_string()))?;
        Ok(self.arrow(a))
    }

    /// The ghost arrow `a*`.
    pub fn ghost<S: Scalar>(&self, a: usize) -> Element<S> {
        self.arrow::<S>(a).star()
    }

    /// The path `σ` as an element (`σ e_{r(σ)}*`).
    pub fn path<S: Scalar>(&self, p: &Path) -> Element<S> {
        self.monomial(Monomial::new(p.clone(), Path::empty(p.end())).expect("ranges agree"))
    }

    /// A single monomial, rewritten to normal form.
    pub fn monomial<S: Scalar>(&self, m: Monomial) -> Element<S> {
        let mut terms = BTreeMap::new();
        self.normalize_into(m, S::one(), &mut terms);
        Element::from_terms(self.clone(), terms)
    }

    /// Sums `c * m` over an iterator, normalizing each monomial.
    pub fn combination<S: Scalar, I: IntoIterator<Item = (Monomial, S)>>(
        &self,
        items: I,
    ) -> Element<S> {
        let mut terms = BTreeMap::new();
        for (m, c) in items {
            self.normalize_into(m, c, &mut terms);
        }
        Element::from_terms(self.clone(), terms)
    }
}
