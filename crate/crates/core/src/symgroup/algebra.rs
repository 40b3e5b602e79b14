use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Num, ToPrimitive};

use super::permutation::{transversal, Permutation};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Scalars a group-algebra element may carry.
pub trait Coefficient: Num + Clone + fmt::Debug {
    fn to_f64(&self) -> f64;
}

impl Coefficient for Rational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Coefficient for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// A finitely supported combination `Σ c_σ σ` in `C[S(m)]`.
///
/// Zero coefficients are never stored. Terms iterate in lexicographic order
/// of the permutations, so output is deterministic.
#[derive(Clone, PartialEq)]
pub struct GroupAlgebraElement<K = Rational> {
    degree: usize,
    terms: BTreeMap<Permutation, K>,
}

impl<K: Coefficient> GroupAlgebraElement<K> {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self::basis(Permutation::identity(degree))
    }

    /// The single term `1·σ`.
    pub fn basis(sigma: Permutation) -> Self {
        Self::from_terms(sigma.degree(), [(sigma, K::one())])
            .expect("single term has matching degree")
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Permutation, K)>,
    ) -> Result<Self> {
        let mut x = Self::zero(degree);
        for (sigma, c) in terms {
            if sigma.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: sigma.degree(),
                });
            }
            x.add_term(sigma, c);
        }
        Ok(x)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of group elements with a nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &K)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> K {
        self.terms.get(sigma).cloned().unwrap_or_else(K::zero)
    }

    fn add_term(&mut self, sigma: Permutation, c: K) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&sigma) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(sigma, sum);
        }
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&(K::zero() - K::one())))
    }

    pub fn scale(&self, factor: &K) -> Self {
        let mut out = Self::zero(self.degree);
        for (s, c) in &self.terms {
            out.add_term(s.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Bilinear extension of permutation composition.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p * q, a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    /// `g · x · g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Self> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: g.degree(),
            });
        }
        let g_inv = g.inverse();
        let terms = self
            .terms
            .iter()
            .map(|(s, c)| (&(g * s) * &g_inv, c.clone()));
        Self::from_terms(self.degree, terms)
    }

    /// Left multiplication by a group element, `g · x`.
    pub fn left_translate(&self, g: &Permutation) -> Result<Self> {
        Self::from_terms(
            self.degree,
            self.terms.iter().map(|(s, c)| (g * s, c.clone())),
        )
    }

    pub fn to_f64(&self) -> GroupAlgebraElement<f64> {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.to_f64()))
                .filter(|(_, c)| *c != 0.0)
                .collect(),
        }
    }

    /// Largest coefficient-wise difference, over the union of supports.
    pub fn max_abs_difference<L: Coefficient>(&self, other: &GroupAlgebraElement<L>) -> f64 {
        let mut worst: f64 = 0.0;
        for (s, c) in &self.terms {
            worst = worst.max((c.to_f64() - other.coefficient(s).to_f64()).abs());
        }
        for (s, c) in &other.terms {
            if !self.terms.contains_key(s) {
                worst = worst.max(c.to_f64().abs());
            }
        }
        worst
    }
}

impl<K: Coefficient> fmt::Debug for GroupAlgebraElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}·{s}")?;
        }
        Ok(())
    }
}

/// Multiplies two group-algebra elements exactly.
pub fn algebra_multiply<K: Coefficient>(
    x: &GroupAlgebraElement<K>,
    y: &GroupAlgebraElement<K>,
) -> Result<GroupAlgebraElement<K>> {
    x.multiply(y)
}

/// Jucys-Murphy element `J_m = Σ_{a<m} (a m)`.
pub fn jm_element(m: usize) -> Result<GroupAlgebraElement> {
    if m < 2 {
        return Err(Error::TooSmall {
            what: "m",
            min: 2,
            value: m,
        });
    }
    let terms = (1..m).map(|a| {
        (
            Permutation::transposition(m, a, m).expect("a < m"),
            Rational::from_integer(1.into()),
        )
    });
    GroupAlgebraElement::from_terms(m, terms)
}

/// Transversal element `Υ = Σ_k t_k` for the standard transversal.
pub fn transversal_element(m: usize) -> Result<GroupAlgebraElement> {
    if m < 1 {
        return Err(Error::TooSmall {
            what: "m",
            min: 1,
            value: m,
        });
    }
    GroupAlgebraElement::from_terms(
        m,
        transversal(m)
            .into_iter()
            .map(|t| (t, Rational::from_integer(1.into()))),
    )
}

/// Whether `h x h⁻¹ = x` for every `h ∈ S(m-1)`, checked on the generators
/// `s_1, …, s_{m-2}`.
pub fn conjugation_invariance_check<K: Coefficient>(
    x: &GroupAlgebraElement<K>,
    m: usize,
) -> Result<bool> {
    if x.degree() != m {
        return Err(Error::DegreeMismatch {
            expected: m,
            found: x.degree(),
        });
    }
    for i in 1..m.saturating_sub(1) {
        let s = Permutation::adjacent(m, i)?;
        if x.conjugate_by(&s)? != *x {
            return Ok(false);
        }
    }
    Ok(true)
}
