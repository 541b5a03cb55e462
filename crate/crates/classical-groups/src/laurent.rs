//! Multivariate Laurent polynomials over the rationals.
//!
//! Terms are stored in a sorted map from exponent vector to nonzero
//! coefficient. Exponent vectors are canonicalized by trimming trailing
//! zeros, so the ring is effectively in countably many variables and
//! `zero`/`one` need no arity context. Units are exactly the single
//! terms c·t^a with c ≠ 0, which is what torus characters produce.

use crate::ring::{Rat, Ring};
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Laurent {
    terms: BTreeMap<Vec<i32>, Rat>,
}

impl Laurent {
    pub fn new(terms: Vec<(Vec<i32>, Rat)>) -> Self {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            if Zero::is_zero(&c) {
                continue;
            }
            let e = trim(e);
            let entry = map.entry(e).or_insert_with(<Rat as Ring>::zero);
            *entry = entry.add(&c);
        }
        map.retain(|_, c| !Zero::is_zero(c));
        Laurent { terms: map }
    }

    /// The variable t_k.
    pub fn var(k: usize) -> Self {
        Self::monomial_exp(&unit_exp(k, 1), Ring::one())
    }

    /// c · t^e for an explicit exponent vector.
    pub fn monomial_exp(e: &[i32], c: Rat) -> Self {
        Laurent::new(vec![(e.to_vec(), c)])
    }

    pub fn constant(c: Rat) -> Self {
        Laurent::new(vec![(vec![], c)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// If this is a single term c·t^e, return (e, c).
    pub fn as_monomial(&self) -> Option<(Vec<i32>, Rat)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((e.clone(), c.clone()))
        } else {
            None
        }
    }

    /// Exact evaluation at nonzero rational points (negative exponents
    /// use inverses).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc: Rat = Ring::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let base = point
                    .get(k)
                    .cloned()
                    .expect("evaluation point has too few coordinates");
                let p = Ring::pow(&base, exp.unsigned_abs());
                if exp > 0 {
                    term = term.mul(&p);
                } else {
                    term = term.mul(&p.inv().expect("evaluation at zero"));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

fn trim(mut e: Vec<i32>) -> Vec<i32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn unit_exp(k: usize, v: i32) -> Vec<i32> {
    let mut e = vec![0; k + 1];
    e[k] = v;
    e
}

fn add_exps(a: &[i32], b: &[i32]) -> Vec<i32> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| a.get(k).copied().unwrap_or(0) + b.get(k).copied().unwrap_or(0))
            .collect(),
    )
}

impl Ring for Laurent {
    fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }
    fn one() -> Self {
        Laurent::constant(Ring::one())
    }
    fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| Ring::zero());
            *entry = entry.add(c);
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        Laurent { terms }
    }
    fn neg(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vec<i32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = add_exps(e1, e2);
                let entry = terms.entry(e).or_insert_with(|| Ring::zero());
                *entry = entry.add(&c1.mul(c2));
            }
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        Laurent { terms }
    }
    fn inv(&self) -> Option<Self> {
        let (e, c) = self.as_monomial()?;
        let ci = c.inv()?;
        Some(Laurent::monomial_exp(
            &e.iter().map(|&x| -x).collect::<Vec<_>>(),
            ci,
        ))
    }
    fn from_int(n: i64) -> Self {
        Laurent::constant(Rat::from_int(n))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (k, &exp) in e.iter().enumerate() {
                if exp != 0 {
                    write!(f, "*t{}^{}", k + 1, exp)?;
                }
            }
        }
        Ok(())
    }
}
