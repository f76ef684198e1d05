//! Sparse multivariate polynomials with integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exponent vector aligned with the owning polynomial's variable list.
/// Ordered so that iteration runs through terms in graded-lex order,
/// leading term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    /// The zero polynomial over a fixed variable order. Sums and products
    /// keep the left operand's order and append new variables.
    pub fn zero_in<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = MultiPoly::zero();
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial(Vec::new()), c);
        }
        p
    }

    pub fn var(name: &str) -> Self {
        MultiPoly {
            vars: vec![name.to_string()],
            terms: BTreeMap::from([(Monomial(vec![1]), BigInt::one())]),
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    /// Variables with a positive exponent in some term.
    pub fn occurring(&self) -> Vec<&str> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].as_str())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn with_vars(&self, vars: &[String]) -> MultiPoly {
        if vars == self.vars.as_slice() {
            return self.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; vars.len()];
                for (i, &x) in m.0.iter().enumerate() {
                    e[pos[i]] = x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        (self.with_vars(&vars), other.with_vars(&vars))
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut x, y) = self.aligned(other);
        for (m, c) in y.terms {
            x.add_term(m, c);
        }
        x
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        let slot = self.terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (x, y) = self.aligned(other);
        let mut out = MultiPoly {
            vars: x.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                let e = mx.0.iter().zip(&my.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), cx * cy);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Replaces the named variable by an integer.
    pub fn substitute(&self, name: &str, value: &BigInt) -> MultiPoly {
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return self.clone();
        };
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = std::mem::replace(&mut e[i], 0);
            out.add_term(Monomial(e), c * value.pow(k));
        }
        out
    }

    /// Value at an integer point; variables missing from `point` count as 0.
    pub fn eval(&self, point: &dyn Fn(&str) -> Option<BigInt>) -> BigInt {
        let values: Vec<BigInt> = self
            .vars
            .iter()
            .map(|v| point(v).unwrap_or_default())
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(&values)
                    .fold(c.clone(), |acc, (&e, x)| acc * x.pow(e))
            })
            .sum()
    }

    /// Value reduced into `[0, p)`.
    pub fn eval_mod(&self, p: u64, point: &dyn Fn(&str) -> Option<u64>) -> u64 {
        let v = self.eval(&|name| point(name).map(BigInt::from));
        v.mod_floor(&BigInt::from(p)).to_u64().expect("reduced")
    }

    /// `Some(c)` when the polynomial is `c · name` exactly.
    pub fn as_multiple_of(&self, name: &str) -> Option<BigInt> {
        let i = self.vars.iter().position(|v| v == name)?;
        let (m, c) = self.terms.iter().next()?;
        let single = self.terms.len() == 1
            && m.0.iter().enumerate().all(|(j, &e)| e == u32::from(j == i));
        single.then(|| c.clone())
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (x, y) = self.aligned(other);
        x.terms == y.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| match e {
                    1 => self.vars[i].clone(),
                    _ => format!("{}^{}", self.vars[i], e),
                })
                .collect();
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
