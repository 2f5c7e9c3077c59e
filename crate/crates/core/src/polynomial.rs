//! Sparse polynomials with exact rational coefficients.
//!
//! Terms are kept strictly descending under the ordering the caller passes
//! to every operation; the zero polynomial has no terms.

use std::cmp::Ordering;
use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};
use crate::ordering::OrderingSpec;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl From<(Rational, Monomial)> for Term {
    fn from((coeff, mono): (Rational, Monomial)) -> Self {
        Term { coeff, mono }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn monomial(coeff: Rational, mono: Monomial) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term { coeff, mono }],
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::monomial(c, Monomial::one(nvars))
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zero coefficients.
    pub fn from_terms<I, T>(terms: I, ord: &OrderingSpec) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<Term>,
    {
        let mut raw: Vec<Term> = terms.into_iter().map(Into::into).collect();
        raw.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
        let p = Polynomial { terms: out };
        debug_assert!(p.is_canonical(ord));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn lt(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lc(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Largest total degree among the terms.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// Strictly descending, no zero coefficients, uniform dimension.
    pub fn is_canonical(&self, ord: &OrderingSpec) -> bool {
        self.terms
            .iter()
            .all(|t| !t.coeff.is_zero() && t.mono.nvars() == ord.nvars())
            && self
                .terms
                .windows(2)
                .all(|w| ord.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    /// Removes and returns the leading term.
    pub fn pop_lt(&mut self) -> Option<Term> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn push_smallest(&mut self, t: Term) {
        self.terms.push(t);
    }

    pub fn tail(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -t.coeff.clone(),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None => Polynomial::zero(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial, ord: &OrderingSpec) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                mono: t.mono.mul(m),
            })
            .collect();
        let mut p = Polynomial { terms };
        if !ord.is_admissible() {
            p.terms.sort_by(|a, b| ord.cmp(&b.mono, &a.mono));
        }
        p
    }

    pub fn mul_monomial(&self, m: &Monomial, ord: &OrderingSpec) -> Polynomial {
        self.mul_term(&Rational::one(), m, ord)
    }

    /// `self + c * m * other` by a single merge pass.
    pub fn add_scaled(&self, c: &Rational, m: &Monomial, other: &Polynomial, ord: &OrderingSpec) -> Polynomial {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let shifted = other.mul_term(c, m, ord);
        merge(&self.terms, &shifted.terms, ord)
    }

    pub fn sub_scaled(&self, c: &Rational, m: &Monomial, other: &Polynomial, ord: &OrderingSpec) -> Polynomial {
        self.add_scaled(&-c.clone(), m, other, ord)
    }

    pub fn add(&self, other: &Polynomial, ord: &OrderingSpec) -> Polynomial {
        merge(&self.terms, &other.terms, ord)
    }

    pub fn sub(&self, other: &Polynomial, ord: &OrderingSpec) -> Polynomial {
        merge(&self.terms, &other.neg().terms, ord)
    }

    pub fn mul(&self, other: &Polynomial, ord: &OrderingSpec) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add_scaled(&t.coeff, &t.mono, self, ord);
        }
        acc
    }

    /// Canonical text: `x^2 - 3/2*y^2`.
    pub fn render(&self, vars: &VarSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if t.mono.is_one() {
                write!(out, "{}", render_rational(&abs)).unwrap();
            } else if abs.is_one() {
                out.push_str(&t.mono.render(vars));
            } else {
                write!(out, "{}*{}", render_rational(&abs), t.mono.render(vars)).unwrap();
            }
        }
        out
    }
}

pub fn render_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn merge(a: &[Term], b: &[Term], ord: &OrderingSpec) -> Polynomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].coeff + &b[j].coeff;
                if !c.is_zero() {
                    out.push(Term {
                        coeff: c,
                        mono: a[i].mono.clone(),
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    let p = Polynomial { terms: out };
    debug_assert!(p.is_canonical(ord));
    p
}

/// The S-polynomial `(l/LT(f))*f - (l/LT(g))*g` with `l = lcm(LM(f), LM(g))`.
pub fn spoly(ord: &OrderingSpec, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (Some(tf), Some(tg)) = (f.lt(), g.lt()) else {
        return Err(Error::usage("S-polynomial of a zero polynomial"));
    };
    let l = tf.mono.lcm(&tg.mono);
    let uf = l.div(&tf.mono).expect("lcm is a multiple");
    let ug = l.div(&tg.mono).expect("lcm is a multiple");
    let left = f.mul_term(&tf.coeff.recip(), &uf, ord);
    Ok(left.sub_scaled(&tg.coeff.recip(), &ug, g, ord))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::OrderKind;

    fn lex_xy() -> OrderingSpec {
        OrderingSpec::new(OrderKind::Lex, VarSet::new(&["x", "y"]).unwrap())
    }

    fn poly(ord: &OrderingSpec, terms: &[(i64, i64, [u32; 2])]) -> Polynomial {
        Polynomial::from_terms(
            terms.iter().map(|(n, d, e)| (rat(*n, *d), Monomial::new(e.to_vec()))),
            ord,
        )
    }

    #[test]
    fn canonical_construction() {
        let o = lex_xy();
        let p = poly(&o, &[(1, 1, [0, 2]), (2, 1, [2, 0]), (-1, 1, [0, 2]), (3, 1, [1, 0])]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.lm(), Some(&Monomial::new(vec![2, 0])));
        assert!(p.is_canonical(&o));
        let z = poly(&o, &[(1, 1, [1, 1]), (-1, 1, [1, 1])]);
        assert!(z.is_zero());
    }

    #[test]
    fn spoly_worked_pair() {
        let o = lex_xy();
        let f = poly(&o, &[(1, 1, [2, 0]), (-3, 2, [0, 2])]);
        let g = poly(&o, &[(2, 1, [1, 1]), (3, 1, [0, 2])]);
        // y*f - (x/2)*g = -3/2*x*y^2 - 3/2*y^3
        let s = spoly(&o, &f, &g).unwrap();
        assert_eq!(s.render(o.vars()), "-3/2*x*y^2 - 3/2*y^3");
        assert!(spoly(&o, &f, &f).unwrap().is_zero());
    }

    #[test]
    fn spoly_coprime() {
        let o = lex_xy();
        let f = poly(&o, &[(1, 1, [2, 0]), (1, 1, [0, 0])]);
        let g = poly(&o, &[(1, 1, [0, 1]), (1, 1, [0, 0])]);
        // y*(x^2+1) - x^2*(y+1) = y - x^2
        assert_eq!(spoly(&o, &f, &g).unwrap().render(o.vars()), "-x^2 + y");
        assert!(spoly(&o, &f, &Polynomial::zero()).is_err());
    }

    #[test]
    fn rendering() {
        let o = lex_xy();
        let p = poly(&o, &[(1, 1, [2, 0]), (-3, 2, [0, 2])]);
        assert_eq!(p.render(o.vars()), "x^2 - 3/2*y^2");
        let q = poly(&o, &[(-1, 1, [1, 0]), (7, 3, [0, 0])]);
        assert_eq!(q.render(o.vars()), "-x + 7/3");
        assert_eq!(Polynomial::zero().render(o.vars()), "0");
    }

    #[test]
    fn arithmetic_stays_canonical() {
        let o = lex_xy();
        let f = poly(&o, &[(1, 1, [2, 0]), (-3, 2, [0, 2]), (1, 1, [0, 0])]);
        let g = poly(&o, &[(2, 1, [1, 1]), (3, 1, [0, 2])]);
        let prod = f.mul(&g, &o);
        assert!(prod.is_canonical(&o));
        assert_eq!(prod.lm(), Some(&Monomial::new(vec![3, 1])));
        let diff = prod.sub(&prod, &o);
        assert!(diff.is_zero());
        assert_eq!(f.monic().lc(), Some(&Rational::one()));
        assert_eq!(g.monic().render(o.vars()), "x*y + 3/2*y^2");
    }
}
