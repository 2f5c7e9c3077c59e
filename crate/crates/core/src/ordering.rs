//! Monomial orderings: lex, degrevlex and the antigraded lex ordering.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Lower total degree is greater; ties broken by lex. Not admissible.
    Alex,
}

impl OrderKind {
    pub fn is_admissible(self) -> bool {
        !matches!(self, OrderKind::Alex)
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
            OrderKind::Alex => "alex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            "alex" => Ok(OrderKind::Alex),
            other => Err(Error::usage(format!("unknown ordering '{other}'"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderingSpec {
    kind: OrderKind,
    vars: VarSet,
}

impl OrderingSpec {
    pub fn new(kind: OrderKind, vars: VarSet) -> Self {
        OrderingSpec { kind, vars }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.kind.is_admissible()
    }

    /// The same variables under a different ordering kind.
    pub fn with_kind(&self, kind: OrderKind) -> OrderingSpec {
        OrderingSpec {
            kind,
            vars: self.vars.clone(),
        }
    }

    /// Compares two monomials of the declared dimension.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| self.revlex(a, b)),
            OrderKind::Alex => b.degree().cmp(&a.degree()).then_with(|| self.lex(a, b)),
        }
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.vars.priority() {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    // Least significant variable decides; the smaller exponent wins.
    fn revlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.vars.priority().iter().rev() {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    pub fn greater(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Greater
    }
}

impl fmt::Debug for OrderingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({:?})", self.kind, self.vars)
    }
}

/// Checked comparison for callers holding monomials of unknown provenance.
pub fn mono_cmp(spec: &OrderingSpec, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != spec.nvars() || b.nvars() != spec.nvars() {
        return Err(Error::usage(format!(
            "monomial dimension mismatch: ordering has {} variables",
            spec.nvars()
        )));
    }
    Ok(spec.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::monomials_up_to;

    fn xy(kind: OrderKind) -> OrderingSpec {
        OrderingSpec::new(kind, VarSet::new(&["x", "y"]).unwrap())
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_examples() {
        let lex = xy(OrderKind::Lex);
        assert_eq!(mono_cmp(&lex, &m(&[2, 1]), &m(&[1, 2])).unwrap(), Ordering::Greater);
        assert_eq!(mono_cmp(&lex, &m(&[1, 1]), &m(&[1, 1])).unwrap(), Ordering::Equal);
        assert_eq!(lex.cmp(&m(&[0, 5]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn alex_prefers_low_degree() {
        let alex = xy(OrderKind::Alex);
        assert_eq!(alex.cmp(&Monomial::one(2), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(alex.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(alex.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn degrevlex_examples() {
        let v = VarSet::new(&["x", "y", "z"]).unwrap();
        let o = OrderingSpec::new(OrderKind::DegRevLex, v);
        // x*z vs y^2: last variable z, x*z has more z so it is smaller
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[2, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[2, 0, 0])), Ordering::Less);
    }

    #[test]
    fn priority_reverses_lex() {
        let v = VarSet::with_priority(&["x", "y"], &[1, 0]).unwrap();
        let o = OrderingSpec::new(OrderKind::Lex, v);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(mono_cmp(&xy(OrderKind::Lex), &m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn total_order_and_compatibility_exhaustive() {
        for n in 1..=3 {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let vars = VarSet::new(&names).unwrap();
            let all = monomials_up_to(n, 4);
            for kind in [OrderKind::Lex, OrderKind::DegRevLex, OrderKind::Alex] {
                let o = OrderingSpec::new(kind, vars.clone());
                for a in &all {
                    for b in &all {
                        let ab = o.cmp(a, b);
                        assert_eq!(ab, o.cmp(b, a).reverse());
                        assert_eq!(ab == Ordering::Equal, a == b);
                        for c in &all {
                            if ab == Ordering::Less && o.cmp(b, c) == Ordering::Less {
                                assert_eq!(o.cmp(a, c), Ordering::Less);
                            }
                            if kind.is_admissible() {
                                assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), ab);
                            }
                        }
                    }
                }
                let mut sorted = all.clone();
                sorted.sort_by(|a, b| o.cmp(a, b));
                for w in sorted.windows(2) {
                    assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Less);
                }
                if kind.is_admissible() {
                    assert!(sorted[0].is_one());
                } else {
                    assert!(sorted.last().unwrap().is_one());
                }
            }
        }
    }
}
