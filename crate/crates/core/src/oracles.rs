//! Independent checks for computed bases: the ordinary normal form, the
//! pairwise S-polynomial test, the prolongation test for involutivity and a
//! cofactor-based test of signature admissibility.

use std::cmp::Ordering;

use crate::division::{select_smallest, DivisionSpec, Partition};
use crate::engine::nf_full;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::OrderingSpec;
use crate::polynomial::{spoly, Polynomial};
use crate::signature::{sig_cmp, Quadruple, Signature};

/// Ordinary full normal form: every term divisible by some leading monomial
/// is eliminated. Among several divisors the smallest monomial wins, then
/// the earliest.
pub fn buchberger_nf(f: &Polynomial, g: &[Polynomial], ord: &OrderingSpec) -> Polynomial {
    let gens: Vec<&Polynomial> = g.iter().filter(|p| !p.is_zero()).collect();
    let lms: Vec<Monomial> = gens.iter().map(|p| p.lm().unwrap().clone()).collect();
    crate::engine::reduce_with(f, &gens, &lms, ord, |m| {
        select_smallest(ord, &lms, (0..lms.len()).filter(|&i| lms[i].divides(m)))
    })
}

/// Buchberger's test over all pairs.
pub fn is_groebner(g: &[Polynomial], ord: &OrderingSpec) -> bool {
    let gens: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = spoly(ord, &gens[i], &gens[j]).expect("nonzero operands");
            if !buchberger_nf(&s, &gens, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Every nonmultiplicative prolongation has zero involutive normal form.
pub fn is_involutive(g: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> bool {
    let gens: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    let lms: Vec<Monomial> = gens.iter().map(|p| p.lm().unwrap().clone()).collect();
    let part = Partition::new(div, &lms);
    gens.iter().enumerate().all(|(i, p)| {
        part.nonmultiplicative(i).iter().all(|x| {
            let prolongation = p.mul_monomial(&Monomial::var(ord.nvars(), x), ord);
            nf_full(&prolongation, &gens, div, ord).is_zero()
        })
    })
}

/// Coefficient vector `(g_1, ..., g_k)` with `poly = sum g_i f_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorTrace {
    pub cofactors: Vec<Polynomial>,
}

impl CofactorTrace {
    pub fn from_quadruple(q: &Quadruple) -> Result<Self> {
        q.cofactors
            .clone()
            .map(|cofactors| CofactorTrace { cofactors })
            .ok_or_else(|| Error::usage("cofactor tracking was not enabled for this run"))
    }

    /// Largest `LM(g_i) e_i` over nonzero entries.
    pub fn leading_module_monomial(&self, ord: &OrderingSpec) -> Option<Signature> {
        let mut best: Option<Signature> = None;
        for (i, g) in self.cofactors.iter().enumerate() {
            let Some(m) = g.lm() else { continue };
            let s = Signature {
                mono: m.clone(),
                index: i + 1,
            };
            if best.as_ref().is_none_or(|b| sig_cmp(ord, &s, b) == Ordering::Greater) {
                best = Some(s);
            }
        }
        best
    }
}

/// Whether the leading module monomial of the trace is exactly `sig`.
pub fn admissibility_check(trace: &CofactorTrace, sig: &Signature, ord: &OrderingSpec) -> Result<bool> {
    if trace.cofactors.is_empty() {
        return Err(Error::usage("empty cofactor trace"));
    }
    Ok(trace.leading_module_monomial(ord).as_ref() == Some(sig))
}

/// Re-expands `sum g_i f_i` and compares with `poly`.
pub fn cofactor_identity_holds(
    trace: &CofactorTrace,
    generators: &[Polynomial],
    poly: &Polynomial,
    ord: &OrderingSpec,
) -> bool {
    if trace.cofactors.len() != generators.len() {
        return false;
    }
    let sum = trace
        .cofactors
        .iter()
        .zip(generators)
        .fold(Polynomial::zero(), |acc, (g, f)| acc.add(&g.mul(f, ord), ord));
    &sum == poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VarSet;
    use crate::ordering::OrderKind;
    use crate::polynomial::{rat, Term};

    fn setup() -> (VarSet, OrderingSpec) {
        let vars = VarSet::new(&["x", "y"]).unwrap();
        let ord = OrderingSpec::new(OrderKind::Lex, vars.clone());
        (vars, ord)
    }

    fn poly(ord: &OrderingSpec, terms: &[(i64, i64, [u32; 2])]) -> Polynomial {
        Polynomial::from_terms(
            terms.iter().map(|&(n, d, e)| Term {
                coeff: rat(n, d),
                mono: Monomial::new(e.to_vec()),
            }),
            ord,
        )
    }

    fn worked_basis(ord: &OrderingSpec) -> Vec<Polynomial> {
        vec![
            poly(ord, &[(1, 1, [1, 1]), (3, 2, [0, 2])]),
            poly(ord, &[(1, 1, [2, 0]), (-3, 2, [0, 2])]),
            poly(ord, &[(1, 1, [0, 3])]),
        ]
    }

    #[test]
    fn worked_basis_reduces_members() {
        let (_, ord) = setup();
        let g = worked_basis(&ord);
        assert!(buchberger_nf(&poly(&ord, &[(1, 1, [2, 1])]), &g, &ord).is_zero());
        let y = poly(&ord, &[(1, 1, [0, 1])]);
        assert_eq!(buchberger_nf(&y, &g, &ord), y);
        for p in &g {
            assert!(buchberger_nf(p, &g, &ord).is_zero());
        }
        assert!(is_groebner(&g, &ord));
    }

    #[test]
    fn groebner_rejects_nonbasis() {
        let (_, ord) = setup();
        let g = vec![
            poly(&ord, &[(1, 1, [1, 0])]),
            poly(&ord, &[(1, 1, [1, 1]), (1, 1, [0, 0])]),
        ];
        assert!(!is_groebner(&g, &ord));
        assert!(is_groebner(&g[..1], &ord));
    }

    #[test]
    fn involutive_examples() {
        let (vars, ord) = setup();
        let div = DivisionSpec::janet(&vars);
        let g = vec![poly(&ord, &[(1, 1, [1, 1])]), poly(&ord, &[(1, 1, [2, 0])])];
        assert!(is_involutive(&g, &div, &ord));
        let g = vec![poly(&ord, &[(1, 1, [2, 0])]), poly(&ord, &[(1, 1, [0, 2])])];
        assert!(!is_involutive(&g, &div, &ord));
    }

    #[test]
    fn admissibility_examples() {
        let (_, ord) = setup();
        let one = poly(&ord, &[(1, 1, [0, 0])]);
        let unit = CofactorTrace {
            cofactors: vec![Polynomial::zero(), one],
        };
        assert!(admissibility_check(&unit, &Signature::unit(2, 2), &ord).unwrap());
        let y = CofactorTrace {
            cofactors: vec![poly(&ord, &[(1, 1, [0, 1])]), Polynomial::zero()],
        };
        let sig = Signature {
            mono: Monomial::new(vec![0, 1]),
            index: 1,
        };
        assert!(admissibility_check(&y, &sig, &ord).unwrap());
        assert!(!admissibility_check(&y, &Signature::unit(2, 1), &ord).unwrap());
        let empty = CofactorTrace { cofactors: vec![] };
        assert!(admissibility_check(&empty, &sig, &ord).is_err());
    }

    #[test]
    fn identity_reexpansion() {
        let (_, ord) = setup();
        let f = worked_basis(&ord);
        let trace = CofactorTrace {
            cofactors: vec![poly(&ord, &[(1, 1, [0, 1])]), Polynomial::zero(), Polynomial::zero()],
        };
        let expected = f[0].mul_monomial(&Monomial::new(vec![0, 1]), &ord);
        assert!(cofactor_identity_holds(&trace, &f, &expected, &ord));
        assert!(!cofactor_identity_holds(&trace, &f, &f[0], &ord));
    }
}
