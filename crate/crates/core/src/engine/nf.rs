use num_traits::Zero;

use crate::division::{select_smallest, DivisionSpec, Partition};
use crate::monomial::Monomial;
use crate::ordering::OrderingSpec;
use crate::polynomial::{Polynomial, Term};

/// Full involutive normal form of `f` modulo `basis`: every term with an
/// involutive divisor among the leading monomials is eliminated.
pub fn nf_full(f: &Polynomial, basis: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> Polynomial {
    let (gens, lms) = nonzero_with_lms(basis);
    let part = Partition::new(div, &lms);
    reduce_with(f, &gens, &lms, ord, |m| {
        select_smallest(ord, &lms, part.divisors(&lms, m))
    })
}

pub(crate) fn nonzero_with_lms(basis: &[Polynomial]) -> (Vec<&Polynomial>, Vec<Monomial>) {
    let gens: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let lms = gens.iter().map(|g| g.lm().unwrap().clone()).collect();
    (gens, lms)
}

/// Generic full reduction; `pick` returns the reducer index for a monomial.
pub(crate) fn reduce_with<F>(
    f: &Polynomial,
    gens: &[&Polynomial],
    lms: &[Monomial],
    ord: &OrderingSpec,
    pick: F,
) -> Polynomial
where
    F: Fn(&Monomial) -> Option<usize>,
{
    let mut h = f.clone();
    let mut r = Polynomial::zero();
    while let Some(lt) = h.lt().cloned() {
        match pick(&lt.mono) {
            Some(i) => {
                let u = lt.mono.div(&lms[i]).expect("reducer divides");
                let c = &lt.coeff / gens[i].lc().unwrap();
                h = h.sub_scaled(&c, &u, gens[i], ord);
            }
            None => {
                let Term { coeff, mono } = h.pop_lt().unwrap();
                debug_assert!(!coeff.is_zero());
                r.push_smallest(Term { coeff, mono });
            }
        }
    }
    debug_assert!(r.is_canonical(ord));
    r
}

/// Monic basis with every tail term reduced modulo the whole basis. For an
/// involutive basis this yields the unique autoreduced form.
pub fn autoreduce_tails(basis: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> Vec<Polynomial> {
    let monic: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).map(Polynomial::monic).collect();
    monic
        .iter()
        .map(|g| {
            let head = Polynomial::monomial(g.lc().unwrap().clone(), g.lm().unwrap().clone());
            head.add(&nf_full(&g.tail(), &monic, div, ord), ord)
        })
        .collect()
}
