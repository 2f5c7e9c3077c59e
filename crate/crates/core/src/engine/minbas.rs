use std::cmp::Ordering;

use crate::division::{DivisionSpec, Partition};
use crate::monomial::Monomial;
use crate::ordering::OrderingSpec;
use crate::polynomial::Polynomial;

/// Extracts the minimal involutive basis contained in the involutive basis
/// `h`: candidates are taken smallest leading monomial first and kept unless
/// already covered by the multiplicative cone of a kept element.
///
/// Later insertions can shrink the cones of earlier elements (Thomas
/// division does this), so after every admission the scan restarts from the
/// smallest candidate not yet kept.
pub fn min_bas(h: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> Vec<Polynomial> {
    let mut pending: Vec<(usize, &Polynomial)> = h.iter().enumerate().filter(|(_, p)| !p.is_zero()).collect();
    // stable: equal leading monomials keep input order
    pending.sort_by(|a, b| match ord.cmp(a.1.lm().unwrap(), b.1.lm().unwrap()) {
        Ordering::Equal => a.0.cmp(&b.0),
        o => o,
    });
    let mut kept = vec![false; pending.len()];
    let mut kept_lms: Vec<Monomial> = Vec::new();
    loop {
        let part = Partition::new(div, &kept_lms);
        let uncovered = (0..pending.len())
            .find(|&k| !kept[k] && part.divisors(&kept_lms, pending[k].1.lm().unwrap()).next().is_none());
        match uncovered {
            Some(k) => {
                kept[k] = true;
                kept_lms.push(pending[k].1.lm().unwrap().clone());
            }
            None => break,
        }
    }
    pending
        .iter()
        .zip(kept)
        .filter(|(_, keep)| *keep)
        .map(|((_, p), _)| (*p).clone())
        .collect()
}
