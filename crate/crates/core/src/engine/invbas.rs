use std::collections::HashSet;
use std::time::Instant;

use super::{autoreduce_tails, min_bas, nf_full, Basis, Stats};
use crate::division::{DivisionSpec, Partition};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarMask};
use crate::ordering::OrderingSpec;
use crate::polynomial::Polynomial;

/// Minimal involutive basis by the criterion-free completion loop.
pub fn inv_bas(f: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> Result<Basis> {
    inv_bas_with_stats(f, div, ord).map(|(b, _)| b)
}

struct Pending {
    items: Vec<(u64, Polynomial)>,
    members: HashSet<Polynomial>,
    seq: u64,
}

impl Pending {
    fn push(&mut self, p: Polynomial) {
        let p = p.monic();
        if self.members.insert(p.clone()) {
            self.items.push((self.seq, p));
            self.seq += 1;
        }
    }

    /// Smallest leading monomial, then the oldest. Under an admissible
    /// ordering that monomial has no proper divisor among the rest.
    fn pop(&mut self, ord: &OrderingSpec) -> Option<Polynomial> {
        let best = (0..self.items.len()).min_by(|&a, &b| {
            let (sa, pa) = &self.items[a];
            let (sb, pb) = &self.items[b];
            ord.cmp(pa.lm().unwrap(), pb.lm().unwrap()).then(sa.cmp(sb))
        })?;
        let (_, p) = self.items.swap_remove(best);
        self.members.remove(&p);
        Some(p)
    }
}

pub fn inv_bas_with_stats(f: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> Result<(Basis, Stats)> {
    if f.is_empty() {
        return Err(Error::usage("empty input system"));
    }
    if f.iter().any(Polynomial::is_zero) {
        return Err(Error::usage("zero polynomial in input"));
    }
    if !ord.is_admissible() {
        return Err(Error::usage("the term ordering must be admissible"));
    }
    let started = Instant::now();
    let mut stats = Stats::default();
    let mut q = Pending {
        items: Vec::new(),
        members: HashSet::new(),
        seq: 0,
    };
    for p in f {
        stats.max_deg = stats.max_deg.max(p.total_degree());
        q.push(p.clone());
    }
    let mut g: Vec<Polynomial> = vec![q.pop(ord).unwrap()];

    while let Some(p) = q.pop(ord) {
        let h = nf_full(&p, &g, div, ord);
        if h.is_zero() {
            stats.reds += 1;
            continue;
        }
        let h = h.monic();
        stats.max_deg = stats.max_deg.max(h.total_degree());
        let lm_h = h.lm().unwrap().clone();
        let (displaced, kept): (Vec<Polynomial>, Vec<Polynomial>) = g.into_iter().partition(|x| {
            let lm = x.lm().unwrap();
            lm != &lm_h && lm_h.divides(lm)
        });
        g = kept;
        for x in displaced {
            q.push(x);
        }
        g.push(h);
        let lms: Vec<Monomial> = g.iter().map(|x| x.lm().unwrap().clone()).collect();
        let part = Partition::new(div, &lms);
        for (i, x) in g.iter().enumerate() {
            let nm: VarMask = part.nonmultiplicative(i);
            for v in nm.iter() {
                let prolongation = x.mul_monomial(&Monomial::var(ord.nvars(), v), ord);
                stats.max_deg = stats.max_deg.max(prolongation.total_degree());
                q.push(prolongation);
            }
        }
    }

    stats.polys_loop = g.len() as u64;
    let basis = autoreduce_tails(&min_bas(&g, div, ord), div, ord);
    stats.polys_min = basis.len() as u64;
    stats.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok((basis, stats))
}
