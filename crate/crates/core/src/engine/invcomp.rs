use std::cmp::Ordering;
use std::collections::HashSet;
use std::time::Instant;

use num_traits::{One, Zero};

use super::nf::nf_full;
use super::{autoreduce_tails, min_bas, Basis, Diagnostics, EngineOptions, HeadDeflection, Stats};
use crate::division::{DivisionSpec, Partition};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarMask};
use crate::oracles::{admissibility_check, cofactor_identity_holds, CofactorTrace};
use crate::ordering::OrderingSpec;
use crate::polynomial::{Polynomial, Rational, Term};
use crate::signature::{criteria_with, sig_cmp, ArxivLm, Quadruple, Signature, Verdict};

/// Output of one completion run.
#[derive(Clone, Debug)]
pub struct Completion {
    /// Minimal involutive basis, monic with reduced tails.
    pub basis: Basis,
    pub stats: Stats,
    pub diagnostics: Diagnostics,
    /// Polynomial parts of the intermediate basis when the loop ended.
    pub loop_basis: Vec<Polynomial>,
    /// Generators in processing order: sorted by descending leading monomial
    /// and made monic. Signature indices and cofactors refer to this list.
    pub generators: Vec<Polynomial>,
    /// Every quadruple inserted into the intermediate basis, when cofactor
    /// tracking is on.
    pub inserted: Vec<Quadruple>,
}

/// Computes the minimal involutive basis with default options.
pub fn inv_comp(f: &[Polynomial], div: &DivisionSpec, ord: &OrderingSpec) -> Result<(Basis, Stats)> {
    let run = InvComp::new(f, div, ord)?.run();
    Ok((run.basis, run.stats))
}

enum Reduced {
    Discard(Verdict),
    Zero,
    NonZero(Polynomial, Option<Vec<Polynomial>>),
}

struct Queued {
    quad: Quadruple,
    seq: u64,
}

/// Signature-ordered involutive completion.
pub struct InvComp<'a> {
    div: &'a DivisionSpec,
    ord: &'a OrderingSpec,
    opts: EngineOptions,
    generators: Vec<Polynomial>,
    t: Vec<Quadruple>,
    t_lms: Vec<Monomial>,
    part: Partition,
    queue: Vec<Queued>,
    queued_keys: HashSet<(Signature, Monomial)>,
    arxiv: ArxivLm,
    syzygies: Vec<Vec<Monomial>>,
    purged: HashSet<usize>,
    next_id: usize,
    next_seq: u64,
    stats: Stats,
    diag: Diagnostics,
    inserted: Vec<Quadruple>,
}

impl<'a> InvComp<'a> {
    pub fn new(f: &[Polynomial], div: &'a DivisionSpec, ord: &'a OrderingSpec) -> Result<Self> {
        Self::with_options(f, div, ord, EngineOptions::default())
    }

    pub fn with_options(
        f: &[Polynomial],
        div: &'a DivisionSpec,
        ord: &'a OrderingSpec,
        opts: EngineOptions,
    ) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::usage("empty input system"));
        }
        if f.iter().any(Polynomial::is_zero) {
            return Err(Error::usage("zero polynomial in input"));
        }
        if !ord.is_admissible() {
            return Err(Error::usage("the term ordering must be admissible"));
        }
        if f.iter().any(|p| !p.is_canonical(ord)) {
            return Err(Error::usage("input polynomial not canonical under the ordering"));
        }
        let mut generators: Vec<Polynomial> = f.iter().map(Polynomial::monic).collect();
        // stable: LM(f_1) >= ... >= LM(f_k)
        generators.sort_by(|a, b| ord.cmp(b.lm().unwrap(), a.lm().unwrap()));
        let arxiv = ArxivLm::new(generators.iter().map(|g| g.lm().unwrap().clone()));
        let k = generators.len();
        Ok(InvComp {
            div,
            ord,
            opts,
            generators,
            t: Vec::new(),
            t_lms: Vec::new(),
            part: Partition::new(div, &[]),
            queue: Vec::new(),
            queued_keys: HashSet::new(),
            arxiv,
            syzygies: vec![Vec::new(); k],
            purged: HashSet::new(),
            next_id: 0,
            next_seq: 0,
            stats: Stats::default(),
            diag: Diagnostics::default(),
            inserted: Vec::new(),
        })
    }

    fn k(&self) -> usize {
        self.generators.len()
    }

    fn nvars(&self) -> usize {
        self.ord.nvars()
    }

    fn fresh_id(&mut self) -> usize {
        self.next_id += 1;
        self.next_id
    }

    fn unit_cofactors(&self, index: usize) -> Option<Vec<Polynomial>> {
        self.opts.track_cofactors.then(|| {
            (1..=self.k())
                .map(|j| {
                    if j == index {
                        Polynomial::constant(self.nvars(), Rational::one())
                    } else {
                        Polynomial::zero()
                    }
                })
                .collect()
        })
    }

    fn seed(&mut self, index: usize) -> Quadruple {
        let id = self.fresh_id();
        let poly = self.generators[index - 1].clone();
        Quadruple {
            id,
            sig: Signature::unit(self.nvars(), index),
            anc_lm: poly.lm().unwrap().clone(),
            poly,
            anc_id: id,
            processed_nm: VarMask::EMPTY,
            cofactors: self.unit_cofactors(index),
        }
    }

    pub fn run(mut self) -> Completion {
        let started = Instant::now();
        self.diag.checked = self.opts.check_invariants;
        let k = self.k();
        let last = self.seed(k);
        self.insert(last);
        for i in 1..k {
            let q = self.seed(i);
            self.enqueue(q, None);
        }

        while let Some(p) = self.pop_min() {
            if p.anc_id != p.id && self.purged.contains(&p.anc_id) {
                continue;
            }
            if self.opts.check_invariants
                && self
                    .t
                    .iter()
                    .any(|t| sig_cmp(self.ord, &p.sig, &t.sig) == Ordering::Less)
            {
                self.diag.signature_order += 1;
            }
            self.stats.max_deg = self.stats.max_deg.max(p.poly.total_degree());

            match self.reg_normal_form(&p) {
                Reduced::Discard(verdict) => {
                    match verdict {
                        Verdict::Super | Verdict::Syzygy => self.stats.super_ += 1,
                        Verdict::C1 => self.stats.c1 += 1,
                        Verdict::C2 => self.stats.c2 += 1,
                        Verdict::F5 => self.stats.f5 += 1,
                        Verdict::None => unreachable!(),
                    }
                    if self.opts.check_invariants && matches!(verdict, Verdict::C1 | Verdict::C2) {
                        let polys: Vec<Polynomial> = self.t.iter().map(|t| t.poly.clone()).collect();
                        if !nf_full(&p.poly, &polys, self.div, self.ord).is_zero() {
                            self.diag.criteria_nonzero += 1;
                        }
                    }
                    self.after_zero(&p);
                }
                Reduced::Zero => {
                    self.stats.reds += 1;
                    self.syzygies[p.sig.index - 1].push(p.sig.mono.clone());
                    self.after_zero(&p);
                }
                Reduced::NonZero(h, cof) => self.accept(p, h, cof),
            }
        }

        if self.opts.check_invariants {
            for (i, t) in self.t.iter().enumerate() {
                if !self.part.nonmultiplicative(i).is_subset(t.processed_nm) {
                    self.diag.unprocessed_at_exit += 1;
                }
            }
        }

        let loop_basis: Vec<Polynomial> = self.t.iter().map(|t| t.poly.clone()).collect();
        let minimal = min_bas(&loop_basis, self.div, self.ord);
        let basis = autoreduce_tails(&minimal, self.div, self.ord);
        self.stats.polys_loop = loop_basis.len() as u64;
        self.stats.polys_min = basis.len() as u64;
        self.stats.elapsed_ms = started.elapsed().as_millis() as u64;
        Completion {
            basis,
            stats: self.stats,
            diagnostics: self.diag,
            loop_basis,
            generators: self.generators,
            inserted: self.inserted,
        }
    }

    /// Purges descendants when the ancestor itself vanished.
    fn after_zero(&mut self, p: &Quadruple) {
        if p.lm() == &p.anc_lm {
            self.purged.insert(p.anc_id);
            let before = self.t.len();
            self.t.retain(|t| t.anc_id != p.anc_id);
            if self.t.len() != before {
                self.refresh_partition();
            }
        }
    }

    fn accept(&mut self, p: Quadruple, h: Polynomial, cof: Option<Vec<Polynomial>>) {
        self.stats.max_deg = self.stats.max_deg.max(h.total_degree());
        let lm_h = h.lm().unwrap().clone();
        self.arxiv
            .record(p.sig.index, lm_h.clone())
            .expect("signature index in range");
        let scale = h.lc().unwrap().recip();
        let h = h.scale(&scale);
        let cof = cof.map(|c| c.iter().map(|g| g.scale(&scale)).collect());
        let id = self.fresh_id();
        let (anc_lm, anc_id, processed_nm) = if p.lm() != &lm_h {
            (lm_h.clone(), id, VarMask::EMPTY)
        } else {
            (p.anc_lm.clone(), p.anc_id, p.processed_nm)
        };
        let quad = Quadruple {
            id,
            sig: p.sig.clone(),
            poly: h,
            anc_lm,
            anc_id,
            processed_nm,
            cofactors: cof,
        };
        self.insert(quad);
        let new_idx = self.t.len() - 1;

        let h = self.t[new_idx].clone();
        for i in 0..self.t.len() {
            let fresh = self.part.nonmultiplicative(i).difference(self.t[i].processed_nm);
            for x in fresh.iter() {
                let q = &self.t[i];
                let xm = Monomial::var(self.nvars(), x);
                let prolongation = Quadruple {
                    id: 0,
                    sig: q.sig.mul(&xm),
                    poly: q.poly.mul_monomial(&xm, self.ord),
                    anc_lm: q.anc_lm.clone(),
                    anc_id: q.anc_id,
                    processed_nm: VarMask::EMPTY,
                    cofactors: q
                        .cofactors
                        .as_ref()
                        .map(|c| c.iter().map(|g| g.mul_monomial(&xm, self.ord)).collect()),
                };
                self.enqueue(prolongation, Some(&p.sig));
            }
            self.t[i].processed_nm = self.t[i].processed_nm.union(fresh);

            // Only possible when the division lets a cone contain proper
            // multiples of its generator.
            let lm_q = self.t_lms[i].clone();
            if i == new_idx || !self.part.divides(&self.t_lms, new_idx, &lm_q) {
                continue;
            }
            let u = lm_q.div(&lm_h).unwrap();
            let q = &self.t[i];
            let d = q.poly.sub_scaled(&Rational::one(), &u, &h.poly, self.ord);
            if d.is_zero() {
                continue;
            }
            let cofactors = match (&q.cofactors, &h.cofactors) {
                (Some(cq), Some(ch)) => Some(
                    cq.iter()
                        .zip(ch)
                        .map(|(a, b)| a.sub_scaled(&Rational::one(), &u, b, self.ord))
                        .collect(),
                ),
                _ => None,
            };
            let sig = h.sig.mul(&u);
            self.enqueue_self_ancestor(sig, d, cofactors, Some(&p.sig));
        }
    }

    fn insert(&mut self, quad: Quadruple) {
        let lm = quad.lm().clone();
        if self.opts.check_invariants {
            if self.t_lms.contains(&lm) {
                self.diag.duplicate_lm += 1;
            }
            if let Some(c) = &quad.cofactors {
                let trace = CofactorTrace { cofactors: c.clone() };
                if !cofactor_identity_holds(&trace, &self.generators, &quad.poly, self.ord) {
                    self.diag.cofactor_failures += 1;
                }
                if !admissibility_check(&trace, &quad.sig, self.ord).unwrap_or(false) {
                    self.diag.admissibility_failures += 1;
                }
            }
        }
        if self.opts.track_cofactors {
            self.inserted.push(quad.clone());
        }
        self.t.push(quad);
        self.t_lms.push(lm);
        self.refresh_partition();
    }

    fn refresh_partition(&mut self) {
        self.t_lms = self.t.iter().map(|t| t.lm().clone()).collect();
        self.part = Partition::new(self.div, &self.t_lms);
    }

    fn enqueue_self_ancestor(
        &mut self,
        sig: Signature,
        poly: Polynomial,
        cofactors: Option<Vec<Polynomial>>,
        parent: Option<&Signature>,
    ) {
        let scale = poly.lc().unwrap().recip();
        let poly = poly.scale(&scale);
        let cofactors = cofactors.map(|c| c.iter().map(|g| g.scale(&scale)).collect());
        let quad = Quadruple {
            id: 0,
            sig,
            anc_lm: poly.lm().unwrap().clone(),
            poly,
            anc_id: 0,
            processed_nm: VarMask::EMPTY,
            cofactors,
        };
        self.enqueue(quad, parent);
    }

    /// Queues `quad` unless an entry with the same signature and leading
    /// monomial is already waiting. Self-ancestored entries get their id
    /// here.
    fn enqueue(&mut self, mut quad: Quadruple, parent: Option<&Signature>) {
        let key = (quad.sig.clone(), quad.lm().clone());
        if self.queued_keys.contains(&key) {
            return;
        }
        if let Some(ps) = parent {
            if self.opts.check_invariants && sig_cmp(self.ord, &quad.sig, ps) == Ordering::Less {
                self.diag.queued_below += 1;
            }
        }
        self.stats.max_deg = self.stats.max_deg.max(quad.poly.total_degree());
        if quad.id == 0 {
            quad.id = self.fresh_id();
            if quad.anc_id == 0 {
                quad.anc_id = quad.id;
            }
        }
        self.queued_keys.insert(key);
        let seq = self.next_seq;
        self.next_seq += 1;
        self.queue.push(Queued { quad, seq });
    }

    /// Minimal signature; ties go to the smaller leading monomial, then to
    /// the older entry.
    fn pop_min(&mut self) -> Option<Quadruple> {
        let ord = self.ord;
        let best = (0..self.queue.len()).min_by(|&a, &b| {
            let (qa, qb) = (&self.queue[a], &self.queue[b]);
            sig_cmp(ord, &qa.quad.sig, &qb.quad.sig)
                .then_with(|| ord.cmp(qa.quad.lm(), qb.quad.lm()))
                .then_with(|| qa.seq.cmp(&qb.seq))
        })?;
        let q = self.queue.swap_remove(best).quad;
        self.queued_keys.remove(&(q.sig.clone(), q.lm().clone()));
        Some(q)
    }

    fn deflects(&self) -> bool {
        match self.opts.head_deflection {
            HeadDeflection::Always => true,
            HeadDeflection::Never => false,
            HeadDeflection::NonAdmissibleOnly => !self.div.is_admissible(),
        }
    }

    /// Regular involutive normal form of `p` modulo the current basis.
    fn reg_normal_form(&mut self, p: &Quadruple) -> Reduced {
        let ord = self.ord;
        let mut h = p.poly.clone();
        let mut cof = p.cofactors.clone();
        let mut r = Polynomial::zero();
        let syz = self.opts.use_syzygy_signatures.then_some(self.syzygies.as_slice());
        let mut deflected = Vec::new();

        while let Some(lt) = h.lt().cloned() {
            let mut safe: Option<(usize, Monomial)> = None;
            let mut unsafe_: Option<(usize, Monomial)> = None;
            for i in self.part.divisors(&self.t_lms, &lt.mono) {
                let u = lt.mono.div(&self.t_lms[i]).unwrap();
                let within = sig_cmp(ord, &self.t[i].sig.mul(&u), &p.sig) != Ordering::Greater;
                let slot = if within { &mut safe } else { &mut unsafe_ };
                let better = match slot {
                    Some((j, _)) => ord.cmp(&self.t_lms[i], &self.t_lms[*j]) == Ordering::Less,
                    None => true,
                };
                if better {
                    *slot = Some((i, u));
                }
            }
            let head_stage = r.is_zero();

            if let Some((i, u)) = safe {
                let q = &self.t[i];
                if head_stage && h.lt() == p.poly.lt() {
                    let verdict = criteria_with(p, q, &self.arxiv, syz, true);
                    if verdict != Verdict::None {
                        debug_assert!(deflected.is_empty());
                        return Reduced::Discard(verdict);
                    }
                } else if head_stage && self.opts.super_every_head && q.sig.mul(&u) == p.sig {
                    return Reduced::Discard(Verdict::Super);
                }
                // reducers are monic
                h = h.sub_scaled(&lt.coeff, &u, &q.poly, ord);
                if let (Some(c), Some(cq)) = (cof.as_mut(), q.cofactors.as_ref()) {
                    for (a, b) in c.iter_mut().zip(cq) {
                        *a = a.sub_scaled(&lt.coeff, &u, b, ord);
                    }
                }
                continue;
            }

            if let (Some((i, u)), true) = (unsafe_, head_stage && self.deflects()) {
                let q = &self.t[i];
                let sig = q.sig.mul(&u);
                let d = h.sub_scaled(&lt.coeff, &u, &q.poly, ord);
                if !d.is_zero() {
                    let dcof = match (&cof, &q.cofactors) {
                        (Some(c), Some(cq)) => Some(
                            c.iter()
                                .zip(cq)
                                .map(|(a, b)| a.sub_scaled(&lt.coeff, &u, b, ord))
                                .collect(),
                        ),
                        _ => None,
                    };
                    deflected.push((sig, d, dcof));
                }
            }
            let Term { coeff, mono } = h.pop_lt().unwrap();
            r.push_smallest(Term { coeff, mono });
        }

        for (sig, d, dcof) in deflected {
            self.enqueue_self_ancestor(sig, d, dcof, Some(&p.sig));
        }
        if r.is_zero() {
            Reduced::Zero
        } else {
            debug_assert!(!r.lc().unwrap().is_zero());
            Reduced::NonZero(r, cof)
        }
    }
}
