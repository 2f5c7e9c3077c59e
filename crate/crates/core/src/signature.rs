//! Module-monomial signatures, labelled quadruples and the discard criteria.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarMask};
use crate::ordering::OrderingSpec;
use crate::polynomial::Polynomial;

/// `mono * e_index`, with `index` counted from 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub mono: Monomial,
    pub index: usize,
}

impl Signature {
    pub fn unit(nvars: usize, index: usize) -> Self {
        Signature {
            mono: Monomial::one(nvars),
            index,
        }
    }

    pub fn mul(&self, m: &Monomial) -> Signature {
        Signature {
            mono: self.mono.mul(m),
            index: self.index,
        }
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}*e{}", self.mono, self.index)
    }
}

/// A larger index is a smaller signature; equal indices compare monomials.
pub fn sig_cmp(ord: &OrderingSpec, s: &Signature, t: &Signature) -> Ordering {
    t.index.cmp(&s.index).then_with(|| ord.cmp(&s.mono, &t.mono))
}

pub fn sig_mul(m: &Monomial, s: &Signature) -> Signature {
    s.mul(m)
}

/// Labelled polynomial with its ancestor and the prolongations already built.
#[derive(Clone, Debug)]
pub struct Quadruple {
    pub id: usize,
    pub sig: Signature,
    pub poly: Polynomial,
    /// Leading monomial of the ancestor.
    pub anc_lm: Monomial,
    pub anc_id: usize,
    pub processed_nm: VarMask,
    /// `poly = sum_i cofactors[i] * f_i` when tracking is on.
    pub cofactors: Option<Vec<Polynomial>>,
}

impl Quadruple {
    pub fn lm(&self) -> &Monomial {
        self.poly.lm().expect("quadruple polynomial is nonzero")
    }
}

/// Leading monomials collected per signature index, seeded with the inputs'.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArxivLm {
    lists: Vec<Vec<Monomial>>,
}

impl ArxivLm {
    pub fn new(seeds: impl IntoIterator<Item = Monomial>) -> Self {
        ArxivLm {
            lists: seeds.into_iter().map(|m| vec![m]).collect(),
        }
    }

    /// Number of input generators.
    pub fn k(&self) -> usize {
        self.lists.len()
    }

    pub fn get(&self, index: usize) -> &[Monomial] {
        &self.lists[index - 1]
    }

    pub fn lists(&self) -> &[Vec<Monomial>] {
        &self.lists
    }

    /// Appends `m` to list `index` unless already present.
    pub fn record(&mut self, index: usize, m: Monomial) -> Result<()> {
        if index == 0 || index > self.lists.len() {
            return Err(Error::usage(format!(
                "archive index {index} outside 1..={}",
                self.lists.len()
            )));
        }
        let list = &mut self.lists[index - 1];
        if !list.contains(&m) {
            list.push(m);
        }
        Ok(())
    }

    /// First higher-index archived monomial dividing `sig.mono`.
    pub fn f5_hit(&self, sig: &Signature) -> Option<(usize, &Monomial)> {
        (sig.index + 1..=self.k()).find_map(|j| self.get(j).iter().find(|t| t.divides(&sig.mono)).map(|t| (j, t)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    None,
    Super,
    C1,
    C2,
    F5,
    /// Signature divisible by the signature of an earlier zero reduction.
    Syzygy,
}

/// Decides whether `p` can be dropped, given an involutive head divisor `q`.
///
/// Super top-reduction and the Buchberger-type checks run first, then the F5
/// scan over indices above `p`'s, then the optional syzygy list.
pub fn criteria(p: &Quadruple, q: &Quadruple, arxiv: &ArxivLm, syzygies: Option<&[Vec<Monomial>]>) -> Verdict {
    criteria_with(p, q, arxiv, syzygies, true)
}

/// [`criteria`] with the Buchberger-type checks optionally switched off.
pub fn criteria_with(
    p: &Quadruple,
    q: &Quadruple,
    arxiv: &ArxivLm,
    syzygies: Option<&[Vec<Monomial>]>,
    buchberger: bool,
) -> Verdict {
    let lm_p = p.lm();
    let lm_q = q.lm();
    if let Some(u) = lm_p.div(lm_q) {
        if q.sig.index == p.sig.index && q.sig.mono.mul(&u) == p.sig.mono {
            return Verdict::Super;
        }
    }
    if buchberger {
        if p.anc_lm.mul(&q.anc_lm) == *lm_p {
            return Verdict::C1;
        }
        let l = p.anc_lm.lcm(&q.anc_lm);
        if l.divides(lm_p) && l != *lm_p {
            return Verdict::C2;
        }
    }
    if arxiv.f5_hit(&p.sig).is_some() {
        return Verdict::F5;
    }
    if let Some(syz) = syzygies {
        if syz
            .get(p.sig.index - 1)
            .is_some_and(|list| list.iter().any(|s| s.divides(&p.sig.mono)))
        {
            return Verdict::Syzygy;
        }
    }
    Verdict::None
}
