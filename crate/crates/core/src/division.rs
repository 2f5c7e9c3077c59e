//! Involutive divisions: Thomas and the family of divisions induced by a
//! total monomial ordering (Janet for lex, the alex division for the
//! antigraded ordering).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{monomials_up_to, Monomial, VarMask, VarSet};
use crate::ordering::{OrderKind, OrderingSpec};

#[derive(Clone, PartialEq, Eq)]
pub enum DivisionSpec {
    /// `x` is nonmultiplicative for `u` iff some `v` has a larger `x`-degree.
    Thomas,
    /// Pairwise rule driven by a total ordering and a scan order `sigma`.
    Order {
        base: OrderingSpec,
        /// Variable indices in the order they are scanned for the first
        /// degree deficit.
        scan: Vec<usize>,
    },
}

impl DivisionSpec {
    pub fn thomas() -> Self {
        DivisionSpec::Thomas
    }

    /// Lex-induced division, scanning variables from most significant down.
    pub fn janet(vars: &VarSet) -> Self {
        Self::order(OrderingSpec::new(OrderKind::Lex, vars.clone()))
    }

    pub fn alex(vars: &VarSet) -> Self {
        Self::order(OrderingSpec::new(OrderKind::Alex, vars.clone()))
    }

    pub fn order(base: OrderingSpec) -> Self {
        let scan = base.vars().priority().to_vec();
        DivisionSpec::Order { base, scan }
    }

    /// `sigma` permutes significance positions: position `j` is scanned
    /// `j`-th, and refers to the `sigma[j]`-th most significant variable.
    pub fn order_with_sigma(base: OrderingSpec, sigma: &[usize]) -> Result<Self> {
        let n = base.nvars();
        let mut seen = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&s| s >= n || std::mem::replace(&mut seen[s], true)) {
            return Err(Error::usage("sigma is not a permutation of the variables"));
        }
        let scan = sigma.iter().map(|&s| base.vars().priority()[s]).collect();
        Ok(DivisionSpec::Order { base, scan })
    }

    pub fn from_name(name: &str, vars: &VarSet) -> Result<Self> {
        match DivisionKind::from_str(name)? {
            DivisionKind::Janet => Ok(Self::janet(vars)),
            DivisionKind::Thomas => Ok(Self::thomas()),
            DivisionKind::Alex => Ok(Self::alex(vars)),
        }
    }

    /// Whether the inducing ordering is admissible. Thomas counts as
    /// admissible: no element's cone contains a proper multiple of it from
    /// the same set.
    pub fn is_admissible(&self) -> bool {
        match self {
            DivisionSpec::Thomas => true,
            DivisionSpec::Order { base, .. } => base.is_admissible(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            DivisionSpec::Thomas => "thomas".into(),
            DivisionSpec::Order { base, .. } => match base.kind() {
                OrderKind::Lex => "janet".into(),
                OrderKind::Alex => "alex".into(),
                OrderKind::DegRevLex => "degrevlex-division".into(),
            },
        }
    }
}

impl fmt::Debug for DivisionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DivisionKind {
    Janet,
    Thomas,
    Alex,
}

impl DivisionKind {
    pub fn name(self) -> &'static str {
        match self {
            DivisionKind::Janet => "janet",
            DivisionKind::Thomas => "thomas",
            DivisionKind::Alex => "alex",
        }
    }
}

impl FromStr for DivisionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "janet" => Ok(DivisionKind::Janet),
            "thomas" => Ok(DivisionKind::Thomas),
            "alex" => Ok(DivisionKind::Alex),
            other => Err(Error::usage(format!("unknown division '{other}'"))),
        }
    }
}

/// Nonmultiplicative variables of `u` with respect to the pair `{u, v}`.
pub fn nm_pair(div: &DivisionSpec, u: &Monomial, v: &Monomial) -> VarMask {
    if u == v {
        return VarMask::EMPTY;
    }
    match div {
        DivisionSpec::Thomas => {
            let mut nm = VarMask::EMPTY;
            for i in 0..u.nvars() {
                if u.exp(i) < v.exp(i) {
                    nm.insert(i);
                }
            }
            nm
        }
        DivisionSpec::Order { base, scan } => {
            if base.greater(u, v) || v.divides(u) {
                return VarMask::EMPTY;
            }
            scan.iter()
                .find(|&&x| u.exp(x) < v.exp(x))
                .map(|&x| VarMask::singleton(x))
                .unwrap_or(VarMask::EMPTY)
        }
    }
}

/// Union of the pairwise sets over the rest of `set`; errors if `u` is not a
/// member.
pub fn nm_set(div: &DivisionSpec, u: &Monomial, set: &[Monomial]) -> Result<VarMask> {
    if !set.contains(u) {
        return Err(Error::usage("monomial is not a member of the set"));
    }
    Ok(nm_of(div, u, set))
}

fn nm_of(div: &DivisionSpec, u: &Monomial, set: &[Monomial]) -> VarMask {
    set.iter().fold(VarMask::EMPTY, |acc, v| acc.union(nm_pair(div, u, v)))
}

/// Nonmultiplicative variables of every element of a monomial list.
///
/// Equal monomials in the list do not constrain each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    nvars: usize,
    nm: Vec<VarMask>,
}

impl Partition {
    pub fn new(div: &DivisionSpec, set: &[Monomial]) -> Self {
        let nvars = set.first().map_or(0, Monomial::nvars);
        let nm: Vec<VarMask> = set.iter().map(|u| nm_of(div, u, set)).collect();
        let p = Partition { nvars, nm };
        debug_assert!(p.is_consistent());
        p
    }

    /// Wraps explicit nonmultiplicative sets; used to exercise the axiom
    /// checker with arbitrary (possibly broken) partitions.
    pub fn from_masks(nvars: usize, nm: Vec<VarMask>) -> Self {
        Partition { nvars, nm }
    }

    pub fn nonmultiplicative(&self, i: usize) -> VarMask {
        self.nm[i]
    }

    pub fn multiplicative(&self, i: usize) -> VarMask {
        self.nm[i].complement(self.nvars)
    }

    pub fn len(&self) -> usize {
        self.nm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nm.is_empty()
    }

    fn is_consistent(&self) -> bool {
        (0..self.nm.len()).all(|i| {
            let m = self.multiplicative(i);
            let nm = self.nonmultiplicative(i);
            m.intersection(nm).is_empty() && m.union(nm) == VarMask::all(self.nvars)
        })
    }

    /// Whether `set[i]` involutively divides `m`.
    pub fn divides(&self, set: &[Monomial], i: usize, m: &Monomial) -> bool {
        match m.div(&set[i]) {
            Some(q) => q.support().is_subset(self.multiplicative(i)),
            None => false,
        }
    }

    /// Indices of all involutive divisors of `m`, in list order.
    pub fn divisors<'a>(&'a self, set: &'a [Monomial], m: &'a Monomial) -> impl Iterator<Item = usize> + 'a {
        (0..set.len()).filter(move |&i| self.divides(set, i, m))
    }
}

/// Picks an involutive divisor of `m` in `set`. Among several candidates the
/// one with the smallest monomial under `ord` wins, then the earliest.
pub fn inv_divisor(div: &DivisionSpec, ord: &OrderingSpec, set: &[Monomial], m: &Monomial) -> Option<usize> {
    let part = Partition::new(div, set);
    let found = select_smallest(ord, set, part.divisors(set, m));
    if let Some(i) = found {
        debug_assert!(set[i].divides(m));
        debug_assert!(m.div(&set[i]).unwrap().support().is_subset(part.multiplicative(i)));
    }
    found
}

pub(crate) fn select_smallest(
    ord: &OrderingSpec,
    set: &[Monomial],
    candidates: impl Iterator<Item = usize>,
) -> Option<usize> {
    let mut best: Option<usize> = None;
    for i in candidates {
        best = match best {
            Some(b) if ord.cmp(&set[i], &set[b]) != std::cmp::Ordering::Less => Some(b),
            _ => Some(i),
        };
    }
    best
}

/// All monomials of the ideal generated by `set` whose degree in each
/// variable stays within the maximum over `set`.
pub fn thomas_completion(set: &[Monomial]) -> Result<Vec<Monomial>> {
    let Some(first) = set.first() else {
        return Err(Error::usage("Thomas completion of an empty set"));
    };
    let n = first.nvars();
    let bounds: Vec<u32> = (0..n)
        .map(|i| set.iter().map(|u| u.exp(i)).max().unwrap_or(0))
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if set.iter().any(|u| u.divides(&m)) {
            out.push(m);
        }
        // odometer over the bounding box
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if exps[i] < bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// First violated condition of the involutive-division definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// The cones of `u` and `v` meet at `witness` but neither monomial lies
    /// in the other's cone.
    ConeOverlap {
        u: Monomial,
        v: Monomial,
        witness: Monomial,
    },
    /// `v` lies in the cone of `u` but has a multiplicative variable `u`
    /// lacks.
    ConeInclusion { u: Monomial, v: Monomial, var: usize },
    /// Removing elements from the set made `u` lose a multiplicative
    /// variable.
    Monotonicity {
        u: Monomial,
        subset: Vec<Monomial>,
        var: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub universe_size: usize,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Largest universe the brute-force checks enumerate.
pub const AXIOM_MAX_VARS: usize = 3;
pub const AXIOM_MAX_DEGREE: u32 = 6;

/// Brute-force check of the three division axioms for `set` under `div`.
pub fn axioms_check(div: &DivisionSpec, set: &[Monomial]) -> Result<AxiomReport> {
    axioms_check_with(set, |s| Partition::new(div, s))
}

/// Same as [`axioms_check`] with a caller-supplied partition rule.
pub fn axioms_check_with<F>(set: &[Monomial], partition: F) -> Result<AxiomReport>
where
    F: Fn(&[Monomial]) -> Partition,
{
    let Some(first) = set.first() else {
        return Ok(AxiomReport {
            universe_size: 0,
            violation: None,
        });
    };
    let n = first.nvars();
    if n > AXIOM_MAX_VARS {
        return Err(Error::usage(format!(
            "axiom checks support at most {AXIOM_MAX_VARS} variables"
        )));
    }
    let universe = monomials_up_to(n, AXIOM_MAX_DEGREE);
    let part = partition(set);
    let in_cone = |i: usize, w: &Monomial| -> bool {
        w.div(&set[i])
            .is_some_and(|q| q.support().is_subset(part.multiplicative(i)))
    };
    let mut report = AxiomReport {
        universe_size: universe.len(),
        violation: None,
    };

    for i in 0..set.len() {
        for j in (i + 1)..set.len() {
            if set[i] == set[j] {
                continue;
            }
            if let Some(w) = universe.iter().find(|w| in_cone(i, w) && in_cone(j, w)) {
                if !in_cone(i, &set[j]) && !in_cone(j, &set[i]) {
                    report.violation = Some(AxiomViolation::ConeOverlap {
                        u: set[i].clone(),
                        v: set[j].clone(),
                        witness: w.clone(),
                    });
                    return Ok(report);
                }
            }
        }
    }

    for i in 0..set.len() {
        for j in 0..set.len() {
            if i != j && in_cone(i, &set[j]) {
                let extra = part.multiplicative(j).difference(part.multiplicative(i));
                if let Some(var) = extra.iter().next() {
                    report.violation = Some(AxiomViolation::ConeInclusion {
                        u: set[i].clone(),
                        v: set[j].clone(),
                        var,
                    });
                    return Ok(report);
                }
            }
        }
    }

    // Every subset when small, otherwise single deletions.
    let subsets: Vec<Vec<usize>> = if set.len() <= 10 {
        (1u32..(1 << set.len()))
            .map(|mask| (0..set.len()).filter(|&i| mask >> i & 1 == 1).collect())
            .collect()
    } else {
        (0..set.len())
            .map(|skip| (0..set.len()).filter(|&i| i != skip).collect())
            .collect()
    };
    for idx in subsets {
        let sub: Vec<Monomial> = idx.iter().map(|&i| set[i].clone()).collect();
        let sub_part = partition(&sub);
        for (k, &i) in idx.iter().enumerate() {
            let lost = part.multiplicative(i).difference(sub_part.multiplicative(k));
            if let Some(var) = lost.iter().next() {
                report.violation = Some(AxiomViolation::Monotonicity {
                    u: set[i].clone(),
                    subset: sub,
                    var,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> VarSet {
        VarSet::new(&["x", "y"]).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    const X: usize = 0;
    const Y: usize = 1;

    #[test]
    fn janet_pairs() {
        let janet = DivisionSpec::janet(&vars());
        assert_eq!(nm_pair(&janet, &m(&[2, 0]), &m(&[2, 1])), VarMask::singleton(Y));
        assert_eq!(nm_pair(&janet, &m(&[2, 0]), &m(&[1, 1])), VarMask::EMPTY);
        assert_eq!(nm_pair(&janet, &m(&[1, 1]), &m(&[2, 0])), VarMask::singleton(X));
        assert_eq!(nm_pair(&janet, &m(&[1, 1]), &m(&[1, 1])), VarMask::EMPTY);
    }

    #[test]
    fn thomas_pairs() {
        assert_eq!(
            nm_pair(&DivisionSpec::thomas(), &m(&[2, 0]), &m(&[1, 1])),
            VarMask::singleton(Y)
        );
    }

    #[test]
    fn janet_sets() {
        let janet = DivisionSpec::janet(&vars());
        let u = [m(&[2, 0]), m(&[1, 1]), m(&[2, 1])];
        assert_eq!(nm_set(&janet, &m(&[1, 1]), &u).unwrap(), VarMask::singleton(X));
        assert_eq!(nm_set(&janet, &m(&[2, 1]), &u).unwrap(), VarMask::EMPTY);
        assert_eq!(nm_set(&janet, &m(&[2, 0]), &u).unwrap(), VarMask::singleton(Y));
        assert_eq!(nm_set(&janet, &m(&[3, 3]), &[m(&[3, 3])]).unwrap(), VarMask::EMPTY);
        assert!(nm_set(&janet, &m(&[0, 1]), &u).is_err());
    }

    #[test]
    fn involutive_divisor_search() {
        let v = vars();
        let janet = DivisionSpec::janet(&v);
        let lex = OrderingSpec::new(OrderKind::Lex, v);
        let u = [m(&[1, 1]), m(&[2, 0]), m(&[2, 1])];
        assert_eq!(inv_divisor(&janet, &lex, &u, &m(&[2, 1])), Some(2));
        let u2 = [m(&[1, 1]), m(&[2, 0])];
        assert_eq!(inv_divisor(&janet, &lex, &u2, &m(&[3, 0])), Some(1));
        assert_eq!(inv_divisor(&janet, &lex, &u2, &m(&[0, 2])), None);
    }

    #[test]
    fn alex_lets_divisors_cover_multiples() {
        let v = vars();
        let alex = DivisionSpec::alex(&v);
        // x is alex-greater than x^2, so x keeps x multiplicative
        let set = [m(&[1, 0]), m(&[2, 0])];
        let part = Partition::new(&alex, &set);
        assert!(part.divides(&set, 0, &m(&[2, 0])));
        assert!(!alex.is_admissible());
    }

    #[test]
    fn thomas_completion_box() {
        let c = thomas_completion(&[m(&[2, 0]), m(&[1, 1])]).unwrap();
        let mut expected = vec![m(&[2, 0]), m(&[1, 1]), m(&[2, 1])];
        expected.sort();
        let mut got = c.clone();
        got.sort();
        assert_eq!(got, expected);
        assert_eq!(thomas_completion(&[m(&[1, 0])]).unwrap(), vec![m(&[1, 0])]);
        assert_eq!(thomas_completion(&[m(&[2, 1])]).unwrap(), vec![m(&[2, 1])]);
        assert!(thomas_completion(&[]).is_err());
    }

    #[test]
    fn sigma_validation() {
        let base = OrderingSpec::new(OrderKind::Lex, vars());
        assert!(DivisionSpec::order_with_sigma(base.clone(), &[1, 1]).is_err());
        let d = DivisionSpec::order_with_sigma(base, &[1, 0]).unwrap();
        // scan y first: x*y vs x^2 has deficits only in x
        assert_eq!(nm_pair(&d, &m(&[1, 1]), &m(&[2, 0])), VarMask::singleton(X));
        assert_eq!(nm_pair(&d, &m(&[1, 0]), &m(&[2, 1])), VarMask::singleton(Y));
    }

    #[test]
    fn corrupted_partition_is_caught() {
        let janet = DivisionSpec::janet(&vars());
        let set = [m(&[1, 0]), m(&[0, 1])];
        assert!(axioms_check(&janet, &set).unwrap().passed());
        // y gets x back as multiplicative: cones meet at x*y
        let report = axioms_check_with(&set, |s| {
            let mut p = Partition::new(&janet, s);
            if s.len() == 2 {
                p = Partition::from_masks(2, vec![p.nonmultiplicative(0), VarMask::EMPTY]);
            }
            p
        })
        .unwrap();
        assert!(matches!(report.violation, Some(AxiomViolation::ConeOverlap { .. })));
    }
}
