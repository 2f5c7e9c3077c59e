//! Power products over a fixed, ordered set of variables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Subset of variables, one bit per variable index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarMask(pub u64);

impl VarMask {
    pub const EMPTY: VarMask = VarMask(0);

    pub fn all(n: usize) -> Self {
        if n >= 64 {
            VarMask(u64::MAX)
        } else {
            VarMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(var: usize) -> Self {
        VarMask(1 << var)
    }

    pub fn contains(self, var: usize) -> bool {
        self.0 >> var & 1 == 1
    }

    pub fn insert(&mut self, var: usize) {
        self.0 |= 1 << var;
    }

    pub fn union(self, other: VarMask) -> VarMask {
        VarMask(self.0 | other.0)
    }

    pub fn intersection(self, other: VarMask) -> VarMask {
        VarMask(self.0 & other.0)
    }

    pub fn difference(self, other: VarMask) -> VarMask {
        VarMask(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> VarMask {
        VarMask(!self.0 & VarMask::all(n).0)
    }

    pub fn is_subset(self, other: VarMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for VarMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Declared variables together with their comparison precedence.
///
/// `priority[0]` is the index of the most significant variable, `priority[1]`
/// the next one, and so on.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Arc<[String]>,
    priority: Arc<[usize]>,
}

impl VarSet {
    /// Variables listed from most to least significant.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let priority: Vec<usize> = (0..names.len()).collect();
        Self::with_priority(names, &priority)
    }

    pub fn with_priority<S: AsRef<str>>(names: &[S], priority: &[usize]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::usage("at least one variable is required"));
        }
        if names.len() > 64 {
            return Err(Error::usage("at most 64 variables are supported"));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::usage(format!("duplicate variable '{a}'")));
            }
        }
        let mut seen = vec![false; names.len()];
        if priority.len() != names.len() {
            return Err(Error::usage("priority must list every variable once"));
        }
        for &p in priority {
            if p >= names.len() || seen[p] {
                return Err(Error::usage("priority is not a permutation"));
            }
            seen[p] = true;
        }
        Ok(VarSet {
            names: names.into(),
            priority: priority.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ordered: Vec<&str> = self.priority.iter().map(|&i| self.names[i].as_str()).collect();
        write!(f, "VarSet({})", ordered.join(" > "))
    }
}

/// Exponent vector with a cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into(),
            degree: 0,
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into(),
            degree,
        }
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> VarMask {
        let mut m = VarMask::EMPTY;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m.insert(i);
            }
        }
        m
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self, other)?;
        Ok(self.mul(other))
    }

    /// Product. Panics on a dimension mismatch; see [`Monomial::try_mul`].
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial dimension mismatch");
        let exps: Vec<u32> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial {
            exps: exps.into(),
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, var: usize) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[var] += 1;
        Monomial {
            exps: exps.into(),
            degree: self.degree + 1,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Vec<u32> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps: exps.into(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders as `x^2*y`, or `1` for the unit monomial.
    pub fn render(&self, vars: &VarSet) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for &v in vars.priority() {
            match self.exps[v] {
                0 => {}
                1 => parts.push(vars.names()[v].clone()),
                e => parts.push(format!("{}^{}", vars.names()[v], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

fn check_dims(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::usage(format!(
            "monomial dimension mismatch: {} vs {}",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(())
}

/// `a * b`, rejecting mismatched dimensions.
pub fn mono_mul(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    a.try_mul(b)
}

pub fn mono_div(a: &Monomial, b: &Monomial) -> Result<Option<Monomial>> {
    check_dims(a, b)?;
    Ok(a.div(b))
}

pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_dims(a, b)?;
    Ok(a.lcm(b))
}

/// Every monomial in `nvars` variables with total degree at most `max_degree`,
/// in graded order.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut exps = vec![0u32; nvars];
        fill_degree(&mut exps, 0, d, &mut out);
    }
    out
}

fn fill_degree(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_degree(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}
