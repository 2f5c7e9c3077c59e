//! Standard benchmark families.

use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};
use crate::ordering::{OrderKind, OrderingSpec};
use crate::polynomial::{Polynomial, Rational, Term};
use crate::system::SystemFile;

fn names(prefix: &str, range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

/// Cyclic-n roots system in the variables `x1, ..., xn` (or `x, y, z` for
/// n = 3), degrevlex.
pub fn gen_cyclic(n: usize) -> Result<SystemFile> {
    if n < 2 {
        return Err(Error::usage("cyclic systems need n >= 2"));
    }
    let vars = match n {
        2 => VarSet::new(&["x", "y"])?,
        3 => VarSet::new(&["x", "y", "z"])?,
        _ => VarSet::new(&names("x", 1..=n))?,
    };
    let ord = OrderingSpec::new(OrderKind::DegRevLex, vars);
    let mut polynomials = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut exps = vec![0u32; n];
            for j in i..i + k {
                exps[j % n] += 1;
            }
            Term {
                coeff: Rational::one(),
                mono: Monomial::new(exps),
            }
        });
        polynomials.push(Polynomial::from_terms(terms, &ord));
    }
    let last = [
        Term {
            coeff: Rational::one(),
            mono: Monomial::new(vec![1; n]),
        },
        Term {
            coeff: -Rational::one(),
            mono: Monomial::one(n),
        },
    ];
    polynomials.push(Polynomial::from_terms(last, &ord));
    Ok(SystemFile {
        ordering: ord,
        polynomials,
    })
}

/// Katsura-n system in `u0, ..., un`, degrevlex.
pub fn gen_katsura(n: usize) -> Result<SystemFile> {
    if n < 1 {
        return Err(Error::usage("katsura systems need n >= 1"));
    }
    let nv = n + 1;
    let vars = VarSet::new(&names("u", 0..nv))?;
    let ord = OrderingSpec::new(OrderKind::DegRevLex, vars);
    let var = |i: usize| Monomial::var(nv, i);
    let mut polynomials = Vec::with_capacity(nv);
    for m in 0..n as i64 {
        let mut terms = Vec::new();
        for i in -(n as i64)..=n as i64 {
            let j = m - i;
            if j.unsigned_abs() as usize > n {
                continue;
            }
            terms.push(Term {
                coeff: Rational::one(),
                mono: var(i.unsigned_abs() as usize).mul(&var(j.unsigned_abs() as usize)),
            });
        }
        terms.push(Term {
            coeff: -Rational::one(),
            mono: var(m as usize),
        });
        polynomials.push(Polynomial::from_terms(terms, &ord));
    }
    let mut linear = vec![Term {
        coeff: Rational::one(),
        mono: var(0),
    }];
    for i in 1..=n {
        linear.push(Term {
            coeff: Rational::from_integer(2.into()),
            mono: var(i),
        });
    }
    linear.push(Term {
        coeff: -Rational::one(),
        mono: Monomial::one(nv),
    });
    polynomials.push(Polynomial::from_terms(linear, &ord));
    Ok(SystemFile {
        ordering: ord,
        polynomials,
    })
}

/// Resolves a built-in system name such as `cyclic5` or `katsura3`.
pub fn builtin(name: &str) -> Result<SystemFile> {
    let lower = name.to_ascii_lowercase();
    let parse =
        |prefix: &str| -> Option<usize> { lower.strip_prefix(prefix)?.trim_start_matches(['-', '_']).parse().ok() };
    if let Some(n) = parse("cyclic") {
        return gen_cyclic(n);
    }
    if let Some(n) = parse("katsura") {
        return gen_katsura(n);
    }
    Err(Error::UnknownSystem(name.to_string()))
}
