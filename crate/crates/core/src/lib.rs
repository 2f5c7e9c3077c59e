//! Minimal involutive bases of polynomial ideals over the rationals.
//!
//! The main entry point is [`inv_comp`], a signature-ordered involutive
//! completion that discards useless prolongations with the F5 criterion,
//! super top-reduction and the involutive Buchberger criteria. [`inv_bas`]
//! is the plain completion without criteria; [`oracles`] holds the
//! independent checks used to validate both.
//!
//! ```
//! use invcomp_core::{inv_comp, parse_system, DivisionSpec};
//!
//! let sys = parse_system("vars: x y\norder: lex\np: x^2 - 3/2*y^2\np: 2*x*y + 3*y^2").unwrap();
//! let div = DivisionSpec::janet(sys.vars());
//! let (basis, stats) = inv_comp(&sys.polynomials, &div, &sys.ordering).unwrap();
//! assert_eq!(basis.len(), 3);
//! assert_eq!(stats.f5, 1);
//! ```

pub mod bench;
pub mod division;
pub mod engine;
pub mod error;
pub mod generators;
pub mod monomial;
pub mod oracles;
pub mod ordering;
pub mod polynomial;
pub mod signature;
pub mod system;

pub use bench::{format_stats, run_bench, run_cell, Algorithm, BenchConfig, BenchRow, StatsFormat};
pub use division::{
    axioms_check, inv_divisor, nm_pair, nm_set, thomas_completion, DivisionKind, DivisionSpec, Partition,
};
pub use engine::{
    autoreduce_tails, inv_bas, inv_bas_with_stats, inv_comp, min_bas, nf_full, Basis, Completion, Diagnostics,
    EngineOptions, HeadDeflection, InvComp, Stats,
};
pub use error::{Error, Result};
pub use generators::{gen_cyclic, gen_katsura};
pub use monomial::{mono_div, mono_lcm, mono_mul, Monomial, VarMask, VarSet};
pub use oracles::{admissibility_check, buchberger_nf, is_groebner, is_involutive, CofactorTrace};
pub use ordering::{mono_cmp, OrderKind, OrderingSpec};
pub use polynomial::{spoly, Polynomial, Rational, Term};
pub use signature::{criteria, sig_cmp, sig_mul, ArxivLm, Quadruple, Signature, Verdict};
pub use system::{parse_system, SystemFile};
