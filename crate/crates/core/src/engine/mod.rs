//! Completion engines: the signature-driven involutive completion, the plain
//! criterion-free baseline, minimal-basis extraction and the full involutive
//! normal form.

mod invbas;
mod invcomp;
mod minbas;
mod nf;

use serde::{Deserialize, Serialize};

pub use invbas::{inv_bas, inv_bas_with_stats};
pub use invcomp::{inv_comp, Completion, InvComp};
pub use minbas::min_bas;
pub(crate) use nf::reduce_with;
pub use nf::{autoreduce_tails, nf_full};

use crate::polynomial::Polynomial;

pub type Basis = Vec<Polynomial>;

/// Counters reported per run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Zero normal forms that no criterion caught.
    pub reds: u64,
    pub c1: u64,
    pub c2: u64,
    pub f5: u64,
    #[serde(rename = "super")]
    pub super_: u64,
    pub polys_loop: u64,
    pub polys_min: u64,
    pub max_deg: u32,
    pub elapsed_ms: u64,
}

/// When a head term can only be reduced by breaking the signature bound,
/// whether to queue the reduced difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HeadDeflection {
    /// Only for divisions whose ordering is not admissible, where the
    /// nonmultiplicative prolongations cannot recover the difference.
    #[default]
    NonAdmissibleOnly,
    Always,
    Never,
}

#[derive(Clone, Debug)]
pub struct EngineOptions {
    /// Record signatures of zero reductions and discard later quadruples
    /// whose signature they divide.
    pub use_syzygy_signatures: bool,
    /// Carry `poly = sum g_i f_i` for every quadruple.
    pub track_cofactors: bool,
    /// Count invariant violations into [`Diagnostics`].
    pub check_invariants: bool,
    pub head_deflection: HeadDeflection,
    /// Discard on a super top-reduction of any head reached by regular
    /// reductions, not only of the initial one.
    pub super_every_head: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            use_syzygy_signatures: false,
            track_cofactors: false,
            check_invariants: cfg!(debug_assertions),
            head_deflection: HeadDeflection::default(),
            super_every_head: true,
        }
    }
}

/// Invariant violations observed during a run. All zero on a healthy run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Pops where the selected quadruple's signature was below some element
    /// already in the basis.
    pub signature_order: u64,
    /// Insertions that duplicated a leading monomial already in the basis.
    pub duplicate_lm: u64,
    /// Quadruples queued with a signature below the one being processed.
    pub queued_below: u64,
    /// C1/C2 firings whose polynomial did not reduce to zero.
    pub criteria_nonzero: u64,
    /// Cofactor identities or admissibility failing on insertion.
    pub cofactor_failures: u64,
    pub admissibility_failures: u64,
    /// Elements left with unprocessed nonmultiplicative variables.
    pub unprocessed_at_exit: u64,
    pub checked: bool,
}

impl Diagnostics {
    pub fn total(&self) -> u64 {
        self.signature_order
            + self.duplicate_lm
            + self.queued_below
            + self.criteria_nonzero
            + self.cofactor_failures
            + self.admissibility_failures
            + self.unprocessed_at_exit
    }
}
