//! Per-instance work for the generated property runs.
//!
//! Every function here is a pure function of `(field, dim, seed)`, so
//! callers may run instances in any order and merge by seed.

use crate::algebra::{IdealSearch, Simplicity};
use crate::catalog::{random_dim3, random_extension_chain, Chain, StuckReason};
use crate::exactfield::Field;
use crate::exactla::Subspace;
use crate::structure::{alpha_vanishing_scan, classify, Case};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dim3Outcome {
    pub seed: u64,
    pub lie: bool,
    /// Number of λ samples; zero for Lie instances.
    pub lambdas: usize,
    pub derivations: usize,
    pub alpha_failures: usize,
    /// Extensions that are invalid or have ω-rank above 2.
    pub nondegenerate_extensions: usize,
}

impl Dim3Outcome {
    pub fn passed(&self) -> bool {
        self.alpha_failures == 0 && self.nondegenerate_extensions == 0
    }
}

pub fn dim3_instance(field: Field, seed: u64) -> Dim3Outcome {
    let a = random_dim3(field, seed);
    let mut out = Dim3Outcome {
        seed,
        lie: a.is_lie(),
        lambdas: 0,
        derivations: 0,
        alpha_failures: 0,
        nondegenerate_extensions: 0,
    };
    if out.lie {
        return out;
    }
    let rep = alpha_vanishing_scan(&a).expect("non-Lie of dimension 3");
    for s in &rep.scans {
        out.lambdas += 1;
        out.derivations += s.solutions;
        out.alpha_failures += s.alpha_failures.len();
        out.nondegenerate_extensions += s
            .extension_ranks
            .iter()
            .filter(|r| !r.is_some_and(|r| r <= 2))
            .count();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonLieOutcome {
    pub case: Case,
    /// Codimension of the exhibited abelian subalgebra, if any.
    pub abelian_codim: Option<usize>,
    /// The exhibited subspace re-checked as an abelian subalgebra of codim ≤ 3.
    pub abelian_verified: bool,
    /// Only computed for dim ≥ 5.
    pub simple: Option<bool>,
    pub abelian_ideal: Option<IdealSearch>,
    pub solvable_ideal: Option<IdealSearch>,
}

impl NonLieOutcome {
    /// Verdict (ii) or (iii) with a verified abelian subalgebra.
    pub fn main_ok(&self) -> bool {
        matches!(
            self.case,
            Case::CodimOneLieSubalgebra(_) | Case::KernelCodimTwo { .. }
        ) && self.abelian_verified
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureOutcome {
    Stuck { at_dim: usize, reason: StuckReason },
    Lie,
    NonLie(Box<NonLieOutcome>),
}

fn verified(a: &crate::algebra::AnticommAlgebra, s: &Option<Subspace>) -> bool {
    s.as_ref()
        .is_some_and(|s| s.codim() <= 3 && a.is_subalgebra(s) && a.is_abelian_subspace(s))
}

pub fn structure_instance(field: Field, dim: usize, seed: u64) -> StructureOutcome {
    let a = match random_extension_chain(field, seed, dim) {
        Chain::Done(a) => a,
        Chain::Stuck { at_dim, reason } => return StructureOutcome::Stuck { at_dim, reason },
    };
    if a.is_lie() {
        return StructureOutcome::Lie;
    }
    let v = classify(&a);
    let big = dim >= 5;
    StructureOutcome::NonLie(Box::new(NonLieOutcome {
        abelian_codim: v.abelian_small_codim.as_ref().map(Subspace::codim),
        abelian_verified: verified(&a, &v.abelian_small_codim),
        case: v.case,
        simple: big.then(|| matches!(a.simplicity(), Simplicity::Simple)),
        abelian_ideal: big.then(|| a.find_abelian_ideal()),
        solvable_ideal: big.then(|| a.find_solvable_ideal()),
    }))
}
