//! Executable checks of the square hypothesis and its consequences.

mod class_algebra;
mod pgroup;
mod verdict;
mod wreath;

pub use class_algebra::{
    appendix_class_square_test, class_mult_coefficient, class_mult_count_at, ClassMultCoefficient,
    ClassSquareOutcome,
};
pub use pgroup::{
    elementary_abelian_subgroups, verify_pgroup_lemma_abundant, verify_pgroup_lemma_gen_abelian,
    ElementaryAbelian, GenerationReport, LemmaReport, PGROUP_ORDER_BOUND,
};
pub use verdict::{
    check_hypothesis, square_orders, square_set, sweep_primes, verify_corollary_frobenius,
    verify_corollary_orders, verify_theorem_a, verify_theorem_gn, Check, Counterexample,
    FrobeniusVerdict, GnReport, GroupContext, HypothesisCheck, Status, VerdictReport, DEFAULT_SEED,
};
pub use wreath::{proof_witness, twisted_square, wreath_witness_search, WitnessReport};
