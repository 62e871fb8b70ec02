//! Conjugacy classes, series, cores and Frobenius structure.

mod classes;
mod frobenius;
mod series;
mod subsets;

pub use classes::{conjugacy_classes, ConjClass, ConjClassTable};
pub use frobenius::{is_frobenius_with_complement, FrobeniusCheck};
pub use series::{
    derived_series, derived_subgroup, fitting_subgroup, is_elementary_abelian, is_nilpotent,
    is_p_group, is_soluble, p_core, series_report, sylow_subgroup, SeriesReport,
};
pub use subsets::{classes_of_order, normal_subsets_of_order_p, NormalSubset, SUBSET_CLASS_CAP};
