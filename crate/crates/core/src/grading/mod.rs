//! Grading groups, commutation factors and multipliers.

mod bicharacter;
mod group;
mod sigma;

pub use bicharacter::{
    bicharacter_eval, product_bicharacter, validate_bicharacter, BiCharacter, BiCharacterViolation,
    ValidationReport,
};
pub use group::{group_add, GroupElement, GroupSpec};
pub use sigma::{
    delta_from_sigma, sigma_eval, validate_multiplier, validate_symmetric_multiplier, Delta, LawCheck,
    MultiplierLaw, SigmaForm,
};
