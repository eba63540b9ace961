//! Hopf *-structure: coproduct, counit, antipode, involution, convolution,
//! the Haar state and corepresentation theory.

mod corep;
mod haar;
mod maps;
mod quotient;
mod structure;
mod tensor;
mod verify;

pub use corep::{
    character_of, decompose_character, intertwiner_space, peter_weyl_coverage, verify_characters,
    verify_corep, CorepMatrix, CorepVerdict, IrrepLabel,
};
pub use haar::{derive_haar_weight, gram_spectrum, haar, haar_gram, haar_monomial, verify_haar};
pub use maps::{convolve, pointwise_inverse, LinearMapTable};
pub use quotient::verify_hopf_ideal;
pub use structure::{
    antipode, coproduct, coproduct_monomial, counit, counit_monomial, derive_antipode,
    frozen_antipode, star, star_tensor,
};
pub use tensor::TensorElement;
pub use verify::{
    antipode_squared_is_identity, counit_of_unit, generator_elements, verify_hopf_axioms,
};
