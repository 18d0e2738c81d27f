//! Equality of braid words through canonical normal forms.

mod garside;
mod identities;

pub use garside::NormalForm;
pub use identities::{random_instance, verify_identity, IdentityId, IdentityInstance, IdentityReport};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

pub fn normal_form(w: &BraidWord) -> NormalForm {
    NormalForm::of(w)
}

/// Canonical key of the group element, see [`NormalForm::key`].
pub fn canonical_key(w: &BraidWord) -> String {
    NormalForm::of(w).key()
}

/// Decides `u = v` in `B_k`.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch {
            left: u.strands(),
            right: v.strands(),
        });
    }
    if u.exponent_sum() != v.exponent_sum() {
        return Ok(false);
    }
    if u.permutation() != v.permutation() {
        return Ok(false);
    }
    Ok(NormalForm::of(u) == NormalForm::of(v))
}

/// Whether the word represents the trivial braid.
pub fn is_trivial(w: &BraidWord) -> bool {
    w.exponent_sum() == 0 && NormalForm::of(w).is_identity()
}
