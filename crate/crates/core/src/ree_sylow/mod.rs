//! The Sylow 3-subgroup of a small Ree group as an explicit triple model.

mod field;
mod model;
mod verify;

pub use field::{Field, FieldElt};
pub use model::{DiagonalAction, PModel, ProductLaw, Triple, TripleAction, WAction};
pub use verify::{
    verify_centralizers, verify_p_structure, verify_w_orbits, Check, Mode, OrbitSummary, SylowReport,
};
