//! Labelling-based semantics for abstract argumentation frameworks.
//!
//! Besides the classical complete, grounded, preferred and stable semantics, the crate
//! computes weakly complete labellings (acceptance may ignore attacks from undec arguments),
//! their preferred/grounded/stable refinements, the SCC-recursive undecidedness-blocking
//! semantics, and the weak admissibility family based on reducts.
//!
//! ```
//! use wcarg::{Framework, weakly_complete_labellings};
//!
//! let fw = Framework::new(["a", "b"], [("a", "a"), ("a", "b")]).unwrap();
//! let all = weakly_complete_labellings(&fw).unwrap();
//! assert_eq!(all.len(), 2);
//! ```

mod argset;
pub mod bbu;
mod config;
mod error;
pub mod fixtures;
mod framework;
pub mod io;
mod labelling;
pub mod oracle;
mod par;
pub mod principles;
mod propagation;
mod scc;
pub mod semantics;
pub mod task;
pub mod ub;
pub mod weakly_complete;

pub use argset::ArgSet;
pub use bbu::{
    bbu_complete, bbu_grounded, bbu_preferred, reduct, weakly_admissible_sets, weakly_defends,
    ExtensionSet,
};
pub use config::{Config, Execution, DEFAULT_MAX_ARGS, DEFAULT_MAX_BBU_ARGS};
pub use error::{Error, Result};
pub use framework::Framework;
pub use labelling::{Discovery, Label, Labelling, LabellingSet, NamedLabelling};
pub use propagation::{grounded_labelling, in_out_fw, labelling_from_in_set, Propagation};
pub use scc::SccDecomposition;
pub use semantics::{Outcome, Semantics};
pub use ub::{
    precedence_initial_set, semantic_precedence, ub_grounded_labelling, ub_preferred_labellings,
    PrecedenceRelation, PrecedenceScope,
};
pub use weakly_complete::{
    credulous_wc, dung_complete_labellings, skeptical_wc, weakly_complete_labellings,
    weakly_grounded_labelling, weakly_preferred_labellings, weakly_stable_labellings,
};
