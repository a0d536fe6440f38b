use std::fmt;
use std::str::FromStr;

use crate::bbu::{self, ExtensionSet};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::labelling::{Labelling, LabellingSet};
use crate::propagation::grounded_labelling;
use crate::ub;
use crate::weakly_complete as wc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Complete,
    Grounded,
    Preferred,
    Stable,
    WeaklyComplete,
    WeaklyPreferred,
    WeaklyGrounded,
    WeaklyStable,
    UbGrounded,
    UbPreferred,
    BbuComplete,
    BbuGrounded,
    BbuPreferred,
}

impl Semantics {
    pub const ALL: [Semantics; 13] = [
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
        Semantics::Stable,
        Semantics::WeaklyComplete,
        Semantics::WeaklyPreferred,
        Semantics::WeaklyGrounded,
        Semantics::WeaklyStable,
        Semantics::UbGrounded,
        Semantics::UbPreferred,
        Semantics::BbuComplete,
        Semantics::BbuGrounded,
        Semantics::BbuPreferred,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Semantics::Complete => "CO",
            Semantics::Grounded => "GR",
            Semantics::Preferred => "PR",
            Semantics::Stable => "ST",
            Semantics::WeaklyComplete => "WCO",
            Semantics::WeaklyPreferred => "WPR",
            Semantics::WeaklyGrounded => "WGR",
            Semantics::WeaklyStable => "WST",
            Semantics::UbGrounded => "UBGR",
            Semantics::UbPreferred => "UBPR",
            Semantics::BbuComplete => "BBU-CO",
            Semantics::BbuGrounded => "BBU-GR",
            Semantics::BbuPreferred => "BBU-PR",
        }
    }

    /// Semantics whose results are extensions rather than labellings.
    pub fn is_extension_based(self) -> bool {
        matches!(
            self,
            Semantics::BbuComplete | Semantics::BbuGrounded | Semantics::BbuPreferred
        )
    }

    /// Semantics that always produce exactly one labelling.
    pub fn is_single_status(self) -> bool {
        matches!(
            self,
            Semantics::Grounded | Semantics::WeaklyGrounded | Semantics::UbGrounded
        )
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        Semantics::ALL
            .into_iter()
            .find(|sem| sem.code() == up)
            .ok_or_else(|| Error::Invalid(format!("unknown semantics `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Labellings(LabellingSet),
    Extensions(ExtensionSet),
}

impl Outcome {
    /// Labelling view. Each extension E becomes the labelling with E in and its targets out.
    pub fn into_labellings(self, fw: &Framework) -> LabellingSet {
        match self {
            Outcome::Labellings(set) => set,
            Outcome::Extensions(exts) => exts
                .iter()
                .map(|e| Labelling::from_in_set(fw, e).expect("extensions are conflict-free"))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Outcome::Labellings(set) => set.len(),
            Outcome::Extensions(exts) => exts.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn evaluate(fw: &Framework, sem: Semantics, cfg: &Config) -> Result<Outcome> {
    let single = |l: Labelling| Outcome::Labellings(std::iter::once(l).collect());
    Ok(match sem {
        Semantics::Grounded | Semantics::WeaklyGrounded => single(grounded_labelling(fw)),
        Semantics::UbGrounded => single(ub::ub_grounded_labelling(fw)),
        Semantics::Complete => Outcome::Labellings(wc::dung_complete_with(fw, cfg)?),
        Semantics::Preferred => Outcome::Labellings(wc::dung_preferred_with(fw, cfg)?),
        Semantics::Stable | Semantics::WeaklyStable => {
            Outcome::Labellings(wc::weakly_stable_with(fw, cfg)?)
        }
        Semantics::WeaklyComplete => Outcome::Labellings(wc::weakly_complete_with(fw, cfg)?),
        Semantics::WeaklyPreferred => Outcome::Labellings(wc::weakly_preferred_with(fw, cfg)?),
        Semantics::UbPreferred => Outcome::Labellings(ub::ub_preferred_with(
            fw,
            ub::PrecedenceScope::default(),
            cfg,
        )?),
        Semantics::BbuComplete => Outcome::Extensions(bbu::bbu_complete_with(fw, cfg)?),
        Semantics::BbuGrounded => Outcome::Extensions(bbu::bbu_grounded_with(fw, cfg)?),
        Semantics::BbuPreferred => Outcome::Extensions(bbu::bbu_preferred_with(fw, cfg)?),
    })
}

/// Results of `sem` as labellings.
pub fn labellings(fw: &Framework, sem: Semantics, cfg: &Config) -> Result<LabellingSet> {
    Ok(evaluate(fw, sem, cfg)?.into_labellings(fw))
}
