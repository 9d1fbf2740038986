use crate::partition::Partition;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which method produced a Kronecker coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// Class sum of character triples.
    Oracle,
    TwoRowTwoRow,
    HookHook,
    HookTwoRow,
    /// `γ^{(n)}_{μν} = δ_{μν}`.
    DeltaRule,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Oracle => "Oracle",
            Provenance::TwoRowTwoRow => "TwoRowTwoRow",
            Provenance::HookHook => "HookHook",
            Provenance::HookTwoRow => "HookTwoRow",
            Provenance::DeltaRule => "DeltaRule",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Position in the triple `(λ, μ, ν)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    Lambda,
    Mu,
    Nu,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Lambda, Slot::Mu, Slot::Nu];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Slot::Lambda => "lambda",
            Slot::Mu => "mu",
            Slot::Nu => "nu",
        }
    }
}

/// A symmetry of the Kronecker coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// Conjugate the partitions in two slots.
    ConjugatePair(Slot, Slot),
    /// New slot `i` holds the partition previously in slot `order[i]`.
    Permute([Slot; 3]),
}

impl Move {
    /// Applies the move to a triple.
    pub fn apply(&self, triple: &[Partition; 3]) -> [Partition; 3] {
        match *self {
            Move::ConjugatePair(s, t) => {
                let mut out = triple.clone();
                out[s.index()] = out[s.index()].conjugate();
                out[t.index()] = out[t.index()].conjugate();
                out
            }
            Move::Permute(order) => order.map(|s| triple[s.index()].clone()),
        }
    }

    /// The move that undoes this one.
    pub fn inverse(&self) -> Move {
        match *self {
            Move::ConjugatePair(..) => *self,
            Move::Permute(order) => {
                let mut inv = [Slot::Lambda; 3];
                for (i, s) in order.iter().enumerate() {
                    inv[s.index()] = Slot::ALL[i];
                }
                Move::Permute(inv)
            }
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::ConjugatePair(s, t) => write!(f, "conjugate({},{})", s.name(), t.name()),
            Move::Permute(order) => write!(
                f,
                "permute({},{},{})",
                order[0].name(),
                order[1].name(),
                order[2].name()
            ),
        }
    }
}

/// A Kronecker coefficient together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerResult {
    pub gamma: BigUint,
    pub provenance: Provenance,
    /// Symmetry moves applied to the queried triple, in order, before the
    /// closed form or oracle was evaluated.
    pub moves: Vec<Move>,
}

impl KroneckerResult {
    pub fn new(gamma: impl Into<BigUint>, provenance: Provenance) -> Self {
        KroneckerResult {
            gamma: gamma.into(),
            provenance,
            moves: Vec::new(),
        }
    }
}
