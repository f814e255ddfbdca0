use crate::arith::DEFAULT_SYMBOLIC_CAP;

/// Deliberate single-constant faults, used to check that the verification
/// suites notice a broken formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Flip the sign of θ in the symmetric eigenvalue sum.
    SymmetricSign,
    /// Add one to the counting term on the diagonal of `T_i`.
    TDiagonal,
    /// Add one to the normalizing factorial product of averaged characters.
    AveragedNorm,
}

impl Mutation {
    pub fn parse(s: &str) -> Option<Mutation> {
        match s.trim() {
            "eig-sign" => Some(Mutation::SymmetricSign),
            "t-diag" => Some(Mutation::TDiagonal),
            "avg-norm" => Some(Mutation::AveragedNorm),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    pub symbolic_cap: usize,
    pub mutation: Option<Mutation>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            symbolic_cap: DEFAULT_SYMBOLIC_CAP,
            mutation: None,
        }
    }
}

impl Settings {
    pub fn with_cap(cap: usize) -> Self {
        Settings {
            symbolic_cap: cap,
            mutation: None,
        }
    }

    pub fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }
}
