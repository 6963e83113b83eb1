//! Exact-arithmetic spectra of class-generated random walks and the
//! normal-approximation error bounds they satisfy.
//!
//! Four families of structures are supported, each contributing a stationary
//! "Plancherel-type" measure, an eigenvalue statistic `W`, and a reversible
//! kernel whose one-step move from stationarity yields an exchangeable pair:
//!
//! * finite symmetric groups (character ratios under Plancherel measure),
//! * Gelfand pairs (spherical function values; the hypercube and the
//!   perfect-matchings pair are built in),
//! * the twisted pair behind projective characters of `S_n` (spin character
//!   ratios under shifted Plancherel measure),
//! * association schemes (normalized eigenvalues, e.g. Hamming graphs).
//!
//! Everything up to the final float comparison against the normal CDF is done
//! in exact rational arithmetic: walk probabilities, orthogonality relations,
//! kernel audits, and the moment statistics that enter the bounds. The
//! [`stein`] module assembles the bounds symbolically (rationals under second
//! and fourth roots) and only then evaluates them; [`normal`] computes exact
//! atom distributions of `W` and their Kolmogorov distance to the standard
//! normal.
//!
//! ```
//! use charwalk::characters::CharacterTable;
//! use charwalk::partition::Partition;
//! use charwalk::{normal, stein};
//!
//! // The transposition walk on the symmetric group of degree 8.
//! let table = CharacterTable::new(8);
//! let class = table.index_of(&Partition::hook_type(8, 2)?).unwrap();
//!
//! // Exact spectrum of W, its distance to the normal, and the bound.
//! let spectrum = normal::w_symmetric(&table, class)?;
//! assert!(spectrum.mean_is_zero());
//! let distance = normal::kolmogorov_distance(&spectrum)?;
//! let bound = stein::limgroup_bound(&table, 2)?;
//! assert!(distance <= bound.total);
//! # Ok::<(), charwalk::Error>(())
//! ```

// Matrix-style loops here address several tables by one shared index;
// rewriting them around iterators obscures which identity is being summed.
#![allow(clippy::needless_range_loop)]

pub mod chains;
pub mod characters;
pub mod gelfand;
pub mod normal;
pub mod partition;
pub mod perm;
pub mod radical;
pub mod rational;
pub mod schemes;
pub mod spectrum;
pub mod spin;
pub mod stein;
pub mod verify;
pub mod walks;

pub use gelfand::Label;
pub use partition::{enumerate_partitions, jack_measure, z_of, Partition, PartitionFilter};
pub use radical::Radical;
pub use rational::Rat;
pub use spectrum::SpectrumAtomList;

/// Errors reported by the exact pipelines.
///
/// The CLI maps these onto its exit codes: validation problems exit 2,
/// resource-bound rejections exit 3, failed exact identities exit 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two arguments that must index objects of the same size do not.
    SizeMismatch(String),
    /// An argument is outside the operation's domain.
    InvalidArgument(String),
    /// The request is valid but exceeds an enumeration bound.
    ResourceBound(String),
    /// A relation matrix set fails one of the four scheme axioms.
    AxiomViolation { axiom: u8, detail: String },
    /// The input is a valid scheme but outside the exact-eigenvalue class
    /// this crate handles.
    Capability(String),
    /// A statistic is degenerate (e.g. `W` identically zero, or `a = 0`).
    Degenerate(String),
    /// An identity that must hold exactly failed to.
    IdentityFailure(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::SizeMismatch(s) => write!(f, "size mismatch: {s}"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::ResourceBound(s) => write!(f, "resource bound exceeded: {s}"),
            Error::AxiomViolation { axiom, detail } => {
                write!(f, "association scheme axiom {axiom} violated: {detail}")
            }
            Error::Capability(s) => write!(f, "unsupported input: {s}"),
            Error::Degenerate(s) => write!(f, "degenerate statistic: {s}"),
            Error::IdentityFailure(s) => write!(f, "identity failure: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
