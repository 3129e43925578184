//! Face vectors, link homology and torus-quotient spectral sequence ranks for
//! simplicial posets.
//!
//! The entry point for most uses is a [`poset::SimplicialPoset`], built from a
//! face lattice, a facet list, a JSON document ([`io`]) or the built-in
//! [`corpus`]. From there:
//!
//! * [`homology`] computes reduced Betti numbers over ℤ, ℚ and `𝔽_p`,
//! * [`facevec`] gives the f-, h-, ft-, h'- and h''-vectors and checks the
//!   identities between them,
//! * [`classify`] decides the Buchsbaum, Cohen–Macaulay and homology-manifold
//!   properties,
//! * [`charfn`] validates and samples characteristic functions,
//! * [`spectral`] produces the rank tables of the torus quotient.

pub mod charfn;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod facevec;
pub mod homology;
pub mod io;
pub mod poset;
pub mod spectral;

use thiserror::Error;

/// Any failure surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Poset(#[from] poset::PosetError),
    #[error(transparent)]
    Corpus(#[from] corpus::UnknownName),
    #[error(transparent)]
    Classify(#[from] classify::ClassifyError),
    #[error(transparent)]
    FaceVec(#[from] facevec::FaceVecError),
    #[error(transparent)]
    CharFn(#[from] charfn::CharFnError),
    #[error(transparent)]
    Spectral(#[from] spectral::SpectralError),
    #[error(transparent)]
    Io(#[from] io::IoError),
}
