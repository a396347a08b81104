//! Exact obstruction pipeline for rational homology projective planes with
//! quotient singularities of index one, two and three.

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod floer;
pub mod lattice;
pub mod linking;
pub mod screening;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
    #[error(transparent)]
    Catalog(#[from] catalog::CatalogError),
    #[error(transparent)]
    Floer(#[from] floer::FloerError),
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Linking(#[from] linking::LinkingError),
    #[error("{0}")]
    Usage(String),
}
