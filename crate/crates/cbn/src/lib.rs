//! Conjunctive Bayesian networks: probabilistic models of accumulating
//! events whose order of occurrence is constrained by a partial order.
//!
//! A model is a poset on `n` events plus an occurrence probability θ_e per
//! event. Genotypes (subsets of events) have positive probability exactly
//! when they are order ideals of the poset, and the ideals form a
//! distributive lattice. This crate provides:
//!
//! * the combinatorial core — bit-packed genotypes, transitively closed
//!   posets, order-ideal lattices ([`poset`], [`genotype`], [`lattice`]);
//! * the probability model with exact sampling ([`model`]);
//! * closed-form maximum-likelihood estimation of θ, the maximal
//!   data-compatible poset, ε-tolerant relaxations and a
//!   compatible/uniform mixture for noisy data ([`estimate`], [`select`]);
//! * an exact algebraic layer — symbolic genotype polynomials, the
//!   Möbius/zeta transform pair and the quadratic lattice invariants that
//!   certify a distribution as a model distribution ([`algebra`]);
//! * file formats, JSON fit reports and the command implementations
//!   behind the `cbn` binary ([`io`]).
//!
//! ```
//! use cbn::poset::Poset;
//! use cbn::model::CbnModel;
//! use cbn::select;
//!
//! // Two bottom events, both required before either top event.
//! let poset = Poset::from_relations(4, &[(0, 2), (1, 2), (0, 3), (1, 3)])?;
//! let model = CbnModel::new(poset.clone(), vec![0.8, 0.7, 0.5, 0.4])?;
//! let data = model.sample(5_000, 42);
//!
//! // Structure and parameters are recovered in closed form.
//! let fit = select::fit(&data, 0.0)?;
//! assert_eq!(fit.poset, poset);
//! assert!(fit.theta_hat.iter().zip(model.theta()).all(|(a, b)| (a - b).abs() < 0.05));
//! # Ok::<(), cbn::CbnError>(())
//! ```

pub mod algebra;
pub mod config;
pub mod counts;
pub mod error;
pub mod estimate;
pub mod genotype;
pub mod io;
pub mod lattice;
pub mod model;
pub mod poset;
pub mod select;
pub mod testutil;

pub use counts::CountVector;
pub use error::{CbnError, Result};
pub use genotype::Genotype;
pub use lattice::GenotypeLattice;
pub use model::CbnModel;
pub use poset::Poset;
pub use select::{MixtureFit, ScanResult};
