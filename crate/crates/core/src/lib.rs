//! Parallel k-clique counting, listing, sampling and k-clique densest
//! subgraph peeling.
//!
//! The pipeline is: load a [`Graph`], rank its vertices with one of the
//! [`orientation`] strategies, direct it into a [`DirectedGraph`] whose
//! out-degrees are bounded by a constant times the arboricity, then run
//! [`counting`], [`sampling`] or [`peeling`] on the result.
//!
//! ```
//! use kclique::{counting, generate, orientation, peeling};
//!
//! let g = generate::complete(6);
//! let dg = orientation::orient(&g, &orientation::OrientConfig::default())?;
//! let counts = counting::count_per_vertex(&dg, 4, &counting::CountConfig::for_k(4))?;
//! assert_eq!(counts.total, 15);
//!
//! let peel = peeling::peel_exact(&g, &dg, 3)?;
//! assert_eq!(peel.best_density, 20.0 / 6.0);
//! # Ok::<(), kclique::Error>(())
//! ```
//!
//! With the default `parallel` feature the loops run on rayon; building
//! with `--no-default-features` gives a purely sequential library with the
//! same results.

pub mod counting;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod orientation;
pub mod par;
pub mod peeling;
pub mod sampling;

pub use counting::{CliqueCounts, CountConfig, Parallelism};
pub use error::{Error, Result};
pub use graph::{DirectedGraph, Graph, LabeledGraph, Ranking, VertexId};
pub use orientation::{OrientConfig, Strategy};
pub use peeling::PeelOutcome;
pub use sampling::SampleEstimate;
