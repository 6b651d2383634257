//! Error-bounded trajectory compression built around the Bounded Quadrant
//! System (BQS).
//!
//! The crate provides:
//!
//! * [`geometry`] — planar primitives: track points, lines, segments and
//!   bounding boxes, plus the distance measures everything else speaks.
//! * [`quadrant`] — the BQS bounding structure: per-quadrant boxes and
//!   bounding lines around a segment start, yielding lower/upper deviation
//!   bounds for any candidate segment line in constant time.
//! * [`compress`] — streaming and offline compressors sharing one interface:
//!   BQS (exact), FBQS (constant space), buffered Douglas-Peucker, buffered
//!   greedy deviation, offline Douglas-Peucker and dead reckoning, plus the
//!   brute-force deviation verifier.
//! * [`store`] — a compressed-trajectory store with spatial indexing,
//!   error-bounded merging of similar segments, and ageing with eviction.
//! * [`synth`] — a seeded correlated-random-walk movement generator.
//! * [`metrics`] — compression-rate / pruning-power metrics, the device
//!   operational-time model and the benchmark runner.
//! * [`io`] — CSV and JSON readers/writers used by the CLI and tests.

pub mod compress;
pub mod error;
pub mod geometry;
pub mod io;
pub mod metrics;
pub mod quadrant;
pub mod store;
pub mod synth;

pub use error::{Error, Result};
