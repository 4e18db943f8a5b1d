//! Behavioral simulator of an in-memory-computing crypto fabric.
//!
//! The fabric is modeled as four hardware blocks driven by a small custom
//! instruction set:
//!
//! 1. a compute-enabled memory ([`cem`]) that executes word-level bitwise
//!    and arithmetic operations between stored words in place,
//! 2. a bi-directional shifter ([`shifter`]) for the ShiftRows byte
//!    permutations,
//! 3. a LUT fabric ([`lut_fabric`]) of dual-function RAM/CAM arrays
//!    ([`ra_cam`]) plus XOR trees that evaluates combined AES steps by
//!    table lookup, and
//! 4. a controller ([`controller`]) that fetches, decodes and dispatches
//!    the custom instructions ([`isa`]) to the blocks.
//!
//! Every cryptographic result the fabric produces is differentially
//! checked against straightforward reference implementations in
//! [`crypto_ref`]. Cycle and energy accounting lives in [`perf`]; all
//! latency/energy figures are abstract configurable parameters, not
//! circuit-derived values.
//!
//! With the default `parallel` feature, independent ECB/CTR block batches
//! are sharded across threads with rayon; disabling the feature falls back
//! to sequential execution with bit-identical output.

pub mod cem;
pub mod controller;
pub mod crypto_ref;
pub mod error;
pub mod isa;
pub mod lut_fabric;
pub mod perf;
pub mod ra_cam;
pub mod shifter;

pub use crypto_ref::{AesVariant, Direction, Mode, StateBlock};
pub use error::{Error, Result};
