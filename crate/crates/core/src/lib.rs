//! Link-level laboratory for massive-MIMO M-PAM transmission with
//! training-based (LMMSE-estimated) channel state information.
//!
//! The crate has three halves that are meant to be checked against each
//! other:
//!
//! * [`sim`] runs seeded Monte Carlo trials: pilot transmission, LMMSE
//!   channel estimation, data transmission and LS / RLS / Box-RLS / LMMSE
//!   decoding ([`decoders`]).
//! * [`asymptotics`] predicts the large-system MSE, SEP and goodput of the
//!   same decoders from scalar deterministic equations (closed form for
//!   LS/RLS, a scalar max-min problem for Box-RLS).
//! * [`optimizer`] uses the predictions to pick the data/pilot power split
//!   and the training duration.
//!
//! [`runner`] glues everything to flat config files and CSV output.

pub mod asymptotics;
pub mod decoders;
pub mod error;
pub mod optimizer;
pub mod runner;
pub mod search;
pub mod sim;
pub mod special;
pub mod system;

pub use error::{Error, Result};
pub use system::{Constellation, DerivedParams, PowerConvention, SystemConfig};
