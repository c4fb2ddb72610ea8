#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod curve;
pub mod error;
pub mod exact;
pub mod motion;
pub mod qpoly;
pub mod quat;
pub mod synthesis;
#[cfg(feature = "testing")]
pub mod testing;

pub use error::{Error, Result};
