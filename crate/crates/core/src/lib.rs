#![no_std]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod hyperseries;
pub mod qpoly;
pub mod report;
pub mod summations;
pub mod transforms;

pub use error::{Error, Result};
