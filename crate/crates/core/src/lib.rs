pub mod cli;
pub mod error;
pub mod exactalg;
pub mod flags;
pub mod freealg;
pub mod gfq;
pub mod hall;
pub mod qschur;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
