pub mod abgrp;
pub mod error;
pub mod exactla;
pub mod ffield;
pub mod finmodel;
pub mod funcfield;
pub mod kring;
pub mod pvengine;
pub mod symcross;
pub mod verify;

pub use error::{Error, Result};
