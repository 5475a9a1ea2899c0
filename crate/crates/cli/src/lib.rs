//! Report types shared by the `kfq` binary and its tests.

pub mod report;
