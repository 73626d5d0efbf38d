//! Support code for the `cyclesat` binary: the persistent result store.

pub mod store;

pub use store::{Discrepancy, ResultRecord, Store};
