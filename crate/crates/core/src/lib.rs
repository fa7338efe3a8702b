#[cfg(feature = "cli")]
pub mod cli;
pub mod format;
pub mod identities;
pub mod invariants;
pub mod laurent;
pub mod ribbon;
