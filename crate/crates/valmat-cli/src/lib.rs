//! Command-line surface over the `valmat` library: JSON document I/O, axiom
//! checks, constructions, sequence verdicts, Lorentzian tests, and the
//! seeded parallel ultra-log-concavity search.

pub mod commands;
pub mod io;
pub mod search;
