//! Library side of the `oddorient` command: input loading, the random
//! corpus, DOT export, the result cache and the check suite.

pub mod cache;
pub mod corpus;
pub mod export;
pub mod input;
pub mod suite;
