//! File formats, named graphs, random corpora and the command line front end
//! for [`regcensus_core`].

pub mod cli;
pub mod corpus;
pub mod formats;
pub mod named;
