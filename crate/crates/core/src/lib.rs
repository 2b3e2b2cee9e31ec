//! Exact checks for finite higher-rank graphs and the algebras built from
//! them one color at a time, computed in the Kumjian–Pask algebra.

pub mod cli;
pub mod corr;
pub mod iterate;
pub mod kgraph;
pub mod kpalg;
pub mod report;
