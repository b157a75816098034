pub mod arith;
pub mod cache;
pub mod cli;
pub mod context;
pub mod deform;
pub mod eigencone;
pub mod error;
pub mod golden;
pub mod horn;
pub mod liecoh;
pub mod poly;
pub mod polyhedral;
pub mod report;
pub mod rootsys;
pub mod schubert;
pub mod weyl;
