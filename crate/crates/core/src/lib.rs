pub mod algebra;
pub mod auto;
pub mod cartan;
pub mod coeff;
pub mod hopf;
pub mod pbw;
pub mod report;
pub mod rewrite;
pub mod session;
pub mod syntax;
