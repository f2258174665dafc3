pub mod cli;
pub mod filters;
pub mod simkit;
pub mod specfun;
pub mod theory;
