pub mod cli;
pub mod diagram;
pub mod evaluator;
pub mod exactnum;
pub mod moves;
pub mod report;
pub mod tqft;
