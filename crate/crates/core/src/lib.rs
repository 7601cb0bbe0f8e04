pub mod audit;
pub mod corona;
pub mod format;
pub mod geodetic;
pub mod graph;
