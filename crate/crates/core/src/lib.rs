pub mod error;
pub mod liealg;
pub mod linalg;
pub mod models;
pub mod group;
pub mod parabolic;
pub mod orbit;
pub mod spherical;
pub mod normalizer;
pub mod problem;
pub mod analysis;
pub mod catalog;
pub mod report;
pub mod cli;
