//! Exact scalars and truncated series.

pub mod linalg;
mod quadext;
mod rational;
mod series;

pub use quadext::QuadExt;
pub use rational::Rational;
pub use series::TruncatedSeries;
