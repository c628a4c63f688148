//! Exact-arithmetic engine for homogeneous G2-structures.

pub mod catalog;
pub mod error;
pub mod exterior;
pub mod homspace;
pub mod liealg;
pub mod linalg;
pub mod octonion;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use exterior::{hodge, Blade, Form, Metric, Orientation};
pub use linalg::QMatrix;
pub use rational::Rational;
