//! Exact intersection-theory engine and verification suites for a family of
//! genus-six curves on a blown-up ℙ²×ℙ¹.

pub mod chow;
pub mod delpezzo;
pub mod dsl;
pub mod exact;
pub mod m6;
pub mod families;
pub mod report;
