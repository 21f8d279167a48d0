//! Exact F2 algebra on words and codes.

mod code;
mod distribution;
pub mod io;
mod linear;
mod ops;
mod word;

pub use code::{Code, Transform};
pub use distribution::{
    distance_distribution, weight_enumerator, DistanceDistribution, WeightEnumerator,
};
pub use linear::{dual, span, LinearCode};
pub use ops::{
    greedy_orthogonal_subcode, hamming_distance, intersection_weight, parity_distance_check,
    self_orthogonality, weight, wrong_parity_pairs, Orthogonality,
};
pub use word::{Word, MAX_LEN};

impl Code {
    pub fn distance_distribution(&self) -> crate::Result<DistanceDistribution> {
        distance_distribution(self)
    }

    pub fn weight_enumerator(&self) -> WeightEnumerator {
        weight_enumerator(self)
    }

    pub fn span(&self) -> LinearCode {
        span(self)
    }
}
