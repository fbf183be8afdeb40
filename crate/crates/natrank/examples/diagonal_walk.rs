//! Stream ℕ² in rank order: the classic zig-zag over anti-diagonals of
//! constant coordinate sum.
//!
//! ```bash
//! cargo run -p natrank --example diagonal_walk
//! ```

use natrank::{enumerate, Dimension, Space};
use num_bigint::BigUint;

fn main() {
    let k = Dimension::new(2).unwrap();
    let mut current_sum: Option<BigUint> = None;
    for (rank, tuple) in enumerate(k, Space::Full).take(15).enumerate() {
        let sum: BigUint = tuple.coords().iter().sum();
        if current_sum.as_ref() != Some(&sum) {
            println!("--- diagonal {sum} ---");
            current_sum = Some(sum);
        }
        println!("{rank:>2}: ({tuple})");
    }
}
