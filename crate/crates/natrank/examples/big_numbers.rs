//! Ranks grow like the k-th power of the coordinate sum, so the codec is
//! arbitrary precision end to end. A 10-tuple with million-sized
//! coordinates ranks into a 64-digit number and still round-trips in
//! well under a millisecond.
//!
//! ```bash
//! cargo run --release -p natrank --example big_numbers
//! ```

use std::time::Instant;

use natrank::{rank_tuple, unrank_tuple, Dimension, Tuple};

fn main() {
    let k = Dimension::new(10).unwrap();
    let n = Tuple::from_u64s(&[1_000_000; 10]).unwrap();

    let rank = rank_tuple(&n);
    println!("tuple:  ({n})");
    println!("rank:   {rank}");
    println!("digits: {}", rank.to_string().len());

    assert_eq!(unrank_tuple(&rank, k), n);

    for _ in 0..10 {
        assert_eq!(unrank_tuple(&rank_tuple(&n), k), n);
    }
    let started = Instant::now();
    let rounds = 100;
    for _ in 0..rounds {
        let r = rank_tuple(&n);
        assert_eq!(unrank_tuple(&r, k), n);
    }
    println!("mean round trip: {:?}", started.elapsed() / rounds);
}
