//! Rank a tuple of naturals into a single natural and invert it.
//!
//! ```bash
//! cargo run -p natrank --example encode_decode
//! ```

use natrank::{rank_tuple, unrank_tuple, Dimension, Tuple};
use num_bigint::BigUint;

fn main() {
    let n = Tuple::from_u64s(&[3, 1, 4, 1, 5]).unwrap();
    let rank = rank_tuple(&n);
    println!("rank of ({n}) is {rank}");

    let k = Dimension::new(5).unwrap();
    let back = unrank_tuple(&rank, k);
    println!("decoding {rank} gives ({back})");
    assert_eq!(back, n);

    // any natural decodes, however large
    let huge = BigUint::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
    let tuple = unrank_tuple(&huge, k);
    println!("decoding {huge} gives ({tuple})");
    assert_eq!(rank_tuple(&tuple), huge);
}
