//! Walk the monotone cone with the successor function and watch the rank
//! advance by exactly one per step.
//!
//! ```bash
//! cargo run -p natrank --example successor_chain
//! ```

use natrank::{rank_monotone, Dimension, MonotoneTuple};

fn main() {
    let k = Dimension::new(3).unwrap();
    let mut element = MonotoneTuple::minimum(k);
    for _ in 0..12 {
        println!("rank {:>2}: ({element})", rank_monotone(&element));
        element = element.successor();
    }

    // the step rule also applies far from the origin
    let far = MonotoneTuple::from_u64s(&[1_000_000, 250, 250]).unwrap();
    let next = far.successor();
    println!("successor of ({far}) is ({next})");
    assert_eq!(rank_monotone(&next), rank_monotone(&far) + 1u32);
}
