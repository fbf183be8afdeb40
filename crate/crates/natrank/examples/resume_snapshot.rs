//! Enumerator state is a tuple and its rank, so a stream can be
//! serialized mid-walk and resumed later, in another process if need be.
//!
//! ```bash
//! cargo run -p natrank --example resume_snapshot
//! ```

use natrank::{enumerate, Dimension, Enumerator, Space, Tuple};

fn main() {
    let k = Dimension::new(3).unwrap();
    let mut stream = enumerate(k, Space::Full);

    println!("first batch:");
    for (rank, tuple) in stream.by_ref().take(5).enumerate() {
        println!("  {rank}: ({tuple})");
    }

    let snapshot = serde_json::to_string(&stream).unwrap();
    println!("snapshot: {snapshot}");

    let resumed: Enumerator = serde_json::from_str(&snapshot).unwrap();
    println!("resumed at rank {}:", resumed.next_rank());
    for (offset, tuple) in resumed.take(5).enumerate() {
        println!("  {}: ({tuple})", offset + 5);
    }

    // resuming is indistinguishable from never stopping
    let replay: Vec<Tuple> = enumerate(k, Space::Full).take(10).collect();
    let stitched: Vec<Tuple> = enumerate(k, Space::Full).take(5).collect();
    let resumed: Enumerator = serde_json::from_str(&snapshot).unwrap();
    let mut stitched = stitched;
    stitched.extend(resumed.take(5));
    assert_eq!(stitched, replay);
}
