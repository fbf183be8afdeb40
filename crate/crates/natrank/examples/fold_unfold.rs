//! The bijection between the monotone cone and the full space: fold takes
//! the last coordinate then consecutive differences, unfold takes prefix
//! sums.
//!
//! ```bash
//! cargo run -p natrank --example fold_unfold
//! ```

use natrank::{MonotoneTuple, Tuple};

fn main() {
    let monotone = MonotoneTuple::from_u64s(&[5, 3, 2]).unwrap();
    let anywhere = monotone.fold();
    println!("fold   ({monotone})  ->  ({anywhere})");

    let back = anywhere.unfold();
    println!("unfold ({anywhere})  ->  ({back})");
    assert_eq!(back, monotone);

    // unfold lands in the cone from any starting point
    let n = Tuple::from_u64s(&[0, 7, 0, 2]).unwrap();
    println!("unfold ({n})  ->  ({})", n.unfold());
    assert!(Tuple::from(n.unfold()).is_monotone());
}
