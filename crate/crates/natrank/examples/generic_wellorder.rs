//! Rank elements of any successor-generated linear order by counting
//! predecessors, and verify the order's premises mechanically.
//!
//! ```bash
//! cargo run -p natrank --example generic_wellorder
//! ```

use natrank::{rank_by_counting, verify_prefix_bijection, FnOrder};

fn main() {
    // the even naturals under the usual order
    let evens = FnOrder {
        first: 0u64,
        compare: |a: &u64, b: &u64| a.cmp(b),
        next: |a: &u64| a + 2,
    };
    println!("rank of 14 among the evens: {}", rank_by_counting(&evens, &14, 100).unwrap());
    println!("prefix check: {}", verify_prefix_bijection(&evens, 200));

    // a target outside the walked prefix is reported, not looped on
    println!("rank of 13 among the evens: {:?}", rank_by_counting(&evens, &13, 100));

    // words ordered by length, then alphabetically, over a two-letter
    // alphabet; down-sets are finite, so counting ranks bijectively
    let words = FnOrder {
        first: String::new(),
        compare: |a: &String, b: &String| a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        next: |w: &String| {
            let mut chars: Vec<char> = w.chars().collect();
            for i in (0..chars.len()).rev() {
                if chars[i] == 'a' {
                    chars[i] = 'b';
                    return chars.into_iter().collect();
                }
                chars[i] = 'a';
            }
            chars.insert(0, 'a');
            chars.into_iter().collect()
        },
    };
    println!("prefix check for shortlex words: {}", verify_prefix_bijection(&words, 100));
    for target in ["a", "bb", "aba"] {
        let rank = rank_by_counting(&words, &target.to_string(), 100).unwrap();
        println!("rank of {target:?}: {rank}");
    }

    // a deliberately broken order: the successor skips 2 and emits it late
    let broken = FnOrder {
        first: 0u64,
        compare: |a: &u64, b: &u64| a.cmp(b),
        next: |a: &u64| match a {
            1 => 3,
            3 => 2,
            2 => 4,
            _ => a + 1,
        },
    };
    let report = verify_prefix_bijection(&broken, 50);
    assert!(!report.passed());
    println!("broken order: {report}");
}
