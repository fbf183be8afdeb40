//! Render the 2-d walk as a rank table and as an SVG with arrows between
//! consecutively visited cells.
//!
//! ```bash
//! cargo run -p natrank --example grid_svg
//! ```

use natrank::cli::{grid_svg, grid_text};

fn main() {
    print!("{}", grid_text(6, 6));

    let path = std::env::temp_dir().join("natrank_walk.svg");
    std::fs::write(&path, grid_svg(6, 6)).unwrap();
    println!("wrote {}", path.display());
}
