//! Scans a grid of (n, d) cells and summarizes where the lex maxima stop
//! being linearly ordered.
//!
//!     cargo run --release --example grid_scan -- 6 16

use haldane::report::scan;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n_max, d_max) = match &args[..] {
        [n, d] => (n.parse().unwrap(), d.parse().unwrap()),
        _ => (6, 16),
    };
    let rows = scan(2, n_max, d_max);
    for row in &rows {
        println!("{}", row.to_json());
    }
    for n in 2..=n_max {
        let first = rows.iter().find(|r| r.n == n && r.pair.is_some());
        match first {
            Some(r) => eprintln!("n={n}: first refutation at d={}", r.d),
            None => eprintln!("n={n}: none up to d={d_max}"),
        }
    }
}
