//! Runs the minimal acceptance suite and prints one line per criterion.

use polycount::verify::{run_suite, Suite};
use polycount::Budget;

fn main() {
    let report = run_suite(Suite::Minimal, &Budget::default());
    for c in &report.criteria {
        println!("{}", c.status_line());
        for f in c.failures() {
            println!("  {}: {}", f.name, f.detail);
        }
    }
}
