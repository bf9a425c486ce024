//! Builds one code per named construction and prints its parameter report.
//!
//! No distance search runs here: the report carries the certified floor from
//! the construction itself, the Singleton ceiling, and the comparison against
//! the published row when one exists.  Run with
//! `cargo run --release --example build_code`.

use ratsurf::code::{build_construction, Construction};
use ratsurf::report;
use ratsurf::Field;

fn main() -> ratsurf::Result<()> {
    let picks = [
        (Construction::QuadricM2, 5),
        (Construction::QuadricM3, 5),
        (Construction::YF4, 4),
        (Construction::ZL3, 4),
        (Construction::ZL4, 7),
        (Construction::ZL5, 9),
    ];
    for (construction, q) in picks {
        let field = Field::of_order(q)?;
        let code = build_construction(&field, construction)?;
        let rep = report::report(&code, construction.tag());
        println!(
            "{:<11} q={}  n={:<3} k={:<2}  d in [{}, {}]{}",
            construction.tag(),
            q,
            code.n(),
            code.k(),
            code.d_lower(),
            code.d_upper().map_or("?".into(), |u| u.to_string()),
            match code.d_exact() {
                Some(d) => format!("  (exact {d} already at build)"),
                None => String::new(),
            }
        );
        if let Some(expected) = &rep.expected {
            println!("            published row: n={} k={} d={:?}", expected.n, expected.k, expected.d);
        }
    }

    // The full report of the last build, as the CLI's `build` command writes it.
    let field = Field::of_order(9)?;
    let code = build_construction(&field, Construction::ZL5)?;
    println!("\n{}", report::report(&code, Construction::ZL5.tag()).to_json());
    Ok(())
}
