//! Counts rational points of explicit plane curves, including the two
//! curves shipped in data/ that pin down the sharpness of the bounds.
//!
//! The quartic over F_4 attains 14 points — the one exceptional pair where
//! the (d-1)q + 1 bound fails and 14 is the true maximum.  The quintic over
//! F_5, a line times a quartic, attains 22 = 4q + 2 points, matching the
//! ceiling used for the quintic-system distance floor.  Run with
//! `cargo run --release --example count_curve`.

use ratsurf::bounds;
use ratsurf::geometry::PlaneCurve;

fn main() -> ratsurf::Result<()> {
    let quartic = PlaneCurve::parse(include_str!("../data/extremal-quartic-f4.curve"))?;
    let count = quartic.count_points();
    println!("quartic over F_4: {:?}", quartic.form());
    println!(
        "  {} rational points; generic ceiling {} is beaten, union of rational lines: {}",
        count,
        (quartic.degree() as u64 - 1) * 4 + 1,
        quartic.is_union_of_rational_lines()
    );
    assert_eq!(count, bounds::homma_kim(4, 4).value);

    let quintic = PlaneCurve::parse(include_str!("../data/maximal-quintic-f5.curve"))?;
    let count = quintic.count_points();
    println!("\nquintic over F_5: {:?}", quintic.form());
    println!(
        "  {} rational points; not-a-line-union ceiling (d-1)q + 2 = {}",
        count,
        bounds::cor_major(5, 5).value
    );
    assert_eq!(count, 22);

    let line = PlaneCurve::parse("q=7 nvars=3 deg=1\n0 0 1\n")?;
    println!("\nthe line z = 0 over F_7: {} points (q + 1)", line.count_points());
    Ok(())
}
