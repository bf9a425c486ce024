//! Reproduces the two record codes: [57,12,34] over F_7 and [91,18,53] over
//! F_9, each one point better than the best distance known at publication
//! time for its length and dimension.
//!
//! The certification has three independent legs:
//!   1. a distance floor from the point-count bound on the curves of the
//!      linear system (every nonzero section vanishes on few points),
//!   2. a searched maximal curve whose codeword attains exactly that weight,
//!   3. for [57,12], a full information-set weight search that closes the
//!      gap without using the floor at all.
//!
//! Run with `cargo run --release --example record_codes` (the full weight
//! search for [57,12] enumerates ~2.3·10^8 messages; expect a few minutes on
//! one core).

use ratsurf::code::{build_construction, Construction};
use ratsurf::report;
use ratsurf::search::{min_distance_isd, witness_max_curve, SearchCaps};
use ratsurf::Field;

fn main() -> ratsurf::Result<()> {
    let caps = SearchCaps::default();

    println!("== quartics through a degree-3 point, q = 7 ==");
    let f7 = Field::of_order(7)?;
    let mut code = build_construction(&f7, Construction::ZL4)?;
    println!("built [n,k] = [{},{}], certified floor d >= {}", code.n(), code.k(), code.d_lower());
    let witness = witness_max_curve(&code, &caps)?;
    println!(
        "maximal curve: {} rational zeros via {} (ceiling {:?}, reached: {})",
        witness.zeros, witness.method, witness.bound, witness.reached
    );
    code.record_upper(code.n() as u64 - witness.zeros);
    println!("floor meets witness: d = {:?}", code.d_exact());

    let isd = min_distance_isd(&code, None, &caps)?;
    println!(
        "independent weight search: d = {:?} after {} levels over sets of rank {:?} ({} messages)",
        isd.exact, isd.levels_completed, isd.set_ranks, isd.messages
    );
    assert_eq!(isd.exact, code.d_exact(), "the two certifications must agree");
    let rep = report::report(&code, Construction::ZL4.tag());
    println!(
        "published best known at the time: {:?}; this code improves it: {:?}\n",
        rep.expected.as_ref().and_then(|e| e.best_known_d),
        rep.improves_best_known
    );

    println!("== quintics through a degree-3 point, q = 9 ==");
    let f9 = Field::of_order(9)?;
    let mut code = build_construction(&f9, Construction::ZL5)?;
    println!("built [n,k] = [{},{}], certified floor d >= {}", code.n(), code.k(), code.d_lower());
    let witness = witness_max_curve(&code, &caps)?;
    println!(
        "maximal curve: {} rational zeros via {} (ceiling {:?}, reached: {})",
        witness.zeros, witness.method, witness.bound, witness.reached
    );
    code.record_upper(code.n() as u64 - witness.zeros);
    println!("floor meets witness: d = {:?}", code.d_exact());
    println!("(a fully search-based confirmation for [91,18] needs a far larger message budget;");
    println!(" raise SearchCaps::isd_message_limit and bring time if you want it)");
    let rep = report::report(&code, Construction::ZL5.tag());
    println!(
        "published best known at the time: {:?}; this code improves it: {:?}",
        rep.expected.as_ref().and_then(|e| e.best_known_d),
        rep.improves_best_known
    );
    Ok(())
}
