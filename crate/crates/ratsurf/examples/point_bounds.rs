//! The point-count bounds that drive every distance floor in this crate.
//!
//! A nonzero section of one of the linear systems cuts a curve; counting how
//! many rational points that curve can pass through bounds the codeword
//! weight from below.  Run with `cargo run --release --example point_bounds`.

use ratsurf::bounds;

fn main() -> ratsurf::Result<()> {
    println!("plane curves of degree d with no F_q-linear component: (d-1)q + 1");
    println!("{:>4} {:>6} {:>6} {:>6} {:>6}", "q", "d=2", "d=3", "d=4", "d=5");
    for q in [3u64, 4, 5, 7, 8, 9] {
        print!("{:>4}", q);
        for d in 2..=5 {
            let b = bounds::homma_kim(q, d);
            let mark = if b.notes.iter().any(|n| n.contains("exceptional")) { "*" } else { "" };
            print!("{:>6}", format!("{}{}", b.value, mark));
        }
        println!();
    }
    println!("  (*) the single exceptional pair q=4, d=4: the true maximum is 14, not 13");

    println!("\nsame degrees, curve merely not a union of d rational lines: (d-1)q + 2");
    for (q, d) in [(7u64, 4u64), (9, 5)] {
        let b = bounds::cor_major(q, d);
        println!("  q={q}, d={d}: {} ({})", b.value, b.notes.join("; "));
    }

    println!("\ngenus bound for irreducible curves: q + 1 + p_a * floor(2*sqrt(q)):");
    for (q, pa) in [(7u64, 3u64), (9, 1), (9, 3)] {
        let b = bounds::aubry_perret(q, pa);
        println!("  q={q}, p_a={pa}: {}", b.value);
    }

    println!("\ndivisors in |sH| on the elliptic quadric:");
    for q in [5u64, 7, 9] {
        for s in [2u64, 3] {
            let irr = bounds::quadric_irreducible(q, s)?;
            let sing = bounds::tot_singular(q, s)?;
            println!(
                "  q={q}, s={s}: irreducible <= {}, totally singular case <= {}",
                irr.value, sing.value
            );
        }
    }

    println!("\ncubic-section ceiling on the quadric and the resulting floor:");
    for q in [5u64, 7, 8, 9] {
        let cube = bounds::cube_bound(q)?;
        let (n, k, delta) = bounds::quadric_cubic_params(q)?;
        println!("  q={q}: ceiling {} -> [{n}, {k}] with d >= {delta}", cube.value);
    }
    Ok(())
}
