// Feeds a hand-written rational series through the decomposition and
// invariant pipeline.
//
// 1/((1 - t1 z)(1 - t2 z)) is the Hilbert series of the polynomial
// ring in two variables under its standard grading; degree n is the
// single irreducible with highest weight (n), and the orthogonal
// invariants reduce to one in every even degree.

use molien::{dual_check, multiplicity_table, parse_form, GroupKind, GroupSpec, Result};

pub fn run() -> Result<()> {
    let form = parse_form("1/((1 - t1*z)*(1 - t2*z))", 2)?;
    let table = multiplicity_table(&form.expand(8))?;
    println!("Schur multiplicities of the two-variable polynomial ring:");
    for (n, lambda, mult) in table.entries_display_order() {
        println!("  z^{n}: {lambda} x{mult}");
    }

    let group = GroupSpec::new(GroupKind::O, 2);
    let series = dual_check(&table, &group)?;
    let counts: Vec<String> = series.coeffs.iter().map(u64::to_string).collect();
    println!("{group}: {}", counts.join(", "));
    Ok(())
}

fn main() {
    run().unwrap();
}
