// Computes the Schur multiplicity table of a built-in algebra and
// prints its M and M' generating series.
//
// M collects the multiplicities as monomials t^lambda; M' applies the
// exponent transform u_i = t_i/t_{i+1} that turns partition filters
// into variable substitutions.

use molien::{hilbert_form, multiplicity_table, AlgebraFamily, AlgebraSpec, Result};

pub fn run() -> Result<()> {
    let spec = AlgebraSpec::new(AlgebraFamily::Grassmann, 3);
    let order = 6;
    let series = hilbert_form(&spec).expand(order);
    let table = multiplicity_table(&series)?;

    println!("{spec}, Schur multiplicities up to z^{order}:");
    for (n, lambda, mult) in table.entries_display_order() {
        println!("  z^{n}: {lambda} x{mult}");
    }
    println!("M  = {}", table.to_m_series().render("t"));
    println!("M' = {}", table.to_mprime_series().render("u"));
    Ok(())
}

fn main() {
    run().unwrap();
}
