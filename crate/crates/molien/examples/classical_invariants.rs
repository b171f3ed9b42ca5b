// Computes invariant dimension counts for every classical subgroup
// acting on a built-in algebra.
//
// Each series is computed twice, by partition filtering and by
// variable substitution, and the two routes are required to agree.

use molien::{
    dual_check, hilbert_form, multiplicity_table, AlgebraFamily, AlgebraSpec, GroupKind,
    GroupSpec, Result,
};

pub fn run() -> Result<()> {
    let spec = AlgebraSpec::new(AlgebraFamily::UpperTriangular2, 4);
    let order = 12;
    let table = multiplicity_table(&hilbert_form(&spec).expand(order))?;

    println!("invariant dimension counts for {spec} up to z^{order}:");
    for kind in GroupKind::ALL {
        let group = GroupSpec::new(kind, 4);
        let series = dual_check(&table, &group)?;
        let counts: Vec<String> = series.coeffs.iter().map(u64::to_string).collect();
        println!("  {group}: {}", counts.join(", "));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
