// Regrades an algebra by a polynomial GL_d-module and computes the
// invariant series of the composed action.
//
// The three-generator Grassmann algebra carries a GL_3 action on its
// generators; feeding GL_2 through its representation on binary
// quadratic forms turns the same algebra into a GL_2-graded module,
// and the classical subgroups of GL_2 then act on it.

use molien::{
    dual_check, hilbert_form, module_weights, multiplicity_table, regrade_form, AlgebraFamily,
    AlgebraSpec, GroupKind, GroupSpec, ModuleSpec, Partition, Result, Summand,
};

pub fn run() -> Result<()> {
    let spec = AlgebraSpec::new(AlgebraFamily::Grassmann, 3);
    let module = ModuleSpec {
        d: 2,
        summands: vec![Summand {
            partition: Partition::new(vec![2]).unwrap(),
            mult: 1,
        }],
    };
    let weights = module_weights(&module)?;
    let regraded = regrade_form(&hilbert_form(&spec), &weights)?;
    let table = multiplicity_table(&regraded.expand(10))?;

    println!("{spec} regraded by the binary quadratic representation:");
    for kind in [GroupKind::Sp, GroupKind::O, GroupKind::SO] {
        let group = GroupSpec::new(kind, 2);
        let series = dual_check(&table, &group)?;
        let counts: Vec<String> = series.coeffs.iter().map(u64::to_string).collect();
        println!("  {group}: {}", counts.join(", "));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
