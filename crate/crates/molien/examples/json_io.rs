// Serializes a multiplicity table to the byte-stable JSON format and
// reads it back.

use molien::{
    hilbert_form, json, multiplicity_table, AlgebraFamily, AlgebraSpec, MultTable, Result,
};

pub fn run() -> Result<()> {
    let spec = AlgebraSpec::new(AlgebraFamily::UpperTriangular2, 2);
    let table = multiplicity_table(&hilbert_form(&spec).expand(4))?;
    let payload = json::to_pretty_string(&table)?;
    print!("{payload}");

    let back: MultTable = json::from_str(&payload)?;
    assert_eq!(back, table, "round trip preserves the table");
    Ok(())
}

fn main() {
    run().unwrap();
}
