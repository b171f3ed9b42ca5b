// Decomposes symmetric polynomials into Schur polynomials.
//
// The square of x1 + x2 + x3 splits as s_(2) + s_(1,1), and products
// of Schur polynomials decompose with the familiar branching
// multiplicities.

use molien::{schur_decompose, schur_poly, Partition, Result, TPoly};

pub fn run() -> Result<()> {
    let d = 3;
    let e1 = (0..d).fold(TPoly::zero(d), |acc, i| &acc + &TPoly::variable(d, i));
    let square = &e1 * &e1;
    println!("(x1 + x2 + x3)^2 =");
    for (lambda, mult) in &schur_decompose(&square)?.multiplicities {
        println!("  {mult} * s_{lambda}");
    }

    let a = Partition::new(vec![2, 1]).unwrap();
    let b = Partition::new(vec![1]).unwrap();
    let product = &schur_poly(&a, d) * &schur_poly(&b, d);
    println!("s_{a} * s_{b} =");
    for (lambda, mult) in &schur_decompose(&product)?.multiplicities {
        println!("  {mult} * s_{lambda}");
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
