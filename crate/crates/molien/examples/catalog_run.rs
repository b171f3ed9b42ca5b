// Recomputes the bundled catalog of reference series at a small order
// and prints one verdict line per item.

use molien::cli::reproduce_run;

pub fn run() -> molien::Result<()> {
    let report = reproduce_run(8);
    print!("{}", report.render_text());
    if !report.passed {
        return Err(molien::Error::Config("catalog run failed".into()));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
