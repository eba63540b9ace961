//! Running verification suites programmatically and emitting their reports.

use qdtorus::cli::{emit_report, run_suite, ReportFormat, Suite, SuiteParams};

fn main() -> qdtorus::Result<()> {
    let params = SuiteParams {
        range: 2,
        ..SuiteParams::default()
    };
    let report = run_suite(Suite::Cocycle, &params)?;
    print!("{}", emit_report(&report, ReportFormat::Text));

    let gns = run_suite(
        Suite::Gns,
        &SuiteParams {
            window: 5,
            ..SuiteParams::default()
        },
    )?;
    println!("{}", emit_report(&gns, ReportFormat::Json));
    Ok(())
}
