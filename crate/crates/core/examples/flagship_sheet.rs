//! Verdict sheet for the 7-dimensional flagship algebra.
//!
//! `cargo run --example flagship_sheet -- F3` picks another field (default F2).

use ringlab::suites::flagship_sheet;
use ringlab::FieldDesc;

fn main() -> ringlab::Result<()> {
    let field: FieldDesc = std::env::args().nth(1).as_deref().unwrap_or("F2").parse()?;
    let sheet = flagship_sheet(field)?;
    print!("{}", sheet.render_text());
    let off = sheet.disagreements();
    if !off.is_empty() {
        println!("\nrows where the computation contradicts the stated claim: {}", off.join(", "));
    }
    Ok(())
}
