//! Runs every acceptance criterion with the trimmed profile.

use toric_forms::suite::{criteria, run_criterion, Profile};

fn main() {
    for c in criteria() {
        let o = run_criterion(&c, Profile::Fast);
        println!("{} {:>2} {} [{}]", if o.verdict { "PASS" } else { "FAIL" }, c.id, c.name, o.detail);
    }
}
