//! Both invertibility criteria computed on the canonical coend, as JSON.

use std::sync::Arc;

use braidcheck::coend::invertibility_report;
use braidcheck::exact::CycloScalar;
use braidcheck::group::FiniteGroup;
use braidcheck::hopf::{drinfeld_double, group_algebra, sweedler};

fn main() {
    let (s, rs) = sweedler(&CycloScalar::one());
    let (d, rd) = drinfeld_double(&group_algebra(&FiniteGroup::symmetric(3)));
    for (name, p, r) in [("Sweedler(1)", s, rs), ("D(S3)", d, rd)] {
        let report = invertibility_report(&Arc::new(p), &r).expect("criteria agree");
        println!(
            "{name}: verdict {} (Dr rank {}, ω rank {}, dim {})",
            report.verdict, report.drinfeld_iso.rank, report.omega_nondegenerate.rank, report.dim
        );
        if name == "Sweedler(1)" {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializes"));
        }
    }
}
