//! Full tabulation of a coefficient box.

use std::io::{self, Write};

use serde::Serialize;

use delpezzo::lattice::{coefficient_box, DivisorClass};

/// One row of the sweep report. Column order is fixed:
/// class, degree, self_intersection, genus, euler, very_ample, verdict.
#[derive(Serialize)]
pub struct SweepRow {
    pub class: String,
    pub degree: i64,
    pub self_intersection: i64,
    pub genus: i64,
    pub euler: i64,
    pub very_ample: bool,
    pub verdict: &'static str,
}

impl SweepRow {
    fn new(class: DivisorClass) -> Self {
        Self {
            class: class.to_string(),
            degree: class.degree(),
            self_intersection: class.self_intersection(),
            genus: class.arithmetic_genus(),
            euler: class.euler_characteristic(),
            very_ample: delpezzo::is_very_ample(class),
            verdict: delpezzo::contains_irreducible(class).word(),
        }
    }
}

/// Rows for every class with `|a| ≤ bound`, `|bᵢ| ≤ bound`, in lexicographic
/// coordinate order.
pub fn rows(bound: i64) -> impl Iterator<Item = SweepRow> {
    coefficient_box(bound).map(SweepRow::new)
}

pub fn write_csv(bound: i64, out: &mut dyn Write) -> io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows(bound) {
        writer.serialize(row)?;
    }
    writer.flush()
}

pub fn write_json(bound: i64, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "[")?;
    let total = {
        let width = 2 * bound as u64 + 1;
        width.pow(6)
    };
    for (n, row) in rows(bound).enumerate() {
        serde_json::to_writer(&mut *out, &row)?;
        if (n as u64) + 1 < total {
            writeln!(out, ",")?;
        } else {
            writeln!(out)?;
        }
    }
    writeln!(out, "]")?;
    Ok(())
}
