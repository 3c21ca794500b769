//! JSON serialization of statistics records.
//!
//! The file holds a list of objects with the keys
//! `V, F, T, E, P, barrier_faces, polys_with_barriers, poly_tetras,
//! max_tetras, avg_tetras, F_out, time_ms` and, when known, `P_repaired`.

use std::io::Write;
use std::path::Path;

use crate::metrics::StatsRecord;

use super::FormatError;

pub fn write_stats_json_to<W: Write>(
    writer: &mut W,
    records: &[StatsRecord],
) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut *writer, records)?;
    writeln!(writer)?;
    Ok(())
}

pub fn write_stats_json(
    path: impl AsRef<Path>,
    records: &[StatsRecord],
) -> Result<(), FormatError> {
    let mut writer = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_stats_json_to(&mut writer, records)
}

pub fn read_stats_json(path: impl AsRef<Path>) -> Result<Vec<StatsRecord>, FormatError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}
