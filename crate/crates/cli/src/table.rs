//! Aligned text tables for run statistics.

use polytet::metrics::{StatsRecord, SummaryRecord};

const STATS_HEADER: [&str; 13] = [
    "V",
    "F",
    "T",
    "E",
    "P",
    "B.faces",
    "P.w/barriers",
    "PolyTetras",
    "Max tetras",
    "Avg tetras",
    "F'",
    "P(repaired)",
    "Time(ms)",
];

fn stats_row(r: &StatsRecord) -> [String; 13] {
    [
        r.vertices.to_string(),
        r.faces.to_string(),
        r.tets.to_string(),
        r.edges.to_string(),
        r.polyhedra.to_string(),
        r.barrier_faces.to_string(),
        r.polys_with_barriers.to_string(),
        r.poly_tetras.to_string(),
        r.max_tetras.to_string(),
        format!("{:.1}", r.avg_tetras),
        r.frontier_faces.to_string(),
        r.polyhedra_after_repair.map_or_else(|| "-".to_string(), |p| p.to_string()),
        format!("{:.1}", r.time_ms),
    ]
}

fn render<const N: usize>(header: [&str; N], rows: Vec<[String; N]>) -> String {
    let mut widths: [usize; N] = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for (k, (h, w)) in header.iter().zip(widths).enumerate() {
        if k > 0 {
            out.push_str("  ");
        }
        out.push_str(&format!("{h:>w$}"));
    }
    out.push('\n');
    for row in rows {
        for (k, (cell, w)) in row.iter().zip(widths).enumerate() {
            if k > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{cell:>w$}"));
        }
        out.push('\n');
    }
    out
}

pub fn render_stats_table(records: &[StatsRecord]) -> String {
    render(STATS_HEADER, records.iter().map(stats_row).collect())
}

pub fn render_summary_table(rows: &[(String, SummaryRecord)]) -> String {
    let header = ["source", "Reduction", "Avg tetras", "Barriers", "Tetrahedrons"];
    let body = rows
        .iter()
        .map(|(name, s)| {
            [
                name.clone(),
                format!("{:.1}%", s.reduction_pct),
                format!("{:.1}", s.avg_tetras),
                format!("{:.1}%", s.barriers_pct),
                format!("{:.1}", s.tetra_retention_pct),
            ]
        })
        .collect();
    render(header, body)
}
