//! Reader for `.node`/`.ele` tetrahedral mesh pairs.
//!
//! Layout follows the TetGen interchange convention:
//!
//! ```text
//! <# points> <dimension (3)> <# attributes> <# boundary markers>
//! <index> <x> <y> <z> [attributes] [marker]
//! ...
//! ```
//!
//! ```text
//! <# tets> <nodes per tet (4)> <# attributes>
//! <index> <v0> <v1> <v2> <v3> [attributes]
//! ...
//! ```
//!
//! Blank lines and `#` comments are skipped. Whether indices are 0- or
//! 1-based is detected from the first node line and applied to both files.

use std::path::Path;

use crate::scalar::Real;

use super::FormatError;

/// Lines with content: (1-based line number, comment-stripped text).
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_usize(file: &'static str, line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    tok.parse()
        .map_err(|_| FormatError::parse(file, line, format!("invalid {what} '{tok}'")))
}

fn parse_f64(file: &'static str, line: usize, tok: &str, what: &str) -> Result<f64, FormatError> {
    tok.parse()
        .map_err(|_| FormatError::parse(file, line, format!("invalid {what} '{tok}'")))
}

/// Parse a `.node`/`.ele` text pair into positions and vertex quads,
/// normalized to base index 0.
pub fn read_node_ele<S: Real>(
    node_text: &str,
    ele_text: &str,
) -> Result<(Vec<[S; 3]>, Vec<[usize; 4]>), FormatError> {
    const NODE: &str = "node";
    const ELE: &str = "ele";

    let mut node_lines = content_lines(node_text);
    let (hline, header) = node_lines
        .next()
        .ok_or_else(|| FormatError::parse(NODE, 1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 2 {
        return Err(FormatError::parse(NODE, hline, "header needs at least count and dimension"));
    }
    let num_nodes = parse_usize(NODE, hline, toks[0], "point count")?;
    let dim = parse_usize(NODE, hline, toks[1], "dimension")?;
    if dim != 3 {
        return Err(FormatError::parse(NODE, hline, format!("dimension must be 3, got {dim}")));
    }

    let mut base: usize = 0;
    let mut positions: Vec<[S; 3]> = Vec::with_capacity(num_nodes);
    for (line, text) in node_lines {
        if positions.len() == num_nodes {
            return Err(FormatError::parse(NODE, line, "more point lines than the header declares"));
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() < 4 {
            return Err(FormatError::parse(NODE, line, "point line needs index and 3 coordinates"));
        }
        let index = parse_usize(NODE, line, toks[0], "point index")?;
        if positions.is_empty() {
            if index > 1 {
                return Err(FormatError::parse(
                    NODE,
                    line,
                    format!("first point index must be 0 or 1, got {index}"),
                ));
            }
            base = index;
        } else if index != positions.len() + base {
            return Err(FormatError::parse(
                NODE,
                line,
                format!("expected point index {}, got {index}", positions.len() + base),
            ));
        }
        let mut p = [S::zero(); 3];
        for k in 0..3 {
            let c = parse_f64(NODE, line, toks[1 + k], "coordinate")?;
            p[k] = S::from_f64(c).unwrap();
        }
        positions.push(p);
    }
    if positions.len() != num_nodes {
        return Err(FormatError::parse(
            NODE,
            1,
            format!("header declares {num_nodes} points, found {}", positions.len()),
        ));
    }

    let mut ele_lines = content_lines(ele_text);
    let (hline, header) = ele_lines
        .next()
        .ok_or_else(|| FormatError::parse(ELE, 1, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 2 {
        return Err(FormatError::parse(ELE, hline, "header needs count and nodes per tet"));
    }
    let num_tets = parse_usize(ELE, hline, toks[0], "tet count")?;
    let nodes_per_tet = parse_usize(ELE, hline, toks[1], "nodes per tet")?;
    if nodes_per_tet != 4 {
        return Err(FormatError::parse(
            ELE,
            hline,
            format!("nodes per tet must be 4, got {nodes_per_tet}"),
        ));
    }

    let mut quads: Vec<[usize; 4]> = Vec::with_capacity(num_tets);
    for (line, text) in ele_lines {
        if quads.len() == num_tets {
            return Err(FormatError::parse(ELE, line, "more tet lines than the header declares"));
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() < 5 {
            return Err(FormatError::parse(ELE, line, "tet line needs index and 4 vertex ids"));
        }
        let mut quad = [0usize; 4];
        for k in 0..4 {
            let v = parse_usize(ELE, line, toks[1 + k], "vertex id")?;
            if v < base || v - base >= num_nodes {
                return Err(FormatError::parse(
                    ELE,
                    line,
                    format!("vertex id {v} out of range for {num_nodes} points (base {base})"),
                ));
            }
            quad[k] = v - base;
        }
        quads.push(quad);
    }
    if quads.len() != num_tets {
        return Err(FormatError::parse(
            ELE,
            1,
            format!("header declares {num_tets} tets, found {}", quads.len()),
        ));
    }

    Ok((positions, quads))
}

/// Read a `.node`/`.ele` pair from disk.
pub fn load_node_ele<S: Real>(
    node_path: impl AsRef<Path>,
    ele_path: impl AsRef<Path>,
) -> Result<(Vec<[S; 3]>, Vec<[usize; 4]>), FormatError> {
    let node_text = std::fs::read_to_string(node_path)?;
    let ele_text = std::fs::read_to_string(ele_path)?;
    read_node_ele(&node_text, &ele_text)
}
