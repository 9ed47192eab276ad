//! Plain-text formats for disk systems, filtrations, and point clouds.
//!
//! Disk files carry a `dim=<d>` header and one disk per line as d
//! comma-separated center coordinates followed by the radius. Filtration
//! files list one simplex per line — space-separated vertex indices, a
//! semicolon, then the weight to 12 significant digits — in filtration
//! order. Point files are headerless `x,y` lines. Blank lines and `#`
//! comments are ignored everywhere.
//!
//! Disk serialization uses the shortest decimal that parses back to the same
//! float, so write → parse is bit-exact.

use crate::complex::Simplex;
use crate::geometry::{Disk, DiskSystem, Point2};
use crate::solver::{ScaleResult, SolveStatus};
use std::fmt::Write as _;
use thiserror::Error;

/// A file-level failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FileError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl FileError {
    fn at(line: usize, message: impl Into<String>) -> FileError {
        FileError::Parse {
            line,
            message: message.into(),
        }
    }

    /// The offending 1-based line number.
    pub fn line(&self) -> usize {
        match self {
            FileError::Parse { line, .. } => *line,
        }
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(idx, raw)| (idx + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn parse_number(field: &str, line: usize, what: &str) -> Result<f64, FileError> {
    field
        .trim()
        .parse::<f64>()
        .map_err(|_| FileError::at(line, format!("invalid {what} `{}`", field.trim())))
}

/// Parses a disk file: `dim=<d>` header, then one disk per line.
pub fn parse_disk_file(text: &str) -> Result<DiskSystem, FileError> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| FileError::at(1, "missing `dim=<d>` header"))?;
    let dim: usize = header
        .strip_prefix("dim=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| FileError::at(header_line, format!("expected `dim=<d>`, got `{header}`")))?;
    if dim == 0 {
        return Err(FileError::at(header_line, "dimension must be at least 1"));
    }
    let mut disks = Vec::new();
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let fields: Vec<&str> = content.split(',').collect();
        if fields.len() != dim + 1 {
            return Err(FileError::at(
                line,
                format!(
                    "expected {} comma-separated fields ({dim} coordinates and a radius), got {}",
                    dim + 1,
                    fields.len()
                ),
            ));
        }
        let mut center = Vec::with_capacity(dim);
        for f in &fields[..dim] {
            center.push(parse_number(f, line, "coordinate")?);
        }
        let radius = parse_number(fields[dim], line, "radius")?;
        let disk = Disk::new(center, radius).map_err(|e| FileError::at(line, e.to_string()))?;
        disks.push(disk);
    }
    DiskSystem::new(disks).map_err(|e| FileError::at(last_line, e.to_string()))
}

/// Serializes a disk system in the disk-file format.
pub fn write_disk_file(system: &DiskSystem) -> String {
    let mut out = format!("dim={}\n", system.dimension());
    for disk in system.disks() {
        for c in disk.center() {
            let _ = write!(out, "{c},");
        }
        let _ = writeln!(out, "{}", disk.radius());
    }
    out
}

/// Parses a headerless point file with one `x,y` pair per line.
pub fn parse_point_file(text: &str) -> Result<Vec<Point2>, FileError> {
    let mut points = Vec::new();
    for (line, content) in data_lines(text) {
        let fields: Vec<&str> = content.split(',').collect();
        if fields.len() != 2 {
            return Err(FileError::at(
                line,
                format!("expected `x,y`, got {} fields", fields.len()),
            ));
        }
        points.push([
            parse_number(fields[0], line, "coordinate")?,
            parse_number(fields[1], line, "coordinate")?,
        ]);
    }
    if points.is_empty() {
        return Err(FileError::at(1, "point cloud must be nonempty"));
    }
    Ok(points)
}

/// `value` to `sig` significant digits in plain decimal notation.
fn format_sig(value: f64, sig: usize) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Serializes filtration steps, one simplex per line in the given order.
pub fn write_filtration_file(steps: &[(f64, Simplex)]) -> String {
    let mut out = String::new();
    for (weight, simplex) in steps {
        let verts: Vec<String> = simplex.vertices().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{};{}", verts.join(" "), format_sig(*weight, 12));
    }
    out
}

/// Parses a filtration file into (weight, simplex) steps in file order.
pub fn parse_filtration_file(text: &str) -> Result<Vec<(f64, Simplex)>, FileError> {
    let mut steps = Vec::new();
    for (line, content) in data_lines(text) {
        let (verts_part, weight_part) = content.split_once(';').ok_or_else(|| {
            FileError::at(line, "expected `<vertex indices>;<weight>`")
        })?;
        let mut vertices = Vec::new();
        for field in verts_part.split_whitespace() {
            let v: usize = field
                .parse()
                .map_err(|_| FileError::at(line, format!("invalid vertex index `{field}`")))?;
            vertices.push(v);
        }
        let simplex =
            Simplex::new(vertices).map_err(|e| FileError::at(line, e.to_string()))?;
        let weight = parse_number(weight_part, line, "weight")?;
        steps.push((weight, simplex));
    }
    Ok(steps)
}

/// Checks the filtration-file contract: weights never decrease, and every
/// prefix is closed under faces.
pub fn validate_filtration(steps: &[(f64, Simplex)]) -> Result<(), FileError> {
    let mut seen: Vec<&Simplex> = Vec::with_capacity(steps.len());
    let mut last = f64::NEG_INFINITY;
    for (idx, (weight, simplex)) in steps.iter().enumerate() {
        let line = idx + 1;
        if *weight < last {
            return Err(FileError::at(
                line,
                format!("weight {weight} decreases below {last}"),
            ));
        }
        last = *weight;
        for facet in simplex.facets() {
            if !seen.iter().any(|s| **s == facet) {
                return Err(FileError::at(
                    line,
                    format!(
                        "face {:?} of {:?} has not appeared yet",
                        facet.vertices(),
                        simplex.vertices()
                    ),
                ));
            }
        }
        seen.push(simplex);
    }
    Ok(())
}

/// The text report printed for a scale computation.
pub fn format_scale_report(result: &ScaleResult) -> String {
    let status = match result.status {
        SolveStatus::RipsEqualsCech => "rips-equals-cech",
        SolveStatus::RootFound => "root-found",
    };
    format!(
        "rips_scale={}\ncech_scale={}\nwitness=({}, {})\nbisection_calls={}\nstatus={}\n",
        result.rips_scale,
        result.cech_scale,
        result.witness[0],
        result.witness[1],
        result.bisection_calls,
        status
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{build_complex, filtration_steps};

    #[test]
    fn disk_file_round_trip_is_bit_exact() {
        let m = DiskSystem::from_planar(&[
            (0.1, -3.7, 1.5),
            (1.0 / 3.0, 2.0f64.sqrt(), 0.82),
            (1e-7, 1e9, 2.05),
        ])
        .unwrap();
        let text = write_disk_file(&m);
        let back = parse_disk_file(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn disk_file_header_and_layout() {
        let m = DiskSystem::from_planar(&[(0.0, 0.0, 1.0)]).unwrap();
        assert_eq!(write_disk_file(&m), "dim=2\n0,0,1\n");
    }

    #[test]
    fn disk_file_parses_blank_lines_and_comments() {
        let text = "# a triangle\ndim=2\n\n0,0,1\n2,0,1\n# middle\n1,1.7320508075688772,1\n";
        let m = parse_disk_file(text).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.dimension(), 2);
    }

    #[test]
    fn disk_file_errors_carry_line_numbers() {
        let missing = parse_disk_file("dim=2\n0,0\n");
        assert_eq!(missing.unwrap_err().line(), 2);
        let bad_radius = parse_disk_file("dim=2\n0,0,1\n1,1,-1\n");
        let err = bad_radius.unwrap_err();
        assert_eq!(err.line(), 3);
        assert!(err.to_string().contains("radius"));
        let bad_header = parse_disk_file("2\n0,0,1\n");
        assert_eq!(bad_header.unwrap_err().line(), 1);
        let empty = parse_disk_file("dim=2\n");
        assert!(empty.is_err());
    }

    #[test]
    fn higher_dimensional_disk_files_parse() {
        let text = "dim=4\n0,0,0,0,1\n1,2,3,4,0.5\n";
        let m = parse_disk_file(text).unwrap();
        assert_eq!(m.dimension(), 4);
        assert_eq!(m.disk(1).center(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn point_file_rules() {
        let pts = parse_point_file("0,0\n1.5,-2\n").unwrap();
        assert_eq!(pts, vec![[0.0, 0.0], [1.5, -2.0]]);
        assert_eq!(parse_point_file("0,0,0\n").unwrap_err().line(), 1);
        assert!(parse_point_file("\n# nothing\n").is_err());
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.0, 12), "0");
        assert_eq!(format_sig(0.82, 12), "0.820000000000");
        assert_eq!(format_sig(1.1547005383792515, 12), "1.15470053838");
        assert_eq!(format_sig(-0.5, 12), "-0.500000000000");
        assert_eq!(format_sig(123456.0, 12), "123456.000000");
    }

    #[test]
    fn filtration_round_trip_and_validation() {
        // Right isoceles triple: pairwise distances 2, 2, √8 are exact, so
        // the serialized weights are stable down to the digit.
        let m = DiskSystem::from_planar(&[
            (0.0, 0.0, 1.0),
            (2.0, 0.0, 1.0),
            (0.0, 2.0, 1.0),
        ])
        .unwrap();
        let steps = filtration_steps(&build_complex(&m, 1.5, 2).unwrap());
        let text = write_filtration_file(&steps);
        assert_eq!(
            text,
            "0;0\n1;0\n2;0\n\
             0 1;1.00000000000\n0 2;1.00000000000\n\
             1 2;1.41421356237\n0 1 2;1.41421356237\n"
        );
        let back = parse_filtration_file(&text).unwrap();
        assert_eq!(back.len(), steps.len());
        for ((wa, sa), (wb, sb)) in back.iter().zip(&steps) {
            assert_eq!(sa, sb);
            assert!((wa - wb).abs() <= 1e-11 * (1.0 + wb.abs()));
        }
        validate_filtration(&back).unwrap();
    }

    #[test]
    fn validation_rejects_broken_files() {
        let decreasing = parse_filtration_file("0;0\n1;1\n0 1;0.5\n").unwrap();
        // Weight drops from 1 back to 0.5 on line 3.
        assert_eq!(validate_filtration(&decreasing).unwrap_err().line(), 3);
        let orphan = parse_filtration_file("0;0\n0 1;1\n").unwrap();
        // The edge arrives before its vertex 1.
        assert_eq!(validate_filtration(&orphan).unwrap_err().line(), 2);
    }

    #[test]
    fn filtration_parse_errors() {
        assert_eq!(parse_filtration_file("0 1\n").unwrap_err().line(), 1);
        assert_eq!(parse_filtration_file("0 x;1\n").unwrap_err().line(), 1);
        assert_eq!(parse_filtration_file("1 1;1\n").unwrap_err().line(), 1);
    }

    #[test]
    fn scale_report_layout() {
        let m = DiskSystem::from_planar(&[(0.0, 0.0, 1.0), (2.0, 0.0, 1.0)]).unwrap();
        let r = crate::solver::cech_scale(&m).unwrap();
        let report = format_scale_report(&r);
        assert_eq!(
            report,
            "rips_scale=1\ncech_scale=1\nwitness=(1, 0)\nbisection_calls=0\nstatus=rips-equals-cech\n"
        );
    }
}
