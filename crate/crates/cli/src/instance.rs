//! Instance and result files.

use std::fs;
use std::io::Read;
use std::path::Path;

use convex_dispersion::{validate_convex, ConvexPolygon, DispersionError, Point};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"points": [[x, y], ...]}` with optional provenance. Coordinates are
/// written in shortest round-trip form, so reading a file back reproduces
/// every squared distance bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub points: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl InstanceFile {
    pub fn from_polygon(poly: &ConvexPolygon, name: Option<String>, seed: Option<u64>) -> Self {
        InstanceFile {
            points: poly.vertices().iter().map(|p| [p.x, p.y]).collect(),
            name,
            seed,
        }
    }

    pub fn points(&self) -> Vec<Point> {
        self.points.iter().map(|&p| Point::from(p)).collect()
    }

    pub fn polygon(&self) -> Result<ConvexPolygon, DispersionError> {
        validate_convex(self.points())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances always serialize")
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_text(path: &Path) -> Result<String, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

pub fn load_instance(path: &Path) -> Result<InstanceFile, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Loads and validates; an invalid polygon is bad input.
pub fn load_polygon(path: &Path) -> Result<ConvexPolygon, CliError> {
    load_instance(path)?
        .polygon()
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Outcome of one solver run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub algorithm: String,
    pub k: usize,
    pub radius: f64,
    pub radius_sq4: f64,
    pub centers: Vec<usize>,
    pub decide_calls: u64,
    pub nodes: u64,
    pub accesses: u64,
    pub wall_seconds: f64,
}

impl ResultRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }
}

pub fn load_result(path: &Path) -> Result<ResultRecord, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}
