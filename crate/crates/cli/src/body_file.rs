//! JSON body and direction-set files.
//!
//! ```json
//! {"dim": 2, "vertices": [[0,0],[1,0],[1,1],[0,1]], "label": "square"}
//! {"dim": 2, "halfspaces": [{"normal": [1,0], "offset": 1}, ...]}
//! {"dim": 2, "directions": [[1,0],[0,1],[-1,0],[0,-1]]}
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use wulff_core::{DirectionSet, HalfSpace, Polytope, Vector};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HalfSpaceRecord {
    pub normal: Vec<f64>,
    pub offset: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BodyFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfSpaceRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

fn point(dim: usize, xs: &[f64], what: &str) -> Result<Vector, CliError> {
    if xs.len() != dim {
        return Err(CliError::Input(format!("{what} has {} coordinates, expected {dim}", xs.len())));
    }
    if xs.iter().any(|x| !x.is_finite()) {
        return Err(CliError::Input(format!("{what} has a non-finite coordinate")));
    }
    Vector::from_slice(xs).ok_or_else(|| CliError::Input(format!("{what}: unsupported dimension {dim}")))
}

impl BodyFile {
    pub fn from_polytope(p: &Polytope, label: Option<&str>) -> Self {
        BodyFile {
            dim: p.dim(),
            vertices: Some(p.vertices().iter().map(|v| v.coords(p.dim()).to_vec()).collect()),
            halfspaces: None,
            label: label.map(String::from),
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope, CliError> {
        if self.dim != 2 && self.dim != 3 {
            return Err(CliError::Input(format!("dim must be 2 or 3, got {}", self.dim)));
        }
        match (&self.vertices, &self.halfspaces) {
            (Some(vs), None) => {
                let pts = vs
                    .iter()
                    .enumerate()
                    .map(|(i, v)| point(self.dim, v, &format!("vertex {i}")))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Polytope::from_vertices(self.dim, &pts)?)
            }
            (None, Some(hs)) => {
                let hs = hs
                    .iter()
                    .enumerate()
                    .map(|(i, h)| {
                        let n = point(self.dim, &h.normal, &format!("halfspace {i} normal"))?;
                        if !h.offset.is_finite() {
                            return Err(CliError::Input(format!("halfspace {i} offset is not finite")));
                        }
                        Ok(HalfSpace::new(n, h.offset)?)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(Polytope::from_halfspaces(self.dim, &hs)?)
            }
            _ => Err(CliError::Input("body file needs exactly one of `vertices` and `halfspaces`".into())),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed body file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("body file serializes")
    }
}

pub fn read_body(path: &Path) -> Result<(Polytope, Option<String>), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let file = BodyFile::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let p = file.to_polytope().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((p, file.label))
}

pub fn write_body(path: &Path, p: &Polytope, label: Option<&str>) -> Result<(), CliError> {
    fs::write(path, BodyFile::from_polytope(p, label).to_json() + "\n")
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirectionFile {
    pub dim: usize,
    pub directions: Vec<Vec<f64>>,
    #[serde(default)]
    pub label: Option<String>,
}

/// A direction set given as `axes`, as a direction file, or as a body file
/// (whose facet normals are taken).
pub fn read_directions(arg: &str, dim: usize) -> Result<DirectionSet, CliError> {
    if arg == "axes" {
        return Ok(DirectionSet::axes(dim)?);
    }
    let path = Path::new(arg);
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
    if let Ok(f) = serde_json::from_str::<DirectionFile>(&text) {
        if f.dim != dim {
            return Err(CliError::Input(format!("{arg}: directions are {}-dimensional, bodies {dim}-dimensional", f.dim)));
        }
        let dirs = f
            .directions
            .iter()
            .enumerate()
            .map(|(i, d)| point(dim, d, &format!("direction {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(DirectionSet::new(dim, &dirs, f.label.as_deref().unwrap_or(arg))?);
    }
    let body = BodyFile::parse(&text)
        .map_err(|_| CliError::Input(format!("{arg}: neither a direction file nor a body file")))?
        .to_polytope()?;
    Ok(DirectionSet::normals_of(&body)?)
}
