//   Copyright 2026 The recess Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! JSON description of open convex sets.
//!
//! ```json
//! { "dim": 2, "norm": "l2",
//!   "set": { "type": "polyhedron", "rows": [ { "a": ["0", "-1"], "b": "1" } ] } }
//! ```
//!
//! Rationals are written as strings (`"3/4"`, `"-2"`, `"0.25"`) or JSON
//! integers. See `docs/schema.md` for every shape.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::counterexample::{build_strip, BiorthogonalSystem, EpsRule, SystemKind};
use crate::error::{Error, Result};
use crate::lp::Inequality;
use crate::scalar::{self, serde_rational, Rational, Scalar};
use crate::sets::{ConvexSet, Shape};
use crate::vector::{sum_sq, Functional, NormKind, Vector};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDescription {
    pub dim: usize,
    #[serde(default)]
    pub norm: NormKind,
    pub set: ShapeDescription,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ShapeDescription {
    Polyhedron {
        rows: Vec<Inequality>,
    },
    Strip {
        system: SystemDescription,
        /// keep only the first `count` functionals
        #[serde(default, skip_serializing_if = "Option::is_none")]
        count: Option<usize>,
        #[serde(flatten)]
        radii: RadiusDescription,
    },
    Minkowski {
        inner_dim: usize,
        inner: Box<ShapeDescription>,
        #[serde(with = "serde_rational")]
        radius: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum SystemDescription {
    Orthonormal,
    Perturbed {
        seed: u64,
    },
    Explicit {
        vectors: Vec<Vector>,
        functionals: Vec<Functional>,
    },
}

/// Exactly one of `radii`, `eps` (radius `eps_n ||f_n||_*`) or `eps_rule`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadiusDescription {
    Radii(#[serde(with = "serde_rational::vec")] Vec<Rational>),
    Eps(#[serde(with = "serde_rational::vec")] Vec<Rational>),
    EpsRule(EpsRule),
}

impl SetDescription {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("set descriptions always serialize")
    }

    pub fn build(&self) -> Result<ConvexSet> {
        build_shape(self.dim, self.norm, &self.set, "set")
    }

    /// Description of an existing set. Strip sets with irrational radii are
    /// written through `eps` when `eps_n` is rational.
    pub fn describe(set: &ConvexSet) -> Result<Self> {
        Ok(SetDescription {
            dim: set.dim(),
            norm: set.norm(),
            set: describe_shape(set)?,
        })
    }
}

/// Parses and builds in one step.
pub fn parse_set(text: &str) -> Result<ConvexSet> {
    SetDescription::from_json(text)?.build()
}

fn at(path: &str, e: Error) -> Error {
    match e {
        Error::InvalidInput(m) => Error::InvalidInput(format!("{path}: {m}")),
        other => other,
    }
}

fn build_shape(
    dim: usize,
    norm: NormKind,
    shape: &ShapeDescription,
    path: &str,
) -> Result<ConvexSet> {
    if dim == 0 {
        return Err(Error::invalid(format!("{path}: dim must be at least 1")));
    }
    match shape {
        ShapeDescription::Polyhedron { rows } => {
            for (i, r) in rows.iter().enumerate() {
                if r.normal.dim() != dim {
                    return Err(Error::invalid(format!(
                        "{path}.rows[{i}].a: expected {dim} coordinates, got {}",
                        r.normal.dim()
                    )));
                }
            }
            ConvexSet::polyhedron(dim, norm, rows.clone()).map_err(|e| at(path, e))
        }
        ShapeDescription::Strip {
            system,
            count,
            radii,
        } => {
            let sys_path = format!("{path}.system");
            let mut sys = match system {
                SystemDescription::Orthonormal => BiorthogonalSystem::orthonormal(dim),
                SystemDescription::Perturbed { seed } => {
                    BiorthogonalSystem::build(dim, SystemKind::Perturbed { seed: *seed })
                        .map_err(|e| at(&sys_path, e))?
                }
                SystemDescription::Explicit {
                    vectors,
                    functionals,
                } => BiorthogonalSystem::new(dim, vectors.clone(), functionals.clone())
                    .map_err(|e| at(&sys_path, e))?,
            };
            if let Some(k) = count {
                if *k == 0 || *k > sys.count() {
                    return Err(Error::invalid(format!(
                        "{path}.count: must lie in 1..={}",
                        sys.count()
                    )));
                }
                sys = sys.truncated(*k);
            }
            let k = sys.count();
            let check_len = |field: &str, len: usize| {
                if len == k {
                    Ok(())
                } else {
                    Err(Error::invalid(format!(
                        "{path}.{field}: expected {k} values, got {len}"
                    )))
                }
            };
            match radii {
                RadiusDescription::Radii(r) => {
                    check_len("radii", r.len())?;
                    if let Some(i) = r.iter().position(|q| !q.is_positive()) {
                        return Err(Error::invalid(format!(
                            "{path}.radii[{i}]: must be positive"
                        )));
                    }
                    ConvexSet::strip_exact(sys, r.clone(), norm).map_err(|e| at(path, e))
                }
                RadiusDescription::Eps(e) => {
                    check_len("eps", e.len())?;
                    if let Some(i) = e.iter().position(|q| !q.is_positive()) {
                        return Err(Error::invalid(format!("{path}.eps[{i}]: must be positive")));
                    }
                    build_strip(sys, e, norm).map_err(|e| at(path, e))
                }
                RadiusDescription::EpsRule(rule) => {
                    build_strip(sys, &rule.take(k), norm).map_err(|e| at(path, e))
                }
            }
        }
        ShapeDescription::Minkowski {
            inner_dim,
            inner,
            radius,
        } => {
            if *inner_dim > dim {
                return Err(Error::invalid(format!(
                    "{path}.inner_dim: {inner_dim} exceeds dim {dim}"
                )));
            }
            if matches!(**inner, ShapeDescription::Minkowski { .. }) {
                return Err(Error::invalid(format!(
                    "{path}.inner: nested Minkowski sums are not supported"
                )));
            }
            if !radius.is_positive() {
                return Err(Error::invalid(format!("{path}.radius: must be positive")));
            }
            let inner = build_shape(*inner_dim, norm, inner, &format!("{path}.inner"))?;
            ConvexSet::minkowski(inner, dim, radius.clone()).map_err(|e| at(path, e))
        }
    }
}

fn describe_shape(set: &ConvexSet) -> Result<ShapeDescription> {
    Ok(match set.shape() {
        Shape::Polyhedron(p) => ShapeDescription::Polyhedron {
            rows: p.rows.clone(),
        },
        Shape::Strip(s) => {
            let system = SystemDescription::Explicit {
                vectors: s.system.vectors().to_vec(),
                functionals: s.system.functionals().to_vec(),
            };
            let radii = if s.radii.iter().all(|r| r.value.is_exact()) {
                RadiusDescription::Radii(s.radii.iter().map(|r| r.value.to_rational()).collect())
            } else {
                let eps = s
                    .radii
                    .iter()
                    .zip(s.system.functionals())
                    .map(|(r, f)| eps_of(&r.squared, &r.value, f, set.norm()))
                    .collect::<Result<Vec<_>>>()?;
                RadiusDescription::Eps(eps)
            };
            ShapeDescription::Strip {
                system,
                count: None,
                radii,
            }
        }
        Shape::Minkowski(m) => ShapeDescription::Minkowski {
            inner_dim: m.inner.dim(),
            inner: Box::new(describe_shape(&m.inner)?),
            radius: m.radius.clone(),
        },
    })
}

fn eps_of(squared: &Rational, value: &Scalar, f: &Functional, norm: NormKind) -> Result<Rational> {
    let dual_sq = match norm.dual() {
        NormKind::L2 => sum_sq(f.coords()),
        _ => {
            let d = crate::vector::dual_norm(f, norm)?.to_rational();
            &d * &d
        }
    };
    scalar::sqrt_exact(&(squared / dual_sq))
        .ok_or_else(|| Error::invalid(format!("strip radius {value} has no rational description")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn polyhedron_round_trip() {
        let text = r#"{"dim": 2, "norm": "l2",
            "set": {"type": "polyhedron", "rows": [{"a": ["0", "-1"], "b": "1"}]}}"#;
        let d = SetDescription::from_json(text).unwrap();
        let set = d.build().unwrap();
        assert!(set.is_inside(&Vector::from_ints(&[100, 0])).unwrap());
        let again = SetDescription::from_json(&d.to_json()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn strip_with_rule_and_truncation() {
        let text = r#"{"dim": 4, "set": {"type": "strip", "system": {"kind": "orthonormal"},
            "count": 2, "eps_rule": "linear"}}"#;
        let set = parse_set(text).unwrap();
        assert!(set
            .is_inside(&Vector::from_ints(&[0, 1, 1000, -1000]))
            .unwrap());
        assert!(!set.is_inside(&Vector::from_ints(&[0, 2, 0, 0])).unwrap());
    }

    #[test]
    fn perturbed_strip_describes_through_eps() {
        let text = r#"{"dim": 3, "set": {"type": "strip", "system": {"kind": "perturbed", "seed": 7},
            "eps": [1, 2, 3]}}"#;
        let set = parse_set(text).unwrap();
        let d = SetDescription::describe(&set).unwrap();
        assert_eq!(d.build().unwrap(), set);
    }

    #[test]
    fn minkowski_stadium() {
        let text = r#"{"dim": 2, "set": {"type": "minkowski", "inner_dim": 1, "radius": "1",
            "inner": {"type": "polyhedron", "rows": [{"a": [-1], "b": 0}]}}}"#;
        let set = parse_set(text).unwrap();
        assert!(set
            .is_inside(&Vector::new(vec![int(5), scalar::rat(1, 2)]))
            .unwrap());
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad_len =
            r#"{"dim": 2, "set": {"type": "polyhedron", "rows": [{"a": [1, 2, 3], "b": 0}]}}"#;
        let msg = parse_set(bad_len).unwrap_err().to_string();
        assert!(msg.contains("set.rows[0].a"), "{msg}");

        let missing = "{\"dim\": 2,\n \"set\": {\"type\": \"polyhedron\"}}";
        let msg = parse_set(missing).unwrap_err().to_string();
        assert!(msg.contains("rows") && msg.contains("line 2"), "{msg}");

        let bad_radius = r#"{"dim": 1, "set": {"type": "strip", "system": {"kind": "orthonormal"}, "radii": ["-1"]}}"#;
        let msg = parse_set(bad_radius).unwrap_err().to_string();
        assert!(msg.contains("set.radii[0]"), "{msg}");

        let bad_rational =
            r#"{"dim": 1, "set": {"type": "polyhedron", "rows": [{"a": ["x"], "b": 0}]}}"#;
        assert!(parse_set(bad_rational).is_err());
    }
}
