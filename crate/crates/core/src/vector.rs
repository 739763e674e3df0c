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

//! Vectors, linear functionals and the three supported norms.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{self, serde_rational, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    L1,
    #[default]
    L2,
    Linf,
}

impl NormKind {
    pub fn dual(self) -> NormKind {
        match self {
            NormKind::L1 => NormKind::Linf,
            NormKind::L2 => NormKind::L2,
            NormKind::Linf => NormKind::L1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormKind::L1 => "l1",
            NormKind::L2 => "l2",
            NormKind::Linf => "linf",
        }
    }
}

impl std::str::FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l1" => Ok(NormKind::L1),
            "l2" => Ok(NormKind::L2),
            "linf" => Ok(NormKind::Linf),
            other => Err(Error::invalid(format!("unknown norm {other:?}"))),
        }
    }
}

/// A point or direction in `R^d` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Rational>);

/// A linear functional `x -> sum_i a_i x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functional(Vec<Rational>);

macro_rules! coordinate_type {
    ($name:ident) => {
        impl $name {
            pub fn new(coords: Vec<Rational>) -> Self {
                $name(coords)
            }

            pub fn from_ints(coords: &[i64]) -> Self {
                $name(coords.iter().map(|&c| scalar::int(c)).collect())
            }

            pub fn zeros(dim: usize) -> Self {
                $name(vec![Rational::zero(); dim])
            }

            /// The `i`-th standard basis element (0-based).
            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = Self::zeros(dim);
                v.0[i] = scalar::int(1);
                v
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[Rational] {
                &self.0
            }

            pub fn into_coords(self) -> Vec<Rational> {
                self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }

            pub fn to_f64(&self) -> Vec<f64> {
                self.0.iter().map(scalar::to_f64).collect()
            }

            pub fn from_f64(coords: &[f64]) -> Result<Self> {
                coords
                    .iter()
                    .map(|&c| scalar::from_f64(c))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }

            pub fn dot(&self, other: &[Rational]) -> Rational {
                debug_assert_eq!(self.0.len(), other.len());
                self.0
                    .iter()
                    .zip(other)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            }
        }

        impl Index<usize> for $name {
            type Output = Rational;

            fn index(&self, i: usize) -> &Rational {
                &self.0[i]
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serde_rational::vec::serialize(&self.0, s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                serde_rational::vec::deserialize(d).map($name)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    };
}

coordinate_type!(Vector);
coordinate_type!(Functional);

impl Vector {
    pub fn scale(&self, c: &Rational) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + t * dir`
    pub fn along(&self, dir: &Vector, t: &Rational) -> Vector {
        Vector(self.0.iter().zip(&dir.0).map(|(z, u)| z + t * u).collect())
    }

    /// Zero-pads (or truncates) to `dim` coordinates.
    pub fn embed(&self, dim: usize) -> Vector {
        let mut coords = self.0.clone();
        coords.resize(dim, Rational::zero());
        Vector(coords)
    }

    pub fn head(&self, k: usize) -> Vector {
        Vector(self.0[..k].to_vec())
    }

    pub fn tail(&self, k: usize) -> Vector {
        Vector(self.0[k..].to_vec())
    }

    pub fn as_functional(&self) -> Functional {
        Functional(self.0.clone())
    }
}

impl Functional {
    /// `<a, x>`
    pub fn apply(&self, x: &Vector) -> Rational {
        self.dot(&x.0)
    }

    pub fn scale(&self, c: &Rational) -> Functional {
        Functional(self.0.iter().map(|x| x * c).collect())
    }

    pub fn as_vector(&self) -> Vector {
        Vector(self.0.clone())
    }
}

impl Neg for &Vector {
    type Output = Vector;

    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for &Functional {
    type Output = Functional;

    fn neg(self) -> Functional {
        Functional(self.0.iter().map(|x| -x).collect())
    }
}

impl Add for &Vector {
    type Output = Vector;

    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;

    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::invalid(format!(
            "dimension mismatch: expected {expected}, got {got}"
        )));
    }
    Ok(())
}

fn sum_abs(c: &[Rational]) -> Rational {
    c.iter().fold(Rational::zero(), |acc, x| acc + x.abs())
}

fn max_abs(c: &[Rational]) -> Rational {
    c.iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(Rational::zero)
}

pub(crate) fn sum_sq(c: &[Rational]) -> Rational {
    c.iter().fold(Rational::zero(), |acc, x| acc + x * x)
}

/// The quantity compared in exact norm tests: `||x||` for L1/Linf and `||x||^2` for L2.
fn gauge(c: &[Rational], kind: NormKind) -> Rational {
    match kind {
        NormKind::L1 => sum_abs(c),
        NormKind::L2 => sum_sq(c),
        NormKind::Linf => max_abs(c),
    }
}

fn norm_coords(c: &[Rational], kind: NormKind) -> Result<Scalar> {
    if c.is_empty() {
        return Err(Error::invalid("vector of dimension 0"));
    }
    Ok(match kind {
        NormKind::L2 => scalar::sqrt_scalar(&sum_sq(c)),
        _ => Scalar::Exact(gauge(c, kind)),
    })
}

pub fn norm(x: &Vector, kind: NormKind) -> Result<Scalar> {
    norm_coords(&x.0, kind)
}

/// Operator norm of `a` when the primal space carries `kind`.
pub fn dual_norm(a: &Functional, kind: NormKind) -> Result<Scalar> {
    norm_coords(&a.0, kind.dual())
}

/// Exact decision of `||x|| < r` (strict).
pub fn norm_lt(x: &Vector, kind: NormKind, r: &Rational) -> bool {
    if r.is_negative() || r.is_zero() {
        return false;
    }
    let g = gauge(&x.0, kind);
    match kind {
        NormKind::L2 => g < r * r,
        _ => &g < r,
    }
}

/// Exact decision of `||x|| > r` (strict).
pub fn norm_gt(x: &Vector, kind: NormKind, r: &Rational) -> bool {
    if r.is_negative() {
        return true;
    }
    let g = gauge(&x.0, kind);
    match kind {
        NormKind::L2 => g > r * r,
        _ => &g > r,
    }
}

/// Rigorous rational bounds `(lo, hi)` on `||x||`.
pub fn norm_bounds(x: &Vector, kind: NormKind) -> (Rational, Rational) {
    match kind {
        NormKind::L2 => {
            let sq = sum_sq(&x.0);
            (scalar::sqrt_lower(&sq), scalar::sqrt_upper(&sq))
        }
        _ => {
            let g = gauge(&x.0, kind);
            (g.clone(), g)
        }
    }
}

pub fn dual_norm_bounds(a: &Functional, kind: NormKind) -> (Rational, Rational) {
    norm_bounds(&a.as_vector(), kind.dual())
}

/// A rational stand-in for `||x||`: exact when the norm is rational, the
/// correctly rounded binary64 value otherwise.
pub fn norm_rational(x: &Vector, kind: NormKind) -> Result<Rational> {
    Ok(norm(x, kind)?.to_rational())
}

/// `u / ||u||`. The result is a positive rational multiple of `u`, so its
/// direction is exact even when the L2 norm is irrational.
pub fn normalize(u: &Vector, kind: NormKind) -> Result<Vector> {
    if u.dim() == 0 {
        return Err(Error::invalid("vector of dimension 0"));
    }
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let n = norm_rational(u, kind)?;
    if n.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(u.scale(&n.recip()))
}
