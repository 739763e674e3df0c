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

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, Rational};
use crate::vector::{Functional, Vector};

/// Vectors `x_n` and functionals `f_n` with `f_i(x_j) = 1` if `i == j`, else `0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BiorthogonalSystem {
    dim: usize,
    vectors: Vec<Vector>,
    functionals: Vec<Functional>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SystemKind {
    Orthonormal,
    Perturbed { seed: u64 },
}

impl BiorthogonalSystem {
    /// Validates dimensions and exact biorthogonality.
    pub fn new(dim: usize, vectors: Vec<Vector>, functionals: Vec<Functional>) -> Result<Self> {
        if vectors.len() != functionals.len() {
            return Err(Error::invalid(format!(
                "{} vectors but {} functionals",
                vectors.len(),
                functionals.len()
            )));
        }
        if vectors.len() > dim {
            return Err(Error::invalid(format!(
                "{} pairs exceed ambient dimension {dim}",
                vectors.len()
            )));
        }
        for (n, (x, f)) in vectors.iter().zip(&functionals).enumerate() {
            if x.dim() != dim || f.dim() != dim {
                return Err(Error::invalid(format!("pair {n} is not in R^{dim}")));
            }
        }
        let system = BiorthogonalSystem {
            dim,
            vectors,
            functionals,
        };
        if !system.biorthogonality_defect().is_zero() {
            return Err(Error::invalid("pairs are not biorthogonal"));
        }
        Ok(system)
    }

    pub fn orthonormal(dim: usize) -> Self {
        BiorthogonalSystem {
            dim,
            vectors: (0..dim).map(|i| Vector::basis(dim, i)).collect(),
            functionals: (0..dim).map(|i| Functional::basis(dim, i)).collect(),
        }
    }

    /// Columns of a random integer unimodular matrix `X = L U` and the rows of `X^{-1}`.
    pub fn perturbed(dim: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut unit_triangular = |lower: bool| -> linalg::Matrix {
            (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            let off = if lower { j < i } else { j > i };
                            if i == j {
                                Rational::one()
                            } else if off && rng.gen_bool(0.35) {
                                int(rng.gen_range(-1..=1))
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let l = unit_triangular(true);
        let u = unit_triangular(false);
        let x = linalg::mat_mul(&l, &u);
        let inv = linalg::inverse(&x)
            .ok_or_else(|| Error::Internal("unimodular matrix is singular".into()))?;
        let vectors = linalg::transpose(&x).into_iter().map(Vector::new).collect();
        let functionals = inv.into_iter().map(Functional::new).collect();
        Self::new(dim, vectors, functionals)
            .map_err(|e| Error::Internal(format!("perturbed system: {e}")))
    }

    pub fn build(dim: usize, kind: SystemKind) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("system dimension must be at least 1"));
        }
        match kind {
            SystemKind::Orthonormal => Ok(Self::orthonormal(dim)),
            SystemKind::Perturbed { seed } => Self::perturbed(dim, seed),
        }
    }

    /// The first `k` pairs.
    pub fn truncated(&self, k: usize) -> Self {
        let k = k.min(self.count());
        BiorthogonalSystem {
            dim: self.dim,
            vectors: self.vectors[..k].to_vec(),
            functionals: self.functionals[..k].to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn functionals(&self) -> &[Functional] {
        &self.functionals
    }

    /// `max |f_i(x_j) - delta_ij|`
    pub fn biorthogonality_defect(&self) -> Rational {
        let mut worst = Rational::zero();
        for (i, f) in self.functionals.iter().enumerate() {
            for (j, x) in self.vectors.iter().enumerate() {
                let target = if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                let gap = (f.apply(x) - target).abs();
                if gap > worst {
                    worst = gap;
                }
            }
        }
        worst
    }

    /// Whether `x` in `span{x_n}` with all `f_n(x) = 0` forces `x = 0`,
    /// i.e. the vectors are linearly independent.
    pub fn separates_span(&self) -> bool {
        let rows: Vec<Vec<Rational>> = self.vectors.iter().map(|v| v.coords().to_vec()).collect();
        linalg::rank(&rows) == self.count()
    }

    /// Whether the functionals are pairwise orthogonal unit vectors.
    pub fn is_orthonormal(&self) -> bool {
        self.functionals.iter().enumerate().all(|(i, f)| {
            self.functionals.iter().enumerate().all(|(j, g)| {
                let d = f.dot(g.coords());
                if i == j {
                    d.is_one()
                } else {
                    d.is_zero()
                }
            })
        })
    }

    /// Whether every functional is `+-e_i` for distinct coordinates.
    pub fn is_coordinate_aligned(&self) -> bool {
        let mut seen = vec![false; self.dim];
        self.functionals.iter().all(|f| {
            let nz: Vec<usize> = (0..self.dim).filter(|&i| !f[i].is_zero()).collect();
            if nz.len() != 1 || !f[nz[0]].abs().is_one() || seen[nz[0]] {
                return false;
            }
            seen[nz[0]] = true;
            true
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormal_systems_are_biorthogonal() {
        for d in [1, 3, 8] {
            let s = BiorthogonalSystem::build(d, SystemKind::Orthonormal).unwrap();
            assert_eq!(s.count(), d);
            assert!(s.biorthogonality_defect().is_zero());
            assert!(s.separates_span());
            assert!(s.is_orthonormal());
            assert!(s.is_coordinate_aligned());
        }
    }

    #[test]
    fn perturbed_system_is_exactly_biorthogonal() {
        let s = BiorthogonalSystem::build(3, SystemKind::Perturbed { seed: 7 }).unwrap();
        assert!(s.biorthogonality_defect().is_zero());
        assert!(s.separates_span());
        // independent check: stack functionals as rows, vectors as columns
        for (i, f) in s.functionals().iter().enumerate() {
            for (j, x) in s.vectors().iter().enumerate() {
                let expected = if i == j { int(1) } else { int(0) };
                assert_eq!(f.apply(x), expected);
            }
        }
    }

    #[test]
    fn perturbed_is_deterministic_in_seed() {
        let a = BiorthogonalSystem::perturbed(6, 11).unwrap();
        let b = BiorthogonalSystem::perturbed(6, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_non_biorthogonal_pairs() {
        let v = vec![Vector::from_ints(&[1, 0]), Vector::from_ints(&[1, 1])];
        let f = vec![
            Functional::from_ints(&[1, 0]),
            Functional::from_ints(&[0, 1]),
        ];
        assert!(BiorthogonalSystem::new(2, v, f).is_err());
        assert!(BiorthogonalSystem::build(0, SystemKind::Orthonormal).is_err());
    }

    #[test]
    fn truncation_keeps_prefix() {
        let s = BiorthogonalSystem::orthonormal(4).truncated(2);
        assert_eq!(s.count(), 2);
        assert_eq!(s.dim(), 4);
        assert!(s.biorthogonality_defect().is_zero());
    }
}
