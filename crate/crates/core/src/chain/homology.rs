//! Integer homology through Smith normal form, and induced maps.

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, smith_normal_form, solve_many, Int, Matrix};

/// `H_n = Z^free ⊕ ⊕ Z/t_i`, with enough data to read off classes.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<Int>,
    /// Columns span the cycles `Z_n` inside `C_n`.
    pub cycles: Matrix,
    /// Change of basis on cycle coordinates: row `k` of `u` reads the
    /// `k`-th Smith coordinate.
    u: Matrix,
    /// Smith coordinates that survive: `(index, modulus)` with modulus 0
    /// for free summands.
    components: Vec<(usize, Int)>,
    /// One representing cycle per component, as columns in `C_n`.
    pub generators: Matrix,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of cyclic summands.
    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    /// Coordinates of the class of each cycle column of `z` (vectors in
    /// `C_n`), torsion components reduced to `0..t`.
    pub fn classes(&self, z: &Matrix) -> Result<Matrix> {
        let coords = solve_many(&self.cycles, z)?
            .ok_or_else(|| Error::Construction(format!("vector is not a cycle in degree {}", self.degree)))?;
        let smith = self.u.mul(&coords)?;
        let mut trip = Vec::new();
        for (j, col) in (0..smith.cols()).map(|j| (j, smith.column(j))) {
            for (row, (idx, modulus)) in self.components.iter().enumerate() {
                let v = col.iter().find(|(i, _)| i == idx).map(|(_, v)| v.clone()).unwrap_or_else(Int::zero);
                let v = if modulus.is_zero() { v } else { v.mod_floor(modulus) };
                if !v.is_zero() {
                    trip.push((row, j, v));
                }
            }
        }
        Ok(Matrix::from_triplets(self.components.len(), z.cols(), trip))
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

/// `H_n(C)`; needs `d_{n+1}`, so `n + 1` must lie in the truncation.
pub fn homology(c: &ChainComplex, n: usize) -> Result<HomologyGroup> {
    if n + 1 > c.max_degree() {
        return Err(Error::Range {
            degree: n,
            valid: c.max_degree().saturating_sub(1),
        });
    }
    let cycles = if n == 0 {
        Matrix::identity(c.rank(0))
    } else {
        kernel_basis(c.differential(n))
    };
    let boundaries = solve_many(&cycles, c.differential(n + 1))?
        .ok_or_else(|| Error::Construction("boundaries are not cycles".into()))?;
    let snf = smith_normal_form(&boundaries);
    let z = cycles.cols();
    let factors = snf.invariant_factors.clone();
    let mut components = Vec::new();
    let mut torsion = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        if !f.is_one() {
            components.push((k, f.clone()));
            torsion.push(f.clone());
        }
    }
    for k in factors.len()..z {
        components.push((k, Int::zero()));
    }
    let reps: Vec<usize> = components.iter().map(|(k, _)| *k).collect();
    let generators = cycles.mul(&snf.u_inv.select_columns(&reps))?;
    Ok(HomologyGroup {
        degree: n,
        free_rank: z - factors.len(),
        torsion,
        cycles,
        u: snf.u,
        components,
        generators,
    })
}

/// The map `H_n(f)` in the generator coordinates of both groups.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    pub matrix: Matrix,
}

impl InducedMap {
    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

pub fn induced_map_on_homology(f: &ChainMap, n: usize) -> Result<InducedMap> {
    if n + 1 > f.valid() {
        return Err(Error::Range {
            degree: n,
            valid: f.valid().saturating_sub(1),
        });
    }
    let source = homology(f.source(), n)?;
    let target = homology(f.target(), n)?;
    let images = f.degree(n).mul(&source.generators)?;
    let matrix = target.classes(&images)?;
    Ok(InducedMap { source, target, matrix })
}
