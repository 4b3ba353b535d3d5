use std::collections::{BTreeMap, BTreeSet};

use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::uq::{Element, Monomial, Weight};

use super::BuildError;

/// Coordinates of weight-homogeneous elements over a fixed family of
/// linearly independent, weight-homogeneous elements.
#[derive(Clone, Debug)]
pub struct Expander {
    dim: usize,
    blocks: BTreeMap<Weight, Block>,
}

#[derive(Clone, Debug)]
struct Block {
    indices: Vec<usize>,
    pivots: Vec<Monomial>,
    inverse: Matrix,
}

/// Matrix whose columns are the coefficient vectors of `elems` over the
/// union of their monomials (in monomial order).
pub fn coefficient_matrix(elems: &[&Element]) -> (Matrix, Vec<Monomial>) {
    let keys: BTreeSet<Monomial> = elems.iter().flat_map(|e| e.terms().map(|(m, _)| m.clone())).collect();
    let keys: Vec<Monomial> = keys.into_iter().collect();
    let mut m = Matrix::zeros(keys.len(), elems.len());
    for (j, e) in elems.iter().enumerate() {
        for (i, k) in keys.iter().enumerate() {
            m.set(i, j, e.coefficient(k));
        }
    }
    (m, keys)
}

pub fn is_independent(elems: &[&Element]) -> bool {
    coefficient_matrix(elems).0.rank() == elems.len()
}

impl Expander {
    pub fn new(elements: &[Element]) -> Result<Self, BuildError> {
        let mut groups: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (k, e) in elements.iter().enumerate() {
            let w = e.weight().ok_or_else(|| BuildError::Inhomogeneous(format!("basis element {}", k)))?;
            groups.entry(w).or_default().push(k);
        }
        let mut blocks = BTreeMap::new();
        for (w, indices) in groups {
            let refs: Vec<&Element> = indices.iter().map(|&k| &elements[k]).collect();
            let (m, keys) = coefficient_matrix(&refs);
            let (_, rows) = m.transpose().rref();
            if rows.len() != indices.len() {
                return Err(BuildError::Dependent(w));
            }
            let mut square = Matrix::zeros(rows.len(), rows.len());
            for (a, &r) in rows.iter().enumerate() {
                for b in 0..indices.len() {
                    square.set(a, b, m.get(r, b).clone());
                }
            }
            let inverse = square.inverse()?;
            let pivots = rows.iter().map(|&r| keys[r].clone()).collect();
            blocks.insert(w, Block { indices, pivots, inverse });
        }
        Ok(Expander { dim: elements.len(), blocks })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `x`; the residual is checked to vanish exactly.
    pub fn coordinates(&self, elements: &[Element], x: &Element) -> Result<Vec<Scalar>, BuildError> {
        let mut parts: BTreeMap<Weight, Element> = BTreeMap::new();
        for (m, c) in x.terms() {
            parts.entry(m.weight()).or_default().add_term(m.clone(), c.clone());
        }
        let mut out = vec![Scalar::zero(); self.dim];
        for (w, part) in parts {
            let block = self.blocks.get(&w).ok_or(BuildError::NotInSpan(w))?;
            let rhs: Vec<Scalar> = block.pivots.iter().map(|m| part.coefficient(m)).collect();
            let coords = block.inverse.mul_vec(&rhs)?;
            let mut residual = part.clone();
            for (c, &k) in coords.iter().zip(&block.indices) {
                residual.add_scaled(&elements[k], &-c);
                out[k] = c.clone();
            }
            if !residual.is_zero() {
                return Err(BuildError::NotInSpan(w));
            }
        }
        Ok(out)
    }
}
