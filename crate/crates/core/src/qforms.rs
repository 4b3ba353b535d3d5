//! The quantum Killing form `B(a, b) = -Tr_adj(S~(a) b u)` computed from
//! the action matrices of the module itself.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::builder::{BuildError, Expander};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::uq::{Element, Monomial, Uq, Weight};

/// Matrices of the `∘`-action on a fixed basis of a submodule.
#[derive(Debug)]
pub struct AdjointRep {
    elements: Vec<Element>,
    weights: Vec<Weight>,
    expander: Expander,
    raise: Vec<Matrix>,
    lower: Vec<Matrix>,
    cache: Mutex<HashMap<Monomial, Matrix>>,
}

impl AdjointRep {
    pub fn new(uq: &Uq, elements: &[Element]) -> Result<Self, BuildError> {
        let expander = Expander::new(elements)?;
        let mut weights = Vec::new();
        for (k, e) in elements.iter().enumerate() {
            weights.push(e.weight().ok_or_else(|| BuildError::Inhomogeneous(format!("basis element {}", k)))?);
        }
        let n = elements.len();
        let mut raise = Vec::new();
        let mut lower = Vec::new();
        for i in 0..uq.cartan().rank {
            let mut me = Matrix::zeros(n, n);
            let mut mf = Matrix::zeros(n, n);
            for (j, b) in elements.iter().enumerate() {
                let ce = expander.coordinates(elements, &uq.act_e(i, b)?)?;
                let cf = expander.coordinates(elements, &uq.act_f(i, b)?)?;
                for r in 0..n {
                    me.set(r, j, ce[r].clone());
                    mf.set(r, j, cf[r].clone());
                }
            }
            raise.push(me);
            lower.push(mf);
        }
        Ok(AdjointRep { elements: elements.to_vec(), weights, expander, raise, lower, cache: Mutex::new(HashMap::new()) })
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn raising(&self, i: usize) -> &Matrix {
        &self.raise[i]
    }

    pub fn lowering(&self, i: usize) -> &Matrix {
        &self.lower[i]
    }

    pub fn coordinates(&self, x: &Element) -> Result<Vec<Scalar>, BuildError> {
        self.expander.coordinates(&self.elements, x)
    }

    /// `k_lambda` acts on weight `mu` by `q^{(lambda, mu)}`.
    pub fn torus(&self, uq: &Uq, lambda: &Weight) -> Result<Matrix, BuildError> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (j, w) in self.weights.iter().enumerate() {
            m.set(j, j, uq.q_pairing(lambda, w)?);
        }
        Ok(m)
    }

    pub fn u_matrix(&self, uq: &Uq) -> Result<Matrix, BuildError> {
        let u = uq.u();
        let (m, _) = u.terms().next().expect("u is a torus element");
        self.torus(uq, &m.k)
    }

    fn monomial_matrix(&self, uq: &Uq, m: &Monomial) -> Result<Matrix, BuildError> {
        if let Some(x) = self.cache.lock().unwrap().get(m) {
            return Ok(x.clone());
        }
        let mut acc = Matrix::identity(self.dim());
        for &l in &m.f {
            acc = acc.mul(&self.lower[l as usize])?;
        }
        acc = acc.mul(&self.torus(uq, &m.k)?)?;
        for &l in &m.e {
            acc = acc.mul(&self.raise[l as usize])?;
        }
        self.cache.lock().unwrap().insert(m.clone(), acc.clone());
        Ok(acc)
    }

    /// `pi(x)`, the matrix of `a -> x ∘ a`.
    pub fn matrix(&self, uq: &Uq, x: &Element) -> Result<Matrix, BuildError> {
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (m, c) in x.terms() {
            out = out.add(&self.monomial_matrix(uq, m)?.scale(c))?;
        }
        Ok(out)
    }

    /// `B(a, b) = -Tr(pi(S~ a) pi(b) pi(u))`.
    pub fn killing(&self, uq: &Uq, a: &Element, b: &Element) -> Result<Scalar, BuildError> {
        let sa = self.matrix(uq, &uq.s_tilde(a)?)?;
        let pb = self.matrix(uq, b)?;
        let pu = self.u_matrix(uq)?;
        Ok(-sa.mul(&pb)?.mul(&pu)?.trace())
    }

    /// `G[i][j] = B(b_i, b_j)` on the basis.
    pub fn gram(&self, uq: &Uq) -> Result<Matrix, BuildError> {
        let n = self.dim();
        let pu = self.u_matrix(uq)?;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for b in &self.elements {
            left.push(self.matrix(uq, &uq.s_tilde(b)?)?);
            right.push(self.matrix(uq, b)?.mul(&pu)?);
        }
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g.set(i, j, -left[i].mul(&right[j])?.trace());
            }
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use crate::pipeline::{Construction, Options};
    use crate::uq::AlgebraKind;

    #[test]
    fn killing_form_respects_weights() {
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        let gram = c.rep.gram(&c.uq).unwrap();
        let w = c.rep.weights();
        for a in 0..3 {
            for b in 0..3 {
                if !(w[a] + w[b]).is_zero() {
                    assert!(gram.get(a, b).is_zero(), "B({}, {})", a, b);
                }
            }
        }
        assert_eq!(gram.rank(), 3);
    }

    #[test]
    fn action_matrices_reproduce_the_module() {
        let c = Construction::new(AlgebraKind::Sl2, &Options::default()).unwrap();
        let e = c.uq.e(0);
        let m = c.rep.matrix(&c.uq, &e).unwrap();
        assert_eq!(&m, c.rep.raising(0));
    }
}
