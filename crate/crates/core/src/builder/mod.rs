//! Construction of the quantum Lie algebra `L_h(g)` inside `U_h(g)`:
//! highest-weight search, symmetrization, orbit generation and the
//! canonical bases.

mod basis;
mod span;

pub use basis::{basis_labels, canonicalize, cartan_element, killing_normalizations, paper_gauge, rational_gauge, Gauge, QLieBasis, Scale};
pub use span::{coefficient_matrix, is_independent, Expander};

use std::collections::BTreeMap;

use num_rational::Rational64;
use thiserror::Error;

use crate::linalg::{LinalgError, Matrix};
use crate::scalar::{GaussRat, Scalar, ScalarError};
use crate::uq::{Element, Monomial, Uq, UqError, Weight, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("no highest-weight vector in the ansatz")]
    NoHighestWeight,
    #[error("no highest-weight vector with a nonvanishing classical limit")]
    VanishingClassicalLimit,
    #[error("{0} candidate highest-weight vectors with nonvanishing classical limit, cannot choose")]
    Ambiguous(usize),
    #[error("weight space {weight} has dimension {found}, expected {expected}")]
    OrbitDimension { weight: Weight, found: usize, expected: usize },
    #[error("orbit has dimension {found}, expected {expected}")]
    Dimension { found: usize, expected: usize },
    #[error("element of weight {0} is not in the span")]
    NotInSpan(Weight),
    #[error("basis elements of weight {0} are linearly dependent")]
    Dependent(Weight),
    #[error("{0} is not weight-homogeneous")]
    Inhomogeneous(String),
    #[error("module is not invariant: {0}")]
    NotInvariant(String),
    #[error("c for root {root} is not q-conjugation invariant: {value}")]
    NotPalindromic { root: String, value: String },
    #[error("square root of {radicand} needs a second radical")]
    Radical { radicand: String },
    #[error(transparent)]
    Uq(#[from] UqError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Candidate highest-weight vectors: `k_lambda · E` with `E` a standard
/// word of highest-root weight.
#[derive(Clone, Debug)]
pub struct Ansatz {
    pub weight: Weight,
    pub monomials: Vec<Monomial>,
}

impl Ansatz {
    /// Torus weights whose fundamental coordinates lie in `(1/2)Z` and in
    /// `[-bound, bound]`.
    pub fn new(uq: &Uq, bound: i64) -> Ansatz {
        let cartan = uq.cartan();
        let theta = cartan.highest_root();
        let words = uq.standard_words(&theta);
        let steps: Vec<Rational64> = (-2 * bound..=2 * bound).map(|n| Rational64::new(n, 2)).collect();
        let mut coords: Vec<Vec<Rational64>> = vec![Vec::new()];
        for _ in 0..cartan.rank {
            coords = coords
                .into_iter()
                .flat_map(|c| {
                    steps.iter().map(move |s| {
                        let mut c = c.clone();
                        c.push(*s);
                        c
                    })
                })
                .collect();
        }
        let mut monomials = Vec::new();
        for c in coords {
            let k = cartan.from_fundamental(&c);
            for w in &words {
                monomials.push(Monomial::new(Vec::new(), k, w.clone()));
            }
        }
        monomials.sort();
        Ansatz { weight: theta, monomials }
    }
}

/// Basis of the solutions of `e_i ∘ Ψ = 0` inside the span of the ansatz.
/// The action of `e_i` shifts the torus part of every term by the same
/// amount, so the system splits into one block per torus weight.
pub fn find_highest_weight(uq: &Uq, ansatz: &Ansatz) -> Result<Vec<Element>, BuildError> {
    let mut by_torus: BTreeMap<Weight, Vec<Word>> = BTreeMap::new();
    for m in &ansatz.monomials {
        by_torus.entry(m.k).or_default().push(m.e.clone());
    }
    let rank = uq.cartan().rank;
    let mut out = Vec::new();
    for (k, words) in by_torus {
        let columns: Vec<Element> =
            words.iter().map(|w| Element::monomial(Monomial::new(Vec::new(), k, w.clone()), Scalar::one())).collect();
        let mut images: Vec<Vec<Element>> = Vec::new();
        for c in &columns {
            let mut row = Vec::new();
            for i in 0..rank {
                row.push(uq.act_e(i, c)?);
            }
            images.push(row);
        }
        let mut blocks = Vec::new();
        for i in 0..rank {
            let refs: Vec<&Element> = images.iter().map(|r| &r[i]).collect();
            blocks.push(coefficient_matrix(&refs).0);
        }
        let rows: Vec<Vec<Scalar>> = blocks.iter().flat_map(|b| (0..b.rows()).map(move |r| b.row(r).to_vec())).collect();
        let system = if rows.is_empty() { Matrix::zeros(0, columns.len()) } else { Matrix::from_rows(rows)? };
        for v in system.kernel() {
            let mut psi = Element::zero();
            for (c, x) in columns.iter().zip(&v) {
                psi.add_scaled(c, x);
            }
            out.push(psi);
        }
    }
    if out.is_empty() {
        return Err(BuildError::NoHighestWeight);
    }
    Ok(out)
}

/// Leading classical part: the element is divided by `(v - 1)^m`, `m` the
/// smallest order of vanishing of its coefficients at `v = 1`, then
/// evaluated with every `k_lambda -> 1`. Keys are `(F-word, E-word)`.
pub fn classical_image(x: &Element) -> Result<BTreeMap<(Word, Word), GaussRat>, ScalarError> {
    let m = x.terms().map(|(_, c)| c.valuation_at_one()).min().unwrap_or(0);
    let shift = (&Scalar::v_pow(1) - &Scalar::one()).pow(-(m as i32))?;
    let mut out: BTreeMap<(Word, Word), GaussRat> = BTreeMap::new();
    for (mono, c) in x.terms() {
        let value = (c * &shift).classical_limit()?;
        *out.entry((mono.f.clone(), mono.e.clone())).or_insert_with(|| GaussRat::from_int(0)) += &value;
    }
    out.retain(|_, v| *v != GaussRat::from_int(0));
    Ok(out)
}

/// The classical image does not vanish at leading order.
pub fn has_classical_limit(x: &Element) -> Result<bool, ScalarError> {
    Ok(!x.is_zero() && !classical_image(x)?.is_empty())
}

/// Scales `x` so that its first coefficient is 1.
pub fn normalize(x: &Element) -> Result<Element, ScalarError> {
    match x.terms().next() {
        Some((_, c)) => Ok(x.scale(&c.inv()?)),
        None => Ok(x.clone()),
    }
}

/// Expresses `x` over `family` (which must be independent).
fn expand_over(family: &[Element], x: &Element) -> Result<Vec<Scalar>, BuildError> {
    let mut all: Vec<&Element> = family.iter().collect();
    all.push(x);
    let (m, _) = coefficient_matrix(&all);
    let n = family.len();
    let mut a = Matrix::zeros(m.rows(), n);
    let mut rhs = Vec::new();
    for i in 0..m.rows() {
        for j in 0..n {
            a.set(i, j, m.get(i, j).clone());
        }
        rhs.push(m.get(i, n).clone());
    }
    Ok(a.solve(&rhs)?)
}

/// Picks one highest-weight vector from the solution space and makes it
/// an `S~` eigenvector with eigenvalue `-1`. Returns it with a log.
pub fn symmetrize(uq: &Uq, solutions: &[Element]) -> Result<(Element, Vec<String>), BuildError> {
    let mut log = vec![format!("highest-weight solution space has dimension {}", solutions.len())];
    let mut candidates: Vec<Element> = Vec::new();
    if solutions.len() > 1 && uq.cartan().has_diagram_automorphism() {
        // matrix of tau on the solution space, then its +-1 eigenvectors
        let n = solutions.len();
        let mut t = Matrix::zeros(n, n);
        for (j, s) in solutions.iter().enumerate() {
            let image = expand_over(solutions, &uq.tau(s)?)
                .map_err(|_| BuildError::NotInvariant("tau does not preserve the highest-weight space".into()))?;
            for (i, x) in image.into_iter().enumerate() {
                t.set(i, j, x);
            }
        }
        for sign in [-1i64, 1] {
            let shifted = t.add(&Matrix::identity(n).scale(&Scalar::from_int(-sign)))?;
            for v in shifted.kernel() {
                let mut x = Element::zero();
                for (s, c) in solutions.iter().zip(&v) {
                    x.add_scaled(s, c);
                }
                let keep = has_classical_limit(&x)?;
                log.push(format!(
                    "tau eigenvector with eigenvalue {}: classical limit {}",
                    sign,
                    if keep { "nonvanishing" } else { "vanishing" }
                ));
                if keep {
                    candidates.push(x);
                }
            }
        }
    } else {
        for s in solutions {
            if has_classical_limit(s)? {
                candidates.push(s.clone());
            }
        }
    }
    let phi = match candidates.len() {
        0 => return Err(BuildError::VanishingClassicalLimit),
        1 => normalize(&candidates[0])?,
        n => return Err(BuildError::Ambiguous(n)),
    };
    let s_phi = uq.s_tilde(&phi)?;
    let c = s_phi.ratio_to(&phi).ok_or_else(|| BuildError::NotInvariant("S~ does not preserve the highest-weight line".into()))?;
    log.push(format!("S~ eigenvalue of the selected vector: {}", crate::scalar::pretty_q(&c, uq.root_order())));
    // phi2 = gamma phi - S~(gamma phi) = (gamma - c qconj(gamma)) phi
    let mut gamma = Scalar::one();
    let mut factor = &gamma - &(&c * &gamma.qconj());
    if factor.is_zero() {
        gamma = Scalar::v_pow(1);
        factor = &gamma - &(&c * &gamma.qconj());
    }
    let phi2 = phi.scale(&factor);
    debug_assert_eq!(uq.s_tilde(&phi2)?, phi2.neg());
    Ok((phi2, log))
}

/// The orbit `U_h(g) ∘ phi`, split into weight spaces.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub spaces: BTreeMap<Weight, Vec<Element>>,
}

impl Orbit {
    pub fn dim(&self) -> usize {
        self.spaces.values().map(Vec::len).sum()
    }
}

/// Applies the lowering generators until the span closes, then checks
/// closure under the raising generators and the expected weight-space
/// dimensions.
pub fn generate_orbit(uq: &Uq, phi: &Element) -> Result<Orbit, BuildError> {
    let cartan = uq.cartan();
    let top = phi.weight().ok_or_else(|| BuildError::Inhomogeneous("highest-weight vector".into()))?;
    let mut spaces: BTreeMap<Weight, Vec<Element>> = BTreeMap::new();
    spaces.insert(top, vec![phi.clone()]);
    let mut queue = vec![phi.clone()];
    while let Some(x) = queue.pop() {
        for i in 0..cartan.rank {
            let y = uq.act_f(i, &x)?;
            if y.is_zero() {
                continue;
            }
            let w = y.weight().ok_or_else(|| BuildError::Inhomogeneous("orbit element".into()))?;
            let space = spaces.entry(w).or_default();
            let mut refs: Vec<&Element> = space.iter().collect();
            refs.push(&y);
            if is_independent(&refs) {
                space.push(y.clone());
                queue.push(y);
            }
        }
        let dim: usize = spaces.values().map(Vec::len).sum();
        if dim > cartan.dim() {
            return Err(BuildError::Dimension { found: dim, expected: cartan.dim() });
        }
    }
    let orbit = Orbit { spaces };
    if orbit.dim() != cartan.dim() {
        return Err(BuildError::Dimension { found: orbit.dim(), expected: cartan.dim() });
    }
    for (w, space) in &orbit.spaces {
        let expected = if w.is_zero() {
            cartan.rank
        } else if cartan.is_root(w) {
            1
        } else {
            0
        };
        if space.len() != expected {
            return Err(BuildError::OrbitDimension { weight: *w, found: space.len(), expected });
        }
    }
    let elements: Vec<Element> = orbit.spaces.values().flatten().cloned().collect();
    let expander = Expander::new(&elements)?;
    for x in &elements {
        for i in 0..cartan.rank {
            expander.coordinates(&elements, &uq.act_e(i, x)?)?;
        }
    }
    Ok(orbit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::AlgebraKind;

    #[test]
    fn sl2_highest_weight_is_unique() {
        let uq = Uq::new(AlgebraKind::Sl2);
        let sols = find_highest_weight(&uq, &Ansatz::new(&uq, 2)).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].weight(), Some(uq.cartan().highest_root()));
    }

    #[test]
    fn orbits_have_adjoint_shape() {
        for kind in [AlgebraKind::Sl2, AlgebraKind::A2] {
            let uq = Uq::new(kind);
            let sols = find_highest_weight(&uq, &Ansatz::new(&uq, 2)).unwrap();
            let (phi, _) = symmetrize(&uq, &sols).unwrap();
            let orbit = generate_orbit(&uq, &phi).unwrap();
            assert_eq!(orbit.dim(), uq.cartan().dim());
            assert_eq!(orbit.spaces[&Weight::zero()].len(), uq.cartan().rank);
        }
    }

    #[test]
    fn highest_weight_vector_has_a_classical_limit() {
        let uq = Uq::new(AlgebraKind::Sl2);
        let sols = find_highest_weight(&uq, &Ansatz::new(&uq, 2)).unwrap();
        let (phi, _) = symmetrize(&uq, &sols).unwrap();
        assert!(has_classical_limit(&normalize(&phi).unwrap()).unwrap());
    }
}
