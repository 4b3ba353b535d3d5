use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::scalar::{RadScalar, Scalar, ScalarContext};
use crate::uq::{AlgebraKind, Element, Uq, Weight};

use super::{BuildError, Orbit};

/// Normalization of the basis.
///
/// * `Rational`: `S~ X_a = -q^{-(rho,a)} X_a`, `X_{-a} = θ~ X_a`, `H_i` from
///   the brackets of the simple root vectors; no square roots needed.
/// * `Canonical`: additionally `B(X_a, X_{-a}) = -1`, using the radical `C`.
/// * `Paper`: the canonical basis, except for sl2 where it is the basis
///   `X± = k^{1/2} x±`, `H = [X+ ∘ X-]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gauge {
    Rational,
    Canonical,
    Paper,
}

impl Gauge {
    pub fn name(self) -> &'static str {
        match self {
            Gauge::Rational => "rational",
            Gauge::Canonical => "canonical",
            Gauge::Paper => "paper",
        }
    }
}

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gauge {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "rational" => Ok(Gauge::Rational),
            "canonical" => Ok(Gauge::Canonical),
            "paper" => Ok(Gauge::Paper),
            _ => Err(format!("unknown gauge `{}`", s)),
        }
    }
}

/// `rational * prod sqrt(R_k)` over the radicals `k` set in `radicals`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scale {
    pub rational: Scalar,
    pub radicals: u8,
}

impl Scale {
    pub fn one() -> Self {
        Scale { rational: Scalar::one(), radicals: 0 }
    }

    pub fn rational(x: Scalar) -> Self {
        Scale { rational: x, radicals: 0 }
    }

    pub fn is_palindromic(&self) -> bool {
        self.rational.is_qconj_invariant()
    }
}

/// A basis of `L_h(g)`: basis vector `k` is `scales[k] * elements[k]`.
///
/// Order: positive roots in convex order, then `H_1..H_r`, then the
/// negative roots in the same order as the positive ones.
#[derive(Clone, Debug)]
pub struct QLieBasis {
    pub kind: AlgebraKind,
    pub gauge: Gauge,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    pub elements: Vec<Element>,
    pub scales: Vec<Scale>,
    /// `R_0 = C^2`, optionally `R_1 = D^2`; only `C` may survive in
    /// structure constants.
    pub radicands: Vec<Scalar>,
    pub context: Arc<ScalarContext>,
    /// `c_a = -B(X_a, X_{-a})` of the rational gauge, per positive root.
    pub c: Vec<Scalar>,
    pub log: Vec<String>,
}

impl QLieBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn n_positive(&self) -> usize {
        (self.dim() - self.rank()) / 2
    }

    pub fn rank(&self) -> usize {
        self.weights.iter().filter(|w| w.is_zero()).count()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Index of `X_root`.
    pub fn root_index(&self, root: &Weight) -> Option<usize> {
        if root.is_zero() {
            return None;
        }
        self.weights.iter().position(|w| w == root)
    }

    /// Index of `H_i`.
    pub fn h_index(&self, i: usize) -> usize {
        self.n_positive() + i
    }

    pub fn is_cartan(&self, k: usize) -> bool {
        self.weights[k].is_zero()
    }

    /// `prod scales[k]^{e_k}` for the given `(k, e_k)`, as a scalar in the
    /// context. Fails if a radical other than `C` is left over.
    pub fn scale_product(&self, factors: &[(usize, i32)]) -> Result<RadScalar, BuildError> {
        let mut rational = Scalar::one();
        let mut exps = [0i32; 8];
        for &(k, e) in factors {
            let s = &self.scales[k];
            rational = &rational * &s.rational.pow(e)?;
            for (bit, x) in exps.iter_mut().enumerate() {
                if s.radicals & (1 << bit) != 0 {
                    *x += e;
                }
            }
        }
        let mut with_c = false;
        for (bit, &x) in exps.iter().enumerate().take(self.radicands.len()) {
            rational = &rational * &self.radicands[bit].pow(x.div_euclid(2))?;
            if x.rem_euclid(2) == 1 {
                if bit == 0 {
                    with_c = true;
                } else {
                    return Err(BuildError::Radical { radicand: self.radicands[bit].to_string() });
                }
            }
        }
        Ok(if with_c {
            RadScalar::new(Scalar::zero(), rational, self.context.clone())?
        } else {
            RadScalar::rational(rational, &self.context)
        })
    }
}

pub fn basis_labels(uq: &Uq) -> Vec<String> {
    let cartan = uq.cartan();
    if cartan.kind == AlgebraKind::Sl2 {
        return vec!["X+".into(), "H".into(), "X-".into()];
    }
    let mut out = Vec::new();
    for r in &cartan.positive_roots {
        out.push(format!("X+{}", cartan.root_label(r)));
    }
    for i in 0..cartan.rank {
        out.push(format!("H{}", i + 1));
    }
    for r in &cartan.positive_roots {
        out.push(format!("X{}", cartan.root_label(&-*r)));
    }
    out
}

fn basis_weights(uq: &Uq) -> Vec<Weight> {
    let cartan = uq.cartan();
    let mut out = cartan.positive_roots.clone();
    out.extend(std::iter::repeat(Weight::zero()).take(cartan.rank));
    out.extend(cartan.positive_roots.iter().map(|r| -*r));
    out
}

/// `t` with `t / qconj(t) = r`, for `r qconj(r) = 1`.
fn hilbert90(r: &Scalar) -> Scalar {
    let t = &Scalar::one() + r;
    if !t.is_zero() {
        return t;
    }
    let v = Scalar::v_pow(1);
    &v + &(r * &v.qconj())
}

fn check_in_orbit(orbit: &Orbit, x: &Element, what: &str) -> Result<(), BuildError> {
    let w = x.weight().ok_or_else(|| BuildError::Inhomogeneous(what.to_string()))?;
    let space = orbit.spaces.get(&w).ok_or_else(|| BuildError::NotInvariant(format!("{} leaves the module", what)))?;
    let mut refs: Vec<&Element> = space.iter().collect();
    refs.push(x);
    if super::is_independent(&refs) {
        return Err(BuildError::NotInvariant(format!("{} leaves the module", what)));
    }
    Ok(())
}

/// `H_i = (q^{(rho,a_i)} [X_{-a_i} ∘ X_{a_i}] - q^{-(rho,a_i)} [X_{a_i} ∘ X_{-a_i}]) / 2`.
pub fn cartan_element(uq: &Uq, i: usize, xp: &Element, xm: &Element) -> Result<Element, BuildError> {
    let cartan = uq.cartan();
    let rho_a = cartan.pairing(&cartan.rho(), &Weight::simple(i));
    let first = uq.adjoint(xm, xp)?.scale(&uq.q_pow(rho_a)?);
    let second = uq.adjoint(xp, xm)?.scale(&uq.q_pow(-rho_a)?);
    Ok(first.sub(&second).scale(&Scalar::from_ratio(1, 2)))
}

/// The rational gauge built from the orbit.
pub fn rational_gauge(uq: &Uq, orbit: &Orbit, log: Vec<String>) -> Result<QLieBasis, BuildError> {
    let cartan = uq.cartan();
    let rho = cartan.rho();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut log = log;
    for r in &cartan.positive_roots {
        let y = super::normalize(&orbit.spaces[r][0])?;
        let sigma = uq.s_tilde(&y)?.ratio_to(&y).ok_or_else(|| BuildError::NotInvariant(format!("S~ on root space {}", r)))?;
        let eps = -uq.q_pow(-cartan.pairing(&rho, r))?;
        let x = y.scale(&hilbert90(&(&sigma / &eps)));
        let xm = uq.theta_tilde(&x)?;
        check_in_orbit(orbit, &xm, &format!("θ~(X_{})", cartan.root_label(r)))?;
        pos.push(x);
        neg.push(xm);
    }
    let mut hs = Vec::new();
    for i in 0..cartan.rank {
        let k = cartan.positive_roots.iter().position(|r| *r == Weight::simple(i)).expect("simple root");
        let h = cartan_element(uq, i, &pos[k], &neg[k])?;
        check_in_orbit(orbit, &h, &format!("H_{}", i + 1))?;
        hs.push(h);
    }
    let mut elements = pos;
    elements.extend(hs);
    elements.extend(neg);
    log.push("rational gauge: S~ eigenvalues fixed, X_{-a} = θ~(X_a), H_i from simple brackets".into());
    let context = Arc::new(ScalarContext::new(uq.root_order()));
    let scales = vec![Scale::one(); elements.len()];
    let basis = QLieBasis {
        kind: cartan.kind,
        gauge: Gauge::Rational,
        labels: basis_labels(uq),
        weights: basis_weights(uq),
        elements,
        scales,
        radicands: Vec::new(),
        context,
        c: Vec::new(),
        log,
    };
    // the H_i must be independent
    super::Expander::new(&basis.elements)?;
    Ok(basis)
}

/// `c_a = -B(X_a, X_{-a})` from the Gram matrix of the rational gauge.
pub fn killing_normalizations(rational: &QLieBasis, gram: &Matrix) -> Result<Vec<Scalar>, BuildError> {
    let n = rational.n_positive();
    let mut out = Vec::new();
    for a in 0..n {
        let b = rational.dim() - n + a;
        let c = -gram.get(a, b);
        if !c.is_qconj_invariant() || c.is_zero() {
            return Err(BuildError::NotPalindromic { root: rational.labels[a].clone(), value: c.to_string() });
        }
        out.push(c);
    }
    Ok(out)
}

fn positive_branch(r: Scalar) -> Result<Scalar, BuildError> {
    Ok(if r.classical_limit()?.is_positive_branch() { r } else { -r })
}

/// The canonical gauge: `X_{±a} -> s_a X_{±a}` with `s_a^2 = 1/c_a` and
/// `H_i -> H_i / c_{a_i}`. The first radical square is `hint` when it is
/// needed for some root, else `1/c_a` for the first non-square `1/c_a`
/// starting from the highest root; a second radical is added for roots
/// still not covered.
pub fn canonicalize(uq: &Uq, rational: &QLieBasis, gram: &Matrix, hint: Option<&Scalar>) -> Result<QLieBasis, BuildError> {
    let c = killing_normalizations(rational, gram)?;
    let inv: Vec<Scalar> = c.iter().map(|x| x.inv()).collect::<Result<_, _>>()?;
    let mut log = rational.log.clone();
    let mut radicands: Vec<Scalar> = Vec::new();
    let covers = |r: &Scalar, x: &Scalar| (x / r).sqrt().is_some();
    if let Some(h) = hint {
        if inv.iter().any(|x| x.sqrt().is_none() && covers(h, x)) {
            log.push("radical square C^2 taken from the supplied normalization".into());
            radicands.push(h.clone());
        }
    }
    // the highest root's radical first, so that it is the one that
    // survives in the structure constants
    let top = uq.cartan().positive_roots.iter().position(|r| *r == uq.cartan().highest_root()).expect("highest root");
    let order = std::iter::once(top).chain((0..inv.len()).filter(|&k| k != top));
    for x in order.map(|k| &inv[k]) {
        if x.sqrt().is_none() && !radicands.iter().any(|r| covers(r, x)) {
            if radicands.len() == 2 {
                return Err(BuildError::Radical { radicand: x.to_string() });
            }
            radicands.push(x.clone());
        }
    }
    let context = Arc::new(match radicands.first() {
        Some(r) => ScalarContext::with_radical(uq.root_order(), r.clone())?,
        None => ScalarContext::new(uq.root_order()),
    });
    let mut s_pos = Vec::new();
    for x in &inv {
        let s = match x.sqrt() {
            Some(r) => Scale::rational(positive_branch(r)?),
            None => {
                let (bit, r) = radicands.iter().enumerate().find_map(|(k, rad)| (x / rad).sqrt().map(|r| (k, r))).expect("covered");
                Scale { rational: positive_branch(r)?, radicals: 1 << bit }
            }
        };
        s_pos.push(s);
    }
    let n = rational.n_positive();
    let rank = rational.rank();
    let mut scales = s_pos.clone();
    for i in 0..rank {
        let k = uq.cartan().positive_roots.iter().position(|r| *r == Weight::simple(i)).expect("simple root");
        scales.push(Scale::rational(inv[k].clone()));
    }
    scales.extend(s_pos);
    debug_assert_eq!(scales.len(), 2 * n + rank);
    for (k, r) in radicands.iter().enumerate() {
        log.push(format!("canonical gauge: {}^2 = {}", ["C", "D"][k], r));
    }
    Ok(QLieBasis { gauge: Gauge::Canonical, scales, radicands, context, c, log, ..rational.clone() })
}

/// The normalization of the published tables: the canonical basis, and for sl2 the basis
/// `X+ = k^{1/2} x+`, `X- = θ~(X+)`, `H = [X+ ∘ X-]`.
pub fn paper_gauge(uq: &Uq, canonical: &QLieBasis) -> Result<QLieBasis, BuildError> {
    if canonical.kind != AlgebraKind::Sl2 {
        return Ok(QLieBasis { gauge: Gauge::Paper, ..canonical.clone() });
    }
    let xp = super::normalize(&canonical.elements[0])?;
    let xm = uq.theta_tilde(&xp)?;
    let h = uq.adjoint(&xp, &xm)?;
    let context = Arc::new(ScalarContext::new(uq.root_order()));
    let mut log = canonical.log.clone();
    log.push("paper gauge: X+ = k^{1/2} x+, X- = θ~(X+), H = [X+ ∘ X-]".into());
    Ok(QLieBasis {
        gauge: Gauge::Paper,
        elements: vec![xp, h, xm],
        scales: vec![Scale::one(); 3],
        radicands: Vec::new(),
        context,
        log,
        ..canonical.clone()
    })
}
