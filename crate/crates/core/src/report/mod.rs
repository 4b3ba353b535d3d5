//! Structure constants of a constructed basis, the relation suite, the
//! classical oracle and the golden tables.

pub mod classical;
pub mod golden;
mod relations;

pub use relations::{
    is_normalized, lattice_check, root_space_form, symmetric_root, tau_signs, verify_relations, Check, RootSpaceForm, Status, RELATION_IDS,
};

use std::sync::Arc;

use crate::builder::Gauge;
use crate::builder::{BuildError, QLieBasis};
use crate::linalg::Matrix;
use crate::qforms::AdjointRep;
use crate::scalar::{RadScalar, Scalar, ScalarContext};
use crate::uq::{AlgebraKind, CartanData, Element, Uq, Weight};

/// Brackets and Killing form on the bare elements of a basis (scales not
/// applied).
#[derive(Clone, Debug)]
pub struct RawTables {
    /// `brackets[a][b]` = coordinates of `[x_a ∘ x_b]`.
    pub brackets: Vec<Vec<Vec<Scalar>>>,
    pub gram: Matrix,
}

pub fn raw_tables(uq: &Uq, rep: &AdjointRep) -> Result<RawTables, BuildError> {
    let elements = rep.elements();
    // rows in parallel, merged by index
    let rows: Vec<Result<Vec<Vec<Scalar>>, BuildError>> = std::thread::scope(|s| {
        let handles: Vec<_> =
            elements.iter().map(|a| s.spawn(move || elements.iter().map(|b| Ok(rep.coordinates(&uq.adjoint(a, b)?)?)).collect())).collect();
        handles.into_iter().map(|h| h.join().expect("bracket worker panicked")).collect()
    });
    let brackets = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(RawTables { brackets, gram: rep.gram(uq)? })
}

/// The full bracket table and Killing form of a basis, in its gauge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub kind: AlgebraKind,
    pub gauge: Gauge,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    pub context: Arc<ScalarContext>,
    /// `brackets[a][b][c]`: coefficient of basis vector `c` in `[b_a ∘ b_b]`.
    pub brackets: Vec<Vec<Vec<RadScalar>>>,
    /// `killing[a][b] = B(b_a, b_b)`.
    pub killing: Vec<Vec<RadScalar>>,
}

impl StructureConstants {
    /// Applies the basis scales: `[s_a x_a ∘ s_b x_b] = s_a s_b / s_c Γ_ab^c (s_c x_c)`
    /// and `B(s_a x_a, s_b x_b) = qconj(s_a) s_b B(x_a, x_b)` (all scales
    /// are q-conjugation invariant).
    pub fn from_raw(basis: &QLieBasis, raw: &RawTables) -> Result<Self, BuildError> {
        let n = basis.dim();
        if let Some(k) = basis.scales.iter().position(|s| !s.is_palindromic()) {
            return Err(BuildError::NotInvariant(format!("scale of {} is not q-conjugation invariant", basis.labels[k])));
        }
        let zero = RadScalar::rational(Scalar::zero(), &basis.context);
        let mut brackets = vec![vec![vec![zero.clone(); n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let x = &raw.brackets[a][b][c];
                    if !x.is_zero() {
                        brackets[a][b][c] = basis.scale_product(&[(a, 1), (b, 1), (c, -1)])?.scale(x);
                    }
                }
            }
        }
        let mut killing = vec![vec![zero.clone(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let x = raw.gram.get(a, b);
                if !x.is_zero() {
                    killing[a][b] = basis.scale_product(&[(a, 1), (b, 1)])?.scale(x);
                }
            }
        }
        Ok(StructureConstants {
            kind: basis.kind,
            gauge: basis.gauge,
            labels: basis.labels.clone(),
            weights: basis.weights.clone(),
            context: basis.context.clone(),
            brackets,
            killing,
        })
    }

    pub fn cartan(&self) -> CartanData {
        CartanData::new(self.kind)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.weights.iter().filter(|w| w.is_zero()).count()
    }

    pub fn n_positive(&self) -> usize {
        (self.dim() - self.rank()) / 2
    }

    pub fn h(&self, i: usize) -> usize {
        self.n_positive() + i
    }

    /// Index of `X_root`.
    pub fn x(&self, root: &Weight) -> usize {
        self.weights.iter().position(|w| w == root && !w.is_zero()).expect("root of the algebra")
    }

    pub fn zero(&self) -> RadScalar {
        RadScalar::rational(Scalar::zero(), &self.context)
    }

    pub fn scalar(&self, x: Scalar) -> RadScalar {
        RadScalar::rational(x, &self.context)
    }

    /// `[H_i ∘ X_a] = l_a(H_i) X_a`.
    pub fn l(&self, root: &Weight, i: usize) -> RadScalar {
        let a = self.x(root);
        self.brackets[self.h(i)][a][a].clone()
    }

    /// `[X_a ∘ H_i] = -r_a(H_i) X_a`.
    pub fn r(&self, root: &Weight, i: usize) -> RadScalar {
        let a = self.x(root);
        -&self.brackets[a][self.h(i)][a]
    }

    /// `[X_a ∘ X_b] = N_{a,b} X_{a+b}`; zero when `a + b` is not a root.
    pub fn n(&self, a: &Weight, b: &Weight) -> RadScalar {
        let s = *a + *b;
        if !self.cartan().is_root(&s) {
            return self.zero();
        }
        self.brackets[self.x(a)][self.x(b)][self.x(&s)].clone()
    }

    /// `[H_i ∘ H_j] = f_ij^k H_k`.
    pub fn f(&self, i: usize, j: usize, k: usize) -> RadScalar {
        self.brackets[self.h(i)][self.h(j)][self.h(k)].clone()
    }

    /// Coefficients of `H_a = -[X_a ∘ X_{-a}]` over `H_i`.
    pub fn h_alpha(&self, root: &Weight) -> Vec<RadScalar> {
        let (a, b) = (self.x(root), self.x(&-*root));
        (0..self.rank()).map(|i| -&self.brackets[a][b][self.h(i)]).collect()
    }

    /// `B_ij = B(H_i, H_j)`.
    pub fn b(&self, i: usize, j: usize) -> RadScalar {
        self.killing[self.h(i)][self.h(j)].clone()
    }

    pub fn b_matrix(&self) -> Vec<Vec<RadScalar>> {
        (0..self.rank()).map(|i| (0..self.rank()).map(|j| self.b(i, j)).collect()).collect()
    }

    /// `B(sum x_i H_i, sum y_j H_j)`, q-linear in the first argument.
    pub fn killing_h(&self, x: &[RadScalar], y: &[RadScalar]) -> RadScalar {
        let mut acc = self.zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                acc = &acc + &(&(&xi.qconj() * yj) * &self.b(i, j));
            }
        }
        acc
    }
}

/// Data that needs the elements themselves, in the gauge of the basis.
#[derive(Clone, Debug)]
pub struct ModuleData {
    /// `theta[a]` = coordinates of `θ~(b_a)`.
    pub theta: Vec<Vec<RadScalar>>,
    /// `s_tilde[a]` = coordinates of `S~(b_a)`.
    pub s_tilde: Vec<Vec<RadScalar>>,
    /// `tau[a]` = coordinates of `tau(b_a)`.
    pub tau: Vec<Vec<RadScalar>>,
    /// `kss[a][b] = B(S~(b_a), S(qconj(b_b)))`.
    pub kss: Vec<Vec<RadScalar>>,
    /// Failures of `B(a, c ∘ b) = B(S~(c) ∘ a, b)` for generators `c`.
    pub adkill_failures: Vec<String>,
    pub adkill_count: usize,
}

fn scaled_coords(basis: &QLieBasis, rep: &AdjointRep, a: usize, x: &Element) -> Result<Vec<RadScalar>, BuildError> {
    // for an antilinear map phi with phi(x_a) = sum T_c x_c:
    // phi(s_a x_a) = s_a sum T_c / s_c (s_c x_c)
    let coords = rep.coordinates(x)?;
    let mut out = Vec::with_capacity(coords.len());
    for (c, t) in coords.iter().enumerate() {
        out.push(if t.is_zero() {
            RadScalar::rational(Scalar::zero(), &basis.context)
        } else {
            basis.scale_product(&[(a, 1), (c, -1)])?.scale(t)
        });
    }
    Ok(out)
}

fn trace_product(a: &Matrix, b: &Matrix) -> Scalar {
    let mut acc = Scalar::zero();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if !x.is_zero() {
                let y = b.get(j, i);
                if !y.is_zero() {
                    acc = &acc + &(x * y);
                }
            }
        }
    }
    acc
}

pub fn module_data(uq: &Uq, basis: &QLieBasis, rep: &AdjointRep, raw: &RawTables) -> Result<ModuleData, BuildError> {
    let n = basis.dim();
    let mut theta = Vec::new();
    let mut s_tilde = Vec::new();
    let mut tau = Vec::new();
    for (a, x) in basis.elements.iter().enumerate() {
        theta.push(scaled_coords(basis, rep, a, &uq.theta_tilde(x)?)?);
        s_tilde.push(scaled_coords(basis, rep, a, &uq.s_tilde(x)?)?);
        tau.push(scaled_coords(basis, rep, a, &uq.tau(x)?)?);
    }
    // B(S~(x_a), S(~x_b)) = -Tr(pi(x_a) pi(S(~x_b)) pi(u))
    let pu = rep.u_matrix(uq)?;
    let left: Vec<Matrix> = basis.elements.iter().map(|x| rep.matrix(uq, x)).collect::<Result<_, _>>()?;
    let mut right = Vec::new();
    for x in &basis.elements {
        right.push(rep.matrix(uq, &uq.antipode(&uq.qconj_u(x))?)?.mul(&pu)?);
    }
    let zero = RadScalar::rational(Scalar::zero(), &basis.context);
    let mut kss = vec![vec![zero; n]; n];
    for a in 0..n {
        for b in 0..n {
            let x = -trace_product(&left[a], &right[b]);
            if !x.is_zero() {
                kss[a][b] = basis.scale_product(&[(a, 1), (b, 1)])?.scale(&x);
            }
        }
    }
    // ad-invariance on the bare elements, generators e_i, f_i, k_i
    let mut gens = Vec::new();
    for i in 0..uq.cartan().rank {
        gens.push((format!("e{}", i + 1), uq.e(i)));
        gens.push((format!("f{}", i + 1), uq.f(i)));
        gens.push((format!("k{}", i + 1), uq.k(Weight::simple(i))));
    }
    let mut adkill_failures = Vec::new();
    let mut adkill_count = 0;
    let conj_form = |x: &[Scalar], y: &[Scalar]| {
        let mut acc = Scalar::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc = &acc + &(&(&xi.qconj() * yj) * raw.gram.get(i, j));
                }
            }
        }
        acc
    };
    for (name, c) in &gens {
        let pc = rep.matrix(uq, c)?;
        let psc = rep.matrix(uq, &uq.s_tilde(c)?)?;
        for a in 0..n {
            for b in 0..n {
                let ea = unit(n, a);
                let eb = unit(n, b);
                let lhs = conj_form(&ea, &pc.mul_vec(&eb)?);
                let rhs = conj_form(&psc.mul_vec(&ea)?, &eb);
                adkill_count += 1;
                if lhs != rhs {
                    adkill_failures.push(format!(
                        "B({}, {}∘{}) = {} but B(S~({})∘{}, {}) = {}",
                        basis.labels[a], name, basis.labels[b], lhs, name, basis.labels[a], basis.labels[b], rhs
                    ));
                }
            }
        }
    }
    Ok(ModuleData { theta, s_tilde, tau, kss, adkill_failures, adkill_count })
}

fn unit(n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[k] = Scalar::one();
    v
}
