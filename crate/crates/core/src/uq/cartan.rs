use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::weight::{Weight, MAX_RANK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Sl2,
    A2,
    C2,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 3] = [AlgebraKind::Sl2, AlgebraKind::A2, AlgebraKind::C2];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Sl2 => "sl2",
            AlgebraKind::A2 => "a2",
            AlgebraKind::C2 => "c2",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "sl2" => Ok(AlgebraKind::Sl2),
            "a2" | "sl3" => Ok(AlgebraKind::A2),
            "c2" | "sp4" | "so5" => Ok(AlgebraKind::C2),
            _ => Err(format!("unknown algebra `{}` (expected sl2, a2 or c2)", s)),
        }
    }
}

/// Cartan data of a rank <= 2 simple Lie algebra.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub kind: AlgebraKind,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    /// Positive roots in the convex order of the reduced word for `w0`.
    pub positive_roots: Vec<Weight>,
    /// Diagram automorphism as a permutation of the nodes.
    pub tau: Vec<usize>,
    /// Factor between the pairing `(a_i, a_j) = d_i a_ij` and the exponents
    /// of `u = q^{2 h_rho}`. Resolved to 1.
    pub pairing_scale: Rational64,
    pub default_root_order: u32,
}

impl CartanData {
    pub fn new(kind: AlgebraKind) -> Self {
        let w = Weight::from_ints;
        match kind {
            AlgebraKind::Sl2 => CartanData {
                kind,
                rank: 1,
                cartan_matrix: vec![vec![2]],
                symmetrizers: vec![1],
                positive_roots: vec![w(&[1])],
                tau: vec![0],
                pairing_scale: Rational64::from_integer(1),
                default_root_order: 2,
            },
            AlgebraKind::A2 => CartanData {
                kind,
                rank: 2,
                cartan_matrix: vec![vec![2, -1], vec![-1, 2]],
                symmetrizers: vec![1, 1],
                positive_roots: vec![w(&[1, 0]), w(&[1, 1]), w(&[0, 1])],
                tau: vec![1, 0],
                pairing_scale: Rational64::from_integer(1),
                default_root_order: 6,
            },
            AlgebraKind::C2 => CartanData {
                kind,
                rank: 2,
                cartan_matrix: vec![vec![2, -2], vec![-1, 2]],
                symmetrizers: vec![1, 2],
                // w0 = s1 s2 s1 s2
                positive_roots: vec![w(&[1, 0]), w(&[2, 1]), w(&[1, 1]), w(&[0, 1])],
                tau: vec![0, 1],
                pairing_scale: Rational64::from_integer(1),
                default_root_order: 2,
            },
        }
    }

    pub fn dim(&self) -> usize {
        2 * self.positive_roots.len() + self.rank
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan_matrix[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizers[i]
    }

    /// The symmetric form with `(a_i, a_j) = d_i a_ij`.
    pub fn pairing(&self, x: &Weight, y: &Weight) -> Rational64 {
        let mut acc = Rational64::from_integer(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                let b = self.d(i) * self.a(i, j);
                acc += x.0[i] * y.0[j] * Rational64::from_integer(b);
            }
        }
        acc
    }

    pub fn rho(&self) -> Weight {
        let sum = self.positive_roots.iter().fold(Weight::zero(), |a, b| a + *b);
        sum.scale(Rational64::new(1, 2))
    }

    pub fn highest_root(&self) -> Weight {
        *self.positive_roots.iter().max_by_key(|r| r.height()).expect("at least one root")
    }

    /// All roots: positive roots in convex order, then their negatives.
    pub fn roots(&self) -> Vec<Weight> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| -*r));
        out
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_roots.iter().any(|r| r == w || -*r == *w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w)
    }

    /// Coordinates `(lambda, a_j^vee)` in the basis of fundamental weights.
    pub fn fundamental_coords(&self, w: &Weight) -> [Rational64; MAX_RANK] {
        let mut out = [Rational64::from_integer(0); MAX_RANK];
        for j in 0..self.rank {
            out[j] = self.pairing(w, &Weight::simple(j)) / Rational64::from_integer(self.d(j));
        }
        out
    }

    /// The weight with the given fundamental-weight coordinates.
    pub fn from_fundamental(&self, m: &[Rational64]) -> Weight {
        // A lambda = m with A the Cartan matrix (row j: sum_i a_ji lambda_i)
        let r = |x: i64| Rational64::from_integer(x);
        match self.rank {
            1 => Weight([m[0] / r(2), r(0)]),
            _ => {
                let (a, b, c, d) = (r(self.a(0, 0)), r(self.a(0, 1)), r(self.a(1, 0)), r(self.a(1, 1)));
                let det = a * d - b * c;
                Weight([(d * m[0] - b * m[1]) / det, (a * m[1] - c * m[0]) / det])
            }
        }
    }

    pub fn apply_tau(&self, w: &Weight) -> Weight {
        let mut out = Weight::zero();
        for i in 0..self.rank {
            out.0[self.tau[i]] = w.0[i];
        }
        out
    }

    pub fn has_diagram_automorphism(&self) -> bool {
        self.tau.iter().enumerate().any(|(i, t)| i != *t)
    }

    /// Label of a root such as `a1`, `-a1-a2`, `2a1+a2`.
    pub fn root_label(&self, w: &Weight) -> String {
        let c = w.as_ints().expect("roots are integral");
        let sign = if c.iter().any(|x| *x < 0) { "-" } else { "" };
        let mut parts = Vec::new();
        for (i, x) in c.iter().enumerate().take(self.rank) {
            match x.abs() {
                0 => {}
                1 => parts.push(format!("a{}", i + 1)),
                n => parts.push(format!("{}a{}", n, i + 1)),
            }
        }
        let body = parts.join(if sign == "-" { "-" } else { "+" });
        format!("{}{}", sign, body)
    }

    /// Inverse of [`CartanData::root_label`].
    pub fn parse_root_label(&self, s: &str) -> Option<Weight> {
        self.roots().into_iter().find(|r| self.root_label(r) == s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrized_forms() {
        for kind in AlgebraKind::ALL {
            let c = CartanData::new(kind);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    assert_eq!(c.d(i) * c.a(i, j), c.d(j) * c.a(j, i));
                }
            }
        }
    }

    #[test]
    fn root_counts_and_rho() {
        let counts: Vec<usize> = AlgebraKind::ALL.iter().map(|k| CartanData::new(*k).positive_roots.len()).collect();
        assert_eq!(counts, vec![1, 3, 4]);
        let c2 = CartanData::new(AlgebraKind::C2);
        // (rho, a_i) = d_i
        for i in 0..2 {
            assert_eq!(c2.pairing(&c2.rho(), &Weight::simple(i)), Rational64::from_integer(c2.d(i)));
        }
        assert_eq!(c2.highest_root(), Weight::from_ints(&[2, 1]));
    }

    #[test]
    fn fundamental_round_trip() {
        let a2 = CartanData::new(AlgebraKind::A2);
        let w = Weight::from_ratios(&[(1, 3), (-1, 3)]);
        let m = a2.fundamental_coords(&w);
        assert_eq!(m, [Rational64::from_integer(1), Rational64::from_integer(-1)]);
        assert_eq!(a2.from_fundamental(&m), w);
    }

    #[test]
    fn labels() {
        let c2 = CartanData::new(AlgebraKind::C2);
        let w = Weight::from_ints(&[-2, -1]);
        assert_eq!(c2.root_label(&w), "-2a1-a2");
        assert_eq!(c2.parse_root_label("-2a1-a2"), Some(w));
        assert_eq!(c2.root_label(&Weight::from_ints(&[1, 1])), "a1+a2");
    }
}
