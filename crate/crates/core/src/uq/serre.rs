//! Reduction of E- and F-words modulo the quantum Serre relations.
//!
//! For a fixed weight, all two-sided multiples of the Serre relations span a
//! subspace of the space of words. Row reduction with the words sorted in
//! decreasing lexicographic order expresses every pivot word in terms of the
//! remaining ("standard") words, which form a basis of the quotient.

use std::collections::HashMap;

use crate::linalg::Matrix;
use crate::scalar::Scalar;

use super::cartan::CartanData;
use super::element::Word;
use super::weight::MAX_RANK;

pub type Counts = [usize; MAX_RANK];

#[derive(Debug)]
pub struct SerreTable {
    pub standard: Vec<Word>,
    reductions: HashMap<Word, Vec<(Word, Scalar)>>,
}

impl SerreTable {
    /// Expansion of `w` over standard words.
    pub fn reduce(&self, w: &[u8]) -> &[(Word, Scalar)] {
        self.reductions.get(w).map(Vec::as_slice).expect("word of the table's weight")
    }
}

/// Symmetric q-number `[n]` in the variable `q_i = v^step`.
pub fn q_number(n: i64, step: i32) -> Scalar {
    let mut acc = Scalar::zero();
    for k in 0..n {
        acc = &acc + &Scalar::v_pow(step * (n - 1 - 2 * k) as i32);
    }
    acc
}

pub fn q_binomial(n: i64, k: i64, step: i32) -> Scalar {
    let mut num = Scalar::one();
    let mut den = Scalar::one();
    for t in 0..k {
        num = &num * &q_number(n - t, step);
        den = &den * &q_number(t + 1, step);
    }
    &num / &den
}

pub fn words_with_counts(counts: &Counts) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut left = *counts;
    fn rec(left: &mut Counts, cur: &mut Word, out: &mut Vec<Word>) {
        if left.iter().all(|x| *x == 0) {
            out.push(cur.clone());
            return;
        }
        for l in 0..MAX_RANK {
            if left[l] > 0 {
                left[l] -= 1;
                cur.push(l as u8);
                rec(left, cur, out);
                cur.pop();
                left[l] += 1;
            }
        }
    }
    rec(&mut left, &mut cur, &mut out);
    out
}

/// The Serre relations as (weight counts, linear combination of words).
fn relations(cartan: &CartanData, steps: &[i32]) -> Vec<(Counts, Vec<(Word, Scalar)>)> {
    let mut out = Vec::new();
    for i in 0..cartan.rank {
        for j in 0..cartan.rank {
            if i == j {
                continue;
            }
            let m = 1 - cartan.a(i, j);
            let mut terms = Vec::new();
            for k in 0..=m {
                let mut w = vec![i as u8; k as usize];
                w.push(j as u8);
                w.extend(std::iter::repeat(i as u8).take((m - k) as usize));
                let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                terms.push((w, &sign * &q_binomial(m, k, steps[i])));
            }
            let mut counts = [0; MAX_RANK];
            counts[i] = m as usize;
            counts[j] = 1;
            out.push((counts, terms));
        }
    }
    out
}

fn sub_counts(a: &Counts, b: &Counts) -> Option<Counts> {
    let mut out = [0; MAX_RANK];
    for k in 0..MAX_RANK {
        out[k] = a[k].checked_sub(b[k])?;
    }
    Some(out)
}

/// All count vectors `p <= n` componentwise.
fn sub_vectors(n: &Counts) -> Vec<Counts> {
    let mut out = vec![[0; MAX_RANK]];
    for k in 0..MAX_RANK {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=n[k]).map(move |x| {
                    let mut q = p;
                    q[k] = x;
                    q
                })
            })
            .collect();
    }
    out
}

/// Builds the table for words with the given letter counts. `steps[i]` is
/// the exponent of `v` in `q_i`.
pub fn build(cartan: &CartanData, steps: &[i32], counts: &Counts) -> SerreTable {
    let mut words = words_with_counts(counts);
    words.sort_by(|a, b| b.cmp(a));
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut rows = Vec::new();
    for (rc, rel) in relations(cartan, steps) {
        let Some(rest) = sub_counts(counts, &rc) else { continue };
        for p in sub_vectors(&rest) {
            let s = sub_counts(&rest, &p).expect("p <= rest");
            let us = words_with_counts(&p);
            let ws = words_with_counts(&s);
            for u in &us {
                for w in &ws {
                    let mut row = vec![Scalar::zero(); words.len()];
                    for (mid, c) in &rel {
                        let mut full = u.clone();
                        full.extend_from_slice(mid);
                        full.extend_from_slice(w);
                        row[index[&full]] = &row[index[&full]] + c;
                    }
                    rows.push(row);
                }
            }
        }
    }
    let mut reductions = HashMap::new();
    let mut standard = Vec::new();
    let pivots = if rows.is_empty() {
        Vec::new()
    } else {
        let (r, pivots) = Matrix::from_rows(rows).expect("rectangular").rref();
        let is_pivot: Vec<bool> = (0..words.len()).map(|c| pivots.contains(&c)).collect();
        for (row, &p) in pivots.iter().enumerate() {
            let expansion = (0..words.len())
                .filter(|&c| !is_pivot[c] && !r.get(row, c).is_zero())
                .map(|c| (words[c].clone(), -r.get(row, c)))
                .collect();
            reductions.insert(words[p].clone(), expansion);
        }
        pivots
    };
    for (c, w) in words.iter().enumerate() {
        if !pivots.contains(&c) {
            standard.push(w.clone());
            reductions.insert(w.clone(), vec![(w.clone(), Scalar::one())]);
        }
    }
    standard.sort();
    SerreTable { standard, reductions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::cartan::AlgebraKind;

    #[test]
    fn quantum_numbers() {
        // [2]_q = q + q^-1, [3 choose 1]_q = q^2 + 1 + q^-2
        assert_eq!(q_number(2, 1), &Scalar::v_pow(1) + &Scalar::v_pow(-1));
        let b = q_binomial(3, 1, 1);
        assert_eq!(b, &(&Scalar::v_pow(2) + &Scalar::one()) + &Scalar::v_pow(-2));
        assert_eq!(q_binomial(3, 0, 1), Scalar::one());
    }

    /// Brute force: the quotient dimension equals the number of ways to
    /// write the weight as a sum of positive roots.
    fn kostant(cartan: &CartanData, counts: &Counts) -> usize {
        fn rec(roots: &[[usize; 2]], from: usize, left: [usize; 2]) -> usize {
            if left == [0, 0] {
                return 1;
            }
            let mut n = 0;
            for k in from..roots.len() {
                let r = roots[k];
                if r[0] <= left[0] && r[1] <= left[1] {
                    n += rec(roots, k, [left[0] - r[0], left[1] - r[1]]);
                }
            }
            n
        }
        let roots: Vec<[usize; 2]> = cartan
            .positive_roots
            .iter()
            .map(|r| {
                let c = r.as_ints().unwrap();
                [c[0] as usize, c[1] as usize]
            })
            .collect();
        rec(&roots, 0, *counts)
    }

    #[test]
    fn quotient_dimensions_match_partition_counts() {
        for (kind, steps) in [(AlgebraKind::A2, vec![6, 6]), (AlgebraKind::C2, vec![2, 4])] {
            let cartan = CartanData::new(kind);
            for a in 0..4 {
                for b in 0..3 {
                    let t = build(&cartan, &steps, &[a, b]);
                    assert_eq!(t.standard.len(), kostant(&cartan, &[a, b]), "{:?} {:?}", kind, (a, b));
                }
            }
        }
    }

    #[test]
    fn a2_weight_two_one() {
        let cartan = CartanData::new(AlgebraKind::A2);
        let t = build(&cartan, &[1, 1], &[2, 1]);
        assert_eq!(t.standard.len(), 2);
        // the greatest word is eliminated
        assert!(!t.standard.contains(&vec![1, 0, 0]));
    }
}
