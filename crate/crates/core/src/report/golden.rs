//! Published closed forms for sl2, a2 and c2, compared by exact equality.
//! Root vectors are fixed only up to a sign per `±a` pair, so the
//! `N` tables are matched up to such a sign assignment.

use crate::scalar::{q_pow, RadScalar, Scalar, ScalarError};
use crate::uq::{AlgebraKind, Weight};

use super::relations::{lattice_check, symmetric_root};
use super::{Check, Status, StructureConstants};

/// Laurent polynomial in `q^{1/2}`: `terms` are `(exponent of q^{1/2}, coefficient)`.
pub(crate) fn qpoly(d: u32, terms: &[(i64, i64)]) -> Result<Scalar, ScalarError> {
    let mut acc = Scalar::zero();
    for &(e, c) in terms {
        acc = &acc + &(&q_pow(e, 2, d)? * &Scalar::from_int(c));
    }
    Ok(acc)
}

/// The normalization square `C^2` of the published tables.
pub fn radical_square(kind: AlgebraKind, d: u32) -> Result<Option<Scalar>, ScalarError> {
    let p = |t: &[(i64, i64)]| qpoly(d, t);
    Ok(match kind {
        AlgebraKind::Sl2 => None,
        AlgebraKind::A2 => {
            let x = &(&(&Scalar::from_int(2) * &p(&[(-1, 1), (1, 1)])?) * &p(&[(-3, 1), (3, 1)])?)
                * &p(&[(-6, 1), (-2, 1), (0, -1), (2, 1), (6, 1)])?;
            Some(x.inv()?)
        }
        AlgebraKind::C2 => {
            let a = p(&[(-2, 1), (2, 1)])?;
            let factors = [
                &a * &a,
                p(&[(-4, 1), (4, 1)])?,
                p(&[(-2, 1), (0, 1), (2, 1)])?,
                p(&[(-2, 1), (0, -1), (2, 1)])?,
                p(&[(-4, 1), (0, -1), (4, 1)])?,
                p(&[(-8, 1), (-4, -1), (0, 1), (4, -1), (8, 1)])?,
            ];
            Some(factors.iter().fold(Scalar::one(), |acc, x| &acc * x).inv()?)
        }
    })
}

/// One published value next to the computed one.
struct Entry {
    name: String,
    expected: RadScalar,
    actual: RadScalar,
}

fn entry(name: impl Into<String>, expected: RadScalar, actual: RadScalar) -> Entry {
    Entry { name: name.into(), expected, actual }
}

fn describe(e: &Entry) -> String {
    let ratio = if e.expected.is_zero() || e.actual.is_zero() {
        String::new()
    } else {
        match e.actual.try_div(&e.expected) {
            Ok(r) => format!(" (ratio {})", r),
            Err(_) => String::new(),
        }
    };
    format!("{}: computed {}, published {}{}", e.name, e.actual, e.expected, ratio)
}

fn table(id: &str, entries: &[Entry]) -> Check {
    let bad: Vec<&Entry> = entries.iter().filter(|e| e.expected != e.actual).collect();
    if bad.is_empty() {
        Check { relation_id: id.into(), status: Status::Pass, mismatch: None }
    } else {
        let ratios: Vec<Option<RadScalar>> =
            bad.iter().map(|e| if e.expected.is_zero() { None } else { e.actual.try_div(&e.expected).ok() }).collect();
        let uniform = match ratios.first() {
            Some(Some(r)) if ratios.iter().all(|x| x.as_ref() == Some(r)) => format!("; every differing entry is off by the factor {}", r),
            _ => String::new(),
        };
        Check {
            relation_id: id.into(),
            status: Status::Fail,
            mismatch: Some(format!("{} of {} differ{}; first: {}", bad.len(), entries.len(), uniform, describe(bad[0]))),
        }
    }
}

/// Shorthands for building published values in the context of `sc`.
struct Build<'a> {
    sc: &'a StructureConstants,
    d: u32,
}

impl Build<'_> {
    /// `sum c q^{e/2}`.
    fn p(&self, terms: &[(i64, i64)]) -> Scalar {
        qpoly(self.d, terms).expect("D is a multiple of 2")
    }

    fn r(&self, x: Scalar) -> RadScalar {
        self.sc.scalar(x)
    }

    fn c(&self) -> Option<RadScalar> {
        RadScalar::radical(&self.sc.context).ok().filter(|_| self.sc.context.radical_square().is_some())
    }
}

fn prod(xs: &[&Scalar]) -> Scalar {
    xs.iter().fold(Scalar::one(), |acc, x| &acc * x)
}

/// Published tables for the algebra of `sc`, one check per table.
pub fn golden_checks(sc: &StructureConstants) -> Vec<Check> {
    match sc.kind {
        AlgebraKind::Sl2 => vec![sl2_table(sc)],
        AlgebraKind::A2 => a2_tables(sc),
        AlgebraKind::C2 => c2_tables(sc),
    }
}

fn radical_check(sc: &StructureConstants) -> Check {
    let published = radical_square(sc.kind, sc.context.d()).ok().flatten();
    let ok = published.is_some() && sc.context.radical_square() == published.as_ref();
    Check {
        relation_id: "golden-radical".into(),
        status: if ok { Status::Pass } else { Status::Fail },
        mismatch: (!ok).then(|| {
            format!(
                "C^2 = {}, published {}",
                sc.context.radical_square().map(|x| x.to_string()).unwrap_or_else(|| "none".into()),
                published.map(|x| x.to_string()).unwrap_or_else(|| "none".into())
            )
        }),
    }
}

/// The full sl2 table in the basis `X+, H, X-`, every other component zero.
fn sl2_table(sc: &StructureConstants) -> Check {
    let b = Build { sc, d: sc.context.d() };
    let one = b.p(&[(0, 1)]);
    let (xp, h, xm) = (0usize, 1usize, 2usize);
    let published: Vec<((usize, usize, usize), Scalar)> = vec![
        ((h, xp, xp), b.p(&[(0, 1), (-4, 1)])),
        ((xp, h, xp), b.p(&[(0, -1), (4, -1)])),
        ((h, xm, xm), b.p(&[(0, -1), (4, -1)])),
        ((xm, h, xm), b.p(&[(0, 1), (-4, 1)])),
        ((xp, xm, h), one.clone()),
        ((xm, xp, h), -&one),
        ((h, h, h), b.p(&[(-4, 1), (4, -1)])),
    ];
    let mut entries = Vec::new();
    for a in 0..3 {
        for c in 0..3 {
            for k in 0..3 {
                let expected = published.iter().find(|(key, _)| *key == (a, c, k)).map(|(_, v)| v.clone()).unwrap_or_else(Scalar::zero);
                entries.push(entry(
                    format!("[{}∘{}] at {}", sc.labels[a], sc.labels[c], sc.labels[k]),
                    b.r(expected),
                    sc.brackets[a][c][k].clone(),
                ));
            }
        }
    }
    table("golden-table", &entries)
}

/// Matches published `N_{a,b}` up to `X_{±a} -> e_a X_{±a}`, `e_a = ±1`.
fn n_table(id: &str, sc: &StructureConstants, published: &[((Weight, Weight), RadScalar)]) -> Check {
    let cartan = sc.cartan();
    let pos = cartan.positive_roots.clone();
    let sign_of = |mask: u32, w: &Weight| -> bool {
        let k = pos.iter().position(|r| r == w || -*r == *w).expect("root");
        mask & (1 << k) != 0
    };
    let mut best: Option<(usize, Vec<Entry>, u32)> = None;
    for mask in 0..(1u32 << pos.len()) {
        let entries: Vec<Entry> = published
            .iter()
            .map(|((a, b), v)| {
                let s = *a + *b;
                let flips = [a, b, &s].iter().filter(|w| cartan.is_root(w) && sign_of(mask, w)).count();
                let actual = if flips % 2 == 1 { -&sc.n(a, b) } else { sc.n(a, b) };
                entry(format!("N_{},{}", cartan.root_label(a), cartan.root_label(b)), v.clone(), actual)
            })
            .collect();
        let bad = entries.iter().filter(|e| e.expected != e.actual).count();
        if best.as_ref().map_or(true, |(b, _, _)| bad < *b) {
            best = Some((bad, entries, mask));
        }
    }
    let (bad, entries, mask) = best.expect("at least one sign assignment");
    let mut check = table(id, &entries);
    if bad == 0 {
        let flipped: Vec<String> =
            pos.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, r)| cartan.root_label(r)).collect();
        if !flipped.is_empty() {
            check.mismatch = Some(format!("after flipping the sign of X_±{}", flipped.join(", X_±")));
        }
    } else if let Some(m) = &mut check.mismatch {
        *m = format!("best sign assignment: {}", m);
    }
    check
}

fn a2_tables(sc: &StructureConstants) -> Vec<Check> {
    let b = Build { sc, d: sc.context.d() };
    let mut out = vec![radical_check(sc)];
    let Some(c) = b.c() else {
        return out;
    };
    let c2 = radical_square(AlgebraKind::A2, b.d).ok().flatten().expect("published radical");
    let half = Scalar::from_ratio(1, 2);
    let s1 = b.p(&[(-1, 1), (1, 1)]);
    let s3 = b.p(&[(-3, 1), (3, 1)]);
    let (a1, a2) = (Weight::simple(0), Weight::simple(1));
    let a12 = a1 + a2;

    // left roots
    let l = prod(&[&c2, &s1, &s3, &s3, &half]);
    let u = &l * &b.p(&[(-3, 1), (-1, 1)]);
    let w = -&(&l * &b.p(&[(1, 1)]));
    let top = &l * &b.p(&[(-3, 1)]);
    let lefts = [(a1, [u.clone(), w.clone()]), (a2, [w, u]), (a12, [top.clone(), top])];
    let entries: Vec<Entry> = lefts
        .iter()
        .flat_map(|(r, v)| (0..2).map(move |i| (r, i, v[i].clone())))
        .map(|(r, i, v)| entry(format!("l_{}(H{})", sc.cartan().root_label(r), i + 1), b.r(v), sc.l(r, i)))
        .collect();
    out.push(table("golden-left-roots", &entries));

    // symmetric roots
    let lh = &l * &half;
    let big = &lh * &b.p(&[(-3, 1), (-1, 1), (1, 1), (3, 1)]);
    let small = -&(&lh * &s1);
    let top = &lh * &s3;
    let syms = [(a1, [big.clone(), small.clone()]), (a2, [small, big]), (a12, [top.clone(), top])];
    let mut entries = Vec::new();
    for (r, v) in &syms {
        let got = symmetric_root(sc, r);
        for i in 0..2 {
            entries.push(entry(format!("a_{}(H{})", sc.cartan().root_label(r), i + 1), b.r(v[i].clone()), got[i].clone()));
        }
    }
    out.push(table("golden-sym-roots", &entries));
    out.push(Check { relation_id: "golden-lattice".into(), ..lattice_check(sc) });

    // Killing form on the Cartan part
    let bb = prod(&[&s1, &s1, &s3, &s3, &c2, &Scalar::from_ratio(1, 4)]);
    let diag = &bb * &b.p(&[(-2, 1), (2, 1)]);
    let published = [[diag.clone(), -&bb], [-&bb, diag]];
    let mut entries = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            entries.push(entry(format!("B_{}{}", i + 1, j + 1), b.r(published[i][j].clone()), sc.b(i, j)));
        }
    }
    out.push(table("golden-killing", &entries));

    // N: one value and twelve relations
    let n0 = &c * &b.r(s3.clone());
    let q = |e: i64| b.r(b.p(&[(2 * e, 1)]));
    let rel: Vec<((Weight, Weight), RadScalar)> = vec![
        ((a1, a2), q(0)),
        ((a1, -a12), -&q(1)),
        ((a2, a1), -&q(0)),
        ((a2, -a12), q(1)),
        ((a12, -a1), q(1)),
        ((a12, -a2), -&q(1)),
        ((-a1, -a2), q(0)),
        ((-a1, a12), -&q(-1)),
        ((-a2, a12), q(-1)),
        ((-a2, -a1), -&q(0)),
        ((-a12, a1), q(-1)),
        ((-a12, a2), -&q(-1)),
    ];
    let published: Vec<((Weight, Weight), RadScalar)> = rel.into_iter().map(|(k, f)| (k, &f * &n0)).collect();
    out.push(n_table("golden-n-table", sc, &published));

    // f
    let f = prod(&[&b.p(&[(1, 1), (-1, -1)]), &s1, &s1, &s3, &c2, &half]);
    let f11 = -&(&f * &b.p(&[(-4, 1), (-2, 1), (0, 1), (2, 1), (4, 1)]));
    let f22_1 = -&(&f * &b.p(&[(-2, 1), (2, 1)]));
    let published = [
        ((0, 0, 0), f11.clone()),
        ((1, 1, 1), f11),
        ((1, 1, 0), f22_1.clone()),
        ((0, 0, 1), f22_1),
        ((0, 1, 0), f.clone()),
        ((1, 0, 0), f.clone()),
        ((0, 1, 1), f.clone()),
        ((1, 0, 1), f),
    ];
    let entries: Vec<Entry> =
        published.iter().map(|((i, j, k), v)| entry(format!("f_{}{}^{}", i + 1, j + 1, k + 1), b.r(v.clone()), sc.f(*i, *j, *k))).collect();
    out.push(table("golden-f-table", &entries));

    // H_a over H_1, H_2
    let a = Scalar::from_int(2) * s3.inv().expect("nonzero");
    let x = b.p(&[(1, -1), (3, 1)]);
    let y = b.p(&[(-1, 1), (-3, -1)]);
    let hs = [
        (a1, [-&b.p(&[(-1, 1)]), x.clone()]),
        (a2, [x, -&b.p(&[(-1, 1)])]),
        (a12, [-&b.p(&[(1, 1)]), -&b.p(&[(1, 1)])]),
        (-a1, [b.p(&[(1, 1)]), y.clone()]),
        (-a2, [y, b.p(&[(1, 1)])]),
        (-a12, [b.p(&[(-1, 1)]), b.p(&[(-1, 1)])]),
    ];
    let mut entries = Vec::new();
    for (r, v) in &hs {
        let got = sc.h_alpha(r);
        for i in 0..2 {
            entries.push(entry(format!("H_{} at H{}", sc.cartan().root_label(r), i + 1), b.r(&a * &v[i]), got[i].clone()));
        }
    }
    out.push(table("golden-h-alpha", &entries));
    out
}

fn c2_tables(sc: &StructureConstants) -> Vec<Check> {
    let b = Build { sc, d: sc.context.d() };
    let mut out = vec![radical_check(sc)];
    if b.c().is_none() {
        return out;
    }
    let c2 = radical_square(AlgebraKind::C2, b.d).ok().flatten().expect("published radical");
    let half = Scalar::from_ratio(1, 2);
    // q^n is p(&[(2n, 1)])
    let q = |n: i64| b.p(&[(2 * n, 1)]);
    let s1 = b.p(&[(-2, 1), (2, 1)]); // q^-1 + q
    let m1 = b.p(&[(-2, 1), (2, -1)]); // q^-1 - q
    let t = b.p(&[(-4, 1), (0, -1), (4, 1)]); // q^-2 - 1 + q^2
    let s2 = b.p(&[(-4, 1), (4, 1)]); // q^-2 + q^2
    let (a1, a2) = (Weight::simple(0), Weight::simple(1));
    let (a12, a112) = (a1 + a2, a1 * 2 + a2);
    let label = |r: &Weight| sc.cartan().root_label(r);

    // left roots
    let l = prod(&[&s1, &s1, &s1, &t, &t, &c2, &half]);
    let lefts = [
        (a1, [prod(&[&l, &t, &t, &q(-1)]), -&(&l * &q(3))]),
        (a2, [-&prod(&[&l, &t, &q(-1)]), prod(&[&l, &s1, &q(-2)])]),
        (a12, [prod(&[&l, &m1, &t, &q(-2)]), &l * &q(-1)]),
        (a112, [prod(&[&l, &t, &q(-3)]), Scalar::zero()]),
    ];
    let mut entries = Vec::new();
    for (r, v) in &lefts {
        for i in 0..2 {
            entries.push(entry(format!("l_{}(H{})", label(r), i + 1), b.r(v[i].clone()), sc.l(r, i)));
        }
    }
    out.push(table("golden-left-roots", &entries));

    // symmetric roots
    let a = prod(&[&s1, &c2, &half]);
    let syms = [
        (a1, [prod(&[&a, &t, &t]), -&(&a * &t)]),
        (a2, [-&(&a * &t), &a * &s2]),
        (a12, [prod(&[&a, &m1, &m1, &t]), a.clone()]),
        (a112, [prod(&[&a, &t, &t]), Scalar::zero()]),
    ];
    let mut entries = Vec::new();
    for (r, v) in &syms {
        let got = symmetric_root(sc, r);
        for i in 0..2 {
            entries.push(entry(format!("a_{}(H{})", label(r), i + 1), b.r(v[i].clone()), got[i].clone()));
        }
    }
    out.push(table("golden-sym-roots", &entries));
    out.push(Check { relation_id: "golden-lattice".into(), ..lattice_check(sc) });

    // Killing form on the Cartan part
    let bb = prod(&[&s1, &s1, &s1, &s1, &t, &t, &t, &c2, &Scalar::from_ratio(1, 4)]);
    let published = [[&bb * &t, -&bb], [-&bb, prod(&[&bb, &s2, &t.inv().expect("nonzero")])]];
    let mut entries = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            entries.push(entry(format!("B_{}{}", i + 1, j + 1), b.r(published[i][j].clone()), sc.b(i, j)));
        }
    }
    out.push(table("golden-killing", &entries));

    // n-table: rows a, columns b, order 2a1+a2, a1+a2, a2, a1, then negatives
    let order = [a112, a12, a2, a1, -a1, -a2, -a12, -a112];
    let z = || Scalar::zero();
    let rows: [[Scalar; 8]; 8] = [
        [z(), z(), z(), z(), -&q(2), z(), q(2), z()],
        [z(), z(), z(), q(1), q(3), -&q(0), z(), -&q(2)],
        [z(), z(), z(), -&q(2), z(), z(), q(0), z()],
        [z(), -&q(-1), q(-2), z(), z(), z(), -&q(3), q(2)],
        [q(-2), -&q(-3), z(), z(), z(), q(2), -&q(1), z()],
        [z(), q(0), z(), z(), -&q(-2), z(), z(), z()],
        [-&q(-2), z(), -&q(0), q(-3), q(-1), z(), z(), z()],
        [z(), q(-2), z(), -&q(-2), z(), z(), z(), z()],
    ];
    let prefactor = b.r(-&(&s1 * &t));
    let mut published = Vec::new();
    for (i, ra) in order.iter().enumerate() {
        for (j, rb) in order.iter().enumerate() {
            if *ra + *rb == Weight::zero() {
                continue;
            }
            published.push(((*ra, *rb), &prefactor * &b.r(rows[i][j].clone())));
        }
    }
    out.push(n_table("golden-n-table", sc, &published));

    // f, with the prefactor exactly as published
    let f = prod(&[&-&m1, &s1, &s1, &s1, &b.p(&[(-4, 1), (0, -1), (2, 1)]), &half]);
    let f11 = -&prod(&[&f, &t, &b.p(&[(-8, 1), (-4, -1), (0, 3), (4, -1), (8, 1)])]);
    let f22 = -&prod(&[&f, &b.p(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]), &b.p(&[(-4, 1), (-2, 1), (0, 1), (2, 1), (4, 1)])]);
    let f11_2 = -&prod(&[&f, &s2, &t, &t]);
    let f22_1 = -&prod(&[&f, &s2, &t.inv().expect("nonzero")]);
    let f12_2 = prod(&[&f, &s2, &t]);
    let published = [
        ((0, 0, 0), f11),
        ((1, 1, 1), f22),
        ((0, 0, 1), f11_2),
        ((1, 1, 0), f22_1),
        ((0, 1, 1), f12_2.clone()),
        ((1, 0, 1), f12_2),
        ((0, 1, 0), f.clone()),
        ((1, 0, 0), f),
    ];
    let entries: Vec<Entry> =
        published.iter().map(|((i, j, k), v)| entry(format!("f_{}{}^{}", i + 1, j + 1, k + 1), b.r(v.clone()), sc.f(*i, *j, *k))).collect();
    out.push(table("golden-f-table", &entries));

    // H_a over H_1, H_2; negative roots by q-conjugation and sign change
    let d = Scalar::from_int(2) * (&s1 * &t).inv().expect("nonzero");
    let hs = [
        (a1, [b.p(&[(-8, -1), (-4, 1), (0, -2), (4, 1)]), -&prod(&[&m1, &s2, &t, &q(-1)])]),
        (a2, [-&(&m1 * &q(2)), -&(&t * &q(-1))]),
        (a12, [b.p(&[(-4, -1), (0, 1), (4, -2), (8, -1)]), -&t]),
        (a112, [-&(&s2 * &q(1)), -&(&t * &q(1))]),
    ];
    let mut entries = Vec::new();
    for (r, v) in &hs {
        let (got, got_neg) = (sc.h_alpha(r), sc.h_alpha(&-*r));
        for i in 0..2 {
            let x = &d * &v[i];
            entries.push(entry(format!("H_{} at H{}", label(r), i + 1), b.r(x.clone()), got[i].clone()));
            entries.push(entry(format!("H_{} at H{}", label(&-*r), i + 1), b.r(-&x.qconj()), got_neg[i].clone()));
        }
    }
    out.push(table("golden-h-alpha", &entries));
    out
}
