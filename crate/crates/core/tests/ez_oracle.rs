//! AW, ∇ and the bialgebra composites recomputed on vertex sequences of
//! standard simplices, with no use of face or degeneracy matrices, and
//! compared with the library's matrices label by label.

use std::collections::BTreeMap;
use std::sync::Arc;

use simplicial_bialgebra::chain::ChainMap;
use simplicial_bialgebra::ez::{BialgebraInstance, EzPair};
use simplicial_bialgebra::simplicial::{free_on_standard_simplex, SimplicialModule};

type Seq = Vec<usize>;
type Combo = BTreeMap<String, i64>;

fn label(s: &[usize]) -> String {
    format!("[{}]", s.iter().map(|v| v.to_string()).collect::<String>())
}

fn parse(label: &str) -> Vec<Seq> {
    label
        .split('⊗')
        .map(|part| {
            part.trim_matches(|c| c == '[' || c == ']')
                .chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect()
        })
        .collect()
}

fn degenerate(s: &[usize]) -> bool {
    s.windows(2).any(|w| w[0] == w[1])
}

/// Jointly degenerate: some position repeats in every component.
fn jointly_degenerate(parts: &[&Seq]) -> bool {
    let n = parts[0].len();
    (1..n).any(|t| parts.iter().all(|s| s[t] == s[t - 1]))
}

/// Alexander–Whitney: front `i`-face of `x` times back `(n-i)`-face of `y`.
fn aw(x: &Seq, y: &Seq) -> Vec<(Seq, Seq, i64)> {
    (0..x.len())
        .map(|i| (x[..=i].to_vec(), y[i..].to_vec(), 1))
        .collect()
}

/// Shuffle map as a sum over lattice paths; a `y`-step before an `x`-step
/// costs a sign.
fn shuffle(x: &Seq, y: &Seq) -> Vec<(Seq, Seq, i64)> {
    let (k, l) = (x.len() - 1, y.len() - 1);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (k + l)) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let (mut a, mut b) = (0, 0);
        let (mut xs, mut ys) = (vec![x[0]], vec![y[0]]);
        let mut inversions = 0;
        for t in 0..k + l {
            if mask >> t & 1 == 1 {
                a += 1;
                inversions += b;
            } else {
                b += 1;
            }
            xs.push(x[a]);
            ys.push(y[b]);
        }
        out.push((xs, ys, if inversions % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn simplex(p: usize, d: usize) -> Arc<SimplicialModule> {
    Arc::new(free_on_standard_simplex(p, d))
}

fn library_column(f: &ChainMap, n: usize, j: usize) -> Combo {
    let labels = f.target().labels(n);
    f.degree(n)
        .column(j)
        .iter()
        .map(|(i, v)| (labels[*i].clone(), i64::try_from(v.clone()).unwrap()))
        .collect()
}

fn add(c: &mut Combo, key: String, v: i64) {
    let e = c.entry(key.clone()).or_insert(0);
    *e += v;
    if *e == 0 {
        c.remove(&key);
    }
}

const D: usize = 4;

#[test]
fn aw_matches_front_back_faces() {
    for normalized in [false, true] {
        for p in 0..=2 {
            for q in 0..=2 {
                let pair = EzPair::new(simplex(p, D), simplex(q, D), normalized).unwrap();
                let f = pair.aw().unwrap();
                for n in 0..=D {
                    for (j, src) in f.source().labels(n).iter().enumerate() {
                        let s = parse(src);
                        let mut want = Combo::new();
                        for (a, b, v) in aw(&s[0], &s[1]) {
                            if normalized && (degenerate(&a) || degenerate(&b)) {
                                continue;
                            }
                            add(&mut want, format!("{}⊗{}", label(&a), label(&b)), v);
                        }
                        assert_eq!(library_column(&f, n, j), want, "AW Δ{p}⊗Δ{q} on {src}");
                    }
                }
            }
        }
    }
}

#[test]
fn shuffle_matches_lattice_paths() {
    for normalized in [false, true] {
        for p in 0..=2 {
            for q in 0..=2 {
                let pair = EzPair::new(simplex(p, D), simplex(q, D), normalized).unwrap();
                let f = pair.shuffle().unwrap();
                for n in 0..=D {
                    for (j, src) in f.source().labels(n).iter().enumerate() {
                        let s = parse(src);
                        let mut want = Combo::new();
                        for (a, b, v) in shuffle(&s[0], &s[1]) {
                            if normalized && jointly_degenerate(&[&a, &b]) {
                                continue;
                            }
                            add(&mut want, format!("{}⊗{}", label(&a), label(&b)), v);
                        }
                        assert_eq!(library_column(&f, n, j), want, "∇ Δ{p}⊗Δ{q} on {src}");
                    }
                }
            }
        }
    }
}

/// `AW ∘ σ ∘ ∇` on a basis element `(x⊗y) ⊗ (z⊗w)`.
fn oracle_lhs(x: &Seq, y: &Seq, z: &Seq, w: &Seq, normalized: bool) -> Combo {
    let mut out = Combo::new();
    for (xy, zw, s1) in shuffle(&pair_seq(x, y), &pair_seq(z, w)) {
        let (x2, y2) = unpair(&xy);
        let (z2, w2) = unpair(&zw);
        for t in 0..x2.len() {
            let (a, c) = (x2[..=t].to_vec(), z2[..=t].to_vec());
            let (b, d) = (y2[t..].to_vec(), w2[t..].to_vec());
            if normalized && (jointly_degenerate(&[&a, &c]) || jointly_degenerate(&[&b, &d])) {
                continue;
            }
            add(&mut out, key(&a, &c, &b, &d), s1);
        }
    }
    out
}

/// `(∇ ⊗ ∇) ∘ τ ∘ (AW ⊗ AW)` on the same element.
fn oracle_rhs(x: &Seq, y: &Seq, z: &Seq, w: &Seq, normalized: bool) -> Combo {
    let mut out = Combo::new();
    for (a, b, _) in aw(x, y) {
        for (c, d, _) in aw(z, w) {
            let koszul = if (b.len() - 1) * (c.len() - 1) % 2 == 0 { 1 } else { -1 };
            for (a2, c2, s1) in shuffle(&a, &c) {
                for (b2, d2, s2) in shuffle(&b, &d) {
                    if normalized && (jointly_degenerate(&[&a2, &c2]) || jointly_degenerate(&[&b2, &d2])) {
                        continue;
                    }
                    add(&mut out, key(&a2, &c2, &b2, &d2), koszul * s1 * s2);
                }
            }
        }
    }
    out
}

// pairs of sequences travel through `shuffle` as one sequence of pairs
fn pair_seq(x: &Seq, y: &Seq) -> Seq {
    x.iter().zip(y).map(|(a, b)| a * 16 + b).collect()
}

fn unpair(s: &Seq) -> (Seq, Seq) {
    (s.iter().map(|v| v / 16).collect(), s.iter().map(|v| v % 16).collect())
}

fn key(a: &Seq, c: &Seq, b: &Seq, d: &Seq) -> String {
    format!("{}⊗{}⊗{}⊗{}", label(a), label(c), label(b), label(d))
}

#[test]
fn bialgebra_composites_match_oracle() {
    let d = 3;
    let cases = [(1, 1, 1, 1), (2, 1, 0, 1), (1, 2, 2, 1), (0, 2, 1, 0)];
    for normalized in [false, true] {
        for &(p, q, r, s) in &cases {
            let inst = BialgebraInstance::new(simplex(p, d), simplex(q, d), simplex(r, d), simplex(s, d), normalized)
                .unwrap();
            let lhs = inst.lhs().unwrap();
            let rhs = inst.rhs().unwrap();
            for n in 0..=d {
                for (j, src) in lhs.source().labels(n).iter().enumerate() {
                    let t = parse(src);
                    let want_l = oracle_lhs(&t[0], &t[1], &t[2], &t[3], normalized);
                    let want_r = oracle_rhs(&t[0], &t[1], &t[2], &t[3], normalized);
                    assert_eq!(want_l, want_r, "oracle sides differ on {src}");
                    assert_eq!(library_column(&lhs, n, j), want_l, "lhs on {src}");
                    assert_eq!(library_column(&rhs, n, j), want_r, "rhs on {src}");
                }
            }
        }
    }
}

#[test]
fn oracle_shuffle_counts_binomials() {
    let x: Seq = vec![0, 1, 2];
    let y: Seq = vec![0, 1];
    assert_eq!(shuffle(&x, &y).len(), 3);
    let signs: i64 = shuffle(&x, &y).iter().map(|t| t.2).sum();
    // +1 -1 +1 for the three positions of the single y-step
    assert_eq!(signs, 1);
}
