//! Morphisms of the simplex category, as monotone maps and as words in the
//! coface and codegeneracy generators.
//!
//! Words are stored in morphism orientation: `[g1, g2, ..., gm]` denotes the
//! composite `g1 ∘ g2 ∘ ... ∘ gm`, so `gm` is applied first. A simplicial
//! object acts contravariantly, which turns such a word into the operator
//! string `X(gm) ... X(g1)`; [`OperatorWord::to_operator_string`] and
//! [`OperatorWord::parse_operators`] translate between the two.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly monotone map `[source_rank] -> [target_rank]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMorphism {
    source_rank: usize,
    target_rank: usize,
    values: Vec<usize>,
}

impl DeltaMorphism {
    pub fn new(target_rank: usize, values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Construction("a morphism of Δ needs a nonempty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Construction(format!("{values:?} is not weakly increasing")));
        }
        if values.iter().any(|&v| v > target_rank) {
            return Err(Error::Construction(format!("{values:?} leaves [{target_rank}]")));
        }
        Ok(DeltaMorphism {
            source_rank: values.len() - 1,
            target_rank,
            values,
        })
    }

    pub fn identity(n: usize) -> Self {
        DeltaMorphism {
            source_rank: n,
            target_rank: n,
            values: (0..=n).collect(),
        }
    }

    /// The coface `ε^i: [n-1] -> [n]` whose image misses `i`.
    pub fn coface(n: usize, i: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::Construction(format!("no coface ε^{i} into [{n}]")));
        }
        Ok(DeltaMorphism {
            source_rank: n - 1,
            target_rank: n,
            values: (0..n).map(|x| if x < i { x } else { x + 1 }).collect(),
        })
    }

    /// The codegeneracy `η^j: [n+1] -> [n]` hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Result<Self> {
        if j > n {
            return Err(Error::Construction(format!("no codegeneracy η^{j} onto [{n}]")));
        }
        Ok(DeltaMorphism {
            source_rank: n + 1,
            target_rank: n,
            values: (0..n + 2).map(|x| if x <= j { x } else { x - 1 }).collect(),
        })
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target_rank
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// All monotone maps `[q] -> [p]`, in lexicographic order of values.
    pub fn all(q: usize, p: usize) -> Vec<DeltaMorphism> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(q + 1);
        fn rec(q: usize, p: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMorphism>) {
            if cur.len() == q + 1 {
                out.push(DeltaMorphism {
                    source_rank: q,
                    target_rank: p,
                    values: cur.clone(),
                });
                return;
            }
            for v in lo..=p {
                cur.push(v);
                rec(q, p, v, cur, out);
                cur.pop();
            }
        }
        rec(q, p, 0, &mut cur, &mut out);
        out
    }

    /// All monotone surjections `[n] ->> [k]`, in lexicographic order.
    pub fn surjections(n: usize, k: usize) -> Vec<DeltaMorphism> {
        if k > n {
            return Vec::new();
        }
        Self::all(n, k).into_iter().filter(|m| m.is_surjective()).collect()
    }
}

impl fmt::Display for DeltaMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "[{}]->[{}]:({})", self.source_rank, self.target_rank, vals.join(","))
    }
}

/// `compose(f, g)` is `f ∘ g`: first `g`, then `f`.
pub fn compose(f: &DeltaMorphism, g: &DeltaMorphism) -> Result<DeltaMorphism> {
    if f.source_rank != g.target_rank {
        return Err(Error::Composition(format!(
            "cannot compose {f} after {g}: [{}] != [{}]",
            f.source_rank, g.target_rank
        )));
    }
    Ok(DeltaMorphism {
        source_rank: g.source_rank,
        target_rank: f.target_rank,
        values: g.values.iter().map(|&x| f.values[x]).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// `ε^i`, acting on simplices as `d_i`.
    Face(usize),
    /// `η^j`, acting on simplices as `s_j`.
    Degeneracy(usize),
}

impl Generator {
    /// Source rank of the generator given its target rank.
    fn source_for_target(self, target: usize) -> Option<usize> {
        match self {
            Generator::Face(i) => (target >= 1 && i <= target).then(|| target - 1),
            Generator::Degeneracy(j) => (j <= target).then_some(target + 1),
        }
    }

    fn as_morphism(self, target: usize) -> Result<DeltaMorphism> {
        match self {
            Generator::Face(i) => DeltaMorphism::coface(target, i),
            Generator::Degeneracy(j) => DeltaMorphism::codegeneracy(target, j),
        }
    }
}

/// A composable word in the generators of Δ, in morphism orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    source_rank: usize,
    target_rank: usize,
    generators: Vec<Generator>,
    canonical: bool,
}

impl OperatorWord {
    /// Builds the word `generators[0] ∘ ... ∘ generators[m-1]` landing in
    /// `[target_rank]`, checking composability.
    pub fn new(target_rank: usize, generators: Vec<Generator>) -> Result<Self> {
        let mut rank = target_rank;
        for (k, g) in generators.iter().enumerate() {
            rank = g.source_for_target(rank).ok_or_else(|| {
                Error::Composition(format!("generator {k} ({g:?}) does not map into [{rank}]"))
            })?;
        }
        let canonical = is_canonical_shape(&generators);
        Ok(OperatorWord {
            source_rank: rank,
            target_rank,
            generators,
            canonical,
        })
    }

    pub fn identity(n: usize) -> Self {
        OperatorWord {
            source_rank: n,
            target_rank: n,
            generators: Vec::new(),
            canonical: true,
        }
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Ranks `[r_0, r_1, ..., r_m]` where `r_0` is the target rank and
    /// generator `k` maps `[r_{k+1}]` into `[r_k]`.
    pub fn rank_chain(&self) -> Vec<usize> {
        let mut out = vec![self.target_rank];
        let mut r = self.target_rank;
        for g in &self.generators {
            r = g.source_for_target(r).expect("word was checked composable");
            out.push(r);
        }
        out
    }

    /// Evaluates the word as a monotone map.
    pub fn evaluate(&self) -> DeltaMorphism {
        let ranks = self.rank_chain();
        let mut acc = DeltaMorphism::identity(self.target_rank);
        for (k, g) in self.generators.iter().enumerate() {
            let m = g.as_morphism(ranks[k]).expect("word was checked composable");
            acc = compose(&acc, &m).expect("ranks agree");
        }
        acc
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &OperatorWord) -> Result<OperatorWord> {
        if self.source_rank != other.target_rank {
            return Err(Error::Composition(format!(
                "word from [{}] cannot follow word into [{}]",
                self.source_rank, other.target_rank
            )));
        }
        let mut gens = self.generators.clone();
        gens.extend_from_slice(&other.generators);
        OperatorWord::new(self.target_rank, gens)
    }

    /// The operator string acting on simplices, e.g. `d0 s0` for the map
    /// `x ↦ d_0(s_0(x))`.
    pub fn to_operator_string(&self) -> String {
        self.generators
            .iter()
            .rev()
            .map(|g| match g {
                Generator::Face(i) => format!("d{i}"),
                Generator::Degeneracy(j) => format!("s{j}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses whitespace-separated `d<i>` / `s<j>` tokens, read left to right
    /// as composition of operators on simplices, acting on simplices of
    /// dimension `level`.
    pub fn parse_operators(text: &str, level: usize) -> Result<OperatorWord> {
        let mut ops = Vec::new();
        for tok in text.split_whitespace() {
            let (kind, idx) = tok.split_at(1);
            let idx: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad operator token {tok:?}")))?;
            ops.push(match kind {
                "d" => Generator::Face(idx),
                "s" => Generator::Degeneracy(idx),
                _ => return Err(Error::Parse(format!("bad operator token {tok:?}"))),
            });
        }
        // Operators d_i: X_n -> X_{n-1} come from ε^i: [n-1] -> [n]. The
        // rightmost operator acts first on X_level, so it is the morphism
        // applied last, i.e. the leftmost generator of the word whose target
        // is [level].
        ops.reverse();
        OperatorWord::new(level, ops)
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "id[{}]", self.target_rank);
        }
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|g| match g {
                Generator::Face(i) => format!("ε{i}"),
                Generator::Degeneracy(j) => format!("η{j}"),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `ε^{i_s} ... ε^{i_1} η^{j_1} ... η^{j_t}` with `i_1 < ... < i_s` and
/// `j_1 < ... < j_t`.
fn is_canonical_shape(gens: &[Generator]) -> bool {
    let split = gens
        .iter()
        .position(|g| matches!(g, Generator::Degeneracy(_)))
        .unwrap_or(gens.len());
    let (faces, degens) = gens.split_at(split);
    let face_idx: Vec<usize> = faces
        .iter()
        .map(|g| match g {
            Generator::Face(i) => Some(*i),
            Generator::Degeneracy(_) => None,
        })
        .collect::<Option<_>>()
        .unwrap_or_default();
    let Some(degen_idx) = degens
        .iter()
        .map(|g| match g {
            Generator::Degeneracy(j) => Some(*j),
            Generator::Face(_) => None,
        })
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    face_idx.windows(2).all(|w| w[0] > w[1]) && degen_idx.windows(2).all(|w| w[0] < w[1])
}

/// The unique factorization `ε^{i_s} ... ε^{i_1} η^{j_1} ... η^{j_t}` of a
/// monotone map: the `i`s are the values it skips, the `j`s the positions
/// where it repeats a value.
pub fn canonical_factorization(f: &DeltaMorphism) -> OperatorWord {
    let mut hit = vec![false; f.target_rank + 1];
    for &v in &f.values {
        hit[v] = true;
    }
    let skipped: Vec<usize> = (0..=f.target_rank).filter(|&i| !hit[i]).collect();
    let repeats: Vec<usize> = (0..f.source_rank)
        .filter(|&j| f.values[j] == f.values[j + 1])
        .collect();
    let mut gens: Vec<Generator> = skipped.iter().rev().map(|&i| Generator::Face(i)).collect();
    gens.extend(repeats.iter().map(|&j| Generator::Degeneracy(j)));
    let word = OperatorWord::new(f.target_rank, gens).expect("canonical factorization composes");
    debug_assert!(word.canonical);
    debug_assert_eq!(word.source_rank, f.source_rank);
    word
}

/// Splits a monotone map into its surjective part followed by its injective
/// part: `f = inj ∘ surj`.
pub fn epi_mono(f: &DeltaMorphism) -> (DeltaMorphism, DeltaMorphism) {
    let mut image: Vec<usize> = f.values.clone();
    image.dedup();
    let k = image.len() - 1;
    let surj_vals: Vec<usize> = f
        .values
        .iter()
        .map(|v| image.binary_search(v).expect("value is in the image"))
        .collect();
    let surj = DeltaMorphism {
        source_rank: f.source_rank,
        target_rank: k,
        values: surj_vals,
    };
    let inj = DeltaMorphism {
        source_rank: k,
        target_rank: f.target_rank,
        values: image,
    };
    (surj, inj)
}

/// One rewriting step: finds the leftmost adjacent pair that violates the
/// canonical shape and rewrites it with the matching cosimplicial identity.
fn rewrite_once(gens: &[Generator]) -> Option<Vec<Generator>> {
    use Generator::{Degeneracy as Dg, Face as Fc};
    for k in 0..gens.len().saturating_sub(1) {
        let replacement: Option<Vec<Generator>> = match (gens[k], gens[k + 1]) {
            // ε^a ε^b with a <= b: ε^a ε^b = ε^{b+1} ε^a
            (Fc(a), Fc(b)) if a <= b => Some(vec![Fc(b + 1), Fc(a)]),
            // η^j ε^i
            (Dg(j), Fc(i)) => Some(if i < j {
                vec![Fc(i), Dg(j - 1)]
            } else if i == j || i == j + 1 {
                vec![]
            } else {
                vec![Fc(i - 1), Dg(j)]
            }),
            // η^a η^b with a > b: η^a η^b = η^b η^{a+1}
            (Dg(a), Dg(b)) if a > b => Some(vec![Dg(b), Dg(a + 1)]),
            _ => None,
        };
        if let Some(rep) = replacement {
            let mut out = Vec::with_capacity(gens.len());
            out.extend_from_slice(&gens[..k]);
            out.extend(rep);
            out.extend_from_slice(&gens[k + 2..]);
            return Some(out);
        }
    }
    None
}

/// Rewrites a word into canonical form using only the cosimplicial
/// identities. Each step either deletes a pair or moves a codegeneracy to
/// the right of a coface or sorts an adjacent pair of like generators,
/// so the process terminates.
pub fn normalize(w: &OperatorWord) -> OperatorWord {
    let mut gens = w.generators.clone();
    while let Some(next) = rewrite_once(&gens) {
        gens = next;
    }
    let out = OperatorWord::new(w.target_rank, gens).expect("rewriting preserves composability");
    debug_assert!(out.canonical);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceEnd {
    /// Iterated `d_0`.
    Front,
    /// Iterated last face `d_fin`, whose index drops by one per application.
    Back,
}

/// Commutes `power` copies of an extreme face past the degeneracy string
/// `S = s_{a_k} ... s_{a_1}` (indices sorted ascending in `degeneracies`)
/// landing in level `level`:
///
/// * front: `d_0^t S_α = S_{α'} d_0^{t - #{a < t}}` with `α' = {a - t : a >= t}`
/// * back: `d_fin^s S_α = S_{α''} d_fin^{s - #{a >= level - s}}` with
///   `α'' = {a : a < level - s}`
///
/// Returns the new degeneracy index set and the residual face power.
pub fn commute_faces_past_degeneracies(
    end: FaceEnd,
    power: usize,
    degeneracies: &[usize],
    level: usize,
) -> Result<(Vec<usize>, usize)> {
    if power > level {
        return Err(Error::Construction(format!("face power {power} exceeds level {level}")));
    }
    if degeneracies.windows(2).any(|w| w[0] >= w[1]) || degeneracies.iter().any(|&a| a >= level) {
        return Err(Error::Construction(format!(
            "degeneracy set {degeneracies:?} is not a sorted subset of [0, {level})"
        )));
    }
    Ok(match end {
        FaceEnd::Front => {
            let consumed = degeneracies.iter().filter(|&&a| a < power).count();
            let rest = degeneracies.iter().filter(|&&a| a >= power).map(|&a| a - power).collect();
            (rest, power - consumed)
        }
        FaceEnd::Back => {
            let cut = level - power;
            let consumed = degeneracies.iter().filter(|&&a| a >= cut).count();
            let rest = degeneracies.iter().filter(|&&a| a < cut).copied().collect();
            (rest, power - consumed)
        }
    })
}

/// Operator string for `(face)^power ∘ S` acting on simplices of level
/// `level - |S|`, handy for cross-checking the bookkeeping above.
pub fn faces_after_degeneracies(
    end: FaceEnd,
    power: usize,
    degeneracies: &[usize],
    level: usize,
) -> Result<OperatorWord> {
    let base = level - degeneracies.len();
    let mut ops = face_string(end, power, level);
    // S_α = s_{a_k} ... s_{a_1}: largest index leftmost
    ops.extend(degeneracies.iter().rev().map(|a| format!("s{a}")));
    OperatorWord::parse_operators(&ops.join(" "), base)
}

/// `power` extreme faces applied to simplices of level `level`, written as
/// an operator string (rightmost acts first).
fn face_string(end: FaceEnd, power: usize, level: usize) -> Vec<String> {
    (0..power)
        .rev()
        .map(|k| match end {
            FaceEnd::Front => "d0".to_string(),
            FaceEnd::Back => format!("d{}", level - k),
        })
        .collect()
}

/// Operator string `S ∘ (face)^power` acting on simplices of level `base`.
pub fn degeneracies_after_faces(
    end: FaceEnd,
    power: usize,
    degeneracies: &[usize],
    base: usize,
) -> Result<OperatorWord> {
    let mut ops: Vec<String> = degeneracies.iter().rev().map(|a| format!("s{a}")).collect();
    ops.extend(face_string(end, power, base));
    OperatorWord::parse_operators(&ops.join(" "), base)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ops(text: &str, level: usize) -> OperatorWord {
        OperatorWord::parse_operators(text, level).unwrap()
    }

    #[test]
    fn identity_composition() {
        let f = DeltaMorphism::new(2, vec![0, 0, 2]).unwrap();
        let id = DeltaMorphism::identity(2);
        assert_eq!(compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn coface_then_codegeneracy_is_identity() {
        let e0 = DeltaMorphism::coface(1, 0).unwrap();
        let n0 = DeltaMorphism::codegeneracy(0, 0).unwrap();
        assert_eq!(compose(&n0, &e0).unwrap(), DeltaMorphism::identity(0));
    }

    #[test]
    fn codegeneracy_then_coface_is_constant() {
        let n0 = DeltaMorphism::codegeneracy(0, 0).unwrap();
        let e1 = DeltaMorphism::coface(1, 1).unwrap();
        let c = compose(&e1, &n0).unwrap();
        assert_eq!(c.values(), &[0, 0]);
        assert_eq!(c.target_rank(), 1);
    }

    #[test]
    fn composition_rank_mismatch() {
        let e0 = DeltaMorphism::coface(1, 0).unwrap();
        assert!(matches!(compose(&e0, &e0), Err(Error::Composition(_))));
    }

    #[test]
    fn rejects_non_monotone() {
        assert!(DeltaMorphism::new(2, vec![1, 0]).is_err());
        assert!(DeltaMorphism::new(1, vec![0, 2]).is_err());
    }

    #[test]
    fn factorization_examples() {
        let id = canonical_factorization(&DeltaMorphism::identity(2));
        assert!(id.generators().is_empty());

        let c = DeltaMorphism::new(1, vec![0, 0]).unwrap();
        let w = canonical_factorization(&c);
        assert_eq!(w.generators(), &[Generator::Face(1), Generator::Degeneracy(0)]);

        let inc = DeltaMorphism::new(2, vec![0, 2]).unwrap();
        assert_eq!(canonical_factorization(&inc).generators(), &[Generator::Face(1)]);
    }

    #[test]
    fn normalize_examples() {
        assert!(normalize(&ops("d0 s0", 1)).generators().is_empty());
        assert_eq!(normalize(&ops("d2 s0", 1)), normalize(&ops("s0 d1", 1)));
        assert_eq!(normalize(&ops("s0 d1", 1)).to_operator_string(), "s0 d1");
        // d_fin s_max with fin = 2, max = 1
        assert!(normalize(&ops("d2 s1", 1)).generators().is_empty());
    }

    #[test]
    fn operator_string_round_trip() {
        let w = ops("d0 s1 s0", 2);
        assert_eq!(w.to_operator_string(), "d0 s1 s0");
        assert_eq!(w.source_rank(), 3);
        assert_eq!(w.target_rank(), 2);
    }

    #[test]
    fn commute_examples() {
        assert_eq!(
            commute_faces_past_degeneracies(FaceEnd::Front, 3, &[], 4).unwrap(),
            (vec![], 3)
        );
        assert_eq!(
            commute_faces_past_degeneracies(FaceEnd::Front, 1, &[0], 2).unwrap(),
            (vec![], 0)
        );
        assert_eq!(
            commute_faces_past_degeneracies(FaceEnd::Back, 1, &[0], 2).unwrap(),
            (vec![0], 1)
        );
    }

    #[test]
    fn epi_mono_reassembles() {
        let f = DeltaMorphism::new(4, vec![0, 0, 2, 3, 3]).unwrap();
        let (s, i) = epi_mono(&f);
        assert!(s.is_surjective() && i.is_injective());
        assert_eq!(compose(&i, &s).unwrap(), f);
    }

    #[test]
    fn surjection_counts() {
        // monotone surjections [n] ->> [1] number n
        for n in 1..6 {
            assert_eq!(DeltaMorphism::surjections(n, 1).len(), n);
        }
    }
}
