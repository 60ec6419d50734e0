//! Degree-truncated simplicial abelian groups with free levels.
//!
//! A module of max degree `D` carries levels `0..=D`, faces
//! `d_i: A_n -> A_{n-1}` for `1 <= n <= D` and degeneracies
//! `s_i: A_n -> A_{n+1}` for `n < D`. Everything downstream only uses
//! operators inside that window, so truncation never changes a result on
//! the levels that are reported.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::delta::{canonical_factorization, compose, DeltaMorphism, Generator, OperatorWord};
use crate::error::{Error, Result};
use crate::linalg::{Int, Matrix};
use crate::report::{VerificationReport, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialModule {
    name: String,
    ranks: Vec<usize>,
    /// `faces[n][i]` is `d_i` on level `n`; `faces[0]` is empty.
    faces: Vec<Vec<Matrix>>,
    /// `degeneracies[n][i]` is `s_i` on level `n`, for `n < D`.
    degeneracies: Vec<Vec<Matrix>>,
    labels: Vec<Vec<String>>,
}

impl SimplicialModule {
    /// Assembles a module, checking matrix shapes. The simplicial identities
    /// are not enforced here; [`SimplicialModule::validate`] reports them.
    pub fn new(
        name: impl Into<String>,
        ranks: Vec<usize>,
        faces: Vec<Vec<Matrix>>,
        degeneracies: Vec<Vec<Matrix>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::Construction("a simplicial module needs level 0".into()));
        }
        let d = ranks.len() - 1;
        if faces.len() != d + 1 || degeneracies.len() != d {
            return Err(Error::Shape(format!(
                "expected {} face levels and {d} degeneracy levels, got {} and {}",
                d + 1,
                faces.len(),
                degeneracies.len()
            )));
        }
        for n in 0..=d {
            let expect = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != expect {
                return Err(Error::Shape(format!("level {n} needs {expect} faces")));
            }
            for (i, m) in faces[n].iter().enumerate() {
                if m.shape() != (ranks[n - 1], ranks[n]) {
                    return Err(Error::Shape(format!(
                        "d_{i} on level {n} is {:?}, expected {:?}",
                        m.shape(),
                        (ranks[n - 1], ranks[n])
                    )));
                }
            }
        }
        for n in 0..d {
            if degeneracies[n].len() != n + 1 {
                return Err(Error::Shape(format!("level {n} needs {} degeneracies", n + 1)));
            }
            for (i, m) in degeneracies[n].iter().enumerate() {
                if m.shape() != (ranks[n + 1], ranks[n]) {
                    return Err(Error::Shape(format!("s_{i} on level {n} has shape {:?}", m.shape())));
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != d + 1 || l.iter().zip(&ranks).any(|(v, r)| v.len() != *r) {
                    return Err(Error::Shape("basis labels do not match ranks".into()));
                }
                l
            }
            None => ranks
                .iter()
                .map(|&r| (0..r).map(|i| format!("e{i}")).collect())
                .collect(),
        };
        Ok(SimplicialModule {
            name: name.into(),
            ranks,
            faces,
            degeneracies,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn max_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &Matrix {
        &self.degeneracies[n][i]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn label(&self, n: usize, i: usize) -> &str {
        &self.labels[n][i]
    }

    /// Keeps levels `0..=d`.
    pub fn truncate(&self, d: usize) -> Result<SimplicialModule> {
        if d > self.max_degree() {
            return Err(Error::Truncation(format!(
                "cannot extend {} from degree {} to {d}",
                self.name,
                self.max_degree()
            )));
        }
        Ok(SimplicialModule {
            name: self.name.clone(),
            ranks: self.ranks[..=d].to_vec(),
            faces: self.faces[..=d].to_vec(),
            degeneracies: self.degeneracies[..d].to_vec(),
            labels: self.labels[..=d].to_vec(),
        })
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Copy with one face entry overwritten; used to build faulty fixtures.
    pub fn with_face_entry(&self, n: usize, i: usize, row: usize, col: usize, value: i64) -> Result<Self> {
        let m = self
            .faces
            .get(n)
            .and_then(|f| f.get(i))
            .ok_or_else(|| Error::Construction(format!("no face d_{i} on level {n}")))?;
        if row >= m.rows() || col >= m.cols() {
            return Err(Error::Construction(format!("entry ({row},{col}) outside d_{i}")));
        }
        let mut trip: Vec<(usize, usize, Int)> = m
            .triplets()
            .filter(|(r, c, _)| (*r, *c) != (row, col))
            .map(|(r, c, v)| (r, c, v.clone()))
            .collect();
        trip.push((row, col, Int::from(value)));
        let mut out = self.clone();
        out.faces[n][i] = Matrix::from_triplets(m.rows(), m.cols(), trip);
        Ok(out)
    }

    /// Matrix of the operator `A(θ): A_p -> A_q` for `θ: [q] -> [p]`.
    pub fn operator(&self, theta: &DeltaMorphism) -> Result<Matrix> {
        self.word_operator(&canonical_factorization(theta))
    }

    /// Matrix of `A(g_1 ∘ ... ∘ g_m) = A(g_m) ... A(g_1)`.
    pub fn word_operator(&self, word: &OperatorWord) -> Result<Matrix> {
        let ranks = word.rank_chain();
        if ranks.iter().any(|&r| r > self.max_degree()) {
            return Err(Error::Truncation(format!(
                "word {word} leaves the truncation of {} at degree {}",
                self.name,
                self.max_degree()
            )));
        }
        let mut acc = Matrix::identity(self.ranks[word.target_rank()]);
        for (k, g) in word.generators().iter().enumerate() {
            let level = ranks[k];
            let m = match g {
                Generator::Face(i) => &self.faces[level][*i],
                Generator::Degeneracy(j) => &self.degeneracies[level][*j],
            };
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }

    /// Checks every instance of the simplicial identities inside the
    /// truncation.
    pub fn validate(&self) -> VerificationReport {
        let mut report = VerificationReport::new(
            "simplicial-identities",
            vec![self.name.clone()],
            self.max_degree(),
        );
        let d = self.max_degree();
        let check = |report: &mut VerificationReport,
                         clause: &str,
                         idx: String,
                         source_level: usize,
                         target_level: usize,
                         lhs: Matrix,
                         rhs: Matrix| {
            if lhs == rhs {
                return;
            }
            let src = &self.labels[source_level];
            let tgt = &self.labels[target_level];
            for j in 0..lhs.cols() {
                if lhs.column(j) != rhs.column(j) {
                    report.push_witness(Witness {
                        level: source_level,
                        basis: format!("{clause} ({idx}) on {}", src[j]),
                        left: crate::linalg::format_combination(lhs.column(j), &|i| tgt[i].clone()),
                        right: crate::linalg::format_combination(rhs.column(j), &|i| tgt[i].clone()),
                    });
                }
            }
            report.reason.get_or_insert_with(|| format!("violated: {clause} ({idx})"));
        };
        let mul = |a: &Matrix, b: &Matrix| a.mul(b).expect("shapes checked at construction");
        // d_i d_j = d_{j-1} d_i for i < j, on level n >= 2
        for n in 2..=d {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = mul(&self.faces[n - 1][i], &self.faces[n][j]);
                    let rhs = mul(&self.faces[n - 1][j - 1], &self.faces[n][i]);
                    check(&mut report, "d_i d_j = d_{j-1} d_i", format!("i={i}, j={j}"), n, n - 2, lhs, rhs);
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i <= j, on level n with n + 2 <= D
        for n in 0..d.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = mul(&self.degeneracies[n + 1][i], &self.degeneracies[n][j]);
                    let rhs = mul(&self.degeneracies[n + 1][j + 1], &self.degeneracies[n][i]);
                    check(&mut report, "s_i s_j = s_{j+1} s_i", format!("i={i}, j={j}"), n, n + 2, lhs, rhs);
                }
            }
        }
        // d_i s_j on level n: s_j lands in level n+1
        for n in 0..d {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = mul(&self.faces[n + 1][i], &self.degeneracies[n][j]);
                    if i < j {
                        let rhs = mul(&self.degeneracies[n - 1][j - 1], &self.faces[n][i]);
                        check(&mut report, "d_i s_j = s_{j-1} d_i", format!("i={i}, j={j}"), n, n, lhs, rhs);
                    } else if i == j || i == j + 1 {
                        let rhs = Matrix::identity(self.ranks[n]);
                        check(&mut report, "d_i s_j = 1", format!("i={i}, j={j}"), n, n, lhs, rhs);
                    } else {
                        let rhs = mul(&self.degeneracies[n - 1][j], &self.faces[n][i - 1]);
                        check(&mut report, "d_i s_j = s_j d_{i-1}", format!("i={i}, j={j}"), n, n, lhs, rhs);
                    }
                }
            }
        }
        report
    }

    /// Deterministic text form: ranks, then every face and degeneracy
    /// matrix level by level, integers in decimal.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "simplicial-module {}", self.name);
        let _ = writeln!(s, "max-degree {}", self.max_degree());
        let ranks: Vec<String> = self.ranks.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "ranks {}", ranks.join(" "));
        for n in 0..=self.max_degree() {
            for (i, m) in self.faces[n].iter().enumerate() {
                let _ = writeln!(s, "face {n} {i}");
                write_matrix(&mut s, m);
            }
            if n < self.max_degree() {
                for (i, m) in self.degeneracies[n].iter().enumerate() {
                    let _ = writeln!(s, "degeneracy {n} {i}");
                    write_matrix(&mut s, m);
                }
            }
        }
        s
    }
}

pub(crate) fn write_matrix(s: &mut String, m: &Matrix) {
    let _ = writeln!(s, "{} {}", m.rows(), m.cols());
    for row in m.to_dense() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "{}", cells.join(" "));
    }
}

fn lex_label(values: &[usize]) -> String {
    if values.iter().all(|&v| v < 10) {
        let digits: String = values.iter().map(|v| char::from(b'0' + *v as u8)).collect();
        format!("[{digits}]")
    } else {
        let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// The linearized standard simplex `Z[Δ^p]`: level `n` has the monotone maps
/// `[n] -> [p]` as basis, and operators act by precomposition.
pub fn free_on_standard_simplex(p: usize, max_degree: usize) -> SimplicialModule {
    let bases: Vec<Vec<DeltaMorphism>> = (0..=max_degree).map(|n| DeltaMorphism::all(n, p)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, m)| (m.values().to_vec(), k)).collect())
        .collect();
    let precompose = |n_from: usize, n_to: usize, theta: &DeltaMorphism| -> Matrix {
        let images: Vec<usize> = bases[n_from]
            .iter()
            .map(|x| index[n_to][compose(x, theta).expect("ranks agree").values()])
            .collect();
        Matrix::from_basis_map(bases[n_to].len(), &images)
    };
    let faces = (0..=max_degree)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| precompose(n, n - 1, &DeltaMorphism::coface(n, i).unwrap()))
                .collect()
        })
        .collect();
    let degeneracies = (0..max_degree)
        .map(|n| {
            (0..=n)
                .map(|i| precompose(n, n + 1, &DeltaMorphism::codegeneracy(n, i).unwrap()))
                .collect()
        })
        .collect();
    let labels = bases
        .iter()
        .map(|b| b.iter().map(|m| lex_label(m.values())).collect())
        .collect();
    let ranks = bases.iter().map(Vec::len).collect();
    SimplicialModule::new(format!("delta:{p}"), ranks, faces, degeneracies, Some(labels))
        .expect("standard simplex shapes are consistent")
}

/// The constant simplicial group `Z`, the monoidal unit.
pub fn constant_z(max_degree: usize) -> SimplicialModule {
    free_on_standard_simplex(0, max_degree).renamed("const:Z")
}

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    name: String,
    table: Vec<Vec<usize>>,
    unit: usize,
    element_names: Vec<String>,
}

impl FiniteMonoid {
    /// Validates closure, associativity and the existence of a two-sided unit.
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::Construction("multiplication table is not a closed square".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Construction(format!(
                            "table is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Construction("table has no two-sided unit".into()))?;
        Ok(FiniteMonoid {
            name: name.into(),
            table,
            unit,
            element_names: (0..n).map(|i| i.to_string()).collect(),
        })
    }

    /// The cyclic group `Z/n`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteMonoid::new(format!("z{n}"), table).expect("cyclic groups are monoids")
    }

    pub fn trivial() -> Self {
        FiniteMonoid::new("trivial", vec![vec![0]]).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }
}

/// Index of a tuple in `M^n` with the first coordinate most significant.
pub(crate) fn tuple_index(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + x)
}

pub(crate) fn tuples(n: usize, base: usize) -> Vec<Vec<usize>> {
    let count = base.pow(n as u32);
    (0..count)
        .map(|mut k| {
            let mut t = vec![0; n];
            for slot in t.iter_mut().rev() {
                *slot = k % base;
                k /= base;
            }
            t
        })
        .collect()
}

/// The linearized nerve of a finite monoid: level `n` has basis `M^n`,
/// inner faces multiply neighbours, outer faces drop an end, degeneracies
/// insert the unit.
pub fn free_on_nerve(monoid: &FiniteMonoid, max_degree: usize) -> SimplicialModule {
    let m = monoid.order();
    let bases: Vec<Vec<Vec<usize>>> = (0..=max_degree).map(|n| tuples(n, m)).collect();
    let faces = (0..=max_degree)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    let images: Vec<usize> = bases[n]
                        .iter()
                        .map(|t| {
                            let f: Vec<usize> = if i == 0 {
                                t[1..].to_vec()
                            } else if i == n {
                                t[..n - 1].to_vec()
                            } else {
                                let mut f = t[..i - 1].to_vec();
                                f.push(monoid.mul(t[i - 1], t[i]));
                                f.extend_from_slice(&t[i + 1..]);
                                f
                            };
                            tuple_index(&f, m)
                        })
                        .collect();
                    Matrix::from_basis_map(bases[n - 1].len(), &images)
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..max_degree)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    let images: Vec<usize> = bases[n]
                        .iter()
                        .map(|t| {
                            let mut f = t[..i].to_vec();
                            f.push(monoid.unit());
                            f.extend_from_slice(&t[i..]);
                            tuple_index(&f, m)
                        })
                        .collect();
                    Matrix::from_basis_map(bases[n + 1].len(), &images)
                })
                .collect()
        })
        .collect();
    let labels = bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|t| {
                    let parts: Vec<&str> = t.iter().map(|&x| monoid.element_names[x].as_str()).collect();
                    format!("({})", parts.join(","))
                })
                .collect()
        })
        .collect();
    let ranks = bases.iter().map(Vec::len).collect();
    SimplicialModule::new(format!("nerve:{}", monoid.name()), ranks, faces, degeneracies, Some(labels))
        .expect("nerve shapes are consistent")
}

/// Levelwise tensor product. Basis pairs are ordered row-major, `A` outer.
pub fn tensor(a: &SimplicialModule, b: &SimplicialModule) -> Result<SimplicialModule> {
    if a.max_degree() != b.max_degree() {
        return Err(Error::Truncation(format!(
            "{} has max degree {} but {} has {}",
            a.name,
            a.max_degree(),
            b.name,
            b.max_degree()
        )));
    }
    let d = a.max_degree();
    let ranks = (0..=d).map(|n| a.ranks[n] * b.ranks[n]).collect();
    let faces = (0..=d)
        .map(|n| {
            (0..a.faces[n].len())
                .map(|i| a.faces[n][i].kron(&b.faces[n][i]))
                .collect()
        })
        .collect();
    let degeneracies = (0..d)
        .map(|n| {
            (0..=n)
                .map(|i| a.degeneracies[n][i].kron(&b.degeneracies[n][i]))
                .collect()
        })
        .collect();
    let labels = (0..=d)
        .map(|n| {
            let mut l = Vec::with_capacity(a.ranks[n] * b.ranks[n]);
            for x in &a.labels[n] {
                for y in &b.labels[n] {
                    l.push(format!("{x}⊗{y}"));
                }
            }
            l
        })
        .collect();
    SimplicialModule::new(
        format!("({} ⊗ {})", a.name, b.name),
        ranks,
        faces,
        degeneracies,
        Some(labels),
    )
}

/// A morphism of simplicial modules, levelwise.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: Arc<SimplicialModule>,
    target: Arc<SimplicialModule>,
    levels: Vec<Matrix>,
}

impl SimplicialMap {
    /// Checks shapes; use [`SimplicialMap::check`] for compatibility with
    /// the operators.
    pub fn new(source: Arc<SimplicialModule>, target: Arc<SimplicialModule>, levels: Vec<Matrix>) -> Result<Self> {
        let d = source.max_degree();
        if target.max_degree() != d || levels.len() != d + 1 {
            return Err(Error::Truncation("simplicial map truncations disagree".into()));
        }
        for (n, m) in levels.iter().enumerate() {
            if m.shape() != (target.ranks[n], source.ranks[n]) {
                return Err(Error::Shape(format!("level {n} of map has shape {:?}", m.shape())));
            }
        }
        Ok(SimplicialMap { source, target, levels })
    }

    pub fn identity(a: Arc<SimplicialModule>) -> Self {
        let levels = a.ranks.iter().map(|&r| Matrix::identity(r)).collect();
        SimplicialMap {
            source: a.clone(),
            target: a,
            levels,
        }
    }

    pub fn source(&self) -> &Arc<SimplicialModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialModule> {
        &self.target
    }

    pub fn level(&self, n: usize) -> &Matrix {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Matrix] {
        &self.levels
    }

    pub fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if other.target.ranks != self.source.ranks {
            return Err(Error::Composition("simplicial maps do not compose".into()));
        }
        let levels = self
            .levels
            .iter()
            .zip(&other.levels)
            .map(|(a, b)| a.mul(b))
            .collect::<Result<_>>()?;
        Ok(SimplicialMap {
            source: other.source.clone(),
            target: self.target.clone(),
            levels,
        })
    }

    /// Levelwise `f ⊗ g` between tensor products.
    pub fn tensor(f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
        let source = Arc::new(tensor(&f.source, &g.source)?);
        let target = Arc::new(tensor(&f.target, &g.target)?);
        let levels = f.levels.iter().zip(&g.levels).map(|(a, b)| a.kron(b)).collect();
        SimplicialMap::new(source, target, levels)
    }

    /// Same matrices between explicitly given modules (for instance a tensor
    /// product that was already built).
    pub fn between(&self, source: Arc<SimplicialModule>, target: Arc<SimplicialModule>) -> Result<SimplicialMap> {
        SimplicialMap::new(source, target, self.levels.clone())
    }

    /// Violations of `f d_i = d_i f` and `f s_i = s_i f`.
    pub fn check(&self) -> VerificationReport {
        let mut report = VerificationReport::new(
            "simplicial-map",
            vec![self.source.name.clone(), self.target.name.clone()],
            self.max_degree(),
        );
        let d = self.max_degree();
        let src = &self.source;
        let tgt = &self.target;
        for n in 1..=d {
            for i in 0..=n {
                let lhs = self.levels[n - 1].mul(&src.faces[n][i]).unwrap();
                let rhs = tgt.faces[n][i].mul(&self.levels[n]).unwrap();
                report.compare_matrices(n, &lhs, &rhs, &|j| format!("d_{i} on {}", src.labels[n][j]), &|k| {
                    tgt.labels[n - 1][k].clone()
                });
            }
        }
        for n in 0..d {
            for i in 0..=n {
                let lhs = self.levels[n + 1].mul(&src.degeneracies[n][i]).unwrap();
                let rhs = tgt.degeneracies[n][i].mul(&self.levels[n]).unwrap();
                report.compare_matrices(n, &lhs, &rhs, &|j| format!("s_{i} on {}", src.labels[n][j]), &|k| {
                    tgt.labels[n + 1][k].clone()
                });
            }
        }
        report
    }

    /// Entrywise comparison with another map between modules of the same
    /// shape.
    pub fn compare(&self, other: &SimplicialMap, check: &str) -> VerificationReport {
        let d = self.max_degree().min(other.max_degree());
        let mut report = VerificationReport::new(check, vec![self.source.name.clone(), self.target.name.clone()], d);
        if self.source.ranks[..=d] != other.source.ranks[..=d] || self.target.ranks[..=d] != other.target.ranks[..=d] {
            report.fail_with("compared maps have different endpoints", 0);
            return report;
        }
        for n in 0..=d {
            let src = &self.source.labels[n];
            let tgt = &self.target.labels[n];
            report.compare_matrices(n, &self.levels[n], &other.levels[n], &|j| src[j].clone(), &|i| tgt[i].clone());
        }
        report
    }

    pub fn check_identity(&self, check: &str) -> VerificationReport {
        self.compare(&SimplicialMap::identity(self.source.clone()), check)
    }
}

/// The symmetry `A ⊗ B -> B ⊗ A`, a permutation at each level.
pub fn swap(a: &SimplicialModule, b: &SimplicialModule) -> Result<SimplicialMap> {
    let ab = Arc::new(tensor(a, b)?);
    let ba = Arc::new(tensor(b, a)?);
    swap_between(a, b, ab, ba)
}

pub(crate) fn swap_between(
    a: &SimplicialModule,
    b: &SimplicialModule,
    ab: Arc<SimplicialModule>,
    ba: Arc<SimplicialModule>,
) -> Result<SimplicialMap> {
    let levels = (0..=a.max_degree())
        .map(|n| {
            let (ra, rb) = (a.ranks[n], b.ranks[n]);
            let images: Vec<usize> = (0..ra * rb).map(|k| (k % rb) * ra + k / rb).collect();
            Matrix::from_basis_map(ra * rb, &images)
        })
        .collect();
    SimplicialMap::new(ab, ba, levels)
}

/// `id_X ⊗ σ_{Y,Z} ⊗ id_W: X⊗Y⊗Z⊗W -> X⊗Z⊗Y⊗W`, with the four-fold tensors
/// given explicitly (row-major order makes the bracketing irrelevant).
pub fn middle_swap(
    x: &SimplicialModule,
    y: &SimplicialModule,
    z: &SimplicialModule,
    w: &SimplicialModule,
    source: Arc<SimplicialModule>,
    target: Arc<SimplicialModule>,
) -> Result<SimplicialMap> {
    let levels = (0..=x.max_degree())
        .map(|n| {
            let (rx, ry, rz, rw) = (x.ranks[n], y.ranks[n], z.ranks[n], w.ranks[n]);
            let total = rx * ry * rz * rw;
            let images: Vec<usize> = (0..total)
                .map(|k| {
                    let iw = k % rw;
                    let iz = (k / rw) % rz;
                    let iy = (k / (rw * rz)) % ry;
                    let ix = k / (rw * rz * ry);
                    ((ix * rz + iz) * ry + iy) * rw + iw
                })
                .collect();
            Matrix::from_basis_map(total, &images)
        })
        .collect();
    SimplicialMap::new(source, target, levels)
}

/// The map `Z[Δ^p] -> Z[Δ^q]` induced by postcomposition with `θ: [p] -> [q]`.
pub fn induced_by_delta(theta: &DeltaMorphism, max_degree: usize) -> Result<SimplicialMap> {
    let src = Arc::new(free_on_standard_simplex(theta.source_rank(), max_degree));
    let tgt = Arc::new(free_on_standard_simplex(theta.target_rank(), max_degree));
    let levels = (0..=max_degree)
        .map(|n| {
            let target_basis = DeltaMorphism::all(n, theta.target_rank());
            let index: HashMap<&[usize], usize> =
                target_basis.iter().enumerate().map(|(k, m)| (m.values(), k)).collect();
            let images: Vec<usize> = DeltaMorphism::all(n, theta.source_rank())
                .iter()
                .map(|x| index[compose(theta, x).expect("ranks agree").values()])
                .collect();
            Matrix::from_basis_map(target_basis.len(), &images)
        })
        .collect();
    SimplicialMap::new(src, tgt, levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_is_constant() {
        let a = free_on_standard_simplex(0, 4);
        assert!(a.ranks().iter().all(|&r| r == 1));
        for n in 1..=4 {
            for i in 0..=n {
                assert!(a.face(n, i).is_identity());
            }
        }
    }

    #[test]
    fn interval_ranks() {
        let a = free_on_standard_simplex(1, 5);
        for n in 0..=5 {
            assert_eq!(a.rank(n), n + 2);
        }
    }

    #[test]
    fn triangle_level_three() {
        // monotone maps [3] -> [2]: choose 3 values among 4+2 slots, C(6,2) = 15
        let a = free_on_standard_simplex(2, 3);
        assert_eq!(a.rank(3), 15);
    }

    #[test]
    fn nerve_of_z2() {
        let m = FiniteMonoid::cyclic(2);
        let a = free_on_nerve(&m, 3);
        assert_eq!(a.ranks(), &[1, 2, 4, 8]);
        // d_1 (a, b) = (ab): (1,1) has index 3 and lands on (0)
        assert_eq!(a.face(2, 1).column(3), &[(0, Int::from(1))]);
        assert_eq!(a.face(2, 1).column(1), &[(1, Int::from(1))]);
        assert!(a.validate().passed());
    }

    #[test]
    fn trivial_nerve_ranks() {
        let a = free_on_nerve(&FiniteMonoid::trivial(), 3);
        assert!(a.ranks().iter().all(|&r| r == 1));
    }

    #[test]
    fn bad_tables_rejected() {
        // no unit
        assert!(FiniteMonoid::new("x", vec![vec![0, 0], vec![0, 0]]).is_err());
        // not associative: a*b = b*a = a, a*a = b ... with unit missing too
        assert!(FiniteMonoid::new("y", vec![vec![1, 0], vec![1, 1]]).is_err());
        assert!(FiniteMonoid::new("z", vec![vec![0, 2]]).is_err());
    }

    #[test]
    fn validate_constructors() {
        assert!(free_on_standard_simplex(2, 4).validate().passed());
        assert!(free_on_standard_simplex(3, 4).validate().passed());
    }

    #[test]
    fn corrupted_face_names_clause() {
        let a = free_on_standard_simplex(2, 3).with_face_entry(2, 0, 0, 0, 5).unwrap();
        let r = a.validate();
        assert!(r.failed());
        assert!(r.witnesses.iter().any(|w| w.basis.starts_with("d_i d_j = d_{j-1} d_i")));
    }

    #[test]
    fn tensor_ranks_and_unit() {
        let a = free_on_standard_simplex(1, 3);
        let t = tensor(&a, &a).unwrap();
        assert_eq!(t.rank(1), 9);
        let u = tensor(&a, &constant_z(3)).unwrap();
        for n in 0..=3 {
            for i in 0..=n.max(1).min(n) {
                if n > 0 {
                    assert_eq!(u.face(n, i), a.face(n, i));
                }
            }
        }
        assert!(t.validate().passed());
    }

    #[test]
    fn swap_is_involution() {
        let a = free_on_standard_simplex(1, 3);
        let b = free_on_standard_simplex(2, 3);
        let s1 = swap(&a, &b).unwrap();
        let s2 = swap(&b, &a).unwrap();
        let c = s2.after(&s1).unwrap();
        assert!(c.levels().iter().all(Matrix::is_identity));
        assert!(s1.check().passed());
    }

    #[test]
    fn swap_with_point_is_identity() {
        let a = free_on_standard_simplex(1, 3);
        let s = swap(&a, &free_on_standard_simplex(0, 3)).unwrap();
        assert!(s.level(1).is_identity());
    }

    #[test]
    fn operator_matches_precomposition() {
        let a = free_on_standard_simplex(2, 3);
        let theta = DeltaMorphism::new(3, vec![0, 0, 2]).unwrap();
        let m = a.operator(&theta).unwrap();
        assert_eq!(m.shape(), (a.rank(2), a.rank(3)));
        // basis [0123]... maps [3] -> [2]; pick x = (0,1,1,2), x∘θ = (0,0,1)
        let x = DeltaMorphism::new(2, vec![0, 1, 1, 2]).unwrap();
        let xi = DeltaMorphism::all(3, 2).iter().position(|m| *m == x).unwrap();
        let y = compose(&x, &theta).unwrap();
        let yi = DeltaMorphism::all(2, 2).iter().position(|m| *m == y).unwrap();
        assert_eq!(m.column(xi), &[(yi, Int::from(1))]);
    }

    #[test]
    fn serialization_is_deterministic() {
        let a = free_on_standard_simplex(1, 1);
        let s = a.serialize();
        assert_eq!(s, a.serialize());
        assert!(s.starts_with("simplicial-module delta:1\nmax-degree 1\nranks 2 3\n"));
    }
}
