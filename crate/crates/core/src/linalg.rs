//! Dense exact linear algebra and sparse echelon spans.

use crate::scalar::{parse_expr, scalar_atom, ExprValue, Field, Scalar, ScalarError};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    Ambient(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix acting on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| format!("{s:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.iter().flatten().cloned().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(dim: usize, cols: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(dim, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), dim, "column length");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }
    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let k = r * self.cols + c;
        self.data[k] = &self.data[k] + v;
    }
    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    t.set(c, r, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    /// Kronecker product, matching the index convention `i*n + j` for `e_i⊗e_j`.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        let b = o.get(k, l);
                        if !b.is_zero() {
                            out.set(i * o.rows + k, j * o.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form; pivots are chosen in the first nonzero
    /// column, taking the earliest row that has a nonzero entry there.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_rows(&mut rows, self.cols);
        rows.truncate(pivots.len());
        let m = if rows.is_empty() { Matrix::zeros(0, self.cols) } else { Matrix::from_rows(&rows) };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space of the map `v ↦ M v`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vecs: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(k, f).neg();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.cols, &vecs)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.rows, &self.transpose().row_vectors())
    }

    /// Some `x` with `M x = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length");
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(rhs[i].clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = rows[k][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let inv: Vec<Vec<Scalar>> = rows.iter().take(n).map(|r| r[n..].to_vec()).collect();
        Ok(Matrix::from_rows(&inv))
    }
}

/// In-place RREF on the first `ncols` columns; returns pivot columns.
fn rref_rows(rows: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `𝕂^ambient` with its basis in reduced row-echelon form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace::from_vectors(ambient, &Matrix::identity(ambient).row_vectors())
    }

    pub fn from_vectors(ambient: usize, vecs: &[Vec<Scalar>]) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = vecs.to_vec();
        assert!(rows.iter().all(|v| v.len() == ambient), "vector length differs from ambient {ambient}");
        let pivots = rref_rows(&mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace { ambient, basis: rows, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_matrix(&self) -> Matrix {
        if self.basis.is_empty() {
            Matrix::zeros(0, self.ambient)
        } else {
            Matrix::from_rows(&self.basis)
        }
    }

    /// `v` minus its component along the echelon basis.
    pub fn residual(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, b) in w.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &(&f * b);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        self.residual(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates with respect to the echelon basis, if `v` is a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != o.ambient {
            return Err(LinalgError::Ambient(self.ambient, o.ambient));
        }
        let mut all = self.basis.clone();
        all.extend(o.basis.iter().cloned());
        Ok(Subspace::from_vectors(self.ambient, &all))
    }

    pub fn intersect(&self, o: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != o.ambient {
            return Err(LinalgError::Ambient(self.ambient, o.ambient));
        }
        if self.is_zero() || o.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let mut cols = self.basis.clone();
        cols.extend(o.basis.iter().cloned());
        let k = Matrix::from_columns(self.ambient, &cols).kernel();
        let a = self.dim();
        let vecs: Vec<Vec<Scalar>> = k
            .basis
            .iter()
            .map(|c| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (coef, row) in c[..a].iter().zip(&self.basis) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(row) {
                        *x = &*x + &(coef * b);
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, &vecs))
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map domain");
        let vecs: Vec<Vec<Scalar>> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::from_vectors(m.rows(), &vecs)
    }
}

/// `𝕂^ambient / S` with deterministic representatives.
///
/// Representatives are the standard basis vectors `e_j` chosen greedily in
/// increasing `j`, skipping any `e_j` that lies in `S + span{e_0..e_{j-1}}`.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: usize,
    sub: Subspace,
    reps: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn new(ambient: usize, sub: &Subspace) -> Result<QuotientSpace, LinalgError> {
        if sub.ambient != ambient {
            return Err(LinalgError::Ambient(ambient, sub.ambient));
        }
        // echelon basis whose pivots are the last nonzero columns
        let mut rev: Vec<Vec<Scalar>> = sub.basis.iter().map(|v| v.iter().rev().cloned().collect()).collect();
        let rp = rref_rows(&mut rev, ambient);
        rev.truncate(rp.len());
        let high: Vec<usize> = rp.iter().map(|&c| ambient - 1 - c).collect();
        let rows: Vec<Vec<Scalar>> = rev.iter().map(|v| v.iter().rev().cloned().collect()).collect();
        let reps: Vec<usize> = (0..ambient).filter(|j| !high.contains(j)).collect();
        let q = reps.len();
        let mut projection = Matrix::zeros(q, ambient);
        for j in 0..ambient {
            let mut w = vec![Scalar::zero(); ambient];
            w[j] = Scalar::one();
            for (row, &p) in rows.iter().zip(&high) {
                if w[p].is_zero() {
                    continue;
                }
                let f = w[p].clone();
                for (x, b) in w.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x = &*x - &(&f * b);
                    }
                }
            }
            for (k, &r) in reps.iter().enumerate() {
                if !w[r].is_zero() {
                    projection.set(k, j, w[r].clone());
                }
            }
        }
        let mut section = Matrix::zeros(ambient, q);
        for (k, &r) in reps.iter().enumerate() {
            section.set(r, k, Scalar::one());
        }
        Ok(QuotientSpace { ambient, sub: sub.clone(), reps, projection, section })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.reps.len()
    }
    pub fn subspace(&self) -> &Subspace {
        &self.sub
    }
    /// Ambient indices of the representative basis vectors.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }
    pub fn section(&self) -> &Matrix {
        &self.section
    }
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }
    pub fn lift(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.section.apply(u)
    }
}

/// Sparse vector keyed by an ordered basis type.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

pub fn sparse_add_scaled<K: Ord + Clone>(acc: &mut SparseVec<K>, v: &SparseVec<K>, s: &Scalar) {
    if s.is_zero() {
        return;
    }
    for (k, x) in v {
        sparse_add_term(acc, k.clone(), &(x * s));
    }
}

pub fn sparse_add_term<K: Ord>(acc: &mut SparseVec<K>, k: K, x: &Scalar) {
    if x.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + x;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Incrementally built echelon basis of sparse vectors.
///
/// Each row has its smallest key as pivot, pivot coefficient one, and no
/// other row is supported on that key.
#[derive(Clone, Debug)]
pub struct SparseSpan<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SparseSpan<K> {
    fn default() -> Self {
        SparseSpan { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec<K>>>(vs: I) -> Self
    where
        K: 'a,
    {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut w = v.clone();
        let hits: Vec<K> = w.keys().filter(|k| self.rows.contains_key(*k)).cloned().collect();
        for p in hits {
            if let Some(f) = w.get(&p).cloned() {
                sparse_add_scaled(&mut w, &self.rows[&p], &f.neg());
            }
        }
        w
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let w = self.reduce(v);
        let Some((p, lead)) = w.iter().next().map(|(k, x)| (k.clone(), x.clone())) else { return false };
        let inv = lead.inv().expect("nonzero lead");
        let w: SparseVec<K> = w.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(f) = row.get(&p).cloned() {
                sparse_add_scaled(row, &w, &f.neg());
            }
        }
        self.rows.insert(p, w);
        true
    }

    pub fn basis(&self) -> Vec<SparseVec<K>> {
        self.rows.values().cloned().collect()
    }

    pub fn contains_span(&self, o: &SparseSpan<K>) -> bool {
        o.rows.values().all(|v| self.contains(v))
    }

    pub fn same_span(&self, o: &SparseSpan<K>) -> bool {
        self.dim() == o.dim() && self.contains_span(o)
    }
}

/// Coordinates of `v` in an arbitrary list of sparse vectors, if it lies in their span.
pub fn sparse_coordinates<K: Ord + Clone>(basis: &[SparseVec<K>], v: &SparseVec<K>) -> Option<Vec<Scalar>> {
    let mut keys: Vec<K> = basis.iter().flat_map(|b| b.keys().cloned()).collect();
    keys.extend(v.keys().cloned());
    keys.sort();
    keys.dedup();
    let idx: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut m = Matrix::zeros(keys.len(), basis.len());
    for (j, b) in basis.iter().enumerate() {
        for (k, x) in b {
            m.set(idx[k], j, x.clone());
        }
    }
    let mut rhs = vec![Scalar::zero(); keys.len()];
    for (k, x) in v {
        rhs[idx[k]] = x.clone();
    }
    m.solve(&rhs)
}

/// Value of a linear expression: a scalar, a vector, or an ill-typed combination.
#[derive(Clone, Debug)]
pub enum LinExpr {
    Scalar(Scalar),
    Vector(Vec<Scalar>),
    Invalid(String),
}

impl ExprValue for LinExpr {
    fn from_int(n: num_bigint::BigInt) -> Self {
        LinExpr::Scalar(<Scalar as ExprValue>::from_int(n))
    }
    fn add(&self, o: &Self) -> Self {
        match (self, o) {
            (LinExpr::Scalar(a), LinExpr::Scalar(b)) => LinExpr::Scalar(a + b),
            (LinExpr::Vector(a), LinExpr::Vector(b)) => LinExpr::Vector(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (LinExpr::Invalid(e), _) | (_, LinExpr::Invalid(e)) => LinExpr::Invalid(e.clone()),
            _ => LinExpr::Invalid("cannot add a scalar to a vector".into()),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        match (self, o) {
            (LinExpr::Scalar(a), LinExpr::Scalar(b)) => LinExpr::Scalar(a * b),
            (LinExpr::Scalar(a), LinExpr::Vector(v)) | (LinExpr::Vector(v), LinExpr::Scalar(a)) => {
                LinExpr::Vector(v.iter().map(|x| x * a).collect())
            }
            (LinExpr::Invalid(e), _) | (_, LinExpr::Invalid(e)) => LinExpr::Invalid(e.clone()),
            _ => LinExpr::Invalid("cannot multiply two vectors".into()),
        }
    }
    fn neg(&self) -> Self {
        self.mul(&LinExpr::Scalar(Scalar::from_i64(-1)))
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        match o {
            LinExpr::Scalar(b) => Ok(self.mul(&LinExpr::Scalar(b.inv().map_err(|e| e.to_string())?))),
            _ => Err("cannot divide by a vector".into()),
        }
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        match self {
            LinExpr::Scalar(a) => Ok(LinExpr::Scalar(a.pow(e).map_err(|e| e.to_string())?)),
            _ => Err("cannot raise a vector to a power".into()),
        }
    }
}

/// Parse `coeff*label + ...` into a dense vector of length `dim`.
///
/// `resolve` maps a label to its basis index; bracketed labels are passed
/// with their brackets and without whitespace.
pub fn parse_dense_vector<F>(text: &str, dim: usize, field: &Field, resolve: F) -> Result<Vec<Scalar>, ScalarError>
where
    F: Fn(&str) -> Option<usize>,
{
    let atom = |name: &str, bracket: bool| -> Option<Result<LinExpr, String>> {
        let key = if bracket {
            format!("[{}]", name.chars().filter(|c| !c.is_whitespace()).collect::<String>())
        } else {
            if let Some(s) = scalar_atom(field, name) {
                return Some(Ok(LinExpr::Scalar(s)));
            }
            name.to_string()
        };
        resolve(&key).map(|i| {
            let mut v = vec![Scalar::zero(); dim];
            v[i] = Scalar::one();
            Ok(LinExpr::Vector(v))
        })
    };
    match parse_expr(text, atom)? {
        LinExpr::Vector(v) => Ok(v),
        LinExpr::Scalar(s) if s.is_zero() => Ok(vec![Scalar::zero(); dim]),
        LinExpr::Scalar(_) => Err(ScalarError::Syntax { pos: 0, msg: "expected a vector, found a scalar".into() }),
        LinExpr::Invalid(msg) => Err(ScalarError::Syntax { pos: 0, msg }),
    }
}

/// Render `Σ c_i·label_i` in the input syntax accepted by [`parse_dense_vector`].
pub fn format_terms<'a, I>(terms: I, field: &Field) -> String
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let r = crate::scalar::render(c, field);
        let (neg, body) = match r.strip_prefix('-') {
            Some(rest) if !rest.contains(['+', '-']) => (true, rest.to_string()),
            _ => (false, r),
        };
        let coef = if body.contains(['+', '-']) { format!("({body})") } else { body };
        let sep = match (out.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        out.push_str(sep);
        if coef == "1" {
            out.push_str(&label);
        } else {
            out.push_str(&format!("{coef}*{label}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn format_dense(v: &[Scalar], labels: &[String], field: &Field) -> String {
    format_terms(v.iter().zip(labels.iter().cloned()), field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn zero_map_kernel() {
        let k = Matrix::zeros(1, 1).kernel();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn sum_and_intersection_of_axes() {
        let a = Subspace::from_vectors(3, &[vec![s(1), s(0), s(0)]]);
        let b = Subspace::from_vectors(3, &[vec![s(0), s(1), s(0)]]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert!(a.sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_rows(&[vec![s(2), s(1)], vec![s(1), s(1)]]);
        let x = m.solve(&[s(3), s(2)]).unwrap();
        assert_eq!(x, vec![s(1), s(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_rows(&[vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert!(sing.solve(&[s(1), s(0)]).is_none());
        assert_eq!(sing.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn greedy_complement() {
        // S = span{e0 + e2}; greedy keeps e0, e1 and drops e2
        let sub = Subspace::from_vectors(3, &[vec![s(1), s(0), s(1)]]);
        let q = QuotientSpace::new(3, &sub).unwrap();
        assert_eq!(q.representatives(), &[0, 1]);
        assert_eq!(q.project(&[s(0), s(0), s(1)]), vec![s(-1), s(0)]);
    }

    #[test]
    fn sparse_span_basics() {
        let v = |pairs: &[(u32, i64)]| pairs.iter().map(|&(k, x)| (k, s(x))).collect::<SparseVec<u32>>();
        let mut sp = SparseSpan::new();
        assert!(sp.insert(&v(&[(1, 2), (3, 1)])));
        assert!(sp.insert(&v(&[(3, 1), (5, 1)])));
        assert!(!sp.insert(&v(&[(1, 2), (5, -1)])));
        assert!(sp.contains(&v(&[(1, 4), (3, 3), (5, 1)])));
        assert!(!sp.contains(&v(&[(2, 1)])));
        assert_eq!(sp.dim(), 2);
        let c = sparse_coordinates(&[v(&[(1, 1)]), v(&[(1, 1), (2, 1)])], &v(&[(1, 3), (2, 1)])).unwrap();
        assert_eq!(c, vec![s(2), s(1)]);
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
            let rows: Vec<Vec<Scalar>> = v.chunks(c).map(|ch| ch.iter().map(|&x| s(x)).collect()).collect();
            Matrix::from_rows(&rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn rank_nullity(m in arb_matrix(5, 7)) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), 7);
            for v in m.kernel().basis() {
                prop_assert!(m.apply(v).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn grassmann(a in arb_matrix(3, 6), b in arb_matrix(3, 6)) {
            let sa = Subspace::from_vectors(6, &a.row_vectors());
            let sb = Subspace::from_vectors(6, &b.row_vectors());
            let sum = sa.sum(&sb).unwrap();
            let int = sa.intersect(&sb).unwrap();
            prop_assert_eq!(sum.dim() + int.dim(), sa.dim() + sb.dim());
            // brute-force oracle: rank of the stacked matrix
            let mut rows = a.row_vectors();
            rows.extend(b.row_vectors());
            prop_assert_eq!(sum.dim(), Matrix::from_rows(&rows).rank());
            for v in int.basis() {
                prop_assert!(sa.contains(v) && sb.contains(v));
            }
        }

        #[test]
        fn membership_matches_solvability(a in arb_matrix(3, 5), v in proptest::collection::vec(-2i64..3, 5)) {
            let sa = Subspace::from_vectors(5, &a.row_vectors());
            let v: Vec<Scalar> = v.into_iter().map(s).collect();
            let solvable = a.transpose().solve(&v).is_some();
            prop_assert_eq!(sa.contains(&v), solvable);
        }

        #[test]
        fn quotient_roundtrip(a in arb_matrix(3, 6), u in proptest::collection::vec(-2i64..3, 6)) {
            let sa = Subspace::from_vectors(6, &a.row_vectors());
            let q = QuotientSpace::new(6, &sa).unwrap();
            prop_assert_eq!(q.dim(), 6 - sa.dim());
            let u: Vec<Scalar> = u.into_iter().take(q.dim()).map(s).collect();
            prop_assert_eq!(q.project(&q.lift(&u)), u);
            for v in sa.basis() {
                prop_assert!(q.project(v).iter().all(Scalar::is_zero));
            }
        }
    }
}
