//! Quantum Lie algebra structure on Y-D submodules of `H̄`.
//!
//! For a left Y-D submodule `𝓛 ⊂ H̄_L` the braiding and bracket are
//! `τ_q(X̄⊗Ȳ) = ad_{X₁}Ȳ ⊗ X̄₂` and `[X̄, Ȳ]_q = ad_{X−ε(X)1}Ȳ`.
//! Both are stored as structure constants in a chosen basis, and the
//! braid relation, braided anticommutativity and the three braided
//! Jacobi identities are certified on basis triples.

use crate::coalgebra::Report;
use crate::hopf::{self, ad_left, ad_right, bar, legs_by_left, legs_by_right, Elem, HResult, HopfError, HopfOps, Side, Tensor};
use crate::linalg::{sparse_add_scaled, sparse_add_term, sparse_coordinates, SparseVec};
use crate::scalar::{render, Field, Scalar, ScalarError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QLieError {
    #[error("basis is not closed: {0}")]
    NotClosed(String),
    #[error("basis vectors are linearly dependent")]
    Dependent,
    #[error("pole at the specialization point: {0}")]
    Pole(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

impl From<ScalarError> for QLieError {
    fn from(e: ScalarError) -> Self {
        QLieError::Pole(e.to_string())
    }
}

/// Multi-index tensor over the basis of `𝓛`.
pub type MultiVec = SparseVec<Vec<usize>>;

/// Braiding and bracket constants on a basis `b_0..b_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QLieStructure {
    pub side: Side,
    pub field: Field,
    pub labels: Vec<String>,
    /// `braiding[i][j]` is `τ(b_i⊗b_j)` as coefficients on `b_k⊗b_l` at `k*n + l`.
    pub braiding: Vec<Vec<Vec<Scalar>>>,
    /// `bracket[i][j]` is `[b_i, b_j]` in coordinates.
    pub bracket: Vec<Vec<Vec<Scalar>>>,
}

fn coords<M: Ord + Clone>(basis: &[Elem<M>], v: &Elem<M>, what: impl Fn() -> String) -> Result<Vec<Scalar>, QLieError> {
    if v.is_empty() {
        return Ok(vec![Scalar::zero(); basis.len()]);
    }
    sparse_coordinates(basis, v).ok_or_else(|| QLieError::NotClosed(what()))
}

/// Coordinates of `t ∈ 𝓛⊗𝓛` on `b_k⊗b_l`.
fn tensor_coords<M: Ord + Clone>(basis: &[Elem<M>], t: &Tensor<M>, what: impl Fn() -> String) -> Result<Vec<Scalar>, QLieError> {
    let n = basis.len();
    let mut rows: Vec<Elem<M>> = vec![Elem::new(); n];
    for (m, left) in legs_by_right(t) {
        let a = coords(basis, &left, &what)?;
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                sparse_add_term(&mut rows[k], m.clone(), c);
            }
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for r in &rows {
        out.extend(coords(basis, r, &what)?);
    }
    Ok(out)
}

fn tensor_of<M: Ord + Clone>(a: &Elem<M>, b: &Elem<M>) -> Tensor<M> {
    let mut t = Tensor::new();
    for (x, s) in a {
        for (y, u) in b {
            sparse_add_term(&mut t, (x.clone(), y.clone()), &(s * u));
        }
    }
    t
}

impl QLieStructure {
    /// Structure on the span of `basis` (elements of `H̄`; unit terms are dropped).
    pub fn build<H: HopfOps>(h: &H, side: Side, basis: &[Elem<H::Mon>], labels: Vec<String>) -> Result<QLieStructure, QLieError> {
        let basis: Vec<Elem<H::Mon>> = basis.iter().map(|b| bar(h, b)).collect();
        let n = basis.len();
        let mut span = crate::linalg::SparseSpan::new();
        for b in &basis {
            if !span.insert(b) {
                return Err(QLieError::Dependent);
            }
        }
        let eps: Vec<Scalar> = basis.iter().map(|b| hopf::counit(h, b)).collect();
        let mut braiding = vec![vec![Vec::new(); n]; n];
        let mut bracket = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let at = || format!("{}, {}", labels[i], labels[j]);
                let (t, br) = match side {
                    Side::Left => {
                        // τ(X̄⊗Ȳ) = Σ ad_{X₁}Ȳ ⊗ X̄₂
                        let mut t = Tensor::new();
                        for (x2, x1) in legs_by_right(&hopf::coproduct(h, &basis[i])?) {
                            if x2 == h.one() {
                                continue;
                            }
                            let a = ad_left(h, &x1, &basis[j])?;
                            sparse_add_scaled(&mut t, &tensor_of(&a, &hopf::mon(x2)), &Scalar::one());
                        }
                        let br = hopf::sub(&ad_left(h, &basis[i], &basis[j])?, &hopf::scale(&basis[j], &eps[i]));
                        (t, br)
                    }
                    Side::Right => {
                        // τ^R(X̄⊗Ȳ) = Σ Ȳ₁ ⊗ ad^R_{Y₂}X̄
                        let mut t = Tensor::new();
                        for (y1, y2) in legs_by_left(&hopf::coproduct(h, &basis[j])?) {
                            if y1 == h.one() {
                                continue;
                            }
                            let a = ad_right(h, &basis[i], &y2)?;
                            sparse_add_scaled(&mut t, &tensor_of(&hopf::mon(y1), &a), &Scalar::one());
                        }
                        let br = hopf::sub(&ad_right(h, &basis[i], &basis[j])?, &hopf::scale(&basis[i], &eps[j]));
                        (t, br)
                    }
                };
                braiding[i][j] = tensor_coords(&basis, &t, at)?;
                bracket[i][j] = coords(&basis, &br, at)?;
            }
        }
        Ok(QLieStructure { side, field: h.field().clone(), labels, braiding, bracket })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn pair_terms<'a>(&self, v: &'a [Scalar]) -> impl Iterator<Item = (usize, usize, &'a Scalar)> + 'a {
        let n = self.dim();
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (k / n, k % n, c))
    }

    /// `τ` acting on slots `pos, pos+1`.
    pub fn tau_at(&self, v: &MultiVec, pos: usize) -> MultiVec {
        let mut out = MultiVec::new();
        for (idx, c) in v {
            for (k, l, s) in self.pair_terms(&self.braiding[idx[pos]][idx[pos + 1]]) {
                let mut ni = idx.clone();
                ni[pos] = k;
                ni[pos + 1] = l;
                sparse_add_term(&mut out, ni, &(c * s));
            }
        }
        out
    }

    /// Bracket merging slots `pos, pos+1`.
    pub fn bracket_at(&self, v: &MultiVec, pos: usize) -> MultiVec {
        let mut out = MultiVec::new();
        for (idx, c) in v {
            for (k, s) in self.bracket[idx[pos]][idx[pos + 1]].iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let mut ni = idx[..pos].to_vec();
                ni.push(k);
                ni.extend_from_slice(&idx[pos + 2..]);
                sparse_add_term(&mut out, ni, &(c * s));
            }
        }
        out
    }

    fn basis_tensor(idx: &[usize]) -> MultiVec {
        let mut v = MultiVec::new();
        v.insert(idx.to_vec(), Scalar::one());
        v
    }

    /// Reverse all tensor factors: a right structure becomes a left one.
    pub fn mirrored(&self) -> QLieStructure {
        let n = self.dim();
        let mut braiding = vec![vec![vec![Scalar::zero(); n * n]; n]; n];
        let mut bracket = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for (k, l, c) in self.pair_terms(&self.braiding[j][i]) {
                    braiding[i][j][l * n + k] = c.clone();
                }
                bracket[i][j] = self.bracket[j][i].clone();
            }
        }
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        QLieStructure { side, field: self.field.clone(), labels: self.labels.clone(), braiding, bracket }
    }

    /// Braid relation, anticommutativity on `ker(id−τ)`, and qJ1–qJ3.
    /// Right structures are checked through their mirror image.
    pub fn certify(&self) -> Report {
        if self.side == Side::Right {
            return self.mirrored().certify();
        }
        let mut rep = Report::default();
        let n = self.dim();
        let sub = |a: &MultiVec, b: &MultiVec| hopf::sub(a, b);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let x = Self::basis_tensor(&[i, j, k]);
                    let at = || format!("({}, {}, {})", self.labels[i], self.labels[j], self.labels[k]);
                    let l = self.tau_at(&self.tau_at(&self.tau_at(&x, 0), 1), 0);
                    let r = self.tau_at(&self.tau_at(&self.tau_at(&x, 1), 0), 1);
                    rep.check(l == r, "braid relation", at);
                    // qJ1: [[x,y],z] = [x,[y,z]] ∘ ((id−τ)⊗id)
                    let l = self.bracket_at(&self.bracket_at(&x, 0), 0);
                    let r = self.bracket_at(&self.bracket_at(&sub(&x, &self.tau_at(&x, 0)), 1), 0);
                    rep.check(l == r, "qJ1", || format!("{}: {} vs {}", at(), self.format_multi(&l), self.format_multi(&r)));
                    // qJ2: τ(id⊗[,]) = ([,]⊗id)(id⊗τ)(τ⊗id)
                    let l = self.tau_at(&self.bracket_at(&x, 1), 0);
                    let r = self.bracket_at(&self.tau_at(&self.tau_at(&x, 0), 1), 0);
                    rep.check(l == r, "qJ2", || format!("{}: {} vs {}", at(), self.format_multi(&l), self.format_multi(&r)));
                    // qJ3: τ([,]⊗id) − (id⊗[,])(τ⊗id)(id⊗τ) = ([,]⊗id)(id⊗τ)((id−τ²)⊗id)
                    let l = sub(&self.tau_at(&self.bracket_at(&x, 0), 0), &self.bracket_at(&self.tau_at(&self.tau_at(&x, 1), 0), 1));
                    let t2 = self.tau_at(&self.tau_at(&x, 0), 0);
                    let r = self.bracket_at(&self.tau_at(&sub(&x, &t2), 1), 0);
                    rep.check(l == r, "qJ3", || format!("{}: {} vs {}", at(), self.format_multi(&l), self.format_multi(&r)));
                }
            }
        }
        // [,] vanishes on ker(id − τ)
        let mut m = crate::linalg::Matrix::zeros(n * n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (r, c) in self.braiding[i][j].iter().enumerate() {
                    m.set(r, i * n + j, -c);
                }
                m.add_to(i * n + j, i * n + j, &Scalar::one());
            }
        }
        for v in m.kernel().basis() {
            let mut out = vec![Scalar::zero(); n];
            for (p, c) in v.iter().enumerate() {
                for (k, s) in self.bracket[p / n][p % n].iter().enumerate() {
                    out[k] = &out[k] + &(c * s);
                }
            }
            rep.check(out.iter().all(Scalar::is_zero), "braided anticommutativity", || crate::linalg::format_dense(v, &self.pair_labels(), &self.field));
        }
        rep
    }

    /// `[X̄,Ȳ] = overline(μ(δ⊗δ)(id−τ)(X̄⊗Ȳ))`, checked against the algebra.
    /// The same formula holds for right structures.
    pub fn check_factorization<H: HopfOps>(&self, h: &H, basis: &[Elem<H::Mon>]) -> HResult<Report> {
        let n = self.dim();
        let basis: Vec<Elem<H::Mon>> = basis.iter().map(|b| bar(h, b)).collect();
        let delta = |x: &Elem<H::Mon>| hopf::sub(x, &hopf::scale(&hopf::unit_elem(h), &hopf::counit(h, x)));
        let mut rep = Report::default();
        for i in 0..n {
            for j in 0..n {
                let mut v = hopf::mul(h, &delta(&basis[i]), &delta(&basis[j]))?;
                for (k, l, c) in self.pair_terms(&self.braiding[i][j]) {
                    sparse_add_scaled(&mut v, &hopf::mul(h, &delta(&basis[k]), &delta(&basis[l]))?, &-c);
                }
                let mut want = Elem::new();
                for (k, c) in self.bracket[i][j].iter().enumerate() {
                    sparse_add_scaled(&mut want, &basis[k], c);
                }
                rep.check(bar(h, &v) == want, "bracket factorization", || format!("{}, {}", self.labels[i], self.labels[j]));
            }
        }
        Ok(rep)
    }

    /// Substitute the deformation parameter.
    pub fn specialize(&self, value: &Scalar) -> Result<QLieStructure, QLieError> {
        let sp = |v: &Vec<Scalar>| v.iter().map(|c| c.specialize(value)).collect::<Result<Vec<_>, _>>();
        let map = |t: &Vec<Vec<Vec<Scalar>>>| t.iter().map(|r| r.iter().map(sp).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>();
        let field = match &self.field {
            Field::Function { gaussian: false, .. } => Field::Rational,
            Field::Function { gaussian: true, .. } => Field::Gaussian,
            f => f.clone(),
        };
        Ok(QLieStructure { side: self.side, field, labels: self.labels.clone(), braiding: map(&self.braiding)?, bracket: map(&self.bracket)? })
    }

    /// Specialize, then pass to the quotient by the span of `vanishing`.
    pub fn classical_limit(&self, value: &Scalar, vanishing: &[usize]) -> Result<QLieStructure, QLieError> {
        let sp = self.specialize(value)?;
        let n = self.dim();
        let keep: Vec<usize> = (0..n).filter(|k| !vanishing.contains(k)).collect();
        let m = keep.len();
        let mut braiding = vec![vec![Vec::new(); m]; m];
        let mut bracket = vec![vec![Vec::new(); m]; m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                bracket[a][b] = keep.iter().map(|&k| sp.bracket[i][j][k].clone()).collect();
                let mut t = vec![Scalar::zero(); m * m];
                for (c, &k) in keep.iter().enumerate() {
                    for (d, &l) in keep.iter().enumerate() {
                        t[c * m + d] = sp.braiding[i][j][k * n + l].clone();
                    }
                }
                braiding[a][b] = t;
            }
        }
        Ok(QLieStructure { side: sp.side, field: sp.field, labels: keep.iter().map(|&k| self.labels[k].clone()).collect(), braiding, bracket })
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_flip(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| self.braiding[i][j].iter().enumerate().all(|(p, c)| if p == j * n + i { c.is_one() } else { c.is_zero() }))
        })
    }

    fn pair_labels(&self) -> Vec<String> {
        let n = self.dim();
        (0..n * n).map(|p| format!("{}⊗{}", self.labels[p / n], self.labels[p % n])).collect()
    }

    pub fn format_bracket(&self, i: usize, j: usize) -> String {
        crate::linalg::format_dense(&self.bracket[i][j], &self.labels, &self.field)
    }

    pub fn format_braiding(&self, i: usize, j: usize) -> String {
        crate::linalg::format_dense(&self.braiding[i][j], &self.pair_labels(), &self.field)
    }

    fn format_multi(&self, v: &MultiVec) -> String {
        let terms: Vec<(&Scalar, String)> = v
            .iter()
            .map(|(idx, c)| (c, idx.iter().map(|&k| self.labels[k].as_str()).collect::<Vec<_>>().join("⊗")))
            .collect();
        crate::linalg::format_terms(terms, &self.field)
    }

    /// Mutated copy for negative controls.
    pub fn with_bracket_shift(&self, i: usize, j: usize, k: usize, c: Scalar) -> QLieStructure {
        let mut q = self.clone();
        q.bracket[i][j][k] = &q.bracket[i][j][k] + &c;
        q
    }

    pub fn to_doc(&self) -> QLieDoc {
        let n = self.dim();
        let mut braiding = Vec::new();
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let terms = self
                    .pair_terms(&self.braiding[i][j])
                    .map(|(k, l, c)| PairTerm { left: self.labels[k].clone(), right: self.labels[l].clone(), coeff: render(c, &self.field) })
                    .collect();
                braiding.push(BraidingEntry { left: self.labels[i].clone(), right: self.labels[j].clone(), terms });
                let terms = self.bracket[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.labels[k].clone(), render(c, &self.field)))
                    .collect();
                bracket.push(BracketEntry { left: self.labels[i].clone(), right: self.labels[j].clone(), terms });
            }
        }
        QLieDoc { side: format!("{:?}", self.side).to_lowercase(), field: self.field.to_string(), basis: self.labels.clone(), braiding, bracket }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairTerm {
    pub left: String,
    pub right: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BraidingEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<PairTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: BTreeMap<String, String>,
}

/// JSON layout of a quantum Lie algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QLieDoc {
    pub side: String,
    pub field: String,
    pub basis: Vec<String>,
    pub braiding: Vec<BraidingEntry>,
    pub bracket: Vec<BracketEntry>,
}

/// Structure on all of `H̄` for a finite table.
pub fn universal_qlie(h: &crate::hopf::HopfAlgebra, side: Side) -> Result<QLieStructure, QLieError> {
    let idx = h.bar_indices();
    let basis: Vec<Elem<usize>> = idx.iter().map(|&i| hopf::mon(i)).collect();
    let labels = idx.iter().map(|&i| h.label(i).to_string()).collect();
    QLieStructure::build(h, side, &basis, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::parse_elem;
    use crate::presentations::{finite, u_b_plus, uq_b_plus, uq_sl2};

    #[test]
    fn sweedler_universal() {
        let h = finite::sweedler();
        for side in [Side::Left, Side::Right] {
            let q = universal_qlie(&h, side).unwrap();
            assert_eq!(q.dim(), 3);
            let rep = q.certify();
            assert!(rep.ok(), "{:?}", rep.violations);
            assert!(q.check_factorization(&h, &h.bar_indices().iter().map(|&i| hopf::mon(i)).collect::<Vec<_>>()).unwrap().ok());
        }
    }

    #[test]
    fn group_algebras_certify() {
        for h in [finite::group_algebra_z4(), finite::group_algebra_s3()] {
            let q = universal_qlie(&h, Side::Left).unwrap();
            assert!(q.certify().ok());
        }
    }

    #[test]
    fn mutated_bracket_fails() {
        let q = universal_qlie(&finite::sweedler(), Side::Left).unwrap();
        let rep = q.with_bracket_shift(0, 1, 2, Scalar::one()).certify();
        assert!(rep.violations.iter().any(|v| v.axiom == "qJ1"));
    }

    #[test]
    fn central_primitive_flip_braiding() {
        let h = u_b_plus(4);
        let e = parse_elem(&h, "E").unwrap();
        let q = QLieStructure::build(&h, Side::Left, &[e.clone()], vec!["E".into()]).unwrap();
        assert!(q.is_flip());
        let hh = parse_elem(&h, "H").unwrap();
        let q = QLieStructure::build(&h, Side::Left, &[hh, e], vec!["H".into(), "E".into()]).unwrap();
        assert!(q.is_flip());
        // [H, E] = E for primitive generators
        assert_eq!(q.bracket[0][1], vec![Scalar::zero(), Scalar::one()]);
        assert!(q.certify().ok());
        let qr = QLieStructure::build(&h, Side::Right, &[parse_elem(&h, "H").unwrap(), parse_elem(&h, "E").unwrap()], vec!["H".into(), "E".into()]).unwrap();
        assert!(qr.certify().ok());
    }

    #[test]
    fn not_closed_is_reported() {
        let h = uq_b_plus(6);
        let x = parse_elem(&h, "X*g").unwrap();
        assert!(matches!(QLieStructure::build(&h, Side::Left, &[x], vec!["Xg".into()]), Err(QLieError::NotClosed(_))));
    }

    #[test]
    fn sl2_four_dim_structure() {
        let h = uq_sl2(6);
        let basis: Vec<_> = ["K", "E", "F*K", "E*F - q^2*F*E"].iter().map(|t| parse_elem(&h, t).unwrap()).collect();
        let labels = ["u00", "u10", "u01", "u11"].iter().map(|s| s.to_string()).collect();
        let q = QLieStructure::build(&h, Side::Left, &basis, labels).unwrap();
        assert!(q.certify().ok(), "{:?}", q.certify().violations);
        assert!(q.check_factorization(&h, &basis).unwrap().ok());
        assert!(!q.specialize(&Scalar::one()).unwrap().is_flip());
        let one = q.classical_limit(&Scalar::one(), &[0]).unwrap();
        assert!(one.is_flip());
        assert_eq!(one.bracket[0][1], vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
        assert!(one.certify().ok());
        let doc = q.to_doc();
        let back: QLieDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
    }
}
