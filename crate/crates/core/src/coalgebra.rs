//! Coalgebras given by structure constants.
//!
//! Tensors `e_i⊗e_j` of a space with basis size `n` live at index `i*n + j`.

use crate::bicomodule::{Bicomodule, UniversalBicomodule};
use crate::linalg::{LinalgError, Matrix, Subspace};
use crate::scalar::{parse_scalar, render, Field, Scalar, ScalarError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoalgebraError {
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("bad scalar `{text}`: {source}")]
    Scalar {
        text: String,
        #[source]
        source: ScalarError,
    },
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("map is not a coalgebra morphism: {0}")]
    NotMorphism(String),
    #[error("map is not invertible")]
    NotInvertible,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub at: String,
}

/// Outcome of a validator: empty `violations` means the structure passed.
#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
    pub fn fail(&mut self, axiom: &str, at: String) {
        self.violations.push(Violation { axiom: axiom.to_string(), at });
    }
    pub fn check(&mut self, cond: bool, axiom: &str, at: impl FnOnce() -> String) {
        self.checked += 1;
        if !cond {
            self.fail(axiom, at());
        }
    }
    pub fn merge(&mut self, o: Report) {
        self.checked += o.checked;
        self.violations.extend(o.violations);
    }
}

/// Coproduct terms `(j, k, c)` meaning `c·e_j⊗e_k`.
pub type CoproductTerms = Vec<(usize, usize, Scalar)>;

#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra {
    field: Field,
    labels: Vec<String>,
    delta: Vec<CoproductTerms>,
    eps: Vec<Scalar>,
}

fn normalize_terms(terms: CoproductTerms) -> CoproductTerms {
    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (j, k, c) in terms {
        let e = acc.entry((j, k)).or_insert_with(Scalar::zero);
        *e = &*e + &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, k), c)| (j, k, c)).collect()
}

impl Coalgebra {
    pub fn new(field: Field, labels: Vec<String>, delta: Vec<CoproductTerms>, eps: Vec<Scalar>) -> Coalgebra {
        let n = labels.len();
        assert_eq!(delta.len(), n, "coproduct table size");
        assert_eq!(eps.len(), n, "counit size");
        assert!(delta.iter().flatten().all(|&(j, k, _)| j < n && k < n), "coproduct index out of range");
        Coalgebra { field, labels, delta: delta.into_iter().map(normalize_terms).collect(), eps }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
    pub fn coproduct(&self, i: usize) -> &CoproductTerms {
        &self.delta[i]
    }
    pub fn counit(&self) -> &[Scalar] {
        &self.eps
    }

    /// `Δ` as an `n² × n` matrix.
    pub fn coproduct_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n * n, n);
        for (i, terms) in self.delta.iter().enumerate() {
            for (j, k, c) in terms {
                m.add_to(j * n + k, i, c);
            }
        }
        m
    }

    pub fn apply_coproduct(&self, v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in &self.delta[i] {
                out[j * n + k] = &out[j * n + k] + &(x * c);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        v.iter().zip(&self.eps).fold(Scalar::zero(), |acc, (x, e)| &acc + &(x * e))
    }

    pub fn image_of_coproduct(&self) -> Subspace {
        self.coproduct_matrix().image()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let v = self.apply_coproduct(&unit_vec(n, i));
            (0..n).all(|a| (0..n).all(|b| v[a * n + b] == v[b * n + a]))
        })
    }

    pub fn validate(&self) -> Report {
        let n = self.dim();
        let mut rep = Report::default();
        for i in 0..n {
            let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in &self.delta[i] {
                for (a, b, d) in &self.delta[*j] {
                    let e = lhs.entry((*a, *b, *k)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * d);
                }
                for (a, b, d) in &self.delta[*k] {
                    let e = rhs.entry((*j, *a, *b)).or_insert_with(Scalar::zero);
                    *e = &*e + &(c * d);
                }
            }
            lhs.retain(|_, v| !v.is_zero());
            rhs.retain(|_, v| !v.is_zero());
            rep.check(lhs == rhs, "coassociativity", || self.labels[i].clone());
            let mut left = vec![Scalar::zero(); n];
            let mut right = vec![Scalar::zero(); n];
            for (j, k, c) in &self.delta[i] {
                left[*k] = &left[*k] + &(&self.eps[*j] * c);
                right[*j] = &right[*j] + &(&self.eps[*k] * c);
            }
            let e = unit_vec(n, i);
            rep.check(left == e, "left counit", || self.labels[i].clone());
            rep.check(right == e, "right counit", || self.labels[i].clone());
        }
        rep
    }

    /// A copy with `c` added to the coefficient of `e_j⊗e_k` in `Δ(e_i)`.
    pub fn with_coproduct_term(&self, i: usize, j: usize, k: usize, c: Scalar) -> Coalgebra {
        let mut d = self.delta.clone();
        d[i].push((j, k, c));
        Coalgebra::new(self.field.clone(), self.labels.clone(), d, self.eps.clone())
    }

    /// A copy with `c` added to `ε(e_i)`.
    pub fn with_counit_shift(&self, i: usize, c: Scalar) -> Coalgebra {
        let mut e = self.eps.clone();
        e[i] = &e[i] + &c;
        Coalgebra::new(self.field.clone(), self.labels.clone(), self.delta.clone(), e)
    }

    /// Direct sum with the canonical inclusions `ξ_k` as matrices.
    pub fn direct_sum(parts: &[Coalgebra]) -> Result<(Coalgebra, Vec<Matrix>), CoalgebraError> {
        let Some(first) = parts.first() else { return Err(CoalgebraError::Malformed("empty direct sum".into())) };
        for p in parts {
            if p.field != first.field {
                return Err(CoalgebraError::FieldMismatch(first.field.clone(), p.field.clone()));
            }
        }
        let total: usize = parts.iter().map(Coalgebra::dim).sum();
        let mut seen = std::collections::BTreeSet::new();
        let clash = parts.iter().flat_map(|p| p.labels.iter()).any(|l| !seen.insert(l.clone()));
        let (mut labels, mut delta, mut eps, mut incl) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        let mut off = 0;
        for (k, p) in parts.iter().enumerate() {
            let mut xi = Matrix::zeros(total, p.dim());
            for i in 0..p.dim() {
                labels.push(if clash { format!("{}_{}", p.labels[i], k + 1) } else { p.labels[i].clone() });
                delta.push(p.delta[i].iter().map(|(a, b, c)| (a + off, b + off, c.clone())).collect());
                eps.push(p.eps[i].clone());
                xi.set(off + i, i, Scalar::one());
            }
            incl.push(xi);
            off += p.dim();
        }
        Ok((Coalgebra::new(first.field.clone(), labels, delta, eps), incl))
    }

    pub fn from_json(text: &str) -> Result<Coalgebra, CoalgebraError> {
        let doc: CoalgebraDoc = serde_json::from_str(text)?;
        doc.build()
    }

    pub fn to_doc(&self) -> CoalgebraDoc {
        let r = |s: &Scalar| render(s, &self.field);
        CoalgebraDoc {
            field: self.field.to_string(),
            basis: self.labels.clone(),
            coproduct: (0..self.dim())
                .map(|i| {
                    let terms = self.delta[i]
                        .iter()
                        .map(|(j, k, c)| vec![self.labels[*j].clone(), self.labels[*k].clone(), r(c)])
                        .collect();
                    (self.labels[i].clone(), terms)
                })
                .collect(),
            counit: (0..self.dim()).map(|i| (self.labels[i].clone(), r(&self.eps[i]))).collect(),
        }
    }
}

/// JSON form of a coalgebra.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoalgebraDoc {
    pub field: String,
    pub basis: Vec<String>,
    pub coproduct: BTreeMap<String, Vec<Vec<String>>>,
    pub counit: BTreeMap<String, String>,
}

pub(crate) fn parse_coeff(text: &str, field: &Field) -> Result<Scalar, CoalgebraError> {
    parse_scalar(text, field).map_err(|source| CoalgebraError::Scalar { text: text.to_string(), source })
}

pub(crate) fn label_index(labels: &[String]) -> Result<BTreeMap<String, usize>, CoalgebraError> {
    let mut idx = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        if idx.insert(l.clone(), i).is_some() {
            return Err(CoalgebraError::DuplicateLabel(l.clone()));
        }
    }
    Ok(idx)
}

impl CoalgebraDoc {
    pub fn build(&self) -> Result<Coalgebra, CoalgebraError> {
        let field = Field::parse(&self.field).map_err(|source| CoalgebraError::Scalar { text: self.field.clone(), source })?;
        let idx = label_index(&self.basis)?;
        let look = |l: &str| idx.get(l).copied().ok_or_else(|| CoalgebraError::UnknownLabel(l.to_string()));
        let n = self.basis.len();
        let mut delta = vec![Vec::new(); n];
        for (key, terms) in &self.coproduct {
            let i = look(key)?;
            for t in terms {
                let c = match t.len() {
                    2 => Scalar::one(),
                    3 => parse_coeff(&t[2], &field)?,
                    _ => return Err(CoalgebraError::Malformed(format!("coproduct term for `{key}` needs 2 or 3 entries"))),
                };
                delta[i].push((look(&t[0])?, look(&t[1])?, c));
            }
        }
        let mut eps = vec![Scalar::zero(); n];
        for (key, v) in &self.counit {
            eps[look(key)?] = parse_coeff(v, &field)?;
        }
        Ok(Coalgebra::new(field, self.basis.clone(), delta, eps))
    }
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Linear map between coalgebras, `target.dim() × source.dim()`.
#[derive(Clone, Debug)]
pub struct CoalgebraMorphism {
    pub matrix: Matrix,
}

impl CoalgebraMorphism {
    pub fn identity(c: &Coalgebra) -> CoalgebraMorphism {
        CoalgebraMorphism { matrix: Matrix::identity(c.dim()) }
    }

    pub fn validate(&self, src: &Coalgebra, tgt: &Coalgebra) -> Report {
        let mut rep = Report::default();
        if self.matrix.rows() != tgt.dim() || self.matrix.cols() != src.dim() {
            rep.fail("shape", format!("{}x{}", self.matrix.rows(), self.matrix.cols()));
            return rep;
        }
        let pp = self.matrix.kron(&self.matrix);
        for i in 0..src.dim() {
            let lhs = pp.apply(&src.apply_coproduct(&unit_vec(src.dim(), i)));
            let img = self.matrix.column(i);
            let rhs = tgt.apply_coproduct(&img);
            rep.check(lhs == rhs, "morphism coproduct", || src.label(i).to_string());
            rep.check(tgt.counit_of(&img) == src.counit()[i], "morphism counit", || src.label(i).to_string());
        }
        rep
    }
}

/// The convolution algebra `C*`. Functionals are coordinate vectors on the basis of `C`.
pub struct DualAlgebra<'a> {
    pub coalgebra: &'a Coalgebra,
}

impl<'a> DualAlgebra<'a> {
    pub fn new(coalgebra: &'a Coalgebra) -> Self {
        DualAlgebra { coalgebra }
    }

    /// `(α⋆β)(c) = α(c₁)β(c₂)`.
    pub fn convolution(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let c = self.coalgebra;
        (0..c.dim())
            .map(|i| {
                c.coproduct(i).iter().fold(Scalar::zero(), |acc, (j, k, s)| {
                    if a[*j].is_zero() || b[*k].is_zero() {
                        acc
                    } else {
                        &acc + &(&(s * &a[*j]) * &b[*k])
                    }
                })
            })
            .collect()
    }

    pub fn unit(&self) -> Vec<Scalar> {
        self.coalgebra.counit().to_vec()
    }

    /// Associativity and unit laws on all basis triples of `C*`.
    pub fn validate(&self) -> Report {
        let n = self.coalgebra.dim();
        let mut rep = Report::default();
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vec(n, i)).collect();
        let prods: Vec<Vec<Vec<Scalar>>> =
            (0..n).map(|i| (0..n).map(|j| self.convolution(&e[i], &e[j])).collect()).collect();
        for i in 0..n {
            rep.check(self.convolution(&self.unit(), &e[i]) == e[i], "left unit", || format!("{i}"));
            rep.check(self.convolution(&e[i], &self.unit()) == e[i], "right unit", || format!("{i}"));
            for j in 0..n {
                for k in 0..n {
                    let l = self.convolution(&prods[i][j], &e[k]);
                    let r = self.convolution(&e[i], &prods[j][k]);
                    rep.check(l == r, "associativity", || format!("({i},{j},{k})"));
                }
            }
        }
        rep
    }
}

/// Push a bicomodule over `src` forward along `φ: src → tgt`.
pub fn induce_along(phi: &CoalgebraMorphism, src: &Coalgebra, tgt: &Coalgebra, m: &Bicomodule) -> Result<Bicomodule, CoalgebraError> {
    let rep = phi.validate(src, tgt);
    if !rep.ok() {
        return Err(CoalgebraError::NotMorphism(format!("{:?}", rep.violations)));
    }
    if m.left().dim() != src.dim() || m.right().dim() != src.dim() {
        return Err(CoalgebraError::Malformed("bicomodule is not over the source coalgebra".into()));
    }
    let push = |c: usize| -> Vec<(usize, Scalar)> {
        (0..tgt.dim())
            .filter_map(|t| {
                let x = phi.matrix.get(t, c);
                (!x.is_zero()).then(|| (t, x.clone()))
            })
            .collect()
    };
    let dim = m.dim();
    let mut dl = vec![Vec::new(); dim];
    let mut dr = vec![Vec::new(); dim];
    for i in 0..dim {
        for (c, j, s) in m.left_terms(i) {
            for (t, x) in push(*c) {
                dl[i].push((t, *j, s * &x));
            }
        }
        for (j, c, s) in m.right_terms(i) {
            for (t, x) in push(*c) {
                dr[i].push((*j, t, s * &x));
            }
        }
    }
    Ok(Bicomodule::new(tgt.clone(), tgt.clone(), m.labels().to_vec(), dl, dr))
}

/// The map `[φ⊗φ]` on `Υ^U` for an automorphism `φ` of `C`.
pub fn automorphism_on_universal(phi: &Matrix, u: &UniversalBicomodule) -> Result<Matrix, CoalgebraError> {
    let n = u.coalgebra().dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(CoalgebraError::Malformed("automorphism has wrong shape".into()));
    }
    phi.inverse().map_err(|_| CoalgebraError::NotInvertible)?;
    let rep = CoalgebraMorphism { matrix: phi.clone() }.validate(u.coalgebra(), u.coalgebra());
    if !rep.ok() {
        return Err(CoalgebraError::NotMorphism(format!("{:?}", rep.violations)));
    }
    let q = u.quotient();
    Ok(q.projection().mul(&phi.kron(phi)).mul(q.section()))
}

pub fn apply_automorphism(phi: &Matrix, u: &UniversalBicomodule, s: &Subspace) -> Result<Subspace, CoalgebraError> {
    let m = automorphism_on_universal(phi, u)?;
    Ok(s.map(&m))
}

/// Permutation matrix sending `e_i` to `e_{perm[i]}`.
pub fn permutation_matrix(perm: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(perm.len(), perm.len());
    for (i, &p) in perm.iter().enumerate() {
        m.set(p, i, Scalar::one());
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomodule::UniversalBicomodule;
    use crate::presentations::coalgebras::{m2x2, point, set_coalgebra, sweedler_coalgebra};

    #[test]
    fn group_like_point_is_valid() {
        assert!(point().validate().ok());
    }

    #[test]
    fn m2x2_valid_and_mutation_caught() {
        let c = m2x2();
        assert!(c.validate().ok());
        // Δu ↦ x⊗u only: drop the u⊗y term
        let (u, y) = (c.index_of("u").unwrap(), c.index_of("y").unwrap());
        let bad = c.with_coproduct_term(u, u, y, Scalar::from_i64(-1));
        let rep = bad.validate();
        assert!(rep.violations.iter().any(|v| v.axiom == "coassociativity" && v.at == "u"));
    }

    #[test]
    fn direct_sums() {
        let (s, incl) = Coalgebra::direct_sum(&[point(), point()]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.validate().ok());
        for xi in &incl {
            assert!(CoalgebraMorphism { matrix: xi.clone() }.validate(&point(), &s).ok());
        }
        let set2 = set_coalgebra(2);
        assert_eq!(s.coproduct_matrix(), set2.coproduct_matrix());
        let (one, _) = Coalgebra::direct_sum(&[m2x2()]).unwrap();
        assert_eq!(one, m2x2());
        let (five, _) = Coalgebra::direct_sum(&[m2x2(), point()]).unwrap();
        assert_eq!(five.dim(), 5);
        assert!(five.validate().ok());
    }

    #[test]
    fn convolution_laws() {
        let c = sweedler_coalgebra();
        let d = DualAlgebra::new(&c);
        assert!(d.validate().ok());
        let a: Vec<Scalar> = [3, -1, 2, 5].iter().map(|&x| Scalar::from_i64(x)).collect();
        assert_eq!(d.convolution(&d.unit(), &a), a);
        let s = set_coalgebra(3);
        let ds = DualAlgebra::new(&s);
        for p in 0..3 {
            let dp = unit_vec(3, p);
            assert_eq!(ds.convolution(&dp, &dp), dp);
        }
    }

    #[test]
    fn m2x2_dual_is_matrix_multiplication() {
        // e11=x, e12=u, e21=v, e22=y: Δe_ij = Σ_k e_ik⊗e_kj
        let c = m2x2();
        let d = DualAlgebra::new(&c);
        let idx = |l: &str| c.index_of(l).unwrap();
        let pos = |l: &str| match l {
            "x" => (0, 0),
            "u" => (0, 1),
            "v" => (1, 0),
            _ => (1, 1),
        };
        for a in ["x", "u", "v", "y"] {
            for b in ["x", "u", "v", "y"] {
                let got = d.convolution(&unit_vec(4, idx(a)), &unit_vec(4, idx(b)));
                let (i, j) = pos(a);
                let (k, l) = pos(b);
                let mut want = vec![Scalar::zero(); 4];
                if j == k {
                    let lab = ["x", "u", "v", "y"].iter().find(|m| pos(m) == (i, l)).unwrap();
                    want[idx(lab)] = Scalar::one();
                }
                assert_eq!(got, want, "{a}*{b}");
            }
        }
    }

    #[test]
    fn automorphisms_act_on_universal() {
        let c = m2x2();
        let u = UniversalBicomodule::build(&c);
        let id = Matrix::identity(4);
        let s = u.generate(&[u.parse_vector("[y⊗x]").unwrap()]).unwrap();
        assert_eq!(apply_automorphism(&id, &u, &s).unwrap(), s);
        let perm: Vec<usize> = ["y", "v", "u", "x"].iter().map(|l| c.index_of(l).unwrap()).collect();
        let phi = permutation_matrix(&perm);
        let img = apply_automorphism(&phi, &u, &s).unwrap();
        let mirror = u.generate(&[u.parse_vector("[x⊗y]").unwrap()]).unwrap();
        assert_eq!(img, mirror);
        assert!(u.bicomodule().is_subbicomodule(&img));
        let singular = Matrix::zeros(4, 4);
        assert!(apply_automorphism(&singular, &u, &s).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let c = sweedler_coalgebra();
        let text = serde_json::to_string(&c.to_doc()).unwrap();
        assert_eq!(Coalgebra::from_json(&text).unwrap(), c);
        let bad = r#"{"field":"Q","basis":["a"],"coproduct":{"b":[["a","a"]]},"counit":{"a":"1"}}"#;
        assert!(matches!(Coalgebra::from_json(bad), Err(CoalgebraError::UnknownLabel(_))));
    }
}
