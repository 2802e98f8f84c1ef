//! Bicomodules, the universal bicomodule `Υ^U = C⊗C/ImΔ` and coderivations.

use crate::coalgebra::{unit_vec, Coalgebra, CoproductTerms, Report};
use crate::linalg::{format_dense, parse_dense_vector, LinalgError, Matrix, QuotientSpace, Subspace};
use crate::scalar::{Scalar, ScalarError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BicomoduleError {
    #[error("generator is zero")]
    ZeroGenerator,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("subspace is not closed under the coactions")]
    NotClosed,
    #[error("left and right coalgebras differ")]
    CoalgebrasDiffer,
    #[error("summands do not form a direct sum decomposition of the coalgebra")]
    NotDecomposition,
    #[error("coalgebra is not a set coalgebra (basis element `{0}` is not group-like)")]
    NotSetCoalgebra(String),
    #[error("subspace is not spanned by components [p⊗q]")]
    NotGraph,
    #[error(transparent)]
    Parse(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `Δ_L(m_i) = Σ s·e_c⊗m_j` is stored as `(c, j, s)`; `Δ_R(m_i) = Σ s·m_j⊗e_c` as `(j, c, s)`.
#[derive(Clone, Debug)]
pub struct Bicomodule {
    left: Coalgebra,
    right: Coalgebra,
    labels: Vec<String>,
    dl: Vec<CoproductTerms>,
    dr: Vec<CoproductTerms>,
}

fn merge(terms: CoproductTerms) -> CoproductTerms {
    let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
    for (a, b, c) in terms {
        let e = acc.entry((a, b)).or_insert_with(Scalar::zero);
        *e = &*e + &c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|((a, b), c)| (a, b, c)).collect()
}

impl Bicomodule {
    pub fn new(left: Coalgebra, right: Coalgebra, labels: Vec<String>, dl: Vec<CoproductTerms>, dr: Vec<CoproductTerms>) -> Bicomodule {
        assert_eq!(dl.len(), labels.len());
        assert_eq!(dr.len(), labels.len());
        Bicomodule { left, right, labels, dl: dl.into_iter().map(merge).collect(), dr: dr.into_iter().map(merge).collect() }
    }

    /// `C` as a bicomodule over itself.
    pub fn regular(c: &Coalgebra) -> Bicomodule {
        let d: Vec<CoproductTerms> = (0..c.dim()).map(|i| c.coproduct(i).clone()).collect();
        Bicomodule::new(c.clone(), c.clone(), c.labels().to_vec(), d.clone(), d)
    }

    /// `C⊗C` with `Δ_L(a⊗b) = a₁⊗(a₂⊗b)` and `Δ_R(a⊗b) = (a⊗b₁)⊗b₂`.
    pub fn tensor_square(c: &Coalgebra) -> Bicomodule {
        let n = c.dim();
        let mut labels = Vec::new();
        let (mut dl, mut dr) = (Vec::new(), Vec::new());
        for a in 0..n {
            for b in 0..n {
                labels.push(format!("{}⊗{}", c.label(a), c.label(b)));
                dl.push(c.coproduct(a).iter().map(|(j, k, s)| (*j, k * n + b, s.clone())).collect());
                dr.push(c.coproduct(b).iter().map(|(j, k, s)| (a * n + j, *k, s.clone())).collect());
            }
        }
        Bicomodule::new(c.clone(), c.clone(), labels, dl, dr)
    }

    pub fn left(&self) -> &Coalgebra {
        &self.left
    }
    pub fn right(&self) -> &Coalgebra {
        &self.right
    }
    pub fn dim(&self) -> usize {
        self.labels.len()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn left_terms(&self, i: usize) -> &CoproductTerms {
        &self.dl[i]
    }
    pub fn right_terms(&self, i: usize) -> &CoproductTerms {
        &self.dr[i]
    }

    /// `Δ_L` as a `(n·m) × m` matrix, index `c*m + j`.
    pub fn left_matrix(&self) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(self.left.dim() * m, m);
        for i in 0..m {
            for (c, j, s) in &self.dl[i] {
                out.add_to(c * m + j, i, s);
            }
        }
        out
    }

    /// `Δ_R` as a `(m·n') × m` matrix, index `j*n' + c`.
    pub fn right_matrix(&self) -> Matrix {
        let (m, n) = (self.dim(), self.right.dim());
        let mut out = Matrix::zeros(m * n, m);
        for i in 0..m {
            for (j, c, s) in &self.dr[i] {
                out.add_to(j * n + c, i, s);
            }
        }
        out
    }

    /// `ᴸΔᴿ(v)` grouped by outer legs: `(c, d) ↦` middle vector.
    pub fn two_sided(&self, v: &[Scalar]) -> BTreeMap<(usize, usize), Vec<Scalar>> {
        let m = self.dim();
        let mut out: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, j, s) in &self.dl[i] {
                let xs = x * s;
                for (k, d, t) in &self.dr[*j] {
                    let w = out.entry((*c, *d)).or_insert_with(|| vec![Scalar::zero(); m]);
                    w[*k] = &w[*k] + &(&xs * t);
                }
            }
        }
        out.retain(|_, w| w.iter().any(|x| !x.is_zero()));
        out
    }

    /// `Δ_L(v)` grouped by the left leg.
    pub fn left_legs(&self, v: &[Scalar]) -> BTreeMap<usize, Vec<Scalar>> {
        let m = self.dim();
        let mut out: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, j, s) in &self.dl[i] {
                let w = out.entry(*c).or_insert_with(|| vec![Scalar::zero(); m]);
                w[*j] = &w[*j] + &(x * s);
            }
        }
        out.retain(|_, w| w.iter().any(|x| !x.is_zero()));
        out
    }

    /// `Δ_R(v)` grouped by the right leg.
    pub fn right_legs(&self, v: &[Scalar]) -> BTreeMap<usize, Vec<Scalar>> {
        let m = self.dim();
        let mut out: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, c, s) in &self.dr[i] {
                let w = out.entry(*c).or_insert_with(|| vec![Scalar::zero(); m]);
                w[*j] = &w[*j] + &(x * s);
            }
        }
        out.retain(|_, w| w.iter().any(|x| !x.is_zero()));
        out
    }

    pub fn validate(&self) -> Report {
        let m = self.dim();
        let mut rep = Report::default();
        for i in 0..m {
            let at = || self.labels[i].clone();
            // left coassociativity and counit
            let mut l1: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut l2 = l1.clone();
            let mut lc = vec![Scalar::zero(); m];
            for (c, j, s) in &self.dl[i] {
                for (a, b, t) in self.left.coproduct(*c) {
                    add3(&mut l1, (*a, *b, *j), &(s * t));
                }
                for (a, k, t) in &self.dl[*j] {
                    add3(&mut l2, (*c, *a, *k), &(s * t));
                }
                lc[*j] = &lc[*j] + &(s * &self.left.counit()[*c]);
            }
            rep.check(clean(l1) == clean(l2), "left coassociativity", at);
            rep.check(lc == unit_vec(m, i), "left counit", at);
            let mut r1: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut r2 = r1.clone();
            let mut rc = vec![Scalar::zero(); m];
            for (j, c, s) in &self.dr[i] {
                for (k, a, t) in &self.dr[*j] {
                    add3(&mut r1, (*k, *a, *c), &(s * t));
                }
                for (a, b, t) in self.right.coproduct(*c) {
                    add3(&mut r2, (*j, *a, *b), &(s * t));
                }
                rc[*j] = &rc[*j] + &(s * &self.right.counit()[*c]);
            }
            rep.check(clean(r1) == clean(r2), "right coassociativity", at);
            rep.check(rc == unit_vec(m, i), "right counit", at);
            // (Δ_L⊗id)Δ_R = (id⊗Δ_R)Δ_L
            let mut c1: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut c2 = c1.clone();
            for (j, d, s) in &self.dr[i] {
                for (c, k, t) in &self.dl[*j] {
                    add3(&mut c1, (*c, *k, *d), &(s * t));
                }
            }
            for (c, j, s) in &self.dl[i] {
                for (k, d, t) in &self.dr[*j] {
                    add3(&mut c2, (*c, *k, *d), &(s * t));
                }
            }
            let c1 = clean(c1);
            rep.check(c1 == clean(c2), "commuting coactions", at);
        }
        let rank = self.left_matrix().rank();
        rep.check(rank == m, "two-sided coaction injective", || format!("rank {rank} < {m}"));
        rep
    }

    pub fn parse_vector(&self, text: &str) -> Result<Vec<Scalar>, BicomoduleError> {
        let labels = &self.labels;
        Ok(parse_dense_vector(text, self.dim(), self.left.field(), |l| {
            let bare = l.trim_start_matches('[').trim_end_matches(']');
            labels.iter().position(|x| x == l || x == bare)
        })?)
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_dense(v, &self.labels, self.left.field())
    }

    pub fn is_subbicomodule(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim()
            && s.basis().iter().all(|v| {
                self.left_legs(v).values().all(|w| s.contains(w)) && self.right_legs(v).values().all(|w| s.contains(w))
            })
    }

    /// Smallest subbicomodule containing the generators: the span of all middle legs of `ᴸΔᴿ(v)`.
    pub fn generate(&self, gens: &[Vec<Scalar>]) -> Result<Subspace, BicomoduleError> {
        let mut legs = Vec::new();
        for g in gens {
            if g.len() != self.dim() {
                return Err(BicomoduleError::Dimension(format!("generator of length {} in dim {}", g.len(), self.dim())));
            }
            if g.iter().all(Scalar::is_zero) {
                return Err(BicomoduleError::ZeroGenerator);
            }
            legs.extend(self.two_sided(g).into_values());
        }
        let s = Subspace::from_vectors(self.dim(), &legs);
        assert!(self.is_subbicomodule(&s), "generated span failed the closure check");
        Ok(s)
    }

    /// Span of the left legs of `Δ_R(x)`: the right subcomodule generated by `x`.
    pub fn right_coefficient_closure(&self, x: &[Scalar]) -> Subspace {
        let m = self.dim();
        let mut by_c: BTreeMap<usize, Vec<Scalar>> = BTreeMap::new();
        for (i, a) in x.iter().enumerate() {
            for (j, c, s) in &self.dr[i] {
                let w = by_c.entry(*c).or_insert_with(|| vec![Scalar::zero(); m]);
                w[*j] = &w[*j] + &(a * s);
            }
        }
        Subspace::from_vectors(m, &by_c.into_values().collect::<Vec<_>>())
    }

    /// Span of the right legs of `Δ_L(x)`: the left subcomodule generated by `x`.
    pub fn left_coefficient_closure(&self, x: &[Scalar]) -> Subspace {
        Subspace::from_vectors(self.dim(), &self.left_legs(x).into_values().collect::<Vec<_>>())
    }

    /// `M^♮ = Ker(Δ_L − τ∘Δ_R)`.
    pub fn cocommutator(&self) -> Result<Subspace, BicomoduleError> {
        if self.left != self.right {
            return Err(BicomoduleError::CoalgebrasDiffer);
        }
        let m = self.dim();
        let mut d = self.left_matrix();
        for i in 0..m {
            for (j, c, s) in &self.dr[i] {
                d.add_to(c * m + j, i, &s.neg());
            }
        }
        Ok(d.kernel())
    }

    /// Blocks `M_ij = ᴸΔᴿ⁻¹(C_i⊗M⊗C_j)` for a decomposition `C = ⊕C_i` into subcoalgebras.
    pub fn decompose(&self, summands: &[Subspace]) -> Result<Vec<(usize, usize, Subspace)>, BicomoduleError> {
        if self.left != self.right {
            return Err(BicomoduleError::CoalgebrasDiffer);
        }
        let n = self.left.dim();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        let mut ranges = Vec::new();
        for s in summands {
            if s.ambient() != n {
                return Err(BicomoduleError::NotDecomposition);
            }
            ranges.push(cols.len()..cols.len() + s.dim());
            cols.extend(s.basis().iter().cloned());
        }
        if cols.len() != n {
            return Err(BicomoduleError::NotDecomposition);
        }
        let b = Matrix::from_columns(n, &cols);
        let binv = b.inverse().map_err(|_| BicomoduleError::NotDecomposition)?;
        let proj: Vec<Matrix> = ranges
            .iter()
            .map(|r| {
                let mut e = Matrix::zeros(n, n);
                for k in r.clone() {
                    e.set(k, k, Scalar::one());
                }
                b.mul(&e).mul(&binv)
            })
            .collect();
        let m = self.dim();
        let images: Vec<BTreeMap<(usize, usize), Vec<Scalar>>> = (0..m).map(|i| self.two_sided(&unit_vec(m, i))).collect();
        let mut out = Vec::new();
        for (i, pi) in proj.iter().enumerate() {
            for (j, pj) in proj.iter().enumerate() {
                // columns: v ↦ ᴸΔᴿ(v) − (p_i⊗id⊗p_j)ᴸΔᴿ(v), flattened
                let mut defect = Matrix::zeros(n * n * m, m);
                for (col, img) in images.iter().enumerate() {
                    for ((c, d), w) in img {
                        for (k, x) in w.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            defect.add_to((c * n + d) * m + k, col, x);
                            for a in 0..n {
                                let pa = pi.get(a, *c);
                                if pa.is_zero() {
                                    continue;
                                }
                                for bb in 0..n {
                                    let pb = pj.get(bb, *d);
                                    if !pb.is_zero() {
                                        defect.add_to((a * n + bb) * m + k, col, &(&(pa * pb) * x).neg());
                                    }
                                }
                            }
                        }
                    }
                }
                out.push((i, j, defect.kernel()));
            }
        }
        Ok(out)
    }

    /// Restrict to a subbicomodule, in the coordinates of its RREF basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Bicomodule, BicomoduleError> {
        if !self.is_subbicomodule(s) {
            return Err(BicomoduleError::NotClosed);
        }
        let coords = |w: &Vec<Scalar>| s.coordinates(w).expect("closed subspace");
        let (mut dl, mut dr) = (Vec::new(), Vec::new());
        for v in s.basis() {
            let mut l = Vec::new();
            for (c, w) in self.left_legs(v) {
                for (j, x) in coords(&w).into_iter().enumerate() {
                    l.push((c, j, x));
                }
            }
            let mut r = Vec::new();
            for (c, w) in self.right_legs(v) {
                for (j, x) in coords(&w).into_iter().enumerate() {
                    r.push((j, c, x));
                }
            }
            dl.push(l);
            dr.push(r);
        }
        let labels = s.basis().iter().map(|v| self.format_vector(v)).collect();
        Ok(Bicomodule::new(self.left.clone(), self.right.clone(), labels, dl, dr))
    }

    /// Semi-decision probe for simplicity of a subbicomodule `S`.
    pub fn is_simple_probe(&self, s: &Subspace, probes: usize, seed: u64) -> Result<Simplicity, BicomoduleError> {
        if s.is_zero() {
            return Err(BicomoduleError::ZeroGenerator);
        }
        if !self.is_subbicomodule(s) {
            return Err(BicomoduleError::NotClosed);
        }
        let mut candidates: Vec<Vec<Scalar>> = s.basis().to_vec();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..probes {
            let mut v = vec![Scalar::zero(); self.dim()];
            for b in s.basis() {
                let c = Scalar::from_i64(rng.gen_range(-3..=3));
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x + &(y * &c);
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                candidates.push(v);
            }
        }
        for v in &candidates {
            let g = self.generate(std::slice::from_ref(v))?;
            if g.dim() < s.dim() {
                return Ok(Simplicity::HasProperSub { generator: v.clone(), witness: g });
            }
        }
        if probes == 0 {
            Ok(Simplicity::Inconclusive { probes: candidates.len() })
        } else {
            Ok(Simplicity::Simple { probes: candidates.len() })
        }
    }
}

#[derive(Clone, Debug)]
pub enum Simplicity {
    Simple { probes: usize },
    HasProperSub { generator: Vec<Scalar>, witness: Subspace },
    Inconclusive { probes: usize },
}

fn add3(m: &mut BTreeMap<(usize, usize, usize), Scalar>, k: (usize, usize, usize), x: &Scalar) {
    let e = m.entry(k).or_insert_with(Scalar::zero);
    *e = &*e + x;
}

fn clean(mut m: BTreeMap<(usize, usize, usize), Scalar>) -> BTreeMap<(usize, usize, usize), Scalar> {
    m.retain(|_, v| !v.is_zero());
    m
}

/// `Υ^U = C⊗C/ImΔ` with its coactions, coderivation and splittings.
#[derive(Clone, Debug)]
pub struct UniversalBicomodule {
    coalgebra: Coalgebra,
    quotient: QuotientSpace,
    bicomodule: Bicomodule,
}

impl UniversalBicomodule {
    pub fn build(c: &Coalgebra) -> UniversalBicomodule {
        let n = c.dim();
        let quotient = QuotientSpace::new(n * n, &c.image_of_coproduct()).expect("ambient matches");
        let pcols: Vec<Vec<(usize, Scalar)>> = (0..n * n)
            .map(|col| {
                (0..quotient.dim())
                    .filter_map(|t| {
                        let x = quotient.projection().get(t, col);
                        (!x.is_zero()).then(|| (t, x.clone()))
                    })
                    .collect()
            })
            .collect();
        let (mut labels, mut dl, mut dr) = (Vec::new(), Vec::new(), Vec::new());
        for &r in quotient.representatives() {
            let (a, b) = (r / n, r % n);
            labels.push(format!("[{}⊗{}]", c.label(a), c.label(b)));
            let mut l = Vec::new();
            for (j, k, s) in c.coproduct(a) {
                for (t, x) in &pcols[k * n + b] {
                    l.push((*j, *t, s * x));
                }
            }
            let mut rr = Vec::new();
            for (j, k, s) in c.coproduct(b) {
                for (t, x) in &pcols[a * n + j] {
                    rr.push((*t, *k, s * x));
                }
            }
            dl.push(l);
            dr.push(rr);
        }
        let bicomodule = Bicomodule::new(c.clone(), c.clone(), labels, dl, dr);
        UniversalBicomodule { coalgebra: c.clone(), quotient, bicomodule }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }
    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }
    pub fn bicomodule(&self) -> &Bicomodule {
        &self.bicomodule
    }
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
    pub fn labels(&self) -> &[String] {
        self.bicomodule.labels()
    }

    /// `π: C⊗C → Υ^U`.
    pub fn pi(&self) -> &Matrix {
        self.quotient.projection()
    }

    /// Class of `e_a⊗e_b`.
    pub fn class(&self, a: usize, b: usize) -> Vec<Scalar> {
        self.quotient.projection().column(a * self.coalgebra.dim() + b)
    }

    /// `δ^U[a⊗b] = aε(b) − bε(a)` as an `n × dim` matrix.
    pub fn delta_u(&self) -> Matrix {
        let n = self.coalgebra.dim();
        let eps = self.coalgebra.counit();
        let mut d = Matrix::zeros(n, n * n);
        for a in 0..n {
            for b in 0..n {
                d.add_to(a, a * n + b, &eps[b]);
                d.add_to(b, a * n + b, &eps[a].neg());
            }
        }
        d.mul(self.quotient.section())
    }

    /// `σ_R([a⊗b]) = a⊗b − ε(a)Δ(b)` on representatives.
    pub fn sigma_r(&self) -> Matrix {
        let n = self.coalgebra.dim();
        let mut m = Matrix::zeros(n * n, self.dim());
        for (col, &r) in self.quotient.representatives().iter().enumerate() {
            let (a, b) = (r / n, r % n);
            m.add_to(r, col, &Scalar::one());
            let ea = &self.coalgebra.counit()[a];
            for (j, k, s) in self.coalgebra.coproduct(b) {
                m.add_to(j * n + k, col, &(ea * s).neg());
            }
        }
        m
    }

    /// `σ_L([a⊗b]) = −a⊗b + ε(b)Δ(a)`, so that `π∘σ_L = −id`.
    pub fn sigma_l(&self) -> Matrix {
        let n = self.coalgebra.dim();
        let mut m = Matrix::zeros(n * n, self.dim());
        for (col, &r) in self.quotient.representatives().iter().enumerate() {
            let (a, b) = (r / n, r % n);
            m.add_to(r, col, &Scalar::from_i64(-1));
            let eb = &self.coalgebra.counit()[b];
            for (j, k, s) in self.coalgebra.coproduct(a) {
                m.add_to(j * n + k, col, &(eb * s));
            }
        }
        m
    }

    /// `r_ε(a⊗b) = ε(a)b`.
    pub fn r_epsilon(&self) -> Matrix {
        let n = self.coalgebra.dim();
        let mut m = Matrix::zeros(n, n * n);
        for a in 0..n {
            for b in 0..n {
                m.set(b, a * n + b, self.coalgebra.counit()[a].clone());
            }
        }
        m
    }

    pub fn kernel_delta(&self) -> Subspace {
        self.delta_u().kernel()
    }

    /// `ĥδ(m) = [δ(m₍₀₎)⊗m₍₁₎]` for a coderivation `δ: M → C`.
    pub fn hat_delta(&self, m: &Bicomodule, delta: &Matrix) -> Result<Matrix, BicomoduleError> {
        let n = self.coalgebra.dim();
        if delta.rows() != n || delta.cols() != m.dim() || m.right().dim() != n {
            return Err(BicomoduleError::Dimension("coderivation shape".into()));
        }
        let mut t = Matrix::zeros(n * n, m.dim());
        for i in 0..m.dim() {
            for (j, c, s) in m.right_terms(i) {
                for a in 0..n {
                    let d = delta.get(a, *j);
                    if !d.is_zero() {
                        t.add_to(a * n + c, i, &(d * s));
                    }
                }
            }
        }
        Ok(self.pi().mul(&t))
    }

    pub fn parse_vector(&self, text: &str) -> Result<Vec<Scalar>, BicomoduleError> {
        let c = &self.coalgebra;
        let n = c.dim();
        let t = parse_dense_vector(text, n * n, c.field(), |l| {
            let inner = l.strip_prefix('[')?.strip_suffix(']')?;
            let (a, b) = inner.split_once('⊗').or_else(|| inner.split_once(','))?;
            Some(c.index_of(a)? * n + c.index_of(b)?)
        })?;
        Ok(self.quotient.project(&t))
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        self.bicomodule.format_vector(v)
    }

    pub fn generate(&self, gens: &[Vec<Scalar>]) -> Result<Subspace, BicomoduleError> {
        self.bicomodule.generate(gens)
    }

    /// `δ^U(S)` as a subspace of `C`.
    pub fn delta_image(&self, s: &Subspace) -> Subspace {
        s.map(&self.delta_u())
    }
}

/// Co-Leibniz rule `Δδ = (id⊗δ)Δ_L + (δ⊗id)Δ_R` and `εδ = 0`.
pub fn check_coderivation(m: &Bicomodule, delta: &Matrix) -> Report {
    let c = m.left();
    let n = c.dim();
    let mut rep = Report::default();
    if m.right() != c || delta.rows() != n || delta.cols() != m.dim() {
        rep.fail("shape", "coderivation shape".into());
        return rep;
    }
    let lhs = c.coproduct_matrix().mul(delta);
    let mut rhs = Matrix::zeros(n * n, m.dim());
    for i in 0..m.dim() {
        for (cc, j, s) in m.left_terms(i) {
            for t in 0..n {
                let d = delta.get(t, *j);
                if !d.is_zero() {
                    rhs.add_to(cc * n + t, i, &(s * d));
                }
            }
        }
        for (j, cc, s) in m.right_terms(i) {
            for t in 0..n {
                let d = delta.get(t, *j);
                if !d.is_zero() {
                    rhs.add_to(t * n + cc, i, &(s * d));
                }
            }
        }
    }
    for i in 0..m.dim() {
        rep.check(lhs.column(i) == rhs.column(i), "co-Leibniz", || m.labels()[i].clone());
        let e = c.counit_of(&delta.column(i));
        rep.check(e.is_zero(), "counit kills image", || m.labels()[i].clone());
    }
    rep
}

/// `δ_Γ(m) = m₍₋₁₎Γ(m₍₀₎) − Γ(m₍₀₎)m₍₁₎`.
pub fn internal_coderivation(m: &Bicomodule, gamma: &[Scalar]) -> Matrix {
    let n = m.left().dim();
    let mut d = Matrix::zeros(n, m.dim());
    for i in 0..m.dim() {
        for (c, j, s) in m.left_terms(i) {
            d.add_to(*c, i, &(s * &gamma[*j]));
        }
        for (j, c, s) in m.right_terms(i) {
            d.add_to(*c, i, &(s * &gamma[*j]).neg());
        }
    }
    d
}

/// `δ_α(a) = a₁α(a₂) − α(a₁)a₂` on `C` regarded as a bicomodule over itself.
pub fn internal_on_coalgebra(c: &Coalgebra, alpha: &[Scalar]) -> Matrix {
    let n = c.dim();
    let mut d = Matrix::zeros(n, n);
    for i in 0..n {
        for (j, k, s) in c.coproduct(i) {
            d.add_to(*j, i, &(s * &alpha[*k]));
            d.add_to(*k, i, &(s * &alpha[*j]).neg());
        }
    }
    d
}

/// A coderivation is a FOCC when `ĥδ` is injective.
pub fn is_focc(u: &UniversalBicomodule, m: &Bicomodule, delta: &Matrix) -> Result<bool, BicomoduleError> {
    Ok(check_coderivation(m, delta).ok() && u.hat_delta(m, delta)?.rank() == m.dim())
}

/// `ω ∈ (C⊗C)*` with `ω∘Δ = ε` and `(id⊗ω)(Δ⊗id) = (ω⊗id)(id⊗Δ)`, if one exists.
pub fn find_cointegral(c: &Coalgebra) -> Option<Vec<Scalar>> {
    let n = c.dim();
    let nn = n * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        let mut row = vec![Scalar::zero(); nn];
        for (j, k, s) in c.coproduct(i) {
            row[j * n + k] = &row[j * n + k] + s;
        }
        rows.push(row);
        rhs.push(c.counit()[i].clone());
    }
    for a in 0..n {
        for b in 0..n {
            let mut eq: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); nn]; n];
            for (j, k, s) in c.coproduct(a) {
                eq[*j][k * n + b] = &eq[*j][k * n + b] + s;
            }
            for (j, k, s) in c.coproduct(b) {
                eq[*k][a * n + j] = &eq[*k][a * n + j] - s;
            }
            for row in eq {
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                    rhs.push(Scalar::zero());
                }
            }
        }
    }
    Matrix::from_rows(&rows).solve(&rhs)
}

/// Directed graph of a FOCC over a set coalgebra: `<[p⊗q]>` gives the edge `q → p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoccGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl FoccGraph {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph focc {\n");
        for v in &self.vertices {
            s.push_str(&format!("  \"{v}\";\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", self.vertices[*a], self.vertices[*b]));
        }
        s.push_str("}\n");
        s
    }
}

pub fn check_set_coalgebra(c: &Coalgebra) -> Result<(), BicomoduleError> {
    for i in 0..c.dim() {
        let grouplike = c.coproduct(i).len() == 1 && {
            let (j, k, s) = &c.coproduct(i)[0];
            *j == i && *k == i && s.is_one()
        };
        if !grouplike || !c.counit()[i].is_one() {
            return Err(BicomoduleError::NotSetCoalgebra(c.label(i).to_string()));
        }
    }
    Ok(())
}

pub fn set_coalgebra_graph(u: &UniversalBicomodule, f: &Subspace) -> Result<FoccGraph, BicomoduleError> {
    let c = u.coalgebra();
    check_set_coalgebra(c)?;
    let n = c.dim();
    let mut edges = Vec::new();
    for (idx, &r) in u.quotient().representatives().iter().enumerate() {
        if f.contains(&unit_vec(u.dim(), idx)) {
            let (p, q) = (r / n, r % n);
            edges.push((q, p));
        }
    }
    if edges.len() != f.dim() {
        return Err(BicomoduleError::NotGraph);
    }
    edges.sort();
    Ok(FoccGraph { vertices: c.labels().to_vec(), edges })
}

/// Subspace `⊕<[p⊗q]>` of `Υ^U` over a set coalgebra for edges `q → p`.
pub fn graph_subspace(u: &UniversalBicomodule, edges: &[(usize, usize)]) -> Subspace {
    let vs: Vec<Vec<Scalar>> = edges.iter().map(|&(q, p)| u.class(p, q)).collect();
    Subspace::from_vectors(u.dim(), &vs)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

fn edge_mask(edges: &[(usize, usize)], n: usize, perm: &[usize]) -> u64 {
    edges.iter().fold(0u64, |m, &(a, b)| m | 1 << (perm[a] * n + perm[b]))
}

/// Canonical form: the smallest edge bitmask over all vertex relabellings.
pub fn canonical_graph(edges: &[(usize, usize)], n: usize, perms: &[Vec<usize>]) -> u64 {
    perms.iter().map(|p| edge_mask(edges, n, p)).min().unwrap_or(0)
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphClass {
    pub representative: FoccGraph,
    /// Number of labelled FOCCs in the class.
    pub count: usize,
}

/// Isomorphism classes of `dim`-dimensional FOCCs over the set coalgebra on `points` points.
pub fn classify_set_foccs(points: usize, dim: usize) -> Vec<GraphClass> {
    assert!(points * points <= 64, "too many points for the bitmask encoding");
    let pairs: Vec<(usize, usize)> = (0..points).flat_map(|a| (0..points).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let perms = permutations(points);
    let mut classes: BTreeMap<u64, GraphClass> = BTreeMap::new();
    let vertices: Vec<String> = (0..points).map(|i| format!("p{}", i + 1)).collect();
    for_each_combination(pairs.len(), dim, |idx| {
        let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        let key = canonical_graph(&edges, points, &perms);
        classes
            .entry(key)
            .or_insert_with(|| {
                let edges = (0..points * points).filter(|b| key >> b & 1 == 1).map(|b| (b / points, b % points)).collect();
                GraphClass { representative: FoccGraph { vertices: vertices.clone(), edges }, count: 0 }
            })
            .count += 1;
    });
    classes.into_values().collect()
}

fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Vertices touched by at least one edge, used for reporting.
pub fn support(g: &FoccGraph) -> BTreeSet<usize> {
    g.edges.iter().flat_map(|&(a, b)| [a, b]).collect()
}
