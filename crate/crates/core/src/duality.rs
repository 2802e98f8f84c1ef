//! Duality for finite-dimensional Hopf algebras.
//!
//! Covers the dual Hopf algebra `H°` with the convolution product, the
//! universal one-forms `Kerμ° ⊂ H°⊗H°` and their pairing with `Υ^U`.
//! Also here is the tangent space `𝒯∘`, with the special vector fields
//! `v(X̄)` attached to elements of `H̄`.
//!
//! Dual vectors are kept in coordinates on the dual basis `e^k` of the
//! basis `e_k` of `H`.

use crate::coalgebra::{unit_vec, Coalgebra, Report};
use crate::hopf::{self, BicovariantUniversal, HResult, HopfAlgebra, HopfError, ProductTerms};
use crate::linalg::{format_dense, Matrix, Subspace};
use crate::scalar::Scalar;
use serde::Serialize;

type Vector = Vec<Scalar>;

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Outcome of one identity over exhaustive basis tuples.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub tuples: usize,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    fn from_report(name: &str, r: Report) -> IdentityCheck {
        IdentityCheck { identity: name.into(), tuples: r.checked, failures: r.violations.into_iter().map(|v| v.at).collect() }
    }
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct DualityReport {
    pub checks: Vec<IdentityCheck>,
}

impl DualityReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(IdentityCheck::ok)
    }
    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.identity == name)
    }
    fn push(&mut self, name: &str, r: Report) {
        self.checks.push(IdentityCheck::from_report(name, r));
    }
    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| format!("{:<28} {:>6} tuples  {}", c.identity, c.tuples, if c.ok() { "pass" } else { "FAIL" }))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// `H°` of a finite Hopf algebra: `μ° = Δ*`, `Δ° = μ*`, `S° = S*`, unit `ε`, counit evaluation at `1`.
pub struct DualHopf<'a> {
    pub hopf: &'a HopfAlgebra,
    prod: Vec<Vec<Vector>>,
    antipode: Matrix,
}

impl<'a> DualHopf<'a> {
    pub fn build(h: &'a HopfAlgebra) -> HResult<DualHopf<'a>> {
        if !h.is_total() {
            return Err(HopfError::NotFinite);
        }
        let n = h.dim();
        let prod = (0..n).map(|p| (0..n).map(|q| h.product_vec(p, q)).collect::<HResult<Vec<_>>>()).collect::<HResult<Vec<_>>>()?;
        Ok(DualHopf { hopf: h, prod, antipode: h.antipode_matrix() })
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    fn coalgebra(&self) -> &Coalgebra {
        self.hopf.coalgebra()
    }

    /// `⟨X|α⟩ = α(X)`.
    pub fn eval(&self, alpha: &[Scalar], x: &[Scalar]) -> Scalar {
        dot(alpha, x)
    }

    /// `(α⋆β)(X) = α(X₁)β(X₂)`.
    pub fn conv(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        (0..self.dim())
            .map(|k| self.coalgebra().coproduct(k).iter().fold(Scalar::zero(), |acc, (i, j, c)| &acc + &(c * &(&a[*i] * &b[*j]))))
            .collect()
    }

    /// `Δ°α` on `e^p⊗e^q` at `p*n + q`.
    pub fn cop(&self, a: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for p in 0..n {
            for q in 0..n {
                out[p * n + q] = dot(a, &self.prod[p][q]);
            }
        }
        out
    }

    /// `S°α = α∘S`.
    pub fn antipode(&self, a: &[Scalar]) -> Vector {
        (0..self.dim()).map(|i| dot(a, &self.antipode.column(i))).collect()
    }

    pub fn unit(&self) -> Vector {
        self.coalgebra().counit().to_vec()
    }

    pub fn counit(&self, a: &[Scalar]) -> Scalar {
        a[self.hopf.unit()].clone()
    }

    pub fn basis(&self, k: usize) -> Vector {
        unit_vec(self.dim(), k)
    }

    fn to_f(&self, a: &[Scalar]) -> Vector {
        let u = self.hopf.unit();
        let eps = self.coalgebra().counit();
        a.iter().enumerate().map(|(k, x)| if k == u { x.clone() } else { x - &(&a[u] * &eps[k]) }).collect()
    }

    fn from_f(&self, c: &[Scalar]) -> Vector {
        let u = self.hopf.unit();
        let mut a = c.to_vec();
        a[u] = Scalar::zero();
        axpy(&mut a, &c[u], &self.unit());
        a
    }

    /// `H°` as a table on `{ε} ∪ {e^k : e_k ≠ 1}`; `ε` replaces the dual of the unit.
    pub fn as_hopf(&self) -> HopfAlgebra {
        let n = self.dim();
        let u = self.hopf.unit();
        let labels = (0..n).map(|k| if k == u { "eps".to_string() } else { format!("{}'", self.hopf.label(k)) }).collect();
        let terms = |v: &[Scalar]| -> ProductTerms { v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect() };
        let mut delta = Vec::new();
        let mut eps = Vec::new();
        let mut antipode = Vec::new();
        for k in 0..n {
            let fk = self.from_f(&unit_vec(n, k));
            let c = self.cop(&fk);
            // convert each leg of Δ°f_k to f-coordinates
            let mut rows: Vec<Vector> = (0..n).map(|p| self.to_f(&c[p * n..(p + 1) * n])).collect();
            let mut t = Vec::new();
            for q in 0..n {
                let col: Vector = rows.iter_mut().map(|r| r[q].clone()).collect();
                for (p, x) in self.to_f(&col).into_iter().enumerate() {
                    if !x.is_zero() {
                        t.push((p, q, x));
                    }
                }
            }
            delta.push(t);
            eps.push(self.counit(&fk));
            antipode.push(terms(&self.to_f(&self.antipode(&fk))));
        }
        let product = (0..n)
            .map(|a| (0..n).map(|b| Some(terms(&self.to_f(&self.conv(&self.from_f(&unit_vec(n, a)), &self.from_f(&unit_vec(n, b))))))).collect())
            .collect();
        let c = Coalgebra::new(self.coalgebra().field().clone(), labels, delta, eps);
        HopfAlgebra::new(c, product, u, antipode)
    }

    /// `Kerμ° = {Σα⊗β : Σα⋆β = 0}` inside `H°⊗H°`.
    pub fn ker_mu(&self) -> Subspace {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n * n);
        for i in 0..n {
            for j in 0..n {
                for (k, x) in self.conv(&self.basis(i), &self.basis(j)).into_iter().enumerate() {
                    m.set(k, i * n + j, x);
                }
            }
        }
        m.kernel()
    }

    /// `d°α = α⊗ε − ε⊗α`.
    pub fn d(&self, a: &[Scalar]) -> Vector {
        let e = self.unit();
        tensor2(a, &e).iter().zip(tensor2(&e, a)).map(|(x, y)| x - &y).collect()
    }

    /// `γ▷ω = Σ γ⋆α⊗β`.
    pub fn act_left(&self, g: &[Scalar], w: &[Scalar]) -> Vector {
        self.map_legs(w, |a, b| (self.conv(g, a), b.to_vec()))
    }

    /// `ω◁γ = Σ α⊗β⋆γ`.
    pub fn act_right(&self, w: &[Scalar], g: &[Scalar]) -> Vector {
        self.map_legs(w, |a, b| (a.to_vec(), self.conv(b, g)))
    }

    fn map_legs(&self, w: &[Scalar], f: impl Fn(&[Scalar], &[Scalar]) -> (Vector, Vector)) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for (p, c) in w.iter().enumerate() {
            if !c.is_zero() {
                let (a, b) = f(&self.basis(p / n), &self.basis(p % n));
                axpy(&mut out, c, &tensor2(&a, &b));
            }
        }
        out
    }

    /// `s'(ω) = Σ α₁⊗α₂⋆β`.
    pub fn s_prime(&self, w: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for (p, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, b) = (p / n, p % n);
            for (q, x) in self.cop(&self.basis(a)).iter().enumerate() {
                if !x.is_zero() {
                    let t = tensor2(&self.basis(q / n), &self.conv(&self.basis(q % n), &self.basis(b)));
                    axpy(&mut out, &(c * x), &t);
                }
            }
        }
        out
    }

    /// `Δ°_L(ω) = α₁⋆β₁ ⊗ (α₂⊗β₂)` and `Δ°_R(ω) = (α₁⊗β₁) ⊗ α₂⋆β₂` on `n³` coordinates.
    fn coactions(&self, w: &[Scalar]) -> (Vector, Vector) {
        let n = self.dim();
        let mut l = vec![Scalar::zero(); n * n * n];
        let mut r = vec![Scalar::zero(); n * n * n];
        for (p, c) in w.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (ca, cb) = (self.cop(&self.basis(p / n)), self.cop(&self.basis(p % n)));
            for (s, x) in ca.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (t, y) in cb.iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    let k = &(c * x) * y;
                    let (a1, a2, b1, b2) = (s / n, s % n, t / n, t % n);
                    let left = self.conv(&self.basis(a1), &self.basis(b1));
                    let right = self.conv(&self.basis(a2), &self.basis(b2));
                    for z in 0..n {
                        if !left[z].is_zero() {
                            let v = &k * &left[z];
                            l[z * n * n + a2 * n + b2] = &l[z * n * n + a2 * n + b2] + &v;
                        }
                        if !right[z].is_zero() {
                            let v = &k * &right[z];
                            r[a1 * n * n + b1 * n + z] = &r[a1 * n * n + b1 * n + z] + &v;
                        }
                    }
                }
            }
        }
        (l, r)
    }
}

fn tensor2(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Pairing between `Υ^U_H` and `Kerμ°`: `⟨[X⊗Y]|Σα⊗β⟩ = Σα(X)β(Y)`.
pub struct UniversalPairing<'a> {
    pub dual: DualHopf<'a>,
    pub bicovariant: BicovariantUniversal<'a>,
    pub ker_mu: Subspace,
}

impl<'a> UniversalPairing<'a> {
    pub fn build(h: &'a HopfAlgebra) -> HResult<UniversalPairing<'a>> {
        let dual = DualHopf::build(h)?;
        let ker_mu = dual.ker_mu();
        Ok(UniversalPairing { bicovariant: BicovariantUniversal::build(h)?, dual, ker_mu })
    }

    fn n(&self) -> usize {
        self.dual.dim()
    }

    /// `⟨m|ω⟩` for `m ∈ Υ^U` in quotient coordinates and `ω ∈ Kerμ°`.
    pub fn pair(&self, m: &[Scalar], w: &[Scalar]) -> Scalar {
        dot(&self.bicovariant.universal.quotient().section().apply(m), w)
    }

    pub fn gram(&self) -> Matrix {
        let u = &self.bicovariant.universal;
        let rows: Vec<Vector> = (0..u.dim())
            .map(|r| {
                let e = unit_vec(u.dim(), r);
                self.ker_mu.basis().iter().map(|w| self.pair(&e, w)).collect()
            })
            .collect();
        Matrix::from_rows(&rows)
    }

    pub fn gram_rank(&self) -> usize {
        self.gram().rank()
    }

    /// `v(X̄)(Σ dα⋆β) = Σ α(X − ε(X)1)β(1)`, as coordinates on the basis of `Kerμ°`.
    pub fn vector_field(&self, x: &[Scalar]) -> Vector {
        self.ker_mu.basis().iter().map(|w| self.vector_field_eval(x, w)).collect()
    }

    /// `ω = Σ_{ij} ω_ij e^i⊗e^j = Σ ω_ij d(e^i)◁e^j` for `ω ∈ Kerμ°`.
    fn vector_field_eval(&self, x: &[Scalar], w: &[Scalar]) -> Scalar {
        let n = self.n();
        let h = self.dual.hopf;
        let ex = dot(h.coalgebra().counit(), x);
        let mut dx = x.to_vec();
        dx[h.unit()] = &dx[h.unit()] - &ex;
        let mut acc = Scalar::zero();
        for (p, c) in w.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = (p / n, p % n);
                let beta_one = self.dual.counit(&self.dual.basis(j));
                acc = &acc + &(c * &(&dx[i] * &beta_one));
            }
        }
        acc
    }

    /// Functional on `Kerμ°` given in basis coordinates, evaluated on any `ω ∈ Kerμ°`.
    pub fn apply_functional(&self, v: &[Scalar], w: &[Scalar]) -> HResult<Scalar> {
        let c = self.ker_mu.coordinates(w).ok_or_else(|| HopfError::Invalid("element is not in Kerμ°".into()))?;
        Ok(dot(v, &c))
    }

    /// `𝒯∘ = {v : v(dα◁β) = v(dα)β(1)}` in coordinates dual to the `Kerμ°` basis.
    pub fn tangent_space(&self) -> HResult<Subspace> {
        let n = self.n();
        let k = self.ker_mu.dim();
        let mut rows = Vec::new();
        for a in 0..n {
            let da = self.dual.d(&self.dual.basis(a));
            let ca = self.coords(&da)?;
            for b in 0..n {
                let beta = self.dual.basis(b);
                let cb = self.coords(&self.dual.act_right(&da, &beta))?;
                let b1 = self.dual.counit(&beta);
                rows.push((0..k).map(|t| &cb[t] - &(&ca[t] * &b1)).collect::<Vector>());
            }
        }
        Ok(Matrix::from_rows(&rows).kernel())
    }

    fn coords(&self, w: &[Scalar]) -> HResult<Vector> {
        self.ker_mu.coordinates(w).ok_or_else(|| HopfError::Invalid("element is not in Kerμ°".into()))
    }

    /// Kernel of `X̄ ↦ v(X̄)` in `H̄` coordinates.
    pub fn vector_field_kernel(&self) -> Subspace {
        let h = self.dual.hopf;
        let bars = h.bar_indices();
        let cols: Vec<Vector> = bars.iter().map(|&i| self.vector_field(&unit_vec(self.n(), i))).collect();
        Matrix::from_columns(self.ker_mu.dim(), &cols).kernel()
    }

    /// `v^▷(α) = v(dα₁)α₂`.
    pub fn vector_field_action(&self, v: &[Scalar], alpha: &[Scalar]) -> HResult<Vector> {
        let n = self.n();
        let c = self.dual.cop(alpha);
        let mut out = vec![Scalar::zero(); n];
        for p in 0..n {
            for q in 0..n {
                let x = &c[p * n + q];
                if !x.is_zero() {
                    let val = self.apply_functional(v, &self.dual.d(&self.dual.basis(p)))?;
                    out[q] = &out[q] + &(x * &val);
                }
            }
        }
        Ok(out)
    }

    /// Exhaustive check of the duality identities on basis tuples.
    pub fn verify(&self) -> HResult<DualityReport> {
        let mut rep = DualityReport::default();
        let n = self.n();
        let h = self.dual.hopf;
        let d = &self.dual;
        let u = &self.bicovariant.universal;
        let e = |k: usize| unit_vec(n, k);
        let lab = |k: usize| h.label(k).to_string();
        let omegas = self.ker_mu.basis().to_vec();

        let mut r = Report::default();
        for (wi, w) in omegas.iter().enumerate() {
            for z in 0..n {
                let mut t = vec![Scalar::zero(); n * n];
                for (a, b, c) in h.coalgebra().coproduct(z) {
                    t[a * n + b] = &t[a * n + b] + c;
                }
                r.check(dot(&t, w).is_zero(), "vanishes on ImΔ", || format!("ω{wi}, {}", lab(z)));
            }
        }
        rep.push("Kerμ° annihilates ImΔ", r);

        let mut r = Report::default();
        r.check(self.ker_mu.dim() == n * n - n, "dim Kerμ° = n² − n", || format!("dim {}", self.ker_mu.dim()));
        for a in 0..n {
            r.check(self.ker_mu.contains(&d.d(&e(a))), "μ°∘d° = 0", || format!("{}'", lab(a)));
        }
        rep.push("universal one-forms", r);

        let mut r = Report::default();
        for x in 0..n {
            for a in 0..n {
                let at = || format!("{}, {}'", lab(x), lab(a));
                r.check(d.eval(&e(a), &h.antipode_matrix().column(x)) == d.eval(&d.antipode(&e(a)), &e(x)), "S", at);
                for y in 0..n {
                    let xy = h.product_vec(x, y)?;
                    let c = d.cop(&e(a));
                    r.check(d.eval(&e(a), &xy) == c[x * n + y], "product", || format!("{}{}, {}'", lab(x), lab(y), lab(a)));
                    for b in 0..n {
                        let lhs = d.eval(&d.conv(&e(a), &e(b)), &e(x));
                        let rhs = h.coalgebra().coproduct(x).iter().fold(Scalar::zero(), |acc, (p, q, c)| &acc + &(c * &(&e(a)[*p] * &e(b)[*q])));
                        r.check(lhs == rhs, "convolution", || format!("{}, {}'⋆{}'", lab(x), lab(a), lab(b)));
                    }
                }
            }
        }
        rep.push("vf8", r);

        let (mut l2, mut r2, mut l3, mut l4, mut l5, mut l6) =
            (Report::default(), Report::default(), Report::default(), Report::default(), Report::default(), Report::default());
        let wmaps = hopf::woronowicz_maps(h)?;
        let left_legs = |m: &[Scalar]| u.bicomodule().left_legs(m);
        let right_legs = |m: &[Scalar]| u.bicomodule().right_legs(m);
        for (wi, w) in omegas.iter().enumerate() {
            let (cl, cr) = d.coactions(w);
            let sp = d.s_prime(w);
            for x in 0..n {
                for y in 0..n {
                    let m = u.class(x, y);
                    let at = |extra: String| format!("ω{wi}, [{}⊗{}]{extra}", lab(x), lab(y));
                    for z in 0..n {
                        let lhs = self.pair(&self.bicovariant.left_action(z).apply(&m), w);
                        l2.check(lhs == cl[z * n * n + x * n + y], "left covariance", || at(format!(", {}", lab(z))));
                        let lhs = self.pair(&self.bicovariant.right_action(z).apply(&m), w);
                        r2.check(lhs == cr[x * n * n + y * n + z], "right covariance", || at(format!(", {}", lab(z))));
                    }
                    for g in 0..n {
                        let gam = e(g);
                        let lhs = left_legs(&m).iter().fold(Scalar::zero(), |acc, (c, leg)| &acc + &(&gam[*c] * &self.pair(leg, w)));
                        l3.check(lhs == self.pair(&m, &d.act_left(&gam, w)), "left coaction", || at(format!(", {}'", lab(g))));
                        let lhs = right_legs(&m).iter().fold(Scalar::zero(), |acc, (c, leg)| &acc + &(&gam[*c] * &self.pair(leg, w)));
                        l4.check(lhs == self.pair(&m, &d.act_right(w, &gam)), "right coaction", || at(format!(", {}'", lab(g))));
                    }
                    // [X⊗1]◁Y = r(X̄⊗Y) = ⟨X̄⊗Y|s'(ω)⟩ = ⟨[X⊗1]⊗Y|Δ°_R ω⟩
                    if x != h.unit() {
                        let one = h.unit();
                        let mut xbar = e(x);
                        xbar[one] = &xbar[one] - &h.coalgebra().counit()[x];
                        let xy = tensor2(&xbar, &e(y));
                        let a1 = self.pair(&self.bicovariant.right_action(y).apply(&u.class(x, one)), w);
                        let a2 = dot(&wmaps.r.apply(&xy), w);
                        let a3 = dot(&xy, &sp);
                        let a4 = cr[x * n * n + one * n + y].clone();
                        l6.check(a1 == a2 && a2 == a3 && a3 == a4, "Woronowicz map duality", || at(format!(": {a1}, {a2}, {a3}, {a4}")));
                    }
                }
            }
        }
        let du = u.delta_u();
        for a in 0..n {
            let alpha = e(a);
            let dal = d.d(&alpha);
            for x in 0..n {
                for y in 0..n {
                    let m = u.class(x, y);
                    let lhs = d.eval(&alpha, &du.apply(&m));
                    let mid = self.pair(&m, &dal);
                    let eps = h.coalgebra().counit();
                    let rhs = &(&alpha[x] * &eps[y]) - &(&alpha[y] * &eps[x]);
                    l5.check(lhs == mid && mid == rhs, "coderivation duality", || format!("{}', [{}⊗{}]", lab(a), lab(x), lab(y)));
                }
            }
        }
        rep.push("cd2a", l2);
        rep.push("cd2", r2);
        rep.push("cd3", l3);
        rep.push("cd4", l4);
        rep.push("cd5", l5);
        rep.push("cd6", l6);
        self.verify_vector_fields(&mut rep)?;
        Ok(rep)
    }

    /// `Σ (α₁⋆S°α₃)(X)·v(Ȳ)(dα₂)`; with `antipode = false` the `S°` is dropped.
    pub fn adjoint_rhs(&self, x: usize, vy: &[Scalar], alpha: &[Scalar], antipode: bool) -> HResult<Scalar> {
        let n = self.n();
        let d = &self.dual;
        let c1 = d.cop(alpha);
        let mut rhs = Scalar::zero();
        for p in 0..n {
            for q in 0..n {
                if c1[p * n + q].is_zero() {
                    continue;
                }
                let c2 = d.cop(&d.basis(q));
                for s in 0..n {
                    for t in 0..n {
                        let k = &c1[p * n + q] * &c2[s * n + t];
                        if k.is_zero() {
                            continue;
                        }
                        let third = if antipode { d.antipode(&d.basis(t)) } else { d.basis(t) };
                        let outer = d.eval(&d.conv(&d.basis(p), &third), &d.basis(x));
                        if outer.is_zero() {
                            continue;
                        }
                        let inner = self.apply_functional(vy, &d.d(&d.basis(s)))?;
                        rhs = &rhs + &(&k * &(&outer * &inner));
                    }
                }
            }
        }
        Ok(rhs)
    }

    fn verify_vector_fields(&self, rep: &mut DualityReport) -> HResult<()> {
        let n = self.n();
        let h = self.dual.hopf;
        let d = &self.dual;
        let e = |k: usize| unit_vec(n, k);
        let lab = |k: usize| h.label(k).to_string();
        let bars = h.bar_indices();
        let tangent = self.tangent_space()?;
        let eps = h.coalgebra().counit().to_vec();

        let mut r = Report::default();
        r.check(tangent.dim() + 1 == n, "dim 𝒯∘ = n − 1", || format!("dim {}", tangent.dim()));
        for &x in &bars {
            let v = self.vector_field(&e(x));
            r.check(tangent.contains(&v), "v(X̄) ∈ 𝒯∘", || lab(x));
        }
        rep.push("tangent space", r);

        let mut r = Report::default();
        for &x in &bars {
            let v = self.vector_field(&e(x));
            for b in 0..n {
                let beta = e(b);
                // X̄⋆β = β(X₁)X̄₂
                let mut xb = vec![Scalar::zero(); n];
                for (p, q, c) in h.coalgebra().coproduct(x) {
                    xb[*q] = &xb[*q] + &(c * &beta[*p]);
                }
                xb[h.unit()] = Scalar::zero();
                let vxb = self.vector_field(&xb);
                for a in 0..n {
                    let alpha = e(a);
                    let da = d.d(&alpha);
                    let e1 = self.apply_functional(&vxb, &da)?;
                    let e2 = self.apply_functional(&v, &d.act_left(&beta, &da))?;
                    let rhs = sub(&d.d(&d.conv(&beta, &alpha)), &d.act_right(&d.d(&beta), &alpha));
                    let e3 = self.apply_functional(&v, &rhs)?;
                    r.check(e1 == e2 && e2 == e3, "Leibniz", || format!("{}, {}', {}'", lab(x), lab(a), lab(b)));
                }
            }
        }
        rep.push("svf3", r);

        let (mut r4, mut r5) = (Report::default(), Report::default());
        for x in 0..n {
            for &y in &bars {
                let ad = hopf::ad_left(h, &hopf::mon(x), &hopf::mon(y))?;
                let mut adv = vec![Scalar::zero(); n];
                for (k, c) in &ad {
                    adv[*k] = c.clone();
                }
                let mut br = adv.clone();
                br[y] = &br[y] - &eps[x];
                let (vad, vbr, vy) = (self.vector_field(&adv), self.vector_field(&br), self.vector_field(&e(y)));
                for a in 0..n {
                    let alpha = e(a);
                    let rhs = self.adjoint_rhs(x, &vy, &alpha, true)?;
                    let da = d.d(&alpha);
                    let lhs = self.apply_functional(&vad, &da)?;
                    r4.check(lhs == rhs, "adjoint", || format!("{}, {}, {}'", lab(x), lab(y), lab(a)));
                    let lhs = self.apply_functional(&vbr, &da)?;
                    let rhs5 = &rhs - &(&eps[x] * &self.apply_functional(&vy, &da)?);
                    r5.check(lhs == rhs5, "bracket", || format!("{}, {}, {}'", lab(x), lab(y), lab(a)));
                }
            }
        }
        rep.push("svf4", r4);
        rep.push("svf5", r5);

        let mut r = Report::default();
        for (ti, v) in tangent.basis().iter().enumerate() {
            for a in 0..n {
                let alpha = e(a);
                let lhs = d.cop(&self.vector_field_action(v, &alpha)?);
                let c = d.cop(&alpha);
                let mut rhs = vec![Scalar::zero(); n * n];
                for p in 0..n {
                    for q in 0..n {
                        if !c[p * n + q].is_zero() {
                            let vp = self.vector_field_action(v, &e(p))?;
                            axpy(&mut rhs, &c[p * n + q], &tensor2(&vp, &e(q)));
                        }
                    }
                }
                r.check(lhs == rhs, "comodule map", || format!("v{ti}, {}'", lab(a)));
            }
        }
        rep.push("cvf12", r);
        Ok(())
    }
}

/// Checks that `m` (columns are images of source basis vectors) is a Hopf algebra isomorphism.
pub fn check_hopf_isomorphism(src: &HopfAlgebra, tgt: &HopfAlgebra, m: &Matrix) -> HResult<Report> {
    let n = src.dim();
    let mut rep = Report::default();
    if tgt.dim() != n || m.rows() != n || m.cols() != n {
        rep.fail("dimension", format!("{} vs {}", n, tgt.dim()));
        return Ok(rep);
    }
    rep.check(m.rank() == n, "bijective", || "rank deficient".into());
    rep.check(m.column(src.unit()) == unit_vec(n, tgt.unit()), "unit", String::new);
    for i in 0..n {
        let img = m.column(i);
        for j in 0..n {
            let lhs = m.apply(&src.product_vec(i, j)?);
            let rhs = tgt.mul_vec(&img, &m.column(j))?;
            rep.check(lhs == rhs, "multiplicative", || format!("{}·{}", src.label(i), src.label(j)));
        }
        let mut lhs = vec![Scalar::zero(); n * n];
        for (a, b, c) in src.coalgebra().coproduct(i) {
            axpy(&mut lhs, c, &tensor2(&m.column(*a), &m.column(*b)));
        }
        let rhs = tgt.coalgebra().apply_coproduct(&img);
        rep.check(lhs == rhs, "comultiplicative", || src.label(i).to_string());
        rep.check(src.coalgebra().counit()[i] == tgt.coalgebra().counit_of(&img), "counit", || src.label(i).to_string());
        let lhs = m.apply(&src.antipode_matrix().column(i));
        rep.check(lhs == tgt.antipode_matrix().apply(&img), "antipode", || src.label(i).to_string());
    }
    Ok(rep)
}

fn group_likes(h: &HopfAlgebra) -> Vec<Vector> {
    // coefficients in {-2, ..., 2} on the given basis
    let n = h.dim();
    let mut out = Vec::new();
    let total = 5usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vector = (0..n)
            .map(|_| {
                let d = c % 5;
                c /= 5;
                Scalar::from_i64(d as i64 - 2)
            })
            .collect();
        if v.iter().all(Scalar::is_zero) {
            continue;
        }
        if h.coalgebra().apply_coproduct(&v) == tensor2(&v, &v) {
            out.push(v);
        }
    }
    out
}

/// Search an isomorphism `src → tgt` for `src` generated by a group-like `g` and a
/// `(g, 1)`-skew-primitive `x`. Images of `g` range over group-likes of `tgt` with
/// coefficients in `{-2, ..., 2}`, images of `x` over the matching skew-primitive space, which is
/// the solution set of a linear system.
pub fn find_generated_isomorphism(src: &HopfAlgebra, tgt: &HopfAlgebra, g: usize, x: usize) -> HResult<Option<Matrix>> {
    let n = src.dim();
    if tgt.dim() != n {
        return Ok(None);
    }
    let one = unit_vec(n, tgt.unit());
    for gam in group_likes(tgt) {
        if gam == one {
            continue;
        }
        // {y : Δy = y⊗1 + γ⊗y}
        let mut sys = Matrix::zeros(n * n, n);
        for k in 0..n {
            let ek = unit_vec(n, k);
            let lhs = tgt.coalgebra().apply_coproduct(&ek);
            let rhs: Vector = tensor2(&ek, &one).iter().zip(tensor2(&gam, &ek)).map(|(a, b)| a + &b).collect();
            for (r, v) in sub(&lhs, &rhs).into_iter().enumerate() {
                sys.set(r, k, v);
            }
        }
        let trivial = Subspace::from_vectors(n, &[sub(&one, &gam)]);
        for y in sys.kernel().basis() {
            if trivial.contains(y) {
                continue;
            }
            if let Some(m) = extend_on_generators(src, tgt, &[(g, gam.clone()), (x, y.clone())])? {
                if check_hopf_isomorphism(src, tgt, &m)?.ok() {
                    return Ok(Some(m));
                }
            }
        }
    }
    Ok(None)
}

/// Extend images of generators multiplicatively to all basis vectors reachable as
/// scalar multiples of monomials.
fn extend_on_generators(src: &HopfAlgebra, tgt: &HopfAlgebra, gens: &[(usize, Vector)]) -> HResult<Option<Matrix>> {
    let n = src.dim();
    let mut img: Vec<Option<Vector>> = vec![None; n];
    img[src.unit()] = Some(unit_vec(n, tgt.unit()));
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..n {
            let Some(ik) = img[k].clone() else { continue };
            for (gi, gv) in gens {
                let p = src.product_vec(k, *gi)?;
                let nz: Vec<usize> = (0..n).filter(|&t| !p[t].is_zero()).collect();
                if let [t] = nz[..] {
                    if img[t].is_none() {
                        let c = p[t].inv().map_err(|e| HopfError::Invalid(e.to_string()))?;
                        let v: Vector = tgt.mul_vec(&ik, gv)?.iter().map(|z| z * &c).collect();
                        img[t] = Some(v);
                        changed = true;
                    }
                }
            }
        }
    }
    if img.iter().any(Option::is_none) {
        return Ok(None);
    }
    let cols: Vec<Vector> = img.into_iter().map(Option::unwrap).collect();
    Ok(Some(Matrix::from_columns(n, &cols)))
}

/// `X ↦ (α ↦ α(X))` from `H` into `dd.as_hopf()`, where `dd` is the dual of `dual.as_hopf()`.
pub fn double_dual_map(dual: &DualHopf<'_>, dd: &DualHopf<'_>) -> Matrix {
    let n = dual.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|x| {
            let vals: Vector = (0..n).map(|k| dual.eval(&dual.from_f(&unit_vec(n, k)), &unit_vec(n, x))).collect();
            dd.to_f(&vals)
        })
        .collect();
    Matrix::from_columns(n, &cols)
}

pub fn format_dual(dual: &DualHopf<'_>, a: &[Scalar]) -> String {
    let labels: Vec<String> = (0..dual.dim()).map(|k| format!("{}'", dual.hopf.label(k))).collect();
    format_dense(a, &labels, dual.coalgebra().field())
}
