//! Built-in coalgebras and Hopf algebras.
//!
//! Finite examples are emitted as structure-constant tables. The quantum
//! groups are [`PbwAlgebra`]s: words in an ordered alphabet rewritten to
//! PBW normal form on demand, with memoized products, coproducts and
//! antipodes. Their truncation bound only limits which vectors a
//! generation run may admit.

use crate::coalgebra::{Coalgebra, CoproductTerms, Report};
use crate::hopf::{self, mon, Elem, HResult, HopfAlgebra, HopfError, HopfOps, ProductTerms, Tensor};
use crate::linalg::{sparse_add_scaled, sparse_add_term};
use crate::scalar::{Field, Scalar};
use std::cell::{Cell, RefCell};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PresentationError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("unknown built-in `{0}`")]
    UnknownBuiltin(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

fn s(n: i64) -> Scalar {
    Scalar::from_i64(n)
}

/// Small coalgebras used throughout the examples.
pub mod coalgebras {
    use super::*;
    use crate::bicomodule::UniversalBicomodule;

    /// The one-dimensional coalgebra `𝕂`.
    pub fn point() -> Coalgebra {
        Coalgebra::new(Field::Rational, vec!["1".into()], vec![vec![(0, 0, Scalar::one())]], vec![Scalar::one()])
    }

    /// Matrix coalgebra `M_n`: `Δe_ij = Σ_k e_ik⊗e_kj`, `ε(e_ij) = δ_ij`.
    pub fn matrix_coalgebra(n: usize, labels: Option<Vec<String>>) -> Coalgebra {
        let idx = |i: usize, j: usize| i * n + j;
        let labels = labels.unwrap_or_else(|| (0..n * n).map(|k| format!("e{}{}", k / n + 1, k % n + 1)).collect());
        let mut delta = Vec::new();
        let mut eps = Vec::new();
        for i in 0..n {
            for j in 0..n {
                delta.push((0..n).map(|k| (idx(i, k), idx(k, j), Scalar::one())).collect());
                eps.push(if i == j { Scalar::one() } else { Scalar::zero() });
            }
        }
        Coalgebra::new(Field::Rational, labels, delta, eps)
    }

    /// `M2x2` with `x = e11`, `u = e12`, `v = e21`, `y = e22`.
    pub fn m2x2() -> Coalgebra {
        matrix_coalgebra(2, Some(vec!["x".into(), "u".into(), "v".into(), "y".into()]))
    }

    /// Sweedler coalgebra on `{1, g, X, Xg}`.
    pub fn sweedler_coalgebra() -> Coalgebra {
        super::finite::sweedler().coalgebra().clone()
    }

    /// `C_V = 𝕂 ⊕ V` with `1` group-like and `x_i` primitive.
    pub fn cv(dim: usize) -> Coalgebra {
        let mut labels = vec!["1".to_string()];
        let mut delta: Vec<CoproductTerms> = vec![vec![(0, 0, Scalar::one())]];
        let mut eps = vec![Scalar::one()];
        for i in 1..=dim {
            labels.push(format!("x{i}"));
            delta.push(vec![(i, 0, Scalar::one()), (0, i, Scalar::one())]);
            eps.push(Scalar::zero());
        }
        Coalgebra::new(Field::Rational, labels, delta, eps)
    }

    /// Divided power coalgebra `Δ(Xⁿ) = Σ_j X^j⊗X^{n-j}` truncated at `X^N`.
    pub fn divided_power(n: usize) -> Coalgebra {
        let labels = (0..=n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            })
            .collect();
        let delta = (0..=n).map(|k| (0..=k).map(|j| (j, k - j, Scalar::one())).collect()).collect();
        let eps = (0..=n).map(|k| if k == 0 { Scalar::one() } else { Scalar::zero() }).collect();
        Coalgebra::new(Field::Rational, labels, delta, eps)
    }

    /// Set coalgebra on points `p1..pn`, all group-like.
    pub fn set_coalgebra(n: usize) -> Coalgebra {
        Coalgebra::new(
            Field::Rational,
            (1..=n).map(|i| format!("p{i}")).collect(),
            (0..n).map(|i| vec![(i, i, Scalar::one())]).collect(),
            vec![Scalar::one(); n],
        )
    }

    /// `υᵏ = Σ_{i<k} (1 − i/k)[X^{k−i}⊗X^i]` in `Υ^U` of a divided power coalgebra.
    pub fn upsilon(u: &UniversalBicomodule, k: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); u.dim()];
        for i in 0..k {
            let c = Scalar::ratio((k - i) as i64, k as i64);
            for (x, y) in v.iter_mut().zip(u.class(k - i, i)) {
                *x = &*x + &(&c * &y);
            }
        }
        v
    }
}

/// Finite-dimensional Hopf algebras given by tables.
pub mod finite {
    use super::*;

    /// Sweedler's algebra: `g² = 1`, `X² = 0`, `Xg = −gX`, `ΔX = X⊗1 + g⊗X`, `S(X) = −gX`.
    pub fn sweedler() -> HopfAlgebra {
        let labels = vec!["1".to_string(), "g".into(), "X".into(), "Xg".into()];
        let (one, g, x, xg) = (0, 1, 2, 3);
        let c = Coalgebra::new(
            Field::Rational,
            labels,
            vec![
                vec![(one, one, Scalar::one())],
                vec![(g, g, Scalar::one())],
                vec![(x, one, Scalar::one()), (g, x, Scalar::one())],
                vec![(xg, g, Scalar::one()), (one, xg, Scalar::one())],
            ],
            vec![Scalar::one(), Scalar::one(), Scalar::zero(), Scalar::zero()],
        );
        let p = |k: usize, c: i64| Some(vec![(k, s(c))]);
        let zero: Option<ProductTerms> = Some(vec![]);
        let product = vec![
            vec![p(one, 1), p(g, 1), p(x, 1), p(xg, 1)],
            vec![p(g, 1), p(one, 1), p(xg, -1), p(x, -1)],
            vec![p(x, 1), p(xg, 1), zero.clone(), zero.clone()],
            vec![p(xg, 1), p(x, 1), zero.clone(), zero],
        ];
        let antipode = vec![vec![(one, s(1))], vec![(g, s(1))], vec![(xg, s(1))], vec![(x, s(-1))]];
        HopfAlgebra::new(c, product, one, antipode)
    }

    /// Group algebra from a multiplication table (`table[a][b]` is the index of `ab`).
    pub fn group_algebra(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<HopfAlgebra, PresentationError> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&k| k >= n)) {
            return Err(PresentationError::Invalid("multiplication table is not square over the labels".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| PresentationError::Invalid("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(PresentationError::Invalid(format!("not associative at {},{},{}", labels[a], labels[b], labels[c])));
                    }
                }
            }
        }
        let mut inv = Vec::new();
        for a in 0..n {
            let b = (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| PresentationError::Invalid(format!("{} has no inverse", labels[a])))?;
            inv.push(b);
        }
        let c = Coalgebra::new(Field::Rational, labels, (0..n).map(|i| vec![(i, i, Scalar::one())]).collect(), vec![Scalar::one(); n]);
        let product = table.iter().map(|r| r.iter().map(|&k| Some(vec![(k, Scalar::one())])).collect()).collect();
        let antipode = inv.iter().map(|&b| vec![(b, Scalar::one())]).collect();
        Ok(HopfAlgebra::new(c, product, e, antipode))
    }

    /// `𝕂(ℤ_n)` on `1, g, g^2, ...`.
    pub fn cyclic_group_algebra(n: usize) -> HopfAlgebra {
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        group_algebra(labels, table).expect("cyclic group")
    }

    pub fn group_algebra_z2() -> HopfAlgebra {
        cyclic_group_algebra(2)
    }

    pub fn group_algebra_z4() -> HopfAlgebra {
        cyclic_group_algebra(4)
    }

    /// `𝕂(S₃)` on `e, r, r2, s, sr, sr2` with `r = (123)`, `s = (12)`.
    pub fn group_algebra_s3() -> HopfAlgebra {
        // permutations as images of (0,1,2); composition (ab)(x) = a(b(x))
        let r = [1usize, 2, 0];
        let sw = [1usize, 0, 2];
        let id = [0usize, 1, 2];
        let comp = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let r2 = comp(&r, &r);
        let elems = [id, r, r2, sw, comp(&sw, &r), comp(&sw, &r2)];
        let labels = ["e", "r", "r2", "s", "sr", "sr2"].iter().map(|x| x.to_string()).collect();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| elems.iter().position(|c| *c == comp(a, b)).expect("closed")).collect())
            .collect();
        group_algebra(labels, table).expect("S3")
    }
}

// ---------------------------------------------------------------------------
// PBW rewriting.

pub type Word = Vec<u8>;

#[derive(Clone, Debug, PartialEq)]
pub struct Letter {
    pub name: String,
    /// Position in the monomial order; a group-like and its inverse share a rank.
    pub rank: u8,
    pub inverse: Option<u8>,
    pub weight: usize,
}

/// Right-hand side of a rewrite rule `ab → Σ c·w`.
pub type Rhs = Vec<(Scalar, Word)>;

/// Raw data of a PBW presentation, before normalization.
#[derive(Clone, Debug)]
pub struct PbwData {
    pub name: String,
    pub field: Field,
    pub letters: Vec<Letter>,
    pub rules: BTreeMap<(u8, u8), Rhs>,
    pub coproduct: Vec<Vec<(Scalar, Word, Word)>>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<Rhs>,
    pub truncation: usize,
}

impl PbwData {
    fn letter(&self, name: &str) -> u8 {
        self.letters.iter().position(|l| l.name == name).unwrap_or_else(|| panic!("letter {name}")) as u8
    }
    fn w(&self, names: &[&str]) -> Word {
        names.iter().map(|n| self.letter(n)).collect()
    }
}

const MAX_DEPTH: usize = 4000;

pub struct PbwAlgebra {
    data: PbwData,
    rules: HashMap<(u8, u8), Elem<Word>>,
    delta: Vec<Tensor<Word>>,
    antipode: Vec<Elem<Word>>,
    normal_cache: RefCell<HashMap<Word, Elem<Word>>>,
    delta_cache: RefCell<HashMap<Word, Tensor<Word>>>,
    antipode_cache: RefCell<HashMap<Word, Elem<Word>>>,
    depth: Cell<usize>,
    steps: Cell<u64>,
    budget: u64,
}

impl PbwAlgebra {
    pub fn new(mut data: PbwData) -> Result<PbwAlgebra, PresentationError> {
        let n = data.letters.len();
        for (i, l) in data.letters.iter().enumerate() {
            if let Some(j) = l.inverse {
                let inv = data.letters.get(j as usize).ok_or_else(|| PresentationError::Invalid(format!("bad inverse of {}", l.name)))?;
                if inv.inverse != Some(i as u8) || inv.rank != l.rank {
                    return Err(PresentationError::Invalid(format!("inverse pair {} is inconsistent", l.name)));
                }
                data.rules.entry((i as u8, j)).or_insert_with(|| vec![(Scalar::one(), vec![])]);
            }
        }
        // every out-of-order pair needs a rule
        for a in 0..n {
            for b in 0..n {
                let (la, lb) = (&data.letters[a], &data.letters[b]);
                let descent = la.rank > lb.rank || (la.rank == lb.rank && a != b);
                if descent && !data.rules.contains_key(&(a as u8, b as u8)) {
                    return Err(PresentationError::Invalid(format!("no rewrite rule for {}{}", la.name, lb.name)));
                }
            }
        }
        if data.coproduct.len() != n || data.counit.len() != n || data.antipode.len() != n {
            return Err(PresentationError::Invalid("Hopf data must be given for every letter".into()));
        }
        let to_elem = |r: &Rhs| {
            let mut e = Elem::new();
            for (c, w) in r {
                sparse_add_term(&mut e, w.clone(), c);
            }
            e
        };
        let rules = data.rules.iter().map(|(k, r)| (*k, to_elem(r))).collect();
        let mut alg = PbwAlgebra {
            rules,
            delta: Vec::new(),
            antipode: Vec::new(),
            normal_cache: RefCell::new(HashMap::new()),
            delta_cache: RefCell::new(HashMap::new()),
            antipode_cache: RefCell::new(HashMap::new()),
            depth: Cell::new(0),
            steps: Cell::new(0),
            budget: 200_000_000,
            data,
        };
        let mut delta = Vec::new();
        for terms in &alg.data.coproduct {
            let mut t = Tensor::new();
            for (c, a, b) in terms {
                let (na, nb) = (alg.normal(a)?, alg.normal(b)?);
                for (x, u) in &na {
                    for (y, v) in &nb {
                        sparse_add_term(&mut t, (x.clone(), y.clone()), &(c * &(u * v)));
                    }
                }
            }
            delta.push(t);
        }
        let mut antipode = Vec::new();
        for r in &alg.data.antipode {
            let mut e = Elem::new();
            for (c, w) in r {
                sparse_add_scaled(&mut e, &alg.normal(w)?, c);
            }
            antipode.push(e);
        }
        alg.delta = delta;
        alg.antipode = antipode;
        Ok(alg)
    }

    pub fn data(&self) -> &PbwData {
        &self.data
    }
    pub fn name(&self) -> &str {
        &self.data.name
    }
    pub fn letters(&self) -> &[Letter] {
        &self.data.letters
    }
    pub fn letter_index(&self, name: &str) -> Option<u8> {
        self.data.letters.iter().position(|l| l.name == name).map(|i| i as u8)
    }
    pub fn with_truncation(mut self, n: usize) -> PbwAlgebra {
        self.data.truncation = n;
        self
    }
    pub fn with_budget(mut self, steps: u64) -> PbwAlgebra {
        self.budget = steps;
        self
    }

    fn word_label(&self, w: &[u8]) -> String {
        w.iter().map(|&l| self.data.letters[l as usize].name.clone()).collect::<Vec<_>>().join("")
    }

    /// PBW normal form of an arbitrary word.
    pub fn normal(&self, w: &[u8]) -> HResult<Elem<Word>> {
        if let Some(r) = self.normal_cache.borrow().get(w) {
            return Ok(r.clone());
        }
        let pos = (0..w.len().saturating_sub(1)).find(|&i| self.rules.contains_key(&(w[i], w[i + 1])));
        let out = match pos {
            None => mon(w.to_vec()),
            Some(i) => {
                let steps = self.steps.get() + 1;
                self.steps.set(steps);
                if steps > self.budget || self.depth.get() > MAX_DEPTH {
                    return Err(HopfError::Budget(self.word_label(w)));
                }
                self.depth.set(self.depth.get() + 1);
                let mut acc = Elem::new();
                let rule = &self.rules[&(w[i], w[i + 1])];
                let res: HResult<()> = (|| {
                    for (r, c) in rule {
                        let mut nw = w[..i].to_vec();
                        nw.extend_from_slice(r);
                        nw.extend_from_slice(&w[i + 2..]);
                        sparse_add_scaled(&mut acc, &self.normal(&nw)?, c);
                    }
                    Ok(())
                })();
                self.depth.set(self.depth.get() - 1);
                res?;
                acc
            }
        };
        self.normal_cache.borrow_mut().insert(w.to_vec(), out.clone());
        Ok(out)
    }

    /// Normal form with terms above degree `n` split off as an overflow part.
    pub fn normal_order_truncated(&self, w: &[u8], n: usize) -> HResult<(Elem<Word>, Elem<Word>)> {
        let full = self.normal(w)?;
        let (kept, over) = full.into_iter().partition(|(m, _)| self.degree(m) <= n);
        Ok((kept, over))
    }

    /// Parse a word of letter names such as `KE` or `F E`.
    pub fn parse_word(&self, text: &str) -> Option<Word> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            out.extend(split_names(tok, &self.letter_names())?.into_iter().map(|i| i as u8));
        }
        Some(out)
    }

    fn letter_names(&self) -> Vec<String> {
        self.data.letters.iter().map(|l| l.name.clone()).collect()
    }

    fn is_normal_extension(&self, w: &[u8], l: u8) -> bool {
        match w.last() {
            None => true,
            Some(&p) => !self.rules.contains_key(&(p, l)),
        }
    }

    /// Normal words of total letter count at most `len`.
    pub fn normal_words(&self, len: usize) -> Vec<Word> {
        let mut out = vec![vec![]];
        let mut frontier = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in 0..self.data.letters.len() as u8 {
                    if self.is_normal_extension(w, l) {
                        let mut nw: Word = w.clone();
                        nw.push(l);
                        next.push(nw);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Rewrite at a fixed position, then normalize.
    fn reduce_at(&self, w: &[u8], i: usize) -> HResult<Elem<Word>> {
        let mut acc = Elem::new();
        for (r, c) in &self.rules[&(w[i], w[i + 1])] {
            let mut nw = w[..i].to_vec();
            nw.extend_from_slice(r);
            nw.extend_from_slice(&w[i + 2..]);
            sparse_add_scaled(&mut acc, &self.normal(&nw)?, c);
        }
        Ok(acc)
    }

    fn word_coproduct(&self, w: &[u8]) -> HResult<Tensor<Word>> {
        let mut acc = Tensor::new();
        acc.insert((vec![], vec![]), Scalar::one());
        for &l in w {
            acc = hopf::tensor_mul(self, &acc, &self.delta[l as usize])?;
        }
        Ok(acc)
    }

    fn word_antipode(&self, w: &[u8]) -> HResult<Elem<Word>> {
        let mut acc = mon(vec![]);
        for &l in w {
            acc = hopf::mul(self, &self.antipode[l as usize], &acc)?;
        }
        Ok(acc)
    }

    fn word_counit(&self, w: &[u8]) -> Scalar {
        w.iter().fold(Scalar::one(), |a, &l| &a * &self.data.counit[l as usize])
    }

    fn rhs_elem(&self, r: &Elem<Word>) -> HResult<(Tensor<Word>, Scalar, Elem<Word>)> {
        let mut d = Tensor::new();
        let mut e = Scalar::zero();
        let mut sa = Elem::new();
        for (w, c) in r {
            sparse_add_scaled(&mut d, &self.word_coproduct(w)?, c);
            e = &e + &(c * &self.word_counit(w));
            sparse_add_scaled(&mut sa, &self.word_antipode(w)?, c);
        }
        Ok((d, e, sa))
    }

    /// Consistency of the presentation: overlap confluence, compatibility of
    /// `Δ`, `ε`, `S` with every rule, and the Hopf axioms on letters and
    /// on normal words up to length `depth`.
    pub fn validate(&self, depth: usize) -> Report {
        let mut rep = Report::default();
        let n = self.data.letters.len() as u8;
        let lab = |w: &[u8]| self.word_label(w);
        let record = |rep: &mut Report, r: HResult<bool>, axiom: &str, at: String| match r {
            Ok(ok) => rep.check(ok, axiom, || at),
            Err(e) => rep.fail(axiom, format!("{at}: {e}")),
        };
        for a in 0..n {
            for b in 0..n {
                if !self.rules.contains_key(&(a, b)) {
                    continue;
                }
                for c in 0..n {
                    if self.rules.contains_key(&(b, c)) {
                        let w = [a, b, c];
                        let r = self.reduce_at(&w, 0).and_then(|x| Ok(x == self.reduce_at(&w, 1)?));
                        record(&mut rep, r, "overlap confluence", lab(&w));
                    }
                }
                let rhs = &self.rules[&(a, b)];
                let at = lab(&[a, b]);
                let lhs_d = hopf::tensor_mul(self, &self.delta[a as usize], &self.delta[b as usize]);
                match (lhs_d, self.rhs_elem(rhs)) {
                    (Ok(ld), Ok((rd, re, rs))) => {
                        rep.check(ld == rd, "coproduct respects relation", || at.clone());
                        let le = &self.data.counit[a as usize] * &self.data.counit[b as usize];
                        rep.check(le == re, "counit respects relation", || at.clone());
                        let ls = hopf::mul(self, &self.antipode[b as usize], &self.antipode[a as usize]);
                        record(&mut rep, ls.map(|ls| ls == rs), "antipode respects relation", at.clone());
                    }
                    (Err(e), _) | (_, Err(e)) => rep.fail("coproduct respects relation", format!("{at}: {e}")),
                }
            }
        }
        let basis: Vec<Word> = self.normal_words(depth);
        let (r, _) = hopf::validate_ops(self, &basis);
        rep.merge(r);
        rep
    }

    /// Perturbed copies for negative controls.
    pub fn with_rule_term(&self, pair: (u8, u8), w: Word, c: Scalar) -> Result<PbwAlgebra, PresentationError> {
        let mut d = self.data.clone();
        d.rules.entry(pair).or_default().push((c, w));
        PbwAlgebra::new(d)
    }
    pub fn with_coproduct_term(&self, l: u8, a: Word, b: Word, c: Scalar) -> Result<PbwAlgebra, PresentationError> {
        let mut d = self.data.clone();
        d.coproduct[l as usize].push((c, a, b));
        PbwAlgebra::new(d)
    }
    pub fn with_antipode_term(&self, l: u8, w: Word, c: Scalar) -> Result<PbwAlgebra, PresentationError> {
        let mut d = self.data.clone();
        d.antipode[l as usize].push((c, w));
        PbwAlgebra::new(d)
    }
    pub fn with_counit_shift(&self, l: u8, c: Scalar) -> Result<PbwAlgebra, PresentationError> {
        let mut d = self.data.clone();
        d.counit[l as usize] = &d.counit[l as usize] + &c;
        PbwAlgebra::new(d)
    }

    /// Structure-constant table on normal words of length at most `n`, closed
    /// under coproduct legs and antipode terms. Products are recorded where
    /// the result stays inside the basis.
    pub fn to_table(&self, n: usize) -> Result<HopfAlgebra, PresentationError> {
        const CAP: usize = 3000;
        let mut basis: BTreeSet<Word> = self.normal_words(n).into_iter().collect();
        let mut frontier: Vec<Word> = basis.iter().cloned().collect();
        while let Some(w) = frontier.pop() {
            let mut add = Vec::new();
            for ((a, b), _) in self.coproduct_mon(&w)? {
                add.push(a);
                add.push(b);
            }
            add.extend(self.antipode_mon(&w)?.into_keys());
            for x in add {
                if basis.insert(x.clone()) {
                    frontier.push(x);
                }
            }
            if basis.len() > CAP {
                return Err(PresentationError::Invalid(format!("truncated basis exceeds {CAP} monomials")));
            }
        }
        let mut words: Vec<Word> = basis.into_iter().collect();
        words.sort_by_key(|w| (w.len(), w.clone()));
        let index: HashMap<Word, usize> = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let labels: Vec<String> = words.iter().map(|w| self.mon_label(w)).collect();
        let mut delta = Vec::new();
        let mut antipode = Vec::new();
        for w in &words {
            delta.push(self.coproduct_mon(w)?.into_iter().map(|((a, b), c)| (index[&a], index[&b], c)).collect());
            antipode.push(self.antipode_mon(w)?.into_iter().map(|(a, c)| (index[&a], c)).collect());
        }
        let eps = words.iter().map(|w| self.word_counit(w)).collect();
        let mut product = vec![vec![None; words.len()]; words.len()];
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                if a.len() + b.len() > n && !(a.is_empty() || b.is_empty()) {
                    continue;
                }
                let p = self.mul_mon(a, b)?;
                if p.keys().all(|k| index.contains_key(k)) {
                    product[i][j] = Some(p.into_iter().map(|(k, c)| (index[&k], c)).collect());
                }
            }
        }
        let c = Coalgebra::new(self.data.field.clone(), labels, delta, eps);
        let degree = words.iter().map(|w| self.degree(w)).collect();
        Ok(HopfAlgebra::new(c, product, 0, antipode).with_grading(degree, Some(n)))
    }
}

/// Greedy longest-match split of an identifier into known names.
pub fn split_names(ident: &str, names: &[String]) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = ident;
    while !rest.is_empty() {
        let (k, len) = names
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_empty() && rest.starts_with(n.as_str()))
            .map(|(k, n)| (k, n.len()))
            .max_by_key(|x| x.1)?;
        out.push(k);
        rest = &rest[len..];
    }
    Some(out)
}

impl HopfOps for PbwAlgebra {
    type Mon = Word;
    fn field(&self) -> &Field {
        &self.data.field
    }
    fn one(&self) -> Word {
        vec![]
    }
    fn mul_mon(&self, a: &Word, b: &Word) -> HResult<Elem<Word>> {
        let mut w = a.clone();
        w.extend_from_slice(b);
        self.normal(&w)
    }
    fn coproduct_mon(&self, a: &Word) -> HResult<Tensor<Word>> {
        if let Some(t) = self.delta_cache.borrow().get(a) {
            return Ok(t.clone());
        }
        let t = match a.len() {
            0 => {
                let mut t = Tensor::new();
                t.insert((vec![], vec![]), Scalar::one());
                t
            }
            1 => self.delta[a[0] as usize].clone(),
            k => {
                let head = self.coproduct_mon(&a[..k - 1].to_vec())?;
                hopf::tensor_mul(self, &head, &self.delta[a[k - 1] as usize])?
            }
        };
        self.delta_cache.borrow_mut().insert(a.clone(), t.clone());
        Ok(t)
    }
    fn counit_mon(&self, a: &Word) -> Scalar {
        self.word_counit(a)
    }
    fn antipode_mon(&self, a: &Word) -> HResult<Elem<Word>> {
        if let Some(t) = self.antipode_cache.borrow().get(a) {
            return Ok(t.clone());
        }
        let t = match a.len() {
            0 => mon(vec![]),
            1 => self.antipode[a[0] as usize].clone(),
            k => {
                let head = self.antipode_mon(&a[..k - 1].to_vec())?;
                hopf::mul(self, &self.antipode[a[k - 1] as usize], &head)?
            }
        };
        self.antipode_cache.borrow_mut().insert(a.clone(), t.clone());
        Ok(t)
    }
    fn degree(&self, a: &Word) -> usize {
        a.iter().map(|&l| self.data.letters[l as usize].weight).sum()
    }
    fn generators(&self) -> Vec<Elem<Word>> {
        (0..self.data.letters.len() as u8).map(|l| mon(vec![l])).collect()
    }
    fn mon_label(&self, a: &Word) -> String {
        if a.is_empty() {
            return "1".into();
        }
        let mut runs: Vec<(u8, i64)> = Vec::new();
        for &l in a {
            let letter = &self.data.letters[l as usize];
            let (base, e) = match letter.inverse {
                Some(j) if j < l => (j, -1),
                _ => (l, 1),
            };
            match runs.last_mut() {
                Some((b, n)) if *b == base => *n += e,
                _ => runs.push((base, e)),
            }
        }
        let mut out = String::new();
        let mut prev_plain = false;
        for (b, e) in runs {
            let name = &self.data.letters[b as usize].name;
            if e == 1 {
                if prev_plain && needs_separator(&out, name) {
                    out.push('·');
                }
                out.push_str(name);
                prev_plain = true;
            } else {
                if prev_plain {
                    out.push('·');
                }
                out.push_str(&format!("{name}^{e}"));
                prev_plain = false;
            }
        }
        out
    }
    fn resolve_atom(&self, name: &str) -> Option<Elem<Word>> {
        let mut names = self.letter_names();
        let base = names.len();
        let mut scalars = vec!["i".to_string()];
        if let Some(p) = self.data.field.param() {
            scalars.push(p.to_string());
        }
        names.extend(scalars.iter().cloned());
        let parts = split_names(name, &names)?;
        let mut acc = mon(vec![]);
        for k in parts {
            let f = if k < base {
                mon(vec![k as u8])
            } else {
                let sc = crate::scalar::scalar_atom(&self.data.field, &names[k])?;
                hopf::scale(&mon(vec![]), &sc)
            };
            acc = hopf::mul(self, &acc, &f).ok()?;
        }
        Some(acc)
    }
    fn truncation(&self) -> Option<usize> {
        Some(self.data.truncation)
    }
}

/// A plain letter run can be glued to the previous one unless the
/// concatenation would read as a different split.
fn needs_separator(prev: &str, name: &str) -> bool {
    prev.ends_with(|c: char| c.is_ascii_digit()) && name.starts_with(|c: char| c.is_ascii_digit())
}

fn letter(name: &str, rank: u8, weight: usize) -> Letter {
    Letter { name: name.into(), rank, inverse: None, weight }
}

fn group_pair(name: &str, idx: u8, rank: u8, weight: usize) -> [Letter; 2] {
    [
        Letter { name: name.into(), rank, inverse: Some(idx + 1), weight },
        Letter { name: format!("{name}⁻¹"), rank, inverse: Some(idx), weight },
    ]
}

/// Universal enveloping algebra of a Lie algebra with `[x_i, x_j] = Σ c_k x_k`, primitive generators.
pub fn enveloping(
    name: &str,
    labels: &[&str],
    brackets: &[(usize, usize, Vec<(usize, Scalar)>)],
    truncation: usize,
) -> Result<PbwAlgebra, PresentationError> {
    let n = labels.len();
    let letters: Vec<Letter> = labels.iter().enumerate().map(|(i, l)| letter(l, i as u8, 1)).collect();
    let mut br: BTreeMap<(usize, usize), Vec<(usize, Scalar)>> = BTreeMap::new();
    for (i, j, c) in brackets {
        if i == j {
            return Err(PresentationError::Invalid("bracket of a generator with itself".into()));
        }
        br.insert((*i, *j), c.clone());
        br.insert((*j, *i), c.iter().map(|(k, x)| (*k, -x)).collect());
    }
    let mut rules = BTreeMap::new();
    for i in 0..n {
        for j in 0..i {
            // x_i x_j = x_j x_i + [x_i, x_j]
            let mut r = vec![(Scalar::one(), vec![j as u8, i as u8])];
            for (k, c) in br.get(&(i, j)).cloned().unwrap_or_default() {
                r.push((c, vec![k as u8]));
            }
            rules.insert((i as u8, j as u8), r);
        }
    }
    let data = PbwData {
        name: name.into(),
        field: Field::Rational,
        letters,
        rules,
        coproduct: (0..n).map(|i| vec![(Scalar::one(), vec![i as u8], vec![]), (Scalar::one(), vec![], vec![i as u8])]).collect(),
        counit: vec![Scalar::zero(); n],
        antipode: (0..n).map(|i| vec![(s(-1), vec![i as u8])]).collect(),
        truncation,
    };
    PbwAlgebra::new(data)
}

/// `U(𝔟₊)` with `[H, E] = E`.
pub fn u_b_plus(truncation: usize) -> PbwAlgebra {
    enveloping("ub-plus", &["H", "E"], &[(0, 1, vec![(1, Scalar::one())])], truncation).expect("U(b+)")
}

fn q() -> Scalar {
    Scalar::var()
}

fn qp(n: i64) -> Scalar {
    Scalar::var_pow(n)
}

/// `U_Q(𝔟₊)`: `Xg = QgX`, `ΔX = X⊗1 + g⊗X`, `S(X) = −g⁻¹X`. The parameter is written `q`.
/// Degree counts `X` only.
pub fn uq_b_plus(truncation: usize) -> PbwAlgebra {
    let mut letters = vec![letter("X", 0, 1)];
    letters.extend(group_pair("g", 1, 1, 0));
    let mut d = PbwData {
        name: "uqb-plus".into(),
        field: Field::function("q"),
        letters,
        rules: BTreeMap::new(),
        coproduct: vec![],
        counit: vec![Scalar::zero(), Scalar::one(), Scalar::one()],
        antipode: vec![],
        truncation,
    };
    let (x, g, gi) = (0u8, 1u8, 2u8);
    d.rules.insert((g, x), vec![(qp(-1), vec![x, g])]);
    d.rules.insert((gi, x), vec![(q(), vec![x, gi])]);
    d.coproduct = vec![
        vec![(s(1), vec![x], vec![]), (s(1), vec![g], vec![x])],
        vec![(s(1), vec![g], vec![g])],
        vec![(s(1), vec![gi], vec![gi])],
    ];
    d.antipode = vec![vec![(s(-1), vec![gi, x])], vec![(s(1), vec![gi])], vec![(s(1), vec![g])]];
    PbwAlgebra::new(d).expect("U_Q(b+)")
}

/// `U_q(sl₂)`: `KE = q²EK`, `KF = q⁻²FK`, `[E,F] = (K−K⁻¹)/(q−q⁻¹)`,
/// `ΔE = E⊗K + 1⊗E`, `ΔF = F⊗1 + K⁻¹⊗F`.
pub fn uq_sl2(truncation: usize) -> PbwAlgebra {
    let mut letters = vec![letter("E", 0, 1), letter("F", 1, 1)];
    letters.extend(group_pair("K", 2, 2, 1));
    let (e, f, k, ki) = (0u8, 1u8, 2u8, 3u8);
    let inv_diff = (&q() - &qp(-1)).inv().expect("q - 1/q");
    let mut rules = BTreeMap::new();
    rules.insert((f, e), vec![(s(1), vec![e, f]), (-&inv_diff, vec![k]), (inv_diff.clone(), vec![ki])]);
    rules.insert((k, e), vec![(qp(2), vec![e, k])]);
    rules.insert((ki, e), vec![(qp(-2), vec![e, ki])]);
    rules.insert((k, f), vec![(qp(-2), vec![f, k])]);
    rules.insert((ki, f), vec![(qp(2), vec![f, ki])]);
    let d = PbwData {
        name: "uqsl2".into(),
        field: Field::function("q"),
        letters,
        rules,
        coproduct: vec![
            vec![(s(1), vec![e], vec![k]), (s(1), vec![], vec![e])],
            vec![(s(1), vec![f], vec![]), (s(1), vec![ki], vec![f])],
            vec![(s(1), vec![k], vec![k])],
            vec![(s(1), vec![ki], vec![ki])],
        ],
        counit: vec![Scalar::zero(), Scalar::zero(), Scalar::one(), Scalar::one()],
        antipode: vec![vec![(s(-1), vec![e, ki])], vec![(s(-1), vec![k, f])], vec![(s(1), vec![ki])], vec![(s(1), vec![k])]],
        truncation,
    };
    PbwAlgebra::new(d).expect("U_q(sl2)")
}

/// `SL_q(2)` on `x, u, v, y` with `ux = qxu`, `vx = qxv`, `uy = q⁻¹yu`, `vy = q⁻¹yv`,
/// `uv = vu`, `xy = 1 + q⁻¹uv`, `yx = 1 + quv`. Normal words are `u^b v^c x^a` and `u^b v^c y^d`.
pub fn slq2(truncation: usize) -> PbwAlgebra {
    let letters = vec![letter("x", 2, 1), letter("u", 0, 1), letter("v", 1, 1), letter("y", 3, 1)];
    let (x, u, v, y) = (0u8, 1u8, 2u8, 3u8);
    let mut rules = BTreeMap::new();
    rules.insert((x, u), vec![(qp(-1), vec![u, x])]);
    rules.insert((x, v), vec![(qp(-1), vec![v, x])]);
    rules.insert((y, u), vec![(q(), vec![u, y])]);
    rules.insert((y, v), vec![(q(), vec![v, y])]);
    rules.insert((v, u), vec![(s(1), vec![u, v])]);
    rules.insert((y, x), vec![(s(1), vec![]), (q(), vec![u, v])]);
    rules.insert((x, y), vec![(s(1), vec![]), (qp(-1), vec![u, v])]);
    let d = PbwData {
        name: "slq2".into(),
        field: Field::function("q"),
        letters,
        rules,
        coproduct: vec![
            vec![(s(1), vec![x], vec![x]), (s(1), vec![u], vec![v])],
            vec![(s(1), vec![x], vec![u]), (s(1), vec![u], vec![y])],
            vec![(s(1), vec![y], vec![v]), (s(1), vec![v], vec![x])],
            vec![(s(1), vec![y], vec![y]), (s(1), vec![v], vec![u])],
        ],
        counit: vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::one()],
        antipode: vec![vec![(s(1), vec![y])], vec![(-q(), vec![u])], vec![(-qp(-1), vec![v])], vec![(s(1), vec![x])]],
        truncation,
    };
    PbwAlgebra::new(d).expect("SL_q(2)")
}

fn levi(j: usize, k: usize, l: usize) -> i64 {
    match (j, k, l) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// Sign convention for `[N_j, M_k] = ±iε_{jkl}N_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoostRotationSign {
    /// `+iε_{jkl}N_l`, the sign forced by the Jacobi identity with `[N_j, N_k] = −iε_{jkl}M_l`.
    Consistent,
    /// `−iε_{jkl}N_l` as printed.
    Printed,
}

/// κ-Poincaré in the classical basis over `ℚ(i)(κ)`.
pub fn kappa_poincare(truncation: usize) -> PbwAlgebra {
    kappa_poincare_with(truncation, BoostRotationSign::Consistent).expect("kappa-Poincare")
}

pub fn kappa_poincare_with(truncation: usize, sign: BoostRotationSign) -> Result<PbwAlgebra, PresentationError> {
    let mut letters = Vec::new();
    for j in 1..=3 {
        letters.push(letter(&format!("N{j}"), 0, 1));
    }
    for j in 1..=3 {
        letters.push(letter(&format!("M{j}"), 1, 1));
    }
    for j in 1..=3 {
        letters.push(letter(&format!("P{j}"), 2, 1));
    }
    letters.extend(group_pair("Pi0", 9, 3, 1));
    // N and M blocks order internally by index
    for (i, l) in letters.iter_mut().enumerate().take(9) {
        l.rank = i as u8;
    }
    letters[9].rank = 9;
    letters[10].rank = 9;
    let nn = |j: usize| j as u8;
    let mm = |j: usize| 3 + j as u8;
    let pp = |j: usize| 6 + j as u8;
    let (pi, pinv) = (9u8, 10u8);
    let field = Field::gaussian_function("kappa");
    let kap = Scalar::var();
    let kinv = kap.inv().expect("kappa");
    let i = Scalar::i();
    let bsign = match sign {
        BoostRotationSign::Consistent => s(1),
        BoostRotationSign::Printed => s(-1),
    };
    let mut rules: BTreeMap<(u8, u8), Rhs> = BTreeMap::new();
    // G_κ = κ(Π₀ − Π₀⁻¹) + κ⁻¹ Σ P_m P_m Π₀⁻¹
    let g_kappa = |coef: &Scalar| -> Rhs {
        let mut r = vec![(coef * &kap, vec![pi]), (-(coef * &kap), vec![pinv])];
        for m in 0..3 {
            r.push((coef * &kinv, vec![pp(m), pp(m), pinv]));
        }
        r
    };
    for j in 0..3 {
        for k in 0..j {
            // N_j N_k = N_k N_j − iε_{jkl}M_l
            let mut r = vec![(s(1), vec![nn(k), nn(j)])];
            for l in 0..3 {
                let e = levi(j, k, l);
                if e != 0 {
                    r.push((&i * &s(-e), vec![mm(l)]));
                }
            }
            rules.insert((nn(j), nn(k)), r);
            // M_j M_k = M_k M_j + iε_{jkl}M_l
            let mut r = vec![(s(1), vec![mm(k), mm(j)])];
            for l in 0..3 {
                let e = levi(j, k, l);
                if e != 0 {
                    r.push((&i * &s(e), vec![mm(l)]));
                }
            }
            rules.insert((mm(j), mm(k)), r);
            rules.insert((pp(j), pp(k)), vec![(s(1), vec![pp(k), pp(j)])]);
        }
    }
    for j in 0..3 {
        for k in 0..3 {
            // M_k N_j = N_j M_k − [N_j, M_k]
            let mut r = vec![(s(1), vec![nn(j), mm(k)])];
            for l in 0..3 {
                let e = levi(j, k, l);
                if e != 0 {
                    r.push((-(&(&bsign * &i) * &s(e)), vec![nn(l)]));
                }
            }
            rules.insert((mm(k), nn(j)), r);
            // P_k N_j = N_j P_k + (i/2)δ_jk G_κ
            let mut r = vec![(s(1), vec![nn(j), pp(k)])];
            if j == k {
                r.extend(g_kappa(&(&i * &Scalar::ratio(1, 2))));
            }
            rules.insert((pp(k), nn(j)), r);
            // P_k M_j = M_j P_k − iε_{jkl}P_l
            let mut r = vec![(s(1), vec![mm(j), pp(k)])];
            for l in 0..3 {
                let e = levi(j, k, l);
                if e != 0 {
                    r.push((&i * &s(-e), vec![pp(l)]));
                }
            }
            rules.insert((pp(k), mm(j)), r);
        }
        // Π₀N_j = N_jΠ₀ + (i/κ)P_j,  Π₀⁻¹N_j = N_jΠ₀⁻¹ − (i/κ)P_jΠ₀⁻²
        rules.insert((pi, nn(j)), vec![(s(1), vec![nn(j), pi]), (&i * &kinv, vec![pp(j)])]);
        rules.insert((pinv, nn(j)), vec![(s(1), vec![nn(j), pinv]), (-(&i * &kinv), vec![pp(j), pinv, pinv])]);
        for g in [pi, pinv] {
            rules.insert((g, mm(j)), vec![(s(1), vec![mm(j), g])]);
            rules.insert((g, pp(j)), vec![(s(1), vec![pp(j), g])]);
        }
    }
    let mut coproduct = Vec::new();
    let mut antipode = Vec::new();
    for j in 0..3 {
        // ΔN_j = N_j⊗1 + Π₀⁻¹⊗N_j − κ⁻¹ε_{jkl}P_kΠ₀⁻¹⊗M_l
        let mut t = vec![(s(1), vec![nn(j)], vec![]), (s(1), vec![pinv], vec![nn(j)])];
        let mut sa = vec![(s(-1), vec![pi, nn(j)])];
        for k in 0..3 {
            for l in 0..3 {
                let e = levi(j, k, l);
                if e != 0 {
                    t.push((-(&kinv * &s(e)), vec![pp(k), pinv], vec![mm(l)]));
                    sa.push((-(&kinv * &s(e)), vec![pp(k), mm(l)]));
                }
            }
        }
        coproduct.push(t);
        antipode.push(sa);
    }
    for j in 0..3 {
        coproduct.push(vec![(s(1), vec![mm(j)], vec![]), (s(1), vec![], vec![mm(j)])]);
        antipode.push(vec![(s(-1), vec![mm(j)])]);
    }
    for j in 0..3 {
        coproduct.push(vec![(s(1), vec![pp(j)], vec![pi]), (s(1), vec![], vec![pp(j)])]);
        antipode.push(vec![(s(-1), vec![pp(j), pinv])]);
    }
    coproduct.push(vec![(s(1), vec![pi], vec![pi])]);
    coproduct.push(vec![(s(1), vec![pinv], vec![pinv])]);
    antipode.push(vec![(s(1), vec![pinv])]);
    antipode.push(vec![(s(1), vec![pi])]);
    let mut counit = vec![Scalar::zero(); 9];
    counit.extend([Scalar::one(), Scalar::one()]);
    PbwAlgebra::new(PbwData { name: "kappa-poincare".into(), field, letters, rules, coproduct, counit, antipode, truncation })
}

impl PbwAlgebra {
    /// Word from letter names, for building elements in code.
    pub fn word(&self, names: &[&str]) -> Word {
        self.data.w(names)
    }
}

// ---------------------------------------------------------------------------
// Presentations and the built-in registry.

#[derive(Clone, Debug, PartialEq)]
pub enum Presentation {
    MatrixCoalgebra(usize),
    Sweedler,
    VectorSpaceCoalgebra(usize),
    DividedPower(usize),
    SetCoalgebra(usize),
    GroupAlgebra { labels: Vec<String>, table: Vec<Vec<usize>> },
    EnvelopingTrunc { labels: Vec<String>, brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)>, truncation: usize },
    UqBPlusTrunc(usize),
    UqSl2Trunc(usize),
    SLq2Trunc(usize),
    KappaPoincareTrunc(usize),
}

pub enum Built {
    Coalgebra(Coalgebra),
    Hopf(HopfAlgebra),
    Filtered(PbwAlgebra),
}

impl Built {
    pub fn coalgebra(&self) -> Option<&Coalgebra> {
        match self {
            Built::Coalgebra(c) => Some(c),
            Built::Hopf(h) => Some(h.coalgebra()),
            Built::Filtered(_) => None,
        }
    }
}

pub const DEFAULT_TRUNC_SL2: usize = 6;
pub const DEFAULT_TRUNC_BPLUS: usize = 6;
pub const DEFAULT_TRUNC_KAPPA: usize = 4;
pub const DEFAULT_TRUNC_SLQ2: usize = 4;

pub fn build(p: &Presentation) -> Result<Built, PresentationError> {
    let nonzero = |n: usize| if n == 0 { Err(PresentationError::Invalid("truncation must be at least 1".into())) } else { Ok(n) };
    Ok(match p {
        Presentation::MatrixCoalgebra(n) => Built::Coalgebra(coalgebras::matrix_coalgebra(nonzero(*n)?, None)),
        Presentation::Sweedler => Built::Hopf(finite::sweedler()),
        Presentation::VectorSpaceCoalgebra(d) => Built::Coalgebra(coalgebras::cv(*d)),
        Presentation::DividedPower(n) => Built::Coalgebra(coalgebras::divided_power(nonzero(*n)?)),
        Presentation::SetCoalgebra(n) => Built::Coalgebra(coalgebras::set_coalgebra(nonzero(*n)?)),
        Presentation::GroupAlgebra { labels, table } => Built::Hopf(finite::group_algebra(labels.clone(), table.clone())?),
        Presentation::EnvelopingTrunc { labels, brackets, truncation } => {
            let l: Vec<&str> = labels.iter().map(String::as_str).collect();
            Built::Filtered(enveloping("enveloping", &l, brackets, nonzero(*truncation)?)?)
        }
        Presentation::UqBPlusTrunc(n) => Built::Filtered(uq_b_plus(nonzero(*n)?)),
        Presentation::UqSl2Trunc(n) => Built::Filtered(uq_sl2(nonzero(*n)?)),
        Presentation::SLq2Trunc(n) => Built::Filtered(slq2(nonzero(*n)?)),
        Presentation::KappaPoincareTrunc(n) => Built::Filtered(kappa_poincare(nonzero(*n)?)),
    })
}

/// Names accepted by `--builtin`.
pub const BUILTIN_NAMES: &[&str] = &[
    "point",
    "m2x2",
    "sweedler-coalgebra",
    "cv:<dim>",
    "divided-power:<N>",
    "set:<points>",
    "sweedler",
    "z2",
    "z4",
    "s3",
    "ub-plus",
    "uqb-plus",
    "uqsl2",
    "slq2",
    "kappa-poincare",
];

pub fn builtin(name: &str, truncation: Option<usize>) -> Result<Built, PresentationError> {
    let arg = |prefix: &str| -> Option<Result<usize, PresentationError>> {
        name.strip_prefix(prefix).map(|r| r.parse::<usize>().map_err(|_| PresentationError::UnknownBuiltin(name.into())))
    };
    if let Some(n) = arg("cv:") {
        return build(&Presentation::VectorSpaceCoalgebra(n?));
    }
    if let Some(n) = arg("divided-power:") {
        return build(&Presentation::DividedPower(n?));
    }
    if let Some(n) = arg("set:") {
        return build(&Presentation::SetCoalgebra(n?));
    }
    Ok(match name {
        "point" => Built::Coalgebra(coalgebras::point()),
        "m2x2" => Built::Coalgebra(coalgebras::m2x2()),
        "sweedler-coalgebra" => Built::Coalgebra(coalgebras::sweedler_coalgebra()),
        "sweedler" => Built::Hopf(finite::sweedler()),
        "z2" => Built::Hopf(finite::group_algebra_z2()),
        "z4" => Built::Hopf(finite::group_algebra_z4()),
        "s3" => Built::Hopf(finite::group_algebra_s3()),
        "ub-plus" => Built::Filtered(u_b_plus(truncation.unwrap_or(DEFAULT_TRUNC_BPLUS))),
        "uqb-plus" => build(&Presentation::UqBPlusTrunc(truncation.unwrap_or(DEFAULT_TRUNC_BPLUS)))?,
        "uqsl2" => build(&Presentation::UqSl2Trunc(truncation.unwrap_or(DEFAULT_TRUNC_SL2)))?,
        "slq2" => build(&Presentation::SLq2Trunc(truncation.unwrap_or(DEFAULT_TRUNC_SLQ2)))?,
        "kappa-poincare" => build(&Presentation::KappaPoincareTrunc(truncation.unwrap_or(DEFAULT_TRUNC_KAPPA)))?,
        _ => return Err(PresentationError::UnknownBuiltin(name.into())),
    })
}
