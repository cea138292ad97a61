//! The truncated SL(m)-representation algebra of F_n in normal form.
//!
//! The variable s_mm(x_l) is eliminated at construction: the generator matrix
//! carries 1 + σ_mm,l in the (m,m) slot, where σ_mm,l is the unique series in
//! the remaining variables of generator l making the determinant exactly 1 in
//! the truncated ring. Every algebra-namespace polynomial therefore lives in
//! the free commutative ring on (m²−1)n variables, truncated at the cap.

use std::collections::HashMap;

use num::Zero;

use crate::qlinalg::{QMatrix, Rat};
use crate::trunc_poly::{Monomial, Namespace, TruncPoly, VarId};
use crate::words::Word;

/// Square matrix over the truncated polynomial ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    m: usize,
    entries: Vec<TruncPoly>,
}

impl PolyMatrix {
    pub fn identity(m: usize, cap: u32) -> Self {
        let mut entries = vec![TruncPoly::zero(cap); m * m];
        for i in 0..m {
            entries[i * m + i] = TruncPoly::one(cap);
        }
        PolyMatrix { m, entries }
    }

    pub fn from_entries(m: usize, entries: Vec<TruncPoly>) -> Self {
        assert_eq!(entries.len(), m * m);
        PolyMatrix { m, entries }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    /// Entry at 1-based (i, j).
    pub fn at(&self, i: usize, j: usize) -> &TruncPoly {
        &self.entries[(i - 1) * self.m + (j - 1)]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.m, other.m);
        let m = self.m;
        let cap = self.entries[0].cap();
        let mut entries = Vec::with_capacity(m * m);
        for i in 1..=m {
            for j in 1..=m {
                let mut e = TruncPoly::zero(cap);
                for k in 1..=m {
                    e = e.add(&self.at(i, k).mul(other.at(k, j)));
                }
                entries.push(e);
            }
        }
        PolyMatrix { m, entries }
    }

    /// Submatrix with 1-based row `ri` and column `cj` removed.
    fn minor_matrix(&self, ri: usize, cj: usize) -> PolyMatrix {
        let m = self.m;
        let mut entries = Vec::with_capacity((m - 1) * (m - 1));
        for i in 1..=m {
            if i == ri {
                continue;
            }
            for j in 1..=m {
                if j == cj {
                    continue;
                }
                entries.push(self.at(i, j).clone());
            }
        }
        PolyMatrix {
            m: m - 1,
            entries,
        }
    }

    pub fn det(&self) -> TruncPoly {
        let m = self.m;
        let cap = self.entries[0].cap();
        match m {
            0 => TruncPoly::one(cap),
            1 => self.at(1, 1).clone(),
            2 => self
                .at(1, 1)
                .mul(self.at(2, 2))
                .sub(&self.at(1, 2).mul(self.at(2, 1))),
            _ => {
                let mut d = TruncPoly::zero(cap);
                for j in 1..=m {
                    if self.at(1, j).is_zero() {
                        continue;
                    }
                    let term = self.at(1, j).mul(&self.minor_matrix(1, j).det());
                    d = if j % 2 == 1 { d.add(&term) } else { d.sub(&term) };
                }
                d
            }
        }
    }

    /// Classical adjugate: M · adj(M) = det(M) · I exactly.
    pub fn adjugate(&self) -> PolyMatrix {
        let m = self.m;
        let cap = self.entries[0].cap();
        if m == 1 {
            return PolyMatrix {
                m,
                entries: vec![TruncPoly::one(cap)],
            };
        }
        let mut entries = Vec::with_capacity(m * m);
        for i in 1..=m {
            for j in 1..=m {
                // adj(M)_{ij} = (−1)^{i+j} det(minor with row j, col i removed)
                let c = self.minor_matrix(j, i).det();
                entries.push(if (i + j) % 2 == 0 { c } else { c.neg() });
            }
        }
        PolyMatrix { m, entries }
    }

    pub fn truncated(&self, cap: u32) -> PolyMatrix {
        PolyMatrix {
            m: self.m,
            entries: self.entries.iter().map(|e| e.truncated(cap)).collect(),
        }
    }
}

/// Homogeneous degree-k coordinate vector in the T_k basis of an
/// `AlgebraContext`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedVec {
    pub k: u32,
    pub coords: Vec<Rat>,
}

/// Shared immutable context: parameters, eliminated s_mm series, generator
/// matrices and their adjugates, graded bases.
pub struct AlgebraContext {
    m: u8,
    n: u16,
    cap: u32,
    smm: Vec<TruncPoly>,
    gen_mats: Vec<PolyMatrix>,
    gen_adjs: Vec<PolyMatrix>,
    bases: Vec<Vec<Monomial>>,
    basis_index: Vec<HashMap<Monomial, usize>>,
}

impl AlgebraContext {
    pub fn new(m: u8, n: u16, cap: u32) -> Self {
        assert!(m >= 2 && n >= 1 && cap >= 1);
        let smm: Vec<TruncPoly> = (1..=n).map(|l| smm_closed_form(m, l, cap)).collect();
        let mut gen_mats = Vec::with_capacity(n as usize);
        let mut gen_adjs = Vec::with_capacity(n as usize);
        for l in 1..=n {
            let g = generator_matrix_raw(m, l, cap, &smm[(l - 1) as usize]);
            gen_adjs.push(g.adjugate());
            gen_mats.push(g);
        }
        let mut bases = Vec::with_capacity(cap as usize + 1);
        let mut basis_index = Vec::with_capacity(cap as usize + 1);
        for k in 0..=cap {
            let b = enumerate_monomials(&algebra_vars(m, n), k);
            let idx = b
                .iter()
                .enumerate()
                .map(|(pos, mono)| (mono.clone(), pos))
                .collect();
            bases.push(b);
            basis_index.push(idx);
        }
        AlgebraContext {
            m,
            n,
            cap,
            smm,
            gen_mats,
            gen_adjs,
            bases,
            basis_index,
        }
    }

    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// The free variables of the normal form, in canonical order.
    pub fn variables(&self) -> Vec<VarId> {
        algebra_vars(self.m, self.n)
    }

    /// σ_mm,l: the eliminated (m,m) entry for generator l.
    pub fn smm_polynomial(&self, l: u16) -> &TruncPoly {
        &self.smm[(l - 1) as usize]
    }

    pub fn generator_matrix(&self, l: u16) -> &PolyMatrix {
        &self.gen_mats[(l - 1) as usize]
    }

    pub fn generator_adjugate(&self, l: u16) -> &PolyMatrix {
        &self.gen_adjs[(l - 1) as usize]
    }

    /// Matrix of a(w) = ∏ a(letters), inverse letters contributing adjugates.
    pub fn word_matrix(&self, w: &Word) -> PolyMatrix {
        self.word_matrix_capped(w, self.cap)
    }

    /// Same, truncated at a lower working cap for cheaper products.
    pub fn word_matrix_capped(&self, w: &Word, cap: u32) -> PolyMatrix {
        assert!(cap <= self.cap);
        let mut out = PolyMatrix::identity(self.m as usize, cap);
        for &(l, s) in w.letters() {
            assert!(l <= self.n, "generator x{l} outside context rank {}", self.n);
            let g = if s == 1 {
                &self.gen_mats[(l - 1) as usize]
            } else {
                &self.gen_adjs[(l - 1) as usize]
            };
            out = out.mul(&g.truncated(cap));
        }
        out
    }

    /// s_ij(w) = a_ij(w) − δ_ij.
    pub fn s_entry(&self, w: &Word, i: u8, j: u8) -> TruncPoly {
        self.s_entry_capped(w, i, j, self.cap)
    }

    pub fn s_entry_capped(&self, w: &Word, i: u8, j: u8, cap: u32) -> TruncPoly {
        let a = self.word_matrix_capped(w, cap);
        let e = a.at(i as usize, j as usize).clone();
        if i == j {
            e.sub(&TruncPoly::one(cap))
        } else {
            e
        }
    }

    /// Degree-k monomial basis T_k of gr^k (variables with (i,j) ≠ (m,m)).
    pub fn basis_tk(&self, k: u32) -> &[Monomial] {
        assert!(k <= self.cap, "k exceeds cap");
        &self.bases[k as usize]
    }

    pub fn dim_tk(&self, k: u32) -> usize {
        self.basis_tk(k).len()
    }

    /// Closed-form dimension: C((m²−1)n + k − 1, k).
    pub fn dim_formula(m: u8, n: u16, k: u32) -> u128 {
        let v = (m as u128 * m as u128 - 1) * n as u128;
        binom(v + k as u128 - 1, k as u128)
    }

    /// Dimension as the direct sum of products of symmetric powers: the sum
    /// over tuples (e_ij), Σ e_ij = k, of ∏ dim S^{e_ij}(ℚⁿ).
    pub fn dim_symmetric_sum(m: u8, n: u16, k: u32) -> u128 {
        let slots = m as u32 * m as u32 - 1;
        fn go(slots_left: u32, k_left: u32, n: u128) -> u128 {
            if slots_left == 0 {
                return if k_left == 0 { 1 } else { 0 };
            }
            let mut total = 0u128;
            for e in 0..=k_left {
                let dim_sym = binom(n + e as u128 - 1, e as u128);
                total += dim_sym * go(slots_left - 1, k_left - e, n);
            }
            total
        }
        go(slots, k, n as u128)
    }

    /// Alternate basis T_k′: degree-k monomials in the variables with
    /// (i,j) ≠ (1,1), including the formal s_mm(x_l). The returned monomials
    /// are enumeration tokens; expand them with `expand_tk_prime`.
    pub fn basis_tk_prime(&self, k: u32) -> Vec<Monomial> {
        assert!(k <= self.cap, "k exceeds cap");
        let mut vars = Vec::new();
        for l in 1..=self.n {
            for i in 1..=self.m {
                for j in 1..=self.m {
                    if (i, j) != (1, 1) {
                        vars.push(VarId::algebra(i, j, l));
                    }
                }
            }
        }
        enumerate_monomials(&vars, k)
    }

    /// Expand a T_k′ token into the normal form by substituting the
    /// eliminated series for each s_mm(x_l) factor.
    pub fn expand_tk_prime(&self, mono: &Monomial) -> TruncPoly {
        let mut out = TruncPoly::one(self.cap);
        for &(v, e) in mono.powers() {
            debug_assert_eq!(v.ns, Namespace::Algebra);
            let factor = if (v.i, v.j) == (self.m, self.m) {
                self.smm[(v.l - 1) as usize].clone()
            } else {
                TruncPoly::variable(self.cap, v)
            };
            for _ in 0..e {
                out = out.mul(&factor);
            }
        }
        out
    }

    /// Change-of-basis matrix from T_k′ to T_k coordinates (columns are the
    /// degree-k parts of expanded T_k′ tokens).
    pub fn tk_prime_change_of_basis(&self, k: u32) -> QMatrix {
        let prime = self.basis_tk_prime(k);
        let cols: Vec<Vec<Rat>> = prime
            .iter()
            .map(|mono| self.coords(&self.expand_tk_prime(mono).graded_part(k), k).coords)
            .collect();
        QMatrix::from_cols(cols)
    }

    /// Coordinates of the degree-k part in the T_k basis. Requires f ∈ 𝔍^k.
    pub fn coords(&self, f: &TruncPoly, k: u32) -> GradedVec {
        assert!(
            self.in_jk(f, k),
            "coords: polynomial has a term of degree below {k}"
        );
        let idx = &self.basis_index[k as usize];
        let mut coords = vec![Rat::zero(); self.bases[k as usize].len()];
        for (mono, c) in f.terms() {
            if mono.degree() == k {
                let pos = *idx
                    .get(mono)
                    .unwrap_or_else(|| panic!("monomial {mono} outside normal form"));
                coords[pos] = c.clone();
            }
        }
        GradedVec { k, coords }
    }

    /// Membership in 𝔍^k: all terms have degree ≥ k.
    pub fn in_jk(&self, f: &TruncPoly, k: u32) -> bool {
        f.min_degree().map_or(true, |d| d >= k)
    }

    /// Position of a variable in the canonical variable order (T_1 basis).
    pub fn var_position(&self, v: VarId) -> usize {
        *self.basis_index[1]
            .get(&Monomial::var(v))
            .expect("variable outside normal form")
    }
}

fn algebra_vars(m: u8, n: u16) -> Vec<VarId> {
    let mut vars = Vec::new();
    for l in 1..=n {
        for i in 1..=m {
            for j in 1..=m {
                if (i, j) != (m, m) {
                    vars.push(VarId::algebra(i, j, l));
                }
            }
        }
    }
    vars
}

/// All degree-k monomials in `vars`, sorted in the canonical monomial order.
fn enumerate_monomials(vars: &[VarId], k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut stack: Vec<(VarId, u32)> = Vec::new();
    fn go(
        vars: &[VarId],
        from: usize,
        k_left: u32,
        stack: &mut Vec<(VarId, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if k_left == 0 {
            out.push(Monomial::from_powers(stack));
            return;
        }
        for (pos, &v) in vars.iter().enumerate().skip(from) {
            for e in 1..=k_left {
                stack.push((v, e));
                go(vars, pos + 1, k_left - e, stack, out);
                stack.pop();
            }
        }
    }
    go(vars, 0, k, &mut stack, &mut out);
    out.sort();
    out
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut r = 1u128;
    for t in 0..k {
        r = r * (n - t) / (t + 1);
    }
    r
}

/// Closed-form elimination of s_mm(x_l): writing det = (1+s_mm)·C + D with C
/// the (m,m)-cofactor and D the determinant with the (m,m) entry zeroed,
/// σ_mm,l = (1 − D)·C⁻¹ − 1.
fn smm_closed_form(m: u8, l: u16, cap: u32) -> TruncPoly {
    let msz = m as usize;
    let entry = |i: u8, j: u8, diag_mm: TruncPoly| -> TruncPoly {
        if (i, j) == (m, m) {
            diag_mm
        } else {
            let v = TruncPoly::variable(cap, VarId::algebra(i, j, l));
            if i == j {
                TruncPoly::one(cap).add(&v)
            } else {
                v
            }
        }
    };
    let build = |mm: TruncPoly| -> PolyMatrix {
        let mut entries = Vec::with_capacity(msz * msz);
        for i in 1..=m {
            for j in 1..=m {
                entries.push(entry(i, j, mm.clone()));
            }
        }
        PolyMatrix::from_entries(msz, entries)
    };
    let zeroed = build(TruncPoly::zero(cap));
    let c = zeroed.minor_matrix(msz, msz).det();
    let d = zeroed.det();
    TruncPoly::one(cap)
        .sub(&d)
        .mul(&c.inverse_of_unit())
        .sub(&TruncPoly::one(cap))
}

fn generator_matrix_raw(m: u8, l: u16, cap: u32, smm: &TruncPoly) -> PolyMatrix {
    let msz = m as usize;
    let mut entries = Vec::with_capacity(msz * msz);
    for i in 1..=m {
        for j in 1..=m {
            let e = if (i, j) == (m, m) {
                TruncPoly::one(cap).add(smm)
            } else {
                let v = TruncPoly::variable(cap, VarId::algebra(i, j, l));
                if i == j {
                    TruncPoly::one(cap).add(&v)
                } else {
                    v
                }
            };
            entries.push(e);
        }
    }
    PolyMatrix::from_entries(msz, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::rat;
    use crate::words::Word;
    use num::One;

    fn var(cap: u32, i: u8, j: u8, l: u16) -> TruncPoly {
        TruncPoly::variable(cap, VarId::algebra(i, j, l))
    }

    #[test]
    fn smm_m2_closed_form() {
        // m=2, cap 2: σ_22,l = −s_11 + s_11² + s_12 s_21
        let ctx = AlgebraContext::new(2, 1, 2);
        let s11 = var(2, 1, 1, 1);
        let s12 = var(2, 1, 2, 1);
        let s21 = var(2, 2, 1, 1);
        let expected = s11.neg().add(&s11.mul(&s11)).add(&s12.mul(&s21));
        assert_eq!(ctx.smm_polynomial(1), &expected);
    }

    #[test]
    fn smm_degree_one_part() {
        // degree-1 part is −(s_11 + ⋯ + s_{m−1,m−1}) for any m
        for m in 2u8..=3 {
            let ctx = AlgebraContext::new(m, 2, 3);
            for l in 1..=2 {
                let mut expected = TruncPoly::zero(3);
                for i in 1..m {
                    expected = expected.sub(&var(3, i, i, l));
                }
                assert_eq!(ctx.smm_polynomial(l).graded_part(1), expected);
            }
        }
    }

    #[test]
    fn smm_vanishes_at_zero() {
        let ctx = AlgebraContext::new(3, 1, 2);
        assert!(ctx.smm_polynomial(1).constant_term().is_zero());
    }

    #[test]
    fn generator_det_is_one() {
        for m in 2u8..=3 {
            let ctx = AlgebraContext::new(m, 2, 3);
            for l in 1..=2 {
                assert_eq!(
                    ctx.generator_matrix(l).det(),
                    TruncPoly::one(3),
                    "m={m} l={l}"
                );
            }
        }
    }

    #[test]
    fn adjugate_basics() {
        let cap = 2;
        // 2×2 adjugate swaps the diagonal and negates the off-diagonal
        let a = var(cap, 1, 1, 1);
        let b = var(cap, 1, 2, 1);
        let mat = PolyMatrix::from_entries(
            2,
            vec![
                a.clone(),
                b.clone(),
                TruncPoly::one(cap),
                TruncPoly::constant(cap, rat(3)),
            ],
        );
        let adj = mat.adjugate();
        assert_eq!(adj.at(1, 1), &TruncPoly::constant(cap, rat(3)));
        assert_eq!(adj.at(2, 2), &a);
        assert_eq!(adj.at(1, 2), &b.neg());
        assert_eq!(adj.at(2, 1), &TruncPoly::one(cap).neg());
        // adjugate(I) = I
        let id = PolyMatrix::identity(3, cap);
        assert_eq!(id.adjugate(), id);
    }

    #[test]
    fn adjugate_times_matrix_is_det() {
        let ctx = AlgebraContext::new(3, 1, 2);
        let g = ctx.generator_matrix(1);
        let prod = g.mul(ctx.generator_adjugate(1));
        assert_eq!(prod, PolyMatrix::identity(3, 2));
    }

    #[test]
    fn s_entry_product_formula() {
        let ctx = AlgebraContext::new(2, 2, 3);
        let w = Word::gen(1).mul(&Word::gen(2));
        for i in 1..=2u8 {
            for j in 1..=2u8 {
                let lhs = ctx.s_entry(&w, i, j);
                // s_ij(x1) + s_ij(x2) + Σ_k s_ik(x1)s_kj(x2)
                let s = |a: u8, b: u8, l: u16| {
                    let e = ctx.generator_matrix(l).at(a as usize, b as usize).clone();
                    if a == b {
                        e.sub(&TruncPoly::one(3))
                    } else {
                        e
                    }
                };
                let mut rhs = s(i, j, 1).add(&s(i, j, 2));
                for k in 1..=2u8 {
                    rhs = rhs.add(&s(i, k, 1).mul(&s(k, j, 2)));
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn s_entry_trivial_cases() {
        let ctx = AlgebraContext::new(2, 2, 3);
        let w = Word::gen(1).mul(&Word::gen_inv(1));
        assert!(ctx.s_entry(&w, 1, 1).is_zero());
        assert!(ctx.s_entry(&Word::identity(), 1, 2).is_zero());
        // degree-1 part of s_ij(x⁻¹) is −s_ij(x)
        for i in 1..=2u8 {
            for j in 1..=2u8 {
                let inv = ctx.s_entry(&Word::gen_inv(1), i, j);
                let fwd = ctx.s_entry(&Word::gen(1), i, j);
                assert_eq!(inv.graded_part(1), fwd.graded_part(1).neg());
            }
        }
    }

    #[test]
    fn s_entry_inverse_congruence() {
        // s_ij(x⁻¹) ≡ −s_ij(x) + Σ_k s_ik(x)s_kj(x) mod 𝔍³
        let ctx = AlgebraContext::new(2, 2, 3);
        let w = Word::gen(1).mul(&Word::gen(2)).mul(&Word::gen_inv(1));
        let m = ctx.m();
        for i in 1..=m {
            for j in 1..=m {
                let lhs = ctx.s_entry(&w.inv(), i, j);
                let mut rhs = ctx.s_entry(&w, i, j).neg();
                for k in 1..=m {
                    rhs = rhs.add(&ctx.s_entry(&w, i, k).mul(&ctx.s_entry(&w, k, j)));
                }
                let diff = lhs.sub(&rhs);
                assert!(ctx.in_jk(&diff, 3), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn s_entry_commutator_congruence() {
        // s_ij([y,z]) ≡ Σ_k (s_ik(y)s_kj(z) − s_ik(z)s_kj(y)) mod 𝔍³
        let ctx = AlgebraContext::new(2, 2, 3);
        let y = Word::gen(1).mul(&Word::gen(2));
        let z = Word::gen_inv(2).mul(&Word::gen(1));
        let c = Word::commutator(&y, &z);
        for i in 1..=2u8 {
            for j in 1..=2u8 {
                let lhs = ctx.s_entry(&c, i, j);
                let mut rhs = TruncPoly::zero(3);
                for k in 1..=2u8 {
                    rhs = rhs
                        .add(&ctx.s_entry(&y, i, k).mul(&ctx.s_entry(&z, k, j)))
                        .sub(&ctx.s_entry(&z, i, k).mul(&ctx.s_entry(&y, k, j)));
                }
                assert!(ctx.in_jk(&lhs.sub(&rhs), 3), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn word_matrix_laws() {
        let ctx = AlgebraContext::new(2, 2, 2);
        let a = Word::gen(1).mul(&Word::gen_inv(2));
        let b = Word::gen(2).mul(&Word::gen(1));
        assert_eq!(
            ctx.word_matrix(&a.mul(&b)),
            ctx.word_matrix(&a).mul(&ctx.word_matrix(&b))
        );
        assert_eq!(ctx.word_matrix(&a.inv()), ctx.word_matrix(&a).adjugate());
        assert_eq!(ctx.word_matrix(&a).det(), TruncPoly::one(2));
    }

    #[test]
    fn basis_sizes() {
        let ctx22 = AlgebraContext::new(2, 2, 2);
        assert_eq!(ctx22.dim_tk(1), 6);
        assert_eq!(ctx22.dim_tk(2), 21);
        let ctx32 = AlgebraContext::new(3, 2, 2);
        assert_eq!(ctx32.dim_tk(2), 136);
        for (m, n, k) in [(2u8, 2u16, 1u32), (2, 2, 2), (3, 2, 2), (2, 3, 3)] {
            assert_eq!(
                AlgebraContext::dim_formula(m, n, k),
                AlgebraContext::new(m, n, k.max(1)).dim_tk(k) as u128
            );
        }
    }

    #[test]
    fn dim_formula_matches_symmetric_sum() {
        for m in 2u8..=3 {
            for n in 2u16..=3 {
                for k in 1u32..=3 {
                    assert_eq!(
                        AlgebraContext::dim_formula(m, n, k),
                        AlgebraContext::dim_symmetric_sum(m, n, k),
                        "m={m} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn coords_and_membership() {
        let ctx = AlgebraContext::new(2, 2, 3);
        let f = var(3, 1, 1, 1).mul(&var(3, 1, 2, 2));
        let v = ctx.coords(&f, 2);
        let nonzero: Vec<_> = v.coords.iter().filter(|c| !c.is_zero()).collect();
        assert_eq!(nonzero, vec![&Rat::one()]);
        let comm = ctx.s_entry(&Word::commutator(&Word::gen(1), &Word::gen(2)), 1, 2);
        assert!(ctx.in_jk(&comm, 2));
        assert!(!ctx.in_jk(&ctx.s_entry(&Word::gen(1), 1, 2), 2));
    }

    #[test]
    fn tk_prime_is_a_basis() {
        for (m, n) in [(2u8, 2u16), (3, 2)] {
            let ctx = AlgebraContext::new(m, n, 2);
            for k in 1..=2u32 {
                let cb = ctx.tk_prime_change_of_basis(k);
                assert_eq!(cb.rows(), cb.cols());
                assert!(cb.inverse().is_some(), "m={m} n={n} k={k}");
            }
        }
    }
}
