//! The filtration 𝒟(k) = Ker(Aut F_n → Aut(𝔍/𝔍^{k+1})), the homomorphisms
//! η̃_k into Hom(gr¹, gr^{k+1}), and the classical first Johnson homomorphism
//! τ_1 as an independent cross-check of the degree-1 data.
//!
//! Membership in 𝒟(k) is decided on the T_1 generators: if s_σ(v) ∈ 𝔍^{k+1}
//! for every generator v, the product rule for s_σ extends this to all of 𝔍.

use num::{One, Zero};

use crate::aut_action::AlgebraAction;
use crate::qlinalg::{QMatrix, Rat};
use crate::rep_algebra::AlgebraContext;
use crate::trunc_poly::TruncPoly;
use crate::words::{AutPair, Word};

/// Matrix of η̃_k(σ): rows indexed by basis_Tk(k+1), columns by basis_Tk(1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EtaMatrix {
    pub k: u32,
    pub matrix: QMatrix,
}

impl EtaMatrix {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// σ ∈ 𝒟(k): s_σ(v) ∈ 𝔍^{k+1} for every T_1 generator v.
pub fn is_in_d(ctx: &AlgebraContext, a: &AutPair, k: u32) -> bool {
    assert!(ctx.cap() >= k + 1, "cap too small for D({k})");
    let action = AlgebraAction::new_capped(ctx, &a.fwd, k + 1);
    ctx.variables().into_iter().all(|v| {
        let diff = action.var_image(v).sub(&TruncPoly::variable(k + 1, v));
        ctx.in_jk(&diff, k + 1)
    })
}

/// η̃_k(σ): the column for a T_1 generator v is coords(s_σ(v), k+1).
/// Requires σ ∈ 𝒟(k).
pub fn eta_k(ctx: &AlgebraContext, a: &AutPair, k: u32) -> EtaMatrix {
    assert!(is_in_d(ctx, a, k), "automorphism outside D({k})");
    let action = AlgebraAction::new_capped(ctx, &a.fwd, k + 1);
    let cols: Vec<Vec<Rat>> = ctx
        .variables()
        .into_iter()
        .map(|v| {
            let diff = action.var_image(v).sub(&TruncPoly::variable(k + 1, v));
            ctx.coords(&diff.graded_part(k + 1), k + 1).coords
        })
        .collect();
    EtaMatrix {
        k,
        matrix: QMatrix::from_cols(cols),
    }
}

/// τ_1(σ): rows indexed by x_p∧x_q (p < q, lex), columns by generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tau1Value {
    pub n: u16,
    pub matrix: QMatrix,
}

/// Row index of x_p∧x_q (1-based p < q) in the Λ² basis.
pub fn wedge_index(n: u16, p: u16, q: u16) -> usize {
    assert!(1 <= p && p < q && q <= n);
    let (n, p, q) = (n as usize, p as usize, q as usize);
    // pairs (1,2), (1,3), …, (1,n), (2,3), …
    (p - 1) * n - p * (p - 1) / 2 + (q - p) - 1
}

/// Degree-2 truncation of the free associative Magnus expansion: 1 + linear
/// part + quadratic part (coefficient of X_p X_q at row p, column q).
struct Magnus2 {
    lin: Vec<Rat>,
    quad: QMatrix,
}

impl Magnus2 {
    fn one(n: usize) -> Self {
        Magnus2 {
            lin: vec![Rat::zero(); n],
            quad: QMatrix::zeros(n, n),
        }
    }

    /// Multiply by the expansion of a single letter: 1 + X_l (sign +1) or
    /// 1 − X_l + X_l² (sign −1).
    fn mul_letter(&mut self, l: usize, sign: i8) {
        let n = self.lin.len();
        let s = if sign == 1 { Rat::one() } else { -Rat::one() };
        // quadratic: self.quad + lin ⊗ (s·e_l) + (letter's own X_l² term)
        for p in 0..n {
            if !self.lin[p].is_zero() {
                let v = self.quad.get(p, l) + &self.lin[p] * &s;
                self.quad.set(p, l, v);
            }
        }
        if sign == -1 {
            let v = self.quad.get(l, l) + Rat::one();
            self.quad.set(l, l, v);
        }
        self.lin[l] = &self.lin[l] + s;
    }

    fn of_word(n: usize, w: &Word) -> Self {
        let mut m = Magnus2::one(n);
        for &(l, s) in w.letters() {
            m.mul_letter((l - 1) as usize, s);
        }
        m
    }
}

/// τ_1 on IA automorphisms: the Λ²H class of x_l⁻¹·x_l^σ per generator,
/// read off the antisymmetrized quadratic Magnus coefficients.
pub fn tau1(a: &AutPair) -> Tau1Value {
    let n = a.n();
    assert!(a.is_ia(), "tau1 requires an IA automorphism");
    let rows = (n as usize) * (n as usize - 1) / 2;
    let mut matrix = QMatrix::zeros(rows, n as usize);
    for l in 1..=n {
        let w = Word::gen_inv(l).mul(a.fwd.image(l));
        let m = Magnus2::of_word(n as usize, &w);
        debug_assert!(m.lin.iter().all(|c| c.is_zero()));
        for p in 1..=n {
            for q in (p + 1)..=n {
                // the degree-2 part of an IA image is a sum of commutators
                // [X_p, X_q], so halving the antisymmetrization recovers the
                // x_p∧x_q coefficient exactly
                let c = (m.quad.get(p as usize - 1, q as usize - 1)
                    - m.quad.get(q as usize - 1, p as usize - 1))
                    / crate::qlinalg::rat(2);
                matrix.set(wedge_index(n, p, q), l as usize - 1, c);
            }
        }
    }
    Tau1Value { n, matrix }
}
