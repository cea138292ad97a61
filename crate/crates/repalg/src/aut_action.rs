//! Action of endomorphisms of F_n on the truncated algebra, the operator
//! s_σ(f) = f^σ − f, and the induced linear maps ρ_k on 𝔍/𝔍^k.
//!
//! The natural action is a right action: s_ij(x_l)^σ = s_ij(x_l^σ). ρ_k uses
//! the LEFT action f ↦ f^{σ⁻¹} so that it is a genuine homomorphism; every
//! crossed-homomorphism formula downstream is stated in that convention.

use crate::qlinalg::QMatrix;
use crate::rep_algebra::{AlgebraContext, PolyMatrix};
use crate::trunc_poly::{Namespace, TruncPoly, VarId};
use crate::words::{AutPair, Endo};

/// Substitution table of one endomorphism on the algebra: the word matrices
/// of the generator images, precomputed at a working cap.
pub struct AlgebraAction<'a> {
    ctx: &'a AlgebraContext,
    cap: u32,
    mats: Vec<PolyMatrix>,
}

impl<'a> AlgebraAction<'a> {
    pub fn new(ctx: &'a AlgebraContext, e: &Endo) -> Self {
        Self::new_capped(ctx, e, ctx.cap())
    }

    /// Precompute at a lower cap when only low-degree data is needed.
    pub fn new_capped(ctx: &'a AlgebraContext, e: &Endo, cap: u32) -> Self {
        assert_eq!(e.n(), ctx.n(), "rank mismatch");
        let mats = (1..=ctx.n())
            .map(|l| ctx.word_matrix_capped(e.image(l), cap))
            .collect();
        AlgebraAction { ctx, cap, mats }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Image of the variable s_ij(x_l) under the stored endomorphism.
    pub fn var_image(&self, v: VarId) -> TruncPoly {
        assert_eq!(v.ns, Namespace::Algebra);
        let e = self.mats[(v.l - 1) as usize]
            .at(v.i as usize, v.j as usize)
            .clone();
        if v.i == v.j {
            e.sub(&TruncPoly::one(self.cap))
        } else {
            e
        }
    }

    /// f ↦ f^σ, extended as an algebra homomorphism.
    pub fn apply(&self, f: &TruncPoly) -> TruncPoly {
        assert_eq!(f.cap(), self.cap, "cap mismatch");
        f.substitute(&mut |v| self.var_image(v))
    }

    pub fn ctx(&self) -> &AlgebraContext {
        self.ctx
    }
}

/// Right action f ↦ f^σ.
pub fn act_right(ctx: &AlgebraContext, e: &Endo, f: &TruncPoly) -> TruncPoly {
    AlgebraAction::new_capped(ctx, e, f.cap()).apply(f)
}

/// Left action f ↦ f^{σ⁻¹}.
pub fn act_left(ctx: &AlgebraContext, a: &AutPair, f: &TruncPoly) -> TruncPoly {
    act_right(ctx, &a.bwd, f)
}

/// s_σ(f) := f^σ − f ∈ 𝔍 (requires f ∈ 𝔍).
pub fn s_sigma(ctx: &AlgebraContext, e: &Endo, f: &TruncPoly) -> TruncPoly {
    use num::Zero;
    assert!(
        f.constant_term().is_zero(),
        "s_sigma needs f in the augmentation ideal"
    );
    act_right(ctx, e, f).sub(f)
}

/// ρ_k(a): images of every T_1 generator under the left action, truncated to
/// degree ≤ k−1 (the action on 𝔍/𝔍^k). Entry order matches ctx.variables().
pub fn rho(ctx: &AlgebraContext, a: &AutPair, k: u32) -> Vec<TruncPoly> {
    assert!(k >= 2 && k - 1 <= ctx.cap(), "k out of range");
    let action = AlgebraAction::new_capped(ctx, &a.bwd, k - 1);
    ctx.variables()
        .into_iter()
        .map(|v| action.var_image(v))
        .collect()
}

/// Degree-1 block of ρ: the matrix β with β·coords(v) = coords(ρ(a)(v)) on
/// gr¹; columns indexed by T_1 generators in canonical order.
pub fn rho1_matrix(ctx: &AlgebraContext, a: &AutPair) -> QMatrix {
    let images = rho(ctx, a, 2);
    QMatrix::from_cols(
        images
            .iter()
            .map(|f| ctx.coords(&f.graded_part(1), 1).coords)
            .collect(),
    )
}
