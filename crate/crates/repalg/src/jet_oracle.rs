//! Exact evaluation of normal-form algebra elements at SL(m) representations
//! over truncated multiparameter power-series rings.
//!
//! A jet representation sends each generator to an m×m matrix of jet-namespace
//! polynomials that is the identity to zeroth order and has determinant
//! exactly 1 in the truncated ring. Evaluating s_ij(x_l) ↦ (ρ(x_l))_ij − δ_ij
//! is a second, independent computation path for every word-matrix identity,
//! which is what makes this module the correctness oracle for the normal-form
//! model (s_mm elimination, adjugate inverses, truncation bookkeeping).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::qlinalg::{rat, QMatrix, Rat};
use crate::rep_algebra::{AlgebraContext, PolyMatrix};
use crate::trunc_poly::{Monomial, Namespace, TruncPoly, VarId};
use crate::words::Word;

/// An n-tuple of unit-determinant jet matrices, one per generator of F_n.
#[derive(Clone, Debug)]
pub struct JetRep {
    m: u8,
    n: u16,
    cap: u32,
    mats: Vec<PolyMatrix>,
}

impl JetRep {
    pub fn m(&self) -> u8 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn matrix(&self, l: u16) -> &PolyMatrix {
        &self.mats[(l - 1) as usize]
    }

    /// ρ(w) as an exact matrix product; inverse letters use the adjugate,
    /// which is the inverse because every generator has determinant 1.
    pub fn word_matrix(&self, w: &Word) -> PolyMatrix {
        let mut out = PolyMatrix::identity(self.m as usize, self.cap);
        for &(l, s) in w.letters() {
            let g = &self.mats[(l - 1) as usize];
            out = out.mul(&if s == 1 { g.clone() } else { g.adjugate() });
        }
        out
    }
}

/// Evaluate an algebra-namespace polynomial at a jet representation:
/// s_ij(x_l) ↦ (ρ(x_l))_ij − δ_ij.
pub fn evaluate(f: &TruncPoly, rep: &JetRep) -> TruncPoly {
    assert!(rep.cap >= f.cap(), "jet cap below polynomial cap");
    f.substitute(&mut |v: VarId| {
        assert_eq!(v.ns, Namespace::Algebra, "evaluate expects algebra variables");
        let e = rep.matrix(v.l).at(v.i as usize, v.j as usize).clone();
        let e = e.truncated(f.cap());
        if v.i == v.j {
            e.sub(&TruncPoly::one(f.cap()))
        } else {
            e
        }
    })
}

/// The trivial representation: every generator ↦ identity.
pub fn trivial_jet_rep(ctx: &AlgebraContext) -> JetRep {
    JetRep {
        m: ctx.m(),
        n: ctx.n(),
        cap: ctx.cap(),
        mats: (0..ctx.n())
            .map(|_| PolyMatrix::identity(ctx.m() as usize, ctx.cap()))
            .collect(),
    }
}

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            return rat(c);
        }
    }
}

/// Elementary transvection I + c·z·E_ij as a jet matrix (determinant 1).
fn transvection(m: u8, cap: u32, i: u8, j: u8, c: &Rat, z: VarId) -> PolyMatrix {
    let mut mat = PolyMatrix::identity(m as usize, cap);
    let mut entries = Vec::with_capacity((m as usize) * (m as usize));
    for r in 1..=m as usize {
        for s in 1..=m as usize {
            if (r, s) == (i as usize, j as usize) {
                entries.push(TruncPoly::variable(cap, z).scale(c));
            } else {
                entries.push(mat.at(r, s).clone());
            }
        }
    }
    mat = PolyMatrix::from_entries(m as usize, entries);
    mat
}

/// Diagonal jet matrix diag(1+c_1 z, …, 1+c_{m−1} z, u) with u the exact
/// inverse of the product, so the determinant is 1.
fn unit_diagonal(m: u8, cap: u32, rng: &mut ChaCha8Rng, z: VarId) -> PolyMatrix {
    let msz = m as usize;
    let mut diag = Vec::with_capacity(msz);
    let mut prod = TruncPoly::one(cap);
    for _ in 1..m {
        let e = TruncPoly::one(cap).add(&TruncPoly::variable(cap, z).scale(&nonzero_coeff(rng)));
        prod = prod.mul(&e);
        diag.push(e);
    }
    diag.push(prod.inverse_of_unit());
    let mut entries = vec![TruncPoly::zero(cap); msz * msz];
    for (i, e) in diag.into_iter().enumerate() {
        entries[i * msz + i] = e;
    }
    PolyMatrix::from_entries(msz, entries)
}

/// Random unit-determinant jet representation: each generator is a product of
/// random transvections and a unit diagonal in its own jet parameters.
pub fn random_jet_rep(ctx: &AlgebraContext, seed: u64, params_per_generator: u8) -> JetRep {
    assert!(params_per_generator >= 1);
    let (m, n, cap) = (ctx.m(), ctx.n(), ctx.cap());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mats = (1..=n)
        .map(|l| {
            let mut mat = PolyMatrix::identity(m as usize, cap);
            let params: Vec<VarId> = (1..=params_per_generator)
                .map(|p| VarId::jet(p, 1, l))
                .collect();
            for round in 0..(m as usize + 1) {
                let z = params[round % params.len()];
                let i = rng.gen_range(1..=m);
                let j = loop {
                    let j = rng.gen_range(1..=m);
                    if j != i {
                        break j;
                    }
                };
                mat = mat.mul(&transvection(m, cap, i, j, &nonzero_coeff(&mut rng), z));
            }
            mat.mul(&unit_diagonal(m, cap, &mut rng, params[0]))
        })
        .collect();
    JetRep { m, n, cap, mats }
}

/// The fully generic representation: one independent jet parameter per
/// (i, j) ≠ (m, m) and generator, with the (m, m) entry solved for
/// determinant 1. Under it, each normal-form variable evaluates exactly to
/// its own jet parameter, so degree-k monomial evaluations stay distinct.
pub fn full_parameter_jet_rep(ctx: &AlgebraContext) -> JetRep {
    let (m, n, cap) = (ctx.m(), ctx.n(), ctx.cap());
    let msz = m as usize;
    let mats = (1..=n)
        .map(|l| {
            let entry = |i: u8, j: u8| -> TruncPoly {
                let v = TruncPoly::variable(cap, VarId::jet(i, j, l));
                if i == j {
                    TruncPoly::one(cap).add(&v)
                } else {
                    v
                }
            };
            // det = (1+t)·C + D with C the (m,m)-cofactor and D the
            // determinant with the (m,m) entry zeroed; t = (1−D)·C⁻¹ − 1.
            let mut zeroed = Vec::with_capacity(msz * msz);
            for i in 1..=m {
                for j in 1..=m {
                    zeroed.push(if (i, j) == (m, m) {
                        TruncPoly::zero(cap)
                    } else {
                        entry(i, j)
                    });
                }
            }
            let zeroed = PolyMatrix::from_entries(msz, zeroed);
            let c = cofactor_mm(&zeroed);
            let d = zeroed.det();
            let mm = TruncPoly::one(cap)
                .sub(&d)
                .mul(&c.inverse_of_unit());
            let mut entries = Vec::with_capacity(msz * msz);
            for i in 1..=m {
                for j in 1..=m {
                    entries.push(if (i, j) == (m, m) {
                        mm.clone()
                    } else {
                        entry(i, j)
                    });
                }
            }
            PolyMatrix::from_entries(msz, entries)
        })
        .collect();
    JetRep { m, n, cap, mats }
}

fn cofactor_mm(mat: &PolyMatrix) -> TruncPoly {
    let m = mat.size();
    let mut entries = Vec::with_capacity((m - 1) * (m - 1));
    for i in 1..m {
        for j in 1..m {
            entries.push(mat.at(i, j).clone());
        }
    }
    PolyMatrix::from_entries(m - 1, entries).det()
}

/// Commuting jet representation: a shared random unit-determinant conjugator
/// B and per-generator diagonal jets D_l, so the images B·D_l·B⁻¹ commute
/// pairwise and each has determinant exactly 1. Each generator carries m−1
/// independent diagonal parameters.
pub fn commuting_jet_rep(ctx: &AlgebraContext, seed: u64) -> JetRep {
    let (m, n, cap) = (ctx.m(), ctx.n(), ctx.cap());
    let msz = m as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // B as a product of integer transvections, so B⁻¹ = adj(B) exactly.
    let mut b = PolyMatrix::identity(msz, cap);
    for _ in 0..(msz * 2) {
        let i = rng.gen_range(1..=m);
        let j = loop {
            let j = rng.gen_range(1..=m);
            if j != i {
                break j;
            }
        };
        let c = nonzero_coeff(&mut rng);
        let mut entries = Vec::with_capacity(msz * msz);
        for r in 1..=m {
            for s in 1..=m {
                let mut e = if r == s {
                    TruncPoly::one(cap)
                } else {
                    TruncPoly::zero(cap)
                };
                if (r, s) == (i, j) {
                    e = e.add(&TruncPoly::constant(cap, c.clone()));
                }
                entries.push(e);
            }
        }
        b = b.mul(&PolyMatrix::from_entries(msz, entries));
    }
    let b_inv = b.adjugate();
    let mats = (1..=n)
        .map(|l| {
            let mut diag = Vec::with_capacity(msz);
            let mut prod = TruncPoly::one(cap);
            for r in 1..m {
                let e = TruncPoly::one(cap).add(
                    &TruncPoly::variable(cap, VarId::jet(r, 1, l)).scale(&nonzero_coeff(&mut rng)),
                );
                prod = prod.mul(&e);
                diag.push(e);
            }
            diag.push(prod.inverse_of_unit());
            let mut entries = vec![TruncPoly::zero(cap); msz * msz];
            for (i, e) in diag.into_iter().enumerate() {
                entries[i * msz + i] = e;
            }
            b.mul(&PolyMatrix::from_entries(msz, entries)).mul(&b_inv)
        })
        .collect();
    JetRep { m, n, cap, mats }
}

/// Matrix of degree-k jet coefficients: one column per input polynomial, one
/// row per degree-k jet monomial occurring in any of them.
pub fn jet_coeff_matrix(polys: &[TruncPoly], k: u32) -> QMatrix {
    let mut monos: Vec<Monomial> = Vec::new();
    {
        let mut seen = std::collections::BTreeSet::new();
        for p in polys {
            for (mono, _) in p.terms() {
                if mono.degree() == k && seen.insert(mono.clone()) {
                    monos.push(mono.clone());
                }
            }
        }
        monos.sort();
    }
    let index: std::collections::BTreeMap<&Monomial, usize> =
        monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut out = QMatrix::zeros(monos.len(), polys.len());
    for (j, p) in polys.iter().enumerate() {
        for (mono, c) in p.terms() {
            if mono.degree() == k {
                out.set(index[mono], j, c.clone());
            }
        }
    }
    out
}

/// Column rank of the degree-k evaluations of `polys` under several stacked
/// random jet representations. Used by randomized independence tests.
pub fn stacked_random_rank(
    ctx: &AlgebraContext,
    polys: &[TruncPoly],
    k: u32,
    copies: u32,
    seed: u64,
) -> usize {
    let mut stacked: Option<QMatrix> = None;
    for t in 0..copies {
        let rep = random_jet_rep(ctx, seed.wrapping_add(t as u64), ctx.m());
        let evals: Vec<TruncPoly> = polys.iter().map(|p| evaluate(p, &rep)).collect();
        let block = jet_coeff_matrix(&evals, k);
        stacked = Some(match stacked {
            None => block,
            Some(acc) => acc.vstack(&block),
        });
    }
    stacked.map_or(0, |m| m.rank())
}

/// Column rank of the degree-k evaluations of `polys` under several stacked
/// commuting jet representations (distinct shared conjugators per copy).
pub fn stacked_commuting_rank(
    ctx: &AlgebraContext,
    polys: &[TruncPoly],
    k: u32,
    copies: u32,
    seed: u64,
) -> usize {
    let mut stacked: Option<QMatrix> = None;
    for t in 0..copies {
        let rep = commuting_jet_rep(ctx, seed.wrapping_add(t as u64));
        let evals: Vec<TruncPoly> = polys.iter().map(|p| evaluate(p, &rep)).collect();
        let block = jet_coeff_matrix(&evals, k);
        stacked = Some(match stacked {
            None => block,
            Some(acc) => acc.vstack(&block),
        });
    }
    stacked.map_or(0, |m| m.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trunc_poly::TruncPoly;
    use crate::words::Word;

    #[test]
    fn trivial_rep_evaluates_to_constant_term() {
        let ctx = AlgebraContext::new(2, 2, 2);
        let rep = trivial_jet_rep(&ctx);
        let f = ctx
            .s_entry(&Word::gen(1), 1, 2)
            .add(&TruncPoly::constant(2, rat(7)));
        assert_eq!(evaluate(&f, &rep), TruncPoly::constant(2, rat(7)));
    }

    #[test]
    fn random_rep_has_unit_determinant_and_is_reproducible() {
        let ctx = AlgebraContext::new(3, 2, 3);
        let rep = random_jet_rep(&ctx, 42, 2);
        for l in 1..=2 {
            assert_eq!(rep.matrix(l).det(), TruncPoly::one(3));
        }
        let rep2 = random_jet_rep(&ctx, 42, 2);
        for l in 1..=2 {
            assert_eq!(rep.matrix(l), rep2.matrix(l));
        }
        assert_ne!(
            random_jet_rep(&ctx, 43, 2).matrix(1),
            rep.matrix(1)
        );
    }

    #[test]
    fn oracle_equivalence_on_words() {
        // evaluate(s_entry(w,i,j)) must equal the jet matrix product entry.
        for m in 2u8..=3 {
            let ctx = AlgebraContext::new(m, 2, 3);
            let rep = random_jet_rep(&ctx, 7, 2);
            let words = [
                Word::gen(1).mul(&Word::gen_inv(2)),
                Word::commutator(&Word::gen(1), &Word::gen(2)),
                Word::gen_inv(1).mul(&Word::gen(2)).mul(&Word::gen(1)),
            ];
            for w in &words {
                let jm = rep.word_matrix(w);
                for i in 1..=m {
                    for j in 1..=m {
                        let lhs = evaluate(&ctx.s_entry(w, i, j), &rep);
                        let mut rhs = jm.at(i as usize, j as usize).clone();
                        if i == j {
                            rhs = rhs.sub(&TruncPoly::one(3));
                        }
                        assert_eq!(lhs, rhs, "m={m} w={w} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_isolates_the_elimination_step() {
        // evaluate(σ_mm,l) = (ρ(x_l))_mm − 1
        for m in 2u8..=3 {
            let ctx = AlgebraContext::new(m, 2, 3);
            let rep = random_jet_rep(&ctx, 11, 2);
            for l in 1..=2 {
                let lhs = evaluate(ctx.smm_polynomial(l), &rep);
                let rhs = rep
                    .matrix(l)
                    .at(m as usize, m as usize)
                    .clone()
                    .sub(&TruncPoly::one(3));
                assert_eq!(lhs, rhs, "m={m} l={l}");
            }
        }
    }

    #[test]
    fn grading_compatibility() {
        let ctx = AlgebraContext::new(2, 2, 3);
        let rep = random_jet_rep(&ctx, 5, 2);
        let f = ctx.s_entry(&Word::commutator(&Word::gen(1), &Word::gen(2)), 1, 2);
        assert!(ctx.in_jk(&f, 2));
        let e = evaluate(&f, &rep);
        assert!(e.min_degree().map_or(true, |d| d >= 2));
    }

    #[test]
    fn full_parameter_rep_gives_exact_tk_rank() {
        for (m, n) in [(2u8, 2u16), (3, 2)] {
            let cap = 3;
            let ctx = AlgebraContext::new(m, n, cap);
            let rep = full_parameter_jet_rep(&ctx);
            for l in 1..=n {
                assert_eq!(rep.matrix(l).det(), TruncPoly::one(cap));
            }
            for k in 1..=cap.min(if m == 3 { 2 } else { 3 }) {
                let polys: Vec<TruncPoly> = ctx
                    .basis_tk(k)
                    .iter()
                    .map(|mono| {
                        let f = TruncPoly::zero(cap).add_term(mono.clone(), rat(1));
                        evaluate(&f, &rep)
                    })
                    .collect();
                let rank = jet_coeff_matrix(&polys, k).rank();
                assert_eq!(rank, ctx.dim_tk(k), "m={m} n={n} k={k}");
            }
        }
    }

    #[test]
    fn commuting_rep_commutes() {
        for m in 2u8..=3 {
            let ctx = AlgebraContext::new(m, 2, 2);
            let rep = commuting_jet_rep(&ctx, 9);
            let a = rep.matrix(1);
            let b = rep.matrix(2);
            assert_eq!(a.mul(b), b.mul(a));
            assert_eq!(a.det(), TruncPoly::one(2));
            assert_eq!(b.det(), TruncPoly::one(2));
        }
    }

    #[test]
    fn random_rank_matches_t1() {
        let ctx = AlgebraContext::new(2, 2, 2);
        let polys: Vec<TruncPoly> = ctx
            .basis_tk(1)
            .iter()
            .map(|mono| TruncPoly::zero(2).add_term(mono.clone(), rat(1)))
            .collect();
        let rank = stacked_random_rank(&ctx, &polys, 1, 8, 31);
        assert_eq!(rank, ctx.dim_tk(1));
    }
}
