//! The verification suite: one check per acceptance gate, shared by the CLI
//! `verify` subcommand and the `acceptance` integration test.
//!
//! Every check is deterministic given the seed. Randomized rank tests retry
//! up to three derived seeds before reporting failure; everything else is an
//! exact identity. A failing check carries the first few mismatches in its
//! details string.

use num::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abelian::{act_on_h12, project_fh, theta_h, HAlgebraContext, YElement, YKind};
use crate::aut_action::s_sigma;
use crate::crossed::{
    act_on_gr12, delta_x, fk_value, fm_value, project_f1, project_f2, theta, verify_cocycle,
    CocycleValue, Gr12Map,
};
use crate::filtration::{eta_k, is_in_d, tau1, wedge_index};
use crate::jet_oracle::{evaluate, random_jet_rep, stacked_commuting_rank, stacked_random_rank};
use crate::qlinalg::{rat, QMatrix, Rat};
use crate::rep_algebra::{AlgebraContext, PolyMatrix};
use crate::trunc_poly::{Monomial, TruncPoly, VarId};
use crate::words::{
    build_aut_word, magnus_kij, magnus_kijl, nielsen, AutGen, AutPair, Endo, NielsenName, Word,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
        }
    }
}

/// One verification result, serialized as {"check","status","details"}.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}: {}", self.status, self.check, self.details)
    }
}

fn finish(name: &str, problems: Vec<String>, ok: &str) -> Check {
    if problems.is_empty() {
        Check {
            check: name.to_string(),
            status: Status::Pass,
            details: ok.to_string(),
        }
    } else {
        let shown = problems.len().min(3);
        let mut details = problems[..shown].join("; ");
        if problems.len() > shown {
            details.push_str(&format!("; and {} more", problems.len() - shown));
        }
        Check {
            check: name.to_string(),
            status: Status::Fail,
            details,
        }
    }
}

fn monomial_poly(cap: u32, m: &Monomial) -> TruncPoly {
    TruncPoly::zero(cap).add_term(m.clone(), Rat::one())
}

fn random_word(rng: &mut ChaCha8Rng, n: u16, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::reduce((0..len).map(|_| {
        (
            rng.gen_range(1..=n),
            if rng.gen::<bool>() { 1i8 } else { -1 },
        )
    }))
}

fn random_syms(rng: &mut ChaCha8Rng, pool: &[AutGen], max_len: usize) -> Vec<(AutGen, i8)> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            (
                pool[rng.gen_range(0..pool.len())],
                if rng.gen::<bool>() { 1i8 } else { -1 },
            )
        })
        .collect()
}

const NIELSEN_POOL: [AutGen; 4] = [
    AutGen::Nielsen(NielsenName::P),
    AutGen::Nielsen(NielsenName::Q),
    AutGen::Nielsen(NielsenName::S),
    AutGen::Nielsen(NielsenName::U),
];

fn magnus_pool(n: u16) -> Vec<AutGen> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(AutGen::Kij(i, j));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for l in (j + 1)..=n {
                if i != j && i != l {
                    out.push(AutGen::Kijl(i, j, l));
                }
            }
        }
    }
    out
}

fn syms_label(syms: &[(AutGen, i8)]) -> String {
    syms.iter()
        .map(|&(g, e)| {
            if e >= 0 {
                g.to_string()
            } else {
                format!("{g}^-1")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn vec_label(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// 1. |T_k| matches the closed-form binomial, and the T_k monomials stay
/// independent under stacked random jet evaluations.
pub fn check_dimension_formula(seed: u64) -> Check {
    let mut problems = Vec::new();
    for m in 2u8..=3 {
        for n in 2u16..=3 {
            for k in 1u32..=3 {
                let ctx = AlgebraContext::new(m, n, 3);
                let dim = ctx.dim_tk(k) as u128;
                let formula = AlgebraContext::dim_formula(m, n, k);
                if dim != formula {
                    problems.push(format!(
                        "|T_{k}| = {dim} but the formula gives {formula} (m={m}, n={n})"
                    ));
                }
                if formula != AlgebraContext::dim_symmetric_sum(m, n, k) {
                    problems.push(format!(
                        "binomial and symmetric-power counts differ (m={m}, n={n}, k={k})"
                    ));
                }
            }
        }
    }
    for m in 2u8..=3 {
        let ctx = AlgebraContext::new(m, 2, 2);
        for k in 1u32..=2 {
            let polys: Vec<TruncPoly> = ctx
                .basis_tk(k)
                .iter()
                .map(|mo| monomial_poly(2, mo))
                .collect();
            let want = polys.len();
            let copies = if m == 2 { 6 } else { 20 };
            let ok = (0..3u64).any(|t| {
                stacked_random_rank(&ctx, &polys, k, copies, seed.wrapping_add(t * 977 + k as u64))
                    == want
            });
            if !ok {
                problems.push(format!(
                    "T_{k} evaluations rank-deficient under random jets (m={m}, n=2)"
                ));
            }
        }
    }
    finish(
        "dimension-formula",
        problems,
        "|T_k| = C((m²−1)n+k−1,k) for m,n ∈ {2,3}, k ≤ 3; T_k independent under random jets for n=2, k ≤ 2",
    )
}

/// 2. Word matrices have determinant 1, multiply like words, and invert by
/// the adjugate, on seeded random words.
pub fn check_word_matrix_laws(seed: u64) -> Check {
    let mut problems = Vec::new();
    for m in 2u8..=3 {
        let ctx = AlgebraContext::new(m, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(m as u64));
        let id = PolyMatrix::identity(m as usize, 3);
        let one = TruncPoly::one(3);
        for t in 0..100 {
            let w1 = random_word(&mut rng, 2, 4);
            let w2 = random_word(&mut rng, 2, 4);
            let w = w1.mul(&w2);
            let mw = ctx.word_matrix(&w);
            if mw.det() != one {
                problems.push(format!("det ≠ 1 on word {t} (m={m})"));
                break;
            }
            if ctx.word_matrix(&w1).mul(&ctx.word_matrix(&w2)) != mw {
                problems.push(format!("multiplicativity fails on word {t} (m={m})"));
                break;
            }
            let inv = ctx.word_matrix(&w.inv());
            if mw.mul(&inv) != id || mw.adjugate() != inv {
                problems.push(format!("adjugate inverse fails on word {t} (m={m})"));
                break;
            }
        }
    }
    finish(
        "word-matrix-laws",
        problems,
        "det = 1, multiplicativity, and adjugate inverse hold on 100 random words per m ∈ {2,3}",
    )
}

/// 3. Evaluating the normal-form entries at a random jet representation
/// agrees with the direct jet matrix product.
pub fn check_jet_oracle_equivalence(seed: u64) -> Check {
    let mut problems = Vec::new();
    for m in 2u8..=3 {
        let ctx = AlgebraContext::new(m, 2, 3);
        let rep = random_jet_rep(&ctx, seed.wrapping_add(m as u64 * 101), m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(m as u64 * 211));
        'words: for t in 0..50 {
            let w = random_word(&mut rng, 2, 6);
            let sym = ctx.word_matrix(&w);
            let jet = rep.word_matrix(&w);
            for i in 1..=m {
                for j in 1..=m {
                    let mut lhs = sym.at(i as usize, j as usize).clone();
                    if i == j {
                        lhs = lhs.sub(&TruncPoly::one(3));
                    }
                    let mut rhs = jet.at(i as usize, j as usize).clone();
                    if i == j {
                        rhs = rhs.sub(&TruncPoly::one(3));
                    }
                    if evaluate(&lhs, &rep) != rhs {
                        problems.push(format!(
                            "s_{i}{j} of word {t} disagrees with the jet product (m={m})"
                        ));
                        break 'words;
                    }
                }
            }
        }
    }
    finish(
        "jet-oracle-equivalence",
        problems,
        "evaluate(s_entry(w,i,j)) equals the jet matrix product on 50 random words per m ∈ {2,3}, all entries, cap 3",
    )
}

/// 4. The four identities for s_σ(f) = f^σ − f on random (σ, τ, f) triples.
pub fn check_s_sigma_identities(seed: u64) -> Check {
    let mut problems = Vec::new();
    let ctx = AlgebraContext::new(2, 2, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(41));
    let pool: Vec<AutGen> = NIELSEN_POOL
        .iter()
        .copied()
        .chain([AutGen::Kij(1, 2), AutGen::Kij(2, 1)])
        .collect();
    let vars = ctx.variables();
    for t in 0..50 {
        let s = build_aut_word(&random_syms(&mut rng, &pool, 3), 2).unwrap();
        let tt = build_aut_word(&random_syms(&mut rng, &pool, 3), 2).unwrap();
        let mut f = TruncPoly::zero(3);
        for _ in 0..rng.gen_range(1..=3) {
            let v = vars[rng.gen_range(0..vars.len())];
            f = f.add(&TruncPoly::variable(3, v).scale(&rat(rng.gen_range(-2..=2))));
        }
        let act = |e: &Endo, g: &TruncPoly| crate::aut_action::act_right(&ctx, e, g);
        // (1) s_{στ}(f) = (s_σ(f))^τ + s_τ(f)
        let st = AutPair::compose(&s, &tt);
        if s_sigma(&ctx, &st.fwd, &f)
            != act(&tt.fwd, &s_sigma(&ctx, &s.fwd, &f)).add(&s_sigma(&ctx, &tt.fwd, &f))
        {
            problems.push(format!("product identity fails on triple {t}"));
            break;
        }
        // (2) s of the identity is zero
        if !s_sigma(&ctx, &Endo::identity(2), &f).is_zero() {
            problems.push(format!("identity automorphism gives nonzero s (triple {t})"));
            break;
        }
        // (3) s_{σ⁻¹}(f) = −(s_σ(f))^{σ⁻¹}
        if s_sigma(&ctx, &s.bwd, &f) != act(&s.bwd, &s_sigma(&ctx, &s.fwd, &f)).neg() {
            problems.push(format!("inverse identity fails on triple {t}"));
            break;
        }
        // (4) s_{[σ,τ]}(f) = { s_τ(s_σ(f)) − s_σ(s_τ(f)) }^{σ⁻¹τ⁻¹}
        let comm = AutPair::compose(
            &AutPair::compose(&AutPair::compose(&s, &tt), &s.inverse()),
            &tt.inverse(),
        );
        let inner = s_sigma(&ctx, &tt.fwd, &s_sigma(&ctx, &s.fwd, &f))
            .sub(&s_sigma(&ctx, &s.fwd, &s_sigma(&ctx, &tt.fwd, &f)));
        if s_sigma(&ctx, &comm.fwd, &f) != act(&Endo::compose(&s.bwd, &tt.bwd), &inner) {
            problems.push(format!("commutator identity fails on triple {t}"));
            break;
        }
    }
    finish(
        "s-sigma-identities",
        problems,
        "the product, identity, inverse, and commutator identities for s_σ hold on 50 random triples",
    )
}

/// 5. Entries of commutator words of weight k lie in 𝔍^k (k ≤ 4, cap 5).
pub fn check_commutator_depth(_seed: u64) -> Check {
    let mut problems = Vec::new();
    let ctx = AlgebraContext::new(2, 2, 5);
    let x1 = Word::gen(1);
    let x2 = Word::gen(2);
    let cases: Vec<(u32, Word)> = vec![
        (1, x1.clone()),
        (2, Word::left_normed(&[x1.clone(), x2.clone()])),
        (2, Word::commutator(&x1.inv(), &x2)),
        (3, Word::left_normed(&[x1.clone(), x2.clone(), x1.clone()])),
        (3, Word::left_normed(&[x1.clone(), x2.clone(), x2.clone()])),
        (3, Word::commutator(&x1, &Word::commutator(&x2, &x1))),
        (4, Word::left_normed(&[x1.clone(), x2.clone(), x1.clone(), x1.clone()])),
        (4, Word::left_normed(&[x1.clone(), x2.clone(), x1.clone(), x2.clone()])),
        (4, Word::left_normed(&[x1.clone(), x2.clone(), x2.clone(), x2.clone()])),
        (
            4,
            Word::commutator(
                &Word::commutator(&x1, &x2),
                &Word::commutator(&x2, &x1.inv()),
            ),
        ),
    ];
    for (k, w) in &cases {
        for i in 1..=2u8 {
            for j in 1..=2u8 {
                if !ctx.in_jk(&ctx.s_entry(w, i, j), *k) {
                    problems.push(format!("s_{i}{j}({w}) outside 𝔍^{k}"));
                }
            }
        }
    }
    finish(
        "commutator-depth",
        problems,
        "entries of weight-k commutator words lie in 𝔍^k for k ≤ 4 (m=2, n=2, cap 5)",
    )
}

fn eta1_expected_column(
    ctx: &AlgebraContext,
    v: VarId,
    active: u16,
    x: &Word,
    y: &Word,
) -> Vec<Rat> {
    if v.l != active {
        return vec![Rat::zero(); ctx.dim_tk(2)];
    }
    let mut f = TruncPoly::zero(ctx.cap());
    for k in 1..=ctx.m() {
        f = f
            .add(&ctx.s_entry(x, v.i, k).mul(&ctx.s_entry(y, k, v.j)))
            .sub(&ctx.s_entry(y, v.i, k).mul(&ctx.s_entry(x, k, v.j)));
    }
    ctx.coords(&f.graded_part(2), 2).coords
}

/// 6. The degree-1 homomorphism images of the Magnus generators equal their
/// closed forms for every valid index combination.
pub fn check_eta1_closed_forms(_seed: u64) -> Check {
    let mut problems = Vec::new();
    let n = 3u16;
    for m in 2u8..=3 {
        let ctx = AlgebraContext::new(m, n, 2);
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let eta = eta_k(&ctx, &magnus_kij(i, j, n).unwrap(), 1);
                let expected = QMatrix::from_cols(
                    ctx.variables()
                        .into_iter()
                        .map(|v| eta1_expected_column(&ctx, v, i, &Word::gen(i), &Word::gen(j)))
                        .collect(),
                );
                if eta.matrix != expected {
                    problems.push(format!("K_{i}{j} image off its closed form (m={m})"));
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                for l in (j + 1)..=n {
                    if i == j || i == l {
                        continue;
                    }
                    let eta = eta_k(&ctx, &magnus_kijl(i, j, l, n).unwrap(), 1);
                    let expected = QMatrix::from_cols(
                        ctx.variables()
                            .into_iter()
                            .map(|v| {
                                eta1_expected_column(&ctx, v, i, &Word::gen(j), &Word::gen(l))
                            })
                            .collect(),
                    );
                    if eta.matrix != expected {
                        problems.push(format!("K_{i}{j}{l} image off its closed form (m={m})"));
                    }
                }
            }
        }
    }
    finish(
        "eta1-closed-forms",
        problems,
        "η̃₁ of every K_ij and K_ijl equals its closed form for m ∈ {2,3}, n = 3",
    )
}

/// 7. Generator values of θ: zero on the permutations, the closed forms on S
/// and U, and the literal clause θ(K_ij) = η̃₁(K_ij).
pub fn check_theta_generator_values(_seed: u64) -> Check {
    let mut problems = Vec::new();
    let mut k_clause_is_negation = true;
    for m in 2u8..=3 {
        for n in 2u16..=3 {
            let ctx = AlgebraContext::new(m, n, 2);
            for name in [NielsenName::P, NielsenName::Q] {
                if !theta(&ctx, &nielsen(name, n).unwrap()).is_zero() {
                    problems.push(format!("θ({name:?}) ≠ 0 (m={m}, n={n})"));
                }
            }
            // θ(S)(s_ij(x_1)) = −Σ_k [s_ik(x_1)]₁[s_kj(x_1)]₁, zero on l ≥ 2
            let th_s = theta(&ctx, &nielsen(NielsenName::S, n).unwrap());
            for (col, v) in ctx.variables().into_iter().enumerate() {
                let expected = if v.l == 1 {
                    let mut f = TruncPoly::zero(2);
                    for k in 1..=m {
                        let a = ctx.s_entry(&Word::gen(1), v.i, k).graded_part(1);
                        let b = ctx.s_entry(&Word::gen(1), k, v.j).graded_part(1);
                        f = f.sub(&a.mul(&b));
                    }
                    ctx.coords(&f, 2).coords
                } else {
                    vec![Rat::zero(); ctx.dim_tk(2)]
                };
                if th_s.matrix.column(col) != expected {
                    problems.push(format!("θ(S) off its closed form at {v:?} (m={m}, n={n})"));
                }
            }
            // θ(U)(s_ij(x_1)) = Σ_k [s_ik(x_2)]₁[s_kj(x_2)]₁ − [s_ik(x_1)]₁[s_kj(x_2)]₁
            let th_u = theta(&ctx, &nielsen(NielsenName::U, n).unwrap());
            for (col, v) in ctx.variables().into_iter().enumerate() {
                let expected = if v.l == 1 {
                    let mut f = TruncPoly::zero(2);
                    for k in 1..=m {
                        let a1 = ctx.s_entry(&Word::gen(2), v.i, k).graded_part(1);
                        let b1 = ctx.s_entry(&Word::gen(2), k, v.j).graded_part(1);
                        let a2 = ctx.s_entry(&Word::gen(1), v.i, k).graded_part(1);
                        f = f.add(&a1.mul(&b1)).sub(&a2.mul(&b1));
                    }
                    ctx.coords(&f, 2).coords
                } else {
                    vec![Rat::zero(); ctx.dim_tk(2)]
                };
                if th_u.matrix.column(col) != expected {
                    problems.push(format!("θ(U) off its A−B form at {v:?} (m={m}, n={n})"));
                }
            }
            // literal clause: θ(K_12) = η̃₁(K_12)
            let k12 = magnus_kij(1, 2, n).unwrap();
            let th = theta(&ctx, &k12);
            let eta = eta_k(&ctx, &k12, 1);
            if th.matrix != eta.matrix {
                problems.push(format!("θ(K_12) ≠ η̃₁(K_12) (m={m}, n={n})"));
                if th.matrix != eta.matrix.neg() {
                    k_clause_is_negation = false;
                }
            }
        }
    }
    let mut check = finish(
        "theta-generator-values",
        problems,
        "θ vanishes on P, Q; the S and U closed forms hold; θ(K_ij) = η̃₁(K_ij)",
    );
    if !check.passed() && k_clause_is_negation {
        check.details = format!(
            "{} — computed θ(K_ij) = −η̃₁(K_ij) for every (m,n); the restriction of θ to the level-1 kernel is η̃₁ of the inverse",
            check.details
        );
    }
    check
}

fn theta_h_cocycle(hctx: &HAlgebraContext, s: &AutPair, t: &AutPair) -> bool {
    let st = AutPair::compose(s, t);
    theta_h(hctx, &st).matrix
        == theta_h(hctx, s)
            .matrix
            .add(&act_on_h12(hctx, s, &theta_h(hctx, t)).matrix)
}

/// 8. The crossed-homomorphism law for θ and θ_H on random word pairs.
pub fn check_cocycle_law(seed: u64) -> Check {
    let mut problems = Vec::new();
    for n in 2u16..=3 {
        let ctx = AlgebraContext::new(2, n, 2);
        let hctx = HAlgebraContext::new(2, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64 * 59));
        for t in 0..50 {
            let a = build_aut_word(&random_syms(&mut rng, &NIELSEN_POOL, 4), n).unwrap();
            let b = build_aut_word(&random_syms(&mut rng, &NIELSEN_POOL, 4), n).unwrap();
            let value = |p: &AutPair| theta(&ctx, p);
            let act = |p: &AutPair, v: &Gr12Map| act_on_gr12(&ctx, p, v);
            if !verify_cocycle(&value, &act, &a, &b) {
                problems.push(format!("θ cocycle law fails on pair {t} (n={n})"));
                break;
            }
            if !theta_h_cocycle(&hctx, &a, &b) {
                problems.push(format!("θ_H cocycle law fails on pair {t} (n={n})"));
                break;
            }
        }
    }
    finish(
        "cocycle-law",
        problems,
        "f(στ) = f(σ) + σ·f(τ) for θ and θ_H on 50 random word pairs per n ∈ {2,3}",
    )
}

/// 9. The comparison identities f_1 = f_K and −f_2 + δ_x = f_M on the
/// Nielsen generators and random words.
pub fn check_free_comparison(seed: u64) -> Check {
    let mut problems = Vec::new();
    for m in 2u8..=3 {
        for n in 2u16..=3 {
            let ctx = AlgebraContext::new(m, n, 2);
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((m as u64) << 4 | n as u64));
            let mut wordlist: Vec<Vec<(AutGen, i8)>> =
                NIELSEN_POOL.iter().map(|&g| vec![(g, 1)]).collect();
            for _ in 0..25 {
                wordlist.push(random_syms(&mut rng, &NIELSEN_POOL, 4));
            }
            for syms in &wordlist {
                let a = build_aut_word(syms, n).unwrap();
                let th = theta(&ctx, &a);
                if project_f1(&ctx, &th) != fk_value(syms, n) {
                    problems.push(format!(
                        "f_1 ≠ f_K on {} (m={m}, n={n})",
                        syms_label(syms)
                    ));
                    break;
                }
                let rhs = project_f2(&ctx, &th).neg().add(&delta_x(&a));
                if fm_value(syms, n) != rhs {
                    problems.push(format!(
                        "−f_2 + δ_x ≠ f_M on {} (m={m}, n={n})",
                        syms_label(syms)
                    ));
                    break;
                }
            }
        }
    }
    finish(
        "free-comparison-identities",
        problems,
        "f_1 = f_K and −f_2 + δ_x = f_M on the Nielsen generators and 25 random words per (m,n) ∈ {2,3}²",
    )
}

/// 10. Abelian-case dimensions, the Y count with its complementary relation
/// rank, and full rank of Y under commuting jets. Also flags the exponent
/// discrepancy in the published dimension count.
pub fn check_abelian_dimensions(seed: u64) -> Check {
    let mut problems = Vec::new();
    for m in 2u8..=3 {
        for n in 2u16..=3 {
            let hctx = HAlgebraContext::new(m, n);
            let gr1 = hctx.gr1h_basis().len();
            let want_gr1 = (m as usize * m as usize - 1) * n as usize;
            if gr1 != want_gr1 {
                problems.push(format!("gr¹ dimension {gr1} ≠ {want_gr1} (m={m}, n={n})"));
            }
            let y = hctx.gr2h_dim();
            if y as u128 != HAlgebraContext::y_dim_formula(m, n) {
                problems.push(format!("|Y| = {y} off the counting formula (m={m}, n={n})"));
            }
            let t2 = hctx.free().dim_tk(2);
            if hctx.relation_rank() != t2 - y {
                problems.push(format!(
                    "relation rank {} ≠ |T_2| − |Y| = {} (m={m}, n={n})",
                    hctx.relation_rank(),
                    t2 - y
                ));
            }
            let polys: Vec<TruncPoly> = hctx
                .basis_y()
                .iter()
                .map(|e| hctx.y_polynomial(e).truncated(3))
                .collect();
            // rows per commuting copy: degree-2 monomials in (m−1)n params
            let params = (m as usize - 1) * n as usize;
            let rows = params * (params + 1) / 2;
            let copies = ((y / rows + 3) as u32).max(30);
            let ok = (0..3u64).any(|t| {
                stacked_commuting_rank(
                    hctx.free(),
                    &polys,
                    2,
                    copies,
                    seed.wrapping_add(1000 + t * 113 + (m as u64) * 7 + n as u64),
                ) == y
            });
            if !ok {
                problems.push(format!(
                    "Y evaluations rank-deficient under commuting jets (m={m}, n={n})"
                ));
            }
        }
    }
    let flag = "note: the published gr² count uses alternating multiplicity ½(m²−1)²(m²−4); the verified count is ½(m²−1)(m²−4) (m=3, n=2: 128 observed vs 268 from the printed exponent)";
    let mut check = finish(
        "abelian-dimensions",
        problems,
        "gr¹ and |Y| match their formulas with complementary relation rank; Y has full rank under commuting jets, (m,n) ∈ {2,3}²",
    );
    check.details = format!("{} — {flag}", check.details);
    check
}

/// 11. θ_H(S) display, the f_H generator table, and the literal word-level
/// identity f_M = −f_H + δ_x.
pub fn check_abelian_comparison(seed: u64) -> Check {
    let mut problems = Vec::new();
    for m in 2u8..=3 {
        let hctx = HAlgebraContext::new(m, 2);
        // θ_H(S)(s_11(x̄_1)) = −v̄_11(1,1) − Σ_{k≥2} ū_{1k,k1}(1,1)
        let th = theta_h(&hctx, &nielsen(NielsenName::S, 2).unwrap());
        let col = hctx.free().var_position(VarId::algebra(1, 1, 1));
        let mut expected = vec![Rat::zero(); hctx.gr2h_dim()];
        let v11 = YElement {
            kind: YKind::V,
            i: 1,
            j: 1,
            h: 1,
            k: 1,
            p: 1,
            q: 1,
        };
        expected[hctx.y_index(&v11).unwrap()] = rat(-1);
        for k in 2..=m {
            let u = YElement {
                kind: YKind::U,
                i: 1,
                j: k,
                h: k,
                k: 1,
                p: 1,
                q: 1,
            };
            expected[hctx.y_index(&u).unwrap()] = rat(-1);
        }
        if th.matrix.column(col) != expected {
            problems.push(format!("θ_H(S) off its display (m={m})"));
        }
        // f_H generator table
        let fh = |name| project_fh(&hctx, &theta_h(&hctx, &nielsen(name, 2).unwrap()));
        if fh(NielsenName::S) != vec![rat(-1), rat(0)]
            || fh(NielsenName::U) != vec![rat(0), rat(-1)]
            || !fh(NielsenName::P).iter().all(|c| c.is_zero())
            || !fh(NielsenName::Q).iter().all(|c| c.is_zero())
        {
            problems.push(format!("f_H generator table mismatch (m={m})"));
        }
    }
    // literal clause: f_M = −f_H + δ_x on generators and 50 random words
    let n = 2u16;
    let hctx = HAlgebraContext::new(2, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(71));
    let mut wordlist: Vec<Vec<(AutGen, i8)>> =
        NIELSEN_POOL.iter().map(|&g| vec![(g, 1)]).collect();
    for _ in 0..50 {
        wordlist.push(random_syms(&mut rng, &NIELSEN_POOL, 4));
    }
    for syms in &wordlist {
        let a = build_aut_word(syms, n).unwrap();
        let fh = project_fh(&hctx, &theta_h(&hctx, &a));
        let rhs = fh.neg().add(&delta_x(&a));
        let lhs = fm_value(syms, n);
        if lhs != rhs {
            problems.push(format!(
                "f_M ≠ −f_H + δ_x on {}: f_M = {}, −f_H + δ_x = {}; θ_H factors through the abelianized action, so the right side vanishes on IA words while f_M does not",
                syms_label(syms),
                vec_label(&lhs),
                vec_label(&rhs)
            ));
            break;
        }
    }
    finish(
        "abelian-comparison-identities",
        problems,
        "θ_H(S) display and f_H table hold for m ∈ {2,3}; f_M = −f_H + δ_x on generators and 50 random words",
    )
}

/// 12. Filtration membership: level 1 on Magnus generators, level 2 on their
/// commutators, monotonicity in m, and the kernel characterization of η̃₁.
pub fn check_filtration(seed: u64) -> Check {
    let mut problems = Vec::new();
    let n = 3u16;
    let ctx = AlgebraContext::new(2, n, 3);
    let pool = magnus_pool(n);
    for g in &pool {
        let a = g.build(n).unwrap();
        if !is_in_d(&ctx, &a, 1) {
            problems.push(format!("{g} outside level 1"));
        }
    }
    // 10 commutators of Magnus generators reach level 2
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(83));
    let mut comms = Vec::new();
    while comms.len() < 10 {
        let a = pool[rng.gen_range(0..pool.len())].build(n).unwrap();
        let b = pool[rng.gen_range(0..pool.len())].build(n).unwrap();
        if a == b {
            continue;
        }
        comms.push(AutPair::compose(
            &AutPair::compose(&AutPair::compose(&a, &b), &a.inverse()),
            &b.inverse(),
        ));
    }
    for (t, c) in comms.iter().enumerate() {
        if !is_in_d(&ctx, c, 2) {
            problems.push(format!("Magnus commutator {t} outside level 2"));
        }
    }
    // monotonicity m=2 → 3 on random automorphisms
    let c2 = AlgebraContext::new(2, 2, 2);
    let c3 = AlgebraContext::new(3, 2, 2);
    let mixed: Vec<AutGen> = NIELSEN_POOL
        .iter()
        .copied()
        .chain([AutGen::Kij(1, 2), AutGen::Kij(2, 1)])
        .collect();
    for t in 0..20 {
        let a = build_aut_word(&random_syms(&mut rng, &mixed, 4), 2).unwrap();
        if is_in_d(&c3, &a, 1) && !is_in_d(&c2, &a, 1) {
            problems.push(format!("level-1 membership not monotone in m on word {t}"));
        }
    }
    // η̃₁ kernel ⇔ level 2, on Magnus words and the commutators above
    let mut level1_words: Vec<AutPair> = comms;
    for _ in 0..20 {
        level1_words.push(build_aut_word(&random_syms(&mut rng, &pool, 4), n).unwrap());
    }
    for (t, a) in level1_words.iter().enumerate() {
        if eta_k(&ctx, a, 1).is_zero() != is_in_d(&ctx, a, 2) {
            problems.push(format!("η̃₁ kernel differs from level 2 on word {t}"));
        }
    }
    finish(
        "filtration-membership",
        problems,
        "Magnus generators sit at level 1, their commutators at level 2; membership is monotone m=2→3; Ker η̃₁ = level 2 on Magnus words",
    )
}

/// 13. τ₁ of the Magnus generators matches the wedge-basis values.
pub fn check_tau1_values(_seed: u64) -> Check {
    let mut problems = Vec::new();
    let n = 3u16;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let t = tau1(&magnus_kij(i, j, n).unwrap());
            let mut expected = QMatrix::zeros(3, 3);
            let (p, q, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            expected.set(wedge_index(n, p, q), (i - 1) as usize, rat(sign));
            if t.matrix != expected {
                problems.push(format!("τ₁(K_{i}{j}) off the wedge value"));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for l in (j + 1)..=n {
                if i == j || i == l {
                    continue;
                }
                let t = tau1(&magnus_kijl(i, j, l, n).unwrap());
                let mut expected = QMatrix::zeros(3, 3);
                expected.set(wedge_index(n, j, l), (i - 1) as usize, rat(1));
                if t.matrix != expected {
                    problems.push(format!("τ₁(K_{i}{j}{l}) off the wedge value"));
                }
            }
        }
    }
    finish(
        "tau1-values",
        problems,
        "τ₁(K_ij) = ±x_i∧x_j on column i and τ₁(K_ijl) = x_j∧x_l on column i, all valid indices, n = 3",
    )
}

/// The checks by name, in criterion order.
pub fn suites() -> Vec<(&'static str, fn(u64) -> Check)> {
    vec![
        ("dimension-formula", check_dimension_formula),
        ("word-matrix-laws", check_word_matrix_laws),
        ("jet-oracle-equivalence", check_jet_oracle_equivalence),
        ("s-sigma-identities", check_s_sigma_identities),
        ("commutator-depth", check_commutator_depth),
        ("eta1-closed-forms", check_eta1_closed_forms),
        ("theta-generator-values", check_theta_generator_values),
        ("cocycle-law", check_cocycle_law),
        ("free-comparison-identities", check_free_comparison),
        ("abelian-dimensions", check_abelian_dimensions),
        ("abelian-comparison-identities", check_abelian_comparison),
        ("filtration-membership", check_filtration),
        ("tau1-values", check_tau1_values),
    ]
}

/// All checks in criterion order.
pub fn run_all(seed: u64) -> Vec<Check> {
    suites().into_iter().map(|(_, f)| f(seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_serializes_to_the_documented_schema() {
        let c = Check {
            check: "demo".into(),
            status: Status::Pass,
            details: "ok".into(),
        };
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"check":"demo","status":"pass","details":"ok"}"#);
    }

    #[test]
    fn fast_checks_pass() {
        assert!(check_commutator_depth(0).passed());
        assert!(check_tau1_values(0).passed());
    }

    #[test]
    fn failing_details_are_capped() {
        let c = finish(
            "demo",
            (0..5).map(|i| format!("p{i}")).collect(),
            "unused",
        );
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.details, "p0; p1; p2; and 2 more");
    }
}
