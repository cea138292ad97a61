//! Reduced words in the free group F_n, commutator calculus, abelianization,
//! endomorphisms and validated automorphism pairs.
//!
//! Composition follows the right-action convention: x^{στ} = (x^σ)^τ, so
//! `compose(s, t).apply(x) = t.apply(s.apply(x))`. Callers that need the left
//! action feed in the inverse, which every `AutPair` carries explicitly.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordsError {
    #[error("generator index {0} out of range 1..={1}")]
    IndexOutOfRange(u16, u16),
    #[error("invalid generator indices for {0}")]
    InvalidIndices(&'static str),
    #[error("endomorphism pair is not mutually inverse on x{0}")]
    NotInverse(u16),
}

/// A single letter: generator index (1-based) and sign.
pub type Letter = (u16, i8);

/// Freely reduced word in F_n.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(l: u16) -> Self {
        assert!(l >= 1);
        Word {
            letters: vec![(l, 1)],
        }
    }

    pub fn gen_inv(l: u16) -> Self {
        assert!(l >= 1);
        Word {
            letters: vec![(l, -1)],
        }
    }

    /// Free reduction of a raw letter sequence.
    pub fn reduce(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for (l, s) in raw {
            assert!(l >= 1 && (s == 1 || s == -1), "malformed letter");
            if let Some(&(tl, ts)) = letters.last() {
                if tl == l && ts == -s {
                    letters.pop();
                    continue;
                }
            }
            letters.push((l, s));
        }
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> u16 {
        self.letters.iter().map(|&(l, _)| l).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::reduce(
            self.letters
                .iter()
                .chain(other.letters.iter())
                .copied(),
        )
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(l, s)| (l, -s))
                .collect(),
        }
    }

    /// [a,b] = a b a⁻¹ b⁻¹.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inv()).mul(&b.inv())
    }

    /// Left-normed commutator [[…[w1,w2],…],wk]; weight-1 input is returned
    /// as is.
    pub fn left_normed(ws: &[Word]) -> Word {
        assert!(!ws.is_empty(), "left_normed of empty list");
        let mut acc = ws[0].clone();
        for w in &ws[1..] {
            acc = Word::commutator(&acc, w);
        }
        acc
    }

    /// Signed letter count per generator, as coordinates in H = F_n^{ab}.
    pub fn abelianize(&self, n: u16) -> AbelianVector {
        let mut coeffs = vec![0i64; n as usize];
        for &(l, s) in &self.letters {
            assert!(l <= n, "generator x{l} outside F_{n}");
            coeffs[(l - 1) as usize] += s as i64;
        }
        AbelianVector { coeffs }
    }

    pub fn pow(&self, e: i32) -> Word {
        let base = if e >= 0 { self.clone() } else { self.inv() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(l, s) in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if s == 1 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{l}^-1")?;
            }
        }
        Ok(())
    }
}

/// Element of H = F_n^{ab} ≅ ℤⁿ in the basis x̄_1,…,x̄_n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianVector {
    coeffs: Vec<i64>,
}

impl AbelianVector {
    pub fn zero(n: u16) -> Self {
        AbelianVector {
            coeffs: vec![0; n as usize],
        }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        AbelianVector { coeffs }
    }

    /// x = x_1 + x_2 + ⋯ + x_n.
    pub fn all_ones(n: u16) -> Self {
        AbelianVector {
            coeffs: vec![1; n as usize],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &AbelianVector) -> AbelianVector {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        AbelianVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &AbelianVector) -> AbelianVector {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        AbelianVector {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> AbelianVector {
        AbelianVector {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Endomorphism of F_n, stored by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Endo {
    n: u16,
    images: Vec<Word>,
}

impl Endo {
    pub fn new(n: u16, images: Vec<Word>) -> Result<Self, WordsError> {
        assert_eq!(images.len(), n as usize);
        for w in &images {
            let mx = w.max_index();
            if mx > n {
                return Err(WordsError::IndexOutOfRange(mx, n));
            }
        }
        Ok(Endo { n, images })
    }

    pub fn identity(n: u16) -> Self {
        Endo {
            n,
            images: (1..=n).map(Word::gen).collect(),
        }
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn image(&self, l: u16) -> &Word {
        &self.images[(l - 1) as usize]
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Word::identity();
        for &(l, s) in w.letters() {
            assert!(l <= self.n, "generator x{l} outside F_{}", self.n);
            let img = &self.images[(l - 1) as usize];
            out = out.mul(&if s == 1 { img.clone() } else { img.inv() });
        }
        out
    }

    /// Right-action composition: `compose(s, t).apply(x) = t.apply(s.apply(x))`.
    pub fn compose(s: &Endo, t: &Endo) -> Endo {
        assert_eq!(s.n, t.n, "rank mismatch");
        Endo {
            n: s.n,
            images: s.images.iter().map(|w| t.apply(w)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| *w == Word::gen(k as u16 + 1))
    }

    /// Matrix of the induced map on H, by columns (image of x̄_l).
    pub fn abelianized_columns(&self) -> Vec<AbelianVector> {
        self.images.iter().map(|w| w.abelianize(self.n)).collect()
    }
}

/// Automorphism stored with an explicit inverse, checked at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutPair {
    pub fwd: Endo,
    pub bwd: Endo,
}

impl AutPair {
    pub fn new(fwd: Endo, bwd: Endo) -> Result<Self, WordsError> {
        assert_eq!(fwd.n, bwd.n, "rank mismatch");
        for l in 1..=fwd.n {
            let x = Word::gen(l);
            if bwd.apply(fwd.image(l)) != x || fwd.apply(bwd.image(l)) != x {
                return Err(WordsError::NotInverse(l));
            }
        }
        Ok(AutPair { fwd, bwd })
    }

    pub fn identity(n: u16) -> Self {
        AutPair {
            fwd: Endo::identity(n),
            bwd: Endo::identity(n),
        }
    }

    pub fn n(&self) -> u16 {
        self.fwd.n
    }

    pub fn inverse(&self) -> AutPair {
        AutPair {
            fwd: self.bwd.clone(),
            bwd: self.fwd.clone(),
        }
    }

    /// Right-action composition, matching `Endo::compose` on both directions.
    pub fn compose(s: &AutPair, t: &AutPair) -> AutPair {
        AutPair {
            fwd: Endo::compose(&s.fwd, &t.fwd),
            bwd: Endo::compose(&t.bwd, &s.bwd),
        }
    }

    /// True when the induced map on H is the identity (IA membership).
    pub fn is_ia(&self) -> bool {
        (1..=self.n()).all(|l| {
            self.fwd.image(l).abelianize(self.n()) == Word::gen(l).abelianize(self.n())
        })
    }
}

/// Nielsen generator names.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NielsenName {
    P,
    Q,
    S,
    U,
}

/// Nielsen generators of Aut F_n:
/// P swaps x_1 and x_2; Q cycles x_l ↦ x_{l+1} (x_n ↦ x_1);
/// S inverts x_1; U maps x_1 ↦ x_1 x_2.
pub fn nielsen(name: NielsenName, n: u16) -> Result<AutPair, WordsError> {
    if n < 2 {
        return Err(WordsError::InvalidIndices("Nielsen generator needs n >= 2"));
    }
    let id = Endo::identity(n);
    let (fwd, bwd) = match name {
        NielsenName::P => {
            let mut imgs = id.images.clone();
            imgs.swap(0, 1);
            let p = Endo::new(n, imgs)?;
            (p.clone(), p)
        }
        NielsenName::Q => {
            let fwd_imgs: Vec<Word> = (1..=n)
                .map(|l| Word::gen(if l == n { 1 } else { l + 1 }))
                .collect();
            let bwd_imgs: Vec<Word> = (1..=n)
                .map(|l| Word::gen(if l == 1 { n } else { l - 1 }))
                .collect();
            (Endo::new(n, fwd_imgs)?, Endo::new(n, bwd_imgs)?)
        }
        NielsenName::S => {
            let mut imgs = id.images.clone();
            imgs[0] = Word::gen_inv(1);
            let s = Endo::new(n, imgs)?;
            (s.clone(), s)
        }
        NielsenName::U => {
            let mut fwd_imgs = id.images.clone();
            fwd_imgs[0] = Word::gen(1).mul(&Word::gen(2));
            let mut bwd_imgs = id.images.clone();
            bwd_imgs[0] = Word::gen(1).mul(&Word::gen_inv(2));
            (Endo::new(n, fwd_imgs)?, Endo::new(n, bwd_imgs)?)
        }
    };
    AutPair::new(fwd, bwd)
}

/// Magnus generator K_ij: x_i ↦ x_j⁻¹ x_i x_j, other generators fixed.
pub fn magnus_kij(i: u16, j: u16, n: u16) -> Result<AutPair, WordsError> {
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(WordsError::InvalidIndices("K_ij"));
    }
    let conj = |by: &Word| {
        let mut imgs: Vec<Word> = (1..=n).map(Word::gen).collect();
        imgs[(i - 1) as usize] = by.inv().mul(&Word::gen(i)).mul(by);
        imgs
    };
    let xj = Word::gen(j);
    AutPair::new(Endo::new(n, conj(&xj))?, Endo::new(n, conj(&xj.inv()))?)
}

/// Magnus generator K_ijl: x_i ↦ x_i [x_j, x_l], indices distinct, j < l.
pub fn magnus_kijl(i: u16, j: u16, l: u16, n: u16) -> Result<AutPair, WordsError> {
    let distinct = i != j && i != l && j != l;
    let in_range = (1..=n).contains(&i) && (1..=n).contains(&j) && (1..=n).contains(&l);
    if !distinct || !in_range || j >= l {
        return Err(WordsError::InvalidIndices("K_ijl"));
    }
    let with_tail = |tail: Word| -> Result<Endo, WordsError> {
        let mut imgs: Vec<Word> = (1..=n).map(Word::gen).collect();
        imgs[(i - 1) as usize] = Word::gen(i).mul(&tail);
        Endo::new(n, imgs)
    };
    let c = Word::commutator(&Word::gen(j), &Word::gen(l));
    AutPair::new(with_tail(c.clone())?, with_tail(c.inv())?)
}

/// A generator symbol in an automorphism word, with exponent ±1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AutGen {
    Nielsen(NielsenName),
    Kij(u16, u16),
    Kijl(u16, u16, u16),
}

impl AutGen {
    pub fn build(self, n: u16) -> Result<AutPair, WordsError> {
        match self {
            AutGen::Nielsen(name) => nielsen(name, n),
            AutGen::Kij(i, j) => magnus_kij(i, j, n),
            AutGen::Kijl(i, j, l) => magnus_kijl(i, j, l, n),
        }
    }
}

impl fmt::Display for AutGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutGen::Nielsen(NielsenName::P) => write!(f, "P"),
            AutGen::Nielsen(NielsenName::Q) => write!(f, "Q"),
            AutGen::Nielsen(NielsenName::S) => write!(f, "S"),
            AutGen::Nielsen(NielsenName::U) => write!(f, "U"),
            AutGen::Kij(i, j) => write!(f, "K{i}{j}"),
            AutGen::Kijl(i, j, l) => write!(f, "K{i}{j}{l}"),
        }
    }
}

/// Compose a word of generator symbols (left to right, right action) into an
/// automorphism pair.
pub fn build_aut_word(syms: &[(AutGen, i8)], n: u16) -> Result<AutPair, WordsError> {
    let mut out = AutPair::identity(n);
    for &(g, e) in syms {
        let a = g.build(n)?;
        let a = if e >= 0 { a } else { a.inverse() };
        out = AutPair::compose(&out, &a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &[(u16, i8)]) -> Word {
        Word::reduce(s.iter().copied())
    }

    #[test]
    fn reduce_examples() {
        assert!(w(&[(1, 1), (1, -1)]).is_identity());
        assert_eq!(w(&[(1, 1), (2, 1), (2, -1), (1, 1)]), w(&[(1, 1), (1, 1)]));
        let reduced = w(&[(1, 1), (2, -1), (1, 1)]);
        assert_eq!(Word::reduce(reduced.letters().iter().copied()), reduced);
    }

    #[test]
    fn commutator_examples() {
        let c = Word::commutator(&Word::gen(1), &Word::gen(2));
        assert_eq!(c, w(&[(1, 1), (2, 1), (1, -1), (2, -1)]));
        let any = w(&[(1, 1), (2, 1)]);
        assert!(Word::commutator(&any, &any).is_identity());
        let ln = Word::left_normed(&[Word::gen(1), Word::gen(2), Word::gen(3)]);
        assert_eq!(ln, Word::commutator(&c, &Word::gen(3)));
    }

    #[test]
    fn abelianize_examples() {
        let n = 3;
        assert_eq!(
            w(&[(1, 1), (2, 1), (1, -1)]).abelianize(n).coeffs(),
            &[0, 1, 0]
        );
        let a = w(&[(1, 1), (3, -1)]);
        let b = w(&[(2, 1), (1, 1)]);
        assert!(Word::commutator(&a, &b).abelianize(n).is_zero());
        // x_1 x_2 under U, then abelianize
        let u = nielsen(NielsenName::U, n).unwrap();
        let img = u.fwd.apply(&Word::gen(1).mul(&Word::gen(2)));
        assert_eq!(img.abelianize(n).coeffs(), &[1, 2, 0]);
    }

    #[test]
    fn generator_tables() {
        let n = 3;
        let u = nielsen(NielsenName::U, n).unwrap();
        assert_eq!(u.fwd.apply(&Word::gen(1)), Word::gen(1).mul(&Word::gen(2)));
        let s = nielsen(NielsenName::S, n).unwrap();
        assert_eq!(s.fwd.apply(&Word::gen(1)), Word::gen_inv(1));
        let k12 = magnus_kij(1, 2, n).unwrap();
        assert_eq!(
            k12.fwd.apply(&Word::gen(1)),
            w(&[(2, -1), (1, 1), (2, 1)])
        );
        let k123 = magnus_kijl(1, 2, 3, n).unwrap();
        assert_eq!(
            k123.fwd.apply(&Word::gen(1)),
            Word::gen(1).mul(&Word::commutator(&Word::gen(2), &Word::gen(3)))
        );
        let q = nielsen(NielsenName::Q, n).unwrap();
        assert_eq!(q.fwd.apply(&Word::gen(3)), Word::gen(1));
    }

    #[test]
    fn invalid_indices_rejected() {
        assert!(magnus_kij(1, 1, 3).is_err());
        assert!(magnus_kij(1, 4, 3).is_err());
        assert!(magnus_kijl(1, 3, 2, 3).is_err());
        assert!(magnus_kijl(2, 2, 3, 3).is_err());
        assert!(nielsen(NielsenName::P, 1).is_err());
    }

    #[test]
    fn magnus_generators_are_ia() {
        let n = 3;
        assert!(magnus_kij(2, 3, n).unwrap().is_ia());
        assert!(magnus_kijl(2, 1, 3, n).unwrap().is_ia());
        assert!(!nielsen(NielsenName::S, n).unwrap().is_ia());
    }

    #[test]
    fn composition_convention() {
        // apply(compose(s,t), x) = apply(t, apply(s, x))
        let n = 2;
        let s = nielsen(NielsenName::U, n).unwrap();
        let t = nielsen(NielsenName::P, n).unwrap();
        let st = AutPair::compose(&s, &t);
        let x = Word::gen(1);
        assert_eq!(st.fwd.apply(&x), t.fwd.apply(&s.fwd.apply(&x)));
        // the stored inverse really inverts the composite
        assert_eq!(st.bwd.apply(&st.fwd.apply(&x)), x);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((1u16..=3, prop::sample::select(vec![1i8, -1])), 0..8)
            .prop_map(|raw| Word::reduce(raw))
    }

    proptest! {
        #[test]
        fn mul_inv_is_identity(a in arb_word()) {
            prop_assert!(a.mul(&a.inv()).is_identity());
        }

        #[test]
        fn abelianize_is_homomorphism(a in arb_word(), b in arb_word()) {
            prop_assert_eq!(
                a.mul(&b).abelianize(3),
                a.abelianize(3).add(&b.abelianize(3))
            );
        }

        #[test]
        fn aut_words_roundtrip(idx in prop::collection::vec((0usize..4, prop::sample::select(vec![1i8, -1])), 0..5), x in arb_word()) {
            let gens = [
                AutGen::Nielsen(NielsenName::P),
                AutGen::Nielsen(NielsenName::S),
                AutGen::Nielsen(NielsenName::U),
                AutGen::Kij(1, 2),
            ];
            let syms: Vec<_> = idx.into_iter().map(|(k, e)| (gens[k], e)).collect();
            let a = build_aut_word(&syms, 3).unwrap();
            prop_assert_eq!(a.bwd.apply(&a.fwd.apply(&x)), x.clone());
        }
    }
}
