//! Sparse commutative polynomials over ℚ truncated at a total-degree cap.
//!
//! The same ring is used in two namespaces: `Algebra` variables are the
//! matrix-entry functions s_ij(x_l) of the representation algebra in normal
//! form, and `Jet` variables are formal parameters of truncated power-series
//! representations used by the evaluation oracle.
//!
//! Terms are stored in a map keyed by graded-lexicographic monomial order
//! (degree first, then generator index, row, column), so iteration is in
//! ascending degree and truncated multiplication can stop early.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::qlinalg::Rat;

/// Variable namespace.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Namespace {
    Algebra,
    Jet,
}

/// A single polynomial variable, ordered by (namespace, generator, row, col).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId {
    pub ns: Namespace,
    /// Generator index, 1-based.
    pub l: u16,
    /// Row index, 1-based (or parameter slot for jet variables).
    pub i: u8,
    /// Column index, 1-based.
    pub j: u8,
}

impl VarId {
    pub fn algebra(i: u8, j: u8, l: u16) -> Self {
        VarId {
            ns: Namespace::Algebra,
            l,
            i,
            j,
        }
    }

    pub fn jet(i: u8, j: u8, l: u16) -> Self {
        VarId {
            ns: Namespace::Jet,
            l,
            i,
            j,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ns {
            Namespace::Algebra => write!(f, "s({},{};x{})", self.i, self.j, self.l),
            Namespace::Jet => write!(f, "z({},{};x{})", self.i, self.j, self.l),
        }
    }
}

/// Product of variables with positive exponents; total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    /// Sorted by `VarId`, no zero exponents.
    vars: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            vars: Vec::new(),
            degree: 0,
        }
    }

    pub fn var(v: VarId) -> Self {
        Monomial {
            vars: vec![(v, 1)],
            degree: 1,
        }
    }

    /// From (variable, exponent) pairs; pairs may repeat and appear unsorted.
    pub fn from_powers(powers: &[(VarId, u32)]) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for &(v, e) in powers {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        let vars: Vec<_> = map.into_iter().collect();
        let degree = vars.iter().map(|&(_, e)| e).sum();
        Monomial { vars, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn powers(&self) -> &[(VarId, u32)] {
        &self.vars
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        // Merge two sorted exponent lists.
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => {
                    if va < vb {
                        vars.push((va, ea));
                        a.next();
                    } else if vb < va {
                        vars.push((vb, eb));
                        b.next();
                    } else {
                        vars.push((va, ea + eb));
                        a.next();
                        b.next();
                    }
                }
                (Some(&&p), None) => {
                    vars.push(p);
                    a.next();
                }
                (None, Some(&&p)) => {
                    vars.push(p);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial {
            vars,
            degree: self.degree + other.degree,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: lower total degree first. At equal degree,
    /// compare exponent lists position by position: the monomial holding the
    /// earlier variable sorts first, and on a shared variable the higher
    /// exponent sorts first (so s_11² < s_11 s_12 < s_12²). With this order
    /// the degree-1 monomials match the variable order exactly.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut a, mut b) = (self.vars.iter(), other.vars.iter());
        loop {
            match (a.next(), b.next()) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va != vb {
                        return va.cmp(&vb);
                    }
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.vars {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial truncated at total degree `cap`; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncPoly {
    cap: u32,
    terms: BTreeMap<Monomial, Rat>,
}

impl TruncPoly {
    pub fn zero(cap: u32) -> Self {
        TruncPoly {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(cap: u32, c: Rat) -> Self {
        let mut p = TruncPoly::zero(cap);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(cap: u32) -> Self {
        TruncPoly::constant(cap, Rat::one())
    }

    pub fn variable(cap: u32, v: VarId) -> Self {
        assert!(cap >= 1, "cap must admit degree-1 terms");
        let mut p = TruncPoly::zero(cap);
        p.terms.insert(Monomial::var(v), Rat::one());
        p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one())
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        if m.degree() > self.cap || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_term(mut self, m: Monomial, c: Rat) -> Self {
        self.insert_term(m, c);
        self
    }

    pub fn add(&self, other: &TruncPoly) -> TruncPoly {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TruncPoly) -> TruncPoly {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> TruncPoly {
        TruncPoly {
            cap: self.cap,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> TruncPoly {
        if c.is_zero() {
            return TruncPoly::zero(self.cap);
        }
        TruncPoly {
            cap: self.cap,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &TruncPoly) -> TruncPoly {
        assert_eq!(self.cap, other.cap, "cap mismatch");
        let mut out = TruncPoly::zero(self.cap);
        // Both term maps iterate in ascending degree, so the inner loop can
        // stop at the first overflowing partner.
        for (ma, ca) in &self.terms {
            if ma.degree() > self.cap {
                break;
            }
            let budget = self.cap - ma.degree();
            for (mb, cb) in &other.terms {
                if mb.degree() > budget {
                    break;
                }
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TruncPoly {
        let mut out = TruncPoly::one(self.cap);
        for _ in 0..e {
            if out.is_zero() {
                break;
            }
            out = out.mul(self);
        }
        out
    }

    /// Minimal total degree of a nonzero term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// The homogeneous degree-`k` part.
    pub fn graded_part(&self, k: u32) -> TruncPoly {
        TruncPoly {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-truncate at a lower cap (used when a computation only needs
    /// low-degree data).
    pub fn truncated(&self, cap: u32) -> TruncPoly {
        TruncPoly {
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute every variable by its image polynomial. Images must have
    /// zero constant term so that truncation commutes with substitution.
    pub fn substitute(&self, image: &mut impl FnMut(VarId) -> TruncPoly) -> TruncPoly {
        let mut cache: BTreeMap<VarId, TruncPoly> = BTreeMap::new();
        let mut out = TruncPoly::zero(self.cap);
        for (m, c) in &self.terms {
            let mut term = TruncPoly::constant(self.cap, c.clone());
            for &(v, e) in m.powers() {
                let img = cache.entry(v).or_insert_with(|| {
                    let p = image(v);
                    assert_eq!(p.cap(), self.cap, "cap mismatch in substitution image");
                    assert!(
                        p.constant_term().is_zero(),
                        "substitution image of {v} has a nonzero constant term"
                    );
                    p
                });
                for _ in 0..e {
                    if term.is_zero() {
                        break;
                    }
                    term = term.mul(img);
                }
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Multiplicative inverse of a unit (nonzero constant term), exact in the
    /// truncated ring: f = c(1+g) with g ∈ 𝔍, so f⁻¹ = c⁻¹ Σ (−g)^t.
    pub fn inverse_of_unit(&self) -> TruncPoly {
        let c = self.constant_term();
        assert!(!c.is_zero(), "not a unit: zero constant term");
        let cinv = c.recip();
        let g = self
            .scale(&cinv)
            .sub(&TruncPoly::one(self.cap));
        let mut out = TruncPoly::one(self.cap);
        let mut power = TruncPoly::one(self.cap);
        let neg_g = g.neg();
        for _ in 0..self.cap {
            power = power.mul(&neg_g);
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        out.scale(&cinv)
    }
}

impl fmt::Display for TruncPoly {
    /// Canonical text form: `-1 s(1,1;x1) + 1 s(1,2;x1)*s(2,1;x1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            if !m.is_constant() {
                write!(f, " {m}")?;
            }
        }
        Ok(())
    }
}

use num::Signed;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::rat;
    use proptest::prelude::*;

    fn v(i: u8, j: u8, l: u16) -> VarId {
        VarId::algebra(i, j, l)
    }

    fn x(cap: u32, i: u8, j: u8, l: u16) -> TruncPoly {
        TruncPoly::variable(cap, v(i, j, l))
    }

    #[test]
    fn mul_truncates() {
        let u = x(2, 1, 1, 1);
        let one = TruncPoly::one(2);
        let p = one.add(&u).mul(&one.sub(&u));
        // (1+u)(1−u) = 1 − u² at cap 2
        assert_eq!(p, one.sub(&u.mul(&u)));
        // u^cap · u = 0
        assert!(u.pow(2).mul(&u).is_zero());
    }

    #[test]
    fn add_inverse_is_zero() {
        let f = x(3, 1, 2, 1).add(&x(3, 2, 1, 2).scale(&rat(5)));
        assert!(f.add(&f.scale(&rat(-1))).is_zero());
    }

    #[test]
    fn substitute_square() {
        let u = v(1, 1, 1);
        let f = x(2, 1, 1, 1).pow(2);
        let img = x(2, 1, 2, 1).add(&x(2, 2, 1, 1));
        let g = f.substitute(&mut |var| {
            assert_eq!(var, u);
            img.clone()
        });
        // (v+w)² = v² + 2vw + w²
        assert_eq!(g, img.mul(&img));
        assert_eq!(g.num_terms(), 3);
    }

    #[test]
    fn substitute_zero_image() {
        let f = x(2, 1, 1, 1);
        assert!(f.substitute(&mut |_| TruncPoly::zero(2)).is_zero());
    }

    #[test]
    fn substitute_tail_truncated() {
        // f = u·w, u ↦ u + (degree-cap tail): the tail dies in the product.
        let cap = 2;
        let f = x(cap, 1, 1, 1).mul(&x(cap, 1, 2, 1));
        let g = f.substitute(&mut |var| {
            if var == v(1, 1, 1) {
                x(cap, 1, 1, 1).add(&x(cap, 2, 1, 1).pow(2))
            } else {
                TruncPoly::variable(cap, var)
            }
        });
        assert_eq!(g, f);
    }

    #[test]
    #[should_panic(expected = "nonzero constant term")]
    fn substitute_rejects_units() {
        let f = x(2, 1, 1, 1);
        let _ = f.substitute(&mut |_| TruncPoly::one(2));
    }

    #[test]
    fn inverse_of_unit_cases() {
        let one = TruncPoly::one(2);
        let u = x(2, 1, 1, 1);
        // (1+u)⁻¹ = 1 − u + u²
        let inv = one.add(&u).inverse_of_unit();
        assert_eq!(inv, one.sub(&u).add(&u.pow(2)));
        assert_eq!(one.add(&u).mul(&inv), one);
        // constant 2 → 1/2
        let two = TruncPoly::constant(3, rat(2));
        assert_eq!(two.inverse_of_unit(), TruncPoly::constant(3, ratio(1, 2)));
        // (1+u+v) at cap 1 → 1 − u − v
        let f = TruncPoly::one(1)
            .add(&x(1, 1, 1, 1))
            .add(&x(1, 1, 2, 1));
        let g = TruncPoly::one(1)
            .sub(&x(1, 1, 1, 1))
            .sub(&x(1, 1, 2, 1));
        assert_eq!(f.inverse_of_unit(), g);
    }

    use crate::qlinalg::ratio;

    #[test]
    fn min_degree_and_graded_part() {
        let u = x(3, 1, 1, 1);
        let f = u.add(&u.pow(2));
        assert_eq!(f.min_degree(), Some(1));
        assert_eq!(f.graded_part(2), u.pow(2));
        assert_eq!(TruncPoly::zero(3).min_degree(), None);
        assert!(TruncPoly::zero(3).graded_part(2).is_zero());
    }

    #[test]
    fn display_canonical_form() {
        let p = x(2, 1, 1, 1)
            .scale(&rat(-1))
            .add(&x(2, 1, 2, 1).mul(&x(2, 2, 1, 1)));
        assert_eq!(p.to_string(), "-1 s(1,1;x1) + 1 s(1,2;x1)*s(2,1;x1)");
    }

    fn arb_poly(cap: u32) -> impl Strategy<Value = TruncPoly> {
        let var = (1u8..=2, 1u8..=2, 1u16..=2).prop_map(|(i, j, l)| v(i, j, l));
        let term = (prop::collection::vec((var, 1u32..=2), 0..3), -3i64..=3);
        prop::collection::vec(term, 0..5).prop_map(move |terms| {
            let mut p = TruncPoly::zero(cap);
            for (powers, c) in terms {
                p = p.add_term(Monomial::from_powers(&powers), rat(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(4), g in arb_poly(4), h in arb_poly(4)) {
            prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
        }

        #[test]
        fn mul_filtration_compatible(f in arb_poly(4), g in arb_poly(4)) {
            let p = f.mul(&g);
            if let (Some(df), Some(dg), Some(dp)) = (f.min_degree(), g.min_degree(), p.min_degree()) {
                prop_assert!(dp >= df + dg);
            }
        }

        #[test]
        fn substitute_is_homomorphism(f in arb_poly(3), g in arb_poly(3)) {
            let mut img = |var: VarId| {
                // a fixed injective-ish variable relabeling into 𝔍
                TruncPoly::variable(3, VarId::algebra(var.i, var.j, var.l + 2))
                    .add(&TruncPoly::variable(3, VarId::algebra(var.j, var.i, var.l + 4)))
            };
            let lhs = f.mul(&g).substitute(&mut img);
            let rhs = f.substitute(&mut img).mul(&g.substitute(&mut img));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
