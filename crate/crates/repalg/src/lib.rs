//! Truncated SL(m)-representation algebras of free groups: graded bases,
//! automorphism filtrations, Johnson-type and crossed homomorphisms, and
//! exact jet-evaluation oracles. All arithmetic is exact over ℚ.

pub mod qlinalg;
pub mod trunc_poly;
pub mod words;
pub mod rep_algebra;
pub mod jet_oracle;
pub mod aut_action;
pub mod filtration;
pub mod crossed;
pub mod abelian;
pub mod parse;
pub mod report;
