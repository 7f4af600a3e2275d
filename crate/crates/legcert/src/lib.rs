//! Certifier for contact +1 surgeries on Legendrian knots.
//!
//! Given a positive braid (closed up as a Legendrian rainbow closure) or an
//! explicit Lagrangian-projection diagram, the crate computes rational
//! intersection gradings of Reeb orbits, action relations between chords and
//! faces, Conley–Zehnder lower bounds, and decides exactly whether the
//! positivity system forced by an RSFT disk has only the trivial solution.
//! The result is a JSON certificate that can be re-checked offline.

pub mod action;
pub mod braid;
pub mod diagram;
pub mod feasibility;
pub mod grading;
pub mod index;
pub mod lp;
pub mod pipeline;
pub mod rational;
