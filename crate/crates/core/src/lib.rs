//! Iterated p-power cyclic resultants of multivariate integer polynomials,
//! their p-adic limits, Iwasawa-type invariants, and the orders of first
//! homology groups of branched abelian p-coverings of links.

pub mod arith;
pub mod hp;
pub mod poly;
pub mod resultant;
pub mod padic;
pub mod limits;
pub mod link;
