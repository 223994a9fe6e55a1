//! Exact integer-polynomial algebra: dense polynomials over a generic ring,
//! Sylvester resultants by Bareiss elimination, Sturm sequences and the
//! period-four cycle eliminant.

mod cycle;
mod poly;
mod resultant;
mod sturm;

pub use cycle::{cycle_map, eliminate_cycle, solve_cycle, verify_candidate, Deg93Report};
pub use poly::{BiPoly, Poly, Ring, ZPoly};
pub use sturm::SturmChain;
pub use resultant::{bareiss_det, resultant, resultant_bi, sylvester, Var};
