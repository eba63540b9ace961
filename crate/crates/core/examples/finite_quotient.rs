//! Finite-dimensional Hopf quotients of `ADTq` at roots of unity where
//! `(−q)^{n²} = 1`.

use qdtorus::algebra::{build_finite_quotient, fdquot_lookup, root_condition_holds};
use qdtorus::hopf::verify_hopf_ideal;
use qdtorus::scalars::CyclotomicMode;

fn main() -> qdtorus::Result<()> {
    for (n, m) in [(1, 2), (2, 4), (2, 2), (2, 3)] {
        let mode = CyclotomicMode::new(m)?;
        if !root_condition_holds(n, mode) {
            println!("n = {n}, q^{m} = 1: (−q)^(n²) ≠ 1, no quotient");
            continue;
        }
        build_finite_quotient(n, Some(mode))?;
        let fq = fdquot_lookup(n, m).expect("just built");
        let basis: Vec<String> = fq.basis().iter().map(|b| b.to_string()).collect();
        println!(
            "n = {n}, q^{m} = 1: dimension {} with basis {}",
            fq.dimension(),
            basis.join(", ")
        );
        for c in verify_hopf_ideal(n, m)? {
            println!("  {:?} {}", c.status, c.name);
        }
    }
    Ok(())
}
