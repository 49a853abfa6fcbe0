//! Checks the Dirac-algebra identities at random momenta.
//!
//!     cargo run --example algebra_identities -- [samples] [seed]

use pryce_spin::dirac::{random_momenta, verify_algebra, ALGEBRA_TOLERANCE};

fn main() -> pryce_spin::Result<()> {
    let mut args = std::env::args().skip(1);
    let samples = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);

    let momenta = random_momenta(samples, 10.0, seed);
    println!("{samples} momenta with |p| <= 10 m, seed {seed}");
    for check in verify_algebra(&momenta, 1.0)? {
        let mark = if check.passed() { "ok  " } else { "FAIL" };
        println!("{mark} {:<46} {:.3e} (tol {ALGEBRA_TOLERANCE:e})", check.name, check.residual);
    }
    Ok(())
}
