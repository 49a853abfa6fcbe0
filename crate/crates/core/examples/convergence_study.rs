//! Refinement ladders: RK4 step size, packet width, and finite-difference
//! sample spacing, each with its observed order.

use pryce_spin::scenario::{convergence_ladder, parse_config, ConvergeTarget};

const SCENARIOS: [(&str, &str); 3] = [
    ("integrator", include_str!("../scenarios/converge_integrator.toml")),
    ("fg", include_str!("../scenarios/converge_fg.toml")),
    ("vp-fd", include_str!("../scenarios/converge_vp_fd.toml")),
];

fn main() -> pryce_spin::Result<()> {
    for (label, text) in SCENARIOS {
        let cfg = parse_config(text)?;
        let block = cfg.converge.clone().expect("converge scenarios carry a [converge] block");
        let table = convergence_ladder(&cfg, block.target, block.rungs)?;
        let expected = if block.target == ConvergeTarget::Integrator { 4 } else { 2 };
        println!("{label}: expected order {expected}\n{table}");
    }
    Ok(())
}
