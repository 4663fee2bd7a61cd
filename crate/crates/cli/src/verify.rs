//! `verify` subcommands. Each prints a report ending in a verdict line and
//! returns exit code 0 only when every check in the grid passes.

use crate::{emit, grid, Cli, VerifyCmd};
use hopflab::{
    phi_map, random_class, random_class_in_s, random_module, trial_rng, trivial_resolution,
    verify_factorization, verify_hopf_axioms, CohClass, HHClass, HopfStructure, Result,
};
use rand::Rng;
use std::fmt::Write as _;

pub fn run(cli: &Cli, target: &VerifyCmd) -> Result<i32> {
    match target {
        VerifyCmd::HopfAxioms => hopf_axioms(cli),
        VerifyCmd::Resolutions => resolutions(cli),
        VerifyCmd::Phi => phi(cli),
        VerifyCmd::Factorization => factorization(cli),
    }
}

fn verdict(text: &mut String, ok: bool) {
    let _ = writeln!(text, "verdict: {}", if ok { "PASS" } else { "FAIL" });
}

fn hopf_axioms(cli: &Cli) -> Result<i32> {
    let (f, alg) = grid(cli, 2, 1, 2)?;
    let mut text = format!("hopf axioms: {:?}, r = {}\n", f, alg.r());
    let mut ok = true;
    for h in cli.hopf.structures() {
        let rep = verify_hopf_axioms(&alg, h)?;
        ok &= rep.all_pass();
        let _ = writeln!(text, "{rep}");
    }
    verdict(&mut text, ok);
    emit(&cli.out, &text)?;
    Ok(if ok { 0 } else { 2 })
}

fn binomial(n: usize, k: usize) -> usize {
    let mut v = 1usize;
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    v
}

fn resolutions(cli: &Cli) -> Result<i32> {
    let (f, alg) = grid(cli, 2, 1, 2)?;
    let d_max = cli.deg.unwrap_or(6);
    let r = alg.r();
    let res = trivial_resolution(&alg, d_max);

    let ranks_ok = (0..=d_max).all(|d| res.rank(d) == binomial(d + r - 1, r - 1));
    let exact = res.is_exact();
    let minimal = res.is_minimal();
    let ok = ranks_ok && exact && minimal;

    let mut text = format!(
        "resolutions: {:?}, r = {}, length {}\n",
        f,
        r,
        res.max_degree()
    );
    let ranks: Vec<String> = res.ranks().iter().map(|k| k.to_string()).collect();
    let _ = writeln!(text, "  ranks: {}", ranks.join(" "));
    let _ = writeln!(
        text,
        "  ranks match C(d+r-1, r-1): {}",
        if ranks_ok { "yes" } else { "no" }
    );
    let _ = writeln!(text, "  exact: {}", if exact { "yes" } else { "no" });
    let _ = writeln!(text, "  minimal: {}", if minimal { "yes" } else { "no" });
    let syz: Vec<String> = (1..=d_max)
        .map(|d| res.syzygy_module(d).dim().to_string())
        .collect();
    let _ = writeln!(text, "  syzygy dims: {}", syz.join(" "));
    verdict(&mut text, ok);
    emit(&cli.out, &text)?;
    Ok(if ok { 0 } else { 2 })
}

fn phi(cli: &Cli) -> Result<i32> {
    let (f, alg) = grid(cli, 2, 1, 2)?;
    let r = alg.r();
    let mut text = format!("phi: {:?}, r = {}\n", f, r);
    let mut ok = true;

    for i in 0..r {
        let eta = CohClass::eta(&alg, i);
        let zeta = CohClass::zeta(&alg, i);
        let want_gr = HHClass::delta(&alg, i).scale(&alg.add(&alg.one(), &alg.x(i)));
        let want_lie = HHClass::delta(&alg, i);
        let want_z = HHClass::chi(&alg, i);
        let checks = [
            (format!("Gr:  e{}", i + 1), phi_map(HopfStructure::Gr, &eta)?, want_gr),
            (format!("Lie: e{}", i + 1), phi_map(HopfStructure::Lie, &eta)?, want_lie),
            (format!("Gr:  z{}", i + 1), phi_map(HopfStructure::Gr, &zeta)?, want_z.clone()),
            (format!("Lie: z{}", i + 1), phi_map(HopfStructure::Lie, &zeta)?, want_z),
        ];
        for (label, got, want) in checks {
            let hit = got == want;
            ok &= hit;
            let _ = writeln!(
                text,
                "  {label} |-> {got}{}",
                if hit {
                    String::new()
                } else {
                    format!("  MISMATCH (expected {want})")
                }
            );
        }
    }

    let trials = cli.trials.unwrap_or(25);
    let menu: Vec<usize> = (1..=cli.deg.unwrap_or(6) / 2).map(|k| 2 * k).collect();
    let mut agree = 0usize;
    for t in 0..trials {
        let mut rng = trial_rng(cli.seed, t as u64);
        let d = menu[rng.gen_range(0..menu.len())];
        let c = random_class_in_s(&alg, d, &mut rng);
        if phi_map(HopfStructure::Gr, &c)? == phi_map(HopfStructure::Lie, &c)? {
            agree += 1;
        }
    }
    ok &= agree == trials;
    let _ = writeln!(
        text,
        "  random subring classes (degrees {}): {} of {} have equal Gr and Lie images",
        menu.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join("/"),
        agree,
        trials
    );
    verdict(&mut text, ok);
    emit(&cli.out, &text)?;
    Ok(if ok { 0 } else { 2 })
}

fn factorization(cli: &Cli) -> Result<i32> {
    let (f, alg) = grid(cli, 2, 1, 2)?;
    let trials = cli.trials.unwrap_or(20);
    let deg_bound = cli.deg.unwrap_or(4).max(1);
    let structures = cli.hopf.structures();
    let mut text = format!(
        "factorization: {:?}, r = {}, seed = {}, {} trials, class degree <= {}\n",
        f,
        alg.r(),
        cli.seed,
        trials,
        deg_bound
    );
    let mut ok = true;
    for t in 0..trials {
        let mut rng = trial_rng(cli.seed, t as u64);
        let h = structures[t % structures.len()];
        let d = rng.gen_range(1..=deg_bound);
        let c = random_class(&alg, d, &mut rng);
        let m = random_module(&alg, 6, &mut rng);
        let rep = verify_factorization(h, &c, &m)?;
        ok &= rep.pass;
        let _ = writeln!(text, "trial {t:>3} {rep}");
    }
    verdict(&mut text, ok);
    emit(&cli.out, &text)?;
    Ok(if ok { 0 } else { 2 })
}
