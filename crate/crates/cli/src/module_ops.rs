//! `module` subcommands: file round-tripping and per-module invariants.
//! Commands that produce a module (write, tensor, lzeta) print nothing but
//! the canonical file bytes, so output can be piped straight into a file.

use crate::{emit, expr, grid, Cli, ModuleCmd};
use hopflab::{
    decompose, l_zeta, module_from_str, module_to_string, projective_points, rank_variety_points,
    support_on_s, tensor, Error, ModuleRep, Result, Scalar,
};
use std::fmt::Write as _;
use std::path::Path;

pub fn run(cli: &Cli, op: &ModuleCmd) -> Result<i32> {
    match op {
        ModuleCmd::Read { file } => {
            let m = load(file)?;
            emit(
                &cli.out,
                &format!(
                    "ok: dim {} over {:?}, r = {}\n",
                    m.dim(),
                    m.field(),
                    m.alg().r()
                ),
            )?;
            Ok(0)
        }
        ModuleCmd::Write { file } => {
            let m = load(file)?;
            emit(&cli.out, &module_to_string(&m))?;
            Ok(0)
        }
        ModuleCmd::Show { file } => show(cli, &load(file)?),
        ModuleCmd::Tensor { a, b } => {
            let h = cli.hopf.single()?;
            let t = tensor(h, &load(a)?, &load(b)?)?;
            emit(&cli.out, &module_to_string(&t))?;
            Ok(0)
        }
        ModuleCmd::Decompose { file } => decompose_cmd(cli, &load(file)?),
        ModuleCmd::Lzeta { class } => {
            let (_, alg) = grid(cli, 2, 1, 2)?;
            let c = expr::parse_class(&alg, class)?;
            let m = l_zeta(&c)?;
            emit(&cli.out, &module_to_string(&m))?;
            Ok(0)
        }
        ModuleCmd::Rankvariety { file } => rank_variety(cli, &load(file)?),
        ModuleCmd::Support { file } => support(cli, &load(file)?),
    }
}

fn load(path: &Path) -> Result<ModuleRep> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidModuleFile(format!("{}: {e}", path.display())))?;
    module_from_str(&text)
}

fn show(cli: &Cli, m: &ModuleRep) -> Result<i32> {
    let mut text = format!(
        "module: dim {} over {:?}, r = {}\n",
        m.dim(),
        m.field(),
        m.alg().r()
    );
    let r = m.alg().r();
    for i in 0..r {
        let mut axis = vec![Scalar::ZERO; r];
        axis[i] = Scalar::ONE;
        let (_, jt) = m.restrict_along(&axis)?;
        let _ = writeln!(
            text,
            "  x{} jordan type: {}{}",
            i + 1,
            jt,
            if jt.is_free() { " (free)" } else { "" }
        );
    }
    emit(&cli.out, &text)?;
    Ok(0)
}

fn decompose_cmd(cli: &Cli, m: &ModuleRep) -> Result<i32> {
    let out = decompose(m, cli.seed);
    let mut text = format!(
        "decompose: dim {} over {:?}, seed = {}\n",
        m.dim(),
        m.field(),
        cli.seed
    );
    for (s, mult) in &out.summands {
        let _ = writeln!(text, "  summand dim {}: multiplicity {}", s.dim(), mult);
    }
    let _ = writeln!(
        text,
        "  indecomposability {}",
        if out.certified {
            "certified"
        } else {
            "not certified for every summand"
        }
    );
    emit(&cli.out, &text)?;
    Ok(0)
}

fn rank_variety(cli: &Cli, m: &ModuleRep) -> Result<i32> {
    let f = m.field().clone();
    let pts = rank_variety_points(m);
    let total = projective_points(&f, m.alg().r()).len();
    let mut text = format!(
        "rank variety: dim {} over {:?}, r = {}\n",
        m.dim(),
        f,
        m.alg().r()
    );
    let rendered: Vec<String> = pts.iter().map(|p| p.render(&f)).collect();
    let _ = writeln!(
        text,
        "  points: {}",
        if rendered.is_empty() {
            "(none)".to_string()
        } else {
            rendered.join(", ")
        }
    );
    let _ = writeln!(text, "  {} of {} projective points", pts.len(), total);
    emit(&cli.out, &text)?;
    Ok(0)
}

fn support(cli: &Cli, m: &ModuleRep) -> Result<i32> {
    let bound = cli.deg.unwrap_or(4);
    let structures = cli.hopf.structures();
    let mut text = String::new();
    let mut point_sets: Vec<Vec<String>> = Vec::new();
    for h in structures {
        let rep = support_on_s(h, m, bound)?;
        point_sets.push(rep.points.iter().map(|p| p.render(m.field())).collect());
        let _ = writeln!(text, "{rep}");
    }
    let mut code = 0;
    if point_sets.len() == 2 {
        let same = point_sets[0] == point_sets[1];
        let _ = writeln!(
            text,
            "structures agree on the support: {}",
            if same { "yes" } else { "NO" }
        );
        if !same {
            code = 2;
        }
    }
    emit(&cli.out, &text)?;
    Ok(code)
}
