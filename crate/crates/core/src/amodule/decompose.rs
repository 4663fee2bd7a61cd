//! Direct sum decomposition. Free summands come off by the socle-word
//! splitting; after that, random endomorphisms are raised to a rank-stable
//! power (Fitting), and any proper image/kernel pair is a genuine
//! decomposition. Indecomposability is certified when dim End = 1 or by an
//! exhaustive idempotent scan once dim End <= 6; otherwise a summand that
//! survives the trial budget is reported indecomposable but uncertified.

use super::hom::hom_basis;
use super::iso::{is_isomorphic_seeded, IsoVerdict};
use super::strip::strip_free_summands;
use super::ModuleRep;
use crate::field::Scalar;
use crate::matrix::MatrixGF;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FITTING_BUDGET: usize = 64;
const SCAN_END_DIM: usize = 6;

pub struct DecomposeOutcome {
    /// Pairwise non-isomorphic indecomposables with multiplicities,
    /// ordered by dimension then by generator entries.
    pub summands: Vec<(ModuleRep, usize)>,
    /// True when every indecomposability claim was certified.
    pub certified: bool,
}

impl DecomposeOutcome {
    pub fn total_dim(&self) -> usize {
        self.summands
            .iter()
            .map(|(m, mult)| m.dim() * mult)
            .sum()
    }
}

pub fn decompose(m: &ModuleRep, seed: u64) -> DecomposeOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pieces: Vec<ModuleRep> = Vec::new();
    let mut certified = true;
    split_rec(m, &mut rng, &mut pieces, &mut certified);

    pieces.sort_by(|a, b| module_key(a).cmp(&module_key(b)));
    let mut summands: Vec<(ModuleRep, usize)> = Vec::new();
    'next: for piece in pieces {
        for (rep, mult) in summands.iter_mut() {
            match is_isomorphic_seeded(rep, &piece, 0x5eed, 128).expect("same context") {
                IsoVerdict::Yes(_) => {
                    *mult += 1;
                    continue 'next;
                }
                IsoVerdict::No(_) => {}
                IsoVerdict::Inconclusive(_) => {
                    // Grouped conservatively as a new entry; flagged so the
                    // caller knows multiplicities may be split.
                    certified = false;
                }
            }
        }
        summands.push((piece, 1));
    }
    DecomposeOutcome {
        summands,
        certified,
    }
}

fn split_rec(
    m: &ModuleRep,
    rng: &mut ChaCha8Rng,
    pieces: &mut Vec<ModuleRep>,
    certified: &mut bool,
) {
    if m.dim() == 0 {
        return;
    }
    let (core, free_rank, _) = strip_free_summands(m);
    for _ in 0..free_rank {
        // A itself is indecomposable: its endomorphisms are right
        // multiplications, a local ring.
        pieces.push(ModuleRep::free(m.alg(), 1));
    }
    if core.dim() == 0 {
        return;
    }

    let ends = hom_basis(&core, &core).expect("same context");
    if ends.len() == 1 {
        pieces.push(core);
        return;
    }

    let field = core.field().clone();
    for _ in 0..FITTING_BUDGET {
        let mut phi = MatrixGF::zeros(&field, core.dim(), core.dim());
        for b in &ends {
            let c = field.sample(rng);
            if !c.is_zero() {
                phi = phi.add(&b.mat.scale(c));
            }
        }
        if let Some((im, ker)) = fitting_split(&phi) {
            split_rec(&core.submodule(&im), rng, pieces, certified);
            split_rec(&core.submodule(&ker), rng, pieces, certified);
            return;
        }
    }

    if ends.len() <= SCAN_END_DIM {
        match scan_idempotent(&core, &ends) {
            Some(phi) => {
                let (im, _) = phi.image_basis();
                let ker = phi.kernel_basis();
                split_rec(&core.submodule(&im), rng, pieces, certified);
                split_rec(&core.submodule(&ker), rng, pieces, certified);
            }
            None => pieces.push(core),
        }
        return;
    }

    *certified = false;
    pieces.push(core);
}

/// Raise phi to a rank-stable power; a proper image gives the Fitting
/// decomposition M = im ⊕ ker.
fn fitting_split(phi: &MatrixGF) -> Option<(MatrixGF, MatrixGF)> {
    let dim = phi.rows();
    let mut cur = phi.clone();
    let mut rank = cur.rank();
    loop {
        if rank == 0 || rank == dim {
            return None;
        }
        let next = cur.mul(&cur);
        let next_rank = next.rank();
        if next_rank == rank {
            break;
        }
        cur = next;
        rank = next_rank;
    }
    let (im, _) = cur.image_basis();
    let ker = cur.kernel_basis();
    Some((im, ker))
}

/// Exhaustive search for a nontrivial idempotent in the span of `ends`,
/// done in coordinates via the structure constant table so each candidate
/// costs O((dim End)^3) scalar operations.
fn scan_idempotent(core: &ModuleRep, ends: &[super::ModuleMap]) -> Option<MatrixGF> {
    let field = core.field().clone();
    let s = ends.len();
    let d2 = core.dim() * core.dim();

    let mut flat = MatrixGF::zeros(&field, d2, s);
    for (j, e) in ends.iter().enumerate() {
        for i in 0..core.dim() {
            for k in 0..core.dim() {
                flat.set(i * core.dim() + k, j, e.mat.get(i, k));
            }
        }
    }
    let flatten = |m: &MatrixGF| {
        let mut col = MatrixGF::zeros(&field, d2, 1);
        for i in 0..core.dim() {
            for k in 0..core.dim() {
                col.set(i * core.dim() + k, 0, m.get(i, k));
            }
        }
        col
    };

    // struct_c[(i, j)] = coordinates of B_i B_j in the basis.
    let mut products = Vec::with_capacity(s * s);
    for bi in ends {
        for bj in ends {
            products.push(flatten(&bi.mat.mul(&bj.mat)));
        }
    }
    let prod_refs: Vec<&MatrixGF> = products.iter().collect();
    let coords = flat
        .solve_matrix(&MatrixGF::hstack(&prod_refs))
        .expect("products stay in the span of an algebra basis");
    let id_coords = flat
        .solve_matrix(&flatten(&MatrixGF::identity(&field, core.dim())))
        .expect("identity is an endomorphism");

    let q = field.q();
    let mut c = vec![Scalar::ZERO; s];
    'outer: loop {
        // advance odometer
        let mut pos = 0;
        loop {
            if pos == s {
                break 'outer;
            }
            let nxt = (c[pos].index() + 1) % q;
            c[pos] = Scalar(nxt as u8);
            if nxt != 0 {
                break;
            }
            pos += 1;
        }

        let is_id = (0..s).all(|u| c[u] == id_coords.get(u, 0));
        if is_id {
            continue;
        }
        // square in coordinates
        let mut ok = true;
        for u in 0..s {
            let mut acc = Scalar::ZERO;
            for i in 0..s {
                if c[i].is_zero() {
                    continue;
                }
                for j in 0..s {
                    if c[j].is_zero() {
                        continue;
                    }
                    let cc = field.mul(c[i], c[j]);
                    acc = field.add(acc, field.mul(cc, coords.get(u, i * s + j)));
                }
            }
            if acc != c[u] {
                ok = false;
                break;
            }
        }
        if ok {
            let mut phi = MatrixGF::zeros(&field, core.dim(), core.dim());
            for (i, b) in ends.iter().enumerate() {
                if !c[i].is_zero() {
                    phi = phi.add(&b.mat.scale(c[i]));
                }
            }
            return Some(phi);
        }
    }
    None
}

/// Deterministic ordering key: dimension, then generator entries.
fn module_key(m: &ModuleRep) -> (usize, Vec<u8>) {
    let mut bytes = Vec::with_capacity(m.alg().r() * m.dim() * m.dim());
    for g in m.gens() {
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                bytes.push(g.get(i, j).index() as u8);
            }
        }
    }
    (m.dim(), bytes)
}
