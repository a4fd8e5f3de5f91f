use cartanfree::hfree::{make_m0, make_sl2_example, twist, HFreeModule};
use cartanfree::liealg::{build_sp2n, diagonal_auto, weyl_twist_auto, AlgebraKind, Root, SpBasis};
use cartanfree::polyring::{parse_rational, rat, Rational};
use cartanfree::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Builtin, CommonArgs};

/// A module together with the basis it lives over.
pub struct Loaded {
    pub module: HFreeModule,
    pub basis: SpBasis,
    /// Twist twists_in in the order they were applied.
    pub twists: Vec<String>,
}

/// Picks the basis for a table read from disk: `n = 1` with roots `+-1`
/// is the sl(2) fixture, everything else is sp(2n).
fn basis_for(module: &HFreeModule) -> Result<SpBasis> {
    let fixture = module.n() == 1
        && module
            .actions()
            .all(|(r, _)| r == &Root::new(vec![1]) || r == &Root::new(vec![-1]));
    if fixture && module.actions().count() > 0 {
        Ok(SpBasis::sl2_fixture())
    } else {
        build_sp2n(module.n())
    }
}

pub fn load(args: &CommonArgs) -> Result<Loaded> {
    let (module, basis) = match (&args.table, args.builtin.unwrap_or(Builtin::M0)) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            let m = HFreeModule::from_json_str(&text)?;
            let b = basis_for(&m)?;
            m.check_against(&b)?;
            (m, b)
        }
        (None, Builtin::M0) => (make_m0(args.n)?, build_sp2n(args.n)?),
        (None, Builtin::Sl2) => (make_sl2_example(), SpBasis::sl2_fixture()),
    };
    let mut twists_in = args.twists.clone();
    twists_in.extend(random_twists(&basis, args.random_twists, args.seed));
    let mut module = module;
    for tw in &twists_in {
        module = apply_twist(&module, &basis, tw)?;
    }
    Ok(Loaded {
        module,
        basis,
        twists: twists_in,
    })
}

/// Applies `weyl:k` or `diag:c1,..,cn`.
pub fn apply_twist(m: &HFreeModule, basis: &SpBasis, tw: &str) -> Result<HFreeModule> {
    let (kind, arg) = tw
        .split_once(':')
        .ok_or_else(|| Error::Input(format!("twist {tw:?} is not of the form kind:args")))?;
    let auto = match kind.trim() {
        "weyl" => {
            let k: usize = arg
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad Weyl twist index in {tw:?}")))?;
            weyl_twist_auto(basis, k)?
        }
        "diag" => {
            let c = arg
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<Rational>>>()?;
            diagonal_auto(basis, &c)?
        }
        other => return Err(Error::Input(format!("unknown twist kind {other:?}"))),
    };
    twist(m, basis, &auto)
}

/// Seeded mix of Weyl and diagonal twist twists_in.
pub fn random_twists(basis: &SpBasis, count: usize, seed: u64) -> Vec<String> {
    const SCALARS: [(i64, i64); 8] = [
        (1, 1),
        (-1, 1),
        (2, 1),
        (-2, 1),
        (3, 1),
        (-3, 1),
        (1, 2),
        (-1, 2),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = basis.n();
    (0..count)
        .map(|_| {
            if basis.kind() == AlgebraKind::Symplectic && rng.gen_bool(0.5) {
                format!("weyl:{}", rng.gen_range(1..=n))
            } else {
                let c: Vec<String> = (0..n)
                    .map(|_| {
                        let (p, q) = SCALARS[rng.gen_range(0..SCALARS.len())];
                        cartanfree::polyring::format_rational(&rat(p, q))
                    })
                    .collect();
                format!("diag:{}", c.join(","))
            }
        })
        .collect()
}
