//! Runnable verification suite behind the `selftest` CLI subcommand.
//!
//! Each check returns a pass/fail result with a short diagnostic; the
//! acceptance tests run the same checks at their full parameters.

use crate::bundle::{classify_6mfd, flip, pullback_total, tunnel_sum, FramingBit};
use crate::error::Result;
use crate::group::FgAbGroup;
use crate::manifold::{Atom, Field, ManifoldExpr};
use crate::matrix::{smith_normal_form, DenseMatrix};
use crate::parser::parse_expr;
use crate::suspension::{
    is_homology_sphere, surface_pi1, suspend, suspension_homology, suspension_homology_graded,
    FramingIndex,
};
use crate::torus::{d2_full_matrix, q_manifold, spectral_e3_report, torus_tower};
use crate::{FgAb, Graded, Int};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn from(name: &'static str, failures: Vec<String>, ok_detail: String) -> Self {
        match failures.first() {
            None => CheckResult {
                name,
                pass: true,
                detail: ok_detail,
            },
            Some(first) => CheckResult {
                name,
                pass: false,
                detail: format!("{} failure(s), first: {first}", failures.len()),
            },
        }
    }
}

/// Small deterministic generator (splitmix64) so the suite needs no RNG
/// dependency and prints identically across runs.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish in 0..bound.
    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    fn signed(&mut self, magnitude: i64) -> i64 {
        self.range(0, 2 * magnitude as u64) as i64 - magnitude
    }

    fn flag(&mut self) -> bool {
        self.next() & 1 == 1
    }
}

fn run<T>(failures: &mut Vec<String>, label: String, f: impl FnOnce() -> Result<T>) -> Option<T> {
    match f() {
        Ok(v) => Some(v),
        Err(e) => {
            failures.push(format!("{label}: {e}"));
            None
        }
    }
}

/// Page-three Poincaré polynomial equals the closed form for 2 <= k <= max_k.
pub fn oracle_equality(max_k: u32) -> CheckResult {
    let mut failures = Vec::new();
    for k in 2..=max_k {
        let lhs = match spectral_e3_report(k) {
            Ok(r) => r.poincare,
            Err(e) => {
                failures.push(format!("k={k}: oracle failed: {e}"));
                continue;
            }
        };
        let rhs = match q_manifold(k) {
            Ok(m) => m.poincare_poly(),
            Err(e) => {
                failures.push(format!("k={k}: closed form failed: {e}"));
                continue;
            }
        };
        if lhs != rhs {
            failures.push(format!("k={k}: oracle {lhs} != closed form {rhs}"));
        }
    }
    CheckResult::from(
        "oracle-equality",
        failures,
        format!("page-three ranks match the closed form for k=2..{max_k}"),
    )
}

/// Iterated circle-bundle tower equals the closed form structurally for
/// 1 <= k <= max_k.
pub fn tower_equality(max_k: u32) -> CheckResult {
    let mut failures = Vec::new();
    for k in 1..=max_k {
        let tower = run(&mut failures, format!("k={k} tower"), || torus_tower(k));
        let closed = run(&mut failures, format!("k={k} closed form"), || q_manifold(k));
        if let (Some(t), Some(q)) = (tower, closed) {
            if t.canonicalize() != q.canonicalize() {
                failures.push(format!("k={k}: tower {t} != closed form {q}"));
            }
        }
    }
    CheckResult::from(
        "tower-equality",
        failures,
        format!("tower agrees with the closed form for k=1..{max_k}"),
    )
}

/// Spot values Q_1..Q_4, plus vanishing Euler characteristic and palindromic
/// Poincaré polynomial for all k <= max_k.
pub fn spot_values(max_k: u32) -> CheckResult {
    let mut failures = Vec::new();
    let spots = [
        (1u32, "S(5)"),
        (2, "SxS(3,3)"),
        (3, "5*SxS(3,4)"),
        (4, "9*SxS(3,5) # 8*SxS(4,4)"),
    ];
    for (k, expected) in spots {
        match q_manifold(k) {
            Ok(m) if m.to_string() == expected => {}
            Ok(m) => failures.push(format!("Q_{k} = {m}, expected {expected}")),
            Err(e) => failures.push(format!("Q_{k}: {e}")),
        }
    }
    for k in 1..=max_k {
        match q_manifold(k) {
            Ok(m) => {
                if m.euler_characteristic() != 0 {
                    failures.push(format!("chi(Q_{k}) = {} != 0", m.euler_characteristic()));
                }
                let p = m.poincare_poly();
                if !p.is_palindromic() {
                    failures.push(format!("P_t(Q_{k}) = {p} is not palindromic"));
                }
                if p.degree() != Some(k as usize + 4) {
                    failures.push(format!("P_t(Q_{k}) has degree {:?}", p.degree()));
                }
            }
            Err(e) => failures.push(format!("Q_{k}: {e}")),
        }
    }
    CheckResult::from(
        "spot-values",
        failures,
        format!("spot values and chi/palindromicity hold for k=1..{max_k}"),
    )
}

/// Sphere-product suspensions rewrite to the split form for all
/// 1 <= p <= q <= 6 with q >= 3 and both indices, and the rewritten form has
/// the homology the suspension formula predicts.
pub fn suspension_identities() -> CheckResult {
    let mut failures = Vec::new();
    for p in 1..=6u32 {
        for q in p.max(3)..=6 {
            let n = ManifoldExpr::single(Atom::SphereProduct(p, q));
            let expected = ManifoldExpr::from_atoms(
                p + q + 1,
                vec![Atom::SphereProduct(p, q + 1), Atom::SphereProduct(p + 1, q)],
            )
            .expect("uniform dimension");
            for i in [FramingIndex::Zero, FramingIndex::One] {
                match suspend(&n, i) {
                    Ok(got) if got == expected => {
                        if got.homology() != suspension_homology(&n, i) {
                            failures.push(format!(
                                "homology of suspend(SxS({p},{q}), {i}) disagrees with the formula"
                            ));
                        }
                    }
                    Ok(got) => failures.push(format!(
                        "suspend(SxS({p},{q}), {i}) = {got}, expected {expected}"
                    )),
                    Err(e) => failures.push(format!("suspend(SxS({p},{q}), {i}): {e}")),
                }
            }
        }
    }
    CheckResult::from(
        "suspension-identities",
        failures,
        "sphere-product suspensions split as expected for p <= q <= 6".into(),
    )
}

/// Pool of 1-connected single atoms of the given dimension.
fn simply_connected_atoms(dim: u32, rng: &mut Rng) -> Atom {
    let mut pool: Vec<Atom> = Vec::new();
    for p in 2..=dim / 2 {
        pool.push(Atom::SphereProduct(p, dim - p));
    }
    pool.push(Atom::TwistedProduct(dim - 2));
    if dim % 2 == 0 && dim >= 4 {
        pool.push(Atom::Projective(Field::Complex, dim / 2));
    }
    if dim % 4 == 0 && dim >= 8 {
        pool.push(Atom::Projective(Field::Quaternion, dim / 4));
    }
    if dim == 5 {
        pool.push(Atom::Wu);
        pool.push(Atom::M(Int::from(rng.range(2, 9) as i64)));
        pool.push(Atom::X(rng.range(1, 3) as u32));
    }
    pool[rng.below(pool.len() as u64) as usize].clone()
}

/// Suspension distributes over random 1-connected sums, structurally.
pub fn suspension_distributivity(samples: u32, seed: u64) -> CheckResult {
    let mut rng = Rng::new(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let dim = rng.range(4, 8) as u32;
        let count = rng.range(2, 5) as usize;
        let atoms: Vec<Atom> = (0..count)
            .map(|_| simply_connected_atoms(dim, &mut rng))
            .collect();
        let n = ManifoldExpr::from_atoms(dim, atoms.clone()).expect("uniform dimension");
        let i = if rng.flag() {
            FramingIndex::Zero
        } else {
            FramingIndex::One
        };
        let whole = match suspend(&n, i) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("suspend({n}, {i}): {e}"));
                continue;
            }
        };
        let parts: Result<Vec<_>> = atoms
            .iter()
            .map(|a| suspend(&ManifoldExpr::single(a.clone()), i))
            .collect();
        match parts.and_then(|ps| ManifoldExpr::sum_of(dim + 1, ps)) {
            Ok(split) if split == whole => {}
            Ok(split) => failures.push(format!(
                "suspend({n}, {i}) = {whole} but atomwise sum is {split}"
            )),
            Err(e) => failures.push(format!("atomwise suspension of {n}: {e}")),
        }
    }
    CheckResult::from(
        "suspension-distributivity",
        failures,
        format!("suspension distributed over {samples} random 1-connected sums"),
    )
}

/// The three branches of the pullback rule on hand-built bundle data.
pub fn pullback_branch_table() -> CheckResult {
    let mut failures = Vec::new();
    let cases: [(&str, &str, &str, &str); 6] = [
        // w2(base) != 0: index 0
        ("SxS(3,3)", "TwS(3)", "M(2)", "SxS(3,3) # Sig0(M(2))"),
        ("SxS(3,4)", "TwS(4)", "CP(3)", "SxS(3,4) # Sig0(CP(3))"),
        // w2(base) = 0 = w2(total): index 1
        ("SxS(3,3)", "SxS(2,3)", "M(2)", "SxS(3,3) # Sig1(M(2))"),
        ("S(7)", "CP(3)", "2*SxS(3,3)", "4*SxS(3,4)"),
        // w2(base) = 0 but w2(total) != 0: index normalizes to 0
        ("TwS(4)", "SxS(2,3)", "M(2)", "TwS(4) # Sig0(M(2))"),
        // suspended sphere is absorbed
        ("SxS(3,4)", "SxS(2,4)", "S(6)", "SxS(3,4)"),
    ];
    for (e, b, n, expected) in cases {
        let (e_m, b_m, n_m) = (
            parse_expr(e).expect("fixture parses"),
            parse_expr(b).expect("fixture parses"),
            parse_expr(n).expect("fixture parses"),
        );
        let want = parse_expr(expected).expect("fixture parses");
        match pullback_total(&e_m, &b_m, &n_m) {
            Ok(got) if got == want => {}
            Ok(got) => failures.push(format!("pullback({e}, {b}, {n}) = {got}, expected {expected}")),
            Err(err) => failures.push(format!("pullback({e}, {b}, {n}): {err}")),
        }
    }
    CheckResult::from(
        "pullback-branch-table",
        failures,
        "all three pullback branches produce the expected totals".into(),
    )
}

/// The flip truth table, plus double-flip invariance of the tunnel sum on
/// random inputs.
pub fn framing_bit_calculus(samples: u32, seed: u64) -> CheckResult {
    let mut failures = Vec::new();
    let table = [
        (FramingBit::One, false, FramingBit::Zero),
        (FramingBit::One, true, FramingBit::Zero),
        (FramingBit::Zero, false, FramingBit::One),
        (FramingBit::Zero, true, FramingBit::Zero),
    ];
    for (b, w2, expect) in table {
        if flip(b, w2) != expect {
            failures.push(format!("flip({b}, w2={w2}) != {expect}"));
        }
    }
    let mut rng = Rng::new(seed);
    for _ in 0..samples {
        let m_atoms: Vec<Atom> = (0..rng.range(0, 3))
            .map(|_| simply_connected_atoms(6, &mut rng))
            .collect();
        let m = ManifoldExpr::from_atoms(6, m_atoms).expect("uniform dimension");
        let n_atoms: Vec<Atom> = (0..rng.range(0, 3))
            .map(|_| simply_connected_atoms(5, &mut rng))
            .collect();
        let n = ManifoldExpr::from_atoms(5, n_atoms).expect("uniform dimension");
        let at = |e, d| tunnel_sum(&m, e, &n, d);
        let pairs = [
            (at(FramingBit::One, FramingBit::One), at(FramingBit::Zero, FramingBit::Zero)),
            (at(FramingBit::One, FramingBit::Zero), at(FramingBit::Zero, FramingBit::One)),
        ];
        for (lhs, rhs) in pairs {
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => {}
                (Ok(a), Ok(b)) => {
                    failures.push(format!("double flip changed tunnel sum of {m} and {n}: {a} vs {b}"))
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("tunnel sum on {m}, {n}: {e}")),
            }
        }
    }
    CheckResult::from(
        "framing-bit-calculus",
        failures,
        format!("flip table exact; tunnel sum double-flip invariant on {samples} samples"),
    )
}

/// All output atoms allowed by the 6-manifold normal form: S^3 x S^3,
/// S^2 x S^4, suspended M(k) with either index, and twisted suspensions of
/// the w2 witnesses.
pub fn in_classifier_grammar(m: &ManifoldExpr) -> bool {
    m.dim() == 6
        && m.atoms().iter().all(|a| match a {
            Atom::SphereProduct(3, 3) | Atom::SphereProduct(2, 4) => true,
            Atom::Suspension(index, inner) => match inner.atoms() {
                [Atom::M(_)] => true,
                [Atom::TwistedProduct(3)] | [Atom::Wu] | [Atom::X(_)] => {
                    *index == FramingIndex::One
                }
                _ => false,
            },
            _ => false,
        })
}

/// Randomized realizable quotient data: the classifier output stays in the
/// normal-form grammar, reproduces H_2 up to the rank shift from the Euler
/// class, and has vanishing Euler characteristic.
pub fn classifier_grammar(samples: u32, seed: u64) -> CheckResult {
    let mut rng = Rng::new(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let mut torsion: Vec<Int> = Vec::new();
        for _ in 0..rng.range(0, 2) {
            let k = Int::from(rng.range(2, 9) as i64);
            torsion.push(k.clone());
            torsion.push(k);
        }
        let (h2, w2, euler_eq) = match rng.below(3) {
            0 => (
                FgAbGroup::new(rng.range(1, 4) as usize, torsion),
                false,
                false,
            ),
            1 => (
                FgAbGroup::new(rng.range(1, 4) as usize, torsion),
                true,
                true,
            ),
            _ => {
                // euler != w2 with w2 != 0 needs an untwisted summand left over
                match rng.below(3) {
                    0 => (
                        FgAbGroup::new(rng.range(2, 4) as usize, torsion),
                        true,
                        false,
                    ),
                    1 => {
                        torsion.push(Int::from(2));
                        (FgAbGroup::new(rng.range(1, 3) as usize, torsion), true, false)
                    }
                    _ => {
                        let i = rng.range(1, 3) as usize;
                        torsion.push(Int::from(1) << i);
                        torsion.push(Int::from(1) << i);
                        (FgAbGroup::new(rng.range(1, 3) as usize, torsion), true, false)
                    }
                }
            }
        };
        let label = format!("classify({h2}, w2={w2}, euler_eq={euler_eq})");
        let m = match classify_6mfd(&h2, w2, euler_eq) {
            Ok(m) => m,
            Err(e) => {
                failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        if !in_classifier_grammar(&m) {
            failures.push(format!("{label} = {m} leaves the normal-form grammar"));
        }
        if m.euler_characteristic() != 0 {
            failures.push(format!("{label} = {m} has chi != 0"));
        }
        let h2_out = m.homology().at(2);
        if h2_out.free_rank() + 1 != h2.free_rank() {
            failures.push(format!(
                "{label}: H_2 rank {} + 1 != quotient rank {}",
                h2_out.free_rank(),
                h2.free_rank()
            ));
        }
        if h2_out.torsion() != h2.torsion() {
            failures.push(format!(
                "{label}: H_2 torsion {h2_out} does not match the quotient"
            ));
        }
    }
    CheckResult::from(
        "classifier-grammar",
        failures,
        format!("{samples} random realizable inputs stay in the normal form"),
    )
}

/// Index-independence of suspension homology, homology-sphere preservation,
/// and abelianized surface fundamental groups.
pub fn homology_formula_suite() -> CheckResult {
    let mut failures = Vec::new();
    let mut rng = Rng::new(0xfeed);
    for dim in 4..=8u32 {
        for _ in 0..6 {
            let n = ManifoldExpr::single(simply_connected_atoms(dim, &mut rng));
            let h0 = suspension_homology(&n, FramingIndex::Zero);
            let h1 = suspension_homology(&n, FramingIndex::One);
            if h0 != h1 {
                failures.push(format!("suspension homology of {n} depends on the index"));
            }
        }
    }
    for n in 4..=10u32 {
        // homology spheres in the atom closure are the spheres themselves;
        // run the formula both on the expression and on raw graded data
        let sphere = ManifoldExpr::sphere(n);
        if !is_homology_sphere(&sphere) {
            failures.push(format!("S^{n} not recognized as a homology sphere"));
        }
        let expected = ManifoldExpr::sphere(n + 1).homology();
        if suspension_homology(&sphere, FramingIndex::One) != expected {
            failures.push(format!("suspension of S^{n} is not a homology sphere"));
        }
        let synthetic: Graded = sphere.homology();
        if suspension_homology_graded(&synthetic, n) != expected {
            failures.push(format!("graded suspension formula fails on synthetic S^{n} data"));
        }
        let not_sphere = ManifoldExpr::from_atoms(5, vec![Atom::M(Int::from(3))]).unwrap();
        if is_homology_sphere(&not_sphere) {
            failures.push("M(3) misclassified as a homology sphere".into());
        }
    }
    for g in 1..=5u32 {
        for i in [FramingIndex::Zero, FramingIndex::One] {
            let ab = surface_pi1(g, i).abelianization();
            if ab != FgAb::free(2 * g as usize) {
                failures.push(format!(
                    "abelianization of pi1 for genus {g}, index {i} is {ab}"
                ));
            }
        }
    }
    CheckResult::from(
        "homology-formula-suite",
        failures,
        "index independence, sphere preservation and pi1 abelianizations hold".into(),
    )
}

/// U·A·V = D on random matrices, with the divisibility chain intact.
pub fn algebra_kernel_snf(samples: u32, max_dim: usize, seed: u64) -> CheckResult {
    let mut rng = Rng::new(seed);
    let mut failures = Vec::new();
    for case in 0..samples {
        let r = rng.below(max_dim as u64 + 1) as usize;
        let c = rng.below(max_dim as u64 + 1) as usize;
        let mut a = DenseMatrix::<Int>::zero(r, c);
        for i in 0..r {
            for j in 0..c {
                a.set(i, j, Int::from(rng.signed(50)));
            }
        }
        let snf = smith_normal_form(&a);
        if snf.u.mul(&a).mul(&snf.v) != snf.d {
            failures.push(format!("case {case} ({r}x{c}): U*A*V != D"));
            continue;
        }
        if !snf.d.is_diagonal() {
            failures.push(format!("case {case}: D not diagonal"));
        }
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            let chain_ok = if w[0] == Int::from(0) {
                w[1] == Int::from(0)
            } else {
                (w[1].clone() % w[0].clone()) == Int::from(0)
            };
            if !chain_ok {
                failures.push(format!("case {case}: divisibility chain broken"));
                break;
            }
        }
    }
    CheckResult::from(
        "snf-reconstruction",
        failures,
        format!("U*A*V = D verified on {samples} random matrices up to {max_dim}x{max_dim}"),
    )
}

/// The assembled differential squares to zero in every degree.
pub fn differential_squares_to_zero(max_k: u32) -> CheckResult {
    let mut failures = Vec::new();
    for k in 2..=max_k {
        for d in 0..=(k + 3) {
            match (d2_full_matrix(k, d), d2_full_matrix(k, d + 1)) {
                (Ok(first), Ok(second)) => {
                    if !second.mul(&first).is_zero() {
                        failures.push(format!("d2^2 != 0 at k={k}, degree {d}"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => failures.push(format!("k={k}, d={d}: {e}")),
            }
        }
    }
    CheckResult::from(
        "d2-squared-zero",
        failures,
        format!("differentials square to zero for k=2..{max_k}"),
    )
}

/// Every page-three group is torsion-free (unit elementary divisors).
pub fn e3_torsion_free(max_k: u32) -> CheckResult {
    let mut failures = Vec::new();
    for k in 2..=max_k {
        match spectral_e3_report(k) {
            Ok(r) if r.torsion_free => {}
            Ok(_) => failures.push(format!("k={k}: page three has torsion")),
            Err(e) => failures.push(format!("k={k}: {e}")),
        }
    }
    CheckResult::from(
        "e3-torsion-free",
        failures,
        format!("unit elementary divisors for k=2..{max_k}"),
    )
}

/// The whole table, sized for interactive runs.
pub fn run_selftest(max_k: u32) -> Vec<CheckResult> {
    let oracle_k = max_k.clamp(2, crate::torus::MAX_ORACLE_K);
    vec![
        oracle_equality(oracle_k),
        tower_equality(max_k.min(8)),
        spot_values(max_k),
        suspension_identities(),
        suspension_distributivity(60, 0x5eed),
        pullback_branch_table(),
        framing_bit_calculus(40, 0xbeef),
        classifier_grammar(60, 0xcafe),
        homology_formula_suite(),
        algebra_kernel_snf(120, 12, 0xd1ce),
        differential_squares_to_zero(oracle_k.min(8)),
        e3_torsion_free(oracle_k),
    ]
}
