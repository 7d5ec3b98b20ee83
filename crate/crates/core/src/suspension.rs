//! The suspension rewrite engine.
//!
//! Suspending an n-manifold N yields two (n+1)-manifolds, indexed by the two
//! framings of a circle. The engine applies the closed-form identities:
//!
//! * R1: a sphere suspends to a sphere;
//! * R2: over 1-connected summands of dimension >= 4 the suspension
//!   distributes across connected sums;
//! * R3: a sphere product S^p x S^q rewrites to
//!   S^p x S^{q+1} # S^{p+1} x S^q — for index 0 always, for index 1 when
//!   q >= 3;
//! * R5: index 0 on a genus-g surface yields #_{2g}(S^1 x S^2);
//! * R4: for stable inputs the two indices agree, so the index normalizes
//!   to 0.
//!
//! Anything else stays a symbolic [`Atom::Suspension`] whose homology and w2
//! indicator are still computed exactly.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::manifold::{repeated, Atom, ManifoldExpr};
use crate::matrix::DenseMatrix;
use crate::{FgAb, Graded, Int};

/// Which of the two circle framings the suspension uses: 0 glues by the
/// identity, 1 by the twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FramingIndex {
    Zero,
    One,
}

impl FramingIndex {
    pub fn as_u8(self) -> u8 {
        match self {
            FramingIndex::Zero => 0,
            FramingIndex::One => 1,
        }
    }

    pub fn from_u8(v: u8) -> Result<Self> {
        match v {
            0 => Ok(FramingIndex::Zero),
            1 => Ok(FramingIndex::One),
            other => Err(Error::InvalidArgument(format!(
                "framing index must be 0 or 1, got {other}"
            ))),
        }
    }
}

impl fmt::Display for FramingIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Whether both suspension indices are known to give the same manifold.
/// Flagged only where proven: spheres, and sphere products with a factor of
/// dimension >= 3. Projective spaces are deliberately not flagged (the
/// quaternionic plane is a genuine counterexample), nor are twisted products
/// or multi-atom sums.
pub fn is_sigma_stable(n: &ManifoldExpr) -> bool {
    if n.is_sphere() {
        return true;
    }
    match n.atoms() {
        [Atom::SphereProduct(p, q)] => *p.max(q) >= 3,
        _ => false,
    }
}

/// Apply the rewrite rules to Σ_i N. Inputs of dimension < 2 are rejected.
pub fn suspend(n: &ManifoldExpr, i: FramingIndex) -> Result<ManifoldExpr> {
    let dim = n.dim();
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    // R1: spheres suspend to spheres, either index.
    if n.is_sphere() {
        return Ok(ManifoldExpr::sphere(dim + 1));
    }
    // R2: distribute over 1-connected sums once the target dimension admits
    // it (dim + 1 >= 5).
    if n.atoms().len() >= 2 && dim >= 4 && n.is_simply_connected() {
        let parts: Result<Vec<ManifoldExpr>> = n
            .atoms()
            .iter()
            .map(|a| suspend(&ManifoldExpr::single(a.clone()), i))
            .collect();
        return ManifoldExpr::sum_of(dim + 1, parts?);
    }
    if let [atom] = n.atoms() {
        match atom {
            // R3: surgery on the product circle splits a sphere product.
            // Index 0 always; index 1 needs a factor of dimension >= 3 so
            // that both indices agree.
            Atom::SphereProduct(p, q) if i == FramingIndex::Zero || *q >= 3 => {
                return ManifoldExpr::from_atoms(
                    dim + 1,
                    vec![
                        Atom::SphereProduct(*p, *q + 1),
                        Atom::SphereProduct(*p + 1, *q),
                    ],
                );
            }
            // R5: the untwisted suspension of a surface is a sum of handles.
            Atom::Surface(g) if i == FramingIndex::Zero => {
                return Ok(repeated(Atom::SphereProduct(1, 2), 2 * *g as usize));
            }
            _ => {}
        }
    }
    // R4: no closed form; keep a symbolic suspension, normalizing the index
    // to 0 when the input is stable.
    let index = if is_sigma_stable(n) { FramingIndex::Zero } else { i };
    Ok(ManifoldExpr::single(Atom::Suspension(index, n.clone())))
}

/// H_*(Σ_i N) from the splitting into the reduced suspension of N and the
/// punctured N: the reduced homology shifted up one degree, plus H_*(N) with
/// the top class removed. Independent of the framing index.
pub fn suspension_homology_graded(h: &Graded, dim: u32) -> Graded {
    let shifted = h
        .reduced()
        .shift(1)
        .expect("shifting up never goes negative");
    shifted.graded_sum(&h.without_degree(dim))
}

/// H_*(Σ_i N) for an expression; the index argument only documents which
/// suspension is meant, the groups agree for both.
pub fn suspension_homology(n: &ManifoldExpr, _i: FramingIndex) -> Graded {
    suspension_homology_graded(&n.homology(), n.dim())
}

/// w2(Σ_i N) ≠ 0 iff w2(N) ≠ 0, independent of the index. Only valid when
/// the restriction to the punctured manifold is an isomorphism on H^2, i.e.
/// dim(N) >= 4.
pub fn suspension_w2(n: &ManifoldExpr) -> Result<bool> {
    if n.dim() < 4 {
        return Err(Error::RestrictionUnavailable(n.dim()));
    }
    Ok(n.w2_nonzero())
}

/// True iff N has the integral homology of the sphere of its dimension.
pub fn is_homology_sphere(n: &ManifoldExpr) -> bool {
    n.homology() == ManifoldExpr::sphere(n.dim()).homology()
}

/// A word in a finitely presented group: freely reduced (generator index,
/// exponent) syllables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn from_syllables(syllables: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut reduced: Vec<(usize, i64)> = Vec::new();
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match reduced.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        reduced.pop();
                    }
                }
                _ => reduced.push((g, e)),
            }
        }
        Word { syllables: reduced }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// Total exponent of each generator (the image in the abelianization).
    pub fn exponent_vector(&self, num_generators: usize) -> Vec<i64> {
        let mut v = vec![0; num_generators];
        for (g, e) in &self.syllables {
            v[*g] += e;
        }
        v
    }

    fn render(&self, names: &[String]) -> String {
        self.syllables
            .iter()
            .map(|(g, e)| match e {
                1 => names[*g].clone(),
                e => format!("{}^{}", names[*g], e),
            })
            .collect()
    }
}

/// Generators plus relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for w in &relators {
            for (g, _) in w.syllables() {
                if *g >= generators.len() {
                    return Err(Error::InvalidArgument(format!(
                        "relator references undeclared generator #{g}"
                    )));
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    pub fn trivial() -> Self {
        GroupPresentation {
            generators: Vec::new(),
            relators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Quotient of Z^generators by the relator exponent lattice.
    pub fn abelianization(&self) -> FgAb {
        let g = self.generators.len();
        let r = self.relators.len();
        let mut m = DenseMatrix::<Int>::zero(g, r);
        for (j, w) in self.relators.iter().enumerate() {
            for (i, e) in w.exponent_vector(g).into_iter().enumerate() {
                m.set(i, j, Int::from(e));
            }
        }
        crate::group::cokernel(&m)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "generators": self.generators,
            "relators": self
                .relators
                .iter()
                .map(|w| w.render(&self.generators))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| w.render(&self.generators))
            .collect();
        write!(f, "<{}|{}>", self.generators.join(","), rels.join(","))
    }
}

/// Fundamental group of the suspension of a genus-g surface.
///
/// Index 0 gives the free group on a_1, b_1, ..., a_g, b_g. Index 1 adds a
/// central generator z with z = (product of commutators [a_j, b_j])^{-1},
/// written as the single relator z * prod a_j b_j a_j^-1 b_j^-1. Genus 0
/// suspends to a sphere: trivial presentation.
pub fn surface_pi1(g: u32, i: FramingIndex) -> GroupPresentation {
    if g == 0 {
        return GroupPresentation::trivial();
    }
    let g = g as usize;
    let mut generators = Vec::with_capacity(2 * g + 1);
    for j in 1..=g {
        generators.push(format!("a{j}"));
        generators.push(format!("b{j}"));
    }
    if i == FramingIndex::Zero {
        return GroupPresentation::new(generators, Vec::new()).expect("no relators");
    }
    generators.push("z".to_string());
    let z = 2 * g;
    let a = |j: usize| 2 * (j - 1);
    let b = |j: usize| 2 * (j - 1) + 1;
    let mut relators = Vec::new();
    for j in 1..=g {
        relators.push(Word::from_syllables([(a(j), 1), (z, 1), (a(j), -1), (z, -1)]));
        relators.push(Word::from_syllables([(b(j), 1), (z, 1), (b(j), -1), (z, -1)]));
    }
    let mut last = vec![(z, 1)];
    for j in 1..=g {
        last.extend([(a(j), 1), (b(j), 1), (a(j), -1), (b(j), -1)]);
    }
    relators.push(Word::from_syllables(last));
    GroupPresentation::new(generators, relators).expect("relators reference declared generators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FgAbGroup;
    use crate::manifold::Field;

    fn sxs(p: u32, q: u32) -> ManifoldExpr {
        ManifoldExpr::single(Atom::SphereProduct(p, q))
    }

    fn hp2() -> ManifoldExpr {
        ManifoldExpr::single(Atom::Projective(Field::Quaternion, 2))
    }

    fn fg(rank: usize, torsion: &[i64]) -> FgAb {
        FgAbGroup::new(rank, torsion.iter().map(|&t| Int::from(t)).collect())
    }

    #[test]
    fn suspends_sphere_products() {
        let expect = sxs(2, 4).connected_sum(&sxs(3, 3)).unwrap();
        assert_eq!(suspend(&sxs(2, 3), FramingIndex::Zero).unwrap(), expect);
        assert_eq!(suspend(&sxs(2, 3), FramingIndex::One).unwrap(), expect);
    }

    #[test]
    fn suspends_spheres() {
        assert_eq!(
            suspend(&ManifoldExpr::sphere(4), FramingIndex::One).unwrap(),
            ManifoldExpr::sphere(5)
        );
    }

    #[test]
    fn rejects_dimension_below_two() {
        assert_eq!(
            suspend(&ManifoldExpr::sphere(1), FramingIndex::Zero),
            Err(Error::DimensionTooSmall(1))
        );
    }

    #[test]
    fn quaternionic_plane_stays_split_by_index() {
        let s0 = suspend(&hp2(), FramingIndex::Zero).unwrap();
        let s1 = suspend(&hp2(), FramingIndex::One).unwrap();
        assert_eq!(
            s1,
            ManifoldExpr::single(Atom::Suspension(FramingIndex::One, hp2()))
        );
        assert_ne!(s0, s1);
        assert!(!is_sigma_stable(&hp2()));
    }

    #[test]
    fn stable_inputs_collapse_the_index() {
        // S^1 x S^4 is stable via its S^4 factor but not 1-connected, so no
        // distribution is available inside sums; as a single atom it rewrites.
        assert!(is_sigma_stable(&sxs(1, 4)));
        assert_eq!(
            suspend(&sxs(1, 4), FramingIndex::One).unwrap(),
            sxs(1, 5).connected_sum(&sxs(2, 4)).unwrap()
        );
        // A twisted index-1 suspension of S^2 x S^2 is not rewritten (no
        // factor of dimension >= 3), and S^2 x S^2 is not flagged stable.
        let s22 = sxs(2, 2);
        assert_eq!(
            suspend(&s22, FramingIndex::One).unwrap(),
            ManifoldExpr::single(Atom::Suspension(FramingIndex::One, s22.clone()))
        );
        // Index 0 always rewrites sphere products.
        assert_eq!(
            suspend(&s22, FramingIndex::Zero).unwrap(),
            sxs(2, 3).connected_sum(&sxs(2, 3)).unwrap()
        );
    }

    #[test]
    fn distributes_over_simply_connected_sums() {
        let n = sxs(2, 3).connected_sum(&ManifoldExpr::single(Atom::M(Int::from(3)))).unwrap();
        let got = suspend(&n, FramingIndex::One).unwrap();
        let expect = ManifoldExpr::sum_of(
            6,
            [
                suspend(&sxs(2, 3), FramingIndex::One).unwrap(),
                ManifoldExpr::single(Atom::Suspension(
                    FramingIndex::One,
                    ManifoldExpr::single(Atom::M(Int::from(3))),
                )),
            ],
        )
        .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn no_distribution_in_low_dimension_or_without_simple_connectivity() {
        // dim 3: stays symbolic as a whole for index 1
        let n = repeated(Atom::SphereProduct(1, 2), 2);
        assert_eq!(
            suspend(&n, FramingIndex::One).unwrap(),
            ManifoldExpr::single(Atom::Suspension(FramingIndex::One, n.clone()))
        );
        // dim 4 but π1 ≠ 0: same
        let m = repeated(Atom::SphereProduct(1, 3), 2);
        assert_eq!(
            suspend(&m, FramingIndex::One).unwrap(),
            ManifoldExpr::single(Atom::Suspension(FramingIndex::One, m.clone()))
        );
    }

    #[test]
    fn surface_suspension_yields_handles() {
        assert_eq!(
            suspend(&ManifoldExpr::single(Atom::Surface(2)), FramingIndex::Zero).unwrap(),
            repeated(Atom::SphereProduct(1, 2), 4)
        );
        let twisted = suspend(&ManifoldExpr::single(Atom::Surface(2)), FramingIndex::One).unwrap();
        assert_eq!(
            twisted,
            ManifoldExpr::single(Atom::Suspension(
                FramingIndex::One,
                ManifoldExpr::single(Atom::Surface(2))
            ))
        );
        assert!(!twisted.is_simply_connected());
    }

    #[test]
    fn nested_suspensions_stay_symbolic() {
        let inner = suspend(&hp2(), FramingIndex::One).unwrap();
        let outer = suspend(&inner, FramingIndex::Zero).unwrap();
        assert_eq!(
            outer,
            ManifoldExpr::single(Atom::Suspension(FramingIndex::Zero, inner))
        );
    }

    #[test]
    fn suspension_homology_examples() {
        let h = suspension_homology(&ManifoldExpr::sphere(4), FramingIndex::Zero);
        assert_eq!(h, ManifoldExpr::sphere(5).homology());

        let cp2 = ManifoldExpr::single(Atom::Projective(Field::Complex, 2));
        let h = suspension_homology(&cp2, FramingIndex::One);
        assert_eq!(h.at(0), fg(1, &[]));
        assert_eq!(h.at(1), fg(0, &[]));
        assert_eq!(h.at(2), fg(1, &[]));
        assert_eq!(h.at(3), fg(1, &[]));
        assert_eq!(h.at(4), fg(0, &[]));
        assert_eq!(h.at(5), fg(1, &[]));

        let mk = ManifoldExpr::single(Atom::M(Int::from(5)));
        let h = suspension_homology(&mk, FramingIndex::Zero);
        assert_eq!(h.at(2), fg(0, &[5, 5]));
        assert_eq!(h.at(3), fg(0, &[5, 5]));
        assert_eq!(h.at(4), fg(0, &[]));
        assert_eq!(h.at(6), fg(1, &[]));
    }

    #[test]
    fn closed_forms_agree_with_the_homology_formula() {
        for (n, i) in [
            (sxs(2, 3), FramingIndex::Zero),
            (sxs(2, 3), FramingIndex::One),
            (sxs(3, 5), FramingIndex::One),
            (sxs(2, 2), FramingIndex::Zero),
            (ManifoldExpr::sphere(4), FramingIndex::One),
            (ManifoldExpr::single(Atom::Surface(3)), FramingIndex::Zero),
            (
                sxs(2, 3).connected_sum(&ManifoldExpr::single(Atom::Wu)).unwrap(),
                FramingIndex::Zero,
            ),
        ] {
            let rewritten = suspend(&n, i).unwrap();
            assert_eq!(
                rewritten.homology(),
                suspension_homology(&n, i),
                "mismatch for {n} index {i}"
            );
        }
    }

    #[test]
    fn w2_of_suspensions() {
        assert_eq!(
            suspension_w2(&ManifoldExpr::single(Atom::TwistedProduct(3))),
            Ok(true)
        );
        assert_eq!(suspension_w2(&repeated(Atom::SphereProduct(2, 3), 3)), Ok(false));
        assert_eq!(suspension_w2(&ManifoldExpr::sphere(4)), Ok(false));
        assert_eq!(
            suspension_w2(&ManifoldExpr::single(Atom::Surface(1))),
            Err(Error::RestrictionUnavailable(2))
        );
    }

    #[test]
    fn homology_sphere_detection() {
        assert!(is_homology_sphere(&ManifoldExpr::sphere(7)));
        assert!(!is_homology_sphere(&ManifoldExpr::single(Atom::M(Int::from(3)))));
    }

    #[test]
    fn surface_pi1_presentations() {
        let free = surface_pi1(1, FramingIndex::Zero);
        assert_eq!(free.to_string(), "<a1,b1|>");
        assert_eq!(free.abelianization(), fg(2, &[]));

        let twisted = surface_pi1(1, FramingIndex::One);
        assert_eq!(
            twisted.to_string(),
            "<a1,b1,z|a1za1^-1z^-1,b1zb1^-1z^-1,za1b1a1^-1b1^-1>"
        );
        assert_eq!(twisted.abelianization(), fg(2, &[]));

        assert_eq!(surface_pi1(0, FramingIndex::Zero), GroupPresentation::trivial());
        assert_eq!(surface_pi1(0, FramingIndex::Zero).abelianization(), fg(0, &[]));
    }

    #[test]
    fn word_reduction() {
        let w = Word::from_syllables([(0, 1), (0, -1), (1, 2), (1, -1), (1, -1), (2, 3)]);
        assert_eq!(w.syllables(), &[(2, 3)]);
    }
}
