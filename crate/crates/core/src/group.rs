//! Finitely generated abelian groups in invariant-factor canonical form, and
//! graded groups built from them.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, DenseMatrix};
use crate::poly::IntPolynomial;
use crate::scalar::IntScalar;

/// Free rank plus torsion coefficients in divisibility order d1 | d2 | ...,
/// every entry >= 2. Structural equality is group isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbGroup<T> {
    free_rank: usize,
    torsion: Vec<T>,
}

/// Bring an arbitrary multiset of cyclic orders into the invariant-factor
/// chain. Repeatedly replaces an incomparable pair by (gcd, lcm); the sorted
/// multiset grows lexicographically at each step, so this terminates. Works
/// without factoring, which matters for torsion coming out of Smith normal
/// forms of random matrices.
fn invariant_factors<T: IntScalar>(vals: Vec<T>) -> Vec<T> {
    let one = T::one();
    let mut vals: Vec<T> = vals
        .into_iter()
        .map(|v| v.abs())
        .filter(|v| *v > one)
        .collect();
    loop {
        vals.sort();
        let mut changed = false;
        'scan: for i in 0..vals.len() {
            for j in i + 1..vals.len() {
                if !vals[j].is_multiple_of(&vals[i]) {
                    let g = vals[i].gcd(&vals[j]);
                    let l = vals[i].lcm(&vals[j]);
                    vals[i] = g;
                    vals[j] = l;
                    changed = true;
                    break 'scan;
                }
            }
        }
        if !changed {
            break;
        }
        vals.retain(|v| *v > one);
    }
    vals
}

impl<T: IntScalar> FgAbGroup<T> {
    pub fn new(free_rank: usize, torsion: Vec<T>) -> Self {
        FgAbGroup {
            free_rank,
            torsion: invariant_factors(torsion),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new())
    }

    pub fn cyclic(order: T) -> Self {
        Self::new(0, vec![order])
    }

    /// Z_d ⊕ Z_d
    pub fn torsion_pair(d: T) -> Self {
        Self::new(0, vec![d.clone(), d])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        Self::new(self.free_rank + other.free_rank, torsion)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.free_rank,
            "torsion": self.torsion.iter().map(int_to_json).collect::<Vec<_>>(),
        })
    }
}

fn int_to_json<T: IntScalar>(v: &T) -> Value {
    // Torsion coefficients are almost always small; fall back to a decimal
    // string for values outside u64.
    let s = v.to_string();
    match s.parse::<u64>() {
        Ok(n) => json!(n),
        Err(_) => json!(s),
    }
}

impl<T: IntScalar> fmt::Display for FgAbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<T: IntScalar> fmt::Debug for FgAbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Z^rows / im(A) in canonical form.
pub fn cokernel<T: IntScalar>(a: &DenseMatrix<T>) -> FgAbGroup<T> {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion: Vec<T> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    FgAbGroup::new(a.rows() - rank, torsion)
}

/// cols − rank(A).
pub fn kernel_rank<T: IntScalar>(a: &DenseMatrix<T>) -> usize {
    a.kernel_rank()
}

/// Degreewise abelian group with finite support; absent degrees are zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedGroup<T> {
    groups: BTreeMap<u32, FgAbGroup<T>>,
}

impl<T: IntScalar> GradedGroup<T> {
    pub fn new() -> Self {
        GradedGroup {
            groups: BTreeMap::new(),
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, FgAbGroup<T>)>) -> Self {
        let mut g = Self::new();
        for (d, grp) in pairs {
            g.add(d, grp);
        }
        g
    }

    /// Direct-sum `group` into degree `degree`.
    pub fn add(&mut self, degree: u32, group: FgAbGroup<T>) {
        if group.is_zero() {
            return;
        }
        match self.groups.remove(&degree) {
            Some(cur) => {
                self.groups.insert(degree, cur.direct_sum(&group));
            }
            None => {
                self.groups.insert(degree, group);
            }
        }
    }

    pub fn at(&self, degree: u32) -> FgAbGroup<T> {
        self.groups
            .get(&degree)
            .cloned()
            .unwrap_or_else(FgAbGroup::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (&u32, &FgAbGroup<T>)> {
        self.groups.iter()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.groups.keys().next_back().copied()
    }

    pub fn graded_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, g) in &other.groups {
            out.add(*d, g.clone());
        }
        out
    }

    /// Move degree i to i + d. Errors when any degree would become negative.
    pub fn shift(&self, d: i64) -> Result<Self> {
        let mut out = Self::new();
        for (deg, g) in &self.groups {
            let target = i64::from(*deg) + d;
            if target < 0 {
                return Err(Error::NegativeDegree);
            }
            out.add(target as u32, g.clone());
        }
        Ok(out)
    }

    /// Drop the degree-0 part (reduced homology of a connected space).
    pub fn reduced(&self) -> Self {
        let mut out = self.clone();
        out.groups.remove(&0);
        out
    }

    /// Drop one degree (used for H_*(N - {x0}): puncturing a closed oriented
    /// n-manifold kills exactly H_n for the classes handled here).
    pub fn without_degree(&self, degree: u32) -> Self {
        let mut out = self.clone();
        out.groups.remove(&degree);
        out
    }

    /// Coefficient at degree i is the free rank there; torsion is invisible.
    pub fn poincare_polynomial(&self) -> IntPolynomial {
        let n = self.max_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![0i64; n];
        for (d, g) in &self.groups {
            coeffs[*d as usize] = g.free_rank() as i64;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.groups
                .iter()
                .map(|(d, g)| {
                    let mut obj = g.to_json();
                    obj.as_object_mut()
                        .expect("group json is an object")
                        .insert("degree".into(), json!(d));
                    obj
                })
                .collect(),
        )
    }
}

impl<T: IntScalar> fmt::Display for GradedGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self
            .groups
            .iter()
            .map(|(d, g)| format!("H_{d} = {g}"))
            .collect();
        write!(f, "{}", lines.join("; "))
    }
}

impl<T: IntScalar> fmt::Debug for GradedGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn g(rank: usize, torsion: &[i64]) -> FgAbGroup<Int> {
        FgAbGroup::new(rank, torsion.iter().map(|&t| Int::from(t)).collect())
    }

    #[test]
    fn canonical_chain() {
        assert_eq!(g(0, &[2, 3]), g(0, &[6]));
        assert_eq!(g(0, &[2, 2, 3, 3]), g(0, &[6, 6]));
        assert_eq!(g(0, &[4, 2]).torsion(), &[Int::from(2), Int::from(4)]);
        assert_eq!(g(0, &[2, 6, 4]).torsion(), &[Int::from(2), Int::from(2), Int::from(12)]);
        assert_eq!(g(3, &[1, 1]), g(3, &[]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(0, &[]).to_string(), "0");
        assert_eq!(g(1, &[]).to_string(), "Z");
        assert_eq!(g(2, &[3, 3]).to_string(), "Z^2 + Z/3 + Z/3");
    }

    #[test]
    fn direct_sum_example() {
        assert_eq!(g(1, &[]).direct_sum(&g(0, &[2])), g(1, &[2]));
    }

    #[test]
    fn cokernel_examples() {
        let a = DenseMatrix::<Int>::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 0]]);
        assert_eq!(cokernel(&a), g(1, &[2]));
        assert_eq!(cokernel(&DenseMatrix::<Int>::zero(2, 2)), g(2, &[]));
        assert_eq!(cokernel(&DenseMatrix::<Int>::identity(4)), g(0, &[]));
    }

    #[test]
    fn cokernel_invariant_under_unimodular_ops() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let r = rng.gen_range(1..=5);
            let c = rng.gen_range(1..=5);
            let mut a = DenseMatrix::<Int>::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    a.set(i, j, Int::from(rng.gen_range(-6i64..=6)));
                }
            }
            let base = cokernel(&a);
            let mut b = a.clone();
            for _ in 0..10 {
                match rng.gen_range(0..4) {
                    0 => {
                        let (x, y) = (rng.gen_range(0..r), rng.gen_range(0..r));
                        b.swap_rows(x, y);
                    }
                    1 => {
                        let (x, y) = (rng.gen_range(0..c), rng.gen_range(0..c));
                        b.swap_cols(x, y);
                    }
                    2 => {
                        let (x, y) = (rng.gen_range(0..r), rng.gen_range(0..r));
                        if x != y {
                            b.add_row_multiple(x, y, &Int::from(rng.gen_range(-3i64..=3)));
                        }
                    }
                    _ => {
                        let (x, y) = (rng.gen_range(0..c), rng.gen_range(0..c));
                        if x != y {
                            b.add_col_multiple(x, y, &Int::from(rng.gen_range(-3i64..=3)));
                        }
                    }
                }
            }
            assert_eq!(cokernel(&b), base);
        }
    }

    #[test]
    fn shift_and_sum() {
        let s2 = GradedGroup::from_pairs([(0, g(1, &[])), (2, g(1, &[]))]);
        let shifted = s2.reduced().shift(1).unwrap();
        assert_eq!(shifted.at(3), g(1, &[]));
        assert_eq!(shifted.at(2), g(0, &[]));
        assert!(s2.shift(-1).is_err());
    }

    #[test]
    fn poincare_of_sphere_product() {
        // H_*(S^3 x S^3)
        let h = GradedGroup::from_pairs([(0, g(1, &[])), (3, g(2, &[])), (6, g(1, &[]))]);
        assert_eq!(h.poincare_polynomial().to_string(), "1+2t^3+t^6");
    }

    #[test]
    fn poincare_ignores_torsion() {
        // H_*(M_k): torsion only in degree 2
        let h = GradedGroup::from_pairs([(0, g(1, &[])), (2, g(0, &[3, 3])), (5, g(1, &[]))]);
        assert_eq!(h.poincare_polynomial().to_string(), "1+t^5");
    }

    #[test]
    fn poincare_additive_over_graded_sum() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let mut a = GradedGroup::new();
            let mut b = GradedGroup::new();
            for _ in 0..rng.gen_range(0..6) {
                a.add(rng.gen_range(0..8), g(rng.gen_range(0..4), &[]));
                b.add(rng.gen_range(0..8), g(rng.gen_range(0..4), &[2]));
            }
            let lhs = a.graded_sum(&b).poincare_polynomial();
            let rhs = a.poincare_polynomial() + b.poincare_polynomial();
            assert_eq!(lhs, rhs);
        }
    }
}
