//! Closed oriented manifolds as formal connected sums of a fixed atom set,
//! with exact invariants: dimension, integral homology, Poincaré polynomial,
//! a w2 indicator, simple-connectivity and Euler characteristic.
//!
//! Connected sums are kept in a canonical form (atoms sorted by a fixed total
//! order, sphere summands absorbed), so structural equality decides equality
//! in the sphere-product semigroup.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::suspension::{self, FramingIndex};
use crate::{FgAb, Graded, Int};

/// Coefficient field of a projective-space atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    Complex,
    Quaternion,
}

/// One summand of a connected sum. Variant declaration order is the canonical
/// atom order (then lexicographic on parameters).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    /// S^n, n >= 1. Absorbed by canonicalization: A # S^n = A.
    Sphere(u32),
    /// S^p x S^q with 1 <= p <= q.
    SphereProduct(u32, u32),
    /// S^2 x~ S^q, the nontrivial S^q-bundle over S^2, q >= 2.
    TwistedProduct(u32),
    /// CP^n (n >= 2) or HP^n (n >= 2); n = 1 normalizes to a sphere.
    Projective(Field, u32),
    /// The Wu manifold W = SU(3)/SO(3).
    Wu,
    /// The 1-connected spin 5-manifold with H_2 = Z_k ⊕ Z_k, k >= 2.
    M(Int),
    /// X(i) is the non-spin 5-manifold with H_2 = Z_{2^i} ⊕ Z_{2^i}, i >= 1.
    X(u32),
    /// Orientable surface of genus g >= 1; g = 0 normalizes to S^2.
    Surface(u32),
    /// A suspension the rewrite rules could not resolve in closed form.
    Suspension(FramingIndex, ManifoldExpr),
}

impl Atom {
    pub fn dim(&self) -> u32 {
        match self {
            Atom::Sphere(n) => *n,
            Atom::SphereProduct(p, q) => p + q,
            Atom::TwistedProduct(q) => q + 2,
            Atom::Projective(Field::Complex, n) => 2 * n,
            Atom::Projective(Field::Quaternion, n) => 4 * n,
            Atom::Wu => 5,
            Atom::M(_) => 5,
            Atom::X(_) => 5,
            Atom::Surface(_) => 2,
            Atom::Suspension(_, inner) => inner.dim() + 1,
        }
    }

    /// Parameter-range check, used by the parser and CLI boundaries.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        match self {
            Atom::Sphere(n) if *n < 1 => bad("S(n) requires n >= 1".into()),
            Atom::SphereProduct(p, q) if *p < 1 || *q < 1 => {
                bad(format!("SxS({p},{q}) requires p, q >= 1"))
            }
            Atom::TwistedProduct(q) if *q < 2 => bad(format!("TwS({q}) requires q >= 2")),
            Atom::Projective(_, n) if *n < 1 => bad("projective space requires n >= 1".into()),
            Atom::M(k) if *k < Int::from(2) => bad(format!("M({k}) requires k >= 2")),
            Atom::X(i) if *i < 1 => bad(format!("X({i}) requires i >= 1")),
            Atom::Suspension(_, inner) => {
                if inner.dim() < 2 {
                    return Err(Error::DimensionTooSmall(inner.dim()));
                }
                for a in inner.atoms() {
                    a.validate()?;
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Resolve parameter aliases so each manifold has a single atom form.
    fn normalize(self) -> Atom {
        match self {
            Atom::SphereProduct(p, q) if p > q => Atom::SphereProduct(q, p),
            Atom::Projective(Field::Complex, 1) => Atom::Sphere(2),
            Atom::Projective(Field::Quaternion, 1) => Atom::Sphere(4),
            Atom::Surface(0) => Atom::Sphere(2),
            other => other,
        }
    }

    /// Full homology of the atom as a closed manifold.
    pub fn homology(&self) -> Graded {
        let z = FgAb::free(1);
        match self {
            Atom::Sphere(n) => Graded::from_pairs([(0, z.clone()), (*n, z)]),
            Atom::SphereProduct(p, q) => {
                let mut h = Graded::new();
                h.add(0, z.clone());
                h.add(*p, z.clone());
                h.add(*q, z.clone());
                h.add(p + q, z);
                h
            }
            // Additively the twisted product looks like the trivial one.
            Atom::TwistedProduct(q) => Atom::SphereProduct(2, *q).homology(),
            Atom::Projective(Field::Complex, n) => {
                Graded::from_pairs((0..=*n).map(|i| (2 * i, z.clone())))
            }
            Atom::Projective(Field::Quaternion, n) => {
                Graded::from_pairs((0..=*n).map(|i| (4 * i, z.clone())))
            }
            Atom::Wu => Graded::from_pairs([
                (0, z.clone()),
                (2, FgAb::cyclic(Int::from(2))),
                (5, z),
            ]),
            Atom::M(k) => Graded::from_pairs([
                (0, z.clone()),
                (2, FgAb::torsion_pair(k.clone())),
                (5, z),
            ]),
            Atom::X(i) => Graded::from_pairs([
                (0, z.clone()),
                (2, FgAb::torsion_pair(Int::from(1) << *i)),
                (5, z),
            ]),
            Atom::Surface(g) => Graded::from_pairs([
                (0, z.clone()),
                (1, FgAb::free(2 * *g as usize)),
                (2, z),
            ]),
            Atom::Suspension(_, inner) => suspension::suspension_homology_graded(
                &inner.homology(),
                inner.dim(),
            ),
        }
    }

    pub fn w2_nonzero(&self) -> bool {
        match self {
            Atom::Sphere(_) | Atom::SphereProduct(..) | Atom::M(_) | Atom::Surface(_) => false,
            Atom::TwistedProduct(_) | Atom::Wu | Atom::X(_) => true,
            Atom::Projective(Field::Complex, n) => n % 2 == 0,
            Atom::Projective(Field::Quaternion, _) => false,
            Atom::Suspension(_, inner) => inner.w2_nonzero(),
        }
    }

    pub fn is_simply_connected(&self) -> bool {
        match self {
            Atom::Sphere(n) => *n >= 2,
            Atom::SphereProduct(p, _) => *p >= 2,
            Atom::TwistedProduct(_) | Atom::Projective(..) | Atom::Wu | Atom::M(_) | Atom::X(_) => {
                true
            }
            Atom::Surface(_) => false,
            Atom::Suspension(_, inner) => inner.is_simply_connected(),
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            Atom::Sphere(_) => "S",
            Atom::SphereProduct(..) => "SxS",
            Atom::TwistedProduct(_) => "TwS",
            Atom::Projective(Field::Complex, _) => "CP",
            Atom::Projective(Field::Quaternion, _) => "HP",
            Atom::Wu => "W",
            Atom::M(_) => "M",
            Atom::X(_) => "X",
            Atom::Surface(_) => "Surf",
            Atom::Suspension(..) => "Sig",
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = self.kind_name();
        match self {
            Atom::Sphere(n) => json!({"kind": kind, "params": [n]}),
            Atom::SphereProduct(p, q) => json!({"kind": kind, "params": [p, q]}),
            Atom::TwistedProduct(q) => json!({"kind": kind, "params": [q]}),
            Atom::Projective(_, n) => json!({"kind": kind, "params": [n]}),
            Atom::Wu => json!({"kind": kind, "params": []}),
            Atom::M(k) => {
                let k = match k.to_string().parse::<u64>() {
                    Ok(v) => json!(v),
                    Err(_) => json!(k.to_string()),
                };
                json!({"kind": kind, "params": [k]})
            }
            Atom::X(i) => json!({"kind": kind, "params": [i]}),
            Atom::Surface(g) => json!({"kind": kind, "params": [g]}),
            Atom::Suspension(i, inner) => json!({
                "kind": kind,
                "params": [i.as_u8()],
                "inner": inner.to_json(),
            }),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Sphere(n) => write!(f, "S({n})"),
            Atom::SphereProduct(p, q) => write!(f, "SxS({p},{q})"),
            Atom::TwistedProduct(q) => write!(f, "TwS({q})"),
            Atom::Projective(Field::Complex, n) => write!(f, "CP({n})"),
            Atom::Projective(Field::Quaternion, n) => write!(f, "HP({n})"),
            Atom::Wu => write!(f, "W"),
            Atom::M(k) => write!(f, "M({k})"),
            Atom::X(i) => write!(f, "X({i})"),
            Atom::Surface(g) => write!(f, "Surf({g})"),
            Atom::Suspension(i, inner) => write!(f, "Sig{}({inner})", i.as_u8()),
        }
    }
}

/// Formal connected sum of atoms of a common dimension, in canonical form.
/// The empty sum is the sphere S^n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ManifoldExpr {
    dim: u32,
    atoms: Vec<Atom>,
}

impl ManifoldExpr {
    /// S^n as the empty connected sum.
    pub fn sphere(n: u32) -> Self {
        assert!(n >= 1, "sphere dimension must be >= 1");
        ManifoldExpr {
            dim: n,
            atoms: Vec::new(),
        }
    }

    pub fn single(atom: Atom) -> Self {
        let dim = atom.dim();
        Self::from_atoms(dim, vec![atom]).expect("single atom matches its own dimension")
    }

    /// Build from a multiset of atoms; normalizes parameters, absorbs sphere
    /// summands and sorts. Every atom must have dimension `dim`.
    pub fn from_atoms(dim: u32, atoms: Vec<Atom>) -> Result<Self> {
        let mut out = Vec::with_capacity(atoms.len());
        for atom in atoms {
            if atom.dim() != dim {
                return Err(Error::DimensionMismatch(atom.dim(), dim));
            }
            let atom = atom.normalize();
            if !matches!(atom, Atom::Sphere(_)) {
                out.push(atom);
            }
        }
        out.sort();
        Ok(ManifoldExpr { dim, atoms: out })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_sphere(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Self::from_atoms(self.dim, atoms)
    }

    /// Connected sum of many expressions of dimension `dim`.
    pub fn sum_of(dim: u32, parts: impl IntoIterator<Item = ManifoldExpr>) -> Result<Self> {
        let mut atoms = Vec::new();
        for p in parts {
            if p.dim != dim {
                return Err(Error::DimensionMismatch(p.dim, dim));
            }
            atoms.extend(p.atoms);
        }
        Self::from_atoms(dim, atoms)
    }

    /// Expressions are kept canonical by construction; re-normalizing is
    /// idempotent.
    pub fn canonicalize(&self) -> Self {
        Self::from_atoms(self.dim, self.atoms.clone()).expect("atoms already dimension-checked")
    }

    /// H_0 = H_n = Z; in between, the direct sum over the atoms.
    pub fn homology(&self) -> Graded {
        let n = self.dim;
        let mut h = Graded::new();
        for atom in &self.atoms {
            for (d, g) in atom.homology().support() {
                if *d > 0 && *d < n {
                    h.add(*d, g.clone());
                }
            }
        }
        h.add(0, FgAb::free(1));
        h.add(n, FgAb::free(1));
        h
    }

    pub fn poincare_poly(&self) -> IntPolynomial {
        self.homology().poincare_polynomial()
    }

    pub fn w2_nonzero(&self) -> bool {
        self.atoms.iter().any(Atom::w2_nonzero)
    }

    pub fn is_simply_connected(&self) -> bool {
        self.dim >= 2 && self.atoms.iter().all(Atom::is_simply_connected)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.poincare_poly().eval(-1)
    }

    /// Atom multiplicities in canonical order, for printing.
    pub fn multiplicities(&self) -> Vec<(&Atom, usize)> {
        let mut out: Vec<(&Atom, usize)> = Vec::new();
        for atom in &self.atoms {
            match out.last_mut() {
                Some((a, n)) if *a == atom => *n += 1,
                _ => out.push((atom, 1)),
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.dim,
            "atoms": self.atoms.iter().map(Atom::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "S({})", self.dim);
        }
        let parts: Vec<String> = self
            .multiplicities()
            .into_iter()
            .map(|(a, n)| {
                if n == 1 {
                    a.to_string()
                } else {
                    format!("{n}*{a}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" # "))
    }
}

impl fmt::Debug for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// #_count A for a single atom.
pub fn repeated(atom: Atom, count: usize) -> ManifoldExpr {
    let dim = atom.dim();
    ManifoldExpr::from_atoms(dim, vec![atom; count]).expect("uniform atom dimensions")
}
