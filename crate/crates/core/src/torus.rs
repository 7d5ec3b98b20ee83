//! Total spaces of full torus bundles over 1-connected 4-manifolds.
//!
//! Three independent computations of the same manifold live here:
//!
//! * [`q_manifold`] — the closed-form connected sum of sphere products whose
//!   multiplicities come from [`b_coefficients`];
//! * [`torus_tower`] — an iterated circle-bundle construction that replaces
//!   the summand hosting the Euler class and suspends the rest, one torus
//!   factor at a time;
//! * [`spectral_e3_poincare`] — a brute-force page-two-to-page-three
//!   computation over the explicit monomial basis, with all ranks obtained
//!   by exact integer elimination. It never consults the closed form, which
//!   is what makes it an oracle for the other two.

use crate::error::{Error, Result};
use crate::manifold::{repeated, Atom, ManifoldExpr};
use crate::matrix::SparseMatrix;
use crate::poly::IntPolynomial;
use crate::suspension::{suspend, FramingIndex};

/// Basis sizes grow like 2^k; past this the oracle refuses rather than
/// thrash.
pub const MAX_ORACLE_K: u32 = 16;

/// Input to the torus-bundle computation: only the second Betti number of
/// the 4-manifold base matters, since the total space is independent of the
/// chosen basis of second cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusBundleSpec {
    k: u32,
}

impl TorusBundleSpec {
    pub fn new(k: u32) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument("k must be >= 1".into()));
        }
        Ok(TorusBundleSpec { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

fn binom(n: i64, j: i64) -> i128 {
    if j < 0 || j > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for t in 0..j {
        acc = acc * (n - t) as i128 / (t + 1) as i128;
    }
    acc
}

/// Multiplicity coefficients b_1 .. b_{floor(k/2)}:
/// b_i = (k-1) C(k-1, i) - C(k-1, i+1) + (k-1) C(k-1, i-1) - C(k-1, i-2),
/// with C(n, j) = 0 outside 0 <= j <= n.
pub fn b_coefficients(k: u32) -> Result<Vec<i64>> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    let n = i64::from(k) - 1;
    (1..=i64::from(k) / 2)
        .map(|i| {
            let v = (n as i128) * binom(n, i) - binom(n, i + 1) + (n as i128) * binom(n, i - 1)
                - binom(n, i - 2);
            i64::try_from(v)
                .map_err(|_| Error::InvalidArgument(format!("k = {k} overflows coefficients")))
        })
        .collect()
}

const MAX_ATOMS: usize = 4_000_000;

/// The closed form: #_{c_i} (S^{i+2} x S^{k-i+2}) for i = 1..floor(k/2),
/// where c_i = b_i except that the last is halved for even k. The empty sum
/// (k = 1) is the 5-sphere.
pub fn q_manifold(k: u32) -> Result<ManifoldExpr> {
    let b = b_coefficients(k)?;
    let r = (k / 2) as usize;
    let dim = k + 4;
    let mut atoms = Vec::new();
    for i in 1..=r {
        let c = if k % 2 == 0 && i == r {
            let br = b[r - 1];
            if br % 2 != 0 {
                return Err(Error::InvalidArgument(
                    "internal consistency: the last coefficient must be even for even k".into(),
                ));
            }
            br / 2
        } else {
            b[i - 1]
        };
        let count = usize::try_from(c)
            .map_err(|_| Error::InvalidArgument(format!("k = {k} overflows multiplicities")))?;
        if atoms.len() + count > MAX_ATOMS {
            return Err(Error::InvalidArgument(format!(
                "k = {k} is too large to materialize the sum"
            )));
        }
        atoms.extend(std::iter::repeat_n(
            Atom::SphereProduct(i as u32 + 2, k - i as u32 + 2),
            count,
        ));
    }
    ManifoldExpr::from_atoms(dim, atoms)
}

/// Total space of the full torus bundle over a 1-connected 4-manifold with
/// second Betti number `spec.k`.
pub fn torus_total_space(spec: &TorusBundleSpec) -> Result<ManifoldExpr> {
    q_manifold(spec.k)
}

/// Second independent route to the closed form: start from the circle-bundle
/// quotient #_{k-1}(S^2 x S^3) and climb one circle bundle at a time. Each
/// step removes the S^2 x S^{n-2} summand hosting the Euler class, replaces
/// it with S^3 x S^{n-2}, and applies the index-1 suspension to every other
/// summand.
pub fn torus_tower(k: u32) -> Result<ManifoldExpr> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    let mut m = repeated(Atom::SphereProduct(2, 3), k as usize - 1);
    for _ in 0..k - 1 {
        let n = m.dim();
        let host = Atom::SphereProduct(2, n - 2);
        let pos = m
            .atoms()
            .iter()
            .position(|a| *a == host)
            .expect("each tower step has exactly one summand left hosting the Euler class");
        let mut rest = m.atoms().to_vec();
        rest.remove(pos);
        let mut parts = vec![ManifoldExpr::single(Atom::SphereProduct(3, n - 2))];
        for atom in rest {
            parts.push(suspend(&ManifoldExpr::single(atom), FramingIndex::One)?);
        }
        m = ManifoldExpr::sum_of(n + 1, parts)?;
    }
    Ok(m)
}

/// The four basis blocks of the page-two term
/// H^*(#_{k-1}(S^2 x S^3)) ⊗ Λ(t_1, ..., t_{k-1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    B1,
    B2,
    B3,
    B4,
}

/// Base cohomology class of a monomial basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseClass {
    /// 1, degree 0
    One,
    /// ω_i, degree 2
    Omega(u32),
    /// y_i, degree 3
    Y(u32),
    /// z, degree 5
    Z,
}

impl BaseClass {
    pub fn degree(&self) -> u32 {
        match self {
            BaseClass::One => 0,
            BaseClass::Omega(_) => 2,
            BaseClass::Y(_) => 3,
            BaseClass::Z => 5,
        }
    }
}

/// A monomial x ⊗ t_I; the multi-index I ⊆ {1, ..., k-1} is a bitmask with
/// bit j standing for index j+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpectralBasisElement {
    pub base: BaseClass,
    pub index_mask: u32,
}

impl SpectralBasisElement {
    pub fn degree(&self) -> u32 {
        self.base.degree() + self.index_mask.count_ones()
    }

    /// 1 ∈ B2 alongside the ω-monomials; 1 ⊗ t_I with I ≠ ∅ is B1.
    pub fn block(&self) -> Block {
        match self.base {
            BaseClass::One if self.index_mask != 0 => Block::B1,
            BaseClass::One => Block::B2,
            BaseClass::Omega(_) => Block::B2,
            BaseClass::Y(_) => Block::B3,
            BaseClass::Z => Block::B4,
        }
    }

    /// Sorted 1-based indices of the multi-index.
    pub fn indices(&self) -> Vec<u32> {
        (0..32)
            .filter(|j| self.index_mask & (1 << j) != 0)
            .map(|j| j + 1)
            .collect()
    }
}

fn check_oracle_k(k: u32) -> Result<u32> {
    if k < 2 {
        return Err(Error::InvalidArgument(
            "the page-three computation needs k >= 2".into(),
        ));
    }
    if k > MAX_ORACLE_K {
        return Err(Error::InvalidArgument(format!(
            "k = {k} exceeds the oracle limit {MAX_ORACLE_K}"
        )));
    }
    Ok(k - 1)
}

/// Masks over {1..k-1} with the given popcount, in binary-counter order.
fn masks_of_size(bits: u32, size: u32) -> Vec<u32> {
    (0u32..1 << bits)
        .filter(|m| m.count_ones() == size)
        .collect()
}

/// All basis elements of the given total degree, ordered block by block and
/// in binary-counter order within each block.
pub fn basis_at(k: u32, degree: u32) -> Result<Vec<SpectralBasisElement>> {
    let bits = check_oracle_k(k)?;
    let mut out = Vec::new();
    let d = degree;
    // B1: 1 ⊗ t_I, I ≠ ∅
    if d >= 1 && d <= bits {
        out.extend(masks_of_size(bits, d).into_iter().map(|m| SpectralBasisElement {
            base: BaseClass::One,
            index_mask: m,
        }));
    }
    // B2: 1, and ω_i ⊗ t_I
    if d == 0 {
        out.push(SpectralBasisElement {
            base: BaseClass::One,
            index_mask: 0,
        });
    }
    if d >= 2 && d - 2 <= bits {
        for i in 1..=bits {
            out.extend(masks_of_size(bits, d - 2).into_iter().map(move |m| {
                SpectralBasisElement {
                    base: BaseClass::Omega(i),
                    index_mask: m,
                }
            }));
        }
    }
    // B3: y_i ⊗ t_I
    if d >= 3 && d - 3 <= bits {
        for i in 1..=bits {
            out.extend(masks_of_size(bits, d - 3).into_iter().map(move |m| {
                SpectralBasisElement {
                    base: BaseClass::Y(i),
                    index_mask: m,
                }
            }));
        }
    }
    // B4: z ⊗ t_I
    if d >= 5 && d - 5 <= bits {
        out.extend(masks_of_size(bits, d - 5).into_iter().map(|m| SpectralBasisElement {
            base: BaseClass::Z,
            index_mask: m,
        }));
    }
    Ok(out)
}

/// Position (1-based) of set bit `bit` within `mask`, counting from the low
/// end; this is the `s` in the sign (-1)^{s-1}.
fn position_in_mask(mask: u32, bit: u32) -> u32 {
    (mask & ((1 << bit) - 1)).count_ones() + 1
}

/// The differential restricted to B1 at total degree `degree`:
/// columns are 1 ⊗ t_I with |I| = degree, rows are ω_i ⊗ t_J with
/// |J| = degree - 1, and 1 ⊗ t_I maps to Σ_s (-1)^{s-1} ω_{i_s} ⊗ t_{I \ i_s}.
pub fn d2_block_b1(k: u32, degree: u32) -> Result<SparseMatrix<i64>> {
    let bits = check_oracle_k(k)?;
    if degree < 1 || degree > bits {
        return Ok(SparseMatrix::zero(0, 0));
    }
    let cols = masks_of_size(bits, degree);
    let row_masks = masks_of_size(bits, degree - 1);
    let row_index = |i: u32, mask: u32| -> usize {
        let mpos = row_masks.binary_search(&mask).expect("row mask enumerated");
        ((i - 1) as usize) * row_masks.len() + mpos
    };
    let mut m = SparseMatrix::zero(bits as usize * row_masks.len(), cols.len());
    for (c, &mask) in cols.iter().enumerate() {
        let mut s = 0;
        for bit in 0..bits {
            if mask & (1 << bit) != 0 {
                s += 1;
                let sign = if s % 2 == 1 { 1 } else { -1 };
                m.add_entry(row_index(bit + 1, mask & !(1 << bit)), c, sign);
            }
        }
    }
    Ok(m)
}

/// The differential restricted to B3 at total degree `degree`: columns are
/// y_i ⊗ t_I with 3 + |I| = degree, rows are z ⊗ t_J with |J| = |I| - 1, and
/// y_i ⊗ t_I maps to (-1)^{s-1} z ⊗ t_{I \ i} when i = i_s ∈ I, else to 0.
pub fn d2_block_b3(k: u32, degree: u32) -> Result<SparseMatrix<i64>> {
    let bits = check_oracle_k(k)?;
    if degree < 3 || degree - 3 > bits {
        return Ok(SparseMatrix::zero(0, 0));
    }
    let size = degree - 3;
    let col_masks = masks_of_size(bits, size);
    if size == 0 {
        return Ok(SparseMatrix::zero(0, bits as usize * col_masks.len()));
    }
    let row_masks = masks_of_size(bits, size - 1);
    let mut m = SparseMatrix::zero(row_masks.len(), bits as usize * col_masks.len());
    for i in 1..=bits {
        for (mpos, &mask) in col_masks.iter().enumerate() {
            let bit = i - 1;
            if mask & (1 << bit) == 0 {
                continue;
            }
            let col = (i - 1) as usize * col_masks.len() + mpos;
            let s = position_in_mask(mask, bit);
            let sign = if s % 2 == 1 { 1 } else { -1 };
            let target = mask & !(1 << bit);
            let row = row_masks.binary_search(&target).expect("row mask enumerated");
            m.add_entry(row, col, sign);
        }
    }
    Ok(m)
}

/// Full differential from total degree `degree` to `degree + 1`, with rows
/// and columns ordered as in [`basis_at`]. Only the B1 and B3 columns are
/// nonzero; B2 and B4 are cycles.
pub fn d2_full_matrix(k: u32, degree: u32) -> Result<SparseMatrix<i64>> {
    let bits = check_oracle_k(k)?;
    let dom = basis_at(k, degree)?;
    let cod = basis_at(k, degree + 1)?;
    let index: std::collections::HashMap<SpectralBasisElement, usize> =
        cod.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let find = |e: &SpectralBasisElement| -> usize {
        *index.get(e).expect("image element enumerated")
    };
    let mut m = SparseMatrix::zero(cod.len(), dom.len());
    for (c, el) in dom.iter().enumerate() {
        match el.base {
            BaseClass::One if el.index_mask != 0 => {
                let mut s = 0;
                for bit in 0..bits {
                    if el.index_mask & (1 << bit) != 0 {
                        s += 1;
                        let sign = if s % 2 == 1 { 1 } else { -1 };
                        let target = SpectralBasisElement {
                            base: BaseClass::Omega(bit + 1),
                            index_mask: el.index_mask & !(1 << bit),
                        };
                        m.add_entry(find(&target), c, sign);
                    }
                }
            }
            BaseClass::Y(i) => {
                let bit = i - 1;
                if el.index_mask & (1 << bit) != 0 {
                    let s = position_in_mask(el.index_mask, bit);
                    let sign = if s % 2 == 1 { 1 } else { -1 };
                    let target = SpectralBasisElement {
                        base: BaseClass::Z,
                        index_mask: el.index_mask & !(1 << bit),
                    };
                    m.add_entry(find(&target), c, sign);
                }
            }
            _ => {}
        }
    }
    Ok(m)
}

/// Outcome of the page-three computation.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    /// Free rank of the page-three term per total degree (index = degree).
    pub e3_ranks: Vec<usize>,
    pub poincare: IntPolynomial,
    /// All differentials had unit elementary divisors, so every page-three
    /// group is torsion-free.
    pub torsion_free: bool,
}

/// Brute-force page-three Poincaré polynomial: assemble the differential
/// blocks per degree and compute exact ranks by integer elimination.
pub fn spectral_e3_report(k: u32) -> Result<SpectralReport> {
    check_oracle_k(k)?;
    let top = k + 4;
    let mut sizes = Vec::with_capacity(top as usize + 1);
    let mut ranks = Vec::with_capacity(top as usize + 1);
    let mut torsion_free = true;
    for d in 0..=top {
        sizes.push(basis_at(k, d)?.len());
        let (r1, c1) = d2_block_b1(k, d)?.rank_and_unit_certificate();
        let (r3, c3) = d2_block_b3(k, d)?.rank_and_unit_certificate();
        ranks.push(r1 + r3);
        torsion_free &= c1 && c3;
    }
    let e3_ranks: Vec<usize> = (0..=top as usize)
        .map(|d| {
            let incoming = if d == 0 { 0 } else { ranks[d - 1] };
            sizes[d] - ranks[d] - incoming
        })
        .collect();
    let poincare = IntPolynomial::from_coeffs(e3_ranks.iter().map(|&r| r as i64).collect());
    Ok(SpectralReport {
        e3_ranks,
        poincare,
        torsion_free,
    })
}

pub fn spectral_e3_poincare(k: u32) -> Result<IntPolynomial> {
    Ok(spectral_e3_report(k)?.poincare)
}
