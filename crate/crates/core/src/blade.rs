//! Canonical blade basis of the exterior algebra over Minkowski space.
//!
//! A blade is a wedge monomial `e^{μ₁}∧…∧e^{μ_k}` with strictly ascending
//! indices, encoded as a 4-bit mask (bit μ set ⇔ `e^μ` participates). All
//! product signs are reduced to this canonical order by counting the
//! transpositions of a stable merge of the two index lists; indices shared
//! by both factors contract with the metric.

use std::fmt;
use std::sync::OnceLock;

/// Dimension of the underlying space.
pub const DIM: usize = 4;
/// Number of canonical blades, 2^DIM.
pub const BLADE_COUNT: usize = 16;

/// The Minkowski metric, fixed signature (+1,−1,−1,−1).
///
/// η^{μν} = η_{μν} and η is its own inverse, so no distinction is made
/// between raising and lowering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metric;

impl Metric {
    /// Diagonal of η.
    pub const DIAG: [i32; DIM] = [1, -1, -1, -1];

    /// η^{μν} as an exact integer.
    pub const fn eta(mu: usize, nu: usize) -> i32 {
        if mu == nu {
            Self::DIAG[mu]
        } else {
            0
        }
    }
}

/// Index of a canonical basis blade: a 4-bit set over {0,1,2,3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeIndex(u8);

impl BladeIndex {
    /// The scalar blade `1` (empty mask).
    pub const SCALAR: BladeIndex = BladeIndex(0);
    /// The volume blade `e^0∧e^1∧e^2∧e^3`.
    pub const VOLUME: BladeIndex = BladeIndex(0b1111);

    /// Blade with the given mask. Panics if `mask >= 16`.
    pub fn new(mask: u8) -> BladeIndex {
        assert!(
            (mask as usize) < BLADE_COUNT,
            "blade mask {mask} out of range"
        );
        BladeIndex(mask)
    }

    /// The basis covector `e^μ`. Panics if `mu >= 4`.
    pub fn one_form(mu: usize) -> BladeIndex {
        assert!(mu < DIM, "covector index {mu} out of range");
        BladeIndex(1 << mu)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// Position in the dense coefficient array (equals the mask).
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Number of participating covectors.
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, mu: usize) -> bool {
        self.0 >> mu & 1 == 1
    }

    /// All 16 blades in mask order.
    pub fn all() -> impl Iterator<Item = BladeIndex> {
        (0..BLADE_COUNT as u8).map(BladeIndex)
    }

    /// Ascending covector indices of this blade.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..DIM).filter(move |mu| mask >> mu & 1 == 1)
    }
}

impl fmt::Display for BladeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for mu in self.indices() {
            if !first {
                write!(f, "^")?;
            }
            write!(f, "e{mu}")?;
            first = false;
        }
        Ok(())
    }
}

/// Transpositions needed to merge the ascending index lists of `a` and `b`
/// into one ascending list (equal indices end up adjacent, a stable merge).
fn merge_swaps(mut a: u8, b: u8) -> u32 {
    let mut swaps = 0;
    a >>= 1;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    swaps
}

/// Exterior product of two blades: `None` when they share a covector,
/// otherwise the union blade with the reordering sign.
pub fn wedge_blades(a: BladeIndex, b: BladeIndex) -> Option<(BladeIndex, i32)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let sign = if merge_swaps(a.0, b.0).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Some((BladeIndex(a.0 | b.0), sign))
}

/// Clifford product of two blades.
///
/// The concatenated index list is brought to canonical order (reordering
/// sign from `merge_swaps`); each index present in both factors then sits in
/// an adjacent pair `e^μ e^μ` and contracts to η^{μμ}. The result is always
/// a single signed blade on mask `a XOR b`.
pub fn clifford_blades(a: BladeIndex, b: BladeIndex) -> (BladeIndex, i32) {
    let mut sign = if merge_swaps(a.0, b.0).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let mut common = a.0 & b.0;
    while common != 0 {
        let mu = common.trailing_zeros() as usize;
        sign *= Metric::DIAG[mu];
        common &= common - 1;
    }
    (BladeIndex(a.0 ^ b.0), sign)
}

/// Hodge dual of a blade: the complementary blade and its sign, with the
/// orientation fixed by ε_{0123} = 1.
pub fn hodge_blade(b: BladeIndex) -> (BladeIndex, i32) {
    static TABLE: OnceLock<[(BladeIndex, i32); BLADE_COUNT]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [(BladeIndex::SCALAR, 0); BLADE_COUNT];
        for blade in BladeIndex::all() {
            table[blade.index()] = hodge_from_epsilon_sum(blade);
        }
        table
    })[b.index()]
}

/// Completely antisymmetric symbol on four indices, ε_{0123} = 1.
fn levi_civita(indices: [usize; 4]) -> i32 {
    let mut seen = 0u8;
    for &mu in &indices {
        if seen >> mu & 1 == 1 {
            return 0;
        }
        seen |= 1 << mu;
    }
    permutation_parity(&indices)
}

/// Sign of the permutation sorting `seq` ascending (assumes distinct entries).
fn permutation_parity(seq: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Evaluates the dual of one blade directly from the ε-sum
///
///   ⋆Φ = 1/(k!(4−k)!) ε_{μ₁…μ₄} φ^{μ₁…μ_k} e^{μ_{k+1}}∧…∧e^{μ₄},
///
/// where φ is the antisymmetric coefficient tensor of the blade with indices
/// raised by η. All arithmetic stays in integers; the k!(4−k)! division is
/// exact and the sum lands on a single complementary blade.
fn hodge_from_epsilon_sum(blade: BladeIndex) -> (BladeIndex, i32) {
    const FACTORIAL: [i64; 5] = [1, 1, 2, 6, 24];
    let k = blade.grade();
    let blade_set = blade.mask();

    let mut totals = [0i64; BLADE_COUNT];
    let mut tuple = [0usize; 4];
    'outer: loop {
        let eps = levi_civita(tuple);
        if eps != 0 {
            // φ^{μ₁…μ_k}: nonzero only when the first k indices are a
            // permutation of the blade's index set.
            let mut first_set = 0u8;
            for &mu in &tuple[..k] {
                first_set |= 1 << mu;
            }
            if first_set == blade_set {
                let mut phi = permutation_parity(&tuple[..k]) as i64;
                for &mu in &tuple[..k] {
                    phi *= Metric::DIAG[mu] as i64;
                }
                // canonicalize e^{μ_{k+1}}∧…∧e^{μ₄}
                let tail_sign = permutation_parity(&tuple[k..]) as i64;
                let mut tail_mask = 0u8;
                for &mu in &tuple[k..] {
                    tail_mask |= 1 << mu;
                }
                totals[tail_mask as usize] += eps as i64 * phi * tail_sign;
            }
        }
        // next tuple in 0..4^4
        for slot in (0..4).rev() {
            tuple[slot] += 1;
            if tuple[slot] < DIM {
                continue 'outer;
            }
            tuple[slot] = 0;
            if slot == 0 {
                break 'outer;
            }
        }
    }

    let norm = FACTORIAL[k] * FACTORIAL[4 - k];
    let mut result = None;
    for (mask, &total) in totals.iter().enumerate() {
        if total != 0 {
            debug_assert!(total % norm == 0, "ε-sum not divisible by k!(4-k)!");
            debug_assert!(result.is_none(), "dual spread over several blades");
            result = Some((BladeIndex(mask as u8), (total / norm) as i32));
        }
    }
    result.expect("dual of a blade cannot vanish")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grades_partition_the_basis() {
        let mut counts = [0usize; 5];
        for b in BladeIndex::all() {
            counts[b.grade()] += 1;
        }
        assert_eq!(counts, [1, 4, 6, 4, 1]);
    }

    #[test]
    fn metric_is_diag_plus_minus() {
        for mu in 0..4 {
            for nu in 0..4 {
                let expected = if mu != nu {
                    0
                } else if mu == 0 {
                    1
                } else {
                    -1
                };
                assert_eq!(Metric::eta(mu, nu), expected);
            }
        }
    }

    #[test]
    fn wedge_blade_rules() {
        let e0 = BladeIndex::one_form(0);
        let e1 = BladeIndex::one_form(1);
        assert_eq!(wedge_blades(e0, e0), None);
        assert_eq!(wedge_blades(e0, e1), Some((BladeIndex::new(0b11), 1)));
        assert_eq!(wedge_blades(e1, e0), Some((BladeIndex::new(0b11), -1)));
        assert_eq!(wedge_blades(BladeIndex::SCALAR, e1), Some((e1, 1)));
    }

    #[test]
    fn clifford_blade_rules() {
        let e0 = BladeIndex::one_form(0);
        let e1 = BladeIndex::one_form(1);
        let e01 = BladeIndex::new(0b11);
        // e^μ e^μ = η^{μμ}
        assert_eq!(clifford_blades(e0, e0), (BladeIndex::SCALAR, 1));
        assert_eq!(clifford_blades(e1, e1), (BladeIndex::SCALAR, -1));
        // disjoint blades multiply like wedges
        assert_eq!(clifford_blades(e0, e1), (e01, 1));
        assert_eq!(clifford_blades(e1, e0), (e01, -1));
        // (e^0∧e^1)(e^0∧e^1) = -e^0e^0e^1e^1 = 1
        assert_eq!(clifford_blades(e01, e01), (BladeIndex::SCALAR, 1));
    }

    #[test]
    fn clifford_blades_associative_exhaustively() {
        for a in BladeIndex::all() {
            for b in BladeIndex::all() {
                for c in BladeIndex::all() {
                    let (ab, s_ab) = clifford_blades(a, b);
                    let (left, s_left) = clifford_blades(ab, c);
                    let (bc, s_bc) = clifford_blades(b, c);
                    let (right, s_right) = clifford_blades(a, bc);
                    assert_eq!((left, s_ab * s_left), (right, s_bc * s_right));
                }
            }
        }
    }

    #[test]
    fn anticommutators_reproduce_the_metric() {
        for mu in 0..4 {
            for nu in 0..4 {
                let a = BladeIndex::one_form(mu);
                let b = BladeIndex::one_form(nu);
                let (m1, s1) = clifford_blades(a, b);
                let (m2, s2) = clifford_blades(b, a);
                assert_eq!(m1, m2);
                let sum = if m1 == BladeIndex::SCALAR { s1 + s2 } else { 0 };
                // off the diagonal the two orderings cancel blade-wise
                if m1 != BladeIndex::SCALAR {
                    assert_eq!(s1 + s2, 0);
                }
                assert_eq!(sum, 2 * Metric::eta(mu, nu));
            }
        }
    }

    #[test]
    fn hodge_star_of_reference_blades() {
        // ⋆1 = e^0∧e^1∧e^2∧e^3, ⋆e^0 = e^1∧e^2∧e^3, ⋆(volume) = −1
        assert_eq!(hodge_blade(BladeIndex::SCALAR), (BladeIndex::VOLUME, 1));
        assert_eq!(
            hodge_blade(BladeIndex::one_form(0)),
            (BladeIndex::new(0b1110), 1)
        );
        assert_eq!(hodge_blade(BladeIndex::VOLUME), (BladeIndex::SCALAR, -1));
    }

    #[test]
    fn hodge_double_application_sign() {
        for b in BladeIndex::all() {
            let k = b.grade() as i32;
            let (dual, s1) = hodge_blade(b);
            assert_eq!(dual.grade(), 4 - b.grade());
            let (back, s2) = hodge_blade(dual);
            assert_eq!(back, b);
            let expected = if (k + 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(s1 * s2, expected);
        }
    }

    /// Independent route: enumerate the 24 permutations of (0,1,2,3) instead
    /// of scanning the full tuple space, and rebuild each dual from scratch.
    #[test]
    fn hodge_table_matches_permutation_enumeration() {
        fn permutations() -> Vec<[usize; 4]> {
            let mut out = Vec::new();
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        for d in 0..4 {
                            let p = [a, b, c, d];
                            if levi_civita(p) != 0 {
                                out.push(p);
                            }
                        }
                    }
                }
            }
            out
        }

        for blade in BladeIndex::all() {
            let k = blade.grade();
            let mut totals = [0i64; BLADE_COUNT];
            let mut contributing = 0i64;
            for perm in permutations() {
                let mut head = 0u8;
                for &mu in &perm[..k] {
                    head |= 1 << mu;
                }
                if head != blade.mask() {
                    continue;
                }
                contributing += 1;
                let mut term = levi_civita(perm) as i64;
                term *= permutation_parity(&perm[..k]) as i64;
                for &mu in &perm[..k] {
                    term *= Metric::DIAG[mu] as i64;
                }
                term *= permutation_parity(&perm[k..]) as i64;
                let mut tail = 0u8;
                for &mu in &perm[k..] {
                    tail |= 1 << mu;
                }
                totals[tail as usize] += term;
            }
            // exactly k!(4−k)! arrangements contribute, all to one blade
            let nonzero: Vec<_> = (0..BLADE_COUNT).filter(|&m| totals[m] != 0).collect();
            assert_eq!(nonzero.len(), 1);
            let mask = nonzero[0];
            let sign = totals[mask] / contributing;
            assert_eq!(
                hodge_blade(blade),
                (BladeIndex::new(mask as u8), sign as i32)
            );
        }
    }

    #[test]
    fn blade_display() {
        assert_eq!(BladeIndex::SCALAR.to_string(), "1");
        assert_eq!(BladeIndex::one_form(2).to_string(), "e2");
        assert_eq!(BladeIndex::new(0b1011).to_string(), "e0^e1^e3");
    }
}
