//! Three-qubit pure-state entanglement invariants over exact amplitudes.
//!
//! States are kept unnormalized with an explicit squared norm so integer
//! amplitude vectors stay exact; every reduced density matrix, determinant
//! and characteristic polynomial is computed in exact arithmetic, and
//! floating point enters only when extracting eigenvalue approximations
//! from exact polynomial coefficients.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use crate::dyadic::DyadicComplex;
use crate::matrix::ExactMatrix;

/// Error threshold: an eigenvalue approximation this far below zero, or a
/// root-sum/trace mismatch this large, is a solver inconsistency.
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;
/// Expected numerical noise floor for clamping marginal negatives to zero.
pub const NEGATIVE_CLAMP: f64 = 1e-10;
/// Threshold separating "zero" from "nonzero" tangles during classification.
pub const CLASS_EPSILON: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum TangleError {
    #[error("expected an 8-dimensional matrix, got dimension {dim}")]
    WrongDimension { dim: usize },
    #[error("row {row} out of range for dimension {dim}")]
    RowOutOfRange { row: usize, dim: usize },
    #[error("state has zero norm")]
    ZeroState,
    #[error("eigenvalue extraction inconsistent: {detail}")]
    SpectrumInconsistent { detail: String },
}

/// Rounds to 12 significant digits; used everywhere a real number is
/// serialized so reports are stable across runs and platforms.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0f64.max(x);
    }
    format!("{x:.11e}").parse().expect("scientific notation roundtrip")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Qubit {
    A,
    B,
    C,
}

impl Qubit {
    pub const ALL: [Qubit; 3] = [Qubit::A, Qubit::B, Qubit::C];

    pub fn as_str(&self) -> &'static str {
        match self {
            Qubit::A => "A",
            Qubit::B => "B",
            Qubit::C => "C",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pair {
    AB,
    AC,
    BC,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::AB, Pair::AC, Pair::BC];

    pub fn as_str(&self) -> &'static str {
        match self {
            Pair::AB => "AB",
            Pair::AC => "AC",
            Pair::BC => "BC",
        }
    }
}

/// Pure three-qubit state. Amplitude index is the binary word abc with
/// qubit A as the most significant bit: index = 4a + 2b + c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureState3 {
    amps: [DyadicComplex; 8],
    /// Sum of squared amplitude moduli; real and positive.
    norm_sq: DyadicComplex,
}

impl PureState3 {
    pub fn new(amps: [DyadicComplex; 8]) -> Result<Self, TangleError> {
        let mut n = DyadicComplex::zero();
        for a in &amps {
            n = n.add(&a.norm_sq());
        }
        if n.is_zero() {
            return Err(TangleError::ZeroState);
        }
        Ok(PureState3 { amps, norm_sq: n })
    }

    pub fn from_ints(amps: [i64; 8]) -> Result<Self, TangleError> {
        Self::new(amps.map(|v| DyadicComplex::from_int(v)))
    }

    /// (|000> + |111>), unnormalized.
    pub fn ghz() -> Self {
        Self::from_ints([1, 0, 0, 0, 0, 0, 0, 1]).expect("nonzero amplitudes")
    }

    /// (|001> + |010> + |100>), unnormalized.
    pub fn w_state() -> Self {
        Self::from_ints([0, 1, 1, 0, 1, 0, 0, 0]).expect("nonzero amplitudes")
    }

    pub fn amplitudes(&self) -> &[DyadicComplex; 8] {
        &self.amps
    }

    pub fn norm_sq(&self) -> &DyadicComplex {
        &self.norm_sq
    }

    pub fn scaled(&self, factor: &DyadicComplex) -> Result<Self, TangleError> {
        Self::new(self.amps.clone().map(|a| a.mul(factor)))
    }
}

/// Amplitudes of one row of an 8x8 matrix as a three-qubit state.
pub fn state_from_row(m: &ExactMatrix, row: usize) -> Result<PureState3, TangleError> {
    if m.dim() != 8 {
        return Err(TangleError::WrongDimension { dim: m.dim() });
    }
    if row >= 8 {
        return Err(TangleError::RowOutOfRange { row, dim: m.dim() });
    }
    let amps: [DyadicComplex; 8] = std::array::from_fn(|c| m.entry(row, c).clone());
    PureState3::new(amps)
}

/// Two-qubit density matrix held as exact unnormalized entries plus the
/// exact normalization: rho = entries / norm, so trace(entries) == norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatrix4 {
    entries: [[DyadicComplex; 4]; 4],
    norm: DyadicComplex,
}

/// Single-qubit density matrix in the same unnormalized representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatrix2 {
    entries: [[DyadicComplex; 2]; 2],
    norm: DyadicComplex,
}

/// Determinant of the square submatrix on the given rows and columns,
/// by Laplace expansion along the first selected row.
fn det_sub(e: &[[DyadicComplex; 4]; 4], rows: &[usize], cols: &[usize]) -> DyadicComplex {
    if rows.len() == 1 {
        return e[rows[0]][cols[0]].clone();
    }
    let mut acc = DyadicComplex::zero();
    for (k, &c) in cols.iter().enumerate() {
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e[rows[0]][c].mul(&det_sub(e, &rows[1..], &rest));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Elementary symmetric functions e1..e4 of the eigenvalues, as sums of
/// principal minors of each size.
fn elementary_symmetric(e: &[[DyadicComplex; 4]; 4]) -> [DyadicComplex; 4] {
    let mut es: [DyadicComplex; 4] = std::array::from_fn(|_| DyadicComplex::zero());
    for mask in 1u32..16 {
        let idx: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        let d = det_sub(e, &idx, &idx);
        es[idx.len() - 1] = es[idx.len() - 1].add(&d);
    }
    es
}

impl DensityMatrix4 {
    /// Wraps exact entries with their normalization. The entries must be
    /// Hermitian with trace equal to `norm` and nonnegative leading
    /// principal minors; violations are construction bugs and panic.
    pub fn from_unnormalized(entries: [[DyadicComplex; 4]; 4], norm: DyadicComplex) -> Self {
        let mut trace = DyadicComplex::zero();
        for i in 0..4 {
            trace = trace.add(&entries[i][i]);
            for j in 0..4 {
                assert!(
                    entries[i][j] == entries[j][i].conj(),
                    "density matrix must be Hermitian"
                );
            }
        }
        assert!(trace == norm, "trace must equal the normalization");
        for k in 1..=4 {
            let idx: Vec<usize> = (0..k).collect();
            let minor = det_sub(&entries, &idx, &idx);
            assert!(
                minor.is_real() && minor.real_sign() >= 0,
                "leading principal minor {k} must be nonnegative"
            );
        }
        DensityMatrix4 { entries, norm }
    }

    pub fn entry(&self, r: usize, c: usize) -> &DyadicComplex {
        &self.entries[r][c]
    }

    pub fn norm(&self) -> &DyadicComplex {
        &self.norm
    }
}

impl DensityMatrix2 {
    pub fn from_unnormalized(entries: [[DyadicComplex; 2]; 2], norm: DyadicComplex) -> Self {
        let trace = entries[0][0].add(&entries[1][1]);
        assert!(trace == norm, "trace must equal the normalization");
        assert!(
            entries[0][1] == entries[1][0].conj()
                && entries[0][0].is_real()
                && entries[1][1].is_real(),
            "density matrix must be Hermitian"
        );
        DensityMatrix2 { entries, norm }
    }

    pub fn entry(&self, r: usize, c: usize) -> &DyadicComplex {
        &self.entries[r][c]
    }

    pub fn norm(&self) -> &DyadicComplex {
        &self.norm
    }

    pub fn det_exact(&self) -> DyadicComplex {
        self.entries[0][0]
            .mul(&self.entries[1][1])
            .sub(&self.entries[0][1].mul(&self.entries[1][0]))
    }

    /// Eigenvalues of the normalized matrix, in descending order, from the
    /// exact trace and determinant.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let n = self.norm.to_f64_real();
        let t = self.entries[0][0].add(&self.entries[1][1]).to_f64_real() / n;
        let d = self.det_exact().to_f64_real() / (n * n);
        let disc = (t * t - 4.0 * d).max(0.0);
        let s = disc.sqrt();
        [(t + s) / 2.0, (t - s) / 2.0]
    }
}

/// Full amplitude index for a kept-pair bit assignment and traced bit.
fn pair_index(keep: Pair, k1: usize, k2: usize, t: usize) -> usize {
    match keep {
        Pair::AB => 4 * k1 + 2 * k2 + t,
        Pair::AC => 4 * k1 + 2 * t + k2,
        Pair::BC => 4 * t + 2 * k1 + k2,
    }
}

/// Partial trace over the qubit not in `keep`.
pub fn reduce(state: &PureState3, keep: Pair) -> DensityMatrix4 {
    let mut e: [[DyadicComplex; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| DyadicComplex::zero()));
    for k1 in 0..2 {
        for k2 in 0..2 {
            for l1 in 0..2 {
                for l2 in 0..2 {
                    for t in 0..2 {
                        let lhs = &state.amps[pair_index(keep, k1, k2, t)];
                        let rhs = state.amps[pair_index(keep, l1, l2, t)].conj();
                        let r = 2 * k1 + k2;
                        let c = 2 * l1 + l2;
                        e[r][c] = e[r][c].add(&lhs.mul(&rhs));
                    }
                }
            }
        }
    }
    DensityMatrix4::from_unnormalized(e, state.norm_sq.clone())
}

fn single_index(keep: Qubit, k: usize, t1: usize, t2: usize) -> usize {
    match keep {
        Qubit::A => 4 * k + 2 * t1 + t2,
        Qubit::B => 4 * t1 + 2 * k + t2,
        Qubit::C => 4 * t1 + 2 * t2 + k,
    }
}

/// Partial trace over the two qubits other than `keep`.
pub fn reduce1(state: &PureState3, keep: Qubit) -> DensityMatrix2 {
    let mut e: [[DyadicComplex; 2]; 2] =
        std::array::from_fn(|_| std::array::from_fn(|_| DyadicComplex::zero()));
    for k in 0..2 {
        for l in 0..2 {
            for t1 in 0..2 {
                for t2 in 0..2 {
                    let lhs = &state.amps[single_index(keep, k, t1, t2)];
                    let rhs = state.amps[single_index(keep, l, t1, t2)].conj();
                    e[k][l] = e[k][l].add(&lhs.mul(&rhs));
                }
            }
        }
    }
    DensityMatrix2::from_unnormalized(e, state.norm_sq.clone())
}

/// (sigma_y tensor sigma_y) conj(rho) (sigma_y tensor sigma_y), exactly.
/// The conjugation matrix has a single +-1 entry per row at the bit-flipped
/// position, so the product reduces to signed conjugated reflection.
pub fn spin_flip(rho: &DensityMatrix4) -> DensityMatrix4 {
    const SIGN: [i32; 4] = [-1, 1, 1, -1];
    let e: [[DyadicComplex; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let v = rho.entries[3 - i][3 - j].conj();
            if SIGN[i] * SIGN[j] < 0 {
                v.neg()
            } else {
                v
            }
        })
    });
    DensityMatrix4::from_unnormalized(e, rho.norm.clone())
}

/// Eigenvalue data of rho * spin_flip(rho): descending approximations plus
/// the exact characteristic coefficients they were extracted from.
#[derive(Debug, Clone)]
pub struct ConcurrenceSpectrum {
    lambdas: [f64; 4],
    /// Elementary symmetric functions e1..e4 of the unnormalized product;
    /// the eigenvalue of the normalized product scales by norm^(-2), so
    /// the k-th coefficient of its characteristic polynomial is
    /// coeffs[k-1] / norm^(2k).
    coeffs: [DyadicComplex; 4],
    norm: DyadicComplex,
}

impl ConcurrenceSpectrum {
    pub fn lambdas(&self) -> [f64; 4] {
        self.lambdas
    }

    pub fn char_coefficients(&self) -> &[DyadicComplex; 4] {
        &self.coeffs
    }

    pub fn norm(&self) -> &DyadicComplex {
        &self.norm
    }

    /// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).
    pub fn concurrence(&self) -> f64 {
        let s: Vec<f64> = self.lambdas.iter().map(|l| l.max(0.0).sqrt()).collect();
        (s[0] - s[1] - s[2] - s[3]).max(0.0)
    }
}

/// Evaluates a monic polynomial (descending coefficients, c[0] = 1) and its
/// derivative by Horner's rule.
fn horner(c: &[f64], x: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &coeff in c {
        dp = dp * x + p;
        p = p * x + coeff;
    }
    (p, dp)
}

/// Largest real root of a monic polynomial whose roots are all real:
/// Newton from above the Cauchy bound converges monotonically.
fn newton_largest(c: &[f64]) -> f64 {
    let bound = 1.0 + c[1..].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut x = bound;
    for _ in 0..500 {
        let (p, dp) = horner(c, x);
        if dp == 0.0 {
            break;
        }
        let step = p / dp;
        x -= step;
        if step.abs() <= 1e-16 * x.abs().max(1e-30) {
            break;
        }
    }
    x
}

/// Synthetic division of a monic polynomial by (x - r).
fn deflate(c: &[f64], r: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(c.len() - 1);
    let mut acc = 0.0;
    for &coeff in &c[..c.len() - 1] {
        acc = acc * r + coeff;
        out.push(acc);
    }
    out
}

/// Roots of the quadratic x^2 + b x + c0. A marginally negative
/// discriminant (clustered roots reached through deflation noise) snaps to
/// a double root; the root sum is unaffected, so the trace cross-check
/// still guards against genuine inconsistency.
fn quadratic_roots(b: f64, c0: f64) -> Result<(f64, f64), TangleError> {
    let mut disc = b * b - 4.0 * c0;
    if disc < 0.0 {
        if disc >= -SPECTRUM_TOLERANCE * (b * b).max(c0.abs()).max(1.0) {
            disc = 0.0;
        } else {
            return Err(TangleError::SpectrumInconsistent {
                detail: format!("complex eigenvalue pair, discriminant {disc:e}"),
            });
        }
    }
    let s = disc.sqrt();
    Ok(((-b + s) / 2.0, (-b - s) / 2.0))
}

/// Spectrum of rho * spin_flip(rho) via the exact characteristic
/// polynomial. Exactly-zero trailing coefficients are stripped as exact
/// zero eigenvalues first (reduced states of pure inputs have rank <= 2,
/// leaving at most a quadratic); whatever degree remains is solved by
/// Newton iteration with deflation and a closed-form quadratic tail.
/// Deflating from the largest root down keeps the root sum tied to the
/// trace coefficient, which the final cross-check relies on.
pub fn concurrence_spectrum(rho: &DensityMatrix4) -> Result<ConcurrenceSpectrum, TangleError> {
    let flipped = spin_flip(rho);
    let mut prod: [[DyadicComplex; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| DyadicComplex::zero()));
    for (i, row) in prod.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..4 {
                *cell = cell.add(&rho.entries[i][k].mul(&flipped.entries[k][j]));
            }
        }
    }
    let es = elementary_symmetric(&prod);
    for e in &es {
        if !e.is_real() {
            return Err(TangleError::SpectrumInconsistent {
                detail: "characteristic coefficient has nonzero imaginary part".into(),
            });
        }
    }
    let n = rho.norm.to_f64_real();
    let n2 = n * n;
    // Monic quartic for the normalized product: x^4 - c1 x^3 + c2 x^2 - c3 x + c4.
    let c: Vec<f64> = (0..4)
        .map(|k| es[k].to_f64_real() / n2.powi(k as i32 + 1))
        .collect();

    // x = 0 is a root exactly when e4 = 0, and the quotient by x keeps the
    // same alternating coefficient pattern one degree down.
    let mut zero_roots = 0;
    while zero_roots < 4 && es[3 - zero_roots].is_zero() {
        zero_roots += 1;
    }
    let degree = 4 - zero_roots;
    let signed = [1.0, -c[0], c[1], -c[2], c[3]];
    let poly = &signed[..=degree];

    let mut roots = vec![0.0f64; zero_roots];
    match degree {
        0 => {}
        1 => roots.push(c[0]),
        2 => {
            let (r1, r2) = quadratic_roots(poly[1], poly[2])?;
            roots.push(r1);
            roots.push(r2);
        }
        d => {
            let mut reduced: Vec<f64> = poly.to_vec();
            for _ in 0..d - 2 {
                let r = newton_largest(&reduced);
                roots.push(r);
                reduced = deflate(&reduced, r);
            }
            let (r1, r2) = quadratic_roots(reduced[1], reduced[2])?;
            roots.push(r1);
            roots.push(r2);
        }
    }

    for r in roots.iter_mut() {
        if *r < 0.0 {
            if *r < -SPECTRUM_TOLERANCE {
                return Err(TangleError::SpectrumInconsistent {
                    detail: format!("negative eigenvalue {:e}", *r),
                });
            }
            *r = 0.0;
        }
    }
    roots.sort_by(|a, b| b.partial_cmp(a).expect("roots are finite"));
    let sum: f64 = roots.iter().sum();
    if (sum - c[0]).abs() > SPECTRUM_TOLERANCE {
        return Err(TangleError::SpectrumInconsistent {
            detail: format!("root sum {sum:e} deviates from trace {:e}", c[0]),
        });
    }
    let lambdas: [f64; 4] = [roots[0], roots[1], roots[2], roots[3]];
    Ok(ConcurrenceSpectrum {
        lambdas,
        coeffs: es,
        norm: rho.norm.clone(),
    })
}

/// Wootters concurrence of a two-qubit density matrix.
pub fn concurrence(rho: &DensityMatrix4) -> Result<f64, TangleError> {
    Ok(concurrence_spectrum(rho)?.concurrence())
}

/// Concurrence of a pure two-qubit state (alpha, beta, gamma, delta):
/// 2|alpha*delta - beta*gamma| normalized by the squared norm.
pub fn concurrence_pure2q(
    alpha: &DyadicComplex,
    beta: &DyadicComplex,
    gamma: &DyadicComplex,
    delta: &DyadicComplex,
) -> Result<f64, TangleError> {
    let mut n = DyadicComplex::zero();
    for a in [alpha, beta, gamma, delta] {
        n = n.add(&a.norm_sq());
    }
    if n.is_zero() {
        return Err(TangleError::ZeroState);
    }
    let det = alpha.mul(delta).sub(&beta.mul(gamma));
    let (re, im) = det.to_c64();
    Ok(2.0 * re.hypot(im) / n.to_f64_real())
}

/// The quartic invariant pieces of the three-tangle, exact, plus the
/// resulting tau3 = 4 |d1 - 2 d2 + 4 d3| / norm_sq^2.
#[derive(Debug, Clone)]
pub struct ThreeTangleBreakdown {
    pub d1: DyadicComplex,
    pub d2: DyadicComplex,
    pub d3: DyadicComplex,
    pub tau3: f64,
}

pub fn three_tangle(state: &PureState3) -> ThreeTangleBreakdown {
    let a = |i: usize, j: usize, k: usize| &state.amps[4 * i + 2 * j + k];
    let sq = |v: &DyadicComplex| v.mul(v);
    let p4 = |w: &DyadicComplex, x: &DyadicComplex, y: &DyadicComplex, z: &DyadicComplex| {
        w.mul(x).mul(&y.mul(z))
    };

    let d1 = sq(a(0, 0, 0))
        .mul(&sq(a(1, 1, 1)))
        .add(&sq(a(0, 0, 1)).mul(&sq(a(1, 1, 0))))
        .add(&sq(a(0, 1, 0)).mul(&sq(a(1, 0, 1))))
        .add(&sq(a(1, 0, 0)).mul(&sq(a(0, 1, 1))));

    let d2 = p4(a(0, 0, 0), a(1, 1, 1), a(0, 1, 1), a(1, 0, 0))
        .add(&p4(a(0, 0, 0), a(1, 1, 1), a(1, 0, 1), a(0, 1, 0)))
        .add(&p4(a(0, 0, 0), a(1, 1, 1), a(1, 1, 0), a(0, 0, 1)))
        .add(&p4(a(0, 1, 1), a(1, 0, 0), a(1, 0, 1), a(0, 1, 0)))
        .add(&p4(a(0, 1, 1), a(1, 0, 0), a(1, 1, 0), a(0, 0, 1)))
        .add(&p4(a(1, 0, 1), a(0, 1, 0), a(1, 1, 0), a(0, 0, 1)));

    let d3 = p4(a(0, 0, 0), a(1, 1, 0), a(1, 0, 1), a(0, 1, 1))
        .add(&p4(a(1, 1, 1), a(0, 0, 1), a(0, 1, 0), a(1, 0, 0)));

    let two = DyadicComplex::from_int(2);
    let four = DyadicComplex::from_int(4);
    let combo = d1.sub(&two.mul(&d2)).add(&four.mul(&d3));
    let (re, im) = combo.to_c64();
    let n = state.norm_sq.to_f64_real();
    let tau3 = 4.0 * re.hypot(im) / (n * n);
    ThreeTangleBreakdown { d1, d2, d3, tau3 }
}

/// Linear entropy of one qubit against the rest: 4 det of its reduced
/// density matrix, computed exactly and converted at the end.
pub fn one_tangle(state: &PureState3, pivot: Qubit) -> f64 {
    let rho = reduce1(state, pivot);
    let n = rho.norm.to_f64_real();
    4.0 * rho.det_exact().to_f64_real() / (n * n)
}

/// Von Neumann entropy (base 2) of a single-qubit density matrix.
pub fn entropy_of_formation(rho: &DensityMatrix2) -> f64 {
    rho.eigenvalues()
        .iter()
        .filter(|&&mu| mu > 0.0)
        .map(|&mu| -mu * mu.log2())
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    Separable,
    GhzType,
    WType,
    CptType,
    ChainAbc,
    ChainAcb,
    ChainBac,
    Biseparable,
    Generic,
}

impl ClassLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassLabel::Separable => "separable",
            ClassLabel::GhzType => "GHZ-type",
            ClassLabel::WType => "W-type",
            ClassLabel::CptType => "CPT-type",
            ClassLabel::ChainAbc => "chain-ABC",
            ClassLabel::ChainAcb => "chain-ACB",
            ClassLabel::ChainBac => "chain-BAC",
            ClassLabel::Biseparable => "biseparable",
            ClassLabel::Generic => "generic",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for ClassLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Complete invariant summary of one pure three-qubit state.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementProfile {
    pub tau3: f64,
    pub tau_ab: f64,
    pub tau_ac: f64,
    pub tau_bc: f64,
    pub tau_a_bc: f64,
    pub tau_b_ac: f64,
    pub tau_c_ab: f64,
    pub class_label: ClassLabel,
}

impl EntanglementProfile {
    /// Pairwise tangles in the fixed order AB, AC, BC.
    pub fn pairwise(&self) -> [f64; 3] {
        [self.tau_ab, self.tau_ac, self.tau_bc]
    }

    /// One-tangles in pivot order A, B, C.
    pub fn one_tangles(&self) -> [f64; 3] {
        [self.tau_a_bc, self.tau_b_ac, self.tau_c_ab]
    }

    /// Residual tau3 recomputed from the given pivot's tangles.
    pub fn residual_from(&self, pivot: Qubit) -> f64 {
        match pivot {
            Qubit::A => self.tau_a_bc - self.tau_ab - self.tau_ac,
            Qubit::B => self.tau_b_ac - self.tau_ab - self.tau_bc,
            Qubit::C => self.tau_c_ab - self.tau_ac - self.tau_bc,
        }
    }
}

impl Serialize for EntanglementProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("EntanglementProfile", 8)?;
        st.serialize_field("tau3", &round_sig12(self.tau3))?;
        st.serialize_field("tau_ab", &round_sig12(self.tau_ab))?;
        st.serialize_field("tau_ac", &round_sig12(self.tau_ac))?;
        st.serialize_field("tau_bc", &round_sig12(self.tau_bc))?;
        st.serialize_field("tau_a_bc", &round_sig12(self.tau_a_bc))?;
        st.serialize_field("tau_b_ac", &round_sig12(self.tau_b_ac))?;
        st.serialize_field("tau_c_ab", &round_sig12(self.tau_c_ab))?;
        st.serialize_field("class", &self.class_label)?;
        st.end()
    }
}

/// Decision table over the invariants; the order of the checks is fixed:
/// separable, GHZ, W, CPT (all pairwise tangles equal), chain (the label
/// names the middle qubit), biseparable, generic.
fn classify(tau3: f64, pairwise: [f64; 3], ones: [f64; 3]) -> ClassLabel {
    let eps = CLASS_EPSILON;
    if ones.iter().all(|&o| o < eps) {
        return ClassLabel::Separable;
    }
    if tau3 > eps && pairwise.iter().all(|&t| t < eps) {
        return ClassLabel::GhzType;
    }
    if tau3 < eps && pairwise.iter().all(|&t| t > eps) {
        return ClassLabel::WType;
    }
    let max = pairwise.iter().fold(f64::MIN, |m, &v| m.max(v));
    let min = pairwise.iter().fold(f64::MAX, |m, &v| m.min(v));
    if tau3 > eps && max - min < eps {
        return ClassLabel::CptType;
    }
    let small: Vec<usize> = (0..3).filter(|&i| pairwise[i] < eps).collect();
    if small.len() == 1 {
        // A vanishing pair tangle leaves its two qubits linked only
        // through the remaining qubit, which is therefore the middle one.
        return [ClassLabel::ChainAcb, ClassLabel::ChainAbc, ClassLabel::ChainBac][small[0]];
    }
    if ones.iter().filter(|&&o| o < eps).count() == 1 {
        return ClassLabel::Biseparable;
    }
    ClassLabel::Generic
}

/// Computes every invariant of the state and classifies it.
pub fn profile(state: &PureState3) -> Result<EntanglementProfile, TangleError> {
    let tau3 = three_tangle(state).tau3;
    let mut pairwise = [0.0f64; 3];
    for (slot, pair) in pairwise.iter_mut().zip(Pair::ALL) {
        let c = concurrence(&reduce(state, pair))?;
        *slot = c * c;
    }
    let ones: [f64; 3] = std::array::from_fn(|i| one_tangle(state, Qubit::ALL[i]));
    Ok(EntanglementProfile {
        tau3,
        tau_ab: pairwise[0],
        tau_ac: pairwise[1],
        tau_bc: pairwise[2],
        tau_a_bc: ones[0],
        tau_b_ac: ones[1],
        tau_c_ab: ones[2],
        class_label: classify(tau3, pairwise, ones),
    })
}
