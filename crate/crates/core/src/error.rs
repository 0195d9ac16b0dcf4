use thiserror::Error;

/// Errors surfaced by library operations. Validation failures carry the
/// offending value so callers can emit a precise diagnostic.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("modulus {0} is too small (need p >= 3)")]
    ModulusTooSmall(u64),
    #[error("value {value} at index {index} lies outside [0, 1]")]
    ValueOutOfRange { index: usize, value: f64 },
    #[error("residue {residue} is out of range for p = {p}")]
    ResidueOutOfRange { residue: u64, p: u64 },
    #[error("duplicate residue {0} in set input")]
    DuplicateResidue(u64),
    #[error("sequence length {got} does not match field size {want}")]
    LengthMismatch { want: usize, got: usize },
    #[error("operands live in different fields (p = {0} vs p = {1})")]
    FieldMismatch(u64, u64),
    #[error("residue set is empty")]
    EmptySet,
    #[error("function is identically zero")]
    IdenticallyZero,
    #[error("inverse transform left imaginary residue {max_imag:.3e} above tolerance {tol:.3e}")]
    NonNegligibleImaginary { max_imag: f64, tol: f64 },
    #[error("rank k = {k} is out of range 1..={max}")]
    RankOutOfRange { k: usize, max: usize },
    #[error("lambda_{k} = 0: no gap certificate possible")]
    ZeroLambda { k: usize },
    #[error("dilation by zero is not a bijection")]
    ZeroDilation,
    #[error("no nonzero dilation reaches bound {bound:.6} for p = {p}")]
    DilationBoundUnreachable { p: u64, bound: f64 },
    #[error("constructive mode needs |B| < ln p / ln 4 (got |B| = {t}, p = {p})")]
    SmallSetPrecondition { t: usize, p: u64 },
    #[error("no difference with a unique representation exists")]
    NoUniqueDifference,
    #[error(
        "few-representations search needs 10 <= |B1| <= p/2 and 3|B2| ln|B1| > ln p \
         (got |B1| = {b1}, |B2| = {b2}, p = {p})"
    )]
    FewRepsPrecondition { b1: usize, b2: usize, p: u64 },
    #[error(
        "unique-difference search needs 1 <= |B1| <= p/2 and 3|B2| ln|B1| < ln p \
         (got |B1| = {b1}, |B2| = {b2}, p = {p})"
    )]
    SparsePrecondition { b1: usize, b2: usize, p: u64 },
    #[error("convolution order must be at least 2 (got t = {0})")]
    OrderTooSmall(usize),
    #[error("threshold formula needs t >= 3 (got t = {0})")]
    ThresholdOrder(usize),
    #[error("theta must be positive")]
    ZeroTheta,
    #[error("p = {0} is too small for the iterated-logarithm window (need p >= 16)")]
    IteratedLogRange(u64),
    #[error("certified representation count for d = {d} is {nu}, expected 1")]
    CertificationFailed { d: u64, nu: u64 },
    #[error("difference chain base is not unique (internal invariant violated)")]
    ChainBaseNotUnique,
    #[error("invalid generator parameter: {0}")]
    InvalidParams(String),
    #[error("malformed input document: {0}")]
    MalformedInput(String),
    #[error("spectrum input does not invert to a real [0,1] function: {0}")]
    InvalidSpectrumInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
