use crate::algebra::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),

    #[error("multiplicative parameter xi must be a rational other than 0, 1, -1 (got {0})")]
    InvalidXi(Rational),

    #[error("0 is a root of f, but over k[z, z^-1] the point 0 is not in Spec R")]
    ZeroRootMultiplicative,

    #[error("the point 0 has no orbit under z -> xi z")]
    InvalidRoot,

    #[error("f must have positive degree")]
    ConstantPolynomial,

    #[error("root {0} listed more than once")]
    DuplicateRoot(Rational),

    #[error("root {0} has multiplicity 0")]
    ZeroMultiplicity(Rational),

    #[error("distinct roots {} and {} lie on the same orbit", .0.0, .0.1)]
    CongruentRoots(Box<(Rational, Rational)>),

    #[error("this operation requires a simple GWA (no two distinct congruent roots)")]
    NotSimpleAlgebra,

    #[error("{0} is not a root of f")]
    NotARoot(Rational),

    #[error("root {root} has multiplicity {multiplicity}, expected a simple root")]
    NotSimpleRoot { root: Rational, multiplicity: u32 },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("negative power of z is not allowed over k[z]")]
    NegativeExponent,

    #[error("structure constant c_{index} is not monic")]
    NotMonic { index: i64 },

    #[error("structure constant c_{index} does not divide sigma^{index}(f)")]
    NotDivisor { index: i64 },

    #[error("tail condition violated: {0}")]
    TailViolation(String),

    #[error("structure constants do not describe a projective module")]
    NotProjective,

    #[error("invalid index window: {0}")]
    InvalidWindow(String),

    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("oracle dimension {dim} exceeds the limit {max}")]
    OracleTooLarge { dim: u64, max: u64 },

    #[error("malformed input: {0}")]
    MalformedInput(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "degenerate_input",
            Error::ParseRational(_) => "parse_rational",
            Error::InvalidXi(_) => "invalid_xi",
            Error::ZeroRootMultiplicative => "zero_root_multiplicative",
            Error::InvalidRoot => "invalid_root",
            Error::ConstantPolynomial => "constant_polynomial",
            Error::DuplicateRoot(_) => "duplicate_root",
            Error::ZeroMultiplicity(_) => "zero_multiplicity",
            Error::CongruentRoots(..) => "congruent_roots",
            Error::NotSimpleAlgebra => "not_simple_algebra",
            Error::NotARoot(_) => "not_a_root",
            Error::NotSimpleRoot { .. } => "not_simple_root",
            Error::IllegalMove(_) => "illegal_move",
            Error::NegativeExponent => "negative_exponent",
            Error::NotMonic { .. } => "not_monic",
            Error::NotDivisor { .. } => "not_divisor",
            Error::TailViolation(_) => "tail_violation",
            Error::NotProjective => "not_projective",
            Error::InvalidWindow(_) => "invalid_window",
            Error::UnsupportedConfiguration(_) => "unsupported_configuration",
            Error::OracleTooLarge { .. } => "oracle_too_large",
            Error::MalformedInput(_) => "malformed_input",
        }
    }
}
