use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomials live in different variable spaces")]
    VarSpaceMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("point does not assign variable `{0}`")]
    IncompletePoint(String),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has odd order {0}")]
    OddOrder(usize),
    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("size cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("basis index {0} out of range")]
    BasisIndex(usize),
    #[error("table row is conjectural: {0}")]
    Conjectural(String),
    #[error("no proved table row covers {0}")]
    NotTabulated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
