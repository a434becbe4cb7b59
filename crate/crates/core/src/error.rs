use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the target subspace")]
    NotContained,

    #[error("subspaces do not form a direct sum")]
    NotDirect,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("basis element {index} is not a {size}x{size} matrix")]
    MatrixShape { index: usize, size: usize },

    #[error("basis is linearly dependent at element {index}")]
    DependentBasis { index: usize },

    #[error("bracket of basis elements {i} and {j} is not in the span")]
    NotClosed { i: usize, j: usize },

    #[error("involution does not preserve the algebra (basis element {index})")]
    ThetaNotPreserving { index: usize },

    #[error("theta is not an involution")]
    ThetaNotInvolutive,

    #[error("theta is not an automorphism: fails on basis pair ({i}, {j})")]
    ThetaNotAutomorphism { i: usize, j: usize },

    #[error("seed for the split abelian subalgebra is not inside s")]
    SeedNotInS,

    #[error("subspace is not abelian")]
    NotAbelian,

    #[error("ad of basis element {index} of a has irrational spectrum")]
    IrrationalSpectrum { index: usize },

    #[error("ad of basis element {index} of a is not semisimple")]
    NotSemisimple { index: usize },

    #[error("positivity basis does not form a basis of a")]
    BadPositivity,

    #[error("subalgebra is not reductive: {0}")]
    NotReductive(String),

    #[error("index {0} is not a simple root")]
    NotSimpleRoot(usize),

    #[error("parabolic subalgebras come from different minimal parabolics")]
    MismatchedParabolics,

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("pair is not spherical at the base point (defect {defect})")]
    NotSpherical { defect: usize },

    #[error("expected exactly one adapted subset, found {}", passing.len())]
    NotUnique { passing: Vec<Vec<usize>> },

    #[error("element is not ad-nilpotent on the algebra")]
    NotNilpotent,

    #[error("invalid derivation pair: {0}")]
    BadDerivationPair(String),

    #[error("target is not in [X0, u]")]
    NotInImage,

    #[error("target has a nonzero component in the zero-eigenvalue layer")]
    ZeroLayerTarget,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("unknown catalog entry '{0}'")]
    UnknownEntry(String),

    #[error("i/o error: {0}")]
    Io(String),
}
