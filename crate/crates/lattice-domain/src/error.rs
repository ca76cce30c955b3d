use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("domain dimensions must be positive, got n={n}, m={m}")]
    EmptyDomain { n: usize, m: usize },
    #[error("lower-triangular domain requires m = n, got n={n}, m={m}")]
    NotSquare { n: usize, m: usize },
    #[error("truncated staircase requires m <= n, got n={n}, m={m}")]
    StaircaseTooWide { n: usize, m: usize },
    #[error("parameter {0} is outside the open interval (0, 1)")]
    ParameterOutOfRange(f64),
    #[error("geometric parameter {value} at {what} is outside [0, 1)")]
    InvalidParameter { what: String, value: f64 },
    #[error("parameter product {product} at cell ({i}, {j}) is not below 1")]
    ProductTooLarge { i: usize, j: usize, product: f64 },
    #[error("parameters cover {rows} rows x {cols} columns, shape needs {need_rows} x {need_cols}")]
    DimensionMismatch { rows: usize, cols: usize, need_rows: usize, need_cols: usize },
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
}

#[derive(Debug, Error)]
pub enum WeightCsvError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("header must be `i,j,w`, found `{0}`")]
    Header(String),
    #[error("line {line}: expected 3 fields, found {found}")]
    FieldCount { line: u64, found: usize },
    #[error("line {line}: cannot parse `{field}` as a nonnegative integer")]
    Number { line: u64, field: String },
    #[error("line {line}: cell ({i}, {j}) is not active in the domain")]
    InactiveCell { line: u64, i: usize, j: usize },
    #[error("line {line}: cell ({i}, {j}) is out of row-major order, expected ({ei}, {ej})")]
    Order { line: u64, i: usize, j: usize, ei: usize, ej: usize },
    #[error("line {line}: cell ({i}, {j}) repeats after every active cell was read")]
    Extra { line: u64, i: usize, j: usize },
    #[error("file ends after {got} of {expected} active cells")]
    Truncated { got: usize, expected: usize },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
