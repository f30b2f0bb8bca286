use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotSquare,
    NotSkewSymmetrizable,
    NotSymmetrizable,
    NotAcyclic,
    NotAffine,
    IndexOutOfRange(usize),
    NonLaurentResult,
    ArithmeticOverflow,
    ResourceLimit(usize),
    NonTerminating,
    InfiniteParabolic,
    InfiniteParabolicBlock,
    NoBoundedJoin,
    NotSortable,
    SearchExhausted,
    SingularLabels,
    DependentRoots,
    NotEquivalent,
    ChartPole,
    NotFound,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotSquare => write!(f, "matrix is not square"),
            Error::NotSkewSymmetrizable => write!(f, "matrix is not skew-symmetrizable"),
            Error::NotSymmetrizable => write!(f, "Cartan matrix is not symmetrizable"),
            Error::NotAcyclic => write!(f, "exchange matrix is not acyclic"),
            Error::NotAffine => write!(f, "Cartan matrix is not of affine type"),
            Error::IndexOutOfRange(i) => write!(f, "index {i} out of range"),
            Error::NonLaurentResult => write!(f, "mutation produced a non-Laurent expression"),
            Error::ArithmeticOverflow => write!(f, "integer overflow in exact arithmetic"),
            Error::ResourceLimit(cap) => write!(f, "node cap of {cap} exceeded"),
            Error::NonTerminating => write!(f, "descent loop did not terminate"),
            Error::InfiniteParabolic => write!(f, "parabolic subgroup is infinite"),
            Error::InfiniteParabolicBlock => write!(f, "a parabolic block of the split is infinite"),
            Error::NoBoundedJoin => write!(f, "no join within the length bound"),
            Error::NotSortable => write!(f, "element is not c-sortable"),
            Error::SearchExhausted => write!(f, "no sortable element found within the search bound"),
            Error::SingularLabels => write!(f, "label set is not a basis"),
            Error::DependentRoots => write!(f, "roots are linearly dependent"),
            Error::NotEquivalent => write!(f, "seeds are not equivalent"),
            Error::ChartPole => write!(f, "ray lies at the projection pole"),
            Error::NotFound => write!(f, "not found within the enumerated region"),
        }
    }
}

impl core::error::Error for Error {}
