use core::fmt;

/// Failures raised by the word, BWT and morphism operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The operation is only defined on non-empty words.
    EmptyWord,
    /// A symbol is not part of the alphabet the operation expects.
    SymbolOutsideAlphabet(u8),
    /// Alphabet symbols must be strictly increasing and the alphabet non-empty.
    InvalidAlphabet,
    /// A requested factor length exceeds the word length.
    LengthOutOfRange { len: usize, max: usize },
    /// A BWT primary index is not a valid row.
    IndexOutOfRange { index: usize, len: usize },
    /// The word handed to the inverse BWT is not the last column of any rotation matrix.
    NotABwt,
    /// Morphism images must be non-empty.
    ErasingMorphism,
    /// One image per source symbol is required.
    ImageCountMismatch { expected: usize, found: usize },
    /// Composition needs the inner target alphabet to equal the outer source alphabet.
    AlphabetMismatch,
    /// The operation is defined for binary source alphabets only.
    NotBinary,
    /// The operation requires an injective (acyclic) morphism.
    NotInjective,
    /// The operation requires a cyclic morphism.
    NotCyclic,
    /// A precondition on the operation's arguments failed.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => f.write_str("operation undefined on the empty word"),
            Error::SymbolOutsideAlphabet(s) => write!(f, "symbol {s} is outside the alphabet"),
            Error::InvalidAlphabet => {
                f.write_str("alphabet must be non-empty with strictly increasing symbols")
            }
            Error::LengthOutOfRange { len, max } => {
                write!(f, "length {len} exceeds the word length {max}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for length {len}")
            }
            Error::NotABwt => f.write_str("word is not a Burrows-Wheeler transform"),
            Error::ErasingMorphism => f.write_str("morphism images must be non-empty"),
            Error::ImageCountMismatch { expected, found } => {
                write!(f, "expected {expected} images, found {found}")
            }
            Error::AlphabetMismatch => f.write_str("alphabets do not match for composition"),
            Error::NotBinary => f.write_str("operation requires a binary source alphabet"),
            Error::NotInjective => f.write_str("operation requires an injective morphism"),
            Error::NotCyclic => f.write_str("operation requires a cyclic morphism"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
