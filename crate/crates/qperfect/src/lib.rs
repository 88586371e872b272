//! Embedding q-ary 1-error-correcting codes into 1-perfect codes.
//!
//! A code with minimum distance 3 ("1-code") of length m-1 over GF(q) can be
//! embedded into a 1-perfect code of length n = (q^m - 1)/(q - 1): start from
//! the q-ary Hamming code of that length and, for each word x of the original
//! code, switch one component of the Hamming code along the projective point
//! (1, x). Shortening the result in the right coordinates recovers the
//! original code exactly. The same switching machinery extends a partition of
//! the whole space F^s into 1-codes to a partition of F^n into 1-perfect
//! codes.
//!
//! Modules, bottom to top:
//!
//! * [`gf`]: exact GF(q) arithmetic for prime and small prime-power orders.
//! * [`geometry`]: points, lines and planes of PG(m-1, q) in a fixed order.
//! * [`hamming`]: the Hamming code over those point columns; syndromes,
//!   decoding, weight-3 codewords.
//! * [`components`]: switching components R_delta, coset disjointness, and
//!   the line/plane balance identities behind them.
//! * [`embed`]: the code embedding and its membership oracle.
//! * [`partition`]: the partition extension with its 3-way part classifier.
//! * [`verify`]: exhaustive and seeded-sampled checkers for 1-codes,
//!   1-perfection, partitions, and weight-3 enumeration.
//! * [`codec`]: the text file formats shared with the CLI.
//!
//! Membership oracles never materialize codes; enumeration entry points are
//! capped and error out rather than exhaust memory. Sampled verification uses
//! ChaCha12 (via `rand_chacha`) seeded from a caller-supplied u64, and every
//! report records the seed, so failures replay exactly.

pub mod codec;
pub mod components;
pub mod embed;
pub mod error;
pub mod geometry;
pub mod gf;
pub mod hamming;
mod linalg;
pub mod partition;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use gf::{create_field, El, FieldSpec};
pub use word::Word;
