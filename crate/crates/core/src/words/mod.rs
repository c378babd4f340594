//! Words in free groups, a small presentation language and Todd–Coxeter
//! coset enumeration.

mod parse;
mod presentation;
mod todd_coxeter;
mod word;

pub use parse::parse_word;
pub use presentation::Presentation;
pub(crate) use todd_coxeter::spanning_tree;
pub use todd_coxeter::{enumerate_cosets, todd_coxeter, CosetTable};
pub use word::{Letter, Word};
