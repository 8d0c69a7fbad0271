//! Construction scripts, presentation documents and the textual word
//! syntax.

mod document;
mod exec;
mod lexer;
mod script;
mod word_syntax;

pub use document::{parse_presentation, presentation_document};
pub use exec::execute;
pub use lexer::{Span, SyntaxError};
pub use script::{operation, parse_script, Call, Check, Param, Script, Stmt, Value, OPERATIONS};
pub use word_syntax::{parse_word, parse_word_at};
