//! Plain-text code files: one word of '0'/'1' per line, with '#' comment
//! lines. Headers written by [`code_to_text`] are comments and are ignored on
//! read.

use crate::error::{Error, Result};
use crate::measure::Word;
use crate::metric::Code;

pub fn code_to_text(code: &Code, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    if code.is_empty() {
        out.push_str(&format!("# length: {}\n", code.length()));
    }
    for w in code.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

/// Reads a code file. An empty code needs a `# length: n` comment.
pub fn parse_code(text: &str) -> Result<Code> {
    let mut words = Vec::new();
    let mut declared_len = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(v) = comment.trim().strip_prefix("length:") {
                declared_len = v.trim().parse::<usize>().ok();
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let w: Word = line.parse().map_err(|e: Error| Error::Parse {
            line: lineno + 1,
            msg: e.to_string(),
        })?;
        if let Some(first) = words.first().map(Word::len) {
            if w.len() != first {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("word has length {}, expected {first}", w.len()),
                });
            }
        }
        words.push(w);
    }
    match (words.first(), declared_len) {
        (Some(w), _) => {
            let n = w.len();
            Code::new(n, words)
        }
        (None, Some(n)) => Code::new(n, words),
        (None, None) => Err(Error::EmptyCode),
    }
}
