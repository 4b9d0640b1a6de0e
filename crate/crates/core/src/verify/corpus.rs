//! Line-oriented corpus format.
//!
//! ```text
//! file    := { line }
//! line    := [label ":"] recipe [comment] NEWLINE | comment NEWLINE | NEWLINE
//! recipe  := "C(" nat ")" | "Ab(" nat {"," nat} ")" | "D(" nat ")" | "Dic(" nat ")"
//!          | "S(" nat ")" | "A(" nat ")" | "Direct(" recipe "," recipe ")"
//!          | "SD(" nat "," nat "," nat ")" | "Frob(" nat "," nat ")"
//! comment := "#" ... EOL
//! ```
//!
//! Unlabelled lines are labelled by the recipe's canonical text.

use std::collections::HashMap;
use std::fmt;

use crate::group::GroupRecipe;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub label: String,
    pub recipe: GroupRecipe,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("{line}:{column}: expected {}, found {found}", ExpectedList(.expected))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}: duplicate label {label:?} (first defined on line {first_line})")]
    DuplicateLabel {
        label: String,
        line: usize,
        first_line: usize,
    },
    #[error("{line}:{column}: {message}")]
    RecipeInvalid {
        line: usize,
        column: usize,
        message: String,
    },
}

struct ExpectedList<'a>(&'a [String]);

impl fmt::Display for ExpectedList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            [one] => write!(f, "{one}"),
            many => write!(f, "one of {}", many.join(" ")),
        }
    }
}

const RECIPE_HEADS: [&str; 9] = ["C", "Ab", "D", "Dic", "S", "A", "Direct", "SD", "Frob"];
const RECIPE_EXPECTED: [&str; 9] = [
    "\"C(\"",
    "\"Ab(\"",
    "\"D(\"",
    "\"Dic(\"",
    "\"S(\"",
    "\"A(\"",
    "\"Direct(\"",
    "\"SD(\"",
    "\"Frob(\"",
];

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self
            .peek()
            .is_some_and(|c| c == ' ' || c == '\t' || c == '\r')
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end_or_comment(&self) -> bool {
        matches!(self.peek(), None | Some('#'))
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of line".into(),
            Some('#') => "comment".into(),
            Some(_) => {
                let word: String = self.chars[self.pos..]
                    .iter()
                    .take_while(|c| !c.is_whitespace())
                    .take(12)
                    .collect();
                format!("{word:?}")
            }
        }
    }

    fn error<T>(&self, expected: &[&str]) -> Result<T, CorpusError> {
        Err(CorpusError::Parse {
            line: self.line,
            column: self.column(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
        })
    }

    fn word(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn expect(&mut self, c: char) -> Result<(), CorpusError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(&[&format!("\"{c}\"")])
        }
    }

    fn nat(&mut self) -> Result<u64, CorpusError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(&["natural number"]);
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.error(&["natural number below 2^64"])
        })
    }

    /// Comma-separated naturals up to the closing parenthesis.
    fn nat_list(&mut self, exact: Option<usize>) -> Result<Vec<u64>, CorpusError> {
        let mut out = vec![self.nat()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(',') if exact.is_none_or(|k| out.len() < k) => {
                    self.pos += 1;
                    out.push(self.nat()?);
                }
                Some(')') if exact.is_none_or(|k| out.len() == k) => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => {
                    return match exact {
                        Some(k) if out.len() < k => self.error(&["\",\""]),
                        Some(_) => self.error(&["\")\""]),
                        None => self.error(&["\",\"", "\")\""]),
                    }
                }
            }
        }
    }

    fn recipe(&mut self) -> Result<GroupRecipe, CorpusError> {
        self.skip_ws();
        let start = self.pos;
        let head = self.word();
        self.skip_ws();
        if self.peek() != Some('(') || !RECIPE_HEADS.contains(&head.as_str()) {
            self.pos = start;
            return self.error(&RECIPE_EXPECTED);
        }
        self.pos += 1;
        let one = |c: &mut Self| c.nat_list(Some(1)).map(|v| v[0]);
        Ok(match head.as_str() {
            "C" => GroupRecipe::Cyclic(one(self)?),
            "D" => GroupRecipe::Dihedral(one(self)?),
            "Dic" => GroupRecipe::Dicyclic(one(self)?),
            "S" => GroupRecipe::Symmetric(one(self)?),
            "A" => GroupRecipe::Alternating(one(self)?),
            "Ab" => GroupRecipe::Abelian(self.nat_list(None)?),
            "SD" => {
                let v = self.nat_list(Some(3))?;
                GroupRecipe::SemidirectCC {
                    m: v[0],
                    d: v[1],
                    k: v[2],
                }
            }
            "Frob" => {
                let v = self.nat_list(Some(2))?;
                GroupRecipe::FrobAffine { p: v[0], d: v[1] }
            }
            "Direct" => {
                let a = self.recipe()?;
                self.expect(',')?;
                let b = self.recipe()?;
                self.expect(')')?;
                GroupRecipe::direct(a, b)
            }
            _ => unreachable!("head checked against RECIPE_HEADS"),
        })
    }

    fn validated_recipe(&mut self) -> Result<GroupRecipe, CorpusError> {
        self.skip_ws();
        let column = self.column();
        let recipe = self.recipe()?;
        recipe.validate().map_err(|e| CorpusError::RecipeInvalid {
            line: self.line,
            column,
            message: e.to_string(),
        })?;
        Ok(recipe)
    }

    fn finish(&mut self) -> Result<(), CorpusError> {
        self.skip_ws();
        if self.at_end_or_comment() {
            Ok(())
        } else {
            self.error(&["\"#\"", "end of line"])
        }
    }
}

/// Parses a single recipe such as `Direct(C(2), D(6))`.
pub fn parse_recipe(text: &str) -> Result<GroupRecipe, CorpusError> {
    let mut cur = Cursor::new(text, 1);
    let recipe = cur.validated_recipe()?;
    cur.finish()?;
    Ok(recipe)
}

pub fn parse_corpus(source: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    let mut labels: HashMap<String, usize> = HashMap::new();
    for (i, text) in source.lines().enumerate() {
        let line = i + 1;
        let mut cur = Cursor::new(text, line);
        cur.skip_ws();
        if cur.at_end_or_comment() {
            continue;
        }
        let start = cur.pos;
        let word = cur.word();
        cur.skip_ws();
        let label = if !word.is_empty() && cur.peek() == Some(':') {
            cur.pos += 1;
            Some(word)
        } else {
            cur.pos = start;
            None
        };
        let recipe = cur.validated_recipe()?;
        cur.finish()?;
        let label = label.unwrap_or_else(|| recipe.to_string());
        if let Some(&first_line) = labels.get(&label) {
            return Err(CorpusError::DuplicateLabel {
                label,
                line,
                first_line,
            });
        }
        labels.insert(label.clone(), line);
        entries.push(CorpusEntry {
            label,
            recipe,
            line,
        });
    }
    Ok(entries)
}

/// Canonical text of a corpus, one `label: recipe` per line.
pub fn render_corpus(entries: &[CorpusEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{}: {}\n", e.label, e.recipe))
        .collect()
}
