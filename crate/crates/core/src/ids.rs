//! Opaque vertex and label tokens, edges and words.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A vertex name.
///
/// Vertex ids order "naturally": all-digit ids come first and compare by
/// numeric value, every other id compares as a plain string. This keeps
/// `2 < 10` for the numbered fixtures while remaining a total order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Self {
        VertexId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_numeric(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit())
}

fn natural_cmp(a: &str, b: &str) -> Ordering {
    match (is_numeric(a), is_numeric(b)) {
        (true, true) => {
            let ta = a.trim_start_matches('0');
            let tb = b.trim_start_matches('0');
            ta.len()
                .cmp(&tb.len())
                .then_with(|| ta.cmp(tb))
                .then_with(|| a.cmp(b))
        }
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => a.cmp(b),
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

/// An edge label. Labels compare as plain strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Label(String);

impl Label {
    pub fn new(symbol: impl Into<String>) -> Self {
        Label(symbol.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.to_owned())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s)
    }
}

/// A labelled edge `source -label-> target`. Serialized as a 3-element array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub source: VertexId,
    pub label: Label,
    pub target: VertexId,
}

impl Edge {
    pub fn new(
        source: impl Into<VertexId>,
        label: impl Into<Label>,
        target: impl Into<VertexId>,
    ) -> Self {
        Edge {
            source: source.into(),
            label: label.into(),
            target: target.into(),
        }
    }

    pub fn inverse(&self) -> Edge {
        Edge {
            source: self.target.clone(),
            label: self.label.clone(),
            target: self.source.clone(),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -{}-> {}", self.source, self.label, self.target)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (&self.source, &self.label, &self.target).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (source, label, target) = <(VertexId, Label, VertexId)>::deserialize(deserializer)?;
        Ok(Edge {
            source,
            label,
            target,
        })
    }
}

/// A finite word over labels.
///
/// When every letter is a single character the word prints as the plain
/// concatenation (`abba`); otherwise letters are joined by `.`. The empty
/// word prints as `ε` and serializes as `""`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<Label>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Label] {
        &self.0
    }

    /// Splits a string into one letter per character.
    pub fn from_chars(s: &str) -> Self {
        Word(s.chars().map(|c| Label(c.to_string())).collect())
    }

    /// Parses a word against a known alphabet.
    ///
    /// `""` and `"ε"` are the empty word. A string containing `.` or
    /// whitespace is split on those separators. Otherwise the string is
    /// tokenized by greedy longest match over `alphabet`, or per character
    /// when the alphabet is empty.
    pub fn parse(s: &str, alphabet: &[Label]) -> Result<Word, WordError> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        if s.contains('.') || s.contains(char::is_whitespace) {
            let letters = s
                .split(|c: char| c == '.' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(Label::from)
                .collect();
            return Ok(Word(letters));
        }
        if alphabet.is_empty() {
            return Ok(Word::from_chars(s));
        }
        let mut letters = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let best = alphabet
                .iter()
                .filter(|l| !l.0.is_empty() && rest.starts_with(l.as_str()))
                .max_by_key(|l| l.0.len())
                .ok_or_else(|| WordError::UnknownLetter {
                    word: s.to_owned(),
                    at: s.len() - rest.len(),
                })?;
            letters.push(best.clone());
            rest = &rest[best.0.len()..];
        }
        Ok(Word(letters))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    fn compact(&self) -> bool {
        self.0.iter().all(|l| l.0.chars().count() == 1)
    }

    /// As `Display`, except that `ε` renders as the empty string.
    pub fn render(&self) -> String {
        if self.compact() {
            self.0.iter().map(|l| l.as_str()).collect()
        } else {
            self.0
                .iter()
                .map(|l| l.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

impl FromIterator<Label> for Word {
    fn from_iter<I: IntoIterator<Item = Label>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.render())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s, &[]).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("word {word:?} has no alphabet letter at byte {at}")]
    UnknownLetter { word: String, at: usize },
}
