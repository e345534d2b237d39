//! Lexical and semantic representations of classes.
//!
//! Every class becomes a [`TokenDocument`] (from its qualified name or from
//! the identifiers in its source), and every document becomes a vector in an
//! [`EmbeddingMatrix`] under one of four [`Scheme`]s.

mod lemma;
mod tfidf;
mod tokens;
mod vectors;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lemma::lemmatize;
pub use tfidf::{build_tfidf, TfidfModel, DEFAULT_VOCAB_CAP};
pub use tokens::{clean_words, identifier_tokens, name_tokens, split_identifier, TermLists};
pub use vectors::{
    embed_with_vectors, import_embeddings, load_word_vectors, parse_embeddings, parse_word_vectors, ImportedEmbeddings,
    VectorEmbedding,
};

/// Document representation scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    /// Precomputed dense vectors of package/class-name text.
    NameImport,
    /// Precomputed dense vectors of source identifiers.
    CodeImport,
    /// Mean of pretrained word vectors over source identifiers.
    WordVector,
    /// TF-IDF over lemmatized source identifiers.
    Tfidf,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::NameImport,
        Scheme::CodeImport,
        Scheme::Tfidf,
        Scheme::WordVector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::NameImport => "name-import",
            Scheme::CodeImport => "code-import",
            Scheme::WordVector => "word-vector",
            Scheme::Tfidf => "tfidf",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|sc| sc.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown scheme '{s}'")))
    }
}

/// Ordered lowercase word tokens describing one node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenDocument {
    pub node: String,
    pub tokens: Vec<String>,
}

impl TokenDocument {
    pub fn text(&self) -> String {
        self.tokens.join(" ")
    }
}

/// Per-node dense vectors of a common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingMatrix {
    scheme: Scheme,
    dimension: usize,
    vectors: BTreeMap<String, Vec<f64>>,
}

impl EmbeddingMatrix {
    pub fn new(scheme: Scheme, dimension: usize, vectors: BTreeMap<String, Vec<f64>>) -> Result<Self> {
        let m = EmbeddingMatrix {
            scheme,
            dimension,
            vectors,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dimension == 0 {
            return Err(Error::Domain("embedding dimension must be positive".into()));
        }
        for (node, v) in &self.vectors {
            if v.len() != self.dimension {
                return Err(Error::Domain(format!(
                    "vector of {node} has length {}, expected {}",
                    v.len(),
                    self.dimension
                )));
            }
            if v.iter().any(|x| !x.is_finite()) {
                return Err(Error::Domain(format!("vector of {node} has non-finite entries")));
            }
        }
        Ok(())
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn get(&self, node: &str) -> Option<&[f64]> {
        self.vectors.get(node).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[f64])> + '_ {
        self.vectors.iter().map(|(n, v)| (n.as_str(), v.as_slice()))
    }

    /// Fails with [`Error::Alignment`] listing every expected node that has
    /// no vector.
    pub fn check_alignment<'a, I>(&self, expected: I) -> Result<()>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let missing: Vec<String> = expected
            .into_iter()
            .filter(|n| !self.vectors.contains_key(*n))
            .map(str::to_owned)
            .collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(Error::Alignment { missing })
        }
    }

    /// Every vector multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> EmbeddingMatrix {
        EmbeddingMatrix {
            scheme: self.scheme,
            dimension: self.dimension,
            vectors: self
                .vectors
                .iter()
                .map(|(n, v)| (n.clone(), v.iter().map(|x| x * factor).collect()))
                .collect(),
        }
    }
}

/// Pretrained word vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct WordVectorTable {
    dimension: usize,
    entries: BTreeMap<String, Vec<f64>>,
}

impl WordVectorTable {
    pub fn new(dimension: usize, entries: BTreeMap<String, Vec<f64>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Domain("word vector dimension must be positive".into()));
        }
        if let Some((w, v)) = entries.iter().find(|(_, v)| v.len() != dimension) {
            return Err(Error::Domain(format!(
                "word vector for '{w}' has length {}, expected {dimension}",
                v.len()
            )));
        }
        let entries = entries.into_iter().map(|(w, v)| (w.to_lowercase(), v)).collect();
        Ok(WordVectorTable { dimension, entries })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&[f64]> {
        self.entries.get(word).map(Vec::as_slice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scheme_names_roundtrip() {
        for s in Scheme::ALL {
            assert_eq!(s.name().parse::<Scheme>().unwrap(), s);
        }
        assert!("bert".parse::<Scheme>().is_err());
    }

    #[test]
    fn matrix_validation() {
        let mut v = BTreeMap::new();
        v.insert("a".to_owned(), vec![1.0, 2.0]);
        v.insert("b".to_owned(), vec![1.0]);
        assert!(EmbeddingMatrix::new(Scheme::Tfidf, 2, v.clone()).is_err());
        v.insert("b".to_owned(), vec![f64::NAN, 0.0]);
        assert!(EmbeddingMatrix::new(Scheme::Tfidf, 2, v.clone()).is_err());
        v.insert("b".to_owned(), vec![0.0, 0.0]);
        let m = EmbeddingMatrix::new(Scheme::Tfidf, 2, v).unwrap();
        let err = m.check_alignment(["a", "b", "c"]).unwrap_err();
        assert!(matches!(err, Error::Alignment { ref missing } if missing == &["c".to_owned()]));
    }
}
