use std::collections::{BTreeMap, BTreeSet};

use super::{EmbeddingMatrix, Scheme, TokenDocument};
use crate::error::{Error, Result};

pub const DEFAULT_VOCAB_CAP: usize = 1000;

/// A fitted TF-IDF representation of a document collection.
#[derive(Debug, Clone)]
pub struct TfidfModel {
    /// Column terms, sorted.
    pub vocabulary: Vec<String>,
    pub idf: Vec<f64>,
    pub matrix: EmbeddingMatrix,
    /// Documents whose vector is all zeros.
    pub empty_documents: Vec<String>,
}

/// TF-IDF with raw term counts and smoothed idf `ln((1+N)/(1+df)) + 1`.
///
/// The vocabulary is the `vocab_cap` most frequent terms over the whole
/// collection (ties broken lexicographically). Rows are L2-normalized.
pub fn build_tfidf(docs: &[TokenDocument], vocab_cap: usize) -> Result<TfidfModel> {
    if docs.is_empty() {
        return Err(Error::Domain("TF-IDF needs at least one document".into()));
    }
    if vocab_cap == 0 {
        return Err(Error::Domain("vocabulary cap must be positive".into()));
    }
    let mut seen = BTreeSet::new();
    for d in docs {
        if !seen.insert(d.node.as_str()) {
            return Err(Error::Domain(format!("duplicate document for {}", d.node)));
        }
    }

    let mut total: BTreeMap<&str, usize> = BTreeMap::new();
    for d in docs {
        for t in &d.tokens {
            *total.entry(t.as_str()).or_insert(0) += 1;
        }
    }
    if total.is_empty() {
        return Err(Error::Domain("every document is empty; vocabulary is empty".into()));
    }
    let mut ranked: Vec<(&str, usize)> = total.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(b.0)));
    ranked.truncate(vocab_cap);
    let mut vocabulary: Vec<String> = ranked.into_iter().map(|(t, _)| t.to_owned()).collect();
    vocabulary.sort();
    let column: BTreeMap<&str, usize> = vocabulary.iter().enumerate().map(|(i, t)| (t.as_str(), i)).collect();

    let counts: Vec<BTreeMap<usize, f64>> = docs
        .iter()
        .map(|d| {
            let mut c = BTreeMap::new();
            for t in &d.tokens {
                if let Some(&j) = column.get(t.as_str()) {
                    *c.entry(j).or_insert(0.0) += 1.0;
                }
            }
            c
        })
        .collect();

    let n_docs = docs.len() as f64;
    let mut df = vec![0.0; vocabulary.len()];
    for c in &counts {
        for &j in c.keys() {
            df[j] += 1.0;
        }
    }
    let idf: Vec<f64> = df.iter().map(|d| ((1.0 + n_docs) / (1.0 + d)).ln() + 1.0).collect();

    let mut vectors = BTreeMap::new();
    let mut empty_documents = Vec::new();
    for (d, c) in docs.iter().zip(&counts) {
        let mut v = vec![0.0; vocabulary.len()];
        for (&j, &tf) in c {
            v[j] = tf * idf[j];
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            v.iter_mut().for_each(|x| *x /= norm);
        } else {
            empty_documents.push(d.node.clone());
        }
        vectors.insert(d.node.clone(), v);
    }

    let matrix = EmbeddingMatrix::new(Scheme::Tfidf, vocabulary.len(), vectors)?;
    Ok(TfidfModel {
        vocabulary,
        idf,
        matrix,
        empty_documents,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(node: &str, tokens: &[&str]) -> TokenDocument {
        TokenDocument {
            node: node.to_owned(),
            tokens: tokens.iter().map(|t| t.to_string()).collect(),
        }
    }

    #[test]
    fn single_document_ratio() {
        let m = build_tfidf(&[doc("d", &["a", "b", "a"])], 1000).unwrap();
        assert_eq!(m.vocabulary, vec!["a", "b"]);
        let v = m.matrix.get("d").unwrap();
        assert!((v[0] / v[1] - 2.0).abs() < 1e-12);
        let norm: f64 = v.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_document_gets_zero_vector() {
        let m = build_tfidf(&[doc("a", &["x"]), doc("b", &[])], 10).unwrap();
        assert_eq!(m.empty_documents, vec!["b"]);
        assert!(m.matrix.get("b").unwrap().iter().all(|x| *x == 0.0));
    }

    #[test]
    fn vocabulary_is_capped() {
        let terms: Vec<String> = (0..1500).map(|i| format!("t{i:04}")).collect();
        let d = TokenDocument {
            node: "d".into(),
            tokens: terms,
        };
        let m = build_tfidf(&[d], DEFAULT_VOCAB_CAP).unwrap();
        assert_eq!(m.matrix.dimension(), 1000);
        // all counts tie, so the lexicographically first terms win
        assert_eq!(m.vocabulary.last().unwrap(), "t0999");
    }

    #[test]
    fn cap_prefers_frequent_terms() {
        let m = build_tfidf(&[doc("a", &["z", "z", "y"]), doc("b", &["z", "x", "y"])], 2).unwrap();
        assert_eq!(m.vocabulary, vec!["y", "z"]);
    }

    #[test]
    fn errors() {
        assert!(build_tfidf(&[], 10).is_err());
        assert!(build_tfidf(&[doc("a", &[])], 10).is_err());
        assert!(build_tfidf(&[doc("a", &["x"]), doc("a", &["y"])], 10).is_err());
    }
}
