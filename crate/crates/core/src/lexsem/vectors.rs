use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use log::warn;

use super::{EmbeddingMatrix, Scheme, TokenDocument, WordVectorTable};
use crate::error::{Error, Result};

fn parse_floats(fields: &[&str], context: &str, line: usize) -> Result<Vec<f64>> {
    fields
        .iter()
        .map(|f| {
            f.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::parse(context, line, format!("invalid number '{f}'")))
        })
        .collect()
}

/// Parses the text word-vector format: a `count dim` header, then one
/// `word v1 ... vdim` row per word. Returns the table and any warnings.
pub fn parse_word_vectors(text: &str, context: &str) -> Result<(WordVectorTable, Vec<String>)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (header_idx, header) = lines
        .next()
        .ok_or_else(|| Error::parse(context, 1, "missing 'count dim' header"))?;
    let header_line = header_idx + 1;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (count, dim) = match fields.as_slice() {
        [c, d] => (
            c.parse::<usize>()
                .map_err(|_| Error::parse(context, header_line, "invalid word count in header"))?,
            d.parse::<usize>()
                .map_err(|_| Error::parse(context, header_line, "invalid dimension in header"))?,
        ),
        _ => return Err(Error::parse(context, header_line, "header must be 'count dim'")),
    };
    if dim == 0 {
        return Err(Error::parse(context, header_line, "dimension must be positive"));
    }

    let mut warnings = Vec::new();
    let mut entries = BTreeMap::new();
    let mut rows = 0usize;
    for (idx, line) in lines {
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != dim + 1 {
            return Err(Error::parse(
                context,
                lineno,
                format!("expected a word and {dim} values, found {} values", fields.len() - 1),
            ));
        }
        let word = fields[0].to_lowercase();
        let vector = parse_floats(&fields[1..], context, lineno)?;
        rows += 1;
        if entries.insert(word.clone(), vector).is_some() {
            warnings.push(format!("{context}:{lineno}: duplicate word '{word}', last entry wins"));
        }
    }
    if rows != count {
        warnings.push(format!("{context}: header announces {count} words, found {rows}"));
    }
    Ok((WordVectorTable::new(dim, entries)?, warnings))
}

pub fn load_word_vectors(path: &Path) -> Result<WordVectorTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let (table, warnings) = parse_word_vectors(&text, &path.display().to_string())?;
    for w in warnings {
        warn!("{w}");
    }
    Ok(table)
}

/// Mean word vector of a document.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorEmbedding {
    pub vector: Vec<f64>,
    /// Tokens found in the table.
    pub in_vocabulary: usize,
    /// Tokens skipped because the table has no vector for them.
    pub out_of_vocabulary: usize,
}

impl VectorEmbedding {
    /// True when no token contributed, leaving the zero vector.
    pub fn is_empty(&self) -> bool {
        self.in_vocabulary == 0
    }
}

/// Arithmetic mean of the vectors of the document's in-vocabulary tokens.
pub fn embed_with_vectors(doc: &TokenDocument, table: &WordVectorTable) -> VectorEmbedding {
    let mut sum = vec![0.0; table.dimension()];
    let mut found = 0usize;
    for t in &doc.tokens {
        if let Some(v) = table.get(t) {
            sum.iter_mut().zip(v).for_each(|(s, x)| *s += x);
            found += 1;
        }
    }
    if found > 0 {
        sum.iter_mut().for_each(|s| *s /= found as f64);
    }
    VectorEmbedding {
        vector: sum,
        in_vocabulary: found,
        out_of_vocabulary: doc.tokens.len() - found,
    }
}

/// Dense vectors read from an import file, restricted to the expected nodes.
#[derive(Debug, Clone)]
pub struct ImportedEmbeddings {
    pub matrix: EmbeddingMatrix,
    pub warnings: Vec<String>,
}

/// Parses the vector import format: `#dim <d>` on the first line, then
/// `node<TAB>v1 v2 ... vd` rows.
pub fn parse_embeddings<'a, I>(
    text: &str,
    context: &str,
    scheme: Scheme,
    expected_nodes: I,
) -> Result<ImportedEmbeddings>
where
    I: IntoIterator<Item = &'a str>,
{
    let expected: BTreeSet<&str> = expected_nodes.into_iter().collect();
    let mut lines = text.lines().enumerate();
    let header = lines
        .next()
        .map(|(_, l)| l.trim())
        .ok_or_else(|| Error::parse(context, 1, "missing '#dim <d>' header"))?;
    let dim: usize = header
        .strip_prefix("#dim")
        .and_then(|d| d.trim().parse().ok())
        .filter(|d| *d > 0)
        .ok_or_else(|| Error::parse(context, 1, "first line must be '#dim <d>' with d > 0"))?;

    let mut warnings = Vec::new();
    let mut vectors = BTreeMap::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (node, values) = line
            .split_once('\t')
            .ok_or_else(|| Error::parse(context, lineno, "expected node<TAB>values"))?;
        let fields: Vec<&str> = values.split_whitespace().collect();
        if fields.len() != dim {
            return Err(Error::parse(
                context,
                lineno,
                format!("row for {node} has {} values, expected {dim}", fields.len()),
            ));
        }
        let vector = parse_floats(&fields, context, lineno)?;
        if !expected.contains(node) {
            warnings.push(format!("{context}:{lineno}: node {node} is not in the graph, skipped"));
            continue;
        }
        if vectors.insert(node.to_owned(), vector).is_some() {
            return Err(Error::parse(context, lineno, format!("duplicate row for {node}")));
        }
    }
    let matrix = EmbeddingMatrix::new(scheme, dim, vectors)?;
    matrix.check_alignment(expected.iter().copied())?;
    Ok(ImportedEmbeddings { matrix, warnings })
}

pub fn import_embeddings<'a, I>(path: &Path, scheme: Scheme, expected_nodes: I) -> Result<ImportedEmbeddings>
where
    I: IntoIterator<Item = &'a str>,
{
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_embeddings(&text, &path.display().to_string(), scheme, expected_nodes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> WordVectorTable {
        let (t, _) = parse_word_vectors("2 3\nalpha 1 0 0\nbeta 0 1 2\n", "wv").unwrap();
        t
    }

    fn doc(tokens: &[&str]) -> TokenDocument {
        TokenDocument {
            node: "n".into(),
            tokens: tokens.iter().map(|t| t.to_string()).collect(),
        }
    }

    #[test]
    fn word_vector_file() {
        let t = table();
        assert_eq!(t.len(), 2);
        assert_eq!(t.dimension(), 3);
        let err = parse_word_vectors("2 3\nalpha 1 0 0 9\n", "wv").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_word_vectors("", "wv").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_word_vectors("two 3\n", "wv").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn duplicate_words_last_wins() {
        let (t, warnings) = parse_word_vectors("2 1\nAlpha 1\nalpha 2\n", "wv").unwrap();
        assert_eq!(t.get("alpha"), Some(&[2.0][..]));
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn mean_of_token_vectors() {
        let t = table();
        assert_eq!(embed_with_vectors(&doc(&["alpha"]), &t).vector, vec![1.0, 0.0, 0.0]);
        let e = embed_with_vectors(&doc(&["alpha", "beta", "gamma"]), &t);
        assert_eq!(e.vector, vec![0.5, 0.5, 1.0]);
        assert_eq!(e.out_of_vocabulary, 1);
        let e = embed_with_vectors(&doc(&["x", "y"]), &t);
        assert!(e.is_empty());
        assert_eq!(e.out_of_vocabulary, 2);
        assert_eq!(e.vector, vec![0.0; 3]);
    }

    #[test]
    fn import_happy_path() {
        let mut text = String::from("#dim 8\n");
        for n in ["a", "b"] {
            text.push_str(&format!("{n}\t1 2 3 4 5 6 7 8\n"));
        }
        text.push_str("extra\t0 0 0 0 0 0 0 1\n");
        let imp = parse_embeddings(&text, "f", Scheme::NameImport, ["a", "b"]).unwrap();
        assert_eq!(imp.matrix.dimension(), 8);
        assert_eq!(imp.matrix.len(), 2);
        assert_eq!(imp.warnings.len(), 1);
    }

    #[test]
    fn import_short_row_names_line() {
        let text = "#dim 8\na\t1 2 3 4 5 6 7 8\nb\t1 2 3 4 5 6 7\n";
        let err = parse_embeddings(text, "f", Scheme::CodeImport, ["a", "b"]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn import_missing_node_is_alignment_error() {
        let text = "#dim 2\na\t1 2\n";
        let err = parse_embeddings(text, "f", Scheme::CodeImport, ["a", "X"]).unwrap_err();
        assert!(err.to_string().contains('X'));
        assert!(matches!(err, Error::Alignment { .. }));
    }

    #[test]
    fn import_requires_header() {
        assert!(parse_embeddings("a\t1 2\n", "f", Scheme::CodeImport, ["a"]).is_err());
    }
}
