use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use super::lemma::lemmatize;
use super::TokenDocument;
use crate::error::{Error, Result};
use crate::javalex::{lex, TokKind};

const DEFAULT_KEYWORDS: &str = include_str!("../../data/java_keywords.txt");
const DEFAULT_STOPLIST: &str = include_str!("../../data/stoplist.txt");

/// Words removed from every token document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermLists {
    pub keywords: BTreeSet<String>,
    pub stoplist: BTreeSet<String>,
}

impl Default for TermLists {
    fn default() -> Self {
        TermLists {
            keywords: parse_list(DEFAULT_KEYWORDS),
            stoplist: parse_list(DEFAULT_STOPLIST),
        }
    }
}

fn parse_list(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_lowercase)
        .collect()
}

impl TermLists {
    pub fn empty() -> Self {
        TermLists {
            keywords: BTreeSet::new(),
            stoplist: BTreeSet::new(),
        }
    }

    /// Reads a one-term-per-line list with `#` comments.
    pub fn load_list(path: &Path) -> Result<BTreeSet<String>> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(parse_list(&text))
    }

    pub fn is_filtered(&self, token: &str) -> bool {
        self.keywords.contains(token) || self.stoplist.contains(token)
    }
}

/// Splits an identifier on underscores, non-alphanumerics and camel-case
/// boundaries, lowercasing every part.
///
/// Digits stay attached to the preceding word (`v4`, `utf8`); an upper-case
/// run followed by a lower-case letter starts a new word before its last
/// capital (`ATNFactory` -> `atn`, `factory`).
pub fn split_identifier(ident: &str) -> Vec<String> {
    let mut out = Vec::new();
    for chunk in ident.split(|c: char| !c.is_alphanumeric()) {
        let chars: Vec<char> = chunk.chars().collect();
        let mut start = 0;
        for i in 1..chars.len() {
            let (prev, cur) = (chars[i - 1], chars[i]);
            let next_lower = chars.get(i + 1).is_some_and(|c| c.is_lowercase());
            let boundary = cur.is_uppercase()
                && (prev.is_lowercase() || prev.is_ascii_digit() || (prev.is_uppercase() && next_lower));
            if boundary {
                out.push(chars[start..i].iter().collect::<String>().to_lowercase());
                start = i;
            }
        }
        if start < chars.len() {
            out.push(chars[start..].iter().collect::<String>().to_lowercase());
        }
    }
    out
}

/// Splits, lowercases and filters raw words. Applying it to its own output
/// returns that output unchanged.
pub fn clean_words<'a, I>(words: I, lists: &TermLists) -> Vec<String>
where
    I: IntoIterator<Item = &'a str>,
{
    words
        .into_iter()
        .filter(|w| !lists.keywords.contains(*w))
        .flat_map(split_identifier)
        .filter(|t| !t.is_empty() && !t.chars().all(|c| c.is_ascii_digit()))
        .filter(|t| !lists.is_filtered(t))
        .collect()
}

/// Tokens of a dotted class name, dropping the two leading organisation
/// segments (`org.antlr.v4.tool.LexerGrammar` -> `v4 tool lexer grammar`).
/// The last segment is always kept.
pub fn name_tokens(qualified_name: &str, lists: &TermLists) -> Result<TokenDocument> {
    if qualified_name.trim().is_empty() {
        return Err(Error::Domain("empty qualified name".into()));
    }
    let segments: Vec<&str> = qualified_name.split('.').filter(|s| !s.is_empty()).collect();
    let drop = 2.min(segments.len().saturating_sub(1));
    Ok(TokenDocument {
        node: qualified_name.to_owned(),
        tokens: clean_words(segments[drop..].iter().copied(), lists),
    })
}

/// Tokens of every identifier occurrence in `source`, in order. Comments and
/// string literals are ignored.
pub fn identifier_tokens(node: &str, source: &str, lists: &TermLists, lemmatize_tokens: bool) -> TokenDocument {
    let tokens = lex(source, true).or_else(|_| lex(source, false)).unwrap_or_default();
    let idents = tokens.iter().filter(|t| t.kind == TokKind::Ident).map(|t| t.text);
    let mut words = clean_words(idents, lists);
    if lemmatize_tokens {
        words = words
            .into_iter()
            .map(|w| lemmatize(&w))
            .filter(|w| !w.is_empty())
            .collect();
    }
    TokenDocument {
        node: node.to_owned(),
        tokens: words,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn camel_case_splitting() {
        assert_eq!(split_identifier("getUserName"), vec!["get", "user", "name"]);
        assert_eq!(split_identifier("ParserATNFactory"), vec!["parser", "atn", "factory"]);
        assert_eq!(split_identifier("v4"), vec!["v4"]);
        assert_eq!(split_identifier("MAX_VALUE"), vec!["max", "value"]);
        assert_eq!(split_identifier("utf8Decoder"), vec!["utf8", "decoder"]);
        assert_eq!(split_identifier("HTTPServer2Go"), vec!["http", "server2", "go"]);
    }

    #[test]
    fn antlr_name_golden() {
        let doc = name_tokens("org.antlr.v4.tool.LexerGrammar", &TermLists::default()).unwrap();
        assert_eq!(doc.text(), "v4 tool lexer grammar");
    }

    #[test]
    fn short_names() {
        let lists = TermLists::default();
        assert_eq!(
            name_tokens("com.example.FooBar", &lists).unwrap().tokens,
            vec!["foo", "bar"]
        );
        assert_eq!(name_tokens("a.FooBar", &lists).unwrap().tokens, vec!["foo", "bar"]);
        assert_eq!(name_tokens("FooBar", &lists).unwrap().tokens, vec!["foo", "bar"]);
        assert!(name_tokens("", &lists).is_err());
    }

    #[test]
    fn keywords_and_stoplist_in_names() {
        let lists = TermLists::default();
        let doc = name_tokens("org.x.util.NewHelper", &lists).unwrap();
        assert_eq!(doc.tokens, vec!["util", "helper"]);
        let mut custom = TermLists::default();
        custom.stoplist.insert("util".into());
        assert_eq!(
            name_tokens("org.x.util.NewHelper", &custom).unwrap().tokens,
            vec!["helper"]
        );
    }

    #[test]
    fn identifiers_skip_boilerplate() {
        let src = r#"
            public class Greeter {
                // greetUser in a comment
                public static void main(String[] args) {
                    String userName = getUserName();
                    System.out.println("hello " + userName);
                }
            }
        "#;
        let doc = identifier_tokens("Greeter", src, &TermLists::default(), false);
        assert_eq!(
            doc.tokens,
            vec!["greeter", "user", "name", "get", "user", "name", "user", "name"]
        );
        assert!(!doc.tokens.contains(&"println".to_owned()));
    }

    #[test]
    fn identifiers_with_lemmas() {
        let doc = identifier_tokens("X", "class X { Classes indices; }", &TermLists::default(), true);
        assert_eq!(doc.tokens, vec!["x", "class", "index"]);
    }

    #[test]
    fn unterminated_source_falls_back_to_lenient_scan() {
        let doc = identifier_tokens("X", "class Foo { /* never closed", &TermLists::default(), false);
        assert_eq!(doc.tokens, vec!["foo"]);
    }

    proptest! {
        #[test]
        fn cleaning_is_idempotent(words in proptest::collection::vec("[A-Za-z_][A-Za-z0-9_]{0,12}", 0..12)) {
            let lists = TermLists::default();
            let once = clean_words(words.iter().map(String::as_str), &lists);
            let twice = clean_words(once.iter().map(String::as_str), &lists);
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.iter().all(|t| !t.is_empty() && *t == t.to_lowercase()));
        }
    }
}
