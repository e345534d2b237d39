//! Lexical dependency extraction for Java projects.
//!
//! References are resolved without type checking: a dotted name counts as a
//! use of project class `C` if a prefix of it is `C`'s fully qualified name, or
//! if its first segment is a simple name visible through a single-type import,
//! the referencing class's own package, or an on-demand import of a project
//! package. Every resolved occurrence (imports included) adds one to the edge
//! weight. Nested types are folded into their top-level class.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use super::DependencyGraph;
use crate::error::{Error, Result};
use crate::javalex::{lex, Token};

/// Source language handled by the extractor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LanguageProfile {
    #[default]
    Java,
}

impl LanguageProfile {
    fn extension(self) -> &'static str {
        match self {
            LanguageProfile::Java => "java",
        }
    }
}

/// One top-level class of a project.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceUnit {
    pub qualified_name: String,
    /// Relative to the project root.
    pub file_path: PathBuf,
    pub raw_text: String,
}

/// Something the extractor skipped or could not interpret.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct Extraction {
    pub graph: DependencyGraph,
    /// Sorted by qualified name.
    pub units: Vec<SourceUnit>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Extraction {
    pub fn unit(&self, qualified_name: &str) -> Option<&SourceUnit> {
        self.units
            .binary_search_by(|u| u.qualified_name.as_str().cmp(qualified_name))
            .ok()
            .map(|i| &self.units[i])
    }
}

#[derive(Debug)]
struct Import {
    path: Vec<String>,
    is_static: bool,
    wildcard: bool,
}

#[derive(Debug)]
struct Chain {
    segments: Vec<String>,
    fqn_only: bool,
}

#[derive(Debug)]
struct TypeDecl {
    name: String,
    span: (usize, usize),
    chains: Vec<Chain>,
}

#[derive(Debug)]
struct ParsedFile {
    rel_path: PathBuf,
    text: String,
    package: String,
    imports: Vec<Import>,
    header_chains: Vec<Chain>,
    types: Vec<TypeDecl>,
    primary: usize,
}

impl ParsedFile {
    fn qualify(&self, simple: &str) -> String {
        if self.package.is_empty() {
            simple.to_owned()
        } else {
            format!("{}.{}", self.package, simple)
        }
    }
}

const TYPE_KEYWORDS: [&str; 4] = ["class", "interface", "enum", "record"];

/// Dotted name chains in `tokens[range]`. A chain starts at an identifier not
/// preceded by `.` and extends over `.ident` pairs.
fn collect_chains(tokens: &[Token<'_>], from: usize, to: usize, out: &mut Vec<Chain>) {
    let mut i = from;
    while i < to {
        let starts = tokens[i].is_ident() && (i == 0 || !tokens[i - 1].is_punct('.'));
        if !starts {
            i += 1;
            continue;
        }
        let mut segments = vec![tokens[i].text.to_owned()];
        let mut j = i;
        while j + 2 < to && tokens[j + 1].is_punct('.') && tokens[j + 2].is_ident() {
            segments.push(tokens[j + 2].text.to_owned());
            j += 2;
        }
        out.push(Chain {
            segments,
            fqn_only: false,
        });
        i = j + 1;
    }
}

/// Reads `a.b.c` (optionally ending in `.*`) starting at `i`, up to the `;`.
/// Returns the segments, the wildcard flag and the index of the `;`.
fn read_dotted(tokens: &[Token<'_>], mut i: usize) -> Option<(Vec<String>, bool, usize)> {
    let mut segments = Vec::new();
    let mut wildcard = false;
    while i < tokens.len() {
        let t = &tokens[i];
        if t.is_punct(';') {
            return Some((segments, wildcard, i));
        } else if t.is_ident() {
            segments.push(t.text.to_owned());
        } else if t.is_punct('*') {
            wildcard = true;
        } else if !t.is_punct('.') {
            return None;
        }
        i += 1;
    }
    None
}

fn parse_file(rel_path: PathBuf, text: String) -> std::result::Result<ParsedFile, String> {
    let tokens = lex(&text, true).map_err(|e| format!("line {}: {}", e.line, e.message))?;
    let display = rel_path.display().to_string();

    let mut package = String::new();
    let mut imports = Vec::new();
    let mut header_chains = Vec::new();
    let mut types: Vec<TypeDecl> = Vec::new();

    let mut depth: i64 = 0;
    // Token index where the next top-level declaration (with its modifiers
    // and annotations) begins.
    let mut region_start = 0usize;
    let mut i = 0usize;
    while i < tokens.len() {
        let t = tokens[i];
        if depth == 0 && t.is_word("package") && types.is_empty() {
            let (segs, _, end) =
                read_dotted(&tokens, i + 1).ok_or_else(|| format!("line {}: malformed package declaration", t.line))?;
            package = segs.join(".");
            i = end + 1;
            region_start = i;
            continue;
        }
        if depth == 0 && t.is_word("import") {
            let mut j = i + 1;
            let is_static = tokens.get(j).is_some_and(|n| n.is_word("static"));
            if is_static {
                j += 1;
            }
            let (segments, wildcard, end) =
                read_dotted(&tokens, j).ok_or_else(|| format!("line {}: malformed import", t.line))?;
            header_chains.push(Chain {
                segments: segments.clone(),
                fqn_only: true,
            });
            imports.push(Import {
                path: segments,
                is_static,
                wildcard,
            });
            i = end + 1;
            region_start = i;
            continue;
        }
        if depth == 0
            && TYPE_KEYWORDS.contains(&t.text)
            && t.is_ident()
            && tokens.get(i + 1).is_some_and(|n| n.is_ident())
            && (t.text != "record" || tokens.get(i + 2).is_some_and(|n| n.is_punct('(') || n.is_punct('<')))
        {
            let name = tokens[i + 1].text.to_owned();
            let open = (i + 2..tokens.len())
                .find(|&k| tokens[k].is_punct('{'))
                .ok_or_else(|| format!("line {}: type {name} has no body", t.line))?;
            let mut d = 0i64;
            let mut close = None;
            for (k, tok) in tokens.iter().enumerate().skip(open) {
                if tok.is_punct('{') {
                    d += 1;
                } else if tok.is_punct('}') {
                    d -= 1;
                    if d == 0 {
                        close = Some(k);
                        break;
                    }
                }
            }
            let close = close.ok_or_else(|| format!("line {}: unbalanced braces in {name}", t.line))?;
            let mut chains = Vec::new();
            collect_chains(&tokens, region_start, close + 1, &mut chains);
            let span_start = tokens[region_start.min(i)].start;
            let span_end = tokens[close].start + 1;
            types.push(TypeDecl {
                name,
                span: (span_start, span_end),
                chains,
            });
            i = close + 1;
            region_start = i;
            continue;
        }
        if t.is_punct('{') {
            depth += 1;
        } else if t.is_punct('}') {
            depth -= 1;
            if depth < 0 {
                return Err(format!("line {}: unbalanced '}}'", t.line));
            }
        }
        if depth == 0 && (t.is_punct(';') || t.is_punct('}')) {
            region_start = i + 1;
        }
        i += 1;
    }
    if depth != 0 {
        return Err("unbalanced braces at end of file".into());
    }
    if types.is_empty() {
        return Err(format!("no top-level type declared in {display}"));
    }
    let stem = rel_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let primary = types.iter().position(|t| t.name == stem).unwrap_or(0);
    Ok(ParsedFile {
        rel_path,
        text,
        package,
        imports,
        header_chains,
        types,
        primary,
    })
}

/// Project-wide class index used for resolution.
struct ClassIndex {
    classes: BTreeSet<String>,
    by_package: BTreeMap<String, BTreeMap<String, String>>,
}

impl ClassIndex {
    /// Longest prefix of `segments` (two or more segments) naming a class.
    fn fqn_prefix(&self, segments: &[String]) -> Option<String> {
        (2..=segments.len()).rev().find_map(|k| {
            let candidate = segments[..k].join(".");
            self.classes.contains(&candidate).then_some(candidate)
        })
    }
}

struct Scope<'a> {
    single: BTreeMap<String, String>,
    same_package: Option<&'a BTreeMap<String, String>>,
    on_demand: BTreeMap<String, Option<String>>,
}

impl<'a> Scope<'a> {
    fn new(file: &ParsedFile, index: &'a ClassIndex) -> Self {
        let mut single = BTreeMap::new();
        let mut on_demand: BTreeMap<String, Option<String>> = BTreeMap::new();
        for imp in &file.imports {
            if imp.is_static {
                continue;
            }
            if imp.wildcard {
                if let Some(members) = index.by_package.get(&imp.path.join(".")) {
                    for (simple, fqn) in members {
                        on_demand
                            .entry(simple.clone())
                            .and_modify(|e| {
                                if e.as_deref() != Some(fqn.as_str()) {
                                    // ambiguous on-demand name
                                    *e = None;
                                }
                            })
                            .or_insert_with(|| Some(fqn.clone()));
                    }
                }
            } else if let (Some(fqn), Some(last)) = (index.fqn_prefix(&imp.path), imp.path.last()) {
                single.insert(last.clone(), fqn);
            }
        }
        Scope {
            single,
            same_package: index.by_package.get(&file.package),
            on_demand,
        }
    }

    fn resolve_simple(&self, name: &str) -> Option<String> {
        if let Some(fqn) = self.single.get(name) {
            return Some(fqn.clone());
        }
        if let Some(fqn) = self.same_package.and_then(|p| p.get(name)) {
            return Some(fqn.clone());
        }
        self.on_demand.get(name).cloned().flatten()
    }

    fn resolve(&self, chain: &Chain, index: &ClassIndex) -> Option<String> {
        if let Some(fqn) = index.fqn_prefix(&chain.segments) {
            return Some(fqn);
        }
        if chain.fqn_only {
            return None;
        }
        self.resolve_simple(&chain.segments[0])
    }
}

fn java_files(root: &Path, ext: &str) -> Result<Vec<PathBuf>> {
    let meta = fs::metadata(root).map_err(|e| Error::io(root, e))?;
    if !meta.is_dir() {
        return Err(Error::io(
            root,
            std::io::Error::new(std::io::ErrorKind::NotADirectory, "project root is not a directory"),
        ));
    }
    let mut files = Vec::new();
    for entry in WalkDir::new(root).follow_links(false) {
        let entry = entry.map_err(|e| {
            let path = e.path().unwrap_or(root).to_path_buf();
            Error::io(
                path,
                e.into_io_error().unwrap_or_else(|| std::io::Error::other("walk error")),
            )
        })?;
        if entry.file_type().is_file() && entry.path().extension().is_some_and(|e| e == ext) {
            files.push(entry.path().to_path_buf());
        }
    }
    files.sort();
    Ok(files)
}

/// Parses every source file under `project_root` and builds the class
/// dependency graph. Files that cannot be parsed are reported in
/// [`Extraction::diagnostics`] and skipped.
pub fn extract_dependencies(project_root: &Path, profile: LanguageProfile) -> Result<Extraction> {
    let files = java_files(project_root, profile.extension())?;

    let parsed: Vec<std::result::Result<ParsedFile, Diagnostic>> = files
        .par_iter()
        .map(|path| {
            let rel = path.strip_prefix(project_root).unwrap_or(path).to_path_buf();
            let display = rel.display().to_string();
            let bytes = fs::read(path).map_err(|e| Diagnostic {
                path: display.clone(),
                message: format!("unreadable: {e}"),
            })?;
            let text = String::from_utf8(bytes).map_err(|_| Diagnostic {
                path: display.clone(),
                message: "not valid UTF-8".into(),
            })?;
            parse_file(rel, text).map_err(|message| Diagnostic { path: display, message })
        })
        .collect();

    let mut diagnostics = Vec::new();
    let mut files = Vec::new();
    for p in parsed {
        match p {
            Ok(f) => files.push(f),
            Err(d) => diagnostics.push(d),
        }
    }
    if files.is_empty() {
        return Err(Error::EmptyProject(project_root.to_path_buf()));
    }

    // Claim qualified names in path order; later duplicates are dropped.
    let mut owner: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for (fi, file) in files.iter().enumerate() {
        for (ti, decl) in file.types.iter().enumerate() {
            let fqn = file.qualify(&decl.name);
            if let Some((other, _)) = owner.get(&fqn) {
                diagnostics.push(Diagnostic {
                    path: file.rel_path.display().to_string(),
                    message: format!(
                        "duplicate class {fqn} (already defined in {}), skipped",
                        files[*other].rel_path.display()
                    ),
                });
            } else {
                owner.insert(fqn, (fi, ti));
            }
        }
    }

    let mut index = ClassIndex {
        classes: BTreeSet::new(),
        by_package: BTreeMap::new(),
    };
    for (fqn, (fi, ti)) in &owner {
        index.classes.insert(fqn.clone());
        index
            .by_package
            .entry(files[*fi].package.clone())
            .or_default()
            .insert(files[*fi].types[*ti].name.clone(), fqn.clone());
    }

    let uses: Vec<Vec<(String, String, u64)>> = files
        .par_iter()
        .enumerate()
        .map(|(fi, file)| {
            let scope = Scope::new(file, &index);
            let mut out = Vec::new();
            for (ti, decl) in file.types.iter().enumerate() {
                let me = file.qualify(&decl.name);
                if owner.get(&me) != Some(&(fi, ti)) {
                    continue;
                }
                let mut counts: BTreeMap<String, u64> = BTreeMap::new();
                let header: &[Chain] = if ti == file.primary { &file.header_chains } else { &[] };
                for chain in header.iter().chain(decl.chains.iter()) {
                    if let Some(target) = scope.resolve(chain, &index) {
                        if target != me {
                            *counts.entry(target).or_insert(0) += 1;
                        }
                    }
                }
                out.extend(counts.into_iter().map(|(t, c)| (me.clone(), t, c)));
            }
            out
        })
        .collect();

    let mut graph = DependencyGraph::new();
    for fqn in owner.keys() {
        graph.add_node(fqn.clone());
    }
    for (s, t, c) in uses.into_iter().flatten() {
        graph.add_uses(&s, &t, c);
    }

    let units = owner
        .iter()
        .map(|(fqn, (fi, ti))| {
            let file = &files[*fi];
            let raw_text = if *ti == file.primary {
                file.text.clone()
            } else {
                let (a, b) = file.types[*ti].span;
                file.text[a..b].to_owned()
            };
            SourceUnit {
                qualified_name: fqn.clone(),
                file_path: file.rel_path.clone(),
                raw_text,
            }
        })
        .collect();

    Ok(Extraction {
        graph,
        units,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn project(files: &[(&str, &str)]) -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        for (path, text) in files {
            let p = dir.path().join(path);
            fs::create_dir_all(p.parent().unwrap()).unwrap();
            fs::write(p, text).unwrap();
        }
        dir
    }

    fn extract(dir: &tempfile::TempDir) -> Extraction {
        extract_dependencies(dir.path(), LanguageProfile::Java).unwrap()
    }

    #[test]
    fn import_field_and_constructor_count_three() {
        let dir = project(&[
            (
                "p/A.java",
                "package p;\nimport q.B;\npublic class A {\n  private B b = new B();\n}\n",
            ),
            ("q/B.java", "package q;\npublic class B {}\n"),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.weight("p.A", "q.B"), Some(3));
        assert_eq!(ex.graph.weight("q.B", "p.A"), None);
    }

    #[test]
    fn single_file_without_references() {
        let dir = project(&[("Main.java", "public class Main { void run() { int x = 1; } }")]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.node_count(), 1);
        assert_eq!(ex.graph.edge_count(), 0);
        assert!(ex.graph.contains_node("Main"));
    }

    #[test]
    fn same_package_and_fully_qualified_references() {
        let dir = project(&[
            ("a/X.java", "package a; class X { Y y; b.Z z = new b.Z(); }"),
            ("a/Y.java", "package a; class Y { }"),
            ("b/Z.java", "package b; public class Z { }"),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.weight("a.X", "a.Y"), Some(1));
        assert_eq!(ex.graph.weight("a.X", "b.Z"), Some(2));
    }

    #[test]
    fn wildcard_imports_resolve_only_project_classes() {
        let dir = project(&[
            (
                "a/X.java",
                "package a; import b.*; import java.util.*; class X { Z z; List<Z> zs; W w; }",
            ),
            ("b/Z.java", "package b; public class Z { }"),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.weight("a.X", "b.Z"), Some(2));
        assert_eq!(ex.graph.node_count(), 2);
    }

    #[test]
    fn nested_classes_fold_into_top_level() {
        let dir = project(&[
            (
                "a/Outer.java",
                "package a; public class Outer { static class Inner { b.User u; } Inner i; }",
            ),
            (
                "b/User.java",
                "package b; import a.Outer.Inner; public class User { Inner i; a.Outer.Inner j; }",
            ),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.node_count(), 2);
        assert_eq!(ex.graph.weight("a.Outer", "b.User"), Some(1));
        // import + simple use via the import + fully qualified use
        assert_eq!(ex.graph.weight("b.User", "a.Outer"), Some(3));
    }

    #[test]
    fn self_references_are_discarded() {
        let dir = project(&[(
            "a/Node.java",
            "package a; class Node { Node next; Node() { next = new Node(); } }",
        )]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.edge_count(), 0);
    }

    #[test]
    fn strings_and_comments_do_not_count() {
        let dir = project(&[
            (
                "a/X.java",
                "package a; class X { // Y here\n String s = \"Y\"; /* Y */ }",
            ),
            ("a/Y.java", "package a; class Y { }"),
        ]);
        assert_eq!(extract(&dir).graph.edge_count(), 0);
    }

    #[test]
    fn unparsable_file_is_skipped_with_diagnostic() {
        let dir = project(&[
            ("a/X.java", "package a; class X { Y y; }"),
            ("a/Y.java", "package a; class Y { "),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.node_count(), 1);
        assert_eq!(ex.diagnostics.len(), 1);
        assert!(ex.diagnostics[0].path.ends_with("Y.java"));
    }

    #[test]
    fn empty_project_is_an_error() {
        let dir = project(&[("README.md", "nothing")]);
        let err = extract_dependencies(dir.path(), LanguageProfile::Java).unwrap_err();
        assert!(matches!(err, Error::EmptyProject(_)));
        let broken = project(&[("A.java", "class A {")]);
        assert!(matches!(
            extract_dependencies(broken.path(), LanguageProfile::Java),
            Err(Error::EmptyProject(_))
        ));
    }

    #[test]
    fn unreadable_root_is_io_error() {
        let err = extract_dependencies(Path::new("/nonexistent/compsem"), LanguageProfile::Java).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }

    #[test]
    fn secondary_top_level_types_get_nodes() {
        let dir = project(&[
            (
                "a/Main.java",
                "package a;\nimport b.Dep;\npublic class Main { Helper h; }\nclass Helper { Dep d; }\n",
            ),
            ("b/Dep.java", "package b; public class Dep {}"),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.weight("a.Main", "a.Helper"), Some(1));
        assert_eq!(ex.graph.weight("a.Main", "b.Dep"), Some(1));
        assert_eq!(ex.graph.weight("a.Helper", "b.Dep"), Some(1));
        assert!(ex.unit("a.Helper").unwrap().raw_text.starts_with("class Helper"));
    }

    #[test]
    fn records_enums_interfaces_and_annotations() {
        let dir = project(&[
            ("a/R.java", "package a; public record R(S s) { }"),
            ("a/S.java", "package a; public enum S { ONE; T t() { return null; } }"),
            ("a/T.java", "package a; @A public interface T { }"),
            ("a/A.java", "package a; public @interface A { }"),
        ]);
        let ex = extract(&dir);
        assert_eq!(ex.graph.node_count(), 4);
        assert_eq!(ex.graph.weight("a.R", "a.S"), Some(1));
        assert_eq!(ex.graph.weight("a.S", "a.T"), Some(1));
        assert_eq!(ex.graph.weight("a.T", "a.A"), Some(1));
    }

    #[test]
    fn extraction_is_deterministic() {
        let dir = project(&[
            ("a/X.java", "package a; class X { Y y; Z z; }"),
            ("a/Y.java", "package a; class Y { X x; }"),
            ("a/Z.java", "package a; class Z { Y y; Y y2; }"),
        ]);
        let a = extract(&dir);
        let b = extract(&dir);
        assert_eq!(a.graph, b.graph);
        a.graph.validate().unwrap();
    }
}
