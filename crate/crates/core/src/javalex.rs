//! Minimal Java lexer: identifiers, numbers and punctuation, with comments and
//! string/char/text-block literals removed.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TokKind {
    Ident,
    Number,
    Punct(char),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub kind: TokKind,
    pub text: &'a str,
    pub start: usize,
    pub line: usize,
}

impl Token<'_> {
    pub fn is_punct(&self, c: char) -> bool {
        self.kind == TokKind::Punct(c)
    }

    pub fn is_ident(&self) -> bool {
        self.kind == TokKind::Ident
    }

    pub fn is_word(&self, w: &str) -> bool {
        self.kind == TokKind::Ident && self.text == w
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LexError {
    pub line: usize,
    pub message: String,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.src[self.pos..].chars().nth(n)
    }

    fn starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
        }
        Some(c)
    }

    fn eat_while(&mut self, f: impl Fn(char) -> bool) {
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.bump();
        }
    }
}

/// Tokenizes Java source. In strict mode an unterminated comment or literal
/// is an error; in lenient mode it silently runs to end of input.
pub(crate) fn lex(src: &str, strict: bool) -> Result<Vec<Token<'_>>, LexError> {
    let mut cur = Cursor { src, pos: 0, line: 1 };
    let mut out = Vec::new();
    let fail = |line: usize, msg: &str| -> Result<(), LexError> {
        if strict {
            Err(LexError {
                line,
                message: msg.to_owned(),
            })
        } else {
            Ok(())
        }
    };

    while let Some(c) = cur.peek() {
        let start = cur.pos;
        let line = cur.line;
        if c.is_whitespace() {
            cur.bump();
        } else if cur.starts_with("//") {
            cur.eat_while(|c| c != '\n');
        } else if cur.starts_with("/*") {
            cur.bump();
            cur.bump();
            let mut closed = false;
            while cur.peek().is_some() {
                if cur.starts_with("*/") {
                    cur.bump();
                    cur.bump();
                    closed = true;
                    break;
                }
                cur.bump();
            }
            if !closed {
                fail(line, "unterminated block comment")?;
            }
        } else if cur.starts_with("\"\"\"") {
            for _ in 0..3 {
                cur.bump();
            }
            let mut closed = false;
            while let Some(c) = cur.bump() {
                if c == '\\' {
                    cur.bump();
                } else if c == '"' && cur.starts_with("\"\"") {
                    cur.bump();
                    cur.bump();
                    closed = true;
                    break;
                }
            }
            if !closed {
                fail(line, "unterminated text block")?;
            }
        } else if c == '"' || c == '\'' {
            cur.bump();
            let mut closed = false;
            while let Some(d) = cur.peek() {
                if d == '\n' {
                    break;
                }
                cur.bump();
                if d == '\\' {
                    cur.bump();
                } else if d == c {
                    closed = true;
                    break;
                }
            }
            if !closed {
                fail(line, "unterminated literal")?;
            }
        } else if is_ident_start(c) {
            cur.eat_while(is_ident_part);
            out.push(Token {
                kind: TokKind::Ident,
                text: &src[start..cur.pos],
                start,
                line,
            });
        } else if c.is_ascii_digit() || (c == '.' && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit())) {
            cur.bump();
            while let Some(d) = cur.peek() {
                let continues = d.is_ascii_alphanumeric()
                    || d == '_'
                    || (d == '.' && cur.peek_at(1).is_some_and(|e| e.is_ascii_digit()));
                if !continues {
                    break;
                }
                cur.bump();
            }
            out.push(Token {
                kind: TokKind::Number,
                text: &src[start..cur.pos],
                start,
                line,
            });
        } else {
            cur.bump();
            out.push(Token {
                kind: TokKind::Punct(c),
                text: &src[start..cur.pos],
                start,
                line,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idents(src: &str) -> Vec<&str> {
        lex(src, true)
            .unwrap()
            .into_iter()
            .filter(|t| t.is_ident())
            .map(|t| t.text)
            .collect()
    }

    #[test]
    fn strips_comments_and_literals() {
        let src = r#"
            // Foo in a comment
            /* Bar
               in a block */
            String s = "Baz \" quoted"; char c = '\'';
            String t = """
                Qux "inside" block
                """;
        "#;
        assert_eq!(idents(src), vec!["String", "s", "char", "c", "String", "t"]);
    }

    #[test]
    fn numbers_are_not_identifiers() {
        assert_eq!(idents("x = 1.5e3f + 0x1F + .5;"), vec!["x"]);
    }

    #[test]
    fn unterminated_comment_is_strict_error() {
        let err = lex("class A { /* oops", true).unwrap_err();
        assert_eq!(err.line, 1);
        assert!(lex("class A { /* oops", false).is_ok());
    }

    #[test]
    fn tracks_lines() {
        let toks = lex("a\n\nb", true).unwrap();
        assert_eq!(toks[1].line, 3);
    }
}
