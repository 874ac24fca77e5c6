//! Text form of graphs:
//!
//! ```text
//! graph    := "halfedges=" INT ";" "edges=" pair* ";" "vertices=" set*
//! pair     := "(" INT INT ")"
//! set      := "{" INT+ "}"
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end of
//! the line. A stream may hold any number of graphs back to back, which is
//! how corpus files store one graph per line.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, RawGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("graph starting at line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '#' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn expect_char(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn expect_word(&mut self, word: &str) -> Result<(), ParseError> {
        self.skip_ws();
        for want in word.chars() {
            match self.chars.peek().copied() {
                Some(c) if c == want => {
                    self.bump();
                }
                _ => return Err(self.error(format!("expected \"{word}\""))),
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        digits
            .parse()
            .map_err(|_| self.error(format!("integer {digits} out of range")))
    }
}

fn parse_one(cur: &mut Cursor<'_>) -> Result<Graph, ParseError> {
    cur.skip_ws();
    let start_line = cur.line;
    cur.expect_word("halfedges=")?;
    let half_edge_count = cur.int()?;
    cur.expect_char(';')?;
    cur.expect_word("edges=")?;
    let mut edges = Vec::new();
    while cur.peek() == Some('(') {
        cur.bump();
        let a = cur.int()?;
        let b = cur.int()?;
        cur.expect_char(')')?;
        edges.push(vec![a, b]);
    }
    cur.expect_char(';')?;
    cur.expect_word("vertices=")?;
    let mut vertices = Vec::new();
    while cur.peek() == Some('{') {
        cur.bump();
        let mut block = vec![cur.int()?];
        while cur.peek() != Some('}') {
            block.push(cur.int()?);
        }
        cur.bump();
        vertices.push(block);
    }
    Graph::validate(RawGraph {
        half_edge_count,
        edges,
        vertices,
    })
    .map_err(|source| ParseError::Invalid {
        line: start_line,
        source,
    })
}

/// Parses exactly one graph.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut cur = Cursor::new(text);
    let g = parse_one(&mut cur)?;
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected '{c}' after graph")));
    }
    Ok(g)
}

/// Parses a stream of graphs (possibly none).
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    while cur.peek().is_some() {
        out.push(parse_one(&mut cur)?);
    }
    Ok(out)
}

pub fn format_graph(g: &Graph) -> String {
    g.to_string()
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "halfedges={}; edges=", self.half_edge_count())?;
        for [a, b] in self.edges() {
            write!(f, "({a} {b})")?;
        }
        f.write_str("; vertices=")?;
        for block in self.vertices() {
            f.write_str("{")?;
            for (i, h) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{h}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_graph("halfedges=2; edges=(0 1); vertices={0 1}").unwrap(),
            loop_graph()
        );
        assert_eq!(
            parse_graph("halfedges=6; edges=(0 1)(2 3)(4 5); vertices={5 0}{1 2}{3 4}").unwrap(),
            triangle()
        );
        assert!(matches!(
            parse_graph("halfedges=3; edges=(0 1); vertices={0 1 2}"),
            Err(ParseError::Invalid {
                source: GraphError::OddHalfEdgeCount(3),
                ..
            })
        ));
    }

    #[test]
    fn whitespace_and_comments() {
        let text = "# the loop\n  halfedges = 2 ;\n edges = ( 0   1 ) ;\n vertices = { 1 0 }\n";
        // "halfedges =" with a space is not the keyword
        assert!(parse_graph(text).is_err());
        let text = "# the loop\n  halfedges=2 ;\n edges= ( 0\n 1 ) ;\n vertices= { 1 0 }\n";
        assert_eq!(parse_graph(text).unwrap(), loop_graph());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_graph("halfedges=2; edges=(0 1; vertices={0 1}").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                line: 1,
                column: 24,
                message: "expected ')', found ';'".into()
            }
        );
        let err = parse_graph("halfedges=2;\nedges=(0 1);\nvertices={}").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, column: 11, .. }), "{err:?}");
        assert!(parse_graph("halfedges=2; edges=(0 1); vertices={0 1} junk").is_err());
    }

    #[test]
    fn format_is_normal_form() {
        assert_eq!(
            triangle().to_string(),
            "halfedges=6; edges=(0 1)(2 3)(4 5); vertices={0 5}{1 2}{3 4}"
        );
        assert_eq!(Graph::empty().to_string(), "halfedges=0; edges=; vertices=");
        assert_eq!(parse_graph("halfedges=0; edges=; vertices=").unwrap(), Graph::empty());
    }

    #[test]
    fn streams() {
        let text = "halfedges=2; edges=(0 1); vertices={0 1}\nhalfedges=2; edges=(0 1); vertices={0}{1}\n";
        assert_eq!(parse_graphs(text).unwrap(), vec![loop_graph(), single_edge()]);
        assert!(parse_graphs("\n# nothing\n").unwrap().is_empty());
    }

    #[test]
    fn round_trip_catalog() {
        for g in [loop_graph(), single_edge(), triangle(), double_edge(), k4(), bouquet(3), path(4)] {
            assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
        }
    }
}
