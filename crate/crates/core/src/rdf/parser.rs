//! Recursive-descent reader for the Turtle subset used by topology
//! instance data: `@prefix`/`@base` directives, IRIs, prefixed names,
//! blank nodes (labelled and `[...]`), collections, `a`, `;`/`,`
//! shorthand, and string/integer/decimal/boolean literals.

use std::collections::BTreeMap;
use std::fmt;

use crate::vocab;

use super::{Iri, Literal, Term, Triple, TripleSet};

/// Syntax or resolution failure, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

/// Parse a Turtle document into a [`TripleSet`].
pub fn parse_turtle(text: &str) -> Result<TripleSet, ParseError> {
    Parser::new(text).parse()
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
    base: Option<String>,
    prefixes: BTreeMap<String, String>,
    set: TripleSet,
    blank_counter: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
            base: None,
            prefixes: BTreeMap::new(),
            set: TripleSet::new(),
            blank_counter: 0,
        }
    }

    fn parse(mut self) -> Result<TripleSet, ParseError> {
        loop {
            self.skip_trivia();
            match self.peek() {
                None => break,
                Some('@') => self.directive()?,
                Some(_) => self.triples_statement()?,
            }
        }
        for (prefix, ns) in self.prefixes {
            self.set.declare_prefix(prefix, ns);
        }
        Ok(self.set)
    }

    // ---- character machinery -------------------------------------------

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
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

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.bump() {
                        if c == '\n' {
                            break;
                        }
                    }
                }
                _ => break,
            }
        }
    }

    fn expect(&mut self, expected: char) -> Result<(), ParseError> {
        match self.bump() {
            Some(c) if c == expected => Ok(()),
            Some(c) => self.error(format!("expected '{expected}', found '{c}'")),
            None => self.error(format!("expected '{expected}', found end of input")),
        }
    }

    fn next_is_digit_after_dot(&mut self) -> bool {
        let mut clone = self.chars.clone();
        clone.next(); // the '.'
        matches!(clone.peek(), Some(c) if c.is_ascii_digit())
    }

    fn fresh_blank(&mut self) -> Term {
        let n = self.blank_counter;
        self.blank_counter += 1;
        // '#' cannot occur in a parsed label, so generated labels never
        // collide with document labels.
        Term::blank(format!("gen#{n}"))
    }

    // ---- directives ------------------------------------------------------

    fn directive(&mut self) -> Result<(), ParseError> {
        let word = self.at_word()?;
        match word.as_str() {
            "@prefix" => {
                self.skip_trivia();
                let prefix = self.prefix_label()?;
                self.skip_trivia();
                let ns = self.iri_ref()?;
                self.skip_trivia();
                self.expect('.')?;
                self.prefixes.insert(prefix, ns);
                Ok(())
            }
            "@base" => {
                self.skip_trivia();
                let base = self.iri_ref()?;
                if !is_absolute_iri(&base) {
                    return self.error(format!("base IRI is not absolute: <{base}>"));
                }
                self.skip_trivia();
                self.expect('.')?;
                self.base = Some(base);
                Ok(())
            }
            other => self.error(format!("unknown directive '{other}'")),
        }
    }

    fn at_word(&mut self) -> Result<String, ParseError> {
        let mut word = String::new();
        word.push(self.bump().unwrap()); // '@'
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok(word)
    }

    /// `ex:` before a namespace IRI in a @prefix directive.
    fn prefix_label(&mut self) -> Result<String, ParseError> {
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if c == ':' {
                self.bump();
                return Ok(label);
            }
            if is_name_char(c) {
                label.push(c);
                self.bump();
            } else {
                return self.error(format!("unexpected '{c}' in prefix label"));
            }
        }
        self.error("unexpected end of input in prefix label")
    }

    // ---- statements ------------------------------------------------------

    fn triples_statement(&mut self) -> Result<(), ParseError> {
        let subject = self.subject()?;
        self.skip_trivia();
        // A bare [ p o ] statement may omit the predicate-object list.
        if self.peek() == Some('.') {
            self.bump();
            return Ok(());
        }
        self.predicate_object_list(&subject)?;
        self.skip_trivia();
        self.expect('.')
    }

    fn subject(&mut self) -> Result<Term, ParseError> {
        self.skip_trivia();
        match self.peek() {
            Some('<') => Ok(Term::Iri(Iri::new(self.resolved_iri_ref()?))),
            Some('_') => self.blank_node_label(),
            Some('[') => self.blank_node_property_list(),
            Some('(') => self.collection(),
            Some(c) if is_pname_start(c) => {
                let iri = self.prefixed_name()?;
                Ok(Term::Iri(Iri::new(iri)))
            }
            Some(c) => self.error(format!("unexpected '{c}' at start of subject")),
            None => self.error("unexpected end of input, expected subject"),
        }
    }

    fn predicate_object_list(&mut self, subject: &Term) -> Result<(), ParseError> {
        loop {
            self.skip_trivia();
            let predicate = self.verb()?;
            loop {
                self.skip_trivia();
                let object = self.object()?;
                self.set
                    .insert(Triple::new(subject.clone(), predicate.clone(), object));
                self.skip_trivia();
                if self.peek() == Some(',') {
                    self.bump();
                } else {
                    break;
                }
            }
            if self.peek() != Some(';') {
                return Ok(());
            }
            while self.peek() == Some(';') {
                self.bump();
                self.skip_trivia();
            }
            // Trailing ';' before '.' or ']' is legal Turtle.
            if matches!(self.peek(), Some('.') | Some(']')) {
                return Ok(());
            }
        }
    }

    fn verb(&mut self) -> Result<Iri, ParseError> {
        match self.peek() {
            Some('<') => Ok(Iri::new(self.resolved_iri_ref()?)),
            Some('a') => {
                // 'a' only when not the start of a longer name.
                let mut clone = self.chars.clone();
                clone.next();
                match clone.peek() {
                    Some(&c) if is_name_char(c) || c == ':' => {
                        let iri = self.prefixed_name()?;
                        Ok(Iri::new(iri))
                    }
                    _ => {
                        self.bump();
                        Ok(Iri::from(vocab::RDF_TYPE))
                    }
                }
            }
            Some(c) if is_pname_start(c) => Ok(Iri::new(self.prefixed_name()?)),
            Some(';') | Some('.') => self.error("empty predicate-object list"),
            Some(c) => self.error(format!("unexpected '{c}' at start of predicate")),
            None => self.error("unexpected end of input, expected predicate"),
        }
    }

    fn object(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some('<') => Ok(Term::Iri(Iri::new(self.resolved_iri_ref()?))),
            Some('_') => self.blank_node_label(),
            Some('[') => self.blank_node_property_list(),
            Some('(') => self.collection(),
            Some('"') => self.string_literal(),
            Some(c) if c.is_ascii_digit() || c == '+' || c == '-' || c == '.' => {
                self.numeric_literal()
            }
            Some('t') | Some('f') => self.boolean_or_pname(),
            Some(c) if is_pname_start(c) => Ok(Term::Iri(Iri::new(self.prefixed_name()?))),
            Some(c) => self.error(format!("unexpected '{c}' at start of object")),
            None => self.error("unexpected end of input, expected object"),
        }
    }

    // ---- terms -----------------------------------------------------------

    fn iri_ref(&mut self) -> Result<String, ParseError> {
        self.expect('<')?;
        let mut iri = String::new();
        loop {
            match self.bump() {
                Some('>') => return Ok(iri),
                Some('\n') => return self.error("line break inside IRI"),
                Some(c) => iri.push(c),
                None => return self.error("unterminated IRI reference"),
            }
        }
    }

    fn resolved_iri_ref(&mut self) -> Result<String, ParseError> {
        let raw = self.iri_ref()?;
        if is_absolute_iri(&raw) {
            return Ok(raw);
        }
        match &self.base {
            Some(base) => Ok(resolve_against(base, &raw)),
            None => self.error(format!("relative IRI <{raw}> without @base")),
        }
    }

    fn prefixed_name(&mut self) -> Result<String, ParseError> {
        let mut prefix = String::new();
        loop {
            match self.peek() {
                Some(':') => {
                    self.bump();
                    break;
                }
                Some(c) if is_name_char(c) => {
                    prefix.push(c);
                    self.bump();
                }
                Some(c) => return self.error(format!("unexpected '{c}' in prefixed name")),
                None => return self.error("unexpected end of input in prefixed name"),
            }
        }
        let local = self.pn_local();
        match self.prefixes.get(&prefix) {
            Some(ns) => Ok(format!("{ns}{local}")),
            None => self.error(format!("undeclared prefix '{prefix}:'")),
        }
    }

    /// Local part of a prefixed name. A '.' is only part of the name when
    /// followed by another name character (otherwise it terminates the
    /// statement).
    fn pn_local(&mut self) -> String {
        let mut local = String::new();
        loop {
            match self.peek() {
                Some('.') => {
                    let mut clone = self.chars.clone();
                    clone.next();
                    match clone.peek() {
                        Some(&c) if is_name_char(c) => {
                            local.push('.');
                            self.bump();
                        }
                        _ => break,
                    }
                }
                Some(c) if is_name_char(c) => {
                    local.push(c);
                    self.bump();
                }
                _ => break,
            }
        }
        local
    }

    fn blank_node_label(&mut self) -> Result<Term, ParseError> {
        self.bump(); // '_'
        self.expect(':')?;
        let mut label = String::new();
        while let Some(c) = self.peek() {
            if is_name_char(c) {
                label.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if label.is_empty() {
            return self.error("empty blank node label");
        }
        Ok(Term::blank(label))
    }

    fn blank_node_property_list(&mut self) -> Result<Term, ParseError> {
        self.bump(); // '['
        let node = self.fresh_blank();
        self.skip_trivia();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(node);
        }
        self.predicate_object_list(&node)?;
        self.skip_trivia();
        self.expect(']')?;
        Ok(node)
    }

    fn collection(&mut self) -> Result<Term, ParseError> {
        let open_line = self.line;
        let open_column = self.column;
        self.bump(); // '('
        let mut members = Vec::new();
        loop {
            self.skip_trivia();
            match self.peek() {
                Some(')') => {
                    self.bump();
                    break;
                }
                // A statement terminator before ')' means the '(' was
                // never closed ('.5' decimals still start an object).
                Some('.') if !self.next_is_digit_after_dot() => {
                    return Err(ParseError {
                        line: open_line,
                        column: open_column,
                        message: "unterminated collection".to_owned(),
                    })
                }
                None => {
                    return Err(ParseError {
                        line: open_line,
                        column: open_column,
                        message: "unterminated collection".to_owned(),
                    })
                }
                Some(_) => members.push(self.object()?),
            }
        }
        if members.is_empty() {
            return Ok(Term::iri(vocab::RDF_NIL));
        }
        let mut head = Term::iri(vocab::RDF_NIL);
        for member in members.into_iter().rev() {
            let node = self.fresh_blank();
            self.set.insert(Triple::new(
                node.clone(),
                Iri::from(vocab::RDF_FIRST),
                member,
            ));
            self.set
                .insert(Triple::new(node.clone(), Iri::from(vocab::RDF_REST), head));
            head = node;
        }
        Ok(head)
    }

    fn string_literal(&mut self) -> Result<Term, ParseError> {
        let open_line = self.line;
        let open_column = self.column;
        self.bump(); // '"'
        let mut value = String::new();
        loop {
            match self.bump() {
                Some('"') => break,
                Some('\\') => value.push(self.escape_sequence()?),
                Some('\n') => {
                    return Err(ParseError {
                        line: open_line,
                        column: open_column,
                        message: "unterminated string literal".to_owned(),
                    })
                }
                Some(c) => value.push(c),
                None => {
                    return Err(ParseError {
                        line: open_line,
                        column: open_column,
                        message: "unterminated string literal".to_owned(),
                    })
                }
            }
        }
        // Optional language tag or datatype.
        match self.peek() {
            Some('@') => {
                self.bump();
                let mut lang = String::new();
                while let Some(c) = self.peek() {
                    if c.is_ascii_alphanumeric() || c == '-' {
                        lang.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if lang.is_empty() {
                    return self.error("empty language tag");
                }
                Ok(Term::Literal(Literal {
                    lexical: value,
                    datatype: Iri::from(vocab::RDF_LANG_STRING),
                    lang: Some(lang),
                }))
            }
            Some('^') => {
                self.bump();
                self.expect('^')?;
                let datatype = match self.peek() {
                    Some('<') => self.resolved_iri_ref()?,
                    Some(c) if is_pname_start(c) => self.prefixed_name()?,
                    _ => return self.error("expected datatype IRI after '^^'"),
                };
                Ok(Term::Literal(Literal {
                    lexical: value,
                    datatype: Iri::new(datatype),
                    lang: None,
                }))
            }
            _ => Ok(Term::Literal(Literal::string(value))),
        }
    }

    fn escape_sequence(&mut self) -> Result<char, ParseError> {
        match self.bump() {
            Some('t') => Ok('\t'),
            Some('n') => Ok('\n'),
            Some('r') => Ok('\r'),
            Some('b') => Ok('\u{8}'),
            Some('f') => Ok('\u{c}'),
            Some('"') => Ok('"'),
            Some('\'') => Ok('\''),
            Some('\\') => Ok('\\'),
            Some('u') => self.unicode_escape(4),
            Some('U') => self.unicode_escape(8),
            Some(c) => self.error(format!("invalid escape sequence '\\{c}'")),
            None => self.error("unterminated escape sequence"),
        }
    }

    fn unicode_escape(&mut self, digits: usize) -> Result<char, ParseError> {
        let mut value = 0u32;
        for _ in 0..digits {
            match self.bump() {
                Some(c) if c.is_ascii_hexdigit() => {
                    value = value * 16 + c.to_digit(16).unwrap();
                }
                Some(c) => return self.error(format!("invalid hex digit '{c}' in unicode escape")),
                None => return self.error("unterminated unicode escape"),
            }
        }
        match char::from_u32(value) {
            Some(c) => Ok(c),
            None => self.error(format!("invalid unicode code point U+{value:X}")),
        }
    }

    fn numeric_literal(&mut self) -> Result<Term, ParseError> {
        let mut lexical = String::new();
        if matches!(self.peek(), Some('+') | Some('-')) {
            lexical.push(self.bump().unwrap());
        }
        let mut has_digits = false;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                lexical.push(c);
                has_digits = true;
                self.bump();
            } else {
                break;
            }
        }
        let mut is_decimal = false;
        if self.peek() == Some('.') {
            // Decimal only if a digit follows; otherwise the '.' ends the
            // statement.
            let mut clone = self.chars.clone();
            clone.next();
            if matches!(clone.peek(), Some(c) if c.is_ascii_digit()) {
                is_decimal = true;
                lexical.push('.');
                self.bump();
                while let Some(c) = self.peek() {
                    if c.is_ascii_digit() {
                        lexical.push(c);
                        has_digits = true;
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
        }
        if !has_digits {
            return self.error("malformed numeric literal");
        }
        let datatype = if is_decimal {
            vocab::XSD_DECIMAL
        } else {
            vocab::XSD_INTEGER
        };
        Ok(Term::Literal(Literal {
            lexical,
            datatype: Iri::from(datatype),
            lang: None,
        }))
    }

    /// `true` / `false`, or a prefixed name that merely starts with t/f.
    fn boolean_or_pname(&mut self) -> Result<Term, ParseError> {
        let mut clone = self.chars.clone();
        let mut word = String::new();
        while let Some(&c) = clone.peek() {
            if is_name_char(c) {
                word.push(c);
                clone.next();
            } else {
                break;
            }
        }
        let next_after = clone.peek().copied();
        if (word == "true" || word == "false") && next_after != Some(':') {
            for _ in 0..word.len() {
                self.bump();
            }
            return Ok(Term::Literal(Literal {
                lexical: word,
                datatype: Iri::from(vocab::XSD_BOOLEAN),
                lang: None,
            }));
        }
        Ok(Term::Iri(Iri::new(self.prefixed_name()?)))
    }
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '-' || c == '\u{b7}'
}

fn is_pname_start(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == ':'
}

fn is_absolute_iri(iri: &str) -> bool {
    let Some(colon) = iri.find(':') else {
        return false;
    };
    let scheme = &iri[..colon];
    let mut chars = scheme.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '+' || c == '-' || c == '.')
}

/// Minimal relative-reference resolution: fragments attach to the base
/// document, other references replace the last path segment.
fn resolve_against(base: &str, relative: &str) -> String {
    if relative.is_empty() {
        return base.to_owned();
    }
    if let Some(fragment) = relative.strip_prefix('#') {
        let doc = base.split('#').next().unwrap_or(base);
        return format!("{doc}#{fragment}");
    }
    match base.rfind('/') {
        Some(i) => format!("{}{relative}", &base[..=i]),
        None => format!("{base}{relative}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_with_prefixes_only() {
        let set = parse_turtle("@prefix ex: <https://example.org/> .\n").unwrap();
        assert!(set.is_empty());
        assert_eq!(set.prefixes()["ex"], "https://example.org/");
    }

    #[test]
    fn basic_statement_with_shorthand() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             ex:s a ex:Thing ; ex:p ex:o1 , ex:o2 .\n",
        )
        .unwrap();
        assert_eq!(set.len(), 3);
        let s = Term::iri("https://example.org/s");
        assert!(set
            .object(&s, vocab::RDF_TYPE)
            .unwrap()
            .is_iri("https://example.org/Thing"));
        assert_eq!(set.objects(&s, "https://example.org/p").count(), 2);
    }

    #[test]
    fn undeclared_prefix_is_an_error() {
        let err = parse_turtle("ex:s ex:p ex:o .").unwrap_err();
        assert!(err.message.contains("undeclared prefix"), "{err}");
    }

    #[test]
    fn syntax_error_carries_position() {
        let err = parse_turtle("@prefix ex: <https://example.org/> .\nex:s ex:p ? .").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.column > 1);
    }

    #[test]
    fn unterminated_string_reported_at_opening_quote() {
        let err =
            parse_turtle("@prefix ex: <https://example.org/> .\nex:s ex:p \"never closed .\n")
                .unwrap_err();
        assert!(err.message.contains("unterminated string"), "{err}");
        assert_eq!(err.line, 2);
    }

    #[test]
    fn unterminated_collection_is_an_error() {
        let err = parse_turtle("@prefix ex: <https://example.org/> .\nex:s ex:p (ex:a ex:b .\n")
            .unwrap_err();
        assert!(
            err.message.contains("unterminated collection") || err.message.contains("unexpected"),
            "{err}"
        );
    }

    #[test]
    fn collection_expands_to_first_rest_chain() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             ex:s ex:list (ex:a ex:b ex:c) .\n",
        )
        .unwrap();
        // head triple + 3 x (first, rest)
        assert_eq!(set.len(), 7);
        let s = Term::iri("https://example.org/s");
        let head = set.object(&s, "https://example.org/list").unwrap().clone();
        let members = set.expand_collection(&head).unwrap();
        let labels: Vec<&str> = members
            .iter()
            .map(|m| m.as_iri().unwrap().local_name())
            .collect();
        assert_eq!(labels, ["a", "b", "c"]);
    }

    #[test]
    fn empty_collection_is_nil() {
        let set =
            parse_turtle("@prefix ex: <https://example.org/> .\nex:s ex:list () .\n").unwrap();
        let s = Term::iri("https://example.org/s");
        assert!(set
            .object(&s, "https://example.org/list")
            .unwrap()
            .is_iri(vocab::RDF_NIL));
    }

    #[test]
    fn numeric_and_boolean_literals() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             ex:s ex:i 42 ; ex:d 0.5 ; ex:neg -3 ; ex:b true ; ex:point .25 .\n",
        )
        .unwrap();
        let s = Term::iri("https://example.org/s");
        let lit = |p: &str| set.object(&s, p).unwrap().as_literal().unwrap().clone();
        assert_eq!(lit("https://example.org/i").integer_value(), Some(42));
        assert_eq!(lit("https://example.org/d").numeric_value(), Some(0.5));
        assert_eq!(lit("https://example.org/neg").integer_value(), Some(-3));
        assert_eq!(
            lit("https://example.org/b").datatype.as_str(),
            vocab::XSD_BOOLEAN
        );
        assert_eq!(lit("https://example.org/point").numeric_value(), Some(0.25));
    }

    #[test]
    fn integer_before_statement_dot() {
        let set = parse_turtle("@prefix ex: <https://example.org/> .\nex:s ex:n 1 .\n").unwrap();
        let s = Term::iri("https://example.org/s");
        assert_eq!(
            set.object(&s, "https://example.org/n")
                .unwrap()
                .as_literal()
                .unwrap()
                .integer_value(),
            Some(1)
        );
    }

    #[test]
    fn datatyped_and_lang_literals() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             @prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n\
             ex:s ex:a \"7\"^^xsd:integer ; ex:b \"hi\"@en .\n",
        )
        .unwrap();
        let s = Term::iri("https://example.org/s");
        let a = set
            .object(&s, "https://example.org/a")
            .unwrap()
            .as_literal()
            .unwrap();
        assert_eq!(a.datatype.as_str(), vocab::XSD_INTEGER);
        let b = set
            .object(&s, "https://example.org/b")
            .unwrap()
            .as_literal()
            .unwrap();
        assert_eq!(b.lang.as_deref(), Some("en"));
    }

    #[test]
    fn blank_nodes_and_property_lists() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             _:x ex:p ex:o .\n\
             ex:s ex:q [ ex:r ex:o2 ] .\n\
             [] ex:t ex:o3 .\n",
        )
        .unwrap();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn base_resolves_relative_iris() {
        let set = parse_turtle(
            "@base <https://example.org/data/> .\n\
             @prefix ex: <https://example.org/> .\n\
             <oc1> ex:p <ne1> .\n",
        )
        .unwrap();
        let t = set.iter().next().unwrap();
        assert_eq!(
            t.subject.as_iri().unwrap().as_str(),
            "https://example.org/data/oc1"
        );
        assert_eq!(
            t.object.as_iri().unwrap().as_str(),
            "https://example.org/data/ne1"
        );
    }

    #[test]
    fn relative_iri_without_base_is_an_error() {
        let err = parse_turtle("<oc1> <p> <ne1> .").unwrap_err();
        assert!(err.message.contains("relative IRI"), "{err}");
    }

    #[test]
    fn escapes_in_strings() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             ex:s ex:p \"a\\tb\\\"c\\u0041\" .\n",
        )
        .unwrap();
        let s = Term::iri("https://example.org/s");
        let lit = set
            .object(&s, "https://example.org/p")
            .unwrap()
            .as_literal()
            .unwrap();
        assert_eq!(lit.lexical, "a\tb\"cA");
    }

    #[test]
    fn duplicate_statements_collapse() {
        let set = parse_turtle(
            "@prefix ex: <https://example.org/> .\n\
             ex:s ex:p ex:o .\nex:s ex:p ex:o .\n",
        )
        .unwrap();
        assert_eq!(set.len(), 1);
    }
}
