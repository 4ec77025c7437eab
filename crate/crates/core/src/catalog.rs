//! Group descriptions: a small expression language naming the groups to
//! build, and the constructions behind each name.
//!
//! ```text
//! spec := item (('x' item) | 'wr2')*
//! item := NAME [ '(' INT {',' INT} ')' ] | 'radquot(' spec ')' | 'wr2(' spec ')'
//!       | 'file:' PATH | '(' spec ')'
//! ```
//!
//! Names are case-insensitive. `x` is a left-associative direct product and
//! `wr2` a postfix wreath product with `S2`.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::{Group, DEFAULT_CAP};
use crate::perm::{parse_cycle_list, Permutation};

const M11_GENS: &str = include_str!("../data/m11.gens");
const M12_GENS: &str = include_str!("../data/m12.gens");

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Alt(u32),
    Sym(u32),
    Psl2(u32),
    Pgl2(u32),
    Sl2(u32),
    PGammaL2_9,
    M10,
    M11,
    M12,
    FromFile(PathBuf),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    WreathS2(Box<GroupSpec>),
    QuotientByRadical(Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Alt(n) => write!(f, "A({n})"),
            GroupSpec::Sym(n) => write!(f, "S({n})"),
            GroupSpec::Psl2(q) => write!(f, "PSL2({q})"),
            GroupSpec::Pgl2(q) => write!(f, "PGL2({q})"),
            GroupSpec::Sl2(q) => write!(f, "SL2({q})"),
            GroupSpec::PGammaL2_9 => f.write_str("PGammaL2_9"),
            GroupSpec::M10 => f.write_str("M10"),
            GroupSpec::M11 => f.write_str("M11"),
            GroupSpec::M12 => f.write_str("M12"),
            GroupSpec::FromFile(p) => write!(f, "file:{}", p.display()),
            GroupSpec::Product(l, r) => write!(f, "({l} x {r})"),
            GroupSpec::WreathS2(h) => write!(f, "({h} wr2)"),
            GroupSpec::QuotientByRadical(h) => write!(f, "radquot({h})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u32),
    LParen,
    RParen,
    Comma,
    File(String),
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            '(' => {
                out.push((start, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((start, Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push((start, Tok::Comma));
                i += 1;
            }
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i]
                    .parse()
                    .map_err(|_| syntax(start, "integer out of range"))?;
                out.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                if word.eq_ignore_ascii_case("file") && bytes.get(i) == Some(&b':') {
                    i += 1;
                    let path_start = i;
                    while i < bytes.len() && !(bytes[i] as char).is_whitespace() && bytes[i] != b')' {
                        i += 1;
                    }
                    if i == path_start {
                        return Err(syntax(path_start, "empty file path"));
                    }
                    out.push((start, Tok::File(text[path_start..i].to_string())));
                } else {
                    out.push((start, Tok::Ident(word.to_ascii_lowercase())));
                }
            }
            other => return Err(syntax(start, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut acc = self.item()?;
        loop {
            match self.peek() {
                Some(Tok::Ident(w)) if w == "x" => {
                    self.pos += 1;
                    let rhs = self.item()?;
                    acc = GroupSpec::Product(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Ident(w)) if w == "wr2" => {
                    self.pos += 1;
                    acc = GroupSpec::WreathS2(Box::new(acc));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn item(&mut self) -> Result<GroupSpec> {
        let offset = self.offset();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(syntax(offset, "expected a group"));
        };
        self.pos += 1;
        match tok {
            Tok::File(path) => Ok(GroupSpec::FromFile(PathBuf::from(path))),
            Tok::LParen => {
                let inner = self.spec()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "radquot" || name == "wr2" => {
                self.expect(Tok::LParen, "'('")?;
                let inner = Box::new(self.spec()?);
                self.expect(Tok::RParen, "')'")?;
                Ok(if name == "radquot" {
                    GroupSpec::QuotientByRadical(inner)
                } else {
                    GroupSpec::WreathS2(inner)
                })
            }
            Tok::Ident(name) if name == "x" => Err(syntax(offset, "expected a group before 'x'")),
            Tok::Ident(name) => {
                let args = self.args()?;
                named(&name, &args)
            }
            _ => Err(syntax(offset, "expected a group")),
        }
    }

    fn args(&mut self) -> Result<Vec<u32>> {
        let mut args = Vec::new();
        if self.peek() != Some(&Tok::LParen) {
            return Ok(args);
        }
        self.pos += 1;
        if self.peek() == Some(&Tok::RParen) {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            match self.toks.get(self.pos) {
                Some((_, Tok::Int(n))) => {
                    args.push(*n);
                    self.pos += 1;
                }
                _ => return Err(syntax(self.offset(), "expected an integer")),
            }
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::RParen) => {
                    self.pos += 1;
                    return Ok(args);
                }
                _ => return Err(syntax(self.offset(), "expected ',' or ')'")),
            }
        }
    }
}

fn named(name: &str, args: &[u32]) -> Result<GroupSpec> {
    let arity = |expected: usize| -> Result<()> {
        if args.len() == expected {
            Ok(())
        } else {
            Err(Error::BadArity {
                name: name.to_string(),
                expected,
                found: args.len(),
            })
        }
    };
    let spec = match name {
        "a" | "s" | "psl2" | "pgl2" | "sl2" => {
            arity(1)?;
            let v = args[0];
            match name {
                "a" => GroupSpec::Alt(v),
                "s" => GroupSpec::Sym(v),
                "psl2" => GroupSpec::Psl2(v),
                "pgl2" => GroupSpec::Pgl2(v),
                _ => GroupSpec::Sl2(v),
            }
        }
        "pgammal2_9" | "m10" | "m11" | "m12" => {
            arity(0)?;
            match name {
                "pgammal2_9" => GroupSpec::PGammaL2_9,
                "m10" => GroupSpec::M10,
                "m11" => GroupSpec::M11,
                _ => GroupSpec::M12,
            }
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(spec)
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser {
        toks: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let spec = parser.spec()?;
    if parser.pos != parser.toks.len() {
        return Err(syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(spec)
}

/// Parses and builds in one step.
pub fn build_str(text: &str) -> Result<Group> {
    build(&parse_spec(text)?)
}

pub fn build(spec: &GroupSpec) -> Result<Group> {
    match spec {
        GroupSpec::Alt(n) => alternating(*n),
        GroupSpec::Sym(n) => symmetric(*n),
        GroupSpec::Psl2(q) => psl2(*q),
        GroupSpec::Pgl2(q) => pgl2(*q),
        GroupSpec::Sl2(q) => sl2(*q),
        GroupSpec::PGammaL2_9 => pgammal2_9(),
        GroupSpec::M10 => m10(),
        GroupSpec::M11 => checked_order(parse_generators(M11_GENS)?, 7920, "M11"),
        GroupSpec::M12 => checked_order(parse_generators(M12_GENS)?, 95040, "M12"),
        GroupSpec::FromFile(path) => Group::from_generators(load_generator_file(path)?),
        GroupSpec::Product(l, r) => Ok(Group::direct_product(&build(l)?, &build(r)?).group),
        GroupSpec::WreathS2(h) => Ok(Group::wreath_s2(&build(h)?)),
        GroupSpec::QuotientByRadical(h) => {
            let g = build(h)?;
            let radical = g.soluble_radical(DEFAULT_CAP)?;
            Ok(g.quotient_by(&radical, DEFAULT_CAP)?.0)
        }
    }
}

fn checked_order(gens: Vec<Permutation>, order: u64, name: &str) -> Result<Group> {
    let g = Group::from_generators(gens)?;
    if g.order_u64() != Some(order) {
        return Err(Error::Unsupported(format!(
            "{name} generators give order {}, expected {order}",
            g.order()
        )));
    }
    Ok(g)
}

fn require_degree(n: u32) -> Result<usize> {
    if n == 0 {
        return Err(Error::Unsupported("degree 0".into()));
    }
    Ok(n as usize)
}

pub fn alternating(n: u32) -> Result<Group> {
    let d = require_degree(n)?;
    if d < 3 {
        return Ok(Group::trivial(d));
    }
    let long: Vec<u32> = if d % 2 == 1 {
        (0..d as u32).collect()
    } else {
        (1..d as u32).collect()
    };
    Group::from_generators(vec![
        Permutation::from_cycles(d, &[vec![0, 1, 2]])?,
        Permutation::from_cycles(d, &[long])?,
    ])
}

pub fn symmetric(n: u32) -> Result<Group> {
    let d = require_degree(n)?;
    if d < 2 {
        return Ok(Group::trivial(d));
    }
    Group::from_generators(vec![
        Permutation::from_cycles(d, &[(0..d as u32).collect()])?,
        Permutation::from_cycles(d, &[vec![0, 1]])?,
    ])
}

/// A point of the projective line: `∞` is 0, the field element `a` is `a + 1`.
type Mobius = [u32; 4];

/// The permutation `z ↦ σ(az + b) / σ(cz + d)` of the projective line, where
/// `σ` is the field automorphism `a ↦ a^{p^frob}` applied to `z` first.
fn projective_map(f: &Field, m: Mobius, frob: u32) -> Permutation {
    let q = f.order();
    let [a, b, c, d] = m;
    let sigma = |mut z: u32| {
        for _ in 0..frob {
            z = f.frobenius(z);
        }
        z
    };
    let image = |pt: u32| -> u32 {
        // homogeneous coordinates (z : 1) or (1 : 0) for ∞
        let (x, y) = if pt == 0 { (1, 0) } else { (sigma(pt - 1), 1) };
        let nx = f.add(f.mul(a, x), f.mul(b, y));
        let ny = f.add(f.mul(c, x), f.mul(d, y));
        if ny == 0 {
            0
        } else {
            f.mul(nx, f.inv(ny)) + 1
        }
    };
    Permutation::from_images((0..=q).map(image).collect()).expect("invertible map")
}

fn field_for_l2(q: u32) -> Result<Field> {
    if q < 2 {
        return Err(Error::Unsupported(format!("q = {q}")));
    }
    Field::new(q)
}

/// `PSL2(q)` generators on the projective line: `z ↦ z + 1`, `z ↦ −1/z`,
/// `z ↦ ω²z`.
fn psl2_generators(f: &Field) -> Vec<Permutation> {
    let w = f.primitive();
    let one = 1;
    vec![
        projective_map(f, [one, one, 0, one], 0),
        projective_map(f, [0, f.neg(one), one, 0], 0),
        projective_map(f, [w, 0, 0, f.inv(w)], 0),
    ]
}

fn l2_order(q: u64) -> u64 {
    q * (q * q - 1)
}

pub fn psl2(q: u32) -> Result<Group> {
    let f = field_for_l2(q)?;
    let g = Group::from_generators(psl2_generators(&f))?;
    let expected = l2_order(q as u64) / if q % 2 == 1 { 2 } else { 1 };
    debug_assert_eq!(g.order_u64(), Some(expected));
    Ok(g)
}

pub fn pgl2(q: u32) -> Result<Group> {
    let f = field_for_l2(q)?;
    let mut gens = psl2_generators(&f);
    gens.push(projective_map(&f, [f.primitive(), 0, 0, 1], 0));
    let g = Group::from_generators(gens)?;
    debug_assert_eq!(g.order_u64(), Some(l2_order(q as u64)));
    Ok(g)
}

/// `SL2(q)` acting on the `q² − 1` nonzero row vectors `(a, b)`, numbered
/// `a·q + b − 1`.
pub fn sl2(q: u32) -> Result<Group> {
    let f = field_for_l2(q)?;
    let w = f.primitive();
    let mats: [[u32; 4]; 3] = [[1, 1, 0, 1], [0, f.neg(1), 1, 0], [w, 0, 0, f.inv(w)]];
    let gens = mats
        .iter()
        .map(|&[m00, m01, m10, m11]| {
            let images = (1..q * q)
                .map(|v| {
                    let (a, b) = (v / q, v % q);
                    let na = f.add(f.mul(a, m00), f.mul(b, m10));
                    let nb = f.add(f.mul(a, m01), f.mul(b, m11));
                    na * q + nb - 1
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let g = Group::from_generators(gens)?;
    debug_assert_eq!(g.order_u64(), Some(l2_order(q as u64)));
    Ok(g)
}

/// `PΓL2(9)`: `PGL2(9)` extended by the Frobenius map `z ↦ z³`.
pub fn pgammal2_9() -> Result<Group> {
    let f = Field::new(9)?;
    let mut gens = psl2_generators(&f);
    gens.push(projective_map(&f, [f.primitive(), 0, 0, 1], 0));
    gens.push(projective_map(&f, [1, 0, 0, 1], 1));
    checked_order(gens, 1440, "PGammaL2(9)")
}

/// `M10`: `PSL2(9)` extended by `z ↦ ωz³`, inside `PΓL2(9)`.
pub fn m10() -> Result<Group> {
    let f = Field::new(9)?;
    let mut gens = psl2_generators(&f);
    gens.push(projective_map(&f, [f.primitive(), 0, 0, 1], 1));
    checked_order(gens, 720, "M10")
}

/// Parses generator-file text: one permutation per line in 1-based cycle
/// notation, `#` comments, optional `degree N` header.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let mut degree = None;
    let mut cycles = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::GeneratorFile {
            line: line_no,
            message,
        };
        if let Some(rest) = line.strip_prefix("degree") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad degree {:?}", rest.trim())))?;
            if n == 0 {
                return Err(err("degree must be positive".into()));
            }
            degree = Some(n);
            continue;
        }
        let list = parse_cycle_list(line).map_err(|e| err(e.to_string()))?;
        let mut seen = std::collections::HashSet::new();
        for &p in list.iter().flatten() {
            if !seen.insert(p) {
                return Err(err(format!("repeated point {}", p + 1)));
            }
        }
        cycles.push((line_no, list));
    }
    if cycles.is_empty() {
        return Err(Error::NoGenerators);
    }
    let max_point = cycles
        .iter()
        .flat_map(|(_, c)| c.iter().flatten())
        .map(|&p| p as usize + 1)
        .max()
        .unwrap_or(1);
    let degree = degree.unwrap_or(max_point);
    cycles
        .into_iter()
        .map(|(line, c)| {
            Permutation::from_cycles(degree, &c).map_err(|e| Error::GeneratorFile {
                line,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn load_generator_file(path: &Path) -> Result<Vec<Permutation>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_generators(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_spec("A(7)").unwrap(), GroupSpec::Alt(7));
        assert_eq!(
            parse_spec("PSL2(8) x PSL2(8)").unwrap(),
            GroupSpec::Product(Box::new(GroupSpec::Psl2(8)), Box::new(GroupSpec::Psl2(8)))
        );
        match parse_spec("A(5") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_spec("Foo(3)"), Err(Error::UnknownName(_))));
        assert!(matches!(parse_spec("A(3,4)"), Err(Error::BadArity { .. })));
        assert!(matches!(parse_spec("M11(2)"), Err(Error::BadArity { .. })));
    }

    #[test]
    fn parse_forms() {
        let w = parse_spec("a(5) wr2").unwrap();
        assert_eq!(w, parse_spec("wr2(A(5))").unwrap());
        assert_eq!(
            parse_spec(" radquot( SL2(5) ) ").unwrap(),
            GroupSpec::QuotientByRadical(Box::new(GroupSpec::Sl2(5)))
        );
        assert_eq!(parse_spec("m11()").unwrap(), GroupSpec::M11);
        let left = parse_spec("A(5) x A(6) x A(7)").unwrap();
        match left {
            GroupSpec::Product(l, _) => assert!(matches!(*l, GroupSpec::Product(..))),
            _ => panic!(),
        }
        assert_eq!(
            parse_spec("file:data/x.gens x A(5)").unwrap(),
            GroupSpec::Product(
                Box::new(GroupSpec::FromFile("data/x.gens".into())),
                Box::new(GroupSpec::Alt(5))
            )
        );
        for text in ["A(5) x", "x", "A(5))", "A(5) A(6)", "A(-1)"] {
            assert!(matches!(parse_spec(text), Err(Error::Syntax { .. })), "{text}");
        }
    }

    #[test]
    fn display_reparses() {
        for text in ["A(5) x S(4) wr2", "radquot(SL2(5))", "PGammaL2_9 x M10"] {
            let spec = parse_spec(text).unwrap();
            assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn l2_orders() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let q64 = q as u64;
            let full = q64 * (q64 * q64 - 1);
            let psl = psl2(q).unwrap();
            assert_eq!(psl.degree(), q as usize + 1);
            assert_eq!(psl.order_u64(), Some(full / if q % 2 == 1 { 2 } else { 1 }));
            let pgl = pgl2(q).unwrap();
            assert_eq!(pgl.order_u64(), Some(full));
            assert!(psl.is_subgroup_of(&pgl));
        }
        let s = sl2(5).unwrap();
        assert_eq!((s.degree(), s.order_u64()), (24, Some(120)));
    }

    #[test]
    fn named_orders() {
        assert_eq!(build_str("M11").unwrap().order_u64(), Some(7920));
        assert_eq!(build_str("M12").unwrap().order_u64(), Some(95040));
        let a6 = psl2(9).unwrap();
        for g in [m10().unwrap(), pgammal2_9().unwrap()] {
            assert!(a6.is_subgroup_of(&g));
        }
        assert_eq!(pgammal2_9().unwrap().order_u64(), Some(1440));
        assert_eq!(m10().unwrap().order_u64(), Some(720));
        // M10 has no involutions outside A6
        let m = m10().unwrap();
        for e in m.elements(DEFAULT_CAP).unwrap() {
            if !a6.contains(&e).unwrap() {
                assert!(e.order() == 4 || e.order() == 8);
            }
        }
    }

    #[test]
    fn symmetric_and_alternating() {
        for n in 1..=7u32 {
            let f: u64 = (1..=n as u64).product();
            assert_eq!(symmetric(n).unwrap().order_u64(), Some(f));
            assert_eq!(alternating(n).unwrap().order_u64(), Some((f / 2).max(1)));
        }
    }

    #[test]
    fn generator_files() {
        let g = parse_generators("(1,2)").unwrap();
        assert_eq!(g[0].degree(), 2);
        let g = parse_generators("(1,2,3)(4,5)\n(1,4)(2,5)").unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.iter().all(|p| p.degree() == 5));
        match parse_generators("(1,2,2)") {
            Err(Error::GeneratorFile { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
        match parse_generators("# c\n(1,2)\n(1,2)(3") {
            Err(Error::GeneratorFile { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let g = parse_generators("degree 7\n(1,2) # swap").unwrap();
        assert_eq!(g[0].degree(), 7);
        assert!(parse_generators("degree 2\n(1,3)").is_err());
    }

    #[test]
    fn shipped_l3_3_file() {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/l3_3_2.gens");
        let g = Group::from_generators(load_generator_file(&path).unwrap()).unwrap();
        assert_eq!(g.order_u64(), Some(11232));
    }

    #[test]
    fn deterministic_generators() {
        let a = build_str("PSL2(9) x M10").unwrap();
        let b = build_str("PSL2(9) x M10").unwrap();
        assert_eq!(a.generators(), b.generators());
    }
}
