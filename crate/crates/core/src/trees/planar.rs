//! Rooted planar trees with internal nodes of arity at least two.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A face of the associahedron. Leaves are unlabelled; they are numbered
/// left to right when rendered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    /// The single operation `m_k`.
    pub fn corolla(k: usize) -> Self {
        assert!(k >= 2, "a corolla needs at least two leaves");
        PlanarTree::Node(vec![PlanarTree::Leaf; k])
    }

    /// `m₂(m₂(m₂(a, b), c), d)` and so on.
    pub fn left_comb(k: usize) -> Self {
        assert!(k >= 1);
        let mut t = PlanarTree::Leaf;
        for _ in 1..k {
            t = PlanarTree::Node(vec![t, PlanarTree::Leaf]);
        }
        t
    }

    /// `m₂(a, m₂(b, m₂(c, d)))` and so on.
    pub fn right_comb(k: usize) -> Self {
        assert!(k >= 1);
        let mut t = PlanarTree::Leaf;
        for _ in 1..k {
            t = PlanarTree::Node(vec![PlanarTree::Leaf, t]);
        }
        t
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    pub fn children(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(c) => c,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(c) => c.iter().map(PlanarTree::leaves).sum(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(c) => 1 + c.iter().map(PlanarTree::internal_nodes).sum::<usize>(),
        }
    }

    /// `k - 1 - v`: the dimension of the face in the associahedron.
    pub fn deficiency(&self) -> usize {
        self.leaves() - 1 - self.internal_nodes()
    }

    /// Node arities in preorder.
    pub fn arities(&self) -> Vec<usize> {
        fn go(t: &PlanarTree, out: &mut Vec<usize>) {
            if let PlanarTree::Node(c) = t {
                out.push(c.len());
                c.iter().for_each(|x| go(x, out));
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    /// Reflection in a vertical line.
    pub fn mirror(&self) -> Self {
        match self {
            PlanarTree::Leaf => PlanarTree::Leaf,
            PlanarTree::Node(c) => PlanarTree::Node(c.iter().rev().map(PlanarTree::mirror).collect()),
        }
    }

    /// Replaces leaf `pos` (0-based, planar order) by `inner`.
    pub fn graft(&self, pos: usize, inner: &PlanarTree) -> Result<Self> {
        fn go(t: &PlanarTree, pos: usize, inner: &PlanarTree, seen: &mut usize) -> PlanarTree {
            match t {
                PlanarTree::Leaf => {
                    *seen += 1;
                    if *seen - 1 == pos {
                        inner.clone()
                    } else {
                        PlanarTree::Leaf
                    }
                }
                PlanarTree::Node(c) => PlanarTree::Node(c.iter().map(|x| go(x, pos, inner, seen)).collect()),
            }
        }
        if pos >= self.leaves() {
            return Err(Error::Contract(format!("graft position {pos} out of range")));
        }
        Ok(go(self, pos, inner, &mut 0))
    }

    /// Codimension-one faces: every way of splitting one node of arity
    /// `a ≥ 3` by gathering `b` consecutive children (`2 ≤ b < a`) under a
    /// new node.
    pub fn boundary_faces(&self) -> Vec<PlanarTree> {
        let PlanarTree::Node(children) = self else {
            return Vec::new();
        };
        let a = children.len();
        let mut out = Vec::new();
        for b in 2..a {
            for start in 0..=a - b {
                let mut c = children[..start].to_vec();
                c.push(PlanarTree::Node(children[start..start + b].to_vec()));
                c.extend_from_slice(&children[start + b..]);
                out.push(PlanarTree::Node(c));
            }
        }
        for (i, child) in children.iter().enumerate() {
            for face in child.boundary_faces() {
                let mut c = children.clone();
                c[i] = face;
                out.push(PlanarTree::Node(c));
            }
        }
        out
    }

    /// Graphviz rendering; leaves are labelled by position.
    pub fn to_dot(&self, name: &str) -> String {
        fn go(t: &PlanarTree, id: &mut usize, leaf: &mut usize, out: &mut String) -> usize {
            let me = *id;
            *id += 1;
            match t {
                PlanarTree::Leaf => {
                    *leaf += 1;
                    out.push_str(&format!("  n{me} [label=\"{leaf}\", shape=plaintext];\n"));
                }
                PlanarTree::Node(c) => {
                    out.push_str(&format!("  n{me} [label=\"m{}\", shape=circle];\n", c.len()));
                    for child in c {
                        let cid = go(child, id, leaf, out);
                        out.push_str(&format!("  n{me} -> n{cid};\n"));
                    }
                }
            }
            me
        }
        let mut out = format!("digraph {name} {{\n  edge [dir=back];\n");
        go(self, &mut 0, &mut 0, &mut out);
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for PlanarTree {
    /// Nested parentheses with leaves numbered from 1: `((1 2) 3 4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &PlanarTree, next: &mut usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                PlanarTree::Leaf => {
                    *next += 1;
                    write!(f, "{next}")
                }
                PlanarTree::Node(c) => {
                    f.write_str("(")?;
                    for (i, child) in c.iter().enumerate() {
                        if i > 0 {
                            f.write_str(" ")?;
                        }
                        go(child, next, f)?;
                    }
                    f.write_str(")")
                }
            }
        }
        go(self, &mut 0, f)
    }
}

impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some((i, c)) = chars.next() {
            match c {
                '(' | ')' => tokens.push(c.to_string()),
                c if c.is_whitespace() => {}
                c if c.is_ascii_digit() => {
                    let mut end = i + 1;
                    while let Some(&(j, d)) = chars.peek() {
                        if !d.is_ascii_digit() {
                            break;
                        }
                        end = j + 1;
                        chars.next();
                    }
                    tokens.push(s[i..end].to_string());
                }
                _ => {
                    return Err(Error::Parse {
                        token: c.to_string(),
                        reason: "unexpected character in tree".into(),
                    })
                }
            }
        }
        let mut pos = 0;
        let mut next_leaf = 0u64;
        let tree = parse_tree(&tokens, &mut pos, &mut next_leaf)?;
        if pos != tokens.len() {
            return Err(Error::Parse {
                token: tokens[pos].clone(),
                reason: "trailing input after tree".into(),
            });
        }
        Ok(tree)
    }
}

fn parse_tree(tokens: &[String], pos: &mut usize, next_leaf: &mut u64) -> Result<PlanarTree> {
    let Some(tok) = tokens.get(*pos) else {
        return Err(Error::Parse {
            token: String::new(),
            reason: "unexpected end of tree".into(),
        });
    };
    *pos += 1;
    if tok == "(" {
        let mut children = Vec::new();
        loop {
            match tokens.get(*pos).map(String::as_str) {
                Some(")") => {
                    *pos += 1;
                    break;
                }
                Some(_) => children.push(parse_tree(tokens, pos, next_leaf)?),
                None => {
                    return Err(Error::Parse {
                        token: "(".into(),
                        reason: "unclosed parenthesis".into(),
                    })
                }
            }
        }
        if children.len() < 2 {
            return Err(Error::Parse {
                token: tok.clone(),
                reason: "internal nodes need at least two children".into(),
            });
        }
        Ok(PlanarTree::Node(children))
    } else if tok == ")" {
        Err(Error::Parse {
            token: tok.clone(),
            reason: "unbalanced parenthesis".into(),
        })
    } else {
        *next_leaf += 1;
        if tok.parse::<u64>().ok() != Some(*next_leaf) {
            return Err(Error::Parse {
                token: tok.clone(),
                reason: format!("expected leaf {next_leaf}"),
            });
        }
        Ok(PlanarTree::Leaf)
    }
}

impl Serialize for PlanarTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PlanarTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
