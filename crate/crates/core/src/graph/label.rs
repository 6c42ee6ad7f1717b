use std::fmt;

use serde::{Deserialize, Serialize};

/// Symbol family of a vertex: the letter it is written with.
///
/// Complete graphs use [`Family::Plain`], complete bipartite graphs use
/// `U`/`V`, and complete tripartite graphs use `X`/`Y`/`Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    X,
    Y,
    Z,
    U,
    V,
    Plain,
}

impl Family {
    pub fn letter(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::U => "u",
            Family::V => "v",
            Family::Plain => "p",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// A single named vertex such as `x_3` or, inside a `× K₂` product, `x¹_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub family: Family,
    pub index: u32,
    /// Copy of the vertex inside a `× K₂` product: 1 or 2.
    pub layer: Option<u8>,
}

/// Vertex identity. Ordering is lexicographic on `(family, index, layer)`,
/// with all atoms ordered before product pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Atom(Atom),
    /// Vertex `(g, h)` of a general Kronecker product.
    Pair(Box<VertexLabel>, Box<VertexLabel>),
}

impl VertexLabel {
    pub fn new(family: Family, index: u32) -> Self {
        VertexLabel::Atom(Atom { family, index, layer: None })
    }

    pub fn layered(family: Family, index: u32, layer: u8) -> Self {
        VertexLabel::Atom(Atom { family, index, layer: Some(layer) })
    }

    pub fn pair(left: VertexLabel, right: VertexLabel) -> Self {
        VertexLabel::Pair(Box::new(left), Box::new(right))
    }

    pub fn atom(&self) -> Option<&Atom> {
        match self {
            VertexLabel::Atom(a) => Some(a),
            VertexLabel::Pair(..) => None,
        }
    }

    pub fn family(&self) -> Option<Family> {
        self.atom().map(|a| a.family)
    }

    pub fn index(&self) -> Option<u32> {
        self.atom().map(|a| a.index)
    }

    pub fn layer(&self) -> Option<u8> {
        self.atom().and_then(|a| a.layer)
    }

    /// Same atom placed in the given layer.
    pub fn with_layer(&self, layer: u8) -> Option<Self> {
        self.atom().map(|a| VertexLabel::layered(a.family, a.index, layer))
    }
}

/// `x1_3` for x¹₃, `u_2` for an unlayered vertex, `(u_1,v_2)` for pairs.
impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Atom(Atom { family, index, layer: Some(k) }) => {
                write!(f, "{family}{k}_{index}")
            }
            VertexLabel::Atom(Atom { family, index, layer: None }) => write!(f, "{family}_{index}"),
            VertexLabel::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Shorthand for the layered labels the constructions are written in.
pub(crate) fn x(index: u32, layer: u8) -> VertexLabel {
    VertexLabel::layered(Family::X, index, layer)
}

pub(crate) fn y(index: u32, layer: u8) -> VertexLabel {
    VertexLabel::layered(Family::Y, index, layer)
}

pub(crate) fn z(index: u32, layer: u8) -> VertexLabel {
    VertexLabel::layered(Family::Z, index, layer)
}
