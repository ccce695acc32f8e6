//! Web diagrams: planar directed bipartite graphs in a disk whose interior
//! vertices are trivalent sources or sinks and whose univalent vertices sit
//! on the boundary.
//!
//! A diagram is stored as a half-edge rotation system. Rotations list the
//! half-edges around a vertex counterclockwise. The boundary points are read
//! counterclockwise around the disk: domain (bottom) left to right, then
//! codomain (top) right to left. A domain point has sign `+` when its edge
//! leaves the boundary, a codomain point has sign `+` when its edge enters
//! it, so `+` strands point upward at both ends.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' | '\u{2212}' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A word over `{+, -}`, the objects of the spider.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct SignSeq(pub Vec<Sign>);

impl SignSeq {
    pub fn empty() -> Self {
        SignSeq(Vec::new())
    }

    pub fn repeat(s: Sign, n: usize) -> Self {
        SignSeq(vec![s; n])
    }

    /// `+^k -^l`.
    pub fn block(k: usize, l: usize) -> Self {
        Self::repeat(Sign::Plus, k).concat(&Self::repeat(Sign::Minus, l))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn concat(&self, other: &SignSeq) -> SignSeq {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignSeq(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> SignSeq {
        SignSeq(self.0[from..to].to_vec())
    }

    /// The dual object: reversed with every sign flipped.
    pub fn dual(&self) -> SignSeq {
        SignSeq(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    pub fn count(&self, s: Sign) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (pos, c) in s.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            out.push(Sign::from_char(c).ok_or(Error::Parse { pos, msg: format!("unexpected sign character '{c}'") })?);
        }
        Ok(SignSeq(out))
    }
}

impl From<&str> for SignSeq {
    /// Panics on characters other than `+` and `-`; meant for literals.
    fn from(s: &str) -> Self {
        s.parse().expect("sign literal")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum VertexKind {
    Source,
    Sink,
    Domain,
    Codomain,
}

impl VertexKind {
    pub fn is_boundary(self) -> bool {
        matches!(self, VertexKind::Domain | VertexKind::Codomain)
    }

    fn code(self) -> u32 {
        match self {
            VertexKind::Source => 0,
            VertexKind::Sink => 1,
            VertexKind::Domain => 2,
            VertexKind::Codomain => 3,
        }
    }

    fn name(self) -> &'static str {
        match self {
            VertexKind::Source => "src",
            VertexKind::Sink => "sink",
            VertexKind::Domain => "dom",
            VertexKind::Codomain => "cod",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "src" => VertexKind::Source,
            "sink" => VertexKind::Sink,
            "dom" => VertexKind::Domain,
            "cod" => VertexKind::Codomain,
            _ => return None,
        })
    }

    fn mirrored(self) -> Self {
        match self {
            VertexKind::Source => VertexKind::Sink,
            VertexKind::Sink => VertexKind::Source,
            VertexKind::Domain => VertexKind::Codomain,
            VertexKind::Codomain => VertexKind::Domain,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Orientation {
    Out,
    In,
}

impl Orientation {
    fn flip(self) -> Self {
        match self {
            Orientation::Out => Orientation::In,
            Orientation::In => Orientation::Out,
        }
    }
}

/// Canonical encoding of a diagram up to boundary-fixing isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CanonicalKey(Box<[u32]>);

impl CanonicalKey {
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|x| x.to_be_bytes()).collect()
    }
}

/// The ten elementary webs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    /// `t[s;s's']`: one strand of sign `s` splits into two of the opposite sign.
    Fork(Sign),
    /// `t[ss;s']`: two strands of sign `s` merge into one of the opposite sign.
    Merge(Sign),
    /// `b[s s']`: cup creating `s` then its opposite.
    Cup(Sign),
    /// `d[s s']`: cap on `s` then its opposite.
    Cap(Sign),
    /// `H[s s';s' s]`: the sideways I-web swapping the two signs.
    H(Sign),
}

impl Generator {
    pub fn all() -> [Generator; 10] {
        use Generator::*;
        use Sign::*;
        [Fork(Plus), Fork(Minus), Merge(Plus), Merge(Minus), Cup(Plus), Cup(Minus), Cap(Plus), Cap(Minus), H(Plus), H(Minus)]
    }

    pub fn domain(self) -> SignSeq {
        match self {
            Generator::Fork(s) => SignSeq(vec![s]),
            Generator::Merge(s) => SignSeq(vec![s, s]),
            Generator::Cup(_) => SignSeq::empty(),
            Generator::Cap(s) | Generator::H(s) => SignSeq(vec![s, s.flip()]),
        }
    }

    pub fn codomain(self) -> SignSeq {
        match self {
            Generator::Fork(s) => SignSeq(vec![s.flip(), s.flip()]),
            Generator::Merge(s) => SignSeq(vec![s.flip()]),
            Generator::Cup(s) => SignSeq(vec![s, s.flip()]),
            Generator::Cap(_) => SignSeq::empty(),
            Generator::H(s) => SignSeq(vec![s.flip(), s]),
        }
    }

    /// The generator obtained by reflecting top and bottom and reversing edges.
    pub fn star(self) -> Generator {
        match self {
            Generator::Fork(s) => Generator::Merge(s.flip()),
            Generator::Merge(s) => Generator::Fork(s.flip()),
            Generator::Cup(s) => Generator::Cap(s),
            Generator::Cap(s) => Generator::Cup(s),
            Generator::H(s) => Generator::H(s.flip()),
        }
    }

    pub fn diagram(self) -> WebDiagram {
        WebDiagram::generator(self)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, c) = (self.domain(), self.codomain());
        match self {
            Generator::Fork(_) | Generator::Merge(_) => write!(f, "t[{d};{c}]"),
            Generator::Cup(_) => write!(f, "b[{c}]"),
            Generator::Cap(_) => write!(f, "d[{d}]"),
            Generator::H(_) => write!(f, "H[{d};{c}]"),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Generator::all()
            .into_iter()
            .find(|g| g.to_string() == compact)
            .ok_or(Error::Parse { pos: 0, msg: format!("unknown generator '{s}'") })
    }
}

/// A web diagram in a disk.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WebDiagram {
    kinds: Vec<VertexKind>,
    rot: Vec<Vec<u32>>,
    he_vertex: Vec<u32>,
    he_twin: Vec<u32>,
    he_dir: Vec<Orientation>,
    domain: Vec<u32>,
    codomain: Vec<u32>,
    loops: u32,
}

/// A face of the diagram, listed as the half-edges along its boundary walk.
#[derive(Clone, Debug)]
pub(crate) struct Face {
    pub halfedges: Vec<u32>,
    pub touches_boundary: bool,
}

struct Builder {
    d: WebDiagram,
}

impl Builder {
    fn new() -> Self {
        Builder { d: WebDiagram::default() }
    }

    fn vertex(&mut self, kind: VertexKind) -> u32 {
        self.d.kinds.push(kind);
        self.d.rot.push(Vec::new());
        let v = self.d.kinds.len() as u32 - 1;
        match kind {
            VertexKind::Domain => self.d.domain.push(v),
            VertexKind::Codomain => self.d.codomain.push(v),
            _ => {}
        }
        v
    }

    /// Adds a directed edge `a -> b`, returning the half-edges at `a` and `b`.
    fn edge(&mut self, a: u32, b: u32) -> (u32, u32) {
        let ha = self.d.he_vertex.len() as u32;
        let hb = ha + 1;
        self.d.he_vertex.extend([a, b]);
        self.d.he_twin.extend([hb, ha]);
        self.d.he_dir.extend([Orientation::Out, Orientation::In]);
        for (v, h) in [(a, ha), (b, hb)] {
            if self.d.kinds[v as usize].is_boundary() {
                self.d.rot[v as usize] = vec![h];
            }
        }
        (ha, hb)
    }

    /// Edge between a boundary vertex and an interior one, directed to match `sign`.
    fn boundary_edge(&mut self, boundary: u32, sign: Sign, interior: u32) -> u32 {
        let bottom = self.d.kinds[boundary as usize] == VertexKind::Domain;
        let upward = sign == Sign::Plus;
        if bottom == upward {
            self.edge(boundary, interior).1
        } else {
            self.edge(interior, boundary).0
        }
    }

    fn strand(&mut self, sign: Sign) {
        let b = self.vertex(VertexKind::Domain);
        let c = self.vertex(VertexKind::Codomain);
        match sign {
            Sign::Plus => self.edge(b, c),
            Sign::Minus => self.edge(c, b),
        };
    }

    fn rotation(&mut self, v: u32, hs: Vec<u32>) {
        self.d.rot[v as usize] = hs;
    }

    fn finish(self) -> WebDiagram {
        debug_assert!(self.d.validate().is_ok(), "{:?}", self.d.validate());
        self.d
    }
}

impl WebDiagram {
    /// The empty diagram on the empty boundary.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn identity(eps: &SignSeq) -> Self {
        let mut b = Builder::new();
        for &s in eps.signs() {
            b.strand(s);
        }
        b.finish()
    }

    pub fn generator(g: Generator) -> Self {
        use VertexKind::*;
        let mut b = Builder::new();
        match g {
            Generator::Fork(s) => {
                let kind = if s == Sign::Minus { Source } else { Sink };
                let d0 = b.vertex(Domain);
                let c0 = b.vertex(Codomain);
                let c1 = b.vertex(Codomain);
                let v = b.vertex(kind);
                let hb = b.boundary_edge(d0, s, v);
                let hl = b.boundary_edge(c0, s.flip(), v);
                let hr = b.boundary_edge(c1, s.flip(), v);
                b.rotation(v, vec![hb, hr, hl]);
            }
            Generator::Merge(s) => {
                let kind = if s == Sign::Plus { Sink } else { Source };
                let d0 = b.vertex(Domain);
                let d1 = b.vertex(Domain);
                let c0 = b.vertex(Codomain);
                let v = b.vertex(kind);
                let hl = b.boundary_edge(d0, s, v);
                let hr = b.boundary_edge(d1, s, v);
                let ht = b.boundary_edge(c0, s.flip(), v);
                b.rotation(v, vec![ht, hl, hr]);
            }
            Generator::Cup(s) => {
                let c0 = b.vertex(Codomain);
                let c1 = b.vertex(Codomain);
                match s {
                    Sign::Plus => b.edge(c1, c0),
                    Sign::Minus => b.edge(c0, c1),
                };
            }
            Generator::Cap(s) => {
                let d0 = b.vertex(Domain);
                let d1 = b.vertex(Domain);
                match s {
                    Sign::Plus => b.edge(d0, d1),
                    Sign::Minus => b.edge(d1, d0),
                };
            }
            Generator::H(s) => {
                // H[+-;-+] has its sink on the left, H[-+;+-] its source.
                let (left_kind, right_kind) = if s == Sign::Plus { (Sink, Source) } else { (Source, Sink) };
                let d0 = b.vertex(Domain);
                let d1 = b.vertex(Domain);
                let c0 = b.vertex(Codomain);
                let c1 = b.vertex(Codomain);
                let l = b.vertex(left_kind);
                let r = b.vertex(right_kind);
                let (ml, mr) = if s == Sign::Plus {
                    let (hr, hl) = b.edge(r, l);
                    (hl, hr)
                } else {
                    b.edge(l, r)
                };
                let lb = b.boundary_edge(d0, s, l);
                let lt = b.boundary_edge(c0, s.flip(), l);
                let rb = b.boundary_edge(d1, s.flip(), r);
                let rt = b.boundary_edge(c1, s, r);
                b.rotation(l, vec![ml, lt, lb]);
                b.rotation(r, vec![rt, mr, rb]);
            }
        }
        b.finish()
    }

    /// Nested cups from the empty boundary to `eps` followed by its dual.
    pub fn nested_cups(eps: &SignSeq) -> Self {
        let n = eps.len();
        let mut b = Builder::new();
        let top: Vec<u32> = (0..2 * n).map(|_| b.vertex(VertexKind::Codomain)).collect();
        for (i, &s) in eps.signs().iter().enumerate() {
            let (l, r) = (top[i], top[2 * n - 1 - i]);
            match s {
                Sign::Plus => b.edge(r, l),
                Sign::Minus => b.edge(l, r),
            };
        }
        b.finish()
    }

    /// Nested caps from `eps` followed by its dual down to the empty boundary.
    pub fn nested_caps(eps: &SignSeq) -> Self {
        Self::nested_cups(eps).star()
    }

    pub fn num_vertices(&self) -> usize {
        self.kinds.len()
    }

    pub fn num_halfedges(&self) -> usize {
        self.he_vertex.len()
    }

    pub fn num_trivalent(&self) -> usize {
        self.kinds.iter().filter(|k| !k.is_boundary()).count()
    }

    pub fn num_edges(&self) -> usize {
        self.he_vertex.len() / 2
    }

    /// Number of closed loops without vertices.
    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn kind(&self, v: u32) -> VertexKind {
        self.kinds[v as usize]
    }

    pub fn rotation(&self, v: u32) -> &[u32] {
        &self.rot[v as usize]
    }

    pub fn vertex_of(&self, h: u32) -> u32 {
        self.he_vertex[h as usize]
    }

    pub fn twin(&self, h: u32) -> u32 {
        self.he_twin[h as usize]
    }

    pub fn orientation(&self, h: u32) -> Orientation {
        self.he_dir[h as usize]
    }

    pub fn domain_vertices(&self) -> &[u32] {
        &self.domain
    }

    pub fn codomain_vertices(&self) -> &[u32] {
        &self.codomain
    }

    fn boundary_sign(&self, v: u32) -> Sign {
        let h = self.rot[v as usize][0];
        let out = self.he_dir[h as usize] == Orientation::Out;
        let plus = match self.kinds[v as usize] {
            VertexKind::Domain => out,
            _ => !out,
        };
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn domain_signs(&self) -> SignSeq {
        SignSeq(self.domain.iter().map(|&v| self.boundary_sign(v)).collect())
    }

    pub fn codomain_signs(&self) -> SignSeq {
        SignSeq(self.codomain.iter().map(|&v| self.boundary_sign(v)).collect())
    }


    pub(crate) fn without_loops(&self) -> Self {
        let mut d = self.clone();
        d.loops = 0;
        d
    }

    /// Counterclockwise successor of `h` around its vertex.
    pub(crate) fn rot_next(&self, h: u32) -> u32 {
        let r = &self.rot[self.he_vertex[h as usize] as usize];
        let i = r.iter().position(|&x| x == h).unwrap();
        r[(i + 1) % r.len()]
    }

    /// Boundary vertices in counterclockwise order around the disk.
    fn boundary_cycle(&self) -> Vec<u32> {
        self.domain.iter().copied().chain(self.codomain.iter().rev().copied()).collect()
    }

    /// Face orbits. Walking along `h`, the next half-edge is the
    /// counterclockwise successor of `twin(h)`; arriving at a boundary point
    /// the walk follows the disk boundary to the previous boundary point.
    pub(crate) fn faces(&self) -> Vec<Face> {
        let cycle = self.boundary_cycle();
        let mut prev_boundary = vec![u32::MAX; self.kinds.len()];
        for (i, &v) in cycle.iter().enumerate() {
            prev_boundary[v as usize] = cycle[(i + cycle.len() - 1) % cycle.len()];
        }
        let next = |h: u32| -> u32 {
            let t = self.he_twin[h as usize];
            let w = self.he_vertex[t as usize];
            if self.kinds[w as usize].is_boundary() {
                self.rot[prev_boundary[w as usize] as usize][0]
            } else {
                self.rot_next(t)
            }
        };
        let mut seen = vec![false; self.he_vertex.len()];
        let mut faces = Vec::new();
        for start in 0..self.he_vertex.len() as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut hs = Vec::new();
            let mut touches = false;
            let mut h = start;
            loop {
                seen[h as usize] = true;
                hs.push(h);
                touches |= self.kinds[self.he_vertex[h as usize] as usize].is_boundary();
                h = next(h);
                if h == start {
                    break;
                }
            }
            faces.push(Face { halfedges: hs, touches_boundary: touches });
        }
        faces
    }

    /// Component index of each vertex; boundary-attached components first.
    fn components(&self) -> (Vec<usize>, usize) {
        let n = self.kinds.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let order: Vec<u32> = self.boundary_cycle().into_iter().chain(0..n as u32).collect();
        let mut frame_comp = None;
        for v in order {
            if comp[v as usize] != usize::MAX {
                continue;
            }
            let id = if self.kinds[v as usize].is_boundary() {
                *frame_comp.get_or_insert_with(|| {
                    count += 1;
                    count - 1
                })
            } else {
                count += 1;
                count - 1
            };
            let mut stack = vec![v];
            comp[v as usize] = id;
            while let Some(x) = stack.pop() {
                for &h in &self.rot[x as usize] {
                    let y = self.he_vertex[self.he_twin[h as usize] as usize];
                    if comp[y as usize] == usize::MAX {
                        comp[y as usize] = id;
                        stack.push(y);
                    }
                }
            }
        }
        (comp, count)
    }

    /// Side counts of the internal faces, ascending. Each loop contributes a
    /// 0-gon. A closed component contributes all of its faces except one
    /// largest face, which plays the role of its outside.
    pub fn internal_faces(&self) -> Vec<usize> {
        let faces = self.faces();
        let (comp, ncomp) = self.components();
        let frame = if self.domain.is_empty() && self.codomain.is_empty() { None } else { Some(0) };
        let mut out = vec![0; self.loops as usize];
        let mut closed: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for f in &faces {
            let c = comp[self.he_vertex[f.halfedges[0] as usize] as usize];
            if Some(c) == frame {
                if !f.touches_boundary {
                    out.push(f.halfedges.len());
                }
            } else {
                closed[c].push(f.halfedges.len());
            }
        }
        for mut sizes in closed.into_iter().filter(|s| !s.is_empty()) {
            sizes.sort_unstable();
            sizes.pop();
            out.extend(sizes);
        }
        out.sort_unstable();
        out
    }

    /// Non-elliptic: no loops, no closed components, every internal face has
    /// at least six sides.
    pub fn is_basis_web(&self) -> bool {
        if self.loops > 0 {
            return false;
        }
        let (comp, _) = self.components();
        let has_boundary = !(self.domain.is_empty() && self.codomain.is_empty());
        if comp.iter().any(|&c| !has_boundary || c != 0) && !self.kinds.is_empty() {
            return false;
        }
        self.faces().iter().all(|f| f.touches_boundary || f.halfedges.len() >= 6)
    }

    /// Checks every structural invariant, including planarity with the
    /// boundary points in order around a single outer face.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWeb(m));
        let nh = self.he_vertex.len();
        if self.he_twin.len() != nh || self.he_dir.len() != nh || self.rot.len() != self.kinds.len() {
            return bad("inconsistent table sizes".into());
        }
        let mut seen = vec![false; nh];
        for (v, r) in self.rot.iter().enumerate() {
            let want = if self.kinds[v].is_boundary() { 1 } else { 3 };
            if r.len() != want {
                return bad(format!("vertex {v} has degree {} instead of {want}", r.len()));
            }
            for &h in r {
                if h as usize >= nh || seen[h as usize] || self.he_vertex[h as usize] as usize != v {
                    return bad(format!("half-edge {h} is misplaced in the rotation of vertex {v}"));
                }
                seen[h as usize] = true;
                let dir = self.he_dir[h as usize];
                match self.kinds[v] {
                    VertexKind::Source if dir != Orientation::Out => {
                        return bad(format!("source {v} has an incoming half-edge"));
                    }
                    VertexKind::Sink if dir != Orientation::In => {
                        return bad(format!("sink {v} has an outgoing half-edge"));
                    }
                    _ => {}
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("half-edge missing from every rotation".into());
        }
        for h in 0..nh {
            let t = self.he_twin[h] as usize;
            if t >= nh || t == h || self.he_twin[t] as usize != h {
                return bad(format!("twin of half-edge {h} is not an involution"));
            }
            if self.he_dir[t] == self.he_dir[h] {
                return bad(format!("edge at half-edge {h} is not directed consistently"));
            }
        }
        let mut bset = vec![0u8; self.kinds.len()];
        for &v in &self.domain {
            if self.kinds.get(v as usize) != Some(&VertexKind::Domain) {
                return bad(format!("domain entry {v} is not a domain vertex"));
            }
            bset[v as usize] += 1;
        }
        for &v in &self.codomain {
            if self.kinds.get(v as usize) != Some(&VertexKind::Codomain) {
                return bad(format!("codomain entry {v} is not a codomain vertex"));
            }
            bset[v as usize] += 1;
        }
        for (v, k) in self.kinds.iter().enumerate() {
            if k.is_boundary() != (bset[v] == 1) {
                return bad(format!("boundary vertex {v} is not listed exactly once"));
            }
        }
        let (comp, ncomp) = self.components();
        let faces = self.faces();
        let mut v_count = vec![0i64; ncomp];
        let mut e_count = vec![0i64; ncomp];
        let mut f_count = vec![0i64; ncomp];
        for c in &comp {
            v_count[*c] += 1;
        }
        for h in 0..nh {
            e_count[comp[self.he_vertex[h] as usize]] += 1;
        }
        for f in &faces {
            f_count[comp[self.he_vertex[f.halfedges[0] as usize] as usize]] += 1;
        }
        let nb = (self.domain.len() + self.codomain.len()) as i64;
        for c in 0..ncomp {
            let e = e_count[c] / 2;
            let chi = if c == 0 && nb > 0 {
                v_count[c] - (e + nb) + (f_count[c] + 1)
            } else {
                v_count[c] - e + f_count[c]
            };
            if chi != 2 {
                return bad(format!("component {c} is not planar (Euler characteristic {chi})"));
            }
        }
        Ok(())
    }

    /// Removes the vertices marked in `removed` and reconnects the diagram
    /// through `links`: each link joins two half-edges at removed vertices,
    /// and the surviving neighbours of linked half-edges are joined by
    /// following chains of links. Closed chains become loops.
    pub(crate) fn splice(&self, removed: &[bool], links: &[(u32, u32)]) -> WebDiagram {
        let nh = self.he_vertex.len();
        let mut partner = vec![u32::MAX; nh];
        for &(a, b) in links {
            partner[a as usize] = b;
            partner[b as usize] = a;
        }
        let alive_v = |v: u32| !removed[v as usize];
        let alive_h = |h: u32| alive_v(self.he_vertex[h as usize]);
        let mut new_twin = self.he_twin.clone();
        let mut visited = vec![false; nh];
        for h in 0..nh as u32 {
            if !alive_h(h) {
                continue;
            }
            let mut t = self.he_twin[h as usize];
            if alive_h(t) {
                continue;
            }
            loop {
                visited[t as usize] = true;
                let q = partner[t as usize];
                debug_assert!(q != u32::MAX, "unlinked port {t}");
                visited[q as usize] = true;
                let nt = self.he_twin[q as usize];
                if alive_h(nt) {
                    new_twin[h as usize] = nt;
                    break;
                }
                t = nt;
            }
        }
        let mut new_loops = 0;
        for p in 0..nh as u32 {
            if visited[p as usize] || partner[p as usize] == u32::MAX {
                continue;
            }
            new_loops += 1;
            let mut t = p;
            loop {
                visited[t as usize] = true;
                let q = partner[t as usize];
                visited[q as usize] = true;
                t = self.he_twin[q as usize];
                if t == p {
                    break;
                }
            }
        }
        let mut vmap = vec![u32::MAX; self.kinds.len()];
        let mut out = WebDiagram { loops: self.loops + new_loops, ..Default::default() };
        for v in 0..self.kinds.len() {
            if !removed[v] {
                vmap[v] = out.kinds.len() as u32;
                out.kinds.push(self.kinds[v]);
            }
        }
        let mut hmap = vec![u32::MAX; nh];
        let mut next = 0;
        for (h, slot) in hmap.iter_mut().enumerate() {
            if alive_h(h as u32) {
                *slot = next;
                next += 1;
            }
        }
        for (h, &mapped) in hmap.iter().enumerate() {
            if mapped == u32::MAX {
                continue;
            }
            out.he_vertex.push(vmap[self.he_vertex[h] as usize]);
            out.he_twin.push(hmap[new_twin[h] as usize]);
            out.he_dir.push(self.he_dir[h]);
        }
        for (v, gone) in removed.iter().enumerate() {
            if !gone {
                out.rot.push(self.rot[v].iter().map(|&h| hmap[h as usize]).collect());
            }
        }
        out.domain = self.domain.iter().filter(|&&v| alive_v(v)).map(|&v| vmap[v as usize]).collect();
        out.codomain = self.codomain.iter().filter(|&&v| alive_v(v)).map(|&v| vmap[v as usize]).collect();
        out
    }

    /// Disjoint union with `other`'s ids shifted past ours; boundaries concatenated.
    fn union(&self, other: &WebDiagram) -> WebDiagram {
        let vo = self.kinds.len() as u32;
        let ho = self.he_vertex.len() as u32;
        let mut d = self.clone();
        d.kinds.extend_from_slice(&other.kinds);
        d.rot.extend(other.rot.iter().map(|r| r.iter().map(|h| h + ho).collect()));
        d.he_vertex.extend(other.he_vertex.iter().map(|v| v + vo));
        d.he_twin.extend(other.he_twin.iter().map(|h| h + ho));
        d.he_dir.extend_from_slice(&other.he_dir);
        d.domain.extend(other.domain.iter().map(|v| v + vo));
        d.codomain.extend(other.codomain.iter().map(|v| v + vo));
        d.loops += other.loops;
        d
    }

    /// Side by side, `self` on the left.
    pub fn glue_tensor(&self, other: &WebDiagram) -> WebDiagram {
        self.union(other)
    }

    /// Stacks `other` on top of `self`. No reduction is performed.
    pub fn glue_compose(&self, other: &WebDiagram) -> Result<WebDiagram> {
        let cod = self.codomain_signs();
        let dom = other.domain_signs();
        if cod != dom {
            let position = cod.signs().iter().zip(dom.signs()).position(|(a, b)| a != b).unwrap_or(cod.len().min(dom.len()));
            return Err(Error::BoundaryMismatch { position, expected: cod, found: dom });
        }
        let vo = self.kinds.len() as u32;
        let mut u = self.union(other);
        u.domain.truncate(self.domain.len());
        u.codomain.drain(..self.codomain.len());
        let mut removed = vec![false; u.kinds.len()];
        let mut links = Vec::with_capacity(cod.len());
        for (&a, &b) in self.codomain.iter().zip(&other.domain) {
            let b = b + vo;
            removed[a as usize] = true;
            removed[b as usize] = true;
            links.push((u.rot[a as usize][0], u.rot[b as usize][0]));
        }
        // Cut boundary vertices out of the boundary lists before splicing.
        let mut tmp = u;
        tmp.codomain.retain(|&v| !removed[v as usize]);
        Ok(tmp.splice(&removed, &links))
    }

    /// Reflection through a horizontal line with every edge reversed.
    pub fn star(&self) -> WebDiagram {
        WebDiagram {
            kinds: self.kinds.iter().map(|k| k.mirrored()).collect(),
            rot: self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect(),
            he_vertex: self.he_vertex.clone(),
            he_twin: self.he_twin.clone(),
            he_dir: self.he_dir.iter().map(|d| d.flip()).collect(),
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            loops: self.loops,
        }
    }

    /// BFS labelling from the given seeds; returns the visiting order and the
    /// entry half-edge of every visited vertex.
    fn bfs(&self, seeds: &[(u32, u32)], label: &mut [u32], entry: &mut [u32], next_label: &mut u32) -> Vec<u32> {
        let mut order = Vec::new();
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &(v, h) in seeds {
            entry[v as usize] = h;
            queue.push_back(v);
        }
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let r = &self.rot[v as usize];
            let start = r.iter().position(|&h| h == entry[v as usize]).unwrap();
            for i in 0..r.len() {
                let h = r[(start + i) % r.len()];
                let t = self.he_twin[h as usize];
                let w = self.he_vertex[t as usize];
                if label[w as usize] == u32::MAX {
                    label[w as usize] = *next_label;
                    *next_label += 1;
                    entry[w as usize] = t;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Encoding of a set of labelled vertices; half-edges are numbered by
    /// vertex label, then rotation position from the entry half-edge.
    fn encode(&self, by_label: &[u32], entry: &[u32], he_label: &mut [u32], base: u32, out: &mut Vec<u32>) {
        let mut next = base;
        for &v in by_label {
            let r = &self.rot[v as usize];
            let start = r.iter().position(|&h| h == entry[v as usize]).unwrap();
            for i in 0..r.len() {
                he_label[r[(start + i) % r.len()] as usize] = next;
                next += 1;
            }
        }
        for &v in by_label {
            out.push(self.kinds[v as usize].code());
            let r = &self.rot[v as usize];
            let start = r.iter().position(|&h| h == entry[v as usize]).unwrap();
            for i in 0..r.len() {
                let h = r[(start + i) % r.len()];
                out.push(he_label[self.he_twin[h as usize] as usize]);
                out.push(matches!(self.he_dir[h as usize], Orientation::Out) as u32);
            }
        }
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        self.canonicalize().0
    }

    /// Relabels the diagram canonically. Domain vertices receive labels
    /// `0..m` left to right and codomain vertices the next `n` labels left to
    /// right; interior vertices follow in breadth-first order from the
    /// boundary. Closed components are each rooted at the half-edge giving
    /// the smallest encoding and are sorted by encoding; their position
    /// inside the disk is not recorded.
    pub fn canonicalize(&self) -> (CanonicalKey, WebDiagram) {
        let nv = self.kinds.len();
        let nh = self.he_vertex.len();
        let mut label = vec![u32::MAX; nv];
        let mut entry = vec![u32::MAX; nv];
        let (m, n) = (self.domain.len() as u32, self.codomain.len() as u32);
        for (i, &v) in self.domain.iter().enumerate() {
            label[v as usize] = i as u32;
        }
        for (i, &v) in self.codomain.iter().enumerate() {
            label[v as usize] = m + i as u32;
        }
        let mut next_label = m + n;
        let seeds: Vec<(u32, u32)> = self.boundary_cycle().into_iter().map(|v| (v, self.rot[v as usize][0])).collect();
        let order = self.bfs(&seeds, &mut label, &mut entry, &mut next_label);
        let mut frame: Vec<u32> = order;
        frame.sort_by_key(|&v| label[v as usize]);

        let mut key = vec![m, n, self.loops];
        let mut he_label = vec![u32::MAX; nh];
        self.encode(&frame, &entry, &mut he_label, 0, &mut key);
        let mut he_base = frame.iter().map(|&v| self.rot[v as usize].len() as u32).sum::<u32>();

        // Closed components.
        let mut comps: Vec<(Vec<u32>, Vec<u32>, Vec<u32>)> = Vec::new();
        let mut scratch_label = vec![u32::MAX; nv];
        let mut scratch_entry = vec![u32::MAX; nv];
        let mut scratch_he = vec![u32::MAX; nh];
        for v0 in 0..nv as u32 {
            if label[v0 as usize] != u32::MAX {
                continue;
            }
            let mut best: Option<(Vec<u32>, Vec<u32>, Vec<u32>)> = None;
            let members: Vec<u32> = {
                let mut nl = 0;
                scratch_label[v0 as usize] = 0;
                nl += 1;
                let o = self.bfs(&[(v0, self.rot[v0 as usize][0])], &mut scratch_label, &mut scratch_entry, &mut nl);
                for &x in &o {
                    scratch_label[x as usize] = u32::MAX;
                }
                o
            };
            for &x in &members {
                for &root in &self.rot[x as usize] {
                    let mut nl = 1;
                    scratch_label[x as usize] = 0;
                    let o = self.bfs(&[(x, root)], &mut scratch_label, &mut scratch_entry, &mut nl);
                    let mut enc = Vec::new();
                    self.encode(&o, &scratch_entry, &mut scratch_he, 0, &mut enc);
                    let entries: Vec<u32> = o.iter().map(|&y| scratch_entry[y as usize]).collect();
                    for &y in &o {
                        scratch_label[y as usize] = u32::MAX;
                    }
                    if best.as_ref().is_none_or(|b| enc < b.0) {
                        best = Some((enc, o, entries));
                    }
                }
            }
            let best = best.unwrap();
            for &y in &best.1 {
                label[y as usize] = 0;
            }
            comps.push(best);
        }
        comps.sort_by(|a, b| a.0.cmp(&b.0));
        let mut by_label = frame;
        for (enc, o, entries) in &comps {
            for (&y, &e) in o.iter().zip(entries) {
                entry[y as usize] = e;
            }
            self.encode(o, &entry, &mut he_label, he_base, &mut Vec::new());
            he_base += o.iter().map(|&v| self.rot[v as usize].len() as u32).sum::<u32>();
            key.push(u32::MAX);
            key.extend_from_slice(enc);
            by_label.extend_from_slice(o);
        }

        let mut out = WebDiagram { loops: self.loops, ..Default::default() };
        let mut vnew = vec![0u32; nv];
        for (i, &v) in by_label.iter().enumerate() {
            vnew[v as usize] = i as u32;
        }
        out.he_vertex = vec![0; nh];
        out.he_twin = vec![0; nh];
        out.he_dir = vec![Orientation::Out; nh];
        for &v in &by_label {
            out.kinds.push(self.kinds[v as usize]);
            let r = &self.rot[v as usize];
            let start = r.iter().position(|&h| h == entry[v as usize]).unwrap();
            let mut nr = Vec::with_capacity(r.len());
            for i in 0..r.len() {
                let h = r[(start + i) % r.len()];
                let nhid = he_label[h as usize];
                nr.push(nhid);
                out.he_vertex[nhid as usize] = vnew[v as usize];
                out.he_twin[nhid as usize] = he_label[self.he_twin[h as usize] as usize];
                out.he_dir[nhid as usize] = self.he_dir[h as usize];
            }
            out.rot.push(nr);
        }
        out.domain = (0..m).collect();
        out.codomain = (m..m + n).collect();
        (CanonicalKey(key.into_boxed_slice()), out)
    }

    /// Finds reducible boundary patterns of an endomorphism web: a vertex
    /// whose two legs end on adjacent codomain points (or a cup) at the top,
    /// and the analogous vertex or cap at the bottom.
    pub fn boundary_reducer_scan(&self) -> BoundaryScan {
        BoundaryScan { top: self.adjacent_pattern(&self.codomain, true), bottom: self.adjacent_pattern(&self.domain, false) }
    }

    fn adjacent_pattern(&self, side: &[u32], top: bool) -> Option<(usize, Generator)> {
        for i in 0..side.len().saturating_sub(1) {
            let (a, b) = (side[i], side[i + 1]);
            let ta = self.he_vertex[self.he_twin[self.rot[a as usize][0] as usize] as usize];
            let tb = self.he_vertex[self.he_twin[self.rot[b as usize][0] as usize] as usize];
            let sa = self.boundary_sign(a);
            if ta == b {
                return Some((i, if top { Generator::Cup(sa) } else { Generator::Cap(sa) }));
            }
            if ta == tb && !self.kinds[ta as usize].is_boundary() {
                return Some((i, if top { Generator::Fork(sa.flip()) } else { Generator::Merge(sa) }));
            }
        }
        None
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_struct()).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_struct()).expect("serializable")
    }

    fn to_json_struct(&self) -> WebJson {
        WebJson {
            domain: self.domain_signs().to_string(),
            codomain: self.codomain_signs().to_string(),
            vertices: self
                .kinds
                .iter()
                .enumerate()
                .map(|(i, k)| VertexJson { id: i as u32, kind: k.name().to_string(), rot: self.rot[i].clone() })
                .collect(),
            halfedges: (0..self.he_vertex.len())
                .map(|h| HalfEdgeJson {
                    id: h as u32,
                    twin: self.he_twin[h],
                    vertex: self.he_vertex[h],
                    dir: match self.he_dir[h] {
                        Orientation::Out => "out".into(),
                        Orientation::In => "in".into(),
                    },
                })
                .collect(),
            loops: self.loops,
        }
    }

    pub fn from_json(text: &str) -> Result<WebDiagram> {
        let j: WebJson = serde_json::from_str(text).map_err(|e| Error::InvalidWeb(e.to_string()))?;
        Self::from_json_struct(j)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<WebDiagram> {
        let j: WebJson = serde_json::from_value(v.clone()).map_err(|e| Error::InvalidWeb(e.to_string()))?;
        Self::from_json_struct(j)
    }

    fn from_json_struct(j: WebJson) -> Result<WebDiagram> {
        let bad = |m: String| Error::InvalidWeb(m);
        let mut vids: Vec<u32> = j.vertices.iter().map(|v| v.id).collect();
        let mut hids: Vec<u32> = j.halfedges.iter().map(|h| h.id).collect();
        vids.sort_unstable();
        hids.sort_unstable();
        if vids.windows(2).any(|w| w[0] == w[1]) || hids.windows(2).any(|w| w[0] == w[1]) {
            return Err(bad("duplicate ids".into()));
        }
        let vix = |id: u32| vids.binary_search(&id).map(|i| i as u32).map_err(|_| bad(format!("unknown vertex id {id}")));
        let hix = |id: u32| hids.binary_search(&id).map(|i| i as u32).map_err(|_| bad(format!("unknown half-edge id {id}")));
        let nv = vids.len();
        let nh = hids.len();
        let mut d = WebDiagram { loops: j.loops, ..Default::default() };
        d.kinds = vec![VertexKind::Source; nv];
        d.rot = vec![Vec::new(); nv];
        d.he_vertex = vec![0; nh];
        d.he_twin = vec![0; nh];
        d.he_dir = vec![Orientation::Out; nh];
        for v in &j.vertices {
            let i = vix(v.id)? as usize;
            d.kinds[i] = VertexKind::from_name(&v.kind).ok_or_else(|| bad(format!("unknown vertex kind '{}'", v.kind)))?;
            d.rot[i] = v.rot.iter().map(|&h| hix(h)).collect::<Result<_>>()?;
        }
        for h in &j.halfedges {
            let i = hix(h.id)? as usize;
            d.he_vertex[i] = vix(h.vertex)?;
            d.he_twin[i] = hix(h.twin)?;
            d.he_dir[i] = match h.dir.as_str() {
                "out" => Orientation::Out,
                "in" => Orientation::In,
                other => return Err(bad(format!("unknown direction '{other}'"))),
            };
        }
        d.domain = (0..nv as u32).filter(|&v| d.kinds[v as usize] == VertexKind::Domain).collect();
        d.codomain = (0..nv as u32).filter(|&v| d.kinds[v as usize] == VertexKind::Codomain).collect();
        d.validate()?;
        let dom: SignSeq = j.domain.parse()?;
        let cod: SignSeq = j.codomain.parse()?;
        if d.domain_signs() != dom || d.codomain_signs() != cod {
            return Err(bad(format!(
                "declared boundary {dom} -> {cod} differs from edge directions {} -> {}",
                d.domain_signs(),
                d.codomain_signs()
            )));
        }
        Ok(d)
    }
}

/// Result of [`WebDiagram::boundary_reducer_scan`]: boundary position and pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryScan {
    pub top: Option<(usize, Generator)>,
    pub bottom: Option<(usize, Generator)>,
}

#[derive(Serialize, Deserialize)]
struct WebJson {
    domain: String,
    codomain: String,
    vertices: Vec<VertexJson>,
    halfedges: Vec<HalfEdgeJson>,
    #[serde(default, skip_serializing_if = "is_zero")]
    loops: u32,
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: u32,
    kind: String,
    rot: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct HalfEdgeJson {
    id: u32,
    twin: u32,
    vertex: u32,
    dir: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;
    use Sign::*;

    fn seq(s: &str) -> SignSeq {
        SignSeq::from(s)
    }

    fn compose(a: &WebDiagram, b: &WebDiagram) -> WebDiagram {
        a.glue_compose(b).unwrap()
    }

    #[test]
    fn generators_have_expected_boundaries() {
        for g in Generator::all() {
            let d = g.diagram();
            d.validate().unwrap();
            assert_eq!(d.domain_signs(), g.domain(), "{g}");
            assert_eq!(d.codomain_signs(), g.codomain(), "{g}");
            assert!(d.is_basis_web());
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert_eq!(Fork(Minus).to_string(), "t[-;++]");
        assert_eq!(Cup(Plus).to_string(), "b[+-]");
        assert_eq!(H(Plus).to_string(), "H[+-;-+]");
    }

    #[test]
    fn identity_boundaries() {
        let id = WebDiagram::identity(&seq("+-"));
        assert_eq!(id.domain_signs(), seq("+-"));
        assert_eq!(id.codomain_signs(), seq("+-"));
        assert!(id.internal_faces().is_empty());
        assert_eq!(WebDiagram::identity(&SignSeq::empty()), WebDiagram::empty());
    }

    #[test]
    fn compose_cup_cap_gives_loop() {
        let c = compose(&Cup(Plus).diagram(), &Cap(Plus).diagram());
        assert_eq!(c.num_vertices(), 0);
        assert_eq!(c.loops(), 1);
        assert_eq!(c.internal_faces(), vec![0]);
    }

    #[test]
    fn compose_identity_is_neutral() {
        let id = WebDiagram::identity(&seq("+"));
        assert_eq!(compose(&id, &id).canonical_key(), id.canonical_key());
        let h = H(Plus).diagram();
        let left = compose(&WebDiagram::identity(&seq("+-")), &h);
        assert_eq!(left.canonical_key(), h.canonical_key());
    }

    #[test]
    fn bigon_face() {
        let b = compose(&Fork(Minus).diagram(), &Merge(Plus).diagram());
        b.validate().unwrap();
        assert_eq!(b.internal_faces(), vec![2]);
        assert!(!b.is_basis_web());
    }

    #[test]
    fn square_face() {
        let sq = compose(&H(Plus).diagram(), &H(Minus).diagram());
        sq.validate().unwrap();
        assert_eq!(sq.internal_faces(), vec![4]);
        assert!(!sq.is_basis_web());
    }

    #[test]
    fn tensor_unit_and_identity() {
        let h = H(Plus).diagram();
        assert_eq!(WebDiagram::empty().glue_tensor(&h).canonical_key(), h.canonical_key());
        let pm = WebDiagram::identity(&seq("+")).glue_tensor(&WebDiagram::identity(&seq("-")));
        assert_eq!(pm.canonical_key(), WebDiagram::identity(&seq("+-")).canonical_key());
        let h3 = h.glue_tensor(&WebDiagram::identity(&seq("+")));
        h3.validate().unwrap();
        assert_eq!(h3.domain_signs(), seq("+-+"));
    }

    #[test]
    fn star_examples() {
        let id = WebDiagram::identity(&seq("+"));
        assert_eq!(id.star().canonical_key(), id.canonical_key());
        for g in Generator::all() {
            assert_eq!(g.diagram().star().canonical_key(), g.star().diagram().canonical_key(), "{g}");
        }
        assert_eq!(Cup(Plus).diagram().star().domain_signs(), seq("+-"));
        assert_eq!(H(Plus).star(), H(Minus));
    }

    #[test]
    fn star_reverses_composition() {
        let a = WebDiagram::identity(&seq("+")).glue_tensor(&Cup(Minus).diagram());
        let b = H(Plus).diagram().glue_tensor(&WebDiagram::identity(&seq("+")));
        let lhs = compose(&a, &b).star();
        let rhs = compose(&b.star(), &a.star());
        assert_eq!(lhs.canonical_key(), rhs.canonical_key());
    }

    #[test]
    fn canonical_key_ignores_relabelling() {
        let a = WebDiagram::identity(&seq("+"));
        let b = compose(&compose(&a, &a), &a);
        assert_eq!(a.canonical_key(), b.canonical_key());
        let tt = compose(&Merge(Plus).diagram(), &Fork(Minus).diagram());
        let id2 = WebDiagram::identity(&seq("++"));
        assert_ne!(tt.canonical_key(), id2.canonical_key());
    }

    #[test]
    fn canonical_form_is_stable() {
        let sq = compose(&H(Plus).diagram(), &H(Minus).diagram());
        let (k1, c1) = sq.canonicalize();
        let (k2, c2) = c1.canonicalize();
        assert_eq!(k1, k2);
        assert_eq!(c1, c2);
        c1.validate().unwrap();
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let w = compose(&H(Plus).diagram(), &WebDiagram::identity(&seq("-+"))).canonicalize().1;
        let text = w.to_json();
        let back = WebDiagram::from_json(&text).unwrap();
        assert_eq!(back.to_json(), text);
        assert!(WebDiagram::from_json(&text.replace("\"out\"", "\"in\"")).is_err());
    }

    #[test]
    fn validation_rejects_nonplanar_rotation() {
        // Swap the cyclic order at one vertex of the square web: the
        // resulting rotation system no longer fits in a disk.
        let sq = compose(&H(Plus).diagram(), &H(Minus).diagram()).canonicalize().1;
        let mut bad = sq.clone();
        let v = (0..bad.num_vertices() as u32).find(|&v| !bad.kind(v).is_boundary()).unwrap();
        bad.rot[v as usize].swap(0, 1);
        assert!(bad.validate().is_err());
        assert!(sq.validate().is_ok());
    }

    #[test]
    fn nested_cups_shape() {
        let c = WebDiagram::nested_cups(&seq("+-+"));
        assert_eq!(c.codomain_signs(), seq("+-+-+-"));
        let caps = WebDiagram::nested_caps(&seq("+-+"));
        assert_eq!(caps.domain_signs(), seq("+-+-+-"));
        let closed = compose(&c, &caps);
        assert_eq!(closed.loops(), 3);
    }

    #[test]
    fn boundary_scan_examples() {
        let id = WebDiagram::identity(&seq("+-"));
        assert_eq!(id.boundary_reducer_scan(), BoundaryScan { top: None, bottom: None });
        let db = compose(&Cap(Plus).diagram(), &Cup(Plus).diagram());
        let scan = db.boundary_reducer_scan();
        assert_eq!(scan.top, Some((0, Cup(Plus))));
        assert_eq!(scan.bottom, Some((0, Cap(Plus))));
        let tt = compose(&Merge(Plus).diagram(), &Fork(Minus).diagram());
        let scan = tt.boundary_reducer_scan();
        assert_eq!(scan.top, Some((0, Fork(Minus))));
        assert_eq!(scan.bottom, Some((0, Merge(Plus))));
    }
}
