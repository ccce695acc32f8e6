//! Reduction of webs to non-elliptic normal form and the linear algebra of
//! formal web sums.
//!
//! Three local relations drive everything: a circle is `[3]`, a bigon is
//! `[2]` times a single edge, and a square is the sum of its two
//! parallel-strand resolutions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{qint_poly, LaurentPoly, RingScalar};
use crate::web::{CanonicalKey, Face, Generator, SignSeq, WebDiagram};

/// One basis web with its Laurent coefficient.
#[derive(Clone, Debug)]
pub struct ReducedTerm {
    pub key: CanonicalKey,
    pub web: Arc<WebDiagram>,
    pub coeff: LaurentPoly,
}

type Reduced = Arc<Vec<ReducedTerm>>;

static REDUCE_CACHE: LazyLock<RwLock<HashMap<CanonicalKey, Reduced>>> = LazyLock::new(Default::default);

/// Number of loop-free diagrams whose reduction is memoised.
pub fn cache_len() -> usize {
    REDUCE_CACHE.read().unwrap().len()
}

pub fn clear_cache() {
    REDUCE_CACHE.write().unwrap().clear();
}

/// A bigon or square face that can be rewritten.
enum Rewrite {
    Bigon([u32; 2]),
    Square([u32; 4]),
}

fn distinct_vertices(d: &WebDiagram, hs: &[u32]) -> bool {
    let vs: Vec<u32> = hs.iter().map(|&h| d.vertex_of(h)).collect();
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| vs[i] != vs[j]))
}

fn rewrite_of(d: &WebDiagram, f: &Face) -> Option<Rewrite> {
    if f.touches_boundary || !distinct_vertices(d, &f.halfedges) {
        return None;
    }
    match f.halfedges.len() {
        2 => Some(Rewrite::Bigon([f.halfedges[0], f.halfedges[1]])),
        4 => Some(Rewrite::Square([f.halfedges[0], f.halfedges[1], f.halfedges[2], f.halfedges[3]])),
        _ => None,
    }
}

fn all_rewrites(d: &WebDiagram) -> Vec<Rewrite> {
    d.faces().iter().filter_map(|f| rewrite_of(d, f)).collect()
}

/// Bigons before squares; ties broken by the smallest half-edge id.
fn choose_rewrite(d: &WebDiagram) -> Option<Rewrite> {
    let mut best: Option<(usize, u32, Rewrite)> = None;
    for r in all_rewrites(d) {
        let (rank, id) = match &r {
            Rewrite::Bigon(h) => (0, *h.iter().min().unwrap()),
            Rewrite::Square(h) => (1, *h.iter().min().unwrap()),
        };
        if best.as_ref().is_none_or(|b| (rank, id) < (b.0, b.1)) {
            best = Some((rank, id, r));
        }
    }
    best.map(|b| b.2)
}

/// The half-edge at the vertex of `h` that is neither `a` nor `b`.
fn third(d: &WebDiagram, v: u32, a: u32, b: u32) -> u32 {
    *d.rotation(v).iter().find(|&&x| x != a && x != b).unwrap()
}

/// Applies a rewrite, returning the resulting diagrams with their factors.
fn apply(d: &WebDiagram, r: &Rewrite) -> Vec<(WebDiagram, LaurentPoly)> {
    let mut removed = vec![false; d.num_vertices()];
    match *r {
        Rewrite::Bigon([h1, h2]) => {
            let u = d.vertex_of(h1);
            let w = d.vertex_of(h2);
            let lu = third(d, u, h1, d.twin(h2));
            let lw = third(d, w, h2, d.twin(h1));
            removed[u as usize] = true;
            removed[w as usize] = true;
            vec![(d.splice(&removed, &[(lu, lw)]), qint_poly(2))]
        }
        Rewrite::Square(h) => {
            let mut legs = [0u32; 4];
            for i in 0..4 {
                let v = d.vertex_of(h[i]);
                legs[i] = third(d, v, h[i], d.twin(h[(i + 3) % 4]));
                removed[v as usize] = true;
            }
            let a = d.splice(&removed, &[(legs[0], legs[1]), (legs[2], legs[3])]);
            let b = d.splice(&removed, &[(legs[1], legs[2]), (legs[3], legs[0])]);
            vec![(a, LaurentPoly::one()), (b, LaurentPoly::one())]
        }
    }
}

/// The termination measure: trivalent vertices, then edges plus circles.
pub fn termination_metric(d: &WebDiagram) -> (usize, usize) {
    (d.num_trivalent(), d.num_edges() + d.loops() as usize)
}

fn scale_terms(terms: &[ReducedTerm], c: &LaurentPoly) -> Vec<ReducedTerm> {
    terms.iter().map(|t| ReducedTerm { key: t.key.clone(), web: t.web.clone(), coeff: &t.coeff * c }).collect()
}

/// Reduces a diagram to a combination of basis webs with Laurent coefficients.
pub fn reduce_web(d: &WebDiagram) -> Reduced {
    let loops = d.loops();
    let base = if loops == 0 { d.clone() } else { d.without_loops() };
    let (key, canon) = base.canonicalize();
    let inner = reduce_canonical(key, canon);
    if loops == 0 {
        inner
    } else {
        Arc::new(scale_terms(&inner, &qint_poly(3).pow(loops)))
    }
}

fn reduce_canonical(key: CanonicalKey, canon: WebDiagram) -> Reduced {
    if let Some(r) = REDUCE_CACHE.read().unwrap().get(&key) {
        return r.clone();
    }
    let result = match choose_rewrite(&canon) {
        None => {
            debug_assert!(canon.is_basis_web() || canon.num_vertices() == 0);
            Arc::new(vec![ReducedTerm { key: key.clone(), web: Arc::new(canon), coeff: LaurentPoly::one() }])
        }
        Some(r) => {
            let mut acc: BTreeMap<CanonicalKey, (Arc<WebDiagram>, LaurentPoly)> = BTreeMap::new();
            for (child, factor) in apply(&canon, &r) {
                for t in reduce_web(&child).iter() {
                    let c = &t.coeff * &factor;
                    match acc.get_mut(&t.key) {
                        Some(e) => e.1 = &e.1 + &c,
                        None => {
                            acc.insert(t.key.clone(), (t.web.clone(), c));
                        }
                    }
                }
            }
            Arc::new(
                acc.into_iter()
                    .filter(|(_, (_, c))| !c.is_zero())
                    .map(|(key, (web, coeff))| ReducedTerm { key, web, coeff })
                    .collect(),
            )
        }
    };
    REDUCE_CACHE.write().unwrap().insert(key, result.clone());
    result
}

/// Reduction in a random face order without memoisation. Fails if the
/// termination metric does not strictly decrease at some rewrite.
pub fn reduce_random_order<R: Rng>(d: &WebDiagram, rng: &mut R) -> Result<BTreeMap<CanonicalKey, LaurentPoly>> {
    let mut out = BTreeMap::new();
    reduce_random_into(d, LaurentPoly::one(), rng, &mut out)?;
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

fn check_decrease(child: &WebDiagram, parent: &WebDiagram) -> Result<()> {
    let (a, b) = (termination_metric(child), termination_metric(parent));
    if a < b {
        Ok(())
    } else {
        Err(Error::Domain(format!("termination metric went from {b:?} to {a:?}")))
    }
}

fn reduce_random_into<R: Rng>(
    d: &WebDiagram,
    coeff: LaurentPoly,
    rng: &mut R,
    out: &mut BTreeMap<CanonicalKey, LaurentPoly>,
) -> Result<()> {
    if d.loops() > 0 {
        let next = d.without_loops();
        check_decrease(&next, d)?;
        let c = &coeff * &qint_poly(3).pow(d.loops());
        return reduce_random_into(&next, c, rng, out);
    }
    let rewrites = all_rewrites(d);
    if rewrites.is_empty() {
        let key = d.canonical_key();
        let e = out.entry(key).or_insert_with(LaurentPoly::zero);
        *e = &*e + &coeff;
        return Ok(());
    }
    let r = &rewrites[rng.gen_range(0..rewrites.len())];
    for (child, factor) in apply(d, r) {
        check_decrease(&child, d)?;
        reduce_random_into(&child, &coeff * &factor, rng, out)?;
    }
    Ok(())
}

/// The deterministic normal form as a key-to-coefficient map.
pub fn normal_form(d: &WebDiagram) -> BTreeMap<CanonicalKey, LaurentPoly> {
    reduce_web(d).iter().map(|t| (t.key.clone(), t.coeff.clone())).collect()
}

/// A random diagram built from `layers` generator layers on a boundary word
/// of at most `max_width` strands.
pub fn random_diagram<R: Rng>(rng: &mut R, layers: usize, max_width: usize) -> WebDiagram {
    use crate::web::Sign;
    let sign = |rng: &mut R| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
    let width = rng.gen_range(0..=max_width.min(3));
    let mut word: Vec<Sign> = (0..width).map(|_| sign(rng)).collect();
    let mut d = WebDiagram::identity(&SignSeq(word.clone()));
    for _ in 0..layers {
        let mut moves: Vec<(usize, Generator)> = Vec::new();
        for p in 0..word.len() {
            let s = word[p];
            if word.len() < max_width {
                moves.push((p, Generator::Fork(s)));
            }
            if p + 1 < word.len() {
                if word[p + 1] == s {
                    moves.push((p, Generator::Merge(s)));
                } else {
                    moves.push((p, Generator::Cap(s)));
                    moves.push((p, Generator::H(s)));
                }
            }
        }
        if word.len() + 2 <= max_width {
            for p in 0..=word.len() {
                moves.push((p, Generator::Cup(sign(rng))));
            }
        }
        if moves.is_empty() {
            break;
        }
        let (p, g) = moves[rng.gen_range(0..moves.len())];
        let n_in = g.domain().len();
        let left = SignSeq(word[..p].to_vec());
        let right = SignSeq(word[p + n_in..].to_vec());
        let layer = WebDiagram::identity(&left).glue_tensor(&g.diagram()).glue_tensor(&WebDiagram::identity(&right));
        d = d.glue_compose(&layer).expect("layer matches the current word");
        word = left.concat(&g.codomain()).concat(&right).0;
    }
    d
}

/// Reduces `diagrams` seeded random diagrams in `orders` random face orders
/// each and compares every result with the deterministic normal form.
pub fn verify_confluence(seed: u64, diagrams: usize, orders: usize) -> crate::report::Report {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    let mut report = crate::report::Report::new(format!("confluence seed={seed}"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..diagrams {
        let layers = rng.gen_range(6..=20);
        let d = random_diagram(&mut rng, layers, 6);
        let expected = normal_form(&d);
        let mut failure = None;
        for j in 0..orders {
            let mut order_rng = ChaCha8Rng::seed_from_u64(seed ^ ((i as u64) << 32 | j as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            match reduce_random_order(&d, &mut order_rng) {
                Ok(got) if got == expected => {}
                Ok(got) => {
                    failure = Some(format!("order {j}: {} terms, expected {}", got.len(), expected.len()));
                    break;
                }
                Err(e) => {
                    failure = Some(format!("order {j}: {e}"));
                    break;
                }
            }
        }
        let name = format!("diagram {i} ({} trivalent, {} terms)", d.num_trivalent(), expected.len());
        report.record(name, failure.is_none(), failure);
    }
    report
}

#[derive(Clone, Debug)]
struct Term {
    web: Arc<WebDiagram>,
    coeff: RingScalar,
}

/// A formal linear combination of basis webs with common boundary.
#[derive(Clone, Debug)]
pub struct Morphism {
    dom: SignSeq,
    cod: SignSeq,
    terms: BTreeMap<CanonicalKey, Term>,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom
            && self.cod == other.cod
            && self.terms.len() == other.terms.len()
            && self.terms.iter().zip(&other.terms).all(|((ka, a), (kb, b))| ka == kb && a.coeff == b.coeff)
    }
}

impl Eq for Morphism {}

/// Sums fractions that were collected per denominator.
fn sum_by_denominator(parts: HashMap<LaurentPoly, LaurentPoly>) -> RingScalar {
    let mut total = RingScalar::zero();
    for (den, num) in parts {
        if !num.is_zero() {
            total = total.add(&RingScalar::new(num, den).expect("nonzero denominator"));
        }
    }
    total
}

impl Morphism {
    pub fn zero(dom: SignSeq, cod: SignSeq) -> Self {
        Morphism { dom, cod, terms: BTreeMap::new() }
    }

    pub fn identity(eps: &SignSeq) -> Self {
        Self::from_basis_web(WebDiagram::identity(eps), RingScalar::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_basis_web(g.diagram(), RingScalar::one())
    }

    /// The empty diagram as an endomorphism of the empty word.
    pub fn empty_web() -> Self {
        Self::identity(&SignSeq::empty())
    }

    /// A scalar multiple of the empty diagram.
    pub fn scalar(s: RingScalar) -> Self {
        Self::from_basis_web(WebDiagram::empty(), s)
    }

    fn from_basis_web(w: WebDiagram, s: RingScalar) -> Self {
        let (key, canon) = w.canonicalize();
        let mut m = Self::zero(canon.domain_signs(), canon.codomain_signs());
        if !s.is_zero() {
            m.terms.insert(key, Term { web: Arc::new(canon), coeff: s });
        }
        m
    }

    /// Reduces `coeff * w` to basis-web form.
    pub fn reduce(w: &WebDiagram, coeff: RingScalar) -> Self {
        let mut m = Self::zero(w.domain_signs(), w.codomain_signs());
        if coeff.is_zero() {
            return m;
        }
        for t in reduce_web(w).iter() {
            let c = coeff.mul_poly(&t.coeff);
            if !c.is_zero() {
                m.terms.insert(t.key.clone(), Term { web: t.web.clone(), coeff: c });
            }
        }
        m
    }

    pub fn dom(&self) -> &SignSeq {
        &self.dom
    }

    pub fn cod(&self) -> &SignSeq {
        &self.cod
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical-key order.
    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalKey, &WebDiagram, &RingScalar)> + '_ {
        self.terms.iter().map(|(k, t)| (k, t.web.as_ref(), &t.coeff))
    }

    fn check_shape(&self, other: &Morphism) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::ShapeMismatch {
                left_dom: self.dom.clone(),
                left_cod: self.cod.clone(),
                right_dom: other.dom.clone(),
                right_cod: other.cod.clone(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Morphism) -> Result<Morphism> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (k, t) in &other.terms {
            match out.terms.get_mut(k) {
                Some(e) => {
                    e.coeff = e.coeff.add(&t.coeff);
                    if e.coeff.is_zero() {
                        out.terms.remove(k);
                    }
                }
                None => {
                    out.terms.insert(k.clone(), t.clone());
                }
            }
        }
        Ok(out)
    }

    /// Panics on shape mismatch; see [`Morphism::try_add`].
    pub fn add(&self, other: &Morphism) -> Morphism {
        self.try_add(other).expect("shape mismatch in add")
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Morphism {
        self.scale(&RingScalar::from(-1))
    }

    pub fn scale(&self, s: &RingScalar) -> Morphism {
        let mut out = Self::zero(self.dom.clone(), self.cod.clone());
        if s.is_zero() {
            return out;
        }
        for (k, t) in &self.terms {
            out.terms.insert(k.clone(), Term { web: t.web.clone(), coeff: t.coeff.mul(s) });
        }
        out
    }

    /// `self` followed by `other`: `other` is stacked on top.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        if self.cod != other.dom {
            let position = self.cod.signs().iter().zip(other.dom.signs()).position(|(a, b)| a != b).unwrap_or(self.cod.len().min(other.dom.len()));
            return Err(Error::BoundaryMismatch { position, expected: self.cod.clone(), found: other.dom.clone() });
        }
        let mut acc: BTreeMap<CanonicalKey, (Arc<WebDiagram>, HashMap<LaurentPoly, LaurentPoly>)> = BTreeMap::new();
        for a in self.terms.values() {
            for b in other.terms.values() {
                let glued = a.web.glue_compose(&b.web)?;
                let num = a.coeff.num() * b.coeff.num();
                let den = a.coeff.den() * b.coeff.den();
                for t in reduce_web(&glued).iter() {
                    let entry = acc.entry(t.key.clone()).or_insert_with(|| (t.web.clone(), HashMap::new()));
                    let slot = entry.1.entry(den.clone()).or_insert_with(LaurentPoly::zero);
                    *slot = &*slot + &(&num * &t.coeff);
                }
            }
        }
        let mut out = Self::zero(self.dom.clone(), other.cod.clone());
        for (k, (web, parts)) in acc {
            let c = sum_by_denominator(parts);
            if !c.is_zero() {
                out.terms.insert(k, Term { web, coeff: c });
            }
        }
        Ok(out)
    }

    /// Panicking form of [`Morphism::compose`].
    pub fn then(&self, other: &Morphism) -> Morphism {
        match self.compose(other) {
            Ok(m) => m,
            Err(e) => panic!("cannot compose {} -> {} with {} -> {}: {e}", self.dom, self.cod, other.dom, other.cod),
        }
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, other: &Morphism) -> Morphism {
        let mut out = Self::zero(self.dom.concat(&other.dom), self.cod.concat(&other.cod));
        for a in self.terms.values() {
            for b in other.terms.values() {
                let (k, w) = a.web.glue_tensor(&b.web).canonicalize();
                let c = a.coeff.mul(&b.coeff);
                out.terms.insert(k, Term { web: Arc::new(w), coeff: c });
            }
        }
        out
    }

    /// Reflection of every web together with the bar involution on coefficients.
    pub fn star(&self) -> Morphism {
        let mut out = Self::zero(self.cod.clone(), self.dom.clone());
        for t in self.terms.values() {
            let (k, w) = t.web.star().canonicalize();
            out.terms.insert(k, Term { web: Arc::new(w), coeff: t.coeff.star() });
        }
        out
    }

    /// Closes an endomorphism by arcs on the right and evaluates the result.
    pub fn closure_trace(&self) -> Result<RingScalar> {
        if self.dom != self.cod {
            return Err(Error::ShapeMismatch {
                left_dom: self.dom.clone(),
                left_cod: self.cod.clone(),
                right_dom: self.dom.clone(),
                right_cod: self.dom.clone(),
            });
        }
        let eps = &self.dom;
        let cups = Morphism::from_basis_web(WebDiagram::nested_cups(eps), RingScalar::one());
        let caps = cups.star();
        let middle = self.tensor(&Morphism::identity(&eps.dual()));
        let closed = cups.compose(&middle)?.compose(&caps)?;
        closed.coefficient_of(&WebDiagram::empty())
    }

    /// The coefficient of a basis web, zero when absent.
    pub fn coefficient_of(&self, w: &WebDiagram) -> Result<RingScalar> {
        let (d, c) = (w.domain_signs(), w.codomain_signs());
        if d != self.dom || c != self.cod {
            let position = 0;
            return Err(Error::BoundaryMismatch { position, expected: self.dom.concat(&self.cod), found: d.concat(&c) });
        }
        Ok(self.terms.get(&w.canonical_key()).map(|t| t.coeff.clone()).unwrap_or_default())
    }

    pub fn to_json_value(&self) -> Value {
        let terms: Vec<Value> = self.terms.values().map(|t| json!({"coeff": t.coeff.to_string(), "web": t.web.to_json_value()})).collect();
        json!({"dom": self.dom.to_string(), "cod": self.cod.to_string(), "terms": terms})
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Morphism> {
        let bad = |m: &str| Error::InvalidWeb(m.to_string());
        let dom: SignSeq = v["dom"].as_str().ok_or_else(|| bad("missing dom"))?.parse()?;
        let cod: SignSeq = v["cod"].as_str().ok_or_else(|| bad("missing cod"))?.parse()?;
        let mut out = Morphism::zero(dom, cod);
        for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
            let coeff: RingScalar = t["coeff"].as_str().ok_or_else(|| bad("missing coeff"))?.parse()?;
            let web = WebDiagram::from_json_value(&t["web"])?;
            out = out.try_add(&Morphism::reduce(&web, coeff))?;
        }
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Morphism> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidWeb(e.to_string()))?;
        Self::from_json_value(&v)
    }

    /// Largest number of vertices among the terms.
    pub fn max_web_size(&self) -> usize {
        self.terms.values().map(|t| t.web.num_vertices()).max().unwrap_or(0)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 : {} -> {}", self.dom, self.cod);
        }
        writeln!(f, "{} terms : {} -> {}", self.terms.len(), self.dom, self.cod)?;
        for t in self.terms.values() {
            writeln!(f, "  {} * web({} vertices)", t.coeff, t.web.num_vertices())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qint;
    use crate::web::Sign::*;
    use Generator::*;

    fn seq(s: &str) -> SignSeq {
        SignSeq::from(s)
    }

    fn gen(g: Generator) -> Morphism {
        Morphism::generator(g)
    }

    #[test]
    fn circle_is_three() {
        let circle = Cup(Plus).diagram().glue_compose(&Cap(Plus).diagram()).unwrap();
        let m = Morphism::reduce(&circle, RingScalar::one());
        assert_eq!(m, Morphism::scalar(qint(3)));
        assert_eq!(gen(Cup(Plus)).then(&gen(Cap(Plus))), Morphism::scalar(qint(3)));
    }

    #[test]
    fn bigon_is_two() {
        let m = gen(Fork(Minus)).then(&gen(Merge(Plus)));
        assert_eq!(m, Morphism::identity(&seq("-")).scale(&qint(2)));
        let m = gen(Fork(Plus)).then(&gen(Merge(Minus)));
        assert_eq!(m, Morphism::identity(&seq("+")).scale(&qint(2)));
    }

    #[test]
    fn square_resolves_into_two_terms() {
        let sq = gen(H(Plus)).then(&gen(H(Minus)));
        assert_eq!(sq.num_terms(), 2);
        let id = Morphism::identity(&seq("+-"));
        let db = gen(Cap(Plus)).then(&gen(Cup(Plus)));
        assert_eq!(sq, id.add(&db));
        assert_eq!(sq.coefficient_of(&WebDiagram::identity(&seq("+-"))).unwrap(), RingScalar::one());
    }

    #[test]
    fn square_on_other_orientation() {
        let sq = gen(H(Minus)).then(&gen(H(Plus)));
        let expected = Morphism::identity(&seq("-+")).add(&gen(Cap(Minus)).then(&gen(Cup(Minus))));
        assert_eq!(sq, expected);
    }

    #[test]
    fn theta_graph() {
        // Fork then merge closed by a cup and cap: [2][3].
        let theta = gen(Cup(Plus))
            .then(&gen(Fork(Plus)).tensor(&Morphism::identity(&seq("-"))))
            .then(&gen(Merge(Minus)).tensor(&Morphism::identity(&seq("-"))))
            .then(&gen(Cap(Plus)));
        assert_eq!(theta, Morphism::scalar(qint(2).mul(&qint(3))));
    }

    #[test]
    fn linearity() {
        let a = gen(H(Plus));
        assert!(a.add(&a.neg()).is_zero());
        let s = Morphism::scalar(qint(3));
        assert_eq!(Morphism::empty_web().scale(&qint(3)), s);
        assert!(a.try_add(&gen(H(Minus))).is_err());
    }

    #[test]
    fn identity_and_unit_laws() {
        let a = gen(H(Plus)).add(&gen(Cap(Plus)).then(&gen(Cup(Minus))).scale(&RingScalar::v_pow(2)));
        assert_eq!(Morphism::identity(&seq("+-")).then(&a), a);
        assert_eq!(a.tensor(&Morphism::empty_web()), a);
        assert!(gen(Cup(Plus)).compose(&gen(Cap(Minus))).is_err());
    }

    #[test]
    fn star_of_cup_is_cap() {
        assert_eq!(gen(Cup(Plus)).star(), gen(Cap(Plus)));
        let a = gen(H(Plus)).scale(&RingScalar::v_pow(3));
        assert_eq!(a.star().star(), a);
        assert_eq!(a.star(), gen(H(Minus)).scale(&RingScalar::v_pow(-3)));
    }

    #[test]
    fn closure_traces() {
        assert_eq!(Morphism::identity(&seq("+")).closure_trace().unwrap(), qint(3));
        assert_eq!(Morphism::identity(&seq("+-")).closure_trace().unwrap(), qint(3).mul(&qint(3)));
        assert_eq!(Morphism::empty_web().closure_trace().unwrap(), RingScalar::one());
    }

    #[test]
    fn json_round_trip() {
        let a = gen(H(Plus)).add(&gen(Cap(Plus)).then(&gen(Cup(Minus))).scale(&"(v^3 + 2)/(v^6 + 1)".parse().unwrap()));
        let text = a.to_json();
        let back = Morphism::from_json(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn random_order_agrees_on_square_chain() {
        use rand::SeedableRng;
        let w = gen(H(Plus)).tensor(&gen(H(Plus)));
        let mid = Morphism::identity(&seq("-")).tensor(&gen(H(Plus))).tensor(&Morphism::identity(&seq("+")));
        let d = w.then(&mid);
        for (_, web, _) in d.terms() {
            let up = web.glue_compose(&web.star()).unwrap();
            let det: BTreeMap<_, _> = reduce_web(&up).iter().map(|t| (t.key.clone(), t.coeff.clone())).collect();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            assert_eq!(reduce_random_order(&up, &mut rng).unwrap(), det);
        }
    }

    #[test]
    fn random_diagrams_are_valid_and_seeded() {
        use rand::SeedableRng;
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let d = random_diagram(&mut a, 10, 6);
            d.validate().unwrap();
            assert_eq!(d.canonical_key(), random_diagram(&mut b, 10, 6).canonical_key());
        }
    }

    #[test]
    fn confluence_on_a_few_diagrams() {
        let r = verify_confluence(11, 20, 3);
        assert!(r.passed(), "{r}");
    }
}
