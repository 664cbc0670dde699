//! Vertex classes, ordering conditions and certificate search.
//!
//! Fix a labeling `1..n` of the Y clique and a linear order of the X clique.
//! Each X vertex is classified by its cross neighbourhood:
//!
//! * Type A `[x, y]`: neighbours form the interval `x..=y`, all arcs leave the
//!   vertex.
//! * Type B `[x, y]`: same interval shape, all arcs enter the vertex.
//! * Type C `[x, y]`: neighbours are `1..=x` (arcs in) and `y..=n` (arcs out).
//! * Empty: no cross neighbour.
//!
//! An [`OrderingCertificate`] records the labeling, the X order and the class
//! of every X vertex; [`check_conditions`] decides whether the certificate
//! satisfies the six ordering conditions and [`find_ordering`] searches for one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{decompose, row_shape, BipartiteMatrix, CoBipartite, RowShape};
use crate::orient::{Orientation, SearchLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    TypeA { x: usize, y: usize },
    TypeB { x: usize, y: usize },
    TypeC { x: usize, y: usize },
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    A,
    C,
    B,
    Empty,
}

impl VertexClass {
    pub fn kind(self) -> ClassKind {
        match self {
            VertexClass::TypeA { .. } => ClassKind::A,
            VertexClass::TypeB { .. } => ClassKind::B,
            VertexClass::TypeC { .. } => ClassKind::C,
            VertexClass::Empty => ClassKind::Empty,
        }
    }

    pub fn bounds(self) -> Option<(usize, usize)> {
        match self {
            VertexClass::TypeA { x, y }
            | VertexClass::TypeB { x, y }
            | VertexClass::TypeC { x, y } => Some((x, y)),
            VertexClass::Empty => None,
        }
    }

    fn well_formed(self, n: usize) -> bool {
        match self {
            VertexClass::TypeA { x, y } | VertexClass::TypeB { x, y } => 1 <= x && x <= y && y <= n,
            VertexClass::TypeC { x, y } => 1 <= x && x < y && y <= n,
            VertexClass::Empty => true,
        }
    }

    /// Neighbourhood as a 0/1 vector over labels `1..=n`.
    pub fn expand(self, n: usize) -> Vec<bool> {
        (1..=n)
            .map(|j| match self {
                VertexClass::TypeA { x, y } | VertexClass::TypeB { x, y } => x <= j && j <= y,
                VertexClass::TypeC { x, y } => j <= x || j >= y,
                VertexClass::Empty => false,
            })
            .collect()
    }

    pub fn letter(self) -> &'static str {
        match self {
            VertexClass::TypeA { .. } => "A",
            VertexClass::TypeB { .. } => "B",
            VertexClass::TypeC { .. } => "C",
            VertexClass::Empty => "empty",
        }
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexClass::TypeA { x, y } => write!(f, "A[{x},{y}]"),
            VertexClass::TypeB { x, y } => write!(f, "B[{x},{y}]"),
            VertexClass::TypeC { x, y } => write!(f, "C[1,{x}]u[{y},n]"),
            VertexClass::Empty => f.write_str("empty"),
        }
    }
}

/// Y labeling, X order and per-vertex classes.
///
/// `y_labeling[i]` is the Y vertex carrying label `i + 1`; `classes[i]` is the
/// class of `x_order[i]`. Serialises as
/// `{y_labeling, x_order, classes: [{vertex, class, x, y}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CertificateJson", try_from = "CertificateJson")]
pub struct OrderingCertificate {
    pub y_labeling: Vec<usize>,
    pub x_order: Vec<usize>,
    pub classes: Vec<VertexClass>,
}

impl OrderingCertificate {
    pub fn entries(&self) -> impl Iterator<Item = (usize, VertexClass)> + '_ {
        self.x_order
            .iter()
            .copied()
            .zip(self.classes.iter().copied())
    }

    pub fn has_type_b(&self) -> bool {
        self.classes.iter().any(|c| c.kind() == ClassKind::B)
    }

    /// The orientation the certificate describes: X transitively along
    /// `x_order`, Y along the labeling, cross edges by class.
    pub fn orientation(&self, cb: &CoBipartite) -> Orientation {
        let mut arcs = Vec::new();
        for (i, &u) in self.x_order.iter().enumerate() {
            for &v in &self.x_order[i + 1..] {
                arcs.push((u, v));
            }
        }
        for (i, &u) in self.y_labeling.iter().enumerate() {
            for &v in &self.y_labeling[i + 1..] {
                arcs.push((u, v));
            }
        }
        for (v, class) in self.entries() {
            for (idx, &w) in self.y_labeling.iter().enumerate() {
                let label = idx + 1;
                if !cb.graph().adjacent(v, w) {
                    continue;
                }
                let outgoing = match class {
                    VertexClass::TypeA { .. } => true,
                    VertexClass::TypeB { .. } => false,
                    VertexClass::TypeC { x, .. } => label > x,
                    VertexClass::Empty => continue,
                };
                arcs.push(if outgoing { (v, w) } else { (w, v) });
            }
        }
        Orientation::from_arcs(cb.graph().clone(), &arcs)
            .expect("certificate orientation covers every edge once")
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    vertex: usize,
    class: String,
    x: Option<usize>,
    y: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    y_labeling: Vec<usize>,
    x_order: Vec<usize>,
    classes: Vec<ClassJson>,
}

impl From<OrderingCertificate> for CertificateJson {
    fn from(c: OrderingCertificate) -> Self {
        let classes = c
            .entries()
            .map(|(vertex, class)| {
                let b = class.bounds();
                ClassJson {
                    vertex,
                    class: class.letter().to_string(),
                    x: b.map(|b| b.0),
                    y: b.map(|b| b.1),
                }
            })
            .collect();
        CertificateJson {
            y_labeling: c.y_labeling,
            x_order: c.x_order,
            classes,
        }
    }
}

impl TryFrom<CertificateJson> for OrderingCertificate {
    type Error = String;

    fn try_from(j: CertificateJson) -> std::result::Result<Self, String> {
        if j.classes.len() != j.x_order.len() {
            return Err("classes and x_order differ in length".into());
        }
        let mut classes = Vec::with_capacity(j.classes.len());
        for (c, &v) in j.classes.iter().zip(&j.x_order) {
            if c.vertex != v {
                return Err(format!(
                    "class entry for {} listed where x_order has {v}",
                    c.vertex
                ));
            }
            let need = |o: Option<usize>| o.ok_or_else(|| format!("vertex {v}: missing bound"));
            classes.push(match c.class.as_str() {
                "A" => VertexClass::TypeA {
                    x: need(c.x)?,
                    y: need(c.y)?,
                },
                "B" => VertexClass::TypeB {
                    x: need(c.x)?,
                    y: need(c.y)?,
                },
                "C" => VertexClass::TypeC {
                    x: need(c.x)?,
                    y: need(c.y)?,
                },
                "empty" => VertexClass::Empty,
                other => return Err(format!("vertex {v}: unknown class {other:?}")),
            });
        }
        Ok(OrderingCertificate {
            y_labeling: j.y_labeling,
            x_order: j.x_order,
            classes,
        })
    }
}

/// A failed ordering condition with the vertices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionViolation {
    pub condition: u8,
    pub vertices: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "condition {} on vertices {:?}: {}",
            self.condition, self.vertices, self.detail
        )
    }
}

fn violation(condition: u8, vertices: Vec<usize>, detail: String) -> Option<ConditionViolation> {
    Some(ConditionViolation {
        condition,
        vertices,
        detail,
    })
}

// Labels of each X vertex's neighbourhood under the certificate's labeling,
// checked against the declared classes.
fn check_consistency(cert: &OrderingCertificate, m: &BipartiteMatrix) -> Result<()> {
    let n = m.n();
    if cert.x_order.len() != cert.classes.len() {
        return Err(Error::ClassMismatch(
            "x_order and classes differ in length".into(),
        ));
    }
    let mut xs = cert.x_order.clone();
    let mut rows = m.row_vertices().to_vec();
    xs.sort_unstable();
    rows.sort_unstable();
    if xs != rows {
        return Err(Error::ClassMismatch(
            "x_order is not a permutation of X".into(),
        ));
    }
    let mut ys = cert.y_labeling.clone();
    let mut cols = m.col_vertices().to_vec();
    ys.sort_unstable();
    cols.sort_unstable();
    if ys != cols {
        return Err(Error::ClassMismatch(
            "y_labeling is not a permutation of Y".into(),
        ));
    }
    let col_idx: Vec<usize> = cert
        .y_labeling
        .iter()
        .map(|&v| m.col_of(v).expect("checked permutation"))
        .collect();
    for (v, class) in cert.entries() {
        if !class.well_formed(n) {
            return Err(Error::ClassMismatch(format!(
                "vertex {v}: malformed class {class}"
            )));
        }
        let r = m.row_of(v).expect("checked permutation");
        let row: Vec<bool> = col_idx.iter().map(|&c| m.get(r, c)).collect();
        if row != class.expand(n) {
            return Err(Error::ClassMismatch(format!(
                "vertex {v}: class {class} does not match its neighbourhood"
            )));
        }
    }
    Ok(())
}

/// First violated ordering condition, scanning conditions 1 to 6 in turn and
/// vertex pairs in certificate order. `Ok(None)` means the certificate is valid.
///
/// 1. Classes appear in blocks `A < C < B` (empty vertices excepted).
/// 2. Type C pairs are monotone: `x_i <= x_j`, `y_i <= y_j`.
/// 3. Same for pairs of Type A and pairs of Type B.
/// 4. Type A (resp. B) against Type C: `x_a <= y_c` and `x_c <= y_a`.
/// 5. Type A against Type B: `x_b <= x_a` and `y_b <= y_a`.
/// 6. Every empty vertex sits after the last Type A and before every Type C,
///    and the last Type A has `y < y_c` for every Type C. Under
///    [`ConditionSet::Strengthened`], when empty vertices exist, also
///    `x_c' < y_c` for every pair of Type C vertices: otherwise an empty vertex
///    `v` with `v -> c'` closes the shortcut `v -> c -> z -> c'` through a
///    label `z` in both ranges.
pub fn check_conditions(
    cert: &OrderingCertificate,
    m: &BipartiteMatrix,
) -> Result<Option<ConditionViolation>> {
    check_conditions_with(cert, m, ConditionSet::Strengthened)
}

/// Which version of condition 6 to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionSet {
    /// Condition 6 without the pairwise Type C bound.
    Literal,
    /// Condition 6 with the pairwise Type C bound; used by every search.
    #[default]
    Strengthened,
}

pub fn check_conditions_with(
    cert: &OrderingCertificate,
    m: &BipartiteMatrix,
    set: ConditionSet,
) -> Result<Option<ConditionViolation>> {
    check_consistency(cert, m)?;
    Ok(first_violation(cert, set))
}

fn rank(k: ClassKind) -> u8 {
    match k {
        ClassKind::A => 0,
        ClassKind::C => 1,
        ClassKind::B => 2,
        ClassKind::Empty => u8::MAX,
    }
}

fn first_violation(cert: &OrderingCertificate, set: ConditionSet) -> Option<ConditionViolation> {
    let e: Vec<(usize, VertexClass)> = cert.entries().collect();
    let of = |k: ClassKind| -> Vec<(usize, usize, usize)> {
        e.iter()
            .filter(|(_, c)| c.kind() == k)
            .map(|&(v, c)| {
                let (x, y) = c.bounds().unwrap();
                (v, x, y)
            })
            .collect()
    };
    let (a, b, c) = (of(ClassKind::A), of(ClassKind::B), of(ClassKind::C));

    // 1
    let typed: Vec<&(usize, VertexClass)> = e
        .iter()
        .filter(|(_, c)| c.kind() != ClassKind::Empty)
        .collect();
    for w in typed.windows(2) {
        let (u, cu) = *w[0];
        let (v, cv) = *w[1];
        if rank(cu.kind()) > rank(cv.kind()) {
            return violation(
                1,
                vec![u, v],
                format!("type {} before type {}", cu.letter(), cv.letter()),
            );
        }
    }

    // 2, 3
    let monotone = |cond: u8, group: &[(usize, usize, usize)], name: &str| {
        for (i, &(u, xu, yu)) in group.iter().enumerate() {
            for &(v, xv, yv) in &group[i + 1..] {
                if xu > xv || yu > yv {
                    return violation(
                        cond,
                        vec![u, v],
                        format!("{name} {u} before {v} needs x {xu} <= {xv} and y {yu} <= {yv}"),
                    );
                }
            }
        }
        None
    };
    if let Some(v) = monotone(2, &c, "type C") {
        return Some(v);
    }
    if let Some(v) = monotone(3, &a, "type A") {
        return Some(v);
    }
    if let Some(v) = monotone(3, &b, "type B") {
        return Some(v);
    }

    // 4
    for &(u, xu, yu) in a.iter().chain(b.iter()) {
        for &(v, xv, yv) in &c {
            if xu > yv || xv > yu {
                return violation(
                    4,
                    vec![u, v],
                    format!("needs x_{u} = {xu} <= y_{v} = {yv} and x_{v} = {xv} <= y_{u} = {yu}"),
                );
            }
        }
    }

    // 5
    for &(u, xu, yu) in &a {
        for &(v, xv, yv) in &b {
            if xv > xu || yv > yu {
                return violation(
                    5,
                    vec![u, v],
                    format!("needs x_{v} = {xv} <= x_{u} = {xu} and y_{v} = {yv} <= y_{u} = {yu}"),
                );
            }
        }
    }

    // 6
    let pos = |v: usize| cert.x_order.iter().position(|&w| w == v).unwrap();
    let empties: Vec<usize> = e
        .iter()
        .filter(|(_, c)| c.kind() == ClassKind::Empty)
        .map(|&(v, _)| v)
        .collect();
    if !empties.is_empty() {
        let last_a = a.last().copied();
        for &v in &empties {
            if let Some((la, _, _)) = last_a {
                if pos(v) < pos(la) {
                    return violation(6, vec![la, v], format!("empty {v} before last type A {la}"));
                }
            }
            for &(cv, _, _) in &c {
                if pos(cv) < pos(v) {
                    return violation(6, vec![v, cv], format!("empty {v} after type C {cv}"));
                }
            }
        }
        if let Some((la, _, ya)) = last_a {
            for &(cv, _, yc) in &c {
                if ya >= yc {
                    return violation(
                        6,
                        vec![la, cv],
                        format!("needs y_{la} = {ya} < y_{cv} = {yc}"),
                    );
                }
            }
        }
        let pairs = if set == ConditionSet::Strengthened {
            &c[..]
        } else {
            &[][..]
        };
        for &(cu, _, yu) in pairs {
            for &(cv, xv, _) in pairs {
                if cu != cv && xv >= yu {
                    return violation(
                        6,
                        vec![cu, cv],
                        format!("with empty vertices needs x_{cv} = {xv} < y_{cu} = {yu}"),
                    );
                }
            }
        }
    }
    None
}

/// Turns every Type B vertex into Type A and moves it to the front of the
/// order, keeping the relative order of the moved vertices.
pub fn normalize_b_to_a(
    cert: &OrderingCertificate,
    m: &BipartiteMatrix,
) -> Result<OrderingCertificate> {
    if let Some(v) = check_conditions(cert, m)? {
        return Err(Error::InvalidCertificate(v));
    }
    if !cert.has_type_b() {
        return Ok(cert.clone());
    }
    let (moved, rest): (Vec<_>, Vec<_>) =
        cert.entries().partition(|(_, c)| c.kind() == ClassKind::B);
    let entries: Vec<(usize, VertexClass)> = moved
        .into_iter()
        .map(|(v, c)| {
            let (x, y) = c.bounds().unwrap();
            (v, VertexClass::TypeA { x, y })
        })
        .chain(rest)
        .collect();
    let out = OrderingCertificate {
        y_labeling: cert.y_labeling.clone(),
        x_order: entries.iter().map(|&(v, _)| v).collect(),
        classes: entries.iter().map(|&(_, c)| c).collect(),
    };
    if let Some(v) = first_violation(&out, ConditionSet::Strengthened) {
        return Err(Error::InvalidCertificate(v));
    }
    Ok(out)
}

/// Classes read off an orientation of a co-bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationClasses {
    /// Y vertices in orientation order (label `i + 1` for index `i`).
    pub y_order: Vec<usize>,
    /// X vertices in orientation order.
    pub x_order: Vec<usize>,
    /// Class of each X vertex relative to `y_order`, aligned with `x_order`.
    pub x_classes: Vec<VertexClass>,
    /// Class of each Y vertex relative to `x_order`, aligned with `y_order`.
    pub y_classes: Vec<VertexClass>,
}

impl OrientationClasses {
    pub fn certificate(&self) -> OrderingCertificate {
        OrderingCertificate {
            y_labeling: self.y_order.clone(),
            x_order: self.x_order.clone(),
            classes: self.x_classes.clone(),
        }
    }
}

// Linear order of a transitively oriented clique, sources first.
fn clique_order(o: &Orientation, side: &[usize]) -> Result<Vec<usize>> {
    let mut keyed: Vec<(usize, usize)> = side
        .iter()
        .map(|&v| (side.iter().filter(|&&w| o.has_arc(w, v)).count(), v))
        .collect();
    keyed.sort_unstable();
    let order: Vec<usize> = keyed.iter().map(|&(_, v)| v).collect();
    for (i, &u) in order.iter().enumerate() {
        if keyed[i].0 != i || order[i + 1..].iter().any(|&v| !o.has_arc(u, v)) {
            return Err(Error::CliqueNotTransitive);
        }
    }
    Ok(order)
}

fn classify_vertex(o: &Orientation, v: usize, other: &[usize]) -> Option<VertexClass> {
    let n = other.len();
    let outs: Vec<usize> = (1..=n).filter(|&l| o.has_arc(v, other[l - 1])).collect();
    let ins: Vec<usize> = (1..=n).filter(|&l| o.has_arc(other[l - 1], v)).collect();
    let contiguous = |ls: &[usize]| ls.windows(2).all(|w| w[1] == w[0] + 1);
    match (ins.is_empty(), outs.is_empty()) {
        (true, true) => Some(VertexClass::Empty),
        (true, false) if contiguous(&outs) => Some(VertexClass::TypeA {
            x: outs[0],
            y: *outs.last().unwrap(),
        }),
        (false, true) if contiguous(&ins) => Some(VertexClass::TypeB {
            x: ins[0],
            y: *ins.last().unwrap(),
        }),
        (false, false)
            if ins[0] == 1
                && contiguous(&ins)
                && *outs.last().unwrap() == n
                && contiguous(&outs)
                && *ins.last().unwrap() < outs[0] =>
        {
            Some(VertexClass::TypeC {
                x: *ins.last().unwrap(),
                y: outs[0],
            })
        }
        _ => None,
    }
}

/// Classifies every vertex of both cliques under an orientation whose cliques
/// are transitively oriented. `Ok(None)` when some vertex fits no class.
pub fn classify_from_orientation(
    cb: &CoBipartite,
    o: &Orientation,
) -> Result<Option<OrientationClasses>> {
    if o.base() != cb.graph() {
        return Err(Error::InvalidOrientation(
            "orientation of a different graph".into(),
        ));
    }
    let x_order = clique_order(o, cb.x())?;
    let y_order = clique_order(o, cb.y())?;
    let x_classes: Option<Vec<_>> = x_order
        .iter()
        .map(|&v| classify_vertex(o, v, &y_order))
        .collect();
    let y_classes: Option<Vec<_>> = y_order
        .iter()
        .map(|&v| classify_vertex(o, v, &x_order))
        .collect();
    Ok(x_classes
        .zip(y_classes)
        .map(|(x_classes, y_classes)| OrientationClasses {
            y_order,
            x_order,
            x_classes,
            y_classes,
        }))
}

fn class_options(shape: RowShape, n: usize) -> Vec<VertexClass> {
    match shape {
        RowShape::Empty => vec![VertexClass::Empty],
        RowShape::Interval { x, y } => vec![VertexClass::TypeA { x, y }],
        RowShape::CoInterval { x, y } => vec![VertexClass::TypeC { x, y }],
        RowShape::Full => std::iter::once(VertexClass::TypeA { x: 1, y: n })
            .chain((1..n).map(|s| VertexClass::TypeC { x: s, y: s + 1 }))
            .collect(),
        RowShape::Irregular => Vec::new(),
    }
}

// Blocks A, empty, C, B; each block sorted by (x, y) and then vertex id.
fn sort_key(v: usize, c: VertexClass) -> (u8, usize, usize, usize) {
    let block = match c.kind() {
        ClassKind::A => 0,
        ClassKind::Empty => 1,
        ClassKind::C => 2,
        ClassKind::B => 3,
    };
    let (x, y) = c.bounds().unwrap_or((0, 0));
    (block, x, y, v)
}

fn ordered_certificate(
    y_labeling: Vec<usize>,
    entries: &[(usize, VertexClass)],
) -> OrderingCertificate {
    let mut e = entries.to_vec();
    e.sort_by_key(|&(v, c)| sort_key(v, c));
    OrderingCertificate {
        y_labeling,
        x_order: e.iter().map(|&(v, _)| v).collect(),
        classes: e.iter().map(|&(_, c)| c).collect(),
    }
}

// Tries every class assignment of one labeling, in odometer order.
fn certificate_for_labeling(
    rows: &[(usize, Vec<bool>)],
    labeling: &[usize],
    set: ConditionSet,
) -> Option<OrderingCertificate> {
    let n = labeling.len();
    let options: Vec<(usize, Vec<VertexClass>)> = rows
        .iter()
        .map(|(v, row)| (*v, class_options(row_shape(row), n)))
        .collect();
    if options.iter().any(|(_, o)| o.is_empty()) {
        return None;
    }
    let mut idx = vec![0usize; options.len()];
    loop {
        let entries: Vec<(usize, VertexClass)> = options
            .iter()
            .zip(&idx)
            .map(|((v, o), &i)| (*v, o[i]))
            .collect();
        let cert = ordered_certificate(labeling.to_vec(), &entries);
        if first_violation(&cert, set).is_none() {
            return Some(cert);
        }
        // advance the odometer, last row fastest
        let mut k = options.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].1.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

struct LabelingSearch<'a> {
    m: &'a BipartiteMatrix,
    set: ConditionSet,
    used: Vec<bool>,
    labeling: Vec<usize>,
    // per row: (last bit, number of 0/1 changes so far)
    state: Vec<(bool, u8)>,
}

impl LabelingSearch<'_> {
    fn run(&mut self) -> Option<OrderingCertificate> {
        let n = self.m.n();
        if self.labeling.len() == n {
            let rows: Vec<(usize, Vec<bool>)> = (0..self.m.m())
                .map(|r| {
                    let row = self.labeling.iter().map(|&c| self.m.get(r, c)).collect();
                    (self.m.row_vertices()[r], row)
                })
                .collect();
            let cols: Vec<usize> = self
                .labeling
                .iter()
                .map(|&c| self.m.col_vertices()[c])
                .collect();
            return certificate_for_labeling(&rows, &cols, self.set);
        }
        for c in 0..n {
            if self.used[c] {
                continue;
            }
            let saved = self.state.clone();
            let first = self.labeling.is_empty();
            let mut ok = true;
            for r in 0..self.m.m() {
                let b = self.m.get(r, c);
                let (last, changes) = self.state[r];
                let changes = if !first && b != last {
                    changes + 1
                } else {
                    changes
                };
                // more than two changes can be neither an interval nor a co-interval
                if changes > 2 {
                    ok = false;
                    break;
                }
                self.state[r] = (b, changes);
            }
            if ok {
                self.used[c] = true;
                self.labeling.push(c);
                if let Some(cert) = self.run() {
                    return Some(cert);
                }
                self.labeling.pop();
                self.used[c] = false;
            }
            self.state = saved;
        }
        None
    }
}

/// Searches labelings of Y (lexicographically, by column order of `cb.y()`)
/// and class assignments for a certificate passing [`check_conditions`].
///
/// Rows that are intervals become Type A, co-intervals Type C, full rows try
/// Type A and every Type C split; Type B is never produced. Once classes are
/// fixed, sorting each block by `(x, y)` is the only candidate order, so the
/// search is exact for the given partition.
pub fn find_ordering(
    cb: &CoBipartite,
    limits: &SearchLimits,
) -> Result<Option<OrderingCertificate>> {
    find_ordering_with(cb, limits, ConditionSet::Strengthened)
}

pub fn find_ordering_with(
    cb: &CoBipartite,
    limits: &SearchLimits,
    set: ConditionSet,
) -> Result<Option<OrderingCertificate>> {
    let n = cb.y().len();
    if n > limits.max_labeling_side {
        return Err(Error::CapExceeded {
            what: "labeled side",
            value: n,
            cap: limits.max_labeling_side,
        });
    }
    let m = cb.matrix();
    let mut s = LabelingSearch {
        m: &m,
        set,
        used: vec![false; n],
        labeling: Vec::with_capacity(n),
        state: vec![(false, 0); m.m()],
    };
    Ok(s.run())
}

/// Result of recognition over all clique partitions.
#[derive(Debug, Clone)]
pub struct Recognition {
    pub partition: CoBipartite,
    pub partition_index: usize,
    pub certificate: OrderingCertificate,
}

/// Tries [`find_ordering`] on every clique partition from [`decompose`]; the
/// first success wins. Errors if the graph is not co-bipartite.
pub fn recognize(
    g: &crate::graph::SimpleGraph,
    limits: &SearchLimits,
) -> Result<Option<Recognition>> {
    recognize_with(g, limits, ConditionSet::Strengthened)
}

pub fn recognize_with(
    g: &crate::graph::SimpleGraph,
    limits: &SearchLimits,
    set: ConditionSet,
) -> Result<Option<Recognition>> {
    let parts = decompose(g);
    if parts.is_empty() {
        return Err(Error::NotCoBipartite);
    }
    for (i, cb) in parts.into_iter().enumerate() {
        if let Some(cert) = find_ordering_with(&cb, limits, set)? {
            return Ok(Some(Recognition {
                partition: cb,
                partition_index: i,
                certificate: cert,
            }));
        }
    }
    Ok(None)
}
