use std::collections::HashMap;

use crate::error::DblCatError;

use super::category::{check_category, Cell};
use super::table::Table;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Square {
    pub name: String,
    pub top: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
}

impl Square {
    pub fn boundary(&self) -> [usize; 4] {
        [self.top, self.bottom, self.left, self.right]
    }
}

/// Double category data with names in place of indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDoubleCategory {
    pub objects: Vec<String>,
    /// `(name, source, target)`
    pub hmors: Vec<(String, String, String)>,
    pub vmors: Vec<(String, String, String)>,
    /// `(name, top, bottom, left, right)`
    pub squares: Vec<(String, String, String, String, String)>,
    /// `(first, second, composite)`
    pub hcomp: Vec<(String, String, String)>,
    pub vcomp: Vec<(String, String, String)>,
    /// `(left, right, composite)`
    pub sq_hcomp: Vec<(String, String, String)>,
    /// `(top, bottom, composite)`
    pub sq_vcomp: Vec<(String, String, String)>,
    pub idh: Vec<(String, String)>,
    pub idv: Vec<(String, String)>,
    /// `(vertical morphism u, id_u)`
    pub idsq_h: Vec<(String, String)>,
    /// `(horizontal morphism f, e_f)`
    pub idsq_v: Vec<(String, String)>,
}

/// A finite (strict) double category with fully materialized composition
/// tables.
///
/// Horizontal composites are stored with the left (first) argument first,
/// vertical composites with the top argument first. `sq_hid[u]` is the
/// horizontal identity square on the vertical morphism `u` (sides `u`, top
/// and bottom horizontal identities) and `sq_vid[f]` is the vertical
/// identity square on the horizontal morphism `f`.
#[derive(Clone, Debug)]
pub struct FiniteDoubleCategory {
    objects: Vec<String>,
    hmors: Vec<Cell>,
    vmors: Vec<Cell>,
    squares: Vec<Square>,
    hid: Vec<usize>,
    vid: Vec<usize>,
    sq_hid: Vec<usize>,
    sq_vid: Vec<usize>,
    hcomp_h: Table,
    vcomp_v: Table,
    hcomp_sq: Table,
    vcomp_sq: Table,
    idx: Indexes,
}

#[derive(Clone, Debug, Default)]
struct Indexes {
    by_boundary: HashMap<[usize; 4], Vec<usize>>,
    hhom: HashMap<(usize, usize), Vec<usize>>,
    vhom: HashMap<(usize, usize), Vec<usize>>,
    by_left: Vec<Vec<usize>>,
    by_top: Vec<Vec<usize>>,
    hinv: Vec<Option<usize>>,
    vinv: Vec<Option<usize>>,
}

impl PartialEq for FiniteDoubleCategory {
    fn eq(&self, o: &Self) -> bool {
        self.objects == o.objects
            && self.hmors == o.hmors
            && self.vmors == o.vmors
            && self.squares == o.squares
            && self.hid == o.hid
            && self.vid == o.vid
            && self.sq_hid == o.sq_hid
            && self.sq_vid == o.sq_vid
            && self.hcomp_h == o.hcomp_h
            && self.vcomp_v == o.vcomp_v
            && self.hcomp_sq == o.hcomp_sq
            && self.vcomp_sq == o.vcomp_sq
    }
}

impl Eq for FiniteDoubleCategory {}

/// Indexed data for [`FiniteDoubleCategory::from_parts`].
#[derive(Clone, Debug)]
pub struct DoubleParts {
    pub objects: Vec<String>,
    pub hmors: Vec<Cell>,
    pub vmors: Vec<Cell>,
    pub squares: Vec<Square>,
    pub hid: Vec<usize>,
    pub vid: Vec<usize>,
    pub sq_hid: Vec<usize>,
    pub sq_vid: Vec<usize>,
    pub hcomp_h: Table,
    pub vcomp_v: Table,
    pub hcomp_sq: Table,
    pub vcomp_sq: Table,
}

fn check_unique<'a>(sort: &str, names: impl Iterator<Item = &'a str>) -> Result<(), DblCatError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(DblCatError::Malformed(format!("{sort} `{n}` declared twice")));
        }
    }
    Ok(())
}

impl FiniteDoubleCategory {
    /// Assembles a double category from indexed parts. Only index ranges
    /// and name uniqueness are checked here; the laws are checked by
    /// [`validate_double_category`].
    pub fn from_parts(p: DoubleParts) -> Result<Self, DblCatError> {
        check_unique("object", p.objects.iter().map(|s| s.as_str()))?;
        check_unique("horizontal morphism", p.hmors.iter().map(|s| s.name.as_str()))?;
        check_unique("vertical morphism", p.vmors.iter().map(|s| s.name.as_str()))?;
        check_unique("square", p.squares.iter().map(|s| s.name.as_str()))?;
        let (no, nh, nv, ns) = (p.objects.len(), p.hmors.len(), p.vmors.len(), p.squares.len());
        let bad = |what: &str| Err(DblCatError::Malformed(format!("{what} out of range")));
        if p.hmors.iter().chain(&p.vmors).any(|m| m.src >= no || m.tgt >= no) {
            return bad("morphism endpoint");
        }
        if p.squares
            .iter()
            .any(|s| s.top >= nh || s.bottom >= nh || s.left >= nv || s.right >= nv)
        {
            return bad("square boundary");
        }
        if p.hid.len() != no || p.vid.len() != no || p.sq_hid.len() != nv || p.sq_vid.len() != nh {
            return Err(DblCatError::Malformed("identity designation missing".into()));
        }
        if p.hid.iter().any(|&x| x >= nh)
            || p.vid.iter().any(|&x| x >= nv)
            || p.sq_hid.iter().chain(&p.sq_vid).any(|&x| x >= ns)
        {
            return bad("identity");
        }
        if p.hcomp_h.size() != nh
            || p.vcomp_v.size() != nv
            || p.hcomp_sq.size() != ns
            || p.vcomp_sq.size() != ns
        {
            return Err(DblCatError::Malformed("composition table size".into()));
        }
        let mut a = FiniteDoubleCategory {
            objects: p.objects,
            hmors: p.hmors,
            vmors: p.vmors,
            squares: p.squares,
            hid: p.hid,
            vid: p.vid,
            sq_hid: p.sq_hid,
            sq_vid: p.sq_vid,
            hcomp_h: p.hcomp_h,
            vcomp_v: p.vcomp_v,
            hcomp_sq: p.hcomp_sq,
            vcomp_sq: p.vcomp_sq,
            idx: Indexes::default(),
        };
        a.reindex();
        Ok(a)
    }

    pub fn into_parts(self) -> DoubleParts {
        DoubleParts {
            objects: self.objects,
            hmors: self.hmors,
            vmors: self.vmors,
            squares: self.squares,
            hid: self.hid,
            vid: self.vid,
            sq_hid: self.sq_hid,
            sq_vid: self.sq_vid,
            hcomp_h: self.hcomp_h,
            vcomp_v: self.vcomp_v,
            hcomp_sq: self.hcomp_sq,
            vcomp_sq: self.vcomp_sq,
        }
    }

    pub fn to_parts(&self) -> DoubleParts {
        self.clone().into_parts()
    }

    fn reindex(&mut self) {
        let mut idx = Indexes {
            by_left: vec![Vec::new(); self.vmors.len()],
            by_top: vec![Vec::new(); self.hmors.len()],
            ..Default::default()
        };
        for (i, s) in self.squares.iter().enumerate() {
            idx.by_boundary.entry(s.boundary()).or_default().push(i);
            idx.by_left[s.left].push(i);
            idx.by_top[s.top].push(i);
        }
        for (i, m) in self.hmors.iter().enumerate() {
            idx.hhom.entry((m.src, m.tgt)).or_default().push(i);
        }
        for (i, m) in self.vmors.iter().enumerate() {
            idx.vhom.entry((m.src, m.tgt)).or_default().push(i);
        }
        self.idx = idx;
        self.idx.hinv = (0..self.squares.len()).map(|s| self.find_hinv(s)).collect();
        self.idx.vinv = (0..self.squares.len()).map(|s| self.find_vinv(s)).collect();
    }

    fn find_hinv(&self, s: usize) -> Option<usize> {
        let sq = &self.squares[s];
        let (a, b) = (self.vmors[sq.left].src, self.vmors[sq.left].tgt);
        if sq.top != self.hid[a] || sq.bottom != self.hid[b] {
            return None;
        }
        let cands = self.squares_with([sq.top, sq.bottom, sq.right, sq.left]);
        cands.iter().copied().find(|&t| {
            self.hcomp_sq.get(s, t) == Some(self.sq_hid[sq.left])
                && self.hcomp_sq.get(t, s) == Some(self.sq_hid[sq.right])
        })
    }

    fn find_vinv(&self, s: usize) -> Option<usize> {
        let sq = &self.squares[s];
        let (a, b) = (self.hmors[sq.top].src, self.hmors[sq.top].tgt);
        if sq.left != self.vid[a] || sq.right != self.vid[b] {
            return None;
        }
        let cands = self.squares_with([sq.bottom, sq.top, sq.left, sq.right]);
        cands.iter().copied().find(|&t| {
            self.vcomp_sq.get(s, t) == Some(self.sq_vid[sq.top])
                && self.vcomp_sq.get(t, s) == Some(self.sq_vid[sq.bottom])
        })
    }

    pub fn from_raw(raw: &RawDoubleCategory) -> Result<Self, DblCatError> {
        let lookup = |sort: &str, names: &[String], n: &str| -> Result<usize, DblCatError> {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| DblCatError::UnknownCell {
                    sort: sort.to_string(),
                    name: n.to_string(),
                })
        };
        let objects = raw.objects.clone();
        let cells = |sort: &str, list: &[(String, String, String)]| -> Result<Vec<Cell>, DblCatError> {
            list.iter()
                .map(|(n, s, t)| {
                    Ok(Cell::new(
                        n.clone(),
                        lookup("object", &objects, s)?,
                        lookup("object", &objects, t)?,
                    ))
                })
                .collect::<Result<_, _>>()
                .map_err(|e: DblCatError| match e {
                    DblCatError::UnknownCell { name, .. } => DblCatError::UnknownCell {
                        sort: format!("object (in {sort})"),
                        name,
                    },
                    e => e,
                })
        };
        let hmors = cells("horizontal morphism", &raw.hmors)?;
        let vmors = cells("vertical morphism", &raw.vmors)?;
        let hn: Vec<String> = hmors.iter().map(|m| m.name.clone()).collect();
        let vn: Vec<String> = vmors.iter().map(|m| m.name.clone()).collect();
        let squares: Vec<Square> = raw
            .squares
            .iter()
            .map(|(n, t, b, l, r)| {
                Ok(Square {
                    name: n.clone(),
                    top: lookup("horizontal morphism", &hn, t)?,
                    bottom: lookup("horizontal morphism", &hn, b)?,
                    left: lookup("vertical morphism", &vn, l)?,
                    right: lookup("vertical morphism", &vn, r)?,
                })
            })
            .collect::<Result<_, DblCatError>>()?;
        let sn: Vec<String> = squares.iter().map(|s| s.name.clone()).collect();
        let designate = |sort: &str,
                         keys: &[String],
                         key_sort: &str,
                         vals: &[String],
                         list: &[(String, String)]|
         -> Result<Vec<usize>, DblCatError> {
            let mut out = vec![None; keys.len()];
            for (k, v) in list {
                out[lookup(key_sort, keys, k)?] = Some(lookup(sort, vals, v)?);
            }
            out.into_iter()
                .enumerate()
                .map(|(i, x)| {
                    x.ok_or_else(|| {
                        DblCatError::Malformed(format!("no {sort} identity for `{}`", keys[i]))
                    })
                })
                .collect()
        };
        let hid = designate("horizontal morphism", &objects, "object", &hn, &raw.idh)?;
        let vid = designate("vertical morphism", &objects, "object", &vn, &raw.idv)?;
        let sq_hid = designate("square", &vn, "vertical morphism", &sn, &raw.idsq_h)?;
        let sq_vid = designate("square", &hn, "horizontal morphism", &sn, &raw.idsq_v)?;
        let table = |sort: &str, names: &[String], list: &[(String, String, String)]| {
            let mut t = Table::new(names.len());
            for (a, b, c) in list {
                t.set(
                    lookup(sort, names, a)?,
                    lookup(sort, names, b)?,
                    lookup(sort, names, c)?,
                );
            }
            Ok::<_, DblCatError>(t)
        };
        let mut hcomp_h = table("horizontal morphism", &hn, &raw.hcomp)?;
        let mut vcomp_v = table("vertical morphism", &vn, &raw.vcomp)?;
        let mut hcomp_sq = table("square", &sn, &raw.sq_hcomp)?;
        let mut vcomp_sq = table("square", &sn, &raw.sq_vcomp)?;
        // composites with identities may be left implicit
        for (f, m) in hmors.iter().enumerate() {
            fill(&mut hcomp_h, hid[m.src], f, f);
            fill(&mut hcomp_h, f, hid[m.tgt], f);
        }
        for (u, m) in vmors.iter().enumerate() {
            fill(&mut vcomp_v, vid[m.src], u, u);
            fill(&mut vcomp_v, u, vid[m.tgt], u);
        }
        for (s, sq) in squares.iter().enumerate() {
            fill(&mut hcomp_sq, sq_hid[sq.left], s, s);
            fill(&mut hcomp_sq, s, sq_hid[sq.right], s);
            fill(&mut vcomp_sq, sq_vid[sq.top], s, s);
            fill(&mut vcomp_sq, s, sq_vid[sq.bottom], s);
        }
        FiniteDoubleCategory::from_parts(DoubleParts {
            objects,
            hmors,
            vmors,
            squares,
            hid,
            vid,
            sq_hid,
            sq_vid,
            hcomp_h,
            vcomp_v,
            hcomp_sq,
            vcomp_sq,
        })
    }

    pub fn to_raw(&self) -> RawDoubleCategory {
        let h = |i: usize| self.hmors[i].name.clone();
        let v = |i: usize| self.vmors[i].name.clone();
        let s = |i: usize| self.squares[i].name.clone();
        let o = |i: usize| self.objects[i].clone();
        RawDoubleCategory {
            objects: self.objects.clone(),
            hmors: self.hmors.iter().map(|m| (m.name.clone(), o(m.src), o(m.tgt))).collect(),
            vmors: self.vmors.iter().map(|m| (m.name.clone(), o(m.src), o(m.tgt))).collect(),
            squares: self
                .squares
                .iter()
                .map(|q| (q.name.clone(), h(q.top), h(q.bottom), v(q.left), v(q.right)))
                .collect(),
            hcomp: self.hcomp_h.entries().map(|(a, b, c)| (h(a), h(b), h(c))).collect(),
            vcomp: self.vcomp_v.entries().map(|(a, b, c)| (v(a), v(b), v(c))).collect(),
            sq_hcomp: self.hcomp_sq.entries().map(|(a, b, c)| (s(a), s(b), s(c))).collect(),
            sq_vcomp: self.vcomp_sq.entries().map(|(a, b, c)| (s(a), s(b), s(c))).collect(),
            idh: (0..self.objects.len()).map(|a| (o(a), h(self.hid[a]))).collect(),
            idv: (0..self.objects.len()).map(|a| (o(a), v(self.vid[a]))).collect(),
            idsq_h: (0..self.vmors.len()).map(|u| (v(u), s(self.sq_hid[u]))).collect(),
            idsq_v: (0..self.hmors.len()).map(|f| (h(f), s(self.sq_vid[f]))).collect(),
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }
    pub fn hmors(&self) -> &[Cell] {
        &self.hmors
    }
    pub fn vmors(&self) -> &[Cell] {
        &self.vmors
    }
    pub fn squares(&self) -> &[Square] {
        &self.squares
    }
    pub fn hid(&self, a: usize) -> usize {
        self.hid[a]
    }
    pub fn vid(&self, a: usize) -> usize {
        self.vid[a]
    }
    /// The horizontal identity square on a vertical morphism.
    pub fn sq_hid(&self, u: usize) -> usize {
        self.sq_hid[u]
    }
    /// The vertical identity square on a horizontal morphism.
    pub fn sq_vid(&self, f: usize) -> usize {
        self.sq_vid[f]
    }
    pub fn hcomp_h(&self, f: usize, g: usize) -> Option<usize> {
        self.hcomp_h.get(f, g)
    }
    pub fn vcomp_v(&self, u: usize, w: usize) -> Option<usize> {
        self.vcomp_v.get(u, w)
    }
    pub fn hcomp_sq(&self, a: usize, b: usize) -> Option<usize> {
        self.hcomp_sq.get(a, b)
    }
    pub fn vcomp_sq(&self, a: usize, b: usize) -> Option<usize> {
        self.vcomp_sq.get(a, b)
    }
    pub fn tables(&self) -> [&Table; 4] {
        [&self.hcomp_h, &self.vcomp_v, &self.hcomp_sq, &self.vcomp_sq]
    }

    pub fn squares_with(&self, boundary: [usize; 4]) -> &[usize] {
        self.idx
            .by_boundary
            .get(&boundary)
            .map_or(&[], |v| v.as_slice())
    }
    pub fn hhom(&self, a: usize, b: usize) -> &[usize] {
        self.idx.hhom.get(&(a, b)).map_or(&[], |v| v.as_slice())
    }
    pub fn vhom(&self, a: usize, b: usize) -> &[usize] {
        self.idx.vhom.get(&(a, b)).map_or(&[], |v| v.as_slice())
    }
    pub fn squares_with_left(&self, u: usize) -> &[usize] {
        &self.idx.by_left[u]
    }
    pub fn squares_with_top(&self, f: usize) -> &[usize] {
        &self.idx.by_top[f]
    }

    /// Inverse for horizontal composition of a square whose top and bottom
    /// are horizontal identities.
    pub fn h_inverse(&self, s: usize) -> Option<usize> {
        self.idx.hinv[s]
    }
    /// Inverse for vertical composition of a square whose sides are
    /// vertical identities.
    pub fn v_inverse(&self, s: usize) -> Option<usize> {
        self.idx.vinv[s]
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }
    pub fn hmor(&self, name: &str) -> Option<usize> {
        self.hmors.iter().position(|o| o.name == name)
    }
    pub fn vmor(&self, name: &str) -> Option<usize> {
        self.vmors.iter().position(|o| o.name == name)
    }
    pub fn square(&self, name: &str) -> Option<usize> {
        self.squares.iter().position(|o| o.name == name)
    }

    pub fn is_hid(&self, f: usize) -> bool {
        self.hid[self.hmors[f].src] == f
    }
    pub fn is_vid(&self, u: usize) -> bool {
        self.vid[self.vmors[u].src] == u
    }

    /// Sizes `(objects, horizontal, vertical, squares)`.
    pub fn size(&self) -> (usize, usize, usize, usize) {
        (
            self.objects.len(),
            self.hmors.len(),
            self.vmors.len(),
            self.squares.len(),
        )
    }

    /// A one-line boundary description of a square.
    pub fn describe_square(&self, s: usize) -> String {
        let q = &self.squares[s];
        format!(
            "{} [top={} bottom={} left={} right={}]",
            q.name,
            self.hmors[q.top].name,
            self.hmors[q.bottom].name,
            self.vmors[q.left].name,
            self.vmors[q.right].name
        )
    }
}

fn fill(t: &mut Table, a: usize, b: usize, c: usize) {
    if t.get(a, b).is_none() {
        t.set(a, b, c);
    }
}

/// Checks the double category laws in a fixed order and returns the first
/// violation: typing, agreement of the two identity squares on an object,
/// totality, boundaries of composite squares, units, associativity,
/// functoriality of identity squares and interchange.
pub fn validate_double_category(a: &FiniteDoubleCategory) -> Result<(), DblCatError> {
    let hname = |f: usize| a.hmors[f].name.clone();
    let vname = |u: usize| a.vmors[u].name.clone();
    let sname = |s: usize| a.squares[s].name.clone();
    let sq = |s: usize| &a.squares[s];

    // typing
    for (o, &f) in a.hid.iter().enumerate() {
        if a.hmors[f].src != o || a.hmors[f].tgt != o {
            return Err(DblCatError::law("horizontal identity typing", vec![hname(f)]));
        }
    }
    for (o, &u) in a.vid.iter().enumerate() {
        if a.vmors[u].src != o || a.vmors[u].tgt != o {
            return Err(DblCatError::law("vertical identity typing", vec![vname(u)]));
        }
    }
    for (s, q) in a.squares.iter().enumerate() {
        let (t, b, l, r) = (&a.hmors[q.top], &a.hmors[q.bottom], &a.vmors[q.left], &a.vmors[q.right]);
        if t.src != l.src || t.tgt != r.src || b.src != l.tgt || b.tgt != r.tgt {
            return Err(DblCatError::law("square boundary typing", vec![sname(s)]));
        }
    }
    for (u, &s) in a.sq_hid.iter().enumerate() {
        let m = &a.vmors[u];
        if sq(s).boundary() != [a.hid[m.src], a.hid[m.tgt], u, u] {
            return Err(DblCatError::law("identity square typing", vec![vname(u), sname(s)]));
        }
    }
    for (f, &s) in a.sq_vid.iter().enumerate() {
        let m = &a.hmors[f];
        if sq(s).boundary() != [f, f, a.vid[m.src], a.vid[m.tgt]] {
            return Err(DblCatError::law("identity square typing", vec![hname(f), sname(s)]));
        }
    }
    for (x, y, _) in a.hcomp_sq.entries() {
        if sq(x).right != sq(y).left {
            return Err(DblCatError::law(
                "horizontal square composition typing",
                vec![sname(x), sname(y)],
            ));
        }
    }
    for (x, y, _) in a.vcomp_sq.entries() {
        if sq(x).bottom != sq(y).top {
            return Err(DblCatError::law(
                "vertical square composition typing",
                vec![sname(x), sname(y)],
            ));
        }
    }
    // identity square on an object
    for o in 0..a.objects.len() {
        if a.sq_hid[a.vid[o]] != a.sq_vid[a.hid[o]] {
            return Err(DblCatError::law(
                "object identity square",
                vec![a.objects[o].clone(), sname(a.sq_hid[a.vid[o]]), sname(a.sq_vid[a.hid[o]])],
            ));
        }
    }
    // the two underlying categories (typing, totality, units, associativity)
    check_category("horizontal", &a.objects, &a.hmors, &a.hid, &a.hcomp_h)?;
    check_category("vertical", &a.objects, &a.vmors, &a.vid, &a.vcomp_v)?;
    // square totality
    for x in 0..a.squares.len() {
        for &y in a.squares_with_left(sq(x).right) {
            if a.hcomp_sq.get(x, y).is_none() {
                return Err(DblCatError::NonComposablePair {
                    kind: "horizontal square".into(),
                    first: sname(x),
                    second: sname(y),
                });
            }
        }
        for &y in a.squares_with_top(sq(x).bottom) {
            if a.vcomp_sq.get(x, y).is_none() {
                return Err(DblCatError::NonComposablePair {
                    kind: "vertical square".into(),
                    first: sname(x),
                    second: sname(y),
                });
            }
        }
    }
    // boundaries of composites
    for (x, y, z) in a.hcomp_sq.entries() {
        let want = [
            a.hcomp_h.get(sq(x).top, sq(y).top).unwrap(),
            a.hcomp_h.get(sq(x).bottom, sq(y).bottom).unwrap(),
            sq(x).left,
            sq(y).right,
        ];
        if sq(z).boundary() != want {
            return Err(DblCatError::law(
                "horizontal square composite boundary",
                vec![sname(x), sname(y), sname(z)],
            ));
        }
    }
    for (x, y, z) in a.vcomp_sq.entries() {
        let want = [
            sq(x).top,
            sq(y).bottom,
            a.vcomp_v.get(sq(x).left, sq(y).left).unwrap(),
            a.vcomp_v.get(sq(x).right, sq(y).right).unwrap(),
        ];
        if sq(z).boundary() != want {
            return Err(DblCatError::law(
                "vertical square composite boundary",
                vec![sname(x), sname(y), sname(z)],
            ));
        }
    }
    // units
    for s in 0..a.squares.len() {
        let q = sq(s);
        if a.hcomp_sq.get(a.sq_hid[q.left], s) != Some(s) || a.hcomp_sq.get(s, a.sq_hid[q.right]) != Some(s) {
            return Err(DblCatError::law("horizontal square unit", vec![sname(s)]));
        }
        if a.vcomp_sq.get(a.sq_vid[q.top], s) != Some(s) || a.vcomp_sq.get(s, a.sq_vid[q.bottom]) != Some(s) {
            return Err(DblCatError::law("vertical square unit", vec![sname(s)]));
        }
    }
    // associativity
    for (x, y, xy) in a.hcomp_sq.entries() {
        for &z in a.squares_with_left(sq(y).right) {
            let yz = a.hcomp_sq.get(y, z).unwrap();
            if a.hcomp_sq.get(xy, z) != a.hcomp_sq.get(x, yz) {
                return Err(DblCatError::law(
                    "horizontal square associativity",
                    vec![sname(x), sname(y), sname(z)],
                ));
            }
        }
    }
    for (x, y, xy) in a.vcomp_sq.entries() {
        for &z in a.squares_with_top(sq(y).bottom) {
            let yz = a.vcomp_sq.get(y, z).unwrap();
            if a.vcomp_sq.get(xy, z) != a.vcomp_sq.get(x, yz) {
                return Err(DblCatError::law(
                    "vertical square associativity",
                    vec![sname(x), sname(y), sname(z)],
                ));
            }
        }
    }
    // identity squares respect composition
    for (f, g, fg) in a.hcomp_h.entries() {
        if a.hcomp_sq.get(a.sq_vid[f], a.sq_vid[g]) != Some(a.sq_vid[fg]) {
            return Err(DblCatError::law(
                "vertical identity square functoriality",
                vec![hname(f), hname(g)],
            ));
        }
    }
    for (u, w, uw) in a.vcomp_v.entries() {
        if a.vcomp_sq.get(a.sq_hid[u], a.sq_hid[w]) != Some(a.sq_hid[uw]) {
            return Err(DblCatError::law(
                "horizontal identity square functoriality",
                vec![vname(u), vname(w)],
            ));
        }
    }
    // interchange
    for (x, y, xy) in a.hcomp_sq.entries() {
        for &z in a.squares_with_top(sq(x).bottom) {
            let xz = a.vcomp_sq.get(x, z).unwrap();
            for &w in a.squares_with_top(sq(y).bottom) {
                if sq(w).left != sq(z).right {
                    continue;
                }
                let zw = a.hcomp_sq.get(z, w).unwrap();
                let yw = a.vcomp_sq.get(y, w).unwrap();
                let lhs = a.vcomp_sq.get(xy, zw);
                let rhs = a.hcomp_sq.get(xz, yw);
                if lhs != rhs {
                    return Err(DblCatError::law(
                        "interchange",
                        vec![sname(x), sname(y), sname(z), sname(w)],
                    ));
                }
            }
        }
    }
    Ok(())
}
