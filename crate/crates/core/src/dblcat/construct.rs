//! Constructions of finite double categories: from 2-categories, opposites,
//! products, free-ish builders and thin closures.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::error::DblCatError;

use super::category::{CategoryFunctor, Cell, Finite2Category, FiniteCategory};
use super::functor::{validate_double_functor, DoubleFunctor};
use super::double::{validate_double_category, DoubleParts, FiniteDoubleCategory, RawDoubleCategory, Square};
use super::table::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Horizontal,
    Vertical,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Horizontal => "horizontal",
            Direction::Vertical => "vertical",
        })
    }
}

/// The double category of squares in a 2-category: both kinds of morphism
/// are the 1-cells, and a square with boundary `(top, bottom, left, right)`
/// is a 2-cell `top;right => left;bottom`.
pub fn sq_of_2cat(c: &Finite2Category) -> FiniteDoubleCategory {
    let b = &c.base;
    let nm = b.mors.len();
    let mut squares = Vec::new();
    let mut index: HashMap<(usize, [usize; 4]), usize> = HashMap::new();
    let mut by_cell: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (a, cell) in c.cells.iter().enumerate() {
        by_cell.entry((cell.src, cell.tgt)).or_default().push(a);
    }
    for t in 0..nm {
        for r in 0..nm {
            if b.mors[r].src != b.mors[t].tgt {
                continue;
            }
            let tr = b.comp.get(t, r).unwrap();
            for l in 0..nm {
                if b.mors[l].src != b.mors[t].src {
                    continue;
                }
                for bt in 0..nm {
                    if b.mors[bt].src != b.mors[l].tgt || b.mors[bt].tgt != b.mors[r].tgt {
                        continue;
                    }
                    let lb = b.comp.get(l, bt).unwrap();
                    for &a in by_cell.get(&(tr, lb)).map_or(&[][..], |v| v.as_slice()) {
                        let bd = [t, bt, l, r];
                        index.insert((a, bd), squares.len());
                        squares.push((
                            a,
                            Square {
                                name: format!(
                                    "{}<{},{},{},{}>",
                                    c.cells[a].name,
                                    b.mors[t].name,
                                    b.mors[bt].name,
                                    b.mors[l].name,
                                    b.mors[r].name
                                ),
                                top: t,
                                bottom: bt,
                                left: l,
                                right: r,
                            },
                        ));
                    }
                }
            }
        }
    }
    let ns = squares.len();
    let mut hcomp_sq = Table::new(ns);
    let mut vcomp_sq = Table::new(ns);
    let mut by_left: Vec<Vec<usize>> = vec![Vec::new(); nm];
    let mut by_top: Vec<Vec<usize>> = vec![Vec::new(); nm];
    for (i, (_, s)) in squares.iter().enumerate() {
        by_left[s.left].push(i);
        by_top[s.top].push(i);
    }
    for (i, (a, s)) in squares.iter().enumerate() {
        for &j in &by_left[s.right] {
            let (b2, s2) = &squares[j];
            // first whisker the right square by the top, then the left square by the bottom
            let x = c.hcomp2.get(c.id2[s.top], *b2).unwrap();
            let y = c.hcomp2.get(*a, c.id2[s2.bottom]).unwrap();
            let z = c.vcomp2.get(x, y).unwrap();
            let bd = [
                b.comp.get(s.top, s2.top).unwrap(),
                b.comp.get(s.bottom, s2.bottom).unwrap(),
                s.left,
                s2.right,
            ];
            hcomp_sq.set(i, j, index[&(z, bd)]);
        }
        for &j in &by_top[s.bottom] {
            let (g, s2) = &squares[j];
            let x = c.hcomp2.get(*a, c.id2[s2.right]).unwrap();
            let y = c.hcomp2.get(c.id2[s.left], *g).unwrap();
            let z = c.vcomp2.get(x, y).unwrap();
            let bd = [
                s.top,
                s2.bottom,
                b.comp.get(s.left, s2.left).unwrap(),
                b.comp.get(s.right, s2.right).unwrap(),
            ];
            vcomp_sq.set(i, j, index[&(z, bd)]);
        }
    }
    let sq_hid = (0..nm)
        .map(|u| {
            let m = &b.mors[u];
            index[&(c.id2[u], [b.ids[m.src], b.ids[m.tgt], u, u])]
        })
        .collect();
    let sq_vid = (0..nm)
        .map(|f| {
            let m = &b.mors[f];
            index[&(c.id2[f], [f, f, b.ids[m.src], b.ids[m.tgt]])]
        })
        .collect();
    FiniteDoubleCategory::from_parts(DoubleParts {
        objects: b.objects.clone(),
        hmors: b.mors.clone(),
        vmors: b.mors.clone(),
        squares: squares.into_iter().map(|(_, s)| s).collect(),
        hid: b.ids.clone(),
        vid: b.ids.clone(),
        sq_hid,
        sq_vid,
        hcomp_h: b.comp.clone(),
        vcomp_v: b.comp.clone(),
        hcomp_sq,
        vcomp_sq,
    })
    .expect("square double category is well-formed")
}

/// The horizontal opposite: horizontal morphisms and squares are reflected
/// left to right.
pub fn hop(a: &FiniteDoubleCategory) -> FiniteDoubleCategory {
    let mut p = a.to_parts();
    for m in &mut p.hmors {
        std::mem::swap(&mut m.src, &mut m.tgt);
    }
    for s in &mut p.squares {
        std::mem::swap(&mut s.left, &mut s.right);
    }
    p.hcomp_h = p.hcomp_h.transposed();
    p.hcomp_sq = p.hcomp_sq.transposed();
    FiniteDoubleCategory::from_parts(p).expect("horizontal opposite is well-formed")
}

/// The 2-category of objects, morphisms in one direction and the squares
/// whose boundary in the other direction consists of identities.
pub fn extract_2category(a: &FiniteDoubleCategory, dir: Direction) -> Finite2Category {
    let (mors, ids, comp) = match dir {
        Direction::Horizontal => (a.hmors().to_vec(), (0..a.objects().len()).map(|o| a.hid(o)).collect::<Vec<_>>(), a.tables()[0].clone()),
        Direction::Vertical => (a.vmors().to_vec(), (0..a.objects().len()).map(|o| a.vid(o)).collect::<Vec<_>>(), a.tables()[1].clone()),
    };
    let globular = |s: &Square| match dir {
        Direction::Horizontal => a.is_vid(s.left) && a.is_vid(s.right),
        Direction::Vertical => a.is_hid(s.top) && a.is_hid(s.bottom),
    };
    let picked: Vec<usize> = (0..a.squares().len()).filter(|&s| globular(&a.squares()[s])).collect();
    let pos: HashMap<usize, usize> = picked.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let cells: Vec<Cell> = picked
        .iter()
        .map(|&s| {
            let q = &a.squares()[s];
            match dir {
                Direction::Horizontal => Cell::new(q.name.clone(), q.top, q.bottom),
                Direction::Vertical => Cell::new(q.name.clone(), q.left, q.right),
            }
        })
        .collect();
    let (vc, hc) = match dir {
        Direction::Horizontal => (a.tables()[3], a.tables()[2]),
        Direction::Vertical => (a.tables()[2], a.tables()[3]),
    };
    let restrict = |t: &Table| {
        let mut out = Table::new(picked.len());
        for (i, &s) in picked.iter().enumerate() {
            for (j, &s2) in picked.iter().enumerate() {
                if let Some(r) = t.get(s, s2) {
                    out.set(i, j, pos[&r]);
                }
            }
        }
        out
    };
    let id2 = (0..mors.len())
        .map(|m| match dir {
            Direction::Horizontal => pos[&a.sq_vid(m)],
            Direction::Vertical => pos[&a.sq_hid(m)],
        })
        .collect();
    Finite2Category {
        base: FiniteCategory {
            objects: a.objects().to_vec(),
            mors,
            ids,
            comp,
        },
        vcomp2: restrict(vc),
        hcomp2: restrict(hc),
        cells,
        id2,
    }
}

/// A 2-category as a double category with only identity vertical morphisms.
pub fn horizontal_embedding(c: &Finite2Category) -> FiniteDoubleCategory {
    embed(c, Direction::Horizontal)
}

/// A 2-category as a double category with only identity horizontal morphisms.
pub fn vertical_embedding(c: &Finite2Category) -> FiniteDoubleCategory {
    embed(c, Direction::Vertical)
}

fn embed(c: &Finite2Category, dir: Direction) -> FiniteDoubleCategory {
    let b = &c.base;
    let no = b.objects.len();
    let trivial: Vec<Cell> = (0..no).map(|o| Cell::new(format!("1_{}", b.objects[o]), o, o)).collect();
    let mut tcomp = Table::new(no);
    for o in 0..no {
        tcomp.set(o, o, o);
    }
    let squares: Vec<Square> = c
        .cells
        .iter()
        .map(|cell| {
            let m = &b.mors[cell.src];
            match dir {
                Direction::Horizontal => Square {
                    name: cell.name.clone(),
                    top: cell.src,
                    bottom: cell.tgt,
                    left: m.src,
                    right: m.tgt,
                },
                Direction::Vertical => Square {
                    name: cell.name.clone(),
                    top: m.src,
                    bottom: m.tgt,
                    left: cell.src,
                    right: cell.tgt,
                },
            }
        })
        .collect();
    let obj_sq: Vec<usize> = (0..no).map(|o| c.id2[b.ids[o]]).collect();
    let parts = match dir {
        Direction::Horizontal => DoubleParts {
            objects: b.objects.clone(),
            hmors: b.mors.clone(),
            vmors: trivial,
            squares,
            hid: b.ids.clone(),
            vid: (0..no).collect(),
            sq_hid: obj_sq,
            sq_vid: c.id2.clone(),
            hcomp_h: b.comp.clone(),
            vcomp_v: tcomp,
            hcomp_sq: c.hcomp2.clone(),
            vcomp_sq: c.vcomp2.clone(),
        },
        Direction::Vertical => DoubleParts {
            objects: b.objects.clone(),
            hmors: trivial,
            vmors: b.mors.clone(),
            squares,
            hid: (0..no).collect(),
            vid: b.ids.clone(),
            sq_hid: c.id2.clone(),
            sq_vid: obj_sq,
            hcomp_h: tcomp,
            vcomp_v: b.comp.clone(),
            hcomp_sq: c.vcomp2.clone(),
            vcomp_sq: c.hcomp2.clone(),
        },
    };
    FiniteDoubleCategory::from_parts(parts).expect("embedding is well-formed")
}

/// A functor of categories as a double functor between the horizontal
/// embeddings of their locally discrete 2-categories.
pub fn embed_functor(c: &FiniteCategory, d: &FiniteCategory, f: &CategoryFunctor) -> Result<DoubleFunctor, DblCatError> {
    f.validate(c, d)?;
    let dom = Arc::new(horizontal_embedding(&Finite2Category::locally_discrete(c.clone())));
    let cod = Arc::new(horizontal_embedding(&Finite2Category::locally_discrete(d.clone())));
    let g = DoubleFunctor {
        obj: f.obj.clone(),
        h: f.mor.clone(),
        v: f.obj.clone(),
        sq: (0..dom.squares().len()).map(|s| cod.sq_vid(f.mor[dom.squares()[s].top])).collect(),
        dom,
        cod,
    };
    validate_double_functor(&g)?;
    Ok(g)
}

/// The product of two double categories; cells are named `<x,y>`.
pub fn product(a: &FiniteDoubleCategory, b: &FiniteDoubleCategory) -> FiniteDoubleCategory {
    let pair = |x: &str, y: &str| format!("<{x},{y}>");
    let (na, nb) = (a.objects().len(), b.objects().len());
    let (ha, hb) = (a.hmors().len(), b.hmors().len());
    let (va, vb) = (a.vmors().len(), b.vmors().len());
    let (sa, sb) = (a.squares().len(), b.squares().len());
    let objects = (0..na * nb)
        .map(|i| pair(&a.objects()[i / nb], &b.objects()[i % nb]))
        .collect();
    let cells = |ma: &[Cell], mb: &[Cell]| -> Vec<Cell> {
        let n2 = mb.len();
        (0..ma.len() * n2)
            .map(|i| {
                let (x, y) = (&ma[i / n2], &mb[i % n2]);
                Cell::new(pair(&x.name, &y.name), x.src * nb + y.src, x.tgt * nb + y.tgt)
            })
            .collect()
    };
    let squares = (0..sa * sb)
        .map(|i| {
            let (x, y) = (&a.squares()[i / sb], &b.squares()[i % sb]);
            Square {
                name: pair(&x.name, &y.name),
                top: x.top * hb + y.top,
                bottom: x.bottom * hb + y.bottom,
                left: x.left * vb + y.left,
                right: x.right * vb + y.right,
            }
        })
        .collect();
    let table = |ta: &Table, tb: &Table| {
        let m = tb.size();
        let mut t = Table::new(ta.size() * m);
        for (x, x2, x3) in ta.entries() {
            for (y, y2, y3) in tb.entries() {
                t.set(x * m + y, x2 * m + y2, x3 * m + y3);
            }
        }
        t
    };
    let [ah, av, ahs, avs] = a.tables();
    let [bh, bv, bhs, bvs] = b.tables();
    FiniteDoubleCategory::from_parts(DoubleParts {
        objects,
        hmors: cells(a.hmors(), b.hmors()),
        vmors: cells(a.vmors(), b.vmors()),
        squares,
        hid: (0..na * nb).map(|i| a.hid(i / nb) * hb + b.hid(i % nb)).collect(),
        vid: (0..na * nb).map(|i| a.vid(i / nb) * vb + b.vid(i % nb)).collect(),
        sq_hid: (0..va * vb).map(|i| a.sq_hid(i / vb) * sb + b.sq_hid(i % vb)).collect(),
        sq_vid: (0..ha * hb).map(|i| a.sq_vid(i / hb) * sb + b.sq_vid(i % hb)).collect(),
        hcomp_h: table(ah, bh),
        vcomp_v: table(av, bv),
        hcomp_sq: table(ahs, bhs),
        vcomp_sq: table(avs, bvs),
    })
    .expect("product is well-formed")
}

/// Builds small double categories from generating cells. Identity cells
/// are added automatically (`1_a` for objects, `1_u` and `e_f` for the
/// identity squares) together with every composite involving an identity.
#[derive(Clone, Debug, Default)]
pub struct DoubleBuilder {
    raw: RawDoubleCategory,
}

impl DoubleBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str) -> Self {
        self.raw.objects.push(name.to_string());
        self
    }

    pub fn objects(mut self, names: &[&str]) -> Self {
        self.raw.objects.extend(names.iter().map(|s| s.to_string()));
        self
    }

    pub fn hmor(mut self, name: &str, src: &str, tgt: &str) -> Self {
        self.raw.hmors.push((name.into(), src.into(), tgt.into()));
        self
    }

    pub fn vmor(mut self, name: &str, src: &str, tgt: &str) -> Self {
        self.raw.vmors.push((name.into(), src.into(), tgt.into()));
        self
    }

    pub fn square(mut self, name: &str, top: &str, bottom: &str, left: &str, right: &str) -> Self {
        self.raw.squares.push((
            name.into(),
            top.into(),
            bottom.into(),
            left.into(),
            right.into(),
        ));
        self
    }

    /// `first ; second = composite` for horizontal morphisms.
    pub fn hcomp(mut self, first: &str, second: &str, composite: &str) -> Self {
        self.raw.hcomp.push((first.into(), second.into(), composite.into()));
        self
    }

    pub fn vcomp(mut self, first: &str, second: &str, composite: &str) -> Self {
        self.raw.vcomp.push((first.into(), second.into(), composite.into()));
        self
    }

    pub fn sq_hcomp(mut self, left: &str, right: &str, composite: &str) -> Self {
        self.raw.sq_hcomp.push((left.into(), right.into(), composite.into()));
        self
    }

    pub fn sq_vcomp(mut self, top: &str, bottom: &str, composite: &str) -> Self {
        self.raw.sq_vcomp.push((top.into(), bottom.into(), composite.into()));
        self
    }

    pub fn build(self) -> Result<FiniteDoubleCategory, DblCatError> {
        let mut raw = self.raw;
        let objects = raw.objects.clone();
        let hm = raw.hmors.clone();
        let vm = raw.vmors.clone();
        for o in &objects {
            let id = format!("1_{o}");
            raw.hmors.push((id.clone(), o.clone(), o.clone()));
            raw.vmors.push((id.clone(), o.clone(), o.clone()));
            raw.squares.push((id.clone(), id.clone(), id.clone(), id.clone(), id.clone()));
            raw.idh.push((o.clone(), id.clone()));
            raw.idv.push((o.clone(), id.clone()));
            raw.idsq_h.push((id.clone(), id.clone()));
            raw.idsq_v.push((id.clone(), id.clone()));
        }
        let obj_id = |o: &str| format!("1_{o}");
        for (f, a, b) in &hm {
            let e = format!("e_{f}");
            raw.squares.push((e.clone(), f.clone(), f.clone(), obj_id(a), obj_id(b)));
            raw.idsq_v.push((f.clone(), e));
        }
        for (u, a, b) in &vm {
            let i = format!("1_{u}");
            raw.squares.push((i.clone(), obj_id(a), obj_id(b), u.clone(), u.clone()));
            raw.idsq_h.push((u.clone(), i));
        }
        let id_sq_h = |f: &str| -> String {
            if hm.iter().any(|(g, _, _)| g == f) {
                format!("e_{f}")
            } else {
                f.to_string()
            }
        };
        let id_sq_v = |u: &str| -> String {
            if vm.iter().any(|(g, _, _)| g == u) {
                format!("1_{u}")
            } else {
                u.to_string()
            }
        };
        for (f, g, h) in raw.hcomp.clone() {
            raw.sq_hcomp.push((id_sq_h(&f), id_sq_h(&g), id_sq_h(&h)));
        }
        for (u, w, x) in raw.vcomp.clone() {
            raw.sq_vcomp.push((id_sq_v(&u), id_sq_v(&w), id_sq_v(&x)));
        }
        let a = FiniteDoubleCategory::from_raw(&raw)?;
        validate_double_category(&a)?;
        Ok(a)
    }
}

/// The thin double category generated by a horizontal and a vertical
/// category on the same objects and a set of square boundaries: the
/// closure of the boundaries under identities and both compositions, with
/// at most one square per boundary.
pub fn thin_closure(
    h: &FiniteCategory,
    v: &FiniteCategory,
    gens: &[(&str, &str, &str, &str, &str)],
) -> Result<FiniteDoubleCategory, DblCatError> {
    if h.objects != v.objects {
        return Err(DblCatError::Malformed("horizontal and vertical objects differ".into()));
    }
    let hm = |n: &str| {
        h.mor(n).ok_or_else(|| DblCatError::UnknownCell {
            sort: "horizontal morphism".into(),
            name: n.to_string(),
        })
    };
    let vm = |n: &str| {
        v.mor(n).ok_or_else(|| DblCatError::UnknownCell {
            sort: "vertical morphism".into(),
            name: n.to_string(),
        })
    };
    let mut squares: Vec<Square> = Vec::new();
    let mut by_bd: BTreeMap<[usize; 4], usize> = BTreeMap::new();
    let mut names: HashSet<String> = HashSet::new();
    let mut add = |squares: &mut Vec<Square>, name: String, bd: [usize; 4]| -> usize {
        if let Some(&i) = by_bd.get(&bd) {
            return i;
        }
        let mut nm = name.clone();
        let mut k = 1;
        while !names.insert(nm.clone()) {
            nm = format!("{name}#{k}");
            k += 1;
        }
        squares.push(Square {
            name: nm,
            top: bd[0],
            bottom: bd[1],
            left: bd[2],
            right: bd[3],
        });
        by_bd.insert(bd, squares.len() - 1);
        squares.len() - 1
    };
    for o in 0..h.objects.len() {
        add(
            &mut squares,
            format!("1_{}", h.objects[o]),
            [h.ids[o], h.ids[o], v.ids[o], v.ids[o]],
        );
    }
    for (f, m) in h.mors.iter().enumerate() {
        add(&mut squares, format!("e_{}", m.name), [f, f, v.ids[m.src], v.ids[m.tgt]]);
    }
    for (u, m) in v.mors.iter().enumerate() {
        add(&mut squares, format!("1_{}", m.name), [h.ids[m.src], h.ids[m.tgt], u, u]);
    }
    for (name, t, b, l, r) in gens {
        let bd = [hm(t)?, hm(b)?, vm(l)?, vm(r)?];
        let (ft, fb, fl, fr) = (&h.mors[bd[0]], &h.mors[bd[1]], &v.mors[bd[2]], &v.mors[bd[3]]);
        if ft.src != fl.src || ft.tgt != fr.src || fb.src != fl.tgt || fb.tgt != fr.tgt {
            return Err(DblCatError::law("square boundary typing", vec![name.to_string()]));
        }
        add(&mut squares, name.to_string(), bd);
    }
    loop {
        let before = squares.len();
        let n = squares.len();
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (squares[i].clone(), squares[j].clone());
                if x.right == y.left {
                    let bd = [
                        h.comp.get(x.top, y.top).unwrap(),
                        h.comp.get(x.bottom, y.bottom).unwrap(),
                        x.left,
                        y.right,
                    ];
                    add(&mut squares, format!("{}+{}", x.name, y.name), bd);
                }
                if x.bottom == y.top {
                    let bd = [
                        x.top,
                        y.bottom,
                        v.comp.get(x.left, y.left).unwrap(),
                        v.comp.get(x.right, y.right).unwrap(),
                    ];
                    add(&mut squares, format!("{}^{}", x.name, y.name), bd);
                }
            }
        }
        if squares.len() == before {
            break;
        }
    }
    let ns = squares.len();
    let mut hcomp_sq = Table::new(ns);
    let mut vcomp_sq = Table::new(ns);
    for i in 0..ns {
        for j in 0..ns {
            let (x, y) = (&squares[i], &squares[j]);
            if x.right == y.left {
                let bd = [
                    h.comp.get(x.top, y.top).unwrap(),
                    h.comp.get(x.bottom, y.bottom).unwrap(),
                    x.left,
                    y.right,
                ];
                hcomp_sq.set(i, j, by_bd[&bd]);
            }
            if x.bottom == y.top {
                let bd = [
                    x.top,
                    y.bottom,
                    v.comp.get(x.left, y.left).unwrap(),
                    v.comp.get(x.right, y.right).unwrap(),
                ];
                vcomp_sq.set(i, j, by_bd[&bd]);
            }
        }
    }
    let sq_hid = v
        .mors
        .iter()
        .enumerate()
        .map(|(u, m)| by_bd[&[h.ids[m.src], h.ids[m.tgt], u, u]])
        .collect();
    let sq_vid = h
        .mors
        .iter()
        .enumerate()
        .map(|(f, m)| by_bd[&[f, f, v.ids[m.src], v.ids[m.tgt]]])
        .collect();
    let a = FiniteDoubleCategory::from_parts(DoubleParts {
        objects: h.objects.clone(),
        hmors: h.mors.clone(),
        vmors: v.mors.clone(),
        squares,
        hid: h.ids.clone(),
        vid: v.ids.clone(),
        sq_hid,
        sq_vid,
        hcomp_h: h.comp.clone(),
        vcomp_v: v.comp.clone(),
        hcomp_sq,
        vcomp_sq,
    })?;
    validate_double_category(&a)?;
    Ok(a)
}

/// Disjoint union of double categories; a cell `x` of the `i`-th summand
/// is renamed `<i,x>`.
pub fn coproduct(parts: &[&FiniteDoubleCategory]) -> FiniteDoubleCategory {
    let mut raw = RawDoubleCategory::default();
    for (i, a) in parts.iter().enumerate() {
        let r = a.to_raw();
        let t = |x: &str| format!("<{i},{x}>");
        raw.objects.extend(r.objects.iter().map(|o| t(o)));
        let t3 = |v: &[(String, String, String)]| -> Vec<(String, String, String)> {
            v.iter().map(|(a, b, c)| (t(a), t(b), t(c))).collect()
        };
        let t2 = |v: &[(String, String)]| -> Vec<(String, String)> {
            v.iter().map(|(a, b)| (t(a), t(b))).collect()
        };
        raw.hmors.extend(t3(&r.hmors));
        raw.vmors.extend(t3(&r.vmors));
        raw.squares.extend(
            r.squares
                .iter()
                .map(|(a, b, c, d, e)| (t(a), t(b), t(c), t(d), t(e))),
        );
        raw.hcomp.extend(t3(&r.hcomp));
        raw.vcomp.extend(t3(&r.vcomp));
        raw.sq_hcomp.extend(t3(&r.sq_hcomp));
        raw.sq_vcomp.extend(t3(&r.sq_vcomp));
        raw.idh.extend(t2(&r.idh));
        raw.idv.extend(t2(&r.idv));
        raw.idsq_h.extend(t2(&r.idsq_h));
        raw.idsq_v.extend(t2(&r.idsq_v));
    }
    FiniteDoubleCategory::from_raw(&raw).expect("coproduct is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> FiniteCategory {
        FiniteCategory::free(&["0", "1"], &[("f", "0", "1")]).unwrap()
    }

    #[test]
    fn square_of_two_has_expected_size() {
        let sq = sq_of_2cat(&Finite2Category::locally_discrete(two()));
        validate_double_category(&sq).unwrap();
        assert_eq!(sq.size().0, 2);
        assert_eq!(sq.size().1, 3);
        assert_eq!(sq.size().2, 3);
    }

    #[test]
    fn free_square_has_one_nonidentity_square() {
        let h2 = horizontal_embedding(&Finite2Category::locally_discrete(two()));
        let v2 = vertical_embedding(&Finite2Category::locally_discrete(two()));
        let s = product(&h2, &v2);
        validate_double_category(&s).unwrap();
        let nonid = (0..s.squares().len())
            .filter(|&q| {
                let b = &s.squares()[q];
                !(s.is_hid(b.top) && s.is_hid(b.bottom)) && !(s.is_vid(b.left) && s.is_vid(b.right))
            })
            .count();
        assert_eq!(nonid, 1);
    }

    #[test]
    fn hop_is_an_involution() {
        let sq = sq_of_2cat(&Finite2Category::locally_discrete(two()));
        assert_eq!(hop(&hop(&sq)), sq);
        validate_double_category(&hop(&sq)).unwrap();
    }

    #[test]
    fn builder_adds_identities() {
        let a = DoubleBuilder::new()
            .objects(&["a", "b"])
            .hmor("f", "a", "b")
            .build()
            .unwrap();
        assert_eq!(a.size(), (2, 3, 2, 3));
    }
}
