use std::collections::{BTreeSet, HashMap};

use crate::error::DblCatError;

use super::table::Table;

/// A named morphism-like cell with a source and a target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

impl Cell {
    pub fn new(name: impl Into<String>, src: usize, tgt: usize) -> Self {
        Cell {
            name: name.into(),
            src,
            tgt,
        }
    }
}

/// A finite category with an explicit composition table.
/// `comp.get(f, g)` is the composite "first `f`, then `g`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub mors: Vec<Cell>,
    pub ids: Vec<usize>,
    pub comp: Table,
}

impl FiniteCategory {
    pub fn validate(&self) -> Result<(), DblCatError> {
        check_category("category", &self.objects, &self.mors, &self.ids, &self.comp)
    }

    pub fn discrete(names: &[&str]) -> Self {
        let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mors: Vec<Cell> = (0..objects.len())
            .map(|i| Cell::new(format!("1_{}", objects[i]), i, i))
            .collect();
        let ids = (0..objects.len()).collect();
        let mut comp = Table::new(mors.len());
        for i in 0..mors.len() {
            comp.set(i, i, i);
        }
        FiniteCategory {
            objects,
            mors,
            ids,
            comp,
        }
    }

    /// Exactly one morphism between any two objects.
    pub fn chaotic(names: &[&str]) -> Self {
        let n = names.len();
        let objects: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let idx = |a: usize, b: usize| a * n + b;
        let mors: Vec<Cell> = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                let name = if a == b {
                    format!("1_{}", objects[a])
                } else {
                    format!("{}~{}", objects[a], objects[b])
                };
                Cell::new(name, a, b)
            })
            .collect();
        let ids = (0..n).map(|a| idx(a, a)).collect();
        let mut comp = Table::new(n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    comp.set(idx(a, b), idx(b, c), idx(a, c));
                }
            }
        }
        FiniteCategory {
            objects,
            mors,
            ids,
            comp,
        }
    }

    /// The free category on a finite acyclic graph; composite paths are
    /// named by joining edge names with `*`.
    pub fn free(objects: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, DblCatError> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let obj = |s: &str| {
            objects
                .iter()
                .position(|o| o == s)
                .ok_or_else(|| DblCatError::UnknownCell {
                    sort: "object".into(),
                    name: s.to_string(),
                })
        };
        let mut es = Vec::new();
        for (name, a, b) in edges {
            es.push((name.to_string(), obj(a)?, obj(b)?));
        }
        // paths as edge index lists
        let mut paths: Vec<(Vec<usize>, usize, usize)> =
            (0..objects.len()).map(|a| (Vec::new(), a, a)).collect();
        let mut frontier: Vec<usize> = (0..objects.len()).collect();
        let limit = 64 * (es.len() + 1);
        while let Some(p) = frontier.pop() {
            let (path, a, b) = paths[p].clone();
            for (ei, e) in es.iter().enumerate() {
                if e.1 == b {
                    let mut np = path.clone();
                    np.push(ei);
                    paths.push((np, a, e.2));
                    frontier.push(paths.len() - 1);
                    if paths.len() > limit {
                        return Err(DblCatError::Malformed("graph is not acyclic".into()));
                    }
                }
            }
        }
        let mors: Vec<Cell> = paths
            .iter()
            .map(|(p, a, b)| {
                let name = if p.is_empty() {
                    format!("1_{}", objects[*a])
                } else {
                    p.iter().map(|&e| es[e].0.as_str()).collect::<Vec<_>>().join("*")
                };
                Cell::new(name, *a, *b)
            })
            .collect();
        let index: HashMap<Vec<usize>, usize> = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.0.is_empty())
            .map(|(i, p)| (p.0.clone(), i))
            .collect();
        let mut comp = Table::new(mors.len());
        for (i, (p, a, b)) in paths.iter().enumerate() {
            for (j, (q, c, d)) in paths.iter().enumerate() {
                if b != c {
                    continue;
                }
                let r = if p.is_empty() {
                    j
                } else if q.is_empty() {
                    i
                } else {
                    let mut pq = p.clone();
                    pq.extend(q);
                    index[&pq]
                };
                let _ = (a, d);
                comp.set(i, j, r);
            }
        }
        Ok(FiniteCategory {
            objects: objects.clone(),
            mors,
            ids: (0..objects.len()).collect(),
            comp,
        })
    }

    pub fn hom(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.mors.len()).filter(move |&f| self.mors[f].src == a && self.mors[f].tgt == b)
    }

    pub fn mor(&self, name: &str) -> Option<usize> {
        self.mors.iter().position(|m| m.name == name)
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn is_iso(&self, f: usize) -> bool {
        let m = &self.mors[f];
        self.hom(m.tgt, m.src).any(|g| {
            self.comp.get(f, g) == Some(self.ids[m.src]) && self.comp.get(g, f) == Some(self.ids[m.tgt])
        })
    }
}

/// A functor between finite categories, as object and morphism maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

impl CategoryFunctor {
    pub fn identity(c: &FiniteCategory) -> Self {
        CategoryFunctor {
            obj: (0..c.objects.len()).collect(),
            mor: (0..c.mors.len()).collect(),
        }
    }

    /// The unique functor into a category with one object and one morphism.
    pub fn to_point(c: &FiniteCategory) -> Self {
        CategoryFunctor {
            obj: vec![0; c.objects.len()],
            mor: vec![0; c.mors.len()],
        }
    }

    pub fn validate(&self, c: &FiniteCategory, d: &FiniteCategory) -> Result<(), DblCatError> {
        let bad = |what: String| Err(DblCatError::Malformed(format!("functor {what}")));
        if self.obj.len() != c.objects.len() || self.mor.len() != c.mors.len() {
            return bad("is not total".into());
        }
        if self.obj.iter().any(|&o| o >= d.objects.len()) || self.mor.iter().any(|&m| m >= d.mors.len()) {
            return bad("maps outside its codomain".into());
        }
        for (f, m) in c.mors.iter().enumerate() {
            let g = &d.mors[self.mor[f]];
            if g.src != self.obj[m.src] || g.tgt != self.obj[m.tgt] {
                return bad(format!("does not preserve the endpoints of `{}`", m.name));
            }
        }
        for (o, &i) in c.ids.iter().enumerate() {
            if self.mor[i] != d.ids[self.obj[o]] {
                return bad(format!("does not preserve the identity of `{}`", c.objects[o]));
            }
        }
        for (f, g, h) in c.comp.entries() {
            if d.comp.get(self.mor[f], self.mor[g]) != Some(self.mor[h]) {
                return bad(format!("does not preserve `{}`;`{}`", c.mors[f].name, c.mors[g].name));
            }
        }
        Ok(())
    }
}

/// The iso-comma category of `f: C -> D` over the identity of `D`, with its
/// projections to `C` and `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoComma {
    pub category: FiniteCategory,
    pub to_domain: CategoryFunctor,
    pub to_codomain: CategoryFunctor,
}

/// Objects are triples `(c, e, phi: f(c) -> e)` with `phi` invertible,
/// written `<c,phi>`; a morphism `(c, e, phi) -> (c', e', phi')` is a pair
/// `(m, n)` with `phi;n = f(m);phi'`, written `<m,n>`.
pub fn iso_comma(c: &FiniteCategory, d: &FiniteCategory, f: &CategoryFunctor) -> IsoComma {
    let mut triples = Vec::new();
    let mut objects = Vec::new();
    for (x, xname) in c.objects.iter().enumerate() {
        for phi in 0..d.mors.len() {
            if d.mors[phi].src == f.obj[x] && d.is_iso(phi) {
                triples.push((x, d.mors[phi].tgt, phi));
                objects.push(format!("<{xname},{}>", d.mors[phi].name));
            }
        }
    }
    let mut mors: Vec<Cell> = Vec::new();
    let mut pairs = Vec::new();
    let mut index = HashMap::new();
    let mut names = BTreeSet::new();
    for (i, &(x, e, phi)) in triples.iter().enumerate() {
        for (j, &(x2, e2, phi2)) in triples.iter().enumerate() {
            for m in c.hom(x, x2) {
                for n in d.hom(e, e2) {
                    if d.comp.get(phi, n) == d.comp.get(f.mor[m], phi2) {
                        let mut name = format!("<{},{}>", c.mors[m].name, d.mors[n].name);
                        while !names.insert(name.clone()) {
                            name.push('\'');
                        }
                        index.insert((i, j, m, n), mors.len());
                        mors.push(Cell::new(name, i, j));
                        pairs.push((m, n));
                    }
                }
            }
        }
    }
    let ids = triples
        .iter()
        .enumerate()
        .map(|(i, &(x, e, _))| index[&(i, i, c.ids[x], d.ids[e])])
        .collect();
    let mut comp = Table::new(mors.len());
    for (a, ma) in mors.iter().enumerate() {
        for (b, mb) in mors.iter().enumerate() {
            if ma.tgt != mb.src {
                continue;
            }
            let m = c.comp.get(pairs[a].0, pairs[b].0).expect("composable");
            let n = d.comp.get(pairs[a].1, pairs[b].1).expect("composable");
            comp.set(a, b, index[&(ma.src, mb.tgt, m, n)]);
        }
    }
    let category = FiniteCategory {
        objects,
        mors,
        ids,
        comp,
    };
    IsoComma {
        to_domain: CategoryFunctor {
            obj: triples.iter().map(|t| t.0).collect(),
            mor: pairs.iter().map(|p| p.0).collect(),
        },
        to_codomain: CategoryFunctor {
            obj: triples.iter().map(|t| t.1).collect(),
            mor: pairs.iter().map(|p| p.1).collect(),
        },
        category,
    }
}

/// Checks typing, totality, units and associativity of a category given by
/// cells and a composition table.
pub(crate) fn check_category(
    what: &str,
    objects: &[String],
    mors: &[Cell],
    ids: &[usize],
    comp: &Table,
) -> Result<(), DblCatError> {
    let name = |f: usize| mors[f].name.clone();
    if ids.len() != objects.len() {
        return Err(DblCatError::Malformed(format!("{what}: identity missing")));
    }
    for (a, &i) in ids.iter().enumerate() {
        if mors[i].src != a || mors[i].tgt != a {
            return Err(DblCatError::law(
                &format!("{what} identity typing"),
                vec![objects[a].clone(), name(i)],
            ));
        }
    }
    for (f, g, h) in comp.entries() {
        if mors[f].tgt != mors[g].src || mors[h].src != mors[f].src || mors[h].tgt != mors[g].tgt {
            return Err(DblCatError::law(
                &format!("{what} composition typing"),
                vec![name(f), name(g), name(h)],
            ));
        }
    }
    for f in 0..mors.len() {
        for g in 0..mors.len() {
            if mors[f].tgt == mors[g].src && comp.get(f, g).is_none() {
                return Err(DblCatError::NonComposablePair {
                    kind: what.to_string(),
                    first: name(f),
                    second: name(g),
                });
            }
        }
    }
    for f in 0..mors.len() {
        if comp.get(ids[mors[f].src], f) != Some(f) || comp.get(f, ids[mors[f].tgt]) != Some(f) {
            return Err(DblCatError::law(&format!("{what} unit"), vec![name(f)]));
        }
    }
    let mut from: Vec<Vec<usize>> = vec![Vec::new(); objects.len()];
    for (f, m) in mors.iter().enumerate() {
        from[m.src].push(f);
    }
    for f in 0..mors.len() {
        for &g in &from[mors[f].tgt] {
            let fg = comp.get(f, g).unwrap();
            for &h in &from[mors[g].tgt] {
                let gh = comp.get(g, h).unwrap();
                if comp.get(fg, h) != comp.get(f, gh) {
                    return Err(DblCatError::law(
                        &format!("{what} associativity"),
                        vec![name(f), name(g), name(h)],
                    ));
                }
            }
        }
    }
    Ok(())
}

/// A finite strict 2-category.
///
/// `hcomp2.get(a, b)` for `a: f => f'` and `b: g => g'` with `f` followed
/// by `g` is the 2-cell `f;g => f';g'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finite2Category {
    pub base: FiniteCategory,
    pub cells: Vec<Cell>,
    pub id2: Vec<usize>,
    pub vcomp2: Table,
    pub hcomp2: Table,
}

impl Finite2Category {
    pub fn locally_discrete(base: FiniteCategory) -> Self {
        let cells: Vec<Cell> = base
            .mors
            .iter()
            .enumerate()
            .map(|(f, m)| Cell::new(format!("1_{}", m.name), f, f))
            .collect();
        let n = cells.len();
        let mut vcomp2 = Table::new(n);
        for f in 0..n {
            vcomp2.set(f, f, f);
        }
        let hcomp2 = base.comp.clone();
        Finite2Category {
            id2: (0..n).collect(),
            base,
            cells,
            vcomp2,
            hcomp2,
        }
    }

    /// The locally posetal 2-category generated by inequalities `f <= g`
    /// between parallel morphisms, closed under whiskering and
    /// transitivity.
    pub fn locally_posetal(base: FiniteCategory, gens: &[(&str, &str)]) -> Result<Self, DblCatError> {
        let n = base.mors.len();
        let mut le: BTreeSet<(usize, usize)> = (0..n).map(|f| (f, f)).collect();
        for (a, b) in gens {
            let f = base.mor(a).ok_or_else(|| DblCatError::UnknownCell {
                sort: "morphism".into(),
                name: a.to_string(),
            })?;
            let g = base.mor(b).ok_or_else(|| DblCatError::UnknownCell {
                sort: "morphism".into(),
                name: b.to_string(),
            })?;
            if base.mors[f].src != base.mors[g].src || base.mors[f].tgt != base.mors[g].tgt {
                return Err(DblCatError::Malformed(format!("`{a}` and `{b}` are not parallel")));
            }
            le.insert((f, g));
        }
        loop {
            let mut next = le.clone();
            for &(f, g) in &le {
                for h in 0..n {
                    if base.mors[h].tgt == base.mors[f].src {
                        next.insert((base.comp.get(h, f).unwrap(), base.comp.get(h, g).unwrap()));
                    }
                    if base.mors[h].src == base.mors[f].tgt {
                        next.insert((base.comp.get(f, h).unwrap(), base.comp.get(g, h).unwrap()));
                    }
                }
                for &(g2, k) in &le {
                    if g2 == g {
                        next.insert((f, k));
                    }
                }
            }
            if next == le {
                break;
            }
            le = next;
        }
        let pairs: Vec<(usize, usize)> = le.into_iter().collect();
        let index: HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let cells: Vec<Cell> = pairs
            .iter()
            .map(|&(f, g)| {
                let name = if f == g {
                    format!("1_{}", base.mors[f].name)
                } else {
                    format!("{}@{}", base.mors[f].name, base.mors[g].name)
                };
                Cell::new(name, f, g)
            })
            .collect();
        let m = cells.len();
        let id2 = (0..n).map(|f| index[&(f, f)]).collect();
        let mut vcomp2 = Table::new(m);
        let mut hcomp2 = Table::new(m);
        for (i, &(f, g)) in pairs.iter().enumerate() {
            for (j, &(f2, g2)) in pairs.iter().enumerate() {
                if g == f2 {
                    vcomp2.set(i, j, index[&(f, g2)]);
                }
                if base.mors[f].tgt == base.mors[f2].src {
                    let a = base.comp.get(f, f2).unwrap();
                    let b = base.comp.get(g, g2).unwrap();
                    hcomp2.set(i, j, index[&(a, b)]);
                }
            }
        }
        Ok(Finite2Category {
            base,
            cells,
            id2,
            vcomp2,
            hcomp2,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.base.objects
    }

    pub fn validate(&self) -> Result<(), DblCatError> {
        self.base.validate()?;
        let b = &self.base;
        let name = |a: usize| self.cells[a].name.clone();
        for (f, &i) in self.id2.iter().enumerate() {
            if self.cells[i].src != f || self.cells[i].tgt != f {
                return Err(DblCatError::law("2-cell identity typing", vec![name(i)]));
            }
        }
        // vertical composition: a category whose objects are the 1-cells
        let one_cells: Vec<String> = b.mors.iter().map(|m| m.name.clone()).collect();
        check_category("vertical 2-cell", &one_cells, &self.cells, &self.id2, &self.vcomp2)?;
        for (x, y, z) in self.hcomp2.entries() {
            let (cx, cy, cz) = (&self.cells[x], &self.cells[y], &self.cells[z]);
            if b.mors[cx.src].tgt != b.mors[cy.src].src
                || b.comp.get(cx.src, cy.src) != Some(cz.src)
                || b.comp.get(cx.tgt, cy.tgt) != Some(cz.tgt)
            {
                return Err(DblCatError::law(
                    "horizontal 2-cell composition typing",
                    vec![name(x), name(y), name(z)],
                ));
            }
        }
        let n = self.cells.len();
        for x in 0..n {
            for y in 0..n {
                let (cx, cy) = (&self.cells[x], &self.cells[y]);
                if b.mors[cx.src].tgt == b.mors[cy.src].src && self.hcomp2.get(x, y).is_none() {
                    return Err(DblCatError::NonComposablePair {
                        kind: "horizontal 2-cell".into(),
                        first: name(x),
                        second: name(y),
                    });
                }
            }
        }
        for x in 0..n {
            let c = &self.cells[x];
            let ia = self.id2[b.ids[b.mors[c.src].src]];
            let ib = self.id2[b.ids[b.mors[c.src].tgt]];
            if self.hcomp2.get(ia, x) != Some(x) || self.hcomp2.get(x, ib) != Some(x) {
                return Err(DblCatError::law("horizontal 2-cell unit", vec![name(x)]));
            }
        }
        for f in 0..b.mors.len() {
            for g in 0..b.mors.len() {
                if let Some(fg) = b.comp.get(f, g) {
                    if self.hcomp2.get(self.id2[f], self.id2[g]) != Some(self.id2[fg]) {
                        return Err(DblCatError::law(
                            "identity 2-cell functoriality",
                            vec![b.mors[f].name.clone(), b.mors[g].name.clone()],
                        ));
                    }
                }
            }
        }
        for (x, y, xy) in self.hcomp2.entries() {
            for z in 0..n {
                if let Some(yz) = self.hcomp2.get(y, z) {
                    if self.hcomp2.get(xy, z) != self.hcomp2.get(x, yz) {
                        return Err(DblCatError::law(
                            "horizontal 2-cell associativity",
                            vec![name(x), name(y), name(z)],
                        ));
                    }
                }
            }
        }
        for (x, x2, xx) in self.vcomp2.entries() {
            for (y, y2, yy) in self.vcomp2.entries() {
                let Some(h1) = self.hcomp2.get(x, y) else { continue };
                let h2 = self.hcomp2.get(x2, y2).unwrap();
                if self.vcomp2.get(h1, h2) != self.hcomp2.get(xx, yy) {
                    return Err(DblCatError::law(
                        "2-cell interchange",
                        vec![name(x), name(x2), name(y), name(y2)],
                    ));
                }
            }
        }
        Ok(())
    }

    /// Inverse of a 2-cell for vertical composition.
    pub fn inverse2(&self, a: usize) -> Option<usize> {
        let c = &self.cells[a];
        (0..self.cells.len()).find(|&b| {
            self.cells[b].src == c.tgt
                && self.cells[b].tgt == c.src
                && self.vcomp2.get(a, b) == Some(self.id2[c.src])
                && self.vcomp2.get(b, a) == Some(self.id2[c.tgt])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chaotic_and_discrete_validate() {
        FiniteCategory::chaotic(&["a", "b", "c"]).validate().unwrap();
        FiniteCategory::discrete(&["a", "b"]).validate().unwrap();
    }

    #[test]
    fn free_on_a_path() {
        let c = FiniteCategory::free(&["0", "1", "2"], &[("f", "0", "1"), ("g", "1", "2")]).unwrap();
        c.validate().unwrap();
        assert_eq!(c.mors.len(), 6);
        assert!(c.mor("f*g").is_some());
    }

    #[test]
    fn free_rejects_cycles() {
        assert!(FiniteCategory::free(&["0"], &[("f", "0", "0")]).is_err());
    }

    #[test]
    fn posetal_reflection_validates() {
        let base = crate::dblcat::corpus::reflection_category();
        let two = Finite2Category::locally_posetal(base, &[("1_a", "l*r")]).unwrap();
        two.validate().unwrap();
    }

}
