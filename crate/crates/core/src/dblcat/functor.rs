use std::sync::Arc;

use crate::error::DblCatError;

use super::double::FiniteDoubleCategory;

/// A strict double functor, given by its four component maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFunctor {
    pub dom: Arc<FiniteDoubleCategory>,
    pub cod: Arc<FiniteDoubleCategory>,
    pub obj: Vec<usize>,
    pub h: Vec<usize>,
    pub v: Vec<usize>,
    pub sq: Vec<usize>,
}

impl DoubleFunctor {
    pub fn identity(a: Arc<FiniteDoubleCategory>) -> Self {
        let (no, nh, nv, ns) = a.size();
        DoubleFunctor {
            dom: a.clone(),
            cod: a,
            obj: (0..no).collect(),
            h: (0..nh).collect(),
            v: (0..nv).collect(),
            sq: (0..ns).collect(),
        }
    }

    /// The unique functor into a double category with one object.
    pub fn to_terminal(a: Arc<FiniteDoubleCategory>, one: Arc<FiniteDoubleCategory>) -> Self {
        let (no, nh, nv, ns) = a.size();
        DoubleFunctor {
            dom: a,
            obj: vec![0; no],
            h: vec![one.hid(0); nh],
            v: vec![one.vid(0); nv],
            sq: vec![one.sq_hid(one.vid(0)); ns],
            cod: one,
        }
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &DoubleFunctor) -> DoubleFunctor {
        DoubleFunctor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            obj: self.obj.iter().map(|&x| g.obj[x]).collect(),
            h: self.h.iter().map(|&x| g.h[x]).collect(),
            v: self.v.iter().map(|&x| g.v[x]).collect(),
            sq: self.sq.iter().map(|&x| g.sq[x]).collect(),
        }
    }

    /// Builds a functor from name maps; entries for identity cells may be
    /// omitted.
    pub fn from_named(
        dom: Arc<FiniteDoubleCategory>,
        cod: Arc<FiniteDoubleCategory>,
        obj: &[(String, String)],
        h: &[(String, String)],
        v: &[(String, String)],
        sq: &[(String, String)],
    ) -> Result<Self, DblCatError> {
        let unknown = |sort: &str, n: &str| DblCatError::UnknownCell {
            sort: sort.into(),
            name: n.into(),
        };
        let mut fo = vec![None; dom.objects().len()];
        for (a, b) in obj {
            let i = dom.object(a).ok_or_else(|| unknown("object", a))?;
            fo[i] = Some(cod.object(b).ok_or_else(|| unknown("object", b))?);
        }
        let fo = fo
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| DblCatError::Malformed(format!("object `{}` is not mapped", dom.objects()[i]))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut fh = vec![None; dom.hmors().len()];
        for (a, b) in h {
            let i = dom.hmor(a).ok_or_else(|| unknown("horizontal morphism", a))?;
            fh[i] = Some(cod.hmor(b).ok_or_else(|| unknown("horizontal morphism", b))?);
        }
        for o in 0..fo.len() {
            fh[dom.hid(o)].get_or_insert(cod.hid(fo[o]));
        }
        let mut fv = vec![None; dom.vmors().len()];
        for (a, b) in v {
            let i = dom.vmor(a).ok_or_else(|| unknown("vertical morphism", a))?;
            fv[i] = Some(cod.vmor(b).ok_or_else(|| unknown("vertical morphism", b))?);
        }
        for o in 0..fo.len() {
            fv[dom.vid(o)].get_or_insert(cod.vid(fo[o]));
        }
        let fh = fh
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| DblCatError::Malformed(format!("horizontal morphism `{}` is not mapped", dom.hmors()[i].name))))
            .collect::<Result<Vec<_>, _>>()?;
        let fv = fv
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| DblCatError::Malformed(format!("vertical morphism `{}` is not mapped", dom.vmors()[i].name))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut fs = vec![None; dom.squares().len()];
        for (a, b) in sq {
            let i = dom.square(a).ok_or_else(|| unknown("square", a))?;
            fs[i] = Some(cod.square(b).ok_or_else(|| unknown("square", b))?);
        }
        for u in 0..fv.len() {
            fs[dom.sq_hid(u)].get_or_insert(cod.sq_hid(fv[u]));
        }
        for f in 0..fh.len() {
            fs[dom.sq_vid(f)].get_or_insert(cod.sq_vid(fh[f]));
        }
        let fs = fs
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| DblCatError::Malformed(format!("square `{}` is not mapped", dom.squares()[i].name))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DoubleFunctor {
            dom,
            cod,
            obj: fo,
            h: fh,
            v: fv,
            sq: fs,
        })
    }

    pub fn named_maps(&self) -> [Vec<(String, String)>; 4] {
        let (a, b) = (&self.dom, &self.cod);
        [
            self.obj.iter().enumerate().map(|(i, &j)| (a.objects()[i].clone(), b.objects()[j].clone())).collect(),
            self.h.iter().enumerate().map(|(i, &j)| (a.hmors()[i].name.clone(), b.hmors()[j].name.clone())).collect(),
            self.v.iter().enumerate().map(|(i, &j)| (a.vmors()[i].name.clone(), b.vmors()[j].name.clone())).collect(),
            self.sq.iter().enumerate().map(|(i, &j)| (a.squares()[i].name.clone(), b.squares()[j].name.clone())).collect(),
        ]
    }
}

/// Checks that the component maps preserve boundaries, identities and both
/// compositions.
pub fn validate_double_functor(f: &DoubleFunctor) -> Result<(), DblCatError> {
    let (a, b) = (&*f.dom, &*f.cod);
    let (no, nh, nv, ns) = a.size();
    if f.obj.len() != no || f.h.len() != nh || f.v.len() != nv || f.sq.len() != ns {
        return Err(DblCatError::Malformed("component map has the wrong length".into()));
    }
    let (bo, bh, bv, bs) = b.size();
    if f.obj.iter().any(|&x| x >= bo)
        || f.h.iter().any(|&x| x >= bh)
        || f.v.iter().any(|&x| x >= bv)
        || f.sq.iter().any(|&x| x >= bs)
    {
        return Err(DblCatError::Malformed("component map leaves the codomain".into()));
    }
    for (i, m) in a.hmors().iter().enumerate() {
        let n = &b.hmors()[f.h[i]];
        if n.src != f.obj[m.src] || n.tgt != f.obj[m.tgt] {
            return Err(DblCatError::law("horizontal endpoint preservation", vec![m.name.clone()]));
        }
    }
    for (i, m) in a.vmors().iter().enumerate() {
        let n = &b.vmors()[f.v[i]];
        if n.src != f.obj[m.src] || n.tgt != f.obj[m.tgt] {
            return Err(DblCatError::law("vertical endpoint preservation", vec![m.name.clone()]));
        }
    }
    for (i, s) in a.squares().iter().enumerate() {
        let want = [f.h[s.top], f.h[s.bottom], f.v[s.left], f.v[s.right]];
        if b.squares()[f.sq[i]].boundary() != want {
            return Err(DblCatError::law("square boundary preservation", vec![s.name.clone()]));
        }
    }
    for o in 0..no {
        if f.h[a.hid(o)] != b.hid(f.obj[o]) || f.v[a.vid(o)] != b.vid(f.obj[o]) {
            return Err(DblCatError::law("identity preservation", vec![a.objects()[o].clone()]));
        }
    }
    for u in 0..nv {
        if f.sq[a.sq_hid(u)] != b.sq_hid(f.v[u]) {
            return Err(DblCatError::law("identity square preservation", vec![a.vmors()[u].name.clone()]));
        }
    }
    for g in 0..nh {
        if f.sq[a.sq_vid(g)] != b.sq_vid(f.h[g]) {
            return Err(DblCatError::law("identity square preservation", vec![a.hmors()[g].name.clone()]));
        }
    }
    let [ah, av, ahs, avs] = a.tables();
    let [bh_, bv_, bhs, bvs] = b.tables();
    let checks: [(&str, &super::Table, &super::Table, &Vec<usize>); 4] = [
        ("horizontal composition preservation", ah, bh_, &f.h),
        ("vertical composition preservation", av, bv_, &f.v),
        ("horizontal square composition preservation", ahs, bhs, &f.sq),
        ("vertical square composition preservation", avs, bvs, &f.sq),
    ];
    for (what, ta, tb, m) in checks {
        for (x, y, z) in ta.entries() {
            if tb.get(m[x], m[y]) != Some(m[z]) {
                return Err(DblCatError::law(what, vec![x.to_string(), y.to_string()]));
            }
        }
    }
    Ok(())
}

/// All double functors `a -> b`, by brute-force backtracking over the
/// component maps. Intended for small inputs and as an oracle.
pub fn enumerate_functors(a: &Arc<FiniteDoubleCategory>, b: &Arc<FiniteDoubleCategory>) -> Vec<DoubleFunctor> {
    let (no, nh, nv, ns) = a.size();
    let mut out = Vec::new();
    let mut obj = vec![0; no];
    enum_objects(a, b, 0, &mut obj, &mut |obj| {
        let hs = enum_table_maps(
            nh,
            |i| {
                let m = &a.hmors()[i];
                b.hhom(obj[m.src], obj[m.tgt]).to_vec()
            },
            a.tables()[0],
            b.tables()[0],
        );
        let vs = enum_table_maps(
            nv,
            |i| {
                let m = &a.vmors()[i];
                b.vhom(obj[m.src], obj[m.tgt]).to_vec()
            },
            a.tables()[1],
            b.tables()[1],
        );
        for h in &hs {
            if (0..no).any(|o| h[a.hid(o)] != b.hid(obj[o])) {
                continue;
            }
            for v in &vs {
                if (0..no).any(|o| v[a.vid(o)] != b.vid(obj[o])) {
                    continue;
                }
                let sqs = enum_square_maps(a, b, ns, h, v);
                for sq in sqs {
                    let f = DoubleFunctor {
                        dom: a.clone(),
                        cod: b.clone(),
                        obj: obj.to_vec(),
                        h: h.clone(),
                        v: v.clone(),
                        sq,
                    };
                    if validate_double_functor(&f).is_ok() {
                        out.push(f);
                    }
                }
            }
        }
    });
    out
}

fn enum_objects(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    i: usize,
    obj: &mut Vec<usize>,
    k: &mut dyn FnMut(&[usize]),
) {
    if i == obj.len() {
        k(obj);
        return;
    }
    for x in 0..b.objects().len() {
        obj[i] = x;
        enum_objects(a, b, i + 1, obj, k);
    }
    let _ = a;
}

/// Maps `0..n -> candidates(i)` preserving a composition table, checked as
/// soon as all three entries of a table row are assigned.
fn enum_table_maps(
    n: usize,
    candidates: impl Fn(usize) -> Vec<usize>,
    ta: &super::Table,
    tb: &super::Table,
) -> Vec<Vec<usize>> {
    let cands: Vec<Vec<usize>> = (0..n).map(&candidates).collect();
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (x, y, z) in ta.entries() {
        checks[x.max(y).max(z)].push((x, y, z));
    }
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn go(
        i: usize,
        cands: &[Vec<usize>],
        checks: &[Vec<(usize, usize, usize)>],
        tb: &super::Table,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == cands.len() {
            out.push(cur.clone());
            return;
        }
        for &c in &cands[i] {
            cur[i] = c;
            if checks[i].iter().all(|&(x, y, z)| tb.get(cur[x], cur[y]) == Some(cur[z])) {
                go(i + 1, cands, checks, tb, cur, out);
            }
        }
    }
    go(0, &cands, &checks, tb, &mut cur, &mut out);
    out
}

fn enum_square_maps(
    a: &FiniteDoubleCategory,
    b: &FiniteDoubleCategory,
    ns: usize,
    h: &[usize],
    v: &[usize],
) -> Vec<Vec<usize>> {
    let cands = |i: usize| {
        let s = &a.squares()[i];
        b.squares_with([h[s.top], h[s.bottom], v[s.left], v[s.right]]).to_vec()
    };
    let hs = enum_table_maps(ns, cands, a.tables()[2], b.tables()[2]);
    hs.into_iter()
        .filter(|m| {
            a.tables()[3]
                .entries()
                .all(|(x, y, z)| b.tables()[3].get(m[x], m[y]) == Some(m[z]))
        })
        .collect()
}

/// Whether `f` is an isomorphism of double categories.
pub fn is_isomorphism(f: &DoubleFunctor) -> bool {
    fn bij(m: &[usize], n: usize) -> bool {
        let mut seen = vec![false; n];
        m.len() == n && m.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }
    let (bo, bh, bv, bs) = f.cod.size();
    bij(&f.obj, bo) && bij(&f.h, bh) && bij(&f.v, bv) && bij(&f.sq, bs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dblcat::construct::DoubleBuilder;

    fn arrow() -> Arc<FiniteDoubleCategory> {
        Arc::new(
            DoubleBuilder::new()
                .objects(&["0", "1"])
                .hmor("f", "0", "1")
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn identity_is_valid() {
        let a = arrow();
        validate_double_functor(&DoubleFunctor::identity(a)).unwrap();
    }

    #[test]
    fn endofunctors_of_the_arrow() {
        let a = arrow();
        // constant at 0, constant at 1, identity
        assert_eq!(enumerate_functors(&a, &a).len(), 3);
    }

    #[test]
    fn broken_composition_detected() {
        let a = arrow();
        let mut f = DoubleFunctor::identity(a.clone());
        f.h[a.hmor("f").unwrap()] = a.hmor("1_0").unwrap();
        assert!(validate_double_functor(&f).is_err());
    }
}
