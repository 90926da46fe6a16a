//! FOLDS signatures: finite inverse categories presented by kinds, generating
//! arrows and relations between arrow words, with a distinguished set of
//! maximal relation kinds.

mod builtin;
mod format;

use std::collections::HashMap;
use std::fmt;

pub use builtin::{builtin_signature, original_relations, BuiltinSignature, OriginalRelation};
pub use format::{parse_signature, serialize_signature};

use crate::error::SignatureError;

pub type KindId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: KindId,
    pub target: KindId,
}

/// An equation between two composable words with a common source kind.
/// Words are read in diagrammatic order: `[a, b]` means first `a`, then `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub source: KindId,
    pub lhs: Vec<ArrowId>,
    pub rhs: Vec<ArrowId>,
}

/// A signature as written down, before name resolution and validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawSignature {
    pub kinds: Vec<String>,
    pub relation_kinds: Vec<String>,
    /// `(name, source, target)`
    pub arrows: Vec<(String, String, String)>,
    pub relations: Vec<RawRelation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawRelation {
    /// Source kind; inferred when absent.
    pub source: Option<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

/// A morphism of the signature category, as a word of generating arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowWord {
    pub source: KindId,
    pub target: KindId,
    pub arrows: Vec<ArrowId>,
}

impl ArrowWord {
    pub fn is_identity(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// All non-identity words out of one kind, grouped into classes of equal
/// morphisms.
#[derive(Clone, Debug, Default)]
pub struct Fan {
    pub classes: Vec<WordClass>,
    class_of: HashMap<Vec<ArrowId>, usize>,
}

#[derive(Clone, Debug)]
pub struct WordClass {
    pub canonical: Vec<ArrowId>,
    pub target: KindId,
    /// Every word in the class, sorted.
    pub members: Vec<Vec<ArrowId>>,
}

impl Fan {
    pub fn class_of(&self, word: &[ArrowId]) -> Option<usize> {
        self.class_of.get(word).copied()
    }
}

#[derive(Clone, Debug)]
pub struct FoldsSignature {
    kinds: Vec<String>,
    is_relation: Vec<bool>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    degree: Vec<usize>,
    out_arrows: Vec<Vec<ArrowId>>,
    fans: Vec<Fan>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignatureViolation {
    UnknownKind(String),
    DuplicateKind(String),
    DuplicateArrow { kind: String, name: String },
    DegreeCycle(Vec<String>),
    RelationNotMaximal { kind: String, arrow: String },
    IllTypedRelation { relation: String, reason: String },
}

impl fmt::Display for SignatureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureViolation::UnknownKind(k) => write!(f, "unknown kind `{k}`"),
            SignatureViolation::DuplicateKind(k) => write!(f, "kind `{k}` declared twice"),
            SignatureViolation::DuplicateArrow { kind, name } => {
                write!(f, "two arrows named `{name}` out of kind `{kind}`")
            }
            SignatureViolation::DegreeCycle(path) => {
                write!(f, "degree cycle through {}", path.join(" -> "))
            }
            SignatureViolation::RelationNotMaximal { kind, arrow } => {
                write!(f, "relation kind `{kind}` is the target of arrow `{arrow}`")
            }
            SignatureViolation::IllTypedRelation { relation, reason } => {
                write!(f, "ill-typed relation `{relation}`: {reason}")
            }
        }
    }
}

/// Outcome of [`validate_signature`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Degrees per kind, in declaration order, when validation succeeded.
    pub degrees: Option<Vec<(String, usize)>>,
    pub violations: Vec<SignatureViolation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_signature(raw: &RawSignature) -> ValidationReport {
    match FoldsSignature::from_raw(raw) {
        Ok(sig) => ValidationReport {
            degrees: Some(
                sig.kinds
                    .iter()
                    .cloned()
                    .zip(sig.degree.iter().copied())
                    .collect(),
            ),
            violations: Vec::new(),
        },
        Err(violations) => ValidationReport {
            degrees: None,
            violations,
        },
    }
}

impl FoldsSignature {
    pub fn from_raw(raw: &RawSignature) -> Result<Self, Vec<SignatureViolation>> {
        let mut violations = Vec::new();
        let mut kind_index: HashMap<&str, KindId> = HashMap::new();
        for (i, k) in raw.kinds.iter().enumerate() {
            if kind_index.insert(k.as_str(), i).is_some() {
                violations.push(SignatureViolation::DuplicateKind(k.clone()));
            }
        }
        let mut is_relation = vec![false; raw.kinds.len()];
        for k in &raw.relation_kinds {
            match kind_index.get(k.as_str()) {
                Some(&i) => is_relation[i] = true,
                None => violations.push(SignatureViolation::UnknownKind(k.clone())),
            }
        }
        let mut arrows = Vec::new();
        let mut by_source: HashMap<(KindId, &str), ArrowId> = HashMap::new();
        for (name, src, tgt) in &raw.arrows {
            let (Some(&s), Some(&t)) = (kind_index.get(src.as_str()), kind_index.get(tgt.as_str()))
            else {
                for k in [src, tgt] {
                    if !kind_index.contains_key(k.as_str()) {
                        violations.push(SignatureViolation::UnknownKind(k.clone()));
                    }
                }
                continue;
            };
            if by_source.insert((s, name.as_str()), arrows.len()).is_some() {
                violations.push(SignatureViolation::DuplicateArrow {
                    kind: src.clone(),
                    name: name.clone(),
                });
            }
            if is_relation[t] {
                violations.push(SignatureViolation::RelationNotMaximal {
                    kind: tgt.clone(),
                    arrow: name.clone(),
                });
            }
            arrows.push(Arrow {
                name: name.clone(),
                source: s,
                target: t,
            });
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let n = raw.kinds.len();
        let mut out_arrows = vec![Vec::new(); n];
        for (i, a) in arrows.iter().enumerate() {
            out_arrows[a.source].push(i);
        }
        let degree = match degrees(&raw.kinds, &arrows, &out_arrows) {
            Ok(d) => d,
            Err(cycle) => return Err(vec![cycle]),
        };

        let resolve = |kind: KindId, word: &[String]| -> Result<(Vec<ArrowId>, KindId), String> {
            let mut cur = kind;
            let mut out = Vec::new();
            for name in word {
                match by_source.get(&(cur, name.as_str())) {
                    Some(&a) => {
                        out.push(a);
                        cur = arrows[a].target;
                    }
                    None => {
                        return Err(format!(
                            "no arrow `{}` out of kind `{}`",
                            name, raw.kinds[cur]
                        ))
                    }
                }
            }
            Ok((out, cur))
        };

        let mut relations = Vec::new();
        for rel in &raw.relations {
            let text = raw_relation_text(rel);
            if rel.lhs.is_empty() || rel.rhs.is_empty() {
                violations.push(SignatureViolation::IllTypedRelation {
                    relation: text,
                    reason: "empty side".into(),
                });
                continue;
            }
            let candidates: Vec<KindId> = match &rel.source {
                Some(k) => match kind_index.get(k.as_str()) {
                    Some(&i) => vec![i],
                    None => {
                        violations.push(SignatureViolation::UnknownKind(k.clone()));
                        continue;
                    }
                },
                None => (0..n)
                    .filter(|&k| resolve(k, &rel.lhs).is_ok() && resolve(k, &rel.rhs).is_ok())
                    .collect(),
            };
            if candidates.len() > 1 {
                let names: Vec<_> = candidates.iter().map(|&k| raw.kinds[k].clone()).collect();
                violations.push(SignatureViolation::IllTypedRelation {
                    relation: text,
                    reason: format!("ambiguous source kind ({})", names.join(", ")),
                });
                continue;
            }
            let Some(&k) = candidates.first() else {
                violations.push(SignatureViolation::IllTypedRelation {
                    relation: text,
                    reason: "the two sides are not composable words out of a common kind".into(),
                });
                continue;
            };
            match (resolve(k, &rel.lhs), resolve(k, &rel.rhs)) {
                (Ok((l, lt)), Ok((r, rt))) => {
                    if lt != rt {
                        violations.push(SignatureViolation::IllTypedRelation {
                            relation: text,
                            reason: format!(
                                "targets differ (`{}` vs `{}`)",
                                raw.kinds[lt], raw.kinds[rt]
                            ),
                        });
                    } else {
                        relations.push(Relation {
                            source: k,
                            lhs: l,
                            rhs: r,
                        });
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    violations.push(SignatureViolation::IllTypedRelation {
                        relation: text,
                        reason: e,
                    });
                }
            }
        }
        if !violations.is_empty() {
            return Err(violations);
        }

        let mut sig = FoldsSignature {
            kinds: raw.kinds.clone(),
            is_relation,
            arrows,
            relations,
            degree,
            out_arrows,
            fans: Vec::new(),
        };
        sig.fans = (0..n).map(|k| sig.saturate(k)).collect();
        Ok(sig)
    }

    pub fn to_raw(&self) -> RawSignature {
        RawSignature {
            kinds: self.kinds.clone(),
            relation_kinds: (0..self.kinds.len())
                .filter(|&k| self.is_relation[k])
                .map(|k| self.kinds[k].clone())
                .collect(),
            arrows: self
                .arrows
                .iter()
                .map(|a| {
                    (
                        a.name.clone(),
                        self.kinds[a.source].clone(),
                        self.kinds[a.target].clone(),
                    )
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RawRelation {
                    source: Some(self.kinds[r.source].clone()),
                    lhs: r.lhs.iter().map(|&a| self.arrows[a].name.clone()).collect(),
                    rhs: r.rhs.iter().map(|&a| self.arrows[a].name.clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn kinds(&self) -> &[String] {
        &self.kinds
    }

    pub fn kind_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind_name(&self, k: KindId) -> &str {
        &self.kinds[k]
    }

    pub fn kind(&self, name: &str) -> Result<KindId, SignatureError> {
        self.kinds
            .iter()
            .position(|k| k == name)
            .ok_or_else(|| SignatureError::UnknownKind(name.to_string()))
    }

    pub fn is_relation_kind(&self, k: KindId) -> bool {
        self.is_relation[k]
    }

    pub fn relation_kinds(&self) -> impl Iterator<Item = KindId> + '_ {
        (0..self.kinds.len()).filter(|&k| self.is_relation[k])
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    /// Generating arrows out of `k`, in declaration order.
    pub fn out_arrows(&self, k: KindId) -> &[ArrowId] {
        &self.out_arrows[k]
    }

    /// The arrow named `name` out of kind `k`.
    pub fn arrow_from(&self, k: KindId, name: &str) -> Option<ArrowId> {
        self.out_arrows[k]
            .iter()
            .copied()
            .find(|&a| self.arrows[a].name == name)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn degree(&self, k: KindId) -> usize {
        self.degree[k]
    }

    pub fn fan(&self, k: KindId) -> &Fan {
        &self.fans[k]
    }

    /// Kinds sorted by degree (ascending), ties in declaration order.
    pub fn kinds_by_degree(&self) -> Vec<KindId> {
        let mut ks: Vec<KindId> = (0..self.kinds.len()).collect();
        ks.sort_by_key(|&k| (self.degree[k], k));
        ks
    }

    pub fn word_target(&self, source: KindId, word: &[ArrowId]) -> KindId {
        word.last().map_or(source, |&a| self.arrows[a].target)
    }

    pub fn word_text(&self, word: &[ArrowId]) -> String {
        if word.is_empty() {
            return "id".into();
        }
        word.iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn canonical(&self, source: KindId, word: &[ArrowId]) -> Vec<ArrowId> {
        if word.is_empty() {
            return Vec::new();
        }
        let fan = &self.fans[source];
        let c = fan
            .class_of(word)
            .expect("word is not a composable word out of its source");
        fan.classes[c].canonical.clone()
    }

    /// Canonical representatives of the morphisms `k -> k2`.
    pub fn hom_words(&self, k: KindId, k2: KindId) -> Vec<ArrowWord> {
        let mut out = Vec::new();
        if k == k2 {
            out.push(ArrowWord {
                source: k,
                target: k,
                arrows: Vec::new(),
            });
        }
        for c in &self.fans[k].classes {
            if c.target == k2 {
                out.push(ArrowWord {
                    source: k,
                    target: k2,
                    arrows: c.canonical.clone(),
                });
            }
        }
        out
    }

    fn saturate(&self, k: KindId) -> Fan {
        let mut words: Vec<Vec<ArrowId>> = Vec::new();
        let mut stack: Vec<Vec<ArrowId>> = self.out_arrows[k].iter().map(|&a| vec![a]).collect();
        while let Some(w) = stack.pop() {
            let t = self.arrows[*w.last().unwrap()].target;
            for &a in &self.out_arrows[t] {
                let mut w2 = w.clone();
                w2.push(a);
                stack.push(w2);
            }
            words.push(w);
        }
        words.sort();
        let index: HashMap<Vec<ArrowId>, usize> =
            words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut uf = UnionFind::new(words.len());
        for (i, w) in words.iter().enumerate() {
            let mut kinds_along = Vec::with_capacity(w.len());
            let mut cur = k;
            for &a in w {
                kinds_along.push(cur);
                cur = self.arrows[a].target;
            }
            for pos in 0..w.len() {
                for rel in &self.relations {
                    if rel.source != kinds_along[pos] {
                        continue;
                    }
                    for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                        if w[pos..].starts_with(from) {
                            let mut w2 = w[..pos].to_vec();
                            w2.extend_from_slice(to);
                            w2.extend_from_slice(&w[pos + from.len()..]);
                            let j = index[&w2];
                            uf.union(i, j);
                        }
                    }
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..words.len() {
            groups.entry(uf.find(i)).or_default().push(i);
        }
        let mut classes: Vec<WordClass> = groups
            .into_values()
            .map(|members| {
                let members: Vec<Vec<ArrowId>> =
                    members.into_iter().map(|i| words[i].clone()).collect();
                let canonical = members.iter().min().unwrap().clone();
                let target = self.word_target(k, &canonical);
                WordClass {
                    canonical,
                    target,
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
        let mut class_of = HashMap::new();
        for (ci, c) in classes.iter_mut().enumerate() {
            c.members.sort();
            for m in &c.members {
                class_of.insert(m.clone(), ci);
            }
        }
        Fan { classes, class_of }
    }

    /// The boundary of the representable at `k`: the presheaf sending `h`
    /// to the non-identity morphisms `k -> h`, acting by postcomposition.
    pub fn boundary_weight(&self, k: KindId) -> crate::presheaf::Presheaf {
        let fan = &self.fans[k];
        let mut carriers: Vec<Vec<String>> = vec![Vec::new(); self.kinds.len()];
        let mut slot = vec![0usize; fan.classes.len()];
        for (ci, c) in fan.classes.iter().enumerate() {
            slot[ci] = carriers[c.target].len();
            carriers[c.target].push(self.word_text(&c.canonical));
        }
        let actions = self
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut act = vec![0; carriers[a.source].len()];
                for (ci, c) in fan.classes.iter().enumerate() {
                    if c.target == a.source {
                        let mut w = c.canonical.clone();
                        w.push(ai);
                        let cj = fan.class_of(&w).unwrap();
                        act[slot[ci]] = slot[cj];
                    }
                }
                act
            })
            .collect();
        crate::presheaf::Presheaf::from_parts(self.clone().into(), carriers, actions)
            .expect("boundary weight is a well-formed presheaf")
    }
}

impl PartialEq for FoldsSignature {
    fn eq(&self, other: &Self) -> bool {
        self.kinds == other.kinds
            && self.is_relation == other.is_relation
            && self.arrows == other.arrows
            && self.relations == other.relations
    }
}

impl Eq for FoldsSignature {}

fn raw_relation_text(rel: &RawRelation) -> String {
    let prefix = rel
        .source
        .as_ref()
        .map(|k| format!("{k}: "))
        .unwrap_or_default();
    format!("{}{} = {}", prefix, rel.lhs.join("."), rel.rhs.join("."))
}

fn degrees(
    kinds: &[String],
    arrows: &[Arrow],
    out: &[Vec<ArrowId>],
) -> Result<Vec<usize>, SignatureViolation> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    fn visit(
        k: KindId,
        arrows: &[Arrow],
        out: &[Vec<ArrowId>],
        mark: &mut [Mark],
        deg: &mut [usize],
        path: &mut Vec<KindId>,
    ) -> Result<(), Vec<KindId>> {
        mark[k] = Mark::Active;
        path.push(k);
        let mut d = 0;
        for &a in &out[k] {
            let t = arrows[a].target;
            match mark[t] {
                Mark::Active => {
                    let start = path.iter().position(|&x| x == t).unwrap();
                    let mut cyc = path[start..].to_vec();
                    cyc.push(t);
                    return Err(cyc);
                }
                Mark::New => visit(t, arrows, out, mark, deg, path)?,
                Mark::Done => {}
            }
            d = d.max(deg[t] + 1);
        }
        deg[k] = d;
        mark[k] = Mark::Done;
        path.pop();
        Ok(())
    }
    let mut mark = vec![Mark::New; kinds.len()];
    let mut deg = vec![0; kinds.len()];
    for k in 0..kinds.len() {
        if mark[k] == Mark::New {
            let mut path = Vec::new();
            visit(k, arrows, out, &mut mark, &mut deg, &mut path).map_err(|cyc| {
                SignatureViolation::DegreeCycle(cyc.into_iter().map(|k| kinds[k].clone()).collect())
            })?;
        }
    }
    Ok(deg)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(kinds: &[&str], arrows: &[(&str, &str, &str)]) -> RawSignature {
        RawSignature {
            kinds: kinds.iter().map(|s| s.to_string()).collect(),
            relation_kinds: vec![],
            arrows: arrows
                .iter()
                .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
                .collect(),
            relations: vec![],
        }
    }

    #[test]
    fn self_loop_is_a_degree_cycle() {
        let r = validate_signature(&raw(&["K"], &[("a", "K", "K")]));
        assert!(matches!(r.violations[..], [SignatureViolation::DegreeCycle(_)]));
    }

    #[test]
    fn longer_cycle_detected() {
        let r = validate_signature(&raw(
            &["A", "B", "C"],
            &[("x", "A", "B"), ("y", "B", "C"), ("z", "C", "A")],
        ));
        assert!(matches!(r.violations[..], [SignatureViolation::DegreeCycle(_)]));
    }

    #[test]
    fn relation_kind_cannot_be_a_target() {
        let mut r = raw(&["A", "R"], &[("x", "A", "R")]);
        r.relation_kinds.push("R".into());
        let rep = validate_signature(&r);
        assert!(matches!(
            rep.violations[..],
            [SignatureViolation::RelationNotMaximal { .. }]
        ));
    }

    #[test]
    fn mismatched_relation_targets_rejected() {
        let mut r = raw(
            &["A", "B", "C"],
            &[("x", "A", "B"), ("y", "A", "C")],
        );
        r.relations.push(RawRelation {
            source: Some("A".into()),
            lhs: vec!["x".into()],
            rhs: vec!["y".into()],
        });
        let rep = validate_signature(&r);
        assert!(matches!(
            rep.violations[..],
            [SignatureViolation::IllTypedRelation { .. }]
        ));
    }

    #[test]
    fn inferred_relation_source() {
        let mut r = raw(
            &["O", "A", "I"],
            &[("s", "A", "O"), ("t", "A", "O"), ("i", "I", "A")],
        );
        r.relations.push(RawRelation {
            source: None,
            lhs: vec!["i".into(), "s".into()],
            rhs: vec!["i".into(), "t".into()],
        });
        let sig = FoldsSignature::from_raw(&r).unwrap();
        let i = sig.kind("I").unwrap();
        let o = sig.kind("O").unwrap();
        assert_eq!(sig.hom_words(i, o).len(), 1);
    }
}
