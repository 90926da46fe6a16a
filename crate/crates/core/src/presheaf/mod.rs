//! Finite set-valued presheaves on a signature, natural transformations,
//! matching objects and fiberwise surjectivity.

mod format;
mod matching;

use std::collections::HashMap;
use std::sync::Arc;

pub use format::{parse_nat_transf, parse_presheaf, parse_raw_presheaf, serialize_nat_transf, serialize_presheaf};
pub use matching::{
    boundary_family, is_fiberwise_surjective, is_l_structure, matching_object, FiberwiseFailure, LStructureFailure,
    MatchingObject,
};

use crate::error::PresheafError;
use crate::signature::{ArrowId, FoldsSignature, KindId};

/// A presheaf on a signature: finite carriers per kind, and for each
/// generating arrow `p: K -> K'` a function `X(K) -> X(K')`.
#[derive(Clone, Debug)]
pub struct Presheaf {
    sig: Arc<FoldsSignature>,
    carriers: Vec<Vec<String>>,
    actions: Vec<Vec<usize>>,
    index: HashMap<String, (KindId, usize)>,
}

impl PartialEq for Presheaf {
    fn eq(&self, other: &Self) -> bool {
        *self.sig == *other.sig && self.carriers == other.carriers && self.actions == other.actions
    }
}

impl Eq for Presheaf {}

/// Unresolved presheaf data with names in place of indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPresheaf {
    pub signature: Option<String>,
    pub carriers: Vec<(String, Vec<String>)>,
    /// `(arrow, element, image)`; the arrow is looked up out of the
    /// element's kind.
    pub actions: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorialityViolation {
    pub relation: String,
    pub element: String,
    pub lhs_image: String,
    pub rhs_image: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PresheafReport {
    pub violations: Vec<FunctorialityViolation>,
}

impl PresheafReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Presheaf {
    /// Builds a presheaf from indexed data. `actions[a][i]` is the index in
    /// the carrier of `target(a)` of the image of element `i` of
    /// `source(a)`.
    pub fn from_parts(
        sig: Arc<FoldsSignature>,
        carriers: Vec<Vec<String>>,
        actions: Vec<Vec<usize>>,
    ) -> Result<Self, PresheafError> {
        if carriers.len() != sig.kind_count() || actions.len() != sig.arrows().len() {
            return Err(PresheafError::SignatureMismatch);
        }
        let mut index = HashMap::new();
        for (k, c) in carriers.iter().enumerate() {
            for (i, e) in c.iter().enumerate() {
                if index.insert(e.clone(), (k, i)).is_some() {
                    return Err(PresheafError::DuplicateElement(e.clone()));
                }
            }
        }
        for (a, act) in actions.iter().enumerate() {
            let arrow = sig.arrow(a);
            if act.len() != carriers[arrow.source].len() {
                let missing = carriers[arrow.source]
                    .get(act.len())
                    .cloned()
                    .unwrap_or_default();
                return Err(PresheafError::ActionNotTotal {
                    arrow: arrow.name.clone(),
                    element: missing,
                });
            }
            for (i, &j) in act.iter().enumerate() {
                if j >= carriers[arrow.target].len() {
                    return Err(PresheafError::ActionIllTyped {
                        arrow: arrow.name.clone(),
                        element: carriers[arrow.source][i].clone(),
                        image: j.to_string(),
                        expected: sig.kind_name(arrow.target).to_string(),
                    });
                }
            }
        }
        Ok(Presheaf {
            sig,
            carriers,
            actions,
            index,
        })
    }

    pub fn from_raw(sig: Arc<FoldsSignature>, raw: &RawPresheaf) -> Result<Self, PresheafError> {
        let mut carriers = vec![Vec::new(); sig.kind_count()];
        for (k, elems) in &raw.carriers {
            let kid = sig
                .kind(k)
                .map_err(|_| PresheafError::UnknownKind(k.clone()))?;
            carriers[kid].extend(elems.iter().cloned());
        }
        let mut where_is = HashMap::new();
        for (k, c) in carriers.iter().enumerate() {
            for (i, e) in c.iter().enumerate() {
                if where_is.insert(e.clone(), (k, i)).is_some() {
                    return Err(PresheafError::DuplicateElement(e.clone()));
                }
            }
        }
        let mut actions: Vec<Vec<Option<usize>>> = sig
            .arrows()
            .iter()
            .map(|a| vec![None; carriers[a.source].len()])
            .collect();
        for (arrow, elem, image) in &raw.actions {
            let &(k, i) = where_is
                .get(elem)
                .ok_or_else(|| PresheafError::UnknownElement(elem.clone()))?;
            let a = sig
                .arrow_from(k, arrow)
                .ok_or_else(|| PresheafError::UnknownArrow {
                    kind: sig.kind_name(k).to_string(),
                    arrow: arrow.clone(),
                })?;
            let &(k2, j) = where_is
                .get(image)
                .ok_or_else(|| PresheafError::UnknownElement(image.clone()))?;
            if k2 != sig.arrow(a).target {
                return Err(PresheafError::ActionIllTyped {
                    arrow: arrow.clone(),
                    element: elem.clone(),
                    image: image.clone(),
                    expected: sig.kind_name(sig.arrow(a).target).to_string(),
                });
            }
            actions[a][i] = Some(j);
        }
        let actions = actions
            .into_iter()
            .enumerate()
            .map(|(a, act)| {
                act.into_iter()
                    .enumerate()
                    .map(|(i, j)| {
                        j.ok_or_else(|| PresheafError::ActionNotTotal {
                            arrow: sig.arrow(a).name.clone(),
                            element: carriers[sig.arrow(a).source][i].clone(),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Presheaf::from_parts(sig, carriers, actions)
    }

    /// The presheaf with a single element at every kind.
    pub fn terminal(sig: Arc<FoldsSignature>) -> Self {
        let carriers = (0..sig.kind_count())
            .map(|k| vec![format!("{}#0", sig.kind_name(k))])
            .collect();
        let actions = sig.arrows().iter().map(|_| vec![0]).collect();
        Presheaf::from_parts(sig, carriers, actions).expect("terminal presheaf")
    }

    pub fn signature(&self) -> &Arc<FoldsSignature> {
        &self.sig
    }

    pub fn carrier(&self, k: KindId) -> &[String] {
        &self.carriers[k]
    }

    pub fn carriers(&self) -> &[Vec<String>] {
        &self.carriers
    }

    pub fn action(&self, a: ArrowId) -> &[usize] {
        &self.actions[a]
    }

    pub fn act(&self, a: ArrowId, x: usize) -> usize {
        self.actions[a][x]
    }

    /// Acts by a word in diagrammatic order.
    pub fn act_word(&self, word: &[ArrowId], mut x: usize) -> usize {
        for &a in word {
            x = self.actions[a][x];
        }
        x
    }

    pub fn element(&self, name: &str) -> Option<(KindId, usize)> {
        self.index.get(name).copied()
    }

    pub fn element_name(&self, k: KindId, x: usize) -> &str {
        &self.carriers[k][x]
    }

    /// Same data with every element renamed by `f`.
    pub fn renamed(&self, mut f: impl FnMut(KindId, usize, &str) -> String) -> Result<Self, PresheafError> {
        let carriers = self
            .carriers
            .iter()
            .enumerate()
            .map(|(k, c)| c.iter().enumerate().map(|(i, e)| f(k, i, e)).collect())
            .collect();
        Presheaf::from_parts(self.sig.clone(), carriers, self.actions.clone())
    }

    pub fn to_raw(&self) -> RawPresheaf {
        let mut raw = RawPresheaf {
            signature: None,
            carriers: (0..self.sig.kind_count())
                .map(|k| (self.sig.kind_name(k).to_string(), self.carriers[k].clone()))
                .collect(),
            actions: Vec::new(),
        };
        for (a, act) in self.actions.iter().enumerate() {
            let arrow = self.sig.arrow(a);
            for (i, &j) in act.iter().enumerate() {
                raw.actions.push((
                    arrow.name.clone(),
                    self.carriers[arrow.source][i].clone(),
                    self.carriers[arrow.target][j].clone(),
                ));
            }
        }
        raw
    }
}

/// Checks that every relation of the signature holds at every element.
pub fn validate_presheaf(x: &Presheaf) -> PresheafReport {
    let sig = x.signature();
    let mut report = PresheafReport::default();
    for rel in sig.relations() {
        for e in 0..x.carrier(rel.source).len() {
            let l = x.act_word(&rel.lhs, e);
            let r = x.act_word(&rel.rhs, e);
            if l != r {
                let t = sig.word_target(rel.source, &rel.lhs);
                report.violations.push(FunctorialityViolation {
                    relation: format!(
                        "{}: {} = {}",
                        sig.kind_name(rel.source),
                        sig.word_text(&rel.lhs),
                        sig.word_text(&rel.rhs)
                    ),
                    element: x.element_name(rel.source, e).to_string(),
                    lhs_image: x.element_name(t, l).to_string(),
                    rhs_image: x.element_name(t, r).to_string(),
                });
            }
        }
    }
    report
}

/// A natural transformation between presheaves over the same signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransf {
    source: Presheaf,
    target: Presheaf,
    components: Vec<Vec<usize>>,
}

impl NatTransf {
    /// Checks totality, typing and naturality.
    pub fn new(
        source: Presheaf,
        target: Presheaf,
        components: Vec<Vec<usize>>,
    ) -> Result<Self, PresheafError> {
        if *source.sig != *target.sig || components.len() != source.sig.kind_count() {
            return Err(PresheafError::SignatureMismatch);
        }
        for (k, comp) in components.iter().enumerate() {
            if comp.len() != source.carrier(k).len() {
                let e = source.carrier(k).get(comp.len()).cloned().unwrap_or_default();
                return Err(PresheafError::ComponentNotTotal(e));
            }
            for (i, &j) in comp.iter().enumerate() {
                if j >= target.carrier(k).len() {
                    return Err(PresheafError::ComponentIllTyped {
                        kind: source.sig.kind_name(k).to_string(),
                        element: source.carrier(k)[i].clone(),
                        image: j.to_string(),
                    });
                }
            }
        }
        for (a, arrow) in source.sig.arrows().iter().enumerate() {
            for x in 0..source.carrier(arrow.source).len() {
                let lhs = components[arrow.target][source.act(a, x)];
                let rhs = target.act(a, components[arrow.source][x]);
                if lhs != rhs {
                    return Err(PresheafError::NotNatural {
                        arrow: arrow.name.clone(),
                        element: source.carrier(arrow.source)[x].clone(),
                    });
                }
            }
        }
        Ok(NatTransf {
            source,
            target,
            components,
        })
    }

    /// Builds a transformation from named pairs `(kind, element, image)`.
    pub fn from_named(
        source: Presheaf,
        target: Presheaf,
        pairs: &[(String, String, String)],
    ) -> Result<Self, PresheafError> {
        let sig = source.sig.clone();
        let mut comps: Vec<Vec<Option<usize>>> = (0..sig.kind_count())
            .map(|k| vec![None; source.carrier(k).len()])
            .collect();
        for (kind, e, img) in pairs {
            let k = sig
                .kind(kind)
                .map_err(|_| PresheafError::UnknownKind(kind.clone()))?;
            let i = source
                .carrier(k)
                .iter()
                .position(|x| x == e)
                .ok_or_else(|| PresheafError::UnknownElement(e.clone()))?;
            let j = target.carrier(k).iter().position(|x| x == img).ok_or_else(|| {
                PresheafError::ComponentIllTyped {
                    kind: kind.clone(),
                    element: e.clone(),
                    image: img.clone(),
                }
            })?;
            comps[k][i] = Some(j);
        }
        let components = comps
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                c.into_iter()
                    .enumerate()
                    .map(|(i, j)| {
                        j.ok_or_else(|| PresheafError::ComponentNotTotal(source.carrier(k)[i].clone()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        NatTransf::new(source, target, components)
    }

    pub fn identity(x: &Presheaf) -> Self {
        let components = x.carriers.iter().map(|c| (0..c.len()).collect()).collect();
        NatTransf {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &NatTransf) -> Result<Self, PresheafError> {
        if self.target != next.source {
            return Err(PresheafError::SignatureMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(f, g)| f.iter().map(|&i| g[i]).collect())
            .collect();
        Ok(NatTransf {
            source: self.source.clone(),
            target: next.target.clone(),
            components,
        })
    }

    pub fn source(&self) -> &Presheaf {
        &self.source
    }

    pub fn target(&self) -> &Presheaf {
        &self.target
    }

    pub fn component(&self, k: KindId) -> &[usize] {
        &self.components[k]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().enumerate().all(|(k, c)| {
            let mut seen = vec![false; self.target.carrier(k).len()];
            c.len() == seen.len()
                && c.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
        })
    }
}

/// A span `left <- apex -> right`, optionally with a context mapped into the
/// apex; the interpretations in the feet are the composites with the legs,
/// so both triangles commute by construction.
#[derive(Clone, Debug)]
pub struct Span {
    pub left: NatTransf,
    pub right: NatTransf,
    pub context: Option<NatTransf>,
}

impl Span {
    pub fn new(left: NatTransf, right: NatTransf) -> Result<Self, PresheafError> {
        if left.source != right.source {
            return Err(PresheafError::SignatureMismatch);
        }
        Ok(Span {
            left,
            right,
            context: None,
        })
    }

    pub fn with_context(mut self, alpha: NatTransf) -> Result<Self, PresheafError> {
        if alpha.target != self.left.source {
            return Err(PresheafError::SignatureMismatch);
        }
        self.context = Some(alpha);
        Ok(self)
    }

    pub fn apex(&self) -> &Presheaf {
        &self.left.source
    }

    /// The identity span on `x`.
    pub fn identity(x: &Presheaf) -> Self {
        Span {
            left: NatTransf::identity(x),
            right: NatTransf::identity(x),
            context: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::{builtin_signature, BuiltinSignature};

    fn cat() -> Arc<FoldsSignature> {
        builtin_signature(BuiltinSignature::Cat)
    }

    #[test]
    fn terminal_is_functorial() {
        let t = Presheaf::terminal(cat());
        assert!(validate_presheaf(&t).is_ok());
    }

    #[test]
    fn broken_identity_relation_is_reported() {
        let sig = cat();
        let raw = RawPresheaf {
            signature: None,
            carriers: vec![
                ("O".into(), vec!["x".into(), "y".into()]),
                ("A".into(), vec!["f".into()]),
                ("I'".into(), vec!["i0".into()]),
            ],
            actions: vec![
                ("s".into(), "f".into(), "x".into()),
                ("t".into(), "f".into(), "y".into()),
                ("i".into(), "i0".into(), "f".into()),
            ],
        };
        let x = Presheaf::from_raw(sig, &raw).unwrap();
        let rep = validate_presheaf(&x);
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].element, "i0");
    }

    #[test]
    fn missing_action_rejected() {
        let raw = RawPresheaf {
            signature: None,
            carriers: vec![
                ("O".into(), vec!["x".into()]),
                ("A".into(), vec!["f".into()]),
            ],
            actions: vec![("s".into(), "f".into(), "x".into())],
        };
        assert!(matches!(
            Presheaf::from_raw(cat(), &raw),
            Err(PresheafError::ActionNotTotal { .. })
        ));
    }

    #[test]
    fn unknown_arrow_rejected() {
        let raw = RawPresheaf {
            signature: None,
            carriers: vec![("O".into(), vec!["x".into()])],
            actions: vec![("s".into(), "x".into(), "x".into())],
        };
        assert!(matches!(
            Presheaf::from_raw(cat(), &raw),
            Err(PresheafError::UnknownArrow { .. })
        ));
    }
}
