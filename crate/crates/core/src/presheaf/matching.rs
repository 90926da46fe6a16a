use std::collections::{HashMap, HashSet};

use crate::signature::KindId;

use super::{NatTransf, Presheaf};

/// The matching object of a presheaf at a kind: compatible families indexed
/// by the classes of the kind's fan, together with the matching map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingObject {
    pub kind: KindId,
    /// One element index per fan class, in fan order.
    pub families: Vec<Vec<usize>>,
    /// For each element of the carrier, the index of its boundary family.
    pub map: Vec<usize>,
}

impl MatchingObject {
    pub fn family_index(&self, family: &[usize]) -> Option<usize> {
        self.families.iter().position(|f| f == family)
    }
}

pub fn matching_object(x: &Presheaf, k: KindId) -> MatchingObject {
    let families = enumerate_families(x, k, |_, _| true);
    let index: HashMap<&[usize], usize> = families
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let map = (0..x.carrier(k).len())
        .map(|e| index[boundary_family(x, k, e).as_slice()])
        .collect();
    MatchingObject {
        kind: k,
        families,
        map,
    }
}

/// The image of an element under the matching map.
pub fn boundary_family(x: &Presheaf, k: KindId, e: usize) -> Vec<usize> {
    x.signature()
        .fan(k)
        .classes
        .iter()
        .map(|c| x.act_word(&c.canonical, e))
        .collect()
}

/// Enumerates compatible families by backtracking over the generating
/// arrows out of `k`; `allowed(arrow_position, element)` restricts the
/// value chosen for each generating arrow.
pub(crate) fn enumerate_families(
    x: &Presheaf,
    k: KindId,
    mut allowed: impl FnMut(usize, usize) -> bool,
) -> Vec<Vec<usize>> {
    let sig = x.signature().clone();
    let gens = sig.out_arrows(k).to_vec();
    let fan = sig.fan(k);
    let pos = |a| gens.iter().position(|&g| g == a).unwrap();
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    for (ci, c) in fan.classes.iter().enumerate() {
        let step = c.members.iter().map(|m| pos(m[0])).max().unwrap();
        ready[step].push(ci);
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .enumerate()
        .map(|(gi, &a)| {
            (0..x.carrier(sig.arrow(a).target).len())
                .filter(|&e| allowed(gi, e))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    let mut values = vec![0usize; fan.classes.len()];
    fn go(
        step: usize,
        x: &Presheaf,
        gens: &[usize],
        candidates: &[Vec<usize>],
        ready: &[Vec<usize>],
        fan: &crate::signature::Fan,
        pos: &dyn Fn(usize) -> usize,
        choice: &mut Vec<usize>,
        values: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if step == gens.len() {
            out.push(values.clone());
            return;
        }
        'cand: for &e in &candidates[step] {
            choice[step] = e;
            for &ci in &ready[step] {
                let mut val = None;
                for m in &fan.classes[ci].members {
                    let v = x.act_word(&m[1..], choice[pos(m[0])]);
                    match val {
                        None => val = Some(v),
                        Some(w) if w != v => continue 'cand,
                        _ => {}
                    }
                }
                values[ci] = val.unwrap();
            }
            go(
                step + 1,
                x,
                gens,
                candidates,
                ready,
                fan,
                pos,
                choice,
                values,
                out,
            );
        }
    }
    go(
        0,
        x,
        &gens,
        &candidates,
        &ready,
        fan,
        &pos,
        &mut choice,
        &mut values,
        &mut out,
    );
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LStructureFailure {
    pub kind: String,
    pub first: String,
    pub second: String,
}

impl std::fmt::Display for LStructureFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "`{}` and `{}` of kind `{}` have the same boundary", self.first, self.second, self.kind)
    }
}

/// Checks that the matching map is injective at every relation kind.
pub fn is_l_structure(x: &Presheaf) -> Result<(), LStructureFailure> {
    let sig = x.signature();
    for k in sig.relation_kinds() {
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for e in 0..x.carrier(k).len() {
            if let Some(prev) = seen.insert(boundary_family(x, k, e), e) {
                return Err(LStructureFailure {
                    kind: sig.kind_name(k).to_string(),
                    first: x.element_name(k, prev).to_string(),
                    second: x.element_name(k, e).to_string(),
                });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberwiseFailure {
    pub kind: String,
    /// The element downstairs with no suitable preimage.
    pub element: String,
    /// The lifted boundary family upstairs, as `(word, element)` pairs.
    pub family: Vec<(String, String)>,
}

impl std::fmt::Display for FiberwiseFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let family: Vec<String> = self.family.iter().map(|(w, e)| format!("{w}={e}")).collect();
        write!(
            f,
            "`{}` of kind `{}` has no preimage over the family {{{}}}",
            self.element,
            self.kind,
            family.join(", ")
        )
    }
}

/// Checks that for every kind `K` the map `X(K) -> Y(K) x_{M_K Y} M_K X`
/// is surjective.
pub fn is_fiberwise_surjective(rho: &NatTransf) -> Result<(), FiberwiseFailure> {
    let x = rho.source();
    let y = rho.target();
    let sig = x.signature().clone();
    for k in sig.kinds_by_degree() {
        let fan = sig.fan(k);
        let covered: HashSet<(usize, Vec<usize>)> = (0..x.carrier(k).len())
            .map(|e| (rho.component(k)[e], boundary_family(x, k, e)))
            .collect();
        let class_of_gen: Vec<usize> = sig
            .out_arrows(k)
            .iter()
            .map(|&a| fan.class_of(&[a]).unwrap())
            .collect();
        let gen_targets: Vec<KindId> = sig
            .out_arrows(k)
            .iter()
            .map(|&a| sig.arrow(a).target)
            .collect();
        for ye in 0..y.carrier(k).len() {
            let fy = boundary_family(y, k, ye);
            let lifts = enumerate_families(x, k, |gi, e| {
                rho.component(gen_targets[gi])[e] == fy[class_of_gen[gi]]
            });
            for fx in lifts {
                if !covered.contains(&(ye, fx.clone())) {
                    return Err(FiberwiseFailure {
                        kind: sig.kind_name(k).to_string(),
                        element: y.element_name(k, ye).to_string(),
                        family: fan
                            .classes
                            .iter()
                            .zip(&fx)
                            .map(|(c, &e)| {
                                (
                                    sig.word_text(&c.canonical),
                                    x.element_name(c.target, e).to_string(),
                                )
                            })
                            .collect(),
                    });
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaf::RawPresheaf;
    use crate::signature::{builtin_signature, BuiltinSignature};

    fn arrows_between_two_objects() -> Presheaf {
        let raw = RawPresheaf {
            signature: None,
            carriers: vec![
                ("O".into(), vec!["x".into(), "y".into()]),
                ("A".into(), vec!["f".into(), "g".into()]),
            ],
            actions: vec![
                ("s".into(), "f".into(), "x".into()),
                ("t".into(), "f".into(), "y".into()),
                ("s".into(), "g".into(), "x".into()),
                ("t".into(), "g".into(), "y".into()),
            ],
        };
        Presheaf::from_raw(builtin_signature(BuiltinSignature::Cat), &raw).unwrap()
    }

    #[test]
    fn arrow_kind_families_are_pairs_of_objects() {
        let x = arrows_between_two_objects();
        let a = x.signature().kind("A").unwrap();
        assert_eq!(matching_object(&x, a).families.len(), 4);
    }

    #[test]
    fn equality_kind_families_are_parallel_pairs() {
        let x = arrows_between_two_objects();
        let e = x.signature().kind("E'").unwrap();
        assert_eq!(matching_object(&x, e).families.len(), 4);
    }

    #[test]
    fn degree_zero_matching_object_is_a_point() {
        let x = arrows_between_two_objects();
        let m = matching_object(&x, 0);
        assert_eq!(m.families, vec![Vec::<usize>::new()]);
        assert_eq!(m.map, vec![0, 0]);
    }
}
