//! Direct characterizations of trivial fibrations, naive fibrations and
//! double biequivalences, and a report combining them with the lifting
//! searches.

use std::fmt;

use crate::dblcat::{
    find_companions, find_conjoints, h_two_isos, is_equipment, is_vertical_equivalence,
    is_weakly_vertically_invertible, v_two_isos, DoubleFunctor, FiniteDoubleCategory,
};

use super::lifting::{has_rlp_all, LiftingProblem};
use super::shapes::{anodyne_generators, generating_cofibrations};

/// The first condition of a characterization that fails, with a
/// description of the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub tag: &'static str,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.tag, self.detail)
    }
}

fn fail(tag: &'static str, detail: String) -> Result<(), Failure> {
    Err(Failure { tag, detail })
}

/// Every compatible boundary `[top, bottom, left, right]` of `a`.
fn boundaries(a: &FiniteDoubleCategory) -> impl Iterator<Item = [usize; 4]> + '_ {
    (0..a.hmors().len()).flat_map(move |t| {
        let (ts, tt) = (a.hmors()[t].src, a.hmors()[t].tgt);
        (0..a.vmors().len())
            .filter(move |&l| a.vmors()[l].src == ts)
            .flat_map(move |l| {
                (0..a.vmors().len())
                    .filter(move |&r| a.vmors()[r].src == tt)
                    .flat_map(move |r| {
                        a.hhom(a.vmors()[l].tgt, a.vmors()[r].tgt)
                            .iter()
                            .map(move |&b| [t, b, l, r])
                    })
            })
    })
}

fn describe_boundary(a: &FiniteDoubleCategory, [t, b, l, r]: [usize; 4]) -> String {
    format!(
        "[{}, {}, {}, {}]",
        a.hmors()[t].name,
        a.hmors()[b].name,
        a.vmors()[l].name,
        a.vmors()[r].name
    )
}

/// Fully faithful on squares: a bijection between squares on each
/// boundary and squares on its image.
fn squares_fully_faithful(f: &DoubleFunctor, tag: &'static str) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for bd in boundaries(a) {
        let image = [f.h[bd[0]], f.h[bd[1]], f.v[bd[2]], f.v[bd[3]]];
        let up = a.squares_with(bd);
        let down = b.squares_with(image);
        let mut hit: Vec<usize> = up.iter().map(|&s| f.sq[s]).collect();
        hit.sort_unstable();
        hit.dedup();
        if hit.len() < up.len() {
            return fail(tag, format!("two squares on {} have the same image", describe_boundary(a, bd)));
        }
        if let Some(&s) = down.iter().find(|s| !hit.contains(s)) {
            return fail(
                tag,
                format!("square {} on the image of {} has no preimage", b.squares()[s].name, describe_boundary(a, bd)),
            );
        }
    }
    Ok(())
}

/// Surjective on objects, full on horizontal and vertical morphisms and
/// fully faithful on squares. Tags: `objects`, `hmor`, `vmor`, `squares`.
pub fn is_trivial_fibration(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    if let Some(y) = (0..b.objects().len()).find(|y| !f.obj.contains(y)) {
        return fail("objects", format!("object {} has no preimage", b.objects()[y]));
    }
    for x in 0..a.objects().len() {
        for z in 0..a.objects().len() {
            for &g in b.hhom(f.obj[x], f.obj[z]) {
                if !a.hhom(x, z).iter().any(|&m| f.h[m] == g) {
                    return fail(
                        "hmor",
                        format!("{} has no preimage {} -> {}", b.hmors()[g].name, a.objects()[x], a.objects()[z]),
                    );
                }
            }
            for &v in b.vhom(f.obj[x], f.obj[z]) {
                if !a.vhom(x, z).iter().any(|&m| f.v[m] == v) {
                    return fail(
                        "vmor",
                        format!("{} has no preimage {} => {}", b.vmors()[v].name, a.objects()[x], a.objects()[z]),
                    );
                }
            }
        }
    }
    squares_fully_faithful(f, "squares")
}

/// Conditions (f1)-(f5) of a naive fibration, each `Ok` or the first
/// counterexample.
pub fn naive_fibration_conditions(f: &DoubleFunctor) -> [Result<(), Failure>; 5] {
    [f1(f), f2(f), f3(f), f4(f), f5(f)]
}

pub fn is_naive_fibration(f: &DoubleFunctor) -> Result<(), Failure> {
    naive_fibration_conditions(f).into_iter().collect()
}

/// Vertical equivalences into the image of an object lift to vertical
/// equivalences with the same image.
fn f1(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for x in 0..a.objects().len() {
        for v in 0..b.vmors().len() {
            if b.vmors()[v].tgt != f.obj[x] || is_vertical_equivalence(b, v).is_none() {
                continue;
            }
            let lifted = (0..a.vmors().len())
                .any(|u| a.vmors()[u].tgt == x && f.v[u] == v && is_vertical_equivalence(a, u).is_some());
            if !lifted {
                return fail(
                    "f1",
                    format!("vertical equivalence {} into F({}) does not lift", b.vmors()[v].name, a.objects()[x]),
                );
            }
        }
    }
    Ok(())
}

fn f2(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for u in 0..a.vmors().len() {
        let ups = find_companions(a, u);
        for c in find_companions(b, f.v[u]) {
            if !ups.iter().any(|d| f.h[d.f] == c.f && f.sq[d.phi] == c.phi && f.sq[d.psi] == c.psi) {
                return fail(
                    "f2",
                    format!("companion {} of F({}) does not lift", b.hmors()[c.f].name, a.vmors()[u].name),
                );
            }
        }
    }
    Ok(())
}

fn f3(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for u in 0..a.vmors().len() {
        let ups = find_conjoints(a, u);
        for c in find_conjoints(b, f.v[u]) {
            if !ups.iter().any(|d| f.h[d.f] == c.f && f.sq[d.epsilon] == c.epsilon && f.sq[d.eta] == c.eta) {
                return fail(
                    "f3",
                    format!("conjoint {} of F({}) does not lift", b.hmors()[c.f].name, a.vmors()[u].name),
                );
            }
        }
    }
    Ok(())
}

/// Vertically invertible globular squares onto the image of a horizontal
/// morphism lift.
fn f4(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for m in 0..a.hmors().len() {
        let (s, t) = (a.hmors()[m].src, a.hmors()[m].tgt);
        for &beta in b.squares_with_left(b.vid(f.obj[s])) {
            let sq = &b.squares()[beta];
            if sq.bottom != f.h[m] || sq.right != b.vid(f.obj[t]) || b.v_inverse(beta).is_none() {
                continue;
            }
            let lifted = a.squares_with_left(a.vid(s)).iter().any(|&alpha| {
                let q = &a.squares()[alpha];
                q.bottom == m && q.right == a.vid(t) && f.sq[alpha] == beta && a.v_inverse(alpha).is_some()
            });
            if !lifted {
                return fail("f4", format!("{} onto F({}) does not lift", sq.name, a.hmors()[m].name));
            }
        }
    }
    Ok(())
}

/// Horizontally invertible globular squares onto the image of a vertical
/// morphism lift.
fn f5(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for u in 0..a.vmors().len() {
        let (s, t) = (a.vmors()[u].src, a.vmors()[u].tgt);
        for &beta in b.squares_with_top(b.hid(f.obj[s])) {
            let sq = &b.squares()[beta];
            if sq.right != f.v[u] || sq.bottom != b.hid(f.obj[t]) || b.h_inverse(beta).is_none() {
                continue;
            }
            let lifted = a.squares_with_top(a.hid(s)).iter().any(|&alpha| {
                let q = &a.squares()[alpha];
                q.right == u && q.bottom == a.hid(t) && f.sq[alpha] == beta && a.h_inverse(alpha).is_some()
            });
            if !lifted {
                return fail("f5", format!("{} onto F({}) does not lift", sq.name, a.vmors()[u].name));
            }
        }
    }
    Ok(())
}

/// Conditions (w1)-(w4) of a double biequivalence.
pub fn biequivalence_conditions(f: &DoubleFunctor) -> [Result<(), Failure>; 4] {
    [w1(f), w2(f), w3(f), squares_fully_faithful(f, "w4")]
}

pub fn is_double_biequivalence(f: &DoubleFunctor) -> Result<(), Failure> {
    biequivalence_conditions(f).into_iter().collect()
}

fn w1(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for y in 0..b.objects().len() {
        let reached = (0..a.objects().len())
            .any(|x| b.vhom(y, f.obj[x]).iter().any(|&v| is_vertical_equivalence(b, v).is_some()));
        if !reached {
            return fail("w1", format!("no vertical equivalence from {} into the image", b.objects()[y]));
        }
    }
    Ok(())
}

fn w2(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for x in 0..a.objects().len() {
        for z in 0..a.objects().len() {
            for &v in b.vhom(f.obj[x], f.obj[z]) {
                if !a.vhom(x, z).iter().any(|&u| !v_two_isos(b, v, f.v[u]).is_empty()) {
                    return fail(
                        "w2",
                        format!(
                            "{} is not isomorphic to the image of any {} => {}",
                            b.vmors()[v].name,
                            a.objects()[x],
                            a.objects()[z]
                        ),
                    );
                }
            }
        }
    }
    Ok(())
}

fn w3(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for m in 0..b.hmors().len() {
        let found = b.squares_with_top(m).iter().any(|&s| {
            let bottom = b.squares()[s].bottom;
            (0..a.hmors().len()).any(|g| f.h[g] == bottom) && is_weakly_vertically_invertible(b, s).is_some()
        });
        if !found {
            return fail(
                "w3",
                format!("no weakly vertically invertible square from {} to an image", b.hmors()[m].name),
            );
        }
    }
    Ok(())
}

/// The variant of (w3) for equipments: every horizontal morphism between
/// images is 2-isomorphic to an image.
pub fn w3_prime(f: &DoubleFunctor) -> Result<(), Failure> {
    let (a, b) = (&*f.dom, &*f.cod);
    for x in 0..a.objects().len() {
        for z in 0..a.objects().len() {
            for &m in b.hhom(f.obj[x], f.obj[z]) {
                if !a.hhom(x, z).iter().any(|&g| !h_two_isos(b, m, f.h[g]).is_empty()) {
                    return fail(
                        "w3'",
                        format!(
                            "{} is not isomorphic to the image of any {} -> {}",
                            b.hmors()[m].name,
                            a.objects()[x],
                            a.objects()[z]
                        ),
                    );
                }
            }
        }
    }
    Ok(())
}

/// A consistency check that must hold for the verdicts of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Consistency {
    pub name: &'static str,
    pub holds: bool,
}

/// All verdicts for one double functor.
#[derive(Clone, Debug)]
pub struct ClassifyReport {
    pub trivial_fibration: Result<(), Failure>,
    pub trivial_fibration_lifting: Result<(), LiftingProblem>,
    pub naive_fibration: [Result<(), Failure>; 5],
    pub naive_fibration_lifting: Result<(), LiftingProblem>,
    pub biequivalence: [Result<(), Failure>; 4],
    /// Present when both ends are equipments.
    pub w3_prime: Option<Result<(), Failure>>,
    pub equipments: (bool, bool),
    pub consistency: Vec<Consistency>,
}

impl ClassifyReport {
    pub fn is_trivial_fibration(&self) -> bool {
        self.trivial_fibration.is_ok()
    }

    pub fn is_naive_fibration(&self) -> bool {
        self.naive_fibration.iter().all(Result::is_ok)
    }

    pub fn is_biequivalence(&self) -> bool {
        self.biequivalence.iter().all(Result::is_ok)
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency.iter().all(|c| c.holds)
    }
}

pub fn classify(f: &DoubleFunctor) -> ClassifyReport {
    let trivial_fibration = is_trivial_fibration(f);
    let trivial_fibration_lifting = has_rlp_all(f, &generating_cofibrations());
    let naive_fibration = naive_fibration_conditions(f);
    let naive_fibration_lifting = has_rlp_all(f, &anodyne_generators());
    let biequivalence = biequivalence_conditions(f);
    let equipments = (is_equipment(&f.dom).is_ok(), is_equipment(&f.cod).is_ok());
    let both = equipments.0 && equipments.1;
    let w3p = both.then(|| w3_prime(f));

    let tf = trivial_fibration.is_ok();
    let nf = naive_fibration.iter().all(Result::is_ok);
    let be = biequivalence.iter().all(Result::is_ok);
    let mut consistency = vec![
        Consistency {
            name: "trivial fibration agrees with lifting against I",
            holds: tf == trivial_fibration_lifting.is_ok(),
        },
        Consistency {
            name: "naive fibration agrees with lifting against J",
            holds: nf == naive_fibration_lifting.is_ok(),
        },
        Consistency {
            name: "naive fibration and biequivalence implies trivial fibration",
            holds: !(nf && be) || tf,
        },
    ];
    if both {
        let f145 = [0, 3, 4].iter().all(|&i| naive_fibration[i].is_ok());
        let be_prime = biequivalence[0].is_ok()
            && biequivalence[1].is_ok()
            && biequivalence[3].is_ok()
            && w3p.as_ref().is_some_and(Result::is_ok);
        consistency.extend([
            Consistency {
                name: "naive fibration iff (f1), (f4) and (f5)",
                holds: nf == f145,
            },
            Consistency {
                name: "trivial fibration iff naive fibration and biequivalence",
                holds: tf == (nf && be),
            },
            Consistency {
                name: "(w3) and (w3') give the same verdict",
                holds: be == be_prime,
            },
        ]);
    }
    ClassifyReport {
        trivial_fibration,
        trivial_fibration_lifting,
        naive_fibration,
        naive_fibration_lifting,
        biequivalence,
        w3_prime: w3p,
        equipments,
        consistency,
    }
}
