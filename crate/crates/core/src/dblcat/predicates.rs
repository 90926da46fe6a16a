use super::construct::hop;
use super::double::FiniteDoubleCategory;

/// A companion of a vertical morphism `u: A -> B`: a horizontal morphism
/// `f: A -> B` with squares `phi = [top f, bottom 1_B, left u, right 1_B]`
/// and `psi = [top 1_A, bottom f, left 1_A, right u]` such that `psi`
/// beside `phi` is the vertical identity square on `f` and `psi` above
/// `phi` is the horizontal identity square on `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompanionPair {
    pub f: usize,
    pub phi: usize,
    pub psi: usize,
}

/// A conjoint of `u: A -> B`: a horizontal morphism `f: B -> A` with
/// `epsilon = [top f, bottom 1_B, left 1_B, right u]` and
/// `eta = [top 1_A, bottom f, left u, right 1_A]` such that `epsilon`
/// beside `eta` is the vertical identity square on `f` and `eta` above
/// `epsilon` is the horizontal identity square on `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConjointPair {
    pub f: usize,
    pub epsilon: usize,
    pub eta: usize,
}

pub fn find_companions(a: &FiniteDoubleCategory, u: usize) -> Vec<CompanionPair> {
    let m = &a.vmors()[u];
    let (src, tgt) = (m.src, m.tgt);
    let mut out = Vec::new();
    for &f in a.hhom(src, tgt) {
        for &phi in a.squares_with([f, a.hid(tgt), u, a.vid(tgt)]) {
            for &psi in a.squares_with([a.hid(src), f, a.vid(src), u]) {
                if a.hcomp_sq(psi, phi) == Some(a.sq_vid(f)) && a.vcomp_sq(psi, phi) == Some(a.sq_hid(u)) {
                    out.push(CompanionPair { f, phi, psi });
                }
            }
        }
    }
    out
}

/// Conjoints, computed as companions in the horizontal opposite.
pub fn find_conjoints(a: &FiniteDoubleCategory, u: usize) -> Vec<ConjointPair> {
    find_companions(&hop(a), u)
        .into_iter()
        .map(|c| ConjointPair {
            f: c.f,
            epsilon: c.phi,
            eta: c.psi,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquipmentFailure {
    NoCompanion(usize),
    NoConjoint(usize),
}

/// Whether every vertical morphism has both a companion and a conjoint.
pub fn is_equipment(a: &FiniteDoubleCategory) -> Result<(), EquipmentFailure> {
    let op = hop(a);
    for u in 0..a.vmors().len() {
        if find_companions(a, u).is_empty() {
            return Err(EquipmentFailure::NoCompanion(u));
        }
        if find_companions(&op, u).is_empty() {
            return Err(EquipmentFailure::NoConjoint(u));
        }
    }
    Ok(())
}

/// Witness that a square is weakly vertically invertible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakInverse {
    pub gamma: usize,
    pub eta: usize,
    pub eta2: usize,
    pub epsilon: usize,
    pub epsilon2: usize,
}

/// Searches for a weak vertical inverse of `alpha`: a square `gamma` going
/// back, with horizontally invertible squares relating the composite sides
/// to identities, such that
/// `eta | (gamma / alpha) = e_{a'} | eta'` and
/// `epsilon | e_a = (alpha / gamma) | epsilon'`.
pub fn is_weakly_vertically_invertible(a: &FiniteDoubleCategory, alpha: usize) -> Option<WeakInverse> {
    let s = &a.squares()[alpha];
    let (top, bottom, u, u2) = (s.top, s.bottom, s.left, s.right);
    let (sa, sb) = (a.hmors()[top].src, a.hmors()[top].tgt);
    let (sa2, sb2) = (a.hmors()[bottom].src, a.hmors()[bottom].tgt);
    let h_invertible = |bd: [usize; 4]| -> Vec<usize> {
        a.squares_with(bd)
            .iter()
            .copied()
            .filter(|&x| a.h_inverse(x).is_some())
            .collect()
    };
    for &gamma in a.squares_with_top(bottom) {
        let g = &a.squares()[gamma];
        if g.bottom != top {
            continue;
        }
        let (v, v2) = (g.left, g.right);
        let vu = a.vcomp_v(v, u).unwrap();
        let v2u2 = a.vcomp_v(v2, u2).unwrap();
        let uv = a.vcomp_v(u, v).unwrap();
        let u2v2 = a.vcomp_v(u2, v2).unwrap();
        let ga = a.vcomp_sq(gamma, alpha).unwrap();
        let ag = a.vcomp_sq(alpha, gamma).unwrap();
        for eta in h_invertible([a.hid(sa2), a.hid(sa2), a.vid(sa2), vu]) {
            let lhs1 = a.hcomp_sq(eta, ga).unwrap();
            for eta2 in h_invertible([a.hid(sb2), a.hid(sb2), a.vid(sb2), v2u2]) {
                if a.hcomp_sq(a.sq_vid(bottom), eta2) != Some(lhs1) {
                    continue;
                }
                for epsilon in h_invertible([a.hid(sa), a.hid(sa), uv, a.vid(sa)]) {
                    let lhs2 = a.hcomp_sq(epsilon, a.sq_vid(top)).unwrap();
                    for epsilon2 in h_invertible([a.hid(sb), a.hid(sb), u2v2, a.vid(sb)]) {
                        if a.hcomp_sq(ag, epsilon2) == Some(lhs2) {
                            return Some(WeakInverse {
                                gamma,
                                eta,
                                eta2,
                                epsilon,
                                epsilon2,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Witness that `u: A -> B` is an equivalence in the vertical 2-category:
/// `v: B -> A` with horizontally invertible squares `eta: 1_A => u;v` and
/// `epsilon: v;u => 1_B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerticalEquivalence {
    pub v: usize,
    pub eta: usize,
    pub epsilon: usize,
}

pub fn is_vertical_equivalence(a: &FiniteDoubleCategory, u: usize) -> Option<VerticalEquivalence> {
    let m = &a.vmors()[u];
    let (sa, sb) = (m.src, m.tgt);
    for &v in a.vhom(sb, sa) {
        let uv = a.vcomp_v(u, v).unwrap();
        let vu = a.vcomp_v(v, u).unwrap();
        let eta = a
            .squares_with([a.hid(sa), a.hid(sa), a.vid(sa), uv])
            .iter()
            .copied()
            .find(|&x| a.h_inverse(x).is_some());
        let epsilon = a
            .squares_with([a.hid(sb), a.hid(sb), vu, a.vid(sb)])
            .iter()
            .copied()
            .find(|&x| a.h_inverse(x).is_some());
        if let (Some(eta), Some(epsilon)) = (eta, epsilon) {
            return Some(VerticalEquivalence { v, eta, epsilon });
        }
    }
    None
}

/// Squares `f => g` with vertical identity sides that are vertically
/// invertible: the 2-isomorphisms of the horizontal 2-category.
pub fn h_two_isos(a: &FiniteDoubleCategory, f: usize, g: usize) -> Vec<usize> {
    let m = &a.hmors()[f];
    a.squares_with([f, g, a.vid(m.src), a.vid(m.tgt)])
        .iter()
        .copied()
        .filter(|&x| a.v_inverse(x).is_some())
        .collect()
}

/// Squares `u => w` with horizontal identity top and bottom that are
/// horizontally invertible: the 2-isomorphisms of the vertical 2-category.
pub fn v_two_isos(a: &FiniteDoubleCategory, u: usize, w: usize) -> Vec<usize> {
    let m = &a.vmors()[u];
    a.squares_with([a.hid(m.src), a.hid(m.tgt), u, w])
        .iter()
        .copied()
        .filter(|&x| a.h_inverse(x).is_some())
        .collect()
}
