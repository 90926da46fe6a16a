use std::sync::Arc;

use crate::error::SignatureError;

use super::format::{parse_raw_signature, parse_relation};
use super::{FoldsSignature, RawRelation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinSignature {
    Cat,
    TwoCat,
    DblCat,
}

impl BuiltinSignature {
    pub const ALL: [BuiltinSignature; 3] = [
        BuiltinSignature::Cat,
        BuiltinSignature::TwoCat,
        BuiltinSignature::DblCat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinSignature::Cat => "cat",
            BuiltinSignature::TwoCat => "twocat",
            BuiltinSignature::DblCat => "dblcat",
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            BuiltinSignature::Cat => CAT,
            BuiltinSignature::TwoCat => TWOCAT,
            BuiltinSignature::DblCat => DBLCAT,
        }
    }
}

impl std::str::FromStr for BuiltinSignature {
    type Err = SignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cat" => Ok(BuiltinSignature::Cat),
            "twocat" | "2cat" => Ok(BuiltinSignature::TwoCat),
            "dblcat" => Ok(BuiltinSignature::DblCat),
            other => Err(SignatureError::UnknownBuiltin(other.to_string())),
        }
    }
}

pub fn builtin_signature(which: BuiltinSignature) -> Arc<FoldsSignature> {
    let raw = parse_raw_signature(which.text()).expect("builtin signature parses");
    Arc::new(FoldsSignature::from_raw(&raw).expect("builtin signature validates"))
}

/// A relation in the form originally published alongside the signature,
/// translated to diagrammatic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginalRelation {
    pub relation: RawRelation,
    /// Whether the builtin signature uses a different equation in its place.
    pub corrected: bool,
}

/// The originally published relation list of a builtin signature. A few
/// entries contain typos (a tautology, a wrong arrow, an arrow that does not
/// exist); the builtin signature replaces them and this list keeps them for
/// auditing against the realization diagrams.
pub fn original_relations(which: BuiltinSignature) -> Vec<OriginalRelation> {
    let text = match which {
        BuiltinSignature::Cat => CAT_ORIGINAL,
        BuiltinSignature::TwoCat => TWOCAT_ORIGINAL,
        BuiltinSignature::DblCat => DBLCAT_ORIGINAL,
    };
    crate::text::lines(text)
        .map(|(n, l)| {
            let (l, corrected) = match l.strip_prefix('!') {
                Some(rest) => (rest.trim(), true),
                None => (l, false),
            };
            OriginalRelation {
                relation: parse_relation(n, l).expect("original relation parses"),
                corrected,
            }
        })
        .collect()
}

const CAT: &str = "\
kinds: O A I' T' E'
relsymbols: I' T' E'
arrows:
  s: A -> O
  t: A -> O
  i: I' -> A
  l: T' -> A
  r: T' -> A
  c: T' -> A
  l: E' -> A
  r: E' -> A
relations:
  I': i . s = i . t
  T': l . s = c . s
  T': c . t = r . t
  T': l . t = r . s
  E': l . s = r . s
  E': l . t = r . t
";

const CAT_ORIGINAL: &str = "\
I': i . s = i . t
! T': l . s = l . s
T': c . t = r . t
T': l . t = r . s
E': l . s = r . s
E': l . t = r . t
";

const TWOCAT: &str = "\
kinds: C0 C1 C2 T I1 I2' V' H' E'
relsymbols: I2' V' H' E'
arrows:
  s: C1 -> C0
  t: C1 -> C0
  s: C2 -> C1
  t: C2 -> C1
  l: T -> C1
  r: T -> C1
  c: T -> C1
  i: I1 -> C1
  i: I2' -> C2
  l: V' -> C2
  r: V' -> C2
  c: V' -> C2
  l: H' -> C2
  r: H' -> C2
  c: H' -> C2
  s: H' -> T
  t: H' -> T
  l: E' -> C2
  r: E' -> C2
relations:
  I1: i . s = i . t
  T: l . s = c . s
  T: c . t = r . t
  T: l . t = r . s
  C2: s . s = t . s
  C2: s . t = t . t
  V': l . s = c . s
  V': c . t = r . t
  V': l . t = r . s
  I2': i . s = i . t
  E': l . s = r . s
  E': l . t = r . t
  H': l . s = s . l
  H': r . s = s . r
  H': c . s = s . c
  H': l . t = t . l
  H': r . t = t . r
  H': c . t = t . c
";

const TWOCAT_ORIGINAL: &str = "\
I1: i . s = i . t
! T: l . s = l . s
T: c . t = r . t
T: l . t = r . s
C2: s . s = t . s
C2: s . t = t . t
V': l . s = c . s
V': c . t = r . t
V': l . t = r . s
I2': i . s = i . t
E': l . s = r . s
E': l . t = r . t
H': l . s = s . l
H': r . s = s . r
H': c . s = s . c
H': l . t = t . l
H': r . t = t . r
H': c . t = t . c
";

const DBLCAT: &str = "\
kinds: O H V S I_H T_H I_V T_V I_hor' I_ver' H_comp' V_comp' E'
relsymbols: I_hor' I_ver' H_comp' V_comp' E'
arrows:
  s: H -> O
  t: H -> O
  s: V -> O
  t: V -> O
  u: S -> H
  d: S -> H
  l: S -> V
  r: S -> V
  i_H: I_H -> H
  l: T_H -> H
  r: T_H -> H
  c: T_H -> H
  i_V: I_V -> V
  u: T_V -> V
  d: T_V -> V
  c: T_V -> V
  i_shor: I_hor' -> S
  u: I_hor' -> I_H
  d: I_hor' -> I_H
  i_sver: I_ver' -> S
  l: I_ver' -> I_V
  r: I_ver' -> I_V
  l: H_comp' -> S
  r: H_comp' -> S
  c: H_comp' -> S
  u: H_comp' -> T_H
  d: H_comp' -> T_H
  u: V_comp' -> S
  d: V_comp' -> S
  c: V_comp' -> S
  l: V_comp' -> T_V
  r: V_comp' -> T_V
  b: E' -> S
  f: E' -> S
relations:
  I_V: i_V . s = i_V . t
  T_V: u . s = c . s
  T_V: d . t = c . t
  T_V: u . t = d . s
  I_H: i_H . s = i_H . t
  T_H: l . s = c . s
  T_H: r . t = c . t
  T_H: l . t = r . s
  S: u . s = l . s
  S: l . t = d . s
  S: u . t = r . s
  S: d . t = r . t
  I_hor': i_shor . u = u . i_H
  I_hor': i_shor . d = d . i_H
  I_hor': i_shor . l = i_shor . r
  I_ver': i_sver . l = l . i_V
  I_ver': i_sver . r = r . i_V
  I_ver': i_sver . u = i_sver . d
  E': b . u = f . u
  E': b . d = f . d
  E': b . l = f . l
  E': b . r = f . r
  V_comp': u . u = c . u
  V_comp': d . d = c . d
  V_comp': u . d = d . u
  V_comp': u . l = l . u
  V_comp': d . l = l . d
  V_comp': c . l = l . c
  V_comp': u . r = r . u
  V_comp': d . r = r . d
  V_comp': c . r = r . c
  H_comp': c . l = l . l
  H_comp': c . r = r . r
  H_comp': l . r = r . l
  H_comp': c . u = u . c
  H_comp': l . u = u . l
  H_comp': r . u = u . r
  H_comp': c . d = d . c
  H_comp': l . d = d . l
  H_comp': r . d = d . r
";

const DBLCAT_ORIGINAL: &str = "\
I_V: i_V . s = i_V . t
T_V: u . s = c . s
T_V: d . t = c . t
! T_V: u . t = c . s
I_H: i_H . s = i_H . t
T_H: l . s = c . s
T_H: r . t = c . t
T_H: l . t = r . s
S: u . s = l . s
S: d . s = l . t
S: u . t = r . s
S: d . t = r . t
! I_hor': u_shor . u = u . i_H
I_hor': i_shor . d = d . i_H
I_hor': i_shor . l = i_shor . r
I_ver': i_sver . l = l . i_V
I_ver': i_sver . r = r . i_V
! I_ver': i_sver . r = i_sver . l
E': b . u = f . u
E': b . d = f . d
E': b . l = f . l
E': b . r = f . r
V_comp': u . u = c . u
V_comp': d . d = c . d
V_comp': u . d = d . u
V_comp': u . l = l . u
V_comp': d . l = l . d
V_comp': c . l = l . c
V_comp': u . r = r . u
V_comp': d . r = r . d
V_comp': c . r = r . c
H_comp': c . l = l . l
H_comp': c . r = r . r
! H_comp': t . l = r . l
H_comp': c . u = u . c
H_comp': l . u = u . l
H_comp': r . d = d . r
H_comp': c . d = d . c
H_comp': r . u = u . r
H_comp': l . d = d . l
";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::format::serialize_signature;
    use crate::signature::parse_signature;

    #[test]
    fn degrees_of_builtins() {
        let cat = builtin_signature(BuiltinSignature::Cat);
        let deg: Vec<_> = (0..cat.kind_count()).map(|k| cat.degree(k)).collect();
        assert_eq!(deg, vec![0, 1, 2, 2, 2]);
        assert_eq!(cat.arrows().len(), 8);

        let dbl = builtin_signature(BuiltinSignature::DblCat);
        assert_eq!(dbl.kind_count(), 13);
        let deg: Vec<_> = (0..13).map(|k| dbl.degree(k)).collect();
        assert_eq!(deg, vec![0, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3]);

        let two = builtin_signature(BuiltinSignature::TwoCat);
        assert_eq!(two.kind_count(), 9);
    }

    #[test]
    fn builtins_round_trip() {
        for b in BuiltinSignature::ALL {
            let sig = builtin_signature(b);
            let back = parse_signature(&serialize_signature(&sig)).unwrap();
            assert_eq!(*sig, back);
        }
    }

    #[test]
    fn corrected_entries_are_flagged() {
        let n: Vec<usize> = BuiltinSignature::ALL
            .iter()
            .map(|&b| original_relations(b).iter().filter(|r| r.corrected).count())
            .collect();
        assert_eq!(n, vec![1, 1, 4]);
    }
}
