use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::signature::{FoldsSignature, KindId};

use super::formula::{Formula, Sort, VarDecl};

/// Weights for the shape of each non-leaf node; the chance that a
/// quantifier node introduces a whole context for a target kind rather than
/// a single variable; the chance of reusing a suitable variable when
/// building such a context; and the chance of a constant at a leaf where an
/// atom would be possible.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub connective: f64,
    pub quantifier: f64,
    pub atom: f64,
    pub context_block: f64,
    pub reuse: f64,
    pub leaf_constant: f64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            connective: 0.4,
            quantifier: 0.4,
            atom: 0.2,
            context_block: 0.5,
            reuse: 0.5,
            leaf_constant: 0.25,
        }
    }
}

pub fn generate_sentences(sig: &FoldsSignature, depth: usize, count: usize, seed: u64) -> Vec<Formula> {
    generate_sentences_with(sig, depth, count, seed, &GeneratorConfig::default())
}

/// Deterministic random sentences of depth at most `depth`. Bound variables
/// are named `v0`, `v1`, ... in order of introduction.
pub fn generate_sentences_with(
    sig: &FoldsSignature,
    depth: usize,
    count: usize,
    seed: u64,
    config: &GeneratorConfig,
) -> Vec<Formula> {
    let mut g = Generator {
        sig,
        rng: ChaCha8Rng::seed_from_u64(seed),
        config,
        scope: Vec::new(),
        fresh: 0,
    };
    (0..count)
        .map(|_| {
            g.fresh = 0;
            g.formula(depth)
        })
        .collect()
}

struct Generator<'a> {
    sig: &'a FoldsSignature,
    rng: ChaCha8Rng,
    config: &'a GeneratorConfig,
    scope: Vec<(VarDecl, KindId)>,
    fresh: usize,
}

impl Generator<'_> {
    fn formula(&mut self, depth: usize) -> Formula {
        if depth == 0 {
            return self.leaf();
        }
        let c = self.config;
        let total = c.connective + c.quantifier + c.atom;
        let roll = self.rng.gen::<f64>() * total;
        if roll < c.connective {
            let a = self.formula(depth - 1);
            let b = self.formula(depth - 1);
            match self.rng.gen_range(0..3) {
                0 => Formula::and(a, b),
                1 => Formula::or(a, b),
                _ => Formula::implies(a, b),
            }
        } else if roll < c.connective + c.quantifier {
            if self.rng.gen_bool(c.context_block) {
                if let Some(f) = self.context_block(depth) {
                    return f;
                }
            }
            self.quantifier(depth)
        } else {
            self.leaf()
        }
    }

    fn leaf(&mut self) -> Formula {
        let sig = self.sig;
        let atoms: Vec<(KindId, Vec<String>)> = sig
            .relation_kinds()
            .flat_map(|k| self.families(k).into_iter().map(move |f| (k, f)))
            .collect();
        if atoms.is_empty() || self.rng.gen_bool(self.config.leaf_constant) {
            return if self.rng.gen_bool(0.5) { Formula::True } else { Formula::False };
        }
        let (k, args) = atoms.choose(&mut self.rng).unwrap().clone();
        Formula::Atom(Sort {
            kind: sig.kind_name(k).to_string(),
            args,
        })
    }

    /// Draws the quantified kind bottom-up: kinds with no variable in scope
    /// yet are weighted by `(1 + degree)^3`, others by 1, so that sorts of
    /// higher degree appear as soon as their dependencies are available.
    fn quantifier(&mut self, depth: usize) -> Formula {
        let sig = self.sig;
        let options: Vec<(KindId, Vec<Vec<String>>)> = (0..sig.kind_count())
            .filter(|&k| !sig.is_relation_kind(k))
            .map(|k| (k, self.families(k)))
            .filter(|(_, fs)| !fs.is_empty())
            .collect();
        let weight = |k: KindId| {
            if self.scope.iter().any(|s| s.1 == k) {
                1.0
            } else {
                (1.0 + sig.degree(k) as f64).powi(3)
            }
        };
        let Ok((k, families)) = options.choose_weighted(&mut self.rng, |o| weight(o.0)).cloned() else {
            return self.leaf();
        };
        let args = families.choose(&mut self.rng).unwrap().clone();
        let decl = VarDecl {
            name: format!("v{}", self.fresh),
            sort: Sort {
                kind: sig.kind_name(k).to_string(),
                args,
            },
        };
        self.fresh += 1;
        let forall = self.rng.gen_bool(0.5);
        self.scope.push((decl.clone(), k));
        let body = Box::new(self.formula(depth - 1));
        self.scope.pop();
        if forall {
            Formula::Forall(decl, body)
        } else {
            Formula::Exists(decl, body)
        }
    }

    /// Picks a kind of positive degree, maps the boundary of its
    /// representable into the scope bottom-up (reusing variables at random,
    /// declaring fresh ones otherwise), declares a variable of the kind itself
    /// unless it is a relation kind, and closes the new variables with
    /// quantifiers outside-in. Falls back to maximal reuse when the random
    /// draw needs more than `depth` variables.
    fn context_block(&mut self, depth: usize) -> Option<Formula> {
        let sig = self.sig;
        let targets: Vec<KindId> = (0..sig.kind_count()).filter(|&k| sig.degree(k) > 0).collect();
        let &target = targets.choose(&mut self.rng)?;
        let base = self.scope.len();
        let fresh = self.fresh;
        for reuse in [self.config.reuse, 1.0] {
            self.declare_boundary(target, reuse);
            if self.scope.len() - base <= depth && self.scope.len() > base {
                break;
            }
            self.scope.truncate(base);
            self.fresh = fresh;
        }
        let n = self.scope.len() - base;
        if n == 0 {
            return None;
        }
        let quantifiers: Vec<bool> = (0..n).map(|_| self.rng.gen_bool(0.5)).collect();
        let mut body = self.formula(depth - n);
        for (i, forall) in quantifiers.into_iter().enumerate().rev() {
            let decl = self.scope.pop().expect("declared").0;
            debug_assert_eq!(self.scope.len(), base + i);
            body = if forall {
                Formula::Forall(decl, Box::new(body))
            } else {
                Formula::Exists(decl, Box::new(body))
            };
        }
        Some(body)
    }

    /// Pushes onto the scope the variables needed for a family of `target`
    /// (and one of `target` itself when it is not a relation kind).
    fn declare_boundary(&mut self, target: KindId, reuse: f64) {
        let sig = self.sig;
        let fan = sig.fan(target);
        let mut order: Vec<usize> = (0..fan.classes.len()).collect();
        order.sort_by_key(|&c| sig.degree(fan.classes[c].target));
        let mut image: Vec<Option<String>> = vec![None; fan.classes.len()];
        for c in order {
            let class = &fan.classes[c];
            let args: Vec<String> = sig
                .out_arrows(class.target)
                .iter()
                .map(|&b| {
                    let mut w = class.canonical.clone();
                    w.push(b);
                    image[fan.class_of(&w).expect("word out of the fan")].clone().expect("lower degree first")
                })
                .collect();
            image[c] = Some(self.pick_or_declare(class.target, args, reuse));
        }
        if !sig.is_relation_kind(target) {
            let args = sig
                .out_arrows(target)
                .iter()
                .map(|&a| image[fan.class_of(&[a]).expect("generating arrow")].clone().unwrap())
                .collect();
            self.declare(target, args);
        }
    }

    fn pick_or_declare(&mut self, k: KindId, args: Vec<String>, reuse: f64) -> String {
        let candidates: Vec<String> = self
            .scope
            .iter()
            .filter(|(d, dk)| *dk == k && d.sort.args == args)
            .map(|(d, _)| d.name.clone())
            .collect();
        if !candidates.is_empty() && self.rng.gen_bool(reuse) {
            return candidates.choose(&mut self.rng).unwrap().clone();
        }
        self.declare(k, args)
    }

    fn declare(&mut self, k: KindId, args: Vec<String>) -> String {
        let name = format!("v{}", self.fresh);
        self.fresh += 1;
        self.scope.push((
            VarDecl {
                name: name.clone(),
                sort: Sort {
                    kind: self.sig.kind_name(k).to_string(),
                    args,
                },
            },
            k,
        ));
        name
    }

    /// Compatible families for `k` drawn from the variables in scope, by
    /// backtracking over the generating arrows.
    fn families(&self, k: KindId) -> Vec<Vec<String>> {
        let out = self.sig.out_arrows(k);
        let mut acc = Vec::new();
        let mut chosen = Vec::new();
        self.extend(k, out, &mut chosen, &mut acc);
        acc
    }

    fn extend(&self, k: KindId, out: &[usize], chosen: &mut Vec<usize>, acc: &mut Vec<Vec<String>>) {
        let sig = self.sig;
        if !self.consistent(k, out, chosen) {
            return;
        }
        if chosen.len() == out.len() {
            acc.push(chosen.iter().map(|&i| self.scope[i].0.name.clone()).collect());
            return;
        }
        let target = sig.arrow(out[chosen.len()]).target;
        for i in 0..self.scope.len() {
            if self.scope[i].1 == target {
                chosen.push(i);
                self.extend(k, out, chosen, acc);
                chosen.pop();
            }
        }
    }

    /// Checks the relations out of `k` whose two sides start at arrows that
    /// are already chosen.
    fn consistent(&self, k: KindId, out: &[usize], chosen: &[usize]) -> bool {
        let sig = self.sig;
        let follow = |word: &[usize]| -> Option<usize> {
            let p = out.iter().position(|&a| a == word[0])?;
            let mut v = *chosen.get(p)?;
            for &a in &word[1..] {
                let (decl, vk) = &self.scope[v];
                let q = sig.out_arrows(*vk).iter().position(|&b| b == a).unwrap();
                let name = &decl.sort.args[q];
                v = self.scope.iter().rposition(|s| &s.0.name == name).unwrap();
            }
            Some(v)
        };
        sig.relations()
            .iter()
            .filter(|r| r.source == k)
            .all(|r| match (follow(&r.lhs), follow(&r.rhs)) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            })
    }
}
