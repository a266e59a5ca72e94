use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::SignedPerm;

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SpecialName {
    T33_PLUS,
    O34_PLUS,
    T33,
    T33_STAR,
    O34,
    Other(usize),
}

impl SpecialName {
    pub fn order(self) -> usize {
        match self {
            SpecialName::T33_PLUS => 12,
            SpecialName::O34_PLUS | SpecialName::T33 | SpecialName::T33_STAR => 24,
            SpecialName::O34 => 48,
            SpecialName::Other(n) => n,
        }
    }
}

impl fmt::Display for SpecialName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialName::T33_PLUS => f.write_str("[3,3]+"),
            SpecialName::O34_PLUS => f.write_str("[3,4]+"),
            SpecialName::T33 => f.write_str("[3,3]"),
            SpecialName::T33_STAR => f.write_str("[3,3]*"),
            SpecialName::O34 => f.write_str("[3,4]"),
            SpecialName::Other(n) => write!(f, "group of order {n}"),
        }
    }
}

/// A finite group of signed permutations, the linear parts of a
/// crystallographic group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecialGroup {
    pub elements: BTreeSet<SignedPerm>,
    pub name: SpecialName,
}

impl SpecialGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &SignedPerm) -> bool {
        self.elements.contains(g)
    }

    pub fn is_subgroup_of(&self, other: &SpecialGroup) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// The standard copy of a named group inside the signed permutations.
    pub fn named(name: SpecialName) -> Option<SpecialGroup> {
        let p = SignedPerm::from_images;
        let gens = match name {
            SpecialName::T33_PLUS => vec![p([2, 3, 1]), p([-1, -2, 3])],
            SpecialName::O34_PLUS => vec![p([2, 3, 1]), p([2, -1, 3])],
            SpecialName::T33 => vec![p([2, 3, 1]), p([-1, -2, 3]), p([2, 1, 3])],
            SpecialName::T33_STAR => vec![p([2, 3, 1]), p([-1, -2, 3]), SignedPerm::NEG_IDENTITY],
            SpecialName::O34 => vec![p([2, 3, 1]), p([2, -1, 3]), SignedPerm::NEG_IDENTITY],
            SpecialName::Other(_) => return None,
        };
        let g = special_group_closure(&gens);
        debug_assert_eq!(g.name, name);
        Some(g)
    }
}

impl std::str::FromStr for SpecialName {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Self> {
        [
            SpecialName::T33_PLUS,
            SpecialName::O34_PLUS,
            SpecialName::T33,
            SpecialName::T33_STAR,
            SpecialName::O34,
        ]
        .into_iter()
        .find(|n| n.to_string() == s.trim())
        .ok_or_else(|| crate::error::Error::Parse(format!("unknown special group {s:?}")))
    }
}

/// Closes a set of signed permutations under products.
pub fn special_group_closure(gens: &[SignedPerm]) -> SpecialGroup {
    let mut elements = BTreeSet::from([SignedPerm::IDENTITY]);
    let mut frontier = vec![SignedPerm::IDENTITY];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = g.then(s);
            if elements.insert(h) {
                frontier.push(h);
            }
        }
    }
    let name = name_group(&elements);
    SpecialGroup { elements, name }
}

/// Identifies the group from its order, determinants, `−I` and the number
/// of elements of order 3 and 4.
fn name_group(elements: &BTreeSet<SignedPerm>) -> SpecialName {
    let n = elements.len();
    let rotations = elements.iter().all(|g| g.det() == 1);
    let central = elements.contains(&SignedPerm::NEG_IDENTITY);
    let order3 = elements.iter().filter(|g| g.order() == 3).count();
    let order4 = elements.iter().filter(|g| g.order() == 4).count();
    match (n, rotations, central, order3, order4) {
        (12, true, _, 8, _) => SpecialName::T33_PLUS,
        (24, true, _, 8, 6) => SpecialName::O34_PLUS,
        (24, false, true, 8, 0) => SpecialName::T33_STAR,
        (24, false, false, 8, 6) => SpecialName::T33,
        (48, ..) => SpecialName::O34,
        _ => SpecialName::Other(n),
    }
}

/// Decides whether `h` is isomorphic to a subgroup of `g` by searching for
/// an injective homomorphism on a generating set of `h`.
pub fn embeds_into(h: &SpecialGroup, g: &SpecialGroup) -> bool {
    if h.order() > g.order() || !g.order().is_multiple_of(h.order()) {
        return false;
    }
    let gens = small_generating_set(h);
    let targets: Vec<SignedPerm> = g.elements.iter().copied().collect();
    let mut images = vec![SignedPerm::IDENTITY; gens.len()];
    search_images(h, &gens, &targets, &mut images, 0)
}

fn search_images(
    h: &SpecialGroup,
    gens: &[SignedPerm],
    targets: &[SignedPerm],
    images: &mut Vec<SignedPerm>,
    k: usize,
) -> bool {
    if k == gens.len() {
        return extends_to_embedding(h, gens, images);
    }
    for t in targets {
        if t.order() != gens[k].order() {
            continue;
        }
        images[k] = *t;
        if search_images(h, gens, targets, images, k + 1) {
            return true;
        }
    }
    false
}

/// Builds the map `word(gens) ↦ word(images)` over the whole of `h` and
/// checks that it is well defined and injective.
fn extends_to_embedding(h: &SpecialGroup, gens: &[SignedPerm], images: &[SignedPerm]) -> bool {
    let mut map = std::collections::BTreeMap::from([(SignedPerm::IDENTITY, SignedPerm::IDENTITY)]);
    let mut frontier = vec![SignedPerm::IDENTITY];
    while let Some(x) = frontier.pop() {
        let fx = map[&x];
        for (s, fs) in gens.iter().zip(images) {
            let y = x.then(s);
            let fy = fx.then(fs);
            match map.get(&y) {
                Some(prev) if *prev != fy => return false,
                Some(_) => {}
                None => {
                    map.insert(y, fy);
                    frontier.push(y);
                }
            }
        }
    }
    let image: BTreeSet<_> = map.values().collect();
    map.len() == h.order() && image.len() == h.order()
}

fn small_generating_set(h: &SpecialGroup) -> Vec<SignedPerm> {
    let mut gens: Vec<SignedPerm> = Vec::new();
    let mut span = special_group_closure(&gens).elements;
    // Greedily add the element of largest order not yet generated.
    let mut candidates: Vec<SignedPerm> = h.elements.iter().copied().collect();
    candidates.sort_by_key(|g| std::cmp::Reverse(g.order()));
    for c in candidates {
        if span.len() == h.order() {
            break;
        }
        if !span.contains(&c) {
            gens.push(c);
            span = special_group_closure(&gens).elements;
        }
    }
    gens
}
