//! Multiplicative divisibility: every `a` is an `n`-th power for every `n ≥ 1`.
//!
//! The `n`-th power map `p_n: b ↦ bⁿ` satisfies `p_{n+1}(b) = p_n(b)·b`, so
//! the sequence `p_1, p_2, …` is generated by a fixed step function on a finite
//! state space and is eventually periodic. Walking it until a state repeats
//! visits every distinct power map, which decides divisibility for all `n`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::tables::FiniteSemiring;

/// Powers of one element: `a¹, a², …` up to the first repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementPowers {
    pub element: usize,
    /// `powers[k]` is `a^(k+1)`; the last entry's successor is already listed.
    pub powers: Vec<usize>,
    /// Number of powers before the cycle starts.
    pub pre_period: usize,
    pub period: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerProfile {
    pub elements: Vec<ElementPowers>,
    /// Exponents `1..=pre_period + period` cover every distinct power map.
    pub map_pre_period: usize,
    pub map_period: usize,
    /// `images[k]` is `{bⁿ : b ∈ S}` for `n = k + 1`, as a sorted list.
    pub images: Vec<Vec<usize>>,
}

pub fn element_powers(s: &FiniteSemiring, a: usize) -> ElementPowers {
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let mut powers = Vec::new();
    let mut cur = a;
    loop {
        if let Some(&first) = seen.get(&cur) {
            return ElementPowers {
                element: a,
                pre_period: first,
                period: powers.len() - first,
                powers,
            };
        }
        seen.insert(cur, powers.len());
        powers.push(cur);
        cur = s.mul(cur, a);
    }
}

pub fn power_profile(s: &FiniteSemiring) -> PowerProfile {
    let elements = s.elements().map(|a| element_powers(s, a)).collect();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut images = Vec::new();
    let mut map: Vec<usize> = s.elements().collect();
    loop {
        if let Some(&first) = seen.get(&map) {
            return PowerProfile {
                elements,
                map_pre_period: first,
                map_period: images.len() - first,
                images,
            };
        }
        seen.insert(map.clone(), images.len());
        let mut img = map.clone();
        img.sort_unstable();
        img.dedup();
        images.push(img);
        map = map
            .iter()
            .enumerate()
            .map(|(b, &pb)| s.mul(pb, b))
            .collect();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divisibility {
    pub divisible: bool,
    /// Least exponent `n`, then least element `a`, with `a ∉ {bⁿ}`.
    pub witness: Option<(usize, usize)>,
}

pub fn is_mult_divisible(s: &FiniteSemiring) -> Divisibility {
    let profile = power_profile(s);
    for (k, img) in profile.images.iter().enumerate() {
        if img.len() < s.order() {
            let a = s
                .elements()
                .find(|x| img.binary_search(x).is_err())
                .expect("image is proper");
            return Divisibility {
                divisible: false,
                witness: Some((k + 1, a)),
            };
        }
    }
    Divisibility {
        divisible: true,
        witness: None,
    }
}

/// `divisible ⇒ multiplicatively idempotent`. Always true for finite inputs;
/// false means an inconsistency somewhere in this crate.
pub fn finite_band_check(s: &FiniteSemiring) -> bool {
    !is_mult_divisible(s).divisible || s.is_mult_idempotent()
}
