//! The action of `GL(2, Z/n) × S₅` on six-tuples.
//!
//! Every symmetry is a `12×12` matrix over `Z/n`. `GL(2)` acts on each of the
//! six slots; the four transpositions `(01)…(04)` of `S₅` recombine slots.
//! Orbits are found by breadth-first search over the tuple set using only
//! the generators, so the cost is `O(|set| · |generators|)`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::covers::SixTuple;
use crate::field::{FMat12, FMat2, Modulus};
use crate::{Error, Result};

/// How an element was built: `linear` on every slot after the word of
/// transpositions (applied left to right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub linear: FMat2,
    pub word: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryElement {
    pub mat: FMat12,
    pub provenance: Option<Provenance>,
}

/// Slot recombinations of the four transpositions on `(u1, u2, u3, v1, v2, v3)`.
/// Row `i` lists which input slots are summed into output slot `i`.
///
/// For `j ≤ 3`, `(0j)` fixes `u_j`, swaps the other two `u_i` with
/// exceptional loop images and sends `v_j` to `e0`. `(04)` replaces each
/// `v_j` by `e_j`.
const TRANSPOSITION_SLOTS: [[[u8; 6]; 6]; 4] = [
    // (01): (u1, e3, e2, e0, v2, v3)
    [
        [1, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0],
        [0, 1, 0, 1, 0, 1],
        [1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    // (02): (e3, u2, e1, v1, e0, v3)
    [
        [0, 0, 1, 1, 1, 0],
        [0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 0, 0],
        [1, 1, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
    ],
    // (03): (e2, e1, u3, v1, v2, e0)
    [
        [0, 1, 0, 1, 0, 1],
        [1, 0, 0, 0, 1, 1],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [1, 1, 1, 0, 0, 0],
    ],
    // (04): (u1, u2, u3, e1, e2, e3)
    [
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 1],
        [0, 0, 1, 1, 1, 0],
    ],
];

const V3: usize = 5;

/// Extends a slot map `P`, which only needs to be an involution on tuples
/// with vanishing sum, to `P·(I − z·1ᵀ) + z·1ᵀ` with `z` the `v3` slot. The
/// result agrees with `P` on the hyperplane, fixes the sum, and is an
/// involution on all of `(Z/n)^12` whenever `P` is one on the hyperplane.
fn sum_defect_extension(m: Modulus, p: &[[u8; 6]; 6]) -> [[u8; 6]; 6] {
    let mut out = [[0u8; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            let v = p[i][j] as i64 - p[i][V3] as i64 + (i == V3) as i64;
            out[i][j] = m.scalar(v).value();
        }
    }
    out
}

fn identity_slots() -> [[u8; 6]; 6] {
    let mut id = [[0u8; 6]; 6];
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = 1;
    }
    id
}

impl SymmetryElement {
    pub fn identity() -> Self {
        SymmetryElement {
            mat: FMat12::identity(),
            provenance: Some(Provenance { linear: FMat2::IDENTITY, word: Vec::new() }),
        }
    }

    pub fn apply(&self, m: Modulus, t: &SixTuple) -> SixTuple {
        SixTuple::from_coords(self.mat.apply(m, &t.coords()))
    }

    /// `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, m: Modulus, rhs: &SymmetryElement) -> SymmetryElement {
        let provenance = match (&self.provenance, &rhs.provenance) {
            (Some(a), Some(b)) => {
                let mut word = b.word.clone();
                word.extend_from_slice(&a.word);
                Some(Provenance { linear: m.mat2_mul(a.linear, b.linear), word })
            }
            _ => None,
        };
        SymmetryElement { mat: self.mat.mul(m, &rhs.mat), provenance }
    }
}

/// The transposition `(0k)`, `k ∈ 1..=4`.
pub fn transposition(m: Modulus, k: u8) -> SymmetryElement {
    assert!((1..=4).contains(&k), "transpositions are (01)..(04)");
    let slots = sum_defect_extension(m, &TRANSPOSITION_SLOTS[k as usize - 1]);
    SymmetryElement {
        mat: FMat12::kron(m, &slots, FMat2::IDENTITY),
        provenance: Some(Provenance { linear: FMat2::IDENTITY, word: vec![k] }),
    }
}

/// `(01), (02), (03), (04)`.
pub fn s5_generators(m: Modulus) -> [SymmetryElement; 4] {
    [1, 2, 3, 4].map(|k| transposition(m, k))
}

/// `g` acting on every slot.
pub fn gl2_action(m: Modulus, g: FMat2) -> Result<SymmetryElement> {
    if m.mat2_det(g).is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(SymmetryElement {
        mat: FMat12::kron(m, &identity_slots(), g),
        provenance: Some(Provenance { linear: g, word: Vec::new() }),
    })
}

/// The four transpositions followed by generators of `GL(2, Z/n)`.
pub fn generators(m: Modulus) -> Vec<SymmetryElement> {
    let mut gens: Vec<SymmetryElement> = s5_generators(m).into();
    for g in m.gl2_generators() {
        gens.push(gl2_action(m, g).expect("generators are invertible"));
    }
    gens
}

#[derive(Clone, Debug)]
pub struct GroupClosure {
    pub elements: BTreeSet<FMat12>,
}

impl GroupClosure {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, g: &FMat12) -> bool {
        self.elements.contains(g)
    }
}

/// The finite matrix group generated by `gens`.
pub fn group_closure(m: Modulus, gens: &[SymmetryElement]) -> GroupClosure {
    let mut elements = BTreeSet::new();
    let mut queue = VecDeque::new();
    elements.insert(FMat12::identity());
    queue.push_back(FMat12::identity());
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.mat.mul(m, &x);
            if !elements.contains(&y) {
                elements.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    GroupClosure { elements }
}

pub fn s5_closure(m: Modulus) -> GroupClosure {
    group_closure(m, &s5_generators(m))
}

pub fn full_closure(m: Modulus) -> GroupClosure {
    group_closure(m, &generators(m))
}

pub fn commutes(m: Modulus, a: &FMat12, b: &FMat12) -> bool {
    a.mul(m, b) == b.mul(m, a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub id: usize,
    /// The lexicographically smallest member.
    pub representative: SixTuple,
    pub size: u64,
    /// `|G| / size`.
    pub stabilizer_order: u64,
}

#[derive(Clone, Debug)]
pub struct OrbitPartition {
    m: Modulus,
    keys: Vec<u64>,
    ids: Vec<u32>,
    pub orbits: Vec<Orbit>,
}

impl OrbitPartition {
    pub fn orbit_of(&self, t: &SixTuple) -> Option<usize> {
        self.keys.binary_search(&t.index(self.m)).ok().map(|i| self.ids[i] as usize)
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.orbits.iter().map(|o| o.size).collect()
    }

    pub fn total(&self) -> u64 {
        self.keys.len() as u64
    }
}

/// Partitions `tuples` into orbits of the group generated by `gens`, whose
/// order is `group_order`. Orbits come out ordered by representative.
pub fn orbits(
    m: Modulus,
    tuples: &[SixTuple],
    gens: &[SymmetryElement],
    group_order: u64,
) -> Result<OrbitPartition> {
    let mut sorted: Vec<SixTuple> = tuples.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let keys: Vec<u64> = sorted.iter().map(|t| t.index(m)).collect();

    const UNSEEN: u32 = u32::MAX;
    let mut ids = vec![UNSEEN; sorted.len()];
    let mut orbits = Vec::new();
    let mut queue = VecDeque::new();

    for start in 0..sorted.len() {
        if ids[start] != UNSEEN {
            continue;
        }
        let id = orbits.len() as u32;
        ids[start] = id;
        queue.push_back(start);
        let mut size = 0u64;
        while let Some(i) = queue.pop_front() {
            size += 1;
            for g in gens {
                let image = g.apply(m, &sorted[i]);
                let j = keys
                    .binary_search(&image.index(m))
                    .map_err(|_| Error::NotClosed { tuple: sorted[i] })?;
                if ids[j] == UNSEEN {
                    ids[j] = id;
                    queue.push_back(j);
                }
            }
        }
        // scanning in sorted order, the first member met is the minimum
        orbits.push(Orbit {
            id: id as usize,
            representative: sorted[start],
            size,
            stabilizer_order: group_order / size,
        });
    }
    Ok(OrbitPartition { m, keys, ids, orbits })
}
