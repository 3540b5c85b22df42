//! Set families over `[n]` and their Kneser-hypergraph conditions: r-wise
//! disjointness witnesses, coloring verification, chromatic numbers by
//! exhaustive search, the majority and disjoint-union family constructions,
//! and non-face complexes.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Desk-scale cap for the chromatic search.
pub const MAX_CHROMATIC_MEMBERS: usize = 20;
/// Desk-scale cap on the ground set for the non-face complex.
pub const MAX_NONFACE_GROUND: usize = 16;

/// A family of nonempty subsets of `[n]`, stored sorted and deduplicated.
/// Members are sorted index lists (0-based internally, 1-based in JSON).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "wire::SetFamilyWire", into = "wire::SetFamilyWire")]
pub struct SetFamily {
    n: usize,
    members: Vec<Vec<usize>>,
}

impl SetFamily {
    /// Rejects empty members, out-of-range indices, and duplicate members.
    pub fn new(n: usize, members: Vec<Vec<usize>>) -> Result<Self> {
        let mut cleaned = Vec::with_capacity(members.len());
        for m in members {
            let set: BTreeSet<usize> = m.into_iter().collect();
            if set.is_empty() {
                return Err(Error::InvalidInput("family members must be nonempty".into()));
            }
            if let Some(&i) = set.iter().find(|&&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            cleaned.push(set.into_iter().collect::<Vec<_>>());
        }
        cleaned.sort();
        if cleaned.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("duplicate family members".into()));
        }
        Ok(SetFamily {
            n,
            members: cleaned,
        })
    }

    /// Deduplicating constructor for internally generated families.
    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = BTreeSet<usize>>) -> Result<Self> {
        let dedup: BTreeSet<Vec<usize>> = sets
            .into_iter()
            .map(|s| s.into_iter().collect::<Vec<_>>())
            .collect();
        SetFamily::new(n, dedup.into_iter().collect())
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_mask(&self, idx: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.members[idx].iter().fold(0u64, |m, &i| m | (1 << i))
    }

    pub fn member_masks(&self) -> Vec<u64> {
        (0..self.members.len()).map(|i| self.member_mask(i)).collect()
    }

    /// Masks of the inclusion-minimal members. A set contains some member iff
    /// it contains a minimal one, so downstream containment checks stay exact
    /// on this antichain.
    pub fn minimal_member_masks(&self) -> Vec<u64> {
        let masks = self.member_masks();
        masks
            .iter()
            .copied()
            .filter(|&m| !masks.iter().any(|&o| o != m && o & m == o))
            .collect()
    }

    /// The same members over a larger ground set (new elements belong to no
    /// member). Used when a configuration gains synthetic points.
    pub fn extend_ground(&self, new_n: usize) -> Result<SetFamily> {
        if new_n < self.n {
            return Err(Error::InvalidInput("ground set can only grow".into()));
        }
        SetFamily::new(new_n, self.members.clone())
    }
}

mod wire {
    use super::SetFamily;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    pub struct SetFamilyWire {
        pub n: usize,
        pub members: Vec<Vec<usize>>,
    }

    impl From<SetFamily> for SetFamilyWire {
        fn from(f: SetFamily) -> Self {
            SetFamilyWire {
                n: f.n,
                members: f
                    .members
                    .iter()
                    .map(|m| m.iter().map(|i| i + 1).collect())
                    .collect(),
            }
        }
    }

    impl TryFrom<SetFamilyWire> for SetFamily {
        type Error = crate::Error;

        fn try_from(w: SetFamilyWire) -> Result<Self, Self::Error> {
            let members = w
                .members
                .into_iter()
                .map(|m| {
                    m.into_iter()
                        .map(|i| {
                            i.checked_sub(1).ok_or_else(|| {
                                crate::Error::InvalidInput("indices are 1-based".into())
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            SetFamily::new(w.n, members)
        }
    }
}

/// An assignment of one of `m` colors to every member of a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// Member index -> color in `0..m`.
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn num_colors(&self) -> usize {
        self.colors.iter().map(|c| c + 1).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringVerdict {
    Valid,
    /// A monochromatic hyperedge: `r` pairwise disjoint members in one class.
    Violation { color: usize, members: Vec<usize> },
}

/// Finds `r` pairwise disjoint members (a hyperedge of the r-uniform Kneser
/// hypergraph), or `None`. Backtracking over members in their sorted order
/// (ascending minimum element); returns the lexicographically first witness.
pub fn r_pairwise_disjoint_witness(family: &SetFamily, r: usize) -> Result<Option<Vec<usize>>> {
    if r < 2 {
        return Err(Error::InvalidInput("r must be at least 2".into()));
    }
    let masks = family.member_masks();
    let all: Vec<usize> = (0..masks.len()).collect();
    Ok(disjoint_tuple_search(&masks, &all, r))
}

/// DFS for `r` pairwise disjoint members among `candidates` (member indices),
/// in ascending candidate order, returning the first witness found. Branches
/// that cannot fit the remaining members by element count are cut, which
/// keeps dense families (every large subset of a small ground set) cheap.
pub(crate) fn disjoint_tuple_search(
    masks: &[u64],
    candidates: &[usize],
    r: usize,
) -> Option<Vec<usize>> {
    let universe: u64 = candidates.iter().fold(0, |u, &i| u | masks[i]);
    let min_size = candidates
        .iter()
        .map(|&i| masks[i].count_ones() as usize)
        .min()
        .unwrap_or(usize::MAX);

    fn go(
        masks: &[u64],
        candidates: &[usize],
        r: usize,
        universe: u64,
        min_size: usize,
        start: usize,
        used: u64,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == r {
            return true;
        }
        let slots = r - chosen.len();
        if candidates.len() - start < slots {
            return false;
        }
        let free = (universe & !used).count_ones() as usize;
        if free < slots.saturating_mul(min_size) {
            return false;
        }
        for pos in start..candidates.len() {
            let idx = candidates[pos];
            if masks[idx] & used != 0 {
                continue;
            }
            chosen.push(idx);
            if go(
                masks,
                candidates,
                r,
                universe,
                min_size,
                pos + 1,
                used | masks[idx],
                chosen,
            ) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(r);
    go(masks, candidates, r, universe, min_size, 0, 0, &mut chosen).then_some(chosen)
}

/// Valid iff no color class contains `r` pairwise disjoint members.
pub fn verify_coloring(family: &SetFamily, coloring: &Coloring, r: usize) -> Result<ColoringVerdict> {
    if coloring.colors.len() != family.len() {
        return Err(Error::InvalidInput(format!(
            "coloring assigns {} members, family has {}",
            coloring.colors.len(),
            family.len()
        )));
    }
    if r < 2 {
        return Err(Error::InvalidInput("r must be at least 2".into()));
    }
    let masks = family.member_masks();
    for color in 0..coloring.num_colors() {
        let class: Vec<usize> = (0..family.len())
            .filter(|&i| coloring.colors[i] == color)
            .collect();
        if let Some(members) = disjoint_tuple_search(&masks, &class, r) {
            return Ok(ColoringVerdict::Violation { color, members });
        }
    }
    Ok(ColoringVerdict::Valid)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChromaticOutcome {
    Number(usize, Coloring),
    Exceeds,
}

/// Least `m <= max_colors` admitting a valid coloring, by exhaustive DFS with
/// the first member pinned to color 0 and new colors introduced in order.
pub fn chromatic_number(family: &SetFamily, r: usize, max_colors: usize) -> Result<ChromaticOutcome> {
    if family.len() > MAX_CHROMATIC_MEMBERS {
        return Err(Error::GuardExceeded(format!(
            "chromatic search is limited to {MAX_CHROMATIC_MEMBERS} members, got {}",
            family.len()
        )));
    }
    if r < 2 {
        return Err(Error::InvalidInput("r must be at least 2".into()));
    }
    if family.is_empty() {
        return Ok(ChromaticOutcome::Number(
            1,
            Coloring { colors: Vec::new() },
        ));
    }
    let masks = family.member_masks();
    for m in 1..=max_colors {
        let mut colors = vec![0usize; family.len()];
        if assign(&masks, r, m, 1, 1, &mut colors) {
            return Ok(ChromaticOutcome::Number(m, Coloring { colors }));
        }
    }
    return Ok(ChromaticOutcome::Exceeds);

    fn assign(
        masks: &[u64],
        r: usize,
        m: usize,
        next: usize,
        used_colors: usize,
        colors: &mut Vec<usize>,
    ) -> bool {
        if next == masks.len() {
            return true;
        }
        for c in 0..m.min(used_colors + 1) {
            colors[next] = c;
            if !creates_monochromatic_edge(masks, r, colors, next, c)
                && assign(masks, r, m, next + 1, used_colors.max(c + 1), colors)
            {
                return true;
            }
        }
        false
    }

    /// Does assigning `color` to `member` complete `r` pairwise disjoint
    /// members in its class (restricted to members assigned so far)?
    fn creates_monochromatic_edge(
        masks: &[u64],
        r: usize,
        colors: &[usize],
        member: usize,
        color: usize,
    ) -> bool {
        let class: Vec<usize> = (0..member)
            .filter(|&i| colors[i] == color && masks[i] & masks[member] == 0)
            .collect();
        disjoint_tuple_search(masks, &class, r - 1).is_some()
    }
}

/// All subsets `A` of `[set_size]` with `|A| > set_size / 2^k`, as a family.
/// A hyperplane transversal of their convex hulls forces an equipartition.
pub fn majority_family(set_size: usize, k: usize) -> Result<SetFamily> {
    if set_size == 0 || k == 0 {
        return Err(Error::InvalidInput("set size and k must be positive".into()));
    }
    if set_size > 20 {
        return Err(Error::GuardExceeded(format!(
            "majority family over {set_size} elements is beyond desk scale"
        )));
    }
    let threshold = |size: usize| (size as u128) << k > set_size as u128;
    let mut members = Vec::new();
    for mask in 1u64..(1 << set_size) {
        let size = mask.count_ones() as usize;
        if threshold(size) {
            members.push(indices_of(mask));
        }
    }
    SetFamily::new(set_size, members)
}

/// All unions of `2^k` pairwise disjoint members of `fi`, deduplicated.
pub fn union_family(fi: &SetFamily, k: usize) -> Result<SetFamily> {
    if fi.is_empty() {
        return Err(Error::InvalidInput("input family must be nonempty".into()));
    }
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    let arity = 1usize << k;
    let masks = fi.member_masks();
    let mut unions: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<usize> = Vec::with_capacity(arity);
    collect_unions(&masks, arity, 0, 0, &mut stack, &mut unions);
    SetFamily::new(fi.ground_size(), unions.into_iter().collect())
}

fn collect_unions(
    masks: &[u64],
    arity: usize,
    start: usize,
    acc: u64,
    stack: &mut Vec<usize>,
    out: &mut BTreeSet<Vec<usize>>,
) {
    if stack.len() == arity {
        out.insert(indices_of(acc));
        return;
    }
    if masks.len() - start < arity - stack.len() {
        return;
    }
    for pos in start..masks.len() {
        if masks[pos] & acc != 0 {
            continue;
        }
        stack.push(pos);
        collect_unions(masks, arity, pos + 1, acc | masks[pos], stack, out);
        stack.pop();
    }
}

fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

/// Maximal faces of the complex whose minimal non-faces are exactly the
/// members of `family`: a set is a face iff none of its subsets is a member.
pub fn nonface_complex(family: &SetFamily) -> Result<Vec<Vec<usize>>> {
    let n = family.ground_size();
    if n > MAX_NONFACE_GROUND {
        return Err(Error::GuardExceeded(format!(
            "non-face complex is limited to ground size {MAX_NONFACE_GROUND}, got {n}"
        )));
    }
    // Superset closure over the subset lattice: blocked[s] iff s contains a member.
    let mut blocked = vec![false; 1 << n];
    for idx in 0..family.len() {
        blocked[family.member_mask(idx) as usize] = true;
    }
    for bit in 0..n {
        for s in 0..(1usize << n) {
            if s & (1 << bit) != 0 && blocked[s & !(1 << bit)] {
                blocked[s] = true;
            }
        }
    }
    let mut facets = Vec::new();
    for s in 0..(1usize << n) {
        if blocked[s] {
            continue;
        }
        let maximal = (0..n).all(|b| s & (1 << b) != 0 || blocked[s | (1 << b)]);
        if maximal {
            facets.push(indices_of(s as u64));
        }
    }
    facets.sort();
    Ok(facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: usize, members: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, members.iter().map(|m| m.to_vec()).collect()).unwrap()
    }

    fn all_k_subsets(n: usize, k: usize) -> SetFamily {
        let members: Vec<Vec<usize>> = (0u64..(1 << n))
            .filter(|m| m.count_ones() as usize == k)
            .map(indices_of)
            .collect();
        SetFamily::new(n, members).unwrap()
    }

    #[test]
    fn rejects_bad_members() {
        assert!(SetFamily::new(3, vec![vec![]]).is_err());
        assert!(SetFamily::new(3, vec![vec![3]]).is_err());
        assert!(SetFamily::new(3, vec![vec![0, 1], vec![1, 0]]).is_err());
    }

    #[test]
    fn disjoint_witness_visible() {
        let f = family(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let w = r_pairwise_disjoint_witness(&f, 2).unwrap().unwrap();
        assert_eq!(w, vec![0, 2]);
    }

    #[test]
    fn pigeonhole_blocks_three_disjoint_pairs() {
        // 3 * 2 = 6 > 5
        let f = all_k_subsets(5, 2);
        assert!(r_pairwise_disjoint_witness(&f, 3).unwrap().is_none());
    }

    #[test]
    fn four_singletons() {
        let f = family(4, &[&[0], &[1], &[2], &[3]]);
        let w = r_pairwise_disjoint_witness(&f, 4).unwrap().unwrap();
        assert_eq!(w.len(), 4);
        assert!(r_pairwise_disjoint_witness(&f, 1).is_err());
    }

    #[test]
    fn coloring_verification() {
        let f = family(4, &[&[0, 1], &[2, 3]]);
        let mono = Coloring { colors: vec![0, 0] };
        assert!(matches!(
            verify_coloring(&f, &mono, 2).unwrap(),
            ColoringVerdict::Violation { members, .. } if members == vec![0, 1]
        ));
        let split = Coloring { colors: vec![0, 1] };
        assert_eq!(verify_coloring(&f, &split, 2).unwrap(), ColoringVerdict::Valid);
    }

    #[test]
    fn majority_class_is_valid_under_one_color() {
        // four pairwise disjoint subsets of [8], each of size > 2, would need
        // more than 8 elements
        let f = majority_family(8, 2).unwrap();
        let mono = Coloring {
            colors: vec![0; f.len()],
        };
        assert_eq!(verify_coloring(&f, &mono, 4).unwrap(), ColoringVerdict::Valid);
    }

    #[test]
    fn kneser_graph_of_pairs_of_five_needs_three_colors() {
        let f = all_k_subsets(5, 2);
        match chromatic_number(&f, 2, 6).unwrap() {
            ChromaticOutcome::Number(m, coloring) => {
                assert_eq!(m, 3);
                assert_eq!(verify_coloring(&f, &coloring, 2).unwrap(), ColoringVerdict::Valid);
            }
            ChromaticOutcome::Exceeds => panic!("chromatic number not found"),
        }
    }

    #[test]
    fn chromatic_trivial_cases() {
        // no r pairwise disjoint members at all: one color suffices
        let f = family(3, &[&[0, 1], &[1, 2]]);
        assert!(matches!(
            chromatic_number(&f, 2, 4).unwrap(),
            ChromaticOutcome::Number(1, _)
        ));
        let g = family(2, &[&[0], &[1]]);
        assert!(matches!(
            chromatic_number(&g, 2, 4).unwrap(),
            ChromaticOutcome::Number(2, _)
        ));
        let h = all_k_subsets(5, 2);
        assert_eq!(chromatic_number(&h, 2, 2).unwrap(), ChromaticOutcome::Exceeds);
    }

    #[test]
    fn majority_family_counts() {
        assert_eq!(majority_family(4, 1).unwrap().len(), 5);
        assert_eq!(majority_family(4, 2).unwrap().len(), 11);
        let tiny = majority_family(1, 3).unwrap();
        assert_eq!(tiny.members(), &[vec![0]]);
    }

    #[test]
    fn union_family_of_singletons() {
        let f = family(4, &[&[0], &[1], &[2], &[3]]);
        let u = union_family(&f, 1).unwrap();
        assert_eq!(u.len(), 6);
        assert!(u.members().iter().all(|m| m.len() == 2));
    }

    #[test]
    fn union_family_without_disjoint_members_is_empty() {
        let f = family(2, &[&[0, 1]]);
        let u = union_family(&f, 1).unwrap();
        assert!(u.is_empty());
    }

    #[test]
    fn nonface_complex_examples() {
        let f = family(3, &[&[0, 1]]);
        assert_eq!(nonface_complex(&f).unwrap(), vec![vec![0, 2], vec![1, 2]]);

        let empty = SetFamily::new(3, vec![]).unwrap();
        assert_eq!(nonface_complex(&empty).unwrap(), vec![vec![0, 1, 2]]);

        let singletons = family(3, &[&[0], &[1], &[2]]);
        assert_eq!(nonface_complex(&singletons).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn minimal_members_form_an_antichain() {
        let f = family(4, &[&[0], &[0, 1], &[2, 3]]);
        let masks = f.minimal_member_masks();
        assert_eq!(masks.len(), 2);
    }

    #[test]
    fn serde_is_one_based_and_sorted() {
        let f = family(4, &[&[2, 0], &[1, 3]]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"n":4,"members":[[1,3],[2,4]]}"#);
        let back: SetFamily = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }
}
