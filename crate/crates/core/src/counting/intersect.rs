//! Sorted-slice intersection.

use crate::graph::VertexId;

// size ratio beyond which galloping beats a linear merge
const GALLOP_RATIO: usize = 32;

/// Writes `a ∩ b` into `out` (cleared first). Both inputs must be strictly
/// increasing; the output is too.
pub fn intersect_into(a: &[VertexId], b: &[VertexId], out: &mut Vec<VertexId>) {
    out.clear();
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.is_empty() {
        return;
    }
    if small.len() * GALLOP_RATIO < large.len() {
        gallop(small, large, out);
    } else {
        merge(small, large, out);
    }
}

fn merge(a: &[VertexId], b: &[VertexId], out: &mut Vec<VertexId>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

fn gallop(small: &[VertexId], large: &[VertexId], out: &mut Vec<VertexId>) {
    let mut rest = large;
    for &x in small {
        // exponential probe, then binary search inside the bracket
        let mut hi = 1;
        while hi < rest.len() && rest[hi] < x {
            hi *= 2;
        }
        let bound = (hi + 1).min(rest.len());
        match rest[..bound].binary_search(&x) {
            Ok(pos) => {
                out.push(x);
                rest = &rest[pos + 1..];
            }
            Err(pos) => rest = &rest[pos..],
        }
        if rest.is_empty() {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn sorted(v: BTreeSet<u32>) -> Vec<u32> {
        v.into_iter().collect()
    }

    #[test]
    fn skewed_inputs_gallop() {
        let large: Vec<u32> = (0..1000).map(|x| x * 3).collect();
        let small = vec![0, 3, 4, 2997, 5000];
        let mut out = Vec::new();
        intersect_into(&small, &large, &mut out);
        assert_eq!(out, vec![0, 3, 2997]);
        intersect_into(&large, &small, &mut out);
        assert_eq!(out, vec![0, 3, 2997]);
        intersect_into(&[], &large, &mut out);
        assert!(out.is_empty());
    }

    proptest! {
        #[test]
        fn matches_set_intersection(
            a in proptest::collection::btree_set(0u32..400, 0..60),
            b in proptest::collection::btree_set(0u32..400, 0..400),
        ) {
            let expected: Vec<u32> = a.intersection(&b).copied().collect();
            let mut out = Vec::new();
            intersect_into(&sorted(a), &sorted(b), &mut out);
            prop_assert_eq!(out, expected);
        }
    }
}
