//! Exhaustive ground truth for tiny graphs.
//!
//! Each oracle searches directly over the objects in the definition it
//! checks and uses nothing from the modules it is meant to validate. Size
//! limits are hard errors.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const PATHWIDTH_LIMIT: usize = 9;
pub const PATH_PARTITION_LIMIT: usize = 20;
pub const TREE_PARTITION_LIMIT: usize = 8;

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    if g.vertex_count() > limit {
        Err(Error::SizeLimit { vertex_count: g.vertex_count(), limit })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))).collect()
}

/// Minimum over all vertex orderings of the largest number of placed
/// vertices that still have an unplaced neighbour. `-1` for the empty graph.
///
/// Depth-first over orderings with branch-and-bound: a prefix is abandoned
/// once its running maximum reaches the best complete ordering found.
pub fn brute_pathwidth(g: &Graph) -> Result<i64> {
    check_limit(g, PATHWIDTH_LIMIT)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(-1);
    }
    let nbr = masks(g);
    let full = (1u32 << n) - 1;
    let mut best = n as u32 - 1;

    fn search(nbr: &[u32], full: u32, placed: u32, running: u32, best: &mut u32) {
        if placed == full {
            *best = running;
            return;
        }
        let mut free = full & !placed;
        while free != 0 {
            let v = free.trailing_zeros();
            free &= free - 1;
            let next = placed | (1 << v);
            let mut open = 0;
            let mut rest = next;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if nbr[u] & !next & full != 0 {
                    open += 1;
                }
            }
            let running = running.max(open);
            if running < *best {
                search(nbr, full, next, running, best);
            }
        }
    }

    if n == 1 {
        return Ok(0);
    }
    // an all-vertices ordering can never do worse than n - 1
    search(&nbr, full, 0, 0, &mut best);
    Ok(best as i64)
}

/// Smallest `w` such that `V(G)` splits into a sequence of bags of size at
/// most `w` with every edge inside a bag or between consecutive bags.
/// `0` for the empty graph.
///
/// Tries `w = 1, 2, ...`; for each, a depth-first search over
/// `(placed vertices, last bag)` states with memoised dead ends. The next bag
/// must contain every unplaced neighbour of the last bag, and may only use
/// vertices whose placed neighbours all sit in the last bag.
pub fn brute_path_partition_width(g: &Graph) -> Result<usize> {
    check_limit(g, PATH_PARTITION_LIMIT)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let nbr = masks(g);
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for w in 1..=n {
        let mut dead = HashSet::new();
        let mut found = false;
        for_each_subset(full, 0, w as u32, &mut |first| {
            found = found || extend(&nbr, full, first, first, w as u32, &mut dead);
            found
        });
        if found {
            return Ok(w);
        }
    }
    unreachable!("a single bag always works")
}

fn extend(nbr: &[u32], full: u32, placed: u32, last: u32, w: u32, dead: &mut HashSet<(u32, u32)>) -> bool {
    if placed == full {
        return true;
    }
    if dead.contains(&(placed, last)) {
        return false;
    }
    let mut reach = 0u32;
    let mut rest = last;
    while rest != 0 {
        reach |= nbr[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    let forced = reach & full & !placed;
    let older = placed & !last;
    let mut allowed = 0u32;
    let mut free = full & !placed;
    while free != 0 {
        let v = free.trailing_zeros();
        free &= free - 1;
        if nbr[v as usize] & older == 0 {
            allowed |= 1 << v;
        }
    }
    let mut ok = false;
    if forced & !allowed == 0 && forced.count_ones() <= w {
        let optional = allowed & !forced;
        let room = w - forced.count_ones();
        for_each_subset(optional, forced, room, &mut |bag| {
            ok = ok || extend(nbr, full, placed | bag, bag, w, dead);
            ok
        });
    }
    if !ok {
        dead.insert((placed, last));
    }
    ok
}

/// Calls `f(base | extra)` for every non-empty `base | extra` with `extra` a
/// subset of `pool` of size at most `room`, stopping once `f` returns true.
fn for_each_subset(pool: u32, base: u32, room: u32, f: &mut dyn FnMut(u32) -> bool) {
    fn go(pool: u32, chosen: u32, room: u32, f: &mut dyn FnMut(u32) -> bool) -> bool {
        if chosen != 0 && f(chosen) {
            return true;
        }
        if room == 0 {
            return false;
        }
        let mut rest = pool;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            // only add vertices above v later, so each subset is visited once
            if go(rest, chosen | (1 << v), room - 1, f) {
                return true;
            }
        }
        false
    }
    go(pool, base, room, f);
}

/// Minimum width over all partitions of `V(G)` whose quotient graph (bags
/// adjacent when an edge crosses between them) is a forest; any forest
/// extends to a tree, so this is the tree-partition-width. `0` for the
/// empty graph.
///
/// Vertices are assigned to bags in restricted-growth order under a bag-size
/// cap that grows from 1; an assignment is abandoned as soon as the partial
/// quotient contains a cycle, since adding vertices never removes one.
pub fn brute_tree_partition_width(g: &Graph) -> Result<usize> {
    check_limit(g, TREE_PARTITION_LIMIT)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let mut assign = vec![usize::MAX; n];
    let mut sizes = vec![0usize; n];
    for cap in 1..=n {
        if place(g, 0, 0, cap, &mut assign, &mut sizes) {
            return Ok(cap);
        }
    }
    unreachable!("one bag holding everything is a tree-partition")
}

fn place(g: &Graph, v: usize, bags: usize, cap: usize, assign: &mut [usize], sizes: &mut [usize]) -> bool {
    if v == assign.len() {
        return true;
    }
    for b in 0..=bags.min(assign.len() - 1) {
        if sizes[b] == cap {
            continue;
        }
        assign[v] = b;
        sizes[b] += 1;
        if quotient_is_forest(g, &assign[..=v]) && place(g, v + 1, bags.max(b + 1), cap, assign, sizes) {
            return true;
        }
        sizes[b] -= 1;
        assign[v] = usize::MAX;
    }
    false
}

/// Whether the quotient of the assigned prefix `0..assign.len()` is acyclic.
fn quotient_is_forest(g: &Graph, assign: &[usize]) -> bool {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for v in 0..assign.len() {
        for &u in g.neighbors(v).iter().filter(|&&u| u < v) {
            let (a, b) = (assign[u], assign[v]);
            if a != b {
                pairs.push((a.min(b), a.max(b)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    let mut parent: Vec<usize> = (0..assign.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn pathwidth_small_cases() {
        assert_eq!(brute_pathwidth(&path(5)), Ok(1));
        assert_eq!(brute_pathwidth(&cycle(5)), Ok(2));
        assert_eq!(brute_pathwidth(&Graph::new(1)), Ok(0));
        assert_eq!(brute_pathwidth(&Graph::new(0)), Ok(-1));
        assert_eq!(brute_pathwidth(&Graph::new(3)), Ok(0));
        assert!(brute_pathwidth(&path(10)).is_err());
    }

    #[test]
    fn path_partition_small_cases() {
        assert_eq!(brute_path_partition_width(&path(6)), Ok(1));
        assert_eq!(brute_path_partition_width(&Graph::new(1)), Ok(1));
        // a star K_{1,3} needs the centre next to three leaves
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(brute_path_partition_width(&star), Ok(2));
        assert_eq!(brute_path_partition_width(&cycle(6)), Ok(2));
        assert!(brute_path_partition_width(&path(21)).is_err());
    }

    #[test]
    fn tree_partition_small_cases() {
        assert_eq!(brute_tree_partition_width(&path(7)), Ok(1));
        assert_eq!(brute_tree_partition_width(&cycle(3)), Ok(2));
        assert_eq!(brute_tree_partition_width(&cycle(8)), Ok(2));
        assert_eq!(brute_tree_partition_width(&Graph::new(0)), Ok(0));
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(brute_tree_partition_width(&k4), Ok(2));
        assert!(brute_tree_partition_width(&path(9)).is_err());
    }
}
