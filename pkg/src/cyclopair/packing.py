"""Exact and greedy packing of disjoint translates i + R inside Z/m.

Two translates i + R and i' + R intersect exactly when i - i' lands in the
difference set D = R - R, so the packing problem is a maximum independent
set on the conflict graph over the candidate offsets.  The exact solver is
a branch and bound over bitmasks: degree-0/1 vertices are taken outright,
connected components are solved separately, branching picks a maximum-degree
vertex, and subtrees die against a greedy clique-cover bound.  The ascending
greedy solution seeds the incumbent.

Every solver re-verifies its witness by direct translate-intersection
checks before returning, independent of the conflict-graph reduction.
"""

import sys
from dataclasses import dataclass
from typing import Iterable

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class PackingInstance:
    modulus: int
    shape: tuple[int, ...]       # the translate shape R, reduced mod m
    candidates: tuple[int, ...]  # the offsets I, reduced mod m

    @classmethod
    def from_sets(
        cls, modulus: int, shape: Iterable[int], candidates: Iterable[int]
    ) -> "PackingInstance":
        if modulus < 1:
            raise ValueError("modulus must be positive")
        return cls(
            modulus,
            tuple(sorted({x % modulus for x in shape})),
            tuple(sorted({x % modulus for x in candidates})),
        )


@dataclass(frozen=True)
class PackingResult:
    count: int
    witness: tuple[int, ...]
    method: str


def conflict_diffs(shape: Iterable[int], modulus: int) -> frozenset[int]:
    """D = {a - b mod m : a, b in R}; contains 0 whenever R is nonempty."""
    return frozenset((a - b) % modulus for a in shape for b in shape)


def translates_disjoint(inst: PackingInstance, offsets: Iterable[int]) -> bool:
    """Direct check that the translates {i + R} are pairwise disjoint."""
    seen: set[int] = set()
    for i in offsets:
        translate = {(i + x) % inst.modulus for x in inst.shape}
        if seen & translate:
            return False
        seen |= translate
    return True


def _finish(inst: PackingInstance, offsets: Iterable[int], method: str) -> PackingResult:
    witness = tuple(sorted(offsets))
    if not set(witness) <= set(inst.candidates):
        raise RuntimeError(f"{method} solver chose offsets outside the candidates")
    if not translates_disjoint(inst, witness):
        raise RuntimeError(f"{method} solver produced overlapping translates")
    return PackingResult(len(witness), witness, method)


def _adjacency(inst: PackingInstance) -> tuple[list[int], list[int]]:
    verts = list(inst.candidates)
    pos = {v: i for i, v in enumerate(verts)}
    diffs = conflict_diffs(inst.shape, inst.modulus)
    adj = [0] * len(verts)
    for i, v in enumerate(verts):
        for d in diffs:
            if d == 0:
                continue
            j = pos.get((v + d) % inst.modulus)
            if j is not None and j != i:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return verts, adj


def _greedy_mask(mask: int, adj: list[int]) -> tuple[int, int]:
    count = 0
    chosen = 0
    while mask:
        b = mask & -mask
        mask &= ~(b | adj[b.bit_length() - 1])
        chosen |= b
        count += 1
    return count, chosen


def _cover_bound(mask: int, adj: list[int]) -> int:
    # greedy clique cover of the remaining vertices; cover size >= alpha
    cnt = 0
    while mask:
        b = mask & -mask
        mask ^= b
        cand = adj[b.bit_length() - 1] & mask
        while cand:
            wb = cand & -cand
            mask ^= wb
            cand &= adj[wb.bit_length() - 1] & mask
        cnt += 1
    return cnt


def _solve_mask(adj: list[int], mask: int) -> tuple[int, int]:
    """Exact (count, chosen_mask) for the induced subgraph on ``mask``.

    Only include-branches and component splits recurse; everything else
    iterates, so the depth stays near the solution size.
    """

    def bb(mask, cur_n, cur_mask, best_n, best_mask):
        while True:
            # take isolated and degree-1 vertices; always part of some optimum
            changed = True
            while changed:
                changed = False
                rem = mask
                while rem:
                    b = rem & -rem
                    rem ^= b
                    nb = adj[b.bit_length() - 1] & mask
                    if nb == 0:
                        cur_n += 1
                        cur_mask |= b
                        mask ^= b
                        changed = True
                    elif nb & (nb - 1) == 0:
                        cur_n += 1
                        cur_mask |= b
                        mask &= ~(b | nb)
                        rem &= mask
                        changed = True
            if mask == 0:
                return (cur_n, cur_mask) if cur_n > best_n else (best_n, best_mask)
            if cur_n + _cover_bound(mask, adj) <= best_n:
                return best_n, best_mask
            # peel off the connected component of the lowest vertex
            comp = mask & -mask
            frontier = comp
            while frontier:
                grow = 0
                while frontier:
                    lb = frontier & -frontier
                    frontier ^= lb
                    grow |= adj[lb.bit_length() - 1]
                frontier = grow & mask & ~comp
                comp |= frontier
            if comp != mask:
                comp_n, comp_mask = bb(comp, 0, 0, *_greedy_mask(comp, adj))
                cur_n += comp_n
                cur_mask |= comp_mask
                mask ^= comp
                continue
            # branch on a maximum-degree vertex: include recursively,
            # then exclude it and iterate
            rem = mask
            pick, deg = -1, -1
            while rem:
                lb = rem & -rem
                rem ^= lb
                v = lb.bit_length() - 1
                d = (adj[v] & mask).bit_count()
                if d > deg:
                    deg, pick = d, v
            vb = 1 << pick
            best_n, best_mask = bb(mask & ~(vb | adj[pick]), cur_n + 1,
                                   cur_mask | vb, best_n, best_mask)
            mask &= ~vb

    n = mask.bit_length()
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 2 * n + 1000))
    try:
        return bb(mask, 0, 0, *_greedy_mask(mask, adj))
    finally:
        sys.setrecursionlimit(old_limit)


def max_disjoint_translates_exact(inst: PackingInstance) -> PackingResult:
    """Maximum number of pairwise disjoint translates, with witness.

    Deterministic: identical inputs explore the identical search tree.  The
    witness is the fixed search order's first optimum, reported sorted.
    """
    verts, adj = _adjacency(inst)
    if not verts:
        return PackingResult(0, (), "exact")
    _, chosen = _solve_mask(adj, (1 << len(verts)) - 1)
    offsets = [verts[i] for i in range(len(verts)) if chosen >> i & 1]
    return _finish(inst, offsets, "exact")


def max_disjoint_translates_greedy(inst: PackingInstance) -> PackingResult:
    """Ascending-order greedy; never exceeds the exact count and picks at
    least ceil(|I| / |D|) offsets since each pick blocks at most |D|."""
    diffs = conflict_diffs(inst.shape, inst.modulus)
    chosen: list[int] = []
    blocked: set[int] = set()
    for i in inst.candidates:
        if i in blocked:
            continue
        chosen.append(i)
        # D is symmetric, so blocking i + d for d in D covers both directions
        blocked.update((i + d) % inst.modulus for d in diffs)
    return _finish(inst, chosen, "greedy")


def brute_force_packing(inst: PackingInstance) -> PackingResult:
    """Exhaustive reference over all subsets of I, for |I| <= 20.

    Conflicts come from direct translate intersection, not from the
    difference-set reduction, so this is a genuinely independent oracle.
    The witness is the lexicographically least maximum subset.
    """
    verts = list(inst.candidates)
    n = len(verts)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force refused for |I| = {n} > {BRUTE_FORCE_LIMIT}")
    translates = [
        {(i + x) % inst.modulus for x in inst.shape} for i in verts
    ]
    conflict = [0] * n
    for a in range(n):
        for b in range(a + 1, n):
            if translates[a] & translates[b]:
                conflict[a] |= 1 << b
                conflict[b] |= 1 << a
    independent = bytearray(1 << n)
    independent[0] = 1
    best_count, best_sets = 0, [0]
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        ok = independent[rest] and not conflict[low.bit_length() - 1] & rest
        independent[s] = ok
        if ok:
            c = s.bit_count()
            if c > best_count:
                best_count, best_sets = c, [s]
            elif c == best_count:
                best_sets.append(s)
    witness = min(
        tuple(verts[i] for i in range(n) if s >> i & 1) for s in best_sets
    )
    return _finish(inst, witness, "brute")
