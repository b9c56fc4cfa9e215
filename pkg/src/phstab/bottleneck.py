"""Exact bottleneck matchings between persistence diagrams.

Two variants are provided.  The bijection distance minimizes, over all
dimension-respecting bijections, the largest L-infinity displacement of any
matched point; it is the right notion when both diagrams come from the same
complex and therefore have equal point counts.  The diagonal-augmented
variant additionally lets any finite point pay (death - birth) / 2 to match
its diagonal projection.

Both are computed exactly: all candidate thresholds are rationals, the
optimal value is found by binary search over the sorted candidates, and
feasibility at a threshold is a maximum bipartite matching on the graph of
pairs within that cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import (
    CountMismatch,
    DimensionMismatch,
    InvalidMatching,
    TooLarge,
)
from .persistence import Diagram, DiagramPoint
from .rational import INF


@dataclass(frozen=True)
class Matching:
    """Point-index pairs between two diagrams.

    An entry (i, j) matches point i of the first diagram with point j of the
    second; (i, None) and (None, j) send a point to its diagonal projection
    (diagonal-augmented matchings only).
    """

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def as_map(self) -> dict[int, int]:
        """Left index -> right index; rejects diagonal entries."""
        out = {}
        for i, j in self.pairs:
            if i is None or j is None:
                raise InvalidMatching("matching contains diagonal entries")
            out[i] = j
        return out


def pair_cost(p: DiagramPoint, q: DiagramPoint):
    """L-infinity cost of matching two points of equal dimension.

    Two essential points compare by birth alone; an essential point can
    never match a finite one (cost +inf).
    """
    if p.dim != q.dim:
        raise DimensionMismatch(f"dim {p.dim} vs dim {q.dim}")
    if p.is_essential != q.is_essential:
        return INF
    birth_gap = abs(p.birth - q.birth)
    if p.is_essential:
        return birth_gap
    return max(birth_gap, abs(p.death - q.death))


def diagonal_cost(p: DiagramPoint):
    """Cost of sending a point to its diagonal projection; +inf if essential."""
    if p.is_essential:
        return INF
    return (p.death - p.birth) / 2


def matching_cost(D0: Diagram, D1: Diagram, m: Matching):
    """Maximum pair cost over a matching; 0 for empty diagrams.

    Validates that every point of each diagram is used exactly once and that
    matched points share a dimension; diagonal entries cost
    (death - birth) / 2.
    """
    used0: set[int] = set()
    used1: set[int] = set()
    worst = 0
    for i, j in m.pairs:
        if i is not None:
            if not (0 <= i < len(D0.points)) or i in used0:
                raise InvalidMatching(f"left index {i} reused or out of range")
            used0.add(i)
        if j is not None:
            if not (0 <= j < len(D1.points)) or j in used1:
                raise InvalidMatching(f"right index {j} reused or out of range")
            used1.add(j)
        if i is None and j is None:
            raise InvalidMatching("empty matching entry")
        if i is None:
            cost = diagonal_cost(D1.points[j])
        elif j is None:
            cost = diagonal_cost(D0.points[i])
        else:
            cost = pair_cost(D0.points[i], D1.points[j])
        worst = max(worst, cost)
    if len(used0) != len(D0.points) or len(used1) != len(D1.points):
        raise InvalidMatching("matching does not cover both diagrams")
    return worst


def _max_bipartite_matching(n_left: int, adjacency: list[list[int]]) -> dict[int, int]:
    """Deterministic augmenting-path maximum matching; left -> right."""
    match_right: dict[int, int] = {}

    def try_augment(u: int, visited: set[int]) -> bool:
        for v in adjacency[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_right or try_augment(match_right[v], visited):
                match_right[v] = u
                return True
        return False

    for u in range(n_left):
        try_augment(u, set())
    return {u: v for v, u in match_right.items()}


def _min_max_bijection(points0, points1):
    """Exact min over perfect matchings of the max pair cost, with witness.

    points0/points1 are lists of DiagramPoint of one dimension and equal
    length.  Returns (cost, pairs) with pairs indexing into the two lists;
    cost is +inf when no finite-cost bijection exists (then a positional
    matching is returned as witness).
    """
    n = len(points0)
    if n == 0:
        return 0, []
    costs = [[pair_cost(p, q) for q in points1] for p in points0]
    candidates = sorted({c for row in costs for c in row if c != INF})

    def matching_at(c):
        adjacency = [
            [j for j in range(n) if costs[i][j] <= c] for i in range(n)
        ]
        return _max_bipartite_matching(n, adjacency)

    if not candidates or len(matching_at(candidates[-1])) < n:
        return INF, [(i, i) for i in range(n)]
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if len(matching_at(candidates[mid])) == n:
            hi = mid
        else:
            lo = mid + 1
    best = candidates[lo]
    witness = matching_at(best)
    return best, sorted(witness.items())


def _split_by_dim(D0: Diagram, D1: Diagram, require_equal: bool):
    dims = sorted({p.dim for p in D0.points} | {p.dim for p in D1.points})
    groups = []
    for d in dims:
        idx0 = list(D0.points_in_dim(d))
        idx1 = list(D1.points_in_dim(d))
        if require_equal and len(idx0) != len(idx1):
            raise CountMismatch(d, len(idx0), len(idx1))
        groups.append((d, idx0, idx1))
    return groups


def bottleneck_bijection(D0: Diagram, D1: Diagram):
    """Exact bottleneck distance over dimension-respecting bijections.

    Requires equal per-dimension point counts (always true for diagrams of
    the same complex); returns (cost, witness matching) with the witness
    achieving the cost exactly.
    """
    all_pairs = []
    worst = 0
    for d, idx0, idx1 in _split_by_dim(D0, D1, require_equal=True):
        pts0 = [D0.points[i] for i in idx0]
        pts1 = [D1.points[j] for j in idx1]
        cost, local = _min_max_bijection(pts0, pts1)
        worst = max(worst, cost)
        all_pairs.extend((idx0[a], idx1[b]) for a, b in local)
    all_pairs.sort()
    return worst, Matching(tuple(all_pairs))


def bottleneck_diagonal(D0: Diagram, D1: Diagram):
    """Exact bottleneck distance when points may match the diagonal.

    Uses the standard augmented bipartite graph: each side is the real
    points of one diagram plus one diagonal partner per point of the other
    side; partner-to-partner edges are free, a point reaches its own partner
    at cost (death - birth) / 2, and essential points can only match
    essential points.  Point counts may differ; the diagonal absorbs any
    surplus.
    """
    worst = 0
    for d, idx0, idx1 in _split_by_dim(D0, D1, require_equal=False):
        pts0 = [D0.points[i] for i in idx0]
        pts1 = [D1.points[j] for j in idx1]
        n0, n1 = len(pts0), len(pts1)
        if n0 == 0 and n1 == 0:
            continue
        costs = [[pair_cost(p, q) for q in pts1] for p in pts0]
        diag0 = [diagonal_cost(p) for p in pts0]
        diag1 = [diagonal_cost(q) for q in pts1]
        candidates = sorted(
            {0}
            | {c for row in costs for c in row if c != INF}
            | {c for c in diag0 + diag1 if c != INF}
        )

        # Left nodes: 0..n0-1 real points of D0, then n0..n0+n1-1 partners
        # of D1 points.  Right nodes: 0..n1-1 real points of D1, then
        # n1..n1+n0-1 partners of D0 points.
        size = n0 + n1

        def feasible(c, costs=costs, diag0=diag0, diag1=diag1, n0=n0, n1=n1):
            adjacency = []
            for i in range(n0):
                row = [j for j in range(n1) if costs[i][j] <= c]
                if diag0[i] <= c:
                    row.append(n1 + i)
                adjacency.append(row)
            for j in range(n1):
                row = list(range(n1, n1 + n0))  # partner-to-partner, free
                if diag1[j] <= c:
                    row.append(j)
                adjacency.append(sorted(row))
            return len(_max_bipartite_matching(size, adjacency)) == size

        if not candidates or not feasible(candidates[-1]):
            worst = max(worst, INF)
            continue
        lo, hi = 0, len(candidates) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if feasible(candidates[mid]):
                hi = mid
            else:
                lo = mid + 1
        worst = max(worst, candidates[lo])
    return worst


def brute_force_bottleneck(D0: Diagram, D1: Diagram, limit: int = 8):
    """Exact bijection bottleneck by enumerating all bijections.

    Test oracle: refuses more than ``limit`` points in any dimension.
    """
    worst = 0
    for d, idx0, idx1 in _split_by_dim(D0, D1, require_equal=True):
        n = len(idx0)
        if n > limit:
            raise TooLarge(f"{n} points in dimension {d} (limit {limit})")
        if n == 0:
            continue
        pts0 = [D0.points[i] for i in idx0]
        pts1 = [D1.points[j] for j in idx1]
        best = INF
        for perm in permutations(range(n)):
            cost = 0
            for i, j in enumerate(perm):
                cost = max(cost, pair_cost(pts0[i], pts1[j]))
                if cost >= best:
                    break
            best = min(best, cost)
        worst = max(worst, best)
    return worst
