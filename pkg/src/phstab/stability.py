"""Constructive verification that diagrams move no faster than functions.

The pipeline mirrors the interpolation argument.  Split [0, 1] at the
crossing times of the two functions.  Inside one interval the simplex order
is constant, so the order taken at the interval midpoint serves both
endpoints; the persistence pairs under that one order are literally
identical, and matching points by their pivot pair costs at most the
interval's share of the total sup-norm.  At a crossing time the adjacent
intervals disagree about the order, but both orders produce the same value
multiset for the function at that time, so a zero-cost re-identification
exists.  Composing everything gives an explicit bijection between the two
end diagrams whose cost telescopes to at most the sup-norm, which the exact
bottleneck distance can only undercut.

Every inequality used along the way is checked with exact rational
arithmetic; a failure raises InternalProofViolation, because no input can
make the mathematics fail, only an implementation bug can.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bottleneck import Matching, bottleneck_bijection, matching_cost, pair_cost
from .complexes import (
    FiltrationFunction,
    SimplicialComplex,
    find_duplicate_value,
    has_unique_values,
    validate_filtration,
)
from .errors import (
    ChainMismatch,
    InternalProofViolation,
    MultisetMismatch,
    NonUniqueValues,
    OrderNotConstant,
)
from .interpolation import (
    CrossingSchedule,
    crossing_times,
    interpolate,
    sup_norm,
)
from .ordering import TotalOrder, check_order_compatible, is_order_constant, total_order
from .persistence import (
    Diagram,
    diagram,
    diagram_from_pivots,
    pivot_pairs,
)
from .rational import to_fraction


@dataclass(frozen=True)
class IntervalCertificate:
    """One interval's worth of the proof.

    ``matching`` pairs points of the two endpoint diagrams with identical
    pivot pairs; because every simplex shows up as a coordinate of exactly
    one point, its cost equals ``bound``, the sup-norm between the endpoint
    functions.
    """

    t_lo: Fraction
    t_hi: Fraction
    order_used: TotalOrder
    left: Diagram
    right: Diagram
    matching: Matching
    cost: "Fraction | int"
    bound: Fraction


@dataclass(frozen=True)
class StabilityReport:
    sup_norm_value: Fraction
    schedule: CrossingSchedule
    certificates: tuple[IntervalCertificate, ...]
    composed_matching: Matching
    composed_cost: "Fraction | int"
    exact_bottleneck: "Fraction | int"
    bottleneck_matching: Matching
    left_diagram: Diagram
    right_diagram: Diagram
    holds: bool


def interval_matching(
    K: SimplicialComplex,
    f0: FiltrationFunction,
    f1: FiltrationFunction,
    t_lo,
    t_hi,
) -> IntervalCertificate:
    """Match the diagrams at the two ends of an order-constant interval.

    The order induced at the interval midpoint is valid for every t in the
    interval, so one reduction serves both endpoints and the pair lists
    coincide; matching by pivot identity is then a bijection whose cost is
    the largest coordinate move of any pivot simplex.
    """
    t_lo, t_hi = to_fraction(t_lo), to_fraction(t_hi)
    if not 0 <= t_lo < t_hi <= 1:
        raise ValueError(f"bad interval [{t_lo}, {t_hi}]")
    if not is_order_constant(f0, f1, t_lo, t_hi):
        raise OrderNotConstant(
            f"simplex order changes strictly inside [{t_lo}, {t_hi}]"
        )
    mid = (t_lo + t_hi) / 2
    f_mid = interpolate(f0, f1, mid)
    order = total_order(K, f_mid)
    f_lo = interpolate(f0, f1, t_lo)
    f_hi = interpolate(f0, f1, t_hi)
    check_order_compatible(K, f_lo, order)
    check_order_compatible(K, f_hi, order)
    pairs = pivot_pairs(K, order)
    left = diagram_from_pivots(K, order, f_lo, pairs, f"f@{t_lo}")
    right = diagram_from_pivots(K, order, f_hi, pairs, f"f@{t_hi}")
    cost = 0
    for p, q in zip(left.points, right.points):
        if p.pair != q.pair:
            raise InternalProofViolation(
                f"pivot pairs diverged under one order: {p.pair} vs {q.pair}"
            )
        cost = max(cost, pair_cost(p, q))
    bound = sup_norm(f_lo, f_hi)
    if cost != bound:
        # Every simplex is a birth or death coordinate of exactly one point
        # (essentials included), so the largest coordinate move IS the
        # sup-norm; any discrepancy in either direction is a bug.
        raise InternalProofViolation(
            f"interval [{t_lo}, {t_hi}]: matching cost {cost} != sup-norm {bound}"
        )
    matching = Matching(tuple((i, i) for i in range(len(left.points))))
    return IntervalCertificate(t_lo, t_hi, order, left, right, matching, cost, bound)


def breakpoint_matching(D_left: Diagram, D_right: Diagram) -> Matching:
    """Zero-cost bijection between two diagrams of one function.

    The diagrams were computed under different orders (the two sides of a
    crossing time), so their pivot pairs may differ, but their value
    multisets agree.  Within each dimension both point lists are sorted by
    (birth, death, birth-simplex order position) and matched positionally;
    any disagreement in the matched values is a MultisetMismatch, which
    would falsify order-invariance of diagrams and means a bug.
    """
    def sort_key(diag):
        def key(i):
            p = diag.points[i]
            return (p.birth, p.death, diag.order.position_of[p.pair.birth])
        return key

    dims = sorted({p.dim for p in D_left.points} | {p.dim for p in D_right.points})
    pairs = []
    for d in dims:
        left_idx = sorted(D_left.points_in_dim(d), key=sort_key(D_left))
        right_idx = sorted(D_right.points_in_dim(d), key=sort_key(D_right))
        if len(left_idx) != len(right_idx):
            raise MultisetMismatch(
                f"dimension {d}: {len(left_idx)} points vs {len(right_idx)}"
            )
        for i, j in zip(left_idx, right_idx):
            p, q = D_left.points[i], D_right.points[j]
            if (p.birth, p.death) != (q.birth, q.death):
                raise MultisetMismatch(
                    f"dimension {d}: {p} has no partner with equal values ({q})"
                )
            pairs.append((i, j))
    pairs.sort()
    return Matching(tuple(pairs))


def compose_matchings(chain) -> Matching:
    """Relational composition of a chain of bijections."""
    chain = list(chain)
    if not chain:
        raise ChainMismatch("empty chain")
    composed = chain[0].as_map()
    for link in chain[1:]:
        step = link.as_map()
        if len(step) != len(composed):
            raise ChainMismatch(
                f"link of size {len(step)} after matching of size {len(composed)}"
            )
        try:
            composed = {a: step[b] for a, b in composed.items()}
        except KeyError as exc:
            raise ChainMismatch(
                f"middle index {exc.args[0]} missing from the next link"
            ) from None
    return Matching(tuple(sorted(composed.items())))


def verify_stability(
    K: SimplicialComplex, f0: FiltrationFunction, f1: FiltrationFunction
) -> StabilityReport:
    """Run the whole pipeline and certify the stability bound.

    Produces per-interval certificates, zero-cost crossing matchings, the
    composed end-to-end bijection with its directly measured cost, and the
    exact bottleneck distance.  Exact-rational checks along the way:
    every certificate cost is at most its interval bound, the composed cost
    is at most the sum of the link costs and at most the sup-norm, and the
    exact bottleneck distance is at most the composed cost.
    """
    for fid, f in (("f0", f0), ("f1", f1)):
        validate_filtration(K, f).raise_if_invalid()
        dup = find_duplicate_value(f)
        if dup is not None:
            i, j = dup
            raise NonUniqueValues(
                fid, (K.simplices[i], K.simplices[j]), f.values[i]
            )
    gap = sup_norm(f0, f1)
    schedule = crossing_times(f0, f1)
    bps = schedule.breakpoints()

    certificates = []
    for lo, hi in zip(bps, bps[1:]):
        cert = interval_matching(K, f0, f1, lo, hi)
        if not has_unique_values(interpolate(f0, f1, (lo + hi) / 2)):
            raise InternalProofViolation(
                f"interval midpoint {(lo + hi) / 2} has tied values"
            )
        if cert.bound != (hi - lo) * gap:
            raise InternalProofViolation(
                f"interval [{lo}, {hi}]: sup-norm {cert.bound} is not the "
                f"interval's share {(hi - lo) * gap}"
            )
        certificates.append(cert)

    chain = [certificates[0].matching]
    link_costs = [certificates[0].cost]
    for prev, cur in zip(certificates, certificates[1:]):
        bp = breakpoint_matching(prev.right, cur.left)
        chain.append(bp)
        link_costs.append(0)
        chain.append(cur.matching)
        link_costs.append(cur.cost)
    composed = compose_matchings(chain)

    D0 = diagram(K, f0, "f0")
    D1 = diagram(K, f1, "f1")
    first, last = certificates[0].left, certificates[-1].right
    if first.points != D0.points or last.points != D1.points:
        raise InternalProofViolation(
            "endpoint diagrams disagree with the canonical diagrams"
        )

    composed_cost = matching_cost(D0, D1, composed)
    total_link_cost = sum(link_costs)
    if composed_cost > total_link_cost:
        raise InternalProofViolation(
            f"composed cost {composed_cost} exceeds the telescoped sum {total_link_cost}"
        )
    if total_link_cost > gap:
        raise InternalProofViolation(
            f"telescoped sum {total_link_cost} exceeds the sup-norm {gap}"
        )
    exact, witness = bottleneck_bijection(D0, D1)
    if exact > composed_cost:
        raise InternalProofViolation(
            f"exact bottleneck {exact} exceeds the composed matching cost {composed_cost}"
        )
    holds = exact <= gap
    return StabilityReport(
        sup_norm_value=gap,
        schedule=schedule,
        certificates=tuple(certificates),
        composed_matching=composed,
        composed_cost=composed_cost,
        exact_bottleneck=exact,
        bottleneck_matching=witness,
        left_diagram=D0,
        right_diagram=D1,
        holds=holds,
    )
