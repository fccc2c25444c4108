"""Signed permutations, reversals, and their bridge to black-and-white graphs.

A signed permutation is doubled into a framed unsigned sequence whose
reality edges (adjacent position pairs) record the current order and whose
desire edges (label pairs 2i, 2i+1) record the target order.  The overlap
graph built from the desire-edge spans is a black-and-white graph, and
pressing a black vertex there matches the reversal acting on that desire
edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .bwgraph import BWGraph, classify_components
from .errors import (
    EdgeNotOrientedError,
    HurdleRiskError,
    IndexOutOfRangeError,
    NotAPermutationError,
    PermutationParseError,
)

_TOKEN = re.compile(r"[+-]\d+")


@dataclass(frozen=True)
class SignedPermutation:
    """Sequence of signed integers whose magnitudes are exactly 1..n."""

    elems: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(x) for x in self.elems) != list(range(1, len(self.elems) + 1)):
            raise NotAPermutationError(
                f"magnitudes of {self.elems} are not a permutation of 1..{len(self.elems)}"
            )

    @property
    def n(self) -> int:
        return len(self.elems)

    def __str__(self) -> str:
        return " ".join(f"{x:+d}" for x in self.elems)

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.elems))


@dataclass(frozen=True)
class DesireRealityGraph:
    """Framed unsigned doubling of a signed permutation.

    seq holds the 2n+2 labels; seq[0] = 0 and seq[-1] = 2n+1.  Positions
    are 1-indexed in the public operations.  Reality edges join positions
    (2i-1, 2i); desire edges join labels (2i, 2i+1).
    """

    seq: tuple[int, ...]

    @property
    def n(self) -> int:
        return (len(self.seq) - 2) // 2

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {label: idx + 1 for idx, label in enumerate(self.seq)}

    def position_of(self, label: int) -> int:
        return self._pos[label]


@dataclass(frozen=True)
class Interval:
    """Positions spanned by a desire edge, 1-indexed, lo < hi."""

    lo: int
    hi: int

    def covered(self) -> int:
        return self.hi - self.lo - 1

    def strictly_crosses(self, other: Interval) -> bool:
        a, b = (self, other) if self.lo < other.lo else (other, self)
        return a.lo < b.lo < a.hi < b.hi


def parse_signed_permutation(text: str) -> SignedPermutation:
    """Parse whitespace-separated signed integers; the sign is mandatory."""
    elems = []
    for token in text.split():
        if not _TOKEN.fullmatch(token):
            raise PermutationParseError(f"bad token {token!r} (want e.g. +4 or -1)")
        elems.append(int(token))
    return SignedPermutation(tuple(elems))


def apply_reversal(p: SignedPermutation, i: int, j: int) -> SignedPermutation:
    """Reverse elements i..j (inclusive, 0-indexed) and flip their signs."""
    if not 0 <= i <= j < p.n:
        raise IndexOutOfRangeError(f"reversal ({i},{j}) outside 0 <= i <= j < {p.n}")
    mid = tuple(-x for x in reversed(p.elems[i : j + 1]))
    return SignedPermutation(p.elems[:i] + mid + p.elems[j + 1 :])


def build_dr(p: SignedPermutation) -> DesireRealityGraph:
    """Double each element (+i -> 2i-1,2i; -i -> 2i,2i-1) and frame with
    0 and 2n+1."""
    seq = [0]
    for x in p.elems:
        m = abs(x)
        seq.extend((2 * m - 1, 2 * m) if x > 0 else (2 * m, 2 * m - 1))
    seq.append(2 * p.n + 1)
    return DesireRealityGraph(tuple(seq))


def dr_to_permutation(dr: DesireRealityGraph) -> SignedPermutation:
    """Read the signed permutation back off the doubled sequence."""
    elems = []
    for t in range(dr.n):
        a, b = dr.seq[2 * t + 1], dr.seq[2 * t + 2]
        m = (max(a, b) + 1) // 2
        elems.append(m if a < b else -m)
    return SignedPermutation(tuple(elems))


def desire_edge_span(dr: DesireRealityGraph, k: int) -> Interval:
    """Positions of labels 2k and 2k+1, normalized to lo < hi."""
    if not 0 <= k <= dr.n:
        raise IndexOutOfRangeError(f"desire edge {k} outside 0..{dr.n}")
    a, b = dr.position_of(2 * k), dr.position_of(2 * k + 1)
    return Interval(min(a, b), max(a, b))


def build_overlap(dr: DesireRealityGraph) -> BWGraph:
    """Overlap graph: one vertex per desire edge, black iff its span covers
    an odd number of vertices, edges between strictly crossing spans."""
    spans = [desire_edge_span(dr, k) for k in range(dr.n + 1)]
    colors = ["B" if s.covered() % 2 else "W" for s in spans]
    edges = [
        (j, k)
        for j in range(len(spans))
        for k in range(j + 1, len(spans))
        if spans[j].strictly_crosses(spans[k])
    ]
    return BWGraph.from_parts(colors, edges)


def cycle_count(dr: DesireRealityGraph) -> int:
    """Cycles of the 2-regular multigraph holding all reality and desire
    edges; the traversal alternates between the two edge kinds."""
    seq = dr.seq
    pos0 = {label: idx for idx, label in enumerate(seq)}
    visited = [False] * len(seq)
    cycles = 0
    for start in range(len(seq)):
        if visited[start]:
            continue
        cycles += 1
        label = start
        while True:
            visited[label] = True
            partner = seq[pos0[label] ^ 1]  # reality edge within the position pair
            visited[partner] = True
            label = partner ^ 1  # desire edge within the label pair
            if label == start:
                break
    return cycles


def reversal_distance_hurdle_free(p: SignedPermutation) -> int:
    """n+1-c for permutations whose overlap graph has no non-trivial
    unoriented component (hurdle detection is out of scope)."""
    dr = build_dr(p)
    if classify_components(build_overlap(dr)).has_nontrivial_unoriented():
        raise HurdleRiskError(
            f"{p} has a non-trivial unoriented component; hurdle-free formula not applicable"
        )
    return p.n + 1 - cycle_count(dr)


def reversal_on_desire_edge(p: SignedPermutation, k: int) -> SignedPermutation:
    """The reversal delimited by the two reality edges next to desire edge k.

    The segment is snapped to reality-edge boundaries so whole signed
    elements are reversed, then the move is verified by its effect: desire
    edge k must end up spanning zero vertices.  For an oriented (black)
    edge exactly this one candidate passes; otherwise no acting reversal
    exists.
    """
    dr = build_dr(p)
    if not 0 <= k <= dr.n:
        raise IndexOutOfRangeError(f"desire edge {k} outside 0..{dr.n}")
    span = desire_edge_span(dr, k)
    r_lo, r_hi = (span.lo + 1) // 2, (span.hi + 1) // 2  # reality-edge indices, 1-based
    if r_lo == r_hi:
        raise EdgeNotOrientedError(
            f"desire edge {k} already forms a small cycle with a reality edge"
        )
    candidate = apply_reversal(p, r_lo - 1, r_hi - 2)
    if desire_edge_span(build_dr(candidate), k).covered() != 0:
        raise EdgeNotOrientedError(f"desire edge {k} of {p} is unoriented")
    return candidate
