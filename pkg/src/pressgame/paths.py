"""Pressing paths: validity, success, exhaustive enumeration, safe presses.

Paths are plain tuples of vertex ids.  Enumeration is a depth-first search
branching on every black vertex in ascending index order, so the collected
path set comes out in lexicographic order and two runs are byte-identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bwgraph import (
    BWGraph,
    classify_components,
    is_all_white_empty,
    is_solvable,
    press,
)
from .errors import AlreadySolvedError, CapExceededError, UnsolvableError

PressingPath = tuple[int, ...]

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class PathSet:
    """All successful pressing paths of a graph, plus their common length."""

    graph: BWGraph
    paths: tuple[PressingPath, ...]
    common_length: int

    def __len__(self) -> int:
        return len(self.paths)


def is_valid_path(g: BWGraph, path: Sequence[int]) -> bool:
    """Each vertex must be black at its press time."""
    for v in path:
        if not 0 <= v < g.n or not g.is_black(v):
            return False
        g = press(g, v)
    return True


def is_successful_path(g: BWGraph, path: Sequence[int]) -> bool:
    """Valid and ending in the all-white empty graph."""
    for v in path:
        if not 0 <= v < g.n or not g.is_black(v):
            return False
        g = press(g, v)
    return is_all_white_empty(g)


def enumerate_successful(g: BWGraph, cap: int = DEFAULT_CAP) -> PathSet:
    """Collect every successful pressing path by exhaustive DFS.

    Raises Unsolvable when no successful path can exist and CapExceeded
    (never a silent truncation) when more than cap paths are found.
    """
    if not is_solvable(g):
        raise UnsolvableError("graph has a non-trivial unoriented component")
    found: list[PressingPath] = []
    prefix: list[int] = []

    def dfs(h: BWGraph) -> None:
        blacks = h.black_vertices()
        if not blacks:
            if is_all_white_empty(h):
                found.append(tuple(prefix))
                if len(found) > cap:
                    raise CapExceededError(len(found))
                # equal-length law: every successful path shares one length
                assert len(prefix) == len(found[0])
            return
        for v in blacks:
            prefix.append(v)
            dfs(press(h, v))
            prefix.pop()

    dfs(g)
    assert found, "a solvable graph must have a successful path"
    return PathSet(graph=g, paths=tuple(sorted(found)), common_length=len(found[0]))


def find_safe_press(g: BWGraph) -> int:
    """Lowest-index black vertex whose press creates no non-trivial
    unoriented component."""
    if not is_solvable(g):
        raise UnsolvableError("graph has a non-trivial unoriented component")
    if is_all_white_empty(g):
        raise AlreadySolvedError("graph is already the all-white empty graph")
    for v in g.black_vertices():
        if not classify_components(press(g, v)).has_nontrivial_unoriented():
            return v
    raise AssertionError("no safe press found on a solvable graph")


def greedy_solve(g: BWGraph) -> PressingPath:
    """Successful path built by iterating find_safe_press."""
    if not is_solvable(g):
        raise UnsolvableError("graph has a non-trivial unoriented component")
    out: list[int] = []
    while not is_all_white_empty(g):
        v = find_safe_press(g)
        out.append(v)
        g = press(g, v)
    return tuple(out)


def format_paths(ps: PathSet) -> str:
    """One path per line, space-separated vertex indices."""
    return "\n".join(" ".join(str(v) for v in p) for p in ps.paths) + "\n"
