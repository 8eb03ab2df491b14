"""The proportional density predicate and its direct consequences.

A set S with 2 <= |S| < n is a proportionally dense subgraph (PDS) when
every u in S has an inside degree share at least as large as its global
one:  d_S(u) / (|S|-1) >= deg(u) / (n-1).  All checks use the equivalent
cross-multiplied form  d_S(u) * |V\\S|  >=  d_{V\\S}(u) * (|S|-1)  so no
floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSubsetSize, NotMember
from .graph import Graph, VertexSet


@dataclass(frozen=True)
class PdsVerdict:
    """Outcome of a full PDS check; unsatisfied lists (u, d_S(u), d_out(u))."""

    holds: bool
    unsatisfied: tuple[tuple[int, int, int], ...]


def _require_proper_size(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise InvalidSubsetSize(f"set lives on {s.n} vertices, graph has {g.n}")
    if not 2 <= len(s) < g.n:
        raise InvalidSubsetSize(f"need 2 <= |S| < n, got |S|={len(s)}, n={g.n}")


def is_satisfied(g: Graph, s: VertexSet, u: int) -> bool:
    """Does u meet the proportional density inequality inside s?"""
    _require_proper_size(g, s)
    if u not in s:
        raise NotMember(f"vertex {u} not in the set")
    flags = s.flags()
    inside = sum(flags[w] for w in g.adj[u])
    outside = g.deg[u] - inside
    return inside * (g.n - len(s)) >= outside * (len(s) - 1)


def check_pds(g: Graph, s: VertexSet) -> PdsVerdict:
    """Check every member of s; collect all violators."""
    _require_proper_size(g, s)
    flags = s.flags()
    co = g.n - len(s)
    sm1 = len(s) - 1
    adj = g.adj
    deg = g.deg
    bad: list[tuple[int, int, int]] = []
    for u in s.members():
        inside = 0
        for w in adj[u]:
            inside += flags[w]
        outside = deg[u] - inside
        if inside * co < outside * sm1:
            bad.append((u, inside, outside))
    return PdsVerdict(not bad, tuple(bad))


def pds_size_upper_bound(g: Graph) -> int:
    """Largest size any PDS of a connected graph can have:
    floor((n * (max_deg - 1) + 1) / max_deg)."""
    n = g.n
    delta = g.max_degree
    return (n * (delta - 1) + 1) // delta


def is_inclusionwise_maximal(g: Graph, s: VertexSet) -> bool:
    """True when no strict superset of s is a PDS (s itself must be one)."""
    from . import exact  # local import: exact builds on this module

    from .errors import NotAPds

    if not check_pds(g, s).holds:
        raise NotAPds("maximality is only defined for sets that are a PDS")
    return exact.pds_extension(g, s) is None
