"""Exhaustive searches for non-isomorphic objects sharing an invariant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple

from ..chromatic import chromatic_m, rooted_X, tree_chromatic_dp
from ..enumeration import (
    canonical_graph,
    canonical_rooted_graph,
    free_tree_canonical,
    free_trees,
    rooted_graphs,
    small_graphs,
)
from ..graphs import one_line
from ..polynomial import UniPoly
from ..symmetric import SymExpansion, ZPoly

Q = UniPoly([0, 1])
ONE = UniPoly([1])

KINDS = ("f-unrooted", "X-unrooted", "X0-rooted")


@dataclass
class Collision:
    kind: str
    value: Any
    members: List[Any]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "invariant": self.value.to_json(),
            "invariant_text": str(self.value),
            "members": [one_line(m.to_text()) for m in self.members],
        }


def _key(value) -> str:
    import json

    if isinstance(value, ZPoly):
        return value.key()
    if isinstance(value, SymExpansion):
        return ZPoly.constant(value).key()
    return json.dumps(value.to_json(), sort_keys=True)


def _setup(kind: str, n: int) -> Tuple[List[Any], Callable[[Any], Any], Callable[[Any], Any]]:
    if kind == "f-unrooted":
        return list(free_trees(n)), lambda g: tree_chromatic_dp(g, [Q, Q, ONE, ONE]), free_tree_canonical
    if kind == "X-unrooted":
        return list(small_graphs(n, connected_only=True)), chromatic_m, canonical_graph
    if kind == "X0-rooted":
        return list(rooted_graphs(n, connected_only=True)), lambda rg: rooted_X(rg, "0"), canonical_rooted_graph
    raise ValueError(f"unknown search kind {kind!r}; choose from {', '.join(KINDS)}")


def search_collision(kind: str, n: int) -> List[Collision]:
    """Group objects by a canonical serialization of the invariant.

    Candidate groups are re-checked with exact equality and filtered to
    pairwise non-isomorphic members.
    """
    objects, invariant, canon = _setup(kind, n)
    groups: Dict[str, List[Tuple[Any, Any]]] = {}
    for obj in objects:
        value = invariant(obj)
        groups.setdefault(_key(value), []).append((obj, value))
    out = []
    for members in groups.values():
        if len(members) < 2:
            continue
        first = members[0][1]
        exact = [(o, v) for o, v in members if v == first]
        distinct: Dict[Any, Any] = {}
        for o, _ in exact:
            distinct.setdefault(canon(o), o)
        if len(distinct) > 1:
            out.append(Collision(kind, first, list(distinct.values())))
    return out
