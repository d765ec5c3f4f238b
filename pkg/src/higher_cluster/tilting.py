"""Tilting objects: maximal pairwise non-intertwining families.

A tilting object is a family of C(n+d-1, d) pairwise non-intertwining
indecomposables.  Every such family is a maximal clique of the
compatibility graph (edge = the two objects do not intertwine), but the
converse fails once d >= 3: the graph has maximal cliques strictly
smaller than the tilting size, e.g. three of them at (n, d) = (2, 3).
Those are surfaced as anomalies rather than silently dropped.  A clique
larger than C(n+d-1, d) would falsify the model; none has ever appeared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import TiltingError
from .hom import calculator_for
from .model import (
    IndObj,
    ModelParams,
    enumerate_indecomposables,
    intertwines,
    is_admissible,
    shift,
)


@dataclass(frozen=True)
class TiltingObject:
    summands: tuple[IndObj, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    def position(self, t: IndObj) -> int:
        return self.summands.index(t)

    def shifted(self, steps: int, params: ModelParams) -> "TiltingObject":
        return TiltingObject(tuple(shift(t, steps, params) for t in self.summands))

    def __len__(self):
        return len(self.summands)


def expected_tilting_size(params: ModelParams) -> int:
    return math.comb(params.n + params.d - 1, params.d)


@dataclass(frozen=True)
class CompatibilityGraph:
    """Vertices in enumeration order; neighbours as index sets."""

    objects: tuple[IndObj, ...]
    neighbors: tuple[frozenset, ...]

    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2


@lru_cache(maxsize=None)
def compatibility_graph(params: ModelParams) -> CompatibilityGraph:
    objects = enumerate_indecomposables(params)
    m = len(objects)
    neighbors = [set() for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if not intertwines(objects[i], objects[j], params):
                neighbors[i].add(j)
                neighbors[j].add(i)
    return CompatibilityGraph(objects, tuple(frozenset(nb) for nb in neighbors))


def _maximal_cliques(neighbors):
    """Bron-Kerbosch with pivoting; canonical order throughout."""
    cliques = []

    def expand(clique, candidates, excluded):
        if not candidates and not excluded:
            cliques.append(tuple(sorted(clique)))
            return
        # pivot on the vertex covering most candidates; ties to the
        # smallest index keep the recursion deterministic
        pivot = max(
            sorted(candidates | excluded),
            key=lambda u: len(candidates & neighbors[u]),
        )
        for v in sorted(candidates - neighbors[pivot]):
            expand(clique + [v], candidates & neighbors[v], excluded & neighbors[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand([], set(range(len(neighbors))), set())
    return sorted(cliques)


@lru_cache(maxsize=None)
def maximal_families(params: ModelParams):
    """(tilting objects, anomalies): all maximal cliques, split by size.

    Anomalies are maximal cliques whose size differs from C(n+d-1, d).
    None exist at d <= 2 in the verified range; from d = 3 on the
    compatibility complex is not pure and smaller maximal families are
    normal.  Larger ones would be a genuine violation.
    """
    graph = compatibility_graph(params)
    size = expected_tilting_size(params)
    tilting = []
    anomalies = []
    for clique in _maximal_cliques(graph.neighbors):
        family = tuple(graph.objects[i] for i in clique)
        if len(family) == size:
            tilting.append(TiltingObject(family))
        else:
            anomalies.append(family)
    return tuple(tilting), tuple(anomalies)


def enumerate_tilting(params: ModelParams) -> tuple[TiltingObject, ...]:
    return maximal_families(params)[0]


def validate_tilting(candidate, params: ModelParams) -> TiltingObject:
    """Check every defining property of a tilting object, or reject.

    Rejections carry a machine-readable reason tag and the offending
    witness: non-admissible-summand, size-mismatch, intertwining-pair,
    hom-to-shift, not-maximal.
    """
    summands = tuple(sorted(set(tuple(sorted(t)) for t in candidate)))
    for t in summands:
        if not is_admissible(t, params):
            raise TiltingError(
                "non-admissible-summand", t, f"summand {t} is not admissible"
            )
    expected = expected_tilting_size(params)
    if len(summands) != expected:
        raise TiltingError(
            "size-mismatch",
            (len(summands), expected),
            f"got {len(summands)} distinct summands, expected {expected}",
        )
    for i, s in enumerate(summands):
        for t in summands[i + 1:]:
            if intertwines(s, t, params):
                raise TiltingError(
                    "intertwining-pair", (s, t), f"summands {s} and {t} intertwine"
                )
    calc = calculator_for(params)
    for s in summands:
        for t in summands:
            if calc.hom_dim(s, shift(t, 1, params)) != 0:
                raise TiltingError(
                    "hom-to-shift",
                    (s, t),
                    f"Hom({s}, translate of {t}) is nonzero",
                )
    present = set(summands)
    for obj in enumerate_indecomposables(params):
        if obj in present:
            continue
        if all(not intertwines(obj, s, params) for s in summands):
            raise TiltingError(
                "not-maximal", obj, f"family extends by {obj} without intertwining"
            )
    return TiltingObject(summands)
