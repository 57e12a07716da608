"""Seeded corpus generators: random balanced relative complexes, small mixed
graphs (exhaustive and random), and random double posets.

Every generator is deterministic for a fixed seed.  Complexes are built as
closures of random color transversals minus a downward-closed subfamily,
which makes purity and the sandwich property hold by construction.
"""
from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .complexes import ColoredRelativeComplex, downward_closure
from .doubleposet import DoublePoset, NotAPartialOrder
from .mixedgraph import MixedGraph

MAX_GRAPH_IDEALS = 24


def random_complex(rng, min_colors=1, max_colors=4):
    """One random balanced relative complex.

    Facets are random transversals (one vertex per color), so every face of
    the closure extends to a size-d face; the removed part is the closure of
    random non-facet faces, so it is downward closed and the difference
    satisfies the sandwich condition automatically.
    """
    d = rng.randint(min_colors, max_colors)
    block_sizes = [rng.randint(1, 3) for _ in range(d)]
    coloring = [c + 1 for c, size in enumerate(block_sizes) for _ in range(size)]
    n = len(coloring)
    by_color = [[v for v in range(n) if coloring[v] == c + 1] for c in range(d)]

    num_facets = rng.randint(1, min(5, 1 + max(block_sizes) ** d))
    facets = set()
    for _ in range(num_facets):
        facets.add(frozenset(rng.choice(block) for block in by_color))
    delta = downward_closure(facets)

    non_facets = [f for f in delta if f not in facets]
    gamma = set()
    if non_facets and rng.random() < 0.7:
        seeds = rng.sample(non_facets, rng.randint(1, min(3, len(non_facets))))
        gamma = downward_closure(seeds)
    phi = delta - gamma
    return ColoredRelativeComplex([f"v{v}" for v in range(n)], coloring, d, phi)


def random_complexes(count=200, seed=0, min_colors=1, max_colors=4):
    rng = random.Random(seed)
    return [random_complex(rng, min_colors, max_colors) for _ in range(count)]


def _graph_canonical(n, states):
    """Canonical form of a pair-state assignment under vertex relabeling.

    states: dict (u,v) u<v -> 0 none, 1 undirected, 2 u->v, 3 v->u.
    """
    best = None
    for p in permutations(range(n)):
        key = []
        for u, v in combinations(range(n), 2):
            a, b = p.index(u), p.index(v)
            if a > b:
                a, b = b, a
                flip = True
            else:
                flip = False
            s = states[(a, b)]
            if flip and s in (2, 3):
                s = 5 - s
            key.append(s)
        key = tuple(key)
        if best is None or key < best:
            best = key
    return best


def _graph_from_states(n, states):
    und = [frozenset(e) for e, s in states.items() if s == 1]
    dire = [e for e, s in states.items() if s == 2]
    dire += [(v, u) for (u, v), s in states.items() if s == 3]
    return MixedGraph(list(range(n)), und, dire)


def small_mixed_graphs(max_n=4):
    """All acyclic near-cycle-free mixed graphs on <= max_n vertices, one per
    isomorphism class."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        seen = set()
        for assignment in product(range(4), repeat=len(pairs)):
            states = dict(zip(pairs, assignment))
            key = _graph_canonical(n, states)
            if key in seen:
                continue
            seen.add(key)
            g = _graph_from_states(n, states)
            if g.is_acyclic() and not g.stats()["near_cycles"]:
                out.append(g)
    return out


def random_graphs(count=50, sizes=(5, 6), seed=0, max_ideals=MAX_GRAPH_IDEALS):
    """Random acyclic near-cycle-free mixed graphs, capped so that the ideal
    count keeps the chain complex small."""
    from .mixedgraph import order_ideals

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice(sizes)
        und, dire = [], []
        for u, v in combinations(range(n), 2):
            r = rng.random()
            if r < 0.25:
                und.append(frozenset((u, v)))
            elif r < 0.45:
                dire.append((u, v) if rng.random() < 0.5 else (v, u))
        g = MixedGraph(list(range(n)), und, dire)
        if not g.is_acyclic() or g.stats()["near_cycles"]:
            continue
        if len(order_ideals(g)) - 2 > max_ideals:
            continue
        out.append(g)
    return out


def m_two_graph():
    """Four-cycle with opposite directed edges: the least mixed cycle has two
    undirected edges."""
    a, b, c, d = range(4)
    return MixedGraph(list("abcd"), [frozenset((a, d)), frozenset((b, c))],
                      [(a, b), (d, c)])


def m_three_graph():
    """Six-cycle alternating directed and undirected edges: m = 3."""
    return MixedGraph(list(range(6)),
                      [frozenset((1, 2)), frozenset((3, 4)), frozenset((5, 0))],
                      [(0, 1), (2, 3), (4, 5)])


def random_double_posets(count=500, max_n=4, seed=0, require=None):
    """Distinct double posets from closures of random relations.

    require: optional predicate (for instance tertispecial) applied after
    construction; dedup is on the exact closed relation pair.
    """
    rng = random.Random(seed)
    out = []
    seen = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError("generator stalled; relax the filter")
        n = rng.randint(1, max_n)
        all_pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        r1 = rng.sample(all_pairs, rng.randint(0, min(4, len(all_pairs))))
        r2 = rng.sample(all_pairs, rng.randint(0, min(4, len(all_pairs))))
        try:
            dp = DoublePoset(list(range(n)), r1, r2)
        except NotAPartialOrder:
            continue
        if require is not None and not require(dp):
            continue
        key = (n, tuple(map(tuple, dp.leq1)), tuple(map(tuple, dp.leq2)))
        if key in seen:
            continue
        seen.add(key)
        out.append(dp)
    return out


def tertispecial_double_posets(count=500, max_n=4, seed=0):
    return random_double_posets(count, max_n, seed,
                                require=lambda dp: dp.is_tertispecial())
