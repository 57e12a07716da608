"""Depth conditions and the restriction theorem."""
import pytest

from conftest import fig1_complex

from eqflag.complexes import ColoredRelativeComplex
from eqflag.corpus import random_complexes
from eqflag.mixedgraph import MixedGraph, coloring_complex
from eqflag.serre import (is_relatively_cm, satisfies_serre, serre_depth,
                          verify_restriction_theorem)


class TestSerre:
    def test_fig1_full_depth(self):
        cx = fig1_complex()
        assert serre_depth(cx) == 3
        assert is_relatively_cm(cx)

    def test_ell_guard(self):
        with pytest.raises(ValueError):
            satisfies_serre(fig1_complex(), 0)

    def test_disconnected_pair_of_edges(self):
        # two disjoint edges: depth 1 (the empty-face link sees two components)
        cx = ColoredRelativeComplex(list("abcd"), [1, 2, 1, 2], 2,
                                    [frozenset(), {0}, {1}, {2}, {3},
                                     {0, 1}, {2, 3}])
        assert serre_depth(cx) == 1
        ok, witness = satisfies_serre(cx, 2)
        assert not ok and witness[0] == frozenset()

    def test_nested_conditions(self):
        # (S_ell) for ell <= depth, fails above
        cx = fig1_complex()
        for ell in (1, 2, 3):
            assert satisfies_serre(cx, ell)[0]


class TestRestriction:
    def test_fig1_all_subsets(self):
        report = verify_restriction_theorem(fig1_complex())
        assert report["holds_on_input"]
        assert report["checked"] == 8
        assert report["counterexamples"] == []

    def test_corpus_sample(self):
        for cx in random_complexes(25, seed=7):
            depth = serre_depth(cx)
            if depth == 0:
                continue
            report = verify_restriction_theorem(cx, depth)
            assert report["counterexamples"] == [], (cx, depth)

    def test_coloring_complex_depth_vs_m(self):
        # one directed path: no mixed cycle, full depth
        g = MixedGraph(list(range(3)), [], [(0, 1), (1, 2)])
        cx, _ = coloring_complex(g)
        assert serre_depth(cx) == cx.d
