"""Balanced relative complexes: validation, restrictions, links, actions."""
import pytest

from conftest import fig1_complex, fig1_z2

from eqflag.complexes import (ActionDoesNotPreservePair, ColoredRelativeComplex,
                              FaceNotInDelta, GroupAction, InvalidComplex,
                              color_automorphism_group, downward_closure,
                              dump_complex, load_complex)
from eqflag.groups import Permutation, close_group


class TestValidation:
    def test_fig1_is_valid(self):
        cx = fig1_complex()
        assert cx.validate() == []
        assert cx.d == 3 and cx.dim == 2

    def test_sandwich_violation(self):
        with pytest.raises(InvalidComplex, match="sandwich"):
            ColoredRelativeComplex(list("abc"), [1, 2, 3], 3,
                                   [{0}, {0, 1, 2}])

    def test_color_repeat_rejected(self):
        with pytest.raises(InvalidComplex, match="repeats"):
            ColoredRelativeComplex(list("ab"), [1, 1], 2, [{0, 1}])

    def test_purity_violation(self):
        # a lone small face with no size-d extension
        with pytest.raises(InvalidComplex, match="extension"):
            ColoredRelativeComplex(list("abc"), [1, 2, 3], 3, [{0}])

    def test_empty_face_allowed(self):
        cx = ColoredRelativeComplex(list("a"), [1], 1, [frozenset(), {0}])
        assert frozenset() in cx.faces and cx.gamma == frozenset()

    def test_relative_part_derived(self):
        cx = fig1_complex()
        assert frozenset() in cx.gamma
        assert all(f not in cx.faces for f in cx.gamma)
        assert cx.delta == cx.faces | cx.gamma


class TestRestriction:
    def test_color_restriction_keeps_indices(self):
        cx = fig1_complex()
        rest = cx.color_restriction({2})
        assert rest == {frozenset({4})}

    def test_restrict_reindexes(self):
        cx = fig1_complex()
        sub = cx.restrict([2, 3])
        assert sub.d == 2
        assert sorted(sub.vertices) == ["b", "d", "e"]
        assert sub.validate() == []

    def test_restrict_full_is_identity_on_faces(self):
        cx = fig1_complex()
        sub = cx.restrict([1, 2, 3])
        assert len(sub.faces) == len(cx.faces)


class TestLink:
    def test_link_of_center(self):
        cx = fig1_complex()
        pair = cx.link({4})
        # the link of e is the square boundary relative to its vertices/edges
        assert pair.phi_dim() == 1
        assert len(pair.phi_faces) == 9

    def test_link_outside_delta(self):
        cx = fig1_complex()
        with pytest.raises(FaceNotInDelta):
            cx.link({0, 2})

    def test_void_link(self):
        cx = ColoredRelativeComplex(list("a"), [1], 1, [frozenset(), {0}])
        pair = cx.link({0})
        assert pair.phi_dim() == -1  # only the empty face remains


class TestAction:
    def test_fig1_action_valid(self):
        GroupAction(fig1_complex(), fig1_z2())

    def test_color_breaking_rejected(self):
        cx = fig1_complex()
        with pytest.raises(ActionDoesNotPreservePair):
            GroupAction(cx, close_group([Permutation([4, 1, 2, 3, 0])], degree=5))

    def test_fixed_faces_vertexwise(self):
        cx = fig1_complex()
        act = GroupAction(cx, fig1_z2())
        g = act.group.generators[0]
        assert {frozenset(f) for f in act.fixed_faces(g)} == {frozenset({4})}

    def test_full_automorphism_group(self):
        # Z/2 x Z/2: swap a<->c, swap b<->d, independently
        grp = color_automorphism_group(fig1_complex())
        assert grp.order == 4


class TestJson:
    def test_roundtrip(self):
        cx = fig1_complex()
        again = load_complex(dump_complex(cx))
        assert again.faces == cx.faces and again.coloring == cx.coloring

    def test_downward_closure(self):
        closed = downward_closure([frozenset({0, 1})])
        assert closed == {frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})}
