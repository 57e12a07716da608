"""Equivariant flag enumeration: f/h characters, Hilbert-series class
functions, the two-set refinement h_{S,T}, and inequality verifiers.

The flag f-character f_S is the permutation character of the group acting on
the faces whose color set is exactly S; h_S is its inclusion-exclusion
transform over subsets of S.  A key simplification used throughout: for
Q inside T, the Q-fiber of the color restriction to T equals the Q-fiber of
the whole family, so restrictions never need re-indexing here.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .groups import (ClassFunction, close_group, induce, is_effective, leq_g,
                     orbit_count, orbits, permutation_character, stabilizer)
from .homology import equivariant_homology_traces
from .qsym import QSymClassFunction, m_to_f, subsets


class FlagError(Exception):
    pass


class ThreeWayMismatch(FlagError):
    pass


def fiber(faces, coloring, s):
    """Faces with color set exactly s."""
    s = frozenset(s)
    return [f for f in faces if frozenset(coloring[v] for v in f) == s]


def fiber_character(faces, coloring, group, s):
    """Permutation character of the group on the s-fiber."""
    fib = fiber(faces, coloring, s)
    return permutation_character(group, fib, lambda g, f: g.apply_set(f), check=False)


def h_character(faces, coloring, group, s):
    """h_S = alternating sum of f_T over subsets T of S."""
    total = ClassFunction.zero(group)
    for t in subsets(sorted(s)):
        total = total + ((-1) ** (len(s) - len(t))) * fiber_character(faces, coloring, group, t)
    return total


class FlagVectors:
    """All flag f/h characters of a complex with action, plus size aggregates.

    fS/hS: dict from color subset (tuple) to ClassFunction.
    fi[i] = sum of f_S over |S| = i (the aggregate f_{i-1});
    hi[i] = sum of h_S over |S| = i (the aggregate h_{i-1}).
    """

    def __init__(self, cx, action):
        self.complex = cx
        self.group = action.group
        faces, coloring, g = cx.faces, cx.coloring, action.group
        self.fS = {}
        self.hS = {}
        for s in subsets(range(1, cx.d + 1)):
            self.fS[s] = fiber_character(faces, coloring, g, s)
            total = ClassFunction.zero(g)
            for t in subsets(s):
                total = total + ((-1) ** (len(s) - len(t))) * self.fS[t]
            self.hS[s] = total
        self.fi = [ClassFunction.zero(g) for _ in range(cx.d + 1)]
        self.hi = [ClassFunction.zero(g) for _ in range(cx.d + 1)]
        for s, cf in self.fS.items():
            self.fi[len(s)] = self.fi[len(s)] + cf
        for s, cf in self.hS.items():
            self.hi[len(s)] = self.hi[len(s)] + cf
        # sanity: f_S at the identity counts the fiber; h inverts back to f
        for s, cf in self.fS.items():
            assert cf.at_identity == len(fiber(faces, coloring, s))
            back = ClassFunction.zero(g)
            for t in subsets(s):
                back = back + self.hS[t]
            assert back == cf


def hilb(cx, action, basis="M"):
    """The flag quasisymmetric class function, degree d+1.

    M-coefficient of a color set S is the permutation character on the
    S-fiber; the F basis is obtained by conversion.
    """
    fv = FlagVectors(cx, action)
    q = QSymClassFunction(cx.d + 1, action.group, "M", dict(fv.fS))
    if basis == "F":
        return m_to_f(q)
    return q


def orbital_hilb(cx, action, out_group=None):
    """Orbit-counting version over the trivial group: M-coefficient of S is
    the number of face orbits in the S-fiber, computed by both explicit
    partitioning and the fixed-point average (asserted equal inside
    orbit_count)."""
    if out_group is None:
        out_group = close_group([], degree=1)
    coeffs = {}
    for s in subsets(range(1, cx.d + 1)):
        fib = fiber(cx.faces, cx.coloring, s)
        if not fib:
            continue
        n = orbit_count(action.group, fib, lambda g, f: g.apply_set(f), check=False)
        coeffs[tuple(s)] = ClassFunction(out_group, [n] * out_group.num_classes)
    return QSymClassFunction(cx.d + 1, out_group, "M", coeffs)


def _link_faces(faces, tau):
    tau = frozenset(tau)
    return [f - tau for f in faces if tau <= f]


def h_st(cx, action, s, t, fv=None):
    """The refinement h_{S,T}, computed three ways and asserted equal.

    (a) sum of h_R over S <= R <= T, on the color restriction to T;
    (b) alternating sum of f_Q over T\\S <= Q <= T, same restriction;
    (c) sum over orbit representatives tau of the (T\\S)-fiber of the induced
        character of h_S of (link of tau) restricted to colors S, over the
        stabilizer of tau.
    """
    s, t = frozenset(s), frozenset(t)
    if not s <= t:
        raise ValueError("need S a subset of T")
    g = action.group
    faces, coloring = cx.faces, cx.coloring
    rest = list(cx.color_restriction(t))

    via_a = ClassFunction.zero(g)
    mid = sorted(t - s)
    for r in range(len(mid) + 1):
        for extra in combinations(mid, r):
            via_a = via_a + h_character(rest, coloring, g, s | frozenset(extra))

    via_b = ClassFunction.zero(g)
    base = t - s
    opt = sorted(s)
    for r in range(len(opt) + 1):
        for extra in combinations(opt, r):
            q = base | frozenset(extra)
            sign = (-1) ** (len(t) - len(q))
            via_b = via_b + sign * fiber_character(rest, coloring, g, q)

    # the transversal runs over the (T\S)-fiber of the closure Delta: the
    # colored part of a Phi-face need not itself be a Phi-face
    via_c = ClassFunction.zero(g)
    fib = fiber(cx.delta, coloring, t - s)
    for orb in orbits(g, fib, lambda p, f: p.apply_set(f)):
        tau = min(orb, key=sorted)
        stab = stabilizer(g, tau, lambda p, f: p.apply_set(f))
        link = _link_faces(faces, tau)
        in_s = [f for f in link if frozenset(coloring[v] for v in f) <= s]
        local = h_character(in_s, coloring, stab, s)
        via_c = via_c + induce(local, g)

    if not (via_a == via_b == via_c):
        raise ThreeWayMismatch(f"S={sorted(s)}, T={sorted(t)}: "
                               f"{via_a.values} / {via_b.values} / {via_c.values}")
    return via_a


def homology_h_st(cx, action, s, t):
    """h_{S,T} in homology form: induced characters of the top homology of the
    color-S restriction of each transversal link (simplicial dimension
    |S| - 1, since the restricted link has faces of size at most |S|)."""
    s, t = frozenset(s), frozenset(t)
    g = action.group
    faces, coloring = cx.faces, cx.coloring
    target_dim = len(s) - 1

    def link_term(tau, stab):
        in_s = [f for f in _link_faces(faces, tau)
                if frozenset(coloring[v] for v in f) <= s]
        traces = equivariant_homology_traces(in_s, stab)
        return traces.get(target_dim, ClassFunction.zero(stab))

    total = ClassFunction.zero(g)
    for orb in orbits(g, fiber(cx.delta, coloring, t - s), lambda p, f: p.apply_set(f)):
        tau = min(orb, key=sorted)
        stab = stabilizer(g, tau, lambda p, f: p.apply_set(f))
        total = total + induce(link_term(tau, stab), g)
    return total


def verify_eulerchar2(cx, action):
    """F-coefficients of Hilb equal alternating homology character sums.

    For each color set S: [F_S] Hilb = sum over i of (-1)^(|S|-i) times the
    character of H_{i-1} of the color restriction to S.  Exact per class.
    """
    g = action.group
    f_expansion = hilb(cx, action, basis="F")
    failures = []
    for s in subsets(range(1, cx.d + 1)):
        rest = list(cx.color_restriction(s))
        traces = equivariant_homology_traces(rest, g)
        rhs = ClassFunction.zero(g)
        for dim, cf in traces.items():
            i = dim + 1
            rhs = rhs + ((-1) ** (len(s) - i)) * cf
        lhs = f_expansion.coeff(s)
        if lhs != rhs:
            failures.append({"S": list(s), "F_coeff": lhs.values, "homology": rhs.values})
    return {"ok": not failures, "failures": failures}


def verify_intro1(cx, action, ell, table=None):
    """Effectiveness of h_{S,T} for |S| <= ell, with the homology form checked
    independently against the combinatorial three-way value."""
    failures = []
    checked = 0
    for t in subsets(range(1, cx.d + 1)):
        for s in subsets(t):
            if len(s) > ell:
                continue
            val = h_st(cx, action, s, t)
            checked += 1
            ok, mults = is_effective(val, table)
            if not ok:
                failures.append({"S": list(s), "T": list(t), "value": val.values,
                                 "multiplicities": mults})
            homo = homology_h_st(cx, action, frozenset(s), frozenset(t))
            if homo != val:
                failures.append({"S": list(s), "T": list(t),
                                 "reason": "homology form disagrees",
                                 "value": val.values, "homology": homo.values})
    return {"ok": not failures, "checked": checked, "failures": failures}


def verify_intro2(cx, action, ell, table=None):
    """h_i effective for i <= ell, plus the binomial h-combinations
    for 0 <= i <= ell <= j <= d, plus the per-S binomial combination."""
    fv = FlagVectors(cx, action)
    d = cx.d
    failures = []
    for i in range(0, min(ell, d) + 1):
        ok, _ = is_effective(fv.hi[i], table)
        if not ok:
            failures.append({"kind": "h_i", "i": i, "value": fv.hi[i].values})
    for i in range(0, ell + 1):
        for j in range(ell, d + 1):
            total = ClassFunction.zero(action.group)
            for k in range(ell, j + 1):
                total = total + comb(d - k, j - k) * comb(k - ell + i, i) * fv.hi[k]
            ok, _ = is_effective(total, table)
            if not ok:
                failures.append({"kind": "binomial", "i": i, "j": j, "value": total.values})
    for s in subsets(range(1, d + 1)):
        for i in range(0, ell + 1):
            total = ClassFunction.zero(action.group)
            for t in subsets(s):
                if len(t) >= ell:
                    total = total + comb(len(t) - (ell - i), i) * fv.hS[tuple(t)]
            ok, _ = is_effective(total, table)
            if not ok:
                failures.append({"kind": "per-S", "S": list(s), "i": i, "value": total.values})
    return {"ok": not failures, "failures": failures}


def verify_intro3(cx, action, ell, table=None):
    """The aggregate f-inequality families under the vanishing hypothesis
    f_{i-1} = 0 for i < ell.

    Asserted: the slope family (d-i) f_{i-1} <= (i-ell+2) f_i for i >= ell,
    and the unimodal/mirror families for the shifted tail starting at
    r = ell-2 (the range the slope family actually supports; see
    shifted_flawless_check).  The unshifted ranges starting at ell admit
    counterexamples, e.g. the f-vector (0, 3, 5, 2) with d = 3, ell = 1;
    their status is reported in "tail_from_ell_ok" without failing the check.
    """
    fv = FlagVectors(cx, action)
    d = cx.d
    zero = ClassFunction.zero(action.group)
    for i in range(0, ell):
        if not fv.fi[i].is_zero():
            return {"ok": True, "skipped": True,
                    "reason": f"hypothesis fails: f_{{{i - 1}}} nonzero"}
    failures = []
    # fi[k] = f_{k-1} throughout
    for i in range(ell, d + 1):
        lhs = (d - i) * fv.fi[i]
        rhs = (i - ell + 2) * (fv.fi[i + 1] if i + 1 <= d else zero)
        if not leq_g(lhs, rhs, table):
            failures.append({"kind": "slope", "i": i})

    def flawless_families(r):
        bad = []
        for i in range(r, (d + r - 1) // 2 + 1):
            if not leq_g(fv.fi[i], fv.fi[i + 1] if i + 1 <= d else zero, table):
                bad.append({"kind": "unimodal", "i": i})
        for i in range(r, (d + r) // 2 + 1):
            j = d + r - i
            other = fv.fi[j] if 0 <= j <= d else zero
            if not leq_g(fv.fi[i], other, table):
                bad.append({"kind": "mirror", "i": i})
        return bad

    report = {"skipped": False}
    if ell >= 2:
        failures.extend(flawless_families(ell - 2))
    report["tail_from_ell_ok"] = not flawless_families(ell)
    report["failures"] = failures
    report["ok"] = not failures
    return report
