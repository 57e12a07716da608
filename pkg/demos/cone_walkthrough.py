#!/usr/bin/env python3
"""Walkthrough: a cone over a square boundary with a half-turn symmetry.

Builds the relative complex whose faces all contain the apex, lets Z/2 swap
opposite corners of the square, and prints the flag quasisymmetric class
function, its fundamental expansion, the depth, and the relative homology
characters.
"""
from eqflag import (FlagVectors, GroupAction, ColoredRelativeComplex,
                    Permutation, betti, character_table, close_group, decompose,
                    equivariant_homology_traces, hilb, serre_depth)

LINE = "-" * 72


def main():
    # square corners a, b, c, d (colors 1, 3, 1, 3) coned over apex e (color 2);
    # the corner vertices and outer edges are left out of the family
    cx = ColoredRelativeComplex(
        list("abcde"), [1, 3, 1, 3, 2], 3,
        [{4}, {0, 4}, {1, 4}, {2, 4}, {3, 4},
         {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}])
    grp = close_group([Permutation([2, 3, 0, 1, 4])], degree=5)  # (ac)(bd)
    action = GroupAction(cx, grp)
    table = character_table(grp)

    print(LINE)
    print(f"complex: {len(cx.faces)} faces, {cx.d} colors, dimension {cx.dim}")
    print(f"group: order {grp.order}, classes identity / half-turn")

    for basis in ("M", "F"):
        q = hilb(cx, action, basis=basis)
        print(LINE)
        print(f"{basis}-expansion (per-class values, then irreducible mults):")
        for s in sorted(q.coeffs, key=lambda t: (len(t), t)):
            cf = q.coeff(s)
            if cf.is_zero():
                continue
            print(f"  {basis}_{set(s)}: values {list(cf.values)}, "
                  f"mults {decompose(cf, table)}")

    print(LINE)
    fv = FlagVectors(cx, action)
    print("aggregate f (by face size):", [c.at_identity for c in fv.fi])
    print("aggregate h (by face size):", [c.at_identity for c in fv.hi])

    depth = serre_depth(cx)
    print(LINE)
    print(f"depth {depth} of a possible {cx.d} "
          f"({'relatively Cohen-Macaulay' if depth == cx.d else 'not maximal'})")
    print("relative betti numbers:", betti(cx.faces))
    traces = equivariant_homology_traces(cx.faces, grp)
    for dim, cf in sorted(traces.items()):
        if not cf.is_zero():
            print(f"homology character in dimension {dim}: {list(cf.values)}")
    print(LINE)


if __name__ == "__main__":
    main()
