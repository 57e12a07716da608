#!/usr/bin/env python3
"""Walkthrough: partition enumerators of two small double posets.

The first example has covers that are incomparable in the second order; its
enumerator picks up a negative fundamental coefficient.  The second is
tertispecial (covers always second-order comparable) and every fundamental
coefficient is an effective character.
"""
from eqflag import (DoublePoset, character_table, decompose, m_to_f,
                    omega_qsym, to_mixed_graph, verify_doubleposet_theorems)

LINE = "-" * 72


def describe(name, dp):
    grp = dp.automorphism_group()
    table = character_table(grp)
    print(LINE)
    print(f"{name}: {dp.n} elements, automorphisms {grp.order}, "
          f"tertispecial {dp.is_tertispecial()}, "
          f"inversion-reducible {dp.is_inversion_reducible()}")
    print(f"inversions {dp.inversions()}, descents {dp.descents()}")
    print(f"partitions with k = 1..4 colors: "
          f"{[len(dp.d_partitions(k)) for k in range(1, 5)]}")

    q = omega_qsym(dp, grp)
    print("monomial expansion:")
    for s in sorted(q.coeffs, key=lambda t: (len(t), t)):
        if not q.coeff(s).is_zero():
            print(f"  M_{set(s) if s else '{}'}: {list(q.coeff(s).values)}")
    f = m_to_f(q)
    print("fundamental expansion with irreducible multiplicities:")
    for s in sorted(f.coeffs, key=lambda t: (len(t), t)):
        cf = f.coeff(s)
        if not cf.is_zero():
            mults = decompose(cf, table)
            flag = "" if all(m >= 0 for m in mults) else "   <-- not effective"
            print(f"  F_{set(s) if s else '{}'}: {list(cf.values)}, "
                  f"mults {mults}{flag}")

    g = to_mixed_graph(dp)
    st = g.stats()
    print(f"cover graph: acyclic {st['acyclic']}, "
          f"coherent mixed cycles {len(st['coherent_mixed_cycles'])}")
    print(f"verifier: {verify_doubleposet_theorems(dp, grp, table)['ok']}")


def main():
    a, b, c, d = range(4)
    crossed = DoublePoset(list("abcd"),
                          [(a, b), (c, d), (c, b), (a, d)],
                          [(b, c), (d, a)])
    chained = DoublePoset(list("abcd"),
                          [(b, a), (c, b), (c, d), (d, a)],
                          [(b, a), (d, c), (d, a), (b, c)])
    describe("crossed double poset", crossed)
    describe("tertispecial double poset", chained)
    print(LINE)


if __name__ == "__main__":
    main()
