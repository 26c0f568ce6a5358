#!/usr/bin/env python3
"""Characteristic dependence of Betti tables on a topological fixture.

The Stanley-Reisner ideal of the 6-vertex minimal triangulation of the real
projective plane is the classic example of a monomial ideal whose minimal
free resolution depends on the coefficient field: over characteristic 2 the
mod-2 homology of the surface contributes extra syzygies and the regularity
jumps from 3 to 4.  This script prints the full tables over a list of
characteristics and runs the linear-quotient search (which is combinatorial
and therefore field-independent).
"""

import argparse
import sys
from itertools import combinations

from idealreg import betti
from idealreg.graded import GradedIdealView
from idealreg.ideals import MonomialIdeal
from idealreg.quotients import search_order

FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def projective_plane_ideal():
    facets = {frozenset(f) for f in FACETS}
    gens = [
        tuple(1 if i + 1 in t else 0 for i in range(6))
        for t in combinations(range(1, 7), 3)
        if frozenset(t) not in facets
    ]
    return MonomialIdeal.from_gens(6, gens)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--chars", default="0,2,3,32003",
        help="comma-separated list of characteristics (0 or prime)",
    )
    args = ap.parse_args()

    mi = projective_plane_ideal()
    print(f"ideal: {len(mi.gens)} squarefree cubic generators in 6 variables")
    regs = {}
    for text in args.chars.split(","):
        p = int(text)
        table = betti.betti_table(GradedIdealView.from_monomial_ideal(mi, p))
        r = betti.regularity(GradedIdealView.from_monomial_ideal(mi, p))
        regs[p] = r.value
        print(f"\ncharacteristic {p}: reg = {r.value} "
              f"(certified: {r.certified})")
        print(table.render())

    print("\nlinear-quotient search (field-independent):", end=" ")
    cert = search_order(mi)
    print("order found" if cert else "no order exists")

    if 0 in regs and 2 in regs and regs[2] > regs[0]:
        print(f"\nregularity jump confirmed: {regs[0]} (char 0) "
              f"-> {regs[2]} (char 2)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
