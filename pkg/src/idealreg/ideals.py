"""Monomial ideals: minimal generators, membership, standard monomials.

G(I) is the unique minimal monomial generating set; everything here is
purely combinatorial and characteristic-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .monomials import (
    Monomial,
    compare_revlex,
    compare_tau,
    degree,
    divides,
    gcd_monomial,
    lcm_monomial,
    mono_div,
    mono_mul,
    one,
    support,
)


def minimalize(monomials):
    """Prune to the minimal generating set (drop multiples)."""
    gens = sorted(set(monomials), key=degree)
    out = []
    for u in gens:
        if not any(divides(v, u) for v in out):
            out.append(u)
    return out


def _sort_key(u):
    return (degree(u), tuple(-e for e in u))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple  # minimal generators, sorted

    @classmethod
    def from_gens(cls, nvars, monomials):
        monomials = list(monomials)
        if not monomials:
            raise ValueError("empty generating set")
        for u in monomials:
            if len(u) != nvars:
                raise ValueError("generator ambient mismatch")
        gens = tuple(sorted(minimalize(monomials), key=_sort_key))
        return cls(nvars, gens)

    def contains_monomial(self, u):
        return any(divides(g, u) for g in self.gens)

    @property
    def is_unit(self):
        return self.gens == (one(self.nvars),)

    @property
    def is_squarefree(self):
        return all(all(e <= 1 for e in g) for g in self.gens)

    @property
    def is_equigenerated(self):
        return len({degree(g) for g in self.gens}) == 1

    def max_gen_degree(self):
        return max(degree(g) for g in self.gens)

    def lcm_of_gens(self):
        acc = one(self.nvars)
        for g in self.gens:
            acc = lcm_monomial(acc, g)
        return acc

    def product(self, other):
        if self.nvars != other.nvars:
            raise ValueError("ambient mismatch")
        prods = {mono_mul(u, v) for u in self.gens for v in other.gens}
        return MonomialIdeal.from_gens(self.nvars, prods)

    def standard_monomials(self, e):
        """Degree-e monomials outside the ideal, by pruned DFS."""
        out = []
        self._std_dfs(0, [], e, list(self.gens), out)
        return out

    def hilbert_function(self, e):
        """dim_K (R/I)_e = number of degree-e standard monomials."""
        return len(self.standard_monomials(e))

    def _std_dfs(self, pos, prefix, rest, alive, out):
        n = self.nvars
        if pos == n:
            if rest == 0:
                out.append(tuple(prefix))
            return
        remaining_vars = n - pos - 1
        for a in range(rest, -1, -1):
            if remaining_vars == 0 and a != rest:
                break
            nxt = []
            dead = False
            for g in alive:
                if g[pos] > a:
                    continue
                if all(x == 0 for x in g[pos + 1 :]):
                    dead = True  # generator divides the prefix
                    break
                nxt.append(g)
            if dead:
                continue
            prefix.append(a)
            self._std_dfs(pos + 1, prefix, rest - a, nxt, out)
            prefix.pop()

    def standard_divisors_of(self, cap_monomial):
        """Standard monomials dividing cap_monomial (any degree)."""
        out = []
        self._std_div_dfs(0, [], list(self.gens), cap_monomial, out)
        return out

    def _std_div_dfs(self, pos, prefix, alive, cap, out):
        if pos == self.nvars:
            out.append(tuple(prefix))
            return
        for a in range(cap[pos] + 1):
            nxt = []
            dead = False
            for g in alive:
                if g[pos] > a:
                    continue
                if all(x == 0 for x in g[pos + 1 :]):
                    dead = True
                    break
                nxt.append(g)
            if dead:
                continue
            prefix.append(a)
            self._std_div_dfs(pos + 1, prefix, nxt, cap, out)
            prefix.pop()

    def __str__(self):
        from .monomials import format_monomial

        return "ideal(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def intersect(I, J):
    """Intersection of monomial ideals: pairwise lcms, minimalized."""
    if I.nvars != J.nvars:
        raise ValueError("ambient mismatch")
    return MonomialIdeal.from_gens(
        I.nvars, (lcm_monomial(u, v) for u in I.gens for v in J.gens)
    )


def colon_by_variable_power(I, i):
    """(I : x_i^infinity): zero out the x_i exponent of every generator."""
    gens = []
    for g in I.gens:
        h = list(g)
        h[i - 1] = 0
        gens.append(tuple(h))
    return MonomialIdeal.from_gens(I.nvars, gens)


def saturation(I):
    """(I : m^infinity) computed combinatorially (test oracle route)."""
    acc = None
    for i in range(1, I.nvars + 1):
        J = colon_by_variable_power(I, i)
        acc = J if acc is None else intersect(acc, J)
    return acc


def dimension_monomial(I):
    """Krull dimension of R/I: n minus the least vertex cover of supports."""
    from itertools import combinations

    if I.is_unit:
        raise ValueError("unit ideal has empty quotient")
    supports = [set(support(g)) for g in I.gens]
    n = I.nvars
    for k in range(n + 1):
        for cover in combinations(range(1, n + 1), k):
            cset = set(cover)
            if all(s & cset for s in supports):
                return n - k
    raise AssertionError("unreachable")
