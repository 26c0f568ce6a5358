"""Gap-chain ideals and their products.

A gap chain is a squarefree monomial x_{i_1} ... x_{i_k} whose indices
increase by at least 2.  J_k denotes the ideal generated by all gap chains
of degree k; these are the initial ideals of the ideals of k-minors of a
generic Hankel matrix.  Every monomial factors canonically into gap
chains (greedily extracting the lex-greatest dividing chain), the degree
sequence of the factors is its shape, and the statistic

    gamma_t(s) = sum_i max(s_i - t + 1, 0)

controls membership in the generating set Omega of a product
J_{t_1} ... J_{t_p}.  The sigma order on Omega (factorwise lex comparison
of canonical decompositions) yields linear quotients, with an explicit
one-variable witness per comparable pair; the certificate pins the
regularity of the product at sum t_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from itertools import combinations, combinations_with_replacement

from .ideals import MonomialIdeal
from .monomials import (
    compare_tau,
    degree,
    format_monomial,
    gcd_monomial,
    mono_div,
    mono_mul,
    monomial_basis,
    one,
    support,
    variable,
)
from .quotients import QuotientCertificate, check_order

OMEGA_GUARD = 50_000
ENUM_GUARD = 10_000_000


@dataclass(frozen=True)
class ChainProductSpec:
    """Product J_{t_1} ... J_{t_p} in n variables, t weakly decreasing."""

    nvars: int
    sizes: tuple

    def __post_init__(self):
        top = (self.nvars + 1) // 2
        if not self.sizes:
            raise ValueError("at least one factor required")
        if list(self.sizes) != sorted(self.sizes, reverse=True):
            raise ValueError("sizes must be weakly decreasing")
        for t in self.sizes:
            if not 1 <= t <= top:
                raise ValueError(f"size {t} outside 1..{top} for n = {self.nvars}")

    @property
    def total_degree(self):
        return sum(self.sizes)


def is_chain(u):
    """Squarefree with support indices increasing by gaps of at least 2."""
    if degree(u) < 1:
        raise ValueError("the unit monomial is not a chain")
    if any(e > 1 for e in u):
        return False
    supp = support(u)
    return all(b - a > 1 for a, b in zip(supp, supp[1:]))


def chain_generators(n, k):
    """All degree-k gap chains in n variables; there are C(n-k+1, k)."""
    if not 1 <= k <= (n + 1) // 2:
        raise ValueError(f"chain degree {k} outside 1..{(n + 1) // 2}")
    out = []
    for picks in combinations_with_replacement(range(1, n - 2 * (k - 1) + 1), k):
        idx = [p + 2 * j for j, p in enumerate(picks)]
        m = one(n)
        for i in idx:
            m = mono_mul(m, variable(i, n))
        out.append(m)
    return out


def chain_ideal(n, k):
    return MonomialIdeal.from_gens(n, chain_generators(n, k))


def _greedy_chain(u):
    """The lex-greatest gap chain dividing u: smallest admissible indices."""
    n = len(u)
    chain = one(n)
    last = -2
    for i in range(1, n + 1):
        if u[i - 1] > 0 and i - last > 1:
            chain = mono_mul(chain, variable(i, n))
            last = i
    return chain


@dataclass(frozen=True)
class CanonicalDecomposition:
    factors: tuple  # gap chains, degrees weakly decreasing

    @property
    def shape(self):
        return tuple(degree(f) for f in self.factors)

    def render(self):
        return "".join(f"({format_monomial(f)})" for f in self.factors)


@lru_cache(maxsize=None)
def canonical_decomposition(u):
    """Greedy factorization into gap chains; factors are lex-maximal in turn."""
    u = tuple(u)
    if degree(u) < 1:
        raise ValueError("the unit monomial has no decomposition")
    rest = tuple(u)
    factors = []
    while degree(rest) > 0:
        c = _greedy_chain(rest)
        factors.append(c)
        rest = mono_div(rest, c)
    dec = CanonicalDecomposition(tuple(factors))
    assert dec.shape == tuple(sorted(dec.shape, reverse=True)), (
        "canonical shape must be weakly decreasing"
    )
    return dec


def all_chain_decompositions(u):
    """Every factorization of u into gap chains (brute-force; test oracle)."""
    if degree(u) == 0:
        return [()]
    n = len(u)
    supp = [i for i in range(1, n + 1) if u[i - 1] > 0]
    chains = []
    for r in range(1, len(supp) + 1):
        for picks in combinations(supp, r):
            if all(b - a > 1 for a, b in zip(picks, picks[1:])):
                m = one(n)
                for i in picks:
                    m = mono_mul(m, variable(i, n))
                chains.append(m)
    out = []
    seen = set()

    def walk(rest, acc, start_chains):
        if degree(rest) == 0:
            key = tuple(sorted(acc))
            if key not in seen:
                seen.add(key)
                out.append(tuple(acc))
            return
        for c in start_chains:
            if all(a <= b for a, b in zip(c, rest)):
                walk(mono_div(rest, c), acc + [c], start_chains)

    walk(tuple(u), [], chains)
    return out


def gamma(t, s):
    """gamma_t of an integer sequence, or of a monomial via its shape."""
    if t < 1:
        raise ValueError("gamma index must be at least 1")
    if isinstance(s, tuple) and s and not isinstance(s[0], int):
        raise TypeError("sequence of integers expected")
    if s and any(x < 0 for x in s):
        raise ValueError("negative entry in shape")
    return sum(max(x - t + 1, 0) for x in s)


def gamma_of_monomial(t, u):
    return gamma(t, canonical_decomposition(u).shape)


@dataclass(frozen=True)
class OmegaSet:
    spec: ChainProductSpec
    members: tuple  # sigma-descending


def sigma_compare(u, v):
    """Compare same-degree monomials by their canonical decompositions.

    The first differing factor decides, by lex comparison; returns -1/0/1.
    """
    if degree(u) != degree(v):
        raise ValueError("sigma comparison requires equal degrees")
    if u == v:
        return 0
    fu = canonical_decomposition(u).factors
    fv = canonical_decomposition(v).factors
    for a, b in zip(fu, fv):
        if a != b:
            return compare_tau(a, b)
    raise AssertionError("distinct monomials with identical decompositions")


def omega(spec):
    """The generating set Omega of J_{t_1} ... J_{t_p}, sigma-descending.

    Membership: degree sum(t) and gamma_i(m) >= gamma_i(t) for all i.  The
    result is cross-checked against the minimal generators of the actual
    product of chain ideals, computed independently.
    """
    n = spec.nvars
    d = spec.total_degree
    from math import comb

    if comb(d + n - 1, n - 1) > ENUM_GUARD:
        raise ValueError("enumeration guard exceeded")
    targets = [(i, gamma(i, spec.sizes)) for i in range(1, spec.sizes[0] + 1)]
    members = []
    for m in monomial_basis(n, d):
        shape = canonical_decomposition(m).shape
        if all(gamma(i, shape) >= g for i, g in targets):
            members.append(m)
    if len(members) > OMEGA_GUARD:
        raise ValueError("Omega guard exceeded")
    product = chain_ideal(n, spec.sizes[0])
    for t in spec.sizes[1:]:
        product = product.product(chain_ideal(n, t))
    assert set(members) == set(product.gens), (
        "Omega disagrees with the product's minimal generators"
    )
    members.sort(key=cmp_to_key(sigma_compare), reverse=True)
    return OmegaSet(spec, tuple(members))


def quotient_witness(spec, m, n_mono):
    """The one-variable colon witness for a sigma-comparable pair of Omega.

    For m sigma-greater than n the witness v is in Omega, sigma-greater
    than n, and v/gcd(v, n) is a single variable dividing m/gcd(m, n);
    these facts are asserted, not trusted.
    """
    nv = spec.nvars
    if sigma_compare(m, n_mono) <= 0:
        raise ValueError("witness needs m sigma-greater than n")
    fm = canonical_decomposition(m).factors
    fn = canonical_decomposition(n_mono).factors
    j = next(k for k in range(min(len(fm), len(fn))) if fm[k] != fn[k])
    a = support(fm[j])
    b = support(fn[j])
    z = 0
    while z < min(len(a), len(b)) and a[z] == b[z]:
        z += 1
    if z < len(b) and z < len(a) and a[z] < b[z]:
        v = mono_mul(mono_div(n_mono, variable(b[z], nv)), variable(a[z], nv))
    elif z == len(b) and len(a) >= z + 1:
        # n's j-th factor is exhausted: borrow from the next factor of n
        q = support(fn[j + 1])[0]
        v = mono_mul(mono_div(n_mono, variable(q, nv)), variable(a[z], nv))
    else:
        raise AssertionError("impossible case split for a sigma-greater pair")
    x_az = variable(a[z], nv)
    assert mono_div(v, gcd_monomial(v, n_mono)) == x_az, "witness colon not linear"
    assert all(
        p <= q for p, q in zip(x_az, mono_div(m, gcd_monomial(m, n_mono)))
    ), "witness variable must divide m/gcd(m, n)"
    assert sigma_compare(v, n_mono) > 0, "witness not sigma-greater"
    shape = canonical_decomposition(v).shape
    assert degree(v) == spec.total_degree and all(
        gamma(i, shape) >= gamma(i, spec.sizes)
        for i in range(1, spec.sizes[0] + 1)
    ), "witness left Omega"
    return v


def certify_product(spec, validate_pairs=True):
    """Linear-quotient certificate for J_{t_1} ... J_{t_p} in sigma order.

    Omega sigma-descending is certified through the generic order checker;
    optionally every sigma-comparable pair is additionally validated by its
    explicit witness.  The certified regularity is sum(t_i).
    """
    om = omega(spec)
    cert = check_order(spec.nvars, om.members)
    assert isinstance(cert, QuotientCertificate), (
        "sigma order must give linear quotients"
    )
    if validate_pairs:
        for k, n_mono in enumerate(om.members):
            for m in om.members[:k]:
                quotient_witness(spec, m, n_mono)
    assert cert.max_degree() == spec.total_degree
    return cert
