"""Command-line interface.

Exit codes: 0 for success or a true verdict, 1 for a false verdict (an
inequality that fails, a non-polymatroidal ideal, a missing order, ...),
2 for malformed input.  Structured output is JSON with sorted keys, so a
run with the same seed and characteristic is byte-identical.
"""

from __future__ import annotations

import json
import sys

import click

from . import betti
from .chains import (
    ChainProductSpec,
    canonical_decomposition,
    certify_product,
    gamma,
    omega,
)
from .fixtures import run_fixtures
from .graded import GradedIdealView, saturation_degree
from .ideals import MonomialIdeal
from .linforms import (
    is_linearly_general,
    primary_components,
    product_generators,
    verify_decomposition,
)
from .monomials import format_monomial, parse_monomial
from .parsing import ParseError, parse_ideal_text, parse_linforms_text
from .polymatroid import (
    is_polymatroidal,
    polymatroidal_product,
    revlex_certificate,
    transversal_ideal,
)
from .quotients import QuotientCertificate, check_order, search_order


def _fail_input(msg):
    click.echo(f"input error: {msg}", err=True)
    sys.exit(2)


def _emit(fmt, text_lines, payload):
    if fmt == "structured":
        click.echo(json.dumps(payload, sort_keys=True, default=str))
    else:
        for line in text_lines:
            click.echo(line)


def _load_monomial_ideal(text, characteristic):
    try:
        mi = parse_ideal_text(text)
    except ParseError as exc:
        _fail_input(str(exc))
    return GradedIdealView.from_monomial_ideal(mi, characteristic)


def _pad_to_common_ambient(I, J):
    if I.nvars == J.nvars:
        return I, J
    n = max(I.nvars, J.nvars)
    pad = lambda X: MonomialIdeal.from_gens(
        n, [g + (0,) * (n - X.nvars) for g in X.gens]
    )
    return pad(I), pad(J)


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "structured"]), default="text"
)
char_option = click.option("--char", "characteristic", type=int, default=0)


@click.group()
def main():
    """Exact regularity and Betti computations for graded ideals."""


@main.command("betti")
@click.option("--ideal", required=True, help="ideal(...) in monomial syntax")
@click.option("--cap", type=int, default=None)
@char_option
@format_option
def betti_cmd(ideal, cap, characteristic, fmt):
    """Betti table and regularity of a monomial ideal."""
    I = _load_monomial_ideal(ideal, characteristic)
    table = betti.betti_table(I, cap)
    reg = betti.regularity(I, cap)
    lines = [table.render(), f"reg = {reg.value}"]
    payload = {
        "entries": {f"{i},{j}": v for (i, j), v in table.entries.items()},
        "ideal_entries": {
            f"{i},{j}": v for (i, j), v in table.ideal_entries().items()
        },
        "cap": table.cap,
        "certified": table.certified,
        "characteristic": characteristic,
        "regularity": reg.value,
    }
    _emit(fmt, lines, payload)


@main.command("inequality")
@click.option("--ideal-i", "ideal_i", required=True)
@click.option("--ideal-j", "ideal_j", required=True)
@click.option("--cap", type=int, default=None)
@char_option
@format_option
def inequality_cmd(ideal_i, ideal_j, cap, characteristic, fmt):
    """Check reg(IJ) <= reg(I) + reg(J) for two monomial ideals."""
    try:
        mi, mj = _pad_to_common_ambient(
            parse_ideal_text(ideal_i), parse_ideal_text(ideal_j)
        )
    except ParseError as exc:
        _fail_input(str(exc))
    I = GradedIdealView.from_monomial_ideal(mi, characteristic)
    J = GradedIdealView.from_monomial_ideal(mj, characteristic)
    rep = betti.inequality_report(I, J, cap)
    lines = [
        f"reg(I) = {rep.reg_i.value}",
        f"reg(J) = {rep.reg_j.value}",
        f"reg(IJ) = {rep.reg_product.value}",
        f"inequality holds: {rep.holds}",
    ]
    payload = {
        "reg_i": rep.reg_i.value,
        "reg_j": rep.reg_j.value,
        "reg_product": rep.reg_product.value,
        "holds": rep.holds,
        "characteristic": characteristic,
    }
    _emit(fmt, lines, payload)
    sys.exit(0 if rep.holds else 1)


@main.group()
def quotients():
    """Linear-quotient certificates."""


@quotients.command("check")
@click.option("--ideal", required=True, help="generators in the order to check")
@format_option
def quotients_check(ideal, fmt):
    try:
        mi = parse_ideal_text(ideal)
    except ParseError as exc:
        _fail_input(str(exc))
    body = ideal.strip()[len("ideal("):-1]
    order = [parse_monomial(p.strip(), mi.nvars)[0] for p in body.split(",")]
    res = check_order(mi.nvars, order)
    if isinstance(res, QuotientCertificate):
        _emit(fmt, [res.render(), f"reg = {res.max_degree()}"],
              {"certificate": res.to_dict(), "reg": res.max_degree()})
        sys.exit(0)
    _emit(fmt, [f"fails at step {res.step}: colon generator "
                f"{format_monomial(res.offender)} has degree >= 2"],
          {"failure": {"step": res.step,
                       "offender": format_monomial(res.offender)}})
    sys.exit(1)


@quotients.command("search")
@click.option("--ideal", required=True)
@format_option
def quotients_search(ideal, fmt):
    try:
        mi = parse_ideal_text(ideal)
    except ParseError as exc:
        _fail_input(str(exc))
    cert = search_order(mi)
    if cert is None:
        _emit(fmt, ["no order exists"], {"order_exists": False})
        sys.exit(1)
    _emit(fmt, [cert.render(), f"reg = {cert.max_degree()}"],
          {"order_exists": True, "certificate": cert.to_dict(),
           "reg": cert.max_degree()})


@main.group()
def polymatroid():
    """Exchange-property checks and products."""


@polymatroid.command("check")
@click.option("--ideal", required=True)
@format_option
def polymatroid_check(ideal, fmt):
    try:
        mi = parse_ideal_text(ideal)
    except ParseError as exc:
        _fail_input(str(exc))
    res = is_polymatroidal(mi)
    if res is True:
        _emit(fmt, ["polymatroidal: true"], {"polymatroidal": True})
        sys.exit(0)
    _emit(fmt, [f"polymatroidal: false ({res.render()})"],
          {"polymatroidal": False,
           "witness": {"u": format_monomial(res.u), "v": format_monomial(res.v),
                       "index": res.index, "reason": res.reason}})
    sys.exit(1)


@polymatroid.command("product")
@click.option("--ideal-i", "ideal_i", required=True)
@click.option("--ideal-j", "ideal_j", required=True)
@format_option
def polymatroid_product(ideal_i, ideal_j, fmt):
    try:
        I, J = _pad_to_common_ambient(
            parse_ideal_text(ideal_i), parse_ideal_text(ideal_j)
        )
        P = polymatroidal_product(I, J)
    except (ParseError, ValueError) as exc:
        _fail_input(str(exc))
    cert = revlex_certificate(P)
    _emit(fmt, [str(P), f"reg = {cert.max_degree()}"],
          {"product": [format_monomial(g) for g in P.gens],
           "reg": cert.max_degree()})


@polymatroid.command("transversal")
@click.option("--n", "nvars", type=int, required=True)
@click.option("--subsets", required=True,
              help="semicolon-separated comma lists, e.g. '1,2;2,3'")
@format_option
def polymatroid_transversal(nvars, subsets, fmt):
    try:
        sets = [
            tuple(int(x) for x in chunk.split(","))
            for chunk in subsets.split(";")
        ]
        T = transversal_ideal(nvars, sets)
    except ValueError as exc:
        _fail_input(str(exc))
    _emit(fmt, [str(T)], {"generators": [format_monomial(g) for g in T.gens]})


@main.group()
def linforms():
    """Products of ideals of linear forms."""


def _load_family(text, characteristic):
    try:
        return parse_linforms_text(text, characteristic)
    except ParseError as exc:
        _fail_input(str(exc))


@linforms.command("decompose")
@click.option("--family", required=True, help="linforms(...) matrices")
@char_option
@format_option
def linforms_decompose(family, characteristic, fmt):
    fam = _load_family(family, characteristic)
    comps = primary_components(fam)
    lines = []
    payload = []
    for c in comps:
        tag = " (maximal)" if c.is_maximal else ""
        lines.append(
            f"A = {set(c.subset)}: dim {c.ideal.dim} subspace, "
            f"exponent {c.exponent}{tag}"
        )
        payload.append({"subset": list(c.subset), "dim": c.ideal.dim,
                        "exponent": c.exponent, "maximal": c.is_maximal})
    _emit(fmt, lines, {"components": payload})


@linforms.command("verify")
@click.option("--family", required=True)
@click.option("--cap", type=int, default=None)
@char_option
@format_option
def linforms_verify(family, cap, characteristic, fmt):
    fam = _load_family(family, characteristic)
    if cap is None:
        cap = len(fam) + 3
    rep = verify_decomposition(fam, cap)
    payload = {
        "cap": rep.cap,
        "dims": {str(e): list(v) for e, v in rep.dims.items()},
        "containment_ok": rep.containment_ok,
        "equal": rep.equal,
    }
    _emit(fmt, [rep.render()], payload)
    sys.exit(0 if rep.equal else 1)


@linforms.command("general")
@click.option("--family", required=True)
@char_option
@format_option
def linforms_general(family, characteristic, fmt):
    fam = _load_family(family, characteristic)
    verdict = is_linearly_general(fam)
    _emit(fmt, [f"linearly general: {verdict}"], {"linearly_general": verdict})
    sys.exit(0 if verdict else 1)


@linforms.command("sat")
@click.option("--family", required=True)
@click.option("--cap", type=int, default=None)
@char_option
@format_option
def linforms_sat(family, cap, characteristic, fmt):
    fam = _load_family(family, characteristic)
    if cap is None:
        cap = len(fam)
    prod = product_generators(fam)
    sp = saturation_degree(prod, cap)
    sat = "exceeds cap" if sp.exceeds_cap else sp.sat_degree
    _emit(fmt, [f"sat = {sat} (cap {sp.cap})",
                f"profile: {sp.profile}"],
          {"sat": None if sp.exceeds_cap else sp.sat_degree, "cap": sp.cap,
           "profile": {str(e): v for e, v in sp.profile.items()}})


@main.group()
def hankel():
    """Gap-chain ideals (initial ideals of Hankel minors)."""


def _spec_of(nvars, sizes_text):
    try:
        sizes = tuple(
            sorted((int(x) for x in sizes_text.split(",")), reverse=True)
        )
        return ChainProductSpec(nvars, sizes)
    except ValueError as exc:
        _fail_input(str(exc))


@hankel.command("omega")
@click.option("--n", "nvars", type=int, required=True)
@click.option("--t", "sizes_text", required=True, help="comma list, e.g. 2,2")
@format_option
def hankel_omega(nvars, sizes_text, fmt):
    spec = _spec_of(nvars, sizes_text)
    om = omega(spec)
    _emit(fmt, [f"|Omega| = {len(om.members)}"]
          + [format_monomial(m) for m in om.members],
          {"count": len(om.members),
           "members": [format_monomial(m) for m in om.members]})


@hankel.command("decompose")
@click.option("--monomial", required=True)
@click.option("--n", "nvars", type=int, default=None)
@format_option
def hankel_decompose(monomial, nvars, fmt):
    try:
        u = parse_monomial(monomial, nvars)[0]
        dec = canonical_decomposition(u)
    except ValueError as exc:
        _fail_input(str(exc))
    gammas = {i: gamma(i, dec.shape) for i in range(1, dec.shape[0] + 1)}
    _emit(fmt, [dec.render(), f"shape = {dec.shape}", f"gamma = {gammas}"],
          {"factors": [format_monomial(f) for f in dec.factors],
           "shape": list(dec.shape),
           "gamma": {str(i): g for i, g in gammas.items()}})


@hankel.command("certify")
@click.option("--n", "nvars", type=int, required=True)
@click.option("--t", "sizes_text", required=True)
@format_option
def hankel_certify(nvars, sizes_text, fmt):
    spec = _spec_of(nvars, sizes_text)
    cert = certify_product(spec, validate_pairs=False)
    _emit(fmt, [f"linear quotients certified for {len(cert.order)} generators",
                f"reg = {cert.max_degree()}"],
          {"generators": len(cert.order), "reg": cert.max_degree(),
           "certificate": cert.to_dict()})


@main.command("fixtures")
@click.option("--only", default=None, help="tag filter (regularity, linforms, quotients, polymatroid, chains)")
@format_option
def fixtures_cmd(only, fmt):
    """Run the worked-example suite."""
    try:
        results = run_fixtures(only)
    except ValueError as exc:
        _fail_input(str(exc))
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results]
    n_fail = sum(1 for _, ok in results if not ok)
    lines.append(f"{len(results) - n_fail}/{len(results)} passed")
    _emit(fmt, lines, {"results": {name: ok for name, ok in results},
                       "failed": n_fail})
    sys.exit(0 if n_fail == 0 else 1)


if __name__ == "__main__":
    main()
