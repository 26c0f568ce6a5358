"""Sparse exact row reduction.

Rows are dicts {column index: nonzero scalar}.  Pivoting prefers short rows
to limit fill-in; the result is in reduced row-echelon form, so pivot
columns appear in exactly one row with coefficient 1.
"""

from __future__ import annotations


def row_reduce(rows, field, ncols=None):
    """Reduce sparse rows; returns (rref_rows, pivot_columns).

    rref_rows are sorted by pivot column and normalized: each pivot column
    occurs only in its own row, with coefficient one.  Passing the ambient
    column count lets the reduction stop once every column is a pivot
    (remaining rows cannot change the row space).
    """
    zero = field.zero
    piv = {}  # pivot column -> row dict
    pending = sorted((r for r in rows if r), key=len)
    for row in pending:
        if ncols is not None and len(piv) == ncols:
            break
        row = dict(row)
        _reduce_against(row, piv, field)
        if not row:
            continue
        lead = min(row)
        coef = row[lead]
        if coef != field.one:
            c = field.inv(coef)
            row = {j: field.mul(c, v) for j, v in row.items()}
        # back-substitute into existing pivot rows
        for p, prow in piv.items():
            if lead in prow:
                c = prow.pop(lead)
                for j, v in row.items():
                    if j == lead:
                        continue
                    w = field.sub(prow.get(j, zero), field.mul(c, v))
                    if w == zero:
                        prow.pop(j, None)
                    else:
                        prow[j] = w
        piv[lead] = row
    pivots = sorted(piv)
    return [piv[p] for p in pivots], pivots


def _reduce_against(row, piv, field):
    zero = field.zero
    for p in sorted(set(row) & piv.keys()):
        c = row.pop(p, None)
        if c is None:
            continue
        for j, v in piv[p].items():
            if j == p:
                continue
            w = field.sub(row.get(j, zero), field.mul(c, v))
            if w == zero:
                row.pop(j, None)
            else:
                row[j] = w


def reduce_vector(vec, rref_rows, pivots, field):
    """Residue of vec modulo the row space (pivot coordinates eliminated)."""
    row = dict(vec)
    piv = dict(zip(pivots, rref_rows))
    _reduce_against(row, piv, field)
    return row


def in_rowspace(vec, rref_rows, pivots, field):
    return not reduce_vector(vec, rref_rows, pivots, field)


def rank(rows, field):
    return len(row_reduce(rows, field)[0])


def kernel_basis(rref_rows, pivots, ncols, field):
    """Right null space basis from an RREF; one vector per free column."""
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = {f: field.one}
        for p, row in zip(pivots, rref_rows):
            c = row.get(f)
            if c is not None:
                v[p] = field.neg(c)
        out.append(v)
    return out


def kernel(rows, ncols, field):
    rref, pivots = row_reduce(rows, field)
    return kernel_basis(rref, pivots, ncols, field)


def transpose(rows, ncols):
    cols = [dict() for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, v in row.items():
            cols[j][i] = v
    return cols


def matmul(rows_a, rows_b, field):
    """Row-convention composite: row i of result = (row i of A) applied to B.

    A's columns index B's rows.
    """
    zero = field.zero
    out = []
    for row in rows_a:
        acc = {}
        for j, c in row.items():
            for k, v in rows_b[j].items():
                w = field.add(acc.get(k, zero), field.mul(c, v))
                if w == zero:
                    acc.pop(k, None)
                else:
                    acc[k] = w
        out.append(acc)
    return out


def intersect_rowspaces(space_a, space_b, field):
    """Intersection of two row spaces given as (rref_rows, pivots) pairs.

    Returns (rref_rows, pivots) of the intersection.
    """
    rows_a, _ = space_a
    rows_b, _ = space_b
    ra, rb = len(rows_a), len(rows_b)
    if ra == 0 or rb == 0:
        return [], []
    # solve alpha·A = beta·B: kernel of the (ra+rb)-column system A^T | -B^T
    sys_rows = {}
    for i, row in enumerate(rows_a):
        for j, v in row.items():
            sys_rows.setdefault(j, {})[i] = v
    for i, row in enumerate(rows_b):
        for j, v in row.items():
            sys_rows.setdefault(j, {})[ra + i] = field.neg(v)
    ker = kernel(list(sys_rows.values()), ra + rb, field)
    zero = field.zero
    vecs = []
    for k in ker:
        acc = {}
        for i in range(ra):
            c = k.get(i)
            if c is None:
                continue
            for j, v in rows_a[i].items():
                w = field.add(acc.get(j, zero), field.mul(c, v))
                if w == zero:
                    acc.pop(j, None)
                else:
                    acc[j] = w
        if acc:
            vecs.append(acc)
    return row_reduce(vecs, field)
