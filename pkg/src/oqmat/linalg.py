"""Fraction-free row reduction over Z[q, q^-1].

Vectors are sparse ``{column: LaurentInt}`` maps.  :class:`RowSpace` keeps an
echelon basis built by inserting rows one at a time; each basis row has zero
entries at the pivot columns of the rows inserted before it.  Reduction of a
vector ``v`` against row ``k`` is ``v <- p_k v - v[c_k] row_k``, so no
division by non-units ever happens.  Spans are taken over the fraction field
Q(q).
"""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Hashable, Iterable, Mapping

from .qcoeff import ONE, LaurentInt, lp_gcd

Vector = dict  # {column: LaurentInt}


def _axpy(p: LaurentInt, v: Mapping, a: LaurentInt, w: Mapping) -> dict:
    """p*v - a*w."""
    out: dict = {}
    for k, c in v.items():
        out[k] = c * p
    for k, c in w.items():
        x = out.get(k)
        x = -(c * a) if x is None else x - c * a
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    return {k: c for k, c in out.items() if c}


def _int_content(vals: Iterable[LaurentInt]) -> int:
    return reduce(gcd, (c for x in vals for _, c in x.items()), 0)


def primitive(v: Mapping) -> tuple[dict, LaurentInt]:
    """Split ``v`` as ``g * w`` with ``g`` the gcd of its entries; returns (w, g)."""
    g = reduce(lp_gcd, v.values(), LaurentInt())
    if not g or g == ONE:
        return dict(v), ONE
    return {k: c.exact_div(g) for k, c in v.items()}, g


def _strip_int_content(v: dict, *extra: dict) -> None:
    c = _int_content(list(v.values()) + [x for d in extra for x in d.values()])
    if c > 1:
        for d in (v,) + extra:
            for k in d:
                d[k] = LaurentInt._raw({e: x // c for e, x in d[k].items()})


def _pivot_col(v: Mapping, order) -> Hashable:
    return min(v, key=order)


class RowSpace:
    """Incremental echelon basis of a row space over Q(q).

    With ``track=True`` every basis row remembers how it was built from the
    inserted rows (by tag), so dependencies and membership certificates can be
    reported.  Tracking disables gcd normalization of basis rows, since the
    history would not stay integral.
    """

    def __init__(self, order=None, track: bool = False):
        self.order = order or (lambda k: k)
        self.track = track
        self.rows: list[tuple[Hashable, dict, dict]] = []  # (pivot, row, history)
        self.pivots: set = set()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: dict, hist: dict | None, mult: LaurentInt):
        for col, row, rh in self.rows:
            a = v.get(col)
            if a is None:
                continue
            p = row[col]
            v = _axpy(p, v, a, row)
            if hist is not None:
                hist = _axpy(p, hist, a, rh)
                mult = mult * p
            if not v:
                break
            if hist is None:
                _strip_int_content(v)
        return v, hist, mult

    def reduce(self, v: Mapping) -> dict:
        out, _, _ = self._reduce(dict(v), None, ONE)
        return out

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    def insert(self, v: Mapping, tag: Hashable = None):
        """Add a row.  Returns None if it was independent, else the dependency ``{tag: coef}``
        (a vanishing combination of inserted rows; only with ``track``)."""
        hist = {tag: ONE} if self.track else None
        red, hist, _ = self._reduce(dict(v), hist, ONE)
        if not red:
            return hist if self.track else {}
        if not self.track:
            red, _ = primitive(red)
        col = _pivot_col(red, self.order)
        self.rows.append((col, red, hist))
        self.pivots.add(col)
        return None

    def certificate(self, v: Mapping):
        """If ``v`` is in the span, return ``(mult, {tag: coef})`` with ``mult*v = sum coef*row[tag]``."""
        if not self.track:
            raise ValueError("certificates need track=True")
        red, hist, mult = self._reduce(dict(v), {None: ONE}, ONE)
        if red:
            return None
        # hist is mult*v - sum(...) expressed as combination, with v tagged None:
        # 0 = hist[None]*v + sum_{tag} hist[tag]*row[tag]
        lead = hist.pop(None)
        return lead, {t: -c for t, c in hist.items()}


def left_kernel(rows: list[Mapping], order=None) -> list[dict]:
    """Basis of {lambda : sum lambda_i rows_i = 0} over Q(q), as primitive integral vectors."""
    space = RowSpace(order=order, track=True)
    kernel = []
    for i, r in enumerate(rows):
        dep = space.insert(r, tag=i)
        if dep is not None:
            vec, _ = primitive(dep)
            kernel.append(vec)
    return kernel
