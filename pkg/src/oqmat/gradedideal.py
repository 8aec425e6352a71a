"""Two-sided ideals generated by homogeneous elements, with exact membership per multidegree.

The component of the ideal in multidegree ``d`` is spanned by the normal
forms of ``m1 * g * m2`` over generators ``g`` and ordered monomials with
``deg m1 + deg g + deg m2 = d``.  Homogeneous rules make this a finite,
exact description, so membership reduces to linear algebra over Q(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LocalizedAmbient, NotHomogeneousError
from .qcoeff import LaurentInt
from .linalg import RowSpace
from .pbwcore import Element, Monomial, Presentation, multidegree

__all__ = [
    "GradedIdeal",
    "Certificate",
    "homogeneous_component_basis",
    "ideal_membership",
    "bounded_monomials",
]


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def bounded_monomials(p: Presentation, bound: Sequence[int]) -> list[Monomial]:
    """All ordered monomials whose multidegree is componentwise <= ``bound``."""
    if any(g.invertible for g in p.generators):
        raise LocalizedAmbient(f"{p.name} has invertible generators")
    degs = [g.degree for g in p.generators]
    for i, dg in enumerate(degs):
        if not any(dg) or any(x < 0 for x in dg):
            raise ValueError(f"{p.generators[i].name} needs a nonzero nonnegative degree")
    out = []
    exps = [0] * p.ngens

    def rec(i, room):
        if i == p.ngens:
            out.append(tuple(exps))
            return
        rec(i + 1, room)
        k = 0
        while True:
            room = _sub(room, degs[i])
            if any(x < 0 for x in room):
                break
            k += 1
            exps[i] = k
            rec(i + 1, room)
        exps[i] = 0

    rec(0, tuple(bound))
    return out


_basis_cache: dict = {}


def homogeneous_component_basis(p: Presentation, d: Sequence[int]) -> list[Monomial]:
    """Ordered monomials of multidegree exactly ``d`` (sorted ascending)."""
    d = tuple(d)
    key = (id(p), d)
    hit = _basis_cache.get(key)
    if hit is not None and hit[0] is p:
        return list(hit[1])
    if any(x < 0 for x in d):
        res = []
    else:
        res = sorted(m for m in bounded_monomials(p, d) if p.mono_degree(m) == d)
    _basis_cache[key] = (p, res)
    return list(res)


@dataclass(frozen=True)
class Certificate:
    """``denominator * f = sum coef * left * generators[index] * right``."""

    denominator: LaurentInt
    terms: tuple  # ((index, left monomial, right monomial, coef), ...)

    def replay(self, ideal: GradedIdeal) -> Element:
        p = ideal.ambient
        acc = p.zero()
        for idx, left, right, coef in self.terms:
            acc = acc + (p.element({left: 1}) * ideal.generators[idx] * p.element({right: 1})).scale(coef)
        return acc

    def to_json(self, ideal: GradedIdeal) -> dict:
        p = ideal.ambient
        return {
            "denominator": str(self.denominator),
            "terms": [
                [idx, p.format_monomial(l), p.format_monomial(r), str(c)]
                for idx, l, r, c in self.terms
            ],
        }


class GradedIdeal:
    def __init__(self, ambient: Presentation, generators: Sequence[Element], name: str = ""):
        if any(g.invertible for g in ambient.generators):
            raise LocalizedAmbient(f"{ambient.name} has invertible generators")
        gens, degs = [], []
        for g in generators:
            if g.alg is not ambient:
                raise ValueError("generator lives in another algebra")
            if not g:
                continue
            d = multidegree(ambient, g)
            if d is None:
                raise NotHomogeneousError(f"generator {g} is not homogeneous")
            gens.append(g)
            degs.append(d)
        self.ambient = ambient
        self.generators = tuple(gens)
        self.degrees = tuple(degs)
        self.name = name
        self._spaces: dict = {}

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"<GradedIdeal {self.name or '?'} with {len(self)} generators>"

    def spanning_rows(self, d: Sequence[int]):
        """Yield ``((index, m1, m2), vector)`` for every product m1*g*m2 of degree ``d``."""
        p = self.ambient
        d = tuple(d)
        for idx, (g, dg) in enumerate(zip(self.generators, self.degrees)):
            if not _leq(dg, d):
                continue  # grading pruning
            room = _sub(d, dg)
            for m1 in bounded_monomials(p, room):
                rest = _sub(room, p.mono_degree(m1))
                left = p.element({m1: 1}) * g
                for m2 in homogeneous_component_basis(p, rest):
                    v = (left * p.element({m2: 1})).terms()
                    if v:
                        yield (idx, m1, m2), v

    def component(self, d: Sequence[int], track: bool = False) -> RowSpace:
        """Echelon basis of the ideal's degree-``d`` component (cached)."""
        d = tuple(d)
        key = (d, track)
        space = self._spaces.get(key)
        if space is not None:
            return space
        full = len(homogeneous_component_basis(self.ambient, d))
        rows = list(self.spanning_rows(d))
        # cheap rows first: fewer terms, then smaller coefficient spread
        rows.sort(key=lambda tv: (len(tv[1]), sum(max(c.max_exp() - c.min_exp(), 0) for c in tv[1].values())))
        space = RowSpace(order=_column_order, track=track)
        seen = set()
        for tag, v in rows:
            if space.rank == full:
                break
            sig = _signature(v)
            if sig in seen:
                continue
            seen.add(sig)
            space.insert(v, tag)
        self._spaces[key] = space
        return space

    def contains(self, f: Element) -> bool:
        return ideal_membership(self, f)


def _column_order(m):
    return (sum(m), m)


def _signature(v: dict):
    # rows equal up to a unit give the same span
    items = sorted(v.items())
    u, _ = items[0][1].normalize_unit()
    inv = u.inverse()
    return tuple((m, c * inv) for m, c in items)


def ideal_membership(L: GradedIdeal, f: Element, certificate: bool = False):
    """Decide ``f in L`` over Q(q).

    Returns a bool, or ``(bool, Certificate | None)`` when ``certificate`` is
    set; a returned certificate has already been replayed against ``f``.
    """
    if f.alg is not L.ambient:
        raise ValueError("element lives in another algebra")
    if not f:
        return (True, Certificate(LaurentInt.monomial(1), ())) if certificate else True
    d = multidegree(L.ambient, f)
    if d is None:
        raise NotHomogeneousError(f"{f} is not homogeneous")
    if any(x < 0 for x in d):
        return (False, None) if certificate else False
    space = L.component(d, track=certificate)
    vec = f.terms()
    if not certificate:
        return space.contains(vec)
    found = space.certificate(vec)
    if found is None:
        return False, None
    den, combo = found
    cert = Certificate(den, tuple((i, l, r, c) for (i, l, r), c in sorted(combo.items(), key=lambda kv: repr(kv[0]))))
    if cert.replay(L) != f.scale(den):
        raise ArithmeticError("membership certificate failed to replay")
    return True, cert
