"""Presented algebras with ordered PBW bases.

A :class:`Presentation` is a totally ordered list of generators together
with one rewrite rule per unordered pair::

    high * low = swap * low * high + sum(coef * correction)

Every element is kept in normal form: a linear combination of ordered
monomials ``g_1^e_1 * ... * g_N^e_N`` (positions ascending).  Negative
exponents are allowed only on generators flagged invertible, which must be
q-normal (all of their rules are pure scalar swaps).

Internally an element is a flat ``{(monomial, q_exponent): int}`` map; this
keeps the hot multiplication loops on plain integers.  The public view
(:meth:`Element.terms`) groups it into ``{monomial: LaurentInt}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    MissingImage,
    NegativePowerOfNonInvertible,
    NonAdmissibleKillSet,
    NotQNormal,
    RelationViolated,
    UnknownGenerator,
)
from .qcoeff import ONE, LaurentInt

__all__ = [
    "Generator",
    "Rule",
    "Presentation",
    "TensorPresentation",
    "Element",
    "Hom",
    "normal_form",
    "multiply",
    "quotient_by_generators",
    "localize",
    "tensor",
    "multidegree",
    "apply_hom",
    "reduce_word",
    "unit_inverse",
]

Monomial = tuple  # dense exponent tuple, one slot per generator
Flat = dict  # {(Monomial, q_exp): int}
Scalar = Union[LaurentInt, int]


@dataclass(frozen=True)
class Generator:
    symbol: str
    row: int
    col: int
    degree: tuple
    invertible: bool = False
    factor: int = 0

    @property
    def name(self) -> str:
        return f"{self.symbol}[{self.row},{self.col}]"

    @property
    def key(self) -> tuple:
        return (self.symbol, self.row, self.col, self.factor)


@dataclass(frozen=True)
class Rule:
    """``high * low = swap * low * high + sum(coef * word)``; words are ascending position tuples."""

    high: int
    low: int
    swap: LaurentInt
    corrections: tuple = ()

    def describe(self, p: Presentation) -> str:
        g = p.generators
        text = f"{g[self.high].name}*{g[self.low].name} = ({self.swap})*{g[self.low].name}*{g[self.high].name}"
        for coef, word in self.corrections:
            text += f" + ({coef})*" + "*".join(g[i].name for i in word)
        return text


def _add_into(acc: dict, flat: Mapping, coef: int = 1, qshift: int = 0) -> None:
    for (m, e), c in flat.items():
        key = (m, e + qshift)
        v = acc.get(key, 0) + c * coef
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def _add_scaled(acc: dict, flat: Mapping, scalar: LaurentInt) -> None:
    for es, cs in scalar.items():
        _add_into(acc, flat, cs, es)


class Presentation:
    """Generators, rewrite rules and a Z^k grading."""

    def __init__(
        self,
        generators: Sequence[Generator],
        rules: Mapping[tuple[int, int], Rule] | Iterable[Rule],
        grading_rank: int,
        name: str = "",
        origin: Sequence[int | None] | None = None,
        parent: Presentation | None = None,
    ):
        self.generators = tuple(generators)
        if isinstance(rules, Mapping):
            rules = rules.values()
        self.rules: dict[tuple[int, int], Rule] = {}
        for rule in rules:
            if not rule.high > rule.low:
                raise ValueError(f"rule must have high > low, got {rule}")
            if (rule.high, rule.low) in self.rules:
                raise ValueError(f"duplicate rule for pair {(rule.high, rule.low)}")
            self.rules[(rule.high, rule.low)] = rule
        self.grading_rank = grading_rank
        self.name = name
        # position in ``parent`` of each generator (quotients/renames), for projections
        self.origin = tuple(origin) if origin is not None else None
        self.parent = parent
        self._by_name = {g.name: i for i, g in enumerate(self.generators)}
        self._by_key = {g.key: i for i, g in enumerate(self.generators)}
        self._mul_cache: dict = {}
        self._pow_cache: dict = {}
        self._check()

    def _check(self) -> None:
        n = len(self.generators)
        expected = n * (n - 1) // 2
        if len(self.rules) != expected:
            raise ValueError(f"{self.name}: expected {expected} rules, found {len(self.rules)}")
        for g in self.generators:
            if len(g.degree) != self.grading_rank:
                raise ValueError(f"{g.name}: degree has wrong length")
        for rule in self.rules.values():
            target = self.word_degree((rule.high, rule.low))
            for coef, word in rule.corrections:
                if list(word) != sorted(word):
                    raise ValueError(f"correction {word} is not ordered")
                if self.word_degree(word) != target:
                    raise ValueError(f"rule {rule.describe(self)} is not homogeneous")
            if any(self.generators[i].invertible for i in (rule.high, rule.low)):
                if rule.corrections or not rule.swap.is_unit():
                    raise NotQNormal(rule.describe(self))

    # -- generators -----------------------------------------------------------

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def nfactors(self) -> int:
        return 1 + max((g.factor for g in self.generators), default=0)

    def position(self, g: int | str | tuple | Generator) -> int:
        if isinstance(g, int):
            if 0 <= g < self.ngens:
                return g
        elif isinstance(g, Generator):
            if g.key in self._by_key:
                return self._by_key[g.key]
        elif isinstance(g, str):
            if g in self._by_name:
                return self._by_name[g]
        elif isinstance(g, tuple) and g in self._by_key:
            return self._by_key[g]
        raise UnknownGenerator(f"{g!r} is not a generator of {self.name or 'this algebra'}")

    def has(self, g) -> bool:
        try:
            self.position(g)
        except UnknownGenerator:
            return False
        return True

    def rule(self, a: int, b: int) -> Rule:
        return self.rules[(a, b) if a > b else (b, a)]

    def word_degree(self, word: Iterable[int]) -> tuple:
        deg = [0] * self.grading_rank
        for i in word:
            for k, d in enumerate(self.generators[i].degree):
                deg[k] += d
        return tuple(deg)

    def mono_degree(self, m: Monomial) -> tuple:
        deg = [0] * self.grading_rank
        for i, e in enumerate(m):
            if e:
                for k, d in enumerate(self.generators[i].degree):
                    deg[k] += e * d
        return tuple(deg)

    # -- element constructors ---------------------------------------------------

    @property
    def identity(self) -> Monomial:
        return (0,) * self.ngens

    def mono(self, exps: Mapping | None = None) -> Monomial:
        m = [0] * self.ngens
        for g, e in (exps or {}).items():
            m[self.position(g)] += e
        self._check_mono(m)
        return tuple(m)

    def _check_mono(self, m: Sequence[int]) -> None:
        for i, e in enumerate(m):
            if e < 0 and not self.generators[i].invertible:
                raise NegativePowerOfNonInvertible(f"{self.generators[i].name}^{e}")

    def element(self, terms: Mapping[Monomial, Scalar] | None = None) -> Element:
        flat: dict = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != self.ngens:
                raise ValueError("monomial has wrong length")
            self._check_mono(m)
            _add_scaled(flat, {(m, 0): 1}, LaurentInt.coerce(c))
        return Element(self, flat)

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(self.identity, 0): 1})

    def scalar(self, c: Scalar) -> Element:
        return self.element({self.identity: c})

    def gen(self, g, exp: int = 1) -> Element:
        i = self.position(g)
        m = [0] * self.ngens
        m[i] = exp
        self._check_mono(m)
        return Element(self, {(tuple(m), 0): 1})

    def gens(self) -> list[Element]:
        return [self.gen(i) for i in range(self.ngens)]

    def word(self, letters: Iterable[tuple]) -> Element:
        """Normal form of an ordered product of ``(generator, exponent)`` letters."""
        acc = {(self.identity, 0): 1}
        for g, e in letters:
            i = self.position(g)
            if e < 0 and not self.generators[i].invertible:
                raise NegativePowerOfNonInvertible(f"{self.generators[i].name}^{e}")
            m = [0] * self.ngens
            m[i] = e
            acc = self._mul_flat(acc, {(tuple(m), 0): 1})
        return Element(self, acc)

    # -- multiplication engine ------------------------------------------------------

    def _mul_flat(self, x: Mapping, y: Mapping) -> dict:
        acc: dict = {}
        for (m1, e1), c1 in x.items():
            for (m2, e2), c2 in y.items():
                _add_into(acc, self._mul_mono(m1, m2), c1 * c2, e1 + e2)
        return acc

    def _mul_mono(self, a: Monomial, b: Monomial) -> Mapping:
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        res = self._mul_mono_uncached(a, b)
        self._mul_cache[key] = res
        return res

    def _mul_mono_uncached(self, a: Monomial, b: Monomial) -> dict:
        lo_b = next((i for i, e in enumerate(b) if e), None)
        if lo_b is None:
            return {(a, 0): 1}
        hi_a = next((i for i in range(len(a) - 1, -1, -1) if a[i]), None)
        if hi_a is None:
            return {(b, 0): 1}
        if hi_a <= lo_b:
            return {(tuple(x + y for x, y in zip(a, b)), 0): 1}
        # peel the smallest generator off b, push it into a one letter at a time
        e = b[lo_b]
        step = 1 if e > 0 else -1
        rest = list(b)
        rest[lo_b] = 0
        rest = tuple(rest)
        cur: dict = {(a, 0): 1}
        for _ in range(abs(e)):
            nxt: dict = {}
            for (m, qe), c in cur.items():
                _add_into(nxt, self._mono_times_gen(m, lo_b, step), c, qe)
            cur = nxt
        if not any(rest):
            return cur
        acc: dict = {}
        for (m, qe), c in cur.items():
            _add_into(acc, self._mul_mono(m, rest), c, qe)
        return acc

    def _mono_times_gen(self, a: Monomial, g: int, s: int) -> Mapping:
        hi = next((i for i in range(len(a) - 1, -1, -1) if a[i]), -1)
        if hi <= g:
            m = list(a)
            m[g] += s
            return {(tuple(m), 0): 1}
        f = a[hi]
        head = list(a)
        head[hi] = 0
        head = tuple(head)
        acc: dict = {}
        for (m, qe), c in self._pow_times_gen(hi, f, g, s).items():
            _add_into(acc, self._mul_mono(head, m), c, qe)
        return acc

    def _pow_times_gen(self, h: int, f: int, g: int, s: int) -> Mapping:
        """Normal form of ``h^f * g^s`` with h > g."""
        key = (h, f, g, s)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        rule = self.rules[(h, g)]
        n = self.ngens
        if not rule.corrections or f < 0 or s < 0:
            m = [0] * n
            m[g] = s
            m[h] = f
            res: dict = {}
            _add_scaled(res, {(tuple(m), 0): 1}, rule.swap ** (f * s))
        else:
            # h^f g = h^(f-1) (swap g h + sum coef w)
            if f == 1:
                gm = [0] * n
                gm[g] = 1
                inner = {(tuple(gm), 0): 1}
            else:
                inner = self._pow_times_gen(h, f - 1, g, 1)
            hm = [0] * n
            hm[h] = 1
            hm = tuple(hm)
            swapped: dict = {}
            for (m, qe), c in inner.items():
                _add_into(swapped, self._mul_mono(m, hm), c, qe)
            res = {}
            _add_scaled(res, swapped, rule.swap)
            hpow = [0] * n
            hpow[h] = f - 1
            hpow = tuple(hpow)
            for coef, word in rule.corrections:
                wm = [0] * n
                for i in word:
                    wm[i] += 1
                _add_scaled(res, self._mul_mono(hpow, tuple(wm)), coef)
        self._pow_cache[key] = res
        return res

    def clear_caches(self) -> None:
        self._mul_cache.clear()
        self._pow_cache.clear()

    # -- text -------------------------------------------------------------------

    def format_monomial(self, m: Monomial) -> str:
        if self.nfactors == 1:
            return _format_factors(self.generators, m, range(self.ngens)) or "1"
        parts = []
        for f in range(self.nfactors):
            idx = [i for i, g in enumerate(self.generators) if g.factor == f]
            parts.append(_format_factors(self.generators, m, idx) or "1")
        return " (x) ".join(parts)

    def __repr__(self) -> str:
        return f"<Presentation {self.name or '?'}: {self.ngens} generators>"

    # -- structural helpers -------------------------------------------------------

    def renamed(self, symbol: str, name: str | None = None) -> Presentation:
        gens = [replace(g, symbol=symbol) for g in self.generators]
        return Presentation(
            gens, self.rules, self.grading_rank, name or self.name,
            origin=range(self.ngens), parent=self,
        )

    def with_name(self, name: str) -> Presentation:
        return Presentation(
            self.generators, self.rules, self.grading_rank, name,
            origin=self.origin, parent=self.parent,
        )


def _format_factors(gens, m, idx) -> str:
    out = []
    for i in idx:
        e = m[i]
        if e == 1:
            out.append(gens[i].name)
        elif e:
            out.append(f"{gens[i].name}^{e}")
    return "*".join(out)


class TensorPresentation(Presentation):
    """``left (x) right``; left generators first, cross pairs commute."""

    def __init__(self, left: Presentation, right: Presentation, name: str = ""):
        self.left = left
        self.right = right
        shift = left.nfactors
        nl = left.ngens
        zr = (0,) * right.grading_rank
        zl = (0,) * left.grading_rank
        gens = [replace(g, degree=tuple(g.degree) + zr) for g in left.generators]
        gens += [replace(g, degree=zl + tuple(g.degree), factor=g.factor + shift) for g in right.generators]
        rules = list(left.rules.values())
        for r in right.rules.values():
            rules.append(Rule(r.high + nl, r.low + nl, r.swap,
                              tuple((c, tuple(i + nl for i in w)) for c, w in r.corrections)))
        for i in range(nl):
            for j in range(right.ngens):
                rules.append(Rule(nl + j, i, ONE))
        super().__init__(gens, rules, left.grading_rank + right.grading_rank,
                         name or f"({left.name}) (x) ({right.name})")

    def pure(self, x: Element, y: Element) -> Element:
        """``x (x) y`` for x in left, y in right."""
        if x.alg is not self.left or y.alg is not self.right:
            raise ValueError("tensor factors do not match")
        acc: dict = {}
        for (m1, e1), c1 in x._c.items():
            for (m2, e2), c2 in y._c.items():
                key = (m1 + m2, e1 + e2)
                v = acc.get(key, 0) + c1 * c2
                if v:
                    acc[key] = v
                else:
                    acc.pop(key)
        return Element(self, acc)

    def embed_left(self, x: Element) -> Element:
        return self.pure(x, self.right.one())

    def embed_right(self, y: Element) -> Element:
        return self.pure(self.left.one(), y)


class Element:
    """A normal-form element of a presented algebra.  Immutable."""

    __slots__ = ("alg", "_c", "_hash")

    def __init__(self, alg: Presentation, flat: dict):
        self.alg = alg
        self._c = flat
        self._hash = None

    # -- views ------------------------------------------------------------------

    def terms(self) -> dict[Monomial, LaurentInt]:
        grouped: dict = {}
        for (m, e), c in self._c.items():
            grouped.setdefault(m, {})[e] = c
        return {m: LaurentInt._raw(t) for m, t in grouped.items()}

    def monomials(self) -> list[Monomial]:
        """Support, sorted descending in the monomial order."""
        return sorted({m for m, _ in self._c}, key=_order_key, reverse=True)

    def coeff(self, m: Monomial) -> LaurentInt:
        return LaurentInt._raw({e: c for (mm, e), c in self._c.items() if mm == m})

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len({m for m, _ in self._c})

    def degree(self):
        return multidegree(self.alg, self)

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self._c), default=0)

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> Element | None:
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise ValueError(f"elements of different algebras: {self.alg} vs {other.alg}")
            return other
        if isinstance(other, (int, LaurentInt)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other) -> Element:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._c)
        _add_into(acc, o._c)
        return Element(self.alg, acc)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element(self.alg, {k: -c for k, c in self._c.items()})

    def __sub__(self, other) -> Element:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._c)
        _add_into(acc, o._c, -1)
        return Element(self.alg, acc)

    def __rsub__(self, other) -> Element:
        return (-self) + other

    def scale(self, c: Scalar) -> Element:
        acc: dict = {}
        _add_scaled(acc, self._c, LaurentInt.coerce(c))
        return Element(self.alg, acc)

    def __mul__(self, other) -> Element:
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        if other.alg is not self.alg:
            raise ValueError(f"elements of different algebras: {self.alg} vs {other.alg}")
        return Element(self.alg, self.alg._mul_flat(self._c, other._c))

    def __rmul__(self, other) -> Element:
        if isinstance(other, (int, LaurentInt)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> Element:
        if k < 0:
            raise ValueError("negative powers of general elements are not defined")
        result = self.alg.one()
        for _ in range(k):
            result = result * self
        return result

    # -- comparison ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.alg is other.alg and self._c == other._c
        if isinstance(other, (int, LaurentInt)):
            return self == self.alg.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"


def _order_key(m: Monomial):
    return (sum(m), m)


def format_element(x: Element) -> str:
    """Canonical text: terms descending in monomial order, coefficients as LaurentInt text."""
    if not x._c:
        return "0"
    terms = x.terms()
    out = []
    for m in sorted(terms, key=_order_key, reverse=True):
        c = terms[m]
        negative, body = _format_coeff(c)
        if any(m):
            mono = x.alg.format_monomial(m)
            body = mono if body == "1" else f"{body}*{mono}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out)


def _format_coeff(c: LaurentInt) -> tuple[bool, str]:
    if len(c) == 1:
        (e, v), = c.items()
        return v < 0, str(LaurentInt.monomial(abs(v), e))
    if c.terms[c.max_exp()] < 0:
        return True, f"({-c})"
    return False, f"({c})"


# -- module-level operations ------------------------------------------------------


def normal_form(p: Presentation, w) -> Element:
    """Normal form of a word ``[(gen, exp), ...]`` or of a combination ``[(coef, word), ...]``."""
    w = list(w)
    if w and isinstance(w[0], tuple) and len(w[0]) == 2 and isinstance(w[0][1], (list, tuple)):
        acc = p.zero()
        for coef, word in w:
            acc = acc + p.word(word).scale(coef)
        return acc
    return p.word(w)


def multiply(p: Presentation, a: Element, b: Element) -> Element:
    if a.alg is not p or b.alg is not p:
        raise ValueError("elements are not over this presentation")
    return a * b


def multidegree(p: Presentation, x: Element):
    """Common multidegree of the terms of ``x``, or None if ``x`` is zero or inhomogeneous."""
    degs = {p.mono_degree(m) for m, _ in x._c}
    if len(degs) != 1:
        return None
    return degs.pop()


def quotient_by_generators(p: Presentation, kill: Iterable, name: str | None = None) -> Presentation:
    """Quotient by the ideal generated by the ``kill`` generators, if their survivors keep a PBW basis."""
    killed = {p.position(g) for g in kill}
    if not killed:
        return p
    for i in killed:
        if p.generators[i].invertible:
            raise NonAdmissibleKillSet(f"cannot kill the unit {p.generators[i].name}")
    for rule in p.rules.values():
        if rule.high in killed or rule.low in killed:
            for coef, word in rule.corrections:
                if not killed.intersection(word):
                    raise NonAdmissibleKillSet(
                        f"rule {rule.describe(p)} has a correction free of killed generators"
                    )
    survivors = [i for i in range(p.ngens) if i not in killed]
    new_pos = {old: new for new, old in enumerate(survivors)}
    rules = []
    for (h, l), rule in p.rules.items():
        if h in killed or l in killed:
            continue
        corr = tuple(
            (c, tuple(new_pos[i] for i in w)) for c, w in rule.corrections if not killed.intersection(w)
        )
        rules.append(Rule(new_pos[h], new_pos[l], rule.swap, corr))
    gens = [p.generators[i] for i in survivors]
    return Presentation(gens, rules, p.grading_rank, name or f"{p.name}/<{len(killed)} gens>",
                        origin=survivors, parent=p)


def localize(p: Presentation, invert: Iterable, name: str | None = None) -> Presentation:
    """Adjoin inverses of q-normal generators."""
    inv = {p.position(g) for g in invert}
    if not inv:
        return p
    for i in inv:
        for rule in p.rules.values():
            if i in (rule.high, rule.low) and (rule.corrections or not rule.swap.is_unit()):
                raise NotQNormal(f"{p.generators[i].name} is not q-normal: {rule.describe(p)}")
    gens = [replace(g, invertible=True) if i in inv else g for i, g in enumerate(p.generators)]
    return Presentation(gens, p.rules, p.grading_rank, name or f"{p.name}[inv]",
                        origin=range(p.ngens), parent=p)


def tensor(a: Presentation, b: Presentation, name: str = "") -> TensorPresentation:
    return TensorPresentation(a, b, name)


class Hom:
    """Algebra map determined by generator images, extended multiplicatively."""

    def __init__(self, src: Presentation, dst: Presentation, images: Mapping):
        self.src = src
        self.dst = dst
        self.images: dict[int, Element] = {}
        for g, img in images.items():
            if not isinstance(img, Element):
                img = dst.scalar(img)
            if img.alg is not dst:
                raise ValueError("image lies in the wrong algebra")
            self.images[src.position(g)] = img
        self._pow_cache: dict = {}
        self._mono_cache: dict = {}

    def image(self, g) -> Element:
        i = self.src.position(g)
        if i not in self.images:
            raise MissingImage(f"no image for {self.src.generators[i].name}")
        return self.images[i]

    def _power(self, i: int, e: int) -> Element:
        key = (i, e)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        img = self.image(i)
        if e >= 0:
            val = img ** e
        else:
            val = _unit_inverse(img, self.src.generators[i].name) ** (-e)
        self._pow_cache[key] = val
        return val

    def _mono(self, m: Monomial) -> Element:
        hit = self._mono_cache.get(m)
        if hit is not None:
            return hit
        first = next((i for i, e in enumerate(m) if e), None)
        if first is None:
            val = self.dst.one()
        else:
            rest = list(m)
            rest[first] = 0
            val = self._power(first, m[first])
            if any(rest):
                val = val * self._mono(tuple(rest))
        self._mono_cache[m] = val
        return val

    def __call__(self, x: Element) -> Element:
        if x.alg is not self.src:
            raise ValueError(f"argument lives in {x.alg}, map is defined on {self.src}")
        acc: dict = {}
        for (m, e), c in x._c.items():
            _add_into(acc, self._mono(m)._c, c, e)
        return Element(self.dst, acc)

    def validate(self) -> None:
        """Check every defining rule of the source holds for the images."""
        for rule in self.src.rules.values():
            h, l = self.image(rule.high), self.image(rule.low)
            lhs = h * l
            rhs = (l * h).scale(rule.swap)
            for coef, word in rule.corrections:
                prod = self.dst.one()
                for i in word:
                    prod = prod * self.image(i)
                rhs = rhs + prod.scale(coef)
            if lhs != rhs:
                raise RelationViolated(f"images violate {rule.describe(self.src)}")

    def compose(self, after: Hom) -> Hom:
        """``after o self``."""
        if after.src is not self.dst:
            raise ValueError("maps do not compose")
        return Hom(self.src, after.dst, {i: after(img) for i, img in self.images.items()})


def _unit_inverse(u: Element, label: str) -> Element:
    terms = u.terms()
    if len(terms) != 1:
        raise ValueError(f"image of invertible {label} is not a unit monomial")
    (m, c), = terms.items()
    if not c.is_unit() or any(e and not u.alg.generators[i].invertible for i, e in enumerate(m)):
        raise ValueError(f"image of invertible {label} is not a unit monomial")
    letters = [(i, -e) for i, e in reversed(list(enumerate(m))) if e]
    return u.alg.word(letters).scale(c.inverse())


def unit_inverse(u: Element) -> Element:
    """Inverse of a unit monomial (a +-q^k multiple of a monomial in invertible generators)."""
    return _unit_inverse(u, str(u))


def apply_hom(src: Presentation, dst: Presentation, images: Mapping, x: Element,
              validate: bool = False) -> Element:
    hom = Hom(src, dst, images)
    if validate:
        hom.validate()
    return hom(x)


def quotient_map(p: Presentation, quotient: Presentation) -> Hom:
    """Canonical surjection onto a quotient (or rename) built from ``p``."""
    chain = []
    node = quotient
    while node is not p:
        if node is None or node.parent is None:
            raise ValueError("not derived from this presentation")
        chain.append(node)
        node = node.parent
    pos = {i: i for i in range(p.ngens)}  # position in p -> position in current node
    for node in reversed(chain):
        back = {old: new for new, old in enumerate(node.origin)}
        pos = {i: back[j] for i, j in pos.items() if j in back}
    images = {i: quotient.gen(pos[i]) if i in pos else quotient.zero() for i in range(p.ngens)}
    return Hom(p, quotient, images)


# -- word rewriting (independent of the multiplication engine) ---------------------


def reduce_word(p: Presentation, word: Sequence[tuple], strategy: str = "leftmost") -> Element:
    """Rewrite a word of ``(generator, +-1)`` letters by adjacent swaps until ordered.

    ``strategy`` picks the leftmost or rightmost reducible adjacent pair in
    each word.  The result does not depend on it when the rules are confluent.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    letters = []
    for g, e in word:
        i = p.position(g)
        step = 1 if e > 0 else -1
        if step < 0 and not p.generators[i].invertible:
            raise NegativePowerOfNonInvertible(p.generators[i].name)
        letters.extend([(i, step)] * abs(e))
    pending: dict = {(tuple(letters), 0): 1}
    done: dict = {}
    while pending:
        (w, qe), c = pending.popitem()
        k = _redex(w, strategy)
        if k is None:
            _add_into(done, {(_word_to_mono(p, w), qe): 1}, c)
            continue
        (a, sa), (b, sb) = w[k], w[k + 1]
        head, tail = w[:k], w[k + 2:]
        if a == b:  # a a^-1 cancels
            _add_into(pending, {(head + tail, qe): 1}, c)
            continue
        rule = p.rules[(a, b)]
        if rule.corrections and sa > 0 and sb > 0:
            _add_scaled(pending, {(head + ((b, sb), (a, sa)) + tail, qe): c}, rule.swap)
            for coef, cw in rule.corrections:
                _add_scaled(pending, {(head + tuple((i, 1) for i in cw) + tail, qe): c}, coef)
        else:
            _add_scaled(pending, {(head + ((b, sb), (a, sa)) + tail, qe): c}, rule.swap ** (sa * sb))
    return Element(p, done)


def _redex(w, strategy):
    idx = range(len(w) - 1) if strategy == "leftmost" else range(len(w) - 2, -1, -1)
    for k in idx:
        (a, sa), (b, sb) = w[k], w[k + 1]
        if a > b or (a == b and sa != sb):
            return k
    return None


def _word_to_mono(p: Presentation, w) -> Monomial:
    m = [0] * p.ngens
    for i, s in w:
        m[i] += s
    return tuple(m)
