"""Stratification data for O_q(M_n): step pairs, the ideals K_rc, step algebras,
the maps beta_rc and kappa, the stratum search, and H-prime counts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Sequence

from .errors import HasCorrections, InconsistentOracle
from .gradedideal import GradedIdeal, homogeneous_component_basis
from .qcoeff import ONE
from .linalg import RowSpace, left_kernel
from .pbwcore import Element, Hom, Presentation, TensorPresentation, localize, quotient_by_generators, tensor
from .qmatrix import (
    X,
    comult_hom,
    gen_position,
    index_sets,
    indexset_leq,
    minor,
    oqm_presentation,
)

__all__ = [
    "StepPair",
    "HPrimeSpec",
    "UNKNOWN",
    "enumerate_rc",
    "krc_generators",
    "krc_keys",
    "drc",
    "step_algebra_plus",
    "step_algebra_minus",
    "beta_map",
    "brc_elements",
    "kappa_map",
    "kappa_oracle",
    "stratum_of",
    "hspec_qaffine",
    "hspec_count",
    "hspec_m2_catalog",
    "kernel_generators",
    "beta_kernel_evidence",
]


class _Unknown:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNKNOWN"

    __str__ = lambda self: "Unknown"  # noqa: E731

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class StepPair:
    r: tuple
    c: tuple

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.r) != len(self.c):
            raise ValueError("r and c must have the same length")
        for seq in (self.r, self.c):
            if any(a >= b for a, b in zip(seq, seq[1:])) or any(x < 1 for x in seq):
                raise ValueError(f"{seq} is not strictly increasing in 1..n")

    @property
    def t(self) -> int:
        return len(self.r)

    def check(self, n: int) -> StepPair:
        if any(x > n for x in self.r + self.c):
            raise ValueError(f"{self} does not fit n={n}")
        return self

    def __str__(self) -> str:
        f = lambda s: "(" + ",".join(map(str, s)) + ")"  # noqa: E731
        return f"r={f(self.r)};c={f(self.c)}"

    @classmethod
    def parse(cls, text: str) -> StepPair:
        m = re.fullmatch(r"\s*r\s*=\s*\(([\d,\s]*)\)\s*;\s*c\s*=\s*\(([\d,\s]*)\)\s*", text)
        if not m:
            raise ValueError(f"cannot parse step pair {text!r}; expected r=(..);c=(..)")
        seqs = [tuple(int(x) for x in g.replace(",", " ").split()) for g in m.groups()]
        return cls(*seqs)


def _pair(pair) -> StepPair:
    if isinstance(pair, StepPair):
        return pair
    if isinstance(pair, str):
        return StepPair.parse(pair)
    return StepPair(*pair)


def enumerate_rc(n: int, t: int) -> list[StepPair]:
    if not 0 <= t <= n:
        raise ValueError(f"t must lie in 0..{n}")
    seqs = list(combinations(range(1, n + 1), t))
    return [StepPair(r, c) for r in seqs for c in seqs]


# -- K_rc and d_rc ------------------------------------------------------------------


def krc_keys(n: int, pair) -> list[tuple]:
    """Minor keys generating K_rc, in (size, rows, cols) order."""
    pair = _pair(pair).check(n)
    t = pair.t
    keys = []
    for size in range(1, n + 1):
        for I in index_sets(n, size):
            for J in index_sets(n, size):
                if size > t or not indexset_leq(pair.r[:size], I) or not indexset_leq(pair.c[:size], J):
                    keys.append((I, J))
    return keys


def krc_generators(n: int, pair) -> GradedIdeal:
    pair = _pair(pair)
    keys = krc_keys(n, pair)
    L = GradedIdeal(oqm_presentation(n), [minor(n, I, J) for I, J in keys], name=f"K[{pair}]")
    L.keys = tuple(keys)
    return L


def drc(n: int, pair, l: int) -> Element:
    pair = _pair(pair).check(n)
    if not 0 <= l <= pair.t:
        raise ValueError(f"l must lie in 0..{pair.t}")
    return minor(n, pair.r[:l], pair.c[:l])


# -- step algebras ------------------------------------------------------------------


def _plus_kill(n, r):
    t = len(r)
    return [f"X[{i},{j}]" for i in range(1, n + 1) for j in range(1, n + 1) if j > t or i < r[j - 1]]


def _minus_kill(n, c):
    t = len(c)
    return [f"X[{i},{j}]" for i in range(1, n + 1) for j in range(1, n + 1) if i > t or j < c[i - 1]]


@lru_cache(maxsize=None)
def _step(n: int, seq: tuple, sign: str, localized: bool) -> Presentation:
    A = oqm_presentation(n)
    kill = _plus_kill(n, seq) if sign == "+" else _minus_kill(n, seq)
    sym = "Y" if sign == "+" else "Z"
    label = f"R{sign}_{seq}" + ("" if localized else ",0")
    base = quotient_by_generators(A, kill, name=label).renamed(sym, label)
    if not localized:
        return base
    if sign == "+":
        pivots = [f"Y[{r},{s}]" for s, r in enumerate(seq, 1)]
    else:
        pivots = [f"Z[{s},{c}]" for s, c in enumerate(seq, 1)]
    return localize(base, pivots, name=label)


def _check_seq(n, seq):
    seq = tuple(seq)
    if any(a >= b for a, b in zip(seq, seq[1:])) or any(not 1 <= x <= n for x in seq):
        raise ValueError(f"{seq} is not strictly increasing in 1..{n}")
    return seq


def step_algebra_plus(n: int, r: Sequence[int], localized: bool = True) -> Presentation:
    """R+_r (or R+_{r,0}): survivors Y[i,j] with j <= t and i >= r_j."""
    return _step(n, _check_seq(n, r), "+", localized)


def step_algebra_minus(n: int, c: Sequence[int], localized: bool = True) -> Presentation:
    """R-_c (or R-_{c,0}): survivors Z[i,j] with i <= t and j >= c_i."""
    return _step(n, _check_seq(n, c), "-", localized)


@lru_cache(maxsize=None)
def beta_target(n: int, pair: StepPair) -> TensorPresentation:
    return tensor(step_algebra_plus(n, pair.r), step_algebra_minus(n, pair.c))


@lru_cache(maxsize=None)
def _beta(n: int, pair: StepPair) -> Hom:
    T = beta_target(n, pair)
    Rp, Rm = T.left, T.right
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            img = T.zero()
            for l in range(1, pair.t + 1):
                if pair.r[l - 1] <= i and pair.c[l - 1] <= j:
                    img = img + T.pure(Rp.gen(f"Y[{i},{l}]"), Rm.gen(f"Z[{l},{j}]"))
            images[gen_position(n, i, j)] = img
    hom = Hom(oqm_presentation(n), T, images)
    hom.validate()  # raises RelationViolated; never expected
    return hom


def beta_map(n: int, pair) -> Hom:
    """beta_rc : A -> R+_r (x) R-_c, validated against every defining relation of A."""
    return _beta(n, _pair(pair).check(n))


def pivot(T: TensorPresentation, pair: StepPair, s: int) -> Element:
    """Y[r_s,s] (x) Z[s,c_s]."""
    return T.pure(T.left.gen(f"Y[{pair.r[s - 1]},{s}]"), T.right.gen(f"Z[{s},{pair.c[s - 1]}]"))


@dataclass
class BrcFamilies:
    y: dict
    z: dict
    u: dict
    w: dict
    pivot_products: dict  # l -> beta(d_l) predicted as a product of pivots


def brc_elements(n: int, pair) -> BrcFamilies:
    pair = _pair(pair).check(n)
    T = beta_target(n, pair)
    Rp, Rm = T.left, T.right
    t, r, c = pair.t, pair.r, pair.c
    y, z, u, w = {}, {}, {}, {}
    for j in range(1, t + 1):
        for i in range(r[j - 1], n + 1):
            u[(i, j)] = minor(n, r[: j - 1] + (i,), c[:j])
            if i > r[j - 1]:
                y[(i, j)] = Rp.gen(f"Y[{i},{j}]") * Rp.gen(f"Y[{r[j - 1]},{j}]", -1)
    for l in range(1, t + 1):
        for m in range(c[l - 1], n + 1):
            w[(l, m)] = minor(n, r[:l], c[: l - 1] + (m,))
            if m > c[l - 1]:
                z[(l, m)] = Rm.gen(f"Z[{l},{m}]") * Rm.gen(f"Z[{l},{c[l - 1]}]", -1)
    prods = {0: T.one()}
    for l in range(1, t + 1):
        prods[l] = prods[l - 1] * pivot(T, pair, l)
    return BrcFamilies(y, z, u, w, prods)


# -- H-primes from kill sets -----------------------------------------------------------


@dataclass(frozen=True)
class HPrimeSpec:
    pair: StepPair
    q_plus: tuple = ()
    q_minus: tuple = ()
    known_generators: tuple | None = field(default=None, compare=False)

    @property
    def label(self) -> str:
        plus = ",".join(self.q_plus) or "0"
        minus = ",".join(self.q_minus) or "0"
        return f"{self.pair} Q+=<{plus}> Q-=<{minus}>"


@lru_cache(maxsize=None)
def _kappa(n: int, pair: StepPair, q_plus: tuple, q_minus: tuple) -> Hom:
    T = beta_target(n, pair)
    Qp = quotient_by_generators(T.left, q_plus, name=f"{T.left.name}/<{','.join(q_plus)}>")
    Qm = quotient_by_generators(T.right, q_minus, name=f"{T.right.name}/<{','.join(q_minus)}>")
    T2 = tensor(Qp, Qm)
    lp = _projection(T.left, Qp)
    rp = _projection(T.right, Qm)
    nl = T.left.ngens
    images = {}
    for i in range(T.left.ngens):
        images[i] = T2.embed_left(lp[i])
    for j in range(T.right.ngens):
        images[nl + j] = T2.embed_right(rp[j])
    return _beta(n, pair).compose(Hom(T, T2, images))


def _projection(p: Presentation, quotient: Presentation) -> list[Element]:
    if quotient is p:
        return p.gens()
    back = {old: new for new, old in enumerate(quotient.origin)}
    return [quotient.gen(back[i]) if i in back else quotient.zero() for i in range(p.ngens)]


def kappa_map(n: int, spec: HPrimeSpec) -> Hom:
    """A -> (R+_r/Q+) (x) (R-_c/Q-); its kernel is the H-prime attached to ``spec``."""
    pair = _pair(spec.pair).check(n)
    return _kappa(n, pair, tuple(spec.q_plus), tuple(spec.q_minus))


def kappa_oracle(n: int, spec: HPrimeSpec) -> Callable:
    kap = kappa_map(n, spec)
    return lambda I, J: not kap(minor(n, I, J))


# -- stratum search --------------------------------------------------------------------


def _minimal(cands: list[tuple]) -> list[tuple]:
    return [a for a in cands if not any(b != a and indexset_leq(b, a) for b in cands)]


def stratum_of(n: int, oracle: Callable[[tuple, tuple], bool]) -> StepPair:
    """The unique pair (r, c) with K_rc in P and d_l not in P, for the ideal P behind ``oracle``.

    ``oracle(I, J)`` answers whether the minor [I|J] lies in P.
    """
    inside = {}

    def member(I, J):
        key = (tuple(I), tuple(J))
        if key not in inside:
            inside[key] = bool(oracle(*key))
        return inside[key]

    t = None
    for size in range(n, -1, -1):
        sets = index_sets(n, size)
        if any(not member(I, J) for I in sets for J in sets):
            t = size
            break
    if t is None:
        raise InconsistentOracle("every minor, including [|] = 1, lies in P")
    sets = index_sets(n, t)
    rows = [I for I in sets if any(not member(I, J) for J in sets)]
    cols = [J for J in sets if any(not member(I, J) for I in sets)]
    rmin, cmin = _minimal(rows), _minimal(cols)
    if len(rmin) != 1 or len(cmin) != 1:
        raise InconsistentOracle(f"no unique minimal index set (rows {rmin}, cols {cmin})")
    pair = StepPair(rmin[0], cmin[0])
    for I, J in krc_keys(n, pair):
        if not member(I, J):
            raise InconsistentOracle(f"K generator [{I}|{J}] is outside P")
    for l in range(1, t + 1):
        if member(pair.r[:l], pair.c[:l]):
            raise InconsistentOracle(f"d_{l} lies in P")
    return pair


# -- H-spec counting -------------------------------------------------------------------


def hspec_qaffine(p: Presentation) -> list[frozenset]:
    """All kill sets of non-invertible generators (names), for pure q-commutation presentations."""
    for rule in p.rules.values():
        if rule.corrections:
            raise HasCorrections(f"{p.name}: {rule.describe(p)}")
    free = [g.name for g in p.generators if not g.invertible]
    return [frozenset(s) for k in range(len(free) + 1) for s in combinations(free, k)]


def hspec_count(n: int, t: int):
    """|H-spec^[t] O_q(M_n)| as (sum_r |H-spec R+_r|)^2, or UNKNOWN outside the q-affine class."""
    if not 0 <= t <= n:
        raise ValueError(f"t must lie in 0..{n}")
    total = 0
    for r in combinations(range(1, n + 1), t):
        try:
            total += len(hspec_qaffine(step_algebra_plus(n, r)))
        except HasCorrections:
            if n == 2:  # pragma: no cover - every n=2 step algebra is q-affine
                return sum(1 for e in hspec_m2_catalog() if e.pair.t == t)
            return UNKNOWN
    return total * total


def _qaffine_specs(n: int, pair: StepPair) -> list[HPrimeSpec]:
    plus = hspec_qaffine(step_algebra_plus(n, pair.r))
    minus = hspec_qaffine(step_algebra_minus(n, pair.c))
    return [HPrimeSpec(pair, tuple(sorted(a)), tuple(sorted(b))) for a in plus for b in minus]


def _printed_generators():
    # generating sets printed for the n = 2 example that are unambiguous
    A = oqm_presentation(2)
    det = minor(2, (1, 2), (1, 2))
    x = lambda i, j: X(2, i, j)  # noqa: E731
    full = StepPair((1, 2), (1, 2))
    return {
        (StepPair((), ()), (), ()): (x(1, 1), x(1, 2), x(2, 1), x(2, 2)),
        (StepPair((1,), (1,)), (), ()): (det,),
        (full, (), ()): (),
        (full, (), ("Z[1,2]",)): (x(1, 2),),
        (full, ("Y[2,1]",), ()): (x(2, 1),),
        (full, ("Y[2,1]",), ("Z[1,2]",)): (x(1, 2), x(2, 1)),
    }, A


@lru_cache(maxsize=None)
def hspec_m2_catalog() -> tuple:
    known, _ = _printed_generators()
    out = []
    for t in range(3):
        for pair in enumerate_rc(2, t):
            for spec in _qaffine_specs(2, pair):
                gens = known.get((spec.pair, spec.q_plus, spec.q_minus))
                out.append(HPrimeSpec(spec.pair, spec.q_plus, spec.q_minus, gens))
    return tuple(out)


# -- bounded-degree kernels ---------------------------------------------------------------


def multidegrees(n: int, total: int) -> list[tuple]:
    """Degrees (rows; cols) of O_q(M_n) with the given total degree."""
    comps = [c for c in product(range(total + 1), repeat=n) if sum(c) == total]
    return [a + b for a in comps for b in comps]


def _kernel_at(hom: Hom, d: tuple) -> list[Element]:
    A = hom.src
    basis = homogeneous_component_basis(A, d)
    rows = [hom(A.element({m: 1})).terms() for m in basis]
    out = []
    for vec in left_kernel(rows, order=lambda k: (sum(k), k)):
        x = A.element({basis[i]: c for i, c in vec.items()})
        lead = x.coeff(x.monomials()[0])
        unit, _ = lead.normalize_unit()
        out.append(x.scale(unit.inverse()))
    return out


def kernel_generators(hom: Hom, max_degree: int = 2) -> list[Element]:
    """A generating set for ker(hom) up to total degree ``max_degree``, built greedily by degree."""
    A = hom.src
    n = round(A.ngens ** 0.5)
    gens: list[Element] = []
    for k in range(1, max_degree + 1):
        for d in multidegrees(n, k):
            ideal = GradedIdeal(A, gens)
            for x in _kernel_at(hom, d):
                if not ideal.contains(x):
                    gens.append(x)
                    ideal = GradedIdeal(A, gens)
    return gens


def kernel_dimension(hom: Hom, d: tuple) -> int:
    A = hom.src
    basis = homogeneous_component_basis(A, d)
    space = RowSpace(order=lambda k: (sum(k), k))
    for m in basis:
        space.insert(hom(A.element({m: 1})).terms())
    return len(basis) - space.rank


def beta_kernel_evidence(n: int, pair, max_degree: int = 4) -> list[dict]:
    """Compare dim ker(beta_rc) with dim K_rc degree by degree.  Evidence only, never proof."""
    pair = _pair(pair).check(n)
    hom = beta_map(n, pair)
    K = krc_generators(n, pair)
    out = []
    for k in range(max_degree + 1):
        for d in multidegrees(n, k):
            dim_ker = kernel_dimension(hom, d)
            dim_k = K.component(d).rank if K.generators else 0
            out.append({"degree": d, "ker": dim_ker, "K": dim_k, "equal": dim_ker == dim_k})
    return out
