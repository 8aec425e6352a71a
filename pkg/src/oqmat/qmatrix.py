"""Quantum n x n matrices: presentation, quantum minors, bialgebra maps, transpose."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import SizeMismatch
from .qcoeff import ONE, QHAT, LaurentInt, lp_signed_power
from .pbwcore import Element, Generator, Hom, Presentation, Rule, TensorPresentation, tensor

__all__ = [
    "oqm_presentation",
    "quantum_minor",
    "quantum_minor_perm",
    "minor",
    "comultiply",
    "counit",
    "transpose_tau",
    "indexset_leq",
    "inversion_count",
    "index_sets",
    "minor_keys",
    "X",
    "comult_tensor",
]

Q_INV = LaurentInt.monomial(1, -1)
PERM_ORACLE_CAP = 6


def _neg_q(k: int) -> LaurentInt:
    return lp_signed_power(-1, k)


def gen_position(n: int, i: int, j: int) -> int:
    return (i - 1) * n + (j - 1)


@lru_cache(maxsize=None)
def oqm_presentation(n: int, symbol: str = "X") -> Presentation:
    """O_q(M_n): generators in row-major order, X[i,j] of degree (e_i ; e_j)."""
    if n < 1:
        raise ValueError("n must be positive")
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            deg = [0] * (2 * n)
            deg[i - 1] = 1
            deg[n + j - 1] = 1
            gens.append(Generator(symbol, i, j, tuple(deg)))
    pos = lambda i, j: gen_position(n, i, j)  # noqa: E731
    rules = []
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for (i, j), (l, m) in combinations(cells, 2):
        # (i, j) precedes (l, m) in row-major order, so X[l,m] is the high letter
        lo, hi = pos(i, j), pos(l, m)
        if i == l or j == m:
            rules.append(Rule(hi, lo, Q_INV))
        elif j > m:
            rules.append(Rule(hi, lo, ONE))
        else:
            rules.append(Rule(hi, lo, ONE, ((-QHAT, (pos(i, m), pos(l, j))),)))
    return Presentation(gens, rules, 2 * n, name=f"O_q(M_{n})")


def X(n: int, i: int, j: int) -> Element:
    return oqm_presentation(n).gen(gen_position(n, i, j))


def _key(rows: Iterable[int], cols: Iterable[int], n: int) -> tuple[tuple, tuple]:
    rows, cols = tuple(sorted(rows)), tuple(sorted(cols))
    if len(rows) != len(cols):
        raise SizeMismatch(f"|rows|={len(rows)} but |cols|={len(cols)}")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("index sets must not repeat entries")
    for k in rows + cols:
        if not 1 <= k <= n:
            raise ValueError(f"index {k} outside 1..{n}")
    return rows, cols


def quantum_minor(n: int, rows: Iterable[int], cols: Iterable[int]) -> Element:
    """[rows | cols] in O_q(M_n), by Laplace expansion along the largest column."""
    return _minor(n, *_key(rows, cols, n))


minor = quantum_minor


@lru_cache(maxsize=None)
def _minor(n: int, rows: tuple, cols: tuple) -> Element:
    A = oqm_presentation(n)
    if not rows:
        return A.one()
    c = cols[-1]
    rest = cols[:-1]
    acc = A.zero()
    for k, i in enumerate(rows):
        sub = rows[:k] + rows[k + 1:]
        acc = acc + (X(n, i, c) * _minor(n, sub, rest)).scale(_neg_q(k))
    # solve sum_i (-q)^{|[1,i) n I|} X_ic [I-i|J] = (-q)^{|J|} [I | J+c]
    return acc.scale(_neg_q(-len(rest)))


@lru_cache(maxsize=None)
def _minor_perm(n: int, rows: tuple, cols: tuple) -> Element:
    A = oqm_presentation(n)
    acc = A.zero()
    for perm in permutations(range(len(cols))):
        inv = sum(1 for a, b in combinations(perm, 2) if a > b)
        letters = [(gen_position(n, rows[k], cols[perm[k]]), 1) for k in range(len(rows))]
        acc = acc + A.word(letters).scale(_neg_q(inv))
    return acc


def quantum_minor_perm(n: int, rows: Iterable[int], cols: Iterable[int]) -> Element:
    """Independent oracle: sum over permutations of (-q)^inv(sigma) X[i_1,j_s(1)]...X[i_t,j_s(t)]."""
    rows, cols = _key(rows, cols, n)
    if len(rows) > PERM_ORACLE_CAP:
        raise ValueError(f"permutation oracle is capped at size {PERM_ORACLE_CAP}")
    return _minor_perm(n, rows, cols)


def index_sets(n: int, size: int | None = None) -> list[tuple]:
    sizes = range(n + 1) if size is None else [size]
    return [s for k in sizes for s in combinations(range(1, n + 1), k)]


def minor_keys(n: int, max_size: int | None = None) -> list[tuple[tuple, tuple]]:
    top = n if max_size is None else min(n, max_size)
    return [(I, J) for k in range(top + 1) for I in index_sets(n, k) for J in index_sets(n, k)]


# -- bialgebra structure and transpose --------------------------------------------


@lru_cache(maxsize=None)
def comult_tensor(n: int) -> TensorPresentation:
    A = oqm_presentation(n)
    return tensor(A, A, name=f"O_q(M_{n}) (x) O_q(M_{n})")


@lru_cache(maxsize=None)
def _comult_hom(n: int) -> Hom:
    A = oqm_presentation(n)
    T = comult_tensor(n)
    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            img = T.zero()
            for l in range(1, n + 1):
                img = img + T.pure(X(n, i, l), X(n, l, j))
            images[gen_position(n, i, j)] = img
    return Hom(A, T, images)


def comultiply(n: int, x: Element) -> Element:
    """Delta(X_ij) = sum_l X_il (x) X_lj, extended multiplicatively."""
    return _comult_hom(n)(x)


def counit(n: int, x: Element) -> LaurentInt:
    """epsilon(X_ij) = delta_ij."""
    A = oqm_presentation(n)
    if x.alg is not A:
        raise ValueError("counit is defined on O_q(M_n)")
    diagonal = {gen_position(n, i, i) for i in range(1, n + 1)}
    total = LaurentInt()
    for m, c in x.terms().items():
        if all(not e or k in diagonal for k, e in enumerate(m)):
            total = total + c
    return total


@lru_cache(maxsize=None)
def _tau_hom(n: int) -> Hom:
    A = oqm_presentation(n)
    return Hom(A, A, {gen_position(n, i, j): X(n, j, i) for i in range(1, n + 1) for j in range(1, n + 1)})


def transpose_tau(n: int, x: Element) -> Element:
    return _tau_hom(n)(x)


def tau_hom(n: int) -> Hom:
    return _tau_hom(n)


def comult_hom(n: int) -> Hom:
    return _comult_hom(n)


# -- index sets --------------------------------------------------------------------


def indexset_leq(I: Sequence[int], J: Sequence[int]) -> bool:
    """Componentwise order on equal-size index sets."""
    I, J = sorted(I), sorted(J)
    if len(I) != len(J):
        raise SizeMismatch(f"|I|={len(I)} but |J|={len(J)}")
    return all(a <= b for a, b in zip(I, J))


def inversion_count(I: Iterable[int], J: Iterable[int]) -> int:
    """l(I;J) = #{(i, j) in I x J : i > j}."""
    J = list(J)
    return sum(1 for i in I for j in J if i > j)
