"""Suites S1-S8: rewriting confluence and identities among quantum minors."""

from __future__ import annotations

import random
from itertools import combinations

from ..qcoeff import ONE, Q, QHAT, LaurentInt, lp_signed_power
from ..pbwcore import reduce_word
from ..qmatrix import (
    X,
    comult_tensor,
    comultiply,
    index_sets,
    inversion_count,
    minor,
    minor_keys,
    oqm_presentation,
    quantum_minor_perm,
)
from .report import eq

Q_INV = LaurentInt.monomial(1, -1)


def mq(k: int) -> LaurentInt:
    """(-q)^k."""
    return lp_signed_power(-1, k)


def between(S, lo, hi, closed_lo=False, closed_hi=False) -> int:
    return sum(
        1 for s in S
        if (lo <= s if closed_lo else lo < s) and (s <= hi if closed_hi else s < hi)
    )


def srt(*parts) -> tuple:
    out = set()
    for p in parts:
        out.update(p)
    return tuple(sorted(out))


def minus(S, *drop) -> tuple:
    return tuple(s for s in S if s not in drop)


def subsets(S, k=None):
    S = tuple(S)
    sizes = range(len(S) + 1) if k is None else ([k] if 0 <= k <= len(S) else [])
    for size in sizes:
        yield from combinations(S, size)


def key_text(I, J) -> str:
    return "[" + " ".join(map(str, I)) + "|" + " ".join(map(str, J)) + "]"


# -- S1 ------------------------------------------------------------------------------


def suite_s1(n: int, seed: int = 0, words: int = 1000, max_len: int = 6):
    A = oqm_presentation(n)
    rng = random.Random(seed)
    for _ in range(words):
        length = rng.randint(1, max_len)
        letters = [(rng.randrange(A.ngens), 1) for _ in range(length)]
        text = "*".join(A.generators[i].name for i, _ in letters)
        left = reduce_word(A, letters, "leftmost")
        right = reduce_word(A, letters, "rightmost")
        yield eq(f'nf -n {n} "{text}" (leftmost vs rightmost)', left, right)
        yield eq(f'nf -n {n} "{text}" (leftmost vs engine)', left, A.word(letters))


# -- S2 / S3 -----------------------------------------------------------------------------


def suite_s2(n: int):
    for m in range(1, n + 1):
        for I, J in minor_keys(m):
            yield eq(f"minor -n {m} \"{key_text(I, J)}\"", minor(m, I, J), quantum_minor_perm(m, I, J))


def suite_s3(n: int):
    T = comult_tensor(n)
    for I, J in minor_keys(n):
        rhs = T.zero()
        for K in index_sets(n, len(I)):
            rhs = rhs + T.pure(minor(n, I, K), minor(n, K, J))
        yield eq(f"delta -n {n} \"{key_text(I, J)}\"", comultiply(n, minor(n, I, J)), rhs)


# -- S4: generator / minor commutation ------------------------------------------------------


def suite_s4(n: int):
    A = oqm_presentation(n)
    for k in range(1, n + 1):
        for I in index_sets(n, k):
            for J in index_sets(n, k):
                M = minor(n, I, J)
                for r in range(1, n + 1):
                    for c in range(1, n + 1):
                        x = X(n, r, c)
                        tag = f"r={r} c={c} I={I} J={J}"
                        if r in I and c in J:
                            yield eq(f"gen-minor(a) {tag}", x * M, M * x)
                        elif r in I:
                            Jp = srt(J, [c])
                            rhs1, rhs2 = A.zero(), A.zero()
                            for j in J:
                                if j > c:
                                    e = between(J, c, j, True, True)
                                    mj = minor(n, I, minus(Jp, j))
                                    rhs1 = rhs1 + (mj * X(n, r, j)).scale(mq(-e))
                                    rhs2 = rhs2 + (X(n, r, j) * mj).scale(mq(e))
                            yield eq(f"gen-minor(b1) {tag}", x * M - (M * x).scale(Q_INV), rhs1.scale(-QHAT))
                            yield eq(f"gen-minor(b2) {tag}", M * x - (x * M).scale(Q), rhs2.scale(QHAT))
                        elif c in J:
                            Ip = srt(I, [r])
                            rhs1, rhs2 = A.zero(), A.zero()
                            for i in I:
                                if i > r:
                                    e = between(I, r, i, True, True)
                                    mi = minor(n, minus(Ip, i), J)
                                    rhs1 = rhs1 + (mi * X(n, i, c)).scale(mq(-e))
                                    rhs2 = rhs2 + (X(n, i, c) * mi).scale(mq(e))
                            yield eq(f"gen-minor(c1) {tag}", x * M - (M * x).scale(Q_INV), rhs1.scale(-QHAT))
                            yield eq(f"gen-minor(c2) {tag}", M * x - (x * M).scale(Q), rhs2.scale(QHAT))


# -- S5: minors with one row/column removed ------------------------------------------------


def suite_s5(n: int):
    for k in range(2, n + 1):
        for U in index_sets(n, k):
            for V in index_sets(n, k):
                for u1 in U:
                    for u2 in U:
                        for v1 in V:
                            for v2 in V:
                                U1, U2, V1, V2 = minus(U, u1), minus(U, u2), minus(V, v1), minus(V, v2)
                                tag = f"U={U} V={V} u=({u1},{u2}) v=({v1},{v2})"
                                if u1 < u2 and v1 == v2:
                                    a, b = minor(n, U1, V1), minor(n, U2, V1)
                                    yield eq(f"minor-pair(a) {tag}", a * b, (b * a).scale(Q_INV))
                                if v1 < v2 and u1 == u2:
                                    a, b = minor(n, U1, V1), minor(n, U1, V2)
                                    yield eq(f"minor-pair(b) {tag}", a * b, (b * a).scale(Q_INV))
                                if u1 < u2 and v1 > v2:
                                    a, b = minor(n, U1, V1), minor(n, U2, V2)
                                    yield eq(f"minor-pair(c) {tag}", a * b, b * a)
                                if u1 < u2 and v1 < v2:
                                    a, b = minor(n, U1, V1), minor(n, U2, V2)
                                    rhs = (minor(n, U2, V1) * minor(n, U1, V2)).scale(-QHAT)
                                    yield eq(f"minor-pair(d) {tag}", a * b - b * a, rhs)


# -- S6: q-Laplace relations -----------------------------------------------------------------


def suite_s6(n: int):
    A = oqm_presentation(n)
    full = tuple(range(1, n + 1))
    for I in index_sets(n):
        for J1 in subsets(full):
            for J2 in subsets(full, len(I) - len(J1)):
                lhs = A.zero()
                for I1 in subsets(I, len(J1)):
                    I2 = minus(I, *I1)
                    lhs = lhs + (minor(n, I1, J1) * minor(n, I2, J2)).scale(mq(inversion_count(I1, I2)))
                if set(J1) & set(J2):
                    rhs = A.zero()
                else:
                    rhs = minor(n, I, srt(J1, J2)).scale(mq(inversion_count(J1, J2)))
                yield eq(f"laplace(a) I={I} J1={J1} J2={J2}", lhs, rhs)
        # (b): roles of rows and columns exchanged, I read as the column set
        J = I
        for I1 in subsets(full):
            for I2 in subsets(full, len(J) - len(I1)):
                lhs = A.zero()
                for J1 in subsets(J, len(I1)):
                    J2 = minus(J, *J1)
                    lhs = lhs + (minor(n, I1, J1) * minor(n, I2, J2)).scale(mq(inversion_count(J1, J2)))
                if set(I1) & set(I2):
                    rhs = A.zero()
                else:
                    rhs = minor(n, srt(I1, I2), J).scale(mq(inversion_count(I1, I2)))
                yield eq(f"laplace(b) J={J} I1={I1} I2={I2}", lhs, rhs)
    # special case: one index set is a singleton
    for I in index_sets(n):
        if not I:
            continue
        for J in index_sets(n, len(I) - 1):
            for c in full:
                s1, s2 = A.zero(), A.zero()
                for i in I:
                    rest = minor(n, minus(I, i), J)
                    s1 = s1 + (X(n, i, c) * rest).scale(mq(between(I, 0, i)))
                    s2 = s2 + (rest * X(n, i, c)).scale(mq(between(I, i, n + 1)))
                if c in J:
                    r1 = r2 = A.zero()
                else:
                    big = minor(n, I, srt(J, [c]))
                    r1, r2 = big.scale(mq(between(J, 0, c))), big.scale(mq(between(J, c, n + 1)))
                yield eq(f"expand(a1) I={I} J={J} c={c}", s1, r1)
                yield eq(f"expand(a2) I={I} J={J} c={c}", s2, r2)
    for J in index_sets(n):
        if not J:
            continue
        for I in index_sets(n, len(J) - 1):
            for r in full:
                s1, s2 = A.zero(), A.zero()
                for j in J:
                    rest = minor(n, I, minus(J, j))
                    s1 = s1 + (X(n, r, j) * rest).scale(mq(between(J, 0, j)))
                    s2 = s2 + (rest * X(n, r, j)).scale(mq(between(J, j, n + 1)))
                if r in I:
                    r1 = r2 = A.zero()
                else:
                    big = minor(n, srt(I, [r]), J)
                    r1, r2 = big.scale(mq(between(I, 0, r))), big.scale(mq(between(I, r, n + 1)))
                yield eq(f"expand(b1) I={I} J={J} r={r}", s1, r1)
                yield eq(f"expand(b2) I={I} J={J} r={r}", s2, r2)


# -- S7: products of complementary minors ------------------------------------------------------


def suite_s7(n: int, counts: dict | None = None):
    A = oqm_presentation(n)
    counts = counts if counts is not None else {}
    for m in range(n + 1):
        for U in index_sets(n, m):
            for V in index_sets(n, m):
                UV = minor(n, U, V)
                # (a): U = I + K, column sets J1, J2 inside V
                for I in subsets(U):
                    K = minus(U, *I)
                    for J1 in subsets(V):
                        kp = len(J1) - len(I)
                        if not 0 <= kp <= len(K):
                            continue
                        for J2 in subsets(V, 2 * len(I) + len(K) - len(J1)):
                            lhs = A.zero()
                            for K1 in subsets(K, kp):
                                K2 = minus(K, *K1)
                                e = inversion_count(I, K1) + inversion_count(K1, srt(K2, I))
                                lhs = lhs + (minor(n, srt(I, K1), J1) * minor(n, srt(K2, I), J2)).scale(mq(e))
                            common = srt(set(J1) & set(J2))
                            if len(common) == len(I):
                                d1 = minus(J1, *J2)
                                e = inversion_count(common, d1) + inversion_count(d1, J2)
                                rhs = (minor(n, I, common) * UV).scale(mq(e))
                                counts["nonzero"] = counts.get("nonzero", 0) + 1
                            else:
                                rhs = A.zero()
                                counts["zero"] = counts.get("zero", 0) + 1
                            yield eq(f"complement(a) U={U} V={V} I={I} J1={J1} J2={J2}", lhs, rhs)
                # (b): V = J + L, row sets I1, I2 inside U
                for J in subsets(V):
                    L = minus(V, *J)
                    for I1 in subsets(U):
                        lp = len(I1) - len(J)
                        if not 0 <= lp <= len(L):
                            continue
                        for I2 in subsets(U, 2 * len(J) + len(L) - len(I1)):
                            lhs = A.zero()
                            for L1 in subsets(L, lp):
                                L2 = minus(L, *L1)
                                e = inversion_count(J, L1) + inversion_count(L1, srt(L2, J))
                                lhs = lhs + (minor(n, I1, srt(J, L1)) * minor(n, I2, srt(J, L2))).scale(mq(e))
                            common = srt(set(I1) & set(I2))
                            if len(common) == len(J):
                                d1 = minus(I1, *I2)
                                e = inversion_count(common, d1) + inversion_count(d1, I2)
                                rhs = (minor(n, common, J) * UV).scale(mq(e))
                                counts["nonzero"] = counts.get("nonzero", 0) + 1
                            else:
                                rhs = A.zero()
                                counts["zero"] = counts.get("zero", 0) + 1
                            yield eq(f"complement(b) U={U} V={V} J={J} I1={I1} I2={I2}", lhs, rhs)


# -- S8 -------------------------------------------------------------------------------------------


def s8_tuples(n: int):
    for k in range(1, n):
        for I in index_sets(n, k):
            for J in index_sets(n, k):
                for r in range(max(I) + 1, n + 1):
                    for c in range(max(J) + 1, n + 1):
                        yield I, J, r, c


def suite_s8(n: int):
    one_minus_q2 = ONE - Q * Q
    for I, J, r, c in s8_tuples(n):
        M, x = minor(n, I, J), X(n, r, c)
        lhs = M * x - (x * M).scale(Q * Q)
        rhs = minor(n, srt(I, [r]), srt(J, [c])).scale(one_minus_q2)
        yield eq(f"corner I={I} J={J} r={r} c={c}", lhs, rhs)
