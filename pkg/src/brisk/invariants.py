"""Numerical invariants of projective closures via Hilbert series.

For a homogeneous ideal J in S = k[x_0..x_V-1], the Hilbert series of
S/J is n(t) / (1-t)^V where n(t) is computed from the monomial ideal of
leading terms by the standard colon recursion

    num(I + (m)) = num(I) - t^deg(m) * num(I : m).

Writing n(t) = (1-t)^e q(t) with q(1) != 0, the Krull dimension of S/J
is D = V - e, the projective dimension is D - 1, and the degree of the
projective scheme is q(1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import kernel
from .groebner import DEFAULT_BUDGET, Budget, GroebnerBasis, Ideal, buchberger
from .orders import grevlex
from .polyring import MultiPoly


def _minimalize(gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out: list[tuple[int, ...]] = []
    for g in gens:
        if not any(kernel.mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly_sub(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _poly_shift_mul(a: dict[int, int], shift: int) -> dict[int, int]:
    return {k + shift: v for k, v in a.items()}


def _numerator(gens: tuple[tuple[int, ...], ...], memo: dict) -> dict[int, int]:
    got = memo.get(gens)
    if got is not None:
        return got
    if not gens:
        out = {0: 1}
    elif any(sum(g) == 0 for g in gens):
        out = {}
    else:
        # split on the last (largest) generator
        rest, m = gens[:-1], gens[-1]
        rest_min = tuple(_minimalize(list(rest)))
        colon = tuple(
            _minimalize([kernel.mono_div(kernel.mono_lcm(g, m), m) for g in rest])
        )
        out = _poly_sub(
            _numerator(rest_min, memo),
            _poly_shift_mul(_numerator(colon, memo), sum(m)),
        )
    memo[gens] = out
    return out


def hilbert_numerator(gb: GroebnerBasis) -> tuple[int, ...]:
    """Coefficients of the Hilbert-series numerator of S/J, from the
    leading-term ideal of any Groebner basis of J (coefficient list,
    index = power of t)."""
    gens = _minimalize(gb.leading_exponents())
    num = _numerator(tuple(gens), {})
    if not num:
        return ()
    degree = max(num)
    return tuple(num.get(i, 0) for i in range(degree + 1))


@dataclass(frozen=True)
class HilbertData:
    """Hilbert series data of S/J: numerator over (1-t)^nvars."""

    nvars: int
    numerator: tuple[int, ...]
    reduced: tuple[int, ...]  # numerator with all (1-t) factors removed
    cone_dim: int  # Krull dimension of S/J

    @property
    def is_unit_ideal(self) -> bool:
        return not self.numerator

    def proj_dimension(self) -> int:
        """Dimension of the projective scheme (-1 when empty)."""
        if self.is_unit_ideal:
            raise ValueError("unit ideal: the scheme is not defined")
        return self.cone_dim - 1

    def proj_degree(self) -> int:
        """Degree of the projective scheme (reduced numerator at t = 1)."""
        if self.is_unit_ideal or self.cone_dim == 0:
            raise ValueError("empty projective scheme has no degree")
        return sum(self.reduced)

    def series_coefficient(self, d: int) -> int:
        """Coefficient of t^d in the Hilbert series = dim_k (S/J)_d."""
        if d < 0:
            return 0
        v = self.nvars
        return sum(
            c * comb(d - i + v - 1, v - 1)
            for i, c in enumerate(self.numerator)
            if d - i >= 0
        )

    def hilbert_polynomial_value(self, d: int) -> int:
        """Value of the Hilbert polynomial at d (agrees with the series
        for large d)."""
        dim = self.cone_dim
        if dim == 0:
            return 0
        total = 0
        for i, c in enumerate(self.reduced):
            total += c * _binom_poly(d - i + dim - 1, dim - 1)
        return total


def _binom_poly(top: int, k: int) -> int:
    """binomial(top, k) as a polynomial in top (valid for negative top)."""
    num = 1
    for j in range(k):
        num *= top - j
    for j in range(2, k + 1):
        num //= j
    return num


def hilbert_data(gb: GroebnerBasis) -> HilbertData:
    num = hilbert_numerator(gb)
    reduced = list(num)
    e = 0
    while reduced and sum(reduced) == 0:
        # divide by (1 - t): if n = (1-t) m then m_i = n_0 + ... + n_i
        acc = 0
        div = []
        for c in reduced:
            acc += c
            div.append(acc)
        if div and div[-1] == 0:
            div.pop()
        reduced = div
        e += 1
    return HilbertData(
        nvars=gb.ring.nvars,
        numerator=num,
        reduced=tuple(reduced),
        cone_dim=gb.ring.nvars - e if num else 0,
    )


def hilbert_data_of_ideal(
    ideal: Ideal, budget: Budget = DEFAULT_BUDGET
) -> HilbertData:
    return hilbert_data(buchberger(ideal, grevlex(), budget))


def proj_dimension(h: HilbertData) -> int:
    return h.proj_dimension()


def proj_degree(h: HilbertData) -> int:
    return h.proj_degree()


def empty_at_infinity(
    fs: list[MultiPoly],
    j_x: Ideal,
    budget: Budget = DEFAULT_BUDGET,
) -> bool:
    """True iff the projective zero set of J_X + (f_1..f_m) + (z0) is
    empty, i.e. the homogenized system has no common zeros at infinity.

    Decided by checking that the leading-term ideal of a Groebner basis
    contains a pure power of every variable (the affine cone is a point).
    The first ring variable is the homogenizing one.
    """
    ring = j_x.ring
    for f in fs:
        if f.ring != ring:
            raise ValueError("homogenized generators must live in the projective ring")
        if not f.is_homogeneous():
            raise ValueError("generators must be homogeneous")
    z0 = ring.var(0)
    big = Ideal(ring, tuple(j_x.gens) + tuple(fs) + (z0,))
    gb = buchberger(big, grevlex(), budget)
    leads = gb.leading_exponents()
    for i in range(ring.nvars):
        if not any(
            e[i] > 0 and all(x == 0 for j, x in enumerate(e) if j != i)
            for e in leads
        ):
            return False
    return True
