"""Monomial orders on exponent tuples.

Three total orders are provided, each refining divisibility and compatible
with monomial multiplication:

  * grevlex   -- graded reverse lexicographic (the default everywhere),
  * lex       -- pure lexicographic,
  * elim(k)   -- block order eliminating the first k variables: grevlex on
                 the first block, ties broken by grevlex on the rest.

An optional variable permutation is applied before comparison, so any
subset of variables can be moved to the front of an elimination block.

Orders are exposed in two forms: as key functions (for max()/sorted() in
Python code) and as a small ``spec`` tuple ``(kind, block, perm)`` consumed
by the polynomial kernels, which reimplement the same comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

GREVLEX = 0
LEX = 1
ELIM = 2

_KIND_NAMES = {GREVLEX: "grevlex", LEX: "lex", ELIM: "elim"}


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order: kind, elimination block size, permutation.

    ``perm`` lists variable indices in priority order; None means identity.
    """

    kind: int
    block: int = 0
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in _KIND_NAMES:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == ELIM and self.block < 1:
            raise ValueError("elimination order needs a block size >= 1")

    @property
    def name(self) -> str:
        if self.kind == ELIM:
            return f"elim({self.block})"
        return _KIND_NAMES[self.kind]

    def spec(self) -> tuple[int, int, tuple[int, ...] | None]:
        """Kernel-facing description of this order."""
        return (self.kind, self.block, self.perm)

    def _permuted(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        if self.perm is None:
            return exp
        return tuple(exp[i] for i in self.perm)

    def key(self, exp: tuple[int, ...]):
        """Sort key; max(key) is the leading monomial."""
        e = self._permuted(exp)
        if self.kind == GREVLEX:
            return (sum(e), tuple(-x for x in reversed(e)))
        if self.kind == LEX:
            return e
        a, b = e[: self.block], e[self.block :]
        return (
            sum(a),
            tuple(-x for x in reversed(a)),
            sum(b),
            tuple(-x for x in reversed(b)),
        )

    def greater(self, e1: tuple[int, ...], e2: tuple[int, ...]) -> bool:
        return self.key(e1) > self.key(e2)

    def sorted_exponents(self, exps, reverse: bool = True) -> list:
        """Exponents sorted descending (leading monomial first) by default."""
        return sorted(exps, key=self.key, reverse=reverse)

    def __str__(self) -> str:
        if self.perm is not None:
            return f"{self.name}[perm={self.perm}]"
        return self.name


def grevlex(perm: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder(GREVLEX, 0, perm)


def lex(perm: tuple[int, ...] | None = None) -> MonomialOrder:
    return MonomialOrder(LEX, 0, perm)


def elim(block: int, perm: tuple[int, ...] | None = None) -> MonomialOrder:
    """Block order in which the first ``block`` (permuted) variables are
    eliminated: any monomial involving them beats any monomial that does not.
    """
    return MonomialOrder(ELIM, block, perm)
