"""Genus and equivariant h0 arithmetic for a double cover X -> Y.

A cover is described by the genus of the quotient ``g_Y`` and by ``n``, half
the number of ramification points. Upstairs genus follows from Hurwitz:
``g_X = 2 g_Y - 1 + n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InadmissibleCover, OutOfValidityWindow


class Linearization(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @classmethod
    def parse(cls, value) -> "Linearization":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown linearization {value!r}") from None


@dataclass(frozen=True)
class CoverData:
    g_Y: int
    n: int
    etale: bool = False

    def __post_init__(self):
        for name in ("g_Y", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InadmissibleCover(f"{name} must be a natural number, got {v!r}")
        if self.etale != (self.n == 0):
            raise InadmissibleCover(
                f"etale={self.etale} is inconsistent with n={self.n} (etale exactly when n = 0)"
            )
        if self.g_X < 2:
            raise InadmissibleCover(f"g_X = {self.g_X} < 2 for g_Y={self.g_Y}, n={self.n}")

    @classmethod
    def of(cls, g_Y: int, n: int) -> "CoverData":
        """Cover with the etale flag inferred from n."""
        return cls(g_Y, n, n == 0)

    @property
    def g_X(self) -> int:
        return 2 * self.g_Y - 1 + self.n

    @property
    def ramification_points(self) -> int:
        return 2 * self.n

    def to_json(self) -> dict:
        return {"g_Y": self.g_Y, "n": self.n, "etale": self.etale}


def genus_upstairs(c: CoverData) -> int:
    return c.g_X


def _check_positive(name: str, v: int) -> None:
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise ValueError(f"{name} must be a positive integer, got {v!r}")


def h0_canonical_power_plus(c: CoverData, i: int, linearization=Linearization.POSITIVE) -> int:
    """Dimension of the invariant part of H^0(X, K_X^i) under the chosen lift."""
    _check_positive("i", i)
    lin = Linearization.parse(linearization)
    g, n = c.g_Y, c.n
    if lin is Linearization.POSITIVE:
        return (2 * i - 1) * (g - 1) + i * n
    if i == 1:
        return g
    if i % 2 == 0:
        return (2 * i - 1) * (g - 1) + i * n
    return (2 * i - 1) * (g - 1) + (i - 1) * n


def h0_canonical_power_minus(c: CoverData, i: int, linearization=Linearization.POSITIVE) -> int:
    """Complementary (anti-invariant) part; the two parts add up to h0(K_X^i)."""
    return h0_canonical_power(c, i) - h0_canonical_power_plus(c, i, linearization)


def h0_canonical_power(c: CoverData, i: int) -> int:
    """Riemann-Roch total h0(X, K_X^i)."""
    _check_positive("i", i)
    return c.g_X if i == 1 else (2 * i - 1) * (c.g_X - 1)


def h0_twisted_plus(c: CoverData, k: int, i: int, linearization=Linearization.NEGATIVE) -> int:
    """Invariant part of H^0(X, K_X^k(-i p)) at one ramification point p.

    Only the negative lift is supported, and only for ``0 <= i <= 2k - 2`` where
    the equivariant Lefschetz count still computes an h0. For ``k = 1`` this
    leaves ``i = 0``, which is the untwisted canonical value.
    """
    _check_positive("k", k)
    if Linearization.parse(linearization) is not Linearization.NEGATIVE:
        raise ValueError("twisted dimensions are only defined for the negative linearization")
    if isinstance(i, bool) or not isinstance(i, int) or i < 0 or i > 2 * k - 2:
        raise OutOfValidityWindow(f"twist i={i} outside 0..{2 * k - 2} for k={k}")
    if k == 1:
        return h0_canonical_power_plus(c, 1, Linearization.NEGATIVE)
    base = (2 * k - 1) * (c.g_Y - 1)
    n = c.n
    if k % 2 == 0:
        extra = k * n - (i // 2 if i % 2 == 0 else (i + 1) // 2)
    else:
        extra = (k - 1) * n - (i // 2 if i % 2 == 0 else (i - 1) // 2)
    return base + extra
