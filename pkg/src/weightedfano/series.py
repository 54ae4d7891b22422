"""Integer power series truncated at a fixed degree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_T t^T``; everything above ``t^T`` is discarded."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Sequence[int], truncation: int | None = None):
        coeffs = list(coefficients)
        if truncation is None:
            truncation = len(coeffs) - 1
        if truncation < 0:
            raise ValueError("truncation must be >= 0")
        coeffs = (coeffs + [0] * (truncation + 1))[: truncation + 1]
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def one(cls, truncation: int) -> "TruncatedSeries":
        return cls([1], truncation)

    @classmethod
    def binomial(cls, a: int, exponent: int, truncation: int) -> "TruncatedSeries":
        """``1 + a t^exponent``."""
        if exponent < 1:
            raise ValueError("exponent must be >= 1")
        c = [0] * (truncation + 1)
        c[0] = 1
        if exponent <= truncation:
            c[exponent] += a
        return cls(c)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        if k > self.truncation:
            raise IndexError(f"coefficient t^{k} is beyond truncation {self.truncation}")
        return self.coefficients[k]

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.truncation, other.truncation)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = self._common(other)
        return TruncatedSeries([self.coefficients[i] + other.coefficients[i] for i in range(t + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = self._common(other)
        return TruncatedSeries([self.coefficients[i] - other.coefficients[i] for i in range(t + 1)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        t = self._common(other)
        a, b = self.coefficients, other.coefficients
        out = [0] * (t + 1)
        for i, x in enumerate(a[: t + 1]):
            if x:
                for j in range(t + 1 - i):
                    out[i + j] += x * b[j]
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Power-series quotient; the divisor must have constant term 1."""
        if other.coefficients[0] != 1:
            raise ZeroDivisionError("divisor must have constant term 1")
        t = self._common(other)
        b = other.coefficients
        out = [0] * (t + 1)
        for k in range(t + 1):
            out[k] = self.coefficients[k] - sum(b[j] * out[k - j] for j in range(1, k + 1) if b[j])
        return TruncatedSeries(out)
