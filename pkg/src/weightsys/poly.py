"""Sparse integer polynomials in the single formal variable N."""

from __future__ import annotations


class IntPolynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients.

    Stored as exponent -> coefficient with no zero entries, so two equal
    polynomials always compare and hash equal.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for exp, c in (coeffs.items() if hasattr(coeffs, "items")
                           else coeffs):
                if exp < 0:
                    raise ValueError(f"negative exponent {exp}")
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("IntPolynomial is immutable")

    def __reduce__(self):
        # The blocked __setattr__ also blocks the default unpickling
        # path, so rebuild through the constructor instead.
        return (IntPolynomial, (dict(self._coeffs),))

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self):
        """(exponent, coefficient) pairs in descending exponent order."""
        return sorted(self._coeffs.items(), reverse=True)

    @property
    def degree(self) -> int:
        """Largest exponent with nonzero coefficient; -1 for the zero
        polynomial (so degree bounds read as plain <=)."""
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, n):
        return sum(c * n ** e for e, c in self._coeffs.items())

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):  # handy for "== 0" in tests
            return self._coeffs == ({} if other == 0 else {0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self):
        return IntPolynomial({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        merged = dict(self._coeffs)
        for e, c in other._coeffs.items():
            merged[e] = merged.get(e, 0) + c
        return IntPolynomial(merged)

    def __repr__(self):
        return f"IntPolynomial({self._coeffs!r})"

    def __str__(self):
        """Descending exponents with explicit signs, e.g. "2*N^3 - 2*N"."""
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "N" if mag == 1 else f"{mag}*N"
            else:
                body = f"N^{e}" if mag == 1 else f"{mag}*N^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> dict[str, str]:
        """{"exponent": "coefficient"} with both sides as decimal strings
        (coefficients can outgrow fixed-width integer consumers)."""
        return {str(e): str(c) for e, c in self.items()}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> "IntPolynomial":
        return cls({int(e): int(c) for e, c in data.items()})
