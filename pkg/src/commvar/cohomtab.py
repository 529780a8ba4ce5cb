"""Exact integer polynomial arithmetic and the graded dimension tables of
the complete unordered flag manifold at odd primes."""

from __future__ import annotations

from .errors import NotOddPrime


class IntPolynomial:
    """Integer-coefficient polynomial in one variable, stored sparsely as a
    degree -> coefficient map with no zero entries."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        for deg, c in (coeffs or {}).items():
            deg = int(deg)
            c = int(c)
            if deg < 0:
                raise ValueError("degrees must be non-negative")
            if c != 0:
                data[deg] = c
        self.coeffs = data

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls({degree: coeff})

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = dict(self.coeffs)
        for deg, c in other.coeffs.items():
            out[deg] = out.get(deg, 0) + c
        return IntPolynomial(out)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out: dict[int, int] = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return IntPolynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def evaluate(self, x: int) -> int:
        return sum(c * x ** deg for deg, c in self.coeffs.items())

    def to_dict(self) -> dict[int, int]:
        return dict(sorted(self.coeffs.items()))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for deg in sorted(self.coeffs):
            c = self.coeffs[deg]
            if deg == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{head}t^{deg}" if deg > 1 else f"{head}t")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"IntPolynomial({self.to_dict()})"


def _require_odd_prime(p: int):
    if p < 3 or p % 2 == 0:
        raise NotOddPrime(f"{p} is not an odd prime")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise NotOddPrime(f"{p} is not an odd prime")
        d += 2


def _reduced_poly(p: int) -> IntPolynomial:
    """t^(2p-3) (1 + t) prod_{i=1}^{p-2} (1 + t^(2i-1))."""
    poly = IntPolynomial.monomial(2 * p - 3)
    poly = poly * IntPolynomial({0: 1, 1: 1})
    for i in range(1, p - 1):
        poly = poly * IntPolynomial({0: 1, 2 * i - 1: 1})
    return poly


def poincare_poly(p: int) -> IntPolynomial:
    """Mod-p Poincare polynomial of the manifold of complete unordered flags
    in complex dimension p, for an odd prime p:

        P(t) = 1 + t^(2p-3) (1 + t) prod_{i=1}^{p-2} (1 + t^(2i-1))
    """
    _require_odd_prime(p)
    return IntPolynomial.one() + _reduced_poly(p)


def a0_lambda_table(p: int) -> dict[int, int]:
    """Graded dimensions of the reduced cohomology: a rank-one exterior
    Bockstein factor tensored with an exterior algebra on generators of
    degrees 2i-1, shifted so the lowest class sits in degree 2p-3.  Adding 1
    in degree 0 recovers the full Poincare polynomial."""
    _require_odd_prime(p)
    return _reduced_poly(p).to_dict()
