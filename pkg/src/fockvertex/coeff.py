"""Exact Laurent polynomials in q over the integers.

This is the coefficient ring of the whole engine.  Everything downstream
(symmetric functions, the Heisenberg algebra, Fock vectors, chain complexes)
stores its scalars as :class:`LaurentPoly`.  Coefficients are Python ints,
except that exact rationals (``fractions.Fraction``) are admitted so that
elements like ``[m]/m * p_m`` can be carried around without leaving exact
arithmetic.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


def _norm_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """A sparse Laurent polynomial  sum_k c_k q^k  with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Scalar] = {}
        if terms:
            for k, c in terms.items():
                c = _norm_scalar(c)
                if c:
                    clean[int(k)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q(k: int = 1, coeff: Scalar = 1) -> "LaurentPoly":
        """The monomial coeff * q^k."""
        return LaurentPoly({k: coeff})

    @staticmethod
    def from_scalar(c: Scalar) -> "LaurentPoly":
        return LaurentPoly({0: c})

    # -- ring structure ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.from_scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            s = _norm_scalar(s)
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _coerce(other)
        out: dict[int, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                s = _norm_scalar(s)
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("only nonnegative powers are defined")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Scalar) -> "LaurentPoly":
        if not c:
            return LaurentPoly.zero()
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {k: _norm_scalar(v * c) for k, v in self.terms.items()}
        return res

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial_unit(self) -> bool:
        """True iff this is +-q^k, the only units of the Laurent ring."""
        if len(self.terms) != 1:
            return False
        c = next(iter(self.terms.values()))
        return c == 1 or c == -1

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_monomial_unit():
            raise ValueError(f"{self} is not a unit (+-q^k)")
        (k, c), = self.terms.items()
        return LaurentPoly({-k: c})

    def degrees(self) -> Iterable[int]:
        return self.terms.keys()

    def is_homogeneous_of_degree(self, d: int) -> bool:
        return all(k == d for k in self.terms)

    def coefficient(self, k: int) -> Scalar:
        return self.terms.get(k, 0)

    def evaluate(self, value: Fraction) -> Fraction:
        """Exact evaluation at a rational point q = value."""
        acc = Fraction(0)
        for k, c in self.terms.items():
            acc += Fraction(c) * value ** k
        return acc

    # -- text form --------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                body = str(abs(c) if isinstance(c, int) else abs(c))
            else:
                qpow = "q" if k == 1 else f"q^{k}"
                a = abs(c)
                body = qpow if a == 1 else f"{a}*{qpow}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append((" + " if c > 0 else " - ") + body)
        return "".join(pieces)


def _coerce(x: "LaurentPoly | Scalar") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.from_scalar(x)
    raise TypeError(f"cannot coerce {type(x)} into LaurentPoly")


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()
Q = LaurentPoly.q(1)


def quantum_integer(n: int) -> LaurentPoly:
    """[n] = q^{-n+1} + q^{-n+3} + ... + q^{n-1}, extended antisymmetrically.

    For n < 0 this returns -[-n], which is what (q^n - q^{-n})/(q - q^{-1})
    gives; relation checks feed negative arguments through here.
    """
    if n == 0:
        return LaurentPoly.zero()
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly({k: 1 for k in range(-n + 1, n, 2)})


def graded_dim_V(j: int) -> LaurentPoly:
    """Graded dimension of the standard graded space V_j; zero space for j < 0."""
    if j < 0:
        return LaurentPoly.zero()
    return quantum_integer(j + 1)


def bar(p: LaurentPoly) -> LaurentPoly:
    """The substitution q -> q^{-1}."""
    return LaurentPoly({-k: c for k, c in p.terms.items()})


def eval_at_one(p: LaurentPoly) -> Scalar:
    """Sum of coefficients (the classical limit q = 1)."""
    return _norm_scalar(sum(p.terms.values(), 0))
