from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from hypercube_walks.core.errors import InexactDivisionError


def _strip(coeffs: Iterable[int]) -> Tuple[int, ...]:
    items = [int(c) for c in coeffs]
    while items and items[-1] == 0:
        items.pop()
    return tuple(items)


@dataclass(frozen=True)
class IntPolynomial:
    # coeffs[i] multiplies t^i; trailing zeros are stripped
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def linear(cls, c0: int, c1: int) -> "IntPolynomial":
        return cls((c0, c1))

    @classmethod
    def product(cls, factors: Iterable["IntPolynomial"]) -> "IntPolynomial":
        result = cls.constant(1)
        for factor in factors:
            result = result * factor
        return result

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial.
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(i) + other.coeff(i) for i in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be >= 0")
        result = IntPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(tuple(c * factor for c in self.coeffs))

    def divide_scalar(self, divisor: int) -> "IntPolynomial":
        if divisor == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, divisor)
            if r:
                raise InexactDivisionError(f"{c} is not divisible by {divisor}")
            out.append(q)
        return IntPolynomial(tuple(out))

    def try_divide(self, divisor: "IntPolynomial") -> Optional["IntPolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return IntPolynomial()
        dq = divisor.degree
        if self.degree < dq:
            return None
        rem: List[int] = list(self.coeffs)
        lead = divisor.leading
        quotient = [0] * (self.degree - dq + 1)
        for shift in range(self.degree - dq, -1, -1):
            top = rem[shift + dq]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                return None
            quotient[shift] = q
            for i, c in enumerate(divisor.coeffs):
                rem[shift + i] -= q * c
        if any(rem):
            return None
        return IntPolynomial(tuple(quotient))

    def exact_divide(self, divisor: "IntPolynomial") -> "IntPolynomial":
        quotient = self.try_divide(divisor)
        if quotient is None:
            raise InexactDivisionError(f"inexact division: ({self}) / ({divisor})")
        return quotient

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: List[str] = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "t" if power == 1 else f"t^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _coerce(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial.constant(int(value))


def one_minus(root: int) -> IntPolynomial:
    return IntPolynomial.linear(1, -root)


@dataclass(frozen=True)
class RationalFunction:
    """num/den with den(0) = 1, so the power series at t=0 has integer coefficients."""

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero():
            raise ZeroDivisionError("denominator is the zero polynomial")
        g = gcd(num.content(), den.content())
        if g > 1:
            num, den = num.divide_scalar(g), den.divide_scalar(g)
        if den.coeff(0) == -1:
            num, den = -num, -den
        if den.coeff(0) != 1:
            raise ValueError("denominator must have constant term +-1")
        if num.is_zero():
            den = IntPolynomial.constant(1)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def reduce(self, roots: Iterable[int]) -> "RationalFunction":
        num, den = self.num, self.den
        for root in sorted(set(roots)):
            if root == 0:
                continue
            factor = one_minus(root)
            while True:
                q_num = num.try_divide(factor)
                if q_num is None:
                    break
                q_den = den.try_divide(factor)
                if q_den is None:
                    break
                num, den = q_num, q_den
        return RationalFunction(num, den)

    def series(self, order: int) -> List[int]:
        return series_expand(self, order)


def series_expand(f: RationalFunction, order: int) -> List[int]:
    if order < 0:
        raise ValueError("order must be >= 0")
    den = f.den.coeffs
    if not den or den[0] != 1:
        raise ValueError("series_expand requires den(0) = 1")
    out: List[int] = []
    for k in range(order + 1):
        acc = f.num.coeff(k)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc)
    return out


def poly_from_roots(roots: Sequence[int]) -> IntPolynomial:
    return IntPolynomial.product(IntPolynomial.linear(-r, 1) for r in roots)


def linear_factor_multiplicities(p: IntPolynomial, roots: Iterable[int]) -> List[Tuple[int, int]]:
    out: List[Tuple[int, int]] = []
    for root in sorted(set(roots), reverse=True):
        if root == 0:
            continue
        factor = one_minus(root)
        count = 0
        rest = p
        while not rest.is_zero():
            quotient = rest.try_divide(factor)
            if quotient is None:
                break
            rest, count = quotient, count + 1
        if count:
            out.append((root, count))
    return out
