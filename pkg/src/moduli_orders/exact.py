"""Exact rational polynomials: expansion from roots, Sturm counting, moduli orders.

Nothing in this module touches floating point. Coefficients are
:class:`fractions.Fraction` and stored constant term first, so ``coeffs[j]`` is
the coefficient of ``x**j``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Optional, Sequence, Union

from .combinatorics import ModuliOrder, SignPattern
from .errors import (
    BoundaryRoot,
    ModuliTie,
    NonGeneric,
    NotHyperbolic,
    ParseError,
    RootAtZero,
    ZeroCoefficient,
)

__all__ = [
    "Polynomial",
    "RootConfiguration",
    "SymmetricTable",
    "elementary_symmetric",
    "expand",
    "sign_pattern",
    "count_real_roots",
    "is_hyperbolic",
    "moduli_order",
    "isolate_positive_roots",
    "format_rational",
    "parse_rational",
    "INF",
]

RationalLike = Union[int, Fraction, str]

# Sentinel endpoints for count_real_roots.
INF = float("inf")


def parse_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError as exc:
            raise ParseError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Always ``"p/q"``, including ``"5/1"``, so that parsing is bit-exact."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class Polynomial:
    """Univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = [parse_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "Polynomial":
        cs = [Fraction(1)]
        for r in roots:
            r = parse_rational(r)
            nxt = [Fraction(0)] * (len(cs) + 1)
            for j, c in enumerate(cs):
                nxt[j + 1] += c
                nxt[j] -= r * c
            cs = nxt
        return cls(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse ``"x^3+1/2x^2-11/2x-5"`` style input (implicit ``*`` allowed)."""
        src = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not src:
            raise ParseError("empty polynomial")
        if src[0] not in "+-":
            src = "+" + src
        terms = re.findall(r"[+-][^+-]*", src)
        if "".join(terms) != src:
            raise ParseError(f"cannot parse polynomial {text!r}")
        coeffs: dict[int, Fraction] = {}
        term_re = re.compile(r"^([+-])(\d+(?:/\d+)?)?(?:(x)(?:\^(\d+))?)?$")
        for term in terms:
            m = term_re.match(term)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ParseError(f"cannot parse term {term!r} in {text!r}")
            sign, num, var, power = m.groups()
            c = Fraction(num) if num else Fraction(1)
            if sign == "-":
                c = -c
            deg = 0 if var is None else int(power) if power else 1
            coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
        top = max(coeffs)
        return cls([coeffs.get(j, 0) for j in range(top + 1)])

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __call__(self, x: RationalLike) -> Fraction:
        x = parse_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "" if (mag == 1 and j > 0) else str(mag)
            if j == 1:
                body += "x"
            elif j > 1:
                body += f"x^{j}"
            parts.append(sign + body)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[j] + other[j] for j in range(n))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", RationalLike]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            k = parse_rational(other)
            return Polynomial(c * k for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j in range(dq + 1):
                    rem[k - dq + j] -= c * other.coeffs[j]
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(j * c for j, c in enumerate(self.coeffs) if j > 0)

    def monic(self) -> "Polynomial":
        return self * (1 / self.leading)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic gcd (the zero polynomial only if both inputs vanish)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def reflect(self) -> "Polynomial":
        """``p(-x)``."""
        return Polynomial(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs))

    def reversed(self) -> "Polynomial":
        """``x^d p(1/x)``."""
        return Polynomial(reversed(self.coeffs))

    def rescale(self, eps: RationalLike) -> "Polynomial":
        """``eps^d p(x / eps)``; multiplies every root by ``eps``."""
        eps = parse_rational(eps)
        d = self.degree
        return Polynomial(c * eps ** (d - j) for j, c in enumerate(self.coeffs))

    def sign_at(self, x: Union[RationalLike, float]) -> int:
        if x == INF or x == -INF:
            s = 1 if self.leading > 0 else -1
            if x == -INF and self.degree % 2 == 1:
                s = -s
            return s
        v = self(x)
        return (v > 0) - (v < 0)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Polynomial":
        return cls(parse_rational(s) for s in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, text: str) -> "Polynomial":
        return cls.from_json(json.loads(text))


# ---------------------------------------------------------------------------
# Root configurations and symmetric functions


@dataclass(frozen=True)
class RootConfiguration:
    """Signed simple roots; positive values have role ``positive``."""

    roots: tuple[tuple[Fraction, str], ...]

    def __post_init__(self) -> None:
        roots = tuple((parse_rational(v), role) for v, role in self.roots)
        for v, role in roots:
            if role not in ("positive", "negative"):
                raise ValueError(f"unknown root role {role!r}")
            if v == 0:
                raise ValueError("zero root")
            if (v > 0) != (role == "positive"):
                raise ValueError(f"root {v} inconsistent with role {role}")
        mods = [abs(v) for v, _ in roots]
        if len(set(mods)) != len(mods):
            raise ValueError("root moduli must be pairwise distinct")
        object.__setattr__(self, "roots", roots)

    @classmethod
    def from_values(cls, values: Iterable[RationalLike]) -> "RootConfiguration":
        vals = [parse_rational(v) for v in values]
        return cls(tuple((v, "positive" if v > 0 else "negative") for v in vals))

    @classmethod
    def from_moduli(cls, moduli: Sequence[RationalLike], order: ModuliOrder) -> "RootConfiguration":
        """Attach signs to increasing ``moduli`` following the letters of ``order``."""
        if len(moduli) != len(order):
            raise ValueError("moduli and order differ in length")
        return cls.from_values(
            parse_rational(m) if ch == "P" else -parse_rational(m) for m, ch in zip(moduli, order.word)
        )

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for v, _ in self.roots)

    @property
    def degree(self) -> int:
        return len(self.roots)

    def order(self) -> ModuliOrder:
        ranked = sorted(self.roots, key=lambda r: abs(r[0]))
        return ModuliOrder("".join("P" if v > 0 else "N" for v, _ in ranked))

    def positive(self) -> list[Fraction]:
        return sorted(v for v in self.values if v > 0)

    def negative_moduli(self) -> list[Fraction]:
        return sorted(-v for v in self.values if v < 0)

    def scaled(self, factor: RationalLike) -> "RootConfiguration":
        f = parse_rational(factor)
        if f <= 0:
            raise ValueError("scale factor must be positive")
        return RootConfiguration(tuple((v * f, role) for v, role in self.roots))

    def to_json(self) -> list[dict]:
        return [{"value": format_rational(v), "role": role} for v, role in self.roots]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "RootConfiguration":
        return cls(tuple((parse_rational(r["value"]), r["role"]) for r in data))


@dataclass(frozen=True)
class SymmetricTable:
    """``values[k]`` is the k-th elementary symmetric polynomial of ``arity`` arguments."""

    values: tuple[Fraction, ...]

    @property
    def arity(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        # e_k = 0 outside 0..arity, matching the usual convention
        return self.values[k] if 0 <= k <= self.arity else Fraction(0)

    def means(self) -> tuple[Fraction, ...]:
        n = self.arity
        return tuple(e / comb(n, k) for k, e in enumerate(self.values))

    def newton_gaps(self) -> tuple[Fraction, ...]:
        """``S_j^2 - S_{j-1} S_{j+1}`` for ``j = 1 .. arity-1``."""
        s = self.means()
        return tuple(s[j] * s[j] - s[j - 1] * s[j + 1] for j in range(1, self.arity))


def elementary_symmetric(args: Iterable[RationalLike]) -> SymmetricTable:
    """Coefficients of ``prod (x + a)`` read from the top: ``(e_0, e_1, ..., e_n)``."""
    e = [Fraction(1)]
    for a in args:
        a = parse_rational(a)
        if a <= 0:
            raise ValueError(f"arguments must be positive, got {a}")
        e = [e[0]] + [e[k] + a * e[k - 1] for k in range(1, len(e))] + [a * e[-1]]
    return SymmetricTable(tuple(e))


def expand(config: RootConfiguration) -> Polynomial:
    return Polynomial.from_roots(config.values)


def sign_pattern(p: Polynomial) -> SignPattern:
    """Signs of all coefficients from leading to constant; raises on a zero coefficient."""
    if p.is_zero():
        raise ValueError("zero polynomial has no sign pattern")
    for j, c in enumerate(p.coeffs):
        if c == 0:
            raise ZeroCoefficient(j)
    signs = tuple(1 if c > 0 else -1 for c in reversed(p.coeffs))
    return SignPattern.normalized(signs)


# ---------------------------------------------------------------------------
# Sturm machinery


def _primitive_integer(p: Polynomial) -> tuple[int, ...]:
    """Integer coefficients of a positive multiple of ``p`` (same signs everywhere)."""
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints) if g > 1 else tuple(ints)


def _sign_int(coeffs: tuple[int, ...], x: Fraction) -> int:
    # b^n p(a/b) by homogeneous Horner; b > 0 so the sign is that of p(a/b)
    a, b = x.numerator, x.denominator
    acc = 0
    bpow = 1
    for c in reversed(coeffs):
        acc = acc * a + c * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


class SturmChain:
    def __init__(self, p: Polynomial):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        self.p = p
        chain = [p, p.derivative()]
        while not chain[-1].is_zero():
            chain.append(-(chain[-2] % chain[-1]))
        chain.pop()
        self.chain = chain
        self._ints = [_primitive_integer(q) for q in chain]

    def _sign(self, k: int, x) -> int:
        if x == INF or x == -INF:
            return self.chain[k].sign_at(x)
        return _sign_int(self._ints[k], x)

    def variations(self, x) -> int:
        signs = [s for s in (self._sign(k, x) for k in range(len(self.chain))) if s != 0]
        return sum(a != b for a, b in zip(signs, signs[1:]))

    def count(self, lo, hi) -> int:
        """Distinct real roots in the open interval ``(lo, hi)``."""
        for x in (lo, hi):
            if x not in (INF, -INF) and self._sign(0, x) == 0:
                raise BoundaryRoot(f"{x} is a root of {self.p}")
        if not lo < hi:
            return 0
        return self.variations(lo) - self.variations(hi)


def count_real_roots(p: Polynomial, interval=(-INF, INF)) -> int:
    lo, hi = interval
    lo = lo if lo in (INF, -INF) else parse_rational(lo)
    hi = hi if hi in (INF, -INF) else parse_rational(hi)
    if p.degree <= 0:
        if p.is_zero():
            raise ValueError("zero polynomial")
        return 0
    return SturmChain(p).count(lo, hi)


def squarefree_part(p: Polynomial) -> Polynomial:
    return (p // p.gcd(p.derivative())).monic()


def is_hyperbolic(p: Polynomial) -> bool:
    """All roots real: the squarefree part has as many real roots as its degree."""
    if p.degree < 1:
        raise ValueError("is_hyperbolic needs a nonconstant polynomial")
    sqf = squarefree_part(p)
    return count_real_roots(sqf) == sqf.degree


def cauchy_bound(p: Polynomial) -> Fraction:
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead if p.degree > 0 else Fraction(1)


def isolate_positive_roots(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals ``(a, b)``, each holding exactly one positive root.

    Requires ``p(0) != 0``. Endpoints are never roots; intervals are sorted.
    """
    if p(0) == 0:
        raise RootAtZero("p(0) = 0")
    return _isolate(SturmChain(p), Fraction(0), cauchy_bound(p))


def _isolate(chain: SturmChain, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        k = chain.count(a, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        mid = _split_point(chain, a, b)
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(out)


def _split_point(chain: SturmChain, a: Fraction, b: Fraction) -> Fraction:
    """A point of ``(a, b)`` that is not a root of the chain's polynomial."""
    mid = (a + b) / 2
    k = 3
    while chain._sign(0, mid) == 0:
        mid = a + (b - a) / k
        k += 1
    return mid


def _has_root_in_closed(chain: Optional[SturmChain], a: Fraction, b: Fraction) -> bool:
    if chain is None:
        return False
    if chain._sign(0, a) == 0 or chain._sign(0, b) == 0:
        return True
    return chain.count(a, b) > 0


def even_odd_parts(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``(E, O)`` with ``p(x) = E(x^2) + x O(x^2)``."""
    return Polynomial(p.coeffs[0::2]), Polynomial(p.coeffs[1::2])


def moduli_order(p: Polynomial) -> ModuliOrder:
    """Order of moduli of a hyperbolic polynomial with simple roots and distinct moduli.

    With ``p(x) = E(x^2) + x O(x^2)``, the squared moduli are the positive
    roots of ``H(y) = E(y)^2 - y O(y)^2`` (that is ``p(x) p(-x)`` in ``y = x^2``).
    At such a root ``y0 = m^2`` exactly one of ``p(m)``, ``p(-m)`` vanishes, and
    ``p(m) = 0`` iff ``E(y0)`` and ``O(y0)`` have opposite signs.
    """
    if p.degree < 1:
        raise ValueError("moduli_order needs a nonconstant polynomial")
    if p(0) == 0:
        raise RootAtZero(f"{p} vanishes at 0")
    if not is_hyperbolic(p):
        raise NotHyperbolic(f"{p} has non-real roots")
    if p.gcd(p.derivative()).degree > 0:
        raise NonGeneric(f"{p} has a multiple root")
    if p.gcd(p.reflect()).degree > 0:
        raise ModuliTie(f"{p} has roots r and -r")
    even, odd = even_odd_parts(p)
    big_h = even * even - Polynomial([0, 1]) * odd * odd
    h_chain = SturmChain(big_h)
    e_chain = SturmChain(even) if even.degree > 0 else None
    o_chain = SturmChain(odd) if odd.degree > 0 else None
    letters = []
    for a, b in _isolate(h_chain, Fraction(0), cauchy_bound(big_h)):
        # shrink (a, b) around its root until E and O keep a constant sign on it
        while _has_root_in_closed(e_chain, a, b) or _has_root_in_closed(o_chain, a, b):
            mid = (a + b) / 2
            if h_chain._sign(0, mid) == 0:
                a = b = mid
                break
            if h_chain.count(a, mid) == 1:
                b = mid
            else:
                a = mid
        letters.append("P" if even(a) * odd(a) < 0 else "N")
    return ModuliOrder("".join(letters))
