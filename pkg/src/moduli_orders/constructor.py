"""Explicit, exactly verified realizations of couples.

Building blocks are the three fixed realizations of ``Σ_{2,2}``, products of
linear factors with negative roots, concatenation (multiply one polynomial by a
copy of another whose roots are shrunk by ``eps``), and the degree lift
``(1 + eps x) Q``. Every returned :class:`Witness` has been checked exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from .combinatorics import (
    Couple,
    ModuliOrder,
    PairCode,
    SignPattern,
    TripleCode,
    apply_im,
    apply_ir,
    canonical_order,
    order_from_code,
    triple_code,
)
from .errors import EpsilonExhausted, ModuliError
from .exact import (
    Polynomial,
    RootConfiguration,
    expand,
    moduli_order,
    parse_rational,
    sign_pattern,
)

__all__ = [
    "Witness",
    "ConcatParams",
    "verify",
    "base_witness_sigma22",
    "all_negative_witness",
    "linear_witness",
    "concatenate",
    "concatenated_pattern",
    "lift_w",
    "realize_sigma_2n2",
    "realize_sigma_m22",
    "canonical_witness",
    "transform_im",
    "transform_ir",
    "degree6_bases",
]

DEFAULT_EPSILON = Fraction(1, 2)
DEFAULT_MAX_HALVINGS = 64


def verify(poly: Polynomial, couple: Couple) -> bool:
    """Exact check that ``poly`` defines ``couple.pattern`` and ``couple.order``."""
    try:
        return sign_pattern(poly) == couple.pattern and moduli_order(poly) == couple.order
    except ModuliError:
        return False


@dataclass(frozen=True)
class Witness:
    couple: Couple
    config: RootConfiguration
    poly: Polynomial
    verified: bool

    @classmethod
    def build(cls, couple: Couple, config: RootConfiguration) -> "Witness":
        poly = expand(config)
        return cls(couple, config, poly, verify(poly, couple))

    @property
    def degree(self) -> int:
        return self.poly.degree

    def to_dict(self) -> dict:
        return {
            "couple": self.couple.to_dict(),
            "roots": self.config.to_json(),
            "coefficients": self.poly.to_json(),
            "verified": self.verified,
        }

    @classmethod
    def from_dict(cls, data: dict, recheck: bool = True) -> "Witness":
        couple = Couple.from_dict(data["couple"])
        config = RootConfiguration.from_json(data["roots"])
        poly = Polynomial.from_json(data["coefficients"])
        if poly != expand(config):
            raise ValueError("stored coefficients do not match stored roots")
        verified = verify(poly, couple) if recheck else bool(data["verified"])
        return cls(couple, config, poly, verified)

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


@dataclass(frozen=True)
class ConcatParams:
    epsilon: Fraction = DEFAULT_EPSILON
    max_halvings: int = DEFAULT_MAX_HALVINGS

    def __post_init__(self) -> None:
        eps = parse_rational(self.epsilon)
        if not 0 < eps < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        object.__setattr__(self, "epsilon", eps)


# Fixed realizations of Σ_{2,2} with pair codes (2,0), (1,1), (0,2).
_SIGMA22_ROOTS = {
    PairCode(2, 0): (Fraction(5, 2), Fraction(-1), Fraction(-2)),
    PairCode(1, 1): (Fraction(2), Fraction(-1), Fraction(-3)),
    PairCode(0, 2): (Fraction(9, 10), Fraction(-1), Fraction(-11, 10)),
}


def _checked(couple: Couple, config: RootConfiguration) -> Witness:
    wit = Witness.build(couple, config)
    if not wit.verified:
        raise AssertionError(f"construction failed exact verification for {couple}")
    return wit


def base_witness_sigma22(code: tuple[int, int]) -> Witness:
    code = PairCode(*code)
    if code not in _SIGMA22_ROOTS:
        raise ValueError(f"Σ_{{2,2}} codes are (u, 2-u) with u in 0..2, got {tuple(code)}")
    couple = Couple(SignPattern.from_blocks(2, 2), order_from_code(code))
    return _checked(couple, RootConfiguration.from_values(_SIGMA22_ROOTS[code]))


def all_negative_witness(k: int) -> Witness:
    """``(x+1)(x+2)...(x+k)``: all coefficients positive, order ``N^k``."""
    if k < 1:
        raise ValueError("need at least one root (degree-0 witnesses are not allowed)")
    couple = Couple(SignPattern((1,) * (k + 1)), ModuliOrder("N" * k))
    return _checked(couple, RootConfiguration.from_values(-i for i in range(1, k + 1)))


def linear_witness(sign: int) -> Witness:
    """``x - 1`` for ``sign=-1`` (pattern ``+-``), ``x + 1`` for ``sign=+1``."""
    if sign > 0:
        return all_negative_witness(1)
    return _checked(Couple(SignPattern((1, -1)), ModuliOrder("P")), RootConfiguration.from_values([1]))


def concatenated_pattern(top: SignPattern, bottom: SignPattern) -> SignPattern:
    """Sign pattern of ``top(x) * eps^d bottom(x/eps)`` for small ``eps``.

    The tail of ``bottom`` (everything after its leading ``+``) is appended,
    negated when ``top`` ends in ``-``.
    """
    flip = top.signs[-1]
    return SignPattern(top.signs + tuple(flip * s for s in bottom.signs[1:]))


def concatenate(top: Witness, bottom: Witness, params: ConcatParams = ConcatParams()) -> Witness:
    """Realize the concatenated couple, halving ``eps`` until exact verification passes."""
    if not (top.verified and bottom.verified):
        raise ValueError("concatenate needs verified witnesses")
    couple = Couple(
        concatenated_pattern(top.couple.pattern, bottom.couple.pattern),
        ModuliOrder(bottom.couple.order.word + top.couple.order.word),
    )
    top_min = min(abs(v) for v in top.config.values)
    bottom_max = max(abs(v) for v in bottom.config.values)
    eps = params.epsilon
    for _ in range(params.max_halvings + 1):
        # skip trials where scaled bottom moduli would reach top's moduli
        if eps * bottom_max < top_min:
            config = RootConfiguration(top.config.roots + bottom.config.scaled(eps).roots)
            wit = Witness.build(couple, config)
            if wit.verified:
                return wit
        eps /= 2
    raise EpsilonExhausted(f"no eps <= {params.epsilon} within {params.max_halvings} halvings for {couple}")


def lift_w(wit: Witness, eps: Fraction = DEFAULT_EPSILON, max_halvings: int = DEFAULT_MAX_HALVINGS) -> Witness:
    """``(1 + eps x) Q`` made monic: adds the root ``-1/eps`` above every modulus.

    Takes ``(Σ_{m,2,2}, (u,v,w))`` to ``(Σ_{m+1,2,2}, (u,v,w+1))``.
    """
    if not wit.verified:
        raise ValueError("lift_w needs a verified witness")
    blocks = wit.couple.pattern.blocks
    couple = Couple(
        SignPattern.from_blocks(blocks[0] + 1, *blocks[1:]),
        ModuliOrder(wit.couple.order.word + "N"),
    )
    eps = parse_rational(eps)
    top = max(abs(v) for v in wit.config.values)
    for _ in range(max_halvings + 1):
        if 1 / eps > top:
            config = RootConfiguration(wit.config.roots + ((-1 / eps, "negative"),))
            lifted = Witness.build(couple, config)
            if lifted.verified:
                return lifted
        eps /= 2
    raise EpsilonExhausted(f"lift of {wit.couple} did not verify within {max_halvings} halvings")


def realize_sigma_2n2(n: int, code: tuple[int, int, int], params: ConcatParams = ConcatParams()) -> Witness:
    """``Σ_{2,n,2}`` with ``u, w <= 2`` as a triple concatenation.

    The factor with the largest moduli carries pair code ``(2-w, w)``, the
    middle factor ``n-3`` negative roots, the smallest one ``(u, 2-u)``.
    """
    u, v, w = TripleCode(*code)
    if n < 4:
        raise ValueError("n must be at least 4")
    if not (0 <= u <= 2 and 0 <= w <= 2) or u + v + w != n + 1 or v < 0:
        raise ValueError(f"need u, w in 0..2 and u+v+w = n+1, got {(u, v, w)} for n={n}")
    upper = concatenate(base_witness_sigma22((2 - w, w)), all_negative_witness(n - 3), params)
    wit = concatenate(upper, base_witness_sigma22((u, 2 - u)), params)
    assert wit.couple == Couple(SignPattern.from_blocks(2, n, 2), order_from_code((u, v, w)))
    return wit


@lru_cache(maxsize=1)
def degree6_bases() -> dict[TripleCode, Witness]:
    """Committed degree-6 realizations of the realizable ``Σ_{3,2,2}`` couples."""
    text = resources.files(__package__).joinpath("bases/degree6_sigma322.json").read_text(encoding="utf-8")
    data = json.loads(text)
    out = {}
    for item in data["witnesses"]:
        wit = Witness.from_dict(item, recheck=True)
        if not wit.verified:
            raise ValueError(f"stored base for {wit.couple} fails verification")
        out[triple_code(wit.couple)] = wit
    return out


def realize_sigma_m22(m: int, code: tuple[int, int, int]) -> Optional[Witness]:
    """Lift a stored degree-6 base ``(u, v, w - (m-3))`` up to ``Σ_{m,2,2}``."""
    u, v, w = TripleCode(*code)
    lifts = m - 3
    if m < 3 or w < lifts:
        return None
    base = degree6_bases().get(TripleCode(u, v, w - lifts))
    if base is None:
        return None
    wit = base
    for _ in range(lifts):
        wit = lift_w(wit)
    return wit


def canonical_witness(pattern: SignPattern, params: ConcatParams = ConcatParams()) -> Witness:
    """Realize ``pattern`` with its canonical order by concatenating linear factors."""
    if pattern.degree < 1:
        raise ValueError("degree-0 patterns have no witness")
    wit = linear_witness(pattern.signs[1])
    for prev, cur in zip(pattern.signs[1:], pattern.signs[2:]):
        # the appended sign equals prev * (sign of the new factor's constant term)
        wit = concatenate(wit, linear_witness(prev * cur), params)
    assert wit.couple == Couple(pattern, canonical_order(pattern))
    return wit


def transform_im(wit: Witness) -> Witness:
    """Witness for the ``i_m`` image: negate every root."""
    config = RootConfiguration.from_values(-v for v in wit.config.values)
    return _checked(apply_im(wit.couple), config)


def transform_ir(wit: Witness) -> Witness:
    """Witness for the ``i_r`` image: invert every root."""
    config = RootConfiguration.from_values(1 / v for v in wit.config.values)
    return _checked(apply_ir(wit.couple), config)
