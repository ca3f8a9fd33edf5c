"""Sign patterns, orders of moduli, couples and the Z2 x Z2 action on them.

Sign patterns are stored leading-coefficient first and always normalized to a
leading ``+``. An order of moduli is a word over ``{P, N}`` listing the roots by
increasing modulus. For two sign changes the order is summarized by the triple
code ``(u, v, w)``: the numbers of negative-root moduli below the smaller
positive root, between the two positive roots, and above the larger one.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ParseError, WrongChangeCount

__all__ = [
    "SignPattern",
    "ModuliOrder",
    "Couple",
    "TripleCode",
    "PairCode",
    "is_compatible",
    "triple_code",
    "order_from_code",
    "apply_im",
    "apply_ir",
    "orbit",
    "canonical_couple",
    "canonical_order",
    "enumerate_couples",
    "parse_couple",
    "parse_pattern",
]


class TripleCode(NamedTuple):
    u: int
    v: int
    w: int

    def __str__(self) -> str:
        return f"({self.u},{self.v},{self.w})"


class PairCode(NamedTuple):
    u: int
    v: int

    def __str__(self) -> str:
        return f"({self.u},{self.v})"


@dataclass(frozen=True, order=True)
class SignPattern:
    """Signs ``+1``/``-1`` of the coefficients, leading coefficient first."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        signs = tuple(int(s) for s in self.signs)
        if not signs:
            raise ValueError("empty sign pattern")
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"signs must be +1 or -1, got {signs}")
        if signs[0] != 1:
            raise ValueError("sign patterns are normalized to a leading +")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_blocks(cls, *blocks: int) -> "SignPattern":
        """``SignPattern.from_blocks(2, 4, 2)`` is ``++----++``."""
        if not blocks or any(b < 1 for b in blocks):
            raise ValueError(f"block lengths must be positive, got {blocks}")
        signs: list[int] = []
        for i, b in enumerate(blocks):
            signs.extend([1 if i % 2 == 0 else -1] * b)
        return cls(tuple(signs))

    @classmethod
    def normalized(cls, signs: Iterable[int]) -> "SignPattern":
        """Build a pattern, flipping all signs if the first one is ``-``."""
        signs = tuple(signs)
        if signs and signs[0] < 0:
            signs = tuple(-s for s in signs)
        return cls(signs)

    @property
    def degree(self) -> int:
        return len(self.signs) - 1

    @property
    def blocks(self) -> tuple[int, ...]:
        return tuple(len(list(g)) for _, g in itertools.groupby(self.signs))

    @property
    def changes(self) -> int:
        return sum(a != b for a, b in zip(self.signs, self.signs[1:]))

    @property
    def preservations(self) -> int:
        return self.degree - self.changes

    def text(self) -> str:
        return " ".join("+" if s > 0 else "-" for s in self.signs)

    def compact(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def label(self) -> str:
        return "S" + ",".join(str(b) for b in self.blocks)

    def __str__(self) -> str:
        return "Σ_{" + ",".join(str(b) for b in self.blocks) + "}"


@dataclass(frozen=True, order=True)
class ModuliOrder:
    word: str

    def __post_init__(self) -> None:
        word = "".join(self.word).upper()
        if not word or set(word) - {"P", "N"}:
            raise ValueError(f"order word must be a nonempty word over P/N, got {self.word!r}")
        object.__setattr__(self, "word", word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    @property
    def code(self) -> tuple[int, ...]:
        """Run lengths of ``N`` separated by the ``P`` letters."""
        return tuple(len(run) for run in self.word.split("P"))

    def swapped(self) -> "ModuliOrder":
        return ModuliOrder(self.word.translate(str.maketrans("PN", "NP")))

    def reversed(self) -> "ModuliOrder":
        return ModuliOrder(self.word[::-1])


@dataclass(frozen=True, order=True)
class Couple:
    pattern: SignPattern
    order: ModuliOrder

    def __post_init__(self) -> None:
        if self.pattern.degree != len(self.order):
            raise ValueError(
                f"pattern of degree {self.pattern.degree} paired with order of length {len(self.order)}"
            )

    @property
    def degree(self) -> int:
        return self.pattern.degree

    @property
    def code(self) -> tuple[int, ...]:
        return self.order.code

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.pattern.blocks, self.order.code

    def text(self) -> str:
        return f"{self.pattern.label()} {_code_text(self.order.code)}"

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern.text(),
            "order": self.order.word,
            "code": _code_text(self.order.code),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Couple":
        return cls(parse_pattern(data["pattern"]), ModuliOrder(data["order"]))

    def __str__(self) -> str:
        return f"({self.pattern}, {self.order.word})"


def _code_text(code: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in code) + ")"


def is_compatible(c: Couple) -> bool:
    word = c.order.word
    return word.count("P") == c.pattern.changes and word.count("N") == c.pattern.preservations


def triple_code(c: Couple) -> TripleCode:
    if c.pattern.changes != 2 or c.order.word.count("P") != 2:
        raise WrongChangeCount(f"triple codes need exactly two sign changes, got {c}")
    return TripleCode(*c.order.code)


def order_from_code(code: Sequence[int]) -> ModuliOrder:
    """Inverse of :attr:`ModuliOrder.code`: ``(1,3,1)`` gives ``NPNNNPN``."""
    if any(k < 0 for k in code):
        raise ValueError(f"negative entry in code {tuple(code)}")
    return ModuliOrder("P".join("N" * k for k in code))


def apply_im(c: Couple) -> Couple:
    """Image under Q(x) -> (-1)^d Q(-x): odd positions from the leading end flip, P <-> N."""
    signs = tuple(s if i % 2 == 0 else -s for i, s in enumerate(c.pattern.signs))
    return Couple(SignPattern(signs), c.order.swapped())


def apply_ir(c: Couple) -> Couple:
    """Image under Q(x) -> x^d Q(1/x) / Q(0): pattern and order read from the right."""
    return Couple(SignPattern.normalized(reversed(c.pattern.signs)), c.order.reversed())


def orbit(c: Couple) -> frozenset[Couple]:
    seen = {c}
    frontier = [c]
    while frontier:
        x = frontier.pop()
        for y in (apply_im(x), apply_ir(x)):
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def canonical_order(pattern: SignPattern) -> ModuliOrder:
    """Blocks ``(b1, ..., bs)`` give the code ``(bs-1, ..., b1-1)``."""
    return order_from_code([b - 1 for b in reversed(pattern.blocks)])


def canonical_couple(pattern: SignPattern) -> Couple:
    return Couple(pattern, canonical_order(pattern))


def enumerate_couples(pattern: SignPattern) -> list[Couple]:
    """All compatible couples of ``pattern``, sorted by code lexicographically."""
    d, k = pattern.degree, pattern.changes
    codes = []
    for positions in itertools.combinations(range(d), k):
        word = ["N"] * d
        for p in positions:
            word[p] = "P"
        codes.append(ModuliOrder("".join(word)).code)
    return [Couple(pattern, order_from_code(code)) for code in sorted(codes)]


_BLOCK_RE = re.compile(r"^\s*[SΣ]_?\{?\s*(\d+(?:\s*,\s*\d+)*)\s*\}?\s*$")
_CODE_COUPLE_RE = re.compile(
    r"^\s*[SΣ]_?\{?\s*(\d+(?:\s*,\s*\d+)*)\s*\}?\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*$"
)
_WORD_COUPLE_RE = re.compile(
    r"^\s*(?:[SΣ]\s*)?pattern\s*=\s*([+\-\s]+?)\s+order\s*=\s*([PNpn]+)\s*$"
)


def parse_pattern(text: str) -> SignPattern:
    """Accepts ``S2,4,2``, ``Σ_{2,4,2}``, ``++----++`` or ``+ + - - - - + +``."""
    m = _BLOCK_RE.match(text)
    if m:
        return SignPattern.from_blocks(*(int(b) for b in m.group(1).split(",")))
    chars = text.replace(" ", "")
    if chars and set(chars) <= {"+", "-"}:
        signs = tuple(1 if ch == "+" else -1 for ch in chars)
        if signs[0] != 1:
            raise ParseError(f"sign pattern must start with '+': {text!r}")
        return SignPattern(signs)
    raise ParseError(f"cannot parse sign pattern {text!r}")


def parse_couple(text: str) -> Couple:
    """Parse ``"S2,4,2 (1,3,1)"`` or ``"pattern=++----++ order=PNNNNNP"``."""
    m = _CODE_COUPLE_RE.match(text)
    if m:
        pattern = SignPattern.from_blocks(*(int(b) for b in m.group(1).split(",")))
        order = order_from_code([int(k) for k in m.group(2).split(",")])
    else:
        m = _WORD_COUPLE_RE.match(text)
        if not m:
            raise ParseError(f"cannot parse couple {text!r}")
        pattern = parse_pattern(m.group(1))
        order = ModuliOrder(m.group(2))
    try:
        return Couple(pattern, order)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
