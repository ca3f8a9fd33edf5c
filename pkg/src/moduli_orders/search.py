"""Numerical search for witnesses, certified afterwards in exact arithmetic.

Root moduli are parametrized as cumulative sums of ``exp(x_i)``, which keeps
them strictly increasing, and the P/N letters of the target order fix which
moduli become positive roots. A derivative-free pattern search maximizes the
coefficient-sign margin over ``x``. Restarts run as one vectorized batch per
chunk; a positive float margin is only a candidate, and a witness is returned
only after rational snapping and exact verification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

import numpy as np

from .combinatorics import Couple, SignPattern, is_compatible
from .constructor import Witness
from .errors import OrderCollapsed
from .exact import RootConfiguration, expand

__all__ = [
    "SearchSpec",
    "SearchResult",
    "margin",
    "search_realization",
    "snap_to_rational",
    "float_margins",
]

DEFAULT_RESTARTS = 200
DEFAULT_ITERATIONS = 2000
DEFAULT_DEN_BOUND = 10**6
CHUNK = 25
_MIN_STEP = 1e-7
_MAX_STEP = 4.0
_X_BOUND = 25.0
# float margins below this are treated as noise, not candidates
_CANDIDATE = 1e-12


@dataclass(frozen=True)
class SearchSpec:
    couple: Couple
    restarts: int = DEFAULT_RESTARTS
    iterations: int = DEFAULT_ITERATIONS
    seed: int = 0
    denominator_bound: int = DEFAULT_DEN_BOUND

    def __post_init__(self) -> None:
        if self.restarts < 1 or self.iterations < 1:
            raise ValueError("restarts and iterations must be at least 1")

    def to_dict(self) -> dict:
        return {
            "couple": self.couple.to_dict(),
            "restarts": self.restarts,
            "iterations": self.iterations,
            "seed": self.seed,
            "denominator_bound": self.denominator_bound,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchSpec":
        return cls(
            Couple.from_dict(data["couple"]),
            data["restarts"],
            data["iterations"],
            data["seed"],
            data["denominator_bound"],
        )


@dataclass(frozen=True)
class SearchResult:
    witness: Optional[Witness]
    best_margin: float
    restarts_used: int
    best_restart: int = field(default=-1)

    def __post_init__(self) -> None:
        if self.witness is not None and not self.witness.verified:
            raise ValueError("search results may only carry verified witnesses")

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {
            "witness": None if self.witness is None else self.witness.to_dict(),
            "best_margin": self.best_margin,
            "restarts_used": self.restarts_used,
            "best_restart": self.best_restart,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def margin(config: RootConfiguration, pattern: SignPattern) -> Fraction:
    """``min_j s_j q_j / C(d, j)``; positive iff ``config`` realizes ``pattern``."""
    p = expand(config)
    d = p.degree
    if d != pattern.degree:
        raise ValueError(f"configuration of degree {d} vs pattern of degree {pattern.degree}")
    # pattern.signs is leading first: s_j for x^j sits at index d - j
    return min(pattern.signs[d - j] * p[j] / comb(d, j) for j in range(d + 1))


def snap_to_rational(float_config: Sequence[float], denominator_bound: int) -> list[Fraction]:
    """Replace each strictly increasing modulus by its best rational approximation."""
    moduli = [Fraction(float(x)).limit_denominator(denominator_bound) for x in float_config]
    if any(m <= 0 for m in moduli) or any(b <= a for a, b in zip(moduli, moduli[1:])):
        raise OrderCollapsed(f"snapping with denominator bound {denominator_bound} breaks the ordering")
    return moduli


# ---------------------------------------------------------------------------
# Vectorized objective


def _moduli(x: np.ndarray) -> np.ndarray:
    return np.cumsum(np.exp(x), axis=-1)


def float_margins(x: np.ndarray, signs: np.ndarray, roles: np.ndarray) -> np.ndarray:
    """Relative margin ``min_j s_j q_j / e_{d-j}(|r|)`` for parameters of shape ``(..., d)``.

    Each coefficient is compared with the same elementary symmetric function of
    the root moduli, i.e. with the sum of the absolute values of its Vieta
    terms. The ratio lies in ``[-1, 1]`` and stays meaningful when the moduli
    spread over many orders of magnitude, where raw coefficients lose every
    significant digit to cancellation. Its sign agrees with :func:`margin`.
    """
    mods = _moduli(np.clip(x, -_X_BOUND, _X_BOUND))
    mods = mods / np.exp(np.mean(np.log(mods), axis=-1, keepdims=True))
    roots = mods * roles
    d = roots.shape[-1]
    coef = np.zeros(roots.shape[:-1] + (d + 1,))
    absc = np.zeros_like(coef)
    coef[..., 0] = 1.0
    absc[..., 0] = 1.0
    # leading-first; multiply by (x - r) one root at a time
    for k in range(d):
        coef[..., 1 : k + 2] = coef[..., 1 : k + 2] - roots[..., k : k + 1] * coef[..., 0 : k + 1]
        absc[..., 1 : k + 2] = absc[..., 1 : k + 2] + mods[..., k : k + 1] * absc[..., 0 : k + 1]
    with np.errstate(invalid="ignore", over="ignore"):
        rel = coef * signs / absc
    return np.min(np.where(np.isfinite(rel), rel, -1.0), axis=-1)


def _initial_points(seed: int, restart: int, d: int) -> np.ndarray:
    rng = np.random.default_rng([seed, restart, 0])
    mods = np.sort(10.0 ** rng.uniform(-2.0, 2.0, size=d))
    gaps = np.diff(np.concatenate([[0.0], mods]))
    gaps = np.maximum(gaps, 1e-9 * mods[-1])
    return np.log(gaps)


def _try_snap(x: np.ndarray, couple: Couple, den_bound: int) -> Optional[Witness]:
    mods = _moduli(x)
    mods = mods / mods[0]
    try:
        snapped = snap_to_rational(mods, den_bound)
    except OrderCollapsed:
        return None
    config = RootConfiguration.from_moduli(snapped, couple.order)
    if margin(config, couple.pattern) <= 0:
        return None
    wit = Witness.build(couple, config)
    return wit if wit.verified else None


def _run_chunk(couple: Couple, start: int, count: int, seed: int, iterations: int, den_bound: int):
    d = couple.degree
    signs = np.array(couple.pattern.signs, dtype=float)
    roles = np.array([1.0 if ch == "P" else -1.0 for ch in couple.order.word])
    x = np.stack([_initial_points(seed, start + r, d) for r in range(count)])
    f = float_margins(x, signs, roles)
    step = np.ones(count)
    active = np.ones(count, dtype=bool)
    rng = np.random.default_rng([seed, start, 1])
    best_f = f.copy()
    for _ in range(iterations):
        # a fresh random orthonormal poll basis per restart avoids stalling on kinks of the min
        q, _r = np.linalg.qr(rng.standard_normal((count, d, d)))
        dirs = np.concatenate([q, -q], axis=2).transpose(0, 2, 1)  # (count, 2d, d)
        polls = x[:, None, :] + step[:, None, None] * dirs
        fp = float_margins(polls, signs, roles)
        j = np.argmax(fp, axis=1)
        fbest = fp[np.arange(count), j]
        improve = active & (fbest > f)
        x[improve] = np.clip(polls[improve, j[improve]], -_X_BOUND, _X_BOUND)
        f[improve] = fbest[improve]
        step = np.where(improve, np.minimum(step * 2.0, _MAX_STEP), step * 0.5)
        active &= step > _MIN_STEP
        best_f = np.maximum(best_f, f)
        for r in np.flatnonzero(improve & (f > _CANDIDATE)):
            wit = _try_snap(x[r], couple, den_bound)
            if wit is not None:
                return wit, float(f[r]), start + int(r)
            # keep optimizing; a larger margin snaps more robustly
        if not active.any():
            break
    r = int(np.argmax(best_f))
    return None, float(best_f[r]), start + r


def search_realization(spec: SearchSpec) -> SearchResult:
    """Multi-start pattern search for a witness of ``spec.couple``.

    Deterministic given ``spec``: restarts are processed in fixed chunks, each
    seeded from ``(seed, first restart index)``. A chunk that produces a
    verified witness ends the search.
    """
    couple = spec.couple
    if not is_compatible(couple):
        raise ValueError(f"couple {couple} is not compatible with Descartes' rule of signs")
    best = (-np.inf, -1)
    for start in range(0, spec.restarts, CHUNK):
        count = min(CHUNK, spec.restarts - start)
        wit, f, r = _run_chunk(couple, start, count, spec.seed, spec.iterations, spec.denominator_bound)
        if wit is not None:
            return SearchResult(wit, f, start + count, r)
        if f > best[0]:
            best = (f, r)
    return SearchResult(None, float(best[0]), spec.restarts, best[1])


def build_degree6_bases(seed: int = 0) -> dict:
    """Search witnesses for the eleven realizable ``Σ_{3,2,2}`` couples.

    Output is the payload of ``bases/degree6_sigma322.json``.
    """
    from .combinatorics import order_from_code

    pattern = SignPattern.from_blocks(3, 2, 2)
    codes = [(u, v, 4 - u - v) for u in range(4) for v in range(4 - u)] + [(0, 4, 0)]
    witnesses = []
    for code in sorted(codes):
        result = search_realization(SearchSpec(Couple(pattern, order_from_code(code)), seed=seed))
        if result.witness is None:
            raise RuntimeError(f"no degree-6 witness found for code {code}")
        witnesses.append(result.witness.to_dict())
    return {"pattern": pattern.text(), "seed": seed, "witnesses": witnesses}
