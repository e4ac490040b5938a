"""Exact Baker-Campbell-Hausdorff series terms and Goldberg coefficients.

Coefficients are returned as :class:`fractions.Fraction`; words use the
run-length notation ``X^2YX``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, ParseError, variants

__all__ = [
    "DomainError",
    "ParseError",
    "bernoulli",
    "census",
    "dynkin_series",
    "engine_coefficient",
    "expand_commutators",
    "goldberg",
    "goldberg_xy",
    "is_lie_element",
    "series_terms",
    "variants",
    "verify",
]


def _frac(pair: tuple[str, str]) -> Fraction:
    return Fraction(int(pair[0]), int(pair[1]))


def _poly(terms) -> dict[str, Fraction]:
    return {word: _frac(c) for word, c in terms}


def series_terms(variant: str = "standard", order: int = 4, *, threads: int = 1,
                 full_matrix: bool = False) -> dict[int, dict[str, Fraction]]:
    """Degree -> {word: coefficient} for degrees 1..order."""
    return {deg: _poly(body) for deg, body in _core.series_terms(variant, order, threads, full_matrix)}


def engine_coefficient(word: str) -> Fraction:
    return _frac(_core.engine_coefficient(word))


def goldberg(word: str) -> Fraction:
    """g(word) from the explicit block-sum formula, independent of the engine."""
    return _frac(_core.goldberg_direct(word))


def goldberg_xy(a: int, b: int) -> Fraction:
    return _frac(_core.goldberg_xy(a, b))


def bernoulli(n: int) -> Fraction:
    return _frac(_core.bernoulli(n))


def census(n_max: int, variant: str = "standard", *, n_min: int = 2, threads: int = 1) -> list[dict]:
    rows = json.loads(_core.census(n_min, n_max, variant, threads))
    for row in rows:
        if "ratio_num" in row:
            row["ratio"] = Fraction(int(row.pop("ratio_num")), int(row.pop("ratio_den")))
    return rows


def expand_commutators(text: str) -> dict[str, Fraction]:
    """Expand ``c*[w] + ...`` (right-nested commutators) into words."""
    return _poly(_core.expand_commutators(text))


def dynkin_series(n: int) -> str:
    return _core.dynkin_series(n)


def is_lie_element(poly: str) -> bool:
    return _core.is_lie_element(poly)


def verify(suite: str, max_n: int) -> dict:
    return json.loads(_core.verify(suite, max_n))
