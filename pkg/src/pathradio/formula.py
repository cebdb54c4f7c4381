"""Closed-form span values for radio k-colorings of P_n^m.

All arithmetic is exact integer arithmetic.  Two variants of the fourth
case (even diameter, m does not divide n) are available: ``consistent``
uses (m - s)^2, which is what the lower bound and the construction both
produce, while ``as-printed`` keeps the (m + s)^2 of the published
statement so the discrepancy can be exhibited.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import build_graph, build_layering, ceil_div

CONSISTENT = "consistent"
AS_PRINTED = "as-printed"
VARIANTS = (CONSISTENT, AS_PRINTED)


class HypothesisError(ValueError):
    """k is too small for the closed form to apply."""


def parity_offset(diam: int) -> int:
    """Additive constant in the layer gap bound: 1 for even diameter, 0 for odd."""
    return 1 if diam % 2 == 0 else 0


@dataclass(frozen=True)
class CaseTag:
    parity: str  # "even" | "odd", parity of the diameter
    divides: bool  # m | n

    def label(self) -> str:
        return f"{self.parity}-{'divides' if self.divides else 'not-divides'}"

    @property
    def printed_erratum(self) -> bool:
        return self.parity == "even" and not self.divides


def case_of(n: int, m: int) -> CaseTag:
    g = build_graph(n, m)
    parity = "odd" if g.diameter % 2 else "even"
    return CaseTag(parity, n % m == 0)


def min_valid_k(n: int, m: int) -> int:
    """Smallest k for which the closed form holds."""
    diam = ceil_div(n, m)
    return diam + 1 if diam % 2 == 0 else diam + 2


def hypothesis_holds(n: int, m: int, k: int) -> bool:
    diam = build_graph(n, m).diameter
    if diam % 2 == 0:
        return k > diam
    return k > diam + 1


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def alpha1(n: int, m: int, k: int) -> int:
    """Instance-only part of the span lower bound."""
    lay = build_layering(build_graph(n, m))
    s = lay.s_layer
    if lay.odd:
        return n * k - _exact_div(n * n - s * s, 2 * m)
    return n * k - _exact_div(n * n + m * m - s * s, 2 * m)


def alpha2_lower_bound(n: int, m: int) -> int:
    tag = case_of(n, m)
    if tag.parity == "odd":
        return 0 if tag.divides else 1
    if tag.divides:
        return 1
    return m - n % m + 1


@dataclass(frozen=True)
class SpanFormulaResult:
    n: int
    m: int
    k: int
    value: int
    case: CaseTag
    alpha1: int
    alpha2_lower_bound: int
    variant: str
    hypothesis_holds: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "value": self.value,
            "case": self.case.label(),
            "alpha1": self.alpha1,
            "alpha2LowerBound": self.alpha2_lower_bound,
            "variant": self.variant,
            "hypothesisHolds": self.hypothesis_holds,
        }


def _four_case_value(n: int, m: int, k: int, tag: CaseTag, variant: str) -> int:
    s = n % m
    if tag.parity == "odd":
        if tag.divides:
            return n * k - _exact_div(n * n - m * m, 2 * m)
        return n * k - _exact_div(n * n - s * s, 2 * m) + 1
    if tag.divides:
        return n * k - _exact_div(n * n, 2 * m) + 1
    t = m + s if variant == AS_PRINTED else m - s
    return n * k - _exact_div(n * n - t * t, 2 * m) + 1


def theorem_span(
    n: int, m: int, k: int, variant: str = CONSISTENT, unchecked: bool = False
) -> SpanFormulaResult:
    """rc_k(P_n^m) from the four-case closed form.

    Raises HypothesisError when k is below the threshold unless
    ``unchecked`` is set; unchecked values are not certified optima.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    ok = hypothesis_holds(n, m, k)
    if not ok and not unchecked:
        raise HypothesisError(
            f"k={k} too small for n={n}, m={m}: need k >= {min_valid_k(n, m)}"
        )
    tag = case_of(n, m)
    return SpanFormulaResult(
        n=n,
        m=m,
        k=k,
        value=_four_case_value(n, m, k, tag, variant),
        case=tag,
        alpha1=alpha1(n, m, k),
        alpha2_lower_bound=alpha2_lower_bound(n, m),
        variant=variant,
        hypothesis_holds=ok,
    )


