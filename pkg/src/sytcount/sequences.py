"""Totals, reference sequences, recurrence breakdowns, and exact ratios.

tau(s, n) is the total number of standard Young tableaux with n cells and at
most s columns, i.e. the n-th row sum of the width-s table. Reference
sequences (Catalan, Motzkin, central binomial, involutions) are computed by
their own recurrences and never routed through tableau counting, so they can
serve as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import cache
from typing import NamedTuple

from .gamma import alpha, gamma_def, gamma_rec, row_correction_terms

TAU_METHODS = ("definition", "recurrence", "closed")


class RecurrenceMismatchError(ArithmeticError):
    """The totals recurrence failed to reproduce an independently computed total."""


def parity_indicator(n: int) -> int:
    """1 if n is even, 0 otherwise. The single parity definition used everywhere."""
    return 1 if n % 2 == 0 else 0


# --- reference sequences (independent of all tableau counting) ----------------

_catalans = [1]


def catalan(n: int) -> int:
    """n-th Catalan number, via C_{m+1} = C_m * 2(2m+1) / (m+2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_catalans) <= n:
        m = len(_catalans) - 1
        quotient, remainder = divmod(_catalans[-1] * 2 * (2 * m + 1), m + 2)
        if remainder:  # pragma: no cover - the recurrence is exact
            raise ArithmeticError("Catalan recurrence lost exactness")
        _catalans.append(quotient)
    return _catalans[n]


_motzkins = [1, 1]


def motzkin(n: int) -> int:
    """n-th Motzkin number, via (m+2) M_m = (2m+1) M_{m-1} + 3(m-1) M_{m-2}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_motzkins) <= n:
        m = len(_motzkins)
        numerator = (2 * m + 1) * _motzkins[m - 1] + 3 * (m - 1) * _motzkins[m - 2]
        quotient, remainder = divmod(numerator, m + 2)
        if remainder:  # pragma: no cover - the recurrence is exact
            raise ArithmeticError("Motzkin recurrence lost exactness")
        _motzkins.append(quotient)
    return _motzkins[n]


def central_binomial(n: int) -> int:
    """Middle binomial coefficient C(n, n // 2), by an exact running product."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = n // 2
    value = 1
    for idx in range(1, k + 1):
        value = value * (n - k + idx) // idx  # exact: always a binomial
    return value


_involutions = [1, 1]


def involutions(n: int) -> int:
    """Number of involutions of n letters: I(n) = I(n-1) + (n-1) I(n-2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_involutions) <= n:
        m = len(_involutions)
        _involutions.append(_involutions[m - 1] + (m - 1) * _involutions[m - 2])
    return _involutions[n]


# --- totals -------------------------------------------------------------------

_growth_states: dict[int, list] = {}


def tau_growth(s: int, n: int) -> int:
    """Total tableau count by a level-by-level corner-growth sweep.

    Carries the full shape -> count map from one cell count to the next, so
    consecutive totals for one s cost a single dictionary pass each. This is
    the fast path behind the ratio tables; its agreement with the definitional
    route is part of the verification suites.
    """
    if s < 2:
        raise ValueError("width bound must be at least 2")
    if n < 0:
        raise ValueError("cell count must be >= 0")
    state = _growth_states.setdefault(s, [[1], {(0,) * s: 1}])
    totals, frontier = state
    while len(totals) <= n:
        level: dict[tuple[int, ...], int] = {}
        get = level.get
        for cols, count in frontier.items():
            for k in range(s):
                if k == 0 or cols[k - 1] > cols[k]:
                    grown = cols[:k] + (cols[k] + 1,) + cols[k + 1:]
                    level[grown] = get(grown, 0) + count
        totals.append(sum(level.values()))
        state[1] = frontier = level
    return totals[n]


@cache
def _tau_definition(s: int, n: int) -> int:
    if s == 2:
        return sum(alpha(n, i) for i in range(n // 2 + 1))
    return sum(gamma_def(s, n, i) for i in range(n // 2 + 1))


def _rec_row_sum(s: int, n: int) -> int:
    return sum(gamma_rec(s, n, i) for i in range(n // 2 + 1))


_tau2_chain = [1]


def _tau2_recurrence(n: int) -> int:
    while len(_tau2_chain) <= n:
        m = len(_tau2_chain)
        value = 2 * _tau2_chain[m - 1]
        if (m - 1) % 2 == 0:
            value -= catalan((m - 1) // 2)
        _tau2_chain.append(value)
    return _tau2_chain[n]


_steps_checked: dict[int, int] = {}


def _tau_recurrence(s: int, n: int) -> int:
    if s == 2:
        return _tau2_recurrence(n)
    # Walk the step identity once per new row so every recurrence total is
    # certified against the row sums it aggregates.
    top = _steps_checked.get(s, s - 1)
    for m in range(top + 1, n + 1):
        tau_recurrence_step(s, m, method="recurrence")
    if n > top:
        _steps_checked[s] = n
    return _rec_row_sum(s, n)


def tau(s: int, n: int, method: str = "definition") -> int:
    """Total number of standard tableaux with n cells and at most s columns.

    Args:
        s: width bound, at least 2.
        n: cell count, at least 0.
        method: "definition" (row sum of the definitional table),
            "recurrence" (seeded rows plus the totals recurrence), or
            "closed" (central binomial for s=2, Motzkin for s=3).
    """
    if s < 2:
        raise ValueError("width bound must be at least 2")
    if n < 0:
        raise ValueError("cell count must be >= 0")
    if method == "definition":
        return _tau_definition(s, n)
    if method == "recurrence":
        return _tau_recurrence(s, n)
    if method == "closed":
        if s == 2:
            return central_binomial(n)
        if s == 3:
            return motzkin(n)
        raise ValueError(f"no closed form is available for s={s}")
    raise ValueError(f"unknown method {method!r}; expected one of {TAU_METHODS}")


# --- the totals recurrence, term by term ---------------------------------------

@dataclass(frozen=True)
class TauRecurrenceTerms:
    """Term breakdown of one step of the totals recurrence:
    tau_s(n) = main - parity_term - gamma0_term - correction_total."""

    s: int
    n: int
    main: int              # s * tau_s(n-1)
    parity_term: int       # Catalan term, present only when n-1 is even
    gamma0_term: int       # entry (n-1, 0) of the width-s table; 0 for s=2
    correction_total: int  # every correction term feeding row n

    @property
    def value(self) -> int:
        return self.main - self.parity_term - self.gamma0_term - self.correction_total


def correction_aggregate(s: int, n: int) -> int:
    """Sum of every correction term subtracted while producing row n by
    recurrence, the i = 0 ones included. Identically zero for s = 2, whose
    row recurrence needs no corrections."""
    if s == 2:
        return 0
    return sum(term.value for term in row_correction_terms(s, n))


def tau_recurrence_step(s: int, n: int, method: str = "definition") -> TauRecurrenceTerms:
    """Compute one step of the totals recurrence and verify it exactly.

    The four terms are assembled from `method` values ("definition" or
    "recurrence") and checked against tau_s(n) computed the same way; a
    mismatch raises RecurrenceMismatchError carrying the full breakdown.
    """
    if s < 2:
        raise ValueError("width bound must be at least 2")
    if s == 2 and n < 1:
        raise ValueError("the two-column step needs n >= 1")
    if s >= 3 and n < s:
        raise ValueError(f"the width-{s} step needs n >= {s}")
    if method == "definition":
        total_prev, total_here = _tau_definition(s, n - 1), _tau_definition(s, n)
        gamma0 = 0 if s == 2 else gamma_def(s, n - 1, 0)
    elif method == "recurrence":
        if s == 2:
            total_prev, total_here = _tau2_recurrence(n - 1), _tau2_recurrence(n)
        else:
            total_prev, total_here = _rec_row_sum(s, n - 1), _rec_row_sum(s, n)
        gamma0 = 0 if s == 2 else gamma_rec(s, n - 1, 0)
    else:
        raise ValueError(f"unknown method {method!r}")
    parity = catalan((n - 1) // 2) if (n - 1) % 2 == 0 else 0
    terms = TauRecurrenceTerms(
        s=s, n=n,
        main=s * total_prev,
        parity_term=parity,
        gamma0_term=gamma0,
        correction_total=correction_aggregate(s, n),
    )
    if terms.value != total_here:
        raise RecurrenceMismatchError(
            f"tau_{s}({n}) = {total_here} but the step gives {terms.value}: {terms}")
    return terms


# --- exact ratios ---------------------------------------------------------------

def approx_decimal(value: Fraction, digits: int = 12) -> str:
    """Render an exact rational as a plain decimal string with `digits`
    significant digits. Presentation only; never used in comparisons."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return format(quotient, "f")


def ratio(s: int, n: int) -> Fraction:
    """Exact consecutive-totals ratio tau_s(n) / tau_s(n-1)."""
    if n < 1:
        raise ValueError("ratio needs n >= 1")
    return Fraction(tau_growth(s, n), tau_growth(s, n - 1))


class RatioParts(NamedTuple):
    """The three exact shares of the deficit 3 - tau_3(n)/tau_3(n-1)."""

    parity: Fraction
    gamma0: Fraction
    correction: Fraction

    @property
    def total(self) -> Fraction:
        return self.parity + self.gamma0 + self.correction


def ratio_decomposition(n: int) -> RatioParts:
    """Split 3 - ratio(3, n) into its parity, leading-entry and correction
    shares; the three parts sum to the deficit exactly."""
    if n < 3:
        raise ValueError("the decomposition needs n >= 3")
    denominator = tau_growth(3, n - 1)
    parity = catalan((n - 1) // 2) if (n - 1) % 2 == 0 else 0
    return RatioParts(
        parity=Fraction(parity, denominator),
        gamma0=Fraction(gamma_def(3, n - 1, 0), denominator),
        correction=Fraction(correction_aggregate(3, n), denominator),
    )


class RatioRow(NamedTuple):
    n: int
    value: Fraction
    approx: str


def ratio_table(s: int, max_n: int, digits: int = 12) -> list[RatioRow]:
    """Exact ratios for n = 1..max_n, each with a presentation decimal."""
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    tau_growth(s, max_n)  # one sweep warms every total the loop needs
    rows = []
    for n in range(1, max_n + 1):
        value = ratio(s, n)
        rows.append(RatioRow(n, value, approx_decimal(value, digits)))
    return rows
