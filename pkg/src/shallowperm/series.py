"""Exact power series and the catalog of counting formulas.

Everything here is exact: coefficients are Fractions or unbounded ints,
and no floating point appears anywhere. Univariate series are truncated
expansions of rational functions in the size variable. Bivariate series
track a second statistic (descents); they are stored as one integer row
per size, entry k counting the permutations with statistic value k.

The bivariate 231 entries are composed by series algebra from the
leading-pair series C: the defining quotients involve 1/t and 1/(xt)
factors whose negative powers must cancel, so the intermediate
coefficients are Laurent polynomials and a final check rejects any
surviving negative degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

ORDER_CAP = 64


class ZeroConstantTerm(ValueError):
    """The denominator has no constant term, so no expansion exists."""


class OrderExceeded(ValueError):
    """A coefficient beyond the truncation order was requested."""


class NonIntegerCount(ValueError):
    """A counting series produced a non-integer or negative coefficient."""


class NegativeDegreeResidue(ValueError):
    """Laurent cancellation failed: negative powers survived."""


class OutOfDomain(ValueError):
    """A closed form was evaluated outside its stated domain."""


@dataclass(frozen=True)
class RationalSeries:
    """Truncated power series with exact rational coefficients."""

    coefficients: tuple[Fraction, ...]
    variable: str = "x"
    counting: bool = False
    name: Optional[str] = None

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class BivariateSeries:
    """Triangular table of counts by size n and statistic value k <= n."""

    rows: tuple[tuple[int, ...], ...]
    size_variable: str
    statistic_variable: str
    name: Optional[str] = None

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    def value(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError("indices must be nonnegative")
        if n > self.order:
            raise OrderExceeded(f"size {n} beyond order {self.order}")
        if k > n:
            return 0
        return self.rows[n][k]

    def row_sum(self, n: int) -> int:
        if n > self.order:
            raise OrderExceeded(f"size {n} beyond order {self.order}")
        return sum(self.rows[n])


def expand_rational(
    numerator: Sequence[Union[int, Fraction]],
    denominator: Sequence[Union[int, Fraction]],
    order: int,
    *,
    variable: str = "x",
    counting: bool = False,
    name: Optional[str] = None,
) -> RationalSeries:
    """
    Long division of two polynomials as a power series up to the order.

    The polynomials are coefficient sequences indexed by exponent. The
    denominator's constant term must be nonzero.

    >>> [int(c) for c in expand_rational([1], [1, -1], 4).coefficients]
    [1, 1, 1, 1, 1]
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = [Fraction(c) for c in numerator]
    den = [Fraction(c) for c in denominator]
    if not den or den[0] == 0:
        raise ZeroConstantTerm("denominator constant term is zero")
    coeffs = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for i in range(max(0, n - len(den) + 1), n):
            acc -= coeffs[i] * den[n - i]
        coeffs.append(acc / den[0])
    return RationalSeries(
        coefficients=tuple(coeffs), variable=variable, counting=counting, name=name
    )


def coefficient(series: RationalSeries, n: int) -> Fraction:
    """
    The exact coefficient of the n-th power.

    For counting series the result must be a nonnegative integer; anything
    else signals an implementation bug and raises NonIntegerCount.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n > series.order:
        raise OrderExceeded(f"coefficient {n} beyond order {series.order}")
    value = series.coefficients[n]
    if series.counting and (value.denominator != 1 or value < 0):
        raise NonIntegerCount(
            f"{series.name or 'series'} coefficient {n} is {value}, "
            "expected a nonnegative integer"
        )
    return value


def multiply_by_polynomial(
    series: RationalSeries, poly: Sequence[Union[int, Fraction]]
) -> tuple[Fraction, ...]:
    """Product coefficients up to the series order (for round-trip checks)."""
    out = [Fraction(0)] * (series.order + 1)
    for e, c in enumerate(poly):
        c = Fraction(c)
        if c == 0:
            continue
        for n in range(series.order + 1 - e):
            out[n + e] += c * series.coefficients[n]
    return tuple(out)


def fibonacci(m: int) -> int:
    """
    Fibonacci numbers under the F_1 = F_2 = 1 convention, extended to
    negative indices by F_{-m} = (-1)^{m+1} F_m (so F_{-1} = 1).
    """
    if m < 0:
        value = fibonacci(-m)
        return value if (-m) % 2 == 1 else -value
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever k < 0 or k > n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# Laurent-coefficient series internals (statistic exponents may go negative
# while composing, size exponents never do).

Laurent = dict[int, Fraction]
_LSeries = list[Laurent]


def _lp_add(a: Laurent, b: Laurent) -> Laurent:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, Fraction(0)) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _lp_mul(a: Laurent, b: Laurent) -> Laurent:
    out: Laurent = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, Fraction(0)) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _lp_scale(a: Laurent, factor: Fraction, shift: int = 0) -> Laurent:
    if factor == 0:
        return {}
    return {e + shift: c * factor for e, c in a.items()}


def _ls_add(f: _LSeries, g: _LSeries) -> _LSeries:
    n = max(len(f), len(g))
    return [
        _lp_add(f[i] if i < len(f) else {}, g[i] if i < len(g) else {})
        for i in range(n)
    ]


def _ls_scale(f: _LSeries, factor: Fraction, stat_shift: int = 0) -> _LSeries:
    return [_lp_scale(row, factor, stat_shift) for row in f]


def _ls_shift_size(f: _LSeries, delta: int, order: int) -> _LSeries:
    if delta >= 0:
        rows = [{} for _ in range(delta)] + [dict(r) for r in f]
    else:
        if any(f[i] for i in range(min(-delta, len(f)))):
            raise NegativeDegreeResidue("size shift would create negative powers")
        rows = [dict(r) for r in f[-delta:]]
    return rows[: order + 1]


def _ls_mul(f: _LSeries, g: _LSeries, order: int) -> _LSeries:
    out: _LSeries = [{} for _ in range(order + 1)]
    for i in range(min(len(f), order + 1)):
        if not f[i]:
            continue
        for j in range(min(len(g), order + 1 - i)):
            if not g[j]:
                continue
            out[i + j] = _lp_add(out[i + j], _lp_mul(f[i], g[j]))
    return out


def _ls_div(num: _LSeries, den: _LSeries, order: int) -> _LSeries:
    lead = den[0]
    if len(lead) != 1:
        raise ZeroConstantTerm(
            "series division needs a monomial leading coefficient"
        )
    ((lead_exp, lead_coeff),) = lead.items()
    inv = {-lead_exp: Fraction(1) / lead_coeff}
    out: _LSeries = []
    for n in range(order + 1):
        acc = dict(num[n]) if n < len(num) else {}
        for i in range(max(0, n - len(den) + 1), n):
            if den[n - i]:
                acc = _lp_add(acc, _lp_scale(_lp_mul(out[i], den[n - i]), Fraction(-1)))
        out.append(_lp_mul(acc, inv))
    return out


def _ls_one(order: int) -> _LSeries:
    return [{0: Fraction(1)}] + [{} for _ in range(order)]


def _rows_to_bivariate(
    rows: _LSeries, *, size_variable: str, statistic_variable: str, name: str
) -> BivariateSeries:
    table = []
    for n, row in enumerate(rows):
        if any(e < 0 for e in row):
            raise NegativeDegreeResidue(
                f"{name}: negative {statistic_variable}-powers survive at "
                f"{size_variable}^{n}: {sorted(row)}"
            )
        if any(e > n for e in row):
            raise ValueError(f"{name}: statistic degree exceeds size at {n}")
        dense = []
        for k in range(n + 1):
            c = row.get(k, Fraction(0))
            if c.denominator != 1 or c < 0:
                raise NonIntegerCount(f"{name}: entry ({n},{k}) is {c}")
            dense.append(int(c))
        table.append(tuple(dense))
    return BivariateSeries(
        rows=tuple(table),
        size_variable=size_variable,
        statistic_variable=statistic_variable,
        name=name,
    )


def _leading_pair_231_raw(order: int) -> _LSeries:
    # t^2 x^4 + t x^2 / (1 - xt) + 3 t^3 x^5 / (1 - xt)^2
    one = _ls_one(order)
    inv_lin = _ls_div(one, [{0: Fraction(1)}, {1: Fraction(-1)}], order)
    inv_sq = _ls_mul(inv_lin, inv_lin, order)
    quartic: _LSeries = [{} for _ in range(order + 1)]
    if order >= 4:
        quartic[4] = {2: Fraction(1)}
    piece2 = _ls_shift_size(_ls_scale(inv_lin, Fraction(1), 1), 2, order)
    piece3 = _ls_shift_size(_ls_scale(inv_sq, Fraction(3), 3), 5, order)
    return _ls_add(_ls_add(quartic, piece2), piece3)


def _head_series_231_raw(order: int) -> _LSeries:
    # B = (x + C - C/t) / (1 - C/(xt)) with the negative powers cancelling.
    c = _leading_pair_231_raw(order + 1)
    x: _LSeries = [{} for _ in range(order + 1)]
    if order >= 1:
        x[1] = {0: Fraction(1)}
    num = _ls_add(_ls_add(x, c[: order + 1]), _ls_scale(c[: order + 1], Fraction(-1), -1))
    c_over_xt = _ls_scale(_ls_shift_size(c, -1, order), Fraction(-1), -1)
    den = _ls_add(_ls_one(order), c_over_xt)
    return _ls_div(num, den, order)


def _build_c231(order: int) -> BivariateSeries:
    return _rows_to_bivariate(
        _leading_pair_231_raw(order)[: order + 1],
        size_variable="x",
        statistic_variable="t",
        name="C231xt",
    )


def _build_b231(order: int) -> BivariateSeries:
    return _rows_to_bivariate(
        _head_series_231_raw(order),
        size_variable="x",
        statistic_variable="t",
        name="B231xt",
    )


def _build_t231xt(order: int) -> BivariateSeries:
    b = _head_series_231_raw(order)
    one_minus_b = _ls_add(_ls_one(order), _ls_scale(b, Fraction(-1)))
    t = _ls_div(_ls_one(order), one_minus_b, order)
    return _rows_to_bivariate(
        t, size_variable="x", statistic_variable="t", name="T231xt"
    )


def _build_a321(order: int) -> BivariateSeries:
    one = Fraction(1)
    num: _LSeries = [
        {},
        {0: one},
        {0: Fraction(-2), 1: one},
        {0: one, 1: Fraction(-1)},
    ]
    den: _LSeries = [
        {0: one},
        {0: Fraction(-3)},
        {0: Fraction(3), 1: Fraction(-2)},
        {0: Fraction(-1), 1: one},
    ]
    rows = _ls_div(num[: order + 1], den, order)
    return _rows_to_bivariate(
        rows, size_variable="z", statistic_variable="x", name="A321xz"
    )


def _build_desc_binom_132(order: int) -> BivariateSeries:
    rows = [(1,)]
    for n in range(1, order + 1):
        rows.append(tuple(binomial(2 * n - 2 - k, k) for k in range(n + 1)))
    return BivariateSeries(
        rows=tuple(rows),
        size_variable="n",
        statistic_variable="k",
        name="DescBinom132",
    )


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def _poly_pow(a: Sequence[int], e: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(e):
        out = _poly_mul(out, a)
    return out


# ---------------------------------------------------------------------------
# Catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "univariate" or "bivariate"
    description: str
    size_variable: str
    statistic_variable: Optional[str]
    numerator: Optional[tuple[int, ...]]
    denominator: Optional[tuple[int, ...]]
    build: Callable[[int], Union[RationalSeries, BivariateSeries]]


def _univariate(name, description, num, den):
    num = tuple(num)
    den = tuple(den)

    def build(order: int) -> RationalSeries:
        return expand_rational(
            num, den, order, variable="x", counting=True, name=name
        )

    return CatalogEntry(
        name=name,
        kind="univariate",
        description=description,
        size_variable="x",
        statistic_variable=None,
        numerator=num,
        denominator=den,
        build=build,
    )


def _bivariate(name, description, size_variable, statistic_variable, build):
    return CatalogEntry(
        name=name,
        kind="bivariate",
        description=description,
        size_variable=size_variable,
        statistic_variable=statistic_variable,
        numerator=None,
        denominator=None,
        build=build,
    )


CATALOG: dict[str, CatalogEntry] = {
    entry.name: entry
    for entry in [
        _univariate(
            "T231",
            "shallow 231-avoiding (equivalently 312-avoiding) permutations by size",
            (1, -3, 2, -1, -1, -1),
            (1, -4, 4, -2, -1, -1),
        ),
        _univariate(
            "T123",
            "shallow 123-avoiding permutations by size",
            (1, -3, 0, 11, -13, 7, 6, 3),
            _poly_mul(_poly_pow((1, -1), 4), (1, 0, -4, 0, 1)),
        ),
        _univariate(
            "P132",
            "shallow 132-avoiding persymmetric permutations by size",
            (1, 0, -1, 2),
            _poly_mul((1, -1), (1, 0, -2, 0, -1)),
        ),
        _univariate(
            "P231",
            "shallow 231-avoiding persymmetric permutations by size",
            (-1, -1, 2, 1, -2, -1, 1, 1, 2, 0, 1),
            (-1, 0, 4, 0, -4, 0, 2, 0, 1, 0, 1),
        ),
        _univariate(
            "P123",
            "shallow 123-avoiding persymmetric permutations by size",
            (1, 0, -2, 1, 0, 1, 1),
            _poly_mul(
                _poly_mul(_poly_pow((-1, 1), 2), (1, 1)), (1, 0, -2, 0, -1)
            ),
        ),
        _univariate(
            "FibOdd",
            "odd-indexed Fibonacci numbers F(2n-1); shallow 132-, 213- or "
            "321-avoiding permutations by size",
            (1, -2),
            (1, -3, 1),
        ),
        _univariate(
            "Grassmannian",
            "shallow permutations with at most one descent, by size",
            (1, -3, 4, -1),
            _poly_pow((1, -1), 4),
        ),
        _bivariate(
            "A321xz",
            "shallow 321-avoiding permutations by size (z) and descents (x)",
            "z",
            "x",
            _build_a321,
        ),
        _bivariate(
            "C231xt",
            "shallow 231-avoiding permutations starting with the two largest "
            "values in order, by size (x) and descents (t)",
            "x",
            "t",
            _build_c231,
        ),
        _bivariate(
            "B231xt",
            "shallow 231-avoiding permutations starting with the largest "
            "value, by size (x) and descents (t)",
            "x",
            "t",
            _build_b231,
        ),
        _bivariate(
            "T231xt",
            "shallow 231-avoiding permutations by size (x) and descents (t)",
            "x",
            "t",
            _build_t231xt,
        ),
        _bivariate(
            "DescBinom132",
            "shallow 132-avoiding permutations by size (n) and descents (k): "
            "binomial(2n-2-k, k)",
            "n",
            "k",
            _build_desc_binom_132,
        ),
    ]
}


def catalog_names() -> tuple[str, ...]:
    return tuple(CATALOG)


def catalog(name: str, order: int = 12) -> Union[RationalSeries, BivariateSeries]:
    """
    Expand a named catalog entry to the requested truncation order.

    Raises KeyError for unknown names and OrderExceeded beyond ORDER_CAP.
    """
    if name not in CATALOG:
        raise KeyError(f"unknown catalog name {name!r}; see catalog_names()")
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > ORDER_CAP:
        raise OrderExceeded(f"order {order} beyond the configured cap {ORDER_CAP}")
    return CATALOG[name].build(order)


# ---------------------------------------------------------------------------
# Closed-form count families


def _grid(n: int) -> int:
    return n * n // 4 + 1


_CLOSED_FORM_FUNCS: dict[str, tuple[int, Callable[[int], int], str]] = {
    "132_involutions": (1, lambda n: fibonacci(n + 1), "F(n+1)"),
    "132_centrosymmetric": (1, lambda n: (n + 2) // 2, "ceil((n+1)/2)"),
    "231_involutions": (1, lambda n: 2 ** (n - 1), "2^(n-1)"),
    "231_centrosymmetric": (1, lambda n: 2 ** (n // 2), "2^floor(n/2)"),
    "231_leading_pair": (5, lambda n: 3 * n - 11, "3n-11"),
    "123_involutions": (1, _grid, "floor(n^2/4)+1"),
    "123_centrosymmetric": (
        1,
        lambda n: _grid(n) if n % 2 == 0 else 1,
        "n^2/4+1 for even n, 1 for odd n",
    ),
    "321_total": (1, lambda n: fibonacci(2 * n - 1), "F(2n-1)"),
    "321_involutions": (1, lambda n: fibonacci(n + 1), "F(n+1)"),
    "321_centrosymmetric": (
        1,
        lambda n: fibonacci(n + 1) if n % 2 == 0 else fibonacci(n - 2),
        "F(n+1) for even n, F(n-2) for odd n",
    ),
    "321_persymmetric": (1, lambda n: fibonacci(n + 1), "F(n+1)"),
}

CLOSED_FORMS = tuple(_CLOSED_FORM_FUNCS)


def closed_form(family: str, n: int) -> int:
    """
    Evaluate one of the named closed-form count families.

    >>> closed_form("231_involutions", 5)
    16
    >>> closed_form("231_leading_pair", 5)
    4
    """
    if family not in _CLOSED_FORM_FUNCS:
        raise KeyError(f"unknown closed form {family!r}; see CLOSED_FORMS")
    min_n, func, _ = _CLOSED_FORM_FUNCS[family]
    if n < min_n:
        raise OutOfDomain(f"{family} is stated for n >= {min_n}, got {n}")
    return func(n)
