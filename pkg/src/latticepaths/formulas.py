"""Closed-form counting formulas, all assembled over exact rationals.

The four core evaluators count monotone unit paths from (a, b) to (m, n)
kept above a boundary line:

* ``count_weak``       above y = k*x - r        (on the line allowed)
* ``count_strict``     strictly above y = k*x - r
* ``count_weak_inv``   above y = x/k - r
* ``count_strict_inv`` strictly above y = x/k - r

Each is an alternating sum whose terms carry a rational leading factor; the
terms are accumulated as Fractions and the total is asserted to collapse to
a nonnegative integer, so a transcription slip cannot produce a silently
wrong count.  Summation bounds use floored division, which makes out-of-
range parameters yield empty sums (hence 0) rather than crashes.  Within
each documented summation range every binomial upper index is provably
nonnegative; ``exactmath.binomial`` raises if that is ever violated.

The remaining evaluators are specializations and relatives: generalized
ballot counts, Fuss-Catalan numbers, the classical two-letter walk counts
named after Koroljuk, Niederhausen and Böhm, and a totalizing ``count``
wrapper for parameter sweeps.

Preconditions are enforced exactly as documented on each function; the
evaluators demand validated queries, while ``count`` accepts anything and
returns 0 when no paths exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .exactmath import Rational, as_integer, binomial
from .model import (
    BoundaryLine,
    PathQuery,
    SlopeKind,
    Strictness,
    normalize_query,
    validate_query,
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValidationError(message)


def _finish(total: Fraction) -> int:
    value = as_integer(total)
    if value < 0:
        raise ArithmeticError(f"count collapsed to a negative value: {value}")
    return value


def count_weak(k: int, r: int, a: int, b: int, m: int, n: int) -> int:
    """Paths from (a,b) to (m,n) staying on or above y = k*x - r.

    Conditions: k >= 1, 0 <= a <= m, n >= k*m - r, max(0, k*a - r) <= b <= n.
    """
    _require(k >= 1, f"need k >= 1, got {k}")
    _require(0 <= a <= m, f"need 0 <= a <= m, got a={a}, m={m}")
    _require(n >= k * m - r, f"need n >= k*m - r: {n} < {k * m - r}")
    _require(max(0, k * a - r) <= b <= n, f"need max(0, k*a-r) <= b <= n, got b={b}")
    total = Fraction(0)
    for i in range((b + r - k * a) // (k + 1) + 1):
        ai = a + i
        term = (
            Fraction(n + r + 1 - k * m, n + r + 1 - k * ai)
            * binomial(m + n + r - (k + 1) * ai, m - a - i)
            * binomial(b + r - k * ai, i)
        )
        total += -term if i % 2 else term
    return _finish(total)


def count_strict(k: int, r: int, a: int, b: int, m: int, n: int) -> int:
    """Paths from (a,b) to (m,n) staying strictly above y = k*x - r.

    Conditions: k >= 1, 0 <= a <= m, 0 <= b <= n with b + r - k*a > 0, and
    n > k*m - r.  (The start bound is the strictly-above requirement itself,
    slightly wider than b > max(0, k*a - r): b = 0 is fine when r > k*a.)
    Equals count_weak(k, r, a, b-1, m, n-1) whenever b >= 1.
    """
    _require(k >= 1, f"need k >= 1, got {k}")
    _require(0 <= a <= m, f"need 0 <= a <= m, got a={a}, m={m}")
    _require(0 <= b <= n, f"need 0 <= b <= n, got b={b}, n={n}")
    _require(b + r - k * a > 0, f"start not strictly above the line: b+r-k*a = {b + r - k * a}")
    _require(n > k * m - r, f"end not strictly above the line: need n > k*m - r = {k * m - r}")
    total = Fraction(0)
    for i in range((b + r - 1 - k * a) // (k + 1) + 1):
        ai = a + i
        upper = m + n + r - (k + 1) * ai  # >= m - a + 1 >= 1 inside the range
        term = (
            Fraction(n + r - k * m, upper)
            * binomial(upper, m - a - i)
            * binomial(b + r - 1 - k * ai, i)
        )
        total += -term if i % 2 else term
    return _finish(total)


def count_weak_inv(k: int, r: Rational | int, a: int, b: int, m: int, n: int) -> int:
    """Paths from (a,b) to (m,n) staying on or above y = x/k - r.

    Conditions: k >= 1, k*r integral, 0 <= a <= m,
    max(0, a/k - r) <= b <= n, n >= m/k - r.
    """
    _require(k >= 1, f"need k >= 1, got {k}")
    kr = Fraction(r) * k
    _require(kr.denominator == 1, f"need k*r integral, got k*r = {kr}")
    kr = int(kr)
    _require(0 <= a <= m, f"need 0 <= a <= m, got a={a}, m={m}")
    _require(b >= 0, f"need b >= 0, got {b}")
    _require(k * b >= a - kr, f"start below the line: k*b = {k * b} < a - k*r = {a - kr}")
    _require(b <= n, f"need b <= n, got b={b}, n={n}")
    _require(k * n >= m - kr, f"end below the line: k*n = {k * n} < m - k*r = {m - kr}")
    total = Fraction(0)
    for i in range((k * n + kr - m) // (k + 1) + 1):
        term = (
            Fraction(k * b + kr - a + 1, k * (n - i) + kr - a + 1)
            * binomial((k + 1) * (n - i) - a - b + kr, n - b - i)
            * binomial(k * (n - i) + kr - m, i)
        )
        total += -term if i % 2 else term
    return _finish(total)


def count_strict_inv(k: int, r: Rational | int, a: int, b: int, m: int, n: int) -> int:
    """Paths from (a,b) to (m,n) staying strictly above y = x/k - r.

    Conditions: k >= 1, k*r integral, 0 <= a <= m, 0 <= b <= n with
    k*b + k*r - a > 0 (start strictly above), and k*n + k*r - m > 0.
    """
    _require(k >= 1, f"need k >= 1, got {k}")
    kr = Fraction(r) * k
    _require(kr.denominator == 1, f"need k*r integral, got k*r = {kr}")
    kr = int(kr)
    _require(0 <= a <= m, f"need 0 <= a <= m, got a={a}, m={m}")
    _require(0 <= b <= n, f"need 0 <= b <= n, got b={b}, n={n}")
    _require(k * b + kr - a > 0, f"start not strictly above the line: k*b+k*r-a = {k * b + kr - a}")
    _require(k * n + kr - m > 0, f"end not strictly above the line: k*n+k*r-m = {k * n + kr - m}")
    total = Fraction(0)
    for i in range((k * n + kr - m - 1) // (k + 1) + 1):
        upper = (k + 1) * (n - i) - a - b + kr  # >= n - b + 1 >= 1 inside the range
        term = (
            Fraction(k * b + kr - a, upper)
            * binomial(upper, n - b - i)
            * binomial(k * (n - i) + kr - m - 1, i)
        )
        total += -term if i % 2 else term
    return _finish(total)


def base_case(k: int, a: int, b: int, m: int, n: int) -> int:
    """Single-product count for starts within one slope-run of y = k*x.

    Conditions: k, m >= 1, 0 <= a <= m, 0 <= b <= n, n >= k*m, and
    0 <= b - k*a <= k.  Agrees with count_weak(k, 0, a, b, m, n) there.
    """
    _require(k >= 1 and m >= 1, f"need k, m >= 1, got k={k}, m={m}")
    _require(0 <= a <= m, f"need 0 <= a <= m, got a={a}, m={m}")
    _require(0 <= b <= n, f"need 0 <= b <= n, got b={b}, n={n}")
    _require(n >= k * m, f"need n >= k*m, got n={n}, k*m={k * m}")
    _require(0 <= b - k * a <= k, f"need 0 <= b - k*a <= k, got {b - k * a}")
    return _finish(Fraction(n + 1 - k * m, n + 1 - k * a) * binomial(m + n - (k + 1) * a, m - a))


def ballot(k: int, m: int, n: int) -> int:
    """Generalized ballot count: C(m+n, m) - k*C(m+n, m-1), for n >= k*m."""
    _require(k >= 1, f"need k >= 1, got {k}")
    _require(m >= 0, f"need m >= 0, got {m}")
    _require(n >= k * m, f"need n >= k*m, got n={n}, k*m={k * m}")
    return binomial(m + n, m) - k * binomial(m + n, m - 1)


def fuss_catalan(k: int, m: int) -> int:
    """Order-k Fuss-Catalan number C(km, m)/((k-1)m + 1), k >= 2, m >= 0.

    Equals count_weak(k-1, 0, 0, 0, m, (k-1)*m); order 2 gives the Catalan
    numbers.
    """
    _require(k >= 2, f"need k >= 2, got {k}")
    _require(m >= 0, f"need m >= 0, got {m}")
    return _finish(Fraction(binomial(k * m, m), (k - 1) * m + 1))


@dataclass(frozen=True)
class KoroljukQuery:
    """Walks with m steps (1,1) and n steps (-p,1) from the origin, classified
    against the vertical line x = c."""

    p: int
    c: int
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("p", "c", "m", "n"):
            if getattr(self, name) < 1:
                raise ValidationError(f"KoroljukQuery needs {name} >= 1, got {getattr(self, name)}")

    @property
    def end(self) -> tuple[int, int]:
        return (self.m - self.p * self.n, self.m + self.n)


def koroljuk_literal(q: KoroljukQuery) -> int:
    """Count of the walks that meet x = c, as a sum over abscissae s ≡ c
    (mod p+1) up to c + floor((m+n-c)/(p+1))*(p+1); empty when c > m+n."""
    p, c, m, n = q.p, q.c, q.m, q.n
    total = Fraction(0)
    top = c + ((m + n - c) // (p + 1)) * (p + 1)
    for s in range(c, top + 1):
        if (s - c) % (p + 1):
            continue
        j = (s - c) // (p + 1)
        total += Fraction(c, s) * binomial(s, j) * binomial(m + n - s, n - j)
    return _finish(total)


def koroljuk_reduced(q: KoroljukQuery) -> int:
    """Same count as koroljuk_literal, reindexed over i = (s - c)/(p+1)."""
    p, c, m, n = q.p, q.c, q.m, q.n
    total = Fraction(0)
    for i in range((m + n - c) // (p + 1) + 1):
        total += (
            Fraction(c, c + (p + 1) * i)
            * binomial(c + (p + 1) * i, i)
            * binomial(m + n - c - (p + 1) * i, n - i)
        )
    return _finish(total)


@dataclass(frozen=True)
class NiederhausenQuery:
    """Paths from (0,0) to (m,n) strictly above y = k*(x - d), with k*d integral."""

    k: int
    d: Rational
    m: int
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", Fraction(self.d))
        if self.k < 1:
            raise ValidationError(f"NiederhausenQuery needs k >= 1, got {self.k}")
        if self.n < 1:
            raise ValidationError(f"NiederhausenQuery needs n >= 1, got {self.n}")
        if self.m < 0:
            raise ValidationError(f"NiederhausenQuery needs m >= 0, got {self.m}")
        if (self.k * self.d).denominator != 1:
            raise ValidationError(f"NiederhausenQuery needs k*d integral, got {self.k * self.d}")

    @property
    def kd(self) -> int:
        return int(self.k * self.d)


def niederhausen(q: NiederhausenQuery) -> int:
    """Total binomial count minus the below-line corrections.

    Conditions beyond the query invariants: d >= (k-1)m/k (the stated
    domain; validity outside it is an open question and not guessed at),
    and both endpoints strictly above y = k*(x-d), i.e. k*d >= 1 and
    n > k*m - k*d.  Equals count_strict(k, k*d, 0, 0, m, n).
    """
    k, m, n, kd = q.k, q.m, q.n, q.kd
    _require(
        kd >= (k - 1) * m,
        f"outside the stated domain: need k*d >= (k-1)*m, got {kd} < {(k - 1) * m}",
    )
    _require(kd >= 1, f"origin not strictly above the line: need k*d >= 1, got {kd}")
    _require(n > k * m - kd, f"end not strictly above the line: need n > k*m - k*d = {k * m - kd}")
    total = Fraction(binomial(m + n, m))
    for i in range((kd - 1) // (k + 1) + 1, m + 1):
        total -= (
            Fraction(n - k * m + kd, n - k * i + kd)
            * binomial((k + 1) * i - kd, i)
            * binomial(m - i - 1 + n - k * i + kd, m - i)
        )
    return _finish(total)


@dataclass(frozen=True)
class BohmQuery:
    """Walks with `ups` steps (1,rise) and the forced number of (1,-1) steps
    from altitude start_alt to altitude end_alt, all altitudes kept >= 1."""

    rise: int
    start_alt: int
    end_alt: int
    ups: int

    def __post_init__(self) -> None:
        if self.rise < 1:
            raise ValidationError(f"BohmQuery needs rise >= 1, got {self.rise}")
        if self.start_alt < 1 or self.end_alt < 1:
            raise ValidationError("BohmQuery needs both altitudes >= 1")
        if self.ups < 0:
            raise ValidationError(f"BohmQuery needs ups >= 0, got {self.ups}")
        if self.down_steps < 0:
            raise ValidationError(
                f"altitude balance broken: start + rise*ups - end = {self.down_steps} < 0"
            )

    @property
    def down_steps(self) -> int:
        return self.start_alt + self.rise * self.ups - self.end_alt


def bohm(q: BohmQuery) -> int:
    """Count of the positive-altitude walks of q.

    The alternating sum is truncated at floor((end_alt - 1)/(rise + 1)); the
    later terms would need negative-upper-index binomials and do not belong
    to the count.  Equals count_strict(rise, end_alt, 0, 0, ups,
    start_alt + rise*ups - end_alt).
    """
    t, start, end, ups = q.rise, q.start_alt, q.end_alt, q.ups
    total = Fraction(0)
    for ell in range((end - 1) // (t + 1) + 1):
        denom = start + (t + 1) * (ups - ell)  # >= ups + 1 inside the range
        term = (
            Fraction(start, denom)
            * binomial(denom, ups - ell)
            * binomial(end - t * ell - 1, ell)
        )
        total += -term if ell % 2 else term
    return _finish(total)


def _shift_up(q: PathQuery, s: int) -> PathQuery:
    """Translate a query vertically by s units (same paths, smaller intercept)."""
    line = q.boundary
    shifted = BoundaryLine(line.kind, line.k, line.r - s)
    return PathQuery(q.a, q.b + s, q.m, q.n + s, shifted, q.strictness)


def _shift_right(q: PathQuery, s: int) -> PathQuery:
    """Translate a query horizontally by s units (same paths, larger intercept).

    Moving every abscissa up by s raises the line's value at the image
    points by k*s (integer slope) or s/k (inverse slope); bumping r by the
    same amount restores the original constraint, and k*r stays integral
    for the inverse kind.
    """
    line = q.boundary
    bump = line.k * s if line.kind is SlopeKind.INTEGER else Fraction(s, line.k)
    shifted = BoundaryLine(line.kind, line.k, line.r + bump)
    return PathQuery(q.a + s, q.b, q.m + s, q.n, shifted, q.strictness)


def count(q: PathQuery) -> int:
    """Totalizing wrapper over the four evaluators.

    Returns 0 for queries with no paths (endpoint unreachable or below the
    boundary), snaps non-integral intercepts to their canonical form, and
    translates negative start coordinates into the evaluators' domain.
    Translation preserves the path count, so every boundary-valid query is
    answered.
    """
    if not validate_query(q).ok:
        return 0
    eff = normalize_query(q)
    if eff.a < 0:
        eff = _shift_right(eff, -eff.a)
    if eff.b < 0:
        eff = _shift_up(eff, -eff.b)
    k = eff.boundary.k
    a, b, m, n = eff.a, eff.b, eff.m, eff.n
    if eff.boundary.kind is SlopeKind.INTEGER:
        r = int(eff.boundary.r)
        if eff.strictness is Strictness.WEAK:
            return count_weak(k, r, a, b, m, n)
        return count_strict(k, r, a, b, m, n)
    r = eff.boundary.r
    if eff.strictness is Strictness.WEAK:
        return count_weak_inv(k, r, a, b, m, n)
    return count_strict_inv(k, r, a, b, m, n)
