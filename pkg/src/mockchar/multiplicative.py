"""Completely multiplicative functions valued in zero or roots of unity.

Values are kept exact: a value is either 0 or exp(2*pi*i*k/m) stored as the
reduced angle fraction k/m.  On top of the value type sit arithmetic
functions (evaluatable maps Z -> values), Dirichlet characters with
validated tables, the paperfolding sequence, the period-reduction algorithm
for purely periodic completely multiplicative functions, and the
build/decompose pair for the structured form
``f(n) = xi**v_p(n) * chi(n / p**v_p(n))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

from .kronecker import kronecker


class CharacterError(ValueError):
    """Base class for malformed character data."""


class NotMultiplicativeError(CharacterError):
    def __init__(self, witness: tuple[int, int], message: str | None = None):
        self.witness = witness
        super().__init__(message or f"multiplicativity fails at pair {witness}")


class WrongZeroSetError(CharacterError):
    def __init__(self, witness: int, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"zero set disagrees with the modulus at n = {witness}")


class AllZeroError(CharacterError):
    """The table vanishes beyond n = 0; no character can reproduce it."""


class NoCharacterFoundError(CharacterError):
    """No modulus p**r with r <= r_max restricts the function to a character."""


class EvaluationDomainError(ValueError):
    """An arithmetic function backed by finite data was evaluated outside it."""


_HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class UnitValue:
    """Zero (angle None) or the root of unity exp(2*pi*i*angle), 0 <= angle < 1."""

    angle: Fraction | None = None

    @property
    def is_zero(self) -> bool:
        return self.angle is None

    @staticmethod
    def from_symbol(s: int) -> "UnitValue":
        if s == 0:
            return ZERO
        if s == 1:
            return ONE
        if s == -1:
            return MINUS_ONE
        raise ValueError(f"{s} is not in {{-1, 0, +1}}")

    @staticmethod
    def root(k: int, m: int) -> "UnitValue":
        """exp(2*pi*i*k/m); the angle is reduced and normalized into [0, 1)."""
        if m < 1:
            raise ValueError("order m must be >= 1")
        a = Fraction(k, m) % 1
        if a == 0:
            return ONE
        if a == _HALF:
            return MINUS_ONE
        return UnitValue(a)

    def __mul__(self, other: "UnitValue") -> "UnitValue":
        if self.angle is None or other.angle is None:
            return ZERO
        a = self.angle + other.angle
        if a >= 1:
            a -= 1
        if a == 0:
            return ONE
        if a == _HALF:
            return MINUS_ONE
        return UnitValue(a)

    def __pow__(self, e: int) -> "UnitValue":
        if self.angle is None:
            if e > 0:
                return ZERO
            if e == 0:
                return ONE  # empty product
            raise ZeroDivisionError("negative power of zero")
        return UnitValue.root((self.angle * e).numerator, (self.angle * e).denominator)

    def conjugate(self) -> "UnitValue":
        if self.angle is None or self.angle == 0:
            return self
        return UnitValue(1 - self.angle)

    def symbol(self) -> int:
        """The value as an integer in {-1, 0, +1}; raises for other roots."""
        if self.angle is None:
            return 0
        if self.angle == 0:
            return 1
        if self.angle == _HALF:
            return -1
        raise ValueError(f"{self} is not a real symbol")

    def real_exact(self) -> Fraction | None:
        """Exact real part when it is rational (orders 1, 2, 3, 4, 6); else None."""
        if self.angle is None:
            return Fraction(0)
        m = self.angle.denominator
        if m == 1:
            return Fraction(1)
        if m == 2:
            return Fraction(-1)
        if m == 3:
            return Fraction(-1, 2)
        if m == 4:
            return Fraction(0)
        if m == 6:
            return _HALF
        return None

    def __str__(self) -> str:
        if self.angle is None:
            return "0"
        if self.angle == 0:
            return "1"
        if self.angle == _HALF:
            return "-1"
        return f"e({self.angle.numerator}/{self.angle.denominator})"


ZERO = UnitValue(None)
ONE = UnitValue(Fraction(0))
MINUS_ONE = UnitValue(_HALF)

_SYMBOLS = (ZERO, ONE, MINUS_ONE)  # index -1 wraps to MINUS_ONE


@dataclass(frozen=True)
class ArithmeticFunction:
    """A deterministic evaluatable map from the integers to unit values."""

    fn: Callable[[int], UnitValue]
    label: str = ""

    def __call__(self, n: int) -> UnitValue:
        return self.fn(n)

    def __repr__(self) -> str:
        return f"ArithmeticFunction({self.label or self.fn!r})"


def paperfolding(n: int) -> UnitValue:
    """Regular paperfolding sign: 0 at n = 0, v(-n) = -v(n), v(2n) = v(n),
    v(2n+1) = (-1)**n.  Equals the Kronecker symbol (-1|n) for every n."""
    if n == 0:
        return ZERO
    neg = n < 0
    m = -n if neg else n
    m >>= (m & -m).bit_length() - 1
    plus = (m & 3) == 1
    return MINUS_ONE if plus == neg else ONE


PAPERFOLDING = ArithmeticFunction(paperfolding, "paperfold")


def kronecker_function(a: int) -> ArithmeticFunction:
    """The map n -> (a|n) as an arithmetic function."""

    def ev(n: int) -> UnitValue:
        return _SYMBOLS[kronecker(a, n)]

    return ArithmeticFunction(ev, f"kron({a})")


def pointwise_product(f: ArithmeticFunction, g: ArithmeticFunction) -> ArithmeticFunction:
    """(fg)(n) = f(n) g(n); preserves complete multiplicativity."""

    def ev(n: int) -> UnitValue:
        return f(n) * g(n)

    return ArithmeticFunction(ev, f"{f.label or 'f'}*{g.label or 'g'}")


def function_from_entries(
    entries: Mapping[int, UnitValue] | Iterable[tuple[int, UnitValue]],
    label: str = "seq",
) -> ArithmeticFunction:
    """Arithmetic function backed by finite data; outside it evaluation raises
    :class:`EvaluationDomainError` so callers can fall back honestly."""
    table = dict(entries)

    def ev(n: int) -> UnitValue:
        try:
            return table[n]
        except KeyError:
            raise EvaluationDomainError(f"{label} has no value at n = {n}") from None

    return ArithmeticFunction(ev, label)


@dataclass(frozen=True)
class DirichletCharacter:
    """Dirichlet character mod q as a validated q-entry value table.

    chi(n) = table[n % q]; the table vanishes exactly at residues sharing a
    factor with q, takes roots of unity elsewhere, and is completely
    multiplicative.  Construct through :func:`character_from_table`.
    """

    modulus: int
    table: tuple[UnitValue, ...]

    def __call__(self, n: int) -> UnitValue:
        return self.table[n % self.modulus]

    def as_function(self) -> ArithmeticFunction:
        return ArithmeticFunction(self.__call__, f"chi mod {self.modulus}")

    @property
    def is_trivial(self) -> bool:
        return self.modulus == 1


def character_from_table(q: int, table: Sequence[UnitValue]) -> DirichletCharacter:
    """Validate a candidate value table and return the character it defines.

    Raises WrongZeroSetError when the zero set is not exactly the non-units
    mod q, and NotMultiplicativeError (with a witness pair) when the table
    is not completely multiplicative.
    """
    if q < 1:
        raise ValueError("modulus must be >= 1")
    tab = tuple(table)
    if len(tab) != q:
        raise ValueError(f"table must have length {q}, got {len(tab)}")
    for r in range(q):
        if tab[r].is_zero != (gcd(r, q) != 1):
            raise WrongZeroSetError(r)
    one = tab[1 % q]
    if one != ONE:
        raise NotMultiplicativeError((1, 1), f"chi(1) = {one} != 1")
    for a in range(q):
        fa = tab[a]
        for b in range(a, q):
            if tab[(a * b) % q] != fa * tab[b]:
                raise NotMultiplicativeError((a, b))
    return DirichletCharacter(q, tab)


def character_from_symbols(q: int, symbols: Sequence[int]) -> DirichletCharacter:
    """Convenience wrapper for real characters given as -1/0/+1 entries."""
    return character_from_table(q, [UnitValue.from_symbol(s) for s in symbols])


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def reduce_periodic_cm(q: int, table: Sequence[UnitValue]) -> DirichletCharacter:
    """Minimal Dirichlet character reproducing a purely periodic completely
    multiplicative value table of period q.

    Repeatedly divides the period: with d the largest divisor of q whose
    table value is nonzero, cancellation of chi(d) shows the function is
    q/d-periodic, so the table can be truncated.  When the scan bottoms out
    at d = 1 the remaining table is reduced to its least period and handed
    to the validating constructor.
    """
    if q < 1:
        raise ValueError("period must be >= 1")
    source = tuple(table)
    if len(source) != q:
        raise ValueError(f"table must have length {q}, got {len(source)}")
    for a in range(q):
        fa = source[a]
        for b in range(a, q):
            if source[(a * b) % q] != fa * source[b]:
                raise NotMultiplicativeError((a, b))
    if all(v.is_zero for v in source[1:]) and (q > 1 or source[0].is_zero):
        raise AllZeroError("table vanishes beyond n = 0")
    tab = source
    while True:
        d = max(div for div in _divisors(q) if not tab[div % q].is_zero)
        if d == 1:
            break
        q //= d
        tab = tab[:q]
    for t in _divisors(q):
        if all(tab[i] == tab[i % t] for i in range(q)):
            q, tab = t, tab[:t]
            break
    chi = character_from_table(q, tab)
    # the reduction is only sound for genuinely periodic data; re-checking
    # the periodic extension against the input keeps bad input loud
    for i in range(1, len(source)):
        if chi(i) != source[i]:
            raise NotMultiplicativeError(
                (i, q), f"reduced character disagrees with the table at n = {i}"
            )
    return chi


def kronecker_character(a: int) -> DirichletCharacter:
    """The Kronecker symbol (a|.) as a character of minimal modulus.

    Defined for a with a % 4 != 3, where the symbol is purely periodic with
    period 4|a|; the table is reduced to the least modulus.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    if a % 4 == 3:
        raise ValueError(f"({a}|.) is not periodic, hence not a character")
    period = 4 * abs(a)
    # residue 0 is sampled at n = period: (a|0) = 0 regardless of the
    # character value there, which only differs for the trivial case a = 1
    tab = [_SYMBOLS[kronecker(a, period)]]
    tab += [_SYMBOLS[kronecker(a, r)] for r in range(1, period)]
    return reduce_periodic_cm(period, tab)


def build_structured(
    xi: UnitValue,
    p: int,
    chi: DirichletCharacter,
    value_at_minus_one: UnitValue = ONE,
) -> ArithmeticFunction:
    """The completely multiplicative function xi**v_p(n) * chi(n / p**v_p(n)).

    chi must have modulus a power of p.  The function is nonvanishing on the
    positive integers, sends 0 to 0, and extends to negative arguments by
    f(-n) = f(-1) f(n) with the supplied f(-1) (defaults to 1).
    """
    if xi.is_zero:
        raise ValueError("xi must be a root of unity, not zero")
    q = chi.modulus
    while q % p == 0:
        q //= p
    if q != 1:
        raise ValueError(f"modulus {chi.modulus} is not a power of {p}")

    def ev(n: int) -> UnitValue:
        if n == 0:
            return ZERO
        sign = ONE
        if n < 0:
            n = -n
            sign = value_at_minus_one
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return sign * xi**v * chi(n)

    return ArithmeticFunction(ev, f"structured(xi={xi}, p={p}, chi mod {chi.modulus})")


def decompose_structured(
    f: ArithmeticFunction, p: int, r_max: int
) -> tuple[UnitValue, DirichletCharacter]:
    """Recover (xi, chi) with f(n) = xi**v_p(n) * chi(n / p**v_p(n)) on Z+.

    Searches r = 1..r_max for the least prime-power modulus p**r whose
    residue table matches f on a window of about 4 * p**r_max integers
    coprime to p; raises NoCharacterFoundError when none is consistent.
    The recovered chi has the least consistent modulus, so a character
    induced from a smaller one decomposes to the smaller modulus.
    """
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    window = 4 * p**r_max
    xi = f(p)
    if xi.is_zero:
        raise NoCharacterFoundError(f"f({p}) = 0; f vanishes at the base prime")
    for r in range(1, r_max + 1):
        q = p**r
        try:
            chi = character_from_table(q, [ZERO if n % p == 0 else f(n) for n in range(q)])
        except CharacterError:
            continue
        if all(
            f(n) == chi(n) for n in range(1, window + 1) if n % p != 0
        ):
            rebuilt = build_structured(xi, p, chi)
            if all(f(n) == rebuilt(n) for n in range(1, window + 1)):
                return xi, chi
    raise NoCharacterFoundError(
        f"no character mod {p}**r with r <= {r_max} matches f off multiples of {p}"
    )
