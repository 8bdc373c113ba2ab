"""Binary quadratic forms of negative discriminant."""
from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, isqrt

import numpy as np
import sympy

from ..constants import CLASS_NUMBER_CACHE_SIZE, DEFAULT_CLASS_NUMBER_BUDGET, FORM_GRID_CHUNK
from ..exceptions import (
    BudgetExceededError,
    InternalConsistencyError,
    InvalidDiscriminantError,
    InvalidParameterError,
    NonFundamentalDiscriminantError,
    RamifiedPrimeError,
)
from ..logging import _LOGGER
from .primes import factor_squarefree, is_prime
from .symbols import sqrt_mod

_BUDGET: ContextVar[int] = ContextVar(
    "class_number_budget", default=DEFAULT_CLASS_NUMBER_BUDGET
)


@contextmanager
def class_number_budget(limit: int) -> Iterator[int]:
    """Cap |D| for class_number calls made inside the context."""
    if limit < 3:
        raise InvalidParameterError(f"class number budget must be >= 3, got {limit}")
    token = _BUDGET.set(limit)
    try:
        yield limit
    finally:
        _BUDGET.reset(token)


@dataclass(frozen=True)
class Discriminant:
    """
    A negative discriminant D = f**2 * d0.

    |  value: negative integer congruent to 0 or 1 mod 4.

    :ivar fundamental: d0, the discriminant of the maximal order.
    :ivar conductor: f >= 1.
    """

    value: int

    def __post_init__(self):
        """Validate the discriminant."""
        if not isinstance(self.value, int) or self.value >= 0:
            raise InvalidDiscriminantError(f"{self.value} is not a negative integer")
        if self.value % 4 not in (0, 1):
            raise InvalidDiscriminantError(f"{self.value} is not 0 or 1 mod 4")

    def __int__(self):
        """Return the discriminant as an integer."""
        return self.value

    def __str__(self):
        """Return a string representation of the discriminant."""
        return str(self.value)

    @cached_property
    def _decomposition(self) -> tuple[int, int]:
        """Return (d0, f)."""
        kernel = -1
        square = 1
        for prime, exp in sympy.factorint(-self.value).items():
            if exp % 2:
                kernel *= prime
            square *= prime ** (exp // 2)
        if kernel % 4 == 1:
            return kernel, square
        # kernel = 2 or 3 mod 4, so 4 | D / kernel
        return 4 * kernel, square // 2

    @property
    def fundamental(self) -> int:
        """Return the fundamental discriminant d0."""
        return self._decomposition[0]

    @property
    def conductor(self) -> int:
        """Return the conductor f."""
        return self._decomposition[1]

    @property
    def is_fundamental(self) -> bool:
        """Return True iff the conductor is 1."""
        return self.conductor == 1


@dataclass(frozen=True, order=True)
class ReducedForm:
    """
    A primitive reduced form a*x**2 + b*x*y + c*y**2.

    Reduced means |b| <= a <= c with b >= 0 when |b| = a or a = c.
    """

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        """Return b**2 - 4ac."""
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        """Return True iff the form satisfies the reduction conditions."""
        if not abs(self.b) <= self.a <= self.c:
            return False
        if self.b < 0 and (self.a in (-self.b, self.c)):
            return False
        return True

    @property
    def is_primitive(self) -> bool:
        """Return True iff gcd(a, b, c) = 1."""
        return gcd(gcd(self.a, self.b), self.c) == 1

    def evaluate(self, x: int, y: int) -> int:
        """Return the value of the form at (x, y)."""
        return self.a * x * x + self.b * x * y + self.c * y * y


@dataclass(frozen=True)
class PrincipalForm:
    """The reduced form of discriminant D representing 1."""

    disc: Discriminant

    @property
    def form(self) -> ReducedForm:
        """Return (1, 0, |D|/4) or (1, 1, (1 + |D|)/4)."""
        value = -self.disc.value
        if value % 4 == 0:
            return ReducedForm(1, 0, value // 4)
        return ReducedForm(1, 1, (1 + value) // 4)

    def evaluate(self, x: int, y: int) -> int:
        """Return the value of the principal form at (x, y)."""
        return self.form.evaluate(x, y)


def _as_discriminant(disc: Discriminant | int) -> Discriminant:
    """Coerce an integer to a Discriminant."""
    return disc if isinstance(disc, Discriminant) else Discriminant(disc)


def _count_reduced_forms(n: int) -> int:
    """
    Count primitive reduced forms of discriminant -n.

    Enumerates the (b, a) grid with 0 <= b <= a <= sqrt(n/3) in row chunks,
    reading c from a*c = (b**2 + n)/4. Forms with b > 0 and b != a != c come
    in pairs (a, +-b, c).
    """
    bound = isqrt(n // 3)
    b_all = np.arange(n % 2, bound + 1, 2, dtype=np.int64)
    a_row = np.arange(1, bound + 1, dtype=np.int64)[None, :]
    if not a_row.size:
        return 0
    rows = max(1, FORM_GRID_CHUNK // a_row.size)
    total = 0
    for start in range(0, b_all.size, rows):
        b_col = b_all[start : start + rows][:, None]
        q_col = (b_col * b_col + n) // 4
        valid = (a_row >= b_col) & (q_col % a_row == 0)
        c_grid = q_col // a_row
        valid &= c_grid >= a_row
        valid &= np.gcd(np.gcd(a_row, b_col), c_grid) == 1
        paired = valid & (b_col != 0) & (a_row != b_col) & (a_row != c_grid)
        total += int(valid.sum()) + int(paired.sum())
    return total


@lru_cache(maxsize=CLASS_NUMBER_CACHE_SIZE)
def _cached_class_number(n: int) -> int:
    """Return the memoized form count for -n."""
    count = _count_reduced_forms(n)
    _LOGGER.debug("h(-%s) = %s", n, count)
    return count


def class_number(disc: Discriminant | int) -> int:
    """
    Return h(D), the number of primitive reduced forms of discriminant D.

    Raises BudgetExceededError when |D| exceeds the active budget.
    """
    disc = _as_discriminant(disc)
    size = -disc.value
    if size > _BUDGET.get():
        raise BudgetExceededError(
            f"|D| = {size} exceeds the class number budget {_BUDGET.get()}"
        )
    return _cached_class_number(size)


def reduced_forms(disc: Discriminant | int) -> list[ReducedForm]:
    """Return the primitive reduced forms of D in ascending order."""
    disc = _as_discriminant(disc)
    n = -disc.value
    forms = []
    for b in range(n % 2, isqrt(n // 3) + 1, 2):
        q = (b * b + n) // 4
        for a in range(max(b, 1), isqrt(q) + 1):
            if q % a:
                continue
            for sign in (1, -1) if 0 < b < a < q // a else (1,):
                form = ReducedForm(a, sign * b, q // a)
                if form.is_primitive:
                    forms.append(form)
    return sorted(forms)


def fundamental_discriminant(n: int) -> int:
    """Return the discriminant of Q(sqrt(-n)) for squarefree n >= 1."""
    factor_squarefree(n)
    return -n if n % 4 == 3 else -4 * n


def field_class_number(n: int) -> int:
    """Return h(Q(sqrt(-n))) for squarefree n >= 1."""
    return class_number(fundamental_discriminant(n))


def _check_representation_input(p: int, disc: Discriminant) -> None:
    """Validate the arguments of the representability tests."""
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    if not disc.is_fundamental:
        raise NonFundamentalDiscriminantError(f"{disc} is not fundamental")
    if (2 * disc.value) % p == 0:
        raise RamifiedPrimeError(f"{p} divides 2 * {disc}")


def _principal_witness(disc: Discriminant, big_x: int, y: int) -> tuple[int, int]:
    """Convert a solution of X**2 + |D| Y**2 = 4p to principal form coordinates."""
    if disc.value % 4 == 0:
        return big_x // 2, y
    return (big_x - y) // 2, y


def represented_by_principal_form(
    p: int, disc: Discriminant | int
) -> tuple[bool, tuple[int, int] | None]:
    """
    Decide whether the principal form of a fundamental D represents p.

    Runs Cornacchia's algorithm on X**2 + |D| Y**2 = 4p, seeded by a square
    root of D modulo p. Returns (True, (x, y)) with principal_form(x, y) = p,
    or (False, None).

    Raises RamifiedPrimeError when p divides 2D.
    """
    disc = _as_discriminant(disc)
    _check_representation_input(p, disc)
    size = -disc.value

    root = sqrt_mod(disc.value, p)
    if root is None:
        return False, None
    if (root - disc.value) % 2:
        root = p - root

    four_p = 4 * p
    a, b = 2 * p, root
    limit = isqrt(four_p)
    while b > limit:
        a, b = b, a % b
    rest = four_p - b * b
    if rest <= 0 or rest % size:
        return False, None
    y = isqrt(rest // size)
    if y * y * size != rest:
        return False, None

    witness = _principal_witness(disc, b, y)
    if PrincipalForm(disc).evaluate(*witness) != p:
        raise InternalConsistencyError(f"Cornacchia witness {witness} fails for {p}")
    return True, witness


def represented_by_principal_form_exhaustive(
    p: int, disc: Discriminant | int
) -> tuple[bool, tuple[int, int] | None]:
    """Decide principal-form representability by searching y <= sqrt(4p/|D|)."""
    disc = _as_discriminant(disc)
    _check_representation_input(p, disc)
    size = -disc.value
    for y in range(isqrt(4 * p // size) + 1):
        rest = 4 * p - size * y * y
        big_x = isqrt(rest)
        if big_x * big_x == rest and (big_x - disc.value * y) % 2 == 0:
            return True, _principal_witness(disc, big_x, y)
    return False, None
