"""Curve and involution pairs (C, iota) handled by the twist engine."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..curves import (
    ShimuraDescriptor,
    al_fixed_count,
    klein_quotient_genus,
    wn_fixed_count,
    x0_genus,
    x0_plus_genus,
    xd_plus_genus,
)
from ..exceptions import InvalidParameterError
from ..ntheory import factor_squarefree, fundamental_discriminant


class CurveKind(Enum):
    """Supported (curve, involution) families."""

    X0N = "X0N"
    XDPLUS = "XDPlus"


@dataclass(frozen=True)
class CurveDescriptor:
    """
    Either (X0(N), w_N) or (X^{D+}, w_q).

    Build instances with CurveDescriptor.x0 or CurveDescriptor.xd_plus.
    """

    kind: CurveKind
    level: int | None = None
    shimura: ShimuraDescriptor | None = None

    def __post_init__(self):
        """Validate that exactly the fields of kind are populated."""
        if self.kind is CurveKind.X0N:
            if self.level is None or self.shimura is not None:
                raise InvalidParameterError("X0N descriptors carry only N")
            if self.level < 2:
                raise InvalidParameterError(f"X0N needs N >= 2, got {self.level}")
            factor_squarefree(self.level)
        elif self.shimura is None or self.level is not None or self.shimura.q is None:
            raise InvalidParameterError("XDPlus descriptors carry D with a designated q")

    @classmethod
    def x0(cls, level: int) -> CurveDescriptor:
        """Return the descriptor of (X0(N), w_N)."""
        return cls(CurveKind.X0N, level=level)

    @classmethod
    def xd_plus(cls, disc: ShimuraDescriptor | int, q: int | None = None) -> CurveDescriptor:
        """Return the descriptor of (X^{D+}, w_q)."""
        if not isinstance(disc, ShimuraDescriptor):
            disc = ShimuraDescriptor(disc, q)
        elif q is not None:
            disc = disc.with_q(q)
        return cls(CurveKind.XDPLUS, shimura=disc)

    @property
    def cm_level(self) -> int:
        """Return N or q, the level whose CM field carries the fixed points."""
        return self.level if self.kind is CurveKind.X0N else self.shimura.q

    @property
    def cm_discriminant(self) -> int:
        """Return the fundamental discriminant of Q(sqrt(-cm_level))."""
        return fundamental_discriminant(self.cm_level)

    @property
    def bad_primes(self) -> tuple[int, ...]:
        """Return the primes of bad reduction, the divisors of N or D."""
        if self.kind is CurveKind.X0N:
            return tuple(factor_squarefree(self.level))
        return self.shimura.factors

    def genus(self) -> int:
        """Return the genus of C, equal to that of every twist."""
        if self.kind is CurveKind.X0N:
            return x0_genus(self.level)
        return xd_plus_genus(self.shimura)

    def quotient_genus(self) -> int:
        """Return the genus of C / iota."""
        if self.kind is CurveKind.X0N:
            return x0_plus_genus(self.level)
        return klein_quotient_genus(self.shimura)

    def fixed_points(self) -> int:
        """Return the number of geometric fixed points of the involution."""
        if self.kind is CurveKind.X0N:
            return wn_fixed_count(self.level)
        return al_fixed_count(self.shimura, self.shimura.q)

    def __str__(self):
        """Return a string representation of the descriptor."""
        if self.kind is CurveKind.X0N:
            return f"X0({self.level}) with w_{self.level}"
        return f"X^{{{self.shimura.D}+}} with w_{self.shimura.q}"

    def to_dict(self) -> dict:
        """Return the descriptor as plain data."""
        if self.kind is CurveKind.X0N:
            return {"kind": self.kind.value, "N": self.level}
        return {"kind": self.kind.value, "D": self.shimura.D, "q": self.shimura.q}
