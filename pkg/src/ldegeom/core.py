"""Domain vocabulary for the single equation a.x = b.y over nonnegative integers.

Integers are Python ints (arbitrary precision) and rationals are
:class:`fractions.Fraction`, so nothing here can overflow or round.
User-facing indices (generator and pivot positions) are 1-based; tuples
and matrices are indexed from 0 as usual.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Integral

from .errors import (
    DimensionMismatch,
    EmptySide,
    IndexOutOfRange,
    NegativeEntry,
    NonPositiveCoefficient,
    NotASolution,
    ParseError,
)

#: Single knob for every enumeration cap in the package.
DEFAULT_MAX_NODES = 10_000_000


def _int_tuple(values, name):
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, Integral):
            raise ParseError(f"{name} must contain integers, got {v!r}")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class Instance:
    """Coefficient vectors of ``a_1 x_1 + ... + a_n x_n = b_1 y_1 + ... + b_m y_m``."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", _int_tuple(self.a, "a"))
        object.__setattr__(self, "b", _int_tuple(self.b, "b"))
        if not self.a or not self.b:
            raise EmptySide("both sides of the equation need at least one coefficient")
        for name, vec in (("a", self.a), ("b", self.b)):
            for k, v in enumerate(vec, 1):
                if v <= 0:
                    raise NonPositiveCoefficient(f"{name}_{k} = {v} is not positive")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def m(self) -> int:
        return len(self.b)

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}


@dataclass(frozen=True, order=True)
class Solution:
    """A pair ``(x, y)`` of nonnegative integer vectors.

    The equation itself is checked against an :class:`Instance` by
    :func:`is_solution`; the zero pair is a legal value. Ordering is
    lexicographic on the concatenation ``x + y``.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", _int_tuple(self.x, "x"))
        object.__setattr__(self, "y", _int_tuple(self.y, "y"))
        if any(v < 0 for v in self.x + self.y):
            raise NegativeEntry("solution entries must be nonnegative")

    @classmethod
    def from_flat(cls, flat, n):
        return cls(tuple(flat[:n]), tuple(flat[n:]))

    @property
    def flat(self) -> tuple[int, ...]:
        return self.x + self.y

    @property
    def norm_x(self) -> int:
        return sum(self.x)

    @property
    def norm_y(self) -> int:
        return sum(self.y)

    @property
    def supp_x(self) -> frozenset[int]:
        """0-based indices i with x_i > 0."""
        return frozenset(i for i, v in enumerate(self.x) if v)

    @property
    def supp_y(self) -> frozenset[int]:
        return frozenset(j for j, v in enumerate(self.y) if v)

    def is_zero(self) -> bool:
        return not any(self.x) and not any(self.y)

    def scale(self, k: int) -> "Solution":
        return Solution(tuple(k * v for v in self.x), tuple(k * v for v in self.y))

    def __add__(self, other):
        return Solution(
            tuple(p + q for p, q in zip(self.x, other.x)),
            tuple(p + q for p, q in zip(self.y, other.y)),
        )

    def __sub__(self, other):
        return Solution(
            tuple(p - q for p, q in zip(self.x, other.x)),
            tuple(p - q for p, q in zip(self.y, other.y)),
        )

    def below(self, other) -> bool:
        """Componentwise ``self <= other`` (``<`` and friends stay lexicographic)."""
        return all(p <= q for p, q in zip(self.flat, other.flat))

    def to_json(self) -> dict:
        return {"x": list(self.x), "y": list(self.y)}

    def __str__(self):
        return f"(({','.join(map(str, self.x))}),({','.join(map(str, self.y))}))"


@dataclass(frozen=True)
class Generator:
    """The solution ``g_ij`` with ``x_i = b_j``, ``y_j = a_i``; ``i, j`` are 1-based."""

    i: int
    j: int
    vector: Solution
    d: int

    @property
    def is_minimal(self) -> bool:
        return self.d == 1

    @property
    def minimal(self) -> Solution:
        """``(1/d) g_ij``, the minimal solution on the same ray."""
        return Solution(
            tuple(v // self.d for v in self.vector.x),
            tuple(v // self.d for v in self.vector.y),
        )


def make_instance(a, b) -> Instance:
    return Instance(tuple(a), tuple(b))


def make_solution(inst: Instance, x, y) -> Solution:
    """Build a :class:`Solution` and check it satisfies ``inst``."""
    s = Solution(tuple(x), tuple(y))
    if not is_solution(inst, s.x, s.y):
        raise NotASolution(f"{s} does not satisfy a.x = b.y")
    return s


def dot(u, v) -> int:
    return sum(p * q for p, q in zip(u, v))


def check_dims(inst: Instance, x, y):
    if len(x) != inst.n or len(y) != inst.m:
        raise DimensionMismatch(
            f"expected |x| = {inst.n}, |y| = {inst.m}; got {len(x)}, {len(y)}"
        )


def is_solution(inst: Instance, x, y) -> bool:
    check_dims(inst, x, y)
    return dot(inst.a, x) == dot(inst.b, y)


def generator(inst: Instance, i: int, j: int) -> Generator:
    if not (1 <= i <= inst.n and 1 <= j <= inst.m):
        raise IndexOutOfRange(f"generator ({i},{j}) outside 1..{inst.n} x 1..{inst.m}")
    ai, bj = inst.a[i - 1], inst.b[j - 1]
    x = [0] * inst.n
    y = [0] * inst.m
    x[i - 1] = bj
    y[j - 1] = ai
    return Generator(i, j, Solution(tuple(x), tuple(y)), gcd(ai, bj))


def generators(inst: Instance) -> list[Generator]:
    """All ``g_ij`` in row-major (i, j) order."""
    return [generator(inst, i, j) for i in range(1, inst.n + 1) for j in range(1, inst.m + 1)]


# --- exact rationals -------------------------------------------------------

def format_rational(q) -> str:
    """``"p/q"`` in lowest terms; integers (including 0) print without a denominator."""
    return str(Fraction(q))


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, Integral):
        return Fraction(int(text))
    if not isinstance(text, str):
        raise ParseError(f"rationals are serialized as strings, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc
    if "." in text or "e" in text.lower():
        raise ParseError(f"decimal notation is not exact: {text!r}")
    return value


def solution_from_json(obj) -> Solution:
    if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
        raise ParseError("solution objects need 'x' and 'y'")
    if not isinstance(obj["x"], list) or not isinstance(obj["y"], list):
        raise ParseError("'x' and 'y' must be arrays")
    return Solution(tuple(obj["x"]), tuple(obj["y"]))


def instance_from_json(obj) -> Instance:
    if not isinstance(obj, dict):
        raise ParseError("instance must be a JSON object")
    for key in ("a", "b"):
        if key not in obj:
            raise ParseError(f"instance is missing '{key}'")
        if not isinstance(obj[key], list):
            raise ParseError(f"'{key}' must be an array of integers")
    return make_instance(obj["a"], obj["b"])
