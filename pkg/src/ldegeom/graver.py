"""Graver basis of a single row ``alpha`` via its orthant-wise Hilbert bases.

Inside the orthant with signs ``tau``, ``alpha . v = 0`` becomes the
nonnegative equation ``sum_{tau_i alpha_i > 0} |alpha_i| z_i =
sum_{tau_i alpha_i < 0} |alpha_i| z_i`` with ``v_i = tau_i z_i``; the
Graver basis is the union of those Hilbert bases, zero removed.
Coordinates with ``alpha_i = 0`` are split off: they contribute ``+-e_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .core import Instance, Solution
from .decompose import decompose
from .errors import InvariantViolation, ParseError, ValidationError
from .hilbert import hilbert_basis


@dataclass(frozen=True)
class Orientation:
    tau: tuple[int, ...]

    def __post_init__(self):
        if any(t not in (-1, 1) for t in self.tau):
            raise ValidationError("orientation entries must be -1 or +1")

    def __neg__(self):
        return Orientation(tuple(-t for t in self.tau))

    def key(self) -> str:
        return ",".join("+" if t > 0 else "-" for t in self.tau)

    def contains(self, v) -> bool:
        return all(t * c >= 0 for t, c in zip(self.tau, v))

    @classmethod
    def from_key(cls, key):
        try:
            return cls(tuple({"+": 1, "-": -1}[c] for c in key.split(",")))
        except KeyError as exc:
            raise ParseError(f"bad orientation key {key!r}") from exc


@dataclass(frozen=True)
class OrthantInstance:
    """The nonnegative equation for one orthant.

    ``x_pos[p]`` / ``y_pos[q]`` are the 0-based coordinates of ``alpha``
    behind the instance's ``x_p`` / ``y_q``. ``instance`` is None when one
    side is empty (only the zero vector lives in that orthant).
    """

    orientation: Orientation
    instance: Instance | None
    x_pos: tuple[int, ...]
    y_pos: tuple[int, ...]
    zero_pos: tuple[int, ...]

    @property
    def degenerate(self) -> bool:
        return self.instance is None

    def to_vector(self, s: Solution) -> tuple[int, ...]:
        k = len(self.orientation.tau)
        v = [0] * k
        for p, c in enumerate(self.x_pos):
            v[c] = self.orientation.tau[c] * s.x[p]
        for q, c in enumerate(self.y_pos):
            v[c] = self.orientation.tau[c] * s.y[q]
        return tuple(v)

    def from_vector(self, v) -> Solution:
        tau = self.orientation.tau
        return Solution(
            tuple(tau[c] * v[c] for c in self.x_pos),
            tuple(tau[c] * v[c] for c in self.y_pos),
        )


def _check_alpha(alpha):
    alpha = tuple(int(v) for v in alpha)
    if not alpha:
        raise ValidationError("alpha needs at least one entry")
    return alpha


def orthant_instance(alpha, tau: Orientation) -> OrthantInstance:
    alpha = _check_alpha(alpha)
    if len(tau.tau) != len(alpha):
        raise ValidationError("orientation length differs from alpha")
    signed = [t * c for t, c in zip(tau.tau, alpha)]
    x_pos = tuple(i for i, v in enumerate(signed) if v > 0)
    y_pos = tuple(i for i, v in enumerate(signed) if v < 0)
    zero_pos = tuple(i for i, v in enumerate(signed) if v == 0)
    inst = None
    if x_pos and y_pos:
        inst = Instance(tuple(abs(alpha[i]) for i in x_pos), tuple(abs(alpha[i]) for i in y_pos))
    return OrthantInstance(tau, inst, x_pos, y_pos, zero_pos)


def orientation_pairs(k: int) -> list[Orientation]:
    """One representative of each pair ``+-tau``: those with ``tau_1 = +1``."""
    return [Orientation((1,) + rest) for rest in product((1, -1), repeat=k - 1)]


def orientation_for(v) -> Orientation:
    """An orthant containing ``v``; zero coordinates get ``+1``."""
    return Orientation(tuple(-1 if c < 0 else 1 for c in v))


def equation_text(orth: OrthantInstance, alpha) -> str:
    """E.g. ``z1+2z2=3z3``; a one-sided orthant reads ``z1+2z2+3z3=0``."""
    def side(pos):
        return "+".join(("" if abs(alpha[c]) == 1 else str(abs(alpha[c]))) + f"z{c + 1}" for c in pos)

    if orth.degenerate:
        return side(orth.x_pos + orth.y_pos if orth.x_pos else orth.y_pos) + "=0"
    return side(orth.x_pos) + "=" + side(orth.y_pos)


def graver_by_orthant(alpha, max_nodes=None) -> dict[Orientation, list[tuple[int, ...]]]:
    """Sign-mapped Hilbert basis of every orthant (all ``2^k`` orientations)."""
    alpha = _check_alpha(alpha)
    k = len(alpha)
    zero = [i for i, c in enumerate(alpha) if c == 0]
    out = {}
    for tau in orientation_pairs(k):
        orth = orthant_instance(alpha, tau)
        units = [tuple(tau.tau[i] * int(c == i) for c in range(k)) for i in zero]
        vecs = [] if orth.degenerate else [orth.to_vector(s) for s in hilbert_basis(orth.instance, max_nodes)]
        vecs = sorted(set(vecs + units))
        out[tau] = vecs
        out[-tau] = sorted(tuple(-c for c in v) for v in vecs)
    return out


def graver_basis(alpha, max_nodes=None) -> list[tuple[int, ...]]:
    """The Graver basis of the 1 x k matrix ``alpha``, sorted; closed under negation."""
    found = set()
    for vecs in graver_by_orthant(alpha, max_nodes).values():
        found.update(vecs)
    return sorted(found)


def f_set(alpha, tau: Orientation) -> list[tuple[int, ...]]:
    """``{0}`` plus ``tau_i|alpha_j|e_i + tau_j|alpha_i|e_j`` over sign-opposed pairs."""
    alpha = _check_alpha(alpha)
    k = len(alpha)
    out = [tuple([0] * k)]
    for i in range(k):
        for j in range(i + 1, k):
            if (tau.tau[i] * alpha[i]) * (tau.tau[j] * alpha[j]) < 0:
                v = [0] * k
                v[i] = tau.tau[i] * abs(alpha[j])
                v[j] = tau.tau[j] * abs(alpha[i])
                out.append(tuple(v))
    return out


def f_sets(alpha):
    """``(per_orientation, union)``; ``per_orientation`` covers all ``2^k`` orientations."""
    alpha = _check_alpha(alpha)
    per = {}
    for tau in orientation_pairs(len(alpha)):
        per[tau] = f_set(alpha, tau)
        per[-tau] = f_set(alpha, -tau)
    union = sorted({v for vecs in per.values() for v in vecs})
    return per, union


@dataclass(frozen=True)
class ContainmentCertificate:
    element: tuple[int, ...]
    orientation: Orientation | None
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]  # (F-vector, weight)

    @property
    def covered(self) -> bool:
        return self.orientation is not None

    @property
    def total(self) -> Fraction:
        return sum((w for _, w in self.terms), Fraction(0))

    def combination(self) -> tuple[Fraction, ...]:
        k = len(self.element)
        return tuple(sum((w * v[c] for v, w in self.terms), Fraction(0)) for c in range(k))


def containment_certificate(alpha, v, max_nodes=None) -> ContainmentCertificate:
    """Write the Graver element ``v`` as a convex combination of ``F^(tau)``, tau its orthant.

    A unit vector on a zero coefficient of ``alpha`` has no such combination;
    it comes back with ``orientation=None`` and no terms.
    """
    alpha = _check_alpha(alpha)
    tau = orientation_for(v)
    orth = orthant_instance(alpha, tau)
    if any(v[c] for c in orth.zero_pos) or orth.degenerate:
        return ContainmentCertificate(tuple(v), None, ())
    s = orth.from_vector(v)
    cert = decompose(orth.instance, s, max_nodes=max_nodes)
    terms = []
    for i, j, g, w in cert.used_generators(orth.instance):
        terms.append((orth.to_vector(g.vector), w))
    out = ContainmentCertificate(tuple(v), tau, tuple(terms))
    allowed = set(f_set(alpha, tau))
    if (
        out.combination() != tuple(map(Fraction, v))
        or out.total > 1
        or any(w < 0 or vec not in allowed for vec, w in out.terms)
    ):
        raise InvariantViolation(f"containment certificate for {v} does not verify")
    return out


def verify_containment(alpha, max_nodes=None) -> list[ContainmentCertificate]:
    """A certificate for every Graver element, in the basis' sorted order."""
    return [containment_certificate(alpha, v, max_nodes) for v in graver_basis(alpha, max_nodes)]


def parse_alpha(text: str) -> tuple[int, ...]:
    try:
        alpha = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"alpha must be comma-separated integers, got {text!r}") from exc
    return _check_alpha(alpha)
