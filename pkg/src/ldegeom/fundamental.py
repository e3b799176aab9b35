"""Completely fundamental solutions, the series denominator, and extreme points."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import DEFAULT_MAX_NODES, Instance, Solution, generators
from .decompose import membership
from .errors import NotCoprime
from .hilbert import _require_nonzero_solution, hilbert_basis, sub_solutions


def completely_fundamental_set(inst: Instance) -> list[Solution]:
    """The minimal generators ``(1/d_ij) g_ij``, deduplicated and sorted."""
    return sorted({g.minimal for g in generators(inst)})


def _multiple_of(part: Solution, s: Solution):
    """``r`` with ``part == r * s``, or None."""
    r = None
    for p, q in zip(part.flat, s.flat):
        if q == 0:
            if p:
                return None
            continue
        if p % q:
            return None
        if r is None:
            r = p // q
        elif r != p // q:
            return None
    return r


@dataclass(frozen=True)
class CFWitness:
    """``k * s == first + second`` with neither summand an integer multiple of ``s``."""

    k: int
    first: Solution
    second: Solution


@dataclass(frozen=True)
class CFResult:
    """``holds`` means no counterexample with multiplier up to ``k_max``."""

    holds: bool
    k_max: int
    witness: CFWitness | None = None

    def __bool__(self):
        return self.holds


def cf_counterexamples(inst: Instance, s: Solution, k: int, max_nodes=None) -> list[CFWitness]:
    """Every split of ``k * s`` into two solutions that are not multiples of ``s``."""
    ks = s.scale(k)
    out = []
    for part in sub_solutions(inst, ks, max_nodes):
        if _multiple_of(part, s) is None:
            out.append(CFWitness(k, part, ks - part))
    return out


def is_cf_bruteforce(inst: Instance, s: Solution, k_max: int = 4, max_nodes=None) -> CFResult:
    """Search splits of ``k * s`` for ``k = 1..k_max``; the witness is the first found.

    Witnesses are taken at the smallest offending ``k``, with the first
    summand lexicographically smallest.
    """
    _require_nonzero_solution(inst, s)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    cap = DEFAULT_MAX_NODES if max_nodes is None else max_nodes
    for k in range(1, k_max + 1):
        found = cf_counterexamples(inst, s, k, cap)
        if found:
            return CFResult(False, k_max, found[0])
    return CFResult(True, k_max)


@dataclass(frozen=True)
class Factor:
    i: int
    j: int
    x_exponent: int
    y_exponent: int

    def render(self) -> str:
        def power(var, e):
            return var if e == 1 else f"{var}^{e}"

        return f"(1 - {power(f'z{self.i}', self.x_exponent)}*{power(f'w{self.j}', self.y_exponent)})"


@dataclass(frozen=True)
class GenFunDenominator:
    factors: tuple[Factor, ...]

    def render(self) -> str:
        return "".join(f.render() for f in self.factors)

    def to_json(self) -> dict:
        return {
            "factors": [{"i": f.i, "j": f.j, "zx": f.x_exponent, "wy": f.y_exponent} for f in self.factors],
            "text": self.render(),
        }


def genfun_denominator(inst: Instance) -> GenFunDenominator:
    """One factor ``1 - z_i^(b_j/d) w_j^(a_i/d)`` per completely fundamental solution."""
    seen = set()
    factors = []
    for g in generators(inst):
        f = Factor(g.i, g.j, inst.b[g.j - 1] // g.d, inst.a[g.i - 1] // g.d)
        if g.minimal not in seen:
            seen.add(g.minimal)
            factors.append(f)
    return GenFunDenominator(tuple(factors))


@dataclass(frozen=True)
class ExtremeReport:
    extreme: tuple[Solution, ...]
    interior: tuple[Solution, ...]
    expected: tuple[Solution, ...]  # zero plus every generator

    @property
    def matches(self) -> bool:
        return set(self.extreme) == set(self.expected)


def extreme_points_check(inst: Instance, max_nodes=None) -> ExtremeReport:
    """Extreme points of conv(H(a, b) + {0}), compared with {0} + {g_ij}.

    Only defined when every ``gcd(a_i, b_j)`` is 1. A point is extreme
    exactly when it is not in the convex hull of the others.
    """
    bad = [(g.i, g.j) for g in generators(inst) if g.d != 1]
    if bad:
        i, j = bad[0]
        raise NotCoprime(f"gcd(a_{i}, b_{j}) = {gcd(inst.a[i - 1], inst.b[j - 1])} > 1")
    basis = hilbert_basis(inst, max_nodes)
    zero = Solution((0,) * inst.n, (0,) * inst.m)
    extreme, interior = [], []
    # 0 is extreme iff it is not an exact convex combination of the nonzero points
    if membership(inst, zero, basis, total_eq=True) is None:
        extreme.append(zero)
    else:
        interior.append(zero)
    for k, h in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        # membership() already adjoins the zero vertex
        if membership(inst, h, others) is None:
            extreme.append(h)
        else:
            interior.append(h)
    expected = tuple(sorted({zero} | {g.vector for g in generators(inst)}))
    return ExtremeReport(tuple(sorted(extreme)), tuple(sorted(interior)), expected)

