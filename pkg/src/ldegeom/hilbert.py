"""Hilbert basis H(a, b): the minimal nonzero solutions, found by a bounded search.

Minimal solutions obey ``||x||_1 <= max b`` and ``||y||_1 <= max a``, so a
depth-first search over that box (see :mod:`ldegeom.kernels`) followed by
a componentwise dominance filter yields the whole basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .core import DEFAULT_MAX_NODES, Instance, Solution, check_dims, dot, is_solution
from .errors import NotASolution, ZeroSolution


@dataclass(frozen=True)
class SearchBox:
    x_norm_cap: int
    y_norm_cap: int
    hard_cap: int = DEFAULT_MAX_NODES


def search_box(inst: Instance, hard_cap: int | None = None) -> SearchBox:
    return SearchBox(max(inst.b), max(inst.a), DEFAULT_MAX_NODES if hard_cap is None else hard_cap)


@dataclass(frozen=True)
class BoundsReport:
    max_bound_x_ok: bool
    max_bound_y_ok: bool
    mean_bound_x_ok: bool
    mean_bound_y_ok: bool
    norm_x: int
    norm_y: int
    max_b: int
    max_a: int
    mean_y_weight: Fraction  # (y.b) / ||y||_1
    mean_x_weight: Fraction  # (x.a) / ||x||_1

    @property
    def all_ok(self) -> bool:
        return self.max_bound_x_ok and self.max_bound_y_ok and self.mean_bound_x_ok and self.mean_bound_y_ok


def _require_nonzero_solution(inst, s):
    check_dims(inst, s.x, s.y)
    if s.is_zero():
        raise ZeroSolution("the zero solution is excluded here")
    if not is_solution(inst, s.x, s.y):
        raise NotASolution(f"{s} does not satisfy a.x = b.y")


def hilbert_basis(inst: Instance, max_nodes: int | None = None) -> list[Solution]:
    """All minimal solutions of ``inst``, sorted lexicographically on ``(x, y)``.

    Raises :class:`~ldegeom.errors.SearchBudgetExceeded` when the search
    visits more than ``max_nodes`` nodes.
    """
    box = search_box(inst, max_nodes)
    flat, _ = kernels.box_solutions(inst.a, inst.b, box.x_norm_cap, box.y_norm_cap, box.hard_cap)
    nonzero = [v for v in flat if any(v)]
    return [Solution.from_flat(v, inst.n) for v in kernels.minimal_filter(nonzero)]


def sub_solutions(inst: Instance, s: Solution, max_nodes: int | None = None) -> list[Solution]:
    """Every solution ``s'`` with ``0 <= s' <= s`` componentwise, zero and ``s`` included."""
    cap = DEFAULT_MAX_NODES if max_nodes is None else max_nodes
    flat, _ = kernels.bounded_solutions(inst.a, inst.b, s.x, s.y, cap)
    return [Solution.from_flat(v, inst.n) for v in flat]


def is_minimal(inst: Instance, s: Solution, max_nodes: int | None = None) -> bool:
    _require_nonzero_solution(inst, s)
    # zero and s itself are always below s
    return len(sub_solutions(inst, s, max_nodes)) == 2


def proper_split(inst: Instance, s: Solution, max_nodes: int | None = None):
    """A pair ``(s', s - s')`` of nonzero solutions summing to ``s``, or None if minimal."""
    _require_nonzero_solution(inst, s)
    for part in sub_solutions(inst, s, max_nodes):
        if not part.is_zero() and part != s:
            return part, s - part
    return None


def check_bounds(inst: Instance, s: Solution) -> BoundsReport:
    _require_nonzero_solution(inst, s)
    nx, ny = s.norm_x, s.norm_y
    mean_y = Fraction(dot(s.y, inst.b), ny)
    mean_x = Fraction(dot(s.x, inst.a), nx)
    return BoundsReport(
        max_bound_x_ok=nx <= max(inst.b),
        max_bound_y_ok=ny <= max(inst.a),
        mean_bound_x_ok=nx <= mean_y,
        mean_bound_y_ok=ny <= mean_x,
        norm_x=nx,
        norm_y=ny,
        max_b=max(inst.b),
        max_a=max(inst.a),
        mean_y_weight=mean_y,
        mean_x_weight=mean_x,
    )


def as_partition_identity(inst: Instance, s: Solution) -> str:
    """Render ``s`` as ``a_1+...+a_1+...=b_1+...``, one term per unit of multiplicity."""
    _require_nonzero_solution(inst, s)
    return render_identity(inst.a, s.x, inst.b, s.y)


def render_identity(a, x, b, y) -> str:
    left = [str(c) for c, k in zip(a, x) for _ in range(k)]
    right = [str(c) for c, k in zip(b, y) for _ in range(k)]
    return "+".join(left) + "=" + "+".join(right)
