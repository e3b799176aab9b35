"""Convex combinations of generators for minimal solutions.

A minimal solution is first expanded into a 0/1 identity (``x_i`` copies
of ``a_i`` on the left, ``y_j`` copies of ``b_j`` on the right). Each level
then takes the largest active coefficient on either side, cancels the
smaller one against it and keeps the positive difference in place, until
only ``c = c`` remains. Unwinding the levels gives exact coefficients
``lambda_ij`` with

    sum_j lambda_ij b_j = x_i,  sum_i lambda_ij a_i = y_j,
    lambda_ij >= 0,             sum lambda_ij <= 1,

and summing the coefficients of copies that came from the same original
pair ``(i, j)`` gives the certificate for the original solution.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .core import Generator, Instance, Solution, check_dims, generator, generators, is_solution
from .errors import (
    DimensionMismatch,
    EmptySupport,
    InvalidCertificate,
    InvariantViolation,
    NotASolution,
    NotMinimal,
    ZeroSolution,
)
from .hilbert import is_minimal, render_identity

ZERO = Fraction(0)


@dataclass(frozen=True)
class BinaryState:
    """One level of the reduction, over the copied (binary) positions.

    ``a`` and ``b`` hold the current coefficient at every position,
    including deactivated ones; ``origin_row[p]`` / ``origin_col[q]`` give
    the 0-based original index a position was copied from. Positions in
    ``active_x``/``active_y`` are 0-based.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    origin_row: tuple[int, ...]
    origin_col: tuple[int, ...]
    active_x: frozenset[int]
    active_y: frozenset[int]

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def q(self) -> int:
        return len(self.b)

    @property
    def size(self) -> int:
        return len(self.active_x) + len(self.active_y)

    def identity(self) -> str:
        xs = [int(k in self.active_x) for k in range(self.p)]
        ys = [int(k in self.active_y) for k in range(self.q)]
        return render_identity(self.a, xs, self.b, ys)

    def balanced(self) -> bool:
        return sum(self.a[k] for k in self.active_x) == sum(self.b[k] for k in self.active_y)


@dataclass(frozen=True)
class LevelRecord:
    """Pivot data for one level; ``s`` and ``t`` are 1-based positions.

    ``side`` is ``"a"`` when the left pivot was larger (its position keeps
    ``a_s - b_t``), ``"b"`` for the mirror case, and None at the base level.
    """

    level: int
    identity: str
    s: int
    t: int
    a_s: int
    b_t: int
    side: str | None
    replaced_value: int | None
    state: BinaryState

    @property
    def is_base(self) -> bool:
        return self.side is None

    @property
    def pivot_values(self):
        return self.a_s, self.b_t

    def compact_solution(self) -> str:
        """Active part as 0/1 vectors, in the style ``((1,1),(1,1,1))``."""
        ones_x = ",".join("1" * len(self.state.active_x))
        ones_y = ",".join("1" * len(self.state.active_y))
        return f"(({ones_x}),({ones_y}))"


@dataclass(frozen=True)
class TraceLevel:
    record: LevelRecord
    lambdas: tuple[tuple[Fraction, ...], ...]  # p x q over binary positions


@dataclass(frozen=True)
class ConvexCertificate:
    """``lambdas[i][j]`` is the weight of generator ``g_(i+1)(j+1)``."""

    lambdas: tuple[tuple[Fraction, ...], ...]

    @property
    def total(self) -> Fraction:
        return sum((v for row in self.lambdas for v in row), ZERO)

    @property
    def slack(self) -> Fraction:
        return 1 - self.total

    def terms(self) -> list[tuple[int, int, Fraction]]:
        """Nonzero ``(i, j, coefficient)`` triples, 1-based, row-major."""
        return [
            (i + 1, j + 1, v)
            for i, row in enumerate(self.lambdas)
            for j, v in enumerate(row)
            if v != 0
        ]

    @property
    def support_size(self) -> int:
        return len(self.terms())

    def used_generators(self, inst: Instance) -> list[tuple[int, int, Generator, Fraction]]:
        return [(i, j, generator(inst, i, j), v) for i, j, v in self.terms()]

    def point(self, inst: Instance) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """``sum lambda_ij g_ij`` evaluated coordinatewise."""
        x = [sum((self.lambdas[i][j] * inst.b[j] for j in range(inst.m)), ZERO) for i in range(inst.n)]
        y = [sum((self.lambdas[i][j] * inst.a[i] for i in range(inst.n)), ZERO) for j in range(inst.m)]
        return tuple(x), tuple(y)


def _zero_table(p, q):
    return [[ZERO] * q for _ in range(p)]


def _freeze(table):
    return tuple(tuple(row) for row in table)


# --- forward pass ------------------------------------------------------------

def binarize(inst: Instance, s: Solution) -> BinaryState:
    check_dims(inst, s.x, s.y)
    if s.is_zero():
        raise ZeroSolution("cannot binarize the zero solution")
    if not is_solution(inst, s.x, s.y):
        raise NotASolution(f"{s} does not satisfy a.x = b.y")
    a, rows, b, cols = [], [], [], []
    for i, k in enumerate(s.x):
        a += [inst.a[i]] * k
        rows += [i] * k
    for j, k in enumerate(s.y):
        b += [inst.b[j]] * k
        cols += [j] * k
    return BinaryState(
        tuple(a), tuple(b), tuple(rows), tuple(cols),
        frozenset(range(len(a))), frozenset(range(len(b))),
    )


def select_pivot(state: BinaryState) -> tuple[int, int]:
    """1-based positions of the largest active coefficients; ties go to the larger position."""
    if not state.active_x or not state.active_y:
        raise EmptySupport("both sides need an active position")
    s = max(state.active_x, key=lambda k: (state.a[k], k))
    t = max(state.active_y, key=lambda k: (state.b[k], k))
    return s + 1, t + 1


def reduce_step(state: BinaryState, level: int = 1) -> tuple[BinaryState | None, LevelRecord]:
    """Cancel the pivots once. Returns ``(None, record)`` at the base level ``c = c``."""
    s, t = select_pivot(state)
    a_s, b_t = state.a[s - 1], state.b[t - 1]
    ident = state.identity()
    if not state.balanced():
        raise NotMinimal(f"{ident} is not balanced")
    if a_s == b_t:
        if state.size == 2:
            return None, LevelRecord(level, ident, s, t, a_s, b_t, None, None, state)
        raise NotMinimal(f"{ident} contains the sub-identity {a_s}={b_t}")
    if a_s > b_t:
        new_a = list(state.a)
        new_a[s - 1] = a_s - b_t
        nxt = BinaryState(tuple(new_a), state.b, state.origin_row, state.origin_col,
                          state.active_x, state.active_y - {t - 1})
        record = LevelRecord(level, ident, s, t, a_s, b_t, "a", a_s - b_t, state)
    else:
        new_b = list(state.b)
        new_b[t - 1] = b_t - a_s
        nxt = BinaryState(state.a, tuple(new_b), state.origin_row, state.origin_col,
                          state.active_x - {s - 1}, state.active_y)
        record = LevelRecord(level, ident, s, t, a_s, b_t, "b", b_t - a_s, state)
    if not nxt.balanced() or nxt.size >= state.size:
        raise NotMinimal("reduction produced an inconsistent state")
    return nxt, record


# --- reverse pass --------------------------------------------------------

def base_lambdas(record: LevelRecord):
    table = _zero_table(record.state.p, record.state.q)
    table[record.s - 1][record.t - 1] = Fraction(1, record.a_s)
    return _freeze(table)


def lift_lambdas(record: LevelRecord, inner):
    """Coefficients at ``record``'s level from those of the next (reduced) level."""
    s, t = record.s - 1, record.t - 1
    table = [list(row) for row in inner]
    if record.side == "a":
        ratio = Fraction(record.a_s - record.b_t, record.a_s)
        for j in range(len(table[s])):
            table[s][j] = ratio * inner[s][j]
        for i in range(len(table)):
            table[i][t] = ZERO
        table[s][t] = Fraction(1, record.a_s)
    elif record.side == "b":
        ratio = Fraction(record.b_t - record.a_s, record.b_t)
        for i in range(len(table)):
            table[i][t] = ratio * inner[i][t]
        for j in range(len(table[s])):
            table[s][j] = ZERO
        table[s][t] = Fraction(1, record.b_t)
    else:
        raise ValueError("the base level has nothing to lift")
    table = _freeze(table)
    check_level(record.state, table)
    return table


def check_level(state: BinaryState, table):
    """Verify the exact constraints for the 0/1 identity of ``state``."""
    for i in range(state.p):
        for j in range(state.q):
            v = table[i][j]
            if v < 0:
                raise InvariantViolation(f"negative coefficient at ({i + 1},{j + 1})")
            if v and (i not in state.active_x or j not in state.active_y):
                raise InvariantViolation(f"coefficient outside the support at ({i + 1},{j + 1})")
    for i in range(state.p):
        want = int(i in state.active_x)
        if sum((table[i][j] * state.b[j] for j in range(state.q)), ZERO) != want:
            raise InvariantViolation(f"row {i + 1} does not reproduce x'_{i + 1}")
    for j in range(state.q):
        want = int(j in state.active_y)
        if sum((table[i][j] * state.a[i] for i in range(state.p)), ZERO) != want:
            raise InvariantViolation(f"column {j + 1} does not reproduce y'_{j + 1}")
    if sum((v for row in table for v in row), ZERO) > 1:
        raise InvariantViolation("coefficients sum to more than 1")


def _forward(state: BinaryState) -> list[LevelRecord]:
    records = []
    level = 1
    while state is not None:
        state, record = reduce_step(state, level)
        records.append(record)
        level += 1
    return records


def _precheck(inst, s, check_minimal, max_nodes=None):
    check_dims(inst, s.x, s.y)
    if s.is_zero():
        raise ZeroSolution("the zero solution is not in the Hilbert basis")
    if not is_solution(inst, s.x, s.y):
        raise NotASolution(f"{s} does not satisfy a.x = b.y")
    if check_minimal and not is_minimal(inst, s, max_nodes):
        raise NotMinimal(f"{s} is not a minimal solution")


def trace(inst: Instance, s: Solution, check_minimal: bool = True, max_nodes=None) -> list[TraceLevel]:
    """Every level of the forward pass with its coefficient table, level 1 first."""
    _precheck(inst, s, check_minimal, max_nodes)
    records = _forward(binarize(inst, s))
    tables = [None] * len(records)
    tables[-1] = base_lambdas(records[-1])
    check_level(records[-1].state, tables[-1])
    for k in range(len(records) - 2, -1, -1):
        tables[k] = lift_lambdas(records[k], tables[k + 1])
    return [TraceLevel(r, t) for r, t in zip(records, tables)]


def merge(inst: Instance, state: BinaryState, table) -> ConvexCertificate:
    """Sum binary coefficients whose positions share an original ``(i, j)``."""
    out = _zero_table(inst.n, inst.m)
    for p in range(state.p):
        for q in range(state.q):
            if table[p][q]:
                out[state.origin_row[p]][state.origin_col[q]] += table[p][q]
    return ConvexCertificate(_freeze(out))


def verify_certificate(inst: Instance, s: Solution, cert: ConvexCertificate) -> None:
    """Raise :class:`InvalidCertificate` unless ``cert`` exactly certifies ``s``."""
    if len(cert.lambdas) != inst.n or any(len(row) != inst.m for row in cert.lambdas):
        raise InvalidCertificate(f"expected a {inst.n}x{inst.m} coefficient matrix")
    if any(v < 0 for row in cert.lambdas for v in row):
        raise InvalidCertificate("negative coefficient")
    if cert.total > 1:
        raise InvalidCertificate(f"coefficients sum to {cert.total} > 1")
    x, y = cert.point(inst)
    if x != tuple(map(Fraction, s.x)) or y != tuple(map(Fraction, s.y)):
        raise InvalidCertificate(f"combination gives {x}, {y}, not {s}")
    sx, sy = s.supp_x, s.supp_y
    for i, j, _ in cert.terms():
        if i - 1 not in sx or j - 1 not in sy:
            raise InvalidCertificate(f"generator ({i},{j}) lies outside supp(x) x supp(y)")


def decompose(inst: Instance, s: Solution, check_minimal: bool = True, max_nodes=None) -> ConvexCertificate:
    """Certificate that the minimal solution ``s`` lies in conv(0, g_ij)."""
    levels = trace(inst, s, check_minimal, max_nodes)
    cert = merge(inst, levels[0].record.state, levels[0].lambdas)
    try:
        verify_certificate(inst, s, cert)
    except InvalidCertificate as exc:
        raise InvariantViolation(str(exc)) from exc
    return cert


# --- Caratheodory reduction ------------------------------------------------

def caratheodory_reduce(inst: Instance, cert: ConvexCertificate) -> ConvexCertificate:
    """Same point, at most ``n + m - 1`` nonzero coefficients.

    While the generators in use are linearly dependent, move along a
    kernel vector ``mu`` oriented so that ``sum mu >= 0``; the step that
    zeroes the first coefficient can only enlarge the weight on the zero
    vertex, so nonnegativity and ``sum <= 1`` survive. Generators live in
    the hyperplane a.x = b.y, and the ones inside supp(x) x supp(y) span at
    most ``|supp x| + |supp y| - 1`` dimensions.
    """
    if len(cert.lambdas) != inst.n or any(len(row) != inst.m for row in cert.lambdas):
        raise InvalidCertificate(f"expected a {inst.n}x{inst.m} coefficient matrix")
    if any(v < 0 for row in cert.lambdas for v in row) or cert.total > 1:
        raise InvalidCertificate("coefficients must be nonnegative with sum at most 1")
    target = cert.point(inst)
    lam = {(i - 1, j - 1): v for i, j, v in cert.terms()}
    while True:
        active = sorted(lam)
        if not active:
            break
        # columns are generator vectors in R^(n+m)
        rows = []
        for coord in range(inst.n + inst.m):
            row = []
            for i, j in active:
                if coord < inst.n:
                    row.append(inst.b[j] if coord == i else 0)
                else:
                    row.append(inst.a[i] if coord - inst.n == j else 0)
            rows.append(row)
        kernel = exact.nullspace(rows, len(active))
        if not kernel:
            break
        mu = kernel[0]
        total = sum(mu)
        if total < 0 or (total == 0 and max(mu) <= 0):
            mu = [-v for v in mu]
        step = min(lam[key] / v for key, v in zip(active, mu) if v > 0)
        for key, v in zip(active, mu):
            lam[key] -= step * v
        lam = {k: v for k, v in lam.items() if v != 0}
    out = _zero_table(inst.n, inst.m)
    for (i, j), v in lam.items():
        out[i][j] = v
    reduced = ConvexCertificate(_freeze(out))
    if reduced.point(inst) != target or reduced.total > 1 or any(v < 0 for v in lam.values()):
        raise InvariantViolation("Caratheodory step changed the point")
    return reduced


# --- hull membership --------------------------------------------------

def _hull_system(inst, point, vertex_set, total_eq):
    check_dims(inst, point.x, point.y)
    for v in vertex_set:
        if len(v.x) != inst.n or len(v.y) != inst.m:
            raise DimensionMismatch("vertex dimensions do not match the instance")
    r = len(vertex_set)
    A = [[v.flat[c] for v in vertex_set] for c in range(inst.n + inst.m)]
    rhs = list(point.flat)
    if total_eq:
        A.append([1] * r)
    else:
        for row in A:
            row.append(0)
        A.append([1] * r + [1])
    rhs.append(1)
    return A, rhs


def membership(inst: Instance, point: Solution, vertex_set, *, total_eq: bool = False):
    """Weights over ``vertex_set`` with sum at most 1 reproducing ``point``, or None.

    This decides membership in ``conv(vertex_set + [0])`` exactly. With
    ``total_eq=True`` the weights must sum to exactly 1 (``conv(vertex_set)``).
    """
    vertex_set = list(vertex_set)
    if total_eq and not vertex_set:
        check_dims(inst, point.x, point.y)
        return None
    if not vertex_set:
        check_dims(inst, point.x, point.y)
        return [] if point.is_zero() else None
    A, rhs = _hull_system(inst, point, vertex_set, total_eq)
    v = exact.feasible_point(A, rhs)
    if v is None:
        return None
    return v[: len(vertex_set)]


def forced_coefficients(inst: Instance, point: Solution, vertex_set):
    """The unique solution of ``sum lambda_k v_k = point`` if the equalities pin it down."""
    vertex_set = list(vertex_set)
    check_dims(inst, point.x, point.y)
    if not vertex_set:
        return None
    A = [[v.flat[c] for v in vertex_set] for c in range(inst.n + inst.m)]
    return exact.solve_unique(A, list(point.flat))


def vertex_set(inst: Instance, name: str):
    """Named vertex sets: ``generators``, ``minimal-generators`` or ``hilbert``."""
    if name == "generators":
        return [g.vector for g in generators(inst)]
    if name == "minimal-generators":
        return [g.minimal for g in generators(inst)]
    if name == "hilbert":
        from .hilbert import hilbert_basis
        return hilbert_basis(inst)
    raise ValueError(f"unknown vertex set {name!r}")
