"""Backend selection for the enumeration kernels.

The compiled extension is used when it imported and the inputs fit in
64-bit arithmetic; otherwise the pure-Python kernels run. Both produce
identical output. ``use_backend`` pins a backend, mainly for tests and
benchmarks.
"""
from . import _kernels_py

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

HAVE_COMPILED = _ckernels is not None
BACKEND = "compiled" if HAVE_COMPILED else "python"

# all intermediate sums stay below 2**62 when inputs are below this
_C_LIMIT = 1 << 28
_C_MAX_DIM = 32


def use_backend(name):
    """Select ``"compiled"``, ``"python"`` or ``"auto"``; returns the previous choice."""
    global BACKEND
    if name == "auto":
        name = "compiled" if HAVE_COMPILED else "python"
    if name not in ("compiled", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "compiled" and not HAVE_COMPILED:
        raise RuntimeError("compiled kernels are not available; build the extension first")
    previous, BACKEND = BACKEND, name
    return previous


def _fits(*groups):
    return all(0 <= v < _C_LIMIT for g in groups for v in g)


def _impl(*groups):
    if BACKEND == "compiled" and len(groups[0]) + len(groups[1]) <= _C_MAX_DIM and _fits(*groups):
        return _ckernels
    return _kernels_py


def solutions(a, b, ux, uy, x_cap, y_cap, max_nodes):
    """All solutions in a box; see :func:`ldegeom._kernels_py.solutions`."""
    a, b, ux, uy = tuple(a), tuple(b), tuple(ux), tuple(uy)
    impl = _impl(a, b, ux, uy, (x_cap, y_cap))
    return impl.solutions(a, b, ux, uy, x_cap, y_cap, max_nodes)


def box_solutions(a, b, x_cap, y_cap, max_nodes):
    """Solutions with ``||x||_1 <= x_cap`` and ``||y||_1 <= y_cap``."""
    return solutions(a, b, (x_cap,) * len(a), (y_cap,) * len(b), x_cap, y_cap, max_nodes)


def bounded_solutions(a, b, ux, uy, max_nodes):
    """Solutions with ``0 <= x <= ux`` and ``0 <= y <= uy`` componentwise."""
    return solutions(a, b, ux, uy, sum(ux), sum(uy), max_nodes)


def minimal_filter(vectors):
    vectors = list(vectors)
    if BACKEND == "compiled" and all(_fits(v) for v in vectors):
        return _ckernels.minimal_filter(vectors)
    return _kernels_py.minimal_filter(vectors)
