import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldegeom import _kernels_py, kernels
from ldegeom.errors import SearchBudgetExceeded

from oracles import all_solutions_in_box, brute_hilbert

compiled = pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="extension not built")


@pytest.fixture
def python_backend():
    prev = kernels.use_backend("python")
    yield
    kernels.use_backend(prev)


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("gpu")


def test_use_backend_round_trip():
    prev = kernels.use_backend("python")
    assert kernels.BACKEND == "python"
    assert kernels.use_backend(prev) == "python"
    assert kernels.BACKEND == prev


@compiled
@settings(max_examples=150, deadline=None)
@given(
    st.lists(st.integers(1, 9), min_size=1, max_size=3),
    st.lists(st.integers(1, 9), min_size=1, max_size=3),
    st.integers(0, 9),
    st.integers(0, 9),
)
def test_backends_agree_on_box(a, b, xc, yc):
    got_c = kernels._ckernels.solutions(tuple(a), tuple(b), (xc,) * len(a), (yc,) * len(b), xc, yc, 10**7)
    got_p = _kernels_py.solutions(tuple(a), tuple(b), (xc,) * len(a), (yc,) * len(b), xc, yc, 10**7)
    assert got_c == got_p


@compiled
def test_backends_agree_on_bounded_and_filter():
    rng = random.Random(7)
    for _ in range(200):
        a = tuple(rng.randint(1, 12) for _ in range(rng.randint(1, 3)))
        b = tuple(rng.randint(1, 12) for _ in range(rng.randint(1, 3)))
        ux = tuple(rng.randint(0, 6) for _ in a)
        uy = tuple(rng.randint(0, 6) for _ in b)
        args = (a, b, ux, uy, sum(ux), sum(uy), 10**7)
        fc = kernels._ckernels.solutions(*args)
        fp = _kernels_py.solutions(*args)
        assert fc == fp
        nz = [v for v in fp[0] if any(v)]
        assert kernels._ckernels.minimal_filter(nz) == _kernels_py.minimal_filter(nz)


@compiled
@pytest.mark.parametrize("cap", [1, 5, 40, 300])
def test_backends_trip_budget_identically(cap):
    a, b = (5, 7), (3, 4, 6)
    args = (a, b, (7,) * 2, (7,) * 3, 7, 7)
    full_nodes = _kernels_py.solutions(*args, 10**7)[1]
    assert full_nodes > 300
    for impl in (kernels._ckernels, _kernels_py):
        with pytest.raises(SearchBudgetExceeded):
            impl.solutions(*args, cap)
    assert kernels._ckernels.solutions(*args, full_nodes)[1] == full_nodes


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(1, 8), min_size=1, max_size=3),
    st.lists(st.integers(1, 8), min_size=1, max_size=2),
    st.integers(0, 5),
)
def test_python_kernel_matches_full_grid(a, b, cap):
    # per-coordinate box: the norm caps equal the sums of the bounds, so inactive
    got, _ = _kernels_py.solutions(tuple(a), tuple(b), (cap,) * len(a), (cap,) * len(b),
                                   cap * len(a), cap * len(b), 10**7)
    assert sorted(got) == got
    assert set(got) == set(all_solutions_in_box(a, b, cap, cap))


def test_large_values_fall_back_to_python():
    big = 1 << 40
    flat, _ = kernels.bounded_solutions((big,), (big, 1), (2,), (1, 0), 10**6)
    assert flat == [(0, 0, 0), (1, 1, 0)]


def test_python_backend_end_to_end(python_backend):
    from ldegeom import Instance, Solution, hilbert_basis

    basis = hilbert_basis(Instance((2, 3), (5,)))
    assert basis == [Solution((0, 5), (3,)), Solution((1, 1), (1,)), Solution((5, 0), (2,))]


def test_fallback_when_extension_missing():
    import ast
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['ldegeom._ckernels'] = None\n"
        "import ldegeom\n"
        "from ldegeom import Instance, hilbert_basis, kernels\n"
        "assert not kernels.HAVE_COMPILED and ldegeom.KERNEL_BACKEND == 'python'\n"
        "print([s.flat for s in hilbert_basis(Instance((6,), (2, 3, 5)))])\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert set(ast.literal_eval(proc.stdout)) == brute_hilbert((6,), (2, 3, 5))


@compiled
def test_benchmark_script_runs(capsys):
    import runpy
    from pathlib import Path

    path = Path(__file__).resolve().parent.parent / "benchmarks" / "bench_kernels.py"
    bench = runpy.run_path(str(path))
    assert bench["main"](["--repeat", "1"]) == 0
    assert "speedup" in capsys.readouterr().out
