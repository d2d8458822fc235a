import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irng import _pykernel, kernel

ck = pytest.importorskip("irng._ckernel")


@st.composite
def kernels(draw, max_rank=4):
    k = draw(st.integers(1, max_rank))
    d = draw(st.lists(st.integers(1, 12), min_size=k, max_size=k))
    vec = lambda: st.tuples(*(st.integers(0, di - 1) for di in d))  # noqa: E731
    consts = [[list(draw(vec())) for _ in range(k)] for _ in range(k)]
    return d, consts, vec


def naive_mul(d, consts, x, y):
    k = len(d)
    return tuple(sum(x[i] * y[j] * consts[i][j][t] for i in range(k) for j in range(k)) % d[t]
                 for t in range(k))


@given(st.data())
def test_mul_agrees(data):
    d, consts, vec = data.draw(kernels())
    x, y = data.draw(vec()), data.draw(vec())
    a = _pykernel.RngKernel(d, consts).mul(x, y)
    b = ck.RngKernel(d, consts).mul(x, y)
    assert a == b == naive_mul(d, consts, x, y)


@given(st.data())
def test_el_mul_agrees(data):
    d, consts, vec = data.draw(kernels(max_rank=3))
    n = data.draw(st.integers(1, 3))
    flat = lambda: st.lists(vec(), min_size=n * n, max_size=n * n).map(  # noqa: E731
        lambda vs: tuple(c for v in vs for c in v))
    A, B = data.draw(flat()), data.draw(flat())
    assert _pykernel.RngKernel(d, consts).el_mul(A, B, n) == ck.RngKernel(d, consts).el_mul(A, B, n)


@given(st.data())
def test_lattice_agrees(data):
    k = data.draw(st.integers(1, 5))
    d = data.draw(st.lists(st.integers(1, 36), min_size=k, max_size=k))
    vecs = data.draw(st.lists(st.lists(st.integers(-50, 50), min_size=k, max_size=k), max_size=6))
    P, C = _pykernel.Lattice(d), ck.Lattice(d)
    for v in vecs:
        assert P.add(v) == C.add(v)
        assert P.rows() == C.rows()
    assert P.diagonal() == C.diagonal() and P.is_full() == C.is_full()
    probe = data.draw(st.lists(st.integers(-50, 50), min_size=k, max_size=k))
    assert P.contains(probe) == C.contains(probe)
    assert P.copy().rows() == C.copy().rows()


def test_xgcd_agrees():
    for a in range(-20, 21):
        for b in range(-20, 21):
            assert _pykernel.xgcd(a, b) == ck.xgcd(a, b)


def test_large_moduli_use_python():
    assert kernel._backend([ck.MAX_MODULUS + 1]) is _pykernel


@pytest.mark.parametrize("flag,expected", [("1", "python"), ("0", "cython")])
def test_environment_selects_backend(flag, expected):
    env = dict(os.environ, IRNG_PURE_PYTHON=flag)
    out = subprocess.run([sys.executable, "-c", "import irng; print(irng.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == expected
