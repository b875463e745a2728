"""The numba and numpy kernels must agree bit for bit."""

import os
import subprocess
import sys

import numpy as np
import pytest

from endogate._backend import get_kernels
from endogate._bits import identity_combos, n_words, pack, unpack, words_to_int
from endogate.qspace import perm_matrix
from endogate.reptheory import standard_generators

NP = get_kernels("numpy")
NB = get_kernels("numba")


def _rand(rng, shape, bits):
    return rng.integers(0, 1 << bits, size=shape, dtype=np.uint64)


@pytest.mark.parametrize("m", [1, 4, 13, 32])
def test_matmul_flatten_roundtrip(m):
    rng = np.random.default_rng(m)
    a, b = _rand(rng, (20, m), m), _rand(rng, (20, m), m)
    prod = NP.matmul_batch(a, b)
    np.testing.assert_array_equal(prod, NB.matmul_batch(a, b))
    flat = NP.flatten(prod, m)
    np.testing.assert_array_equal(flat, NB.flatten(prod, m))
    np.testing.assert_array_equal(NP.unflatten(flat, m), prod)
    np.testing.assert_array_equal(NB.unflatten(flat, m), prod)


@pytest.mark.parametrize("nbits", [7, 64, 100, 289])
def test_insert_batch_agrees(nbits):
    rng = np.random.default_rng(nbits)
    w = n_words(nbits)
    cands = pack(rng.integers(0, 2, size=(3 * nbits // 2, nbits), dtype=np.uint8) * (rng.random((3 * nbits // 2, nbits)) < 0.1), nbits)
    results = []
    for k in (NP, NB):
        basis = np.zeros((nbits, w), dtype=np.uint64)
        piv = np.zeros(nbits, dtype=np.int64)
        r1, ins1 = k.insert_batch(basis, piv, 0, cands[: nbits // 2])
        r2, ins2 = k.insert_batch(basis, piv, r1, cands[nbits // 2 :])
        results.append((r2, ins1.tolist(), ins2.tolist(), basis[:r2].copy(), piv[:r2].copy()))
    (ra, i1a, i2a, ba, pa), (rb, i1b, i2b, bb, pb) = results
    assert ra == rb and i1a == i1b and i2a == i2b
    np.testing.assert_array_equal(ba, bb)
    np.testing.assert_array_equal(pa, pb)


@pytest.mark.parametrize("k", [1, 9, 70])
def test_nullspace_agrees_and_annihilates(k):
    rng = np.random.default_rng(k)
    y = pack(rng.integers(0, 2, size=(k, 30), dtype=np.uint8), 30)
    y[k // 2] = y[0] ^ y[-1]
    a, b = NP.nullspace(y), NB.nullspace(y)
    np.testing.assert_array_equal(a, b)
    rows = [words_to_int(r) for r in y]
    assert len(a) >= 1
    for combo in unpack(a, k):
        acc = 0
        for i in np.flatnonzero(combo):
            acc ^= rows[i]
        assert acc == 0


def test_identity_combos():
    assert [words_to_int(r) for r in identity_combos(70)] == [1 << i for i in range(70)]


@pytest.mark.parametrize("n", [5, 7, 9])
def test_spin_kernel_agrees(n):
    mats = standard_generators("A_n", n).qb_matrices()
    cols = np.array([m.columns() for m in mats], dtype=np.uint64)
    assert NP.first_reducible_vector(cols, n - 1) == NB.first_reducible_vector(cols, n - 1) == 0
    # a reducible module: the single transposition (0 1) fixes every set avoiding 0, 1
    from endogate.qspace import Permutation

    t = perm_matrix(Permutation.from_cycles(n, (0, 1)))
    cols = np.array([t.columns()], dtype=np.uint64)
    v_np = NP.first_reducible_vector(cols, n - 1)
    assert v_np == NB.first_reducible_vector(cols, n - 1) == 1


@pytest.mark.parametrize("backend", ["numpy", "numba"])
def test_env_flag_selects_backend(backend):
    env = dict(os.environ, ENDOGATE_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", "from endogate._backend import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == backend


def test_unknown_backend_name():
    with pytest.raises(ValueError):
        get_kernels("cuda")


def test_report_bodies_identical_across_backends():
    code = (
        "from endogate import cli; import sys; "
        "sys.stdout.write(cli.body_bytes(cli.run(['dichotomy','--n','9','--trials','20','--seed','3'])[2]).decode())"
    )
    bodies = []
    for backend in ("numpy", "numba"):
        env = dict(os.environ, ENDOGATE_BACKEND=backend)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        bodies.append(out.stdout)
    assert bodies[0] == bodies[1]
