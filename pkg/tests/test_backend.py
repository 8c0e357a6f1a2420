"""Backend equivalence: numba loop kernels against the pure-NumPy fallback."""

import os
import subprocess
import sys

import numpy as np

from confed import _dd_kernels as K


def _random_dd(rng, n):
    ah = rng.standard_normal((n, n))
    al = ah * 1e-18 * rng.standard_normal((n, n))
    return ah, al


def test_det_backends_agree_bitwise():
    rng = np.random.default_rng(10)
    for n in (1, 2, 5, 9):
        ah, al = _random_dd(rng, n)
        r1 = K._det_dd_loops(ah.copy(), al.copy())
        r2 = K._det_dd_numpy(ah.copy(), al.copy())
        assert r1 == r2


def test_complex_det_backends_agree_bitwise():
    rng = np.random.default_rng(11)
    for n in (2, 4, 7):
        arh, arl = _random_dd(rng, n)
        aih, ail = _random_dd(rng, n)
        r1 = K._det_zdd_loops(arh.copy(), arl.copy(), aih.copy(), ail.copy())
        r2 = K._det_zdd_numpy(arh.copy(), arl.copy(), aih.copy(), ail.copy())
        assert r1 == r2


def test_solve_backends_agree_bitwise():
    rng = np.random.default_rng(12)
    for n in (2, 6, 11):
        ah, al = _random_dd(rng, n)
        bh = rng.standard_normal(n)
        bl = np.zeros(n)
        x1 = K._solve_colpiv_loops(ah.copy(), al.copy(), bh.copy(), bl.copy())
        x2 = K._solve_colpiv_numpy(ah.copy(), al.copy(), bh.copy(), bl.copy())
        for a, b in zip(x1, x2):
            assert np.array_equal(a, b)


def test_inv_backends_agree_bitwise():
    rng = np.random.default_rng(13)
    for n in (2, 5, 10):
        ah, al = _random_dd(rng, n)
        x1 = K._inv_dd_loops(ah.copy(), al.copy())
        x2 = K._inv_dd_numpy(ah.copy(), al.copy())
        assert np.array_equal(x1[0], x2[0])
        assert np.array_equal(x1[1], x2[1])
        assert x1[2] == x2[2]


def test_singular_status_codes():
    z = np.zeros((3, 3))
    assert K._det_dd_loops(z.copy(), z.copy())[-1] == 1
    assert K._det_dd_numpy(z.copy(), z.copy())[-1] == 1
    assert K._inv_dd_numpy(z.copy(), z.copy())[-1] == 1
    assert K._solve_colpiv_numpy(z.copy(), z.copy(), np.ones(3), np.zeros(3))[-1] == 1


def test_env_flag_selects_numpy_path():
    env = dict(os.environ, CONFED_NUMBA="0")
    code = (
        "import confed\n"
        "from confed import _dd_kernels as K\n"
        "assert not confed.NUMBA_ENABLED\n"
        "assert K.det_dd is K._det_dd_numpy\n"
        "import numpy as np\n"
        "from confed import make_basis, char_value\n"
        "v = char_value(np.eye(3), 2.0, 1.0)\n"
        "assert float(v) == 1.0\n"
    )
    subprocess.run([sys.executable, "-c", code], env=env, check=True)
