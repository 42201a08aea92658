import random
import subprocess
import sys

import vpvtotients._kernels as kernels
from vpvtotients._kernels import _ref


def test_backend_reports_name():
    assert kernels.BACKEND in ("cython", "pure")


def test_pure_backend_forced_by_env():
    out = subprocess.run(
        [sys.executable, "-c",
         "import vpvtotients._kernels as k; print(k.BACKEND)"],
        env={"PATH": "/usr/bin:/bin", "VPVTOTIENTS_PURE": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "pure"


def test_selector_tuples_cross_backend():
    rng = random.Random(7)
    for _ in range(40):
        m, k = rng.randint(1, 3), rng.randint(1, 25)
        assert kernels.selector_tuples(m, k) == _ref.selector_tuples(m, k)


def test_selector_count_cross_backend():
    for m in (1, 2, 3):
        for k in range(1, 40):
            assert kernels.selector_count(m, k) == _ref.selector_count(m, k)


def test_selector_numeric_sums_cross_backend():
    rng = random.Random(11)
    for _ in range(30):
        m, k = rng.randint(1, 3), rng.randint(2, 25)
        n = tuple(rng.randint(0, 20) for _ in range(m))
        assert abs(
            kernels.selector_cos_sum(k, n) - _ref.selector_cos_sum(k, n)
        ) < 1e-9
        th = tuple(rng.random() for _ in range(m))
        assert abs(
            kernels.selector_char_sum(k, th) - _ref.selector_char_sum(k, th)
        ) < 1e-9
        t = rng.randint(0, 3)
        assert kernels.selector_power_sum(t, m, k) == _ref.selector_power_sum(t, m, k)


def test_visible_points_box_cross_backend():
    for bounds in ((1,), (10,), (7, 5), (8, 8), (4, 3, 5)):
        got = kernels.visible_points_box(bounds)
        assert got == _ref.visible_points_box(bounds)
        assert got == sorted(got)


def test_selector_definition():
    # the selector of (m, k) holds the nonzero tuples in [0,k)^m whose gcd
    # with k is 1
    from math import gcd
    from itertools import product

    for m, k in ((1, 12), (2, 9), (3, 6)):
        brute = []
        for js in product(range(k), repeat=m):
            g = k
            for j in js:
                g = gcd(g, j)
            if any(js) and g == 1:
                brute.append(js)
        assert kernels.selector_tuples(m, k) == brute
