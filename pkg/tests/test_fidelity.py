import math
import random

import numpy as np
import pytest
from scipy.linalg import expm

from icgpst.fidelity import (
    PST_TIME,
    TWO_PI,
    fidelity_trace,
    transfer_amplitude,
    verify_periodicity,
    verify_pst_numeric,
)
from icgpst.icg import build_graph, make_divisor_set, spectrum_exact
from icgpst.verify import random_divisor_set


def spec(n, *ds):
    return spectrum_exact(make_divisor_set(n, ds))


def adjacency(ds):
    g = build_graph(ds)
    a = np.zeros((ds.n, ds.n))
    for u in range(ds.n):
        for s in g.symbol:
            a[u, (u + s) % ds.n] = 1
    return a


def test_c4_transfer_is_minus_one():
    z = transfer_amplitude(spec(4, 1), 2, 0, math.pi / 2)
    assert abs(z - (-1)) < 1e-12


def test_k2_transfer():
    z = transfer_amplitude(spec(2, 1), 1, 0, PST_TIME)
    assert abs(abs(z) - 1) < 1e-12


def test_k4_has_no_pst_on_grid():
    s = spec(4, 1, 2)
    trace = fidelity_trace(s, 2, 0, TWO_PI, 10_000)
    assert trace.magnitudes.max() < 1 - 1e-3
    assert not verify_pst_numeric(s)


def test_trace_samples():
    trace = fidelity_trace(spec(4, 1), 2, 0, TWO_PI, 5)
    assert np.allclose(trace.magnitudes, [0, 1, 0, 1, 0], atol=1e-12)
    assert trace.pair == (2, 0) and len(trace.times) == 5


def test_trace_rejects_bad_input():
    with pytest.raises(ValueError):
        fidelity_trace(spec(4, 1), 2, 0, TWO_PI, 1)
    with pytest.raises(ValueError):
        fidelity_trace(spec(4, 1), 4, 0, TWO_PI, 10)
    with pytest.raises(ValueError):
        transfer_amplitude(spec(4, 1), 0, 0, math.inf)


def test_verify_pst_numeric_examples():
    assert verify_pst_numeric(spec(8, 1, 4))
    assert verify_pst_numeric(spec(8, 1, 2))
    assert not verify_pst_numeric(spec(8, 1))
    assert not verify_pst_numeric(spec(9, 1, 3))


def test_periodicity():
    assert verify_periodicity(spec(12, 1, 4))
    assert verify_periodicity(spec(7, 1))


def test_closed_form_matches_matrix_exponential():
    rng = random.Random(3)
    for _ in range(30):
        ds = random_divisor_set(rng, 2, 30)
        t = rng.uniform(0, 20)
        u = expm(1j * t * adjacency(ds))
        s = spectrum_exact(ds)
        for b in range(ds.n):
            assert abs(transfer_amplitude(s, b, 0, t) - u[b, 0]) < 1e-9, (ds, t, b)


def test_unitarity_and_translation():
    rng = random.Random(5)
    for _ in range(50):
        ds = random_divisor_set(rng, 2, 64)
        s = spectrum_exact(ds)
        n, t = ds.n, rng.uniform(0, 100)
        row = [transfer_amplitude(s, 0, b, t) for b in range(n)]
        assert abs(sum(abs(z) ** 2 for z in row) - 1) < 1e-9
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        z1 = transfer_amplitude(s, a, b, t)
        z2 = transfer_amplitude(s, (a + c) % n, (b + c) % n, t)
        assert abs(z1 - z2) < 1e-12


def test_large_time_stays_accurate():
    # phase reduction keeps |F| = 1 at late PST revisits
    s = spec(64, 1, 32)
    z = transfer_amplitude(s, 32, 0, PST_TIME + 1000 * TWO_PI)
    assert abs(abs(z) - 1) < 1e-9
