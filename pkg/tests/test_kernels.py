"""The numba and numpy kernel paths must agree on verdicts."""

import numpy as np
import pytest

from quandlekit import kernels
from quandlekit import finite_quandle as fq
from quandlekit import welded as wd


def _tables():
    yield fq.trivial(3).table
    yield fq.q_mn(2, 3).table
    yield fq.q_12().table
    bad = np.array([[0, 1, 2], [2, 1, 0], [0, 1, 2]], dtype=np.int64)
    yield bad


def test_distributive_agreement():
    for table in _tables():
        fast = kernels.distributive_witness(table)
        slow = kernels._distributive_witness_numpy(table)
        assert (fast is None) == (slow is None)
        if fast is not None:
            x, y, z = fast
            assert table[x, table[y, z]] != table[table[x, y], table[x, z]]


def _eval_left(table, tup):
    acc = tup[0]
    for q in tup[1:]:
        acc = table[acc, q]
    return acc


def test_reductive_agreement_and_witness_validity():
    for table in (fq.q_mn(2, 3).table, fq.trivial(3).table):
        for c in (1, 2, 3):
            fast = kernels.reductive_witness(table, c)
            slow = kernels._reductive_witness_numpy(table, c)
            assert (fast is None) == (slow is None)
            for w in (fast, slow):
                if w is not None:
                    assert _eval_left(table, w) != _eval_left(table, w[1:])


def test_weak_agreement_and_witness_validity():
    for table in (fq.q_mn(2, 2).table, fq.trivial(4).table):
        for c in (1, 2):
            fast = kernels.weak_witness(table, c)
            slow = kernels._weak_witness_numpy(table, c)
            assert (fast is None) == (slow is None)
            for w in (fast, slow):
                if w is not None:
                    x1, x1p, *rest = w
                    assert _eval_left(table, (x1, *rest)) != _eval_left(
                        table, (x1p, *rest)
                    )


def test_braid_scan_agreement():
    Q = fq.q_mn(2, 3)
    rows = np.asarray(Q.table)
    rows_inv = np.asarray(Q.inv_table)
    beta = wd.K(1, 2, 2)
    sigma = np.array(beta.sigma, dtype=np.int64)
    letters, offsets = kernels.pack_words(beta.ws)
    fast = kernels.braid_fixes_all(rows, rows_inv, sigma, letters, offsets, 2)
    slow = kernels._braid_fixes_all_numpy(rows, rows_inv, sigma, letters, offsets, 2)
    assert (fast is None) == (slow is None)
    assert fast is not None  # K_12 moves cross-orbit pairs
    for w in (fast, slow):
        assert wd.act_tuple(beta, Q, tuple(w)) != tuple(w)
    gamma = wd.commutator(wd.K(1, 2, 3), wd.K(1, 3, 3))
    sigma = np.array(gamma.sigma, dtype=np.int64)
    letters, offsets = kernels.pack_words(gamma.ws)
    rows3 = rows
    assert (
        kernels.braid_fixes_all(rows3, rows_inv, sigma, letters, offsets, 3) is None
    ) == (
        kernels._braid_fixes_all_numpy(rows3, rows_inv, sigma, letters, offsets, 3)
        is None
    )


@pytest.mark.skipif(not kernels.HAS_NUMBA, reason="numba backend not active")
def test_backend_reports_numba():
    assert kernels.backend_name() == "numba"
