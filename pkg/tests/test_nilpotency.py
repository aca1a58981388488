from itertools import product

import pytest

from conftest import dihedral, symmetric3
from quandlekit import finite_quandle as fq
from quandlekit import nilpotency as nil
from quandlekit.errors import NotNilpotent, TargetNotNilpotent


def test_q23_invariants():
    Q = fq.q_mn(2, 3)
    assert nil.inn_group(Q).order() == 6
    assert nil.nilpotency_class(Q) == 2
    assert nil.reductive_class(Q) == 2
    assert nil.is_c_reductive(Q, 2) and not nil.is_c_reductive(Q, 1)


def test_trivial_quandles_are_1_nilpotent():
    for n in (1, 2, 5):
        Q = fq.trivial(n)
        assert nil.nilpotency_class(Q) == 1
        assert nil.reductive_class(Q) == 1
        assert nil.weak_class(Q) == 1


def test_conj_s3_not_nilpotent():
    Q = fq.conj_quandle(symmetric3())
    assert nil.nilpotency_class(Q) is None
    assert nil.reductive_class(Q) is None
    with pytest.raises(NotNilpotent):
        nil.covering_chain(Q)


def test_reductivity_matches_group_route(corpus):
    """c-reductive identity holds iff the quandle class is <= c."""
    for Q in corpus:
        cls = nil.nilpotency_class(Q)
        for c in range(1, 5):
            expected = cls is not None and cls <= c
            assert nil.is_c_reductive(Q, c) == expected, (Q.table, c)


def test_weak_nilpotency_is_implied(corpus):
    """c-reductive implies weakly c-nilpotent everywhere in the corpus."""
    for Q in corpus:
        for c in range(1, 4):
            if nil.is_c_reductive(Q, c):
                assert nil.is_weakly_c_nilpotent(Q, c)


def test_witness_validity(corpus):
    def left(Q, tup):
        acc = tup[0]
        for q in tup[1:]:
            acc = Q.op(acc, q)
        return acc

    for Q in corpus[:20]:
        for c in (1, 2):
            w = nil.c_reductive_witness(Q, c)
            if w is not None:
                assert left(Q, w) != left(Q, w[1:])
            ww = nil.weak_witness(Q, c)
            if ww is not None:
                x1, x1p, *rest = ww
                assert left(Q, (x1, *rest)) != left(Q, (x1p, *rest))


def test_universal_quotient_is_universal():
    """Q/Gamma_c is the largest c-nilpotent quotient: any morphism from Q
    onto a c-nilpotent quandle factors through it."""
    Q = fq.q_mn(2, 2)
    quot, cong = nil.universal_nilpotent_quotient(Q, 1)
    assert quot == fq.trivial(2)
    for target in [fq.trivial(1), fq.trivial(2)]:
        for m in product(range(target.n), repeat=Q.n):
            try:
                f = fq.QuandleMorphism(Q, target, m)
            except ValueError:
                continue
            # 1-nilpotent target: map must be constant on cong classes
            for x in range(Q.n):
                for y in range(Q.n):
                    if cong.class_of[x] == cong.class_of[y]:
                        assert f.map[x] == f.map[y]


def test_universal_quotient_class_drops():
    Q = fq.conj_quandle(dihedral(4))
    cls = nil.nilpotency_class(Q)
    assert cls is not None and cls >= 2
    for c in range(1, cls + 1):
        quot, _ = nil.universal_nilpotent_quotient(Q, c)
        qcls = nil.nilpotency_class(quot)
        assert qcls is not None and qcls <= c


def test_covering_chain_structure(corpus):
    for Q in corpus:
        cls = nil.nilpotency_class(Q)
        if cls is None or Q.n > 8:
            continue
        chain = nil.covering_chain(Q)
        assert len(chain) == cls
        assert chain[0].source == Q
        assert chain[-1].target == fq.trivial(1)
        for arrow in chain:
            assert arrow.is_surjective()
            assert fq.is_covering(arrow), (Q.table, arrow.map)
        for a, b in zip(chain, chain[1:]):
            assert a.target == b.source


def test_conj_d8_has_class_3():
    Q = fq.conj_quandle(dihedral(8))
    assert nil.nilpotency_class(Q) == 3
    chain = nil.covering_chain(Q)
    assert len(chain) == 3
    sizes = [arrow.source.n for arrow in chain] + [1]
    assert sizes[0] == 16 and sizes[-2:] == [sizes[-2], 1]
    assert all(a >= b for a, b in zip(sizes, sizes[1:]))


def test_generation_criterion(corpus):
    """For nilpotent quandles: S generates iff it meets every orbit."""
    for Q in corpus:
        if Q.n > 5:
            continue
        if nil.nilpotency_class(Q) is not None:
            assert nil.check_generation_criterion(Q), Q.table
    # and the criterion can fail for non-nilpotent quandles: in conj(S3)
    # one element per conjugacy class need not generate
    s3 = fq.conj_quandle(symmetric3())
    found_gap = False
    k = fq.orbits(s3).num_classes
    from itertools import combinations

    for S in combinations(range(s3.n), k):
        if nil.meets_every_orbit(s3, S) and not nil.generates(s3, S):
            found_gap = True
            break
    # S3 is generated by any transposition + any 3-cycle, so here the
    # criterion actually holds; just check both predicates run
    assert found_gap or nil.check_generation_criterion(s3)


def test_residual_nilpotency(corpus):
    assert nil.residually_nilpotent(fq.q_mn(3, 4))
    assert not nil.residually_nilpotent(fq.conj_quandle(symmetric3()))
    for Q in corpus:
        if nil.nilpotency_class(Q) is not None:
            assert nil.residually_nilpotent(Q)


def test_surjectivity_criterion_matches_brute_force(corpus):
    for Q in corpus:
        if Q.n > 4:
            continue
        for target in (fq.trivial(2), fq.q_mn(2, 2)):
            for m in product(range(target.n), repeat=Q.n):
                try:
                    f = fq.QuandleMorphism(Q, target, m)
                except ValueError:
                    continue
                assert nil.surjectivity_criterion(f) == f.is_surjective()


def test_surjectivity_criterion_rejects_bad_target():
    s3 = fq.conj_quandle(symmetric3())
    f = fq.QuandleMorphism(s3, s3, range(s3.n))
    with pytest.raises(TargetNotNilpotent):
        nil.surjectivity_criterion(f)


def test_analyze_report():
    rep = nil.analyze(fq.q_mn(2, 3))
    assert rep.inn_order == 6
    assert rep.inn_class == 1
    assert rep.quandle_class == 2
    assert rep.reductive_class == 2
    assert rep.weak_class == 2
    assert rep.residually_nilpotent
    assert rep.covering_chain_lengths == [5, 2, 1]
    rep = nil.analyze(fq.conj_quandle(symmetric3()))
    assert rep.quandle_class is None
    assert rep.covering_chain_lengths == []
    assert not rep.residually_nilpotent
