"""Nilpotency invariants of finite racks and quandles.

Two independent routes to the same invariant: the group route (lower
central series of the inner group) and the identity route (reductivity
tuple scans).  Universal nilpotent quotients, covering chains, the
orbit generation criterion, and residual nilpotency sit on top.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from . import finite_quandle as fq
from . import kernels, permgroup
from .errors import NotNilpotent, TargetNotNilpotent
from .permgroup import DEFAULT_CAP, PermGroup

MAX_SCAN_CLASS = 6


@dataclass
class NilpotencyReport:
    inn_order: int
    inn_class: Optional[int]
    quandle_class: Optional[int]
    reductive_class: Optional[int]
    weak_class: Optional[int]
    residually_nilpotent: bool
    covering_chain_lengths: list


def inn_group(Q, cap=DEFAULT_CAP):
    """Permutation group generated by the rows of Q."""
    return PermGroup(Q.n, Q.inner_generators(), cap=cap)


def nilpotency_class(Q, cap=DEFAULT_CAP):
    """Least c with Gamma_c(Inn Q) trivial, or None if Inn Q not nilpotent."""
    inn_cls = permgroup.nilpotency_class(inn_group(Q, cap))
    if inn_cls is None:
        return None
    return inn_cls + 1


def c_reductive_witness(Q, c):
    """A (c+1)-tuple violating the c-reductivity identity, or None."""
    return kernels.reductive_witness(Q.table, c)


def is_c_reductive(Q, c):
    """Left-iterated products of length c+1 forget their first argument."""
    return c_reductive_witness(Q, c) is None


def weak_witness(Q, c):
    """A tuple (x1, x1', x2..x_{c+1}) breaking weak c-nilpotency, or None."""
    return kernels.weak_witness(Q.table, c)


def is_weakly_c_nilpotent(Q, c):
    return weak_witness(Q, c) is None


def reductive_class(Q, max_c=MAX_SCAN_CLASS):
    """Least c <= max_c with is_c_reductive, or None."""
    for c in range(1, max_c + 1):
        if is_c_reductive(Q, c):
            return c
    return None


def weak_class(Q, max_c=MAX_SCAN_CLASS):
    for c in range(1, max_c + 1):
        if is_weakly_c_nilpotent(Q, c):
            return c
    return None


def gamma(G, c):
    """Gamma_c of a permutation group (series stabilizes on finite groups)."""
    series = permgroup.lower_central_series(G)
    return series[min(c - 1, len(series) - 1)]


def universal_nilpotent_quotient(Q, c, cap=DEFAULT_CAP):
    """Quotient by the orbits of Gamma_c(Inn Q); universal c-nilpotent image."""
    G = gamma(inn_group(Q, cap), c)
    return fq.quotient_by_subgroup(Q, G)


def covering_chain(Q, cap=DEFAULT_CAP):
    """Morphisms Q = Q/Gamma_c ->> ... ->> Q/Gamma_1 ->> point, all coverings."""
    c = nilpotency_class(Q, cap)
    if c is None:
        raise NotNilpotent("inner group is not nilpotent")
    quotients = []
    congs = []
    for i in range(c, 0, -1):
        quot, cong = universal_nilpotent_quotient(Q, i, cap)
        quotients.append(quot)
        congs.append(cong)
    arrows = []
    for k in range(len(quotients) - 1):
        src, dst = quotients[k], quotients[k + 1]
        fine, coarse = congs[k], congs[k + 1]
        image = [None] * src.n
        for x in range(Q.n):
            image[fine.class_of[x]] = coarse.class_of[x]
        arrows.append(fq.QuandleMorphism(src, dst, image))
    point = fq.trivial(1)
    last = quotients[-1]
    arrows.append(fq.QuandleMorphism(last, point, [0] * last.n))
    return arrows


def generates(Q, S):
    """Does S generate Q under the law and its inverse?"""
    if Q.n == 0:
        return True
    return len(fq.subquandle_generated(Q, S)) == Q.n


def meets_every_orbit(Q, S):
    cong = fq.orbits(Q)
    return set(cong.class_of[s] for s in S) == set(range(cong.num_classes))


def check_generation_criterion(Q):
    """Generation == one element per orbit, over all small subsets."""
    k = fq.orbits(Q).num_classes
    max_size = min(Q.n, k + 1)
    for size in range(1, max_size + 1):
        for S in combinations(range(Q.n), size):
            if generates(Q, S) != meets_every_orbit(Q, S):
                return False
    return True


def residually_nilpotent(Q, cap=DEFAULT_CAP):
    """Do the nilpotent quotients eventually separate all pairs?"""
    series = permgroup.lower_central_series(inn_group(Q, cap))
    stable = series[-1]
    _, cong = fq.quotient_by_subgroup(Q, stable)
    return cong.is_identity()


def surjectivity_criterion(f, cap=DEFAULT_CAP):
    """Surjectivity read off on orbit sets; valid for nilpotent targets."""
    if nilpotency_class(f.target, cap) is None:
        raise TargetNotNilpotent("criterion requires a nilpotent target")
    dst_orbits = fq.orbits(f.target)
    hit = set(dst_orbits.class_of[f.map[x]] for x in range(f.source.n))
    return hit == set(range(dst_orbits.num_classes))


def analyze(Q, cap=DEFAULT_CAP, max_c=MAX_SCAN_CLASS):
    G = inn_group(Q, cap)
    inn_cls = permgroup.nilpotency_class(G)
    q_cls = None if inn_cls is None else inn_cls + 1
    chain_lengths = []
    if q_cls is not None:
        chain_lengths = [arrow.source.n for arrow in covering_chain(Q, cap)]
        chain_lengths.append(1)
    return NilpotencyReport(
        inn_order=G.order(),
        inn_class=inn_cls,
        quandle_class=q_cls,
        reductive_class=reductive_class(Q, max_c),
        weak_class=weak_class(Q, max_c),
        residually_nilpotent=residually_nilpotent(Q, cap),
        covering_chain_lengths=chain_lengths,
    )
