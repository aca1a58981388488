"""Coset constructions of racks and quandles from finite groups.

Given a group G with subgroups H_i and elements z_i, the disjoint union
of the coset spaces G/H_i carries the law xH_i |> yH_j = x z_i x^-1 yH_j
whenever the action of each H_i commutes with z_i everywhere; z_i in H_i
upgrades the rack to a quandle.  Presentation data for the enveloping
group (one generator per orbit, commutator relators from stabilizer
words) is emitted from any finite quandle with a generating transversal.
"""

from dataclasses import dataclass

import numpy as np

from . import finite_quandle as fq
from .errors import InvalidData, InvalidGroup, NotGeneratedByTransversal
from .finite_quandle import validate_cayley
from .words import free_reduce, invert

__all__ = [
    "GroupData",
    "PresentationData",
    "validate_data",
    "build",
    "emit_presentation",
    "parse_group_data",
    "load_group_data",
    "dump_presentation",
]


class GroupData:
    """Finite group (Cayley table) with chosen subgroups H_i and elements z_i."""

    def __init__(self, cayley, Hs, zs):
        self.cayley = [list(map(int, row)) for row in cayley]
        self.identity, self.inv = validate_cayley(self.cayley)
        g = len(self.cayley)
        if len(Hs) != len(zs):
            raise InvalidGroup("need one z element per subgroup")
        self.Hs = []
        for H in Hs:
            elems = sorted(set(int(h) for h in H))
            if any(h < 0 or h >= g for h in elems):
                raise InvalidGroup("subgroup element out of range")
            if self.identity not in elems:
                raise InvalidGroup("subgroup missing the identity")
            for a in elems:
                for b in elems:
                    if self.cayley[a][b] not in elems:
                        raise InvalidGroup(f"subgroup not closed at ({a},{b})")
                if self.inv[a] not in elems:
                    raise InvalidGroup(f"subgroup missing inverse of {a}")
            self.Hs.append(elems)
        self.zs = [int(z) for z in zs]
        if any(z < 0 or z >= g for z in self.zs):
            raise InvalidGroup("z element out of range")

    def mul(self, a, b):
        return self.cayley[a][b]

    def conj(self, a, b):
        """a b a^-1."""
        return self.mul(self.mul(a, b), self.inv[a])

    def coset_rep(self, y, i):
        """Canonical (minimal) element of y H_i."""
        return min(self.mul(y, h) for h in self.Hs[i])


@dataclass
class PresentationData:
    generators: list
    relators: list


def validate_data(D, rack_mode=False):
    """Check the construction conditions; returns (ok, witness).

    Condition 1: for each i, every commutator [h, z_i] with h in H_i acts
    trivially on every coset space G/H_j.  Quandle mode adds z_i in H_i.
    """
    g = len(D.cayley)
    for i, (H, z) in enumerate(zip(D.Hs, D.zs)):
        if not rack_mode and z not in H:
            return False, ("z_not_in_H", i)
        for h in H:
            comm = D.mul(D.mul(h, z), D.inv[D.mul(z, h)])
            if comm == D.identity:
                continue
            for j in range(len(D.Hs)):
                for y in range(g):
                    moved = D.mul(comm, y)
                    if D.coset_rep(moved, j) != D.coset_rep(y, j):
                        return False, ("noncommuting", i, h, j, y)
    return True, None


def build(D, rack_mode=False, cap=10**6):
    """Rack/quandle on the disjoint union of the coset spaces."""
    ok, witness = validate_data(D, rack_mode)
    if not ok:
        raise InvalidData(witness)
    g = len(D.cayley)
    labels = []
    index = {}
    for i in range(len(D.Hs)):
        for y in range(g):
            rep = D.coset_rep(y, i)
            if (i, rep) not in index:
                index[(i, rep)] = len(labels)
                labels.append((i, rep))
    size = len(labels)
    if size > cap:
        from .errors import CapExceeded

        raise CapExceeded(cap)
    table = np.empty((size, size), dtype=np.int64)
    for a, (i, x) in enumerate(labels):
        zi_conj = D.conj(x, D.zs[i])
        for b, (j, y) in enumerate(labels):
            table[a, b] = index[(j, D.coset_rep(D.mul(zi_conj, y), j))]
    return fq.validate(table, require_quandle=not rack_mode), labels


def emit_presentation(Q):
    """Enveloping-group presentation data from orbit representatives.

    Generators are one symbol per orbit; relators are the commutators
    [h, x_s] where h runs over Schreier words generating the stabilizer
    of the s-th representative inside the permutation image.
    """
    cong = fq.orbits(Q)
    classes = cong.classes()
    reps = [cls[0] for cls in classes]
    k = len(reps)
    if Q.n and len(fq.subquandle_generated(Q, reps)) != Q.n:
        raise NotGeneratedByTransversal("orbit representatives do not generate")
    # letter +s / -s acts by the row of reps[s-1] or its inverse
    rows = [Q.row(r) for r in reps]

    def apply_letter(letter, point):
        if letter > 0:
            return rows[letter - 1][point]
        return rows[-letter - 1].index(point)

    relators = []
    seen = set()
    for s in range(1, k + 1):
        q0 = reps[s - 1]
        word_to = {q0: ()}
        frontier = [q0]
        while frontier:
            nxt = []
            for p in frontier:
                for letter in [l for t in range(1, k + 1) for l in (t, -t)]:
                    p2 = apply_letter(letter, p)
                    candidate = free_reduce((letter,) + word_to[p])
                    if p2 in word_to:
                        stab = free_reduce(invert(word_to[p2]) + candidate)
                        if stab:
                            relator = free_reduce(
                                stab + (s,) + invert(stab) + (-s,)
                            )
                            if relator and relator not in seen:
                                seen.add(relator)
                                relators.append(relator)
                    else:
                        word_to[p2] = candidate
                        nxt.append(p2)
            frontier = nxt
    return PresentationData(
        generators=[f"x{s}" for s in range(1, k + 1)], relators=relators
    )


# -- file format ----------------------------------------------------------------

def parse_group_data(text):
    """Group data file: Cayley block, then subgroup lists, then z list.

    Layout: line 1 = group order g; g Cayley rows; one line k = number of
    subgroups; k lines of subgroup elements; one line of k z-elements.
    """
    from .errors import ParseError

    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((line, lineno))
    if not rows:
        raise ParseError(1, "empty group data file")
    pos = 0

    def take_ints(expected=None):
        nonlocal pos
        if pos >= len(rows):
            raise ParseError(rows[-1][1], "unexpected end of file")
        line, lineno = rows[pos]
        pos += 1
        try:
            vals = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {line!r}")
        if expected is not None and len(vals) != expected:
            raise ParseError(lineno, f"expected {expected} integers")
        return vals

    g = take_ints(expected=1)[0]
    cayley = [take_ints(expected=g) for _ in range(g)]
    k = take_ints(expected=1)[0]
    Hs = [take_ints() for _ in range(k)]
    zs = take_ints(expected=k)
    return GroupData(cayley, Hs, zs)


def load_group_data(path):
    with open(path) as fh:
        return parse_group_data(fh.read())


def dump_presentation(P):
    from .words import format_word

    lines = [" ".join(P.generators)]
    for rel in P.relators:
        lines.append(format_word(rel))
    return "\n".join(lines) + "\n"
