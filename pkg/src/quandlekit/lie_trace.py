"""Free Lie ring elements, tangential derivations, and their trace.

Lie elements are stored as tensor expansions (dict word -> int); Lie-ness
of a homogeneous degree-k element u is checked with the Dynkin criterion
delta(u) = k*u, where delta brackets each word left to right.  The trace
of a tangential derivation d(x_i) = [x_i, l_i] contracts the leading x_i
of each word and projects the remainder to cyclic words; a nonzero trace
certifies an automorphism of the free nilpotent quandle that no
generator-level (tame) automorphism induces.
"""

from .errors import InvalidRange
from .magnus import poly_add, poly_mul, poly_scale

_NO_LIMIT = 1 << 30


class TensorElt:
    """Integer combination of words over X_1..X_n, no truncation."""

    def __init__(self, n, coeffs):
        self.n = n
        self.coeffs = {tuple(w): v for w, v in coeffs.items() if v}

    @classmethod
    def gen(cls, i, n):
        return cls(n, {(i,): 1})

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    def is_zero(self):
        return not self.coeffs

    def degrees(self):
        return sorted(set(len(w) for w in self.coeffs))

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        return degs[0] if degs else None

    def add(self, other):
        return TensorElt(self.n, poly_add(self.coeffs, other.coeffs))

    def scale(self, s):
        return TensorElt(self.n, poly_scale(self.coeffs, s))

    def mul(self, other):
        return TensorElt(self.n, poly_mul(self.coeffs, other.coeffs, _NO_LIMIT))

    def __eq__(self, other):
        return isinstance(other, TensorElt) and self.coeffs == other.coeffs

    def __repr__(self):
        terms = sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))
        body = " + ".join(
            f"{v}*{'.'.join('X%d' % g for g in w)}" for w, v in terms
        )
        return f"<TensorElt {body or '0'}>"


def lie_bracket(a, b):
    """ab - ba."""
    return a.mul(b).add(b.mul(a).scale(-1))


def left_nested_bracket(elts):
    """[g1, [g2, [..., g_m]]]."""
    if not elts:
        raise ValueError("need at least one element")
    out = elts[-1]
    for g in reversed(elts[:-1]):
        out = lie_bracket(g, out)
    return out


def _left_normed_word(word, n):
    """[[..[X_w1, X_w2], ..], X_wk]."""
    out = TensorElt.gen(word[0], n)
    for i in word[1:]:
        out = lie_bracket(out, TensorElt.gen(i, n))
    return out


def dynkin(u):
    """Left-to-right bracketing applied word by word."""
    out = TensorElt.zero(u.n)
    for word, coeff in u.coeffs.items():
        out = out.add(_left_normed_word(word, u.n).scale(coeff))
    return out


def is_lie(u):
    """Dynkin criterion: homogeneous u of degree k is Lie iff delta(u) = k*u."""
    if u.is_zero():
        return True
    if not u.is_homogeneous():
        return False
    k = u.degree()
    if k == 1:
        return True
    return dynkin(u) == u.scale(k)


class TangentialDerivation:
    """d(x_i) = [x_i, l_i] with each l_i a degree-k Lie element (or zero)."""

    def __init__(self, n, k, ls):
        if len(ls) != n:
            raise ValueError("need one l_i per generator")
        for i, l in enumerate(ls):
            if l.is_zero():
                continue
            if l.degree() != k or not l.is_homogeneous():
                raise ValueError(f"l_{i + 1} is not homogeneous of degree {k}")
            if not is_lie(l):
                raise ValueError(f"l_{i + 1} is not a Lie element")
        self.n = n
        self.k = k
        self.ls = list(ls)

    def image(self, i):
        """d(x_i), a degree-(k+1) tensor."""
        return lie_bracket(TensorElt.gen(i, self.n), self.ls[i - 1])


def cyclic_canonical(word):
    """Lexicographically minimal rotation."""
    return min(tuple(word[r:]) + tuple(word[:r]) for r in range(len(word)))


class CyclicWord:
    """Integer combination of necklaces (length-k words modulo rotation)."""

    def __init__(self, n, k, coeffs):
        self.n = n
        self.k = k
        self.coeffs = {}
        for w, v in coeffs.items():
            if not v:
                continue
            key = cyclic_canonical(w)
            nv = self.coeffs.get(key, 0) + v
            if nv:
                self.coeffs[key] = nv
            elif key in self.coeffs:
                del self.coeffs[key]

    def coefficient(self, word):
        return self.coeffs.get(cyclic_canonical(word), 0)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, CyclicWord)
            and (self.n, self.k) == (other.n, other.k)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = sorted(self.coeffs.items())
        body = " + ".join(
            f"{v}*({' '.join('x%d' % g for g in w)})" for w, v in terms
        )
        return f"<CyclicWord {body or '0'}>"


def trace(d):
    """Contract the leading generator of each d(x_i) and close up cyclically."""
    coeffs = {}
    for i in range(1, d.n + 1):
        for word, coeff in d.image(i).coeffs.items():
            if word[0] != i:
                continue
            key = cyclic_canonical(word[1:])
            coeffs[key] = coeffs.get(key, 0) + coeff
    return CyclicWord(d.n, d.k, coeffs)


def single_contraction_derivation(n, i, indices):
    """d(x_i) = [x_i, [x_{j1}, [..., [x_{jl}, x_i]]]], all other images zero.

    Closed-form trace: the single necklace x_{jl} ... x_{j1} x_i with
    coefficient (-1)^(l+1).  The Lie part of the contraction dies in the
    cyclic quotient; only the word with x_i leading survives, picking up
    one sign per bracket layer.
    """
    gens = [TensorElt.gen(j, n) for j in indices] + [TensorElt.gen(i, n)]
    l = left_nested_bracket(gens)
    k = len(indices) + 1
    ls = [TensorElt.zero(n) for _ in range(n)]
    ls[i - 1] = l
    return TangentialDerivation(n, k, ls)


def contraction_closed_form(i, indices):
    """Expected trace of single_contraction_derivation: (word, coefficient)."""
    word = tuple(reversed(indices)) + (i,)
    sign = 1 if len(indices) % 2 == 1 else -1
    return word, sign


def non_tame_witness(n, c):
    """A derivation of degree k = c-1 with provably nonzero trace.

    Every tame automorphism of the free c-nilpotent quandle has zero
    trace in degrees 2 <= k < c, so this witnesses a non-tame one.
    """
    if n < 2 or c < 3:
        raise InvalidRange("no non-tame automorphisms for n < 2 or c < 3")
    k = c - 1
    indices = [((j % (n - 1)) + 2) for j in range(k - 1)]
    d = single_contraction_derivation(n, 1, indices)
    t = trace(d)
    word, sign = contraction_closed_form(1, indices)
    assert t.coefficient(word) == sign and len(t.coeffs) == 1
    return d, t
