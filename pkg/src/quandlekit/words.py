"""Free-group words as tuples of nonzero integers.

Letter +j stands for the generator x_j (1-indexed), -j for its inverse.
Used by the Magnus-expansion arithmetic, the welded-braid automorphisms,
and the CLI word parser ("x1 x2 x1^-1").
"""

import re

from .errors import ParseError

_TOKEN = re.compile(r"^x(\d+)(\^-1)?$")


def free_reduce(word):
    """Cancel adjacent inverse pairs until none remain."""
    out = []
    for l in word:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def invert(word):
    return tuple(-l for l in reversed(word))


def concat(*words):
    joined = []
    for w in words:
        joined.extend(w)
    return free_reduce(joined)


def conjugate(w, u):
    """w u w^-1, freely reduced."""
    return concat(w, u, invert(w))


def commutator(u, v):
    """[u, v] = u v u^-1 v^-1."""
    return concat(u, v, invert(u), invert(v))


def parse_word(text, n=None):
    """Parse "x1 x2 x1^-1" into a letter tuple; no free reduction."""
    letters = []
    for pos, tok in enumerate(text.split()):
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(pos + 1, f"bad word token {tok!r}")
        j = int(m.group(1))
        if j < 1 or (n is not None and j > n):
            raise ParseError(pos + 1, f"generator index {j} out of range")
        letters.append(-j if m.group(2) else j)
    return tuple(letters)


def format_word(word):
    if not word:
        return "1"
    return " ".join(f"x{l}" if l > 0 else f"x{-l}^-1" for l in word)
