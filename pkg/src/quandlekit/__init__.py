"""Computational algebra for finite racks and quandles."""

__version__ = "0.1.0"

from .finite_quandle import (  # noqa: F401
    FiniteRack,
    QuandleMorphism,
    Congruence,
    validate,
    trivial,
    q_mn,
    q_12,
    conj_quandle,
)
from .errors import QuandlekitError  # noqa: F401
