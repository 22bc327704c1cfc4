"""Pretorsion theories and their stable categories, computed on finite instances."""
from .category import ComplementedSub, FiniteObj, Mor, compose, coproduct, homs, identity
from .endo import EndoObj, EndoTheory
from .errors import StabcatError
from .preord import FinSetTheory, PreordObj, PreordTheory, chain, closure, codiscrete, discrete
from .pretorsion import CanonicalSequence, canonical_sequence
from .stable import PartialMor, StableCategory, StableMor
from .theory import Theory
from .universality import FiniteTTCategory, FunctorTable, induced_H, tabulate_stab

__all__ = [
    "CanonicalSequence", "ComplementedSub", "EndoObj", "EndoTheory", "FinSetTheory", "FiniteObj",
    "FiniteTTCategory", "FunctorTable", "Mor", "PartialMor", "PreordObj", "PreordTheory",
    "StabcatError", "StableCategory", "StableMor", "Theory", "canonical_sequence", "chain",
    "closure", "codiscrete", "compose", "coproduct", "discrete", "homs", "identity", "induced_H",
    "tabulate_stab",
]
