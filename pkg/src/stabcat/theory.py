"""The hooks a pretorsion theory provides to the generic machinery."""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .category import FiniteObj, Mor, restrict_mor

DEFAULT_PROBE_BOUND = 3


def probe_bound(max_n: int | None = None) -> int:
    """Carrier bound for oracle probes; ``STABCAT_MAX_PROBE`` overrides the default."""
    if max_n is not None:
        return max_n
    return int(os.environ.get("STABCAT_MAX_PROBE", DEFAULT_PROBE_BOUND))


@dataclass(frozen=True)
class Factorization:
    """``second . first`` through a trivial ``middle`` object."""

    middle: FiniteObj
    first: Mor
    second: Mor


class Theory:
    """A pretorsion theory ``(T, F)`` on one instance category.

    Subclasses supply the predicates and the constructions; ``Z`` is always
    ``T`` intersected with ``F``.
    """

    name = "?"
    obj_type: type[FiniteObj] = FiniteObj

    def _enumerate(self, n: int) -> Iterator[FiniteObj]:
        raise NotImplementedError

    def random_object(self, rng: random.Random, n: int) -> FiniteObj:
        raise NotImplementedError

    def is_torsion(self, X: FiniteObj) -> bool:
        raise NotImplementedError

    def is_torsionfree(self, X: FiniteObj) -> bool:
        raise NotImplementedError

    def trivial_witness(self, f: Mor) -> Factorization | None:
        raise NotImplementedError

    def torsion_part(self, X: FiniteObj) -> tuple[FiniteObj, Mor]:
        raise NotImplementedError

    def torsionfree_part(self, X: FiniteObj) -> tuple[FiniteObj, Mor]:
        raise NotImplementedError

    def z_kernel(self, f: Mor) -> Mor:
        raise NotImplementedError

    def z_cokernel(self, f: Mor) -> Mor:
        raise NotImplementedError

    # -- derived ----------------------------------------------------------
    @lru_cache(maxsize=None)
    def objects(self, max_n: int) -> tuple[FiniteObj, ...]:
        """Every object with carrier at most ``max_n``, smallest first."""
        return tuple(X for n in range(max_n + 1) for X in self._enumerate(n))

    def is_trivial_obj(self, X: FiniteObj) -> bool:
        return self.is_torsion(X) and self.is_torsionfree(X)

    def is_trivial_mor(self, f: Mor) -> bool:
        return self.trivial_witness(f) is not None

    def is_trivial_on(self, f: Mor, members) -> bool:
        return self.is_trivial_mor(restrict_mor(f, members))

    def empty(self) -> FiniteObj:
        return self.obj_type.empty()

    def terminal(self) -> FiniteObj:
        return self.obj_type.point()

    def __repr__(self):
        return f"<theory {self.name}>"
