"""Seeded generators for randomized suites."""
from __future__ import annotations

import random

from .category import FiniteObj, Mor, homs, random_hom
from .stable import PartialMor, _component_objs
from .theory import Theory


def random_partial(theory: Theory, X: FiniteObj, Y: FiniteObj, rng: random.Random,
                   keep: float = 0.7) -> PartialMor:
    """Each component of ``X`` is kept with probability ``keep`` and sent anywhere legal."""
    padded: list = [None] * X.n
    for comp, obj in zip(X.components, _component_objs(X)):
        options = homs(obj, Y)
        if options and rng.random() < keep:
            # Mostly non-trivial pieces; trivial ones vanish on reduction anyway.
            lively = [f for f in options if not theory.is_trivial_mor(f)]
            pool = lively if lively and rng.random() < 0.8 else options
            for x, v in zip(comp, rng.choice(pool).table):
                padded[x] = v
    return PartialMor.from_padded(X, Y, padded)


def perturb_partial(theory: Theory, p: PartialMor, rng: random.Random) -> PartialMor:
    """A partial morphism that often, but not always, is congruent to ``p``.

    Per component: keep, drop, swap for a trivial map, or swap for any map.
    """
    X, Y = p.src, p.dst
    padded = list(p.padded)
    for comp, obj in zip(X.components, _component_objs(X)):
        move = rng.choice(("keep", "keep", "drop", "trivial", "any"))
        if move == "drop":
            for x in comp:
                padded[x] = None
        elif move in ("trivial", "any"):
            options = homs(obj, Y)
            if move == "trivial":
                options = [f for f in options if theory.is_trivial_mor(f)]
            if options:
                for x, v in zip(comp, rng.choice(options).table):
                    padded[x] = v
    return PartialMor.from_padded(X, Y, padded)


def lively_object(theory: Theory, rng: random.Random, max_n: int, tries: int = 10) -> FiniteObj:
    """A random object, redrawn a few times while it is trivial (those make every map vanish)."""
    for _ in range(tries):
        X = theory.random_object(rng, rng.randint(1, max_n))
        if not theory.is_trivial_obj(X):
            break
    return X


def random_parallel_pair(theory: Theory, rng: random.Random, max_src: int = 6,
                         max_dst: int = 4) -> tuple[PartialMor, PartialMor]:
    X = lively_object(theory, rng, max_src)
    Y = lively_object(theory, rng, max_dst)
    p1 = random_partial(theory, X, Y, rng)
    if rng.random() < 0.3:
        return p1, random_partial(theory, X, Y, rng)
    return p1, perturb_partial(theory, p1, rng)


def random_mor(theory: Theory, rng: random.Random, max_n: int = 5, tries: int = 20) -> Mor:
    """A random morphism between random objects; falls back to an identity."""
    for _ in range(tries):
        X = theory.random_object(rng, rng.randint(0, max_n))
        Y = theory.random_object(rng, rng.randint(1, max_n))
        f = random_hom(X, Y, rng)
        if f is not None:
            return f
    X = theory.random_object(rng, rng.randint(0, max_n))
    return Mor.trusted(X, X, range(X.n))
