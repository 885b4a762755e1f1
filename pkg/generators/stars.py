"""Stars and unions of stars on disjoint supports"""

import logging
import random
from math import comb
from typing import List

from family.models import DomainError, SetFamily
from generators.base import BaseGenerator, GeneratorFactory
from generators.models import GenSpec
from generators.sampling import make_rng, sample_subsets

logger = logging.getLogger(__name__)


def _star_members(support: List[int], s: int, u: int, count: int, rng: random.Random) -> List[List[int]]:
    """Members with core support[:u] plus distinct (s-u)-subsets of the rest"""
    core, rest = support[:u], support[u:]
    extensions = sample_subsets(len(rest), s - u, count, rng)
    return [core + [rest[i] for i in extension] for extension in extensions]


def gen_star(n: int, s: int, u: int, count: int, seed: int) -> SetFamily:
    """Members all containing the core {0, ..., u-1}; (2,u)-intersecting by construction"""
    if not 1 <= u <= s <= n:
        raise DomainError(f"star needs 1 <= u <= s <= n, got u={u} s={s} n={n}")
    available = comb(n - u, s - u)
    if count > available:
        raise DomainError(f"star on n={n} s={s} u={u} has only {available} members, asked {count}")
    members = _star_members(list(range(n)), s, u, count, make_rng(seed))
    return SetFamily.build(members, s=s, n=n)


def gen_scattered_stars(n: int, s: int, u: int, k: int, per_star: int, seed: int) -> SetFamily:
    """k-1 stars of ``per_star`` members on pairwise-disjoint blocks of [0, n).

    Two members of one star share the u-core, members of different stars are
    disjoint, so the family is (k,u)-intersecting and, for k >= 3 and
    per_star >= 1, not (k-1,u)-intersecting.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if not 1 <= u <= s:
        raise DomainError(f"u must satisfy 1 <= u <= s={s}, got {u}")
    stars = k - 1
    if n < stars * s:
        raise DomainError(f"{stars} disjoint supports of size {s} do not fit in n={n}")
    block = n // stars
    available = comb(block - u, s - u)
    if per_star > available:
        raise DomainError(f"a star on a block of {block} has only {available} members, asked {per_star}")

    rng = make_rng(seed)
    members: List[List[int]] = []
    for star in range(stars):
        support = list(range(star * block, (star + 1) * block))
        members.extend(_star_members(support, s, u, per_star, rng))
    logger.debug(f"Scattered stars: {stars} stars x {per_star} members on blocks of {block}")
    return SetFamily.build(members, s=s, n=n)


class StarGenerator(BaseGenerator):
    """Single star around a fixed u-core"""

    def generate(self, spec: GenSpec) -> SetFamily:
        return gen_star(spec.n, spec.s, spec.u, spec.count, spec.seed)


class ScatteredStarsGenerator(BaseGenerator):
    """k-1 far-apart stars"""

    def generate(self, spec: GenSpec) -> SetFamily:
        return gen_scattered_stars(spec.n, spec.s, spec.u, spec.k, spec.per_star, spec.seed)


GeneratorFactory.register_generator("star", StarGenerator)
GeneratorFactory.register_generator("scattered_stars", ScatteredStarsGenerator)
