"""Uniform random and complete families"""

from itertools import combinations

from family.models import DomainError, SetFamily
from generators.base import BaseGenerator, GeneratorFactory
from generators.models import GenSpec
from generators.sampling import make_rng, sample_subsets


def gen_random(n: int, s: int, count: int, seed: int) -> SetFamily:
    """``count`` distinct uniform s-subsets of [0, n)"""
    if n < 1 or s < 1:
        raise DomainError(f"n and s must be positive, got n={n} s={s}")
    members = sample_subsets(n, s, count, make_rng(seed))
    return SetFamily.build(members, s=s, n=n)


def gen_complete(n: int, s: int) -> SetFamily:
    """All C(n, s) s-subsets of [0, n)"""
    if n < 1 or s < 1:
        raise DomainError(f"n and s must be positive, got n={n} s={s}")
    return SetFamily.build(combinations(range(n), s), s=s, n=n)


class RandomGenerator(BaseGenerator):
    """Floyd-sampled random family"""

    def generate(self, spec: GenSpec) -> SetFamily:
        return gen_random(spec.n, spec.s, spec.count, spec.seed)


class CompleteGenerator(BaseGenerator):
    """Every s-subset of the ground set"""

    def generate(self, spec: GenSpec) -> SetFamily:
        return gen_complete(spec.n, spec.s)


GeneratorFactory.register_generator("random", RandomGenerator)
GeneratorFactory.register_generator("complete", CompleteGenerator)
