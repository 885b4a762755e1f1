"""Sunflowers: a common core with pairwise-disjoint petals"""

from family.models import DomainError, SetFamily
from generators.base import BaseGenerator, GeneratorFactory
from generators.models import GenSpec
from generators.sampling import make_rng


def gen_sunflower(core_size: int, petal_size: int, petals: int, seed: int) -> SetFamily:
    """Sunflower on a ground set of core_size + petals * petal_size elements.

    Any two members meet exactly in the core. The seed only relabels the
    ground set.
    """
    if core_size < 0 or petal_size < 0 or core_size + petal_size < 1:
        raise DomainError(f"need core_size + petal_size >= 1, got {core_size} + {petal_size}")
    if petals < 1:
        raise DomainError(f"petals must be >= 1, got {petals}")
    n = core_size + petals * petal_size
    labels = list(range(n))
    make_rng(seed).shuffle(labels)
    core = labels[:core_size]
    members = [
        core + labels[core_size + j * petal_size: core_size + (j + 1) * petal_size]
        for j in range(petals)
    ]
    return SetFamily.build(members, s=core_size + petal_size, n=n)


class SunflowerGenerator(BaseGenerator):
    """Sunflower with relabeled ground set"""

    def generate(self, spec: GenSpec) -> SetFamily:
        return gen_sunflower(spec.core_size, spec.petal_size, spec.petals, spec.seed)


GeneratorFactory.register_generator("sunflower", SunflowerGenerator)
