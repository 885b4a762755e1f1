"""Generator dispatch by GenSpec kind"""

import logging

from family.models import DomainError, SetFamily
from generators.base import GeneratorFactory
from generators.models import GenSpec

# Import generator modules to register them
import generators.random_family  # noqa: F401
import generators.stars  # noqa: F401
import generators.sunflower  # noqa: F401

logger = logging.getLogger(__name__)


def generate(spec: GenSpec) -> SetFamily:
    """Run the registered generator for ``spec.kind``"""
    generator = GeneratorFactory.create_generator(spec.kind)
    if generator is None:
        raise DomainError(f"no generator registered for kind '{spec.kind}'")
    family = generator.generate(spec)
    logger.info(f"{generator.name} produced {len(family)} members (s={family.s}, n={family.n})")
    return family
