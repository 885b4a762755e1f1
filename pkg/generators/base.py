"""Base generator interface and factory"""

from abc import ABC, abstractmethod
from typing import Dict, Optional
import logging

from family.models import SetFamily
from generators.models import GenSpec

logger = logging.getLogger(__name__)


class BaseGenerator(ABC):
    """Abstract base class for seeded family generators"""

    def __init__(self):
        self.name = self.__class__.__name__

    @abstractmethod
    def generate(self, spec: GenSpec) -> SetFamily:
        """
        Build the family described by a GenSpec

        Args:
            spec: Validated generator specification of this generator's kind

        Returns:
            Canonical SetFamily, identical for identical specs

        Raises:
            DomainError: If the requested sizes are infeasible
        """
        pass


class GeneratorFactory:
    """Factory for generator instances keyed by GenSpec.kind"""

    _generators: Dict[str, type[BaseGenerator]] = {}

    @classmethod
    def register_generator(cls, kind: str, generator_class: type[BaseGenerator]):
        """Register a generator implementation"""
        cls._generators[kind] = generator_class
        logger.debug(f"Registered generator: {kind}")

    @classmethod
    def create_generator(cls, kind: str) -> Optional[BaseGenerator]:
        """Create generator instance by kind"""
        generator_class = cls._generators.get(kind)
        if not generator_class:
            logger.error(f"Unknown generator kind: {kind}")
            return None

        return generator_class()

    @classmethod
    def list_generators(cls) -> list[str]:
        """List registered generator kinds"""
        return list(cls._generators.keys())
