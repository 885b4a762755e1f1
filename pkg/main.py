"""
kufam - Unified Main Entry Point
Decomposition, exact oracles, generators and experiments for (k,u)-intersecting families
"""
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent))

# Load .env early so KUFAM_* overrides reach the settings object
from dotenv import load_dotenv
load_dotenv()

from pydantic import ValidationError

from config.settings import settings, setup_logging, validate_settings
from family.models import (
    CapacityError, DomainError, InvariantViolation, KufamError, NotIntersectingError, ParseError,
    StructureError,
)
from harness import cli
from harness.commands import EXIT_CAPACITY, EXIT_INVARIANT, EXIT_NEGATIVE, EXIT_USAGE

logger = logging.getLogger(__name__)


def _fail(err: TextIO, code: int, message: str) -> int:
    err.write(f"kufam: {message}\n")
    return code


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """Parse ``argv``, run the command and map failures onto exit codes.

    0 success, 1 semantic negative, 2 usage or parse error, 3 capacity cap
    exceeded, 4 invariant violation.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = cli.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if not validate_settings():
        return _fail(err, EXIT_USAGE, "invalid KUFAM_* settings")
    setup_logging(args.log_level)
    logger.info(f"Running '{args.cmd}' (workers={settings.workers})")

    try:
        return cli.dispatch(args, out)
    except NotIntersectingError as e:
        return _fail(err, EXIT_NEGATIVE, str(e))
    except CapacityError as e:
        logger.warning(f"Capacity exceeded: {e}")
        return _fail(err, EXIT_CAPACITY, str(e))
    except InvariantViolation as e:
        logger.error(f"Invariant violation: {e}")
        return _fail(err, EXIT_INVARIANT, str(e))
    except (ParseError, DomainError, StructureError, ValidationError, OverflowError, MemoryError, OSError) as e:
        return _fail(err, EXIT_USAGE, str(e))
    except KufamError as e:
        logger.error(f"Unhandled toolkit error: {e}")
        return _fail(err, EXIT_INVARIANT, str(e))


if __name__ == "__main__":
    sys.exit(run())
