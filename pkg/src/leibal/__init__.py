"""Exact invariants of Leibniz algebras relative to the Liezation functor."""

__version__ = "0.1.0"

from .algebra import *  # noqa: F401,F403,E402
from .catalog import *  # noqa: F401,F403,E402
from .covers import *  # noqa: F401,F403,E402
from .extension import *  # noqa: F401,F403,E402
from .free import *  # noqa: F401,F403,E402
from .io import *  # noqa: F401,F403,E402
from .lie import *  # noqa: F401,F403,E402
from .linalg import GF, QQ, LinearMap, PrimeField, QuotientSpace, RationalField, Subspace, span  # noqa: F401,E402
from .multiplier import *  # noqa: F401,F403,E402
