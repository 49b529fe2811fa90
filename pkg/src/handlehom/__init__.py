"""Handle homology of manifolds from combinatorial handle decompositions."""

from .catalog import CatalogEntry, catalog
from .core import (
    ChainComplex,
    HandleDecomposition,
    OrientationMode,
    Ring,
    SignConvention,
    ValidationReport,
    build_complex,
    euler_characteristic,
    validate,
)
from .duality import DualityReport, check_duality, dual_decomposition
from .errors import *  # noqa: F401,F403
from .homology import (
    AbelianGroup,
    HomologyProfile,
    Orientability,
    classify_orientability,
    cohomology,
    homology,
)
from .linalg import IntegerMatrix, SnfResult, rank_mod2, snf
from .moves import (
    Cancel,
    CreatePair,
    MoveJournal,
    ReorientHandle,
    Slide,
    cancel,
    create_pair,
    fuzz_moves,
    reorient_handle,
    slide,
)
from .textio import (
    parse,
    parse_journal,
    parse_report,
    serialize,
    serialize_journal,
    serialize_report,
)

__version__ = "0.1.0"
