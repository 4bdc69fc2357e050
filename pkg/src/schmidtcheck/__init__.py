"""Finite-group engine for Schmidt subgroups, modularity and subnormality,
with exhaustive checks of the related theorem and lemmas on small groups."""

__version__ = "0.1.0"

from .groups import (  # noqa: E402
    CapacityError,
    GroupConstructionError,
    GroupTable,
    SemidirectSpec,
    closure_from_generators,
    direct_product,
    element_order,
    semidirect_product,
)
from .lattice import Subgroup, SubgroupLattice, enumerate_subgroups  # noqa: E402
from .catalog import build_named, builtin_catalog, parse_generator_file  # noqa: E402
from .verify import VerifyConfig, scan_catalog, verify_theorem1  # noqa: E402
