"""Distance spectral radius and matching extendability toolkit."""

from .graph import (
    Graph,
    GraphFamilySpec,
    build,
    complete,
    configuration,
    diamond,
    empty,
    extremal_bipartite,
    extremal_factor_critical,
    extremal_general,
    is_connected,
    join,
    parse_graph6,
    union,
    write_graph6,
)
from .iso import canonical_form
from .spectrum import distance_matrix, spectral_radius

__version__ = "0.1.0"
