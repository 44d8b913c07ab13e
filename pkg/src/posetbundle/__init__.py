"""Non-Abelian cohomology of finite posets with finite-group values:
simplicial sets, cochains, principal bundles as 1-cocycles, connections,
curvature, holonomy, and gauge transformations."""

from .cochains import (
    Cochain0,
    Cochain1,
    Cochain2,
    Cochain3,
    Morphism1,
    are_equivalent,
    associated_cocycle,
    classify_cocycles,
    coboundary,
    coboundary_from_assignment,
    enumerate_cocycles,
    enumerate_cocycles_raw,
    extend_to_path,
    find_morphism,
    is_cocycle,
    is_path_independent,
    pushforward,
    trivial_cochain1,
)
from .connections import (
    ambrose_singer_reduce,
    central_decompose,
    construct_from_cochain,
    construct_nonflat,
    curvature,
    enumerate_connections,
    holonomy,
    holonomy_conjugacy_check,
    induced_cocycle,
    is_central,
    is_connection,
    is_flat,
    restricted_holonomy,
    star_compose,
    star_inverse,
)
from .errors import PosetBundleError
from .gauge import GaugeTransformation, gauge_act, gauge_group
from .groups import (
    FiniteGroup,
    GroupHom,
    InnerAut,
    ad,
    compose_2g,
    compose_3g,
    cyclic_group,
    hom_compose,
    symmetric_group,
    trivial_group,
)
from .paths import (
    Path,
    Presentation,
    compose,
    count_hom_classes,
    deformations,
    homotopic,
    pi1_presentation,
    reverse_path,
)
from .poset import (
    Poset,
    build_poset,
    fundamental_open,
    generate,
    is_directed,
    is_pathwise_connected,
    is_totally_ordered,
)
from .simplicial import (
    Simplex0,
    Simplex1,
    Simplex2,
    Simplex3,
    boundary,
    degeneracy,
    enumerate_simplices,
    is_degenerate,
    is_inflating,
    permute2,
    reverse,
)

__version__ = "0.1.0"
