"""Exact symbolic toolkit for rigid Sullivan algebras.

Builds two families of minimal models (a rigid six-generator family and a
graph-indexed family realizing any finite automorphism group), verifies
the integer lemmas behind them, computes monoids of self-map homotopy
classes, and certifies ellipticity, formal dimensions and strong
chirality.  All arithmetic is exact over the rationals.
"""

from .arithmetic import (
    DegreeScheme,
    dioph_no_solution_check,
    dioph_solve,
    gcd_identity_check,
    isolation_check,
    table1_check,
    table2_check,
)
from .core import (
    CDGA,
    Generator,
    Polynomial,
    apply_differential,
    basis_of_degree,
    cdga_from_json,
    cdga_to_json,
    check_d_squared,
    coboundary_preimage,
    multiply,
)
from .endo import (
    EndoClass,
    MonoidReport,
    degree_of,
    distinct_homotopy_classes,
    induced_map,
    solve_graph,
    solve_rigid,
    tilde_monoid,
)
from .graphs import (
    GroupTable,
    Permutation,
    SimpleGraph,
    asymmetric_graph_6,
    automorphisms,
    complete_graph,
    cycle_graph,
    find_group_isomorphism,
    frucht_graph,
    path_graph,
)
from .models import (
    ModelMk,
    ModelMnG,
    TildeModel,
    build_mk,
    build_mng,
    cocycle_to_coboundary,
    ellipticity_certificates,
    formal_dimension,
    pure_model,
    tilde,
)

__version__ = "0.1.0"
