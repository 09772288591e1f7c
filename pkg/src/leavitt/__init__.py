"""Computations with Leavitt path algebras of finite separated digraphs.

The package is organized around one module per concern:

- :mod:`leavitt.digraph` - the digraph model and its graph invariants
- :mod:`leavitt.algebra` - exact element arithmetic in the algebra
- :mod:`leavitt.dimfun` - dimension functions: feasibility, Hilbert basis, IBN
- :mod:`leavitt.repbuild` - explicit representations and operator models
- :mod:`leavitt.quotient` - finite-dimensional quotients and graded ideals
- :mod:`leavitt.cli` - the ``leavitt`` command-line tool
"""

from .algebra import Element, Grade, LeavittAlgebra, Monomial
from .digraph import Arrow, Cycle, Digraph, Path, SubgraphFlags
from .dimfun import (
    HilbertBasis,
    RelationMatrix,
    has_nonzero_dimfun,
    hilbert_basis,
    ibn_check,
    relation_matrix,
    verify,
)
from .errors import (
    DomainError,
    ExprSyntaxError,
    InvalidDigraphError,
    LeavittError,
    PathSpaceError,
    SeparationError,
    UnknownIdError,
)
from .quotient import (
    AlgebraClassification,
    InstantiatedQuotient,
    QuotientShape,
    Summand,
    classify_algebra,
    classify_quotients,
    graded_ideals,
    has_findim_quotient,
    instantiate,
    locally_finite_structure,
    theta_map,
)
from .repbuild import (
    ChenModule,
    QuiverRep,
    SinkModule,
    ToeplitzModel,
    UpDownModel,
    build_rep,
    module_action,
    path_count_to,
    paths_ending_at,
    paths_to_cycle_count,
    support_subgraph,
    toeplitz_model,
    updown_model,
    verify_relations,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "Cycle", "Digraph", "Path", "SubgraphFlags",
    "Element", "Grade", "LeavittAlgebra", "Monomial",
    "HilbertBasis", "RelationMatrix", "has_nonzero_dimfun", "hilbert_basis",
    "ibn_check", "relation_matrix", "verify",
    "QuiverRep", "SinkModule", "ChenModule", "UpDownModel", "ToeplitzModel",
    "build_rep", "module_action", "path_count_to", "paths_ending_at",
    "paths_to_cycle_count", "support_subgraph", "toeplitz_model", "updown_model",
    "verify_relations",
    "AlgebraClassification", "InstantiatedQuotient", "QuotientShape", "Summand",
    "classify_algebra", "classify_quotients", "graded_ideals",
    "has_findim_quotient", "instantiate", "locally_finite_structure", "theta_map",
    "LeavittError", "InvalidDigraphError", "UnknownIdError", "DomainError",
    "SeparationError", "PathSpaceError", "ExprSyntaxError",
]
