"""Zagreb indices of commuting and non-commuting graphs of finite groups,
with an exact checker for the Hansen-Vukicevic conjecture M2/|E| >= M1/|V|.
"""

from .build import (
    CatalogEntry,
    FamilySpec,
    build_family,
    builtin_special_groups,
    catalog,
    direct_product,
    ingest_cayley,
)
from .coset import Presentation, coset_enumerate
from .ff import Field, field, field_of_order
from .grp import (
    FiniteGroup,
    recognize_dihedral,
    recognize_elementary_abelian_p2,
)
from .formulas import (
    FormulaEntry,
    FormulaPrediction,
    crosscheck,
    evaluate,
    registry_for,
)
from .zagreb import (
    CliqueDecomposition,
    ConjectureVerdict,
    SimpleGraph,
    Verdict,
    ZagrebReport,
    commuting_graph,
    conjecture_verdict,
    extract_clique_decomposition,
    group_report,
    non_commuting_graph,
    read_edge_list,
    zagreb_complement,
    zagreb_direct,
    zagreb_from_decomposition,
)

__all__ = [
    "CatalogEntry", "FamilySpec", "build_family", "builtin_special_groups",
    "catalog", "direct_product", "ingest_cayley",
    "Presentation", "coset_enumerate",
    "Field", "field", "field_of_order",
    "FiniteGroup", "recognize_dihedral", "recognize_elementary_abelian_p2",
    "FormulaEntry", "FormulaPrediction", "crosscheck", "evaluate", "registry_for",
    "CliqueDecomposition", "ConjectureVerdict", "SimpleGraph", "Verdict",
    "ZagrebReport", "commuting_graph", "conjecture_verdict",
    "extract_clique_decomposition", "group_report", "non_commuting_graph",
    "read_edge_list", "zagreb_complement", "zagreb_direct",
    "zagreb_from_decomposition",
]
