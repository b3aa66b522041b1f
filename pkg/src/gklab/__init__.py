"""gklab: finite group computations around rationality, cut status, and
Gruenberg-Kegel prime graphs, at desk scale (group order capped, default 2^20).
"""

from .elements import (mat, mat_rows, pair, perm, perm_from_cycles,
                       perm_to_cycles)
from .groups import (CapExceeded, GroupHandle, direct_product, element_order,
                     element_orders_multiset, enumerate_group,
                     semidirect_product)
from .primegraph import (PrimeGraph, TheoremVerdict, classify, components,
                         gk_graph, parse_graph_literal, product_graph, to_dot)
from .rationality import (RationalityReport, cut_oracle_via_bg, is_cut_group,
                          is_rational_group, rationality_report)
from .structure import (class_predicates, conjugacy_classes, fitting,
                        fitting_series, is_nilpotent, is_solvable, quotient,
                        sylow)

__all__ = [
    "CapExceeded", "GroupHandle", "PrimeGraph", "RationalityReport",
    "TheoremVerdict", "class_predicates", "classify", "components",
    "conjugacy_classes", "cut_oracle_via_bg", "direct_product",
    "element_order", "element_orders_multiset", "enumerate_group", "fitting",
    "fitting_series", "gk_graph", "is_cut_group", "is_nilpotent",
    "is_rational_group", "is_solvable", "mat", "mat_rows", "pair",
    "parse_graph_literal", "perm", "perm_from_cycles", "perm_to_cycles",
    "product_graph", "quotient", "rationality_report", "semidirect_product",
    "sylow", "to_dot",
]

__version__ = "0.1.0"
