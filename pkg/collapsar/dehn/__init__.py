"""
Dehn's algorithm, relator orders, abelianization and equality oracles
"""

from .abelian import (
    AbelianInvariants,
    AbelianLattice,
    AbelianVerdict,
    abelianization,
    abelianization_test,
    in_relation_lattice,
    relation_matrix,
)
from .bank import BankEntry, Match, RelatorBank
from .solver import (
    DehnStep,
    DehnTrace,
    RelatorOrder,
    StepKind,
    dehn_reduce,
    is_trivial,
    order_of_relator,
    relator_bank,
    relator_orders,
    solve_many,
)
from .oracles import (
    DehnOracle,
    DiagramSearchOracle,
    EqualityOracle,
    ExponentSumOracle,
    FreeGroupOracle,
    OracleResult,
    OracleStatus,
    bounded_oracle_trivial,
    choose_oracle,
    is_abelian_presentation,
)

__all__ = [
    "AbelianInvariants",
    "AbelianLattice",
    "AbelianVerdict",
    "BankEntry",
    "DehnOracle",
    "DehnStep",
    "DehnTrace",
    "DiagramSearchOracle",
    "EqualityOracle",
    "ExponentSumOracle",
    "FreeGroupOracle",
    "Match",
    "OracleResult",
    "OracleStatus",
    "RelatorBank",
    "RelatorOrder",
    "StepKind",
    "abelianization",
    "abelianization_test",
    "bounded_oracle_trivial",
    "choose_oracle",
    "dehn_reduce",
    "in_relation_lattice",
    "is_abelian_presentation",
    "is_trivial",
    "order_of_relator",
    "relation_matrix",
    "relator_bank",
    "relator_orders",
    "solve_many",
]
