"""Exact verification engine for the differential calculus on [X, Y] = hY."""

from ._qplane import (
    CheckRecord,
    CheckReport,
    ParseError,
    Status,
    UnknownPresentation,
    ansatz,
    ansatz_system,
    catalog_table,
    check_all,
    confluence,
    consistency,
    covariance,
    gamma_hopf,
    hopf,
    normalize,
    oracle,
    parser_suite,
    presentations,
    relation_suite,
)

__all__ = [
    "CheckRecord",
    "CheckReport",
    "ParseError",
    "Status",
    "UnknownPresentation",
    "ansatz",
    "ansatz_system",
    "catalog_table",
    "check_all",
    "confluence",
    "consistency",
    "covariance",
    "gamma_hopf",
    "hopf",
    "normalize",
    "oracle",
    "parser_suite",
    "presentations",
    "relation_suite",
]
