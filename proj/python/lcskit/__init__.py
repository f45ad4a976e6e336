"""Exact exterior calculus for locally conformally symplectic structures.

Thin python surface over the C++ core: charts, differential forms, lcs
verification, the symplectic Hodge star and its sl2 operators, cohomology
of presented differential graded algebras, and the Kerr quartic pencil.
"""

from lcskit._core import (
    Chart,
    ContactForm,
    DifferentialForm,
    HLContext,
    LcskitError,
    LcsStructure,
    ScalarExpr,
    betti,
    betti_twisted,
    build_collar,
    contract_bivector,
    fiber,
    fiber_membership,
    kerr_two_form,
    lichnerowicz_d,
    parse_form,
    parse_scalar,
    quartic_eval,
    restrict_to_boundary,
    sample_pencil,
    sample_pencil_csv,
    scan_relations,
    verify_contact,
    verify_ks_identity,
    verify_lcs,
)

__all__ = [
    "Chart",
    "ContactForm",
    "DifferentialForm",
    "HLContext",
    "LcskitError",
    "LcsStructure",
    "ScalarExpr",
    "betti",
    "betti_twisted",
    "build_collar",
    "contract_bivector",
    "fiber",
    "fiber_membership",
    "kerr_two_form",
    "lichnerowicz_d",
    "parse_form",
    "parse_scalar",
    "quartic_eval",
    "restrict_to_boundary",
    "sample_pencil",
    "sample_pencil_csv",
    "scan_relations",
    "verify_contact",
    "verify_ks_identity",
    "verify_lcs",
]

__version__ = "0.1.0"
