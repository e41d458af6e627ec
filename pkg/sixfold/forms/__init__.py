"""Residue forms 6m+alpha and factor witnesses"""

from sixfold.forms.residue import (
    Decomposition,
    FactorWitness,
    ResidueSide,
    candidate_form,
    compose_factors,
    decompose,
)
from sixfold.forms.witness import (
    WitnessSummary,
    in_h1,
    in_h2,
    in_m1,
    in_m2,
    m1_witness,
    m2_witness,
    witness_set,
    witness_summary,
)

__all__ = [
    "Decomposition",
    "FactorWitness",
    "ResidueSide",
    "WitnessSummary",
    "candidate_form",
    "compose_factors",
    "decompose",
    "in_h1",
    "in_h2",
    "in_m1",
    "in_m2",
    "m1_witness",
    "m2_witness",
    "witness_set",
    "witness_summary",
]
