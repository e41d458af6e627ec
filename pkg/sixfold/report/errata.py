"""Ledger of misprinted floors and labels with their verified forms"""

import logging
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from sixfold.forms.residue import ResidueSide

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False


class ErrataEntry(BaseModel):
    """
    One printed expression next to its corrected form.

    Entries concerning a single floor term also carry the term itself:
    its side, its factors, the corrected m-form offset and its value at m = 50.

    Attributes:
        location (str): Anchor of the printed expression.
        printed_form (str): The expression as printed.
        normative_form (str): The corrected expression.
        evidence (str): Example or oracle value deciding the correction.
        side (Optional[ResidueSide]): Progression of the corrected term.
        factors (Optional[Tuple[int, ...]]): Factors of the corrected term.
        offset (Optional[int]): Corrected c in [(m + c)/d].
        value (Optional[int]): Value of the corrected expression at m = 50.
    """

    location: str = Field(..., description="Anchor of the printed expression.")
    printed_form: str = Field(..., description="Expression as printed.")
    normative_form: str = Field(..., description="Corrected expression.")
    evidence: str = Field(..., description="What decides the correction.")
    side: Optional[ResidueSide] = Field(None, description="Side of the term.")
    factors: Optional[Tuple[int, ...]] = Field(None, description="Factors of the term.")
    offset: Optional[int] = Field(None, description="Corrected c in [(m + c)/d].")
    value: Optional[int] = Field(None, description="Corrected value at m = 50.")

    @model_validator(mode="after")
    def validate_term(self) -> "ErrataEntry":
        """Term entries need side, factors and offset together."""
        parts = (self.side, self.factors, self.offset)
        if any(part is not None for part in parts) and any(
            part is None for part in parts
        ):
            raise ValueError(f"Incomplete term in errata entry {self.location}.")
        return self

    @property
    def has_term(self) -> bool:
        """True when the entry corrects a single floor term."""
        return self.factors is not None

    def __str__(self) -> str:
        return f"{self.location}: printed {self.printed_form}, read {self.normative_form}"


PLUS = ResidueSide.PLUS_ONE
MINUS = ResidueSide.MINUS_ONE

ERRATA: List[ErrataEntry] = [
    ErrataEntry(
        location="Theorem 3.1, first sum",
        printed_form="[(6m+K₁⁽ⁱ⁾(−)+1)/(6K₁⁽ⁱ⁾(−))]",
        normative_form="[(6m−K₁⁽ⁱ⁾(−)−1)/(6K₁⁽ⁱ⁾(−))]",
        evidence="mes C₁ = [(m−1)/5] = 9 at m = 50 as in the level-1 vector "
        "(9, 4, 7, 4) of Example 2; the printed floor gives 10.",
        side=MINUS,
        factors=(5,),
        offset=-1,
        value=9,
    ),
    ErrataEntry(
        location="Theorem 3.1, second sum",
        printed_form="[(6m−K₁⁽ʲ⁾(+)+1)/(6K₁⁽ʲ⁾(+))]",
        normative_form="[(6m+K₁⁽ʲ⁾(+)−1)/(6K₁⁽ʲ⁾(+))]",
        evidence="mes D₂ = [(m+2)/13] = 4 at m = 50; the printed floor gives 3.",
        side=MINUS,
        factors=(13,),
        offset=2,
        value=4,
    ),
    ErrataEntry(
        location="mes D_j, denominator",
        printed_form="[(6m+K₁⁽¹⁾(+)−1)/(6m)]",
        normative_form="[(6m+K₁⁽¹⁾(+)−1)/(6K₁⁽¹⁾(+))]",
        evidence="mes D₁ = [(m+1)/7] = 7 at m = 50; dividing by 6m gives 1.",
        side=MINUS,
        factors=(7,),
        offset=1,
        value=7,
    ),
    ErrataEntry(
        location="(2.2), denominator",
        printed_form="[(m+(K₁⁽²⁾(−)+1)/6)/K₁⁽¹⁾(−)]",
        normative_form="[(m+(K₁⁽²⁾(−)+1)/6)/K₁⁽²⁾(−)]",
        evidence="mes A₂ = [(m+2)/11] = 4 at m = 50.",
        side=PLUS,
        factors=(11,),
        offset=2,
        value=4,
    ),
    ErrataEntry(
        location="(2.4), indices",
        printed_form="[(6m−K₁⁽¹⁾(−)+1)/(6K₁^ν(+))]",
        normative_form="[(6m−K₁⁽¹⁾(+)+1)/(6K₁⁽¹⁾(+))]",
        evidence="mes B₁ = [(m−1)/7] = 7 at m = 50.",
        side=PLUS,
        factors=(7,),
        offset=-1,
        value=7,
    ),
    ErrataEntry(
        location="(2.8), constant a",
        printed_form="1, if s is an add number",
        normative_form="1, if s is an odd number",
        evidence="5·7 has s = 1 and offset (5·7+1)/6 = 6 in (2.12).",
        side=PLUS,
        factors=(5, 7),
        offset=6,
        value=1,
    ),
    ErrataEntry(
        location="(2.12), fifth term",
        printed_form="[(m+20)/(7·11)]",
        normative_form="[(m+20)/(7·17)]",
        evidence="(7·17+1)/6 = 20; 7·11 already is the third term with offset 13.",
        side=PLUS,
        factors=(7, 17),
        offset=20,
        value=0,
    ),
    ErrataEntry(
        location="(2.12), sixth term",
        printed_form="[m37/(13·17)]",
        normative_form="[(m+37)/(13·17)]",
        evidence="(13·17+1)/6 = 37 and 13·17 is the member of K₂(−) left without a term.",
        side=PLUS,
        factors=(13, 17),
        offset=37,
        value=0,
    ),
    ErrataEntry(
        location="(2.15), denominator",
        printed_form="[(m+1091)/(7·11·13)]",
        normative_form="[(m+1091)/(7·11·17)]",
        evidence="(5·7·11·17+1)/6 = 1091; 7·11·13 has residue −1 and belongs to K₃(−).",
        side=PLUS,
        factors=(7, 11, 17),
        offset=1091,
        value=0,
    ),
    ErrataEntry(
        location="(2.16), first denominator",
        printed_form="[(m+1091)/(5·7·11·13)]",
        normative_form="[(m+1091)/(5·7·11·17)]",
        evidence="(5·7·11·17+1)/6 = 1091; 5·7·11·13 has residue +1 and belongs to K₄(+).",
        side=PLUS,
        factors=(5, 7, 11, 17),
        offset=1091,
        value=0,
    ),
    ErrataEntry(
        location="(2.17), third numerator",
        printed_form="[(m+1418)/(7·11·13·17)]",
        normative_form="[(m+14181)/(7·11·13·17)]",
        evidence="(5·7·11·13·17+1)/6 = 14181; one digit is missing.",
        side=PLUS,
        factors=(7, 11, 13, 17),
        offset=14181,
        value=0,
    ),
    ErrataEntry(
        location="(2.20), argument label",
        printed_form="π⁽⁺⁾(306)",
        normative_form="π⁽⁺⁾(301)",
        evidence="6·50+1 = 301 and the oracle gives π⁺(301) = 28.",
        value=28,
    ),
    ErrataEntry(
        location="Example 2, result label",
        printed_form="P⁽⁻⁾(301)",
        normative_form="P⁽⁻⁾(299)",
        evidence="6·50−1 = 299 and the oracle gives P⁻(299) = 18.",
        value=18,
    ),
    ErrataEntry(
        location="Example 2, level-2 inner sign",
        printed_form="−(−[(50+29)/(5·7)] + [(50+54)/(5·13)] + ...)",
        normative_form="−([(50+29)/(5·7)] + [(50+54)/(5·13)] + ...)",
        evidence="The printed sum (2+1+1+1+1) = 6 needs every level-2 term positive.",
        side=MINUS,
        factors=(5, 7),
        offset=29,
        value=2,
    ),
    ErrataEntry(
        location="Example 2, level-3 numerator",
        printed_form="[(50+327)/(5·7·13)]",
        normative_form="[(50+379)/(5·7·13)]",
        evidence="(5·5·7·13−1)/6 = 379.",
        side=MINUS,
        factors=(5, 7, 13),
        offset=379,
        value=0,
    ),
    ErrataEntry(
        location="Section 1, complements",
        printed_form="H₁ ∩ M₁ ≠ ∅; (H₂ ∩ M₂) ≠ ∅",
        normative_form="H₁ ∩ M₁ = ∅; H₂ ∩ M₂ = ∅",
        evidence="H₁ and H₂ are complements; no index is both prime and composite indexed.",
    ),
    ErrataEntry(
        location="Section 2, size of K₂(−)",
        printed_form="ν₂(−) = C¹_{ν₀}·C¹_{k₀}",
        normative_form="γ₂(−) = C¹_{ν₀}·C¹_{k₀}",
        evidence="γ₂(−) = 6 at m = 50 as stated in Example 1.",
        value=6,
    ),
    ErrataEntry(
        location="Section 2, size of K₂(+)",
        printed_form="γ₂(+) = V²_{ν₀} + C²_{k₀}",
        normative_form="γ₂(+) = C²_{ν₀} + C²_{k₀}",
        evidence="γ₂(+) = 4 at m = 50 as stated in Example 1.",
        value=4,
    ),
]


def render_errata_markdown(entries: Optional[Iterable[ErrataEntry]] = None) -> str:
    """Markdown document listing `entries` (the full ledger by default)."""
    entries = ERRATA if entries is None else list(entries)
    lines = [
        "# Errata",
        "",
        "Printed expressions of the worked examples and theorems, each with the",
        "form the sieve engine and the oracle confirm.",
        "",
    ]
    for entry in entries:
        lines += [
            f"## {entry.location}",
            "",
            f"- printed: `{entry.printed_form}`",
            f"- normative: `{entry.normative_form}`",
            f"- evidence: {entry.evidence}",
            "",
        ]
    return "\n".join(lines)
