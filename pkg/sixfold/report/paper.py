"""Printed intermediates of the two worked examples at m = 50, checked against the engine"""

import logging
from typing import List, Tuple

from pydantic import BaseModel, Field, computed_field

from sixfold.forms.residue import ResidueSide
from sixfold.report.errata import ERRATA, ErrataEntry
from sixfold.report.render import print_model
from sixfold.sieve.basis import SieveTerm, build_basis, gamma, index_bounds
from sixfold.sieve.engine import (
    class_count,
    composite_count_minus,
    composite_count_plus,
    prime_count_total,
)
from sixfold.sieve.floors import paper_offset

from sixfold.core.logging import handler  # isort:skip

logger = logging.getLogger(__name__)
logger.addHandler(handler)
logger.propagate = False

EXAMPLE_M = 50

PLUS = ResidueSide.PLUS_ONE
MINUS = ResidueSide.MINUS_ONE

# printed m-form terms [(m + c)/d] as (c, factors), legible ones only
TERM_FIXTURES: List[Tuple[str, ResidueSide, List[Tuple[int, Tuple[int, ...]]]]] = [
    ("(2.11)", PLUS, [(1, (5,)), (2, (11,)), (3, (17,)), (-1, (7,)), (-2, (13,))]),
    ("(2.12)", PLUS, [(6, (5, 7)), (11, (5, 13)), (13, (7, 11)), (24, (11, 13))]),
    ("(2.13)", PLUS, [(46, (5, 11)), (71, (5, 17)), (156, (11, 17)), (76, (7, 13))]),
    (
        "(2.14)",
        PLUS,
        [(156, (5, 11, 17)), (76, (5, 7, 13)), (167, (7, 11, 13)), (258, (7, 13, 17))],
    ),
    (
        "(2.15)",
        PLUS,
        [
            (321, (5, 7, 11)),
            (496, (5, 7, 17)),
            (596, (5, 11, 13)),
            (921, (5, 13, 17)),
            (2026, (11, 13, 17)),
        ],
    ),
    ("(2.16)", PLUS, [(2026, (5, 11, 13, 17))]),
    ("(2.17)", PLUS, [(4171, (5, 7, 11, 13)), (6446, (5, 7, 13, 17))]),
    ("(2.18)", PLUS, [(14181, (5, 7, 11, 13, 17))]),
    ("Example 2 level-1", MINUS, [(-1, (5,)), (-2, (11,)), (1, (7,)), (2, (13,))]),
    (
        "Example 2 level-2",
        MINUS,
        [
            (29, (5, 7)),
            (54, (5, 13)),
            (64, (7, 11)),
            (119, (11, 13)),
            (9, (5, 11)),
            (15, (7, 13)),
        ],
    ),
    ("Example 2 level-3", MINUS, [(834, (7, 11, 13)), (64, (5, 7, 11)), (119, (5, 11, 13))]),
    ("Example 2 level-4", MINUS, [(834, (5, 7, 11, 13))]),
]

# printed level sums and level sizes
EXAMPLE_1_LEVEL_1 = [10, 4, 3, 7, 3]
EXAMPLE_2_LEVEL_SUMS = [24, 6]
GAMMA_FIXTURES = {2: [6, 4], 3: [4, 6], 4: [2, 3], 5: [1, 0]}

BOUND_FIXTURES = {"Example 1 bounds nu, k": [3, 2], "Example 2 bound r": [2]}
BASIS_FIXTURES = {
    "Example 1 basis": (PLUS, [5, 11, 17], [7, 13]),
    "Example 2 basis": (MINUS, [5, 11], [7, 13]),
}
TOTAL_FIXTURES = {
    "(2.19)": 22,
    "(2.20)": 28,
    "Example 2 P-": 18,
    "Example 2 pi-": 32,
    "Theorem 4": 60,
}


class PaperAnchor(BaseModel):
    """A printed value next to the value computed for it."""

    anchor: str = Field(..., description="Location of the printed value.")
    expected: List[int] = Field(..., description="Printed values.")
    got: List[int] = Field(..., description="Computed values.")

    @computed_field
    @property
    def passed(self) -> bool:
        """True when the computed values equal the printed ones."""
        return self.expected == self.got

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        expected = _join(self.expected)
        got = _join(self.got)
        return f"{self.anchor}: expected {expected}, got {got}, {status}"


class PaperReport(BaseModel):
    """Checked anchors and the errata ledger."""

    m: int = Field(EXAMPLE_M, description="Index of both worked examples.")
    anchors: List[PaperAnchor] = Field(default_factory=list, description="Checked anchors.")
    errata: List[ErrataEntry] = Field(default_factory=list, description="Known misprints.")

    @property
    def ok(self) -> bool:
        """True when every anchor passed."""
        return all(anchor.passed for anchor in self.anchors)

    def anchor(self, name: str) -> PaperAnchor:
        """Anchor by name."""
        for anchor in self.anchors:
            if anchor.anchor == name:
                return anchor
        raise KeyError(f"No anchor named {name}.")

    def __str__(self) -> str:
        passed = sum(anchor.passed for anchor in self.anchors)
        lines = [str(anchor) for anchor in self.anchors]
        lines.append(f"{passed}/{len(self.anchors)} anchors pass")
        lines.append(f"errata ({len(self.errata)}, not asserted):")
        lines += [f"  ERRATA {entry}" for entry in self.errata]
        return "\n".join(lines)

    def __repr__(self) -> str:
        return print_model(self, "paper_check")


def _join(values: List[int]) -> str:
    return str(values[0]) if len(values) == 1 else "(" + ",".join(map(str, values)) + ")"


def _term(factors: Tuple[int, ...]) -> SieveTerm:
    d = 1
    for factor in factors:
        d *= factor
    s = sum(factor % 6 == 5 for factor in factors)
    return SieveTerm(d=d, factors=factors, q=len(factors), s=s, d_residue=(-1) ** s)


def _engine_value(term: SieveTerm, side: ResidueSide, m: int) -> int:
    """Class count of a term; products beyond the limit are pruned and count 0."""
    if term.d > side.limit(m):
        return 0
    return class_count(term.d, term.q, side, m)


def _term_anchors(m: int) -> List[PaperAnchor]:
    anchors = []
    for name, side, printed in TERM_FIXTURES:
        terms = [_term(factors) for _, factors in printed]
        anchors.append(
            PaperAnchor(
                anchor=name,
                expected=[(m + c) // term.d for (c, _), term in zip(printed, terms)],
                got=[_engine_value(term, side, m) for term in terms],
            )
        )
        anchors.append(
            PaperAnchor(
                anchor=f"{name} offsets",
                expected=[c for c, _ in printed],
                got=[paper_offset(term, side) for term in terms],
            )
        )
    return anchors


def paper_check() -> PaperReport:
    """
    Evaluate every legible printed intermediate of both worked examples
    and attach the errata ledger, whose entries are reported but not asserted.
    """
    m = EXAMPLE_M
    anchors = _term_anchors(m)

    plus_basis = build_basis(m, PLUS)
    level_one = [
        class_count(p, 1, PLUS, m)
        for p in plus_basis.minus_primes + plus_basis.plus_primes
    ]
    anchors.append(
        PaperAnchor(anchor="Example 1 level-1", expected=EXAMPLE_1_LEVEL_1, got=level_one)
    )
    minus_levels = composite_count_minus(m).levels
    anchors.append(
        PaperAnchor(
            anchor="Example 2 level sums",
            expected=EXAMPLE_2_LEVEL_SUMS,
            got=[level.subtotal for level in minus_levels[:2]],
        )
    )

    nu, k, r = index_bounds(m)
    anchors.append(
        PaperAnchor(
            anchor="Example 1 bounds nu, k",
            expected=BOUND_FIXTURES["Example 1 bounds nu, k"],
            got=[nu, k],
        )
    )
    anchors.append(
        PaperAnchor(
            anchor="Example 2 bound r", expected=BOUND_FIXTURES["Example 2 bound r"], got=[r]
        )
    )
    for name, (side, minus_primes, plus_primes) in BASIS_FIXTURES.items():
        basis = build_basis(m, side)
        anchors.append(
            PaperAnchor(
                anchor=name,
                expected=minus_primes + plus_primes,
                got=basis.minus_primes + basis.plus_primes,
            )
        )
    for q, expected in GAMMA_FIXTURES.items():
        anchors.append(
            PaperAnchor(
                anchor=f"Example 1 gamma_{q}",
                expected=expected,
                got=list(gamma(q, plus_basis.nu0, plus_basis.k0)),
            )
        )

    p_plus = composite_count_plus(m).total
    p_minus = composite_count_minus(m).total
    computed = {
        "(2.19)": p_plus,
        "(2.20)": m - p_plus,
        "Example 2 P-": p_minus,
        "Example 2 pi-": m - p_minus,
        "Theorem 4": prime_count_total(m),
    }
    for name, expected in TOTAL_FIXTURES.items():
        anchors.append(PaperAnchor(anchor=name, expected=[expected], got=[computed[name]]))

    report = PaperReport(m=m, anchors=anchors, errata=list(ERRATA))
    logger.debug(
        "Worked examples: %s/%s anchors pass.",
        sum(anchor.passed for anchor in anchors),
        len(anchors),
    )
    return report
