"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - PARAMETER PROFILES
═══════════════════════════════════════════════════════════════════════════════
Module: core/profile.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Names the nine parameters, maps each to its solver, and bundles all
    nine values of one graph into a ParameterProfile whose chain
    inequalities are enforced on the way out.

CHAINS (checked by full_profile):
    ω <= χ
    ω <= h <= ψ
    ω <= α <= ψ
    ω <= b <= B <= ψ
    ω <= Γ <= γ

    A violated chain is a solver bug, never a result, and raises
    ConsistencyError.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import logging
from dataclasses import dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import SOLVER_CONFIG
from core.graph import Graph
from core.cliques import chromatic_number, clique_number
from core.colorings import (
    achromatic_number,
    b_chromatic_number,
    grundy_number,
    pseudo_b_chromatic_number,
    pseudo_grundy_number,
    pseudoachromatic_number,
)
from core.minors import hadwiger_number

# Configure logging
logger = logging.getLogger(__name__)


class ConsistencyError(RuntimeError):
    """Solver outputs contradict each other (chain violation, cache collision)."""


# ═══════════════════════════════════════════════════════════════════════════════
# PARAMETER SELECTORS
# ═══════════════════════════════════════════════════════════════════════════════

class Parameter(Enum):
    """The nine parameters, valued by their command line id."""
    OMEGA = "omega"
    CHI = "chi"
    HADWIGER = "hadwiger"
    PSI = "psi"
    ALPHA = "alpha"
    B_CHROMATIC = "b"
    PSEUDO_B = "B"
    GRUNDY = "grundy"
    PSEUDO_GRUNDY = "pseudo_grundy"

    @property
    def symbol(self) -> str:
        return PARAMETER_SYMBOLS[self]

    @property
    def field_name(self) -> str:
        return PARAMETER_FIELDS[self]


PARAMETER_SYMBOLS: Dict[Parameter, str] = {
    Parameter.OMEGA: "ω",
    Parameter.CHI: "χ",
    Parameter.HADWIGER: "h",
    Parameter.PSI: "ψ",
    Parameter.ALPHA: "α",
    Parameter.B_CHROMATIC: "b",
    Parameter.PSEUDO_B: "B",
    Parameter.GRUNDY: "Γ",
    Parameter.PSEUDO_GRUNDY: "γ",
}

PARAMETER_FIELDS: Dict[Parameter, str] = {
    Parameter.OMEGA: "omega",
    Parameter.CHI: "chi",
    Parameter.HADWIGER: "hadwiger",
    Parameter.PSI: "psi",
    Parameter.ALPHA: "alpha",
    Parameter.B_CHROMATIC: "b_chromatic",
    Parameter.PSEUDO_B: "pseudo_b",
    Parameter.GRUNDY: "grundy",
    Parameter.PSEUDO_GRUNDY: "pseudo_grundy",
}

PARAMETER_SOLVERS: Dict[Parameter, Callable[[Graph], int]] = {
    Parameter.OMEGA: clique_number,
    Parameter.CHI: chromatic_number,
    Parameter.HADWIGER: hadwiger_number,
    Parameter.PSI: pseudoachromatic_number,
    Parameter.ALPHA: achromatic_number,
    Parameter.B_CHROMATIC: b_chromatic_number,
    Parameter.PSEUDO_B: pseudo_b_chromatic_number,
    Parameter.GRUNDY: grundy_number,
    Parameter.PSEUDO_GRUNDY: pseudo_grundy_number,
}

# Accepted spellings on the command line (case matters only for b / B)
_ALIASES: Dict[str, Parameter] = {
    "ω": Parameter.OMEGA,
    "χ": Parameter.CHI,
    "h": Parameter.HADWIGER,
    "ψ": Parameter.PSI,
    "α": Parameter.ALPHA,
    "Gamma": Parameter.GRUNDY,
    "Γ": Parameter.GRUNDY,
    "gamma": Parameter.PSEUDO_GRUNDY,
    "γ": Parameter.PSEUDO_GRUNDY,
}


def parse_parameter(text: str) -> Parameter:
    """
    Resolve a parameter id.

    Raises:
        ValueError: If the id names no parameter

    Example:
        >>> parse_parameter("psi")
        <Parameter.PSI: 'psi'>
    """
    if text in _ALIASES:
        return _ALIASES[text]
    try:
        return Parameter(text)
    except ValueError:
        pass
    lowered = text.lower()
    if lowered != "b":
        try:
            return Parameter(lowered)
        except ValueError:
            pass
    valid = ", ".join(p.value for p in Parameter)
    raise ValueError(f"Unknown parameter '{text}' (expected one of {valid})")


# ═══════════════════════════════════════════════════════════════════════════════
# PROFILE
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class ParameterProfile:
    """
    The nine parameter values of one graph, in cache-file order.
    """
    omega: int
    chi: int
    hadwiger: int
    psi: int
    alpha: int
    b_chromatic: int
    pseudo_b: int
    grundy: int
    pseudo_grundy: int

    def value(self, parameter: Parameter) -> int:
        return getattr(self, parameter.field_name)

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    @classmethod
    def from_tuple(cls, values) -> "ParameterProfile":
        values = tuple(int(v) for v in values)
        if len(values) != 9:
            raise ValueError(f"A profile has 9 values, got {len(values)}")
        return cls(*values)

    def chain_violations(self) -> List[str]:
        """Human-readable list of violated chain inequalities."""
        chains = [
            ("ω", "χ", self.omega, self.chi),
            ("ω", "h", self.omega, self.hadwiger),
            ("h", "ψ", self.hadwiger, self.psi),
            ("ω", "α", self.omega, self.alpha),
            ("α", "ψ", self.alpha, self.psi),
            ("ω", "b", self.omega, self.b_chromatic),
            ("b", "B", self.b_chromatic, self.pseudo_b),
            ("B", "ψ", self.pseudo_b, self.psi),
            ("ω", "Γ", self.omega, self.grundy),
            ("Γ", "γ", self.grundy, self.pseudo_grundy),
        ]
        return [f"{a}={x} > {b}={y}" for a, b, x, y in chains if x > y]

    def to_dict(self) -> Dict[str, Any]:
        return {p.value: self.value(p) for p in Parameter}


def full_profile(g: Graph, check_chains: Optional[bool] = None) -> ParameterProfile:
    """
    All nine parameters of g.

    Raises:
        ConsistencyError: If a chain inequality fails

    Example:
        >>> full_profile(Graph.cycle(4)).as_tuple()
        (2, 2, 3, 3, 2, 2, 2, 2, 3)
    """
    profile = ParameterProfile(*(PARAMETER_SOLVERS[p](g) for p in Parameter))

    if check_chains is None:
        check_chains = SOLVER_CONFIG["check_chains"]
    if check_chains:
        violations = profile.chain_violations()
        if violations:
            logger.error(
                "Chain inequality violated",
                extra={"extra_data": {"graph6": str(g), "violations": violations}},
            )
            raise ConsistencyError(f"Chain violated on {g}: {'; '.join(violations)}")
    return profile


__all__ = [
    "ConsistencyError",
    "Parameter",
    "PARAMETER_SOLVERS",
    "PARAMETER_SYMBOLS",
    "parse_parameter",
    "ParameterProfile",
    "full_profile",
]
