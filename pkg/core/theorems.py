"""
═══════════════════════════════════════════════════════════════════════════════
AB-PERFECT GRAPH LAB - THEOREM REGISTRY AND VERIFICATION
═══════════════════════════════════════════════════════════════════════════════
Module: core/theorems.py
Last Updated: 2026-10-17
═══════════════════════════════════════════════════════════════════════════════

PURPOSE:
    Finite verification of the characterizations by sweeping a graph
    universe: every graph is checked against both sides of each claim and
    every disagreement becomes a counterexample that is re-verified with a
    fresh cache before it is reported.

THEOREM KINDS:
    equivalence   all listed conditions agree on every graph
    implication   the first condition implies each of the others
    per_graph     a property of the profile of every graph (chains, χ <= h)
    targeted      fixed graphs checked at their native order (obstruction
                  minimality, parameter values); also attached to sweeps
                  whose obstructions lie beyond the universe

REGISTRY:
    T1     ωh-perfect          <=> chordal
    T1b    ωh-perfect          =>  ωχ-perfect
    T2     ωψ-perfect          <=> (C4,P4,P3+K2,3K2)-free
    T3     αh-perfect          <=> ωψ-perfect
    T3b    ωψ-perfect          =>  ωχ-perfect, αh-perfect => ωχ-perfect
    T4     ωψ <=> bψ <=> Bψ    <=> (C4,P4,P3+K2,3K2)-free
    T5     ωα <=> bα           <=> (P4,P3+K2,3K2)-free
    T6     ωγ-perfect          <=> (C4,P4)-free
    T7     Γh-perfect          <=> ωγ-perfect
    T8     bΓ-perfect          <=> (P4,3P3,2D)-free      + targeted checks
    T9     bγ-perfect          <=> (C4,P4,3P3,2D)-free   + targeted checks
    CHAINS, HADWIGER, LOVASZ, SPGT, NONCOMPARABLE, OBSTRUCTIONS
    FALSIFIABILITY (deliberately false, excluded from "all")

WORKERS:
    workers > 1 runs chunks in a ProcessPoolExecutor. Each worker starts
    from a snapshot of the cache and returns its outcomes with the profiles
    it computed; the parent merges profiles (collision-equality rule) and
    reduces outcomes in input order, so reports do not depend on scheduling.

═══════════════════════════════════════════════════════════════════════════════
"""

import sys
import time
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import PATTERN_CONFIG, VERIFICATION_CONFIG
from core.graph import (
    Graph,
    GraphError,
    complement,
    disjoint_union,
    emit_graph6,
    induced_subgraph,
    mask_of,
    parse_graph6,
)
from core.canonical import enumerate_up_to
from core.patterns import PatternCatalog, default_catalog
from core.profile import ConsistencyError, Parameter, PARAMETER_SYMBOLS
from core.recognizers import is_berge, is_chordal, is_free_of
from core.perfection import PerfectionChecker, check_obstruction
from database.profile_cache import ProfileCache
from utils.logger import log_verification_event

# Configure logging
logger = logging.getLogger(__name__)


class UnknownTheoremError(KeyError):
    """No theorem is registered under the requested id."""


P = Parameter


# ═══════════════════════════════════════════════════════════════════════════════
# CONDITIONS
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Condition:
    """
    One side of a claim.

    kind:
        perfect             a(H) = b(H) for every induced subgraph H
        complement_perfect  the same, evaluated on the complement
        chordal / berge     class membership
        free                freeness of a catalog family (PATTERN_CONFIG key)
    """
    kind: str
    a: Optional[Parameter] = None
    b: Optional[Parameter] = None
    family: Optional[str] = None

    def label(self, catalog: Optional[PatternCatalog] = None) -> str:
        if self.kind == "perfect":
            return f"{self.a.symbol}{self.b.symbol}-perfect"
        if self.kind == "complement_perfect":
            return f"complement {self.a.symbol}{self.b.symbol}-perfect"
        if self.kind == "free":
            family_name = PATTERN_CONFIG[self.family]
            if catalog is not None and family_name in catalog.families:
                return f"({','.join(catalog.families[family_name])})-free"
            return f"{family_name}-free"
        return self.kind


def perfect(a: Parameter, b: Parameter) -> Condition:
    return Condition("perfect", a=a, b=b)


def free(family: str) -> Condition:
    return Condition("free", family=family)


CHORDAL = Condition("chordal")
BERGE = Condition("berge")


@dataclass
class EvaluationContext:
    """Solver state shared by all evaluations of one sweep."""
    checker: PerfectionChecker
    catalog: PatternCatalog

    @classmethod
    def fresh(cls, catalog: PatternCatalog, cache: Optional[ProfileCache] = None) -> "EvaluationContext":
        return cls(PerfectionChecker(cache if cache is not None else ProfileCache()), catalog)


def evaluate_condition(condition: Condition, g: Graph, ctx: EvaluationContext) -> bool:
    if condition.kind == "perfect":
        return ctx.checker.is_perfect(g, condition.a, condition.b)
    if condition.kind == "complement_perfect":
        return ctx.checker.is_perfect(complement(g), condition.a, condition.b)
    if condition.kind == "chordal":
        return is_chordal(g).member
    if condition.kind == "berge":
        return is_berge(g).member
    if condition.kind == "free":
        return is_free_of(g, PATTERN_CONFIG[condition.family], ctx.catalog).member
    raise ValueError(f"Unknown condition kind: {condition.kind}")


def explain_condition(condition: Condition, g: Graph, ctx: EvaluationContext) -> Tuple[List[int], str]:
    """
    Offending vertex set and a short note for a condition that is false.
    """
    if condition.kind in ("perfect", "complement_perfect"):
        host = g if condition.kind == "perfect" else complement(g)
        result = ctx.checker.check(host, condition.a, condition.b)
        where = "" if condition.kind == "perfect" else " of the complement"
        note = (f"{condition.a.symbol}={result.a_value} != {condition.b.symbol}={result.b_value}"
                f" on induced subgraph{where} {result.witness_vertices()}")
        return result.witness_vertices(), note
    if condition.kind == "chordal":
        verdict = is_chordal(g)
    elif condition.kind == "berge":
        verdict = is_berge(g)
    else:
        verdict = is_free_of(g, PATTERN_CONFIG[condition.family], ctx.catalog)
    return list(verdict.vertices), verdict.describe()


# ═══════════════════════════════════════════════════════════════════════════════
# DATA CLASSES
# ═══════════════════════════════════════════════════════════════════════════════

@dataclass
class Counterexample:
    """
    A graph on which a claim fails.

    Attributes:
        graph6: The graph
        order: Its vertex count
        sides: Condition label -> truth value on the graph
        subgraph: graph6 of the offending induced subgraph ("" if none)
        subgraph_vertices: Its vertices in the graph
        values: Full parameter profile of the offending subgraph
        detail: Human-readable reason
        reverified: Reproduced with a fresh cache
    """
    graph6: str
    order: int
    sides: Dict[str, bool]
    subgraph: str = ""
    subgraph_vertices: List[int] = field(default_factory=list)
    values: Dict[str, int] = field(default_factory=dict)
    detail: str = ""
    reverified: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "graph6": self.graph6,
            "order": self.order,
            "sides": dict(self.sides),
            "subgraph": self.subgraph,
            "subgraph_vertices": list(self.subgraph_vertices),
            "values": dict(self.values),
            "detail": self.detail,
            "reverified": self.reverified,
        }


@dataclass
class TargetedCheck:
    """
    A fixed graph checked outside the sweep.

    Attributes:
        label: What was checked ("3P3 minimal (b, Γ) obstruction")
        graph6: The graph
        passed: True if the expectation held
        details: Values observed
    """
    label: str
    graph6: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "graph6": self.graph6,
            "passed": self.passed,
            "details": dict(self.details),
        }


@dataclass(frozen=True)
class ValueExpectation:
    """Targeted parameter value check: parameter(graph) == expected."""
    label: str
    build: Callable[[PatternCatalog], Graph]
    parameter: Parameter
    expected: int


@dataclass(frozen=True)
class ObstructionExpectation:
    """Targeted check: every member of a family is a minimal (a, b) obstruction."""
    a: Parameter
    b: Parameter
    family: str


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    title: str
    kind: str
    conditions: Tuple[Condition, ...] = ()
    per_graph: Optional[str] = None
    targeted: Tuple[Any, ...] = ()
    in_all: bool = True

    def statement(self, catalog: Optional[PatternCatalog] = None) -> str:
        labels = [c.label(catalog) for c in self.conditions]
        if self.kind == "equivalence":
            return " <=> ".join(labels)
        if self.kind == "implication":
            return f"{labels[0]} => " + " and ".join(labels[1:])
        return self.title


@dataclass
class TheoremReport:
    """
    Verdict of one theorem over one universe.

    Invariant: counterexample_total == 0 exactly when verdict is "verified".
    """
    theorem_id: str
    title: str
    statement: str
    max_order: int
    graph_count: int
    counterexamples: List[Counterexample]
    counterexample_total: int
    targeted: List[TargetedCheck]
    elapsed_seconds: float
    catalog_sha256: str
    workers: int = 1

    @property
    def verified(self) -> bool:
        return self.counterexample_total == 0

    @property
    def verdict(self) -> str:
        return "verified" if self.verified else "counterexamples"

    def to_dict(self, include_runtime: bool = False) -> Dict[str, Any]:
        """Rendered form (runtime fields only with include_runtime)."""
        out = {
            "theorem": self.theorem_id,
            "title": self.title,
            "statement": self.statement,
            "universe": {"max_order": self.max_order, "graph_count": self.graph_count},
            "verdict": self.verdict,
            "counterexample_total": self.counterexample_total,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "targeted": [t.to_dict() for t in self.targeted],
            "catalog_sha256": self.catalog_sha256,
        }
        if include_runtime:
            out["runtime"] = {"elapsed_seconds": round(self.elapsed_seconds, 3), "workers": self.workers}
        return out


# ═══════════════════════════════════════════════════════════════════════════════
# REGISTRY
# ═══════════════════════════════════════════════════════════════════════════════

def _pattern(name: str) -> Callable[[PatternCatalog], Graph]:
    return lambda catalog: catalog.graph(name)


def _matching(count: int) -> Callable[[PatternCatalog], Graph]:
    return lambda catalog: disjoint_union(*([Graph.complete(2)] * count))


def _biclique(t: int) -> Callable[[PatternCatalog], Graph]:
    return lambda catalog: Graph.complete_bipartite(t, t)


_NONCOMPARABLE_CHECKS: Tuple[ValueExpectation, ...] = (
    ValueExpectation("α(K3,3) = 2", _biclique(3), P.ALPHA, 2),
    ValueExpectation("h(K3,3) = 4", _biclique(3), P.HADWIGER, 4),
    ValueExpectation("h(3K2) = 2", _pattern("3K2"), P.HADWIGER, 2),
    ValueExpectation("α(3K2) = 3", _pattern("3K2"), P.ALPHA, 3),
) + tuple(
    check
    for t in (2, 3, 4)
    for check in (
        ValueExpectation(f"α(K{t},{t}) = 2", _biclique(t), P.ALPHA, 2),
        ValueExpectation(f"h(K{t},{t}) = {t + 1}", _biclique(t), P.HADWIGER, t + 1),
    )
) + tuple(
    ValueExpectation(f"h({m}K2) = 2", _matching(m), P.HADWIGER, 2) for m in (2, 3, 4)
)

_OBSTRUCTION_CHECKS: Tuple[ObstructionExpectation, ...] = (
    ObstructionExpectation(P.OMEGA, P.PSI, "omega_psi_family"),
    ObstructionExpectation(P.OMEGA, P.ALPHA, "omega_alpha_family"),
    ObstructionExpectation(P.OMEGA, P.PSEUDO_GRUNDY, "trivially_perfect_family"),
    ObstructionExpectation(P.B_CHROMATIC, P.GRUNDY, "b_grundy_family"),
    ObstructionExpectation(P.B_CHROMATIC, P.PSEUDO_GRUNDY, "b_pseudo_grundy_family"),
)

_THEOREMS: Tuple[Theorem, ...] = (
    Theorem("T1", "ωh-perfect graphs are exactly the chordal graphs", "equivalence",
            (perfect(P.OMEGA, P.HADWIGER), CHORDAL)),
    Theorem("T1b", "Every ωh-perfect graph is ωχ-perfect", "implication",
            (perfect(P.OMEGA, P.HADWIGER), perfect(P.OMEGA, P.CHI))),
    Theorem("T2", "ωψ-perfect graphs are exactly the (C4,P4,P3+K2,3K2)-free graphs", "equivalence",
            (perfect(P.OMEGA, P.PSI), free("omega_psi_family"))),
    Theorem("T3", "αh-perfect graphs are exactly the ωψ-perfect graphs", "equivalence",
            (perfect(P.ALPHA, P.HADWIGER), perfect(P.OMEGA, P.PSI))),
    Theorem("T3b", "Every ωψ-perfect graph is ωχ-perfect", "implication",
            (perfect(P.OMEGA, P.PSI), perfect(P.OMEGA, P.CHI))),
    Theorem("T4", "ωψ-, bψ-, Bψ-perfection and (C4,P4,P3+K2,3K2)-freeness coincide", "equivalence",
            (perfect(P.OMEGA, P.PSI), perfect(P.B_CHROMATIC, P.PSI),
             perfect(P.PSEUDO_B, P.PSI), free("omega_psi_family"))),
    Theorem("T5", "ωα-, bα-perfection and (P4,P3+K2,3K2)-freeness coincide", "equivalence",
            (perfect(P.OMEGA, P.ALPHA), perfect(P.B_CHROMATIC, P.ALPHA),
             free("omega_alpha_family"))),
    Theorem("T6", "ωγ-perfect graphs are exactly the (C4,P4)-free graphs", "equivalence",
            (perfect(P.OMEGA, P.PSEUDO_GRUNDY), free("trivially_perfect_family"))),
    Theorem("T7", "Γh-perfect graphs are exactly the ωγ-perfect graphs", "equivalence",
            (perfect(P.GRUNDY, P.HADWIGER), perfect(P.OMEGA, P.PSEUDO_GRUNDY))),
    Theorem("T8", "bΓ-perfect graphs are exactly the (P4,3P3,2D)-free graphs", "equivalence",
            (perfect(P.B_CHROMATIC, P.GRUNDY), free("b_grundy_family")),
            targeted=(_OBSTRUCTION_CHECKS[3],)),
    Theorem("T9", "bγ-perfect graphs are exactly the (C4,P4,3P3,2D)-free graphs", "equivalence",
            (perfect(P.B_CHROMATIC, P.PSEUDO_GRUNDY), free("b_pseudo_grundy_family")),
            targeted=(_OBSTRUCTION_CHECKS[4],)),
    Theorem("CHAINS", "ω ≤ h ≤ ψ, ω ≤ α ≤ ψ, ω ≤ b ≤ B ≤ ψ, ω ≤ Γ ≤ γ and ω ≤ χ", "per_graph",
            per_graph="chains"),
    Theorem("HADWIGER", "χ ≤ h", "per_graph", per_graph="hadwiger"),
    Theorem("LOVASZ", "A graph is ωχ-perfect iff its complement is", "equivalence",
            (perfect(P.OMEGA, P.CHI), Condition("complement_perfect", a=P.OMEGA, b=P.CHI))),
    Theorem("SPGT", "ωχ-perfect graphs are exactly the Berge graphs", "equivalence",
            (perfect(P.OMEGA, P.CHI), BERGE)),
    Theorem("NONCOMPARABLE", "α and h are incomparable", "targeted",
            targeted=_NONCOMPARABLE_CHECKS),
    Theorem("OBSTRUCTIONS", "Every forbidden graph is a minimal obstruction for its pair", "targeted",
            targeted=_OBSTRUCTION_CHECKS),
    Theorem("FALSIFIABILITY", "ωχ-perfect graphs are exactly the chordal graphs (false)", "equivalence",
            (perfect(P.OMEGA, P.CHI), CHORDAL), in_all=False),
)

THEOREMS: Dict[str, Theorem] = {t.theorem_id: t for t in _THEOREMS}


def get_theorem(theorem_id: str) -> Theorem:
    """
    Raises:
        UnknownTheoremError: If the id is not registered
    """
    if theorem_id not in THEOREMS:
        raise UnknownTheoremError(
            f"Unknown theorem id '{theorem_id}' (expected one of {', '.join(THEOREMS)} or all)"
        )
    return THEOREMS[theorem_id]


def resolve_theorem_ids(selector: str) -> List[str]:
    """'all' -> every registered id except the deliberately false ones."""
    if selector == "all":
        return [t.theorem_id for t in _THEOREMS if t.in_all]
    return [get_theorem(selector).theorem_id]


# ═══════════════════════════════════════════════════════════════════════════════
# PER-GRAPH EVALUATION
# ═══════════════════════════════════════════════════════════════════════════════

def _offending(g: Graph, vertices: Sequence[int], ctx: EvaluationContext) -> Tuple[str, Dict[str, int]]:
    if not vertices:
        return "", {}
    sub = induced_subgraph(g, mask_of(vertices))
    return emit_graph6(sub), ctx.checker.profile(sub).to_dict()


def _evaluate_per_graph(theorem: Theorem, g: Graph, ctx: EvaluationContext) -> Optional[Counterexample]:
    if theorem.per_graph == "chains":
        try:
            ctx.checker.profile(g)
        except ConsistencyError as error:
            return Counterexample(emit_graph6(g), g.n, {"chains hold": False}, detail=str(error))
        return None
    if theorem.per_graph == "hadwiger":
        profile = ctx.checker.profile(g)
        if profile.chi > profile.hadwiger:
            return Counterexample(
                emit_graph6(g), g.n, {"χ ≤ h": False},
                subgraph=emit_graph6(g), subgraph_vertices=list(range(g.n)),
                values=profile.to_dict(),
                detail=f"χ={profile.chi} > h={profile.hadwiger}",
            )
        return None
    raise ValueError(f"Unknown per-graph check: {theorem.per_graph}")


def evaluate_graph(theorem: Theorem, g: Graph, ctx: EvaluationContext) -> Optional[Counterexample]:
    """
    Check one graph against a theorem.

    Returns:
        A Counterexample, or None if the claim holds on g
    """
    if theorem.kind == "per_graph":
        return _evaluate_per_graph(theorem, g, ctx)
    if theorem.kind == "targeted":
        return None

    values = [evaluate_condition(c, g, ctx) for c in theorem.conditions]
    if theorem.kind == "equivalence":
        holds = all(v == values[0] for v in values)
    else:
        holds = (not values[0]) or all(values[1:])
    if holds:
        return None

    sides = {c.label(ctx.catalog): v for c, v in zip(theorem.conditions, values)}
    notes = []
    vertices: List[int] = []
    for condition, value in zip(theorem.conditions, values):
        if value:
            continue
        found, note = explain_condition(condition, g, ctx)
        notes.append(f"not {condition.label(ctx.catalog)}: {note}")
        if not vertices and found and condition.kind != "complement_perfect":
            vertices = found
    subgraph, profile_values = _offending(g, vertices, ctx)
    return Counterexample(
        graph6=emit_graph6(g),
        order=g.n,
        sides=sides,
        subgraph=subgraph,
        subgraph_vertices=list(vertices),
        values=profile_values,
        detail="; ".join(notes),
    )


def run_targeted(theorem: Theorem, ctx: EvaluationContext) -> List[TargetedCheck]:
    """Run a theorem's fixed-graph checks."""
    results: List[TargetedCheck] = []
    for spec in theorem.targeted:
        if isinstance(spec, ValueExpectation):
            g = spec.build(ctx.catalog)
            observed = ctx.checker.profile(g).value(spec.parameter)
            results.append(TargetedCheck(
                label=spec.label,
                graph6=emit_graph6(g),
                passed=observed == spec.expected,
                details={"parameter": spec.parameter.value, "expected": spec.expected,
                         "observed": observed},
            ))
        elif isinstance(spec, ObstructionExpectation):
            for pattern in ctx.catalog.family(PATTERN_CONFIG[spec.family]):
                check = check_obstruction(pattern.graph, spec.a, spec.b, ctx.checker.cache,
                                          name=pattern.name)
                results.append(TargetedCheck(
                    label=(f"{pattern.name} minimal ({PARAMETER_SYMBOLS[spec.a]}, "
                           f"{PARAMETER_SYMBOLS[spec.b]}) obstruction"),
                    graph6=check.graph6,
                    passed=check.passed,
                    details=check.to_dict(),
                ))
        else:
            raise ValueError(f"Unknown targeted check: {spec!r}")
    return results


# ═══════════════════════════════════════════════════════════════════════════════
# PROCESS WORKERS
# ═══════════════════════════════════════════════════════════════════════════════

_WORKER_STATE: Dict[str, Any] = {}


def _init_worker(snapshot: Dict[str, Any], catalog_path: str) -> None:
    _WORKER_STATE["cache"] = ProfileCache(snapshot)
    _WORKER_STATE["catalog"] = default_catalog(catalog_path)


def _evaluate_chunk(theorem_id: str, chunk: List[Tuple[int, str]]):
    cache: ProfileCache = _WORKER_STATE["cache"]
    ctx = EvaluationContext(PerfectionChecker(cache), _WORKER_STATE["catalog"])
    theorem = get_theorem(theorem_id)
    outcomes = [(index, evaluate_graph(theorem, parse_graph6(text), ctx)) for index, text in chunk]
    return outcomes, cache.drain_new()


# ═══════════════════════════════════════════════════════════════════════════════
# THEOREM VERIFIER
# ═══════════════════════════════════════════════════════════════════════════════

class TheoremVerifier:
    """
    Runs registry entries over a graph universe.

    Example:
        >>> verifier = TheoremVerifier(workers=1, progress=False)
        >>> verifier.verify("T6", max_order=5).verified
        True
    """

    def __init__(
        self,
        cache: Optional[ProfileCache] = None,
        catalog: Optional[PatternCatalog] = None,
        workers: Optional[int] = None,
        progress: Optional[bool] = None,
    ):
        self.cache = cache if cache is not None else ProfileCache()
        self.catalog = catalog or default_catalog()
        self.workers = workers or VERIFICATION_CONFIG["workers"]
        if self.workers < 1:
            raise ValueError("Worker count must be at least 1")
        if progress is None:
            progress = VERIFICATION_CONFIG["progress"] and sys.stderr.isatty()
        self.progress = progress
        self.cap = VERIFICATION_CONFIG["counterexample_cap"]

        # Statistics
        self.reports_made = 0
        self.graphs_checked = 0

    def _context(self) -> EvaluationContext:
        return EvaluationContext(PerfectionChecker(self.cache), self.catalog)

    def _sweep_serial(self, theorem: Theorem, graphs: List[Graph]) -> List[Optional[Counterexample]]:
        ctx = self._context()
        return [
            evaluate_graph(theorem, g, ctx)
            for g in tqdm(graphs, desc=theorem.theorem_id, disable=not self.progress, unit="graph")
        ]

    def _sweep_parallel(self, theorem: Theorem, graphs: List[Graph]) -> List[Optional[Counterexample]]:
        chunk_size = VERIFICATION_CONFIG["chunk_size"]
        items = [(i, emit_graph6(g)) for i, g in enumerate(graphs)]
        chunks = [items[i:i + chunk_size] for i in range(0, len(items), chunk_size)]
        outcomes: List[Optional[Counterexample]] = [None] * len(graphs)

        with ProcessPoolExecutor(
            max_workers=self.workers,
            initializer=_init_worker,
            initargs=(self.cache.snapshot(), self.catalog.source or PATTERN_CONFIG["catalog_path"]),
        ) as pool:
            futures = [pool.submit(_evaluate_chunk, theorem.theorem_id, chunk) for chunk in chunks]
            with tqdm(total=len(graphs), desc=theorem.theorem_id,
                      disable=not self.progress, unit="graph") as bar:
                for future in as_completed(futures):
                    results, new_entries = future.result()
                    self.cache.merge(new_entries)
                    for index, outcome in results:
                        outcomes[index] = outcome
                    bar.update(len(results))
        return outcomes

    def _reverify(self, theorem: Theorem, counterexample: Counterexample) -> Counterexample:
        ctx = EvaluationContext.fresh(self.catalog)
        again = evaluate_graph(theorem, parse_graph6(counterexample.graph6), ctx)
        if again is None or again.sides != counterexample.sides:
            raise ConsistencyError(
                f"{theorem.theorem_id}: counterexample {counterexample.graph6} did not reproduce"
            )
        counterexample.reverified = True
        return counterexample

    def verify(
        self,
        theorem_id: str,
        max_order: int,
        source: Optional[Iterable[Graph]] = None,
    ) -> TheoremReport:
        """
        Verify one theorem.

        Args:
            theorem_id: Registered id
            max_order: Universe bound (also the enumeration order when no
                source is given)
            source: Graphs to check instead of the full enumeration

        Raises:
            UnknownTheoremError: If the id is not registered
            GraphError: If the source yields a graph above max_order
        """
        theorem = get_theorem(theorem_id)
        started = time.perf_counter()

        graphs: List[Graph] = []
        if theorem.kind != "targeted":
            for g in (source if source is not None else enumerate_up_to(max_order)):
                if g.n > max_order:
                    raise GraphError(f"Source graph {g} has order {g.n} > {max_order}")
                graphs.append(g)

        if self.workers > 1 and len(graphs) > VERIFICATION_CONFIG["chunk_size"]:
            outcomes = self._sweep_parallel(theorem, graphs)
        else:
            outcomes = self._sweep_serial(theorem, graphs)

        failures = [c for c in outcomes if c is not None]
        total = len(failures)
        kept = [self._reverify(theorem, c) for c in failures[:self.cap]]

        targeted = run_targeted(theorem, self._context())
        for check in targeted:
            if check.passed:
                continue
            total += 1
            if len(kept) < self.cap:
                g = parse_graph6(check.graph6)
                kept.append(Counterexample(
                    graph6=check.graph6, order=g.n, sides={check.label: False},
                    detail=f"targeted check failed: {check.details}", reverified=True,
                ))

        report = TheoremReport(
            theorem_id=theorem.theorem_id,
            title=theorem.title,
            statement=theorem.statement(self.catalog),
            max_order=max_order,
            graph_count=len(graphs) + len(targeted),
            counterexamples=kept,
            counterexample_total=total,
            targeted=targeted,
            elapsed_seconds=time.perf_counter() - started,
            catalog_sha256=self.catalog.sha256,
            workers=self.workers,
        )
        self.reports_made += 1
        self.graphs_checked += len(graphs)
        log_verification_event(report)
        return report

    def verify_many(self, selector: str, max_order: int,
                    source: Optional[Iterable[Graph]] = None) -> List[TheoremReport]:
        """Verify 'all' or a single id; a source is materialized once and reused."""
        graphs = list(source) if source is not None else None
        return [self.verify(tid, max_order, graphs) for tid in resolve_theorem_ids(selector)]

    def spot_check(self, count: Optional[int] = None) -> None:
        """
        Recompute random cache entries.

        Raises:
            ConsistencyError: If any cached profile differs from a fresh one
        """
        mismatched = self.cache.spot_check(count)
        if mismatched:
            raise ConsistencyError(f"Cache spot check failed for {mismatched}")

    def get_statistics(self) -> Dict[str, Any]:
        return {
            "reports_made": self.reports_made,
            "graphs_checked": self.graphs_checked,
            "workers": self.workers,
            "cache": self.cache.get_statistics(),
        }


def verify_theorem(
    theorem_id: str,
    max_order: int,
    source: Optional[Iterable[Graph]] = None,
    cache: Optional[ProfileCache] = None,
    workers: Optional[int] = None,
    catalog: Optional[PatternCatalog] = None,
) -> TheoremReport:
    """
    Verify one registered theorem over a universe.

    Raises:
        UnknownTheoremError: If the id is not registered
    """
    verifier = TheoremVerifier(cache=cache, catalog=catalog, workers=workers, progress=False)
    return verifier.verify(theorem_id, max_order, source)


__all__ = [
    "UnknownTheoremError",
    "Condition",
    "Counterexample",
    "TargetedCheck",
    "Theorem",
    "TheoremReport",
    "THEOREMS",
    "get_theorem",
    "resolve_theorem_ids",
    "EvaluationContext",
    "evaluate_condition",
    "evaluate_graph",
    "run_targeted",
    "TheoremVerifier",
    "verify_theorem",
]
