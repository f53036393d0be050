"""Sufficient-condition evaluation, sharpness replay, and corpus scanning.

Three sufficient conditions for a graph being fractional [a, b]-deleted are
supported, addressed by stable ids:

* ``"1.4"``: spectral radius strictly above that of the tight example;
* ``"1.6"``: signless Laplacian radius strictly above both the threshold
  2n - 4 + (a+1)/(n-1) and the tight example's value (connected graphs);
* ``"1.8"``: minimum degree >= a + 1 and edge count >= C(n-1, 2) + (a+2)/2.

All three require b >= max(a, 3) and n >= max(a+2, 7) to apply. Evaluation
always runs the exact oracle alongside the hypothesis (within the size
guard) and reports whether the pair is consistent, i.e. never
"hypothesis met but property false".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .graph import Graph, Graph6Error, extremal, is_connected, parse_graph6
from .oracle import (
    SUBSET_GUARD,
    DeficiencyWitness,
    _validate_ab,
    is_fractional_ab_deleted,
)
from .spectral import DEFAULT_TOL, spectral_summary

__all__ = [
    "THEOREM_IDS",
    "DEFAULT_MARGIN",
    "TheoremReport",
    "eval_theorem",
    "eval_spectral_radius_condition",
    "eval_signless_laplacian_condition",
    "eval_edge_count_condition",
    "SharpnessError",
    "SharpnessReport",
    "verify_sharpness",
    "graphs_with_min_edges",
    "ScanRecord",
    "scan",
    "summarize",
]

THEOREM_IDS = ("1.4", "1.6", "1.8")

# Strict inequalities on floats: x > y counts only when x - y > DEFAULT_MARGIN,
# so values within the margin are treated as not strictly greater.
DEFAULT_MARGIN = 1e-9


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of evaluating one sufficient condition on one graph."""

    theorem_id: str
    n: int
    a: int
    b: int
    hypothesis_values: dict
    hypothesis_met: bool
    applicable: bool
    oracle_verdict: bool | str | None  # True / False / "skipped(size-guard)"
    consistent: bool
    margin: float
    witness: DeficiencyWitness | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "applicable": self.applicable,
            "hypothesis_met": self.hypothesis_met,
            "oracle": self.oracle_verdict,
            "consistent": self.consistent,
            "margin": self.margin,
            "values": self.hypothesis_values,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


@lru_cache(maxsize=512)
def _extremal_spectra(n: int, a: int, tol: float) -> tuple[float, float]:
    summary = spectral_summary(extremal(n, a), tol)
    return summary.rho, summary.q


def _strictly_greater(x: float, y: float, margin: float) -> bool:
    return x - y > margin


def eval_theorem(
    graph: Graph,
    theorem_id: str,
    a: int,
    b: int,
    *,
    tol: float = DEFAULT_TOL,
    margin: float = DEFAULT_MARGIN,
    max_n: int | None = None,
) -> TheoremReport:
    """Evaluate one sufficient condition and the exact oracle on a graph.

    The oracle runs whenever n is within the subset-enumeration guard
    (or the max_n override); otherwise the verdict is the string
    "skipped(size-guard)" and no consistency claim is made.
    """
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}")
    _validate_ab(a, b)
    if graph.n < 1:
        raise ValueError("graph must have at least one vertex")

    n = graph.n
    e = graph.edge_count
    delta = graph.min_degree()
    connected = is_connected(graph)
    summary = spectral_summary(graph, tol)

    applicable = b >= max(a, 3) and n >= max(a + 2, 7)
    if theorem_id == "1.6":
        applicable = applicable and connected

    values: dict = {
        "e": e,
        "delta": delta,
        "connected": connected,
        "rho": summary.rho,
        "q": summary.q,
    }

    if theorem_id == "1.4":
        rho_star = _extremal_spectra(n, a, tol)[0] if n >= a + 2 else None
        values["rho_extremal"] = rho_star
        hypothesis_met = rho_star is not None and _strictly_greater(summary.rho, rho_star, margin)
    elif theorem_id == "1.6":
        threshold = 2 * n - 4 + (a + 1) / (n - 1) if n >= 2 else None
        q_star = _extremal_spectra(n, a, tol)[1] if n >= a + 2 else None
        values["q_threshold"] = threshold
        values["q_extremal"] = q_star
        hypothesis_met = (
            threshold is not None
            and q_star is not None
            and _strictly_greater(summary.q, threshold, margin)
            and _strictly_greater(summary.q, q_star, margin)
        )
    else:  # "1.8"
        values["min_degree_needed"] = a + 1
        values["size_bound"] = (n - 1) * (n - 2) / 2 + (a + 2) / 2
        # compare 2e >= (n-1)(n-2) + a + 2 so the half-integer bound stays exact
        hypothesis_met = delta >= a + 1 and 2 * e >= (n - 1) * (n - 2) + a + 2

    guard = SUBSET_GUARD if max_n is None else max_n
    witness = None
    if n <= guard:
        verdict, witness = is_fractional_ab_deleted(graph, a, b, max_n=max_n)
        oracle_verdict: bool | str = verdict
    else:
        oracle_verdict = "skipped(size-guard)"

    consistent = not (applicable and hypothesis_met and oracle_verdict is False)
    return TheoremReport(
        theorem_id=theorem_id,
        n=n,
        a=a,
        b=b,
        hypothesis_values=values,
        hypothesis_met=hypothesis_met,
        applicable=applicable,
        oracle_verdict=oracle_verdict,
        consistent=consistent,
        margin=margin,
        witness=witness,
    )


def eval_spectral_radius_condition(graph: Graph, a: int, b: int, **kwargs) -> TheoremReport:
    return eval_theorem(graph, "1.4", a, b, **kwargs)


def eval_signless_laplacian_condition(graph: Graph, a: int, b: int, **kwargs) -> TheoremReport:
    return eval_theorem(graph, "1.6", a, b, **kwargs)


def eval_edge_count_condition(graph: Graph, a: int, b: int, **kwargs) -> TheoremReport:
    return eval_theorem(graph, "1.8", a, b, **kwargs)


class SharpnessError(RuntimeError):
    """A sharpness replay assertion failed."""


@dataclass(frozen=True)
class SharpnessReport:
    """Evidence that the conditions are tight on the extremal construction."""

    n: int
    a: int
    b: int
    witness: DeficiencyWitness
    rho: float
    q: float
    rho_gap: float
    q_gap: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "passed": True,
            "witness": self.witness.to_json(),
            "rho": self.rho,
            "q": self.q,
            "rho_gap": self.rho_gap,
            "q_gap": self.q_gap,
        }


def verify_sharpness(
    n: int,
    a: int,
    b: int,
    *,
    tol: float = DEFAULT_TOL,
    margin: float = DEFAULT_MARGIN,
) -> SharpnessReport:
    """Replay the tightness argument for the extremal graph at (n, a, b).

    Checks that the extremal graph is NOT fractional [a, b]-deleted, that the
    refuting witness is exactly (S = empty, T = the degree-a vertices,
    theta = 0, epsilon = 1), and that both spectral hypotheses fail at
    equality (gap within margin) on the extremal graph itself. Any failed
    check raises SharpnessError.
    """
    _validate_ab(a, b)
    if not (b >= max(a, 3) and n >= max(a + 2, 7)):
        raise ValueError(f"sharpness replay needs b >= max(a,3) and n >= max(a+2,7), got n={n}, a={a}, b={b}")
    gstar = extremal(n, a)

    verdict, witness = is_fractional_ab_deleted(gstar, a, b)
    if verdict is not False or witness is None:
        raise SharpnessError(f"extremal graph at n={n}, a={a}, b={b} was not refuted by the oracle")
    expected_t = tuple(v for v in range(n) if gstar.degree(v) == a)
    if witness.s != ():
        raise SharpnessError(f"expected the empty S in the witness, got {witness.s}")
    if witness.t != expected_t:
        raise SharpnessError(f"expected T = {expected_t} (the degree-a vertices), got {witness.t}")
    if n >= a + 3 and len(witness.t) != 1:
        raise SharpnessError(f"expected a single degree-a vertex at n={n}, a={a}, got {witness.t}")
    if witness.theta != 0 or witness.epsilon != 1:
        raise SharpnessError(f"expected theta=0 < epsilon=1, got theta={witness.theta}, epsilon={witness.epsilon}")

    report_rho = eval_theorem(gstar, "1.4", a, b, tol=tol, margin=margin)
    report_q = eval_theorem(gstar, "1.6", a, b, tol=tol, margin=margin)
    rho_gap = report_rho.hypothesis_values["rho"] - report_rho.hypothesis_values["rho_extremal"]
    q_gap = report_q.hypothesis_values["q"] - report_q.hypothesis_values["q_extremal"]
    if report_rho.hypothesis_met:
        raise SharpnessError(f"spectral-radius hypothesis unexpectedly met on the extremal graph (gap {rho_gap})")
    if abs(rho_gap) > margin:
        raise SharpnessError(f"spectral radius not at equality on the extremal graph (gap {rho_gap})")
    if report_q.hypothesis_met:
        raise SharpnessError(f"signless-Laplacian hypothesis unexpectedly met on the extremal graph (gap {q_gap})")
    if abs(q_gap) > margin:
        raise SharpnessError(f"signless Laplacian radius not at equality on the extremal graph (gap {q_gap})")

    return SharpnessReport(
        n=n,
        a=a,
        b=b,
        witness=witness,
        rho=report_rho.hypothesis_values["rho"],
        q=report_q.hypothesis_values["q"],
        rho_gap=rho_gap,
        q_gap=q_gap,
    )


def graphs_with_min_edges(n: int, min_edges: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices with at least min_edges edges.

    Enumerated through complements (choose which pairs to remove from K_n),
    so dense families come out without touching the full 2^C(n,2) space.
    Deterministic order: edge count descending, removed pairs lexicographic.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    pairs = list(combinations(range(n), 2))
    total = len(pairs)
    if min_edges > total:
        return
    for k in range(total - min_edges + 1):
        for missing in combinations(range(total), k):
            missing_set = set(missing)
            yield Graph(n, (pairs[i] for i in range(total) if i not in missing_set))


@dataclass(frozen=True)
class ScanRecord:
    """One scanned input line: either a theorem report or a parse error."""

    index: int  # 1-based line number in the input stream
    graph6: str
    report: TheoremReport | None
    error: str | None

    @property
    def is_counterexample(self) -> bool:
        return self.report is not None and not self.report.consistent

    def to_json(self) -> dict:
        if self.error is not None:
            return {"id": self.index, "graph6": self.graph6, "error": self.error}
        return {"id": self.index, "graph6": self.graph6, **self.report.to_json()}


def scan(
    lines: Iterable[str],
    theorem_id: str,
    a: int,
    b: int,
    *,
    tol: float = DEFAULT_TOL,
    margin: float = DEFAULT_MARGIN,
    max_n: int | None = None,
) -> Iterator[ScanRecord]:
    """Evaluate one condition against every graph6 line of a stream.

    Malformed lines become error records and scanning continues; blank
    lines are skipped. Records come out in input order.
    """
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; expected one of {THEOREM_IDS}")
    _validate_ab(a, b)
    for index, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            graph = parse_graph6(text)
            report = eval_theorem(graph, theorem_id, a, b, tol=tol, margin=margin, max_n=max_n)
        except (Graph6Error, ValueError) as exc:
            yield ScanRecord(index, text, None, str(exc))
            continue
        yield ScanRecord(index, text, report, None)


def summarize(records: Iterable[ScanRecord]) -> dict:
    """Counts over scan records, in the order the scan summary reports them."""
    graphs = errors = hypothesis_met = oracle_true = counterexamples = skipped = 0
    for record in records:
        if record.error is not None:
            errors += 1
            continue
        graphs += 1
        report = record.report
        if report.hypothesis_met:
            hypothesis_met += 1
        if report.oracle_verdict is True:
            oracle_true += 1
        elif isinstance(report.oracle_verdict, str):
            skipped += 1
        if not report.consistent:
            counterexamples += 1
    return {
        "graphs": graphs,
        "hypothesis_met": hypothesis_met,
        "oracle_true": oracle_true,
        "counterexamples": counterexamples,
        "errors": errors,
        "oracle_skipped": skipped,
    }
