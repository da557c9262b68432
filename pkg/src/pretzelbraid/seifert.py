"""Seifert-circle statistics and the constructive braid-index upper bound.

The standard Type 3 diagram has a main cycle of 2n Seifert circles from its
parallel strips; every antiparallel strip with 2a crossings hangs a chain of
2a - 1 circles between two of them.  Closed formulas for the counts follow:

    s = 2n - kappa+ - kappa- + 2*sum(alpha) + 2*sum(beta)
    w = c - 2*c^-
    r+ = sum(alpha) - kappa+      (strip-internal reduction moves)
    r- = sum(beta) - kappa-

The reduction planner is arithmetic with a trace, not a diagram rewriter:
each braid-index clause comes with a deterministic count of circle-removing
moves (strip-internal Murasugi-Przytycki moves, main-cycle moves on lone
crossings, A-moves pairing a lone crossing with an antiparallel strip, N-move
style reroutings, and the long-circle constructions of the exceptional
family).  The plan records those counts and the final circle count, which the
case dispatcher guarantees to match the constructive upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pretzel import PretzelInputError, Type3Grouping


@dataclass(frozen=True)
class SeifertStats:
    """Circle and crossing counts of the standard diagram of a grouping."""

    s: int
    c: int
    c_minus: int
    w: int
    delta_plus: int
    delta_minus: int
    r_plus: int
    r_minus: int
    sigma_plus: int
    sigma_minus: int

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "c": self.c,
            "c_minus": self.c_minus,
            "w": self.w,
            "delta_plus": self.delta_plus,
            "delta_minus": self.delta_minus,
            "r_plus": self.r_plus,
            "r_minus": self.r_minus,
            "sigma_plus": self.sigma_plus,
            "sigma_minus": self.sigma_minus,
        }


def compute_stats(g: Type3Grouping) -> SeifertStats:
    two_n = 2 * g.n
    c = g.crossings
    c_minus = g.negative_crossings
    s = two_n - g.kappa_plus - g.kappa_minus + 2 * g.sum_alpha + 2 * g.sum_beta
    if two_n == 2:
        # both parallel strips join the same pair of main-cycle circles
        sigma_plus = 1 if sum(g.mu) >= 2 else 0
        sigma_minus = 1 if sum(g.nu) >= 2 else 0
    else:
        sigma_plus = sum(1 for m in g.mu if m >= 2)
        sigma_minus = sum(1 for v in g.nu if v >= 2)
    return SeifertStats(
        s=s,
        c=c,
        c_minus=c_minus,
        w=c - 2 * c_minus,
        delta_plus=g.delta_plus,
        delta_minus=g.delta_minus,
        r_plus=g.sum_alpha - g.kappa_plus,
        r_minus=g.sum_beta - g.kappa_minus,
        sigma_plus=sigma_plus,
        sigma_minus=sigma_minus,
    )


@dataclass(frozen=True)
class Move:
    kind: str
    count: int


@dataclass(frozen=True)
class ReductionPlan:
    """Move counts bringing the diagram down to the constructive bound."""

    case_label: str
    moves: tuple[Move, ...]
    s_initial: int
    final_seifert_count: int

    def to_json(self) -> dict:
        return {
            "case": self.case_label,
            "moves": [{"kind": m.kind, "count": m.count} for m in self.moves if m.count],
            "s_initial": self.s_initial,
            "s_final": self.final_seifert_count,
        }


def _case_moves(case_id: str, g: Type3Grouping) -> list[Move]:
    """Move counts for the normalized, alias-rewritten grouping."""
    ka, kb = g.kappa_plus, g.kappa_minus
    sa, sb = g.sum_alpha, g.sum_beta
    da, n = g.delta_plus, g.n
    strip_moves = [Move("MP-strip", (sa - ka) + (sb - kb))]

    if case_id.startswith("MT2"):
        a_moves = min(ka, da)
        cycle = min(da - ka, n - 1) if da > ka else 0
        return [Move("A-move", a_moves), Move("MP-main-cycle", cycle)] + strip_moves
    if case_id == "MT1e0":
        # two-strip torus closure; one twist-cancellation when it unknots
        v = 1 if (g.rho_minus == 1 and abs(g.mu[0] - g.nu[0]) == 1) else 2
        return [Move("torus-reduction", 2 - v)]
    if case_id == "MT1e1.3":
        return strip_moves + [Move("special-long-circle", 2)]
    if case_id == "MT1e2.1":
        return [Move("long-circle", 1), Move("special", sa - ka)]
    if case_id in ("MT1e2.3", "MT1e2.4", "MT1e2.5"):
        return [Move("N-move", 1)] + strip_moves
    if case_id == "MT1e2.1m":
        # mirror image of the long-circle construction
        return [Move("long-circle", 1), Move("special", sb - kb)]
    if case_id in ("MT1e3.1", "MT1e3.1m", "MT1e4.1", "MT1e4.2",
                   "MT1e7.1", "MT1e7.2", "MT1e7.3", "MT1e7.4", "MT1e7.x"):
        return strip_moves
    if case_id == "MT1e5.1":
        return [Move("A-move", 2)] + strip_moves
    if case_id in ("MT1e6.1",):
        return [Move("N-move", 1)] + strip_moves
    if case_id in ("MT1e6.3", "MT1e6.5"):
        return [Move("A-move", 1)] + strip_moves
    raise PretzelInputError(f"no reduction recipe for case {case_id}")


def upper_bound(g: Type3Grouping, case=None) -> ReductionPlan:
    """Constructive upper bound for the braid index, as a move plan.

    The plan's final circle count equals the clause value (the interval's
    upper end on the exceptional family).  ``case`` may carry a precomputed
    ``CaseResult``; otherwise the dispatcher is consulted.
    """
    from .braid_index import theorem_case  # local import: seifert is a dependency of braid_index

    if case is None:
        case = theorem_case(g)
    g2 = case.normalized
    stats0 = compute_stats(normalize_for_stats(g))
    moves = _case_moves(case.case_id, g2)
    if case.rewritten:
        # the alias merge itself removes one Seifert circle
        moves = [Move("strip-merge", 1)] + moves
    total = sum(m.count for m in moves)
    final = stats0.s - total
    if final != case.hi:
        raise AssertionError(
            f"{g.notation()}: plan reaches {final} circles, clause {case.case_id} "
            f"promises {case.hi}"
        )
    return ReductionPlan(
        case_label=case.case_id,
        moves=tuple(m for m in moves if m.count),
        s_initial=stats0.s,
        final_seifert_count=final,
    )


def normalize_for_stats(g: Type3Grouping) -> Type3Grouping:
    """Mirror image when needed; circle counts are mirror-invariant."""
    from .braid_index import normalize

    return normalize(g)[0]
