"""Fractional perfect matchings on domination graphs and the rules built on them."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from intensity_distortion.core.errors import EmptyCoreError, NoFeasibleAlternativeError
from intensity_distortion.core.profile import ElicitationMode, Profile, intensity_rank
from intensity_distortion.scoring_game import distortion_bound, padded_scores

logger = logging.getLogger(__name__)

_SOURCE = "source"
_SINK = "sink"


@dataclass(frozen=True)
class DominationGraph:
    """Bipartite agent/alternative graph for one target alternative.

    (i, c) is an edge when agent i ranks the target at least as high as c.
    """

    target: int
    agent_weights: tuple[Fraction, ...]
    alt_weights: tuple[Fraction, ...]
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class MatchingResult:
    feasible: bool
    witness: dict[tuple[int, int], Fraction] | None = None


@dataclass(frozen=True)
class RobustOutcome:
    winner: int
    beta: Fraction
    bound: Fraction


def _unit_weights(weights: Sequence[Fraction | int], name: str) -> tuple[Fraction, ...]:
    values = tuple(Fraction(w) for w in weights)
    if any(w < 0 for w in values):
        raise ValueError(f"{name} weights must be non-negative")
    if sum(values, Fraction(0)) != 1:
        raise ValueError(f"{name} weights must sum to 1, got {sum(values, Fraction(0))}")
    return values


def domination_graph(
    profile: Profile,
    target: int,
    agent_weights: Sequence[Fraction | int],
    alt_weights: Sequence[Fraction | int],
) -> DominationGraph:
    p = _unit_weights(agent_weights, "Agent")
    q = _unit_weights(alt_weights, "Alternative")
    if len(p) != profile.num_agents or len(q) != profile.num_alternatives:
        raise ValueError("Weight vectors do not match the profile dimensions")

    edges = set()
    for i, pref in enumerate(profile.preferences):
        ranks = pref.ranks()
        for c in range(profile.num_alternatives):
            if ranks[target] <= ranks[c]:
                edges.add((i, c))
    return DominationGraph(target, p, q, frozenset(edges))


def has_fractional_perfect_matching(graph: DominationGraph) -> MatchingResult:
    """Decide feasibility by exact max-flow; saturating flow 1 means a matching exists."""
    network = nx.DiGraph()
    for i, weight in enumerate(graph.agent_weights):
        network.add_edge(_SOURCE, ("agent", i), capacity=weight)
    for c, weight in enumerate(graph.alt_weights):
        network.add_edge(("alt", c), _SINK, capacity=weight)
    for i, c in sorted(graph.edges):
        # no capacity attribute: networkx treats the edge as uncapacitated
        network.add_edge(("agent", i), ("alt", c))

    flow_value, flow_dict = nx.maximum_flow(network, _SOURCE, _SINK, flow_func=edmonds_karp)
    if flow_value != 1:
        logger.debug(f"Target {graph.target}: max flow {flow_value}, no perfect matching")
        return MatchingResult(False)

    witness = {
        (i, c): Fraction(flow_dict[("agent", i)][("alt", c)]) for i, c in sorted(graph.edges)
    }
    logger.debug(f"Target {graph.target}: fractional perfect matching found")
    return MatchingResult(True, witness)


def plurality_scores(m: int) -> tuple[Fraction, ...]:
    return (Fraction(1),) + (Fraction(0),) * (m - 1)


def psm_alternative_weights(
    profile: Profile, scores: Sequence[Fraction | int]
) -> tuple[Fraction, ...]:
    """q(c) = (1/n) sum_i s[rank_i(c)]."""
    s = _unit_weights(scores, "Score")
    if len(s) != profile.num_alternatives:
        raise ValueError(
            f"Scoring vector has {len(s)} entries, expected {profile.num_alternatives}"
        )
    return _average_scores(profile, [s] * profile.num_agents)


def general_alternative_weights(profile: Profile) -> tuple[Fraction, ...]:
    """q(c) = (1/n) sum_i r^{l_i}[rank_i(c)], with l_i the agent's intensity rank."""
    m = profile.num_alternatives
    vectors = [
        padded_scores(intensity_rank(pref), profile.alpha, m) for pref in profile.preferences
    ]
    return _average_scores(profile, vectors)


def _average_scores(
    profile: Profile, vectors: Sequence[Sequence[Fraction]]
) -> tuple[Fraction, ...]:
    n = profile.num_agents
    if n == 0:
        raise ValueError("Profile has no agents")
    q = [Fraction(0)] * profile.num_alternatives
    for pref, s in zip(profile.preferences, vectors, strict=True):
        for position, alt in enumerate(pref.ranking):
            q[alt] += s[position]
    return tuple(value / n for value in q)


def matching_winner(profile: Profile, alt_weights: Sequence[Fraction]) -> int:
    """Lowest-index alternative whose domination graph has a perfect matching."""
    n = profile.num_agents
    p = [Fraction(1, n)] * n
    for target in range(profile.num_alternatives):
        graph = domination_graph(profile, target, p, alt_weights)
        if has_fractional_perfect_matching(graph).feasible:
            return target
    raise NoFeasibleAlternativeError(
        f"No alternative admits a fractional perfect matching for q = {tuple(alt_weights)}"
    )


def psm_winner(profile: Profile, scores: Sequence[Fraction | int]) -> int:
    return matching_winner(profile, psm_alternative_weights(profile, scores))


def general_winner(profile: Profile) -> int:
    """Scoring-matching winner with each agent scored by its own intensity rank."""
    if profile.mode is not ElicitationMode.MANDATORY:
        raise ValueError("The per-agent intensity-rank rule needs mandatory elicitation")
    if profile.num_alternatives == 1:
        return 0
    return matching_winner(profile, general_alternative_weights(profile))


def robust_distortion_bound(ell: int, alpha: Fraction, beta: Fraction) -> Fraction:
    """D + beta/(1 - beta) (1 + D) with D = 2 + max(alpha, t_ell)."""
    if not 0 <= beta < 1:
        raise ValueError(f"beta must lie in [0, 1), got {beta}")
    base = distortion_bound(ell, alpha)
    return base + beta / (1 - beta) * (1 + base)


def robust_outcome(profile: Profile, ell: int) -> RobustOutcome:
    """Run the general rule on agents with intensity rank <= ell."""
    if profile.num_alternatives == 1:
        core = list(range(profile.num_agents))
    else:
        core = [
            i for i, pref in enumerate(profile.preferences) if intensity_rank(pref) <= ell
        ]
    if not core:
        raise EmptyCoreError(f"No agent has intensity rank at most {ell}")

    beta = Fraction(profile.num_agents - len(core), profile.num_agents)
    if beta > Fraction(1, 2):
        logger.warning(
            f"{profile.num_agents - len(core)} of {profile.num_agents} agents exceed rank {ell}; "
            "the robustness guarantee needs at most half"
        )
    winner = general_winner(profile.restricted_to(core))
    return RobustOutcome(winner, beta, robust_distortion_bound(ell, profile.alpha, beta))


def robust_winner(profile: Profile, ell: int) -> int:
    return robust_outcome(profile, ell).winner
