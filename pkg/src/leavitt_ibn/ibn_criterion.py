"""The rank criterion for Invariant Basis Number, with checkable witnesses.

The algebra of a finite graph has IBN exactly when the all-ones column is
NOT in the column span of M = A^t - J (ranks differ).  When ranks agree,
the failure is constructive: an integer solution of M x = d * b converts
into two rewrite schedules from m * sum(V) and n * sum(V), m != n, landing
on the same monoid element.  The witness stores both schedules so that
verification is a pure replay, independent of how it was built.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import (
    InsufficientCoefficient,
    MalformedWitness,
    NotApplicable,
    NotRegular,
    WitnessConstructionFailed,
)
from .exact_linalg import augmented_ranks, criterion_system, matrix_vector, solve_particular
from .graph_core import Graph
from .graph_monoid import (
    MonoidVector,
    RewriteTrace,
    execute_counts,
    replay_trace,
    uniform_vector,
)

logger = logging.getLogger(__name__)

SLACK_BOUND_FACTOR = 10  # slack loop tries t = 0 .. 10 * d * vertex count


@dataclass(frozen=True)
class Witness:
    """Certificate that the algebra lacks IBN: replaying sigma from
    m * sum(V) and sigma_prime from n * sum(V) must reach gamma."""

    m: int
    n: int
    d: int  # m - n, the scaling that made the solution integral
    m_vec: dict[str, int]  # integer solution on regular vertices
    k: dict[str, int]  # application counts for the m side
    k_prime: dict[str, int]  # application counts for the n side
    sigma: RewriteTrace
    sigma_prime: RewriteTrace
    gamma: MonoidVector


@dataclass(frozen=True)
class IbnVerdict:
    has_ibn: bool
    rank_m: int
    rank_aug: int
    witness: Optional[Witness]


def ibn_ranks(g: Graph) -> tuple[int, int]:
    """(rank M, rank [M | b]) over the canonical order."""
    system = criterion_system(g)
    return augmented_ranks(system.matrix, system.rhs)


def decide_ibn(g: Graph, with_witness: bool = True) -> IbnVerdict:
    """Decide IBN; on a negative verdict also construct and replay-verify a
    witness (unless with_witness is False)."""
    rank_m, rank_aug = ibn_ranks(g)
    has_ibn = rank_m < rank_aug
    witness = None
    if not has_ibn and with_witness:
        witness = construct_witness(g)
        if not verify_witness(g, witness):
            raise WitnessConstructionFailed(
                "constructed witness failed replay verification"
            )
    return IbnVerdict(has_ibn, rank_m, rank_aug, witness)


def construct_witness(g: Graph, scale: int = 1) -> Witness:
    """Build a non-IBN witness.  scale multiplies the particular solution
    (any positive integer gives another valid witness; 1 is canonical)."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    system = criterion_system(g)
    rank_m, rank_aug = augmented_ranks(system.matrix, system.rhs)
    if rank_m < rank_aug:
        raise NotApplicable("graph algebra has IBN; no witness exists")
    x = solve_particular(system.matrix, system.rhs)
    assert x is not None  # ranks agree, so the system is consistent
    assert matrix_vector(system.matrix, x) == tuple(
        Fraction(r) for r in system.rhs
    )
    z = system.z
    assert all(x[i] == 0 for i in range(z, len(x)))  # sinks are free, set 0

    d = scale * lcm(*(xi.denominator for xi in x[:z]))
    regular = system.order[:z]
    m_ints = [int(xi * d) for xi in x[:z]]
    m_vec = dict(zip(regular, m_ints))
    k = {v: max(-mi, 0) for v, mi in m_vec.items()}
    k_prime = {v: max(mi, 0) for v, mi in m_vec.items()}

    h = len(g.vertices)
    base = max(1, max(abs(mi) for mi in m_ints))
    bound = SLACK_BOUND_FACTOR * d * h
    for t in range(bound + 1):
        n = base + t
        m = n + d
        got_m = execute_counts(g, uniform_vector(g, m), k)
        got_n = execute_counts(g, uniform_vector(g, n), k_prime)
        if got_m is not None and got_n is not None and got_m[0] == got_n[0]:
            if t > 0:
                logger.info(
                    "witness construction needed slack t=%d (d=%d, h=%d)", t, d, h
                )
            return Witness(
                m=m,
                n=n,
                d=d,
                m_vec=m_vec,
                k=k,
                k_prime=k_prime,
                sigma=got_m[1],
                sigma_prime=got_n[1],
                gamma=got_m[0],
            )
    raise WitnessConstructionFailed(
        f"no slack t <= {bound} produced matching schedules (d={d}, h={h})"
    )


def verify_witness(g: Graph, w: Witness) -> bool:
    """Pure replay check.  Raises MalformedWitness if the witness mentions
    vertices the graph lacks; otherwise True iff m > n >= 1 and both traces
    replay legally (coefficients never go negative) to the same element,
    which must be w.gamma."""
    names = g.index
    for coll in (w.m_vec, w.k, w.k_prime):
        for v in coll:
            if v not in names:
                raise MalformedWitness(f"unknown vertex {v}")
    for v in (*w.sigma.steps, *w.sigma_prime.steps):
        if v not in names:
            raise MalformedWitness(f"unknown vertex {v} in trace")
    for v, _ in w.gamma.items():
        if v not in names:
            raise MalformedWitness(f"unknown vertex {v} in gamma")
    if w.n < 1 or w.m <= w.n:
        return False
    try:
        end_m = replay_trace(g, uniform_vector(g, w.m), w.sigma)
        end_n = replay_trace(g, uniform_vector(g, w.n), w.sigma_prime)
    except (NotRegular, InsufficientCoefficient):
        return False
    return end_m == end_n == w.gamma
