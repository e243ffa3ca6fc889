"""Core types and the arbiter for the two-player coordination game.

Two non-communicating players each sit in a binary state and make binary
moves.  The figure of merit is the ratio between the mismatch probability
when both players are in state 0 and the worst mismatch probability over
the remaining three state pairs.  This module defines the domain types,
the payoff functional, the match arbiter, and empirical estimation of the
four mismatch probabilities from recorded rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, NamedTuple, Protocol

import numpy as np

__all__ = [
    "PlayerState",
    "Move",
    "StatePair",
    "STATE_PAIRS",
    "MismatchProfile",
    "RoundRecord",
    "MatchRecords",
    "PayoffReport",
    "PlayerStrategy",
    "ConstantStrategy",
    "DegenerateProfile",
    "MissingStatePair",
    "payoff",
    "empirical_profile",
    "run_match",
    "uniform_schedule",
    "analytic_report",
    "empirical_report",
]


class PlayerState(IntEnum):
    """One player's private state; exactly two states exist."""

    ZERO = 0
    ONE = 1


class Move(IntEnum):
    """One player's move; A and B are the only options."""

    A = 0
    B = 1


class StatePair(NamedTuple):
    """Joint state of the two players for one round."""

    player_one: PlayerState
    player_two: PlayerState


#: The four joint states in canonical order (0,0), (0,1), (1,0), (1,1).
STATE_PAIRS: tuple[StatePair, ...] = tuple(
    StatePair(PlayerState(i), PlayerState(j)) for i in (0, 1) for j in (0, 1)
)


class DegenerateProfile(ValueError):
    """All three off-(0,0) mismatch probabilities are zero; the payoff is 0/0."""


class MissingStatePair(ValueError):
    """A state pair has no recorded rounds, so its mismatch probability is unestimable."""


@dataclass(frozen=True)
class MismatchProfile:
    """The four state-dependent probabilities that the players' moves differ.

    ``qij`` is the probability of different simultaneous moves when player
    one is in state ``i`` and player two in state ``j``.  The entries are
    conditional probabilities for distinct conditions, so they carry no
    normalization constraint across each other.
    """

    q00: float
    q01: float
    q10: float
    q11: float

    def __post_init__(self) -> None:
        for name in ("q00", "q01", "q10", "q11"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name}={v!r} outside [0, 1]")

    def entry(self, i: int, j: int) -> float:
        """Mismatch probability for player states (i, j)."""
        return getattr(self, f"q{int(i)}{int(j)}")

    def as_array(self) -> np.ndarray:
        """Entries as a length-4 float array in (q00, q01, q10, q11) order."""
        return np.array([self.q00, self.q01, self.q10, self.q11])


def payoff(profile: MismatchProfile) -> float:
    """Payoff of a mismatch profile: q00 / max(q01, q10, q11).

    Raises:
        DegenerateProfile: if q01 = q10 = q11 = 0.  Both strategy-class
            bounds force q00 = 0 in that case, so the ratio is an
            uninformative 0/0 and no finite value would rank it honestly.
    """
    denom = max(profile.q01, profile.q10, profile.q11)
    if denom == 0.0:
        raise DegenerateProfile(
            "payoff undefined: q01 = q10 = q11 = 0 (0/0 ratio)"
        )
    return profile.q00 / denom


class RoundRecord(NamedTuple):
    """One simultaneous round of the game."""

    round_index: int
    states: StatePair
    move_one: Move
    move_two: Move


@dataclass(frozen=True, eq=False)
class MatchRecords:
    """Column-oriented, immutable collection of the rounds of one match.

    Rounds are stored as arrays so million-round matches stay cheap;
    indexing and iteration expose individual :class:`RoundRecord` values.
    Round indices are the positions in schedule order, hence unique.
    """

    states: np.ndarray  # (n, 2) uint8, one row per round
    move_one: np.ndarray  # (n,) uint8
    move_two: np.ndarray  # (n,) uint8

    def __post_init__(self) -> None:
        n = len(self.move_one)
        if self.states.shape != (n, 2) or self.move_two.shape != (n,):
            raise ValueError("mismatched record column lengths")
        for arr in (self.states, self.move_one, self.move_two):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.move_one)

    def __getitem__(self, index: int) -> RoundRecord:
        i = range(len(self))[index]  # normalizes negative indices, bounds-checks
        pair = StatePair(PlayerState(self.states[i, 0]), PlayerState(self.states[i, 1]))
        return RoundRecord(i, pair, Move(self.move_one[i]), Move(self.move_two[i]))

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatchRecords):
            return NotImplemented
        return (
            np.array_equal(self.states, other.states)
            and np.array_equal(self.move_one, other.move_one)
            and np.array_equal(self.move_two, other.move_two)
        )


class PlayerStrategy(Protocol):
    """Answers move queries from the arbiter.

    ``moves`` receives only this player's own states, the round indices,
    and the per-round shared randomness that both players see.  It must
    return one move (0 for A, 1 for B) per round.  A strategy never sees
    the other player's state.
    """

    def moves(
        self, states: np.ndarray, round_indices: np.ndarray, shared: np.ndarray
    ) -> np.ndarray: ...


@dataclass(frozen=True)
class ConstantStrategy:
    """Plays the same move in every round regardless of state."""

    move: Move

    def moves(self, states, round_indices, shared):
        return np.full(len(states), int(self.move), dtype=np.uint8)


def uniform_schedule(rounds_per_state_pair: int) -> np.ndarray:
    """Schedule with exactly ``rounds_per_state_pair`` rounds of each state pair.

    The four pairs are laid out in consecutive blocks, (0,0) first.  Block
    layout means a schedule with one full block per pair of length N walks
    a length-N shared sequence through every position exactly once per
    pair, which makes frequency estimates of sequence-based strategies
    exact rather than sampled.

    Returns an ``(4 * rounds_per_state_pair, 2)`` uint8 array; row k holds
    (player-one state, player-two state) for round k.
    """
    r = int(rounds_per_state_pair)
    if r < 1:
        raise ValueError("rounds_per_state_pair must be >= 1")
    pairs = np.array(STATE_PAIRS, dtype=np.uint8)
    return np.repeat(pairs, r, axis=0)


def run_match(
    strategy_one: PlayerStrategy,
    strategy_two: PlayerStrategy,
    schedule,
    seed: int,
) -> MatchRecords:
    """Play every scheduled round and record both moves.

    The arbiter queries strategy one first, then strategy two, handing
    each only its own state column plus the round indices and a shared
    random stream derived from ``seed``.  The shared stream is the only
    run-time coordination channel: both players receive identical values
    for the same round index.  Output is deterministic for fixed
    (strategies, schedule, seed).
    """
    sched = np.asarray(schedule, dtype=np.uint8)
    if sched.ndim != 2 or sched.shape[1] != 2 or len(sched) == 0:
        raise ValueError("schedule must be a nonempty sequence of state pairs")
    if sched.max(initial=0) > 1:
        raise ValueError("schedule states must be 0 or 1")

    n = len(sched)
    rounds = np.arange(n, dtype=np.int64)
    shared = np.random.default_rng(seed).random(n)
    for arr in (rounds, shared):
        arr.setflags(write=False)

    moves_one = _as_move_array(strategy_one.moves(sched[:, 0].copy(), rounds, shared), n)
    moves_two = _as_move_array(strategy_two.moves(sched[:, 1].copy(), rounds, shared), n)
    return MatchRecords(states=sched.copy(), move_one=moves_one, move_two=moves_two)


def _as_move_array(moves, n: int) -> np.ndarray:
    arr = np.asarray(moves, dtype=np.uint8)
    if arr.shape != (n,):
        raise ValueError(f"strategy returned {arr.shape}, expected ({n},)")
    if arr.max(initial=0) > 1:
        raise ValueError("moves must be 0 (A) or 1 (B)")
    return arr


def empirical_profile(records: MatchRecords | Iterable[RoundRecord]) -> MismatchProfile:
    """Frequency estimate of the four mismatch probabilities from match records.

    Each entry is the fraction of rounds with that state pair in which the
    two moves differed.  Plain frequencies, no smoothing.

    Raises:
        MissingStatePair: if any of the four state pairs has zero rounds.
    """
    if not isinstance(records, MatchRecords):
        rows = list(records)
        records = MatchRecords(
            states=np.array([r.states for r in rows], dtype=np.uint8).reshape(-1, 2),
            move_one=np.array([r.move_one for r in rows], dtype=np.uint8),
            move_two=np.array([r.move_two for r in rows], dtype=np.uint8),
        )

    differ = records.move_one != records.move_two
    entries = {}
    for i, j in STATE_PAIRS:
        mask = (records.states[:, 0] == i) & (records.states[:, 1] == j)
        count = int(mask.sum())
        if count == 0:
            raise MissingStatePair(f"no rounds recorded for state pair ({i}, {j})")
        entries[f"q{i}{j}"] = float(differ[mask].sum()) / count
    return MismatchProfile(**entries)


@dataclass(frozen=True)
class PayoffReport:
    """A payoff value together with how it was obtained.

    ``mode`` is "analytic" for closed-form profiles and "empirical" for
    frequency estimates.  ``samples_per_state_pair`` and
    ``confidence_halfwidth`` are zero in analytic mode; in empirical mode
    the half-width is a 95% normal-approximation interval for the payoff
    ratio, propagated from the binomial variances of the numerator and of
    the largest denominator entry.
    """

    payoff: float
    mode: str
    profile: MismatchProfile
    samples_per_state_pair: int = 0
    confidence_halfwidth: float = 0.0


def analytic_report(profile: MismatchProfile) -> PayoffReport:
    """Payoff report for an exactly known profile."""
    return PayoffReport(payoff=payoff(profile), mode="analytic", profile=profile)


def empirical_report(profile: MismatchProfile, samples_per_state_pair: int) -> PayoffReport:
    """Payoff report for a frequency-estimated profile.

    The 95% half-width uses the delta method on the ratio q00 / qmax with
    independent binomial variances q(1-q)/n for the numerator and for the
    entry attaining the maximum.
    """
    n = int(samples_per_state_pair)
    if n < 1:
        raise ValueError("samples_per_state_pair must be >= 1 for empirical reports")
    value = payoff(profile)
    qmax = max(profile.q01, profile.q10, profile.q11)
    var_num = profile.q00 * (1.0 - profile.q00) / n
    var_den = qmax * (1.0 - qmax) / n
    var_ratio = var_num / qmax**2 + profile.q00**2 * var_den / qmax**4
    return PayoffReport(
        payoff=value,
        mode="empirical",
        profile=profile,
        samples_per_state_pair=n,
        confidence_halfwidth=1.96 * float(np.sqrt(var_ratio)),
    )
