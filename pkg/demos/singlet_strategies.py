"""Demonstrate the entanglement-assisted strategy and its payoff near 9.

Samples raw singlet measurement outcomes against the closed-form joint
law, then runs full matches at several angle spacings and compares the
empirical mismatch profiles and payoffs against the cosine formulas.
Finishes with a direct check that neither player's move statistics react
to the partner's state.
"""

import numpy as np

import coordgame as cg

ROUNDS = 50_000
SEED = 11


def main():
    print("= Raw singlet outcomes =")
    theta = 2.0
    counts = cg.sample_joint_outcomes(0.0, theta, 100_000, cg.SingletSampler(SEED))
    print(f"directions separated by theta={theta}")
    print(f"  observed mismatch fraction: {counts.mismatch_fraction:.5f}")
    print(f"  (1 + cos theta) / 2:        {(1 + np.cos(theta)) / 2:.5f}")
    corr = (
        counts.plus_plus + counts.minus_minus - counts.plus_minus - counts.minus_plus
    ) / counts.total
    print(f"  observed correlator:        {corr:+.5f}")
    print(f"  -cos theta:                 {-np.cos(theta):+.5f}\n")

    print("= Matches at decreasing angle spacing =")
    print(f"{'delta':>7} {'q00 emp':>10} {'q00 exact':>10} {'payoff emp':>11} {'payoff exact':>13}")
    for delta in (0.8, 0.4, 0.2, 0.1):
        plan = cg.AnglePlan(delta)
        one, two = cg.quantum_player_strategy(plan, cg.SingletSampler(SEED))
        records = cg.run_match(one, two, cg.uniform_schedule(ROUNDS), seed=SEED)
        emp = cg.empirical_profile(records)
        exact = cg.quantum_profile(delta)
        print(
            f"{delta:7.2f} {emp.q00:10.5f} {exact.q00:10.5f} "
            f"{cg.payoff(emp):11.4f} {cg.payoff(exact):13.4f}"
        )
    print("the exact payoff (1 - cos 3d)/(1 - cos d) climbs toward 9 as d shrinks")
    print("(the empirical ratio gets noisy at small d, where all four mismatch")
    print(" probabilities are tiny; more rounds tighten it)\n")

    print("= No signaling =")
    n = 40_000
    for partner_state in (0, 1):
        schedule = np.zeros((n, 2), dtype=np.uint8)
        schedule[:, 1] = partner_state  # player two's state changes, player one's never
        one, two = cg.quantum_player_strategy(cg.AnglePlan(0.1), cg.SingletSampler(SEED))
        records = cg.run_match(one, two, schedule, seed=SEED)
        freq = records.move_one.mean()
        print(f"player one's move-B frequency with partner in state {partner_state}: {freq:.4f}")
    print("both frequencies sit at 1/2; the partner's state is invisible")


if __name__ == "__main__":
    main()
