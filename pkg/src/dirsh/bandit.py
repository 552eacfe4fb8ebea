"""UCB1 selection of roulette exponent pairs, with episode-level credit.

Each solution-generation episode pulls one arm per gate decision; all arms
pulled during the episode share the episode's terminal reward.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

DEFAULT_BETAS = (1.0, 2.0, 4.0, 8.0)


def beta_grid(values: Sequence[float] = DEFAULT_BETAS) -> tuple[tuple[float, float], ...]:
    """Cartesian grid of (beta1, beta2) exponent pairs."""
    return tuple(itertools.product(values, values))


class UcbBandit:
    """UCB1 over a discrete set of (beta1, beta2) arms.

    Pull counts and means only move at episode settlement, so selection is a
    pure function of the settled state (deterministic, index tie-break).
    """

    def __init__(
        self,
        arms: Sequence[tuple[float, float]] | None = None,
        exploration_c: float = math.sqrt(2.0),
    ):
        self.arms: tuple[tuple[float, float], ...] = tuple(arms) if arms else beta_grid()
        if not self.arms:
            raise ValueError("arm set must be nonempty")
        self.exploration_c = exploration_c
        self.counts = [0] * len(self.arms)
        self.means = [0.0] * len(self.arms)
        self.total = 0

    def select_arm(self) -> tuple[int, tuple[float, float]]:
        """Pick an arm: never-pulled arms first (by index), then UCB argmax."""
        for i, c in enumerate(self.counts):
            if c == 0:
                return i, self.arms[i]
        bonus = self.exploration_c * math.sqrt(2.0 * math.log(self.total))
        best, best_score = 0, -math.inf
        for i in range(len(self.arms)):
            score = self.means[i] + bonus / math.sqrt(self.counts[i])
            if score > best_score:
                best, best_score = i, score
        return best, self.arms[best]

    def settle_episode(self, pulled: Iterable[int], reward: float) -> None:
        """Credit every arm pulled in the episode with one count and the
        shared reward."""
        reward = min(1.0, max(0.0, reward))
        for i in sorted(set(pulled)):
            self.counts[i] += 1
            self.means[i] += (reward - self.means[i]) / self.counts[i]
            self.total += 1

    @staticmethod
    def episode_reward(f: float, f_best: float, f_worst: float) -> float:
        """Normalize an objective value against the running best/worst;
        0.5 when the range is degenerate."""
        if f_worst == f_best:
            return 0.5
        return min(1.0, max(0.0, (f_worst - f) / (f_worst - f_best)))

    def reset(self) -> None:
        self.counts = [0] * len(self.arms)
        self.means = [0.0] * len(self.arms)
        self.total = 0
