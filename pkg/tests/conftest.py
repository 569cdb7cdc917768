import random

from sscat import WeightAssignment


def random_assignment(
    rng: random.Random, lo: int = -5, hi: int = 5, length: int = 8
) -> WeightAssignment:
    """A seeded random weight assignment with bounded integer entries."""
    return WeightAssignment(
        b_prefix=tuple(rng.randint(lo, hi) for _ in range(length)),
        b_fill=rng.randint(lo, hi),
        c_prefix=tuple(rng.randint(lo, hi) for _ in range(length)),
        c_fill=rng.randint(lo, hi),
    )
