"""Deterministic random vectors shared by the test suites."""

from __future__ import annotations

import random
from fractions import Fraction

from ordertopo.carriers import TAIL_SEQ, Carrier, Vec, findim


def rand_rat(rng: random.Random, max_den: int = 64, max_num: int = 128) -> Fraction:
    den = rng.randint(1, max_den)
    num = rng.randint(-max_num, max_num)
    return Fraction(num, den)


def rand_vec(rng: random.Random, carrier: Carrier, max_den: int = 64,
             max_prefix: int = 8) -> Vec:
    if carrier.kind == "findim":
        return Vec(carrier, tuple(rand_rat(rng, max_den) for _ in range(carrier.dim)))
    prefix = tuple(rand_rat(rng, max_den) for _ in range(rng.randint(0, max_prefix)))
    return Vec(carrier, prefix, rand_rat(rng, max_den))


def rand_carrier(rng: random.Random, max_dim: int = 6) -> Carrier:
    if rng.random() < 0.5:
        return findim(rng.randint(1, max_dim))
    return TAIL_SEQ
