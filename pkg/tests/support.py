"""Shared helpers for the test suite: brute-force referees and generators."""

from __future__ import annotations

import itertools
import random

from polyconj import GroupContext, conjugate, identity, multiply


def random_element(rng: random.Random, ctx: GroupContext, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(ctx.hirsch))


def fold_word(ctx: GroupContext, word) -> tuple[int, ...]:
    """Multiply one-letter elements left to right: the group_core side of the
    collection cross-check."""
    acc = identity(ctx)
    for index, sign in word:
        e = [0] * ctx.hirsch
        e[index - 1] = sign
        acc = multiply(ctx, acc, tuple(e))
    return acc


def random_word(rng: random.Random, ctx: GroupContext, max_len: int):
    length = rng.randint(0, max_len)
    return tuple(
        (rng.randint(1, ctx.hirsch), rng.choice((1, -1))) for _ in range(length)
    )


def conjugator_family(ctx: GroupContext, bound: int):
    """Every conjugator the NP-membership argument needs to try.

    Two parts: products g_1^{x_1} g_2^{b_1} g_4^{b_2} ... g_{2n}^{b_n} with
    bits b and |x_1| <= bound (complete when all even coordinates of u are
    even), and single odd-generator syllables g_l^K with |K| <= bound
    (explicit conjugators when some even coordinate is odd).
    """
    h = ctx.hirsch
    members = []
    for bits in itertools.product((0, 1), repeat=ctx.n):
        for x1 in range(-bound, bound + 1):
            w = [0] * h
            w[0] = x1
            for i, b in enumerate(bits, start=1):
                w[2 * i - 1] = b
            members.append(tuple(w))
    for l in range(3, h + 1, 2):
        for k in range(-bound, bound + 1):
            if k == 0:
                continue  # the identity is already in the first part
            w = [0] * h
            w[l - 1] = k
            members.append(tuple(w))
    return members


def brute_conjugacy_map(ctx: GroupContext, u, bound: int) -> dict:
    """Map from every element reachable by conjugating u with the referee
    family to one witness conjugator."""
    reachable = {}
    for w in conjugator_family(ctx, bound):
        reachable.setdefault(conjugate(ctx, w, u), w)
    return reachable


def conjugator_bound(u, f1_values) -> int:
    """|x_1| bound: |f_1| + |e_1| + sum of |e_l| over odd l >= 3."""
    odd_tail = sum(abs(k) for k in u[2::2])
    return max(abs(f) for f in f1_values) + abs(u[0]) + odd_tail


def exhaustive_words(ctx: GroupContext, max_len: int):
    letters = [(i, s) for i in range(1, ctx.hirsch + 1) for s in (1, -1)]
    for length in range(max_len + 1):
        yield from itertools.product(letters, repeat=length)
