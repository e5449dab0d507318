"""Exact exponent-vector arithmetic for the normal-form calculus G(n).

G(n) has generators g_1, ..., g_{2n+1} and elements written as normal forms
g_1^{k_1} g_2^{k_2} ... g_{2n+1}^{k_{2n+1}}, stored as the plain tuple
``(k_1, ..., k_{2n+1})`` of Python ints so all arithmetic is exact at any
magnitude.  Crossings of adjacent syllables follow two rule families (every
other pair of generators is treated as commuting):

    g_j g_1   = g_1^{-1} g_j          for j even
    g_{j+1} g_j = g_1 g_j g_{j+1}     for j even

which extend to powers as

    g_j^a g_1^b     = g_1^{b(-1)^a} g_j^a
    g_{j+1}^a g_j^b = g_1^{a(b mod 2)} g_j^b g_{j+1}^a      (b mod 2 in {0,1}).

A caution that shapes this whole module: for n >= 2 these rules are
inconsistent as group relations.  g_4 is declared to commute with g_2 and
g_3, hence with g_1 = g_3 g_2 g_3^{-1} g_2^{-1}, yet it is also declared to
invert g_1; a genuine group would collapse to g_1^2 = 1.  (For n = 1 the
rules do present a torsion-free group and every group law holds.)  The
operations below therefore implement a fixed deterministic collection
convention, resolving crossings in a documented order, rather than
arithmetic in an actual group:

* ``multiply`` folds the right factor's syllables in left to right order,
  which coincides exactly with letter-level leftmost-first collection;
* ``inverse`` gives the exact left inverse (inverse(a) * a is the identity;
  the opposite product can differ once n >= 2);
* ``conjugate`` applies the per-syllable conjugation closed forms from the
  innermost syllable outward, which is the operation the twisted-sum
  machinery in the rest of the package is built on; it preserves every
  coordinate >= 2, agrees with w*u*w^{-1} via multiply/inverse whenever w
  is a single syllable, and for any w equals the leftmost-first collection
  of the letter word w . u . w^{-1} (with w^{-1} spelled as the reversed,
  negated letters).

Identities that need associativity across rule-crossing products (for
example (a*b)*c = a*(b*c) for arbitrary elements) can fail for n >= 2; the
test suite pins both the laws that hold and witnesses for those that do
not.  All functions are pure; contexts and elements are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidElementError, InvalidParameterError

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class GroupContext:
    """Fixes the group G(n); ``hirsch`` = 2n+1 is the generator count."""

    n: int
    hirsch: int


def make_context(n: int) -> GroupContext:
    """Context for G(n) with generators g_1 .. g_{2n+1}."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"group parameter n must be a positive integer, got {n!r}")
    return GroupContext(n=n, hirsch=2 * n + 1)


def identity(ctx: GroupContext) -> GroupElement:
    return (0,) * ctx.hirsch


def make_element(ctx: GroupContext, exponents: Iterable[int]) -> GroupElement:
    """Validate and canonicalize an exponent sequence for ``ctx``."""
    vec = tuple(int(k) for k in exponents)
    if len(vec) != ctx.hirsch:
        raise InvalidElementError(
            f"expected {ctx.hirsch} exponents for G({ctx.n}), got {len(vec)}"
        )
    return vec


def _check(ctx: GroupContext, a: Sequence[int]) -> None:
    if len(a) != ctx.hirsch:
        raise InvalidElementError(
            f"element of length {len(a)} does not belong to G({ctx.n}) "
            f"(expected {ctx.hirsch} exponents)"
        )


def _even_parity(exps: Sequence[int], upto: int) -> int:
    """Parity of k_2 + k_4 + ... over even generator indices <= ``upto``."""
    p = 0
    for t in range(1, upto, 2):
        p ^= exps[t] & 1
    return p


def _append_syllable(e: list, i: int, c: int, hirsch: int) -> None:
    """In place, replace the normal form ``e`` by the normal form of e * g_i^c.

    Moving g_i^c left to its slot crosses only two kinds of obstruction:
    even-indexed syllables flip the sign of a passing g_1 power, and g_i^c
    with i even spawns g_1^{(c mod 2) * k_{i+1}} when it hops over
    g_{i+1}^{k_{i+1}}.
    """
    if c == 0:
        return
    if i == 1:
        e[0] += c if _even_parity(e, hirsch) == 0 else -c
    elif i % 2 == 0:
        if c & 1:
            t = e[i]  # exponent of g_{i+1}, still untouched at this point
            if t:
                e[0] += t if _even_parity(e, i) == 0 else -t
        e[i - 1] += c
    else:
        e[i - 1] += c


def multiply(ctx: GroupContext, a: GroupElement, b: GroupElement) -> GroupElement:
    """Normal form of the product a * b."""
    _check(ctx, a)
    _check(ctx, b)
    h = ctx.hirsch
    e = list(a)
    for idx in range(h):
        _append_syllable(e, idx + 1, b[idx], h)
    return tuple(e)


def inverse(ctx: GroupContext, a: GroupElement) -> GroupElement:
    """Left inverse: multiply(ctx, inverse(ctx, a), a) is always the identity.

    Collected from the reversed, negated syllables.  For n = 1 (a genuine
    group) it is two-sided; for n >= 2 the right-hand product can differ.
    """
    _check(ctx, a)
    h = ctx.hirsch
    e = [0] * h
    for idx in range(h - 1, -1, -1):
        _append_syllable(e, idx + 1, -a[idx], h)
    return tuple(e)


def _conjugate_syllable_inplace(e: list, i: int, k: int, hirsch: int) -> None:
    """In place, replace ``e`` by the normal form of g_i^k * e * g_i^{-k}.

    Only the g_1 exponent can change:

    * i == 1: the returning g_1^{-k} picks up sign (-1)^(sum of even
      exponents), so e_1 gains k(1 - (-1)^sigma), i.e. 2k when sigma is odd.
    * i even: e_1 becomes e_1(-1)^k + e_{i+1}(k mod 2)(-1)^(k_2+...+k_i+k).
    * i odd > 1: e_1 gains k(e_{i-1} mod 2)(-1)^(k_2+...+k_{i-3}).
    """
    if k == 0:
        return
    if i == 1:
        if _even_parity(e, hirsch):
            e[0] += 2 * k
    elif i % 2 == 0:
        s = e[0] if k % 2 == 0 else -e[0]
        if k & 1:
            t = e[i]
            if t:
                s += -t if ((_even_parity(e, i) + k) & 1) else t
        e[0] = s
    else:
        if e[i - 2] & 1:
            e[0] += -k if _even_parity(e, i - 2) else k


def conjugate_by_syllable(ctx: GroupContext, i: int, k: int, u: GroupElement) -> GroupElement:
    """Normal form of g_i^k * u * g_i^{-k}; coordinates >= 2 are preserved."""
    if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= ctx.hirsch:
        raise InvalidParameterError(
            f"generator index {i!r} out of range 1..{ctx.hirsch}"
        )
    _check(ctx, u)
    e = list(u)
    _conjugate_syllable_inplace(e, i, k, ctx.hirsch)
    return tuple(e)


def conjugate(ctx: GroupContext, w: GroupElement, u: GroupElement) -> GroupElement:
    """Conjugation of u by w: the per-syllable closed forms applied for w's
    syllables from the innermost conjugation outward (g_{2n+1} first, g_1
    last).

    This is the canonical conjugation operation of the calculus: it
    preserves all coordinates >= 2, satisfies the twisted-sum identity the
    subset-sum reduction relies on, and costs time polynomial in the
    exponent bit-lengths.
    """
    _check(ctx, w)
    _check(ctx, u)
    h = ctx.hirsch
    e = list(u)
    for idx in range(h - 1, -1, -1):
        k = w[idx]
        if k:
            _conjugate_syllable_inplace(e, idx + 1, k, h)
    return tuple(e)


def bit_length(ctx: GroupContext, a: GroupElement) -> int:
    """Storage measure of an element: per entry, binary digits of |k| plus a
    sign bit, counting the entry 0 as one digit."""
    _check(ctx, a)
    return sum((abs(k).bit_length() or 1) + 1 for k in a)
