"""Conjugacy decision, search, and certificate verification in G(n).

Conjugation never changes coordinates >= 2, so a pair (u, v) can only be
conjugate when those coordinates already agree.  Given that, two regimes
remain:

* some even coordinate of u is odd: every g_1 exponent is reachable, and a
  single syllable of the odd generator just above that coordinate is an
  explicit conjugator (the fast path);
* every even coordinate is even: only products of even-indexed generators
  matter, each used with exponent 0 or 1, and the set of reachable g_1
  exponents is computed by a sweep that maps a value s to s (generator
  skipped) or to -(s + e_{j+1}) (generator used).

The sweep keeps back-pointers so a deciding "yes" converts into an explicit
certificate, which is always re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidElementError, NotAllEvenError, SoundnessError, StateLimitError
from .group import GroupContext, GroupElement, _even_parity, conjugate
from .reductions import assignment_to_conjugator


@dataclass(frozen=True)
class Certificate:
    """A claimed conjugator w, convention w * u * w^{-1} = v."""

    w: GroupElement


@dataclass(frozen=True)
class ReachableStage:
    """One sweep step: generator index used, the odd exponent it drags in,
    and value -> (predecessor value, bit) for every value reachable so far."""

    generator_index: int
    addend: int
    table: dict[int, tuple[int, int]]


@dataclass(frozen=True)
class ReachableSet:
    """Reachable g_1 exponents, stage by stage from g_{2n} down to g_2."""

    start: int
    stages: tuple[ReachableStage, ...]

    def final_values(self) -> frozenset[int]:
        return frozenset(self.stages[-1].table)


def _check(ctx: GroupContext, a: GroupElement) -> None:
    if len(a) != ctx.hirsch:
        raise InvalidElementError(
            f"element of length {len(a)} does not belong to G({ctx.n}) "
            f"(expected {ctx.hirsch} exponents)"
        )


def _all_evens_even(ctx: GroupContext, u: GroupElement) -> bool:
    return not any(u[t] & 1 for t in range(1, ctx.hirsch, 2))


def reachable_g1_values(
    ctx: GroupContext, u: GroupElement, max_states: int = 10**7
) -> ReachableSet:
    """All g_1 exponents attainable by conjugating u with bit-exponent
    products of even-indexed generators (innermost generator first).

    Requires every even coordinate of u to be even; otherwise the bit
    restriction is not exhaustive and the fast path applies instead.
    """
    _check(ctx, u)
    if not _all_evens_even(ctx, u):
        raise NotAllEvenError(
            "reachability sweep needs all even coordinates of u to be even"
        )
    stages = []
    values = (u[0],)
    states = 0
    for j in range(2 * ctx.n, 0, -2):
        addend = u[j]  # exponent of g_{j+1}
        table: dict[int, tuple[int, int]] = {}
        for s in values:
            table.setdefault(s, (s, 0))
        for s in values:
            table.setdefault(-(s + addend), (s, 1))
        states += len(table)
        if states > max_states:
            raise StateLimitError(
                f"reachability sweep exceeded {max_states} states at g_{j}"
            )
        stages.append(ReachableStage(generator_index=j, addend=addend, table=table))
        values = tuple(table)
    return ReachableSet(start=u[0], stages=tuple(stages))


def decide_conjugate(
    ctx: GroupContext, u: GroupElement, v: GroupElement, max_states: int = 10**7
) -> bool:
    """Whether some w in G(n) satisfies w * u * w^{-1} = v."""
    _check(ctx, u)
    _check(ctx, v)
    if u[1:] != v[1:]:
        return False
    if not _all_evens_even(ctx, u):
        return True
    return v[0] in reachable_g1_values(ctx, u, max_states=max_states).final_values()


def _fast_path_certificate(ctx: GroupContext, u: GroupElement, v: GroupElement) -> Certificate:
    """Single-syllable conjugator using the smallest odd generator whose
    lower even neighbour carries an odd exponent."""
    for l in range(3, ctx.hirsch + 1, 2):
        if u[l - 2] & 1:
            diff = v[0] - u[0]
            k = -diff if _even_parity(u, l - 3) else diff
            w = [0] * ctx.hirsch
            w[l - 1] = k
            return Certificate(w=tuple(w))
    raise AssertionError("fast path called without an odd even-coordinate")


def search_conjugator(
    ctx: GroupContext, u: GroupElement, v: GroupElement, max_states: int = 10**7
) -> Certificate | None:
    """An explicit conjugator, or None exactly when decide_conjugate says no.

    Certificates are re-verified before being returned, and stay short: one
    syllable whose exponent is bounded by |f_1| + |e_1|, or a 0/1 vector on
    the even generators.
    """
    _check(ctx, u)
    _check(ctx, v)
    if u[1:] != v[1:]:
        return None
    if not _all_evens_even(ctx, u):
        cert = _fast_path_certificate(ctx, u, v)
        return _verified(ctx, u, v, cert)

    reach = reachable_g1_values(ctx, u, max_states=max_states)
    if v[0] not in reach.stages[-1].table:
        return None
    bits_by_generator: dict[int, int] = {}
    value = v[0]
    for stage in reversed(reach.stages):
        value, bit = stage.table[value]
        bits_by_generator[stage.generator_index] = bit
    assignment = tuple(bits_by_generator[2 * i] for i in range(1, ctx.n + 1))
    cert = Certificate(w=assignment_to_conjugator(ctx, assignment))
    return _verified(ctx, u, v, cert)


def _verified(ctx: GroupContext, u, v, cert: Certificate) -> Certificate:
    if conjugate(ctx, cert.w, u) != v:
        raise SoundnessError("search produced a certificate that fails verification")
    return cert


def verify_certificate(
    ctx: GroupContext, u: GroupElement, v: GroupElement, cert: Certificate
) -> bool:
    """True exactly when cert.w conjugates u onto v."""
    _check(ctx, u)
    _check(ctx, v)
    _check(ctx, cert.w)
    return conjugate(ctx, cert.w, u) == v
