"""Brute-force exact solver for tiny instances.

Exhaustively enumerates every integer allocation meeting all demands, with
per-variable caps implied by demand and overhead-adjusted capacity, filters
by the capacity constraints, and returns the exact minimum-cost allocation.
Ground truth for the branch-and-bound solver; performance beyond the size
guard is a non-goal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InfeasibleInstance, SearchSpaceTooLarge
from .instance import Allocation, SiaInstance, objective as eval_objective

DEFAULT_SEARCH_GUARD = 10**7


@dataclass(frozen=True, slots=True)
class OracleResult:
    objective: Fraction
    allocation: Allocation


def _variable_cap(instance: SiaInstance, i: int, j: int, k: int) -> int:
    # Any feasible x_ijk is at most the demand and at most what the
    # overhead-inflated capacity admits, so capping the search is lossless.
    return min(
        instance.demand[j][k],
        instance.capacity[i][k] // (1 + instance.overhead[i][j][k]),
    )


def _count_compositions(total: int, caps: list[int]) -> int:
    """Number of ways to write `total` as ordered capped nonnegative parts."""
    ways = [0] * (total + 1)
    ways[0] = 1
    for cap in caps:
        nxt = [0] * (total + 1)
        for s, w in enumerate(ways):
            if w:
                for u in range(0, min(cap, total - s) + 1):
                    nxt[s + u] += w
        ways = nxt
    return ways[total]


def search_space_size(instance: SiaInstance, guard: int | None = None) -> int:
    """Product over (service, resource) cells of capped composition counts.

    Stops multiplying once `guard` is exceeded (returns guard + 1 then).
    """
    size = 1
    for j in range(instance.num_services):
        for k in range(instance.num_resources):
            caps = [
                _variable_cap(instance, i, j, k)
                for i in range(instance.num_interfaces)
            ]
            size *= _count_compositions(instance.demand[j][k], caps)
            if size == 0:
                return 0
            if guard is not None and size > guard:
                return guard + 1
    return size


def brute_force_solve(
    instance: SiaInstance, size_guard: int = DEFAULT_SEARCH_GUARD
) -> OracleResult:
    """Exhaustive exact optimum; raises when the search space exceeds the guard.

    The returned allocation is the lexicographically first minimizer under
    the flattened (interface, service, resource) index order, so results are
    independent of enumeration internals.
    """
    ni, nj, nk = instance.num_interfaces, instance.num_services, instance.num_resources
    size = search_space_size(instance, size_guard)
    if size > size_guard:
        raise SearchSpaceTooLarge(
            f"composition space exceeds guard of {size_guard}; raise size_guard to override"
        )
    if size == 0:
        raise InfeasibleInstance("some demand cannot be met even ignoring interactions")

    cells = [(j, k) for j in range(nj) for k in range(nk)]

    # Integer-scaled capacity tracking: per (i, k), scale by the lcm of the
    # overhead denominators so inflated loads stay integral.
    scale = [
        [lcm(*((1 + instance.overhead[i][j][k]).denominator for j in range(nj)))
         for k in range(nk)]
        for i in range(ni)
    ]
    remaining = [[instance.capacity[i][k] * scale[i][k] for k in range(nk)] for i in range(ni)]
    load_per_unit = [
        [[int((1 + instance.overhead[i][j][k]) * scale[i][k]) for k in range(nk)]
         for j in range(nj)]
        for i in range(ni)
    ]

    # Suffix lower bounds for objective pruning: cheapest conceivable
    # utilization of every unassigned cell, plus one activation for each
    # still-inactive service with demand left.
    min_cost = [min(instance.unit_cost[i][k] for i in range(ni)) for k in range(nk)]
    min_activation = min(instance.activation_cost)
    suffix_util = [Fraction(0)] * (len(cells) + 1)
    for t in range(len(cells) - 1, -1, -1):
        j, k = cells[t]
        suffix_util[t] = suffix_util[t + 1] + min_cost[k] * instance.demand[j][k]

    x = [[[0] * nk for _ in range(nj)] for _ in range(ni)]
    pair_positive = [[0] * nj for _ in range(ni)]
    service_pairs = [0] * nj  # number of currently positive pairs per service

    best_obj: Fraction | None = None
    best_flat: tuple[int, ...] | None = None

    def flatten() -> tuple[int, ...]:
        return tuple(x[i][j][k] for i in range(ni) for j in range(nj) for k in range(nk))

    def activation_lower_bound(t: int) -> Fraction:
        if min_activation == 0:
            return Fraction(0)
        pending = Fraction(0)
        seen = set()
        for u in range(t, len(cells)):
            j, k = cells[u]
            if j not in seen and instance.demand[j][k] > 0 and service_pairs[j] == 0:
                pending += min_activation
                seen.add(j)
        return pending

    def descend(t: int, partial: Fraction):
        nonlocal best_obj, best_flat
        if t == len(cells):
            if best_obj is None or partial < best_obj:
                best_obj = partial
                best_flat = flatten()
            elif partial == best_obj:
                flat = flatten()
                if flat < best_flat:
                    best_flat = flat
            return
        if best_obj is not None:
            # Strict > keeps every potential tie alive for the lex rule.
            if partial + suffix_util[t] + activation_lower_bound(t) > best_obj:
                return
        j, k = cells[t]
        compose(t, j, k, 0, instance.demand[j][k], partial)

    def compose(t: int, j: int, k: int, i: int, left: int, partial: Fraction):
        # Split `left` units of cell (j, k) over interfaces i..ni-1, in
        # lexicographic order of the per-cell composition vector.
        load = load_per_unit[i][j][k]
        if i == ni - 1:
            if left * load <= remaining[i][k]:
                assign(t, j, k, i, left, 0, partial)
            return
        cap = min(left, remaining[i][k] // load)
        tail_cap = 0
        for m in range(i + 1, ni):
            tail_cap += min(left, remaining[m][k] // load_per_unit[m][j][k])
            if tail_cap >= left:
                break
        for u in range(max(0, left - tail_cap), cap + 1):
            assign(t, j, k, i, u, left - u, partial)

    def assign(t: int, j: int, k: int, i: int, u: int, left: int, partial: Fraction):
        if u:
            remaining[i][k] -= u * load_per_unit[i][j][k]
            x[i][j][k] = u
            pair_positive[i][j] += 1
            partial = partial + instance.unit_cost[i][k] * u
            if pair_positive[i][j] == 1:
                partial += instance.activation_cost[i]
                service_pairs[j] += 1
        if i == ni - 1:
            descend(t + 1, partial)
        else:
            compose(t, j, k, i + 1, left, partial)
        if u:
            remaining[i][k] += u * load_per_unit[i][j][k]
            x[i][j][k] = 0
            pair_positive[i][j] -= 1
            if pair_positive[i][j] == 0:
                service_pairs[j] -= 1

    descend(0, Fraction(0))

    if best_flat is None:
        raise InfeasibleInstance("no integer allocation satisfies the capacity constraints")

    alloc = Allocation(
        x=tuple(
            tuple(
                tuple(best_flat[(i * nj + j) * nk + k] for k in range(nk))
                for j in range(nj)
            )
            for i in range(ni)
        )
    )
    # Recompute through the shared objective as a final cross-check.
    value = eval_objective(instance, alloc)
    assert value == best_obj
    return OracleResult(objective=value, allocation=alloc)
