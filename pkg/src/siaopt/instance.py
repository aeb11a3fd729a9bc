"""Problem data for service-to-interface assignment (SIA).

An instance allocates the per-resource demands of J services onto I
heterogeneous interfaces, each exposing K resource capacities.  Using any
resource of interface i for service j activates the pair (i, j) and incurs
that interface's activation cost on top of per-unit utilization costs.
All costs and overheads are exact rationals; demands, capacities and
allocations are integers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, EmptyDimension, NegativeValue, ParseError
from .rational import to_fraction, to_int

IntMatrix = tuple[tuple[int, ...], ...]
FracMatrix = tuple[tuple[Fraction, ...], ...]
FracTensor = tuple[tuple[tuple[Fraction, ...], ...], ...]
IntTensor = tuple[tuple[tuple[int, ...], ...], ...]

INSTANCE_FIELDS = (
    "num_interfaces",
    "num_services",
    "num_resources",
    "demand",
    "capacity",
    "unit_cost",
    "activation_cost",
    "overhead",
)


@dataclass(frozen=True, slots=True)
class SiaInstance:
    num_interfaces: int            # I
    num_services: int              # J
    num_resources: int             # K
    demand: IntMatrix              # (J, K), units required by service j of resource k
    capacity: IntMatrix            # (I, K), units of resource k available on interface i
    unit_cost: FracMatrix          # (I, K), cost per unit of resource k on interface i
    activation_cost: tuple[Fraction, ...]  # (I,), cost per activated (interface, service) pair
    overhead: FracTensor           # (I, J, K), fractional inflation of consumed capacity

    def effective_load(self, i: int, j: int, k: int, units: int) -> Fraction:
        """Capacity consumed on (i, k) when service j is allocated `units`."""
        return (1 + self.overhead[i][j][k]) * units


@dataclass(frozen=True, slots=True)
class Allocation:
    """Integer units of resource k on interface i used by service j."""

    x: IntTensor  # (I, J, K)


class SolveStatus(enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    NODE_LIMIT = "NodeLimit"
    TIME_LIMIT = "TimeLimit"


@dataclass(frozen=True, slots=True)
class SolveStats:
    nodes: int = 0
    lp_iterations: int = 0
    wall_time: float = 0.0


@dataclass(frozen=True, slots=True)
class Solution:
    """An allocation plus derived activation matrix and objective value.

    `activation` is always the indicator recomputed from the allocation and
    `objective` the recomputed objective; use `make_solution` to construct.
    For limit-hit results without an incumbent, allocation is None.
    """

    allocation: Allocation | None
    activation: IntMatrix | None
    objective: Fraction | None
    status: SolveStatus
    stats: SolveStats
    bound: Fraction | None = None  # best proven lower bound on the optimum


@dataclass(frozen=True, slots=True)
class ConstraintReport:
    """Per-constraint satisfaction of an allocation against an instance."""

    demand_met: tuple[tuple[bool, ...], ...]    # (J, K): sum_i x == demand
    capacity_ok: tuple[tuple[bool, ...], ...]   # (I, K): overhead-inflated load <= capacity
    satisfied: bool


def _shape_matrix(raw, rows: int, cols: int, name: str, coerce) -> tuple[tuple, ...]:
    if not isinstance(raw, Sequence) or isinstance(raw, (str, bytes)):
        raise DimensionMismatch(f"{name}: expected a {rows}x{cols} matrix")
    if len(raw) != rows:
        raise DimensionMismatch(f"{name}: expected {rows} rows, got {len(raw)}")
    out = []
    for r, row in enumerate(raw):
        if not isinstance(row, Sequence) or isinstance(row, (str, bytes)):
            raise DimensionMismatch(f"{name}[{r}]: expected a row of length {cols}")
        if len(row) != cols:
            raise DimensionMismatch(f"{name}[{r}]: expected {cols} entries, got {len(row)}")
        out.append(tuple(coerce(v, f"{name}[{r}][{c}]") for c, v in enumerate(row)))
    return tuple(out)


def _require_nonnegative(value, name: str):
    if value < 0:
        raise NegativeValue(f"{name} = {value} must be nonnegative")
    return value


def validate(raw: Mapping) -> SiaInstance:
    """Build a validated instance from parsed key/value data.

    Rejects unknown fields, shape disagreements and negative entries with an
    error naming the offending field and index.  `overhead` may be omitted,
    which means all-zero overheads.
    """
    if not isinstance(raw, Mapping):
        raise ParseError("instance data must be a mapping of field names to values")
    unknown = sorted(set(raw) - set(INSTANCE_FIELDS))
    if unknown:
        raise ParseError(f"unknown instance field(s): {', '.join(unknown)}")
    missing = [f for f in INSTANCE_FIELDS if f not in raw and f != "overhead"]
    if missing:
        raise ParseError(f"missing instance field(s): {', '.join(missing)}")

    num_interfaces = to_int(raw["num_interfaces"], "num_interfaces")
    num_services = to_int(raw["num_services"], "num_services")
    num_resources = to_int(raw["num_resources"], "num_resources")
    for name, count in (
        ("num_interfaces", num_interfaces),
        ("num_services", num_services),
        ("num_resources", num_resources),
    ):
        if count <= 0:
            raise EmptyDimension(f"{name} = {count} must be positive")

    def nonneg_int(v, where):
        return _require_nonnegative(to_int(v, where), where)

    def nonneg_frac(v, where):
        return _require_nonnegative(to_fraction(v, where), where)

    demand = _shape_matrix(raw["demand"], num_services, num_resources, "demand", nonneg_int)
    capacity = _shape_matrix(raw["capacity"], num_interfaces, num_resources, "capacity", nonneg_int)
    unit_cost = _shape_matrix(raw["unit_cost"], num_interfaces, num_resources, "unit_cost", nonneg_frac)

    act_raw = raw["activation_cost"]
    if not isinstance(act_raw, Sequence) or isinstance(act_raw, (str, bytes)):
        raise DimensionMismatch(f"activation_cost: expected a vector of length {num_interfaces}")
    if len(act_raw) != num_interfaces:
        raise DimensionMismatch(
            f"activation_cost: expected {num_interfaces} entries, got {len(act_raw)}"
        )
    activation_cost = tuple(
        nonneg_frac(v, f"activation_cost[{i}]") for i, v in enumerate(act_raw)
    )

    if "overhead" in raw and raw["overhead"] is not None:
        ov_raw = raw["overhead"]
        if not isinstance(ov_raw, Sequence) or isinstance(ov_raw, (str, bytes)):
            raise DimensionMismatch(f"overhead: expected a {num_interfaces}-layer tensor")
        if len(ov_raw) != num_interfaces:
            raise DimensionMismatch(
                f"overhead: expected {num_interfaces} layers, got {len(ov_raw)}"
            )
        overhead = tuple(
            _shape_matrix(layer, num_services, num_resources, f"overhead[{i}]", nonneg_frac)
            for i, layer in enumerate(ov_raw)
        )
    else:
        zero = Fraction(0)
        overhead = tuple(
            tuple((zero,) * num_resources for _ in range(num_services))
            for _ in range(num_interfaces)
        )

    return SiaInstance(
        num_interfaces=num_interfaces,
        num_services=num_services,
        num_resources=num_resources,
        demand=demand,
        capacity=capacity,
        unit_cost=unit_cost,
        activation_cost=activation_cost,
        overhead=overhead,
    )


def allocation_from(x) -> Allocation:
    """Build an Allocation from a nested sequence, checking integrality and sign."""
    tensor = []
    for i, layer in enumerate(x):
        rows = []
        for j, row in enumerate(layer):
            vals = []
            for k, v in enumerate(row):
                v = to_int(v, f"x[{i}][{j}][{k}]")
                if v < 0:
                    raise NegativeValue(f"x[{i}][{j}][{k}] = {v} must be nonnegative")
                vals.append(v)
            rows.append(tuple(vals))
        tensor.append(tuple(rows))
    return Allocation(x=tuple(tensor))


def zero_allocation(instance: SiaInstance) -> Allocation:
    row = (0,) * instance.num_resources
    layer = (row,) * instance.num_services
    return Allocation(x=(layer,) * instance.num_interfaces)


def _check_dims(instance: SiaInstance, alloc: Allocation):
    x = alloc.x
    if len(x) != instance.num_interfaces:
        raise DimensionMismatch(
            f"allocation: expected {instance.num_interfaces} interface layers, got {len(x)}"
        )
    for i, layer in enumerate(x):
        if len(layer) != instance.num_services:
            raise DimensionMismatch(
                f"allocation[{i}]: expected {instance.num_services} rows, got {len(layer)}"
            )
        for j, row in enumerate(layer):
            if len(row) != instance.num_resources:
                raise DimensionMismatch(
                    f"allocation[{i}][{j}]: expected {instance.num_resources} entries,"
                    f" got {len(row)}"
                )


def activation_of(alloc: Allocation) -> IntMatrix:
    """Indicator matrix: entry (i, j) is 1 iff service j uses any resource on i."""
    return tuple(
        tuple(1 if any(v > 0 for v in row) else 0 for row in layer)
        for layer in alloc.x
    )


def objective(instance: SiaInstance, alloc: Allocation) -> Fraction:
    """Total cost: per-unit utilization plus activation cost of every used pair."""
    _check_dims(instance, alloc)
    total = Fraction(0)
    for i in range(instance.num_interfaces):
        for k in range(instance.num_resources):
            used = sum(alloc.x[i][j][k] for j in range(instance.num_services))
            if used:
                total += instance.unit_cost[i][k] * used
    act = activation_of(alloc)
    for i in range(instance.num_interfaces):
        fi = instance.activation_cost[i]
        total += fi * sum(act[i])
    return total


def check_constraints(instance: SiaInstance, alloc: Allocation) -> ConstraintReport:
    """Exact satisfaction report: demand equalities and capacity inequalities.

    Violations are report content, not errors; capacity is evaluated with the
    overhead-inflated load in rational arithmetic, zero tolerance.
    """
    _check_dims(instance, alloc)
    demand_met = tuple(
        tuple(
            sum(alloc.x[i][j][k] for i in range(instance.num_interfaces))
            == instance.demand[j][k]
            for k in range(instance.num_resources)
        )
        for j in range(instance.num_services)
    )
    capacity_ok = []
    for i in range(instance.num_interfaces):
        row = []
        for k in range(instance.num_resources):
            load = sum(
                (1 + instance.overhead[i][j][k]) * alloc.x[i][j][k]
                for j in range(instance.num_services)
            )
            row.append(load <= instance.capacity[i][k])
        capacity_ok.append(tuple(row))
    capacity_ok = tuple(capacity_ok)
    satisfied = all(all(r) for r in demand_met) and all(all(r) for r in capacity_ok)
    return ConstraintReport(demand_met=demand_met, capacity_ok=capacity_ok, satisfied=satisfied)


def aggregate_feasibility(instance: SiaInstance) -> bool:
    """Necessary condition: per resource, total demand fits total capacity.

    Overheads are deliberately ignored here; with positive overheads this is
    necessary but not sufficient, and solver-detected infeasibility is
    reported separately.
    """
    for k in range(instance.num_resources):
        total_demand = sum(instance.demand[j][k] for j in range(instance.num_services))
        total_capacity = sum(instance.capacity[i][k] for i in range(instance.num_interfaces))
        if total_demand > total_capacity:
            return False
    return True


def split_count(solution: Solution) -> int:
    """Extra interfaces used beyond one per service, summed over services."""
    if solution.activation is None:
        return 0
    total = 0
    num_services = len(solution.activation[0]) if solution.activation else 0
    for j in range(num_services):
        used = sum(solution.activation[i][j] for i in range(len(solution.activation)))
        total += max(0, used - 1)
    return total


def make_solution(
    instance: SiaInstance,
    alloc: Allocation | None,
    status: SolveStatus,
    stats: SolveStats,
    bound: Fraction | None = None,
) -> Solution:
    """Canonical Solution factory: recomputes activation and objective."""
    if alloc is None:
        return Solution(
            allocation=None, activation=None, objective=None,
            status=status, stats=stats, bound=bound,
        )
    _check_dims(instance, alloc)
    return Solution(
        allocation=alloc,
        activation=activation_of(alloc),
        objective=objective(instance, alloc),
        status=status,
        stats=stats,
        bound=bound,
    )
