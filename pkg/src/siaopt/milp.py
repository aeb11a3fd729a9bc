"""Compilation of an instance into a solver-agnostic standard-form MILP.

The activation indicator is linearized with per-variable big-M linking rows
x_ijk <= M_ijk * act_ij, where M_ijk is the tightest bound the data allows.
Variable order is fixed: all x variables in (i, j, k) lexicographic order,
then all activation variables in (i, j) order, so positions form a bijection
with the instance indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .instance import SiaInstance

INTEGER = "integer"
BINARY = "binary"
CONTINUOUS = "continuous"

LE = "<="
EQ = "="
GE = ">="


@dataclass(frozen=True, slots=True)
class Variable:
    name: str
    kind: str                  # integer | binary | continuous
    lower: Fraction
    upper: Fraction | None     # None = unbounded above


@dataclass(frozen=True, slots=True)
class LinearConstraint:
    name: str
    coeffs: tuple[tuple[int, Fraction], ...]  # sparse (variable position, coefficient)
    relation: str                             # <= | = | >=
    rhs: Fraction


@dataclass(frozen=True, slots=True)
class VarIndex:
    """Bijection between instance indices and variable positions."""

    num_interfaces: int
    num_services: int
    num_resources: int

    def x(self, i: int, j: int, k: int) -> int:
        return (i * self.num_services + j) * self.num_resources + k

    def act(self, i: int, j: int) -> int:
        return (
            self.num_interfaces * self.num_services * self.num_resources
            + i * self.num_services
            + j
        )

    @property
    def num_x(self) -> int:
        return self.num_interfaces * self.num_services * self.num_resources

    @property
    def num_act(self) -> int:
        return self.num_interfaces * self.num_services


@dataclass(frozen=True, slots=True)
class MilpModel:
    variables: tuple[Variable, ...]
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[tuple[int, Fraction], ...]  # sparse minimization coefficients
    var_index: VarIndex | None = None            # None for generic (e.g. parsed) models


def big_m(instance: SiaInstance, i: int, j: int, k: int) -> int:
    """Largest value x_ijk can take: demand capped by inflated capacity.

    The floor is exact rational arithmetic, so fractional overheads never
    admit a unit the capacity cannot hold.
    """
    return min(
        instance.demand[j][k],
        instance.capacity[i][k] // (1 + instance.overhead[i][j][k]),
    )


def build_milp(instance: SiaInstance) -> MilpModel:
    """Build the MILP whose integer optima correspond one-to-one to instance optima.

    Constraint order: demand equalities (j, k), capacity inequalities (i, k),
    then linking rows (i, j, k).  Variables with big-M zero are fixed at zero
    rather than removed, preserving the index bijection.
    """
    ni, nj, nk = instance.num_interfaces, instance.num_services, instance.num_resources
    index = VarIndex(ni, nj, nk)
    zero = Fraction(0)
    one = Fraction(1)

    variables: list[Variable] = []
    for i in range(ni):
        for j in range(nj):
            for k in range(nk):
                m = big_m(instance, i, j, k)
                variables.append(
                    Variable(f"x_{i + 1}_{j + 1}_{k + 1}", INTEGER, zero, Fraction(m))
                )
    for i in range(ni):
        for j in range(nj):
            variables.append(Variable(f"act_{i + 1}_{j + 1}", BINARY, zero, one))

    constraints: list[LinearConstraint] = []
    for j in range(nj):
        for k in range(nk):
            coeffs = tuple((index.x(i, j, k), one) for i in range(ni))
            constraints.append(
                LinearConstraint(
                    f"demand_{j + 1}_{k + 1}", coeffs, EQ, Fraction(instance.demand[j][k])
                )
            )
    for i in range(ni):
        for k in range(nk):
            coeffs = tuple(
                (index.x(i, j, k), 1 + instance.overhead[i][j][k]) for j in range(nj)
            )
            constraints.append(
                LinearConstraint(
                    f"cap_{i + 1}_{k + 1}", coeffs, LE, Fraction(instance.capacity[i][k])
                )
            )
    for i in range(ni):
        for j in range(nj):
            for k in range(nk):
                m = Fraction(big_m(instance, i, j, k))
                coeffs = ((index.x(i, j, k), one), (index.act(i, j), -m))
                constraints.append(
                    LinearConstraint(f"link_{i + 1}_{j + 1}_{k + 1}", coeffs, LE, zero)
                )

    objective: list[tuple[int, Fraction]] = []
    for i in range(ni):
        for j in range(nj):
            for k in range(nk):
                c = instance.unit_cost[i][k]
                if c:
                    objective.append((index.x(i, j, k), c))
    for i in range(ni):
        fi = instance.activation_cost[i]
        if fi:
            for j in range(nj):
                objective.append((index.act(i, j), fi))

    return MilpModel(
        variables=tuple(variables),
        constraints=tuple(constraints),
        objective=tuple(objective),
        var_index=index,
    )


def objective_value(model: MilpModel, values) -> Fraction:
    """Evaluate the model objective at a point given as a value-per-position sequence."""
    return sum((coef * values[pos] for pos, coef in model.objective), Fraction(0))
