#!/usr/bin/env python3
from __future__ import annotations

from dataclasses import dataclass
from graphlib import TopologicalSorter
from typing import Any, Dict, List, Mapping, Set, Tuple

from ..errors import ChainMapError, WindowError
from ..linalg import matrix_from_columns, solve_linear
from ..utils.logging_config import get_logger, log_function_call, log_function_result
from .closure import TENSOR_SQUARE, AcyclicClosure, ModuleElement, ModuleKey, add_module

logger = get_logger("gorext.resolution.lifts")

SEEDS = ("symmetric", "identity", "solve")


def _act(target: AcyclicClosure, z: Any, element: Mapping[ModuleKey, Any], coeff: Any) -> ModuleElement:
    """z · element for a base monomial z acting on the left."""
    algebra = target.base
    out: ModuleElement = {}
    for (z2, j), c in element.items():
        found = algebra.multiply_keys(z, z2)
        if found is None:
            continue
        key, sign = found
        value = coeff * c
        add_module(out, {(key, j): -value if sign % 2 else value})
    return out


@dataclass
class ComparisonLift:
    """Base-linear map between two closures, given on the source semibasis."""

    source: AcyclicClosure
    target: AcyclicClosure
    values: Tuple[ModuleElement, ...]
    method: str

    def apply(self, element: Mapping[ModuleKey, Any]) -> ModuleElement:
        out: ModuleElement = {}
        for (z, i), coeff in element.items():
            add_module(out, _act(self.target, z, self.values[i], coeff))
        return out

    def defect(self, index: int) -> ModuleElement:
        """δ_Q α(m) - α(δ_P m) on one semibasis element."""
        lhs = self.target.apply_delta(self.values[index])
        add_module(lhs, self.apply(self.source.delta[index]), -self.source.field_spec.one)
        return lhs

    def check(self) -> None:
        for i, m in enumerate(self.source.semibasis):
            if self.defect(i):
                raise ChainMapError(m.degree)

    def is_chain_map(self) -> bool:
        return not any(self.defect(i) for i in range(len(self.source)))


def _symmetric_values(P: AcyclicClosure, Q: AcyclicClosure) -> Tuple[ModuleElement, ...]:
    """α(m) = ½(m ⊗ 1 + 1 ⊗ m)."""
    rank = len(P.presentation.generators)
    zeros = (0,) * rank
    half = P.field_spec.half()
    one_key = P.base.one_key()
    values: List[ModuleElement] = []
    for i, m in enumerate(P.semibasis):
        if i == 0:
            values.append(Q.unit())
            continue
        left = Q.index_of_exponents(m.exponents + zeros)
        right = Q.index_of_exponents(zeros + m.exponents)
        if left is None or right is None:
            raise WindowError(
                f"semibasis element '{m.label}' has no image in the tensor square; "
                "increase weight_bound",
                m.degree,
            )
        value: ModuleElement = {}
        add_module(value, {(one_key, left): half})
        add_module(value, {(one_key, right): half})
        values.append(value)
    return tuple(values)


def solve_order(closure: AcyclicClosure) -> List[int]:
    """Semibasis indices so that everything in δm precedes m; ties by (degree, index)."""
    graph: Dict[int, Set[int]] = {}
    for i, image in enumerate(closure.delta):
        graph[i] = {j for (_, j) in image if j != i}
    sorter: TopologicalSorter[int] = TopologicalSorter(graph)
    sorter.prepare()
    order: List[int] = []
    while sorter.is_active():
        ready = sorted(sorter.get_ready(), key=lambda i: (closure.degree(i), i))
        for node in ready:
            order.append(node)
            sorter.done(node)
    return order


def _solved_values(P: AcyclicClosure, Q: AcyclicClosure) -> Tuple[ModuleElement, ...]:
    field_spec = P.field_spec
    values: List[ModuleElement] = [{} for _ in range(len(P))]
    values[0] = Q.unit()
    partial = ComparisonLift(P, Q, tuple(values), "solve")
    bases: Dict[int, Tuple[List[ModuleKey], Dict[ModuleKey, int], List[Dict[int, Any]]]] = {}
    for i in solve_order(P):
        if i == 0:
            continue
        m = P.semibasis[i]
        partial.values = tuple(values)
        rhs = partial.apply(P.delta[i])
        if not rhs:
            continue
        if m.degree not in bases:
            keys = Q.total_basis(m.degree)
            rows: Dict[ModuleKey, int] = {}
            columns = []
            for key in keys:
                column = {}
                for k, c in Q.apply_delta({key: field_spec.one}).items():
                    column[rows.setdefault(k, len(rows))] = c
                columns.append(column)
            bases[m.degree] = (keys, rows, columns)
        keys, rows, columns = bases[m.degree]
        missing = [k for k in rhs if k not in rows]
        if missing:
            raise WindowError(
                f"no preimage for the lift of '{m.label}'; increase weight_bound", m.degree
            )
        matrix = matrix_from_columns(columns, len(rows), field_spec)
        solution = solve_linear(matrix, {rows[k]: c for k, c in rhs.items()}, field_spec)
        if solution is None:
            raise WindowError(
                f"no preimage for the lift of '{m.label}'; increase weight_bound", m.degree
            )
        values[i] = {keys[j]: c for j, c in solution.items() if c}
    return tuple(values)


def lift_comparison(
    P: AcyclicClosure, Q: AcyclicClosure, seed: str = "symmetric"
) -> ComparisonLift:
    """Chain map P → Q over the common base sending 1 to 1 ⊗ 1.

    ``symmetric`` uses the averaged factor inclusions and falls back to solving
    when that seed is not a chain map; ``identity`` requires Q to be P;
    ``solve`` builds the lift element by element with exact linear solves.
    """
    if seed not in SEEDS:
        raise ValueError(f"Unknown lift seed: {seed}")
    if P.presentation is not Q.presentation:
        raise ValueError("closures must share their base presentation")
    log_function_call(logger, "lift_comparison", seed=seed, source=len(P), target=len(Q))

    if seed == "identity":
        if Q is not P:
            raise ValueError("the identity seed needs the target to be the source")
        one_key = P.base.one_key()
        values = tuple({(one_key, i): P.field_spec.one} for i in range(len(P)))
        lift = ComparisonLift(P, Q, values, "identity")
    elif seed == "symmetric" and Q.kind == TENSOR_SQUARE:
        lift = ComparisonLift(P, Q, _symmetric_values(P, Q), "symmetric")
        if not lift.is_chain_map():
            logger.warning("Symmetric lift is not a chain map; solving instead")
            lift = ComparisonLift(P, Q, _solved_values(P, Q), "solve")
    else:
        lift = ComparisonLift(P, Q, _solved_values(P, Q), "solve")

    lift.check()
    log_function_result(logger, "lift_comparison", method=lift.method)
    return lift
