"""Arithmetic meaning of a dependency graph: formulas, values, necessity.

Instance parameters are assigned by one sentence each; its shape is frozen
in an :class:`OpSpec` so the problem text, the canonical solution, and the
verifier all agree on operand order and on where the random constant sits.
Abstract parameters have no OpSpec -- their formula is structural (a sum of
per-child terms, each either an instance count or an instance-times-abstract
product).

All arithmetic is over the ring of integers modulo a prime ``p`` (23 by
default); intermediate results are always reduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphgen import (RNG, DependencyGraph, ParamKey, abstract_terms,
                       is_abstract, is_instance)
from .rng import Stream

DEFAULT_MODULUS = 23

AGG_SINGLE = "single"
AGG_SUM = "sum"
AGG_DIFFERENCE = "difference"
AGG_SUM_MANY = "sum_many"

COMB_ADD = "add"
COMB_MULTIPLY = "multiply"


def mod_reduce(x: int, p: int) -> int:
    """Least non-negative residue of ``x`` modulo ``p``."""
    if p <= 0:
        raise ValueError(f"modulus must be positive, got {p}")
    return x % p


@dataclass(frozen=True)
class OpSpec:
    """How one instance parameter's sentence computes its value.

    ``operands`` is the printed order.  ``const`` is present exactly when the
    parameter draws on the shared random constant; the ``combinator`` joins
    the constant with the aggregated operands and exists only when there is
    something on both sides.
    """

    const: int | None
    combinator: str | None
    aggregator: str | None
    operands: tuple[ParamKey, ...]

    def __post_init__(self):
        k = len(self.operands)
        if self.const is None and k == 0:
            raise ValueError("OpSpec with neither constant nor operands")
        if self.const is not None and self.const < 0:
            raise ValueError(f"negative constant {self.const}")
        if (self.combinator is not None) != (self.const is not None and k >= 1):
            raise ValueError("combinator exists iff a constant meets operands")
        if self.combinator not in (None, COMB_ADD, COMB_MULTIPLY):
            raise ValueError(f"unknown combinator {self.combinator!r}")
        expected = {0: None, 1: AGG_SINGLE, 2: (AGG_SUM, AGG_DIFFERENCE)}.get(
            k, AGG_SUM_MANY)
        if k == 2:
            if self.aggregator not in expected:
                raise ValueError(f"two operands need sum or difference, "
                                 f"got {self.aggregator!r}")
        elif self.aggregator != expected:
            raise ValueError(f"aggregator {self.aggregator!r} wrong for "
                             f"{k} operands")

    def aggregate(self, values: list[int], p: int) -> int | None:
        """Fold the operand values (given in printed order), or None if the
        spec is a bare constant."""
        if not values:
            return None
        if self.aggregator == AGG_SINGLE:
            return mod_reduce(values[0], p)
        if self.aggregator == AGG_DIFFERENCE:
            return mod_reduce(values[0] - values[1], p)
        return mod_reduce(sum(values), p)

    def combine(self, aggregated: int | None, p: int) -> int:
        """Apply the constant (if any) to the aggregated operand value."""
        if aggregated is None:
            return mod_reduce(self.const, p)
        if self.combinator is None:
            return aggregated
        if self.combinator == COMB_ADD:
            return mod_reduce(self.const + aggregated, p)
        return mod_reduce(self.const * aggregated, p)


def draw_opspec(rng: Stream, graph: DependencyGraph, key: ParamKey,
                p: int = DEFAULT_MODULUS) -> OpSpec:
    """Freeze the sentence shape for one instance parameter.

    Draw order (constant, combinator coin, operand shuffle, sum/difference
    coin) is fixed so identical streams give identical problems.
    """
    if not is_instance(key):
        raise ValueError(f"OpSpec applies to instance parameters, got {key}")
    has_rng = graph.has_rng_dep(key)
    operands = graph.non_rng_deps(key)
    const = rng.randbelow(p) if has_rng else None
    combinator = None
    if has_rng and operands:
        combinator = COMB_ADD if rng.coin() else COMB_MULTIPLY
    if len(operands) >= 2:
        rng.shuffle(operands)
    if len(operands) == 0:
        aggregator = None
    elif len(operands) == 1:
        aggregator = AGG_SINGLE
    elif len(operands) == 2:
        aggregator = AGG_SUM if rng.coin() else AGG_DIFFERENCE
    else:
        aggregator = AGG_SUM_MANY
    return OpSpec(const=const, combinator=combinator, aggregator=aggregator,
                  operands=tuple(operands))


def evaluate(graph: DependencyGraph, opspecs: dict[ParamKey, OpSpec],
             p: int = DEFAULT_MODULUS) -> dict[ParamKey, int]:
    """Value of every parameter in the graph, all reduced modulo ``p``.

    Evaluation is demand-driven over dependency edges, so it works for any
    acyclic graph regardless of insertion order.
    """
    values: dict[ParamKey, int] = {}
    visiting: set[ParamKey] = set()

    def value_of(key: ParamKey) -> int:
        if key in values:
            return values[key]
        if key in visiting:
            raise ValueError(f"dependency cycle through {key}")
        visiting.add(key)
        if is_instance(key):
            spec = opspecs[key]
            operand_values = [value_of(d) for d in spec.operands]
            result = spec.combine(spec.aggregate(operand_values, p), p)
        else:
            total = 0
            for term in abstract_terms(graph.structure, key):
                if len(term) == 1:
                    total += value_of(term[0])
                else:
                    total += value_of(term[0]) * value_of(term[1])
            result = mod_reduce(total, p)
        visiting.discard(key)
        values[key] = result
        return result

    for key in graph.params():
        value_of(key)
    return values


def necessary_set(graph: DependencyGraph, query: ParamKey) -> frozenset:
    """The query plus everything it transitively depends on (RNG excluded)."""
    seen: set[ParamKey] = set()
    stack = [query]
    while stack:
        key = stack.pop()
        if key in seen or key == RNG:
            continue
        seen.add(key)
        stack.extend(graph.deps[key])
    return frozenset(seen)


def topo_order_for(graph: DependencyGraph, query: ParamKey) -> list[ParamKey]:
    """A deterministic topological order of the query's dependency cone
    (dependencies first, query last); used when a problem is re-asked."""
    order: list[ParamKey] = []
    placed: set[ParamKey] = set()

    def visit(key: ParamKey) -> None:
        if key in placed or key == RNG:
            return
        placed.add(key)
        for d in graph.deps[key]:
            visit(d)
        order.append(key)

    visit(query)
    return order
