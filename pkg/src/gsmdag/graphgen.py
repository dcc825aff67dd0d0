"""Random layered structure graphs and dependency DAGs with exact op-count control.

The generation pipeline runs in five stages, each a pure function of an RNG
stream and the previous stage's output:

1. ``draw_structure``     -- a layered graph of items; every edge is one
                             instance parameter of the eventual problem.
2. ``draw_necessary1``    -- greedily packs abstract parameters (and their
                             recursive dependency cones) under an op budget,
                             then tops up with loose instance parameters.
3. ``draw_necessary2``    -- picks the query and builds a topological order
                             back-to-front, adding edges so that every chosen
                             parameter is necessary for the query.
4. ``draw_necessary3``    -- distributes extra in-edges (and the shared RNG
                             constant vertex) so the total operation count hits
                             an exact target ``s``.
5. ``draw_unnecessary``   -- pads the graph with every remaining instance
                             parameter, wiring them to already-known values so
                             they are solvable but irrelevant.

``draw_all`` composes the stages with the retry policy the stage functions
assume (inner structure-graph retries, full restarts on hard failures).

Parameters are identified by plain tagged tuples so they can serve as dict
keys and serialize naturally:

- ``("inst", layer, parent, child)``: the count of child-items per
  parent-item along one structure edge (parent sits on ``layer``, the child
  on ``layer + 1``).
- ``("abst", layer, anchor, target)``: the total number of ``target``-layer
  items inside one anchor item, ``target > layer``.

The distinguished constant vertex is the module-level ``RNG`` sentinel; it
may appear in instance-parameter dependency lists only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .rng import Stream

RNG = "rng"

InstKey = tuple  # ("inst", layer, parent, child)
AbstKey = tuple  # ("abst", layer, anchor, target)
ParamKey = tuple


class GenerationError(RuntimeError):
    """Raised when the retry budget is exhausted without a valid draw."""


def is_instance(key: ParamKey) -> bool:
    return key[0] == "inst"


def is_abstract(key: ParamKey) -> bool:
    return key[0] == "abst"


def instance_key(layer: int, parent: int, child: int) -> InstKey:
    return ("inst", layer, parent, child)


def abstract_key(layer: int, anchor: int, target: int) -> AbstKey:
    return ("abst", layer, anchor, target)


@dataclass(frozen=True)
class StructureGraph:
    """Layered item graph; edges run between adjacent layers, top to bottom.

    ``edges`` holds ``(layer, parent_index, child_index)`` triples in
    insertion order; that order is frozen because it defines the canonical
    term order of abstract parameters downstream.
    """

    depth: int
    layer_sizes: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    @cached_property
    def _children(self) -> dict[tuple[int, int], tuple[int, ...]]:
        out: dict[tuple[int, int], list[int]] = {}
        for layer, parent, child in self.edges:
            out.setdefault((layer, parent), []).append(child)
        return {k: tuple(v) for k, v in out.items()}

    def children(self, layer: int, index: int) -> tuple[int, ...]:
        """Child indices of one item, in edge-insertion order."""
        return self._children.get((layer, index), ())

    def instance_keys(self) -> list[InstKey]:
        return [instance_key(*edge) for edge in self.edges]


class DependencyGraph:
    """Mutable DAG over parameter keys; ``deps[a]`` lists what ``a`` is
    computed from, in the order the edges were attached.

    Instance parameters may list the ``RNG`` sentinel; abstract parameters
    carry exactly their structure-induced dependencies.
    """

    __slots__ = ("structure", "deps")

    def __init__(self, structure: StructureGraph):
        self.structure = structure
        self.deps: dict[ParamKey, list] = {}

    def copy(self) -> "DependencyGraph":
        other = DependencyGraph(self.structure)
        other.deps = {k: list(v) for k, v in self.deps.items()}
        return other

    def has(self, key: ParamKey) -> bool:
        return key in self.deps

    def add_param(self, key: ParamKey, deps: list | None = None) -> None:
        if key in self.deps:
            raise ValueError(f"parameter added twice: {key}")
        self.deps[key] = list(deps) if deps else []

    def add_edge(self, src, dst: ParamKey) -> None:
        self.deps[dst].append(src)

    def params(self) -> list[ParamKey]:
        return list(self.deps)

    def instance_params(self) -> list[InstKey]:
        return [k for k in self.deps if is_instance(k)]

    def abstract_params(self) -> list[AbstKey]:
        return [k for k in self.deps if is_abstract(k)]

    def op_of(self, key: ParamKey) -> int:
        """Binary operations needed to state this parameter's value.

        An in-degree of t costs max(1, t-1): a straight assignment and a
        single combination both cost one, and each further operand adds one.
        """
        return max(1, len(self.deps[key]) - 1)

    def op_total(self) -> int:
        return sum(self.op_of(k) for k in self.deps)

    def non_rng_deps(self, key: ParamKey) -> list[ParamKey]:
        return [d for d in self.deps[key] if d != RNG]

    def has_rng_dep(self, key: ParamKey) -> bool:
        return RNG in self.deps[key]


def abstract_terms(structure: StructureGraph, key: AbstKey) -> list[tuple]:
    """The value of an abstract parameter as a list of product terms.

    Each term is ``(inst,)`` for a one-layer total or ``(inst, abst)`` for a
    deeper one, per child in edge-insertion order.  An anchor with no
    children yields no terms (such a parameter is 0).
    """
    _, layer, anchor, target = key
    terms = []
    for child in structure.children(layer, anchor):
        inst = instance_key(layer, anchor, child)
        if target == layer + 1:
            terms.append((inst,))
        else:
            terms.append((inst, abstract_key(layer + 1, child, target)))
    return terms


def structure_deps(structure: StructureGraph, key: AbstKey) -> list[ParamKey]:
    """Flattened, ordered dependency list of an abstract parameter."""
    out: list[ParamKey] = []
    for term in abstract_terms(structure, key):
        out.extend(term)
    return out


def insert_closure(g: DependencyGraph, key: ParamKey) -> None:
    """Insert ``key`` plus everything it recursively depends on, deps first.

    Instance parameters enter bare (their in-edges are assigned later);
    abstract parameters enter with their structure-induced dependency lists.
    """
    if g.has(key):
        return
    if is_instance(key):
        g.add_param(key)
        return
    deps = structure_deps(g.structure, key)
    for d in deps:
        insert_closure(g, d)
    g.add_param(key, deps)


def op_count(g: DependencyGraph) -> int:
    """Total operation count; equals the semicolon count of the solution."""
    return g.op_total()


def _abstract_candidates(structure: StructureGraph, difficulty: int,
                         g: DependencyGraph) -> list[AbstKey]:
    """Absent abstract parameters of the given difficulty whose anchor has at
    least one child, scanned in a fixed layer/index order."""
    out = []
    for layer in range(structure.depth - 1):
        target = layer + difficulty
        if target > structure.depth - 1:
            continue
        for idx in range(structure.layer_sizes[layer]):
            key = abstract_key(layer, idx, target)
            if structure.children(layer, idx) and not g.has(key):
                out.append(key)
    return out


# ---------------------------------------------------------------------------
# Stage 1: structure graph


def draw_structure(rng: Stream, e: int, d: int, w0: int, w1: int) -> StructureGraph:
    """Draw a depth-``d`` layered graph with exactly ``e`` edges and layer
    sizes grown randomly from ``w0`` toward ``w1``.

    Every non-top item receives one mandatory parent so each edge's child end
    is reachable; the remaining edges land uniformly over free parent/child
    slots.
    """
    if d < 2:
        raise ValueError(f"depth must be at least 2, got {d}")
    if not 1 <= w0 <= w1:
        raise ValueError(f"bad width range [{w0}, {w1}]")
    if e < (d - 1) * w0:
        raise ValueError(f"{e} edges cannot reach every item at minimum sizes")
    if e > (d - 1) * w1 * w1:
        raise ValueError(f"{e} edges exceed capacity at maximum sizes")

    sizes = [w0] * d
    grow_bias = rng.random()
    while sizes != [w1] * d:
        e_min = sum(sizes[1:])
        e_cap = sum(sizes[i] * sizes[i + 1] for i in range(d - 1))
        if e_cap < e:
            pass  # must grow: not enough edge slots yet
        elif e_min == e:
            break
        elif not rng.coin(grow_bias):
            break
        growable = [i for i in range(d) if sizes[i] < w1]
        sizes[rng.choice(growable)] += 1
    return _place_edges(rng, e, d, sizes)


def _place_edges(rng: Stream, e: int, d: int, sizes: list[int]) -> StructureGraph:
    edges: list[tuple[int, int, int]] = []
    present: set[tuple[int, int, int]] = set()
    for layer in range(1, d):
        for child in range(sizes[layer]):
            edge = (layer - 1, rng.randbelow(sizes[layer - 1]), child)
            edges.append(edge)
            present.add(edge)
    total_slots = sum(sizes[i] * sizes[i + 1] for i in range(d - 1))
    while len(edges) < e:
        r = rng.randbelow(total_slots)
        for layer in range(d - 1):
            block = sizes[layer] * sizes[layer + 1]
            if r < block:
                parent, child = divmod(r, sizes[layer + 1])
                edge = (layer, parent, child)
                break
            r -= block
        if edge not in present:
            edges.append(edge)
            present.add(edge)
    return StructureGraph(depth=d, layer_sizes=tuple(sizes), edges=tuple(edges))


# ---------------------------------------------------------------------------
# Stage 2: necessary parameters under an op budget


def draw_necessary1(rng: Stream, structure: StructureGraph, n: int, m: int) -> DependencyGraph:
    """Pack abstract parameters (with their cones) while the total stays at or
    under ``n``, preferring higher difficulties, then add up to ``m - op``
    loose instance parameters.

    Preconditions: ``1 <= n <= m``.
    """
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n} m={m}")
    g = DependencyGraph(structure)
    while True:
        updated = False
        for difficulty in range(structure.depth - 1, 0, -1):
            candidates = _abstract_candidates(structure, difficulty, g)
            if not candidates:
                continue
            pick = rng.choice(candidates)
            trial = g.copy()
            insert_closure(trial, pick)
            if trial.op_total() <= n:
                g = trial
                updated = True
                break
        if not updated:
            break
    for _ in range(m - g.op_total()):
        leftovers = [k for k in structure.instance_keys() if not g.has(k)]
        if not leftovers:
            break
        g.add_param(rng.choice(leftovers))
    return g


# ---------------------------------------------------------------------------
# Stage 3: query choice and topological order


def _weighted_pick(rng: Stream, candidates: list[ParamKey],
                   next1: set[ParamKey]) -> ParamKey:
    """Biased pick used when wiring new edges: abstract parameters and
    parameters that already feed the ordered suffix get softmax weight |g|
    (one shared Gaussian per pick), everything else weight 0."""
    g = abs(rng.gauss())
    weights = [(is_abstract(a) + (a in next1)) * g for a in candidates]
    return rng.softmax_choice(candidates, weights)


def draw_necessary2(rng: Stream, g2: DependencyGraph):
    """Choose the query and a back-to-front topological order over ``g2``,
    adding edges so every parameter becomes necessary for the query.

    Returns ``(g3, topo)`` or ``None`` when the order gets stuck behind an
    abstract parameter (the caller redraws the structure graph).  New edges
    only ever point into the instance parameter appended most recently, so
    instance in-degrees stay at most 1 and the op total is unchanged.
    """
    g = g2.copy()
    all_params = g.params()
    dependents: dict[ParamKey, set[ParamKey]] = {k: set() for k in all_params}
    for k in all_params:
        for d in g.deps[k]:
            dependents[d].add(k)

    in_topo: set[ParamKey] = set()
    topo: list[ParamKey] = []

    def next1() -> set[ParamKey]:
        out = set()
        for b in in_topo:
            for a in g.deps[b]:
                if a not in in_topo:
                    out.add(a)
        return out

    def next2_list() -> list[ParamKey]:
        out = []
        for a in all_params:
            if a in in_topo:
                continue
            if all(b in in_topo for b in dependents[a]):
                out.append(a)
        return out

    edge_bias = rng.random()
    while True:
        n1 = next1()
        if not topo:
            candidates = next2_list()
        else:
            candidates = [a for a in next2_list() if a in n1]
        param0 = rng.choice(candidates)
        topo.insert(0, param0)
        in_topo.add(param0)
        if len(topo) == len(all_params):
            break
        n1 = next1()
        pending = [a for a in next2_list() if a in n1]
        if not pending:
            if is_abstract(param0):
                return None
            param1 = _weighted_pick(rng, next2_list(), n1)
            g.add_edge(param1, param0)
            dependents[param1].add(param0)
        elif is_instance(param0) and rng.coin(edge_bias):
            remaining = [a for a in all_params if a not in in_topo]
            param1 = _weighted_pick(rng, remaining, n1)
            g.add_edge(param1, param0)
            dependents[param1].add(param0)
    return g, topo


# ---------------------------------------------------------------------------
# Stage 4: exact op total and the RNG vertex


def draw_necessary3(rng: Stream, g3: DependencyGraph, topo: list[ParamKey],
                    s: int):
    """Raise per-parameter op counts to sum exactly to ``s``, then attach
    dependency edges (and the RNG vertex) realizing those counts.

    Returns the finished graph or ``None`` when no instance parameter can
    absorb another operation.  Instance parameters near the front of the
    order have little to depend on, so their budget is capped by position
    (1-indexed position ``i`` allows ``min(3, max(1, i - 1))`` ops).
    """
    g = g3.copy()
    cur_op = {a: g.op_of(a) for a in g.params()}
    if sum(cur_op.values()) > s:
        raise ValueError(f"op {sum(cur_op.values())} already above target {s}")
    position = {a: i for i, a in enumerate(topo)}

    def max_op(a: ParamKey) -> int:
        return min(3, max(1, (position[a] + 1) - 1))

    while sum(cur_op.values()) < s:
        eligible = [a for a in topo if is_instance(a) and cur_op[a] < max_op(a)]
        if not eligible:
            return None
        cur_op[rng.choice(eligible)] += 1

    for a in topo:
        if not is_instance(a):
            continue
        pool: list = [RNG] + topo[:position[a]]
        if cur_op[a] == 1:
            dep_num = 1 + rng.randbelow(2)
        else:
            dep_num = cur_op[a] + 1
        dep_num = min(len(pool), dep_num)
        existing = g.deps[a]
        if existing:
            pool.remove(existing[0])
            dep_num -= 1
        if dep_num == len(pool):
            for b in pool:
                g.add_edge(b, a)
        else:
            if rng.coin():
                g.add_edge(RNG, a)
                dep_num -= 1
            pool.remove(RNG)
            for b in rng.sample(pool, max(0, dep_num)):
                g.add_edge(b, a)
    return g


# ---------------------------------------------------------------------------
# Stage 5: unnecessary padding


def draw_unnecessary(rng: Stream, structure: StructureGraph,
                     gnece: DependencyGraph) -> DependencyGraph:
    """Add every structure edge still missing as an unnecessary instance
    parameter, wired to already-computable values (or to the independent
    cluster ``ind_list``, so padding can surface early in a solution too).
    """
    g = gnece.copy()
    ind_list: list[ParamKey] = []
    while True:
        missing = [k for k in structure.instance_keys() if not g.has(k)]
        if not missing:
            break
        known = g.params() + _computable_abstracts(structure, g)
        a = rng.choice(missing)
        g.add_param(a)
        if rng.coin():
            pool = ind_list + [RNG]
            ind_list.append(a)
        else:
            pool = known + [RNG]
        dep_num = 1
        while dep_num < min(4, len(pool)):
            if rng.coin():
                dep_num += 1
            else:
                break
        if dep_num == len(pool):
            selected = list(pool)
        else:
            selected = []
            if rng.coin():
                selected.append(RNG)
                dep_num -= 1
            pool.remove(RNG)
            selected.extend(rng.sample(pool, dep_num))
        for b in selected:
            if b != RNG and not g.has(b):
                _insert_computable(g, b)
            g.add_edge(b, a)
    return g


def _computable_abstracts(structure: StructureGraph,
                          g: DependencyGraph) -> list[AbstKey]:
    """Absent abstract parameters whose structure-induced dependencies are
    all present already (vacuously true for childless anchors)."""
    out = []
    for layer in range(structure.depth - 1):
        for idx in range(structure.layer_sizes[layer]):
            for target in range(layer + 1, structure.depth):
                key = abstract_key(layer, idx, target)
                if g.has(key):
                    continue
                if all(g.has(d) for d in structure_deps(structure, key)):
                    out.append(key)
    return out


def _insert_computable(g: DependencyGraph, key: AbstKey) -> None:
    """Insert an abstract parameter whose cone is already present.

    Unlike ``insert_closure`` this must never create bare instance
    parameters (they would have no defining sentence), so missing instance
    dependencies are a hard error rather than something to repair.
    """
    if g.has(key):
        return
    deps = structure_deps(g.structure, key)
    for d in deps:
        if is_instance(d):
            if not g.has(d):
                raise RuntimeError(f"uncomputable abstract selected: {key}")
        else:
            _insert_computable(g, d)
    g.add_param(key, deps)


# ---------------------------------------------------------------------------
# The composed draw


@dataclass(frozen=True)
class GraphBundle:
    """Everything the English stages need about one drawn problem."""

    structure: StructureGraph
    graph: DependencyGraph
    topo: tuple[ParamKey, ...]
    query: ParamKey
    op: int
    draw_meta: dict = field(default_factory=dict, compare=False)

    @property
    def ip(self) -> int:
        return len(self.structure.edges)

    @property
    def necessary(self) -> frozenset:
        return frozenset(self.topo)


def draw_all(rng: Stream, op_max: int, ip_max: int, force: bool = False,
             max_restarts: int = 100_000) -> GraphBundle:
    """Draw a complete dependency graph whose solution needs at most (or,
    with ``force``, exactly) ``op_max`` operations and at most ``ip_max``
    instance parameters.

    Difficulty knobs are sampled per restart: the op target ``s`` is the min
    of two uniform draws (easier problems are more common), the necessary
    budget ``n``/``m`` bracket comes from draws under ``s``, and the depth
    and widths lean larger as ``s`` grows.
    """
    if op_max < 1 or ip_max < 2:
        raise ValueError(f"bad limits op_max={op_max} ip_max={ip_max}")
    for _ in range(max_restarts):
        s = min(rng.randint(1, op_max), rng.randint(1, op_max))
        if force:
            s = op_max
        n = max(rng.randint(1, s), rng.randint(1, s))
        m = rng.randint(n, s)
        rel = (s - 1) / (ip_max - 1)
        weights = [-(rel - 0.2) ** 2, -(rel - 0.5) ** 2, -(rel - 0.8) ** 2]
        d = rng.softmax_choice([2, 3, 4], weights)
        a0 = rng.softmax_choice([2, 3, 4], weights)
        a1 = rng.softmax_choice([2, 3, 4], weights)
        w0, w1 = min(a0, a1), max(a0, a1)
        lo = (d - 1) * w0
        hi = max(ip_max, lo)
        e = min(rng.randint(lo, hi), rng.randint(lo, hi), (d - 1) * w1 * w1)

        result = None
        for _ in range(1000):
            structure = draw_structure(rng, e, d, w0, w1)
            g2 = draw_necessary1(rng, structure, n, m)
            result = draw_necessary2(rng, g2)
            if result is not None:
                break
        if result is None:
            continue
        g3, topo = result
        gnece = draw_necessary3(rng, g3, topo, s)
        if gnece is None:
            continue
        graph = draw_unnecessary(rng, structure, gnece)
        meta = {"s": s, "n": n, "m": m, "d": d, "w0": w0, "w1": w1, "e": e}
        return GraphBundle(structure=structure, graph=graph, topo=tuple(topo),
                           query=topo[-1], op=s, draw_meta=meta)
    raise GenerationError(f"no valid draw in {max_restarts} restarts")

