"""Postcondition audits for the graph drawing stages.

Each stage's contract is checked against small independent oracles
(re-derived from raw structure edges / dependency lists, not through the
library's own helpers) across a few hundred seeded draws.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsmdag import semantics
from gsmdag.graphgen import (RNG, GenerationError, abstract_key, draw_all,
                             draw_necessary1, draw_necessary2,
                             draw_necessary3, draw_structure,
                             draw_unnecessary, instance_key, is_abstract,
                             is_instance)
from gsmdag.rng import Stream


# ---------------------------------------------------------------------------
# oracles, written against the raw representations


def oracle_abstract_deps(structure, key):
    """Dependency list of an abstract parameter, re-derived by scanning the
    raw edge tuples: one instance edge per child, plus the child's total of
    the same target category when the target lies deeper."""
    _, layer, anchor, target = key
    deps = []
    for edge_layer, parent, child in structure.edges:
        if edge_layer == layer and parent == anchor:
            deps.append(instance_key(layer, parent, child))
            if target > layer + 1:
                deps.append(abstract_key(layer + 1, child, target))
    return deps


def assert_closures_complete(g):
    for key in g.abstract_params():
        expected = oracle_abstract_deps(g.structure, key)
        assert g.deps[key] == expected
        for dep in expected:
            assert g.has(dep), f"{key} lists absent dependency {dep}"


def oracle_is_dag(deps):
    WHITE, GREY, BLACK = 0, 1, 2
    color = {k: WHITE for k in deps}

    def visit(node):
        stack = [(node, iter(deps[node]))]
        color[node] = GREY
        while stack:
            cur, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt == RNG:
                    continue
                if color[nxt] == GREY:
                    return False
                if color[nxt] == WHITE:
                    color[nxt] = GREY
                    stack.append((nxt, iter(deps[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[cur] = BLACK
                stack.pop()
        return True

    return all(color[k] == BLACK or visit(k) for k in deps)


def oracle_ancestors(deps, start):
    """start plus everything reachable along dependency lists."""
    seen = set()
    frontier = [start]
    while frontier:
        node = frontier.pop()
        if node in seen or node == RNG:
            continue
        seen.add(node)
        frontier.extend(deps[node])
    return seen


def oracle_topo_ok(topo, deps):
    position = {key: i for i, key in enumerate(topo)}
    for key in topo:
        for dep in deps[key]:
            if dep == RNG:
                continue
            if dep not in position or position[dep] >= position[key]:
                return False
    return True


def oracle_op_total(deps):
    return sum(max(1, len(v) - 1) for k, v in deps.items())


def random_structure_args(py_rng):
    d = py_rng.randint(2, 4)
    w0 = py_rng.randint(1, 4)
    w1 = py_rng.randint(w0, 4)
    e = py_rng.randint((d - 1) * w0, (d - 1) * w1 * w1)
    return e, d, w0, w1


# ---------------------------------------------------------------------------
# stage 1: layered structure


def check_structure(structure, e, d, w0, w1):
    assert structure.depth == d
    assert len(structure.layer_sizes) == d
    assert all(w0 <= size <= w1 for size in structure.layer_sizes)
    assert len(structure.edges) == e
    assert len(set(structure.edges)) == e, "duplicate edge"
    children_seen = set()
    for layer, parent, child in structure.edges:
        assert 0 <= layer < d - 1
        assert 0 <= parent < structure.layer_sizes[layer]
        assert 0 <= child < structure.layer_sizes[layer + 1]
        children_seen.add((layer + 1, child))
    for layer in range(1, d):
        for idx in range(structure.layer_sizes[layer]):
            assert (layer, idx) in children_seen, \
                f"item {(layer, idx)} has no parent"


def test_structure_postconditions_across_seeds():
    py_rng = random.Random(0xC0FFEE)
    for trial in range(300):
        e, d, w0, w1 = random_structure_args(py_rng)
        structure = draw_structure(Stream.for_problem(11, trial), e, d, w0, w1)
        check_structure(structure, e, d, w0, w1)


def test_structure_minimal_edges_is_a_forest():
    # e == (d-1)*w0 forces every layer to stay at w0 and gives each child
    # exactly one parent.
    structure = draw_structure(Stream.for_problem(3, 1), 6, 4, 2, 4)
    assert structure.layer_sizes == (2, 2, 2, 2)
    seen = [edge[1:] for edge in structure.edges]
    assert len({(layer + 1, child) for layer, _, child in structure.edges}) == 6


def test_structure_maximal_edges_is_complete():
    # e == (d-1)*w1*w1 can only fit once every layer has grown to w1, and
    # then every parent-child pair must be an edge.
    structure = draw_structure(Stream.for_problem(3, 2), 27, 4, 1, 3)
    assert structure.layer_sizes == (3, 3, 3, 3)
    assert set(structure.edges) == {(layer, a, b)
                                    for layer in range(3)
                                    for a in range(3) for b in range(3)}


@pytest.mark.parametrize("args", [
    (4, 1, 2, 2),    # too shallow
    (4, 3, 0, 2),    # empty layer allowed nowhere
    (4, 3, 3, 2),    # widths out of order
    (1, 3, 1, 2),    # too few edges to parent everyone
    (9, 3, 1, 2),    # more edges than slots
])
def test_structure_rejects_bad_args(args):
    with pytest.raises(ValueError):
        draw_structure(Stream.for_problem(3, 3), *args)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32), d=st.integers(2, 4),
       w0=st.integers(1, 4), w1=st.integers(1, 4), slack=st.floats(0, 1))
def test_structure_postconditions_property(seed, d, w0, w1, slack):
    if w1 < w0:
        w0, w1 = w1, w0
    lo, hi = (d - 1) * w0, (d - 1) * w1 * w1
    e = lo + int(slack * (hi - lo))
    structure = draw_structure(Stream.for_problem(17, seed), e, d, w0, w1)
    check_structure(structure, e, d, w0, w1)


# ---------------------------------------------------------------------------
# stage 2: necessary skeleton under an op budget


def test_necessary1_postconditions():
    py_rng = random.Random(7)
    saw_abstract = 0
    for trial in range(200):
        e, d, w0, w1 = random_structure_args(py_rng)
        rng = Stream.for_problem(23, trial)
        structure = draw_structure(rng, e, d, w0, w1)
        n = py_rng.randint(1, 12)
        m = py_rng.randint(n, 14)
        g = draw_necessary1(rng, structure, n, m)
        assert g.op_total() <= m
        assert oracle_op_total(g.deps) == g.op_total()
        assert_closures_complete(g)
        for key in g.instance_params():
            assert g.deps[key] == [], "instance parameters enter bare"
        saw_abstract += bool(g.abstract_params())
    assert saw_abstract > 50, "budgets this size should often admit a total"


# ---------------------------------------------------------------------------
# stage 3: query choice and topological order


def pipeline_to_necessary2(trial, py_rng):
    e, d, w0, w1 = random_structure_args(py_rng)
    rng = Stream.for_problem(29, trial)
    structure = draw_structure(rng, e, d, w0, w1)
    n = py_rng.randint(1, 10)
    m = py_rng.randint(n, 12)
    g2 = draw_necessary1(rng, structure, n, m)
    result = draw_necessary2(rng, g2)
    return rng, structure, g2, result


def test_necessary2_postconditions():
    py_rng = random.Random(11)
    successes = 0
    for trial in range(400):
        rng, structure, g2, result = pipeline_to_necessary2(trial, py_rng)
        if result is None:
            continue
        successes += 1
        g3, topo = result
        assert sorted(map(repr, topo)) == sorted(map(repr, g3.params()))
        assert oracle_topo_ok(topo, g3.deps)
        assert oracle_is_dag(g3.deps)
        assert g3.op_total() == g2.op_total(), "op must not change here"
        for key in g3.instance_params():
            assert len(g3.deps[key]) <= 1
        for key in g2.params():  # nothing dropped, nothing rewired away
            assert g3.has(key)
            assert g3.deps[key][:len(g2.deps[key])] == g2.deps[key]
        query = topo[-1]
        assert oracle_ancestors(g3.deps, query) == set(topo), \
            "every kept parameter feeds the query"
    assert successes >= 200


def test_necessary2_keeps_abstract_closures():
    py_rng = random.Random(13)
    for trial in range(120):
        _, _, _, result = pipeline_to_necessary2(trial + 1000, py_rng)
        if result is None:
            continue
        g3, _ = result
        assert_closures_complete(g3)


# ---------------------------------------------------------------------------
# stage 4: hitting the op target exactly


def test_necessary3_hits_target_exactly():
    py_rng = random.Random(17)
    done = 0
    for trial in range(400):
        rng, structure, g2, result = pipeline_to_necessary2(trial, py_rng)
        if result is None:
            continue
        g3, topo = result
        base = g3.op_total()
        s = base + py_rng.randint(0, 6)
        g = draw_necessary3(rng, g3, topo, s)
        if g is None:
            # only legal when the per-parameter caps cannot absorb s
            cap = sum(min(3, max(1, i)) if is_instance(a) else g3.op_of(a)
                      for i, a in enumerate(topo))
            assert s > cap
            continue
        done += 1
        assert oracle_op_total(g.deps) == s
        assert oracle_topo_ok(topo, g.deps)
        for key in g.instance_params():
            deps = g.deps[key]
            assert len(deps) >= 1, "every quantity must be pinned down"
            assert len(deps) <= 4
            assert len(set(deps)) == len(deps)
        for key in g.abstract_params():
            assert not g.has_rng_dep(key)
        assert g3.op_total() == base, "input graph left untouched"
    assert done >= 150


def test_necessary3_rejects_overspent_budget():
    py_rng = random.Random(19)
    for trial in range(50):
        rng, _, _, result = pipeline_to_necessary2(trial, py_rng)
        if result is None:
            continue
        g3, topo = result
        if g3.op_total() < 2:
            continue
        with pytest.raises(ValueError):
            draw_necessary3(rng, g3, topo, g3.op_total() - 1)
        return
    pytest.fail("never found a pipeline with op >= 2")


def test_necessary3_infeasible_target_returns_none():
    # A single-edge structure gives a one-parameter graph whose only
    # parameter can carry one op at most (nothing earlier to depend on).
    structure = draw_structure(Stream.for_problem(31, 0), 1, 2, 1, 1)
    g2 = draw_necessary1(Stream.for_problem(31, 1), structure, 1, 1)
    g3, topo = draw_necessary2(Stream.for_problem(31, 2), g2)
    assert draw_necessary3(Stream.for_problem(31, 3), g3, topo, 5) is None


# ---------------------------------------------------------------------------
# stage 5: padding with unnecessary parameters


def full_pipeline(trial, py_rng):
    rng, structure, g2, result = pipeline_to_necessary2(trial, py_rng)
    if result is None:
        return None
    g3, topo = result
    s = g3.op_total() + py_rng.randint(0, 4)
    gnece = draw_necessary3(rng, g3, topo, s)
    if gnece is None:
        return None
    return rng, structure, topo, s, gnece


def test_unnecessary_postconditions():
    py_rng = random.Random(23)
    done = 0
    for trial in range(300):
        made = full_pipeline(trial, py_rng)
        if made is None:
            continue
        rng, structure, topo, s, gnece = made
        g = draw_unnecessary(rng, structure, gnece)
        done += 1
        for key in structure.instance_keys():
            assert g.has(key), "every structure edge must appear"
        assert oracle_is_dag(g.deps)
        assert_closures_complete(g)
        for key in g.instance_params():
            assert len(g.deps[key]) >= 1
        # the necessary cone is exactly the original topo set, and padding
        # never rewired it
        query = topo[-1]
        assert oracle_ancestors(g.deps, query) == set(topo)
        for key in topo:
            assert g.deps[key] == gnece.deps[key]
        assert sum(max(1, len(g.deps[k]) - 1) for k in topo) == s
    assert done >= 120


# ---------------------------------------------------------------------------
# the composed draw


def test_draw_all_postconditions_medium():
    for index in range(150):
        rng = Stream.for_problem(1009, index)
        bundle = draw_all(rng, op_max=15, ip_max=20)
        assert 1 <= bundle.op <= 15
        assert bundle.ip <= 20
        assert bundle.query == bundle.topo[-1]
        assert oracle_topo_ok(bundle.topo, bundle.graph.deps)
        assert oracle_is_dag(bundle.graph.deps)
        assert oracle_ancestors(bundle.graph.deps, bundle.query) \
            == set(bundle.topo)
        assert sum(max(1, len(bundle.graph.deps[k]) - 1)
                   for k in bundle.topo) == bundle.op
        assert semantics.necessary_set(bundle.graph, bundle.query) \
            == bundle.necessary


@pytest.mark.parametrize("op_max,ip_max", [(15, 20), (21, 28)])
def test_draw_all_force_hits_exact_op(op_max, ip_max):
    for index in range(25):
        rng = Stream.for_problem(2003, op_max, index)
        bundle = draw_all(rng, op_max=op_max, ip_max=ip_max, force=True)
        assert bundle.op == op_max
        assert sum(max(1, len(bundle.graph.deps[k]) - 1)
                   for k in bundle.topo) == op_max


def test_draw_all_is_deterministic():
    first = draw_all(Stream.for_problem(77, 5), op_max=12, ip_max=16)
    again = draw_all(Stream.for_problem(77, 5), op_max=12, ip_max=16)
    assert first.structure == again.structure
    assert first.graph.deps == again.graph.deps
    assert first.topo == again.topo
    assert first.query == again.query
    other = draw_all(Stream.for_problem(77, 6), op_max=12, ip_max=16)
    assert (first.graph.deps != other.graph.deps
            or first.topo != other.topo)


def test_draw_all_rejects_bad_limits():
    with pytest.raises(ValueError):
        draw_all(Stream.for_problem(1, 1), op_max=0, ip_max=10)
    with pytest.raises(ValueError):
        draw_all(Stream.for_problem(1, 1), op_max=5, ip_max=1)


def test_draw_all_raises_when_budget_exhausted():
    with pytest.raises(GenerationError):
        # force an op count no graph at this size can reach before the
        # restart budget runs out
        draw_all(Stream.for_problem(1, 2), op_max=99, ip_max=2,
                 force=True, max_restarts=30)
