"""English surface forms: problem sentences, the question, and the canonical
step-by-step solution.

The solution grammar (one step per parameter, in topological order):

    step    = "Define" name "as" letter ";" (clause ";")* so-clause "."
    clause  = letter "=" expr "=" nums "=" num          (one binary op)
    so      = "so" letter "=" num                       (bare constant)
            | "so" letter "=" letter "=" num            (copy)
            | "so" letter "=" expr "=" nums "=" num     (binary op)
    expr    = operand sym operand ;  nums = num sym num ;  sym = "+" | "-" | "*"
    operand = letter | num

Every step contributes exactly op(parameter) semicolons and draws exactly
op(parameter) fresh letters, so a whole solution uses op(G) of each -- the
semicolon count *is* the operation count.  Letters come from the 52 ASCII
letters and stay globally distinct within one solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphgen import DependencyGraph, ParamKey, abstract_terms, is_instance
from .rng import Stream
from .semantics import AGG_DIFFERENCE, COMB_ADD, OpSpec, mod_reduce
from .vocab import Scene

LETTER_POOL = ("abcdefghijklmnopqrstuvwxyz"
               "ABCDEFGHIJKLMNOPQRSTUVWXYZ")


class RenderError(RuntimeError):
    """A solution cannot be expressed in the canonical grammar."""


def param_name(scene: Scene, key: ParamKey) -> str:
    """Owner-possessive name: item's item for an instance parameter,
    item's category for an abstract one."""
    if is_instance(key):
        _, layer, parent, child = key
        return (f"{scene.layer_items[layer][parent]}'s "
                f"{scene.layer_items[layer + 1][child]}")
    _, layer, anchor, target = key
    return (f"{scene.layer_items[layer][anchor]}'s "
            f"{scene.category_names[target]}")


def _each(scene: Scene, key: ParamKey) -> str:
    return f"each {param_name(scene, key)}"


def gen_sentence(scene: Scene, key: ParamKey, spec: OpSpec) -> str:
    """One problem sentence assigning an instance parameter.

    A random constant prints first, joined to the operands by "more than"
    (addition) or "times as much as" (multiplication); two operands combine
    as a sum or a difference, three or more as a comma-separated sum.
    """
    parts = [f"The number of {_each(scene, key)} equals"]
    if spec.const is not None:
        parts.append(f" {spec.const}")
    if spec.combinator is not None:
        parts.append(" more than" if spec.combinator == COMB_ADD
                     else " times as much as")
    refs = [_each(scene, op) for op in spec.operands]
    if len(refs) == 1:
        parts.append(f" {refs[0]}")
    elif len(refs) == 2:
        kind = "difference" if spec.aggregator == AGG_DIFFERENCE else "sum"
        parts.append(f" the {kind} of {refs[0]} and {refs[1]}")
    elif len(refs) >= 3:
        parts.append(" the sum of " + ", ".join(refs[:-1]) + f" and {refs[-1]}")
    parts.append(".")
    return "".join(parts)


def render_question(scene: Scene, query: ParamKey) -> str:
    if is_instance(query):
        _, layer, parent, child = query
        owner = scene.layer_items[layer][parent]
        thing = scene.layer_items[layer + 1][child]
    else:
        _, layer, anchor, target = query
        owner = scene.layer_items[layer][anchor]
        thing = scene.category_names[target]
    return f"How many {thing} does {owner} have?"


@dataclass(frozen=True)
class RenderedSolution:
    text: str
    letters: dict  # ParamKey -> its defining letter
    sentence_ends: tuple[int, ...]  # offset just past each step's period
    answer: int


class _LetterPot:
    """Hands out globally distinct letters, uniformly from the unused ones."""

    def __init__(self, rng: Stream):
        self._rng = rng
        self._free = list(LETTER_POOL)

    def draw(self) -> str:
        if not self._free:
            raise RenderError("solution needs more than 52 variable names")
        return self._free.pop(self._rng.randbelow(len(self._free)))


def _operation_plan(key: ParamKey, graph: DependencyGraph,
                    spec: OpSpec | None, letters: dict, valuation: dict):
    """How one step decomposes into printed binary operations.

    Returns ("const", value) for a bare numeral, ("copy", lit) for a
    single-operand copy, or ("ops", seq) where seq lists (sym, a, b)
    operations in print order.  Operands are ("lit", token, value) for a
    letter or constant, or ("ref", i) for the result of the i-th operation
    in seq.  The last operation lands in the so-clause; earlier ones get
    fresh intermediate letters.
    """

    def lit(param: ParamKey) -> tuple:
        return ("lit", letters[param], valuation[param])

    def sum_chain(seq: list, terms: list) -> None:
        seq.append(("+", terms[0], terms[1]))
        for extra in terms[2:]:
            seq.append(("+", ("ref", len(seq) - 1), extra))

    if is_instance(key):
        ops = [lit(x) for x in spec.operands]
        seq: list = []
        if len(ops) == 2 and spec.aggregator == AGG_DIFFERENCE:
            seq.append(("-", ops[0], ops[1]))
        elif len(ops) >= 2:
            sum_chain(seq, ops)
        if spec.const is not None:
            if not ops:
                return ("const", spec.const)
            cpair = ("lit", str(spec.const), spec.const)
            sym = "+" if spec.combinator == COMB_ADD else "*"
            rhs = ops[0] if len(ops) == 1 else ("ref", len(seq) - 1)
            seq.append((sym, cpair, rhs))
        elif len(ops) == 1:
            return ("copy", ops[0])
        return ("ops", seq)

    terms = abstract_terms(graph.structure, key)
    if not terms:
        return ("const", 0)
    if len(terms[0]) == 1:  # total over a directly attached category
        singles = [lit(t[0]) for t in terms]
        if len(singles) == 1:
            return ("copy", singles[0])
        seq = []
        sum_chain(seq, singles)
        return ("ops", seq)
    # total over a deeper category: one product per child, then their sum
    seq = [("*", lit(t[0]), lit(t[1])) for t in terms]
    if len(seq) >= 2:
        sum_chain(seq, [("ref", i) for i in range(len(seq))])
    return ("ops", seq)


def _emit_step(key: ParamKey, graph: DependencyGraph, spec: OpSpec | None,
               letters: dict, valuation: dict, p: int, pot: _LetterPot,
               final: str) -> str:
    """The text after "as <letter>; " -- intermediate clauses and the
    so-clause, semicolon-joined, without the trailing period."""
    plan = _operation_plan(key, graph, spec, letters, valuation)
    expect = valuation[key]

    if plan[0] == "const":
        value = mod_reduce(plan[1], p)
        _confirm(value, expect, key)
        return f"so {final} = {value}"
    if plan[0] == "copy":
        _, tok, value = plan[1]
        _confirm(value, expect, key)
        return f"so {final} = {tok} = {value}"

    seq = plan[1]
    results: list[tuple[str, int]] = []
    clauses: list[str] = []
    for index, (sym, a, b) in enumerate(seq):
        a_tok, a_val = _resolve(a, results)
        b_tok, b_val = _resolve(b, results)
        if sym == "+":
            value = mod_reduce(a_val + b_val, p)
        elif sym == "-":
            value = mod_reduce(a_val - b_val, p)
        else:
            value = mod_reduce(a_val * b_val, p)
        last = index == len(seq) - 1
        name = final if last else pot.draw()
        body = (f"{name} = {a_tok} {sym} {b_tok}"
                f" = {a_val} {sym} {b_val} = {value}")
        clauses.append(f"so {body}" if last else body)
        results.append((name, value))
    _confirm(results[-1][1], expect, key)
    return "; ".join(clauses)


def _resolve(operand: tuple, results: list) -> tuple[str, int]:
    if operand[0] == "ref":
        return results[operand[1]]
    return operand[1], operand[2]


def _confirm(got: int, expect: int, key: ParamKey) -> None:
    if got != expect:
        raise RenderError(f"rendered value {got} != valuation {expect} "
                          f"for {key}")


def render_solution(rng: Stream, scene: Scene, graph: DependencyGraph,
                    opspecs: dict, topo, valuation: dict,
                    p: int) -> RenderedSolution:
    """The canonical chain of thought: one Define step per parameter in
    topological order, each decomposed into binary operations over fresh
    letters, closed by the answer sentence.

    Each step draws its defining letter first, then intermediates in the
    order they appear.  Every printed numeral is a reduced residue.
    """
    pot = _LetterPot(rng)
    letters: dict[ParamKey, str] = {}
    steps: list[str] = []
    ends: list[int] = []
    offset = 0

    for key in topo:
        final = pot.draw()
        letters[key] = final
        body = _emit_step(key, graph, opspecs.get(key), letters, valuation,
                          p, pot, final)
        step = f"Define {param_name(scene, key)} as {final}; {body}."
        if offset:
            offset += 1  # the joining space
        offset += len(step)
        ends.append(offset)
        steps.append(step)

    answer = valuation[topo[-1]]
    text = " ".join(steps) + f" Answer: {answer}."
    return RenderedSolution(text=text, letters=letters,
                            sentence_ends=tuple(ends), answer=answer)


@dataclass(frozen=True)
class AssembledText:
    """A problem laid out in one string, with the offsets probing needs."""
    text: str            # problem and question only (the model prompt)
    end_problem: int     # offset just past the last problem sentence
    end_question: int    # offset just past the question mark
    full: str            # prompt plus one space plus the solution
    solution_start: int  # offset of the first solution character in full


def assemble(sentences: list[str], question: str, solution: str,
             fmt: str) -> AssembledText:
    """Lay out problem sentences and question in the requested order
    ("pq" puts the question last, "qp" first) and append the solution."""
    problem = " ".join(sentences)
    if fmt == "pq":
        prompt = f"{problem} {question}"
        end_problem = len(problem)
        end_question = len(prompt)
    elif fmt == "qp":
        prompt = f"{question} {problem}"
        end_question = len(question)
        end_problem = len(prompt)
    else:
        raise ValueError(f"unknown format: {fmt!r}")
    full = f"{prompt} {solution}"
    return AssembledText(text=prompt, end_problem=end_problem,
                         end_question=end_question, full=full,
                         solution_start=len(prompt) + 1)
