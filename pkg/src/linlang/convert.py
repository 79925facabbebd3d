"""Constructions between linear grammars and two-head linear automata."""

from __future__ import annotations

from .automaton import LAMBDA, LinearAutomaton, is_even, validate_automaton
from .errors import NotDeterministicLinear, NotEven, NotEvenLinear
from .grammar import (
    LinearGrammar,
    Production,
    Symbol,
    SymbolKind,
    classify_variable,
    VariableClass,
    is_deterministic_linear,
    is_even_linear,
    to_even_normal_form,
    to_slnf,
    validate_grammar,
    variable,
)
from .naming import fresh_name


def _is_read_body(body: tuple[Symbol, ...]) -> bool:
    return (len(body) == 2
            and SymbolKind.TERMINAL in (body[0].kind, body[1].kind)
            and SymbolKind.VARIABLE in (body[0].kind, body[1].kind))


def _slnf_to_nla(g: LinearGrammar, sink_side: str) -> LinearAutomaton:
    """Core grammar-to-automaton build; ``g`` must already be in strong form.

    One state per variable plus a fresh final sink.  A variable reads from
    the left when it rewrites as terminal-then-variable, from the right when
    variable-then-terminal, and sits on the left by convention otherwise.
    The sink performs no reads, so its side is semantically inert; the even
    pipeline puts it on the right so the transition diagram stays bipartite.
    """
    names = {v.name for v in g.variables}
    sink = fresh_name("sink", names | {t.name for t in g.terminals})
    left: set[str] = set()
    right: set[str] = set()
    for v in g.variables:
        cls = None
        for p in g.productions_of(v):
            if _is_read_body(p.body):
                cls = "left" if p.body[0].kind is SymbolKind.TERMINAL else "right"
                break
        (left if cls in (None, "left") else right).add(v.name)
    (left if sink_side == "left" else right).add(sink)
    delta: dict[tuple[str, str], set[str]] = {}
    final = {sink}
    for p in g.productions:
        body = p.body
        if not body:
            final.add(p.head.name)
        elif len(body) == 1 and body[0].kind is SymbolKind.VARIABLE:
            delta.setdefault((p.head.name, LAMBDA), set()).add(body[0].name)
        elif len(body) == 1:
            delta.setdefault((p.head.name, body[0].name), set()).add(sink)
        else:
            t = body[0] if body[0].kind is SymbolKind.TERMINAL else body[1]
            v = body[1] if body[0].kind is SymbolKind.TERMINAL else body[0]
            delta.setdefault((p.head.name, t.name), set()).add(v.name)
    return validate_automaton(left=left, right=right,
                              alphabet={t.name for t in g.terminals},
                              delta=delta, initial={g.start.name}, final=final)


def grammar_to_nla(g: LinearGrammar) -> LinearAutomaton:
    """Automaton accepting exactly the grammar's language (may use lambda moves)."""
    return _slnf_to_nla(to_slnf(g), "left")


def nla_to_grammar(m: LinearAutomaton) -> LinearGrammar:
    """Grammar generating exactly the automaton's language.

    One variable per state: left-state reads become terminal-first bodies,
    right-state reads terminal-last bodies, lambda moves unit productions,
    and final states erase.  Several start states are merged by copying
    their productions onto a fresh start variable.
    """
    alphabet = sorted(m.alphabet)
    used = set(alphabet)
    var_of: dict[str, str] = {}
    for q in sorted(m.states):
        name = fresh_name(q, used)
        used.add(name)
        var_of[q] = name
    prods: list[tuple[str, list[str]]] = []
    for q, a, targets in m.transitions():
        for t in sorted(targets):
            if a == LAMBDA:
                prods.append((var_of[q], [var_of[t]]))
            elif q in m.left_states:
                prods.append((var_of[q], [a, var_of[t]]))
            else:
                prods.append((var_of[q], [var_of[t], a]))
    for q in sorted(m.final):
        prods.append((var_of[q], []))
    variables = [var_of[q] for q in sorted(m.states)]
    if len(m.initial) == 1:
        start = var_of[next(iter(m.initial))]
    else:
        start = fresh_name("S", used)
        variables.append(start)
        initial_vars = {var_of[q] for q in m.initial}
        prods += [(start, list(body)) for head, body in prods if head in initial_vars]
    return validate_grammar(variables=variables, terminals=alphabet,
                            start=start, productions=prods)


def det_grammar_to_dla(g: LinearGrammar) -> LinearAutomaton:
    """Deterministic automaton for a deterministic linear grammar."""
    if not is_deterministic_linear(g):
        raise NotDeterministicLinear("grammar fails the deterministic-linear condition")
    gh = to_slnf(g)
    for p in gh.productions:
        # The determinism-preserving pipeline cannot emit unit or bare-terminal
        # bodies from a deterministic grammar; guard rather than assume.
        assert not p.body or _is_read_body(p.body), f"unexpected body shape: {p}"
    left: set[str] = set()
    right: set[str] = set()
    for v in gh.variables:
        cls = classify_variable(gh, v)
        (right if cls is VariableClass.LEFT_LINEAR else left).add(v.name)
    delta: dict[tuple[str, str], set[str]] = {}
    final = set()
    for p in gh.productions:
        if not p.body:
            final.add(p.head.name)
            continue
        t = p.body[0] if p.body[0].kind is SymbolKind.TERMINAL else p.body[1]
        v = p.body[1] if p.body[0].kind is SymbolKind.TERMINAL else p.body[0]
        delta.setdefault((p.head.name, t.name), set()).add(v.name)
    m = validate_automaton(left=left, right=right,
                           alphabet={t.name for t in gh.terminals},
                           delta=delta, initial={gh.start.name}, final=final)
    assert all(len(ts) == 1 for ts in m.delta.values())
    return m


def even_grammar_to_nla(g: LinearGrammar) -> LinearAutomaton:
    """Even automaton for an even linear grammar (strict class alternation)."""
    if not is_even_linear(g):
        raise NotEvenLinear("grammar has a body with unequal terminal flanks")
    nf = to_even_normal_form(g)
    used = nf.symbol_names()
    variables = set(nf.variables)
    prods: list[Production] = []
    for p in nf.sorted_productions():
        if len(p.body) == 3:
            c = variable(fresh_name(p.head.name, used))
            used.add(c.name)
            variables.add(c)
            prods.append(Production(p.head, (p.body[0], c)))
            prods.append(Production(c, (p.body[1], p.body[2])))
        else:
            prods.append(p)
    split = LinearGrammar(frozenset(variables), nf.terminals, nf.start, frozenset(prods))
    return _slnf_to_nla(split, "right")


def even_nla_to_grammar(m: LinearAutomaton) -> LinearGrammar:
    """Even-normal-form grammar for an even automaton.

    Builds the one-variable-per-state grammar, then folds each pair of
    consecutive reads into a single both-flanks production; erasing
    productions of final states are retained.
    """
    if not is_even(m):
        raise NotEven("automaton has a transition inside one state class")
    mid = nla_to_grammar(m)
    bodies: dict[Symbol, list[tuple[Symbol, ...]]] = {v: [] for v in mid.variables}
    for p in mid.productions:
        bodies[p.head].append(p.body)
    prods: set[Production] = set()
    for p in mid.productions:
        body = p.body
        if not body:
            prods.add(p)
        elif body[0].kind is SymbolKind.TERMINAL:
            for x in bodies[body[1]]:
                prods.add(Production(p.head, (body[0],) + x))
        else:
            for x in bodies[body[0]]:
                prods.add(Production(p.head, x + (body[1],)))
    return LinearGrammar(mid.variables, mid.terminals, mid.start, frozenset(prods))
