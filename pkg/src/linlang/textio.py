"""Text formats for grammars and automata, plus DOT export.

Both formats are line-based, whitespace-tokenized, UTF-8 with LF newlines.
``eps`` denotes the empty string everywhere; ``#`` starts a comment.  The
serializers emit a canonical form: parsing then serializing any valid file
reproduces the serializer's bytes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import LAMBDA, LinearAutomaton, validate_automaton
from .errors import (
    ClassOverlap,
    DuplicateSymbol,
    InvalidIdentifier,
    NotLinear,
    ParseError,
    StartNotDeclared,
    UnknownState,
    UnknownSymbol,
)
from .grammar import LinearGrammar, validate_grammar
from .naming import EPS, NAME_RE


@dataclass(frozen=True)
class SourceSpan:
    """1-based line and column of the token a diagnostic points at."""

    line: int
    column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


def _token_lines(text: str) -> list[list[tuple[str, SourceSpan]]]:
    lines = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            toks.append((tok, SourceSpan(lineno, col + 1)))
            col += len(tok)
        if toks:
            lines.append(toks)
    return lines


def _check_token_name(tok: str, span: SourceSpan, role: str) -> str:
    if not NAME_RE.match(tok) or tok == EPS:
        raise InvalidIdentifier(f"invalid {role} name {tok!r}", span=span)
    return tok


# --- grammar format ---

def parse_grammar(text: str) -> LinearGrammar:
    """Parse the grammar format; diagnostics carry a source span."""
    lines = _token_lines(text)
    if not lines or lines[0][0][0] != "grammar" or len(lines[0]) != 1:
        span = lines[0][0][1] if lines else SourceSpan(1, 1)
        raise ParseError("expected a lone 'grammar' header line", span=span)
    start: tuple[str, SourceSpan] | None = None
    decls: dict[str, tuple[str, SourceSpan]] = {}
    order: dict[str, list[str]] = {"terminals": [], "variables": []}
    raw_prods: list[tuple[str, SourceSpan, list[list[tuple[str, SourceSpan]]]]] = []
    for toks in lines[1:]:
        word, span = toks[0]
        if len(toks) >= 2 and toks[1][0] == "->":
            # production lines win over directives, so directive words stay
            # usable as symbol names
            alts: list[list[tuple[str, SourceSpan]]] = [[]]
            for tok, tspan in toks[2:]:
                if tok == "|":
                    alts.append([])
                else:
                    alts[-1].append((tok, tspan))
            for alt in alts:
                if not alt:
                    raise ParseError("empty production alternative", span=span)
            raw_prods.append((word, span, alts))
        elif word == "start":
            if len(toks) != 2:
                raise ParseError("'start' takes exactly one variable", span=span)
            if start is not None:
                raise ParseError("duplicate 'start' directive", span=span)
            start = (toks[1][0], toks[1][1])
        elif word in ("terminals", "variables"):
            role = word[:-1]
            for name, nspan in toks[1:]:
                _check_token_name(name, nspan, role)
                if name in decls:
                    raise DuplicateSymbol(f"{name!r} declared twice", span=nspan)
                decls[name] = (role, nspan)
                order[word].append(name)
        else:
            raise ParseError(f"expected a directive or production, got {word!r}",
                             span=span)
    if start is None:
        raise StartNotDeclared("no 'start' directive", span=SourceSpan(1, 1))
    sname, sspan = start
    if decls.get(sname, ("",))[0] != "variable":
        raise StartNotDeclared(f"start {sname!r} is not a declared variable",
                               span=sspan)
    productions: list[tuple[str, list[str]]] = []
    for head, hspan, alts in raw_prods:
        if decls.get(head, ("",))[0] != "variable":
            raise UnknownSymbol(f"production head {head!r} is not a declared variable",
                                span=hspan)
        for alt in alts:
            if len(alt) == 1 and alt[0][0] == EPS:
                productions.append((head, []))
                continue
            body = []
            nvars = 0
            for tok, tspan in alt:
                if tok == EPS:
                    raise ParseError(f"{EPS!r} cannot appear inside a body",
                                     span=tspan)
                if tok not in decls:
                    raise UnknownSymbol(f"undeclared symbol {tok!r}", span=tspan)
                if decls[tok][0] == "variable":
                    nvars += 1
                    if nvars > 1:
                        raise NotLinear("more than one variable in a body",
                                        span=tspan)
                body.append(tok)
            productions.append((head, body))
    return validate_grammar(variables=order["variables"],
                            terminals=order["terminals"],
                            start=sname, productions=productions)


def serialize_grammar(g: LinearGrammar) -> str:
    """Canonical text: fixed section order, sorted symbols and productions."""
    out = ["grammar", f"start {g.start.name}"]
    out.append(" ".join(["terminals"] + sorted(t.name for t in g.terminals)).rstrip())
    out.append(" ".join(["variables"] + [v.name for v in g.sorted_variables()]))
    for p in g.sorted_productions():
        rhs = " ".join(s.name for s in p.body) if p.body else EPS
        out.append(f"{p.head.name} -> {rhs}")
    return "\n".join(out) + "\n"


# --- automaton format ---

_AUTO_DIRECTIVES = ("alphabet", "left", "right", "initial", "final")


def parse_automaton(text: str) -> LinearAutomaton:
    """Parse the automaton format; diagnostics carry a source span."""
    lines = _token_lines(text)
    if not lines or lines[0][0][0] != "automaton" or len(lines[0]) != 1:
        span = lines[0][0][1] if lines else SourceSpan(1, 1)
        raise ParseError("expected a lone 'automaton' header line", span=span)
    pools: dict[str, list[str]] = {d: [] for d in _AUTO_DIRECTIVES}
    spans: dict[str, SourceSpan] = {}
    raw_trans: list[tuple] = []
    for toks in lines[1:]:
        word, span = toks[0]
        if len(toks) >= 3 and toks[2][0] == "->":
            # transition lines win over directives (see parse_grammar)
            if len(toks) < 4:
                raise ParseError("transition needs at least one target state",
                                 span=span)
            raw_trans.append((toks[0], toks[1], toks[3:]))
        elif word in _AUTO_DIRECTIVES:
            role = "alphabet symbol" if word == "alphabet" else "state"
            for name, nspan in toks[1:]:
                _check_token_name(name, nspan, role)
                if name not in pools[word]:
                    pools[word].append(name)
                    spans.setdefault(name, nspan)
        else:
            raise ParseError(f"expected a directive or transition, got {word!r}",
                             span=span)
    both = set(pools["left"]) & set(pools["right"])
    if both:
        name = sorted(both)[0]
        raise ClassOverlap(f"state {name!r} declared in both classes",
                           span=spans[name])
    states = set(pools["left"]) | set(pools["right"])
    for a, aspan in ((n, spans[n]) for n in pools["alphabet"]):
        if len(a) != 1:
            raise InvalidIdentifier(
                f"alphabet symbol {a!r} must be a single character", span=aspan)
    for what in ("initial", "final"):
        for q in pools[what]:
            if q not in states:
                raise UnknownState(f"{what} state {q!r} is not declared",
                                   span=spans[q])
    delta: dict[tuple[str, str], set[str]] = {}
    for (src, sspan), (sym, symspan), targets in raw_trans:
        if src not in states:
            raise UnknownState(f"undeclared state {src!r}", span=sspan)
        if sym == EPS:
            sym = LAMBDA
        elif sym not in pools["alphabet"]:
            raise UnknownSymbol(f"undeclared symbol {sym!r}", span=symspan)
        cell = delta.setdefault((src, sym), set())
        for tgt, tspan in targets:
            if tgt not in states:
                raise UnknownState(f"undeclared state {tgt!r}", span=tspan)
            cell.add(tgt)
    return validate_automaton(left=pools["left"], right=pools["right"],
                              alphabet=pools["alphabet"], delta=delta,
                              initial=pools["initial"], final=pools["final"])


def serialize_automaton(m: LinearAutomaton) -> str:
    """Canonical text: sorted directives, one transition line per cell."""
    out = ["automaton"]
    out.append(" ".join(["alphabet"] + sorted(m.alphabet)).rstrip())
    out.append(" ".join(["left"] + sorted(m.left_states)).rstrip())
    out.append(" ".join(["right"] + sorted(m.right_states)).rstrip())
    out.append(" ".join(["initial"] + sorted(m.initial)).rstrip())
    out.append(" ".join(["final"] + sorted(m.final)).rstrip())
    for q, a, targets in m.transitions():
        sym = EPS if a == LAMBDA else a
        out.append(f"{q} {sym} -> " + " ".join(sorted(targets)))
    return "\n".join(out) + "\n"


# --- DOT export ---

def to_dot(m: LinearAutomaton) -> str:
    """Graphviz text: circles for left states, boxes for right states,
    double borders on accepting states, point-node arrows into start states.
    """
    lines = ["digraph {", "  rankdir=LR;"]
    for q in sorted(m.initial):
        lines.append(f"  __start_{q} [shape=point, style=invis];")
    for q in sorted(m.states):
        if q in m.left_states:
            shape = "doublecircle" if q in m.final else "circle"
            lines.append(f"  {q} [shape={shape}];")
        else:
            extra = ", peripheries=2" if q in m.final else ""
            lines.append(f"  {q} [shape=box{extra}];")
    for q in sorted(m.initial):
        lines.append(f"  __start_{q} -> {q};")
    for q, a, targets in m.transitions():
        label = EPS if a == LAMBDA else a
        for t in sorted(targets):
            lines.append(f'  {q} -> {t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
