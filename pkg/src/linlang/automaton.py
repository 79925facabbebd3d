"""Two-head linear automata: simulation, lambda elimination, determinization.

States come in two disjoint classes: left-reading states consume the leftmost
remaining input symbol, right-reading states the rightmost.  The transition
map sends (state, symbol-or-lambda) to a set of states; lambda moves change
state without reading.  A word is accepted when some run starting in a start
state consumes the whole word and ends in a final state.

Everything is an immutable value and every operation is pure; the search
structures are operation-local, so concurrent use is safe.
"""

from __future__ import annotations

import enum
import warnings
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    ClassOverlap,
    EmptyInitialSetWarning,
    HasLambdaMoves,
    InvalidIdentifier,
    NotDeterminizable,
    SymbolNotInAlphabet,
    UnknownState,
    UnknownSymbol,
)
from .naming import check_name, fresh_name

#: Internal marker for the empty-string move; rendered as ``eps`` in all I/O.
LAMBDA = ""


class StateClass(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class LinearAutomaton:
    left_states: frozenset[str]
    right_states: frozenset[str]
    alphabet: frozenset[str]
    delta: dict[tuple[str, str], frozenset[str]]
    initial: frozenset[str]
    final: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "left_states", frozenset(self.left_states))
        object.__setattr__(self, "right_states", frozenset(self.right_states))
        object.__setattr__(self, "alphabet", frozenset(self.alphabet))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        object.__setattr__(self, "delta", {
            k: frozenset(v) for k, v in self.delta.items() if v
        })
        overlap = self.left_states & self.right_states
        if overlap:
            raise ClassOverlap(f"states in both classes: {sorted(overlap)}")
        for q in self.left_states | self.right_states:
            check_name(q, "state")
        for a in self.alphabet:
            check_name(a, "alphabet symbol")
            if len(a) != 1:
                raise InvalidIdentifier(
                    f"alphabet symbol {a!r} must be a single character")
        states = self.states
        for pool, what in ((self.initial, "initial"), (self.final, "final")):
            for q in pool:
                if q not in states:
                    raise UnknownState(f"{what} state {q!r} is not declared")
        for (q, a), targets in self.delta.items():
            if q not in states:
                raise UnknownState(f"transition from undeclared state {q!r}")
            if a != LAMBDA and a not in self.alphabet:
                raise UnknownSymbol(f"transition on undeclared symbol {a!r}")
            for t in targets:
                if t not in states:
                    raise UnknownState(f"transition into undeclared state {t!r}")

    @property
    def states(self) -> frozenset[str]:
        return self.left_states | self.right_states

    @property
    def has_lambda_moves(self) -> bool:
        return any(a == LAMBDA for (_, a) in self.delta)

    def class_of(self, q: str) -> StateClass:
        if q in self.left_states:
            return StateClass.LEFT
        if q in self.right_states:
            return StateClass.RIGHT
        raise UnknownState(f"no state named {q!r}")

    def targets(self, q: str, a: str) -> frozenset[str]:
        return self.delta.get((q, a), frozenset())

    def transitions(self) -> list[tuple[str, str, frozenset[str]]]:
        """Transition entries sorted by state, then symbol with lambda last."""
        return sorted(((q, a, ts) for (q, a), ts in self.delta.items()),
                      key=lambda e: (e[0], e[1] == LAMBDA, e[1]))


def validate_automaton(*, left: Iterable[str], right: Iterable[str],
                       alphabet: Iterable[str],
                       delta: Mapping[tuple[str, str], Iterable[str]],
                       initial: Iterable[str], final: Iterable[str],
                       ) -> LinearAutomaton:
    """Build a LinearAutomaton, warning when the start set is empty."""
    m = LinearAutomaton(frozenset(left), frozenset(right), frozenset(alphabet),
                        {k: frozenset(v) for k, v in delta.items()},
                        frozenset(initial), frozenset(final))
    if not m.initial:
        warnings.warn("automaton has no start states and accepts nothing",
                      EmptyInitialSetWarning, stacklevel=2)
    return m


class InstantaneousDescription(NamedTuple):
    """Current state plus the remaining substring input[lo:hi)."""

    state: str
    lo: int
    hi: int

    def remaining(self, word: str) -> str:
        return word[self.lo:self.hi]


def _check_word(m: LinearAutomaton, word: str) -> None:
    for ch in word:
        if ch not in m.alphabet:
            raise SymbolNotInAlphabet(f"symbol {ch!r} is not in the alphabet")


def step(m: LinearAutomaton, ident: InstantaneousDescription, word: str,
         ) -> set[InstantaneousDescription]:
    """All one-move successors of an instantaneous description."""
    q, lo, hi = ident
    out: set[InstantaneousDescription] = set()
    if lo < hi:
        if q in m.left_states:
            for t in m.targets(q, word[lo]):
                out.add(InstantaneousDescription(t, lo + 1, hi))
        elif q in m.right_states:
            for t in m.targets(q, word[hi - 1]):
                out.add(InstantaneousDescription(t, lo, hi - 1))
    for t in m.targets(q, LAMBDA):
        out.add(InstantaneousDescription(t, lo, hi))
    return out


def accepts(m: LinearAutomaton, word: str) -> bool:
    """Search the finite description space for an accepting configuration."""
    _check_word(m, word)
    frontier = deque(InstantaneousDescription(q, 0, len(word)) for q in sorted(m.initial))
    seen = set(frontier)
    while frontier:
        ident = frontier.popleft()
        if ident.lo >= ident.hi and ident.state in m.final:
            return True
        for nxt in step(m, ident, word):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return False


def _ordered_successors(m: LinearAutomaton, ident: InstantaneousDescription,
                        word: str) -> list[InstantaneousDescription]:
    # Reading moves first, lambda moves last, targets in name order.
    q, lo, hi = ident
    out: list[InstantaneousDescription] = []
    if lo < hi:
        if q in m.left_states:
            out += [InstantaneousDescription(t, lo + 1, hi)
                    for t in sorted(m.targets(q, word[lo]))]
        elif q in m.right_states:
            out += [InstantaneousDescription(t, lo, hi - 1)
                    for t in sorted(m.targets(q, word[hi - 1]))]
    out += [InstantaneousDescription(t, lo, hi) for t in sorted(m.targets(q, LAMBDA))]
    return out


def trace(m: LinearAutomaton, word: str) -> list[tuple[str, str]] | None:
    """One accepting run as (state, remaining-substring) pairs, or None.

    Depth-first with a fixed tie-break (reading moves before lambda moves,
    target states in name order), so the returned run is reproducible.
    """
    _check_word(m, word)
    starts = [InstantaneousDescription(q, 0, len(word)) for q in sorted(m.initial)]
    stack: list[tuple[InstantaneousDescription, InstantaneousDescription | None]]
    stack = [(ident, None) for ident in reversed(starts)]
    parent: dict[InstantaneousDescription, InstantaneousDescription | None] = {}
    while stack:
        ident, via = stack.pop()
        if ident in parent:
            continue
        parent[ident] = via
        if ident.lo >= ident.hi and ident.state in m.final:
            path = []
            node: InstantaneousDescription | None = ident
            while node is not None:
                path.append((node.state, node.remaining(word)))
                node = parent[node]
            return path[::-1]
        for nxt in reversed(_ordered_successors(m, ident, word)):
            if nxt not in parent:
                stack.append((nxt, ident))
    return None


def lambda_closure(m: LinearAutomaton, q: str) -> frozenset[str]:
    """States reachable from ``q`` by lambda moves alone (including ``q``)."""
    if q not in m.states:
        raise UnknownState(f"no state named {q!r}")
    closure = {q}
    frontier = deque([q])
    while frontier:
        cur = frontier.popleft()
        for t in m.targets(cur, LAMBDA):
            if t not in closure:
                closure.add(t)
                frontier.append(t)
    return frozenset(closure)


def eliminate_lambda(m: LinearAutomaton) -> LinearAutomaton:
    """Equivalent automaton with no lambda moves.

    Closures are folded into transition targets and into the start set, never
    into sources: the reading direction belongs to the state performing the
    read, and a lambda move may cross between the two classes.
    """
    closures = {q: lambda_closure(m, q) for q in m.states}
    delta: dict[tuple[str, str], frozenset[str]] = {}
    for (q, a), targets in m.delta.items():
        if a == LAMBDA:
            continue
        folded: set[str] = set()
        for t in targets:
            folded |= closures[t]
        delta[(q, a)] = frozenset(folded)
    initial: set[str] = set()
    for q in m.initial:
        initial |= closures[q]
    return LinearAutomaton(m.left_states, m.right_states, m.alphabet,
                           delta, frozenset(initial), m.final)


def is_deterministic(m: LinearAutomaton) -> bool:
    """No lambda moves and at most one target per state and symbol."""
    return not m.has_lambda_moves and all(len(ts) <= 1 for ts in m.delta.values())


def _require_lambda_free(m: LinearAutomaton, op: str) -> None:
    if m.has_lambda_moves:
        raise HasLambdaMoves(f"{op} is defined only for lambda-free automata")


def is_even(m: LinearAutomaton) -> bool:
    """True when every transition crosses between the two state classes."""
    _require_lambda_free(m, "is_even")
    for (q, _), targets in m.delta.items():
        opposite = m.right_states if q in m.left_states else m.left_states
        if not targets <= opposite:
            return False
    return True


def ndeg(m: LinearAutomaton) -> int:
    """Total transition-target count minus the number of non-empty cells."""
    _require_lambda_free(m, "ndeg")
    return sum(len(ts) - 1 for ts in m.delta.values())


class Homogeneity(enum.Enum):
    ALL_LEFT = "all-left"
    ALL_RIGHT = "all-right"
    MIXED = "mixed"


@dataclass(frozen=True)
class SubsetState:
    members: frozenset[str]
    homogeneity: Homogeneity


def _homogeneity(m: LinearAutomaton, members: frozenset[str]) -> Homogeneity:
    if members <= m.left_states:
        return Homogeneity.ALL_LEFT
    if members <= m.right_states:
        return Homogeneity.ALL_RIGHT
    return Homogeneity.MIXED


def _subset_closure(m: LinearAutomaton) -> list[frozenset[str]]:
    # Reachable subsets in breadth-first order; the empty union is skipped,
    # matching a partial transition function on the determinized side.
    _require_lambda_free(m, "subset construction")
    order: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()
    frontier: deque[frozenset[str]] = deque()
    for q in sorted(m.initial):
        x = frozenset({q})
        if x not in seen:
            seen.add(x)
            order.append(x)
            frontier.append(x)
    while frontier:
        x = frontier.popleft()
        for a in sorted(m.alphabet):
            union: set[str] = set()
            for q in x:
                union |= m.targets(q, a)
            y = frozenset(union)
            if y and y not in seen:
                seen.add(y)
                order.append(y)
                frontier.append(y)
    return order


def subset_states(m: LinearAutomaton) -> set[SubsetState]:
    """The reachable subset-state family, each tagged with its homogeneity."""
    return {SubsetState(x, _homogeneity(m, x)) for x in _subset_closure(m)}


def is_determinizable(m: LinearAutomaton) -> bool:
    """True when no reachable subset mixes left and right states."""
    return all(_homogeneity(m, x) is not Homogeneity.MIXED
               for x in _subset_closure(m))


def determinize(m: LinearAutomaton) -> LinearAutomaton:
    """Subset construction over homogeneous subsets; start set kept as-is."""
    subsets = _subset_closure(m)
    mixed = [x for x in subsets if _homogeneity(m, x) is Homogeneity.MIXED]
    if mixed:
        worst = sorted(mixed[0])
        raise NotDeterminizable(f"subset mixes both classes: {worst}")
    names: dict[frozenset[str], str] = {}
    used: set[str] = set()
    for x in subsets:
        name = fresh_name("_".join(sorted(x)), used)
        used.add(name)
        names[x] = name
    left = {names[x] for x in subsets if _homogeneity(m, x) is Homogeneity.ALL_LEFT}
    right = {names[x] for x in subsets if _homogeneity(m, x) is Homogeneity.ALL_RIGHT}
    delta: dict[tuple[str, str], frozenset[str]] = {}
    for x in subsets:
        for a in sorted(m.alphabet):
            union: set[str] = set()
            for q in x:
                union |= m.targets(q, a)
            y = frozenset(union)
            if y:
                delta[(names[x], a)] = frozenset({names[y]})
    initial = {names[frozenset({q})] for q in m.initial}
    final = {names[x] for x in subsets if x & m.final}
    return LinearAutomaton(frozenset(left), frozenset(right), m.alphabet,
                           delta, frozenset(initial), frozenset(final))


def enumerate_accepted(m: LinearAutomaton, max_len: int) -> list[str]:
    """All accepted words of at most ``max_len`` symbols.

    Enumerates partial runs as (state, consumed-prefix, consumed-suffix)
    triples instead of filtering every word, so sparse languages come out
    fast; a visited set bounds the search.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    words: set[str] = set()
    start = [(q, "", "") for q in sorted(m.initial)]
    seen = set(start)
    frontier = deque(start)
    while frontier:
        q, prefix, suffix = frontier.popleft()
        if q in m.final:
            words.add(prefix + suffix)
        room = len(prefix) + len(suffix) < max_len
        if room:
            reads_left = q in m.left_states
            for a in sorted(m.alphabet):
                grown = (prefix + a, suffix) if reads_left else (prefix, a + suffix)
                for t in sorted(m.targets(q, a)):
                    node = (t, *grown)
                    if node not in seen:
                        seen.add(node)
                        frontier.append(node)
        for t in sorted(m.targets(q, LAMBDA)):
            node = (t, prefix, suffix)
            if node not in seen:
                seen.add(node)
                frontier.append(node)
    return sorted(words, key=lambda w: (len(w), w))


def class_swapped(m: LinearAutomaton) -> LinearAutomaton:
    """Same transitions with the two state classes exchanged.

    The result accepts exactly the reversals of the words ``m`` accepts.
    """
    return replace(m, left_states=m.right_states, right_states=m.left_states)
