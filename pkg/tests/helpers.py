"""Shared test utilities: word enumeration, a reference NFA, random inputs."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

from linlang import LinearAutomaton, LinearGrammar, validate_automaton, validate_grammar
from linlang.automaton import LAMBDA

DATA = Path(__file__).resolve().parent.parent / "src" / "linlang" / "corpus" / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


def all_words(alphabet: str, max_len: int) -> list[str]:
    return ["".join(t)
            for n in range(max_len + 1)
            for t in itertools.product(sorted(alphabet), repeat=n)]


def by_length(words) -> list[str]:
    return sorted(set(words), key=lambda w: (len(w), w))


class RefNfa:
    """Independent one-head NFA evaluator (plain subset stepping).

    Used to cross-check automata whose right class is empty; shares no code
    with the package.
    """

    def __init__(self, delta: dict[tuple[str, str], set[str]],
                 initial: set[str], final: set[str]):
        self.delta = delta
        self.initial = initial
        self.final = final

    def _eps_closure(self, states: set[str]) -> set[str]:
        todo = list(states)
        out = set(states)
        while todo:
            q = todo.pop()
            for t in self.delta.get((q, ""), set()):
                if t not in out:
                    out.add(t)
                    todo.append(t)
        return out

    def accepts(self, word: str) -> bool:
        cur = self._eps_closure(set(self.initial))
        for ch in word:
            nxt: set[str] = set()
            for q in cur:
                nxt |= self.delta.get((q, ch), set())
            cur = self._eps_closure(nxt)
        return bool(cur & self.final)


def random_grammar(rng: random.Random) -> LinearGrammar:
    variables = ["S", "A", "B", "C"][: rng.randint(1, 4)]
    terminals = ["a", "b"][: rng.randint(1, 2)]
    productions = []
    for _ in range(rng.randint(1, 6)):
        head = rng.choice(variables)
        body_len = rng.randint(0, 4)
        body = [rng.choice(terminals) for _ in range(body_len)]
        if body_len and rng.random() < 0.7:
            body[rng.randrange(body_len)] = rng.choice(variables)
        productions.append((head, body))
    return validate_grammar(variables=variables, terminals=terminals,
                            start="S", productions=productions)


def random_automaton(rng: random.Random, allow_lambda: bool = True) -> LinearAutomaton:
    n = rng.randint(1, 4)
    states = [f"s{i}" for i in range(n)]
    left = {q for q in states if rng.random() < 0.5}
    right = set(states) - left
    alphabet = ["a", "b"][: rng.randint(1, 2)]
    delta: dict[tuple[str, str], set[str]] = {}
    for q in states:
        for a in alphabet:
            if rng.random() < 0.6:
                targets = {t for t in states if rng.random() < 0.4}
                if targets:
                    delta[(q, a)] = targets
        if allow_lambda and rng.random() < 0.15:
            targets = {t for t in states if rng.random() < 0.3}
            if targets:
                delta[(q, LAMBDA)] = targets
    initial = {q for q in states if rng.random() < 0.5} or {states[0]}
    final = {q for q in states if rng.random() < 0.4}
    return validate_automaton(left=left, right=right, alphabet=alphabet,
                              delta=delta, initial=initial, final=final)
