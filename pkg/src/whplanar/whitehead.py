"""Cyclic presentations P_n(w), their Whitehead graphs, and word synthesis.

A word is read cyclically. Each adjacent letter pair ``u t`` gives one edge
joining the head vertex of ``u`` to the tail vertex of ``t``, where

    head(x_i) = v_i,    head(x_i^-1) = v'_i,
    tail(x_j) = v'_j,   tail(x_j^-1) = v_j,

and the Whitehead graph of P_n(w) is the union of these edges over the n
index shifts of w.
"""

from __future__ import annotations

import re
from collections import defaultdict, deque
from dataclasses import dataclass

from .errors import (
    EmptyQ,
    EmptyWord,
    IndexOutOfRange,
    NotRegularizable,
    SynthesisFailed,
    WordSyntaxError,
)
from .gamma import GammaSpec, canonicalize_gamma_loose, vertex_labels
from .graph import MultiGraph


@dataclass(frozen=True)
class Letter:
    generator: int
    sign: int

    def __str__(self) -> str:
        return f"x{self.generator}" + ("" if self.sign > 0 else "^-1")


@dataclass(frozen=True)
class CyclicPresentation:
    n: int
    word: tuple[Letter, ...]

    def __post_init__(self):
        if not self.word:
            raise EmptyWord("defining word must be non-empty")
        for letter in self.word:
            if not 0 <= letter.generator < self.n:
                raise IndexOutOfRange(f"generator x{letter.generator} needs index < {self.n}")
            if letter.sign not in (1, -1):
                raise ValueError("sign must be +1 or -1")

    def word_text(self) -> str:
        return " ".join(str(x) for x in self.word)

    def cyclic_pairs(self) -> list[tuple[Letter, Letter]]:
        w = self.word
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]

    def to_json(self) -> dict:
        return {"n": self.n, "word": self.word_text()}


_TOKEN = re.compile(r"x(\d+)(?:\^(-1|\d+))?")


def parse_word(n: int, text: str) -> CyclicPresentation:
    """Parse whitespace-separated tokens ``x<k>``, ``x<k>^-1`` or ``x<k>^<m>``.

    ``x<k>^<m>`` with m >= 1 expands to m copies; exponent 0 is rejected.
    """
    letters = []
    for tok in re.finditer(r"\S+", text):
        m = _TOKEN.fullmatch(tok.group())
        offset = len(text[: tok.start()].encode())
        if m is None:
            raise WordSyntaxError(f"bad token {tok.group()!r}", offset)
        gen = int(m.group(1))
        exp = m.group(2)
        if gen >= n:
            raise IndexOutOfRange(f"generator x{gen} needs index < {n}")
        if exp is None:
            letters.append(Letter(gen, 1))
        elif exp == "-1":
            letters.append(Letter(gen, -1))
        else:
            k = int(exp)
            if k == 0:
                raise WordSyntaxError("exponent 0 is not allowed", offset)
            letters.extend([Letter(gen, 1)] * k)
    if not letters:
        raise EmptyWord("defining word must be non-empty")
    return CyclicPresentation(n, tuple(letters))


def is_cyclically_reduced(p: CyclicPresentation) -> bool:
    return all(
        not (u.generator == t.generator and u.sign == -t.sign) for u, t in p.cyclic_pairs()
    )


def _head(x: Letter, n: int) -> int:
    return x.generator if x.sign > 0 else n + x.generator


def _tail(x: Letter, n: int) -> int:
    return n + x.generator if x.sign > 0 else x.generator


def pair_step(u: Letter, t: Letter, n: int) -> tuple[str, int]:
    """Which step set the pair ``u t`` contributes to, and the raw step."""
    i, j = u.generator, t.generator
    if u.sign > 0 and t.sign < 0:
        return "A", (j - i) % n
    if u.sign < 0 and t.sign > 0:
        return "B", (j - i) % n
    if u.sign > 0:
        return "Q", (j - i) % n
    return "Q", (i - j) % n


def whitehead_graph(p: CyclicPresentation) -> MultiGraph:
    """Whitehead graph with multiplicities: n edges per cyclic letter pair."""
    n = p.n
    edges = []
    for u, t in p.cyclic_pairs():
        h, tl = _head(u, n), _tail(t, n)
        for k in range(n):
            edges.append((_shift(h, k, n), _shift(tl, k, n)))
    return MultiGraph(2 * n, edges, vertex_labels(n))


def _shift(v: int, k: int, n: int) -> int:
    return (v + k) % n if v < n else n + (v - n + k) % n


def reduced_whitehead_spec(p: CyclicPresentation) -> GammaSpec:
    steps: dict[str, list[int]] = {"A": [], "B": [], "Q": []}
    for u, t in p.cyclic_pairs():
        kind, step = pair_step(u, t, p.n)
        steps[kind].append(step)
    return canonicalize_gamma_loose(p.n, steps["A"], steps["B"], steps["Q"])


@dataclass(frozen=True)
class MultiplicityPlan:
    """Edge multiplicities m_a, m_b, m_q of a regular graph over Gamma_n(A, B, Q)."""

    m_a: dict
    m_b: dict
    m_q: dict

    def balanced(self) -> bool:
        return sum(self.m_a.values()) == sum(self.m_b.values())

    def weighted_sum(self) -> int:
        return sum(k * m for plan in (self.m_a, self.m_b, self.m_q) for k, m in plan.items())

    def closes(self, n: int) -> bool:
        return self.weighted_sum() % n == 0

    def scaled(self, factor: int) -> "MultiplicityPlan":
        return MultiplicityPlan(
            {k: m * factor for k, m in self.m_a.items()},
            {k: m * factor for k, m in self.m_b.items()},
            {k: m * factor for k, m in self.m_q.items()},
        )


def _require_regularizable(spec: GammaSpec) -> None:
    if not spec.is_strict:
        raise ValueError("0 in A or B: spec must be loopless")
    if bool(spec.A) != bool(spec.B):
        raise NotRegularizable("A and B must both be empty or both be non-empty")
    if not spec.Q:
        raise EmptyQ("Q must be non-empty")


def plan_multiplicities(spec: GammaSpec) -> MultiplicityPlan:
    """Positive multiplicities with sum(m_a) = sum(m_b) and a weighted sum = 0 mod n.

    Starts from all ones, tops up the smallest step of the smaller of A, B to
    balance degrees, then adds the fewest extra edges (one Q edge, or one A
    and one B edge together) that bring the weighted sum to 0 mod n. If no
    such top-up exists every multiplicity is multiplied by n.
    """
    _require_regularizable(spec)
    n = spec.n
    m_a = {a: 1 for a in spec.A}
    m_b = {b: 1 for b in spec.B}
    m_q = {q: 1 for q in spec.Q}
    if len(spec.A) > len(spec.B):
        m_b[min(spec.B)] += len(spec.A) - len(spec.B)
    elif len(spec.B) > len(spec.A):
        m_a[min(spec.A)] += len(spec.B) - len(spec.A)
    plan = MultiplicityPlan(m_a, m_b, m_q)
    target = (-plan.weighted_sum()) % n
    moves = [("q", q, q % n) for q in spec.Q]
    moves += [("ab", (a, b), (a + b) % n) for a in spec.A for b in spec.B]
    # breadth-first search over residues mod n for the shortest top-up
    prev: dict[int, tuple] = {0: None}
    queue = deque([0])
    while queue and target not in prev:
        r = queue.popleft()
        for move in moves:
            nr = (r + move[2]) % n
            if nr not in prev:
                prev[nr] = (r, move)
                queue.append(nr)
    if target not in prev:
        return plan.scaled(n)
    r = target
    while prev[r] is not None:
        r, move = prev[r]
        if move[0] == "q":
            m_q[move[1]] += 1
        else:
            a, b = move[1]
            m_a[a] += 1
            m_b[b] += 1
    return MultiplicityPlan(m_a, m_b, m_q)


def _hierholzer(arcs: list[tuple], start) -> list:
    """Closed Eulerian trail of a directed multigraph, as a node list."""
    out = defaultdict(list)
    for u, v in arcs:
        out[u].append(v)
    for u in out:
        out[u].reverse()
    stack = [start]
    circuit = []
    while stack:
        v = stack[-1]
        if out[v]:
            stack.append(out[v].pop())
        else:
            circuit.append(stack.pop())
    circuit.reverse()
    return circuit


def synthesize_word(spec: GammaSpec) -> CyclicPresentation:
    """A cyclically reduced word whose reduced Whitehead graph is Gamma_n(A, B, Q).

    Letters are nodes of a directed multigraph and each required cyclic
    subword is an arc: ``x_j x_{j+q}`` for Q, ``x_j x_{j+a}^-1`` for A and
    ``x_j^-1 x_{j+b}`` for B, taken with the multiplicities of
    ``plan_multiplicities``. The arcs are laid out along one closed chain,
    which makes the multigraph balanced and connected, and the word is read
    off a closed Eulerian trail.
    """
    _require_regularizable(spec)
    n = spec.n
    plan = plan_multiplicities(spec)
    transitions = [("Q", q) for q in spec.Q for _ in range(plan.m_q[q])]
    a_steps = [a for a in spec.A for _ in range(plan.m_a[a])]
    b_steps = [b for b in spec.B for _ in range(plan.m_b[b])]
    for a, b in zip(a_steps, b_steps):
        transitions += [("A", a), ("B", b)]

    letter = Letter(0, 1)
    chain = [letter]
    for kind, step in transitions:
        sign = letter.sign if kind == "Q" else -letter.sign
        letter = Letter((letter.generator + step) % n, sign)
        chain.append(letter)
    if chain[-1] != chain[0]:
        raise SynthesisFailed(f"multiplicity plan does not close up for {spec}")
    arcs = list(zip(chain[:-1], chain[1:]))
    trail = _hierholzer(arcs, chain[0])
    if len(trail) != len(arcs) + 1:
        raise SynthesisFailed(f"letter multigraph is disconnected for {spec}")
    p = CyclicPresentation(n, tuple(trail[:-1]))
    target = canonicalize_gamma_loose(n, spec.A, spec.B, spec.Q)
    if reduced_whitehead_spec(p) != target or not is_cyclically_reduced(p):
        raise SynthesisFailed(f"synthesized word does not realize {spec}")
    return p


def pair_multiset(p: CyclicPresentation) -> dict[tuple[str, int], int]:
    """Counts of (kind, step) over cyclic pairs, steps reduced mod n (not folded)."""
    counts: dict[tuple[str, int], int] = defaultdict(int)
    for u, t in p.cyclic_pairs():
        counts[pair_step(u, t, p.n)] += 1
    return dict(counts)


def plan_from_word(p: CyclicPresentation) -> MultiplicityPlan:
    """The multiplicity plan realised by a word, in the all-positive orientation.

    Only meaningful for words built from x_j x_{j+a}^-1, x_j^-1 x_{j+b} and
    x_j x_{j+q} pairs, which is what ``synthesize_word`` emits.
    """
    m: dict[str, dict] = {"A": defaultdict(int), "B": defaultdict(int), "Q": defaultdict(int)}
    for (kind, step), count in pair_multiset(p).items():
        m[kind][step] += count
    return MultiplicityPlan(dict(m["A"]), dict(m["B"]), dict(m["Q"]))

