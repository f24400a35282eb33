"""Rauzy graphs, n-simple paths, reduced and super reduced graphs.

The super reduced graph is the reduced graph quotiented by theta. Its shape
(a tree once loops are removed, with every loop theta-fixed) predicts when
``P(n) + P(n+1) = dC(n) + 2`` holds.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .complexity import EQUAL, ComplexityProfile
from .core import Antimorphism, FactorIndex, Word, _same_alphabet


@dataclass(frozen=True)
class RauzyGraph:
    """Vertices are factor codes of length ``n``; each edge is a factor of
    length ``n + 1`` going from its prefix to its suffix."""

    n: int
    vertices: tuple[str, ...]
    edges: tuple[str, ...]
    alphabet: object

    def successors(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e[:-1]].append(e[1:])
        return out

    def is_strongly_connected(self) -> bool:
        if not self.vertices:
            return True
        succ = self.successors()
        pred: dict[str, list[str]] = {v: [] for v in self.vertices}
        for v, ws in succ.items():
            for w in ws:
                pred[w].append(v)
        start = self.vertices[0]
        return _reach(start, succ) == len(self.vertices) == _reach(start, pred)


def _reach(start: str, adj: dict[str, list[str]]) -> int:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen)


def rauzy_graph(idx: FactorIndex, n: int) -> RauzyGraph:
    if n + 1 > idx.max_len:
        raise ValueError(f"Rauzy graph of order {n} needs an index with max_len >= {n + 1}")
    return RauzyGraph(n, tuple(idx.codes(n)), tuple(idx.codes(n + 1)), idx.alphabet)


@dataclass(frozen=True)
class SimplePath:
    """An n-simple path: its length-n prefix and suffix are special and no
    interior length-n factor is.

    ``provisional`` paths could not be confirmed on the window (the chained
    word does not occur, or the walk ran off the window).
    """

    code: str
    n: int
    provisional: bool = False

    @property
    def start(self) -> str:
        return self.code[: self.n]

    @property
    def end(self) -> str:
        return self.code[-self.n :] if self.n else ""


@dataclass(frozen=True)
class SimplePaths:
    n: int
    paths: tuple[SimplePath, ...]
    specials: tuple[str, ...]
    periodic_regime: bool  # no special factor of length n on the window

    def __iter__(self):
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def trusted(self) -> tuple[SimplePath, ...]:
        return tuple(p for p in self.paths if not p.provisional)

    @property
    def has_provisional(self) -> bool:
        return any(p.provisional for p in self.paths)


def n_simple_paths(idx: FactorIndex, n: int) -> SimplePaths:
    """Walk every edge leaving a special vertex of the Rauzy graph of order
    ``n`` through non-branching vertices until the next special vertex."""
    graph = rauzy_graph(idx, n)
    specials = tuple(idx.special_codes(n))
    if not specials:
        return SimplePaths(n, (), (), True)
    special_set = set(specials)
    out_edges: dict[str, list[str]] = {v: [] for v in graph.vertices}
    for e in graph.edges:
        out_edges[e[:-1]].append(e)
    limit = len(graph.vertices) + 1
    paths = []
    for v in specials:
        for e in out_edges[v]:
            tail = [e[-1]]
            cur = e[1:]
            provisional = False
            while cur not in special_set:
                nxt = out_edges[cur]
                if len(nxt) != 1 or len(tail) > limit:
                    provisional = True  # ran off the window
                    break
                tail.append(nxt[0][-1])
                cur = nxt[0][1:]
            word = v + "".join(tail)
            if not provisional and word not in idx:
                provisional = True
            paths.append(SimplePath(word, n, provisional))
    paths.sort(key=lambda p: p.code)
    return SimplePaths(n, tuple(paths), specials, False)


@dataclass(frozen=True)
class SuperEdge:
    """Edge ``{e, theta(e)}`` of the super reduced graph."""

    key: str  # canonical path code (the smaller of e and theta(e))
    u: str  # canonical vertex code
    v: str
    theta_fixed: bool
    multiplicity_paths: int  # number of simple paths in the orbit found on the window

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class SuperReducedGraph:
    n: int
    vertices: tuple[str, ...]  # canonical representative of {w, theta(w)}
    edges: tuple[SuperEdge, ...]
    alpha: int  # special theta-palindromes of length n
    beta: int  # half the non-theta-palindromic special factors (rounded down)
    periodic_regime: bool
    provisional: bool
    alphabet: object

    @property
    def loops(self) -> tuple[SuperEdge, ...]:
        return tuple(e for e in self.edges if e.is_loop)

    @property
    def proper_edges(self) -> tuple[SuperEdge, ...]:
        return tuple(e for e in self.edges if not e.is_loop)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for e in self.proper_edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return _reach(self.vertices[0], adj) == len(self.vertices)

    def is_tree_after_loop_removal(self) -> bool:
        """Connected with exactly ``V - 1`` non-loop edges; the empty and the
        one-vertex graphs count as trees."""
        if not self.vertices:
            return True
        return self.is_connected() and len(self.proper_edges) == len(self.vertices) - 1


def _canon(theta: Antimorphism, code: str) -> str:
    return min(code, theta.apply_code(code))


def super_reduced_graph(
    theta: Antimorphism, idx: FactorIndex, n: int, paths: Optional[SimplePaths] = None
) -> SuperReducedGraph:
    """Quotient of the reduced Rauzy graph of order ``n`` under theta."""
    _same_alphabet(theta.alphabet, idx.alphabet)
    if paths is None:
        paths = n_simple_paths(idx, n)
    specials = paths.specials
    vertices = sorted({_canon(theta, s) for s in specials})
    alpha = sum(1 for s in specials if theta.is_palindrome_code(s))
    non_pal = len(specials) - alpha
    orbits: dict[str, list[SimplePath]] = defaultdict(list)
    for p in paths.paths:
        orbits[_canon(theta, p.code)].append(p)
    edges = []
    for key in sorted(orbits):
        members = orbits[key]
        p = members[0]
        u, v = sorted((_canon(theta, p.start), _canon(theta, p.end)))
        edges.append(SuperEdge(key, u, v, theta.is_palindrome_code(key), len(members)))
    return SuperReducedGraph(
        n,
        tuple(vertices),
        tuple(edges),
        alpha,
        non_pal // 2,
        paths.periodic_regime,
        paths.has_provisional,
        idx.alphabet,
    )


@dataclass(frozen=True)
class Cor33Verdict:
    n: int
    tree_after_loop_removal: bool
    all_loops_theta_palindromic: bool
    equality_predicted: bool
    equality_observed: bool
    provisional: bool = False
    periodic_regime: bool = False

    @property
    def consistent(self) -> bool:
        return self.equality_predicted == self.equality_observed

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "tree_after_loop_removal": self.tree_after_loop_removal,
            "all_loops_theta_palindromic": self.all_loops_theta_palindromic,
            "equality_predicted": self.equality_predicted,
            "equality_observed": self.equality_observed,
            "provisional": self.provisional,
            "periodic_regime": self.periodic_regime,
        }


def cor33_check(
    theta: Antimorphism, idx: FactorIndex, n: int, profile: ComplexityProfile
) -> Cor33Verdict:
    """Predict equality at ``n`` from the super reduced graph and compare
    with the observed status in ``profile``."""
    if n > profile.N:
        raise ValueError(f"profile covers n <= {profile.N}, asked for {n}")
    g = super_reduced_graph(theta, idx, n)
    tree = g.is_tree_after_loop_removal()
    loops_ok = all(e.theta_fixed for e in g.loops)
    observed = profile[n].status == EQUAL
    return Cor33Verdict(n, tree, loops_ok, tree and loops_ok, observed, g.provisional, g.periodic_regime)


def simple_path_interior_palindromes(theta: Antimorphism, path: SimplePath) -> int:
    """Number of theta-palindromic factors of length ``n`` or ``n + 1``
    occurring in ``path`` other than as its prefix or suffix."""
    code, n = path.code, path.n
    seen = 0
    for length in (n, n + 1):
        if length == 0 or length > len(code):
            continue
        for i in range(len(code) - length + 1):
            if i == 0 or i + length == len(code):
                continue
            if theta.is_palindrome_code(code[i : i + length]):
                seen += 1
    return seen


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def _label(alphabet, code: str) -> str:
    text = "".join(alphabet.name_of(ch) for ch in code) if code else "ε"
    return text.replace("\\", "\\\\").replace('"', '\\"')


def rauzy_dot(graph: RauzyGraph) -> str:
    a = graph.alphabet
    lines = [f"digraph rauzy_{graph.n} {{", "  rankdir=LR;"]
    for v in graph.vertices:
        lines.append(f'  "{_label(a, v)}";')
    for e in graph.edges:
        src, dst = (e[:-1], e[1:])
        lines.append(f'  "{_label(a, src)}" -> "{_label(a, dst)}" [label="{_label(a, e)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def reduced_dot(paths: SimplePaths, alphabet) -> str:
    lines = [f"digraph reduced_{paths.n} {{", "  rankdir=LR;"]
    for v in paths.specials:
        lines.append(f'  "{_label(alphabet, v)}";')
    for p in paths.paths:
        style = ", style=dotted" if p.provisional else ""
        lines.append(
            f'  "{_label(alphabet, p.start)}" -> "{_label(alphabet, p.end)}"'
            f' [label="{_label(alphabet, p.code)}"{style}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def super_reduced_dot(g: SuperReducedGraph, theta: Antimorphism) -> str:
    a = g.alphabet

    def vname(code: str) -> str:
        img = theta.apply_code(code)
        if img == code:
            return _label(a, code)
        return "{" + _label(a, code) + ", " + _label(a, img) + "}"

    lines = [f"graph super_reduced_{g.n} {{"]
    for v in g.vertices:
        lines.append(f'  "{vname(v)}";')
    for e in g.edges:
        attrs = [f'label="{_label(a, e.key)}"']
        if e.is_loop:
            attrs.append("style=dashed")
        if e.theta_fixed:
            attrs.append('xlabel="θ-fixed"')
        lines.append(f'  "{vname(e.u)}" -- "{vname(e.v)}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
