"""
Graph kernels shared by the analysis and radical modules: reachability,
Tarjan strongly connected components, undirected components.

Graphs are given as ``successors(v) -> iterable`` callables over a vertex list,
so the same code runs on quivers and on Hom digraphs.
"""

from __future__ import annotations

from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Sequence, Set, TypeVar

V = TypeVar("V", bound=Hashable)
Successors = Callable[[V], Iterable[V]]


def reachable(starts: Iterable[V], successors: Successors, include_starts: bool = True) -> Set[V]:
    """Vertices reachable from ``starts``; ``include_starts=False`` needs a path of length >= 1"""
    seen: Set[V] = set()
    stack: List[V] = []
    for s in starts:
        if include_starts:
            if s not in seen:
                seen.add(s)
                stack.append(s)
        else:
            for w in successors(s):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    while stack:
        v = stack.pop()
        for w in successors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def strongly_connected_components(
    vertices: Sequence[V], successors: Successors
) -> List[FrozenSet[V]]:
    """Tarjan's algorithm, iterative; components in reverse topological order"""
    index: Dict[V, int] = {}
    lowlink: Dict[V, int] = {}
    on_stack: Set[V] = set()
    stack: List[V] = []
    components: List[FrozenSet[V]] = []
    counter = 0

    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(successors(root)))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, children = work[-1]
            advanced = False
            for w in children:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(successors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.add(w)
                    if w == v:
                        break
                components.append(frozenset(component))
    return components


def cyclic_components(vertices: Sequence[V], successors: Successors) -> List[FrozenSet[V]]:
    """Components carrying an oriented cycle: size > 1, or a single vertex with a loop"""
    result = []
    for component in strongly_connected_components(vertices, successors):
        if len(component) > 1:
            result.append(component)
        else:
            (v,) = tuple(component)
            if v in set(successors(v)):
                result.append(component)
    return result


def undirected_components(
    vertices: Iterable[V], neighbours: Callable[[V], Iterable[V]]
) -> List[FrozenSet[V]]:
    """Connected components of the graph restricted to ``vertices``"""
    allowed = list(vertices)
    allowed_set = set(allowed)
    seen: Set[V] = set()
    components = []
    for start in allowed:
        if start in seen:
            continue
        component = {start}
        seen.add(start)
        stack = [start]
        while stack:
            for w in neighbours(stack.pop()):
                if w in allowed_set and w not in seen:
                    seen.add(w)
                    component.add(w)
                    stack.append(w)
        components.append(frozenset(component))
    return components
