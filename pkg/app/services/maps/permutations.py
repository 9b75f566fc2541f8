"""Permutations of ``0..n-1`` stored as tuples.

Products use the right action: in ``perm_compose(p1, p2)`` the permutation
``p1`` is applied first. Partial permutations use ``-1`` for undefined images.
"""

from collections import deque
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Partition = tuple[int, ...]


def perm_id(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    """Whether ``p`` is a bijection of ``0..n-1``."""
    if n is None:
        n = len(p)
    if len(p) != n:
        return False
    seen = [False] * n
    for x in p:
        if not isinstance(x, int) or x < 0 or x >= n or seen[x]:
            return False
        seen[x] = True
    return True


def perm_from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Perm:
    """Build a permutation of size ``n`` from disjoint cycles; unlisted points are fixed."""
    res = list(range(n))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            res[x] = cycle[(i + 1) % len(cycle)]
    return tuple(res)


def perm_invert(p: Sequence[int]) -> Perm:
    res = [-1] * len(p)
    for i, x in enumerate(p):
        if x != -1:
            res[x] = i
    return tuple(res)


def perm_compose(p1: Sequence[int], p2: Sequence[int]) -> Perm:
    """The product ``p1 p2``: apply ``p1`` first, then ``p2``."""
    return tuple(p2[x] if x != -1 else -1 for x in p1)


def perm_conjugate(p: Sequence[int], m: Sequence[int]) -> Perm:
    """Relabel ``p`` by ``m``: if ``p`` maps ``a`` to ``b`` the result maps ``m[a]`` to ``m[b]``."""
    res = [-1] * len(p)
    for i, x in enumerate(p):
        res[m[i]] = m[x] if x != -1 else -1
    return tuple(res)


def perm_cycles(p: Sequence[int], singletons: bool = True) -> list[list[int]]:
    """Cycle decomposition, each cycle starting at its smallest element."""
    seen = [False] * len(p)
    res = []
    for i in range(len(p)):
        if seen[i] or p[i] == -1:
            continue
        if p[i] == i and not singletons:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        res.append(cycle)
    return res


def perm_num_cycles(p: Sequence[int]) -> int:
    return len(perm_cycles(p))


def perm_cycle_type(p: Sequence[int]) -> Partition:
    """Cycle lengths in decreasing order."""
    return tuple(sorted((len(c) for c in perm_cycles(p)), reverse=True))


def perm_order_divides(p: Sequence[int], k: int) -> bool:
    """Whether ``p`` to the power ``k`` is the identity."""
    return all(len(c) <= k and k % len(c) == 0 for c in perm_cycles(p))


def perm_cycle_string(p: Sequence[int]) -> str:
    return "".join("(" + ",".join(map(str, c)) + ")" for c in perm_cycles(p, singletons=False)) or "()"


def perms_orbits(perms: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Orbits of the group generated by ``perms`` on ``0..n-1``."""
    seen = [-1] * n
    count = 0
    for i in range(n):
        if seen[i] != -1:
            continue
        todo = [i]
        seen[i] = count
        while todo:
            j = todo.pop()
            for p in perms:
                k = p[j]
                if seen[k] == -1:
                    seen[k] = count
                    todo.append(k)
        count += 1
    return [tuple(i for i in range(n) if seen[i] == c) for c in range(count)]


def perms_are_transitive(perms: Sequence[Sequence[int]], n: int) -> bool:
    if n == 0:
        return True
    return len(perms_orbits(perms, n)) == 1


def bfs_labels_from(perms: Sequence[Sequence[int]], start: int) -> list[int]:
    """Relabelling visiting points breadth first from ``start``.

    Generators are tried in the given order at each point. Points outside the
    orbit of ``start`` keep the label ``-1``.
    """
    n = len(perms[0])
    labels = [-1] * n
    labels[start] = 0
    k = 1
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for p in perms:
            y = p[x]
            if labels[y] == -1:
                labels[y] = k
                k += 1
                queue.append(y)
    return labels


def relabelled_code(
    perms: Sequence[Sequence[int]], m: Sequence[int], data: Sequence[int] | None = None
) -> tuple[int, ...]:
    """Concatenation of the relabelled permutations, then ``data`` moved along ``m``."""
    code: list[int] = []
    for p in perms:
        code.extend(perm_conjugate(p, m))
    if data is not None:
        moved = [0] * len(data)
        for i, v in enumerate(data):
            moved[m[i]] = v
        code.extend(moved)
    return tuple(code)


def best_relabellings(
    perms: Sequence[Sequence[int]], data: Sequence[int] | None = None
) -> tuple[tuple[int, ...], list[list[int]]]:
    """Minimal relabelled code over all BFS starts, and every relabelling reaching it.

    ``perms`` must generate a transitive group.
    """
    n = len(perms[0])
    best_code: tuple[int, ...] | None = None
    best: list[list[int]] = []
    for start in range(n):
        m = bfs_labels_from(perms, start)
        code = relabelled_code(perms, m, data)
        if best_code is None or code < best_code:
            best_code = code
            best = [m]
        elif code == best_code:
            best.append(m)
    return best_code or (), best


def partition_defect(part: Sequence[int]) -> int:
    """``sum(e - 1)`` over the entries of a partition."""
    return sum(part) - len(part)
