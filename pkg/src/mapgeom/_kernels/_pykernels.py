"""Pure-Python reference kernels.

Every function here has a twin in ``_ckernels.pyx`` with identical
semantics; the package picks one at import time.  Permutations are plain
integer sequences ``p`` with ``p[i]`` the image of ``i``.  Quadricell
kernels assume the layout ``4 * edge + tag`` so that alpha is ``q ^ 1``,
beta is ``q ^ 2`` and alpha*beta is ``q ^ 3``.
"""


def orbit_labels(generators, n):
    """Label every point of ``range(n)`` with the index of its orbit.

    Orbits are numbered by their least element, so labels are stable.
    Returns ``(count, labels)``.
    """
    labels = [-1] * n
    count = 0
    stack = []
    for start in range(n):
        if labels[start] >= 0:
            continue
        labels[start] = count
        stack.append(start)
        while stack:
            x = stack.pop()
            for g in generators:
                y = g[x]
                if labels[y] < 0:
                    labels[y] = count
                    stack.append(y)
        count += 1
    return count, labels


def cycles(perm):
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def cycle_count(perm):
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
    return count


def face_permutation(P):
    # P composed with alpha*beta (alpha*beta applied first)
    return [P[q ^ 3] for q in range(len(P))]


def rooted_code(P, root):
    """Breadth-first relabelling of the quadricells driven by (alpha, beta, P).

    Returns ``(code, order)``: ``order[i]`` is the quadricell receiving
    label ``i`` and ``code`` lists, label by label, the labels of its
    alpha, beta and P images.  Only the part reachable from ``root`` is
    encoded.
    """
    n = len(P)
    label = [-1] * n
    label[root] = 0
    order = [root]
    code = []
    head = 0
    while head < len(order):
        q = order[head]
        for g in (q ^ 1, q ^ 2, P[q]):
            if label[g] < 0:
                label[g] = len(order)
                order.append(g)
            code.append(label[g])
        head += 1
    return tuple(code), tuple(order)


def canonical_code(P):
    """Least rooted code over all roots, and how many roots attain it."""
    best = None
    count = 0
    for root in range(len(P)):
        code, _ = rooted_code(P, root)
        if best is None or code < best:
            best = code
            count = 1
        elif code == best:
            count += 1
    return best, count


def matching_roots(P, target):
    """All roots whose rooted code equals ``target``."""
    return [root for root in range(len(P)) if rooted_code(P, root)[0] == target]
