"""Pure-Python enumeration kernels.

This is the reference implementation; ``_ckernels.pyx`` mirrors it line
for line, including node accounting, so that both backends agree on
results and on when the budget trips.
"""
from .errors import SearchBudgetExceeded


def solutions(a, b, ux, uy, x_cap, y_cap, max_nodes):
    """Every (x, y) with a.x = b.y, 0 <= x <= ux, 0 <= y <= uy,
    ||x||_1 <= x_cap and ||y||_1 <= y_cap.

    Returns ``(flat_tuples, nodes)``. The zero pair is included. Output is
    in lexicographic order of ``x + y`` because the depth-first search
    tries coordinates in increasing value.
    """
    n, m = len(a), len(b)
    maxb_suf = [0] * (m + 1)
    cap_suf = [0] * (m + 1)
    for j in range(m - 1, -1, -1):
        maxb_suf[j] = max(maxb_suf[j + 1], b[j])
        cap_suf[j] = cap_suf[j + 1] + uy[j] * b[j]
    rhs_max = min(y_cap * maxb_suf[0], cap_suf[0])

    cur = [0] * (n + m)
    out = []
    nodes = 0

    def ydfs(j, rem, target):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetExceeded(max_nodes)
        if target > rem * maxb_suf[j] or target > cap_suf[j]:
            return
        bj = b[j]
        if j == m - 1:
            if target % bj == 0 and target // bj <= min(uy[j], rem):
                cur[n + j] = target // bj
                out.append(tuple(cur))
                cur[n + j] = 0
            return
        top = min(uy[j], rem, target // bj)
        for v in range(top + 1):
            cur[n + j] = v
            ydfs(j + 1, rem - v, target - v * bj)
        cur[n + j] = 0

    def xdfs(i, rem, lhs):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchBudgetExceeded(max_nodes)
        if i == n:
            ydfs(0, y_cap, lhs)
            return
        ai = a[i]
        top = min(ux[i], rem, (rhs_max - lhs) // ai)
        for v in range(top + 1):
            cur[i] = v
            xdfs(i + 1, rem - v, lhs + v * ai)
        cur[i] = 0

    xdfs(0, x_cap, 0)
    return out, nodes


def minimal_filter(vectors):
    """Keep the vectors that dominate no other vector of the input.

    Input vectors must be nonzero. Candidates are visited by increasing
    coordinate sum, so a vector is dropped exactly when some already kept
    vector lies componentwise below it. Result is lexicographically sorted.
    """
    kept = []
    for v in sorted(vectors, key=lambda t: (sum(t), t)):
        for u in kept:
            if all(p <= q for p, q in zip(u, v)):
                break
        else:
            kept.append(v)
    kept.sort()
    return kept
