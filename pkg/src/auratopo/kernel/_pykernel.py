"""Pure Python kernel: bitmask primitives behind every hot loop.

All functions speak plain ints. A subset of an n-point universe is the
mask with bit i set for the i-th point; a scope assignment is a list of
n masks, one per point, with bit i set in entry i. The compiled kernel
implements the same contract; either backend must produce identical
output for identical input.
"""

from __future__ import annotations

BACKEND = "python"


def hull_masks(n, auras):
    """Smallest scope-open superset of each singleton.

    hull(x) is the least fixed point of S -> S plus the scopes of S's
    members, started from the scope of x. It is the minimal scope-open
    set containing x.
    """
    out = []
    for x in range(n):
        m = auras[x]
        while True:
            grown = m
            probe = m
            while probe:
                low = probe & -probe
                grown |= auras[low.bit_length() - 1]
                probe ^= low
            if grown == m:
                break
            m = grown
        out.append(m)
    return out


def union_closure(masks):
    """All unions of sub-collections of ``masks``, the empty union included.

    Returns ascending ints. Output-sensitive: never scans 2**n subsets
    of the universe, only grows the closure itself.
    """
    seen = {0}
    for m in masks:
        seen |= {m | r for r in seen}
    return sorted(seen)


def tau_a_masks(n, auras):
    """Every scope-open set, as ascending masks: all unions of hulls."""
    return union_closure(hull_masks(n, auras))


def is_transitive(n, auras):
    for x in range(n):
        ax = auras[x]
        probe = ax
        while probe:
            low = probe & -probe
            if auras[low.bit_length() - 1] & ~ax:
                return False
            probe ^= low
    return True


def is_symmetric(n, auras):
    for x in range(n):
        probe = auras[x]
        while probe:
            low = probe & -probe
            if not (auras[low.bit_length() - 1] >> x) & 1:
                return False
            probe ^= low
    return True


def aura_closure_mask(n, auras, a):
    """Points whose scope meets ``a``."""
    out = 0
    bit = 1
    for x in range(n):
        if auras[x] & a:
            out |= bit
        bit <<= 1
    return out


def enumerate_preorders(n):
    """All reflexive transitive relations on n points, as row-mask tuples.

    Row x is the set {y : x R y}, i.e. the minimal open of x in the
    topology the preorder generates. Rows are assigned depth first in
    ascending mask order, so the output is lexicographically sorted and
    identical across backends.
    """
    if n == 0:
        return [()]
    full = (1 << n) - 1
    rows = [0] * n
    out = []

    def place(i):
        if i == n:
            out.append(tuple(rows))
            return
        bit = 1 << i
        for m in range(full + 1):
            if not m & bit:
                continue
            ok = True
            for j in range(i):
                rj = rows[j]
                if rj & bit and m & ~rj:
                    ok = False
                    break
                if m & (1 << j) and rj & ~m:
                    ok = False
                    break
            if ok:
                rows[i] = m
                place(i + 1)
        rows[i] = 0

    place(0)
    return out


def component_count(n, hulls):
    """Connected pieces of the comparability graph of the hulls.

    x and y are adjacent when one lies in the other's hull; classes of
    the induced reachability are exactly the components of the finite
    space whose minimal opens are the hulls.
    """
    if n == 0:
        return 0
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in range(n):
        probe = hulls[x]
        while probe:
            low = probe & -probe
            y = low.bit_length() - 1
            probe ^= low
            ra, rb = find(x), find(y)
            if ra != rb:
                parent[rb] = ra
    return sum(1 for x in range(n) if find(x) == x)


def product_is_connected(nx, amasks, ny, bmasks):
    """Connectivity of the product scope space, without materializing it.

    Product point (x, y) gets index x*ny + y and scope a(x) x b(y).
    """
    if nx == 0 or ny == 0:
        return True
    paura = []
    for x in range(nx):
        shifts = []
        probe = amasks[x]
        while probe:
            low = probe & -probe
            shifts.append((low.bit_length() - 1) * ny)
            probe ^= low
        for y in range(ny):
            by = bmasks[y]
            m = 0
            for s in shifts:
                m |= by << s
            paura.append(m)
    total = nx * ny
    return component_count(total, hull_masks(total, paura)) == 1
