# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: same contract as the pure module, C speed.

Masks are uint64, so every function requires a universe of at most 64
points; the object layer enforces that bound before calling in.
"""

BACKEND = "c"

ctypedef unsigned long long u64

cdef u64 ONE = 1


cdef inline int _bit_index(u64 low):
    cdef int i = 0
    while not (low & ONE):
        low >>= 1
        i += 1
    return i


cdef void _load(list auras, u64 *buf, int n) except *:
    cdef int i
    for i in range(n):
        buf[i] = <u64> auras[i]


cdef u64 _hull_of(u64 *a, u64 start, int n):
    cdef u64 m = start
    cdef u64 grown, probe, low
    while True:
        grown = m
        probe = m
        while probe:
            low = probe & (~probe + 1)
            grown |= a[_bit_index(low)]
            probe ^= low
        if grown == m:
            return m
        m = grown


def hull_masks(int n, auras):
    """Smallest scope-open superset of each singleton."""
    cdef u64 buf[64]
    cdef int x
    if n > 64:
        raise ValueError("kernel masks cap at 64 points")
    _load(list(auras), buf, n)
    out = []
    for x in range(n):
        out.append(_hull_of(buf, buf[x], n))
    return out


def union_closure(masks):
    """All unions of sub-collections, the empty union included; ascending."""
    seen = {0}
    for m in masks:
        seen |= {m | r for r in seen}
    return sorted(seen)


def tau_a_masks(int n, auras):
    """Every scope-open set, as ascending masks: all unions of hulls."""
    return union_closure(hull_masks(n, auras))


def is_transitive(int n, auras):
    cdef u64 buf[64]
    cdef u64 ax, probe, low
    cdef int x
    if n > 64:
        raise ValueError("kernel masks cap at 64 points")
    _load(list(auras), buf, n)
    for x in range(n):
        ax = buf[x]
        probe = ax
        while probe:
            low = probe & (~probe + 1)
            if buf[_bit_index(low)] & ~ax:
                return False
            probe ^= low
    return True


def is_symmetric(int n, auras):
    cdef u64 buf[64]
    cdef u64 probe, low
    cdef int x
    if n > 64:
        raise ValueError("kernel masks cap at 64 points")
    _load(list(auras), buf, n)
    for x in range(n):
        probe = buf[x]
        while probe:
            low = probe & (~probe + 1)
            if not (buf[_bit_index(low)] >> x) & ONE:
                return False
            probe ^= low
    return True


def aura_closure_mask(int n, auras, a):
    """Points whose scope meets ``a``."""
    cdef u64 buf[64]
    cdef u64 target = <u64> a
    cdef u64 out = 0
    cdef int x
    if n > 64:
        raise ValueError("kernel masks cap at 64 points")
    _load(list(auras), buf, n)
    for x in range(n):
        if buf[x] & target:
            out |= ONE << x
    return out


def enumerate_preorders(int n):
    """All reflexive transitive relations on n points, as row-mask tuples.

    Same depth-first ascending order as the pure backend.
    """
    cdef u64 rows[16]
    cdef u64 full, m, rj, bit
    cdef int i, j, ok
    cdef int stack_i
    if n == 0:
        return [()]
    if n > 16:
        raise ValueError("preorder enumeration caps at 16 points")
    full = (ONE << n) - 1
    out = []
    # Iterative DFS: next_mask[i] is the candidate to try at depth i.
    cdef u64 next_mask[17]
    i = 0
    next_mask[0] = 0
    while i >= 0:
        if i == n:
            out.append(tuple([rows[j] for j in range(n)]))
            i -= 1
            continue
        bit = ONE << i
        m = next_mask[i]
        while m <= full:
            if m & bit:
                ok = 1
                for j in range(i):
                    rj = rows[j]
                    if (rj & bit) and (m & ~rj):
                        ok = 0
                        break
                    if (m & (ONE << j)) and (rj & ~m):
                        ok = 0
                        break
                if ok:
                    break
            m += 1
        if m > full:
            i -= 1
            continue
        rows[i] = m
        next_mask[i] = m + 1
        i += 1
        next_mask[i] = 0
    return out


def component_count(int n, hulls):
    """Connected pieces of the comparability graph of the hulls."""
    cdef u64 buf[64]
    cdef int parent[64]
    cdef u64 probe, low
    cdef int x, y, ra, rb, count
    if n == 0:
        return 0
    if n > 64:
        raise ValueError("kernel masks cap at 64 points")
    _load(list(hulls), buf, n)
    for x in range(n):
        parent[x] = x
    for x in range(n):
        probe = buf[x]
        while probe:
            low = probe & (~probe + 1)
            y = _bit_index(low)
            probe ^= low
            ra = x
            while parent[ra] != ra:
                parent[ra] = parent[parent[ra]]
                ra = parent[ra]
            rb = y
            while parent[rb] != rb:
                parent[rb] = parent[parent[rb]]
                rb = parent[rb]
            if ra != rb:
                parent[rb] = ra
    count = 0
    for x in range(n):
        if parent[x] == x:
            count += 1
    return count


def product_is_connected(int nx, amasks, int ny, bmasks):
    """Connectivity of the product scope space, without materializing it."""
    cdef u64 abuf[64]
    cdef u64 bbuf[64]
    cdef u64 paura[64]
    cdef u64 hulls[64]
    cdef u64 probe, low, m, by
    cdef int x, y, total, p
    if nx == 0 or ny == 0:
        return True
    total = nx * ny
    if total > 64:
        raise ValueError("kernel masks cap at 64 points")
    _load(list(amasks), abuf, nx)
    _load(list(bmasks), bbuf, ny)
    p = 0
    for x in range(nx):
        for y in range(ny):
            by = bbuf[y]
            m = 0
            probe = abuf[x]
            while probe:
                low = probe & (~probe + 1)
                m |= by << (_bit_index(low) * ny)
                probe ^= low
            paura[p] = m
            p += 1
    for p in range(total):
        hulls[p] = _hull_of(paura, paura[p], total)
    return component_count(total, [hulls[p] for p in range(total)]) == 1
