"""Independent brute-force recomputations used to cross-check the library.

Everything here works straight from the definitions with no shared code
paths: operators scan point by point, topologies are found by filtering
every candidate family, and connectivity splits carriers into every
two-part cover. All of it is exponential and only meant for tiny sizes.
"""

import itertools


def brute_closure(n, scopes, a):
    out = 0
    for x in range(n):
        if scopes[x] & a:
            out |= 1 << x
    return out


def brute_interior(n, scopes, a):
    out = 0
    for x in range(n):
        if (a >> x) & 1 and not scopes[x] & ~a:
            out |= 1 << x
    return out


def brute_derived(n, scopes, a):
    out = 0
    for x in range(n):
        if scopes[x] & (a & ~(1 << x)):
            out |= 1 << x
    return out


def brute_tau_a(n, scopes):
    """All sets containing the scope of each of their points."""
    out = []
    for a in range(1 << n):
        if all(not scopes[x] & ~a for x in range(n) if (a >> x) & 1):
            out.append(a)
    return sorted(out)


def brute_hull(n, scopes, x):
    """Smallest scope-open set containing the point.

    The family is closed under intersection, so the intersection of all
    members containing x is itself a member and is the minimum.
    """
    inter = (1 << n) - 1
    for a in brute_tau_a(n, scopes):
        if (a >> x) & 1:
            inter &= a
    return inter


def brute_is_connected(n, scopes, carrier):
    """No two-part split of the carrier by relatively scope-open sets.

    The subspace scope function cuts each scope to the carrier; a split
    is a pair of nonempty disjoint sets covering the carrier, both open
    in the subspace scope topology.
    """
    if carrier == 0:
        return True
    points = [x for x in range(n) if (carrier >> x) & 1]
    sub_scopes = {x: scopes[x] & carrier for x in points}

    def sub_open(a):
        return all(not sub_scopes[x] & ~a for x in points if (a >> x) & 1)

    proper = []
    for a in range(1 << n):
        if a & ~carrier:
            continue
        if a and a != carrier and sub_open(a):
            proper.append(a)
    for a in proper:
        if (carrier & ~a) in proper:
            return False
    return True


def brute_components(n, scopes):
    """Blocks as maximal connected subsets, found by downward scan."""
    full = (1 << n) - 1
    blocks = []
    assigned = 0
    for x in range(n):
        if (assigned >> x) & 1:
            continue
        best = 1 << x
        for size in range(n, 0, -1):
            found = None
            for combo in itertools.combinations(range(n), size):
                m = 0
                for i in combo:
                    m |= 1 << i
                if (m >> x) & 1 and brute_is_connected(n, scopes, m):
                    found = m
                    break
            if found is not None:
                best = found
                break
        blocks.append(best)
        assigned |= best
    assert assigned == full or n == 0
    return sorted(blocks, key=lambda m: (m & -m).bit_length())


def brute_topologies(n):
    """Every family over n points satisfying the finite topology axioms."""
    full = (1 << n) - 1
    subsets = list(range(1 << n))
    out = []
    for bits in range(1 << len(subsets)):
        family = [subsets[i] for i in range(len(subsets)) if (bits >> i) & 1]
        fam = set(family)
        if 0 not in fam or full not in fam:
            continue
        if all((a | b) in fam and (a & b) in fam for a in family for b in family):
            out.append(frozenset(fam))
    return out


def brute_limits(n, scopes, cycle_mask):
    """Limits by the definition: every scope-open neighbourhood of the
    point eventually contains the sequence, which for an eventually
    periodic sequence means it contains the whole cycle range."""
    tau = brute_tau_a(n, scopes)
    out = 0
    for x in range(n):
        if all(not cycle_mask & ~u for u in tau if (u >> x) & 1):
            out |= 1 << x
    return out


def brute_is_continuous(images, src_n, src_scopes, dst_n, dst_scopes):
    """Preimage of every scope-open set is scope-open."""
    src_tau = set(brute_tau_a(src_n, src_scopes))
    for v in brute_tau_a(dst_n, dst_scopes):
        pre = 0
        for i in range(src_n):
            if (v >> images[i]) & 1:
                pre |= 1 << i
        if pre not in src_tau:
            return False
    return True
