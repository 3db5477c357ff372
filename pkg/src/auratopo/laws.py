"""Structural laws checked by exhaustive enumeration over small spaces.

Each law quantifies over the complete grid of spaces on up to three
points (373 of them), or over ordered factor pairs drawn from the two-
and three-point grids, and re-derives a pinned identity through the
public operators. A failing law reports concrete witnesses, so a broken
operator or kernel is traced to a printable space rather than a flag.

Closure values inside the shared fact tables are read through the
kernel module attribute on purpose: patching ``kernel.aura_closure_mask``
must make the closure laws fail loudly, which the test suite uses to
prove the laws are live.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional

from . import kernel
from .aura import (
    AuraSpace,
    FiniteMap,
    aura_interior,
    classify,
    derived_set,
    is_aura_closed,
    is_aura_continuous,
    is_aura_open,
    make_aura_space,
    separation_axioms,
)
from .connectivity import aura_components, is_aura_connected, is_aura_locally_connected
from .constructions import _box_mask, product, product_topology_of_factors, subspace
from .covering import (
    fip,
    is_aura_compact,
    is_aura_limit_point_compact,
    is_aura_lindelof,
    is_countably_aura_compact,
)
from .errors import SizeOutOfRange
from .finite import PointSet, family_key, mask_indices
from .genopen import GeneralizedClass, generalized_family
from .search import enumerate_auras, enumerate_topologies, space_descriptor
from .sequences import EvPSequence, converges_to, transitive_criterion

MAX_LAW_SIZE = 3
MAX_WITNESSES = 5

CORE = "core"
EXTENDED = "extended"


class SpaceFacts:
    """Memoised per-space tables shared by every law."""

    __slots__ = (
        "space", "n", "size", "full", "scopes", "hulls", "cl", "d", "itr",
        "tau_a", "tau_a_set", "closed_masks", "cls", "sep", "connected",
        "blocks", "_conn_masks",
    )

    def __init__(self, s: AuraSpace):
        self.space = s
        self.n = s.n
        self.size = 1 << s.n
        self.full = s.universe.full_mask
        self.scopes = s.scope.masks
        self.hulls = s.hull_masks
        # The closure table is the fault-injection point for the suite.
        self.cl = [kernel.aura_closure_mask(self.n, self.scopes, a) for a in range(self.size)]
        self.d = [derived_set(s, a).mask for a in range(self.size)]
        self.itr = [aura_interior(s, a).mask for a in range(self.size)]
        self.tau_a = tuple(sorted(s.aura_topology_masks, key=family_key))
        self.tau_a_set = frozenset(self.tau_a)
        self.closed_masks = [a for a in range(self.size) if is_aura_closed(s, a)]
        self.cls = classify(s)
        self.sep = separation_axioms(s)
        self.connected = is_aura_connected(s)
        self.blocks = aura_components(s).blocks
        self._conn_masks = None

    def conn_masks(self) -> list:
        """All carrier masks connected in the subspace sense, cached."""
        if self._conn_masks is None:
            self._conn_masks = [
                a for a in range(self.size) if is_aura_connected(self.space, a)
            ]
        return self._conn_masks


class LawContext:
    """Space grid plus shared caches for one law run."""

    def __init__(self, max_n: int = MAX_LAW_SIZE):
        if not 0 <= max_n <= MAX_LAW_SIZE:
            raise SizeOutOfRange(f"laws run on sizes 0..{MAX_LAW_SIZE}, got {max_n}")
        self.max_n = max_n
        self._spaces: Dict[int, list] = {}
        self._facts: Dict[AuraSpace, SpaceFacts] = {}
        self._surjection_cache: Dict[tuple, bool] = {}
        self._products: Dict[tuple, AuraSpace] = {}
        self.discrete_pair = make_aura_space(
            ["0", "1"],
            [[], ["0"], ["1"], ["0", "1"]],
            {"0": ["0"], "1": ["1"]},
        )

    def spaces(self, n: int) -> list:
        if n not in self._spaces:
            out = []
            for top in enumerate_topologies(n):
                out.extend(enumerate_auras(top))
            self._spaces[n] = out
        return self._spaces[n]

    def all_spaces(self) -> Iterable[AuraSpace]:
        for n in range(self.max_n + 1):
            for s in self.spaces(n):
                yield s

    def facts(self, s: AuraSpace) -> SpaceFacts:
        f = self._facts.get(s)
        if f is None:
            f = SpaceFacts(s)
            self._facts[s] = f
        return f

    def factor_pairs(self) -> Iterable[tuple]:
        """Ordered nonempty factor pairs with at most six product points.

        Empty factors are excluded: with one factor empty the product is
        empty and the projections cannot be onto, so the factor-recovery
        laws are stated for nonempty factors only.
        """
        if self.max_n < 2:
            return
        sizes = [(2, 2)]
        if self.max_n >= 3:
            sizes += [(2, 3), (3, 2)]
        for nx, ny in sizes:
            for sx in self.spaces(nx):
                for sy in self.spaces(ny):
                    yield sx, sy

    def product_of(self, sx: AuraSpace, sy: AuraSpace) -> AuraSpace:
        key = (sx, sy)
        p = self._products.get(key)
        if p is None:
            p = product(sx, sy)
            self._products[key] = p
        return p

    def has_continuous_surjection(self, src: SpaceFacts, dst: SpaceFacts) -> bool:
        """Does any onto map carry src continuously to dst?

        Continuity only consults the two scope topologies, so results
        are memoised per topology pair and evaluated on masks.
        """
        if dst.n > src.n or dst.n == 0 != src.n:
            return False
        key = (src.n, src.tau_a, dst.n, dst.tau_a)
        hit = self._surjection_cache.get(key)
        if hit is not None:
            return hit
        found = False
        for images in itertools.product(range(dst.n), repeat=src.n):
            if len(set(images)) != dst.n:
                continue
            ok = True
            for v in dst.tau_a:
                pre = 0
                for i, img in enumerate(images):
                    if (v >> img) & 1:
                        pre |= 1 << i
                if pre not in src.tau_a_set:
                    ok = False
                    break
            if ok:
                found = True
                break
        self._surjection_cache[key] = found
        return found


@dataclass(frozen=True)
class Law:
    name: str
    tier: str
    description: str
    run: Callable


@dataclass
class _Tally:
    """Failure collector with a witness cap."""

    law: str
    checks: int = 0
    failed: int = 0

    def __post_init__(self):
        self.messages: List[str] = []

    def verify(self, ok: bool, detail: str, s: Optional[AuraSpace] = None) -> None:
        self.checks += 1
        if ok:
            return
        self.failed += 1
        if len(self.messages) < MAX_WITNESSES:
            where = f" | space: {space_descriptor(s)}" if s is not None else ""
            self.messages.append(f"{self.law}: {detail}{where}")


@dataclass(frozen=True)
class LawOutcome:
    name: str
    tier: str
    checks: int
    failed: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass(frozen=True)
class LawReport:
    max_n: int
    outcomes: tuple

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    def lines(self) -> list:
        out = []
        for o in self.outcomes:
            if o.ok:
                out.append(f"law {o.name}: ok ({o.checks} checks)")
            else:
                out.append(f"law {o.name}: FAIL ({o.failed} of {o.checks} checks)")
                out.extend(f"  {m}" for m in o.failures)
        status = "all laws hold" if self.ok else "law failures present"
        out.append(f"laws: {status} on sizes 0..{self.max_n}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"

    def to_json(self) -> dict:
        return {
            "maxSize": self.max_n,
            "ok": self.ok,
            "laws": [
                {
                    "name": o.name,
                    "tier": o.tier,
                    "checks": o.checks,
                    "failed": o.failed,
                    "failures": list(o.failures),
                }
                for o in self.outcomes
            ],
        }


LAWS: List[Law] = []


def _law(name: str, tier: str, description: str):
    def wrap(fn):
        LAWS.append(Law(name, tier, description, fn))
        return fn
    return wrap


@_law(
    "cech-closure-axioms",
    CORE,
    "closure is grounded, extensive, monotone, additive, and not idempotent in general",
)
def _cech_axioms(ctx: LawContext, t: _Tally) -> None:
    idempotent_everywhere = True
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        t.verify(f.cl[0] == 0, "closure of the empty set is nonempty", s)
        for a in range(f.size):
            ca = f.cl[a]
            t.verify(not a & ~ca, f"set {a:#x} escapes its own closure", s)
            if f.cl[ca] != ca:
                idempotent_everywhere = False
        for a in range(f.size):
            for b in range(f.size):
                t.verify(
                    f.cl[a | b] == f.cl[a] | f.cl[b],
                    f"closure not additive on {a:#x}, {b:#x}",
                    s,
                )
                if not a & ~b:
                    t.verify(
                        not f.cl[a] & ~f.cl[b],
                        f"closure not monotone on {a:#x} inside {b:#x}",
                        s,
                    )
    if ctx.max_n >= 3:
        t.verify(
            not idempotent_everywhere,
            "no space with a non-idempotent closure was found, the grid should contain one",
        )


@_law(
    "closure-interior-duality",
    CORE,
    "interior is the complement of the closure of the complement",
)
def _duality(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        for a in range(f.size):
            t.verify(
                f.itr[a] == f.full & ~f.cl[f.full & ~a],
                f"duality breaks on {a:#x}",
                s,
            )


@_law(
    "derived-closure-decomposition",
    CORE,
    "closure of a set is the set joined with its derived set",
)
def _derived_closure(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        for a in range(f.size):
            t.verify(
                f.cl[a] == a | f.d[a],
                f"closure of {a:#x} is not the union with its derived set",
                s,
            )


@_law(
    "derived-set-laws",
    CORE,
    "derived set is grounded, monotone, additive, and detects closedness",
)
def _derived_laws(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        t.verify(f.d[0] == 0, "derived set of the empty set is nonempty", s)
        for a in range(f.size):
            t.verify(
                is_aura_closed(s, a) == (not f.d[a] & ~a),
                f"closed flag disagrees with derived containment on {a:#x}",
                s,
            )
            for b in range(f.size):
                t.verify(
                    f.d[a | b] == f.d[a] | f.d[b],
                    f"derived set not additive on {a:#x}, {b:#x}",
                    s,
                )
                if not a & ~b:
                    t.verify(
                        not f.d[a] & ~f.d[b],
                        f"derived set not monotone on {a:#x} inside {b:#x}",
                        s,
                    )


@_law(
    "scope-topology-subfamily",
    CORE,
    "scope-open sets are open, and hulls are the minimal scope-open neighbourhoods",
)
def _subfamily(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        ambient = s.space.topology.mask_set
        for u in f.tau_a:
            t.verify(u in ambient, f"scope-open {u:#x} is not open", s)
        for i in range(f.n):
            h = f.hulls[i]
            t.verify(h in f.tau_a_set, f"hull of point {i} is not scope-open", s)
            t.verify(bool((h >> i) & 1), f"hull of point {i} misses the point", s)
            for u in f.tau_a:
                if (u >> i) & 1:
                    t.verify(
                        not h & ~u,
                        f"hull of point {i} exceeds a scope-open set containing it",
                        s,
                    )


@_law(
    "transitive-scope-base-idempotent",
    CORE,
    "on transitive spaces scopes equal hulls and the closure is idempotent",
)
def _transitive_base(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        if not f.cls.transitive:
            continue
        t.verify(
            list(f.scopes) == list(f.hulls),
            "scopes and hulls differ on a transitive space",
            s,
        )
        for a in range(f.size):
            t.verify(
                f.cl[f.cl[a]] == f.cl[a],
                f"closure not idempotent on {a:#x} despite transitivity",
                s,
            )


@_law(
    "subspace-closure-trace",
    CORE,
    "subspace closure is the ambient closure cut to the carrier",
)
def _subspace_closure(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        for ym in range(1, f.size):
            sub = subspace(s, ym)
            positions = list(mask_indices(ym))
            fs = ctx.facts(sub)
            for a_sub in range(1 << len(positions)):
                a_orig = 0
                for k, p in enumerate(positions):
                    if (a_sub >> k) & 1:
                        a_orig |= 1 << p
                expect = 0
                for k, p in enumerate(positions):
                    if (f.cl[a_orig] >> p) & 1:
                        expect |= 1 << k
                t.verify(
                    fs.cl[a_sub] == expect,
                    f"subspace closure of {a_sub:#x} in carrier {ym:#x} is not the trace",
                    s,
                )


@_law(
    "subspace-topology-inclusion",
    CORE,
    "traces of scope-open sets are scope-open in the subspace, with equality when transitive",
)
def _subspace_tau(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        for ym in range(1, f.size):
            sub = subspace(s, ym)
            positions = list(mask_indices(ym))
            pos = {p: k for k, p in enumerate(positions)}
            fs = ctx.facts(sub)
            trace = set()
            for u in f.tau_a:
                m = 0
                for p in mask_indices(u & ym):
                    m |= 1 << pos[p]
                trace.add(m)
            t.verify(
                trace <= fs.tau_a_set,
                f"trace family escapes the subspace scope topology on carrier {ym:#x}",
                s,
            )
            if f.cls.transitive:
                t.verify(
                    trace == fs.tau_a_set,
                    f"transitive space has a strict trace on carrier {ym:#x}",
                    s,
                )


@_law(
    "product-closure-box",
    CORE,
    "closure of a box is the box of the closures",
)
def _product_closure(ctx: LawContext, t: _Tally) -> None:
    for sx, sy in ctx.factor_pairs():
        fx, fy = ctx.facts(sx), ctx.facts(sy)
        prod = ctx.product_of(sx, sy)
        fp = ctx.facts(prod)
        for a in range(fx.size):
            for b in range(fy.size):
                got = fp.cl[_box_mask(a, b, fy.n)]
                want = _box_mask(fx.cl[a], fy.cl[b], fy.n)
                t.verify(
                    got == want,
                    f"box closure mismatch on {a:#x} x {b:#x}",
                    prod,
                )


@_law(
    "product-topology-chain",
    CORE,
    "boxes of scope-open sets generate a subfamily of the product scope topology, inside the product topology",
)
def _product_chain(ctx: LawContext, t: _Tally) -> None:
    for sx, sy in ctx.factor_pairs():
        prod = ctx.product_of(sx, sy)
        fp = ctx.facts(prod)
        box_family = product_topology_of_factors(sx, sy).mask_set
        ambient = prod.space.topology.mask_set
        t.verify(
            box_family <= fp.tau_a_set,
            "box-generated family escapes the product scope topology",
            prod,
        )
        t.verify(
            fp.tau_a_set <= ambient,
            "product scope topology escapes the product topology",
            prod,
        )


@_law(
    "product-transitive-equality",
    CORE,
    "with transitive factors the box-generated family is the whole product scope topology",
)
def _product_equality(ctx: LawContext, t: _Tally) -> None:
    for sx, sy in ctx.factor_pairs():
        fx, fy = ctx.facts(sx), ctx.facts(sy)
        if not (fx.cls.transitive and fy.cls.transitive):
            continue
        prod = ctx.product_of(sx, sy)
        fp = ctx.facts(prod)
        box_family = product_topology_of_factors(sx, sy).mask_set
        t.verify(
            box_family == fp.tau_a_set,
            "transitive factors produced a strictly larger product scope topology",
            prod,
        )


@_law(
    "connected-characterizations",
    CORE,
    "no separation, no proper clopen set, and no onto two-point discrete map agree",
)
def _characterizations(ctx: LawContext, t: _Tally) -> None:
    two = ctx.discrete_pair
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        clopen_free = True
        for a in range(1, f.full):
            if a in f.tau_a_set and is_aura_closed(s, a):
                clopen_free = False
                break
        t.verify(
            f.connected == clopen_free,
            "separation verdict disagrees with the proper clopen scan",
            s,
        )
        splittable = False
        for images in itertools.product((0, 1), repeat=f.n):
            if len(set(images)) < 2:
                continue
            m = FiniteMap(s.universe, two.universe, images)
            if is_aura_continuous(m, s, two):
                splittable = True
                break
        t.verify(
            f.connected == (not splittable),
            "two-point discrete maps disagree with the separation verdict",
            s,
        )


@_law(
    "continuous-image-connected",
    CORE,
    "a continuous onto image of a connected space is connected",
)
def _image_connected(ctx: LawContext, t: _Tally) -> None:
    all_facts = [ctx.facts(s) for s in ctx.all_spaces()]
    connected_src = [f for f in all_facts if f.connected and f.n >= 1]
    broken_dst = [f for f in all_facts if not f.connected]
    for fs in connected_src:
        for fd in broken_dst:
            if fd.n > fs.n:
                continue
            t.verify(
                not ctx.has_continuous_surjection(fs, fd),
                "a continuous onto map lands a connected space on a disconnected one "
                f"with scopes {['{:#x}'.format(m) for m in fd.scopes]}",
                fs.space,
            )


@_law(
    "connected-union-common-point",
    CORE,
    "unions of connected subsets through a common point are connected",
)
def _union_common(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        conn = [a for a in f.conn_masks() if a]
        for a, b in itertools.combinations(conn, 2):
            if a & b:
                t.verify(
                    is_aura_connected(s, a | b),
                    f"union {a | b:#x} of overlapping connected sets is disconnected",
                    s,
                )
        if f.n >= 3:
            for a, b, c in itertools.combinations(conn, 3):
                if a & b & c:
                    t.verify(
                        is_aura_connected(s, a | b | c),
                        f"union {a | b | c:#x} of three connected sets through a common point is disconnected",
                        s,
                    )


@_law(
    "component-properties",
    CORE,
    "components are connected, maximal, closed, and partition the space",
)
def _components(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        union = 0
        for b in f.blocks:
            t.verify(is_aura_connected(s, b.mask), f"component {b.mask:#x} is disconnected", s)
            t.verify(is_aura_closed(s, b.mask), f"component {b.mask:#x} is not closed", s)
            t.verify(not union & b.mask, "components overlap", s)
            union |= b.mask
        t.verify(union == f.full, "components miss part of the space", s)
        block_masks = [b.mask for b in f.blocks]
        for c in f.conn_masks():
            if not c:
                continue
            inside = sum(1 for bm in block_masks if not c & ~bm)
            t.verify(
                inside == 1,
                f"connected set {c:#x} is not inside exactly one component",
                s,
            )


@_law(
    "locally-connected-open-components",
    CORE,
    "in a locally connected space every component is scope-open",
)
def _lc_open_components(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        if not is_aura_locally_connected(s):
            continue
        for b in f.blocks:
            t.verify(
                b.mask in f.tau_a_set,
                f"component {b.mask:#x} of a locally connected space is not scope-open",
                s,
            )


@_law(
    "transitive-local-connectivity",
    CORE,
    "a transitive space with connected scopes is locally connected",
)
def _transitive_lc(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        if not f.cls.transitive:
            continue
        if all(is_aura_connected(s, m) for m in f.scopes):
            t.verify(
                is_aura_locally_connected(s),
                "transitive space with connected scopes is not locally connected",
                s,
            )


@_law(
    "symmetric-transitive-local-connectivity",
    CORE,
    "with symmetry and transitivity, local connectedness means every scope is connected",
)
def _sym_trans_lc(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        if not (f.cls.transitive and f.cls.symmetric):
            continue
        lhs = is_aura_locally_connected(s)
        rhs = all(is_aura_connected(s, m) for m in f.scopes)
        t.verify(
            lhs == rhs,
            "local connectedness and scope connectedness split on a symmetric transitive space",
            s,
        )


@_law(
    "transitive-convergence-criterion",
    CORE,
    "eventual containment in the scope matches convergence on transitive spaces",
)
def _convergence(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        if f.n == 0:
            continue
        labels = s.universe.labels
        prefixes = [()] + [(i,) for i in range(f.n)] + list(itertools.product(range(f.n), repeat=2))
        cycles = [c for r in (1, 2, 3) for c in itertools.product(range(f.n), repeat=r)]
        for pfx in prefixes:
            for cyc in cycles:
                q = EvPSequence.from_labels(
                    s.universe,
                    [labels[i] for i in pfx],
                    [labels[i] for i in cyc],
                )
                for x in labels:
                    crit = transitive_criterion(s, q, x)
                    conv = converges_to(s, q, x)
                    t.verify(
                        not crit or conv,
                        f"criterion holds at {x} for {q.text()} without convergence",
                        s,
                    )
                    if f.cls.transitive:
                        t.verify(
                            crit == conv,
                            f"criterion and convergence split at {x} for {q.text()} on a transitive space",
                            s,
                        )


@_law(
    "fip-compactness-equivalence",
    CORE,
    "the finite intersection property shortcut matches the literal sub-list scan and compactness",
)
def _fip_law(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        t.verify(is_aura_compact(s), "finite space flagged non-compact", s)
        closed = f.closed_masks
        for size in range(0, min(4, len(closed)) + 1):
            for combo in itertools.combinations(closed, size):
                res = fip(s, [PointSet(s.universe, m) for m in combo])
                literal = True
                for r in range(len(combo) + 1):
                    for sub in itertools.combinations(combo, r):
                        inter = f.full
                        for m in sub:
                            inter &= m
                        if inter == 0:
                            literal = False
                            break
                    if not literal:
                        break
                t.verify(
                    res.fip_holds == literal,
                    f"shortcut disagrees with the literal scan on family {list(combo)}",
                    s,
                )
                t.verify(
                    res.fip_holds == res.intersection_nonempty,
                    f"family {list(combo)} has the property but an empty total intersection",
                    s,
                )


@_law(
    "separation-axiom-chain",
    CORE,
    "hull-based separation axioms match their definitions and chain downwards",
)
def _separation(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        t0 = t1 = t2 = True
        for i in range(f.n):
            for j in range(f.n):
                if i == j:
                    continue
                if (f.hulls[i] >> j) & 1 and (f.hulls[j] >> i) & 1:
                    t0 = False
                if (f.hulls[i] >> j) & 1:
                    t1 = False
                if i < j and f.hulls[i] & f.hulls[j]:
                    t2 = False
        t.verify(f.sep.t0 == t0, "t0 flag disagrees with the hull definition", s)
        t.verify(f.sep.t1 == (t1 and t0), "t1 flag disagrees with the hull definition", s)
        t.verify(f.sep.t2 == (t2 and t1 and t0), "t2 flag disagrees with the hull definition", s)
        t.verify(not f.sep.t2 or f.sep.t1, "t2 without t1", s)
        t.verify(not f.sep.t1 or f.sep.t0, "t1 without t0", s)


@_law(
    "t2-closed-subsets",
    CORE,
    "in a finite t2 space every subset is scope-closed",
)
def _t2_closed(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        if not f.sep.t2:
            continue
        for a in range(f.size):
            t.verify(
                is_aura_closed(s, a),
                f"subset {a:#x} of a t2 space is not closed",
                s,
            )


@_law(
    "generalized-open-hierarchy",
    CORE,
    "scope-open implies alpha, alpha implies semi and pre, and their union sits inside beta",
)
def _hierarchy(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        f = ctx.facts(s)
        fams = {
            cls: {ps.mask for ps in generalized_family(s, cls)}
            for cls in GeneralizedClass
        }
        alpha = fams[GeneralizedClass.ALPHA]
        semi = fams[GeneralizedClass.SEMI]
        pre = fams[GeneralizedClass.PRE]
        beta = fams[GeneralizedClass.BETA]
        t.verify(f.tau_a_set <= alpha, "a scope-open set is not alpha-open", s)
        t.verify(alpha <= semi & pre, "an alpha-open set is not both semi- and pre-open", s)
        t.verify(semi | pre <= beta, "a semi- or pre-open set is not beta-open", s)


@_law(
    "compact-chain-flags",
    CORE,
    "compactness, countable compactness, and the Lindelof property all hold on finite spaces",
)
def _compact_chain(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        compact = is_aura_compact(s, oracle=True)
        countable = is_countably_aura_compact(s, oracle=True)
        lindelof = is_aura_lindelof(s, oracle=True)
        t.verify(compact, "finite space flagged non-compact by the cover scan", s)
        t.verify(not compact or countable, "compact without countably compact", s)
        t.verify(not compact or lindelof, "compact without Lindelof", s)


@_law(
    "compact-implies-limit-finite",
    CORE,
    "compact finite spaces are limit point compact, vacuously",
)
def _compact_limit(ctx: LawContext, t: _Tally) -> None:
    for s in ctx.all_spaces():
        t.verify(
            not is_aura_compact(s) or is_aura_limit_point_compact(s, oracle=True),
            "compact space flagged not limit point compact",
            s,
        )


@_law(
    "continuous-image-compact",
    CORE,
    "a continuous onto image of a compact space is compact",
)
def _image_compact(ctx: LawContext, t: _Tally) -> None:
    all_facts = [ctx.facts(s) for s in ctx.all_spaces()]
    for fs in all_facts:
        if not is_aura_compact(fs.space):
            continue
        for fd in all_facts:
            if fd.n > fs.n or not ctx.has_continuous_surjection(fs, fd):
                continue
            t.verify(
                is_aura_compact(fd.space),
                "continuous onto image of a compact space flagged non-compact",
                fd.space,
            )


@_law(
    "projection-continuity",
    EXTENDED,
    "projections are continuous and onto, and pull compactness and connectedness back to the factors",
)
def _projections(ctx: LawContext, t: _Tally) -> None:
    for sx, sy in ctx.factor_pairs():
        prod = ctx.product_of(sx, sy)
        fp = ctx.facts(prod)
        nx, ny = sx.n, sy.n
        left = FiniteMap(prod.universe, sx.universe, [k // ny for k in range(nx * ny)])
        right = FiniteMap(prod.universe, sy.universe, [k % ny for k in range(nx * ny)])
        t.verify(is_aura_continuous(left, prod, sx), "left projection is not continuous", prod)
        t.verify(is_aura_continuous(right, prod, sy), "right projection is not continuous", prod)
        t.verify(left.is_surjective() and right.is_surjective(), "projection is not onto", prod)
        if fp.connected:
            t.verify(
                ctx.facts(sx).connected and ctx.facts(sy).connected,
                "connected product with a disconnected factor",
                prod,
            )
        if is_aura_compact(prod):
            t.verify(
                is_aura_compact(sx) and is_aura_compact(sy),
                "compact product with a non-compact factor",
                prod,
            )


@_law(
    "product-connected-factors",
    EXTENDED,
    "a product of nonempty spaces is connected exactly when both factors are",
)
def _product_connected(ctx: LawContext, t: _Tally) -> None:
    for sx, sy in ctx.factor_pairs():
        fx, fy = ctx.facts(sx), ctx.facts(sy)
        prod = ctx.product_of(sx, sy)
        fp = ctx.facts(prod)
        t.verify(
            fp.connected == (fx.connected and fy.connected),
            "product connectedness disagrees with the factors",
            prod,
        )


LAW_NAMES = tuple(law.name for law in LAWS)


def get_law(name: str) -> Law:
    for law in LAWS:
        if law.name == name:
            return law
    raise ValueError(f"unknown law {name!r}")


def run_laws(
    names: Optional[Iterable[str]] = None,
    tier: Optional[str] = None,
    max_n: int = MAX_LAW_SIZE,
    ctx: Optional[LawContext] = None,
) -> LawReport:
    """Run a selection of laws (default all) and collect outcomes."""
    selected = [get_law(n) for n in names] if names is not None else list(LAWS)
    if tier is not None:
        if tier not in (CORE, EXTENDED):
            raise ValueError(f"unknown law tier {tier!r}")
        selected = [law for law in selected if law.tier == tier]
    if ctx is None:
        ctx = LawContext(max_n)
    outcomes = []
    for law in selected:
        tally = _Tally(law.name)
        law.run(ctx, tally)
        outcomes.append(
            LawOutcome(
                name=law.name,
                tier=law.tier,
                checks=tally.checks,
                failed=tally.failed,
                failures=tuple(tally.messages),
            )
        )
    return LawReport(max_n=ctx.max_n, outcomes=outcomes)
