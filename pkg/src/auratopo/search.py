"""Exhaustive enumeration of small spaces and predicate search.

Spaces are enumerated as labeled topologies (via their specialization
preorders) times the full fiber of scope functions over each topology.
Searches and the implication matrix scan that grid in a fixed canonical
order, so reports are byte-stable regardless of worker count.
"""

from __future__ import annotations

import itertools
import random
import re
import string
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

from . import kernel
from .aura import AuraSpace, ScopeFunction, classify, separation_axioms
from .connectivity import (
    is_aura_connected,
    is_aura_locally_connected,
    is_aura_path_connected,
)
from .errors import SizeOutOfRange, UnknownAtom
from .finite import (
    FiniteTopSpace,
    PointSet,
    PointUniverse,
    TopologyFamily,
    family_key,
    is_tau_connected,
)

__all__ = [
    "ATOM_NAMES",
    "PredicateExpr",
    "parse_predicate",
    "enumerate_topologies",
    "enumerate_auras",
    "search",
    "implication_matrix",
    "SearchReport",
    "Witness",
]

MAX_FULL_SIZE = 4
MAX_SIZE = 5

_LABELS = string.ascii_lowercase


def _labels(n: int) -> Tuple[str, ...]:
    return tuple(_LABELS[:n])


def enumerate_topologies(n: int) -> List[FiniteTopSpace]:
    """All labeled topologies on n points, canonically ordered.

    Counts for n = 0..5 are 1, 1, 4, 29, 355, 6942.
    """
    if n < 0 or n > MAX_SIZE:
        raise SizeOutOfRange(f"topology enumeration supports 0..{MAX_SIZE} points, got {n}")
    universe = PointUniverse(_labels(n))
    families = []
    for rows in kernel.enumerate_preorders(n):
        masks = set(kernel.union_closure(rows))
        masks.add(0)
        families.append(TopologyFamily(universe, masks, validate=False))
    families.sort(key=lambda fam: fam.canonical_key())
    return [FiniteTopSpace(universe, fam) for fam in families]


def _fiber_choices(space: FiniteTopSpace) -> List[List[int]]:
    opens = sorted(space.topology.mask_set, key=family_key)
    return [[m for m in opens if (m >> i) & 1] for i in range(space.universe.n)]


def enumerate_auras(space: FiniteTopSpace):
    """Every scope function over the space, in lexicographic order of the
    per-point open-set choices."""
    choices = _fiber_choices(space)
    for picks in itertools.product(*choices):
        yield AuraSpace(space, ScopeFunction(space.universe, picks))


def count_auras(space: FiniteTopSpace) -> int:
    count = 1
    for c in _fiber_choices(space):
        count *= len(c)
    return count


# ---------------------------------------------------------------------------
# predicate atoms

def _cl_idempotent(s: AuraSpace) -> bool:
    n = s.n
    scopes = s.scope_masks
    for a in range(1 << n):
        once = kernel.aura_closure_mask(n, scopes, a)
        if kernel.aura_closure_mask(n, scopes, once) != once:
            return False
    return True


def _tau_a_equals_tau(s: AuraSpace) -> bool:
    return set(s.aura_topology_masks) == s.space.topology.mask_set


def _tau_a_indiscrete(s: AuraSpace) -> bool:
    full = s.universe.full_mask
    return set(s.aura_topology_masks) == {0, full}


ATOMS = {
    "transitive": lambda s: classify(s).transitive,
    "symmetric": lambda s: classify(s).symmetric,
    "trivial": lambda s: classify(s).trivial,
    "discrete": lambda s: classify(s).discrete,
    "tauConnected": lambda s: is_tau_connected(s.space),
    "aConnected": is_aura_connected,
    "aPathConnected": is_aura_path_connected,
    "aLocallyConnected": is_aura_locally_connected,
    "aT0": lambda s: separation_axioms(s).t0,
    "aT1": lambda s: separation_axioms(s).t1,
    "aT2": lambda s: separation_axioms(s).t2,
    "clIdempotent": _cl_idempotent,
    "tauAEqualsTau": _tau_a_equals_tau,
    "tauAIndiscrete": _tau_a_indiscrete,
}

ATOM_NAMES = tuple(ATOMS)


class _Valuation:
    """Lazy memo of atom values on one space."""

    __slots__ = ("space", "values")

    def __init__(self, space: AuraSpace):
        self.space = space
        self.values = {}

    def get(self, atom: str) -> bool:
        if atom not in self.values:
            self.values[atom] = ATOMS[atom](self.space)
        return self.values[atom]


# ---------------------------------------------------------------------------
# predicate expressions: and/or/not (also &, |, !) over named atoms

class PredicateExpr:
    def __init__(self, text: str, atoms: Tuple[str, ...], fn: Callable):
        self.text = text
        self.atoms = atoms
        self._fn = fn

    def evaluate(self, valuation: _Valuation) -> bool:
        return self._fn(valuation)

    def holds_on(self, space: AuraSpace) -> bool:
        return self.evaluate(_Valuation(space))


_TOKEN = re.compile(r"\s*(\(|\)|&{1,2}|\|{1,2}|!|\w+)")


def _tokenize(text: str) -> List[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad character in predicate at offset {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_predicate(text: str) -> PredicateExpr:
    tokens = _tokenize(text)
    pos = 0
    atoms: set = set()

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_or():
        node = parse_and()
        while peek() in ("or", "|", "||"):
            take()
            rhs = parse_and()
            node = (lambda l, r: lambda v: l(v) or r(v))(node, rhs)
        return node

    def parse_and():
        node = parse_unary()
        while peek() in ("and", "&", "&&"):
            take()
            rhs = parse_unary()
            node = (lambda l, r: lambda v: l(v) and r(v))(node, rhs)
        return node

    def parse_unary():
        tok = peek()
        if tok in ("not", "!"):
            take()
            inner = parse_unary()
            return lambda v: not inner(v)
        if tok == "(":
            take()
            inner = parse_or()
            if take() != ")":
                raise ValueError("unbalanced parenthesis in predicate")
            return inner
        if tok is None:
            raise ValueError("predicate ended unexpectedly")
        take()
        if tok in (")", "and", "or", "&", "|", "&&", "||"):
            raise ValueError(f"misplaced {tok!r} in predicate")
        if tok not in ATOMS:
            raise UnknownAtom(tok)
        atoms.add(tok)
        return (lambda name: lambda v: v.get(name))(tok)

    fn = parse_or()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in predicate: {' '.join(tokens[pos:])}")
    return PredicateExpr(text, tuple(a for a in ATOM_NAMES if a in atoms), fn)


# ---------------------------------------------------------------------------
# reports

def space_descriptor(s: AuraSpace) -> str:
    universe = s.universe
    opens = ",".join(
        PointSet(universe, m).text()
        for m in sorted(s.space.topology.mask_set, key=family_key)
    )
    scopes = " ".join(
        f"{lab}:{PointSet(universe, m).text()}"
        for lab, m in zip(universe.labels, s.scope_masks)
    )
    return f"points {','.join(universe.labels)} | opens {opens} | scopes {scopes}"


def _space_json(s: AuraSpace) -> dict:
    universe = s.universe
    return {
        "points": list(universe.labels),
        "opens": [
            sorted(PointSet(universe, m).labels())
            for m in sorted(s.space.topology.mask_set, key=family_key)
        ],
        "aura": {
            lab: sorted(PointSet(universe, m).labels())
            for lab, m in zip(universe.labels, s.scope_masks)
        },
    }


@dataclass
class Witness:
    topology_index: int
    aura_index: int
    descriptor: str
    document: dict
    valuation: dict

    def to_json(self) -> dict:
        return {
            "topologyIndex": self.topology_index,
            "auraIndex": self.aura_index,
            "space": self.document,
            "valuation": self.valuation,
        }


@dataclass
class SearchReport:
    command: str
    size: int
    spaces_scanned: int
    expression: Optional[str] = None
    witnesses: List[Witness] = field(default_factory=list)
    implications: Optional[dict] = None
    product_scan: Optional[str] = None
    seed: Optional[int] = None
    samples: Optional[int] = None

    def found(self) -> bool:
        return bool(self.witnesses)

    def lines(self) -> List[str]:
        out = [f"command: {self.command}", f"size: {self.size}"]
        if self.expression is not None:
            out.append(f"expression: {self.expression}")
        if self.seed is not None:
            out.append(f"sampling: {self.samples} spaces with seed {self.seed}")
        out.append(f"spaces scanned: {self.spaces_scanned}")
        if self.expression is not None:
            out.append(f"witnesses: {len(self.witnesses)}")
            for i, w in enumerate(self.witnesses, start=1):
                out.append(f"witness {i}: {w.descriptor}")
                vals = " ".join(f"{k}={str(v).lower()}" for k, v in w.valuation.items())
                out.append(f"  valuation: {vals}")
        if self.implications is not None:
            out.append(f"atoms: {' '.join(ATOM_NAMES)}")
            out.append("implications:")
            for (p, q), verdict in self.implications.items():
                if verdict is None:
                    out.append(f"  {p} => {q}: holds")
                else:
                    out.append(f"  {p} => {q}: fails | witness: {verdict.descriptor}")
        if self.product_scan is not None:
            out.append(f"product scan: {self.product_scan}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines())

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "size": self.size,
            "spacesScanned": self.spaces_scanned,
        }
        if self.expression is not None:
            out["expression"] = self.expression
            out["witnesses"] = [w.to_json() for w in self.witnesses]
        if self.seed is not None:
            out["seed"] = self.seed
            out["samples"] = self.samples
        if self.implications is not None:
            out["implications"] = {
                f"{p} => {q}": (None if w is None else w.to_json())
                for (p, q), w in self.implications.items()
            }
        if self.product_scan is not None:
            out["productScan"] = self.product_scan
        return out


# ---------------------------------------------------------------------------
# scanning

def _scan_topology(space: FiniteTopSpace, topo_index: int, expr: PredicateExpr,
                   record: bool) -> Tuple[int, List[Witness]]:
    found = []
    scanned = 0
    for aura_index, s in enumerate(enumerate_auras(space)):
        scanned += 1
        valuation = _Valuation(s)
        if expr.evaluate(valuation):
            vals = {a: valuation.get(a) for a in expr.atoms}
            if record:
                found.append(Witness(topo_index, aura_index, space_descriptor(s),
                                     _space_json(s), vals))
    return scanned, found


def _search_worker(args) -> Tuple[int, List[Witness]]:
    n, expr_text, worker, workers = args
    expr = parse_predicate(expr_text)
    topologies = enumerate_topologies(n)
    scanned = 0
    found: List[Witness] = []
    for ti in range(worker, len(topologies), workers):
        got, wit = _scan_topology(topologies[ti], ti, expr, record=True)
        scanned += got
        found.extend(wit)
    return scanned, found


def _run_partitioned(n: int, expr_text: str, workers: int) -> Tuple[int, List[Witness]]:
    jobs = [(n, expr_text, w, workers) for w in range(workers)]
    if workers <= 1:
        results = [_search_worker(jobs[0])]
    else:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_search_worker, jobs)
    scanned = sum(r[0] for r in results)
    witnesses = [w for r in results for w in r[1]]
    witnesses.sort(key=lambda w: (w.topology_index, w.aura_index))
    return scanned, witnesses


def search(n: int, expression: str, limit: Optional[int] = None, workers: int = 1,
           allow_large: bool = False, samples: Optional[int] = None,
           seed: int = 0) -> SearchReport:
    """Scan every space of the given size for the predicate.

    Size 5 needs either ``samples`` (seeded random scan) or ``allow_large``
    (full scan; the fiber count is in the millions).  The whole grid is
    always scanned so reports do not depend on worker count.
    """
    expr = parse_predicate(expression)
    if n < 0 or n > MAX_SIZE:
        raise SizeOutOfRange(f"search supports sizes 0..{MAX_SIZE}, got {n}")
    if n > MAX_FULL_SIZE and samples is None and not allow_large:
        raise SizeOutOfRange(
            f"full scans are capped at {MAX_FULL_SIZE} points; pass samples= "
            "for a seeded scan or allow_large=True to force it"
        )

    if samples is not None:
        return _sampled_search(n, expr, samples, seed, limit)

    scanned, witnesses = _run_partitioned(n, expression, workers)
    if limit is not None:
        witnesses = witnesses[:limit]
    return SearchReport("search", n, scanned, expression=expression,
                        witnesses=witnesses)


def _sampled_search(n: int, expr: PredicateExpr, samples: int, seed: int,
                    limit: Optional[int]) -> SearchReport:
    rng = random.Random(seed)
    topologies = enumerate_topologies(n)
    witnesses = []
    for k in range(samples):
        ti = rng.randrange(len(topologies))
        space = topologies[ti]
        choices = _fiber_choices(space)
        picks = tuple(c[rng.randrange(len(c))] for c in choices)
        s = AuraSpace(space, ScopeFunction(space.universe, picks))
        valuation = _Valuation(s)
        if expr.evaluate(valuation):
            vals = {a: valuation.get(a) for a in expr.atoms}
            witnesses.append(Witness(ti, k, space_descriptor(s), _space_json(s), vals))
    if limit is not None:
        witnesses = witnesses[:limit]
    return SearchReport("search", n, samples, expression=expr.text,
                        witnesses=witnesses, seed=seed, samples=samples)


# ---------------------------------------------------------------------------
# implication matrix

def _matrix_worker(args) -> Tuple[int, dict]:
    n, worker, workers = args
    topologies = enumerate_topologies(n)
    scanned = 0
    first: dict = {}
    for ti in range(worker, len(topologies), workers):
        space = topologies[ti]
        for aura_index, s in enumerate(enumerate_auras(space)):
            scanned += 1
            valuation = _Valuation(s)
            vals = {a: valuation.get(a) for a in ATOM_NAMES}
            wit = None
            for p in ATOM_NAMES:
                if not vals[p]:
                    continue
                for q in ATOM_NAMES:
                    if p == q or vals[q]:
                        continue
                    key = (p, q)
                    prev = first.get(key)
                    if prev is None or (ti, aura_index) < prev[:2]:
                        if wit is None:
                            wit = Witness(ti, aura_index, space_descriptor(s),
                                          _space_json(s), {})
                        first[key] = (ti, aura_index, wit, vals)
    return scanned, first


def _product_pair_pool() -> List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    pool = []
    for n in (2, 3):
        for space in enumerate_topologies(n):
            for s in enumerate_auras(space):
                pool.append((n, s.scope_masks, tuple(sorted(s.aura_topology_masks))))
    return pool


def _box_mask(left: int, right: int, ny: int) -> int:
    mask = 0
    for i in range(left.bit_length()):
        if (left >> i) & 1:
            mask |= right << (i * ny)
    return mask


_PRODUCT_SCAN_CACHE: Optional[str] = None


def product_strictness_scan() -> str:
    """Compare the product scope topology with the closure of open boxes over
    every ordered pair of 2- and 3-point factors, and say whether any pair
    separates them."""
    global _PRODUCT_SCAN_CACHE
    if _PRODUCT_SCAN_CACHE is not None:
        return _PRODUCT_SCAN_CACHE
    pool = _product_pair_pool()
    pairs = 0
    strict = 0
    for nx, scopes_x, tau_x in pool:
        for ny, scopes_y, tau_y in pool:
            pairs += 1
            prod_scopes = []
            for i in range(nx):
                for j in range(ny):
                    prod_scopes.append(_box_mask(scopes_x[i], scopes_y[j], ny))
            tau_prod = set(kernel.tau_a_masks(nx * ny, tuple(prod_scopes)))
            boxes = [_box_mask(u, v, ny) for u in tau_x for v in tau_y if u and v]
            box_topo = set(kernel.union_closure(tuple(boxes)))
            box_topo.add(0)
            if tau_prod != box_topo:
                strict += 1
    if strict:
        msg = (f"product scope topology differs from the box closure on "
               f"{strict} of {pairs} factor pairs")
    else:
        msg = (f"product scope topology equals the box closure on all "
               f"{pairs} ordered pairs of 2- and 3-point factors")
    _PRODUCT_SCAN_CACHE = msg
    return msg


def implication_matrix(n: int, workers: int = 1) -> SearchReport:
    """First-witness matrix for every ordered atom pair at the given size."""
    if n < 0 or n > MAX_FULL_SIZE:
        raise SizeOutOfRange(f"matrix supports sizes 0..{MAX_FULL_SIZE}, got {n}")
    jobs = [(n, w, workers) for w in range(workers)]
    if workers <= 1:
        results = [_matrix_worker(jobs[0])]
    else:
        import multiprocessing

        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_matrix_worker, jobs)

    scanned = sum(r[0] for r in results)
    merged: dict = {}
    for _, first in results:
        for key, entry in first.items():
            prev = merged.get(key)
            if prev is None or entry[:2] < prev[:2]:
                merged[key] = entry

    implications = {}
    for p in ATOM_NAMES:
        for q in ATOM_NAMES:
            if p == q:
                continue
            entry = merged.get((p, q))
            if entry is None:
                implications[(p, q)] = None
            else:
                _, _, wit, vals = entry
                witness = Witness(wit.topology_index, wit.aura_index,
                                  wit.descriptor, wit.document,
                                  {p: True, q: False})
                implications[(p, q)] = witness

    return SearchReport("matrix", n, scanned, implications=implications,
                        product_scan=product_strictness_scan())
