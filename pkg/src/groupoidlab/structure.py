"""Subset structure: subgroupoids, ideals, normality, simplicity, Smarandache.

Subsets are handled as bitmasks over the groupoid's canonical element order
(bit i = element i). Enumerations scan masks by increasing cardinality and
then ascending mask value, so every reported witness is the first one under
that fixed order and reruns are reproducible.

Conventions (documented once here, used consistently):

* subgroupoid: nonempty proper closed subset (singletons allowed);
* left ideal P: closed and P*G ⊆ P; right ideal: closed and G*P ⊆ P;
* normal subgroupoid V: closed proper subset whose left and right translate
  sets agree for every element of the carrier (aV = Va as sets for all a in
  G, not just a in V).  Coset-product equations such as (Vx)y = V(xy) are
  deliberately NOT part of the test: translations here are generally
  non-injective, so those products collapse to sets of different sizes even
  on the families that motivate the concept, and requiring them would reject
  the canonical frozen witness {0,2,4,6} in the order-8 pair (2,6).  Size
  >= 2 is required to count against simplicity (singletons and the full set
  are trivial);
* Smarandache witness: a proper closed subset that is a semigroup and
  contains a nonzero element (the zero singleton is too degenerate to count;
  nonzero singletons do count). Identity-bearing witnesses additionally
  require size >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .carrier import CarrierError
from .groupoid import BudgetExceeded, Groupoid
from .identities import CheckMode, IdentityId, IdentityVerdict, TEMPLATES, check_identity, eval_tree
from .shape import Element, TooLarge, element_is_pure_indeterminate, element_has_indeterminate

DEFAULT_MAX_ORDER = 20
DEFAULT_CLOSURE_MAX_ORDER = 4096
_NORMALITY_ORDER_CAP = 1024


@dataclass(frozen=True, order=True)
class SubsetHandle:
    indices: tuple[int, ...]
    labels: tuple[str, ...] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.indices)

    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m

    def to_json(self) -> list[str]:
        return list(self.labels)


def _order_or_raise(g: Groupoid, cap: int, what: str) -> int:
    order = g.order
    if isinstance(order, TooLarge) or order > cap:
        raise BudgetExceeded(f"{what} needs order <= {cap}, got {order}")
    return order


def _handle_from_mask(g: Groupoid, mask: int) -> SubsetHandle:
    labels = g.labels()
    idx = tuple(i for i in range(len(labels)) if mask >> i & 1)
    return SubsetHandle(indices=idx, labels=tuple(labels[i] for i in idx))


def subset_handle(g: Groupoid, subset: Iterable) -> SubsetHandle:
    """Normalise a subset given as indices, labels, or elements."""
    labels = g.labels()
    pos = {lab: i for i, lab in enumerate(labels)}
    out: set[int] = set()
    for item in subset:
        if isinstance(item, bool):
            raise CarrierError("subset items must be indices, labels, or elements")
        if isinstance(item, int):
            if not 0 <= item < len(labels):
                raise CarrierError(f"index out of range: {item}")
            out.add(item)
        elif isinstance(item, str):
            if item not in pos:
                raise CarrierError(f"unknown element label: {item!r}")
            out.add(pos[item])
        else:
            out.add(g.element_index(item))
    idx = tuple(sorted(out))
    return SubsetHandle(indices=idx, labels=tuple(labels[i] for i in idx))


# -- bitmask machinery --------------------------------------------------------


def _closed_flags(table: Sequence[Sequence[int]], n: int) -> list[bool]:
    """closed[m] for every mask, via an incremental product-set recurrence."""
    size = 1 << n
    need = [0] * size
    closed = [False] * size
    for m in range(1, size):
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        acc = need[rest] | (1 << table[v][v])
        w_m = rest
        while w_m:
            wl = w_m & -w_m
            w = wl.bit_length() - 1
            acc |= (1 << table[v][w]) | (1 << table[w][v])
            w_m ^= wl
        need[m] = acc
        closed[m] = (acc & ~m) == 0
    return closed

def _absorb_flags(table: Sequence[Sequence[int]], n: int, side: str) -> list[bool]:
    """absorb[m]: every product of a subset member with any element stays inside.

    side "left": subset member on the left (P*G); "right": member on the right.
    """
    size = 1 << n
    member_mask = [0] * n
    for v in range(n):
        acc = 0
        for x in range(n):
            acc |= 1 << (table[v][x] if side == "left" else table[x][v])
        member_mask[v] = acc
    need = [0] * size
    flags = [False] * size
    for m in range(1, size):
        low = m & -m
        v = low.bit_length() - 1
        need[m] = need[m ^ low] | member_mask[v]
        flags[m] = (need[m] & ~m) == 0
    return flags


def _iter_masks_by_size(n: int, sizes: Iterable[int]) -> Iterator[int]:
    """All masks of each requested popcount, ascending mask value."""
    import itertools

    for k in sizes:
        for combo in itertools.combinations(range(n), k):
            m = 0
            for i in combo:
                m |= 1 << i
            yield m


def _masks_sorted(masks: Iterable[int]) -> list[int]:
    return sorted(masks, key=lambda m: (bin(m).count("1"), m))


def _subset_semigroup(table: Sequence[Sequence[int]], idx: Sequence[int]) -> bool:
    s = set(idx)
    for a in idx:
        for b in idx:
            if table[a][b] not in s:
                return False
    for a in idx:
        for b in idx:
            for c in idx:
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return False
    return True


def _subset_identity_holds(
    table: Sequence[Sequence[int]], idx: Sequence[int], identity: IdentityId
) -> bool:
    lhs_t, rhs_t, vars_ = TEMPLATES[identity]
    prod = lambda a, b: table[a][b]  # noqa: E731
    if len(vars_) == 1:
        pools = ((x,) for x in idx)
    elif len(vars_) == 2:
        pools = ((x, y) for y in idx for x in idx)
    else:
        pools = ((x, y, z) for z in idx for y in idx for x in idx)
    for assign in pools:
        env = dict(zip(vars_, assign))
        if eval_tree(lhs_t, env, prod) != eval_tree(rhs_t, env, prod):
            return False
    return True


def _subset_normal(table: Sequence[Sequence[int]], idx: Sequence[int]) -> bool:
    """aV = Va as sets, with a ranging over the whole carrier (see module doc)."""
    for a in range(len(table)):
        left = {table[a][v] for v in idx}
        right = {table[v][a] for v in idx}
        if left != right:
            return False
    return True


def identity_holds_on_subset(g: Groupoid, subset: Iterable, identity: IdentityId) -> bool:
    """Evaluate one identity with all variables restricted to the subset."""
    handle = subset if isinstance(subset, SubsetHandle) else subset_handle(g, subset)
    return _subset_identity_holds(g.index_table(), handle.indices, identity)


# -- classification -----------------------------------------------------------


@dataclass(frozen=True)
class SubsetClassification:
    handle: SubsetHandle
    closed: bool
    subgroupoid: bool
    left_ideal: bool
    right_ideal: bool
    two_sided_ideal: bool
    semigroup: bool
    normal_subgroupoid: bool
    pure_neutrosophic: bool
    pseudo: bool

    def to_json(self) -> dict:
        return {
            "subset": self.handle.to_json(),
            "closed": self.closed,
            "subgroupoid": self.subgroupoid,
            "left_ideal": self.left_ideal,
            "right_ideal": self.right_ideal,
            "two_sided_ideal": self.two_sided_ideal,
            "semigroup": self.semigroup,
            "normal_subgroupoid": self.normal_subgroupoid,
            "pure_neutrosophic": self.pure_neutrosophic,
            "pseudo": self.pseudo,
        }


def classify_subset(g: Groupoid, subset: Iterable, *, max_order: int = _NORMALITY_ORDER_CAP) -> SubsetClassification:
    order = _order_or_raise(g, max_order, "subset classification")
    handle = subset if isinstance(subset, SubsetHandle) else subset_handle(g, subset)
    idx = handle.indices
    if not idx:
        raise CarrierError("subset must be nonempty")
    table = g.index_table()
    s = set(idx)

    closed = all(table[a][b] in s for a in idx for b in idx)
    proper = len(idx) < order
    left = proper and all(table[a][x] in s for a in idx for x in range(order))
    right = proper and all(table[x][a] in s for a in idx for x in range(order))
    semigroup = closed and _subset_semigroup(table, idx)
    normal = closed and proper and _subset_normal(table, idx)

    pure = False
    pseudo = False
    if g.spec is not None and g.spec.carrier.has_indeterminate:
        els = g.elements()
        carrier = g.spec.carrier
        members = [els[i] for i in idx]
        pure = all(
            element_is_pure_indeterminate(carrier, e) or all(carrier.is_zero(v) for v in e)
            for e in members
        )
        pseudo = closed and not any(element_has_indeterminate(carrier, e) for e in members)

    return SubsetClassification(
        handle=handle,
        closed=closed,
        subgroupoid=closed and proper,
        left_ideal=left,
        right_ideal=right,
        two_sided_ideal=left and right,
        semigroup=semigroup,
        normal_subgroupoid=normal,
        pure_neutrosophic=pure,
        pseudo=pseudo,
    )


# -- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    subsets: tuple[SubsetHandle, ...]
    strategy: str  # power-set | generated-closure
    complete: bool

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "complete": self.complete,
            "subsets": [h.to_json() for h in self.subsets],
        }


def enumerate_subgroupoids(
    g: Groupoid,
    strategy: str | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    closure_max_order: int = DEFAULT_CLOSURE_MAX_ORDER,
) -> EnumerationResult:
    """All nonempty proper closed subsets (power-set route, order <= max_order),
    or the closures of all generating sets of size <= 2 (generated-closure
    route, a complete list of the 1- and 2-generated subgroupoids)."""
    order = g.order
    if strategy is None:
        if not isinstance(order, TooLarge) and order <= max_order:
            strategy = "power-set"
        elif not isinstance(order, TooLarge) and order <= closure_max_order:
            strategy = "generated-closure"
        else:
            raise BudgetExceeded(
                f"order {order} exceeds the generated-closure cap {closure_max_order}"
            )

    if strategy == "power-set":
        n = _order_or_raise(g, max_order, "power-set enumeration")
        table = g.index_table()
        closed = _closed_flags(table, n)
        masks = [m for m in range(1, (1 << n) - 1) if closed[m]]
        handles = tuple(_handle_from_mask(g, m) for m in _masks_sorted(masks))
        return EnumerationResult(subsets=handles, strategy="power-set", complete=True)

    if strategy == "generated-closure":
        n = _order_or_raise(g, closure_max_order, "generated-closure enumeration")
        table = g.index_table()
        found: set[tuple[int, ...]] = set()
        gens = [(i,) for i in range(n)] + [
            (i, j) for i in range(n) for j in range(i + 1, n)
        ]
        for gen in gens:
            s = set(gen)
            frontier = list(gen)
            while frontier:
                nxt: list[int] = []
                for a in list(s):
                    for b in frontier:
                        for c in (table[a][b], table[b][a]):
                            if c not in s:
                                s.add(c)
                                nxt.append(c)
                for a in frontier:
                    for b in frontier:
                        c = table[a][b]
                        if c not in s:
                            s.add(c)
                            nxt.append(c)
                frontier = nxt
            if len(s) < n:
                found.add(tuple(sorted(s)))
        handles = tuple(
            SubsetHandle(indices=idx, labels=tuple(g.labels()[i] for i in idx))
            for idx in sorted(found, key=lambda t: (len(t), t))
        )
        return EnumerationResult(subsets=handles, strategy="generated-closure", complete=False)

    raise CarrierError(f"unknown enumeration strategy: {strategy!r}")


@dataclass(frozen=True)
class IdealSets:
    left: tuple[SubsetHandle, ...]
    right: tuple[SubsetHandle, ...]
    two_sided: tuple[SubsetHandle, ...]

    def to_json(self) -> dict:
        return {
            "left": [h.to_json() for h in self.left],
            "right": [h.to_json() for h in self.right],
            "two_sided": [h.to_json() for h in self.two_sided],
        }


def enumerate_ideals(g: Groupoid, *, max_order: int = DEFAULT_MAX_ORDER) -> IdealSets:
    """All left/right/two-sided ideals (proper nonempty absorbing subsets)."""
    n = _order_or_raise(g, max_order, "ideal enumeration")
    table = g.index_table()
    absL = _absorb_flags(table, n, "left")
    absR = _absorb_flags(table, n, "right")
    full = (1 << n) - 1
    left_masks = [m for m in range(1, full) if absL[m]]
    right_masks = [m for m in range(1, full) if absR[m]]
    two_masks = [m for m in left_masks if absR[m]]
    return IdealSets(
        left=tuple(_handle_from_mask(g, m) for m in _masks_sorted(left_masks)),
        right=tuple(_handle_from_mask(g, m) for m in _masks_sorted(right_masks)),
        two_sided=tuple(_handle_from_mask(g, m) for m in _masks_sorted(two_masks)),
    )


# -- simplicity and normality -------------------------------------------------


@dataclass(frozen=True)
class SimpleVerdict:
    simple: bool
    witness: SubsetHandle | None
    complete: bool

    def to_json(self) -> dict:
        return {
            "simple": self.simple,
            "witness": self.witness.to_json() if self.witness else None,
            "complete": self.complete,
        }


def find_normal_subgroupoids(
    g: Groupoid, *, max_order: int = DEFAULT_MAX_ORDER, first_only: bool = False
) -> list[SubsetHandle]:
    """Proper normal subgroupoids of size >= 2, in canonical subset order."""
    n = _order_or_raise(g, max_order, "normal subgroupoid search")
    table = g.index_table()
    closed = _closed_flags(table, n)
    out: list[SubsetHandle] = []
    candidates = [
        m
        for m in range(1, (1 << n) - 1)
        if closed[m] and bin(m).count("1") >= 2
    ]
    for m in _masks_sorted(candidates):
        idx = tuple(i for i in range(n) if m >> i & 1)
        if _subset_normal(table, idx):
            out.append(SubsetHandle(indices=idx, labels=tuple(g.labels()[i] for i in idx)))
            if first_only:
                break
    return out


def is_simple(
    g: Groupoid,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    closure_max_order: int = DEFAULT_CLOSURE_MAX_ORDER,
) -> SimpleVerdict:
    """No proper normal subgroupoid of size >= 2. Above max_order the search
    falls back to 1-/2-generated subgroupoids and a clean result is flagged
    as incomplete."""
    order = g.order
    if not isinstance(order, TooLarge) and order <= max_order:
        found = find_normal_subgroupoids(g, max_order=max_order, first_only=True)
        if found:
            return SimpleVerdict(simple=False, witness=found[0], complete=True)
        return SimpleVerdict(simple=True, witness=None, complete=True)
    enum = enumerate_subgroupoids(
        g, "generated-closure", closure_max_order=closure_max_order
    )
    table = g.index_table()
    for h in enum.subsets:
        if h.size >= 2 and _subset_normal(table, h.indices):
            return SimpleVerdict(simple=False, witness=h, complete=True)
    return SimpleVerdict(simple=True, witness=None, complete=False)


def is_normal_groupoid(g: Groupoid, *, max_order: int = _NORMALITY_ORDER_CAP) -> bool:
    """The whole groupoid satisfies the normality laws over all of G."""
    n = _order_or_raise(g, max_order, "normal groupoid check")
    table = g.index_table()
    everything = range(n)
    for a in everything:
        if {table[a][v] for v in everything} != {table[v][a] for v in everything}:
            return False
    for x in everything:
        for y in everything:
            xy = table[x][y]
            if {table[table[v][x]][y] for v in everything} != {table[v][xy] for v in everything}:
                return False
            yx = table[y][x]
            if {table[y][table[x][v]] for v in everything} != {table[yx][v] for v in everything}:
                return False
    return True


# -- Smarandache --------------------------------------------------------------


@dataclass(frozen=True)
class SmarandacheVerdict:
    status: str  # s_groupoid | strong_holds | holds_on_semigroup_witness |
    #              s_groupoid_only | not_smarandache
    s_witness: SubsetHandle | None = None
    identity_witness: SubsetHandle | None = None
    identity_verdict: IdentityVerdict | None = None

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        out["s_witness"] = self.s_witness.to_json() if self.s_witness else None
        if self.identity_verdict is not None:
            out["identity"] = self.identity_verdict.to_json()
            out["identity_witness"] = (
                self.identity_witness.to_json() if self.identity_witness else None
            )
        return out


def _semigroup_witness_masks(g: Groupoid, n: int) -> Iterator[int]:
    """Proper closed semigroup subsets containing a nonzero element, in order."""
    table = g.index_table()
    closed = _closed_flags(table, n)
    zero = g.zero_index()
    for m in _masks_sorted(m for m in range(1, (1 << n) - 1) if closed[m]):
        if zero is not None and m == (1 << zero):
            continue
        idx = tuple(i for i in range(n) if m >> i & 1)
        if _subset_semigroup(table, idx):
            yield m


def smarandache(
    g: Groupoid,
    identity: IdentityId | None = None,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    budget: int | None = None,
) -> SmarandacheVerdict:
    """Smarandache detection, optionally relative to an identity.

    Without an identity: is there a proper closed semigroup subset with a
    nonzero element? With one: strong_holds when the identity holds on all of
    G and G has such a witness; holds_on_semigroup_witness when the identity
    fails globally but holds on some witness of size >= 2; s_groupoid_only
    when only the bare witness exists; not_smarandache otherwise.
    """
    n = _order_or_raise(g, max_order, "Smarandache analysis")
    s_mask = next(_semigroup_witness_masks(g, n), None)
    s_handle = _handle_from_mask(g, s_mask) if s_mask is not None else None

    if identity is None:
        status = "s_groupoid" if s_handle else "not_smarandache"
        return SmarandacheVerdict(status=status, s_witness=s_handle)

    verdict = check_identity(g, identity, CheckMode.EXHAUSTIVE, budget=budget)
    if s_handle is None:
        return SmarandacheVerdict(
            status="not_smarandache", s_witness=None, identity_verdict=verdict
        )
    if verdict.holds:
        return SmarandacheVerdict(
            status="strong_holds", s_witness=s_handle, identity_verdict=verdict
        )
    table = g.index_table()
    for m in _semigroup_witness_masks(g, n):
        if bin(m).count("1") < 2:
            continue
        idx = tuple(i for i in range(n) if m >> i & 1)
        if _subset_identity_holds(table, idx, identity):
            return SmarandacheVerdict(
                status="holds_on_semigroup_witness",
                s_witness=s_handle,
                identity_witness=_handle_from_mask(g, m),
                identity_verdict=verdict,
            )
    return SmarandacheVerdict(
        status="s_groupoid_only", s_witness=s_handle, identity_verdict=verdict
    )


# -- conjugacy and homomorphisms ----------------------------------------------


@dataclass(frozen=True)
class ConjugacyVerdict:
    conjugate: bool
    witness_label: str | None
    side: str | None  # left: H = x*K, right: H = K*x
    disjoint: bool

    def to_json(self) -> dict:
        return {
            "conjugate": self.conjugate,
            "witness": self.witness_label,
            "side": self.side,
            "disjoint": self.disjoint,
        }


def are_conjugate(g: Groupoid, h: Iterable, k: Iterable, *, max_order: int = _NORMALITY_ORDER_CAP) -> ConjugacyVerdict:
    """Is H = x*K or H = K*x for some x? Disjointness is the stated
    precondition; a violation is flagged but the search still runs."""
    n = _order_or_raise(g, max_order, "conjugacy search")
    hh = subset_handle(g, h) if not isinstance(h, SubsetHandle) else h
    kk = subset_handle(g, k) if not isinstance(k, SubsetHandle) else k
    table = g.index_table()
    hset = set(hh.indices)
    kset = set(kk.indices)
    disjoint = not (hset & kset)
    for x in range(n):
        if {table[x][e] for e in kset} == hset:
            return ConjugacyVerdict(True, g.labels()[x], "left", disjoint)
        if {table[e][x] for e in kset} == hset:
            return ConjugacyVerdict(True, g.labels()[x], "right", disjoint)
    return ConjugacyVerdict(False, None, None, disjoint)


@dataclass(frozen=True)
class HomomorphismVerdict:
    valid: bool
    star_respected: bool
    indeterminate_preserved: bool | None  # None when not applicable
    failure: str | None

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "star_respected": self.star_respected,
            "indeterminate_preserved": self.indeterminate_preserved,
            "failure": self.failure,
        }


def check_homomorphism(
    g: Groupoid,
    h: Groupoid,
    mapping: Sequence[int] | Callable[[Element], Element],
    *,
    max_order: int = _NORMALITY_ORDER_CAP,
) -> HomomorphismVerdict:
    """Does the map respect star, and (for carriers with an indeterminate)
    send pure-I elements to pure-I elements?"""
    n = _order_or_raise(g, max_order, "homomorphism check")
    _order_or_raise(h, max_order, "homomorphism check")
    if callable(mapping):
        if g.spec is None or h.spec is None:
            raise CarrierError("element-level mappings need spec-backed groupoids")
        phi = [h.element_index(mapping(e)) for e in g.elements()]
    else:
        phi = [int(i) for i in mapping]
        if len(phi) != n or any(not 0 <= i < len(h.labels()) for i in phi):
            raise CarrierError("index mapping must cover the domain and land in the codomain")

    tg = g.index_table()
    th = h.index_table()
    for i in range(n):
        for j in range(n):
            if phi[tg[i][j]] != th[phi[i]][phi[j]]:
                fail = (
                    f"star not respected at ({g.labels()[i]}, {g.labels()[j]})"
                )
                return HomomorphismVerdict(False, False, None, fail)

    ind_ok: bool | None = None
    if (
        g.spec is not None
        and h.spec is not None
        and g.spec.carrier.has_indeterminate
    ):
        ind_ok = True
        hc = h.spec.carrier
        for i, e in enumerate(g.elements()):
            if element_is_pure_indeterminate(g.spec.carrier, e):
                img = h.elements()[phi[i]]
                if not (hc.has_indeterminate and element_is_pure_indeterminate(hc, img)):
                    fail = f"indeterminate element {g.labels()[i]} maps to {h.labels()[phi[i]]}"
                    return HomomorphismVerdict(False, True, False, fail)
    return HomomorphismVerdict(True, True, ind_ok, None)


# -- the assembled report ------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    order: int
    subgroupoids: EnumerationResult
    ideals: IdealSets | None
    normal: tuple[SubsetHandle, ...]
    simple: SimpleVerdict
    normal_groupoid: bool
    smarandache_verdict: SmarandacheVerdict
    complete: bool

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "subgroupoids": self.subgroupoids.to_json(),
            "ideals": self.ideals.to_json() if self.ideals else None,
            "normal": [h.to_json() for h in self.normal],
            "simple": self.simple.to_json(),
            "normal_groupoid": self.normal_groupoid,
            "smarandache": self.smarandache_verdict.to_json(),
            "complete": self.complete,
        }


def analyze(g: Groupoid, *, max_order: int = DEFAULT_MAX_ORDER) -> StructureReport:
    """Full structural survey; complete only when the power-set route fits."""
    order = g.order
    if isinstance(order, TooLarge):
        raise BudgetExceeded("structure analysis needs an enumerable groupoid")
    if order <= max_order:
        subs = enumerate_subgroupoids(g, "power-set", max_order=max_order)
        ideals = enumerate_ideals(g, max_order=max_order)
        normal = tuple(find_normal_subgroupoids(g, max_order=max_order))
        simple = is_simple(g, max_order=max_order)
        sm = smarandache(g, max_order=max_order)
        return StructureReport(
            order=order,
            subgroupoids=subs,
            ideals=ideals,
            normal=normal,
            simple=simple,
            normal_groupoid=is_normal_groupoid(g),
            smarandache_verdict=sm,
            complete=True,
        )
    subs = enumerate_subgroupoids(g, "generated-closure")
    table = g.index_table()
    normal = tuple(
        h for h in subs.subsets if h.size >= 2 and _subset_normal(table, h.indices)
    )
    simple = is_simple(g, max_order=max_order)
    sm_witness = None
    for h in subs.subsets:
        idx = h.indices
        zero = g.zero_index()
        if zero is not None and idx == (zero,):
            continue
        if _subset_semigroup(table, idx):
            sm_witness = h
            break
    sm = SmarandacheVerdict(
        status="s_groupoid" if sm_witness else "not_smarandache", s_witness=sm_witness
    )
    return StructureReport(
        order=order,
        subgroupoids=subs,
        ideals=None,
        normal=normal,
        simple=simple,
        normal_groupoid=is_normal_groupoid(g),
        smarandache_verdict=sm,
        complete=False,
    )
