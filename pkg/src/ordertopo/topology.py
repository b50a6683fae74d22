"""The verdict engine for the two order-induced topologies.

A set is *quasi-order closed* when it contains the limit of every monotone
net of its elements, and *order closed* when that holds for every
order-convergent net.  Sets are *order open* when their complement is
quasi-order closed.  Closedness of a grammar expression is undecidable in
general, so verdicts are three-valued: Certified carries a trace of sound
structural rules, Refuted carries a self-contained witness family that can
be replayed without repeating the search, and Unknown reports what the
search grid covered.

Soundness of the rules rests on one fact about these carriers: a monotone
net has an order limit in the carrier exactly when its pointwise limit
exists there, and the two agree.  Closed coordinatewise bounds therefore
survive monotone limits, and the rules below never certify anything else.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, TypeVar

from .carriers import (
    TAIL_SEQ,
    Carrier,
    Vec,
    leq,
    ones,
    scale,
    strictly_everywhere_below,
    unit,
    zero,
)
from .families import (
    Certificate,
    CoordDecay,
    Explicit,
    Family,
    Scale,
    eventually_in,
    monotonicity,
    order_converges,
    order_limit,
    pointwise_limit,
    shift_family,
    shift_up_family,
    validate_certificate,
    value,
)
from .ordersets import (
    Band,
    Complement,
    Dilate,
    HalfSpace,
    Ideal,
    Intersection,
    Interval,
    IntervalKind,
    IntervalSet,
    Semantics,
    SetExpr,
    SolidHull,
    TailZero,
    Translate,
    Union,
    carrier_of,
    collect_vectors,
    grid_vectors,
    interval_contains,
    member,
    open_interval,
    support_horizon,
)
from .rationals import rat

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the witness search; defaults follow the artifact's grids."""

    horizon: int = 64
    grid_scale: Fraction = Fraction(1)
    lambdas: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(1, 3))
    gen_scales: tuple[Fraction, ...] = (Fraction(1, 2), Fraction(1), Fraction(2))
    chain_length: int = 8
    max_chains: int = 4
    max_candidates: int = 600
    workers: int = 1


DEFAULT_CONFIG = SearchConfig()


# -- normalization -----------------------------------------------------------------


def normalize_expr(expr: SetExpr) -> SetExpr:
    """Push complements and affine images down to the primitive leaves.

    Every rewrite is an exact set identity, so membership is preserved;
    the certification rules match on the result.
    """
    if isinstance(expr, Complement):
        inner = normalize_expr(expr.inner)
        if isinstance(inner, Complement):
            return inner.inner
        if isinstance(inner, Union):
            return Intersection(tuple(normalize_expr(Complement(p)) for p in inner.parts))
        if isinstance(inner, Intersection):
            return Union(tuple(normalize_expr(Complement(p)) for p in inner.parts))
        return Complement(inner)
    if isinstance(expr, Union):
        return Union(tuple(normalize_expr(p) for p in expr.parts))
    if isinstance(expr, Intersection):
        return Intersection(tuple(normalize_expr(p) for p in expr.parts))
    if isinstance(expr, Translate):
        return _apply_translate(normalize_expr(expr.inner), expr.by)
    if isinstance(expr, Dilate):
        return _apply_dilate(normalize_expr(expr.inner), expr.factor)
    return expr


def _apply_translate(inner: SetExpr, a: Vec) -> SetExpr:
    if a.is_zero():
        return inner
    if isinstance(inner, IntervalSet):
        iv = inner.interval
        return IntervalSet(Interval(iv.lo + a, iv.hi + a, iv.kind, iv.semantics))
    if isinstance(inner, HalfSpace):
        return HalfSpace(inner.coord, inner.relation, inner.bound + a.at(inner.coord))
    if isinstance(inner, TailZero) and a.tail == 0:
        return inner
    if isinstance(inner, (Ideal, Band)) and member(inner, a):
        return inner  # translating a subspace by one of its own elements
    if isinstance(inner, Union):
        return Union(tuple(_apply_translate(p, a) for p in inner.parts))
    if isinstance(inner, Intersection):
        return Intersection(tuple(_apply_translate(p, a) for p in inner.parts))
    if isinstance(inner, Complement):
        return Complement(_apply_translate(inner.inner, a))
    if isinstance(inner, Translate):
        return _apply_translate(inner.inner, a + inner.by)
    if isinstance(inner, Dilate):
        return _apply_dilate(_apply_translate(inner.inner, scale(1 / inner.factor, a)),
                             inner.factor)
    return Translate(inner, a)


def _apply_dilate(inner: SetExpr, t: Fraction) -> SetExpr:
    if t == 1:
        return inner
    if isinstance(inner, IntervalSet):
        iv = inner.interval
        lo, hi = scale(t, iv.lo), scale(t, iv.hi)
        if t < 0:
            lo, hi = hi, lo
        return IntervalSet(Interval(lo, hi, iv.kind, iv.semantics))
    if isinstance(inner, HalfSpace):
        relation = inner.relation
        if t < 0:
            relation = "ge" if relation == "le" else "le"
        return HalfSpace(inner.coord, relation, inner.bound * t)
    if isinstance(inner, (TailZero, Ideal, Band)):
        return inner  # solid subspaces are stable under nonzero dilation
    if isinstance(inner, SolidHull):
        return SolidHull(tuple(scale(t, g) for g in inner.gens))
    if isinstance(inner, Union):
        return Union(tuple(_apply_dilate(p, t) for p in inner.parts))
    if isinstance(inner, Intersection):
        return Intersection(tuple(_apply_dilate(p, t) for p in inner.parts))
    if isinstance(inner, Complement):
        return Complement(_apply_dilate(inner.inner, t))
    if isinstance(inner, Dilate):
        return _apply_dilate(inner.inner, t * inner.factor)
    if isinstance(inner, Translate):
        return _apply_translate(_apply_dilate(inner.inner, t), scale(t, inner.by))
    return Dilate(inner, t)


# -- verdicts ---------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureWitness:
    """A replayable closure failure: a family living in the set whose
    order limit escapes it."""

    family: Family
    mode: str  # "increasing" | "decreasing" | "order-convergent"
    limit: Vec
    in_set_from: int
    certificate: Optional[Certificate] = None


@dataclass(frozen=True)
class SearchReport:
    candidates: int
    grids: str


@dataclass(frozen=True)
class Verdict:
    status: str  # "certified" | "refuted" | "unknown"
    rule_trace: tuple[str, ...] = ()
    witness: Optional[ClosureWitness] = None
    search_report: Optional[SearchReport] = None


def _certify_closed(expr: SetExpr) -> Optional[list[str]]:
    """Sound structural rules for closedness under monotone order limits.

    The same rules are sound for full order closedness: each one rests on
    coordinatewise non-strict bounds, which survive any order limit.
    """
    if isinstance(expr, IntervalSet):
        if expr.interval.kind is IntervalKind.CLOSED:
            return ["closed-interval"]
        return None
    if isinstance(expr, HalfSpace):
        return ["coordinate-half-space"]
    if isinstance(expr, Band):
        return ["band-support"]
    if isinstance(expr, Ideal):
        # finitely generated ideals of these carriers have bounded
        # coordinate ratios, so they coincide with their bands
        return ["finitely-generated-ideal-is-band"]
    if isinstance(expr, SolidHull):
        return ["solid-hull-is-a-finite-union-of-closed-intervals"]
    if isinstance(expr, Intersection):
        trace = ["finite-intersection"] if expr.parts else ["full-space"]
        return _certify_parts(expr.parts, trace)
    if isinstance(expr, Union):
        trace = ["finite-union"] if expr.parts else ["empty-set"]
        return _certify_parts(expr.parts, trace)
    if isinstance(expr, Translate):
        sub = _certify_closed(expr.inner)
        return ["translate-image"] + sub if sub is not None else None
    if isinstance(expr, Dilate):
        sub = _certify_closed(expr.inner)
        return ["dilate-image"] + sub if sub is not None else None
    return None


def _certify_parts(parts: Sequence[SetExpr], trace: list[str]) -> Optional[list[str]]:
    for p in parts:
        sub = _certify_closed(p)
        if sub is None:
            return None
        trace.extend(sub)
    return trace


def _first_hit(items: Sequence[T], fn: Callable[[T], Optional[R]],
               workers: int) -> Optional[R]:
    """First non-None result in list order, regardless of evaluation order."""
    if workers <= 1:
        for item in items:
            out = fn(item)
            if out is not None:
                return out
        return None
    chunk = max(8, workers * 4)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for base in range(0, len(items), chunk):
            part = items[base:base + chunk]
            for out in pool.map(fn, part):
                if out is not None:
                    return out
    return None


def _dedup_vecs(vecs: Sequence[Vec]) -> list[Vec]:
    seen: set = set()
    out = []
    for v in vecs:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def _witness_candidates(expr: SetExpr, carrier: Carrier, config: SearchConfig,
                        include_nonmonotone: bool) -> list[Family]:
    """The deterministic candidate grid, most promising templates first."""
    out: list[Family] = []
    if carrier == TAIL_SEQ:
        out.append(shift_family())
        out.append(shift_up_family())
    anchors = _dedup_vecs(list(collect_vectors(expr)) + [zero(carrier)])
    directions = [ones(carrier), -ones(carrier)]
    span = carrier.dim if carrier.kind == "findim" else 3
    for j in range(1, span + 1):
        directions.append(unit(carrier, j))
        directions.append(-unit(carrier, j))
    gs = config.grid_scale
    for center in anchors:
        for p in directions:
            out.append(CoordDecay(center, scale(gs, p)))
    if include_nonmonotone and span >= 2:
        for center in anchors:
            for i in range(1, span):
                mixed = unit(carrier, i) - unit(carrier, i + 1)
                out.append(CoordDecay(center, scale(gs, mixed)))
    for g in anchors:
        ag = abs(g)
        if ag.is_zero():
            continue
        for s in config.gen_scales:
            v = scale(s * gs, ag)
            for lam in config.lambdas:
                out.append(Scale(v, lam))
    out.extend(_chain_probes(expr, carrier, config))
    deduped: list[Family] = []
    seen: set = set()
    for f in out:
        if f not in seen:
            seen.add(f)
            deduped.append(f)
    return deduped[: config.max_candidates]


def _chain_probes(expr: SetExpr, carrier: Carrier, config: SearchConfig) -> list[Family]:
    """Greedy monotone chains of grid points inside the set.

    Eventually-constant families can never leave their final value behind,
    so these act as sanity probes rather than refuters.
    """
    points = [p for p in grid_vectors(carrier) if member(expr, p)]
    chains: list[Family] = []
    for start in points:
        if len(chains) >= config.max_chains:
            break
        chain = [start]
        for q in points:
            if len(chain) >= config.chain_length:
                break
            if q != chain[-1] and leq(chain[-1], q):
                chain.append(q)
        if len(chain) > 1:
            chains.append(Explicit(tuple(chain)))
    return chains


def _try_witness(expr: SetExpr, family: Family, include_nonmonotone: bool,
                 horizon: int = 24) -> Optional[ClosureWitness]:
    mono = monotonicity(family, horizon=horizon)
    certificate = None
    if mono.direction == "neither":
        if not include_nonmonotone:
            return None
        limit = pointwise_limit(family)
        got = order_converges(family, limit)
        if not isinstance(got, Certificate):
            return None
        certificate = got
        mode = "order-convergent"
    else:
        limit = order_limit(family)
        mode = mono.direction
    if member(expr, limit):
        return None
    ev = eventually_in(family, expr)
    if ev.status != "holds-from":
        return None
    return ClosureWitness(family, mode, limit, ev.index, certificate)


def _closure_check(expr: SetExpr, config: SearchConfig,
                   include_nonmonotone: bool) -> Verdict:
    norm = normalize_expr(expr)
    trace = _certify_closed(norm)
    if trace is not None:
        return Verdict("certified", tuple(trace))
    carrier = carrier_of(norm)
    if carrier is None:
        return Verdict("unknown",
                       search_report=SearchReport(0, "no carrier to search"))
    candidates = _witness_candidates(norm, carrier, config, include_nonmonotone)
    hit = _first_hit(candidates,
                     lambda f: _try_witness(norm, f, include_nonmonotone,
                                            min(config.horizon, 64)),
                     config.workers)
    if hit is not None:
        return Verdict("refuted", witness=hit)
    grids = (f"templates={len(candidates)} lambdas={list(map(str, config.lambdas))} "
             f"gen_scales={list(map(str, config.gen_scales))} scale={config.grid_scale}")
    return Verdict("unknown", search_report=SearchReport(len(candidates), grids))


def check_quasi_order_closed(expr: SetExpr,
                             config: SearchConfig = DEFAULT_CONFIG) -> Verdict:
    """Certify or refute closedness under monotone order limits."""
    return _closure_check(expr, config, include_nonmonotone=False)


def check_order_closed(expr: SetExpr,
                       config: SearchConfig = DEFAULT_CONFIG) -> Verdict:
    """Like the quasi check, but witnesses may be any order-convergent family."""
    return _closure_check(expr, config, include_nonmonotone=True)


def is_order_open(expr: SetExpr, config: SearchConfig = DEFAULT_CONFIG) -> Verdict:
    """Openness in the quasi-order topology: the complement must be closed."""
    return check_quasi_order_closed(Complement(expr), config)


def replay_witness(expr: SetExpr, witness: ClosureWitness,
                   horizon: int = 64) -> bool:
    """Re-validate a refutation from its stored pieces alone, no search."""
    fam = witness.family
    if witness.mode in ("increasing", "decreasing"):
        if monotonicity(fam).direction != witness.mode:
            return False
        if order_limit(fam) != witness.limit:
            return False
    else:
        if witness.certificate is None:
            return False
        if witness.certificate.limit != witness.limit:
            return False
        if not validate_certificate(fam, witness.certificate):
            return False
    if member(expr, witness.limit):
        return False
    ev = eventually_in(fam, expr)
    if ev.status != "holds-from" or ev.index > witness.in_set_from:
        return False
    for k in range(witness.in_set_from, witness.in_set_from + horizon):
        if not member(expr, value(fam, k)):
            return False
    return True


# -- neighborhood catalogs ------------------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodCatalog:
    """Open intervals around a center; the chain part is nested with
    strictly shrinking widths."""

    center: Vec
    chain: tuple[Interval, ...]
    extras: tuple[Interval, ...] = ()

    def __post_init__(self):
        for iv in self.chain + self.extras:
            if not interval_contains(iv, self.center):
                raise ValueError("catalog interval misses its center")
        for a, b in zip(self.chain, self.chain[1:]):
            if not (leq(a.lo, b.lo) and leq(b.hi, a.hi)):
                raise ValueError("chain intervals must be nested")
            if not (leq(b.width(), a.width()) and b.width() != a.width()):
                raise ValueError("chain widths must strictly decrease")

    @property
    def intervals(self) -> tuple[Interval, ...]:
        # thin perturbation intervals are the sharpest refuters, so they
        # probe first; the nested chain follows
        return self.extras + self.chain

    def is_chain(self) -> bool:
        return not self.extras


def symmetric_chain(x: Vec, depth: int,
                    semantics: Semantics = Semantics.STRICT_PARTIAL) -> NeighborhoodCatalog:
    """The nested chain (x - e/m, x + e/m), m = 1..depth, e the all-ones."""
    if depth < 1:
        raise ValueError("catalog depth must be at least 1")
    e = ones(x.carrier)
    chain = tuple(
        open_interval(x - scale(Fraction(1, m), e), x + scale(Fraction(1, m), e), semantics)
        for m in range(1, depth + 1)
    )
    return NeighborhoodCatalog(x, chain)


def neighborhood_catalog(x: Vec, depth: int,
                         semantics: Semantics = Semantics.STRICT_PARTIAL) -> NeighborhoodCatalog:
    """Symmetric chain plus single-coordinate perturbation intervals."""
    base = symmetric_chain(x, depth, semantics)
    extras: list[Interval] = []
    span = min(depth, x.carrier.dim) if x.carrier.kind == "findim" else depth
    for j in range(1, span + 1):
        for delta in (Fraction(1), Fraction(1, 2)):
            step = scale(delta, unit(x.carrier, j))
            try:
                extras.append(open_interval(x - step, x + step, semantics))
            except ValueError:
                continue  # empty under strict-uniform semantics
    return NeighborhoodCatalog(x, base.chain, tuple(extras))


@dataclass(frozen=True)
class TauEReport:
    """Outcome of probing convergence against a catalog of neighborhoods."""

    center: Vec
    consistent: bool
    refuted_by: Optional[Interval] = None
    thresholds: tuple[tuple[int, int], ...] = ()  # (catalog position, holds-from)


def tau_e_convergence_report(F: Family, x: Vec,
                             catalog: NeighborhoodCatalog) -> TauEReport:
    """One failed neighborhood refutes; all-pass is consistency, not proof."""
    if catalog.center != x:
        raise ValueError("catalog center differs from the candidate limit")
    thresholds: list[tuple[int, int]] = []
    for pos, iv in enumerate(catalog.intervals):
        got = eventually_in(F, IntervalSet(iv))
        if got.status != "holds-from":
            return TauEReport(x, False, refuted_by=iv,
                              thresholds=tuple(thresholds))
        thresholds.append((pos, got.index))
    return TauEReport(x, True, thresholds=tuple(thresholds))


# -- interval fitting ------------------------------------------------------------------


@dataclass(frozen=True)
class FitResult:
    interval: Interval
    steps: int  # dyadic shrink exponent used
    evidence: str  # "exact" | "sampled"
    samples: int = 0


def interval_fit(c: Vec, expr: SetExpr, budget: int = 16,
                 min_samples: int = 1000,
                 semantics: Semantics = Semantics.STRICT_PARTIAL,
                 config: SearchConfig = DEFAULT_CONFIG) -> Optional[FitResult]:
    """Find an open interval around c inside the set by dyadic shrinking."""
    if not member(expr, c):
        raise ValueError("the point lies outside the set")
    openness = is_order_open(expr, config)
    if openness.status == "refuted":
        raise ValueError("the set is not order open")
    norm = normalize_expr(expr)
    e = ones(c.carrier)
    for t in range(budget + 1):
        step = scale(Fraction(1, 2 ** t), e)
        iv = open_interval(c - step, c + step, semantics)
        verdict = _interval_contained(iv, norm)
        if verdict is True:
            return FitResult(iv, t, "exact")
        if verdict is None:
            ok, n = _contained_by_sampling(iv, norm, min_samples)
            if ok:
                return FitResult(iv, t, "sampled", n)
    return None


def _interval_contained(iv: Interval, expr: SetExpr) -> Optional[bool]:
    """Exact containment of the open interval in the set; None if undecided."""
    a, b = iv.lo, iv.hi
    single = a.carrier.kind == "findim" and a.carrier.dim == 1
    if isinstance(expr, Intersection):
        if not expr.parts:
            return True
        results = [_interval_contained(iv, p) for p in expr.parts]
        if any(r is False for r in results):
            return False
        if all(r is True for r in results):
            return True
        return None
    if isinstance(expr, Union):
        if not expr.parts:
            return False
        # containment in one part settles it; parts can also cover the
        # interval jointly, so a miss everywhere is not a refusal
        if any(_interval_contained(iv, p) is True for p in expr.parts):
            return True
        return None
    if isinstance(expr, IntervalSet):
        target = expr.interval
        if target.kind is IntervalKind.CLOSED:
            return leq(target.lo, a) and leq(b, target.hi)
        if target.semantics is Semantics.STRICT_PARTIAL:
            return leq(target.lo, a) and leq(b, target.hi)
        if strictly_everywhere_below(target.lo, a) and strictly_everywhere_below(b, target.hi):
            return True
        return None
    if isinstance(expr, HalfSpace):
        if expr.relation == "le":
            return b.at(expr.coord) <= expr.bound
        return a.at(expr.coord) >= expr.bound
    if isinstance(expr, Complement):
        inner = expr.inner
        if isinstance(inner, HalfSpace):
            # the complement is a strict half-space
            if inner.relation == "le":  # need z > bound throughout
                edge = a.at(inner.coord)
                return edge > inner.bound or (single and edge == inner.bound)
            edge = b.at(inner.coord)
            return edge < inner.bound or (single and edge == inner.bound)
        if isinstance(inner, IntervalSet) and inner.interval.kind is IntervalKind.CLOSED:
            # disjoint boxes are enough; anything subtler goes to sampling
            lo, hi = inner.interval.lo, inner.interval.hi
            if _boxes_disjoint(a, b, lo, hi):
                return True
            return None
        return None
    if isinstance(expr, (Ideal, Band)):
        return _contained_in_support(a, b, expr.gens)
    if isinstance(expr, TailZero):
        return a.tail == 0 and b.tail == 0
    if isinstance(expr, SolidHull):
        for g in expr.gens:
            ag = abs(g)
            if leq(-ag, a) and leq(b, ag):
                return True
        return None
    if isinstance(expr, Translate):
        shifted = Interval(a - expr.by, b - expr.by, iv.kind, iv.semantics)
        return _interval_contained(shifted, expr.inner)
    if isinstance(expr, Dilate):
        lo, hi = scale(1 / expr.factor, a), scale(1 / expr.factor, b)
        if expr.factor < 0:
            lo, hi = hi, lo
        return _interval_contained(Interval(lo, hi, iv.kind, iv.semantics), expr.inner)
    return None


def _boxes_disjoint(a: Vec, b: Vec, lo: Vec, hi: Vec) -> bool:
    from .carriers import aligned

    bs, los = aligned(b, lo)
    if any(bv < lv for bv, lv in zip(bs, los)):
        return True
    as_, his = aligned(a, hi)
    if any(av > hv for av, hv in zip(as_, his)):
        return True
    if a.carrier.kind == "tailseq":
        if b.tail < lo.tail or a.tail > hi.tail:
            return True
    return False


def _contained_in_support(a: Vec, b: Vec, gens: tuple[Vec, ...]) -> bool:
    width = support_horizon(list(gens) + [a, b])
    for p in range(1, width + 1):
        if all(g.coord(p) == 0 for g in gens):
            if a.coord(p) != 0 or b.coord(p) != 0:
                return False
    if a.carrier.kind == "tailseq" and all(g.tail == 0 for g in gens):
        if a.tail != 0 or b.tail != 0:
            return False
    return True


def _contained_by_sampling(iv: Interval, expr: SetExpr,
                           min_samples: int) -> tuple[bool, int]:
    count = 0
    for z in _interval_lattice(iv, min_samples):
        count += 1
        if not member(expr, z):
            return False, count
    return True, count


def _interval_lattice(iv: Interval, min_count: int):
    """Deterministic rational lattice covering the open interval."""
    a, b = iv.lo, iv.hi
    if a.carrier.kind == "findim":
        slots = a.carrier.dim
        axes = [(a.coord(j), b.coord(j)) for j in range(1, slots + 1)]
    else:
        width = max(a.prefix_len, b.prefix_len) + 1
        axes = [(a.coord(j), b.coord(j)) for j in range(1, width + 1)]
        axes.append((a.tail, b.tail))
        slots = width + 1
    m = 2
    while m ** slots < min_count + 2:
        m += 1
    steps = [
        [lo + (hi - lo) * Fraction(i, m - 1) for i in range(m)] if lo != hi else [lo]
        for lo, hi in axes
    ]
    for combo in itertools.product(*steps):
        if a.carrier.kind == "findim":
            z = Vec(a.carrier, tuple(combo))
        else:
            z = Vec(a.carrier, tuple(combo[:-1]), combo[-1])
        if interval_contains(iv, z):
            yield z


# -- the vector-topology probe ----------------------------------------------------------


@dataclass(frozen=True)
class ProbeEntry:
    operation: str  # "translate" | "dilate"
    parameter: str
    status: str


@dataclass(frozen=True)
class ProbeReport:
    base_status: str
    entries: tuple[ProbeEntry, ...]
    all_certified: bool


def vector_topology_probe(expr: SetExpr, shifts: Sequence[Vec],
                          scalars: Sequence[Fraction],
                          config: SearchConfig = DEFAULT_CONFIG) -> ProbeReport:
    """Check that translates and dilates of a certified-open set stay open."""
    base = is_order_open(expr, config)
    if base.status != "certified":
        raise ValueError("probe needs a certified order-open set")
    entries: list[ProbeEntry] = []
    for a in shifts:
        got = is_order_open(Translate(expr, a), config)
        entries.append(ProbeEntry("translate", str(a.coords), got.status))
    for t in scalars:
        got = is_order_open(Dilate(expr, rat(t)), config)
        entries.append(ProbeEntry("dilate", str(rat(t)), got.status))
    ok = all(e.status == "certified" for e in entries)
    return ProbeReport(base.status, tuple(entries), ok)
