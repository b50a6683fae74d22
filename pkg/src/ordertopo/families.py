"""Symbolic sequence families.

Five templates with exact per-index values and closed-form tails: finite
explicit lists (constant afterwards), two-level shifts (the classic
vanishing-prefix sequence and its mirror), shrinking positive multiples,
coordinatewise harmonic decay toward a center, and running suprema meet a
cap.  Each template knows its index base, its monotonicity, its order
limit, and -- through the eventual-form machinery -- how to decide
eventual membership in any grammar set with an explicit threshold.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union as TUnion

from .carriers import (
    TAIL_SEQ,
    Carrier,
    CarrierMismatch,
    CoordLabel,
    Vec,
    aligned,
    inf,
    leq,
    sup,
    zero,
)
from .eventual import (
    ConstForm,
    DecayForm,
    Form,
    GeomForm,
    ShiftForm,
    abs_centered_form,
    affine_form,
    coord_profile,
    far_members,
    form_carrier,
    form_eventually_le,
    form_limit,
    form_prefix_bound,
    form_settle_ne,
    form_settle_vs_vec,
    make_decay_form,
    make_geom_form,
    running_sup_form,
    meet_const_form,
    settle_cmp,
    tail_profile,
)
from .ordersets import (
    Band,
    Complement,
    Dilate,
    HalfSpace,
    Ideal,
    Intersection,
    IntervalKind,
    IntervalSet,
    Semantics,
    SetExpr,
    SolidHull,
    TailZero,
    Translate,
    Union,
    member,
    support_horizon,
)
from .rationals import rat


@dataclass(frozen=True)
class Explicit:
    """Finitely many listed values, constant from the last one on."""

    values: tuple[Vec, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("explicit family needs at least one value")
        carrier = self.values[0].carrier
        if any(v.carrier != carrier for v in self.values):
            raise CarrierMismatch("explicit family mixes carriers")


@dataclass(frozen=True)
class Shift:
    """value(k) carries ``head`` on the first k positions and ``tail`` beyond.

    The default (head 0, tail 1) is the vanishing-prefix sequence indexed
    from 1; head 1 / tail 0 is its increasing mirror.
    """

    head: Fraction = Fraction(0)
    tail: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "head", rat(self.head))
        object.__setattr__(self, "tail", rat(self.tail))


@dataclass(frozen=True)
class Scale:
    """value(k) = lam^k * v with v >= 0 and 0 < lam < 1."""

    v: Vec
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", rat(self.lam))
        if not (0 < self.lam < 1):
            raise ValueError("scale factor must satisfy 0 < lam < 1")
        if not leq(zero(self.v.carrier), self.v):
            raise ValueError("scale template needs a nonnegative vector")


@dataclass(frozen=True)
class CoordDecay:
    """value(k) = c + p/(k+1+q), coordinatewise."""

    c: Vec
    p: Vec
    q: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q", rat(self.q))
        if self.q < 0:
            raise ValueError("decay offset must be nonnegative")
        if self.c.carrier != self.p.carrier:
            raise CarrierMismatch("center and direction live in different carriers")


@dataclass(frozen=True)
class RunningSupMeet:
    """value(k) = (sup of base values up to k) meet cap."""

    base: "Family"
    cap: Vec

    def __post_init__(self):
        if family_carrier(self.base) != self.cap.carrier:
            raise CarrierMismatch("cap lives in a different carrier than the base")


Family = TUnion[Explicit, Shift, Scale, CoordDecay, RunningSupMeet]


def shift_family() -> Shift:
    """The vanishing-prefix sequence: first k terms 0, the rest 1."""
    return Shift(Fraction(0), Fraction(1))


def shift_up_family() -> Shift:
    """First k terms 1, the rest 0; increases to the all-ones vector."""
    return Shift(Fraction(1), Fraction(0))


def running_sup_meet(base: Family, cap: Vec) -> RunningSupMeet:
    return RunningSupMeet(base, cap)


def family_carrier(F: Family) -> Carrier:
    if isinstance(F, Explicit):
        return F.values[0].carrier
    if isinstance(F, Shift):
        return TAIL_SEQ
    if isinstance(F, Scale):
        return F.v.carrier
    if isinstance(F, CoordDecay):
        return F.c.carrier
    return family_carrier(F.base)


def index_base(F: Family) -> int:
    """First index of the family as a net (shифt templates start at 1)."""
    if isinstance(F, Shift):
        return 1
    if isinstance(F, RunningSupMeet):
        return index_base(F.base)
    return 0


def value(F: Family, k: int) -> Vec:
    """Exact value at index k >= 0 (below the index base: the first value)."""
    if k < 0:
        raise ValueError("indices are nonnegative")
    if isinstance(F, Explicit):
        return F.values[min(k, len(F.values) - 1)]
    if isinstance(F, Shift):
        return Vec.seq((F.head,) * k, F.tail)
    if isinstance(F, Scale):
        return F.v * F.lam ** k
    if isinstance(F, CoordDecay):
        return F.c + F.p * (Fraction(1) / (k + 1 + F.q))
    k0 = index_base(F.base)
    acc = value(F.base, k0)
    for j in range(k0 + 1, max(k, k0) + 1):
        acc = sup(acc, value(F.base, j))
    return inf(acc, F.cap)


def values_iter(F: Family, upto: int) -> Iterator[Vec]:
    """value(k) for k = index_base .. upto, computed incrementally."""
    k0 = index_base(F)
    if isinstance(F, RunningSupMeet):
        acc = None
        for base_val in values_iter(F.base, upto):
            acc = base_val if acc is None else sup(acc, base_val)
            yield inf(acc, F.cap)
        return
    for k in range(k0, upto + 1):
        yield value(F, k)


@functools.lru_cache(maxsize=None)
def form_of(F: Family) -> Form:
    """Closed-form tail of the family, valid from its ``start`` index."""
    if isinstance(F, Explicit):
        return ConstForm(F.values[-1], len(F.values) - 1)
    if isinstance(F, Shift):
        if F.head == F.tail:
            return ConstForm(Vec.seq((), F.head), 1)
        return ShiftForm((), F.head, F.tail, 1)
    if isinstance(F, Scale):
        return make_geom_form(zero(F.v.carrier), F.v, F.lam, 0)
    if isinstance(F, CoordDecay):
        return make_decay_form(F.c, F.p, F.q, 0)
    base_form = form_of(F.base)
    k0 = index_base(F.base)
    early = None
    for j in range(k0, base_form.start):
        v = value(F.base, j)
        early = v if early is None else sup(early, v)
    return meet_const_form(running_sup_form(base_form, early), F.cap)


# -- monotonicity ---------------------------------------------------------------


@dataclass(frozen=True)
class Monotonicity:
    direction: str  # "increasing" | "decreasing" | "neither"
    rule: str
    checked_to: int
    violations: tuple[tuple[int, Vec, Vec], ...] = ()


def monotonicity(F: Family, horizon: int = 24) -> Monotonicity:
    """Template-level direction, cross-checked exactly up to a horizon."""
    k0 = index_base(F)
    direction, rule = _direction_rule(F)
    if direction == "neither":
        # only the finite-list and mixed-decay templates can land here, so a
        # short scan is guaranteed to exhibit both broken directions
        cap = len(F.values) if isinstance(F, Explicit) else 2
        breaks = []
        for want in ("decreasing", "increasing"):
            for k in range(k0, k0 + cap + 1):
                a, b = value(F, k), value(F, k + 1)
                ordered = leq(b, a) if want == "decreasing" else leq(a, b)
                if not ordered:
                    breaks.append((k, a, b))
                    break
        checked = max(k for k, _, _ in breaks) + 1
        return Monotonicity("neither", rule, checked, tuple(breaks))
    prev = value(F, k0)
    for k in range(k0 + 1, k0 + horizon + 1):
        cur = value(F, k)
        ok = leq(cur, prev) if direction == "decreasing" else leq(prev, cur)
        if not ok:
            raise AssertionError(f"template rule contradicted at index {k}")
        prev = cur
    return Monotonicity(direction, rule, k0 + horizon)


def _direction_rule(F: Family) -> tuple[str, str]:
    if isinstance(F, Explicit):
        if all(leq(b, a) for a, b in zip(F.values, F.values[1:])):
            return "decreasing", "finite list is descending"
        if all(leq(a, b) for a, b in zip(F.values, F.values[1:])):
            return "increasing", "finite list is ascending"
        return "neither", "finite list is not a chain"
    if isinstance(F, Shift):
        if F.head <= F.tail:
            return "decreasing", "each step replaces a tail entry by the head"
        return "increasing", "each step replaces a tail entry by the head"
    if isinstance(F, Scale):
        return "decreasing", "shrinking multiple of a nonnegative vector"
    if isinstance(F, CoordDecay):
        z = zero(F.p.carrier)
        if leq(z, F.p):
            return "decreasing", "all decay directions nonnegative"
        if leq(F.p, z):
            return "increasing", "all decay directions nonpositive"
        return "neither", "decay directions of mixed sign"
    return "increasing", "running supremum over a growing index range"


def order_limit(F: Family) -> Vec:
    """Order limit of a monotone family (its pointwise limit)."""
    mono = monotonicity(F)
    if mono.direction == "neither":
        raise ValueError("order limit needs a monotone family")
    return form_limit(form_of(F))


def pointwise_limit(F: Family) -> Vec:
    return form_limit(form_of(F))


# -- order convergence -------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Replayable evidence of order convergence.

    ``dominating`` decreases to zero and bounds |value(k) - limit|.  A
    ``threshold_map`` entry (m, t) promises the bound with the dominating
    value at index m from index t on; None means per-index domination.
    """

    limit: Vec
    dominating: Family
    threshold_map: Optional[tuple[tuple[int, int], ...]] = None


@dataclass(frozen=True)
class Refutation:
    limit: Vec
    candidate: Vec
    coord: CoordLabel
    separated_from: int
    gap: Fraction


def order_converges(F: Family, x: Vec) -> TUnion[Certificate, Refutation]:
    """Certify order convergence to x, or refute it with a coordinate."""
    if family_carrier(F) != x.carrier:
        raise CarrierMismatch("candidate limit lives in a different carrier")
    L = pointwise_limit(F)
    if L == x:
        return Certificate(x, dominating_family(F, x))
    label = _differing_label(L, x)
    form = form_of(F)
    seq = tail_profile(form) if label == "tail" else coord_profile(form, label)
    mid = (L.at(label) + x.at(label)) / 2
    _, k = settle_cmp(seq, mid)
    gap = abs(L.at(label) - x.at(label)) / 2
    return Refutation(L, x, label, max(k, index_base(F)), gap)


def _differing_label(a: Vec, b: Vec) -> CoordLabel:
    xs, ys = aligned(a, b)
    for i, (p, r) in enumerate(zip(xs, ys)):
        if p != r:
            return i + 1
    if a.carrier.kind == "tailseq" and a.tail != b.tail:
        return "tail"
    raise ValueError("vectors do not differ")


def dominating_family(F: Family, x: Vec) -> Family:
    """The witnessing decreasing-to-zero family for |value(k) - x|."""
    if pointwise_limit(F) != x:
        raise ValueError("dominating family exists only at the true order limit")
    carrier = family_carrier(F)
    if isinstance(F, Explicit):
        devs = [abs(v - x) for v in F.values]
        return Explicit(tuple(_suffix_sups(devs)))
    if isinstance(F, Shift):
        return Shift(Fraction(0), abs(F.tail - F.head))
    if isinstance(F, Scale):
        return Scale(F.v, F.lam)
    if isinstance(F, CoordDecay):
        return CoordDecay(zero(carrier), abs(F.p), F.q)
    # running sup meet: read the deviation's own closed form, then raise its
    # coefficients so the early indices are covered as well
    dev = abs_centered_form(affine_form(form_of(F), Fraction(1), -x))
    k0 = index_base(F)
    early = [(k, abs(value(F, k) - x)) for k in range(k0, dev.start)]
    if isinstance(dev, ConstForm):
        vals = [d for _, d in early] + [zero(carrier)]
        padded = [vals[0]] * k0 + vals
        return Explicit(tuple(_suffix_sups(padded)))
    if isinstance(dev, GeomForm):
        v_star = dev.v
        for k, d in early:
            v_star = sup(v_star, d * (Fraction(1) / dev.lam ** k))
        return Scale(v_star, dev.lam)
    if isinstance(dev, DecayForm):
        p_star = dev.p
        for k, d in early:
            p_star = sup(p_star, d * (k + 1 + dev.q))
        return CoordDecay(zero(carrier), p_star, dev.q)
    delta = abs(dev.tailv)
    for k, d in early:
        if any(d.coord(j) != 0 for j in range(1, k + 1)):
            raise AssertionError("running-sup deviation lags its own prefix")
        for j in range(k + 1, d.prefix_len + 1):
            delta = max(delta, abs(d.coord(j)))
        delta = max(delta, abs(d.tail))  # type: ignore[arg-type]
    return Shift(Fraction(0), delta)


def _suffix_sups(devs: Sequence[Vec]) -> list[Vec]:
    out = list(devs)
    for i in range(len(out) - 2, -1, -1):
        out[i] = sup(out[i], out[i + 1])
    return out


def validate_certificate(F: Family, cert: Certificate, horizon: int = 48) -> bool:
    """Re-check a certificate from its stored pieces alone."""
    dom = cert.dominating
    carrier = family_carrier(F)
    if monotonicity(dom).direction != "decreasing":
        return False
    if order_limit(dom) != zero(carrier):
        return False
    k0 = max(index_base(F), index_base(dom))
    if cert.threshold_map is None:
        dev = abs_centered_form(affine_form(form_of(F), Fraction(1), -cert.limit))
        ok, settled = form_eventually_le(dev, form_of(dom))
        if not ok:
            return False
        for k in range(k0, max(settled, k0 + horizon) + 1):
            if not leq(abs(value(F, k) - cert.limit), value(dom, k)):
                return False
        return True
    for m, t in cert.threshold_map:
        radius = value(dom, m)
        lo, hi = cert.limit - radius, cert.limit + radius
        got = eventually_in(F, IntervalSet(_closed(lo, hi)))
        if got.status != "holds-from" or got.index > t:
            return False
    return True


def _closed(lo: Vec, hi: Vec):
    from .ordersets import closed_interval

    return closed_interval(lo, hi)


# -- eventual membership -------------------------------------------------------------


@dataclass(frozen=True)
class EventualVerdict:
    """Decided eventual membership.

    holds-from: member for every k >= index (least such index).
    fails-from: outside for every k >= index (hence infinitely often);
    witness_index points at the first failure.
    """

    status: str  # "holds-from" | "fails-from" | "unknown"
    index: Optional[int]
    witness_index: Optional[int] = None
    settled_at: int = 0


def eventually_in(F: Family, expr: SetExpr) -> EventualVerdict:
    """Decide eventual membership of the family in a grammar set."""
    form = form_of(F)
    k0 = index_base(F)
    try:
        ok, settled = _eventual_member(form, expr)
    except _NoTailRule:
        return EventualVerdict("unknown", None)
    settled = max(settled, form.start, k0)
    if ok:
        n = settled
        while n > k0 and member(expr, value(F, n - 1)):
            n -= 1
        return EventualVerdict("holds-from", n, settled_at=settled)
    witness = settled
    for k in range(k0, settled + 1):
        if not member(expr, value(F, k)):
            witness = k
            break
    return EventualVerdict("fails-from", settled, witness_index=witness,
                           settled_at=settled)


class _NoTailRule(Exception):
    pass


def _eventual_member(form: Form, expr: SetExpr) -> tuple[bool, int]:
    if isinstance(expr, IntervalSet):
        iv = expr.interval
        if iv.kind is IntervalKind.CLOSED:
            return _and([
                form_settle_vs_vec(form, iv.lo, "ge"),
                form_settle_vs_vec(form, iv.hi, "le"),
            ])
        if iv.semantics is Semantics.STRICT_UNIFORM:
            return _and([
                form_settle_vs_vec(form, iv.lo, "gt"),
                form_settle_vs_vec(form, iv.hi, "lt"),
            ])
        return _and([
            form_settle_vs_vec(form, iv.lo, "ge"),
            form_settle_vs_vec(form, iv.hi, "le"),
            form_settle_ne(form, iv.lo),
            form_settle_ne(form, iv.hi),
        ])
    if isinstance(expr, HalfSpace):
        seq = tail_profile(form) if expr.coord == "tail" else coord_profile(form, expr.coord)
        rel, k = settle_cmp(seq, expr.bound)
        ok = rel <= 0 if expr.relation == "le" else rel >= 0
        return ok, k
    if isinstance(expr, TailZero):
        rel, k = settle_cmp(tail_profile(form), Fraction(0))
        return rel == 0, k
    if isinstance(expr, (Ideal, Band)):
        return _and(_support_conditions(form, expr.gens))
    if isinstance(expr, SolidHull):
        conds = []
        for g in expr.gens:
            ag = abs(g)
            conds.append(_and([
                form_settle_vs_vec(form, -ag, "ge"),
                form_settle_vs_vec(form, ag, "le"),
            ]))
        return _or(conds)
    if isinstance(expr, Complement):
        ok, k = _eventual_member(form, expr.inner)
        return not ok, k
    if isinstance(expr, Union):
        if not expr.parts:
            return False, form.start
        return _or([_eventual_member(form, p) for p in expr.parts])
    if isinstance(expr, Intersection):
        if not expr.parts:
            return True, form.start
        return _and([_eventual_member(form, p) for p in expr.parts])
    if isinstance(expr, Translate):
        return _eventual_member(affine_form(form, Fraction(1), -expr.by), expr.inner)
    if isinstance(expr, Dilate):
        return _eventual_member(affine_form(form, 1 / expr.factor), expr.inner)
    raise _NoTailRule(f"no tail rule for {type(expr).__name__}")


def _support_conditions(form: Form, gens: Sequence[Vec]) -> list[tuple[bool, int]]:
    """Eventual vanishing off the generators' support (band membership)."""
    conds: list[tuple[bool, int]] = []
    carrier = form_carrier(form)
    if carrier.kind == "findim":
        width = carrier.dim
    else:
        width = max(support_horizon(list(gens)), form_prefix_bound(form))
    for p in range(1, width + 1):
        if all(g.coord(p) == 0 for g in gens):
            rel, k = settle_cmp(coord_profile(form, p), Fraction(0))
            conds.append((rel == 0, k))
    if carrier.kind == "tailseq" and all(g.tail == 0 for g in gens):
        for seq, present in far_members(form, width):
            rel, k = settle_cmp(seq, Fraction(0))
            conds.append((rel == 0, max(k, present)))
    if not conds:
        conds.append((True, form.start))
    return conds


def _and(conds: Sequence[tuple[bool, int]]) -> tuple[bool, int]:
    if all(ok for ok, _ in conds):
        return True, max(k for _, k in conds)
    return False, min(k for ok, k in conds if not ok)


def _or(conds: Sequence[tuple[bool, int]]) -> tuple[bool, int]:
    if any(ok for ok, _ in conds):
        return True, min(k for ok, k in conds if ok)
    return False, max(k for _, k in conds)
