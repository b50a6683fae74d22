"""Closed-form tails of template sequences.

Every template family in this package is, from a computable index on, one
of four symbolic shapes: constant, geometric (c + v*lam^k), harmonic decay
(c + p/(k+1+q)), or a two-level shift (fixed prefix, then a head value up
to position k, then a constant tail value).  This module provides exact
evaluation, limits, and -- the load-bearing part -- *settled* three-way
comparisons: for any such sequence and rational bound, the eventual
relation together with the least index from which it no longer changes.

The shapes are closed under affine maps, running suprema, and meets with a
constant vector, which is what makes eventual membership decidable for all
templates rather than sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union as TUnion

from .carriers import TAIL_SEQ, Carrier, Vec, inf, sup
from .rationals import ZERO, floor_frac, rat

Rel = int  # -1 below, 0 equal, +1 above


def _cmp(a: Fraction, b: Fraction) -> Rel:
    return (a > b) - (a < b)


def _least_true(pred: Callable[[int], bool], start: int) -> int:
    """Least k >= start with pred(k), for pred that is monotone once true."""
    if pred(start):
        return start
    step = 1
    while not pred(start + step):
        step *= 2
    lo, hi = start + step // 2, start + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


# -- scalar sequences ----------------------------------------------------------


@dataclass(frozen=True)
class ConstSeq:
    a: Fraction
    start: int = 0


@dataclass(frozen=True)
class GeomSeq:
    """a + b * lam^k with b != 0 and 0 < lam < 1; strictly monotone to a."""

    a: Fraction
    b: Fraction
    lam: Fraction
    start: int = 0


@dataclass(frozen=True)
class DecaySeq:
    """a + b/(k+1+q) with b != 0 and q >= 0; strictly monotone to a."""

    a: Fraction
    b: Fraction
    q: Fraction
    start: int = 0


@dataclass(frozen=True)
class StepSeq:
    """Constant ``before`` until position ``at``, constant ``after`` from it."""

    before: Fraction
    after: Fraction
    at: int
    start: int = 0


ScalarSeq = TUnion[ConstSeq, GeomSeq, DecaySeq, StepSeq]


def make_geom(a, b, lam, start=0) -> ScalarSeq:
    return ConstSeq(rat(a), start) if b == 0 else GeomSeq(rat(a), rat(b), rat(lam), start)


def make_decay(a, b, q, start=0) -> ScalarSeq:
    return ConstSeq(rat(a), start) if b == 0 else DecaySeq(rat(a), rat(b), rat(q), start)


def seq_eval(s: ScalarSeq, k: int) -> Fraction:
    if isinstance(s, ConstSeq):
        return s.a
    if isinstance(s, GeomSeq):
        return s.a + s.b * s.lam ** k
    if isinstance(s, DecaySeq):
        return s.a + s.b / (k + 1 + s.q)
    return s.after if k >= s.at else s.before


def seq_limit(s: ScalarSeq) -> Fraction:
    if isinstance(s, (GeomSeq, DecaySeq)):
        return s.a
    if isinstance(s, StepSeq):
        return s.after
    return s.a


def settle_cmp(s: ScalarSeq, r: Fraction) -> tuple[Rel, int]:
    """Eventual three-way relation of s(k) against r, with its settle index.

    Returns (rel, K) such that sign(s(k) - r) == rel for every k >= K.
    """
    r = rat(r)
    if isinstance(s, ConstSeq):
        return _cmp(s.a, r), s.start
    if isinstance(s, StepSeq):
        rel = _cmp(s.after, r)
        if _cmp(s.before, r) == rel:
            return rel, s.start
        return rel, max(s.start, s.at)
    if isinstance(s, GeomSeq):
        if s.b > 0:  # strictly decreasing, always above the limit
            if r <= s.a:
                return 1, s.start
            k = _least_true(lambda i: seq_eval(s, i) < r, s.start)
            return -1, k
        if r >= s.a:  # strictly increasing, always below the limit
            return -1, s.start
        k = _least_true(lambda i: seq_eval(s, i) > r, s.start)
        return 1, k
    # DecaySeq: solve exactly
    if s.b > 0:
        if r <= s.a:
            return 1, s.start
        # a + b/(k+1+q) < r  <=>  k > b/(r-a) - 1 - q
        x = s.b / (r - s.a) - 1 - s.q
        return -1, max(s.start, floor_frac(x) + 1)
    if r >= s.a:
        return -1, s.start
    x = -s.b / (s.a - r) - 1 - s.q
    return 1, max(s.start, floor_frac(x) + 1)


def seq_neg(s: ScalarSeq) -> ScalarSeq:
    if isinstance(s, ConstSeq):
        return ConstSeq(-s.a, s.start)
    if isinstance(s, GeomSeq):
        return GeomSeq(-s.a, -s.b, s.lam, s.start)
    if isinstance(s, DecaySeq):
        return DecaySeq(-s.a, -s.b, s.q, s.start)
    return StepSeq(-s.before, -s.after, s.at, s.start)


def seq_eventually_le(A: ScalarSeq, B: ScalarSeq) -> tuple[bool, int]:
    """Decide the eventual truth of A(k) <= B(k).

    Returns (True, K) when A(k) <= B(k) for all k >= K, and (False, K) when
    A(k) > B(k) for all k >= K.
    """
    start = max(A.start, B.start)
    if isinstance(A, StepSeq):
        ok, k = seq_eventually_le(ConstSeq(A.after, max(A.at, A.start)), B)
        return ok, max(k, A.at, start)
    if isinstance(B, StepSeq):
        ok, k = seq_eventually_le(A, ConstSeq(B.after, max(B.at, B.start)))
        return ok, max(k, B.at, start)
    la, lb = seq_limit(A), seq_limit(B)
    if la < lb:
        m = (la + lb) / 2
        _, ka = settle_cmp(A, m)
        _, kb = settle_cmp(B, m)
        return True, max(start, ka, kb)
    if la > lb:
        m = (la + lb) / 2
        _, ka = settle_cmp(A, m)
        _, kb = settle_cmp(B, m)
        return False, max(start, ka, kb)
    # equal limits
    if isinstance(A, ConstSeq) and isinstance(B, ConstSeq):
        return A.a <= B.a, start
    if isinstance(A, ConstSeq):
        # B approaches la from one side and never touches it
        side = 1 if _coef(B) > 0 else -1
        return side > 0, start
    if isinstance(B, ConstSeq):
        side = 1 if _coef(A) > 0 else -1
        return side < 0, start
    ca, cb = _coef(A), _coef(B)
    if ca < 0 < cb:
        return True, start
    if cb < 0 < ca:
        return False, start
    if ca < 0 and cb < 0:
        # mirror: A <= B  <=>  -B <= -A with both coefficients positive
        ok, k = _le_same_limit_positive(seq_neg(B), seq_neg(A))
        return ok, k
    return _le_same_limit_positive(A, B)


def _coef(s: ScalarSeq) -> Fraction:
    if isinstance(s, GeomSeq):
        return s.b
    if isinstance(s, DecaySeq):
        return s.b
    raise TypeError(f"no coefficient: {s!r}")


def _le_same_limit_positive(A: ScalarSeq, B: ScalarSeq) -> tuple[bool, int]:
    """A, B share a limit and both approach it strictly from above."""
    start = max(A.start, B.start)
    if isinstance(A, GeomSeq) and isinstance(B, GeomSeq):
        if A.lam == B.lam:
            return A.b <= B.b, start
        if A.lam < B.lam:
            # (A - l)/(B - l) -> 0, single crossing
            k = _least_true(lambda i: seq_eval(A, i) <= seq_eval(B, i), start)
            return True, k
        k = _least_true(lambda i: seq_eval(A, i) > seq_eval(B, i), start)
        return False, k
    if isinstance(A, DecaySeq) and isinstance(B, DecaySeq):
        # difference sign is the sign of (bA - bB)k + bA(1+qB) - bB(1+qA)
        slope = A.b - B.b
        const = A.b * (1 + B.q) - B.b * (1 + A.q)
        if slope == 0:
            return const <= 0, start
        x = -const / slope
        k = max(start, floor_frac(x) + 1)
        return slope < 0, k
    if isinstance(A, GeomSeq) and isinstance(B, DecaySeq):
        # A <= B  <=>  bA * lam^k * (k+1+q) <= bB; LHS decreasing past k*
        k_star = _monotone_from(A.b, A.lam, B.q)
        k = _least_true(
            lambda i: A.b * A.lam ** i * (i + 1 + B.q) <= B.b, max(start, k_star)
        )
        return True, k
    if isinstance(A, DecaySeq) and isinstance(B, GeomSeq):
        # geometric eventually drops below the harmonic tail
        k_star = _monotone_from(B.b, B.lam, A.q)
        k = _least_true(
            lambda i: B.b * B.lam ** i * (i + 1 + A.q) < A.b, max(start, k_star)
        )
        return False, k
    raise TypeError(f"uncomparable sequences: {A!r} vs {B!r}")


def _monotone_from(b: Fraction, lam: Fraction, q: Fraction) -> int:
    """Index past which b * lam^k * (k+1+q) is strictly decreasing."""
    # ratio < 1  <=>  lam (k+2+q) < k+1+q  <=>  k (1-lam) > lam(2+q) - (1+q)
    x = (lam * (2 + q) - (1 + q)) / (1 - lam)
    return max(0, floor_frac(x) + 1)


# -- vector forms ----------------------------------------------------------------


@dataclass(frozen=True)
class ConstForm:
    v: Vec
    start: int = 0


@dataclass(frozen=True)
class GeomForm:
    c: Vec
    v: Vec
    lam: Fraction
    start: int = 0


@dataclass(frozen=True)
class DecayForm:
    c: Vec
    p: Vec
    q: Fraction
    start: int = 0


@dataclass(frozen=True)
class ShiftForm:
    """Tailseq only: fixed prefix, head up to position k, tail beyond."""

    fixed: tuple[Fraction, ...]
    head: Fraction
    tailv: Fraction
    start: int = 0

    def __post_init__(self):
        if self.start < len(self.fixed):
            object.__setattr__(self, "start", len(self.fixed))


Form = TUnion[ConstForm, GeomForm, DecayForm, ShiftForm]


def make_shift_form(fixed, head, tailv, start) -> Form:
    fixed = tuple(rat(f) for f in fixed)
    head, tailv = rat(head), rat(tailv)
    if head == tailv:
        return ConstForm(Vec.seq(fixed, head), max(start, len(fixed)))
    return ShiftForm(fixed, head, tailv, start)


def make_geom_form(c: Vec, v: Vec, lam, start=0) -> Form:
    if v.is_zero():
        return ConstForm(c, start)
    return GeomForm(c, v, rat(lam), start)


def make_decay_form(c: Vec, p: Vec, q, start=0) -> Form:
    if p.is_zero():
        return ConstForm(c, start)
    return DecayForm(c, p, rat(q), start)


def form_carrier(form: Form) -> Carrier:
    if isinstance(form, ConstForm):
        return form.v.carrier
    if isinstance(form, (GeomForm,)):
        return form.c.carrier
    if isinstance(form, DecayForm):
        return form.c.carrier
    return TAIL_SEQ


def form_eval(form: Form, k: int) -> Vec:
    """Exact value at index k (requires k >= form.start)."""
    if k < form.start:
        raise ValueError(f"form valid from {form.start}, got {k}")
    if isinstance(form, ConstForm):
        return form.v
    if isinstance(form, GeomForm):
        return form.c + form.v * form.lam ** k
    if isinstance(form, DecayForm):
        return form.c + form.p * (Fraction(1) / (k + 1 + form.q))
    pad = (form.head,) * (k - len(form.fixed))
    return Vec.seq(form.fixed + pad, form.tailv)


def form_limit(form: Form) -> Vec:
    """Pointwise limit vector (always a carrier element for these shapes)."""
    if isinstance(form, ConstForm):
        return form.v
    if isinstance(form, GeomForm):
        return form.c
    if isinstance(form, DecayForm):
        return form.c
    return Vec.seq(form.fixed, form.head)


def form_prefix_bound(form: Form) -> int:
    if isinstance(form, ConstForm):
        return form.v.prefix_len
    if isinstance(form, GeomForm):
        return max(form.c.prefix_len, form.v.prefix_len)
    if isinstance(form, DecayForm):
        return max(form.c.prefix_len, form.p.prefix_len)
    return len(form.fixed)


def form_sup_tail(form: Form) -> Vec:
    """Pointwise supremum of the values at indices >= start."""
    if isinstance(form, ConstForm):
        return form.v
    if isinstance(form, GeomForm):
        bump = form.v.map(lambda b: max(b * form.lam ** form.start, ZERO))
        return form.c + bump
    if isinstance(form, DecayForm):
        bump = form.p.map(lambda b: max(b / (form.start + 1 + form.q), ZERO))
        return form.c + bump
    pad = (form.head,) * (form.start - len(form.fixed))
    return Vec.seq(form.fixed + pad, max(form.head, form.tailv))


def form_inf_tail(form: Form) -> Vec:
    if isinstance(form, ConstForm):
        return form.v
    if isinstance(form, GeomForm):
        bump = form.v.map(lambda b: min(b * form.lam ** form.start, ZERO))
        return form.c + bump
    if isinstance(form, DecayForm):
        bump = form.p.map(lambda b: min(b / (form.start + 1 + form.q), ZERO))
        return form.c + bump
    pad = (form.head,) * (form.start - len(form.fixed))
    return Vec.seq(form.fixed + pad, min(form.head, form.tailv))


def affine_form(form: Form, t: Fraction, b: Optional[Vec] = None) -> Form:
    """The form of k -> t * value(k) + b."""
    t = rat(t)
    if t == 0:
        raise ValueError("affine form needs a nonzero scale")
    if isinstance(form, ConstForm):
        v = form.v * t
        return ConstForm(v + b if b is not None else v, form.start)
    if isinstance(form, GeomForm):
        c = form.c * t
        return make_geom_form(c + b if b is not None else c, form.v * t, form.lam,
                              form.start)
    if isinstance(form, DecayForm):
        c = form.c * t
        return make_decay_form(c + b if b is not None else c, form.p * t, form.q,
                               form.start)
    # shift: offsets with a longer prefix than the fixed part push the start up
    off = b if b is not None else Vec.seq((), 0)
    width = max(len(form.fixed), off.prefix_len)
    fixed = tuple(
        t * (form.fixed[j] if j < len(form.fixed) else form.head) + off.coord(j + 1)
        for j in range(width)
    )
    return make_shift_form(fixed, t * form.head + off.tail, t * form.tailv + off.tail,
                           max(form.start, width))


# -- per-coordinate profiles ------------------------------------------------------


def coord_profile(form: Form, j: int) -> ScalarSeq:
    """Scalar sequence of the values at fixed 1-based position j."""
    if isinstance(form, ConstForm):
        return ConstSeq(form.v.coord(j), form.start)
    if isinstance(form, GeomForm):
        return make_geom(form.c.coord(j), form.v.coord(j), form.lam, form.start)
    if isinstance(form, DecayForm):
        return make_decay(form.c.coord(j), form.p.coord(j), form.q, form.start)
    if j <= len(form.fixed):
        return ConstSeq(form.fixed[j - 1], form.start)
    if j <= form.start:
        return ConstSeq(form.head, form.start)
    return StepSeq(form.tailv, form.head, j, form.start)


def tail_profile(form: Form) -> ScalarSeq:
    """Scalar sequence of the tail field of the values (tailseq only)."""
    if isinstance(form, ConstForm):
        return ConstSeq(form.v.tail, form.start)  # type: ignore[arg-type]
    if isinstance(form, GeomForm):
        return make_geom(form.c.tail, form.v.tail, form.lam, form.start)
    if isinstance(form, DecayForm):
        return make_decay(form.c.tail, form.p.tail, form.q, form.start)
    return ConstSeq(form.tailv, form.start)


def far_members(form: Form, bound: int) -> list[tuple[ScalarSeq, int]]:
    """Value sequences occurring at positions beyond ``bound``.

    Each entry is (sequence, present_from): the sequence value appears at
    some position > bound for every index k >= present_from.  ``bound``
    must dominate the form's structural prefix.
    """
    if bound < form_prefix_bound(form):
        raise ValueError("far bound below the form's prefix")
    if isinstance(form, ShiftForm):
        return [
            (ConstSeq(form.head, form.start), max(form.start, bound + 1)),
            (ConstSeq(form.tailv, form.start), form.start),
        ]
    return [(tail_profile(form), form.start)]


_OPS = {"le", "ge", "lt", "gt", "eq"}


def _rel_ok(rel: Rel, op: str) -> bool:
    if op == "le":
        return rel <= 0
    if op == "ge":
        return rel >= 0
    if op == "lt":
        return rel < 0
    if op == "gt":
        return rel > 0
    return rel == 0


def form_settle_vs_vec(form: Form, w: Vec, op: str) -> tuple[bool, int]:
    """Eventual truth of ``value(k) op w`` coordinatewise (tail included).

    (True, K): holds for all k >= K; (False, K): fails for all k >= K.
    """
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    carrier = form_carrier(form)
    conds: list[tuple[ScalarSeq, Fraction, int]] = []  # (seq, bound, present_from)
    if carrier.kind == "findim":
        for j in range(1, carrier.dim + 1):
            conds.append((coord_profile(form, j), w.coord(j), form.start))
    else:
        bound = max(form_prefix_bound(form), w.prefix_len)
        for j in range(1, bound + 1):
            conds.append((coord_profile(form, j), w.coord(j), form.start))
        for seq, present in far_members(form, bound):
            conds.append((seq, w.tail, present))  # type: ignore[arg-type]
    ok_from = form.start
    fail_from: Optional[int] = None
    for seq, r, present in conds:
        rel, k = settle_cmp(seq, r)
        if _rel_ok(rel, op):
            ok_from = max(ok_from, k)
        else:
            cand = max(k, present)
            fail_from = cand if fail_from is None else min(fail_from, cand)
    if fail_from is not None:
        return False, fail_from
    return True, ok_from


def form_settle_ne(form: Form, w: Vec) -> tuple[bool, int]:
    """Eventual truth of ``value(k) != w``."""
    carrier = form_carrier(form)
    conds: list[tuple[ScalarSeq, Fraction, int]] = []
    if carrier.kind == "findim":
        for j in range(1, carrier.dim + 1):
            conds.append((coord_profile(form, j), w.coord(j), form.start))
    else:
        bound = max(form_prefix_bound(form), w.prefix_len)
        for j in range(1, bound + 1):
            conds.append((coord_profile(form, j), w.coord(j), form.start))
        for seq, present in far_members(form, bound):
            conds.append((seq, w.tail, present))  # type: ignore[arg-type]
    ne_from: Optional[int] = None
    eq_from = form.start
    for seq, r, present in conds:
        rel, k = settle_cmp(seq, r)
        if rel != 0:
            cand = max(k, present)
            ne_from = cand if ne_from is None else min(ne_from, cand)
        else:
            eq_from = max(eq_from, k)
    if ne_from is not None:
        return True, ne_from
    return False, eq_from


# -- closure under running suprema and meets ---------------------------------------


def _build_vec(carrier: Carrier, width: int, coord_fn, tail_value) -> Vec:
    coords = tuple(coord_fn(j) for j in range(1, width + 1))
    if carrier.kind == "findim":
        return Vec(carrier, coords)
    return Vec(carrier, coords, rat(tail_value))


def _labels(carrier: Carrier, width: int):
    if carrier.kind == "findim":
        return [j for j in range(1, carrier.dim + 1)]
    return [j for j in range(1, width + 1)] + ["tail"]


def running_sup_form(form: Form, early_sup: Optional[Vec]) -> Form:
    """Form of k -> early_sup v (sup of value(j) for form.start <= j <= k)."""
    carrier = form_carrier(form)
    if isinstance(form, ConstForm):
        v = form.v if early_sup is None else sup(form.v, early_sup)
        return ConstForm(v, form.start)
    if isinstance(form, (GeomForm, DecayForm)):
        if isinstance(form, GeomForm):
            c, coefv, phi = form.c, form.v, lambda j, k: form.lam ** k
        else:
            c, coefv, phi = form.c, form.p, lambda j, k: Fraction(1) / (k + 1 + form.q)
        width = max(form_prefix_bound(form),
                    early_sup.prefix_len if early_sup is not None else 0)
        start = form.start
        new_c: dict = {}
        new_b: dict = {}
        for lab in _labels(carrier, width):
            cc = c.at(lab)
            bb = coefv.at(lab)
            e = early_sup.at(lab) if early_sup is not None else None
            if bb >= 0:
                # decreasing coordinate: the running max freezes at form.start
                top = cc + bb * phi(0, form.start)
                if e is not None:
                    top = max(top, e)
                new_c[lab], new_b[lab] = top, ZERO
            else:
                # increasing to cc: either an early value dominates forever
                # or the curve overtakes it at a computable index
                if e is not None and e >= cc:
                    new_c[lab], new_b[lab] = e, ZERO
                else:
                    if e is not None:
                        seq = (make_geom(cc, bb, form.lam, form.start)
                               if isinstance(form, GeomForm)
                               else make_decay(cc, bb, form.q, form.start))
                        rel, k0 = settle_cmp(seq, e)
                        if rel <= 0:
                            raise AssertionError("increasing coordinate must pass e")
                        start = max(start, k0)
                    new_c[lab], new_b[lab] = cc, bb
        cvec = _build_vec(carrier, width, lambda j: new_c[j], new_c.get("tail", ZERO))
        bvec = _build_vec(carrier, width, lambda j: new_b[j], new_b.get("tail", ZERO))
        if isinstance(form, GeomForm):
            return make_geom_form(cvec, bvec, form.lam, start)
        return make_decay_form(cvec, bvec, form.q, start)
    # shift form
    s = form.start
    fixed = form.fixed + (form.head,) * (s - len(form.fixed))
    head = max(form.head, form.tailv)
    tailv = form.tailv
    if early_sup is not None:
        width = max(len(fixed), early_sup.prefix_len)
        fixed = tuple(
            max(fixed[j] if j < len(fixed) else head, early_sup.coord(j + 1))
            for j in range(width)
        )
        head = max(head, early_sup.tail)
        tailv = max(tailv, early_sup.tail)
    return make_shift_form(fixed, head, tailv, max(s, len(fixed)))


def meet_const_form(form: Form, cap: Vec) -> Form:
    """Form of k -> value(k) ^ cap."""
    carrier = form_carrier(form)
    if isinstance(form, ConstForm):
        return ConstForm(inf(form.v, cap), form.start)
    if isinstance(form, (GeomForm, DecayForm)):
        coefv = form.v if isinstance(form, GeomForm) else form.p
        width = max(form_prefix_bound(form), cap.prefix_len)
        start = form.start
        new_c: dict = {}
        new_b: dict = {}
        for lab in _labels(carrier, width):
            cc = form.c.at(lab)
            bb = coefv.at(lab)
            m = cap.at(lab)
            if bb == 0:
                new_c[lab], new_b[lab] = min(cc, m), ZERO
                continue
            seq = (make_geom(cc, bb, form.lam, form.start)
                   if isinstance(form, GeomForm)
                   else make_decay(cc, bb, form.q, form.start))
            if bb > 0:
                # strictly decreasing, always above cc
                if m <= cc:
                    new_c[lab], new_b[lab] = m, ZERO
                elif m >= seq_eval(seq, form.start):
                    new_c[lab], new_b[lab] = cc, bb
                else:
                    rel, k0 = settle_cmp(seq, m)
                    start = max(start, k0)
                    new_c[lab], new_b[lab] = cc, bb
            else:
                # strictly increasing, always below cc
                if m >= cc:
                    new_c[lab], new_b[lab] = cc, bb
                else:
                    rel, k0 = settle_cmp(seq, m)
                    start = max(start, k0)
                    new_c[lab], new_b[lab] = m, ZERO
        cvec = _build_vec(carrier, width, lambda j: new_c[j], new_c.get("tail", ZERO))
        bvec = _build_vec(carrier, width, lambda j: new_b[j], new_b.get("tail", ZERO))
        if isinstance(form, GeomForm):
            return make_geom_form(cvec, bvec, form.lam, start)
        return make_decay_form(cvec, bvec, form.q, start)
    width = max(len(form.fixed), cap.prefix_len)
    fixed = tuple(
        min(form.fixed[j] if j < len(form.fixed) else form.head, cap.coord(j + 1))
        for j in range(width)
    )
    return make_shift_form(fixed, min(form.head, cap.tail), min(form.tailv, cap.tail),
                           max(form.start, width))


def abs_centered_form(form: Form) -> Form:
    """Form of k -> |value(k)| for a form whose limit is zero."""
    if isinstance(form, ConstForm):
        return ConstForm(abs(form.v), form.start)
    if isinstance(form, GeomForm):
        if not form.c.is_zero():
            raise ValueError("absolute form needs a zero limit")
        return GeomForm(form.c, abs(form.v), form.lam, form.start)
    if isinstance(form, DecayForm):
        if not form.c.is_zero():
            raise ValueError("absolute form needs a zero limit")
        return DecayForm(form.c, abs(form.p), form.q, form.start)
    if any(f != 0 for f in form.fixed) or form.head != 0:
        raise ValueError("absolute form needs a zero limit")
    return ShiftForm(form.fixed, form.head, abs(form.tailv), form.start)


def form_eventually_le(lhs: Form, rhs: Form) -> tuple[bool, int]:
    """Eventual coordinatewise domination lhs(k) <= rhs(k) (tail included)."""
    carrier = form_carrier(lhs)
    if carrier != form_carrier(rhs):
        raise ValueError("forms live in different carriers")
    start = max(lhs.start, rhs.start)
    conds: list[tuple[ScalarSeq, ScalarSeq]] = []
    if carrier.kind == "findim":
        for j in range(1, carrier.dim + 1):
            conds.append((coord_profile(lhs, j), coord_profile(rhs, j)))
    else:
        bound = max(form_prefix_bound(lhs), form_prefix_bound(rhs), start)
        for j in range(1, bound + 1):
            conds.append((coord_profile(lhs, j), coord_profile(rhs, j)))
        # far zones align positionwise for shift forms; otherwise compare tails
        lf = far_members(lhs, bound)
        rf = far_members(rhs, bound)
        if isinstance(lhs, ShiftForm) and isinstance(rhs, ShiftForm):
            conds.append((ConstSeq(lhs.head, start), ConstSeq(rhs.head, start)))
            conds.append((ConstSeq(lhs.tailv, start), ConstSeq(rhs.tailv, start)))
        else:
            for lseq, _ in lf:
                for rseq, _ in rf:
                    conds.append((lseq, rseq))
    worst = start
    for lseq, rseq in conds:
        ok, k = seq_eventually_le(lseq, rseq)
        if not ok:
            return False, k
        worst = max(worst, k)
    return True, worst
