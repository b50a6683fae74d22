"""Order intervals, a closed subset grammar, and structure procedures.

The grammar is deliberately closed: intervals, finitely generated ideals,
bands and solid hulls, coordinate half-spaces, the zero-tail ideal, and
boolean/affine combinations of those.  Membership is decidable everywhere;
solidity checking is three-valued with replayable refutation witnesses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from .carriers import (
    TAIL_SEQ,
    Carrier,
    CoordLabel,
    Vec,
    aligned,
    inf,
    leq,
    scale,
    strictly_everywhere_below,
    sup,
    unit,
    zero,
)
from .rationals import rat


class Semantics(Enum):
    """Meaning of the strict order "<" used by open intervals.

    STRICT_PARTIAL: a < z means a <= z and a != z (the lattice order, strict).
    STRICT_UNIFORM: a < z means strict inequality in every coordinate,
    tail included.
    """

    STRICT_PARTIAL = "strict-partial"
    STRICT_UNIFORM = "strict-uniform"


class IntervalKind(Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Interval:
    lo: Vec
    hi: Vec
    kind: IntervalKind = IntervalKind.CLOSED
    semantics: Semantics = Semantics.STRICT_PARTIAL

    def __post_init__(self):
        if not leq(self.lo, self.hi):
            raise ValueError("interval endpoints must satisfy lo <= hi")
        if self.kind is IntervalKind.OPEN:
            if self.semantics is Semantics.STRICT_PARTIAL:
                if self.lo == self.hi:
                    raise ValueError("open interval needs lo strictly below hi")
            else:
                if not strictly_everywhere_below(self.lo, self.hi):
                    raise ValueError(
                        "open interval is empty under strict-uniform semantics"
                    )

    @property
    def carrier(self) -> Carrier:
        return self.lo.carrier

    def width(self) -> Vec:
        return self.hi - self.lo


def closed_interval(lo: Vec, hi: Vec,
                    semantics: Semantics = Semantics.STRICT_PARTIAL) -> Interval:
    return Interval(lo, hi, IntervalKind.CLOSED, semantics)


def open_interval(lo: Vec, hi: Vec,
                  semantics: Semantics = Semantics.STRICT_PARTIAL) -> Interval:
    return Interval(lo, hi, IntervalKind.OPEN, semantics)


def strictly_below(x: Vec, y: Vec, semantics: Semantics) -> bool:
    if semantics is Semantics.STRICT_PARTIAL:
        return leq(x, y) and x != y
    return strictly_everywhere_below(x, y)


def interval_contains(iv: Interval, z: Vec) -> bool:
    if iv.kind is IntervalKind.CLOSED:
        return leq(iv.lo, z) and leq(z, iv.hi)
    return strictly_below(iv.lo, z, iv.semantics) and strictly_below(z, iv.hi, iv.semantics)


# -- the set-expression grammar ----------------------------------------------


class SetExpr:
    """Base class; the constructors below are the whole grammar."""

    __slots__ = ()


@dataclass(frozen=True)
class IntervalSet(SetExpr):
    interval: Interval


@dataclass(frozen=True)
class Ideal(SetExpr):
    gens: tuple[Vec, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("ideal needs at least one generator")


@dataclass(frozen=True)
class Band(SetExpr):
    gens: tuple[Vec, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("band needs at least one generator")


@dataclass(frozen=True)
class SolidHull(SetExpr):
    gens: tuple[Vec, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("solid hull needs at least one generator")


@dataclass(frozen=True)
class HalfSpace(SetExpr):
    """{z : z_coord <= bound} or {z : z_coord >= bound}; coord may be "tail"."""

    coord: CoordLabel
    relation: str  # "le" | "ge"
    bound: Fraction

    def __post_init__(self):
        if self.relation not in ("le", "ge"):
            raise ValueError("half-space relation must be 'le' or 'ge'")
        if self.coord != "tail" and (not isinstance(self.coord, int) or self.coord < 1):
            raise ValueError("half-space coordinate must be a 1-based index or 'tail'")
        object.__setattr__(self, "bound", rat(self.bound))


@dataclass(frozen=True)
class TailZero(SetExpr):
    """Sequences whose constant tail is zero (an ideal, not a band)."""


@dataclass(frozen=True)
class Complement(SetExpr):
    inner: SetExpr


@dataclass(frozen=True)
class Union(SetExpr):
    parts: tuple[SetExpr, ...]


@dataclass(frozen=True)
class Intersection(SetExpr):
    parts: tuple[SetExpr, ...]


@dataclass(frozen=True)
class Translate(SetExpr):
    inner: SetExpr
    by: Vec


@dataclass(frozen=True)
class Dilate(SetExpr):
    inner: SetExpr
    factor: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factor", rat(self.factor))
        if self.factor == 0:
            raise ValueError("dilation factor must be nonzero")


EMPTY = Union(())
FULL = Intersection(())


def union(*parts: SetExpr) -> Union:
    return Union(tuple(parts))


def intersection(*parts: SetExpr) -> Intersection:
    return Intersection(tuple(parts))


def member(expr: SetExpr, z: Vec) -> bool:
    """Exact membership by structural recursion."""
    if isinstance(expr, IntervalSet):
        return interval_contains(expr.interval, z)
    if isinstance(expr, Ideal):
        return ideal_member(expr.gens, z)[0]
    if isinstance(expr, Band):
        return band_member(expr.gens, z)
    if isinstance(expr, SolidHull):
        return solid_hull_member(expr.gens, z)
    if isinstance(expr, HalfSpace):
        value = z.at(expr.coord)
        return value <= expr.bound if expr.relation == "le" else value >= expr.bound
    if isinstance(expr, TailZero):
        if z.carrier != TAIL_SEQ:
            raise ValueError("tail-zero only makes sense in the tailseq carrier")
        return z.tail == 0
    if isinstance(expr, Complement):
        return not member(expr.inner, z)
    if isinstance(expr, Union):
        return any(member(p, z) for p in expr.parts)
    if isinstance(expr, Intersection):
        return all(member(p, z) for p in expr.parts)
    if isinstance(expr, Translate):
        return member(expr.inner, z - expr.by)
    if isinstance(expr, Dilate):
        return member(expr.inner, scale(1 / expr.factor, z))
    raise TypeError(f"not a set expression: {expr!r}")


def collect_vectors(expr: SetExpr) -> tuple[Vec, ...]:
    """Every vector embedded in the expression, in syntactic order."""
    out: list[Vec] = []

    def walk(e: SetExpr) -> None:
        if isinstance(e, IntervalSet):
            out.extend((e.interval.lo, e.interval.hi))
        elif isinstance(e, (Ideal, Band, SolidHull)):
            out.extend(e.gens)
        elif isinstance(e, Complement):
            walk(e.inner)
        elif isinstance(e, (Union, Intersection)):
            for p in e.parts:
                walk(p)
        elif isinstance(e, Translate):
            walk(e.inner)
            out.append(e.by)
        elif isinstance(e, Dilate):
            walk(e.inner)

    walk(expr)
    return tuple(out)


def carrier_of(expr: SetExpr) -> Optional[Carrier]:
    """The shared carrier of all embedded vectors (None if there are none)."""
    vecs = collect_vectors(expr)
    if not vecs:
        return TAIL_SEQ if _mentions_tail(expr) else None
    carrier = vecs[0].carrier
    for v in vecs[1:]:
        if v.carrier != carrier:
            raise ValueError("set expression mixes carriers")
    return carrier


def _mentions_tail(expr: SetExpr) -> bool:
    if isinstance(expr, TailZero):
        return True
    if isinstance(expr, HalfSpace):
        return expr.coord == "tail"
    if isinstance(expr, Complement):
        return _mentions_tail(expr.inner)
    if isinstance(expr, (Union, Intersection)):
        return any(_mentions_tail(p) for p in expr.parts)
    if isinstance(expr, (Translate, Dilate)):
        return _mentions_tail(expr.inner)
    return False


# -- ideals, bands, hulls ------------------------------------------------------


def _abs_sum(gens: Sequence[Vec]) -> Vec:
    total = abs(gens[0])
    for g in gens[1:]:
        total = total + abs(g)
    return total


def ideal_member(gens: Sequence[Vec], y: Vec) -> tuple[bool, Optional[Fraction]]:
    """Membership in the ideal generated by ``gens``.

    y belongs iff |y| <= lam * (|g1| + ... + |gm|) for some rational lam > 0.
    Returns the smallest lam >= 0 achieving the bound (0 exactly for y = 0).
    """
    if not gens:
        raise ValueError("ideal needs at least one generator")
    s = _abs_sum(gens)
    ay = abs(y)
    ys, ss = aligned(ay, s)
    best = Fraction(0)
    for yv, sv in zip(ys, ss):
        if sv == 0:
            if yv != 0:
                return False, None
        else:
            best = max(best, yv / sv)
    if y.carrier.kind == "tailseq":
        if s.tail == 0:
            if ay.tail != 0:
                return False, None
        else:
            best = max(best, ay.tail / s.tail)  # type: ignore[operator]
    return True, best


def support_horizon(vecs: Sequence[Vec]) -> int:
    """Prefix length past which every listed vector equals its tail."""
    if vecs and vecs[0].carrier.kind == "findim":
        return vecs[0].carrier.dim
    return max((v.prefix_len for v in vecs), default=0)


def band_member(gens: Sequence[Vec], y: Vec) -> bool:
    """Membership in the band generated by ``gens`` (support rule).

    y belongs iff it vanishes at every position, tail included, where all
    generators vanish.
    """
    if not gens:
        raise ValueError("band needs at least one generator")
    horizon = support_horizon(list(gens) + [y])
    for p in range(1, horizon + 1):
        if y.coord(p) != 0 and all(g.coord(p) == 0 for g in gens):
            return False
    if y.carrier.kind == "tailseq":
        if y.tail != 0 and all(g.tail == 0 for g in gens):
            return False
    return True


def solid_hull_member(gens: Sequence[Vec], y: Vec) -> bool:
    """y belongs to the solid hull iff |y| <= |g| for some generator g."""
    if not gens:
        raise ValueError("solid hull needs at least one generator")
    ay = abs(y)
    return any(leq(ay, abs(g)) for g in gens)


def disjoint(x: Vec, y: Vec) -> bool:
    """|x| ^ |y| = 0."""
    return inf(abs(x), abs(y)).is_zero()


# -- atoms ---------------------------------------------------------------------


def is_atom(x: Vec) -> bool:
    """Positive x is an atom iff exactly one coordinate is nonzero.

    A nonzero tail stands for infinitely many nonzero coordinates, so such
    vectors are never atoms.  Equivalent to: no two disjoint nonzero
    elements fit below x.
    """
    if not leq(zero(x.carrier), x):
        raise ValueError("atoms are sought among positive vectors only")
    if x.is_zero():
        raise ValueError("the zero vector is not eligible")
    if x.carrier.kind == "tailseq" and x.tail != 0:
        return False
    return sum(1 for c in x.coords if c != 0) == 1


@dataclass(frozen=True)
class AtomsReport:
    carrier: Carrier
    atomic: bool
    samples: tuple[Vec, ...]
    description: str


def carrier_atoms(carrier: Carrier, sample_count: int = 4) -> AtomsReport:
    """Describe the atom set of a carrier; both carriers are atomic."""
    if carrier.kind == "findim":
        samples = tuple(unit(carrier, j) for j in range(1, carrier.dim + 1))
        text = ("every atom is a positive rational multiple of a standard "
                f"unit vector e_1..e_{carrier.dim}")
    else:
        samples = tuple(unit(carrier, j) for j in range(1, sample_count + 1))
        text = ("every atom is a positive rational multiple of a standard "
                "unit vector e_j, j >= 1")
    return AtomsReport(carrier, True, samples, text)


# -- solidity ------------------------------------------------------------------


@dataclass(frozen=True)
class SolidityVerdict:
    status: str  # "certified" | "refuted" | "unknown"
    rule_trace: tuple[str, ...] = ()
    witness: Optional[tuple[Vec, Vec]] = None  # (x in S, y with |y| <= |x| outside S)
    searched: int = 0


def _solid_rules(expr: SetExpr) -> Optional[list[str]]:
    if isinstance(expr, (Ideal, TailZero)):
        return ["ideal-is-solid"]
    if isinstance(expr, Band):
        return ["band-is-solid"]
    if isinstance(expr, SolidHull):
        return ["solid-hull-is-solid"]
    if isinstance(expr, IntervalSet):
        iv = expr.interval
        if iv.lo == -iv.hi:
            if iv.kind is IntervalKind.CLOSED:
                return ["symmetric-closed-interval"]
            if iv.semantics is Semantics.STRICT_UNIFORM:
                return ["symmetric-open-interval-uniform"]
        return None
    if isinstance(expr, Union):
        return _all_parts_solid(expr.parts, "union-of-solid")
    if isinstance(expr, Intersection):
        return _all_parts_solid(expr.parts, "intersection-of-solid")
    if isinstance(expr, Dilate):
        sub = _solid_rules(expr.inner)
        return ["dilate-of-solid"] + sub if sub is not None else None
    return None


def _all_parts_solid(parts: Sequence[SetExpr], rule: str) -> Optional[list[str]]:
    trace = [rule]
    for p in parts:
        sub = _solid_rules(p)
        if sub is None:
            return None
        trace.extend(sub)
    return trace


DEFAULT_GRID = tuple(
    rat(v) for v in (-2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2)
)


def grid_vectors(carrier: Carrier, values: Sequence[Fraction] = DEFAULT_GRID,
                 prefix_len: int = 2, limit: int = 4096) -> list[Vec]:
    """A deterministic grid of probe vectors, small magnitudes first."""
    vals = sorted(set(rat(v) for v in values), key=lambda v: (abs(v), v))
    out: list[Vec] = []
    if carrier.kind == "findim":
        for combo in itertools.product(vals, repeat=carrier.dim):
            out.append(Vec(carrier, combo))
            if len(out) >= limit:
                break
    else:
        for plen in range(prefix_len + 1):
            for tail in vals:
                for combo in itertools.product(vals, repeat=plen):
                    out.append(Vec(carrier, combo, tail))
                    if len(out) >= limit:
                        return _dedup(out)
    return _dedup(out)


def _dedup(vecs: Sequence[Vec]) -> list[Vec]:
    seen = set()
    out = []
    for v in vecs:
        if v not in seen:
            seen.add(v)
            out.append(v)
    return out


def check_solid(expr: SetExpr, grid: Optional[Sequence[Vec]] = None,
                max_pairs: int = 200_000) -> SolidityVerdict:
    """Three-valued solidity check.

    Certified by structural rules; refuted by a searched witness pair
    (x in S, |y| <= |x|, y outside S); otherwise unknown.
    """
    trace = _solid_rules(expr)
    if trace is not None:
        return SolidityVerdict("certified", tuple(trace))
    carrier = carrier_of(expr)
    if carrier is None:
        return SolidityVerdict("unknown")
    probes = list(grid) if grid is not None else grid_vectors(carrier)
    inside = [x for x in probes if member(expr, x)]
    tried = 0
    for x in inside:
        ax = abs(x)
        for y in probes:
            tried += 1
            if tried > max_pairs:
                return SolidityVerdict("unknown", searched=tried - 1)
            if leq(abs(y), ax) and not member(expr, y):
                return SolidityVerdict("refuted", witness=(x, y), searched=tried)
    return SolidityVerdict("unknown", searched=tried)
