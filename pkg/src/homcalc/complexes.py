"""Bounded complexes of graded free modules over a quotient ring, with
certified trust windows.

A complex object here is always a concrete bounded complex of free
modules standing in for a derived-category object.  Because resolutions
are computed only up to a finite homological bound, a representative can
have "garbage" homology near its truncation edge.  Every FreeComplex
therefore carries:

* window: the set of homological degrees where the homology of the
  representative provably equals the homology of the intended object;
* true_lo, true_hi: certified bounds outside which the intended object
  has no homology (the representative may still have terms there).

The window calculus below is conservative.  Hom and tensor windows come
from the hypercohomology spectral sequences: an untrusted band appears
wherever a garbage homology degree of one factor can pair with a cell of
the other, and wherever cells missing from a truncated resolution can
pair with true homology.  Degrees never silently leave the window;
consumers must check membership before reading homology.

Floor proviso.  The resolution-shaped factor of a Hom or tensor must be
trusted at its bottom cell; the window part containing that cell sets
the trusted-cell ceiling.  When that part has a finite floor (which
happens for re-resolved intermediates such as a resolution of a Hom
complex), window claims are made relative to the assumption that the
true object has no homology below the floor.  All verdicts built on
these windows are therefore stamped with the resolution bound; raising
the bound re-justifies them on a larger range, never changes a trusted
reading (the stability contract).

Sign conventions: d lowers homological degree; (shift X)_v = X_{v-1}
with differential -d; cone(f)_j = X_{j-1} (+) Y_j with d(a, b) =
(-da, db + fa); Hom(X, Y)_t = prod Hom(X_i, Y_{i+t}) with (df)_i =
d_Y f_i - (-1)^t f_{i-1} d_X; d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy.
"""

from __future__ import annotations

from .ring import GradedFree, GradedMatrix, Polynomial, ZERO_FREE
from .groebner import QuotientRing, kernel_matrix, lift_matrix, interreduce_columns
from . import linalg

INF = float("inf")
NEG_INF = float("-inf")


# ---------------------------------------------------------------------------
# trust windows: unions of integer intervals with infinite ends


class TrustWindow:
    """Disjoint, sorted union of closed intervals of homological degrees."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        cleaned = sorted((lo, hi) for lo, hi in parts if lo <= hi)
        merged = []
        for lo, hi in cleaned:
            if merged and lo <= merged[-1][1] + 1:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        self.parts = tuple(merged)

    @staticmethod
    def all():
        return TrustWindow([(NEG_INF, INF)])

    @staticmethod
    def empty():
        return TrustWindow([])

    @staticmethod
    def interval(lo, hi):
        return TrustWindow([(lo, hi)])

    def contains(self, d) -> bool:
        return any(lo <= d <= hi for lo, hi in self.parts)

    def contains_range(self, lo, hi) -> bool:
        return any(plo <= lo and hi <= phi for plo, phi in self.parts)

    def shift(self, n) -> "TrustWindow":
        return TrustWindow([(lo + n, hi + n) for lo, hi in self.parts])

    def intersect(self, other: "TrustWindow") -> "TrustWindow":
        out = []
        for alo, ahi in self.parts:
            for blo, bhi in other.parts:
                lo, hi = max(alo, blo), min(ahi, bhi)
                if lo <= hi:
                    out.append((lo, hi))
        return TrustWindow(out)

    def union(self, other: "TrustWindow") -> "TrustWindow":
        return TrustWindow(list(self.parts) + list(other.parts))

    def complement(self) -> "TrustWindow":
        out = []
        cur = NEG_INF
        for lo, hi in self.parts:
            if lo != NEG_INF:
                out.append((cur, lo - 1))
            cur = hi + 1
        if cur != INF:
            out.append((cur, INF))
        return TrustWindow(out)

    def minus_band(self, lo, hi) -> "TrustWindow":
        """Remove the closed band [lo, hi]."""
        if lo > hi:
            return self
        out = []
        for plo, phi in self.parts:
            if phi < lo or hi < plo:
                out.append((plo, phi))
                continue
            if plo < lo:
                out.append((plo, lo - 1))
            if hi < phi:
                out.append((hi + 1, phi))
        return TrustWindow(out)

    def prefix_top(self):
        """Largest w with (-inf, w] inside the window; None if no such prefix."""
        if not self.parts:
            return None
        lo, hi = self.parts[0]
        if lo != NEG_INF:
            return None
        return hi

    def is_all(self) -> bool:
        return self.parts == ((NEG_INF, INF),)

    def __eq__(self, other):
        return isinstance(other, TrustWindow) and other.parts == self.parts

    __hash__ = None

    def __repr__(self):
        if not self.parts:
            return "TrustWindow(empty)"
        bits = ", ".join(f"[{lo}, {hi}]" for lo, hi in self.parts)
        return f"TrustWindow({bits})"


class UncertifiedDegreeError(ValueError):
    """Raised when homology is requested outside a complex's trust window."""


# ---------------------------------------------------------------------------
# the complex object


class FreeComplex:
    """Bounded complex of graded free modules over a QuotientRing.

    terms: dict i -> GradedFree (only nonzero ranks stored)
    diffs: dict i -> GradedMatrix, the map terms[i] -> terms[i-1]
    window, true_lo, true_hi: see module docstring
    complete: the representative is the intended object on the nose (all
    homology everywhere is the true homology and nothing was truncated).
    """

    __slots__ = ("ring", "terms", "diffs", "window", "true_lo", "true_hi", "complete")

    def __init__(self, ring, terms, diffs, window=None, true_lo=None, true_hi=None,
                 complete=True):
        self.ring = ring
        self.terms = {i: f for i, f in terms.items() if f.rank > 0}
        self.diffs = {}
        for i, m in diffs.items():
            if i in self.terms and (i - 1) in self.terms and not m.is_zero():
                self.diffs[i] = m
        self.window = window if window is not None else TrustWindow.all()
        if true_lo is None or true_hi is None:
            lo, hi = self.term_range()
            true_lo = lo if true_lo is None else true_lo
            true_hi = hi if true_hi is None else true_hi
        self.true_lo = true_lo
        self.true_hi = true_hi
        self.complete = complete

    # -- structure ---------------------------------------------------------

    def term(self, i) -> GradedFree:
        return self.terms.get(i, ZERO_FREE)

    def diff(self, i) -> GradedMatrix:
        m = self.diffs.get(i)
        if m is None:
            return GradedMatrix.zero(self.ring, self.term(i), self.term(i - 1))
        return m

    def term_range(self):
        """(bottom, top) homological degrees with nonzero terms; (0, -1) if empty."""
        if not self.terms:
            return (0, -1)
        return (min(self.terms), max(self.terms))

    def is_zero_complex(self) -> bool:
        return not self.terms

    def total_rank(self) -> int:
        return sum(f.rank for f in self.terms.values())

    def validate(self):
        """Shapes, homogeneity, d composed with d equals zero."""
        qr = self.ring
        for i, m in self.diffs.items():
            if m.source != self.terms[i]:
                raise ValueError(f"differential {i} source mismatch")
            if m.target != self.term(i - 1):
                raise ValueError(f"differential {i} target mismatch")
            m.validate_homogeneous()
        for i in self.diffs:
            if (i - 1) in self.diffs:
                comp = self.diff(i - 1).compose(self.diff(i))
                if not qr.reduce_matrix(comp).is_zero():
                    raise ValueError(f"d_{i-1} d_{i} != 0")
        return self

    def possible_range(self):
        """Hull of degrees where rep or true homology could be nonzero."""
        b, t = self.term_range()
        if b > t:
            return (self.true_lo, self.true_hi)
        return (min(b, self.true_lo), max(t, self.true_hi))

    def __repr__(self):
        b, t = self.term_range()
        if b > t:
            return "FreeComplex(0)"
        ranks = " ".join(str(self.term(i).rank) for i in range(t, b - 1, -1))
        return f"FreeComplex(degrees {t}..{b}, ranks {ranks}, {self.window!r})"


def zero_complex(ring) -> FreeComplex:
    return FreeComplex(ring, {}, {}, TrustWindow.all(), 0, -1, complete=True)


def module_as_complex(ring, free: GradedFree, at=0) -> FreeComplex:
    """A single free module placed in homological degree `at`."""
    return FreeComplex(ring, {at: free}, {}, TrustWindow.all(), at, at, complete=True)


def from_resolution(ring, matrices, complete, module_degree=0) -> FreeComplex:
    """Complex from resolution data d_1, d_2, ..., d_B (d_i: F_i -> F_{i-1}).

    If complete, the resolution terminated (the last kernel was zero) and
    the representative is the module itself up to quasi-isomorphism; else
    homology at the top term degree B is garbage.
    """
    if not matrices:
        raise ValueError("need at least d_1 (possibly a zero matrix)")
    terms = {0: matrices[0].target}
    diffs = {}
    for i, m in enumerate(matrices, start=1):
        terms[i] = m.source
        diffs[i] = m
    B = len(matrices)
    if complete:
        window = TrustWindow.all()
    else:
        window = TrustWindow.all().minus_band(B, B)
    cx = FreeComplex(ring, terms, diffs, window, 0, 0, complete=complete)
    if module_degree:
        cx = shift_complex(cx, module_degree)
    return cx


# ---------------------------------------------------------------------------
# elementary constructions


def shift_complex(X: FreeComplex, n: int) -> FreeComplex:
    """Suspension by n: (shift X)_v = X_{v-n}, differential scaled by (-1)^n."""
    if n == 0:
        return X
    sign = X.ring.field.normalize(-1 if n % 2 else 1)
    terms = {i + n: f for i, f in X.terms.items()}
    diffs = {i + n: (m if n % 2 == 0 else m.map_entries(lambda p: p.scale(sign)))
             for i, m in X.diffs.items()}
    return FreeComplex(X.ring, terms, diffs, X.window.shift(n),
                       X.true_lo + n, X.true_hi + n, complete=X.complete)


def direct_sum(X: FreeComplex, Y: FreeComplex) -> FreeComplex:
    if X.ring != Y.ring:
        raise ValueError("direct sum over different rings")
    terms, diffs = {}, {}
    degs = set(X.terms) | set(Y.terms)
    for i in degs:
        fx, fy = X.term(i), Y.term(i)
        terms[i] = GradedFree.of(fx.twists + fy.twists)
    for i in degs:
        dx, dy = X.diff(i), Y.diff(i)
        entries = dict(dx.entries)
        rx, cx_ = X.term(i - 1).rank, X.term(i).rank
        for (a, b), p in dy.entries.items():
            entries[(rx + a, cx_ + b)] = p
        tgt = terms.get(i - 1, GradedFree.of(X.term(i - 1).twists + Y.term(i - 1).twists))
        m = GradedMatrix(X.ring, terms[i], tgt, entries)
        if not m.is_zero():
            diffs[i] = m
    return FreeComplex(X.ring, terms, diffs, X.window.intersect(Y.window),
                       min(X.true_lo, Y.true_lo), max(X.true_hi, Y.true_hi),
                       complete=X.complete and Y.complete)


class ChainMap:
    """Degree-zero chain map f: X -> Y: components[i]: X_i -> Y_i."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: FreeComplex, target: FreeComplex, components: dict):
        self.source = source
        self.target = target
        self.components = {i: m for i, m in components.items() if not m.is_zero()}

    def component(self, i) -> GradedMatrix:
        m = self.components.get(i)
        if m is None:
            return GradedMatrix.zero(self.source.ring, self.source.term(i),
                                     self.target.term(i))
        return m

    def validate(self):
        qr = self.source.ring
        for i, m in self.components.items():
            if m.source != self.source.term(i) or m.target != self.target.term(i):
                raise ValueError(f"chain map component {i} shape mismatch")
            m.validate_homogeneous()
        lo = min(list(self.source.terms) + list(self.target.terms), default=0)
        hi = max(list(self.source.terms) + list(self.target.terms), default=0)
        for i in range(lo, hi + 1):
            left = self.target.diff(i).compose(self.component(i))
            right = self.component(i - 1).compose(self.source.diff(i))
            diffm = qr.reduce_matrix(left.add(right.negate()))
            if not diffm.is_zero():
                raise ValueError(f"not a chain map at degree {i}")
        return self


def identity_chain_map(X: FreeComplex) -> ChainMap:
    return ChainMap(X, X, {i: GradedMatrix.identity(X.ring, f)
                           for i, f in X.terms.items()})


def scalar_chain_map(X: FreeComplex, c) -> ChainMap:
    """Multiplication by the ring constant c as a chain self-map."""
    F = X.ring.field
    cc = F.normalize(c)
    return ChainMap(X, X, {i: GradedMatrix.identity(X.ring, f).scale(cc)
                           for i, f in X.terms.items()})


def cone(f: ChainMap) -> FreeComplex:
    """Mapping cone: C_j = X_{j-1} (+) Y_j, d(a, b) = (-da, db + fa)."""
    X, Y = f.source, f.target
    qr = X.ring
    Fld = qr.field
    neg = Fld.normalize(-1)
    terms, diffs = {}, {}
    degs = set(i + 1 for i in X.terms) | set(Y.terms)
    for j in degs:
        terms[j] = GradedFree.of(X.term(j - 1).twists + Y.term(j).twists)
    for j in sorted(degs):
        xpart = X.term(j - 1)
        entries = {}
        # block (-dX): X_{j-1} -> X_{j-2}
        for (a, b), p in X.diff(j - 1).entries.items():
            entries[(a, b)] = p.scale(neg)
        # block f: X_{j-1} -> Y_{j-1}
        rx = X.term(j - 2).rank
        for (a, b), p in f.component(j - 1).entries.items():
            entries[(rx + a, b)] = p
        # block dY: Y_j -> Y_{j-1}
        for (a, b), p in Y.diff(j).entries.items():
            entries[(rx + a, xpart.rank + b)] = p
        tgt = terms.get(j - 1, GradedFree.of(X.term(j - 2).twists + Y.term(j - 1).twists))
        m = GradedMatrix(qr, terms[j], tgt, entries)
        if not m.is_zero():
            diffs[j] = m
    # five-lemma comparison along the long exact sequence of the cone:
    # H_j(C) is trusted when H_j and H_{j-1} are trusted in both factors
    win = (X.window.intersect(X.window.shift(1))
           .intersect(Y.window.intersect(Y.window.shift(1))))
    return FreeComplex(qr, terms, diffs, win,
                       min(Y.true_lo, X.true_lo + 1),
                       max(Y.true_hi, X.true_hi + 1),
                       complete=X.complete and Y.complete)


# ---------------------------------------------------------------------------
# Hom and tensor


def _resolution_shape(P: FreeComplex):
    """(bottom_term, top_term, trusted_cells_top, floor) for a hom or
    tensor factor.

    P's window must contain its bottom cell; the window part holding that
    cell gives the ceiling below which cells of P agree with an honest
    resolution, and its floor is where that claim stops.  When the floor
    is finite and P.true_lo does not reach it, the cells themselves may
    shift as the resolution bound grows (deeper homology adds covers at
    every degree), and the callers must discard the affected band.
    """
    pb, pt = P.term_range()
    for lo, hi in P.window.parts:
        if lo <= pb <= hi:
            return pb, pt, hi, lo
    raise UncertifiedDegreeError(
        "resolution factor is not trusted at its bottom cell")


def _hsupp(Y: FreeComplex) -> TrustWindow:
    """Degrees where homology of the representative or of the true object
    may be nonzero: true support inside the window, anything in the hull
    outside it."""
    plo, phi = Y.possible_range()
    poss = TrustWindow.interval(plo, phi)
    truth = TrustWindow.interval(Y.true_lo, Y.true_hi)
    return Y.window.intersect(truth).union(Y.window.complement().intersect(poss))


def hom_complex(P: FreeComplex, Y: FreeComplex) -> FreeComplex:
    """Hom(P, Y) as a complex; P plays the projective-resolution role.

    Term t is the direct sum over i of Hom(P_i, Y_{i+t}); the generator
    (i, a, b) sends basis element a of P_i to basis element b of Y_{i+t}
    and has internal degree twist(Y)_b - twist(P)_a.
    """
    qr = P.ring
    if qr != Y.ring:
        raise ValueError("hom over different rings")
    Fld = qr.field
    pb, pt, pwhi, pfloor = _resolution_shape(P)
    yb, yt = Y.term_range()
    if P.is_zero_complex() or Y.is_zero_complex():
        return zero_complex(qr)

    # layout: for each hom degree t, blocks i ascending; within a block,
    # pairs (a, b) flattened as b * rank(P_i) + a
    def blocks(t):
        out = []
        for i in range(pb, pt + 1):
            if P.term(i).rank and Y.term(i + t).rank:
                out.append(i)
        return out

    def free_of(t):
        tw = []
        for i in blocks(t):
            sp, sy = P.term(i).twists, Y.term(i + t).twists
            for b in range(len(sy)):
                for a in range(len(sp)):
                    tw.append(sy[b] - sp[a])
        return GradedFree.of(tw)

    def offset_map(t):
        offs = {}
        off = 0
        for i in blocks(t):
            offs[i] = off
            off += P.term(i).rank * Y.term(i + t).rank
        return offs

    terms, diffs = {}, {}
    tmin, tmax = yb - pt, yt - pb
    for t in range(tmin, tmax + 1):
        f = free_of(t)
        if f.rank:
            terms[t] = f
    for t in range(tmin, tmax + 1):
        if t not in terms or (t - 1) not in terms:
            continue
        src_off = offset_map(t)
        tgt_off = offset_map(t - 1)
        entries = {}
        sgn = Fld.normalize(-1 if t % 2 == 0 else 1)  # -(-1)^t
        for i in blocks(t):
            rp = P.term(i).rank
            ry = Y.term(i + t).rank
            base = src_off[i]
            # postcompose with dY: block i of degree t-1, pair (a, c)
            if i in tgt_off:
                ry2 = Y.term(i + t - 1).rank
                for (c, b), p in Y.diff(i + t).entries.items():
                    for a in range(rp):
                        entries[(tgt_off[i] + c * rp + a, base + b * rp + a)] = p
            # precompose with dP: block i+1 of degree t-1, pair (a2, b)
            if (i + 1) in tgt_off and (i + 1) <= pt:
                rp2 = P.term(i + 1).rank
                for (a, a2), p in P.diff(i + 1).entries.items():
                    for b in range(ry):
                        key = (tgt_off[i + 1] + b * rp2 + a2, base + b * rp + a)
                        cur = entries.get(key)
                        q = p.scale(sgn)
                        entries[key] = q if cur is None else cur.__add__(q)
        m = GradedMatrix(qr, terms[t], terms[t - 1], entries)
        m = qr.reduce_matrix(m)
        if not m.is_zero():
            diffs[t] = m

    # untrusted bands from the hypercohomology pairing (module docstring):
    # garbage homology of Y against cells of P, garbage cells of P against
    # any homology of Y, missing high cells against true homology of Y
    plo, phi = Y.possible_range()
    win = TrustWindow.all()
    garbage_y = Y.window.complement().intersect(TrustWindow.interval(plo, phi))
    for glo, ghi in garbage_y.parts:
        win = win.minus_band(glo - pt, ghi - pb)
    if pwhi < pt:
        for hlo, hhi in _hsupp(Y).parts:
            win = win.minus_band(hlo - pt, hhi - (pwhi + 1))
    if not P.complete:
        win = win.minus_band(NEG_INF, Y.true_hi - pt - 1)
    if pfloor != NEG_INF and P.true_lo < pfloor:
        # unproven floor: every cell of P is suspect, as is anything a
        # deeper (higher-bound) resolution could reach
        for hlo, hhi in _hsupp(Y).union(garbage_y).parts:
            win = win.minus_band(hlo - pt, INF)
    true_hi = Y.true_hi - P.true_lo
    true_lo = (Y.true_lo - pt) if P.complete else NEG_INF
    return FreeComplex(qr, terms, diffs, win, true_lo, true_hi,
                       complete=P.complete and Y.complete)


def tensor_complex(F: FreeComplex, Y: FreeComplex) -> FreeComplex:
    """F (x) Y as a complex; F plays the flat-resolution role.

    Term t is the sum over i+j=t of F_i (x) Y_j; generator (i, a, b) has
    internal degree twist(F)_a + twist(Y)_b; pairs flatten as
    a * rank(Y_j) + b.
    """
    qr = F.ring
    if qr != Y.ring:
        raise ValueError("tensor over different rings")
    Fld = qr.field
    fb, ft, fwhi, ffloor = _resolution_shape(F)
    yb, yt = Y.term_range()
    if F.is_zero_complex() or Y.is_zero_complex():
        return zero_complex(qr)

    def blocks(t):
        out = []
        for i in range(fb, ft + 1):
            if F.term(i).rank and Y.term(t - i).rank:
                out.append(i)
        return out

    def free_of(t):
        tw = []
        for i in blocks(t):
            sf, sy = F.term(i).twists, Y.term(t - i).twists
            for a in range(len(sf)):
                for b in range(len(sy)):
                    tw.append(sf[a] + sy[b])
        return GradedFree.of(tw)

    def offset_map(t):
        offs = {}
        off = 0
        for i in blocks(t):
            offs[i] = off
            off += F.term(i).rank * Y.term(t - i).rank
        return offs

    terms, diffs = {}, {}
    tmin, tmax = fb + yb, ft + yt
    for t in range(tmin, tmax + 1):
        fr = free_of(t)
        if fr.rank:
            terms[t] = fr
    for t in range(tmin, tmax + 1):
        if t not in terms or (t - 1) not in terms:
            continue
        src_off = offset_map(t)
        tgt_off = offset_map(t - 1)
        entries = {}
        for i in blocks(t):
            rf = F.term(i).rank
            ry = Y.term(t - i).rank
            base = src_off[i]
            # dF (x) id: block i-1
            if (i - 1) in tgt_off:
                ry2 = Y.term(t - i).rank
                for (c, a), p in F.diff(i).entries.items():
                    for b in range(ry):
                        entries[(tgt_off[i - 1] + c * ry2 + b, base + a * ry + b)] = p
            # (-1)^i id (x) dY: block i of degree t-1
            if i in tgt_off:
                sgn = Fld.normalize(-1 if i % 2 else 1)
                ry3 = Y.term(t - 1 - i).rank
                for (d, b), p in Y.diff(t - i).entries.items():
                    for a in range(rf):
                        key = (tgt_off[i] + a * ry3 + d, base + a * ry + b)
                        cur = entries.get(key)
                        q = p.scale(sgn)
                        entries[key] = q if cur is None else cur.__add__(q)
        m = GradedMatrix(qr, terms[t], terms[t - 1], entries)
        m = qr.reduce_matrix(m)
        if not m.is_zero():
            diffs[t] = m

    plo, phi = Y.possible_range()
    win = TrustWindow.all()
    garbage_y = Y.window.complement().intersect(TrustWindow.interval(plo, phi))
    for glo, ghi in garbage_y.parts:
        win = win.minus_band(glo + fb, ghi + ft)
    if fwhi < ft:
        for hlo, hhi in _hsupp(Y).parts:
            win = win.minus_band(hlo + fwhi + 1, hhi + ft)
    if not F.complete:
        win = win.minus_band(Y.true_lo + ft + 1, INF)
    if ffloor != NEG_INF and F.true_lo < ffloor:
        for hlo, hhi in _hsupp(Y).union(garbage_y).parts:
            win = win.minus_band(NEG_INF, hhi + ft)
    true_lo = F.true_lo + Y.true_lo
    true_hi = (ft + Y.true_hi) if F.complete else INF
    return FreeComplex(qr, terms, diffs, win, true_lo, true_hi,
                       complete=F.complete and Y.complete)


def hom_index(P: FreeComplex, Y: FreeComplex, t: int):
    """Flat index layout of Hom(P, Y)_t: list of (i, a, b) triples."""
    pb, pt = P.term_range()
    out = []
    for i in range(pb, pt + 1):
        rp, ry = P.term(i).rank, Y.term(i + t).rank
        if rp and ry:
            for b in range(ry):
                for a in range(rp):
                    out.append((i, a, b))
    return out


def tensor_index(F: FreeComplex, Y: FreeComplex, t: int):
    """Flat index layout of (F (x) Y)_t: list of (i, a, b) triples."""
    fb, ft = F.term_range()
    out = []
    for i in range(fb, ft + 1):
        rf, ry = F.term(i).rank, Y.term(t - i).rank
        if rf and ry:
            for a in range(rf):
                for b in range(ry):
                    out.append((i, a, b))
    return out


# ---------------------------------------------------------------------------
# graded-slice homology (exact, linear algebra over the field)


def slice_basis(qr: QuotientRing, free: GradedFree, v: int):
    """Basis of the degree-v piece of the free module: (index, exponent)."""
    out = []
    for j, tw in enumerate(free.twists):
        d = v - tw
        if d < 0:
            continue
        for e in qr.std_monomials_of_degree(d):
            out.append((j, e))
    return out


def slice_matrix(m: GradedMatrix, v: int):
    """Matrix of the degree-v slice of m in std-monomial bases.

    Returns (rows, src_basis, tgt_basis) with rows a list of lists of
    field elements (rows indexed by target basis).
    """
    qr = m.ring
    if not isinstance(qr, QuotientRing):
        raise TypeError("slice extraction needs a QuotientRing matrix")
    Fld = qr.field
    src = slice_basis(qr, m.source, v)
    tgt = slice_basis(qr, m.target, v)
    tpos = {key: r for r, key in enumerate(tgt)}
    rows = [[Fld.zero] * len(src) for _ in tgt]
    cols_by_j = {}
    for (i, j), p in m.entries.items():
        cols_by_j.setdefault(j, []).append((i, p))
    for cidx, (j, e) in enumerate(src):
        for i, p in cols_by_j.get(j, ()):
            prod = qr.reduce(p.term_mul(e, Fld.one))
            for me, c in prod.terms.items():
                r = tpos.get((i, me))
                if r is None:
                    continue
                rows[r][cidx] = Fld.add(rows[r][cidx], c)
    return rows, src, tgt


def homology_slice_dim(X: FreeComplex, t: int, v: int) -> int:
    """dim_k of the internal-degree-v piece of H_t(X) (of the representative)."""
    Fld = X.ring.field
    d_in, src_in, _ = slice_matrix(X.diff(t + 1), v)
    d_out, src_out, _ = slice_matrix(X.diff(t), v)
    n = len(src_out)
    rk_out = linalg.rank(d_out, Fld) if d_out and n else 0
    rk_in = linalg.rank(d_in, Fld) if d_in and src_in else 0
    return (n - rk_out) - rk_in


def homology_slice_total(X: FreeComplex, t: int, vrange) -> int:
    """Total dim_k of H_t(X) over internal degrees in vrange (iterable)."""
    return sum(homology_slice_dim(X, t, v) for v in vrange)


def internal_degree_range(X: FreeComplex, t: int):
    """Internal degrees where the degree-t term can be nonzero (artinian ring)."""
    qr = X.ring
    f = X.term(t)
    if f.rank == 0:
        return range(0, 0)
    top = qr.top_degree()
    lo = min(f.twists)
    hi = max(f.twists) + top
    return range(lo, hi + 1)


def artinian_homology_dims(X: FreeComplex, t: int) -> int:
    """Total homology dimension at t over an artinian ring, all slices."""
    qr = X.ring
    if not qr.is_artinian():
        raise ValueError("artinian slice scan needs an artinian ring")
    f_lo, f_mid, f_hi = X.term(t + 1), X.term(t), X.term(t - 1)
    tws = [tw for f in (f_lo, f_mid, f_hi) for tw in f.twists]
    if not tws:
        return 0
    top = qr.top_degree()
    return homology_slice_total(X, t, range(min(tws), max(tws) + top + 1))


# ---------------------------------------------------------------------------
# exact minimization (Gaussian contraction of unit entries)


def minimize_complex(X: FreeComplex) -> FreeComplex:
    """Homotopy-equivalent complex with all differential entries in the
    maximal ideal.  Contracts one unit entry at a time:

        d_k = [[u, B], [C, D]]  ~~>  D - C u^{-1} B,

    dropping row j of d_{k+1} and column i of d_{k-1}.
    """
    qr = X.ring
    Fld = qr.field
    terms = {i: list(f.twists) for i, f in X.terms.items()}
    mats = {i: dict(m.entries) for i, m in X.diffs.items()}

    def find_unit():
        for k in sorted(mats):
            for (i, j), p in sorted(mats[k].items()):
                if p.is_constant() and not p.is_zero():
                    return k, i, j, p.constant_value()
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        k, i, j, u = hit
        uinv = Fld.inv(u)
        d = mats[k]
        rowi = {jj: p for (ii, jj), p in d.items() if ii == i and jj != j}
        colj = {ii: p for (ii, jj), p in d.items() if jj == j and ii != i}
        # D - C u^{-1} B on the remaining block
        for ii, c in colj.items():
            for jj, b in rowi.items():
                cur = d.get((ii, jj))
                corr = (c * b).scale(Fld.neg(uinv))
                val = corr if cur is None else cur + corr
                val = qr.reduce(val)
                if val.is_zero():
                    d.pop((ii, jj), None)
                else:
                    d[(ii, jj)] = val
        # drop row i / column j of d_k, reindex
        def drop(mat, row=None, col=None):
            out = {}
            for (a, b), p in mat.items():
                if row is not None and a == row:
                    continue
                if col is not None and b == col:
                    continue
                aa = a - 1 if row is not None and a > row else a
                bb = b - 1 if col is not None and b > col else b
                out[(aa, bb)] = p
            return out

        mats[k] = drop(d, row=i, col=j)
        if (k + 1) in mats:
            mats[k + 1] = drop(mats[k + 1], row=j)
        if (k - 1) in mats:
            mats[k - 1] = drop(mats[k - 1], col=i)
        del terms[k][j]
        del terms[k - 1][i]
        if not terms[k]:
            del terms[k]
            mats.pop(k, None)
            mats.pop(k + 1, None)
        if (k - 1) in terms and not terms[k - 1]:
            del terms[k - 1]
            mats.pop(k - 1, None)
            if k in mats and k not in terms:
                mats.pop(k, None)

    frees = {i: GradedFree.of(tw) for i, tw in terms.items() if tw}
    diffs = {}
    for i, m in mats.items():
        if i in frees and (i - 1) in frees and m:
            diffs[i] = GradedMatrix(qr, frees[i], frees[i - 1], m)
    return FreeComplex(qr, frees, diffs, X.window, X.true_lo, X.true_hi,
                       complete=X.complete)


# ---------------------------------------------------------------------------
# resolving a complex by free modules (small inputs only)


def resolve_complex_with_map(X: FreeComplex, bound: int):
    """Free complex P plus a quasi-isomorphism P -> X, built upward to
    homological degree `bound` by killing cone homology degree by degree.

    The result is trusted in degrees <= bound - 1 (intersected with X's
    own window) and complete when the construction closes off early.
    """
    qr = X.ring
    xb, xt = X.term_range()
    if X.is_zero_complex():
        Z = zero_complex(qr)
        return Z, ChainMap(Z, X, {})
    # start at the first trusted degree at or above the certified truth
    # floor: anything below is zero (no cells), representative garbage,
    # or excluded by the caller's floor certificate
    smin = xb if X.true_lo == NEG_INF else max(xb, int(X.true_lo))
    start = next((t for t in range(smin, bound + 1) if X.window.contains(t)), None)
    if start is None:
        raise UncertifiedDegreeError("no trusted degree at or above the bottom cell")
    P_terms = {}
    P_diffs = {}
    phi = {}
    closed = False
    for j in range(start, bound + 1):
        # cone degree j: C_j = P_{j-1} (+) X_j -> C_{j-1} = P_{j-2} (+) X_{j-1}
        pprev = P_terms.get(j - 1, ZERO_FREE)
        xj = X.term(j)
        src = GradedFree.of(pprev.twists + xj.twists)
        entries = {}
        rp = P_terms.get(j - 2, ZERO_FREE).rank
        if (j - 1) in P_diffs:
            for (a, b), p in P_diffs[j - 1].entries.items():
                entries[(a, b)] = p.scale(qr.field.normalize(-1))
        if (j - 1) in phi:
            for (a, b), p in phi[j - 1].entries.items():
                entries[(rp + a, b)] = p
        for (a, b), p in X.diff(j).entries.items():
            entries[(rp + a, pprev.rank + b)] = p
        tgt = GradedFree.of(P_terms.get(j - 2, ZERO_FREE).twists + X.term(j - 1).twists)
        dC = GradedMatrix(qr, src, tgt, entries)
        ker = kernel_matrix(dC)
        # discard kernel generators that are already boundaries via X_{j+1}
        bnd_entries = {}
        for (a, b), p in X.diff(j + 1).entries.items():
            bnd_entries[(pprev.rank + a, b)] = p
        bnd = GradedMatrix(qr, X.term(j + 1), src, bnd_entries)
        keep = []
        for col in ker.columns():
            cm = GradedMatrix.from_columns(qr, src, [col])
            if not bnd.is_zero() and lift_matrix(bnd, cm) is not None:
                continue
            keep.append(col)
        keep = interreduce_columns(qr, src, keep)
        if not keep:
            if j >= xt:
                closed = True
                break
            continue
        cols = GradedMatrix.from_columns(qr, src, keep)
        # split each generator (p, x): d_P = -p_part, phi = x_part
        dP_entries, phi_entries = {}, {}
        for (a, b), p in cols.entries.items():
            if a < pprev.rank:
                dP_entries[(a, b)] = p.scale(qr.field.normalize(-1))
            else:
                phi_entries[(a - pprev.rank, b)] = p
        P_terms[j] = cols.source
        if dP_entries:
            P_diffs[j] = GradedMatrix(qr, cols.source, pprev, dP_entries)
        if phi_entries:
            phi[j] = GradedMatrix(qr, cols.source, xj, phi_entries)
    win = X.window if closed else X.window.intersect(
        TrustWindow.interval(NEG_INF, bound - 1))
    P = FreeComplex(qr, P_terms, P_diffs, win, X.true_lo, X.true_hi,
                    complete=X.complete and closed)
    # phi commutes with the differentials: a kernel column (p, x) of the
    # cone satisfies dP(p) = 0-part and dX(x) = -phi(p) by construction
    return P, ChainMap(P, X, phi)


def resolve_complex(X: FreeComplex, bound: int) -> FreeComplex:
    return resolve_complex_with_map(X, bound)[0]


def with_true_bounds(X: FreeComplex, lo=None, hi=None) -> FreeComplex:
    """Copy of X with strengthened certified truth bounds.

    Callers must hold an actual justification (a vanishing theorem or an
    independently certified invariant); this function just records it.
    """
    tl = X.true_lo if lo is None else max(X.true_lo, lo)
    th = X.true_hi if hi is None else min(X.true_hi, hi)
    return FreeComplex(X.ring, dict(X.terms), dict(X.diffs), X.window,
                       tl, th, complete=X.complete)


# ---------------------------------------------------------------------------
# canonical chain maps: biduality and tensor-evaluation


def biduality_rep(P: FreeComplex, C: FreeComplex, bound: int,
                  floor=None) -> ChainMap:
    """Chain map P -> Hom(Q, C) representing x |-> (f |-> f(x)), where
    Q -> Hom(P, C) is a free resolution computed up to `bound`.

    With the sign (-1)^{|x||f|} the evaluation commutes with both Hom
    differentials; composing with Hom(q, C) keeps it a chain map because
    q has degree zero.  Quasi-isomorphism of the result (tested on the
    cone) is the reflexivity criterion used downstream.

    `floor` is a lower bound for the true homology of the inner Hom.
    Passing a certified value makes the resulting windows unconditional;
    leaving it None adopts the inner window floor, which stamps every
    downstream claim with the current bound (see the module docstring).
    """
    qr = P.ring
    Fld = qr.field
    D = hom_complex(P, C)
    if floor is None:
        db = D.term_range()[0]
        for lo, hi in D.window.parts:
            if hi >= db:
                floor = lo if lo != NEG_INF else None
                break
    if floor is not None:
        D = with_true_bounds(D, lo=floor)
    Q, q = resolve_complex_with_map(D, bound)
    H = hom_complex(Q, C)
    dflat = {}

    def d_layout(j):
        if j not in dflat:
            dflat[j] = {trip: pos for pos, trip in enumerate(hom_index(P, C, j))}
        return dflat[j]

    comps = {}
    lo, hi = P.term_range()
    for v in range(lo, hi + 1):
        rp = P.term(v).rank
        hv = H.term(v)
        if rp == 0 or hv.rank == 0:
            continue
        entries = {}
        for pos, (j, c, b) in enumerate(hom_index(Q, C, v)):
            qj = q.component(j)
            lay = d_layout(j)
            sgn = -1 if (v * j) % 2 else 1
            for a in range(rp):
                key = lay.get((v, a, b))
                if key is None:
                    continue
                val = qj.entry(key, c)
                if val.is_zero():
                    continue
                if sgn < 0:
                    val = val.scale(Fld.normalize(-1))
                entries[(pos, a)] = val
        m = GradedMatrix(qr, P.term(v), hv, entries)
        if not m.is_zero():
            comps[v] = m
    return ChainMap(P, H, comps)


def gamma_rep(F: FreeComplex, Pc: FreeComplex) -> ChainMap:
    """Chain map F -> Hom(Pc, Pc (x) F) representing x |-> (p |-> p (x) x),
    with the Koszul sign (-1)^{|x||p|}.

    Pc is a free resolution representative of the coefficient object; its
    quasi-isomorphism cone test is the tensor-side membership criterion.
    """
    qr = F.ring
    Fld = qr.field
    T = tensor_complex(Pc, F)
    H = hom_complex(Pc, T)
    tflat = {}

    def t_layout(u):
        if u not in tflat:
            tflat[u] = {trip: pos for pos, trip in enumerate(tensor_index(Pc, F, u))}
        return tflat[u]

    hflat = {}

    def h_layout(v):
        if v not in hflat:
            hflat[v] = {trip: pos for pos, trip in enumerate(hom_index(Pc, T, v))}
        return hflat[v]

    comps = {}
    lo, hi = F.term_range()
    cb, ct = Pc.term_range()
    for v in range(lo, hi + 1):
        rf = F.term(v).rank
        hv = H.term(v)
        if rf == 0 or hv.rank == 0:
            continue
        entries = {}
        hl = h_layout(v)
        for j in range(cb, ct + 1):
            rc = Pc.term(j).rank
            if rc == 0:
                continue
            tl = t_layout(j + v)
            sgn = -1 if (v * j) % 2 else 1
            val = qr.one() if sgn > 0 else qr.one().scale(Fld.normalize(-1))
            for c in range(rc):
                for a in range(rf):
                    tpos = tl.get((j, c, a))
                    if tpos is None:
                        continue
                    pos = hl.get((j, c, tpos))
                    if pos is None:
                        continue
                    entries[(pos, a)] = val
        m = GradedMatrix(qr, F.term(v), hv, entries)
        if not m.is_zero():
            comps[v] = m
    return ChainMap(F, H, comps)


# ---------------------------------------------------------------------------
# bound-parametrized families


class ComplexFamily:
    """Thunk producing representatives at increasing resolution bounds.

    realize(bound) is memoized; window stability checks re-realize at a
    higher bound and compare trusted homology.
    """

    __slots__ = ("_fn", "_cache", "name")

    def __init__(self, fn, name=""):
        self._fn = fn
        self._cache = {}
        self.name = name

    def realize(self, bound: int) -> FreeComplex:
        if bound not in self._cache:
            self._cache[bound] = self._fn(bound)
        return self._cache[bound]

    def map(self, op, name=""):
        return ComplexFamily(lambda b: op(self.realize(b)), name or self.name)


def family_hom(P: ComplexFamily, Y: ComplexFamily, name="") -> ComplexFamily:
    return ComplexFamily(lambda b: hom_complex(P.realize(b), Y.realize(b)), name)


def family_tensor(F: ComplexFamily, Y: ComplexFamily, name="") -> ComplexFamily:
    return ComplexFamily(lambda b: tensor_complex(F.realize(b), Y.realize(b)), name)


def family_shift(X: ComplexFamily, n: int, name="") -> ComplexFamily:
    return X.map(lambda cx: shift_complex(cx, n), name)


def family_cone_of_scalar(X: ComplexFamily, c, name="") -> ComplexFamily:
    return ComplexFamily(lambda b: cone(scalar_chain_map(X.realize(b), c)), name)
