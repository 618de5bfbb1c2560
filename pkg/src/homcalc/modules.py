"""Finitely presented graded modules: minimal presentations, resolutions,
Hom/tensor/Ext as presentations, and the canonical evaluation maps.

A module is a cokernel presentation F1 -> F0 over a QuotientRing.  All
membership questions (is this element zero, does this map land in that
submodule) reduce to lifts against relation matrices, which the Groebner
layer answers exactly.  Minimal free resolutions are computed by iterated
kernels followed by one Gaussian minimization pass, so Betti numbers read
off as ranks.

Hom modules carry their universal pairing: the presentation remembers how
each abstract generator acts as an honest matrix F0 -> N, which is what
lets the homothety and evaluation maps be constructed rather than
asserted.
"""

from __future__ import annotations

from .ring import GradedFree, GradedMatrix, ZERO_FREE, hstack
from .groebner import (QuotientRing, kernel_matrix, lift_matrix,
                       interreduce_columns, reduced_gb, TermOverPosition,
                       vec_from_column, _padding_vectors, minimalize_monomials,
                       hilbert_numerator, HilbertSeries)
from .complexes import (FreeComplex, from_resolution, minimize_complex,
                        module_as_complex, zero_complex, UncertifiedDegreeError)


class NotCohenMacaulayError(ValueError):
    """Raised when a canonical-module request meets off-codimension Ext."""


# ---------------------------------------------------------------------------
# presentations


class ModulePresentation:
    """Cokernel presentation of a finitely generated graded module.

    gens is the generator free module (the target of the relation
    matrix); minimal means no degree-matching constant entry survives in
    the relations, so the generator count equals the minimal number of
    generators by graded Nakayama.
    """

    __slots__ = ("ring", "gens", "relations", "minimal",
                 "_min", "_leads", "_hs", "_res", "_res_complete")

    def __init__(self, ring: QuotientRing, relations: GradedMatrix,
                 minimal=False):
        self.ring = ring
        self.relations = ring.reduce_matrix(relations)
        self.gens = relations.target
        self.relations.validate_homogeneous()
        self.minimal = minimal
        self._min = None
        self._leads = None
        self._hs = None
        self._res = None
        self._res_complete = False

    # -- constructors ------------------------------------------------------

    @staticmethod
    def free(ring: QuotientRing, twists) -> "ModulePresentation":
        free = GradedFree.of(twists)
        return ModulePresentation(
            ring, GradedMatrix.zero(ring, ZERO_FREE, free), minimal=True)

    @staticmethod
    def cyclic(ring: QuotientRing, elements) -> "ModulePresentation":
        """R/J for the ideal generated by the given homogeneous elements."""
        polys = []
        for e in elements:
            if isinstance(e, str):
                e = ring.from_string(e)
            else:
                e = ring.reduce(e)
            if not e.is_zero():
                polys.append(e)
        tgt = GradedFree.of([0])
        src = GradedFree.of([p.degree() for p in polys])
        entries = {(0, j): p for j, p in enumerate(polys)}
        return ModulePresentation(ring, GradedMatrix(ring, src, tgt, entries))

    @staticmethod
    def residue_field(ring: QuotientRing) -> "ModulePresentation":
        return ModulePresentation.cyclic(ring, ring.maximal_ideal_gens())

    # -- basic queries -----------------------------------------------------

    def shifted(self, n: int) -> "ModulePresentation":
        m = GradedMatrix(self.ring, self.relations.source.shifted(n),
                         self.gens.shifted(n), dict(self.relations.entries))
        return ModulePresentation(self.ring, m, minimal=self.minimal)

    def element_is_zero(self, column: GradedMatrix) -> bool:
        """Whether a column in the generator free lies in the relations."""
        return lift_matrix(self.relations, column) is not None

    def is_zero_module(self) -> bool:
        return minimal_presentation(self).gens.rank == 0

    def _component_leads(self):
        """Per-generator lead ideals of relations + ring ideal padding."""
        if self._leads is None:
            qr = self.ring
            P = qr.ambient
            cols = [vec_from_column(c, P) for c in self.relations.columns()]
            pads = _padding_vectors(qr, self.gens.rank)
            gb = reduced_gb(cols + pads, P,
                            TermOverPosition(P, self.gens.twists))
            per = [[] for _ in range(self.gens.rank)]
            for (comp, e), _ in gb.leads:
                per[comp].append(e)
            self._leads = [minimalize_monomials(es, P) for es in per]
        return self._leads

    def hilbert_series(self) -> HilbertSeries:
        if self._hs is None:
            P = self.ring.ambient
            total = HilbertSeries(P.weights, {})
            for a, leads in enumerate(self._component_leads()):
                hs = HilbertSeries(P.weights, hilbert_numerator(leads, P))
                total = total.plus(hs.shifted(self.gens.twists[a]))
            self._hs = total
        return self._hs

    def graded_piece_dim(self, d: int) -> int:
        """dim_k of the degree-d piece, by counting standard monomials."""
        P = self.ring.ambient
        count = 0
        for a, leads in enumerate(self._component_leads()):
            dd = d - self.gens.twists[a]
            if dd < 0:
                continue
            for e in P.monomials_of_degree(dd):
                if not any(P.mono_divides(g, e) for g in leads):
                    count += 1
        return count

    def k_dimension(self) -> int:
        """Total k-dimension; requires a finite-length module.

        The Hilbert series of a finite-length module is a Laurent
        polynomial whose support sits inside the numerator's support, so
        summing coefficients over that range is exact.
        """
        hs = self.hilbert_series()
        if not hs.numer:
            return 0
        if hs.dimension() != 0:
            raise ValueError("module has positive dimension")
        lo, hi = min(hs.numer), max(hs.numer)
        return sum(hs.coeffs(lo, hi))

    def __repr__(self):
        return (f"ModulePresentation({self.gens.rank} gens, "
                f"{self.relations.source.rank} relations)")


def minimal_presentation(m: ModulePresentation) -> ModulePresentation:
    """Isomorphic presentation with every relation entry in the maximal
    ideal, found by Gaussian contraction of degree-matching constants."""
    if m.minimal:
        return m
    if m._min is not None:
        return m._min
    qr = m.ring
    F = qr.field
    rows = list(range(m.gens.rank))
    cols = []
    for j in range(m.relations.source.rank):
        col = {i: p for (i, jj), p in m.relations.entries.items() if jj == j}
        cols.append({i: p for i, p in col.items() if not p.is_zero()})

    while True:
        hit = None
        for cj, col in enumerate(cols):
            for r, p in col.items():
                if p.is_constant():
                    hit = (cj, r, p.constant_value())
                    break
            if hit:
                break
        if hit is None:
            break
        cj, r, u = hit
        uinv = F.inv(u)
        pivot = cols[cj]
        for ck, col in enumerate(cols):
            if ck == cj or r not in col:
                continue
            c = col.pop(r)
            for rr, prr in pivot.items():
                if rr == r:
                    continue
                delta = qr.reduce(c.scale(uinv) * prr)
                cur = col.get(rr)
                new = delta.scale(F.normalize(-1)) if cur is None else cur - delta
                new = qr.reduce(new)
                if new.is_zero():
                    col.pop(rr, None)
                else:
                    col[rr] = new
        del cols[cj]
        rows.remove(r)

    remap = {old: new for new, old in enumerate(rows)}
    tgt = GradedFree.of([m.gens.twists[r] for r in rows])
    keep = [c for c in cols if c]
    src_tw = []
    entries = {}
    for j, col in enumerate(keep):
        deg = None
        for r, p in col.items():
            entries[(remap[r], j)] = p
            deg = p.degree() + m.gens.twists[r]
        src_tw.append(deg)
    rel = GradedMatrix(qr, GradedFree.of(src_tw), tgt, entries)
    out = ModulePresentation(qr, rel, minimal=True)
    m._min = out
    return out


# ---------------------------------------------------------------------------
# minimal free resolutions


class Resolution:
    """A minimal free resolution computed out to a finite length.

    complex holds the minimized truncation; ranks in certified degrees
    are the Betti numbers.  Without the complete flag the top term is a
    construction artifact and reading it raises.
    """

    __slots__ = ("module", "complex", "complete", "length")

    def __init__(self, module, complex, complete, length):
        self.module = module
        self.complex = complex
        self.complete = complete
        self.length = length

    def certified(self, i: int) -> bool:
        return self.complete or i <= self.length - 1

    def betti(self, i: int) -> int:
        if i < 0:
            return 0
        if not self.certified(i):
            raise UncertifiedDegreeError(
                f"Betti number {i} not certified at length {self.length}")
        return self.complex.term(i).rank

    def graded_betti(self):
        out = {}
        lo, hi = self.complex.term_range()
        for i in range(lo, hi + 1):
            if not self.certified(i):
                continue
            for tw in self.complex.term(i).twists:
                out[(i, tw)] = out.get((i, tw), 0) + 1
        return out

    def differential(self, i: int) -> GradedMatrix:
        return self.complex.diff(i)


def resolution(m: ModulePresentation, length: int) -> Resolution:
    """Minimal free resolution of m out to homological degree `length`."""
    mm = minimal_presentation(m)
    qr = mm.ring
    if mm.gens.rank == 0:
        return Resolution(mm, zero_complex(qr), True, length)
    if mm._res is None:
        mm._res = []
        mm._res_complete = mm.relations.source.rank == 0
        if not mm._res_complete:
            mm._res.append(mm.relations)
    while len(mm._res) < length and not mm._res_complete:
        K = kernel_matrix(mm._res[-1])
        if K.source.rank == 0:
            mm._res_complete = True
        else:
            mm._res.append(K)
    mats = mm._res[:length]
    complete = mm._res_complete and length >= len(mm._res)
    if not mats:
        return Resolution(mm, module_as_complex(qr, mm.gens), True, length)
    cx = minimize_complex(from_resolution(qr, mats, complete))
    return Resolution(mm, cx, complete, len(mats))


def from_module(m: ModulePresentation, bound: int) -> FreeComplex:
    """The module as a derived-category representative: its minimal free
    resolution truncated at `bound`, with the matching trust window."""
    if bound < 1:
        raise ValueError("resolution bound must be at least 1")
    return resolution(m, bound).complex


def syzygy(m: ModulePresentation, g: int) -> ModulePresentation:
    """Cokernel presentation of the g-th syzygy in the minimal resolution."""
    if g < 0:
        raise ValueError("syzygy index must be non-negative")
    if g == 0:
        return minimal_presentation(m)
    res = resolution(m, g + 1)
    qr = res.module.ring
    Fg = res.complex.term(g)
    if Fg.rank == 0:
        return ModulePresentation.free(qr, [])
    rel = res.complex.diff(g + 1)
    return ModulePresentation(qr, rel, minimal=True)


# ---------------------------------------------------------------------------
# kernels and subquotients inside presented modules


def _restrict_rows(K: GradedMatrix, head: GradedFree) -> GradedMatrix:
    entries = {(i, j): p for (i, j), p in K.entries.items() if i < head.rank}
    return GradedMatrix(K.ring, K.source, head, entries)


def _clean_columns(qr, free: GradedFree, m: GradedMatrix) -> GradedMatrix:
    cols = [c for c in m.columns() if c]
    cols = interreduce_columns(qr, free, cols)
    return GradedMatrix.from_columns(qr, free, cols)


def kernel_into_quotient(phi: GradedMatrix,
                         target_rels: GradedMatrix) -> GradedMatrix:
    """Generators of {v in source(phi) : phi(v) in im(target_rels)}."""
    qr = phi.ring
    if phi.source.rank == 0:
        return GradedMatrix.zero(qr, ZERO_FREE, phi.source)
    if phi.target.rank == 0:
        return GradedMatrix.identity(qr, phi.source)
    mats = [phi]
    if target_rels.source.rank:
        mats.append(target_rels)
    K = kernel_matrix(hstack(qr, mats))
    return _clean_columns(qr, phi.source, _restrict_rows(K, phi.source))


def _sub_rels(kappa: GradedMatrix, denominators) -> GradedMatrix:
    """Relations on the kappa generators modulo the given images: the
    kernel of [kappa | denominators] restricted to the kappa block."""
    qr = kappa.ring
    if kappa.source.rank == 0:
        return GradedMatrix.zero(qr, ZERO_FREE, ZERO_FREE)
    mats = [kappa] + [d for d in denominators if d.source.rank]
    K = kernel_matrix(hstack(qr, mats))
    return _clean_columns(qr, kappa.source, _restrict_rows(K, kappa.source))


def homology_presentation(X: FreeComplex, i: int) -> ModulePresentation:
    """H_i of a free complex as a presented module (representative-level;
    callers consult X.window for trust)."""
    qr = X.ring
    Xi = X.term(i)
    if Xi.rank == 0:
        return ModulePresentation.free(qr, [])
    if X.term(i - 1).rank == 0:
        kappa = GradedMatrix.identity(qr, Xi)
    else:
        kappa = kernel_matrix(X.diff(i))
    rels = _sub_rels(kappa, [X.diff(i + 1)])
    return ModulePresentation(qr, rels)


# ---------------------------------------------------------------------------
# Hom, tensor, Ext


def _hom_free(fr: GradedFree, n: ModulePresentation) -> GradedFree:
    # layout: generator (a, b) = (basis a of fr) |-> (generator b of n),
    # flattened as a * n.gens.rank + b
    tw = []
    for a in range(fr.rank):
        for b in range(n.gens.rank):
            tw.append(n.gens.twists[b] - fr.twists[a])
    return GradedFree.of(tw)


def _hom_rel_block(fr: GradedFree, n: ModulePresentation) -> GradedMatrix:
    """Relations of N^rank(fr) in the hom layout: one copy of the relation
    matrix of N per basis element of fr."""
    qr = n.ring
    g0, r1 = n.gens.rank, n.relations.source.rank
    src_tw = []
    entries = {}
    for a in range(fr.rank):
        for c in range(r1):
            src_tw.append(n.relations.source.twists[c] - fr.twists[a])
        for (b, c), p in n.relations.entries.items():
            entries[(a * g0 + b, a * r1 + c)] = p
    return GradedMatrix(qr, GradedFree.of(src_tw), _hom_free(fr, n), entries)


def _hom_induced(d: GradedMatrix, n: ModulePresentation) -> GradedMatrix:
    """Hom(d, N): Hom(target(d), N) -> Hom(source(d), N), precomposition."""
    qr = d.ring
    g0 = n.gens.rank
    entries = {}
    for (a0, a1), p in d.entries.items():
        for b in range(g0):
            entries[(a1 * g0 + b, a0 * g0 + b)] = p
    return GradedMatrix(qr, _hom_free(d.target, n), _hom_free(d.source, n),
                        entries)


class HomPresentation(ModulePresentation):
    """Presentation of Hom(M, N) carrying its universal pairing.

    pairing maps the abstract generator free onto honest elements of
    N^rank(F0_M); generator_as_map unflattens one column to the matrix of
    an actual module map M -> N.
    """

    __slots__ = ("pairing", "source_module", "target_module")

    def __init__(self, ring, relations, pairing, source_module, target_module):
        super().__init__(ring, relations)
        self.pairing = pairing
        self.source_module = source_module
        self.target_module = target_module

    def express(self, beta: GradedMatrix) -> GradedMatrix:
        """Write columns of beta (elements of N^r in the hom layout) in
        generator coordinates of this presentation."""
        qr = self.ring
        relblk = _hom_rel_block(self.source_module.gens, self.target_module)
        mats = [self.pairing] + ([relblk] if relblk.source.rank else [])
        sol = lift_matrix(hstack(qr, mats), beta)
        if sol is None:
            raise ArithmeticError("element does not lie in the hom module")
        return _restrict_rows(sol, self.gens)

    def generator_as_map(self, j: int) -> "ModuleMap":
        g0 = self.target_module.gens.rank
        entries = {}
        for a in range(self.source_module.gens.rank):
            for b in range(g0):
                p = self.pairing.entry(a * g0 + b, j)
                if not p.is_zero():
                    entries[(b, a)] = p
        tw = self.gens.twists[j]
        mat = GradedMatrix(self.ring, self.source_module.gens.shifted(tw),
                           self.target_module.gens, entries)
        return ModuleMap(self.source_module.shifted(tw),
                         self.target_module, mat)


def hom_modules(m: ModulePresentation, n: ModulePresentation) -> HomPresentation:
    """Presentation of Hom_R(M, N) as the kernel of the induced map
    Hom(F0, N) -> Hom(F1, N), with the universal pairing attached."""
    if m.ring != n.ring:
        raise ValueError("hom over different rings")
    qr = m.ring
    H0 = _hom_free(m.gens, n)
    if H0.rank == 0:
        z = GradedMatrix.zero(qr, ZERO_FREE, ZERO_FREE)
        return HomPresentation(qr, z, GradedMatrix.zero(qr, ZERO_FREE, H0),
                               m, n)
    A = _hom_induced(m.relations, n)
    kappa = kernel_into_quotient(A, _hom_rel_block(m.relations.source, n))
    rels = _sub_rels(kappa, [_hom_rel_block(m.gens, n)])
    return HomPresentation(qr, rels, kappa, m, n)


def tensor_modules(m: ModulePresentation,
                   n: ModulePresentation) -> ModulePresentation:
    """M (x) N presented by relations of both factors spread over the
    generators of the other; generator (a, b) flattens as a * rank + b."""
    if m.ring != n.ring:
        raise ValueError("tensor over different rings")
    qr = m.ring
    g0m, g0n = m.gens.rank, n.gens.rank
    tw = [m.gens.twists[a] + n.gens.twists[b]
          for a in range(g0m) for b in range(g0n)]
    tgt = GradedFree.of(tw)
    src_tw = []
    entries = {}
    col = 0
    for r in range(m.relations.source.rank):
        for b in range(g0n):
            src_tw.append(m.relations.source.twists[r] + n.gens.twists[b])
    for (a, r), p in m.relations.entries.items():
        for b in range(g0n):
            entries[(a * g0n + b, r * g0n + b)] = p
    col = m.relations.source.rank * g0n
    for a in range(g0m):
        for c in range(n.relations.source.rank):
            src_tw.append(m.gens.twists[a] + n.relations.source.twists[c])
    for (b, c), p in n.relations.entries.items():
        for a in range(g0m):
            entries[(a * g0n + b, col + a * n.relations.source.rank + c)] = p
    rel = GradedMatrix(qr, GradedFree.of(src_tw), tgt, entries)
    return ModulePresentation(qr, rel)


def ext_module(m: ModulePresentation, n: ModulePresentation, i: int,
               bound=None) -> ModulePresentation:
    """Ext^i_R(M, N) as the subquotient ker/im of Hom(F_i, N) maps along
    a minimal free resolution of M."""
    if i < 0:
        raise ValueError("ext index must be non-negative")
    if bound is not None and i > bound:
        raise ValueError("ext index exceeds the stated bound")
    if m.ring != n.ring:
        raise ValueError("ext over different rings")
    qr = m.ring
    res = resolution(m, i + 1)
    Fi = res.complex.term(i)
    if Fi.rank == 0:
        return ModulePresentation.free(qr, [])
    A = _hom_induced(res.complex.diff(i + 1), n)
    kappa = kernel_into_quotient(A, _hom_rel_block(res.complex.term(i + 1), n))
    dens = [_hom_rel_block(Fi, n)]
    if i >= 1:
        dens.append(_hom_induced(res.complex.diff(i), n))
    rels = _sub_rels(kappa, dens)
    return ModulePresentation(qr, rels)


# ---------------------------------------------------------------------------
# module maps and the canonical constructions


class ModuleMap:
    """A map of presented modules given on generator frees."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: ModulePresentation, target: ModulePresentation,
                 matrix: GradedMatrix):
        self.source = source
        self.target = target
        self.matrix = source.ring.reduce_matrix(matrix)

    def validate(self):
        self.matrix.validate_homogeneous()
        if self.source.relations.source.rank:
            comp = self.matrix.compose(self.source.relations)
            if lift_matrix(self.target.relations, comp) is None:
                raise ValueError("map does not respect relations")

    def kernel_generators(self) -> GradedMatrix:
        return kernel_into_quotient(self.matrix, self.target.relations)

    def kernel_presentation(self) -> ModulePresentation:
        kappa = self.kernel_generators()
        rels = _sub_rels(kappa, [self.source.relations])
        return ModulePresentation(self.source.ring, rels)

    def cokernel_presentation(self) -> ModulePresentation:
        qr = self.source.ring
        mats = [m for m in (self.matrix, self.target.relations)
                if m.source.rank]
        if not mats:
            return ModulePresentation(
                qr, GradedMatrix.zero(qr, ZERO_FREE, self.target.gens))
        return ModulePresentation(qr, hstack(qr, mats))

    def is_injective(self) -> bool:
        kappa = self.kernel_generators()
        if kappa.source.rank == 0:
            return True
        return lift_matrix(self.source.relations, kappa) is not None

    def is_surjective(self) -> bool:
        if self.target.gens.rank == 0:
            return True
        qr = self.source.ring
        mats = [m for m in (self.matrix, self.target.relations)
                if m.source.rank]
        if not mats:
            return False
        big = hstack(qr, mats)
        return lift_matrix(big, GradedMatrix.identity(qr, self.target.gens)) \
            is not None

    def is_isomorphism(self) -> bool:
        return self.is_surjective() and self.is_injective()

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(other.source, self.target,
                         self.matrix.compose(other.matrix))


def homothety_map(c: ModulePresentation) -> ModuleMap:
    """The canonical map R -> Hom(C, C) sending 1 to the identity."""
    qr = c.ring
    D = hom_modules(c, c)
    g0 = c.gens.rank
    entries = {(a * g0 + a, 0): qr.one() for a in range(g0)}
    iota = GradedMatrix(qr, GradedFree.of([0]), _hom_free(c.gens, c), entries)
    out = ModuleMap(ModulePresentation.free(qr, [0]), D, D.express(iota))
    out.validate()
    return out


def evaluation_map(m: ModulePresentation, c: ModulePresentation) -> ModuleMap:
    """The canonical map M -> Hom(Hom(M, C), C)."""
    if m.ring != c.ring:
        raise ValueError("evaluation over different rings")
    qr = m.ring
    D = hom_modules(m, c)
    DD = hom_modules(D, c)
    g0c = c.gens.rank
    entries = {}
    for (pos, j), p in D.pairing.entries.items():
        a, b = divmod(pos, g0c)
        entries[(j * g0c + b, a)] = p
    beta = GradedMatrix(qr, m.gens, _hom_free(D.gens, c), entries)
    out = ModuleMap(m, DD, DD.express(beta))
    out.validate()
    return out


def canonical_module(r: QuotientRing) -> ModulePresentation:
    """The graded canonical module as top nonvanishing Ext over the
    ambient polynomial ring, re-housed over r, generators normalized to
    start in degree zero.

    Raises NotCohenMacaulayError when some off-codimension Ext over the
    ambient ring is nonzero.
    """
    S = QuotientRing(r.ambient, [])
    n = r.ambient.n
    RS = ModulePresentation.cyclic(S, list(r.ideal_basis))
    SS = ModulePresentation.free(S, [0])
    codim = n - r.krull_dim()
    for i in range(n + 1):
        if i == codim:
            continue
        if not ext_module(RS, SS, i).is_zero_module():
            raise NotCohenMacaulayError(
                f"nonzero Ext at index {i}, codimension {codim}")
    w = minimal_presentation(ext_module(RS, SS, codim))
    rel = GradedMatrix(r, w.relations.source, w.gens,
                       dict(w.relations.entries))
    out = minimal_presentation(ModulePresentation(r, rel))
    if out.gens.rank == 0:
        return out
    return out.shifted(-min(out.gens.twists))
