"""Groebner machinery for graded free modules over weighted polynomial
rings, plus quotient rings and Hilbert series.

Module elements ("vectors") are sparse dicts {(component, exponents):
coefficient}.  Everything is kept exact; coefficients are unboxed field
elements and all choices (selection strategy, reducer choice, final
ordering) are deterministic, so repeated runs produce identical output.

Quotient-ring computations are run upstairs: to compute kernels or
syzygies over R = P/I inside a free module with target components
e_0..e_{r-1}, the input columns are augmented with the padding vectors
g*e_t for every defining relation g and every component t, the syzygy
computation runs over P, and the answers are projected back to the
original coordinates and normal-formed mod I.
"""

from __future__ import annotations

import heapq

from .ring import (
    GradedFree, GradedMatrix, HomogeneityError, Polynomial, PolyRing,
)

# ---------------------------------------------------------------------------
# module term orders


class PositionOverTerm:
    """Component dominates; lower component index wins, then the ring order."""

    __slots__ = ("ring",)

    def __init__(self, ring: PolyRing):
        self.ring = ring

    def key(self, c, e):
        return (-c, self.ring.mono_key(e))


class TermOverPosition:
    """Twisted degree, then ring order on the monomial, then component."""

    __slots__ = ("ring", "twists")

    def __init__(self, ring: PolyRing, twists):
        self.ring = ring
        self.twists = tuple(twists)

    def key(self, c, e):
        return (self.ring.wdeg(e) + self.twists[c], self.ring.mono_key(e), -c)


class SchreyerOrder:
    """Order induced by the leading terms of a fixed generator list.

    leads[c] is the (component, exponent) lead of the c-th generator one
    level down; x^e e_c is compared by the base key of lead(g_c) * x^e,
    ties broken by preferring the earlier generator.
    """

    __slots__ = ("ring", "base", "leads")

    def __init__(self, ring: PolyRing, base, leads):
        self.ring = ring
        self.base = base
        self.leads = list(leads)

    def key(self, c, e):
        bc, be = self.leads[c]
        return (self.base.key(bc, self.ring.mono_mul(be, e)), -c)


# ---------------------------------------------------------------------------
# sparse vector helpers: Vec = dict {(component, exponents): coeff}


def vec_from_column(col: dict, ring) -> dict:
    v = {}
    for i, p in col.items():
        for e, c in p.terms.items():
            v[(i, e)] = c
    return v


def vec_to_column(v: dict, ring) -> dict:
    col = {}
    for (i, e), c in v.items():
        col.setdefault(i, {})[e] = c
    return {i: Polynomial(ring, t) for i, t in col.items()}


def vec_scale(v, c, F):
    if F.is_zero(c):
        return {}
    return {k: F.mul(c, x) for k, x in v.items()}


def vec_axpy(target, c, v, F):
    """target += c * v, in place."""
    for k, x in v.items():
        s = F.add(target.get(k, F.zero), F.mul(c, x))
        if F.is_zero(s):
            target.pop(k, None)
        else:
            target[k] = s
    return target


def vec_term_mul(v, shift, c, ring, F):
    """(c * x^shift) * v."""
    out = {}
    for (comp, e), x in v.items():
        out[(comp, ring.mono_mul(e, shift))] = F.mul(c, x)
    return out


def vec_lead(v, okey):
    return max(v, key=lambda ce: okey(*ce))


def vec_degree(v, ring, twists):
    """Twisted degree of a homogeneous vector (None for zero)."""
    if not v:
        return None
    degs = {ring.wdeg(e) + twists[c] for (c, e) in v}
    if len(degs) != 1:
        raise HomogeneityError("inhomogeneous module element")
    return degs.pop()


def vec_is_homogeneous(v, ring, twists):
    if not v:
        return True
    degs = {ring.wdeg(e) + twists[c] for (c, e) in v}
    return len(degs) == 1


# ---------------------------------------------------------------------------
# division


def vec_divide(f, basis, leads, ring, F, okey, track=False):
    """Divide f by basis (list of Vec with precomputed leads).

    Returns (remainder, quotients) with f = sum_i q_i basis_i + remainder
    and no remainder term divisible by any lead.  quotients is a list of
    term dicts (exponent -> coeff) when track is set, else None.
    """
    work = dict(f)
    rem = {}
    quots = [dict() for _ in basis] if track else None
    kf = lambda ce: okey(*ce)
    while work:
        ce = max(work, key=kf)
        c, e = ce
        coef = work[ce]
        hit = -1
        for i, ((lc, le), lcoef) in enumerate(leads):
            if lc == c and ring.mono_divides(le, e):
                hit = i
                break
        if hit < 0:
            rem[ce] = coef
            del work[ce]
            continue
        shift = ring.mono_div(e, leads[hit][0][1])
        fac = F.div(coef, leads[hit][1])
        vec_axpy(work, F.neg(fac), vec_term_mul(basis[hit], shift, F.one, ring, F), F)
        if track:
            q = quots[hit]
            s = F.add(q.get(shift, F.zero), fac)
            if F.is_zero(s):
                q.pop(shift, None)
            else:
                q[shift] = s
    return rem, quots


# ---------------------------------------------------------------------------
# Buchberger with expression tracking


class GBResult:
    """Reduced Groebner basis of a list of input vectors.

    elements[k]: basis vectors, lead coefficient 1, sorted by lead key.
    leads[k]: ((component, exponents), 1).
    exprs[k]: dict input_index -> Polynomial with
        elements[k] = sum_i exprs[k][i] * inputs[i]   (over the ambient ring).
    """

    __slots__ = ("ring", "field", "okey", "inputs", "elements", "leads", "exprs")

    def __init__(self, ring, field, okey, inputs, elements, leads, exprs):
        self.ring = ring
        self.field = field
        self.okey = okey
        self.inputs = inputs
        self.elements = elements
        self.leads = leads
        self.exprs = exprs

    def normal_form(self, v, track=False):
        rem, quots = vec_divide(v, self.elements, self.leads, self.ring,
                                self.field, self.okey, track=track)
        if not track:
            return rem, None
        return rem, [Polynomial(self.ring, dict(q)) for q in quots]

    def contains(self, v) -> bool:
        rem, _ = self.normal_form(v)
        return not rem


def _expr_axpy(target: dict, coeff: Polynomial, src: dict):
    """target -= coeff * src for expression dicts (index -> Polynomial)."""
    for i, p in src.items():
        cur = target.get(i)
        upd = (cur - coeff * p) if cur is not None else -(coeff * p)
        if upd.is_zero():
            target.pop(i, None)
        else:
            target[i] = upd


def reduced_gb(inputs, ring: PolyRing, order, track=False) -> GBResult:
    """Buchberger with normal selection, then full inter-reduction.

    inputs: list of Vec (zero entries allowed; they are ignored here and
    handled by the syzygy layer).
    """
    F = ring.field
    okey = order.key
    basis = []      # list of Vec
    leads = []      # ((c, e), coeff)
    exprs = []      # input_index -> Polynomial

    def push(v, expr):
        lead = vec_lead(v, okey)
        basis.append(v)
        leads.append((lead, v[lead]))
        exprs.append(expr)
        return len(basis) - 1

    for i, v in enumerate(inputs):
        if v:
            push(dict(v), {i: ring.one()} if track else {})

    # pair queue keyed by the order key of the lcm term (normal strategy)
    pairs = []
    ticket = 0
    pending = set()

    def lcm_of(i, j):
        (ci, ei), _ = leads[i]
        (cj, ej), _ = leads[j]
        if ci != cj:
            return None
        return (ci, ring.mono_lcm(ei, ej))

    def queue_pairs_with(j):
        nonlocal ticket
        for i in range(j):
            m = lcm_of(i, j)
            if m is None:
                continue
            heapq.heappush(pairs, (okey(*m), ticket, i, j))
            pending.add((i, j))
            ticket += 1

    for j in range(len(basis)):
        queue_pairs_with(j)

    # the product criterion needs every vector confined to one component
    # (leads alone are not enough: coprime-lead S-pairs can leave
    # uncancelled residue in other components)
    rank1 = len({c for v in basis for (c, _) in v}) <= 1

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        m = lcm_of(i, j)
        (ci, ei), lci = leads[i]
        (cj, ej), lcj = leads[j]
        mc, me = m
        # product criterion: in a rank-one ambient module a pair with
        # coprime leading monomials reduces to zero
        if rank1 and ring.mono_mul(ei, ej) == me:
            continue
        # chain criterion with the lcm-inequality guards that make
        # pop-time elimination safe
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            (ck, ek), _ = leads[k]
            if ck != mc or not ring.mono_divides(ek, me):
                continue
            a, b = (i, k) if i < k else (k, i)
            c2, d2 = (j, k) if j < k else (k, j)
            if (a, b) in pending or (c2, d2) in pending:
                continue
            if lcm_of(a, b) == m or lcm_of(c2, d2) == m:
                continue
            skip = True
            break
        if skip:
            continue
        si = ring.mono_div(me, ei)
        sj = ring.mono_div(me, ej)
        s = vec_term_mul(basis[i], si, F.inv(lci), ring, F)
        vec_axpy(s, F.neg(F.one), vec_term_mul(basis[j], sj, F.inv(lcj), ring, F), F)
        rem, quots = vec_divide(s, basis, leads, ring, F, okey, track=track)
        if not rem:
            continue
        if track:
            expr = {}
            _expr_axpy(expr, ring.monomial(si, F.neg(F.inv(lci))), exprs[i])
            _expr_axpy(expr, ring.monomial(sj, F.inv(lcj)), exprs[j])
            for k, q in enumerate(quots):
                if q:
                    _expr_axpy(expr, Polynomial(ring, dict(q)), exprs[k])
        else:
            expr = {}
        jnew = push(rem, expr)
        queue_pairs_with(jnew)

    # inter-reduce to the reduced basis, keeping expressions consistent
    changed = True
    while changed:
        changed = False
        for idx in range(len(basis)):
            if basis[idx] is None:
                continue
            others = [b for t, b in enumerate(basis) if t != idx and b is not None]
            olead = [leads[t] for t, b in enumerate(basis) if t != idx and b is not None]
            oidx = [t for t, b in enumerate(basis) if t != idx and b is not None]
            rem, quots = vec_divide(basis[idx], others, olead, ring, F, okey, track=track)
            if rem == basis[idx]:
                continue
            changed = True
            if not rem:
                basis[idx] = None
                leads[idx] = None
                exprs[idx] = None
                continue
            if track:
                expr = dict(exprs[idx])
                for t, q in zip(oidx, quots):
                    if q:
                        _expr_axpy(expr, Polynomial(ring, dict(q)), exprs[t])
                exprs[idx] = expr
            basis[idx] = rem
            leads[idx] = (vec_lead(rem, okey), rem[vec_lead(rem, okey)])

    final = [(b, leads[t], exprs[t]) for t, b in enumerate(basis) if b is not None]
    final.sort(key=lambda ble: okey(*ble[1][0]))
    out_b, out_l, out_e = [], [], []
    for b, (lt, lc), e in final:
        inv = F.inv(lc)
        out_b.append(vec_scale(b, inv, F))
        out_l.append((lt, F.one))
        if track:
            out_e.append({i: p.scale(inv) for i, p in e.items()})
        else:
            out_e.append({})
    return GBResult(ring, F, okey, inputs, out_b, out_l, out_e)


# ---------------------------------------------------------------------------
# syzygies


def schreyer_syzygies(gb: GBResult):
    """Syzygies of gb.elements from all same-component S-pairs.

    Each syzygy is a Vec over the index space of gb.elements.  By the
    Schreyer construction these generate the full syzygy module of the
    basis.
    """
    ring, F, okey = gb.ring, gb.field, gb.okey
    out = []
    n = len(gb.elements)
    for i in range(n):
        (ci, ei), lci = gb.leads[i]
        for j in range(i + 1, n):
            (cj, ej), lcj = gb.leads[j]
            if ci != cj:
                continue
            me = ring.mono_lcm(ei, ej)
            si = ring.mono_div(me, ei)
            sj = ring.mono_div(me, ej)
            s = vec_term_mul(gb.elements[i], si, F.inv(lci), ring, F)
            vec_axpy(s, F.neg(F.one),
                     vec_term_mul(gb.elements[j], sj, F.inv(lcj), ring, F), F)
            rem, quots = vec_divide(s, gb.elements, gb.leads, ring, F, okey, track=True)
            if rem:
                raise ArithmeticError("S-pair of a Groebner basis did not reduce to zero")
            syz = {}
            syz[(i, si)] = F.inv(lci)
            prev = syz.get((j, sj), F.zero)
            syz[(j, sj)] = F.sub(prev, F.inv(lcj))
            if F.is_zero(syz[(j, sj)]):
                del syz[(j, sj)]
            for k, q in enumerate(quots):
                for e, c in q.items():
                    cur = F.sub(syz.get((k, e), F.zero), c)
                    if F.is_zero(cur):
                        syz.pop((k, e), None)
                    else:
                        syz[(k, e)] = cur
            if syz:
                out.append(syz)
    return out


def syzygy_generators(inputs, ring: PolyRing, order):
    """Generators of the syzygy module of the input vectors.

    Returns Vecs over the input index space: transported Schreyer
    syzygies of the reduced basis plus the columns of I - U V, where U, V
    express the basis in the inputs and back.  Zero inputs contribute
    unit syzygies.
    """
    F = ring.field
    zero_idx = [i for i, v in enumerate(inputs) if not v]
    gb = reduced_gb(inputs, ring, order, track=True)

    out = []
    for i in zero_idx:
        out.append({(i, ring.zero_exp): F.one})

    # transported Schreyer syzygies: s over GB indices -> U s over inputs
    for s in schreyer_syzygies(gb):
        t = {}
        for (k, e), c in s.items():
            for i, p in gb.exprs[k].items():
                for pe, pc in p.terms.items():
                    key = (i, ring.mono_mul(pe, e))
                    cur = F.add(t.get(key, F.zero), F.mul(c, pc))
                    if F.is_zero(cur):
                        t.pop(key, None)
                    else:
                        t[key] = cur
        if t:
            out.append(t)

    # inputs re-expressed through the basis: columns of I - U V
    for i, v in enumerate(inputs):
        if not v:
            continue
        rem, quots = gb.normal_form(v, track=True)
        if rem:
            raise ArithmeticError("input does not reduce to zero against its own basis")
        t = {(i, ring.zero_exp): F.one}
        for k, q in enumerate(quots):
            if q.is_zero():
                continue
            for j, p in gb.exprs[k].items():
                prod = q * p
                for pe, pc in prod.terms.items():
                    key = (j, pe)
                    cur = F.sub(t.get(key, F.zero), pc)
                    if F.is_zero(cur):
                        t.pop(key, None)
                    else:
                        t[key] = cur
        if t:
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# quotient rings


class QuotientRing:
    """R = P/I for a homogeneous ideal I in a weighted polynomial ring.

    Elements are represented by their normal forms against the frozen
    reduced Groebner basis of I, so equality is dict equality.  An empty
    relation list gives the polynomial ring itself in quotient-ring
    clothing, which is how regular base rings enter the pipeline.
    """

    def __init__(self, ambient: PolyRing, relations):
        self.ambient = ambient
        self.field = ambient.field
        self.names = ambient.names
        self.weights = ambient.weights
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = ambient.from_string(r)
            if r.is_zero():
                continue
            if not r.is_homogeneous():
                raise HomogeneityError(f"inhomogeneous relation {r}")
            rels.append(r)
        self.relations = tuple(rels)
        order = PositionOverTerm(ambient)
        vecs = [{(0, e): c for e, c in r.terms.items()} for r in rels]
        gb = reduced_gb(vecs, ambient, order, track=False)
        self._gb = gb
        self.ideal_basis = tuple(
            Polynomial(ambient, {e: c for (comp, e), c in v.items()})
            for v in gb.elements)
        self._lead_exps = tuple(lt[1] for (lt, _) in gb.leads)
        if any(all(x == 0 for x in e) for e in self._lead_exps):
            raise ValueError("unit ideal: quotient ring is zero")

    # -- element layer -----------------------------------------------------

    def reduce(self, p: Polynomial) -> Polynomial:
        if not self.ideal_basis or p.is_zero():
            return p
        v = {(0, e): c for e, c in p.terms.items()}
        rem, _ = self._gb.normal_form(v)
        return Polynomial(self.ambient, {e: c for (comp, e), c in rem.items()})

    def is_zero(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def zero(self):
        return self.ambient.zero()

    def one(self):
        return self.ambient.one()

    def variable(self, i_or_name):
        return self.reduce(self.ambient.variable(i_or_name))

    def from_string(self, text):
        return self.reduce(self.ambient.from_string(text))

    def reduce_matrix(self, m: GradedMatrix) -> GradedMatrix:
        return GradedMatrix(self, m.source, m.target,
                            {k: self.reduce(p) for k, p in m.entries.items()})

    def maximal_ideal_gens(self):
        return [self.variable(i) for i in range(self.ambient.n)]

    # -- ring-level structure ---------------------------------------------

    def lead_ideal_min_gens(self):
        return minimalize_monomials(self._lead_exps, self.ambient)

    def is_artinian(self) -> bool:
        gens = self.lead_ideal_min_gens()
        for v in range(self.ambient.n):
            if not any(e[v] > 0 and all(e[u] == 0 for u in range(self.ambient.n) if u != v)
                       for e in gens):
                return False
        return True

    def std_monomials(self):
        """All monomials outside the leading-term ideal (artinian only)."""
        if not self.is_artinian():
            raise ValueError("standard monomial basis is infinite")
        gens = self.lead_ideal_min_gens()
        bounds = []
        for v in range(self.ambient.n):
            pure = [e[v] for e in gens
                    if e[v] > 0 and all(e[u] == 0 for u in range(self.ambient.n) if u != v)]
            bounds.append(min(pure))
        out = []

        def rec(v, acc):
            if v == self.ambient.n:
                e = tuple(acc)
                if not any(self.ambient.mono_divides(g, e) for g in gens):
                    out.append(e)
                return
            for x in range(bounds[v]):
                rec(v + 1, acc + [x])

        rec(0, [])
        out.sort(key=lambda e: (self.ambient.wdeg(e), self.ambient.mono_key(e)))
        return out

    def std_monomials_of_degree(self, d: int):
        gens = self.lead_ideal_min_gens()
        return [e for e in self.ambient.monomials_of_degree(d)
                if not any(self.ambient.mono_divides(g, e) for g in gens)]

    def top_degree(self):
        """Largest degree of a nonzero graded piece (artinian only)."""
        ms = self.std_monomials()
        return max(self.ambient.wdeg(e) for e in ms)

    def hilbert_series(self):
        numer = hilbert_numerator(self.lead_ideal_min_gens(), self.ambient)
        return HilbertSeries(self.ambient.weights, numer)

    def krull_dim(self) -> int:
        return self.hilbert_series().dimension()

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and other.ambient == self.ambient
                and other.ideal_basis == self.ideal_basis)

    def __hash__(self):
        # Polynomial itself is unhashable; hash the sorted term data
        key = tuple(tuple(sorted(p.terms.items())) for p in self.ideal_basis)
        return hash((self.ambient, key))

    def __repr__(self):
        rels = ", ".join(str(r) for r in self.relations) or "0"
        return f"QuotientRing({self.ambient!r} / ({rels}))"


# ---------------------------------------------------------------------------
# kernels, lifts, images over a quotient ring


def _padding_vectors(qr: QuotientRing, rank: int):
    pads = []
    for g in qr.ideal_basis:
        for t in range(rank):
            pads.append({(t, e): c for e, c in g.terms.items()})
    return pads


def kernel_matrix(m: GradedMatrix) -> GradedMatrix:
    """Generators of ker(m) for m over a QuotientRing (or PolyRing)."""
    qr = m.ring
    if isinstance(qr, PolyRing):
        qr = QuotientRing(qr, [])
    P = qr.ambient
    cols = [vec_from_column(c, P) for c in m.columns()]
    pads = _padding_vectors(qr, m.target.rank)
    order = TermOverPosition(P, m.target.twists)
    syz = syzygy_generators(cols + pads, P, order)
    ncols = len(cols)
    raw = []
    for s in syz:
        col = {}
        for (idx, e), c in s.items():
            if idx < ncols:
                col.setdefault(idx, {})[e] = c
        if not col:
            continue
        red = {i: qr.reduce(Polynomial(P, t)) for i, t in col.items()}
        red = {i: p for i, p in red.items() if not p.is_zero()}
        if red:
            raw.append(red)
    raw = interreduce_columns(qr, m.source, raw)
    return GradedMatrix.from_columns(qr, m.source, raw)


def interreduce_columns(qr: QuotientRing, free: GradedFree, cols):
    """Greedy inter-reduction of module elements over the quotient ring.

    Preserves the span; drops zeros and elements reducible to zero by the
    others plus the ideal padding.  Not a Groebner basis, just cleanup to
    keep iterated syzygy runs small.
    """
    P = qr.ambient
    order = TermOverPosition(P, free.twists)
    okey = order.key
    vecs = [vec_from_column(c, P) for c in cols]
    vecs = [v for v in vecs if v]
    vecs.sort(key=lambda v: okey(*vec_lead(v, okey)))
    pads = _padding_vectors(qr, free.rank)
    accepted = list(pads)
    leads = [(vec_lead(v, okey), v[vec_lead(v, okey)]) for v in accepted]
    out = []
    for v in vecs:
        rem, _ = vec_divide(v, accepted, leads, P, qr.field, okey)
        if not rem:
            continue
        lt = vec_lead(rem, okey)
        rem = vec_scale(rem, qr.field.inv(rem[lt]), qr.field)
        accepted.append(rem)
        leads.append((lt, qr.field.one))
        out.append(vec_to_column(rem, P))
    return out


def lift_matrix(m: GradedMatrix, targets: GradedMatrix):
    """Solve m X = targets over the quotient ring; None when unsolvable.

    targets.target must equal m.target.  The result X maps
    targets.source -> m.source.
    """
    if targets.target != m.target:
        raise ValueError("lift target mismatch")
    qr = m.ring
    if isinstance(qr, PolyRing):
        qr = QuotientRing(qr, [])
    P = qr.ambient
    cols = [vec_from_column(c, P) for c in m.columns()]
    pads = _padding_vectors(qr, m.target.rank)
    order = TermOverPosition(P, m.target.twists)
    gb = reduced_gb(cols + pads, P, order, track=True)
    ncols = len(cols)
    entries = {}
    for j, col in enumerate(targets.columns()):
        v = vec_from_column(col, P)
        rem, quots = gb.normal_form(v, track=True)
        if rem:
            return None
        acc = {}
        for k, q in enumerate(quots):
            if q.is_zero():
                continue
            for i, p in gb.exprs[k].items():
                if i >= ncols:
                    continue
                cur = acc.get(i)
                prod = q * p
                acc[i] = prod if cur is None else cur + prod
        for i, p in acc.items():
            p = qr.reduce(p)
            if not p.is_zero():
                entries[(i, j)] = p
    return GradedMatrix(qr, targets.source, m.source, entries)


def matrix_image_contains(m: GradedMatrix, targets: GradedMatrix) -> bool:
    return lift_matrix(m, targets) is not None


# ---------------------------------------------------------------------------
# Hilbert series


def minimalize_monomials(exps, ring):
    """Minimal generators of the monomial ideal generated by exps."""
    uniq = sorted(set(exps), key=lambda e: (ring.wdeg(e), ring.mono_key(e)))
    out = []
    for e in uniq:
        if not any(ring.mono_divides(g, e) for g in out):
            out.append(e)
    return out


def _poly_mul_int(a: dict, b: dict) -> dict:
    out = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = da + db
            out[d] = out.get(d, 0) + ca * cb
    return {d: c for d, c in out.items() if c}


def _poly_add_int(a: dict, b: dict) -> dict:
    out = dict(a)
    for d, c in b.items():
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def hilbert_numerator(gens, ring: PolyRing) -> dict:
    """Numerator of the Hilbert series of P/(monomial ideal).

    The series is numerator / prod_v (1 - t^{w_v}); computed by the
    colon/sum pivot recursion.  gens: minimal exponent tuples.
    """
    gens = minimalize_monomials(gens, ring)
    if not gens:
        return {0: 1}
    if any(all(x == 0 for x in e) for e in gens):
        return {}
    # pairwise coprime generators split as a product
    coprime = True
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if any(a > 0 and b > 0 for a, b in zip(gens[i], gens[j])):
                coprime = False
                break
        if not coprime:
            break
    if coprime:
        out = {0: 1}
        for e in gens:
            out = _poly_mul_int(out, {0: 1, ring.wdeg(e): -1})
        return out
    # pivot: most frequent variable among the generators
    counts = [0] * ring.n
    for e in gens:
        for v, x in enumerate(e):
            if x > 0:
                counts[v] += 1
    v = max(range(ring.n), key=lambda u: (counts[u], -u))
    plus = [e for e in gens if e[v] == 0]
    xv = tuple(1 if u == v else 0 for u in range(ring.n))
    plus = plus + [xv]
    colon = [tuple(x - 1 if u == v and x > 0 else x for u, x in enumerate(e)) for e in gens]
    n_plus = hilbert_numerator(plus, ring)
    n_colon = hilbert_numerator(colon, ring)
    shifted = {d + ring.weights[v]: c for d, c in n_colon.items()}
    return _poly_add_int(n_plus, shifted)


class HilbertSeries:
    """numerator / prod_v (1 - t^{w_v}), numerator an integer Laurent
    polynomial (dict degree -> coefficient)."""

    __slots__ = ("weights", "numer")

    def __init__(self, weights, numer: dict):
        self.weights = tuple(weights)
        self.numer = {d: c for d, c in numer.items() if c}

    def shifted(self, n: int) -> "HilbertSeries":
        return HilbertSeries(self.weights, {d + n: c for d, c in self.numer.items()})

    def plus(self, other: "HilbertSeries") -> "HilbertSeries":
        if other.weights != self.weights:
            raise ValueError("mixed denominators")
        return HilbertSeries(self.weights, _poly_add_int(self.numer, other.numer))

    def coeff(self, d: int) -> int:
        return self.coeffs(d, d)[0]

    def coeffs(self, lo: int, hi: int):
        """Series coefficients for degrees lo..hi inclusive."""
        if not self.numer:
            return [0] * (hi - lo + 1)
        base = min(self.numer)
        span = hi - base
        if span < 0:
            return [0] * (hi - lo + 1)
        # denominator inverse: weighted partition counts
        part = [0] * (span + 1)
        part[0] = 1
        for w in self.weights:
            for d in range(w, span + 1):
                part[d] += part[d - w]
        out = []
        for d in range(lo, hi + 1):
            s = 0
            for nd, nc in self.numer.items():
                if 0 <= d - nd <= span:
                    s += nc * part[d - nd]
            out.append(s)
        return out

    def dimension(self) -> int:
        """Order of the pole at t = 1 (Krull dimension of the module).

        The zero module reports -1.
        """
        if not self.numer:
            return -1
        # multiplicity of (1 - t) in the numerator
        base = min(self.numer)
        coeffs = {d - base: c for d, c in self.numer.items()}
        z = 0
        while True:
            if sum(coeffs.values()) != 0:
                break
            # divide by (1 - t): if f = (1-t) g, g_d = sum_{e <= d} f_e
            top = max(coeffs)
            g = {}
            acc = 0
            for d in range(top + 1):
                acc += coeffs.get(d, 0)
                if acc:
                    g[d] = acc
            # the top coefficient of the quotient telescopes away
            g.pop(top, None)
            coeffs = g if g else {}
            z += 1
            if not coeffs:
                break
        return len(self.weights) - z

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.weights == other.weights and self.numer == other.numer

    __hash__ = None

    def __repr__(self):
        if not self.numer:
            return "HilbertSeries(0)"
        bits = []
        for d in sorted(self.numer):
            c = self.numer[d]
            bits.append(f"{'+' if c > 0 and bits else ''}{c}t^{d}")
        den = "".join(f"(1-t^{w})" for w in self.weights)
        return f"HilbertSeries(({''.join(bits)})/{den})"
