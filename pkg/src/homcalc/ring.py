"""Core graded algebra: weighted polynomial rings, monomial orders,
polynomials, graded free modules, and graded matrices.

Conventions
-----------
* Monomials are dense exponent tuples (the engine targets <= 8 variables).
* Every variable carries a positive integer weight; the weighted degree of
  x^e is sum(w_i * e_i).  Weight vector (1,...,1) recovers the standard
  grading; (3,4,5) realizes k[t^3,t^4,t^5] as a quotient in three
  variables.
* Orders are weighted-degree compatible: degrevlex (default) and deglex.
  Keys are tuples so ``max(..., key=ring.mono_key)`` picks leading terms.
* A graded free module is (rank, twists); generator j of F sits in
  internal degree twists[j].  A graded matrix f: source -> target is
  homogeneous when entry (i, j) is zero or homogeneous of degree
  source.twists[j] - target.twists[i].
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .field import PrimeField, RationalField


class HomogeneityError(ValueError):
    pass


class MixedRingError(TypeError):
    pass


def _check_same_ring(a, b):
    if a.ring is not b.ring and a.ring != b.ring:
        raise MixedRingError("operands live over different rings")


class PolyRing:
    """Ambient weighted polynomial ring k[x_1..x_n].

    order: 'grevlex' or 'lex', both compared by weighted degree first.
    """

    def __init__(self, field, names: Iterable[str], weights: Iterable[int] | None = None,
                 order: str = "grevlex"):
        self.field = field
        self.names = tuple(names)
        self.n = len(self.names)
        if len(set(self.names)) != self.n:
            raise ValueError("duplicate variable names")
        if weights is None:
            weights = (1,) * self.n
        self.weights = tuple(int(w) for w in weights)
        if len(self.weights) != self.n or any(w < 1 for w in self.weights):
            raise ValueError("need one positive integer weight per variable")
        if order not in ("grevlex", "lex"):
            raise ValueError(f"unknown order {order!r}")
        self.order = order
        self.zero_exp = (0,) * self.n
        self._var_index = {nm: i for i, nm in enumerate(self.names)}

    # -- monomial helpers (exponent tuples) --------------------------------

    def wdeg(self, e) -> int:
        return sum(w * x for w, x in zip(self.weights, e))

    def mono_key(self, e):
        d = self.wdeg(e)
        if self.order == "grevlex":
            return (d,) + tuple(-x for x in reversed(e))
        return (d,) + tuple(e)

    def mono_mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mono_divides(self, a, b) -> bool:
        """a | b componentwise."""
        return all(x <= y for x, y in zip(a, b))

    def mono_div(self, b, a):
        return tuple(y - x for x, y in zip(a, b))

    def mono_lcm(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def monomials_of_degree(self, d: int):
        """All exponent tuples of weighted degree exactly d (sorted by mono_key desc)."""
        out = []

        def rec(i, rem, acc):
            if i == self.n - 1:
                w = self.weights[i]
                if rem % w == 0:
                    out.append(tuple(acc + [rem // w]))
                return
            w = self.weights[i]
            for e in range(rem // w + 1):
                rec(i + 1, rem - e * w, acc + [e])

        if d >= 0:
            rec(0, d, []) if self.n else (out.append(()) if d == 0 else None)
        return sorted(out, key=self.mono_key, reverse=True)

    # -- element constructors ----------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self.zero_exp: self.field.one})

    def constant(self, c) -> "Polynomial":
        c = self.field.normalize(c)
        return Polynomial(self, {} if self.field.is_zero(c) else {self.zero_exp: c})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.field.normalize(coeff)
        e = tuple(exps)
        if len(e) != self.n:
            raise ValueError("wrong exponent length")
        return Polynomial(self, {} if self.field.is_zero(c) else {e: c})

    def variable(self, i_or_name) -> "Polynomial":
        i = self._var_index[i_or_name] if isinstance(i_or_name, str) else i_or_name
        e = [0] * self.n
        e[i] = 1
        return self.monomial(e)

    def from_string(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.names == self.names and other.weights == self.weights
                and other.order == self.order)

    def __hash__(self):
        return hash((self.field, self.names, self.weights, self.order))

    def __repr__(self):
        ws = "" if all(w == 1 for w in self.weights) else f", weights={self.weights}"
        return f"PolyRing({self.field!r}, {list(self.names)}{ws})"


class Polynomial:
    """Element of a PolyRing: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def lead(self):
        """(exponent, coeff) of the leading term under the ring order."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            e = max(self.terms, key=self.ring.mono_key)
            self._lead = (e, self.terms[e])
        return self._lead

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        it = iter(self.terms)
        d = self.ring.wdeg(next(it))
        return all(self.ring.wdeg(e) == d for e in it)

    def degree(self):
        """Weighted degree; requires homogeneity. None for 0."""
        if not self.terms:
            return None
        degs = {self.ring.wdeg(e) for e in self.terms}
        if len(degs) != 1:
            raise HomogeneityError(f"inhomogeneous polynomial {self}")
        return degs.pop()

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring.zero_exp, self.ring.field.zero)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        _check_same_ring(self, other)
        F = self.ring.field
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(t.get(e, F.zero), c)
            if F.is_zero(s):
                t.pop(e, None)
            else:
                t[e] = s
        return Polynomial(self.ring, t)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        _check_same_ring(self, other)
        F = self.ring.field
        t = {}
        small, big = (self.terms, other.terms) if len(self.terms) <= len(other.terms) else (other.terms, self.terms)
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = F.add(t.get(e, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    t.pop(e, None)
                else:
                    t[e] = s
        return Polynomial(self.ring, t)

    def scale(self, c):
        F = self.ring.field
        c = F.normalize(c)
        if F.is_zero(c):
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {e: F.mul(c, v) for e, v in self.terms.items()})

    def term_mul(self, exps, coeff):
        """Multiply by coeff * x^exps."""
        F = self.ring.field
        if F.is_zero(coeff):
            return Polynomial(self.ring, {})
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(e, exps)): F.mul(c, coeff)
                                      for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    # -- formatting --------------------------------------------------------

    def __repr__(self):
        return format_polynomial(self)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Ring arithmetic with explicit op name ('add', 'sub', 'mul').

    Raises MixedRingError when the operands disagree on the ring.
    """
    _check_same_ring(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    ring = p.ring
    bits = []
    for e in sorted(p.terms, key=ring.mono_key, reverse=True):
        c = p.terms[e]
        factors = []
        for nm, ex in zip(ring.names, e):
            if ex == 1:
                factors.append(nm)
            elif ex > 1:
                factors.append(f"{nm}^{ex}")
        csz = str(c)
        if factors:
            mono = "*".join(factors)
            body = mono if csz == "1" else f"{csz}*{mono}"
        else:
            body = csz
        bits.append(body)
    return " + ".join(bits)


# -- polynomial string grammar --------------------------------------------
#
# expr   := term (('+'|'-') term)*
# term   := factor ('*' factor)*
# factor := atom ('^' int)?
# atom   := int | name | '-' atom | '(' expr ')'
#
# Used by problem files and by fixture construction.  Errors carry the
# 0-based column of the offending token.

class PolyParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


def _tokenize(text: str):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos]

    def take(kind=None):
        nonlocal pos
        t = toks[pos]
        if kind is not None and t[0] != kind:
            raise PolyParseError(f"expected {kind}, found {t[1]!r}", t[2])
        pos += 1
        return t

    def atom() -> Polynomial:
        kind, val, col = peek()
        if kind == "int":
            take()
            return ring.constant(int(val))
        if kind == "name":
            take()
            if val not in ring._var_index:
                raise PolyParseError(f"unknown variable {val!r}", col)
            return ring.variable(val)
        if kind == "-":
            take()
            return -atom()
        if kind == "(":
            take()
            e = expr()
            take(")")
            return e
        raise PolyParseError(f"expected a term, found {val!r}", col)

    def factor() -> Polynomial:
        base = atom()
        if peek()[0] == "^":
            take()
            kind, val, col = peek()
            if kind != "int":
                raise PolyParseError("exponent must be a nonnegative integer", col)
            take()
            k = int(val)
            out = ring.one()
            for _ in range(k):
                out = out * base
            return out
        return base

    def term() -> Polynomial:
        out = factor()
        while peek()[0] == "*":
            take()
            out = out * factor()
        return out

    def expr() -> Polynomial:
        kind, _, _ = peek()
        neg = False
        if kind in ("+", "-"):
            neg = take()[0] == "-"
        out = term()
        if neg:
            out = -out
        while peek()[0] in ("+", "-"):
            op = take()[0]
            t = term()
            out = out - t if op == "-" else out + t
        return out

    result = expr()
    kind, val, col = peek()
    if kind != "end":
        raise PolyParseError(f"trailing input {val!r}", col)
    return result


# -- graded free modules and matrices --------------------------------------

class GradedFree(NamedTuple):
    """Finitely generated graded free module, described by generator degrees."""

    rank: int
    twists: tuple

    @staticmethod
    def of(twists) -> "GradedFree":
        tw = tuple(int(t) for t in twists)
        return GradedFree(len(tw), tw)

    def shifted(self, n: int) -> "GradedFree":
        # suspension by n raises internal generator degrees by 0; the
        # homological shift is bookkept at complex level.  This helper is
        # an internal-degree twist F(-n): generator degrees go up by n.
        return GradedFree(self.rank, tuple(t + n for t in self.twists))


ZERO_FREE = GradedFree(0, ())


class GradedMatrix:
    """Homogeneous matrix over a graded ring: map source -> target.

    entries: sparse dict (i, j) -> nonzero Polynomial (i indexes target
    generators, j source generators).  Columns are elements of the target
    free module.
    """

    __slots__ = ("ring", "source", "target", "entries")

    def __init__(self, ring, source: GradedFree, target: GradedFree, entries: dict):
        self.ring = ring
        self.source = source
        self.target = target
        self.entries = {k: v for k, v in entries.items() if not v.is_zero()}

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ring, source: GradedFree, target: GradedFree) -> "GradedMatrix":
        return cls(ring, source, target, {})

    @classmethod
    def identity(cls, ring, free: GradedFree) -> "GradedMatrix":
        one = ring.one() if hasattr(ring, "one") else ring.ambient.one()
        return cls(ring, free, free, {(i, i): one for i in range(free.rank)})

    @classmethod
    def from_columns(cls, ring, target: GradedFree, columns, twists=None) -> "GradedMatrix":
        """columns: list of dicts {row_index: Polynomial}. Twists inferred
        from homogeneity when not given."""
        entries = {}
        inferred = []
        for j, col in enumerate(columns):
            deg = None
            for i, p in col.items():
                if p.is_zero():
                    continue
                entries[(i, j)] = p
                d = p.degree() + target.twists[i]
                if deg is None:
                    deg = d
                elif deg != d:
                    raise HomogeneityError(f"column {j} is not homogeneous")
            inferred.append(deg)
        if twists is None:
            twists = [0 if d is None else d for d in inferred]
        source = GradedFree.of(twists)
        return cls(ring, source, target, entries)

    # access ---------------------------------------------------------------

    def entry(self, i: int, j: int) -> Polynomial:
        p = self.entries.get((i, j))
        if p is None:
            ring = self.ring if isinstance(self.ring, PolyRing) else self.ring.ambient
            return ring.zero()
        return p

    def column(self, j: int) -> dict:
        return {i: p for (i, jj), p in self.entries.items() if jj == j}

    def columns(self):
        cols = [dict() for _ in range(self.source.rank)]
        for (i, j), p in self.entries.items():
            cols[j][i] = p
        return cols

    def is_zero(self) -> bool:
        return not self.entries

    def transpose_dual(self) -> "GradedMatrix":
        """Matrix of Hom(-, R): swaps source/target and negates twists."""
        src = GradedFree(self.target.rank, tuple(-t for t in self.target.twists))
        tgt = GradedFree(self.source.rank, tuple(-t for t in self.source.twists))
        return GradedMatrix(self.ring, src, tgt, {(j, i): p for (i, j), p in self.entries.items()})

    # algebra --------------------------------------------------------------

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self o other (other first). Requires other.target == self.source."""
        if other.target != self.source:
            raise ValueError("composition shape mismatch")
        by_k = {}
        for (i, k), p in self.entries.items():
            by_k.setdefault(k, []).append((i, p))
        out = {}
        for (k, j), q in other.entries.items():
            for i, p in by_k.get(k, ()):
                prod = p * q
                if prod.is_zero():
                    continue
                key = (i, j)
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        return GradedMatrix(self.ring, other.source, self.target, out)

    def add(self, other: "GradedMatrix") -> "GradedMatrix":
        if other.source != self.source or other.target != self.target:
            raise ValueError("addition shape mismatch")
        out = dict(self.entries)
        for k, p in other.entries.items():
            cur = out.get(k)
            s = p if cur is None else cur + p
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return GradedMatrix(self.ring, self.source, self.target, out)

    def scale(self, c) -> "GradedMatrix":
        return GradedMatrix(self.ring, self.source, self.target,
                            {k: p.scale(c) for k, p in self.entries.items()})

    def negate(self) -> "GradedMatrix":
        return GradedMatrix(self.ring, self.source, self.target,
                            {k: -p for k, p in self.entries.items()})

    def map_entries(self, fn) -> "GradedMatrix":
        return GradedMatrix(self.ring, self.source, self.target,
                            {k: fn(p) for k, p in self.entries.items()})

    # validation -----------------------------------------------------------

    def validate_homogeneous(self):
        """Check entry (i,j) is homogeneous of degree source.twists[j] - target.twists[i]."""
        for (i, j), p in self.entries.items():
            if p.is_zero():
                continue
            want = self.source.twists[j] - self.target.twists[i]
            got = p.degree()
            if got != want:
                raise HomogeneityError(
                    f"entry ({i},{j}) has degree {got}, expected {want}")
        return self

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.entries == other.entries)

    __hash__ = None

    def __repr__(self):
        return (f"GradedMatrix({self.target.rank}x{self.source.rank}, "
                f"{len(self.entries)} entries)")


def block_diagonal(ring, blocks):
    """Block diagonal matrix from a list of GradedMatrix."""
    src_tw, tgt_tw, entries = [], [], {}
    ri = ci = 0
    for b in blocks:
        for (i, j), p in b.entries.items():
            entries[(ri + i, ci + j)] = p
        src_tw.extend(b.source.twists)
        tgt_tw.extend(b.target.twists)
        ri += b.target.rank
        ci += b.source.rank
    return GradedMatrix(ring, GradedFree.of(src_tw), GradedFree.of(tgt_tw), entries)


def hstack(ring, mats):
    """Concatenate matrices with a common target side by side."""
    tgt = mats[0].target
    src_tw, entries = [], {}
    off = 0
    for m in mats:
        if m.target != tgt:
            raise ValueError("hstack target mismatch")
        for (i, j), p in m.entries.items():
            entries[(i, off + j)] = p
        src_tw.extend(m.source.twists)
        off += m.source.rank
    return GradedMatrix(ring, GradedFree.of(src_tw), tgt, entries)
