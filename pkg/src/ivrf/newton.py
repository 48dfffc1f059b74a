"""The minimum-valuation engine.

For a nonzero polynomial f = sum a_i x^i over a valued field, the function
gamma -> min_i (v(a_i) + i*gamma) is the lower envelope of finitely many
lines with integer slopes; it is concave, its slopes strictly decrease left
to right, and its breakpoints live in the divisible closure of the value
group.  For a rational function the envelope of the numerator minus the
envelope of the denominator is taken segment-wise on the merged breakpoints.

Local polynomials capture what happens at a single value: for t nonzero,
loc(f, t) is f(t*x) divided by its dominant coefficient and reduced modulo
the maximal ideal.  The envelope predicts v(f(a)) exactly unless the residue
of a/t is a root of the local polynomial.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError, StructuralError


class Segment:
    """One affine piece: slope * gamma + intercept on [lo, hi].

    ``lo``/``hi`` are group elements or None for an unbounded end.  ``tag``
    records which line (polynomial index, or index pair for a quotient)
    realizes the piece.
    """

    __slots__ = ("slope", "intercept", "lo", "hi", "tag")

    def __init__(self, slope, intercept, lo, hi, tag=None):
        self.slope = slope
        self.intercept = intercept
        self.lo = lo
        self.hi = hi
        self.tag = tag

    def value_at(self, gamma):
        return gamma.scale(self.slope) + self.intercept

    def contains(self, gamma):
        if self.lo is not None and gamma < self.lo:
            return False
        if self.hi is not None and gamma > self.hi:
            return False
        return True

    def __repr__(self):
        lo = "-oo" if self.lo is None else str(self.lo)
        hi = "+oo" if self.hi is None else str(self.hi)
        return f"[{lo},{hi}]: {self.slope}*g + {self.intercept}"


class PiecewiseLinear:
    """A continuous piecewise-linear function on the divisible closure."""

    __slots__ = ("group", "segments")

    def __init__(self, group, segments):
        if not segments:
            raise StructuralError("a piecewise-linear function needs a segment")
        self.group = group
        self.segments = list(segments)

    def eval(self, gamma):
        for seg in self.segments:
            if seg.hi is None or gamma <= seg.hi:
                return seg.value_at(gamma)
        return self.segments[-1].value_at(gamma)

    def breakpoints(self):
        return [seg.hi for seg in self.segments[:-1]]

    def segment_at(self, gamma):
        for seg in self.segments:
            if seg.hi is None or gamma <= seg.hi:
                return seg
        return self.segments[-1]

    def slopes_around(self, gamma):
        """Slopes immediately left and right of gamma."""
        left = right = None
        for seg in self.segments:
            strictly_lo = seg.lo is None or seg.lo < gamma
            strictly_hi = seg.hi is None or seg.hi > gamma
            if strictly_lo and (seg.hi is None or gamma <= seg.hi):
                left = seg.slope
            if strictly_hi and (seg.lo is None or gamma >= seg.lo):
                if right is None:
                    right = seg.slope
        return left, right

    def is_continuous(self):
        for a, b in zip(self.segments, self.segments[1:]):
            if a.hi is None or b.lo is None or a.hi != b.lo:
                return False
            if a.value_at(a.hi) != b.value_at(b.lo):
                return False
        return True

    def merged(self):
        """Join adjacent pieces carrying the same affine map."""
        out = [self.segments[0]]
        for seg in self.segments[1:]:
            last = out[-1]
            if seg.slope == last.slope and seg.intercept == last.intercept:
                tag = last.tag if last.tag == seg.tag else None
                out[-1] = Segment(last.slope, last.intercept, last.lo, seg.hi, tag)
            else:
                out.append(seg)
        return PiecewiseLinear(self.group, out)

    def combine(self, other, op):
        """Segment-wise combination on the merged breakpoint partition."""
        cuts = sorted(set(self.breakpoints()) | set(other.breakpoints()))
        segs = []
        lo = None
        i = j = 0
        for k in range(len(cuts) + 1):
            hi = cuts[k] if k < len(cuts) else None
            while (lo is not None and self.segments[i].hi is not None
                   and self.segments[i].hi <= lo):
                i += 1
            while (lo is not None and other.segments[j].hi is not None
                   and other.segments[j].hi <= lo):
                j += 1
            a, b = self.segments[i], other.segments[j]
            segs.append(Segment(op(a.slope, b.slope), op(a.intercept, b.intercept),
                                lo, hi, (a.tag, b.tag)))
            lo = hi
        return PiecewiseLinear(self.group, segs)

    def __sub__(self, other):
        return self.combine(other, lambda x, y: x - y)

    def __add__(self, other):
        return self.combine(other, lambda x, y: x + y)

    def __eq__(self, other):
        if not isinstance(other, PiecewiseLinear):
            return NotImplemented
        diff = self.combine(other, lambda x, y: (x, y))
        return all(s.slope[0] == s.slope[1] and s.intercept[0] == s.intercept[1]
                   for s in diff.segments)

    def __hash__(self):  # pragma: no cover - not used as a key
        return hash(len(self.segments))

    def is_constant(self):
        m = self.merged()
        return len(m.segments) == 1 and m.segments[0].slope == 0

    def to_json(self):
        return {"segments": [
            {"slope": seg.slope,
             "intercept": seg.intercept.to_json(),
             "from": None if seg.lo is None else seg.lo.to_json(),
             "to": None if seg.hi is None else seg.hi.to_json()}
            for seg in self.segments]}

    def __repr__(self):
        return "PL{" + "; ".join(repr(s) for s in self.segments) + "}"


class ResiduePolynomial:
    """Monic polynomial over the residue field produced by localization."""

    __slots__ = ("poly", "degree")

    def __init__(self, poly):
        self.poly = poly
        self.degree = poly.degree

    def is_monic(self):
        return self.poly.leading() == self.poly.field.one()

    def support(self):
        return self.poly.support()

    def __repr__(self):
        return self.poly.to_str()


def minval_poly(f, V):
    """Lower envelope of the lines v(a_i) + i*gamma over the support of f."""
    if f.is_zero():
        raise StructuralError("minval of the zero polynomial")
    lines = []
    for i in f.support():
        b = V.valuation(f.coeffs[i])
        lines.append((i, b))
    lines.sort(key=lambda e: -e[0])  # decreasing slope: leftmost piece first
    stack = []  # entries (slope, intercept, index, start)
    for m, b in lines:
        placed = False
        while stack:
            m0, b0, s0 = stack[-1]
            gx = (b - b0).scale(Fraction(1, m0 - m))
            if s0 is not None and gx <= s0:
                stack.pop()
                continue
            stack.append((m, b, gx))
            placed = True
            break
        if not placed and not stack:
            stack.append((m, b, None))
    segs = []
    for k, (m, b, start) in enumerate(stack):
        hi = stack[k + 1][2] if k + 1 < len(stack) else None
        segs.append(Segment(m, b, start, hi, tag=m))
    return PiecewiseLinear(V.group, segs)


def minval_rat(phi, V):
    """Envelope of the numerator minus envelope of the denominator."""
    if phi.is_zero():
        raise StructuralError("minval of the zero function")
    pl = minval_poly(phi.num, V) - minval_poly(phi.den, V)
    return pl.merged()


def pl_eval(F, gamma):
    return F.eval(gamma)


def local_poly(f, t, V):
    """The localized residue polynomial of f at t.

    With d the largest index attaining min_i v(a_i t^i), this is
    f(t x) / (a_d t^d) reduced modulo the maximal ideal: monic of degree d,
    and its coefficient at x^i is nonzero exactly when index i attains the
    minimum.
    """
    if f.is_zero() or t == V.zero():
        raise PreconditionError("local polynomial needs f and t nonzero")
    vt = V.valuation(t)
    vals = {}
    for i in f.support():
        vals[i] = V.valuation(f.coeffs[i]) + vt.scale(i)
    mv = min(vals.values())
    d = max(i for i, v in vals.items() if v == mv)
    L = V.residue_field
    lead = f.coeffs[d] * t ** d
    coeffs = []
    for i in range(d + 1):
        if i not in vals:
            coeffs.append(L.zero())
        else:
            coeffs.append(V.residue((f.coeffs[i] * t ** i) / lead))
    from .ratfun import Polynomial
    return ResiduePolynomial(Polynomial(L, coeffs, "x"))


def predict(phi, a, V):
    """(predicted valuation of phi(a), exactness flag).

    The prediction is the envelope value at v(a).  It is exact when the
    residue 1 = res(a/a) is a root of neither local polynomial at t = a;
    v(f(a)) can only exceed the envelope, never undercut it.
    """
    if a == V.zero():
        raise PreconditionError("predict needs a nonzero point")
    va = V.valuation(a)
    predicted = minval_poly(phi.num, V).eval(va) - minval_poly(phi.den, V).eval(va)
    one = V.residue_field.one()
    zero = V.residue_field.zero()
    exact = (local_poly(phi.num, a, V).poly.evaluate(one) != zero
             and local_poly(phi.den, a, V).poly.evaluate(one) != zero)
    return predicted, exact


def slopes_check(phi, t, V):
    """Envelope slopes adjacent to v(t), read off the local polynomials.

    Returns (c, c') where c governs the piece immediately left of v(t) and
    c' the piece immediately right: c is the difference of the top support
    indices, c' of the bottom support indices.
    """
    if phi.is_zero() or t == V.zero():
        raise PreconditionError("slopes need phi and t nonzero")
    locf = local_poly(phi.num, t, V)
    locg = local_poly(phi.den, t, V)
    fs = locf.support()
    gs = locg.support()
    c = fs[-1] - gs[-1]
    cprime = fs[0] - gs[0]
    return c, cprime


def find_simultaneous_point(phis, gamma, V, rng, budget=200):
    """Search for a with v(a) = gamma where every phi attains its envelope.

    Sampling only; returns None when the budget is exhausted (existence is
    guaranteed for infinite residue fields but is not proved here).
    """
    t = V.element_of_value(gamma)
    L = V.residue_field
    for _ in range(budget):
        r = L.random(rng) if getattr(L, "is_finite", False) else L.random(rng, degree=1)
        if r == L.zero():
            continue
        a = t * V.lift(r)
        if all(predict(phi, a, V)[1] for phi in phis):
            return a
    return None
