"""Builders and verifiers for the explicit rational functions of the theory.

Everything here lives over a semilocal intersection of p-adic valuation
rings carrying a uniform element t and an exponent n with
0 < v_m(t) < n * v_m(t_m) for every member valuation.  The shipped presets
are ({2,3}, t=6, n=2) and ({2,3,5}, t=30, n=2).

The builders return exact rational functions:

* theta(x) = t(1 + x^(2n)) / ((1 + t x^n)(t + x^n)), symmetric under
  x -> 1/x, a global unit-to-ideal separator;
* psi = phi^n / (t + phi^(2n)), with the exact cancellation identity
  phi^n (1 - phi^n psi) = t psi;
* rho = phi1 + theta(phi1/phi2) phi2, whose value has valuation
  min(v(phi1(a)), v(phi2(a))) at every sample;
* the separator phi / (phi + theta(phi));
* the two not-local witnesses 1/(x^q - x + 1) and 1/(x^(p^(2e)) - u^(p^e)).

Each builder is paired with a sampling verifier that re-checks the claimed
valuation case table by direct exact evaluation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import (PreconditionError, ResourceError, StructuralError,
                     UnsupportedCaseError)
from .fields import PAdicQ
from .intr import (DomainSpec, Pointed, WHOLE_FIELD, ideal_member,
                   intr_member, residue_roots)
from .ordgroup import INFINITY
from .ratfun import POLE, Polynomial, RationalFunction


class SingularData:
    """A finite family of p-adic valuations with a uniform element t."""

    def __init__(self, primes, t, n):
        if n < 1:
            raise StructuralError("n must be a positive integer")
        self.components = [PAdicQ(p) for p in primes]
        self.t = Fraction(t)
        self.n = n
        for V in self.components:
            vt = V.valuation(self.t)
            zero = V.group.zero()
            if vt is INFINITY or not (zero < vt < V.group.element(n)):
                raise StructuralError(
                    f"0 < v_{V.p}(t) < n*v_{V.p}(t_m) fails for t={t}, n={n}")

    @property
    def field(self):
        return self.components[0]

    def domain(self, E=WHOLE_FIELD):
        return DomainSpec.intersection(list(self.components), E)

    def describe(self):
        ps = ",".join(str(V.p) for V in self.components)
        return f"({{{ps}}}, t={self.t}, n={self.n})"

    def __repr__(self):
        return f"SingularData{self.describe()}"


def preset(name):
    if name in ("t6n2", "23"):
        return SingularData([2, 3], 6, 2)
    if name in ("t30n2", "235"):
        return SingularData([2, 3, 5], 30, 2)
    raise PreconditionError(f"unknown preset {name!r}")


def _x(S):
    return RationalFunction.gen(S.field)


def _const(S, c):
    return RationalFunction.constant(S.field, Fraction(c))


def build_theta(S):
    """t(1+x^(2n)) / ((1+t x^n)(t+x^n)); equal to its own pullback under 1/x."""
    x = _x(S)
    t = _const(S, S.t)
    n = S.n
    theta = (t * (1 + x ** (2 * n))) / ((1 + t * x ** n) * (t + x ** n))
    return theta


def coprime_grid(bound, include_zero=True):
    """All reduced r/s with |r|, s <= bound, plus 0 when asked."""
    if include_zero:
        yield Fraction(0)
    for s in range(1, bound + 1):
        for r in range(1, bound + 1):
            if gcd(r, s) == 1:
                yield Fraction(r, s)
                yield Fraction(-r, s)


def verify_theta(S, samples):
    """Exact case table for theta: at v(a) = 0 the value gains valuation; at
    v(a) != 0 the value is congruent to 1 modulo the maximal ideal."""
    theta = build_theta(S)
    report = {"checked": 0, "violations": []}
    for a in samples:
        val = theta.evaluate(a)
        if val is POLE:
            report["violations"].append({"a": str(a), "case": "pole"})
            continue
        for V in S.components:
            zero = V.group.zero()
            va = V.valuation(a)
            vth = V.valuation(val)
            if va == zero:
                ok = vth is not INFINITY and vth > zero
                case = "unit argument"
            else:
                ok = (vth == zero
                      and V.residue(val) == V.residue_field.one())
                case = "congruent to 1"
            if not ok:
                report["violations"].append(
                    {"a": str(a), "prime": V.p, "case": case})
        report["checked"] += 1
    report["ok"] = not report["violations"]
    return report


def build_psi(phi, S):
    """psi = phi^n/(t + phi^(2n)) plus the exact cancellation identity."""
    if phi.is_zero():
        raise PreconditionError("psi needs a nonzero function")
    t = _const(S, S.t)
    n = S.n
    psi = phi ** n / (t + phi ** (2 * n))
    identity = (phi ** n * (1 - phi ** n * psi) == t * psi)
    return psi, identity


def verify_psi(phi, S, samples):
    """Valuation case table: v(psi(a)) = 0 where v(phi(a)) = 0, and
    v(psi(a)) = n*v(phi(a)) - v(t) > 0 where v(phi(a)) > 0."""
    psi, identity = build_psi(phi, S)
    report = {"identity": identity, "checked": 0, "violations": []}
    for a in samples:
        pv = phi.evaluate(a)
        sv = psi.evaluate(a)
        if pv is POLE or sv is POLE:
            continue
        for V in S.components:
            zero = V.group.zero()
            vphi = V.valuation(pv)
            vpsi = V.valuation(sv)
            if vphi == zero:
                ok = vpsi == zero
            elif vphi is not INFINITY and vphi > zero:
                expect = vphi.scale(S.n) - V.valuation(S.t)
                ok = vpsi == expect and vpsi > zero
            else:
                continue
            if not ok:
                report["violations"].append({"a": str(a), "prime": V.p})
        report["checked"] += 1
    report["ok"] = identity and not report["violations"]
    return report


def build_rho(phi1, phi2, S):
    """rho = phi1 + theta(phi1/phi2) * phi2."""
    if phi2.is_zero():
        raise PreconditionError("rho needs phi2 nonzero")
    theta = build_theta(S)
    ratio = phi1 / phi2
    composed = theta.compose(ratio)  # StructuralError on a constant pole
    return phi1 + composed * phi2


def verify_rho(phi1, phi2, S, samples):
    """v(rho(a)) = min(v(phi1(a)), v(phi2(a))), exactly, at every sample."""
    rho = build_rho(phi1, phi2, S)
    report = {"checked": 0, "skipped": 0, "violations": []}
    for a in samples:
        v1 = phi1.evaluate(a)
        v2 = phi2.evaluate(a)
        vr = rho.evaluate(a)
        if v1 is POLE or v2 is POLE or vr is POLE:
            report["skipped"] += 1
            continue
        for V in S.components:
            expect = min(V.valuation(v1), V.valuation(v2))
            if V.valuation(vr) != expect:
                report["violations"].append({"a": str(a), "prime": V.p})
        report["checked"] += 1
    report["ok"] = not report["violations"]
    return report


def build_separator(phi, S):
    """phi / (phi + theta(phi)): keeps the ideal side, inverts the unit side."""
    if phi.is_zero():
        raise PreconditionError("the separator needs a nonzero function")
    theta = build_theta(S)
    composed = theta.compose(phi)
    return phi / (phi + composed)


def verify_separator(phi, S, samples):
    """v(psi(a)) > 0 exactly when v(phi(a)) > 0, and psi(a) lands in the
    intersection domain, at every sample."""
    psi = build_separator(phi, S)
    D = S.domain()
    report = {"checked": 0, "skipped": 0, "violations": []}
    for a in samples:
        pv = phi.evaluate(a)
        sv = psi.evaluate(a)
        if pv is POLE or sv is POLE:
            report["skipped"] += 1
            continue
        if not D.member(sv):
            report["violations"].append({"a": str(a), "case": "not in D"})
        for V in S.components:
            zero = V.group.zero()
            vphi = V.valuation(pv)
            vpsi = V.valuation(sv)
            pos_phi = vphi is INFINITY or vphi > zero
            pos_psi = vpsi is INFINITY or vpsi > zero
            if pos_phi != pos_psi:
                report["violations"].append({"a": str(a), "prime": V.p})
        report["checked"] += 1
    report["ok"] = not report["violations"]
    return report


# ---------------------------------------------------------------------------
# not-local witnesses
# ---------------------------------------------------------------------------

def notlocal_witness(D, depth=3, split_samples=None):
    """The two-family witness for a pullback domain, with verification.

    Finite residue field L of order q: w = 1/(x^q - x + 1), which maps L to
    {1}.  Purely inseparable residue extension of exponent e with generator
    c outside the subfield: w = 1/(x^(p^(2e)) - c_lift^(p^e)).  In both cases
    w is certified integer-valued on the whole field, and w lies in the
    pointed ideal at a exactly when v(a) < 0, giving the two families of
    maximal ideals.
    """
    V = D.field
    L = V.residue_field
    record = {}

    if getattr(L, "is_finite", False):
        q = L.order
        den = {0: V.one(), 1: V.from_int(-1), q: V.one()}
        w = RationalFunction(Polynomial.constant(V, V.one()),
                             Polynomial.from_dict(V, den))
        record["case"] = f"finite residue field of order {q}"
        record["maps_to_one"] = all(
            d ** q - d + 1 == L.one() for d in L.elements())
    else:
        e = D.subfield.purely_inseparable_exponent()
        if not e:
            raise UnsupportedCaseError(
                "the residue field is infinite and the residue extension is "
                "not purely inseparable of finite exponent; the ring of "
                "integer-valued rational functions on the field is local and "
                "no two-family witness exists")
        p = L.char
        c = D.subfield.generator_outside()
        pe = p ** e
        den = {0: -V.lift(c ** pe), p ** (2 * e): V.one()}
        w = RationalFunction(Polynomial.constant(V, V.one()),
                             Polynomial.from_dict(V, den))
        record["case"] = f"purely inseparable of exponent {e}"
        denom_residue = Polynomial.from_dict(L, {0: -(c ** pe), p ** (2 * e): L.one()})
        roots, complete = residue_roots(denom_residue, L)
        record["denominator_rootless"] = complete and not roots

    dom = DomainSpec.pvd(D, WHOLE_FIELD)
    verdict = intr_member(w, dom, depth=depth)
    record["membership"] = verdict.to_json()
    record["certified"] = verdict.kind == "in"

    if split_samples is not None:
        zero = V.group.zero()
        bad = []
        for a in split_samples:
            if a == V.zero():
                continue
            pointed = ideal_member(w, Pointed(a), dom)
            expect = V.valuation(a) < zero
            if pointed != expect:
                bad.append(str(a))
        record["split_checked"] = True
        record["split_violations"] = bad
    record["ok"] = record["certified"] and not record.get("split_violations")
    return w, record


# ---------------------------------------------------------------------------
# exhaustive rational maps between small fields
# ---------------------------------------------------------------------------

class FieldMapReport:
    """Outcome of an exhaustive scan for rational maps L -> M."""

    def __init__(self, L, M, degree_bound, exception_bound):
        self.L = L
        self.M = M
        self.degree_bound = degree_bound
        self.exception_bound = exception_bound
        self.maps = []
        self.scanned = 0

    def functions(self):
        return [entry["function"] for entry in self.maps]

    def find(self, phi):
        for entry in self.maps:
            if entry["function"] == phi:
                return entry
        return None

    def to_json(self):
        return {
            "source": self.L.describe(),
            "target": self.M.describe(),
            "degree_bound": self.degree_bound,
            "exception_bound": self.exception_bound,
            "scanned": self.scanned,
            "maps": [{
                "function": str(e["function"]),
                "exceptions": [str(x) for x in e["exceptions"]],
                "constant_map": e["constant_map"],
                "values": {str(k): str(v) for k, v in e["values"].items()},
            } for e in self.maps],
        }


_SCAN_PAIR_BUDGET = 2_000_000


def field_map_scan(L, M, degree_bound, exception_bound=0):
    """All rational functions over L (canonical forms, degrees <= bound)
    mapping all but at most ``exception_bound`` elements of L into M.

    M is a SubfieldSpec on L.  Poles count as exceptions.  Exhaustive within
    the stated bounds; resource-guarded beyond them.
    """
    if not getattr(L, "is_finite", False):
        raise PreconditionError("the scan needs a finite source field")
    if L.order > 64:
        raise ResourceError("source field order beyond 64")
    if degree_bound > 4:
        raise ResourceError("degree bound beyond 4")
    q = L.order
    num_count = q ** (degree_bound + 1)
    den_count = sum(q ** d for d in range(degree_bound + 1))
    if num_count * den_count > _SCAN_PAIR_BUDGET:
        raise ResourceError("scan budget exceeded")

    report = FieldMapReport(L, M, degree_bound, exception_bound)
    elements = list(L.elements())
    for den in _all_polys(L, degree_bound, monic=True):
        for num in _all_polys(L, degree_bound, monic=False):
            if num.is_zero():
                if den.degree > 0:
                    continue  # the canonical zero is 0/1
            elif Polynomial.gcd(num, den).degree > 0:
                continue
            phi = RationalFunction(num, den, _canonical=True)
            report.scanned += 1
            values = {}
            exceptions = []
            for d in elements:
                v = phi.evaluate(d)
                values[d] = v
                if v is POLE or not M.contains(v):
                    exceptions.append(d)
            if len(exceptions) <= exception_bound:
                good = [v for v in values.values() if v is not POLE]
                constant_map = len(set(good)) <= 1
                report.maps.append({
                    "function": phi,
                    "values": values,
                    "exceptions": exceptions,
                    "constant_map": constant_map,
                })
    return report


def _all_polys(L, max_degree, monic):
    import itertools
    els = list(L.elements())
    nonzero = [c for c in els if c != L.zero()]
    if not monic:
        yield Polynomial.zero(L)
    for d in range(max_degree + 1):
        leads = [L.one()] if monic else nonzero
        for lead in leads:
            for tail in itertools.product(els, repeat=d):
                yield Polynomial(L, list(tail) + [lead])
