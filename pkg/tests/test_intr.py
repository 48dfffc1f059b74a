import random
from fractions import Fraction

import pytest

from ivrf.errors import PreconditionError
from ivrf.ff import FiniteField, RatFuncField
from ivrf.fields import (ConstantSubfield, HahnFinite, PAdicQ,
                         PrimePowerSubfield, PVDSpec, TAdicRat)
from ivrf.intr import (DomainSpec, MStar, Pointed, ValueIdeal, VIOLATION,
                       WHOLE_FIELD, WHOLE_RING, ZERO, STRICTLY_POSITIVE,
                       characteristic_set, dichotomy_check, domain_from_config,
                       ideal_member, intr_member, residue_roots)
from ivrf.newton import minval_rat
from ivrf.ratfun import POLE, Polynomial, RationalFunction

Q5 = PAdicQ(5)


def qp(*cs):
    return Polynomial(Q5, [Fraction(c) for c in cs])


def hahn_pvd():
    GFU = RatFuncField(FiniteField(2), "u")
    H = HahnFinite(GFU)
    return H, PVDSpec(H, ConstantSubfield(GFU))


class TestMembership:
    def test_inverse_of_x_is_out(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        v = intr_member(RationalFunction(qp(1), qp(0, 1)), D)
        assert v.kind == "out"
        assert v.witness == Fraction(5)
        assert Q5.valuation(Fraction(1) / v.witness) < Q5.group.zero()

    def test_fermat_quotient_in_at_depth_two(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        phi = RationalFunction(qp(0, -1, 0, 0, 0, 1), qp(5))
        v = intr_member(phi, D, depth=3)
        assert v.kind == "in"
        assert v.depth_used == 2
        # exhaustive spot check over random ring elements
        rng = random.Random(0)
        for _ in range(400):
            a = Q5.random_element(rng)
            while Q5.valuation(a) < Q5.group.zero():
                a = Q5.random_element(rng)
            val = phi.evaluate(a)
            assert val == 0 or Q5.valuation(val) >= Q5.group.zero()

    def test_depth_exhaustion_is_honest(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        phi = RationalFunction(qp(0, -1, 0, 0, 0, 1), qp(5))
        v = intr_member(phi, D, depth=1)
        assert v.kind == "unknown"
        assert v.depth_exhausted

    def test_over_refined_quotient_is_out(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        phi = RationalFunction(qp(0, -1, 0, 0, 0, 1), qp(25))
        v = intr_member(phi, D, depth=4)
        assert v.kind == "out"
        ev = phi.evaluate(v.witness)
        assert Q5.valuation(ev) < Q5.group.zero()

    def test_pole_inside_ring(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        phi = RationalFunction(qp(0, 1), qp(-1, 1))
        v = intr_member(phi, D)
        assert v.kind == "out"
        assert phi.evaluate(v.witness) is POLE

    def test_theta_over_intersection(self):
        Q2 = PAdicQ(2)
        P = lambda *cs: Polynomial(Q2, [Fraction(c) for c in cs])
        theta = RationalFunction(P(6, 0, 0, 0, 6), P(6, 0, 37, 0, 6))
        D = DomainSpec.intersection([PAdicQ(2), PAdicQ(3)], WHOLE_FIELD)
        v = intr_member(theta, D)
        assert v.kind == "in"
        # cross-check by exhaustive sampling on reduced fractions
        for r in range(-25, 26):
            for s in range(1, 12):
                a = Fraction(r, s)
                val = theta.evaluate(a)
                assert val is not POLE
                assert D.member(val)

    def test_finite_point_set(self):
        D = DomainSpec("valuation", [(Q5, None)], [Fraction(1), Fraction(5)])
        phi = RationalFunction(qp(1), qp(0, 1))  # 1/x
        v = intr_member(phi, D)
        assert v.kind == "out" and v.witness == Fraction(5)
        D2 = DomainSpec("valuation", [(Q5, None)], [Fraction(1), Fraction(2)])
        assert intr_member(phi, D2).kind == "in"

    def test_zero_function_trivially_in(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        assert intr_member(RationalFunction.zero(Q5), D).kind == "in"

    def test_certified_in_soundness_sampled(self):
        H, D = hahn_pvd()
        dom = DomainSpec.pvd(D, WHOLE_FIELD)
        P = lambda *cs: Polynomial(H, list(cs))
        u = H.lift(H.kappa.gen())
        members = [
            RationalFunction(P(u + H.gen(), H.one(), H.one()),
                             P(u, H.one(), H.one())),
            RationalFunction(P(H.monomial(Fraction(1, 2))), P(u, H.one(), H.one())),
            RationalFunction.one(H) + RationalFunction(P(H.gen()), P(u, H.one(), H.one())),
        ]
        rng = random.Random(1)
        for phi in members:
            assert intr_member(phi, dom, depth=3).kind == "in"
            for _ in range(350):
                a = H.random_element(rng)
                val = phi.evaluate(a)
                assert val is not POLE and D.member(val)

    def test_certified_out_witness_reverifies(self):
        H, D = hahn_pvd()
        dom = DomainSpec.pvd(D, WHOLE_FIELD)
        P = lambda *cs: Polynomial(H, list(cs))
        u = H.lift(H.kappa.gen())
        # residue of the constant is u, outside GF(2)
        phi = RationalFunction(P(u))
        v = intr_member(phi, dom)
        assert v.kind == "out"
        assert not D.member(phi.evaluate(v.witness))


class TestIdeals:
    def test_pointed_examples(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_FIELD)
        x = RationalFunction(qp(0, 1))
        assert ideal_member(x, Pointed(Fraction(5)), D)
        assert not ideal_member(x, Pointed(Fraction(1)), D)

    def test_pointed_pole_precondition(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_FIELD)
        phi = RationalFunction(qp(1), qp(0, 1))
        with pytest.raises(PreconditionError):
            ideal_member(phi, Pointed(Fraction(0)), D)

    def test_pointed_anchor_must_be_in_E(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        x = RationalFunction(qp(0, 1))
        with pytest.raises(PreconditionError):
            ideal_member(x, Pointed(Fraction(1, 5)), D)

    def test_mstar_examples(self):
        H, D = hahn_pvd()
        dom = DomainSpec.pvd(D, WHOLE_FIELD)
        x = RationalFunction.gen(H)
        assert not ideal_member(x, MStar(), dom)
        t_const = RationalFunction.constant(H, H.gen())
        assert ideal_member(t_const, MStar(), dom)

    def test_mstar_theta_over_v2(self):
        Q2 = PAdicQ(2)
        P = lambda *cs: Polynomial(Q2, [Fraction(c) for c in cs])
        theta = RationalFunction(P(6, 0, 0, 0, 6), P(6, 0, 37, 0, 6))
        D = DomainSpec.valuation_ring(Q2, WHOLE_FIELD)
        assert ideal_member(theta, MStar(), D)

    def test_mstar_rejected_for_intersections(self):
        D = DomainSpec.intersection([PAdicQ(2), PAdicQ(3)], WHOLE_FIELD)
        with pytest.raises(PreconditionError):
            ideal_member(RationalFunction.one(PAdicQ(2)), MStar(), D)

    def test_value_ideal(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_RING)
        phi = RationalFunction(qp(25))
        assert ideal_member(phi, ValueIdeal(2), D)
        assert not ideal_member(RationalFunction(qp(5)), ValueIdeal(2), D)
        # (x^5 - x) maps the ring into m but not into m^2 (a=2 gives v=1)
        f = RationalFunction(qp(0, -1, 0, 0, 0, 1))
        assert ideal_member(f, ValueIdeal(1), D)
        assert not ideal_member(f, ValueIdeal(2), D)

    def test_characteristic_sets(self):
        D = DomainSpec.valuation_ring(Q5, WHOLE_FIELD)
        x = RationalFunction(qp(0, 1))
        fam = [Pointed(Fraction(5)), Pointed(Fraction(1)), Pointed(Fraction(10))]
        got = characteristic_set(x, fam, D)
        assert [i.a for i in got] == [Fraction(5), Fraction(10)]
        assert len(characteristic_set(RationalFunction.zero(Q5), fam, D)) == 3

    def test_x_in_pointed_family_but_not_mstar(self):
        H, D = hahn_pvd()
        dom = DomainSpec.pvd(D, WHOLE_FIELD)
        x = RationalFunction.gen(H)
        assert minval_rat(x, H).eval(H.group.zero()) == H.group.zero()
        assert not ideal_member(x, MStar(), dom)
        for q in (Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(7, 2)):
            a = H.monomial(q)
            assert ideal_member(x, Pointed(a), dom)

    def test_pointed_containment_for_certified(self):
        # anything certified into the ring lands in the one-point overring
        D = DomainSpec.valuation_ring(PAdicQ(5), WHOLE_RING)
        phi = RationalFunction(qp(0, -1, 0, 0, 0, 1), qp(5))
        assert intr_member(phi, D).kind == "in"
        for a in (Fraction(0), Fraction(1), Fraction(5), Fraction(7, 3)):
            assert Q5.valuation(phi.evaluate(a)) >= Q5.group.zero() \
                or phi.evaluate(a) == 0


class TestDichotomy:
    def test_constant_t(self):
        H, D = hahn_pvd()
        phi = RationalFunction.constant(H, H.gen())
        assert dichotomy_check(phi, D) == STRICTLY_POSITIVE

    def test_unit_plus_small(self):
        H, D = hahn_pvd()
        P = lambda *cs: Polynomial(H, list(cs))
        u = H.lift(H.kappa.gen())
        phi = RationalFunction(P(u + H.gen(), H.one(), H.one()),
                               P(u, H.one(), H.one()))
        assert dichotomy_check(phi, D) == ZERO
        assert intr_member(phi, DomainSpec.pvd(D, WHOLE_FIELD)).kind == "in"

    def test_violation(self):
        H, D = hahn_pvd()
        P = lambda *cs: Polynomial(H, list(cs))
        phi = RationalFunction(P(H.zero(), H.zero(), H.one()),
                               P(H.gen(), H.zero(), H.one()))
        assert dichotomy_check(phi, D) == VIOLATION
        assert intr_member(phi, DomainSpec.pvd(D, WHOLE_FIELD)).kind == "out"

    def test_needs_divisible_group(self):
        F4 = FiniteField(2, 2)
        D = PVDSpec(TAdicRat(F4), PrimePowerSubfield(F4, 1))
        with pytest.raises(PreconditionError):
            dichotomy_check(RationalFunction.one(D.field), D)


class TestResidueRoots:
    def test_finite_field_exhaustive(self):
        F4 = FiniteField(2, 2)
        p = Polynomial(F4, [F4.one(), F4.one(), F4.one()])  # x^2+x+1
        roots, complete = residue_roots(p, F4)
        assert complete
        assert roots == {F4.gen(), F4.gen() + 1}

    def test_ratfunc_rational_root_bound(self):
        L = RatFuncField(FiniteField(2), "u")
        u = L.gen()
        # (x - u)(x - 1/u) = x^2 - (u + 1/u)x + 1
        p = Polynomial(L, [L.one(), u + 1 / u, L.one()])
        roots, complete = residue_roots(p, L)
        assert complete
        assert roots == {u, 1 / u}

    def test_rootless_quartic(self):
        L = RatFuncField(FiniteField(2), "u")
        p = Polynomial(L, [L.gen() ** 2, L.zero(), L.zero(), L.zero(), L.one()])
        roots, complete = residue_roots(p, L)
        assert complete and not roots

    def test_cap_degrades(self):
        L = RatFuncField(FiniteField(2), "u")
        big = L.gen() ** 9
        p = Polynomial(L, [big, L.one()])
        roots, complete = residue_roots(p, L, cap=4)
        assert not complete

    def test_m_star_strictness_within_pullback(self):
        # membership in every pointed ideal does not force the envelope prime
        H, D = hahn_pvd()
        dom = DomainSpec.pvd(D, WHOLE_FIELD)
        x = RationalFunction.gen(H)
        in_pointed = all(ideal_member(x, Pointed(H.monomial(Fraction(k, 2))), dom)
                         for k in range(1, 6))
        assert in_pointed and not ideal_member(x, MStar(), dom)


class TestRestrictedResidues:
    """Over E = D for a pullback domain, the unit shell at value 0 only
    carries residues from the subfield."""

    def setup_method(self):
        F4 = FiniteField(2, 2)
        self.V = TAdicRat(F4)
        self.D = PVDSpec(self.V, PrimePowerSubfield(F4, 1))
        self.u = self.V.lift(F4.gen())

    def test_identity_in_over_ring_but_not_field(self):
        x = RationalFunction.gen(self.V)
        ring = DomainSpec.pvd(self.D, WHOLE_RING)
        field = DomainSpec.pvd(self.D, WHOLE_FIELD)
        assert intr_member(x, ring).kind == "in"
        out = intr_member(x, field)
        assert out.kind == "out"
        assert not self.D.member(x.evaluate(out.witness))

    def test_unit_twist_is_out_even_over_ring(self):
        phi = RationalFunction.constant(self.V, self.u) * RationalFunction.gen(self.V)
        ring = DomainSpec.pvd(self.D, WHOLE_RING)
        out = intr_member(phi, ring)
        assert out.kind == "out"
        w = out.witness
        assert ring.contains_point(w)
        assert not self.D.member(phi.evaluate(w))


class TestRankTwo:
    def setup_method(self):
        from ivrf.fields import LexRank2
        self.V = LexRank2(FiniteField(2))
        self.t1 = self.V.gen1()
        self.t2 = self.V.gen2()

    def test_member_out_with_witness(self):
        # (t1 + x^2)/t1 takes value (t1+1)/t1 at a = 1, below the ring
        P = lambda *cs: Polynomial(self.V, list(cs))
        phi = RationalFunction(P(self.t1, self.V.zero(), self.V.one()),
                               P(self.t1))
        D = DomainSpec.valuation_ring(self.V, WHOLE_RING)
        v = intr_member(phi, D)
        assert v.kind == "out"
        ev = phi.evaluate(v.witness)
        assert self.V.valuation(ev) < self.V.group.zero()

    def test_member_in(self):
        P = lambda *cs: Polynomial(self.V, list(cs))
        phi = RationalFunction(P(self.V.zero(), self.t2))  # t2 * x
        D = DomainSpec.valuation_ring(self.V, WHOLE_RING)
        assert intr_member(phi, D).kind == "in"

    def test_fractional_breakpoint_skipped(self):
        # the envelope of t1 + x^2 breaks at (1/2, 0), outside the lattice
        from ivrf.newton import minval_poly
        P = lambda *cs: Polynomial(self.V, list(cs))
        pl = minval_poly(P(self.t1, self.V.zero(), self.V.one()), self.V)
        bp = pl.breakpoints()[0]
        assert not bp.in_lattice()


class TestDomainConfig:
    def test_valuation_config(self):
        D = domain_from_config({"field": {"variant": "padic", "p": 5}, "E": "ring"})
        assert D.kind == "valuation"
        assert D.member(Fraction(5)) and not D.member(Fraction(1, 5))

    def test_intersection_config(self):
        D = domain_from_config({"components": [{"variant": "padic", "p": 2},
                                               {"variant": "padic", "p": 3}],
                                "E": "field"})
        assert D.kind == "intersection"
        assert D.member(Fraction(1, 5)) and not D.member(Fraction(1, 2))

    def test_pvd_config_with_point_list(self):
        D = domain_from_config({
            "field": {"variant": "tadic", "residue": {"kind": "gf", "q": 4}},
            "subfield": {"kind": "subgf", "order": 2},
            "E": ["t", "1 + t"]})
        assert len(D.E) == 2
