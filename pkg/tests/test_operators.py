"""Operator actions, identity solving, recurrences, decompositions,
compatibility families, on the catalog metrics."""
import pytest

from curvkit import TensorError
from curvkit.expr import Atom, Expression
from curvkit.operators import (
    dot_action, tachibana, check_identity, two_form_recurrence,
    one_form_recurrence, recurrent_tensor, ricci_decompose, pure_radiation,
    compatibility_check, compatible_space, weakly_ricci_symmetric,
)
from curvkit.parsing import parse_identity
from curvkit.tensor import Tensor, D_SYM2, D_ANTI2

import vaidya_reference as ref
from conftest import expect_components, expr


def check(bundle, text):
    return check_identity(parse_identity(text, bundle.chart), bundle)


def param(name):
    return Expression.from_atom(Atom.constant(name))


class TestOperatorTables:
    @pytest.mark.parametrize("left,right,table", [
        ("R", "R", ref.RR), ("R", "C", ref.RC),
        ("C", "R", ref.CR), ("C", "C", ref.CC),
    ])
    def test_dot_actions(self, vaidya, left, right, table):
        out = dot_action(vaidya.tensor(left), vaidya.tensor(right),
                         vaidya.metric)
        expect_components(vaidya, out, table)

    @pytest.mark.parametrize("base,operand,table", [
        ("g", "R", ref.Q_G_R), ("S", "R", ref.Q_S_R),
        ("g", "C", ref.Q_G_C), ("S", "C", ref.Q_S_C),
    ])
    def test_endomorphism_actions(self, vaidya, base, operand, table):
        out = tachibana(vaidya.tensor(base), vaidya.tensor(operand))
        expect_components(vaidya, out, table)

    def test_dot_annihilates_metric(self, vaidya):
        out = dot_action(vaidya.riemann, vaidya.g_tensor, vaidya.metric)
        assert out.is_zero

    def test_q_of_metric_with_metric_vanishes(self, vaidya):
        assert tachibana(vaidya.g_tensor, vaidya.g_tensor).is_zero

    def test_results_antisymmetric_in_trailing_pair(self, vaidya):
        out = dot_action(vaidya.riemann, vaidya.ricci, vaidya.metric)
        assert ("anti", 2, 3) in out.descriptor.ops
        assert out.get((0, 0, 0, 1)) == -out.get((0, 0, 1, 0))

    def test_dot_rejects_wrong_valence(self, vaidya):
        with pytest.raises(TensorError, match="valence 4"):
            dot_action(vaidya.ricci, vaidya.riemann, vaidya.metric)

    def test_q_rejects_asymmetric_base(self, vaidya):
        anti = Tensor.from_reps(vaidya.chart, 2, D_ANTI2,
                                {(0, 1): expr("1", vaidya)})
        with pytest.raises(TensorError, match="symmetric"):
            tachibana(anti, vaidya.riemann)


class TestIdentitySolver:
    def test_riemann_semisymmetry_fails_with_ratio(self, vaidya):
        res = check(vaidya, "R.R = L*Q(g,R)")
        assert not res.holds
        w = res.witness
        assert w.kind == "ratio" and w.unknown == "L"
        assert w.anchor_value == expr("-2*m(u)/r^3", vaidya)
        assert w.value == expr("m(u)/r^3", vaidya)

    def test_weyl_form_holds_uniquely(self, vaidya):
        res = check(vaidya, "C.C = L*Q(g,C)")
        assert res.holds and res.free == ()
        assert res.solved["L"] == expr("m(u)/r^3", vaidya)

    def test_mixed_combination_holds(self, vaidya):
        res = check(vaidya, "R.R - Q(S,R) = L*Q(g,C)")
        assert res.holds
        assert res.solved["L"] == expr("m(u)/r^3", vaidya)

    def test_concrete_coefficient_identity(self, vaidya):
        res = check(vaidya, "R.C + C.R = (2*m(u)/r^3)*Q(g,C) + Q(S,C)")
        assert res.holds and res.solved == {}

    def test_wrong_operator_base_fails(self, vaidya):
        assert not check(vaidya, "R.R = L*Q(S,R)").holds

    def test_vanishing_identity_fails_with_component(self, vaidya):
        res = check(vaidya, "R.R = 0")
        assert not res.holds
        assert res.witness.kind == "component"
        assert res.witness.value == expr("-2*m(u)*m'(u)/r^3", vaidya)

    def test_flat_space_leaves_unknown_free(self, minkowski):
        res = check(minkowski, "R.R = L*Q(g,R)")
        assert res.holds and res.free == ("L",)
        assert res.solved["L"].is_zero

    def test_static_limit_is_semisymmetric_like(self, schwarzschild):
        res = check(schwarzschild, "R.R = L*Q(g,R)")
        assert res.holds and res.free == ()
        assert res.solved["L"] == expr("m/r^3", schwarzschild)

    def test_null_collapse_identities(self, ludwig_edgar):
        assert check(ludwig_edgar, "R.R = 0").holds
        assert check(ludwig_edgar, "R.C = 0").holds


class TestRecurrences:
    def test_riemann_two_form_needs_nonzero_covector(self, vaidya):
        res = two_form_recurrence(vaidya, "R")
        assert not res.holds
        assert res.free == ()
        assert all(v.is_zero for v in res.covector)

    def test_weyl_two_forms_recurrent(self, vaidya):
        res = two_form_recurrence(vaidya, "C")
        assert res.holds and res.free == ()
        assert res.covector[0] == expr("m'(u)/m(u)", vaidya)
        assert all(v.is_zero for v in res.covector[1:])

    def test_ricci_one_forms_not_recurrent(self, vaidya):
        res = one_form_recurrence(vaidya, "S")
        assert not res.holds
        assert res.witness_residual is not None

    def test_weyl_not_plain_recurrent(self, vaidya):
        assert not recurrent_tensor(vaidya, "C").holds

    def test_null_collapse_riemann_two_forms(self, ludwig_edgar):
        res = two_form_recurrence(ludwig_edgar, "R")
        assert res.holds and res.free == ("P1",)
        assert all(v.is_zero for v in res.covector)

    def test_null_collapse_weyl_two_forms(self, ludwig_edgar):
        res = two_form_recurrence(ludwig_edgar, "C")
        assert res.holds and res.free == ("P1",)

    def test_null_collapse_ricci_one_forms(self, ludwig_edgar):
        res = one_form_recurrence(ludwig_edgar, "S")
        assert res.holds and res.free == ("P1",)
        assert res.covector[0].is_zero and res.covector[1].is_zero
        assert res.covector[2] == expr(
            "(diff(w(u,x,y),x,1,y,2) + diff(w(u,x,y),x,3))"
            "/(diff(w(u,x,y),y,2) + diff(w(u,x,y),x,2))", ludwig_edgar)
        assert res.covector[3] == expr(
            "(diff(w(u,x,y),y,3) + diff(w(u,x,y),x,2,y,1))"
            "/(diff(w(u,x,y),y,2) + diff(w(u,x,y),x,2))", ludwig_edgar)


class TestRicciShape:
    def test_radiating_metric_is_ricci_simple(self, vaidya):
        dec = ricci_decompose(vaidya)
        assert dec.kind == "ricci-simple"
        assert dec.alpha.is_zero
        assert dec.beta == expr("2*m'(u)", vaidya)
        assert dec.eta[0] == expr("1/r", vaidya)
        assert all(v.is_zero for v in dec.eta[1:])
        assert dec.eta_norm2.is_zero
        assert dec.rank == 1 and dec.nullity == 3

    def test_sphere_is_einstein(self, sphere2):
        dec = ricci_decompose(sphere2)
        assert dec.kind == "einstein"
        assert dec.alpha == expr("-1/a^2", sphere2)
        assert dec.rank == 0 and dec.nullity == 2

    def test_vacuum_is_einstein_with_zero_alpha(self, schwarzschild):
        dec = ricci_decompose(schwarzschild)
        assert dec.kind == "einstein" and dec.alpha.is_zero

    def test_null_collapse_ricci_simple(self, ludwig_edgar):
        dec = ricci_decompose(ludwig_edgar)
        assert dec.kind == "ricci-simple"
        assert dec.beta == expr(
            "-(p^2*x*diff(w(u,x,y),y,2) + p^2*x*diff(w(u,x,y),x,2))/2",
            ludwig_edgar)
        assert dec.eta == (expr("1", ludwig_edgar),) + tuple(
            expr("0", ludwig_edgar) for _ in range(3))
        assert dec.eta_norm2.is_zero

    def test_pure_radiation_form(self, vaidya):
        pr = pure_radiation(vaidya)
        assert pr.holds
        assert pr.beta == expr("c^4*m'(u)/(4*G*pi)", vaidya)
        assert pr.eta[0] == expr("1/r", vaidya)
        assert pr.eta_norm2.is_zero

    def test_vacuum_is_not_pure_radiation(self, schwarzschild):
        pr = pure_radiation(schwarzschild)
        assert not pr.holds and pr.reason == "energy-momentum vanishes"

    def test_null_collapse_pure_radiation(self, ludwig_edgar):
        pr = pure_radiation(ludwig_edgar)
        assert pr.holds
        assert pr.beta == expr(
            "-(c^4*p^2*x*diff(w(u,x,y),y,2) + c^4*p^2*x*diff(w(u,x,y),x,2))"
            "/(16*G*pi)", ludwig_edgar)


class TestCompatibility:
    def test_ricci_is_curvature_compatible(self, vaidya):
        for name in ("R", "C"):
            res = compatibility_check(vaidya.tensor(name), vaidya.ricci,
                                      vaidya.metric)
            assert res.holds, name

    def test_metric_always_compatible(self, vaidya):
        for name in ("R", "P", "C", "K", "W", "G"):
            res = compatibility_check(vaidya.tensor(name),
                                      vaidya.g_tensor, vaidya.metric)
            assert res.holds, name

    def test_incompatible_witness(self, vaidya):
        bad = Tensor.from_reps(vaidya.chart, 2, D_SYM2,
                               {(0, 2): expr("1", vaidya)})
        res = compatibility_check(vaidya.riemann, bad, vaidya.metric)
        assert not res.holds
        assert res.witness_component is not None
        assert not res.witness_value.is_zero

    def test_family_shape(self, vaidya):
        fam = compatible_space(vaidya.riemann, vaidya.metric)
        assert fam.param_count == 6
        assert fam.params == ("a11", "a12", "a22", "a33", "a34", "a44")
        m = fam.matrix
        # angular block decouples from the null block
        for i in (0, 1):
            for j in (2, 3):
                assert m[i][j].is_zero and m[j][i].is_zero
        coupling = param("a12") + expr("r*m'(u)/m(u)", vaidya) * param("a22")
        assert m[1][0] == coupling
        assert m[0][0] == param("a11") and m[0][1] == param("a12")
        assert m[2][3] == param("a34") and m[3][2] == param("a34")

    def test_projective_family_matches_riemann_family(self, vaidya):
        fam_r = compatible_space(vaidya.riemann, vaidya.metric)
        fam_p = compatible_space(vaidya.projective, vaidya.metric)
        assert fam_r.matrix == fam_p.matrix
        assert fam_r.params == fam_p.params

    def test_conformal_families_symmetric(self, vaidya):
        fam_c = compatible_space(vaidya.weyl, vaidya.metric)
        fam_k = compatible_space(vaidya.conharmonic, vaidya.metric)
        assert fam_c.matrix == fam_k.matrix
        assert fam_c.param_count == 6
        m = fam_c.matrix
        assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))

    def test_flat_space_counts(self, minkowski):
        general = compatible_space(minkowski.riemann, minkowski.metric)
        sym = compatible_space(minkowski.riemann, minkowski.metric,
                               symmetric=True)
        assert general.param_count == 16
        assert sym.param_count == 10

    def test_vacuum_family(self, schwarzschild):
        fam = compatible_space(schwarzschild.riemann, schwarzschild.metric)
        assert fam.param_count == 6
        m = fam.matrix
        assert all(m[i][j] == m[j][i] for i in range(4) for j in range(4))
        for i in (0, 1):
            for j in (2, 3):
                assert m[i][j].is_zero


class TestWeakRicciSymmetry:
    def test_radiating_metric_is_not(self, vaidya):
        res = weakly_ricci_symmetric(vaidya)
        assert not res.holds
        assert res.witness_residual is not None

    def test_null_collapse_is(self, ludwig_edgar):
        res = weakly_ricci_symmetric(ludwig_edgar)
        assert res.holds
        assert res.free == ("B1", "D1")
        zero = expr("0", ludwig_edgar)
        inv = expr("-1/x", ludwig_edgar)
        assert res.b == (zero, zero, inv, zero)
        assert res.d == (zero, zero, inv, zero)
        assert res.a[1].is_zero
        assert res.a[0] == expr(
            "-(2*p^2*r*diff(w(u,x,y),y,2) + 2*p^2*r*diff(w(u,x,y),x,2)"
            " - x^2*diff(w(u,x,y),u,1,y,2) - x^2*diff(w(u,x,y),u,1,x,2))"
            "/(x^2*diff(w(u,x,y),y,2) + x^2*diff(w(u,x,y),x,2))", ludwig_edgar)


class TestParallelEnergyMomentum:
    def test_vacuum_holds(self, schwarzschild):
        assert schwarzschild.nabla("T").is_zero

    def test_radiating_fails(self, vaidya):
        expect_components(vaidya, vaidya.nabla("T"),
                          ref.NABLA_ENERGY_MOMENTUM)

    def test_null_collapse_fails(self, ludwig_edgar):
        assert not ludwig_edgar.nabla("T").is_zero
