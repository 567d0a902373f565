"""z-Schubert polynomials: recursion anchors, LC_z, appendix identities."""

import pytest

from tasep_schubert import combinat as cb
from tasep_schubert import schubert as sch
from tasep_schubert import zschubert as zs
from tasep_schubert.polyring import (
    Polynomial, leading_coeff_z, substitute, xvar, yvar, zvar,
)

x1, x2 = map(Polynomial.variable, [xvar(1), xvar(2)])
y1, y2 = map(Polynomial.variable, [yvar(1), yvar(2)])
z1, z2 = map(Polynomial.variable, [zvar(1), zvar(2)])


class TestRecursion:
    def test_empty(self):
        assert zs.z_schubert((), 4) == Polynomial.const(1)

    def test_s3_1(self):
        want = (
            z1 * z2 * (x1 + x2 - y1 - y2)
            - (z1 + z2) * (x1 * x2 - y1 * y2)
            + x1 * x2 * (y1 + y2)
            - y1 * y2 * (x1 + x2)
        )
        assert zs.z_schubert((1,), 3) == want

    def test_invalid(self):
        with pytest.raises(cb.NotValid):
            zs.z_schubert((3, 3), 5)

    def test_lc_52_2_is_14523(self):
        got = leading_coeff_z(zs.z_schubert((2, 2), 5))
        assert cb.code_inverse(cb.g_n((2, 2), 5)) == (1, 4, 5, 2, 3)
        assert got == sch.double_schubert((1, 4, 5, 2, 3))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_z_support_bound(self, n):
        for lam in cb.val_n(n):
            assert zs.z_support_bound(lam, n)

    def test_shift_wraps_mod_n(self):
        p = zs.z_schubert((1,), 3)
        shifted = zs.z_schubert_shifted((1,), 3, -1)
        back = zs.shift_z(shifted, 1, ring=3)
        assert back == p


class TestLcEqualsSchubert:
    def test_lambda1_n3(self):
        got = leading_coeff_z(zs.z_schubert((1,), 3))
        assert got == x1 + x2 - y1 - y2
        assert got == sch.double_schubert((1, 3, 2))

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_all_valid(self, n):
        for lam in cb.val_n(n):
            zs.lc_equals_schubert(lam, n)

    def test_lambda_211_n5(self):
        got = leading_coeff_z(zs.z_schubert((2, 1, 1), 5))
        assert got == sch.double_schubert((1, 3, 5, 4, 2))


class TestSpecialization:
    def test_lambda1_n3_a1(self):
        zs.check_specialization((1,), 3, 1)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_one_part_all_a(self, n):
        for lam in cb.val_n(n):
            if len(lam) == 1:
                for a in range(1, n - lam[0] + 1):
                    zs.check_specialization(lam, n, a)

    def test_multi_part(self):
        zs.check_specialization((2, 1), 5, 2)
        zs.check_specialization((2, 2), 5, 3)


class TestAppendixIdentities:
    def test_first_part_increment_2_4(self):
        zs.check_first_part_increment((2,), 4)

    def test_multiplicity_increment_22_5(self):
        zs.check_multiplicity_increment((2, 2), 5, )

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_first_part_all(self, n):
        for lam in cb.val_n(n):
            if len(lam) == 1 or lam[0] > lam[1]:
                zs.check_first_part_increment(lam, n)

    @pytest.mark.parametrize("n", [4, 5])
    def test_multiplicity_all(self, n):
        for lam in cb.val_n(n):
            if cb.mul_largest(lam) > 1:
                zs.check_multiplicity_increment(lam, n)

    def test_subset_sum_22_5(self):
        zs.check_subset_sum((2, 2), 5, k=2, trials=20)

    def test_subset_sum_small(self):
        zs.check_subset_sum((1,), 3, k=1, trials=5)
        zs.check_subset_sum((2, 1), 4, k=1, trials=5)


class TestSymmetryAndFlags:
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_x_symmetry(self, n):
        for lam in cb.val_n(n):
            zs.check_x_symmetry(lam, n)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_flagged_schur_at_y0(self, n):
        for lam in cb.val_n(n):
            p = leading_coeff_z(zs.z_schubert(lam, n))
            at0 = substitute(
                p, {v: 0 for v in p.variables() if v[0] == yvar(1)[0]})
            assert at0 == sch.flagged_schur(lam, sch.schur_flags(lam, n))
