"""Permutation/partition combinatorics: codes, patterns, Psi, g_n, counts."""

from itertools import permutations

import pytest

from tasep_schubert import combinat as C


class TestCode:
    def test_example(self):
        w = (1, 3, 5, 4, 2)
        assert C.code(w) == (0, 1, 2, 1, 0)
        assert C.shape(w) == (2, 1, 1)

    def test_identity(self):
        assert C.code(C.identity(6)) == (0,) * 6

    def test_round_trip(self):
        for w in permutations(range(1, 6)):
            assert C.code_inverse(C.code(w)) == w

    def test_invalid_code(self):
        with pytest.raises(C.InvalidCode):
            C.code_inverse((5, 0, 0, 0, 0))

    def test_code_inverse_psi_example(self):
        u = C.code_inverse((0, 3, 1, 1, 0))
        w = C.inverse(u)
        assert C.psi(w) == ((3,), (1, 1))


class TestPatterns:
    def test_s3_all_evil_avoiding(self):
        assert all(C.is_evil_avoiding(w) for w in permutations((1, 2, 3)))

    def test_pattern_itself(self):
        assert not C.is_evil_avoiding((2, 4, 1, 3))

    def test_s6_count(self):
        assert C.evil_avoiding_count_exhaustive(6) == 232

    def test_vexillary(self):
        assert C.is_vexillary(C.identity(4))
        assert not C.is_vexillary((2, 1, 4, 3))


class TestEvilViaCode:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_agrees_with_direct_scan(self, n):
        for w in permutations(range(1, n + 1)):
            assert C.evil_avoiding_via_code(w) == C.is_evil_avoiding(C.inverse(w))

    def test_identity(self):
        assert C.evil_avoiding_via_code(C.identity(5))

    def test_code_03110(self):
        w = C.code_inverse((0, 3, 1, 1, 0))
        assert C.evil_avoiding_via_code(w)


class TestStates:
    def test_st5_counts(self):
        assert [len(C.special_states(5, k)) for k in range(4)] == [1, 11, 7, 1]

    def test_identity_recoils(self):
        assert C.recoils(C.identity(7)) == 0

    def test_st41_and_t41(self):
        assert len(C.special_states(4, 1)) == 4
        assert C.t_nk(4, 0) == 1 and C.t_nk(4, 1) == 4 and C.t_nk(4, 2) == 1


class TestPsi:
    def test_table3_rows(self):
        assert C.psi((1, 5, 4, 3, 2)) == ((3,), (2, 2), (1, 1, 1))
        assert C.psi((1, 2, 3, 5, 4)) == ((1, 1, 1),)
        assert C.psi((1, 2, 5, 4, 3)) == ((2, 2), (1, 1, 1))

    @pytest.mark.parametrize("n", range(3, 8))
    def test_round_trip(self, n):
        for w in C.special_states(n):
            seq = C.psi(w)
            k = C.recoils(w)
            assert len(seq) == k
            assert C.parseq_valid(seq, n)
            assert C.psi_inverse(seq, n) == w

    def test_not_special(self):
        with pytest.raises(C.NotSpecialState):
            C.psi((2, 1, 3))


class TestGn:
    def test_examples(self):
        assert C.g_n((2, 1, 1), 5) == (0, 1, 2, 1, 0)
        assert C.g_n((3, 2, 2, 1), 6) == (0, 2, 3, 2, 1, 0)
        assert C.g_n((3, 1, 1), 6) == (0, 0, 3, 1, 1, 0)

    def test_sorted_recovers_partition(self):
        for n in range(3, 9):
            for lam in C.val_n(n):
                v = C.g_n(lam, n)
                assert v[0] == 0 and v[-1] == 0
                assert tuple(sorted((a for a in v if a), reverse=True)) == lam

    def test_invalid(self):
        with pytest.raises(C.NotValid):
            C.g_n((1, 1, 1, 1), 5)  # more than n-2 parts


class TestValN:
    @pytest.mark.parametrize("n", range(3, 10))
    def test_cardinality(self, n):
        assert len(C.val_n(n)) == 2 ** (n - 1) - (n - 1) - 1

    def test_val3(self):
        assert C.val_n(3) == [(1,)]

    def test_val13_member(self):
        assert C.is_valid_for((6, 6, 4, 4, 2, 2), 13)


class TestParSeq:
    def test_members(self):
        assert C.parseq_valid(((3,), (2, 2, 2, 1)), 6)
        assert C.parseq_valid(((4, 2), (1, 1, 1, 1)), 6)
        assert not C.parseq_valid(((3,), (2, 2, 1, 1)), 6)
        assert not C.parseq_valid(((4, 2), (1, 1, 1)), 6)

    def test_parseq52(self):
        seqs = C.parseq_enumerate(5, 2)
        assert len(seqs) == 7
        assert ((3,), (1, 1)) in seqs
        assert ((2,), (1, 1, 1)) in seqs

    def test_k0(self):
        assert C.parseq_enumerate(7, 0) == [()]

    @pytest.mark.parametrize("n", range(3, 9))
    def test_counts_match(self, n):
        for k in range(0, n - 1):
            st = C.special_states(n, k)
            ps = C.parseq_enumerate(n, k)
            assert len(st) == len(ps) == C.t_nk(n, k)


class TestEnumeration:
    def test_small_values(self):
        assert [C.e_n(n) for n in range(1, 7)] == [1, 2, 6, 20, 68, 232]

    def test_recurrence_arithmetic(self):
        assert C.e_n(6) == 4 * 68 - 2 * 20

    @pytest.mark.parametrize("n", range(1, 8))
    def test_exhaustive_matches_recurrence(self, n):
        assert C.evil_avoiding_count_exhaustive(n) == C.e_n(n)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_stnk_total_counts_smaller_ring(self, n):
        # states starting with 1 biject with evil-avoiding permutations one
        # size down: sum_k |St(n,k)| = e(n-1)
        assert sum(C.t_nk(n, k) for k in range(0, n - 1)) == C.e_n(n - 1)
        assert len(C.special_states(n)) == C.e_n(n - 1)


class TestAlpha:
    def test_example(self):
        w = C.s_construct((1, 1, 2, 3))
        assert w == (1, 6, 3, 5, 2, 4)
        assert C.alpha(w) == (1, 1, 1, 0)

    def test_identity(self):
        n = 6
        assert C.alpha(C.identity(n)) == tuple(n - 1 - i for i in range(1, n - 1))

    def test_cyclic_invariance(self):
        w = (1, 6, 3, 5, 2, 4)
        for a in range(6):
            assert C.alpha(C.cyclic_shift(w, a)) == C.alpha(w)

    def test_s_zero_is_identity(self):
        assert C.s_construct((0, 0, 0)) == C.identity(5)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_images_cover_cyclic_classes(self, n):
        from itertools import product
        reps = set()
        for b in product(*[range(0, i + 1) for i in range(1, n - 1)]):
            w = C.s_construct(b)
            assert C.alpha(w) == tuple(
                n - 1 - i - b[n - 2 - i] for i in range(1, n - 1)
            )
            reps.add(C.cyclic_standard(w))
        import math
        assert len(reps) == math.factorial(n - 1)

    @pytest.mark.parametrize("n", range(3, 7))
    def test_alpha_separates_cyclic_classes(self, n):
        seen = {}
        for w in permutations(range(1, n + 1)):
            a = C.alpha(w)
            rep = C.cyclic_standard(w)
            if a in seen:
                assert seen[a] == rep
            seen[a] = rep


class TestShiftingVector:
    def test_table3(self):
        assert C.shifting_vector(C.psi((1, 5, 4, 3, 2)), 5) == (0, -1, -2)
        assert C.shifting_vector(C.psi((1, 5, 4, 2, 3)), 5) == (0, -2)

    def test_k1(self):
        for lam in C.val_n(6):
            assert C.shifting_vector((lam,), 6) == (0,)


class TestWofLambda:
    def test_fig5(self):
        assert C.w_of_lambda((6, 6, 4, 4, 2, 2), 13) == (
            1, 2, 8, 9, 3, 4, 10, 11, 5, 6, 12, 13, 7)

    def test_3321(self):
        assert C.w_of_lambda((3, 3, 2, 1), 9) == (1, 2, 7, 3, 8, 4, 9, 5, 6)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_psi_is_lambda(self, n):
        for lam in C.val_n(n):
            w = C.w_of_lambda(lam, n)
            assert C.is_k_grassmannian_state(w, 1)
            assert C.psi(w) == (lam,)


class TestDirectSum:
    def test_example(self):
        assert C.direct_sum((3, 2, 1), (3, 1, 2, 5, 4)) == (3, 2, 1, 6, 4, 5, 8, 7)

    def test_identities(self):
        assert C.direct_sum(C.identity(3), C.identity(2)) == C.identity(5)

    def test_decompose_example(self):
        lam1, w_down = C.decompose_special((1, 2, 5, 4, 3))
        assert lam1 == (2, 2)
        assert w_down == (1, 2, 3, 5, 4)
        assert C.psi(w_down) == ((1, 1, 1),)
