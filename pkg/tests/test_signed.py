import pytest
from hypothesis import given

from bnbruhat import (
    ParseError,
    ReflectionLabel,
    SignedPermutation,
    UndefinedReflectionError,
    all_reflections,
    apply_u,
    coxeter_length,
    full_sequence,
    generators,
    inverse_position,
    negate,
    parse_window,
    u_defined,
    word_lengths_by_bfs,
)
from conftest import windows


class TestParseWindow:
    def test_bracket_form(self):
        p = parse_window("[2,-1]")
        assert p.window == (2, -1)
        assert p.n == 2

    def test_whitespace_form(self):
        assert parse_window("3 -1 -2").window == (3, -1, -2)

    def test_mixed_separators(self):
        assert parse_window(" [ 1, -3  2 ] ").window == (1, -3, 2)

    def test_duplicate_magnitude(self):
        with pytest.raises(ParseError, match="duplicate magnitude"):
            parse_window("2,2")
        with pytest.raises(ParseError, match="duplicate magnitude"):
            parse_window("2,-2")

    def test_zero_entry(self):
        with pytest.raises(ParseError, match="zero"):
            parse_window("1,0,2")

    def test_out_of_range(self):
        with pytest.raises(ParseError, match="out of range"):
            parse_window("1,3")

    def test_empty(self):
        with pytest.raises(ParseError, match="empty"):
            parse_window("   ")
        with pytest.raises(ParseError, match="empty"):
            parse_window("[]")

    def test_not_integer(self):
        with pytest.raises(ParseError, match="integer"):
            parse_window("1,x")

    def test_mismatched_brackets(self):
        with pytest.raises(ParseError, match="bracket"):
            parse_window("[1,2")

    def test_roundtrip_str(self):
        p = parse_window("[-2,4,-3,1]")
        assert str(p) == "[-2,4,-3,1]"
        assert parse_window(str(p)) == p


class TestSignedPermutation:
    def test_validation(self):
        with pytest.raises(ValueError):
            SignedPermutation((1, 0))
        with pytest.raises(ValueError):
            SignedPermutation((1, 1))
        with pytest.raises(ValueError):
            SignedPermutation((1, 3))

    def test_identity(self):
        assert SignedPermutation.identity(3).window == (1, 2, 3)

    def test_ordering_is_lexicographic(self):
        a = SignedPermutation((-2, 1))
        b = SignedPermutation((1, -2))
        assert a < b
        assert sorted([b, a]) == [a, b]

    def test_hash_eq(self):
        assert SignedPermutation((2, -1)) == SignedPermutation([2, -1])
        assert len({SignedPermutation((2, -1)), SignedPermutation((2, -1))}) == 1


class TestFullSequence:
    def test_identity_b2(self):
        assert full_sequence(SignedPermutation((1, 2))) == (-2, -1, 1, 2)

    def test_example_rank4(self):
        p = SignedPermutation((-2, 4, -3, 1))
        assert full_sequence(p) == (-1, 3, -4, 2, -2, 4, -3, 1)

    def test_rank1(self):
        assert full_sequence(SignedPermutation((-1,))) == (1, -1)

    @given(windows())
    def test_antisymmetry(self, p):
        fs = full_sequence(p)
        m = len(fs)
        assert all(fs[i] == -fs[m - 1 - i] for i in range(m))


class TestNegate:
    def test_examples(self):
        assert negate(SignedPermutation((1, 2))).window == (-1, -2)
        assert negate(SignedPermutation((3, -2, 1))).window == (-3, 2, -1)

    @given(windows())
    def test_involution(self, p):
        assert negate(negate(p)) == p


class TestInversePosition:
    def test_examples(self):
        p = SignedPermutation((-2, 4, -3, 1))
        assert inverse_position(p, 3) == -3
        assert inverse_position(p, -4) == -2
        assert inverse_position(SignedPermutation((1, 2)), 2) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            inverse_position(SignedPermutation((1, 2)), 3)

    @given(windows())
    def test_odd_symmetry(self, p):
        for v in range(1, p.n + 1):
            assert inverse_position(p, -v) == -inverse_position(p, v)
            i = inverse_position(p, v)
            assert full_sequence(p)[i + p.n if i < 0 else i + p.n - 1] == v


class TestCoxeterLength:
    def test_identity(self):
        for n in range(1, 6):
            assert coxeter_length(SignedPermutation.identity(n)) == 0

    def test_generator(self):
        assert coxeter_length(SignedPermutation((-1, 2))) == 1

    def test_value_from_word_search(self):
        # independently derived with the BFS oracle
        assert coxeter_length(SignedPermutation((-2, -1))) == 3

    def test_longest_element(self):
        for n in range(1, 6):
            w0 = SignedPermutation(tuple(-v for v in range(1, n + 1)))
            assert coxeter_length(w0) == n * n

    @pytest.mark.parametrize("n", [2, 3])
    def test_matches_bfs_word_length(self, n):
        table = word_lengths_by_bfs(n)
        assert len(table) == 2**n * [1, 1, 2, 6][n]
        for p, d in table.items():
            assert coxeter_length(p) == d

    @given(windows(max_n=5))
    def test_parity_flips_under_reflections(self, p):
        lp = coxeter_length(p)
        for label in all_reflections(p.n):
            if u_defined(label.a, label.b, p):
                assert (coxeter_length(apply_u(label, p)) - lp) % 2 == 1


class TestUDefined:
    def test_long_always_defined(self):
        for p in (SignedPermutation((1, 2)), SignedPermutation((-2, 1))):
            assert u_defined(2, -2, p)

    def test_mixed_sign_pair_same_position_signs(self):
        assert u_defined(-4, 3, SignedPermutation((-2, 4, -3, 1)))

    def test_rule_direct(self):
        # positions of -2 and 1 in (1,-2) are 2 and 1: same sign, defined
        assert u_defined(-2, 1, SignedPermutation((1, -2)))

    def test_undefined_case(self):
        # opposite-sign values at opposite-sign positions
        assert not u_defined(-1, 2, SignedPermutation.identity(2))

    def test_invalid_pair(self):
        with pytest.raises(ValueError):
            u_defined(1, 1, SignedPermutation.identity(2))

    def test_out_of_range_pair(self):
        with pytest.raises(ValueError):
            u_defined(5, -5, SignedPermutation.identity(2))
        with pytest.raises(ValueError):
            apply_u(ReflectionLabel(1, 3), SignedPermutation.identity(2))


class TestApplyU:
    def test_generator_action(self):
        assert apply_u(ReflectionLabel(1, -1), SignedPermutation((1, 2))).window == (-1, 2)

    def test_value_swap(self):
        p = SignedPermutation((-2, 4, -3, 1))
        q = apply_u(ReflectionLabel(1, 2), p)
        assert q.window == (-1, 4, -3, 2)
        assert coxeter_length(q) == coxeter_length(p) - 1

    def test_refuses_undefined(self):
        with pytest.raises(UndefinedReflectionError):
            apply_u(ReflectionLabel(-1, 2), SignedPermutation.identity(2))

    @given(windows(max_n=5))
    def test_involution(self, p):
        for label in all_reflections(p.n):
            if u_defined(label.a, label.b, p):
                q = apply_u(label, p)
                if u_defined(label.a, label.b, q):
                    assert apply_u(label, q) == p


class TestReflectionLabel:
    def test_canonical_merges_negated_pair(self):
        assert ReflectionLabel(3, -4) == ReflectionLabel(-3, 4)
        assert (ReflectionLabel(3, -4).a, ReflectionLabel(3, -4).b) == (-4, 3)
        assert ReflectionLabel(-1, -2) == ReflectionLabel(1, 2)

    def test_kind(self):
        assert ReflectionLabel(2, -2).kind == "long"
        assert ReflectionLabel(1, 2).kind == "pair"

    def test_invalid(self):
        with pytest.raises(ValueError):
            ReflectionLabel(2, 2)
        with pytest.raises(ValueError):
            ReflectionLabel(0, 1)

    def test_str(self):
        assert str(ReflectionLabel(3, -4)) == "-4,3"


class TestAllReflections:
    def test_rank1(self):
        assert all_reflections(1) == [ReflectionLabel(-1, 1)]

    def test_rank2_set(self):
        got = set(all_reflections(2))
        assert got == {
            ReflectionLabel(-1, 1),
            ReflectionLabel(-2, 2),
            ReflectionLabel(1, 2),
            ReflectionLabel(-1, 2),
        }

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_count_is_n_squared(self, n):
        refl = all_reflections(n)
        assert len(refl) == n * n
        assert len(set(refl)) == n * n

    def test_generators_are_reflections(self):
        for n in (2, 4):
            assert set(generators(n)) <= set(all_reflections(n))
            assert len(generators(n)) == n
