"""Branch-point combinatorics: classes, parities, counts, and the catalog."""
import pytest

from spinvariants.hyperelliptic import (BolzaCase, BranchPermutation,
                                        BranchSet, EvenClass, GENUS_CAP,
                                        OrbitShape, SpinClass, _closure,
                                        affine_add, bolza_table, class_parity,
                                        classify_orbit_shape,
                                        enumerate_even_classes,
                                        enumerate_spin_classes,
                                        fixed_count_brute,
                                        fixed_count_closed_form,
                                        group_fixed_count, permute_class)


def shape_permutation(shape: OrbitShape) -> BranchPermutation:
    """A concrete permutation realizing an orbit shape: cycles first,
    fixed points on the trailing labels."""
    g = shape.genus
    images = list(range(1, 2 * g + 3))
    for i in range(shape.free_orbits):
        base = i * shape.order + 1
        block = list(range(base, base + shape.order))
        for a, b in zip(block, block[1:] + block[:1]):
            images[a - 1] = b
    return BranchPermutation(g, tuple(images))


def all_shapes(max_branch: int) -> list[OrbitShape]:
    out = []
    for n in range(2, max_branch + 1):
        for r in range(1, max_branch // n + 1):
            for f in (0, 1, 2):
                total = n * r + f
                if total % 2 or not 4 <= total <= max_branch:
                    continue
                if n % 2 == 0 and f == 1:
                    continue
                out.append(OrbitShape(n, f, r))
    return out


class TestBranchSet:
    def test_size_and_labels(self):
        b = BranchSet(3)
        assert b.size == 8
        assert list(b.labels()) == list(range(1, 9))

    def test_bad_genus(self):
        with pytest.raises(ValueError):
            BranchSet(0)


class TestClasses:
    def test_canonicalization_picks_smaller_side(self):
        c = SpinClass.from_subset(2, {2, 3, 4, 5, 6})
        assert c.rep == (1,)

    def test_tie_break_contains_label_one(self):
        c = SpinClass.from_subset(2, {2, 4, 6})
        assert c.rep == (1, 3, 5)

    def test_non_canonical_rep_rejected(self):
        with pytest.raises(ValueError):
            SpinClass(2, (2, 4, 6))

    def test_wrong_parity_rejected(self):
        with pytest.raises(ValueError):
            SpinClass(2, (1, 2))
        with pytest.raises(ValueError):
            EvenClass(2, (1,))

    def test_label_out_of_range(self):
        with pytest.raises(ValueError):
            SpinClass.from_subset(2, {1, 7, 8})

    def test_class_equality_is_complement_invariance(self):
        assert SpinClass.from_subset(2, {1, 2, 3}) \
            == SpinClass.from_subset(2, {4, 5, 6})


class TestCensus:
    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_counts_and_parity_split(self, g):
        classes = enumerate_spin_classes(g)
        assert len(classes) == 4 ** g
        assert len(set(classes)) == 4 ** g
        evens = sum(1 for c in classes if class_parity(c) == "even")
        assert evens == 2 ** (g - 1) * (2 ** g + 1)
        assert len(classes) - evens == 2 ** (g - 1) * (2 ** g - 1)

    @pytest.mark.parametrize("g", [1, 2, 3, 4])
    def test_even_class_universe(self, g):
        classes = enumerate_even_classes(g)
        assert len(classes) == 4 ** g
        assert len(set(classes)) == 4 ** g

    def test_genus_two_split_is_ten_six(self):
        classes = enumerate_spin_classes(2)
        assert sum(class_parity(c) == "even" for c in classes) == 10
        assert sum(class_parity(c) == "odd" for c in classes) == 6

    def test_genus_cap(self):
        with pytest.raises(ValueError):
            enumerate_spin_classes(GENUS_CAP + 1)
        with pytest.raises(ValueError):
            enumerate_even_classes(GENUS_CAP + 1)


class TestParity:
    def test_examples(self):
        assert class_parity(SpinClass.from_subset(2, {1, 2, 3})) == "even"
        assert class_parity(SpinClass.from_subset(2, {1})) == "odd"
        assert class_parity(SpinClass.from_subset(1, set())) == "odd"
        assert class_parity(SpinClass.from_subset(1, {1, 2})) == "even"


class TestAffineAction:
    def test_identity_element(self):
        zero = EvenClass.from_subset(2, set())
        for c in enumerate_spin_classes(2):
            assert affine_add(c, zero) == c

    def test_involution(self):
        for c in enumerate_spin_classes(2)[:6]:
            for e in enumerate_even_classes(2):
                assert affine_add(affine_add(c, e), e) == c

    def test_well_defined_on_complements(self):
        # translating by e.rep or by its complement lands in the same class
        c = SpinClass.from_subset(2, {1, 2, 3})
        e = EvenClass.from_subset(2, {1, 2})
        comp = set(range(1, 7)) - set(e.rep)
        assert affine_add(c, e) \
            == SpinClass.from_subset(2, set(c.rep) ^ comp)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_simply_transitive(self, g):
        base = enumerate_spin_classes(g)[0]
        images = {affine_add(base, e) for e in enumerate_even_classes(g)}
        assert images == set(enumerate_spin_classes(g))

    def test_genus_mismatch(self):
        with pytest.raises(ValueError):
            affine_add(SpinClass.from_subset(1, set()),
                       EvenClass.from_subset(2, set()))


class TestPermutation:
    def test_from_cycles_and_apply(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3)(4 5)")
        assert [p.apply(i) for i in range(1, 7)] == [2, 3, 1, 5, 4, 6]

    def test_comma_separated(self):
        assert BranchPermutation.from_cycles(2, "(1, 2, 3)(4,5)") \
            == BranchPermutation.from_cycles(2, "(1 2 3)(4 5)")

    def test_identity_spellings(self):
        assert BranchPermutation.from_cycles(2, "") \
            == BranchPermutation.identity(2)
        assert BranchPermutation.from_cycles(2, "()") \
            == BranchPermutation.identity(2)
        assert BranchPermutation.identity(2).to_cycles() == "()"

    def test_round_trip(self):
        for text in ["(1 2 3 4 5 6)", "(1 4)(2 5)(3 6)", "(2 3)(4 6)"]:
            p = BranchPermutation.from_cycles(2, text)
            assert BranchPermutation.from_cycles(2, p.to_cycles()) == p

    def test_cycles_include_fixed_points(self):
        p = BranchPermutation.from_cycles(2, "(1 2)")
        assert p.cycles() == [(1, 2), (3,), (4,), (5,), (6,)]

    def test_compose_order(self):
        a = BranchPermutation.from_cycles(2, "(1 2)")
        b = BranchPermutation.from_cycles(2, "(2 3)")
        # (a after b)(2) = a(3) = 3; (b after a)(2) = b(1) = 1
        assert a.compose(b).apply(2) == 3
        assert b.compose(a).apply(2) == 1

    def test_inverse(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3 4 5 6)")
        assert p.compose(p.inverse()) == BranchPermutation.identity(2)
        assert p.inverse().compose(p) == BranchPermutation.identity(2)

    def test_parser_errors(self):
        with pytest.raises(ValueError, match="outside cycles"):
            BranchPermutation.from_cycles(2, "(1 2")
        with pytest.raises(ValueError, match="not an integer"):
            BranchPermutation.from_cycles(2, "(1 x)")
        with pytest.raises(ValueError, match="outside 1..6"):
            BranchPermutation.from_cycles(2, "(1 9)")
        with pytest.raises(ValueError, match="more than one position"):
            BranchPermutation.from_cycles(2, "(1 2)(2 3)")

    def test_images_validation(self):
        with pytest.raises(ValueError):
            BranchPermutation(2, (1, 1, 3, 4, 5, 6))
        with pytest.raises(ValueError):
            BranchPermutation(2, (1, 2, 3, 4, 5))


class TestPermuteClass:
    def test_rotation_fixes_alternating_class(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3 4 5 6)")
        c = SpinClass.from_subset(2, {1, 3, 5})
        # the image {2, 4, 6} is the complement, hence the same class
        assert permute_class(c, p) == c

    def test_moved_class(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3 4 5 6)")
        c = SpinClass.from_subset(2, {1})
        assert permute_class(c, p) == SpinClass.from_subset(2, {2})

    def test_genus_mismatch(self):
        with pytest.raises(ValueError):
            permute_class(SpinClass.from_subset(1, set()),
                          BranchPermutation.identity(2))


class TestOrbitShape:
    def test_genus(self):
        assert OrbitShape(5, 1, 1).genus == 2
        assert OrbitShape(2, 0, 3).genus == 2
        assert OrbitShape(3, 1, 1).genus == 1

    def test_even_order_single_fixed_point_rejected(self):
        with pytest.raises(ValueError, match="cannot fix exactly one"):
            OrbitShape(2, 1, 2)
        with pytest.raises(ValueError, match="cannot fix exactly one"):
            OrbitShape(4, 1, 1)

    def test_parity_and_size_rejected(self):
        with pytest.raises(ValueError):
            OrbitShape(3, 1, 2)  # total 7 is odd
        with pytest.raises(ValueError):
            OrbitShape(2, 0, 1)  # total 2 is below the minimum 4

    def test_field_validation(self):
        with pytest.raises(ValueError):
            OrbitShape(1, 0, 4)
        with pytest.raises(ValueError):
            OrbitShape(2, 3, 2)


class TestClassify:
    def test_rotation_with_fixed_points(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3 4 5)")
        assert classify_orbit_shape(p) == OrbitShape(5, 1, 1)

    def test_free_rotation(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3 4 5 6)")
        assert classify_orbit_shape(p) == OrbitShape(6, 0, 1)

    def test_identity_rejected(self):
        with pytest.raises(ValueError, match="identity"):
            classify_orbit_shape(BranchPermutation.identity(2))

    def test_mixed_lengths_rejected(self):
        with pytest.raises(ValueError, match="mixed"):
            classify_orbit_shape(BranchPermutation.from_cycles(2, "(1 2)(3 4 5)"))

    def test_too_many_fixed_points_rejected(self):
        with pytest.raises(ValueError, match="at most two"):
            classify_orbit_shape(BranchPermutation.from_cycles(2, "(1 2)"))


class TestCounts:
    def test_identity_fixes_everything(self):
        assert fixed_count_brute(BranchPermutation.identity(2)) == 16

    def test_closed_form_examples(self):
        assert fixed_count_closed_form(OrbitShape(2, 0, 3), 2) == 4
        assert fixed_count_closed_form(OrbitShape(2, 2, 2), 2) == 4
        assert fixed_count_closed_form(OrbitShape(5, 1, 1), 2) == 1
        assert fixed_count_closed_form(OrbitShape(6, 0, 1), 2) == 1
        assert fixed_count_closed_form(OrbitShape(3, 0, 2), 2) == 1
        assert fixed_count_closed_form(OrbitShape(3, 2, 2), 3) == 4
        # free even-order action, odd genus: exponent r, not r-1
        assert fixed_count_closed_form(OrbitShape(2, 0, 4), 3) == 16

    def test_shape_genus_mismatch(self):
        with pytest.raises(ValueError, match="2g\\+2"):
            fixed_count_closed_form(OrbitShape(5, 1, 1), 3)

    def test_closed_form_matches_brute_everywhere(self):
        shapes = all_shapes(10)
        assert len(shapes) >= 15
        for shape in shapes:
            p = shape_permutation(shape)
            assert classify_orbit_shape(p) == shape
            assert fixed_count_closed_form(shape, shape.genus) \
                == fixed_count_brute(p), shape

    def test_odd_order_never_swaps_complements(self):
        # for odd order the image of a fixed class equals the subset
        # itself, never strictly its complement
        for shape in all_shapes(8):
            if shape.order % 2 == 0:
                continue
            p = shape_permutation(shape)
            for c in enumerate_spin_classes(shape.genus):
                if permute_class(c, p) == c:
                    assert {p.apply(x) for x in c.rep} == set(c.rep)

    def test_genus_cap_enforced(self):
        with pytest.raises(ValueError):
            fixed_count_brute(BranchPermutation.identity(GENUS_CAP + 1))


class TestGroupCounts:
    def test_single_generator_matches_brute(self):
        p = BranchPermutation.from_cycles(2, "(1 2 3 4 5)")
        assert group_fixed_count([p]) == fixed_count_brute(p) == 1

    def test_case_ii_common_classes(self):
        gens = [BranchPermutation.from_cycles(2, "(1 2)(3 4)"),
                BranchPermutation.from_cycles(2, "(1 3)(2 4)(5 6)")]
        group = _closure(gens)
        fixed = [c for c in enumerate_spin_classes(2)
                 if all(permute_class(c, q) == c for q in group)]
        assert {c.rep for c in fixed} == {(1, 2, 5), (1, 2, 6)}
        assert group_fixed_count(gens) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            group_fixed_count([])

    def test_mixed_genus_rejected(self):
        with pytest.raises(ValueError):
            group_fixed_count([BranchPermutation.identity(1),
                               BranchPermutation.identity(2)])


class TestBolzaTable:
    def test_expected_counts(self):
        assert [case.expected_count for case in bolza_table()] == [4, 2, 1, 1, 0, 1]

    def test_computed_counts_match(self):
        for case in bolza_table():
            assert group_fixed_count(case.generators) == case.expected_count, \
                case.case_label

    def test_group_orders(self):
        orders = [len(_closure(case.generators)) for case in bolza_table()]
        assert orders == [2, 4, 6, 12, 8, 5]

    def test_labels_and_names(self):
        table = bolza_table()
        assert [case.case_label for case in table] \
            == ["(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)"]
        assert table[0].group_name == "Z_2"
        assert table[4].group_name == "octahedral"

    def test_all_generators_genus_two(self):
        for case in bolza_table():
            assert all(p.genus == 2 for p in case.generators)
