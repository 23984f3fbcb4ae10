import pytest
from conftest import lattice
from hypothesis import given, settings
from hypothesis import strategies as st

from src.modules.errors import BallSizeExceededError, PresentationParseError, RewritingBudgetExceededError
from src.modules.group_core import (
    Element,
    GroupClass,
    IccVerdict,
    Window,
    ball,
    format_element,
    icc_evidence,
    inverse,
    make_group,
    multiply,
    parse_presentation,
    parse_word,
    word_length,
)
from src.modules.group_core.knuth_bendix import complete, group_equations


def bfs_distances(group, radius):
    """Graph distances from the identity, computed without looking at normal form lengths."""
    distances = {group.identity: 0}
    frontier = [group.identity]
    for r in range(1, radius + 1):
        next_frontier = []
        for g in frontier:
            for letter in group.letters:
                h = multiply(group, g, group.letter_element(letter))
                if h not in distances:
                    distances[h] = r
                    next_frontier.append(h)
        frontier = next_frontier
    return distances


class TestPresentations:
    def test_free_group(self, f2):
        assert f2.group_class == GroupClass.FREE
        assert f2.generators == ("a", "b")
        assert f2.relators == ()

    def test_free_abelian(self, z2):
        assert z2.group_class == GroupClass.FREE_ABELIAN
        assert z2.relators == ((1, 2, -1, -2),)

    def test_free_product(self, z2_free_z):
        assert z2_free_z.group_class == GroupClass.FREE_PRODUCT
        assert z2_free_z.normalizer.describe() == "Z^2 * Z"

    def test_direct_product_of_free_groups(self):
        group = make_group("<a,b,c,d|[a,c],[a,d],[b,c],[b,d]>")
        assert group.group_class == GroupClass.DIRECT_PRODUCT
        assert group.normalizer.describe() == "(Z * Z) x (Z * Z)"

    def test_unicode_and_ascii_agree(self):
        unicode = make_group("⟨s1,s2 | s1 s2 s1⁻¹ s2⁻¹⟩")
        ascii = make_group("<s1,s2|s1*s2*s1^-1*s2^-1>")
        assert unicode.generators == ascii.generators
        assert unicode.relators == ascii.relators
        assert unicode.group_class == ascii.group_class

    def test_nested_commutators_and_powers(self):
        presentation = parse_presentation("<a,b | [[a,b],a], (ab)^2 b^-2>")
        assert presentation.relators[0] == (1, 2, -1, -2, 1, 2, 1, -2, -1, -1)
        assert presentation.relators[1] == (1, 2, 1, -2)

    @pytest.mark.parametrize(
        "text",
        ["a,b|", "<a,b>", "<a,a|>", "<a,e|>", "<a,b|ac>", "<a,b|[a,b>", "<a,b|a^x>", "<1a|>"],
    )
    def test_parse_errors(self, text):
        with pytest.raises(PresentationParseError):
            make_group(text)

    def test_parse_error_reports_column(self):
        with pytest.raises(PresentationParseError) as info:
            parse_presentation("<a,b|ab, ac>")
        assert info.value.position == 10

    def test_finite_group_via_rewriting(self):
        s3 = make_group("<a,b|a^2,b^3,(ab)^2>")
        assert s3.group_class == GroupClass.GENERIC_REWRITING
        assert len(ball(s3, 10)) == 6

    def test_rewriting_agrees_with_structural_normal_form(self, z2):
        rewritten = make_group("<s1,s2|[s1,s2]>", force_rewriting=True)
        assert rewritten.group_class == GroupClass.GENERIC_REWRITING
        assert [len(g) for g in ball(rewritten, 6)] == [len(g) for g in ball(z2, 6)]

    @pytest.mark.parametrize("text", ["<a,b|a^2,b^3,(ab)^2>", "<s1,s2|[s1,s2]>", "<a,b|a^2,b^2,(ab)^3>"])
    def test_completion_identifies_equations(self, text):
        presentation = parse_presentation(text)
        equations = group_equations(presentation.rank, presentation.relators)
        system = complete(equations)
        for lhs, rhs in equations:
            assert system.reduce(lhs) == system.reduce(rhs)
        assert all(system.reduce(lhs) == rhs for lhs, rhs in system.rules)

    def test_rewriting_budget(self):
        with pytest.raises(RewritingBudgetExceededError):
            make_group("<a,b|a^2,b^3,(ab)^2>", max_rules=2)


class TestArithmetic:
    def test_inverse_law(self, f2):
        a = parse_word(f2, "a")
        assert multiply(f2, a, inverse(f2, a)) == f2.identity

    def test_commuting_generators(self, z2):
        s1, s2 = parse_word(z2, "s1"), parse_word(z2, "s2")
        assert multiply(z2, s1, s2) == multiply(z2, s2, s1)

    def test_integer_addition(self, z):
        assert multiply(z, parse_word(z, "s^10"), parse_word(z, "s^-1")) == parse_word(z, "s^9")

    def test_word_lengths(self, z2, f2):
        assert word_length(z2, z2.identity) == 0
        assert word_length(z2, parse_word(z2, "s1^2 s2^3")) == 5
        assert word_length(z2, parse_word(z2, "s2 s1 s2^-1 s1")) == 2
        assert word_length(f2, parse_word(f2, "abab")) == 4

    def test_free_product_syllables_merge(self, z2_free_z):
        g = parse_word(z2_free_z, "s1 s3 s3^-1 s2 s1^-1")
        assert g == parse_word(z2_free_z, "s2")

    def test_format_round_trip(self, z2_free_z):
        g = parse_word(z2_free_z, "s1^2 s2^-1 s3 s1")
        text = format_element(z2_free_z, g)
        assert text == "s1^2*s2^-1*s3*s1"
        assert parse_word(z2_free_z, text) == g
        assert format_element(z2_free_z, z2_free_z.identity) == "e"

    @pytest.mark.parametrize("presentation", ["<a,b|>", "<s1,s2|[s1,s2]>", "<s1,s2,s3|[s1,s2]>"])
    @settings(max_examples=1000, deadline=None)
    @given(data=st.data())
    def test_normal_form_soundness(self, presentation, data):
        group = make_group(presentation)
        letters = st.lists(st.sampled_from(group.letters), max_size=12)
        a = group.element(tuple(data.draw(letters)))
        b = group.element(tuple(data.draw(letters)))
        assert multiply(group, multiply(group, a, b), inverse(group, b)) == a


class TestBalls:
    @pytest.mark.parametrize("radius", range(0, 21))
    def test_z2_growth(self, z2, radius):
        assert len(ball(z2, radius)) == 2 * radius * radius + 2 * radius + 1

    @pytest.mark.parametrize("radius", range(0, 11))
    def test_f2_growth(self, f2, radius):
        assert len(ball(f2, radius)) == 2 * 3**radius - 1

    @pytest.mark.parametrize("fixture", ["z2", "f2", "z2_free_z", "z3"])
    def test_word_length_is_graph_distance(self, fixture, request):
        group = request.getfixturevalue(fixture)
        distances = bfs_distances(group, 6 if fixture != "z2_free_z" else 5)
        for g, distance in distances.items():
            assert word_length(group, g) == distance
        assert sorted(distances, key=lambda g: g.key) == ball(group, max(distances.values()))

    def test_balls_are_nested_prefixes(self, z2_free_z):
        smaller = ball(z2_free_z, 3)
        assert ball(z2_free_z, 4)[: len(smaller)] == smaller

    def test_radius_zero(self, f2):
        assert ball(f2, 0) == [Element(())]

    def test_threads_do_not_change_the_order(self, z2_free_z):
        assert ball(z2_free_z, 4, threads=4) == ball(z2_free_z, 4)

    def test_size_cap(self, f2):
        with pytest.raises(BallSizeExceededError):
            ball(f2, 10, size_cap=1000)

    def test_window_interior(self, z2):
        window = Window(z2, 3)
        assert len(window.interior) == len(ball(z2, 2))
        assert window.is_interior(lattice(z2, 1, 1))
        assert not window.is_interior(lattice(z2, 2, 1))
        assert set(window.neighbors(z2.identity)) == {
            lattice(z2, 1, 0),
            lattice(z2, -1, 0),
            lattice(z2, 0, 1),
            lattice(z2, 0, -1),
        }


class TestIccEvidence:
    def test_abelian_group_is_not_icc(self, z2):
        report = icc_evidence(z2, 2)
        assert report.verdict == IccVerdict.NOT_ICC
        assert all(entry.counts == (1, 1) and entry.finite_class_size == 1 for entry in report.entries)

    def test_free_group_classes_grow(self, f2):
        report = icc_evidence(f2, 3, elements=[parse_word(f2, "a")])
        (entry,) = report.entries
        assert entry.counts[2] > entry.counts[1]
        assert entry.finite_class_size is None
        assert report.verdict == IccVerdict.ICC_CONSISTENT

    def test_free_product_classes_grow(self, z2_free_z):
        report = icc_evidence(z2_free_z, 3, elements=[parse_word(z2_free_z, "s3")])
        (entry,) = report.entries
        assert entry.counts[0] < entry.counts[1] < entry.counts[2]
        assert report.verdict == IccVerdict.ICC_CONSISTENT

    def test_central_element_is_detected(self):
        group = make_group("<a,b,c|[a,c],[b,c]>")
        report = icc_evidence(group, 2, elements=[parse_word(group, "c")])
        assert report.verdict == IccVerdict.NOT_ICC
        assert report.entries[0].finite_class_size == 1

    def test_report_text(self, z2):
        text = icc_evidence(z2, 1).to_text(z2)
        assert "# verdict: not ICC" in text
        assert "s1\t1\t1" in text
