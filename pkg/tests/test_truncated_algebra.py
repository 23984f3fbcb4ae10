import pytest
from conftest import lattice

from src.modules.errors import InputError, WindowTooSmallError
from src.modules.group_core import Window, make_group
from src.modules.operator_lab import adjoint, commutator, from_matrix_market, to_matrix_market
from src.modules.truncated_algebra import (
    generator_operators,
    identity_defect,
    length_raising,
    parse_letter,
    predicted_defect_support,
    right_translation,
)


@pytest.fixture(scope="module")
def z_window(z):
    return Window(z, 5)


def index_of(window, group, *word):
    return window.index[group.element(tuple(word))]


class TestGeneratorOperators:
    def test_raising_on_the_line(self, z, z_window):
        _, x = generator_operators(z, 1, z_window)
        assert x.column(index_of(z_window, z)) == {index_of(z_window, z, 1): 1}
        assert x.column(index_of(z_window, z, -1)) == {index_of(z_window, z, -1): 1}

    def test_adjoint_of_the_inverse_has_an_empty_column_at_the_identity(self, z, z_window):
        x_inverse = length_raising(z, -1, z_window)
        assert adjoint(x_inverse).column(index_of(z_window, z)) == {}
        assert adjoint(x_inverse).column(index_of(z_window, z, -1)) == {index_of(z_window, z): 1}

    @pytest.mark.parametrize("fixture", ["z", "z2", "f2", "z2_free_z"])
    def test_translation_is_an_isometry_on_unmasked_columns(self, fixture, request):
        group = request.getfixturevalue(fixture)
        window = Window(group, 3)
        for letter in group.letters:
            u = right_translation(group, letter, window)
            columns = [u.column(j) for j in u.unmasked_columns()]
            assert all(list(c.values()) == [1] for c in columns)
            rows = [next(iter(c)) for c in columns]
            assert len(set(rows)) == len(rows)
            assert all(len(window.elements[j]) == 3 for j in u.mask)

    @pytest.mark.parametrize("fixture", ["z", "z2", "f2"])
    def test_raising_has_one_entry_per_column(self, fixture, request):
        group = request.getfixturevalue(fixture)
        window = Window(group, 3)
        _, x = generator_operators(group, 1, window)
        assert all(list(x.column(j).values()) == [1] for j in x.unmasked_columns())

    def test_matrix_market_export(self, z):
        window = Window(z, 3)
        u, _ = generator_operators(z, 1, window)
        assert u.nnz == 6
        assert u.mask == {index_of(window, z, 1, 1, 1)}
        text = to_matrix_market(u)
        assert "7 7 6" in text.splitlines()
        assert from_matrix_market(text) == u

    def test_translations_commute_in_the_interior(self, z2):
        window = Window(z2, 4)
        u1, _ = generator_operators(z2, 1, window)
        u2, _ = generator_operators(z2, 2, window)
        assert commutator(u1, u2).without_masked_columns().nnz == 0

    def test_radius_zero(self, z):
        with pytest.raises(WindowTooSmallError):
            generator_operators(z, 1, Window(z, 0))

    def test_parse_letter(self, z2):
        assert parse_letter(z2, "s2^-1") == -2
        assert parse_letter(z2, "s1") == 1
        with pytest.raises(InputError):
            parse_letter(z2, "s1*s2")


class TestIdentityDefect:
    def test_line(self, z, z_window):
        report = identity_defect(z, 1, z_window)
        assert report.identity_only
        assert report.defect.entries() == [(0, 0, -1)]
        assert report.matches_prediction

    @pytest.mark.parametrize("radius", [2, 3, 4, 5])
    def test_plane(self, z2, radius):
        window = Window(z2, radius)
        report = identity_defect(z2, 1, window)
        expected = {lattice(z2, 0, y) for y in range(-(radius - 1), radius)}
        assert set(report.support) == expected
        assert all(value == -1 for _, _, value in report.defect.entries())
        assert not report.identity_only
        assert report.matches_prediction

    @pytest.mark.parametrize("radius", [2, 3, 4, 5])
    def test_free_group(self, f2, radius):
        window = Window(f2, radius)
        report = identity_defect(f2, 1, window)
        expected = [g for g in window.interior if not g.word or abs(g.word[-1]) != 1]
        assert report.support == expected
        assert report.matches_prediction
        assert report.support == predicted_defect_support(f2, 1, window)

    def test_decreasing_columns_have_no_defect(self, z2):
        window = Window(z2, 4)
        report = identity_defect(z2, -2, window)
        for j, g in enumerate(window.elements):
            if window.is_interior(g) and len(z2.times_letter(g, -2)) == len(g) - 1:
                assert report.defect.column(j) == {}

    def test_torsion_generator(self):
        s3 = make_group("<a,b|a^2,b^3,(ab)^2>")
        window = Window(s3, 3)
        report = identity_defect(s3, 2, window)
        assert not report.defect.mask
        assert report.matches_prediction

    def test_report_text(self, z, z_window):
        text = identity_defect(z, 1, z_window).to_text(z)
        assert "# identity_only: true" in text
        assert text.splitlines()[-1] == "e\te\t-1"

    def test_window_too_small(self, z):
        with pytest.raises(WindowTooSmallError):
            identity_defect(z, 1, Window(z, 1))
