import numpy as np
import pytest
from conftest import lattice
from hypothesis import given, settings
from hypothesis import strategies as st
from test_cayley_complex import square

from src.modules.cayley_complex import build_complex, edge
from src.modules.errors import (
    DocumentFormatError,
    EnumerationCapExceededError,
    InadmissibleRuleError,
    NeighborCountOutOfRangeError,
    WindowBoundaryError,
)
from src.modules.group_core import Window
from src.modules.life_engine import (
    LifeState,
    LifeStepper,
    enumerate_life_states,
    fiber_report,
    format_rule,
    format_state,
    format_states,
    make_rule,
    parse_rule,
    parse_state,
    parse_states,
    rule_space_report,
    run,
    step,
    step_matrix,
    uniform_rule,
)
from src.modules.operator_lab import StateBasis

CLASSIC = ({3}, {2, 3})


@pytest.fixture(scope="module")
def z2_complex(z2):
    return build_complex(z2, 2, size_cap=4)


@pytest.fixture(scope="module")
def f2_complex(f2):
    return build_complex(f2, 1, size_cap=4)


@pytest.fixture(scope="module")
def classic(z2_complex):
    return make_rule([CLASSIC], z2_complex.neighbor_counts())


def squares(group, coordinates):
    return LifeState.of(square(group, x, y) for x, y in coordinates)


def array_life(grid: np.ndarray) -> np.ndarray:
    """One generation of B3/S23 on a zero-padded grid."""
    counts = sum(
        np.roll(np.roll(grid, dx, axis=0), dy, axis=1) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)
    )
    return ((counts == 3) | ((grid == 1) & (counts == 2))).astype(np.int8)


def grid_state(group, grid: np.ndarray, offset: int) -> LifeState:
    return squares(group, [(int(i) - offset, int(j) - offset) for i, j in zip(*np.nonzero(grid))])


def assert_matches_array_life(z2, stepper, seed, generations):
    rng = np.random.default_rng(seed)
    size, offset = 8 + 2 * generations + 4, generations + 2
    grid = np.zeros((size, size), dtype=np.int8)
    grid[offset : offset + 8, offset : offset + 8] = rng.integers(0, 2, size=(8, 8))
    state = grid_state(z2, grid, offset)
    for generation in range(generations):
        grid = array_life(grid)
        state = stepper.step(state)
        assert state == grid_state(z2, grid, offset), f"seed {seed}, generation {generation + 1}"


class TestRules:
    def test_classic(self, classic):
        assert classic.admissible
        assert classic[0].birth == {3}
        assert classic[0].survival == {2, 3}

    def test_birth_from_nothing_is_inadmissible(self):
        rule = make_rule([({0}, set())], [8])
        assert not rule.admissible
        assert rule.inadmissible_types == [0]

    def test_everything_dies(self):
        assert make_rule([(set(), set())], [8]).admissible

    def test_out_of_range(self):
        with pytest.raises(NeighborCountOutOfRangeError):
            make_rule([({9}, {2})], [8])
        with pytest.raises(NeighborCountOutOfRangeError):
            make_rule([({1}, {2}), ({1}, {7})], [6, 6])

    def test_format(self, classic):
        assert format_rule(classic) == "type_0: B={3} S={2,3}\n"
        assert format_rule(uniform_rule([1], [], [6, 6])) == "type_0: B={1} S={}\ntype_1: B={1} S={}\n"

    def test_parse(self, classic):
        assert parse_rule(format_rule(classic), [8]) == classic
        assert parse_rule("B={3} S={2,3}", [8]) == classic
        two_types = parse_rule("# per type\ntype_1: B={2} S={}\ntype_0: B={1} S={0, 6}\n", [6, 6])
        assert two_types[0].survival == {0, 6}
        assert two_types[1].birth == {2}

    @pytest.mark.parametrize(
        "text, line",
        [
            ("B={3} S=2,3", 1),
            ("type_0: B={3} S={2,3}\ntype_0: B={3} S={2}", 2),
            ("type_0: B={3} S={2,x}", 1),
            ("type_0: B={3} S={2,,3}", 1),
            ("type_3: B={3} S={2,3}", 1),
            ("B={3} S={2,3}\nB={3} S={2,3}", 2),
        ],
    )
    def test_parse_malformed(self, text, line):
        with pytest.raises(DocumentFormatError) as e:
            parse_rule(text, [8])
        assert e.value.line == line

    def test_parse_missing_type(self):
        with pytest.raises(DocumentFormatError):
            parse_rule("type_0: B={1} S={}", [6, 6])

    def test_parse_out_of_range(self):
        with pytest.raises(NeighborCountOutOfRangeError):
            parse_rule("B={3} S={2,9}", [8])

    def test_rule_space(self):
        report = rule_space_report([8])
        assert report.total_encoded == 2**18
        assert report.total_admissible == 2**17
        assert report.total_stated == 2**16
        assert report.total_stated_admissible == 2**8 * (2**8 - 1)
        assert not report.counts_agree
        assert list(report.to_frame()["encoded"]) == [2**18]

    def test_rule_space_is_a_product(self):
        assert rule_space_report([6, 6]).total_admissible == (2**6 * 2**7) ** 2


class TestStep:
    def test_empty(self, classic, z2_complex):
        assert step(LifeState(), classic, z2_complex) == LifeState()

    def test_blinker(self, z2, classic, z2_complex):
        vertical = squares(z2, [(0, -1), (0, 0), (0, 1)])
        horizontal = squares(z2, [(-1, 0), (0, 0), (1, 0)])
        assert step(vertical, classic, z2_complex) == horizontal
        assert run(vertical, classic, z2_complex, 4) == [vertical, horizontal] * 2 + [vertical]

    def test_block_is_still(self, z2, classic, z2_complex):
        block = squares(z2, [(0, 0), (1, 0), (0, 1), (1, 1)])
        assert step(block, classic, z2_complex) == block

    def test_glider_moves_diagonally(self, z2, classic, z2_complex):
        glider = [(1, 2), (2, 1), (0, 0), (1, 0), (2, 0)]
        history = run(squares(z2, glider), classic, z2_complex, 4)
        assert history[-1] == squares(z2, [(x + 1, y - 1) for x, y in glider])

    def test_inadmissible_rule_is_refused(self, z2_complex):
        with pytest.raises(InadmissibleRuleError):
            step(LifeState(), make_rule([({0}, set())], [8]), z2_complex)

    def test_rule_must_cover_every_type(self, f2_complex, classic):
        with pytest.raises(ValueError):
            step(LifeState(), classic, f2_complex)

    def test_run_stops_when_empty(self, z2, classic, z2_complex):
        assert run(squares(z2, [(0, 0)]), classic, z2_complex, 10) == [squares(z2, [(0, 0)]), LifeState()]

    def test_region(self, z2, classic, z2_complex):
        vertical = squares(z2, [(0, -1), (0, 0), (0, 1)])
        with pytest.raises(WindowBoundaryError):
            step(vertical, classic, z2_complex, region=Window(z2, 3))
        assert len(step(vertical, classic, z2_complex, region=Window(z2, 6))) == 3

    def test_threads(self, z2, classic, z2_complex):
        glider = squares(z2, [(1, 2), (2, 1), (0, 0), (1, 0), (2, 0)])
        assert run(glider, classic, z2_complex, 6, threads=4) == run(glider, classic, z2_complex, 6)

    def test_free_group_edges(self, f2, f2_complex):
        rule = uniform_rule([1], [], f2_complex.neighbor_counts())
        seed = edge(f2.identity, f2.element((1,)))
        assert step(LifeState.of([seed]), rule, f2_complex) == LifeState.of(f2_complex.neighbors(seed))

    def test_matches_array_life(self, z2, classic, z2_complex):
        stepper = LifeStepper(z2_complex, classic)
        for seed in range(3):
            assert_matches_array_life(z2, stepper, seed, generations=8)

    @pytest.mark.slow
    def test_matches_array_life_on_many_seeds(self, z2, classic, z2_complex):
        stepper = LifeStepper(z2_complex, classic)
        for seed in range(50):
            assert_matches_array_life(z2, stepper, seed, generations=20)

    @settings(max_examples=25, deadline=None)
    @given(
        cells=st.sets(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), max_size=10),
        shift=st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
    )
    def test_translation_equivariance(self, z2, classic, z2_complex, cells, shift):
        g = lattice(z2, *shift)
        state = squares(z2, cells)
        stepper = LifeStepper(z2_complex, classic)
        assert stepper.step(state.translate(z2, g)) == stepper.step(state).translate(z2, g)


class TestStepMatrix:
    def test_blinker_columns(self, z2, classic, z2_complex):
        vertical = squares(z2, [(0, -1), (0, 0), (0, 1)])
        horizontal = squares(z2, [(-1, 0), (0, 0), (1, 0)])
        basis = StateBasis((LifeState(), vertical, horizontal), "blinkers")
        operator = step_matrix(classic, basis, z2_complex)
        assert operator.entries() == [(0, 0, 1), (1, 2, 1), (2, 1, 1)]
        assert not operator.mask
        assert fiber_report(operator).injective

    def test_everything_dies(self, z2_complex):
        basis = enumerate_life_states(z2_complex.cells, 2)
        assert len(basis) == 1 + 4 + 6
        operator = step_matrix(uniform_rule([], [], [8]), basis, z2_complex)
        report = fiber_report(operator)
        assert report.max_fiber == len(basis)
        assert report.histogram == {len(basis): 1}
        assert operator.column(5) == {0: 1}

    def test_classic_on_the_central_block(self, z2, classic, z2_complex):
        basis = enumerate_life_states(z2_complex.cells, 4)
        assert len(basis) == 16
        operator = step_matrix(classic, basis, z2_complex)
        assert not operator.mask
        full = basis.index[LifeState.of(z2_complex.cells)]
        # single cells and pairs die, every triple completes the block
        assert fiber_report(operator).histogram == {5: 1, 11: 1}
        assert all(len(operator.column(j)) == 1 for j in range(len(basis)))
        assert operator.column(full) == {full: 1}

    def test_escaping_columns_are_masked(self, z2, classic, z2_complex):
        vertical = squares(z2, [(0, -1), (0, 0), (0, 1)])
        basis = StateBasis((LifeState(), vertical), "partial")
        operator = step_matrix(classic, basis, z2_complex)
        assert operator.mask == {1}
        operator = step_matrix(classic, basis, z2_complex, region=Window(z2, 3))
        assert operator.mask == {1}
        assert operator.entries() == [(0, 0, 1)]

    def test_enumeration_order(self, z2_complex):
        basis = enumerate_life_states(z2_complex.cells, 1, label="core")
        assert basis[0] == LifeState()
        assert [len(s) for s in basis] == [0, 1, 1, 1, 1]
        assert basis.tag == "life:core:c4:k1:n5"

    def test_enumeration_cap(self, z2_complex):
        with pytest.raises(EnumerationCapExceededError):
            enumerate_life_states(z2_complex.cells, 4, cap=10)


class TestStateText:
    def test_round_trip(self, z2):
        block = squares(z2, [(0, 0), (1, 0), (0, 1), (1, 1)])
        text = format_state(z2, block)
        assert len(text.splitlines()) == 4
        assert parse_state(z2, text) == block

    def test_history_round_trip(self, z2, classic, z2_complex):
        history = run(squares(z2, [(0, -1), (0, 0), (0, 1)]), classic, z2_complex, 2)
        text = format_states(z2, history, label="generation")
        assert text.startswith("# generation: 0\n")
        assert parse_states(z2, text) == history

    def test_empty_state_keeps_its_slot(self, z2):
        assert parse_states(z2, format_states(z2, [LifeState(), LifeState()])) == [LifeState(), LifeState()]

    def test_malformed(self, z2):
        with pytest.raises(DocumentFormatError) as e:
            parse_state(z2, "[e s1]\n[e s1\n")
        assert e.value.line == 2
        with pytest.raises(DocumentFormatError):
            parse_states(z2, "[e s1]\n")
