"""
Handlers of the workbench subcommands. Each handler reads a :class:`RunConfig`, writes its artifacts into the
output directory and returns their paths. Artifacts carry no timestamps, so equal configs give equal files.
"""

import logging
import os
import re
from typing import Callable

import numpy as np
import pandas as pd

from src.cli.cli_print import TerminalPrinter
from src.cli.run_config import RunConfig
from src.modules.cayley_complex import CayleyComplex, build_complex, export_complex, format_block
from src.modules.circle_dynamics import (
    eval_word,
    faithfulness_sweep,
    fixed_point_scan,
    halton_points,
    measure_experiments,
    parse_circle_word,
    relation_defect,
)
from src.modules.errors import InputError
from src.modules.go_engine import Color, GoState, enumerate_admissible, move_matrix, play, serialize_states
from src.modules.group_core import (
    Element,
    MarkedGroup,
    Window,
    ball,
    format_element,
    icc_evidence,
    make_group,
    parse_presentation,
    parse_word,
)
from src.modules.helpers import split_top_level
from src.modules.life_engine import (
    LifeState,
    enumerate_life_states,
    fiber_report,
    format_rule,
    format_states,
    parse_rule,
    parse_state,
    rule_space_report,
    run,
    step_matrix,
)
from src.modules.operator_lab import commutant_dim_estimate, read_operator, spectrum, write_operator
from src.modules.truncated_algebra import generator_operators, identity_defect, letter_name, parse_letter

logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig], list[str]]


def _write_text(config: RunConfig, name: str, text: str) -> str:
    os.makedirs(config.output_dir, exist_ok=True)
    path = os.path.join(config.output_dir, name)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Wrote {path}")
    return path


def _write_frame(config: RunConfig, name: str, frame: pd.DataFrame) -> str:
    os.makedirs(config.output_dir, exist_ok=True)
    path = os.path.join(config.output_dir, name)
    frame.to_csv(path, index=False, float_format="%.17g")
    logger.info(f"Wrote {path}")
    return path


def _output_path(config: RunConfig, name: str) -> str:
    os.makedirs(config.output_dir, exist_ok=True)
    return os.path.join(config.output_dir, name)


def _file_stem(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_") or "e"


def _require_group_text(config: RunConfig) -> str:
    if not config.group:
        raise InputError("This command needs a group presentation (--group).")
    return config.group


def _group(config: RunConfig) -> MarkedGroup:
    group = make_group(_require_group_text(config))
    TerminalPrinter.print_progress(f"Normal form: {group.describe()}")
    return group


def _window(config: RunConfig, group: MarkedGroup) -> Window:
    return Window(group, config.radius, size_cap=config.ball_cap, threads=config.threads)


def _header(group: MarkedGroup, **values) -> list[str]:
    return [f"# group: {group.presentation_text}"] + [f"# {key}: {value}" for key, value in values.items()]


# group


def group_ball(config: RunConfig) -> list[str]:
    group = _group(config)
    elements = ball(group, config.radius, size_cap=config.ball_cap, threads=config.threads)
    lines = _header(group, radius=config.radius, size=len(elements))
    lines += [format_element(group, g) for g in elements]
    TerminalPrinter.print_result(f"|ball({config.radius})| = {len(elements)}")
    return [_write_text(config, "ball.txt", "\n".join(lines) + "\n")]


def group_icc(config: RunConfig) -> list[str]:
    group = _group(config)
    report = icc_evidence(group, config.radius, size_cap=config.ball_cap)
    TerminalPrinter.print_result(f"{len(report.entries)} elements examined, verdict: {report.verdict.value}")
    return [_write_text(config, "icc.txt", report.to_text(group))]


# go


def _parse_moves(group: MarkedGroup, text: str) -> list[tuple[Color, Element]]:
    """``black:s, white:s^-1`` as a list of (color, element); commas inside brackets belong to the word."""
    moves = []
    for item in split_top_level(text):
        if not item.strip():
            continue
        color_text, sep, word_text = item.partition(":")
        if not sep:
            raise InputError(f"Move {item.strip()!r} is not of the form color:element.")
        try:
            color = Color.from_str(color_text)
        except ValueError as e:
            raise InputError(str(e))
        moves.append((color, parse_word(group, word_text)))
    return moves


def _color(config: RunConfig) -> Color:
    try:
        return Color.from_str(config.color)
    except ValueError as e:
        raise InputError(str(e))


def go_enumerate(config: RunConfig) -> list[str]:
    group = _group(config)
    window = _window(config, group)
    basis = enumerate_admissible(window, config.depth, cap=config.enumeration_cap, threads=config.threads)
    TerminalPrinter.print_result(f"{len(basis)} admissible states up to depth {config.depth} ({basis.tag})")
    return [_write_text(config, "go_states.txt", serialize_states(group, config.radius, basis.states))]


def go_play(config: RunConfig) -> list[str]:
    group = _group(config)
    if not config.moves:
        raise InputError("go play needs a move list (--moves 'black:s, white:s^-1').")
    window = _window(config, group)
    states = [GoState()]
    for color, g in _parse_moves(group, config.moves):
        states.append(play(states[-1], color, g, window))
    TerminalPrinter.print_result(f"{len(states) - 1} moves played, {len(states[-1].stones)} stones on the board")
    return [_write_text(config, "go_play.txt", serialize_states(group, config.radius, states))]


def go_matrix(config: RunConfig) -> list[str]:
    group = _group(config)
    window = _window(config, group)
    color = _color(config)
    g = parse_word(group, config.vertex)
    window.require_interior(g, "Move vertex")
    basis = enumerate_admissible(window, config.depth, cap=config.enumeration_cap, threads=config.threads)
    op = move_matrix(color, g, basis, window)
    vertex = format_element(group, g)
    TerminalPrinter.print_result(f"{color.label} move at {vertex}: {op.dimension} states, {op.nnz} entries")
    stem = f"go_{color.label}_{_file_stem(vertex)}"
    return [
        _write_text(config, "go_states.txt", serialize_states(group, config.radius, basis.states)),
        write_operator(op, _output_path(config, f"{stem}.mtx")),
    ]


# complex


def _complex(config: RunConfig, group: MarkedGroup) -> CayleyComplex:
    cayley_complex = build_complex(group, config.radius, size_cap=config.block_cap, threads=config.threads)
    if cayley_complex.pruned:
        TerminalPrinter.print_flag(
            f"{cayley_complex.pruned} search branches were cut at the block cap {config.block_cap}"
        )
    return cayley_complex


def _types_text(cayley_complex: CayleyComplex) -> str:
    group = cayley_complex.group
    lines = _header(
        group,
        radius=cayley_complex.radius,
        top_dimension=cayley_complex.top_dimension,
        types=len(cayley_complex.cell_types),
        pruned=cayley_complex.pruned,
    )
    lines.append("type\tdimension\tneighbor_count\trepresentative")
    for t in cayley_complex.cell_types:
        lines.append(f"{t.index}\t{t.dimension}\t{t.neighbor_count}\t{format_block(group, t.representative)}")
    return "\n".join(lines) + "\n"


def complex_build(config: RunConfig) -> list[str]:
    group = _group(config)
    cayley_complex = _complex(config, group)
    lines = _header(group, radius=config.radius, cells=len(cayley_complex.cells), pruned=cayley_complex.pruned)
    lines.append("type\tcell")
    for cell in cayley_complex.cells:
        cell_type, _ = cayley_complex.type_of(cell)
        lines.append(f"{cell_type.index}\t{format_block(group, cell)}")
    TerminalPrinter.print_result(f"{len(cayley_complex.cells)} maximal cells, {len(cayley_complex.cell_types)} types")
    paths = [_write_text(config, "complex_cells.txt", "\n".join(lines) + "\n")]
    paths.append(_write_text(config, "complex_types.txt", _types_text(cayley_complex)))
    return paths + export_complex(cayley_complex, config.output_dir)


def complex_types(config: RunConfig) -> list[str]:
    group = _group(config)
    cayley_complex = _complex(config, group)
    TerminalPrinter.print_result(
        f"{len(cayley_complex.cell_types)} cell type(s), neighbor counts {cayley_complex.neighbor_counts()}"
    )
    return [_write_text(config, "complex_types.txt", _types_text(cayley_complex))]


# life


def _initial_state(config: RunConfig, group: MarkedGroup, cayley_complex: CayleyComplex) -> LifeState:
    if config.state:
        with open(config.state, "r", encoding="utf-8") as f:
            return parse_state(group, f.read())
    rng = np.random.default_rng(config.seed)
    keep = rng.random(len(cayley_complex.cells)) < config.density
    return LifeState.of(cell for cell, alive in zip(cayley_complex.cells, keep) if alive)


def life_run(config: RunConfig) -> list[str]:
    group = _group(config)
    cayley_complex = _complex(config, group)
    rule = parse_rule(config.rule, cayley_complex.neighbor_counts())
    state = _initial_state(config, group, cayley_complex)
    history = run(state, rule, cayley_complex, config.generations, threads=config.threads)
    TerminalPrinter.print_result(f"{len(history) - 1} generations, alive counts {[len(s) for s in history]}")
    return [
        _write_text(config, "life_rule.txt", format_rule(rule)),
        _write_text(config, "life_run.txt", format_states(group, history, label="generation")),
    ]


def life_matrix(config: RunConfig) -> list[str]:
    group = _group(config)
    cayley_complex = _complex(config, group)
    counts = cayley_complex.neighbor_counts()
    rule = parse_rule(config.rule, counts)
    basis = enumerate_life_states(cayley_complex.cells, config.max_alive, cap=config.enumeration_cap, label="core")
    op = step_matrix(rule, basis, cayley_complex, threads=config.threads)
    fibers = fiber_report(op)
    space = rule_space_report(counts)
    TerminalPrinter.print_result(f"{len(basis)} states, {len(op.mask)} masked columns, max fiber {fibers.max_fiber}")
    if not space.counts_agree:
        TerminalPrinter.print_flag("Admissible rule counts differ from the closed-form counts, see life_rule_space.csv")
    fiber_lines = [
        f"# basis: {basis.tag}",
        f"# masked_columns: {fibers.masked_columns}",
        f"# injective: {str(fibers.injective).lower()}",
        "fiber_size\trows",
    ] + [f"{size}\t{rows}" for size, rows in fibers.histogram.items()]
    return [
        _write_text(config, "life_basis.txt", format_states(group, basis.states, label="state")),
        write_operator(op, _output_path(config, "life_step.mtx")),
        _write_text(config, "life_fibers.txt", "\n".join(fiber_lines) + "\n"),
        _write_frame(config, "life_rule_space.csv", space.to_frame()),
    ]


# truncated algebra


def _letter(config: RunConfig, group: MarkedGroup) -> int:
    if config.generator is None:
        return 1
    return parse_letter(group, config.generator)


def trunc_ops(config: RunConfig) -> list[str]:
    group = _group(config)
    window = _window(config, group)
    letter = _letter(config, group)
    u, x = generator_operators(group, letter, window)
    stem = _file_stem(letter_name(group, letter))
    TerminalPrinter.print_result(f"U and X of {letter_name(group, letter)} on {len(window)} elements ({window.tag})")
    return [
        write_operator(u, _output_path(config, f"trunc_U_{stem}.mtx")),
        write_operator(x, _output_path(config, f"trunc_X_{stem}.mtx")),
    ]


def trunc_defect(config: RunConfig) -> list[str]:
    group = _group(config)
    window = _window(config, group)
    report = identity_defect(group, _letter(config, group), window)
    support = ", ".join(format_element(group, g) for g in report.support) or "(none)"
    TerminalPrinter.print_result(f"Defect support on the interior: {support}")
    if not report.identity_only:
        TerminalPrinter.print_flag("The defect is not supported at the identity alone")
    return [
        _write_text(config, "trunc_defect.txt", report.to_text(group)),
        write_operator(report.defect, _output_path(config, "trunc_defect.mtx")),
    ]


# circle


def _circle_word(config: RunConfig):
    if config.word is None:
        raise InputError("This command needs a word in a and b (--word).")
    return parse_circle_word(config.word, config.rank)


def circle_eval(config: RunConfig) -> list[str]:
    word = _circle_word(config)
    xs = halton_points(config.samples)
    values = eval_word(word, config.theta, xs)
    paths = [_write_frame(config, "circle_eval.csv", pd.DataFrame({"x": xs, "value": values}))]
    if word.letters:
        scan = fixed_point_scan(word, config.theta)
        TerminalPrinter.print_result(f"{scan.crossings} crossing and {scan.touches} touching fixed points")
        paths.append(_write_frame(config, "circle_fixed_points.csv", pd.DataFrame({"x": list(scan.points)})))
    return paths


def circle_defect(config: RunConfig) -> list[str]:
    if config.word is not None:
        word = _circle_word(config)
        defect = relation_defect(word, config.theta, config.samples)
        frame = pd.DataFrame([{"word": str(word), "length": len(word), "defect": defect}])
    else:
        frame = faithfulness_sweep(
            config.theta, config.count, config.max_length, config.rank, config.samples, config.seed
        )
    smallest = float(frame["defect"].min()) if not frame.empty else 0.0
    TerminalPrinter.print_result(f"Smallest relation defect over {len(frame)} word(s): {smallest:.3e}")
    return [_write_frame(config, "circle_defect.csv", frame)]


def circle_measure(config: RunConfig) -> list[str]:
    report = measure_experiments(config.theta, orbit_sizes=config.orbit_sizes)
    TerminalPrinter.print_result(f"m([1/4,1/2]) / m([1/16,1/4]) = {report.mass_ratio:.6f}")
    if report.ratio_flagged:
        TerminalPrinter.print_flag(f"Lebesgue measure does not give the ratio {report.stated_ratio}")
    return report.write_csv(config.output_dir)


# operator lab


def _matrix_paths(config: RunConfig) -> tuple[str, ...]:
    if not config.matrices:
        raise InputError("This command needs at least one Matrix Market file (--matrices).")
    return config.matrices


def _operators(config: RunConfig):
    return [read_operator(path) for path in _matrix_paths(config)]


def lab_spectrum(config: RunConfig) -> list[str]:
    paths = []
    for path, op in zip(config.matrices, _operators(config)):
        result = spectrum(op, dense_cap=config.dense_cap, unmasked_only=config.unmasked_only)
        TerminalPrinter.print_result(f"{path}: {len(result)} eigenvalues, hermitian={result.hermitian}")
        frame = pd.DataFrame(result.to_rows(), columns=["real", "imag"])
        stem = _file_stem(os.path.splitext(os.path.basename(path))[0])
        paths.append(_write_frame(config, f"lab_spectrum_{stem}.csv", frame))
    return paths


def lab_commutant(config: RunConfig) -> list[str]:
    estimate = commutant_dim_estimate(_operators(config), cap=config.commutant_cap)
    TerminalPrinter.print_result(f"Commutant dimension {estimate.dimension} on {estimate.size} unmasked indices")
    header = "".join(f"# matrix: {path}\n" for path in config.matrices)
    return [_write_text(config, "lab_commutant.txt", header + estimate.to_text())]


# dry run


def validate_inputs(config: RunConfig, command: str) -> None:
    """
    Parses the textual inputs a command needs without building groups, complexes or operators.

    :raises InputError: If an input cannot be parsed.
    :raises FileNotFoundError: If an input file is missing.
    """
    area = command.split()[0]
    if area in ("group", "go", "complex", "life", "trunc"):
        parse_presentation(_require_group_text(config))
    if command == "go play" and not config.moves:
        raise InputError("go play needs a move list (--moves 'black:s, white:s^-1').")
    if area == "go":
        _color(config)
    if area == "circle" and (command == "circle eval" or config.word is not None):
        _circle_word(config)
    if area == "lab":
        for path in _matrix_paths(config):
            if not os.path.isfile(path):
                raise FileNotFoundError(f"Matrix file {path} does not exist")
    if area == "life" and config.state and not os.path.isfile(config.state):
        raise FileNotFoundError(f"State file {config.state} does not exist")


COMMANDS: dict[str, dict[str, Handler]] = {
    "group": {"ball": group_ball, "icc": group_icc},
    "go": {"enumerate": go_enumerate, "play": go_play, "matrix": go_matrix},
    "complex": {"build": complex_build, "types": complex_types},
    "life": {"run": life_run, "matrix": life_matrix},
    "trunc": {"ops": trunc_ops, "defect": trunc_defect},
    "circle": {"eval": circle_eval, "defect": circle_defect, "measure": circle_measure},
    "lab": {"spectrum": lab_spectrum, "commutant": lab_commutant},
}
