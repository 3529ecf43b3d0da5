"""Command-line front end: analyze, coords, sample, check.

Documents are plain key-value text with two-space indentation, every
number rendered at 12 significant digits, fields in a fixed order, so
identical inputs produce byte-identical output.

Exit codes: 0 ok, 1 invariant failure (check), 2 parse error,
3 contract violation (for example an unnormalized state without
--renormalize).
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import checks
from .entanglement import (
    classify,
    e_avg,
    partial_trace_keep,
    separability_2qubit,
)
from .errors import ContractViolationError
from .hopf_maps import (
    base_entanglement,
    h1_value,
    hopf_base,
    is_infinite,
    iterated_analysis,
)
from .qubit_states import (
    PureState,
    cut_state,
    format_amplitudes,
    format_number as _fmt,
    parse_amplitudes,
)
from .tolerances import CLI_NORM_ACCEPT, SEPARABILITY_TOL

EXIT_OK = 0
EXIT_INVARIANT_FAILURE = 1
EXIT_PARSE_ERROR = 2
EXIT_CONTRACT_VIOLATION = 3


def _fmt_vec(values) -> str:
    return " ".join(_fmt(float(v)) for v in values)


def _fmt_complex_vec(values) -> str:
    return " ".join(f"{_fmt(z.real)},{_fmt(z.imag)}" for z in values)


def _fmt_labeled_coords(coords) -> str:
    return " ".join(f"X{i + 1}={_fmt(float(v))}" for i, v in enumerate(coords))


def _load_state(spec: str, renormalize: bool) -> PureState:
    """Parse a state spec and apply the normalization policy."""
    amps = parse_amplitudes(spec)
    norm_sq = float(np.sum(np.abs(amps) ** 2))
    if norm_sq == 0.0:
        raise ValueError("state spec has zero norm")
    if abs(norm_sq - 1.0) > CLI_NORM_ACCEPT and not renormalize:
        raise ContractViolationError(
            f"state norm^2 = {norm_sq!r} deviates from 1 beyond {CLI_NORM_ACCEPT}; "
            "pass --renormalize to scale it"
        )
    return PureState(amps / np.sqrt(norm_sq))


def _h1_text(state: PureState) -> str:
    value = h1_value(state)
    if is_infinite(value):
        return "infinity"
    return _fmt_vec(value.coeffs)


def _density_text(matrix: np.ndarray) -> str:
    return _fmt_complex_vec(matrix.reshape(-1))


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _analyze_three(state: PureState, tol: float, lines: list[str]) -> None:
    lines.append("base:")
    for cut in (1, 2, 3):
        coords = hopf_base(cut_state(state, cut)).coords
        lines.append(f"  cut {cut}: {_fmt_labeled_coords(coords)}")
    lines.append("h1:")
    for cut in (1, 2, 3):
        lines.append(f"  cut {cut}: {_h1_text(cut_state(state, cut))}")
    lines.append("density:")
    for cut in (1, 2, 3):
        lines.append(f"  cut {cut}: {_density_text(partial_trace_keep(state, cut).matrix)}")
    report = classify(state, tol)
    lines.append("entanglement:")
    for cut, e in zip((1, 2, 3), report.e_per_cut):
        lines.append(f"  e cut {cut}: {_fmt(e)}")
    lines.append(f"  e avg: {_fmt(report.e_avg)}")
    lines.append(f"  minor measure: {_fmt(report.minor_measure)}")
    lines.append(f"  classification: {report.classification}")
    for cut, res in zip((1, 2, 3), report.residuals_per_cut):
        lines.append(f"  residuals cut {cut}: {_fmt_vec(res)}")
    chain = iterated_analysis(state, tol)
    lines.append("chain:")
    for index, stage in enumerate(chain.stages, start=1):
        sep = "yes" if stage.separable else "no"
        lines.append(
            f"  stage {index}: level={stage.level} e={_fmt(stage.e_value)} separable={sep}"
        )
    if chain.bloch_points:
        for index, point in enumerate(chain.bloch_points, start=1):
            lines.append(f"  bloch point {index}: {_fmt_vec(point.coords)}")
    else:
        lines.append("  bloch points: none")


def _analyze_two(state: PureState, tol: float, lines: list[str]) -> None:
    base = hopf_base(state)
    lines.append("base:")
    lines.append(f"  value: {_fmt_labeled_coords(base.coords)}")
    lines.append("h1:")
    lines.append(f"  value: {_h1_text(state)}")
    m = state.amplitudes.reshape(2, 2)
    lines.append("density:")
    lines.append(f"  first qubit: {_density_text(m @ m.conj().T)}")
    residual = separability_2qubit(state)
    lines.append("entanglement:")
    lines.append(f"  e: {_fmt(base_entanglement(base))}")
    lines.append(f"  residual: {_fmt(residual)}")
    lines.append(f"  separable: {'yes' if residual <= tol else 'no'}")


def _analyze_one(state: PureState, lines: list[str]) -> None:
    base = hopf_base(state)
    lines.append("base:")
    lines.append(f"  value: {_fmt_labeled_coords(base.coords)}")
    lines.append("h1:")
    lines.append(f"  value: {_h1_text(state)}")
    amps = state.amplitudes
    lines.append("density:")
    lines.append(f"  qubit: {_density_text(np.outer(amps, amps.conj()))}")


def cmd_analyze(args: argparse.Namespace) -> int:
    state = _load_state(args.state, args.renormalize)
    lines = [
        "input:",
        f"  spec: {args.state}",
        f"  n: {state.n}",
        f"  amplitudes: {format_amplitudes(state.amplitudes)}",
    ]
    if state.n == 3:
        _analyze_three(state, args.tol, lines)
    elif state.n == 2:
        _analyze_two(state, args.tol, lines)
    else:
        _analyze_one(state, lines)
    print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# coords
# ---------------------------------------------------------------------------

def cmd_coords(args: argparse.Namespace) -> int:
    state = _load_state(args.state, args.renormalize)
    if state.n == 3:
        coords = hopf_base(cut_state(state, args.cut)).coords
    else:
        if args.cut != 1:
            raise ContractViolationError(
                f"--cut {args.cut} is only available for 3-qubit states"
            )
        coords = hopf_base(state).coords
    sum_sq = float(coords @ coords)
    if args.csv:
        rows = ["coordinate,value"]
        rows += [f"X{i + 1},{_fmt(float(v))}" for i, v in enumerate(coords)]
        rows.append(f"sum_sq,{_fmt(sum_sq)}")
        print("\n".join(rows))
        return EXIT_OK
    lines = [
        "coordinates:",
        f"  spec: {args.state}",
        f"  n: {state.n}",
        f"  cut: {args.cut}",
    ]
    lines += [f"  X{i + 1}: {_fmt(float(v))}" for i, v in enumerate(coords)]
    lines.append(f"  sum sq: {_fmt(sum_sq)}")
    print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# sample
# ---------------------------------------------------------------------------

def _sample_e(state: PureState) -> float:
    if state.n == 3:
        return e_avg(state)
    if state.n == 2:
        return base_entanglement(hopf_base(state))
    return 0.0


def cmd_sample(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(args.seed)
    dim = 2 ** args.n
    values = np.empty(args.count)
    for k in range(args.count):
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        values[k] = _sample_e(PureState(z / np.linalg.norm(z)))
    if args.histogram:
        edges = np.linspace(0.0, 1.0, args.histogram + 1)
        counts, _ = np.histogram(values, bins=edges)
        rows = ["bin_lo,bin_hi,count"]
        rows += [
            f"{_fmt(lo)},{_fmt(hi)},{int(c)}"
            for lo, hi, c in zip(edges[:-1], edges[1:], counts)
        ]
        print("\n".join(rows))
    else:
        rows = ["index,e_avg"]
        rows += [f"{k},{_fmt(v)}" for k, v in enumerate(values)]
        print("\n".join(rows))
    return EXIT_OK


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    results = checks.run_all(args.trials, args.seed)
    failed = [r for r in results if not r.passed]
    for r in results:
        status = "pass" if r.passed else "FAIL"
        print(
            f"suite {r.name}: {r.trials} trials, {r.failures} failures, "
            f"max error {_fmt(r.max_error)}: {status}"
        )
        if not r.passed and r.counterexample:
            print(f"  counterexample: {r.counterexample}")
    if failed:
        print(f"check: FAIL ({len(failed)} of {len(results)} suites failed)")
        return EXIT_INVARIANT_FAILURE
    print(f"check: pass ({len(results)} suites)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfq",
        description=(
            "Analyze 1-3 qubit pure states through the Hopf fibrations: "
            "base coordinates, ratio values, entanglement measures and "
            "separability classification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_state_options(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "state",
            help=(
                "state spec: re,im pairs in basis order, a named constant "
                "(ghz, w, bell00), a basis label like '|010>', or @file"
            ),
        )
        p.add_argument(
            "--renormalize",
            action="store_true",
            help="scale inputs whose norm deviates beyond the acceptance threshold",
        )

    p_analyze = sub.add_parser("analyze", help="full analysis document for a state")
    add_state_options(p_analyze)
    p_analyze.add_argument(
        "--tol", type=float, default=SEPARABILITY_TOL,
        help="separability residual tolerance (default %(default)g)",
    )
    p_analyze.set_defaults(fn=cmd_analyze)

    p_coords = sub.add_parser("coords", help="base coordinates of a state")
    add_state_options(p_coords)
    p_coords.add_argument("--cut", type=int, default=1, choices=(1, 2, 3),
                          help="qubit moved to the base role (3-qubit states)")
    p_coords.add_argument("--csv", action="store_true", help="emit CSV rows")
    p_coords.set_defaults(fn=cmd_coords)

    p_sample = sub.add_parser("sample", help="Monte-Carlo entanglement statistics")
    p_sample.add_argument("n", type=int, choices=(1, 2, 3), help="qubit count")
    p_sample.add_argument("count", type=int, help="number of Haar-random samples")
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--histogram", type=int, default=0, metavar="BINS",
                          help="emit a histogram with this many bins instead of per-sample rows")
    p_sample.set_defaults(fn=cmd_sample)

    p_check = sub.add_parser("check", help="run the invariant self-test suites")
    p_check.add_argument("--trials", type=int, default=2000)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.set_defaults(fn=cmd_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ContractViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT_VIOLATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
