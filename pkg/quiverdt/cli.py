"""Command-line front end.

Exit status is 0 on success, 1 when a check fails or a computation breaks an
integrity property, and 2 on bad input (malformed quiver, bad flags).
"""
import argparse
import json
import logging
import os
import sys
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Mapping,
    Optional,
    Sequence,
    TextIO,
    Tuple,
)

from quiverdt.exceptions import QuiverComputeError, QuiverInputError, RunConfigError
from quiverdt.executor import Executor, get_executor
from quiverdt.formatter import (
    format_dt_table,
    format_dt_text,
    format_series,
    format_series_text,
    format_verdict,
    format_verdict_text,
    format_words,
)
from quiverdt.grobner import check_quadratic_gb, default_degree_cap
from quiverdt.lieword import check_basis_character, one_vertex_basis
from quiverdt.motivic import (
    check_change_of_variables,
    check_numerical_koszulness,
    dt_invariants,
    motivic_series,
    poincare_A,
)
from quiverdt.partitions import PREFIX_RULES, check_partition_bijection
from quiverdt.quiver import Quiver, almost_n_regular, parse_quiver
from quiverdt.result import Verdict
from quiverdt.selftest import run_selftest
from quiverdt.typings import Json
from quiverdt.utils import is_none_or_int
from quiverdt.version import __version__

logger = logging.getLogger(__name__)

ENV_THREADS = "QUIVER_DT_THREADS"
FORMATS = ("json", "text")
SERIES_KINDS = ("motivic", "poincare")
SUBCOMMANDS = ("dt", "series", "koszul", "basis", "grobner", "partitions", "selftest")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

Outcome = Tuple[Json, List[str], bool]


def read_threads(environ: Mapping[str, str]) -> int:
    """Read the thread count from the environment; absent means 0.

    :raise quiverdt.exceptions.RunConfigError: If the value is not a
        non-negative integer.
    """
    raw = environ.get(ENV_THREADS, "").strip()
    if not raw:
        return 0
    try:
        threads = int(raw)
    except ValueError:
        raise RunConfigError(f"{ENV_THREADS} must be an integer, got {raw!r}")
    if threads < 0:
        raise RunConfigError(f"{ENV_THREADS} must be non-negative, got {threads}")
    return threads


class RunConfig:
    """Validated configuration of one command-line run.

    :param subcommand: One of :data:`SUBCOMMANDS`.
    :type subcommand: str
    :param quiver: Parsed quiver; required by every subcommand but selftest.
    :type quiver: quiverdt.quiver.Quiver | None
    :param order: Truncation order N >= 0.
    :type order: int
    :param degree_cap: Level bound of the Gröbner check; None for the default.
    :type degree_cap: int | None
    :param len_max: Largest word length, >= 1.
    :type len_max: int
    :param level_max: Largest level, >= 1.
    :type level_max: int
    :param output_format: "json" or "text".
    :type output_format: str
    :param threads: Worker threads; 0 selects serial evaluation.
    :type threads: int
    :param series_kind: "motivic" or "poincare" (series subcommand).
    :type series_kind: str
    :param prefix_rule: Partition order (partitions subcommand).
    :type prefix_rule: str
    :param full: Run the desk-scale self-test grids.
    :type full: bool
    :raise quiverdt.exceptions.RunConfigError: If a field is out of range.
    """

    __slots__ = (
        "subcommand",
        "quiver",
        "order",
        "degree_cap",
        "len_max",
        "level_max",
        "output_format",
        "threads",
        "series_kind",
        "prefix_rule",
        "full",
    )

    def __init__(
        self,
        subcommand: str,
        quiver: Optional[Quiver] = None,
        order: int = 4,
        degree_cap: Optional[int] = None,
        len_max: int = 4,
        level_max: int = 6,
        output_format: str = "text",
        threads: int = 0,
        series_kind: str = "motivic",
        prefix_rule: str = "larger",
        full: bool = False,
    ) -> None:
        if subcommand not in SUBCOMMANDS:
            raise RunConfigError(f"unknown subcommand {subcommand!r}")
        if quiver is None and subcommand != "selftest":
            raise RunConfigError(f"{subcommand} needs --quiver")
        if not is_none_or_int(order) or order is None:
            raise RunConfigError(f"order must be a non-negative integer, got {order}")
        if not is_none_or_int(degree_cap):
            raise RunConfigError(f"cap must be non-negative, got {degree_cap}")
        for label, bound in (("len", len_max), ("level", level_max)):
            if not is_none_or_int(bound) or bound < 1:
                raise RunConfigError(f"{label} must be a positive integer, got {bound}")
        if output_format not in FORMATS:
            raise RunConfigError(f"unknown format {output_format!r}")
        if not is_none_or_int(threads) or threads is None:
            raise RunConfigError(f"threads must be non-negative, got {threads}")
        if series_kind not in SERIES_KINDS:
            raise RunConfigError(f"unknown series {series_kind!r}")
        if prefix_rule not in PREFIX_RULES:
            raise RunConfigError(f"unknown prefix rule {prefix_rule!r}")
        self.subcommand = subcommand
        self.quiver = quiver
        self.order = order
        self.degree_cap = degree_cap
        self.len_max = len_max
        self.level_max = level_max
        self.output_format = output_format
        self.threads = threads
        self.series_kind = series_kind
        self.prefix_rule = prefix_rule
        self.full = full

    @classmethod
    def from_args(
        cls, args: argparse.Namespace, environ: Mapping[str, str]
    ) -> "RunConfig":
        source = getattr(args, "quiver", None)
        return cls(
            subcommand=args.subcommand,
            quiver=parse_quiver(source) if source is not None else None,
            order=args.order,
            degree_cap=args.cap,
            len_max=args.len,
            level_max=args.level,
            output_format=args.format,
            threads=read_threads(environ),
            series_kind=getattr(args, "which", "motivic"),
            prefix_rule=getattr(args, "prefix_rule", "larger"),
            full=getattr(args, "full", False),
        )

    @property
    def executor(self) -> Executor:
        return get_executor(self.threads)

    def one_vertex_loops(self) -> int:
        """Return the loop count of a one-vertex quiver with at least one loop."""
        q = self.quiver
        if q is None or q.n != 1 or q.loops(0) < 1:
            raise RunConfigError(
                f"{self.subcommand} needs a one-vertex quiver with at least one loop"
            )
        return q.loops(0)

    def __repr__(self) -> str:
        return f"<RunConfig {self.subcommand} {self.quiver!r}>"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", help="quiver JSON or path to a JSON file")
    common.add_argument("--order", type=int, default=4, help="truncation order N")
    common.add_argument("--cap", type=int, default=None, help="Gröbner level cap")
    common.add_argument("--len", type=int, default=4, help="largest word length")
    common.add_argument("--level", type=int, default=6, help="largest level")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="quiverdt",
        description="Motivic DT invariants and Koszul checks for symmetric quivers.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("dt", parents=[common], help="refined DT invariants")
    series = sub.add_parser("series", parents=[common], help="series coefficients")
    series.add_argument("--which", choices=SERIES_KINDS, default="motivic")
    sub.add_parser("koszul", parents=[common], help="Koszulness identities")
    sub.add_parser("basis", parents=[common], help="one-vertex Lie algebra basis")
    sub.add_parser("grobner", parents=[common], help="quadratic Gröbner basis check")
    partitions = sub.add_parser(
        "partitions", parents=[common], help="partition bijection check"
    )
    partitions.add_argument("--prefix-rule", choices=PREFIX_RULES, default="larger")
    selftest = sub.add_parser("selftest", parents=[common], help="acceptance report")
    selftest.add_argument("--full", action="store_true", help="desk-scale grids")
    return parser


def _verdicts_outcome(
    verdicts: Sequence[Verdict], extra: Optional[Json] = None
) -> Outcome:
    payload: Json = dict(extra or {})
    payload["verdicts"] = [format_verdict(v) for v in verdicts]
    return payload, [format_verdict_text(v) for v in verdicts], all(verdicts)


def _run_dt(config: RunConfig) -> Outcome:
    assert config.quiver is not None
    table = dt_invariants(config.quiver, config.order, config.executor)
    payload = {"quiver": config.quiver.to_json(), "order": config.order}
    payload.update(format_dt_table(table))
    return payload, format_dt_text(table), True


def _run_series(config: RunConfig) -> Outcome:
    assert config.quiver is not None
    build = motivic_series if config.series_kind == "motivic" else poincare_A
    series = build(config.quiver, config.order)
    payload = {"quiver": config.quiver.to_json(), "series": config.series_kind}
    payload.update(format_series(series))
    return payload, format_series_text(series), True


def _run_koszul(config: RunConfig) -> Outcome:
    assert config.quiver is not None
    verdicts = [
        check_change_of_variables(config.quiver, config.order),
        check_numerical_koszulness(config.quiver, config.order),
    ]
    return _verdicts_outcome(verdicts, {"quiver": config.quiver.to_json()})


def _run_basis(config: RunConfig) -> Outcome:
    m = config.one_vertex_loops()
    words = one_vertex_basis(m, config.len_max, config.level_max)
    verdict = check_basis_character(m, config.len_max, 2 * config.level_max)
    listing = format_words(words)
    payload, lines, ok = _verdicts_outcome([verdict], {"loops": m, "words": listing})
    text = [f"{w['word']}  degree {w['degree']}" for w in listing]
    return payload, text + lines, ok


def _run_grobner(config: RunConfig) -> Outcome:
    q = config.quiver
    assert q is not None
    cap = config.degree_cap if config.degree_cap is not None else default_degree_cap(q)
    verdict = check_quadratic_gb(q, cap, config.executor)
    regular = almost_n_regular(q, allow_zero=True)
    extra = {"quiver": q.to_json(), "cap": cap, "almost_regular": regular}
    return _verdicts_outcome([verdict], extra)


def _run_partitions(config: RunConfig) -> Outcome:
    m = config.one_vertex_loops()
    verdict = check_partition_bijection(
        m, config.len_max, config.level_max, config.prefix_rule
    )
    return _verdicts_outcome([verdict], {"loops": m, "prefix_rule": config.prefix_rule})


def _run_selftest(config: RunConfig) -> Outcome:
    verdicts = run_selftest(full=config.full, executor=config.executor)
    return _verdicts_outcome(verdicts, {"full": config.full})


HANDLERS: Dict[str, Callable[[RunConfig], Outcome]] = {
    "dt": _run_dt,
    "series": _run_series,
    "koszul": _run_koszul,
    "basis": _run_basis,
    "grobner": _run_grobner,
    "partitions": _run_partitions,
    "selftest": _run_selftest,
}


def _emit(config: RunConfig, payload: Json, lines: List[str], stream: TextIO) -> None:
    if config.output_format == "json":
        stream.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        stream.write("".join(line + "\n" for line in lines))


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> int:
    """Run one command and return its exit status.

    :param argv: Arguments without the program name; sys.argv by default.
    :type argv: [str] | None
    :param stdout: Output stream.
    :type stdout: io.TextIOBase | None
    :param stderr: Error stream.
    :type stderr: io.TextIOBase | None
    :param environ: Environment; os.environ by default.
    :type environ: dict | None
    :return: 0, 1 or 2.
    :rtype: int
    """
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_INPUT_ERROR
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, stream=err
    )
    try:
        config = RunConfig.from_args(args, os.environ if environ is None else environ)
        logger.debug("running %r", config)
        payload, lines, ok = HANDLERS[config.subcommand](config)
    except QuiverInputError as exc:
        err.write(f"error: {exc.message}\n")
        return EXIT_INPUT_ERROR
    except QuiverComputeError as exc:
        err.write(f"integrity failure: {exc.message}\n")
        return EXIT_CHECK_FAILED
    _emit(config, payload, lines, out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def main() -> Any:
    sys.exit(run())
