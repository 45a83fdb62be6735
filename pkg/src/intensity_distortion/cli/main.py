"""Command-line front end for distortion, rules, instances and sweeps."""

import argparse
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

import pandas as pd
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.table import Table

from intensity_distortion import get_version
from intensity_distortion.core.config import (
    Config,
    ensure_config_exists,
    update_config_value,
)
from intensity_distortion.core.metric import (
    ConsistencyMode,
    check_consistency,
    check_triangle,
    scaled,
    social_cost,
)
from intensity_distortion.core.profile import (
    ElicitationMode,
    Profile,
    format_profile,
    intensity_rank,
)
from intensity_distortion.core.rational import (
    ExtendedValue,
    format_extended,
    format_rational,
    parse_rational,
    parse_rational_list,
    parse_rational_range,
)
from intensity_distortion.distortion.engine import (
    alternative_distortions,
    distortion,
    intensity_aware_opt,
)
from intensity_distortion.distortion.poii import (
    EnumerationBudget,
    intensity_oblivious_opt,
    poii,
)
from intensity_distortion.file_rw.readers import read_metric_csv, read_profile_file
from intensity_distortion.file_rw.writers import (
    write_metric_csv,
    write_profile_file,
    write_table_csv,
)
from intensity_distortion.instances import InstanceKind, generate, verify
from intensity_distortion.line import tal_winner
from intensity_distortion.matching import (
    general_winner,
    plurality_scores,
    psm_winner,
    robust_outcome,
)
from intensity_distortion.scoring_game import (
    distortion_bound,
    optimal_vector,
    padded_scores,
    payoff_matrix,
    recurrences,
    solve_game,
    verify_equilibrium,
)
from intensity_distortion.sweeps import (
    conjecture_table,
    line_bound_table,
    line_general_table,
    lower_bound_table,
    poii_bound_table,
    upper_bound_table,
)

logger = logging.getLogger(__name__)

console = Console()
err_console = Console(stderr=True)

# Catppuccin-inspired color scheme
COLORS = {
    "primary": "#cba6f7",  # Purple
    "secondary": "#89b4fa",  # Blue
    "success": "#a6e3a1",  # Green
    "warning": "#f9e2af",  # Yellow
    "error": "#f38ba8",  # Red
    "text": "#cdd6f4",  # Text
    "subtext": "#a6adc8",  # Subtext
    "surface": "#313244",  # Surface
}


def _int_list(text: str) -> list[int]:
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Expected integers like 5,10, got {text!r}") from e
    if not values:
        raise argparse.ArgumentTypeError(f"Empty integer list: {text!r}")
    return values


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _rational_grid(text: str) -> list[Fraction]:
    try:
        return parse_rational_range(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intensity-distortion",
        description="Exact metric distortion for rankings with preference intensities",
    )
    parser.add_argument(
        "-v", "--version", action="version", version=f"%(prog)s {get_version()}"
    )
    parser.add_argument(
        "--decimal",
        type=int,
        metavar="DIGITS",
        help="Print decimals with DIGITS places instead of exact fractions",
    )
    parser.add_argument("--verbose", action="store_true", help="Show debug logging")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    profile_parent = argparse.ArgumentParser(add_help=False)
    profile_parent.add_argument("--profile", type=Path, required=True, help="Profile file")
    profile_parent.add_argument("--alpha", type=_rational, help="Override the profile's alpha")
    profile_parent.add_argument(
        "--mode",
        choices=[mode.value for mode in ElicitationMode],
        help="Override the profile's elicitation mode",
    )

    budget_parent = argparse.ArgumentParser(add_help=False)
    budget_parent.add_argument(
        "--budget", type=int, help="Maximum number of intensity assignments to enumerate"
    )

    dist = commands.add_parser(
        "distortion",
        aliases=["distort"],
        parents=[profile_parent],
        help="Exact distortion of one or all alternatives",
    )
    dist.add_argument("--alt", help="Alternative name; all alternatives when omitted")
    dist.set_defaults(handler=_cmd_distortion)

    metric = commands.add_parser(
        "metric",
        parents=[profile_parent],
        help="Check a distance table against the profile and report social costs",
    )
    metric.add_argument("--metric", type=Path, required=True, help="Metric CSV file")
    metric.add_argument(
        "--consistency",
        choices=[mode.value for mode in ConsistencyMode],
        help="Consistency mode; follows the profile's elicitation mode when omitted",
    )
    metric.set_defaults(handler=_cmd_metric)

    opt = commands.add_parser(
        "opt", parents=[profile_parent, budget_parent], help="Optimal alternative"
    )
    opt.add_argument("which", choices=["aware", "oblivious"])
    opt.set_defaults(handler=_cmd_opt)

    poii_cmd = commands.add_parser(
        "poii", parents=[profile_parent, budget_parent], help="Price of ignoring intensities"
    )
    poii_cmd.set_defaults(handler=_cmd_poii)

    rule = commands.add_parser("rule", parents=[profile_parent], help="Run a voting rule")
    rule.add_argument("which", choices=["psm", "general", "robust", "tal"])
    rule.add_argument("--scores", type=parse_rational_list, help="Scoring vector s1,s2,...")
    rule.add_argument("--k", type=int, help="Use the optimal scores for rank k")
    rule.add_argument("--ell", type=int, help="Rank threshold of the robust rule")
    rule.set_defaults(handler=_cmd_rule)

    game = commands.add_parser("game", help="Scoring-vector recurrences and matrix game")
    game.add_argument("which", choices=["recurrence", "matrix", "verify"])
    game.add_argument("--k", type=int, required=True)
    game.add_argument("--alpha", type=_rational)
    game.set_defaults(handler=_cmd_game)

    instance = commands.add_parser(
        "instance", parents=[budget_parent], help="Lower-bound instances"
    )
    instance.add_argument("which", choices=["generate", "verify", "dump"])
    instance.add_argument(
        "--kind", required=True, choices=[kind.value for kind in InstanceKind]
    )
    instance.add_argument("--m", type=int, default=2)
    instance.add_argument("--k", type=int)
    instance.add_argument("--alpha", type=_rational)
    instance.add_argument("--out", type=Path, help="Output directory for dump")
    instance.set_defaults(handler=_cmd_instance)

    sweep = commands.add_parser("sweep", help="Bound tables as CSV")
    sweep.add_argument("which", choices=["bounds", "upper", "line", "line-general", "poii"])
    sweep.add_argument("--m", type=int, default=10)
    sweep.add_argument("--ms", type=_int_list)
    sweep.add_argument("--ells", type=_int_list, default=list(range(1, 11)))
    sweep.add_argument("--alphas", type=_rational_grid, required=True)
    sweep.add_argument("--out", type=Path)
    sweep.set_defaults(handler=_cmd_sweep)

    conjecture = commands.add_parser(
        "conjecture", help="Max-min distortion of the two-alternative line rule"
    )
    conjecture.add_argument("--total", type=int)
    conjecture.add_argument("--alphas", type=_rational_grid, required=True)
    conjecture.add_argument("--out", type=Path)
    conjecture.set_defaults(handler=_cmd_conjecture)

    config = commands.add_parser("config", help="Show or change defaults")
    config_commands = config.add_subparsers(dest="config_command", required=True)
    config_commands.add_parser("show")
    config_set = config_commands.add_parser("set")
    config_set.add_argument("key")
    config_set.add_argument("value")
    config.set_defaults(handler=_cmd_config)

    return parser


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _fmt(value: Fraction | ExtendedValue, digits: int) -> str:
    if isinstance(value, ExtendedValue):
        return format_extended(value, digits)
    return format_rational(value, digits)


def _load_profile(args: argparse.Namespace) -> Profile:
    profile = read_profile_file(args.profile)
    if args.alpha is not None:
        profile = profile.with_alpha(args.alpha)
    if args.mode is not None:
        profile = profile.with_mode(ElicitationMode(args.mode))
    return profile


def _budget(args: argparse.Namespace, config: Config) -> EnumerationBudget:
    budget = config.budget()
    if getattr(args, "budget", None) is not None:
        budget = EnumerationBudget(
            budget.max_alternatives, budget.max_agents, args.budget
        )
    return budget


def _alpha(args: argparse.Namespace, config: Config) -> Fraction:
    return args.alpha if args.alpha is not None else parse_rational(config.alpha)


def _print_table(title: str, frame: pd.DataFrame) -> None:
    table = Table(title=title, style=COLORS["surface"])
    for column in frame.columns:
        table.add_column(
            str(column), style=COLORS["primary"], header_style=COLORS["secondary"]
        )
    for i, row in enumerate(frame.itertuples(index=False)):
        row_style = COLORS["text"] if i % 2 == 0 else COLORS["subtext"]
        table.add_row(*(escape(str(value)) for value in row), style=row_style)
    console.print(table)


def _emit(frame: pd.DataFrame, title: str, out: Path | None) -> None:
    if out is None:
        _print_table(title, frame)
        return
    path = write_table_csv(frame, out)
    console.print(f"[{COLORS['success']}]Wrote {len(frame)} rows to[/] {escape(str(path))}")


def _cmd_distortion(args: argparse.Namespace, config: Config, digits: int) -> int:
    profile = _load_profile(args)
    if args.alt is not None:
        value = distortion(profile, profile.alternative_index(args.alt))
        console.print(_fmt(value, digits))
        return 0

    values = alternative_distortions(profile)
    best = min(range(len(values)), key=lambda a: (values[a], a))
    frame = pd.DataFrame(
        {
            "alternative": profile.alternative_names,
            "distortion": [_fmt(value, digits) for value in values],
            "optimal": ["*" if a == best else "" for a in range(len(values))],
        }
    )
    _print_table(f"Distortion (alpha = {format_rational(profile.alpha)})", frame)
    return 0


def _cmd_metric(args: argparse.Namespace, config: Config, digits: int) -> int:
    profile = _load_profile(args)
    metric, header = read_metric_csv(args.metric)
    names = profile.alternative_names
    if header is not None and header != names:
        raise ValueError(
            f"Metric columns {', '.join(header)} do not match the profile's "
            f"alternatives {', '.join(names)}"
        )
    if args.consistency is not None:
        mode = ConsistencyMode(args.consistency)
    elif profile.mode is ElicitationMode.MANDATORY:
        mode = ConsistencyMode.MANDATORY_CLOSED
    else:
        mode = ConsistencyMode.VOLUNTARY

    violations = check_consistency(profile, metric, mode)
    triangle = check_triangle(metric)

    costs = [social_cost(metric, a) for a in range(metric.num_alternatives)]
    columns = {
        "alternative": names,
        "social cost": [_fmt(cost, digits) for cost in costs],
    }
    lowest = min(costs)
    if lowest > 0:
        # optimum rescaled to cost 1, so this column reads as cost ratios
        normalized = scaled(metric, 1 / lowest)
        columns["ratio"] = [
            _fmt(social_cost(normalized, a), digits) for a in range(len(costs))
        ]
    else:
        logger.warning("An alternative has zero social cost; ratios are undefined")
    _print_table(f"Social cost ({mode})", pd.DataFrame(columns))

    for v in violations:
        err_console.print(
            f"[{COLORS['warning']}]agent {v.agent + 1}, flag {v.position}:[/] "
            f"{v.kind} ({escape(v.detail)})"
        )
    for t in triangle:
        err_console.print(
            f"[{COLORS['warning']}]triangle:[/] d({t.agent + 1}, {escape(names[t.alt])}) "
            f"exceeds the path via agent {t.other_agent + 1} and "
            f"{escape(names[t.via])} by {_fmt(-t.slack, digits)}"
        )
    if violations or triangle:
        err_console.print(
            f"[{COLORS['error']}]{len(violations)} consistency and "
            f"{len(triangle)} triangle violations[/]"
        )
        return 1
    console.print(f"[{COLORS['success']}]consistent ({mode})[/]")
    return 0


def _cmd_opt(args: argparse.Namespace, config: Config, digits: int) -> int:
    profile = _load_profile(args)
    if args.which == "aware":
        alt, value = intensity_aware_opt(profile)
        label = "distortion"
    else:
        alt, value = intensity_oblivious_opt(profile, _budget(args, config))
        label = "worst-case poii"
    console.print(
        f"{escape(profile.alternative_names[alt])} ({label} {_fmt(value, digits)})"
    )
    return 0


def _cmd_poii(args: argparse.Namespace, config: Config, digits: int) -> int:
    profile = _load_profile(args)
    console.print(_fmt(poii(profile, _budget(args, config)), digits))
    return 0


def _cmd_rule(args: argparse.Namespace, config: Config, digits: int) -> int:
    profile = _load_profile(args)
    m = profile.num_alternatives
    names = profile.alternative_names

    if args.which == "psm":
        if args.scores is not None and args.k is not None:
            raise ValueError("Give either --scores or --k, not both")
        if args.scores is not None:
            scores = args.scores
        elif args.k is not None:
            scores = padded_scores(args.k, profile.alpha, m)
        else:
            scores = plurality_scores(m)
        winner = psm_winner(profile, scores)
        console.print(escape(names[winner]))
        if args.k is not None:
            bound = distortion_bound(args.k, profile.alpha)
            console.print(f"bound: {_fmt(bound, digits)}")
    elif args.which == "general":
        winner = general_winner(profile)
        ell_max = max(intensity_rank(p) for p in profile.preferences) if m > 1 else 0
        console.print(escape(names[winner]))
        console.print(f"bound: {_fmt(distortion_bound(ell_max, profile.alpha), digits)}")
    elif args.which == "robust":
        if args.ell is None:
            raise ValueError("The robust rule needs --ell")
        outcome = robust_outcome(profile, args.ell)
        console.print(escape(names[outcome.winner]))
        console.print(f"beta: {_fmt(outcome.beta, digits)}")
        console.print(f"bound: {_fmt(outcome.bound, digits)}")
    else:
        winner, value = tal_winner(profile)
        console.print(escape(names[winner]))
        console.print(f"distortion: {_fmt(value, digits)}")
    return 0


def _cmd_game(args: argparse.Namespace, config: Config, digits: int) -> int:
    alpha = _alpha(args, config)
    if args.which == "recurrence":
        solution = recurrences(args.k, alpha)
        frame = pd.DataFrame(
            {
                "j": [str(j) for j in range(1, args.k + 1)],
                "w": [_fmt(w, digits) for w in solution.w],
                "t": [_fmt(t, digits) for t in solution.t],
            }
        )
        _print_table(f"Recurrences (alpha = {format_rational(alpha)})", frame)
        if alpha > 0:
            scores = optimal_vector(args.k, alpha).r
            console.print("r: " + ", ".join(_fmt(s, digits) for s in scores))
    elif args.which == "matrix":
        for row in payoff_matrix(args.k, alpha):
            console.print(" ".join(_fmt(value, digits) for value in row))
        console.print(f"value: {_fmt(solve_game(args.k, alpha).value, digits)}")
    else:
        value = verify_equilibrium(args.k, alpha)
        console.print(f"t_{args.k} = {_fmt(value, digits)}")
        console.print(f"[{COLORS['success']}]equilibrium: OK[/]")
    return 0


def _cmd_instance(args: argparse.Namespace, config: Config, digits: int) -> int:
    instance = generate(
        args.kind, args.m, _alpha(args, config), k=args.k, budget=_budget(args, config)
    )
    names = instance.profile.alternative_names

    if args.which == "generate":
        console.print(escape(format_profile(instance.profile)), end="")
        console.print(f"chosen: {escape(names[instance.chosen])}")
        console.print(f"reference: {escape(names[instance.reference])}")
        console.print(f"expected: {_fmt(instance.expected_ratio, digits)}")
        console.print(f"witness ratio: {_fmt(instance.witness_ratio, digits)}")
        return 0

    if args.which == "verify":
        report = verify(instance)
        frame = pd.DataFrame(
            {
                "check": [check.name for check in report.checks],
                "result": ["ok" if check.passed else "FAILED" for check in report.checks],
                "detail": [check.detail for check in report.checks],
            }
        )
        _print_table(f"{instance.kind} m={args.m}", frame)
        if report.passed:
            console.print(f"[{COLORS['success']}]verified[/]")
            return 0
        err_console.print(
            f"[{COLORS['error']}]{len(report.failures())} checks failed[/]"
        )
        return 1

    out = args.out if args.out is not None else Path(config.output_dir)
    if not out.is_dir():
        raise FileNotFoundError(f"Output directory does not exist: {out}")
    stem = f"{instance.kind}_m{args.m}"
    profile_path = write_profile_file(instance.profile, out / f"{stem}.prof")
    console.print(f"[{COLORS['success']}]Wrote[/] {escape(str(profile_path))}")
    if instance.witness_metric is not None:
        metric_path = write_metric_csv(
            instance.witness_metric, out / f"{stem}_metric.csv", names
        )
        console.print(f"[{COLORS['success']}]Wrote[/] {escape(str(metric_path))}")
    return 0


def _cmd_sweep(args: argparse.Namespace, config: Config, digits: int) -> int:
    if args.which == "bounds":
        frame = lower_bound_table(args.m, args.alphas, digits)
    elif args.which == "upper":
        frame = upper_bound_table(args.ells, args.alphas, digits)
    elif args.which == "line":
        frame = line_bound_table(args.alphas, digits)
    elif args.which == "line-general":
        frame = line_general_table(args.ms or [10, 25, 50], args.alphas, digits)
    else:
        frame = poii_bound_table(args.ms or [2, 4, 6], args.alphas, digits)
    _emit(frame, f"sweep {args.which}", args.out)
    return 0


def _cmd_conjecture(args: argparse.Namespace, config: Config, digits: int) -> int:
    total = args.total if args.total is not None else config.conjecture_total
    frame = conjecture_table(total, args.alphas, digits)
    _emit(frame, f"Two-alternative line sweep over {total} agents", args.out)
    return 0


def _cmd_config(args: argparse.Namespace, config: Config, digits: int) -> int:
    if args.config_command == "set":
        config = update_config_value(args.key, args.value)
        console.print(f"[{COLORS['success']}]Updated[/] {escape(args.key)}")
    for key, value in config.to_dict().items():
        console.print(f"[{COLORS['secondary']}]{key}[/] = {escape(str(value))}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    _setup_logging(args.verbose)
    try:
        config = ensure_config_exists()
        digits = args.decimal if args.decimal is not None else config.decimal_digits
        if digits < 0:
            raise ValueError(f"--decimal must be non-negative, got {digits}")
        return args.handler(args, config, digits)
    except (ValueError, RuntimeError, OSError) as e:
        logger.debug("Command failed", exc_info=True)
        err_console.print(f"[{COLORS['error']}]Error:[/] {escape(str(e))}")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
