import argparse
import sys

from core.config import Config
from core.data_bus import DATA_BUS
from core.debugger import Debugger
from core.event_bus import EventBus
from enums.config_key import ConfigKey
from enums.data_bus_key import DataBusKey
from enums.matrix_kind import MatrixKind
from ui.commands import cmd_check, cmd_gen, cmd_subdivide, cmd_verify_witness


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="copositivity",
        description="Exact copositivity decisions for rational symmetric matrices.",
    )
    parser.add_argument(
        "--config", default="config.yaml", help="YAML configuration file"
    )
    parser.add_argument("--verbose", action="store_true", help="log to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser("check", help="decide copositivity of a matrix file")
    check.add_argument("path")
    check.add_argument(
        "--strict", action="store_true", help="decide strict copositivity"
    )
    check.add_argument("--json", action="store_true", help="emit a JSON report")
    check.add_argument("--stats", action="store_true", help="print work statistics")
    check.add_argument(
        "--max-work",
        type=int,
        default=None,
        help="cap on processed matrices, at least 1",
    )
    check.add_argument(
        "--parallel", action="store_true", help="project in a process pool"
    )
    check.add_argument(
        "--dedup", action="store_true", help="drop repeated frontier matrices"
    )
    check.add_argument(
        "--accept-decimal",
        action="store_true",
        help="convert finite decimals exactly",
    )
    check.add_argument(
        "--symmetrize",
        action="store_true",
        help="replace M by (M + M^T)/2 before checking",
    )

    subdivide = commands.add_parser("subdivide", help="subdivide a polytope label")
    subdivide.add_argument("label", help='label such as "[[1,2],[3,4,5]]_5"')
    subdivide.add_argument("--json", action="store_true")
    subdivide.add_argument(
        "--stats", action="store_true", help="print the expected count"
    )

    verify = commands.add_parser("verify-witness", help="check a witness vector")
    verify.add_argument("matrix_path")
    verify.add_argument("witness_path")
    verify.add_argument("--strict", action="store_true", help="accept a zero value")
    verify.add_argument("--accept-decimal", action="store_true")

    gen = commands.add_parser("gen", help="write a generated matrix file")
    gen.add_argument("kind", choices=[kind.value for kind in MatrixKind])
    gen.add_argument("out_path")
    gen.add_argument(
        "-n", "--order", type=int, default=5, help="matrix order, ignored for horn"
    )
    gen.add_argument("--seed", type=int, default=0)
    return parser


def setup(config_file: str, verbose: bool):
    """
    Load the configuration and register the shared services.
    """
    loaded = Config.load(config_file)
    debugger = Debugger(
        enable_log=bool(Config.get(ConfigKey.DEBUG_LOG, False)),
        enable_warn=bool(Config.get(ConfigKey.DEBUG_WARN, True)),
        enable_error=bool(Config.get(ConfigKey.DEBUG_ERROR, False)),
    )
    if verbose:
        debugger.enable_all()
    DATA_BUS.replace(DataBusKey.DEBUGGER, debugger)
    if not DATA_BUS.has(DataBusKey.CONFIG):
        DATA_BUS.register(DataBusKey.CONFIG, Config)
    if not DATA_BUS.has(DataBusKey.EVENT_BUS):
        DATA_BUS.register(DataBusKey.EVENT_BUS, EventBus.get_event_bus())
    if not loaded:
        debugger.warning(f"config file '{config_file}' not found, using defaults")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    setup(args.config, args.verbose)
    if args.command == "check":
        return cmd_check(
            args.path,
            strict=args.strict,
            as_json=args.json,
            stats=args.stats,
            max_work=args.max_work,
            parallel=args.parallel,
            dedup=args.dedup,
            accept_decimal=args.accept_decimal,
            symmetrize=args.symmetrize,
        )
    if args.command == "subdivide":
        return cmd_subdivide(args.label, as_json=args.json, stats=args.stats)
    if args.command == "verify-witness":
        return cmd_verify_witness(
            args.matrix_path,
            args.witness_path,
            strict=args.strict,
            accept_decimal=args.accept_decimal,
        )
    return cmd_gen(MatrixKind(args.kind), args.order, args.seed, args.out_path)


if __name__ == "__main__":
    sys.exit(main())
