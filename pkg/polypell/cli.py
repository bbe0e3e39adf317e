"""Command line interface: ``polypell <pell|gonal|ratio|simul> ...``.

Every command prints either an aligned text table or, with ``--json``, an
:class:`OutputEnvelope`. The exit status is 0 on success (possibly with no
results), 1 when the Pell construction is certified not to apply and 2 for
usage or input errors.
"""
from __future__ import annotations
import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Sequence

from ._congruence import SatisfyingPower
from ._exceptions import NoTheoremSolutions, PolyPellError
from ._gonal import DEFAULT_COUNT, DEFAULT_MAX_POWER, DEFAULT_ORACLE_BOUND, GonalPair, \
    TheoremWitness, TriangularRatioPair, solve_multiple, solve_triangular_ratio, theorem_witness
from ._pell import check_multiplier, fundamental_solution, negative_pell_fundamental, power, \
    sqrt_approx
from ._types import ModeT
from ._simultaneous import DEFAULT_V_BOUND, CurvePoint, SimultaneousTriple, \
    constrained_integer_points, curve_params, triples_from_points
from .formatter import DefaultFormatter

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO_THEOREM_SOLUTIONS = 1
EXIT_INVALID_INPUT = 2


@dataclass
class OutputEnvelope:
    """The machine readable result of one command.

    :func:`to_json` writes every integer as a decimal string and sorts all
    keys, so the same invocation always produces the same bytes.
    """

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    bounds: dict[str, Any] = field(default_factory=dict)
    complete_up_to_bound: bool = True

    def to_json(self) -> str:
        return json.dumps(_stringify(asdict(self)), sort_keys=True, indent=2)


def _stringify(value: Any) -> Any:
    """Recursively turns integers (but not booleans) into decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {str(key): _stringify(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(item) for item in value]
    return value


@dataclass
class CommandResult:
    envelope: OutputEnvelope
    text: str
    exit_code: int = EXIT_OK


def _pair_dict(pair: GonalPair) -> dict[str, int]:
    return {"r": pair.r, "s": pair.s, "value_big": pair.value_big, "value_small": pair.value_small}


def _ratio_dict(pair: TriangularRatioPair) -> dict[str, int]:
    return {"r": pair.r, "s": pair.s, "delta": pair.delta, "delta_prime": pair.delta_prime}


def _triple_dict(triple: SimultaneousTriple) -> dict[str, int]:
    return {
        "r": triple.r, "s": triple.s, "t": triple.t,
        "value": triple.value, "value_m": triple.value_m, "value_n": triple.value_n
    }


def _point_dict(point: CurvePoint) -> dict[str, Any]:
    witness = point.witness
    return {
        "X": point.X,
        "Y": point.Y,
        "witness": None if witness is None else {"u": witness.u, "v": witness.v, "w": witness.w}
    }


def _satisfying_dict(found: SatisfyingPower | None) -> dict[str, Any] | None:
    if found is None:
        return None
    return {
        "exponent": found.exponent,
        "variant": str(found.variant),
        "residue": list(found.residue.pair)
    }


def cmd_pell(
    m: int,
    *,
    power_n: int | None = None,
    approx: bool = False,
    negative: bool = False,
    check: bool = False
) -> CommandResult:
    """The fundamental solution for *m*, optionally with a power, an approximation and more."""
    check_multiplier(m)
    g = fundamental_solution(m)
    results: dict[str, Any] = {"fundamental": {"x": g.x, "y": g.y}}
    lines = [f"m = {m}: fundamental solution x = {g.x}, y = {g.y}"]
    n = 1 if power_n is None else power_n
    if power_n is not None:
        x, y = power(g, n)
        results["power"] = {"n": n, "x": x, "y": y}
        lines.append(f"g^{n} = ({x}, {y})")
    if approx:
        ratio = sqrt_approx(m, n)
        results["approx"] = {"n": n, "numerator": ratio.numerator,
                             "denominator": ratio.denominator}
        lines.append(f"sqrt({m}) ~ {ratio.numerator}/{ratio.denominator}")
    if negative:
        neg = negative_pell_fundamental(m)
        results["negative"] = None if neg is None else {"x": neg.x, "y": neg.y}
        lines.append("x^2 - {}y^2 = -1: {}".format(
            m, "none" if neg is None else f"x = {neg.x}, y = {neg.y}"
        ))
    if check:
        verified = g.x * g.x - m * g.y * g.y == 1
        results["check"] = verified
        lines.append(f"x^2 - {m}y^2 = 1: {'verified' if verified else 'FAILED'}")
    inputs = {"m": m, "power": power_n, "approx": approx, "negative": negative, "check": check}
    return CommandResult(OutputEnvelope("pell", inputs, results), "\n".join(lines))


def _witness_text(witness: TheoremWitness) -> str:
    t = witness.transform
    text = f"ell = {t.ell}, m = {t.m}: q = {t.q}, c = {t.c}, g_m(q) = {witness.order}"
    found = witness.satisfying
    if found is None:
        return text + "\nconditions not satisfiable"
    return text + f"\ng^{found.exponent} satisfies condition {found.variant} " \
                  f"with residue {found.residue.pair}"


def cmd_gonal(
    ell: int,
    m: int,
    *,
    count: int | None = DEFAULT_COUNT,
    mode: ModeT = "theorem",
    bound: int | None = None,
    check_only: bool = False,
    max_power: int = DEFAULT_MAX_POWER,
    jobs: int = 1
) -> CommandResult:
    """Pairs :math:`P(\\ell, r) = mP(\\ell, s)`, or with *check_only* the congruence data only."""
    inputs = {"ell": ell, "m": m, "count": count, "mode": mode, "check_only": check_only}
    check: dict[str, Any] = {}
    if check_only or mode == "theorem":
        witness = theorem_witness(ell, m)
        t = witness.transform
        check = {
            "q": t.q, "c": t.c, "order": witness.order,
            "satisfying": _satisfying_dict(witness.satisfying)
        }
        if check_only:
            return CommandResult(
                OutputEnvelope("gonal", inputs, check),
                _witness_text(witness),
                EXIT_OK if witness.solvable else EXIT_NO_THEOREM_SOLUTIONS
            )
    if mode == "search":
        bounds = {"bound": DEFAULT_ORACLE_BOUND if bound is None else bound}
    else:
        bounds = {"bound": bound, "max_power": max_power}
    try:
        pairs = solve_multiple(
            ell, m, count, mode, bound, max_power=max_power, jobs=jobs
        )
    except NoTheoremSolutions as e:
        results = dict(check, pairs=[])
        return CommandResult(
            OutputEnvelope("gonal", inputs, results, bounds),
            f"{e}\nconditions not satisfiable",
            EXIT_NO_THEOREM_SOLUTIONS
        )
    rows = [(p.r, p.s, p.value_big, p.value_small) for p in pairs]
    text = f"P({ell}, r) = {m} P({ell}, s), {mode} mode\n" + \
        DefaultFormatter(rows, ["r", "s", "P(r)", "P(s)"])
    results = {"pairs": [_pair_dict(p) for p in pairs]}
    satisfying = check.get("satisfying")
    if satisfying is not None and satisfying["exponent"] > max_power:
        results["max_power_exceeded"] = True
        text += f"\nno pairs: g^{satisfying['exponent']} is needed, " \
            f"raise --max-power above {max_power}"
    return CommandResult(OutputEnvelope("gonal", inputs, results, bounds), text)


def cmd_ratio(
    a: int,
    b: int,
    *,
    count: int | None = DEFAULT_COUNT,
    bound: int | None = None,
    max_power: int = DEFAULT_MAX_POWER
) -> CommandResult:
    """Triangular numbers with :math:`a\\Delta = b\\Delta'`."""
    pairs = solve_triangular_ratio(a, b, count, bound, max_power=max_power)
    rows = [(p.r, p.s, p.delta, p.delta_prime) for p in pairs]
    text = f"{a} T(r) = {b} T(s)\n" + DefaultFormatter(rows, ["r", "s", "T(r)", "T(s)"])
    return CommandResult(
        OutputEnvelope(
            "ratio",
            {"a": a, "b": b, "count": count},
            {"pairs": [_ratio_dict(p) for p in pairs]},
            {"bound": bound, "max_power": max_power}
        ),
        text
    )


def cmd_simul(
    ell: int,
    m: int,
    n: int,
    *,
    bound: int | None = None,
    count: int | None = None,
    curve: bool = False,
    jobs: int = 1
) -> CommandResult:
    """Triples :math:`P(\\ell, r) = mP(\\ell, s) = nP(\\ell, t)` up to the witness bound."""
    spec = curve_params(ell, m, n)
    v_bound = DEFAULT_V_BOUND if bound is None else bound
    points = constrained_integer_points(spec, v_bound, jobs=jobs)
    triples = triples_from_points(spec, points)
    if count is not None:
        triples = triples[:count]
    rows = [(t.r, t.s, t.t, t.value, t.value_m, t.value_n) for t in triples]
    text = f"P({ell}, r) = {m} P({ell}, s) = {n} P({ell}, t), complete up to v <= {v_bound}\n"
    text += DefaultFormatter(rows, ["r", "s", "t", "P(r)", "P(s)", "P(t)"])
    results: dict[str, Any] = {"triples": [_triple_dict(t) for t in triples]}
    if curve:
        results["curve"] = {
            "a": spec.a, "b": spec.b, "A": spec.A, "B": spec.B,
            "points": [_point_dict(p) for p in points]
        }
        point_rows = [
            (p.X, p.Y, "-" if p.witness is None else str((p.witness.u, p.witness.v, p.witness.w)))
            for p in points
        ]
        text += f"\nY^2 = X(X - {spec.A})(X - {spec.B})\n"
        text += DefaultFormatter(point_rows, ["X", "Y", "(u, v, w)"])
    return CommandResult(
        OutputEnvelope(
            "simul", {"ell": ell, "m": m, "n": n, "curve": curve, "count": count},
            results, {"v_bound": v_bound}
        ),
        text
    )


def _global_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--json", action="store_true", help="print the JSON envelope")
    options.add_argument("--bound", type=int, help="search bound (r, s or v, depending on command)")
    options.add_argument("--count", type=int, help="maximal number of results")
    options.add_argument("--jobs", type=int, default=1, help="worker processes for the scans")
    options.add_argument("-v", "--verbose", action="count", default=0,
                         help="log progress to stderr (twice for debug output)")
    return options


def build_parser() -> argparse.ArgumentParser:
    options = _global_options()
    parser = argparse.ArgumentParser(
        prog="polypell",
        description="Pell equations and polygonal numbers which are multiples of each other."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    pell = commands.add_parser("pell", parents=[options], help="fundamental Pell solutions")
    pell.add_argument("m", type=int)
    pell.add_argument("--power", type=int, metavar="N", help="also print g^N")
    pell.add_argument("--approx", action="store_true", help="print x_N / y_N ~ sqrt(m)")
    pell.add_argument("--negative", action="store_true", help="solve x^2 - my^2 = -1")
    pell.add_argument("--check", action="store_true", help="verify x^2 - my^2 = 1")

    gonal = commands.add_parser("gonal", parents=[options], help="P(ell, r) = m P(ell, s)")
    gonal.add_argument("--ell", type=int, required=True)
    gonal.add_argument("--m", type=int, required=True)
    gonal.add_argument("--mode", choices=("theorem", "search"), default="theorem")
    gonal.add_argument("--check-only", action="store_true",
                       help="only report q, g_m(q) and the satisfying power")
    gonal.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER)

    ratio = commands.add_parser("ratio", parents=[options], help="a T(r) = b T(s)")
    ratio.add_argument("a", type=int)
    ratio.add_argument("b", type=int)
    ratio.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER)

    simul = commands.add_parser("simul", parents=[options],
                                help="P(ell, r) = m P(ell, s) = n P(ell, t)")
    simul.add_argument("--ell", type=int, required=True)
    simul.add_argument("--m", type=int, required=True)
    simul.add_argument("--n", type=int, required=True)
    simul.add_argument("--curve", action="store_true", help="also list the integer points")
    return parser


_DISPATCH: dict[str, Callable[[argparse.Namespace], CommandResult]] = {
    "pell": lambda args: cmd_pell(
        args.m, power_n=args.power, approx=args.approx, negative=args.negative, check=args.check
    ),
    "gonal": lambda args: cmd_gonal(
        args.ell, args.m,
        count=DEFAULT_COUNT if args.count is None else args.count,
        mode=args.mode, bound=args.bound, check_only=args.check_only,
        max_power=args.max_power, jobs=args.jobs
    ),
    "ratio": lambda args: cmd_ratio(
        args.a, args.b,
        count=DEFAULT_COUNT if args.count is None else args.count,
        bound=args.bound, max_power=args.max_power
    ),
    "simul": lambda args: cmd_simul(
        args.ell, args.m, args.n,
        bound=args.bound, count=args.count, curve=args.curve, jobs=args.jobs
    ),
}


def main(argv: Sequence[str] | None = None) -> int:
    """Runs the command line interface and returns the exit status."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(
            stream=sys.stderr,
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s"
        )
    _logger.debug("Running %s with %s", args.command, vars(args))
    try:
        result = _DISPATCH[args.command](args)
    except PolyPellError as e:
        print(f"polypell {args.command}: error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    print(result.envelope.to_json() if args.json else result.text)
    return result.exit_code
