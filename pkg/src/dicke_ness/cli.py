"""Command-line interface: ``dicke-ness {sweep,check,relax,plot}``."""
import argparse
import csv
import io
import json
import sys

from .density import ground_state, trace_distance
from .errors import DomainError, IntegrationError, NumericRangeError
from .steady_state import DriveParams, evolve, exact_steady_state
from .sweep import SweepSpec, run_sweep

COLUMNS = (
    "n_atoms",
    "omega_s",
    "S1",
    "S2",
    "S3",
    "dS2_domega",
    "lieb",
    "S_rel_caption",
    "S_rel_eq8",
    "phase_averaged",
)


def _fmt(x):
    if x is None:
        return ""
    return format(float(x), ".12g")


def record_fields(record):
    """One output row as ``{column: string}`` in :data:`COLUMNS` order."""
    s = record.entropies
    return {
        "n_atoms": str(record.n_atoms),
        "omega_s": _fmt(record.omega_s),
        "S1": _fmt(s.get(1)),
        "S2": _fmt(s.get(2)),
        "S3": _fmt(s.get(3)),
        "dS2_domega": _fmt(record.derivative),
        "lieb": _fmt(record.lieb_value),
        "S_rel_caption": _fmt(record.relative_caption),
        "S_rel_eq8": _fmt(record.relative_eq8),
        "phase_averaged": "1" if record.phase_averaged else "0",
    }


def format_csv(result):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in result.rows:
        f = record_fields(r)
        writer.writerow([f[c] for c in COLUMNS])
    return buf.getvalue()


def format_json(result):
    out = []
    for r in result.rows:
        f = record_fields(r)
        obj = {}
        for c in COLUMNS:
            v = f[c]
            if c in ("n_atoms", "phase_averaged"):
                obj[c] = int(v)
            else:
                obj[c] = float(v) if v else None
        out.append(obj)
    return json.dumps(out, indent=1) + "\n"


def _int_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


_PLOT_TEMPLATE = """\
# gnuplot script generated by dicke-ness plot
# usage: gnuplot {script}
set datafile separator ","
set terminal pngcairo size 800,560
set xlabel "scaled drive {{/Symbol W}}_s"
set grid
data = "{data}"
atoms = "{atoms}"
col(n, c, avg) = (column(1) == n && column(10) == avg) ? column(c) : 1/0

set output "entropy_two.png"
set ylabel "S({{/Symbol r}}^{{(2)}}) [bits]"
plot for [n in atoms] data every ::1 using 2:(col(n+0, 4, 0)) with lines title "N=".n

set output "entropy_two_derivative.png"
set ylabel "dS({{/Symbol r}}^{{(2)}})/d{{/Symbol W}}_s"
plot for [n in atoms] data every ::1 using 2:(col(n+0, 6, 0)) with lines title "N=".n

set output "entropy_two_phase_averaged.png"
set ylabel "phase-averaged S({{/Symbol r}}^{{(2)}}) [bits]"
plot for [n in atoms] data every ::1 using 2:(col(n+0, 4, 1)) with lines title "N=".n

set output "entropy_three.png"
set ylabel "S({{/Symbol r}}^{{(3)}}) [bits]"
plot for [n in atoms] data every ::1 using 2:(col(n+0, 5, 0)) with lines title "N=".n

set output "relative_entropy_three.png"
set ylabel "3S_2 - 3S_1 - S_3 [bits]"
plot for [n in atoms] data every ::1 using 2:(col(n+0, 8, 0)) with lines title "N=".n

set output "lieb.png"
set ylabel "S_1 + S_3 - 2S_2 [bits]"
plot for [n in atoms] data every ::1 using 2:(col(n+0, 7, 0)) with lines title "N=".n
"""


def plot_script(csv_path, script_path):
    """Gnuplot script text drawing the entropy diagnostics from a sweep CSV."""
    with open(csv_path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or list(reader.fieldnames) != list(COLUMNS):
            raise DomainError(f"{csv_path} is not a sweep CSV (unexpected header)")
        atoms = sorted({int(row["n_atoms"]) for row in reader})
    return _PLOT_TEMPLATE.format(script=script_path, data=csv_path, atoms=" ".join(map(str, atoms)))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dicke-ness",
        description="Steady-state entanglement of a driven, collectively decaying atomic ensemble.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="entropy diagnostics over a grid of drive strengths")
    sw.add_argument("--atoms", type=_int_list, required=True, help="N or comma-separated list")
    sw.add_argument("--omega-min", type=float, default=0.0)
    sw.add_argument("--omega-max", type=float, default=3.0)
    sw.add_argument("--points", type=int, default=301)
    sw.add_argument("--parts", type=_int_list, default=[1, 2, 3])
    sw.add_argument("--phase", type=float, default=0.0)
    sw.add_argument("--phase-average", action="store_true")
    sw.add_argument("--derivative", type=int, default=None, metavar="M")
    sw.add_argument("--out", default="-", help="output path, '-' for stdout")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    sw.add_argument("--workers", type=int, default=None, help="thread count (default: all cores)")

    ck = sub.add_parser("check", help="run the oracle and invariant self-checks")
    ck.add_argument("--atoms-max", type=int, default=8)

    rx = sub.add_parser("relax", help="trace distance to the steady state along a trajectory")
    rx.add_argument("--atoms", type=int, required=True)
    rx.add_argument("--omega-s", type=float, required=True)
    rx.add_argument("--phase", type=float, default=0.0)
    rx.add_argument("--t-final", type=float, default=10.0)
    rx.add_argument("--dt", type=float, default=None)
    rx.add_argument("--sample-every", type=int, default=1)
    rx.add_argument("--out", default="-")

    pl = sub.add_parser("plot", help="write a gnuplot script for a sweep CSV")
    pl.add_argument("--in", dest="input", required=True)
    pl.add_argument("--out", required=True)
    return parser


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _cmd_sweep(args, parser):
    try:
        spec = SweepSpec(
            n_atoms=tuple(args.atoms),
            omega_min=args.omega_min,
            omega_max=args.omega_max,
            count=args.points,
            parts=tuple(args.parts),
            phase=args.phase,
            phase_averaged=args.phase_average,
            derivative_for=args.derivative,
        )
    except DomainError as exc:
        parser.error(str(exc))
    result = run_sweep(spec, workers=args.workers)
    _write(args.out, format_csv(result) if args.format == "csv" else format_json(result))
    return 0


def _cmd_check(args, parser):
    from .checks import run_all

    if args.atoms_max < 2:
        parser.error("--atoms-max must be at least 2")
    results = run_all(args.atoms_max)
    width = max(len(f"{r.module}: {r.prop}") for r in results)
    for r in results:
        label = f"{r.module}: {r.prop}"
        print(f"{'PASS' if r.passed else 'FAIL'}  {label:<{width}}  {r.detail}")
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return 0 if ok else 1


def _cmd_relax(args, parser):
    try:
        params = DriveParams(args.atoms, args.omega_s, args.phase)
    except DomainError as exc:
        parser.error(str(exc))
    target = exact_steady_state(params)
    traj = evolve(params, ground_state(args.atoms + 1), args.t_final, dt=args.dt, sample_every=args.sample_every)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("t", "trace_distance"))
    for t, rho in zip(traj.times, traj.states):
        writer.writerow((_fmt(t), _fmt(trace_distance(rho, target))))
    _write(args.out, buf.getvalue())
    return 0


def _cmd_plot(args, parser):
    try:
        text = plot_script(args.input, args.out)
    except (OSError, DomainError) as exc:
        print(f"dicke-ness plot: {exc}", file=sys.stderr)
        return 1
    _write(args.out, text)
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"sweep": _cmd_sweep, "check": _cmd_check, "relax": _cmd_relax, "plot": _cmd_plot}
    try:
        return handlers[args.command](args, parser)
    except (NumericRangeError, IntegrationError, ArithmeticError) as exc:
        print(f"dicke-ness {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
