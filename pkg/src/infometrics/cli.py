"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 input validation error, 3 numeric
domain error. Results go to stdout, one-line diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any

from . import algorithmic, ca, cogaug, emergence, entropy, grit, limits
from .errors import DomainError, LedgerError, ValidationError

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2, 3
SCI_THRESHOLD = 1e6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def format_number(x: Any) -> str:
    """Six decimals below 1e6 in magnitude, scientific (``6.036761e33``) above."""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    if x == 0:
        x = 0.0  # drop the sign of -0.0
    if abs(x) >= SCI_THRESHOLD:
        mantissa, exp = f"{x:.6e}".split("e")
        return f"{mantissa}e{int(exp)}"
    return f"{x:.6f}"


def _json_value(x: Any) -> Any:
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if x == 0:
            return 0.0
        return x
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def emit(report: dict, mode: str = "text") -> str:
    """Render a flat ``name -> value`` report; nested values only in json mode."""
    if mode == "json":
        return json.dumps(_json_value(report), allow_nan=False) + "\n"
    lines = []
    for name, value in report.items():
        if isinstance(value, (list, tuple)):
            value = "[" + ",".join(format_number(v) for v in value) + "]"
        elif not isinstance(value, str):
            value = format_number(value)
        lines.append(f"{name}={value}\n")
    return "".join(lines)


def _read_json(path: str, what: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ValidationError(f"{what}: cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what}: invalid JSON in {path}: {exc.msg} (line {exc.lineno})") from None


def _units(args) -> tuple[entropy.EntropyUnits, str]:
    base = 2.0 if args.units == "bits" else math.e
    return entropy.EntropyUnits(base, args.scale_k), args.units


def cmd_entropy(args) -> dict:
    u, unit = _units(args)
    out: dict[str, Any] = {}
    if args.dist is None and args.joint is None and args.message is None and args.hartley_n is None and args.boltzmann_w is None:
        raise UsageError("entropy: give at least one of --dist, --joint, --message, --hartley-n, --boltzmann-w")
    d = None
    if args.dist is not None:
        d = entropy.parse_distribution(args.dist)
    elif args.message is not None:
        d = entropy.empirical_distribution(args.message)
        out["distribution"] = list(d.probabilities)
    if d is not None:
        out[f"shannon_{unit}"] = entropy.shannon_entropy(d, u)
        out[f"negentropy_{unit}"] = entropy.negentropy(d, u)
        out["gibbs_nats"] = entropy.gibbs_entropy(d)
        if len(d) >= 2:
            out["normalized"] = entropy.normalized_entropy(d)
        if args.alpha is not None:
            out[f"renyi_{unit}"] = entropy.renyi_entropy(d, args.alpha, u)
        if args.q is not None:
            out[f"relative_entropy_{unit}"] = entropy.relative_entropy(d, entropy.parse_distribution(args.q), u)
        if args.m is not None:
            out[f"message_information_{unit}"] = entropy.message_information(d, args.m, u)
    if args.joint is not None:
        try:
            raw = json.loads(args.joint)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"joint: invalid JSON: {exc.msg}") from None
        try:
            j = entropy.validate_joint(raw)
        except TypeError:
            raise ValidationError("joint: expected an array of arrays of numbers") from None
        out[f"h_x_{unit}"] = entropy.shannon_entropy(j.marginal_x(), u)
        out[f"h_y_{unit}"] = entropy.shannon_entropy(j.marginal_y(), u)
        out[f"joint_{unit}"] = entropy.joint_entropy(j, u)
        out[f"conditional_{unit}"] = entropy.conditional_entropy(j, u)
        out[f"mutual_information_{unit}"] = entropy.mutual_information(j, u)
    if args.hartley_n is not None:
        if args.hartley_s is None:
            raise UsageError("entropy: --hartley-n needs --hartley-s")
        out[f"hartley_{unit}"] = entropy.hartley_information(
            entropy.MessageSpec(args.hartley_s, args.hartley_n), u
        )
    if args.boltzmann_w is not None:
        out["boltzmann"] = entropy.boltzmann_entropy(entropy.MicrostateCount(args.boltzmann_w, args.scale_k))
    return out


def cmd_algo(args) -> dict:
    if (args.text is None) == (args.file is None):
        raise UsageError("algo: give exactly one of --text or --file")
    if args.file is not None:
        try:
            data = Path(args.file).read_bytes()
        except OSError as exc:
            raise ValidationError(f"file: cannot read {args.file}: {exc.strerror}") from None
    else:
        data = args.text.encode("utf-8")
    if args.alphabet == "bytes":
        symbols, size = list(data), 256
    else:
        symbols, size = algorithmic.symbols_to_indices(data)
    parse = algorithmic.lz78_parse(symbols, size)
    est = algorithmic.complexity_estimate(parse)
    return {
        "source_length": parse.source_length,
        "alphabet_size": size,
        "phrase_count": est.phrase_count,
        "bit_estimate": est.bit_estimate,
    }


def cmd_limits(args) -> dict:
    if all(v is None for v in (args.energy_j, args.entropy_jk, args.mass_kg)):
        raise UsageError("limits: give at least one of --energy-j, --entropy-jk, --mass-kg")
    out: dict[str, Any] = {}
    energy = args.energy_j
    if args.mass_kg is not None:
        out["mass_energy_j"] = limits.mass_energy(args.mass_kg)
        if energy is None:
            energy = out["mass_energy_j"]
    system = limits.PhysicalSystem(
        energy_E=energy or 0.0, entropy_S=args.entropy_jk or 0.0, radius_R=args.radius_m, mass=args.mass_kg
    )
    if energy is not None:
        out["max_ops_per_sec"] = limits.max_ops_per_sec(system)
    if args.entropy_jk is not None:
        out["max_bits"] = limits.max_bits(system)
        if args.radius_m is not None:
            out["max_io_rate"] = limits.max_io_rate(system)
    return out


def cmd_emergence(args) -> dict:
    out: dict[str, Any] = {}
    if args.peak:
        eta, gain = emergence.capacity_peak()
        out["eta_star"], out["gain"] = eta, gain
    if args.eta is not None or args.m is not None:
        if args.eta is None or args.m is None:
            raise UsageError("emergence: --m and --eta go together")
        out["capacity"] = emergence.emergent_capacity(emergence.EmergenceInput(args.m, args.eta))
    if args.stonier_i0 is not None or args.stonier_s is not None:
        if args.stonier_i0 is None or args.stonier_s is None:
            raise UsageError("emergence: --stonier-i0 and --stonier-s go together")
        out["stonier_information"] = emergence.stonier_information(
            emergence.StonierParams(args.stonier_i0, args.stonier_s, args.stonier_k)
        )
    if not out:
        raise UsageError("emergence: nothing to compute; give --peak, --m/--eta or --stonier-*")
    return out


def cmd_ca_run(args) -> dict | str:
    rule = ca.elementary_rule(args.rule)
    if args.seed is None:
        initial = [0] * args.width
        initial[args.width // 2] = 1
    else:
        initial = ca.random_row(args.width, 2, ca.SplitMix64(args.seed))
    diagram = ca.evolve(rule, initial, args.steps)
    if args.render:
        return diagram.render()
    out: dict[str, Any] = {
        "rule": args.rule,
        "lambda": ca.lambda_of(rule),
        "site_entropy": ca.site_entropy(diagram, args.cutoff),
        "activity": ca.activity(diagram, args.cutoff),
    }
    if args.steps >= 2:
        out["class_heuristic"] = ca.classify_heuristic(diagram)
    return out


def sweep_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONE)
    writer.writerow(["lambda", "seed", "eta", "capacity", "activity", "class"])
    for r in records:
        writer.writerow(
            [
                format_number(r.lam),
                r.seed,
                format_number(r.site_entropy_eta),
                format_number(r.capacity),
                format_number(r.activity),
                r.class_heuristic,
            ]
        )
    return buf.getvalue()


def cmd_ca_sweep(args):
    raw = _read_json(args.config, "config")
    if not isinstance(raw, dict):
        raise ValidationError("config: expected a JSON object")
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.workers is not None:
        raw["workers"] = args.workers
    try:
        cfg = ca.SweepConfig.from_dict(raw)
    except TypeError as exc:
        raise ValidationError(f"config: {exc}") from None
    records = ca.lambda_sweep(cfg)
    if args.json:
        return {
            "mean_eta": {format_number(k): v for k, v in ca.mean_eta_by_lambda(records).items()},
            "empirical_lambda_c": ca.empirical_lambda_c(records),
            "records": [
                {
                    "lambda": r.lam,
                    "seed": r.seed,
                    "eta": r.site_entropy_eta,
                    "capacity": r.capacity,
                    "activity": r.activity,
                    "class": r.class_heuristic,
                    "label": r.label,
                }
                for r in records
            ],
        }
    return sweep_csv(records)


def _member_label(m) -> str:
    return "".join(str(b) for b in m)


def cmd_grit(args) -> dict:
    F = grit.BooleanCategory.from_dict(_read_json(args.category, "category"))
    a = grit.structural_complexity(F, args.k)
    out: dict[str, Any] = {
        "dimensions": F.dimensions_D,
        "size": len(F),
        "k": a.k_scaling,
        "partial_invariances": list(a.partial_invariances),
        "phi": a.phi,
        "psi": a.psi,
    }
    if args.subset is not None:
        sub = grit.BooleanCategory.from_dict(_read_json(args.subset, "subset"))
        out["subset_psi"] = grit.psi(sub, a.k_scaling)
        out["h_s"] = grit.representational_information(F, sub, args.k)
    if args.rank:
        ranked = grit.rank_elements(F, args.k)
        if args.json:
            out["ranking"] = [{"member": list(m), "value": v} for m, v in ranked]
        else:
            for m, v in ranked:
                out[f"element_{_member_label(m)}"] = v
    return out


def cmd_cogaug(args):
    raw = _read_json(args.ledger, "ledger")
    report = cogaug.evaluate_ledger(cogaug.Ledger.from_dict(raw)).to_dict()
    if args.json:
        return report
    steps = report.pop("steps")
    text = emit(report)
    columns = ["id", "agent", "psi_in", "psi_out", "work", "gain", "xi", "p_g", "p_w", "d_g", "d_w"]
    cells = [columns] + [
        [s[c] if isinstance(s.get(c), str) else ("-" if c not in s else format_number(s[c])) for c in columns]
        for s in steps
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    table = "".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in cells
    )
    return text + table


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    p = _Parser(prog="infometrics", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    e = sub.add_parser("entropy", parents=[common], help="entropy family")
    e.add_argument("--dist", help="comma list or JSON array of probabilities")
    e.add_argument("--q", help="reference distribution for relative entropy")
    e.add_argument("--joint", help="JSON array of rows, rows index X")
    e.add_argument("--message", help="symbol string; its empirical distribution is used")
    e.add_argument("--alpha", type=float, help="Renyi order")
    e.add_argument("--m", type=int, help="message length for m * H")
    e.add_argument("--hartley-n", type=int)
    e.add_argument("--hartley-s", type=int)
    e.add_argument("--boltzmann-w", type=float)
    e.add_argument("--units", choices=("bits", "nats"), default="bits")
    e.add_argument("--scale-k", type=float, default=1.0)
    e.set_defaults(func=cmd_entropy)

    a = sub.add_parser("algo", parents=[common], help="LZ78 complexity estimate")
    a.add_argument("--text")
    a.add_argument("--file")
    a.add_argument("--alphabet", choices=("observed", "bytes"), default="observed")
    a.set_defaults(func=cmd_algo)

    lim = sub.add_parser("limits", parents=[common], help="physical limits of computation")
    lim.add_argument("--energy-j", type=float)
    lim.add_argument("--entropy-jk", type=float)
    lim.add_argument("--radius-m", type=float)
    lim.add_argument("--mass-kg", type=float)
    lim.set_defaults(func=cmd_limits)

    em = sub.add_parser("emergence", parents=[common], help="emergent capacity")
    em.add_argument("--m", type=float)
    em.add_argument("--eta", type=float)
    em.add_argument("--stonier-i0", type=float)
    em.add_argument("--stonier-k", type=float, default=1.0)
    em.add_argument("--stonier-s", type=float)
    em.add_argument("--peak", action="store_true")
    em.set_defaults(func=cmd_emergence)

    c = sub.add_parser("ca", help="cellular automata bench")
    csub = c.add_subparsers(dest="ca_command", parser_class=_Parser)
    csub.required = True
    run = csub.add_parser("run", parents=[common], help="evolve one elementary rule")
    run.add_argument("--rule", type=int, required=True)
    run.add_argument("--width", type=int, required=True)
    run.add_argument("--steps", type=int, required=True)
    run.add_argument("--seed", type=int, help="random initial row; default is a single 1 cell")
    run.add_argument("--cutoff", type=int, default=0)
    run.add_argument("--render", action="store_true", help="print the spacetime diagram")
    run.set_defaults(func=cmd_ca_run)
    sw = csub.add_parser("sweep", parents=[common], help="lambda sweep, CSV output")
    sw.add_argument("--config", required=True)
    sw.add_argument("--seed", type=int)
    sw.add_argument("--workers", type=int)
    sw.set_defaults(func=cmd_ca_sweep)

    g = sub.add_parser("grit", parents=[common], help="structural complexity")
    g.add_argument("--category", required=True)
    g.add_argument("--subset")
    g.add_argument("--rank", action="store_true")
    g.add_argument("--k", type=float)
    g.set_defaults(func=cmd_grit)

    cg = sub.add_parser("cogaug", parents=[common], help="cognitive augmentation ledger")
    cg.add_argument("--ledger", required=True)
    cg.set_defaults(func=cmd_cogaug)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except LedgerError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN if exc.is_domain else EXIT_INPUT
    except DomainError as exc:
        print(f"domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except ValidationError as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    except (TypeError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    if isinstance(result, str):
        stdout.write(result)
    else:
        stdout.write(emit(result, "json" if getattr(args, "json", False) else "text"))
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
