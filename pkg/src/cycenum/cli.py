"""Command-line interface: one binary, one subcommand per computation.

Exit codes: 0 on success, 1 on a domain error (the error class name goes
to stderr), 2 on a usage error. Every subcommand accepts --json; JSON
documents carry "schema": 1 and are emitted with sorted keys so repeated
runs are byte-identical.
"""

import argparse
import json
import sys

from . import __version__
from .codes import factor_xn_minus_1, generator_matrix, irreducible_cyclic_code
from .cosets import coset_leaders, cosets_full
from .characters import gauss_sum
from .errors import CycenumError, SpectrumMismatch
from .field import DEFAULT_TABLE_CAP, build_ext_field
from .pipeline import (
    IcqParams,
    epsilon_bound,
    icq_membership,
    run_pipeline,
    run_pipeline_trials,
    theta,
)
from .weights import (
    DEFAULT_ORACLE_CAP,
    WeightEnumerator,
    macwilliams_dual,
    weight_spectrum_bruteforce,
    weight_spectrum_mceliece,
)

SCHEMA = 1


def _emit(args, payload: dict, text_lines) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _poly_str(coeffs: list[int]) -> str:
    return "[" + ", ".join(str(c) for c in coeffs) + "]"


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_cosets(args) -> int:
    if args.json and not args.members:
        part = coset_leaders(args.N, args.p)
    else:
        part = cosets_full(args.N, args.p)
    payload = part.to_dict(with_members=args.members or not args.json)
    lines = ["{" + ",".join(str(m) for m in c.members) + "}" for c in part.cosets] \
        if part.cosets and part.cosets[0].members is not None else []
    _emit(args, payload, lines)
    return 0


def cmd_factor(args) -> int:
    factors = factor_xn_minus_1(args.n, args.q)
    payload = {
        "n": args.n,
        "q": args.q,
        "num_factors": len(factors),
        "factors": [list(f) for f in factors],
    }
    _emit(args, payload, (_poly_str(f) for f in factors))
    return 0


def cmd_code(args) -> int:
    spec = irreducible_cyclic_code(args.q, args.k, args.N, table_cap=args.table_cap)
    payload = spec.to_dict()
    lines = [
        f"[{spec.n},{spec.k}] irreducible cyclic code over GF({spec.q}), N={spec.N}",
        f"modulus   {_poly_str(list(spec.field.modulus))}",
        f"generator {_poly_str(spec.generator)}",
        f"check     {_poly_str(spec.check)}",
    ]
    if args.matrix:
        rows = generator_matrix(spec)
        payload["matrix"] = rows
        lines += ["matrix:"] + ["  " + " ".join(str(v) for v in row) for row in rows]
    _emit(args, payload, lines)
    return 0


def cmd_gauss(args) -> int:
    F = build_ext_field(args.q, args.k, table_cap=args.table_cap)
    beta = F.alpha_pow(args.beta)
    g = gauss_sum(args.j, beta, F)
    payload = {"q": args.q, "k": args.k, "j": args.j, "beta_exp": args.beta,
               **g.to_dict()}
    lines = [
        f"G(chi_{args.j}, e_alpha^{args.beta}) over GF({args.q}^{args.k})",
        f"value     {g.value.real:+.12f} {g.value.imag:+.12f}i",
        f"gamma     {g.gamma:.12f}",
        f"magnitude {g.magnitude:.12f}",
    ]
    _emit(args, payload, lines)
    return 0


def _spectra_for(args):
    spec = irreducible_cyclic_code(args.q, args.k, args.N, table_cap=args.table_cap)
    method = args.method
    if method == "mceliece":
        return spec, weight_spectrum_mceliece(spec), method
    if method == "brute":
        return spec, weight_spectrum_bruteforce(spec, cap=args.oracle_cap), method
    a = weight_spectrum_mceliece(spec)
    b = weight_spectrum_bruteforce(spec, cap=args.oracle_cap)
    if a.counts != b.counts:
        raise SpectrumMismatch("mceliece and brute-force spectra disagree")
    return spec, a, "both"


def cmd_weights(args) -> int:
    spec, spectrum, method = _spectra_for(args)
    payload = {
        "q": spec.q, "k": spec.k, "N": spec.N, "n": spec.n,
        "method": method,
        "spectrum": spectrum.to_dict(),
        "enumerator_check": {"A11": WeightEnumerator(spectrum).evaluate(1, 1)},
    }
    lines = [f"[{spec.n},{spec.k}] code over GF({spec.q}), method={method}"] + [
        f"A_{w} = {spectrum.counts[w]}" for w in sorted(spectrum.counts)
    ]
    _emit(args, payload, lines)
    return 0


def cmd_dual(args) -> int:
    spec, spectrum, method = _spectra_for(args)
    dual = macwilliams_dual(WeightEnumerator(spectrum), spec.q, spec.k, spec.n)
    payload = {
        "q": spec.q, "k": spec.k, "N": spec.N, "n": spec.n,
        "method": method,
        "spectrum": spectrum.to_dict(),
        "dual_spectrum": dual.spectrum.to_dict(),
        "dual_check": {"A11": dual.evaluate(1, 1)},
    }
    lines = [f"dual of the [{spec.n},{spec.k}] code over GF({spec.q})"] + [
        f"A'_{w} = {dual.spectrum.counts[w]}" for w in sorted(dual.spectrum.counts)
    ]
    _emit(args, payload, lines)
    return 0


def cmd_theta(args) -> int:
    spec = irreducible_cyclic_code(args.q, args.k, args.N, table_cap=args.table_cap)
    t = theta(spec)
    payload = {
        "q": spec.q, "k": spec.k, "N": spec.N, "n": spec.n,
        "theta": t,
        "weight_divisor": spec.q ** (t - 1),
        "epsilon_bound": epsilon_bound(spec),
    }
    lines = [
        f"theta = {t}",
        f"all nonzero weights divisible by q^(theta-1) = {spec.q ** (t - 1)}",
        f"epsilon bound = {epsilon_bound(spec)!r}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_icq_check(args) -> int:
    report = icq_membership(IcqParams.from_code_params(args.q, args.k, args.N,
                                                       args.epsilon))
    payload = report.to_dict()
    lines = [
        f"n integral:   {report.n_integral} (n = {report.n})",
        f"order check:  {report.order_ok}",
        f"epsilon <= bound: {report.epsilon_ok} "
        f"(epsilon = {report.epsilon!r}, bound = {report.epsilon_bound!r})",
        f"member: {report.member}"
        + (f"  failures: {', '.join(report.failures)}" if report.failures else ""),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_pipeline(args) -> int:
    if args.trials > 1:
        seeds = range(args.seed, args.seed + args.trials)
        reports = run_pipeline_trials(args.q, args.k, args.N, args.epsilon,
                                      seeds, force=args.force)
        exact_count = sum(r.exact for r in reports)
        payload = {
            "q": args.q, "k": args.k, "N": args.N,
            "epsilon": args.epsilon, "seed": args.seed, "trials": args.trials,
            "exact_count": exact_count,
            "trial_results": [{"seed": r.seed, "exact": r.exact} for r in reports],
        }
        lines = [f"seed {r.seed}: {'exact' if r.exact else 'DEVIATED'}"
                 for r in reports]
        lines.append(f"exact in {exact_count}/{args.trials} trials")
        _emit(args, payload, lines)
        return 0
    report = run_pipeline(args.q, args.k, args.N, args.epsilon, args.seed,
                          force=args.force)
    payload = {"report": report.to_dict()}
    spectrum = report.recovered_spectrum
    lines = [
        f"[{report.n},{report.k}] code over GF({report.q}), N={report.N}",
        f"theta={report.theta} bound={report.epsilon_bound!r} d={report.d} "
        f"cosets={report.num_cosets} oracle_calls={report.oracle_calls}",
        "recovered: " + " ".join(f"A_{w}={spectrum.counts[w]}"
                                 for w in sorted(spectrum.counts)),
        f"exact: {report.exact}",
    ]
    _emit(args, payload, lines)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycenum",
        description="Weight enumerators of irreducible cyclic codes via "
                    "Gauss sums and cyclotomic cosets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    def add_caps(p, oracle=False):
        p.add_argument("--table-cap", type=int, default=DEFAULT_TABLE_CAP,
                       help="max q^k for log/antilog tables")
        if oracle:
            p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                           help="max q^k for brute-force enumeration")

    p = sub.add_parser("cosets", help="p-cyclotomic cosets of {0..N-1}")
    p.add_argument("N", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--members", action="store_true",
                   help="include member lists in JSON output")
    add_json(p)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("factor", help="factor x^n - 1 over GF(q)")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    add_json(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("code", help="build an irreducible cyclic code")
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--matrix", action="store_true", help="print generator matrix")
    add_caps(p)
    add_json(p)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("gauss", help="Gauss sum G(chi_j, e_beta) over GF(q^k)")
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--beta", type=int, default=0, metavar="M",
                   help="beta = alpha^M (default 0, i.e. beta = 1)")
    add_caps(p)
    add_json(p)
    p.set_defaults(func=cmd_gauss)

    for name, handler in (("weights", cmd_weights), ("dual", cmd_dual)):
        p = sub.add_parser(name, help=f"{name} of an irreducible cyclic code")
        p.add_argument("q", type=int)
        p.add_argument("k", type=int)
        p.add_argument("N", type=int)
        p.add_argument("--method", choices=("mceliece", "brute", "both"),
                       default="mceliece")
        add_caps(p, oracle=True)
        add_json(p)
        p.set_defaults(func=handler)

    p = sub.add_parser("theta", help="divisibility exponent and epsilon bound")
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.add_argument("N", type=int)
    add_caps(p)
    add_json(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("icq-check", help="class membership check")
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--epsilon", type=float, required=True)
    add_json(p)
    p.set_defaults(func=cmd_icq_check)

    p = sub.add_parser("pipeline", help="noisy-oracle recovery simulation")
    p.add_argument("q", type=int)
    p.add_argument("k", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--force", action="store_true",
                   help="run even when the membership check fails")
    add_json(p)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CycenumError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
