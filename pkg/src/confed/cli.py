"""Command line interface: roots, experiment figure1, audit."""

import argparse
import sys

from .harness import Config, parse_config, roots_from_file, run_audit, run_figure1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="confed",
        description="Confederate linearizations: rootfinding, backward-error "
        "experiments, and bound audits.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    pr = sub.add_parser("roots", help="roots of a polynomial, monic in the basis")
    pr.add_argument("basis", help="monomial | monomial-shifted | chebyshev | jacobi:A:B")
    pr.add_argument("coeffs", help="file with one real per line, highest "
                    "non-leading coefficient first")

    pe = sub.add_parser("experiment", help="run a named experiment")
    pe.add_argument("which", choices=["figure1"])
    pe.add_argument("--config", help="key=value config file")
    pe.add_argument("--out", help="output directory")
    pe.add_argument("--trials", type=int)
    pe.add_argument("--seed", type=int)
    pe.add_argument("--basis")
    pe.add_argument("--degree", type=int)
    pe.add_argument("--eps", type=float,
                    help="sets eps_h, eps_1 and eps_c at once")
    pe.add_argument("--target", choices=["H", "e1", "c", "all"])
    pe.add_argument("--structure", choices=["dense", "symmetric", "matchH"])

    pa = sub.add_parser("audit", help="audit node constants against proven bounds")
    pa.add_argument("--basis", default="chebyshev")
    pa.add_argument("--nmin", type=int, default=4)
    pa.add_argument("--nmax", type=int, default=64)
    pa.add_argument("--out", help="write audit CSV into this directory")
    return p


def _experiment_config(args) -> Config:
    if args.config:
        with open(args.config) as f:
            cfg = parse_config(f.read())
    else:
        cfg = Config()
    if args.trials is not None:
        cfg.trials = args.trials
    if args.seed is not None:
        cfg.seed = args.seed
    if args.basis is not None:
        cfg.basis = args.basis
    if args.degree is not None:
        cfg.degree = args.degree
    if args.eps is not None:
        cfg.eps_h = cfg.eps_1 = cfg.eps_c = args.eps
    if args.target is not None:
        cfg.perturb_target = args.target
    if args.structure is not None:
        cfg.structure = args.structure
    if args.out is not None:
        cfg.out_dir = args.out
    return cfg


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.cmd == "roots":
        try:
            result = roots_from_file(args.basis, args.coeffs)
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if not result.converged:
            print("warning: eigensolver did not converge", file=sys.stderr)
        for z in result.values:
            print(f"{z.real:.17g} {z.imag:.17g}")
        return 0 if result.converged else 1
    if args.cmd == "experiment":
        cfg = _experiment_config(args)
        results = run_figure1(cfg)
        total = sum(len(v) for v in results.values())
        print(f"wrote {total} trials to {cfg.out_dir}/figure1.csv "
              f"(+ {len(results)} SVG plots)")
        return 0
    if args.cmd == "audit":
        rows, violations = run_audit(args.basis, args.nmin, args.nmax, args.out)
        for v in violations:
            print(f"VIOLATION: {v}", file=sys.stderr)
        where = f", CSV in {args.out}" if args.out else ""
        print(f"audited {args.basis} for n in [{args.nmin}, {args.nmax}]: "
              f"{len(violations)} violation(s){where}")
        return 1 if violations else 0
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
