"""Command-line front end: compute, verify and benchmark determinants.

Exit codes are part of the contract: 0 on success, 2 for input problems
(bad flags, unparseable matrices), 3 when an algorithm refuses the
requested ring or size.

Matrices come either from a JSON file (--input, any ring) or inline
(--matrix "[[1,2],[3,4]]", integer literals only; the active ring decides
how those literals are interpreted).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import baselines, bench, pipeline
from .errors import (AlgorithmRefusal, HypothesisNotSatisfied, InversionError,
                     ParseError, UsageError)
from .matrices import Matrix, dump_matrix, load_matrix
from .rings import ring_from_spec

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_REFUSED = 3

DET_ALGOS = ("formula", "permutation", "chio", "berkowitz", "csanky")
CHARPOLY_ALGOS = ("formula", "berkowitz", "csanky")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringdet",
        description="Exact determinants and characteristic polynomials over "
                    "commutative rings, division-free.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_args(p):
        p.add_argument("--ring", default=None,
                       help="ring descriptor: int | mod:<m> | rat | poly:<v1,v2,...>")
        p.add_argument("--input", "-i", metavar="FILE",
                       help="matrix JSON file")
        p.add_argument("--matrix", "-m", metavar="TEXT",
                       help='inline matrix of integer literals, e.g. "[[1,2],[3,4]]"')
        p.add_argument("--emit-matrix", action="store_true",
                       help="echo the parsed matrix in canonical form and exit")

    p_det = sub.add_parser("det", help="compute a determinant")
    add_matrix_args(p_det)
    p_det.add_argument("--algo", default="formula", choices=DET_ALGOS)
    p_det.add_argument("--format", default="text", choices=("text", "json"))

    p_cp = sub.add_parser("charpoly", help="compute a characteristic polynomial")
    add_matrix_args(p_cp)
    p_cp.add_argument("--algo", default="formula", choices=CHARPOLY_ALGOS)
    p_cp.add_argument("--format", default="text", choices=("text", "json"))

    p_ver = sub.add_parser("verify", help="cross-check algorithms on one matrix")
    add_matrix_args(p_ver)
    p_ver.add_argument("--format", default="text", choices=("text", "json"))

    p_bench = sub.add_parser("bench", help="instrumented scaling runs")
    p_bench.add_argument("--ring", default="int")
    p_bench.add_argument("--algo", default="formula",
                         help="comma-separated list, e.g. formula,berkowitz")
    p_bench.add_argument("--sizes", required=True,
                         help="comma-separated matrix sizes, e.g. 4,8,16")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--format", default="csv", choices=("csv", "json"))
    p_bench.add_argument("--figures", metavar="DIR", default=None,
                         help="also render scaling figures (and a CSV copy) into DIR")
    return parser


def _resolve_matrix(args) -> Matrix:
    if args.input and args.matrix:
        raise UsageError("give either --input or --matrix, not both")
    if args.matrix is not None:
        ring = ring_from_spec(args.ring or "int")
        try:
            raw = json.loads(args.matrix)
        except json.JSONDecodeError as e:
            raise ParseError(f"inline matrix at column {e.colno}: {e.msg}") from None
        if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
            raise ParseError("inline matrix must be a list of rows")
        width = len(raw[0]) if raw else 0
        rows = []
        for i, r in enumerate(raw):
            if len(r) != width:
                raise ParseError(f"inline matrix row {i}: ragged rows")
            for j, x in enumerate(r):
                if isinstance(x, bool) or not isinstance(x, int):
                    raise ParseError(
                        f"inline matrix entry ({i},{j}): integer literals only; "
                        "use --input for other rings"
                    )
            rows.append(tuple(ring.from_int(x) for x in r))
        return Matrix(ring, tuple(rows))
    if args.input is not None:
        text = Path(args.input).read_text()
        m = load_matrix(text)
        if args.ring is not None and ring_from_spec(args.ring) != m.ring:
            raise ParseError(
                f"--ring {args.ring} disagrees with the file's ring "
                f"{m.ring.spec_string()}"
            )
        return m
    raise UsageError("no matrix given; use --input FILE or --matrix TEXT")


def _require_square(m: Matrix) -> None:
    if not m.is_square():
        raise UsageError(f"need a square matrix, got {m.rows}x{m.cols}")


def _det_by(algo: str, m: Matrix):
    if algo == "formula":
        return pipeline.determinant(m)
    if algo == "permutation":
        return baselines.det_permutation(m)
    if algo == "chio":
        return baselines.det_chio(m)
    if algo == "berkowitz":
        return baselines.det_from_charpoly(baselines.charpoly_berkowitz(m))
    if algo == "csanky":
        return baselines.det_from_charpoly(baselines.charpoly_csanky(m))
    raise UsageError(f"unknown algorithm {algo!r}")


def _charpoly_by(algo: str, m: Matrix):
    if algo == "formula":
        return pipeline.char_poly(m)
    if algo == "berkowitz":
        return baselines.charpoly_berkowitz(m)
    if algo == "csanky":
        return baselines.charpoly_csanky(m)
    raise UsageError(f"unknown algorithm {algo!r}")


def _cmd_det(args) -> int:
    m = _resolve_matrix(args)
    if args.emit_matrix:
        print(dump_matrix(m))
        return EXIT_OK
    _require_square(m)
    value = _det_by(args.algo, m)
    if args.format == "json":
        print(json.dumps({
            "command": "det", "algo": args.algo,
            "ring": m.ring.spec_string(), "n": m.rows,
            "determinant": m.ring.element_to_json(value),
        }))
    else:
        print(m.ring.format(value))
    return EXIT_OK


def _cmd_charpoly(args) -> int:
    m = _resolve_matrix(args)
    if args.emit_matrix:
        print(dump_matrix(m))
        return EXIT_OK
    _require_square(m)
    cp = _charpoly_by(args.algo, m)
    if args.format == "json":
        print(json.dumps({
            "command": "charpoly", "algo": args.algo,
            "ring": m.ring.spec_string(), "n": m.rows,
            "degree": cp.degree,
            "coeffs": [m.ring.element_to_json(c) for c in cp.coeffs],
        }))
    else:
        print(cp.render())
    return EXIT_OK


def _verify_checks(m: Matrix):
    """Yield (name, status, detail) triples; status PASS/FAIL/SKIPPED."""
    ring = m.ring
    n = m.rows
    det_formula = pipeline.determinant(m)
    cp_formula = pipeline.char_poly(m)

    if n <= baselines.PERMUTATION_LIMIT:
        ok = ring.eq(det_formula, baselines.det_permutation(m))
        yield ("det:formula=permutation", "PASS" if ok else "FAIL", "")
    else:
        yield ("det:formula=permutation", "SKIPPED",
               f"size: n={n} beyond the n<={baselines.PERMUTATION_LIMIT} oracle guard")

    cp_b = baselines.charpoly_berkowitz(m)
    ok = cp_formula == cp_b
    yield ("charpoly:formula=berkowitz", "PASS" if ok else "FAIL", "")
    ok = ring.eq(det_formula, baselines.det_from_charpoly(cp_b))
    yield ("det:formula=berkowitz", "PASS" if ok else "FAIL", "")

    try:
        ok = ring.eq(det_formula, baselines.det_chio(m))
        yield ("det:formula=chio", "PASS" if ok else "FAIL", "")
    except AlgorithmRefusal as e:
        yield ("det:formula=chio", "SKIPPED", f"ring: {e}")

    try:
        ok = cp_formula == baselines.charpoly_csanky(m)
        yield ("charpoly:formula=csanky", "PASS" if ok else "FAIL", "")
    except AlgorithmRefusal as e:
        yield ("charpoly:formula=csanky", "SKIPPED", f"ring: {e}")

    if n > baselines.PERMUTATION_LIMIT:
        yield ("telescoping", "SKIPPED", "size: oracle minors need n<=9")
        return
    try:
        ok = pipeline.verify_telescoping(m)
        yield ("telescoping", "PASS" if ok else "FAIL", "")
    except AlgorithmRefusal as e:
        yield ("telescoping", "SKIPPED", f"ring: {e}")
    except HypothesisNotSatisfied as e:
        yield ("telescoping", "SKIPPED", f"hypothesis: {e}")


def _cmd_verify(args) -> int:
    m = _resolve_matrix(args)
    if args.emit_matrix:
        print(dump_matrix(m))
        return EXIT_OK
    _require_square(m)
    checks = list(_verify_checks(m))
    failed = any(status == "FAIL" for _, status, _ in checks)
    if args.format == "json":
        print(json.dumps({
            "command": "verify", "ring": m.ring.spec_string(), "n": m.rows,
            "ok": not failed,
            "checks": [{"name": nm, "status": st, "detail": d}
                       for nm, st, d in checks],
        }))
    else:
        for name, status, detail in checks:
            line = f"{name} {status}"
            if detail:
                line += f" ({detail})"
            print(line)
    return EXIT_OK if not failed else 1


def _cmd_bench(args) -> int:
    ring = ring_from_spec(args.ring)
    algos = [a.strip() for a in args.algo.split(",") if a.strip()]
    if not algos:
        raise UsageError("no algorithms given")
    for a in algos:
        if a not in bench.ALGORITHMS:
            raise UsageError(f"unknown algorithm {a!r}; choose from "
                             f"{', '.join(sorted(bench.ALGORITHMS))}")
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if not sizes:
        raise UsageError("no sizes given")
    # refuse guarded sizes up front rather than mid-table
    if "permutation" in algos:
        too_big = [n for n in sizes if n > baselines.PERMUTATION_LIMIT]
        if too_big:
            raise AlgorithmRefusal(
                f"permutation expansion refuses n={too_big[0]} "
                f"(guard: n<={baselines.PERMUTATION_LIMIT})"
            )
    rows = bench.run_scaling(algos, sizes, ring, args.seed)
    if args.format == "json":
        out = json.dumps([r.as_dict() for r in rows])
    else:
        out = bench.rows_to_csv(rows)
    print(out)
    if args.figures:
        from .figures import save_scaling_figures

        outdir = Path(args.figures)
        save_scaling_figures(rows, outdir)
        (outdir / "scaling.csv").write_text(bench.rows_to_csv(rows) + "\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "det": _cmd_det,
        "charpoly": _cmd_charpoly,
        "verify": _cmd_verify,
        "bench": _cmd_bench,
    }[args.command]
    try:
        return handler(args)
    except ParseError as e:
        print(f"ringdet: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except UsageError as e:
        print(f"ringdet: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (AlgorithmRefusal, InversionError) as e:
        print(f"ringdet: refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except FileNotFoundError as e:
        print(f"ringdet: input error: {e}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
