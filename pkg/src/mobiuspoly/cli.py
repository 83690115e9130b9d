"""Command-line surface.

Results go to stdout, diagnostics to stderr; exit status 0 on success and
2 on any input or validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import boolean_data, chain_data, divisor_data, rescale
from .errors import InputError
from .files import format_poset_text, parse_aut_text, parse_poset_text
from .incidence import delta_matrix, mobius_matrix, mobius_polynomial, zeta_matrix
from .polynomial import IntPolynomial
from .poset import fixed_subposet, mobius_recursive, validate
from .constructions import direct_product
from .series import graded_trace, hilbert_series

_GENERATORS = {"boolean": boolean_data, "chain": chain_data, "divisor": divisor_data}


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_validated(path: str):
    poset, ranks = parse_poset_text(_read(path))
    diags = validate(poset, ranks)
    if diags:
        raise InputError(f"{path}: " + "; ".join(diags))
    return poset, ranks


def cmd_gen(args) -> int:
    labels, covers, ranks = _GENERATORS[args.kind](args.parameter)
    lines = [f"elem {lab} rank {ranks[lab]}" for lab in labels]
    lines += [f"cover {a} {b}" for a, b in covers]
    _write_out("\n".join(lines) + "\n", args.output)
    return 0


def cmd_mobius(args) -> int:
    poset, ranks = _load_validated(args.file)
    print(mobius_polynomial(poset, ranks))
    return 0


def _print_series(tag: str, series, terms: int) -> None:
    print(f"{tag} = {series}")
    print("coeffs: " + ", ".join(str(c) for c in series.expand(terms)))


def cmd_hilbert(args) -> int:
    poset, ranks = _load_validated(args.file)
    _print_series("H", hilbert_series(poset, ranks), args.terms)
    return 0


def cmd_trace(args) -> int:
    poset, ranks = _load_validated(args.file)
    aut = parse_aut_text(_read(args.aut), poset, ranks)
    _print_series("Tr", graded_trace(poset, ranks, aut), args.terms)
    return 0


def cmd_product(args) -> int:
    pa, ra = _load_validated(args.file_a)
    pb, rb = _load_validated(args.file_b)
    poset, ranks = direct_product(pa, ra, pb, rb)
    _write_out(format_poset_text(poset, ranks), args.output)
    return 0


def cmd_rescale(args) -> int:
    poset, ranks = _load_validated(args.file)
    poset, ranks = rescale(poset, ranks, args.factor)
    _write_out(format_poset_text(poset, ranks), args.output)
    return 0


def cmd_fixed(args) -> int:
    poset, ranks = _load_validated(args.file)
    aut = parse_aut_text(_read(args.aut), poset, ranks)
    sub, sub_ranks = fixed_subposet(aut)
    _write_out(format_poset_text(sub, sub_ranks), args.output)
    return 0


def cmd_verify(args) -> int:
    poset, ranks = parse_poset_text(_read(args.file))
    results = []

    diags = validate(poset, ranks)
    results.append(("validate", not diags, "; ".join(diags)))

    try:
        zeta = zeta_matrix(poset, ranks)
        mob = mobius_matrix(poset, ranks)
        delta = delta_matrix(poset, ranks)
        ok = zeta.matrix @ mob.matrix == delta.matrix and mob.matrix @ zeta.matrix == delta.matrix
        results.append(("zeta-mobius-inverse", ok, "zeta and mobius are not inverse"))

        basis = poset.basis_labels()
        ok = True
        detail = ""
        for i, p in enumerate(basis):
            for j, q in enumerate(basis):
                mu = mobius_recursive(poset, p, q)
                gap = ranks.rank(q) - ranks.rank(p) if poset.leq(p, q) else 0
                expected = IntPolynomial.monomial(mu, gap) if mu else IntPolynomial()
                if mob.matrix.entry(i, j) != expected:
                    ok = False
                    detail = f"disagreement at ({p}, {q})"
                    break
            if not ok:
                break
        results.append(("mobius-recursion-agreement", ok, detail))

        value = mob.matrix.sum_entries()(0)
        results.append(
            ("mobius-at-zero", value == len(poset), f"M(0) = {value}, expected {len(poset)}")
        )
    except InputError as exc:
        for name in ("zeta-mobius-inverse", "mobius-recursion-agreement", "mobius-at-zero"):
            if not any(r[0] == name for r in results):
                results.append((name, False, str(exc)))

    all_ok = True
    for name, ok, detail in results:
        print(f"{name}: " + ("PASS" if ok else f"FAIL ({detail})"))
        all_ok = all_ok and ok
    return 0 if all_ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobiuspoly",
        description="Möbius polynomials, Hilbert series, and graded traces of finite ranked posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a poset file for a built-in family")
    p.add_argument("kind", choices=sorted(_GENERATORS))
    p.add_argument("parameter", type=int)
    p.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("mobius", help="print the Möbius polynomial of a poset file")
    p.add_argument("file")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("hilbert", help="print the Hilbert series and its coefficients")
    p.add_argument("file")
    p.add_argument("--terms", type=int, default=16, help="last coefficient index (default 16)")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("trace", help="print the graded trace series of an automorphism")
    p.add_argument("file")
    p.add_argument("--aut", required=True, help="automorphism file")
    p.add_argument("--terms", type=int, default=16)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("product", help="write the direct product of two poset files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("rescale", help="write the poset with ranks multiplied by n")
    p.add_argument("file")
    p.add_argument("factor", type=int)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_rescale)

    p = sub.add_parser("fixed", help="write the fixed subposet of an automorphism")
    p.add_argument("file")
    p.add_argument("--aut", required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_fixed)

    p = sub.add_parser("verify", help="run internal consistency checks on a poset file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
