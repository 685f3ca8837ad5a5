"""Command-line front end.

Matrices are written row-major as ``"a,b;c,d"``; column ``j`` is the image of
the ``j``-th torus generator.  Permutations use 1-based cycle notation such as
``"(1,2,3)(4,5)"``.  Seifert symbols are written ``"Oo,g;b1/a1,b2/a2"``.

Every subcommand builds one result record.  The text output prints it as
``key: value`` lines; ``--json`` prints the same record as a JSON object.
Exit status is 0 on success, 1 on a mathematical error (for example a lattice
that is not invariant) and 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Any, Callable, Optional, Sequence

from . import bundle, covers, fox, permrep, seifert
from .intlat import Lattice, Mat2, sublattices

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 1, 2

_INT = r"\s*(-?\d+)\s*"


def parse_matrix(s: str) -> Mat2:
    m = re.fullmatch(f"{_INT},{_INT};{_INT},{_INT}", s)
    if not m:
        raise ValueError(f"malformed matrix {s!r}; expected 'a,b;c,d'")
    return Mat2(*(int(g) for g in m.groups()))


class InputError(ValueError):
    """Malformed command-line input discovered after argument parsing."""


def parse_perm(s: str, degree: int) -> permrep.Perm:
    return permrep.Perm.parse(s, degree)


def _perm_arg(s: str, degree: int) -> permrep.Perm:
    try:
        return parse_perm(s, degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_basis(s: str) -> Lattice:
    """Two generating vectors ``"p,q;s,r"`` meaning ``(p, q)`` and ``(s, r)``."""
    m = re.fullmatch(f"{_INT},{_INT};{_INT},{_INT}", s)
    if not m:
        raise ValueError(f"malformed basis {s!r}; expected 'p,q;s,r'")
    p, q, s_, r = (int(g) for g in m.groups())
    return Lattice.from_basis((p, q), (s_, r))


def parse_ints(s: str) -> list[int]:
    if not s.strip():
        return []
    try:
        return [int(x) for x in s.split(",")]
    except ValueError:
        raise ValueError(f"malformed integer list {s!r}") from None


def _arg(parser: Callable[[str], Any]) -> Callable[[str], Any]:
    """Adapt a parser so argparse reports its failures (exit status 2)."""

    def wrapped(s: str):
        try:
            return parser(s)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    wrapped.__name__ = parser.__name__
    return wrapped


# ---------------------------------------------------------------------------
# handlers: each returns a JSON-ready dict
# ---------------------------------------------------------------------------

def _bundle_summary(A: Mat2) -> dict:
    M = bundle.TorusBundle(A)
    return {"monodromy": str(A), "genus": bundle.genus(M)}


def cmd_genus(args) -> dict:
    return _bundle_summary(args.A)


def cmd_homology(args) -> dict:
    M = bundle.TorusBundle(args.A)
    h = bundle.homology(M)
    return {
        "monodromy": str(args.A),
        "h1": str(h),
        "h1_rank": h.rank,
        "n1": bundle.first_invariant_factor(M),
        "double_branched": bundle.is_double_branched(M),
        "sakuma_pairs": [list(p) for p in sorted(bundle.sakuma_pairs(M))],
    }


def cmd_power_cover(args) -> dict:
    M = bundle.TorusBundle(args.A)
    pc = covers.power_cover(M, args.n)
    out = {
        "monodromy": str(args.A),
        "sheets": args.n,
        "base_genus": bundle.genus(M),
        "total_monodromy": str(pc.total.monodromy),
        "total_genus": bundle.genus(pc.total),
        "total_h1": str(bundle.homology(pc.total)),
    }
    if args.n >= 2 and out["base_genus"] == 3:
        cert = covers.power_cover_certificate(M, args.n)
        out["certificate"] = {
            "case": cert.case,
            "method": cert.method,
            "valid": cert.valid,
            "h1_rank": cert.homology_rank,
            "alpha": cert.alpha,
            "f_factor": cert.f_factor,
        }
    return out


def _cover_record(c: covers.FiberCover) -> dict:
    return {
        "lattice": str(c.lattice),
        "sheets": c.sheets,
        "lifted": str(c.lifted.monodromy),
        "lifted_genus": bundle.genus(c.lifted),
    }


def cmd_fiber_covers(args) -> dict:
    M = bundle.TorusBundle(args.A)
    if args.lowering_only:
        found = covers.find_genus_lowering(M, args.max_index)
    else:
        found = [covers.fiber_cover(M, L)
                 for n in range(1, args.max_index + 1)
                 for L in sublattices(n) if covers.extends(M, L)]
    return {
        "monodromy": str(args.A),
        "genus": bundle.genus(M),
        "count": len(found),
        "covers": [_cover_record(c) for c in found],
    }


def cmd_restrict(args) -> dict:
    B = covers.restrict_monodromy(args.A, args.basis)
    return {"monodromy": str(args.A), "lattice": str(args.basis),
            "index": args.basis.index, "restricted": str(B)}


def cmd_omega(args) -> dict:
    r = permrep.omega_rep(args.m, args.n, args.d, args.i0)
    return {"degree": r.degree, "rho": args.i0 * args.n // args.d,
            "a": str(r.sigma), "b": str(r.tau)}


def cmd_classify_rep(args) -> dict:
    r = permrep.TorusRep(_perm_arg(args.sigma, args.degree), _perm_arg(args.tau, args.degree))
    c = permrep.classify_rep(r)
    return {
        "m": c.m, "n": c.n, "d": c.d, "rho": c.rho, "i0": c.i0,
        "swapped": c.swapped,
        "conjugator": str(c.conjugator),
        "covering_lattice": str(permrep.covering_lattice(c.m, c.n, c.rho)),
    }


def cmd_factor_rep(args) -> dict:
    k = args.degree
    r = permrep.BundleRep(_perm_arg(args.sx, k), _perm_arg(args.sy, k), _perm_arg(args.st, k))
    f = permrep.factor_bundle_rep(r)
    return {
        "m": f.m,
        "block_size": f.block_size,
        "blocks": [list(b) for b in f.blocks],
        "q_sx": str(f.q_images[0]),
        "q_sy": str(f.q_images[1]),
        "q_st": str(f.q_images[2]),
        "gamma_sx": str(f.gamma.sx),
        "gamma_sy": str(f.gamma.sy),
        "gamma_st": str(f.gamma.st),
    }


def cmd_fox_cert(args) -> dict:
    spec = fox.EvalSpec.standard(args.alpha)
    relators = fox.bundle_relators(args.alpha)
    rows = []
    for r, row in zip(relators, fox.jacobian(args.alpha)):
        rows.append({
            "relator": fox.format_word(r),
            "value": fox.evaluate_word(r, spec),
            "derivatives": [fox.evaluate(d, spec) for d in row],
        })
    return {"alpha": args.alpha, "certificate": fox.rank3_certificate(args.alpha), "relators": rows}


def cmd_seifert_cover(args) -> dict:
    sym = args.symbol
    r = args.r if args.r is not None else seifert.admissible_shifts(sym, args.n)
    cover = seifert.cyclic_cover(sym, args.n, r)
    return {"symbol": str(sym), "sheets": args.n, "r": list(r), "cover": str(cover)}


def cmd_seifert_genus(args) -> dict:
    return {"symbol": str(args.symbol), "genus": seifert.seifert_genus(args.symbol)}


def cmd_seifert_lower(args) -> dict:
    found = seifert.find_lowering(args.symbol)
    out = {"symbol": str(args.symbol), "genus": seifert.seifert_genus(args.symbol)}
    if found is None:
        out.update(cover=None, sheets=None, cover_genus=None)
    else:
        cover, sheets = found
        out.update(cover=str(cover), sheets=sheets, cover_genus=seifert.seifert_genus(cover))
    return out


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _fmt(v: Any) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return " ".join(_fmt(x) for x in v) if v and not isinstance(v[0], list) else \
            " ".join("[" + _fmt(x) + "]" for x in v)
    return str(v)


def render_text(record: dict, indent: str = "") -> str:
    lines = []
    for key, value in record.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(indent + "  - " + ", ".join(f"{k}={_fmt(v)}" for k, v in item.items()))
        else:
            lines.append(f"{indent}{key}: {_fmt(value)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torusbundles", description="Torus bundle coverings and genus.")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")
    matrix = _arg(parse_matrix)
    symbol = _arg(seifert.SeifertSymbol.parse)

    def add(name, handler, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object")
        sp.set_defaults(handler=handler)
        return sp

    sp = add("genus", cmd_genus, "Heegaard genus of M_A")
    sp.add_argument("-A", type=matrix, required=True)
    sp = add("homology", cmd_homology, "H_1, n_1 and Sakuma pairs")
    sp.add_argument("-A", type=matrix, required=True)
    sp = add("power-cover", cmd_power_cover, "the n-fold power covering")
    sp.add_argument("-A", type=matrix, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp = add("fiber-covers", cmd_fiber_covers, "coverings of fibers up to a given index")
    sp.add_argument("-A", type=matrix, required=True)
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--lowering-only", action="store_true")
    sp = add("restrict", cmd_restrict, "monodromy of the covering given by a lattice")
    sp.add_argument("-A", type=matrix, required=True)
    sp.add_argument("--basis", type=_arg(parse_basis), required=True,
                    help="generators 'p,q;s,r' of the lattice")
    sp = add("omega", cmd_omega, "the representation omega(m, n, d, rho)")
    for flag in ("-m", "-n", "-d"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--i0", type=int, default=0)
    sp = add("classify-rep", cmd_classify_rep, "identify a transitive abelian representation")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--tau", required=True)
    sp = add("factor-rep", cmd_factor_rep, "split a bundle representation into power and fiber parts")
    sp.add_argument("--degree", type=int, required=True)
    for flag in ("--sx", "--sy", "--st"):
        sp.add_argument(flag, default="")
    sp = add("fox-cert", cmd_fox_cert, "rank-three certificate via Fox derivatives")
    sp.add_argument("--alpha", type=int, required=True)
    sp = add("seifert-cover", cmd_seifert_cover, "cyclic covering of a Seifert manifold")
    sp.add_argument("--symbol", type=symbol, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-r", type=_arg(parse_ints), default=None, help="comma-separated shifts")
    sp = add("seifert-genus", cmd_seifert_genus, "genus with one exceptional fiber")
    sp.add_argument("--symbol", type=symbol, required=True)
    sp = add("seifert-lower", cmd_seifert_lower, "genus-lowering cyclic covering")
    sp.add_argument("--symbol", type=symbol, required=True)
    return p


# options whose values may legitimately begin with "-"
_SIGNED_VALUE_OPTIONS = ("-A", "--basis", "-r", "--symbol", "--alpha")


def _attach_signed_values(argv: Sequence[str]) -> list[str]:
    """Join ``-A -1,0;0,-1`` into one token so argparse does not read a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _SIGNED_VALUE_OPTIONS:
            value = next(it, None)
            if value is None:
                out.append(tok)
            elif tok.startswith("--"):
                out.append(f"{tok}={value}")
            else:
                out.append(tok + value)
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = _attach_signed_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE if isinstance(exc, InputError) else EXIT_DOMAIN
    if args.json:
        print(json.dumps(record, sort_keys=False))
    else:
        print(render_text(record))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
