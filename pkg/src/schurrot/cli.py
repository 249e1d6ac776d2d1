"""Command-line front end.

Exit status: 0 on success (or a true answer, or all checks passing), 1 when a
check comes out false, 2 on malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import cyclic, permcore, qsym, tableaux, verify
from .permcore import PermMultiset, Permutation, format_perm, format_set, parse_perm
from .tableaux import Shape, Tableau

NMAX_CAP = 7


class UsageError(Exception):
    pass


# -- input parsing -----------------------------------------------------------

def parse_perm_set(text: str) -> list[Permutation]:
    """``"3142,1423"``, ``"3142 1423"`` or ``"10,2,...;1,2,..."`` for n >= 10."""
    text = text.strip()
    if not text:
        return []
    if ";" in text:
        tokens = [tok for tok in text.split(";") if tok.strip()]
    else:
        tokens = [tok for tok in re.split(r"[,\s]+", text) if tok]
    perms = []
    for tok in tokens:
        try:
            perms.append(parse_perm(tok))
        except ValueError:
            raise UsageError(f"malformed permutation {tok.strip()!r}") from None
    return perms


def parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in re.split(r"[,\s]+", text.strip()) if tok)
    except ValueError:
        raise UsageError(f"malformed partition {text!r}") from None
    if not tableaux.is_partition(parts):
        raise UsageError(f"malformed partition {text!r}")
    return parts


def parse_tableau(text: str, boxed: bool = True) -> Tableau:
    """A tableau from JSON, or from rows separated by ``/``.

    In the compact form the first row of a boxed tableau is its box:
    ``"3/462/51"``.  Use commas inside rows when entries exceed 9.
    """
    text = text.strip()
    try:
        if text.startswith("{"):
            return Tableau.from_json(json.loads(text))
        segments = text.split("/")
        if "," in text:
            rows = [[int(x) for x in seg.split(",") if x] for seg in segments]
        else:
            rows = [[int(ch) for ch in seg] for seg in segments]
        if boxed:
            if len(rows) < 2 or len(rows[0]) != 1:
                raise UsageError(f"boxed tableau {text!r} needs a single-entry first row")
            return tableaux.boxed_tableau(rows[0][0], rows[1:])
        return Tableau.from_rows(rows)
    except UsageError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed tableau {text!r}: {exc}") from None


def read_multiset(args) -> PermMultiset:
    if args.set is not None:
        text = args.set
    elif args.file is not None:
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from None
    else:
        text = sys.stdin.read()
    if text.lstrip().startswith("["):
        try:
            ms = PermMultiset.from_json(text, n=args.n)
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed multiset: {exc}") from None
    else:
        perms = parse_perm_set(text)
        sizes = {p.n for p in perms}
        if len(sizes) > 1:
            raise UsageError(f"permutations of mixed sizes {sorted(sizes)}")
        n = args.n if args.n is not None else (sizes.pop() if sizes else None)
        if n is None:
            raise UsageError("empty set: give --n")
        try:
            ms = PermMultiset.from_perms(perms, n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.n is not None and ms.n != args.n:
        raise UsageError(f"permutations have size {ms.n}, --n says {args.n}")
    if args.closure and args.left_closure:
        raise UsageError("--closure and --left-closure are exclusive")
    if args.closure:
        ms = permcore.horizontal_closure(ms)
    elif args.left_closure:
        ms = permcore.left_closure(ms)
    return ms


# -- output ------------------------------------------------------------------

def emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _tableau_text(t: Tableau) -> str:
    return t.render()


# -- verbs -------------------------------------------------------------------

def cmd_qfun(args) -> int:
    q = qsym.q_of(read_multiset(args))
    emit(args, str(q), q.to_json())
    return 0


def cmd_expand(args) -> int:
    q = qsym.q_of(read_multiset(args))
    try:
        e = qsym.schur_expand(q)
    except qsym.NotSymmetric:
        emit(args, "not symmetric", {"symmetric": False})
        return 1
    emit(args, str(e), e.to_json())
    return 0


def cmd_positivity(args) -> int:
    q = qsym.q_of(read_multiset(args))
    if not qsym.is_symmetric(q):
        emit(args, "not symmetric", {"symmetric": False, "schur_positive": False})
        return 1
    e = qsym.schur_expand(q)
    positive = all(c >= 0 for c in e.coeffs.values())
    text = f"{'Schur-positive' if positive else 'not Schur-positive'}: {e}"
    emit(args, text, {"symmetric": True, "schur_positive": positive, "expansion": e.to_json()})
    return 0 if positive else 1


def cmd_closure(args) -> int:
    # the verb means A C_n unless the left closure is asked for
    args.closure = not args.left_closure
    ms = read_multiset(args)
    text = "\n".join(format_perm(p) if m == 1 else f"{format_perm(p)} x{m}" for p, m in ms.items())
    emit(args, text, ms.to_json())
    return 0


def _trace_lines(trace: cyclic.StraighteningTrace) -> list[str]:
    return [
        f"{s.entry} <-> {s.partner} ({s.direction}) -> {state}"
        for s, state in zip(trace.steps, list(trace.states())[1:])
    ]


def cmd_jdt(args) -> int:
    r = parse_tableau(args.tableau)
    p, trace = cyclic.jdt(r, check=args.check)
    lines = [_tableau_text(p)]
    if args.trace:
        lines = _trace_lines(trace) + lines
    emit(args, "\n".join(lines), {
        "result": p.to_json(),
        "steps": [{"entry": s.entry, "partner": s.partner, "direction": s.direction,
                   "before": list(s.before), "after": list(s.after)} for s in trace.steps],
    })
    return 0


def cmd_ijdt(args) -> int:
    r = parse_tableau(args.tableau)
    if args.k is None:
        out = cyclic.jdt_inverse(r, check=args.check)
        emit(args, _tableau_text(out), {"result": out.to_json()})
        return 0
    out, trace = cyclic.ijdt(r, args.k, check=args.check)
    lines = [_tableau_text(out)]
    if args.trace:
        lines = _trace_lines(trace) + lines
    emit(args, "\n".join(lines), {"result": out.to_json()})
    return 0


def cmd_psi(args) -> int:
    p = parse_tableau(args.tableau)
    out = cyclic.psi(p, args.k)
    emit(args, _tableau_text(out), {"result": out.to_json(), "cdes": sorted(cyclic.cdes_boxed(out))})
    return 0


def cmd_orbit(args) -> int:
    if args.tableau is not None:
        orbits = [cyclic.orbit_of(parse_tableau(args.tableau))]
    elif args.shape is not None:
        orbits = cyclic.psi_orbits(parse_partition(args.shape))
    else:
        raise UsageError("give --shape or --tableau")
    records, lines = [], []
    for orbit in orbits:
        cdes = [cyclic.cdes_boxed(p) for p in orbit]
        records.append({
            "size": len(orbit),
            "tableaux": [p.to_json() for p in orbit],
            "cdes": [sorted(d) for d in cdes],
        })
        lines.append(f"orbit of size {len(orbit)}:")
        lines += [f"  {p}  cDes={format_set(d)}" for p, d in zip(orbit, cdes)]
    emit(args, "\n".join(lines), {"orbits": records})
    return 0


def cmd_syt(args) -> int:
    lam = parse_partition(args.shape)
    if args.boxed:
        shape = tableaux.boxed_shape(lam)
    else:
        mu = parse_partition(args.mu) if args.mu else ()
        try:
            shape = Shape(lam, mu)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    tabs = tableaux.enumerate_syt(shape)
    lines = [f"{len(tabs)} standard tableaux of shape {shape}"]
    for t in tabs:
        lines.append(f"{t}  Des={format_set(tableaux.des_tableau(t))}")
    emit(args, "\n".join(lines), {"shape": shape.to_json(), "count": len(tabs),
                                  "tableaux": [t.to_json() for t in tabs]})
    return 0


def cmd_rsk(args) -> int:
    perms = parse_perm_set(args.perm)
    if len(perms) != 1:
        raise UsageError(f"expected one permutation, got {args.perm!r}")
    p_tab, q_tab = permcore.rsk(perms[0])
    text = f"P:\n{p_tab.render()}\nQ:\n{q_tab.render()}"
    emit(args, text, {"P": p_tab.to_json(), "Q": q_tab.to_json()})
    return 0


def cmd_verify(args) -> int:
    if args.nmax > NMAX_CAP and not args.allow_large:
        raise UsageError(f"--nmax above {NMAX_CAP} needs --allow-large")
    if args.nmax < 2:
        raise UsageError("--nmax must be at least 2")
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = [verify.run_suite(name, args.nmax, args.seed) for name in names]
    ok = all(r.passed for r in reports)
    text = "\n".join(r.text() for r in reports) + f"\n{'ALL PASS' if ok else 'FAILURES'}"
    emit(args, text, {"pass": ok, "suites": [r.to_json() for r in reports]})
    return 0 if ok else 1


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    sets = argparse.ArgumentParser(add_help=False)
    src = sets.add_mutually_exclusive_group()
    src.add_argument("--set", help='permutations, e.g. "3142,1423"')
    src.add_argument("--file", help="file with permutations or a JSON multiset")
    sets.add_argument("--n", type=int, help="size of the input permutations")
    sets.add_argument("--closure", action="store_true", help="apply A -> A C_n first")
    sets.add_argument("--left-closure", action="store_true", help="apply A -> C_n A first")

    tab = argparse.ArgumentParser(add_help=False)
    tab.add_argument("--tableau", required=True, help='JSON or rows like "3/462/51" (box first)')
    tab.add_argument("--check", action="store_true", help="audit the straightening trace")
    tab.add_argument("--trace", action="store_true", help="print every elementary step")

    parser = argparse.ArgumentParser(prog="schurrot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    sub.add_parser("qfun", parents=[common, sets], help="Q(B) in the fundamental basis").set_defaults(func=cmd_qfun)
    sub.add_parser("expand", parents=[common, sets], help="Schur expansion of Q(B)").set_defaults(func=cmd_expand)
    sub.add_parser("positivity", parents=[common, sets], help="is B Schur-positive?").set_defaults(func=cmd_positivity)
    sub.add_parser("closure", parents=[common, sets], help="list A C_n (or C_n A)").set_defaults(func=cmd_closure)

    sub.add_parser("jdt", parents=[common, tab], help="straighten k+T").set_defaults(func=cmd_jdt)
    p = sub.add_parser("ijdt", parents=[common, tab], help="straighten -k+P, or invert jdt when --k is omitted")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_ijdt)
    p = sub.add_parser("psi", parents=[common], help="apply the cyclic action k times")
    p.add_argument("--tableau", required=True)
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("orbit", parents=[common], help="orbits of the cyclic action on SYT(lambda^box)")
    p.add_argument("--shape", help="lambda, e.g. 3,2")
    p.add_argument("--tableau")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("syt", parents=[common], help="enumerate standard tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--mu", help="inner partition of a skew shape")
    p.add_argument("--boxed", action="store_true", help="use lambda^box")
    p.set_defaults(func=cmd_syt)

    p = sub.add_parser("rsk", parents=[common], help="insertion and recording tableaux")
    p.add_argument("--perm", required=True)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*verify.SUITES, "all"])
    p.add_argument("--nmax", type=int, default=NMAX_CAP)
    p.add_argument("--allow-large", action="store_true", help=f"permit --nmax above {NMAX_CAP}")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
