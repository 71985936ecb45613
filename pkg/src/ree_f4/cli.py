"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 hypothesis violation,
3 Unknown verdict under --strict, 4 self-test failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import characters as ch
from . import isogeny as iso
from . import theoremengine as te
from .isogeny import TAU, TauDigits
from .lattice import Weight, alpha0_pairing
from .selftest import run_checks

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_UNKNOWN, EXIT_SELFTEST = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _weight(text):
    try:
        return Weight.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _digits(text):
    try:
        return TauDigits.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _require(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + m for m in missing))


# --- command handlers: each returns (json-able object, tsv text, exit code)

def cmd_gamma(args):
    gamma = ch.gamma_set()
    if args.list:
        rows = [{"nu": str(w), "pairing": alpha0_pairing(w)} for w in gamma]
        tsv = "\n".join(f"{r['nu']}\t{r['pairing']}" for r in rows)
        return {"op": "gamma", "count": len(gamma), "gamma": rows}, tsv
    return {"op": "gamma", "count": len(gamma)}, str(len(gamma))


def cmd_restricted(args):
    _require(args, "r")
    if args.weight is not None:
        ok = iso.is_restricted(args.r, args.weight)
        return {"op": "restricted", "r": args.r, "weight": str(args.weight), "restricted": ok}, str(ok).lower()
    count = iso.restricted_count(args.r)
    if args.list:
        ws = [str(w) for w in iso.enumerate_restricted(args.r)]
        return {"op": "restricted", "r": args.r, "count": count, "weights": ws}, "\n".join(ws)
    return {"op": "restricted", "r": args.r, "count": count}, str(count)


def cmd_digits(args):
    _require(args, "r", "weight")
    d = iso.digits(args.r, args.weight)
    return {"op": "digits", "r": args.r, "weight": str(args.weight), "digits": str(d)}, str(d)


def cmd_assemble(args):
    _require(args, "digits")
    w = iso.assemble(args.digits)
    return {"op": "assemble", "r": args.digits.r, "digits": str(args.digits), "weight": str(w)}, str(w)


def cmd_tilde(args):
    _require(args, "r", "weight", "n")
    w = iso.tilde(args.r, args.weight, args.n)
    return {"op": "tilde", "r": args.r, "n": args.n, "weight": str(args.weight), "tilde": str(w)}, str(w)


def cmd_split(args):
    _require(args, "r", "t", "weight")
    a, b = iso.steinberg_split(args.r, args.t, args.weight)
    obj = {"op": "split", "r": args.r, "t": args.t, "weight": str(args.weight),
           "lambda0": str(a), "lambda1": str(b)}
    return obj, f"{a}\t{b}"


def _character_obj(op, c, **inputs):
    obj = {"op": op, "dim": c.dim,
           "mults": {str(Weight(*k)): m for k, m in sorted(c.mults.items())}}
    obj.update({k: str(v) for k, v in inputs.items()})
    return obj, c.dump()


def cmd_character(args):
    _require(args, "weight")
    return _character_obj("character", ch.weyl_character(args.weight), weight=args.weight)


def cmd_dim(args):
    _require(args, "weight")
    d = ch.weyl_dim(args.weight)
    return {"op": "dim", "weight": str(args.weight), "dim": d}, str(d)


def cmd_tensor(args):
    _require(args, "lambda", "mu")
    c = ch.tensor(ch.weyl_character(args.lam), ch.weyl_character(args.mu))
    return _character_obj("tensor", c, **{"lambda": args.lam, "mu": args.mu})


def cmd_sections(args):
    _require(args, "r")
    secs = ch.filtration_sections(args.r)
    if args.count:
        return {"op": "sections", "r": args.r, "count": len(secs)}, str(len(secs))
    rows = [{"lambda": str(s.lam), "twist_level": s.twist_level, "dimension": s.dimension} for s in secs]
    tsv = "\n".join(f"{r['lambda']}\t{r['dimension']}" for r in rows)
    return {"op": "sections", "r": args.r, "count": len(secs), "sections": rows}, tsv


def _verdict(v):
    return v.to_dict(), "\n".join(f"{t.cite}\t{t.detail}" for t in v.trace)


def cmd_check_lemma33(args):
    _require(args, "r", "lambda", "mu", "nu")
    return _verdict(te.check_hom_triviality(args.r, args.lam, args.mu, args.nu))


def cmd_audit_prop34(args):
    _require(args, "r", "t")
    rep = te.audit_truncation_chain(args.r, args.t)
    d = rep.to_dict()
    tsv = "\n".join(f"{r['nu']}\t{r['left']}\t{r['middle']}\t{r['right']}\t{r['ok']}" for r in d["rows"])
    return d, tsv


def cmd_verdict_selfext(args):
    lam = args.weight if args.weight is not None else args.lam
    if lam is None:
        raise UsageError("missing required flag(s): --weight")
    _require(args, "r")
    return _verdict(te.selfext_verdict(args.r, lam))


def cmd_verdict_pair(args):
    _require(args, "r", "lambda", "mu")
    return _verdict(te.reduce_to_algebraic_group(args.r, args.lam, args.mu))


def cmd_verdict_cor35(args):
    _require(args, "r", "t", "lambda", "mu")
    return _verdict(te.hom_reduction_verdict(args.r, args.t, args.lam, args.mu))


def cmd_summands(args):
    _require(args, "r", "t", "lambda", "mu")
    rows = te.remainder_summands(args.r, args.t, args.lam, args.mu)
    obj = {"op": "summands", "inputs": {"r": args.r, "t": args.t, "lambda": str(args.lam), "mu": str(args.mu)},
           "count": len(rows), "r_zero": all(x["vanishes"] for x in rows), "summands": rows}
    tsv = "\n".join(f"{x['nu']}\t{x['hom_status']}\t{x['ext_status']}\t{x['status']}" for x in rows)
    return obj, tsv


def cmd_linkage(args):
    _require(args, "lambda", "mu")
    return _verdict(te.ext_linkage_certificate(args.lam, args.mu))


def cmd_selftest(args):
    results = run_checks(args.isogeny)
    obj = {"op": "selftest", "passed": all(ok for _, ok, _ in results),
           "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in results]}
    tsv = "\n".join(f"{n}\t{'pass' if ok else 'FAIL'}\t{d}" for n, ok, d in results)
    return obj, tsv


COMMANDS = {
    "gamma": cmd_gamma, "restricted": cmd_restricted, "digits": cmd_digits,
    "assemble": cmd_assemble, "tilde": cmd_tilde, "split": cmd_split,
    "character": cmd_character, "dim": cmd_dim, "tensor": cmd_tensor,
    "sections": cmd_sections, "check-lemma33": cmd_check_lemma33,
    "audit-prop34": cmd_audit_prop34, "verdict-selfext": cmd_verdict_selfext,
    "verdict-pair": cmd_verdict_pair, "verdict-cor35": cmd_verdict_cor35,
    "summands": cmd_summands, "linkage": cmd_linkage, "selftest": cmd_selftest,
}
VERDICT_COMMANDS = {"verdict-selfext", "verdict-pair", "verdict-cor35", "check-lemma33", "linkage"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ree-f4", description="F4 / Ree-group weight calculus and verdict engine")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--r", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--weight", type=_weight)
        p.add_argument("--lambda", dest="lam", type=_weight)
        p.add_argument("--mu", type=_weight)
        p.add_argument("--nu", type=_weight)
        p.add_argument("--digits", type=_digits)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--tsv", dest="fmt", action="store_const", const="tsv")
        p.add_argument("--strict", action="store_true")
        p.add_argument("--count", action="store_true")
        p.add_argument("--list", action="store_true")
        p.set_defaults(fmt="json")
    return parser


def run(argv=None, out=None, err=None, isogeny=TAU) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required: " + ", ".join(COMMANDS))
        # argparse stores --lambda as ``lam``; _require names it ``lambda``
        args.__dict__["lambda"] = args.lam
        args.isogeny = isogeny
        obj, tsv = COMMANDS[args.command](args)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except iso.EnumerationCapExceeded as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (te.HypothesisFailed, iso.NotRestricted, ch.NotDominant) as exc:
        reason = getattr(exc, "reason", type(exc).__name__)
        _emit({"error": type(exc).__name__, "reason": reason, "message": str(exc)}, out)
        return EXIT_HYPOTHESIS
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE

    if args.fmt == "tsv":
        out.write(tsv + "\n")
    else:
        _emit(obj, out)
    if args.command == "selftest" and not obj["passed"]:
        return EXIT_SELFTEST
    if args.strict and args.command in VERDICT_COMMANDS and obj.get("outcome") == "Unknown":
        return EXIT_UNKNOWN
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
