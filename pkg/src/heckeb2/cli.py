"""Command-line front end: ``heckeb2 <verb> ...`` (or ``python -m heckeb2``).

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 length budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import phimaps
from .bernstein import s_element
from .cells import a_value, classify_left_cell, two_sided_cell
from .coxeter import DEFAULT_LENGTH_BUDGET, parse_element
from .errors import BudgetExceeded, NotDominant, ParseError, VerificationFailure
from .klbasis import KLCache
from .weights import Weight, height, tensor_decompose

JSON_SCHEMA_VERSION = 1

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_DEFAULT_RANGE = {"lemma31": 3, "lemma32": 0, "lemma35": 3, "thm36": 3,
                  "prop33": 3, "mu-scan": 12}


class _Result:
    def __init__(self, text: str, data, ok: bool = True):
        self.text, self.data, self.ok = text, data, ok


def _dominant(a: int, b: int) -> Weight:
    lam = Weight(a, b)
    if not lam.is_dominant:
        raise NotDominant(f"{lam} is not dominant")
    return lam


def _dominant_upto(n: int):
    return [Weight(a, s - a) for s in range(n + 1) for a in range(s, -1, -1)]


# -- verbs ----------------------------------------------------------------------------------

def _kl(args, cache):
    y, w = parse_element(args.y), parse_element(args.w)
    p = cache.kl_polynomial(y, w)
    return _Result(str(p), {"y": str(y), "w": str(w), "P": p.to_json()})


def _mu(args, cache):
    y, w = parse_element(args.y), parse_element(args.w)
    m = cache.mu(y, w)
    return _Result(str(m), {"y": str(y), "w": str(w), "mu": m})


def _cprod(args, cache):
    x, y = parse_element(args.x), parse_element(args.y)
    h = cache.c_multiply(x, y)
    return _Result(str(h), h.to_json())


def _cell(args, cache):
    w = parse_element(args.w)
    name, two = classify_left_cell(w), two_sided_cell(w)
    return _Result(f"{name} {two}", {"w": str(w), "left_cell": name, "two_sided_cell": two})


def _avalue(args, cache):
    w = parse_element(args.w)
    a = a_value(w)
    return _Result(str(a), {"w": str(w), "a": a})


def _selement(args, cache):
    lam = _dominant(args.a, args.b)
    h = s_element(lam).expansion
    if args.basis == "C":
        h = cache.t_to_c(h)
    return _Result(str(h), {"lambda": [lam.a, lam.b], **h.to_json()})


def _crt_s(args, cache):
    lam = _dominant(args.a, args.b)
    h = phimaps.crt_s_product(lam, mod_c0=args.mod_c0, cache=cache)
    # the reduced product lives in H_1 and reads best in increasing (srt)-power
    return _Result(h.format(ascending=args.mod_c0), {"lambda": [lam.a, lam.b], "mod_c0": args.mod_c0, **h.to_json()})


def _phi(args, cache):
    lam = _dominant(args.a, args.b)
    u = phimaps.phi_S(lam)
    return _Result(str(u), {"lambda": [lam.a, lam.b], "a_kp": u.to_json()})


def _tensor(args, cache):
    lam, lam2 = _dominant(args.a, args.b), _dominant(args.a2, args.b2)
    dec = tensor_decompose(lam, lam2)
    items = sorted(dec.items(), key=lambda zm: (-height(zm[0]), -zm[0].a))
    text = " + ".join((f"{m}*" if m != 1 else "") + f"V({z})" for z, m in items)
    return _Result(text, [{"weight": [z.a, z.b], "multiplicity": m} for z, m in items])


def _verify_reports(check: str, n: int, cache) -> list:
    if check == "lemma31":
        out = [phimaps.lemma31a_verify(m, cache) for m in range(1, n + 2)]
        out += [phimaps.lemma31_verify(m, k, cache)
                for m in range(1, n + 1) for k in range(m, n + 1)]
        return out
    if check == "lemma32":
        return phimaps.lemma32_verify(cache)
    if check == "prop33":
        return [phimaps.prop33_verify(m, k, p, p2, cache)
                for m in range(n + 1) for k in range(n + 1)
                for p in (0, 1) for p2 in (0, 1)]
    if check == "lemma35":
        return [phimaps.lemma35_check(lam, cache) for lam in _dominant_upto(n)]
    if check == "thm36":
        return [phimaps.theorem36_verify(lam, cache) for lam in _dominant_upto(n)]
    if check == "mu-scan":
        return [phimaps.mu_conjecture_scan(n, cache)]
    raise ValueError(check)


def _verify(args, cache):
    n = args.range if args.range is not None else _DEFAULT_RANGE[args.check]
    reports = _verify_reports(args.check, n, cache)
    ok = all(r.passed for r in reports)
    lines = [str(r) for r in reports]
    if args.check == "mu-scan":
        r = reports[0]
        lines += [f"  mu({row['y']}, {row['w']}) = {row['mu']}" for row in r.lhs]
        lines.append(f"  nonzero: {len(r.extra['counterexamples'])}")
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} passed")
    return _Result("\n".join(lines), {"check": args.check, "range": n, "passed": ok,
                                      "reports": [r.to_json() for r in reports]}, ok)


_VERBS: dict[str, Callable] = {
    "kl": _kl, "mu": _mu, "cprod": _cprod, "cell": _cell, "avalue": _avalue,
    "selement": _selement, "crt-s": _crt_s, "phi": _phi, "tensor": _tensor,
    "verify": _verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    def flags(parser, top):
        # the flags may come before or after the verb; only the top level sets defaults
        parser.add_argument("--json", action="store_true",
                            default=False if top else argparse.SUPPRESS,
                            help="machine-readable output")
        parser.add_argument("--budget", type=int,
                            default=DEFAULT_LENGTH_BUDGET if top else argparse.SUPPRESS,
                            help=f"maximum element length (default {DEFAULT_LENGTH_BUDGET})")

    p = _Parser(prog="heckeb2",
                description="Exact computations in the Hecke algebra of type B2~.")
    flags(p, True)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_):
        v = sub.add_parser(name, help=help_)
        flags(v, False)
        return v

    for name, help_ in (("kl", "Kazhdan-Lusztig polynomial P_{y,w}"),
                        ("mu", "leading coefficient mu(y,w)")):
        v = verb(name, help_)
        v.add_argument("y")
        v.add_argument("w")
    v = verb("cprod", "C_x C_y in the C-basis")
    v.add_argument("x")
    v.add_argument("y")
    for name, help_ in (("cell", "left and two-sided cell of w"), ("avalue", "a(w)")):
        verb(name, help_).add_argument("w")
    v = verb("selement", "central element S_lambda")
    v.add_argument("a", type=int)
    v.add_argument("b", type=int)
    v.add_argument("--basis", choices=("T", "C"), default="T")
    v = verb("crt-s", "C_rt S_lambda in the C-basis")
    v.add_argument("a", type=int)
    v.add_argument("b", type=int)
    v.add_argument("--mod-c0", action="store_true", help="drop terms in the lowest cell")
    v = verb("phi", "phi(S_lambda) in the V(k) eps^p basis")
    v.add_argument("a", type=int)
    v.add_argument("b", type=int)
    v = verb("tensor", "decompose V(a,b) (x) V(a',b') for Sp4")
    for name in ("a", "b", "a2", "b2"):
        v.add_argument(name, type=int)
    v = verb("verify", "run an identity check")
    v.add_argument("check", choices=tuple(_DEFAULT_RANGE))
    v.add_argument("--range", type=int, default=None,
                   help="size parameter (weights with a+b <= N, indices <= N, or max length)")
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cache = KLCache(budget=args.budget)
        res = _VERBS[args.verb](args, cache)
    except (ParseError, NotDominant, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=err)
        return EXIT_BUDGET
    except VerificationFailure as e:
        print(f"mismatch: {e}", file=err)
        return EXIT_MISMATCH
    if args.json:
        payload = {"version": JSON_SCHEMA_VERSION, "verb": args.verb, "result": res.data}
        print(json.dumps(payload, sort_keys=True), file=out)
    else:
        print(res.text, file=out)
    return EXIT_OK if res.ok else EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
