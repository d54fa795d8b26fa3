"""Command-line entry point: ``heckeo <group> <command> [options]``.

Exit codes: 0 when every requested check passes, 1 when a check fails, 2 on
invalid input (with a JSON error object on stderr).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import __version__
from .daha import DahaElement, DahaError, is_central, normal_form, parse_polynomial, psi_involution
from .functor import (
    FunctorContext,
    FunctorError,
    check_u_eigenvalues,
    deformed_verma_for,
    dual_verma_for,
    phi,
    phi_deformed_verma_fast,
    verify_all,
    verify_duality_correspondence,
    verify_hecke_relations,
    verify_standard_correspondence,
    verma_for,
)
from .glm import SupportError, deformed_verma, phi_support, restricted_dual, weights_below
from .hmodules import (
    HModule,
    HModuleError,
    circledast_dual,
    find_intertwiner,
    fingerprint,
    proper_standard,
    standard_module,
)
from .kostant import (
    KostantError,
    KostantPartition,
    RootElement,
    enumerate_kp,
    hasse_diagram,
    hasse_dot,
    kp_leq,
    verify_orbit_embedding,
)
from .report import Report
from .scalars import SeriesRing


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        sys.exit(2)


def _emit_error(kind, message):
    sys.stderr.write(json.dumps({"error": kind, "message": str(message)}, sort_keys=True) + "\n")


def _default_trunc() -> int:
    raw = os.environ.get("HECKEO_TRUNC", "2")
    try:
        value = int(raw)
    except ValueError as exc:
        raise InputError(f"HECKEO_TRUNC={raw!r} is not an integer") from exc
    if value < 0:
        raise InputError("HECKEO_TRUNC must be non-negative")
    return value


def _weight(text) -> tuple:
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError as exc:
        raise InputError(f"bad weight {text!r}") from exc


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_atomic(path: str, text: str):
    """Write via a temporary file in the target directory and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".heckeo-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, payload, text=None):
    if args.format == "text" and text is not None:
        out = text if text.endswith("\n") else text + "\n"
    else:
        out = _dumps(payload)
    target = getattr(args, "out", None)
    if target:
        write_atomic(target, out)
    else:
        sys.stdout.write(out)


def _trunc(args) -> int:
    return _default_trunc() if args.trunc is None else args.trunc


def _report_exit(args, rep: Report) -> int:
    _emit(args, rep.to_json(), str(rep))
    return 0 if rep.ok else 1


# -- kp ---------------------------------------------------------------------------

def _beta(text) -> RootElement:
    beta = RootElement.parse(text)
    if not beta:
        raise InputError("beta must be nonzero")
    return beta


def cmd_kp_enum(args):
    parts = enumerate_kp(_beta(args.beta))
    payload = [p.to_json() for p in parts]
    _emit(args, payload, "\n".join(repr(p) for p in parts))
    return 0


def cmd_kp_hasse(args):
    beta = _beta(args.beta)
    nodes, edges = hasse_diagram(beta)
    if args.dot:
        write_atomic(args.dot, hasse_dot(beta))
    if args.format == "dot":
        text = hasse_dot(beta)
        if args.out:
            write_atomic(args.out, text)
        else:
            sys.stdout.write(text)
        return 0
    payload = {"nodes": [p.to_json() for p in nodes], "edges": [[p.to_json(), q.to_json()] for p, q in edges]}
    _emit(args, payload, "\n".join(f"{p!r} -> {q!r}" for p, q in edges))
    return 0


def cmd_kp_leq(args):
    p, q = KostantPartition.parse(args.p), KostantPartition.parse(args.q)
    result = kp_leq(p, q)
    _emit(args, {"leq": result}, str(result).lower())
    return 0


def cmd_kp_orbit(args):
    rep = verify_orbit_embedding(_weight(args.lam))
    data = rep.to_json()
    _emit(args, data, f"orbit embedding for {rep.lam}: {data['status']}")
    return 0 if rep.ok else 1


# -- daha ---------------------------------------------------------------------------

def cmd_daha_nf(args):
    elem = normal_form(args.word, args.n)
    if args.psi:
        elem = psi_involution(elem)
    _emit(args, elem.to_json(), repr(elem))
    return 0


def cmd_daha_central(args):
    p = DahaElement.polynomial(args.n, parse_polynomial(args.poly, args.n))
    result = is_central(p)
    _emit(args, {"central": result, "n": args.n, "poly": args.poly}, str(result).lower())
    return 0


# -- oo ---------------------------------------------------------------------------

def cmd_oo_verma(args):
    mu = _weight(args.mu)
    if len(mu) < 2:
        raise InputError("need m >= 2")
    if args.depth == "auto":
        n = sum(mu)
        try:
            support = phi_support(mu, n) if n >= 0 else weights_below(mu, 2)
        except SupportError:
            support = weights_below(mu, 2)
    else:
        try:
            depth = int(args.depth)
        except ValueError as exc:
            raise InputError(f"bad depth {args.depth!r}") from exc
        if depth < 0:
            raise InputError("depth must be non-negative")
        support = weights_below(mu, depth)
    trunc = 0 if args.kind != "deformed" else _trunc(args)
    mod = deformed_verma(mu, support, ring=SeriesRing(len(mu), trunc))
    if args.kind == "dual":
        mod = restricted_dual(mod)
    text = "\n".join(f"{nu}: rank {len(mod.weight_basis(nu))}" for nu in mod.weights())
    _emit(args, mod.to_json(), text)
    return 0


# -- hmod ---------------------------------------------------------------------------

def _load_module(path) -> HModule:
    try:
        with open(path) as fh:
            return HModule.from_json(json.load(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not JSON: {exc}") from exc


def cmd_hmod_std(args):
    pi = KostantPartition.parse(args.pi)
    if not pi:
        raise InputError("empty partition")
    if args.kind == "standard":
        mod = standard_module(pi, trunc=_trunc(args))
    elif args.kind == "proper":
        mod = proper_standard(pi)
    else:
        mod = circledast_dual(proper_standard(pi))
    _emit(args, mod.to_json(), f"{mod.name}: rank {mod.rank}, n={mod.n}")
    return 0 if mod.relations_hold() else 1


def cmd_hmod_fingerprint(args):
    if args.module:
        mod = _load_module(args.module)
    elif args.pi:
        mod = proper_standard(KostantPartition.parse(args.pi))
    else:
        raise InputError("give a module JSON file or --pi")
    fp = fingerprint(mod)
    text = "\n".join(f"{tuple(str(v) for v in t)} x{k}" for t, k in fp.spectrum)
    _emit(args, fp.to_json(), text)
    return 0


def cmd_hmod_intertwine(args):
    A, B = _load_module(args.a), _load_module(args.b)
    T = find_intertwiner(A, B, seed=args.seed)
    payload = {"found": T is not None}
    if T is not None:
        payload["matrix"] = T.to_json()
    _emit(args, payload, "invertible intertwiner found" if T is not None else "no invertible intertwiner")
    return 0 if T is not None else 1


# -- phi ---------------------------------------------------------------------------

def _context(args) -> FunctorContext:
    lam = _weight(args.lam)
    if args.m is not None and args.m != len(lam):
        raise InputError(f"--m {args.m} does not match lambda {lam}")
    rho = _weight(args.rho) if args.rho else None
    return FunctorContext(len(lam), lam, _trunc(args), rho)


def cmd_phi_run(args):
    ctx = _context(args)
    mu = ctx.check_mu(_weight(args.mu)) if args.mu else ctx.lam
    rep = Report(f"functor checks m={ctx.m} lambda={ctx.lam} mu={mu}")
    rep.extend(verify_hecke_relations(deformed_verma_for(mu, ctx), ctx), prefix="relations: ")
    rep.extend(check_u_eigenvalues(mu, ctx))
    rep.extend(verify_standard_correspondence(mu, ctx, args.seed))
    rep.extend(verify_duality_correspondence(mu, ctx, args.seed))
    if args.json:
        write_atomic(args.json, _dumps(rep.to_json()))
    return _report_exit(args, rep)


def cmd_phi_verify_all(args):
    ctx = _context(args)
    rep = verify_all(ctx, seed=args.seed)
    if args.json:
        write_atomic(args.json, _dumps(rep.to_json()))
    return _report_exit(args, rep)


def cmd_phi_module(args):
    ctx = _context(args)
    mu = ctx.check_mu(_weight(args.mu)) if args.mu else ctx.lam
    if args.kind == "fast":
        mod = phi_deformed_verma_fast(mu, ctx)
    else:
        build = {"deformed": deformed_verma_for, "ordinary": verma_for, "dual": dual_verma_for}[args.kind]
        mod = phi(build(mu, ctx), ctx)
    _emit(args, mod.to_json(), f"{mod.name}: rank {mod.rank}, n={mod.n}")
    return 0


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, default=None,
                        help="truncation degree N (default: $HECKEO_TRUNC or 2)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    common.add_argument("--out", default=None, help="write output to this file (atomically)")
    common.add_argument("--format", choices=("json", "text", "dot"), default="json", help="output format")

    parser = _Parser(prog="heckeo", description="Exact Hecke-algebra and category O computations.")
    parser.add_argument("--version", action="version", version=f"heckeo {__version__}")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    kp = groups.add_parser("kp", help="Kostant partitions and their order")
    kps = kp.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = kps.add_parser("enum", parents=[common], help="enumerate KP(beta)")
    p.add_argument("--beta", required=True, help='e.g. "-1:1,0:2,1:1" (index:multiplicity)')
    p.set_defaults(func=cmd_kp_enum)
    p = kps.add_parser("hasse", parents=[common], help="Hasse diagram of KP(beta)")
    p.add_argument("--beta", required=True)
    p.add_argument("--dot", default=None, help="also write a DOT file")
    p.set_defaults(func=cmd_kp_hasse)
    p = kps.add_parser("leq", parents=[common], help="compare two partitions")
    p.add_argument("--p", required=True, help='e.g. "0,2"')
    p.add_argument("--q", required=True, help='e.g. "0,1;1,2"')
    p.set_defaults(func=cmd_kp_leq)
    p = kps.add_parser("orbit", parents=[common], help="check the orbit embedding for lambda")
    p.add_argument("--lambda", dest="lam", required=True, help="dominant weight, e.g. 2,1")
    p.set_defaults(func=cmd_kp_orbit)

    daha = groups.add_parser("daha", help="degenerate affine Hecke algebra arithmetic")
    ds = daha.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = ds.add_parser("nf", parents=[common], help="normal form of a word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True, help='e.g. "x2 s1"')
    p.add_argument("--psi", action="store_true", help="apply the anti-involution afterwards")
    p.set_defaults(func=cmd_daha_nf)
    p = ds.add_parser("central", parents=[common], help="test whether a polynomial is central")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", required=True, help='e.g. "x1+x2"')
    p.set_defaults(func=cmd_daha_central)

    oo = groups.add_parser("oo", help="gl_m weight modules")
    os_ = oo.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = os_.add_parser("verma", parents=[common], help="(deformed/dual) Verma module on a finite support")
    p.add_argument("--mu", required=True, help="highest weight, e.g. 2,1")
    p.add_argument("--depth", default="auto",
                   help="support depth below mu, or 'auto' for the weights the functor needs with n = sum(mu)")
    p.add_argument("--kind", choices=("deformed", "ordinary", "dual"), default="deformed")
    p.set_defaults(func=cmd_oo_verma)

    hm = groups.add_parser("hmod", help="Hecke modules")
    hs = hm.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = hs.add_parser("std", parents=[common], help="standard module of a Kostant partition")
    p.add_argument("--pi", required=True, help='e.g. "0,2;-1,1"')
    p.add_argument("--kind", choices=("standard", "proper", "costandard"), default="standard")
    p.set_defaults(func=cmd_hmod_std)
    p = hs.add_parser("fingerprint", parents=[common], help="rank and joint x-spectrum at z = 0")
    p.add_argument("module", nargs="?", help="module JSON file")
    p.add_argument("--pi", default=None, help="use the proper standard module of this partition")
    p.set_defaults(func=cmd_hmod_fingerprint)
    p = hs.add_parser("intertwine", parents=[common], help="find an invertible intertwiner a -> b")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_hmod_intertwine)

    ph = groups.add_parser("phi", help="the functor to Hecke modules and its checks")
    pss = ph.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, func, hlp in (
        ("run", cmd_phi_run, "checks for one mu"),
        ("verify-all", cmd_phi_verify_all, "every check for the orbit of lambda"),
        ("module", cmd_phi_module, "dump the image of one module"),
    ):
        p = pss.add_parser(name, parents=[common], help=hlp)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--lambda", dest="lam", required=True, help="dominant weight with positive last entry")
        p.add_argument("--rho", default=None, help="regular dominant weight replacing (0,-1,...,-m+1)")
        if name != "verify-all":
            p.add_argument("--mu", default=None, help="weight in the orbit of lambda (default lambda)")
        if name == "module":
            p.add_argument("--kind", choices=("deformed", "ordinary", "dual", "fast"), default="deformed")
        else:
            p.add_argument("--json", default=None, help="also write the JSON report here")
        p.set_defaults(func=func)
    return parser


_VALUE_FLAGS = {"--beta", "--pi", "--mu", "--lambda", "--rho", "--p", "--q", "--word", "--poly"}


def _glue_negative_values(argv):
    """Rewrite ``--beta -1:1`` as ``--beta=-1:1`` so argparse does not read
    the value as an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        if args.trunc is not None and args.trunc < 0:
            raise InputError("--trunc must be non-negative")
        return args.func(args)
    except (InputError, KostantError, DahaError, FunctorError, HModuleError, SupportError, ValueError) as exc:
        _emit_error(type(exc).__name__, exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
