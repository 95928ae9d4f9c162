"""Command-line front end.  Every command prints one JSON report.

Exit status: 0 when every check passes, 1 when at least one fails, 2 on bad
input.  Reports contain exact rationals as "p/q" strings and depend only on
the arguments, so identical invocations give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional

from . import chains, chern, cospec, diffcoh, ezaw, simpset, spectra
from .twomon import core as tm
from .twomon import fixtures as tmfx
from .twomon import io as tmio


class InputError(Exception):
    pass


# -- serialization -----------------------------------------------------------------


def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, simpset.Word):
        return str(x)
    return x


def dumps(doc: dict) -> str:
    return json.dumps(_plain(doc), indent=2, ensure_ascii=False) + "\n"


# -- inputs ---------------------------------------------------------------------------


def _load_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})")


def load_space(spec: str, cap: int) -> simpset.SimplicialSet:
    """Builtin names: circle, torus, sphere:N, simplex:N, simplex_plus:N; a
    trailing '+' adds a disjoint basepoint.  Anything else is a JSON file."""
    plus = spec.endswith("+") and not Path(spec).exists()
    name = spec[:-1] if plus else spec
    kind, _, arg = name.partition(":")
    if kind in ("circle", "torus", "sphere", "simplex", "simplex_plus"):
        try:
            n = int(arg) if arg else 0
        except ValueError:
            raise InputError(f"bad dimension in {spec!r}")
        if n > cap:
            raise InputError(f"{spec!r} exceeds the dimension cap {cap}")
        K = simpset.build_standard(kind, n)
    else:
        doc = _load_json(spec)
        if isinstance(doc, dict) and "generators" not in doc and "space" in doc.get("report", {}):
            doc = doc["report"]["space"]  # output of `chernlab build`
        K = simpset.space_from_json(doc)
    return simpset.disjoint_basepoint(K) if plus else K


def load_package(spec: str, cap: Optional[int]) -> spectra.SpectrumPackage:
    c = cap if cap is not None else 5
    if spec == "em":
        return spectra.em_package(1, 3, c)
    if spec == "skew":
        return spectra.em_skew_package(1, 3, c)
    return spectra.SpectrumPackage.from_json(_load_json(spec))


def _pipeline(P: spectra.SpectrumPackage):
    F = chern.fundamental_family(P)
    T = chern.solve_transition(P, F)
    return F, T


# -- commands ----------------------------------------------------------------------


def cmd_build(a) -> dict:
    K = load_space(a.space, a.cap)
    problems = K.check()
    return {"space": simpset.space_to_json(K),
            "counts": {str(d): len(g) for d, g in sorted(K.generators.items())},
            "euler_characteristic": K.euler_characteristic(),
            "problems": problems, "passed": not problems}


def cmd_cohomology(a) -> dict:
    K = load_space(a.space, a.cap)
    degrees = [a.degree] if a.degree is not None else list(range(K.dim + 1))
    rows = []
    for n in degrees:
        r = chains.cohomology(K, n)
        rows.append({"degree": n, "rank": r.rank,
                     "representatives": [z.to_json() for z in r.representatives]})
    return {"space": K.name, "cohomology": rows, "passed": True}


def _pair_space(a):
    if len(a.space) != 2:
        raise InputError("give --space twice (first and second factor)")
    K, L = (load_space(s, a.cap) for s in a.space)
    build = simpset.smash if a.smash else simpset.product
    return build(K, L, cap=a.cap)


def cmd_audit(a) -> dict:
    w = a.which
    if w == "ez":
        return ezaw.ez_audit(_pair_space(a), samples=a.samples, seed=a.seed)
    if w == "stokes":
        return ezaw.stokes_audit(_pair_space(a), samples=a.samples, seed=a.seed)
    if w in ("loopiso", "costructure", "suspension", "invariants", "gamma"):
        if len(a.space) != 1:
            raise InputError("give exactly one --space")
        K = load_space(a.space[0], a.cap)
        if w == "loopiso":
            return cospec.loop_iso_audit(K, a.level, a.simplex_dim, samples=a.samples, seed=a.seed)
        if w == "invariants":
            return cospec.invariant_rank_audit(K, a.level, a.simplex_dim)
        if w == "gamma":
            return chern.gamma_audit(K, a.level, samples=a.samples, seed=a.seed)
        return cospec.suspension_audit(K, a.level, a.simplex_dim, samples=a.samples, seed=a.seed)
    P = load_package(a.package, a.cap)
    F = chern.fundamental_family(P)
    if w == "fundamental":
        fund = chern.check_fundamental(P, F)
        comp = chern.costructure_compat_audit(P, F, samples=a.samples, seed=a.seed)
        return {"check": "fundamental", "package": P.name, "fundamental": fund,
                "costructure": comp, "passed": fund["passed"] and comp["passed"]}
    T = chern.solve_transition(P, F)
    if w == "transition":
        return chern.transition_relation(P, F, T)
    if w == "coherence":
        return chern.coherence_audit(P, F, T)
    if w == "mutations":
        rows = []
        for m in chern.mutations(P, F, T, count=a.samples, seed=a.seed):
            res = chern.run_audits(m.package, m.family, m.transition)
            caught = [k for k, v in res.items() if not v]
            rows.append({"kind": m.kind, "mutation": m.description, "caught_by": caught,
                         "status": "pass" if caught else "fail"})
        return {"check": "mutations", "package": P.name, "results": rows,
                "passed": all(r["status"] == "pass" for r in rows)}
    raise InputError(f"unknown audit {w!r}")


def _random_map(X, P, n, rng):
    return chern.random_map(X, P.level(n), rng)


def _load_map(a, X, P):
    if a.map:
        doc = _load_json(a.map)
        return spectra.MapIntoFreeAbelian.from_json(doc, X, P.level(int(doc["level"])))
    return _random_map(X, P, a.level, random.Random(a.seed))


def cmd_chern(a) -> dict:
    P = load_package(a.package, a.cap)
    F = chern.fundamental_family(P)
    X = load_space(a.space, a.cap)
    if a.which == "object":
        c = _load_map(a, X, P)
        problems = c.check()
        if problems:
            raise InputError("map is not simplicial: " + problems[0])
        return {"package": P.name, "map": c.to_json(), "ch": chern.ch_object(c, F).to_json(),
                "passed": True}
    Y = cospec.with_simplex(X, 1)
    if a.homotopy:
        doc = _load_json(a.homotopy)
        H = spectra.MapIntoFreeAbelian.from_json(doc, Y, P.level(int(doc["level"])))
    else:
        H = _random_map(Y, P, a.level, random.Random(a.seed))
    problems = H.check()
    if problems:
        raise InputError("homotopy is not simplicial: " + problems[0])
    m = chern.ch_morphism(H, X, F)
    return {"package": P.name, "homotopy": H.to_json(), "representative": m.representative.to_json(),
            "start": m.start.to_json(), "end": m.end.to_json(),
            "coboundary_identity": m.check(), "passed": m.check()}


def cmd_transition(a) -> dict:
    P = load_package(a.package, a.cap)
    F, T = _pipeline(P)
    rel = chern.transition_relation(P, F, T)
    return {"package": P.name,
            "transition": [{"level": n, "A": T[n].to_json(), "pretty": T[n].pretty()} for n in sorted(T)],
            "relation": rel["entries"], "passed": rel["passed"]}


def cmd_coherence(a) -> dict:
    P = load_package(a.package, a.cap)
    F, T = _pipeline(P)
    return chern.coherence_audit(P, F, T)


def _load_cocycle(path, X, P):
    return diffcoh.DifferentialCocycle.from_json(_load_json(path), X, P)


def cmd_diff(a) -> dict:
    P = load_package(a.package, a.cap)
    F, T = _pipeline(P)
    X = load_space(a.space, a.cap)
    if a.which in ("add", "neg"):
        if not a.x:
            raise InputError("--x is required")
        x = _load_cocycle(a.x, X, P)
        if a.which == "add":
            if not a.y:
                raise InputError("--y is required")
            out = diffcoh.add(x, _load_cocycle(a.y, X, P), T)
        else:
            out = diffcoh.neg(x, chern.negation_cochain(P, F, T))
        v = diffcoh.validate_cocycle(out, F)
        return {"result": out.to_json(), "validation": v, "passed": v["passed"]}
    if a.which == "verify":
        if not (a.x and a.y and a.cert):
            raise InputError("--x, --y and --cert are required")
        cert = diffcoh.EquivalenceCertificate.from_json(_load_json(a.cert), X, P)
        return diffcoh.verify_certificate(_load_cocycle(a.x, X, P), _load_cocycle(a.y, X, P), cert, F)
    rng = random.Random(a.seed)
    coh = chern.coherence_audit(P, F, T)
    N = chern.negation_cochain(P, F, T)
    xs = [diffcoh.random_cocycle(X, P, F, a.level, rng) for _ in range(3)]
    rows = []
    for g in diffcoh.group_law_certificates(*xs, P, F, T, N, coh):
        r = diffcoh.verify_certificate(g.lhs, g.rhs, g.certificate, F)
        rows.append({"law": g.law, "certificate": g.certificate.to_json(), "verification": r,
                     "status": "pass" if r["passed"] else "fail"})
    return {"package": P.name, "space": X.name, "level": a.level, "seed": a.seed,
            "cocycles": [x.to_json() for x in xs], "laws": rows,
            "passed": all(r["status"] == "pass" for r in rows)}


def _load_two_monoidal(spec: str) -> tm.TwoMonoidalData:
    if spec in tmfx.BUILTINS:
        return tmfx.BUILTINS[spec]()
    return tmio.two_monoidal_from_json(_load_json(spec))


def cmd_twomon(a) -> dict:
    if a.which == "fixtures":
        rows = []
        for name, mk in tmfx.BUILTINS.items():
            r = tm.check_two_monoidal(mk())
            rows.append({"fixture": name, "passed": r["passed"], "failures": r["failures"][:1]})
        return {"fixtures": rows, "passed": True}
    if not a.cat:
        raise InputError("--cat is required")
    T = _load_two_monoidal(a.cat)
    r = tm.check_two_monoidal(T)
    out = {"category": T.cat.name, "two_monoidal": r}
    ok = r["passed"]
    if ok:
        b = tm.braiding(T)
        out["braiding"] = {"report": b["report"],
                           "braid": [[tmio.enc(k[0]), tmio.enc(k[1]), tmio.enc(v)] for k, v in b["braid"].items()]}
        ok = b["report"]["passed"]
    if a.functor:
        F = tmio.functor_from_json(_load_json(a.functor), T)
        fr = tm.check_two_monoidal_functor(F)
        out["functor"] = fr
        ok = ok and fr["passed"]
    out["passed"] = ok
    return out


def cmd_package(a) -> dict:
    P = load_package(a.package, a.cap)
    if a.which == "show":
        return {"package": P.to_json(), "passed": True}
    return spectra.validate_package(P)


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=simpset.DEFAULT_CAP, help="dimension cap (max 8)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=10)
    common.add_argument("--out", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="chernlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", parents=[common], help="build and validate a simplicial set")
    s.add_argument("--space", required=True)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("cohomology", parents=[common], help="rational cohomology of a space")
    s.add_argument("--space", required=True)
    s.add_argument("--degree", type=int)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("audit", parents=[common], help="sampled and exhaustive identity checks")
    s.add_argument("which", choices=["ez", "stokes", "loopiso", "costructure", "suspension",
                                     "invariants", "gamma", "fundamental", "transition",
                                     "coherence", "mutations"])
    s.add_argument("--space", action="append", default=[])
    s.add_argument("--smash", action="store_true", help="use the smash instead of the product")
    s.add_argument("--level", type=int, default=2)
    s.add_argument("--simplex-dim", type=int, default=1)
    s.add_argument("--package", default="em")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("chern", parents=[common], help="Chern character of a map or homotopy")
    s.add_argument("which", choices=["object", "morphism"])
    s.add_argument("--package", default="em")
    s.add_argument("--space", default="circle+")
    s.add_argument("--map")
    s.add_argument("--homotopy")
    s.add_argument("--level", type=int, default=2)
    s.set_defaults(func=cmd_chern)

    s = sub.add_parser("transition", parents=[common], help="solve for the transition cochains")
    s.add_argument("which", choices=["solve"])
    s.add_argument("--package", default="em")
    s.set_defaults(func=cmd_transition)

    s = sub.add_parser("coherence", parents=[common], help="solve the three coherence relations")
    s.add_argument("which", choices=["audit"])
    s.add_argument("--package", default="em")
    s.set_defaults(func=cmd_coherence)

    s = sub.add_parser("diff", parents=[common], help="differential cocycle arithmetic")
    s.add_argument("which", choices=["add", "neg", "verify", "grouplaw"])
    s.add_argument("--package", default="em")
    s.add_argument("--space", default="circle+")
    s.add_argument("--level", type=int, default=2)
    s.add_argument("--x")
    s.add_argument("--y")
    s.add_argument("--cert")
    s.set_defaults(func=cmd_diff)

    s = sub.add_parser("twomon", parents=[common], help="finite 2-monoidal category checks")
    s.add_argument("which", choices=["check", "fixtures"])
    s.add_argument("--cat", help="JSON presentation or builtin: " + ", ".join(tmfx.BUILTINS))
    s.add_argument("--functor")
    s.set_defaults(func=cmd_twomon)

    s = sub.add_parser("package", parents=[common], help="spectrum packages")
    s.add_argument("which", choices=["validate", "show"])
    s.add_argument("--package", default="em")
    s.set_defaults(func=cmd_package)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if not 0 <= a.cap <= simpset.MAX_CAP:
        print(f"chernlab: --cap must lie in [0, {simpset.MAX_CAP}]", file=sys.stderr)
        return 2
    argv_echo = list(argv) if argv is not None else sys.argv[1:]
    config = {"cap": a.cap, "seed": a.seed, "samples": a.samples}
    try:
        body = a.func(a)
        code = 0 if body.get("passed") else 1
    except (InputError, simpset.SimplicialError, tm.CategoryError, KeyError, ValueError) as exc:
        body = {"error": f"{type(exc).__name__}: {exc}", "passed": False}
        code = 2
    doc = {"command": argv_echo, "config": config, "status": "pass" if code == 0 else "fail",
           "report": body}
    text = dumps(doc)
    if a.out:
        Path(a.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if code == 2:
        print(f"chernlab: {body['error']}", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
