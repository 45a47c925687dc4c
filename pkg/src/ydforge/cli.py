"""Command line front end: ``ydforge <command> <input.json|dir> [options]``.

Exit codes: 0 when every finding passes, 1 when some check fails, 2 for
malformed input or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .documents import InputDocument, InputError, load
from .galois import (
    check_galois_braiding,
    check_lift_identity,
    check_sigma,
    galois_coobject_report,
    galois_object_report,
    lift_yd,
    lifted_coalgebra_to_K,
    transport,
)
from .grading import check_graded, check_grading_and_crossing, graded
from .hopf import HopfAlgebra, automorphism_report, check_algebra_axioms, check_bialgebra, check_hopf
from .linalg import DimensionError, Matrix, identity
from .reps import (
    BimoduleCoalgebra,
    check_bicomodule_algebra,
    check_bimodule_coalgebra,
    regular_bicomodule_algebra,
    regular_bimodule_coalgebra,
    regular_module,
    trivial_module,
)
from .report import Finding, Report, StructureError, compare_maps
from .yd import (
    GenYDModule,
    braid_map,
    check_braid_coherence,
    check_braid_linearity,
    check_braid_naturality,
    check_datum,
    check_halfbraid,
    check_yd_module,
    coaction_to_halfbraid,
    halfbraid_to_coaction,
    tensor_yd,
    trivial_datum,
)

COMMANDS = ("check-hopf", "check-datum", "check-yd", "tensor", "braid", "roundtrip", "check-galois", "lift", "crossed", "all")


class UsageError(ValueError):
    """Bad command arguments (exit code 2)."""


@dataclass
class Options:
    name: str | None = None
    module: str | None = None
    with_: str | None = None
    jobs: int = 1
    matrices: bool = True


@dataclass
class Unit:
    """One check on one named structure, run lazily."""

    structure: str
    check: str
    run: Callable[[], Report]


# helpers


def _selected(names, wanted: str | None, what: str) -> list[str]:
    names = sorted(names)
    if wanted is None:
        return names
    if wanted not in names:
        raise UsageError(f"no {what} named {wanted!r}")
    return [wanted]


def _is_regular_datum(m: GenYDModule) -> bool:
    d = m.datum
    return isinstance(d.H, HopfAlgebra) and d.K.same_as(d.H) and d.A.same_as(regular_bicomodule_algebra(d.H))


def _coobjects(doc: InputDocument) -> dict[str, BimoduleCoalgebra]:
    """Named bimodule coalgebras plus the regular one of every Hopf algebra."""
    out = dict(doc.bimodule_coalgebras)
    for name, h in doc.hopf_algebras.items():
        if isinstance(h, HopfAlgebra):
            out.setdefault(f"regular({name})", regular_bimodule_coalgebra(h))
    return out


def _matrix_strings(m: Matrix) -> list[list[str]]:
    return m.to_strings()


# per-command units


def units_check_hopf(doc: InputDocument, opt: Options) -> list[Unit]:
    out = []
    for name in _selected(doc.algebras, None, "algebra") if opt.name is None or opt.name in doc.algebras else []:
        a = doc.algebras[name]
        out.append(Unit(name, "algebra axioms", lambda a=a: check_algebra_axioms(a)))
    names = list(doc.hopf_algebras) if opt.name is None or opt.name in doc.hopf_algebras else []
    for name in sorted(names):
        h = doc.hopf_algebras[name]

        def run(h=h, name=name):
            if isinstance(h, HopfAlgebra):
                r = check_hopf(h)
                supplied = doc.antipode_supplied.get(name) is not None
                r.header["antipode"] = "supplied" if supplied else "computed"
                return r
            r = check_bialgebra(h)
            r.note("antipode exists", "convolution inverse of id", False, "no antipode supplied and none could be computed")
            return r

        out.append(Unit(name, "hopf axioms", run))
    names = list(doc.automorphisms) if opt.name is None or opt.name in doc.automorphisms else []
    for name in sorted(names):
        hname, phi = doc.automorphisms[name]
        h = doc.hopf_algebras[hname]
        out.append(Unit(name, "automorphism", lambda h=h, phi=phi: automorphism_report(h, phi)))
    if opt.name is not None and not out and opt.name not in doc.hopf_algebras:
        raise UsageError(f"no Hopf algebra, algebra or automorphism named {opt.name!r}")
    return out


def units_check_datum(doc: InputDocument, opt: Options) -> list[Unit]:
    out = []
    known = set(doc.yd_data) | set(doc.bicomodule_algebras) | set(doc.bimodule_coalgebras)
    if opt.name is not None and opt.name not in known:
        raise UsageError(f"no datum or (co)module (co)algebra named {opt.name!r}")
    keep = lambda n: opt.name is None or opt.name == n  # noqa: E731
    for name in sorted(doc.bicomodule_algebras):
        if keep(name):
            out.append(Unit(name, "bicomodule algebra", lambda a=doc.bicomodule_algebras[name]: check_bicomodule_algebra(a)))
    for name in sorted(doc.bimodule_coalgebras):
        if keep(name):
            out.append(Unit(name, "bimodule coalgebra", lambda c=doc.bimodule_coalgebras[name]: check_bimodule_coalgebra(c)))
    for name in sorted(doc.yd_data):
        if keep(name):
            out.append(Unit(name, "datum", lambda d=doc.yd_data[name]: check_datum(d)))
    return out


def units_check_yd(doc: InputDocument, opt: Options) -> list[Unit]:
    out = []
    known = set(doc.yd_modules) | set(doc.half_braids)
    if opt.name is not None and opt.name not in known:
        raise UsageError(f"no YD module or half-braid named {opt.name!r}")
    for name in sorted(doc.yd_modules):
        if opt.name in (None, name):
            out.append(Unit(name, "yd module", lambda m=doc.yd_modules[name]: check_yd_module(m)))
    for name in sorted(doc.half_braids):
        if opt.name in (None, name):
            out.append(Unit(name, "half-braid", lambda b=doc.half_braids[name]: check_halfbraid(b)))
    return out


def _check_tensor(m: GenYDModule, n: GenYDModule) -> Report:
    t = tensor_yd(m, n)
    r = check_yd_module(t.module)
    r.command = "tensor"
    r.header.update({"dim": t.module.dim, "A_dim": t.module.datum.A.dim, "C_dim": t.module.datum.C.dim})
    return r


def units_tensor(doc: InputDocument, opt: Options) -> list[Unit]:
    mods = doc.yd_modules
    firsts = _selected(mods, opt.name or opt.module, "YD module")
    seconds = _selected(mods, opt.with_, "YD module")
    out = []
    for a in firsts:
        for b in seconds:
            m, n = mods[a], mods[b]
            if not m.datum.K.same_as(n.datum.H) or m.field != n.field:
                if opt.with_ is not None:
                    raise UsageError(f"{a!r} and {b!r} are not composable")
                continue
            out.append(Unit(f"{a} (x) {b}", "tensor", lambda m=m, n=n: _check_tensor(m, n)))
    return out


def _braid_partner(doc: InputDocument, m: GenYDModule, partner: str):
    H = m.datum.H
    if partner == "regular":
        return regular_module(H)
    if partner == "trivial":
        return trivial_module(H)
    n = doc.yd_modules.get(partner)
    if n is None:
        raise UsageError(f"--with must be 'regular', 'trivial' or a YD module name, got {partner!r}")
    if not n.datum.A.alg.mult == H.mult or n.datum.A.dim != H.dim:
        raise UsageError(f"{partner!r} is not a module over the algebra of H")
    return n.module()


def _check_braid(m: GenYDModule, V, with_matrix: bool) -> Report:
    b = braid_map(m, V)
    r = Report("braid")
    r.header["target_dim"] = b.target.dim
    if with_matrix:
        r.header["braid_matrix"] = _matrix_strings(b.matrix)
    r.extend(check_braid_linearity(b))
    r.extend(check_braid_coherence(m, None, V, V))
    H = m.datum.H
    if V.dim == H.dim and V.action == H.mult:
        # right multiplications are H-linear endomorphisms of the regular module
        for j in range(H.dim):
            f = H.mult @ Matrix.identity(H.field, H.dim).kron(Matrix.unit_vector(H.field, H.dim, j))
            r.extend(check_braid_naturality(m, V, V, f), f"right mult by e{j}: ")
    return r


def units_braid(doc: InputDocument, opt: Options) -> list[Unit]:
    target = opt.module or opt.name
    partner = opt.with_ or "regular"
    out = []
    for name in _selected(doc.yd_modules, target, "YD module"):
        m = doc.yd_modules[name]
        V = _braid_partner(doc, m, partner)
        out.append(Unit(name, f"braid with {partner}", lambda m=m, V=V: _check_braid(m, V, opt.matrices)))
    return out


def _roundtrip_module(m: GenYDModule) -> Report:
    r = Report("roundtrip")
    hb = coaction_to_halfbraid(m)
    r.extend(check_halfbraid(hb), "half-braid: ")
    back = halfbraid_to_coaction(hb, check=False)
    r.add(compare_maps("coaction recovered", "rho -> half-braid -> rho is the identity", back, m.coaction, [m.dim]))
    return r


def _roundtrip_halfbraid(b) -> Report:
    r = Report("roundtrip")
    rep = check_halfbraid(b)
    r.extend(rep, "half-braid: ")
    if not rep.ok:
        return r
    m = GenYDModule(b.datum, b.dim, b.action, halfbraid_to_coaction(b, check=False), b.name)
    r.extend(check_yd_module(m), "recovered module: ")
    r.add(compare_maps("half-braid recovered", "half-braid -> rho -> half-braid is the identity", coaction_to_halfbraid(m).component, b.component))
    return r


def units_roundtrip(doc: InputDocument, opt: Options) -> list[Unit]:
    known = set(doc.yd_modules) | set(doc.half_braids)
    if opt.name is not None and opt.name not in known:
        raise UsageError(f"no YD module or half-braid named {opt.name!r}")
    out = []
    for name in sorted(doc.yd_modules):
        if opt.name in (None, name):
            out.append(Unit(name, "roundtrip", lambda m=doc.yd_modules[name]: _roundtrip_module(m)))
    for name in sorted(doc.half_braids):
        if opt.name in (None, name):
            out.append(Unit(name, "roundtrip", lambda b=doc.half_braids[name]: _roundtrip_halfbraid(b)))
    return out


def _certificate_summary(cert) -> dict:
    return {
        "dim": cert.C.dim,
        "u": [str(v) for v in cert.u.column_values(0)],
        "wedge_domain_dim": cert.bar_c.quotient.dim,
        "vee_domain_dim": cert.c_bar.quotient.dim,
    }


def _check_coobject(doc: InputDocument, C: BimoduleCoalgebra) -> Report:
    r, cert = galois_coobject_report(C)
    r.command = "check-galois"
    if cert is None:
        return r
    r.header["certificate"] = _certificate_summary(cert)
    r.extend(check_sigma(cert))
    # invertible braidings for the modules living over C
    for name in sorted(doc.yd_modules):
        m = doc.yd_modules[name]
        if not m.datum.C.same_as(C) or not m.datum.A.H.same_as(C.K):
            continue
        partners = [v for _, v in sorted(doc.yd_modules.items()) if _is_regular_datum(v) and v.datum.H.same_as(C.H)]
        if partners:
            r.extend(check_galois_braiding(cert, m, partners[0]), f"{name} with {partners[0].name}: ")
    return r


def units_check_galois(doc: InputDocument, opt: Options) -> list[Unit]:
    cos = _coobjects(doc)
    known = set(cos) | set(doc.bicomodule_algebras)
    if opt.name is not None and opt.name not in known:
        raise UsageError(f"no bimodule coalgebra or bicomodule algebra named {opt.name!r}")
    out = []
    for name in sorted(cos):
        if opt.name in (None, name):
            out.append(Unit(name, "galois co-object", lambda C=cos[name]: _check_coobject(doc, C)))
    for name in sorted(doc.bicomodule_algebras):
        if opt.name in (None, name):
            out.append(Unit(name, "galois object", lambda A=doc.bicomodule_algebras[name]: galois_object_report(A)[0]))
    return out


def _check_lift(C: BimoduleCoalgebra, V: GenYDModule) -> Report:
    r = Report("lift")
    rep, cert = galois_coobject_report(C)
    if cert is None:
        r.extend(rep, "certificate: ")
        return r
    lifted = lift_yd(cert, V)
    L = lifted.module
    r.header.update({"dim": L.dim, "coalgebra_dim": L.datum.C.dim})
    r.extend(check_yd_module(L), "lifted: ")
    H, K = C.H, C.K
    if V.datum.C.same_as(regular_bimodule_coalgebra(H)):
        # the coefficient coalgebra is then K itself
        g = lifted_coalgebra_to_K(cert, lifted)
        target = trivial_datum(K)
        try:
            classical = transport(L, identity(L.field, L.dim), g, target)
        except StructureError as exc:
            r.note("coalgebra identified with K", "c (x) h (x) c-bar -> (c<h) v c-bar", False, str(exc))
        else:
            r.note("coalgebra identified with K", "c (x) h (x) c-bar -> (c<h) v c-bar", True)
            r.extend(check_yd_module(classical), "classical over K: ")
    if C.same_as(regular_bimodule_coalgebra(H)):
        r.extend(check_lift_identity(cert, V), "along H: ")
    return r


def units_lift(doc: InputDocument, opt: Options) -> list[Unit]:
    cos = _coobjects(doc)
    cnames = _selected(cos, opt.name, "bimodule coalgebra")
    vnames = _selected(doc.yd_modules, opt.module, "YD module")
    out = []
    for c in cnames:
        C = cos[c]
        if C.dim != C.H.dim or C.dim != C.K.dim:
            continue
        for v in vnames:
            V = doc.yd_modules[v]
            if not _is_regular_datum(V) or not V.datum.H.same_as(C.H):
                continue
            out.append(Unit(f"{c} (x) {v}", "lift", lambda C=C, V=V: _check_lift(C, V)))
    return out


def _check_crossed(modules: list[GenYDModule]) -> Report:
    r = Report("crossed")
    ms = [graded(m, m.name) for m in modules]
    for gm in ms:
        r.extend(check_graded(gm), f"{gm.name}: ")
    sub = check_grading_and_crossing(ms)
    r.header.update(sub.header)
    r.extend(sub)
    return r


def units_crossed(doc: InputDocument, opt: Options) -> list[Unit]:
    """One unit per Hopf algebra, covering the modules over its twisted data."""
    groups: list[tuple[str, list[GenYDModule]]] = []
    for name in _selected(doc.yd_modules, opt.name, "YD module"):
        m = doc.yd_modules[name]
        if not {"alpha", "beta", "gamma", "delta"} <= set(m.datum.meta):
            continue
        for _, members in groups:
            if members[0].datum.H.same_as(m.datum.H) and members[0].field == m.field:
                members.append(m)
                break
        else:
            groups.append((m.datum.H.name or name, [m]))
    return [Unit("graded modules over " + key, "crossed", lambda ms=members: _check_crossed(ms)) for key, members in groups]


DISPATCH = {
    "check-hopf": units_check_hopf,
    "check-datum": units_check_datum,
    "check-yd": units_check_yd,
    "tensor": units_tensor,
    "braid": units_braid,
    "roundtrip": units_roundtrip,
    "check-galois": units_check_galois,
    "lift": units_lift,
    "crossed": units_crossed,
}


def units_all(doc: InputDocument, opt: Options) -> list[Unit]:
    base = Options(jobs=opt.jobs, matrices=False)
    out = []
    for cmd, fn in DISPATCH.items():
        for u in fn(doc, base):
            out.append(Unit(u.structure, f"{cmd}: {u.check}", u.run))
    return out


def _run_unit(u: Unit) -> Report:
    try:
        return u.run()
    except (StructureError, DimensionError, ValueError, ZeroDivisionError) as exc:
        r = Report(u.check)
        if isinstance(exc, StructureError) and exc.report is not None:
            r.extend(exc.report)
        r.add(Finding("error", "construction failed", False, None, f"{type(exc).__name__}: {exc}"))
        return r


def run_command(doc: InputDocument, command: str, opt: Options | None = None, prefix: str = "") -> Report:
    """Run ``command`` on every applicable structure; findings sorted by structure then check."""
    opt = opt or Options()
    if command not in COMMANDS:
        raise UsageError(f"unknown command {command!r}")
    units = units_all(doc, opt) if command == "all" else DISPATCH[command](doc, opt)
    units.sort(key=lambda u: (u.structure, u.check))
    if opt.jobs > 1 and len(units) > 1:
        with ThreadPoolExecutor(max_workers=opt.jobs) as pool:
            reports = list(pool.map(_run_unit, units))
    else:
        reports = [_run_unit(u) for u in units]
    out = Report(command)
    for u, r in zip(units, reports):
        tag = f"{prefix}{u.structure} / {u.check}"
        for k, v in r.header.items():
            out.header.setdefault(tag, {})[k] = v
        out.extend(r, f"{tag} / ")
    if not units:
        out.not_applicable = True
    return out


def emit_report(r: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(r.to_json(), indent=1, sort_keys=True) + "\n"
    if fmt == "text":
        return r.to_text() + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def exit_code(r: Report) -> int:
    return 0 if r.verdict == "pass" else 1


def load_inputs(path: str) -> list[InputDocument]:
    p = Path(path)
    if p.is_dir():
        files = sorted(p.glob("*.json"))
        if not files:
            raise InputError("", f"no .json files in {path}")
        return [load(f) for f in files]
    if not p.exists():
        raise InputError("", f"no such file: {path}")
    return [load(p)]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ydforge", description="Exact checks for generalized Yetter-Drinfeld structures.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", help="JSON document or directory of documents")
    ap.add_argument("--name", help="restrict to the structure with this name")
    ap.add_argument("--module", help="YD module to braid, tensor or lift")
    ap.add_argument("--with", dest="with_", help="second argument: a module name, or 'regular'/'trivial' for braid")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--jobs", type=int, default=1)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    opt = Options(args.name, args.module, args.with_, max(1, args.jobs))
    try:
        docs = load_inputs(args.input)
        if len(docs) == 1:
            report = run_command(docs[0], args.command, opt)
        else:
            report = Report(args.command)
            for doc in docs:
                sub = run_command(doc, args.command, opt, prefix=f"{Path(doc.source).stem}: ")
                report.header.update(sub.header)
                report.extend(sub)
            report.not_applicable = not report.findings
    except InputError as exc:
        print(f"input error at {exc.pointer or '/'}: {exc.message}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(report, args.format))
    return exit_code(report)


if __name__ == "__main__":
    sys.exit(main())
