"""Command line front end.

Subcommands:

    validate      run the axiom suite over every named object in a workspace
    compute       apply one functor (cotensor, induce, adinduce, tensor, cohom)
    certify       decide separability of one of the four functor families
    entwine       compile entwining data into corings and coring homs

All subcommands read one or more workspace JSON files (merged in order),
print a canonical JSON report on stdout, and put human diagnostics on
stderr. Results written with --out are self-contained workspace documents
that load back on their own.

Exit codes:

    0   valid / feasible / computed
    2   malformed input (bad JSON, bad references, wrong shapes, usage)
    3   the requested certificate does not exist (infeasible system)
    4   an object or compiled structure fails its axioms
    5   a runtime hypothesis failed (flatness, quasi-finiteness)
"""

import argparse
import os
import sys

from .algebra import Algebra, Bimodule, validate_algebra, validate_bimodule
from .coring import (
    Bicomodule,
    Coring,
    LeftComodule,
    RightComodule,
    regular_right_comodule,
    validate_comodule,
    validate_coring,
)
from .cotensor import cotensor
from .entwine import (
    Entwining,
    EntwiningMorphism,
    coring_from_entwining,
    hom_from_entwining_morphism,
    validate_entwining,
    validate_entwining_morphism,
)
from .errors import (
    CoringlabError,
    HypothesisFailed,
    InternalAxiomError,
    MalformedInput,
    NotQuasiFinite,
    ValidationFailed,
)
from .fields import field_from_name
from .functors import CoringHom, ad_induce, cohom_finite, induce, validate_coring_hom
from .matrix import Matrix
from .separability import (
    Certificate,
    certify_adinduction,
    certify_base_extension,
    certify_forgetful,
    certify_induction,
    verify_certificate,
)
from .serialize import canonical_json, dump_workspace, load_files
from .tensor import tensor_over


def _emit(doc):
    sys.stdout.write(canonical_json(doc))


def _say(message):
    sys.stderr.write("coringlab: %s\n" % message)


def _default_field(ns):
    name = ns.field or os.environ.get("CORINGLAB_FIELD")
    if name is None:
        return None
    try:
        return field_from_name(name)
    except CoringlabError as exc:
        raise MalformedInput(str(exc)) from exc


def _load(ns):
    return load_files(ns.files, default_field=_default_field(ns), max_dim=ns.max_dim)


def _write_out(path, text):
    with open(path, "w") as fh:
        fh.write(text)


# -- validate -----------------------------------------------------------------

_VALIDATORS = (
    (Algebra, "algebra", validate_algebra),
    (Coring, "coring", validate_coring),
    (Bicomodule, "comodule", validate_comodule),
    (RightComodule, "comodule", validate_comodule),
    (LeftComodule, "left_comodule", validate_comodule),
    (CoringHom, "coring_hom", validate_coring_hom),
    (EntwiningMorphism, "entwining_morphism", validate_entwining_morphism),
    (Entwining, "entwining", validate_entwining),
    (Certificate, "certificate", verify_certificate),
    (Bimodule, "bimodule", validate_bimodule),
    (Matrix, "matrix", None),
)


def _violation(v):
    witness = None if v.witness is None else list(v.witness)
    return {"axiom": v.axiom, "witness": witness, "detail": v.detail}


def _object_report(obj):
    for cls, kind, validator in _VALIDATORS:
        if isinstance(obj, cls):
            if validator is None:
                return kind, []
            return kind, [_violation(v) for v in validator(obj).violations]
    raise MalformedInput("no axiom suite for %s" % type(obj).__name__)


def cmd_validate(ns):
    ws = _load(ns)
    names = [ns.name] if ns.name else sorted(ws.objects)
    reports = []
    for name in names:
        kind, violations = _object_report(ws[name])
        reports.append(
            {"name": name, "type": kind, "ok": not violations, "violations": violations}
        )
    _emit({"field": ws.field.name, "reports": reports})
    bad = [r["name"] for r in reports if not r["ok"]]
    if bad:
        _say("axiom failures in: %s" % ", ".join(bad))
        return 4
    return 0


# -- compute ------------------------------------------------------------------

def _as_cotensor_operand(ws, name):
    obj = ws[name]
    if isinstance(obj, Coring):
        return Bicomodule.regular(obj)
    if isinstance(obj, (Bicomodule, RightComodule, LeftComodule)):
        return obj
    raise MalformedInput("%r is not a coring or comodule" % name)


def _as_right_comodule(ws, name):
    obj = ws[name]
    if isinstance(obj, Coring):
        return regular_right_comodule(obj)
    if isinstance(obj, RightComodule):
        return obj
    raise MalformedInput("%r is not a right comodule" % name)


def _op_cotensor(ws, names):
    cot = cotensor(_as_cotensor_operand(ws, names[0]), _as_cotensor_operand(ws, names[1]))
    descends = cot.bicomodule is not None
    if descends:
        result = cot.bicomodule.as_right()
    else:
        result = cot.space
    extra = {
        "dim": cot.dim,
        "ambient_dim": cot.chain.dim,
        "coactions_descend": descends,
        "flags": {label: bool(ok) for label, ok in cot.flags.items()},
    }
    return {"result": result, "result_inclusion": cot.inclusion}, extra


def _op_induce(ws, names):
    m = _as_right_comodule(ws, names[0])
    h = ws.get(names[1], CoringHom, "coring hom")
    out = induce(m, h)
    return {"result": out}, {"source_dim": m.dim, "dim": out.dim}


def _op_adinduce(ws, names):
    y = _as_right_comodule(ws, names[0])
    h = ws.get(names[1], CoringHom, "coring hom")
    out = ad_induce(y, h).bicomodule.as_right()
    return {"result": out}, {"source_dim": y.dim, "dim": out.dim}


def _op_tensor(ws, names):
    m = ws.get(names[0], Bimodule, "bimodule")
    n = ws.get(names[1], Bimodule, "bimodule")
    space = tensor_over(m, n)
    return {"result": space}, {"dim": space.dim, "ambient_dim": space.ambient_dim}


def _op_cohom(ws, names):
    n = ws.get(names[0], LeftComodule, "left comodule")
    data = cohom_finite(n)
    return {"result": data.dual}, {"source_dim": n.dim, "dim": data.dual.dim}


_COMPUTE = {
    "cotensor": (2, _op_cotensor),
    "induce": (2, _op_induce),
    "adinduce": (2, _op_adinduce),
    "tensor": (2, _op_tensor),
    "cohom": (1, _op_cohom),
}


def cmd_compute(ns):
    arity, handler = _COMPUTE[ns.op]
    names = [n for token in ns.names for n in token.split(",") if n]
    if len(names) != arity:
        raise MalformedInput(
            "compute --op %s takes %d operand name(s), got %d"
            % (ns.op, arity, len(names))
        )
    ws = _load(ns)
    objects, extra = handler(ws, names)
    report = {"op": ns.op, "args": names}
    report.update(extra)
    if ns.out:
        _write_out(ns.out, dump_workspace(objects, ws.field))
        report["written"] = ns.out
    _emit(report)
    return 0


# -- certify ------------------------------------------------------------------

_CERTIFY = {
    "induction": ("hom", certify_induction),
    "adinduction": ("hom", certify_adinduction),
    "forgetful": ("coring", certify_forgetful),
    "base-extension": ("coring", certify_base_extension),
}


def cmd_certify(ns):
    wants, run = _CERTIFY[ns.kind]
    name = ns.hom if wants == "hom" else ns.coring
    if name is None:
        raise MalformedInput("certify --kind %s needs --%s" % (ns.kind, wants))
    ws = _load(ns)
    if wants == "hom":
        anchor = ws.get(name, CoringHom, "coring hom")
    else:
        anchor = ws.get(name, Coring, "coring")
    try:
        report = run(anchor)
    except HypothesisFailed as exc:
        _emit(
            {
                "kind": ns.kind,
                "object": name,
                "error": "hypothesis",
                "message": str(exc),
                "hypothesis_checks": [[label, bool(ok)] for label, ok in exc.checks],
            }
        )
        _say(str(exc))
        return 5
    doc = {
        "kind": ns.kind,
        "object": name,
        "feasible": report.feasible,
        "solution_space_dim": report.solution_space_dim,
        "infeasibility_rank_deficit": report.infeasibility_rank_deficit,
        "hypothesis_checks": [
            [label, bool(ok)] for label, ok in report.hypothesis_checks
        ],
    }
    if report.feasible:
        if ns.out:
            cert_name = "certificate" if name != "certificate" else "certificate_result"
            _write_out(
                ns.out, dump_workspace({name: anchor, cert_name: report.certificate}, ws.field)
            )
            doc["written"] = ns.out
        _emit(doc)
        return 0
    if ns.out:
        _write_out(ns.out, canonical_json(doc))
        doc["written"] = ns.out
    _emit(doc)
    _say(
        "no %s certificate for %r: rank deficit %d"
        % (ns.kind, name, report.infeasibility_rank_deficit)
    )
    return 3


# -- entwine ------------------------------------------------------------------

def cmd_entwine_build(ns):
    ws = _load(ns)
    ent = ws.get(ns.name, Entwining, "entwining")
    coring = coring_from_entwining(ent)
    report = {
        "op": "entwine-build",
        "name": ns.name,
        "algebra_dim": ent.algebra.dim,
        "coalgebra_dim": ent.coalgebra.dim,
        "dim": coring.carrier.dim,
    }
    if ns.out:
        _write_out(ns.out, dump_workspace({"result": coring}, ws.field))
        report["written"] = ns.out
    _emit(report)
    return 0


def cmd_entwine_compile_hom(ns):
    ws = _load(ns)
    mor = ws.get(ns.name, EntwiningMorphism, "entwining morphism")
    hom = hom_from_entwining_morphism(mor)
    report = {
        "op": "entwine-compile-hom",
        "name": ns.name,
        "source_dim": hom.source.carrier.dim,
        "target_dim": hom.target.carrier.dim,
    }
    if ns.out:
        _write_out(ns.out, dump_workspace({"result": hom}, ws.field))
        report["written"] = ns.out
    _emit(report)
    return 0


# -- wiring -------------------------------------------------------------------

def _add_common(sub, out=True):
    sub.add_argument(
        "files", nargs="+", metavar="FILE",
        help="workspace JSON files, merged in order",
    )
    sub.add_argument(
        "--field",
        help="field for documents that do not state one "
        "(overrides the CORINGLAB_FIELD environment variable)",
    )
    sub.add_argument(
        "--max-dim", type=int, default=64,
        help="refuse objects whose stated dimension exceeds this (default 64)",
    )
    if out:
        sub.add_argument("--out", help="write the resulting workspace document here")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coringlab",
        description="Exact computations with corings, comodules, and "
        "separability certificates over Q and F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run axiom suites over named objects")
    p.add_argument("--name", help="validate just this object")
    _add_common(p, out=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("compute", help="apply one functor to named objects")
    p.add_argument(
        "--op", required=True, choices=sorted(_COMPUTE),
        help="which functor to apply",
    )
    p.add_argument(
        "--args", dest="names", action="append", required=True,
        metavar="NAME[,NAME]",
        help="operand object names in order, comma separated or repeated",
    )
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("certify", help="decide separability of a functor")
    p.add_argument(
        "--kind", required=True, choices=sorted(_CERTIFY),
        help="which functor family to certify",
    )
    p.add_argument("--hom", help="coring hom name (induction, adinduction)")
    p.add_argument("--coring", help="coring name (forgetful, base-extension)")
    _add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("entwine", help="compile entwining data")
    esub = p.add_subparsers(dest="subcommand", required=True)

    b = esub.add_parser("build", help="compile an entwining into its coring")
    b.add_argument("--name", required=True, help="entwining object name")
    _add_common(b)
    b.set_defaults(func=cmd_entwine_build)

    c = esub.add_parser(
        "compile-hom", help="compile an entwining morphism into a coring hom"
    )
    c.add_argument("--name", required=True, help="entwining morphism object name")
    _add_common(c)
    c.set_defaults(func=cmd_entwine_compile_hom)

    return parser


def main(argv=None):
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except MalformedInput as exc:
        _say(str(exc))
        _emit({"error": "malformed", "message": str(exc)})
        return 2
    except (HypothesisFailed, NotQuasiFinite) as exc:
        _say(str(exc))
        _emit({"error": "hypothesis", "message": str(exc)})
        return 5
    except InternalAxiomError:
        raise
    except ValidationFailed as exc:
        _say(str(exc))
        doc = {"error": "validation", "message": str(exc)}
        if exc.report is not None:
            doc["violations"] = [_violation(v) for v in exc.report.violations]
        _emit(doc)
        return 4
    except CoringlabError as exc:
        _say(str(exc))
        _emit({"error": "malformed", "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
