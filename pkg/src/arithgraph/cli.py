"""Command line access to every operation, driven by a JSON workspace file.

Exit codes: 0 success, 1 domain error, 2 a theorem check failed, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .arith import enumerate_structures, laplacian, natural_structure
from .critical import DEFAULT_BOUND, critical_group
from .divisor import (
    canonical_divisor,
    genus_data,
    is_principal,
    pullback_divisor,
    pushforward,
    ramification_divisor,
)
from .errors import ArithGraphError, GraphMismatch, NotPrincipal
from .morphism import (
    analyze_harmonic,
    enumerate_harmonic_morphisms,
    pullback_structure,
    verify_matrix_identities,
)
from .verify import (
    all_checks,
    check_canonical_ram_identity,
    check_genus_inequality,
    check_order_divisibility,
    check_riemann_hurwitz,
    check_s_deg_lemma,
    morphism_obstruction,
)
from .workspace import (
    divisor_to_doc,
    dumps,
    int_strings,
    load_workspace,
    structure_to_doc,
)

EXIT_OK, EXIT_DOMAIN, EXIT_THEOREM, EXIT_USAGE = 0, 1, 2, 3

CHECKS = {
    "rh": check_riemann_hurwitz,
    "kram": check_canonical_ram_identity,
    "divides": check_order_divisibility,
    "genus-ineq": check_genus_inequality,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- reference resolution -------------------------------------------------

def _structure_on(ws, graph_name, ref):
    """Structure ``ref`` on graph ``graph_name``; ``natural`` is always available."""
    g = ws.graph(graph_name)
    if ref == "natural":
        return natural_structure(g)
    entry = ws.structure(ref)
    if entry.graph != graph_name:
        raise GraphMismatch(f"structure {ref!r} lives on {entry.graph!r}, not {graph_name!r}")
    return entry.structure


def _harmonic(ws, name):
    return analyze_harmonic(ws.morphism(name).morphism)


def _codomain_structure(ws, morph_name, ref):
    return _structure_on(ws, ws.morphism(morph_name).codomain, ref)


def _divisor_on(ws, graph_name, ref):
    entry = ws.divisor(ref)
    if entry.graph != graph_name:
        raise GraphMismatch(f"divisor {ref!r} lives on {entry.graph!r}, not {graph_name!r}")
    return entry.divisor


def _matrix_doc(m):
    return [int_strings(row) for row in m]


def _group_doc(k):
    return {"invariant_factors": int_strings(k.invariant_factors), "order": str(k.order)}


# --- subcommands ----------------------------------------------------------

def cmd_validate_structure(ws, a):
    st = _structure_on(ws, a.graph, a.structure)
    return {"valid": True, **structure_to_doc(st, a.graph)}


def cmd_natural(ws, a):
    return structure_to_doc(natural_structure(ws.graph(a.graph)), a.graph)


def cmd_laplacian(ws, a):
    return {"laplacian": _matrix_doc(laplacian(_structure_on(ws, a.graph, a.structure)))}


def cmd_critical_group(ws, a):
    return _group_doc(critical_group(_structure_on(ws, a.graph, a.structure)))


def cmd_enumerate_structures(ws, a):
    g = ws.graph(a.graph)
    out = []
    for st in enumerate_structures(g, a.max_r):
        doc = structure_to_doc(st)
        doc["critical_group"] = _group_doc(critical_group(st))
        out.append(doc)
    return {"graph": a.graph, "max_r": str(a.max_r), "structures": out}


def _harmonic_doc(h):
    doc = {
        "map": h.morphism.label_map(),
        "constant": h.constant,
        "mu": int_strings(h.mu),
        "nu": int_strings(h.nu),
        "degree": str(h.degree),
    }
    if not h.constant:
        rep = verify_matrix_identities(h)
        doc["adjacency_identity"] = rep.adjacency_identity
        doc["degree_identity"] = rep.degree_identity
    return doc


def cmd_check_harmonic(ws, a):
    return {"harmonic": True, **_harmonic_doc(_harmonic(ws, a.morphism))}


def cmd_find_morphisms(ws, a):
    hs = enumerate_harmonic_morphisms(ws.graph(a.domain), ws.graph(a.codomain), a.include_constant)
    return {"domain": a.domain, "codomain": a.codomain, "morphisms": [_harmonic_doc(h) for h in hs]}


def cmd_pullback_structure(ws, a):
    h = _harmonic(ws, a.morphism)
    st2 = pullback_structure(h, _codomain_structure(ws, a.morphism, a.structure))
    return structure_to_doc(st2, ws.morphism(a.morphism).domain)


def cmd_pushforward(ws, a):
    entry = ws.morphism(a.morphism)
    d = _divisor_on(ws, entry.domain, a.divisor)
    return divisor_to_doc(pushforward(_harmonic(ws, a.morphism), d), entry.codomain)


def cmd_pullback_divisor(ws, a):
    entry = ws.morphism(a.morphism)
    xi = _divisor_on(ws, entry.codomain, a.divisor)
    return divisor_to_doc(pullback_divisor(_harmonic(ws, a.morphism), xi), entry.domain)


def cmd_is_principal(ws, a):
    st = _structure_on(ws, a.graph, a.structure)
    d = _divisor_on(ws, a.graph, a.divisor)
    try:
        f = is_principal(d, st)
    except NotPrincipal:
        return {"principal": False}
    return {"principal": True, "witness": int_strings(f)}


def cmd_canonical(ws, a):
    return divisor_to_doc(canonical_divisor(_structure_on(ws, a.graph, a.structure)), a.graph)


def cmd_ramification(ws, a):
    entry = ws.morphism(a.morphism)
    return divisor_to_doc(ramification_divisor(_harmonic(ws, a.morphism)), entry.domain)


def cmd_genus(ws, a):
    gd = genus_data(_structure_on(ws, a.graph, a.structure))
    return {"deg_K": str(gd.deg_k), "genus": str(gd.genus), "integral": gd.integral}


def cmd_check(ws, a):
    if a.theorem == "sdeg":
        return [check_s_deg_lemma(_structure_on(ws, a.target, a.structure))]
    h = _harmonic(ws, a.target)
    st1 = _codomain_structure(ws, a.target, a.structure)
    if a.theorem == "all":
        return all_checks(h, st1, bound=a.bound, seed=a.seed)
    return [CHECKS[a.theorem](h, st1)]


def cmd_obstruction(ws, a):
    rep = morphism_obstruction(ws.graph(a.domain), ws.graph(a.codomain), a.max_r, a.max_r_codomain)
    return {"domain": a.domain, "codomain": a.codomain, "max_r": str(a.max_r), **rep.to_dict()}


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arithgraph", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    common.add_argument("-w", "--workspace", required=True, help="workspace JSON file")
    common.add_argument("--pretty", action="store_true", help="indented output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *positionals, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(fn=fn)
        return sp

    add("validate-structure", cmd_validate_structure, "graph", "structure")
    add("natural", cmd_natural, "graph")
    add("laplacian", cmd_laplacian, "graph", "structure")
    add("critical-group", cmd_critical_group, "graph", "structure")
    sp = add("enumerate-structures", cmd_enumerate_structures, "graph")
    sp.add_argument("--max-r", type=_positive_int, required=True)
    add("check-harmonic", cmd_check_harmonic, "morphism")
    sp = add("find-morphisms", cmd_find_morphisms, "domain", "codomain")
    sp.add_argument("--include-constant", action="store_true")
    add("pullback-structure", cmd_pullback_structure, "morphism", "structure")
    add("pushforward", cmd_pushforward, "morphism", "divisor")
    add("pullback-divisor", cmd_pullback_divisor, "morphism", "divisor")
    add("is-principal", cmd_is_principal, "graph", "structure", "divisor")
    add("canonical", cmd_canonical, "graph", "structure")
    add("ramification", cmd_ramification, "morphism")
    add("genus", cmd_genus, "graph", "structure")
    sp = sub.add_parser("check", parents=[common], help="theorem checks; emits JSON lines")
    sp.add_argument("theorem", choices=["rh", "kram", "divides", "sdeg", "genus-ineq", "all"])
    sp.add_argument("target", help="morphism name (graph name for sdeg)")
    sp.add_argument("structure", help="structure name or 'natural'")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    sp.set_defaults(fn=cmd_check)
    sp = add("obstruction", cmd_obstruction, "domain", "codomain")
    sp.add_argument("--max-r", type=_positive_int, required=True)
    sp.add_argument("--max-r-codomain", type=_positive_int, default=None)
    return p


def _error_doc(exc: BaseException) -> str:
    return dumps({"error": type(exc).__name__, "message": str(exc)})


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(_error_doc(exc), file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    try:
        ws = load_workspace(args.workspace)
        result = args.fn(ws, args)
    except ArithGraphError as exc:
        print(_error_doc(exc), file=stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(_error_doc(exc), file=stderr)
        return EXIT_USAGE
    if isinstance(result, list):
        for rep in result:
            print(dumps(rep.to_dict(), args.pretty), file=stdout)
        return EXIT_OK if all(r.passed for r in result) else EXIT_THEOREM
    print(dumps(result, args.pretty), file=stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
