"""Command-line front end.

Every verb prints to stdout unless ``--out`` is given.  Exit status is 0 on
success, 1 when a verification verb finds a violation and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import islice

from . import algebra, braden, checks, repr as rep, supergroup as sg
from .algebra import AlgebraError, BasisVector, Element
from .diagrams import DiagramError, cup_diagram
from .laurent import GradedMatrix
from .weights import Block, Weight, WeightError, principal_block, weights_in_block

USAGE_ERRORS = (WeightError, DiagramError, AlgebraError, sg.SuperError, braden.BradenError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# input helpers


def _block(args) -> Block:
    if args.block is not None:
        return Block(args.block, args.parity)
    if args.k is None:
        raise UsageError("give --k or --block")
    return principal_block(args.k, args.parity)


def _weight(text: str, block: Block | None = None) -> Weight:
    w = Weight.parse(text)
    if block is not None and w.block != block:
        raise WeightError(f"weight {w} is not in block {block}")
    return w


def _vector(text: str) -> BasisVector:
    """``lower,nu,upper`` as three weight words."""
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"basis vector {text!r} needs the form lower,nu,upper")
    lower, nu, upper = (_weight(p) for p in parts)
    return BasisVector(lower, nu, upper)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _matrix(args, m: GradedMatrix, schema: str) -> str:
    fmt = args.format or "ascii"
    if fmt == "csv":
        return m.to_csv()
    if fmt == "json":
        return _dump({"schema": schema, **m.to_json()})
    if fmt == "ascii":
        return m.ascii()
    raise UsageError(f"format {fmt} is not available for matrices")


def _map(jobs: int, fn, items: list) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# verbs


def cmd_block(args) -> int:
    b = _block(args)
    ws = weights_in_block(b)
    if args.format == "json":
        _emit(args, _dump({
            "schema": "arcalg.block/1",
            "block": b.to_json(),
            "weights": [{"weight": w.labels, "cup": cup_diagram(w).text(), "defect": cup_diagram(w).defect}
                        for w in ws],
        }))
    else:
        _emit(args, "".join(f"{i}\t{w.labels}\t{cup_diagram(w).text()}\n" for i, w in enumerate(ws, start=1)))
    return 0


def cmd_basis(args) -> int:
    b = _block(args)
    vs = algebra.basis(b)
    if args.format == "json":
        _emit(args, _dump({"schema": "arcalg.basis/1", "block": b.to_json(),
                           "vectors": [dict(v.to_json(), degree=v.degree) for v in vs]}))
    else:
        _emit(args, "".join(f"{v}\t{v.degree}\n" for v in vs))
    return 0


def cmd_mul(args) -> int:
    x, y = _vector(args.x), _vector(args.y)
    prod = algebra.multiply(Element.basis_vector(x), Element.basis_vector(y))
    if args.format == "json":
        _emit(args, _dump({"schema": "arcalg.product/1", "x": x.to_json(), "y": y.to_json(),
                           "product": prod.to_json()}))
    else:
        _emit(args, f"{prod}\n")
    return 0


def _cartan_row(item):
    lam, ws = item
    return [rep.cartan_entry(lam, mu) for mu in ws]


def _dec_row(item):
    lam, ws = item
    return [rep.dec_entry(mu, lam) for mu in ws]


def cmd_cartan(args) -> int:
    ws = weights_in_block(_block(args))
    rows = _map(args.jobs, _cartan_row, [(w, ws) for w in ws])
    m = GradedMatrix(ws, ws, tuple(tuple(r) for r in rows))
    _emit(args, _matrix(args, m, "arcalg.cartan/1"))
    return 0


def cmd_decomp(args) -> int:
    ws = weights_in_block(_block(args))
    rows = _map(args.jobs, _dec_row, [(w, ws) for w in ws])
    m = GradedMatrix(ws, ws, tuple(tuple(r) for r in rows))
    _emit(args, _matrix(args, m, "arcalg.decomposition/1"))
    return 0


def cmd_quiver(args) -> int:
    q = rep.quiver(_block(args))
    if args.dot or args.format == "dot":
        _emit(args, q.to_dot())
    elif args.format == "json":
        _emit(args, _dump({"schema": "arcalg.quiver/1",
                           "vertices": [w.labels for w in q.vertices],
                           "edges": [[a.labels, b.labels] for a, b in q.edges]}))
    else:
        _emit(args, "".join(f"{a}\t{b}\n" for a, b in q.edges))
    return 0


def cmd_cell(args) -> int:
    b = _block(args)
    mus = [_weight(args.weight, b)] if args.weight else list(weights_in_block(b))
    out = []
    for mu in mus:
        cm = rep.cell_basis(mu)
        out.append({
            "weight": mu.labels,
            "dimension": cm.dimension,
            "graded_dimension": str(cm.graded_dimension()),
            "basis": [{"cup": lam.labels, "degree": d} for lam, d in cm.basis],
            "filtration": [{"weight": m.labels, "shift": s} for m, s in rep.cell_filtration(mu)],
            "radical_layers": [[w.labels for w in layer] for layer in rep.cell_radical_layers(mu)],
        })
    if args.format == "json":
        _emit(args, _dump({"schema": "arcalg.cell/1", "block": b.to_json(), "cells": out}))
    else:
        lines = []
        for c in out:
            filt = " ".join(f"{f['weight']}<{f['shift']}>" for f in c["filtration"])
            layers = " | ".join(" ".join(layer) for layer in c["radical_layers"])
            lines.append(f"{c['weight']}\tdim {c['dimension']} ({c['graded_dimension']})\t"
                         f"P: {filt}\tV: {layers}\n")
        _emit(args, "".join(lines))
    return 0


def _assoc_chunk(item):
    block, triples = item
    r = checks.AxiomReport(block)
    checks.check_triples(r, triples)
    return r


def _chunks(it, size: int):
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def cmd_assoc_check(args) -> int:
    b = _block(args)
    if args.full:
        r = checks.axiom_report(b, args.samples, args.seed)
    else:
        triples = (algebra.composable_triples(b) if args.samples is None
                   else algebra.random_triples(b, args.samples, args.seed))
        r = checks.AxiomReport(b)
        for part in _map(args.jobs, _assoc_chunk, [(b, c) for c in _chunks(triples, 5000)]):
            r.merge(part)
        r.checked.setdefault("associativity", 0)
        r.failures.setdefault("associativity", [])
    if args.format == "json":
        _emit(args, _dump(r.to_json()))
    else:
        lines = [f"{n}\t{r.checked[n]} checked\t{len(r.failures[n])} failed\n" for n in sorted(r.checked)]
        _emit(args, "".join(lines))
    return 0 if r.ok else 1


def cmd_braden_verify(args) -> int:
    if args.k is None:
        raise UsageError("braden-verify needs --k")
    r = braden.verify_relations(args.k, args.parity)
    if args.format == "json":
        _emit(args, _dump(r.to_json()))
    else:
        lines = [f"{f}\t{r.checked[f]} checked\t{len(r.failures[f])} failed\n" for f in sorted(r.checked)]
        _emit(args, "".join(lines))
    return 0 if r.ok else 1


def _super_part(args, text: str) -> sg.HookPartition:
    return sg.HookPartition.parse(text, args.m, args.n)


def cmd_super(args) -> int:
    if args.super_verb == "hom":
        la, mu = _super_part(args, args.la), _super_part(args, args.mu)
        d = sg.hom_dim(la, mu, args.level)
        if args.format == "json":
            _emit(args, _dump({"schema": "arcalg.super-hom/1", "m": args.m, "n": args.n,
                               "la": str(la), "mu": str(mu), "hom_dim": d}))
        else:
            _emit(args, f"{d}\n")
        return 0
    if args.super_verb == "table":
        parts = [_super_part(args, t) for t in args.parts.split(";")]
        table = [[sg.hom_dim(a, b, args.level) for b in parts] for a in parts]
        if args.format == "json":
            _emit(args, _dump({"schema": "arcalg.super-hom-table/1", "m": args.m, "n": args.n,
                               "partitions": [str(p) for p in parts], "hom_dim": table}))
        else:
            names = [str(p) for p in parts]
            w = max(len(x) for x in names)
            head = " " * w + "  " + "  ".join(x.rjust(w) for x in names) + "\n"
            body = "".join(a.rjust(w) + "  " + "  ".join(str(x).rjust(w) for x in row) + "\n"
                           for a, row in zip(names, table))
            _emit(args, head + body)
        return 0
    la = _super_part(args, args.la)
    rho = sg.wt_prime(la)
    data = {
        "schema": "arcalg.super-weight/1", "m": args.m, "n": args.n, "partition": str(la),
        "rho": rho.to_json(), "d_degree": sg.d_degree(la),
        "infinite_weight": str(sg.infinite_weight(la)), "super_weight": str(sg.super_weight(la)),
    }
    if args.format == "json":
        _emit(args, _dump(data))
    else:
        _emit(args, "".join(f"{k}\t{data[k]}\n" for k in
                            ("partition", "d_degree", "infinite_weight", "super_weight")))
    return 0


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    p.add_argument("--k", type=int, help="bullets of the principal block")
    p.add_argument("--block", help="skeleton over b/x/o, e.g. xbbob")
    p.add_argument("--parity", type=int, default=0, choices=(0, 1))
    p.add_argument("--format", choices=formats)
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arcalg", description="Type D arc algebra computations.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("block", help="list the weights of a block")
    _common(s, ("ascii", "json"))
    s.set_defaults(func=cmd_block)

    s = sub.add_parser("basis", help="list the graded basis")
    _common(s, ("ascii", "json"))
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("mul", help="multiply two basis vectors given as lower,nu,upper")
    _common(s, ("ascii", "json"))
    s.add_argument("x")
    s.add_argument("y")
    s.set_defaults(func=cmd_mul)

    for name, func in (("cartan", cmd_cartan), ("decomp", cmd_decomp)):
        s = sub.add_parser(name, help=f"{name} matrix of a block")
        _common(s, ("ascii", "csv", "json"))
        s.set_defaults(func=func)

    s = sub.add_parser("quiver", help="Ext quiver of a block")
    _common(s, ("ascii", "dot", "json"))
    s.add_argument("--dot", action="store_true", help="same as --format dot")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("cell", help="cell modules, filtrations and radical layers")
    _common(s, ("ascii", "json"))
    s.add_argument("--weight", help="restrict to one weight")
    s.set_defaults(func=cmd_cell)

    s = sub.add_parser("assoc-check", help="associativity (or all axioms with --full)")
    _common(s, ("ascii", "json"))
    s.add_argument("--samples", type=int, help="random triples instead of all")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--full", action="store_true", help="run every axiom check")
    s.set_defaults(func=cmd_assoc_check)

    s = sub.add_parser("braden-verify", help="check the relations of the presentation")
    _common(s, ("ascii", "json"))
    s.set_defaults(func=cmd_braden_verify)

    s = sub.add_parser("super", help="orthosymplectic weight dictionary and Hom dimensions")
    ssub = s.add_subparsers(dest="super_verb", required=True, parser_class=_Parser)
    for name, extra in (("hom", ("la", "mu")), ("table", ()), ("weight", ("la",))):
        t = ssub.add_parser(name)
        t.add_argument("--m", type=int, required=True)
        t.add_argument("--n", type=int, required=True)
        t.add_argument("--format", choices=("ascii", "json"))
        t.add_argument("--out")
        t.add_argument("--level", type=int, help="truncation level (default: the good level)")
        for a in extra:
            t.add_argument(f"--{a}", required=True, help="comma-separated parts, 0 for empty")
        if name == "table":
            t.add_argument("--parts", required=True, help="partitions separated by ';'")
        t.set_defaults(func=cmd_super)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"arcalg: usage: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"arcalg: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
