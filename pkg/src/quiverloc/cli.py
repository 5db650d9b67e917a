"""Command-line front end.

Exit status: 0 on success, 1 if the engines disagree (a mathematical
inconsistency), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .covering import component_to_dot, enumerate_components
from .cycles import Cycle, class_weight, enumerate_cycle_classes, necklace_count
from .euler import euler_direct, localization_trace
from .hochschild import hh0_graded_dim, hh0_primitive_dim
from .linalg import GF, parse_field
from .moduli import moduli_dims, nonempty_reason
from .quiver import Quiver, QuiverError
from .representations import (
    Representation,
    endomorphism_dim,
    is_nilpotent,
    is_simple_bruteforce,
    string_rep,
    traces_vanish_bounded,
)
from .serialize import load_quiver, load_representation, parse_dimvec, representation_to_dict
from .corpus import dimension_vectors


class InputError(Exception):
    pass


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _loop_count(Q: Quiver) -> int | None:
    if Q.n_vertices == 1 and Q.n_arrows > 0:
        return Q.n_arrows
    return None


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_euler(args) -> int:
    Q = load_quiver(args.quiver)
    d = parse_dimvec(Q, args.d)
    if not any(d):
        raise InputError("dimension vector must be nonzero")
    direct = euler_direct(Q, d)
    tree = localization_trace(Q, d)
    m = _loop_count(Q)
    neck = necklace_count(m, d[0]) if m else None
    values = [direct, tree.value] + ([neck] if neck is not None else [])
    consistent = len(set(values)) == 1
    payload = {"direct": direct, "localized": tree.value, "necklace": neck, "consistent": consistent}
    line = f"direct={direct} localized={tree.value}"
    if neck is not None:
        line += f" necklace={neck}"
    lines = [line]
    if args.trace == "json":
        payload["trace"] = tree.to_dict()
        lines.append(tree.to_json())
    elif args.trace == "dot":
        payload["trace_dot"] = tree.to_dot()
        lines.append(tree.to_dot().rstrip("\n"))
    if not consistent:
        lines.append("MISMATCH between engines")
    _emit(args, payload, lines)
    return 0 if consistent else 1


def cmd_components(args) -> int:
    Q = load_quiver(args.quiver)
    d = parse_dimvec(Q, args.d)
    comps = enumerate_components(Q, d)
    rows = []
    lines = [f"{len(comps)} components", "nu\tsize\tdims\tvertices"]
    for c in comps:
        verts = [f"{Q.vertex_labels[i]}@{_fmt(r)}" for i, r, _ in c.lift]
        rows.append({"nu": list(c.nu), "size": c.size, "dims": list(c.dimension), "vertices": verts,
                     "arrows": [Q.arrows[b].label for b in c.quiver.cover.arrow_base]})
        lines.append(f"{_fmt(c.nu)}\t{c.size}\t{_fmt(c.dimension)}\t{' '.join(verts)}")
    if args.dot:
        out = Path(args.dot)
        out.mkdir(parents=True, exist_ok=True)
        for k, c in enumerate(comps, 1):
            (out / f"component_{k}.dot").write_text(component_to_dot(c, f"component_{k}"))
        lines.append(f"wrote {len(comps)} DOT files to {out}")
    _emit(args, {"components": rows}, lines)
    return 0


def cmd_cycles(args) -> int:
    Q = load_quiver(args.quiver)
    d = parse_dimvec(Q, args.d)
    classes = enumerate_cycle_classes(Q, d)
    if args.primitive:
        classes = [c for c in classes if c.primitive]
    rows, lines = [], []
    for c in classes:
        labels = [Q.arrows[a].label for a in c.arrows]
        rows.append({"arrows": labels, "weight": list(class_weight(Q, c)), "primitive": c.primitive})
        lines.append(f"{','.join(labels)}\t{_fmt(class_weight(Q, c))}\t{'primitive' if c.primitive else 'power'}")
    lines.append(f"# {len(classes)} classes, {sum(c.primitive for c in classes)} primitive")
    _emit(args, {"classes": rows}, lines)
    return 0


def cmd_nonempty(args) -> int:
    Q = load_quiver(args.quiver)
    d = parse_dimvec(Q, args.d)
    ok, why = nonempty_reason(Q, d)
    payload = {"nonempty": ok, "clause": why}
    line = f"{'nonempty' if ok else 'empty'}: {why}"
    if ok:
        aff, proj = moduli_dims(Q, d)
        payload.update(affine_dim=aff, projective_dim=proj)
        line += f" (dim {aff}, projectivized {proj})"
    _emit(args, payload, [line])
    return 0


def cmd_stringrep(args) -> int:
    Q = load_quiver(args.quiver)
    labels = [x.strip() for x in args.cycle.split(",") if x.strip()]
    c = Cycle.from_labels(Q, labels)
    X = string_rep(Q, c, parse_field(args.field))
    print(json.dumps(representation_to_dict(X), indent=2))
    return 0


def cmd_nullcone(args) -> int:
    X = load_representation(args.rep)
    nil = is_nilpotent(X)
    payload = {"nilpotent": nil}
    lines = [f"nilpotent={nil}"]
    if X.field.characteristic == 0:
        tv = traces_vanish_bounded(X)
        payload["traces_vanish"] = tv
        lines.append(f"traces_vanish={tv}")
        if tv != nil:
            lines.append("MISMATCH between nilpotency and trace tests")
            _emit(args, payload, lines)
            return 1
    _emit(args, payload, lines)
    return 0


def cmd_simple_check(args) -> int:
    X = load_representation(args.rep)
    F = GF(args.p)
    try:
        Xp = Representation(X.quiver, X.dim, F, tuple(F.array(M, M.shape) for M in X.maps))
    except ValueError as exc:
        raise InputError(f"cannot reduce matrices mod {args.p}: {exc}") from None
    simple = is_simple_bruteforce(Xp)
    ends = endomorphism_dim(Xp)
    _emit(args, {"simple": simple, "endomorphism_dim": ends, "field": F.name},
          [f"simple={simple} endomorphism_dim={ends} over {F.name}"])
    return 0


def cmd_hh0(args) -> int:
    Q = load_quiver(args.quiver)
    rows, lines = [], ["d\t|C_d|\t|C_d^prim|"]
    for d in dimension_vectors(Q.n_vertices, args.max_degree):
        total, prim = hh0_graded_dim(Q, d), hh0_primitive_dim(Q, d)
        if total == 0 and not args.all:
            continue
        rows.append({"d": list(d), "classes": total, "primitive": prim})
        lines.append(f"{_fmt(d)}\t{total}\t{prim}")
    _emit(args, {"table": rows}, lines)
    return 0


def cmd_selfcheck(args) -> int:
    from .selfcheck import run_selfcheck

    failures = run_selfcheck(quick=args.quick, log=print)
    if failures:
        for f in failures:
            print("FAIL", f)
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quiverloc", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def with_qd(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("quiver", help="quiver JSON file")
        s.add_argument("-d", required=True, help="dimension vector: 1,2 or i=1,j=2")
        s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        return s

    s = with_qd("euler", "Euler characteristic by all engines")
    s.add_argument("--trace", choices=["json", "dot"])
    s.set_defaults(func=cmd_euler)
    s = with_qd("components", "torus-fixed components")
    s.add_argument("--dot", metavar="DIR", help="write one DOT file per component")
    s.set_defaults(func=cmd_components)
    s = with_qd("cycles", "cycle classes of a dimension vector")
    s.add_argument("--primitive", action="store_true")
    s.set_defaults(func=cmd_cycles)
    s = with_qd("nonempty", "non-emptiness of the simple moduli")
    s.set_defaults(func=cmd_nonempty)

    s = sub.add_parser("stringrep", help="string representation of a cycle")
    s.add_argument("quiver")
    s.add_argument("--cycle", required=True, help="comma-separated arrow ids")
    s.add_argument("--field", default="Q", help="Q or Fp:p")
    s.set_defaults(func=cmd_stringrep)

    s = sub.add_parser("nullcone", help="nilpotency / trace vanishing of a representation")
    s.add_argument("rep")
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_nullcone)

    s = sub.add_parser("simple-check", help="brute-force simplicity over F_p")
    s.add_argument("rep")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_simple_check)

    s = sub.add_parser("hh0", help="graded dimensions of HH_0")
    s.add_argument("quiver")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--all", action="store_true", help="include zero rows")
    s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_hh0)

    s = sub.add_parser("selfcheck", help="run the property corpus")
    s.add_argument("--quick", action="store_true")
    s.set_defaults(func=cmd_selfcheck)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, QuiverError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
