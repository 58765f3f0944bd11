"""atlas: command-line interface.

Subcommands mirror the library drivers and print JSON (DOT for Hasse
diagrams on request).  Node numbers on the command line are 1-based Bourbaki
labels; exit status is nonzero when a classification driver finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q

from .branching import branch_adjoint
from .chevalley import build_algebra
from .classify import (
    assemble_tables_2_3,
    mixed_orbit_cohom,
    reproduce_table1,
    reproduce_thm_ss_c2,
    ClassificationError,
)
from .cohom import SampleConfig, cohom_adjoint
from .flags import flag_cohom, kostant_summands, painted
from .orbits import (
    OrbitLabel,
    Partition,
    WeightedDynkinDiagram,
    hasse_diagram,
    minimal_orbit,
    next_to_minimal,
    orbit_dimension,
    representative,
    valid_partitions,
    weighted_diagram,
)
from .roots import build_root_system, coweight_element, root_centralizer_subsystem
from .sl2 import complete_triple, isotypic_decomposition, triple_centralizer


def _jsonable(x):
    if isinstance(x, Q):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(obj):
    print(json.dumps(_jsonable(obj), indent=2))


def _cfg(args) -> SampleConfig:
    kw = {}
    if getattr(args, "seed", None) is not None:
        kw["seed"] = args.seed
    if getattr(args, "samples", None) is not None:
        kw["num_samples"] = args.samples
    if getattr(args, "steps", None) is not None:
        kw["unipotent_steps"] = args.steps
    return SampleConfig(**kw)


def _parse_label(t: str, s: str) -> OrbitLabel:
    if s == "min":
        return minimal_orbit(t)
    if s == "ntm":
        ls = next_to_minimal(t)
        if len(ls) != 1:
            raise SystemExit(f"{t} has {len(ls)} next-to-minimal orbits; pass one explicitly")
        return ls[0]
    if s.startswith("wdd:"):
        marks = tuple(int(c) for c in s[4:].replace(",", ""))
        return OrbitLabel(diagram=WeightedDynkinDiagram(marks))
    parts = tuple(int(c) for c in s.strip("()").split(","))
    return OrbitLabel(partition=Partition(parts))


def cmd_roots(args):
    rs = build_root_system(args.type)
    _emit({
        "type": str(rs.cartan_type),
        "rank": rs.rank,
        "dimension": rs.dimension,
        "num_positive_roots": rs.num_positive,
        "cartan_matrix": [list(r) for r in rs.cartan_matrix],
        "det_cartan": rs.det_cartan,
        "highest_root": list(rs.highest_root) if rs.cartan_type.is_simple else None,
        "positive_roots": [list(r) for r in rs.positive_roots],
    })
    return 0


def cmd_orbits_list(args):
    t = args.type
    mini = minimal_orbit(t)
    ntm = {str(l) for l in next_to_minimal(t)}
    rows = []
    fam = build_root_system(t).cartan_type.family
    if fam in "ABCD":
        for lab in valid_partitions(t):
            rows.append({
                "label": str(lab),
                "dimension": orbit_dimension(t, lab),
                "weighted_diagram": str(weighted_diagram(t, lab)),
                "very_even_pair": lab.very_even,
                "minimal": lab.partition == mini.partition,
                "next_to_minimal": str(lab) in ntm,
            })
    else:
        from .orbits import expected_orbit_dimension

        rs = build_root_system(t)
        for lab in [mini] + next_to_minimal(t):
            rows.append({
                "label": str(lab),
                "dimension": expected_orbit_dimension(rs, lab.diagram),
                "weighted_diagram": str(lab.diagram),
                "minimal": lab.name == "minimal",
                "next_to_minimal": lab.name == "next-to-minimal",
            })
    _emit({"type": t, "orbits": rows})
    return 0


def cmd_orbits_hasse(args):
    edges = hasse_diagram(args.type)
    if args.format == "dot":
        lines = ["digraph hasse {"]
        for lo, hi in edges:
            lines.append(f'  "{lo}" -> "{hi}";')
        lines.append("}")
        print("\n".join(lines))
    else:
        _emit({
            "type": args.type,
            "edges": [[str(lo), str(hi)] for lo, hi in edges],
        })
    return 0


def cmd_cohom_orbit(args):
    t = args.type
    a = build_algebra(t)
    lab = _parse_label(t, args.label)
    w = lab.diagram if lab.diagram is not None else weighted_diagram(t, lab)
    x = representative(a, w, seed=args.seed or 0)
    rep = cohom_adjoint(a, x, _cfg(args))
    _emit({"type": t, "label": str(lab), "weighted_diagram": str(w), **rep.as_dict()})
    return 0


def cmd_cohom_flag(args):
    a = build_algebra(args.type)
    crossed = [int(v) - 1 for v in args.cross.split(",")]
    pd = painted(args.type, crossed)
    rep = flag_cohom(a, pd, _cfg(args))
    summ = kostant_summands(a.rs, pd)
    _emit({
        "type": args.type,
        "crossed_nodes": sorted(int(v) for v in args.cross.split(",")),
        "num_kostant_summands": summ.num_summands,
        **rep.as_dict(),
    })
    return 0


def cmd_decomp(args):
    t = args.type
    a = build_algebra(t)
    lab = _parse_label(t, args.label)
    w = lab.diagram if lab.diagram is not None else weighted_diagram(t, lab)
    x = representative(a, w, seed=args.seed or 0)
    h = coweight_element(a.rs, w.marks)
    triple = complete_triple(a, x, h)
    _, k_dim = triple_centralizer(a, triple)
    d = isotypic_decomposition(a, triple)
    _emit({
        "type": t,
        "label": str(lab),
        "weighted_diagram": str(w),
        "k_dim": k_dim,
        "isotypic_multiplicities": {str(k): v for k, v in sorted(d.multiplicities.items())},
        "w_dim": d.w_dim,
        "graded_dims": {str(k): v for k, v in sorted(d.graded_dims.items())},
    })
    return 0


def cmd_branch(args):
    rs = build_root_system(args.type)
    if args.sub.startswith("marks:"):
        marks = [int(v) for v in args.sub[6:].split(",")]
        h = coweight_element(rs, marks)
        sub = root_centralizer_subsystem(rs, h)
        simples = list(sub.simple_roots)
        meta = {
            "centralizer_type": str(sub.cartan_type) if sub.cartan_type else "torus",
            "torus_dim": sub.torus_dim,
            "num_zero_roots": len(sub.roots),
        }
    elif args.sub.startswith("nodes:"):
        nodes = [int(v) - 1 for v in args.sub[6:].split(",")]
        simples = [
            tuple(1 if j == i else 0 for j in range(rs.rank)) for i in nodes
        ]
        meta = {"subsystem_nodes": [n + 1 for n in nodes]}
    else:
        raise SystemExit("--sub must be marks:... or nodes:...")
    if not simples:
        raise SystemExit("empty subsystem (regular element); nothing to branch to")
    br = branch_adjoint(rs, simples)
    _emit({
        "type": args.type,
        **meta,
        "parent_dimension": br.parent_dimension,
        "components": [
            {
                "subsystem": c.subsystem_type,
                "highest_weight": list(c.highest_weight),
                "torus_charge": [str(q) for q in c.torus_charge],
                "multiplicity": c.multiplicity,
                "dimension": c.dimension,
            }
            for c in br.components
        ],
        "dimension_check": br.total_dimension == br.parent_dimension,
    })
    return 0


def cmd_classify(args):
    cfg = _cfg(args)
    try:
        if args.what == "table1":
            types = args.types.split(",") if args.types else None
            table = reproduce_table1(types=types, cfg=cfg, strict=False)
            _emit(table.as_dict())
            return 0 if table.all_match else 1
        if args.what == "ss-c2":
            table = reproduce_thm_ss_c2(max_rank=args.max_rank, cfg=cfg, strict=False)
            _emit(table.as_dict())
            return 0 if table.all_match else 1
        if args.what == "tables23":
            t2, t3 = assemble_tables_2_3(cfg)
            _emit({"table2": t2.as_dict(), "table3": t3.as_dict()})
            return 0 if (t2.all_match and t3.all_match) else 1
        if args.what == "mixed":
            rep = mixed_orbit_cohom(args.n or 3, cfg)
            _emit(rep.as_dict())
            return 0
    except ClassificationError as e:
        print(f"classification mismatch: {e}", file=sys.stderr)
        return 1
    raise SystemExit(f"unknown classify target {args.what}")


def _add_sampler_args(p):
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--steps", type=int, default=None)


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="atlas",
        description="Exact cohomogeneity computations for adjoint orbits",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("roots", help="root system summary (JSON)")
    p.add_argument("type")
    p.set_defaults(fn=cmd_roots)

    po = sub.add_parser("orbits", help="nilpotent orbit catalog")
    so = po.add_subparsers(dest="sub", required=True)
    p = so.add_parser("list", help="orbit labels, dimensions, flags (JSON)")
    p.add_argument("type")
    p.set_defaults(fn=cmd_orbits_list)
    p = so.add_parser("hasse", help="closure order")
    p.add_argument("type")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.set_defaults(fn=cmd_orbits_hasse)

    pc = sub.add_parser("cohom", help="cohomogeneity reports")
    sc = pc.add_subparsers(dest="sub", required=True)
    p = sc.add_parser("orbit", help="cohomogeneity of a nilpotent orbit")
    p.add_argument("type")
    p.add_argument("--label", required=True,
                   help="partition '2,2,1' | wdd:0001 | min | ntm")
    _add_sampler_args(p)
    p.set_defaults(fn=cmd_cohom_orbit)
    p = sc.add_parser("flag", help="cohomogeneity of a painted-diagram orbit")
    p.add_argument("type")
    p.add_argument("--cross", required=True, help="1-based node list, e.g. 1,2")
    _add_sampler_args(p)
    p.set_defaults(fn=cmd_cohom_flag)

    p = sub.add_parser("decomp", help="sl2 isotypic decomposition and W data")
    p.add_argument("type")
    p.add_argument("--label", required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_decomp)

    p = sub.add_parser("branch", help="restriction of the adjoint representation")
    p.add_argument("type")
    p.add_argument("--sub", required=True, dest="sub",
                   help="marks:1,0,... (coweight centralizer) or nodes:2,3")
    p.set_defaults(fn=cmd_branch)

    p = sub.add_parser("classify", help="classification drivers")
    p.add_argument("what", choices=["table1", "ss-c2", "tables23", "mixed"])
    p.add_argument("--types", default=None, help="comma list restricting table1")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--n", type=int, default=None, help="rank for the mixed orbit")
    _add_sampler_args(p)
    p.set_defaults(fn=cmd_classify)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
