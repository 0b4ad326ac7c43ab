"""Command line front end.

Subcommands: build (catalogue of constructions), validate, classify,
sum (embedded connected sum), stats (incidence numbers of the honeycombs
against their catalogued values) and export (OFF/OBJ/JSON).

Exit codes: 0 on success, 1 when a build collides or a complex fails to
be a surface, 2 for usage errors and malformed input files.
"""

from __future__ import annotations

import argparse
import json
import sys

from gridforge.constructors import (
    EndDecoration, closed_surface, crosscap_z4, frame_torus, klein_bottle,
    prune_and_decorate, sphere_cube, spiral_tree, tree_of_life,
)
from gridforge.coxeter import CLAIMED_INCIDENCE, build_system, incidence_counts
from gridforge.export import to_obj, to_off
from gridforge.formats import dumps_complex, jsonable_to_complex
from gridforge.honeycombs import (
    closed_orientable_435, crosscap_abstract_34, hyperbolic_pants_435,
    hyperbolic_torus_435, pants_4335, surface_4335, torus_4335,
    tree_of_life_435,
)
from gridforge.surface import (
    GridCollisionError, classify, connected_sum_embedded, validate_surface,
)


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(path):
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return jsonable_to_complex(data)


def _genus_or_crosscaps(args, what):
    if (args.genus is None) == (args.crosscaps is None):
        raise ValueError(f"{what} needs exactly one of --genus/--crosscaps")
    if args.genus is not None:
        return True, args.genus
    return False, args.crosscaps


def _parse_ends(specs):
    ends = []
    for spec in specs:
        kind, sep, depth = spec.partition(":")
        ends.append(EndDecoration(kind, int(depth) if sep else 1))
    return ends


def _build_object(args):
    name = args.id
    if name == "sphere":
        return sphere_cube()
    if name in ("torus-paper", "torus-32"):
        return frame_torus()
    if name in ("crosscap-r4", "crosscap-30"):
        return crosscap_z4()
    if name == "klein-bottle":
        return klein_bottle()
    if name == "closed-surface":
        orientable, count = _genus_or_crosscaps(args, name)
        return closed_surface(orientable, count)
    if name == "tree-of-life":
        return tree_of_life(args.depth)
    if name == "pruned-tree":
        return prune_and_decorate(tree_of_life(args.depth), prune=args.prune,
                                  handles=args.handles,
                                  crosscaps=args.crosscaps or 0,
                                  ends=_parse_ends(args.end))
    if name == "hyp-torus":
        return hyperbolic_torus_435()
    if name == "hyp-pants":
        return hyperbolic_pants_435()
    if name == "hyp-tree":
        return tree_of_life_435(args.depth)
    if name == "hyp-closed":
        return closed_orientable_435(args.genus if args.genus is not None
                                     else 1)
    if name == "h4-torus":
        return torus_4335()
    if name == "h4-pants":
        return pants_4335()
    if name == "h4-crosscap":
        return crosscap_abstract_34()
    if name == "h4-surface":
        orientable, count = _genus_or_crosscaps(args, name)
        return surface_4335(orientable, count, args.boundary_circles)
    raise ValueError(f"unknown catalogue id {name!r}")


BUILD_IDS = (
    "sphere", "torus-paper", "torus-32", "crosscap-r4", "crosscap-30",
    "klein-bottle", "closed-surface", "tree-spiral", "tree-of-life",
    "pruned-tree", "hyp-torus", "hyp-pants", "hyp-tree", "hyp-closed",
    "h4-torus", "h4-pants", "h4-crosscap", "h4-surface",
)


def _cmd_build(args):
    if args.id == "tree-spiral":
        tree = spiral_tree(args.depth)
        data = {
            "format": "plane_tree",
            "depth": tree.depth,
            "segments": sorted([a[0], a[1], b[0], b[1]]
                               for a, b in tree.segments),
            "leaves": sorted([x, y] for x, y in tree.leaves),
        }
        _write(args.output, json.dumps(data, sort_keys=True, indent=2) + "\n")
        return 0
    _write(args.output, dumps_complex(_build_object(args)))
    return 0


def _yesno(flag):
    return "yes" if flag else "no"


def _cmd_validate(args):
    report = validate_surface(_load(args.path))
    lines = [
        f"surface: {_yesno(report.is_surface)}",
        f"closed: {_yesno(report.is_closed)}",
        f"vertices: {report.vertex_count}",
        f"edges: {report.edge_count}",
        f"squares: {report.square_count}",
        f"euler characteristic: {report.euler_characteristic}",
    ]
    lines += [f"failure: {f}" for f in report.failures]
    _write(None, "\n".join(lines) + "\n")
    return 0 if report.is_surface else 1


def _cmd_classify(args):
    report = classify(_load(args.path))
    lines = [report.class_name]
    if report.is_surface:
        lines += [
            f"components: {len(report.components)}",
            f"euler characteristic: {report.euler_characteristic}",
            f"orientable: {_yesno(report.orientable)}",
            f"boundary circles: {report.boundary_circles}",
            f"closed: {_yesno(report.is_closed)}",
        ]
    else:
        lines += [f"failure: {f}" for f in report.failures]
    _write(None, "\n".join(lines) + "\n")
    return 0 if report.is_surface else 1


def _parse_cell(text):
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}")


def _cmd_sum(args):
    a = _load(args.first)
    b = _load(args.second)
    out = connected_sum_embedded(a, _parse_cell(args.face_a),
                                 b, _parse_cell(args.face_b), axis=args.axis)
    _write(args.output, dumps_complex(out))
    return 0


_DIM_NAMES = {0: "vertex", 1: "edge", 2: "square", 3: "3-cell", 4: "4-cell"}


def _cmd_stats(args):
    names = args.systems or sorted(CLAIMED_INCIDENCE)
    unknown = [n for n in names if n not in CLAIMED_INCIDENCE]
    if unknown:
        raise ValueError(f"unknown honeycomb {unknown[0]!r}; known: "
                         + ", ".join(sorted(CLAIMED_INCIDENCE)))
    lines = []
    for name in names:
        system = build_system(name)
        for d in sorted(CLAIMED_INCIDENCE[name]):
            computed = incidence_counts(system, d)
            claimed = CLAIMED_INCIDENCE[name][d]
            mark = "" if computed == claimed else "  DIFF"
            lines.append(
                f"{name} {_DIM_NAMES[d]}: computed "
                + " ".join(map(str, computed))
                + " | catalogued " + " ".join(map(str, claimed)) + mark)
    _write(None, "\n".join(lines) + "\n")
    return 0


def _cmd_export(args):
    obj = _load(args.path)
    if args.format == "json":
        text = dumps_complex(obj)
    elif args.format == "off":
        text = to_off(obj)
    else:
        text = to_obj(obj)
    _write(args.output, text)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gridforge",
        description="build, validate and classify gridded surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a catalogued surface")
    p.add_argument("id", choices=BUILD_IDS)
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--crosscaps", type=int, default=None)
    p.add_argument("--boundary-circles", type=int, default=0)
    p.add_argument("--prune", type=int, default=0)
    p.add_argument("--handles", type=int, default=0)
    p.add_argument("--end", action="append", default=[],
                   metavar="KIND[:LENGTH]",
                   help="truncated end for pruned-tree (cylinder, ladder "
                        "or crosscap_chain); repeatable")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("validate", help="check the surface conditions")
    p.add_argument("path")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="topological type of a complex")
    p.add_argument("path")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("sum", help="embedded connected sum of two complexes")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--face-a", required=True,
                   help="square of the first complex, e.g. 1,1,2")
    p.add_argument("--face-b", required=True)
    p.add_argument("--axis", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_sum)

    p = sub.add_parser("stats", help="incidence numbers vs the catalogue")
    p.add_argument("systems", nargs="*",
                   help="honeycombs to report on (default: all)")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("export", help="write OFF, OBJ or normalized JSON")
    p.add_argument("path")
    p.add_argument("--format", choices=("off", "obj", "json"),
                   default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_export)
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GridCollisionError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        for cell in exc.cells:
            print(f"  collision at {cell}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON at line {exc.lineno} column "
              f"{exc.colno}: {exc.msg}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
