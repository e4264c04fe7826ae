"""Command-line interface.

Subcommands: decompose, homology, monodromy, index, orbit, census,
verify-paper, conjecture.  Global flags: --format json|text, --cap N,
--seed N (reserved for randomized drivers; recorded in reports).

Exit codes: 0 success, 1 failed checks or pipeline errors, 2 usage,
3 a cap was exceeded (orbit or coset enumeration).
"""

import argparse
import json
import sys

from .census import h2_origamis, orbit_partition
from .errors import (
    BasisUnavailableError,
    IndexCapExceeded,
    OrbitCapExceeded,
    OrigamiError,
)
from .geometry import Direction, decompose, primitive_directions
from .homology import (
    basis_from_directions,
    find_basis_directions,
    intersection_number,
    nontaut_basis,
    omega_class_loop,
    standard_basis,
)
from .monodromy import dehn_twist_action, kz_generators
from .origami import canonical_form, make_l_origami, orbit, parse_origami
from .sl2 import Mat2, contains_minus_identity, index_in_sl2

SCHEMA_VERSION = 1

COSET_CAP = 10000
ORBIT_CAP = 10**6

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _cap(args, default):
    return args.cap if args.cap is not None else default


def _report(command, args, **fields):
    rep = {"schema_version": SCHEMA_VERSION, "command": command}
    if getattr(args, "seed", None) is not None:
        rep["seed"] = args.seed
    rep.update(fields)
    return rep


def _emit(rep, args, text_renderer=None):
    if args.format == "json":
        print(json.dumps(rep, indent=2, sort_keys=False))
    elif text_renderer is not None:
        text_renderer(rep)
    else:
        print(json.dumps(rep, indent=2))


# ---------------------------------------------------------------------------
# argument parsing helpers
# ---------------------------------------------------------------------------

def _parse_direction(text):
    try:
        p, q = (int(x) for x in text.split(","))
        return Direction(p, q)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(
            "direction must look like 'p,q' with integers, got %r" % text
        )


def _parse_dirs(text):
    return [_parse_direction(chunk) for chunk in text.split(";") if chunk]


def _parse_mat(chunk):
    vals = [int(x) for x in chunk.split(",")]
    if len(vals) != 4:
        raise argparse.ArgumentTypeError(
            "matrix must be 'a,b,c,d' row-major, got %r" % chunk
        )
    return Mat2(*vals)


def _parse_gens(text):
    return [_parse_mat(chunk) for chunk in text.split(";") if chunk]


def _parse_pairs(text):
    out = []
    for chunk in text.split(";"):
        if not chunk:
            continue
        n, m = (int(x) for x in chunk.split(","))
        out.append((n, m))
    return out


def _load_origami(path):
    with open(path) as fh:
        return parse_origami(fh.read())


def _mat_entry(m):
    return [[m.a, m.b], [m.c, m.d]]


def _one_based(rows):
    return [[sq + 1 for sq in row] for row in rows]


# ---------------------------------------------------------------------------
# plain pipeline commands
# ---------------------------------------------------------------------------

def cmd_decompose(args):
    o = _load_origami(args.file)
    dec = decompose(o, args.dir)
    rep = _report(
        "decompose",
        args,
        degree=o.degree,
        direction=list(args.dir.vector),
        cylinders=[
            {
                "f": c.f,
                "c": c.c,
                "circumference": c.circumference,
                "height_rows": c.height_rows,
                "rows": _one_based(c.rows),
                "upper_boundary": list(c.upper_boundary),
            }
            for c in dec.cylinders
        ],
        saddle_connections=[
            {"holonomy": list(s.holonomy()), "upper_of": s.upper_of}
            for s in dec.saddle_connections
        ],
    )

    def render(rep):
        print("degree %d, direction (%d,%d)" % (o.degree, *args.dir.vector))
        for i, c in enumerate(rep["cylinders"]):
            print(
                "cylinder %d: f=%d c=%d circumference=%d height=%d rows=%s"
                % (i, c["f"], c["c"], c["circumference"], c["height_rows"],
                   c["rows"])
            )
        for i, s in enumerate(rep["saddle_connections"]):
            print(
                "saddle %d: holonomy (%d,%d), upper boundary of cylinder %s"
                % (i, s["holonomy"][0], s["holonomy"][1], s["upper_of"])
            )

    _emit(rep, args, render)
    return EXIT_OK


def _basis_for(o):
    try:
        return standard_basis(o)
    except BasisUnavailableError:
        d1, d2 = find_basis_directions(o)
        return basis_from_directions(o, d1, d2)


def cmd_homology(args):
    o = _load_origami(args.file)
    basis = _basis_for(o)
    nt = nontaut_basis(basis)
    rep = _report(
        "homology",
        args,
        degree=o.degree,
        basis_directions=[list(d.vector) for d in basis.directions],
        f_values=list(basis.f_values),
        gram=[list(r) for r in basis.gram],
        nontaut={"X": list(nt.x), "Y": list(nt.y)},
    )

    def render(rep):
        print("basis directions:", rep["basis_directions"],
              "f-values:", rep["f_values"])
        print("intersection matrix (rows/cols X1, X2, Y1, Y2):")
        for row in rep["gram"]:
            print("   %3d %3d %3d %3d" % tuple(row))
        print("non-tautological basis: X =", rep["nontaut"]["X"],
              " Y =", rep["nontaut"]["Y"])

    _emit(rep, args, render)
    return EXIT_OK


def cmd_monodromy(args):
    o = _load_origami(args.file)
    basis = _basis_for(o)
    gens = kz_generators(o, args.dirs, basis)
    rep = _report(
        "monodromy",
        args,
        degree=o.degree,
        directions=[list(d.vector) for d in args.dirs],
        matrices=[_mat_entry(m) for m in gens],
    )
    code = EXIT_OK
    try:
        cap = _cap(args, COSET_CAP)
        rep["index"] = index_in_sl2(gens, cap)
        rep["contains_minus_identity"] = contains_minus_identity(gens, cap)
    except IndexCapExceeded:
        rep["index"] = None
        rep["status"] = "index-exceeds-cap"
        code = EXIT_CAP

    def render(rep):
        for d, m in zip(rep["directions"], rep["matrices"]):
            print("direction (%d,%d): %s" % (d[0], d[1], m))
        print("index of generated subgroup:",
              rep["index"] if rep["index"] is not None else "exceeds cap")

    _emit(rep, args, render)
    return code


def cmd_index(args):
    rep = _report("index", args, generators=[_mat_entry(m) for m in args.gens])
    cap = _cap(args, COSET_CAP)
    try:
        idx = index_in_sl2(args.gens, cap)
    except IndexCapExceeded:
        print("index exceeds cap of %d live cosets" % cap, file=sys.stderr)
        return EXIT_CAP
    rep["index"] = idx
    rep["contains_minus_identity"] = contains_minus_identity(args.gens, cap)
    _emit(rep, args, lambda rep: print(rep["index"]))
    return EXIT_OK


def _l_shapes_in(degree, members):
    """(n, m) of every L-shape of this degree whose class is in the set."""
    shapes = []
    for n in range(2, degree):
        m = degree + 1 - n
        if m < 2:
            continue
        if canonical_form(make_l_origami(n, m)) in members:
            shapes.append((n, m))
    return shapes


def _l_labels(degree, members):
    return ["L(%d,%d)" % nm for nm in _l_shapes_in(degree, members)]


def cmd_orbit(args):
    o = _load_origami(args.file)
    cap = _cap(args, ORBIT_CAP)
    try:
        orb = orbit(o, cap)
    except OrbitCapExceeded:
        print("orbit exceeds cap of %d" % cap, file=sys.stderr)
        return EXIT_CAP
    rep = _report(
        "orbit",
        args,
        degree=o.degree,
        size=len(orb),
        l_shapes=_l_labels(o.degree, orb),
    )
    _emit(rep, args, lambda rep: print(
        "orbit size %d, L-shapes: %s" % (rep["size"], rep["l_shapes"])))
    return EXIT_OK


def cmd_census(args):
    d = args.degree
    if not 3 <= d <= 12:
        print("census degree must be between 3 and 12", file=sys.stderr)
        return EXIT_USAGE
    if d >= 10:
        print("census at degree %d enumerates large centralizer cosets; "
              "expect minutes" % d, file=sys.stderr)
    origamis = h2_origamis(d)
    cap = _cap(args, ORBIT_CAP)
    try:
        parts = orbit_partition(origamis, cap)
    except OrbitCapExceeded:
        print("an orbit exceeds cap of %d" % cap, file=sys.stderr)
        return EXIT_CAP
    orbits = []
    for part in sorted(parts, key=len):
        shapes = _l_shapes_in(d, part)
        family = None
        if d % 2 == 1 and shapes:
            family = "A" if shapes[0][0] % 2 == 0 else "B"
        orbits.append({
            "size": len(part),
            "l_shapes": ["L(%d,%d)" % nm for nm in shapes],
            "family": family,
        })
    rep = _report(
        "census",
        args,
        degree=d,
        count=len(origamis),
        n_orbits=len(parts),
        orbits=orbits,
    )

    def render(rep):
        print("degree %d: %d primitive H(2) origamis in %d orbit(s)"
              % (rep["degree"], rep["count"], rep["n_orbits"]))
        for orb in rep["orbits"]:
            fam = (" [%s]" % orb["family"]) if orb["family"] else ""
            print("  orbit of size %d%s: %s"
                  % (orb["size"], fam, ", ".join(orb["l_shapes"]) or "-"))

    _emit(rep, args, render)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification harness for the two L(2, k) families
# ---------------------------------------------------------------------------

def _family_case(n, odd):
    """Closed-form reference data for L(2, 2n) (odd degree) or L(2, 2n+1).

    Tables are keyed by (row, column) labels; rows are the basis curves
    plus the kernel combinations X, Y; entries are exact integers from
    the determinant sign rule.
    """
    if odd:
        return {
            "name": "L(2,%d)" % (2 * n),
            "lshape": (2, 2 * n),
            "dirs": (Direction(n, n + 1), Direction(0, 1)),
            "f_expect": ({2 * n - 1: 1, 2: 1}, {2 * n: 1, 1: 1}),
            "cols": (("r", 2 * n - 1), ("g", 2)),
            "cols2": (("Y1", 1), ("Y2", 2 * n)),
            "table1": {  # against the (n, n+1) cylinders (r, g)
                "X2": (2 * n - 1, 3),
                "X1": (n, 1),
                "X": (-1, 1),
                "Y1": (-(n - 1), -1),
                "Y2": (-((2 * n - 2) * n + 1), -(2 * n - 1)),
                "Y": (-1, 1),
            },
            "table2": {  # against the vertical cylinders (Y1, Y2)
                "X2": (1, 1),
                "X1": (0, 1),
                "X": (1, -1),
                "Y1": (0, 0),
                "Y2": (0, 0),
                "Y": (0, 0),
            },
            "matrices": (Mat2(2, 1, -1, 0), Mat2(1, 0, -1, 1)),
            "index": 1,
        }
    return {
        "name": "L(2,%d)" % (2 * n + 1),
        "lshape": (2, 2 * n + 1),
        "dirs": (Direction(2 * n + 1, 2 * n + 3), Direction(2 * n + 2, 2 * n + 1)),
        "f_expect": ({2 * n: 1, 1: 2}, {2 * n + 1: 1, 1: 1}),
        "cols": (("r", 2 * n), ("g", 1)),
        "cols2": (("m", 2 * n + 1), ("b", 1)),
        "table1": {  # against the (2n+1, 2n+3) cylinders (r, g)
            "X2": (4 * n, 3),
            "X1": (2 * n + 1, 1),
            "X": (-2, 1),
            "Y1": (-(2 * n - 1), -1),
            "Y2": (-((2 * n - 1) * (2 * n + 1) + 2), -2 * n),
            "Y": (-2, 1),
        },
        "table2": {  # against the (2n+2, 2n+1) cylinders (m, b)
            "X2": (4 * n + 1, 1),
            "X1": (2 * n, 1),
            "X": (1, -1),
            "Y1": (-(2 * n + 1), -1),
            "Y2": (-((2 * n + 1) ** 2), -(2 * n + 1)),
            "Y": (0, 0),
        },
        "matrices": (Mat2(3, 2, -2, -1), Mat2(1, 0, -1, 1)),
        "index": 3,
    }


def _check_family_case(n, odd, cap):
    """Run the pipeline on one family member and diff against the data."""
    case = _family_case(n, odd)
    o = make_l_origami(*case["lshape"])
    checks = []

    def add(name, expected, got):
        checks.append(
            {"check": name, "expected": expected, "got": got,
             "ok": expected == got}
        )

    decs = [decompose(o, d) for d in case["dirs"]]
    for d, dec, expect in zip(case["dirs"], decs, case["f_expect"]):
        got = {c.f: c.c for c in dec.cylinders}
        add("f/c in direction (%d,%d)" % d.vector, expect, got)

    basis = standard_basis(o)
    nt = nontaut_basis(basis)
    rows = {
        "X1": basis.loops[0],
        "X2": basis.loops[1],
        "Y1": basis.loops[2],
        "Y2": basis.loops[3],
    }

    def omega_row(label, loop):
        if label in rows:
            return intersection_number(rows[label], loop)
        coeffs = nt.x if label == "X" else nt.y
        return omega_class_loop(basis, coeffs, loop)

    def cores_for(dec, cols):
        by_f = {c.f: c for c in dec.cylinders}
        return tuple(by_f[f].core for _, f in cols)

    # the second table of the odd family pairs against the vertical basis
    # curves themselves; everywhere else the columns are cylinder cores
    first_cols = cores_for(decs[0], case["cols"])
    second_cols = (
        (basis.loops[2], basis.loops[3]) if odd
        else cores_for(decs[1], case["cols2"])
    )
    for table, cols, col_loops in (
        ("table1", case["cols"], first_cols),
        ("table2", case["cols2"], second_cols),
    ):
        for row_label, expected in case[table].items():
            got = tuple(omega_row(row_label, loop) for loop in col_loops)
            add("omega(%s, %s/%s) [%s, n=%d]"
                % (row_label, cols[0][0], cols[1][0], table, n),
                list(expected), list(got))

    gens = [dehn_twist_action(o, d, basis) for d in case["dirs"]]
    for d, m, expect in zip(case["dirs"], gens, case["matrices"]):
        add("twist matrix (%d,%d)" % d.vector, _mat_entry(expect), _mat_entry(m))

    try:
        idx = index_in_sl2(gens, cap)
    except IndexCapExceeded:
        idx = None
    add("index", case["index"], idx)

    return {
        "case": case["name"],
        "n": n,
        "family": "odd-degree" if odd else "even-degree",
        "checks": checks,
        "ok": all(c["ok"] for c in checks),
    }


def cmd_verify_paper(args):
    if args.n_max < 1:
        print("--n-max must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    cases = []
    for n in range(1, args.n_max + 1):
        for odd in (True, False):
            try:
                cases.append(_check_family_case(n, odd, _cap(args, COSET_CAP)))
            except OrigamiError as exc:
                cases.append(
                    {"case": "n=%d %s" % (n, "odd" if odd else "even"),
                     "error": str(exc), "ok": False, "checks": []}
                )
    ok = all(c["ok"] for c in cases)
    rep = _report("verify-paper", args, n_max=args.n_max, ok=ok, cases=cases)

    def render(rep):
        for case in rep["cases"]:
            status = "ok" if case["ok"] else "FAILED"
            print("%s  [%s]" % (case["case"], status))
            for c in case.get("checks", ()):
                mark = " " if c["ok"] else "!"
                print("  %s %-46s expected %-28r got %r"
                      % (mark, c["check"], c["expected"], c["got"]))
            if "error" in case:
                print("  ! error: %s" % case["error"])
        print("verify-paper:", "all checks passed" if rep["ok"]
              else "MISMATCHES FOUND")

    _emit(rep, args, render)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_conjecture(args):
    cases = []
    ok = True
    for n, m in args.reps:
        entry = {"case": "L(%d,%d)" % (n, m)}
        if n % 2 == 0 or m % 2 == 0 or n < 3 or m < 3:
            entry["error"] = "representatives must have n, m odd and >= 3"
            entry["ok"] = False
            ok = False
            cases.append(entry)
            continue
        try:
            o = make_l_origami(n, m)
            basis = standard_basis(o)
            dirs = primitive_directions(args.max_dir_sum)
            gens = [dehn_twist_action(o, d, basis) for d in dirs]
            try:
                idx = index_in_sl2(gens, _cap(args, COSET_CAP))
                entry["index"] = idx
            except IndexCapExceeded:
                entry["index"] = None
                entry["status"] = "index-exceeds-cap"
            entry["directions"] = [list(d.vector) for d in dirs]
            entry["matches_conjecture"] = entry["index"] == 3
            entry["ok"] = True
            if entry["index"] != 3:
                print(
                    "NOTE: L(%d,%d) reports index %r, conjectured 3"
                    % (n, m, entry["index"]),
                    file=sys.stderr,
                )
        except OrigamiError as exc:
            entry["error"] = str(exc)
            entry["ok"] = False
            ok = False
        cases.append(entry)
    rep = _report("conjecture", args, cases=cases)

    def render(rep):
        for case in rep["cases"]:
            if "index" in case:
                flag = "" if case.get("matches_conjecture") else "  <-- differs!"
                print("%s: index %r (conjectured 3)%s"
                      % (case["case"], case["index"], flag))
            else:
                print("%s: error %s" % (case["case"], case.get("error")))

    _emit(rep, args, render)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="origamikz",
        description="Cylinder decompositions, multitwist homology actions "
        "and monodromy indices for square-tiled surfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap", type=int, default=None,
                        help="live-coset / orbit cap (defaults: 10000 for "
                        "coset enumeration, 10^6 for orbits)")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized drivers (recorded in reports)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common],
                       help="cylinder decomposition in a direction")
    p.add_argument("file")
    p.add_argument("--dir", type=_parse_direction, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("homology", parents=[common],
                       help="intersection matrix and kernel basis")
    p.add_argument("file")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("monodromy", parents=[common],
                       help="multitwist matrices and the index they generate")
    p.add_argument("file")
    p.add_argument("--dirs", type=_parse_dirs, required=True)
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("index", parents=[common],
                       help="index of a matrix-generated subgroup of SL2(Z)")
    p.add_argument("--gens", type=_parse_gens, required=True)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("orbit", parents=[common],
                       help="SL2(Z) orbit of an origami")
    p.add_argument("file")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("census", parents=[common],
                       help="all primitive H(2) origamis of one degree")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="check the L(2,k) families against their "
                       "closed-form cylinder, table, matrix and index values")
    p.add_argument("--n-max", type=int, default=5)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("conjecture", parents=[common],
                       help="report monodromy indices for odd-odd L-shapes "
                       "(exploratory; the expected value 3 is unproven)")
    p.add_argument("--reps", type=_parse_pairs, default=[(3, 3), (3, 5), (5, 5)])
    p.add_argument("--max-dir-sum", type=int, default=10,
                   help="use twist directions with |p|+|q| up to this bound "
                   "(the generated subgroup only grows with it)")
    p.set_defaults(func=cmd_conjecture)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (OSError, ValueError, OrigamiError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
