"""``pbzlab`` command line: check, sat, con and verify-paper.

Exit codes: 0 success, 1 a check or suite failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from .algebra import TRIVIAL, FiniteAlgebra, Flavor, attach_brouwer, attach_involution, \
    classify, dense_and_t, sharp_elements
from .catalog import catalog
from .congruence import all_congruences, lattice_of
from .errors import PBZError
from .lattice import FiniteBoundedLattice, complemented_elements, length_of
from .terms import resolve_identity, satisfies

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


# -- AlgebraFile ----------------------------------------------------------------

def to_json(A: FiniteAlgebra) -> dict:
    """The AlgebraFile document for ``A``."""
    L = A.lattice
    brouwer = None
    if A.brouwer is not None:
        trivial = np.full(A.n, A.bottom)
        trivial[A.bottom] = A.top
        brouwer = TRIVIAL if np.array_equal(A.brouwer, trivial) else A.brouwer.tolist()
    return {
        "n": A.n,
        "bottom": A.bottom,
        "top": A.top,
        "covers": sorted([a, b] for a, b in L.covers()),
        "kleene": None if A.kleene is None else A.kleene.tolist(),
        "brouwer": brouwer,
        "labels": list(A.labels),
    }


def from_json(doc: dict) -> FiniteAlgebra:
    """Build and validate an algebra from an AlgebraFile document."""
    try:
        n, bottom, top = int(doc["n"]), int(doc["bottom"]), int(doc["top"])
        covers = [(int(a), int(b)) for a, b in doc["covers"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise PBZError(f"malformed algebra file: {exc}") from None
    L = FiniteBoundedLattice.from_covers(n, bottom, top, covers, doc.get("labels"))
    A = FiniteAlgebra(L)
    if doc.get("kleene") is not None:
        A = attach_involution(L, doc["kleene"])
    if doc.get("brouwer") is not None:
        A = attach_brouwer(A, doc["brouwer"])
    return A


def load(path: str | Path) -> FiniteAlgebra:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise PBZError(f"cannot read {path}: {exc}") from None
    return from_json(doc)


def save(A: FiniteAlgebra, path: str | Path) -> None:
    Path(path).write_text(json.dumps(to_json(A), indent=1) + "\n")


def _resolve(args) -> FiniteAlgebra:
    if args.algebra:
        return catalog(args.algebra)
    if not args.path:
        raise PBZError("give an algebra file or --algebra NAME")
    return load(args.path)


# -- commands -------------------------------------------------------------------

def _names(A: FiniteAlgebra, xs) -> list[str]:
    return [A.label(x) for x in sorted(xs)]


def check_report(A: FiniteAlgebra) -> dict:
    rep = classify(A).as_dict()
    out = {"n": A.n, "flavor": str(A.flavor), **rep}
    if A.kleene is not None:
        out["S"] = _names(A, sharp_elements(A))
    if A.brouwer is not None:
        dt = dense_and_t(A)
        out["D"] = _names(A, dt["D"])
        out["T"] = _names(A, dt["T"])
        out["length_T"] = length_of(A.lattice, dt["T"])
    out["complemented"] = _names(A, complemented_elements(A.lattice))
    return out


def cmd_check(args) -> int:
    report = check_report(_resolve(args))
    if args.json:
        print(json.dumps(report, indent=1))
        return EXIT_OK
    for key, value in report.items():
        if isinstance(value, bool) or value is None:
            value = {True: "true", False: "false", None: "-"}[value]
        elif isinstance(value, list):
            value = "{" + ", ".join(value) + "}" + f"  ({len(value)})"
        print(f"{key:24s} {value}")
    return EXIT_OK


def cmd_sat(args) -> int:
    A = _resolve(args)
    if (args.identity is None) == (args.id is None):
        raise PBZError("give exactly one of an identity string or --id NAME[:n]")
    ident = resolve_identity(args.id or args.identity)
    res = satisfies(A, ident)
    if args.json:
        print(json.dumps({"identity": str(ident), "holds": res.holds,
                          "witness": None if res.holds else res.witness_labels(A)}))
    elif res.holds:
        print(f"holds: {ident}")
    else:
        wit = ", ".join(f"{k}={v}" for k, v in res.witness_labels(A).items())
        print(f"fails: {ident}\nwitness: {wit}")
    return EXIT_OK if res.holds else EXIT_FAIL


def cmd_con(args) -> int:
    A = _resolve(args)
    flavor = Flavor.coerce(args.flavor) if args.flavor else A.flavor
    cons = all_congruences(A, flavor)
    L = lattice_of(cons)
    is_chain = bool((L.leq | L.leq.T).all())
    if args.json:
        print(json.dumps({"flavor": str(flavor), "count": len(cons), "chain": is_chain,
                          "congruences": [c.describe(A.labels) for c in cons]}, indent=1))
        return EXIT_OK
    print(f"{len(cons)} {flavor} congruences" + (" (a chain)" if is_chain else ""))
    for i, c in enumerate(cons):
        tag = "  Delta" if c.is_delta() else "  Nabla" if c.is_nabla() else ""
        print(f"  [{i}] {c.describe(A.labels)}{tag}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify
    start = time.perf_counter()
    results = verify.run(args.filter)
    if not results:
        print(f"warning: no rows match {args.filter!r}", file=sys.stderr)
        return EXIT_OK
    width = max(len(r.id) for r in results)
    for r in results:
        print(f"{r.status.upper():5s}  {r.id:{width}s}  [{r.cite}] {r.detail}")
    crit = verify.criteria_status(results)
    print()
    for c, ok in crit.items():
        print(f"criterion {c:2d}: {'PASS' if ok else 'FAIL'}  {verify.CRITERIA[c]}")
    counts = {s: sum(r.status == s for r in results)
              for s in ("pass", "fail", "xfail", "xpass", "error")}
    summary = ", ".join(f"{v} {k}" for k, v in counts.items() if v)
    print(f"\n{len(results)} rows: {summary} in {time.perf_counter() - start:.1f} s")
    hard = counts["fail"] + counts["xpass"] + counts["error"]
    if hard or (counts["xfail"] and not args.accept_errata):
        return EXIT_FAIL
    return EXIT_OK


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pbzlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_args(q):
        q.add_argument("path", nargs="?", help="AlgebraFile JSON")
        q.add_argument("--algebra", "-a", metavar="NAME", help="catalog name, e.g. GD:3")
        q.add_argument("--json", action="store_true", help="machine-readable output")

    q = sub.add_parser("check", help="classify an algebra")
    algebra_args(q)
    q.set_defaults(func=cmd_check)

    q = sub.add_parser("sat", help="check an identity")
    q.add_argument("--algebra", "-a", metavar="NAME", help="catalog name")
    q.add_argument("--file", "-f", dest="path", metavar="PATH", help="AlgebraFile JSON")
    q.add_argument("identity", nargs="?", help='e.g. "x ^ (y v z) = (x ^ y) v (x ^ z)"')
    q.add_argument("--id", metavar="NAME[:n]", help="named identity, e.g. SK or C:3")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_sat)

    q = sub.add_parser("con", help="list congruences")
    algebra_args(q)
    q.add_argument("--flavor", help="Lattice, BI or BZ (default: the algebra's own)")
    q.set_defaults(func=cmd_con)

    q = sub.add_parser("verify-paper", help="run the executable claim checks")
    q.add_argument("--filter", default=None, help="substring of row ids")
    q.add_argument("--accept-errata", action="store_true",
                   help="exit 0 when the only failures are documented errata")
    q.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:  # PBZError and table-shape errors alike
        msg, name = str(exc), type(exc).__name__
        print(f"error: {msg if msg.startswith(name) else f'{name}: {msg}'}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
