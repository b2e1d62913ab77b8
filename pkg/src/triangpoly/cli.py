"""Command-line front end.

Machine-readable JSON goes to stdout and a short human summary to stderr.
Exit codes: 0 success, 1 verification failure, 2 unreadable input,
3 enumeration cap exceeded, 4 signed polynomial requested for odd n,
5 input is not a closed orientable manifold.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from .complexes import (ChainComplex, NotOrientableError, algebraic_dual, betti_numbers,
                        chain_from_json, chain_to_json, from_facets)
from .embedding import (EmbeddingDatum, EmbeddingError, OddDimensionError, count_flat_subcomplexes,
                        datum_from_json, datum_to_json, dual_embedding, poly_P, poly_Pbar,
                        state_table)
from .fixtures import dumps, fixture_text
from .matroid import matroid_tutte, simplicial_matroid
from .pairing import build_embedding, intersection_summary
from .poly import canonical_string, evaluate, poly_to_json
from .statesum import DEFAULT_CAP_BITS, CapExceeded, default_jobs
from .tutte import simplicial_spanning_trees, tutte_homological
from . import verify as V

EXIT_VERIFY, EXIT_PARSE, EXIT_CAP, EXIT_ODD, EXIT_ORIENT = 1, 2, 3, 4, 5


class InputError(ValueError):
    """The input file is missing, not JSON, or fails schema validation."""


class Loaded:
    """A parsed input document with its provenance."""

    def __init__(self, source: str, raw: bytes, doc: dict):
        self.source = source
        self.raw = raw
        self.doc = doc

    @property
    def kind(self) -> str:
        if "Q" in self.doc or "Psi" in self.doc:
            return "C"
        if "facets" in self.doc:
            return "A"
        if "dims" in self.doc:
            return "B"
        raise InputError(f"{self.source}: not schema A (facets), B (dims) or C (Q, Psi, R)")

    def digest(self) -> str:
        return hashlib.sha256(self.raw).hexdigest()

    def complex(self) -> ChainComplex:
        try:
            if self.kind == "C":
                return datum_from_json(self.doc).complex
            return chain_from_json(self.doc)
        except InputError:
            raise
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{self.source}: {exc}") from exc

    def datum(self, *, flip: bool = False) -> EmbeddingDatum:
        if self.kind == "A":
            try:
                k = from_facets(self.doc["facets"])
            except (ValueError, TypeError) as exc:
                raise InputError(f"{self.source}: {exc}") from exc
            return build_embedding(k, flip_orientation=flip)
        if self.kind != "C":
            raise InputError(f"{self.source}: an embedding datum (schema C) or facet list is required")
        try:
            e = datum_from_json(self.doc)
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{self.source}: {exc}") from exc
        return e.flipped() if flip else e


def load(source: str) -> Loaded:
    """Read a file path, or a bundled fixture name such as ``torus7``."""
    path = Path(source)
    if path.is_file():
        raw = path.read_bytes()
    else:
        try:
            raw = fixture_text(source).encode()
        except FileNotFoundError:
            raise InputError(f"{source}: no such file or bundled fixture") from None
    try:
        doc = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{source}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top-level JSON value must be an object")
    loaded = Loaded(source, raw, doc)
    _ = loaded.kind
    return loaded


def _say(*lines):
    for line in lines:
        print(line, file=sys.stderr)


class Report:
    def __init__(self, command: str, inp: Loaded, flags: dict):
        self.data = {"command": command, "input": {"source": inp.source, "sha256": inp.digest()},
                     "flags": flags, "results": {}, "checks": [], "subsets": 0}
        self.t0 = time.perf_counter()

    def poly(self, name, p):
        self.data["results"][name] = poly_to_json(p)

    def value(self, name, v):
        self.data["results"][name] = v

    def checks(self, results):
        self.data["checks"].extend(r.to_json() for r in results)
        self.data["subsets"] = max([self.data["subsets"]] + [r.selectors for r in results])

    def emit(self):
        self.data["wall_time_s"] = round(time.perf_counter() - self.t0, 3)
        sys.stdout.write(json.dumps(self.data, sort_keys=True, indent=1) + "\n")


def _default_n(c: ChainComplex) -> int:
    return max(1, c.top // 2) if c.top >= 2 else 1


def cmd_tutte(a) -> int:
    inp = load(a.input)
    c = inp.complex()
    n = a.n if a.n is not None else _default_n(c)
    t = tutte_homological(c, n, cap_bits=a.cap, jobs=a.jobs, method=a.method)
    rep = Report("tutte", inp, {"n": n, "method": a.method})
    rep.poly("T", t)
    t00, t11 = evaluate(t, (0, 0)), evaluate(t, (1, 1))
    rep.value("T(0,0)", str(t00))
    rep.value("T(1,1)", str(t11))
    rep.data["subsets"] = int(t11)
    rep.emit()
    _say(f"T^{n} = {canonical_string(t)}", f"spanning-tree evaluation T(0,0) = {t00}",
         f"T(1,1) = {t11} spanning subcomplexes")
    return 0


def cmd_p(a) -> int:
    inp = load(a.input)
    e = inp.datum(flip=a.flip_orientation)
    table = state_table(e, cap_bits=a.cap, jobs=a.jobs)
    rep = Report("p", inp, {"pbar": a.pbar, "flip_orientation": a.flip_orientation})
    rep.data["subsets"] = table.total
    if a.pbar:
        p = poly_Pbar(e, table=table)
        rep.poly("Pbar", p)
        label = "Pbar"
    else:
        p = poly_P(e, table=table)
        rep.poly("P", p)
        label = "P"
    rep.emit()
    _say(f"{label} = {canonical_string(p)}")
    return 0


def cmd_pairing(a) -> int:
    inp = load(a.input)
    if inp.kind != "A":
        raise InputError(f"{inp.source}: pairing needs a facet list (schema A)")
    e = inp.datum(flip=a.flip_orientation)
    _write(a.output, dumps(datum_to_json(e)))
    s = intersection_summary(e)
    _say(f"r = {s['r']}", f"symmetry = {s['symmetry']}", f"|det Q| = {s['abs_det']}")
    return 0


def cmd_dualize(a) -> int:
    inp = load(a.input)
    if inp.kind == "C":
        e = dual_embedding(inp.datum())
        text = dumps(datum_to_json(e))
        c = e.complex
    else:
        c = algebraic_dual(inp.complex())
        text = dumps(chain_to_json(c))
    _write(a.output, text)
    _say(f"dual cell counts = {tuple(c.dims)}", f"betti = {betti_numbers(c)}")
    return 0


def _write(output, text):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(a) -> int:
    inp = load(a.input)
    kw = {"cap_bits": a.cap, "jobs": a.jobs}
    if a.suite == "sphere-t":
        results = V.sphere_suite(inp.complex(), **kw)
    elif a.suite == "matroid":
        c = inp.complex()
        results = V.matroid_suite(c, a.n if a.n is not None else _default_n(c), **kw)
    else:
        e = inp.datum()
        if a.suite == "p-duality":
            results = V.p_duality_suite(e, **kw)
        else:
            table = state_table(e, **kw)
            if a.suite == "identities":
                results = V.identity_suite(e, table=table, **kw)
            else:
                results = V.specialize_suite(e, table=table, **kw)
    rep = Report("verify", inp, {"suite": a.suite})
    rep.checks(results)
    rep.emit()
    _say(*(r.line() for r in results))
    return 0 if all(r.passed for r in results) else EXIT_VERIFY


def cmd_matroid_tutte(a) -> int:
    inp = load(a.input)
    c = inp.complex()
    n = a.n if a.n is not None else _default_n(c)
    t = matroid_tutte(simplicial_matroid(c, n), cap_bits=a.cap)
    rep = Report("matroid-tutte", inp, {"n": n})
    rep.poly("T_M", t)
    rep.data["subsets"] = 1 << c.dims[n]
    rep.emit()
    _say(f"T_M = {canonical_string(t)}")
    return 0


def cmd_count(a) -> int:
    inp = load(a.input)
    rep = Report("count", inp, {"what": a.what})
    if a.what == "spanning-trees":
        c = inp.complex()
        n = a.n if a.n is not None else _default_n(c)
        t = tutte_homological(c, n, cap_bits=a.cap, jobs=a.jobs)
        value = int(evaluate(t, (0, 0)))
        rep.data["flags"]["n"] = n
        rep.value("T(0,0)", str(value))
        if a.brute_force:
            brute = simplicial_spanning_trees(c, n, cap_bits=a.cap)
            rep.value("brute_force", str(brute))
            if brute != value:
                rep.emit()
                _say(f"T(0,0) = {value} but brute force found {brute}")
                return EXIT_VERIFY
        rep.data["subsets"] = 1 << c.dims[n]
        _say(f"spanning trees: T(0,0) = {value}")
    else:
        value = count_flat_subcomplexes(inp.datum(), cap_bits=a.cap, jobs=a.jobs)
        rep.value("P(1,1,0,1)", str(value))
        _say(f"selectors with s = 0: P(1,1,0,1) = {value}")
    rep.emit()
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP_BITS, metavar="BITS",
                        help="refuse to enumerate more than 2^BITS subsets (default %(default)s)")
    common.add_argument("--jobs", type=int, default=default_jobs(),
                        help="worker processes for enumeration (default: available CPUs)")

    p = argparse.ArgumentParser(prog="triangpoly", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tutte", parents=[common], help="homological Tutte polynomial T^n")
    s.add_argument("input")
    s.add_argument("--n", type=int)
    s.add_argument("--method", choices=("incremental", "naive"), default="incremental")
    s.set_defaults(func=cmd_tutte)

    s = sub.add_parser("p", parents=[common], help="embedded polynomial P (or the signed Pbar)")
    s.add_argument("input")
    s.add_argument("--pbar", action="store_true")
    s.add_argument("--flip-orientation", action="store_true")
    s.set_defaults(func=cmd_p)

    s = sub.add_parser("pairing", parents=[common], help="embedding datum of a triangulated manifold")
    s.add_argument("input")
    s.add_argument("--flip-orientation", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_pairing)

    s = sub.add_parser("dualize", parents=[common], help="algebraic dual complex or dual datum")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dualize)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite exhaustively")
    s.add_argument("suite", choices=V.SUITES)
    s.add_argument("input")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("matroid-tutte", parents=[common], help="Tutte polynomial of the simplicial matroid")
    s.add_argument("input")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_matroid_tutte)

    s = sub.add_parser("count", parents=[common], help="spanning trees T(0,0) or flat count P(1,1,0,1)")
    s.add_argument("what", choices=("spanning-trees", "flat"))
    s.add_argument("input")
    s.add_argument("--n", type=int)
    s.add_argument("--brute-force", action="store_true",
                   help="cross-check the spanning-tree count by direct enumeration")
    s.set_defaults(func=cmd_count)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cap is not None and args.cap < 0:
        args.cap = None
    try:
        return args.func(args)
    except CapExceeded as exc:
        _say(f"error: {exc}")
        return EXIT_CAP
    except OddDimensionError as exc:
        _say(f"error: {exc}")
        return EXIT_ODD
    except NotOrientableError as exc:
        _say(f"error: {exc}")
        return EXIT_ORIENT
    except EmbeddingError as exc:
        _say(f"error: {exc}")
        return _embedding_code(exc)
    except (InputError, ValueError) as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE


def _embedding_code(exc: EmbeddingError) -> int:
    # degenerate cup pairing or missing dual cycles mean the manifold claim was false
    msg = str(exc)
    return EXIT_ORIENT if ("closed" in msg or "manifold" in msg) else EXIT_PARSE
