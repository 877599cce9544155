"""Command line interface: file ingestion, subcommand dispatch, JSON reports.

Input formats are whitespace-insensitive token streams with ``#`` line
comments; all integers are decimal.  The schemas:

Ring file::

    modulus 2
    rank 4
    labels E11 E12 E21 E22      # optional, exactly rank names
    constants
    <rank^3 residues, row-major over (i, j, k)>

Idempotent-set file::

    ring <path relative to this file>
    idempotent <rank residues>   # one line per candidate

Category file (composition entries may appear in any order; omitted pairs
mean undefined)::

    objects 2
    morphisms 3
    arrow 0 0      # one per morphism: dom cod
    arrow 1 1
    arrow 0 1
    identity 0 1   # one identity morphism index per object
    compose 2 0 2  # g h gh
    ...

Grading file::

    ring <path>
    category <path>
    component <morphism> <generator count>
    <generator count rows of rank residues>
    ...

System file::

    category <path>
    object <index> ring <path>   # one per object
    map <morphism>
    <rank x rank residues, row-major>
    ...

Every invocation prints one JSON report to standard output (suppress the
timings block with --no-timings for byte-identical reruns).  Exit codes:
0 all verdicts positive, 1 a checked property is false, 2 malformed input or
a validation error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from . import corpus
from . import finring as fr
from . import graded as gr
from . import idempotents as idem
from . import skewalg as sk
from . import smallcat as cat
from . import verify
from .errors import ParseError, WorkbenchError


# ---------------------------------------------------------------------------
# tokenizer


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


class TokenStream:
    def __init__(self, text: str, path: str = "<input>"):
        self.path = path
        self.tokens: list[Token] = []
        for ln, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0]
            col = 1
            for piece in body.split():
                col = body.index(piece, col - 1) + 1
                self.tokens.append(Token(piece, ln, col))
                col += len(piece)
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else Token("", 1, 1)
            raise ParseError(f"unexpected end of file, expected {what}", last.line, last.column)
        self.pos += 1
        return tok

    def expect(self, keyword: str) -> Token:
        tok = self.next(f"keyword {keyword!r}")
        if tok.text != keyword:
            raise ParseError(f"expected {keyword!r}, found {tok.text!r}", tok.line, tok.column)
        return tok

    def integer(self, what: str) -> int:
        tok = self.next(what)
        try:
            return int(tok.text)
        except ValueError:
            raise ParseError(f"expected integer {what}, found {tok.text!r}", tok.line, tok.column)

    def integer_in(self, what: str, low: int, high: int) -> int:
        tok = self.peek()
        value = self.integer(what)
        if not low <= value < high:
            raise ParseError(
                f"{what} {value} out of range [{low}, {high})", tok.line, tok.column
            )
        return value

    def done(self) -> bool:
        return self.pos >= len(self.tokens)


# ---------------------------------------------------------------------------
# parsers


def parse_ring_file(path: str | Path) -> fr.FiniteRing:
    path = Path(path)
    ts = TokenStream(path.read_text(), str(path))
    ts.expect("modulus")
    modulus = ts.integer("modulus")
    ts.expect("rank")
    rank = ts.integer("rank")
    labels = None
    tok = ts.peek()
    if tok and tok.text == "labels":
        ts.expect("labels")
        labels = [ts.next(f"label {i}").text for i in range(rank)]
    ts.expect("constants")
    flat = [ts.integer(f"constant {i}") for i in range(rank * rank * rank)]
    if not ts.done():
        tok = ts.peek()
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.column)
    sc = np.asarray(flat, dtype=np.int64).reshape(rank, rank, rank)
    return fr.make_ring(modulus, rank, sc, labels)


def parse_idempotent_file(path: str | Path) -> tuple[fr.FiniteRing, list[fr.RingElement]]:
    path = Path(path)
    ts = TokenStream(path.read_text(), str(path))
    ts.expect("ring")
    ring_path = ts.next("ring path").text
    ring = parse_ring_file(path.parent / ring_path)
    elements = []
    while not ts.done():
        ts.expect("idempotent")
        coords = [ts.integer(f"coordinate {i}") for i in range(ring.rank)]
        elements.append(ring.element(coords))
    return ring, elements


def parse_category_file(path: str | Path) -> cat.SmallCategory:
    path = Path(path)
    ts = TokenStream(path.read_text(), str(path))
    ts.expect("objects")
    p = ts.integer("object count")
    ts.expect("morphisms")
    q = ts.integer("morphism count")
    dom, cod = [], []
    for g in range(q):
        ts.expect("arrow")
        dom.append(ts.integer_in(f"dom of morphism {g}", 0, p))
        cod.append(ts.integer_in(f"cod of morphism {g}", 0, p))
    ts.expect("identity")
    identity = [ts.integer_in(f"identity of object {a}", 0, q) for a in range(p)]
    table = np.full((q, q), cat.UNDEFINED, dtype=np.int64)
    while not ts.done():
        ts.expect("compose")
        g = ts.integer_in("composition row", 0, q)
        h = ts.integer_in("composition column", 0, q)
        gh = ts.integer_in("composite", 0, q)
        table[g, h] = gh
    return cat.make_category(p, dom, cod, identity, table)


def parse_grading_file(path: str | Path) -> gr.Grading:
    path = Path(path)
    ts = TokenStream(path.read_text(), str(path))
    ts.expect("ring")
    ring = parse_ring_file(path.parent / ts.next("ring path").text)
    ts.expect("category")
    category = parse_category_file(path.parent / ts.next("category path").text)
    components: dict[int, fr.AdditiveSubgroup] = {}
    while not ts.done():
        ts.expect("component")
        g = ts.integer_in("morphism index", 0, category.morphism_count)
        count = ts.integer("generator count")
        rows = []
        for r in range(count):
            rows.append([ts.integer(f"coordinate {i}") for i in range(ring.rank)])
        components[g] = ring.span(np.asarray(rows, dtype=np.int64).reshape(count, ring.rank))
    for g in range(category.morphism_count):
        components.setdefault(g, ring.zero_subgroup())
    return gr.attach_grading(ring, category, components)


def parse_system_file(path: str | Path) -> sk.SkewCategorySystem:
    path = Path(path)
    ts = TokenStream(path.read_text(), str(path))
    ts.expect("category")
    category = parse_category_file(path.parent / ts.next("category path").text)
    rings: dict[int, fr.FiniteRing] = {}
    while True:
        tok = ts.peek()
        if tok is None or tok.text != "object":
            break
        ts.expect("object")
        a = ts.integer_in("object index", 0, category.object_count)
        ts.expect("ring")
        rings[a] = parse_ring_file(path.parent / ts.next("ring path").text)
    missing = [a for a in range(category.object_count) if a not in rings]
    if missing:
        raise ParseError(f"object rings missing for objects {missing}", 1, 1)
    maps: dict[int, np.ndarray] = {}
    while not ts.done():
        ts.expect("map")
        g = ts.integer_in("morphism index", 0, category.morphism_count)
        nd = rings[category.dom[g]].rank
        nc = rings[category.cod[g]].rank
        flat = [ts.integer(f"entry {i}") for i in range(nd * nc)]
        maps[g] = np.asarray(flat, dtype=np.int64).reshape(nd, nc)
    return sk.validate_system(category, rings, maps)


def parse_instance(path: str | Path):
    """Sniff the leading keyword and dispatch to the right parser."""
    text = Path(path).read_text()
    ts = TokenStream(text, str(path))
    tok = ts.peek()
    if tok is None:
        raise ParseError("empty input file", 1, 1)
    head = tok.text
    if head == "modulus":
        return parse_ring_file(path)
    if head == "objects":
        return parse_category_file(path)
    if head == "ring":
        second = ts.tokens[2].text if len(ts.tokens) > 2 else ""
        if second == "category":
            return parse_grading_file(path)
        return parse_idempotent_file(path)
    if head == "category":
        return parse_system_file(path)
    raise ParseError(f"unrecognized leading keyword {tok.text!r}", tok.line, tok.column)


# ---------------------------------------------------------------------------
# reports


def _digest(path: str | Path) -> dict:
    data = Path(path).read_bytes()
    return {"path": str(path), "sha256": hashlib.sha256(data).hexdigest()}


def _coords(x) -> list[int]:
    return [int(c) for c in (x.coords if hasattr(x, "coords") else x)]


class Reporter:
    def __init__(self, command: str, args):
        self.report: dict = {
            "command": command,
            "tool": {"name": "ringbench", "version": __version__},
            "inputs": [],
            "verdicts": {},
            "witnesses": [],
        }
        self.quiet = getattr(args, "quiet", False)
        self.timings = not getattr(args, "no_timings", False)
        self.start = time.perf_counter()

    def add_input(self, path) -> None:
        self.report["inputs"].append(_digest(path))

    def verdict(self, key: str, value) -> None:
        self.report["verdicts"][key] = value

    def witness(self, **fields) -> None:
        self.report["witnesses"].append(fields)

    def info(self, key: str, value) -> None:
        self.report[key] = value

    def emit(self) -> int:
        if self.timings:
            self.report["timings"] = {
                "total_seconds": round(time.perf_counter() - self.start, 6)
            }
        verdicts = self.report["verdicts"]
        ok = all(v is not False for v in verdicts.values())
        if self.quiet:
            for key, value in verdicts.items():
                print(f"{key} {str(value).lower()}")
        else:
            print(json.dumps(self.report, indent=2, default=str))
        return 0 if ok else 1


def _emit_error(command: str, exc: Exception, quiet: bool) -> int:
    payload = {
        "command": command,
        "tool": {"name": "ringbench", "version": __version__},
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    if isinstance(exc, ParseError):
        payload["error"]["line"] = exc.line
        payload["error"]["column"] = exc.column
    if quiet:
        print(f"error {type(exc).__name__}", file=sys.stdout)
    else:
        print(json.dumps(payload, indent=2))
    return 2


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check_ring(args) -> int:
    rep = Reporter("check-ring", args)
    ring = parse_ring_file(args.ring)
    rep.add_input(args.ring)
    rep.verdict("associative", True)
    one = fr.find_identity(ring)
    rep.info("ring", {"modulus": ring.modulus, "rank": ring.rank, "order": ring.order})
    rep.info("unital", one is not None)
    if one is not None:
        rep.info("identity", _coords(one))
    return rep.emit()


def _cmd_peirce(args) -> int:
    rep = Reporter("peirce", args)
    ring, candidates = parse_idempotent_file(args.idempotents)
    rep.add_input(args.idempotents)
    iset = idem.validate_complete_set(ring, candidates)
    table = idem.peirce_table(iset)
    rep.verdict("complete_set", True)
    rep.info(
        "component_orders",
        [[sub.order for sub in row] for row in table.components],
    )
    rep.info("corner_orders", [c.ring.order for c in table.corners])
    return rep.emit()


def _cmd_check_strong(args) -> int:
    rep = Reporter("check-strong", args)
    ring, candidates = parse_idempotent_file(args.idempotents)
    rep.add_input(args.idempotents)
    iset = idem.validate_complete_set(ring, candidates)
    table = idem.peirce_table(iset)
    report = idem.strong_condition_report(table)
    rep.verdict("condition1", report.condition1)
    rep.verdict("condition2", report.condition2)
    rep.verdict("condition3", report.condition3)
    rep.verdict("agree", report.agree)
    for i, witness in enumerate((report.witness1, report.witness2, report.witness3), 1):
        if witness is not None:
            rep.witness(condition=i, indices=list(witness[0]), reason=witness[1])
    return rep.emit()


def _cmd_ideal_lattice(args) -> int:
    rep = Reporter("ideal-lattice", args)
    ring = parse_ring_file(args.ring)
    rep.add_input(args.ring)
    lattice = fr.enumerate_one_sided_ideals(ring, args.side, args.max_lattice)
    rep.verdict("enumerated", True)
    rep.info("size", lattice.size)
    rep.info("height", lattice.height)
    rep.info("ideal_orders", [i.order for i in lattice.ideals])
    rep.info("cover_relation", [list(row) for row in lattice.cover_relation])
    return rep.emit()


def _cmd_check_category(args) -> int:
    rep = Reporter("check-category", args)
    category = parse_category_file(args.category)
    rep.add_input(args.category)
    rep.verdict("valid", True)
    report = cat.homset_strong_report(category)
    rep.verdict("agree", report.agree)
    rep.info("homset_strong", report.strong)
    gcheck = cat.is_groupoid(category)
    rep.info("groupoid", gcheck.is_groupoid)
    fin = cat.finiteness_report(category)
    rep.info(
        "finiteness",
        {
            "objects": fin.object_count,
            "morphisms": fin.morphism_count,
            "endo_sizes": list(fin.endo_sizes),
            "bound_satisfied": fin.bound_satisfied,
        },
    )
    for i, witness in enumerate((report.witness1, report.witness2, report.witness3), 1):
        if witness is not None:
            rep.witness(condition=i, objects=list(witness[0]), reason=witness[1])
    return rep.emit()


def _cmd_build_mx(args) -> int:
    rep = Reporter("build-mx", args)
    if args.monoid in corpus.MONOID_TABLES:
        table = corpus.MONOID_TABLES[args.monoid]
    else:
        raise ParseError(
            f"unknown monoid {args.monoid!r}; known: {', '.join(sorted(corpus.MONOID_TABLES))}",
            1,
            1,
        )
    category = cat.build_MX(table, args.size)
    rep.verdict("valid", True)
    rep.info("objects", category.object_count)
    rep.info("morphisms", category.morphism_count)
    rep.info("homset_strong", cat.homset_strong_report(category).strong)
    rep.info("groupoid", cat.is_groupoid(category).is_groupoid)
    if args.save:
        lines = [
            f"objects {category.object_count}",
            f"morphisms {category.morphism_count}",
        ]
        for g in range(category.morphism_count):
            lines.append(f"arrow {category.dom[g]} {category.cod[g]}")
        lines.append("identity " + " ".join(str(e) for e in category.identity))
        for g in range(category.morphism_count):
            for h in range(category.morphism_count):
                gh = int(category.compose[g, h])
                if gh != cat.UNDEFINED:
                    lines.append(f"compose {g} {h} {gh}")
        Path(args.save).write_text("\n".join(lines) + "\n")
        rep.info("saved", str(args.save))
    return rep.emit()


def _cmd_check_grading(args) -> int:
    rep = Reporter("check-grading", args)
    grading = parse_grading_file(args.grading)
    rep.add_input(args.grading)
    rep.verdict("valid", True)
    flags = gr.compute_flags(grading)
    rep.verdict("object_unital", flags.object_unital)
    rep.info("strongly_graded", flags.strongly_graded)
    if flags.object_unital:
        ok, witness = gr.corner_identity_check(grading)
        rep.verdict("corner_identity", ok)
        if witness is not None:
            rep.witness(objects=list(witness[0]), reason="sandwich law fails")
    if flags.homset_strongly_graded is not None:
        rep.verdict("homset_strongly_graded", flags.homset_strongly_graded)
        rep.verdict("conditions_agree", flags.homset_report.agree)
    return rep.emit()


def _cmd_build_skew(args) -> int:
    rep = Reporter("build-skew", args)
    system = parse_system_file(args.system)
    rep.add_input(args.system)
    algebra = sk.build_skew_algebra(system)
    rep.verdict("system_valid", True)
    rep.verdict("strongly_graded", algebra.strongly_graded)
    rep.verdict("object_unital", algebra.object_unital)
    record = sk.strong_idempotent_equivalence_check(algebra)
    rep.verdict("strong_equivalence_agree", record.agree)
    rep.info(
        "algebra",
        {"modulus": algebra.ring.modulus, "rank": algebra.ring.rank, "order": algebra.ring.order},
    )
    rep.info("idempotents_strong", record.idempotents_strong)
    rep.info("category_homset_strong", record.category_homset_strong)
    return rep.emit()


def _cmd_verify_prop(args) -> int:
    rep = Reporter("verify-prop", args)
    seed = None
    env_seed = os.environ.get("WORKBENCH_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    result = verify.run_check(args.name, seed)
    rep.verdict(result.name, result.ok)
    rep.info("checked", result.checked)
    for failure in result.failures:
        rep.witness(failure=failure)
    return rep.emit()


def _cmd_gen_suite(args) -> int:
    rep = Reporter("gen-suite", args)
    seed = None
    env_seed = os.environ.get("WORKBENCH_SEED")
    if env_seed is not None:
        seed = int(env_seed)
    instances = corpus.generate_suite(args.name, seed)
    rep.verdict("generated", True)
    rep.info("suite", args.name)
    rep.info("count", len(instances))
    rep.info("instances", [getattr(inst, "name", repr(inst)) for inst in instances])
    return rep.emit()


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringbench",
        description="Finite-scale checks for rings with enough idempotents, "
        "category gradings, and skew category algebras.",
    )
    parser.add_argument("--quiet", action="store_true", help="emit verdict lines only")
    parser.add_argument(
        "--no-timings", action="store_true", help="omit the timings block for reproducible output"
    )
    parser.add_argument(
        "--max-lattice",
        type=int,
        default=fr.DEFAULT_LATTICE_CAP,
        help="working-set cap for ideal enumeration",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-ring", help="validate a ring file")
    s.add_argument("ring")
    s.set_defaults(func=_cmd_check_ring)

    s = sub.add_parser("peirce", help="validate an idempotent set and compute its components")
    s.add_argument("idempotents")
    s.set_defaults(func=_cmd_peirce)

    s = sub.add_parser("check-strong", help="evaluate the three strength conditions")
    s.add_argument("idempotents")
    s.set_defaults(func=_cmd_check_strong)

    s = sub.add_parser("ideal-lattice", help="enumerate all one-sided ideals")
    s.add_argument("ring")
    s.add_argument("--side", choices=["left", "right"], default="left")
    s.set_defaults(func=_cmd_ideal_lattice)

    s = sub.add_parser("check-category", help="validate a category file and report its checks")
    s.add_argument("category")
    s.set_defaults(func=_cmd_check_category)

    s = sub.add_parser("build-mx", help="build the monoid-times-square category")
    s.add_argument("monoid", help="named monoid table, e.g. c2 or bool2")
    s.add_argument("size", type=int)
    s.add_argument("--save", help="write the category file here")
    s.set_defaults(func=_cmd_build_mx)

    s = sub.add_parser("check-grading", help="validate a grading file and its predicates")
    s.add_argument("grading")
    s.set_defaults(func=_cmd_check_grading)

    s = sub.add_parser("build-skew", help="validate a system file and build its algebra")
    s.add_argument("system")
    s.set_defaults(func=_cmd_build_skew)

    s = sub.add_parser("verify-prop", help="run one named verification suite")
    s.add_argument("name", choices=sorted(verify.PROP_CHECKS))
    s.set_defaults(func=_cmd_verify_prop)

    s = sub.add_parser("gen-suite", help="emit a suite manifest")
    s.add_argument("name", choices=corpus.available_suites())
    s.set_defaults(func=_cmd_gen_suite)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        return _emit_error(args.command, exc, args.quiet)
    except WorkbenchError as exc:
        return _emit_error(args.command, exc, args.quiet)
    except FileNotFoundError as exc:
        return _emit_error(args.command, ParseError(str(exc)), args.quiet)


if __name__ == "__main__":
    sys.exit(main())
