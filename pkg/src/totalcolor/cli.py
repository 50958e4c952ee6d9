"""Command-line front end.

Exit codes: 0 success, 1 the checked property fails, 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fixtures
from .audit import DefinitionViolated, EnumerationCapExceeded, audit, verify_reducible
from .coloring import DEFAULT_ELEMENT_CAP, InstanceTooLarge, all_elements, chi_total, find_total_coloring, is_valid_total
from .discharge import NotPlaneOrTorus, discharge
from .embedding import EmbeddingError
from .formats import (FormatError, emit_coloring, emit_configuration, emit_graph, parse_coloring,
                      parse_configuration, parse_graph)

OK, FAILS, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str | None, what: str) -> str:
    if not path:
        raise InputError(f"--{what} is required")
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _need_kappa(args) -> int:
    if args.kappa is None:
        raise InputError("--kappa is required")
    if args.kappa < 1:
        raise InputError("--kappa must be positive")
    return args.kappa


def cmd_solve(args) -> tuple[int, str]:
    g, _ = parse_graph(_read(args.graph, "graph"))
    cap = args.cap if args.cap is not None else DEFAULT_ELEMENT_CAP
    if args.kappa is None:
        return OK, f"chi_total {chi_total(g, cap=cap)}\n"
    c = find_total_coloring(g, _need_kappa(args), cap=cap)
    if c is None:
        return FAILS, "NONE\n"
    return OK, emit_coloring(g, c)


def cmd_check(args) -> tuple[int, str]:
    g, _ = parse_graph(_read(args.graph, "graph"))
    c = parse_coloring(_read(args.coloring, "coloring"), g)
    if args.kappa is not None and args.kappa != c.kappa:
        raise InputError(f"--kappa {args.kappa} disagrees with file kappa {c.kappa}")
    missing = [x for x in all_elements(g) if x not in c]
    if missing:
        return FAILS, f"INVALID uncolored {len(missing)} elements\n"
    if not is_valid_total(g, c):
        return FAILS, "INVALID conflict\n"
    return OK, "VALID\n"


def cmd_discharge(args) -> tuple[int, str]:
    _, emb = parse_graph(_read(args.graph, "graph"), need_embedding=True)
    report = discharge(emb, _need_kappa(args))
    return (OK if report.ok else FAILS), report.to_json()


def cmd_audit(args) -> tuple[int, str]:
    g, _ = parse_graph(_read(args.graph, "graph"))
    report = audit(g, _need_kappa(args))
    return (FAILS if report.not_minimal else OK), report.to_json()


def cmd_reduce(args) -> tuple[int, str]:
    conf = parse_configuration(_read(args.config, "config"))
    kw = {} if args.cap is None else {"cap": args.cap}
    verdict = verify_reducible(conf, _need_kappa(args), **kw)
    lines = [str(verdict), f"colorings_checked {verdict.colorings_checked}"]
    if verdict.counter is not None:
        lines.append(f"counter {verdict.counter!r}")
    return (OK if verdict.reducible else FAILS), "\n".join(lines) + "\n"


def write_fixtures(out: Path) -> list[str]:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    embs = fixtures.named_embeddings()
    for name, g in sorted(fixtures.named_graphs().items()):
        (out / f"{name}.graph").write_text(emit_graph(g))
        written.append(f"{name}.graph")
    for name, emb in sorted(embs.items()):
        (out / f"{name}.emb.graph").write_text(emit_graph(emb.graph, emb))
        written.append(f"{name}.emb.graph")
    for name in sorted(fixtures.HOST_NAMES):
        g, kappa, conf = fixtures.lemma_host(name)
        (out / f"{name}.graph").write_text(emit_graph(g))
        written.append(f"{name}.graph")
    for name, (conf, kappa) in sorted(fixtures.lemma_configurations().items()):
        (out / f"{name}.k{kappa}.conf").write_text(emit_configuration(conf))
        written.append(f"{name}.k{kappa}.conf")
    return written


def cmd_fixtures(args) -> tuple[int, str]:
    if not args.outdir:
        raise InputError("an output directory is required")
    names = write_fixtures(Path(args.outdir))
    return OK, "".join(f"{n}\n" for n in names)


COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "discharge": cmd_discharge,
    "audit": cmd_audit,
    "reduce": cmd_reduce,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="totalcolor", description="Total coloring toolkit")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("outdir", nargs="?", help="output directory for 'fixtures'")
    p.add_argument("--kappa", type=int)
    p.add_argument("--graph")
    p.add_argument("--coloring")
    p.add_argument("--config")
    p.add_argument("--report", help="also write the output to this file")
    p.add_argument("--cap", type=int)
    p.add_argument("--seed", type=int, default=0, help="seed for randomized steps (default 0)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        code, text = COMMANDS[args.command](args)
    except (InputError, FormatError, EmbeddingError, NotPlaneOrTorus, DefinitionViolated,
            InstanceTooLarge, EnumerationCapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
