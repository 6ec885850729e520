"""Command-line front end.

Exit status 0 means every check passed, 1 means checks ran and produced
a witness against something, and 2 means the command could not run
(bad flags, unreadable or malformed files).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import io
from .algebra import EffectAlgebra, MalformedTable, check_basic_laws, missing_join, validate_effect_axioms
from .equational import (
    SUITE_NAMES,
    UnknownSuite,
    builtin_suite,
    check_quasiidentity,
    parse_identity,
    parse_identity_file,
    parse_quasi,
    semantic_consequence,
)
from .implication import (
    ImplicationTable,
    natural_implication_table,
    sasaki_implication_table,
    set_implication_table,
)
from .proofs import Bound, check_derivation, corpus, search_proof, soundness_audit, write_corpus
from .proofs.checker import Checker
from .terms import ParseError, format_term, parse_term
from .transforms import (
    EIA,
    LEIA,
    NotAnImplicationAlgebra,
    SetValuedNotRoundTrippable,
    effect_to_implication,
    implication_to_effect,
    round_trip_check,
    validate_implication_axioms,
)

OK, FOUND, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _labeller(names):
    return (lambda v: names[v]) if names else str


def _show_set(cell, lab) -> str:
    return lab(cell[0]) if len(cell) == 1 else "{" + ",".join(lab(v) for v in cell) + "}"


def format_effect(E: EffectAlgebra) -> str:
    lab = _labeller(E.names)
    n = E.size
    width = max(3, *(len(lab(x)) for x in range(n))) + 1
    head = "+".rjust(width) + "".join(lab(y).rjust(width) for y in range(n))
    rows = [head]
    for x in range(n):
        cells = ["-" if E.plus[x][y] is None else lab(E.plus[x][y]) for y in range(n)]
        rows.append(lab(x).rjust(width) + "".join(c.rjust(width) for c in cells))
    rows.append("'  " + "  ".join(f"{lab(x)}'={lab(E.comp[x])}" for x in range(n)))
    return "\n".join(rows)


def format_table(T: ImplicationTable, names=None, symbol: str = "->") -> str:
    lab = _labeller(names)
    n = T.size
    cells = [[_show_set(T.cell(x, y), lab) for y in range(n)] for x in range(n)]
    width = max(len(symbol), *(len(lab(x)) for x in range(n)), *(len(c) for row in cells for c in row)) + 1
    rows = [symbol.rjust(width) + "".join(lab(y).rjust(width) for y in range(n))]
    for x in range(n):
        rows.append(lab(x).rjust(width) + "".join(c.rjust(width) for c in cells[x]))
    return "\n".join(rows)


def _as_table(model) -> ImplicationTable:
    return effect_to_implication(model) if isinstance(model, EffectAlgebra) else model


def _non_lattice_note(E: EffectAlgebra) -> str:
    x, y = missing_join(E)
    lab = _labeller(E.names)
    return f"not lattice-ordered: {lab(x)} and {lab(y)} have no least upper bound"


# -- subcommands ---------------------------------------------------------


def cmd_validate(args) -> int:
    model, _ = io.load_model(args.model)
    if not isinstance(model, EffectAlgebra):
        raise UsageError("validate expects an effect algebra (.ea.json)")
    axioms = validate_effect_axioms(model)
    basic = check_basic_laws(model)
    print(f"E1-E4: {'pass' if axioms.ok else 'FAIL'}; basic laws: {'pass' if basic.ok else 'FAIL'}")
    for rep in (axioms, basic):
        if not rep.ok:
            print(rep)
    return OK if axioms.ok and basic.ok else FOUND


def cmd_order(args) -> int:
    E = io.load_effect(args.model)
    order = E.order
    lab = _labeller(E.names)
    n = E.size
    covers = [
        f"{lab(x)} < {lab(y)}"
        for x in range(n)
        for y in range(n)
        if order.lt(x, y) and not any(order.lt(x, z) and order.lt(z, y) for z in range(n))
    ]
    print("covers: " + ", ".join(covers))
    if order.is_lattice:
        print("lattice: yes")
        print(format_table(ImplicationTable.from_values(order.join, E.zero), E.names, "v"))
        print(format_table(ImplicationTable.from_values(order.meet, E.zero), E.names, "^"))
    else:
        print(f"lattice: no ({_non_lattice_note(E)})")
    if args.out:
        io.save_json(args.out, io.order_to_doc(order))
    return OK


def cmd_transform(args) -> int:
    model, names = io.load_model(args.file)
    if args.to == "implication":
        if not isinstance(model, EffectAlgebra):
            raise UsageError("--to implication expects an effect algebra file")
        T = effect_to_implication(model)
        mode = LEIA if model.is_lattice else EIA
        rep = validate_implication_axioms(T, mode)
        print(f"{T.kind.value} implication table")
        print(format_table(T, names))
        print(f"{mode} axioms: {'pass' if rep.ok else 'FAIL'}")
        if not rep.ok:
            print(rep)
        if args.out:
            io.save_json(args.out, io.implication_to_doc(T, names))
        return OK if rep.ok else FOUND
    if not isinstance(model, ImplicationTable):
        raise UsageError("--to effect expects an implication table file")
    try:
        E = implication_to_effect(model)
    except NotAnImplicationAlgebra as exc:
        print(f"not an implication algebra: {exc}")
        print(exc.report)
        if exc.diagnosis is not None:
            print(exc.diagnosis)
        return FOUND
    except SetValuedNotRoundTrippable as exc:
        print(f"cannot read off an effect algebra: {exc}")
        return FOUND
    if names:
        E = EffectAlgebra(E.size, E.plus, E.comp, E.zero, E.one, names)
    print(format_effect(E))
    axioms = validate_effect_axioms(E)
    print(f"E1-E4: {'pass' if axioms.ok else 'FAIL'}")
    if args.out:
        io.save_json(args.out, E.to_dict())
    return OK if axioms.ok else FOUND


def cmd_roundtrip(args) -> int:
    model, _ = io.load_model(args.file)
    try:
        rep = round_trip_check(model)
    except (NotAnImplicationAlgebra, SetValuedNotRoundTrippable) as exc:
        print(f"round trip impossible: {exc}")
        return FOUND
    print("\n".join(rep.lines()))
    return OK if rep.ok else FOUND


_BUILDERS = {"natural": natural_implication_table, "sasaki": sasaki_implication_table, "set": set_implication_table}


def _diff(a: ImplicationTable, b: ImplicationTable, lab) -> list[str]:
    n = a.size
    return [
        f"  {lab(x)} -> {lab(y)}: {_show_set(a.cell(x, y), lab)} vs {_show_set(b.cell(x, y), lab)}"
        for x in range(n)
        for y in range(n)
        if a.cell(x, y) != b.cell(x, y)
    ]


def cmd_imp(args) -> int:
    E = io.load_effect(args.model)
    if args.kind in ("natural", "sasaki") and not E.is_lattice:
        print(f"{args.kind} implication undefined: {_non_lattice_note(E)}")
        return FOUND
    T = _BUILDERS[args.kind](E)
    print(format_table(T, E.names))
    if args.out:
        io.save_json(args.out, io.implication_to_doc(T, E.names))
    if args.compare:
        lab = _labeller(E.names)
        if not E.is_lattice:
            print(f"compare skipped: {_non_lattice_note(E)}")
            return OK
        nat = natural_implication_table(E)
        for other in ("sasaki", "set"):
            diffs = _diff(nat, _BUILDERS[other](E), lab)
            print(f"natural vs {other}: {'identical' if not diffs else f'{len(diffs)} cell(s) differ'}")
            for line in diffs:
                print(line)
    return OK


def _suite_job(args):
    path, model, names, entries = args
    T = _as_table(model)
    out = []
    for q in entries:
        cm = check_quasiidentity(T, q)
        out.append((q, cm, names))
    return str(path), out


def cmd_check(args) -> int:
    if args.suite:
        try:
            entries = builtin_suite(args.suite)
        except UnknownSuite:
            raise UsageError(f"--suite: unknown suite {args.suite!r} (choose from {', '.join(SUITE_NAMES).lower()})")
    elif args.identity:
        entries = [parse_quasi(args.identity, label="identity")]
        if entries[0].premises:
            raise UsageError("--identity takes a single identity; use --quasi for premises")
    else:
        entries = [parse_quasi(args.quasi, label="quasi-identity")]
    models = [(p, *io.load_model(p)) for p in args.model]
    jobs = [(p, m, names, entries) for p, m, names in models]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_suite_job, jobs))
    else:
        results = [_suite_job(j) for j in jobs]
    status = OK
    for path, rows in results:
        held = sum(cm is None for _, cm, _ in rows)
        print(f"{path}: {held}/{len(rows)} entries hold")
        for q, cm, names in rows:
            if cm is not None:
                status = FOUND
                print(f"  {q.label or q}: FAILS  {q}")
                print(f"    countermodel: {cm.describe(names)}")
    return status


def cmd_consequence(args) -> int:
    sigma = []
    for q in parse_identity_file(Path(args.sigma).read_text()):
        if q.premises:
            raise UsageError(f"--sigma: {q.label} has premises; only identities are allowed")
        sigma.append(q.conclusion)
    goal = parse_identity(args.goal)
    loaded = io.load_model_dir(args.models)
    if not loaded:
        raise UsageError(f"--models: no model files in {args.models}")
    K = [_as_table(m) for _, m, _ in loaded]
    cm = semantic_consequence(K, sigma, goal)
    if cm is None:
        print(f"Holds in all {len(K)} model(s)")
        return OK
    path, _, names = loaded[cm.model_index]
    cm.model_index = None
    print(f"Countermodel in {path}: {cm.describe(names)}")
    return FOUND


def _audit_tables(system: str, directory) -> tuple[list[ImplicationTable], int]:
    tables, skipped = [], 0
    for _, model, _ in io.load_model_dir(directory):
        if isinstance(model, EffectAlgebra):
            if system == "A":
                if not model.is_lattice:
                    skipped += 1
                    continue
                tables.append(natural_implication_table(model))
            else:
                tables.append(set_implication_table(model))
        else:
            tables.append(model)
    return tables, skipped


def cmd_check_proof(args) -> int:
    d = io.load_derivation(args.proof)
    registry = corpus()
    for sibling in sorted(Path(args.proof).resolve().parent.glob("*.prf.json")):
        other = io.load_derivation(sibling)
        registry.setdefault(other.id, other)
    verdict = Checker(registry).check(d)
    print(verdict)
    if not verdict.ok:
        return FOUND
    if args.audit_models:
        K, skipped = _audit_tables(d.system, args.audit_models)
        rep = soundness_audit(d, K)
        note = f", {skipped} non-lattice model(s) skipped" if skipped else ""
        print(f"soundness over {len(K)} model(s){note}: {'pass' if rep.ok else 'FAIL'}")
        if not rep.ok:
            print(rep)
            return FOUND
    return OK


def _print_derivation(d) -> None:
    for h, hyp in enumerate(d.hypotheses):
        print(f"  hyp {h}: {format_term(hyp)}")
    for num, ln in enumerate(d.lines, 1):
        j = ln.just
        kind = type(j).__name__
        if kind == "Hypothesis":
            why = f"hyp {j.index}"
        elif kind == "Axiom":
            why = j.schema
        elif kind == "Rule":
            why = f"{j.rule} {','.join(map(str, j.premises))}"
        else:
            why = f"lemma {j.fixture}"
        print(f"  {num:>3}. {format_term(ln.formula):<50} {why}")


def cmd_prove(args) -> int:
    goal = parse_term(args.goal)
    hyps = [parse_term(h) for h in args.hyp]
    bound = Bound(args.max_lines, args.max_depth, args.max_nodes)
    result = search_proof(args.system, hyps, goal, bound)
    if not result:
        print(str(result).capitalize())
        return FOUND
    print(f"found ({len(result.lines)} lines): {check_derivation(result, {})}")
    _print_derivation(result)
    if args.out:
        io.save_json(args.out, result.to_dict())
    return OK


def cmd_enumerate(args) -> int:
    from .enumeration import CapExceeded, canonical_codes, decode, write_algebras

    if args.max_size > args.cap:
        raise CapExceeded(f"--max-size {args.max_size} exceeds the cap {args.cap}; pass --cap to raise it")
    total = 0
    for n in range(2, args.max_size + 1):
        algebras = [decode(c) for c in canonical_codes(n, jobs=args.jobs, cap=args.cap)]
        write_algebras(args.out, algebras)
        lattice = sum(E.is_lattice for E in algebras)
        print(f"size {n}: {len(algebras)} algebra(s), {lattice} lattice-ordered")
        total += len(algebras)
    print(f"wrote {total} file(s) to {args.out}")
    return OK


def cmd_census(args) -> int:
    from .enumeration import CapExceeded, census

    if args.max_size > args.cap:
        raise CapExceeded(f"--max-size {args.max_size} exceeds the cap {args.cap}; pass --cap to raise it")
    report = census(args.max_size, jobs=args.jobs, findings=args.findings, limit=args.cap)
    print(report.to_text())
    if args.out:
        io.save_json(args.out, report.to_dict())
    return OK


def cmd_export_corpus(args) -> int:
    paths = write_corpus(args.out)
    print(f"wrote {len(paths)} derivation(s) to {args.out}")
    return OK


# -- parser --------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{v} must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    from .enumeration import DEFAULT_CAP

    p = argparse.ArgumentParser(prog="effectlogic", description="Finite effect algebras and their implication logics.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the effect algebra axioms and basic laws")
    s.add_argument("model")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("order", help="induced order, lattice status, join and meet")
    s.add_argument("model")
    s.add_argument("--out")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("transform", help="effect algebra <-> implication table")
    s.add_argument("--to", required=True, choices=["implication", "effect"])
    s.add_argument("file")
    s.add_argument("--out")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("roundtrip", help="compare a model with its double transform")
    s.add_argument("file")
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("imp", help="build an implication table from an effect algebra")
    s.add_argument("--kind", required=True, choices=sorted(_BUILDERS))
    s.add_argument("model")
    s.add_argument("--compare", action="store_true", help="diff natural against sasaki and set-valued")
    s.add_argument("--out")
    s.set_defaults(func=cmd_imp)

    s = sub.add_parser("check", help="run a suite, identity or quasi-identity on models")
    what = s.add_mutually_exclusive_group(required=True)
    what.add_argument("--suite", type=str.lower, metavar="{" + ",".join(n.lower() for n in SUITE_NAMES) + "}")
    what.add_argument("--identity")
    what.add_argument("--quasi")
    s.add_argument("--model", nargs="+", action="extend", required=True)
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("consequence", help="semantic consequence over a directory of models")
    s.add_argument("--sigma", required=True, help="file of identities, one per line")
    s.add_argument("--goal", required=True)
    s.add_argument("--models", required=True)
    s.set_defaults(func=cmd_consequence)

    s = sub.add_parser("check-proof", help="verify a derivation, optionally audit it on models")
    s.add_argument("proof")
    s.add_argument("--audit-models")
    s.set_defaults(func=cmd_check_proof)

    s = sub.add_parser("prove", help="bounded proof search")
    s.add_argument("--system", required=True, choices=["A", "B"])
    s.add_argument("--goal", required=True)
    s.add_argument("--hyp", action="append", default=[])
    s.add_argument("--max-lines", type=_positive, default=Bound.max_lines)
    s.add_argument("--max-depth", type=_positive, default=Bound.max_depth)
    s.add_argument("--max-nodes", type=_positive, default=Bound.max_nodes)
    s.add_argument("--out")
    s.set_defaults(func=cmd_prove)

    s = sub.add_parser("enumerate", help="write every effect algebra up to a size")
    s.add_argument("--max-size", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("census", help="counts by size, lattice status and cell cardinality")
    s.add_argument("--max-size", type=int, default=DEFAULT_CAP)
    s.add_argument("--jobs", type=_positive, default=1)
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.add_argument("--findings", action="store_true", help="run all suites on non-lattice members")
    s.add_argument("--out")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("export-corpus", help="write the shipped derivations as .prf.json files")
    s.add_argument("out")
    s.set_defaults(func=cmd_export_corpus)
    return p


def run_command(argv=None) -> int:
    from .enumeration import CapExceeded

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return USAGE
    except (io.FormatError, MalformedTable, ParseError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main(argv=None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
