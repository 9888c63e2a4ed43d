"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import bounds as B
from .blowup import load_document, replay
from .discrepancy import IncidenceProfile, contracted_degree, discrepancies, end_discrepancies
from .errors import DomainError, InputError
from .hj import hj_eval, hj_expand, inverse_weight, parse_chain, parse_fraction
from .invariants import chain_canonical_degree, structural_identity_check
from .tchain import (
    DuVal,
    TChain,
    catalog_record,
    classify,
    enumerate_tchains,
    verify_fibonacci_bound,
)

OK, FAILED, BAD_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def fixture_dir() -> Path:
    env = os.environ.get("TSING_FIXTURES")
    return Path(env) if env else Path(__file__).with_name("fixtures")


def _emit(args, data, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(data, ensure_ascii=False, sort_keys=True, default=str))
    else:
        print(text)


def _chains_sorted(chains):
    return sorted(chains, key=lambda c: (len(c), tuple(c)))


# --- subcommands --------------------------------------------------------------


def cmd_hj(args) -> int:
    q = parse_fraction(args.fraction)
    chain = hj_expand(q)
    _emit(args, {"order": q.order, "weight": q.weight, "chain": list(chain)}, str(chain))
    return OK


def cmd_eval(args) -> int:
    chain = parse_chain(args.chain)
    q = hj_eval(chain)
    _emit(args, {"chain": list(chain), "order": q.order, "weight": q.weight}, str(q))
    return OK


def cmd_recognize(args) -> int:
    chain = parse_chain(args.chain)
    q = hj_eval(chain)
    rev = inverse_weight(q)
    cls = classify(chain)
    data = {"chain": list(chain), "order": q.order, "weight": q.weight, "reverse_weight": rev.weight}
    tail = f"(order {q.order}, weight {q.weight}); reverse is {rev}"
    if isinstance(cls, TChain):
        p = cls.params
        data.update(kind="T", d=p.d, n=p.n, a=p.a)
        text = f"T-chain: d={p.d} n={p.n} a={p.a} {tail}"
    elif isinstance(cls, DuVal):
        data.update(kind="du Val", rank=cls.rank)
        text = f"du Val: A_{cls.rank} {tail}"
    else:
        data.update(kind="not T")
        text = f"not a T-chain: {tail}"
    _emit(args, data, text)
    return OK


def _write_jsonl(path: str, chains) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            for c in chains:
                fh.write(json.dumps(catalog_record(c), sort_keys=True) + "\n")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def cmd_enumerate(args) -> int:
    chains = _chains_sorted(enumerate_tchains(args.d, args.k, dedupe=args.dedupe))
    if args.jsonl:
        _write_jsonl(args.jsonl, chains)
    _emit(args, [list(c) for c in chains], "\n".join(map(str, chains)))
    return OK


def cmd_catalog(args) -> int:
    chains = _chains_sorted(enumerate_tchains(args.d, args.k, dedupe=not args.all_orientations))
    _write_jsonl(args.out, chains)
    _emit(args, {"path": args.out, "records": len(chains)}, f"wrote {len(chains)} records to {args.out}")
    return OK


def cmd_discrepancies(args) -> int:
    chain = parse_chain(args.chain)
    mu = discrepancies(chain)
    _emit(args, {"chain": list(chain), "discrepancies": [str(x) for x in mu]}, " ".join(map(str, mu)))
    return OK


def cmd_kwdeg(args) -> int:
    chain = parse_chain(args.chain)
    profile = IncidenceProfile.parse(args.meets, args.kx)
    deg = contracted_degree(chain, profile)
    _emit(args, {"chain": list(chain), "meets": dict(profile.meets), "kx": profile.kx, "degree": str(deg)}, str(deg))
    return OK


def cmd_bound(args) -> int:
    kind = B.parse_diagram(args.diagram, args.s, args.gamma)
    delta = B.delta_of(kind)
    dk2 = args.kw2 - args.ks2
    out: dict = {"kappa": args.kappa, "kw2": args.kw2, "ks2": args.ks2, "lambda": args.lam,
                 "diagram": str(kind), "delta": delta, "not_nef": args.not_nef}
    bounds = {"main2": B.bound_main2(dk2, delta, args.lam)}
    if args.not_nef:
        bounds["not_nef"] = B.bound_not_nef(dk2, args.lam, kind)
    else:
        if args.kappa is None:
            raise InputError("--kappa is required unless --not-nef is given")
        kappa = B.Kappa(args.kappa)
        bounds["theorem"] = B.bound_theorem1(kappa, args.kw2, args.ks2)
        bounds["no_long"] = B.bound_no_long(kappa, args.kw2, args.ks2)
        bounds["type_i"] = B.bound_type_i(kappa, args.kw2, args.ks2)
    out["bounds"] = bounds
    status = OK
    if args.chain:
        chain = parse_chain(args.chain)
        cls = classify(chain)
        m = args.m
        if m is None:
            if not isinstance(cls, TChain):
                raise DomainError(f"{chain} is not a T-chain")
            m = args.ks2 - args.kw2 + len(chain) - cls.params.d + 1
        rec = B.ScenarioRecord(
            kappa=None if args.kappa is None else B.Kappa(args.kappa),
            ks_nef=not args.not_nef, ks2=args.ks2, kw2=args.kw2, lam=args.lam,
            diagram=kind, chain=chain, m=m,
        )
        report = B.check_scenario(rec)
        out["scenario"] = report.as_dict()
        status = OK if report.ok else FAILED
    print(json.dumps(out, ensure_ascii=False, sort_keys=True))
    return status


def cmd_verify_fibonacci(args) -> int:
    rows = [verify_fibonacci_bound(d, k) for d in range(1, args.max_d + 1) for k in range(args.max_k + 1)]
    ok = all(r.holds for r in rows) and all(r.attained for r in rows if r.d == 1)
    if args.json:
        _emit(args, {"ok": ok, "rows": [r.as_dict() for r in rows]})
    else:
        print(f"{'d':>2} {'k':>3} {'chains':>7} {'max n':>7} {'F_k':>7}  status")
        for r in rows:
            mark = "=" if r.attained else "<"
            form = "" if r.extremal_form_ok is None else ("  form ok" if r.extremal_form_ok else "  FORM FAIL")
            print(f"{r.d:>2} {r.k:>3} {r.count:>7} {r.max_index:>7} {r.bound:>7}  {mark}{'' if r.holds else ' FAIL'}{form}")
        print("all bounds hold" if ok else "FAILED")
    return OK if ok else FAILED


def identity_ledger(max_d: int, max_k: int) -> list[dict]:
    """Check the chain identities on every enumerated T-chain."""
    rows = []
    for d in range(1, max_d + 1):
        for k in range(max_k + 1):
            bad: dict[str, list] = {"canonical": [], "ends": [], "both_ends": [], "structural": []}
            structural = 0
            for c in enumerate_tchains(d, k):
                p = classify(c).params
                if chain_canonical_degree(c) != k + 2:
                    bad["canonical"].append(list(c))
                mu = discrepancies(c)
                if (mu[0], mu[-1]) != end_discrepancies(p.n, p.a):
                    bad["ends"].append(list(c))
                meets = {1: 1, len(c): 1} if len(c) > 1 else {1: 2}
                if contracted_degree(c, IncidenceProfile(meets)) != 0:
                    bad["both_ends"].append(list(c))
                rep = structural_identity_check(c)
                structural += rep.status != "not-applicable"
                if not rep.ok:
                    bad["structural"].append(list(c))
            rows.append({"d": d, "k": k, "structural_checked": structural,
                         "failures": {key: v for key, v in bad.items() if v}})
    return rows


def cmd_verify_identities(args) -> int:
    rows = identity_ledger(args.max_d, args.max_k)
    ok = not any(r["failures"] for r in rows)
    if args.json:
        _emit(args, {"ok": ok, "rows": rows})
    else:
        for r in rows:
            fails = ", ".join(f"{key}: {len(v)}" for key, v in r["failures"].items())
            print(f"d={r['d']} k={r['k']}: {'FAIL ' + fails if fails else 'ok'}"
                  f" (structural shape on {r['structural_checked']})")
        print("all identities hold" if ok else "FAILED")
    return OK if ok else FAILED


def _load_json_any(path: Path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def cmd_verify_fixtures(args) -> int:
    directory = fixture_dir()
    if not directory.is_dir():
        raise InputError(f"fixture directory {directory} does not exist")
    fixtures = B.classification_fixtures()
    for path in sorted(directory.glob("*.json")):
        doc = _load_json_any(path)
        fixtures += [B.fixture_from_dict(item) for item in (doc if isinstance(doc, list) else [doc])]
    results = [B.verify_fixture(f) for f in fixtures]
    replays = []
    for path in sorted((directory / "replay").glob("*.json")):
        rep = replay(load_document(path))
        replays.append((path.name, rep))
    ok = all(r.ok for r in results) and all(rep.ok for _, rep in replays)
    if args.json:
        _emit(args, {
            "ok": ok,
            "fixtures": [r.as_dict() for r in results],
            "replays": [{"file": name, **rep.as_dict()} for name, rep in replays],
        })
    else:
        for r in results:
            print(r.line)
        for name, rep in replays:
            print(_replay_line(rep, name))
        print("all fixtures verified" if ok else "FAILED")
    return OK if ok else FAILED


def _replay_line(rep, name: str = "") -> str:
    label = rep.name or name
    if rep.error:
        return f"replay {label}: FAIL ({rep.error})"
    failed = [n for n, ok, _ in rep.checks if not ok]
    bits = [f"chain {rep.chain}", f"m={rep.num_blowups}"]
    if rep.kw2 is not None:
        bits.append(f"K_W²={rep.kw2}")
    if rep.lemma_int_sum is not None:
        bits.append(f"ΣE·ΣC={rep.lemma_int_sum}")
    if rep.f_degree is not None:
        bits.append(f"φ(F)·K_W={rep.f_degree}")
    status = "ok" if rep.ok else "FAIL: " + "; ".join(failed)
    return f"replay {label}: " + ", ".join(bits) + f" {status}"


def cmd_replay(args) -> int:
    rep = replay(load_document(args.file))
    if args.json:
        _emit(args, rep.as_dict())
    else:
        print(_replay_line(rep, Path(args.file).name))
        for name, ok, detail in rep.checks:
            print(f"  {'ok  ' if ok else 'FAIL'} {name}" + (f" ({detail})" if detail and not ok else ""))
    return OK if rep.ok else FAILED


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tsing", description="T-singularity chains, discrepancies and length bounds.")
    p.add_argument("--json", action="store_true", help="structured output")
    # repeated on subcommands without a default so a global --json survives
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("hj", parents=[common], help="expand m/q into its chain")
    s.add_argument("fraction")
    s.set_defaults(func=cmd_hj)

    s = sub.add_parser("eval", parents=[common], help="evaluate a chain to 1/m(1,q)")
    s.add_argument("chain")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("recognize", parents=[common], help="classify a chain")
    s.add_argument("chain")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("enumerate", parents=[common], help="list T-chains with given d and r-d")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--dedupe", action="store_true", help="one orientation per chain")
    s.add_argument("--jsonl", metavar="PATH", help="also write catalog records")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("catalog", parents=[common], help="write a JSON-lines catalog")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--all-orientations", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("discrepancies", parents=[common], help="exact discrepancies of a chain")
    s.add_argument("chain")
    s.set_defaults(func=cmd_discrepancies)

    s = sub.add_parser("kwdeg", parents=[common], help="K_W-degree of the image of a curve")
    s.add_argument("chain")
    s.add_argument("--meets", required=True, help="position:multiplicity,... (1-based)")
    s.add_argument("--kx", type=int, default=-1, help="F.K_X (default -1)")
    s.set_defaults(func=cmd_kwdeg)

    s = sub.add_parser("bound", parents=[common], help="evaluate length bounds (JSON ledger)")
    s.add_argument("--kappa", type=int, choices=(0, 1, 2))
    s.add_argument("--kw2", type=int, required=True)
    s.add_argument("--ks2", type=int, required=True)
    s.add_argument("--lambda", dest="lam", type=int, default=0)
    s.add_argument("--diagram", default="none", help="none, I or II")
    s.add_argument("--s", type=int)
    s.add_argument("--gamma", type=int, help="self-intersection of the curve F meets (type II)")
    s.add_argument("--not-nef", action="store_true")
    s.add_argument("--chain", help="check a concrete chain against the bounds")
    s.add_argument("--m", type=int, help="number of blow-ups (checked against K_W^2)")
    s.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", parents=[common], help="batch verification")
    vsub = v.add_subparsers(dest="what", required=True, parser_class=_Parser)
    s = vsub.add_parser("fibonacci", parents=[common])
    s.add_argument("--max-d", type=int, default=4)
    s.add_argument("--max-k", type=int, default=12)
    s.set_defaults(func=cmd_verify_fibonacci)
    s = vsub.add_parser("identities", parents=[common])
    s.add_argument("--max-d", type=int, default=4)
    s.add_argument("--max-k", type=int, default=10)
    s.set_defaults(func=cmd_verify_identities)
    s = vsub.add_parser("fixtures", parents=[common])
    s.set_defaults(func=cmd_verify_fixtures)

    s = sub.add_parser("replay", parents=[common], help="replay a construction document")
    s.add_argument("file")
    s.set_defaults(func=cmd_replay)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"tsing: error: {exc}", file=sys.stderr)
        return BAD_INPUT


def main(argv: Sequence[str] | None = None) -> None:
    try:
        code = run(argv)
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = OK
    sys.exit(code)
