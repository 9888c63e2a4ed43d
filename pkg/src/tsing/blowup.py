"""Blow-up calculus in the Picard lattice of ``X``.

A curve is a class: an integer combination of initial curve symbols (labels of
curves on ``S``) and exceptional symbols ``e_1, ..., e_m``, stored as a dict
with ``str`` keys for initial symbols and ``int`` keys for exceptional ones.
The lattice form is the given pairing on initial symbols, ``e_i . e_j =
-delta_ij`` and ``e_i . (initial) = 0``.  ``K_X = K_S + sum e_i``.

States are values; :func:`blow_up` returns a new state.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .discrepancy import IncidenceProfile, contracted_degree
from .errors import DomainError, InputError
from .hj import Chain, reverse
from .invariants import kw2_from, lemma_int_value
from .tchain import DuVal, NotT, TChain, classify

__all__ = [
    "CurveRecord",
    "ConfigState",
    "FreePoint",
    "Intersection",
    "Node",
    "PointSpec",
    "init_config",
    "blow_up",
    "pairing",
    "k_degree",
    "kx_squared",
    "extract_chain",
    "ReplayReport",
    "replay",
    "load_document",
    "search_scripts",
]

Symbol = Union[str, int]


@dataclass(frozen=True)
class CurveRecord:
    label: str
    cls: Mapping[Symbol, int]
    nodes: int = 0

    def __post_init__(self):
        if self.nodes < 0:
            raise InputError(f"curve {self.label}: node count must be >= 0")


@dataclass(frozen=True)
class FreePoint:
    curve: str


@dataclass(frozen=True)
class Intersection:
    a: str
    b: str


@dataclass(frozen=True)
class Node:
    curve: str


PointSpec = Union[FreePoint, Intersection, Node]


@dataclass(frozen=True)
class ConfigState:
    curves: Mapping[str, CurveRecord]
    initial_pairing: Mapping[tuple[str, str], int]
    k_initial_dots: Mapping[str, int]
    ks2: int
    num_blowups: int = 0
    steps: tuple[PointSpec, ...] = ()

    def __getitem__(self, label: str) -> CurveRecord:
        try:
            return self.curves[label]
        except KeyError:
            raise DomainError(f"unknown curve label {label!r}") from None


def _exc_label(i: int) -> str:
    return f"E{i}"


def init_config(spec: Mapping) -> ConfigState:
    """Build the state on ``S`` from curve data.

    ``spec`` has ``ks2``, ``curves`` (each with ``label``, ``self``, ``k_dot``,
    ``nodes``) and ``intersections`` (each with ``a``, ``b``, ``mult``).
    A pair listed twice must carry the same number both times.
    """
    try:
        ks2 = int(spec["ks2"])
        curves = list(spec["curves"])
        inters = list(spec.get("intersections", ()))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad configuration: {exc}") from None
    labels: list[str] = []
    pair: dict[tuple[str, str], int] = {}
    kdots: dict[str, int] = {}
    records: dict[str, CurveRecord] = {}
    for cur in curves:
        try:
            label = str(cur["label"])
            self_int = int(cur["self"])
            kdot = int(cur.get("k_dot", 0))
            nodes = int(cur.get("nodes", 0))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad curve entry {cur!r}: {exc}") from None
        if label in records:
            raise InputError(f"duplicate curve label {label!r}")
        if label.startswith("E") and label[1:].isdigit():
            raise InputError(f"label {label!r} is reserved for exceptional curves")
        labels.append(label)
        pair[(label, label)] = self_int
        kdots[label] = kdot
        records[label] = CurveRecord(label, {label: 1}, nodes)
    for item in inters:
        try:
            a, b, mult = str(item["a"]), str(item["b"]), int(item.get("mult", 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad intersection entry {item!r}: {exc}") from None
        if a not in records or b not in records:
            raise InputError(f"intersection names unknown curve: {a!r}, {b!r}")
        if a == b:
            raise InputError(f"use 'self' for the self-intersection of {a!r}")
        for key, other in (((a, b), (b, a)), ((b, a), (a, b))):
            if key in pair and pair[key] != mult:
                raise InputError(f"asymmetric pairing: {a}.{b} given as {pair[key]} and {mult}")
        pair[(a, b)] = pair[(b, a)] = mult
    return ConfigState(records, pair, kdots, ks2)


def _pair_classes(state: ConfigState, x: Mapping[Symbol, int], y: Mapping[Symbol, int]) -> int:
    total = 0
    for sx, cx in x.items():
        if isinstance(sx, int):
            total -= cx * y.get(sx, 0)
            continue
        for sy, cy in y.items():
            if isinstance(sy, str):
                total += cx * cy * state.initial_pairing.get((sx, sy), 0)
    return total


def pairing(state: ConfigState, a: str, b: str) -> int:
    return _pair_classes(state, state[a].cls, state[b].cls)


def _k_of_class(state: ConfigState, x: Mapping[Symbol, int]) -> int:
    # K_X . e_i = -1, K_X . (initial) = K_S . (initial)
    return sum(-c if isinstance(s, int) else c * state.k_initial_dots[s] for s, c in x.items())


def k_degree(state: ConfigState, a: str) -> int:
    return _k_of_class(state, state[a].cls)


def kx_squared(state: ConfigState) -> int:
    """``K_X^2`` from the lattice; equals ``ks2 - m``."""
    return state.ks2 - state.num_blowups


def _minus_e(cls: Mapping[Symbol, int], i: int, times: int) -> dict[Symbol, int]:
    out = dict(cls)
    out[i] = out.get(i, 0) - times
    return out


def blow_up(state: ConfigState, p: PointSpec) -> ConfigState:
    """Blow up one point and return the new state."""
    curves = dict(state.curves)
    i = state.num_blowups + 1
    match p:
        case FreePoint(curve=c):
            rec = state[c]
            curves[c] = replace(rec, cls=_minus_e(rec.cls, i, 1))
        case Intersection(a=a, b=b):
            if a == b:
                raise DomainError(f"intersection point needs two distinct curves, got {a!r} twice")
            ra, rb = state[a], state[b]
            if pairing(state, a, b) < 1:
                raise DomainError(f"{a} and {b} do not meet (pairing {pairing(state, a, b)})")
            curves[a] = replace(ra, cls=_minus_e(ra.cls, i, 1))
            curves[b] = replace(rb, cls=_minus_e(rb.cls, i, 1))
        case Node(curve=c):
            rec = state[c]
            if rec.nodes < 1:
                raise DomainError(f"{c} has no node left to blow up")
            curves[c] = replace(rec, cls=_minus_e(rec.cls, i, 2), nodes=rec.nodes - 1)
        case _:
            raise InputError(f"not a point specification: {p!r}")
    curves[_exc_label(i)] = CurveRecord(_exc_label(i), {i: 1})
    return replace(state, curves=curves, num_blowups=i, steps=state.steps + (p,))


def extract_chain(state: ConfigState, labels: Sequence[str]) -> Chain:
    """Read off the chain formed by ``labels`` in order.

    Consecutive curves must meet once, others not at all; each must be smooth
    with self-intersection ``<= -2``.
    """
    if not labels:
        raise DomainError("empty chain")
    if len(set(labels)) != len(labels):
        raise DomainError(f"repeated label in chain {list(labels)}")
    entries = []
    for lab in labels:
        rec = state[lab]
        if rec.nodes:
            raise DomainError(f"{lab} still has {rec.nodes} node(s)")
        self_int = pairing(state, lab, lab)
        if self_int > -2:
            raise DomainError(f"{lab} has self-intersection {self_int} > -2")
        entries.append(-self_int)
    for (i, a), (j, b) in itertools.combinations(enumerate(labels), 2):
        want = 1 if j == i + 1 else 0
        got = pairing(state, a, b)
        if got != want:
            raise DomainError(f"{a}.{b} = {got}, expected {want} for a chain")
    return Chain(entries)


# --- replay -------------------------------------------------------------------

_OPS = {
    "free": lambda args: FreePoint(*args),
    "intersection": lambda args: Intersection(*args),
    "node": lambda args: Node(*args),
}


def _parse_step(step: Mapping) -> PointSpec:
    try:
        op = step["op"]
        args = [str(a) for a in step.get("args", ())]
        need = 2 if op == "intersection" else 1
        if op not in _OPS or len(args) != need:
            raise InputError(f"bad step {step!r}: op must be free|intersection|node with {need} label(s)")
        return _OPS[op](args)
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad step {step!r}: {exc}") from None


def load_document(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


@dataclass
class ReplayReport:
    name: str = ""
    chain: Chain | None = None
    classification: object = None
    num_blowups: int = 0
    r: int | None = None
    d: int | None = None
    kw2: int | None = None
    lam: int | None = None
    lemma_int_sum: int | None = None
    lemma_int_expected: int | None = None
    weekbound: dict[str, int] = field(default_factory=dict)
    f_degree: Fraction | None = None
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    error: str | None = None

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return self.error is None and all(ok for _, ok, _ in self.checks)

    def as_dict(self) -> dict:
        cls = self.classification
        if isinstance(cls, TChain):
            cls_out = {"kind": "T", "d": cls.params.d, "n": cls.params.n, "a": cls.params.a}
        elif isinstance(cls, DuVal):
            cls_out = {"kind": "du Val", "rank": cls.rank}
        elif isinstance(cls, NotT):
            cls_out = {"kind": "not T"}
        else:
            cls_out = None
        return {
            "name": self.name,
            "ok": self.ok,
            "error": self.error,
            "chain": None if self.chain is None else list(self.chain),
            "classification": cls_out,
            "m": self.num_blowups,
            "r": self.r,
            "d": self.d,
            "kw2": self.kw2,
            "lambda": self.lam,
            "lemma_int": {"sum": self.lemma_int_sum, "expected": self.lemma_int_expected},
            "weekbound": self.weekbound,
            "f_degree": None if self.f_degree is None else str(self.f_degree),
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
        }


def replay(doc: Mapping) -> ReplayReport:
    """Run a construction document and verify the intersection identities.

    Malformed documents raise :class:`InputError`.  Everything after parsing
    (an illegal step, a broken chain, a failed identity) is recorded on the
    report instead.
    """
    report = ReplayReport(name=str(doc.get("name", "")))
    state = init_config(doc)
    steps = [_parse_step(s) for s in doc.get("steps", ())]
    try:
        order = [str(x) for x in doc["chain_order"]]
        pi_c = [str(x) for x in doc.get("pi_c", ())]
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad construction document: missing {exc}") from None
    for lab in pi_c:
        if lab not in state.curves:
            raise InputError(f"pi_c names unknown curve {lab!r}")
    designated = doc.get("designated_f")

    try:
        for step in steps:
            state = blow_up(state, step)
        chain = extract_chain(state, order)
    except DomainError as exc:
        report.error = str(exc)
        return report
    report.num_blowups = m = state.num_blowups
    report.chain = chain
    report.classification = cls = classify(chain)
    report.check("chain is a T-chain", isinstance(cls, TChain), str(chain))
    if not isinstance(cls, TChain):
        return report
    r, d = len(chain), cls.params.d
    report.r, report.d = r, d
    report.kw2 = kw2_from(state.ks2, m, r, d)
    report.lam = lam = sum(state.k_initial_dots[lab] for lab in pi_c)

    total: dict[Symbol, int] = {}
    for lab in order:
        for sym, c in state[lab].cls.items():
            total[sym] = total.get(sym, 0) + c
    lam_lattice = sum(c * state.k_initial_dots[s] for s, c in total.items() if isinstance(s, str))
    report.check("λ from π(C) matches lattice", lam == lam_lattice, f"{lam} vs {lam_lattice}")

    per_e = {_exc_label(i): _pair_classes(state, {i: 1}, total) for i in range(1, m + 1)}
    report.weekbound = per_e
    report.lemma_int_sum = sum(per_e.values())
    report.lemma_int_expected = lemma_int_value(r, d, lam)
    report.check("Σ E_i·ΣC_j = r−d+2−λ", report.lemma_int_sum == report.lemma_int_expected,
                 f"{report.lemma_int_sum} vs {report.lemma_int_expected}")
    low = {k: v for k, v in per_e.items() if v < 1}
    report.check("E_i·ΣC_j ≥ 1 for every i", not low, ", ".join(f"{k}={v}" for k, v in low.items()))
    report.check("K_X² = K_S² − m", _pair_classes_k2(state) == kx_squared(state), "")

    if designated:
        designated = str(designated)
        if designated in order:
            report.check("designated curve outside chain", False, designated)
        elif designated not in state.curves:
            report.error = f"designated curve {designated!r} does not exist"
        else:
            meets = {j + 1: pairing(state, designated, lab) for j, lab in enumerate(order)}
            neg = {j: v for j, v in meets.items() if v < 0}
            report.check("designated curve meets chain non-negatively", not neg, str(neg))
            if not neg:
                profile = IncidenceProfile({j: v for j, v in meets.items() if v}, k_degree(state, designated))
                report.f_degree = contracted_degree(chain, profile)
                report.check("φ(F)·K_W > 0", report.f_degree > 0, str(report.f_degree))

    expect = doc.get("expect") or {}
    if "m" in expect:
        report.check("m as stated", m == expect["m"], f"{m} vs {expect['m']}")
    if "chain" in expect:
        want = Chain(expect["chain"])
        report.check("chain as stated (up to reversal)", chain in (want, reverse(want)), f"{chain} vs {want}")
    if "kw2" in expect:
        report.check("K_W² as stated", report.kw2 == expect["kw2"], f"{report.kw2} vs {expect['kw2']}")
    if "lemma_int" in expect:
        report.check("ΣE·ΣC as stated", report.lemma_int_sum == expect["lemma_int"], "")
    if "f_degree" in expect:
        got = None if report.f_degree is None else str(report.f_degree)
        report.check("φ(F)·K_W as stated", got == str(expect["f_degree"]), f"{got} vs {expect['f_degree']}")
    return report


def _pair_classes_k2(state: ConfigState) -> int:
    """``K_X^2`` computed in the lattice: ``K_S^2 + sum e_i^2``."""
    return state.ks2 + sum(_pair_classes(state, {i: 1}, {i: 1}) for i in range(1, state.num_blowups + 1))


# --- offline search -------------------------------------------------------------


def _moves(state: ConfigState) -> Iterator[PointSpec]:
    labels = list(state.curves)
    for lab in labels:
        if state.curves[lab].nodes:
            yield Node(lab)
    for a, b in itertools.combinations(labels, 2):
        if pairing(state, a, b) >= 1:
            yield Intersection(a, b)
    for lab in labels:
        yield FreePoint(lab)


def _find_chain(state: ConfigState, target: Sequence[int]) -> list[str] | None:
    selfs = {lab: pairing(state, lab, lab) for lab, rec in state.curves.items() if not rec.nodes}
    for want in (tuple(target), tuple(target)[::-1]):
        def extend(path: list[str]) -> list[str] | None:
            if len(path) == len(want):
                return path
            for lab, s in selfs.items():
                if lab in path or s != -want[len(path)]:
                    continue
                if path and pairing(state, path[-1], lab) != 1:
                    continue
                if any(pairing(state, q, lab) for q in path[:-1]):
                    continue
                found = extend(path + [lab])
                if found:
                    return found
            return None

        found = extend([])
        if found:
            return found
    return None


def search_scripts(spec: Mapping, length: int, target: Iterable[int]) -> Iterator[tuple[tuple[PointSpec, ...], list[str]]]:
    """Yield every script of ``length`` blow-ups after which ``target`` appears as a chain.

    Exhaustive over nodes, intersection points and free points of tracked
    curves; used offline to reconstruct scripts whose existence is known but whose steps are not.
    """
    target = tuple(target)
    start = init_config(spec)

    def walk(state: ConfigState, depth: int):
        if depth == length:
            found = _find_chain(state, target)
            if found:
                yield state.steps, found
            return
        for move in _moves(state):
            yield from walk(blow_up(state, move), depth + 1)

    yield from walk(start, 0)
