"""Length bounds for a T-singularity on a stable surface, and a scenario checker.

Throughout, ``k = r - d`` for the T-chain, ``dk2 = K_W^2 - K_S^2``,
``lam = K_S . pi(C)`` and ``delta`` is the contribution of a long diagram
(0 without one, 1 for type I, ``s`` for type II).  Kodaira dimension, nefness
of ``K_S`` and the diagram kind are declared inputs.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .errors import DomainError, InputError
from .hj import Chain, hj_eval, reverse
from .invariants import kw2_from
from .tchain import TChain, classify

__all__ = [
    "Kappa",
    "NoLong",
    "TypeI",
    "TypeII",
    "DiagramKind",
    "parse_diagram",
    "delta_of",
    "bound_main2",
    "bound_theorem1",
    "bound_no_long",
    "bound_type_i",
    "bound_not_nef",
    "Inequality",
    "nefestimate_lower",
    "ScenarioRecord",
    "ScenarioReport",
    "check_scenario",
    "LinearExpr",
    "ChainTemplate",
    "Fixture",
    "FixtureResult",
    "fixture_from_dict",
    "classification_fixtures",
    "verify_fixture",
]


class Kappa(enum.IntEnum):
    ZERO = 0
    ONE = 1
    TWO = 2


@dataclass(frozen=True)
class NoLong:
    def __str__(self):
        return "none"


@dataclass(frozen=True)
class TypeI:
    def __str__(self):
        return "I"


@dataclass(frozen=True)
class TypeII:
    """Long diagram of type II: ``s`` leading (-2)-curves, ``F`` meets a curve of
    self-intersection ``gamma_self_int``."""

    s: int
    gamma_self_int: int | None = None  # unchecked when None

    def __post_init__(self):
        if self.s < 1:
            raise InputError(f"type II diagram needs s >= 1, got {self.s}")
        if self.gamma_self_int is not None and self.gamma_self_int > -3:
            raise InputError(f"type II diagram needs gamma self-intersection <= -3, got {self.gamma_self_int}")

    def __str__(self):
        return f"II(s={self.s})"


DiagramKind = Union[NoLong, TypeI, TypeII]


def parse_diagram(kind: str | None, s: int | None = None, gamma: int | None = None) -> DiagramKind:
    key = (kind or "none").strip().lower()
    if key in ("none", "nolong", "0"):
        return NoLong()
    if key in ("i", "1", "type-i"):
        return TypeI()
    if key in ("ii", "2", "type-ii"):
        if s is None:
            raise InputError("a type II diagram needs --s")
        return TypeII(s, gamma)
    raise InputError(f"unknown diagram kind {kind!r}; use none, I or II")


def delta_of(kind: DiagramKind) -> int:
    match kind:
        case NoLong():
            return 0
        case TypeI():
            return 1
        case TypeII(s=s):
            return s
    raise InputError(f"not a diagram kind: {kind!r}")


def bound_main2(delta_k2: int, delta: int, lam: int) -> int:
    """``r - d <= 2 (K_W^2 - K_S^2) + delta - lambda``."""
    return 2 * delta_k2 + delta - lam


def bound_theorem1(kappa: Kappa, kw2: int, ks2: int) -> int:
    kappa = Kappa(kappa)
    if kappa is Kappa.ZERO:
        return 4 * kw2
    if kappa is Kappa.ONE:
        return 4 * kw2 - 2
    dk2 = kw2 - ks2
    return 4 * dk2 - 4 if dk2 > 1 else 1


def bound_no_long(kappa: Kappa, kw2: int, ks2: int) -> int:
    kappa = Kappa(kappa)
    if kappa is Kappa.ZERO:
        return 2 * kw2
    if kappa is Kappa.ONE:
        return 2 * kw2 - 1
    return 2 * (kw2 - ks2) - 1


def bound_type_i(kappa: Kappa, kw2: int, ks2: int) -> int:
    kappa = Kappa(kappa)
    if kappa is Kappa.ZERO:
        return 2 * kw2 + 1
    if kappa is Kappa.ONE:
        return 2 * kw2
    return 2 * (kw2 - ks2)


def bound_not_nef(delta_k2: int, lam: int, kind: DiagramKind) -> int:
    """Bound on ``r - d`` when ``K_S`` is not nef (``S`` rational); ``lam`` may be negative."""
    match kind:
        case NoLong():
            return 2 * delta_k2 - lam
        case TypeI():
            return 2 * delta_k2 + 1 - lam
        case TypeII():
            return 4 * delta_k2 - 2 * lam
    raise InputError(f"not a diagram kind: {kind!r}")


_THEOREM_FORMULA = {
    Kappa.ZERO: "4·K_W²",
    Kappa.ONE: "4·K_W²−2",
}


@dataclass(frozen=True)
class Inequality:
    """One line of a verification ledger."""

    name: str
    lhs: int
    relation: str  # "<=", ">=", "=="
    rhs: int

    @property
    def holds(self) -> bool:
        if self.relation == "<=":
            return self.lhs <= self.rhs
        if self.relation == ">=":
            return self.lhs >= self.rhs
        return self.lhs == self.rhs

    @property
    def margin(self) -> int:
        if self.relation == "<=":
            return self.rhs - self.lhs
        if self.relation == ">=":
            return self.lhs - self.rhs
        return -abs(self.lhs - self.rhs)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
        }


def _t_chain(chain: Iterable[int]) -> tuple[Chain, int]:
    c = chain if isinstance(chain, Chain) else Chain(chain)
    cls = classify(c)
    if not isinstance(cls, TChain):
        raise DomainError(f"{c} is not a T-chain")
    return c, cls.params.d


def nefestimate_lower(kappa: Kappa, chain: Iterable[int], diagram: DiagramKind, lam: int | None = None) -> Inequality:
    """Lower bound on ``r - d`` forced by a type II long diagram when ``K_S`` is nef.

    ``r - d >= 2s`` for Kodaira dimension 0 or 1.  For general type it is
    ``r - d >= 2s + 2``, or ``r - d >= 2s + 1`` together with
    ``lambda >= 2``; only the common part ``r - d >= 2s + 1`` is asserted.
    """
    if not isinstance(diagram, TypeII):
        raise InputError("the lower estimate needs a type II diagram")
    c, d = _t_chain(chain)
    s = diagram.s
    if Kappa(kappa) is Kappa.TWO:
        return Inequality("r−d ≥ 2s+1 (type II, general type)", len(c) - d, ">=", 2 * s + 1)
    return Inequality("r−d ≥ 2s (type II)", len(c) - d, ">=", 2 * s)


@dataclass(frozen=True)
class ScenarioRecord:
    """Bookkeeping for one surface ``W``; ``kappa`` is ``None`` for rational ``S``."""

    kappa: Kappa | None
    ks_nef: bool
    ks2: int
    kw2: int
    lam: int
    diagram: DiagramKind
    chain: Chain
    m: int

    @classmethod
    def from_dict(cls, data: Mapping) -> "ScenarioRecord":
        try:
            kappa = data.get("kappa")
            diagram = data.get("diagram", "none")
            if isinstance(diagram, Mapping):
                diagram = parse_diagram(diagram.get("kind"), diagram.get("s"), diagram.get("gamma_self_int"))
            else:
                diagram = parse_diagram(diagram, data.get("s"), data.get("gamma_self_int"))
            return cls(
                kappa=None if kappa is None else Kappa(kappa),
                ks_nef=bool(data.get("ks_nef", kappa is not None)),
                ks2=int(data["ks2"]),
                kw2=int(data["kw2"]),
                lam=int(data.get("lambda", 0)),
                diagram=diagram,
                chain=Chain(data["chain"]),
                m=int(data["m"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad scenario record: {exc}") from None


@dataclass
class ScenarioReport:
    ledger: list[Inequality] = field(default_factory=list)
    k: int | None = None
    bound_name: str | None = None
    bound: int | None = None

    @property
    def ok(self) -> bool:
        return all(item.holds for item in self.ledger)

    @property
    def tight(self) -> bool:
        return self.bound is not None and self.k == self.bound

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "r_minus_d": self.k,
            "bound_name": self.bound_name,
            "bound": self.bound,
            "tight": self.tight,
            "ledger": [item.as_dict() for item in self.ledger],
        }


def _leading_twos(c: Sequence[int]) -> int:
    s = 0
    while s < len(c) and c[s] == 2:
        s += 1
    return s


def check_scenario(rec: ScenarioRecord) -> ScenarioReport:
    """Evaluate every inequality that applies to the scenario.

    Raises :class:`InputError` when ``kw2`` disagrees with
    ``K_S^2 - m + r - d + 1``.  A chain that is not a T-chain is a failed
    ledger line, not an exception.
    """
    report = ScenarioReport()
    c = rec.chain if isinstance(rec.chain, Chain) else Chain(rec.chain)
    cls = classify(c)
    report.ledger.append(Inequality("chain is a T-chain", int(isinstance(cls, TChain)), "==", 1))
    if not isinstance(cls, TChain):
        return report
    r, d = len(c), cls.params.d
    expected = kw2_from(rec.ks2, rec.m, r, d)
    if expected != rec.kw2:
        raise InputError(f"K_W^2 = {rec.kw2} but K_S^2 - m + r - d + 1 = {expected}")
    k = r - d
    dk2 = rec.kw2 - rec.ks2
    delta = delta_of(rec.diagram)
    report.k = k
    led = report.ledger
    led.append(Inequality("r−d ≤ 2(K_W²−K_S²)+δ−λ", k, "<=", bound_main2(dk2, delta, rec.lam)))
    led.append(Inequality("K_W²−K_S² ≥ λ", dk2, ">=", rec.lam))
    if isinstance(rec.diagram, TypeII):
        s = rec.diagram.s
        lead = max(_leading_twos(c), _leading_twos(c[::-1]))
        led.append(Inequality("leading (−2)-block length = s", lead, "==", s))
        if rec.diagram.gamma_self_int is not None:
            alpha = -rec.diagram.gamma_self_int
            led.append(Inequality("Γ self-intersection occurs in chain", int(alpha in c), "==", 1))

    if rec.ks_nef:
        if rec.kappa is None:
            raise InputError("a nef K_S needs a Kodaira dimension")
        kappa = Kappa(rec.kappa)
        if kappa is Kappa.ZERO:
            led.append(Inequality("λ = 0 (κ=0)", rec.lam, "==", 0))
        else:
            led.append(Inequality("λ ≥ 1 (κ≥1)", rec.lam, ">=", 1))
        if kappa is Kappa.TWO:
            led.append(Inequality("K_W² > K_S²", dk2, ">=", 1))
        match rec.diagram:
            case NoLong():
                led.append(Inequality("r−d ≤ no-long bound", k, "<=", bound_no_long(kappa, rec.kw2, rec.ks2)))
            case TypeI():
                led.append(Inequality("r−d ≤ type-I bound", k, "<=", bound_type_i(kappa, rec.kw2, rec.ks2)))
            case TypeII():
                led.append(nefestimate_lower(kappa, c, rec.diagram))
        report.bound = bound_theorem1(kappa, rec.kw2, rec.ks2)
        if kappa is Kappa.TWO:
            report.bound_name = "4·(K_W²−K_S²)−4" if dk2 > 1 else "1"
        else:
            report.bound_name = _THEOREM_FORMULA[kappa]
        led.append(Inequality(f"r−d ≤ {report.bound_name}", k, "<=", report.bound))
    else:
        report.bound = bound_not_nef(dk2, rec.lam, rec.diagram)
        report.bound_name = {
            NoLong: "2(K_W²−K_S²)−λ",
            TypeI: "2(K_W²−K_S²)+1−λ",
            TypeII: "4(K_W²−K_S²)−2λ",
        }[type(rec.diagram)]
        if isinstance(rec.diagram, TypeII):
            led.append(Inequality("r−d ≥ 2s (type II)", k, ">=", 2 * rec.diagram.s))
        led.append(Inequality(f"r−d ≤ {report.bound_name}", k, "<=", report.bound))
    return report


# --- chain templates -------------------------------------------------------

_TERM_RE = re.compile(r"([+-])?\s*(\d*)\s*\*?\s*([A-Za-z_][A-Za-z_0-9]*)?\s*")


@dataclass(frozen=True)
class LinearExpr:
    """``const + sum coeff * param``, parsed from text such as ``"2k+3"`` or ``"s-2"``."""

    const: int
    coeffs: tuple[tuple[str, int], ...] = ()

    @classmethod
    def parse(cls, text: str | int) -> "LinearExpr":
        if isinstance(text, int):
            return cls(text)
        if re.search(r"\w\s+\w", text):
            raise InputError(f"missing operator in {text!r}")
        src = text.replace(" ", "")
        if not src:
            raise InputError("empty expression")
        const, coeffs, pos = 0, {}, 0
        while pos < len(src):
            match = _TERM_RE.match(src, pos)
            if not match or match.end() == pos or not (match.group(2) or match.group(3)):
                raise InputError(f"cannot parse linear expression {text!r}")
            if pos and not match.group(1):
                raise InputError(f"missing operator in {text!r}")
            sign = -1 if match.group(1) == "-" else 1
            num = int(match.group(2)) if match.group(2) else 1
            if match.group(3):
                coeffs[match.group(3)] = coeffs.get(match.group(3), 0) + sign * num
            else:
                const += sign * num
            pos = match.end()
        return cls(const, tuple(sorted(coeffs.items())))

    def __call__(self, params: Mapping[str, int]) -> int:
        try:
            return self.const + sum(c * params[name] for name, c in self.coeffs)
        except KeyError as exc:
            raise InputError(f"missing template parameter {exc.args[0]!r}") from None


@dataclass(frozen=True)
class ChainTemplate:
    """A chain given as ``(value, repeat)`` segments of linear expressions."""

    segments: tuple[tuple[LinearExpr, LinearExpr], ...]

    @classmethod
    def parse(cls, spec: Sequence) -> "ChainTemplate":
        """Each item is a value expression, or a ``(value, repeat)`` pair."""
        segs = []
        for item in spec:
            value, count = (item, 1) if not isinstance(item, (tuple, list)) else item
            segs.append((LinearExpr.parse(value), LinearExpr.parse(count)))
        return cls(tuple(segs))

    def instantiate(self, **params: int) -> Chain:
        out: list[int] = []
        for value, count in self.segments:
            times = count(params)
            if times < 0:
                raise InputError(f"negative repeat count {times} for parameters {params}")
            out += [value(params)] * times
        return Chain(out)


# --- classification fixtures ----------------------------------------------


@dataclass(frozen=True)
class Fixture:
    """A chain stated in a classification or realization, with its data.

    ``record`` is ``None`` for chains that come with too little surface data
    for a scenario check.  ``expect_tight`` is ``None`` when no equality is
    claimed.
    """

    name: str
    chain: Chain
    r: int
    d: int
    kw2: int | None = None
    record: ScenarioRecord | None = None
    expect_tight: bool | None = None
    quotient: tuple[int, int] | None = None  # (order, weight) in either orientation
    params: tuple[int, int] | None = None  # (n, a)
    note: str = ""


def fixture_from_dict(data: Mapping) -> Fixture:
    """Read a fixture record from JSON.

    Keys: ``name``, ``chain``, ``r``, ``d`` and optionally ``kw2``,
    ``quotient`` (pair), ``params`` (pair ``n, a``), ``expect_tight`` and
    ``scenario`` (fields of :class:`ScenarioRecord`; ``chain`` defaults to the
    fixture's chain).
    """
    if not isinstance(data, Mapping):
        raise InputError(f"fixture must be an object, got {type(data).__name__}")
    try:
        chain = Chain(data["chain"])
        rec = None
        if data.get("scenario") is not None:
            rec = ScenarioRecord.from_dict({"chain": list(chain), **data["scenario"]})
        pair = lambda key: None if data.get(key) is None else tuple(int(x) for x in data[key])  # noqa: E731
        return Fixture(
            name=str(data["name"]),
            chain=chain,
            r=int(data["r"]),
            d=int(data["d"]),
            kw2=None if data.get("kw2") is None else int(data["kw2"]),
            record=rec,
            expect_tight=data.get("expect_tight"),
            quotient=pair("quotient"),
            params=pair("params"),
            note=str(data.get("note", "")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad fixture record {data.get('name', '?')!r}: {exc}") from None


def _family(name, template, params_list, *, kappa, ks_nef=True, m, ks2, kw2, r, d, lam, diagram, tight=True, note=""):
    tmpl = ChainTemplate.parse(template)
    out = []
    for params in params_list:
        ev = lambda e: LinearExpr.parse(e)(params)  # noqa: E731
        chain = tmpl.instantiate(**params)
        kind, *args = diagram
        dia = {"none": NoLong, "I": TypeI, "II": TypeII}[kind](*(ev(a) for a in args))
        rec = ScenarioRecord(
            kappa=None if kappa is None else Kappa(kappa),
            ks_nef=ks_nef,
            ks2=ev(ks2),
            kw2=ev(kw2),
            lam=ev(lam),
            diagram=dia,
            chain=chain,
            m=ev(m),
        )
        label = name
        shown = {k: v for k, v in params.items() if not k.startswith("_")}
        if shown:
            label += " " + ",".join(f"{k}={v}" for k, v in shown.items())
        out.append(
            Fixture(label, chain, r=ev(r), d=ev(d), kw2=ev(kw2), record=rec,
                    expect_tight=tight if isinstance(tight, (bool, type(None))) else tight(params), note=note)
        )
    return out


def classification_fixtures(max_param: int = 6) -> list[Fixture]:
    """Every chain from the extremal classifications and their realizations.

    Unbounded families are instantiated for parameters up to ``max_param``.
    """
    ks = range(1, max_param + 1)
    fx: list[Fixture] = []
    fx += _family("κ=0(A)", [2, 2, 6, 2, 4], [{}], kappa=0, m=4, ks2=0, kw2=1, r=5, d=1, lam=0,
                  diagram=("II", 2, -6))
    fx += _family("κ=0(B)", [2, 2, 6, 2, 4], [{}], kappa=0, m=4, ks2=0, kw2=1, r=5, d=1, lam=0,
                  diagram=("II", 2, -6))
    fx += _family("κ=0(C)", [(2, "2k"), 3, (2, "2k-2"), "2k+3", "2k+2"], [{"k": k} for k in range(1, 5)],
                  kappa=0, m="3k+1", ks2=0, kw2="k", r="4k+1", d=1, lam=0, diagram=("II", "2k", "-2k-3"))
    fx += _family("κ=1(A)", [2, 5, 3], [{}], kappa=1, m=2, ks2=0, kw2=1, r=3, d=1, lam=1,
                  diagram=("II", 1, -5))
    for name in ("κ=1(B)", "κ=1(C)"):
        fx += _family(name, [(2, "2k+1"), 3, (2, "2k-1"), "2k+4", "2k+3"], [{"k": k} for k in ks],
                      kappa=1, m="3k+2", ks2=0, kw2="k+1", r="4k+3", d=1, lam=1,
                      diagram=("II", "2k+1", "-2k-4"))
    dtmpl = [(2, "s"), 3, (2, "s-2"), "s+3", "s+2"]
    fx += _family("κ=1(D)", dtmpl, [{"k2": k, "_s": 2 * k + 1, "s": 2 * k + 1} for k in ks],
                  kappa=1, m="3k2+2", ks2=0, kw2="k2+1", r="2s+1", d=1, lam=1, diagram=("II", "s", "-s-3"))
    fx += _family("κ=1(E)", dtmpl, [{"k2": k, "s": 2 * k + 1} for k in ks],
                  kappa=1, m="3k2+2", ks2=0, kw2="k2+1", r="2s+1", d=1, lam=1, diagram=("II", "s", "-s-3"))
    # triple/quadruple points on the multisection: the stated (m, r, K_W^2) are
    # consistent with each other but r - d falls short of 4 K_W^2 - 2
    fx += _family("κ=1(D) with triple points", dtmpl,
                  [{"k2": k2, "k3": k3, "s": 2 * k2 + 3 * k3 + 1} for k2, k3 in ((0, 1), (1, 1), (0, 2))],
                  kappa=1, m="3k2+4k3+2", ks2=0, kw2="k2+2k3+1", r="2s+1", d=1, lam=1,
                  diagram=("II", "s", "-s-3"), tight=False,
                  note="stated as extremal, but r-d = 4K_W^2-2-2k3")
    fx += _family("κ=1(E) with 3- and 4-fold points", dtmpl,
                  [{"k2": k2, "k3": k3, "k4": k4, "s": 2 * k2 + 3 * k3 + 4 * k4 + 1}
                   for k2, k3, k4 in ((0, 1, 0), (0, 0, 1), (1, 1, 1))],
                  kappa=1, m="3k2+4k3+5k4+2", ks2=0, kw2="k2+2k3+3k4+1", r="2s+1", d=1, lam=1,
                  diagram=("II", "s", "-s-3"), tight=False,
                  note="stated as extremal, but r-d = 4K_W^2-2-2k3-4k4")
    fx += _family("κ=2(A)", [2, 5], [{"t": t} for t in range(5, 5 + max_param)], kappa=2, m=1,
                  ks2="4t-16", kw2="4t-15", r=2, d=1, lam=1, diagram=("none",))
    fx += _family("κ=2(B)", [2, 3, (2, "d-2"), 4], [{"d": 2 * mu} for mu in range(2, 6)], kappa=2, m=1,
                  ks2=1, kw2=2, r="d+1", d="d", lam=1, diagram=("none",))
    fx += _family("κ=2(C)", [2, 7, 2, 2, 3], [{}], kappa=2, m=3, ks2=1, kw2=3, r=5, d=1, lam=1,
                  diagram=("II", 1, -7))
    fx += _family("κ=2(D)", [2, 3, 2, 6, 3], [{}], kappa=2, m=3, ks2=1, kw2=3, r=5, d=1, lam=1,
                  diagram=("II", 1, -6))
    # rational S = P^2, pi(C) a septic: lambda = K_P2 . (7 H) = -21
    fx += _family("rational septic", [(2, 8), 12], [{}], kappa=None, ks_nef=False, m=16, ks2=9, kw2=2,
                  r=9, d=1, lam=-21, diagram=("I",))

    quotients = {
        "κ=1(A)": (25, 9),
        "κ=2(C)": (81, 35),
        "κ=2(D)": (121, 43),
        "rational septic": (100, 9),
    }
    params = {"κ=0(A)": (10, 3), "rational septic": (10, 9)}
    out = []
    for f in fx:
        q = quotients.get(f.name)
        if f.name.startswith("κ=2(B)"):
            mu = f.d // 2
            q = (18 * mu, 6 * mu - 1)
        out.append(Fixture(f.name, f.chain, f.r, f.d, f.kw2, f.record, f.expect_tight, q, params.get(f.name), f.note))
    out.append(Fixture("fibration with λ unbounded", Chain([4, 2, 6, 2, 6, 2, 2, 2, 4, 2, 2]), r=11, d=1,
                       quotient=(10000, 2899), params=(100, 29)))
    return out


@dataclass
class FixtureResult:
    fixture: Fixture
    checks: list[Inequality] = field(default_factory=list)
    scenario: ScenarioReport | None = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        if self.error:
            return False
        if not all(c.holds for c in self.checks):
            return False
        return self.scenario is None or self.scenario.ok

    @property
    def line(self) -> str:
        f = self.fixture
        status = "ok" if self.ok else "FAIL"
        if self.error:
            return f"{f.name}: FAIL ({self.error})"
        sc = self.scenario
        if sc is None or sc.k is None:
            return f"{f.name}: {f.chain} r={f.r} d={f.d} {status}"
        rel = "=" if sc.tight else "<"
        tag = " TIGHT" if sc.tight else ""
        if f.expect_tight is False:
            tag += " (not extremal)"
        text = f"{f.name}: r−d={sc.k}{rel}{sc.bound_name}{tag}"
        if sc.bound_name and not sc.bound_name.isdigit():
            text += f" (bound {sc.bound})"
        return f"{text} {status}"

    def as_dict(self) -> dict:
        f = self.fixture
        return {
            "name": f.name,
            "chain": list(f.chain),
            "ok": self.ok,
            "line": self.line,
            "error": self.error,
            "checks": [c.as_dict() for c in self.checks],
            "scenario": None if self.scenario is None else self.scenario.as_dict(),
        }


def verify_fixture(f: Fixture) -> FixtureResult:
    res = FixtureResult(f)
    try:
        c = Chain(f.chain)
        cls = classify(c)
        is_t = isinstance(cls, TChain)
        res.checks.append(Inequality("chain is a T-chain", int(is_t), "==", 1))
        if not is_t:
            return res
        p = cls.params
        res.checks.append(Inequality("r as stated", len(c), "==", f.r))
        res.checks.append(Inequality("d as stated", p.d, "==", f.d))
        if f.params is not None:
            n, a = f.params
            res.checks.append(Inequality("index n as stated", p.n, "==", n))
            orient = a if a == p.a else p.n - a
            res.checks.append(Inequality("a as stated (either orientation)", p.a, "==", orient))
        if f.quotient is not None:
            fwd, bwd = tuple(hj_eval(c)), tuple(hj_eval(reverse(c)))
            res.checks.append(Inequality("quotient as stated (either orientation)",
                                         int(tuple(f.quotient) in (fwd, bwd)), "==", 1))
        if f.record is not None:
            rec = f.record
            res.checks.append(Inequality("K_W² = K_S²−m+r−d+1", kw2_from(rec.ks2, rec.m, len(c), p.d), "==", f.kw2))
            res.scenario = check_scenario(rec)
            if f.expect_tight is not None:
                res.checks.append(Inequality("tightness as expected", int(res.scenario.tight), "==", int(f.expect_tight)))
    except (InputError, DomainError) as exc:
        res.error = str(exc)
    return res
