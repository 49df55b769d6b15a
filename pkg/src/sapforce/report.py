"""Parameter reports, survey rows, inequality validation, result caching."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from pathlib import Path
from typing import Callable

from .canon import canonical_form
from .graphs import Graph
from .minors import hadwiger, vertex_cover_number
from .sapgame import is_zsap_zero, sap_forcing_number, vc_forcing_number
from .xi import T3FamilyData, m_small, t3_minor, xi
from .zeroforcing import Rule, min_zfs

CODE_VERSION = "0.1.0"

PARAM_NAMES = (
    "Z", "Zl", "Zplus", "FloorZ",
    "Zsap", "Zsapl", "Zsapp", "Zvc", "Zvcl",
    "beta_complement", "hadwiger", "M_small", "xi",
)
FLAG_NAMES = ("zsap_zero", "zsapl_zero", "zsapp_zero", "t3_minor")


class ReportInvariantError(RuntimeError):
    """A computed report violates one of the known inequality chains."""


@dataclass
class ParameterReport:
    graph6: str
    params: dict[str, int] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)
    certificates: dict[str, object] = field(default_factory=dict)

    def validate(self) -> None:
        p, f = self.params, self.flags

        def chain(*names: str) -> None:
            have = [n for n in names if n in p]
            for a, b in zip(have, have[1:]):
                if p[a] > p[b]:
                    raise ReportInvariantError(
                        f"{self.graph6}: expected {a} <= {b}, got {p[a]} > {p[b]}")

        chain("Zplus", "Zl", "Z")
        chain("FloorZ", "Z")
        chain("Zsapp", "Zsapl", "Zsap")
        chain("Zvcl", "Zvc")
        chain("xi", "FloorZ")
        if "Zvc" in p and "beta_complement" in p and p["Zvc"] > p["beta_complement"]:
            raise ReportInvariantError(
                f"{self.graph6}: vertex-cover game value exceeds the complement cover number")
        if "xi" in p and "M_small" in p and "Zvc" in p:
            if p["M_small"] - p["Zvc"] > p["xi"]:
                raise ReportInvariantError(
                    f"{self.graph6}: M - Zvc exceeds xi")
        if "xi" in p and "hadwiger" in p and p["hadwiger"] - 1 > p["xi"]:
            raise ReportInvariantError(
                f"{self.graph6}: clique minor bound exceeds xi")
        for flag, param in (("zsap_zero", "Zsap"), ("zsapl_zero", "Zsapl"),
                            ("zsapp_zero", "Zsapp")):
            if flag in f and param in p and f[flag] != (p[param] == 0):
                raise ReportInvariantError(
                    f"{self.graph6}: flag {flag} disagrees with {param}")

    def to_json(self) -> str:
        payload = {
            "graph6": self.graph6,
            "params": dict(sorted(self.params.items())),
            "flags": dict(sorted(self.flags.items())),
            "certificates": self.certificates,
            "version": CODE_VERSION,
        }
        return json.dumps(payload, sort_keys=True)


def _param_computers(t3: T3FamilyData | None) -> dict[str, Callable[[Graph], object]]:
    return {
        "Z": lambda g: min_zfs(g, Rule.Z, cap=max(10, g.n))[0],
        "Zl": lambda g: min_zfs(g, Rule.ZL, cap=max(10, g.n))[0],
        "Zplus": lambda g: min_zfs(g, Rule.ZPLUS, cap=max(10, g.n))[0],
        "FloorZ": lambda g: min_zfs(g, Rule.FLOOR, cap=max(10, g.n))[0],
        "Zsap": lambda g: sap_forcing_number(g, Rule.Z)[0],
        "Zsapl": lambda g: sap_forcing_number(g, Rule.ZL)[0],
        "Zsapp": lambda g: sap_forcing_number(g, Rule.ZPLUS)[0],
        "Zvc": lambda g: vc_forcing_number(g, Rule.Z, cap=max(10, g.n))[0],
        "Zvcl": lambda g: vc_forcing_number(g, Rule.ZL, cap=max(10, g.n))[0],
        "beta_complement": lambda g: vertex_cover_number(g.complement(), cap=max(10, g.n)),
        "hadwiger": lambda g: hadwiger(g, cap=max(10, g.n)),
        "M_small": m_small,
        "xi": lambda g: xi(g, t3).value,
    }


_FLAG_COMPUTERS: dict[str, Callable[[Graph], bool]] = {
    "zsap_zero": lambda g: is_zsap_zero(g, Rule.Z),
    "zsapl_zero": lambda g: is_zsap_zero(g, Rule.ZL),
    "zsapp_zero": lambda g: is_zsap_zero(g, Rule.ZPLUS),
}


def compute_report(
    g: Graph,
    params: list[str],
    flags: list[str] | None = None,
    t3: T3FamilyData | None = None,
    cache: "ResultCache | None" = None,
    collect_guards: bool = False,
) -> ParameterReport | tuple[ParameterReport, dict[str, str]]:
    """Compute the requested fields; guard errors carry the parameter name.

    With ``collect_guards`` the cap/guard refusals do not abort the report:
    they come back in a side map so a batch caller can keep the parameters
    that were computable.
    """
    from .graphs import CapExceededError
    from .xi import MSizeError

    g6 = canonical_form(g, cap=max(10, g.n)).bytes
    report = ParameterReport(g6)
    refused: dict[str, str] = {}
    computers = _param_computers(t3)
    for name in params:
        if name not in computers:
            raise ValueError(f"unknown parameter {name!r}; expected one of {PARAM_NAMES}")
        cached = cache.get(g6, name) if cache else None
        if cached is not None:
            report.params[name] = cached
            continue
        try:
            if name == "xi":
                cert = xi(g, t3)
                report.params[name] = cert.value
                report.certificates["xi"] = cert.to_record(g)
            else:
                report.params[name] = computers[name](g)
        except (CapExceededError, MSizeError) as exc:
            if collect_guards:
                refused[name] = str(exc)
                continue
            exc.parameter = name  # let the CLI name the offender
            raise
        except Exception as exc:
            exc.parameter = name
            raise
        if cache:
            cache.put(g6, name, report.params[name])
    for name in flags or []:
        if name == "t3_minor":
            report.flags[name] = t3_minor(g, t3, cap=max(10, g.n))[0]
        elif name in _FLAG_COMPUTERS:
            report.flags[name] = _FLAG_COMPUTERS[name](g)
        else:
            raise ValueError(f"unknown flag {name!r}; expected one of {FLAG_NAMES}")
    report.validate()
    if collect_guards:
        return report, refused
    return report


# -- survey rows --------------------------------------------------------

def _round2(count: int, total: int) -> str:
    if total == 0:
        return "0.00"
    return str((Decimal(count) / Decimal(total)).quantize(
        Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class SurveyRow:
    n: int
    total: int
    zsap0: int
    zsapl0: int
    zsapp0: int

    def __post_init__(self) -> None:
        for c in (self.zsap0, self.zsapl0, self.zsapp0):
            if not 0 <= c <= self.total:
                raise ValueError("survey counts must lie within the total")

    @property
    def proportions(self) -> tuple[str, str, str]:
        return (_round2(self.zsap0, self.total),
                _round2(self.zsapl0, self.total),
                _round2(self.zsapp0, self.total))

    CSV_HEADER = "n,total,zsap0,zsapl0,zsapp0,p_zsap0,p_zsapl0,p_zsapp0"

    def to_csv(self) -> str:
        p = self.proportions
        return (f"{self.n},{self.total},{self.zsap0},{self.zsapl0},"
                f"{self.zsapp0},{p[0]},{p[1]},{p[2]}")


def survey_graphs(graphs: list[Graph], n: int) -> SurveyRow:
    counts = [0, 0, 0]
    for g in graphs:
        for idx, rule in enumerate((Rule.Z, Rule.ZL, Rule.ZPLUS)):
            if is_zsap_zero(g, rule):
                counts[idx] += 1
    return SurveyRow(n, len(graphs), *counts)


# -- append-only result cache --------------------------------------------
#
# One JSON record per line, keyed by (canonical graph6, parameter name,
# code version); the file is never rewritten, so it doubles as an audit log.

class ResultCache:
    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._store: dict[tuple[str, str], int] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                if not line.strip():
                    continue
                rec = json.loads(line)
                if rec.get("version") == CODE_VERSION:
                    self._store[(rec["graph6"], rec["param"])] = rec["value"]

    def get(self, graph6: str, param: str) -> int | None:
        return self._store.get((graph6, param))

    def put(self, graph6: str, param: str, value: int) -> None:
        if (graph6, param) in self._store:
            return
        self._store[(graph6, param)] = value
        with self.path.open("a") as fh:
            fh.write(json.dumps({"graph6": graph6, "param": param,
                                 "value": value, "version": CODE_VERSION},
                                sort_keys=True) + "\n")
