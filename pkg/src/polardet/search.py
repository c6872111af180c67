"""Exhaustive, sharded and resumable scans over polynomial families.

Every scan walks a finite instance space in a fixed order.  A run covers a
contiguous rank range (its shard), stops cleanly when the determinant budget
runs out and records the next unprocessed rank as ``resume_rank``.  Reports
are plain JSON; a report can be fed back in to continue, and shard reports
fold into the unsharded report with :func:`merge_reports`.

Scans and the inequality each one exercises:

``eq-7-exhaustive``  det T(n, |D_N|^2) <= det T(n, |f|^2) over all Littlewood f
``eq-12``            gamma / mixed discriminants of Dirichlet versus gapped Grams
``eq-13-gabriel``    constant coefficient of prod |f_k|^2 versus the kernels
``eq-14``            trace(A_1' ... A_s') <= trace(A_1 ... A_s)
"""

from __future__ import annotations

import copy
import io
import itertools
import json
import random
import shlex
from contextlib import redirect_stdout
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Iterable, Iterator, Sequence

from . import __version__
from .config import max_evals
from .errors import InvalidArgument, InvalidFamily
from .exact import det_exact
from .gaussian import abs2, format_number, parse_number, real
from .mixed import gamma_multilinear, multinomial
from .poly import (
    ENUMERATION_ORDER_VERSION,
    GAPPED,
    LITTLEWOOD,
    SparsePoly,
    dirichlet,
    enumerate_gapped,
    enumerate_littlewood,
    format_poly,
    gapped_count,
    littlewood_count,
    validate_coeff_set,
)
from .toeplitz import _as_weights, gram, toeplitz_rect, toeplitz_symbol
from .verify import check_trace_chain, hlg_integral

SCHEMA = "polardet/1"

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_CERTIFICATE = 3
EXIT_BUDGET = 4

CONJECTURES = ("eq-7-exhaustive", "eq-12", "eq-13-gabriel", "eq-14")

MAX_LISTED = 32
MAX_CERTIFICATES = 64

RESTRICTION = (
    "finite search space: supports capped at max_degree and coefficients drawn "
    "from coeff_set; the unrestricted gapped family is infinite"
)


# Tasks and certificates ----------------------------------------------------------

@dataclass(frozen=True)
class SearchTask:
    conjecture: str
    config: dict = field(default_factory=dict, hash=False)
    shard_index: int = 0
    shard_count: int = 1
    budget: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.conjecture not in CONJECTURES:
            raise InvalidArgument(f"unknown conjecture {self.conjecture!r}; expected one of {CONJECTURES}")
        if self.shard_count < 1:
            raise InvalidArgument("shard_count must be >= 1")
        if not 0 <= self.shard_index < self.shard_count:
            raise InvalidArgument(f"shard_index {self.shard_index} outside 0..{self.shard_count - 1}")
        if self.budget is not None and self.budget < 0:
            raise InvalidArgument("budget must be nonnegative")


@dataclass(frozen=True)
class Certificate:
    """Exact record of one violating instance plus a command that recomputes it."""

    conjecture: str
    instance: dict
    lhs: str
    rhs: str
    command: str
    relation: str = "<="
    notes: tuple = ()

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "conjecture": self.conjecture,
            "instance": self.instance,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "command": self.command,
            "notes": list(self.notes),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Certificate":
        return cls(obj["conjecture"], obj["instance"], obj["lhs"], obj["rhs"], obj["command"],
                   obj.get("relation", "<="), tuple(obj.get("notes", ())))

    def reproduce(self) -> tuple[str, str]:
        """Run :attr:`command` in-process and return the recomputed ``(lhs, rhs)``."""
        from . import cli

        argv = shlex.split(self.command)
        if argv and argv[0] == "polardet":
            argv = argv[1:]
        buf = io.StringIO()
        with redirect_stdout(buf):
            cli.run(argv + ["--format", "json"])
        report = json.loads(buf.getvalue())
        first = report["reports"][0]
        return first["lhs"], first["rhs"]


def _cmd(*parts) -> str:
    return " ".join(["polardet", *(shlex.quote(str(p)) for p in parts)])


def _f_flags(fs: Iterable[SparsePoly]) -> list[str]:
    out = []
    for f in fs:
        out += ["--f", format_poly(f)]
    return out


# Sharding ------------------------------------------------------------------------

def split_range(total: int, count: int) -> list[tuple[int, int]]:
    """``count`` contiguous ranges over ``range(total)``, sizes differing by at most one."""
    if count < 1:
        raise InvalidArgument("shard count must be >= 1")
    base, extra = divmod(total, count)
    out, start = [], 0
    for i in range(count):
        stop = start + base + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def shard_plan(task: SearchTask) -> list[tuple[int, int]]:
    return split_range(_make_scan(task).count(), task.shard_count)


# Families ------------------------------------------------------------------------

def _family_polys(N: int, family: str, max_degree: int | None, coeff_set) -> list[SparsePoly]:
    if family == LITTLEWOOD:
        return list(enumerate_littlewood(N))
    if family == GAPPED:
        return list(enumerate_gapped(N, max_degree, coeff_set))
    raise InvalidFamily(f"unknown family {family!r}")


def _family_config(cfg: dict, default_family: str = GAPPED) -> dict:
    family = cfg.get("family", default_family)
    out = {"family": family}
    if family == GAPPED:
        if cfg.get("max_degree") is None:
            raise InvalidArgument("gapped families need max_degree")
        cs = validate_coeff_set(parse_number(str(c)) for c in cfg.get("coeff_set", ["1", "-1"]))
        out["max_degree"] = int(cfg["max_degree"])
        out["coeff_set"] = [format_number(c) for c in cs]
    elif family != LITTLEWOOD:
        raise InvalidFamily(f"unknown family {family!r}")
    return out



def _polys_of(N: int, fam: dict) -> list[SparsePoly]:
    cs = [parse_number(c) for c in fam.get("coeff_set", [])]
    return _family_polys(N, fam["family"], fam.get("max_degree"), cs)


def _modulus_one(fam: dict) -> bool:
    if fam["family"] == LITTLEWOOD:
        return True
    return all(abs2(parse_number(c)) == 1 for c in fam["coeff_set"])


def _pick(items: Iterable, ranks: Sequence[int]) -> Iterator:
    """Elements of ``items`` at the sorted positions ``ranks``, in one pass."""
    it = iter(items)
    pos = 0
    for r in ranks:
        for _ in range(r - pos):
            next(it)
        pos = r + 1
        yield next(it)


# Scan definitions ----------------------------------------------------------------

class _Scan:
    """One instance space with a foldable summary.

    ``summary`` is kept JSON-shaped (exact numbers as strings) so that a
    report read back from disk resumes with exactly the same state.
    """

    conjecture = ""
    cost = 1

    def __init__(self, config: dict, seed: int):
        self.seed = seed
        self.config = self.normalize(dict(config))

    def normalize(self, cfg: dict) -> dict:
        return cfg

    def count(self) -> int:
        raise NotImplementedError

    def instances(self, start: int, stop: int) -> Iterator[tuple[int, Any]]:
        raise NotImplementedError

    def initial_summary(self) -> dict:
        return {}

    def step(self, summary: dict, rank: int, inst) -> list[Certificate]:
        raise NotImplementedError

    def merge(self, a: dict, b: dict) -> dict:
        raise NotImplementedError

    def header_extra(self) -> dict:
        return {}


def _push(lst: list, item):
    if len(lst) < MAX_LISTED:
        lst.append(item)


class MinimizerScan(_Scan):
    """``det T(n, psi_f)`` over all Littlewood ``f``; ``psi_f = |f|^2`` or ``1 + t|f|^2``."""

    conjecture = "eq-7-exhaustive"

    def normalize(self, cfg):
        N, n = int(cfg["N"]), int(cfg["n"])
        if N < 1 or n < 1:
            raise InvalidArgument("N and n must be >= 1")
        ts = cfg.get("t")
        if ts is not None:
            ts = [format_number(w) for w in _as_weights(ts)]
            if not ts:
                ts = None
        self.cost = 1 if ts is None else len(ts)
        return {"N": N, "n": n, "t": ts}

    def keys(self) -> list[str]:
        ts = self.config["t"]
        return ["plain"] if ts is None else [f"t={t}" for t in ts]

    def _det(self, f: SparsePoly, key: str):
        n = self.config["n"]
        if key == "plain":
            return det_exact(toeplitz_symbol([f], [1], n))
        t = parse_number(key[2:])
        return det_exact(toeplitz_symbol([dirichlet(1), f], [1, t], n))

    def _command(self, f: SparsePoly, key: str) -> str:
        n = self.config["n"]
        if key == "plain":
            return _cmd("verify-det", "--f", format_poly(f), "--t", "1", "--n", n)
        return _cmd("verify-det", "--f", "1", "--t", "1", "--f", format_poly(f), "--t", key[2:], "--n", n)

    def count(self):
        return littlewood_count(self.config["N"])

    def instances(self, start, stop):
        N = self.config["N"]
        return zip(range(start, stop), enumerate_littlewood(N, start, stop))

    def initial_summary(self):
        D = dirichlet(self.config["N"])
        return {
            key: {
                "dirichlet": format_number(self._det(D, key)),
                "min": None, "min_count": 0, "min_achievers": [],
                "max": None, "max_count": 0, "max_achievers": [],
                "below_dirichlet": 0,
            }
            for key in self.keys()
        }

    def step(self, summary, rank, f):
        certs = []
        text = format_poly(f)
        for key in self.keys():
            s = summary[key]
            d = self._det(f, key)
            dv = format_number(d)
            for side, better in (("min", lambda a, b: a < b), ("max", lambda a, b: a > b)):
                cur = s[side]
                if cur is None or better(d, parse_number(cur)):
                    s[side], s[f"{side}_count"], s[f"{side}_achievers"] = dv, 1, [text]
                elif d == parse_number(cur):
                    s[f"{side}_count"] += 1
                    _push(s[f"{side}_achievers"], text)
            base = parse_number(s["dirichlet"])
            if d < base:
                s["below_dirichlet"] += 1
                certs.append(Certificate(
                    self.conjecture,
                    {"f": text, "N": self.config["N"], "n": self.config["n"], "weight": key},
                    s["dirichlet"], dv, self._command(f, key),
                    notes=("proved region: a violation here is an implementation defect",),
                ))
        return certs

    def merge(self, a, b):
        out = copy.deepcopy(a)
        for key, sb in b.items():
            s = out[key]
            s["below_dirichlet"] += sb["below_dirichlet"]
            for side, better in (("min", lambda x, y: x < y), ("max", lambda x, y: x > y)):
                if sb[side] is None:
                    continue
                if s[side] is None or better(parse_number(sb[side]), parse_number(s[side])):
                    s[side], s[f"{side}_count"] = sb[side], sb[f"{side}_count"]
                    s[f"{side}_achievers"] = list(sb[f"{side}_achievers"])
                elif parse_number(sb[side]) == parse_number(s[side]):
                    s[f"{side}_count"] += sb[f"{side}_count"]
                    for x in sb[f"{side}_achievers"]:
                        _push(s[f"{side}_achievers"], x)
        return out


class Eq12Scan(_Scan):
    """Full gamma tables of Dirichlet Grams against Grams of family members.

    Family members with identical ``n x n`` Gram matrices give identical
    tables, so each slot ranges over Gram classes (first member by rank is
    the representative).  Slots with equal ``N`` are interchangeable, so
    class tuples within such a group are taken nondecreasing.
    """

    conjecture = "eq-12"

    def normalize(self, cfg):
        n = int(cfg["n"])
        Ns = sorted(int(v) for v in cfg["N"])
        if n < 1 or not Ns or min(Ns) < 1:
            raise InvalidArgument("need n >= 1 and at least one N >= 1")
        out = {"n": n, "N": Ns}
        out.update(_family_config(cfg))
        sample = cfg.get("sample")
        out["sample"] = None if sample is None else int(sample)
        self.cost = len(Ns) ** n
        self._setup(out)
        return out

    def _setup(self, cfg):
        n = cfg["n"]
        self.classes: dict[int, list[tuple[SparsePoly, int]]] = {}
        for N in sorted(set(cfg["N"])):
            seen: dict[tuple, list] = {}
            for f in _polys_of(N, cfg):
                key = gram(toeplitz_rect(f, n)).rows
                if key in seen:
                    seen[key][1] += 1
                else:
                    seen[key] = [f, 1]
            self.classes[N] = [(f, m) for f, m in seen.values()]
        self.groups = [(N, len(list(g))) for N, g in itertools.groupby(cfg["N"])]
        Ds = [gram(toeplitz_rect(dirichlet(N), n)) for N in cfg["N"]]
        self.dirichlet_table = gamma_multilinear(Ds, budget=max(len(Ds) ** n, 1))
        full = 1
        for N, g in self.groups:
            full *= comb(len(self.classes[N]) + g - 1, g)
        self.full_count = full
        if cfg["sample"] is not None:
            k = min(cfg["sample"], full)
            self.sampled = sorted(random.Random(self.seed).sample(range(full), k))
        else:
            self.sampled = None

    def header_extra(self):
        return {
            "classes": {str(N): len(c) for N, c in self.classes.items()},
            "family_sizes": {str(N): sum(m for _, m in c) for N, c in self.classes.items()},
            "full_count": self.full_count,
            "seed": self.seed if self.sampled is not None else None,
        }

    def count(self):
        return self.full_count if self.sampled is None else len(self.sampled)

    def _all(self) -> Iterator[tuple]:
        per_group = [itertools.combinations_with_replacement(range(len(self.classes[N])), g)
                     for N, g in self.groups]
        for combo in itertools.product(*[list(p) for p in per_group]):
            yield tuple(itertools.chain.from_iterable(combo))

    def instances(self, start, stop):
        if self.sampled is None:
            return zip(range(start, stop), itertools.islice(self._all(), start, stop))
        return zip(range(start, stop), _pick(self._all(), self.sampled[start:stop]))

    def initial_summary(self):
        return {"comparisons": 0, "strict": 0, "equal": 0, "violations": 0}

    def step(self, summary, rank, inst):
        n, Ns = self.config["n"], self.config["N"]
        fs = [self.classes[N][c][0] for N, c in zip(Ns, inst)]
        table = gamma_multilinear([gram(toeplitz_rect(f, n)) for f in fs], budget=self.cost)
        certs = []
        for idx, g in self.dirichlet_table.items():
            gp = table[idx]
            summary["comparisons"] += 1
            if g < gp:
                summary["strict"] += 1
            elif g == gp:
                summary["equal"] += 1
            else:
                summary["violations"] += 1
                m = multinomial(idx)
                ix = ",".join(map(str, idx))
                certs.append(Certificate(
                    self.conjecture,
                    {"f": [format_poly(f) for f in fs], "N": list(Ns), "n": n, "idx": list(idx),
                     "mixed_discriminant": [format_number(Fraction(g, m)), format_number(Fraction(gp, m))]},
                    format_number(g), format_number(gp),
                    _cmd("gamma", *_f_flags(fs), "--n", n, "--idx", ix, "--compare"),
                ))
        return certs

    def merge(self, a, b):
        return {k: a[k] + b[k] for k in a}


class _TupleScan(_Scan):
    """Multisets of ``s`` members of one family (or diagonal tuples ``(f, ..., f)``)."""

    def normalize(self, cfg):
        s, N = int(cfg["s"]), int(cfg["N"])
        if s < 1 or N < 1:
            raise InvalidArgument("s and N must be >= 1")
        out = {"s": s, "N": N, "diagonal": bool(cfg.get("diagonal", False))}
        out.update(_family_config(cfg, cfg.get("family", GAPPED)))
        self.polys = _polys_of(N, out)
        self.proved = _modulus_one(out)
        return out

    def count(self):
        m = len(self.polys)
        return m if self.config["diagonal"] else comb(m + self.config["s"] - 1, self.config["s"])

    def _all(self):
        s = self.config["s"]
        if self.config["diagonal"]:
            return ((f,) * s for f in self.polys)
        return itertools.combinations_with_replacement(self.polys, s)

    def instances(self, start, stop):
        return zip(range(start, stop), itertools.islice(self._all(), start, stop))

    def header_extra(self):
        return {"proved_region": self.proved, "family_size": len(self.polys)}

    def initial_summary(self):
        return {"holds": 0, "equal": 0, "violations": 0, "equality_cases": []}

    def evaluate(self, fs) -> tuple:
        raise NotImplementedError

    def step(self, summary, rank, fs):
        lhs, rhs, command, extra = self.evaluate(fs)
        texts = [format_poly(f) for f in fs]
        if lhs < rhs:
            summary["holds"] += 1
        elif lhs == rhs:
            summary["equal"] += 1
            _push(summary["equality_cases"], {"f": texts, "value": format_number(lhs)})
        else:
            summary["violations"] += 1
            note = ("proved region: a violation here is an implementation defect" if self.proved
                    else "outside the proved region: exploratory finding")
            return [Certificate(self.conjecture, {"f": texts, **extra},
                                format_number(lhs), format_number(rhs), command, notes=(note,))]
        return []

    def merge(self, a, b):
        out = {k: a[k] + b[k] for k in ("holds", "equal", "violations")}
        cases = list(a["equality_cases"])
        for c in b["equality_cases"]:
            _push(cases, c)
        out["equality_cases"] = cases
        return out


class GabrielScan(_TupleScan):
    conjecture = "eq-13-gabriel"

    def normalize(self, cfg):
        out = super().normalize(cfg)
        self._dirichlet_value = hlg_integral([dirichlet(out["N"])] * out["s"])
        return out

    def evaluate(self, fs):
        return (hlg_integral(fs), self._dirichlet_value,
                _cmd("hlg", *_f_flags(fs)), {"s": len(fs)})


class TraceScan(_TupleScan):
    conjecture = "eq-14"

    def normalize(self, cfg):
        cfg = dict(cfg)
        out = super().normalize(cfg)
        if not self.proved:
            raise InvalidFamily("trace chains need coefficients of modulus 1")
        out["n"] = int(cfg["n"])
        return out

    def evaluate(self, fs):
        rep = check_trace_chain(list(fs), self.config["n"])
        return (real(rep.lhs), real(rep.rhs),
                _cmd("trace-chain", *_f_flags(fs), "--n", self.config["n"]),
                {"s": len(fs), "n": self.config["n"]})


_SCANS = {
    "eq-7-exhaustive": MinimizerScan,
    "eq-12": Eq12Scan,
    "eq-13-gabriel": GabrielScan,
    "eq-14": TraceScan,
}


def _make_scan(task: SearchTask) -> _Scan:
    return _SCANS[task.conjecture](task.config, task.seed)


# Driver --------------------------------------------------------------------------

def _header(task: SearchTask, scan: _Scan, start: int, stop: int) -> dict:
    return {
        "schema": SCHEMA,
        "tool_version": __version__,
        "enumeration_order_version": ENUMERATION_ORDER_VERSION,
        "conjecture": task.conjecture,
        "config": scan.config,
        "space": scan.header_extra(),
        "restriction": RESTRICTION,
        "total_instances": scan.count(),
        "shard": [task.shard_index, task.shard_count],
        "range": [start, stop],
        "cost_per_instance": scan.cost,
    }


_HEADER_KEYS = ("schema", "tool_version", "enumeration_order_version", "conjecture", "config",
                "space", "restriction", "total_instances", "shard", "range", "cost_per_instance")


def run_task(task: SearchTask, resume: dict | None = None) -> dict:
    """Process the task's shard (or its remainder, when resuming) within budget."""
    scan = _make_scan(task)
    start, stop = split_range(scan.count(), task.shard_count)[task.shard_index]
    header = _header(task, scan, start, stop)
    if resume is not None:
        for key in _HEADER_KEYS:
            if json.dumps(resume.get(key), sort_keys=True) != json.dumps(header[key], sort_keys=True):
                raise InvalidArgument(f"cannot resume: report field {key!r} does not match this task")
        summary = copy.deepcopy(resume["summary"])
        rank = int(resume["resume_rank"])
        done, evals = int(resume["instances_done"]), int(resume["evaluations"])
        certs = list(resume["certificates"])
        violations = int(resume["violations"])
    else:
        summary = scan.initial_summary()
        rank, done, evals, certs, violations = start, 0, 0, [], 0
    cap = max_evals(task.budget)
    spent = 0
    status = "complete"
    for r, inst in scan.instances(rank, stop):
        if spent + scan.cost > cap:
            status = "budget-exceeded"
            break
        found = scan.step(summary, r, inst)
        violations += len(found)
        for c in found:
            if len(certs) < MAX_CERTIFICATES:
                certs.append(c.to_json_obj())
        spent += scan.cost
        evals += scan.cost
        done += 1
        rank = r + 1
    return {
        **header,
        "status": status,
        "resume_rank": rank,
        "instances_done": done,
        "evaluations": evals,
        "violations": violations,
        "certificates": certs,
        "summary": summary,
    }


def merge_reports(reports: Sequence[dict]) -> dict:
    """Fold complete shard reports, in shard order, into the unsharded report."""
    if not reports:
        raise InvalidArgument("nothing to merge")
    reports = sorted(reports, key=lambda r: r["shard"][0])
    count = reports[0]["shard"][1]
    if [r["shard"] for r in reports] != [[i, count] for i in range(count)]:
        raise InvalidArgument("shard reports must cover every shard exactly once")
    for r in reports:
        if r["status"] != "complete":
            raise InvalidArgument(f"shard {r['shard'][0]} is not complete (resume_rank {r['resume_rank']})")
        for key in ("schema", "tool_version", "enumeration_order_version", "conjecture",
                    "config", "space", "total_instances"):
            if r[key] != reports[0][key]:
                raise InvalidArgument(f"shard reports disagree on {key!r}")
    first = reports[0]
    task = SearchTask(first["conjecture"], first["config"], seed=(first["space"] or {}).get("seed") or 0)
    scan = _make_scan(task)
    summary = scan.initial_summary()
    certs: list = []
    for r in reports:
        summary = scan.merge(summary, r["summary"])
        for c in r["certificates"]:
            if len(certs) < MAX_CERTIFICATES:
                certs.append(c)
    total = first["total_instances"]
    return {
        **{k: first[k] for k in _HEADER_KEYS},
        "shard": [0, 1],
        "range": [0, total],
        "status": "complete",
        "resume_rank": total,
        "instances_done": sum(r["instances_done"] for r in reports),
        "evaluations": sum(r["evaluations"] for r in reports),
        "violations": sum(r["violations"] for r in reports),
        "certificates": certs,
        "summary": summary,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def exit_code(report: dict) -> int:
    if report["violations"]:
        return EXIT_CERTIFICATE
    if report["status"] != "complete":
        return EXIT_BUDGET
    return EXIT_OK


# Convenience entry points --------------------------------------------------------

def scan_minimizer(N: int, n: int, ts: Sequence | None = None, **kw) -> dict:
    return run_task(SearchTask("eq-7-exhaustive", {"N": N, "n": n, "t": ts}, **kw))


def scan_eq12(
    n: int,
    Ns: Sequence[int],
    max_degree: int | None = None,
    coeff_set: Sequence = ("1", "-1"),
    family: str = GAPPED,
    sample: int | None = None,
    **kw,
) -> dict:
    cfg = {"n": n, "N": list(Ns), "family": family, "sample": sample}
    if family == GAPPED:
        cfg.update(max_degree=max_degree, coeff_set=[str(c) for c in coeff_set])
    return run_task(SearchTask("eq-12", cfg, **kw))


def scan_gabriel(
    s: int,
    N: int,
    max_degree: int | None = None,
    coeff_set: Sequence = ("1", "-1"),
    family: str = GAPPED,
    diagonal: bool = False,
    **kw,
) -> dict:
    cfg = {"s": s, "N": N, "family": family, "diagonal": diagonal}
    if family == GAPPED:
        cfg.update(max_degree=max_degree, coeff_set=[str(c) for c in coeff_set])
    return run_task(SearchTask("eq-13-gabriel", cfg, **kw))


def scan_trace_chain(
    s: int,
    N: int,
    n: int,
    max_degree: int | None = None,
    coeff_set: Sequence = ("1", "-1"),
    family: str = GAPPED,
    diagonal: bool = False,
    **kw,
) -> dict:
    cfg = {"s": s, "N": N, "n": n, "family": family, "diagonal": diagonal}
    if family == GAPPED:
        cfg.update(max_degree=max_degree, coeff_set=[str(c) for c in coeff_set])
    return run_task(SearchTask("eq-14", cfg, **kw))


def certificates(report: dict) -> list[Certificate]:
    return [Certificate.from_json_obj(c) for c in report["certificates"]]
