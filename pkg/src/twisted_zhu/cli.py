"""Command line front end: ``twisted-zhu compute | verify | scan``.

Settings come from an optional flat ``key = value`` config file and are
overridden by flags.  Every number is read as an exact rational.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .exact import fmt, rat
from .lie import (LoopAlgebra, check_antisymmetry, check_dl_identity, check_jacobi, check_lie_homomorphism,
                  check_module_bracket, generators)
from .modules import (GradedModule, check_contraction, check_layer_spectra, check_layers,
                      check_representation, commutator_consistency, make_module, omega_extract)
from .voa import make_voa
from .zhu import (AlgebraPresentation, LevelIndex, build_algebra, check_antiisomorphism, check_associativity,
                  check_associativity_vectors, check_center, check_commutators, check_identity,
                  check_odd_vanishing, check_surjection, check_two_sided_ideal, make_report)

REPORT_SCHEMA = "twisted-zhu/report/v1"
SCAN_SCHEMA = "twisted-zhu/scan/v1"
HARD_CUTOFF = 10

ALGEBRA_CHECKS = ["associativity", "associativity-vectors", "identity", "center", "ideal", "surjection",
                  "anti-isomorphism", "odd-vanishing", "commutator", "lie-homomorphism"]
LIE_CHECKS = ["jacobi", "antisymmetry"]
MODULE_CHECKS = ["dl-identity", "representation", "contraction", "layers", "layer-spectra",
                 "module-commutator", "module-bracket"]
ALL_CHECKS = ALGEBRA_CHECKS + LIE_CHECKS + MODULE_CHECKS

DEFAULTS = {
    "example": "heisenberg",
    "central_charge": "1/2",
    "twist_order": "1",
    "level": "0",
    "cutoff": "4",
    "depth": "2",
    "headroom": "",
    "checks": "",
    "modules": "",
    "degree_cutoff": "3",
    "jobs": "1",
    "format": "json",
    "out": "",
    "levels": "",
    "cutoffs": "",
}


class ConfigError(ValueError):
    pass


def read_config(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for num, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{num}: expected key = value")
            key, value = (x.strip() for x in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in DEFAULTS:
                raise ConfigError(f"{path}:{num}: unknown key {key!r}")
            out[key] = value
    return out


def _int(settings: dict, key: str, lo: int = 0) -> int:
    try:
        v = int(settings[key])
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {settings[key]!r}") from None
    if v < lo:
        raise ConfigError(f"{key} must be at least {lo}")
    return v


def _split(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


class RunConfig:
    """Validated run settings."""

    def __init__(self, settings: dict, allow_large: bool = False):
        self.raw = dict(settings)
        self.example = settings["example"]
        if self.example not in ("heisenberg", "virasoro"):
            raise ConfigError(f"unknown example {self.example!r}")
        self.T = _int(settings, "twist_order", 1)
        if self.T not in (1, 2):
            raise ConfigError("twist order must be 1 or 2")
        try:
            self.central_charge = rat(settings["central_charge"])
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        try:
            self.voa = make_voa(self.example, self.T, self.central_charge)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        self.level = self.parse_level(settings["level"])
        self.cutoff = self.check_cutoff(_int(settings, "cutoff"), allow_large)
        self.depth = _int(settings, "depth")
        self.headroom = _int(settings, "headroom") if settings["headroom"] != "" else None
        self.jobs = _int(settings, "jobs", 1)
        try:
            self.degree_cutoff = rat(settings["degree_cutoff"])
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        self.format = settings["format"]
        if self.format not in ("json", "csv"):
            raise ConfigError("format must be json or csv")
        self.out = settings["out"]
        checks = _split(settings["checks"]) or list(ALL_CHECKS)
        unknown = [c for c in checks if c not in ALL_CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
        self.checks = checks
        self.module_specs = _split(settings["modules"]) or self.default_modules()
        self.modules = [self.parse_module(s) for s in self.module_specs]
        self.levels = [self.parse_level(x) for x in _split(settings["levels"])]
        self.cutoffs = [self.check_cutoff(int(x), allow_large) for x in _split(settings["cutoffs"])
                        if self._is_int(x)]
        if len(self.cutoffs) != len(_split(settings["cutoffs"])):
            raise ConfigError("cutoffs must be integers")

    @staticmethod
    def _is_int(x: str) -> bool:
        try:
            int(x)
            return True
        except ValueError:
            return False

    def parse_level(self, text: str) -> LevelIndex:
        try:
            return LevelIndex.parse(text, self.T)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    @staticmethod
    def check_cutoff(W: int, allow_large: bool) -> int:
        if W < 0:
            raise ConfigError("cutoff must be nonnegative")
        if W > HARD_CUTOFF and not allow_large:
            raise ConfigError(f"cutoff {W} exceeds the hard limit {HARD_CUTOFF}; "
                              "pass --allow-large-cutoff to proceed")
        return W

    def default_modules(self) -> list[str]:
        if self.example == "virasoro":
            return ["virasoro_verma:1/3"]
        if self.T == 2:
            return ["fock_twisted"]
        return ["fock:0", "fock:1", "fock:1/2"]

    def parse_module(self, spec: str) -> GradedModule:
        family, _, param = spec.partition(":")
        try:
            M = make_module(family.strip(), self.voa, param.strip() or "0")
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"module {spec!r}: {exc}") from None
        if M.twist != self.T:
            raise ConfigError(f"module {spec!r} is not twisted by the configured automorphism")
        return M

    def echo(self) -> dict:
        return {
            "voa": self.voa.config(),
            "level": str(self.level),
            "cutoff": self.cutoff,
            "depth": self.depth,
            "headroom": self.headroom,
            "degree_cutoff": fmt(self.degree_cutoff),
            "modules": self.module_specs,
            "checks": self.checks,
        }


# ---------------------------------------------------------------------------
# commands


def build(cfg: RunConfig, level: LevelIndex | None = None, cutoff: int | None = None) -> AlgebraPresentation:
    return build_algebra(cfg.voa, level or cfg.level, cfg.cutoff if cutoff is None else cutoff,
                         cfg.depth, cfg.jobs, cfg.headroom)


def perturb(pres: AlgebraPresentation) -> tuple:
    """Negative control: add the identity to the entry ``1 * a`` for the first
    nonidentity class ``a`` of ``V^0``.  Then ``(1*1)*a != 1*(1*a)``."""
    one = pres.index(())
    for k in pres.even_indices():
        if k != one and (one, k) in pres.products:
            entry = dict(pres.products[(one, k)])
            entry[one] = entry.get(one, Fraction(0)) + 1
            pres.products[(one, k)] = {i: c for i, c in entry.items() if c}
            return one, k
    raise ConfigError("the perturbation fixture needs a quotient of dimension at least 2")


def run_checks(cfg: RunConfig, pres: AlgebraPresentation) -> list[dict]:
    V, n, D = cfg.voa, cfg.level, cfg.degree_cutoff
    mods = cfg.modules
    omegas: dict = {}

    def omega(M):
        if id(M) not in omegas:
            omegas[id(M)] = omega_extract(M, n, max(D, n.value))
        return omegas[id(M)]

    L = LoopAlgebra(V)
    out = []
    for name in cfg.checks:
        if name == "associativity":
            out.append(check_associativity(pres))
        elif name == "associativity-vectors":
            out.append(check_associativity_vectors(pres))
        elif name == "identity":
            out.append(check_identity(pres))
        elif name == "center":
            out.append(check_center(pres))
        elif name == "ideal":
            out.append(check_two_sided_ideal(pres))
        elif name == "surjection":
            out.append(check_surjection(V, n, cfg.cutoff, cfg.depth, cfg.jobs))
        elif name == "anti-isomorphism":
            out.append(check_antiisomorphism(pres))
        elif name == "odd-vanishing":
            if V.T == 1:
                out.append(make_report(name, {"voa": V.config()}, [], 0, skipped="no nontrivial eigenspaces"))
            else:
                out.append(check_odd_vanishing(pres))
        elif name == "commutator":
            out.append(check_commutators(pres))
        elif name == "lie-homomorphism":
            out.append(check_lie_homomorphism(L, pres))
        elif name == "jacobi":
            out.append(check_jacobi(L, generators(V)))
        elif name == "antisymmetry":
            out.append(check_antisymmetry(L, generators(V)))
        elif not mods:
            out.append(make_report(name, {"voa": V.config()}, [], 0, skipped="no modules configured"))
        elif name == "layer-spectra":
            out.append(check_layer_spectra(mods, D))
        else:
            for M in mods:
                if name == "dl-identity":
                    out.append(check_dl_identity(M, D))
                elif name == "representation":
                    out.append(check_representation(pres, M, D, omega(M)))
                elif name == "contraction":
                    out.append(check_contraction(M, n, D, omega=omega(M)))
                elif name == "layers":
                    out.append(check_layers(M, n, max(D, n.value), omega(M)))
                elif name == "module-commutator":
                    out.append(commutator_consistency(M, D))
                elif name == "module-bracket":
                    out.append(check_module_bracket(L, M, generators(V), D))
    return out


def presentation_csv(pres: AlgebraPresentation) -> str:
    buf = io.StringIO()
    csv.writer(buf).writerows(pres.to_csv_rows())
    return buf.getvalue()


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["check", "status", "tested", "failures", "params", "witness"])
    for rep in report["checks"]:
        w.writerow([rep["check"], rep["status"], rep["tested"], rep.get("failures", 0),
                    json.dumps(rep["params"], sort_keys=True), json.dumps(rep.get("witness", []))])
    return buf.getvalue()


def scan_csv(table: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["level", "cutoff", "filtration_dims", "monotone"])
    for row in table["rows"]:
        w.writerow([row["level"], row["cutoff"], " ".join(map(str, row["filtration_dims"])),
                    "yes" if row["monotone"] else "no"])
    return buf.getvalue()


def emit(text: str, out: str):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_compute(cfg: RunConfig) -> int:
    pres = build(cfg)
    if cfg.format == "csv":
        emit(presentation_csv(pres), cfg.out)
    else:
        emit(dump(pres.to_json()), cfg.out)
    return 0


def verify_report(cfg: RunConfig, perturbed: bool = False) -> dict:
    start = time.perf_counter()
    pres = build(cfg)
    report = {"schema": REPORT_SCHEMA, "command": "verify", "config": cfg.echo()}
    if perturbed:
        i, j = perturb(pres)
        report["perturbation"] = {"entry": [i, j], "added": "identity class"}
    report["dims_per_weight"] = pres.dims_per_weight()
    report["filtration_dims"] = pres.filtration_dims()
    checks = run_checks(cfg, pres)
    report["checks"] = checks
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    for rep in checks:
        summary[rep["status"]] += 1
    report["summary"] = summary
    report["status"] = "fail" if summary["fail"] else "pass"
    report["timing"] = {"seconds": round(time.perf_counter() - start, 3)}
    return report


def cmd_verify(cfg: RunConfig, perturbed: bool = False) -> int:
    report = verify_report(cfg, perturbed)
    emit(report_csv(report) if cfg.format == "csv" else dump(report), cfg.out)
    for rep in report["checks"]:
        if rep["status"] == "fail":
            print(f"FAIL {rep['check']}: {json.dumps(rep.get('witness', [])[:1])}", file=sys.stderr)
    return 1 if report["status"] == "fail" else 0


def scan_table(cfg: RunConfig) -> dict:
    levels = cfg.levels or [cfg.level]
    cutoffs = sorted(cfg.cutoffs or [cfg.cutoff])
    rows = []
    for n in levels:
        prev = None
        for W in cutoffs:
            pres = build(cfg, n, W)
            fd = pres.filtration_dims()
            mono = prev is None or all(fd[w] <= prev[w] for w in range(len(prev)))
            rows.append({"level": str(n), "cutoff": W, "dims_per_weight": pres.dims_per_weight(),
                         "filtration_dims": fd, "monotone": mono})
            prev = fd
    return {"schema": SCAN_SCHEMA, "config": {"voa": cfg.voa.config(), "depth": cfg.depth,
                                                "headroom": cfg.headroom},
            "levels": [str(n) for n in levels], "cutoffs": cutoffs, "rows": rows,
            "monotone": all(r["monotone"] for r in rows)}


def cmd_scan(cfg: RunConfig) -> int:
    table = scan_table(cfg)
    emit(scan_csv(table) if cfg.format == "csv" else dump(table), cfg.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key = value settings file")
    common.add_argument("--example", choices=["heisenberg", "virasoro"])
    common.add_argument("--central-charge", help="Virasoro central charge p/q")
    common.add_argument("--twist-order", help="order T of the automorphism (1 or 2)")
    common.add_argument("--level", help="level n written l, p/q or l+i/T")
    common.add_argument("--cutoff", help="weight cutoff W")
    common.add_argument("--depth", help="extra pole depth of the relation family")
    common.add_argument("--headroom", help="extra relation weight above the cutoff")
    common.add_argument("--modules", help="comma list: fock:LAMBDA, fock_twisted, virasoro_verma:H")
    common.add_argument("--degree-cutoff", help="module degree cutoff D")
    common.add_argument("--jobs", help="worker threads")
    common.add_argument("--format", choices=["json", "csv"])
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--allow-large-cutoff", action="store_true",
                        help=f"permit cutoffs above {HARD_CUTOFF}")
    p = argparse.ArgumentParser(prog="twisted-zhu", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="build a truncated presentation")
    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("--checks", help="comma list of checks: " + ", ".join(ALL_CHECKS))
    v.add_argument("--perturb", action="store_true", help="corrupt one structure constant first")
    s = sub.add_parser("scan", parents=[common], help="dimension table across levels and cutoffs")
    s.add_argument("--levels", help="comma list of levels")
    s.add_argument("--cutoffs", help="comma list of cutoffs")
    return p


def settings_from(args: argparse.Namespace) -> dict:
    settings = dict(DEFAULTS)
    if args.config:
        settings.update(read_config(args.config))
    for key in DEFAULTS:
        val = getattr(args, key, None)
        if val is not None:
            settings[key] = str(val)
    return settings


def main(argv: list[str] | None = None) -> int:
    args = parser().parse_args(argv)
    try:
        cfg = RunConfig(settings_from(args), args.allow_large_cutoff)
        if args.command == "compute":
            return cmd_compute(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.perturb)
        return cmd_scan(cfg)
    except (ConfigError, OSError) as exc:
        print(f"twisted-zhu: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
