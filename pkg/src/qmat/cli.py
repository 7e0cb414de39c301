"""``qmat`` command line: a thin shell over the library.

Input is one JSON config (``--config FILE`` or stdin)::

    {"field": {"p": 2},
     "construction": {"type": "code", "ext": {"p": 2, "e": 3}, "G": [[[1,0,0], [0,1,0]], ...]},
     "max_subspaces": 5000}

Construction types: ``code`` (generator rows of coordinate vectors over F_p),
``uniform`` (``k``, ``n``), ``rank_table`` (``n``, ``ranks``), ``z_lattice``
(``n``, ``nodes`` with ``rows`` and ``rank``) and ``sample`` (``name``).

Exit codes: 0 ok, 1 a check failed, 2 bad config, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any

from .crypto import check_family_axioms, check_rank_axioms, check_Z_axioms, convolution_matroid, roundtrip_verify
from .cycflats import CyclicFlatLattice, cyclic_flats, export_dot, reconstruct_flats
from .errors import AxiomViolation, ConfigInvalid, EnumerationTooLarge, QMatError
from .gf import field_from_json
from .qmatroid import FAMILY_KINDS, QMatroid, from_rank_table, rank_table_from_json, uniform
from .repro import EXAMPLES, repro
from .rmcode import RankMetricCode, bridge_checks, code_from_json, distinct_supports, minimal_codewords
from .samples import SAMPLES, f2, f8, generator_2x4, generator_2x5, generator_3x5
from .subspace import MAX_SUBSPACES, subspace_from_json

COMMANDS = ("families", "lattice", "axioms", "reconstruct", "code", "repro")
CONSTRUCTIONS = ("code", "uniform", "rank_table", "z_lattice", "sample")
_SAMPLE_GENERATORS = {"2x5": generator_2x5, "2x4": generator_2x4, "3x5": generator_3x5}


@dataclass
class JobConfig:
    command: str
    construction: dict
    field: dict | None
    max_subspaces: int = MAX_SUBSPACES
    scheme: str | None = None
    dot: bool = False
    minimal: bool = False
    family: str | None = None
    example: str | None = None

    @classmethod
    def parse(cls, command: str, doc: dict | None, **opts) -> "JobConfig":
        if command == "repro":
            return cls(command, {}, None, example=opts.get("example"))
        if not isinstance(doc, dict):
            raise ConfigInvalid("config must be a JSON object")
        cons = doc.get("construction")
        if not isinstance(cons, dict) or cons.get("type") not in CONSTRUCTIONS:
            raise ConfigInvalid(f"exactly one construction of type {', '.join(CONSTRUCTIONS)} is required")
        max_sub = opts.get("max_subspaces") or doc.get("max_subspaces") or MAX_SUBSPACES
        scheme = opts.get("scheme")
        if scheme is not None and scheme not in ("R", "I", "O", "Z"):
            raise ConfigInvalid(f"unknown scheme {scheme!r}")
        fam = opts.get("family")
        if fam is not None and fam not in FAMILY_KINDS + ("cyclic_flats",):
            raise ConfigInvalid(f"unknown family {fam!r}")
        if command == "code" and cons["type"] not in ("code", "sample"):
            raise ConfigInvalid("the code command needs a code construction")
        return cls(command, cons, doc.get("field"), int(max_sub), scheme, bool(opts.get("dot")),
                   bool(opts.get("minimal")), fam)


# -- building objects from the config --------------------------------------------------------
def _code(cfg: JobConfig) -> RankMetricCode:
    cons = cfg.construction
    if cons["type"] == "sample":
        name = cons.get("name")
        if name not in _SAMPLE_GENERATORS:
            raise ConfigInvalid(f"unknown sample {name!r}; choose from {', '.join(SAMPLES)}")
        from .rmcode import new_code

        return new_code(_SAMPLE_GENERATORS[name](), f8(), f2())
    try:
        return code_from_json({"ext": cons["ext"], "base": cfg.field or {"p": cons["ext"]["p"]}, "G": cons["G"]})
    except (KeyError, TypeError) as exc:
        raise ConfigInvalid(f"code construction needs 'ext' and 'G': {exc}") from exc


def _field(cfg: JobConfig):
    if cfg.field is None:
        raise ConfigInvalid("'field' is required for this construction")
    return field_from_json(cfg.field)


def _lattice_data(cfg: JobConfig) -> CyclicFlatLattice:
    cons = cfg.construction
    F = _field(cfg)
    n = int(cons["n"])
    try:
        nodes = [(subspace_from_json({"n": n, "rows": e["rows"]}, F), int(e["rank"])) for e in cons["nodes"]]
    except (KeyError, TypeError) as exc:
        raise ConfigInvalid(f"z_lattice nodes need 'rows' and 'rank': {exc}") from exc
    return CyclicFlatLattice([s for s, _ in nodes], [r for _, r in nodes])


def build_matroid(cfg: JobConfig) -> QMatroid:
    cons = cfg.construction
    kind = cons["type"]
    if kind in ("code", "sample"):
        return _code(cfg).matroid(cfg.max_subspaces)
    if kind == "uniform":
        return uniform(int(cons["k"]), int(cons["n"]), _field(cfg), cfg.max_subspaces)
    if kind == "rank_table":
        obj = {"field": cfg.field, "n": cons["n"], "ranks": cons["ranks"]}
        return from_rank_table(rank_table_from_json(obj), max_count=cfg.max_subspaces)
    L = _lattice_data(cfg)
    return convolution_matroid(L.n, L.field, L, cfg.max_subspaces)


# -- commands ----------------------------------------------------------------------------------
def cmd_families(cfg: JobConfig) -> tuple[int, Any]:
    M = build_matroid(cfg)
    kinds = [cfg.family] if cfg.family and cfg.family != "cyclic_flats" else list(FAMILY_KINDS)
    out = {k: M.family(k).to_json() for k in kinds}
    return 0, {"families": out, "counts": {k: len(v["members"]) for k, v in out.items()}}


def cmd_lattice(cfg: JobConfig) -> tuple[int, Any]:
    M = build_matroid(cfg)
    kind = cfg.family or "cyclic_flats"
    if kind == "cyclic_flats":
        L = cyclic_flats(M)
        return 0, (L.to_dot() if cfg.dot else L.to_json())
    fam = M.family(kind)
    if cfg.dot:
        return 0, export_dot(fam.members, fam.ranks, name=kind)
    return 0, fam.to_json()


def cmd_axioms(cfg: JobConfig) -> tuple[int, Any]:
    schemes = [cfg.scheme] if cfg.scheme else ["R", "I", "O", "Z"]
    if cfg.construction["type"] == "z_lattice" and schemes == ["Z"]:
        reports = [check_Z_axioms(_lattice_data(cfg))]
    else:
        M = build_matroid(cfg)
        reports = []
        for s in schemes:
            if s == "R":
                reports.append(check_rank_axioms(M))
            elif s == "Z":
                reports.append(check_Z_axioms(cyclic_flats(M)))
            else:
                reports.append(check_family_axioms(M, s))
    ok = all(r.passed for r in reports)
    return (0 if ok else 1), {"passed": ok, "reports": [r.to_json() for r in reports]}


def cmd_reconstruct(cfg: JobConfig) -> tuple[int, Any]:
    if cfg.construction["type"] == "z_lattice":
        L = _lattice_data(cfg)
        MZ = convolution_matroid(L.n, L.field, L, cfg.max_subspaces)
        flats = reconstruct_flats(L, cfg.max_subspaces)
        out = {
            "lattice": L.to_json(),
            "rank_axioms": check_rank_axioms(MZ).to_json(),
            "flats": flats.to_json(),
            "ranks": MZ.to_json()["ranks"],
        }
        return (0 if out["rank_axioms"]["passed"] else 1), out
    M = build_matroid(cfg)
    rt = roundtrip_verify(M)
    flats = reconstruct_flats(cyclic_flats(M), cfg.max_subspaces)
    fam = M.family("flats")
    same = flats.members == fam.members and flats.ranks == fam.ranks
    out = {"roundtrip": rt.to_json(), "flats": flats.to_json(), "flats_match_definition": same}
    return (0 if rt.passed and same else 1), out


def cmd_code(cfg: JobConfig) -> tuple[int, Any]:
    C = _code(cfg)
    out: dict[str, Any] = {"code": C.to_json(), "params": C.params, "nondegenerate": C.nondegenerate}
    sup = distinct_supports(C)
    out["distinct_supports"] = len(sup)
    status = 0
    if cfg.minimal:
        mins = minimal_codewords(C)
        out["minimal_codewords"] = mins.to_json()
        out["summary"] = f"{mins.words} minimal codewords"
    if C.nondegenerate:
        br = bridge_checks(C, cfg.max_subspaces)
        out["bridge"] = br.to_json()
        status = 0 if br.passed else 1
    return status, out


def cmd_repro(cfg: JobConfig) -> tuple[int, Any]:
    rep = repro(cfg.example)
    return (0 if rep.passed else 1), rep.to_json()


HANDLERS = {
    "families": cmd_families,
    "lattice": cmd_lattice,
    "axioms": cmd_axioms,
    "reconstruct": cmd_reconstruct,
    "code": cmd_code,
    "repro": cmd_repro,
}


def run(cfg: JobConfig) -> tuple[int, Any]:
    """Execute a parsed job; returns ``(exit_status, payload)``."""
    return HANDLERS[cfg.command](cfg)


def _render(payload: Any) -> str:
    if isinstance(payload, str):
        return payload
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qmat", description="q-matroids, cyclic flats and rank-metric codes")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--out", help="write output here instead of stdout")
        if name == "repro":
            p.add_argument("example", choices=EXAMPLES)
            p.add_argument("--dot", action="store_true", help="emit the cyclic-flat lattice of the sample as DOT")
            continue
        p.add_argument("--config", help="JSON config file (default: stdin)")
        p.add_argument("--max-subspaces", type=int, dest="max_subspaces")
        p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
        p.add_argument("--scheme", choices=["R", "I", "O", "Z"])
        p.add_argument("--family", help="family to list or draw (default: all / cyclic_flats)")
        p.add_argument("--minimal", action="store_true", help="list minimal codewords")
    return ap


def _repro_dot(example: str) -> str:
    from .qmatroid import from_code_matrix

    gens = {"first": generator_2x5, "2x4": generator_2x4, "rankfinal": generator_3x5}
    if example not in gens:
        raise ConfigInvalid(f"no lattice to draw for {example!r}")
    return cyclic_flats(from_code_matrix(gens[example](), f8(), f2())).to_dot()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "repro":
            cfg = JobConfig.parse("repro", None, example=args.example)
            status, payload = (0, _repro_dot(args.example)) if args.dot else run(cfg)
        else:
            try:
                text = open(args.config).read() if args.config else sys.stdin.read()
                doc = json.loads(text)
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigInvalid(f"cannot read config: {exc}") from exc
            cfg = JobConfig.parse(args.command, doc, max_subspaces=args.max_subspaces, scheme=args.scheme,
                                  dot=args.dot, minimal=args.minimal, family=args.family)
            status, payload = run(cfg)
    except ConfigInvalid as exc:
        print(f"qmat: bad config: {exc}", file=sys.stderr)
        return 2
    except EnumerationTooLarge as exc:
        print(f"qmat: resource guard: {exc}", file=sys.stderr)
        return 3
    except AxiomViolation as exc:
        report = exc.report.to_json() if hasattr(exc.report, "to_json") else None
        status, payload = 1, {"error": str(exc), "report": report}
    except QMatError as exc:
        print(f"qmat: {exc}", file=sys.stderr)
        return 1
    except (KeyError, TypeError, ValueError) as exc:
        print(f"qmat: bad config: {exc!r}", file=sys.stderr)
        return 2
    text = _render(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
