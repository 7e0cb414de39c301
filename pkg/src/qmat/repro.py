"""Expected-value suites for the worked samples, as used by ``qmat repro``.

Each suite recomputes the published values by brute force and reports, per
check, the expected and observed value.  Spaces are compared as canonical
subspaces and reported by their labels, so output is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Sequence

from .cycflats import cyclic_flats, reconstruct_flats
from .gf import field
from .qpoly import from_matrix_code, gap_scan, poly_cyc
from .rmcode import dual_code, distinct_supports, minimal_codewords, new_code
from .samples import f2, f8, generator_2x4, generator_2x5, generator_3x5, matrix_code_3x3
from .subspace import Subspace, span

EXAMPLES = ("first", "2x4", "rankfinal", "3x3")


@dataclass
class Check:
    name: str
    expected: Any
    observed: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "expected": self.expected, "observed": self.observed}


@dataclass
class ReproReport:
    example: str
    checks: list[Check] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, expected, observed) -> None:
        self.checks.append(Check(name, expected, observed))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "example": self.example,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "diff": [c.to_json() for c in self.failures()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _sp(F, n: int, *vectors: Sequence[int]) -> Subspace:
    return span([list(v) for v in vectors], F, n)


def _labels(spaces) -> list[str]:
    return [s.label() for s in sorted(spaces, key=lambda s: s.key)]


def _ranked(spaces_with_ranks) -> list[list]:
    return [[s.label(), int(r)] for s, r in sorted(spaces_with_ranks, key=lambda p: p[0].key)]


def repro_first() -> ReproReport:
    rep = ReproReport("first")
    F = f2()
    C = new_code(generator_2x5(), f8(), F)
    M = C.matroid()
    rep.add("cyclic space count", 102, len(M.family("cyclic_spaces")))
    U = _sp(F, 5, [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1])
    V = _sp(F, 5, [1, 0, 0, 1, 0], [0, 1, 0, 0, 1], [0, 0, 1, 0, 1])
    W = U & V
    rep.add("U cap V", "<e2+e5, e3+e5>", W.label())
    rep.add("U cyclic", True, M.classify(U).cyclic)
    rep.add("V cyclic", True, M.classify(V).cyclic)
    rep.add("U cap V independent", True, M.classify(W).independent)
    rep.add("U cap V cyclic", False, M.classify(W).cyclic)
    return rep


def repro_2x4() -> ReproReport:
    rep = ReproReport("2x4")
    F = f2()
    M = new_code(generator_2x4(), f8(), F).matroid()
    L = cyclic_flats(M)
    rep.add("cyclic flats", [["<0>", 0], ["<e2, e3, e4>", 1]], _ranked(L))
    rep.add("lattice edges", 1, len(L.hasse_edges))

    def e(*idx):
        return [1 if i + 1 in idx else 0 for i in range(4)]

    rank1 = [_sp(F, 4, e(1)), _sp(F, 4, e(1, 2)), _sp(F, 4, e(1, 3)), _sp(F, 4, e(1, 4)), _sp(F, 4, e(1, 2, 3)),
             _sp(F, 4, e(1, 2, 4)), _sp(F, 4, e(1, 3, 4)), _sp(F, 4, e(1, 2, 3, 4)), _sp(F, 4, e(2), e(3), e(4))]
    expected = [(Subspace.zero(F, 4), 0)] + [(s, 1) for s in rank1] + [(Subspace.full(F, 4), 2)]
    fl = reconstruct_flats(L)
    rep.add("reconstructed flats", _ranked(expected), _ranked(zip(fl.members, fl.ranks)))
    fam = M.family("flats")
    rep.add("flats by definition", _ranked(expected), _ranked(zip(fam.members, fam.ranks)))
    # the top cyclic flat is cyc(E); its complement is the loop of the dual
    rep.add("cyc(E)", "<e2, e3, e4>", M.cyc(M.E).label())
    rep.add("dual loops", ["<e1>"], _labels(M.dual().family("loops").members))
    return rep


def repro_rankfinal() -> ReproReport:
    rep = ReproReport("rankfinal")
    F, ext = f2(), f8()
    C = new_code(generator_3x5(), ext, F)
    D = dual_code(C)
    M, MD = C.matroid(), D.matroid()

    def s(*rows):
        return _sp(F, 5, *rows)

    A = [
        Subspace.zero(F, 5),
        s([1, 0, 0, 1, 1], [0, 1, 0, 1, 0]),
        s([1, 0, 1, 0, 0], [0, 0, 0, 1, 0]),
        s([0, 0, 1, 0, 1], [1, 1, 0, 1, 1]),
        s([0, 0, 1, 0, 1], [0, 1, 0, 0, 0], [0, 0, 0, 1, 0]),
        s([0, 1, 0, 0, 0], [1, 0, 0, 0, 1], [0, 0, 1, 1, 1]),
        s([1, 0, 0, 0, 1], [0, 1, 0, 1, 0], [0, 0, 1, 1, 1]),
        s([1, 0, 0, 0, 1], [0, 1, 0, 0, 0], [0, 0, 1, 0, 1]),
        s([1, 0, 0, 1, 1], [0, 1, 0, 0, 0], [0, 0, 1, 1, 1]),
        s([1, 0, 0, 0, 1], [0, 1, 1, 0, 1], [0, 0, 0, 1, 0]),
        s([1, 0, 0, 0, 1], [0, 1, 0, 0, 0], [0, 0, 1, 0, 1], [0, 0, 0, 1, 0]),
    ]
    rep.add("code parameters", "[5,3]_{8/2}", C.params)
    rep.add("dual code parameters", "[5,2]_{8/2}", D.params)
    rep.add("cyclic spaces of M_C", _labels(A), _labels(M.family("cyclic_spaces").members))
    rep.add("flat count of M_C", 88, len(M.family("flats")))
    rep.add("cyclic flats of M_C", _labels([A[i] for i in (0, 1, 2, 3, 10)]), _labels(cyclic_flats(M).nodes))
    rep.add("circuits of M_C", _labels(A[1:10]), _labels(M.family("circuits").members))
    rep.add("supports of the dual code", _labels(A[1:10]), _labels(distinct_supports(D).supports()))
    rep.add("dual code words all minimal", 9, minimal_codewords(D).words)

    loop = s([1, 0, 1, 0, 1])
    rep.add("loops of M_C-perp", [loop.label()], _labels(MD.family("loops").members))
    cyc_d = MD.family("cyclic_spaces").members
    rep.add("cyclic space count of M_C-perp", 88, len(cyc_d))
    rep.add("E cyclic in M_C-perp", True, MD.classify(MD.E).cyclic)
    # the zero word contributes the support <0>, which is cyclic as well
    sup_c = set(distinct_supports(C).supports()) | {Subspace.zero(F, 5)}
    rep.add("cyclic spaces of M_C-perp that are supports in C", 65, len(set(cyc_d) & sup_c))
    Fl = [
        (loop, 0),
        (s([1, 0, 1, 0, 1], [0, 0, 0, 1, 0]), 1),
        (s([1, 0, 1, 0, 1], [0, 0, 0, 1, 1]), 1),
        (s([1, 0, 1, 0, 1], [0, 1, 1, 0, 0]), 1),
        (s([0, 0, 1, 0, 1], [1, 0, 0, 0, 0]), 1),
        (s([1, 0, 1, 0, 1], [0, 1, 1, 1, 0]), 1),
        (s([1, 0, 0, 1, 1], [0, 0, 1, 1, 0]), 1),
        (s([1, 0, 0, 0, 1], [0, 1, 0, 1, 1], [0, 0, 1, 0, 0]), 1),
        (s([1, 0, 1, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1]), 1),
        (s([1, 0, 0, 1, 0], [0, 1, 0, 1, 0], [0, 0, 1, 1, 1]), 1),
        (Subspace.full(F, 5), 2),
    ]
    fam = MD.family("flats")
    rep.add("flats of M_C-perp", _ranked(Fl), _ranked(zip(fam.members, fam.ranks)))
    rep.add("complements of cyclic flats", _labels(cyclic_flats(MD).nodes),
            _labels(x.ortho() for x in cyclic_flats(M).nodes))
    rep.add("minimal codewords of C", 33, minimal_codewords(C).words)

    Z = s([1, 0, 0, 0, 1], [0, 1, 0, 0, 1], [0, 0, 1, 0, 1], [0, 0, 0, 1, 1])
    listed = [s([1, 0, 1, 0, 0], [0, 1, 0, 0, 1]), s([0, 1, 1, 1, 1], [1, 0, 0, 0, 1]),
              s([1, 0, 0, 1, 0], [0, 1, 0, 1, 0])]
    circ = [c for c in MD.family("circuits").members if c <= Z]
    rep.add("Z cyclic, not a circuit", [True, False], [MD.classify(Z).cyclic, MD.classify(Z).circuit])
    rep.add("rank of Z", 2, MD.rank(Z))
    rep.add("listed spaces are circuits inside Z", [True] * 3, [MD.classify(c).circuit and c <= Z for c in listed])
    rep.add("sum of the listed circuits", Z.label(), (listed[0] + listed[1] + listed[2]).label())
    acc = Subspace.zero(F, 5)
    for c in circ:
        acc = acc + c
    rep.add("sum of all circuits inside Z", Z.label(), acc.label())
    rep.add("circuits inside Z", 3, len(circ))
    return rep


def repro_3x3() -> ReproReport:
    rep = ReproReport("3x3")
    F = field(3)
    P = from_matrix_code(matrix_code_3x3())
    rep.add("polymatroid axioms", True, P.check_axioms().passed)
    rep.add("rho(E)", 4, P.rank(Subspace.full(F, 3)))
    lines = [_sp(F, 3, v) for v in ([1, 1, 2], [0, 0, 1], [1, 0, 1], [0, 1, 0])]
    rep.add("rho of the listed lines", [2, 2, 2, 2], [P.rank(c) for c in lines])
    rep.add("cyc of the listed lines", ["<0>"] * 4, [poly_cyc(P, c).label() for c in lines])
    gaps = {g.space: (g.lhs, g.rhs) for g in gap_scan(P)}
    rep.add("gaps at the listed lines", [[2, 3]] * 4, [list(gaps.get(c, (None, None))) for c in lines])
    return rep


SUITES: dict[str, Callable[[], ReproReport]] = {
    "first": repro_first,
    "2x4": repro_2x4,
    "rankfinal": repro_rankfinal,
    "3x3": repro_3x3,
}


def repro(example_id: str) -> ReproReport:
    try:
        return SUITES[example_id]()
    except KeyError:
        from .errors import ConfigInvalid

        raise ConfigInvalid(f"unknown example {example_id!r}; choose from {', '.join(EXAMPLES)}") from None
