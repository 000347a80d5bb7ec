"""Route-comparison checkers producing machine-readable reports.

Each ``check_*`` function sweeps a parameter range, compares independent
computations (closed form, recurrence, enumeration) cell by cell, and
returns a :class:`VerificationReport`.  By default a sweep stops at the
first discrepancy; ``full=True`` collects them all.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from . import capparelli as cap
from .partitions import A, C, D, G, P, Q, counts_by_norm, oracle_by_counts, oracle_genfun, refined_table
from .qcomb import truncated_limit_product
from .qpoly import ZERO, Monomial, NotDivisible, QPoly, dominates, to_json_obj, to_text, truncate_q

PASS, FAIL = "pass", "fail"
HOLDS, VIOLATED = "conjecture-holds", "conjecture-violated"
STATUSES = (PASS, FAIL, HOLDS, VIOLATED)


def _jsonable(x: Any) -> Any:
    if isinstance(x, QPoly):
        return {"poly": to_json_obj(x), "text": to_text(x)}
    if isinstance(x, Monomial):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class VerificationReport:
    check_name: str
    parameter_range: dict
    status: str
    first_discrepancy: Optional[dict] = None
    leading_terms: Optional[list] = None
    values: Optional[dict] = None
    discrepancies: Optional[list] = None
    elapsed: float = 0.0
    cells: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        failed = self.status in (FAIL, VIOLATED)
        if failed != (self.first_discrepancy is not None):
            raise ValueError("status and first_discrepancy disagree")

    @property
    def ok(self) -> bool:
        return self.status in (PASS, HOLDS)

    def to_dict(self, include_elapsed: bool = True) -> dict:
        d: dict[str, Any] = {
            "check": self.check_name,
            "range": self.parameter_range,
            "status": self.status,
            "cells": self.cells,
        }
        if self.first_discrepancy is not None:
            d["first_discrepancy"] = _jsonable(self.first_discrepancy)
        if self.discrepancies is not None:
            d["discrepancies"] = _jsonable(self.discrepancies)
        if self.leading_terms is not None:
            d["leading_terms"] = _jsonable(self.leading_terms)
        if self.values is not None:
            d["values"] = _jsonable(self.values)
        if include_elapsed:
            d["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return d

    def to_json(self, include_elapsed: bool = True, **kw) -> str:
        return json.dumps(self.to_dict(include_elapsed), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            check_name=d["check"],
            parameter_range=d["range"],
            status=d["status"],
            first_discrepancy=d.get("first_discrepancy"),
            leading_terms=d.get("leading_terms"),
            values=d.get("values"),
            discrepancies=d.get("discrepancies"),
            elapsed=d.get("elapsed_ms", 0.0) / 1000,
            cells=d.get("cells", 0),
        )

    def summary(self) -> str:
        line = f"{self.check_name} {self.parameter_range}: {self.status} ({self.cells} cells)"
        if self.first_discrepancy is not None:
            line += f"; first discrepancy at {self.first_discrepancy.get('params')}"
        return line


# cell = (params, expected, actual, ok)
Cell = tuple[dict, Any, Any, bool]


def _run(name: str, rng: dict, cells: Iterable[Cell], full: bool,
         conjecture: bool = False, values: Optional[dict] = None,
         leading_terms: Optional[list] = None, t0: Optional[float] = None) -> VerificationReport:
    if t0 is None:
        t0 = time.perf_counter()
    bad: list[dict] = []
    n = 0
    for params, expected, actual, ok in cells:
        n += 1
        if not ok:
            bad.append({"params": params, "expected": expected, "actual": actual})
            if not full:
                break
    good, fail = (HOLDS, VIOLATED) if conjecture else (PASS, FAIL)
    return VerificationReport(
        check_name=name,
        parameter_range=rng,
        status=fail if bad else good,
        first_discrepancy=bad[0] if bad else None,
        discrepancies=bad if full else None,
        leading_terms=leading_terms,
        values=values,
        elapsed=time.perf_counter() - t0,
        cells=n,
    )


def _check_m(m: int) -> None:
    if m not in (1, 2):
        raise ValueError("m must be 1 or 2")


# -- partition identities ------------------------------------------------------

def check_companion(m: int, n_max: int, full: bool = False) -> VerificationReport:
    """#A_m(n) = #C_m(n) = #D_m(n) for n <= n_max."""
    t0 = time.perf_counter()
    _check_m(m)
    ca, cc, cd = (counts_by_norm(f(m), n_max) for f in (A, C, D))
    rows = [[n, ca[n], cc[n], cd[n]] for n in range(n_max + 1)]

    def cells():
        for n, x, y, z in rows:
            yield {"m": m, "n": n}, {"C": y}, {"A": x, "D": z}, x == y == z

    return _run("companion", {"m": m, "n": [0, n_max]}, cells(), full,
                values={"columns": ["n", "A", "C", "D"], "counts": rows}, t0=t0)


def check_capparelli(m: int, n_max: int, full: bool = False) -> VerificationReport:
    """#C_m(n) = #D_m(n) for n <= n_max."""
    t0 = time.perf_counter()
    _check_m(m)
    cc, cd = counts_by_norm(C(m), n_max), counts_by_norm(D(m), n_max)
    rows = [[n, cc[n], cd[n]] for n in range(n_max + 1)]

    def cells():
        for n, y, z in rows:
            yield {"m": m, "n": n}, y, z, y == z

    return _run("capparelli", {"m": m, "n": [0, n_max]}, cells(), full,
                values={"columns": ["n", "C", "D"], "counts": rows}, t0=t0)


def check_refined(m: int, N_max: int, full: bool = False) -> VerificationReport:
    """Refined tables of ``P(m, 2N)`` and ``Q(m, N)`` coincide for N <= N_max."""
    _check_m(m)

    def cells():
        for N in range(N_max + 1):
            ta, tc = refined_table(P(m, 2 * N)), refined_table(Q(m, N))
            keys = sorted(set(ta.entries) | set(tc.entries))
            for n, i, j in keys:
                x, y = ta[n, i, j], tc[n, i, j]
                yield {"m": m, "N": N, "n": n, "i": i, "j": j}, y, x, x == y

    return _run("refined", {"m": m, "N": [0, N_max]}, cells(), full)


# -- generating functions ------------------------------------------------------

def check_genfunc_routes(m: int, K_max: int, ij_max: int = 8, full: bool = False) -> VerificationReport:
    """p_closed = p_recursive = enumeration for K <= K_max, i, j <= ij_max."""
    _check_m(m)

    def cells():
        for K in range(K_max + 1):
            orc = oracle_by_counts(P(m, K))
            for i in range(ij_max + 1):
                for j in range(ij_max + 1):
                    params = {"m": m, "K": K, "i": i, "j": j}
                    o = orc.get((i, j), ZERO)
                    try:
                        c = cap.p_closed(m, K, i, j)
                    except NotDivisible as e:
                        yield {**params, "error": str(e)}, o, None, False
                        continue
                    r = cap.p_recursive(m, K, i, j)
                    yield params, o, {"closed": c, "recursive": r}, c == r == o

    return _run("genfunc", {"m": m, "K": [0, K_max], "i": [0, ij_max], "j": [0, ij_max]}, cells(), full)


def check_g_routes(m: int, K_max: int, full: bool = False) -> VerificationReport:
    """g_recursive = closed form = enumeration for 1 <= K <= K_max."""
    _check_m(m)

    def cells():
        for K in range(1, K_max + 1):
            o = oracle_genfun(G(m, K))
            r, c = cap.g_recursive(m, K), cap.g_closed(m, K)
            yield {"m": m, "K": K, "residue": K % 3}, o, {"recursive": r, "closed": c}, r == c == o

    return _run("gseries", {"m": m, "K": [1, K_max]}, cells(), full)


def check_divisibility(m: int, N_max: int, full: bool = False) -> VerificationReport:
    """The (1 + bq)-quotient relation returns ``G_{m,3(N-1)}`` for 2 <= N <= N_max."""
    _check_m(m)

    def cells():
        for N in range(2, N_max + 1):
            params = {"m": m, "N": N}
            want = cap.g_recursive(m, 3 * (N - 1))
            try:
                got = cap.divisibility_check(m, N)
            except NotDivisible as e:
                yield {**params, "error": f"not divisible by 1+bq: {e}"}, want, None, False
                continue
            yield params, want, got, got == want

    return _run("divisibility", {"m": m, "N": [2, N_max]}, cells(), full)


def check_combined_relation(m: int, N_max: int, full: bool = False) -> VerificationReport:
    """``q^{3N}(1+bq) G_{3(N-1)}`` against its three-term expression, 1 <= N <= N_max."""
    _check_m(m)

    def cells():
        for N in range(1, N_max + 1):
            lhs, rhs = cap.combined_relation_sides(m, N)
            yield {"m": m, "N": N}, lhs, rhs, lhs == rhs

    return _run("combined", {"m": m, "N": [1, N_max]}, cells(), full)


def check_boulet(N_max: int, full: bool = False) -> VerificationReport:
    """Boulet-type identity for all 0 <= i, j <= N <= N_max."""

    def cells():
        for N in range(N_max + 1):
            for i in range(N + 1):
                for j in range(N + 1):
                    lhs, rhs = cap.boulet_lhs(N, i, j), cap.boulet_rhs(N, i, j)
                    yield {"N": N, "i": i, "j": j}, rhs, lhs, lhs == rhs

    return _run("boulet", {"N": [0, N_max]}, cells(), full)


def conjectured_leading(m: int, N: int, parity: str) -> Monomial:
    """Conjectured lowest term of ``Psi - G`` for the even or odd pair."""
    d1, d2 = int(m == 1), int(m == 2)
    if parity == "even":
        return Monomial(d2, d1, 3 * N + m)
    return Monomial(d1, d2, (3 * (N + 2) - 1) * d1 + (3 * (N + 1) - 2) * d2)


def dominance_pairs(m: int, N: int) -> list[tuple[str, int, int]]:
    """(parity, Psi index, G index) for the two conjectured inequalities at N."""
    return [("even", 2 * N, 3 * N), ("odd", 2 * N + 1, 3 * N + 3 - m)]


def check_dominance(m: int, N_max: int, full: bool = False) -> VerificationReport:
    """Scan ``Psi_{m,2N} >= G_{m,3N}`` and ``Psi_{m,2N+1} >= G_{m,3N+3-m}`` for 1 <= N <= N_max.

    A cell fails when a difference coefficient is negative or when the
    lowest difference term differs from the conjectured monomial.
    """
    t0 = time.perf_counter()
    _check_m(m)
    if N_max < 1:
        raise ValueError("N_max must be >= 1")
    leading: list[dict] = []
    rows = []
    for N in range(1, N_max + 1):
        for parity, kp, kg in dominance_pairs(m, N):
            res = dominates(cap.psi(m, kp), cap.g_recursive(m, kg))
            want = conjectured_leading(m, N, parity)
            lead = res.leading[0] if res.leading else None
            lead_q = res.leading_q[0] if res.leading_q else None
            entry = {
                "N": N,
                "parity": parity,
                "psi_index": kp,
                "g_index": kg,
                "dominates": res.dominates,
                "leading": str(lead) if lead else None,
                "leading_coeff": res.leading[1] if res.leading else 0,
                "leading_by_q": str(lead_q) if lead_q else None,
                "conjectured": str(want),
                "leading_matches": lead == want and res.leading[1] == 1,
                "leading_by_q_matches": lead_q == want and res.leading_q[1] == 1,
            }
            if res.witness:
                entry["witness"] = f"{res.witness[1]}*{res.witness[0]}"
            leading.append(entry)
            rows.append((entry, res))

    def cells():
        for entry, res in rows:
            params = {"m": m, "N": entry["N"], "parity": entry["parity"],
                      "psi_index": entry["psi_index"], "g_index": entry["g_index"]}
            if not res.dominates:
                yield {**params, "reason": "negative coefficient"}, "dominates", {"witness": entry["witness"]}, False
            elif not entry["leading_matches"]:
                yield ({**params, "reason": "leading term differs"}, {"leading": entry["conjectured"]},
                       {"leading": entry["leading"], "leading_by_q": entry["leading_by_q"]}, False)
            else:
                yield params, entry["conjectured"], entry["leading"], True

    return _run("dominance", {"m": m, "N": [1, N_max]}, cells(), full, conjecture=True,
                leading_terms=leading, t0=t0)


def check_limit_window(m: int, N: int, full: bool = False) -> VerificationReport:
    """Below q^{3N} the bounded series match the infinite product and the unbounded classes."""
    return check_limit(m, N, N_min=N, full=full)


def check_limit(m: int, N_max: int, N_min: int = 0, full: bool = False) -> VerificationReport:
    _check_m(m)

    def cells():
        for N in range(N_min, N_max + 1):
            w = 3 * N
            prod = truncated_limit_product(m, w)
            routes = {
                "psi": truncate_q(cap.psi(m, 2 * N), w),
                "g": truncate_q(cap.g_recursive(m, 3 * N), w),
                "A_oracle": oracle_genfun(A(m), w),
                "C_oracle": oracle_genfun(C(m), w),
                "D_oracle": oracle_genfun(D(m), w),
            }
            ok = all(v == prod for v in routes.values())
            yield {"m": m, "N": N, "window": w}, prod, routes, ok

    return _run("limit", {"m": m, "N": [N_min, N_max]}, cells(), full)


SUITES = ("companion", "capparelli", "refined", "genfunc", "gseries", "divisibility",
          "combined", "boulet", "dominance", "limit")


def run_suite(suite: str, ms: Iterable[int] = (1, 2), max_n: int = 40, max_N: int = 6,
              max_index: Optional[int] = None, full: bool = False) -> list[VerificationReport]:
    """Run one named suite (or ``"all"``) over both values of m unless restricted."""
    if suite == "all":
        return [r for s in SUITES for r in run_suite(s, ms, max_n, max_N, max_index, full)]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    ms = list(ms)
    if suite == "boulet":
        return [check_boulet(max_N, full=full)]
    out = []
    for m in ms:
        if suite == "companion":
            out.append(check_companion(m, max_n, full))
        elif suite == "capparelli":
            out.append(check_capparelli(m, max_n, full))
        elif suite == "refined":
            out.append(check_refined(m, max_N, full))
        elif suite == "genfunc":
            out.append(check_genfunc_routes(m, max_index if max_index is not None else 2 * max_N, full=full))
        elif suite == "gseries":
            out.append(check_g_routes(m, max_index if max_index is not None else 3 * max_N + 2, full))
        elif suite == "divisibility":
            out.append(check_divisibility(m, max(max_N, 2), full))
        elif suite == "combined":
            out.append(check_combined_relation(m, max(max_N, 1), full))
        elif suite == "dominance":
            out.append(check_dominance(m, max(max_N, 1), full))
        elif suite == "limit":
            out.append(check_limit(m, max_N, full=full))
    return out

