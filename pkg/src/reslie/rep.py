"""Matrix representations of U₀(𝔤) with verified axioms."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .liealg import LieAlgebra
from .linalg import lincomb, matmul, matpow


class ModuleError(ValueError):
    """Module data that violates the representation axioms or an operation's preconditions."""


@dataclass
class ModuleReport:
    violations: list[tuple[str, tuple[int, ...], str]] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"axiom": k, "indices": list(w), "detail": d} for k, w, d in self.violations],
        }


class Module:
    """ρ: 𝔤 → gl(m) given by one matrix per basis element; vectors are columns."""

    def __init__(self, L: LieAlgebra, mats, name: str = "M", verify: bool = True):
        self.L = L
        self.F = L.F
        self.name = name
        mats = [np.asarray(A, dtype=np.int64) % L.F.q for A in mats]
        if len(mats) != L.dim:
            raise ModuleError(f"{name}: expected {L.dim} action matrices, got {len(mats)}")
        m = mats[0].shape[0] if mats else 0
        for A in mats:
            if A.shape != (m, m):
                raise ModuleError(f"{name}: action matrices must all be {m}x{m}")
            A.setflags(write=False)
        self.mats = tuple(mats)
        self.dim = m
        if verify:
            report = verify_module(self)
            if not report.ok:
                raise ModuleError(f"{name}: {report.violations[0][2]}")

    def __repr__(self) -> str:
        return f"Module({self.name}, dim={self.dim}, over {self.L.name})"

    def act(self, x) -> np.ndarray:
        """ρ(x) for x = Σ x_i b_i."""
        x = np.asarray(x, dtype=np.int64)
        if self.dim == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return lincomb(self.F, x.tolist(), self.mats)

    def over(self, k: int) -> "Module":
        """The same module with scalars extended to F_{p^k}."""
        if k == self.F.k:
            return self
        if self.F.k != 1:
            raise ModuleError("only modules over the prime field can be extended")
        return Module(self.L.over(k), self.mats, self.name, verify=False)

    def to_json(self) -> dict:
        return {"name": self.name, "algebra": self.L.to_json(), "matrices": [A.tolist() for A in self.mats]}


def verify_module(M: Module) -> ModuleReport:
    report = ModuleReport()
    L, F, n = M.L, M.F, M.L.dim
    if M.dim == 0:
        return report
    rho = M.mats
    for i in range(n):
        for j in range(i + 1, n):
            lhs = F.sub(matmul(F, rho[i], rho[j]), matmul(F, rho[j], rho[i]))
            rhs = lincomb(F, L.structure[i, j].tolist(), rho)
            if np.any(lhs != rhs):
                report.violations.append(
                    ("bracket", (i, j), f"[rho({L.labels[i]}), rho({L.labels[j]})] != rho([{L.labels[i]},{L.labels[j]}])")
                )
    for i in range(n):
        lhs = matpow(F, rho[i], L.p)
        rhs = lincomb(F, L.pmap[i].tolist(), rho)
        if np.any(lhs != rhs):
            report.violations.append(("restricted", (i,), f"rho({L.labels[i]})^p != rho({L.labels[i]}^[p])"))
    return report
