import dataclasses
import typing

from ..exceptions import InvalidParameter


# mu, lambda, gamma of the three regularization parameter sets.
REGULARIZATION_SETS = {
    1: (1e-3, 4e-3, 1e-3),
    2: (1e-2, 4e-3, 1e-3),
    3: (1e-3, 4e-3, 4e-3),
}


@dataclasses.dataclass(frozen=True)
class ReconParams:
    mu: float = 1e-3
    lam: float = 4e-3
    gamma: float = 1e-3
    n_outer: int = 20
    n_inner: int = 1
    epsilon: float = 1e-3
    max_pcg_iters: int = 1000
    wavelet_levels: int = 4

    def __post_init__(self):
        for name in ("mu", "lam", "gamma"):
            value = getattr(self, name)
            if not value >= 0:
                raise InvalidParameter(f"{name} must be nonnegative, got {value}")
        if not self.mu + self.lam + self.gamma > 0:
            raise InvalidParameter("mu + lambda + gamma must be positive")
        if not 0 < self.epsilon < 1:
            raise InvalidParameter(f"epsilon must lie in (0, 1), got {self.epsilon}")
        for name in ("n_outer", "n_inner", "max_pcg_iters", "wavelet_levels"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise InvalidParameter(f"{name} must be a positive integer, got {value}")

    @classmethod
    def from_set(cls, number: int, **kwargs) -> "ReconParams":
        if number not in REGULARIZATION_SETS:
            raise InvalidParameter(f"regularization set must be one of {sorted(REGULARIZATION_SETS)}")
        mu, lam, gamma = REGULARIZATION_SETS[number]
        return cls(mu=mu, lam=lam, gamma=gamma, **kwargs)

    def scaled(self, factor: float) -> "ReconParams":
        """Same iteration settings with every weight multiplied by ``factor``."""
        return dataclasses.replace(
            self, mu=self.mu * factor, lam=self.lam * factor, gamma=self.gamma * factor
        )


@dataclasses.dataclass(frozen=True)
class SolveRecord:
    """One inner PCG solve of the Split Bregman loop."""

    outer: int
    inner: int
    pcg_iterations: int
    relative_residuals: typing.Tuple[float, ...]
    converged: bool
    rhs_s: float = 0.0
    pcg_s: float = 0.0
    shrink_s: float = 0.0
    feedback_s: float = 0.0

    @property
    def final_relres(self) -> float:
        return self.relative_residuals[-1]


@dataclasses.dataclass(frozen=True)
class OuterRow:
    outer: int
    pcg_iters: int
    final_relres: float
    rhs_s: float
    pcg_s: float
    shrink_s: float
    feedback_s: float


@dataclasses.dataclass
class ConvergenceLog:
    precond_kind: str = "none"
    precond_build_s: float = 0.0
    records: typing.List[SolveRecord] = dataclasses.field(default_factory=list)

    def append(self, record: SolveRecord):
        self.records.append(record)

    def set_feedback_seconds(self, seconds: float):
        """Attach the data feedback time of the current outer iteration to its last solve."""
        self.records[-1] = dataclasses.replace(self.records[-1], feedback_s=seconds)

    def freeze(self) -> "ConvergenceLog":
        return ConvergenceLog(
            precond_kind=self.precond_kind,
            precond_build_s=self.precond_build_s,
            records=tuple(self.records),
        )

    @property
    def total_pcg_iterations(self) -> int:
        return sum(record.pcg_iterations for record in self.records)

    @property
    def all_converged(self) -> bool:
        return all(record.converged for record in self.records)

    def stage_seconds(self) -> dict:
        return {
            "rhs_s": sum(r.rhs_s for r in self.records),
            "pcg_s": sum(r.pcg_s for r in self.records),
            "shrink_s": sum(r.shrink_s for r in self.records),
            "feedback_s": sum(r.feedback_s for r in self.records),
        }

    @property
    def total_seconds(self) -> float:
        return self.precond_build_s + sum(self.stage_seconds().values())

    def outer_rows(self) -> typing.List[OuterRow]:
        rows = []
        for outer in sorted({record.outer for record in self.records}):
            solves = [record for record in self.records if record.outer == outer]
            rows.append(
                OuterRow(
                    outer=outer,
                    pcg_iters=sum(r.pcg_iterations for r in solves),
                    final_relres=solves[-1].final_relres,
                    rhs_s=sum(r.rhs_s for r in solves),
                    pcg_s=sum(r.pcg_s for r in solves),
                    shrink_s=sum(r.shrink_s for r in solves),
                    feedback_s=sum(r.feedback_s for r in solves),
                )
            )
        return rows

    def iterations_per_outer(self) -> typing.List[int]:
        return [row.pcg_iters for row in self.outer_rows()]
