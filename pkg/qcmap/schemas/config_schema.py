"""Run configuration of the ``qcmap map`` command."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from qcmap.schemas.mapping_schema import (
    CostMode,
    PlacerStrategy,
    RouterConfig,
    RouterStrategy,
)


class RunConfig(BaseModel):
    """Everything one mapping run needs.

    Loaded from a config file and/or command-line flags; flags win.
    """

    device: str = Field(description="Path to the device file")
    input: str = Field(description="Path to the input circuit (.qc)")
    placer: PlacerStrategy = Field(PlacerStrategy.INTERACTION_GREEDY, description="Initial placement strategy")
    router: RouterStrategy = Field(RouterStrategy.LOOKAHEAD, description="Routing strategy")
    cost: CostMode = Field(CostMode.HOPS, description="Look-ahead distance measure")
    w0: float = Field(1.0, gt=0.0, description="Frontier weight")
    w1: float = Field(0.5, ge=0.0, description="Window weight")
    window: int = Field(20, gt=0, description="Look-ahead window, in two-qubit gates")
    exact_max_qubits: int = Field(5, gt=0)
    exact_max_two_qubit_gates: int = Field(8, gt=0)
    seed: Optional[int] = Field(None, description="Seed for randomized tie-breaks")
    out: Optional[str] = Field(None, description="Mapped circuit output path")
    schedule: Optional[str] = Field(None, description="Schedule dump output path")
    metrics: Optional[str] = Field(None, description="Metrics sidecar output path")
    report: Optional[str] = Field(None, description="JSON report output path")
    verify: bool = Field(False, description="Run the equivalence oracle")
    simplify: bool = Field(False, description="Run the peephole pass after routing")

    @model_validator(mode="after")
    def _non_empty_paths(self) -> "RunConfig":
        for name in ("device", "input", "out", "schedule", "metrics", "report"):
            value = getattr(self, name)
            if value is not None and not value.strip():
                raise ValueError(f"{name} path must not be empty")
        return self

    def router_config(self) -> RouterConfig:
        return RouterConfig(
            strategy=self.router,
            w0=self.w0,
            w1=self.w1,
            window=self.window,
            exact_max_qubits=self.exact_max_qubits,
            exact_max_two_qubit_gates=self.exact_max_two_qubit_gates,
            cost=self.cost,
            seed=self.seed,
        )
