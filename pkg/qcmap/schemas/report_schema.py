"""Report schema for qcmap map output serialization"""

from typing import List, Optional

from pydantic import BaseModel, Field

from qcmap.schemas.mapping_schema import PlacerStrategy, RouterConfig
from qcmap.schemas.metrics_schema import MetricsReport


class MappingReport(BaseModel):
    """
    Complete record of one ``qcmap map`` run.

    Pure serialization of already-computed results. Carries no timestamp so
    identical runs produce identical files.
    """

    tool_version: str = Field(description="qcmap version that produced this report")
    device: str = Field(description="Device name")
    input_path: str = Field(description="Input circuit path as given")
    placer: PlacerStrategy = Field(description="Initial placement strategy")
    router: RouterConfig = Field(description="Router configuration")
    initial_placement: str = Field(description="Physical -> program qubit array before routing")
    final_placement: str = Field(description="Physical -> program qubit array after routing")
    metrics: MetricsReport = Field(description="Cost figures")
    violations: List[str] = Field(default_factory=list, description="Constraint violations of the output")
    verified: Optional[bool] = Field(None, description="Equivalence oracle verdict; None when not run")
    fidelity_deficit: Optional[float] = Field(None, description="1 - min fidelity from the oracle")
