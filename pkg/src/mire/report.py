"""JSON run reports emitted by the CLI."""

import dataclasses
import json
from pathlib import Path
from typing import Optional


@dataclasses.dataclass
class MetricsReport:
    """Evaluation record of one correction run.

    ``trace`` is present only for automatic sigma selection; ``rmse_vs_truth``
    only when a ground-truth image was supplied.
    """

    input_path: str
    method: str  # "mire" or "tv"
    tv_before: float
    tv_after: float
    runtime_ms: float
    sigma_used: Optional[float] = None
    rmse_vs_truth: Optional[float] = None
    trace: Optional[list] = None

    def to_dict(self):
        return {
            "input_path": self.input_path,
            "method": self.method,
            "sigma_used": self.sigma_used,
            "rmse_vs_truth": self.rmse_vs_truth,
            "tv_before": self.tv_before,
            "tv_after": self.tv_after,
            "runtime_ms": self.runtime_ms,
            "trace": None if self.trace is None
            else [[s, tv] for s, tv in self.trace],
        }

    def write(self, path):
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n")


def read_report(path):
    return json.loads(Path(path).read_text())
