"""Single-frame destriping of infrared images by sliding midway histogram
specification (MIRE), with automatic smoothing-parameter selection, a
total-variation column-offset baseline, and a simulation + metrics harness.
"""

from mire.image_io import (
    ImageError,
    MalformedHeaderError,
    MultiChannelError,
    TruncatedDataError,
    UnsupportedBitDepthError,
    load_image,
    read_image,
    reflect_column_index,
    save_image,
    transpose,
    write_image,
)
from mire.histogram import (
    QuantileFunction,
    WeightKernel,
    gaussian_kernel,
    midway_quantiles,
    quantile_function,
    specify,
)
from mire.correction import (
    DEFAULT_SIGMA_GRID,
    SigmaSearchResult,
    auto_sigma,
    mire_correct,
)
from mire.tv_baseline import column_deltas, tv_correct
from mire.simulate import NuGroundTruth, NuParams, simulate_nu
from mire.metrics import rmse, tv_norm

__version__ = "0.1.0"

__all__ = [
    "ImageError",
    "MalformedHeaderError",
    "MultiChannelError",
    "TruncatedDataError",
    "UnsupportedBitDepthError",
    "load_image",
    "save_image",
    "read_image",
    "write_image",
    "transpose",
    "reflect_column_index",
    "QuantileFunction",
    "WeightKernel",
    "quantile_function",
    "gaussian_kernel",
    "midway_quantiles",
    "specify",
    "DEFAULT_SIGMA_GRID",
    "SigmaSearchResult",
    "mire_correct",
    "auto_sigma",
    "column_deltas",
    "tv_correct",
    "NuParams",
    "NuGroundTruth",
    "simulate_nu",
    "rmse",
    "tv_norm",
    "__version__",
]
