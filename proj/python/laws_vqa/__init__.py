# Copyright 2026 The laws-vqa Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the laws-vqa optimizer workbench."""

import os
import pathlib

_DATA = pathlib.Path(__file__).parent / "data"
if _DATA.is_dir():
    os.environ.setdefault("LAWS_VQA_DATA", str(_DATA))

from laws_vqa._core import (  # noqa: E402
    CapabilityError,
    ConfigurationError,
    DeltaVariant,
    IngestionError,
    IoError,
    LawsError,
    NumericError,
    OptimizerConfig,
    Schedule,
    UsageError,
    WarmStartStrategy,
    default_data_dir,
    fit_log_variance,
    h2_ground_energy,
    lr_schedule,
    provenance,
    registered_optimizers,
    resolve_config,
    run,
    run_bp_scan,
    run_h2_vqe,
    run_iris_classifier,
    run_random_pqc,
)

__all__ = [
    "CapabilityError",
    "ConfigurationError",
    "DeltaVariant",
    "IngestionError",
    "IoError",
    "LawsError",
    "NumericError",
    "OptimizerConfig",
    "Schedule",
    "UsageError",
    "WarmStartStrategy",
    "default_data_dir",
    "fit_log_variance",
    "h2_ground_energy",
    "lr_schedule",
    "provenance",
    "registered_optimizers",
    "resolve_config",
    "run",
    "run_bp_scan",
    "run_h2_vqe",
    "run_iris_classifier",
    "run_random_pqc",
]
