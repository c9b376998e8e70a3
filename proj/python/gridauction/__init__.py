# Copyright 2026 The gridauction Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Peak cutting and multiunit load auction simulator."""

from ._core import (
    ConfigError,
    StructuralError,
    UndefinedParError,
    __version__,
    aggregate,
    clear_slot,
    experiment_cost,
    is_feasible,
    par,
    par_cut,
    quadratic_cost,
    reserve_prices,
    run_experiment,
    shift_percentage,
    system_cost,
    total_load,
)

__all__ = [
    "ConfigError",
    "StructuralError",
    "UndefinedParError",
    "__version__",
    "aggregate",
    "clear_slot",
    "experiment_cost",
    "is_feasible",
    "par",
    "par_cut",
    "quadratic_cost",
    "reserve_prices",
    "run_experiment",
    "shift_percentage",
    "system_cost",
    "total_load",
]
