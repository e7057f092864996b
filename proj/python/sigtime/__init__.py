# Copyright 2026 The sigtime Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Signal-time coding for half-duplex relay networks."""

from ._sigtime import (
    ConcatScheme,
    CrossTerm,
    GeometryMode,
    OptimizerOptions,
    ScenarioConfig,
    SigtimeError,
    bits_per_pulse,
    brute_force_count,
    build_codebook,
    catalan,
    db_to_linear,
    evaluate,
    f_count,
    gauss_cap,
    r_st,
    rank,
    s_count,
    simulate_flow,
    sweep,
    two_hop_bound,
    unrank,
    validate,
)

__all__ = [
    "ConcatScheme",
    "CrossTerm",
    "GeometryMode",
    "OptimizerOptions",
    "ScenarioConfig",
    "SigtimeError",
    "bits_per_pulse",
    "brute_force_count",
    "build_codebook",
    "catalan",
    "db_to_linear",
    "evaluate",
    "f_count",
    "gauss_cap",
    "r_st",
    "rank",
    "s_count",
    "simulate_flow",
    "sweep",
    "two_hop_bound",
    "unrank",
    "validate",
]
