# Copyright 2026 The adarec Authors.
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

"""Recovery of a hidden vector from randomized linear measurements."""

from adarec._adarec import (
    CapViolation,
    approximate,
    choose_L_for_budget,
    choose_L_for_eps,
    compare,
    countsketch,
    countsketch_params,
    denoise,
    estimate_error,
    gen_vector,
    linsketch,
    lp_norm,
    param_table,
    plan,
)

__all__ = [
    "CapViolation",
    "approximate",
    "choose_L_for_budget",
    "choose_L_for_eps",
    "compare",
    "countsketch",
    "countsketch_params",
    "denoise",
    "estimate_error",
    "gen_vector",
    "linsketch",
    "lp_norm",
    "param_table",
    "plan",
]

__version__ = "0.1.0"
