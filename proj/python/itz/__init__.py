# Copyright 2026 The itz Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Imaginary-temperature zeros of quantum spin chains."""

from itz._core import (
    Error,
    Family,
    ModelSpec,
    density_analytic,
    density_xx,
    enumerate_itzs,
    exact_spectrum,
    free_fermion_manybody,
    quasiparticle_spectrum,
    run,
    sector_edges,
    sff,
    z_product_obc,
    z_trace,
)

__all__ = [
    "Error",
    "Family",
    "ModelSpec",
    "density_analytic",
    "density_xx",
    "enumerate_itzs",
    "exact_spectrum",
    "free_fermion_manybody",
    "quasiparticle_spectrum",
    "run",
    "sector_edges",
    "sff",
    "z_product_obc",
    "z_trace",
]
