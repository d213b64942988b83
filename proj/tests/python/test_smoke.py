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

import json
import math

import pytest

import itz


def test_mode_counting():
    modes = itz.quasiparticle_spectrum(itz.ModelSpec(itz.Family.TFI_OBC, 12, 0.7))
    kinds = [k for _, _, k in modes]
    assert kinds.count("REAL_BULK") == 11
    assert kinds.count("COMPLEX_PI") == 1


def test_oracle():
    spec = itz.ModelSpec(itz.Family.TFI_OBC, 6, 1.3)
    ed = itz.exact_spectrum(spec)
    ff = itz.free_fermion_manybody(spec)
    assert max(abs(a - b) for a, b in zip(ed, ff)) < 1e-9


def test_zeros_are_zeros():
    spec = itz.ModelSpec(itz.Family.TFI_OBC, 8, 1.0)
    energies = itz.free_fermion_manybody(spec)
    zeros = itz.enumerate_itzs(spec, 3)
    assert sorted(zeros) == [1, 3]
    for t in zeros[1]:
        assert abs(itz.z_trace(energies, complex(0.0, t))) / len(energies) < 1e-10
        assert abs(itz.z_product_obc(spec, t)) / 2**8 < 1e-10


def test_edges_and_density():
    lo, hi = itz.sector_edges(1.3, 1)
    assert lo == pytest.approx(0.6 / math.pi)
    assert hi == pytest.approx(4.6 / math.pi)
    assert itz.density_analytic(1e-4, 1.0, 1, 1000) == pytest.approx(500.0, rel=1e-6)


def test_sff_zero():
    spec = itz.ModelSpec(itz.Family.TFI_OBC, 6, 1.0)
    energies = itz.free_fermion_manybody(spec)
    times = [0.05 * 1.01**k for k in range(300)]
    k, zeros = itz.sff(energies, times)
    assert k[0] > 0
    t_max = max(itz.enumerate_itzs(spec, 1)[1])
    assert min(zeros) == pytest.approx(1 / (2 * math.pi * t_max), rel=1e-9)


def test_errors():
    with pytest.raises(itz.Error):
        itz.ModelSpec(itz.Family.POTTS3, 11, 1.0)
    with pytest.raises(itz.Error):
        itz.run(json.dumps({"command": "zeros", "lambda_grid": []}))


def test_run(tmp_path):
    files = itz.run(json.dumps({"command": "zeros", "N": 5, "output_dir": str(tmp_path), "cache": False}))
    assert any(f.endswith("zeros.csv") for f in files)
    text = (tmp_path / "zeros.csv").read_text()
    assert text.startswith("# config_hash=")
