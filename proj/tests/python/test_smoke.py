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

import math

import pytest

import sigtime


def test_counts():
    assert [sigtime.s_count(n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert sigtime.s_count(150) == math.comb(300, 150) // 151
    assert sigtime.catalan(40) == sigtime.s_count(40)
    assert sigtime.f_count(4, 2) == 9
    assert sigtime.brute_force_count(8) == 1430
    assert abs(sigtime.bits_per_pulse(150) - 0.9611) <= 5e-5


def test_codebook_and_rank():
    assert sigtime.build_codebook(2) == ["1100", "1010"]
    assert sigtime.validate("1010")
    assert not sigtime.validate("1001")
    assert sigtime.rank("101100") == 3
    book = sigtime.build_codebook(6)
    assert [sigtime.unrank(6, i) for i in range(len(book))] == book
    last = sigtime.s_count(100) - 1
    assert sigtime.unrank(100, last) == "10" * 100
    assert sigtime.rank("10" * 100) == last


def test_errors():
    with pytest.raises(IndexError):
        sigtime.unrank(3, 5)
    with pytest.raises(sigtime.SigtimeError, match="codebook"):
        sigtime.rank("1001")
    with pytest.raises(ValueError):
        sigtime.build_codebook(20)
    with pytest.raises(sigtime.SigtimeError):
        sigtime.ConcatScheme(7, 4)


def test_flow():
    trace = sigtime.simulate_flow("110100", 2.0, 1.0, 3.0)
    assert trace["pairs"] == 3
    assert trace["delivered_bits"] == pytest.approx(2.0)
    assert min(trace["relay_buffer"]) >= 0.0


def test_concat():
    s = sigtime.ConcatScheme(8, 4)
    assert (s.blocks, s.tail_len, s.capacity) == (2, 0, 4)
    assert s.encode(0) == "11001100"
    big = sigtime.ConcatScheme(302, 60)
    i = big.capacity // 3
    assert big.decode(big.encode(i)) == i
    m = sigtime.ConcatScheme(200, 120).metrics()
    assert m["rho_m"] <= 1e-23
    assert m["optimal_words"] == sigtime.s_count(100)


def test_relay():
    assert sigtime.gauss_cap(3.0) == pytest.approx(1.0)
    cfg = sigtime.ScenarioConfig()
    cfg.power = sigtime.db_to_linear(30.0)
    cfg.kappa = 0.75
    rep = sigtime.evaluate(cfg)
    assert rep["snr_db"] == pytest.approx(10.0)
    assert rep["gamma"] == pytest.approx(rep["r_st_norm"] / rep["r_gc"])
    rows = sigtime.sweep(sigtime.ScenarioConfig(), [1.0, 2.0], [(0.35, 2.0, 6.0), (0.35, 2.0, 12.0)])
    assert len(rows) == 4
    assert rows[0]["r_st_norm"] >= rows[2]["r_st_norm"]
    cfg.a = 0.5
    with pytest.raises(sigtime.SigtimeError):
        cfg.check()
