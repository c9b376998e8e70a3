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

import json
import math

import pytest

import gridauction as ga


def evening_peak():
    v = [1.0] * 24
    v[17], v[18], v[19] = 2.0, 5.0, 2.0
    return v


def test_par_and_cut():
    load = evening_peak()
    assert ga.total_load(load) == pytest.approx(30.0)
    assert ga.par(load) == pytest.approx(4.0)
    cut = ga.par_cut(load, 0.4)
    assert cut[17:20] == pytest.approx([3.0, 3.0, 3.0])
    assert ga.par(cut) == pytest.approx(2.4)
    assert ga.is_feasible(load, 0.4)
    assert ga.par_cut([4.0, 2.0, 2.0], 0.5) is None


def test_errors_map_to_value_error():
    with pytest.raises(ga.UndefinedParError):
        ga.par([0.0, 0.0])
    with pytest.raises(ga.StructuralError):
        ga.aggregate([[1.0, 2.0], [1.0]])
    with pytest.raises(ValueError):
        ga.par_cut([1.0, 2.0], 0.0)


def test_aggregate():
    assert ga.aggregate([[1.0, 2.0], [3.0, 4.0]]) == [4.0, 6.0]


def test_clear_slot_both_partial_paths():
    book = [(1, 2, 12), (2, 3, 10), (3, 3, 8), (4, 1, 6), (5, 2, 5)]
    out = ga.clear_slot(book, 6.0)
    assert out["winners"] == [(1, 2.0), (2, 3.0), (3, 1.0)]
    assert out["clearing_price"] == 6.0
    walked = ga.clear_slot(book, 6.0, walk_away=True)
    assert walked["walkaways"] == [3]
    assert walked["leftover_supply"] == 1.0


def test_pricing_and_metrics():
    model = ga.experiment_cost(q1=100, q2=1000, population=4)
    assert model(100.0) == pytest.approx(0.01)
    quad = ga.quadratic_cost(2.0, 3.0, 5.0)
    assert quad(2.0) == pytest.approx(19.0)
    prices = ga.reserve_prices(ga.quadratic_cost(2.0, 3.0), [0.0, 1.0, 2.0])
    assert prices[0] == 0.0 and prices[2] > prices[1]
    assert ga.system_cost(quad, [1.0, 1.0]) == pytest.approx(20.0)
    assert ga.shift_percentage([2.0, 2.0], [4.0, 0.0]) == pytest.approx(0.5)


def test_run_experiment(tmp_path):
    cfg = {"population": 20, "cut_percentages": [0.3], "trials": 3, "seed": 2}
    summary = ga.run_experiment(json.dumps(cfg), str(tmp_path))
    mean, ci = summary["us_c30"]["satisfied"]
    assert mean == 1.0
    assert math.isfinite(ci)
    assert (tmp_path / "summary.csv").exists()
    with pytest.raises(ga.ConfigError):
        ga.run_experiment(json.dumps({"bogus": 1}))
