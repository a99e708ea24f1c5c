"""Smoke tests for the Python bindings."""

import numpy as np
import pytest

import dsrate


def test_builtin_datasets():
    assert dsrate.builtin_names() == ["toy", "crimes", "crimes_no_homicide"]
    toy = dsrate.builtin("toy")
    assert (toy.n, toy.p, toy.q) == (4, 3, 5)
    assert toy.ratings.tolist() == [[2, 4, 5], [3, 3, 1], [2, 1, 4], [1, 5, 3]]

    crimes = dsrate.builtin("crimes")
    assert crimes.col_labels[4] == "Homicide"
    assert (crimes.ratings[:, 4] == 4).all()


def test_rating_matrix_from_array():
    r = dsrate.rating_matrix([[1, 2], [3, 4], [2, 2]], q=4)
    assert (r.n, r.p, r.q) == (3, 2, 4)
    with pytest.raises(dsrate.Error, match="RatingOutOfRange"):
        dsrate.rating_matrix([[1, 9], [2, 2]], q=4)


def test_recodings():
    toy = dsrate.builtin("toy")
    t, s = dsrate.shifted_counts(toy)
    assert t.data.tolist() == [[1, 3, 4], [2, 2, 0], [1, 0, 3], [0, 4, 2]]
    assert (t.data + s.data == 4).all()

    tstar, sstar = dsrate.rank_order(toy)
    assert tstar.data[1].tolist() == [1.5, 1.5, 0.0]

    e = dsrate.dominance_matrix(toy)
    assert e.data.sum(axis=1).tolist() == [0.0, 0.0, 0.0, 0.0]

    scd = dsrate.successive_categories(toy)
    assert scd.data.shape == (4, 7)
    assert scd.col_labels[-1] == "bnd_4"

    fr = dsrate.double_rows(toy, recoding="ranks")
    assert fr.data.shape == (8, 3)
    fc = dsrate.double_columns(toy)
    assert fc.col_labels[0] == "obj_1+"


def test_ds3_reproduces_reported_share():
    res = dsrate.run("ds3", dsrate.builtin("crimes_no_homicide"))
    assert res.variant == "ds3"
    assert res.cumulative_explained[1] == pytest.approx(0.89, abs=0.01)
    assert res.rows_standard.shape == (34, 2)
    assert res.objects.optimal_scaling
    assert len(res.individuals.labels) == 17


def test_car_reproduces_reported_share():
    res = dsrate.run("car", dsrate.builtin("crimes_no_homicide"))
    assert res.cumulative_explained[1] == pytest.approx(0.64, abs=0.01)
    assert res.individuals.optimal_scaling

    means = dsrate.estimate_mean_ratings(res)
    data = dsrate.builtin("crimes_no_homicide").ratings
    for j, m in enumerate(means):
        assert m.mean == pytest.approx(float(np.mean(data[:, j])), abs=1e-10)


def test_degenerate_column_is_reported():
    with pytest.raises(dsrate.Error, match="Homicide-"):
        dsrate.run("car", dsrate.builtin("crimes"))
    res = dsrate.run("car", dsrate.builtin("crimes"), drop_degenerate=True)
    assert res.dropped == ["Homicide"]


def test_serialization_and_svg(tmp_path):
    res = dsrate.run("ds3", dsrate.builtin("toy"))
    text = dsrate.serialize(res, format="json")
    assert '"variant":"ds3"' in text

    out = tmp_path / "map.svg"
    dsrate.write_svg(res, str(out), kind="objects")
    body = out.read_text()
    assert body.startswith("<?xml")
    assert body.count("<circle") == 3
