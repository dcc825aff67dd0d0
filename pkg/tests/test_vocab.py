"""Vocabulary loading, validation, and scene sampling."""

import json

import pytest
import scipy.stats

from gsmdag.rng import Stream
from gsmdag.vocab import (
    VocabularyError,
    builtin_vocabulary,
    dump_vocabulary,
    load_vocabulary,
    sample_scene,
)

VOCAB = builtin_vocabulary()


def test_builtin_shape():
    assert len(VOCAB.categorizations) == 4
    for cz in VOCAB.categorizations:
        assert len(cz.categories) == 4
        for cat in cz.categories:
            assert len(cat.subcategory_names) == 5
            assert all(len(items) == 20 for items in cat.items)
            all_items = [i for items in cat.items for i in items]
            assert len(set(all_items)) == 100


def test_builtin_layer_order():
    assert VOCAB.categorizations[0].layer_names == (
        "District",
        "Supermarket",
        "Product",
        "Ingredient",
    )
    assert VOCAB.categorizations[2].layer_names == (
        "School",
        "Classroom",
        "Backpack",
        "Stationery",
    )


def test_builtin_known_names():
    product = VOCAB.categorizations[0].categories[2]
    snack = product.items[product.subcategory_names.index("Snack Foods")]
    assert "Potato Chips" in snack
    assert "Beef Jerky" in snack
    district = VOCAB.categorizations[0].categories[0]
    commercial = district.items[district.subcategory_names.index("Commercial Districts")]
    assert "Silicon Valley" in commercial and "Wall Street" in commercial
    dairy = product.items[product.subcategory_names.index("Dairy Products")]
    for name in ("Cheese", "Parmesan Cheese", "Goat Cheese", "Ice Cream"):
        assert name in dairy


def test_no_item_shadows_category_name():
    names = VOCAB.category_names
    for cz in VOCAB.categorizations:
        for cat in cz.categories:
            for items in cat.items:
                for item in items:
                    assert item not in names
                    tail = item.rsplit("'s ", 1)[-1]
                    assert tail not in names or tail == item


def test_json_round_trip(tmp_path):
    path = tmp_path / "vocab.json"
    path.write_text(dump_vocabulary(VOCAB), encoding="utf-8")
    again = load_vocabulary(str(path))
    assert again == VOCAB


def test_load_rejects_short_subcategory(tmp_path):
    doc = json.loads(dump_vocabulary(VOCAB))
    # Drop one item from one subcategory.
    doc[0]["District"]["Residential Districts"].pop()
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(VocabularyError, match="Residential Districts"):
        load_vocabulary(str(path))


def test_load_rejects_duplicate_item(tmp_path):
    doc = json.loads(dump_vocabulary(VOCAB))
    doc[0]["District"]["Residential Districts"][1] = "Suburban District"
    path = tmp_path / "dup.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    with pytest.raises(VocabularyError, match="duplicate"):
        load_vocabulary(str(path))


def test_load_rejects_missing_file():
    with pytest.raises(VocabularyError, match="cannot read"):
        load_vocabulary("/no/such/vocab.json")


def test_sample_scene_shape_and_distinctness():
    rng = Stream(101)
    for _ in range(50):
        scene = sample_scene(VOCAB, 3, (4, 3, 2), rng)
        assert scene.depth == 3
        assert len(scene.layer_items) == 3
        assert tuple(map(len, scene.layer_items)) == (4, 3, 2)
        cz = VOCAB.categorizations[scene.categorization_index]
        for layer, items in enumerate(scene.layer_items):
            assert len(set(items)) == len(items)
            cat = cz.categories[scene.start_layer + layer]
            assert set(items) <= set(cat.items[scene.subcategory_index])
        assert scene.category_names == tuple(
            c.name
            for c in cz.categories[scene.start_layer : scene.start_layer + 3]
        )


def test_sample_scene_full_depth_forces_window():
    rng = Stream(7)
    for _ in range(20):
        scene = sample_scene(VOCAB, 4, (2, 2, 2, 2), rng)
        assert scene.start_layer == 0


def test_sample_scene_deterministic():
    a = sample_scene(VOCAB, 3, (2, 2, 2), Stream.for_problem(55, 0))
    b = sample_scene(VOCAB, 3, (2, 2, 2), Stream.for_problem(55, 0))
    assert a == b


def test_sample_scene_window_uniform():
    rng = Stream(9)
    counts = [0, 0, 0]
    for _ in range(10_000):
        counts[sample_scene(VOCAB, 2, (1, 1), rng).start_layer] += 1
    _, p = scipy.stats.chisquare(counts)
    assert p > 0.001


def test_sample_scene_rejects_over_capacity():
    with pytest.raises(ValueError, match="layer count"):
        sample_scene(VOCAB, 2, (21, 4), Stream(1))
