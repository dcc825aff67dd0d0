"""World vocabulary: hierarchical categorizations and per-problem scenes.

A vocabulary holds 4 categorizations of 4 ordered category layers each;
every category carries 5 named subcategories of 20 item names.  A *scene*
is the slice of that world one problem lives in: a categorization, a window
of consecutive layers, one shared subcategory, and the chosen item names
per layer.

Item names double as parser tokens in the rendered English, so the loader
rejects names that would collide with the sentence grammar (digits, commas,
sentence punctuation, the connectives " and " / " does " / " equals "), any
name equal to a category name, and any name whose possessive-final segment
is a category name (those would be indistinguishable from aggregate
parameters like "Parmesan Cheese's Ingredient" in surface text).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .rng import Stream
from .vocab_builtin import VOCABULARY_DATA

N_CATEGORIZATIONS = 4
N_LAYERS = 4
N_SUBCATEGORIES = 5
N_ITEMS = 20

# Substrings the renderer/parsers treat as structure, not content.
_FORBIDDEN_SUBSTRINGS = (",", ";", ".", "?", ":", " and ", " does ", " equals ")


class VocabularyError(ValueError):
    """Malformed or invalid vocabulary source."""


@dataclass(frozen=True)
class Category:
    name: str
    subcategory_names: tuple[str, ...]
    # items[k] lists the 20 item names of subcategory k.
    items: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class Categorization:
    categories: tuple[Category, ...]

    @property
    def layer_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.categories)


@dataclass(frozen=True)
class Vocabulary:
    categorizations: tuple[Categorization, ...]

    @property
    def category_names(self) -> frozenset[str]:
        """All 16 category-layer names, used to classify parameters in text."""
        return frozenset(
            c.name for cz in self.categorizations for c in cz.categories
        )


@dataclass(frozen=True)
class Scene:
    """The world slice backing one problem."""

    categorization_index: int
    start_layer: int
    depth: int
    subcategory_index: int
    category_names: tuple[str, ...]  # depth entries, outermost first
    layer_items: tuple[tuple[str, ...], ...]  # depth tuples of chosen names


def _validate_category(category: Category) -> None:
    where = f"category {category.name!r}"
    if len(category.subcategory_names) != N_SUBCATEGORIES:
        raise VocabularyError(
            f"{where}: expected {N_SUBCATEGORIES} subcategories, "
            f"got {len(category.subcategory_names)}"
        )
    seen: set[str] = set()
    for sub_name, items in zip(category.subcategory_names, category.items):
        if len(items) != N_ITEMS:
            raise VocabularyError(
                f"{where}, subcategory {sub_name!r}: expected {N_ITEMS} items, "
                f"got {len(items)}"
            )
        for item in items:
            if item in seen:
                raise VocabularyError(f"{where}: duplicate item {item!r}")
            seen.add(item)


def _validate_item_text(item: str, where: str, category_names: frozenset[str]) -> None:
    if not item or item != item.strip():
        raise VocabularyError(f"{where}: blank or unstripped item {item!r}")
    if any(ch.isdigit() for ch in item):
        raise VocabularyError(f"{where}: item {item!r} contains a digit")
    for sub in _FORBIDDEN_SUBSTRINGS:
        if sub in item:
            raise VocabularyError(f"{where}: item {item!r} contains {sub!r}")
    if item in category_names:
        raise VocabularyError(f"{where}: item {item!r} equals a category name")
    # Reject e.g. "Farmer's Supermarket": its possessive-final segment reads
    # as a category, so "each X's Farmer's Supermarket" would parse as an
    # aggregate parameter.
    tail = item.rsplit("'s ", 1)[-1]
    if tail != item and tail in category_names:
        raise VocabularyError(
            f"{where}: item {item!r} ends in a possessive of category {tail!r}"
        )


def validate_vocabulary(vocab: Vocabulary) -> Vocabulary:
    if len(vocab.categorizations) != N_CATEGORIZATIONS:
        raise VocabularyError(
            f"expected {N_CATEGORIZATIONS} categorizations, "
            f"got {len(vocab.categorizations)}"
        )
    names = vocab.category_names
    for cz in vocab.categorizations:
        if len(cz.categories) != N_LAYERS:
            raise VocabularyError(
                f"categorization {cz.layer_names}: expected {N_LAYERS} "
                f"category layers, got {len(cz.categories)}"
            )
        for cat in cz.categories:
            _validate_category(cat)
            for items in cat.items:
                for item in items:
                    _validate_item_text(item, f"category {cat.name!r}", names)
    return vocab


def _from_nested(data) -> Vocabulary:
    categorizations = []
    for cz in data:
        categories = []
        for cat_name, subcats in cz:
            sub_names = tuple(s for s, _ in subcats)
            items = tuple(tuple(i) for _, i in subcats)
            categories.append(Category(cat_name, sub_names, items))
        categorizations.append(Categorization(tuple(categories)))
    return Vocabulary(tuple(categorizations))


def builtin_vocabulary() -> Vocabulary:
    return validate_vocabulary(_from_nested(VOCABULARY_DATA))


def load_vocabulary(source: str = "builtin") -> Vocabulary:
    """Load and validate a vocabulary.

    ``source`` is either the literal string ``"builtin"`` or a path to a
    JSON document: a list of 4 categorization objects, each mapping a
    category name to an object that maps subcategory names to 20-item
    arrays (object order is significant and gives the layer order).
    """
    if source == "builtin":
        return builtin_vocabulary()
    try:
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise VocabularyError(f"cannot read vocabulary file {source!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise VocabularyError(f"vocabulary file {source!r} is not valid JSON: {exc}")
    if not isinstance(doc, list):
        raise VocabularyError("vocabulary document must be a list of categorizations")
    nested = []
    for cz in doc:
        if not isinstance(cz, dict):
            raise VocabularyError("each categorization must be an object")
        layers = []
        for cat_name, subcats in cz.items():
            if not isinstance(subcats, dict):
                raise VocabularyError(
                    f"category {cat_name!r}: subcategories must be an object"
                )
            layers.append(
                (cat_name, tuple((s, tuple(items)) for s, items in subcats.items()))
            )
        nested.append(tuple(layers))
    return validate_vocabulary(_from_nested(nested))


def dump_vocabulary(vocab: Vocabulary) -> str:
    """Serialize a vocabulary to the JSON document format `load_vocabulary` reads."""
    doc = [
        {
            cat.name: {
                sub: list(items)
                for sub, items in zip(cat.subcategory_names, cat.items)
            }
            for cat in cz.categories
        }
        for cz in vocab.categorizations
    ]
    return json.dumps(doc, indent=2)


def sample_scene(
    vocab: Vocabulary, d: int, counts: Sequence[int], rng: Stream
) -> Scene:
    """Draw the world slice for one problem.

    Picks a categorization, then one of the ``4 - d + 1`` windows of ``d``
    consecutive layers, then one subcategory shared by every layer, then
    ``counts[i]`` distinct item names for layer ``i``.  Draw order is fixed
    (categorization, window, subcategory, items outermost layer first), so
    one stream position always yields the same scene.
    """
    if not 2 <= d <= N_LAYERS:
        raise ValueError(f"depth must be in [2, {N_LAYERS}], got {d}")
    if len(counts) != d:
        raise ValueError(f"expected {d} layer counts, got {len(counts)}")
    for c in counts:
        if not 1 <= c <= N_ITEMS:
            raise ValueError(f"layer count {c} outside [1, {N_ITEMS}]")

    cz_index = rng.randbelow(N_CATEGORIZATIONS)
    start = rng.randbelow(N_LAYERS - d + 1)
    sub = rng.randbelow(N_SUBCATEGORIES)
    cz = vocab.categorizations[cz_index]
    layers = cz.categories[start : start + d]
    chosen = tuple(
        tuple(rng.sample(cat.items[sub], counts[i])) for i, cat in enumerate(layers)
    )
    return Scene(
        categorization_index=cz_index,
        start_layer=start,
        depth=d,
        subcategory_index=sub,
        category_names=tuple(cat.name for cat in layers),
        layer_items=chosen,
    )
