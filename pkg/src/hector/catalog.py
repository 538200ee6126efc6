"""Selection catalogs backing the mnemonic wizard.

Six catalogs exist: hotels, floors, rooms, meals, toppings and beverages.
Floors and rooms are plain numeric ranges and are synthesized in memory;
the other four are loaded from CSV-style data files.  Names are mnemonics
only -- derivation consumes indices, so swapping in different name lists
never changes a derived passkey.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


class CatalogError(ValueError):
    """Raised for missing, malformed or inconsistent catalog data."""


@dataclass(frozen=True)
class CatalogKind:
    kind: str
    expected_cardinality: int
    digit_width: int


# The six fixed catalog shapes.  digit_width is the minimal zero-padded
# width of expected_cardinality.
KINDS: dict[str, CatalogKind] = {
    "hotel": CatalogKind("hotel", 1214, 4),
    "floor": CatalogKind("floor", 1000, 4),
    "room": CatalogKind("room", 500, 3),
    "meal": CatalogKind("meal", 61, 2),
    "topping": CatalogKind("topping", 14, 2),
    "beverage": CatalogKind("beverage", 11, 2),
}

# Kinds whose entries are just their own index; no data file needed.
NUMERIC_KINDS = ("floor", "room")

# File names for the file-backed kinds, relative to the data directory.
CATALOG_FILES = {
    "hotel": "hotels.csv",
    "meal": "meals.csv",
    "topping": "toppings.csv",
    "beverage": "beverages.csv",
}


@dataclass(frozen=True)
class CatalogEntry:
    index: int
    name: str


@dataclass(frozen=True)
class Catalog:
    kind: CatalogKind
    entries: tuple[CatalogEntry, ...]

    def __post_init__(self):
        n = self.kind.expected_cardinality
        if len(self.entries) != n:
            raise CatalogError(
                f"{self.kind.kind} catalog has {len(self.entries)} entries, expected {n}"
            )
        names = set()
        for pos, entry in enumerate(self.entries, start=1):
            if entry.index != pos:
                raise CatalogError(
                    f"{self.kind.kind} catalog index {entry.index} at position {pos}; "
                    f"indices must be contiguous 1..{n}"
                )
            if not entry.name:
                raise CatalogError(f"{self.kind.kind} entry {pos} has an empty name")
            if entry.name in names:
                raise CatalogError(f"{self.kind.kind} catalog has duplicate name {entry.name!r}")
            names.add(entry.name)


def synthesize_numeric(kind: CatalogKind) -> Catalog:
    """Catalog for a pure numeric range: names equal their indices."""
    entries = tuple(
        CatalogEntry(i, str(i)) for i in range(1, kind.expected_cardinality + 1)
    )
    return Catalog(kind, entries)


def load_catalog(path: str | os.PathLike | None, kind: CatalogKind) -> Catalog:
    """Load a catalog from its data file.

    Numeric kinds (floor, room) may be loaded with path=None, in which
    case the catalog is synthesized.  File-backed kinds require the file.
    """
    if path is None:
        if kind.kind in NUMERIC_KINDS:
            return synthesize_numeric(kind)
        raise CatalogError(f"{kind.kind} catalog requires a data file")
    if not os.path.exists(path):
        raise CatalogError(f"catalog file not found: {path}")
    entries = []
    with open(path, encoding="utf-8", newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            idx_str, sep, name = line.partition(",")
            if not sep or not idx_str.isdigit():
                raise CatalogError(f"{path}:{lineno}: malformed row {line!r}")
            entries.append(CatalogEntry(int(idx_str), name))
    return Catalog(kind, tuple(entries))


def save_catalog(catalog: Catalog, path: str | os.PathLike) -> None:
    """Write a catalog in the data file format (inverse of load_catalog)."""
    width = catalog.kind.digit_width
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for entry in catalog.entries:
            fh.write(f"{entry.index:0{width}d},{entry.name}\n")


def lookup_name(catalog: Catalog, index: int) -> str:
    if not 1 <= index <= catalog.kind.expected_cardinality:
        raise CatalogError(
            f"{catalog.kind.kind} index {index} outside 1..{catalog.kind.expected_cardinality}"
        )
    return catalog.entries[index - 1].name


def search_prefix(catalog: Catalog, prefix: str, limit: int) -> list[CatalogEntry]:
    """Case-insensitive prefix search, in index order, at most limit hits."""
    if limit < 1:
        raise CatalogError(f"limit must be >= 1, got {limit}")
    needle = prefix.lower()
    hits = []
    for entry in catalog.entries:
        if entry.name.lower().startswith(needle):
            hits.append(entry)
            if len(hits) == limit:
                break
    return hits


def load_all(data_dir: str | os.PathLike) -> dict[str, Catalog]:
    """Load every catalog: file-backed kinds from data_dir, numeric kinds synthesized."""
    catalogs = {}
    for name, kind in KINDS.items():
        if name in NUMERIC_KINDS:
            catalogs[name] = synthesize_numeric(kind)
        else:
            catalogs[name] = load_catalog(os.path.join(data_dir, CATALOG_FILES[name]), kind)
    return catalogs


# ---------------------------------------------------------------------------
# Default shipped data.  The real-world lists behind the wizard (all US
# hotels, popular breakfast foods) are not bundled; these deterministic
# placeholders have the right cardinalities and can be swapped for real
# lists without affecting derivation.  Hotel entry 1 is "1717 Broadway",
# the conventional first entry; the worked-example breakfast anchors
# (meal 1, topping 3, beverage 4) are kept too.

_MEALS = [
    "Bacon", "Scrambled eggs", "Pancakes", "Waffles", "French toast",
    "Oatmeal", "Granola", "Bagel", "Croissant", "Blueberry muffin",
    "Hash browns", "Breakfast burrito", "Sausage links", "Sausage patty",
    "Fried eggs", "Poached eggs", "Eggs Benedict", "Omelette",
    "Biscuits and gravy", "Grits", "Cream of wheat", "Corned beef hash",
    "English muffin", "Toast", "Cinnamon roll", "Danish", "Donut", "Scone",
    "Crepes", "Quiche", "Frittata", "Breakfast sandwich", "Avocado toast",
    "Yogurt parfait", "Fruit salad", "Cottage cheese", "Smoked salmon",
    "Huevos rancheros", "Chilaquiles", "Breakfast tacos", "Ham steak",
    "Canadian bacon", "Turkey sausage", "Chicken and waffles",
    "Steak and eggs", "Shakshuka", "Breakfast pizza", "Dutch baby",
    "Banana bread", "Zucchini bread", "Coffee cake", "Porridge", "Muesli",
    "Overnight oats", "Chia pudding", "Smoothie bowl", "Egg white omelette",
    "Tofu scramble", "Breakfast casserole", "Monte Cristo", "Cereal",
]

_TOPPINGS = [
    "Butter", "Maple syrup", "Cream cheese", "Strawberry jam", "Grape jelly",
    "Honey", "Peanut butter", "Nutella", "Whipped cream", "Powdered sugar",
    "Fresh berries", "Sliced banana", "Chopped nuts", "Chocolate chips",
]

_BEVERAGES = [
    "Coffee", "Black tea", "Orange juice", "Hot chocolate", "Green tea",
    "Apple juice", "Milk", "Espresso", "Latte", "Cappuccino",
    "Grapefruit juice",
]


def default_entries(kind: CatalogKind) -> tuple[CatalogEntry, ...]:
    if kind.kind in NUMERIC_KINDS:
        return synthesize_numeric(kind).entries
    if kind.kind == "hotel":
        names = ["1717 Broadway"] + [
            f"Hotel {i:04d}" for i in range(2, kind.expected_cardinality + 1)
        ]
    elif kind.kind == "meal":
        names = _MEALS
    elif kind.kind == "topping":
        names = _TOPPINGS
    elif kind.kind == "beverage":
        names = _BEVERAGES
    else:
        raise CatalogError(f"unknown catalog kind {kind.kind!r}")
    return tuple(CatalogEntry(i, name) for i, name in enumerate(names, start=1))


def default_catalog(kind: CatalogKind) -> Catalog:
    return Catalog(kind, default_entries(kind))


def write_default_catalogs(data_dir: str | os.PathLike) -> None:
    """Create the four shipped data files under data_dir."""
    os.makedirs(data_dir, exist_ok=True)
    for name, filename in CATALOG_FILES.items():
        save_catalog(default_catalog(KINDS[name]), os.path.join(data_dir, filename))
