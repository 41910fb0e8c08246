"""Seeded random corpora and synthetic working tables for property tests."""

from __future__ import annotations

import random
from pathlib import Path

from cookbook_compiler.model import Cookbook, IngredientUse, Recipe
from cookbook_compiler.textnorm import slugify

INGREDIENTS = [
    "almond", "anchovy", "bean", "bechamel", "butter", "chicken", "cinnamon",
    "cornmeal", "cream", "egg", "flour", "ham", "lard", "lemon", "maccheroni",
    "milk", "mushroom", "nutmeg", "olive oil", "onion", "parmesan", "pepper",
    "potato", "rice", "rigatoni", "salt", "sugar", "tomato", "truffle", "wine",
]
COURSES = ["appetizer", "beverage", "dessert", "dressing", "first"]
CITIES = ["Bologna", "Cesena", "Forlì", "Ravenna", "Rimini"]
CITY_COORDS = {
    "Bologna": ("44.4949", "11.3426"),
    "Cesena": ("44.1391", "12.2431"),
    "Forlì": ("44.2227", "12.0407"),
    "Ravenna": ("44.4184", "12.2035"),
    "Rimini": ("44.0594", "12.5683"),
}
AUTHORS = [
    ("Anna Maria Fiori", "female"),
    ("Carlo Neri", "male"),
    ("Dina", "female"),
    ("Lucia Bianchi", "female"),
    ("Sara Fornaciari", "female"),
]
PROCEDURES = ["baking", "boiling", "frying", "in the oven", "resting"]
TITLE_WORDS = [
    "Arrosto", "Brodo", "Crostata", "Dolce", "Éclair", "Frittata", "Gnocchi",
    "Minestra", "Pasticcio", "Polenta", "Ragù", "Soufflé", "Torta", "Zuppa",
    "7 sapori",
]


def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_cookbooks(rand: random.Random,
                     max_cookbooks: int = 5,
                     max_recipes: int = 60,
                     max_ingredients: int = 12) -> list[Cookbook]:
    """A grouped, resolved corpus straight at the model level.

    Ids follow the production slug scheme (per-cookbook -2, -3 suffixes)
    so index membership stays comparable with oracle dictionaries.
    """
    pool = rand.sample(INGREDIENTS, rand.randint(1, max_ingredients))
    cookbook_count = rand.randint(1, max_cookbooks)
    recipe_total = rand.randint(0, max_recipes)

    cookbooks: list[Cookbook] = []
    book_slugs: dict[str, int] = {}
    row = 2
    for number in range(cookbook_count):
        title = f"Quaderno {number + 1}"
        slug = slugify(title)
        book_slugs[slug] = book_slugs.get(slug, 0) + 1
        if book_slugs[slug] > 1:
            slug = f"{slug}-{book_slugs[slug]}"
        author = rand.choice(AUTHORS + [(None, None)])[0]
        cookbooks.append(Cookbook(
            id=slug,
            title=title,
            first_row=row,
            place=rand.choice(CITIES + [None]),
            author=author,
        ))
        row += 1

    taken_ids: set[str] = set()
    for _ in range(recipe_total):
        cookbook = rand.choice(cookbooks)
        title = rand.choice(TITLE_WORDS)
        if rand.random() < 0.5:
            title = f"{title} {rand.randint(1, 99)}"
        slug = slugify(title)
        candidate, attempt = f"{cookbook.id}/{slug}", 1
        while candidate in taken_ids:
            attempt += 1
            candidate = f"{cookbook.id}/{slug}-{attempt}"
        taken_ids.add(candidate)
        recipe = Recipe(
            id=candidate,
            title=title,
            cookbook_ref=cookbook.id,
            first_row=row,
            course_type=rand.choice(COURSES + [None, None]),
        )
        row += 1
        names = rand.sample(pool, rand.randint(0, min(len(pool), 8)))
        for name in names:
            recipe.ingredients.append(
                IngredientUse(raw_name=name, canonical_name=name,
                              source_row=row))
            row += 1
        if names and rand.random() < 0.3:
            extra = rand.choice(names)
            recipe.ingredients.append(
                IngredientUse(raw_name=extra, canonical_name=extra,
                              source_row=row))
            row += 1
        cookbook.recipes.append(recipe)

    return cookbooks


def synthetic_table(rand: random.Random, recipe_count: int = 460,
                    city_count: int = 5) -> str:
    """A clean TSV working table at the stated corpus scale."""
    assert 3 <= city_count <= len(CITIES)
    cities = CITIES[:city_count]
    header = ["Notebook", "From", "To", "Time qualifier", "Place", "Region",
              "Country", "Author surname name", "Img nome", "Pag. numero",
              "Title chapter", "Title Recipe", "Ingredient", "Quantity",
              "Unit", "Course", "Scope", "Procedure", "Serves", "Prep time",
              "Cook time", "Temperature"]
    lines = ["\t".join(header)]

    notebook_count = 10
    notebooks = []
    for number in range(notebook_count):
        author, _ = AUTHORS[number % len(AUTHORS)]
        city = cities[number % len(cities)]
        year = 1950 + 4 * number
        notebooks.append({
            "title": f"Quaderno {number + 1}",
            "author": author,
            "city": city,
            "from": str(year),
            "to": str(year + 10),
            "image": f"Quaderno {number + 1}_{city}_12mar2021_{number + 1}.jpg",
        })

    for index in range(recipe_count):
        notebook = notebooks[index % notebook_count]
        title = f"{TITLE_WORDS[index % len(TITLE_WORDS)]} n. {index + 1}"
        course = COURSES[index % len(COURSES)] if index % 7 else ""
        serves = str(2 + index % 10) if index % 3 == 0 else ""
        procedure = PROCEDURES[index % len(PROCEDURES)] if index % 2 else ""
        for position in range(2 + index % 5):
            ingredient = INGREDIENTS[(index * 3 + position * 7) % len(INGREDIENTS)]
            quantity, unit = "", ""
            if position % 3 == 0:
                quantity = f"{50 + (index + position) % 400} g"
            elif position % 3 == 1 and index % 2:
                quantity, unit = "1,5", "hg"
            lines.append("\t".join([
                notebook["title"], notebook["from"], notebook["to"],
                "ca" if index % 11 == 0 else "",
                notebook["city"], "Emilia Romagna", "Italy",
                notebook["author"], notebook["image"], "1",
                "Capitolo unico", title, ingredient, quantity, unit,
                course, "", procedure, serves, "n/s", "n/s", "n/s",
            ]))
    return "\n".join(lines) + "\n"


def write_synthetic_vocab(directory: Path) -> None:
    """Vocabulary files covering every pool term, so builds stay clean."""
    directory.mkdir(parents=True, exist_ok=True)
    lines = ["ingredient\tvariants"]
    for name in INGREDIENTS:
        variants = "tartuffi; tartufo" if name == "truffle" else ""
        lines.append(f"{name}\t{variants}")
    (directory / "ingredients.tsv").write_text("\n".join(lines) + "\n",
                                               encoding="utf-8")
    (directory / "courses.tsv").write_text(
        "\n".join(["course"] + COURSES) + "\n", encoding="utf-8")
    lines = ["city\tregion\tcountry\tlat\tlon"]
    for city in CITIES:
        lat, lon = CITY_COORDS[city]
        lines.append(f"{city}\tEmilia Romagna\tItaly\t{lat}\t{lon}")
    (directory / "geography.tsv").write_text("\n".join(lines) + "\n",
                                             encoding="utf-8")
    (directory / "procedures.tsv").write_text(
        "\n".join(["procedure"] + PROCEDURES) + "\n", encoding="utf-8")
    lines = ["unit\tgrams_per_unit", "g\t1", "hg\t100", "kg\t1000", "dl\t", "l\t"]
    (directory / "units.tsv").write_text("\n".join(lines) + "\n",
                                         encoding="utf-8")
    (directory / "scopes.tsv").write_text("scope\neveryday\nfestive\n",
                                          encoding="utf-8")
    lines = ["name\tgender"] + [f"{name}\t{gender}" for name, gender in AUTHORS]
    (directory / "authors.tsv").write_text("\n".join(lines) + "\n",
                                           encoding="utf-8")
