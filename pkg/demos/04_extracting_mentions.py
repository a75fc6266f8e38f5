"""
End-to-end mention extraction
=============================

The pipeline: clean, tokenize, segment hashtags, split on stop words,
expand abbreviations, assemble valid n-grams bottom-up, resolve
overlaps toward the longest full names, and link every survivor to its
gazetteer entries.
"""

import json
from pathlib import Path

from locspot import (
    ExtractionConfig,
    LocationExtractor,
    build_gazetteer,
    compute_model,
    load_gazetteer,
)
from locspot.assets import (
    BRACKET_PHRASES,
    CATEGORY_WORDS,
    GAZETTEER_STOPNAMES,
    data_path,
    read_word_list,
)

here = Path(__file__).parent
entries = load_gazetteer(here.parent / "tests" / "data" / "mini_gazetteer.json",
                         "generic_json")
gazetteer = build_gazetteer(
    entries,
    read_word_list(data_path(GAZETTEER_STOPNAMES)),
    read_word_list(data_path(BRACKET_PHRASES)),
    read_word_list(data_path(CATEGORY_WORDS)),
)
model = compute_model(gazetteer)
pipeline = LocationExtractor(model, gazetteer, ExtractionConfig.load())

tweets = [
    "sou th kr koil street near Oxford school.west mambalam..",
    "We r lucky where I am in New Iberia. #PrayForLouisiana #lawx",
    "Didn't Houston have a bad flood last year now again poor htown",
    "accident on avadi rd this morning",      # abbreviation match
    "stuck near cars india - adyar",          # hyphenated full name
]
for raw in tweets:
    print(raw)
    for mention in pipeline.extract(raw):
        print("   ", json.dumps(mention.to_dict(), ensure_ascii=False))
