#!/usr/bin/env python3
"""Regenerates the desk-scale fixture bundle under fixtures/.

The bundle is a miniature, format-faithful version of the seven source
dumps plus alignment tables, a word-association benchmark, and QA items.
Run from the repository root:  python3 scripts/make_fixtures.py
"""

import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")


def write(name, rows):
    path = os.path.join(FIXTURES, name)
    with open(path, "w", encoding="utf-8") as f:
        for row in rows:
            if isinstance(row, (list, tuple)):
                f.write("\t".join(row) + "\n")
            else:
                f.write(row + "\n")


def main():
    os.makedirs(FIXTURES, exist_ok=True)

    write("conceptnet.tsv", [
        ("/a/[/r/UsedFor/,/c/en/piano/,/c/en/music/]", "/r/UsedFor", "/c/en/piano",
         "/c/en/music", '{"surfaceText": "[[piano]] is used for [[music]]"}'),
        ("/a/2", "/r/AtLocation", "/c/en/piano", "/c/en/concert_hall", ""),
        ("/a/3", "/r/AtLocation", "/c/en/lizard", "/c/en/tropical_rainforest", ""),
        ("/a/4", "/r/Synonym", "/c/en/big", "/c/en/large", ""),
        ("/a/5", "/r/IsA", "/c/en/cat", "/c/en/animal", ""),
        ("/a/6", "/r/CapableOf", "/c/en/pianist", "/c/en/play_piano", ""),
        ("/a/7", "/r/IsA", "/c/en/piano/n/wn/artifact", "/c/en/instrument", ""),
        ("/a/8", "/r/RelatedTo", "/c/en/day", "/c/en/night", ""),
        ("/a/9", "/r/RelatedTo", "/c/en/day", "/c/en/sun", ""),
        ("/a/10", "/r/RelatedTo", "/c/en/red", "/c/en/color", ""),
        ("/a/11", "/r/HasSubevent", "/c/en/accepts_invitation", "/c/en/party", ""),
        ("/a/12", "/r/RelatedTo", "/c/en/concert", "/c/en/music", ""),
    ])

    write("atomic.tsv", [
        ("personX accepts personY's invitation", "xEffect", "personX goes to a party"),
        ("personX accepts personY's invitation", "xIntent", "to be social"),
        ("personX plays ___ piano", "xNeed", "to sit at the piano"),
        ("personX plays ___ piano", "xAttr", "musical"),
        ("personX goes to a party", "xReact", "happy"),
    ])

    write("framenet.tsv", [
        ("Performance", "has_frame_element", "Performer"),
        ("Performance", "has_lexical_unit", "concert.n"),
        ("Tropical_rainforest", "inherits_from", "Place"),
        ("Performance", "uses", "Sound"),
        ("Cause_to_start", "is_causative_of", "Process_start"),
        ("Performer", "fe_has_semtype", "Sentient"),
        ("Sentient", "st_subtype_of", "Animate_being"),
    ])

    write("roget.tsv", [
        ("big", "synonym", "large"),
        ("truncate", "antonym", "extend"),
        ("cat", "synonym", "feline"),
        ("day", "antonym", "night"),
        ("happy", "synonym", "joyful"),
        ("piano", "synonym", "pianoforte"),
    ])

    write("visualgenome.tsv", [
        ("object", "o1", "woman.n.01"),
        ("object", "o2", "piano.n.01"),
        ("object", "o3", "water.n.06"),
        ("object", "o4", "tropical_rainforest.n.01"),
        ("object", "o5", "dog.n.01"),
        ("object", "o6", "person.n.01"),
        ("object", "o7", ""),
        ("rel", "o1", "next to", "o2"),
        ("rel", "o3", "in", "o4"),
        ("attr", "o5", "white"),
        ("attr", "o6", "running"),
        ("attr", "o3", "tropical"),
        ("attr", "o7", "brown"),
        ("rel", "o7", "behind", "o1"),
    ])

    write("vg_pos_lexicon.tsv", [
        ("white", "ADJ"),
        ("running", "VERB"),
        ("tropical", "ADJ"),
        ("brown", "ADJ"),
        ("three", "NUM"),
    ])

    write("wikidata.tsv", [
        ("Q5994", "piano", "P31", "Q34379", "musical instrument"),
        ("Q5994", "piano", "P186", "Q287", "wood"),
        ("Q525", "Sun", "P31", "Q523", "star"),
        ("Q1234", "thing", "P999", "Q4321", "other"),
    ])

    write("wikidata_pmap.tsv", [
        ("P31", "/r/IsA"),
        ("P361", "/r/PartOf"),
        ("P527", "/r/HasA"),
        ("P186", "/r/MadeOf"),
        ("P366", "/r/UsedFor"),
        ("P1552", "/r/HasProperty"),
        ("P276", "/r/AtLocation"),
        ("P461", "/r/Antonym"),
        ("P1889", "/r/DistinctFrom"),
        ("P1542", "/r/Causes"),
        ("P129", "/r/RelatedTo"),
        ("P460", "/r/Synonym"),
        ("P2283", "/r/CapableOf"),
        ("P101", "/r/HasContext"),
        ("P1659", "/r/SimilarTo"),
    ])

    write("wordnet.tsv", [
        ("dog.n.01", "hypernym", "canine.n.02"),
        ("wheel.n.01", "part_holonym", "car.n.01"),
        ("tree.n.01", "member_holonym", "forest.n.01"),
        ("tire.n.01", "substance_meronym", "rubber.n.01"),
        ("piano.n.01", "hypernym", "percussion_instrument.n.01"),
        ("cat.n.01", "hypernym", "feline.n.02"),
    ])

    write("ili.tsv", [
        ("/c/en/piano/n/wn/artifact", "wn:piano.n.01"),
        ("/c/en/seat/n/wn/furniture", "wn:seat.n.03"),
        ("/c/en/dog/n/wn/animal", "wn:dog.n.01"),
    ])

    write("predicate_matrix.tsv", [
        ("fn:lu:concert.n", "/c/en/concert"),
    ])

    write("fn_corpus.tsv", [
        ("Performance", "Performer", "pianist"),
        ("Performance", "Performer", "pianist"),
        ("Performance", "Performer", "virtuoso"),
    ])

    write("grounding_lexicon.tsv", [
        ("pianist", "/c/en/pianist"),
        ("singer", "/c/en/singer"),
    ])

    write("embedding_queries.tsv", [
        ("wn:piano.n.01", "piano keyboard with keys"),
        ("wn:water.n.06", "water clear liquid found in rivers"),
    ])

    write("embedding_index.tsv", [
        ("wd:Q5994", "piano with keyboard and keys"),
        ("wd:Q283", "water a transparent liquid found in rivers and lakes"),
        ("wd:Q525", "sun the bright star at the center of the solar system"),
        ("wd:Q34379", "musical instrument device used to make sounds"),
    ])

    write("bench.tsv", [
        ("day", "night|sun|light"),
        ("happy", "joyful|glad"),
        ("zebra", "stripes"),
    ])

    items = [
        {"question": "Bob the lizard lives in a warm place with lots of water. "
                     "Where does he probably live?",
         "answers": ["tropical rainforest", "desert"]},
        {"question": "What do you play to make music?", "answers": ["piano"]},
    ]
    with open(os.path.join(FIXTURES, "items.jsonl"), "w", encoding="utf-8") as f:
        for item in items:
            f.write(json.dumps(item) + "\n")

    write("stopwords.txt", sorted("""
        a an and are as at be been but by did do does for from had has have he
        her his how i if in into is it its me my no not of on or our she so
        that the their them then there these they this those to was we were
        what when where which who whom why will with would you your
    """.split()))

    config = {
        "output_dir": "out",
        "sources": {
            "conceptnet": {"input": "conceptnet.tsv"},
            "atomic": {"input": "atomic.tsv"},
            "framenet": {"input": "framenet.tsv"},
            "roget": {"input": "roget.tsv"},
            "visualgenome": {"input": "visualgenome.tsv", "aux": "vg_pos_lexicon.tsv"},
            "wikidata": {"input": "wikidata.tsv", "aux": "wikidata_pmap.tsv"},
            "wordnet": {"input": "wordnet.tsv"},
        },
        "linking": {
            "lexical": True,
            "alignments": [
                {"path": "ili.tsv", "left_ns": "/c/", "right_ns": "wn:",
                 "relation": "sameas"},
                {"path": "predicate_matrix.tsv", "left_ns": "fn:", "right_ns": "/c/",
                 "relation": "lexunit"},
            ],
            "fn_corpus": {"annotations": "fn_corpus.tsv", "lexicon": "grounding_lexicon.tsv"},
            "embedding": {"queries": "embedding_queries.tsv",
                          "index": "embedding_index.tsv", "k": 50},
        },
        "analysis": {"damping": 0.85, "tol": 1e-9, "max_iter": 100, "top": 5},
        "embeddings": {"model": "transe", "dimension": 16, "learning_rate": 0.1,
                       "epochs": 30, "negatives": 5, "seed": 13, "threads": 1},
        "evaluation": {"benchmark": "bench.tsv", "levenshtein_threshold": 0.9},
        "grounding": {"data": "items.jsonl", "stopwords": "stopwords.txt", "max_ngram": 3},
    }
    with open(os.path.join(FIXTURES, "pipeline.json"), "w", encoding="utf-8") as f:
        json.dump(config, f, indent=2)
        f.write("\n")

    print("fixtures written to", os.path.normpath(FIXTURES))


if __name__ == "__main__":
    main()
