#!/usr/bin/env python3
"""Regenerate every fixture file in this directory.

Deterministic: running it twice produces byte-identical output. The corpus
is built from a fixed word inventory so the segmenter vocabulary covers
every word that appears in a document.
"""

import json
from pathlib import Path

HERE = Path(__file__).resolve().parent

SENTIMENT = {
    "good": 1.0,
    "great": 2.0,
    "fine": 0.5,
    "bad": -1.0,
    "awful": -2.0,
    "terrible": -1.5,
}

DEGREE = {
    "most": "most",
    "extremely": "most",
    "very": "very",
    "really": "very",
    "more": "more",
    "rather": "more",
    "nearly": "nearly",
    "almost": "nearly",
    "barely": "barely",
    "slightly": "barely",
}

NEGATION = ["not", "never", "no"]

STOPWORDS = ["the", "a", "an", "and", "is", "was", "it", "this", "of", "to", "in", "on", "say", "for"]

# name, level, province_code
GAZETTEER = [
    ("hubei", "province", "hubei"),
    ("wuhan", "city", "hubei"),
    ("xiangyang", "city", "hubei"),
    ("guangdong", "province", "guangdong"),
    ("guangzhou", "city", "guangdong"),
    ("shenzhen", "city", "guangdong"),
    ("beijing", "province", "beijing"),
    ("haidian", "county", "beijing"),
    ("sichuan", "province", "sichuan"),
    ("chengdu", "city", "sichuan"),
]

SOURCES = [
    ("gov-portal", "government"),
    ("city-office", "government"),
    ("city-daily", "mass"),
    ("metro-news", "mass"),
    ("chat-square", "social"),
    ("micro-feed", "social"),
]

TOPICS = ["safety", "transport", "housing", "health"]
NOUNS = ["service", "response", "supply", "inspection", "market", "delay", "shortage", "repair"]
VERB_PHRASES = ["residents say", "officials say", "reports say"]

POSITIVE_CLAUSES = [
    "the {noun} was very good",
    "the {noun} is really great",
    "people call the {noun} fine and good",
    "the {noun} turned out extremely good",
]
NEGATIVE_CLAUSES = [
    "the {noun} was terrible",
    "the {noun} is awful",
    "people call the {noun} not good",
    "the {noun} stayed barely fine and bad",
]
FILLER_CLAUSES = [
    "more updates to follow",
    "a review is planned for next week",
    "crews continue the work",
    "the schedule stays unchanged",
]
REGION_CYCLE = ["wuhan", "guangzhou", "beijing", "chengdu", "xiangyang", None]


def write_lexicons():
    with open(HERE / "sentiment.tsv", "w", encoding="utf-8") as fh:
        for word, weight in SENTIMENT.items():
            fh.write(f"{word}\t{weight}\n")
    with open(HERE / "degree.tsv", "w", encoding="utf-8") as fh:
        for word, category in DEGREE.items():
            fh.write(f"{word}\t{category}\n")
    (HERE / "negation.txt").write_text("\n".join(NEGATION) + "\n", encoding="utf-8")
    (HERE / "stopwords.txt").write_text("\n".join(STOPWORDS) + "\n", encoding="utf-8")


def write_gazetteer():
    with open(HERE / "gazetteer.csv", "w", encoding="utf-8") as fh:
        fh.write("name,level,province_code\n")
        for name, level, code in GAZETTEER:
            fh.write(f"{name},{level},{code}\n")


def write_sources():
    with open(HERE / "sources.csv", "w", encoding="utf-8") as fh:
        fh.write("source_name,media_type\n")
        for name, media in SOURCES:
            fh.write(f"{name},{media}\n")


def make_documents():
    docs = []
    for i in range(100):
        positive = i % 3 != 0
        topic = TOPICS[i % len(TOPICS)]
        noun = NOUNS[i % len(NOUNS)]
        region = REGION_CYCLE[i % len(REGION_CYCLE)]
        source = SOURCES[i % len(SOURCES)][0]
        day = 1 + (i % 10)
        hour = 8 + (i * 5) % 12
        minute = (i * 7) % 60
        place = f"in {region} " if region else ""
        clauses = POSITIVE_CLAUSES if positive else NEGATIVE_CLAUSES
        first = clauses[i % len(clauses)].format(noun=noun)
        second = f"{VERB_PHRASES[i % len(VERB_PHRASES)]} the {topic} work {place}continues"
        third = FILLER_CLAUSES[i % len(FILLER_CLAUSES)]
        title = f"{topic} report {i:03d} {place}".strip()
        content = f"{first} {place}this week. {second}. {third}. item {i:03d}."
        docs.append(
            {
                "url": f"https://{source}.example/{topic}/{i:03d}",
                "title": title,
                "content": content,
                "published_at": f"2021-03-{day:02d}T{hour:02d}:{minute:02d}:00Z",
                "source_name": source,
            }
        )
    return docs


def write_documents(docs):
    with open(HERE / "e2e_docs.jsonl", "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(doc, ensure_ascii=False) + "\n")


def write_vocab(docs):
    words = set(SENTIMENT) | set(DEGREE) | set(NEGATION) | set(STOPWORDS)
    words |= {name for name, _, _ in GAZETTEER}
    for doc in docs:
        for field in ("title", "content"):
            for token in doc[field].split():
                words.add(token.strip("."))
    words.discard("")
    (HERE / "vocab.txt").write_text(
        "\n".join(sorted(words)) + "\n", encoding="utf-8"
    )


def main():
    write_lexicons()
    write_gazetteer()
    write_sources()
    docs = make_documents()
    write_documents(docs)
    write_vocab(docs)
    print(f"fixtures written to {HERE}")


if __name__ == "__main__":
    main()
