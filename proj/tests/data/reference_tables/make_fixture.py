#!/usr/bin/env python3
# Copyright 2026 The epi-flasher Authors.
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
"""Writes items.xml and gold.tsv whose labels reproduce three known matrices.

Labels are fixed while the headlines are built, never by running the
pipeline:
  DIACRITICS  55 marks placed on letters, all in the removal set.
  PUNCT       88 marks from the removal set plus two the set lacks
              (U+066D and U+00AB), which the pipeline must miss.
  TOKENIZE    273 ordinary words, 7 pairs written without a space, and
              2 names the annotator treats as a single token; one ZWNJ
              compound whose first half is an explicit negative.

Run from this directory:  python3 make_fixture.py
"""

import random
from pathlib import Path
from xml.sax.saxutils import escape

HERE = Path(__file__).resolve().parent
rng = random.Random(20201)

WORDS = """
شہر ضلع ہسپتال مریض علاج ڈاکٹر حکومت عوام پانی صفائی مہم بچے خواتین شہری
ادارہ ٹیم رپورٹ اجلاس وزیر صوبہ محکمہ نمونے تحقیق ویکسین دوا سرکاری نجی
عملہ مرکز نظام فیصلہ سروے اسکول بازار سڑک گاؤں علاقہ موسم گرمی سردی بارش
سیلاب خوراک بجلی گیس ملازمین انتظامیہ اقدامات ہدایت احتیاط آگاہی تربیت
معائنہ نگرانی اعداد شمار اضافہ کمی خطرہ بحران امداد فنڈ منصوبہ
""".split()

DIACRITICS = [0x064E, 0x0650, 0x064F, 0x0651, 0x0652, 0x064B, 0x064D, 0x0670]

P_MARKS = [0x060C, 0x06D4, 0x061F, 0x061B, 0x003A, 0x0028, 0x0029, 0x0021,
           0x0022, 0x002C, 0x002E, 0x2013, 0x2014, 0x201C, 0x201D, 0x2018,
           0x2019, 0x005B, 0x005D, 0x003B]
OUTSIDE_P = [0x066D, 0x00AB]

items = []   # (access_no, title)
gold = []    # (access_no, stage, units)


def label(cp):
    return f"U+{cp:04X}"


# Diacritics: 11 headlines, five marks each, every mark on its own letter.
for i in range(11):
    words = rng.sample(WORDS, 6)
    marks = [rng.choice(DIACRITICS) for _ in range(5)]
    targets = rng.sample(range(6), 5)
    for w, m in zip(targets, marks):
        word = words[w]
        pos = rng.randrange(len(word))
        words[w] = word[:pos + 1] + chr(m) + word[pos + 1:]
    aid = f"d-{i + 1:02d}"
    items.append((aid, " ".join(words)))
    gold.append((aid, "DIACRITICS", [label(m) for m in marks]))

# Punctuation: 10 headlines, nine marks each; two headlines carry a mark the
# removal set does not contain.
for i in range(10):
    marks = [rng.choice(P_MARKS) for _ in range(9)]
    if i < len(OUTSIDE_P):
        marks[4] = OUTSIDE_P[i]
    words = rng.sample(WORDS, 9)
    title = " ".join(w + chr(m) for w, m in zip(words, marks))
    aid = f"p-{i + 1:02d}"
    items.append((aid, title))
    gold.append((aid, "PUNCT", [label(m) for m in marks]))

# Tokenization: 30 headlines holding 273 ordinary tokens in total.
FUSED = 7
COMPOUNDS = ["بورے والا", "ٹوبہ ٹیک"]
ZWNJ_WORD = "خوش‌حال"
lengths = [9] * 27 + [10] * 3
assert sum(lengths) == 273
ordinary = 0
for i, n in enumerate(lengths):
    aid = f"t-{i + 1:02d}"
    pool = [w for w in WORDS if w not in ("خوش",)]
    words = rng.sample(pool, n + 2)
    expert = list(words[:n])
    text = list(expert)
    negatives = []
    if i == 0:
        # The ZWNJ compound replaces one ordinary word and still counts as one.
        expert[3] = text[3] = ZWNJ_WORD
        negatives.append("!خوش")
    ordinary += n
    if i < FUSED:
        a, b = words[n], words[n + 1]
        expert += [a, b]
        text.append(a + b)
    elif i < FUSED + len(COMPOUNDS):
        unit = COMPOUNDS[i - FUSED]
        expert.append(unit)
        text.append(unit)
    items.append((aid, " ".join(text)))
    gold.append((aid, "TOKENIZE", expert + negatives))
assert ordinary == 273

with open(HERE / "items.xml", "w", encoding="utf-8") as f:
    f.write('<?xml version="1.0" encoding="UTF-8"?>\n<rss version="2.0">\n<channel>\n')
    f.write("  <title>Stage evaluation fixture</title>\n")
    for aid, title in items:
        f.write(f"  <item><guid>{aid}</guid><title>{escape(title)}</title>"
                f"<pubDate>Mon, 05 Oct 2026 08:00:00 GMT</pubDate></item>\n")
    f.write("</channel>\n</rss>\n")

with open(HERE / "gold.tsv", "w", encoding="utf-8") as f:
    f.write("# access_no\tstage\tunits\n")
    for aid, stage, units in gold:
        f.write(f"{aid}\t{stage}\t{'|'.join(units)}\n")

print(f"{len(items)} items, {len(gold)} gold records")
