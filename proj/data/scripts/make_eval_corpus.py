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
"""Builds the synthetic labelled corpus in data/eval/.

Each headline is assembled from typed segments (ordinary word, stop word,
disease mention, city mention, number, punctuation mark, diacritic), so the
gold labels for all seven stages follow from the construction itself. The
annotator's view is deliberately not identical to the lexicon:

  * a few misspellings of diseases and cities that no lexicon entry covers,
  * quotation marks (U+00AB, U+00BB) counted as punctuation,
  * written-together word pairs the annotator still reads as two tokens,
  * three function words the annotator treats as stop words that the shipped
    list lacks, and one the list has that the annotator keeps,
  * health words in headlines that are not outbreak reports.

Run from the repository root:  python3 data/scripts/make_eval_corpus.py
"""

import random
from pathlib import Path
from xml.sax.saxutils import escape

ROOT = Path(__file__).resolve().parents[2]
LEX = ROOT / "data" / "lexicon"
OUT = ROOT / "data" / "eval"
rng = random.Random(90)


def read_tsv(name):
    rows = []
    for line in (LEX / name).read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#"):
            rows.append(line.split("\t"))
    return rows


STOPS = {w.strip() for w in (LEX / "stopwords.txt").read_text(encoding="utf-8").splitlines()
         if w.strip() and not w.startswith("#")}
CITIES = {r[0]: (r[1], float(r[4]), float(r[5])) for r in read_tsv("cities.tsv")}
DISEASES = {r[0]: r[1] for r in read_tsv("diseases.tsv")}
NAMES = set()
for r in read_tsv("cities.tsv") + read_tsv("diseases.tsv"):
    NAMES.add(r[1])
    NAMES.update(a for a in r[3].split("|") if a)

# Annotator's stop-word view.
EXTRA_STOPS = ["گزشتہ", "روز", "جانب"]
KEPT = "زیادہ"

DISEASE_FORMS = {
    "dengue": ["ڈینگی", "ڈینگی وائرس", "ڈینگو"],
    "cholera": ["ہیضہ", "ہیضے", "کالرا"],
    "measles": ["خسرہ", "خسرے"],
    "polio": ["پولیو", "پولیو وائرس"],
    "malaria": ["ملیریا"],
    "typhoid": ["ٹائیفائیڈ", "ٹائفائیڈ"],
    "covid19": ["کورونا", "کورونا وائرس", "کرونا"],
    "hepatitis_c": ["ہیپاٹائٹس سی"],
    "diarrhoea": ["اسہال", "ڈائریا"],
    "cchf": ["کانگو وائرس"],
    "chikungunya": ["چکن گنیا"],
    "tuberculosis": ["ٹی بی"],
    "naegleria": ["نیگلیریا"],
    "rabies": ["ریبیز"],
}
MISSPELT_DISEASE = {"dengue": "ڈنگی", "cholera": "ہیضا", "typhoid": "ٹائیفیڈ"}

CITY_FORMS = {
    "lahore": ["لاہور", "لاھور"], "karachi": ["کراچی"], "peshawar": ["پشاور"],
    "quetta": ["کوئٹہ"], "multan": ["ملتان"], "faisalabad": ["فیصل آباد"],
    "rawalpindi": ["راولپنڈی"], "islamabad": ["اسلام آباد"], "hyderabad": ["حیدرآباد"],
    "sukkur": ["سکھر"], "larkana": ["لاڑکانہ"], "bahawalpur": ["بہاولپور"],
    "burewala": ["بورے والا", "بوریوالا"], "sialkot": ["سیالکوٹ"], "mardan": ["مردان"],
    "gujranwala": ["گوجرانوالہ"], "abbottabad": ["ایبٹ آباد"], "sahiwal": ["ساہیوال"],
    "mingora": ["مینگورہ"], "gilgit": ["گلگت"], "jhelum": ["جہلم"], "okara": ["اوکاڑہ"],
    "rahim_yar_khan": ["رحیم یار خان"], "dera_ghazi_khan": ["ڈیرہ غازی خان"],
}
MISSPELT_CITY = {"faisalabad": "فیصلاباد", "rawalpindi": "راولپینڈی"}

FILLERS = """
نئے کیس سامنے آ افراد ہلاک متاثر مریض ہسپتال داخل محکمہ صحت مہم شروع ایمرجنسی
نافذ بچوں تصدیق تعداد اضافہ شہریوں احتیاط ہدایت ٹیمیں روانہ سرکاری وارڈ قائم
ڈاکٹروں عملے چھٹیاں منسوخ علاقوں اسپرے پانی نمونے لیبارٹری رپورٹ مثبت ویکسین
انتظامیہ اجلاس طلب صورتحال تشویشناک مشتبہ علامات شکایت فوری اقدامات
""".split()
IRRELEVANT = [
    ["بارش", "نظام", "زندگی", "مفلوج"],
    ["وزیراعلی", "دورہ", "ترقیاتی", "منصوبوں", "افتتاح"],
    ["قومی", "ٹیم", "شاندار", "فتح"],
    ["بجلی", "بریک", "ڈاؤن", "شہری", "پریشان"],
    ["میٹرک", "نتائج", "اعلان"],
    ["سونے", "قیمت", "ریکارڈ", "سطح"],
    ["ٹریفک", "حادثہ", "مسافر", "زخمی"],
]
NOT_OUTBREAK = [  # health words, no outbreak: the annotator marks the disease negative
    ("covid19", ["کورونا", "بعد", "معیشت", "بحالی", "جانب", "گامزن"]),
    ("tuberculosis", ["ٹی بی", "عالمی", "دن", "تقریب"]),
]
P_MARKS = ["،", "۔", "؟", ":", "!"]
QUOTES = ("«", "»")
DIACRITICS = ["َ", "ِ", "ُ", "ّ", "ْ"]

for w in FILLERS + [w for ws in IRRELEVANT for w in ws]:
    assert w not in NAMES and w not in STOPS, w


class Headline:
    def __init__(self, aid):
        self.aid = aid
        self.segs = []       # (text, kind); kind in word/stop/p/open
        self.fused = set()   # index i: segment i joins i+1 without a space
        self.diseases, self.cities, self.neg_d, self.neg_c = [], [], [], []
        self.description = ""
        self.desc_city = None
        self.marks = []

    def word(self, w, kind="word"):
        for part in w.split(" "):
            self.segs.append((part, kind))

    def punct(self, p):
        self.segs.append((p, "p"))

    def text(self):
        out = ""
        for i, (t, kind) in enumerate(self.segs):
            if i == 0 or kind == "p" or self.segs[i - 1][1] == "open" or (i - 1) in self.fused:
                out += t
            else:
                out += " " + t
        return out

    def add_diacritics(self, n):
        words = [i for i, (t, k) in enumerate(self.segs) if k in ("word", "stop") and len(t) > 1]
        for i in rng.sample(words, min(n, len(words))):
            t, k = self.segs[i]
            m = rng.choice(DIACRITICS)
            pos = rng.randrange(len(t))
            self.segs[i] = (t[:pos + 1] + m + t[pos + 1:], k)
            self.marks.append(m)

    @staticmethod
    def plain(t):
        return "".join(ch for ch in t if ch not in DIACRITICS)

    def gold(self):
        g = {}
        g["DIACRITICS"] = [f"U+{ord(m):04X}" for m in self.marks]
        g["PUNCT"] = [f"U+{ord(t):04X}" for t, k in self.segs if k in ("p", "open")]
        toks = [self.plain(t) for t, k in self.segs if k in ("word", "stop")]
        g["TOKENIZE"] = toks
        expert_stop = (STOPS | set(EXTRA_STOPS)) - {KEPT}
        stops = [t for t in toks if t in expert_stop]
        kept = sorted({t for t in toks if t not in expert_stop})[:3]
        g["STOPWORDS"] = stops + ["!" + t for t in kept]
        g["DISEASE"] = self.diseases + ["!" + d for d in self.neg_d]
        g["CITY"] = self.cities + ["!" + c for c in self.neg_c]
        geo = lambda c: f"{CITIES[c][1]:.4f},{CITIES[c][2]:.4f}"
        g["GEO"] = [geo(c) for c in self.cities] + ["!" + geo(c) for c in self.neg_c]
        return g


def disease_form(did, misspell=False):
    if misspell:
        return MISSPELT_DISEASE[did]
    return rng.choice(DISEASE_FORMS[did])


def city_form(cid, misspell=False):
    if misspell:
        return MISSPELT_CITY[cid]
    return rng.choice(CITY_FORMS[cid])


def fillers(k):
    return rng.sample(FILLERS, k)


heads = []
n = 0


def new():
    global n
    n += 1
    h = Headline(f"ev-{n:03d}")
    heads.append(h)
    return h


disease_ids = list(DISEASE_FORMS)
city_ids = list(CITY_FORMS)

# 40 headlines with disease and city in the title.
for i in range(40):
    h = new()
    did, cid = rng.choice(disease_ids), rng.choice(city_ids)
    miss_d = i in (7, 23) and did in MISSPELT_DISEASE
    miss_c = i in (11, 29) and cid in MISSPELT_CITY
    shape = i % 4
    if shape == 0:
        h.word(city_form(cid, miss_c)); h.word("میں", "stop"); h.word(disease_form(did, miss_d))
        h.word("کے", "stop"); h.word(str(rng.randint(2, 60))); h.word("نئے"); h.word("کیس")
        h.word("سامنے"); h.word("آ"); h.word("گئے", "stop")
    elif shape == 1:
        h.word(city_form(cid, miss_c)); h.punct(":"); h.word(disease_form(did, miss_d))
        h.word("سے", "stop"); h.word(str(rng.randint(2, 9))); h.word("افراد"); h.word("ہلاک")
    elif shape == 2:
        h.word(disease_form(did, miss_d)); h.word("کی", "stop"); h.word("وبا"); h.punct("،")
        h.word(city_form(cid, miss_c)); h.word("کے", "stop"); h.word("ہسپتالوں"); h.word("میں", "stop")
        h.word("ایمرجنسی"); h.word("نافذ")
    else:
        h.word("گزشتہ", "stop"); h.word("روز", "stop"); h.word(city_form(cid, miss_c))
        h.word("میں", "stop"); h.word(disease_form(did, miss_d)); h.word("کے", "stop")
        h.word(KEPT); h.word("مریض"); h.word("رپورٹ")
    if i % 5 == 2:
        h.segs.insert(0, ("«", "open"))
        h.punct("»")
    if i % 3 == 0:
        h.punct(rng.choice(["۔", "!", "؟"]))
    if i in (4, 19, 32):
        # City followed by its postposition written without a space.
        idx = next(j for j, (t, k) in enumerate(h.segs) if t == "میں")
        h.fused.add(idx - 1)
    h.diseases.append(did)
    h.cities.append(cid)
    if i % 3 == 1:
        h.add_diacritics(rng.randint(1, 3))
    h.description = " ".join(fillers(6))

# 10 headlines whose city is only in the description.
for i in range(10):
    h = new()
    did, cid = rng.choice(disease_ids), rng.choice(city_ids)
    h.word(disease_form(did)); h.word("سے", "stop"); h.word("متاثرہ"); h.word("مریضوں")
    h.word("کی", "stop"); h.word("تعداد"); h.word("بڑھ"); h.word("گئی", "stop")
    if i % 2:
        h.punct("۔")
    if i % 4 == 0:
        h.add_diacritics(2)
    h.diseases.append(did)
    h.cities.append(cid)
    h.description = f"{CITIES[cid][0]} کے سرکاری ہسپتال میں {' '.join(fillers(4))}"

# 8 headlines with a disease and no place anywhere.
for i in range(8):
    h = new()
    did = rng.choice(disease_ids)
    h.word(disease_form(did)); h.word("سے", "stop"); h.word("بچاؤ"); h.word("کے", "stop")
    h.word("لیے", "stop"); h.word("آگاہی"); h.word("مہم"); h.word("شروع")
    if i % 2 == 0:
        h.punct("!")
    h.diseases.append(did)
    h.neg_c.append(rng.choice(city_ids))
    h.description = " ".join(fillers(5))

# 14 irrelevant headlines, some naming a city; two mention a disease without an outbreak.
for i in range(14):
    h = new()
    if i < len(NOT_OUTBREAK):
        did, words = NOT_OUTBREAK[i]
        for w in words:
            h.word(w, "stop" if w in EXTRA_STOPS or w in STOPS else "word")
        h.neg_d.append(did)
        h.neg_c.append(rng.choice(city_ids))
    else:
        words = IRRELEVANT[i % len(IRRELEVANT)]
        if i % 2:
            cid = rng.choice(city_ids)
            h.word(city_form(cid)); h.word("میں", "stop")
            h.cities.append(cid)
        else:
            h.neg_c.append(rng.choice(city_ids))
        for w in words:
            h.word(w)
        h.neg_d.append(rng.choice(disease_ids))
        if i % 3 == 0:
            h.punct("۔")
        if i % 4 == 1:
            h.add_diacritics(1)
    h.description = " ".join(fillers(5))

OUT.mkdir(parents=True, exist_ok=True)
with open(OUT / "items.xml", "w", encoding="utf-8") as f:
    f.write('<?xml version="1.0" encoding="UTF-8"?>\n<rss version="2.0">\n<channel>\n')
    f.write("  <title>Synthetic labelled headlines</title>\n")
    for k, h in enumerate(heads):
        day = 1 + k % 28
        f.write(f"  <item>\n    <guid>{h.aid}</guid>\n    <title>{escape(h.text())}</title>\n"
                f"    <link>https://eval.example.pk/{h.aid}</link>\n"
                f"    <pubDate>{['Thu','Fri','Sat','Sun','Mon','Tue','Wed'][(day - 1) % 7]}, "
                f"{day:02d} Oct 2026 08:00:00 +0500</pubDate>\n"
                f"    <description>{escape(h.description)}</description>\n  </item>\n")
    f.write("</channel>\n</rss>\n")

STAGES = ["DIACRITICS", "PUNCT", "TOKENIZE", "STOPWORDS", "DISEASE", "CITY", "GEO"]
with open(OUT / "gold.tsv", "w", encoding="utf-8") as f:
    f.write("# access_no\tstage\tunits ('|' separated, '!' marks an explicit negative)\n")
    for h in heads:
        g = h.gold()
        for st in STAGES:
            if g[st]:
                f.write(f"{h.aid}\t{st}\t{'|'.join(g[st])}\n")

print(f"{len(heads)} headlines written to {OUT}")
