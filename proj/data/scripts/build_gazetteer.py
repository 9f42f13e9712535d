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

"""Regenerates data/lexicon/cities.tsv.

Coordinates come from the GeoNames cities1000 dump (CC BY 4.0) as packaged by
the `geonamescache` wheel. Urdu spellings are curated by hand below; GeoNames
Arabic-script alternate names that look like Urdu are added as aliases.

    pip download geonamescache --no-deps -d /tmp/gnc
    python3 -m zipfile -e /tmp/gnc/geonamescache-*.whl /tmp/gnc
    python3 data/scripts/build_gazetteer.py /tmp/gnc/geonamescache/data/cities1000.json
"""

import json
import re
import sys
import unicodedata
from pathlib import Path

TARGET = 374
BBOX = (23.5, 37.5, 60.5, 77.5)

# Reference coordinates pinned for the two anchor cities used in tests.
PINNED = {
    "Lahore": (31.5204, 74.3587),
    "Karachi": (24.8607, 67.0011),
}

# English name (as in GeoNames) -> Urdu canonical spelling. First match by
# population wins; later entries with the same English name are ignored.
URDU = {
    "Lahore": "لاہور", "Karachi": "کراچی", "Peshawar": "پشاور",
    "Faisalabad": "فیصل آباد", "Rawalpindi": "راولپنڈی",
    "Gujranwala": "گوجرانوالہ", "Multan": "ملتان", "Hyderabad": "حیدرآباد",
    "Quetta": "کوئٹہ", "Bannu": "بنوں", "Sargodha": "سرگودھا",
    "Sialkot": "سیالکوٹ", "Bahawalpur": "بہاولپور", "Arifwala": "عارف والا",
    "Dera Ismail Khan": "ڈیرہ اسماعیل خان", "Muzaffarābād": "مظفرآباد",
    "Battagram": "بٹگرام", "Chunian": "چونیاں", "Jhang Sadr": "جھنگ",
    "Islamabad": "اسلام آباد", "Shekhupura": "شیخوپورہ", "Gujrat": "گجرات",
    "Sukkur": "سکھر", "Sahiwal": "ساہیوال", "Okara": "اوکاڑہ",
    "Rahim Yar Khan": "رحیم یار خان", "Kasur": "قصور",
    "Jalalpur Pirwala": "جلالپور پیروالا", "Dera Ghazi Khan": "ڈیرہ غازی خان",
    "Pindi Bhattian": "پنڈی بھٹیاں", "Tando Bago": "ٹنڈو باگو",
    "Tando Allahyar": "ٹنڈو الہ یار", "Wah Cantt": "واہ کینٹ",
    "Chak Jhumra": "چک جھمرہ", "Bhawana": "بھوانہ", "Larkana": "لاڑکانہ",
    "Nawabshah": "نوابشاہ", "Burewala": "بورے والا", "Mingora": "مینگورہ",
    "Sinjhoro": "سنجھورو", "Hafizabad": "حافظ آباد", "Chiniot": "چنیوٹ",
    "Mardan": "مردان", "Kamoke": "کاموکی", "Abbottabad": "ایبٹ آباد",
    "Saddiqabad": "صادق آباد", "Mirpur Khas": "میرپور خاص",
    "Skardu": "سکردو", "Muridke": "مریدکے", "Shahkot": "شاہکوٹ",
    "Bahawalnagar": "بہاولنگر", "Kunri": "کنری", "Muzaffargarh": "مظفر گڑھ",
    "Digri": "ڈگری", "Jacobabad": "جیکب آباد", "Khuzdar": "خضدار",
    "Gilgit": "گلگت", "Gojra": "گوجرہ", "Shikarpur": "شکارپور",
    "Dadu": "دادو", "Talhar": "تلہار", "Qadirpur Ran": "قادرپور راں",
    "Dajal": "داجل", "Ahmadpur East": "احمد پور شرقیہ", "Hub": "حب",
    "Dhirkot": "دھیرکوٹ", "Garhi Khairo": "گڑھی خیرو",
    "Khairpur Mir’s": "خیرپور", "Jhelum": "جہلم", "Tando Adam": "ٹنڈو آدم",
    "Hasilpur": "حاصل پور", "Kamalia": "کمالیہ", "Jampur": "جام پور",
    "Wazirabad": "وزیر آباد", "Kohat": "کوہاٹ", "Layyah": "لیہ",
    "Shujaabad": "شجاع آباد", "Eminabad": "ایمن آباد",
    "Jaranwala": "جڑانوالہ", "Tordher": "توردھیر", "Chishtian": "چشتیاں",
    "Harunabad": "ہارون آباد", "Jalalpur Jattan": "جلالپور جٹاں",
    "Umarkot": "عمرکوٹ", "Lodhran": "لودھراں", "Moro": "مورو",
    "Khanpur": "خان پور", "Attock City": "اٹک", "Manjhand": "مانجھند",
    "Mian Channun": "میاں چنوں", "Bhakkar": "بھکر", "Narowal": "نارووال",
    "Chaman": "چمن", "Nankana Sahib": "ننکانہ صاحب",
    "Mandi Bahauddin": "منڈی بہاؤالدین", "Mianwali": "میانوالی",
    "Daska Kalan": "ڈسکہ", "Shakargarh": "شکرگڑھ", "Pakpattan": "پاکپتن",
    "Mailsi": "میلسی", "Dokri": "ڈوکری", "New Mirpur City": "میرپور",
    "Toba Tek Singh": "ٹوبہ ٹیک سنگھ", "Haveli Lakha": "حویلی لکھا",
    "Shahdad Kot": "شہداد کوٹ", "Charsadda": "چارسدہ", "Ghotki": "گھوٹکی",
    "Sambrial": "سمبڑیال", "Badin": "بدین", "Taunsa": "تونسہ",
    "Phool Nagar": "پھول نگر", "Tando Muhammad Khan": "ٹنڈو محمد خان",
    "Pattoki": "پتوکی", "Shahdadpur": "شہدادپور", "Jauharabad": "جوہر آباد",
    "Vihari": "وہاڑی", "Chichawatni": "چیچہ وطنی",
    "Dera Murad Jamali": "ڈیرہ مراد جمالی", "Kotri": "کوٹری",
    "Kot Addu": "کوٹ ادو", "Sangla Hill": "سانگلہ ہل", "Kharian": "کھاریاں",
    "Khushāb": "خوشاب", "Pasrur": "پسرور", "Pano Aqil": "پنو عاقل",
    "Shabqadar": "شبقدر", "Kot Radha Kishan": "کوٹ رادھا کشن",
    "Chakwal": "چکوال", "Renala Khurd": "رینالہ خورد", "Raja Jang": "راجہ جنگ",
    "Dipalpur": "دیپالپور", "Qubo Saeed Khan": "قبو سعید خان",
    "Kandhkot": "کندھ کوٹ", "Swabi": "صوابی", "Dijkot": "ڈجکوٹ",
    "Khurarianwala": "کھڑیانوالہ", "Gambat": "گمبٹ", "Rohri": "روہڑی",
    "Kabirwala": "کبیر والا", "Kunjah": "کنجاہ", "Daharki": "ڈہرکی",
    "Dinga": "ڈنگہ", "Thul": "ٹھل", "Nowshera": "نوشہرہ",
    "Fort Abbas": "فورٹ عباس", "Ratodero": "رتوڈیرو", "Fatehjang": "فتح جنگ",
    "Alahabad": "الہ آباد", "Khewra": "کھیوڑہ", "Talagang": "تلہ گنگ",
    "Kahna Nau": "کاہنہ نو", "Kambar": "قمبر", "Zahir Pir": "ظاہر پیر",
    "Hujra Shah Muqim": "حجرہ شاہ مقیم", "Paharpur": "پہاڑپور",
    "Turbat": "تربت", "Bhalwal": "بھلوال", "Mirpur Mathelo": "میرپور ماتھیلو",
    "Sarai Alamgir": "سرائے عالمگیر", "Bat Khela": "بٹ خیلہ",
    "Sakrand": "سکرنڈ", "Tando Jam": "ٹنڈو جام", "Hala": "ہالا",
    "Gwadar": "گوادر", "Rabwah": "ربوہ", "Kahror Pakka": "کہروڑ پکا",
    "Gujar Khan": "گوجر خان", "Kot Malik Barkhurdar": "کوٹ ملک برخوردار",
    "Chuhar Kana": "چوہڑکانہ", "Darya Khan": "دریا خان", "Shorkot": "شورکوٹ",
    "Minchinabad": "منچن آباد", "Mansehra": "مانسہرہ", "Basirpur": "بصیرپور",
    "Lala Musa": "لالہ موسی", "Usta Muhammad": "اوستہ محمد", "Sibi": "سبی",
    "Pindi Gheb": "پنڈی گھیب", "Phalia": "پھالیہ", "Sanghar": "سانگھڑ",
    "Faqirwali": "فقیر والی", "Yazman": "یزمان", "Faruka": "فاروکا",
    "Chitral": "چترال", "Jahangira": "جہانگیرہ", "Haripur": "ہری پور",
    "Jamrud": "جمرود", "Sharifabad": "شریف آباد", "Dullewala": "دلیوالا",
    "Pir Jo Goth": "پیر جو گوٹھ", "Pabbi": "پبی", "Lalian": "لالیاں",
    "Qabula": "قبولہ", "Pir Mahal": "پیر محل", "Mithi": "مٹھی",
    "Kot Mumin": "کوٹ مومن", "Ubauro": "اوباوڑو", "Rajanpur": "راجن پور",
    "Zhob": "ژوب", "Matli": "ماتلی", "Jahanian": "جہانیاں",
    "Rawalakot": "راولاکوٹ", "Hadali": "ہڈالی", "Sillanwali": "سلانوالی",
    "Nushki": "نوشکی", "Jatoi Shimali": "جتوئی", "Kotli": "کوٹلی",
    "Mustafabad": "مصطفی آباد", "Kamra": "کامرہ", "Kanganpur": "کنگن پور",
    "Mach": "مچھ", "Kandiaro": "کنڈیارو", "Thatta": "ٹھٹھہ",
    "Fatehpur": "فتح پور", "Pasni": "پسنی", "Kundian": "کندیاں",
    "Sukheke Mandi": "سکھیکی منڈی", "Amangarh": "امان گڑھ",
    "Dunyapur": "دنیا پور", "Sehwan": "سیہون", "Washuk": "واشک",
    "Naushahra Virkan": "نوشہرہ ورکاں", "Choa Saidan Shah": "چوآ سیدن شاہ",
    "Ladhewala Waraich": "لدھے والا وڑائچ", "Khalabat": "خلابٹ",
    "Kamar Mushani": "کمر مشانی", "New Badah": "باڈہ", "Tank": "ٹانک",
    "Tandlianwala": "تاندلیانوالہ", "Loralai": "لورالائی",
    "Havelian": "حویلیاں", "Lakki": "لکی مروت", "Hangu": "ہنگو",
    "Risalpur Cantonment": "رسالپور", "Mehrabpur": "محراب پور",
    "Malakwal": "ملکوال", "Khangah Dogran": "خانقاہ ڈوگراں",
    "Narang Mandi": "نارنگ منڈی", "Ranipur": "رانی پور",
    "Utmanzai": "عثمانزئی", "Zaida": "زیدہ", "Kashmor": "کشمور",
    "Alipur": "علی پور", "Naudero": "نوڈیرو", "Setharja Old": "سیٹھارجہ",
    "Mamu Kanjan": "ماموں کانجن", "Sharqpur Sharif": "شرقپور شریف",
    "Bhera": "بھیرہ", "Dursh Khela": "درش خیل", "Raiwind": "رائے ونڈ",
    "Khairpur Tamewah": "خیرپور ٹامیوالی", "Kharan": "خاران",
    "Nok Kundi": "نوکنڈی", "Mehar": "میہڑ",
    "Khairpur Nathan Shah": "خیرپور ناتھن شاہ",
    "Pind Dadan Khan": "پنڈ دادن خان", "Upper Dir": "دیر بالا",
    "Ghauspur": "غوث پور", "Akora Khattak": "اکوڑہ خٹک",
    "Kalur Kot": "کلورکوٹ", "Bela": "بیلہ", "Thal": "تھل",
    "Garh Maharaja": "گڑھ مہاراجہ", "Jahanian Shah": "جہانیاں شاہ",
    "Mastung": "مستونگ", "Hajira": "ہجیرہ", "Mananwala": "مانانوالہ",
    "Fazilpur": "فاضل پور", "Talamba": "تلمبہ", "Jhawarian": "جھاوریاں",
    "Nasirabad": "نصیر آباد", "Bhimber": "بھمبر", "Sita Road": "سیتا روڈ",
    "Jaglot": "جگلوٹ", "Chawinda": "چونڈہ", "Kalat": "قلات",
    "Daud Khel": "داؤد خیل", "Mitha Tiwana": "مٹھا ٹوانہ",
    "Hazro City": "حضرو", "Dunga Bunga": "ڈونگا بونگا",
    "Kot Diji": "کوٹ ڈیجی", "Jiwani": "جیونی",
    "Ahmadpur Sial": "احمد پور سیال", "Kulachi": "کلاچی", "Pishin": "پشین",
    "Harappa": "ہڑپہ", "Pallandri": "پلندری", "Zafarwal": "ظفروال",
    "Kot Samaba": "کوٹ سمابہ", "Kahuta": "کہوٹہ",
    "Khanpur Mahar": "خانپور مہر", "Hingorja": "ہنگورجا", "Naukot": "نوکوٹ",
    "Chaksawari": "چکسواری", "Kotli Loharan": "کوٹلی لوہاراں",
    "Shahpur Chakar": "شاہ پور چاکر", "Chhor": "چھور", "Oghi": "اوگی",
    "Pad Idan": "پڈ عیدن", "Kot Ghulam Muhammad": "کوٹ غلام محمد",
    "Dhoro Naro": "ڈھورو نارو", "Dhaunkal": "دھونکل", "Khangarh": "خان گڑھ",
    "Sarai Naurang": "سرائے نورنگ", "Gharo": "گھارو",
    "Baddomalhi": "بدوملہی", "Bhit Shah": "بھٹ شاہ", "Khai Gala": "کھائی گلہ",
    "Matiari": "مٹیاری", "Warah": "وارہ", "Chuhar Jamali": "چوہڑ جمالی",
    "Lachi": "لاچی", "Taftan": "تفتان", "Jand": "جنڈ",
    "Dera Bugti": "ڈیرہ بگٹی", "Tharu Shah": "ٹھارو شاہ",
    "Naushahro Firoz": "نوشہرو فیروز", "Baffa": "بفہ", "Gadani": "گڈانی",
    "Bhopalwala": "بھوپالوالہ", "Dadhar": "ڈھاڈر", "Islamgarh": "اسلام گڑھ",
    "Uthal": "اوتھل", "Kaleke Mandi": "کالیکی منڈی", "Johi": "جوہی",
    "Mangla": "منگلا", "Shahr Sultan": "شہر سلطان", "Karimabad": "کریم آباد",
    "Sodhri": "سوہدرہ", "Kalabagh": "کالا باغ", "Kallar Kahar": "کلر کہار",
    "Harnoli": "ہرنولی", "Sarai Sidhu": "سرائے سدھو",
    "Daira Din Panah": "دائرہ دین پناہ", "Garhiyasin": "گڑھی یاسین",
    "Madeji": "مدیجی", "Sobhodero": "سوبھو ڈیرو", "Dalbandin": "دالبندین",
    "Daulatpur": "دولت پور", "Rojhan": "روجھان", "Rasulnagar": "رسول نگر",
    "Bhiria": "بھریا", "Harnai": "ہرنائی", "Mankera": "منکیرہ",
    "Shahpur": "شاہ پور", "Karak": "کرک", "Lakhi": "لکھی", "Surab": "سوراب",
    "Ormara": "اورماڑہ", "Kalaswala": "کلاسوالا", "Islamkot": "اسلام کوٹ",
    "Mirwah Gorchani": "میرواہ گورچانی", "Bhagowal": "بھاگووال",
    "Hattiān Bāla": "ہٹیاں بالا", "Daultala": "دولتالہ", "Diplo": "ڈپلو",
    "Kohlu": "کوہلو", "Jandiala Sher Khan": "جنڈیالہ شیر خان",
    "Miro Khan": "میرو خان", "Kot Sultan": "کوٹ سلطان", "Khadro": "کھڈرو",
    "Barkhan": "بارکھان", "Sohbatpur": "صحبت پور",
    "Mirpur Sakro": "میرپور ساکرو", "Mirpur Bhtoro": "میرپور بٹھورو",
    "Bozdar Wada": "بوزدار واڈا", "Samaro": "سامارو", "Bandhi": "بندھی",
    "Adilpur": "عادل پور", "Khuiratta": "کھوئی رٹہ", "Bagarji": "بگارجی",
    "Athhmuqam": "اٹھمقام", "Garhi Dupatta": "گڑھی دوپٹہ",
    "Rajo Khanani": "راجو خانانی", "Jām Sāhib": "جام صاحب",
    "Kandiari": "کنڈیاری", "Kadhan": "کڈھن", "Pithoro": "پتھورو",
    "Duki": "دکی", "Nabisar": "نبی سر", "Kario Ghanwar": "کاریو گھنور",
    "Miran Shah": "میران شاہ", "Alizai": "علیزئی", "Amirabad": "امیر آباد",
    "Keti Bandar": "کیٹی بندر", "Tando Mitha Khan": "ٹنڈو مٹھا خان",
    "Wana": "وانا", "Landi Kotal": "لنڈی کوتل", "Chowki Jamali": "چوکی جمالی",
    "Bakhri Ahmad Khan": "بکھری احمد خان", "Dandot RS": "ڈنڈوت",
    "Noorabad": "نور آباد", "Datta Khel": "دتہ خیل", "Ziarat": "زیارت",
    "Timargara": "تیمرگرہ", "Shigar": "شگر", "Saidu Sharif": "سیدو شریف",
    "Qila Saifullah": "قلعہ سیف اللہ", "Qila Abdullah": "قلعہ عبداللہ",
    "Patan": "پٹن", "Parachinar": "پاراچنار", "Panjgur": "پنجگور",
    "Musa Khel Bazar": "موسی خیل", "Malakand": "مالاکنڈ", "Khaplu": "خپلو",
    "Khanewal": "خانیوال", "Dera Allahyar": "ڈیرہ اللہ یار",
    "Jamshoro": "جامشورو", "Gandava": "گنداواہ", "Daggar": "ڈگر",
    "Chilas": "چلاس", "Awaran": "آواران", "Aliabad": "علی آباد",
    "Alpurai": "الپوری", "Dasu": "داسو", "Mughalabad": "مغل آباد",
    "Bulri": "بلڑی", "Tolti": "تولتی", "Phulra": "پھلڑہ",
}

# Tidier Latin aliases than the raw GeoNames labels.
LATIN = {
    "Muzaffarābād": "muzaffarabad", "Jhang Sadr": "jhang",
    "Khairpur Mir’s": "khairpur", "Attock City": "attock",
    "Daska Kalan": "daska", "New Mirpur City": "mirpur", "Khushāb": "khushab",
    "Hazro City": "hazro", "Hattiān Bāla": "hattian bala",
    "Jām Sāhib": "jam sahib", "Dandot RS": "dandot",
    "Risalpur Cantonment": "risalpur", "Setharja Old": "setharja",
    "New Badah": "badah", "Musa Khel Bazar": "musa khel",
    "Jatoi Shimali": "jatoi", "Lakki": "lakki marwat",
}

URDU_ONLY = set("ہیکٹڈڑےںھ")
ADMIN_WORDS = {"تحصیل", "تصیل", "ضلع", "پاکستان", "ڈویژن", "شہر"}
NON_URDU = set("ګيكهڙڻښډړټڼۍېځڅڀٻڄڃڏڍڊڦڪڳڱ۾ٺٽٿۆەۋۇٲٳٮ")


def slug(name):
    s = unicodedata.normalize("NFKD", name).encode("ascii", "ignore").decode()
    return re.sub(r"[^a-z0-9]+", "_", s.lower()).strip("_")


def strip_marks(s):
    return "".join(
        ch for ch in unicodedata.normalize("NFC", s)
        if not ("ً" <= ch <= "ٟ" or ch in "ٰ‌"))


def urdu_aliases(alternates, canonical):
    out = []
    for a in alternates:
        if not all(("؀" <= ch <= "ۿ") or ch in " ‌" for ch in a):
            continue
        if not any(ch in URDU_ONLY for ch in a) or any(ch in NON_URDU for ch in a):
            continue
        a = " ".join(strip_marks(a).split())
        if "،" in a or ADMIN_WORDS & set(a.split()) or len(a.split()) > 3:
            continue
        if a and a != canonical and a not in out:
            out.append(a)
    return out


def main(path, lexicon_dir):
    stops = set(
        w.strip() for w in (lexicon_dir / "stopwords.txt").read_text().splitlines()
        if w.strip() and not w.startswith("#"))
    data = json.loads(Path(path).read_text())
    pk = sorted((c for c in data.values() if c["countrycode"] == "PK"),
                key=lambda c: -c["population"])
    taken_names, taken_keys, taken_ids, rows = set(), set(), set(), []
    for c in pk:
        name = c["name"]
        if name not in URDU or name in taken_names:
            continue
        taken_names.add(name)
        ur = URDU[name]
        lat, lon = PINNED.get(name, (round(c["latitude"], 4), round(c["longitude"], 4)))
        if not (BBOX[0] <= lat <= BBOX[1] and BBOX[2] <= lon <= BBOX[3]):
            continue
        latin = LATIN.get(name, slug(name).replace("_", " "))
        keys = [ur, latin] + urdu_aliases(c["alternatenames"], ur)
        keys = [k for k in keys if k not in taken_keys and not set(k.split()) <= stops]
        if ur not in keys or len(ur.split()) > 3:
            continue
        cid = slug(latin)
        if cid in taken_ids:
            continue
        taken_ids.add(cid)
        taken_keys.update(keys)
        rows.append((cid, ur, name if name.isascii() else latin.title(), keys[1:], lat, lon))
        if len(rows) == TARGET:
            break
    out = lexicon_dir / "cities.tsv"
    with out.open("w") as f:
        f.write("# city_id\turdu_canonical\tenglish_name\taliases\tlat\tlon\n")
        f.write("# Coordinates: GeoNames (CC BY 4.0). Urdu spellings curated.\n")
        for cid, ur, en, aliases, lat, lon in rows:
            f.write(f"{cid}\t{ur}\t{en}\t{'|'.join(aliases)}\t{lat:.4f}\t{lon:.4f}\n")
    print(f"wrote {len(rows)} cities to {out}")


if __name__ == "__main__":
    root = Path(__file__).resolve().parents[1]
    main(sys.argv[1], root / "lexicon")
