#!/usr/bin/env python3
"""Regenerate the bundled lexicon and gazetteer files.

Sources (all permissively licensed, see crates/core/data/SOURCES.md):
  --brill    en-lexicon.txt from the TextBlob distribution (Brill tagger lexicon)
  --lemmas   lemma_lu.csv.gz from the lemminflect distribution
  --names    directory holding dist.male.first / dist.female.first (US census)
  --geo      geonamescache data directory (countries.json, us_states.json, ...)
  --orgs     tools/organizations.txt

Usage:
  python3 tools/gen_lexicon.py --brill ... --lemmas ... --names ... --geo ... \
      --orgs tools/organizations.txt --out crates/core/data
"""
import argparse
import gzip
import json
import os
import re

WORD = re.compile(r"^[a-z][a-z'-]*$")

PENN = {
    "NN": "Noun", "NNS": "Noun",
    "VB": "Verb", "VBP": "Verb", "VBZ": "Verb", "VBD": "Verb", "VBN": "Verb", "VBG": "Verb", "MD": "Verb",
    "JJ": "Adjective", "JJR": "Adjective", "JJS": "Adjective",
    "RB": "Adverb", "RBR": "Adverb", "RBS": "Adverb", "WRB": "Adverb",
    "DT": "Determiner", "PDT": "Determiner", "WDT": "Determiner",
    "CC": "Conjunction",
    "IN": "Preposition", "TO": "Preposition",
    "PRP": "Pronoun", "PRP$": "Pronoun", "WP": "Pronoun", "WP$": "Pronoun", "EX": "Pronoun",
    "CD": "Number",
}

# Closed-class words override whatever the source lexicon says.
CLOSED = {
    "Determiner": "a an the this that these those each every either neither some any no all both "
                  "another such what which whatever whichever",
    "Conjunction": "and or but nor yet so because although though while whereas unless whether "
                   "if since than",
    "Preposition": "about above across after against along amid among around as at before behind "
                   "below beneath beside besides between beyond by despite down during except for "
                   "from in inside into like near of off on onto out outside over past per "
                   "through throughout till to toward towards under underneath until unto up upon "
                   "via with within without",
    "Pronoun": "i me my mine myself you your yours yourself yourselves he him his himself she her "
               "hers herself it its itself we us our ours ourselves they them their theirs "
               "themselves who whom whose someone somebody something anyone anybody anything "
               "everyone everybody everything nobody nothing one oneself there "
               "i'm i've i'd i'll you're you've you'd you'll he's she's it's we're we've we'd "
               "we'll they're they've they'd they'll that's there's what's who's let's",
}

AUX = ("be am is are was were been being have has had having do does did doing done "
       "will would shall should can could may might must ought "
       "isn't aren't wasn't weren't hasn't haven't hadn't don't doesn't didn't won't wouldn't "
       "shan't shouldn't can't cannot couldn't mayn't mightn't mustn't 's 're 've 'd 'll 'm")

# Closed-class and auxiliary words in the stop-list; never counted as content terms.
EXTRA_STOP = "also just very really too quite rather not n't etc"


def load_brill(path):
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(";;;"):
                continue
            parts = line.split()
            if len(parts) != 2:
                continue
            word, tag = parts
            if not WORD.match(word):
                continue
            tag = tag.split("|")[0]
            if tag in PENN:
                out[word] = (PENN[tag], tag)
    return out


def load_lemmas(path):
    forms = {}
    bases = {}
    with gzip.open(path, "rt", encoding="utf-8") as fh:
        for line in fh:
            form, upos, lemmas = line.rstrip("\n").split(",", 2)
            if not WORD.match(form):
                continue
            lemma = lemmas.split("/")[0]
            if not WORD.match(lemma):
                continue
            cat = {"noun": "Noun", "verb": "Verb", "aux": "Verb", "adj": "Adjective", "adv": "Adverb"}[upos]
            if form == lemma:
                bases.setdefault(form, cat)
            else:
                forms.setdefault(form, {})[cat] = lemma
    return forms, bases


def read_list(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                out.append(line.lower())
    return out


def census_names(path, limit):
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            out.append(line.split()[0].lower())
            if len(out) >= limit:
                break
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--brill", required=True)
    ap.add_argument("--lemmas", required=True)
    ap.add_argument("--names", required=True)
    ap.add_argument("--geo", required=True)
    ap.add_argument("--orgs", required=True)
    ap.add_argument("--out", required=True)
    args = ap.parse_args()

    brill = load_brill(args.brill)
    forms, bases = load_lemmas(args.lemmas)

    lexicon = {}
    for word, (cat, tag) in brill.items():
        # Regular -ing/-ed verb forms are left to the suffix rules so the
        # determiner context rule can see them as unknown.
        if tag in ("VBG", "VBD", "VBN") and (word.endswith("ing") or word.endswith("ed")):
            continue
        lexicon[word] = cat
    closed = {}
    for cat, words in CLOSED.items():
        for w in words.split():
            closed[w] = cat
    for w in AUX.split():
        closed.setdefault(w, "Verb")
    lexicon.update(closed)

    # Irregular and inflected forms whose lemma is a lexicon base form.
    exceptions = {}
    for form, by_cat in forms.items():
        if form in closed:
            continue
        cat = lexicon.get(form)
        if form in bases:
            # A base word that is also an inflected verb (felt, saw, used)
            # maps to the verb lemma only when it is tagged as a verb.
            if "Verb" not in by_cat or cat not in (None, "Verb"):
                continue
            by_cat = {"Verb": by_cat["Verb"]}
        lemma = by_cat.get(cat) or by_cat.get("Verb") or by_cat.get("Noun") or next(iter(by_cat.values()))
        if lemma == form:
            continue
        if lemma not in lexicon:
            lexicon[lemma] = bases.get(lemma, "Noun")
        exceptions[form] = lemma
    # Organizations: drop entries the tagger lexicon knows as ordinary
    # non-noun vocabulary.
    orgs = []
    for o in read_list(args.orgs):
        if " " not in o and (o in closed or (o in brill and lexicon.get(o) != "Noun")):
            continue
        orgs.append(o)

    geo = args.geo
    places = set()
    with open(os.path.join(geo, "countries.json"), encoding="utf-8") as fh:
        for c in json.load(fh).values():
            places.add(c["name"].lower())
    with open(os.path.join(geo, "us_states.json"), encoding="utf-8") as fh:
        for s in json.load(fh).values():
            places.add(s["name"].lower())
    with open(os.path.join(geo, "continents.json"), encoding="utf-8") as fh:
        for c in json.load(fh).values():
            places.add(c["name"].lower())
    places.update(["america", "europe", "asia", "africa", "antarctica", "oceania", "usa", "us",
                   "uk", "england", "scotland", "wales", "britain", "new england", "silicon valley",
                   "middle east", "latin america", "caribbean", "mediterranean", "arctic",
                   "pacific", "atlantic", "himalayas", "alps", "sahara", "amazon river"])
    places.discard("us")
    with open(os.path.join(geo, "cities15000.json"), encoding="utf-8") as fh:
        cities = sorted(json.load(fh).values(), key=lambda c: -c["population"])
    for c in cities:
        name = c["name"].lower()
        if c["population"] < 400000:
            break
        if not re.match(r"^[a-z][a-z .'-]*$", name):
            continue
        if " " not in name and name in lexicon:
            continue
        places.add(name)
    places = {p for p in places if p not in closed and re.match(r"^[a-z][a-z .&'-]*$", p)}
    places -= set(orgs)

    persons = []
    seen = set()
    for fname in ("dist.female.first", "dist.male.first"):
        for n in census_names(os.path.join(args.names, fname), 700):
            if n in lexicon or n in seen or n in places or n in orgs:
                continue
            seen.add(n)
            persons.append(n)
    persons.sort()

    # Proper names fall back to the default Noun tag rather than a lexicon entry.
    for name in list(orgs) + list(places) + persons:
        if " " not in name and name in lexicon and lexicon[name] != "Noun":
            del lexicon[name]

    # be/have/do forms map to their base.
    for f, l in [("am", "be"), ("is", "be"), ("are", "be"), ("was", "be"), ("were", "be"),
                 ("been", "be"), ("being", "be"), ("has", "have"), ("had", "have"),
                 ("having", "have"), ("does", "do"), ("did", "do"), ("doing", "do"), ("done", "do")]:
        exceptions[f] = l
    # A lemma must not itself be rewritten again.
    for k in list(exceptions):
        if exceptions[k] in exceptions:
            del exceptions[k]

    stop = sorted(set(AUX.split()) | set(EXTRA_STOP.split()))
    for w in stop:
        lexicon.setdefault(w, "Adverb")

    os.makedirs(args.out, exist_ok=True)

    def write(name, header, lines):
        with open(os.path.join(args.out, name), "w", encoding="utf-8") as fh:
            fh.write(header)
            for line in lines:
                fh.write(line + "\n")

    write("lexicon.tsv", "# surface<TAB>tag, lowercase. Generated by tools/gen_lexicon.py.\n",
          (f"{w}\t{lexicon[w]}" for w in sorted(lexicon)))
    write("lemma_exceptions.tsv", "# surface<TAB>lemma. Generated by tools/gen_lexicon.py.\n",
          (f"{w}\t{exceptions[w]}" for w in sorted(exceptions)))
    write("stopwords.txt", "# Explicit stop-list (auxiliaries and fillers).\n", stop)
    write("organization.txt", "# Organization gazetteer, lowercase.\n", sorted(set(orgs)))
    write("place.txt", "# Place gazetteer, lowercase.\n", sorted(places))
    write("person.txt", "# Person given-name gazetteer, lowercase.\n", persons)
    print("lexicon", len(lexicon), "exceptions", len(exceptions), "orgs", len(set(orgs)),
          "places", len(places), "persons", len(persons))


if __name__ == "__main__":
    main()
