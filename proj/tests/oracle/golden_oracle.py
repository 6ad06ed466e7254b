#!/usr/bin/env python3
"""Straight-line reference implementation used to produce the golden files.

Written independently of the C++ sources: every rule is re-derived from the
documented behaviour (sentence splitting, tokenization, lemma rules, lexicon
lookup, negation window, emotion density, negative-sentence test, concern
rule, yearly aggregation, word counts). Regression uses numpy's least-squares
solver on the design matrix instead of centered sums.

Usage: golden_oracle.py <corpus.csv> <polarity.csv> <emotion.tsv> <out_dir>
"""
import csv
import io
import json
import re
import sys
from collections import Counter, defaultdict

import numpy as np

STOPWORDS = set("""i me my myself we our ours ourselves you your yours yourself yourselves he him
his himself she her hers herself it its itself they them their theirs themselves what which who
whom this that these those am is are was were be been being have has had having do does did doing
a an the and but if or because as until while of at by for with about against between into through
during before after above below to from up down in out on off over under again further then once
here there when where why how all any both each few more most other some such no nor not only own
same so than too very s t can will just don should now""".split())
NEGATORS = {"no", "not", "never", "none", "cannot", "n't", "without"}
ABBREVIATIONS = {"dr", "mr", "mrs", "ms", "prof", "vs", "e.g", "i.e", "approx", "jr", "sr", "st", "inc", "fig"}
EMOTIONS = ["anger", "fear", "anticipation", "trust", "surprise", "sadness", "joy", "disgust"]
NEGATIVE_EMOTIONS = ["fear", "anger", "sadness", "disgust"]
assert len(STOPWORDS) == 127

IRREGULAR = {
    "worse": "bad", "worst": "bad", "better": "good", "best": "good", "felt": "feel", "feet": "foot",
    "teeth": "tooth", "children": "child", "men": "man", "women": "woman", "was": "be", "were": "be",
    "is": "be", "are": "be", "been": "be", "am": "be", "went": "go", "gone": "go", "had": "have",
    "has": "have", "did": "do", "does": "do", "done": "do", "made": "make", "said": "say",
    "took": "take", "taken": "take", "got": "get", "gave": "give", "given": "give", "began": "begin",
    "begun": "begin", "bled": "bleed", "lost": "lose", "left": "leave", "thought": "think",
    "told": "tell", "came": "come", "knew": "know", "known": "know", "ran": "run", "saw": "see",
    "seen": "see", "ate": "eat", "slept": "sleep", "kept": "keep", "woke": "wake", "brought": "bring",
    "bought": "buy", "caught": "catch", "fell": "fall", "fallen": "fall", "became": "become",
    "wore": "wear", "worn": "wear", "tore": "tear", "torn": "tear", "sat": "sit", "stood": "stand",
    "spent": "spend", "used": "use", "died": "die", "lied": "lie", "tied": "tie", "dying": "die",
    "lying": "lie",
}
for w in ("always news series species during nothing something anything everything morning evening "
          "ceiling string spring sibling hundred sacred naked wicked").split():
    IRREGULAR[w] = w


def cons(w, i):
    if w[i] in "aeiou":
        return False
    if w[i] == "y":
        return i == 0 or not cons(w, i - 1)
    return True


def m(w):
    seq = "".join("c" if cons(w, i) else "v" for i in range(len(w)))
    return len(re.findall(r"v+c+", seq))


def cvc(w):
    return (len(w) >= 3 and cons(w, len(w) - 3) and not cons(w, len(w) - 2) and cons(w, len(w) - 1)
            and w[-1] not in "wxy")


def wants_e(s):
    if s.endswith(("v", "iz", "c", "u")):
        return True
    if len(s) >= 3 and s.endswith("us") and not cons(s, len(s) - 3):
        return True
    if len(s) >= 2 and s[-1] == "l" and s[-2] in "bpdtgkz":
        return True
    if len(s) >= 3 and s.endswith("at") and cons(s, len(s) - 3) and m(s) >= 2:
        return True
    return m(s) == 1 and cvc(s)


def step(w):
    if w in IRREGULAR:
        return IRREGULAR[w]
    if "'" in w:
        return w[:-2] if len(w) > 2 and w.endswith("'s") else w
    n = len(w)
    if n > 4 and w.endswith("ies"):
        return w[:-3] + "y"
    if w.endswith("sses"):
        return w[:-2]
    if w.endswith("aches"):
        return w[:-1]
    if n > 4 and w.endswith(("ches", "shes", "xes", "zzes")):
        return w[:-2]
    if n > 3 and w.endswith("s") and not w.endswith(("ss", "us", "is")):
        return w[:-1]
    if n > 4 and w.endswith("ied"):
        return w[:-3] + "y"
    if w.endswith("ing"):
        s = w[:-3]
    elif w.endswith("ed") and not w.endswith("eed"):
        s = w[:-2]
    else:
        return w
    if len(s) < 3 or all(cons(s, i) for i in range(len(s))):
        return w
    if s[-1] == s[-2] and cons(s, len(s) - 1) and s[-1] not in "lsz":
        return s[:-1]
    return s + "e" if wants_e(s) else s


def lemma(w):
    for _ in range(8):
        nxt = step(w)
        if nxt == w:
            break
        w = nxt
    return w


def split_sentences(text):
    out, start, i = [], 0, 0
    while i < len(text):
        if text[i] in ".!?":
            j = i
            while j + 1 < len(text) and text[j + 1] in ".!?":
                j += 1
            while j + 1 < len(text) and text[j + 1] in "\"')]":
                j += 1
            boundary = j + 1 == len(text) or text[j + 1].isspace()
            if boundary and text[i] == ".":
                k = i
                while k > 0 and not text[k - 1].isspace():
                    k -= 1
                word = re.sub(r"^[^A-Za-z0-9]+", "", text[k:i]).lower()
                if word in ABBREVIATIONS:
                    boundary = False
            if boundary:
                s = text[start:j + 1].strip()
                if s:
                    out.append(s)
                start = j + 1
            i = j
        i += 1
    s = text[start:].strip()
    if s:
        out.append(s)
    return out


def tokenize(sentence):
    sentence = sentence.replace("’", "'").replace("‘", "'")
    toks = []
    for chunk in re.findall(r"[A-Za-z0-9']+", sentence):
        if re.search(r"[0-9]", chunk):
            continue
        w = chunk.lower().strip("'")
        if not w:
            continue
        neg = w in NEGATORS or w.endswith("n't")
        toks.append({"surface": w, "lemma": lemma(w), "neg": neg, "stop": (not neg) and w in STOPWORDS})
    return toks


def load_polarity(path):
    lex = {}
    for line in open(path, encoding="utf-8"):
        line = line.split("#")[0].strip()
        if line:
            w, p, s = [x.strip() for x in line.split(",")]
            lex[w.lower()] = (float(p), float(s))
    return lex


def load_emotions(path):
    lex = defaultdict(lambda: [0.0] * 8)
    for line in open(path, encoding="utf-8"):
        line = line.split("#")[0].strip()
        if not line:
            continue
        w, e, v = [x.strip() for x in line.split("\t")]
        if e in ("positive", "negative") or float(v) == 0.0:
            continue
        lex[w.lower()][EMOTIONS.index(e)] = float(v)
    return dict(lex)


def find(lex, tok):
    if tok["surface"] in lex:
        return lex[tok["surface"]]
    return lex.get(tok["lemma"])


def score(toks, pol):
    contributions, subj = [], []
    for i, t in enumerate(toks):
        if t["stop"] or t["neg"]:
            continue
        hit = find(pol, t)
        if hit is None:
            continue
        negated = any(x["neg"] for x in toks[max(0, i - 3):i])
        contributions.append(hit[0] * -0.5 if negated else hit[0])
        subj.append(hit[1])
    if not contributions:
        return 0.0, 0.0
    p = 0.0
    for c in contributions:
        p += c
    return p / len(contributions), sum(subj) / len(subj)


def emotions(toks, emo):
    content = [t for t in toks if not t["stop"]]
    vec = [0.0] * 8
    for t in content:
        hit = find(emo, t)
        if hit:
            for k in range(8):
                vec[k] += hit[k]
    if content:
        vec = [v / len(content) for v in vec]
    return vec


def fmt(x):
    x = float(x)
    if x == 0.0:
        return "0"
    return np.format_float_positional(x, unique=True, trim="-")


def main():
    corpus, pol_path, emo_path, out = sys.argv[1:5]
    pol, emo = load_polarity(pol_path), load_emotions(emo_path)
    rows = list(csv.DictReader(open(corpus, encoding="utf-8", newline="")))
    seen, reports = set(), []
    for r in rows:
        key = (r["text"], r["id"], r["date"], r["year"])
        if key in seen:
            continue
        seen.add(key)
        year = int(r["year"]) if r["year"].strip() else int(r["date"][:4])
        reports.append({"id": r["id"], "year": year, "text": r["text"]})
    print(f"rows={len(rows)} unique={len(reports)}", file=sys.stderr)

    results = []
    for rep in reports:
        sents = [tokenize(s) for s in split_sentences(rep["text"])]
        sents = [s for s in sents if s]
        hits = [0] * 8
        res = {"id": rep["id"], "year": rep["year"], "sents": sents}
        if not sents:
            res.update(s_total=0, r_neg=0.0, a_neg=0.0, a_pol=0.0, cls="neutral", concern=False, hits=hits)
            results.append(res)
            continue
        pols, neg_scores = [], []
        for toks in sents:
            p, _ = score(toks, pol)
            vec = emotions(toks, emo)
            for k in range(8):
                hits[k] += 1 if vec[k] > 0 else 0
            e_max = max(vec[EMOTIONS.index(e)] for e in NEGATIVE_EMOTIONS)
            if e_max >= 0.05 or p <= -0.05:
                neg_scores.append(max(e_max, max(0.0, -p)))
            pols.append(p)
        total = len(sents)
        r_neg = len(neg_scores) / total
        a_neg = 0.0
        if neg_scores:
            acc = 0.0
            for v in neg_scores:
                acc += v
            a_neg = acc / len(neg_scores)
        acc = 0.0
        for v in pols:
            acc += v
        a_pol = acc / total
        cls = "positive" if a_pol >= 0.05 else ("negative" if a_pol <= -0.05 else "neutral")
        concern = r_neg > 0.35 and (a_neg > 0.4 or -a_pol > 0.4)
        res.update(s_total=total, r_neg=r_neg, a_neg=a_neg, a_pol=a_pol, cls=cls, concern=concern, hits=hits)
        results.append(res)
    results.sort(key=lambda r: r["id"])

    def write(name, header, body):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)
        open(f"{out}/{name}", "w", encoding="utf-8", newline="").write(buf.getvalue())

    write("reports.csv", ["id", "year", "s_total", "r_neg", "a_neg", "a_pol", "sentiment_class", "is_concern"],
          [[r["id"], r["year"], r["s_total"], fmt(r["r_neg"]), fmt(r["a_neg"]), fmt(r["a_pol"]), r["cls"],
            1 if r["concern"] else 0] for r in results])

    years = sorted({r["year"] for r in results})
    yearly, emo_rows, conc_rows, points = [], [], [], []
    for y in years:
        group = [r for r in results if r["year"] == y]
        n = len(group)
        cnt = Counter(r["cls"] for r in group)
        acc = 0.0
        for v in sorted(r["a_pol"] for r in group):
            acc += v
        yearly.append([y, n, fmt(100.0 * cnt["negative"] / n), fmt(100.0 * cnt["positive"] / n),
                       fmt(100.0 * cnt["neutral"] / n), fmt(acc / n)])
        sentences = sum(r["s_total"] for r in group)
        hits = [sum(r["hits"][k] for r in group) for k in range(8)]
        emo_rows.append([y, sentences] + hits + [fmt(h / sentences if sentences else 0.0) for h in hits])
        concerns = sum(1 for r in group if r["concern"] and r["cls"] == "negative")
        conc_rows.append([y, n, cnt["negative"], concerns])
        points.append((y, float(n), float(concerns)))
    write("yearly.csv", ["Year", "Total Reports", "Negative (%)", "Positive (%)", "Neutral (%)",
                         "Mean Polarity Score"], yearly)
    write("emotions.csv", ["Year", "Sentences"] + EMOTIONS + [e + "_share" for e in EMOTIONS], emo_rows)
    write("concerns.csv", ["Year", "Total Reports", "Negative Reports", "Concern Reports"], conc_rows)

    words = Counter()
    for r in results:
        if r["concern"] and r["cls"] == "negative":
            for toks in r["sents"]:
                words.update(t["surface"] for t in toks if not t["stop"])
    ranked = sorted(words.items(), key=lambda kv: (-kv[0 + 1], kv[0]))
    write("wordfreq.csv", ["word", "count"], [[w, c] for w, c in ranked[:100]])

    X = np.array([[1.0, p[1]] for p in points])
    Y = np.array([p[2] for p in points])
    coef, *_ = np.linalg.lstsq(X, Y, rcond=None)
    json.dump({"intercept": float(coef[0]), "slope": float(coef[1]),
               "points": [[p[0], p[1], p[2]] for p in points]},
              open(f"{out}/regression.json", "w"), indent=2)
    open(f"{out}/regression.json", "a").write("\n")

    for r in results:
        print(r["id"], r["year"], r["s_total"], round(r["r_neg"], 3), round(r["a_neg"], 3),
              round(r["a_pol"], 3), r["cls"], "CONCERN" if r["concern"] else "", file=sys.stderr)
    print("top words:", ranked[:8], file=sys.stderr)


if __name__ == "__main__":
    main()
