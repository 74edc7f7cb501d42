# Copyright 2026 The sandhi-align Authors
#
# Licensed under the Apache License, Version 2.0.
# See http://www.apache.org/licenses/LICENSE-2.0 for license information.
# SPDX-License-Identifier: Apache-2.0

"""Writes the 20-sentence fixture corpus and segmenter analyses.

Spans are phoneme offsets into the normalized sentence, so they are computed
here from substrings rather than typed by hand. Run from anywhere:

    python3 tests/data/build_fixtures.py
"""

import json
import pathlib
import unicodedata

OUT = pathlib.Path(__file__).resolve().parent / "fixture"

DIGRAPHS = {"kh", "gh", "ch", "jh", "ṭh", "ḍh", "th", "dh", "ph", "bh", "ai", "au"}


def phonemes(text):
    text = unicodedata.normalize("NFC", text)
    out, i = [], 0
    while i < len(text):
        if text[i:i + 2] in DIGRAPHS:
            out.append(text[i:i + 2])
            i += 2
        else:
            out.append(text[i])
            i += 1
    return out


def locate(norm, sub, nth=0):
    hay, needle = phonemes(norm), phonemes(sub)
    hits = [i for i in range(len(hay) - len(needle) + 1) if hay[i:i + len(needle)] == needle]
    if len(hits) <= nth:
        raise ValueError(f"{sub!r} (#{nth}) not in {norm!r}")
    return hits[nth], hits[nth] + len(needle)


def node(word, lemma, cng, morph, at=None, nth=0, color="Noun", sense=(1,), **extra):
    return dict(word=word, lemma=lemma, cng=cng, morph=list(morph), at=at or word, nth=nth,
                color=color, sense=list(sense), extra=extra)


def sentence(sent_id, text, chunks, lemmas, cngs, nodes, norm=None):
    return dict(sent_id=sent_id, text=text, norm=norm or text, chunks=chunks, lemmas=lemmas, cngs=cngs,
                nodes=nodes)


VERB3 = "pr. [1] ac. sg. 3"

SENTENCES = [
    # The example gold record: seven chunks, one of them split off by avagraha.
    sentence(83, "mauktike yadi saṃdehaḥ kṛtrime sahaje'pi vā",
             ["mauktika", "yadi", "saṃdeha", "kṛtrima", "sahaja", "api", "vā"],
             [["mauktika"], ["yadi"], ["saṃdeha"], ["kṛtrima"], ["sahaja"], ["api"], ["vā"]],
             [[171], [2], [29], [171], [171], [2], [2]],
             [node("mauktike", "mauktika", 171, ["n. sg. loc."]),
              node("yadi", "yadi", 2, ["ind."], color="Ind"),
              node("sandehaḥ", "sandeha", 29, ["m. sg. nom."]),
              node("kṛtrime", "kṛtrima", 171, ["n. sg. loc."]),
              node("sahaje", "sahaja", 171, ["n. sg. loc."]),
              node("api", "api", 2, ["conj."], at="'pi", color="Ind"),
              node("vā", "vā", 2, ["ind."], color="Ind")],
             norm="mauktike yadi sandehaḥ kṛtrime sahaje'pi vā"),
    # Preverb on the derivational side: vi + rāj.
    sentence(102, "bindusthānaṃ madhyadeśe sadā padmavirājitam",
             ["bindusthānam", "madhyadeśe", "sadā", "padmavirājitam"],
             [["bindu", "sthāna"], ["madhyadeśa"], ["sadā"], ["padma", "virāj"]],
             [[3, 71], [171], [2], [3, -190]],
             [node("bindu", "bindu", 3, ["iic."], color="Iic"),
              node("sthānaṃ", "sthāna", 71, ["n. sg. acc."]),
              node("madhyadeśe", "madhyadeśa", 171, ["m. sg. loc."]),
              node("sadā", "sadā", 2, ["ind."], color="Ind"),
              node("padma", "padma", 3, ["iic."], color="Iic"),
              node("virājitam", "rājita", 71, ["n. sg. acc.", "n. sg. nom.", "m. sg. acc."], color="Krid",
                   pre_verb="vi", der_pre_verb="vi", der_lemma="rāj", der_sense=[1], der_morph=["pp."],
                   der_cng=-190),
              node("virāji", "virāj", 171, ["m. sg. loc.", "n. sg. loc.", "f. sg. loc."], sense=(2,)),
              node("tam", "tad", 31, ["m. sg. acc."], at="tam", color="Pron")]),
    # Preverb on the verb: pra + śaṃs.
    sentence(103, "devāḥ praśaṃsanti",
             ["devāḥ", "praśaṃsanti"], [["deva"], ["praśaṃs"]], [[1029], [1103]],
             [node("devāḥ", "deva", 1029, ["m. pl. nom."]),
              node("praśaṃsanti", "śaṃs", 1103, ["pr. [1] ac. pl. 3"], color="Verb", pre_verb="pra")]),
    # Preverb with n retroflexion: pra + nam.
    sentence(104, "sa praṇamati",
             ["sa", "praṇamati"], [["tad"], ["praṇam"]], [[29], [1003]],
             [node("sa", "tad", 29, ["m. sg. nom."], color="Pron"),
              node("praṇamati", "nam", 1003, [VERB3], color="Verb", pre_verb="pra")]),
    # Derivational gold code against three inflectional readings.
    sentence(105, "śrutaṃ vede purāṇe ca tava vaktre sureśvara",
             ["śrutam", "vede", "purāṇe", "ca", "tava", "vaktre", "sureśvara"],
             [["śru"], ["veda"], ["purāṇa"], ["ca"], ["tvad"], ["vaktra"], ["sura", "īśvara"]],
             [[-190], [171], [171], [2], [1140], [171], [3, 1090]],
             [node("śrutaṃ", "śruta", 31, ["m. sg. acc."], color="Krid", der_lemma="śru", der_morph=["pp."],
                   der_cng=-190),
              node("śrutaṃ", "śruta", 71, ["n. sg. acc."], color="Krid", der_lemma="śru", der_morph=["pp."],
                   der_cng=-190),
              node("śrutaṃ", "śruta", 69, ["n. sg. nom."], color="Krid", der_lemma="śru", der_morph=["pp."],
                   der_cng=-190),
              node("vede", "veda", 171, ["m. sg. loc."]),
              node("purāṇe", "purāṇa", 171, ["n. sg. loc."]),
              node("ca", "ca", 2, ["ind."], color="Ind"),
              node("tava", "yuṣmad", 1140, ["sg. g."], color="Pron"),
              node("vaktre", "vaktra", 171, ["n. sg. loc."]),
              node("sura", "sura", 3, ["iic."], at="sur", color="Iic"),
              node("īśvara", "īśvara", 1090, ["m. sg. voc."], at="eśvara")]),
    # Gold lemma is the root of a future passive participle.
    sentence(106, "bhaktiḥ kartavyā",
             ["bhaktiḥ", "kartavyā"], [["bhakti"], ["kṛ"]], [[1030], [1030]],
             [node("bhaktiḥ", "bhakti", 1030, ["f. sg. nom."]),
              node("kartavyā", "kartavya", 1030, ["f. sg. nom."], color="Krid", der_lemma="kṛ", der_sense=[1],
                   der_morph=["pfp. [3]"], der_cng=-230)]),
    # Pronoun stem conventions, and a doubled consonant after r.
    sentence(107, "tvaṃ dharmmaṃ jānāsi",
             ["tvam", "dharmmam", "jānāsi"], [["tvad"], ["dharma"], ["jñā"]], [[1020], [31], [1002]],
             [node("tvam", "yuṣmad", 1020, ["sg. nom."], at="tvaṃ", color="Pron"),
              node("dharmmaṃ", "dharmma", 31, ["m. sg. acc."], at="dharmaṃ"),
              node("jānāsi", "jñā", 1002, ["pr. [9] ac. sg. 2"], color="Verb")],
             norm="tvaṃ dharmaṃ jānāsi"),
    # Compound member whose segmenter lemma differs from its form.
    sentence(108, "mahādevaḥ jayati",
             ["mahādevaḥ", "jayati"], [["mahā", "deva"], ["ji"]], [[3, 29], [1003]],
             [node("mahā", "mahat", 3, ["iic."], color="Iic"),
              node("devaḥ", "deva", 29, ["m. sg. nom."]),
              node("jayati", "ji", 1003, [VERB3], color="Verb")]),
    # Causative stems.
    sentence(109, "śivaṃ pūjayati",
             ["śivam", "pūjayati"], [["śiva"], ["pūjay"]], [[31], [1003]],
             [node("śivaṃ", "śiva", 31, ["m. sg. acc."]),
              node("pūjayati", "pūj", 1003, ["pr. [10] ac. sg. 3"], color="Verb")]),
    sentence(110, "śrīśaṃkaraḥ bhūśayati",
             ["śrīśaṃkaraḥ", "bhūśayati"], [["śrī", "śaṃkara"], ["bhūśay"]], [[3, 29], [1003]],
             [node("śrī", "śrī", 3, ["iic."], color="Iic"),
              node("śaṃkaraḥ", "śaṃkara", 29, ["m. sg. nom."], at="śaṅkaraḥ"),
              node("bhūśayati", "bhūś", 1003, ["pr. [10] ac. sg. 3"], color="Verb")],
             norm="śrīśaṅkaraḥ bhūśayati"),
    # Compound members to be joined: śukti + udbhava.
    sentence(111, "śaṅkhaśuktyudbhavaṃ ratnam",
             ["śaṅkhaśuktyudbhavam", "ratnam"], [["śaṅkha", "śuktyudbhava"], ["ratna"]], [[3, 71], [71]],
             [node("śaṅkha", "śaṅkha", 3, ["iic."], color="Iic"),
              node("śukti", "śukti", 3, ["iic."], at="śukt", color="Iic"),
              node("udbhavaṃ", "udbhava", 71, ["n. sg. acc."], at="yudbhavaṃ"),
              node("ratnam", "ratna", 71, ["n. sg. acc."])]),
    # Two compound analyses reach the same gold lemma.
    sentence(112, "śāntiṃ kuryād dvijottamaḥ",
             ["śāntim", "kuryāt", "dvijottamaḥ"], [["śānti"], ["kṛ"], ["dvijottama"]], [[1031], [1013], [29]],
             [node("śāntiṃ", "śānti", 1031, ["f. sg. acc."]),
              node("kuryād", "kṛ", 1013, ["opt. [8] ac. sg. 3"], color="Verb"),
              node("dvija", "dvija", 3, ["iic."], at="dvij", color="Iic"),
              node("dvi", "dvi", 3, ["iic."], color="Iic"),
              node("ja", "ja", 3, ["iic."], at="j", color="Iic"),
              node("uttamaḥ", "uttama", 29, ["m. sg. nom."], at="ottamaḥ")]),
    # No analysis for the word; the gold splits off a secondary suffix.
    sentence(113, "prameyatvam asti",
             ["prameyatvam", "asti"], [["prameya", "tva"], ["as"]], [[3, 71], [1003]],
             [node("pra", "pra", 2, ["ind."], color="Ind"),
              node("meya", "meya", 3, ["iic."], color="Iic"),
              node("tvam", "yuṣmad", 1020, ["sg. nom."], color="Pron"),
              node("asti", "as", 1003, ["pr. [2] ac. sg. 3"], color="Verb")]),
    # One gold code, two tags: pp. and ca. pp.
    sentence(114, "śivaṃ māyābinduvibhūṣitam",
             ["śivam", "māyābinduvibhūṣitam"], [["śiva"], ["māyā", "bindu", "vibhūṣay"]], [[31], [3, 3, -190]],
             [node("śivaṃ", "śiva", 31, ["m. sg. acc."]),
              node("māyā", "māyā", 3, ["iic."], color="Iic"),
              node("bindu", "bindu", 3, ["iic."], color="Iic"),
              node("vibhūṣitam", "vibhūṣay", -190, ["pp."], color="Krid"),
              node("vibhūṣitam", "vibhūṣay", -190, ["ca. pp."], color="Krid")]),
    # Homonyms hita_1 / hita_2 collapse into one node.
    sentence(115, "haritaṃ hitam",
             ["haritam", "hitam"], [["harita"], ["hita"]], [[71], [71]],
             [node("haritaṃ", "harita", 71, ["n. sg. acc."]),
              node("hitam", "hita", 71, ["n. sg. acc."], sense=(1,)),
              node("hitam", "hita", 71, ["n. sg. acc."], sense=(2,))]),
    # Homonyms siddha_1 / siddha_2 from homonymous roots.
    sentence(116, "kāryaṃ siddham",
             ["kāryam", "siddham"], [["kārya"], ["siddha"]], [[69], [69]],
             [node("kāryaṃ", "kārya", 69, ["n. sg. nom."]),
              node("siddham", "siddha", 69, ["n. sg. nom."], color="Krid", sense=(1,), der_lemma="sidh",
                   der_sense=[1], der_morph=["pp."], der_cng=-190),
              node("siddham", "siddha", 69, ["n. sg. nom."], color="Krid", sense=(2,), der_lemma="sidh",
                   der_sense=[2], der_morph=["pp."], der_cng=-190)]),
    # Indeclinable classed as conj. by the segmenter.
    sentence(117, "rāmaḥ api gacchati",
             ["rāmaḥ", "api", "gacchati"], [["rāma"], ["api"], ["gam"]], [[29], [2], [1003]],
             [node("rāmaḥ", "rāma", 29, ["m. sg. nom."]),
              node("api", "api", 2, ["conj."], color="Ind"),
              node("gacchati", "gam", 1003, [VERB3], color="Verb")]),
    # First member tagged pfp. iic. against a plain iic. gold code.
    sentence(118, "rūpyapātram",
             ["rūpyapātram"], [["rūpya", "pātra"]], [[3, 71]],
             [node("rūpya", "rūpya", -233, ["pfp. iic."], color="Iic"),
              node("pātram", "pātra", 71, ["n. sg. acc."])]),
    # Secondary derivative lemmatized as a compound by the gold side.
    sentence(119, "brahmamayī surā",
             ["brahmamayī", "surā"], [["brahman", "maya"], ["surā"]], [[3, 1030], [1030]],
             [node("brahmamayī", "brahmamaya", 1030, ["f. sg. nom."]),
              node("surā", "surā", 1030, ["f. sg. nom."])]),
    # Agent noun and two participles share a stem.
    sentence(120, "vada me parameśāna",
             ["vada", "me", "parameśāna"], [["vad"], ["mad"], ["parama", "īśāna"]], [[1012], [1140], [3, 1090]],
             [node("vada", "vad", 1012, ["imp. [1] ac. sg. 2"], color="Verb"),
              node("me", "asmad", 1140, ["sg. g."], color="Pron"),
              node("parama", "parama", 3, ["iic."], at="param", color="Iic"),
              node("īśāna", "īśāna", 1090, ["m. sg. voc."], at="eśāna", color="Krid", der_lemma="īś",
                   der_sense=[1], der_morph=["ppr. [2] md."], der_cng=-210),
              node("īśāna", "īśāna", 1090, ["m. sg. voc."], at="eśāna", color="Krid", der_lemma="īś",
                   der_sense=[1], der_morph=["ppr. [2] ps."], der_cng=-210),
              node("īśāna", "īśāna", 1090, ["m. sg. voc."], at="eśāna", color="Noun")]),
]


def build():
    corpus, analyses = [], []
    for s in SENTENCES:
        corpus.append(dict(sent_id=s["sent_id"], text=s["text"], chunks=s["chunks"], lemmas=s["lemmas"],
                           cng=s["cngs"]))
        norm = s["norm"]
        chars = phonemes(norm)
        spans = [locate(norm, n["at"], n["nth"]) for n in s["nodes"]]
        # position numbers distinct spans left to right; homonyms share one
        position = {span: k for k, span in enumerate(sorted(set(spans)), start=1)}
        segments = []
        for k, (n, (start, end)) in enumerate(zip(s["nodes"], spans), start=1):
            seg = dict(id=k, color_class=n["color"], position=position[(start, end)],
                       chunk_no=chars[:start].count(" ") + 1,
                       word=n["word"], lemma=n["lemma"], sense=n["sense"], cng=n["cng"], morph=n["morph"],
                       length_word=len([p for p in phonemes(n["word"]) if p not in (" ", "-")]),
                       char_pos=[start, end])
            seg.update(n["extra"])
            segments.append(seg)
        analyses.append(dict(sent_id=s["sent_id"], segments=segments))
    return corpus, analyses


def main():
    corpus, analyses = build()
    OUT.mkdir(parents=True, exist_ok=True)
    for name, rows in (("corpus.jsonl", corpus), ("analyses.jsonl", analyses)):
        with open(OUT / name, "w", encoding="utf-8") as fh:
            for row in rows:
                fh.write(json.dumps(row, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
