"""Coarse part-of-speech tagging for query term selection.

Queries only need a noun/verb/other split, so the default tagger is a
small closed-class lexicon plus suffix heuristics. Any object with a
``tag(tokens) -> list[str]`` method returning the tags below can be
plugged in instead.
"""

from __future__ import annotations

from typing import Protocol, Sequence

NOUN = "noun"
VERB = "verb"
OTHER = "other"


class PosTagger(Protocol):
    def tag(self, tokens: Sequence[str]) -> list[str]:
        """Return one of NOUN/VERB/OTHER per input token."""
        ...


# Function words: determiners, prepositions, pronouns, conjunctions,
# auxiliaries, wh-words. These never contribute query keywords.
_CLOSED_CLASS = frozenset("""
a an the this that these those some any each every all both few many much
most other another such same own
i you he she it we they me him her us them my your his its our their mine
yours hers ours theirs myself yourself himself herself itself ourselves
themselves
in on at of to for with from by about as into onto over under between
through during before after above below up down out off against along
around behind beside beyond inside outside within without via per
and or but nor so yet if then than because while although though unless
since until whether
is are was were be been being am do does did doing done have has had having
can could will would shall should may might must need dare
how what when where why which who whom whose
not no yes there here again further once too very just only also etc
""".split())

# Verbs common in programming questions; inflected forms are resolved by
# the suffix rules, so mostly base forms are listed.
_VERB_LEXICON = frozenset("""
add append build calculate call catch change check clear click close
compare compile compress concatenate configure connect convert copy count
create debug declare decode decompress decrypt delete deserialize detect
disable display download draw enable encode encrypt escape execute export
extract fetch fill filter find fix format generate get handle hide
implement import initialize insert install invoke iterate join kill launch
listen load log loop make measure merge modify move notify open parse pass
paste pause play plot populate post print push put query quit read receive
redirect refresh remove rename render replace reset resize resolve restart
retrieve return reverse rotate round run save schedule search select send
serialize set show shuffle sleep sort split start stop store stream strip
submit subtract swap switch terminate test throw transform trim truncate
unzip update upload use validate verify wait wrap write zip
""".split())

# Nouns whose shape would otherwise mislead the suffix rules
# (e.g. "string" and "swing" end in -ing) plus frequent domain terms.
_NOUN_LEXICON = frozenset("""
api application argument array browser buffer button byte cache calendar
character class client code collection column command comment config
connection console constructor content cookie data database date dialog
directory document driver element email encoding error event example
exception expression field file folder form frame function graph hash
header html http image index input integer interface item java javascript
json key keyboard label language layout library line link list log loop map
matrix memory menu message method mouse name node number object output
package page panel parameter parser password path pattern pixel port
process program property query queue regex request resource response
result row screen script server session socket spring sql stack statement
string swing syntax system table tag template text thread time timer
timestamp token tree type url user value variable vector version video
view web window xml
""".split())

_NOUN_SUFFIXES = (
    "tion", "sion", "ment", "ness", "ance", "ence", "ship", "ity", "ism",
    "ist", "ure", "age", "ery",
)
_VERB_SUFFIXES = ("ize", "ise", "ify")


class LexiconTagger:
    """Lexicon-first tagger with suffix heuristics; unknown tokens are nouns.

    Unknown-as-noun matches query vocabulary, where novel tokens are
    overwhelmingly technology names (gzip, md5, jsoup).
    """

    def tag(self, tokens: Sequence[str]) -> list[str]:
        return [self._tag_one(tok.lower()) for tok in tokens]

    @staticmethod
    def _tag_one(token: str) -> str:
        if token in _CLOSED_CLASS:
            return OTHER
        if token in _VERB_LEXICON:
            return VERB
        if token in _NOUN_LEXICON:
            return NOUN
        base = token
        for suffix in ("ing", "ed", "es", "s"):
            if token.endswith(suffix) and len(token) > len(suffix) + 2:
                base = token[: -len(suffix)]
                break
        if base in _VERB_LEXICON or base + "e" in _VERB_LEXICON:
            return VERB
        if base in _NOUN_LEXICON or base + "e" in _NOUN_LEXICON:
            return NOUN
        if token.endswith(_VERB_SUFFIXES):
            return VERB
        if token.endswith(_NOUN_SUFFIXES):
            return NOUN
        if token.endswith("ing") and len(token) > 5:
            return VERB
        return NOUN


def default_tagger() -> LexiconTagger:
    return LexiconTagger()
