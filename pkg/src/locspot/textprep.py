"""Tweet cleaning, tokenization, and stop-word splitting.

Cleaning masks retweet markers, URLs, user mentions, and non-ASCII
characters, then collapses whitespace and case-folds. An offset map
carries every cleaned position back to its raw position so extracted
mentions can report spans into the original text.

Tokenization is whitespace-driven. Hashtags and emoticons stay single
tokens, acronyms like "u.s." keep their periods, and other punctuation
adjacent to (or sandwiched between) words is detached into separate
tokens.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

_URL_RE = re.compile(r"(?:https?://|www\.)\S+", re.IGNORECASE)
_MENTION_RE = re.compile(r"@\w+")
_RT_RE = re.compile(r"\bRT\b")  # uppercase retweet marker only

_HASHTAG_RE = re.compile(r"#\w+")
_ACRONYM_RE = re.compile(r"^(?:[a-z]\.)+[a-z]?$")
_NUMBER_RE = re.compile(r"^\d+(?:[.,:]\d+)*$")
_INTERNAL_SPLIT_RE = re.compile(r"[.,;:!?]+")
_EMOTICON_RE = re.compile(
    r"^(?:"
    r"[<>]?[:;=8][\-o'*]?[)\](\[dph/\\|{}@o0*3]+"  # :-) ;p =D :/
    r"|[)\](\[dp/\\|{}]+[\-o'*]?[:;=8][<>]?"       # (-: mirrored
    r"|<+/?3+"                                      # <3
    r"|\^[_\-.]?\^"                                 # ^_^
    r"|[xX][dD]+"                                   # xD
    r")$"
)
_PUNCT = set(".,!?;:\"'()[]{}<>|\\/`~^*+=&%$#@…-")


@dataclass
class Token:
    """A token with [start, end) character offsets into its source text."""

    surface: str
    start: int
    end: int
    from_hashtag: bool = False

    def is_punctuation(self) -> bool:
        return all(ch in _PUNCT for ch in self.surface)


@dataclass
class TweetDocument:
    """A tweet plus everything derived from it during preparation.

    tokens carry raw-text offsets. hashtag_expansions maps a hashtag
    token's index to its segmented sub-tokens (which share the full
    hashtag span). splits are the stop-word-free fragments of the
    expanded token stream, in order.
    """

    raw: str
    cleaned: str
    tokens: list[Token]
    splits: list[list[Token]] = field(default_factory=list)
    hashtag_expansions: dict[int, list[Token]] = field(default_factory=dict)


def clean_tweet(raw: str) -> tuple[str, list[int]]:
    """Strip retweet markers, URLs, mentions, and non-ASCII; case-fold.

    Returns the cleaned text and an offset map where map[i] is the raw
    index of cleaned character i. Removals never reorder text, so the
    map is strictly increasing.
    """
    masked = list(raw)
    for regex in (_URL_RE, _MENTION_RE, _RT_RE):
        for m in regex.finditer(raw):
            for i in range(m.start(), m.end()):
                masked[i] = " "
    for i, ch in enumerate(masked):
        if ord(ch) > 127 or (ch != " " and ch.isspace()):
            masked[i] = " "

    cleaned_chars: list[str] = []
    offset_map: list[int] = []
    pending_space = False
    for i, ch in enumerate(masked):
        if ch == " ":
            pending_space = bool(cleaned_chars)
            continue
        if pending_space:
            cleaned_chars.append(" ")
            offset_map.append(i - 1)
            pending_space = False
        cleaned_chars.append(ch.lower())
        offset_map.append(i)
    return "".join(cleaned_chars), offset_map


def tokenize(cleaned: str) -> list[Token]:
    """Tokenize cleaned text, offsets relative to the given string."""
    tokens: list[Token] = []
    pos = 0
    length = len(cleaned)
    while pos < length:
        if cleaned[pos] == " ":
            pos += 1
            continue
        end = cleaned.find(" ", pos)
        if end == -1:
            end = length
        _split_chunk(cleaned[pos:end], pos, tokens)
        pos = end
    return tokens


def _split_chunk(chunk: str, base: int, out: list[Token]):
    if _EMOTICON_RE.match(chunk):
        out.append(Token(chunk, base, base + len(chunk)))
        return
    if chunk.startswith("#"):
        m = _HASHTAG_RE.match(chunk)
        if m and m.end() > 1:
            out.append(Token(chunk[: m.end()], base, base + m.end()))
            if m.end() < len(chunk):
                _split_chunk(chunk[m.end():], base + m.end(), out)
            return

    lead = 0
    while lead < len(chunk) and chunk[lead] in _PUNCT:
        lead += 1
    if lead:
        out.append(Token(chunk[:lead], base, base + lead))
        chunk, base = chunk[lead:], base + lead
        if not chunk:
            return

    trail = len(chunk)
    while trail > 0 and chunk[trail - 1] in _PUNCT:
        # acronym periods belong to the token ("u.s." stays whole)
        if chunk[trail - 1] == "." and _ACRONYM_RE.match(chunk[:trail]):
            break
        trail -= 1
    core, trailing = chunk[:trail], chunk[trail:]

    if core:
        _split_core(core, base, out)
    if trailing:
        out.append(Token(trailing, base + trail, base + len(chunk)))


def _split_core(core: str, base: int, out: list[Token]):
    if _ACRONYM_RE.match(core) or _NUMBER_RE.match(core):
        out.append(Token(core, base, base + len(core)))
        return
    pos = 0
    for m in _INTERNAL_SPLIT_RE.finditer(core):
        if m.start() > pos:
            out.append(Token(core[pos:m.start()], base + pos, base + m.start()))
        out.append(Token(m.group(), base + m.start(), base + m.end()))
        pos = m.end()
    if pos < len(core):
        out.append(Token(core[pos:], base + pos, base + len(core)))


def split_on_stopwords(tokens, stoplist) -> list[list[Token]]:
    """Break a token stream into maximal runs of non-stop-word tokens.

    The stop list is assumed to already exclude gazetteer unigrams;
    order and offsets are preserved.
    """
    fragments: list[list[Token]] = []
    current: list[Token] = []
    for token in tokens:
        if token.surface in stoplist:
            if current:
                fragments.append(current)
                current = []
        else:
            current.append(token)
    if current:
        fragments.append(current)
    return fragments


def prepare_tweet(raw, stopwords, segmenter=None, corrector=None) -> TweetDocument:
    """Run the full preparation pipeline on one raw tweet.

    Cleans and tokenizes, segments every hashtag through the statistical
    segmenter (when given), optionally replaces out-of-vocabulary token
    surfaces with spelling corrections, and splits the expanded token
    stream on stop words.
    """
    cleaned, offset_map = clean_tweet(raw)
    tokens = []
    for t in tokenize(cleaned):
        raw_start = offset_map[t.start]
        raw_end = offset_map[t.end - 1] + 1
        tokens.append(Token(t.surface, raw_start, raw_end))

    expansions: dict[int, list[Token]] = {}
    if segmenter is not None:
        for index, token in enumerate(tokens):
            if token.surface.startswith("#") and len(token.surface) > 1:
                words = segmenter.segment(token.surface[1:])
                expansions[index] = [
                    Token(w, token.start, token.end, from_hashtag=True)
                    for w in words
                ]

    stream: list[Token] = []
    for index, token in enumerate(tokens):
        if index in expansions:
            stream.extend(expansions[index])
        elif (corrector is not None and not token.is_punctuation()
                and not token.surface.startswith("#")):
            stream.append(Token(corrector.correct(token.surface),
                                token.start, token.end))
        else:
            stream.append(token)

    splits = split_on_stopwords(stream, stopwords)
    return TweetDocument(raw=raw, cleaned=cleaned, tokens=tokens,
                         splits=splits, hashtag_expansions=expansions)
