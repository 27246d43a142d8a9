"""Line-oriented system file format.

    # comments run to end of line
    alphabet: a b c
    map a -> a b
    map b -> b a
    map c ->            # empty right side: erasing image
    axiom: a
    axiom: b a

Tokens are separated by spaces or tabs.  The alphabet line must come first;
every letter needs exactly one map line; at least one axiom is required.
Rendering and parsing round-trip exactly.
"""

from .errors import ParseError
from .system import Alphabet, DF0LSystem, LetterMap, Morphism


def parse_system(text: str) -> DF0LSystem:
    alphabet = None
    images = {}
    image_lines = {}
    axioms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "alphabet:":
            if alphabet is not None:
                raise ParseError("duplicate alphabet line", lineno)
            if len(tokens) == 1:
                raise ParseError("alphabet line has no letters", lineno)
            seen = set()
            for tok in tokens[1:]:
                if tok in seen:
                    raise ParseError(f"duplicate letter {tok!r}", lineno)
                seen.add(tok)
            alphabet = Alphabet(tokens[1:])
        elif head == "map":
            if alphabet is None:
                raise ParseError("map before alphabet line", lineno)
            if len(tokens) < 3 or tokens[2] != "->":
                raise ParseError("map syntax is: map <letter> -> <letter> ...", lineno)
            letter = tokens[1]
            if letter not in alphabet:
                raise ParseError(f"unknown letter {letter!r}", lineno)
            if letter in images:
                raise ParseError(f"duplicate map for letter {letter!r}", lineno)
            for tok in tokens[3:]:
                if tok not in alphabet:
                    raise ParseError(f"unknown letter {tok!r}", lineno)
            images[letter] = tuple(tokens[3:])
            image_lines[letter] = lineno
        elif head == "axiom:":
            if alphabet is None:
                raise ParseError("axiom before alphabet line", lineno)
            if len(tokens) == 1:
                raise ParseError("axiom line has no letters", lineno)
            for tok in tokens[1:]:
                if tok not in alphabet:
                    raise ParseError(f"unknown letter {tok!r}", lineno)
            axioms.append(tuple(tokens[1:]))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if alphabet is None:
        raise ParseError("missing alphabet line")
    for letter in alphabet:
        if letter not in images:
            raise ParseError(f"missing map for letter {letter!r}")
    if not axioms:
        raise ParseError("no axiom lines")
    return DF0LSystem(Morphism(alphabet, images), axioms)


def render_system(system: DF0LSystem) -> str:
    lines = ["alphabet: " + " ".join(system.alphabet.letters)]
    for letter in system.alphabet:
        image = system.morphism.image(letter)
        lines.append(f"map {letter} ->" + (" " + " ".join(image) if image else ""))
    for axiom in system.axioms:
        lines.append("axiom: " + " ".join(axiom))
    return "\n".join(lines) + "\n"


def parse_letter_map(rules: str, source: Alphabet, target: Alphabet) -> LetterMap:
    """Parse rules like "a -> x y; b -> y" into a total LetterMap."""
    images = {}
    for chunk in rules.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        tokens = chunk.split()
        if len(tokens) < 2 or tokens[1] != "->":
            raise ParseError(f"bad rule {chunk!r}: expected <letter> -> <letter> ...")
        letter = tokens[0]
        if letter not in source:
            raise ParseError(f"unknown source letter {letter!r}")
        if letter in images:
            raise ParseError(f"duplicate rule for letter {letter!r}")
        for tok in tokens[2:]:
            if tok not in target:
                raise ParseError(f"unknown target letter {tok!r}")
        images[letter] = tuple(tokens[2:])
    for letter in source:
        if letter not in images:
            raise ParseError(f"missing rule for letter {letter!r}")
    return LetterMap(images)
