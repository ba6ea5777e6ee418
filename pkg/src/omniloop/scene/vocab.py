"""Phrase pools the scene generator draws from.

The pools are partitioned on purpose: the quoted values and numbers that
appear in FINE visual facts never occur in coarse statements, event
descriptions, speech lines, or summaries. That separation is what makes
generated cross-modal questions unanswerable from any global pass, and the
generator verifies it mechanically for every emitted question.
"""

from __future__ import annotations

# (label, description) — labels are gerund phrases with no shared tokens
# between any two labels, so event localization queries are unambiguous.
EVENT_POOL: tuple[tuple[str, str], ...] = tuple(
    (label, f"a {label} sound cuts through the background")
    for label in (
        "dog barking",
        "cat meowing",
        "phone ringing",
        "door slamming",
        "glass clinking",
        "baby crying",
        "birds chirping",
        "engine revving",
        "drum beating",
        "bell tolling",
        "keyboard clacking",
        "water splashing",
        "crowd cheering",
        "siren wailing",
        "horse neighing",
        "thunder rumbling",
        "whistle blowing",
        "camera clicking",
        "coins jingling",
        "paper rustling",
    )
)

# FINE facts: (subject noun used in question text, statement template).
# Text subjects take a quoted phrase, numeric subjects take a two-digit code.
FINE_TEXT_SUBJECTS: tuple[tuple[str, str], ...] = (
    ("signboard", "the signboard reads '{v}'"),
    ("poster", "the poster advertises '{v}'"),
    ("banner", "the banner announces '{v}'"),
    ("mug", "the mug is printed with '{v}'"),
    ("chalkboard", "the chalkboard lists '{v}'"),
    ("door plaque", "the door plaque reads '{v}'"),
)

FINE_NUMBER_SUBJECTS: tuple[tuple[str, str], ...] = (
    ("jersey", "the jersey shows the number {v}"),
    ("locker", "the locker is numbered {v}"),
    ("price tag", "the price tag shows {v} cents"),
    ("license plate", "the license plate ends in {v}"),
    ("bib", "the runner's bib carries the number {v}"),
    ("meter", "the meter displays {v} units"),
)

FINE_VALUE_PHRASES: tuple[str, ...] = (
    "Fu Lu",
    "Golden Tea",
    "Jade Harbor",
    "Silver Fern",
    "Crimson Lantern",
    "Lucky Panda",
    "Velvet Moon",
    "Iron Anchor",
    "Amber Lotus",
    "Misty Pine",
    "Royal Orchid",
    "Coral Reef",
    "Ivory Crane",
    "Cobalt Tide",
    "Indigo Dune",
    "Scarlet Ember",
    "Emerald Willow",
    "Bamboo Grove",
    "Falcon Ridge",
    "Comet Trail",
    "Glacier Peak",
    "Prairie Wind",
    "Canyon Echo",
    "Harvest Moonrise",
    "Topaz Meadow",
    "Obsidian Arch",
    "Saffron Valley",
    "Juniper Hollow",
    "Marble Lagoon",
    "Quartz Haven",
    "Cedar Summit",
    "Onyx Garden",
    "Sapphire Cove",
    "Maple Crest",
    "Thistle Down",
    "Raven Hollow",
)

FINE_VALUE_NUMBERS: tuple[str, ...] = tuple(
    str(n)
    for n in (
        11, 14, 17, 19, 23, 26, 28, 31, 34, 37, 41, 43,
        47, 52, 56, 58, 61, 64, 67, 71, 73, 76, 79, 82,
        84, 86, 88, 91, 93, 94, 96, 97, 29, 38, 49, 59,
    )
)

# COARSE facts: (actor phrase, noun used in control questions).
COARSE_ACTORS: tuple[tuple[str, str], ...] = (
    ("a kitten wanders", "kitten"),
    ("a vendor arranges produce", "vendor"),
    ("several cyclists glide", "cyclists"),
    ("an elderly couple strolls", "couple"),
    ("a street performer juggles", "performer"),
    ("a delivery rider weaves", "rider"),
    ("two painters work", "painters"),
    ("a gardener trims hedges", "gardener"),
    ("schoolchildren march", "schoolchildren"),
    ("a busker strums", "busker"),
    ("a florist waters flowers", "florist"),
    ("a barista serves drinks", "barista"),
    ("joggers stretch", "joggers"),
    ("a postal worker sorts parcels", "postal worker"),
)

COARSE_PLACES: tuple[str, ...] = (
    "near a covered market",
    "along a narrow canal",
    "outside a corner bakery",
    "beneath a concrete overpass",
    "across a cobbled plaza",
    "beside a tram stop",
    "under striped awnings",
    "around a stone fountain",
    "next to a newspaper kiosk",
    "along a busy promenade",
    "inside a glass arcade",
    "by the station entrance",
    "opposite a brick warehouse",
    "at the edge of a park lawn",
    "in front of a cinema lobby",
    "behind a produce stall",
)

SPEECH_POOL: tuple[str, ...] = (
    "let's keep the camera rolling",
    "look over there for a second",
    "we should head back before dark",
    "this place gets busy in the mornings",
    "remember to grab groceries later",
    "the light looks perfect right now",
    "stay close while we cross",
    "that reminds me about our trip",
    "hold on while I tie my shoe",
    "can you believe this weather",
    "we're almost at the meeting point",
    "someone left an umbrella again",
)

# Question templates. Cross-modal templates embed the event label verbatim
# so keyword extraction can recover it from the question.
CROSS_MODAL_TEMPLATES: tuple[str, ...] = (
    "When you hear the {label}, what does the {subject} show?",
    "At the moment the {label} is heard, what can be read on the {subject}?",
    "While the {label} plays, what does the {subject} display?",
)

AUDIO_CONTROL_TEMPLATE = "Which of these sounds can be heard in this scene?"
VISUAL_CONTROL_TEMPLATE = "What is the {noun} doing in this scene overall?"


def fine_statement_pool() -> tuple[tuple[str, str], ...]:
    """Every (subject, statement) pair, text subjects first.

    The full cross product keeps statements globally distinct, which lets the
    generator hand out distractors from other scenes without collisions.
    """
    combos: list[tuple[str, str]] = []
    for subject, template in FINE_TEXT_SUBJECTS:
        for value in FINE_VALUE_PHRASES:
            combos.append((subject, template.format(v=value)))
    for subject, template in FINE_NUMBER_SUBJECTS:
        for value in FINE_VALUE_NUMBERS:
            combos.append((subject, template.format(v=value)))
    return tuple(combos)


def coarse_statement_pool() -> tuple[tuple[str, str], ...]:
    """Every (noun, statement) pair for coarse scene-level facts."""
    return tuple(
        (noun, f"{actor} {place}")
        for actor, noun in COARSE_ACTORS
        for place in COARSE_PLACES
    )
