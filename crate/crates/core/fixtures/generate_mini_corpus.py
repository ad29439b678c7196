#!/usr/bin/env python3
"""Writes mini-corpus.tsv: 200 sentences in the Google text-normalization
layout, built only from patterns the English grammars cover.

References are computed here, independently of the grammars, so a 100%
sentence accuracy on this file is a real check. Output is deterministic.
"""

import random
from pathlib import Path

ONES = ("zero one two three four five six seven eight nine ten eleven twelve "
        "thirteen fourteen fifteen sixteen seventeen eighteen nineteen").split()
TENS = "_ _ twenty thirty forty fifty sixty seventy eighty ninety".split()
ORD_EXCEPTIONS = {"one": "first", "two": "second", "three": "third", "five": "fifth",
                  "eight": "eighth", "nine": "ninth", "twelve": "twelfth"}
MONTHS = ("january february march april may june july august september october "
          "november december").split()
UNITS = {"volt": "v", "volts": "v", "watts": "w", "kilowatt": "kw", "percent": "%",
         "grams": "g", "kilogram": "kg", "ounces": "oz", "millimeters": "mm",
         "centimeter": "cm", "meters": "m", "kilometers": "km", "inches": "in",
         "feet": "ft", "miles": "mi", "liters": "l", "hours": "h", "minutes": "min",
         "seconds": "s", "hertz": "hz", "kilohertz": "khz"}
CURRENCIES = {"dollar": "$", "dollars": "$", "pounds": "£", "euro": "€",
              "euros": "€", "yen": "¥"}
WHITELIST = {"mister": "Mr.", "misses": "Mrs.", "doctor": "Dr.", "versus": "vs.",
             "junior": "Jr."}
PLAIN = ("the a cat dog sat on mat we saw it then went home today is good very "
         "big small red blue house car road they paid about costs weighs runs "
         "measured was born at around only near price there this that").split()


def below_hundred(n):
    if n < 20:
        return ONES[n]
    return TENS[n // 10] + ("" if n % 10 == 0 else " " + ONES[n % 10])


def below_thousand(n, with_and):
    h, r = divmod(n, 100)
    if h == 0:
        return below_hundred(r)
    head = ONES[h] + " hundred"
    if r == 0:
        return head
    return head + (" and " if with_and else " ") + below_hundred(r)


def words(n, with_and=False):
    if n == 0:
        return "zero"
    parts = []
    for scale, name in ((10**9, "billion"), (10**6, "million"), (10**3, "thousand")):
        chunk, n = divmod(n, scale)
        if chunk:
            parts.append(below_thousand(chunk, with_and) + " " + name)
    if n:
        parts.append(below_thousand(n, with_and))
    return " ".join(parts)


def ordinal_words(n):
    *head, last = words(n).split(" ")
    if last in ORD_EXCEPTIONS:
        last = ORD_EXCEPTIONS[last]
    elif last.endswith("y"):
        last = last[:-1] + "ieth"
    else:
        last += "th"
    return " ".join(head + [last])


def suffix(n):
    if n % 100 in (11, 12, 13):
        return "th"
    return {1: "st", 2: "nd", 3: "rd"}.get(n % 10, "th")


def digit_word(d, rng):
    if d == "0":
        return rng.choice(["zero", "o", "oh"])
    return ONES[int(d)]


def amount(rng):
    """(spoken, written) for a cardinal or decimal amount."""
    n = rng.choice([rng.randint(0, 99), rng.randint(100, 99999)])
    if rng.random() < 0.5:
        return words(n, rng.random() < 0.5), str(n)
    frac = "".join(rng.choice("0123456789") for _ in range(rng.randint(1, 3)))
    spoken = words(n) + " point " + " ".join(digit_word(d, rng) for d in frac)
    return spoken, f"{n}.{frac}"


def token(rng):
    kind = rng.choice(["CARDINAL", "ORDINAL", "DECIMAL", "MONEY", "MEASURE", "DATE",
                       "WHITELIST"])
    if kind == "CARDINAL":
        n = rng.choice([rng.randint(0, 100), rng.randint(100, 10**4), rng.randint(10**4, 10**9)])
        return kind, str(n), words(n, rng.random() < 0.5)
    if kind == "ORDINAL":
        n = rng.choice([rng.randint(1, 31), rng.randint(32, 2000)])
        return kind, f"{n}{suffix(n)}", ordinal_words(n)
    if kind == "DECIMAL":
        while True:
            spoken, written = amount(rng)
            if "." in written:
                return kind, written, spoken
    if kind == "MONEY":
        spoken, written = amount(rng)
        unit = rng.choice(sorted(CURRENCIES))
        return kind, CURRENCIES[unit] + written, f"{spoken} {unit}"
    if kind == "MEASURE":
        spoken, written = amount(rng)
        unit = rng.choice(sorted(UNITS))
        return kind, f"{written} {UNITS[unit]}", f"{spoken} {unit}"
    if kind == "DATE":
        month = rng.choice(MONTHS)
        day = rng.randint(1, 31)
        if rng.random() < 0.5:
            return kind, f"{month} {day}", f"{month} {ordinal_words(day)}"
        return kind, f"{day} {month}", f"the {ordinal_words(day)} of {month}"
    spoken = rng.choice(sorted(WHITELIST))
    return kind, WHITELIST[spoken], spoken


def main():
    rng = random.Random(20210411)
    lines = []
    for _ in range(200):
        for _ in range(rng.randint(1, 3)):
            for _ in range(rng.randint(0, 3)):
                lines.append(f"PLAIN\t{rng.choice(PLAIN)}\t<self>")
            lines.append("\t".join(token(rng)))
        lines.append(f"PLAIN\t{rng.choice(PLAIN)}\t<self>")
        lines.append("PUNCT\t.\tsil")
        lines.append("<eos>\t<eos>")
    out = Path(__file__).with_name("mini-corpus.tsv")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
