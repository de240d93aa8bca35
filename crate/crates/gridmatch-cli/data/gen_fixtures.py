#!/usr/bin/env python3
"""Regenerate the committed OEIS b-file fixtures.

Each fixture is produced from the published linear recurrence and initial
terms of its OEIS entry, so the suite can cross-check the registry offline.
`gridmatch oeis --refresh --id Axxxxxx` replaces a fixture with the upstream
b-file when network access is enabled; rerunning this script restores the
synthesized version.
"""

import pathlib

TERMS = 41

# id -> (offset of first term, initial terms, recurrence coefficients c_i
#        multiplying a(n - 1 - i)), matching each entry's OEIS definition.
SEQUENCES = {
    "A000045": (0, [0, 1], [1, 1]),
    "A000129": (0, [0, 1], [2, 1]),
    "A001333": (0, [1, 1], [2, 1]),
    "A003500": (0, [2, 4], [4, -1]),
    "A001835": (0, [1, 1], [4, -1]),
    "A001353": (0, [0, 1], [4, -1]),
    "A001075": (0, [1, 2], [4, -1]),
    "A101265": (1, [1, 2, 6], [5, -5, 1]),
    "A061278": (0, [0, 1, 5], [5, -5, 1]),
    "A006253": (0, [1, 2, 9], [3, 3, -1]),
    "A109437": (0, [0, 1, 3], [3, 3, -1]),
    "A004253": (1, [1, 4], [5, -1]),
    "A004254": (0, [0, 1], [5, -1]),
    "A003769": (1, [3, 16, 75], [4, 4, -1]),
    "A099025": (1, [1, 4, 20], [4, 4, -1]),
}


def extend(initial, coeffs, count):
    terms = list(initial)
    while len(terms) < count:
        terms.append(sum(c * terms[-1 - i] for i, c in enumerate(coeffs)))
    return terms


def main():
    here = pathlib.Path(__file__).parent
    for oeis_id, (offset, initial, coeffs) in sorted(SEQUENCES.items()):
        terms = extend(initial, coeffs, TERMS)
        lines = [f"{offset + i} {value}" for i, value in enumerate(terms)]
        path = here / f"b{oeis_id[1:]}.txt"
        path.write_text("\n".join(lines) + "\n")
        print(f"{path.name}: {TERMS} terms from {oeis_id} offset {offset}")


if __name__ == "__main__":
    main()
