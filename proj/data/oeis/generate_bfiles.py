#!/usr/bin/env python3
"""Regenerate the bundled b-file prefixes.

Each sequence is produced by a route independent of the C++ library so the
cross-check actually crosses implementations:

  b007814: 2-adic valuation via the isolated lowest set bit (n & -n).
  b096268: fixed point of the morphism 0 -> 01, 1 -> 00, grown by iteration.
  b005811: binary run count via the Gray code weight popcount(n XOR n>>1).

Index conventions follow the OEIS entries: A007814 starts at n=1, A096268 and
A005811 at n=0.
"""

import pathlib

HERE = pathlib.Path(__file__).resolve().parent
TERMS = 10000


def write(name: str, rows, comment: str) -> None:
    path = HERE / name
    lines = [f"# {comment}"] + [f"{i} {v}" for i, v in rows] + [""]
    path.write_text("\n".join(lines))
    print(f"wrote {path} ({len(lines) - 2} entries)")


def a007814(n: int) -> int:
    return (n & -n).bit_length() - 1


def a096268_terms(count: int):
    word = [0]
    while len(word) < count:
        word = [bit for x in word for bit in ((0, 1) if x == 0 else (0, 0))]
    return word[:count]


def a005811(n: int) -> int:
    return bin(n ^ (n >> 1)).count("1")


def main() -> None:
    write("b007814.txt", ((n, a007814(n)) for n in range(1, TERMS + 1)),
          "A007814: 2-adic valuation of n, n >= 1")
    write("b096268.txt", enumerate(a096268_terms(TERMS + 1)),
          "A096268: fixed point of 0->01, 1->00, n >= 0")
    write("b005811.txt", ((n, a005811(n)) for n in range(0, TERMS + 1)),
          "A005811: number of runs in binary expansion of n, n >= 0")


if __name__ == "__main__":
    main()
