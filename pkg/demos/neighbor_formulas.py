#!/usr/bin/env python3
"""Closed-form neighbors, checked live against a scan of the sequence.

Walks a difference-bounded sequence with the pair recurrence, queries
predecessors and successors by the modular-inverse construction, and shows
the direct anchor formulas for 1/2, 1/3, 2/3 in the doubly-bounded family.
"""

from fareysub import (
    SequenceKind,
    SequenceSpec,
    boolean_special_neighbors,
    enumerate_sequence,
    g_next_from_pair,
    g_predecessor,
    g_successor,
    g_unit_fraction_neighbors,
    member,
    parse_fraction,
    sequence_neighbors,
)

N, M = 12, 7


def main():
    spec = SequenceSpec(SequenceKind.GDIFF, N, M)
    seq = enumerate_sequence(spec)
    print(f"difference-bounded family, n={N}, m={M}: {len(seq)} fractions")
    print(" ".join(str(f) for f in seq))
    print()

    print("Every interior element, neighbors by closed form (no scanning):")
    for i in range(1, len(seq) - 1):
        x = seq[i]
        pred = g_predecessor(N, M, x)
        succ = g_successor(N, M, x)
        tag = "ok" if (pred, succ) == (seq[i - 1], seq[i + 1]) else "MISMATCH"
        print(f"  {str(pred):>5} < {str(x):^5} < {str(succ):<5} {tag}")
    print()

    print("Unit fractions 1/k have even simpler forms:")
    for k in range(2, N + 1):
        if member(spec, parse_fraction(f"1/{k}")):
            pred, succ = g_unit_fraction_neighbors(N, M, k)
            print(f"  neighbors of 1/{k}: {pred}, {succ}")
    print()

    print("Two consecutive terms determine the third (forward recurrence):")
    walk = [seq[0], seq[1]]
    while walk[-1] != seq[-1]:
        walk.append(g_next_from_pair(N, M, walk[-2], walk[-1]))
    print("  walked:", " ".join(str(f) for f in walk))
    print("  oracle:", " ".join(str(f) for f in seq))
    print()

    print("Anchor fractions in the doubly-bounded family (direct formulas):")
    for n, m in ((9, 7), (9, 2), (11, 4)):
        for text in ("1/2", "1/3", "2/3"):
            anchor = parse_fraction(text)
            if not member(SequenceSpec(SequenceKind.BOOLEAN, n, m), anchor):
                continue
            pred, succ = boolean_special_neighbors(n, m, anchor)
            print(f"  n={n:>2} m={m}: {pred} < {anchor} < {succ}")
    print()

    print("The dispatcher handles endpoints with one-sided results:")
    res = sequence_neighbors(SequenceSpec(SequenceKind.BOOLEAN, 9, 4), parse_fraction("0/1"))
    print(f"  0/1 -> predecessor {res.predecessor}, successor {res.successor}")
    res = sequence_neighbors(SequenceSpec(SequenceKind.BOOLEAN, 9, 4), parse_fraction("1/1"))
    print(f"  1/1 -> predecessor {res.predecessor}, successor {res.successor}")


if __name__ == "__main__":
    main()
