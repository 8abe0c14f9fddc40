#!/usr/bin/env python3
"""Tour of the six sequence families at a small order.

Prints the families side by side so the containments are visible, then
shows how the two halves of the doubly-bounded family split at 1/2.
"""

from fareysub import (
    SequenceKind,
    SequenceSpec,
    enumerate_sequence,
    generate_sequence,
    halfsequences,
    member,
    parse_fraction,
)

N, M = 6, 4


def show(label, fractions):
    print(f"{label:<14} {' '.join(str(f) for f in fractions)}")


def main():
    full = enumerate_sequence(SequenceSpec(SequenceKind.FULL, N))
    print(f"All reduced fractions of [0, 1] with denominator at most {N}:")
    show("full", full)
    print()

    print(f"Bounding the numerator by m={M}, the difference k-h by n-m={N - M}, or both:")
    for kind in (SequenceKind.FNUM, SequenceKind.GDIFF, SequenceKind.BOOLEAN):
        kept = set(enumerate_sequence(SequenceSpec(kind, N, M)))
        # Align against the full sequence to make the dropped elements obvious.
        padded = [str(f) if f in kept else " " * len(str(f)) for f in full]
        print(f"{kind.value:<14} {' '.join(padded)}")
    print()

    print("Membership is a pure predicate; no enumeration happens here:")
    for text in ("5/6", "1/4", "3/5"):
        f = parse_fraction(text)
        verdicts = ", ".join(
            f"{kind.value}={member(SequenceSpec(kind, N, M), f)}"
            for kind in (SequenceKind.FNUM, SequenceKind.GDIFF, SequenceKind.BOOLEAN)
        )
        print(f"  {f}: {verdicts}")
    print()

    left, right = halfsequences(N, M)
    print("The doubly-bounded family splits at 1/2 (both halves keep it):")
    show("left half", left)
    show("right half", right)
    print()

    print("The recurrence-based generators reproduce the brute-force listing:")
    for kind in SequenceKind:
        spec = SequenceSpec(kind, N, M if kind is not SequenceKind.FULL else None)
        fast = generate_sequence(spec)
        slow = enumerate_sequence(spec)
        print(f"  {kind.value:<11} {'match' if fast == slow else 'MISMATCH'} ({len(fast)} elements)")


if __name__ == "__main__":
    main()
