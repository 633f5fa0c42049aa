#!/usr/bin/env python3
"""Reproduce the classical word tables for the MacLane arrangement Q+.

The transcribed diagram has seven strands, eight actual crossings and
thirteen generating cycles; the published tables for it follow the
bottom-conjugate labeling convention.
"""

from arrpi import fixtures, load_wiring
from arrpi.arvola import LabelRule
from arrpi.inclusion import inclusion_data, unknotting_map
from arrpi.words import eps


def main() -> None:
    bwd = load_wiring(fixtures.path("maclane.wd.json"))
    data = inclusion_data(bwd, "framed", LabelRule.BOTTOM_CONJ)
    delta = unknotting_map(bwd)

    print("cycle   | unknotted position delta(e)")
    for pd in data.pairs:
        print(f"e{pd.pair}  | {delta.images[eps(*pd.pair)]}")

    print("\ncycle   | retraction mu")
    for pd in data.pairs:
        print(f"e{pd.pair}  | {pd.mu}")

    print("\ncycle   | image in the complement group")
    for pd in data.pairs:
        print(f"e{pd.pair}  | {pd.image}")


if __name__ == "__main__":
    main()
