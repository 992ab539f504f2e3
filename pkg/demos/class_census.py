"""Tally paths by class and the largest letter of their images.

Bar paths land on tableaux with exactly 2d+1 rows, Hat paths on exactly 2d
rows, and the rest on fewer.  The walk counts with stand-still steps allowed
only on the floor reproduce the Lower + Hat total.

Run with:  python demos/class_census.py [n] [d]
"""
import sys
from collections import Counter

from colored_motzkin import PathClass, classify, phi
from colored_motzkin.enumeration import LevelPolicy, count_motzkin_dp, count_syt_dp, gen_motzkin


def main(n: int = 8, d: int = 2) -> None:
    tally: Counter = Counter()
    for p in gen_motzkin(n, d):
        tally[classify(p, d), max(phi(p, d), default=0)] += 1
    for (cls, top), k in sorted(tally.items(), key=lambda kv: (kv[0][0].value, kv[0][1])):
        print(f"{cls.value:>5}  max letter {top}  {k}")
    floor = sum(k for (cls, _), k in tally.items() if cls is not PathClass.BAR)
    print(f"lower+hat = {floor}, floor-only walks = {count_motzkin_dp(n, d, LevelPolicy.FLOOR_ONLY)}, "
          f"tableaux with <= {2 * d} rows = {count_syt_dp(n, 2 * d)}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:3]))
