"""Compare the three ways of counting tableaux with a bounded number of rows.

Run with:  python demos/counting.py
"""
from colored_motzkin.enumeration import count_motzkin_dp, count_syt_dp
from colored_motzkin.formulas import syt_count_formula

if __name__ == "__main__":
    print(" n   rows<=3 (walks, d=1)   rows<=5 (walks, d=2)   rows<=5 formula")
    for n in range(0, 21, 2):
        print(f"{n:>2}   {count_motzkin_dp(n, 1):>20}   {count_motzkin_dp(n, 2):>20}   "
              f"{syt_count_formula(n, 5):>15}")
    # the Young-lattice count agrees far beyond machine integers
    n = 60
    assert count_syt_dp(n, 4) == syt_count_formula(n, 4)
    print(f"tableaux with 60 cells and <= 4 rows: {count_syt_dp(n, 4)}")
